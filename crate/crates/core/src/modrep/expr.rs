//! Module expressions: `S(i)`, `P(i)`, `I(i)`, `PJ(i,k)`, `A`, `D(A)`, `0`,
//! direct sums joined by `+` or `⊕`, and explicit modules written as JSON
//! objects `{"dims": [..], "arrows": {"a0": [[..], ..], ..}}`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use super::standard::{injective_module, projective_module, simple_module, uniserial_module};
use super::{regular_module, Rep};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::mat::Mat;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitModule {
    dims: Vec<usize>,
    #[serde(default)]
    arrows: BTreeMap<String, Vec<Vec<i64>>>,
}

/// The explicit JSON form accepted by [`parse_module`].
pub fn module_json(m: &Rep) -> Value {
    let arrows: BTreeMap<&str, Vec<Vec<u32>>> = m
        .algebra()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, ar)| {
            let a = m.action(k);
            (ar.name.as_str(), (0..a.rows()).map(|r| a.row(r).to_vec()).collect())
        })
        .collect();
    json!({ "dims": m.dims(), "arrows": arrows })
}

/// Parse a module expression over `a`.
pub fn parse_module(a: &Algebra, expr: &str) -> Result<Rep> {
    let expr = expr.trim();
    if expr.starts_with('{') {
        return parse_explicit(a, expr);
    }
    let mut parts = Vec::new();
    for term in expr.split(['+', '⊕']) {
        parts.push(parse_term(a, term.trim())?);
    }
    Rep::direct_sum_all(a, parts.iter())
}

fn parse_term(a: &Algebra, t: &str) -> Result<Rep> {
    let bad = || Error::Parse(format!("unrecognised module term {t:?}"));
    match t {
        "0" => return Ok(Rep::zero(a)),
        "A" => return Ok(regular_module(a)),
        "D(A)" => {
            let parts: Vec<Rep> = (0..a.vertex_count()).map(|i| injective_module(a, i)).collect::<Result<_>>()?;
            return Rep::direct_sum_all(a, parts.iter());
        }
        _ => {}
    }
    let open = t.find('(').ok_or_else(bad)?;
    let inner = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let args: Vec<usize> =
        inner.split(',').map(|s| s.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<_>>()?;
    match (&t[..open], args.as_slice()) {
        ("S", &[i]) => simple_module(a, i),
        ("P", &[i]) => projective_module(a, i),
        ("I", &[i]) => injective_module(a, i),
        ("PJ", &[i, k]) => uniserial_module(a, i, k),
        _ => Err(bad()),
    }
}

fn parse_explicit(a: &Algebra, text: &str) -> Result<Rep> {
    let given: ExplicitModule = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if given.dims.len() != a.vertex_count() {
        return Err(Error::InvalidShape(format!("{} dims for {} vertices", given.dims.len(), a.vertex_count())));
    }
    let f = a.field();
    for name in given.arrows.keys() {
        if !a.arrows().iter().any(|ar| &ar.name == name) {
            return Err(Error::Parse(format!("unknown arrow {name:?}")));
        }
    }
    let action = a
        .arrows()
        .iter()
        .map(|ar| {
            let (r, c) = (given.dims[ar.target], given.dims[ar.source]);
            match given.arrows.get(&ar.name) {
                None => Ok(Mat::zeros(f, r, c)),
                Some(rows) if r == 0 || c == 0 => {
                    if rows.iter().any(|row| !row.is_empty()) {
                        return Err(Error::InvalidShape(format!("arrow {} must be {r}x{c}", ar.name)));
                    }
                    Ok(Mat::zeros(f, r, c))
                }
                Some(rows) => {
                    let m = Mat::from_rows(f, rows)?;
                    if m.rows() != r || m.cols() != c {
                        return Err(Error::InvalidShape(format!("arrow {} must be {r}x{c}", ar.name)));
                    }
                    Ok(m)
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Rep::new(a, given.dims, action)
}
