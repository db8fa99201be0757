//! Everything behind the `taulab` binary except argument parsing: operation
//! chains, algebra summaries, tables, and exit codes.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homfun::{
    a_dual, ar_translate, ar_translate_inv, describe, dominant_dimension, dominant_dimension_algebra, ext_dims,
    is_gorenstein_projective, is_reflexive, is_selfinjective, is_tau_perfect, join_labels, minimal_faithful_proj_inj,
    nakayama_nu, nakayama_nu_inv, self_injective_dimensions, transpose, ClassReport, DominantDimension,
    ReflexiveMethod, Settings,
};
use crate::modrep::expr::{module_json, parse_module};
use crate::modrep::{cosyzygy, hom_dim, k_dual, syzygy, Rep};
use crate::verify::VerifyResult;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BOUND_EXCEEDED: u8 = 3;
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BoundExceeded(_) => exit::BOUND_EXCEEDED,
        _ => exit::USAGE,
    }
}

/// One step of a `compute` chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Tau,
    TauInv,
    Nu,
    NuInv,
    Omega(usize),
    Coomega(usize),
    Tr,
    Dual,
    Kdual,
    /// `ext i N`: dimension of `Ext^i(M, N)`, `N` a module expression.
    Ext(usize, String),
    Domdim,
    Reflexive,
    TauPerfect,
    Gp,
}

impl Step {
    fn is_terminal(&self) -> bool {
        matches!(self, Step::Ext(..) | Step::Domdim | Step::Reflexive | Step::TauPerfect | Step::Gp)
    }
}

/// Parses chains such as `omega 2 then nu` or `tr then ext 1 A`.
pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for part in text.split(" then ") {
        let words: Vec<&str> = part.split_whitespace().collect();
        let number = |w: Option<&&str>| -> Result<usize> {
            w.and_then(|s| s.parse().ok()).ok_or_else(|| Error::Parse(format!("{part:?} needs a number")))
        };
        let step = match words.first().copied() {
            Some("tau") => Step::Tau,
            Some("tau_inv") => Step::TauInv,
            Some("nu") => Step::Nu,
            Some("nu_inv") => Step::NuInv,
            Some("omega") => Step::Omega(number(words.get(1))?),
            Some("coomega") => Step::Coomega(number(words.get(1))?),
            Some("tr") => Step::Tr,
            Some("dual") => Step::Dual,
            Some("kdual") => Step::Kdual,
            Some("ext") if words.len() >= 3 => Step::Ext(number(words.get(1))?, words[2..].join(" ")),
            Some("domdim") => Step::Domdim,
            Some("reflexive") => Step::Reflexive,
            Some("tau_perfect") => Step::TauPerfect,
            Some("gp") => Step::Gp,
            _ => return Err(Error::Parse(format!("unknown operation {part:?}"))),
        };
        let fixed_arity = match step {
            Step::Omega(_) | Step::Coomega(_) => 2,
            Step::Ext(..) => words.len(),
            _ => 1,
        };
        if words.len() != fixed_arity {
            return Err(Error::Parse(format!("unexpected arguments in {part:?}")));
        }
        steps.push(step);
    }
    if let Some(k) = steps.iter().position(Step::is_terminal) {
        if k + 1 != steps.len() {
            return Err(Error::Parse("a predicate or dimension must end the chain".into()));
        }
    }
    Ok(steps)
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Module(Rep),
    Count(usize),
    Flag(bool),
    Dimension(DominantDimension),
}

pub fn run_steps(mut m: Rep, steps: &[Step], settings: Settings) -> Result<Outcome> {
    let (seed, bound) = (settings.seed, settings.bound);
    for step in steps {
        m = match step {
            Step::Tau => ar_translate(&m),
            Step::TauInv => ar_translate_inv(&m),
            Step::Nu => nakayama_nu(&m),
            Step::NuInv => nakayama_nu_inv(&m),
            Step::Omega(k) => syzygy(&m, *k),
            Step::Coomega(k) => cosyzygy(&m, *k),
            Step::Tr => transpose(&m),
            Step::Dual => a_dual(&m),
            Step::Kdual => k_dual(&m),
            Step::Ext(i, expr) => {
                let n = parse_module(m.algebra(), expr)?;
                let d = if *i == 0 { hom_dim(&m, &n)? } else { ext_dims(&m, &n, *i, bound)?[*i - 1] };
                return Ok(Outcome::Count(d));
            }
            Step::Domdim => return Ok(Outcome::Dimension(dominant_dimension(&m, bound, seed)?)),
            Step::Reflexive => return Ok(Outcome::Flag(is_reflexive(&m, ReflexiveMethod::Evaluation, seed)?)),
            Step::TauPerfect => return Ok(Outcome::Flag(is_tau_perfect(&m, seed)?)),
            Step::Gp => return Ok(Outcome::Flag(is_gorenstein_projective(&m, bound, seed)?)),
        };
    }
    Ok(Outcome::Module(m))
}

/// Whether summands of modules over `a` get `PJ` labels.
fn has_uniserial_labels(a: &Algebra) -> bool {
    a.kupisch().is_some() || (a.is_opposite_side() && a.opposite().kupisch().is_some())
}

/// Text rendering: the summand labels, followed by the explicit module when
/// the labels are only dimension vectors.
pub fn outcome_text(o: &Outcome, seed: u64) -> Result<String> {
    Ok(match o {
        Outcome::Module(m) => {
            let mut s = join_labels(&describe(m, seed)?);
            if !has_uniserial_labels(m.algebra()) && !m.is_zero() {
                write!(s, "\nmodule {}", module_json(m)).unwrap();
            }
            s
        }
        Outcome::Count(n) => n.to_string(),
        Outcome::Flag(b) => b.to_string(),
        Outcome::Dimension(d) => d.to_string(),
    })
}

pub fn outcome_json(o: &Outcome, seed: u64) -> Result<Value> {
    Ok(match o {
        Outcome::Module(m) => json!({
            "result": join_labels(&describe(m, seed)?),
            "summands": describe(m, seed)?,
            "side": if m.algebra().is_opposite_side() { "op" } else { "a" },
            "module": module_json(m),
        }),
        Outcome::Count(n) => json!({ "result": n }),
        Outcome::Flag(b) => json!({ "result": b }),
        Outcome::Dimension(d) => json!({ "result": d }),
    })
}

/// The numbers printed by `taulab info`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraInfo {
    pub label: String,
    pub field: u64,
    pub vertices: usize,
    pub dim: usize,
    pub kupisch: Option<Vec<usize>>,
    pub cyclic: Option<bool>,
    pub semisimple: bool,
    pub selfinjective: bool,
    pub injdim_right: Option<usize>,
    pub injdim_left: Option<usize>,
    pub gorenstein_degree: Option<usize>,
    pub dominant_dimension: DominantDimension,
    /// Vertices `j` whose injective `I_j` is projective; `fA` is the minimal
    /// faithful projective-injective module.
    pub faithful_projective_injective: Option<Vec<usize>>,
}

pub fn algebra_info(a: &Algebra, settings: Settings) -> Result<AlgebraInfo> {
    let dims = self_injective_dimensions(a, settings.bound, settings.seed)?;
    let f = match minimal_faithful_proj_inj(a) {
        Ok(f) => Some(f),
        Err(Error::NoFaithfulProjInj) => None,
        Err(e) => return Err(e),
    };
    Ok(AlgebraInfo {
        label: a.label().to_string(),
        field: a.field().p() as u64,
        vertices: a.vertex_count(),
        dim: a.dim(),
        kupisch: a.kupisch().map(|k| k.lengths().to_vec()),
        cyclic: a.kupisch().map(|k| k.is_cyclic()),
        semisimple: a.is_semisimple(),
        selfinjective: is_selfinjective(a),
        injdim_right: dims.right,
        injdim_left: dims.left,
        gorenstein_degree: dims.gorenstein_degree(),
        dominant_dimension: dominant_dimension_algebra(a, settings.bound, settings.seed)?,
        faithful_projective_injective: f,
    })
}

fn set_text(v: &[usize]) -> String {
    format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn optional(v: Option<usize>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

impl AlgebraInfo {
    pub fn text(&self) -> String {
        let status = if self.semisimple {
            "semisimple, selfinjective".to_string()
        } else if self.selfinjective {
            "selfinjective".to_string()
        } else if let Some(n) = self.gorenstein_degree {
            format!("{n}-Iwanaga-Gorenstein")
        } else {
            "not Iwanaga-Gorenstein".to_string()
        };
        let f = self.faithful_projective_injective.as_deref().map_or_else(|| "none".to_string(), set_text);
        let mut s = String::new();
        writeln!(s, "{} over F_{}", self.label, self.field).unwrap();
        writeln!(s, "dim {}, {status}", self.dim).unwrap();
        writeln!(s, "dim {}, dominant dimension {}, f = {f}", self.dim, self.dominant_dimension).unwrap();
        writeln!(s, "vertices {}", self.vertices).unwrap();
        if let (Some(k), Some(c)) = (&self.kupisch, self.cyclic) {
            writeln!(s, "kupisch {k:?} {}", if c { "cyclic" } else { "linear" }).unwrap();
        }
        write!(
            s,
            "injdim A_A {}, injdim of the left regular module {}",
            optional(self.injdim_right),
            optional(self.injdim_left)
        )
        .unwrap();
        s
    }
}

fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn maybe(b: Option<bool>) -> String {
    b.map_or_else(|| "-".to_string(), flag)
}

/// Aligned text table with one row per report.
pub fn class_table(reports: &[ClassReport]) -> String {
    let header = [
        "module",
        "dims",
        "proj",
        "inj",
        "ext1",
        "ext2",
        "tr_refl",
        "tau_perf",
        "tau_inv_perf",
        "refl",
        "torsionless",
        "domdim",
        "gp",
    ];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in reports {
        rows.push(vec![
            r.label.clone(),
            format!("{:?}", r.dims).replace(' ', ""),
            flag(r.projective),
            flag(r.injective),
            r.ext1_a.to_string(),
            r.ext2_a.to_string(),
            flag(r.tr_reflexive),
            maybe(r.tau_perfect),
            maybe(r.tau_inv_perfect),
            flag(r.reflexive),
            flag(r.torsionless),
            r.dominant_dim.to_string(),
            maybe(r.gorenstein_projective),
        ]);
    }
    let widths: Vec<usize> =
        (0..header.len()).map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        writeln!(s, "{}", cells.join("  ").trim_end()).unwrap();
    }
    s
}

pub fn verify_text(results: &[VerifyResult]) -> String {
    let mut s = String::new();
    for r in results {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        writeln!(s, "{} {}: {verdict}, {} modules checked", r.suite, r.algebra, r.checked).unwrap();
        for f in &r.failures {
            writeln!(s, "    {}: expected {}, got {}", f.module, f.expected, f.got).unwrap();
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    write!(s, "{} algebras, {failed} failing", results.len()).unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{KupischSeries, Orientation};
    use crate::field::Fp;

    fn nakayama(series: &[usize], o: Orientation) -> Algebra {
        KupischSeries::new(series.to_vec(), o).unwrap().algebra(Fp::default()).unwrap()
    }

    fn compute(a: &Algebra, ops: &str, expr: &str) -> String {
        let m = parse_module(a, expr).unwrap();
        outcome_text(&run_steps(m, &parse_steps(ops).unwrap(), Settings::default()).unwrap(), 0).unwrap()
    }

    #[test]
    fn step_parsing() {
        assert_eq!(parse_steps("omega 2 then nu").unwrap(), vec![Step::Omega(2), Step::Nu]);
        assert_eq!(parse_steps("ext 1 P(0) + S(1)").unwrap(), vec![Step::Ext(1, "P(0) + S(1)".into())]);
        for bad in ["omega", "tau 3", "twist", "reflexive then tau", "ext 1"] {
            assert!(matches!(parse_steps(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn chains_on_the_worked_example() {
        let a = nakayama(&[2, 2, 2, 1], Orientation::Linear);
        assert_eq!(compute(&a, "tau", "S(0)"), "PJ(1,1)");
        assert_eq!(compute(&a, "omega 2 then nu", "S(0)"), "PJ(1,1)");
        assert_eq!(compute(&a, "nu then omega 2", "S(0)"), "0");
        assert_eq!(compute(&a, "kdual", "S(0)"), "D(PJ(0,1))");
        assert_eq!(compute(&a, "tau_perfect", "PJ(0,1)"), "true");
        assert_eq!(compute(&a, "domdim", "A"), "3");
        assert_eq!(compute(&a, "ext 1 A", "S(0)"), "0");
        assert_eq!(compute(&a, "ext 1 S(1)", "S(0)"), "1");
        assert_eq!(compute(&a, "ext 0 P(0)", "P(0)"), "1");
    }

    #[test]
    fn info_lines() {
        let a = nakayama(&[2, 2, 2, 1], Orientation::Linear);
        let t = algebra_info(&a, Settings::default()).unwrap().text();
        assert!(t.contains("dim 7, dominant dimension 3, f = {1,2,3}"), "{t}");
        let b = nakayama(&[3, 3, 4], Orientation::Cyclic);
        assert!(algebra_info(&b, Settings::default()).unwrap().text().contains("dim 10, 2-Iwanaga-Gorenstein"));
        let c = nakayama(&[1], Orientation::Linear);
        assert!(algebra_info(&c, Settings::default()).unwrap().text().contains("semisimple, selfinjective"));
    }
}
