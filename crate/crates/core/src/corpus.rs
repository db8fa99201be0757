//! The test corpus: every valid Kupisch series up to a size bound, plus a few
//! bound quiver algebras that are not Nakayama.

use crate::algebra::{Algebra, KupischSeries, Orientation};
use crate::error::Result;
use crate::schema::{AlgebraFile, BuildOptions};

const BUILTIN: [(&str, &str); 3] = [
    ("A2-path", include_str!("../data/a2-path.json")),
    ("commutative-square", include_str!("../data/commutative-square.json")),
    ("gentle-2ig", include_str!("../data/gentle-2ig.json")),
];

/// The shipped non-Nakayama examples, as `(name, file)` pairs.
pub fn builtin_files() -> Vec<(String, AlgebraFile)> {
    BUILTIN
        .iter()
        .map(|(name, text)| (name.to_string(), AlgebraFile::parse(text).expect("built-in data parses")))
        .collect()
}

/// Every valid series with at most `max_n` vertices and entries at most
/// `max_c`; linear before cyclic for each `n`, cyclic series up to rotation.
pub fn kupisch_series(max_n: usize, max_c: usize) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for orientation in [Orientation::Linear, Orientation::Cyclic] {
            let mut cur = vec![1usize; n];
            loop {
                let minimal_rotation = orientation == Orientation::Linear || (1..n).all(|r| rotate(&cur, r) >= cur);
                if minimal_rotation {
                    if let Ok(k) = KupischSeries::new(cur.clone(), orientation) {
                        out.push(k);
                    }
                }
                if !odometer(&mut cur, max_c) {
                    break;
                }
            }
        }
    }
    out
}

fn rotate(v: &[usize], r: usize) -> Vec<usize> {
    v[r..].iter().chain(&v[..r]).copied().collect()
}

/// Next vector in lexicographic order with entries in `1..=max`.
fn odometer(v: &mut [usize], max: usize) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < max {
            v[i] += 1;
            return true;
        }
        v[i] = 1;
    }
    false
}

/// Kupisch files followed by the built-in examples.
pub fn corpus_files(max_n: usize, max_c: usize) -> Vec<(String, AlgebraFile)> {
    let mut out: Vec<(String, AlgebraFile)> =
        kupisch_series(max_n, max_c).iter().map(|k| (file_stem(k), AlgebraFile::from_kupisch(k))).collect();
    out.extend(builtin_files());
    out
}

/// File-name friendly name such as `L-2-2-2-1`.
pub fn file_stem(k: &KupischSeries) -> String {
    let tag = if k.is_cyclic() { "C" } else { "L" };
    let body: Vec<String> = k.lengths().iter().map(|c| c.to_string()).collect();
    format!("{tag}-{}", body.join("-"))
}

pub fn corpus_algebras(max_n: usize, max_c: usize, opts: BuildOptions) -> Result<Vec<Algebra>> {
    corpus_files(max_n, max_c).iter().map(|(_, f)| f.build(opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus() {
        let labels: Vec<String> = kupisch_series(2, 2).iter().map(|k| k.label()).collect();
        assert_eq!(labels, vec!["L[1]", "C[2]", "L[2,1]", "C[2,2]"]);
        let again: Vec<String> = kupisch_series(4, 5).iter().map(|k| k.label()).collect();
        assert_eq!(again, kupisch_series(4, 5).iter().map(|k| k.label()).collect::<Vec<_>>());
        assert!(again.contains(&"L[2,2,2,1]".to_string()));
        assert!(again.contains(&"C[3,3,4]".to_string()));
        assert!(!again.contains(&"C[3,4,3]".to_string()));
    }

    #[test]
    fn builtins_build() {
        let names: Vec<String> = builtin_files().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, vec!["A2-path", "commutative-square", "gentle-2ig"]);
        let dims: Vec<usize> =
            builtin_files().iter().map(|(_, f)| f.build(BuildOptions::default()).unwrap().dim()).collect();
        assert_eq!(dims, vec![3, 9, 8]);
    }
}
