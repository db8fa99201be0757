//! Closed-form answers for Nakayama algebras, read off the Kupisch series
//! alone. They share no code with the module machinery and serve as
//! independent checks of it.

use crate::algebra::KupischSeries;

/// `τ(e_i A / e_i J^k) = e_{i+1} A / e_{i+1} J^k` for `k < c_i`; the
/// projective case `k = c_i` gives the zero module (`None`).
pub fn nakayama_tau(series: &KupischSeries, i: usize, k: usize) -> Option<(usize, usize)> {
    let c = series.lengths();
    if k >= c[i] {
        return None;
    }
    let next = if series.is_cyclic() { (i + 1) % c.len() } else { i + 1 };
    Some((next, k))
}

/// A Nakayama algebra is selfinjective iff it is cyclic with constant Kupisch
/// series, or semisimple (the linear series `[1]`).
pub fn nakayama_is_selfinjective(series: &KupischSeries) -> bool {
    let c = series.lengths();
    if series.is_cyclic() {
        c.iter().all(|&x| x == c[0])
    } else {
        c == [1]
    }
}
