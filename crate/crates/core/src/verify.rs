//! Verification suites: each checks one theorem of the theory on every
//! indecomposable module (and, for reflexivity, random direct sums) of an
//! algebra, collecting counterexamples instead of stopping at the first.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homfun::{
    a_dual, ar_translate, ar_translate_inv, describe, dominant_dimension, dominant_dimension_algebra, ext12_vanish,
    gorenstein_degree_or_none, gorenstein_projective_given_degree, indecomposables, is_reflexive, is_selfinjective,
    join_labels, minimal_faithful_proj_inj, transpose, Corner, ReflexiveMethod, Settings,
};
use crate::homfun::{tau_inv_perfect_unchecked, tau_perfect_unchecked};
use crate::modrep::{
    decompose, hom_dim, is_injective, is_isomorphic, is_projective, k_dual, simple_module, strip_projectives, syzygy,
    Labeled, Rep,
};
use crate::oracle::{nakayama_is_selfinjective, nakayama_tau};

/// Random direct sums added per algebra by [`Suite::ReflexiveEquivalences`].
pub const RANDOM_SUMS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    MainTheorem,
    DualTheorem,
    ReflexiveEquivalences,
    Trtr,
    LemmaDualSyzygy,
    PerTauBijection,
    SelfinjectiveCriterion,
    GpEqualsTauPerfect,
    DomdimReflexive,
    NakayamaOracle,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::MainTheorem,
        Suite::DualTheorem,
        Suite::ReflexiveEquivalences,
        Suite::Trtr,
        Suite::LemmaDualSyzygy,
        Suite::PerTauBijection,
        Suite::SelfinjectiveCriterion,
        Suite::GpEqualsTauPerfect,
        Suite::DomdimReflexive,
        Suite::NakayamaOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::DualTheorem => "dual-theorem",
            Suite::ReflexiveEquivalences => "reflexive-equivalences",
            Suite::Trtr => "trtr",
            Suite::LemmaDualSyzygy => "lemma-dual-syzygy",
            Suite::PerTauBijection => "per-tau-bijection",
            Suite::SelfinjectiveCriterion => "selfinjective-criterion",
            Suite::GpEqualsTauPerfect => "gp-equals-tau-perfect",
            Suite::DomdimReflexive => "domdim-reflexive",
            Suite::NakayamaOracle => "nakayama-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub module: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyResult {
    pub suite: String,
    pub algebra: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerifyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Run {
    settings: Settings,
    modules: Vec<Labeled>,
    checked: usize,
    failures: Vec<Failure>,
}

impl Run {
    fn check(&mut self, module: &str, ok: bool, expected: impl Into<String>, got: impl Into<String>) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure { module: module.to_string(), expected: expected.into(), got: got.into() });
        }
    }

    fn iso(&self, m: &Rep, n: &Rep) -> Result<bool> {
        is_isomorphic(m, n, self.settings.seed)
    }

    fn non_projective(&self) -> Vec<Labeled> {
        self.modules.iter().filter(|x| !is_projective(&x.module)).cloned().collect()
    }

    fn non_injective(&self) -> Vec<Labeled> {
        self.modules.iter().filter(|x| !is_injective(&x.module)).cloned().collect()
    }
}

pub fn run_suite(suite: Suite, a: &Algebra, settings: Settings) -> Result<VerifyResult> {
    let mut run = Run { settings, modules: indecomposables(a, settings.seed)?, checked: 0, failures: Vec::new() };
    match suite {
        Suite::MainTheorem => main_theorem(&mut run)?,
        Suite::DualTheorem => dual_theorem(&mut run)?,
        Suite::ReflexiveEquivalences => reflexive_equivalences(&mut run, a)?,
        Suite::Trtr => trtr(&mut run)?,
        Suite::LemmaDualSyzygy => lemma_dual_syzygy(&mut run)?,
        Suite::PerTauBijection => per_tau_bijection(&mut run)?,
        Suite::SelfinjectiveCriterion => selfinjective_criterion(&mut run, a)?,
        Suite::GpEqualsTauPerfect => gp_equals_tau_perfect(&mut run, a)?,
        Suite::DomdimReflexive => domdim_reflexive(&mut run, a)?,
        Suite::NakayamaOracle => nakayama_oracle(&mut run, a)?,
    }
    Ok(VerifyResult {
        suite: suite.name().to_string(),
        algebra: a.label().to_string(),
        checked: run.checked,
        failures: run.failures,
    })
}

/// Runs a suite on many algebras in parallel; results sorted by algebra label.
pub fn run_suite_on_all(suite: Suite, algebras: &[Algebra], settings: Settings) -> Result<Vec<VerifyResult>> {
    let mut out: Vec<VerifyResult> =
        algebras.par_iter().map(|a| run_suite(suite, a, settings)).collect::<Result<_>>()?;
    out.sort_by(|x, y| x.algebra.cmp(&y.algebra));
    Ok(out)
}

fn flags(names: &[&str], values: &[bool]) -> String {
    names.iter().zip(values).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(" ")
}

/// `Ext¹(X,A) = Ext²(X,A) = 0` ⟺ `Tr X` reflexive ⟺ `X` τ-perfect.
fn main_theorem(run: &mut Run) -> Result<()> {
    for x in run.non_projective() {
        let m = &x.module;
        let v = [
            ext12_vanish(m)?,
            is_reflexive(&transpose(m), ReflexiveMethod::Evaluation, run.settings.seed)?,
            tau_perfect_unchecked(m, run.settings.seed)?,
        ];
        let ok = v[0] == v[1] && v[1] == v[2];
        run.check(&x.label, ok, "all equal", flags(&["ext_vanish", "tr_reflexive", "tau_perfect"], &v));
    }
    Ok(())
}

/// The dual statement, computed over the opposite algebra, plus
/// `X` τ⁻¹-perfect ⟺ `D X` τ-perfect.
fn dual_theorem(run: &mut Run) -> Result<()> {
    let seed = run.settings.seed;
    for x in run.non_injective() {
        let dx = k_dual(&x.module);
        let v = [
            ext12_vanish(&dx)?,
            is_reflexive(&transpose(&dx), ReflexiveMethod::Evaluation, seed)?,
            tau_inv_perfect_unchecked(&x.module, seed)?,
            tau_perfect_unchecked(&dx, seed)?,
        ];
        let ok = v.iter().all(|&b| b == v[0]);
        run.check(
            &x.label,
            ok,
            "all equal",
            flags(&["ext_vanish", "tr_d_reflexive", "tau_inv_perfect", "dual_tau_perfect"], &v),
        );
    }
    Ok(())
}

/// The three reflexivity tests agree, on indecomposables and random sums.
fn reflexive_equivalences(run: &mut Run, a: &Algebra) -> Result<()> {
    let mut modules = run.modules.clone();
    if !modules.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(run.settings.seed);
        for _ in 0..RANDOM_SUMS {
            let count = rng.gen_range(2..=3);
            let picks: Vec<usize> = (0..count).map(|_| rng.gen_range(0..run.modules.len())).collect();
            let parts: Vec<&Rep> = picks.iter().map(|&i| &run.modules[i].module).collect();
            let label = picks.iter().map(|&i| run.modules[i].label.as_str()).collect::<Vec<_>>().join("⊕");
            modules.push(Labeled { label, module: Rep::direct_sum_all(a, parts)? });
        }
    }
    let seed = run.settings.seed;
    let results: Vec<(String, Vec<bool>)> = modules
        .par_iter()
        .map(|x| {
            let v = ReflexiveMethod::ALL
                .iter()
                .map(|&method| is_reflexive(&x.module, method, seed))
                .collect::<Result<Vec<bool>>>()?;
            Ok((x.label.clone(), v))
        })
        .collect::<Result<_>>()?;
    for (label, v) in results {
        let ok = v[0] == v[1] && v[1] == v[2];
        run.check(&label, ok, "all equal", flags(&["evaluation", "double_dual_iso", "ext_of_transpose"], &v));
    }
    Ok(())
}

/// `Tr Tr X ≅ X` after removing projective summands.
fn trtr(run: &mut Run) -> Result<()> {
    for x in run.non_projective() {
        let back = strip_projectives(&transpose(&transpose(&x.module)), run.settings.seed)?;
        let ok = run.iso(&back, &x.module)?;
        run.check(&x.label, ok, "TrTr X ≅ X", format!("dims {:?}", back.dims()));
    }
    Ok(())
}

/// `X* ≅ Ω² Tr X`, and `X` reflexive ⟺ `Ω² Tr Ω² Tr X ≅ X`.
fn lemma_dual_syzygy(run: &mut Run) -> Result<()> {
    let seed = run.settings.seed;
    for x in run.non_projective() {
        let m = &x.module;
        let star = a_dual(m);
        let omega_tr = syzygy(&transpose(m), 2);
        let ok = run.iso(&star, &omega_tr)?;
        run.check(&x.label, ok, "X* ≅ Ω²Tr X", format!("dims {:?} vs {:?}", star.dims(), omega_tr.dims()));

        let twice = syzygy(&transpose(&omega_tr), 2);
        let matches = run.iso(&twice, m)?;
        let reflexive = is_reflexive(m, ReflexiveMethod::Evaluation, seed)?;
        run.check(&x.label, matches == reflexive, format!("Ω²TrΩ²Tr X ≅ X is {reflexive}"), format!("{matches}"));
    }
    Ok(())
}

/// τ is a bijection from τ-perfect classes onto coreflexive non-injective
/// classes, inverted by τ⁻¹.
fn per_tau_bijection(run: &mut Run) -> Result<()> {
    let seed = run.settings.seed;
    let mut perfect = Vec::new();
    for x in run.non_projective() {
        if tau_perfect_unchecked(&x.module, seed)? {
            perfect.push(x);
        }
    }
    let mut coreflexive = Vec::new();
    for y in run.non_injective() {
        if is_reflexive(&k_dual(&y.module), ReflexiveMethod::Evaluation, seed)? {
            coreflexive.push(y);
        }
    }
    let mut hit = vec![false; coreflexive.len()];
    for x in &perfect {
        let t = ar_translate(&x.module);
        let pieces = decompose(&t, seed)?.len();
        let mut target = None;
        for (j, y) in coreflexive.iter().enumerate() {
            if run.iso(&t, &y.module)? {
                target = Some(j);
            }
        }
        let back = ar_translate_inv(&t);
        let inverse = run.iso(&back, &x.module)?;
        let fresh = target.is_some_and(|j| !hit[j]);
        if let Some(j) = target {
            hit[j] = true;
        }
        let got = match target {
            Some(j) => format!("τX = {}, τ⁻¹τX ≅ X is {inverse}", coreflexive[j].label),
            None => format!("τX has {pieces} summands and is not a listed coreflexive module"),
        };
        run.check(&x.label, pieces == 1 && fresh && inverse, "τX coreflexive, new class, τ⁻¹τX ≅ X", got);
    }
    for (j, y) in coreflexive.iter().enumerate() {
        let pre = ar_translate_inv(&y.module);
        let perfect_pre = !pre.is_zero() && decompose(&pre, seed)?.len() == 1 && tau_perfect_unchecked(&pre, seed)?;
        run.check(
            &y.label,
            hit[j] && perfect_pre,
            "hit by τ, τ⁻¹Y τ-perfect",
            format!("hit={} tau_perfect={perfect_pre}", hit[j]),
        );
    }
    Ok(())
}

/// Selfinjective ⟺ every non-projective simple is τ-perfect; for Nakayama
/// algebras also against the closed form.
fn selfinjective_criterion(run: &mut Run, a: &Algebra) -> Result<()> {
    let seed = run.settings.seed;
    let selfinjective = is_selfinjective(a);
    let mut all_perfect = true;
    let mut detail = Vec::new();
    for i in 0..a.vertex_count() {
        let s = simple_module(a, i)?;
        if !is_projective(&s) && !tau_perfect_unchecked(&s, seed)? {
            all_perfect = false;
            detail.push(format!("S({i})"));
        }
    }
    let got = if all_perfect {
        "all simples τ-perfect".to_string()
    } else {
        format!("not τ-perfect: {}", detail.join(","))
    };
    run.check(a.label(), selfinjective == all_perfect, format!("selfinjective={selfinjective}"), got);
    if let Some(k) = a.kupisch() {
        let oracle = nakayama_is_selfinjective(k);
        run.check(
            a.label(),
            selfinjective == oracle,
            format!("closed form {oracle}"),
            format!("computed {selfinjective}"),
        );
    }
    Ok(())
}

/// Over an algebra that is `n`-Iwanaga-Gorenstein with `n ≤ 2`: Gorenstein
/// projective ⟺ τ-perfect.
fn gp_equals_tau_perfect(run: &mut Run, a: &Algebra) -> Result<()> {
    let Some(n) = gorenstein_degree_or_none(a, run.settings)? else {
        return Ok(());
    };
    if n > 2 {
        return Ok(());
    }
    for x in run.non_projective() {
        let gp = gorenstein_projective_given_degree(&x.module, n)?;
        let tp = tau_perfect_unchecked(&x.module, run.settings.seed)?;
        run.check(&x.label, gp == tp, format!("gp={gp}"), format!("tau_perfect={tp}"));
    }
    Ok(())
}

/// With dominant dimension at least two: reflexive ⟺ domdim ≥ 2, and
/// restriction to `fAf` preserves Hom between reflexive modules.
fn domdim_reflexive(run: &mut Run, a: &Algebra) -> Result<()> {
    let s = run.settings;
    if !dominant_dimension_algebra(a, s.bound, s.seed)?.at_least(2) {
        return Ok(());
    }
    let corner = Corner::new(a, &minimal_faithful_proj_inj(a)?)?;
    let mut reflexive = Vec::new();
    for x in run.modules.clone() {
        let r = is_reflexive(&x.module, ReflexiveMethod::Evaluation, s.seed)?;
        let d = dominant_dimension(&x.module, s.bound, s.seed)?;
        run.check(&x.label, r == d.at_least(2), format!("reflexive={r}"), format!("domdim={d}"));
        if r {
            reflexive.push((x.label.clone(), x.module.clone(), corner.restrict(&x.module)?));
        }
    }
    for (lm, m, mf) in &reflexive {
        for (ln, n, nf) in &reflexive {
            let (big, small) = (hom_dim(m, n)?, hom_dim(mf, nf)?);
            run.check(&format!("Hom({lm},{ln})"), big == small, format!("{big}"), format!("{small} over fAf"));
        }
    }
    Ok(())
}

/// τ of every uniserial module against the closed form.
fn nakayama_oracle(run: &mut Run, a: &Algebra) -> Result<()> {
    let Some(k) = a.kupisch().cloned() else {
        return Ok(());
    };
    let seed = run.settings.seed;
    for i in 0..k.vertex_count() {
        for len in 1..=k.lengths()[i] {
            let m = crate::modrep::uniserial_module(a, i, len)?;
            let got = join_labels(&describe(&ar_translate(&m), seed)?);
            let expected = match nakayama_tau(&k, i, len) {
                Some((j, l)) => format!("PJ({j},{l})"),
                None => "0".to_string(),
            };
            run.check(&format!("PJ({i},{len})"), got == expected, expected.clone(), got);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{KupischSeries, Orientation};
    use crate::field::Fp;

    fn nakayama(series: &[usize], o: Orientation) -> Algebra {
        KupischSeries::new(series.to_vec(), o).unwrap().algebra(Fp::default()).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Parse(_))));
    }

    #[test]
    fn counted_examples() {
        let a = nakayama(&[2, 2, 2, 1], Orientation::Linear);
        let r = run_suite(Suite::MainTheorem, &a, Settings::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 3);
        let b = nakayama(&[3, 3, 4], Orientation::Cyclic);
        let r = run_suite(Suite::GpEqualsTauPerfect, &b, Settings::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 7);
    }

    #[test]
    fn every_suite_passes_on_small_algebras() {
        let algebras = vec![
            nakayama(&[2, 2, 2, 1], Orientation::Linear),
            nakayama(&[2, 2], Orientation::Cyclic),
            nakayama(&[3, 4], Orientation::Cyclic),
        ];
        for suite in Suite::ALL {
            for r in run_suite_on_all(suite, &algebras, Settings::default()).unwrap() {
                assert!(r.passed(), "{suite} on {}: {:?}", r.algebra, r.failures);
            }
        }
    }

    #[test]
    fn corner_must_use_projective_injective_injectives() {
        // Restricting to the vertices of projective-injective indecomposable
        // projectives instead loses Hom dimensions between reflexive modules.
        let a = nakayama(&[2, 2, 2, 1], Orientation::Linear);
        let wrong = Corner::new(&a, &crate::homfun::projective_injective_vertices(&a)).unwrap();
        let right = Corner::new(&a, &minimal_faithful_proj_inj(&a).unwrap()).unwrap();
        let mut lost = 0;
        let mods = indecomposables(&a, 0).unwrap();
        for m in &mods {
            for n in &mods {
                if !is_reflexive(&m.module, ReflexiveMethod::Evaluation, 0).unwrap()
                    || !is_reflexive(&n.module, ReflexiveMethod::Evaluation, 0).unwrap()
                {
                    continue;
                }
                let h = hom_dim(&m.module, &n.module).unwrap();
                let restrict = |c: &Corner, x: &Rep| c.restrict(x).unwrap();
                assert_eq!(h, hom_dim(&restrict(&right, &m.module), &restrict(&right, &n.module)).unwrap());
                if h != hom_dim(&restrict(&wrong, &m.module), &restrict(&wrong, &n.module)).unwrap() {
                    lost += 1;
                }
            }
        }
        assert!(lost > 0);
    }
}
