//! Minimal bond dimension search.
//!
//! For a candidate `d`, the trace equations `Tr(Â_{i_1}⋯Â_{i_n}) = c_I` in
//! the `2d²` unknown matrix entries are solvable over `C` exactly when their
//! reduced Gröbner basis is not `{1}`. [`min_bond_dimension`] runs this test
//! for `d = 1, 2, …` and stops at the first feasible `d`.
//!
//! When the full system exhausts the budget, [`feasible_at`] falls back to
//! restricted systems in which one matrix is pinned to a nilpotent Jordan
//! normal form and the other stays free. Every solution of a restricted
//! system solves the full one, so a restricted basis other than `{1}`
//! proves feasibility. A restricted basis equal to `{1}` proves nothing and
//! the verdict stays budget-exceeded.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mps::{Matrix, MpsRep, PowerCache};
use crate::polynomials::{
    buchberger_with_stats, contains_one, GroebnerConfig, GroebnerStats, MonomialOrder,
    MultiPoly,
};
use crate::states::{enumerate_necklaces_capped, TIState, DEFAULT_NECKLACE_CAP};

/// The polynomial system for one candidate bond dimension.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    pub state: TIState,
    pub d: usize,
    pub gauge_fix: bool,
    /// Names of the unknowns, in variable-index order.
    pub var_names: Vec<String>,
    pub polys: Vec<MultiPoly>,
}

/// Options shared by [`feasible_at`] and [`min_bond_dimension`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinDimOptions {
    /// Restrict `A_1` to upper-triangular form.
    pub gauge_fix: bool,
    pub groebner: GroebnerConfig,
    pub necklace_cap: usize,
    /// Keep the reduced basis in each [`DimResult`].
    pub keep_basis: bool,
    /// Try restricted systems after the full system runs out of budget.
    pub restricted_fallback: bool,
}

impl Default for MinDimOptions {
    fn default() -> Self {
        MinDimOptions {
            gauge_fix: false,
            groebner: GroebnerConfig::default(),
            necklace_cap: DEFAULT_NECKLACE_CAP,
            keep_basis: false,
            restricted_fallback: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Infeasible,
    Feasible,
    BudgetExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Infeasible => "infeasible",
            Verdict::Feasible => "feasible",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

/// Which system produced a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Certificate {
    /// The full system in all `2d²` (or gauge-fixed) unknowns.
    Full,
    /// `A_{matrix}` fixed to the nilpotent Jordan form with the given block
    /// sizes, the other matrix free.
    NilpotentJordan { matrix: u8, blocks: Vec<usize> },
}

/// Outcome at one bond dimension.
#[derive(Clone, Debug, Serialize)]
pub struct DimResult {
    pub d: usize,
    pub verdict: Verdict,
    /// System behind the verdict; absent when nothing was conclusive.
    pub certificate: Option<Certificate>,
    pub equations: usize,
    pub variables: usize,
    pub seconds: f64,
    /// Engine statistics; absent when the budget ran out.
    pub stats: Option<GroebnerStats>,
    /// Reduced basis in the text format, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinDimReport {
    pub n: usize,
    pub per_d: Vec<DimResult>,
    pub resolved: Option<usize>,
    pub bound_used: usize,
    pub gauge_fix: bool,
    pub order: MonomialOrder,
    pub budget: Option<u64>,
}

impl MinDimReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn var_names(d: usize, gauge_fix: bool) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for s in 0..2 {
        for i in 0..d {
            for j in 0..d {
                if !(gauge_fix && s == 1 && i > j) {
                    v.push((s, i, j));
                }
            }
        }
    }
    v
}

/// One polynomial `Tr(Â_{i_1}⋯Â_{i_n}) − c_I` per necklace class. Variables
/// are named `a{s}_{i}{j}` with one-based indices (separated by commas when
/// `d ≥ 10`).
pub fn build_system(state: &TIState, d: usize, gauge_fix: bool) -> Result<SystemSpec> {
    build_system_capped(state, d, gauge_fix, DEFAULT_NECKLACE_CAP)
}

pub fn build_system_capped(state: &TIState, d: usize, gauge_fix: bool, cap: usize) -> Result<SystemSpec> {
    if d == 0 {
        return Err(Error::InvalidArgument("bond dimension must be at least 1".into()));
    }
    let vars = var_names(d, gauge_fix);
    let arity = vars.len();
    let mut mats = [Matrix::from_fn(d, |_, _| MultiPoly::zero(arity)), Matrix::from_fn(d, |_, _| MultiPoly::zero(arity))];
    for (idx, &(s, i, j)) in vars.iter().enumerate() {
        mats[s].set(i, j, MultiPoly::var(arity, idx));
    }
    let [a0, a1] = mats;
    let polys = trace_equations(state, &MpsRep::new(a0, a1)?, cap)?;
    let sep = if d >= 10 { "," } else { "" };
    let var_names = vars.iter().map(|&(s, i, j)| format!("a{s}_{}{sep}{}", i + 1, j + 1)).collect();
    Ok(SystemSpec { state: state.clone(), d, gauge_fix, var_names, polys })
}

/// `Tr(Â_{i_1}⋯Â_{i_n}) − c_I` for every class, for matrices whose entries
/// are arbitrary polynomials of a common arity.
pub fn trace_equations(state: &TIState, rep: &MpsRep<MultiPoly>, cap: usize) -> Result<Vec<MultiPoly>> {
    let arity = rep.a0().get(0, 0).arity();
    let mut cache = PowerCache::new(rep);
    let mut polys = Vec::new();
    for k in enumerate_necklaces_capped(state.n(), cap)? {
        let c = MultiPoly::constant(arity, state.coefficient(&k));
        polys.push(cache.trace(&k).sub(&c)?);
    }
    Ok(polys)
}

impl SystemSpec {
    /// Distinct nonzero polynomials, for callers that want to skip
    /// trivially satisfied classes.
    pub fn nonzero_polys(&self) -> Vec<MultiPoly> {
        self.polys.iter().filter(|p| !p.is_zero()).cloned().collect()
    }
}

/// Verdict at one bond dimension, with timing and engine statistics.
pub fn feasible_at_detailed(state: &TIState, d: usize, opts: &MinDimOptions) -> Result<DimResult> {
    let start = Instant::now();
    let sys = build_system_capped(state, d, opts.gauge_fix, opts.necklace_cap)?;
    let mut result = DimResult {
        d,
        verdict: Verdict::BudgetExceeded,
        certificate: None,
        equations: sys.polys.len(),
        variables: sys.var_names.len(),
        seconds: 0.0,
        stats: None,
        basis: None,
    };
    match buchberger_with_stats(&sys.polys, &opts.groebner) {
        Ok((gb, stats)) => {
            result.verdict = if contains_one(&gb) { Verdict::Infeasible } else { Verdict::Feasible };
            result.certificate = Some(Certificate::Full);
            result.stats = Some(stats);
            result.basis = opts.keep_basis.then(|| gb.iter().map(|p| p.to_string_with(&sys.var_names)).collect());
        }
        Err(Error::BudgetExceeded { .. }) => {
            if opts.restricted_fallback {
                restricted_search(state, d, opts, &mut result)?;
            }
        }
        Err(e) => return Err(e),
    }
    result.seconds = start.elapsed().as_secs_f64();
    Ok(result)
}

/// Partitions of `d` into positive parts, most parts first.
fn partitions(d: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|p| std::cmp::Reverse(p.len()));
    out
}

/// The restricted system with `A_matrix` pinned to the nilpotent Jordan
/// form with the given blocks. The free matrix uses variables `0..d²`.
pub fn restricted_system(state: &TIState, d: usize, matrix: u8, blocks: &[usize], cap: usize) -> Result<SystemSpec> {
    if blocks.iter().sum::<usize>() != d || blocks.contains(&0) {
        return Err(Error::InvalidArgument(format!("{blocks:?} is not a partition of {d}")));
    }
    let arity = d * d;
    let free = Matrix::from_fn(d, |i, j| MultiPoly::var(arity, i * d + j));
    let mut jordan = Matrix::from_fn(d, |_, _| MultiPoly::zero(arity));
    let mut start = 0;
    for &b in blocks {
        for i in start..start + b - 1 {
            jordan.set(i, i + 1, MultiPoly::one(arity));
        }
        start += b;
    }
    let rep = if matrix == 0 { MpsRep::new(jordan, free)? } else { MpsRep::new(free, jordan)? };
    let polys = trace_equations(state, &rep, cap)?;
    let other = 1 - matrix;
    let sep = if d >= 10 { "," } else { "" };
    let var_names = (0..arity).map(|k| format!("a{other}_{}{sep}{}", k / d + 1, k % d + 1)).collect();
    Ok(SystemSpec { state: state.clone(), d, gauge_fix: false, var_names, polys })
}

fn restricted_search(state: &TIState, d: usize, opts: &MinDimOptions, result: &mut DimResult) -> Result<()> {
    for matrix in [1u8, 0] {
        for blocks in partitions(d) {
            let sys = restricted_system(state, d, matrix, &blocks, opts.necklace_cap)?;
            match buchberger_with_stats(&sys.polys, &opts.groebner) {
                Ok((gb, stats)) if !contains_one(&gb) => {
                    result.verdict = Verdict::Feasible;
                    result.certificate = Some(Certificate::NilpotentJordan { matrix, blocks });
                    result.stats = Some(stats);
                    result.basis =
                        opts.keep_basis.then(|| gb.iter().map(|p| p.to_string_with(&sys.var_names)).collect());
                    return Ok(());
                }
                Ok(_) | Err(Error::BudgetExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

pub fn feasible_at(state: &TIState, d: usize, opts: &MinDimOptions) -> Result<Verdict> {
    Ok(feasible_at_detailed(state, d, opts)?.verdict)
}

/// Iterates `d = 1…d_max` and stops at the first feasible `d`. A
/// budget-exceeded verdict leaves the result unresolved but the search goes
/// on, so the report still shows what larger `d` would give.
pub fn min_bond_dimension(state: &TIState, d_max: usize, opts: &MinDimOptions) -> Result<MinDimReport> {
    if d_max == 0 {
        return Err(Error::InvalidArgument("d_max must be at least 1".into()));
    }
    let mut per_d = Vec::new();
    let mut resolved = None;
    let mut blocked = false;
    for d in 1..=d_max {
        let r = feasible_at_detailed(state, d, opts)?;
        let v = r.verdict;
        per_d.push(r);
        match v {
            Verdict::Feasible => {
                if !blocked {
                    resolved = Some(d);
                }
                break;
            }
            Verdict::BudgetExceeded => blocked = true,
            Verdict::Infeasible => {}
        }
    }
    Ok(MinDimReport {
        n: state.n(),
        per_d,
        resolved,
        bound_used: d_max,
        gauge_fix: opts.gauge_fix,
        order: opts.groebner.order,
        budget: opts.groebner.budget,
    })
}

/// The system in the text format, one polynomial per line.
pub fn format_system(sys: &SystemSpec) -> String {
    sys.polys.iter().map(|p| p.to_string_with(&sys.var_names)).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussianRational;
    use crate::states::w_state;

    #[test]
    fn scalar_system_n2() {
        let s = TIState::from_pairs(
            2,
            [
                (crate::states::canonical_rotation("00").unwrap(), GaussianRational::from_int(4)),
                (crate::states::canonical_rotation("01").unwrap(), GaussianRational::from_int(6)),
                (crate::states::canonical_rotation("11").unwrap(), GaussianRational::from_int(9)),
            ],
        )
        .unwrap();
        let sys = build_system(&s, 1, false).unwrap();
        assert_eq!(sys.var_names, vec!["a0_11", "a1_11"]);
        let text = format_system(&sys);
        assert_eq!(text, "a0_11^2 - 4\na0_11*a1_11 - 6\na1_11^2 - 9");
        assert_eq!(feasible_at(&s, 1, &MinDimOptions::default()).unwrap(), Verdict::Feasible);
    }

    #[test]
    fn w3_scalar_system() {
        let sys = build_system(&w_state(3, false).unwrap(), 1, false).unwrap();
        assert_eq!(format_system(&sys), "a0_11^3\na0_11^2*a1_11 - 1\na0_11*a1_11^2\na1_11^3");
    }

    #[test]
    fn structure_counts() {
        let s = w_state(2, false).unwrap();
        let sys = build_system(&s, 2, false).unwrap();
        assert_eq!((sys.polys.len(), sys.var_names.len()), (3, 8));
        assert!(sys.polys.iter().all(|p| p.total_degree() == Some(2)));
        assert_eq!(build_system(&s, 2, true).unwrap().var_names.len(), 7);
        assert!(build_system(&s, 0, false).is_err());
    }

    #[test]
    fn small_verdicts() {
        let opts = MinDimOptions::default();
        assert_eq!(feasible_at(&w_state(3, false).unwrap(), 1, &opts).unwrap(), Verdict::Infeasible);
        assert_eq!(feasible_at(&TIState::zero(3), 1, &opts).unwrap(), Verdict::Feasible);
        let r = min_bond_dimension(&TIState::zero(4), 3, &opts).unwrap();
        assert_eq!(r.resolved, Some(1));
        assert_eq!(r.per_d.len(), 1);
        let r = min_bond_dimension(&w_state(2, false).unwrap(), 3, &opts).unwrap();
        assert_eq!(r.resolved, Some(2));
        assert_eq!(r.per_d.iter().map(|x| x.verdict).collect::<Vec<_>>(), [Verdict::Infeasible, Verdict::Feasible]);
    }

    #[test]
    fn partitions_of_three() {
        assert_eq!(partitions(3), vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
        assert_eq!(partitions(5).len(), 7);
    }

    #[test]
    fn restricted_fallback_finds_w4() {
        // The full system at d = 3 does not fit a tiny budget, but pinning
        // A_1 to a nilpotent Jordan form does.
        let opts = MinDimOptions { groebner: GroebnerConfig { budget: Some(200_000), ..Default::default() }, ..Default::default() };
        let r = feasible_at_detailed(&w_state(4, false).unwrap(), 3, &opts).unwrap();
        assert_eq!(r.verdict, Verdict::Feasible);
        assert_eq!(r.certificate, Some(Certificate::NilpotentJordan { matrix: 1, blocks: vec![2, 1] }));
        let off = MinDimOptions { restricted_fallback: false, ..opts };
        assert_eq!(feasible_at(&w_state(4, false).unwrap(), 3, &off).unwrap(), Verdict::BudgetExceeded);
    }

    #[test]
    fn restricted_system_shape() {
        let sys = restricted_system(&w_state(3, false).unwrap(), 2, 1, &[2], 24).unwrap();
        assert_eq!(sys.var_names, vec!["a0_11", "a0_12", "a0_21", "a0_22"]);
        assert!(restricted_system(&w_state(3, false).unwrap(), 2, 1, &[3], 24).is_err());
    }

    #[test]
    fn budget_is_a_verdict() {
        let opts = MinDimOptions {
            groebner: GroebnerConfig { budget: Some(10), ..Default::default() },
            restricted_fallback: false,
            ..Default::default()
        };
        let r = min_bond_dimension(&w_state(3, false).unwrap(), 2, &opts).unwrap();
        assert_eq!(r.per_d[0].verdict, Verdict::BudgetExceeded);
        assert_eq!(r.resolved, None);
    }
}
