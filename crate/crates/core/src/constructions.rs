//! Explicit representations: the W-state family of bond dimension
//! `⌊n/2⌋+1`, the scaled-matrix-unit checker, the canonical `n×n` form and
//! the upper-shift fixture.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mps::{AnyRep, ExactRep, FloatRep, Matrix, MpsRep, SymbolicRep};
use crate::polynomials::MultiPoly;
use crate::scalars::{principal_root_exact, rationalize, ComplexF, GaussianRational, Ring};
use crate::states::{canonical_bits, Necklace, TIState, DEFAULT_NECKLACE_CAP};

/// Residual bound for a root of the W trace polynomial.
pub const ROOT_TOLERANCE: f64 = 1e-10;

/// The W-state representation of bond dimension `⌊n/2⌋+1`.
#[derive(Clone, Debug)]
pub struct WConstruction {
    pub n: usize,
    pub d: usize,
    /// Chosen root of `Tr(A_0^n)` as a polynomial in the corner entry.
    pub x: ComplexF,
    /// `Tr(A_0^n)` in the formal variable `x`.
    pub trace_poly: MultiPoly,
    /// `A_0`, `A_1` with `x` left formal.
    pub symbolic_rep: SymbolicRep,
    /// `A_0`, `A_1` at the chosen root.
    pub rep: FloatRep,
    /// `(A_0^{n-1})_{d,1}` at the chosen root: the coefficient of every
    /// weight-one string.
    pub constant: ComplexF,
    /// The same entry when it does not depend on `x`.
    pub constant_exact: Option<GaussianRational>,
}

/// `A_0 = Σ_{k<d}(E_{1k} + E_{k+1,k}) + x·E_{1d}`, `A_1 = E_{1d}` with the
/// corner entry supplied by `x`.
fn w_matrices<T: Ring>(d: usize, x: T) -> (Matrix<T>, Matrix<T>) {
    let mut a0 = Matrix::zeros(d);
    for k in 0..d - 1 {
        a0.set(0, k, T::one());
        a0.set(k + 1, k, T::one());
    }
    a0.set(0, d - 1, x);
    (a0, Matrix::unit(d, 0, d - 1))
}

/// Builds the W-state representation for chain length `n ≥ 2`.
pub fn build_w(n: usize) -> Result<WConstruction> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("the W construction needs n >= 2, got {n}")));
    }
    let d = n / 2 + 1;
    let x = MultiPoly::var(1, 0);
    let zero = MultiPoly::zero(1);
    let one = MultiPoly::one(1);
    let mut a0 = Matrix::from_fn(d, |_, _| zero.clone());
    for k in 0..d - 1 {
        a0.set(0, k, one.clone());
        a0.set(k + 1, k, one.clone());
    }
    a0.set(0, d - 1, x);
    let a1 = Matrix::from_fn(d, |i, j| if i == 0 && j == d - 1 { one.clone() } else { zero.clone() });
    let symbolic_rep = MpsRep::new(a0, a1)?;

    let trace_poly = symbolic_rep.a0().pow(n).trace();
    let root = solve_trace_root(&trace_poly)?;
    let corner = symbolic_rep.a0().pow(n - 1).get(d - 1, 0).clone();
    let constant = corner.eval(&[root])?;
    let constant_exact = corner.as_constant();

    let (a0, a1) = w_matrices(d, root);
    Ok(WConstruction { n, d, x: root, trace_poly, symbolic_rep, rep: MpsRep::new(a0, a1)?, constant, constant_exact })
}

impl WConstruction {
    /// Exact rep when the chosen root lies in `Q(i)` with a small
    /// denominator (e.g. `x = -1/2` at `n = 2`, `x = -1/3` at `n = 3`).
    pub fn exact_rep(&self) -> Option<ExactRep> {
        let re = rationalize(self.x.re, 1 << 20)?;
        let im = rationalize(self.x.im, 1 << 20)?;
        let x = GaussianRational::new(re, im);
        let value = self.trace_poly.terms().iter().fold(GaussianRational::from_int(0), |acc, (m, c)| {
            acc.add_ref(&c.mul_ref(&x.pow(u32::from(m.exponents()[0]))))
        });
        if !value.is_zero() {
            return None;
        }
        let (a0, a1) = w_matrices(self.d, x);
        MpsRep::new(a0, a1).ok()
    }
}

/// Rescales a W construction so that it represents the normalized W-state:
/// both matrices are multiplied by the principal root `(c·√n)^{-1/n}`, with
/// `c` the construction's computed constant.
pub fn normalize_w(w: &WConstruction) -> FloatRep {
    let factor = (w.constant * (w.n as f64).sqrt()).powf(-1.0 / w.n as f64);
    w.rep.scale_rep(&factor)
}

/// Unnormalized upper-shift representation of the W-state of order `n`:
/// `A_0 = Σ_m E_{m,m+1}`, `A_1 = E_{n,1}`.
pub fn upper_shift_w(n: usize) -> Result<ExactRep> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("the upper-shift construction needs n >= 2, got {n}")));
    }
    MpsRep::new(
        Matrix::from_fn(n, |i, j| if j == i + 1 { GaussianRational::one() } else { GaussianRational::zero() }),
        Matrix::unit(n, n - 1, 0),
    )
}

/// Upper-shift representation scaled by `n^{-1/(2n)}`, which represents the
/// normalized W-state.
pub fn upper_shift_w_normalized(n: usize) -> Result<FloatRep> {
    let factor = ComplexF::new((n as f64).powf(-1.0 / (2.0 * n as f64)), 0.0);
    Ok(upper_shift_w(n)?.to_floating()?.scale_rep(&factor))
}

fn horner(coeffs: &[ComplexF], z: ComplexF) -> (ComplexF, ComplexF) {
    let mut p = ComplexF::new(0.0, 0.0);
    let mut dp = ComplexF::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of a univariate polynomial, by Aberth–Ehrlich
/// simultaneous iteration followed by Newton polishing.
pub fn polynomial_roots(p: &MultiPoly) -> Result<Vec<ComplexF>> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch { expected: 1, got: p.arity() });
    }
    let deg = p.total_degree().unwrap_or(0) as usize;
    if deg == 0 {
        return Err(Error::InvalidArgument("a constant polynomial has no roots to choose from".into()));
    }
    let mut coeffs = vec![ComplexF::new(0.0, 0.0); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.to_complex()?;
    }
    let lead = coeffs[deg];
    for c in &mut coeffs {
        *c /= lead;
    }
    if deg == 1 {
        return Ok(vec![-coeffs[0]]);
    }
    let radius = 1.0 + coeffs[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<ComplexF> =
        (0..deg).map(|k| ComplexF::from_polar(radius, 2.0 * PI * k as f64 / deg as f64 + 0.4)).collect();
    let mut converged = false;
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let (v, dv) = horner(&coeffs, z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: ComplexF = (0..deg).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (ComplexF::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    for r in &mut z {
        for _ in 0..3 {
            let (v, dv) = horner(&coeffs, *r);
            if dv.norm() == 0.0 {
                break;
            }
            let next = *r - v / dv;
            if horner(&coeffs, next).0.norm() < v.norm() {
                *r = next;
            }
        }
    }
    if !converged && z.iter().any(|&r| horner(&coeffs, r).0.norm() > ROOT_TOLERANCE) {
        return Err(Error::NoConvergence("root iteration did not settle".into()));
    }
    Ok(z)
}

/// The deterministic root used by [`build_w`]: among all roots, the one of
/// smallest modulus, ties going to the smallest principal argument. The
/// result satisfies `|p(x)| ≤ 1e-10`.
pub fn solve_trace_root(p: &MultiPoly) -> Result<ComplexF> {
    let roots = polynomial_roots(p)?;
    let best = roots
        .iter()
        .copied()
        .min_by(|a, b| {
            let (ma, mb) = (a.norm(), b.norm());
            if (ma - mb).abs() <= 1e-9 * ma.max(mb).max(1.0) {
                a.arg().total_cmp(&b.arg())
            } else {
                ma.total_cmp(&mb)
            }
        })
        .expect("degree >= 1");
    let residual = p.eval(&[best])?.norm();
    if residual > ROOT_TOLERANCE {
        return Err(Error::NoConvergence(format!("root residual {residual:.3e} exceeds {ROOT_TOLERANCE:e}")));
    }
    Ok(best)
}

/// A representation whose second matrix is `λ·E_{jk}` with `j ≠ k`
/// (zero-based indices).
#[derive(Clone, Debug, PartialEq)]
pub struct UnitRepSpec {
    pub lambda: GaussianRational,
    pub j: usize,
    pub k: usize,
    pub a0: Matrix<GaussianRational>,
}

impl UnitRepSpec {
    pub fn new(a0: Matrix<GaussianRational>, lambda: GaussianRational, j: usize, k: usize) -> Result<Self> {
        let d = a0.dim();
        if lambda.is_zero() {
            return Err(Error::InvalidArgument("lambda must be nonzero".into()));
        }
        if j == k || j >= d || k >= d {
            return Err(Error::InvalidArgument(format!("need distinct indices below {d}, got j = {j}, k = {k}")));
        }
        Ok(UnitRepSpec { lambda, j, k, a0 })
    }

    /// Reads `λ, j, k` off a rep whose `A_1` has exactly one nonzero entry,
    /// off the diagonal.
    pub fn from_rep(rep: &ExactRep) -> Result<Self> {
        let d = rep.d();
        let nonzero: Vec<(usize, usize)> =
            (0..d * d).map(|t| (t / d, t % d)).filter(|&(i, j)| !rep.a1().get(i, j).is_zero()).collect();
        match nonzero.as_slice() {
            &[(j, k)] if j != k => Self::new(rep.a0().clone(), rep.a1().get(j, k).clone(), j, k),
            _ => Err(Error::InvalidArgument("A1 is not a scaled off-diagonal matrix unit".into())),
        }
    }

    pub fn d(&self) -> usize {
        self.a0.dim()
    }

    pub fn to_rep(&self) -> ExactRep {
        let d = self.d();
        let a1 = Matrix::from_fn(d, |a, b| {
            if a == self.j && b == self.k {
                self.lambda.clone()
            } else {
                GaussianRational::zero()
            }
        });
        MpsRep::new(self.a0.clone(), a1).expect("same dimension")
    }
}

/// One equation of the unit-rep system: `Tr A_0^n = c_{0…0}` for the
/// all-zero class, `λ^l Π_m (A_0^{p_m})_{k,j} = c_I` for a class with `l`
/// ones separated by gaps `p_m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitEquation {
    pub necklace: Necklace,
    pub gaps: Vec<usize>,
    pub lhs: GaussianRational,
    pub rhs: GaussianRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitCheckReport {
    /// Classes with two cyclically adjacent ones but a nonzero coefficient.
    pub sparsity_violations: Vec<Necklace>,
    pub equations: Vec<UnitEquation>,
    pub passed: bool,
}

impl UnitCheckReport {
    pub fn violated_equations(&self) -> impl Iterator<Item = &UnitEquation> {
        self.equations.iter().filter(|e| !e.holds)
    }
}

impl fmt::Display for UnitCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.passed { "PASS" } else { "FAIL" })?;
        writeln!(
            f,
            "sparsity: {}",
            if self.sparsity_violations.is_empty() { "ok".to_string() } else { format!("{} violations", self.sparsity_violations.len()) }
        )?;
        for k in &self.sparsity_violations {
            writeln!(f, "  nonzero coefficient on {k}")?;
        }
        let bad: Vec<_> = self.violated_equations().collect();
        writeln!(f, "equations: {} checked, {} violated", self.equations.len(), bad.len())?;
        for e in bad {
            writeln!(f, "  {}: lhs {} != rhs {}", e.necklace, e.lhs, e.rhs)?;
        }
        Ok(())
    }
}

/// Sparse classes of length `n`: the all-zero class plus every class of
/// ones separated by nonempty zero runs, one per rotation class.
pub fn sparse_classes(n: usize, cap: usize) -> Result<Vec<Necklace>> {
    if n > cap {
        return Err(Error::NecklaceCap { n, cap });
    }
    fn go(rest: usize, cur: &mut Vec<u8>, out: &mut BTreeSet<Necklace>) {
        if rest == 0 {
            out.insert(canonical_bits(cur));
            return;
        }
        for block in 2..=rest {
            let len = cur.len();
            cur.push(1);
            cur.extend(std::iter::repeat_n(0, block - 1));
            go(rest - block, cur, out);
            cur.truncate(len);
        }
    }
    let mut out = BTreeSet::new();
    out.insert(Necklace::zeros(n));
    go(n, &mut Vec::with_capacity(n), &mut out);
    Ok(out.into_iter().collect())
}

/// Decides exactly whether `(A_0, λE_{jk})` represents `s`: no nonzero
/// coefficient may sit on a class with adjacent ones, and every sparse
/// class must satisfy its trace equation.
pub fn check_unit_rep(spec: &UnitRepSpec, s: &TIState) -> Result<UnitCheckReport> {
    check_unit_rep_capped(spec, s, DEFAULT_NECKLACE_CAP)
}

pub fn check_unit_rep_capped(spec: &UnitRepSpec, s: &TIState, cap: usize) -> Result<UnitCheckReport> {
    let n = s.n();
    if n < 2 {
        return Err(Error::InvalidArgument("the unit-rep check needs n >= 2".into()));
    }
    let sparsity_violations: Vec<Necklace> = s.coeffs().keys().filter(|k| k.has_adjacent_ones()).cloned().collect();
    // powers[p] = A_0^p for p = 1..n.
    let mut powers = vec![spec.a0.clone(), spec.a0.clone()];
    for p in 2..=n {
        let next = powers[p - 1].mul(&spec.a0);
        powers.push(next);
    }
    let mut equations = Vec::new();
    for class in sparse_classes(n, cap)? {
        let gaps = class.gaps();
        let lhs = if gaps.is_empty() {
            powers[n].trace()
        } else {
            gaps.iter().fold(GaussianRational::one(), |acc, &p| {
                acc.mul_ref(&spec.lambda).mul_ref(powers[p].get(spec.k, spec.j))
            })
        };
        let rhs = s.coefficient(&class);
        let holds = lhs == rhs;
        equations.push(UnitEquation { necklace: class, gaps, lhs, rhs, holds });
    }
    let passed = sparsity_violations.is_empty() && equations.iter().all(|e| e.holds);
    Ok(UnitCheckReport { sparsity_violations, equations, passed })
}

/// Parameters of the canonical `n×n` form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanonicalParams {
    /// `γ_q = ((B_0/λ)^q)_{k,j}` for `q = 1…n-1`.
    pub gamma: Vec<GaussianRational>,
    /// `Tr((B_0/λ)^n)`, of which `ω` is the principal `n`-th root.
    pub omega_pow_n: GaussianRational,
    pub omega: ComplexF,
    /// `ω` when it lies in `Q(i)`.
    pub omega_exact: Option<GaussianRational>,
    pub lambda: GaussianRational,
}

/// Output of [`canonicalize`].
#[derive(Clone, Debug, PartialEq)]
pub struct Canonical {
    pub params: CanonicalParams,
    /// Exact whenever `ω` is, floating otherwise.
    pub rep: AnyRep,
}

impl CanonicalParams {
    pub fn n(&self) -> usize {
        self.gamma.len() + 1
    }

    /// `A_0 = λ(Σ_j γ_{n-j} E_{1,j+1} + Σ_{j≥2} E_{j,j+1} + ωE_{22})`,
    /// `A_1 = λE_{n,1}`, with `ω` supplied by the caller.
    pub fn matrices<T: Ring>(&self, omega: T, lift: impl Fn(&GaussianRational) -> T) -> (Matrix<T>, Matrix<T>) {
        let n = self.n();
        let lambda = lift(&self.lambda);
        let mut a0 = Matrix::zeros(n);
        for j in 1..n {
            a0.set(0, j, lift(&self.gamma[n - j - 1]).mul_ref(&lambda));
        }
        for j in 1..n - 1 {
            a0.set(j, j + 1, lambda.clone());
        }
        a0.set(1, 1, omega.mul_ref(&lambda));
        let mut a1 = Matrix::zeros(n);
        a1.set(n - 1, 0, lambda);
        (a0, a1)
    }

    /// The canonical rep with `ω` kept as the formal variable of a
    /// univariate polynomial ring; coefficients then hold exactly modulo
    /// `ω^n − Tr((B_0/λ)^n)`.
    pub fn symbolic_rep(&self) -> SymbolicRep {
        let omega = MultiPoly::var(1, 0);
        let (a0, a1) = self.matrices_poly(omega);
        MpsRep::new(a0, a1).expect("same dimension")
    }

    fn matrices_poly(&self, omega: MultiPoly) -> (Matrix<MultiPoly>, Matrix<MultiPoly>) {
        let n = self.n();
        let c = |v: &GaussianRational| MultiPoly::constant(1, v.clone());
        let zero = MultiPoly::zero(1);
        let mut a0 = Matrix::from_fn(n, |_, _| zero.clone());
        for j in 1..n {
            a0.set(0, j, c(&self.gamma[n - j - 1].mul_ref(&self.lambda)));
        }
        for j in 1..n - 1 {
            a0.set(j, j + 1, c(&self.lambda));
        }
        a0.set(1, 1, omega.scale(&self.lambda));
        let mut a1 = Matrix::from_fn(n, |_, _| zero.clone());
        a1.set(n - 1, 0, c(&self.lambda));
        (a0, a1)
    }
}

/// Canonical `n×n` representation of the state represented by
/// `(B_0, λE_{jk})` at chain length `n`.
pub fn canonicalize(spec: &UnitRepSpec, n: usize) -> Result<Canonical> {
    if n < 2 {
        return Err(Error::InvalidArgument("canonicalization needs n >= 2".into()));
    }
    let inv = spec.lambda.try_inv()?;
    let c0 = spec.a0.map(|v| v.mul_ref(&inv));
    let mut gamma = Vec::with_capacity(n - 1);
    let mut power = c0.clone();
    for q in 1..n {
        if q > 1 {
            power = power.mul(&c0);
        }
        gamma.push(power.get(spec.k, spec.j).clone());
    }
    let omega_pow_n = power.mul(&c0).trace();
    let omega_exact = principal_root_exact(&omega_pow_n, n as u32);
    let omega = match &omega_exact {
        Some(w) => w.to_complex()?,
        None => omega_pow_n.to_complex()?.powf(1.0 / n as f64),
    };
    let params = CanonicalParams { gamma, omega_pow_n, omega, omega_exact, lambda: spec.lambda.clone() };

    let rep = match &params.omega_exact {
        Some(w) => {
            let (a0, a1) = params.matrices(w.clone(), |v| v.clone());
            AnyRep::Exact(MpsRep::new(a0, a1)?)
        }
        None => {
            let lift = |v: &GaussianRational| v.to_complex().expect("finite");
            let (a0, a1) = params.matrices(omega, lift);
            AnyRep::Floating(MpsRep::new(a0, a1)?)
        }
    };
    if let AnyRep::Exact(r) = &rep {
        let mut p = r.a0().clone();
        for q in 1..n {
            if q > 1 {
                p = p.mul(r.a0());
            }
            debug_assert_eq!(*p.get(0, n - 1), params.lambda.pow(q as u32).mul_ref(&params.gamma[q - 1]));
        }
    }
    Ok(Canonical { params, rep })
}
