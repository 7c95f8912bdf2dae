//! Translation-invariant MPS representations with periodic boundary
//! conditions: a pair of square matrices `(A_0, A_1)` whose ordered trace
//! products give the state coefficients.
//!
//! [`MpsRep`] is generic over the entry type. Three instantiations are used
//! throughout the crate: exact ([`GaussianRational`]), floating
//! ([`ComplexF`]) and univariate-symbolic ([`MultiPoly`] of arity 1).

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polynomials::MultiPoly;
use crate::scalars::{ComplexF, Field, GaussianRational, Ring};
use crate::states::{canonical_bits, enumerate_necklaces_capped, Necklace, TIState, DEFAULT_NECKLACE_CAP};

/// Entry type of a matrix: enough structure for products and traces.
/// Polynomials qualify even though they have no arity-free zero.
pub trait Entry: Clone + PartialEq + fmt::Debug {
    fn add_e(&self, other: &Self) -> Self;
    fn mul_e(&self, other: &Self) -> Self;
    fn is_zero_e(&self) -> bool;
}

impl<T: Ring> Entry for T {
    fn add_e(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn mul_e(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn is_zero_e(&self) -> bool {
        self.is_zero()
    }
}

impl Entry for MultiPoly {
    fn add_e(&self, other: &Self) -> Self {
        self.add(other).expect("matrix entries share arity")
    }
    fn mul_e(&self, other: &Self) -> Self {
        self.mul(other).expect("matrix entries share arity")
    }
    fn is_zero_e(&self) -> bool {
        self.is_zero()
    }
}

/// Dense square matrix, row major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    d: usize,
    data: Vec<T>,
}

impl<T: Entry> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::Shape("matrix must have at least one row".into()));
        }
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::Shape(format!("matrix is not {d}x{d}")));
        }
        Ok(Matrix { d, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix with entry `f(i, j)` at row `i`, column `j` (zero based).
    pub fn from_fn(d: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(d >= 1, "matrix dimension must be positive");
        Matrix { d, data: (0..d * d).map(|k| f(k / d, k % d)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.d + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.d).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { d: self.d, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Entry>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix { d: self.d, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.d, other.d, "dimension mismatch");
        let d = self.d;
        let mut data = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                data.push(dot(d, |k| self.get(i, k), |k| other.get(k, j)));
            }
        }
        Matrix { d, data }
    }

    pub fn trace(&self) -> T {
        let mut acc = self.get(0, 0).clone();
        for i in 1..self.d {
            acc = acc.add_e(self.get(i, i));
        }
        acc
    }

    /// `Tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix<T>) -> T {
        let d = self.d;
        let mut acc: Option<T> = None;
        for i in 0..d {
            let v = dot(d, |k| self.get(i, k), |k| other.get(k, i));
            acc = Some(match acc {
                None => v,
                Some(a) => a.add_e(&v),
            });
        }
        acc.expect("d >= 1")
    }

    /// `self^e` for `e >= 1` by repeated squaring.
    pub fn pow(&self, e: usize) -> Matrix<T> {
        assert!(e >= 1, "matrix power needs a positive exponent");
        let mut base = self.clone();
        let mut acc: Option<Matrix<T>> = None;
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("e >= 1")
    }

    /// Entrywise product with a scalar.
    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|v| v.mul_e(c))
    }
}

fn dot<'a, T: Entry + 'a>(d: usize, a: impl Fn(usize) -> &'a T, b: impl Fn(usize) -> &'a T) -> T {
    let mut acc: Option<T> = None;
    for k in 0..d {
        let (x, y) = (a(k), b(k));
        if x.is_zero_e() || y.is_zero_e() {
            continue;
        }
        let p = x.mul_e(y);
        acc = Some(match acc {
            None => p,
            Some(s) => s.add_e(&p),
        });
    }
    // All products vanished: x·0 is a zero of the right shape.
    acc.unwrap_or_else(|| a(0).mul_e(b(0)))
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(d: usize) -> Self {
        Matrix::from_fn(d, |_, _| T::zero())
    }

    pub fn identity(d: usize) -> Self {
        Matrix::from_fn(d, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Matrix unit `E_{jk}` (zero based).
    pub fn unit(d: usize, j: usize, k: usize) -> Self {
        Matrix::from_fn(d, |a, b| if a == j && b == k { T::one() } else { T::zero() })
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        Matrix { d: self.d, data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect() }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.d)).finish()
    }
}

impl Matrix<ComplexF> {
    /// Inverse by Gauss–Jordan elimination with partial pivoting, together
    /// with the 1-norm condition estimate `‖S‖₁·‖S⁻¹‖₁`.
    pub fn inverse_with_condition(&self) -> Result<(Matrix<ComplexF>, f64)> {
        let d = self.d;
        let mut a = self.rows();
        let mut inv: Vec<Vec<ComplexF>> = Matrix::<ComplexF>::identity(d).rows();
        for col in 0..d {
            let piv = (col..d)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .expect("nonempty range");
            if a[piv][col].norm() == 0.0 {
                return Err(Error::IllConditioned(f64::INFINITY));
            }
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col];
            for k in 0..d {
                a[col][k] /= p;
                inv[col][k] /= p;
            }
            for r in 0..d {
                if r != col {
                    let f = a[r][col];
                    if f.norm() != 0.0 {
                        for k in 0..d {
                            let (ac, ic) = (a[col][k], inv[col][k]);
                            a[r][k] -= f * ac;
                            inv[r][k] -= f * ic;
                        }
                    }
                }
            }
        }
        let inv = Matrix::from_rows(inv)?;
        let cond = self.norm_1() * inv.norm_1();
        Ok((inv, cond))
    }

    pub fn norm_1(&self) -> f64 {
        (0..self.d).map(|j| (0..self.d).map(|i| self.get(i, j).norm()).sum::<f64>()).fold(0.0, f64::max)
    }
}

/// Scalar domain of a representation, as named in the JSON rep format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Exact,
    Floating,
    Symbolic,
}

/// TI MPS representation: bond dimension `d` and the matrix pair.
#[derive(Clone, PartialEq, Debug)]
pub struct MpsRep<T> {
    a0: Matrix<T>,
    a1: Matrix<T>,
}

/// Exact representation over `Q(i)`.
pub type ExactRep = MpsRep<GaussianRational>;
/// Floating representation over double-precision complex numbers.
pub type FloatRep = MpsRep<ComplexF>;
/// Representation whose entries are polynomials in one formal variable.
pub type SymbolicRep = MpsRep<MultiPoly>;

impl<T: Entry> MpsRep<T> {
    pub fn new(a0: Matrix<T>, a1: Matrix<T>) -> Result<Self> {
        if a0.dim() != a1.dim() {
            return Err(Error::Shape(format!("A0 is {0}x{0} but A1 is {1}x{1}", a0.dim(), a1.dim())));
        }
        Ok(MpsRep { a0, a1 })
    }

    pub fn d(&self) -> usize {
        self.a0.dim()
    }

    pub fn a0(&self) -> &Matrix<T> {
        &self.a0
    }

    pub fn a1(&self) -> &Matrix<T> {
        &self.a1
    }

    pub fn matrix(&self, bit: u8) -> &Matrix<T> {
        if bit == 0 {
            &self.a0
        } else {
            &self.a1
        }
    }

    /// `Tr(A_{i_1} ⋯ A_{i_n})` for an arbitrary bit string. The string is
    /// canonicalized first and the product is formed run by run, with each
    /// run `A_b^r` computed by repeated squaring.
    pub fn eval_bits(&self, bits: &[u8]) -> T {
        let mut cache = PowerCache::new(self);
        cache.trace(&canonical_bits(bits))
    }

    /// Coefficient of the necklace class `I`.
    pub fn eval_coefficient(&self, k: &Necklace) -> T {
        let mut cache = PowerCache::new(self);
        cache.trace(k)
    }

    /// Entrywise product of both matrices with `root`. If `root^n = λ`,
    /// the represented state of order `n` is multiplied by `λ`.
    pub fn scale_rep(&self, root: &T) -> MpsRep<T> {
        MpsRep { a0: self.a0.scale(root), a1: self.a1.scale(root) }
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> MpsRep<U> {
        MpsRep { a0: self.a0.map(&f), a1: self.a1.map(&f) }
    }
}

/// Memoized powers `A_b^r` for evaluating many classes against one rep.
pub struct PowerCache<'a, T> {
    rep: &'a MpsRep<T>,
    powers: HashMap<(u8, usize), Matrix<T>>,
}

impl<'a, T: Entry> PowerCache<'a, T> {
    pub fn new(rep: &'a MpsRep<T>) -> Self {
        PowerCache { rep, powers: HashMap::new() }
    }

    fn power(&mut self, bit: u8, r: usize) -> Matrix<T> {
        if let Some(m) = self.powers.get(&(bit, r)) {
            return m.clone();
        }
        let m = if r == 1 {
            self.rep.matrix(bit).clone()
        } else {
            let half = self.power(bit, r / 2);
            let sq = half.mul(&half);
            if r % 2 == 1 {
                sq.mul(self.rep.matrix(bit))
            } else {
                sq
            }
        };
        self.powers.insert((bit, r), m.clone());
        m
    }

    /// Trace of the product spelled by `k`.
    pub fn trace(&mut self, k: &Necklace) -> T {
        let bits = k.bits();
        let mut runs: Vec<(u8, usize)> = Vec::new();
        for &b in bits {
            match runs.last_mut() {
                Some((rb, len)) if *rb == b => *len += 1,
                _ => runs.push((b, 1)),
            }
        }
        if runs.len() == 1 {
            let (b, r) = runs[0];
            if r == 1 {
                return self.rep.matrix(b).trace();
            }
            let half = self.power(b, r / 2);
            let rest = self.power(b, r - r / 2);
            return half.trace_of_product(&rest);
        }
        let last = runs.pop().expect("at least two runs");
        let mut acc = self.power(runs[0].0, runs[0].1);
        for &(b, r) in &runs[1..] {
            let p = self.power(b, r);
            acc = acc.mul(&p);
        }
        let tail = self.power(last.0, last.1);
        acc.trace_of_product(&tail)
    }
}

/// Free-function form of [`MpsRep::eval_coefficient`].
pub fn eval_coefficient<T: Entry>(rep: &MpsRep<T>, k: &Necklace) -> T {
    rep.eval_coefficient(k)
}

/// Free-function form of [`MpsRep::scale_rep`].
pub fn scale_rep<T: Entry>(rep: &MpsRep<T>, root: &T) -> MpsRep<T> {
    rep.scale_rep(root)
}

/// The trace coefficient of a univariate-symbolic rep as an exact
/// polynomial in its formal variable.
pub fn trace_polynomial(rep: &SymbolicRep, k: &Necklace) -> Result<MultiPoly> {
    if let Some(p) = rep.a0.entries().iter().chain(rep.a1.entries()).find(|p| p.arity() != 1) {
        return Err(Error::ArityMismatch { expected: 1, got: p.arity() });
    }
    Ok(rep.eval_coefficient(k))
}

impl ExactRep {
    pub fn to_floating(&self) -> Result<FloatRep> {
        Ok(MpsRep { a0: self.a0.try_map(|v| v.to_complex())?, a1: self.a1.try_map(|v| v.to_complex())? })
    }

    /// Every coefficient of the represented state of order `n`.
    pub fn to_state(&self, n: usize, cap: usize) -> Result<TIState> {
        let classes = enumerate_necklaces_capped(n, cap)?;
        let mut cache = PowerCache::new(self);
        let pairs: Vec<_> = classes.into_iter().map(|k| (k.clone(), cache.trace(&k))).collect();
        TIState::from_pairs(n, pairs)
    }

    /// Exact similarity transform `S·A_i·S⁻¹`.
    pub fn conjugate_exact(&self, s: &Matrix<GaussianRational>) -> Result<ExactRep> {
        let inv = exact_inverse(s)?;
        Ok(MpsRep { a0: s.mul(&self.a0).mul(&inv), a1: s.mul(&self.a1).mul(&inv) })
    }
}

/// Inverse over a field by Gauss–Jordan elimination.
pub fn exact_inverse<T: Field>(s: &Matrix<T>) -> Result<Matrix<T>> {
    let d = s.dim();
    let mut a = s.rows();
    let mut inv: Vec<Vec<T>> = Matrix::<T>::identity(d).rows();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero()).ok_or(Error::IllConditioned(f64::INFINITY))?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].inv().expect("nonzero pivot");
        for k in 0..d {
            a[col][k] = a[col][k].mul_ref(&p);
            inv[col][k] = inv[col][k].mul_ref(&p);
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..d {
                    a[r][k] = a[r][k].sub_ref(&f.mul_ref(&a[col][k]));
                    inv[r][k] = inv[r][k].sub_ref(&f.mul_ref(&inv[col][k]));
                }
            }
        }
    }
    Matrix::from_rows(inv)
}

/// Default cap on the 1-norm condition number accepted by
/// [`conjugate_rep`].
pub const DEFAULT_CONDITION_CAP: f64 = 1e8;

/// Gauge transform `A_i → S·A_i·S⁻¹`, which leaves every trace coefficient
/// unchanged. Rejects singular `S` and `S` whose condition estimate exceeds
/// `condition_cap`.
pub fn conjugate_rep(rep: &FloatRep, s: &Matrix<ComplexF>, condition_cap: f64) -> Result<FloatRep> {
    if s.dim() != rep.d() {
        return Err(Error::Shape(format!("S is {0}x{0} but the rep has d = {1}", s.dim(), rep.d())));
    }
    let (inv, cond) = s.inverse_with_condition()?;
    if !cond.is_finite() || cond > condition_cap {
        return Err(Error::IllConditioned(cond));
    }
    Ok(MpsRep { a0: s.mul(&rep.a0).mul(&inv), a1: s.mul(&rep.a1).mul(&inv) })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub tol: f64,
    /// Compare `|eval − c| / max(1, |c|)` instead of the absolute error.
    pub relative: bool,
    pub necklace_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tol: 1e-9, relative: false, necklace_cap: DEFAULT_NECKLACE_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_abs_error: f64,
    pub worst_necklace: Necklace,
    pub passed: bool,
    pub checked_classes: usize,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: max error {:.3e} at necklace {} over {} classes",
            if self.passed { "PASS" } else { "FAIL" },
            self.max_abs_error,
            self.worst_necklace,
            self.checked_classes
        )
    }
}

/// Compares the rep against `s` on every necklace class of length `s.n()`,
/// zero-coefficient classes included.
pub fn verify(rep: &FloatRep, s: &TIState, tol: f64) -> Result<VerifyReport> {
    verify_with(rep, s, &VerifyOptions { tol, ..Default::default() })
}

pub fn verify_with(rep: &FloatRep, s: &TIState, opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {}", opts.tol)));
    }
    let classes = enumerate_necklaces_capped(s.n(), opts.necklace_cap)?;
    let mut cache = PowerCache::new(rep);
    let mut worst = (f64::NEG_INFINITY, classes[0].clone());
    for k in &classes {
        let got = cache.trace(k);
        let want = s.coefficient(k).to_complex()?;
        let mut err = (got - want).norm();
        if opts.relative {
            err /= want.norm().max(1.0);
        }
        // NaN counts as the worst possible error.
        let err = if err.is_nan() { f64::INFINITY } else { err };
        if err > worst.0 {
            worst = (err, k.clone());
        }
    }
    Ok(VerifyReport {
        max_abs_error: worst.0,
        worst_necklace: worst.1,
        passed: worst.0 <= opts.tol,
        checked_classes: classes.len(),
    })
}

/// A rep loaded from, or destined for, the JSON rep format.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRep {
    Exact(ExactRep),
    Floating(FloatRep),
}

impl AnyRep {
    pub fn d(&self) -> usize {
        match self {
            AnyRep::Exact(r) => r.d(),
            AnyRep::Floating(r) => r.d(),
        }
    }

    pub fn to_floating(&self) -> Result<FloatRep> {
        match self {
            AnyRep::Exact(r) => r.to_floating(),
            AnyRep::Floating(r) => Ok(r.clone()),
        }
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyRep::Exact(_) => ScalarKind::Exact,
            AnyRep::Floating(_) => ScalarKind::Floating,
        }
    }
}

/// Contents of a rep file: the chain length it was built for plus the rep.
#[derive(Clone, Debug, PartialEq)]
pub struct RepFile {
    pub n: usize,
    pub rep: AnyRep,
}

#[derive(Serialize, Deserialize)]
struct RawRepFile {
    n: usize,
    d: usize,
    scalars: ScalarKind,
    #[serde(rename = "A0")]
    a0: Vec<Vec<Value>>,
    #[serde(rename = "A1")]
    a1: Vec<Vec<Value>>,
}

fn parse_entry(v: &Value) -> Result<GaussianRational> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(x) => {
            let f = x.as_f64().ok_or_else(|| Error::Parse(format!("bad number {x}")))?;
            GaussianRational::from_complex(ComplexF::new(f, 0.0))
        }
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(|| Error::Parse(format!("bad entry {v}")))?;
            let im = pair[1].as_f64().ok_or_else(|| Error::Parse(format!("bad entry {v}")))?;
            GaussianRational::from_complex(ComplexF::new(re, im))
        }
        _ => Err(Error::Parse(format!("unsupported matrix entry {v}"))),
    }
}

fn parse_float_entry(v: &Value) -> Result<ComplexF> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0].as_f64().ok_or_else(|| Error::Parse(format!("bad entry {v}")))?;
            let im = pair[1].as_f64().ok_or_else(|| Error::Parse(format!("bad entry {v}")))?;
            Ok(ComplexF::new(re, im))
        }
        Value::Number(x) => Ok(ComplexF::new(x.as_f64().unwrap_or(f64::NAN), 0.0)),
        Value::String(s) => s.parse::<GaussianRational>()?.to_complex(),
        _ => Err(Error::Parse(format!("unsupported matrix entry {v}"))),
    }
}

fn parse_matrix<T: Entry>(rows: &[Vec<Value>], d: usize, f: impl Fn(&Value) -> Result<T>) -> Result<Matrix<T>> {
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(Error::Shape(format!("matrix is not {d}x{d}")));
    }
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?)
}

impl RepFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawRepFile = serde_json::from_str(text)?;
        if raw.d == 0 {
            return Err(Error::Shape("bond dimension must be at least 1".into()));
        }
        let rep = match raw.scalars {
            ScalarKind::Exact => AnyRep::Exact(MpsRep::new(
                parse_matrix(&raw.a0, raw.d, parse_entry)?,
                parse_matrix(&raw.a1, raw.d, parse_entry)?,
            )?),
            ScalarKind::Floating => AnyRep::Floating(MpsRep::new(
                parse_matrix(&raw.a0, raw.d, parse_float_entry)?,
                parse_matrix(&raw.a1, raw.d, parse_float_entry)?,
            )?),
            ScalarKind::Symbolic => {
                return Err(Error::Parse("symbolic reps have no file format".into()));
            }
        };
        Ok(RepFile { n: raw.n, rep })
    }

    pub fn to_json(&self) -> String {
        fn rows<T: Entry>(m: &Matrix<T>, f: impl Fn(&T) -> Value) -> Vec<Vec<Value>> {
            m.rows().iter().map(|r| r.iter().map(&f).collect()).collect()
        }
        let exact = |v: &GaussianRational| Value::String(v.to_string());
        let float = |v: &ComplexF| serde_json::json!([v.re, v.im]);
        let raw = match &self.rep {
            AnyRep::Exact(r) => RawRepFile {
                n: self.n,
                d: r.d(),
                scalars: ScalarKind::Exact,
                a0: rows(r.a0(), exact),
                a1: rows(r.a1(), exact),
            },
            AnyRep::Floating(r) => RawRepFile {
                n: self.n,
                d: r.d(),
                scalars: ScalarKind::Floating,
                a0: rows(r.a0(), float),
                a1: rows(r.a1(), float),
            },
        };
        serde_json::to_string_pretty(&raw).expect("rep serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}
