use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polynomials::monomial::{Grevlex, Monomial, MonomialOrder, TermOrder};
use crate::scalars::{ComplexF, GaussianRational, Rational, Ring};

/// Sparse multivariate polynomial with coefficients in `C`.
///
/// Terms are stored without zero coefficients and sorted in descending
/// graded-reverse-lexicographic order; [`Poly::terms_in`] re-sorts for any
/// other order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    arity: usize,
    terms: Vec<(Monomial, C)>,
}

/// Polynomial over the Gaussian rationals.
pub type MultiPoly = Poly<GaussianRational>;

fn canonical_sort<C>(terms: &mut [(Monomial, C)]) {
    terms.sort_by(|a, b| Grevlex::cmp(&b.0, &a.0));
}

impl<C: Ring> Poly<C> {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: Vec::new() }
    }

    pub fn constant(arity: usize, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(arity);
        }
        Poly { arity, terms: vec![(Monomial::one(arity), c)] }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, C::one())
    }

    /// The variable `x_index` (zero based).
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        Poly { arity, terms: vec![(Monomial::var(arity, index), C::one())] }
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let arity = m.arity();
        if c.is_zero() {
            return Self::zero(arity);
        }
        Poly { arity, terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: m.arity() });
            }
            accumulate(&mut acc, m, &c);
        }
        Ok(Self::from_map(arity, acc))
    }

    fn from_map(arity: usize, acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        canonical_sort(&mut terms);
        Poly { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending grevlex) order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    /// Terms in descending order for `order`.
    pub fn terms_in(&self, order: MonomialOrder) -> Vec<(Monomial, C)> {
        let mut t = self.terms.clone();
        if order != MonomialOrder::Grevlex {
            t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        t
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &C)> {
        match order {
            MonomialOrder::Grevlex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0)).map(|(m, c)| (m, c)),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: other.arity });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                Grevlex::cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { arity: self.arity, terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly { arity: self.arity, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        if other.terms.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, &other.terms[0].1));
        }
        if self.terms.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, &self.terms[0].1));
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(mb), &ca.mul_ref(cb));
            }
        }
        Ok(Self::from_map(self.arity, acc))
    }

    /// `c·m·self`; the canonical order is preserved by monomial
    /// multiplication.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul_ref(c))).filter(|(_, a)| !a.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(self.arity), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = acc.mul(self).expect("same arity");
        }
        acc
    }

    /// Maps every coefficient through `f`, dropping terms that become zero.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Human-readable `coeff*x1^e1*...` text with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || cs[1..].contains('-');
            let cs = if needs_parens { format!("({cs})") } else { cs };
            let minus_one = c.neg_ref().is_one() && !m.is_one();
            let mut factors = vec![];
            if (!c.is_one() && !minus_one) || m.is_one() {
                factors.push(cs);
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            let term = if minus_one { format!("-{}", factors.join("*")) } else { factors.join("*") };
            if k > 0 {
                if let Some(rest) = term.strip_prefix('-') {
                    out.push_str(" - ");
                    out.push_str(rest);
                } else {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            } else {
                out.push_str(&term);
            }
        }
        out
    }
}

pub(crate) fn accumulate<C: Ring>(acc: &mut HashMap<Monomial, C>, m: Monomial, c: &C) {
    use std::collections::hash_map::Entry;
    match acc.entry(m) {
        Entry::Occupied(mut e) => {
            let v = e.get().add_ref(c);
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c.clone());
            }
        }
    }
}

/// Default variable names `x1, x2, ...`.
pub fn default_var_names(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

impl<C: Ring + fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_var_names(self.arity)))
    }
}

impl<C: Ring + fmt::Display> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.arity, self)
    }
}

/// Coefficients that can be evaluated numerically.
pub trait ToComplex {
    fn to_complex_value(&self) -> Result<ComplexF>;
}

impl ToComplex for GaussianRational {
    fn to_complex_value(&self) -> Result<ComplexF> {
        self.to_complex()
    }
}

impl ToComplex for Rational {
    fn to_complex_value(&self) -> Result<ComplexF> {
        GaussianRational::from_real(self.clone()).to_complex()
    }
}

impl<C: Ring + ToComplex> Poly<C> {
    /// Numeric value at `point`, accumulating each variable's powers by
    /// repeated multiplication (one power table per variable).
    pub fn eval(&self, point: &[ComplexF]) -> Result<ComplexF> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: point.len() });
        }
        let max_exp: Vec<u16> = (0..self.arity)
            .map(|i| self.terms.iter().map(|(m, _)| m.exponents()[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<ComplexF>> = point
            .iter()
            .zip(&max_exp)
            .map(|(&x, &e)| {
                let mut p = Vec::with_capacity(e as usize + 1);
                let mut acc = ComplexF::new(1.0, 0.0);
                p.push(acc);
                for _ in 0..e {
                    acc *= x;
                    p.push(acc);
                }
                p
            })
            .collect();
        let mut sum = ComplexF::new(0.0, 0.0);
        // Sum from the smallest terms upwards.
        for (m, c) in self.terms.iter().rev() {
            let mut t = c.to_complex_value()?;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= powers[i][e as usize];
                }
            }
            sum += t;
        }
        Ok(sum)
    }
}

/// Free-function form of [`Poly::eval`].
pub fn eval_poly(p: &MultiPoly, point: &[ComplexF]) -> Result<ComplexF> {
    p.eval(point)
}

pub fn poly_add(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.add(q)
}

pub fn poly_mul(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.mul(q)
}
