//! Multivariate division and Buchberger's algorithm.
//!
//! The engine is generic over the coefficient field and over a compile-time
//! term order. Pairs are selected by the sugar strategy and pruned with the
//! Gebauer–Möller installation of Buchberger's product and chain criteria.
//! Every polynomial operation is charged against a budget counted in
//! monomial operations (one per term produced while subtracting a multiple
//! of a reducer), so hopeless inputs end in [`Error::BudgetExceeded`] rather
//! than an unbounded loop.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::polynomials::monomial::{Grevlex, Lex, Monomial, MonomialOrder, TermOrder};
use crate::polynomials::poly::{MultiPoly, Poly};
use crate::scalars::{Field, GaussianRational, Rational, Ring};

/// Default budget: 10^7 monomial operations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub order: MonomialOrder,
    /// Maximum number of monomial operations, `None` for unlimited.
    pub budget: Option<u64>,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { order: MonomialOrder::Grevlex, budget: Some(DEFAULT_BUDGET) }
    }
}

impl GroebnerConfig {
    pub fn with_order(order: MonomialOrder) -> Self {
        GroebnerConfig { order, ..Default::default() }
    }

    pub fn unlimited(order: MonomialOrder) -> Self {
        GroebnerConfig { order, budget: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct GroebnerStats {
    /// Monomial operations charged to the budget.
    pub monomial_ops: u64,
    /// S-pairs that were reduced.
    pub pairs_reduced: u64,
    /// S-pairs discarded by the product or chain criterion.
    pub pairs_skipped: u64,
    /// Reductions that ended in zero.
    pub zero_reductions: u64,
    /// Size of the final reduced basis.
    pub basis_size: usize,
}

struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    fn charge(&mut self, n: u64) -> Result<()> {
        self.used += n;
        match self.limit {
            Some(l) if self.used > l => Err(Error::BudgetExceeded { budget: l }),
            _ => Ok(()),
        }
    }
}

/// Monomial with an `Ord` impl given by `O` (descending heap = leading
/// term first).
struct Key<O> {
    m: Monomial,
    _o: PhantomData<O>,
}

impl<O: TermOrder> PartialEq for Key<O> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl<O: TermOrder> Eq for Key<O> {}
impl<O: TermOrder> PartialOrd for Key<O> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<O: TermOrder> Ord for Key<O> {
    fn cmp(&self, other: &Self) -> Ordering {
        O::cmp(&self.m, &other.m)
    }
}

/// Polynomial with terms sorted descending under `O`.
#[derive(Clone)]
struct OPoly<C> {
    terms: Vec<(Monomial, C)>,
    sugar: u32,
    mask: u64,
}

impl<C: Field> OPoly<C> {
    fn from_terms<O: TermOrder>(mut terms: Vec<(Monomial, C)>, sugar: u32) -> Self {
        terms.sort_by(|a, b| O::cmp(&b.0, &a.0));
        let mask = terms.first().map(|t| t.0.support_mask()).unwrap_or(0);
        OPoly { terms, sugar, mask }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let lc = &self.terms[0].1;
        if lc.is_one() {
            return;
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        for t in &mut self.terms {
            t.1 = t.1.mul_ref(&inv);
        }
    }
}

/// Accumulator for a polynomial under reduction: a max-heap of monomials
/// plus a coefficient map. Stale heap entries are skipped on pop.
struct Accumulator<O, C> {
    heap: BinaryHeap<Key<O>>,
    coeffs: HashMap<Monomial, C>,
}

impl<O: TermOrder, C: Field> Accumulator<O, C> {
    fn new() -> Self {
        Accumulator { heap: BinaryHeap::new(), coeffs: HashMap::new() }
    }

    fn add(&mut self, m: Monomial, c: C) {
        match self.coeffs.entry(m) {
            Entry::Occupied(mut e) => {
                let v = e.get().add_ref(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    let m = e.key().clone();
                    e.insert(c);
                    self.heap.push(Key { m, _o: PhantomData });
                }
            }
        }
    }

    /// Adds `-(q·shift)·tail` where `tail` is a reducer without its leading
    /// term.
    fn sub_multiple(&mut self, shift: &Monomial, q: &C, tail: &[(Monomial, C)]) {
        for (t, a) in tail {
            self.add(t.mul(shift), q.mul_ref(a).neg_ref());
        }
    }

    fn pop(&mut self) -> Option<(Monomial, C)> {
        while let Some(Key { m, .. }) = self.heap.pop() {
            if let Some(c) = self.coeffs.remove(&m) {
                return Some((m, c));
            }
        }
        None
    }
}

fn find_reducer<'a, C: Field>(m: &Monomial, basis: &[&'a OPoly<C>]) -> Option<&'a OPoly<C>> {
    let mask = m.support_mask();
    basis.iter().copied().find(|g| g.mask & !mask == 0 && g.lm().divides(m))
}

/// Full normal form of the accumulated polynomial with respect to `basis`.
/// Returns the remainder terms in descending order and the sugar growth.
fn normal_form<O: TermOrder, C: Field>(
    mut acc: Accumulator<O, C>,
    basis: &[&OPoly<C>],
    top_only: bool,
    budget: &mut Budget,
    mut sugar: u32,
) -> Result<(Vec<(Monomial, C)>, u32)> {
    let mut rem: Vec<(Monomial, C)> = Vec::new();
    while let Some((m, c)) = acc.pop() {
        if top_only && !rem.is_empty() {
            rem.push((m, c));
            continue;
        }
        match find_reducer(&m, basis) {
            Some(g) => {
                let shift = m.div(g.lm()).expect("divisible");
                let lc = &g.terms[0].1;
                let q = if lc.is_one() { c } else { c.mul_ref(&lc.inv().expect("nonzero lc")) };
                budget.charge(g.terms.len() as u64)?;
                sugar = sugar.max(shift.degree() + g.sugar);
                acc.sub_multiple(&shift, &q, &g.terms[1..]);
            }
            None => rem.push((m, c)),
        }
    }
    Ok((rem, sugar))
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    sugar: u32,
    lcm_deg: u32,
}

struct Engine<O, C> {
    polys: Vec<OPoly<C>>,
    /// Indices of the current (minimal) basis.
    active: Vec<usize>,
    pairs: Vec<(Pair, Monomial)>,
    budget: Budget,
    stats: GroebnerStats,
    _o: PhantomData<O>,
}

impl<O: TermOrder, C: Field> Engine<O, C> {
    fn new(budget: Option<u64>) -> Self {
        Engine {
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            budget: Budget { limit: budget, used: 0 },
            stats: GroebnerStats::default(),
            _o: PhantomData,
        }
    }

    fn pair_info(&self, i: usize, j: usize) -> (Pair, Monomial) {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        let lcm = a.lm().lcm(b.lm());
        let d = lcm.degree();
        let sugar = (a.sugar + d - a.lm().degree()).max(b.sugar + d - b.lm().degree());
        (Pair { i, j, sugar, lcm_deg: d }, lcm)
    }

    /// Gebauer–Möller update after appending `h` (index `hi`).
    fn update(&mut self, hi: usize) {
        let h_lm = self.polys[hi].lm().clone();
        let candidates: Vec<(Pair, Monomial)> = self.active.iter().map(|&g| self.pair_info(g, hi)).collect();

        // Chain criterion among the new pairs.
        let mut kept: Vec<(Pair, Monomial, bool)> = Vec::new();
        for (idx, (p, lcm)) in candidates.iter().enumerate() {
            let coprime = self.polys[p.i].lm().is_coprime(&h_lm);
            let dominated_later = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(lcm));
            let dominated_kept = kept.iter().any(|(_, l2, _)| l2.divides(lcm));
            if coprime || !(dominated_later || dominated_kept) {
                kept.push((*p, lcm.clone(), coprime));
            } else {
                self.stats.pairs_skipped += 1;
            }
        }
        // Product criterion.
        let mut fresh = Vec::new();
        for (p, lcm, coprime) in kept {
            if coprime {
                self.stats.pairs_skipped += 1;
            } else {
                fresh.push((p, lcm));
            }
        }
        // Chain criterion on old pairs.
        let polys = &self.polys;
        let before = self.pairs.len();
        self.pairs.retain(|(p, lcm)| {
            let a = polys[p.i].lm();
            let b = polys[p.j].lm();
            !(h_lm.divides(lcm) && a.lcm(&h_lm) != *lcm && b.lcm(&h_lm) != *lcm)
        });
        self.stats.pairs_skipped += (before - self.pairs.len()) as u64;
        self.pairs.extend(fresh);
        self.active.retain(|&g| !h_lm.divides(polys[g].lm()));
        self.active.push(hi);
    }

    fn select_pair(&mut self) -> Option<(Pair, Monomial)> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, la) = &self.pairs[k];
            let (b, lb) = &self.pairs[best];
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then(a.lcm_deg.cmp(&b.lcm_deg))
                .then_with(|| O::cmp(la, lb));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Reduces and installs a polynomial. Returns `true` when it reduced to
    /// a nonzero constant.
    fn add_poly(&mut self, acc: Accumulator<O, C>, sugar: u32) -> Result<bool> {
        let basis: Vec<&OPoly<C>> = self.active.iter().map(|&i| &self.polys[i]).collect();
        let (rem, sugar) = normal_form(acc, &basis, false, &mut self.budget, sugar)?;
        if rem.is_empty() {
            self.stats.zero_reductions += 1;
            return Ok(false);
        }
        let mut h = OPoly::from_terms::<O>(rem, sugar);
        h.make_monic();
        let is_unit = h.lm().is_one();
        self.polys.push(h);
        let hi = self.polys.len() - 1;
        self.update(hi);
        Ok(is_unit)
    }

    fn run(mut self, gens: Vec<Vec<(Monomial, C)>>, arity: usize) -> Result<(Vec<OPoly<C>>, GroebnerStats)> {
        let mut gens: Vec<OPoly<C>> = gens
            .into_iter()
            .filter(|t| !t.is_empty())
            .map(|t| {
                let sugar = t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
                OPoly::from_terms::<O>(t, sugar)
            })
            .collect();
        gens.sort_by(|a, b| O::cmp(a.lm(), b.lm()));
        for g in gens {
            let mut acc = Accumulator::<O, C>::new();
            let sugar = g.sugar;
            for (m, c) in g.terms {
                acc.add(m, c);
            }
            if self.add_poly(acc, sugar)? {
                return Ok((vec![unit(arity)], self.finish_stats(1)));
            }
        }
        while let Some((pair, lcm)) = self.select_pair() {
            self.stats.pairs_reduced += 1;
            let (a, b) = (&self.polys[pair.i], &self.polys[pair.j]);
            let sa = lcm.div(a.lm()).expect("lcm divisible");
            let sb = lcm.div(b.lm()).expect("lcm divisible");
            self.budget.charge((a.terms.len() + b.terms.len()) as u64)?;
            let mut acc = Accumulator::<O, C>::new();
            for (t, c) in &a.terms[1..] {
                acc.add(t.mul(&sa), c.clone());
            }
            for (t, c) in &b.terms[1..] {
                acc.add(t.mul(&sb), c.neg_ref());
            }
            if self.add_poly(acc, pair.sugar)? {
                return Ok((vec![unit(arity)], self.finish_stats(1)));
            }
        }
        // Interreduce the minimal basis into the reduced basis.
        let mut basis: Vec<OPoly<C>> = self.active.iter().map(|&i| self.polys[i].clone()).collect();
        basis.sort_by(|a, b| O::cmp(a.lm(), b.lm()));
        let mut reduced = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<&OPoly<C>> = basis.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g).collect();
            let mut acc = Accumulator::<O, C>::new();
            for (m, c) in &basis[k].terms[1..] {
                acc.add(m.clone(), c.clone());
            }
            let (tail, _) = normal_form(acc, &others, false, &mut self.budget, 0)?;
            let mut terms = vec![basis[k].terms[0].clone()];
            terms.extend(tail);
            reduced.push(OPoly { terms, sugar: basis[k].sugar, mask: basis[k].mask });
        }
        let n = reduced.len();
        Ok((reduced, self.finish_stats(n)))
    }

    fn finish_stats(&mut self, basis_size: usize) -> GroebnerStats {
        self.stats.monomial_ops = self.budget.used;
        self.stats.basis_size = basis_size;
        self.stats.clone()
    }
}

fn unit<C: Field>(arity: usize) -> OPoly<C> {
    OPoly { terms: vec![(Monomial::one(arity), C::one())], sugar: 0, mask: 0 }
}

fn check_uniform<C: Ring>(polys: &[&Poly<C>]) -> Result<usize> {
    let arity = polys
        .first()
        .map(|p| p.arity())
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
    for p in polys {
        if p.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: p.arity() });
        }
    }
    Ok(arity)
}

fn to_poly<C: Field>(arity: usize, p: OPoly<C>) -> Poly<C> {
    Poly::from_terms(arity, p.terms).expect("uniform arity")
}

fn run_engine<O: TermOrder, C: Field>(
    gens: &[&Poly<C>],
    arity: usize,
    budget: Option<u64>,
) -> Result<(Vec<Poly<C>>, GroebnerStats)> {
    let raw = gens.iter().map(|p| p.terms().to_vec()).collect();
    let (basis, stats) = Engine::<O, C>::new(budget).run(raw, arity)?;
    Ok((basis.into_iter().map(|p| to_poly(arity, p)).collect(), stats))
}

/// Reduced Gröbner basis over an arbitrary coefficient field, with
/// statistics. Leading coefficients are normalized to one and the basis is
/// sorted by ascending leading monomial.
pub fn buchberger_generic<C: Field>(gens: &[Poly<C>], cfg: &GroebnerConfig) -> Result<(Vec<Poly<C>>, GroebnerStats)> {
    let refs: Vec<&Poly<C>> = gens.iter().collect();
    let arity = check_uniform(&refs)?;
    let nonzero: Vec<&Poly<C>> = refs.into_iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok((Vec::new(), GroebnerStats::default()));
    }
    match cfg.order {
        MonomialOrder::Grevlex => run_engine::<Grevlex, C>(&nonzero, arity, cfg.budget),
        MonomialOrder::Lex => run_engine::<Lex, C>(&nonzero, arity, cfg.budget),
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, with statistics.
///
/// When every coefficient is real the computation runs over `Q`: the
/// reduced basis of an ideal generated over a subfield has coefficients in
/// that subfield, so the result is identical and considerably cheaper.
pub fn buchberger_with_stats(gens: &[MultiPoly], cfg: &GroebnerConfig) -> Result<(Vec<MultiPoly>, GroebnerStats)> {
    let all_real = gens.iter().all(|p| p.terms().iter().all(|(_, c)| c.is_real()));
    if all_real {
        let rational: Vec<Poly<Rational>> = gens.iter().map(|p| p.map_coeffs(|c| c.re().clone())).collect();
        let (basis, stats) = buchberger_generic(&rational, cfg)?;
        let back = basis
            .into_iter()
            .map(|p| p.map_coeffs(|c| GaussianRational::from_real(c.clone())))
            .collect();
        Ok((back, stats))
    } else {
        buchberger_generic(gens, cfg)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `cfg`.
pub fn buchberger(gens: &[MultiPoly], cfg: &GroebnerConfig) -> Result<Vec<MultiPoly>> {
    buchberger_with_stats(gens, cfg).map(|(b, _)| b)
}

/// Normal form of `p` with respect to `basis`: the remainder of
/// multivariate division, with no monomial divisible by any leading
/// monomial of the basis.
pub fn reduce_generic<C: Field>(p: &Poly<C>, basis: &[Poly<C>], order: MonomialOrder) -> Result<Poly<C>> {
    let mut all: Vec<&Poly<C>> = vec![p];
    all.extend(basis.iter());
    let arity = check_uniform(&all)?;
    if basis.iter().any(|g| g.is_zero()) {
        return Err(Error::InvalidArgument("zero polynomial in division basis".into()));
    }
    fn go<O: TermOrder, C: Field>(p: &Poly<C>, basis: &[Poly<C>]) -> Result<Vec<(Monomial, C)>> {
        let ob: Vec<OPoly<C>> = basis.iter().map(|g| OPoly::from_terms::<O>(g.terms().to_vec(), 0)).collect();
        let refs: Vec<&OPoly<C>> = ob.iter().collect();
        let mut acc = Accumulator::<O, C>::new();
        for (m, c) in p.terms() {
            acc.add(m.clone(), c.clone());
        }
        let mut budget = Budget { limit: None, used: 0 };
        Ok(normal_form(acc, &refs, false, &mut budget, 0)?.0)
    }
    let terms = match order {
        MonomialOrder::Grevlex => go::<Grevlex, C>(p, basis)?,
        MonomialOrder::Lex => go::<Lex, C>(p, basis)?,
    };
    Poly::from_terms(arity, terms)
}

/// Normal form over `Q(i)`; see [`reduce_generic`].
pub fn reduce(p: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> Result<MultiPoly> {
    reduce_generic(p, basis, order)
}

/// S-polynomial of two nonzero polynomials under `order`.
pub fn s_polynomial<C: Field>(f: &Poly<C>, g: &Poly<C>, order: MonomialOrder) -> Result<Poly<C>> {
    let (fm, fc) = f.leading_term(order).ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    let (gm, gc) = g.leading_term(order).ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.div(fm).expect("divides"), &fc.inv().expect("nonzero"));
    let b = g.mul_term(&lcm.div(gm).expect("divides"), &gc.inv().expect("nonzero"));
    a.sub(&b)
}

/// `true` iff the (reduced) basis is `{c}` for a nonzero constant `c`,
/// i.e. the ideal is the whole ring and the system has no common zero.
pub fn contains_one<C: Ring>(basis: &[Poly<C>]) -> bool {
    basis.iter().any(|p| !p.is_zero() && p.is_constant())
}

/// Checks the Gröbner property directly: every S-polynomial of the basis
/// reduces to zero.
pub fn is_groebner_basis<C: Field>(basis: &[Poly<C>], order: MonomialOrder) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order)?;
            if !reduce_generic(&s, basis, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(arity: usize, i: usize) -> MultiPoly {
        MultiPoly::var(arity, i)
    }
    fn c(arity: usize, num: i64, den: i64) -> MultiPoly {
        MultiPoly::constant(arity, GaussianRational::from_frac(num, den))
    }

    #[test]
    fn reduce_by_single_variable() {
        let x = var(2, 0);
        let y = var(2, 1);
        let xx = x.mul(&x).unwrap();
        assert!(reduce(&xx, std::slice::from_ref(&x), MonomialOrder::Grevlex).unwrap().is_zero());
        assert_eq!(reduce(&xx.add(&y).unwrap(), std::slice::from_ref(&x), MonomialOrder::Grevlex).unwrap(), y);
    }

    #[test]
    fn reduce_by_substitution() {
        // x^2 y + 1 mod (x - y) -> y^3 + 1
        let x = var(2, 0);
        let y = var(2, 1);
        let p = x.mul(&x).unwrap().mul(&y).unwrap().add(&c(2, 1, 1)).unwrap();
        let r = reduce(&p, &[x.sub(&y).unwrap()], MonomialOrder::Grevlex).unwrap();
        assert_eq!(r, y.pow(3).add(&c(2, 1, 1)).unwrap());
    }

    #[test]
    fn basis_of_variables() {
        let cfg = GroebnerConfig::default();
        let g = buchberger(&[var(2, 0), var(2, 1)], &cfg).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&var(2, 0)) && g.contains(&var(2, 1)));
        assert!(!contains_one(&g));
    }

    #[test]
    fn inconsistent_system() {
        let x = var(1, 0);
        let g = buchberger(&[x.clone(), x.sub(&c(1, 1, 1)).unwrap()], &GroebnerConfig::default()).unwrap();
        assert_eq!(g, vec![MultiPoly::one(1)]);
        assert!(contains_one(&g));
        assert!(contains_one(&[MultiPoly::one(3)]));
    }

    #[test]
    fn circle_and_line() {
        // {x^2 + y^2 - 1, x - y} -> {x - y, y^2 - 1/2}
        let x = var(2, 0);
        let y = var(2, 1);
        let circle = x.pow(2).add(&y.pow(2)).unwrap().sub(&c(2, 1, 1)).unwrap();
        let line = x.sub(&y).unwrap();
        let g = buchberger(&[circle, line.clone()], &GroebnerConfig::default()).unwrap();
        assert_eq!(g, vec![line, y.pow(2).sub(&c(2, 1, 2)).unwrap()]);
        assert!(is_groebner_basis(&g, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn gaussian_coefficients() {
        // x^2 + 1 and x - i share the root i, x + i does not.
        let x = var(1, 0);
        let i = MultiPoly::constant(1, GaussianRational::i());
        let f = x.pow(2).add(&c(1, 1, 1)).unwrap();
        let g = buchberger(&[f.clone(), x.sub(&i).unwrap()], &GroebnerConfig::default()).unwrap();
        assert_eq!(g, vec![x.sub(&i).unwrap()]);
        let h = buchberger(&[f, x.add(&i).unwrap(), x.sub(&i).unwrap()], &GroebnerConfig::default()).unwrap();
        assert!(contains_one(&h));
    }

    #[test]
    fn lex_elimination() {
        // lex with x > y: {x^2 + y^2 - 1, x - y} -> {y^2 - 1/2, x - y}
        let x = var(2, 0);
        let y = var(2, 1);
        let circle = x.pow(2).add(&y.pow(2)).unwrap().sub(&c(2, 1, 1)).unwrap();
        let g = buchberger(&[circle, x.sub(&y).unwrap()], &GroebnerConfig::with_order(MonomialOrder::Lex)).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.contains(&y.pow(2).sub(&c(2, 1, 2)).unwrap()));
        assert!(is_groebner_basis(&g, MonomialOrder::Lex).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        // cyclic-4 needs far more than 10 operations
        let v: Vec<MultiPoly> = (0..4).map(|i| var(4, i)).collect();
        let sum = |ps: Vec<MultiPoly>| ps.into_iter().reduce(|a, b| a.add(&b).unwrap()).unwrap();
        let prod = |idx: &[usize]| idx.iter().map(|&i| v[i].clone()).reduce(|a, b| a.mul(&b).unwrap()).unwrap();
        let gens = vec![
            sum((0..4).map(|i| v[i].clone()).collect()),
            sum((0..4).map(|i| prod(&[i, (i + 1) % 4])).collect()),
            sum((0..4).map(|i| prod(&[i, (i + 1) % 4, (i + 2) % 4])).collect()),
            prod(&[0, 1, 2, 3]).sub(&c(4, 1, 1)).unwrap(),
        ];
        let cfg = GroebnerConfig { order: MonomialOrder::Grevlex, budget: Some(10) };
        assert!(matches!(buchberger(&gens, &cfg), Err(Error::BudgetExceeded { budget: 10 })));
        let g = buchberger(&gens, &GroebnerConfig::default()).unwrap();
        assert!(is_groebner_basis(&g, MonomialOrder::Grevlex).unwrap());
        for f in &gens {
            assert!(reduce(f, &g, MonomialOrder::Grevlex).unwrap().is_zero());
        }
    }
}
