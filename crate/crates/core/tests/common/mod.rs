//! Oracles, strategies and property bodies shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use ti_mps::constructions::{canonicalize, check_unit_rep, UnitRepSpec};
use ti_mps::mps::{conjugate_rep, verify, AnyRep, ExactRep, Matrix, MpsRep};
use ti_mps::polynomials::{
    buchberger, contains_one, is_groebner_basis, reduce, GroebnerConfig, Monomial, MonomialOrder, MultiPoly,
};
use ti_mps::scalars::{ComplexF, GaussianRational, Ring};
use ti_mps::states::{canonical_bits, scale_state, Necklace, TIState};

pub fn gr(a: i64) -> GaussianRational {
    GaussianRational::from_int(a)
}

/// Trace of the plain left-to-right product of the matrices spelled by
/// `bits`, starting from the identity.
pub fn naive_trace(rep: &ExactRep, bits: &[u8]) -> GaussianRational {
    let mut acc = Matrix::<GaussianRational>::identity(rep.d());
    for &b in bits {
        acc = acc.mul(rep.matrix(b));
    }
    acc.trace()
}

pub fn bits_of(mask: u64, n: usize) -> Vec<u8> {
    (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect()
}

/// The state of a rep by expanding every one of the `2^n` strings.
pub fn brute_state(rep: &ExactRep, n: usize) -> TIState {
    let mut pairs = std::collections::BTreeMap::new();
    for mask in 0..1u64 << n {
        let bits = bits_of(mask, n);
        pairs.entry(canonical_bits(&bits)).or_insert_with(|| naive_trace(rep, &bits));
    }
    TIState::from_pairs(n, pairs).unwrap()
}

/// Necklace representatives by listing all rotations of every string.
pub fn brute_necklaces(n: usize) -> BTreeSet<Vec<u8>> {
    (0..1u64 << n)
        .map(|mask| {
            let bits = bits_of(mask, n);
            (0..n.max(1)).map(|r| [&bits[r..], &bits[..r]].concat()).min().unwrap()
        })
        .collect()
}

pub fn entry() -> impl Strategy<Value = GaussianRational> {
    (-2i64..=2, -1i64..=1).prop_map(|(re, im)| GaussianRational::from_fracs(re, 1, im, 1))
}

pub fn sparse_entry() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![Just(gr(-1)), Just(gr(0)), Just(gr(1)), Just(GaussianRational::i())]
}

pub fn matrix(d: usize, e: impl Strategy<Value = GaussianRational>) -> impl Strategy<Value = Matrix<GaussianRational>> {
    proptest::collection::vec(e, d * d).prop_map(move |v| Matrix::from_fn(d, |i, j| v[i * d + j].clone()))
}

pub fn exact_rep() -> impl Strategy<Value = ExactRep> {
    (1usize..=3).prop_flat_map(|d| (matrix(d, entry()), matrix(d, entry())).prop_map(|(a, b)| MpsRep::new(a, b).unwrap()))
}

pub fn bit_string(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..=1, 1..=max_len)
}

/// `(A_0, λ, j, k)` with `d ≤ 3`, entries of `A_0` in `{−1, 0, 1, i}`.
pub fn unit_spec() -> impl Strategy<Value = UnitRepSpec> {
    let lambda = prop_oneof![
        Just(gr(1)),
        Just(gr(-1)),
        Just(GaussianRational::i()),
        Just(gr(2)),
        Just(GaussianRational::from_frac(1, 2))
    ];
    (2usize..=3).prop_flat_map(move |d| {
        (matrix(d, sparse_entry()), lambda.clone(), 0..d, 1..d)
            .prop_map(move |(a0, l, j, off)| UnitRepSpec::new(a0, l, j, (j + off) % d).unwrap())
    })
}

/// Cyclic rotations leave coefficients unchanged, and the pooled evaluator
/// agrees with the naive product.
pub fn prop_trace_cyclicity(rep: &ExactRep, bits: &[u8], shift: usize) -> Result<(), TestCaseError> {
    let r = shift % bits.len();
    let rotated = [&bits[r..], &bits[..r]].concat();
    let direct = naive_trace(rep, bits);
    prop_assert_eq!(naive_trace(rep, &rotated), direct.clone());
    prop_assert_eq!(rep.eval_bits(bits), direct);
    Ok(())
}

/// Scaling both matrices by `μ` multiplies every coefficient by `μ^n`.
pub fn prop_scaling_law(rep: &ExactRep, mu: &GaussianRational, n: usize) -> Result<(), TestCaseError> {
    let scaled = rep.scale_rep(mu);
    let expect = scale_state(&brute_state(rep, n), &mu.pow(n as u32));
    prop_assert_eq!(scaled.to_state(n, 24).unwrap(), expect);
    Ok(())
}

/// Random diagonally dominant gauge `S` with entries from `seed`.
pub fn gauge_matrix(d: usize, raw: &[(f64, f64)]) -> Matrix<ComplexF> {
    Matrix::from_fn(d, |i, j| {
        let (re, im) = raw[i * d + j];
        let z = ComplexF::new(re, im);
        if i == j {
            z + ComplexF::new(2.0 * d as f64, 0.0)
        } else {
            z
        }
    })
}

/// `S A_i S⁻¹` represents the same state within `1e-8`.
pub fn prop_gauge_invariance(rep: &ExactRep, raw: &[(f64, f64)], n: usize) -> Result<(), TestCaseError> {
    let s = gauge_matrix(rep.d(), raw);
    let conj = conjugate_rep(&rep.to_floating().unwrap(), &s, 1e8).unwrap();
    let report = verify(&conj, &rep.to_state(n, 24).unwrap(), 1e-8).unwrap();
    prop_assert!(report.passed, "{}", report);
    Ok(())
}

pub fn small_poly(arity: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (proptest::collection::vec(0u16..=2, arity), -3i64..=3);
    proptest::collection::vec(term, 1..=3).prop_map(move |terms| {
        MultiPoly::from_terms(arity, terms.into_iter().map(|(e, c)| (Monomial::new(&e), gr(c)))).unwrap()
    })
}

pub fn small_system() -> impl Strategy<Value = (Vec<MultiPoly>, MonomialOrder)> {
    (2usize..=3).prop_flat_map(|arity| {
        (
            proptest::collection::vec(small_poly(arity), 1..=3),
            prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex)],
        )
    })
}

/// Every S-polynomial of the computed basis reduces to zero, each input
/// reduces to zero, and recomputing from the basis returns it unchanged.
pub fn prop_groebner(gens: &[MultiPoly], order: MonomialOrder) -> Result<(), TestCaseError> {
    let cfg = GroebnerConfig { order, budget: Some(2_000_000) };
    let Ok(gb) = buchberger(gens, &cfg) else {
        // Over budget: nothing to check.
        return Ok(());
    };
    if gb.is_empty() {
        // The zero ideal.
        prop_assert!(gens.iter().all(|g| g.is_zero()));
        return Ok(());
    }
    prop_assert!(is_groebner_basis(&gb, order).unwrap());
    for g in gens {
        prop_assert!(reduce(g, &gb, order).unwrap().is_zero());
    }
    prop_assert_eq!(buchberger(&gb, &cfg).unwrap(), gb.clone());
    if contains_one(&gb) {
        prop_assert_eq!(gb.len(), 1);
    }
    Ok(())
}

/// The canonical rep of `spec` at length `n` has exactly the coefficients
/// of `spec`'s own rep. When `ω` is irrational the all-zero class is
/// compared in `Q(i)[ω]/(ω^n − Tr((B_0/λ)^n))`.
pub fn prop_canonical_round_trip(spec: &UnitRepSpec, n: usize) -> Result<(), TestCaseError> {
    let input = brute_state(&spec.to_rep(), n);
    let c = canonicalize(spec, n).unwrap();
    match &c.rep {
        AnyRep::Exact(rep) => {
            prop_assert_eq!(rep.d(), n);
            prop_assert_eq!(brute_state(rep, n), input);
        }
        AnyRep::Floating(_) => {
            let sym = c.params.symbolic_rep();
            let modulus = MultiPoly::var(1, 0).pow(n as u32).sub(&MultiPoly::constant(1, c.params.omega_pow_n.clone())).unwrap();
            for mask in 0..1u64 << n {
                let bits = bits_of(mask, n);
                let k = canonical_bits(&bits);
                let value = reduce(&sym.eval_bits(&bits), std::slice::from_ref(&modulus), MonomialOrder::Grevlex).unwrap();
                prop_assert_eq!(value.as_constant(), Some(input.coefficient(&k)), "class {}", k);
            }
        }
    }
    Ok(())
}

/// The unit-rep check accepts the rep's own state and, after perturbing a
/// single sparse class, rejects exactly that equation.
pub fn prop_unit_check(spec: &UnitRepSpec, n: usize, pick: usize) -> Result<(), TestCaseError> {
    let s = brute_state(&spec.to_rep(), n);
    let report = check_unit_rep(spec, &s).unwrap();
    prop_assert!(report.passed, "{}", report);
    let classes: Vec<Necklace> = report.equations.iter().map(|e| e.necklace.clone()).collect();
    let target = classes[pick % classes.len()].clone();
    let mut perturbed = s.clone();
    perturbed.set(target.clone(), s.coefficient(&target).add_ref(&gr(1))).unwrap();
    let bad: Vec<Necklace> = check_unit_rep(spec, &perturbed).unwrap().violated_equations().map(|e| e.necklace.clone()).collect();
    prop_assert_eq!(bad, vec![target]);
    Ok(())
}
