//! Translation-invariant states keyed by necklace classes.
//!
//! A TI state of order `n` is stored as a sparse map from necklaces (binary
//! strings up to cyclic rotation) to exact coefficients. Rotation invariance
//! of the coefficient tensor holds by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{principal_root_exact, rational_sqrt, GaussianRational, Ring};

/// Default upper bound on the chain length for necklace enumeration.
pub const DEFAULT_NECKLACE_CAP: usize = 24;

/// Canonical representative of a binary string under cyclic rotation: its
/// lexicographically minimal rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    bits: Vec<u8>,
}

impl Necklace {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of ones (Hamming weight).
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// The all-zero necklace of length `n`.
    pub fn zeros(n: usize) -> Self {
        Necklace { bits: vec![0; n] }
    }

    /// The single-one necklace `0…01` of length `n`.
    pub fn single_one(n: usize) -> Self {
        let mut bits = vec![0; n];
        bits[n - 1] = 1;
        Necklace { bits }
    }

    /// True when two ones are cyclically adjacent.
    pub fn has_adjacent_ones(&self) -> bool {
        let n = self.bits.len();
        if n == 1 {
            // a lone 1 is adjacent to itself across the boundary
            return self.bits[0] == 1;
        }
        (0..n).any(|k| self.bits[k] == 1 && self.bits[(k + 1) % n] == 1)
    }

    /// For a necklace with at least one 1, the gap lengths `(p_1, …, p_l)`
    /// of zero runs following each 1, read cyclically starting at the
    /// first 1.
    pub fn gaps(&self) -> Vec<usize> {
        let n = self.bits.len();
        let Some(start) = self.bits.iter().position(|&b| b == 1) else {
            return Vec::new();
        };
        let mut gaps = Vec::new();
        let mut run = 0;
        for k in 1..=n {
            if self.bits[(start + k) % n] == 1 {
                gaps.push(run);
                run = 0;
            } else {
                run += 1;
            }
        }
        gaps
    }

    /// Complements every bit (the 0 ↔ 1 interchange).
    pub fn flipped(&self) -> Necklace {
        canonical_bits(&self.bits.iter().map(|b| 1 - b).collect::<Vec<_>>())
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace({self})")
    }
}

impl FromStr for Necklace {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        canonical_rotation(s)
    }
}

impl Serialize for Necklace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Necklace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Lexicographically minimal rotation of a nonempty 0/1 slice.
pub fn canonical_bits(bits: &[u8]) -> Necklace {
    let n = bits.len();
    let mut best = 0;
    for start in 1..n {
        for k in 0..n {
            let a = bits[(start + k) % n];
            let b = bits[(best + k) % n];
            if a != b {
                if a < b {
                    best = start;
                }
                break;
            }
        }
    }
    Necklace { bits: (0..n).map(|k| bits[(best + k) % n]).collect() }
}

/// Parses a string of `0`/`1` characters and returns its minimal rotation.
pub fn canonical_rotation(bits: &str) -> Result<Necklace> {
    let parsed: Vec<u8> = bits
        .trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::Parse(format!("invalid bit '{c}' in '{bits}'"))),
        })
        .collect::<Result<_>>()?;
    if parsed.is_empty() {
        return Err(Error::InvalidArgument("empty bit string".into()));
    }
    Ok(canonical_bits(&parsed))
}

/// All necklaces of length `n` in lexicographic order, with the default cap.
pub fn enumerate_necklaces(n: usize) -> Result<Vec<Necklace>> {
    enumerate_necklaces_capped(n, DEFAULT_NECKLACE_CAP)
}

/// All binary necklaces of length `n`, sorted, each exactly once.
///
/// Uses the Fredricksen–Kessler–Maiorana prenecklace recursion, which
/// visits necklaces directly in lexicographic order.
pub fn enumerate_necklaces_capped(n: usize, cap: usize) -> Result<Vec<Necklace>> {
    if n == 0 {
        return Err(Error::InvalidArgument("necklace length must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::NecklaceCap { n, cap });
    }
    let mut out = Vec::new();
    let mut a = vec![0u8; n + 1];
    fkm(1, 1, n, &mut a, &mut out);
    Ok(out)
}

fn fkm(t: usize, p: usize, n: usize, a: &mut [u8], out: &mut Vec<Necklace>) {
    if t > n {
        if n.is_multiple_of(p) {
            out.push(Necklace { bits: a[1..=n].to_vec() });
        }
        return;
    }
    a[t] = a[t - p];
    fkm(t + 1, p, n, a, out);
    if a[t - p] == 0 {
        a[t] = 1;
        fkm(t + 1, t, n, a, out);
    }
}

fn totient(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Number of binary necklaces of length `n`: `(1/n) Σ_{p | n} φ(p) 2^{n/p}`.
pub fn polya_count(n: usize) -> BigUint {
    assert!(n >= 1, "polya_count requires n >= 1");
    let mut sum = BigUint::zero();
    for p in (1..=n).filter(|p| n.is_multiple_of(*p)) {
        sum += BigUint::from(totient(p as u64)) << (n / p);
    }
    let n = BigUint::from(n);
    debug_assert!((&sum % &n).is_zero());
    sum / n
}

/// A translation-invariant state of order `n` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TIState {
    n: usize,
    coeffs: BTreeMap<Necklace, GaussianRational>,
}

impl TIState {
    pub fn zero(n: usize) -> Self {
        TIState { n, coeffs: BTreeMap::new() }
    }

    /// Builds a state from `(necklace, value)` pairs. Every necklace must
    /// have length `n`; zero values are dropped; repeated classes are an
    /// error.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Necklace, GaussianRational)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("state order must be at least 1".into()));
        }
        let mut coeffs = BTreeMap::new();
        for (k, v) in pairs {
            if k.len() != n {
                return Err(Error::Shape(format!("necklace {k} has length {}, expected {n}", k.len())));
            }
            if coeffs.contains_key(&k) {
                return Err(Error::InvalidArgument(format!("duplicate necklace class {k}")));
            }
            coeffs.insert(k, v);
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(TIState { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero coefficients by necklace class.
    pub fn coeffs(&self) -> &BTreeMap<Necklace, GaussianRational> {
        &self.coeffs
    }

    /// Coefficient of the class, zero when absent.
    pub fn coefficient(&self, k: &Necklace) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Coefficient of an arbitrary bit string (any rotation).
    pub fn coefficient_of_bits(&self, bits: &[u8]) -> GaussianRational {
        self.coefficient(&canonical_bits(bits))
    }

    pub fn set(&mut self, k: Necklace, v: GaussianRational) -> Result<()> {
        if k.len() != self.n {
            return Err(Error::Shape(format!("necklace {k} has length {}, expected {}", k.len(), self.n)));
        }
        if v.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, v);
        }
        Ok(())
    }

    /// Full `2^n` coefficient vector indexed by the big-endian bit string.
    pub fn expand(&self) -> Vec<GaussianRational> {
        (0..1usize << self.n)
            .map(|idx| {
                let bits: Vec<u8> = (0..self.n).map(|k| ((idx >> (self.n - 1 - k)) & 1) as u8).collect();
                self.coefficient_of_bits(&bits)
            })
            .collect()
    }

    /// Squared Euclidean norm `Σ_I |c_I|²` over all `2^n` basis strings,
    /// computed per class with its orbit size.
    pub fn norm_sqr(&self) -> crate::scalars::Rational {
        let mut acc = <crate::scalars::Rational as Ring>::zero();
        for (k, v) in &self.coeffs {
            acc += v.norm_sqr() * crate::scalars::Rational::from_integer(orbit_size(k).into());
        }
        acc
    }

    /// The state with 0 and 1 interchanged in every basis string.
    pub fn bit_flipped(&self) -> TIState {
        TIState { n: self.n, coeffs: self.coeffs.iter().map(|(k, v)| (k.flipped(), v.clone())).collect() }
    }
}

/// Number of distinct rotations of a necklace.
pub fn orbit_size(k: &Necklace) -> usize {
    let n = k.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| k.bits[i] == k.bits[(i + p) % n]))
        .unwrap_or(n)
}

/// W-state of order `n`: weight one on every Hamming-weight-1 string.
///
/// The unnormalized variant has coefficient 1 on the class `0…01`; the
/// normalized variant has `1/√n`, available exactly only when `n` is a
/// perfect square.
pub fn w_state(n: usize, normalized: bool) -> Result<TIState> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("W-state needs n >= 2, got {n}")));
    }
    let value = if normalized {
        let n_q = crate::scalars::Rational::from_integer((n as i64).into());
        let root = rational_sqrt(&n_q).ok_or_else(|| {
            Error::InvalidArgument(format!("1/sqrt({n}) is irrational; use the unnormalized W-state"))
        })?;
        GaussianRational::from_real(root.recip())
    } else {
        GaussianRational::one()
    };
    TIState::from_pairs(n, [(Necklace::single_one(n), value)])
}

/// Multiplies every coefficient by `lambda`, pruning zeros.
pub fn scale_state(s: &TIState, lambda: &GaussianRational) -> TIState {
    TIState {
        n: s.n,
        coeffs: s
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v * lambda))
            .filter(|(_, v)| !v.is_zero())
            .collect(),
    }
}

/// True iff no class with a nonzero coefficient has two cyclically adjacent
/// ones.
pub fn is_unit_sparse(s: &TIState) -> bool {
    s.coeffs.keys().all(|k| !k.has_adjacent_ones())
}

/// Exact `λ` such that `λ^n = c` when the principal root is in `Q(i)`.
pub fn exact_nth_root(c: &GaussianRational, n: usize) -> Option<GaussianRational> {
    principal_root_exact(c, n as u32)
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct CoeffEntry {
    necklace: String,
    value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct StateFile {
    n: usize,
    coeffs: Vec<CoeffEntry>,
}

impl TIState {
    /// Serializes to `{"n": …, "coeffs": [{"necklace": …, "value": …}]}`.
    pub fn to_json(&self) -> String {
        let file = StateFile {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| CoeffEntry { necklace: k.to_string(), value: v.to_string() })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("state serializes")
    }

    /// Parses the JSON state format. Keys are canonicalized; two keys in the
    /// same class are an error.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: StateFile = serde_json::from_str(text)?;
        let mut pairs = Vec::with_capacity(file.coeffs.len());
        for e in file.coeffs {
            let k = canonical_rotation(&e.necklace)?;
            let v: GaussianRational = e.value.parse()?;
            pairs.push((k, v));
        }
        TIState::from_pairs(file.n, pairs)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// Converts a [`BigUint`] count to `usize`, saturating.
pub fn count_to_usize(c: &BigUint) -> usize {
    c.to_usize().unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neck(s: &str) -> Necklace {
        canonical_rotation(s).unwrap()
    }

    /// Brute force: group all 2^n strings by minimal rotation.
    fn brute_necklaces(n: usize) -> Vec<Necklace> {
        let mut set = std::collections::BTreeSet::new();
        for idx in 0..1usize << n {
            let bits: Vec<u8> = (0..n).map(|k| ((idx >> k) & 1) as u8).collect();
            set.insert(canonical_bits(&bits));
        }
        set.into_iter().collect()
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(neck("0110").to_string(), "0011");
        assert_eq!(neck("000").to_string(), "000");
        assert_eq!(neck("100").to_string(), "001");
        assert!(canonical_rotation("").is_err());
        assert!(canonical_rotation("012").is_err());
    }

    #[test]
    fn enumeration_examples() {
        let n3: Vec<String> = enumerate_necklaces(3).unwrap().iter().map(|k| k.to_string()).collect();
        assert_eq!(n3, ["000", "001", "011", "111"]);
        assert_eq!(enumerate_necklaces(4).unwrap().len(), 6);
        let n1: Vec<String> = enumerate_necklaces(1).unwrap().iter().map(|k| k.to_string()).collect();
        assert_eq!(n1, ["0", "1"]);
        assert!(matches!(enumerate_necklaces(25), Err(Error::NecklaceCap { n: 25, cap: 24 })));
        assert_eq!(enumerate_necklaces_capped(5, 5).unwrap().len(), 8);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=12 {
            assert_eq!(enumerate_necklaces(n).unwrap(), brute_necklaces(n), "n = {n}");
        }
    }

    #[test]
    fn polya_examples() {
        // n=3: (φ(1)·8 + φ(3)·2)/3 = 4;  n=4: (16 + 4 + 4)/4 = 6
        assert_eq!(polya_count(3), BigUint::from(4u32));
        assert_eq!(polya_count(4), BigUint::from(6u32));
        assert_eq!(polya_count(1), BigUint::from(2u32));
        assert_eq!(totient(12), 4);
        assert_eq!(totient(7), 6);
    }

    #[test]
    fn w_states() {
        let w3 = w_state(3, false).unwrap();
        assert_eq!(w3.coeffs().len(), 1);
        assert_eq!(w3.coefficient(&neck("001")), GaussianRational::one());
        let w4 = w_state(4, true).unwrap();
        assert_eq!(w4.coefficient(&neck("0001")), GaussianRational::from_frac(1, 2));
        let w2 = w_state(2, false).unwrap();
        assert_eq!(w2.coefficient(&neck("01")), GaussianRational::one());
        assert!(w_state(3, true).is_err());
        assert!(w_state(1, false).is_err());
        assert_eq!(w4.norm_sqr(), crate::scalars::Rational::from_integer(1.into()));
    }

    #[test]
    fn scaling() {
        let w3 = w_state(3, false).unwrap();
        assert!(scale_state(&w3, &GaussianRational::zero()).coeffs().is_empty());
        let twice = scale_state(&w3, &GaussianRational::from_int(2));
        assert_eq!(twice.coefficient(&neck("001")), GaussianRational::from_int(2));
        assert_eq!(scale_state(&w3, &GaussianRational::one()), w3);
    }

    #[test]
    fn unit_sparsity() {
        assert!(is_unit_sparse(&w_state(5, false).unwrap()));
        let s = TIState::from_pairs(3, [(neck("011"), GaussianRational::one())]).unwrap();
        assert!(!is_unit_sparse(&s));
        let all_ones =
            TIState::from_pairs(3, enumerate_necklaces(3).unwrap().into_iter().map(|k| (k, GaussianRational::one())))
                .unwrap();
        assert!(!is_unit_sparse(&all_ones));
        assert!(neck("1").has_adjacent_ones());
        assert!(!neck("0101").has_adjacent_ones());
    }

    #[test]
    fn gaps_and_orbits() {
        assert_eq!(neck("0101").gaps(), vec![1, 1]);
        assert_eq!(neck("00101").gaps(), vec![1, 2]);
        assert_eq!(neck("0001").gaps(), vec![3]);
        assert_eq!(orbit_size(&neck("0101")), 2);
        assert_eq!(orbit_size(&neck("0001")), 4);
        assert_eq!(orbit_size(&neck("000")), 1);
    }

    #[test]
    fn json_round_trip_and_canonicalization() {
        let text = r#"{"n": 3, "coeffs": [{"necklace": "100", "value": "1/2+1*i"}]}"#;
        let s = TIState::from_json(text).unwrap();
        assert_eq!(s.coefficient(&neck("001")), GaussianRational::from_fracs(1, 2, 1, 1));
        assert_eq!(TIState::from_json(&s.to_json()).unwrap(), s);
        let dup = r#"{"n": 3, "coeffs": [{"necklace": "100", "value": "1"}, {"necklace": "010", "value": "2"}]}"#;
        assert!(TIState::from_json(dup).is_err());
        let bad_len = r#"{"n": 4, "coeffs": [{"necklace": "100", "value": "1"}]}"#;
        assert!(TIState::from_json(bad_len).is_err());
    }

    #[test]
    fn expansion_is_rotation_invariant() {
        let s = TIState::from_pairs(
            5,
            [(neck("00011"), GaussianRational::from_int(3)), (neck("00101"), GaussianRational::i())],
        )
        .unwrap();
        let full = s.expand();
        let n = 5;
        for idx in 0..1usize << n {
            let rot = ((idx << 1) | (idx >> (n - 1))) & ((1 << n) - 1);
            assert_eq!(full[idx], full[rot]);
        }
    }
}
