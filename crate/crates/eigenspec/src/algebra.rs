//! Exact rational arithmetic, residues in Q/Z, and sparse group-ring
//! elements with convolution.
//!
//! A [`GroupRingElt`] is a finite Z-linear combination of keys drawn from an
//! additively written abelian group, here either Q itself or Q x (Q/Z). The
//! convolution product adds keys and multiplies coefficients; `[0]` is the
//! two-sided unit. The key group is a type parameter, so elements over
//! different groups cannot be mixed.
//!
//! Supports stay tiny at the intended scale, so convolution is a plain
//! pairwise merge into a sorted map rather than anything transform-based.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Small-integer rational constructor. Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// Floor of `x` as an integer.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Integers render as JSON numbers when they fit in an `i64`, otherwise as
/// decimal strings.
pub(crate) fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        None => json!(n.to_string()),
    }
}

/// A residue in Q/Z, stored as its unique representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitClass(Rational);

impl UnitClass {
    /// Reduces `x` modulo 1.
    pub fn new(x: Rational) -> Self {
        UnitClass(frac(&x))
    }

    pub fn zero() -> Self {
        UnitClass(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The representative in `[0, 1)`.
    pub fn representative(&self) -> &Rational {
        &self.0
    }

    /// Addition modulo 1.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.0 + &other.0)
    }
}

impl fmt::Display for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for UnitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 1)", self.0)
    }
}

/// Key of a group-ring term: an element of the underlying abelian group.
pub trait GroupKey: Clone + Ord + fmt::Debug {
    /// The group identity.
    fn identity() -> Self;
    /// The group operation.
    fn combine(&self, other: &Self) -> Self;
    /// JSON form used inside serialized group-ring elements.
    fn to_json(&self) -> Value;
}

impl GroupKey for Rational {
    fn identity() -> Self {
        Rational::zero()
    }

    fn combine(&self, other: &Self) -> Self {
        self + other
    }

    fn to_json(&self) -> Value {
        json!(self.to_string())
    }
}

impl GroupKey for (Rational, UnitClass) {
    fn identity() -> Self {
        (Rational::zero(), UnitClass::zero())
    }

    fn combine(&self, other: &Self) -> Self {
        (&self.0 + &other.0, self.1.add(&other.1))
    }

    fn to_json(&self) -> Value {
        json!([self.0.to_string(), self.1.to_string()])
    }
}

/// Finite Z-linear combination of group elements, kept in canonical sorted
/// form with no zero coefficients stored. Two elements are equal iff their
/// term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElt<K: GroupKey> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: GroupKey> GroupRingElt<K> {
    /// The zero element (empty term map).
    pub fn zero() -> Self {
        GroupRingElt { terms: BTreeMap::new() }
    }

    /// The convolution unit `[0]`.
    pub fn unit() -> Self {
        Self::term(K::identity(), 1)
    }

    /// A single term `coeff * [key]`; coefficient zero gives the zero element.
    pub fn term(key: K, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        GroupRingElt { terms }
    }

    /// Accumulates `(key, coeff)` pairs, merging duplicates and dropping zeros.
    pub fn from_terms(items: impl IntoIterator<Item = (K, BigInt)>) -> Self {
        let mut terms: BTreeMap<K, BigInt> = BTreeMap::new();
        for (k, c) in items {
            *terms.entry(k).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        GroupRingElt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored coefficient of `key`, or zero when absent.
    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of all coefficients; multiplicative under convolution.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    /// Convolution product: keys add, coefficients multiply.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<K, BigInt> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                *terms.entry(k1.combine(k2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GroupRingElt { terms }
    }

    /// Pushes every key through `f`, merging collisions. For a group
    /// homomorphism on keys this is a ring homomorphism.
    pub fn map_keys<L: GroupKey>(&self, f: impl Fn(&K) -> L) -> GroupRingElt<L> {
        GroupRingElt::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Serialized form: `{"key": ..., "coeff": ...}` records in canonical
    /// key order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, c)| json!({ "key": k.to_json(), "coeff": int_json(c) }))
                .collect(),
        )
    }
}

impl<K: GroupKey> Add for &GroupRingElt<K> {
    type Output = GroupRingElt<K>;

    fn add(self, rhs: Self) -> GroupRingElt<K> {
        GroupRingElt::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }
}

impl<K: GroupKey> Mul for &GroupRingElt<K> {
    type Output = GroupRingElt<K>;

    fn mul(self, rhs: Self) -> GroupRingElt<K> {
        self.convolve(rhs)
    }
}

/// `Γ_m = Σ_{j=1}^{m-1} [j/m]` in `Z[Q]`; `m = 1` gives the zero element.
pub fn gamma(m: u64) -> GroupRingElt<Rational> {
    assert!(m >= 1, "gamma requires m >= 1");
    GroupRingElt::from_terms(
        (1..m).map(|j| (Rational::new(BigInt::from(j), BigInt::from(m)), BigInt::one())),
    )
}

/// `Γ̃_m(c/l) = Σ_{j=1}^{m-1} [((m-j)/m, jc/l mod 1)]` in `Z[Q x (Q/Z)]`.
pub fn gamma_tilde(m: u64, c: i64, l: u64) -> GroupRingElt<(Rational, UnitClass)> {
    assert!(m >= 1, "gamma_tilde requires m >= 1");
    assert!(l >= 1, "gamma_tilde requires l >= 1");
    GroupRingElt::from_terms((1..m).map(|j| {
        let key = (
            Rational::new(BigInt::from(m - j), BigInt::from(m)),
            UnitClass::new(Rational::new(BigInt::from(j) * c, BigInt::from(l))),
        );
        (key, BigInt::one())
    }))
}
