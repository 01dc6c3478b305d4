//! Mixed spectra and eigenspectra of isolated quasi-homogeneous
//! singularities, the Brieskorn-Pham closed form, base change, and
//! Hodge-Deligne aggregation.
//!
//! An entry `(alpha, w)` records a dimension on the Deligne bigraded piece
//! `(floor(alpha), w - floor(alpha))` with semisimple monodromy eigenvalue
//! `e(alpha)`; an eigenspectrum entry adds the exponent `gamma` of the
//! automorphism eigenvalue `e(gamma)`. For a basis monomial `beta` of the
//! Jacobian ring, `alpha = (n+1) - ell(beta)` and the weight is `n` for
//! fractional `alpha`, `n+1` for integral `alpha`, where `n+1` is the
//! variable count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::{frac, gamma_tilde, int_json, Rational, UnitClass};
use crate::error::{Error, Result};
use crate::milnor::{ell_value, standard_monomial_basis, Monomial, Polynomial, WeightVector};

/// One line of a mixed spectrum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SpectrumEntry {
    pub alpha: Rational,
    pub weight: usize,
}

/// One line of an eigenspectrum: adds the automorphism eigenvalue exponent.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct EigenSpectrumEntry {
    pub alpha: Rational,
    pub weight: usize,
    pub gamma: UnitClass,
}

/// Multiset of `(alpha, weight)` entries with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spectrum {
    nvars: usize,
    entries: BTreeMap<SpectrumEntry, BigInt>,
}

/// Multiset of `(alpha, weight, gamma)` entries with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenSpectrum {
    nvars: usize,
    entries: BTreeMap<EigenSpectrumEntry, BigInt>,
}

macro_rules! spectrum_common {
    ($name:ident, $entry:ty) => {
        impl $name {
            /// Empty spectrum in `nvars` variables (`nvars = n + 1`).
            pub fn new(nvars: usize) -> Self {
                $name { nvars, entries: BTreeMap::new() }
            }

            pub fn from_entries(
                nvars: usize,
                items: impl IntoIterator<Item = ($entry, BigInt)>,
            ) -> Self {
                let mut s = Self::new(nvars);
                for (e, m) in items {
                    s.add(e, m);
                }
                s
            }

            /// Adds `mult` to the multiplicity of `entry`; entries that
            /// cancel to zero are removed.
            pub fn add(&mut self, entry: $entry, mult: BigInt) {
                if mult.is_zero() {
                    return;
                }
                let slot = self.entries.entry(entry).or_insert_with(BigInt::zero);
                *slot += mult;
                if slot.is_zero() {
                    let key: Vec<$entry> = self
                        .entries
                        .iter()
                        .filter(|(_, v)| v.is_zero())
                        .map(|(k, _)| k.clone())
                        .collect();
                    for k in key {
                        self.entries.remove(&k);
                    }
                }
            }

            /// Variable count of the singularity that produced this
            /// spectrum; equals `n + 1`.
            pub fn ambient_dim_plus_one(&self) -> usize {
                self.nvars
            }

            /// Sum of multiplicities.
            pub fn total(&self) -> BigInt {
                self.entries.values().sum()
            }

            pub fn len(&self) -> usize {
                self.entries.len()
            }

            pub fn is_empty(&self) -> bool {
                self.entries.is_empty()
            }

            /// Entries sorted by `(alpha, weight[, gamma])`.
            pub fn entries(&self) -> impl Iterator<Item = (&$entry, &BigInt)> {
                self.entries.iter()
            }

            pub fn multiplicity(&self, entry: &$entry) -> BigInt {
                self.entries.get(entry).cloned().unwrap_or_else(BigInt::zero)
            }
        }
    };
}

spectrum_common!(Spectrum, SpectrumEntry);
spectrum_common!(EigenSpectrum, EigenSpectrumEntry);

impl Spectrum {
    /// Serialized form: sorted list of `{"alpha", "weight", "mult"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(e, m)| {
                    json!({
                        "alpha": e.alpha.to_string(),
                        "weight": e.weight,
                        "mult": int_json(m),
                    })
                })
                .collect(),
        )
    }

    /// Multiplicities aggregated over the weight, keyed by `alpha`.
    pub fn alpha_multiplicities(&self) -> BTreeMap<Rational, BigInt> {
        let mut out: BTreeMap<Rational, BigInt> = BTreeMap::new();
        for (e, m) in &self.entries {
            *out.entry(e.alpha.clone()).or_insert_with(BigInt::zero) += m;
        }
        out
    }
}

impl EigenSpectrum {
    /// Serialized form: sorted list of `{"alpha", "weight", "gamma", "mult"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(e, m)| {
                    json!({
                        "alpha": e.alpha.to_string(),
                        "weight": e.weight,
                        "gamma": e.gamma.to_string(),
                        "mult": int_json(m),
                    })
                })
                .collect(),
        )
    }

    /// Forgets the automorphism eigenvalue, merging entries.
    pub fn forget_eigenvalues(&self) -> Spectrum {
        let mut s = Spectrum::new(self.nvars);
        for (e, m) in &self.entries {
            s.add(
                SpectrumEntry { alpha: e.alpha.clone(), weight: e.weight },
                m.clone(),
            );
        }
        s
    }

    /// Hodge-Deligne table of the underlying mixed spectrum.
    pub fn hodge_deligne(&self) -> HodgeDeligneTable {
        hodge_deligne_table(&self.forget_eigenvalues())
    }
}

/// Diagonal automorphism `z_i -> e(c_i / order) z_i` of finite order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalAutomorphism {
    order: u64,
    twists: Vec<u64>,
}

impl DiagonalAutomorphism {
    /// Twists are reduced modulo `order`; the order must be positive.
    pub fn new(order: u64, twists: &[i64]) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let l = order as i128;
        let reduced = twists
            .iter()
            .map(|&c| (((c as i128 % l) + l) % l) as u64)
            .collect();
        Ok(DiagonalAutomorphism { order, twists: reduced })
    }

    /// The identity automorphism on `nvars` variables.
    pub fn identity(nvars: usize) -> Self {
        DiagonalAutomorphism { order: 1, twists: vec![0; nvars] }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn twists(&self) -> &[u64] {
        &self.twists
    }

    pub fn nvars(&self) -> usize {
        self.twists.len()
    }

    /// Whether `f` is invariant: every support monomial `m` must satisfy
    /// `Σ c_i m_i ≡ 0 (mod order)`.
    pub fn fixes(&self, f: &Polynomial) -> bool {
        f.support().all(|m| self.monomial_exponent(m) == 0)
    }

    fn monomial_exponent(&self, m: &Monomial) -> u64 {
        let l = self.order as u128;
        let mut acc: u128 = 0;
        for (e, c) in m.exponents().iter().zip(&self.twists) {
            acc = (acc + (*e as u128 % l) * (*c as u128)) % l;
        }
        acc as u64
    }

    /// `γ(beta) = (1/order) Σ c_i (β_i + 1)` reduced modulo 1.
    fn eigen_exponent(&self, beta: &Monomial) -> UnitClass {
        let l = self.order as u128;
        let mut acc: u128 = 0;
        for (e, c) in beta.exponents().iter().zip(&self.twists) {
            acc = (acc + ((*e as u128 + 1) % l) * (*c as u128)) % l;
        }
        UnitClass::new(Rational::new(BigInt::from(acc), BigInt::from(self.order)))
    }
}

fn weight_for_alpha(alpha: &Rational, nvars: usize) -> usize {
    if alpha.is_integer() {
        nvars
    } else {
        nvars - 1
    }
}

/// Mixed spectrum of a quasi-homogeneous isolated singularity: one entry
/// `((n+1) - ell(beta), w)` per basis monomial `beta`.
pub fn mixed_spectrum(f: &Polynomial, w: &WeightVector) -> Result<Spectrum> {
    let basis = standard_monomial_basis(f, w)?;
    let nvars = f.nvars();
    let dim = Rational::from_integer(BigInt::from(nvars));
    let mut s = Spectrum::new(nvars);
    for beta in basis.monomials() {
        let alpha = &dim - ell_value(beta, w);
        let weight = weight_for_alpha(&alpha, nvars);
        s.add(SpectrumEntry { alpha, weight }, BigInt::one());
    }
    Ok(s)
}

/// Eigenspectrum refining [`mixed_spectrum`] by the eigenvalue exponents of
/// a diagonal automorphism fixing `f`.
pub fn eigenspectrum(
    f: &Polynomial,
    w: &WeightVector,
    g: &DiagonalAutomorphism,
) -> Result<EigenSpectrum> {
    if g.nvars() != f.nvars() {
        return Err(Error::LengthMismatch { expected: f.nvars(), found: g.nvars() });
    }
    if !g.fixes(f) {
        return Err(Error::NotInvariant);
    }
    let basis = standard_monomial_basis(f, w)?;
    let nvars = f.nvars();
    let dim = Rational::from_integer(BigInt::from(nvars));
    let mut s = EigenSpectrum::new(nvars);
    for beta in basis.monomials() {
        let alpha = &dim - ell_value(beta, w);
        let weight = weight_for_alpha(&alpha, nvars);
        let gamma = g.eigen_exponent(beta);
        s.add(EigenSpectrumEntry { alpha, weight, gamma }, BigInt::one());
    }
    Ok(s)
}

/// Closed-form eigenspectrum of `Σ z_i^{exponents[i]}` under the diagonal
/// automorphism with the given twists: the convolution of one elementary
/// factor per variable, with weights attached by the integral-alpha rule.
pub fn bp_eigenspectrum(exponents: &[u64], twists: &[i64], order: u64) -> EigenSpectrum {
    assert_eq!(exponents.len(), twists.len(), "variable count mismatch");
    assert!(order >= 1, "automorphism order must be positive");
    let nvars = exponents.len();
    let mut product = crate::algebra::GroupRingElt::unit();
    for (lambda, c) in exponents.iter().zip(twists) {
        product = product.convolve(&gamma_tilde(*lambda, *c, order));
    }
    let mut s = EigenSpectrum::new(nvars);
    for ((alpha, gamma), mult) in product.iter() {
        let weight = weight_for_alpha(alpha, nvars);
        s.add(
            EigenSpectrumEntry { alpha: alpha.clone(), weight, gamma: gamma.clone() },
            mult.clone(),
        );
    }
    s
}

/// Base change of the family parameter by `s -> s^k`: every entry's alpha
/// becomes `frac(k * alpha) + floor(alpha)`; weights, eigenvalue exponents
/// and multiplicities are unchanged, merging where entries collide.
pub fn base_change(s: &EigenSpectrum, k: u64) -> EigenSpectrum {
    assert!(k >= 1, "base change exponent must be positive");
    let factor = Rational::from_integer(BigInt::from(k));
    let mut out = EigenSpectrum::new(s.ambient_dim_plus_one());
    for (e, m) in s.entries() {
        let scaled = &e.alpha * &factor;
        let alpha = frac(&scaled) + e.alpha.floor();
        out.add(
            EigenSpectrumEntry { alpha, weight: e.weight, gamma: e.gamma.clone() },
            m.clone(),
        );
    }
    out
}

/// Dimensions of Deligne bigraded pieces keyed by `(p, q)` and the
/// semisimple monodromy eigenvalue exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HodgeDeligneTable {
    dims: BTreeMap<(i64, i64, UnitClass), BigInt>,
}

impl HodgeDeligneTable {
    pub fn new() -> Self {
        HodgeDeligneTable { dims: BTreeMap::new() }
    }

    pub fn dimension(&self, p: i64, q: i64, eigenvalue: &UnitClass) -> BigInt {
        self.dims
            .get(&(p, q, eigenvalue.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64, UnitClass), &BigInt)> {
        self.dims.iter()
    }

    pub fn total(&self) -> BigInt {
        self.dims.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.dims
                .iter()
                .map(|((p, q, eig), d)| {
                    json!({
                        "p": p,
                        "q": q,
                        "eigenvalue": eig.to_string(),
                        "dim": int_json(d),
                    })
                })
                .collect(),
        )
    }
}

impl Default for HodgeDeligneTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Aggregates a spectrum into its Hodge-Deligne table: entry `(alpha, w)`
/// contributes at `(p, q) = (floor(alpha), w - floor(alpha))` with
/// eigenvalue exponent `frac(alpha)`.
pub fn hodge_deligne_table(s: &Spectrum) -> HodgeDeligneTable {
    let mut table = HodgeDeligneTable::new();
    for (e, m) in s.entries() {
        let p = crate::algebra::floor_int(&e.alpha)
            .to_i64()
            .expect("alpha floor out of range");
        let q = e.weight as i64 - p;
        let eig = UnitClass::new(frac(&e.alpha));
        *table
            .dims
            .entry((p, q, eig))
            .or_insert_with(BigInt::zero) += m;
    }
    table
}
