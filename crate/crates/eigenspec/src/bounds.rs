//! Node-count bounds for hypersurfaces in weighted projective spaces.
//!
//! All bounds read coefficients off the convolution product
//! `Γ_{d_0} * ... * Γ_{d_{n+1}}` built from the cover degrees
//! `d_i = d / e_i`. The naive bound is the middle primitive Hodge number
//! (even `n` only); the spectral bound reads the eigenspace dimension of a
//! degree-`d` cyclic cover and works for every `n`; the Miyaoka bound is
//! the surface-geography bound `8χ - (8/9)K²` and applies to `n = 2` with
//! nef canonical bundle, which is not machine-checked here.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::algebra::{floor_int, gamma, int_json, rat, GroupRingElt, Rational};
use crate::error::{Error, Result};

/// Degree-`d` hypersurface configuration in a weighted projective space
/// with positive integer weights `e_0, ..., e_{n+1}`, each dividing `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedHypersurfaceConfig {
    ambient_weights: Vec<u64>,
    degree: u64,
    cover_degrees: Vec<u64>,
    dim: usize,
}

impl WeightedHypersurfaceConfig {
    pub fn new(ambient_weights: Vec<u64>, degree: u64) -> Result<Self> {
        if ambient_weights.len() < 3 {
            return Err(Error::DimensionTooSmall {
                n: ambient_weights.len() as i64 - 2,
            });
        }
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if ambient_weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        let mut cover_degrees = Vec::with_capacity(ambient_weights.len());
        for &e in &ambient_weights {
            if degree % e != 0 {
                return Err(Error::NonIntegralCoverDegree { weight: e, degree });
            }
            cover_degrees.push(degree / e);
        }
        let dim = ambient_weights.len() - 2;
        Ok(WeightedHypersurfaceConfig { ambient_weights, degree, cover_degrees, dim })
    }

    /// Configuration for a degree-`d` hypersurface in ordinary projective
    /// space of dimension `n + 1`.
    pub fn projective(n: usize, degree: u64) -> Result<Self> {
        Self::new(vec![1; n + 2], degree)
    }

    /// Hypersurface dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn ambient_weights(&self) -> &[u64] {
        &self.ambient_weights
    }

    /// The quotients `d / e_i`.
    pub fn cover_degrees(&self) -> &[u64] {
        &self.cover_degrees
    }

    /// `Γ_{d_0} * ... * Γ_{d_{n+1}}`.
    pub fn gamma_product(&self) -> GroupRingElt<Rational> {
        let mut product = GroupRingElt::unit();
        for &d in &self.cover_degrees {
            product = product.convolve(&gamma(d));
        }
        product
    }

    /// Warns when some `n + 1` of the ambient weights share a factor.
    pub fn shared_factor_warning(&self) -> Option<String> {
        let k = self.ambient_weights.len();
        for skip in 0..k {
            let mut g: u64 = 0;
            for (i, &e) in self.ambient_weights.iter().enumerate() {
                if i != skip {
                    g = g.gcd(&e);
                }
            }
            if g > 1 {
                return Some(format!(
                    "{} of the ambient weights share the factor {}",
                    k - 1,
                    g
                ));
            }
        }
        None
    }
}

/// Dimension of the degree-`d` cyclic cover's primitive Hodge eigenspace:
/// the coefficient of `[q + j/d]` in the gamma product, for `0 < j < d`.
pub fn cover_eigen_dimension(
    cfg: &WeightedHypersurfaceConfig,
    j: u64,
    q: i64,
) -> Result<BigInt> {
    let d = cfg.degree();
    if j == 0 || j >= d {
        return Err(Error::EigenvalueIndexOutOfRange { j, d });
    }
    let key = rat(q, 1) + rat(j as i64, d as i64);
    Ok(cfg.gamma_product().coeff(&key))
}

fn spectral_key(cfg: &WeightedHypersurfaceConfig) -> Rational {
    let n = cfg.dim() as i64;
    let d = cfg.degree() as i64;
    if n % 2 == 0 && d % 2 == 1 {
        rat(n + 1, 2) + rat(1, 2 * d)
    } else {
        rat(n + 1, 2) + rat(1, d)
    }
}

/// Node-count bound from the cyclic-cover eigenspace: the coefficient of
/// `[(n+1)/2 + 1/(2d)]` for even `n` and odd `d`, of `[(n+1)/2 + 1/d]`
/// otherwise.
pub fn spectral_node_bound(cfg: &WeightedHypersurfaceConfig) -> BigInt {
    cfg.gamma_product().coeff(&spectral_key(cfg))
}

/// The eigenvalue index and Hodge level realizing the spectral bound as a
/// cover eigenspace dimension: `j = 1` for odd `n`, `j = ceil((d+1)/2)` for
/// even `n`, with `q = n + 1 - floor((n+1)/2 + j/d)`.
pub fn spectral_bound_witness(cfg: &WeightedHypersurfaceConfig) -> (u64, i64) {
    let n = cfg.dim() as u64;
    let d = cfg.degree();
    let j = if n % 2 == 1 { 1 } else { d / 2 + 1 };
    let p = floor_int(&(rat((n + 1) as i64, 2) + rat(j as i64, d as i64)))
        .to_i64()
        .unwrap();
    let q = n as i64 + 1 - p;
    (j, q)
}

/// Middle primitive Hodge number `h^{n/2,n/2}_pr`, a naive node bound for
/// even `n`: the coefficient of `[n/2 + 1]` in the gamma product.
pub fn naive_middle_bound(cfg: &WeightedHypersurfaceConfig) -> Result<BigInt> {
    let n = cfg.dim();
    if n % 2 != 0 {
        return Err(Error::OddMiddleDimension { n });
    }
    let key = rat((n / 2 + 1) as i64, 1);
    Ok(cfg.gamma_product().coeff(&key))
}

/// `floor(8 chi - (8/9) K²)`. Intended for surfaces with nef canonical
/// bundle; the caller is responsible for that hypothesis.
pub fn miyaoka_bound(chi: i64, canonical_square: &Rational) -> BigInt {
    let value = rat(8 * chi, 1) - rat(8, 9) * canonical_square;
    floor_int(&value)
}

/// Closed form `floor((4/9) d (d-1)²)` of the Miyaoka bound for a degree-`d`
/// surface in projective 3-space. Asserts agreement with the chi/K² route
/// via `chi = 1 + C(d-1, 3)` and `K² = d (d-4)²`.
pub fn miyaoka_p3(d: u64) -> BigInt {
    assert!(d >= 1, "degree must be positive");
    let di = d as i64;
    let closed = floor_int(&(rat(4, 9) * rat(di * (di - 1) * (di - 1), 1)));
    let chi = 1 + binomial(BigInt::from(di - 1), BigInt::from(3))
        .to_i64()
        .expect("characteristic out of range");
    let ksq = rat(di * (di - 4) * (di - 4), 1);
    assert_eq!(closed, miyaoka_bound(chi, &ksq), "closed form disagrees with chi/K^2 route");
    closed
}

/// Surface invariants needed for the Miyaoka bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceInvariants {
    pub chi: i64,
    pub canonical_square: Rational,
}

/// All applicable node bounds for a configuration, with their minimum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundReport {
    pub naive: Option<BigInt>,
    pub naive_note: String,
    pub spectral: BigInt,
    pub spectral_note: String,
    pub miyaoka: Option<BigInt>,
    pub miyaoka_note: String,
    pub best: BigInt,
    pub best_source: String,
    pub warnings: Vec<String>,
}

impl BoundReport {
    pub fn to_json(&self) -> Value {
        json!({
            "naive": self.naive.as_ref().map(int_json),
            "naive_note": self.naive_note,
            "spectral": int_json(&self.spectral),
            "spectral_note": self.spectral_note,
            "miyaoka": self.miyaoka.as_ref().map(int_json),
            "miyaoka_note": self.miyaoka_note,
            "best": int_json(&self.best),
            "best_source": self.best_source,
            "warnings": self.warnings,
        })
    }
}

/// Aggregates the naive, spectral and Miyaoka bounds, recording why any of
/// them is absent, and reports their minimum.
pub fn best_node_bound(
    cfg: &WeightedHypersurfaceConfig,
    surface: Option<&SurfaceInvariants>,
) -> BoundReport {
    let spectral = spectral_node_bound(cfg);
    let spectral_note = "eigenspace dimension of the degree-d cyclic cover".to_string();

    let (naive, naive_note) = match naive_middle_bound(cfg) {
        Ok(v) => (
            Some(v),
            "middle primitive Hodge number of a smooth member".to_string(),
        ),
        Err(_) => (
            None,
            "not applicable: middle Hodge number needs even dimension".to_string(),
        ),
    };

    let (miyaoka, miyaoka_note) = match surface {
        Some(inv) => (
            Some(miyaoka_bound(inv.chi, &inv.canonical_square)),
            "8*chi - (8/9)*K^2; assumes the canonical bundle is nef (not verified here)"
                .to_string(),
        ),
        None => (None, "no surface invariants supplied".to_string()),
    };

    let mut best = spectral.clone();
    let mut best_source = "spectral".to_string();
    if let Some(v) = &naive {
        if *v < best {
            best = v.clone();
            best_source = "naive".to_string();
        }
    }
    if let Some(v) = &miyaoka {
        if *v < best {
            best = v.clone();
            best_source = "miyaoka".to_string();
        }
    }

    let warnings = cfg.shared_factor_warning().into_iter().collect();

    BoundReport {
        naive,
        naive_note,
        spectral,
        spectral_note,
        miyaoka,
        miyaoka_note,
        best,
        best_source,
        warnings,
    }
}

/// A nodal hypersurface recorded for regression tests and documentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecordExample {
    pub label: &'static str,
    pub ambient_weights: &'static [u64],
    pub degree: u64,
    /// Hypersurface dimension.
    pub dimension: u32,
    /// Nodes realized by the construction.
    pub nodes: u64,
    pub source: &'static str,
}

impl RecordExample {
    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "ambient_weights": self.ambient_weights,
            "degree": self.degree,
            "dimension": self.dimension,
            "nodes": self.nodes,
            "source": self.source,
        })
    }
}

/// Known nodal hypersurfaces used as reference points for the bounds.
pub const RECORD_EXAMPLES: &[RecordExample] = &[
    RecordExample {
        label: "union of three general lines in the plane",
        ambient_weights: &[1, 1, 1],
        degree: 3,
        dimension: 1,
        nodes: 3,
        source: "classical; meets the cubic-curve bound",
    },
    RecordExample {
        label: "Kummer quartic surface",
        ambient_weights: &[1, 1, 1, 1],
        degree: 4,
        dimension: 2,
        nodes: 16,
        source: "Kummer; meets the quartic-surface bound",
    },
    RecordExample {
        label: "Fermat-pencil quintic threefold",
        ambient_weights: &[1, 1, 1, 1, 1],
        degree: 5,
        dimension: 3,
        nodes: 125,
        source: "classical pencil through the Fermat quintic",
    },
    RecordExample {
        label: "van Straten quintic threefold",
        ambient_weights: &[1, 1, 1, 1, 1],
        degree: 5,
        dimension: 3,
        nodes: 130,
        source: "van Straten; record for quintic threefolds",
    },
    RecordExample {
        label: "sextic threefold in P(1,1,1,1,2), Fermat-pencil type",
        ambient_weights: &[1, 1, 1, 1, 2],
        degree: 6,
        dimension: 3,
        nodes: 108,
        source: "Fermat-pencil construction",
    },
    RecordExample {
        label: "octic threefold in P(1,1,1,1,4), Fermat-pencil type",
        ambient_weights: &[1, 1, 1, 1, 4],
        degree: 8,
        dimension: 3,
        nodes: 128,
        source: "Fermat-pencil construction",
    },
    RecordExample {
        label: "Endrass octic surface",
        ambient_weights: &[1, 1, 1, 1],
        degree: 8,
        dimension: 2,
        nodes: 168,
        source: "Endrass; record for octic surfaces",
    },
    RecordExample {
        label: "dectic threefold in P(1,1,1,2,5), standard example",
        ambient_weights: &[1, 1, 1, 2, 5],
        degree: 10,
        dimension: 3,
        nodes: 100,
        source: "Fermat-pencil type construction",
    },
    RecordExample {
        label: "dectic threefold in P(1,1,1,2,5), Togliatti preimage",
        ambient_weights: &[1, 1, 1, 2, 5],
        degree: 10,
        dimension: 3,
        nodes: 124,
        source: "preimage of a 31-nodal Togliatti quintic under double covers",
    },
];
