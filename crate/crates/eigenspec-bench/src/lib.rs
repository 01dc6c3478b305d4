//! Shared inputs for the engine benchmarks.

use eigenspec::{rat, Monomial, Polynomial, WeightVector};

/// `Σ z_i^{lambda_i}` with unit coefficients.
pub fn pure_power_sum(lambdas: &[u64]) -> Polynomial {
    let nvars = lambdas.len();
    Polynomial::from_terms(
        nvars,
        lambdas.iter().enumerate().map(|(i, &l)| {
            let mut e = vec![0usize; nvars];
            e[i] = l as usize;
            (Monomial::new(e), rat(1, 1))
        }),
    )
}

/// Weights `1/lambda_i`.
pub fn reciprocal_weights(lambdas: &[u64]) -> WeightVector {
    WeightVector::new(lambdas.iter().map(|&l| rat(1, l as i64)).collect()).unwrap()
}
