//! Sparse multivariate polynomials over exact rationals, quasi-homogeneity,
//! and monomial bases of Jacobian rings.
//!
//! The Groebner engine is a plain Buchberger loop with the normal selection
//! strategy and the coprime-lead and chain eliminations, over exact rational
//! coefficients. The working monomial order is weighted degree (by the
//! integral weights of a [`WeightVector`]) with a reverse-lexicographic tie
//! break; any weighted-graded order gives the same graded data. Intended
//! scale is small: a handful of variables and quotient dimensions in the
//! low thousands.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Exponent vector of fixed length. The derived ordering (lexicographic on
/// exponents) is only used for canonical storage, not for division.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<usize>,
}

impl Monomial {
    pub fn new(exps: Vec<usize>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `nvars` variables.
    pub fn constant(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> usize {
        self.exps[var]
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> usize {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, when divisible.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(Monomial::new(
                self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both monomials.
    pub fn is_coprime_with(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Σ exps[i] * weights[i]` with exact rational weights.
    pub fn weighted_degree(&self, weights: &[Rational]) -> Rational {
        debug_assert_eq!(self.exps.len(), weights.len());
        let mut acc = Rational::zero();
        for (e, w) in self.exps.iter().zip(weights) {
            acc += w * Rational::from_integer(BigInt::from(*e));
        }
        acc
    }

    fn weighted_degree_int(&self, weights: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, w) in self.exps.iter().zip(weights) {
            acc += w * BigInt::from(*e);
        }
        acc
    }
}

/// Sparse polynomial: monomials mapped to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::constant(nvars), value)])
    }

    /// Single term `coeff * z^exps`; the variable count is the vector length.
    pub fn term(coeff: Rational, exps: Vec<usize>) -> Self {
        let nvars = exps.len();
        Self::from_terms(nvars, [(Monomial::new(exps), coeff)])
    }

    /// Accumulates terms, merging equal monomials and dropping zeros.
    /// Panics if a monomial has the wrong arity.
    pub fn from_terms(
        nvars: usize,
        items: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in items {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            *terms.entry(m).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars);
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exponent(var) > 0).map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                let e = exps[var];
                exps[var] = e - 1;
                (
                    Monomial::new(exps),
                    c * Rational::from_integer(BigInt::from(e)),
                )
            }),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Leading term under `order`, if nonzero.
    pub fn leading<'a>(&'a self, order: &MonomialOrder) -> Option<(&'a Monomial, &'a Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    fn remove_term(&mut self, m: &Monomial) {
        self.terms.remove(m);
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Self) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Self) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        Polynomial::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .chain(rhs.terms.iter().map(|(m, c)| (m.clone(), -c))),
        )
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Self) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().flat_map(|(m1, c1)| {
                rhs.terms.iter().map(move |(m2, c2)| (m1.mul(m2), c1 * c2))
            }),
        )
    }
}

/// Positive rational weights together with their least integral rescaling:
/// `scale` is the smallest positive integer making every weight integral,
/// and `integer_weights[i] = scale * weights[i]` exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVector {
    weights: Vec<Rational>,
    scale: BigInt,
    integer_weights: Vec<BigInt>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        let scale = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let integer_weights = weights
            .iter()
            .map(|w| (w * Rational::from_integer(scale.clone())).to_integer())
            .collect();
        Ok(WeightVector { weights, scale, integer_weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Least positive integer making every weight integral.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    /// The rescaled integral weights.
    pub fn integer_weights(&self) -> &[BigInt] {
        &self.integer_weights
    }
}

/// Whether every monomial of `f` has weighted degree exactly 1.
pub fn check_quasi_homogeneous(f: &Polynomial, w: &WeightVector) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != w.len() {
        return Err(Error::LengthMismatch { expected: w.len(), found: f.nvars() });
    }
    let one = Rational::one();
    Ok(f.support().all(|m| m.weighted_degree(w.weights()) == one))
}

/// `Σ w_i (β_i + 1)`, exact.
pub fn ell_value(beta: &Monomial, w: &WeightVector) -> Rational {
    assert_eq!(beta.nvars(), w.len(), "variable count mismatch");
    let mut acc = Rational::zero();
    for (e, wi) in beta.exponents().iter().zip(w.weights()) {
        acc += wi * Rational::from_integer(BigInt::from(e + 1));
    }
    acc
}

/// Outcome of solving the degree-1 condition on the support of a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightInference {
    /// The linear system has a unique positive solution.
    Unique(WeightVector),
    /// Under-determined system.
    Indeterminate,
    /// Unsolvable system, or a solution with a nonpositive weight.
    Inconsistent,
}

/// Solves `m · w = 1` over the support of `f` for a positive rational
/// weight vector.
pub fn infer_weights(f: &Polynomial) -> Result<WeightInference> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.nvars();
    // augmented rows [m_1 .. m_n | 1], reduced to RREF
    let mut rows: Vec<Vec<Rational>> = f
        .support()
        .map(|m| {
            let mut row: Vec<Rational> = m
                .exponents()
                .iter()
                .map(|&e| Rational::from_integer(BigInt::from(e)))
                .collect();
            row.push(Rational::one());
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0usize;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * &factor;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    for row in rows.iter().skip(rank) {
        if !row[n].is_zero() {
            return Ok(WeightInference::Inconsistent);
        }
    }
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return Ok(WeightInference::Indeterminate);
    }
    let solution: Vec<Rational> = pivot_of_col
        .iter()
        .map(|p| rows[p.unwrap()][n].clone())
        .collect();
    if solution.iter().any(|w| !w.is_positive()) {
        return Ok(WeightInference::Inconsistent);
    }
    Ok(WeightInference::Unique(WeightVector::new(solution)?))
}

/// Tie break applied after comparing weighted degrees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TieBreak {
    ReverseLex,
    Lex,
}

/// Monomial order: weighted degree first, then the tie break. All weights
/// must be positive, so the order is a well-order and division terminates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    weights: Vec<BigInt>,
    tie: TieBreak,
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<BigInt>, tie: TieBreak) -> Self {
        assert!(weights.iter().all(|w| w.is_positive()), "order weights must be positive");
        MonomialOrder { weights, tie }
    }

    /// Degree reverse lexicographic: all weights 1.
    pub fn graded_revlex(nvars: usize) -> Self {
        Self::weighted(vec![BigInt::one(); nvars], TieBreak::ReverseLex)
    }

    /// Weighted order refining the grading of `w`.
    pub fn for_weights(w: &WeightVector, tie: TieBreak) -> Self {
        Self::weighted(w.integer_weights().to_vec(), tie)
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = a.weighted_degree_int(&self.weights);
        let db = b.weighted_degree_int(&self.weights);
        match da.cmp(&db) {
            Ordering::Equal => match self.tie {
                TieBreak::ReverseLex => {
                    for i in (0..a.nvars()).rev() {
                        if a.exponent(i) != b.exponent(i) {
                            return b.exponent(i).cmp(&a.exponent(i));
                        }
                    }
                    Ordering::Equal
                }
                TieBreak::Lex => {
                    for i in 0..a.nvars() {
                        if a.exponent(i) != b.exponent(i) {
                            return a.exponent(i).cmp(&b.exponent(i));
                        }
                    }
                    Ordering::Equal
                }
            },
            other => other,
        }
    }
}

/// Full normal form of `f`: no term of the result is divisible by any
/// leading term of `basis`. Reducers are tried in basis order, so the
/// result is deterministic for a fixed basis sequence.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("basis elements must be nonzero");
            (m.clone(), c.clone())
        })
        .collect();

    let mut work = f.clone();
    let mut done: Vec<(Monomial, Rational)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        for (g, (glm, glc)) in basis.iter().zip(&leads) {
            if glm.divides(&lm) {
                let shift = lm.checked_div(glm).unwrap();
                let factor = &lc / glc;
                work = &work - &g.mul_monomial(&shift).scale(&factor);
                continue 'outer;
            }
        }
        work.remove_term(&lm);
        done.push((lm, lc));
    }
    Polynomial::from_terms(f.nvars(), done)
}

fn monic(f: &Polynomial, order: &MonomialOrder) -> Polynomial {
    match f.leading(order) {
        Some((_, c)) => f.scale(&c.recip()),
        None => f.clone(),
    }
}

/// Reduced monic Groebner basis of the ideal generated by `generators`,
/// sorted by ascending leading monomial. Zero generators are dropped;
/// all-zero input is an error.
pub fn groebner_basis(generators: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> =
        generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let nvars = basis[0].nvars();
    for g in &basis {
        if g.nvars() != nvars {
            return Err(Error::LengthMismatch { expected: nvars, found: g.nvars() });
        }
    }
    if order.nvars() != nvars {
        return Err(Error::LengthMismatch { expected: nvars, found: order.nvars() });
    }
    for g in basis.iter_mut() {
        *g = monic(g, order);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut processed: HashSet<(usize, usize)> = HashSet::new();
    let lead = |basis: &[Polynomial], i: usize| -> Monomial {
        basis[i].leading(order).unwrap().0.clone()
    };

    while !pairs.is_empty() {
        // normal selection: smallest lcm of leading monomials, ties by index
        let mut best = 0usize;
        let mut best_lcm = lead(&basis, pairs[0].0).lcm(&lead(&basis, pairs[0].1));
        for (idx, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let lcm = lead(&basis, i).lcm(&lead(&basis, j));
            match order.cmp(&lcm, &best_lcm) {
                Ordering::Less => {
                    best = idx;
                    best_lcm = lcm;
                }
                Ordering::Equal if (pairs[idx].0, pairs[idx].1) < (pairs[best].0, pairs[best].1) => {
                    best = idx;
                }
                _ => {}
            }
        }
        let (i, j) = pairs.swap_remove(best);
        processed.insert((i, j));

        let li = lead(&basis, i);
        let lj = lead(&basis, j);
        if li.is_coprime_with(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        let chain_eliminated = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis, k).divides(&lcm)
                && processed.contains(&(i.min(k), i.max(k)))
                && processed.contains(&(j.min(k), j.max(k)))
        });
        if chain_eliminated {
            continue;
        }

        let si = basis[i].mul_monomial(&lcm.checked_div(&li).unwrap());
        let sj = basis[j].mul_monomial(&lcm.checked_div(&lj).unwrap());
        let spoly = &si - &sj;
        let remainder = normal_form(&spoly, &basis, order);
        if !remainder.is_zero() {
            let t = basis.len();
            basis.push(monic(&remainder, order));
            for k in 0..t {
                pairs.push((k, t));
            }
        }
    }

    // minimal generating set: drop elements whose lead another lead divides
    let mut kept = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !kept[i] {
            continue;
        }
        let li = lead(&basis, i);
        if (0..basis.len()).any(|k| k != i && kept[k] && lead(&basis, k).divides(&li)) {
            kept[i] = false;
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(kept)
        .filter(|(_, keep)| *keep)
        .map(|(g, _)| g)
        .collect();

    // inter-reduce tails; leading terms are untouched since they are minimal
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = if others.is_empty() {
            minimal[i].clone()
        } else {
            normal_form(&minimal[i], &others, order)
        };
        reduced.push(monic(&g, order));
    }
    reduced.sort_by(|a, b| {
        order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0)
    });
    Ok(reduced)
}

/// Monomial basis of a polynomial quotient ring: the standard monomials of
/// a Groebner basis of the Jacobian ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialBasis {
    betas: Vec<Monomial>,
}

impl MonomialBasis {
    /// Basis monomials in lexicographic order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.betas
    }

    /// Quotient dimension.
    pub fn milnor_number(&self) -> usize {
        self.betas.len()
    }
}

/// Standard-monomial basis of `C[z]/J_f` for quasi-homogeneous `f`, under
/// the weighted order with reverse-lexicographic tie break.
pub fn standard_monomial_basis(f: &Polynomial, w: &WeightVector) -> Result<MonomialBasis> {
    standard_monomial_basis_with(f, w, TieBreak::ReverseLex)
}

/// Same as [`standard_monomial_basis`] with an explicit tie break. The
/// multiset of weighted levels of the result does not depend on the tie
/// break; the monomials themselves may.
pub fn standard_monomial_basis_with(
    f: &Polynomial,
    w: &WeightVector,
    tie: TieBreak,
) -> Result<MonomialBasis> {
    if !check_quasi_homogeneous(f, w)? {
        return Err(Error::NotQuasiHomogeneous);
    }
    let n = f.nvars();
    let generators: Vec<Polynomial> = (0..n).map(|i| f.partial(i)).collect();
    let order = MonomialOrder::for_weights(w, tie);
    let gb = groebner_basis(&generators, &order)?;
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading(&order).unwrap().0.clone())
        .collect();

    if leads.iter().any(|m| m.is_constant()) {
        // unit ideal: smooth point, empty basis
        return Ok(MonomialBasis { betas: Vec::new() });
    }

    // finiteness: each variable needs a pure power among the leading terms
    let mut caps: Vec<Option<usize>> = vec![None; n];
    for m in &leads {
        let positive: Vec<usize> =
            (0..n).filter(|&i| m.exponent(i) > 0).collect();
        if let [var] = positive[..] {
            let e = m.exponent(var);
            caps[var] = Some(caps[var].map_or(e, |c: usize| c.min(e)));
        }
    }
    for (var, cap) in caps.iter().enumerate() {
        if cap.is_none() {
            return Err(Error::NonIsolated { variable: var });
        }
    }
    let caps: Vec<usize> = caps.into_iter().map(Option::unwrap).collect();

    let mut betas: Vec<Monomial> = Vec::new();
    let mut current = vec![0usize; n];
    enumerate_standard(&caps, &leads, &mut current, 0, &mut betas);

    #[cfg(debug_assertions)]
    {
        // Milnor-Orlik: the quotient dimension of an isolated
        // quasi-homogeneous singularity is the product of (1/w_i - 1).
        let mut expected = Rational::one();
        for wi in w.weights() {
            expected *= wi.recip() - Rational::one();
        }
        debug_assert_eq!(
            Rational::from_integer(BigInt::from(betas.len())),
            expected,
            "quotient dimension disagrees with the weight product"
        );
    }

    Ok(MonomialBasis { betas })
}

fn enumerate_standard(
    caps: &[usize],
    leads: &[Monomial],
    current: &mut Vec<usize>,
    var: usize,
    out: &mut Vec<Monomial>,
) {
    if var == caps.len() {
        let m = Monomial::new(current.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..caps[var] {
        current[var] = e;
        enumerate_standard(caps, leads, current, var + 1, out);
    }
    current[var] = 0;
}
