//! Symmetric-orbit obstruction: exponent-tuple enumeration, orbit
//! decomposition under coordinate permutations, and sign-character
//! multiplicities via Burnside counting.
//!
//! The obstruction concerns degree-`(n+2)` hypersurfaces in projective
//! `(n+1)`-space that are symmetric under all coordinate permutations. The
//! relevant monomial exponents are tuples of length `n + 2` with entries
//! strictly between 0 and `n + 2` and a fixed total; a node orbit of full
//! size would force a copy of the sign character into their span, and the
//! counts below show there is none.
//!
//! Burnside sums are evaluated per cycle type with multinomial class
//! sizes. A tuple is fixed by a permutation exactly when it is constant on
//! each cycle, so fixed-point counts reduce to assignment problems over
//! cycle lengths, and no loop over all `(n+2)!` permutations is needed.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::int_json;
use crate::error::{Error, Result};

/// Exponent tuple of length `n + 2` with entries in `(0, n+2)` summing to
/// `(n+3)(n+2)/2 - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ExponentTuple {
    entries: Vec<usize>,
}

impl ExponentTuple {
    /// Required entry sum at dimension `n`.
    pub fn required_sum(n: usize) -> usize {
        (n + 3) * (n + 2) / 2 - 1
    }

    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != n + 2 {
            return Err(Error::InvalidExponentTuple { reason: "wrong length" });
        }
        if entries.iter().any(|&k| k == 0 || k >= n + 2) {
            return Err(Error::InvalidExponentTuple { reason: "entry out of range" });
        }
        if entries.iter().sum::<usize>() != Self::required_sum(n) {
            return Err(Error::InvalidExponentTuple { reason: "wrong entry sum" });
        }
        Ok(ExponentTuple { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len() - 2
    }

    /// Pigeonhole consequence of the range and length constraints.
    pub fn has_repeated_entry(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// The lexicographically minimal tuple in the same permutation orbit.
    fn orbit_representative(&self) -> ExponentTuple {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        ExponentTuple { entries: sorted }
    }

    fn value_multiplicities(&self) -> Vec<usize> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &k in &self.entries {
            *counts.entry(k).or_insert(0) += 1;
        }
        counts.into_values().collect()
    }
}

/// All admissible exponent tuples at odd dimension `n`, in lexicographic
/// order. Even `n` is refused: the residue exponent is fractional there and
/// the obstruction is unresolved.
pub fn enumerate_monomials(n: usize) -> Result<Vec<ExponentTuple>> {
    if n % 2 == 0 {
        return Err(Error::EvenDimensionUnresolved { n });
    }
    let len = n + 2;
    let target = ExponentTuple::required_sum(n);
    let max_entry = n + 1;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    enumerate_rec(len, max_entry, target, &mut current, &mut out);
    Ok(out)
}

fn enumerate_rec(
    len: usize,
    max_entry: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<ExponentTuple>,
) {
    let slots = len - current.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(ExponentTuple { entries: current.clone() });
        }
        return;
    }
    // prune: the rest must fit between all-ones and all-max
    if remaining < slots || remaining > slots * max_entry {
        return;
    }
    for k in 1..=max_entry.min(remaining) {
        current.push(k);
        enumerate_rec(len, max_entry, remaining - k, current, out);
        current.pop();
    }
}

/// Partitions of `n` as weakly decreasing part lists.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            current.push(part);
            rec(n - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `N! / z_lambda`, the size of the conjugacy class with cycle type `lambda`.
fn class_size(lambda: &[usize], n: usize) -> BigInt {
    let mut z = BigInt::one();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in lambda {
        *counts.entry(l).or_insert(0) += 1;
    }
    for (l, c) in counts {
        z *= BigInt::from(l).pow(c as u32) * factorial(c);
    }
    factorial(n) / z
}

/// Sign of any permutation with cycle type `lambda` on `n` points.
fn cycle_type_sign(lambda: &[usize], n: usize) -> i64 {
    if (n - lambda.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of admissible tuples fixed by a permutation of cycle type
/// `lambda`: assignments of a value in `[1, max_entry]` to each cycle with
/// `Σ length * value = target`.
fn fixed_tuple_count(lambda: &[usize], max_entry: usize, target: usize) -> BigInt {
    let mut ways: HashMap<usize, BigInt> = HashMap::new();
    ways.insert(0, BigInt::one());
    for &l in lambda {
        let mut next: HashMap<usize, BigInt> = HashMap::new();
        for (sum, count) in &ways {
            for v in 1..=max_entry {
                let s = sum + l * v;
                if s <= target {
                    *next.entry(s).or_insert_with(BigInt::zero) += count;
                }
            }
        }
        ways = next;
    }
    ways.remove(&target).unwrap_or_else(BigInt::zero)
}

/// Number of arrangements of a multiset (given by its value
/// multiplicities) fixed by a permutation of cycle type `lambda`:
/// assignments of cycles to values exhausting each multiplicity.
fn fixed_orbit_count(lambda: &[usize], mults: &[usize]) -> BigInt {
    fn rec(
        lambda: &[usize],
        idx: usize,
        remaining: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        if idx == lambda.len() {
            return if remaining.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (idx, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut acc = BigInt::zero();
        let l = lambda[idx];
        for value in 0..remaining.len() {
            if remaining[value] >= l {
                remaining[value] -= l;
                acc += rec(lambda, idx + 1, remaining, memo);
                remaining[value] += l;
            }
        }
        memo.insert(key, acc.clone());
        acc
    }
    let mut remaining = mults.to_vec();
    rec(lambda, 0, &mut remaining, &mut HashMap::new())
}

/// An orbit of tuples under coordinate permutations, with the multiplicity
/// of the sign character in its span.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitRecord {
    /// Lexicographically minimal tuple in the orbit.
    pub representative: ExponentTuple,
    pub size: BigInt,
    pub sign_multiplicity: BigInt,
}

impl OrbitRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "representative": self.representative.entries(),
            "size": int_json(&self.size),
            "sign_multiplicity": int_json(&self.sign_multiplicity),
        })
    }
}

/// Burnside count of sign-character copies in the span of one orbit:
/// `(1/(n+2)!) Σ_g sgn(g) |o^g|`.
pub fn orbit_sign_multiplicity(rep: &ExponentTuple) -> OrbitRecord {
    let representative = rep.orbit_representative();
    let len = representative.entries.len();
    let mults = representative.value_multiplicities();

    let mut size = factorial(len);
    for &m in &mults {
        size /= factorial(m);
    }

    let mut acc = BigInt::zero();
    for lambda in partitions(len) {
        let fixed = fixed_orbit_count(&lambda, &mults);
        if fixed.is_zero() {
            continue;
        }
        acc += BigInt::from(cycle_type_sign(&lambda, len)) * class_size(&lambda, len) * fixed;
    }
    let order = factorial(len);
    let (q, r) = acc.div_rem(&order);
    assert!(r.is_zero(), "Burnside sum must be divisible by the group order");
    assert!(!q.is_negative(), "character multiplicity must be nonnegative");

    OrbitRecord { representative, size, sign_multiplicity: q }
}

/// Verdict of the obstruction check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// No copy of the sign character: a free orbit of nodes is impossible.
    Obstructed,
    NotObstructed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "obstructed",
            Verdict::NotObstructed => "not-obstructed",
        }
    }
}

/// Outcome of the full obstruction computation at dimension `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionReport {
    pub n: usize,
    pub monomial_count: u64,
    pub orbit_count: u64,
    pub total_sign_multiplicity: BigInt,
    pub verdict: Verdict,
    pub orbits: Vec<OrbitRecord>,
}

impl ObstructionReport {
    pub fn to_json(&self, include_orbits: bool) -> Value {
        let mut v = json!({
            "n": self.n,
            "monomial_count": self.monomial_count,
            "orbit_count": self.orbit_count,
            "total_sign_multiplicity": int_json(&self.total_sign_multiplicity),
            "verdict": self.verdict.as_str(),
        });
        if include_orbits {
            v["orbits"] =
                Value::Array(self.orbits.iter().map(OrbitRecord::to_json).collect());
        }
        v
    }
}

/// Total multiplicity of the sign character in the span of all admissible
/// monomials at odd `n`, evaluated per cycle type, with the verdict. A
/// regular representation would contain the sign character exactly once,
/// so any total below 1 obstructs a free node orbit.
pub fn sign_multiplicity_total(n: usize) -> Result<ObstructionReport> {
    let tuples = enumerate_monomials(n)?;
    let len = n + 2;
    let max_entry = n + 1;
    let target = ExponentTuple::required_sum(n);

    let mut acc = BigInt::zero();
    for lambda in partitions(len) {
        let fixed = fixed_tuple_count(&lambda, max_entry, target);
        if fixed.is_zero() {
            continue;
        }
        acc += BigInt::from(cycle_type_sign(&lambda, len)) * class_size(&lambda, len) * fixed;
    }
    let order = factorial(len);
    let (total, r) = acc.div_rem(&order);
    assert!(r.is_zero(), "Burnside sum must be divisible by the group order");

    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for t in &tuples {
        seen.insert(t.orbit_representative().entries);
    }
    let orbits: Vec<OrbitRecord> = seen
        .into_iter()
        .map(|entries| orbit_sign_multiplicity(&ExponentTuple { entries }))
        .collect();

    let verdict = if total < BigInt::one() {
        Verdict::Obstructed
    } else {
        Verdict::NotObstructed
    };

    Ok(ObstructionReport {
        n,
        monomial_count: tuples.len() as u64,
        orbit_count: orbits.len() as u64,
        total_sign_multiplicity: total,
        verdict,
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn tuple(n: usize, entries: &[usize]) -> ExponentTuple {
        ExponentTuple::new(n, entries.to_vec()).unwrap()
    }

    /// Literal Burnside oracle: loops over every permutation.
    mod literal {
        use super::super::*;

        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }

        fn sign(p: &[usize]) -> i64 {
            let mut seen = vec![false; p.len()];
            let mut sgn = 1i64;
            for start in 0..p.len() {
                if seen[start] {
                    continue;
                }
                let mut len = 0;
                let mut at = start;
                while !seen[at] {
                    seen[at] = true;
                    at = p[at];
                    len += 1;
                }
                if len % 2 == 0 {
                    sgn = -sgn;
                }
            }
            sgn
        }

        fn apply(p: &[usize], t: &[usize]) -> Vec<usize> {
            (0..t.len()).map(|i| t[p[i]]).collect()
        }

        /// `(Σ_g sgn(g) |fixed(g)|, Σ_g |fixed(g)|)` over a tuple set.
        pub fn burnside_sums(tuples: &[Vec<usize>]) -> (BigInt, BigInt) {
            let n = tuples[0].len();
            let mut signed = BigInt::zero();
            let mut plain = BigInt::zero();
            for p in permutations(n) {
                let sgn = sign(&p);
                let fixed = tuples.iter().filter(|t| apply(&p, t) == ***t).count();
                signed += BigInt::from(sgn) * BigInt::from(fixed);
                plain += BigInt::from(fixed);
            }
            (signed, plain)
        }

        pub fn orbit_of(t: &[usize]) -> Vec<Vec<usize>> {
            let mut out: Vec<Vec<usize>> = Vec::new();
            for p in permutations(t.len()) {
                let q = apply(&p, t);
                if !out.contains(&q) {
                    out.push(q);
                }
            }
            out
        }
    }

    #[test]
    fn required_sums() {
        assert_eq!(ExponentTuple::required_sum(1), 5);
        assert_eq!(ExponentTuple::required_sum(3), 14);
        assert_eq!(ExponentTuple::required_sum(5), 27);
    }

    #[test]
    fn tuple_validation() {
        assert!(ExponentTuple::new(1, vec![1, 2, 2]).is_ok());
        assert!(ExponentTuple::new(1, vec![1, 2]).is_err());
        assert!(ExponentTuple::new(1, vec![0, 2, 3]).is_err());
        assert!(ExponentTuple::new(1, vec![1, 1, 2]).is_err());
    }

    #[test]
    fn enumeration_small() {
        let ts = enumerate_monomials(1).unwrap();
        let want: Vec<Vec<usize>> =
            vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]];
        let got: Vec<Vec<usize>> = ts.iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(got, want);

        assert_eq!(
            enumerate_monomials(2),
            Err(Error::EvenDimensionUnresolved { n: 2 })
        );
    }

    #[test]
    fn enumeration_count_n3() {
        // inclusion-exclusion: C(13,4) - 5 C(9,4) + 10 C(5,4) = 715 - 630 + 50
        let ts = enumerate_monomials(3).unwrap();
        assert_eq!(ts.len(), 135);
        // lexicographic order
        let mut sorted = ts.clone();
        sorted.sort();
        assert_eq!(ts, sorted);
    }

    #[test]
    fn every_tuple_has_a_repeat() {
        for n in [1usize, 3] {
            for t in enumerate_monomials(n).unwrap() {
                assert!(t.has_repeated_entry(), "{:?} has distinct entries", t);
            }
        }
    }

    #[test]
    fn orbit_records_match_literal_burnside() {
        for (n, entries) in [(1usize, vec![1usize, 2, 2]), (3, vec![1, 1, 4, 4, 4]), (3, vec![2, 3, 3, 3, 3])] {
            let rec = orbit_sign_multiplicity(&tuple(n, &entries));
            let orbit = literal::orbit_of(&entries);
            assert_eq!(rec.size, big(orbit.len() as i64), "orbit size for {entries:?}");
            let (signed, plain) = literal::burnside_sums(&orbit);
            let order = factorial(n + 2);
            assert_eq!(rec.sign_multiplicity, signed / &order);
            // Burnside sanity: the average fixed-point count over the
            // group is 1 on a single orbit
            assert_eq!(plain, order);
            assert_eq!(rec.sign_multiplicity, BigInt::zero());
        }
    }

    #[test]
    fn totals_small_dimensions() {
        let r1 = sign_multiplicity_total(1).unwrap();
        assert_eq!(r1.monomial_count, 3);
        assert_eq!(r1.orbit_count, 1);
        assert_eq!(r1.total_sign_multiplicity, BigInt::zero());
        assert_eq!(r1.verdict, Verdict::Obstructed);

        let r3 = sign_multiplicity_total(3).unwrap();
        assert_eq!(r3.monomial_count, 135);
        assert_eq!(r3.total_sign_multiplicity, BigInt::zero());
        assert_eq!(r3.verdict, Verdict::Obstructed);
    }

    #[test]
    fn orbit_sum_equals_total() {
        for n in [1usize, 3] {
            let report = sign_multiplicity_total(n).unwrap();
            let sum: BigInt = report
                .orbits
                .iter()
                .map(|o| o.sign_multiplicity.clone())
                .sum();
            assert_eq!(sum, report.total_sign_multiplicity);
            let sizes: BigInt = report.orbits.iter().map(|o| o.size.clone()).sum();
            assert_eq!(sizes, BigInt::from(report.monomial_count));
        }
    }

    #[test]
    fn cycle_type_total_matches_literal_for_small_n() {
        for n in [1usize, 3] {
            let report = sign_multiplicity_total(n).unwrap();
            let tuples: Vec<Vec<usize>> = enumerate_monomials(n)
                .unwrap()
                .iter()
                .map(|t| t.entries().to_vec())
                .collect();
            let (signed, _) = literal::burnside_sums(&tuples);
            assert_eq!(
                report.total_sign_multiplicity,
                signed / factorial(n + 2)
            );
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=7 {
            let sum: BigInt = partitions(n).iter().map(|l| class_size(l, n)).sum();
            assert_eq!(sum, factorial(n));
        }
    }
}
