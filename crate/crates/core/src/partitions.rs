//! Brute-force partition ground truth: enumeration, conjugation, hook
//! multisets, and the classical identities used as cross-checks.
//!
//! Everything here works on explicit Young diagrams, so it is exponential in
//! n and exists to validate the generating-function pipeline on small sizes,
//! not to be fast. Invariants:
//!
//! * `Partition` parts are weakly decreasing and positive; the empty list is
//!   the unique partition of 0;
//! * enumeration orders are lexicographically decreasing, so golden tests
//!   are stable;
//! * self-conjugate enumeration goes through the bijection with partitions
//!   into distinct odd parts (the odd parts are the principal hook lengths)
//!   and re-verifies self-conjugacy of every constructed partition.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{CoeffPoly, QSeries, Rational, Ring};
use crate::stats::HookDistribution;

/// A partition of a non-negative integer, stored as its weakly decreasing
/// positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(
            parts.last().is_none_or(|&p| p >= 1),
            "partition parts must be positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|, the number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The conjugate partition λ' with λ'_k = #{j : λ_j >= k}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut conj = vec![0usize; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.parts == self.conjugate().parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The multiset of hook lengths of a partition, one entry per diagram cell.
/// Stored sorted descending, so equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookMultiset {
    hooks: Vec<usize>,
}

impl HookMultiset {
    fn new(mut hooks: Vec<usize>) -> Self {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        HookMultiset { hooks }
    }

    /// Hook lengths in descending order.
    pub fn hooks(&self) -> &[usize] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.hooks.first().copied()
    }

    /// Multiplicity of `t` in the multiset.
    pub fn count(&self, t: usize) -> usize {
        self.hooks.iter().filter(|&&h| h == t).count()
    }
}

/// All partitions of n, each exactly once, in lexicographically decreasing
/// order: (n) first, (1,1,...,1) last.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All self-conjugate partitions of n, in lexicographically decreasing
/// order, via the principal-hook bijection with partitions of n into
/// distinct odd parts.
pub fn enumerate_self_conjugate(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = max_part.min(remaining);
        if hi == 0 {
            return; // leftover size but no parts allowed: dead branch
        }
        let mut d = if hi % 2 == 0 { hi - 1 } else { hi };
        while d >= 1 {
            prefix.push(d);
            rec(remaining - d, d.saturating_sub(2), prefix, out);
            prefix.pop();
            if d < 3 {
                break;
            }
            d -= 2;
        }
    }
    let mut odd_sets = Vec::new();
    if n == 0 {
        odd_sets.push(Vec::new());
    } else {
        rec(n, n, &mut Vec::new(), &mut odd_sets);
    }
    odd_sets
        .iter()
        .map(|odds| {
            let p = from_principal_hooks(odds);
            assert!(
                p.is_self_conjugate() && p.size() == n,
                "principal-hook construction broke for odd parts {odds:?}"
            );
            p
        })
        .collect()
}

/// Builds the self-conjugate partition whose i-th principal hook (the hook
/// of cell (i,i)) has length `odds[i]`.
fn from_principal_hooks(odds: &[usize]) -> Partition {
    if odds.is_empty() {
        return Partition::empty();
    }
    // The i-th hook (0-based) contributes row i of length i + arm + 1 and a
    // leg of arm cells in column i; later hooks nest strictly inside.
    let mut rows = vec![0usize; (odds[0] - 1) / 2 + 1];
    for (i, &d) in odds.iter().enumerate() {
        let arm = (d - 1) / 2;
        rows[i] = i + arm + 1;
        for r in rows.iter_mut().take(i + arm + 1).skip(i + 1) {
            *r = (*r).max(i + 1);
        }
    }
    Partition::new(rows)
}

/// The hook numbers h(j,k) = (λ_j - j) + (λ'_k - k) + 1 over all cells
/// (j,k) of the diagram.
pub fn hook_multiset(p: &Partition) -> HookMultiset {
    let conj = p.conjugate();
    let mut hooks = Vec::with_capacity(p.size());
    for (j, &row) in p.parts.iter().enumerate() {
        for (k, &col) in conj.parts.iter().enumerate().take(row) {
            // arm + leg + 1; j, k are 0-based, so the 1-based formula's
            // offsets regroup into two nonnegative pieces
            hooks.push((row - k - 1) + (col - j - 1) + 1);
        }
    }
    HookMultiset::new(hooks)
}

/// N_t(λ), the number of cells whose hook length is exactly t.
pub fn count_t_hooks(p: &Partition, t: usize) -> usize {
    assert!(t >= 1, "hook lengths are positive");
    hook_multiset(p).count(t)
}

/// Exact counts of partitions of n (all of them, or only the
/// self-conjugate ones) grouped by their N_t value.
pub fn brute_distribution(t: usize, n: usize, self_conjugate_only: bool) -> HookDistribution {
    assert!(t >= 1, "hook lengths are positive");
    let list = if self_conjugate_only {
        enumerate_self_conjugate(n)
    } else {
        enumerate_partitions(n)
    };
    let mut counts: BTreeMap<usize, BigInt> = BTreeMap::new();
    for p in &list {
        *counts.entry(count_t_hooks(p, t)).or_default() += 1u32;
    }
    HookDistribution::from_counts(t, n, &counts)
}

/// The dimension n!/Π h of the irreducible S_n-representation indexed by λ,
/// by the hook length formula. The division is checked to be exact; an
/// inexact division would mean the hook computation is broken.
pub fn ftr_dimension(p: &Partition) -> Result<BigInt> {
    let n = p.size();
    assert!(n >= 1, "dimension needs a nonempty partition");
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= k;
    }
    let mut prod = BigInt::one();
    for &h in hook_multiset(p).hooks() {
        prod *= h;
    }
    let (quot, rem) = fact.div_rem(&prod);
    if !rem.is_zero() {
        return Err(Error::InexactDivision { n });
    }
    Ok(quot)
}

/// The hook side Σ_{λ⊢n} Π_{h∈ℋ(λ)} (1 - z/h²) of the Nekrasov-Okounkov
/// identity at fixed n, as an exact polynomial in z.
pub fn nekrasov_okounkov_lhs(n: usize) -> CoeffPoly {
    let mut sum = CoeffPoly::zero();
    for p in enumerate_partitions(n) {
        // Π (1 - z/h²) = Π (h² - z) / Π h², keeping integer coefficients
        // until the final constant division
        let mut numer = CoeffPoly::one();
        let mut denom = Rational::one();
        for &h in hook_multiset(&p).hooks() {
            let h2 = Rational::from((h * h) as i64);
            let mut factor = CoeffPoly::monomial(Rational::from(-1), 1);
            factor += &CoeffPoly::constant(h2.clone());
            numer = numer.mul_ref(&factor);
            denom = &denom * &h2;
        }
        sum += &numer.mul_ref(&CoeffPoly::constant(denom.recip().expect("hooks are nonzero")));
    }
    sum
}

/// The product side of the same identity: the coefficient of q^n in
/// Π_{k<=n} (1-q^k)^(z-1), expanded with the binomial series. The
/// polynomial-in-z coefficients live in the same Laurent type with the
/// variable read as z.
pub fn nekrasov_okounkov_rhs(n: usize) -> CoeffPoly {
    let mut acc = QSeries::<CoeffPoly>::one(n);
    for k in 1..=n.max(1) {
        let mut coeffs = vec![CoeffPoly::zero(); n + 1];
        let mut binom = CoeffPoly::one(); // C(z-1, j), built incrementally
        let mut j = 0usize;
        while j * k <= n {
            coeffs[j * k] = if j % 2 == 0 {
                binom.clone()
            } else {
                let mut neg = binom.clone();
                neg.neg_assign();
                neg
            };
            j += 1;
            // C(z-1, j) = C(z-1, j-1) * (z - j) / j
            let mut lin = CoeffPoly::var();
            lin -= &CoeffPoly::constant(Rational::from(j as i64));
            binom = binom.mul_ref(&lin);
            binom = binom.mul_ref(&CoeffPoly::constant(
                Rational::from(j as i64).recip().unwrap(),
            ));
        }
        acc = acc.mul(&QSeries::from_coeffs(coeffs));
    }
    acc.coeff(n).unwrap().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::pochhammer;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(6).len(), 11);
        assert_eq!(enumerate_partitions(10).len(), 42);
        let list = enumerate_partitions(9);
        assert_eq!(list.first().unwrap(), &p(&[9]));
        assert_eq!(list.last().unwrap(), &p(&[1; 9]));
        for w in list.windows(2) {
            assert!(w[0] > w[1], "not lexicographically decreasing: {w:?}");
        }
    }

    #[test]
    fn self_conjugate_enumeration() {
        assert_eq!(enumerate_self_conjugate(0), vec![Partition::empty()]);
        assert_eq!(enumerate_self_conjugate(2), vec![]);
        // n = 8: odd-part sets {7,1} and {5,3}
        assert_eq!(
            enumerate_self_conjugate(8),
            vec![p(&[4, 2, 1, 1]), p(&[3, 3, 2])]
        );
    }

    #[test]
    fn self_conjugate_matches_filter_up_to_25() {
        for n in 0..=25 {
            let filtered: Vec<Partition> = enumerate_partitions(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
                .collect();
            assert_eq!(enumerate_self_conjugate(n), filtered, "n = {n}");
        }
    }

    #[test]
    fn self_conjugate_counts_match_series_up_to_40() {
        let sc = pochhammer::<Rational>(&Rational::from(-1), 1, 2, None, 40).unwrap();
        for n in 0..=40 {
            let count = Rational::from(enumerate_self_conjugate(n).len() as i64);
            assert_eq!(sc.coeff(n).unwrap(), &count, "n = {n}");
        }
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(p(&[5, 4, 2]).conjugate(), p(&[3, 3, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        for n in 0..=20 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_multiset_examples() {
        let h = hook_multiset(&p(&[5, 4, 2]));
        assert_eq!(h.hooks(), &[7, 6, 5, 4, 4, 3, 2, 2, 1, 1, 1]);
        assert_eq!(h.len(), 11);
        assert_eq!(h.max(), Some(5 + 3 - 1));
        assert_eq!(hook_multiset(&p(&[1])).hooks(), &[1]);
        assert_eq!(hook_multiset(&p(&[2, 1])).hooks(), &[3, 1, 1]);
        assert!(hook_multiset(&Partition::empty()).is_empty());
    }

    #[test]
    fn hook_multiset_invariants_up_to_15() {
        for n in 0..=15 {
            for lam in enumerate_partitions(n) {
                let h = hook_multiset(&lam);
                assert_eq!(h.len(), n);
                if n > 0 {
                    assert_eq!(h.max(), Some(lam.parts()[0] + lam.num_parts() - 1));
                }
                assert_eq!(h, hook_multiset(&lam.conjugate()));
            }
        }
    }

    #[test]
    fn count_t_hooks_examples() {
        assert_eq!(count_t_hooks(&p(&[2, 1]), 2), 0);
        assert_eq!(count_t_hooks(&p(&[2, 1]), 1), 2);
        assert_eq!(count_t_hooks(&Partition::empty(), 7), 0);
    }

    #[test]
    fn brute_distribution_examples() {
        let d = brute_distribution(2, 6, false);
        assert_eq!(d.counts().len(), 3);
        assert_eq!(d.count(0), BigInt::from(1));
        assert_eq!(d.count(1), BigInt::from(4));
        assert_eq!(d.count(2), BigInt::from(6));
        assert_eq!(d.total(), &BigInt::from(11));

        let d = brute_distribution(1, 3, true);
        assert_eq!(d.counts().len(), 3);
        assert_eq!(d.count(0), BigInt::zero());
        assert_eq!(d.count(1), BigInt::zero());
        assert_eq!(d.count(2), BigInt::one());

        for flag in [false, true] {
            let d = brute_distribution(5, 0, flag);
            assert_eq!(d.counts(), &[BigInt::one()]);
        }
    }

    #[test]
    fn ftr_dimension_examples() {
        assert_eq!(ftr_dimension(&p(&[7])).unwrap(), BigInt::one());
        assert_eq!(ftr_dimension(&p(&[2, 1])).unwrap(), BigInt::from(2));
        assert_eq!(ftr_dimension(&p(&[5, 4, 2])).unwrap(), BigInt::from(990));
    }

    #[test]
    fn dimension_squares_sum_to_factorial() {
        for n in 1..=8 {
            let mut sum = BigInt::zero();
            for lam in enumerate_partitions(n) {
                let d = ftr_dimension(&lam).unwrap();
                sum += &d * &d;
            }
            let mut fact = BigInt::one();
            for k in 2..=n {
                fact *= k;
            }
            assert_eq!(sum, fact, "n = {n}");
        }
    }

    #[test]
    fn nekrasov_okounkov_identity_up_to_8() {
        assert_eq!(nekrasov_okounkov_lhs(0), CoeffPoly::one());
        let mut expect1 = CoeffPoly::one();
        expect1 -= &CoeffPoly::var();
        assert_eq!(nekrasov_okounkov_lhs(1), expect1);
        for n in 0..=8 {
            assert_eq!(nekrasov_okounkov_lhs(n), nekrasov_okounkov_rhs(n), "n = {n}");
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[5, 4, 2]).to_string(), "(5,4,2)");
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn rejects_increasing_parts() {
        Partition::new(vec![2, 3]);
    }
}
