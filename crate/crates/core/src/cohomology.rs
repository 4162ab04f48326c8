//! The rewrite engine for `H*(Pet_n; Q)`.
//!
//! A [`CohomologyClass`] is a finite rational combination of square-free
//! monomials `ϖ_S = ∏_{i∈S} ϖ_i` (the key is the support `S`, the coefficient
//! is that of the monomial, not of the basis class `ϖ_S / m_S`). Products are
//! reduced back to square-free form with the run rule: for a maximal run
//! `{a, …, b} ∋ i` of `S`,
//!
//! ```text
//! ϖ_i · ϖ_S = (b-i+1)/(b-a+2) · ϖ_{S ∪ {a-1}} + (i-a+1)/(b-a+2) · ϖ_{S ∪ {b+1}}
//! ```
//!
//! where terms with `a - 1 = 0` or `b + 1 = n` are dropped.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

pub type Rational = BigRational;

/// `L ↦ d_JK^L`, nonzero entries only.
pub type Expansion = BTreeMap<IndexSet, BigUint>;

pub(crate) fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn from_uint(x: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, x.clone()))
}

/// Converts a rational `L`-indexed table to structure constants, failing on
/// any non-integral or negative value.
pub fn integral_expansion(table: BTreeMap<IndexSet, Rational>, context: &str) -> Result<Expansion> {
    let mut out = Expansion::new();
    for (l, value) in table {
        if !value.is_integer() || value.is_negative() {
            return Err(Error::Consistency(format!(
                "{context}: coefficient of ϖ_{{{l}}} is {value}, not a non-negative integer"
            )));
        }
        if let Some(v) = value.to_integer().to_biguint() {
            if !v.is_zero() {
                out.insert(l, v);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    n: usize,
    terms: BTreeMap<IndexSet, Rational>,
}

impl CohomologyClass {
    pub fn zero(n: usize) -> Result<Self> {
        IndexSet::empty(n)?;
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    /// The class `{∅ ↦ 1}`.
    pub fn unit(n: usize) -> Result<Self> {
        Ok(Self::monomial(&IndexSet::empty(n)?))
    }

    /// The square-free monomial `∏_{i∈S} ϖ_i`.
    pub fn monomial(support: &IndexSet) -> Self {
        Self::term(support, Rational::one())
    }

    pub fn term(support: &IndexSet, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(*support, coeff);
        }
        Self {
            n: support.n(),
            terms,
        }
    }

    /// `ϖ_J = (1/m_J) ∏_{i∈J} ϖ_i`, which is also the Peterson Schubert class
    /// `p_{v_J}`.
    pub fn peterson_schubert(j: &IndexSet) -> Self {
        Self::term(j, from_uint(&j.m_factor()).recip())
    }

    /// Builds a class from `(support, coefficient)` pairs; supports must share
    /// the rank `n`.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IndexSet, Rational)>,
    {
        let mut class = Self::zero(n)?;
        for (s, c) in terms {
            if s.n() != n {
                return Err(Error::RankMismatch(n, s.n()));
            }
            class.accumulate(s, c);
        }
        Ok(class)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<IndexSet, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, support: &IndexSet) -> Rational {
        self.terms
            .get(support)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common cohomological degree (in units of `H^2`) if the class is
    /// nonzero and homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(IndexSet::len);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn accumulate(&mut self, support: IndexSet, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(support).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&support);
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n, other.n))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.accumulate(*s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self {
                n: self.n,
                terms: BTreeMap::new(),
            };
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(s, c)| (*s, c * r)).collect(),
        }
    }

    /// Multiplies by the generator `ϖ_i` using the run rule.
    pub fn multiply_generator(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (s, c) in &self.terms {
            let Some((a, b)) = s.run_containing(i) else {
                out.accumulate(s.with(i)?, c.clone());
                continue;
            };
            let denom = b - a + 2;
            if a > 1 {
                out.accumulate(s.with(a - 1)?, c * ratio(b - i + 1, denom));
            }
            if b + 1 < self.n {
                out.accumulate(s.with(b + 1)?, c * ratio(i - a + 1, denom));
            }
        }
        Ok(out)
    }

    /// Ring product. Repeated generators `S1 ∩ S2` are folded into the
    /// square-free monomial on `S1 ∪ S2` in increasing order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_with_fold_order(other, |common| common.to_vec())
    }

    /// Ring product with a caller-chosen folding order for the repeated
    /// generators. `order` receives `S1 ∩ S2` and must return a permutation of
    /// its members. The result does not depend on the order; this entry point
    /// exists to check exactly that.
    pub fn multiply_with_fold_order<F>(&self, other: &Self, mut order: F) -> Result<Self>
    where
        F: FnMut(&IndexSet) -> Vec<usize>,
    {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n)?;
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                let common = s1.intersection(s2)?;
                let sequence = order(&common);
                let mut sorted = sequence.clone();
                sorted.sort_unstable();
                if sorted != common.to_vec() {
                    return Err(Error::Consistency(format!(
                        "fold order {sequence:?} is not a permutation of {{{common}}}"
                    )));
                }
                let mut partial = Self::term(&s1.union(s2)?, c1 * c2);
                for i in sequence {
                    partial = partial.multiply_generator(i)?;
                }
                for (s, c) in partial.terms {
                    out.accumulate(s, c);
                }
            }
        }
        Ok(out)
    }

    /// Coefficients in the basis `{ϖ_L}`: `m_L` times the monomial coefficient.
    pub fn to_varpi_basis(&self) -> BTreeMap<IndexSet, Rational> {
        self.terms
            .iter()
            .map(|(l, c)| (*l, c * from_uint(&l.m_factor())))
            .collect()
    }

    /// `∫_{Pet_n}`: only the top-degree monomial `ϖ_1⋯ϖ_{n-1}` contributes, with
    /// value `(n-1)!`.
    pub fn integral(&self) -> Rational {
        let top = IndexSet::full(self.n).expect("rank validated at construction");
        self.coefficient(&top) * from_uint(&top.m_factor())
    }

    /// `⟨[X_J], c⟩`, the `ϖ_J`-coefficient of `c`.
    pub fn pairing(&self, j: &IndexSet) -> Rational {
        self.coefficient(j) * from_uint(&j.m_factor())
    }
}

/// `d_JK^L` computed by the rewrite engine.
pub fn structure_constants_rewrite(j: &IndexSet, k: &IndexSet) -> Result<Expansion> {
    let product =
        CohomologyClass::peterson_schubert(j).multiply(&CohomologyClass::peterson_schubert(k))?;
    let expansion = integral_expansion(product.to_varpi_basis(), "rewrite engine")?;
    let union = j.union(k)?;
    for l in expansion.keys() {
        if !union.is_subset(l)? || l.len() != j.len() + k.len() {
            return Err(Error::Consistency(format!(
                "rewrite engine: ϖ_{{{l}}} violates the support condition for J={{{j}}}, K={{{k}}}"
            )));
        }
    }
    Ok(expansion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(n, members.iter().copied()).unwrap()
    }

    fn mono(n: usize, members: &[usize]) -> CohomologyClass {
        CohomologyClass::monomial(&set(n, members))
    }

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    #[test]
    fn additive_structure() {
        let w1 = mono(4, &[1]);
        assert!(w1.add(&w1.scale(&q(-1, 1))).unwrap().is_zero());
        assert!(CohomologyClass::unit(4).unwrap().scale(&q(0, 1)).is_zero());
        let sum = CohomologyClass::unit(4)
            .unwrap()
            .add(&w1.scale(&q(2, 1)))
            .unwrap();
        assert_eq!(sum.terms().len(), 2);
        assert_eq!(sum.coefficient(&set(4, &[])), q(1, 1));
        assert_eq!(sum.coefficient(&set(4, &[1])), q(2, 1));
        assert_eq!(sum.degree(), None);
        assert!(w1.add(&mono(5, &[1])).is_err());
    }

    #[test]
    fn multiply_generator_examples() {
        let c = mono(6, &[2, 3]).multiply_generator(2).unwrap();
        let expected = CohomologyClass::from_terms(
            6,
            [(set(6, &[1, 2, 3]), q(2, 3)), (set(6, &[2, 3, 4]), q(1, 3))],
        )
        .unwrap();
        assert_eq!(c, expected);

        let c = mono(6, &[3]).multiply_generator(3).unwrap();
        assert_eq!(c.coefficient(&set(6, &[2, 3])), q(1, 2));
        assert_eq!(c.coefficient(&set(6, &[3, 4])), q(1, 2));
        assert_eq!(c.terms().len(), 2);

        assert!(mono(2, &[1]).multiply_generator(1).unwrap().is_zero());
        assert!(mono(4, &[1]).multiply_generator(0).is_err());
        assert!(mono(4, &[1]).multiply_generator(4).is_err());
    }

    #[test]
    fn multiply_golden_monomials() {
        // ϖ_J ϖ_K = (1/6) mono_J mono_K with d = 3456, 24, 240 on m_L = 8!, 3!5!, 7!
        let p = mono(10, &[1, 3, 5, 6, 7])
            .multiply(&mono(10, &[3, 6, 8]))
            .unwrap();
        let expected = CohomologyClass::from_terms(
            10,
            [
                (set(10, &[1, 2, 3, 4, 5, 6, 7, 8]), q(18, 35)),
                (set(10, &[1, 2, 3, 5, 6, 7, 8, 9]), q(1, 5)),
                (set(10, &[1, 3, 4, 5, 6, 7, 8, 9]), q(2, 7)),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn multiply_unit_and_overflow() {
        let c = mono(6, &[1, 2, 4]).add(&mono(6, &[3])).unwrap();
        assert_eq!(c.multiply(&CohomologyClass::unit(6).unwrap()).unwrap(), c);
        assert!(mono(2, &[1]).multiply(&mono(2, &[1])).unwrap().is_zero());
    }

    #[test]
    fn peterson_schubert_examples() {
        let j = set(9, &[2, 3, 4, 7, 8]);
        assert_eq!(
            CohomologyClass::peterson_schubert(&j).coefficient(&j),
            q(1, 12)
        );
        assert_eq!(
            CohomologyClass::peterson_schubert(&set(5, &[])),
            CohomologyClass::unit(5).unwrap()
        );
        assert_eq!(
            CohomologyClass::peterson_schubert(&set(5, &[3])),
            mono(5, &[3])
        );
    }

    #[test]
    fn varpi_basis() {
        let b = mono(4, &[1, 2]).to_varpi_basis();
        assert_eq!(b.get(&set(4, &[1, 2])), Some(&q(2, 1)));
        assert!(CohomologyClass::zero(4)
            .unwrap()
            .to_varpi_basis()
            .is_empty());
    }

    #[test]
    fn rewrite_constants() {
        let got =
            structure_constants_rewrite(&set(10, &[1, 3, 5, 6, 7]), &set(10, &[3, 6, 8])).unwrap();
        let expected: Expansion = [
            (set(10, &[1, 2, 3, 4, 5, 6, 7, 8]), 3456u32),
            (set(10, &[1, 2, 3, 5, 6, 7, 8, 9]), 24),
            (set(10, &[1, 3, 4, 5, 6, 7, 8, 9]), 240),
        ]
        .into_iter()
        .map(|(l, d)| (l, BigUint::from(d)))
        .collect();
        assert_eq!(got, expected);

        let j = set(7, &[2, 3, 5]);
        let unit = structure_constants_rewrite(&j, &set(7, &[])).unwrap();
        assert_eq!(unit, [(j, BigUint::from(1u32))].into_iter().collect());

        let small = structure_constants_rewrite(&set(4, &[1]), &set(4, &[2])).unwrap();
        assert_eq!(
            small,
            [(set(4, &[1, 2]), BigUint::from(2u32))]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn integral_examples() {
        assert_eq!(mono(4, &[1, 2, 3]).integral(), q(6, 1));
        assert_eq!(
            CohomologyClass::peterson_schubert(&IndexSet::full(6).unwrap()).integral(),
            q(1, 1)
        );
        assert_eq!(mono(4, &[1, 2]).integral(), q(0, 1));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(mono(4, &[1, 2]).pairing(&set(4, &[1, 2])), q(2, 1));
        assert_eq!(mono(4, &[2, 3]).pairing(&set(4, &[1, 3])), q(0, 1));
        let j = set(7, &[1, 2, 4, 5, 6]);
        assert_eq!(CohomologyClass::peterson_schubert(&j).pairing(&j), q(1, 1));
    }

    #[test]
    fn fold_order_must_be_a_permutation() {
        let a = mono(6, &[2, 3]);
        assert!(a.multiply_with_fold_order(&a, |_| vec![2]).is_err());
        let rev = a
            .multiply_with_fold_order(&a, |c| c.iter().rev().collect())
            .unwrap();
        assert_eq!(rev, a.multiply(&a).unwrap());
    }

    #[test]
    fn integral_expansion_rejects_bad_values() {
        let l = set(4, &[1]);
        assert!(integral_expansion([(l, q(1, 2))].into_iter().collect(), "t").is_err());
        assert!(integral_expansion([(l, q(-1, 1))].into_iter().collect(), "t").is_err());
        assert!(
            integral_expansion([(l, q(0, 1))].into_iter().collect(), "t")
                .unwrap()
                .is_empty()
        );
    }
}
