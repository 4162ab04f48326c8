//! Permutations of `S_n` in one-line notation.
//!
//! Composition is `(uv)(p) = u(v(p))`. With this convention the Peterson
//! Schubert index `v_J = s_{j_1} ⋯ s_{j_m}` (increasing `j`) has a definite
//! one-line form.

use std::fmt;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// A permutation stored as `[w(1), …, w(n)]` with 1-based values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple_transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Self { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(p)` for `1 ≤ p ≤ n`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1]
    }

    /// `self ∘ other`, i.e. `p ↦ self(other(p))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(Self {
            images: other.images.iter().map(|&p| self.apply(p)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (p, &x) in self.images.iter().enumerate() {
            images[x - 1] = p + 1;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &x)| x == p + 1)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|p| (p + 1..w.len()).filter(|&q| w[p] > w[q]).count())
            .sum()
    }

    /// Bruhat order via the tableau criterion: `u ≤ v` iff for every `k` the
    /// sorted prefix `{u(1), …, u(k)}` is entrywise at most that of `v`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        let mut u_prefix = Vec::with_capacity(self.n());
        let mut v_prefix = Vec::with_capacity(self.n());
        for k in 0..self.n() {
            insert_sorted(&mut u_prefix, self.images[k]);
            insert_sorted(&mut v_prefix, other.images[k]);
            if u_prefix.iter().zip(&v_prefix).any(|(a, b)| a > b) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `w_J`, the longest element of the Young subgroup `S_J`: every component
    /// `{lo, …, hi}` of `J` reverses the positions `lo, …, hi + 1`.
    pub fn longest_w(j: &IndexSet) -> Self {
        let mut images: Vec<usize> = (1..=j.n()).collect();
        for (lo, hi) in j.runs() {
            for p in lo..=hi + 1 {
                images[p - 1] = lo + hi + 1 - p;
            }
        }
        Self { images }
    }

    /// `v_J = s_{j_1} s_{j_2} ⋯ s_{j_m}` for `J = {j_1 < ⋯ < j_m}`.
    pub fn subword_v(j: &IndexSet) -> Self {
        // Right-multiplying by s_i swaps positions i and i+1.
        let mut images: Vec<usize> = (1..=j.n()).collect();
        for i in j.iter() {
            images.swap(i - 1, i);
        }
        Self { images }
    }

    /// The `T`-fixed points `{w_J : J ⊆ [n-1]}` of `Pet_n`, in canonical subset
    /// order of `J`.
    pub fn peterson_fixed_points(n: usize) -> Result<Vec<Permutation>> {
        Ok(IndexSet::all_subsets(n)?
            .map(|j| Self::longest_w(&j))
            .collect())
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn set(n: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(n, members.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn longest_w_examples() {
        assert_eq!(
            Permutation::longest_w(&set(10, &[1, 2, 4, 5, 6, 9])),
            perm(&[3, 2, 1, 7, 6, 5, 4, 8, 10, 9])
        );
        assert!(Permutation::longest_w(&IndexSet::empty(5).unwrap()).is_identity());
        assert_eq!(
            Permutation::longest_w(&set(8, &[1, 4, 5, 7])),
            perm(&[2, 1, 3, 6, 5, 4, 8, 7])
        );
    }

    #[test]
    fn longest_w_matches_its_reduced_word() {
        // (s_1)(s_4 s_5 s_4)(s_7)
        let s = |i| Permutation::simple_transposition(8, i).unwrap();
        let word = [1, 4, 5, 4, 7];
        let product = word.iter().fold(Permutation::identity(8), |acc, &i| {
            acc.compose(&s(i)).unwrap()
        });
        assert_eq!(product, Permutation::longest_w(&set(8, &[1, 4, 5, 7])));
    }

    #[test]
    fn subword_v_examples() {
        assert_eq!(
            Permutation::subword_v(&set(4, &[1, 3])),
            perm(&[2, 1, 4, 3])
        );
        assert_eq!(
            Permutation::subword_v(&set(4, &[1, 2])),
            perm(&[2, 3, 1, 4])
        );
        assert!(Permutation::subword_v(&IndexSet::empty(4).unwrap()).is_identity());
    }

    #[test]
    fn subword_v_is_the_product_of_transpositions() {
        for j in IndexSet::all_subsets(6).unwrap() {
            let product = j.iter().fold(Permutation::identity(6), |acc, i| {
                acc.compose(&Permutation::simple_transposition(6, i).unwrap())
                    .unwrap()
            });
            assert_eq!(product, Permutation::subword_v(&j));
            assert_eq!(product.length(), j.len());
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(perm(&[3, 2, 1]).length(), 3);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(perm(&[3, 2, 1, 7, 6, 5, 4, 8, 10, 9]).length(), 10);
    }

    #[test]
    fn bruhat_examples() {
        let u = Permutation::longest_w(&set(8, &[1, 4, 5, 7]));
        let v = Permutation::longest_w(&set(8, &[1, 2, 4, 5, 6, 7]));
        assert!(u.bruhat_leq(&v).unwrap());
        assert!(v.bruhat_leq(&v).unwrap());
        let s2 = Permutation::simple_transposition(3, 2).unwrap();
        let w1 = Permutation::longest_w(&set(3, &[1]));
        assert!(!s2.bruhat_leq(&w1).unwrap());
        assert_eq!(
            s2.bruhat_leq(&Permutation::identity(4)),
            Err(Error::RankMismatch(3, 4))
        );
    }

    #[test]
    fn fixed_points() {
        assert_eq!(
            Permutation::peterson_fixed_points(2).unwrap(),
            vec![Permutation::identity(2), perm(&[2, 1])]
        );
        assert_eq!(
            Permutation::peterson_fixed_points(3).unwrap(),
            vec![
                Permutation::identity(3),
                perm(&[2, 1, 3]),
                perm(&[1, 3, 2]),
                perm(&[3, 2, 1])
            ]
        );
        let mut four = Permutation::peterson_fixed_points(4).unwrap();
        four.sort();
        four.dedup();
        assert_eq!(four.len(), 8);
    }

    #[test]
    fn longest_w_invariants() {
        for n in 1..=8 {
            for j in IndexSet::all_subsets(n).unwrap() {
                let w = Permutation::longest_w(&j);
                assert!(w.compose(&w).unwrap().is_identity());
                let expected: usize = j
                    .runs()
                    .iter()
                    .map(|&(lo, hi)| (hi - lo + 1) * (hi - lo + 2) / 2)
                    .sum();
                assert_eq!(w.length(), expected);
            }
        }
    }

    #[test]
    fn bruhat_lemmas_small() {
        for n in 1..=6 {
            for j in IndexSet::all_subsets(n).unwrap() {
                let wj = Permutation::longest_w(&j);
                for i in 1..n {
                    let s = Permutation::simple_transposition(n, i).unwrap();
                    assert_eq!(s.bruhat_leq(&wj).unwrap(), j.contains(i));
                }
                for jp in IndexSet::all_subsets(n).unwrap() {
                    let wjp = Permutation::longest_w(&jp);
                    assert_eq!(wjp.bruhat_leq(&wj).unwrap(), jp.is_subset(&j).unwrap());
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(perm(&[2, 1, 3]).to_string(), "[2,1,3]");
    }
}
