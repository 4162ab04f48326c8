//! Subsets of the type-A Dynkin vertex set `[n-1] = {1, …, n-1}`.
//!
//! An [`IndexSet`] labels the basis class `ϖ_J`, the fixed point `w_J` and the
//! Hessenberg subvariety `X_J`. Two vertices are adjacent iff they differ by 1,
//! so connected components are maximal runs of consecutive integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest supported ambient rank. Members of `[n-1]` fit in a `u32` mask.
pub const MAX_RANK: usize = 32;

/// A subset `J ⊆ [n-1]` together with its ambient rank `n`.
///
/// Bit `i - 1` of the mask stores membership of `i`. The derived order compares
/// rank first and then the mask as an integer (colexicographic order on
/// subsets); this is the canonical subset order used for all output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: u8,
    bits: u32,
}

/// Maximal runs of consecutive integers of a set, with `m_J = ∏ |J_k|!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Inclusive `(lo, hi)` bounds, ascending and pairwise non-adjacent.
    pub runs: Vec<(usize, usize)>,
    pub m_factor: BigUint,
}

fn check_rank(n: usize) -> Result<()> {
    if (1..=MAX_RANK).contains(&n) {
        Ok(())
    } else {
        Err(Error::RankOutOfRange(n))
    }
}

fn factorial(k: usize) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

impl IndexSet {
    pub fn empty(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self {
            n: n as u8,
            bits: 0,
        })
    }

    /// The whole vertex set `[n-1]`.
    pub fn full(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(Self {
            n: n as u8,
            bits: Self::universe_mask(n),
        })
    }

    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut set = Self::empty(n)?;
        for i in members {
            set = set.with(i)?;
        }
        Ok(set)
    }

    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        check_rank(n)?;
        if bits & !Self::universe_mask(n) != 0 {
            let bad = (bits & !Self::universe_mask(n)).trailing_zeros() as usize + 1;
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        Ok(Self { n: n as u8, bits })
    }

    fn universe_mask(n: usize) -> u32 {
        ((1u64 << (n - 1)) - 1) as u32
    }

    /// All `2^(n-1)` subsets of `[n-1]` in canonical order.
    pub fn all_subsets(n: usize) -> Result<impl Iterator<Item = IndexSet>> {
        check_rank(n)?;
        let n8 = n as u8;
        Ok(
            (0..=Self::universe_mask(n) as u64).map(move |bits| IndexSet {
                n: n8,
                bits: bits as u32,
            }),
        )
    }

    /// All subsets of `[n-1]` of the given cardinality, in canonical order.
    pub fn subsets_of_size(n: usize, size: usize) -> Result<impl Iterator<Item = IndexSet>> {
        Ok(Self::all_subsets(n)?.filter(move |s| s.len() == size))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// `false` for anything outside `[1, n-1]`.
    pub fn contains(&self, i: usize) -> bool {
        (1..self.n()).contains(&i) && self.bits & (1 << (i - 1)) != 0
    }

    /// Returns `self ∪ {i}`.
    pub fn with(&self, i: usize) -> Result<Self> {
        if !(1..self.n()).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(Self {
            n: self.n,
            bits: self.bits | (1 << (i - 1)),
        })
    }

    /// Returns `self \ {i}`; removing a non-member is a no-op.
    pub fn without(&self, i: usize) -> Self {
        if self.contains(i) {
            Self {
                n: self.n,
                bits: self.bits & !(1 << (i - 1)),
            }
        } else {
            *self
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::RankMismatch(self.n(), other.n()))
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(Self {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(Self {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_rank(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..self.n()).filter(move |i| bits & (1 << (i - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The maximal run `{a, …, b}` of consecutive members containing `i`.
    pub fn run_containing(&self, i: usize) -> Option<(usize, usize)> {
        if !self.contains(i) {
            return None;
        }
        let mut a = i;
        while a > 1 && self.contains(a - 1) {
            a -= 1;
        }
        let mut b = i;
        while self.contains(b + 1) {
            b += 1;
        }
        Some((a, b))
    }

    /// Maximal runs of consecutive integers, ascending.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for i in self.iter() {
            match runs.last_mut() {
                Some((_, hi)) if *hi + 1 == i => *hi = i,
                _ => runs.push((i, i)),
            }
        }
        runs
    }

    pub fn decompose(&self) -> ComponentDecomposition {
        let runs = self.runs();
        let m_factor = runs
            .iter()
            .map(|&(lo, hi)| factorial(hi - lo + 1))
            .product();
        ComponentDecomposition { runs, m_factor }
    }

    /// `m_J = |J_1|! ⋯ |J_m|!` over the connected components.
    pub fn m_factor(&self) -> BigUint {
        self.decompose().m_factor
    }

    /// `h_J(i) = i + 1` for `i ∈ J`, else `i`, for `i = 1, …, n`.
    pub fn hessenberg_function(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|i| if self.contains(i) { i + 1 } else { i })
            .collect()
    }

    /// Ranks `|J_k| + 1` of the Peterson factors of `X_J`.
    pub fn factor_ranks(&self) -> Vec<usize> {
        self.runs().iter().map(|&(lo, hi)| hi - lo + 2).collect()
    }

    /// Whether `X_J ∩ Ω_{J'}` is non-empty, i.e. `J' ⊆ J`.
    pub fn intersects_dual(&self, dual: &IndexSet) -> Result<bool> {
        self.same_rank(dual)?;
        dual.is_subset(self)
    }

    pub fn dim_xj(&self) -> usize {
        self.len()
    }

    pub fn codim_omegaj(&self) -> usize {
        self.len()
    }

    /// Parses the external syntax: ascending comma-separated members, `-` for
    /// the empty set.
    pub fn parse(n: usize, input: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        let trimmed = input.trim();
        if trimmed == "-" {
            return Self::empty(n);
        }
        if trimmed.is_empty() {
            return Err(parse_err(
                "empty string; use \"-\" for the empty set".into(),
            ));
        }
        let mut set = Self::empty(n)?;
        let mut last = 0;
        for token in trimmed.split(',') {
            let i = usize::from_str(token.trim())
                .map_err(|e| parse_err(format!("{:?}: {e}", token.trim())))?;
            if i <= last {
                return Err(parse_err("members must be strictly ascending".into()));
            }
            last = i;
            set = set.with(i).map_err(|e| parse_err(e.to_string()))?;
        }
        Ok(set)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let members: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        f.write_str(&members.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}_{}", self, self.n)
    }
}
