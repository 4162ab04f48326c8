//! Independent oracle: normal forms of `ϖ`-monomials by exact Gaussian
//! elimination modulo the relations `ϖ_i α_i = 0`, where
//! `α_i = -ϖ_{i-1} + 2ϖ_i - ϖ_{i+1}` and `ϖ_0 = ϖ_n = 0`.
//!
//! Nothing here uses the run rule of [`crate::cohomology`]. For each rank `n`
//! and degree `d` the relation rows `M · ϖ_i α_i` (`M` of degree `d - 2`) are
//! row-reduced over `Q`. Columns list non-square-free monomials before the
//! square-free ones, so when the presentation is complete every
//! non-square-free monomial is a pivot and the residual basis is exactly the
//! square-free monomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::{from_uint, integral_expansion, Expansion, Rational};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// A monomial `∏ ϖ_i^{e_i}` in the generators of rank `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: usize,
    /// `exponents[i - 1]` is the multiplicity of `ϖ_i`.
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Result<Self> {
        IndexSet::empty(n)?;
        Ok(Self {
            n,
            exponents: vec![0; n - 1],
        })
    }

    pub fn from_exponents(n: usize, exponents: Vec<u32>) -> Result<Self> {
        IndexSet::empty(n)?;
        if exponents.len() != n - 1 {
            return Err(Error::RankMismatch(n, exponents.len() + 1));
        }
        Ok(Self { n, exponents })
    }

    /// The square-free monomial with the given support.
    pub fn square_free(support: &IndexSet) -> Self {
        let n = support.n();
        Self {
            n,
            exponents: (1..n).map(|i| support.contains(i) as u32).collect(),
        }
    }

    /// Multiset union of supports: `∏_{i∈J} ϖ_i · ∏_{i∈K} ϖ_i`.
    pub fn product_of(j: &IndexSet, k: &IndexSet) -> Result<Self> {
        if j.n() != k.n() {
            return Err(Error::RankMismatch(j.n(), k.n()));
        }
        let n = j.n();
        Ok(Self {
            n,
            exponents: (1..n)
                .map(|i| j.contains(i) as u32 + k.contains(i) as u32)
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// The support as an [`IndexSet`], if square-free.
    pub fn support(&self) -> Option<IndexSet> {
        if !self.is_square_free() {
            return None;
        }
        IndexSet::new(self.n, (1..self.n).filter(|&i| self.exponents[i - 1] == 1)).ok()
    }

    fn times(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.exponents[i - 1] += 1;
        out
    }

    /// All monomials of degree `d`, lexicographically with `ϖ_1` most
    /// significant and higher powers first.
    pub fn all_of_degree(n: usize, d: usize) -> Result<Vec<Monomial>> {
        IndexSet::empty(n)?;
        let vars = n - 1;
        let mut out = Vec::new();
        let mut current = vec![0u32; vars];
        fn fill(pos: usize, left: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos == current.len() {
                if left == 0 {
                    out.push(current.clone());
                }
                return;
            }
            if pos + 1 == current.len() {
                current[pos] = left as u32;
                out.push(current.clone());
                current[pos] = 0;
                return;
            }
            for e in (0..=left).rev() {
                current[pos] = e as u32;
                fill(pos + 1, left - e, current, out);
            }
            current[pos] = 0;
        }
        fill(0, d, &mut current, &mut out);
        Ok(out
            .into_iter()
            .map(|exponents| Monomial { n, exponents })
            .collect())
    }
}

impl Monomial {
    /// Degree-`d` monomials divisible by `∏_{i∈floor} ϖ_i`, in
    /// [`Monomial::all_of_degree`] order.
    pub fn multiples_of_degree(floor: &IndexSet, d: usize) -> Result<Vec<Monomial>> {
        let n = floor.n();
        if d < floor.len() {
            IndexSet::empty(n)?;
            return Ok(Vec::new());
        }
        let base = Monomial::square_free(floor);
        let mut out: Vec<Monomial> = Monomial::all_of_degree(n, d - floor.len())?
            .into_iter()
            .map(|m| {
                let exponents = m
                    .exponents
                    .iter()
                    .zip(&base.exponents)
                    .map(|(a, b)| a + b)
                    .collect();
                Monomial { n, exponents }
            })
            .collect();
        // Lexicographic order is preserved by multiplying with a fixed monomial.
        debug_assert!(out.windows(2).all(|w| w[0].exponents > w[1].exponents));
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| match e {
                1 => format!("w{}", k + 1),
                _ => format!("w{}^{}", k + 1, e),
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse row, sorted by column, no explicit zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// The degree-`d` relations of rank `n`, in fixed column order.
#[derive(Debug, Clone)]
pub struct RelationMatrix {
    pub n: usize,
    pub degree: usize,
    /// Non-square-free monomials first, then square-free ones, each block in
    /// [`Monomial::all_of_degree`] order.
    pub columns: Vec<Monomial>,
    /// Number of leading non-square-free columns.
    pub non_square_free: usize,
    /// One row per `(M, i)`, `M` ranging over degree `d - 2` monomials
    /// (outer) and `i` over `1..n` (inner).
    pub rows: Vec<SparseRow>,
}

impl RelationMatrix {
    pub fn build(n: usize, degree: usize) -> Result<Self> {
        Self::build_within(n, degree, &IndexSet::empty(n)?)
    }

    /// The relations living on monomials whose support contains `floor`:
    /// columns are those monomials, rows the `(M, i)` with
    /// `supp(M) ∪ {i} ⊇ floor`. All three monomials of such a row contain
    /// `floor`, so the block is closed. `floor = ∅` gives the full matrix.
    pub fn build_within(n: usize, degree: usize, floor: &IndexSet) -> Result<Self> {
        if floor.n() != n {
            return Err(Error::RankMismatch(n, floor.n()));
        }
        let all = Monomial::multiples_of_degree(floor, degree)?;
        let (mut columns, square_free): (Vec<_>, Vec<_>) =
            all.into_iter().partition(|m| !m.is_square_free());
        let non_square_free = columns.len();
        columns.extend(square_free);
        let index: HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(c, m)| (m, c)).collect();

        let mut rows = Vec::new();
        if degree >= 2 {
            let two = Rational::from_integer(BigInt::from(2));
            let minus_one = -Rational::one();
            let mut generated: Vec<(Monomial, usize)> = Vec::new();
            for i in 1..n {
                for base in Monomial::multiples_of_degree(&floor.without(i), degree - 2)? {
                    generated.push((base, i));
                }
            }
            // Canonical (M, i) order regardless of how the pairs were found.
            let base_rank: HashMap<Monomial, usize> = Monomial::all_of_degree(n, degree - 2)?
                .into_iter()
                .enumerate()
                .map(|(r, m)| (m, r))
                .collect();
            generated.sort_by_key(|(m, i)| (base_rank[m], *i));
            for (base, i) in generated {
                let with_i = base.times(i);
                let mut row: SparseRow = vec![(index[&with_i.times(i)], two.clone())];
                if i > 1 {
                    row.push((index[&with_i.times(i - 1)], minus_one.clone()));
                }
                if i + 1 < n {
                    row.push((index[&with_i.times(i + 1)], minus_one.clone()));
                }
                row.sort_by_key(|&(c, _)| c);
                rows.push(row);
            }
        }
        Ok(Self {
            n,
            degree,
            columns,
            non_square_free,
            rows,
        })
    }
}

/// `row -= factor * pivot`, both sparse and sorted.
fn axpy(row: &SparseRow, factor: &Rational, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (row.iter().peekable(), pivot.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -(factor * vb)));
                    b.next();
                } else {
                    let v = va - factor * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(factor * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Row-reduced relations of one `(n, d)`: every pivot row has leading entry 1
/// and no entries in other pivot columns.
#[derive(Debug)]
pub struct ReducedSystem {
    pub matrix: RelationMatrix,
    /// Pivot column -> its fully reduced row.
    pivots: BTreeMap<usize, SparseRow>,
    index: HashMap<Monomial, usize>,
}

impl ReducedSystem {
    pub fn new(matrix: RelationMatrix) -> Self {
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for source in &matrix.rows {
            let mut row = source.clone();
            // Clear every existing pivot column, smallest first.
            let mut k = 0;
            while k < row.len() {
                let col = row[k].0;
                if let Some(p) = pivots.get(&col) {
                    let factor = row[k].1.clone();
                    row = axpy(&row, &factor, p);
                } else {
                    k += 1;
                }
            }
            if row.is_empty() {
                continue;
            }
            let lead = row[0].0;
            let inv = row[0].1.recip();
            for (_, v) in row.iter_mut() {
                *v *= &inv;
            }
            // Keep earlier pivot rows free of the new pivot column.
            for p in pivots.values_mut() {
                if let Ok(pos) = p.binary_search_by_key(&lead, |&(c, _)| c) {
                    let factor = p[pos].1.clone();
                    *p = axpy(p, &factor, &row);
                }
            }
            pivots.insert(lead, row);
        }
        let index = matrix
            .columns
            .iter()
            .enumerate()
            .map(|(c, m)| (m.clone(), c))
            .collect();
        Self {
            matrix,
            pivots,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of non-pivot columns.
    pub fn quotient_dimension(&self) -> usize {
        self.matrix.columns.len() - self.rank()
    }

    /// Whether every non-square-free column is a pivot.
    pub fn is_complete(&self) -> bool {
        (0..self.matrix.non_square_free).all(|c| self.pivots.contains_key(&c))
    }

    /// Whether the residual basis is exactly the square-free columns.
    pub fn has_square_free_basis(&self) -> bool {
        self.is_complete() && self.rank() == self.matrix.non_square_free
    }

    /// Reduces a single column vector `e_col` modulo the relations.
    fn reduce_column(&self, col: usize) -> SparseRow {
        match self.pivots.get(&col) {
            // e_col ≡ e_col - pivot_row, which lives on non-pivot columns.
            Some(p) => p[1..].iter().map(|(c, v)| (*c, -v.clone())).collect(),
            None => vec![(col, Rational::one())],
        }
    }
}

/// Ranks up to this use the full degree-`d` elimination, whose quotient
/// dimensions are checked against `C(n-1, d)`.
pub const FULL_ELIMINATION_MAX_RANK: usize = 8;

/// Memoized eliminations: full `(n, d)` systems, and for larger ranks the
/// blocks of monomials above a fixed support.
#[derive(Debug, Default)]
pub struct LinalgOracle {
    full: Mutex<HashMap<(usize, usize), Arc<ReducedSystem>>>,
    blocks: Mutex<HashMap<(usize, usize, u32), Arc<ReducedSystem>>>,
}

fn memoized<K: std::hash::Hash + Eq + Copy>(
    cache: &Mutex<HashMap<K, Arc<ReducedSystem>>>,
    key: K,
    build: impl FnOnce() -> Result<RelationMatrix>,
) -> Result<Arc<ReducedSystem>> {
    if let Some(s) = cache.lock().expect("oracle cache poisoned").get(&key) {
        return Ok(Arc::clone(s));
    }
    // Eliminate outside the lock; a racing thread may duplicate work but both
    // results are identical.
    let system = Arc::new(ReducedSystem::new(build()?));
    let mut guard = cache.lock().expect("oracle cache poisoned");
    Ok(Arc::clone(guard.entry(key).or_insert(system)))
}

impl LinalgOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide shared instance.
    pub fn global() -> &'static LinalgOracle {
        static GLOBAL: OnceLock<LinalgOracle> = OnceLock::new();
        GLOBAL.get_or_init(LinalgOracle::new)
    }

    /// The reduced degree-`d` system over all monomials.
    pub fn system(&self, n: usize, d: usize) -> Result<Arc<ReducedSystem>> {
        memoized(&self.full, (n, d), || RelationMatrix::build(n, d))
    }

    /// The reduced degree-`d` block of monomials divisible by `∏_{floor} ϖ_i`.
    pub fn block(&self, floor: &IndexSet, d: usize) -> Result<Arc<ReducedSystem>> {
        let n = floor.n();
        memoized(&self.blocks, (n, d, floor.bits()), || {
            RelationMatrix::build_within(n, d, floor)
        })
    }

    pub fn quotient_dimension(&self, n: usize, d: usize) -> Result<usize> {
        Ok(self.system(n, d)?.quotient_dimension())
    }

    /// The unique square-free expression of `m` modulo the relations.
    ///
    /// For `n ≤ FULL_ELIMINATION_MAX_RANK` this reduces `m` in the full
    /// degree-`d` system. Above that the full systems are too large, and `m`
    /// is reduced inside the block above its own support (see
    /// [`LinalgOracle::normal_form_in_block`]).
    pub fn normal_form(&self, m: &Monomial) -> Result<BTreeMap<IndexSet, Rational>> {
        let (n, d) = (m.n(), m.degree());
        if n > FULL_ELIMINATION_MAX_RANK {
            return self.normal_form_in_block(m);
        }
        // The relation span is an ideal: once every degree-n monomial is a
        // relation, every monomial of higher degree is too.
        if d > n && self.quotient_dimension(n, n)? == 0 {
            return Ok(BTreeMap::new());
        }
        let system = self.system(n, d)?;
        if !m.is_square_free() && !system.is_complete() {
            let missing = (0..system.matrix.non_square_free)
                .find(|c| !system.pivots.contains_key(c))
                .expect("incomplete system has a missing pivot");
            return Err(Error::IncompletePresentation {
                n,
                degree: d,
                monomial: system.matrix.columns[missing].to_string(),
            });
        }
        read_off(&system, m)
    }

    /// Normal form computed in the block of monomials divisible by the support
    /// of `m`. The block must have the square-free monomials as an exact
    /// residual basis; given that square-free monomials are independent modulo
    /// the relations, the result agrees with the full reduction.
    pub fn normal_form_in_block(&self, m: &Monomial) -> Result<BTreeMap<IndexSet, Rational>> {
        let n = m.n();
        let floor = IndexSet::new(n, (1..n).filter(|&i| m.exponent(i) > 0))?;
        let block = self.block(&floor, m.degree())?;
        if !block.has_square_free_basis() {
            return Err(Error::IncompletePresentation {
                n,
                degree: m.degree(),
                monomial: format!("block above {m}"),
            });
        }
        read_off(&block, m)
    }

    /// `d_JK^L` computed from the normal form of `∏_J ϖ_i · ∏_K ϖ_i`, rescaled by
    /// `m_L / (m_J m_K)`.
    pub fn structure_constants(&self, j: &IndexSet, k: &IndexSet) -> Result<Expansion> {
        let nf = self.normal_form(&Monomial::product_of(j, k)?)?;
        let denom = from_uint(&(j.m_factor() * k.m_factor()));
        let scaled = nf
            .into_iter()
            .map(|(l, c)| {
                let value = c * from_uint(&l.m_factor()) / &denom;
                (l, value)
            })
            .collect();
        integral_expansion(scaled, "linalg engine")
    }
}

fn read_off(system: &ReducedSystem, m: &Monomial) -> Result<BTreeMap<IndexSet, Rational>> {
    let col = *system
        .index
        .get(m)
        .expect("the monomial is a column of its own system");
    let mut out = BTreeMap::new();
    for (c, v) in system.reduce_column(col) {
        let column = &system.matrix.columns[c];
        let support = column
            .support()
            .ok_or_else(|| Error::IncompletePresentation {
                n: system.matrix.n,
                degree: system.matrix.degree,
                monomial: column.to_string(),
            })?;
        out.insert(support, v);
    }
    Ok(out)
}

/// `d_JK^L` via the shared [`LinalgOracle::global`] instance.
pub fn structure_constants_linalg(j: &IndexSet, k: &IndexSet) -> Result<Expansion> {
    LinalgOracle::global().structure_constants(j, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    fn set(n: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(n, members.iter().copied()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn monomial_enumeration() {
        let all = Monomial::all_of_degree(4, 2).unwrap();
        let names: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["w1^2", "w1*w2", "w1*w3", "w2^2", "w2*w3", "w3^2"]);
        assert_eq!(Monomial::all_of_degree(1, 0).unwrap().len(), 1);
        assert!(Monomial::all_of_degree(1, 2).unwrap().is_empty());
        assert_eq!(
            Monomial::all_of_degree(8, 8).unwrap().len(),
            binomial(14, 6)
        );
    }

    #[test]
    fn relation_rows_examples() {
        let m = RelationMatrix::build(2, 2).unwrap();
        assert_eq!(m.rows.len(), 1);
        assert_eq!(m.rows[0], vec![(0, q(2, 1))]);
        assert_eq!(m.columns[0].to_string(), "w1^2");

        let m = RelationMatrix::build(4, 2).unwrap();
        assert_eq!(m.rows.len(), 3);
        let col = |s: &str| m.columns.iter().position(|c| c.to_string() == s).unwrap();
        let mut expected = vec![
            (col("w2^2"), q(2, 1)),
            (col("w1*w2"), q(-1, 1)),
            (col("w2*w3"), q(-1, 1)),
        ];
        expected.sort_by_key(|&(c, _)| c);
        assert_eq!(m.rows[1], expected);

        for (n, d) in [(3, 2), (4, 3), (5, 4), (6, 5)] {
            let rows = RelationMatrix::build(n, d).unwrap().rows.len();
            assert_eq!(
                rows,
                (n - 1) * Monomial::all_of_degree(n, d - 2).unwrap().len()
            );
        }
    }

    #[test]
    fn column_order_puts_square_free_last() {
        let m = RelationMatrix::build(5, 3).unwrap();
        assert!(m.columns[..m.non_square_free]
            .iter()
            .all(|c| !c.is_square_free()));
        assert!(m.columns[m.non_square_free..]
            .iter()
            .all(Monomial::is_square_free));
    }

    #[test]
    fn normal_form_examples() {
        let oracle = LinalgOracle::new();
        let w2sq = Monomial::from_exponents(4, vec![0, 2, 0]).unwrap();
        let nf = oracle.normal_form(&w2sq).unwrap();
        let expected: BTreeMap<_, _> =
            [(set(4, &[1, 2]), q(1, 2)), (set(4, &[2, 3]), q(1, 2))].into();
        assert_eq!(nf, expected);

        let sf = Monomial::square_free(&set(6, &[1, 3, 4]));
        assert_eq!(
            oracle.normal_form(&sf).unwrap(),
            [(set(6, &[1, 3, 4]), q(1, 1))].into()
        );

        let w1sq = Monomial::from_exponents(2, vec![2]).unwrap();
        assert!(oracle.normal_form(&w1sq).unwrap().is_empty());
    }

    #[test]
    fn quotient_dimension_examples() {
        let oracle = LinalgOracle::new();
        assert_eq!(oracle.quotient_dimension(4, 2).unwrap(), 3);
        assert_eq!(oracle.quotient_dimension(5, 0).unwrap(), 1);
        assert_eq!(oracle.quotient_dimension(3, 3).unwrap(), 0);
        for n in 1..=6 {
            for d in 0..=n + 1 {
                assert_eq!(
                    oracle.quotient_dimension(n, d).unwrap(),
                    binomial(n - 1, d),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn linalg_constants() {
        let oracle = LinalgOracle::new();
        let got = oracle
            .structure_constants(&set(10, &[1, 3, 5, 6, 7]), &set(10, &[3, 6, 8]))
            .unwrap();
        let expected: Expansion = [
            (set(10, &[1, 2, 3, 4, 5, 6, 7, 8]), 3456u32),
            (set(10, &[1, 2, 3, 5, 6, 7, 8, 9]), 24),
            (set(10, &[1, 3, 4, 5, 6, 7, 8, 9]), 240),
        ]
        .into_iter()
        .map(|(l, d)| (l, BigUint::from(d)))
        .collect();
        assert_eq!(got, expected);

        // Disjoint supports: m_{J∪K} / (m_J m_K) on J ∪ K.
        let got = oracle
            .structure_constants(&set(6, &[1, 2]), &set(6, &[3, 4]))
            .unwrap();
        assert_eq!(got, [(set(6, &[1, 2, 3, 4]), BigUint::from(6u32))].into());

        assert!(oracle
            .structure_constants(&set(3, &[1, 2]), &set(3, &[1, 2]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn block_reduction_matches_full_reduction() {
        let oracle = LinalgOracle::new();
        for n in 2..=6 {
            for d in 0..=n {
                for m in Monomial::all_of_degree(n, d).unwrap() {
                    assert_eq!(
                        oracle.normal_form(&m).unwrap(),
                        oracle.normal_form_in_block(&m).unwrap(),
                        "n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn multiples_of_degree_counts() {
        let floor = set(10, &[1, 3, 5, 6, 7, 8]);
        let ms = Monomial::multiples_of_degree(&floor, 8).unwrap();
        assert_eq!(ms.len(), binomial(10, 2));
        assert!(ms.iter().all(|m| floor.iter().all(|i| m.exponent(i) >= 1)));
        assert!(Monomial::multiples_of_degree(&floor, 5).unwrap().is_empty());
    }

    #[test]
    fn reduced_rows_are_deterministic() {
        let a = ReducedSystem::new(RelationMatrix::build(5, 4).unwrap());
        let b = ReducedSystem::new(RelationMatrix::build(5, 4).unwrap());
        assert_eq!(a.pivots, b.pivots);
    }

    #[test]
    fn rejects_mismatched_ranks() {
        assert!(Monomial::product_of(&set(4, &[1]), &set(5, &[1])).is_err());
        assert!(Monomial::from_exponents(4, vec![1, 1]).is_err());
    }
}
