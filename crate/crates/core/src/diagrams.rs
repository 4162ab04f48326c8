//! Left-right diagrams: a shading game whose successful plays compute the
//! structure constants `d_JK^L`.
//!
//! The game starts with the columns `J ∪ K` shaded. For each `i ∈ J ∩ K` in
//! increasing order, let `{a, …, b}` be the maximal run of consecutive shaded
//! integers containing `i`; the player shades `a - 1` (LEFT) or `b + 1` (RIGHT),
//! provided that column is available. Adjacency is by integer column number,
//! so a column missing from `L` blocks the move rather than being skipped.
//! A row's weight is `(b-i+1)/(b-a+2)` for LEFT and `(i-a+1)/(b-a+2)` for
//! RIGHT, read off the run before the new box is added, and
//!
//! ```text
//! d_JK^L = m_L / (m_J m_K) · Σ_{P ∈ Δ_JK^L} wt(P).
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cohomology::{from_uint, integral_expansion, ratio, Expansion, Rational};
use crate::error::{Error, Result};
use crate::index_set::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Left,
    Right,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Left => "L",
            Move::Right => "R",
        })
    }
}

/// One played row of the game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRow {
    /// The member of `J ∩ K` driving this row (the marked column).
    pub element: usize,
    /// The run `(a, b)` containing `element`, before the move.
    pub run: (usize, usize),
    pub direction: Move,
    /// `a - 1` for LEFT, `b + 1` for RIGHT.
    pub added_column: usize,
    pub row_weight: Rational,
}

/// A successful play of the game for `(J, K, L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftRightDiagram {
    pub j: IndexSet,
    pub k: IndexSet,
    pub l: IndexSet,
    /// One row per member of `J ∩ K`, increasing.
    pub rows: Vec<GameRow>,
    pub weight: Rational,
}

impl LeftRightDiagram {
    pub fn n(&self) -> usize {
        self.l.n()
    }

    /// Product of the row weights.
    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    /// The move sequence, which identifies the diagram among `Δ_JK^L`.
    pub fn moves(&self) -> Vec<Move> {
        self.rows.iter().map(|r| r.direction).collect()
    }

    /// Fixed-width text grid over the columns of `L`.
    ///
    /// `#` shaded, `.` unshaded, `x` the marked box, `@` the box shaded in this
    /// row. A `|` separates columns that are not consecutive integers. Each
    /// game row carries its label on the left and its move and weight on the
    /// right.
    pub fn render_ascii(&self) -> String {
        let columns = self.l.to_vec();
        let label_width = columns
            .iter()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1)
            .max(2)
            + 2;
        let cell_width = label_width - 1;

        let line = |label: &str, cell: &dyn Fn(usize) -> String| -> String {
            let mut s = format!("{label:>w$}", w = label_width);
            for (idx, &c) in columns.iter().enumerate() {
                if idx > 0 && columns[idx - 1] + 1 != c {
                    s.push_str(" |");
                }
                let _ = write!(s, "{:>w$}", cell(c), w = cell_width);
            }
            s
        };

        let mut out = String::new();
        out.push_str(line("", &|c| c.to_string()).trim_end());
        out.push('\n');

        let mut shaded = self.j.union(&self.k).expect("diagram ranks agree");
        out.push_str(&line("", &|c| {
            if shaded.contains(c) { "#" } else { "." }.into()
        }));
        out.push('\n');

        for row in &self.rows {
            let before = shaded;
            shaded = shaded
                .with(row.added_column)
                .expect("added column lies in [1, n-1]");
            let body = line(&row.element.to_string(), &|c| {
                if c == row.added_column {
                    "@".into()
                } else if c == row.element {
                    "x".into()
                } else if before.contains(c) {
                    "#".into()
                } else {
                    ".".into()
                }
            });
            let _ = writeln!(out, "{body}   {} {}", row.direction, row.row_weight);
        }
        out
    }
}

impl fmt::Display for LeftRightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// Depth-first play, LEFT before RIGHT. Moves may only shade columns of
/// `allowed`. Returns every successful play with its final shading as `l`.
fn play(j: &IndexSet, k: &IndexSet, allowed: &IndexSet) -> Result<Vec<LeftRightDiagram>> {
    let common = j.intersection(k)?.to_vec();
    let start = j.union(k)?;
    let mut found = Vec::new();
    let mut rows = Vec::with_capacity(common.len());

    fn step(
        depth: usize,
        shaded: IndexSet,
        common: &[usize],
        allowed: &IndexSet,
        rows: &mut Vec<GameRow>,
        out: &mut Vec<(IndexSet, Vec<GameRow>)>,
    ) {
        let Some(&element) = common.get(depth) else {
            out.push((shaded, rows.clone()));
            return;
        };
        let (a, b) = shaded
            .run_containing(element)
            .expect("marked column is always shaded");
        let denom = b - a + 2;
        let options = [
            (Move::Left, a.checked_sub(1), b - element + 1),
            (Move::Right, Some(b + 1), element - a + 1),
        ];
        for (direction, target, numer) in options {
            let Some(col) = target.filter(|&c| allowed.contains(c)) else {
                continue;
            };
            rows.push(GameRow {
                element,
                run: (a, b),
                direction,
                added_column: col,
                row_weight: ratio(numer, denom),
            });
            let next = shaded.with(col).expect("allowed columns are in range");
            step(depth + 1, next, common, allowed, rows, out);
            rows.pop();
        }
    }

    let mut raw = Vec::new();
    step(0, start, &common, allowed, &mut rows, &mut raw);
    for (l, rows) in raw {
        let weight = rows
            .iter()
            .fold(Rational::one(), |acc, r| acc * &r.row_weight);
        found.push(LeftRightDiagram {
            j: *j,
            k: *k,
            l,
            rows,
            weight,
        });
    }
    Ok(found)
}

fn same_rank(sets: &[&IndexSet]) -> Result<()> {
    let n = sets[0].n();
    for s in sets {
        if s.n() != n {
            return Err(Error::RankMismatch(n, s.n()));
        }
    }
    Ok(())
}

/// `L ⊇ J ∪ K` and `|L| = |J| + |K|`.
fn admissible(j: &IndexSet, k: &IndexSet, l: &IndexSet) -> Result<bool> {
    Ok(j.union(k)?.is_subset(l)? && l.len() == j.len() + k.len())
}

/// `Δ_JK^L`, in canonical order (rows increasing, LEFT before RIGHT). Empty
/// when `L` violates the support condition.
pub fn enumerate_diagrams(
    j: &IndexSet,
    k: &IndexSet,
    l: &IndexSet,
) -> Result<Vec<LeftRightDiagram>> {
    same_rank(&[j, k, l])?;
    if !admissible(j, k, l)? {
        return Ok(Vec::new());
    }
    let diagrams = play(j, k, l)?;
    debug_assert!(diagrams.iter().all(|d| d.l == *l));
    Ok(diagrams)
}

fn scaling(j: &IndexSet, k: &IndexSet, l: &IndexSet) -> Rational {
    from_uint(&l.m_factor()) / from_uint(&(j.m_factor() * k.m_factor()))
}

/// `d_JK^L` by summing diagram weights.
pub fn structure_constant(j: &IndexSet, k: &IndexSet, l: &IndexSet) -> Result<BigUint> {
    let diagrams = enumerate_diagrams(j, k, l)?;
    let total: Rational = diagrams
        .iter()
        .fold(Rational::zero(), |acc, d| acc + &d.weight);
    let value = total * scaling(j, k, l);
    let table = BTreeMap::from([(*l, value)]);
    Ok(integral_expansion(table, "diagram engine")?
        .remove(l)
        .unwrap_or_default())
}

/// All of `ϖ_J · ϖ_K` from one unrestricted game on `[n-1]`: moves off either
/// end of the Dynkin diagram kill the branch, and surviving plays are grouped
/// by their final shading.
pub fn expand_all(j: &IndexSet, k: &IndexSet) -> Result<Expansion> {
    same_rank(&[j, k])?;
    let everything = IndexSet::full(j.n())?;
    let mut sums: BTreeMap<IndexSet, Rational> = BTreeMap::new();
    for d in play(j, k, &everything)? {
        *sums.entry(d.l).or_insert_with(Rational::zero) += d.weight;
    }
    let scaled = sums
        .into_iter()
        .map(|(l, w)| {
            let s = scaling(j, k, &l);
            (l, w * s)
        })
        .collect();
    integral_expansion(scaled, "diagram engine")
}

/// Every successful play of the unrestricted game, for inspection.
pub fn unrestricted_plays(j: &IndexSet, k: &IndexSet) -> Result<Vec<LeftRightDiagram>> {
    same_rank(&[j, k])?;
    play(j, k, &IndexSet::full(j.n())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[usize]) -> IndexSet {
        IndexSet::new(n, members.iter().copied()).unwrap()
    }

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num.into(), den.into())
    }

    fn golden() -> (IndexSet, IndexSet, IndexSet, IndexSet, IndexSet) {
        (
            set(10, &[1, 3, 5, 6, 7]),
            set(10, &[3, 6, 8]),
            set(10, &[1, 2, 3, 4, 5, 6, 7, 8]),
            set(10, &[1, 2, 3, 5, 6, 7, 8, 9]),
            set(10, &[1, 3, 4, 5, 6, 7, 8, 9]),
        )
    }

    #[test]
    fn golden_diagrams() {
        let (j, k, l, lp, _) = golden();
        let ds = enumerate_diagrams(&j, &k, &l).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].moves(), vec![Move::Left, Move::Left]);
        assert_eq!(ds[1].moves(), vec![Move::Right, Move::Left]);
        assert_eq!(ds[0].weight, q(3, 10));
        assert_eq!(ds[1].weight, q(3, 14));
        assert_eq!(ds[0].rows[1].run, (5, 8));
        assert_eq!(ds[1].rows[1].run, (3, 8));

        let ds = enumerate_diagrams(&j, &k, &lp).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].moves(), vec![Move::Left, Move::Right]);
        assert_eq!(ds[0].rows[1].run, (5, 8));
        assert_eq!(ds[0].weight, q(1, 5));
    }

    #[test]
    fn disjoint_game_has_one_empty_diagram() {
        let j = set(7, &[1, 2]);
        let k = set(7, &[4]);
        let l = j.union(&k).unwrap();
        let ds = enumerate_diagrams(&j, &k, &l).unwrap();
        assert_eq!(ds.len(), 1);
        assert!(ds[0].rows.is_empty());
        assert_eq!(ds[0].weight, q(1, 1));
    }

    #[test]
    fn inadmissible_l_gives_no_diagrams() {
        let (j, k, _, _, _) = golden();
        assert!(enumerate_diagrams(&j, &k, &set(10, &[1, 2, 3]))
            .unwrap()
            .is_empty());
        assert!(enumerate_diagrams(&j, &k, &set(9, &[1])).is_err());
    }

    #[test]
    fn golden_constants() {
        let (j, k, l, lp, lpp) = golden();
        assert_eq!(
            structure_constant(&j, &k, &l).unwrap(),
            BigUint::from(3456u32)
        );
        assert_eq!(
            structure_constant(&j, &k, &lp).unwrap(),
            BigUint::from(24u32)
        );
        assert_eq!(
            structure_constant(&j, &k, &lpp).unwrap(),
            BigUint::from(240u32)
        );
        let all = expand_all(&j, &k).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[&l], BigUint::from(3456u32));
        assert_eq!(all[&lp], BigUint::from(24u32));
        assert_eq!(all[&lpp], BigUint::from(240u32));
    }

    #[test]
    fn expand_all_edge_cases() {
        assert!(expand_all(&set(3, &[1, 2]), &set(3, &[1, 2]))
            .unwrap()
            .is_empty());
        let got = expand_all(&set(4, &[1]), &set(4, &[2])).unwrap();
        assert_eq!(
            got,
            BTreeMap::from([(set(4, &[1, 2]), BigUint::from(2u32))])
        );
    }

    #[test]
    fn unrestricted_weights_sum_to_at_most_one() {
        for n in 2..=7 {
            for j in IndexSet::all_subsets(n).unwrap() {
                for k in IndexSet::all_subsets(n).unwrap() {
                    let plays = unrestricted_plays(&j, &k).unwrap();
                    let total = plays.iter().fold(Rational::zero(), |a, d| a + &d.weight);
                    assert!(total <= Rational::one());
                    for d in &plays {
                        assert!(d.weight > Rational::zero() && d.weight <= Rational::one());
                        assert_eq!(d.l.len(), j.len() + k.len());
                    }
                }
            }
        }
    }

    #[test]
    fn render_golden_p1() {
        let (j, k, l, _, _) = golden();
        let p1 = &enumerate_diagrams(&j, &k, &l).unwrap()[0];
        let expected = "\
   1  2  3  4  5  6  7  8
   #  .  #  .  #  #  #  #
 3 #  @  x  .  #  #  #  #   L 1/2
 6 #  #  #  @  #  x  #  #   L 3/5
";
        let got = p1.render_ascii();
        let squash = |s: &str| {
            s.lines()
                .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
        };
        assert_eq!(squash(&got), squash(expected), "\n{got}");
    }

    #[test]
    fn render_shows_gap_for_missing_column() {
        let (j, k, _, lp, _) = golden();
        let p = &enumerate_diagrams(&j, &k, &lp).unwrap()[0];
        let text = p.render_ascii();
        let header = text.lines().next().unwrap();
        assert!(header.contains("3 |"), "{text}");
        assert!(!header.contains(" 4"));
        assert!(text.lines().all(|l| l.matches('|').count() == 1));
        assert!(text.contains("R 2/5"));
    }

    #[test]
    fn render_empty_rows() {
        let j = set(5, &[1]);
        let k = set(5, &[3]);
        let d = &enumerate_diagrams(&j, &k, &set(5, &[1, 3])).unwrap()[0];
        assert_eq!(d.render_ascii().lines().count(), 2);
    }
}
