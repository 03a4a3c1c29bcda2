//! Semistandard tableaux stored column-major, and remnants left behind when
//! scanning paths are deleted.
//!
//! Cells are addressed `(j,i)` = (column, row), both 1-based, matching the
//! usual convention that columns matter more than rows here.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::shapes::Partition;

/// A semistandard tableau of shape λ with entries in `[1,n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

/// Wire form: `{"n": int, "shape": [λ_1,…,λ_n], "columns": [[…],…]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub shape: Vec<usize>,
    pub columns: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(json: TableauJson) -> Result<Self> {
        if json.shape.len() != json.n {
            return Err(Error::DimensionMismatch(format!(
                "shape has {} parts but n = {}",
                json.shape.len(),
                json.n
            )));
        }
        Tableau::new(Partition::new(json.shape)?, json.columns)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson {
            n: t.n(),
            shape: t.shape.parts().to_vec(),
            columns: t.columns,
        }
    }
}

impl Tableau {
    /// Validates `columns` against `shape`. Errors name the offending cell.
    pub fn new(shape: Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let zeta = shape.column_lengths();
        if columns.len() != zeta.len() {
            return Err(Error::DimensionMismatch(format!(
                "shape has {} columns, got {}",
                zeta.len(),
                columns.len()
            )));
        }
        for (c, (col, &len)) in columns.iter().zip(zeta).enumerate() {
            if col.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "column {} should have {} cells, got {}",
                    c + 1,
                    len,
                    col.len()
                )));
            }
        }
        let n = shape.n();
        for (c, col) in columns.iter().enumerate() {
            for (r, &value) in col.iter().enumerate() {
                if value == 0 || value > n {
                    return Err(Error::ValueOutOfRange {
                        column: c + 1,
                        row: r + 1,
                        value,
                        n,
                    });
                }
            }
        }
        for (c, col) in columns.iter().enumerate() {
            for r in 1..col.len() {
                if col[r - 1] >= col[r] {
                    return Err(Error::ColumnViolation {
                        column: c + 1,
                        row: r + 1,
                        above: col[r - 1],
                        below: col[r],
                    });
                }
            }
            if let Some(east) = columns.get(c + 1) {
                for (r, &right) in east.iter().enumerate() {
                    if col[r] > right {
                        return Err(Error::RowViolation {
                            column: c + 1,
                            row: r + 1,
                            left: col[r],
                            right,
                        });
                    }
                }
            }
        }
        Ok(Tableau { shape, columns })
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, columns: Vec<Vec<usize>>) -> Self {
        debug_assert!(Tableau::new(shape.clone(), columns.clone()).is_ok());
        Tableau { shape, columns }
    }

    /// `T^+`: row `i` filled with `i`. The unique minimal tableau of its shape.
    pub fn minimal(shape: &Partition) -> Tableau {
        let columns = shape
            .column_lengths()
            .iter()
            .map(|&len| (1..=len).collect())
            .collect();
        Tableau {
            shape: shape.clone(),
            columns,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column `j` (1-based), top to bottom.
    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    pub fn get(&self, j: usize, i: usize) -> Option<usize> {
        if j == 0 || i == 0 {
            return None;
        }
        self.columns.get(j - 1)?.get(i - 1).copied()
    }

    /// `T(j,i)`; panics outside the shape.
    pub fn value(&self, j: usize, i: usize) -> usize {
        self.get(j, i)
            .unwrap_or_else(|| panic!("cell ({j},{i}) is not in the shape"))
    }

    /// `T(l−1,k)`, reading `k` when `l = 1`.
    pub fn west(&self, l: usize, k: usize) -> usize {
        if l <= 1 {
            k
        } else {
            self.value(l - 1, k)
        }
    }

    /// `T(l+1,k)`, reading `n` when column `l+1` has no row `k`.
    pub fn east(&self, l: usize, k: usize) -> usize {
        self.get(l + 1, k).unwrap_or(self.n())
    }

    /// `T(l,k+1)`, reading `n+1` when `k` is the bottom row of column `l`.
    pub fn south(&self, l: usize, k: usize) -> usize {
        self.get(l, k + 1).unwrap_or(self.n() + 1)
    }

    /// Multiplicity vector of the entries, as a monomial `x^T`.
    pub fn weight(&self) -> Monomial {
        let mut exps = vec![0u32; self.n()];
        for &v in self.columns.iter().flatten() {
            exps[v - 1] = exps[v - 1].checked_add(1).expect("multiplicity overflow");
        }
        Monomial::new(exps)
    }

    /// Entrywise comparison `self ≤ other`.
    pub fn dominated_by(&self, other: &Tableau) -> Result<bool> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(self
            .columns
            .iter()
            .flatten()
            .zip(other.columns.iter().flatten())
            .all(|(a, b)| a <= b))
    }

    /// Largest column-bottom value; 1 for the empty tableau.
    pub fn m_value(&self) -> usize {
        self.columns
            .iter()
            .filter_map(|c| c.last().copied())
            .max()
            .unwrap_or(1)
    }

    /// Every column's value set contains the value set of the column east of it.
    pub fn is_key(&self) -> bool {
        self.columns.windows(2).all(|w| {
            let west: BTreeSet<usize> = w[0].iter().copied().collect();
            w[1].iter().all(|v| west.contains(v))
        })
    }

    /// ASCII rendering: one line per row, entries right-aligned to a common
    /// width, northwest-justified.
    pub fn render(&self) -> String {
        let width = self.n().to_string().len();
        let rows = self.shape.column_len(1);
        let mut out = String::new();
        for i in 1..=rows {
            let line: Vec<String> = (1..=self.shape.row_len(i))
                .map(|j| format!("{:>width$}", self.value(j, i)))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serialization cannot fail")
    }

    pub fn from_json(s: &str) -> std::result::Result<Tableau, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Partial tableau made of per-column top prefixes of a tableau's columns.
///
/// Columns `offset+1 ..` of the originating shape are kept; columns to the
/// west have been dropped. Cells are only ever removed from the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remnant {
    n: usize,
    offset: usize,
    columns: Vec<Vec<usize>>,
}

impl Remnant {
    /// The whole of `t`.
    pub fn of(t: &Tableau) -> Remnant {
        Remnant {
            n: t.n(),
            offset: 0,
            columns: t.columns.clone(),
        }
    }

    /// Columns `first..=last` of `t` (1-based, inclusive; may be empty).
    pub fn columns_of(t: &Tableau, first: usize, last: usize) -> Remnant {
        let lo = first.max(1) - 1;
        let hi = last.min(t.shape.width()).max(lo);
        Remnant {
            n: t.n(),
            offset: lo,
            columns: t.columns[lo..hi].to_vec(),
        }
    }

    /// A remnant over raw columns that start at absolute column `offset+1`.
    pub fn from_columns(n: usize, offset: usize, columns: Vec<Vec<usize>>) -> Remnant {
        Remnant { n, offset, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the first kept column minus one.
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Absolute index of the last kept column (`offset` when none are kept).
    pub fn last_column(&self) -> usize {
        self.offset + self.columns.len()
    }

    /// Live cells of absolute column `j`, top to bottom; empty when dropped.
    pub fn column(&self, j: usize) -> &[usize] {
        if j <= self.offset {
            return &[];
        }
        self.columns
            .get(j - self.offset - 1)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn column_len(&self, j: usize) -> usize {
        self.column(j).len()
    }

    pub fn bottom(&self, j: usize) -> Option<usize> {
        self.column(j).last().copied()
    }

    pub(crate) fn column_mut(&mut self, j: usize) -> &mut Vec<usize> {
        &mut self.columns[j - self.offset - 1]
    }

    /// Removes and returns the bottom value of absolute column `j`.
    pub fn pop(&mut self, j: usize) -> Option<usize> {
        if j <= self.offset || j > self.last_column() {
            return None;
        }
        self.column_mut(j).pop()
    }

    /// Keeps rows `1..row` of absolute column `j`, dropping `row` and below.
    pub fn truncate_at(&mut self, j: usize, row: usize) {
        if j > self.offset && j <= self.last_column() {
            self.column_mut(j).truncate(row.saturating_sub(1));
        }
    }

    /// Drops every column at or west of absolute column `j`.
    pub fn drop_through(&self, j: usize) -> Remnant {
        let skip = j.saturating_sub(self.offset).min(self.columns.len());
        Remnant {
            n: self.n,
            offset: self.offset + skip,
            columns: self.columns[skip..].to_vec(),
        }
    }

    /// Largest live column bottom; 1 when every column is empty.
    pub fn m_value(&self) -> usize {
        self.columns
            .iter()
            .filter_map(|c| c.last().copied())
            .max()
            .unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
}

/// Streams every semistandard tableau of a shape exactly once.
///
/// Cells are filled column by column from east to west, bottom to top within
/// a column, trying values in ascending order. Each cell's candidates are
/// `[i, min{T(j,i+1)−1, T(j+1,i)}]`, which only depends on cells already
/// filled, and that range is never empty, so there is no dead-end search.
pub struct SemistandardTableaux {
    shape: Partition,
    order: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    state: IterState,
}

#[derive(PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl SemistandardTableaux {
    pub fn new(shape: &Partition) -> Self {
        let mut order = Vec::with_capacity(shape.size());
        for j in (1..=shape.width()).rev() {
            for i in (1..=shape.column_len(j)).rev() {
                order.push((j, i));
            }
        }
        let grid = shape
            .column_lengths()
            .iter()
            .map(|&len| vec![0; len])
            .collect();
        SemistandardTableaux {
            shape: shape.clone(),
            order,
            grid,
            state: IterState::Fresh,
        }
    }

    fn upper(&self, j: usize, i: usize) -> usize {
        let n = self.shape.n();
        let south = self.grid[j - 1].get(i).map_or(n + 1, |&v| v);
        let east = self
            .grid
            .get(j)
            .and_then(|c| c.get(i - 1))
            .map_or(n, |&v| v);
        (south - 1).min(east)
    }

    fn fill_from(&mut self, start: usize) {
        for d in start..self.order.len() {
            let (j, i) = self.order[d];
            self.grid[j - 1][i - 1] = i;
        }
    }

    fn emit(&self) -> Tableau {
        Tableau::from_parts_unchecked(self.shape.clone(), self.grid.clone())
    }
}

impl Iterator for SemistandardTableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            IterState::Done => None,
            IterState::Fresh => {
                self.fill_from(0);
                self.state = IterState::Running;
                Some(self.emit())
            }
            IterState::Running => {
                for d in (0..self.order.len()).rev() {
                    let (j, i) = self.order[d];
                    let cur = self.grid[j - 1][i - 1];
                    if cur < self.upper(j, i) {
                        self.grid[j - 1][i - 1] = cur + 1;
                        self.fill_from(d + 1);
                        return Some(self.emit());
                    }
                }
                self.state = IterState::Done;
                None
            }
        }
    }
}

/// All of `T_λ` as a stream, in the fixed east-to-west fill order.
pub fn enumerate(shape: &Partition) -> SemistandardTableaux {
    SemistandardTableaux::new(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{make_key, Permutation};

    fn ex_last() -> Tableau {
        let shape = Partition::from_column_lengths(&[7, 5, 4, 2], 9).unwrap();
        Tableau::new(
            shape,
            vec![
                vec![1, 2, 4, 5, 6, 7, 9],
                vec![1, 3, 5, 6, 7],
                vec![3, 4, 7, 8],
                vec![6, 8],
            ],
        )
        .unwrap()
    }

    fn ex_key() -> Tableau {
        let shape = Partition::from_column_lengths(&[7, 5, 4, 2], 9).unwrap();
        make_key(&shape, &Permutation::new(vec![6, 8, 3, 7, 4, 1, 9, 2, 5]).unwrap()).unwrap()
    }

    /// All fillings with values in [1,n], kept if semistandard.
    fn brute_force(shape: &Partition) -> BTreeSet<Tableau> {
        let n = shape.n();
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let mut out = BTreeSet::new();
        let total = n.pow(cells.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut cols: Vec<Vec<usize>> = shape.column_lengths().iter().map(|&l| vec![0; l]).collect();
            for &(j, i) in &cells {
                cols[j - 1][i - 1] = c % n + 1;
                c /= n;
            }
            if let Ok(t) = Tableau::new(shape.clone(), cols) {
                out.insert(t);
            }
        }
        out
    }

    #[test]
    fn validate_examples() {
        let t = ex_last();
        assert_eq!(t.value(4, 2), 8);
        let one = Tableau::new(Partition::new(vec![1]).unwrap(), vec![vec![1]]);
        assert!(one.is_ok());
        let bad = Tableau::new(Partition::new(vec![1, 1, 0]).unwrap(), vec![vec![2, 2]]);
        assert_eq!(
            bad,
            Err(Error::ColumnViolation { column: 1, row: 2, above: 2, below: 2 })
        );
    }

    #[test]
    fn validate_error_paths() {
        let shape = Partition::new(vec![2, 1, 0]).unwrap();
        assert!(matches!(
            Tableau::new(shape.clone(), vec![vec![2, 3], vec![1]]),
            Err(Error::RowViolation { column: 1, row: 1, .. })
        ));
        assert!(matches!(
            Tableau::new(shape.clone(), vec![vec![1, 4], vec![1]]),
            Err(Error::ValueOutOfRange { column: 1, row: 2, value: 4, n: 3 })
        ));
        assert!(matches!(
            Tableau::new(shape.clone(), vec![vec![1, 2]]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Tableau::new(shape, vec![vec![1], vec![1]]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn boundary_accessors() {
        let t = ex_last();
        assert_eq!(t.west(1, 3), 3);
        assert_eq!(t.west(2, 3), 4);
        assert_eq!(t.east(4, 1), 9);
        assert_eq!(t.east(2, 5), 9);
        assert_eq!(t.east(1, 1), 1);
        assert_eq!(t.south(4, 2), 10);
        assert_eq!(t.south(1, 1), 2);
    }

    #[test]
    fn enumerate_counts() {
        let count = |parts: Vec<usize>| enumerate(&Partition::new(parts).unwrap()).count();
        assert_eq!(count(vec![1, 0, 0]), 3);
        assert_eq!(count(vec![1, 1, 1]), 1);
        assert_eq!(count(vec![2, 1, 0]), 8);
        assert_eq!(count(vec![0, 0]), 1);
        assert_eq!(brute_force(&Partition::new(vec![2, 1, 0]).unwrap()).len(), 8);
    }

    #[test]
    fn enumerate_matches_brute_force() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 6) {
                let listed: Vec<Tableau> = enumerate(&shape).collect();
                let set: BTreeSet<Tableau> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates for {shape}");
                assert_eq!(set, brute_force(&shape), "{shape}");
            }
        }
    }

    #[test]
    fn weight_examples() {
        let shape = Partition::new(vec![3, 2, 2, 0]).unwrap();
        assert_eq!(Tableau::minimal(&shape).weight().exponents(), &[3, 2, 2, 0]);
        let empty = Partition::new(vec![0, 0, 0]).unwrap();
        assert_eq!(Tableau::minimal(&empty).weight().exponents(), &[0, 0, 0]);
        assert_eq!(ex_last().weight().exponents(), &[2, 1, 2, 2, 2, 3, 3, 2, 1]);
    }

    #[test]
    fn dominance_examples() {
        let t = ex_last();
        assert!(t.dominated_by(&t).unwrap());
        assert!(t.dominated_by(&ex_key()).unwrap());
        assert!(!ex_key().dominated_by(&t).unwrap());
        let shape = Partition::new(vec![2, 1, 0]).unwrap();
        let top = make_key(&shape, &Permutation::longest(3)).unwrap();
        for u in enumerate(&shape) {
            assert!(u.dominated_by(&top).unwrap());
        }
        assert_eq!(t.dominated_by(&top), Err(Error::ShapeMismatch));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let shape = Partition::new(vec![2, 2, 1, 0]).unwrap();
        let all: Vec<Tableau> = enumerate(&shape).collect();
        for a in &all {
            for b in &all {
                let ab = a.dominated_by(b).unwrap();
                if ab && b.dominated_by(a).unwrap() {
                    assert_eq!(a, b);
                }
                for c in all.iter().step_by(7) {
                    if ab && b.dominated_by(c).unwrap() {
                        assert!(a.dominated_by(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn m_value_examples() {
        let u = Remnant::from_columns(9, 2, vec![vec![3, 4], vec![6]]);
        assert_eq!(u.m_value(), 6);
        assert_eq!(Remnant::from_columns(3, 0, vec![]).m_value(), 1);
        let empty = Partition::new(vec![0, 0]).unwrap();
        assert_eq!(Tableau::minimal(&empty).m_value(), 1);
        let col = Tableau::minimal(&Partition::new(vec![1, 1, 1]).unwrap());
        assert_eq!(col.m_value(), 3);
    }

    #[test]
    fn key_detection() {
        assert!(ex_key().is_key());
        // column 2 holds 3 and 5, neither of which is in column 1
        assert!(!ex_last().is_key());
        assert!(Tableau::minimal(&Partition::new(vec![3, 1, 1]).unwrap()).is_key());
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 6) {
                for pi in Permutation::all(n) {
                    assert!(make_key(&shape, &pi).unwrap().is_key());
                }
            }
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        for shape in Partition::all_up_to(3, 5) {
            for t in enumerate(&shape) {
                let s = t.to_json();
                assert_eq!(Tableau::from_json(&s).unwrap(), t);
                assert_eq!(serde_json::to_string(&Tableau::from_json(&s).unwrap()).unwrap(), s);
            }
        }
        let s = r#"{"n":3,"shape":[2,1,0],"columns":[[1,2],[1]]}"#;
        assert_eq!(Tableau::from_json(s).unwrap().to_json(), s);
        assert!(Tableau::from_json(r#"{"n":3,"shape":[2,1,0],"columns":[[2,2],[1]]}"#).is_err());
    }

    #[test]
    fn render_layout() {
        assert_eq!(ex_last().render().lines().next().unwrap(), "1 1 3 6");
        let t = Tableau::minimal(&Partition::new(vec![2, 1, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap());
        assert_eq!(t.render(), " 1  1\n 2\n");
    }

    #[test]
    fn remnant_operations() {
        let t = ex_last();
        let mut r = Remnant::of(&t);
        assert_eq!(r.pop(4), Some(8));
        assert_eq!(r.bottom(4), Some(6));
        r.truncate_at(1, 3);
        assert_eq!(r.column(1), &[1, 2]);
        let east = r.drop_through(2);
        assert_eq!(east.offset(), 2);
        assert_eq!(east.column(2), &[] as &[usize]);
        assert_eq!(east.column(3), &[3, 4, 7, 8]);
        assert_eq!(east.m_value(), 8);
        let sub = Remnant::columns_of(&t, 3, 4);
        assert_eq!(sub.cell_count(), 6);
        assert_eq!(Remnant::columns_of(&t, 5, 4).cell_count(), 0);
    }
}
