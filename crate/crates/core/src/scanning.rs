//! Right scanning tableau `S(T)` and left scanning tableau `M(T)`.
//!
//! `S(T)` is the right key of `T` and `M(T)` its left key. Both are built
//! column by column; each originating column restarts from the full `T`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{Remnant, Tableau};

pub type Cell = (usize, usize);

/// A scanning path: the cells it visits in order, with the values there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanPath {
    pub origin: Cell,
    pub cells: Vec<Cell>,
    pub values: Vec<usize>,
    pub terminal: usize,
}

impl ScanPath {
    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Value of the last visited cell strictly west of column `l`.
    pub fn last_value_before_column(&self, l: usize) -> Option<usize> {
        self.cells
            .iter()
            .zip(&self.values)
            .take_while(|((j, _), _)| *j < l)
            .last()
            .map(|(_, &v)| v)
    }
}

/// A scanning tableau together with the path behind every entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub tableau: Tableau,
    paths: Vec<Vec<ScanPath>>,
}

impl ScanResult {
    /// The path originating at `(j,i)`.
    pub fn path(&self, j: usize, i: usize) -> &ScanPath {
        &self.paths[j - 1][i - 1]
    }

    /// Paths originating in column `j`, indexed by row `i − 1`.
    pub fn column_paths(&self, j: usize) -> &[ScanPath] {
        &self.paths[j - 1]
    }

    pub fn paths(&self) -> impl Iterator<Item = &ScanPath> {
        self.paths.iter().flatten()
    }
}

/// Extends the earliest weakly increasing subsequence of live column bottoms
/// east of column `from`, starting from `value`, and deletes its cells from
/// `remnant`. Returns the `(cell, value)` pairs appended.
pub fn ewis_remove(remnant: &mut Remnant, from: usize, value: usize) -> Vec<(Cell, usize)> {
    let mut last = value;
    let mut out = Vec::new();
    for h in from + 1..=remnant.last_column() {
        if let Some(b) = remnant.bottom(h) {
            if b >= last {
                let row = remnant.column_len(h);
                remnant.pop(h);
                out.push(((h, row), b));
                last = b;
            }
        }
    }
    out
}

/// Pops `(j,i)` from `remnant` (it must be the bottom of column `j`) and
/// traces the right scanning path from it.
fn right_path(remnant: &mut Remnant, j: usize, i: usize) -> ScanPath {
    debug_assert_eq!(remnant.column_len(j), i);
    let start = remnant.pop(j).expect("origin is the bottom of its column");
    let mut cells = vec![(j, i)];
    let mut values = vec![start];
    for (cell, v) in ewis_remove(remnant, j, start) {
        cells.push(cell);
        values.push(v);
    }
    let terminal = *values.last().unwrap();
    ScanPath {
        origin: (j, i),
        cells,
        values,
        terminal,
    }
}

/// `S(T)` and the scanning paths `P(T;j,i)`.
pub fn right_scan(t: &Tableau) -> ScanResult {
    let shape = t.shape();
    let mut paths = Vec::with_capacity(shape.width());
    let mut columns = Vec::with_capacity(shape.width());
    for j in 1..=shape.width() {
        let len = shape.column_len(j);
        let mut remnant = Remnant::of(t);
        let mut col_paths = Vec::with_capacity(len);
        for i in (1..=len).rev() {
            col_paths.push(right_path(&mut remnant, j, i));
        }
        col_paths.reverse();
        columns.push(col_paths.iter().map(|p| p.terminal).collect());
        paths.push(col_paths);
    }
    ScanResult {
        tableau: Tableau::from_parts_unchecked(shape.clone(), columns),
        paths,
    }
}

fn check_cell(t: &Tableau, j: usize, i: usize) -> Result<()> {
    if t.shape().contains(j, i) {
        Ok(())
    } else {
        Err(Error::CellOutsideShape { column: j, row: i })
    }
}

/// The remnant `T^{(j;i)}`: `T` with `P(T;j,ζ_j), …, P(T;j,i+1)` removed.
pub fn remnant(t: &Tableau, j: usize, i: usize) -> Result<Remnant> {
    check_cell(t, j, i)?;
    let mut r = Remnant::of(t);
    for row in (i + 1..=t.shape().column_len(j)).rev() {
        right_path(&mut r, j, row);
    }
    Ok(r)
}

/// `m` of `T^{(j;i)}` with columns `1..j−1` dropped; equals `S(T;j,i)`.
pub fn remnant_value(t: &Tableau, j: usize, i: usize) -> Result<usize> {
    Ok(remnant(t, j, i)?.drop_through(j - 1).m_value())
}

/// Traces a left scanning path from `(l,i)` through `remnant`: in each
/// column further west take the largest live value not exceeding the most
/// recent one. `None` if some column offers no such value.
pub fn left_path(remnant: &Remnant, l: usize, i: usize) -> Option<ScanPath> {
    let start = *remnant.column(l).get(i - 1)?;
    let mut cells = vec![(l, i)];
    let mut values = vec![start];
    let mut cur = start;
    for c in (1..l).rev() {
        let col = remnant.column(c);
        let row = col.iter().rposition(|&v| v <= cur)? + 1;
        cur = col[row - 1];
        cells.push((c, row));
        values.push(cur);
    }
    Some(ScanPath {
        origin: (l, i),
        cells,
        values,
        terminal: cur,
    })
}

/// Deletes every cell of `path` together with everything beneath it.
pub fn cut_below(remnant: &mut Remnant, path: &ScanPath) {
    for &(c, row) in &path.cells {
        remnant.truncate_at(c, row);
    }
}

/// Left scanning paths from `(l,ζ_l)` up to `(l,stop+1)` in `T` truncated to
/// columns `1..=l`, each deleted with everything beneath it before the next
/// is traced. Returns the paths in tracing order and the final remnant.
pub(crate) fn left_peel(t: &Tableau, l: usize, stop: usize) -> Result<(Vec<ScanPath>, Remnant)> {
    let mut r = Remnant::columns_of(t, 1, l);
    let mut paths = Vec::new();
    for i in (stop + 1..=t.shape().column_len(l)).rev() {
        let path = left_path(&r, l, i).ok_or_else(|| {
            Error::Invariant(format!("left scanning path from ({l},{i}) ran out of values"))
        })?;
        cut_below(&mut r, &path);
        paths.push(path);
    }
    Ok((paths, r))
}

/// `M(T)` and the left scanning paths.
pub fn left_scan(t: &Tableau) -> Result<ScanResult> {
    let shape = t.shape();
    let mut paths = Vec::with_capacity(shape.width());
    let mut columns = Vec::with_capacity(shape.width());
    for l in 1..=shape.width() {
        let (mut col_paths, _) = left_peel(t, l, 0)?;
        col_paths.reverse();
        columns.push(col_paths.iter().map(|p| p.terminal).collect());
        paths.push(col_paths);
    }
    let tableau = Tableau::new(shape.clone(), columns)
        .map_err(|e| Error::Invariant(format!("left scanning tableau not semistandard: {e}")))?;
    Ok(ScanResult { tableau, paths })
}
