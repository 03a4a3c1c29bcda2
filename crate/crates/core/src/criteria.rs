//! Cellwise condition sets characterizing tableaux whose right key is
//! bounded by (A, B) or equal to (C) a given key, and whose left key bounds
//! (F) or equals (G) a given key.
//!
//! A and C read only the columns east of the cell and the cells below it in
//! its own column; [`a_values`] and [`c_values`] expose that partial form for
//! the generators. B reads the right scanning paths of the whole tableau. F
//! and G read the columns west of the cell and the cells below it.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scanning::{self, left_path, left_peel, right_scan, Cell, ScanResult};
use crate::shapes::{make_key, Permutation};
use crate::tableau::{Remnant, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SetKind {
    A,
    B,
    C,
    F,
    G,
}

impl SetKind {
    pub const ALL: [SetKind; 5] = [SetKind::A, SetKind::B, SetKind::C, SetKind::F, SetKind::G];
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(SetKind::A),
            "B" => Ok(SetKind::B),
            "C" => Ok(SetKind::C),
            "F" => Ok(SetKind::F),
            "G" => Ok(SetKind::G),
            _ => Err(Error::DimensionMismatch(format!("unknown condition set {s:?}"))),
        }
    }
}

/// The allowed values at one cell, materialized as a sorted set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionSet {
    pub cell: Cell,
    pub kind: SetKind,
    pub values: BTreeSet<usize>,
}

impl ConditionSet {
    pub fn contains(&self, v: usize) -> bool {
        self.values.contains(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `[lo, hi] ∩ [1, n]`.
pub fn interval(lo: usize, hi: usize, n: usize) -> BTreeSet<usize> {
    (lo.max(1)..=hi.min(n)).collect()
}

/// What the A and C sets need at a cell `(l,k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EastData {
    /// `m(U)` for the remnant east of column `l`.
    pub m_u: usize,
    /// The key entry `Y(l,k)`.
    pub key_value: usize,
    /// `T(l,k+1)`, or `n+1` at the bottom of the column.
    pub below: usize,
    /// `T(l+1,k)`, or `n` when that cell does not exist.
    pub east: usize,
}

/// A-set values at row `k`: empty if `m(U) > Y(l,k)`, otherwise
/// `[k, min{Y(l,k), T(l,k+1)−1, T(l+1,k)}]`.
pub fn a_values(k: usize, d: &EastData, n: usize) -> BTreeSet<usize> {
    if d.m_u > d.key_value {
        BTreeSet::new()
    } else {
        interval(k, d.key_value.min(d.below - 1).min(d.east), n)
    }
}

/// C-set values at row `k`; `last_column` selects the pinned case
/// `{Y(l,k)}` for the easternmost column.
pub fn c_values(k: usize, d: &EastData, n: usize, last_column: bool) -> BTreeSet<usize> {
    if last_column {
        return BTreeSet::from([d.key_value]);
    }
    match d.m_u.cmp(&d.key_value) {
        std::cmp::Ordering::Greater => BTreeSet::new(),
        std::cmp::Ordering::Equal => interval(k, d.key_value.min(d.below - 1).min(d.east), n),
        std::cmp::Ordering::Less => {
            let hi = (d.below - 1).min(d.east);
            if k <= d.key_value && d.key_value <= hi {
                BTreeSet::from([d.key_value])
            } else {
                BTreeSet::new()
            }
        }
    }
}

/// Condition-set evaluator for one tableau. Computes the right scanning
/// paths once and shares them between queries.
pub struct Criteria<'a> {
    t: &'a Tableau,
    right: ScanResult,
}

impl<'a> Criteria<'a> {
    pub fn new(t: &'a Tableau) -> Self {
        Criteria {
            t,
            right: right_scan(t),
        }
    }

    pub fn tableau(&self) -> &Tableau {
        self.t
    }

    /// The right scanning tableau `S(T)` and its paths.
    pub fn right(&self) -> &ScanResult {
        &self.right
    }

    fn check(&self, key: &Tableau, l: usize, k: usize) -> Result<()> {
        if key.shape() != self.t.shape() {
            return Err(Error::ShapeMismatch);
        }
        if !self.t.shape().contains(l, k) {
            return Err(Error::CellOutsideShape { column: l, row: k });
        }
        Ok(())
    }

    pub fn east_data(&self, key: &Tableau, l: usize, k: usize) -> Result<EastData> {
        self.check(key, l, k)?;
        let m_u = scanning::remnant(self.t, l, k)?.drop_through(l).m_value();
        Ok(EastData {
            m_u,
            key_value: key.value(l, k),
            below: self.t.south(l, k),
            east: self.t.east(l, k),
        })
    }

    pub fn a_set(&self, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        let d = self.east_data(key, l, k)?;
        Ok(ConditionSet {
            cell: (l, k),
            kind: SetKind::A,
            values: a_values(k, &d, self.t.n()),
        })
    }

    pub fn c_set(&self, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        let d = self.east_data(key, l, k)?;
        let last = l == self.t.shape().width();
        Ok(ConditionSet {
            cell: (l, k),
            kind: SetKind::C,
            values: c_values(k, &d, self.t.n(), last),
        })
    }

    /// The unique row `i` with `cell ∈ P(T;j,i)`.
    fn path_row(&self, j: usize, cell: Cell) -> Result<usize> {
        let rows: Vec<usize> = self
            .right
            .column_paths(j)
            .iter()
            .enumerate()
            .filter(|(_, p)| p.contains(cell))
            .map(|(r, _)| r + 1)
            .collect();
        match rows.as_slice() {
            [row] => Ok(*row),
            _ => Err(Error::Invariant(format!(
                "cell {cell:?} lies on {} scanning paths from column {j}, expected exactly one",
                rows.len()
            ))),
        }
    }

    /// B-set: the intersection over `j ≤ l` of the unions of
    /// `[E(l,k;j,i), Y(j,i)]` for rows `a(j) ≤ i < b(j)`.
    pub fn b_set(&self, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        self.check(key, l, k)?;
        let n = self.t.n();
        let shape = self.t.shape();
        let mut values = interval(k, key.value(l, k), n);
        for j in 1..l {
            let a = self.path_row(j, (l - 1, k))?;
            let b = if k < shape.column_len(l) {
                self.path_row(j, (l, k + 1))?
            } else {
                shape.column_len(j) + 1
            };
            let mut union = BTreeSet::new();
            for i in a..b {
                let e = self.right.path(j, i).last_value_before_column(l).ok_or_else(|| {
                    Error::Invariant(format!("path from ({j},{i}) has no cell west of column {l}"))
                })?;
                union.extend(interval(e, key.value(j, i), n));
            }
            values = values.intersection(&union).copied().collect();
        }
        Ok(ConditionSet {
            cell: (l, k),
            kind: SetKind::B,
            values,
        })
    }

    /// Terminal values `g_h` of the non-destructive left paths from
    /// `(l−1,h)`, `h = k..=q`, in the remnant `U` left after peeling the
    /// paths from `(l,ζ_l)…(l,k+1)`. Returns the `(h, g_h)` pairs (empty if
    /// no `q ≥ k` exists) together with `U`.
    fn west_terminals(&self, l: usize, k: usize) -> Result<(Vec<(usize, usize)>, Remnant)> {
        let (_, u) = left_peel(self.t, l, k)?;
        let bound = self.t.south(l, k) - 1;
        let q = match u.column(l - 1).iter().rposition(|&v| v <= bound) {
            Some(idx) => idx + 1,
            None => return Ok((Vec::new(), u)),
        };
        let g = (k..=q)
            .map(|h| {
                left_path(&u, l - 1, h)
                    .map(|p| (h, p.terminal))
                    .ok_or_else(|| Error::Invariant(format!("left path from ({},{h}) ran out", l - 1)))
            })
            .collect::<Result<_>>()?;
        Ok((g, u))
    }

    pub fn f_set(&self, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        self.check(key, l, k)?;
        let n = self.t.n();
        let y = key.value(l, k);
        let bound = self.t.south(l, k) - 1;
        let values = if l == 1 {
            interval(y, bound, n)
        } else {
            let (g, _) = self.west_terminals(l, k)?;
            match g.iter().find(|&&(_, gh)| gh >= y) {
                Some(&(p, _)) => interval(self.t.value(l - 1, p), bound, n),
                None => BTreeSet::new(),
            }
        };
        Ok(ConditionSet {
            cell: (l, k),
            kind: SetKind::F,
            values,
        })
    }

    pub fn g_set(&self, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        self.check(key, l, k)?;
        let n = self.t.n();
        let y = key.value(l, k);
        let values = if l == 1 {
            BTreeSet::from([y])
        } else {
            let (g, u) = self.west_terminals(l, k)?;
            let hits: Vec<usize> = g.iter().filter(|&&(_, gh)| gh == y).map(|&(h, _)| h).collect();
            match (hits.first(), hits.last()) {
                (Some(&a), Some(&b)) => {
                    // the cell under (l−1,b) is read in U: it may already be peeled off
                    let under = u.column(l - 1).get(b).copied().unwrap_or(n + 1);
                    let hi = (under - 1).min(self.t.south(l, k) - 1);
                    interval(self.t.value(l - 1, a), hi, n)
                }
                _ => BTreeSet::new(),
            }
        };
        Ok(ConditionSet {
            cell: (l, k),
            kind: SetKind::G,
            values,
        })
    }

    pub fn set(&self, kind: SetKind, key: &Tableau, l: usize, k: usize) -> Result<ConditionSet> {
        match kind {
            SetKind::A => self.a_set(key, l, k),
            SetKind::B => self.b_set(key, l, k),
            SetKind::C => self.c_set(key, l, k),
            SetKind::F => self.f_set(key, l, k),
            SetKind::G => self.g_set(key, l, k),
        }
    }

    /// `true` if every cell's value lies in its `kind` set for `key`.
    pub fn all_cells_pass(&self, kind: SetKind, key: &Tableau) -> Result<bool> {
        if key.shape() != self.t.shape() {
            return Err(Error::ShapeMismatch);
        }
        for (l, k) in self.t.shape().cells() {
            if !self.set(kind, key, l, k)?.contains(self.t.value(l, k)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn a_set(t: &Tableau, pi: &Permutation, l: usize, k: usize) -> Result<ConditionSet> {
    Criteria::new(t).a_set(&make_key(t.shape(), pi)?, l, k)
}

pub fn b_set(t: &Tableau, pi: &Permutation, l: usize, k: usize) -> Result<ConditionSet> {
    Criteria::new(t).b_set(&make_key(t.shape(), pi)?, l, k)
}

pub fn c_set(t: &Tableau, pi: &Permutation, l: usize, k: usize) -> Result<ConditionSet> {
    Criteria::new(t).c_set(&make_key(t.shape(), pi)?, l, k)
}

pub fn f_set(t: &Tableau, sigma: &Permutation, l: usize, k: usize) -> Result<ConditionSet> {
    Criteria::new(t).f_set(&make_key(t.shape(), sigma)?, l, k)
}

pub fn g_set(t: &Tableau, sigma: &Permutation, l: usize, k: usize) -> Result<ConditionSet> {
    Criteria::new(t).g_set(&make_key(t.shape(), sigma)?, l, k)
}

/// Which comparison between a scanning tableau and a key is wanted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KeyRelation {
    /// `S(T) ≤ Y` (Demazure tableau).
    RightBounded,
    /// `S(T) = Y` (exact Demazure tableau).
    RightExact,
    /// `Y ≤ M(T)`.
    LeftBounded,
    /// `M(T) = Y`.
    LeftExact,
}

impl KeyRelation {
    pub const ALL: [KeyRelation; 4] = [
        KeyRelation::RightBounded,
        KeyRelation::RightExact,
        KeyRelation::LeftBounded,
        KeyRelation::LeftExact,
    ];

    /// Condition sets whose cellwise membership is equivalent to the relation.
    pub fn cellwise_kinds(self) -> &'static [SetKind] {
        match self {
            KeyRelation::RightBounded => &[SetKind::A, SetKind::B],
            KeyRelation::RightExact => &[SetKind::C],
            KeyRelation::LeftBounded => &[SetKind::F],
            KeyRelation::LeftExact => &[SetKind::G],
        }
    }
}

/// Decides the relation by running the scan and comparing with `key`.
pub fn holds_direct(t: &Tableau, key: &Tableau, rel: KeyRelation) -> Result<bool> {
    if key.shape() != t.shape() {
        return Err(Error::ShapeMismatch);
    }
    Ok(match rel {
        KeyRelation::RightBounded => right_scan(t).tableau.dominated_by(key)?,
        KeyRelation::RightExact => right_scan(t).tableau == *key,
        KeyRelation::LeftBounded => key.dominated_by(&scanning::left_scan(t)?.tableau)?,
        KeyRelation::LeftExact => scanning::left_scan(t)?.tableau == *key,
    })
}

/// `R(T) ≤ Y_λ(π)`.
pub fn is_demazure(t: &Tableau, pi: &Permutation) -> Result<bool> {
    holds_direct(t, &make_key(t.shape(), pi)?, KeyRelation::RightBounded)
}

/// `R(T) = Y_λ(π)`.
pub fn is_exact_demazure(t: &Tableau, pi: &Permutation) -> Result<bool> {
    holds_direct(t, &make_key(t.shape(), pi)?, KeyRelation::RightExact)
}

/// `Y_λ(σ) ≤ L(T)`.
pub fn is_left_bounded(t: &Tableau, sigma: &Permutation) -> Result<bool> {
    holds_direct(t, &make_key(t.shape(), sigma)?, KeyRelation::LeftBounded)
}

/// `L(T) = Y_λ(σ)`.
pub fn is_left_exact(t: &Tableau, sigma: &Permutation) -> Result<bool> {
    holds_direct(t, &make_key(t.shape(), sigma)?, KeyRelation::LeftExact)
}

/// Cellwise route: every cell's value lies in its `kind` set.
pub fn holds_cellwise(t: &Tableau, perm: &Permutation, kind: SetKind) -> Result<bool> {
    Criteria::new(t).all_cells_pass(kind, &make_key(t.shape(), perm)?)
}
