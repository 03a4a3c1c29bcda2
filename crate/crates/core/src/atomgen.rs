//! East-to-west backtracking generators for the tableaux with a given right
//! key (atom tableaux) and with right key bounded by a given key (Demazure
//! tableaux), and the brute-force filter used to check them.
//!
//! Both generators grow a tableau one column at a time from the east. While
//! a new column is being filled bottom to top, each partial column `L` is
//! paired with the remnant `U` of the already-built suffix from which the
//! scanning paths of the values in `L` have been deleted. The value allowed
//! at `(j,i)` then depends only on `m(U)`, the key entry, the value below in
//! `L`, and the suffix entry to the east.

use std::time::Instant;

use crate::criteria::{a_values, c_values, holds_direct, EastData, KeyRelation};
use crate::error::{Error, Result};
use crate::scanning::ewis_remove;
use crate::shapes::{check_rank, make_key, Partition, Permutation};
use crate::tableau::{enumerate, Remnant, Tableau};

/// Resource limits for the generators.
#[derive(Clone, Copy, Debug)]
pub struct GenLimits {
    /// Maximum number of live partial frames (or suffix tableaux).
    pub max_frames: usize,
    pub deadline: Option<Instant>,
}

impl Default for GenLimits {
    fn default() -> Self {
        GenLimits {
            max_frames: 1 << 22,
            deadline: None,
        }
    }
}

impl GenLimits {
    fn check(&self, live: usize) -> Result<()> {
        if live > self.max_frames {
            return Err(Error::FrameCapExceeded {
                cap: self.max_frames,
            });
        }
        if self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::TimeCapExceeded);
        }
        Ok(())
    }
}

/// A pending column and the remnant that accompanies it.
#[derive(Clone, Debug)]
pub struct GenFrame {
    /// Values placed so far, northernmost first.
    pub column: Vec<usize>,
    /// The suffix with the paths of `column`'s values removed.
    pub remnant: Remnant,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    Exact,
    Bounded,
}

/// Extends every suffix (columns `j+1..`) by one column `j`.
fn extend_suffix(
    suffix: &[Vec<usize>],
    j: usize,
    key: &Tableau,
    rule: Rule,
    limits: &GenLimits,
    out: &mut Vec<Vec<Vec<usize>>>,
) -> Result<()> {
    let shape = key.shape();
    let n = shape.n();
    let height = shape.column_len(j);
    let last = j == shape.width();
    let mut frames = vec![GenFrame {
        column: Vec::new(),
        remnant: Remnant::from_columns(n, j, suffix.to_vec()),
    }];
    for i in (1..=height).rev() {
        let east = suffix.first().and_then(|c| c.get(i - 1)).copied().unwrap_or(n);
        let mut next = Vec::new();
        for frame in &frames {
            let data = EastData {
                m_u: frame.remnant.m_value(),
                key_value: key.value(j, i),
                below: frame.column.first().copied().unwrap_or(n + 1),
                east,
            };
            let choices = match rule {
                Rule::Exact => c_values(i, &data, n, last),
                Rule::Bounded => a_values(i, &data, n),
            };
            for z in choices {
                let mut remnant = frame.remnant.clone();
                ewis_remove(&mut remnant, j, z);
                let mut column = Vec::with_capacity(height - i + 1);
                column.push(z);
                column.extend_from_slice(&frame.column);
                next.push(GenFrame { column, remnant });
            }
            limits.check(next.len())?;
        }
        frames = next;
        if frames.is_empty() {
            return Ok(());
        }
    }
    for frame in frames {
        let mut tableau = Vec::with_capacity(suffix.len() + 1);
        tableau.push(frame.column);
        tableau.extend_from_slice(suffix);
        out.push(tableau);
    }
    limits.check(out.len())
}

fn generate(shape: &Partition, pi: &Permutation, rule: Rule, limits: &GenLimits) -> Result<Vec<Tableau>> {
    check_rank(shape.n(), pi.n())?;
    let key = make_key(shape, pi)?;
    let mut level: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for j in (1..=shape.width()).rev() {
        let mut next = Vec::new();
        for suffix in &level {
            extend_suffix(suffix, j, &key, rule, limits, &mut next)?;
        }
        level = next;
    }
    let out: Vec<Tableau> = level
        .into_iter()
        .map(|cols| Tableau::new(shape.clone(), cols))
        .collect::<Result<_>>()
        .map_err(|e| Error::Invariant(format!("generator emitted a non-semistandard filling: {e}")))?;
    Ok(out)
}

/// Every `T` with `S(T) = Y_λ(π)`, in generation order.
pub fn generate_atom_tableaux(shape: &Partition, pi: &Permutation) -> Result<Vec<Tableau>> {
    generate_atom_tableaux_with(shape, pi, &GenLimits::default())
}

pub fn generate_atom_tableaux_with(
    shape: &Partition,
    pi: &Permutation,
    limits: &GenLimits,
) -> Result<Vec<Tableau>> {
    generate(shape, pi, Rule::Exact, limits)
}

/// Every `T` with `S(T) ≤ Y_λ(π)`, in generation order.
pub fn generate_demazure_tableaux(shape: &Partition, pi: &Permutation) -> Result<Vec<Tableau>> {
    generate_demazure_tableaux_with(shape, pi, &GenLimits::default())
}

pub fn generate_demazure_tableaux_with(
    shape: &Partition,
    pi: &Permutation,
    limits: &GenLimits,
) -> Result<Vec<Tableau>> {
    generate(shape, pi, Rule::Bounded, limits)
}

/// Every `T ∈ T_λ` satisfying `rel` against `Y_λ(π)`, found by enumerating
/// all of `T_λ` and scanning each tableau.
pub fn filter_oracle(shape: &Partition, pi: &Permutation, rel: KeyRelation) -> Result<Vec<Tableau>> {
    let key = make_key(shape, pi)?;
    let mut out = Vec::new();
    for t in enumerate(shape) {
        if holds_direct(&t, &key, rel)? {
            out.push(t);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn as_set(v: Vec<Tableau>) -> BTreeSet<Tableau> {
        let len = v.len();
        let s: BTreeSet<Tableau> = v.into_iter().collect();
        assert_eq!(s.len(), len, "duplicate output");
        s
    }

    #[test]
    fn identity_gives_minimal_tableau() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 6) {
                let id = Permutation::identity(n);
                let plus = vec![Tableau::minimal(&shape)];
                assert_eq!(generate_atom_tableaux(&shape, &id).unwrap(), plus);
                assert_eq!(generate_demazure_tableaux(&shape, &id).unwrap(), plus);
            }
        }
    }

    #[test]
    fn single_box_atoms() {
        let n = 4;
        let shape = Partition::with_rank(vec![1], n).unwrap();
        for pi in Permutation::all(n) {
            let got = generate_atom_tableaux(&shape, &pi).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].column(1), &[pi.at(1)]);
        }
    }

    #[test]
    fn longest_gives_everything() {
        for shape in Partition::all_up_to(3, 5) {
            let all: BTreeSet<Tableau> = enumerate(&shape).collect();
            let got = as_set(generate_demazure_tableaux(&shape, &Permutation::longest(3)).unwrap());
            assert_eq!(got, all);
            let oracle = as_set(filter_oracle(&shape, &Permutation::longest(3), KeyRelation::RightBounded).unwrap());
            assert_eq!(oracle, all);
            let left = as_set(filter_oracle(&shape, &Permutation::identity(3), KeyRelation::LeftBounded).unwrap());
            assert_eq!(left, all);
        }
    }

    #[test]
    fn worked_example_contains_filled_tableau() {
        let shape = Partition::from_column_lengths(&[7, 5, 4, 2], 9).unwrap();
        let pi = Permutation::new(vec![6, 8, 3, 7, 4, 1, 9, 2, 5]).unwrap();
        let t = Tableau::new(
            shape.clone(),
            vec![
                vec![1, 2, 4, 5, 6, 7, 9],
                vec![1, 3, 5, 6, 7],
                vec![3, 4, 7, 8],
                vec![6, 8],
            ],
        )
        .unwrap();
        let atoms = generate_atom_tableaux(&shape, &pi).unwrap();
        assert!(atoms.contains(&t));
        let key = make_key(&shape, &pi).unwrap();
        for a in atoms.iter().step_by(97) {
            assert_eq!(crate::scanning::right_scan(a).tableau, key);
        }
    }

    #[test]
    fn frame_cap_is_enforced() {
        let shape = Partition::new(vec![3, 2, 1, 0]).unwrap();
        let limits = GenLimits {
            max_frames: 2,
            deadline: None,
        };
        assert_eq!(
            generate_demazure_tableaux_with(&shape, &Permutation::longest(4), &limits),
            Err(Error::FrameCapExceeded { cap: 2 })
        );
    }

    #[test]
    fn generators_match_oracle_n3() {
        for shape in Partition::all_up_to(3, 6) {
            for pi in Permutation::all(3) {
                let exact = as_set(generate_atom_tableaux(&shape, &pi).unwrap());
                let bounded = as_set(generate_demazure_tableaux(&shape, &pi).unwrap());
                assert_eq!(exact, as_set(filter_oracle(&shape, &pi, KeyRelation::RightExact).unwrap()));
                assert_eq!(bounded, as_set(filter_oracle(&shape, &pi, KeyRelation::RightBounded).unwrap()));
            }
        }
    }

    #[test]
    fn exact_sets_partition_the_shape() {
        for shape in Partition::all_up_to(4, 5) {
            let mut union = BTreeSet::new();
            let mut total = 0;
            for pi in Permutation::all_parabolic(&shape) {
                let atoms = generate_atom_tableaux(&shape, &pi).unwrap();
                total += atoms.len();
                union.extend(atoms);
            }
            let all: BTreeSet<Tableau> = enumerate(&shape).collect();
            assert_eq!(total, all.len());
            assert_eq!(union, all);
        }
    }
}
