//! Partitions, permutations, reduced words, the block-increasing subsets
//! `S_n^λ`, and the λ-key of a permutation.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// An `n`-partition: a weakly decreasing `n`-tuple of non-negative parts.
///
/// Trailing zeros are kept, so the ambient rank `n` is always
/// `parts().len()`. The empty shape (all parts zero) is legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct Partition {
    parts: Vec<usize>,
    columns: Vec<usize>,
}

/// Wire form: `{"n": int, "parts": [λ_1,…,λ_n]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartitionJson {
    pub n: usize,
    pub parts: Vec<usize>,
}

impl TryFrom<PartitionJson> for Partition {
    type Error = Error;

    fn try_from(json: PartitionJson) -> Result<Self> {
        Partition::with_rank(json.parts, json.n)
    }
}

impl From<Partition> for PartitionJson {
    fn from(p: Partition) -> Self {
        PartitionJson {
            n: p.n(),
            parts: p.parts,
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("rank n must be positive".into()));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must weakly decrease, found {} < {}",
                w[0], w[1]
            )));
        }
        let width = parts[0];
        let columns = (1..=width)
            .map(|j| parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Ok(Partition { parts, columns })
    }

    /// Pads `parts` with zeros up to rank `n`.
    pub fn with_rank(mut parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{} parts do not fit in rank {}",
                parts.len(),
                n
            )));
        }
        parts.resize(n, 0);
        Partition::new(parts)
    }

    /// Builds the partition whose column lengths are `zeta`.
    pub fn from_column_lengths(zeta: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("rank n must be positive".into()));
        }
        if zeta.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "column lengths must weakly decrease".into(),
            ));
        }
        if let Some(&z) = zeta.iter().find(|&&z| z == 0 || z > n) {
            return Err(Error::InvalidPartition(format!(
                "column length {z} outside 1..={n}"
            )));
        }
        let parts = (1..=n)
            .map(|i| zeta.iter().filter(|&&z| z >= i).count())
            .collect();
        Partition::new(parts)
    }

    /// Every `n`-partition with at most `max_cells` cells, ordered by size
    /// and then reverse-lexicographically.
    pub fn all_up_to(n: usize, max_cells: usize) -> Vec<Partition> {
        fn rec(n: usize, remaining: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                if remaining == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for p in (0..=remaining.min(cap)).rev() {
                cur.push(p);
                rec(n, remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        for size in 0..=max_cells {
            let mut found = Vec::new();
            rec(n, size, size, &mut Vec::new(), &mut found);
            out.extend(found);
        }
        out.into_iter()
            .map(|p| Partition::new(p).expect("generated parts are weakly decreasing"))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Column lengths `ζ_1 ≥ … ≥ ζ_{λ_1}`; empty for the empty shape.
    pub fn column_lengths(&self) -> &[usize] {
        &self.columns
    }

    /// Number of columns, `λ_1`.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Length of column `j` (1-based); zero beyond the last column.
    pub fn column_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.columns.get(j - 1).copied().unwrap_or(0)
    }

    /// Length of row `i` (1-based); zero beyond the rank.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn contains(&self, j: usize, i: usize) -> bool {
        j >= 1 && i >= 1 && i <= self.column_len(j)
    }

    /// Cells `(j,i)` in column-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, &len)| (1..=len).map(move |i| (c + 1, i)))
    }

    /// The distinct nonzero column lengths `q_1 < … < q_k`.
    pub fn distinct_column_lengths(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.columns.iter().copied().collect();
        set.into_iter().collect()
    }

    /// Position blocks `[q_{r−1}+1, q_r]` for `r = 1..=k+1` with `q_0 = 0`
    /// and `q_{k+1} = n`, as 1-based inclusive ranges. Empty blocks are
    /// dropped.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut bounds = vec![0];
        bounds.extend(self.distinct_column_lengths());
        if *bounds.last().unwrap() != self.n() {
            bounds.push(self.n());
        }
        bounds
            .windows(2)
            .map(|w| (w[0] + 1, w[1]))
            .collect()
    }

    /// `|S_n^λ| = n! / (q_1! (q_2−q_1)! ⋯ (n−q_k)!)`.
    pub fn parabolic_count(&self) -> u128 {
        let fact = |m: usize| (1..=m as u128).product::<u128>();
        self.blocks()
            .iter()
            .fold(fact(self.n()), |acc, &(lo, hi)| acc / fact(hi + 1 - lo))
    }

    /// λ with one extra column of length `n` prepended.
    pub fn with_full_column(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p + 1).collect())
            .expect("adding one to every part keeps the order")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// An `n`-permutation in one-line notation, `π = (π_1, …, π_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("rank n must be positive".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("entry {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    /// The longest permutation `τ_0 = (n, n−1, …, 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            entries: (1..=n).rev().collect(),
        }
    }

    /// All of `S_n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n)
            .permutations(n)
            .map(|entries| Permutation { entries })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `π_i` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// 1-based position of the value `v`.
    fn position(&self, v: usize) -> usize {
        self.entries.iter().position(|&e| e == v).unwrap() + 1
    }

    pub fn inversions(&self) -> usize {
        self.entries
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// `s_i.π`: the tuple with the values `i` and `i+1` interchanged.
    pub fn value_swap(&self, i: usize) -> Result<Permutation> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|&v| match v {
                v if v == i => i + 1,
                v if v == i + 1 => i,
                v => v,
            })
            .collect();
        Ok(Permutation { entries })
    }

    /// `true` if value `i+1` appears before value `i`.
    fn descends_at_value(&self, i: usize) -> bool {
        self.position(i + 1) < self.position(i)
    }

    /// A reduced word for π. Deterministic: strips inversions by always
    /// swapping the smallest out-of-order value pair, then reverses the
    /// recorded letters so that the first letter is applied first.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut cur = self.clone();
        let mut letters = Vec::with_capacity(self.inversions());
        while let Some(i) = (1..self.n()).find(|&i| cur.descends_at_value(i)) {
            cur = cur.value_swap(i).expect("letter is in range");
            letters.push(i);
        }
        letters.reverse();
        ReducedWord { letters }
    }

    /// Every reduced word for π.
    pub fn all_reduced_words(&self) -> Vec<ReducedWord> {
        if self.inversions() == 0 {
            return vec![ReducedWord { letters: vec![] }];
        }
        let mut out = Vec::new();
        for i in (1..self.n()).filter(|&i| self.descends_at_value(i)) {
            let shorter = self.value_swap(i).expect("letter is in range");
            for mut w in shorter.all_reduced_words() {
                w.letters.push(i);
                out.push(w);
            }
        }
        out
    }

    /// Applies the letters of `word` to `(1, …, n)`, first letter first.
    pub fn from_word(n: usize, word: &ReducedWord) -> Result<Permutation> {
        word.letters
            .iter()
            .try_fold(Permutation::identity(n), |p, &i| p.value_swap(i))
    }

    /// Membership in `S_n^λ`: increasing within every position block.
    pub fn in_parabolic(&self, shape: &Partition) -> Result<bool> {
        check_rank(shape.n(), self.n())?;
        Ok(shape.blocks().iter().all(|&(lo, hi)| {
            self.entries[lo - 1..hi].windows(2).all(|w| w[0] < w[1])
        }))
    }

    /// Projection onto `S_n^λ`: sorts the entries of every block ascending.
    pub fn project_parabolic(&self, shape: &Partition) -> Result<Permutation> {
        check_rank(shape.n(), self.n())?;
        let mut entries = self.entries.clone();
        for (lo, hi) in shape.blocks() {
            entries[lo - 1..hi].sort_unstable();
        }
        Ok(Permutation { entries })
    }

    /// Every member of `S_n^λ`, in lexicographic order.
    pub fn all_parabolic(shape: &Partition) -> Vec<Permutation> {
        Permutation::all(shape.n())
            .into_iter()
            .filter(|p| p.in_parabolic(shape).unwrap())
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// A word `(i_1, …, i_t)` of simple-transposition indices; `i_1` acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

pub(crate) fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

/// The λ-key `Y_λ(π)`: column `j` holds `π_1, …, π_{ζ_j}` sorted ascending.
pub fn make_key(shape: &Partition, pi: &Permutation) -> Result<Tableau> {
    check_rank(shape.n(), pi.n())?;
    let columns = shape
        .column_lengths()
        .iter()
        .map(|&len| pi.entries()[..len].iter().copied().sorted().collect())
        .collect();
    Ok(Tableau::from_parts_unchecked(shape.clone(), columns))
}

/// The unique `π ∈ S_n^λ` with `Y_λ(π) = key`.
pub fn key_to_perm(key: &Tableau) -> Result<Permutation> {
    if !key.is_key() {
        return Err(Error::NotAKey);
    }
    let shape = key.shape();
    let n = shape.n();
    // One column of each distinct length, shortest first.
    let mut by_len: Vec<&[usize]> = Vec::new();
    for j in (1..=shape.width()).rev() {
        let col = key.column(j);
        if by_len.last().is_none_or(|c| c.len() < col.len()) {
            by_len.push(col);
        }
    }
    let mut entries = Vec::with_capacity(n);
    let mut used = BTreeSet::new();
    for col in by_len {
        let fresh: Vec<usize> = col.iter().copied().filter(|v| !used.contains(v)).collect();
        used.extend(fresh.iter().copied());
        entries.extend(fresh);
    }
    entries.extend((1..=n).filter(|v| !used.contains(v)));
    Permutation::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_json_round_trip() {
        let p = Partition::with_rank(vec![2, 1], 4).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"n":4,"parts":[2,1,0,0]}"#);
        assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), p);
        assert!(serde_json::from_str::<Partition>(r#"{"n":2,"parts":[1,2]}"#).is_err());
        assert!(serde_json::from_str::<Partition>(r#"{"n":1,"parts":[1,1]}"#).is_err());
    }

    fn ex_shape() -> Partition {
        Partition::from_column_lengths(&[7, 5, 4, 2], 9).unwrap()
    }

    fn ex_pi() -> Permutation {
        Permutation::new(vec![6, 8, 3, 7, 4, 1, 9, 2, 5]).unwrap()
    }

    #[test]
    fn column_lengths_examples() {
        let p = Partition::new(vec![4, 4, 3, 3, 2, 1, 1, 0, 0]).unwrap();
        assert_eq!(p.column_lengths(), &[7, 5, 4, 2]);
        assert_eq!(Partition::new(vec![0, 0, 0]).unwrap().column_lengths(), &[] as &[usize]);
        assert_eq!(Partition::new(vec![3, 1, 0]).unwrap().column_lengths(), &[2, 1, 1]);
        assert_eq!(ex_shape().parts(), &[4, 4, 3, 3, 2, 1, 1, 0, 0]);
    }

    #[test]
    fn partition_rejects_increase() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(Partition::from_column_lengths(&[1, 2], 3).is_err());
        assert!(Partition::from_column_lengths(&[4], 3).is_err());
    }

    #[test]
    fn value_swap_examples() {
        let p = |v: Vec<usize>| Permutation::new(v).unwrap();
        assert_eq!(p(vec![1, 2, 3]).value_swap(1).unwrap(), p(vec![2, 1, 3]));
        assert_eq!(p(vec![2, 1, 3]).value_swap(1).unwrap(), p(vec![1, 2, 3]));
        assert_eq!(p(vec![3, 1, 2]).value_swap(2).unwrap(), p(vec![2, 1, 3]));
        assert!(matches!(
            p(vec![1, 2, 3]).value_swap(3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(p(vec![1, 2, 3]).value_swap(0).is_err());
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(5).reduced_word().is_empty());
        let w = Permutation::new(vec![2, 1]).unwrap().reduced_word();
        assert_eq!(w.letters(), &[1]);
        // brute-force inversion count of the worked-example permutation
        let pi = ex_pi();
        let brute = (0..9)
            .flat_map(|a| (a + 1..9).map(move |b| (a, b)))
            .filter(|&(a, b)| pi.entries()[a] > pi.entries()[b])
            .count();
        assert_eq!(brute, 21);
        let w = pi.reduced_word();
        assert_eq!(w.len(), 21);
        assert_eq!(Permutation::from_word(9, &w).unwrap(), pi);
    }

    #[test]
    fn reduced_words_replay_for_small_n() {
        for n in 1..=5 {
            for pi in Permutation::all(n) {
                let w = pi.reduced_word();
                assert_eq!(w.len(), pi.inversions());
                assert_eq!(Permutation::from_word(n, &w).unwrap(), pi);
            }
        }
        for pi in Permutation::all(4) {
            for w in pi.all_reduced_words() {
                assert_eq!(w.len(), pi.inversions());
                assert_eq!(Permutation::from_word(4, &w).unwrap(), pi);
            }
        }
        assert_eq!(Permutation::longest(3).all_reduced_words().len(), 2);
        assert_eq!(Permutation::longest(4).all_reduced_words().len(), 16);
    }

    #[test]
    fn worked_example_key() {
        let y = make_key(&ex_shape(), &ex_pi()).unwrap();
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 3, 4, 6, 7, 8, 9],
            vec![3, 4, 6, 7, 8],
            vec![3, 6, 7, 8],
            vec![6, 8],
        ];
        assert_eq!(y.columns(), expected.as_slice());
        assert!(y.is_key());
    }

    #[test]
    fn identity_and_longest_keys() {
        let shape = Partition::new(vec![3, 2, 2, 0]).unwrap();
        let plus = make_key(&shape, &Permutation::identity(4)).unwrap();
        for (j, i) in shape.cells() {
            assert_eq!(plus.value(j, i), i);
        }
        let top = make_key(&shape, &Permutation::longest(4)).unwrap();
        for (j, &len) in shape.column_lengths().iter().enumerate() {
            let expected: Vec<usize> = (4 - len + 1..=4).collect();
            assert_eq!(top.column(j + 1), expected.as_slice());
        }
    }

    #[test]
    fn parabolic_membership() {
        let shape = ex_shape();
        assert!(ex_pi().in_parabolic(&shape).unwrap());
        assert_eq!(shape.blocks(), vec![(1, 2), (3, 4), (5, 5), (6, 7), (8, 9)]);
        assert!(Permutation::identity(9).in_parabolic(&shape).unwrap());
        let small = Partition::new(vec![2, 1, 0]).unwrap();
        assert_eq!(Permutation::all_parabolic(&small).len(), 6);
        assert_eq!(small.parabolic_count(), 6);
        let flat = Partition::new(vec![2, 2, 0]).unwrap();
        assert_eq!(Permutation::all_parabolic(&flat).len(), 3);
        assert_eq!(flat.parabolic_count(), 3);
    }

    #[test]
    fn projection_is_idempotent_and_preserves_key() {
        for shape in Partition::all_up_to(4, 6) {
            for pi in Permutation::all(4) {
                let proj = pi.project_parabolic(&shape).unwrap();
                assert!(proj.in_parabolic(&shape).unwrap());
                assert_eq!(proj.project_parabolic(&shape).unwrap(), proj);
                assert_eq!(make_key(&shape, &pi).unwrap(), make_key(&shape, &proj).unwrap());
                assert_eq!(key_to_perm(&make_key(&shape, &pi).unwrap()).unwrap(), proj);
            }
        }
    }

    #[test]
    fn key_counts_match_multinomial() {
        for n in 1..=4 {
            for shape in Partition::all_up_to(n, 6) {
                let keys: BTreeSet<Tableau> = Permutation::all(n)
                    .iter()
                    .map(|pi| make_key(&shape, pi).unwrap())
                    .collect();
                assert_eq!(keys.len() as u128, shape.parabolic_count(), "{shape}");
            }
        }
    }

    #[test]
    fn key_to_perm_examples() {
        let y = make_key(&ex_shape(), &ex_pi()).unwrap();
        let back = key_to_perm(&y).unwrap();
        assert_eq!(back, ex_pi().project_parabolic(&ex_shape()).unwrap());
        let shape = Partition::new(vec![2, 1, 0]).unwrap();
        let plus = make_key(&shape, &Permutation::identity(3)).unwrap();
        assert_eq!(key_to_perm(&plus).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn key_to_perm_single_column_brute_force() {
        for n in 1..=4 {
            for len in 1..=n {
                let shape = Partition::from_column_lengths(&[len], n).unwrap();
                for pi in Permutation::all(n) {
                    let y = make_key(&shape, &pi).unwrap();
                    let got = key_to_perm(&y).unwrap();
                    // brute force: the perms in S_n^λ with the same key
                    let matches: Vec<Permutation> = Permutation::all(n)
                        .into_iter()
                        .filter(|p| p.in_parabolic(&shape).unwrap())
                        .filter(|p| make_key(&shape, p).unwrap() == y)
                        .collect();
                    assert_eq!(matches, vec![got]);
                }
            }
        }
    }

    #[test]
    fn key_to_perm_rejects_non_key() {
        let shape = Partition::new(vec![2, 0]).unwrap();
        let t = Tableau::new(shape, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(key_to_perm(&t), Err(Error::NotAKey));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let shape = Partition::new(vec![1, 0]).unwrap();
        assert_eq!(
            make_key(&shape, &Permutation::identity(3)),
            Err(Error::RankMismatch { expected: 2, found: 3 })
        );
    }
}
