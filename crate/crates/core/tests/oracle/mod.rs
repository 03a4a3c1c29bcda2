//! Brute-force reference implementations shared by the integration tests.
//! Written against plain vectors and maps, without calling into the crate.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Cols = Vec<Vec<usize>>;
pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn column_lengths(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

fn is_semistandard(cols: &Cols) -> bool {
    let strict = cols.iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
    let rows = cols.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(r, l)| l <= r));
    strict && rows
}

/// Every semistandard filling, found by trying every assignment of `1..=n`.
pub fn ssyt(parts: &[usize], n: usize) -> Vec<Cols> {
    let zeta = column_lengths(parts);
    let cells: usize = zeta.iter().sum();
    let mut out = Vec::new();
    let mut digits = vec![1usize; cells];
    loop {
        let mut it = digits.iter();
        let cols: Cols = zeta.iter().map(|&h| it.by_ref().take(h).copied().collect()).collect();
        if is_semistandard(&cols) {
            out.push(cols);
        }
        let mut pos = 0;
        loop {
            if pos == cells {
                return out;
            }
            digits[pos] += 1;
            if digits[pos] <= n {
                break;
            }
            digits[pos] = 1;
            pos += 1;
        }
    }
}

pub fn key(parts: &[usize], pi: &[usize]) -> Cols {
    column_lengths(parts)
        .iter()
        .map(|&h| {
            let mut c = pi[..h].to_vec();
            c.sort_unstable();
            c
        })
        .collect()
}

pub fn dominated(a: &Cols, b: &Cols) -> bool {
    a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| x <= y)
}

pub fn is_key(t: &Cols) -> bool {
    t.windows(2).all(|w| w[1].iter().all(|v| w[0].contains(v)))
}

/// Right key: for each column, pop bottoms one at a time and follow the
/// first weakly increasing run of eastern bottoms, consuming it.
pub fn right_key(t: &Cols) -> Cols {
    (0..t.len())
        .map(|j| {
            let mut work: Cols = t[j..].to_vec();
            let mut col = vec![0; t[j].len()];
            for i in (0..t[j].len()).rev() {
                let mut cur = work[0].pop().unwrap();
                for c in work.iter_mut().skip(1) {
                    if let Some(&b) = c.last() {
                        if b >= cur {
                            cur = b;
                            c.pop();
                        }
                    }
                }
                col[i] = cur;
            }
            col
        })
        .collect()
}

/// Left key: for column `l`, trace westward from each entry bottom to top,
/// taking the largest value not above the current one, then cut each
/// visited cell and everything under it.
pub fn left_key(t: &Cols) -> Cols {
    (0..t.len())
        .map(|l| {
            let mut work: Cols = t[..=l].to_vec();
            let mut col = vec![0; t[l].len()];
            for i in (0..t[l].len()).rev() {
                let mut cur = work[l][i];
                let mut visited = vec![(l, i)];
                for c in (0..l).rev() {
                    let row = work[c].iter().rposition(|&v| v <= cur).expect("left path continues");
                    cur = work[c][row];
                    visited.push((c, row));
                }
                for (c, row) in visited {
                    work[c].truncate(row);
                }
                col[i] = cur;
            }
            col
        })
        .collect()
}

pub fn weight(t: &Cols, n: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    for &v in t.iter().flatten() {
        e[v - 1] += 1;
    }
    e
}

pub fn weight_sum<'a>(ts: impl IntoIterator<Item = &'a Cols>, n: usize) -> Poly {
    let mut p = Poly::new();
    for t in ts {
        *p.entry(weight(t, n)).or_insert(0) += 1;
    }
    p
}

fn add(p: &mut Poly, e: Vec<u32>, c: i64) {
    let slot = p.entry(e.clone()).or_insert(0);
    *slot += c;
    if *slot == 0 {
        p.remove(&e);
    }
}

/// Isobaric divided difference on one monomial, expanded as a string of
/// monomials with the `(i, i+1)` exponents moving toward each other.
pub fn rho(p: &Poly, i: usize) -> Poly {
    let mut out = Poly::new();
    for (e, &c) in p {
        let (a, b) = (e[i - 1] as i64, e[i] as i64);
        let mut put = |x: i64, y: i64, sign: i64| {
            let mut f = e.clone();
            f[i - 1] = x as u32;
            f[i] = y as u32;
            add(&mut out, f, sign * c);
        };
        if a >= b {
            for s in 0..=(a - b) {
                put(a - s, b + s, 1);
            }
        } else {
            for s in 0..(b - a - 1) {
                put(a + 1 + s, b - 1 - s, -1);
            }
        }
    }
    out
}

pub fn rho_bar(p: &Poly, i: usize) -> Poly {
    let mut out = rho(p, i);
    for (e, &c) in p {
        add(&mut out, e.clone(), -c);
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            cur.push(v);
            rec(cur, left, out);
            cur.pop();
            left.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

pub fn inversions(pi: &[usize]) -> usize {
    (0..pi.len()).map(|a| (a + 1..pi.len()).filter(|&b| pi[a] > pi[b]).count()).sum()
}

/// A reduced word `(i_1, …, i_t)` such that swapping the values `i_1`, then
/// `i_2`, … starting from the identity yields `pi`. Takes the largest
/// available descent at each step.
pub fn word(pi: &[usize]) -> Vec<usize> {
    let mut p = pi.to_vec();
    let pos = |p: &[usize], v: usize| p.iter().position(|&x| x == v).unwrap();
    let mut rev = Vec::new();
    loop {
        let i = (1..p.len()).rev().find(|&i| pos(&p, i + 1) < pos(&p, i));
        let Some(i) = i else { break };
        for x in p.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
        rev.push(i);
    }
    rev.reverse();
    rev
}

pub fn monomial(parts: &[usize]) -> Poly {
    Poly::from([(parts.iter().map(|&p| p as u32).collect(), 1)])
}

pub fn demazure(parts: &[usize], pi: &[usize]) -> Poly {
    word(pi).iter().fold(monomial(parts), |p, &i| rho(&p, i))
}

/// The shortest permutation with the same key as `pi`.
pub fn shortest_with_key(parts: &[usize], pi: &[usize]) -> Vec<usize> {
    let target = key(parts, pi);
    permutations(pi.len())
        .into_iter()
        .filter(|p| key(parts, p) == target)
        .min_by_key(|p| inversions(p))
        .unwrap()
}

pub fn atom(parts: &[usize], pi: &[usize]) -> Poly {
    word(&shortest_with_key(parts, pi)).iter().fold(monomial(parts), |p, &i| rho_bar(&p, i))
}

/// Every weakly decreasing `n`-tuple with at most `max_cells` cells.
pub fn partitions(n: usize, max_cells: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for p in 0..=left.min(cap) {
            cur.push(p);
            rec(n, left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_cells, max_cells, &mut Vec::new(), &mut out);
    out
}

pub fn multinomial(parts: &[usize]) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    let n = parts.len();
    let mut blocks = Vec::new();
    let mut run = 1;
    for w in parts.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            blocks.push(run);
            run = 1;
        }
    }
    blocks.push(run);
    blocks.iter().fold(fact(n), |acc, &b| acc / fact(b))
}
