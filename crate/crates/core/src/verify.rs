//! Self-check suites: exhaustive identity checks over every shape with at
//! most `n` rows and `max_cells` cells, plus fixed regressions. Each suite
//! returns a report with the number of checks run and the first few
//! counterexamples.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::atomgen::{filter_oracle, generate_atom_tableaux, generate_demazure_tableaux};
use crate::criteria::{c_values, Criteria, EastData, KeyRelation, SetKind};
use crate::error::{Error, Result};
use crate::keypoly::{
    atom_decomposition, atom_poly, atom_poly_with_word, demazure_poly, demazure_poly_tableaux,
    demazure_poly_with_word, interval_tableaux_cellwise, interval_tableaux_scan, schur_poly,
    weight_sum, IntervalKind,
};
use crate::poly::{Monomial, Polynomial};
use crate::scanning::{ewis_remove, remnant_value, left_scan, right_scan};
use crate::shapes::{key_to_perm, make_key, Partition, Permutation};
use crate::tableau::{enumerate, Remnant, Tableau};

const KEPT_EXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Example,
    Operators,
    DualRoute,
    Atoms,
    Criteria,
    Scans,
    Decomposition,
    Algebra,
    Interval,
    Inert,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Example,
        Suite::Operators,
        Suite::DualRoute,
        Suite::Atoms,
        Suite::Criteria,
        Suite::Scans,
        Suite::Decomposition,
        Suite::Algebra,
        Suite::Interval,
        Suite::Inert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example => "example",
            Suite::Operators => "operators",
            Suite::DualRoute => "dual-route",
            Suite::Atoms => "atoms",
            Suite::Criteria => "criteria",
            Suite::Scans => "scans",
            Suite::Decomposition => "decomposition",
            Suite::Algebra => "algebra",
            Suite::Interval => "interval",
            Suite::Inert => "inert",
        }
    }

    pub fn run(self, bounds: &Bounds) -> Result<SuiteReport> {
        let mut rec = Recorder::new(self);
        let start = Instant::now();
        match self {
            Suite::Example => example(&mut rec)?,
            Suite::Operators => operators(&mut rec)?,
            Suite::DualRoute => dual_route(&mut rec, bounds)?,
            Suite::Atoms => atoms(&mut rec, bounds)?,
            Suite::Criteria => criteria(&mut rec, bounds)?,
            Suite::Scans => scans(&mut rec, bounds)?,
            Suite::Decomposition => decomposition(&mut rec, bounds)?,
            Suite::Algebra => algebra(&mut rec, bounds)?,
            Suite::Interval => interval(&mut rec, bounds)?,
            Suite::Inert => inert(&mut rec, bounds)?,
        }
        Ok(rec.finish(start))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; expected one of {} or all", names.join(", "))
            })
    }
}

/// Size of the exhaustive range: every `k ≤ n` and every `k`-partition
/// with at most `max_cells` cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n: usize,
    pub max_cells: usize,
    /// Random polynomials drawn by the algebra suite.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            n: 4,
            max_cells: 6,
            samples: 128,
            seed: 0x5eed,
        }
    }
}

impl Bounds {
    pub fn new(n: usize, max_cells: usize) -> Self {
        Bounds {
            n,
            max_cells,
            ..Bounds::default()
        }
    }

    fn shapes(&self) -> impl Iterator<Item = Partition> + '_ {
        (1..=self.n).flat_map(|n| Partition::all_up_to(n, self.max_cells))
    }

    fn capped(&self, n: usize) -> Bounds {
        Bounds {
            n: self.n.min(n),
            ..*self
        }
    }
}

/// A failed check, in a form that can be replayed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub context: String,
    pub lambda: Vec<usize>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<Tableau>,
    pub expected: Value,
    pub actual: Value,
}

impl Counterexample {
    pub fn new(context: impl Into<String>, shape: &Partition) -> Self {
        Counterexample {
            context: context.into(),
            lambda: shape.parts().to_vec(),
            n: shape.n(),
            pi: None,
            sigma: None,
            tableau: None,
            expected: Value::Null,
            actual: Value::Null,
        }
    }

    pub fn pi(mut self, pi: &Permutation) -> Self {
        self.pi = Some(pi.entries().to_vec());
        self
    }

    pub fn sigma(mut self, sigma: &Permutation) -> Self {
        self.sigma = Some(sigma.entries().to_vec());
        self
    }

    pub fn tableau(mut self, t: &Tableau) -> Self {
        self.tableau = Some(t.clone());
        self
    }

    pub fn values<E: Serialize, A: Serialize>(mut self, expected: &E, actual: &A) -> Self {
        self.expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        self.actual = serde_json::to_value(actual).unwrap_or(Value::Null);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<14} {} {} checks, {} failures, {} ms",
            self.suite,
            if self.passed() { "ok  " } else { "FAIL" },
            self.checks,
            self.failures,
            self.elapsed_ms
        )
    }
}

struct Recorder {
    suite: Suite,
    checks: u64,
    failures: u64,
    examples: Vec<Counterexample>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder {
            suite,
            checks: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_EXAMPLES {
                self.examples.push(cx());
            }
        }
    }

    fn finish(self, start: Instant) -> SuiteReport {
        SuiteReport {
            suite: self.suite.name().to_string(),
            checks: self.checks,
            failures: self.failures,
            examples: self.examples,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

/// Runs every suite in order.
pub fn run_all(bounds: &Bounds) -> Result<Vec<SuiteReport>> {
    Suite::ALL.iter().map(|s| s.run(bounds)).collect()
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).expect("fixed permutation")
}

fn sorted(v: Vec<Tableau>) -> Vec<Tableau> {
    let set: BTreeSet<Tableau> = v.into_iter().collect();
    set.into_iter().collect()
}

/// The n = 9 example: the key of `ζ = (7,5,4,2)` at `π`, one tableau with
/// that right key, and the generator state at `(2,3)`.
pub mod worked_example {
    use super::*;

    pub const ZETA: [usize; 4] = [7, 5, 4, 2];
    pub const N: usize = 9;
    pub const PI: [usize; 9] = [6, 8, 3, 7, 4, 1, 9, 2, 5];
    pub const KEY: [&[usize]; 4] = [&[1, 3, 4, 6, 7, 8, 9], &[3, 4, 6, 7, 8], &[3, 6, 7, 8], &[6, 8]];
    pub const FILLED: [&[usize]; 4] = [&[1, 2, 4, 5, 6, 7, 9], &[1, 3, 5, 6, 7], &[3, 4, 7, 8], &[6, 8]];
    /// Columns 3 and 4 as chosen so far, and rows 4..5 of column 2.
    pub const SUFFIX: [&[usize]; 2] = [&[3, 4, 7, 8], &[6, 8]];
    pub const LOWER: [usize; 2] = [6, 7];

    pub fn shape() -> Partition {
        Partition::from_column_lengths(&ZETA, N).expect("fixed shape")
    }

    pub fn tableau(cols: &[&[usize]]) -> Tableau {
        Tableau::new(shape(), cols.iter().map(|c| c.to_vec()).collect()).expect("fixed tableau")
    }

    /// The remnant `U` once the paths from the lower part of column 2 are
    /// removed from the suffix.
    pub fn partial_remnant() -> Remnant {
        let mut u = Remnant::from_columns(N, 2, SUFFIX.iter().map(|c| c.to_vec()).collect());
        for &z in LOWER.iter().rev() {
            ewis_remove(&mut u, 2, z);
        }
        u
    }

    /// The C-set at `(2,row)` for a partial column whose topmost placed
    /// value is `below`.
    pub fn c_at(u: &Remnant, row: usize, below: usize) -> BTreeSet<usize> {
        let key = tableau(&KEY);
        let d = EastData {
            m_u: u.m_value(),
            key_value: key.value(2, row),
            below,
            east: SUFFIX[0][row - 1],
        };
        c_values(row, &d, N, false)
    }
}

fn example(rec: &mut Recorder) -> Result<()> {
    use worked_example::*;
    let shape = shape();
    let pi = perm(&PI);
    let key = tableau(&KEY);
    let filled = tableau(&FILLED);
    let cx = |what: &str| Counterexample::new(format!("example: {what}"), &shape).pi(&pi);

    let made = make_key(&shape, &pi)?;
    rec.check(made == key, || cx("make_key").values(&key, &made));
    let scanned = right_scan(&filled).tableau;
    rec.check(scanned == key, || cx("right_scan").tableau(&filled).values(&key, &scanned));
    let back = key_to_perm(&key)?;
    rec.check(make_key(&shape, &back)? == key, || cx("key_to_perm").values(&pi, &back));

    let u = partial_remnant();
    let u_cols = [u.column(3).to_vec(), u.column(4).to_vec()];
    rec.check(u_cols == [vec![3, 4], vec![6]], || cx("partial remnant").values(&[vec![3, 4], vec![6]], &u_cols));
    let c = c_at(&u, 3, LOWER[0]);
    let want: BTreeSet<usize> = [3, 4, 5].into();
    rec.check(c == want, || cx("C at (2,3)").values(&want, &c));
    for z in c {
        let mut next = u.clone();
        ewis_remove(&mut next, 2, z);
        let c2 = c_at(&next, 2, z);
        let want: BTreeSet<usize> = if z == 5 { (2..=4).collect() } else { BTreeSet::new() };
        rec.check(c2 == want, || cx(&format!("C at (2,2) after z = {z}")).values(&want, &c2));
    }

    let atoms = generate_atom_tableaux(&shape, &pi)?;
    rec.check(atoms.contains(&filled), || cx("generator misses the filled tableau").tableau(&filled));
    Ok(())
}

/// `x_1^3 x_2^7 x_3^4 x_4^9` and the expansions of `ρ_2` and `ρ̄_2` on it.
pub fn operator_example() -> (Polynomial, Polynomial, Polynomial) {
    let head = [3, 7, 4, 9];
    let tail = [[3, 6, 5, 9], [3, 5, 6, 9], [3, 4, 7, 9]];
    let poly = |es: &[[u32; 4]]| {
        Polynomial::from_terms(4, es.iter().map(|e| (e.to_vec(), 1))).expect("small coefficients")
    };
    let mut all = vec![head];
    all.extend(tail);
    (poly(&[head]), poly(&all), poly(&tail))
}

fn operators(rec: &mut Recorder) -> Result<()> {
    let (base, full, bar) = operator_example();
    let empty = Partition::new(vec![0; 4])?;
    let cx = |what: &str| Counterexample::new(format!("operators: {what}"), &empty);
    for (name, got, want) in [
        ("rho_2", base.rho(2)?, &full),
        ("rho_2 by division", base.rho_by_division(2)?, &full),
        ("rho_bar_2", base.rho_bar(2)?, &bar),
    ] {
        rec.check(got == *want, || cx(name).values(want, &got));
    }
    let x1 = Polynomial::var(2, 1);
    let x2 = Polynomial::var(2, 2);
    let sum = x1.add(&x2)?;
    let r = x1.rho(1)?;
    rec.check(r == sum, || cx("rho_1 x_1").values(&sum, &r));
    let rb = x1.rho_bar(1)?;
    rec.check(rb == x2, || cx("rho_bar_1 x_1").values(&x2, &rb));
    Ok(())
}

fn dual_route(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        let n = shape.n();
        for pi in Permutation::all(n) {
            let op = demazure_poly(&shape, &pi)?;
            let tab = weight_sum(n, &generate_demazure_tableaux(&shape, &pi)?)?;
            rec.check(op == tab, || {
                Counterexample::new("dual-route: demazure operator vs generator", &shape).pi(&pi).values(&op, &tab)
            });
        }
        let top = demazure_poly(&shape, &Permutation::longest(n))?;
        let schur = schur_poly(&shape)?;
        rec.check(top == schur && top.is_symmetric(), || {
            Counterexample::new("dual-route: longest element vs Schur sum", &shape)
                .pi(&Permutation::longest(n))
                .values(&schur, &top)
        });
    }
    Ok(())
}

fn atoms(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        let n = shape.n();
        for pi in Permutation::all(n) {
            let generated = generate_atom_tableaux(&shape, &pi)?;
            let oracle = filter_oracle(&shape, &pi, KeyRelation::RightExact)?;
            let op = atom_poly(&shape, &pi)?;
            let gen_poly = weight_sum(n, &generated)?;
            let oracle_poly = weight_sum(n, &oracle)?;
            rec.check(op == gen_poly, || {
                Counterexample::new("atoms: operator vs generator", &shape).pi(&pi).values(&op, &gen_poly)
            });
            let (g, o) = (sorted(generated), sorted(oracle));
            rec.check(g == o, || {
                Counterexample::new("atoms: generator vs filter tableau sets", &shape).pi(&pi).values(&o, &g)
            });
            rec.check(oracle_poly == gen_poly, || {
                Counterexample::new("atoms: filter vs generator", &shape).pi(&pi).values(&oracle_poly, &gen_poly)
            });
        }
    }
    Ok(())
}

fn criteria(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        let n = shape.n();
        let keys: Vec<(Permutation, Tableau)> = Permutation::all(n)
            .into_iter()
            .map(|p| make_key(&shape, &p).map(|k| (p, k)))
            .collect::<Result<_>>()?;
        for t in enumerate(&shape) {
            let crit = Criteria::new(&t);
            let s = crit.right().tableau.clone();
            let m = left_scan(&t)?.tableau;
            for (pi, key) in &keys {
                let expect = [
                    (SetKind::A, s.dominated_by(key)?),
                    (SetKind::B, s.dominated_by(key)?),
                    (SetKind::C, s == *key),
                    (SetKind::F, key.dominated_by(&m)?),
                    (SetKind::G, m == *key),
                ];
                for (kind, direct) in expect {
                    let cellwise = crit.all_cells_pass(kind, key)?;
                    rec.check(cellwise == direct, || {
                        Counterexample::new(format!("criteria: cellwise {kind} vs scan"), &shape)
                            .pi(pi)
                            .tableau(&t)
                            .values(&direct, &cellwise)
                    });
                }
            }
        }
    }
    Ok(())
}

fn scans(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        for t in enumerate(&shape) {
            let s = right_scan(&t).tableau;
            let m = left_scan(&t)?.tableau;
            let cx = |what: &str| Counterexample::new(format!("scans: {what}"), &shape).tableau(&t);
            rec.check(t.dominated_by(&s)?, || cx("T <= S(T)").values(&t, &s));
            rec.check(m.dominated_by(&t)?, || cx("M(T) <= T").values(&t, &m));
            rec.check(s.is_key(), || cx("S(T) is a key").values(&"key", &s));
            rec.check(m.is_key(), || cx("M(T) is a key").values(&"key", &m));
            for (j, i) in shape.cells() {
                let v = remnant_value(&t, j, i)?;
                let want = s.value(j, i);
                rec.check(v == want, || cx(&format!("remnant value at ({j},{i})")).values(&want, &v));
            }
        }
    }
    Ok(())
}

fn decomposition(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        let n = shape.n();
        let parabolic = Permutation::all_parabolic(&shape);
        let mut distinct_keys = BTreeSet::new();
        for pi in Permutation::all(n) {
            distinct_keys.insert(make_key(&shape, &pi)?);
        }
        let count = shape.parabolic_count();
        rec.check(parabolic.len() as u128 == count && distinct_keys.len() as u128 == count, || {
            Counterexample::new("decomposition: |S_n^λ|", &shape).values(&count, &(parabolic.len(), distinct_keys.len()))
        });

        let mut seen = BTreeSet::new();
        let mut total = 0usize;
        for p in &parabolic {
            let atoms = generate_atom_tableaux(&shape, p)?;
            total += atoms.len();
            seen.extend(atoms);
        }
        let all: BTreeSet<Tableau> = enumerate(&shape).collect();
        rec.check(total == all.len() && seen == all, || {
            Counterexample::new("decomposition: atom sets partition T_λ", &shape).values(&all.len(), &(total, seen.len()))
        });

        let atom_polys: Vec<(Permutation, Polynomial)> = parabolic
            .iter()
            .map(|p| atom_poly(&shape, p).map(|a| (p.clone(), a)))
            .collect::<Result<_>>()?;
        for pi in Permutation::all(n) {
            let below = atom_decomposition(&shape, &pi)?;
            let mut sum = Polynomial::zero(n);
            for p in &below {
                let a = &atom_polys.iter().find(|(q, _)| q == p).expect("decomposition stays in S_n^λ").1;
                sum = sum.add(a)?;
            }
            let d = demazure_poly(&shape, &pi)?;
            rec.check(sum == d, || {
                Counterexample::new("decomposition: sum of atoms", &shape).pi(&pi).values(&d, &sum)
            });
            rec.check(d.is_nonnegative(), || {
                Counterexample::new("decomposition: negative coefficient", &shape).pi(&pi).values(&"nonnegative", &d)
            });
        }
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> Result<Polynomial> {
    let terms = rng.gen_range(1..=4);
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let degree = rng.gen_range(0..=8u32);
        let mut e = vec![0u32; n];
        for _ in 0..degree {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = loop {
            let c = rng.gen_range(-5..=5i64);
            if c != 0 {
                break c;
            }
        };
        p.add_term(Monomial::new(e), c)?;
    }
    Ok(p)
}

type Op = fn(&Polynomial, usize) -> Result<Polynomial>;

fn apply_all(p: &Polynomial, op: Op, letters: &[usize]) -> Result<Polynomial> {
    letters.iter().try_fold(p.clone(), |acc, &i| op(&acc, i))
}

fn algebra(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    let ops: [(&str, Op); 2] = [("rho", Polynomial::rho), ("rho_bar", Polynomial::rho_bar)];
    let top = b.n.clamp(2, 4);
    for _ in 0..b.samples {
        let n = rng.gen_range(2..=top);
        let p = random_poly(&mut rng, n)?;
        let empty = Partition::new(vec![0; n])?;
        let cx = |what: String, want: &Polynomial, got: &Polynomial| {
            Counterexample::new(format!("algebra: {what}"), &empty).values(want, got)
        };
        for i in 1..n {
            let fast = p.rho(i)?;
            let slow = p.rho_by_division(i)?;
            rec.check(fast == slow, || cx(format!("string formula vs division, i = {i}, P = {p}"), &slow, &fast));
            let twice = fast.rho(i)?;
            rec.check(twice == fast, || cx(format!("rho_{i}^2 = rho_{i}, P = {p}"), &fast, &twice));
            let bar = p.rho_bar(i)?;
            let bar_twice = bar.rho_bar(i)?;
            let neg = bar.neg()?;
            rec.check(bar_twice == neg, || cx(format!("rho_bar_{i}^2 = -rho_bar_{i}, P = {p}"), &neg, &bar_twice));
            for j in i + 1..n {
                for (name, op) in ops {
                    let (lhs, rhs) = if j == i + 1 {
                        (apply_all(&p, op, &[i, j, i])?, apply_all(&p, op, &[j, i, j])?)
                    } else {
                        (apply_all(&p, op, &[i, j])?, apply_all(&p, op, &[j, i])?)
                    };
                    rec.check(lhs == rhs, || cx(format!("{name} relation for ({i},{j}), P = {p}"), &rhs, &lhs));
                }
            }
        }
    }

    for shape in b.capped(4).shapes() {
        let n = shape.n();
        for pi in Permutation::all(n) {
            let words = pi.all_reduced_words();
            let d0 = demazure_poly_with_word(&shape, &words[0])?;
            let c0 = atom_poly_with_word(&shape, &words[0])?;
            for w in &words[1..] {
                let d = demazure_poly_with_word(&shape, w)?;
                let c = atom_poly_with_word(&shape, w)?;
                let cx = |what: &str| {
                    Counterexample::new(format!("algebra: {what} depends on the word {:?}", w.letters()), &shape).pi(&pi)
                };
                rec.check(d == d0, || cx("demazure").values(&d0, &d));
                rec.check(c == c0, || cx("atom").values(&c0, &c));
            }
        }
    }
    Ok(())
}

fn interval(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.capped(3).shapes() {
        let n = shape.n();
        let perms = Permutation::all(n);
        for sigma in &perms {
            let low = make_key(&shape, sigma)?;
            for pi in &perms {
                let high = make_key(&shape, pi)?;
                for kind in [IntervalKind::Exact, IntervalKind::Bounded] {
                    let scan = interval_tableaux_scan(&shape, sigma, pi, kind)?;
                    let cell = interval_tableaux_cellwise(&shape, sigma, pi, kind)?;
                    let cx = |what: &str| {
                        Counterexample::new(format!("interval ({kind:?}): {what}"), &shape).pi(pi).sigma(sigma)
                    };
                    rec.check(scan == cell, || cx("scan vs cellwise").values(&scan, &cell));
                    if !scan.is_empty() {
                        rec.check(low.dominated_by(&high)?, || cx("nonzero but Y(σ) not below Y(π)").values(&high, &low));
                    }
                }
            }
            let exact_self = interval_tableaux_scan(&shape, sigma, sigma, IntervalKind::Exact)?;
            rec.check(exact_self.contains(&low), || {
                Counterexample::new("interval: Y(σ) missing from its own exact interval", &shape).sigma(sigma).values(&low, &exact_self)
            });
        }
        let everything = weight_sum(n, &interval_tableaux_scan(&shape, &Permutation::identity(n), &Permutation::longest(n), IntervalKind::Bounded)?)?;
        let schur = schur_poly(&shape)?;
        rec.check(everything == schur, || {
            Counterexample::new("interval: full bounded interval vs Schur sum", &shape).values(&schur, &everything)
        });
    }
    Ok(())
}

fn inert(rec: &mut Recorder, b: &Bounds) -> Result<()> {
    for shape in b.shapes() {
        let n = shape.n();
        let wide = shape.with_full_column();
        let all_x = Monomial::new(vec![1; n]);
        for pi in Permutation::all(n) {
            let base = demazure_poly(&shape, &pi)?.mul_monomial(&all_x);
            let op = demazure_poly(&wide, &pi)?;
            let tab = demazure_poly_tableaux(&wide, &pi)?;
            rec.check(op == base, || {
                Counterexample::new("inert: operator route", &shape).pi(&pi).values(&base, &op)
            });
            rec.check(tab == base, || {
                Counterexample::new("inert: tableau route", &shape).pi(&pi).values(&base, &tab)
            });
        }
    }
    Ok(())
}

/// Maps a suite failure to an error for callers that want `?`.
pub fn ensure_passed(report: &SuiteReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "suite {} failed {} of {} checks: {}",
            report.suite,
            report.failures,
            report.checks,
            json!(report.examples.first())
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_bounds_pass_everywhere() {
        for report in run_all(&Bounds { samples: 16, ..Bounds::new(3, 3) }).unwrap() {
            assert!(report.passed(), "{report}: {:?}", report.examples.first());
        }
    }

    #[test]
    fn failures_are_counted_and_capped() {
        let mut rec = Recorder::new(Suite::Scans);
        let shape = Partition::new(vec![1]).unwrap();
        for _ in 0..KEPT_EXAMPLES + 5 {
            rec.check(false, || Counterexample::new("x", &shape));
        }
        let r = rec.finish(Instant::now());
        assert_eq!(r.failures as usize, KEPT_EXAMPLES + 5);
        assert_eq!(r.examples.len(), KEPT_EXAMPLES);
        assert!(!r.passed());
    }
}
