//! Key polynomials (Demazure characters), atoms, Schur polynomials and
//! interval polynomials, each computable through divided-difference
//! operators or by summing weights of tableaux.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::atomgen::{generate_atom_tableaux, generate_demazure_tableaux};
use crate::criteria::{Criteria, KeyRelation, SetKind};
use crate::error::Result;
use crate::poly::{Monomial, Polynomial};
use crate::scanning::{left_scan, right_scan};
use crate::shapes::{check_rank, make_key, Partition, Permutation, ReducedWord};
use crate::tableau::{enumerate, Tableau};

/// `x^λ`.
pub fn initial_monomial(shape: &Partition) -> Polynomial {
    Polynomial::from_monomial(Monomial::new(
        shape.parts().iter().map(|&p| p as u32).collect(),
    ))
}

/// Applies `op` for each letter of `word`, first letter first, to `x^λ`.
fn apply_word<F>(shape: &Partition, word: &ReducedWord, op: F) -> Result<Polynomial>
where
    F: Fn(&Polynomial, usize) -> Result<Polynomial>,
{
    word.letters()
        .iter()
        .try_fold(initial_monomial(shape), |p, &i| op(&p, i))
}

/// `ρ_{i_t}⋯ρ_{i_1}.x^λ` for the given word.
pub fn demazure_poly_with_word(shape: &Partition, word: &ReducedWord) -> Result<Polynomial> {
    apply_word(shape, word, Polynomial::rho)
}

/// `ρ̄_{i_t}⋯ρ̄_{i_1}.x^λ` for the given word.
pub fn atom_poly_with_word(shape: &Partition, word: &ReducedWord) -> Result<Polynomial> {
    apply_word(shape, word, Polynomial::rho_bar)
}

/// `d_λ(π;x)` by divided differences.
pub fn demazure_poly(shape: &Partition, pi: &Permutation) -> Result<Polynomial> {
    check_rank(shape.n(), pi.n())?;
    demazure_poly_with_word(shape, &pi.reduced_word())
}

/// `c_λ(π;x)` by divided differences.
///
/// The word used is a reduced word of the projection of `π` onto `S_n^λ`,
/// so the result depends on `π` only through `Y_λ(π)`. Applying `ρ̄` along
/// a word for `π` itself gives zero whenever a letter of the word fixes the
/// current monomial, e.g. `ρ̄_2.x_1 = 0` for `λ = (1,0,0)`, `π = (1,3,2)`.
pub fn atom_poly(shape: &Partition, pi: &Permutation) -> Result<Polynomial> {
    check_rank(shape.n(), pi.n())?;
    atom_poly_with_word(shape, &pi.project_parabolic(shape)?.reduced_word())
}

/// `s_λ(x) = d_λ(τ_0;x)`.
pub fn schur_poly(shape: &Partition) -> Result<Polynomial> {
    demazure_poly(shape, &Permutation::longest(shape.n()))
}

/// `Σ x^T` over a set of tableaux.
pub fn weight_sum<'a, I>(n: usize, tableaux: I) -> Result<Polynomial>
where
    I: IntoIterator<Item = &'a Tableau>,
{
    let mut p = Polynomial::zero(n);
    for t in tableaux {
        p.add_term(t.weight(), 1)?;
    }
    Ok(p)
}

/// `d_λ(π;x)` as the weight sum over generated Demazure tableaux.
pub fn demazure_poly_tableaux(shape: &Partition, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &generate_demazure_tableaux(shape, pi)?)
}

/// `c_λ(π;x)` as the weight sum over generated atom tableaux.
pub fn atom_poly_tableaux(shape: &Partition, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &generate_atom_tableaux(shape, pi)?)
}

/// `Σ x^T` over all of `T_λ`.
pub fn schur_poly_tableaux(shape: &Partition) -> Result<Polynomial> {
    weight_sum(shape.n(), &enumerate(shape).collect::<Vec<_>>())
}

/// The `π′ ∈ S_n^λ` with `Y_λ(π′) ≤ Y_λ(π)`, in lexicographic order.
pub fn atom_decomposition(shape: &Partition, pi: &Permutation) -> Result<Vec<Permutation>> {
    let top = make_key(shape, pi)?;
    let mut out = Vec::new();
    for p in Permutation::all_parabolic(shape) {
        if make_key(shape, &p)?.dominated_by(&top)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Selects how a polynomial is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Operator,
    Tableaux,
    Both,
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "operator" => Ok(Route::Operator),
            "tableaux" => Ok(Route::Tableaux),
            "both" => Ok(Route::Both),
            _ => Err(format!("unknown route {s:?}; expected operator, tableaux or both")),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Operator => "operator",
            Route::Tableaux => "tableaux",
            Route::Both => "both",
        })
    }
}

/// Two routes produced different polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteMismatch {
    pub expected: Polynomial,
    pub actual: Polynomial,
    /// A monomial whose coefficients differ.
    pub witness: Option<Monomial>,
}

/// Runs `first` and/or `second` per `route`. With [`Route::Both`] the two
/// results must agree; the outer `Err` carries library errors and the inner
/// one a disagreement.
pub fn by_route<F, G>(
    route: Route,
    first: F,
    second: G,
) -> Result<std::result::Result<Polynomial, RouteMismatch>>
where
    F: FnOnce() -> Result<Polynomial>,
    G: FnOnce() -> Result<Polynomial>,
{
    match route {
        Route::Operator => Ok(Ok(first()?)),
        Route::Tableaux => Ok(Ok(second()?)),
        Route::Both => {
            let a = first()?;
            let b = second()?;
            if a == b {
                Ok(Ok(a))
            } else {
                let witness = a
                    .terms()
                    .chain(b.terms())
                    .map(|(m, _)| m)
                    .find(|m| a.coefficient(m) != b.coefficient(m))
                    .cloned();
                Ok(Err(RouteMismatch {
                    expected: a,
                    actual: b,
                    witness,
                }))
            }
        }
    }
}

/// Which interval polynomial is wanted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// `L(T) = Y_λ(σ)` and `R(T) = Y_λ(π)`.
    Exact,
    /// `Y_λ(σ) ≤ L(T)` and `R(T) ≤ Y_λ(π)`.
    Bounded,
}

/// Tableaux of the interval, decided by running both scans.
pub fn interval_tableaux_scan(
    shape: &Partition,
    sigma: &Permutation,
    pi: &Permutation,
    kind: IntervalKind,
) -> Result<Vec<Tableau>> {
    let low = make_key(shape, sigma)?;
    let high = make_key(shape, pi)?;
    let mut out = Vec::new();
    for t in enumerate(shape) {
        let s = right_scan(&t).tableau;
        let m = left_scan(&t)?.tableau;
        let keep = match kind {
            IntervalKind::Exact => m == low && s == high,
            IntervalKind::Bounded => low.dominated_by(&m)? && s.dominated_by(&high)?,
        };
        if keep {
            out.push(t);
        }
    }
    Ok(out)
}

/// Tableaux of the interval, decided cellwise by `G ∩ C` (exact) or
/// `F ∩ B` (bounded).
pub fn interval_tableaux_cellwise(
    shape: &Partition,
    sigma: &Permutation,
    pi: &Permutation,
    kind: IntervalKind,
) -> Result<Vec<Tableau>> {
    let low = make_key(shape, sigma)?;
    let high = make_key(shape, pi)?;
    let (left_kind, right_kind) = match kind {
        IntervalKind::Exact => (SetKind::G, SetKind::C),
        IntervalKind::Bounded => (SetKind::F, SetKind::B),
    };
    let mut out = Vec::new();
    'tableaux: for t in enumerate(shape) {
        let crit = Criteria::new(&t);
        for (l, k) in shape.cells() {
            let v = t.value(l, k);
            if !crit.set(left_kind, &low, l, k)?.contains(v)
                || !crit.set(right_kind, &high, l, k)?.contains(v)
            {
                continue 'tableaux;
            }
        }
        out.push(t);
    }
    Ok(out)
}

pub fn interval_poly_exact(shape: &Partition, sigma: &Permutation, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &interval_tableaux_scan(shape, sigma, pi, IntervalKind::Exact)?)
}

pub fn interval_poly_bounded(shape: &Partition, sigma: &Permutation, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &interval_tableaux_scan(shape, sigma, pi, IntervalKind::Bounded)?)
}

pub fn interval_poly_exact_cellwise(shape: &Partition, sigma: &Permutation, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &interval_tableaux_cellwise(shape, sigma, pi, IntervalKind::Exact)?)
}

pub fn interval_poly_bounded_cellwise(shape: &Partition, sigma: &Permutation, pi: &Permutation) -> Result<Polynomial> {
    weight_sum(shape.n(), &interval_tableaux_cellwise(shape, sigma, pi, IntervalKind::Bounded)?)
}

/// Checks `d_{λ+(1^n)}(π;x) = x_1⋯x_n · d_λ(π;x)`.
pub fn column_inert_check(shape: &Partition, pi: &Permutation) -> Result<bool> {
    let n = shape.n();
    let wide = demazure_poly(&shape.with_full_column(), pi)?;
    let base = demazure_poly(shape, pi)?;
    Ok(wide == base.mul_monomial(&Monomial::new(vec![1; n])))
}

/// `Σ x^T` over the tableaux satisfying `rel` against `Y_λ(π)`, found by
/// filtering all of `T_λ`.
pub fn relation_poly(shape: &Partition, pi: &Permutation, rel: KeyRelation) -> Result<Polynomial> {
    weight_sum(shape.n(), &crate::atomgen::filter_oracle(shape, pi, rel)?)
}
