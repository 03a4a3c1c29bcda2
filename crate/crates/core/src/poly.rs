//! Sparse polynomials in `x_1, …, x_n` with exact integer coefficients, and
//! the operators `s_i`, `ρ_i` and `ρ̄_i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = i64;

/// Exponent vector of length `n`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// of `x_1`, then `x_2`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The single variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    fn swapped(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial as a sparse map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

/// One entry of the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: Coeff,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::from_monomial(Monomial::one(n))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::term(m, 1)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut p = Polynomial::zero(m.n());
        if c != 0 {
            p.terms.insert(m, c);
        }
        p
    }

    /// `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        Polynomial::from_monomial(Monomial::var(n, i))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Coeff)>,
    {
        let mut p = Polynomial::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in {} variables",
                    e.len(),
                    n
                )));
            }
            p.add_term(Monomial(e), c)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in decreasing graded-lex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Coeff)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, Coeff)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Polynomial> {
        self.scale(-1)
    }

    pub fn scale(&self, k: Coeff) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, &c)| (t.mul(m), c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b), ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Exact division. Reduces by the graded-lex leading term of `divisor`;
    /// any term that cannot be reduced is a nonzero remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (lead, lead_c) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c),
            None => return Err(Error::NonzeroRemainder),
        };
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(self.n);
        while let Some((m, c)) = rem.leading_term() {
            let q_mon = m.div(&lead).ok_or(Error::NonzeroRemainder)?;
            if c % lead_c != 0 {
                return Err(Error::NonzeroRemainder);
            }
            let q = Polynomial::term(q_mon.clone(), c / lead_c);
            rem = rem.sub(&divisor.mul(&q)?)?;
            quotient.add_term(q_mon, c / lead_c)?;
        }
        Ok(quotient)
    }

    /// `s_i.P`: interchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        Ok(Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, &c)| (m.swapped(i), c)).collect(),
        })
    }

    /// `ρ_i = (x_i − x_{i+1})^{−1} ∘ (1 − s_i) ∘ x_i`, evaluated by exact
    /// polynomial division.
    pub fn rho_by_division(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        let raised = self.mul_monomial(&Monomial::var(self.n, i));
        let numerator = raised.sub(&raised.swap_vars(i)?)?;
        let divisor = Polynomial::var(self.n, i).sub(&Polynomial::var(self.n, i + 1))?;
        numerator.div_exact(&divisor)
    }

    /// `ρ_i` term by term: `x_i^a x_{i+1}^b` becomes the string connecting
    /// it to `x_i^b x_{i+1}^a` when `a ≥ b`, vanishes when `b = a + 1`, and
    /// becomes the negated inner string when `b > a + 1`.
    ///
    /// Debug builds cross-check every call against [`Self::rho_by_division`].
    pub fn rho(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.n);
        for (m, c) in self.terms() {
            let a = m.0[i - 1];
            let b = m.0[i];
            let mut put = |hi: u32, lo: u32, sign: Coeff| -> Result<()> {
                let mut e = m.0.clone();
                e[i - 1] = hi;
                e[i] = lo;
                out.add_term(Monomial(e), c.checked_mul(sign).ok_or(Error::Overflow)?)
            };
            if a >= b {
                for s in 0..=(a - b) {
                    put(a - s, b + s, 1)?;
                }
            } else {
                for s in 0..(b - a).saturating_sub(1) {
                    put(a + 1 + s, b - 1 - s, -1)?;
                }
            }
        }
        debug_assert_eq!(Ok(&out), self.rho_by_division(i).as_ref());
        Ok(out)
    }

    /// `ρ̄_i = ρ_i − 1`.
    pub fn rho_bar(&self, i: usize) -> Result<Polynomial> {
        self.rho(i)?.sub(self)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.swap_vars(i).as_ref() == Ok(self))
    }

    /// `true` if every coefficient is positive.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            Err(Error::IndexOutOfRange {
                index: i,
                max: self.n.saturating_sub(1),
            })
        } else {
            Ok(())
        }
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson {
                exponents: m.0.clone(),
                coefficient: c,
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[TermJson]) -> Result<Polynomial> {
        Polynomial::from_terms(n, terms.iter().map(|t| (t.exponents.clone(), t.coefficient)))
    }
}

impl fmt::Display for Polynomial {
    /// `c * x1^a1 … xn^an` terms joined by ` + ` / ` - `, leading term
    /// first; zero exponents are omitted and unit exponents printed bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
            let mag = c.unsigned_abs();
            match (mag, vars.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{}", vars.join(" "))?,
                _ => write!(f, "{} * {}", mag, vars.join(" "))?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}
