//! Sparse multivariate polynomials over the integers.
//!
//! Terms live in a `BTreeMap` keyed by [`ExponentVector`], whose ordering is
//! pure lexicographic with `x_n > x_{n-1} > ... > x_1`. Iteration in
//! descending key order is the canonical term order used for printing, and
//! the last key is the leading term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exponents `(a_1, ..., a_n)` of the monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `0 <= a_j <= n - j` for every `j`.
    pub fn in_staircase(&self) -> bool {
        let n = self.n();
        self.0.iter().enumerate().all(|(j, &a)| a as usize <= n - 1 - j)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// An element of `Z[x_1, ..., x_n]`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

/// One term of the structured rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        Self::monomial(ExponentVector::zero(n), c)
    }

    pub fn monomial(exponents: impl Into<ExponentVector>, coeff: impl Into<BigInt>) -> Self {
        let exponents = exponents.into();
        let mut p = Self::zero(exponents.n());
        p.add_term(exponents, coeff.into());
        p
    }

    /// The variable `x_j`, 1-based.
    pub fn var(n: usize, j: usize) -> Result<Self> {
        check_var(n, j)?;
        let mut e = vec![0; n];
        e[j - 1] = 1;
        Ok(Self::monomial(e, 1))
    }

    /// Builds a polynomial from possibly repeated terms; like terms are summed.
    pub fn from_terms<I, E, C>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVector>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            let e = e.into();
            if e.n() != n {
                return Err(Error::RingMismatch { left: n, right: e.n() });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &ExponentVector) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Total degree of the highest-degree term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// True for zero and for polynomials whose terms all share a degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(ExponentVector::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: &BigInt, other: &Self) -> Result<()> {
        self.check_ring(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (e, d) in &other.terms {
            self.add_term(e.clone(), c * d);
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), c * d)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<u32> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                out.add_term(ExponentVector(e), c * d);
            }
        }
        Ok(out)
    }

    /// `s_i . f`: exchange `x_i` and `x_{i+1}`.
    pub fn swap_action(&self, i: usize) -> Result<Self> {
        check_adjacent(self.n, i)?;
        Ok(Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.0.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// Newton divided difference `N_i f = (f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// Each monomial with `p = a_i`, `q = a_{i+1}` contributes the
    /// telescoping quotient `sum_{t=0}^{p-q-1} x_i^{q+t} x_{i+1}^{p-1-t}`
    /// (negated with the roles swapped when `p < q`, nothing when `p = q`).
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        check_adjacent(self.n, i)?;
        let (lo, hi) = (i - 1, i);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let (p, q) = (e.0[lo], e.0[hi]);
            let (small, big, coeff) = match p.cmp(&q) {
                Ordering::Equal => continue,
                Ordering::Greater => (q, p, c.clone()),
                Ordering::Less => (p, q, -c),
            };
            for t in 0..big - small {
                let mut m = e.clone();
                m.0[lo] = small + t;
                m.0[hi] = big - 1 - t;
                out.add_term(m, coeff.clone());
            }
        }
        Ok(out)
    }

    /// `∂f/∂x_j`, 1-based.
    pub fn partial_derivative(&self, j: usize) -> Result<Self> {
        check_var(self.n, j)?;
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e.0[j - 1];
            if a == 0 {
                continue;
            }
            let mut m = e.clone();
            m.0[j - 1] = a - 1;
            out.add_term(m, c * a);
        }
        Ok(out)
    }

    /// `∇f = sum_j ∂f/∂x_j`.
    pub fn nabla(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            for (j, &a) in e.0.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut m = e.clone();
                m.0[j] = a - 1;
                out.add_term(m, c * a);
            }
        }
        out
    }

    /// `∇^k f`.
    pub fn nabla_pow(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |f, _| f.nabla())
    }

    /// `f(1, ..., 1)`, the sum of the coefficients.
    pub fn evaluate_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Leading term under pure lex with `x_n` largest.
    pub fn leading_term(&self) -> Result<(&ExponentVector, &BigInt)> {
        self.terms.last_key_value().ok_or(Error::ZeroPolynomial)
    }

    pub fn to_structured(&self) -> Vec<TermRecord> {
        self.terms()
            .map(|(e, c)| TermRecord { exponents: e.0.clone(), coeff: c.to_string() })
            .collect()
    }
}

fn check_adjacent(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: n.saturating_sub(1) });
    }
    Ok(())
}

fn check_var(n: usize, j: usize) -> Result<()> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, min: 1, max: n });
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// `0`, or terms like `2*x1*x2 - x1^2` in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| if a == 1 { format!("x{}", j + 1) } else { format!("x{}^{a}", j + 1) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[n={}]({self})", self.n)
    }
}
