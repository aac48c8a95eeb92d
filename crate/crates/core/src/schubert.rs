//! Schubert polynomials and the staircase space `W`.
//!
//! The table is built downward from `S_{w0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}`
//! with `S_{s_k w} = N_k S_w` whenever `s_k w` is shorter than `w` (left
//! multiplication, i.e. swapping the values `k, k+1`). Under this recurrence
//! the leading monomial of `S_w` is `x^{code(w^{-1})}`, see
//! [`SchubertTable::leading_term_convention`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::IntMatrix;
use crate::permutations::{max_length, Permutation};
use crate::polynomials::{ExponentVector, Poly};

/// `S_w` for every `w` in `S_n`.
#[derive(Clone, Debug)]
pub struct SchubertTable {
    n: usize,
    polys: HashMap<Permutation, Poly>,
    /// `levels[l]` is `S_n(l)` in ascending lex order.
    levels: Vec<Vec<Permutation>>,
    leading: HashMap<ExponentVector, Permutation>,
}

/// Which statistic of `w` gives the exponent of the leading monomial of `S_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadingTermConvention {
    Code,
    InverseCode,
    /// Both agree on every `w` (only for `n <= 2`).
    Both,
    Neither,
}

/// `S_w` alone, by climbing from `w` to `w0` through left ascents and then
/// applying the matching divided differences to the staircase monomial.
pub fn schubert_polynomial(w: &Permutation) -> Result<Poly> {
    let n = w.n();
    let mut climb = Vec::with_capacity(max_length(n) - w.length());
    let mut v = w.clone();
    while let Some(k) = (1..n).find(|k| !v.left_descents().contains(k)) {
        v = v.mul_simple_left(k)?;
        climb.push(k);
    }
    let staircase: Vec<u32> = (0..n).map(|j| (n - 1 - j) as u32).collect();
    climb
        .iter()
        .rev()
        .try_fold(Poly::monomial(staircase, 1), |f, &k| f.divided_difference(k))
}

/// Largest `n` the table builder accepts.
pub const MAX_TABLE_DEGREE: usize = 10;

impl SchubertTable {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with(n, Execution::default())
    }

    /// Builds the table level by level; the divided differences inside one
    /// level are independent and run under `exec`. When two descent paths
    /// reach the same permutation the results must agree exactly.
    pub fn build_with(n: usize, exec: Execution) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, min: 1, max: MAX_TABLE_DEGREE });
        }
        if n > MAX_TABLE_DEGREE {
            return Err(Error::TooLarge { n, max: MAX_TABLE_DEGREE, what: "Schubert table" });
        }
        let top = max_length(n);
        let w0 = Permutation::longest(n);
        let staircase: Vec<u32> = (0..n).map(|j| (n - 1 - j) as u32).collect();

        let mut polys = HashMap::new();
        polys.insert(w0.clone(), Poly::monomial(staircase.clone(), 1));
        let mut levels = vec![Vec::new(); top + 1];
        levels[top].push(w0.clone());

        for ell in (1..=top).rev() {
            let current = &levels[ell];
            let produced = exec.map(current, |w| -> Result<Vec<(Permutation, Poly)>> {
                let f = &polys[w];
                w.left_descents()
                    .into_iter()
                    .map(|k| Ok((w.mul_simple_left(k)?, f.divided_difference(k)?)))
                    .collect()
            });
            let mut next: Vec<Permutation> = Vec::new();
            for batch in produced {
                for (v, g) in batch? {
                    match polys.get(&v) {
                        Some(existing) if *existing != g => {
                            return Err(Error::PathDisagreement { perm: v.to_string() });
                        }
                        Some(_) => {}
                        None => {
                            polys.insert(v.clone(), g);
                            next.push(v);
                        }
                    }
                }
            }
            next.sort();
            levels[ell - 1] = next;
        }

        // S_{w0 s_k} = S_{s_{n-k} w0} is the staircase with exponent n-k lowered by one.
        for k in 1..n {
            let mut e = staircase.clone();
            e[n - k - 1] -= 1;
            if polys[&w0.mul_simple_right(k)?] != Poly::monomial(e, 1) {
                return Err(Error::PathDisagreement { perm: w0.mul_simple_right(k)?.to_string() });
            }
        }

        let leading = polys
            .iter()
            .map(|(w, f)| Ok((f.leading_term()?.0.clone(), w.clone())))
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(Self { n, polys, levels, leading })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn get(&self, w: &Permutation) -> Option<&Poly> {
        self.polys.get(w)
    }

    /// `S_n(ell)` in ascending lex order (empty when out of range).
    pub fn level(&self, ell: usize) -> &[Permutation] {
        self.levels.get(ell).map_or(&[], Vec::as_slice)
    }

    /// All permutations ordered by (length, lex).
    pub fn permutations(&self) -> impl Iterator<Item = &Permutation> {
        self.levels.iter().flatten()
    }

    /// `[(w s_k, k) : k a right descent of w]`, the terms of `∇S_w`.
    pub fn nabla_expansion(&self, w: &Permutation) -> Result<Vec<(Permutation, usize)>> {
        w.right_descents().into_iter().map(|k| Ok((w.mul_simple_right(k)?, k))).collect()
    }

    /// Expands `f` in the Schubert basis by repeatedly cancelling leading terms.
    /// Output is sorted by (length, lex).
    pub fn expand(&self, f: &Poly) -> Result<Vec<(Permutation, BigInt)>> {
        if f.n() != self.n {
            return Err(Error::RingMismatch { left: self.n, right: f.n() });
        }
        let mut rest = f.clone();
        let mut out = Vec::new();
        while !rest.is_zero() {
            let (e, c) = rest.leading_term()?;
            let w = self
                .leading
                .get(e)
                .ok_or_else(|| Error::NotInSchubertSpan(format!("no Schubert polynomial leads with {e:?}")))?;
            let s = &self.polys[w];
            let lead = s.leading_term()?.1;
            if !(c % lead).is_zero() {
                return Err(Error::NotInSchubertSpan(format!("leading coefficient {c} not divisible by {lead}")));
            }
            let q = c / lead;
            rest.add_scaled(&-q.clone(), s)?;
            out.push((w.clone(), q));
        }
        out.sort_by(|(a, _), (b, _)| (a.length(), a).cmp(&(b.length(), b)));
        Ok(out)
    }

    /// Checks every `w` against `x^{code(w)}` and `x^{code(w^{-1})}`.
    pub fn leading_term_convention(&self) -> LeadingTermConvention {
        let (mut code, mut inverse) = (true, true);
        for (w, f) in &self.polys {
            let lead = f.leading_term().expect("Schubert polynomials are nonzero").0.as_slice();
            code &= lead == w.code().as_slice();
            inverse &= lead == w.inverse().code().as_slice();
        }
        match (code, inverse) {
            (true, true) => LeadingTermConvention::Both,
            (true, false) => LeadingTermConvention::Code,
            (false, true) => LeadingTermConvention::InverseCode,
            (false, false) => LeadingTermConvention::Neither,
        }
    }

    /// Matrix expressing `{S_w : l(w) = ell}` (rows, lex order) in the
    /// monomial basis of `W_ell` (columns, [`WeightBasis`] order).
    pub fn change_of_basis(&self, ell: usize) -> Result<IntMatrix> {
        let basis = WeightBasis::new(self.n, ell)?;
        let perms = self.level(ell);
        let mut m = IntMatrix::zeros(perms.len(), basis.len());
        for (i, w) in perms.iter().enumerate() {
            for (e, c) in self.polys[w].terms() {
                let j = basis.index_of(e).ok_or_else(|| Error::OutsideStaircase {
                    n: self.n,
                    exponents: e.as_slice().to_vec(),
                })?;
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// `(sum over a in R(w) of a_1...a_k, k! * S_w(1,...,1))`.
    pub fn macdonald_check(&self, w: &Permutation) -> Result<(BigInt, BigInt)> {
        let f = self.polys.get(w).ok_or(Error::DegreeMismatch { left: self.n, right: w.n() })?;
        let words = w.reduced_words();
        let word_sum: BigInt = words
            .iter()
            .map(|a| a.iter().fold(BigInt::one(), |acc, &x| acc * x))
            .sum();
        let factorial: BigInt = (1..=words.word_length()).map(BigInt::from).product();
        Ok((word_sum, factorial * f.evaluate_all_ones()))
    }
}

/// The staircase monomials of degree `ell`, spanning `W_ell`.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    n: usize,
    ell: usize,
    monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
}

impl WeightBasis {
    /// All `a` with `0 <= a_j <= n - j` and `sum a_j = ell`, in descending
    /// lex order with `x_n` largest.
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        let top = max_length(n);
        if n == 0 || ell > top {
            return Err(Error::LevelOutOfRange { n, ell, min: 0, max: top });
        }
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; n];
        fill_staircase(0, ell as u32, &mut cur, &mut monomials);
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Ok(Self { n, ell, monomials, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn index_of(&self, e: &ExponentVector) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coordinates of `f` in this basis; fails if a term is outside `W_ell`.
    pub fn coordinates(&self, f: &Poly) -> Result<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.len()];
        for (e, c) in f.terms() {
            let i = self.index_of(e).ok_or_else(|| Error::OutsideStaircase {
                n: self.n,
                exponents: e.as_slice().to_vec(),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }
}

fn fill_staircase(j: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    let n = cur.len();
    if j == n {
        if remaining == 0 {
            out.push(ExponentVector(cur.clone()));
        }
        return;
    }
    // positions j..n can absorb at most sum_{i>=j} (n-1-i)
    let capacity = ((n - j) * (n - j - 1) / 2) as u32;
    if remaining > capacity {
        return;
    }
    for a in 0..=remaining.min((n - 1 - j) as u32) {
        cur[j] = a;
        fill_staircase(j + 1, remaining - a, cur, out);
    }
    cur[j] = 0;
}

/// `J(prod x_j^{a_j}) = (-1)^{sum a_j} prod x_j^{n-j-a_j}`, extended linearly.
pub fn j_involution(f: &Poly, n: usize) -> Result<Poly> {
    if f.n() != n {
        return Err(Error::RingMismatch { left: n, right: f.n() });
    }
    let mut terms = Vec::with_capacity(f.num_terms());
    for (e, c) in f.terms() {
        if !e.in_staircase() {
            return Err(Error::OutsideStaircase { n, exponents: e.as_slice().to_vec() });
        }
        let complement: Vec<u32> =
            e.as_slice().iter().enumerate().map(|(j, &a)| (n - 1 - j) as u32 - a).collect();
        let c = if e.degree() % 2 == 1 { -c } else { c.clone() };
        terms.push((complement, c));
    }
    Poly::from_terms(n, terms)
}

/// `|det|` of the change-of-basis matrix is one.
pub fn is_unimodular(m: &IntMatrix) -> Result<bool> {
    Ok(m.determinant()?.abs().is_one())
}
