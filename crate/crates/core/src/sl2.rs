//! `sl2` acting on `W ≅ V_{n-1} ⊗ V_{n-2} ⊗ ... ⊗ V_0`.
//!
//! `V_k` is realized on polynomials of degree `<= k` in one variable with
//! basis `1, x, ..., x^k`:
//!
//! ```text
//! F x^j = j x^{j-1}        H x^j = (2j - k) x^j
//! E x^j = (k - j) x^{j+1}  J x^j = (-1)^j x^{k-j}
//! ```
//!
//! Matrices act on column vectors, so column `j` is the image of `x^j`.
//! The monomial `x_1^{a_1} ... x_n^{a_n}` of `W` is the pure tensor
//! `x^{a_1} ⊗ ... ⊗ x^{a_n}`; `W` is ordered degree by degree, each degree
//! in [`WeightBasis`] order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::permutations::max_length;
use crate::polynomials::ExponentVector;
use crate::schubert::WeightBasis;
use crate::stanley::level_differences;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Element {
    F,
    H,
    E,
    /// The group element `[[0, 1], [-1, 0]]`; acts multiplicatively on tensors.
    J,
}

impl fmt::Display for Sl2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sl2Element::F => "F",
            Sl2Element::H => "H",
            Sl2Element::E => "E",
            Sl2Element::J => "J",
        };
        f.write_str(s)
    }
}

/// The action of one element on `V_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepOperator {
    pub k: usize,
    pub which: Sl2Element,
    pub matrix: IntMatrix,
}

pub fn rep_operator(k: usize, which: Sl2Element) -> RepOperator {
    let mut m = IntMatrix::zeros(k + 1, k + 1);
    for j in 0..=k {
        match which {
            Sl2Element::F if j > 0 => m.set(j - 1, j, j),
            Sl2Element::H => m.set(j, j, 2 * j as i64 - k as i64),
            Sl2Element::E if j < k => m.set(j + 1, j, k - j),
            Sl2Element::J => m.set(k - j, j, if j % 2 == 0 { 1 } else { -1 }),
            _ => {}
        }
    }
    RepOperator { k, which, matrix: m }
}

/// Ordered monomial basis of all of `W`.
#[derive(Clone, Debug)]
pub struct StaircaseBasis {
    n: usize,
    blocks: Vec<WeightBasis>,
    offsets: Vec<usize>,
}

impl StaircaseBasis {
    pub fn new(n: usize) -> Result<Self> {
        let blocks = (0..=max_length(n))
            .map(|ell| WeightBasis::new(n, ell))
            .collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.len();
        }
        Ok(Self { n, blocks, offsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.offsets.last().copied().unwrap_or(0) + self.blocks.last().map_or(0, WeightBasis::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block(&self, ell: usize) -> &WeightBasis {
        &self.blocks[ell]
    }

    pub fn offset(&self, ell: usize) -> usize {
        self.offsets[ell]
    }

    pub fn index_of(&self, e: &ExponentVector) -> Option<usize> {
        let ell = e.degree() as usize;
        let block = self.blocks.get(ell)?;
        Some(self.offsets[ell] + block.index_of(e)?)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &ExponentVector> {
        self.blocks.iter().flat_map(|b| b.monomials().iter())
    }
}

/// Factor-wise matrices `σ_{n-1}, ..., σ_0` (or `ρ` for `J`).
struct FactorOperators {
    which: Sl2Element,
    factors: Vec<IntMatrix>,
}

impl FactorOperators {
    fn new(n: usize, which: Sl2Element) -> Self {
        Self { which, factors: (0..n).map(|p| rep_operator(n - 1 - p, which).matrix).collect() }
    }

    /// Image of the pure tensor `x^{a_1} ⊗ ... ⊗ x^{a_n}`.
    fn image(&self, a: &ExponentVector) -> Vec<(ExponentVector, BigInt)> {
        let a = a.as_slice();
        if self.which == Sl2Element::J {
            // ρ_W(J) = ρ_{n-1} ⊗ ... ⊗ ρ_0
            let mut acc = vec![(Vec::with_capacity(a.len()), BigInt::one())];
            for (p, &ap) in a.iter().enumerate() {
                let col = self.factors[p].column(ap as usize);
                let mut next = Vec::new();
                for (e, c) in &acc {
                    for (i, d) in col.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                        let mut e = e.clone();
                        e.push(i as u32);
                        next.push((e, c * d));
                    }
                }
                acc = next;
            }
            return acc.into_iter().map(|(e, c)| (ExponentVector(e), c)).collect();
        }
        // σ_W(X) = sum_p Id ⊗ ... ⊗ σ_{n-p}(X) ⊗ ... ⊗ Id
        let mut out = Vec::new();
        for (p, &ap) in a.iter().enumerate() {
            for (i, d) in self.factors[p].column(ap as usize).into_iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let mut e = a.to_vec();
                e[p] = i as u32;
                out.push((ExponentVector(e), d));
            }
        }
        out
    }
}

/// An operator on all of `W` in the [`StaircaseBasis`] order.
#[derive(Clone, Debug)]
pub struct TensorOperator {
    pub n: usize,
    pub which: Sl2Element,
    pub matrix: IntMatrix,
}

/// Full `n! x n!` matrices are only materialized up to this degree.
pub const MAX_FULL_TENSOR_DEGREE: usize = 6;

pub fn tensor_operator(n: usize, which: Sl2Element) -> Result<TensorOperator> {
    if n > MAX_FULL_TENSOR_DEGREE {
        return Err(Error::TooLarge { n, max: MAX_FULL_TENSOR_DEGREE, what: "full tensor operator" });
    }
    let basis = StaircaseBasis::new(n)?;
    let ops = FactorOperators::new(n, which);
    let mut m = IntMatrix::zeros(basis.len(), basis.len());
    for (col, a) in basis.monomials().enumerate() {
        for (e, c) in ops.image(a) {
            let row = basis.index_of(&e).expect("sl2 action preserves W");
            *m.get_mut(row, col) += c;
        }
    }
    Ok(TensorOperator { n, which, matrix: m })
}

/// `σ_W(F)`.
pub fn tensor_f(n: usize) -> Result<TensorOperator> {
    tensor_operator(n, Sl2Element::F)
}

/// `ρ_W(J)`.
pub fn tensor_j(n: usize) -> Result<TensorOperator> {
    tensor_operator(n, Sl2Element::J)
}

/// Degree of the target block when `which` is applied to `W_ℓ`.
pub fn target_degree(n: usize, which: Sl2Element, ell: usize) -> Option<usize> {
    let top = max_length(n);
    match which {
        Sl2Element::F => ell.checked_sub(1),
        Sl2Element::H => Some(ell),
        Sl2Element::E => (ell < top).then_some(ell + 1),
        Sl2Element::J => top.checked_sub(ell),
    }
}

/// The block `W_ℓ -> W_{target}` of `which`; valid for any `n`. Returns a
/// matrix with zero rows when the target block does not exist.
pub fn tensor_block(n: usize, which: Sl2Element, ell: usize) -> Result<IntMatrix> {
    let source = WeightBasis::new(n, ell)?;
    let Some(t) = target_degree(n, which, ell) else {
        return Ok(IntMatrix::zeros(0, source.len()));
    };
    let target = WeightBasis::new(n, t)?;
    let ops = FactorOperators::new(n, which);
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for (col, a) in source.monomials().iter().enumerate() {
        for (e, c) in ops.image(a) {
            let row = target.index_of(&e).expect("weight bookkeeping");
            *m.get_mut(row, col) += c;
        }
    }
    Ok(m)
}

/// `σ_W(F)^{C(n,2)-2ℓ} ρ_W(J)` restricted to `W_ℓ`, built from blocks.
pub fn lowering_after_j(n: usize, ell: usize) -> Result<IntMatrix> {
    let top = max_length(n);
    if 2 * ell > top {
        return Err(Error::LevelOutOfRange { n, ell, min: 0, max: top / 2 });
    }
    let mut acc = tensor_block(n, Sl2Element::J, ell)?;
    for d in (ell + 1..=top - ell).rev() {
        acc = tensor_block(n, Sl2Element::F, d)?.mul(&acc)?;
    }
    Ok(acc)
}

/// `(k, m_k)` with `W ≅ ⊕_k V_{C(n,2)-2k}^{m_k}`.
pub fn multiplicities(n: usize) -> Result<Vec<(usize, u128)>> {
    Ok(level_differences(n)?.into_iter().enumerate().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub highest_weight: usize,
    pub multiplicity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub n: usize,
    pub decomposition: Vec<Component>,
    pub dim_check: bool,
}

/// Decomposition of `W` with the check `sum_k m_k (C(n,2) - 2k + 1) = n!`.
pub fn multiplicity_report(n: usize) -> Result<MultiplicityReport> {
    let top = max_length(n);
    let mult = multiplicities(n)?;
    let dim: u128 = mult.iter().map(|&(k, m)| m * (top - 2 * k + 1) as u128).sum();
    let factorial: u128 = (1..=n as u128).product();
    Ok(MultiplicityReport {
        n,
        decomposition: mult
            .into_iter()
            .map(|(k, m)| Component { highest_weight: top - 2 * k, multiplicity: m.to_string() })
            .collect(),
        dim_check: dim == factorial,
    })
}

/// Coefficient of `x^{ℓ-k}` in `σ(F)^{C(n,2)-2ℓ} ρ(J) x^{ℓ-k}` inside
/// `V_{C(n,2)-2k}`, computed by applying the matrices.
pub fn irreducible_scalar(n: usize, ell: usize, k: usize) -> Result<BigInt> {
    let top = max_length(n);
    if k > ell || 2 * ell > top {
        return Err(Error::BlockIndex { n, ell, k });
    }
    let dim = top - 2 * k;
    let f = rep_operator(dim, Sl2Element::F).matrix;
    let j = rep_operator(dim, Sl2Element::J).matrix;
    let mut v = vec![BigInt::zero(); dim + 1];
    v[ell - k] = BigInt::one();
    v = j.mul_vec(&v)?;
    for _ in 0..top - 2 * ell {
        v = f.mul_vec(&v)?;
    }
    Ok(v.swap_remove(ell - k))
}
