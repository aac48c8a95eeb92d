//! Stanley's level-to-level matrices `M_ℓ` on the weak order and the
//! determinant of their product between symmetric levels.
//!
//! Rows and columns are indexed by [`LevelIndex`], i.e. ascending lex order
//! of one-line notation. Matrices act on column vectors: `M_ℓ` has rows
//! `S_n(ℓ-1)` and columns `S_n(ℓ)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::IntMatrix;
use crate::permutations::{level_counts, max_length, Permutation};
use crate::schubert::SchubertTable;

/// `S_n(ℓ)` in ascending lex order with reverse lookup.
#[derive(Clone, Debug)]
pub struct LevelIndex {
    n: usize,
    ell: usize,
    perms: Vec<Permutation>,
    position: HashMap<Permutation, usize>,
}

impl LevelIndex {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        let top = max_length(n);
        if n == 0 || ell > top {
            return Err(Error::LevelOutOfRange { n, ell, min: 0, max: top });
        }
        Ok(Self::from_sorted(n, ell, Permutation::of_length(n, ell)))
    }

    fn from_sorted(n: usize, ell: usize, perms: Vec<Permutation>) -> Self {
        let position = perms.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Self { n, ell, perms, position }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn position(&self, w: &Permutation) -> Option<usize> {
        self.position.get(w).copied()
    }
}

/// All level indices of `S_n`, built with one pass over the group.
pub fn level_indices(n: usize) -> Vec<LevelIndex> {
    let mut levels = vec![Vec::new(); max_length(n) + 1];
    for w in Permutation::all(n) {
        levels[w.length()].push(w);
    }
    levels
        .into_iter()
        .enumerate()
        .map(|(ell, perms)| LevelIndex::from_sorted(n, ell, perms))
        .collect()
}

fn check_level(n: usize, ell: usize) -> Result<()> {
    let top = max_length(n);
    if n == 0 || ell == 0 || ell > top {
        return Err(Error::LevelOutOfRange { n, ell, min: 1, max: top });
    }
    Ok(())
}

fn check_lower_half(n: usize, ell: usize) -> Result<()> {
    let top = max_length(n);
    if n == 0 || 2 * ell > top {
        return Err(Error::LevelOutOfRange { n, ell, min: 0, max: top / 2 });
    }
    Ok(())
}

fn m_matrix_between(rows: &LevelIndex, cols: &LevelIndex) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (i, u) in rows.perms().iter().enumerate() {
        for k in 1..rows.n() {
            let v = u.mul_simple_right(k).expect("k < n");
            if let Some(j) = cols.position(&v) {
                m.set(i, j, k);
            }
        }
    }
    m
}

/// `M_ℓ[u, v] = k` if `v = u s_k`, else 0.
pub fn m_matrix(n: usize, ell: usize) -> Result<IntMatrix> {
    check_level(n, ell)?;
    Ok(m_matrix_between(&LevelIndex::new(n, ell - 1)?, &LevelIndex::new(n, ell)?))
}

/// The matrix of `∇ : W_ℓ -> W_{ℓ-1}` in the Schubert basis: column `v`
/// holds the Schubert-basis coefficients of `∇S_v`.
pub fn m_matrix_via_nabla(table: &SchubertTable, ell: usize) -> Result<IntMatrix> {
    let n = table.n();
    check_level(n, ell)?;
    let rows = LevelIndex::new(n, ell - 1)?;
    let cols = table.level(ell);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, v) in cols.iter().enumerate() {
        let image = table.get(v).expect("table covers S_n").nabla();
        for (u, c) in table.expand(&image)? {
            let i = rows.position(&u).ok_or_else(|| {
                Error::NotInSchubertSpan(format!("∇S_{v} has a term S_{u} off level {}", ell - 1))
            })?;
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// `M̃^(ℓ) = M_{ℓ+1} M_{ℓ+2} ... M_{C(n,2)-ℓ}`, square of size `|S_n(ℓ)|`.
pub fn m_tilde(n: usize, ell: usize) -> Result<IntMatrix> {
    m_tilde_with(n, ell, Execution::default())
}

pub fn m_tilde_with(n: usize, ell: usize, exec: Execution) -> Result<IntMatrix> {
    check_lower_half(n, ell)?;
    let levels = level_indices(n);
    let top = max_length(n);
    let mut acc = IntMatrix::identity(levels[ell].len());
    for j in ell + 1..=top - ell {
        acc = acc.mul_with(&m_matrix_between(&levels[j - 1], &levels[j]), exec)?;
    }
    Ok(acc)
}

/// `m_k = |S_n(k)| - |S_n(k-1)|` for `0 <= k <= C(n,2)/2`.
pub fn level_differences(n: usize) -> Result<Vec<u128>> {
    let counts = level_counts(n)?;
    (0..=max_length(n) / 2)
        .map(|k| {
            let (cur, prev) = (counts.get(k as isize), counts.get(k as isize - 1));
            // unimodality of the Mahonian numbers
            assert!(cur >= prev, "Mahonian numbers decrease at level {k} for n = {n}");
            Ok(cur - prev)
        })
        .collect()
}

/// `(a)(a+1)...(b)` as a big integer; 1 on an empty range.
pub fn rising_product(a: usize, b: usize) -> BigUint {
    (a..=b).map(BigUint::from).product()
}

/// `prod_{k=0}^{ℓ} ((ℓ-k+1)(ℓ-k+2)...(C(n,2)-ℓ-k))^{m_k}`.
pub fn stanley_rhs(n: usize, ell: usize) -> Result<BigUint> {
    check_lower_half(n, ell)?;
    let top = max_length(n);
    let m = level_differences(n)?;
    let mut out = BigUint::one();
    for (k, &mk) in m.iter().enumerate().take(ell + 1) {
        let factor = rising_product(ell - k + 1, top - ell - k);
        let exponent = u32::try_from(mk).expect("multiplicity fits in u32");
        out *= factor.pow(exponent);
    }
    Ok(out)
}

/// Outcome of comparing `|det M̃^(ℓ)|` with the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyReport {
    pub n: usize,
    pub ell: usize,
    pub det_abs: BigUint,
    pub rhs: BigUint,
    pub equal: bool,
    /// Sign of the determinant under lex row/column order; 0 if singular.
    pub sign: i8,
}

/// Structured form with big integers as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyRecord {
    pub n: usize,
    pub ell: usize,
    pub det_abs: String,
    pub rhs: String,
    pub equal: bool,
    pub sign: i8,
}

impl StanleyReport {
    pub fn to_record(&self) -> StanleyRecord {
        StanleyRecord {
            n: self.n,
            ell: self.ell,
            det_abs: self.det_abs.to_string(),
            rhs: self.rhs.to_string(),
            equal: self.equal,
            sign: self.sign,
        }
    }
}

pub fn verify_stanley(n: usize, ell: usize) -> Result<StanleyReport> {
    verify_stanley_with(n, ell, Execution::default())
}

pub fn verify_stanley_with(n: usize, ell: usize, exec: Execution) -> Result<StanleyReport> {
    let det = m_tilde_with(n, ell, exec)?.determinant()?;
    let rhs = stanley_rhs(n, ell)?;
    let sign = if det.is_zero() {
        0
    } else if det.is_negative() {
        -1
    } else {
        1
    };
    let det_abs = det.abs().to_biguint().expect("absolute value");
    Ok(StanleyReport { n, ell, equal: det_abs == rhs, det_abs, rhs, sign })
}

/// `|det M̃^(ℓ)|` vs the closed form for every `0 <= ℓ <= C(n,2)/2`; levels
/// are independent and run under `exec`.
pub fn stanley_sweep(n: usize, exec: Execution) -> Result<Vec<StanleyReport>> {
    let ells: Vec<usize> = (0..=max_length(n) / 2).collect();
    // parallelism is spent across levels; each product runs sequentially
    exec.map(&ells, |&ell| verify_stanley_with(n, ell, Execution::Sequential))
        .into_iter()
        .collect()
}
