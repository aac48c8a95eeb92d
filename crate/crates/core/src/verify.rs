//! Verification sweeps. Each returns one [`Check`] per witness (a
//! permutation, a level, a seed sample, ...); sweeps over independent
//! witnesses run under an [`Execution`] and report in input order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::IntMatrix;
use crate::permutations::{max_length, Permutation};
use crate::polynomials::{ExponentVector, Poly};
use crate::schubert::{j_involution, SchubertTable, WeightBasis};
use crate::sl2::{
    irreducible_scalar, lowering_after_j, multiplicities, multiplicity_report, rep_operator,
    tensor_block, tensor_operator, Sl2Element, StaircaseBasis, MAX_FULL_TENSOR_DEGREE,
};
use crate::stanley::{
    level_indices, m_matrix, m_matrix_via_nabla, m_tilde, rising_product, stanley_rhs,
    verify_stanley_with,
};

/// Default seed for every randomized check.
pub const DEFAULT_SEED: u64 = 0x5eed_2018;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub witness: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, witness: impl fmt::Display, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), witness: witness.to_string(), passed, detail: detail.into() }
    }

    fn from_result(name: &str, witness: impl fmt::Display, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(name, witness, passed, detail),
            Err(e) => Self::new(name, witness, false, format!("error: {e}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    #[serde(rename = "prop1")]
    NablaExpansion,
    Macdonald,
    Basis,
    #[serde(rename = "lemma2")]
    Commutation,
    Sl2,
    Stanley,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] =
        [Suite::NablaExpansion, Suite::Macdonald, Suite::Basis, Suite::Commutation, Suite::Sl2, Suite::Stanley];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NablaExpansion => "prop1",
            Suite::Macdonald => "macdonald",
            Suite::Basis => "basis",
            Suite::Commutation => "lemma2",
            Suite::Sl2 => "sl2",
            Suite::Stanley => "stanley",
            Suite::All => "all",
        }
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
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Knobs shared by the sweeps.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub exec: Execution,
    /// Random polynomials per `(n, i)` for the commutation check.
    pub commutation_samples: usize,
    /// Random permutations checked when the full Macdonald sweep is too large.
    pub macdonald_random: usize,
    /// Largest `n` for which Macdonald is checked on all of `S_n`.
    pub macdonald_full_max: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            exec: Execution::default(),
            commutation_samples: 100,
            macdonald_random: 20,
            macdonald_full_max: 5,
        }
    }
}

/// `∇S_w = sum_{k in Des_R(w)} k S_{w s_k}` for every `w`.
pub fn nabla_descent_expansion(table: &SchubertTable, exec: Execution) -> Vec<Check> {
    let perms: Vec<&Permutation> = table.permutations().collect();
    exec.map(&perms, |w| {
        Check::from_result("prop1", w, (|| {
            let lhs = table.get(w).expect("table covers S_n").nabla();
            let mut rhs = Poly::zero(table.n());
            for (v, k) in table.nabla_expansion(w)? {
                rhs.add_scaled(&BigInt::from(k), table.get(&v).expect("table covers S_n"))?;
            }
            Ok((lhs == rhs, format!("∇S = {lhs}")))
        })())
    })
}

/// `sum_{a in R(w)} a_1...a_k = k! S_w(1,...,1)`.
pub fn macdonald(table: &SchubertTable, perms: &[Permutation], exec: Execution) -> Vec<Check> {
    exec.map(perms, |w| {
        Check::from_result("macdonald", w, table.macdonald_check(w).map(|(words, eval)| {
            (words == eval, format!("word sum {words}, k!·S_w(1..1) {eval}"))
        }))
    })
}

/// The permutations the Macdonald sweep covers: all of `S_n` up to
/// `full_max`, otherwise `w0` plus `count` seeded random permutations.
pub fn macdonald_witnesses(n: usize, full_max: usize, count: usize, seed: u64) -> Vec<Permutation> {
    if n <= full_max {
        return Permutation::all(n).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Permutation::longest(n)];
    out.extend((0..count).map(|_| random_permutation(n, &mut rng)));
    out
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffle of 1..=n")
}

/// `∇^{l(w)} S_w` equals the weighted reduced-word sum.
pub fn nabla_power(table: &SchubertTable, exec: Execution) -> Vec<Check> {
    let perms: Vec<&Permutation> = table.permutations().collect();
    exec.map(&perms, |w| {
        let f = table.get(w).expect("table covers S_n").nabla_pow(w.length());
        let expected = Poly::constant(table.n(), BigInt::from(w.reduced_word_product_sum()));
        Check::new("nabla-power", w, f == expected, format!("∇^k S_w = {f}"))
    })
}

/// Homogeneity, staircase membership, leading-term bijection and unimodular
/// change of basis, one check per degree.
pub fn basis(table: &SchubertTable, exec: Execution) -> Vec<Check> {
    let n = table.n();
    let ells: Vec<usize> = (0..=max_length(n)).collect();
    exec.map(&ells, |&ell| {
        Check::from_result("basis", format!("ell={ell}"), (|| {
            let wb = WeightBasis::new(n, ell)?;
            let perms = table.level(ell);
            let mut shape_ok = true;
            let mut leads: Vec<ExponentVector> = Vec::with_capacity(perms.len());
            for w in perms {
                let f = table.get(w).expect("table covers S_n");
                shape_ok &= f.is_homogeneous() && f.degree() == Some(ell as u32);
                shape_ok &= f.terms().all(|(e, _)| e.in_staircase());
                leads.push(f.leading_term()?.0.clone());
            }
            leads.sort_by(|a, b| b.cmp(a));
            let bijective = leads.as_slice() == wb.monomials();
            let m = table.change_of_basis(ell)?;
            let det = m.determinant()?;
            let ok = shape_ok && bijective && det.abs().is_one();
            Ok((ok, format!("size {}, det {det}, leading-term bijection {bijective}", wb.len())))
        })())
    })
}

/// A random polynomial in `n` variables of total degree `<= max_degree`.
pub fn random_poly(n: usize, max_degree: u32, max_terms: usize, rng: &mut impl Rng) -> Poly {
    let terms = rng.random_range(0..=max_terms);
    let mut f = Poly::zero(n);
    for _ in 0..terms {
        let mut budget = rng.random_range(0..=max_degree);
        let mut e = vec![0u32; n];
        while budget > 0 {
            e[rng.random_range(0..n)] += 1;
            budget -= 1;
        }
        let c: i64 = rng.random_range(-20..=20);
        f.add_scaled(&BigInt::from(c), &Poly::monomial(e, 1)).expect("same ring");
    }
    f
}

/// `∇ N_i f = N_i ∇ f` on `samples` seeded random polynomials per `i`.
pub fn nabla_commutation(n: usize, samples: usize, seed: u64, exec: Execution) -> Vec<Check> {
    let indices: Vec<usize> = (1..n).collect();
    exec.map(&indices, |&i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ i as u64);
        let mut failures = Vec::new();
        for s in 0..samples {
            let f = random_poly(n, 6, 8, &mut rng);
            let lhs = f.divided_difference(i).expect("i < n").nabla();
            let rhs = f.nabla().divided_difference(i).expect("i < n");
            if lhs != rhs {
                failures.push(s);
            }
        }
        Check::new(
            "lemma2",
            format!("n={n},i={i}"),
            failures.is_empty(),
            format!("{samples} samples, seed {seed}, failing samples {failures:?}"),
        )
    })
}

fn matrix_check(name: &str, witness: impl fmt::Display, r: Result<bool>) -> Check {
    Check::from_result(name, witness, r.map(|ok| (ok, String::new())))
}

/// `[H,E] = 2E`, `[H,F] = -2F`, `[E,F] = H` for the given matrices.
fn commutators_hold(f: &IntMatrix, h: &IntMatrix, e: &IntMatrix) -> Result<bool> {
    let two = BigInt::from(2);
    Ok(h.commutator(e)? == e.scale(&two)
        && h.commutator(f)? == f.scale(&-two)
        && e.commutator(f)? == *h)
}

/// Matrix of `∇` on `W` in the staircase basis, via polynomial differentiation.
pub fn nabla_matrix(n: usize) -> Result<IntMatrix> {
    let basis = StaircaseBasis::new(n)?;
    let mut m = IntMatrix::zeros(basis.len(), basis.len());
    for (col, e) in basis.monomials().enumerate() {
        for (img, c) in Poly::monomial(e.clone(), 1).nabla().terms() {
            let row = basis.index_of(img).ok_or_else(|| Error::OutsideStaircase {
                n,
                exponents: img.as_slice().to_vec(),
            })?;
            m.set(row, col, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of the polynomial involution `J` on `W` in the staircase basis.
pub fn j_matrix(n: usize) -> Result<IntMatrix> {
    let basis = StaircaseBasis::new(n)?;
    let mut m = IntMatrix::zeros(basis.len(), basis.len());
    for (col, e) in basis.monomials().enumerate() {
        for (img, c) in j_involution(&Poly::monomial(e.clone(), 1), n)?.terms() {
            let row = basis.index_of(img).expect("J preserves W");
            m.set(row, col, c.clone());
        }
    }
    Ok(m)
}

/// Largest `k` for which `V_k` relations are checked.
pub const MAX_IRREP_CHECK: usize = 10;

/// The sl2 machinery: irreducible relations, the tensor action on `W`, the
/// decomposition and the per-irreducible scalars.
pub fn sl2(n: usize, exec: Execution) -> Vec<Check> {
    let mut checks = Vec::new();
    let ks: Vec<usize> = (0..=MAX_IRREP_CHECK).collect();
    checks.extend(exec.map(&ks, |&k| {
        matrix_check("sl2-irrep", format!("V_{k}"), (|| {
            let f = rep_operator(k, Sl2Element::F).matrix;
            let h = rep_operator(k, Sl2Element::H).matrix;
            let e = rep_operator(k, Sl2Element::E).matrix;
            let j = rep_operator(k, Sl2Element::J).matrix;
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            Ok(commutators_hold(&f, &h, &e)? && j.mul(&j)? == IntMatrix::identity(k + 1).scale(&sign))
        })())
    }));

    let top = max_length(n);
    let full = n <= MAX_FULL_TENSOR_DEGREE.min(5);
    if full {
        checks.push(matrix_check("sl2-tensor-commutators", format!("W, n={n}"), (|| {
            let f = tensor_operator(n, Sl2Element::F)?.matrix;
            let h = tensor_operator(n, Sl2Element::H)?.matrix;
            let e = tensor_operator(n, Sl2Element::E)?.matrix;
            commutators_hold(&f, &h, &e)
        })()));
    } else {
        let ells: Vec<usize> = (0..=top).collect();
        checks.extend(exec.map(&ells, |&ell| {
            matrix_check("sl2-tensor-commutators", format!("W_{ell}, n={n}"), block_commutators(n, ell))
        }));
    }
    if n <= MAX_FULL_TENSOR_DEGREE {
        checks.push(matrix_check("sl2-tensor-f-is-nabla", format!("n={n}"), (|| {
            Ok(tensor_operator(n, Sl2Element::F)?.matrix == nabla_matrix(n)?)
        })()));
        checks.push(matrix_check("sl2-tensor-j-is-J", format!("n={n}"), (|| {
            Ok(tensor_operator(n, Sl2Element::J)?.matrix == j_matrix(n)?)
        })()));
    }
    let ells: Vec<usize> = (0..=top).collect();
    checks.extend(exec.map(&ells, |&ell| {
        matrix_check("sl2-weight", format!("W_{ell}, n={n}"), (|| {
            let h = tensor_block(n, Sl2Element::H, ell)?;
            let size = h.cols();
            let weight = BigInt::from(2 * ell as i64 - top as i64);
            Ok(h == IntMatrix::identity(size).scale(&weight))
        })())
    }));

    checks.push(Check::from_result("sl2-dimensions", format!("n={n}"), multiplicity_report(n).map(|r| {
        let parts: Vec<String> =
            r.decomposition.iter().map(|c| format!("V_{}^{}", c.highest_weight, c.multiplicity)).collect();
        (r.dim_check, parts.join(" + "))
    })));

    let halves: Vec<usize> = (0..=top / 2).collect();
    checks.extend(exec.map(&halves, |&ell| {
        Check::from_result("sl2-scalars", format!("ell={ell}, n={n}"), scalar_product_check(n, ell))
    }));
    checks
}

fn block_commutators(n: usize, ell: usize) -> Result<bool> {
    let top = max_length(n);
    let two = BigInt::from(2);
    let block = |w, l| tensor_block(n, w, l);
    let h = |l| block(Sl2Element::H, l);
    let size = WeightBasis::new(n, ell)?.len();
    let mut ok = true;
    if ell < top {
        // [H,E] on W_ell lands in W_{ell+1}
        let e = block(Sl2Element::E, ell)?;
        ok &= h(ell + 1)?.mul(&e)?.sub(&e.mul(&h(ell)?)?)? == e.scale(&two);
    }
    if ell > 0 {
        let f = block(Sl2Element::F, ell)?;
        ok &= h(ell - 1)?.mul(&f)?.sub(&f.mul(&h(ell)?)?)? == f.scale(&-two);
    }
    // [E,F] on W_ell stays in W_ell
    let mut ef = IntMatrix::zeros(size, size);
    if ell > 0 {
        ef = ef.add(&block(Sl2Element::E, ell - 1)?.mul(&block(Sl2Element::F, ell)?)?)?;
    }
    if ell < top {
        ef = ef.sub(&block(Sl2Element::F, ell + 1)?.mul(&block(Sl2Element::E, ell)?)?)?;
    }
    Ok(ok && ef == h(ell)?)
}

/// For one level: each `irreducible_scalar` has magnitude
/// `(C(n,2)-ℓ-k)!/(ℓ-k)!` and sign `(-1)^{ℓ-k}`, and their product with
/// multiplicities equals the closed form.
fn scalar_product_check(n: usize, ell: usize) -> Result<(bool, String)> {
    let top = max_length(n);
    let mut ok = true;
    let mut product = BigInt::one();
    for (k, m) in multiplicities(n)?.into_iter().take(ell + 1) {
        let s = irreducible_scalar(n, ell, k)?;
        let magnitude = BigInt::from(rising_product(ell - k + 1, top - ell - k));
        let expected = if (ell - k).is_multiple_of(2) { magnitude } else { -magnitude };
        ok &= s == expected;
        product *= s.abs().pow(u32::try_from(m).expect("multiplicity fits in u32"));
    }
    let rhs = BigInt::from(stanley_rhs(n, ell)?);
    ok &= product == rhs;
    let mut detail = format!("product {product}, closed form {rhs}");
    if top <= 10 {
        // determinant of ∇^{C(n,2)-2ℓ}∘J on the W_ℓ block
        let det = lowering_after_j(n, ell)?.determinant()?;
        ok &= det.abs() == rhs;
        detail.push_str(&format!(", block det {det}"));
    }
    Ok((ok, detail))
}

/// `|det M̃^(ℓ)|` against the closed form for every level `ℓ <= C(n,2)/2`.
pub fn stanley(n: usize, exec: Execution) -> Vec<Check> {
    let ells: Vec<usize> = (0..=max_length(n) / 2).collect();
    exec.map(&ells, |&ell| {
        Check::from_result("stanley", format!("ell={ell}"), verify_stanley_with(n, ell, Execution::Sequential).map(|r| {
            (r.equal, format!("det_abs {}, rhs {}, sign {:+}", r.det_abs, r.rhs, r.sign))
        }))
    })
}

/// `M_ℓ` built combinatorially equals the matrix of `∇` in the Schubert basis.
pub fn m_matrix_equivalence(table: &SchubertTable, exec: Execution) -> Vec<Check> {
    let ells: Vec<usize> = (1..=max_length(table.n())).collect();
    exec.map(&ells, |&ell| {
        matrix_check("m-matrix", format!("ell={ell}"), (|| {
            Ok(m_matrix(table.n(), ell)? == m_matrix_via_nabla(table, ell)?)
        })())
    })
}

/// `M̃^(ℓ)[u,v] != 0` iff `u <= v` in right weak order.
pub fn weak_order_support(n: usize, exec: Execution) -> Vec<Check> {
    let levels = level_indices(n);
    let ells: Vec<usize> = (0..=max_length(n) / 2).collect();
    exec.map(&ells, |&ell| {
        matrix_check("weak-order-support", format!("ell={ell}"), (|| {
            let mt = m_tilde(n, ell)?;
            let (rows, cols) = (&levels[ell], &levels[max_length(n) - ell]);
            for (i, u) in rows.perms().iter().enumerate() {
                for (j, v) in cols.perms().iter().enumerate() {
                    if !mt.get(i, j).is_zero() != u.right_weak_le(v)? || mt.get(i, j).is_negative() {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })())
    })
}

/// Results of one suite at one `n`.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs one named suite (for `All`, every suite in turn).
pub fn run_suite(suite: Suite, n: usize, opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        let mut out = Vec::new();
        for s in Suite::INDIVIDUAL {
            out.extend(run_suite(s, n, opts)?);
        }
        return Ok(out);
    }
    let exec = opts.exec;
    let needs_table = matches!(suite, Suite::NablaExpansion | Suite::Macdonald | Suite::Basis | Suite::Stanley);
    let table = if needs_table { Some(SchubertTable::build_with(n, exec)?) } else { None };
    let table = || table.as_ref().expect("built above");
    let checks = match suite {
        Suite::NablaExpansion => nabla_descent_expansion(table(), exec),
        Suite::Macdonald => {
            let perms =
                macdonald_witnesses(n, opts.macdonald_full_max, opts.macdonald_random, opts.seed);
            macdonald(table(), &perms, exec)
        }
        Suite::Basis => basis(table(), exec),
        Suite::Commutation => nabla_commutation(n, opts.commutation_samples, opts.seed, exec),
        Suite::Sl2 => sl2(n, exec),
        Suite::Stanley => {
            let mut c = stanley(n, exec);
            c.extend(m_matrix_equivalence(table(), exec));
            if n <= 5 {
                c.extend(weak_order_support(n, exec));
            }
            c
        }
        Suite::All => unreachable!(),
    };
    Ok(vec![SuiteReport { suite, n, checks }])
}
