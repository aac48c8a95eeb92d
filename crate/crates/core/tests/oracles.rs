//! Cross-checks against independent brute-force oracles.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::stanley::{m_tilde, stanley_rhs};
use schubert_core::{level_counts, max_length, IntMatrix, Permutation, Poly, SchubertTable};

fn simple_product(n: usize, word: &[usize]) -> Permutation {
    word.iter().fold(Permutation::identity(n), |acc, &k| {
        acc.compose(&Permutation::simple(n, k).unwrap()).unwrap()
    })
}

/// Every generator sequence of the right length that multiplies to `w`.
fn brute_force_reduced_words(w: &Permutation) -> BTreeSet<Vec<u8>> {
    let n = w.n();
    let len = w.length();
    let mut out = BTreeSet::new();
    let total = (n - 1).pow(len as u32);
    for mut idx in 0..total {
        let mut word = Vec::with_capacity(len);
        for _ in 0..len {
            word.push(idx % (n - 1) + 1);
            idx /= n - 1;
        }
        if simple_product(n, &word) == *w {
            out.insert(word.iter().map(|&k| k as u8).collect());
        }
    }
    out
}

#[test]
fn reduced_words_match_brute_force() {
    for n in 1..=4 {
        for w in Permutation::all(n) {
            let ours: BTreeSet<Vec<u8>> = w.reduced_words().to_vecs().into_iter().collect();
            assert_eq!(ours, brute_force_reduced_words(&w), "w = {w}");
            assert_eq!(w.reduced_word_count() as usize, ours.len());
        }
    }
    assert_eq!(brute_force_reduced_words(&"321".parse().unwrap()).len(), 2);
    assert_eq!(brute_force_reduced_words(&Permutation::longest(4)).len(), 16);
}

#[test]
fn reduced_words_multiply_back() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let words = w.reduced_words();
            assert!(!words.is_empty());
            for word in words.iter() {
                assert_eq!(word.len(), w.length());
                let word: Vec<usize> = word.iter().map(|&k| k as usize).collect();
                assert_eq!(simple_product(n, &word), w);
            }
        }
    }
}

#[test]
fn longest_word_count_n6() {
    // Stanley's count for w0 in S_6: 15! / (1^5 3^4 5^3 7^2 9)
    let w0 = Permutation::longest(6);
    assert_eq!(w0.reduced_words().len(), 292_864);
    assert_eq!(w0.reduced_word_count(), 292_864);
}

#[test]
fn level_counts_match_enumeration() {
    for n in 1..=7 {
        let mut counts = vec![0u128; max_length(n) + 1];
        for w in Permutation::all(n) {
            counts[w.length()] += 1;
        }
        assert_eq!(level_counts(n).unwrap().counts(), counts.as_slice(), "n = {n}");
    }
}

#[test]
fn code_is_a_bijection_onto_staircase_vectors() {
    for n in 1..=6 {
        let codes: BTreeSet<Vec<u32>> = Permutation::all(n).map(|w| w.code()).collect();
        let factorial: usize = (1..=n).product();
        assert_eq!(codes.len(), factorial);
        for c in &codes {
            assert!(c.iter().enumerate().all(|(j, &a)| a as usize <= n - 1 - j));
        }
    }
}

fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| {
        // sparse-ish entries exercise the pivot search
        if rng.random_bool(0.3) {
            BigInt::zero()
        } else {
            BigInt::from(rng.random_range(-9i64..=9))
        }
    })
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for size in 0..=6 {
        for _ in 0..40 {
            let m = random_matrix(size, size, &mut rng);
            assert_eq!(m.determinant().unwrap(), cofactor_det(&rows_of(&m)), "{m:?}");
        }
    }
    let fixed = IntMatrix::from_rows(&[
        vec![3, -1, 4, 1, -5],
        vec![9, 2, -6, 5, 3],
        vec![-5, 8, 9, -7, 9],
        vec![3, 2, -3, 8, 4],
        vec![6, -2, 6, 4, -3],
    ])
    .unwrap();
    assert_eq!(fixed.determinant().unwrap(), cofactor_det(&rows_of(&fixed)));
}

#[test]
fn mat_mul_matches_naive_triple_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (r, k, c) in [(3, 3, 3), (2, 5, 4), (1, 1, 7), (6, 2, 6)] {
        let a = random_matrix(r, k, &mut rng);
        let b = random_matrix(k, c, &mut rng);
        let naive = IntMatrix::from_fn(r, c, |i, j| (0..k).map(|t| a.get(i, t) * b.get(t, j)).sum());
        assert_eq!(a.mul(&b).unwrap(), naive);
    }
}

#[test]
fn divided_difference_times_denominator_recovers_numerator() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=5 {
        for i in 1..n {
            let xi = Poly::var(n, i).unwrap();
            let xj = Poly::var(n, i + 1).unwrap();
            let denom = xi.sub(&xj).unwrap();
            for _ in 0..30 {
                let f = schubert_core::verify::random_poly(n, 6, 6, &mut rng);
                let q = f.divided_difference(i).unwrap();
                let numer = f.sub(&f.swap_action(i).unwrap()).unwrap();
                assert_eq!(q.mul(&denom).unwrap(), numer);
                for (e, c) in f.terms() {
                    let m = Poly::monomial(e.clone(), c.clone());
                    let dq = m.divided_difference(i).unwrap();
                    if !dq.is_zero() {
                        assert!(dq.is_homogeneous());
                        assert_eq!(dq.degree(), Some(e.degree() - 1));
                    }
                }
            }
        }
    }
}

#[test]
fn degree_two_schubert_polynomials_via_telescoping() {
    // (x1^2 x2 - x2^2 x1)/(x1 - x2) = x1 x2 ; (x1^2 x2 - x1^2 x3)/(x2 - x3) = x1^2
    let t = SchubertTable::build(3).unwrap();
    let got: BTreeSet<String> = t.level(2).iter().map(|w| t.get(w).unwrap().to_string()).collect();
    let want: BTreeSet<String> = ["x1*x2", "x1^2"].into_iter().map(String::from).collect();
    assert_eq!(got, want);
}

/// Weighted chain count from `u` to `v` through covers `x -> x s_k` (weight k).
fn weighted_chains(u: &Permutation, v: &Permutation) -> BigInt {
    if u == v {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for k in 1..u.n() {
        let up = u.mul_simple_right(k).unwrap();
        if up.length() == u.length() + 1 && up.length() <= v.length() {
            total += BigInt::from(k) * weighted_chains(&up, v);
        }
    }
    total
}

#[test]
fn m_tilde_entries_count_weighted_chains() {
    for n in 3..=4 {
        let top = max_length(n);
        for ell in 0..=top / 2 {
            let mt = m_tilde(n, ell).unwrap();
            let rows = Permutation::of_length(n, ell);
            let cols = Permutation::of_length(n, top - ell);
            for (i, u) in rows.iter().enumerate() {
                for (j, v) in cols.iter().enumerate() {
                    assert_eq!(mt.get(i, j), &weighted_chains(u, v), "n={n} ell={ell} {u} -> {v}");
                }
            }
        }
    }
    assert_eq!(m_tilde(3, 0).unwrap().get(0, 0), &BigInt::from(6));
}

#[test]
fn n4_level2_determinant_by_cofactors() {
    let mt = m_tilde(4, 2).unwrap();
    assert_eq!(mt.shape(), (5, 5));
    let det = cofactor_det(&rows_of(&mt));
    assert_eq!(det.magnitude().to_string(), "1728");
    assert_eq!(stanley_rhs(4, 2).unwrap().to_string(), "1728");
}
