//! Elements of the symmetric group in one-line notation.
//!
//! Composition is `(u * v)(i) = u(v(i))`. Under this convention
//! `w.mul_simple_right(k)` (that is `w * s_k`) swaps the entries in
//! positions `k, k+1`, while `w.mul_simple_left(k)` (`s_k * w`) swaps the
//! values `k, k+1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in 1-based one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u8>,
}

/// Largest supported degree; one-line entries are stored as `u8`.
pub const MAX_DEGREE: usize = 255;

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let input = || {
            values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if n == 0 {
            return Err(Error::PermutationParse {
                input: String::new(),
                reason: "empty permutation".into(),
            });
        }
        if n > MAX_DEGREE {
            return Err(Error::TooLarge { n, max: MAX_DEGREE, what: "permutation degree" });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::PermutationParse {
                    input: input(),
                    reason: format!("value {v} is outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::PermutationParse {
                    input: input(),
                    reason: format!("value {v} appears more than once"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { values: values.into_iter().map(|v| v as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n));
        Self { values: (1..=n as u8).collect() }
    }

    /// The longest element `w0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&n));
        Self { values: (1..=n as u8).rev().collect() }
    }

    /// The simple transposition `s_k` in `S_n`, `1 <= k < n`.
    pub fn simple(n: usize, k: usize) -> Result<Self> {
        check_simple(n, k)?;
        let mut w = Self::identity(n);
        w.values.swap(k - 1, k);
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `u * v`, i.e. `i -> u(v(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Self {
            values: other.values.iter().map(|&v| self.values[v as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0u8; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v as usize - 1] = (i + 1) as u8;
        }
        Self { values }
    }

    /// `w * s_k`: swap positions `k` and `k+1`.
    pub fn mul_simple_right(&self, k: usize) -> Result<Self> {
        check_simple(self.n(), k)?;
        let mut values = self.values.clone();
        values.swap(k - 1, k);
        Ok(Self { values })
    }

    /// `s_k * w`: swap the values `k` and `k+1`.
    pub fn mul_simple_left(&self, k: usize) -> Result<Self> {
        check_simple(self.n(), k)?;
        let (a, b) = (k as u8, k as u8 + 1);
        Ok(Self {
            values: self
                .values
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        })
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
            .sum()
    }

    /// Lehmer code: entry `j` counts `k > j` with `w(k) < w(j)`.
    pub fn code(&self) -> Vec<u32> {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u32)
            .collect()
    }

    /// Inverse of [`Permutation::code`] on staircase vectors `0 <= a_j <= n - j`.
    pub fn from_code(code: &[u32]) -> Result<Self> {
        let n = code.len();
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut values = Vec::with_capacity(n);
        for (j, &c) in code.iter().enumerate() {
            let c = c as usize;
            if c > n - 1 - j {
                return Err(Error::OutsideStaircase { n, exponents: code.to_vec() });
            }
            values.push(remaining.remove(c));
        }
        Self::new(values)
    }

    /// `{k : w(k) > w(k+1)}`; exactly the `k` with `length(w s_k) = length(w) - 1`.
    pub fn right_descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `{k : length(s_k w) < length(w)}`, i.e. `k+1` occurs to the left of `k`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// All reduced words, in lexicographic order.
    ///
    /// Enumerated by peeling left descents depth-first; every leaf of the
    /// recursion is a distinct word, so the work is proportional to the
    /// output size.
    pub fn reduced_words(&self) -> ReducedWords {
        let length = self.length();
        let mut out = ReducedWords { length, letters: Vec::new(), count: 0 };
        let mut prefix = Vec::with_capacity(length);
        peel_left(self.clone(), &mut prefix, &mut out);
        out
    }

    /// `|R(w)|`, memoized over the weak order below `w`.
    pub fn reduced_word_count(&self) -> u128 {
        let mut memo = HashMap::new();
        weighted_word_sum(self, &mut memo, |_| 1)
    }

    /// `sum over a in R(w) of a_1 a_2 ... a_k`, memoized over the weak order.
    pub fn reduced_word_product_sum(&self) -> u128 {
        let mut memo = HashMap::new();
        weighted_word_sum(self, &mut memo, |k| k as u128)
    }

    /// `self <= other` in right weak order (`other = self * s_{a_1} ... s_{a_r}`
    /// with lengths adding up).
    pub fn right_weak_le(&self, other: &Self) -> Result<bool> {
        let between = self.inverse().compose(other)?;
        Ok(self.length() + between.length() == other.length())
    }

    /// All of `S_n` in ascending lexicographic order of one-line notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Self::identity(n)) }
    }

    /// `S_n(ell)` in ascending lexicographic order.
    pub fn of_length(n: usize, ell: usize) -> Vec<Self> {
        Self::all(n).filter(|w| w.length() == ell).collect()
    }

    fn next_lex(&self) -> Option<Self> {
        let mut v = self.values.clone();
        let i = v.windows(2).rposition(|p| p[0] < p[1])?;
        let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Self { values: v })
    }
}

fn check_simple(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, min: 1, max: n.saturating_sub(1) });
    }
    Ok(())
}

fn peel_left(w: Permutation, prefix: &mut Vec<u8>, out: &mut ReducedWords) {
    let descents = w.left_descents();
    if descents.is_empty() {
        out.letters.extend_from_slice(prefix);
        out.count += 1;
        return;
    }
    for k in descents {
        prefix.push(k as u8);
        peel_left(w.mul_simple_left(k).expect("descent index in range"), prefix, out);
        prefix.pop();
    }
}

fn weighted_word_sum(
    w: &Permutation,
    memo: &mut HashMap<Permutation, u128>,
    weight: impl Fn(usize) -> u128 + Copy,
) -> u128 {
    if w.is_identity() {
        return 1;
    }
    if let Some(&v) = memo.get(w) {
        return v;
    }
    // The last letter of a reduced word of w is a right descent.
    let total = w
        .right_descents()
        .into_iter()
        .map(|k| weight(k) * weighted_word_sum(&w.mul_simple_right(k).unwrap(), memo, weight))
        .sum();
    memo.insert(w.clone(), total);
    total
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line notation, e.g. `2,3,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2,3,1"`, or the compact digit string `"231"` for `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: String| Error::PermutationParse { input: s.to_string(), reason };
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>().map_err(|_| bad(format!("invalid entry {tok:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) => Ok(d as usize),
                    None => Err(bad(format!("invalid entry {c:?}"))),
                })
                .collect::<Result<_>>()?
        };
        if values.is_empty() {
            return Err(bad("empty permutation".into()));
        }
        Permutation::new(values).map_err(|e| match e {
            Error::PermutationParse { reason, .. } => bad(reason),
            other => other,
        })
    }
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }
}

/// The reduced words of one permutation, stored flat (all words share the
/// same length).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWords {
    length: usize,
    letters: Vec<u8>,
    count: usize,
}

impl ReducedWords {
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Common length of every word.
    pub fn word_length(&self) -> usize {
        self.length
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        let len = self.length;
        (0..self.count).map(move |i| &self.letters[i * len..(i + 1) * len])
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() == self.length && self.iter().any(|w| w == word)
    }

    pub fn to_vecs(&self) -> Vec<Vec<u8>> {
        self.iter().map(<[u8]>::to_vec).collect()
    }
}

/// `|S_n(ell)|` for every `ell`, the Mahonian numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCounts {
    n: usize,
    counts: Vec<u128>,
}

/// `n!` must fit in a `u128`.
pub const MAX_LEVEL_COUNT_DEGREE: usize = 34;

impl LevelCounts {
    /// Coefficients of the q-factorial `prod_{i=1}^{n} (1 + q + ... + q^{i-1})`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { index: 0, min: 1, max: MAX_LEVEL_COUNT_DEGREE });
        }
        if n > MAX_LEVEL_COUNT_DEGREE {
            return Err(Error::TooLarge { n, max: MAX_LEVEL_COUNT_DEGREE, what: "level counts" });
        }
        let mut counts = vec![1u128];
        for i in 2..=n {
            let mut next = vec![0u128; counts.len() + i - 1];
            for (d, &c) in counts.iter().enumerate() {
                for slot in &mut next[d..d + i] {
                    *slot += c;
                }
            }
            counts = next;
        }
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// `|S_n(ell)|`, zero outside `0..=C(n,2)` (including negative levels).
    pub fn get(&self, ell: isize) -> u128 {
        usize::try_from(ell).ok().and_then(|l| self.counts.get(l)).copied().unwrap_or(0)
    }
}

/// `level_counts(n)`.
pub fn level_counts(n: usize) -> Result<LevelCounts> {
    LevelCounts::new(n)
}

/// `C(n, 2)`, the length of the longest element of `S_n`.
pub fn max_length(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn composition_convention() {
        let w0 = p("321");
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(w0.compose(&s1).unwrap(), p("231"));
        assert_eq!(s1.compose(&w0).unwrap(), p("312"));
        assert_eq!(w0.mul_simple_right(1).unwrap(), p("231"));
        assert_eq!(w0.mul_simple_left(1).unwrap(), p("312"));
        let w = p("2413");
        assert_eq!(w.compose(&Permutation::identity(4)).unwrap(), w);
        assert!(matches!(
            w.compose(&w0),
            Err(Error::DegreeMismatch { left: 4, right: 3 })
        ));
    }

    #[test]
    fn lengths_codes_descents() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("2413").length(), 3);
        assert_eq!(Permutation::identity(4).code(), vec![0, 0, 0, 0]);
        assert_eq!(p("321").code(), vec![2, 1, 0]);
        assert_eq!(p("231").code(), vec![1, 1, 0]);
        assert!(Permutation::identity(4).right_descents().is_empty());
        assert_eq!(p("321").right_descents(), vec![1, 2]);
        assert_eq!(p("231").right_descents(), vec![2]);
        assert_eq!(p("231").left_descents(), vec![1]);
    }

    #[test]
    fn reduced_words_small() {
        let id = Permutation::identity(3).reduced_words();
        assert_eq!(id.len(), 1);
        assert_eq!(id.to_vecs(), vec![Vec::<u8>::new()]);
        assert_eq!(p("321").reduced_words().to_vecs(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        assert_eq!(Permutation::longest(4).reduced_words().len(), 16);
        assert_eq!(Permutation::longest(4).reduced_word_count(), 16);
        assert_eq!(p("321").reduced_word_product_sum(), 6);
    }

    #[test]
    fn level_counts_small() {
        assert_eq!(level_counts(1).unwrap().counts(), &[1]);
        assert_eq!(level_counts(3).unwrap().counts(), &[1, 2, 2, 1]);
        assert_eq!(level_counts(4).unwrap().counts(), &[1, 3, 5, 6, 5, 3, 1]);
        let lc = level_counts(4).unwrap();
        assert_eq!(lc.get(-1), 0);
        assert_eq!(lc.get(7), 0);
        assert!(level_counts(0).is_err());
        assert!(level_counts(35).is_err());
        let total: u128 = level_counts(34).unwrap().counts().iter().sum();
        assert_eq!(total, (1..=34u128).product());
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2,3,1"), p("231"));
        assert_eq!(p(" 10,9,8,7,6,5,4,3,2,1 "), Permutation::longest(10));
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        for (bad, needle) in [("1,1,2", "value 1"), ("1,4,2", "value 4"), ("12a", "'a'"), ("", "empty"), ("0,1", "value 0")] {
            let err = bad.parse::<Permutation>().unwrap_err().to_string();
            assert!(err.contains(needle), "{bad}: {err}");
        }
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = Permutation::all(3).map(|w| w.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::of_length(3, 2), vec![p("231"), p("312")]);
    }

    #[test]
    fn code_round_trip_and_errors() {
        for w in Permutation::all(5) {
            assert_eq!(Permutation::from_code(&w.code()).unwrap(), w);
        }
        assert!(Permutation::from_code(&[0, 2, 0]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
        assert!(Permutation::simple(3, 0).is_err());
    }

    #[test]
    fn weak_order() {
        let id = Permutation::identity(3);
        assert!(id.right_weak_le(&p("321")).unwrap());
        assert!(p("213").right_weak_le(&p("231")).unwrap());
        assert!(!p("213").right_weak_le(&p("312")).unwrap());
    }
}
