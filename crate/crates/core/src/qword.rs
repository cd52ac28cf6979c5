//! Noncommutative words and polynomials in the formal curvature operators
//! `q_2, q_3, ...`.
//!
//! A word is a composition chain: the leftmost letter is the outermost
//! operator, so `[3, 2]` denotes `q_3` applied to `q_2 w`. Letters are the
//! subscripts and are always at least 2. The degree of a word is the sum of
//! its letters; concatenation of words is composition of operators, which
//! makes polynomials in these words a graded noncommutative ring.

use crate::error::Error;
use crate::rational::Rational;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Letters = SmallVec<[u16; 16]>;

/// A composition chain `q_{d1} ∘ q_{d2} ∘ …` with every `d_t >= 2`.
/// The empty word is the identity operator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QWord {
    letters: Letters,
}

impl QWord {
    pub fn identity() -> Self {
        QWord::default()
    }

    /// Panics if any letter is below 2; the subscripts index curvature
    /// operators and start at `q_2`.
    pub fn new(letters: &[u16]) -> Self {
        assert!(
            letters.iter().all(|&d| d >= 2),
            "q-word letters must be >= 2, got {letters:?}"
        );
        QWord {
            letters: SmallVec::from_slice(letters),
        }
    }

    pub fn single(d: u16) -> Self {
        QWord::new(&[d])
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.letters.iter().map(|&d| d as u64).sum()
    }

    /// New word with `d` composed on the outside: `prepend(3, q_2) = q_3 q_2`.
    pub fn prepend(&self, d: u16) -> Self {
        assert!(d >= 2, "q-word letters must be >= 2, got {d}");
        let mut letters = Letters::with_capacity(self.letters.len() + 1);
        letters.push(d);
        letters.extend_from_slice(&self.letters);
        QWord { letters }
    }

    /// Operator composition: `self` acts after (outside) `rhs`.
    pub fn concat(&self, rhs: &QWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        QWord { letters }
    }
}

/// Canonical word order: by degree, then longer words first, then
/// lexicographically on the letters. Within one degree this lists products
/// of small operators before the single large ones, e.g. `q_2^2` before
/// `q_4`.
impl Ord for QWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.letters.len().cmp(&self.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for QWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QWord {
    /// Compact text form with adjacent equal letters collapsed to powers:
    /// `[2,2,4]` prints as `q2^2q4`. The identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (d, count) in run_lengths(&self.letters) {
            write!(f, "q{d}")?;
            if count > 1 {
                write!(f, "^{count}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QWord{:?}", self.letters.as_slice())
    }
}

fn run_lengths(letters: &[u16]) -> impl Iterator<Item = (u16, usize)> + '_ {
    let mut i = 0;
    std::iter::from_fn(move || {
        if i >= letters.len() {
            return None;
        }
        let d = letters[i];
        let start = i;
        while i < letters.len() && letters[i] == d {
            i += 1;
        }
        Some((d, i - start))
    })
}

/// A finitely supported rational combination of q-words, kept in canonical
/// form: no zero coefficients, iteration in the canonical word order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    terms: BTreeMap<QWord, Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    /// The identity operator (empty word with coefficient 1).
    pub fn one() -> Self {
        QPoly::from_term(QWord::identity(), Rational::ONE)
    }

    pub fn from_term(word: QWord, coeff: Rational) -> Self {
        let mut p = QPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn add_term(&mut self, word: QWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &QWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or(Rational::ZERO)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&QWord, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        let mut out = QPoly::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Text form like `7/15 q2^2 + 3/5 q4`; the zero polynomial prints `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
            } else if coeff.is_negative() {
                out.push('-');
            }
            let c = coeff.abs();
            if word.is_identity() {
                out.push_str(&c.to_string());
            } else {
                out.push_str(&format!("{c} {word}"));
            }
        }
        out
    }

    /// LaTeX form like `\frac{7}{15}q_2^2+\frac{3}{5}q_4`; unit coefficients
    /// are suppressed in front of a word.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if coeff.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let c = coeff.abs();
            let show_coeff = !c.is_one() || word.is_identity();
            if show_coeff {
                if c.denom() == 1.into() {
                    out.push_str(&c.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()));
                }
            }
            for (d, count) in run_lengths(word.letters()) {
                out.push_str(&latex_sub("q", d as usize));
                if count > 1 {
                    if count < 10 {
                        out.push_str(&format!("^{count}"));
                    } else {
                        out.push_str(&format!("^{{{count}}}"));
                    }
                }
            }
        }
        out
    }
}

fn latex_sub(base: &str, idx: usize) -> String {
    if idx < 10 {
        format!("{base}_{idx}")
    } else {
        format!("{base}_{{{idx}}}")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        let mut out = QPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

/// Noncommutative product: words concatenate (operator composition).
impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

/// Number of q-words of the given degree, i.e. compositions of `n` into
/// parts `>= 2`, counted by direct enumeration.
pub fn word_count_of_degree(n: u64) -> Result<u128, Error> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { got: n });
    }
    let n = n as usize;
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    for k in 2..=n {
        for d in 2..=k {
            counts[k] = counts[k]
                .checked_add(counts[k - d])
                .expect("composition count overflows u128");
        }
    }
    Ok(counts[n])
}
