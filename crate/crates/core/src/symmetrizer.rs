//! Covariant symmetrization of the special tensor monomials
//! `v^{⊗i} ⊗ (Q w) ⊗ v^{⊗j}`.
//!
//! The rewriting works modulo the linear congruence generated by the
//! curvature commutation relation: a positional difference
//! `D_p = M_p − M_{p+1}` of neighbouring monomials is congruent to minus a
//! sum of monomials carrying one extra curvature letter and at least two
//! fewer `v` positions. Each round splits every monomial into a fully
//! symmetrized part plus telescoping differences, replaces the differences
//! by their curvature corrections, and repeats on the strictly smaller
//! remainder. The degree-`n` Taylor operator of the double exponential map
//! is the tensor-degree-one part of the symmetrization of `v^{⊗n} ⊗ w`.

use crate::qword::{QPoly, QWord};
use crate::rational::Rational;
use rustc_hash::FxHashMap;
use std::collections::BTreeMap;
use std::fmt;

/// The monomial `v^{⊗left} ⊗ (word · w) ⊗ v^{⊗right}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialMonomial {
    pub left: u32,
    pub word: QWord,
    pub right: u32,
}

impl SpecialMonomial {
    pub fn new(left: u32, word: QWord, right: u32) -> Self {
        SpecialMonomial { left, word, right }
    }

    /// Number of bare `v` positions.
    pub fn positions(&self) -> u32 {
        self.left + self.right
    }

    /// Total homogeneity degree in `v`.
    pub fn v_degree(&self) -> u64 {
        self.positions() as u64 + self.word.degree()
    }
}

impl fmt::Display for SpecialMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{}⊗({} w)⊗v^{}", self.left, self.word, self.right)
    }
}

impl fmt::Debug for SpecialMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational combination of special monomials (zero coefficients pruned).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SpecialPoly {
    terms: BTreeMap<SpecialMonomial, Rational>,
}

impl SpecialPoly {
    pub fn zero() -> Self {
        SpecialPoly::default()
    }

    pub fn from_term(mono: SpecialMonomial, coeff: Rational) -> Self {
        let mut p = SpecialPoly::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn add_term(&mut self, mono: SpecialMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    pub fn add_scaled(&mut self, other: &SpecialPoly, c: &Rational) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpecialMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &SpecialMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or(Rational::ZERO)
    }
}

/// Fully symmetrized terms, keyed by `(vcount, word)`. The pair `(N, Q)`
/// stands for the normalized position average
/// `(1/(N+1)) · Σ_{p=0}^{N} v^{⊗p} ⊗ (Q w) ⊗ v^{⊗N−p}`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymPoly {
    terms: BTreeMap<(u32, QWord), Rational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn add_term(&mut self, vcount: u32, word: QWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((vcount, word)) {
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

    pub fn merge(&mut self, other: &SymPoly) {
        for ((n, w), c) in &other.terms {
            self.add_term(*n, w.clone(), c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, QWord), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, vcount: u32, word: &QWord) -> Rational {
        self.terms
            .get(&(vcount, word.clone()))
            .cloned()
            .unwrap_or(Rational::ZERO)
    }

    /// Coefficient carried by each individual position monomial once the
    /// `1/(N+1)` normalization is expanded.
    pub fn per_position_coeff(&self, vcount: u32, word: &QWord) -> Rational {
        &self.coeff(vcount, word) / &Rational::from_integer(vcount as i64 + 1)
    }

    /// Expand every symmetrized term back into the free span of monomials.
    pub fn expand(&self) -> SpecialPoly {
        let mut out = SpecialPoly::zero();
        for ((vcount, word), coeff) in &self.terms {
            let per_pos = coeff / &Rational::from_integer(*vcount as i64 + 1);
            for p in 0..=*vcount {
                out.add_term(
                    SpecialMonomial::new(p, word.clone(), vcount - p),
                    per_pos.clone(),
                );
            }
        }
        out
    }

    /// The tensor-degree-one component: terms with no bare `v` positions.
    pub fn degree_one_part(&self) -> QPoly {
        let mut out = QPoly::zero();
        for ((vcount, word), coeff) in &self.terms {
            if *vcount == 0 {
                out.add_term(word.clone(), coeff.clone());
            }
        }
        out
    }
}

/// `[p >= i] − (p+1)/(N+1)`, the telescoping weight of the difference
/// `D_p = M_p − M_{p+1}` in the positional split of `M_i`.
fn split_weight(p: u32, i: u32, positions: u32) -> Rational {
    let indicator = if p >= i { 1 } else { 0 };
    Rational::new(
        indicator * (positions as i64 + 1) - (p as i64 + 1),
        positions as i64 + 1,
    )
}

/// Express `coeff · mono` as `coeff · Sym(N, word)` plus telescoping
/// differences: the returned list holds `(p, c_p)` with
/// `c_p = [p >= left] − (p+1)/(N+1)`, so that
/// `coeff·mono = coeff·Sym + Σ_p coeff·c_p·(M_p − M_{p+1})` exactly in the
/// free span of monomials.
pub fn positional_split(
    mono: &SpecialMonomial,
    coeff: &Rational,
) -> (SymPoly, Vec<(u32, Rational)>) {
    let n = mono.positions();
    let mut sym = SymPoly::zero();
    sym.add_term(n, mono.word.clone(), coeff.clone());
    let diffs = (0..n).map(|p| (p, split_weight(p, mono.left, n))).collect();
    (sym, diffs)
}

/// Integer binomial row `C(p, 0..=p)` as exact rationals.
fn binomial_row(p: u32) -> Vec<Rational> {
    let mut row = Vec::with_capacity(p as usize + 1);
    row.push(Rational::ONE);
    for k in 1..=p as i64 {
        let next = &row[k as usize - 1] * &Rational::new(p as i64 - k + 1, k);
        row.push(next);
    }
    row
}

/// The curvature correction attached to the difference `D_p` of monomials
/// with `m` trailing positions:
/// `C(p, m, word) = Σ_{k=0}^{p} Σ_{l=1}^{m} C(p,k) ·
///     v^{⊗ p+l−k−1} ⊗ (q_{k+2} word · w) ⊗ v^{⊗ m−l}`,
/// so that `D_p ≡ −C(p, m, word)` modulo the congruence. For `m = 0` the sum
/// is empty by convention and the result is zero.
pub fn curvature_correction(p: u32, m: u32, word: &QWord) -> SpecialPoly {
    let mut out = SpecialPoly::zero();
    if m == 0 {
        return out;
    }
    let binom = binomial_row(p);
    for k in 0..=p {
        let letter = u16::try_from(k + 2).expect("curvature letter exceeds u16");
        let new_word = word.prepend(letter);
        for l in 1..=m {
            out.add_term(
                SpecialMonomial::new(p + l - k - 1, new_word.clone(), m - l),
                binom[k as usize].clone(),
            );
        }
    }
    out
}

/// One round of the rewriting: terms with no positions move to the
/// symmetric output unchanged; every other term is positionally split, its
/// symmetric part accumulated and each difference replaced by its curvature
/// correction. Every remainder term loses at least two positions.
pub fn reduce_once(poly: &SpecialPoly) -> (SymPoly, SpecialPoly) {
    debug_assert!(
        {
            let mut degrees = poly.iter().map(|(m, _)| m.v_degree());
            let first = degrees.next();
            degrees.all(|d| Some(d) == first)
        },
        "reduce_once expects a v-degree-homogeneous polynomial"
    );
    let mut sym = SymPoly::zero();
    let mut remainder = SpecialPoly::zero();
    for (mono, coeff) in poly.iter() {
        let n = mono.positions();
        if n == 0 {
            sym.add_term(0, mono.word.clone(), coeff.clone());
            continue;
        }
        let (part, diffs) = positional_split(mono, coeff);
        sym.merge(&part);
        for (p, c_p) in diffs {
            let m = n - 1 - p;
            if m == 0 {
                continue;
            }
            let correction = curvature_correction(p, m, &mono.word);
            remainder.add_scaled(&correction, &-(coeff * &c_p));
        }
    }
    (sym, remainder)
}

/// Full covariant symmetrization of `v^{⊗n} ⊗ w`: iterate [`reduce_once`]
/// until the remainder vanishes. Terminates within `n/2 + 1` rounds because
/// each round strips at least two positions from every remainder term.
pub fn symmetrize_special(n: u32) -> SymPoly {
    let mut working =
        SpecialPoly::from_term(SpecialMonomial::new(n, QWord::identity(), 0), Rational::ONE);
    let mut total = SymPoly::zero();
    let mut rounds = 0u32;
    while !working.is_zero() {
        let (sym, remainder) = reduce_once(&working);
        total.merge(&sym);
        working = remainder;
        rounds += 1;
        assert!(rounds <= n / 2 + 1, "round budget exceeded at n = {n}");
    }
    total
}

type MonoKey = (u32, QWord, u32);

/// The degree-`n` Taylor operator of the double exponential map, i.e. the
/// tensor-degree-one part of `symmetrize_special(n)`, computed by a lean pass
/// that never materializes the symmetric terms with remaining positions
/// (they cannot contribute to the degree-one component).
pub fn taylor_operator(n: u32) -> QPoly {
    // Letters reach k+2 <= n+1, which must fit the word letter type.
    assert!(n as u64 + 1 <= u16::MAX as u64, "degree exceeds letter range");
    let binom = pascal_rows(n.saturating_sub(1));
    let mut current: FxHashMap<MonoKey, Rational> = FxHashMap::default();
    current.insert((n, QWord::identity(), 0), Rational::ONE);
    let mut out: FxHashMap<QWord, Rational> = FxHashMap::default();

    while !current.is_empty() {
        let mut next: FxHashMap<MonoKey, Rational> =
            FxHashMap::with_capacity_and_hasher(current.len() * 2, Default::default());
        for ((i, word, j), coeff) in current.drain() {
            let positions = i + j;
            if positions == 0 {
                upsert(&mut out, word, coeff);
                continue;
            }
            expand_term(i, &word, positions, &coeff, &binom, &mut next);
        }
        current = next;
    }

    let sorted: BTreeMap<QWord, Rational> = out.into_iter().collect();
    let mut poly = QPoly::zero();
    for (word, coeff) in sorted {
        poly.add_term(word, coeff);
    }
    poly
}

/// Push the corrections of one monomial with `positions >= 1` bare `v`
/// factors into `next`.
///
/// This is the sum over differences `D_p` of `−coeff·c_p·C(p, m_p, word)`,
/// reassociated per target key: the contribution of letter `k+2` to the key
/// with `right = r` (hence `left = positions−2−k−r`) is
/// `−coeff · Σ_{p=k}^{positions−2−r} c_p·C(p,k)`, and the inner sums are
/// running prefix sums over `p`. Scaling the integer-valued `c_p·(N+1)` and
/// dividing by `N+1` once keeps the accumulation in integer arithmetic.
fn expand_term(
    i: u32,
    word: &QWord,
    positions: u32,
    coeff: &Rational,
    binom: &[Vec<Rational>],
    next: &mut FxHashMap<MonoKey, Rational>,
) {
    if positions < 2 {
        return; // a single difference has m = 0 and corrects to zero
    }
    // c_p·(N+1) = [p >= i]·(N+1) − (p+1), an integer.
    let scaled_weight = |p: u32| -> Rational {
        let indicator = if p >= i { positions as i64 + 1 } else { 0 };
        Rational::from_integer(indicator - (p as i64 + 1))
    };
    let base = -(coeff / &Rational::from_integer(positions as i64 + 1));
    for k in 0..=positions - 2 {
        let new_word = word.prepend((k + 2) as u16);
        let mut acc = Rational::ZERO;
        for p_max in k..=positions - 2 {
            acc += &(&scaled_weight(p_max) * &binom[p_max as usize][k as usize]);
            if acc.is_zero() {
                continue;
            }
            let right = positions - 2 - p_max;
            upsert(
                next,
                (p_max - k, new_word.clone(), right),
                &base * &acc,
            );
        }
    }
}

fn upsert<K: std::hash::Hash + Eq>(map: &mut FxHashMap<K, Rational>, key: K, add: Rational) {
    match map.entry(key) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(add);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &add;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn pascal_rows(max_p: u32) -> Vec<Vec<Rational>> {
    (0..=max_p).map(binomial_row).collect()
}
