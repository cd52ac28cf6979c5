//! Free nonassociative algebra over the rationals and its tensor algebra.
//!
//! Elements of the free magma are binary trees over generators; the tensor
//! algebra has words of such elements as its basis. On top of that sit the
//! unshuffle coproduct, the derivations `τ_x`, their multiplicative extension
//! `τ`, and the triangular operator `K` with its inverse. All values are
//! immutable and every operation is a pure function.

use crate::rational::Rational;
use rustc_hash::FxHashMap;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

/// A binary tree over generators: an element of the free magma algebra.
///
/// The derived order puts generators (by index) before products, and orders
/// products lexicographically by (left, right); this is the canonical total
/// order used everywhere for deterministic output.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MagmaElement {
    Generator(u32),
    Product(Arc<MagmaElement>, Arc<MagmaElement>),
}

impl MagmaElement {
    pub fn generator(index: u32) -> Self {
        MagmaElement::Generator(index)
    }

    /// Number of generator leaves.
    pub fn weight(&self) -> u64 {
        match self {
            MagmaElement::Generator(_) => 1,
            MagmaElement::Product(l, r) => l.weight() + r.weight(),
        }
    }
}

/// The magma operation: `a ⋄ b` as a formal product tree.
pub fn magma_product(a: &MagmaElement, b: &MagmaElement) -> MagmaElement {
    MagmaElement::Product(Arc::new(a.clone()), Arc::new(b.clone()))
}

impl fmt::Display for MagmaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaElement::Generator(i) => match i {
                0 => write!(f, "x"),
                1 => write!(f, "y"),
                2 => write!(f, "z"),
                _ => write!(f, "g{i}"),
            },
            MagmaElement::Product(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

impl fmt::Debug for MagmaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A basis word of the tensor algebra: a finite sequence of magma elements.
/// The empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorWord {
    factors: Vec<MagmaElement>,
}

impl TensorWord {
    pub fn unit() -> Self {
        TensorWord::default()
    }

    pub fn new(factors: Vec<MagmaElement>) -> Self {
        TensorWord { factors }
    }

    pub fn single(x: MagmaElement) -> Self {
        TensorWord { factors: vec![x] }
    }

    pub fn factors(&self) -> &[MagmaElement] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.factors.iter().map(MagmaElement::weight).sum()
    }

    pub fn concat(&self, rhs: &TensorWord) -> TensorWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&rhs.factors);
        TensorWord { factors }
    }
}

/// Words sort by weight, then length, then lexicographically on factors.
impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finitely supported rational combination of tensor words; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<TensorWord, Rational>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    /// The unit 1 of the tensor algebra.
    pub fn one() -> Self {
        TensorPoly::from_word(TensorWord::unit())
    }

    pub fn from_word(w: TensorWord) -> Self {
        TensorPoly::from_term(w, Rational::ONE)
    }

    pub fn from_element(x: MagmaElement) -> Self {
        TensorPoly::from_word(TensorWord::single(x))
    }

    pub fn from_term(w: TensorWord, c: Rational) -> Self {
        let mut p = TensorPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: TensorWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
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

    pub fn iter(&self) -> impl Iterator<Item = (&TensorWord, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Product in the tensor algebra (bilinear word concatenation).
    pub fn tensor_mul(&self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// `x ⊗ self`: prepend one factor to every word.
    pub fn prepend(&self, x: &MagmaElement) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in &self.terms {
            let mut factors = Vec::with_capacity(w.len() + 1);
            factors.push(x.clone());
            factors.extend_from_slice(w.factors());
            out.add_term(TensorWord::new(factors), c.clone());
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{} {}", c.abs(), w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &TensorPoly {
    type Output = TensorPoly;
    fn add(self, rhs: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &TensorPoly) -> TensorPoly {
        self + &(-rhs)
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;
    fn neg(self) -> TensorPoly {
        self.scale(&-&Rational::ONE)
    }
}

/// Element of the doubled tensor algebra `T(𝔤) ⊗̆ T(𝔤)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorBiPoly {
    terms: BTreeMap<(TensorWord, TensorWord), Rational>,
}

impl TensorBiPoly {
    pub fn zero() -> Self {
        TensorBiPoly::default()
    }

    pub fn from_term(left: TensorWord, right: TensorWord, c: Rational) -> Self {
        let mut p = TensorBiPoly::zero();
        p.add_term(left, right, c);
        p
    }

    pub fn add_term(&mut self, left: TensorWord, right: TensorWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
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

    pub fn iter(&self) -> impl Iterator<Item = (&(TensorWord, TensorWord), &Rational)> {
        self.terms.iter()
    }

    /// Add `c · (p ⊗̆ q)` expanded bilinearly.
    pub fn add_product(&mut self, p: &TensorPoly, q: &TensorPoly, c: &Rational) {
        for (w1, c1) in p.iter() {
            for (w2, c2) in q.iter() {
                self.add_term(w1.clone(), w2.clone(), &(c1 * c2) * c);
            }
        }
    }

    /// Apply linear maps (given on basis words) to the two legs.
    pub fn map_legs(
        &self,
        f: impl Fn(&TensorWord) -> TensorPoly,
        g: impl Fn(&TensorWord) -> TensorPoly,
    ) -> TensorBiPoly {
        let mut out = TensorBiPoly::zero();
        for ((w1, w2), c) in &self.terms {
            out.add_product(&f(w1), &g(w2), c);
        }
        out
    }
}

impl fmt::Display for TensorBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{} [{}]⊗̆[{}]", c.abs(), l, r)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &TensorBiPoly {
    type Output = TensorBiPoly;
    fn add(self, rhs: &TensorBiPoly) -> TensorBiPoly {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorBiPoly {
    type Output = TensorBiPoly;
    fn sub(self, rhs: &TensorBiPoly) -> TensorBiPoly {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }
}

/// The unshuffle coproduct: generators are primitive and the map is an
/// algebra homomorphism, so a word of length `n` splits into the sum over
/// all `2^n` order-preserving divisions of its factor set.
pub fn coproduct(p: &TensorPoly) -> TensorBiPoly {
    let mut out = TensorBiPoly::zero();
    for (word, c) in p.iter() {
        let n = word.len();
        assert!(n < 26, "coproduct split enumeration limited to short words");
        for mask in 0u32..(1 << n) {
            let mut left = Vec::with_capacity(mask.count_ones() as usize);
            let mut right = Vec::with_capacity(n - mask.count_ones() as usize);
            for (i, x) in word.factors().iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(x.clone());
                } else {
                    right.push(x.clone());
                }
            }
            out.add_term(TensorWord::new(left), TensorWord::new(right), c.clone());
        }
    }
    out
}

/// The derivation `τ_x` extending `y ↦ x ⋄ y`: acts on a word by the Leibniz
/// rule, replacing one factor at a time. Kills the unit.
pub fn tau_derivation(x: &MagmaElement, p: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (word, c) in p.iter() {
        for k in 0..word.len() {
            let mut factors = word.factors().to_vec();
            factors[k] = magma_product(x, &factors[k]);
            out.add_term(TensorWord::new(factors), c.clone());
        }
    }
    out
}

fn tau_word(word: &TensorWord, b: &TensorPoly) -> TensorPoly {
    let mut r = b.clone();
    for x in word.factors().iter().rev() {
        r = tau_derivation(x, &r);
    }
    r
}

/// The algebra homomorphism `τ` with `τ(x) = τ_x`, applied to `b`:
/// `τ(x_1 ⊗ … ⊗ x_n) = τ_{x_1} ∘ … ∘ τ_{x_n}` and `τ(1) = id`.
pub fn tau_hom(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::zero();
    for (word, c) in a.iter() {
        out = &out + &tau_word(word, b).scale(c);
    }
    out
}

/// The compatible action `a · b = τ(a) b` of the tensor bialgebra on itself.
pub fn action_dot(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    tau_hom(a, b)
}

type WordMemo = FxHashMap<TensorWord, TensorPoly>;

fn k_word(word: &TensorWord, memo: &mut WordMemo) -> TensorPoly {
    if word.len() <= 1 {
        return TensorPoly::from_word(word.clone());
    }
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let x = &word.factors()[0];
    let rest = TensorWord::new(word.factors()[1..].to_vec());
    // K(x ⊗ a) = x ⊗ K(a) − K(τ_x a); τ_x a keeps the word length of a,
    // so the recursion descends strictly in length.
    let k_rest = k_word(&rest, memo);
    let tau_rest = tau_derivation(x, &TensorPoly::from_word(rest));
    let mut result = k_rest.prepend(x);
    for (w, c) in tau_rest.iter() {
        result = &result - &k_word(w, memo).scale(c);
    }
    memo.insert(word.clone(), result.clone());
    result
}

/// The K-operator: the unique linear map with `K(1) = 1` and
/// `K(x ⊗ a + τ_x a) = x ⊗ K(a)`.
pub fn k_apply(p: &TensorPoly) -> TensorPoly {
    let mut memo = WordMemo::default();
    let mut out = TensorPoly::zero();
    for (word, c) in p.iter() {
        out = &out + &k_word(word, &mut memo).scale(c);
    }
    out
}

fn k_inv_word(word: &TensorWord, memo: &mut WordMemo) -> TensorPoly {
    if word.len() <= 1 {
        return TensorPoly::from_word(word.clone());
    }
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let x = &word.factors()[0];
    let rest = TensorWord::new(word.factors()[1..].to_vec());
    // K⁻¹(x ⊗ b) = x ⊗ K⁻¹(b) + τ_x(K⁻¹(b)).
    let r = k_inv_word(&rest, memo);
    let result = &r.prepend(x) + &tau_derivation(x, &r);
    memo.insert(word.clone(), result.clone());
    result
}

/// Inverse of the K-operator.
pub fn k_inverse(p: &TensorPoly) -> TensorPoly {
    let mut memo = WordMemo::default();
    let mut out = TensorPoly::zero();
    for (word, c) in p.iter() {
        out = &out + &k_inv_word(word, &mut memo).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> MagmaElement {
        MagmaElement::generator(0)
    }

    fn y() -> MagmaElement {
        MagmaElement::generator(1)
    }

    fn z() -> MagmaElement {
        MagmaElement::generator(2)
    }

    fn word(factors: &[MagmaElement]) -> TensorWord {
        TensorWord::new(factors.to_vec())
    }

    fn poly(factors: &[MagmaElement]) -> TensorPoly {
        TensorPoly::from_word(word(factors))
    }

    #[test]
    fn products_and_weights() {
        let xy = magma_product(&x(), &y());
        assert_eq!(xy.to_string(), "(x*y)");
        let nested = magma_product(&x(), &xy);
        assert_eq!(nested.weight(), 3);
        assert_eq!(magma_product(&xy, &x()).weight(), 3);
        assert_eq!(word(&[x(), xy]).weight(), 3);
    }

    #[test]
    fn coproduct_of_unit_is_grouplike() {
        let unit = TensorPoly::one();
        let cp = coproduct(&unit);
        assert_eq!(
            cp,
            TensorBiPoly::from_term(TensorWord::unit(), TensorWord::unit(), Rational::ONE)
        );
    }

    #[test]
    fn coproduct_of_two_letter_word() {
        let cp = coproduct(&poly(&[x(), y()]));
        let mut expected = TensorBiPoly::zero();
        expected.add_term(TensorWord::unit(), word(&[x(), y()]), Rational::ONE);
        expected.add_term(word(&[x()]), word(&[y()]), Rational::ONE);
        expected.add_term(word(&[y()]), word(&[x()]), Rational::ONE);
        expected.add_term(word(&[x(), y()]), TensorWord::unit(), Rational::ONE);
        assert_eq!(cp, expected);
    }

    #[test]
    fn coproduct_of_repeated_letters_has_binomial_coefficients() {
        let cp = coproduct(&poly(&[x(), x(), x()]));
        let mut expected = TensorBiPoly::zero();
        for (m, binom) in [(0, 1), (1, 3), (2, 3), (3, 1)] {
            expected.add_term(
                word(&vec![x(); m]),
                word(&vec![x(); 3 - m]),
                Rational::from_integer(binom),
            );
        }
        assert_eq!(cp, expected);
    }

    #[test]
    fn coproduct_of_distinct_letters_has_power_of_two_terms() {
        for n in 0..=3 {
            let factors: Vec<_> = (0..n).map(MagmaElement::generator).collect();
            assert_eq!(coproduct(&poly(&factors)).num_terms(), 1 << n);
        }
    }

    #[test]
    fn tau_derivation_examples() {
        assert!(tau_derivation(&x(), &TensorPoly::one()).is_zero());
        assert_eq!(
            tau_derivation(&x(), &poly(&[y()])),
            poly(&[magma_product(&x(), &y())])
        );
        let lhs = tau_derivation(&x(), &poly(&[y(), z()]));
        let expected = &poly(&[magma_product(&x(), &y()), z()])
            + &poly(&[y(), magma_product(&x(), &z())]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn tau_hom_examples() {
        let b = &poly(&[y(), z()]) + &poly(&[x()]).scale(&Rational::new(2, 3));
        assert_eq!(tau_hom(&TensorPoly::one(), &b), b);
        assert_eq!(
            tau_hom(&poly(&[x()]), &poly(&[y()])),
            poly(&[magma_product(&x(), &y())])
        );
        // τ(x⊗y) = τ_x ∘ τ_y on a single letter nests the products.
        assert_eq!(
            tau_hom(&poly(&[x(), y()]), &poly(&[z()])),
            poly(&[magma_product(&x(), &magma_product(&y(), &z()))])
        );
        assert_eq!(
            action_dot(&poly(&[x()]), &poly(&[y()])),
            poly(&[magma_product(&x(), &y())])
        );
    }

    #[test]
    fn k_fixes_short_words() {
        assert_eq!(k_apply(&TensorPoly::one()), TensorPoly::one());
        assert_eq!(k_apply(&poly(&[x()])), poly(&[x()]));
        assert_eq!(k_inverse(&poly(&[x()])), poly(&[x()]));
    }

    #[test]
    fn k_of_two_letter_word() {
        let expected = &poly(&[x(), y()]) - &poly(&[magma_product(&x(), &y())]);
        assert_eq!(k_apply(&poly(&[x(), y()])), expected);
        let inv_expected = &poly(&[x(), y()]) + &poly(&[magma_product(&x(), &y())]);
        assert_eq!(k_inverse(&poly(&[x(), y()])), inv_expected);
    }

    #[test]
    fn k_of_cubed_letter() {
        let xx = magma_product(&x(), &x());
        let expected = &(&(&poly(&[x(), x(), x()])
            - &poly(&[x(), xx.clone()]).scale(&Rational::from_integer(2)))
            - &poly(&[xx.clone(), x()]))
            + &(&poly(&[magma_product(&xx, &x())]) + &poly(&[magma_product(&x(), &xx)]));
        assert_eq!(k_apply(&poly(&[x(), x(), x()])), expected);
        assert_eq!(
            k_inverse(&k_apply(&poly(&[x(), x(), x()]))),
            poly(&[x(), x(), x()])
        );
    }

    #[test]
    fn k_satisfies_its_defining_identity() {
        // Independent oracle: K(x ⊗ a + τ_x a) = x ⊗ K(a) directly from the
        // definition, for every word a of length <= 3 over two generators.
        for a in enumerate_words(2, 3) {
            for g in [x(), y()] {
                let a_poly = TensorPoly::from_word(a.clone());
                let lhs_arg = &a_poly.prepend(&g) + &tau_derivation(&g, &a_poly);
                let rhs = k_apply(&a_poly).prepend(&g);
                assert_eq!(k_apply(&lhs_arg), rhs, "a = {a}, x = {g}");
            }
        }
    }

    #[test]
    fn k_is_unitriangular() {
        // K(w) − w only contains words strictly shorter than w.
        for w in enumerate_words(2, 4) {
            let p = TensorPoly::from_word(w.clone());
            let diff = &k_apply(&p) - &p;
            for (u, _) in diff.iter() {
                assert!(u.len() < w.len(), "K({w}) has a long tail {u}");
            }
        }
    }

    fn enumerate_words(generators: u32, max_len: usize) -> Vec<TensorWord> {
        let mut words = vec![TensorWord::unit()];
        let mut layer = vec![TensorWord::unit()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..generators {
                    let mut factors = w.factors().to_vec();
                    factors.push(MagmaElement::generator(g));
                    next.push(TensorWord::new(factors));
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        words
    }

    fn arb_element() -> impl Strategy<Value = MagmaElement> {
        let leaf = (0u32..2).prop_map(MagmaElement::generator);
        leaf.prop_recursive(2, 4, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| magma_product(&l, &r))
        })
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = TensorWord> {
        proptest::collection::vec(arb_element(), 0..=max_len).prop_map(TensorWord::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn tau_preserves_length_and_shifts_weight(x in arb_element(), w in arb_word(3)) {
            let out = tau_derivation(&x, &TensorPoly::from_word(w.clone()));
            for (u, _) in out.iter() {
                prop_assert_eq!(u.len(), w.len());
                prop_assert_eq!(u.weight(), w.weight() + x.weight());
            }
        }

        #[test]
        fn k_maps_are_weight_homogeneous(w in arb_word(4)) {
            let p = TensorPoly::from_word(w.clone());
            for (u, _) in k_apply(&p).iter() {
                prop_assert_eq!(u.weight(), w.weight());
            }
            for (u, _) in k_inverse(&p).iter() {
                prop_assert_eq!(u.weight(), w.weight());
            }
            for ((l, r), _) in coproduct(&p).iter() {
                prop_assert_eq!(l.weight() + r.weight(), w.weight());
            }
        }

        #[test]
        fn k_round_trips(w in arb_word(4)) {
            let p = TensorPoly::from_word(w);
            prop_assert_eq!(k_inverse(&k_apply(&p)), p.clone());
            prop_assert_eq!(k_apply(&k_inverse(&p)), p);
        }
    }
}
