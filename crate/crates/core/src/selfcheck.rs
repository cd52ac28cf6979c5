//! Machine verification of the bialgebra identities behind the rewriting
//! algorithm: the coalgebra automorphism property of `K`, the Leibniz
//! compatibility of derivations with the coproduct, the compatible-action
//! squares for `τ`, the cocycle identity, and invertibility of `K`.
//!
//! Each identity is checked exactly, first exhaustively on all short words
//! over a small generator set, then on seeded random elements. The run is
//! deterministic for a fixed configuration.

use crate::magma::{
    coproduct, k_apply, k_inverse, magma_product, tau_derivation, tau_hom, MagmaElement,
    TensorBiPoly, TensorPoly, TensorWord,
};
use crate::rational::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct HopfConfig {
    /// Number of magma generators in the exhaustive sweep.
    pub generators: u32,
    /// Maximum word length of the exhaustive sweep.
    pub max_len: usize,
    /// Number of seeded random elements (words up to length 5).
    pub trials: u32,
    pub seed: u64,
}

impl Default for HopfConfig {
    fn default() -> Self {
        HopfConfig {
            generators: 2,
            max_len: 3,
            trials: 100,
            seed: 42,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    /// Description of the first failing case, if any.
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Checker {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn record<T: PartialEq + std::fmt::Display>(&mut self, lhs: T, rhs: T, context: impl Fn() -> String) {
        self.cases += 1;
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(format!("{}: lhs = {lhs}, rhs = {rhs}", context()));
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// All words of length `<= max_len` over the given generators (unit first).
pub fn enumerate_words(generators: u32, max_len: usize) -> Vec<TensorWord> {
    let mut words = vec![TensorWord::unit()];
    let mut layer = vec![TensorWord::unit()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * generators as usize);
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

fn random_element(rng: &mut ChaCha8Rng, generators: u32) -> MagmaElement {
    if rng.random_range(0..3) == 0 {
        let l = MagmaElement::generator(rng.random_range(0..generators));
        let r = MagmaElement::generator(rng.random_range(0..generators));
        magma_product(&l, &r)
    } else {
        MagmaElement::generator(rng.random_range(0..generators))
    }
}

fn random_word(rng: &mut ChaCha8Rng, generators: u32, max_len: usize) -> TensorWord {
    let len = rng.random_range(0..=max_len);
    TensorWord::new((0..len).map(|_| random_element(rng, generators)).collect())
}

fn random_poly(rng: &mut ChaCha8Rng, generators: u32, max_len: usize) -> TensorPoly {
    let mut p = TensorPoly::zero();
    for _ in 0..rng.random_range(1..=2) {
        let num = loop {
            let n = rng.random_range(-3..=3i64);
            if n != 0 {
                break n;
            }
        };
        let den = rng.random_range(1..=3i64);
        p.add_term(random_word(rng, generators, max_len), Rational::new(num, den));
    }
    p
}

fn word_poly(w: &TensorWord) -> TensorPoly {
    TensorPoly::from_word(w.clone())
}

/// `Δ(K a) = (K ⊗̆ K)(Δ a)`.
fn coalgebra_automorphism_holds(a: &TensorPoly) -> (TensorBiPoly, TensorBiPoly) {
    let lhs = coproduct(&k_apply(a));
    let rhs = coproduct(a).map_legs(
        |w| k_apply(&word_poly(w)),
        |w| k_apply(&word_poly(w)),
    );
    (lhs, rhs)
}

/// `Δ(τ_x a) = Σ (τ_x a₍₁₎) ⊗̆ a₍₂₎ + a₍₁₎ ⊗̆ (τ_x a₍₂₎)`.
fn derivation_compatibility(x: &MagmaElement, a: &TensorPoly) -> (TensorBiPoly, TensorBiPoly) {
    let lhs = coproduct(&tau_derivation(x, a));
    let da = coproduct(a);
    let left = da.map_legs(|w| tau_derivation(x, &word_poly(w)), word_poly);
    let right = da.map_legs(word_poly, |w| tau_derivation(x, &word_poly(w)));
    (lhs, &left + &right)
}

/// `K(A) ⊗ K(B) = Σ K(A₍₁₎ ⊗ τ(K(A₍₂₎)) B)`.
fn cocycle_sides(a: &TensorPoly, b: &TensorPoly) -> (TensorPoly, TensorPoly) {
    let lhs = k_apply(a).tensor_mul(&k_apply(b));
    let mut rhs = TensorPoly::zero();
    for ((a1, a2), c) in coproduct(a).iter() {
        let acted = tau_hom(&k_apply(&word_poly(a2)), b);
        let arg = word_poly(a1).tensor_mul(&acted);
        rhs = &rhs + &k_apply(&arg).scale(c);
    }
    (lhs, rhs)
}

/// `Δ(τ(a) b) = Σ τ(a₍₁₎) b₍₁₎ ⊗̆ τ(a₍₂₎) b₍₂₎`.
fn action_coproduct_sides(a: &TensorPoly, b: &TensorPoly) -> (TensorBiPoly, TensorBiPoly) {
    let lhs = coproduct(&tau_hom(a, b));
    let mut rhs = TensorBiPoly::zero();
    for ((a1, a2), ca) in coproduct(a).iter() {
        for ((b1, b2), cb) in coproduct(b).iter() {
            rhs.add_product(
                &tau_hom(&word_poly(a1), &word_poly(b1)),
                &tau_hom(&word_poly(a2), &word_poly(b2)),
                &(ca * cb),
            );
        }
    }
    (lhs, rhs)
}

/// `τ(a)(b₁ ⊗ b₂) = Σ τ(a₍₁₎) b₁ ⊗ τ(a₍₂₎) b₂`.
fn action_product_sides(
    a: &TensorPoly,
    b1: &TensorPoly,
    b2: &TensorPoly,
) -> (TensorPoly, TensorPoly) {
    let lhs = tau_hom(a, &b1.tensor_mul(b2));
    let mut rhs = TensorPoly::zero();
    for ((a1, a2), c) in coproduct(a).iter() {
        let t1 = tau_hom(&word_poly(a1), b1);
        let t2 = tau_hom(&word_poly(a2), b2);
        rhs = &rhs + &t1.tensor_mul(&t2).scale(c);
    }
    (lhs, rhs)
}

/// Run the whole identity suite; exact equalities only.
pub fn run_hopf_suite(cfg: &HopfConfig) -> Vec<CheckResult> {
    let words = enumerate_words(cfg.generators, cfg.max_len);
    let short_words = enumerate_words(cfg.generators, cfg.max_len.saturating_sub(1));
    let generators: Vec<_> = (0..cfg.generators).map(MagmaElement::generator).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // One shared pool of random elements, drawn up front so every check sees
    // the same deterministic sequence.
    let random_polys: Vec<TensorPoly> = (0..cfg.trials)
        .map(|_| random_poly(&mut rng, cfg.generators.max(1), 5))
        .collect();
    let random_pairs: Vec<(TensorPoly, TensorPoly)> = (0..cfg.trials)
        .map(|_| {
            (
                random_poly(&mut rng, cfg.generators.max(1), 4),
                random_poly(&mut rng, cfg.generators.max(1), 2),
            )
        })
        .collect();

    let mut results = Vec::new();

    let mut check = Checker::new("coalgebra-automorphism");
    for w in &words {
        let (lhs, rhs) = coalgebra_automorphism_holds(&word_poly(w));
        check.record(lhs, rhs, || format!("word {w}"));
    }
    for p in &random_polys {
        let (lhs, rhs) = coalgebra_automorphism_holds(p);
        check.record(lhs, rhs, || format!("random element {p}"));
    }
    results.push(check.finish());

    let mut check = Checker::new("derivation-coproduct-compatibility");
    for w in &words {
        for x in &generators {
            let (lhs, rhs) = derivation_compatibility(x, &word_poly(w));
            check.record(lhs, rhs, || format!("word {w}, x = {x}"));
        }
    }
    for p in &random_polys {
        let (lhs, rhs) = derivation_compatibility(&generators[0], p);
        check.record(lhs, rhs, || format!("random element {p}"));
    }
    results.push(check.finish());

    let mut check = Checker::new("cocycle-identity");
    for a in &words {
        for b in &short_words {
            let (lhs, rhs) = cocycle_sides(&word_poly(a), &word_poly(b));
            check.record(lhs, rhs, || format!("A = {a}, B = {b}"));
        }
    }
    for (a, b) in &random_pairs {
        let (lhs, rhs) = cocycle_sides(a, b);
        check.record(lhs, rhs, || format!("random A = {a}, B = {b}"));
    }
    results.push(check.finish());

    let mut check = Checker::new("action-coproduct-square");
    for a in &words {
        for b in &short_words {
            let (lhs, rhs) = action_coproduct_sides(&word_poly(a), &word_poly(b));
            check.record(lhs, rhs, || format!("a = {a}, b = {b}"));
        }
    }
    for (a, b) in &random_pairs {
        let (lhs, rhs) = action_coproduct_sides(a, b);
        check.record(lhs, rhs, || format!("random a = {a}, b = {b}"));
    }
    results.push(check.finish());

    let mut check = Checker::new("action-product-square");
    for a in &words {
        for b1 in &short_words {
            for b2 in &short_words {
                if b1.len() + b2.len() > cfg.max_len.saturating_sub(1) {
                    continue;
                }
                let (lhs, rhs) = action_product_sides(&word_poly(a), &word_poly(b1), &word_poly(b2));
                check.record(lhs, rhs, || format!("a = {a}, b1 = {b1}, b2 = {b2}"));
            }
        }
    }
    for (i, (a, b)) in random_pairs.iter().enumerate() {
        let (b1, b2) = (b, &random_pairs[(i + 1) % random_pairs.len()].1);
        let (lhs, rhs) = action_product_sides(a, b1, b2);
        check.record(lhs, rhs, || format!("random a = {a}, b1 = {b1}, b2 = {b2}"));
    }
    results.push(check.finish());

    let mut check = Checker::new("k-inverse-roundtrip");
    for w in &words {
        let p = word_poly(w);
        check.record(k_inverse(&k_apply(&p)), p.clone(), || format!("word {w}"));
        check.record(k_apply(&k_inverse(&p)), p.clone(), || format!("word {w}"));
    }
    for p in &random_polys {
        check.record(k_inverse(&k_apply(p)), p.clone(), || format!("random element {p}"));
        check.record(k_apply(&k_inverse(p)), p.clone(), || format!("random element {p}"));
    }
    results.push(check.finish());

    results
}
