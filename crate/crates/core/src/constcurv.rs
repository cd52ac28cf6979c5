//! Independent constant-curvature validation of the Taylor operators.
//!
//! Two cross-checks live here. The exact one substitutes `q_2 → c` and
//! `q_d → 0` for `d >= 3` (which is what constant curvature does to the
//! curvature operators) and compares the resulting number series against the
//! Maclaurin coefficients of `z/sin z`, computed by exact power-series
//! division. The numerical one builds the double exponential map from closed
//! geodesic forms on the unit sphere, the unit hyperboloid and the flat
//! plane, and differentiates it with central differences.

use crate::error::Error;
use crate::qword::QPoly;
use crate::rational::Rational;
use crate::symmetrizer::taylor_operator;

/// Substitution homomorphism: a word of all-2 letters of length `k` maps to
/// `c^k`, any word containing a letter `>= 3` maps to zero.
pub fn scalar_eval(p: &QPoly, c: &Rational) -> Rational {
    let mut out = Rational::ZERO;
    for (word, coeff) in p.iter() {
        if word.letters().iter().all(|&d| d == 2) {
            let mut power = Rational::ONE;
            for _ in 0..word.len() {
                power *= c;
            }
            out += &(coeff * &power);
        }
    }
    out
}

/// Maclaurin coefficient of `z^n` in `z / sin z`, by exact long division of
/// the series `sin z / z = Σ (−1)^k z^{2k} / (2k+1)!`. Only even indices
/// carry nonzero coefficients; odd indices are a domain error.
pub fn zsinz_coeff(n: u64) -> Result<Rational, Error> {
    if n % 2 != 0 {
        return Err(Error::OddSeriesIndex { got: n });
    }
    let half = (n / 2) as usize;
    // a[k] = (−1)^k / (2k+1)! is the z^{2k} coefficient of sin z / z.
    let mut a = Vec::with_capacity(half + 1);
    let mut fact = Rational::ONE;
    for k in 0..=half as i64 {
        if k > 0 {
            fact *= &Rational::new(1, 2 * k * (2 * k + 1));
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        a.push(&fact * &Rational::from_integer(sign));
    }
    // b = 1/a by the division recurrence b_m = −Σ_{j=1}^{m} a_j b_{m−j}
    // (a_0 = 1), everything indexed in steps of z².
    let mut b = vec![Rational::ONE];
    for m in 1..=half {
        let mut acc = Rational::ZERO;
        for j in 1..=m {
            acc += &(&a[j] * &b[m - j]);
        }
        b.push(-&acc);
    }
    Ok(b[half].clone())
}

/// Constant sectional curvature of a model surface.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CurvatureSign {
    Positive,
    Flat,
    Negative,
}

impl CurvatureSign {
    pub fn kappa(self) -> f64 {
        match self {
            CurvatureSign::Positive => 1.0,
            CurvatureSign::Flat => 0.0,
            CurvatureSign::Negative => -1.0,
        }
    }
}

/// The three embedded model surfaces: the plane `z = 0` in Euclidean
/// 3-space, the unit sphere, and the upper unit hyperboloid in Minkowski
/// 3-space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Surface {
    Flat,
    Sphere,
    Hyperbolic,
}

impl Surface {
    pub fn curvature_sign(self) -> CurvatureSign {
        match self {
            Surface::Flat => CurvatureSign::Flat,
            Surface::Sphere => CurvatureSign::Positive,
            Surface::Hyperbolic => CurvatureSign::Negative,
        }
    }

    /// A convenient base point: the origin of the plane or the pole of the
    /// curved models. Its tangent plane is spanned by `e_y` and `e_z` in all
    /// three cases.
    pub fn base_point(self) -> SurfacePoint {
        match self {
            Surface::Flat => SurfacePoint([0.0, 0.0, 0.0]),
            Surface::Sphere | Surface::Hyperbolic => SurfacePoint([1.0, 0.0, 0.0]),
        }
    }

    /// Metric of the ambient space: Euclidean, or Minkowski with signature
    /// `(−, +, +)` for the hyperboloid model.
    fn ambient_dot(self, a: &[f64; 3], b: &[f64; 3]) -> f64 {
        let sign0 = if self == Surface::Hyperbolic { -1.0 } else { 1.0 };
        sign0 * a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    /// Residual of the defining constraint of the surface at `x`.
    pub fn point_residual(self, x: &SurfacePoint) -> f64 {
        match self {
            Surface::Flat => x.0[2].abs(),
            Surface::Sphere => (self.ambient_dot(&x.0, &x.0) - 1.0).abs(),
            Surface::Hyperbolic => (self.ambient_dot(&x.0, &x.0) + 1.0).abs(),
        }
    }

    /// Residual of the tangency constraint of `v` at `x`.
    pub fn tangent_residual(self, x: &SurfacePoint, v: &TangentVector) -> f64 {
        match self {
            Surface::Flat => v.0[2].abs(),
            Surface::Sphere | Surface::Hyperbolic => self.ambient_dot(&x.0, &v.0).abs(),
        }
    }

    /// Riemannian inner product of tangent vectors (positive definite on the
    /// tangent spaces of all three models).
    pub fn metric_dot(self, v: &TangentVector, w: &TangentVector) -> f64 {
        self.ambient_dot(&v.0, &w.0)
    }

    pub fn norm(self, v: &TangentVector) -> f64 {
        self.metric_dot(v, v).max(0.0).sqrt()
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SurfacePoint(pub [f64; 3]);

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct TangentVector(pub [f64; 3]);

impl TangentVector {
    pub const ZERO: TangentVector = TangentVector([0.0, 0.0, 0.0]);

    pub fn scale(&self, t: f64) -> TangentVector {
        TangentVector([self.0[0] * t, self.0[1] * t, self.0[2] * t])
    }

    pub fn add(&self, o: &TangentVector) -> TangentVector {
        TangentVector([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    pub fn sub(&self, o: &TangentVector) -> TangentVector {
        self.add(&o.scale(-1.0))
    }

    pub fn sup_norm(&self) -> f64 {
        self.0.iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

fn axpy(a: f64, x: &[f64; 3], b: f64, y: &[f64; 3]) -> [f64; 3] {
    [
        a * x[0] + b * y[0],
        a * x[1] + b * y[1],
        a * x[2] + b * y[2],
    ]
}

/// Geodesic exponential map in closed form.
pub fn surf_exp(surface: Surface, x: &SurfacePoint, v: &TangentVector) -> SurfacePoint {
    let t = surface.norm(v);
    match surface {
        Surface::Flat => SurfacePoint(axpy(1.0, &x.0, 1.0, &v.0)),
        Surface::Sphere => {
            if t == 0.0 {
                return *x;
            }
            SurfacePoint(axpy(t.cos(), &x.0, t.sin() / t, &v.0))
        }
        Surface::Hyperbolic => {
            if t == 0.0 {
                return *x;
            }
            SurfacePoint(axpy(t.cosh(), &x.0, t.sinh() / t, &v.0))
        }
    }
}

/// Geodesic logarithm. On the sphere the map is undefined at antipodal
/// points, which is reported as an error rather than a garbage vector.
pub fn surf_log(surface: Surface, x: &SurfacePoint, y: &SurfacePoint) -> Result<TangentVector, Error> {
    match surface {
        Surface::Flat => Ok(TangentVector(axpy(1.0, &y.0, -1.0, &x.0))),
        Surface::Sphere => {
            let c = surface.ambient_dot(&x.0, &y.0).clamp(-1.0, 1.0);
            let theta = c.acos();
            if std::f64::consts::PI - theta < 1e-6 {
                return Err(Error::LogUndefined {
                    reason: format!("points are antipodal within 1e-6 (angle {theta})"),
                });
            }
            if theta < 1e-12 {
                return Ok(TangentVector::ZERO);
            }
            let s = theta.sin();
            Ok(TangentVector(axpy(theta / s, &y.0, -c * theta / s, &x.0)))
        }
        Surface::Hyperbolic => {
            let c = (-surface.ambient_dot(&x.0, &y.0)).max(1.0);
            let theta = c.acosh();
            if theta < 1e-12 {
                return Ok(TangentVector::ZERO);
            }
            let s = theta.sinh();
            Ok(TangentVector(axpy(theta / s, &y.0, -c * theta / s, &x.0)))
        }
    }
}

/// Parallel transport of `w` along the geodesic `t ↦ exp_x(t v)` from `t=0`
/// to `t=1`. The component orthogonal to the geodesic plane is unchanged;
/// the component along the velocity rotates with the moving frame.
pub fn surf_transport(
    surface: Surface,
    x: &SurfacePoint,
    v: &TangentVector,
    w: &TangentVector,
) -> TangentVector {
    let t = surface.norm(v);
    if surface == Surface::Flat || t == 0.0 {
        return *w;
    }
    let vhat = v.scale(1.0 / t);
    let w_par = surface.metric_dot(w, &vhat);
    let w_perp = w.sub(&vhat.scale(w_par));
    let rotated = match surface {
        Surface::Sphere => axpy(t.cos(), &vhat.0, -t.sin(), &x.0),
        Surface::Hyperbolic => axpy(t.cosh(), &vhat.0, t.sinh(), &x.0),
        Surface::Flat => unreachable!(),
    };
    w_perp.add(&TangentVector(rotated).scale(w_par))
}

/// The double exponential map pulled back to the tangent space at `x`:
/// follow the geodesic with velocity `v`, transport `w` there, follow that
/// geodesic, and read the endpoint off through the logarithm at `x`.
pub fn h_numeric(
    surface: Surface,
    x: &SurfacePoint,
    v: &TangentVector,
    w: &TangentVector,
) -> Result<TangentVector, Error> {
    let mid = surf_exp(surface, x, v);
    let carried = surf_transport(surface, x, v, w);
    let end = surf_exp(surface, &mid, &carried);
    surf_log(surface, x, &end)
}

/// Truncated series prediction for the eigenvalue of the linear-in-`w`
/// response on the subspace orthogonal to `v`: substitute
/// `c = κ·|v|²` into the Taylor operators and sum `Σ_{n<=N} H_n(c)/n!`.
pub fn h_series_linear(kappa: CurvatureSign, vnorm: f64, order: u32) -> f64 {
    let c = kappa.kappa() * vnorm * vnorm;
    let mut total = 0.0;
    let mut factorial = 1.0;
    for n in 0..=order {
        if n > 0 {
            factorial *= n as f64;
        }
        if n % 2 != 0 {
            continue; // odd orders have no all-2 word
        }
        let exact = scalar_eval(&taylor_operator(n), &Rational::ONE);
        total += exact.to_f64() * c.powi((n / 2) as i32) / factorial;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qword::QWord;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn scalar_substitution_keeps_only_all_2_words() {
        assert_eq!(scalar_eval(&taylor_operator(4), &Rational::ONE), rat(7, 15));
        assert_eq!(scalar_eval(&taylor_operator(3), &Rational::ONE), Rational::ZERO);
        assert_eq!(scalar_eval(&taylor_operator(6), &Rational::ONE), rat(31, 21));
        // The substitution raises c to the word length.
        let p = QPoly::from_term(QWord::new(&[2, 2]), rat(1, 2));
        assert_eq!(scalar_eval(&p, &rat(3, 1)), rat(9, 2));
    }

    #[test]
    fn reciprocal_sinc_series() {
        assert_eq!(zsinz_coeff(0).unwrap(), rat(1, 1));
        assert_eq!(zsinz_coeff(2).unwrap(), rat(1, 6));
        assert_eq!(zsinz_coeff(4).unwrap(), rat(7, 360));
        assert_eq!(zsinz_coeff(6).unwrap(), rat(31, 15120));
        assert!(zsinz_coeff(3).is_err());
        // Float sanity: partial sums approach z/sin z. At z = 0.2 the tail
        // beyond n = 12 is below 1e-15.
        let z: f64 = 0.2;
        let approx: f64 = (0..=12)
            .step_by(2)
            .map(|n| zsinz_coeff(n).unwrap().to_f64() * z.powi(n as i32))
            .sum();
        assert!((approx - z / z.sin()).abs() < 1e-13);
    }

    #[test]
    fn exponential_map_fixed_points() {
        for surface in [Surface::Flat, Surface::Sphere, Surface::Hyperbolic] {
            let x = surface.base_point();
            assert_eq!(surf_exp(surface, &x, &TangentVector::ZERO), x);
        }
    }

    #[test]
    fn quarter_great_circle() {
        let x = SurfacePoint([1.0, 0.0, 0.0]);
        let v = TangentVector([0.0, std::f64::consts::FRAC_PI_2, 0.0]);
        let y = surf_exp(Surface::Sphere, &x, &v);
        let expected = [0.0, 1.0, 0.0];
        for i in 0..3 {
            assert!((y.0[i] - expected[i]).abs() < 1e-15);
        }
    }

    #[test]
    fn flat_surface_is_affine() {
        let x = SurfacePoint([0.3, -0.2, 0.0]);
        let v = TangentVector([1.0, 2.0, 0.0]);
        let w = TangentVector([-0.5, 0.25, 0.0]);
        assert_eq!(surf_exp(Surface::Flat, &x, &v).0, [1.3, 1.8, 0.0]);
        let y = surf_exp(Surface::Flat, &x, &v);
        assert_eq!(surf_log(Surface::Flat, &x, &y).unwrap().0, v.0);
        assert_eq!(surf_transport(Surface::Flat, &x, &v, &w).0, w.0);
        let h = h_numeric(Surface::Flat, &x, &v, &w).unwrap();
        assert_eq!(h.0, [0.5, 2.25, 0.0]);
    }

    #[test]
    fn log_rejects_antipodal_points() {
        let x = SurfacePoint([1.0, 0.0, 0.0]);
        let y = SurfacePoint([-1.0, 0.0, 0.0]);
        assert!(matches!(
            surf_log(Surface::Sphere, &x, &y),
            Err(Error::LogUndefined { .. })
        ));
    }

    #[test]
    fn log_inverts_exp_on_curved_models() {
        for surface in [Surface::Sphere, Surface::Hyperbolic] {
            let x = surface.base_point();
            for (a, b) in [(0.7, 0.2), (-0.3, 0.9), (0.05, -0.04), (2.0, 1.1)] {
                let v = TangentVector([0.0, a, b]);
                if surface == Surface::Sphere && surface.norm(&v) >= std::f64::consts::PI - 0.1 {
                    continue;
                }
                let y = surf_exp(surface, &x, &v);
                assert!(surface.point_residual(&y) < 1e-12);
                let back = surf_log(surface, &x, &y).unwrap();
                assert!(back.sub(&v).sup_norm() < 1e-12, "{surface:?} {v:?}");
            }
        }
    }

    #[test]
    fn transport_is_isometric() {
        for surface in [Surface::Sphere, Surface::Hyperbolic] {
            let x = surface.base_point();
            let v = TangentVector([0.0, 0.8, -0.3]);
            for w in [
                TangentVector([0.0, 0.1, 0.7]),
                TangentVector([0.0, -1.2, 0.4]),
            ] {
                let carried = surf_transport(surface, &x, &v, &w);
                let y = surf_exp(surface, &x, &v);
                assert!(surface.tangent_residual(&y, &carried) < 1e-12);
                let before = surface.metric_dot(&w, &w);
                let after = surface.metric_dot(&carried, &carried);
                assert!((before - after).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn collinear_second_leg_extends_the_geodesic() {
        let eps = 1e-4;
        for surface in [Surface::Flat, Surface::Sphere, Surface::Hyperbolic] {
            let x = surface.base_point();
            let v = TangentVector([0.0, 0.4, 0.0]);
            let h = h_numeric(surface, &x, &v, &v.scale(eps)).unwrap();
            assert!(
                h.sub(&v.scale(1.0 + eps)).sup_norm() < 1e-12,
                "{surface:?}"
            );
        }
    }

    #[test]
    fn finite_difference_matches_closed_form_and_series() {
        let eps = 1e-4;
        for (surface, closed) in [
            (Surface::Sphere, 0.4f64 / 0.4f64.sin()),
            (Surface::Hyperbolic, 0.4f64 / 0.4f64.sinh()),
        ] {
            let x = surface.base_point();
            let v = TangentVector([0.0, 0.4, 0.0]);
            let w = TangentVector([0.0, 0.0, 1.0]);
            let plus = h_numeric(surface, &x, &v, &w.scale(eps)).unwrap();
            let minus = h_numeric(surface, &x, &v, &w.scale(-eps)).unwrap();
            let fd = plus.sub(&minus).scale(1.0 / (2.0 * eps));
            let lambda = surface.metric_dot(&fd, &w);
            assert!((lambda - closed).abs() < 1e-6, "{surface:?}: {lambda} vs {closed}");
            // Truncation at order 10 with |v| = 0.4 is below 4e-11.
            let series = h_series_linear(surface.curvature_sign(), 0.4, 10);
            assert!((series - closed).abs() < 1e-9, "{surface:?}: {series} vs {closed}");
        }
        assert_eq!(h_series_linear(CurvatureSign::Flat, 0.7, 10), 1.0);
    }
}
