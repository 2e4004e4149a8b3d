//! The unperturbed (straight crack, straight interface) solution.
//!
//! Point forces are Dirac masses, so every Mellin inversion collapses onto
//! the special integrals of [`crate::special`] evaluated at
//! `beta = ln(distance / |x1|)`. Nothing here inverts a transform numerically.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{BimaterialSpec, DecomposedLoad, Face, ThreePointLoad};
use crate::quadrature::{EndpointBehavior, QuadratureRequest};
use crate::special::{i1, i1_prime, i1_second, i2, i2_prime, i2_second, i3};

/// `sqrt(2/pi)`.
pub const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;
/// `1/sqrt(2 pi)`.
pub const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// `K_III` of the unperturbed problem for an arbitrary point-force load:
/// `-sqrt(2/pi) sum_k w_k d_k^(-1/2)` with `w = <p> + (eta/2) [[p]]`.
pub fn k0(material: &BimaterialSpec, load: &DecomposedLoad) -> f64 {
    -SQRT_2_OVER_PI * tip_moment(material, load, -0.5)
}

/// [`k0`] for the three-point load.
pub fn k0_point_loads(material: &BimaterialSpec, load: &ThreePointLoad) -> Result<f64> {
    Ok(k0(material, &load.decompose()?))
}

fn tip_moment(material: &BimaterialSpec, load: &DecomposedLoad, power: f64) -> f64 {
    load.tip_weights(material.contrast())
        .iter()
        .map(|p| p.weight * p.distance().powf(power))
        .sum()
}

/// Three-term expansion of the crack-tip field.
///
/// Ahead of the tip the traction is
/// `(K r^(-1/2) + A r^(1/2) + B r^(3/2)) / sqrt(2 pi)`; behind it the crack
/// opening is `(2 K r^(1/2) - (2/3) A r^(3/2) + (2/5) B r^(5/2))
/// (1/mu+ + 1/mu-) / sqrt(2 pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TipAsymptotics {
    pub k3: f64,
    pub a3: f64,
    pub b3: f64,
}

impl TipAsymptotics {
    /// Truncated traction `sigma_32(r, 0)`.
    pub fn traction(&self, r: f64) -> f64 {
        let s = r.sqrt();
        INV_SQRT_2PI * (self.k3 / s + self.a3 * s + self.b3 * s * r)
    }

    /// Truncated crack opening `[[u]](-r)`.
    pub fn opening(&self, material: &BimaterialSpec, r: f64) -> f64 {
        let compliance = 1.0 / material.mu_plus + 1.0 / material.mu_minus;
        let s = r.sqrt();
        let series = 2.0 * self.k3 * s - 2.0 / 3.0 * self.a3 * s * r + 0.4 * self.b3 * s * r * r;
        INV_SQRT_2PI * compliance * series
    }
}

type DensityFn = dyn Fn(f64) -> f64 + Send + Sync;

/// A function on the line with bounded support, plus hints about how it
/// behaves at the ends of that support.
#[derive(Clone)]
pub struct LineDensity {
    support: Option<(f64, f64)>,
    f: Arc<DensityFn>,
    endpoints: [EndpointBehavior; 2],
}

impl LineDensity {
    pub fn new(lo: f64, hi: f64, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            support: Some((lo.min(hi), lo.max(hi))),
            f: Arc::new(f),
            endpoints: [EndpointBehavior::Smooth; 2],
        }
    }

    pub fn zero() -> Self {
        Self {
            support: None,
            f: Arc::new(|_| 0.0),
            endpoints: [EndpointBehavior::Smooth; 2],
        }
    }

    pub fn with_endpoints(mut self, lower: EndpointBehavior, upper: EndpointBehavior) -> Self {
        self.endpoints = [lower, upper];
        self
    }

    pub fn support(&self) -> Option<(f64, f64)> {
        self.support
    }

    pub fn endpoints(&self) -> [EndpointBehavior; 2] {
        self.endpoints
    }

    /// Value at `x`; zero outside the support.
    pub fn eval(&self, x: f64) -> f64 {
        match self.support {
            Some((lo, hi)) if x >= lo && x <= hi => (self.f)(x),
            _ => 0.0,
        }
    }

    /// `int density(x) kernel(x) dx` over the support.
    pub fn integrate_against(
        &self,
        kernel: impl Fn(f64) -> f64,
        context: &'static str,
    ) -> Result<f64> {
        let Some((lo, hi)) = self.support else {
            return Ok(0.0);
        };
        QuadratureRequest::new(|x| (self.f)(x) * kernel(x), lo, hi)
            .lower(self.endpoints[0])
            .upper(self.endpoints[1])
            .value(context)
    }
}

impl fmt::Debug for LineDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LineDensity")
            .field("support", &self.support)
            .field("endpoints", &self.endpoints)
            .finish_non_exhaustive()
    }
}

/// Prescribed jumps across the interface (`x1 > 0`): `g1` of displacement,
/// `g2` of traction.
#[derive(Clone, Debug)]
pub struct InterfaceDiscontinuity {
    pub g1: LineDensity,
    pub g2: LineDensity,
}

impl InterfaceDiscontinuity {
    pub fn none() -> Self {
        Self {
            g1: LineDensity::zero(),
            g2: LineDensity::zero(),
        }
    }
}

fn interface_support(d: &LineDensity, what: &'static str) -> Result<()> {
    match d.support() {
        Some((lo, _)) if !(lo > 0.0) => Err(Error::Domain { what, value: lo }),
        _ => Ok(()),
    }
}

/// `K_III`, `A_III`, `B_III` for point-force crack-face loads and a
/// prescribed interface displacement jump `g1`. The traction jump `g2` never
/// enters.
pub fn tip_asymptotics(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    disc: &InterfaceDiscontinuity,
) -> Result<TipAsymptotics> {
    interface_support(&disc.g1, "interface displacement jump support")?;
    let m = material.effective_modulus() * INV_SQRT_2PI;
    let g1 = &disc.g1;
    let (gk, ga, gb) = if g1.support().is_some() {
        (
            g1.integrate_against(|r| r.powf(-1.5), "K_III displacement-jump term")?,
            g1.integrate_against(|r| r.powf(-2.5), "A_III displacement-jump term")?,
            g1.integrate_against(|r| r.powf(-3.5), "B_III displacement-jump term")?,
        )
    } else {
        (0.0, 0.0, 0.0)
    };
    Ok(TipAsymptotics {
        k3: k0(material, load) + m * gk,
        a3: SQRT_2_OVER_PI * tip_moment(material, load, -1.5) + 3.0 * m * ga,
        b3: -SQRT_2_OVER_PI * tip_moment(material, load, -2.5) + 5.0 * m * gb,
    })
}

/// Coefficients of `I1`, `I2` in the face displacement, one pair per load
/// station: `(distance, c_I2, c_I1)`.
fn face_terms(eta: f64, load: &DecomposedLoad, face: Face) -> Vec<(f64, f64, f64)> {
    let s = face.sign();
    let mut out: Vec<(f64, f64, f64)> = Vec::new();
    let mut add = |d: f64, c2: f64, c1: f64| match out.iter_mut().find(|t| t.0 == d) {
        Some(t) => {
            t.1 += c2;
            t.2 += c1;
        }
        None => out.push((d, c2, c1)),
    };
    for p in &load.jump {
        add(
            p.distance(),
            0.5 * (1.0 - s * eta) * p.weight,
            -s * 0.5 * eta * p.weight,
        );
    }
    for p in &load.average {
        add(p.distance(), 0.0, -s * p.weight);
    }
    out
}

fn face_sum(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    face: Face,
    x1: f64,
    eval: impl Fn(f64, f64, f64, f64) -> Result<f64>,
) -> Result<f64> {
    if !(x1 < 0.0) {
        return Err(Error::Domain {
            what: "crack-face coordinate (must be negative)",
            value: x1,
        });
    }
    let mut total = 0.0;
    for (d, c2, c1) in face_terms(material.contrast(), load, face) {
        if d == -x1 {
            return Err(Error::AtLoadStation { x1 });
        }
        let beta = (d / -x1).ln();
        total += eval(beta, c2, c1, x1)?;
    }
    Ok(total)
}

/// `mu± u0±(x1)` on the crack face, `x1 < 0`:
///
/// ```text
/// sum_k (1 -+ eta)/2 [[p]]_k I2(beta_k) -+ (<p>_k + (eta/2) [[p]]_k) I1(beta_k),
/// beta_k = ln(d_k / -x1)
/// ```
pub fn face_displacement(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    face: Face,
    x1: f64,
) -> Result<f64> {
    face_sum(material, load, face, x1, |beta, c2, c1, _| {
        Ok(c2 * nz(c2, || i2(beta))? + c1 * nz(c1, || i1(beta))?)
    })
}

/// `d/dx1` of [`face_displacement`].
pub fn face_displacement_slope(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    face: Face,
    x1: f64,
) -> Result<f64> {
    face_sum(material, load, face, x1, |beta, c2, c1, x| {
        let d = c2 * nz(c2, || i2_prime(beta))? + c1 * nz(c1, || i1_prime(beta))?;
        Ok(-d / x)
    })
}

/// `d^2/dx1^2` of [`face_displacement`].
pub fn face_displacement_curvature(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    face: Face,
    x1: f64,
) -> Result<f64> {
    face_sum(material, load, face, x1, |beta, c2, c1, x| {
        let d2 = c2 * nz(c2, || Ok(i2_second(beta)? + i2_prime(beta)?))?
            + c1 * nz(c1, || Ok(i1_second(beta)? + i1_prime(beta)?))?;
        Ok(d2 / (x * x))
    })
}

// Skip the evaluation for zero coefficients so that `0 * inf` never appears.
fn nz(c: f64, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if c == 0.0 {
        Ok(0.0)
    } else {
        f()
    }
}

fn interface_point(x1: f64) -> Result<()> {
    if x1 > 0.0 && x1.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "interface coordinate (must be positive)",
            value: x1,
        })
    }
}

/// `[[du0/dx2]](x1) = du0+/dx2 - du0-/dx2` on the interface, `x1 > 0`:
///
/// ```text
/// -(1/mu+ - 1/mu-) x1^(-1) sum_k w_k I3(ln(d_k / x1)),   w = <p> + (eta/2) [[p]]
/// ```
pub fn interface_normal_jump(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    x1: f64,
) -> Result<f64> {
    interface_point(x1)?;
    let factor = 1.0 / material.mu_plus - 1.0 / material.mu_minus;
    if factor == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = load
        .tip_weights(material.contrast())
        .iter()
        .map(|p| p.weight * i3((p.distance() / x1).ln()))
        .sum();
    Ok(-factor * sum / x1)
}

/// `du0/dx1` along the interface (continuous across it), `x1 > 0`:
/// `-(1/(pi (mu+ + mu-))) sum_k [[p]]_k d_k / (x1 (x1 + d_k))`.
pub fn interface_tangential_slope(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    x1: f64,
) -> Result<f64> {
    interface_point(x1)?;
    let c = 1.0 / (PI * (material.mu_plus + material.mu_minus));
    Ok(-c
        * load
            .jump
            .iter()
            .map(|p| {
                let d = p.distance();
                p.weight * d / (x1 * (x1 + d))
            })
            .sum::<f64>())
}

/// `d^2u0/dx1^2` along the interface.
pub fn interface_tangential_curvature(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    x1: f64,
) -> Result<f64> {
    interface_point(x1)?;
    let c = 1.0 / (PI * (material.mu_plus + material.mu_minus));
    Ok(c * load
        .jump
        .iter()
        .map(|p| {
            let d = p.distance();
            let s = x1 * (x1 + d);
            p.weight * d * (2.0 * x1 + d) / (s * s)
        })
        .sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PointForce;

    fn load(a: f64, b: f64) -> DecomposedLoad {
        ThreePointLoad::new(a, b).decompose().unwrap()
    }

    #[test]
    fn constants() {
        assert!((SQRT_2_OVER_PI - (2.0 / PI).sqrt()).abs() < 1e-16);
        assert!((INV_SQRT_2PI - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-16);
    }

    #[test]
    fn k0_spot_values() {
        let homog = BimaterialSpec::homogeneous(1.0);
        let v = k0_point_loads(&homog, &ThreePointLoad::new(1.0, 0.0)).unwrap();
        assert!((v + SQRT_2_OVER_PI).abs() < 1e-15);

        let m = BimaterialSpec::from_contrast(0.5);
        let v = k0_point_loads(&m, &ThreePointLoad::new(1.0, 0.25)).unwrap();
        assert!((v + 0.802_784_342_900_233).abs() < 1e-14, "{v}");
        assert!((v + 0.802_783_7).abs() < 1e-6);
    }

    #[test]
    fn k0_independent_of_contrast_when_forces_coincide() {
        for eta in [-0.9, -0.2, 0.0, 0.7] {
            let m = BimaterialSpec::from_contrast(eta);
            let v = k0_point_loads(&m, &ThreePointLoad::new(2.0, 0.0)).unwrap();
            assert!((v + SQRT_2_OVER_PI / 2f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn k0_scales_with_force() {
        let m = BimaterialSpec::from_contrast(0.3);
        let one = k0_point_loads(&m, &ThreePointLoad::new(1.0, 0.2)).unwrap();
        let three = k0_point_loads(&m, &ThreePointLoad::with_force(3.0, 1.0, 0.2)).unwrap();
        assert!((three - 3.0 * one).abs() < 1e-15);
    }

    #[test]
    fn tip_coefficients_without_discontinuity() {
        let m = BimaterialSpec::homogeneous(1.0);
        let t = tip_asymptotics(&m, &load(1.0, 0.0), &InterfaceDiscontinuity::none()).unwrap();
        assert!((t.k3 + SQRT_2_OVER_PI).abs() < 1e-15);
        assert!((t.a3 - SQRT_2_OVER_PI).abs() < 1e-15);
        assert!((t.b3 + SQRT_2_OVER_PI).abs() < 1e-15);

        let m = BimaterialSpec::from_contrast(-0.4);
        let l = load(1.0, 0.3);
        let t = tip_asymptotics(&m, &l, &InterfaceDiscontinuity::none()).unwrap();
        assert_eq!(t.k3, k0(&m, &l));
    }

    #[test]
    fn traction_jump_does_not_enter_tip_coefficients() {
        let m = BimaterialSpec::from_contrast(0.6);
        let l = load(1.0, 0.2);
        let g1 = LineDensity::new(0.3, 0.6, |x| (x - 0.3) * (0.6 - x));
        let a = InterfaceDiscontinuity {
            g1: g1.clone(),
            g2: LineDensity::zero(),
        };
        let b = InterfaceDiscontinuity {
            g1,
            g2: LineDensity::new(0.1, 5.0, |x| x.sin() * 1e3),
        };
        assert_eq!(
            tip_asymptotics(&m, &l, &a).unwrap(),
            tip_asymptotics(&m, &l, &b).unwrap()
        );
    }

    #[test]
    fn discontinuity_touching_tip_is_rejected() {
        let m = BimaterialSpec::homogeneous(1.0);
        let disc = InterfaceDiscontinuity {
            g1: LineDensity::new(0.0, 1.0, |_| 1.0),
            g2: LineDensity::zero(),
        };
        assert!(matches!(
            tip_asymptotics(&m, &load(1.0, 0.0), &disc),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn homogeneous_symmetric_faces() {
        let m = BimaterialSpec::homogeneous(2.0);
        let l = load(1.0, 0.0);
        let beta = 2f64.ln();
        let up = face_displacement(&m, &l, Face::Upper, -0.5).unwrap();
        let down = face_displacement(&m, &l, Face::Lower, -0.5).unwrap();
        assert!((up + i1(beta).unwrap()).abs() < 1e-15);
        assert_eq!(up, -down);
    }

    #[test]
    fn face_displacement_rejects_bad_points() {
        let m = BimaterialSpec::from_contrast(0.5);
        let l = load(1.0, 0.25);
        assert!(matches!(
            face_displacement(&m, &l, Face::Upper, -0.75),
            Err(Error::AtLoadStation { .. })
        ));
        assert!(face_displacement(&m, &l, Face::Upper, 0.1).is_err());
    }

    #[test]
    fn face_derivatives_match_finite_differences() {
        let m = BimaterialSpec::from_contrast(0.5);
        let l = load(1.0, 0.25);
        for face in [Face::Upper, Face::Lower] {
            for x in [-0.4, -0.2, -0.9, -1.6] {
                let h = 1e-6;
                let u = |x| face_displacement(&m, &l, face, x).unwrap();
                let du = |x| face_displacement_slope(&m, &l, face, x).unwrap();
                let fd = (u(x + h) - u(x - h)) / (2.0 * h);
                assert!(
                    (du(x) - fd).abs() < 1e-7 * fd.abs().max(1.0),
                    "{face:?} {x}"
                );
                let fd2 = (du(x + h) - du(x - h)) / (2.0 * h);
                let d2 = face_displacement_curvature(&m, &l, face, x).unwrap();
                assert!((d2 - fd2).abs() < 1e-6 * fd2.abs().max(1.0), "{face:?} {x}");
            }
        }
    }

    #[test]
    fn opening_series_matches_displacements_near_tip() {
        let m = BimaterialSpec::new(0.7, 1.9);
        let l = load(1.0, 0.3);
        let t = tip_asymptotics(&m, &l, &InterfaceDiscontinuity::none()).unwrap();
        for r in [1e-3, 3e-3, 1e-2] {
            let up = face_displacement(&m, &l, Face::Upper, -r).unwrap() / m.mu_plus;
            let down = face_displacement(&m, &l, Face::Lower, -r).unwrap() / m.mu_minus;
            let remainder = (up - down - t.opening(&m, r)).abs();
            // Next term is O(r^(7/2)).
            assert!(remainder < 10.0 * r.powf(3.5), "r = {r}: {remainder:e}");
        }
    }

    #[test]
    fn interface_jump_vanishes_for_homogeneous_material() {
        let m = BimaterialSpec::homogeneous(3.0);
        for x in [0.1, 1.0, 7.0] {
            assert_eq!(interface_normal_jump(&m, &load(1.0, 0.2), x).unwrap(), 0.0);
        }
        assert!(interface_normal_jump(&m, &load(1.0, 0.2), 0.0).is_err());
    }

    #[test]
    fn interface_jump_far_field_decay() {
        let m = BimaterialSpec::from_contrast(0.5);
        let l = load(1.0, 0.2);
        let j1 = interface_normal_jump(&m, &l, 1e4).unwrap();
        let j2 = interface_normal_jump(&m, &l, 4e4).unwrap();
        let slope = (j2 / j1).abs().ln() / 4f64.ln();
        assert!((slope + 1.5).abs() < 1e-3, "{slope}");
    }

    #[test]
    fn interface_tangential_derivatives() {
        let m = BimaterialSpec::from_contrast(-0.3);
        let l = load(1.0, 0.25);
        let h = 1e-6;
        for x in [0.2, 0.5, 3.0] {
            let s = |x| interface_tangential_slope(&m, &l, x).unwrap();
            let fd = (s(x + h) - s(x - h)) / (2.0 * h);
            let c = interface_tangential_curvature(&m, &l, x).unwrap();
            assert!((c - fd).abs() < 1e-7 * fd.abs().max(1.0));
        }
        // A symmetric load produces no tangential shear on the interface.
        let sym = DecomposedLoad {
            average: vec![PointForce::new(1.0, -1.0)],
            jump: vec![],
        };
        assert_eq!(interface_tangential_slope(&m, &sym, 0.4).unwrap(), 0.0);
    }

    #[test]
    fn interface_slope_far_field() {
        // The three-point load has zero net force and zero first moment of
        // its jump, so the tangential slope decays like x1^-3.
        let m = BimaterialSpec::from_contrast(0.2);
        let l = load(1.0, 0.25);
        let a = interface_tangential_slope(&m, &l, 1e4).unwrap();
        let b = interface_tangential_slope(&m, &l, 2e4).unwrap();
        assert!(((a / b) - 8.0).abs() < 1e-2, "{}", a / b);
    }
}
