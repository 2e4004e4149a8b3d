//! First-order corrections to `K_III` from perturbed crack faces and a
//! perturbed interface.
//!
//! The general tool is [`sif_from_data`], the weight-function representation
//! of `K_III` for arbitrary crack-face tractions and interface jumps. The
//! face correction [`k1a`] and interface correction [`k1b`] are the same
//! formula specialised to the effective loads produced by the perturbation,
//! with one integration by parts (faces) or the closed form of the interface
//! jump (interface) already carried out.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{
    face_displacement, face_displacement_curvature, face_displacement_slope, interface_normal_jump,
    interface_tangential_curvature, interface_tangential_slope, k0, tip_asymptotics,
    InterfaceDiscontinuity, LineDensity, INV_SQRT_2PI,
};
use crate::model::{
    BimaterialSpec, BumpProfile, BumpSite, DecomposedLoad, Face, PointForce, Scenario, SifBreakdown,
};
use crate::quadrature::{EndpointBehavior, QuadratureRequest};
use crate::special::i3;

/// Mode III weight functions of the interfacial crack.
///
/// Every weight function is a real amplitude times the common phase
/// `1 - i`. The limit that extracts `K_III` multiplies by `1 + i`, so only
/// `(1 + i)(1 - i) = 2` survives and all arithmetic stays real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightFunctionSet {
    pub eta: f64,
    pub effective_modulus: f64,
}

impl WeightFunctionSet {
    pub fn new(material: &BimaterialSpec) -> Self {
        Self {
            eta: material.contrast(),
            effective_modulus: material.effective_modulus(),
        }
    }

    pub fn phase() -> Complex64 {
        Complex64::new(1.0, -1.0)
    }

    /// Real part of `(1 + i) * phase()`.
    pub fn limit_factor() -> f64 {
        (Complex64::new(1.0, 1.0) * Self::phase()).re
    }

    /// Amplitude of `[[U]](x1)`: `x1^(-1/2) / sqrt(2 pi)` ahead of the tip,
    /// zero behind it.
    pub fn symmetric_jump(&self, x1: f64) -> f64 {
        if x1 > 0.0 {
            INV_SQRT_2PI / x1.sqrt()
        } else {
            0.0
        }
    }

    /// Amplitude of `<U>(x1) = (eta/2) [[U]](x1)`.
    pub fn skew_average(&self, x1: f64) -> f64 {
        0.5 * self.eta * self.symmetric_jump(x1)
    }

    /// Amplitude of `<Sigma>(x1)`: `M (-x1)^(-3/2) / (2 sqrt(2 pi))` behind
    /// the tip, zero ahead of it.
    pub fn traction_average(&self, x1: f64) -> f64 {
        if x1 < 0.0 {
            0.5 * self.effective_modulus * INV_SQRT_2PI * (-x1).powf(-1.5)
        } else {
            0.0
        }
    }
}

/// A load on the crack faces: point masses plus densities, all on `x1 < 0`.
#[derive(Clone, Debug, Default)]
pub struct LineLoad {
    pub points: Vec<PointForce>,
    pub densities: Vec<LineDensity>,
}

impl LineLoad {
    pub fn points(points: Vec<PointForce>) -> Self {
        Self {
            points,
            densities: Vec::new(),
        }
    }

    pub fn densities(densities: Vec<LineDensity>) -> Self {
        Self {
            points: Vec::new(),
            densities,
        }
    }

    /// `int load(x1) kernel(x1) dx1`.
    fn pair(&self, kernel: impl Fn(f64) -> f64 + Copy, context: &'static str) -> Result<f64> {
        let mut total = 0.0;
        for p in &self.points {
            if !(p.position < 0.0) {
                return Err(Error::Domain {
                    what: "crack-face point load position",
                    value: p.position,
                });
            }
            total += p.weight * kernel(p.position);
        }
        for d in &self.densities {
            if let Some((_, hi)) = d.support() {
                if !(hi < 0.0) {
                    return Err(Error::Domain {
                        what: "crack-face load support",
                        value: hi,
                    });
                }
            }
            total += d.integrate_against(kernel, context)?;
        }
        Ok(total)
    }
}

/// Input of the weight-function formula for `K_III`.
#[derive(Clone, Debug)]
pub struct SifData {
    /// `<sigma>` on the crack faces.
    pub sigma_avg_minus: LineLoad,
    /// `[[sigma]]` on the crack faces.
    pub sigma_jump_minus: LineLoad,
    /// `[[u]]` prescribed along the interface.
    pub u_jump_plus: LineDensity,
    /// `[[sigma]]` prescribed along the interface. It is paired with `<U>`
    /// on the crack faces, where `<U>` vanishes, so it is never read.
    pub sigma_jump_plus: LineDensity,
}

impl SifData {
    pub fn faces(sigma_avg_minus: LineLoad, sigma_jump_minus: LineLoad) -> Self {
        Self {
            sigma_avg_minus,
            sigma_jump_minus,
            u_jump_plus: LineDensity::zero(),
            sigma_jump_plus: LineDensity::zero(),
        }
    }
}

/// `K_III` from prescribed crack-face loads and interface jumps:
///
/// ```text
/// K = M/sqrt(2 pi) int_0^inf [[u]] x^(-3/2) dx
///   - sqrt(2/pi) int_-inf^0 (<sigma> + (eta/2) [[sigma]]) (-x)^(-1/2) dx
/// ```
pub fn sif_from_data(material: &BimaterialSpec, data: &SifData) -> Result<f64> {
    let w = WeightFunctionSet::new(material);
    let two = WeightFunctionSet::limit_factor();

    // Crack-face pairing with [[U]](-x1) and <U>(-x1).
    let avg = data
        .sigma_avg_minus
        .pair(|x| w.symmetric_jump(-x), "crack-face average load")?;
    let jump = data
        .sigma_jump_minus
        .pair(|x| w.skew_average(-x), "crack-face load jump")?;

    // Interface pairing with <Sigma>(-x1).
    let u = &data.u_jump_plus;
    let opening = match u.support() {
        None => 0.0,
        Some((lo, _)) if !(lo > 0.0) => {
            return Err(Error::Domain {
                what: "interface displacement jump support",
                value: lo,
            })
        }
        Some(_) => {
            u.integrate_against(|x| w.traction_average(-x), "interface displacement jump")?
        }
    };
    Ok(-two * (avg + jump) + two * opening)
}

/// Effective boundary data induced by the perturbation at first order.
///
/// `f_plus`, `f_minus` are `mu psi du0/dx1` on each face (the face traction
/// is their derivative, held in `f_plus_slope`, `f_minus_slope`); `g` is the
/// interface displacement jump `-phi [[du0/dx2]]` and `h` the interface
/// traction jump `(mu+ - mu-) d/dx1(phi du0/dx1)`.
#[derive(Clone, Debug)]
pub struct EffectiveLoads {
    pub f_plus: LineDensity,
    pub f_minus: LineDensity,
    pub f_plus_slope: LineDensity,
    pub f_minus_slope: LineDensity,
    pub g: LineDensity,
    pub h: LineDensity,
}

fn face_density(
    material: BimaterialSpec,
    load: &DecomposedLoad,
    bump: Option<BumpProfile>,
    face: Face,
    slope: bool,
) -> LineDensity {
    let Some(bump) = bump else {
        return LineDensity::zero();
    };
    let (lo, hi) = bump.support();
    let hints = endpoint_hints(load, lo, hi);
    let load = load.clone();
    let density = move |x: f64| {
        let du = face_displacement_slope(&material, &load, face, x).unwrap_or(f64::NAN);
        if slope {
            let d2u = face_displacement_curvature(&material, &load, face, x).unwrap_or(f64::NAN);
            bump.slope(x) * du + bump.value(x) * d2u
        } else {
            bump.value(x) * du
        }
    };
    LineDensity::new(lo, hi, density).with_endpoints(hints[0], hints[1])
}

/// Logarithmic grading at a support end that sits within `1e-3` of a load
/// station, where the face displacement has a log singularity nearby.
fn endpoint_hints(load: &DecomposedLoad, lo: f64, hi: f64) -> [EndpointBehavior; 2] {
    let near = |x: f64| {
        load.stations()
            .iter()
            .any(|s| (s - x).abs() < 1e-3 * s.abs())
    };
    let hint = |x| {
        if near(x) {
            EndpointBehavior::Logarithmic
        } else {
            EndpointBehavior::Smooth
        }
    };
    [hint(lo), hint(hi)]
}

/// Build [`EffectiveLoads`] for a validated scenario.
pub fn effective_loads(scenario: &Scenario) -> Result<EffectiveLoads> {
    let material = *scenario.material();
    let load = scenario.decomposed_load();
    let upper = scenario.face_bump(Face::Upper).copied();
    let lower = scenario.face_bump(Face::Lower).copied();
    let (g, h) = match scenario.bump(BumpSite::Interface).copied() {
        None => (LineDensity::zero(), LineDensity::zero()),
        Some(phi) => {
            let (lo, hi) = phi.support();
            let l = load.clone();
            let g = LineDensity::new(lo, hi, move |x| {
                -phi.value(x) * interface_normal_jump(&material, &l, x).unwrap_or(f64::NAN)
            });
            let l = load.clone();
            let dmu = material.mu_plus - material.mu_minus;
            let h = LineDensity::new(lo, hi, move |x| {
                let du = interface_tangential_slope(&material, &l, x).unwrap_or(f64::NAN);
                let d2u = interface_tangential_curvature(&material, &l, x).unwrap_or(f64::NAN);
                dmu * (phi.slope(x) * du + phi.value(x) * d2u)
            });
            (g, h)
        }
    };
    Ok(EffectiveLoads {
        f_plus: face_density(material, load, upper, Face::Upper, false),
        f_minus: face_density(material, load, lower, Face::Lower, false),
        f_plus_slope: face_density(material, load, upper, Face::Upper, true),
        f_minus_slope: face_density(material, load, lower, Face::Lower, true),
        g,
        h,
    })
}

fn unit(bump: &BumpProfile) -> BumpProfile {
    BumpProfile {
        amplitude: 1.0,
        ..*bump
    }
}

fn check_face_bump(bump: &BumpProfile) -> Result<Face> {
    let face = bump.site.face().ok_or(Error::Domain {
        what: "face correction given an interface profile at centre",
        value: bump.center,
    })?;
    let (lo, hi) = bump.support();
    if !(hi < 0.0) {
        return Err(Error::Domain {
            what: "crack-face profile support",
            value: hi,
        });
    }
    if !(lo.is_finite() && bump.half_width > 0.0) {
        return Err(Error::Domain {
            what: "crack-face profile half-width",
            value: bump.half_width,
        });
    }
    Ok(face)
}

/// Crack-face correction `K_III^1(a)`:
///
/// ```text
/// -(1/sqrt(2 pi)) sum_± (1 ± eta)/2 int mu± u0±(x1) d/dx1[(-x1)^(-3/2) psi±(x1)] dx1
/// ```
///
/// with `d/dx1[(-x)^(-3/2) psi] = (-x)^(-5/2) ((3/2) psi + (-x) psi')`. The
/// integral is taken for a unit amplitude and scaled, so the result is
/// exactly linear in each amplitude.
pub fn k1a(material: &BimaterialSpec, load: &DecomposedLoad, bumps: &[BumpProfile]) -> Result<f64> {
    let eta = material.contrast();
    let mut total = 0.0;
    for bump in bumps.iter().filter(|b| b.site != BumpSite::Interface) {
        let face = check_face_bump(bump)?;
        if bump.amplitude == 0.0 {
            continue;
        }
        let psi = unit(bump);
        let (lo, hi) = psi.support();
        let hints = endpoint_hints(load, lo, hi);
        let integrand = |x: f64| {
            let r = -x;
            let mu_u = face_displacement(material, load, face, x).unwrap_or(f64::NAN);
            mu_u * r.powf(-2.5) * (1.5 * psi.value(x) + r * psi.slope(x))
        };
        let integral = QuadratureRequest::new(integrand, lo, hi)
            .lower(hints[0])
            .upper(hints[1])
            .value("crack-face correction")?;
        let weight = 0.5 * (1.0 + face.sign() * eta);
        total += weight * bump.amplitude * integral;
    }
    Ok(-INV_SQRT_2PI * total)
}

/// Interface correction `K_III^1(b)`:
///
/// ```text
/// (eta/sqrt(2 pi)) int phi(x1) x1^(-5/2) sum_k w_k I3(ln(d_k/x1)) dx1,
/// w = <p> + (eta/2) [[p]]
/// ```
///
/// Exactly zero for `eta = 0`; exactly linear in the amplitude.
pub fn k1b(material: &BimaterialSpec, load: &DecomposedLoad, phi: &BumpProfile) -> Result<f64> {
    let (lo, hi) = phi.support();
    if phi.site != BumpSite::Interface || !(lo > 0.0) {
        return Err(Error::Domain {
            what: "interface profile support",
            value: lo,
        });
    }
    let eta = material.contrast();
    if eta == 0.0 || phi.amplitude == 0.0 {
        return Ok(0.0);
    }
    let weights = load.tip_weights(eta);
    let shape = unit(phi);
    let integrand = |x: f64| {
        let s: f64 = weights
            .iter()
            .map(|p| p.weight * i3((p.distance() / x).ln()))
            .sum();
        shape.value(x) * x.powf(-2.5) * s
    };
    let integral = QuadratureRequest::new(integrand, lo, hi).value("interface correction")?;
    Ok(eta * INV_SQRT_2PI * phi.amplitude * integral)
}

/// `K_III^1(a)` by feeding the face tractions `d f±/dx1` straight into
/// [`sif_from_data`], without integrating by parts.
pub fn k1a_via_sif_formula(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    bumps: &[BumpProfile],
) -> Result<f64> {
    let mut avg = Vec::new();
    let mut jump = Vec::new();
    for bump in bumps.iter().filter(|b| b.site != BumpSite::Interface) {
        let face = check_face_bump(bump)?;
        let slope = face_density(*material, load, Some(*bump), face, true);
        let (lo, hi) = bump.support();
        let hints = slope.endpoints();
        let s = face.sign();
        let half = slope.clone();
        avg.push(
            LineDensity::new(lo, hi, move |x| 0.5 * half.eval(x))
                .with_endpoints(hints[0], hints[1]),
        );
        jump.push(
            LineDensity::new(lo, hi, move |x| s * slope.eval(x)).with_endpoints(hints[0], hints[1]),
        );
    }
    sif_from_data(
        material,
        &SifData::faces(LineLoad::densities(avg), LineLoad::densities(jump)),
    )
}

/// `K_III^1(b)` through [`sif_from_data`] with the displacement jump `g`.
pub fn k1b_via_sif_formula(
    material: &BimaterialSpec,
    load: &DecomposedLoad,
    phi: &BumpProfile,
) -> Result<f64> {
    let (lo, hi) = phi.support();
    let (m, l, p) = (*material, load.clone(), *phi);
    let g = LineDensity::new(lo, hi, move |x| {
        -p.value(x) * interface_normal_jump(&m, &l, x).unwrap_or(f64::NAN)
    });
    sif_from_data(
        material,
        &SifData {
            u_jump_plus: g,
            ..SifData::faces(LineLoad::default(), LineLoad::default())
        },
    )
}

/// All first-order quantities for a validated scenario.
pub fn sif_breakdown(scenario: &Scenario, epsilon: f64) -> Result<SifBreakdown> {
    let material = scenario.material();
    let load = scenario.decomposed_load();
    let bumps: Vec<BumpProfile> = scenario.bumps().copied().collect();
    let tip = tip_asymptotics(material, load, &InterfaceDiscontinuity::none())?;
    let k1b = match scenario.bump(BumpSite::Interface) {
        Some(phi) => k1b(material, load, phi)?,
        None => 0.0,
    };
    Ok(SifBreakdown {
        k0: k0(material, load),
        k1a: k1a(material, load, &bumps)?,
        k1b,
        epsilon,
        a_coeff: tip.a3,
        b_coeff: tip.b3,
    })
}
