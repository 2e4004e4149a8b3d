//! Domain types shared by every other module: the bimaterial, crack-face
//! point loads and their symmetric/skew-symmetric split, the quartic
//! perturbation profiles, and scenario validation.
//!
//! Coordinates are signed throughout: the crack faces occupy `x1 < 0`, the
//! interface `x1 > 0`, and the crack tip sits at the origin.

use std::fmt;

use crate::error::{Error, Result};

/// Shear moduli of the upper (`x2 > 0`) and lower (`x2 < 0`) half-planes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BimaterialSpec {
    pub mu_plus: f64,
    pub mu_minus: f64,
}

impl BimaterialSpec {
    pub fn new(mu_plus: f64, mu_minus: f64) -> Self {
        Self { mu_plus, mu_minus }
    }

    pub fn homogeneous(mu: f64) -> Self {
        Self::new(mu, mu)
    }

    /// A material pair with the given contrast and `mu_plus + mu_minus = 2`.
    ///
    /// Every stress intensity factor in this crate depends on the moduli only
    /// through the contrast, so this is the natural constructor for sweeps.
    pub fn from_contrast(eta: f64) -> Self {
        Self::new(1.0 - eta, 1.0 + eta)
    }

    /// The contrast parameter `eta = (mu_minus - mu_plus) / (mu_plus + mu_minus)`.
    pub fn contrast(&self) -> f64 {
        (self.mu_minus - self.mu_plus) / (self.mu_plus + self.mu_minus)
    }

    /// `mu_plus * mu_minus / (mu_plus + mu_minus)`, the modulus that multiplies
    /// interface displacement jumps in the stress intensity factor.
    pub fn effective_modulus(&self) -> f64 {
        self.mu_plus * self.mu_minus / (self.mu_plus + self.mu_minus)
    }

    pub fn modulus(&self, face: Face) -> f64 {
        match face {
            Face::Upper => self.mu_plus,
            Face::Lower => self.mu_minus,
        }
    }

    fn check(&self, out: &mut Vec<Violation>) {
        for (which, mu) in [("mu_plus", self.mu_plus), ("mu_minus", self.mu_minus)] {
            if !(mu.is_finite() && mu > 0.0) {
                out.push(Violation::NonPositiveModulus { which, value: mu });
            }
        }
        let eta = self.contrast();
        if !(eta > -1.0 && eta < 1.0) {
            out.push(Violation::ContrastOutOfRange { eta });
        }
    }
}

/// One of the two crack faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Face {
    Upper,
    Lower,
}

impl Face {
    /// `+1` for the upper face, `-1` for the lower one.
    pub fn sign(self) -> f64 {
        match self {
            Face::Upper => 1.0,
            Face::Lower => -1.0,
        }
    }
}

/// A concentrated force: a weighted Dirac mass at a signed position.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointForce {
    pub weight: f64,
    pub position: f64,
}

impl PointForce {
    pub fn new(weight: f64, position: f64) -> Self {
        Self { weight, position }
    }

    /// Distance from the crack tip.
    pub fn distance(&self) -> f64 {
        self.position.abs()
    }
}

/// Crack-face loading split into its average `<p>` and jump `[[p]]`.
///
/// Both lists are aggregated by station (one entry per distinct position) and
/// carry no zero weights.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DecomposedLoad {
    pub average: Vec<PointForce>,
    pub jump: Vec<PointForce>,
}

impl DecomposedLoad {
    /// The combination `<p> + (eta/2) [[p]]` that drives the crack-tip
    /// singularity, aggregated by station.
    pub fn tip_weights(&self, eta: f64) -> Vec<PointForce> {
        let mut out: Vec<PointForce> = self.average.clone();
        for j in &self.jump {
            let w = 0.5 * eta * j.weight;
            match out.iter_mut().find(|p| p.position == j.position) {
                Some(p) => p.weight += w,
                None => out.push(PointForce::new(w, j.position)),
            }
        }
        out
    }

    /// Reassemble the face loads: `p+ = <p> + [[p]]/2`, `p- = <p> - [[p]]/2`.
    pub fn recombine(&self) -> (Vec<PointForce>, Vec<PointForce>) {
        let stations = station_union(&[&self.average, &self.jump]);
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for x in stations {
            let avg = weight_at(&self.average, x);
            let jump = weight_at(&self.jump, x);
            push_nonzero(&mut plus, avg + 0.5 * jump, x);
            push_nonzero(&mut minus, avg - 0.5 * jump, x);
        }
        (plus, minus)
    }

    /// Every distinct load position, in order of first appearance.
    pub fn stations(&self) -> Vec<f64> {
        station_union(&[&self.average, &self.jump])
    }

    /// Multiply every weight by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let scale = |v: &[PointForce]| {
            v.iter()
                .map(|p| PointForce::new(p.weight * factor, p.position))
                .collect()
        };
        Self {
            average: scale(&self.average),
            jump: scale(&self.jump),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.average.is_empty() && self.jump.is_empty()
    }
}

fn station_union(lists: &[&[PointForce]]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for p in lists.iter().flat_map(|l| l.iter()) {
        if !out.contains(&p.position) {
            out.push(p.position);
        }
    }
    out
}

fn weight_at(list: &[PointForce], x: f64) -> f64 {
    list.iter()
        .filter(|p| p.position == x)
        .map(|p| p.weight)
        .sum()
}

fn push_nonzero(out: &mut Vec<PointForce>, weight: f64, position: f64) {
    if weight != 0.0 {
        out.push(PointForce::new(weight, position));
    }
}

/// Split upper/lower face loads into `<p> = (p+ + p-)/2` and `[[p]] = p+ - p-`.
///
/// Forces at the same position are merged first. Every position must lie on
/// the crack faces (`x1 < 0`).
pub fn decompose_load(p_plus: &[PointForce], p_minus: &[PointForce]) -> Result<DecomposedLoad> {
    for p in p_plus.iter().chain(p_minus) {
        if !(p.weight.is_finite() && p.position.is_finite()) {
            return Err(Error::NonFiniteLoad {
                weight: p.weight,
                position: p.position,
            });
        }
        if p.position >= 0.0 {
            return Err(Error::LoadOffFace(p.position));
        }
    }
    let mut out = DecomposedLoad::default();
    for x in station_union(&[p_plus, p_minus]) {
        let up = weight_at(p_plus, x);
        let down = weight_at(p_minus, x);
        push_nonzero(&mut out.average, 0.5 * (up + down), x);
        push_nonzero(&mut out.jump, up - down, x);
    }
    Ok(out)
}

/// Self-balanced three-point loading: a force `F` on the upper face at
/// distance `a` behind the tip, and two forces `F/2` on the lower face at
/// distances `a - b` and `a + b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThreePointLoad {
    pub force: f64,
    pub a: f64,
    pub b: f64,
}

impl ThreePointLoad {
    /// Unit force.
    pub fn new(a: f64, b: f64) -> Self {
        Self { force: 1.0, a, b }
    }

    pub fn with_force(force: f64, a: f64, b: f64) -> Self {
        Self { force, a, b }
    }

    /// `(p+, p-)` as point-force lists.
    pub fn face_loads(&self) -> (Vec<PointForce>, Vec<PointForce>) {
        let f = self.force;
        (
            vec![PointForce::new(f, -self.a)],
            vec![
                PointForce::new(0.5 * f, -(self.a + self.b)),
                PointForce::new(0.5 * f, -(self.a - self.b)),
            ],
        )
    }

    pub fn decompose(&self) -> Result<DecomposedLoad> {
        let (plus, minus) = self.face_loads();
        decompose_load(&plus, &minus)
    }

    fn check(&self, out: &mut Vec<Violation>) {
        if !(self.force.is_finite() && self.force != 0.0) {
            out.push(Violation::InvalidForce { force: self.force });
        }
        if !(self.a.is_finite() && self.a > 0.0) {
            out.push(Violation::NonPositiveLoadDistance { a: self.a });
        }
        if !(self.b.is_finite() && self.b >= 0.0) {
            out.push(Violation::NegativeLoadOffset { b: self.b });
        }
        if self.b >= self.a {
            out.push(Violation::LoadOffsetTooLarge {
                a: self.a,
                b: self.b,
            });
        }
    }
}

/// Which boundary a perturbation profile deforms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BumpSite {
    UpperFace,
    LowerFace,
    Interface,
}

impl BumpSite {
    pub fn face(self) -> Option<Face> {
        match self {
            BumpSite::UpperFace => Some(Face::Upper),
            BumpSite::LowerFace => Some(Face::Lower),
            BumpSite::Interface => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BumpSite::UpperFace => "upper face",
            BumpSite::LowerFace => "lower face",
            BumpSite::Interface => "interface",
        }
    }
}

/// Quartic bump `A (1 - t^2)^2` with `t = (x1 - x_c) / d`, zero outside
/// `|t| <= 1`.
///
/// On the faces the centre is `x_c = -c` and the lower-face profile carries an
/// extra minus sign, so equal amplitudes on both faces open the crack
/// symmetrically. On the interface the centre is `x_c = +c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BumpProfile {
    pub amplitude: f64,
    pub center: f64,
    pub half_width: f64,
    pub site: BumpSite,
}

impl BumpProfile {
    pub fn new(site: BumpSite, amplitude: f64, center: f64, half_width: f64) -> Self {
        Self {
            amplitude,
            center,
            half_width,
            site,
        }
    }

    pub fn upper(amplitude: f64, center: f64, half_width: f64) -> Self {
        Self::new(BumpSite::UpperFace, amplitude, center, half_width)
    }

    pub fn lower(amplitude: f64, center: f64, half_width: f64) -> Self {
        Self::new(BumpSite::LowerFace, amplitude, center, half_width)
    }

    pub fn interface(amplitude: f64, center: f64, half_width: f64) -> Self {
        Self::new(BumpSite::Interface, amplitude, center, half_width)
    }

    /// Signed coordinate of the bump centre.
    pub fn midpoint(&self) -> f64 {
        match self.site {
            BumpSite::Interface => self.center,
            _ => -self.center,
        }
    }

    /// Closed support `[lo, hi]` in signed coordinates.
    pub fn support(&self) -> (f64, f64) {
        let m = self.midpoint();
        (m - self.half_width, m + self.half_width)
    }

    fn signed_amplitude(&self) -> f64 {
        match self.site {
            BumpSite::LowerFace => -self.amplitude,
            _ => self.amplitude,
        }
    }

    pub fn value(&self, x1: f64) -> f64 {
        let t = (x1 - self.midpoint()) / self.half_width;
        if t.abs() > 1.0 {
            return 0.0;
        }
        let q = 1.0 - t * t;
        self.signed_amplitude() * q * q
    }

    /// Exact first derivative.
    pub fn slope(&self, x1: f64) -> f64 {
        let t = (x1 - self.midpoint()) / self.half_width;
        if t.abs() > 1.0 {
            return 0.0;
        }
        -4.0 * self.signed_amplitude() * t * (1.0 - t * t) / self.half_width
    }

    /// `integral of the profile over its support`, i.e. `(16/15) A d` with the
    /// site sign applied.
    pub fn area(&self) -> f64 {
        16.0 / 15.0 * self.signed_amplitude() * self.half_width
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            amplitude: self.amplitude * factor,
            ..*self
        }
    }
}

/// Zeroth-order SIF, its first-order corrections and the higher tip
/// coefficients of the unperturbed field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SifBreakdown {
    pub k0: f64,
    pub k1a: f64,
    pub k1b: f64,
    pub epsilon: f64,
    pub a_coeff: f64,
    pub b_coeff: f64,
}

impl SifBreakdown {
    pub fn k1(&self) -> f64 {
        self.k1a + self.k1b
    }

    /// `K0 + epsilon (K1a + K1b)`, correct to `O(epsilon^2)`.
    pub fn assembled(&self) -> f64 {
        self.k0 + self.epsilon * self.k1()
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Self {
        Self { epsilon, ..*self }
    }
}

/// One violated constraint found by [`validate_scenario`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    NonPositiveModulus {
        which: &'static str,
        value: f64,
    },
    ContrastOutOfRange {
        eta: f64,
    },
    InvalidForce {
        force: f64,
    },
    NonPositiveLoadDistance {
        a: f64,
    },
    NegativeLoadOffset {
        b: f64,
    },
    LoadOffsetTooLarge {
        a: f64,
        b: f64,
    },
    NonFiniteBump {
        site: BumpSite,
    },
    DegenerateBump {
        site: BumpSite,
        half_width: f64,
    },
    BumpTouchesTip {
        site: BumpSite,
        center: f64,
        half_width: f64,
    },
    BumpOverlapsLoad {
        site: BumpSite,
        extent: f64,
        limit: f64,
    },
    DuplicateBump {
        site: BumpSite,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NonPositiveModulus { which, value } => {
                write!(f, "{which} = {value} must be positive and finite")
            }
            ContrastOutOfRange { eta } => write!(f, "contrast eta = {eta} is outside (-1, 1)"),
            InvalidForce { force } => write!(f, "load force F = {force} must be finite and nonzero"),
            NonPositiveLoadDistance { a } => write!(f, "load distance a = {a} must be positive"),
            NegativeLoadOffset { b } => write!(f, "load offset b = {b} must be non-negative"),
            LoadOffsetTooLarge { a, b } => {
                write!(f, "load offset b = {b} must be smaller than a = {a}")
            }
            NonFiniteBump { site } => write!(f, "{} bump has non-finite parameters", site.name()),
            DegenerateBump { site, half_width } => write!(
                f,
                "{} bump half-width d = {half_width} must be positive",
                site.name()
            ),
            BumpTouchesTip {
                site,
                center,
                half_width,
            } => write!(
                f,
                "{} bump support reaches the crack tip: c - d = {} must be > 0",
                site.name(),
                center - half_width
            ),
            BumpOverlapsLoad {
                site,
                extent,
                limit,
            } => write!(
                f,
                "{} bump support is not separated from the load: c + d = {extent} must be < a - b = {limit}",
                site.name()
            ),
            DuplicateBump { site } => write!(f, "more than one {} bump", site.name()),
        }
    }
}

/// Every constraint violated by a scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ValidationReport {}

/// A validated problem: material, load and up to one bump per boundary.
///
/// Only [`validate_scenario`] builds one, so downstream evaluators can rely on
/// every separation constraint holding strictly.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    material: BimaterialSpec,
    load: ThreePointLoad,
    decomposed: DecomposedLoad,
    upper: Option<BumpProfile>,
    lower: Option<BumpProfile>,
    interface: Option<BumpProfile>,
}

impl Scenario {
    pub fn material(&self) -> &BimaterialSpec {
        &self.material
    }

    pub fn contrast(&self) -> f64 {
        self.material.contrast()
    }

    pub fn load(&self) -> &ThreePointLoad {
        &self.load
    }

    pub fn decomposed_load(&self) -> &DecomposedLoad {
        &self.decomposed
    }

    pub fn bump(&self, site: BumpSite) -> Option<&BumpProfile> {
        match site {
            BumpSite::UpperFace => self.upper.as_ref(),
            BumpSite::LowerFace => self.lower.as_ref(),
            BumpSite::Interface => self.interface.as_ref(),
        }
    }

    pub fn face_bump(&self, face: Face) -> Option<&BumpProfile> {
        match face {
            Face::Upper => self.upper.as_ref(),
            Face::Lower => self.lower.as_ref(),
        }
    }

    pub fn bumps(&self) -> impl Iterator<Item = &BumpProfile> {
        self.upper
            .iter()
            .chain(self.lower.iter())
            .chain(self.interface.iter())
    }
}

/// Check every invariant of the inputs and build a [`Scenario`].
///
/// Separation constraints are strict: a face bump must satisfy
/// `0 < c - d` and `c + d < a - b`, an interface bump `0 < c - d`.
pub fn validate_scenario(
    material: BimaterialSpec,
    load: ThreePointLoad,
    bumps: &[BumpProfile],
) -> std::result::Result<Scenario, ValidationReport> {
    let mut violations = Vec::new();
    material.check(&mut violations);
    load.check(&mut violations);

    let mut upper = None;
    let mut lower = None;
    let mut interface = None;
    for bump in bumps {
        let slot = match bump.site {
            BumpSite::UpperFace => &mut upper,
            BumpSite::LowerFace => &mut lower,
            BumpSite::Interface => &mut interface,
        };
        if slot.is_some() {
            violations.push(Violation::DuplicateBump { site: bump.site });
            continue;
        }
        *slot = Some(*bump);

        let site = bump.site;
        if ![bump.amplitude, bump.center, bump.half_width]
            .iter()
            .all(|v| v.is_finite())
        {
            violations.push(Violation::NonFiniteBump { site });
            continue;
        }
        if bump.half_width <= 0.0 {
            violations.push(Violation::DegenerateBump {
                site,
                half_width: bump.half_width,
            });
            continue;
        }
        if bump.center - bump.half_width <= 0.0 {
            violations.push(Violation::BumpTouchesTip {
                site,
                center: bump.center,
                half_width: bump.half_width,
            });
        }
        if site != BumpSite::Interface {
            let extent = bump.center + bump.half_width;
            let limit = load.a - load.b;
            if extent >= limit {
                violations.push(Violation::BumpOverlapsLoad {
                    site,
                    extent,
                    limit,
                });
            }
        }
    }

    if !violations.is_empty() {
        return Err(ValidationReport { violations });
    }
    let decomposed = load
        .decompose()
        .expect("validated load lies on the crack faces");
    Ok(Scenario {
        material,
        load,
        decomposed,
        upper,
        lower,
        interface,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_decomposition() {
        let load = ThreePointLoad::new(1.0, 0.25);
        let d = load.decompose().unwrap();
        assert_eq!(
            d.average,
            vec![
                PointForce::new(0.5, -1.0),
                PointForce::new(0.25, -1.25),
                PointForce::new(0.25, -0.75)
            ]
        );
        assert_eq!(
            d.jump,
            vec![
                PointForce::new(1.0, -1.0),
                PointForce::new(-0.5, -1.25),
                PointForce::new(-0.5, -0.75)
            ]
        );
    }

    #[test]
    fn symmetric_load_has_no_jump() {
        let p = [PointForce::new(1.0, -1.0)];
        let d = decompose_load(&p, &p).unwrap();
        assert!(d.jump.is_empty());
        assert_eq!(d.average, vec![PointForce::new(1.0, -1.0)]);
    }

    #[test]
    fn one_sided_load() {
        let d = decompose_load(&[PointForce::new(1.0, -1.0)], &[]).unwrap();
        assert_eq!(d.average, vec![PointForce::new(0.5, -1.0)]);
        assert_eq!(d.jump, vec![PointForce::new(1.0, -1.0)]);
    }

    #[test]
    fn load_on_interface_is_rejected() {
        let err = decompose_load(&[PointForce::new(1.0, 0.5)], &[]).unwrap_err();
        assert!(matches!(err, Error::LoadOffFace(x) if x == 0.5));
        assert!(decompose_load(&[], &[PointForce::new(1.0, 0.0)]).is_err());
    }

    #[test]
    fn zero_offset_collapses_to_one_station() {
        let d = ThreePointLoad::new(1.0, 0.0).decompose().unwrap();
        assert_eq!(d.average, vec![PointForce::new(1.0, -1.0)]);
        assert!(d.jump.is_empty());
    }

    #[test]
    fn tip_weights_match_three_point_formula() {
        let eta = 0.5;
        let w = ThreePointLoad::new(1.0, 0.25)
            .decompose()
            .unwrap()
            .tip_weights(eta);
        assert_eq!(w[0], PointForce::new((1.0 + eta) / 2.0, -1.0));
        assert_eq!(w[1], PointForce::new((1.0 - eta) / 4.0, -1.25));
        assert_eq!(w[2], PointForce::new((1.0 - eta) / 4.0, -0.75));
    }

    #[test]
    fn contrast_of_equal_moduli_is_zero() {
        assert_eq!(BimaterialSpec::homogeneous(3.7).contrast(), 0.0);
        let m = BimaterialSpec::new(1.0, 3.0);
        assert_eq!(m.contrast(), 0.5);
        assert_eq!(BimaterialSpec::new(3.0, 1.0).contrast(), -0.5);
    }

    #[test]
    fn bump_shapes() {
        let up = BumpProfile::upper(0.2, 0.4, 0.1);
        assert_eq!(up.support(), (-0.5, -0.30000000000000004));
        assert_eq!(up.value(-0.4), 0.2);
        let low = BumpProfile::lower(0.2, 0.4, 0.1);
        assert_eq!(low.value(-0.4), -0.2);
        let phi = BumpProfile::interface(0.2, 0.5, 0.25);
        assert_eq!(phi.support(), (0.25, 0.75));
        assert_eq!(phi.value(0.5), 0.2);
        for x in [0.25, 0.75] {
            assert_eq!(phi.value(x), 0.0);
            assert_eq!(phi.slope(x), 0.0);
        }
        assert_eq!(phi.value(0.1), 0.0);
        assert_eq!(phi.slope(0.9), 0.0);
    }

    #[test]
    fn bump_slope_matches_finite_difference() {
        let b = BumpProfile::lower(-0.3, 0.45, 0.2);
        let h = 1e-6;
        for x in [-0.6, -0.5, -0.45, -0.31] {
            let fd = (b.value(x + h) - b.value(x - h)) / (2.0 * h);
            assert!((fd - b.slope(x)).abs() < 1e-8, "x = {x}");
        }
    }

    #[test]
    fn table_1d_is_valid() {
        let s = validate_scenario(
            BimaterialSpec::homogeneous(1.0),
            ThreePointLoad::new(1.0, 0.25),
            &[BumpProfile::upper(0.1, 0.4, 0.1)],
        )
        .unwrap();
        assert!(s.bump(BumpSite::UpperFace).is_some());
        assert!(s.bump(BumpSite::LowerFace).is_none());
    }

    #[test]
    fn separation_boundary_is_rejected() {
        let err = validate_scenario(
            BimaterialSpec::homogeneous(1.0),
            ThreePointLoad::new(1.0, 0.2),
            &[BumpProfile::upper(0.2, 0.5, 0.3)],
        )
        .unwrap_err();
        assert_eq!(err.violations.len(), 1);
        assert!(matches!(
            err.violations[0],
            Violation::BumpOverlapsLoad {
                site: BumpSite::UpperFace,
                ..
            }
        ));
    }

    #[test]
    fn degenerate_bump_is_rejected() {
        let err = validate_scenario(
            BimaterialSpec::homogeneous(1.0),
            ThreePointLoad::new(1.0, 0.2),
            &[BumpProfile::interface(0.2, 0.5, 0.0)],
        )
        .unwrap_err();
        assert!(matches!(
            err.violations[0],
            Violation::DegenerateBump {
                site: BumpSite::Interface,
                ..
            }
        ));
    }

    #[test]
    fn report_lists_every_violation() {
        let err = validate_scenario(
            BimaterialSpec::new(-1.0, 1.0),
            ThreePointLoad::new(1.0, 1.5),
            &[
                BumpProfile::upper(0.1, 0.1, 0.2),
                BumpProfile::interface(0.1, 0.5, 0.1),
                BumpProfile::interface(0.1, 0.5, 0.1),
            ],
        )
        .unwrap_err();
        let v = &err.violations;
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::NonPositiveModulus { .. })));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::ContrastOutOfRange { .. })));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::LoadOffsetTooLarge { .. })));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::BumpTouchesTip { .. })));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::BumpOverlapsLoad { .. })));
        assert!(v
            .iter()
            .any(|v| matches!(v, Violation::DuplicateBump { .. })));
        assert!(err.to_string().contains("violation(s)"));
    }
}
