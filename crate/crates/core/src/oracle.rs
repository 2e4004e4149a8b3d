//! Slow, independent evaluations used to check the closed forms.
//!
//! Nothing in the production path calls into this module. The integrals here
//! are Fourier-type integrals over a half line whose amplitudes decay only
//! like `1/t`, so plain truncation converges far too slowly. Each integral is
//! split at a finite `T`: the head `[0, T]` is integrated on the real axis
//! with panels cut at the oscillation half-periods, and the tail is moved onto
//! a ray in the complex plane where the oscillating factor turns into an
//! exponential decay.

use std::f64::consts::{FRAC_1_PI, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureRequest;

const TAIL_DEPTH: f64 = 45.0;

/// `tanh(z)` without overflow for large `|Re z|`.
pub fn tanh(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return -tanh(-z);
    }
    let e = (-2.0 * z).exp();
    (1.0 - e) / (1.0 + e)
}

/// `tan(z) = -i tanh(i z)`, stable for large `|Im z|`.
pub fn tan(z: Complex64) -> Complex64 {
    -Complex64::i() * tanh(Complex64::i() * z)
}

/// `1/cos(z)`, stable for large `|Im z|`.
pub fn sec(z: Complex64) -> Complex64 {
    // 1/cos z = 2 e^{iz} / (e^{2iz} + 1), chosen so the exponential decays.
    let iz = Complex64::i() * z;
    let w = if iz.re <= 0.0 { iz } else { -iz };
    let e = w.exp();
    2.0 * e / (e * e + 1.0)
}

fn real_integral(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    period: Option<f64>,
    tol: f64,
) -> Result<f64> {
    let mut req = QuadratureRequest::new(f, lo, hi).tolerances(tol, 0.0);
    if let Some(p) = period {
        req = req.oscillation(p);
    }
    let r = req.integrate();
    if r.converged && r.value.is_finite() {
        Ok(r.value)
    } else {
        Err(Error::Oracle(format!(
            "quadrature on [{lo}, {hi}] stalled at {:e} (estimate {:e}, {} panels)",
            r.value, r.error_estimate, r.panel_count
        )))
    }
}

fn complex_integral(
    f: impl Fn(f64) -> Complex64,
    lo: f64,
    hi: f64,
    period: Option<f64>,
    tol: f64,
) -> Result<Complex64> {
    let re = real_integral(|t| f(t).re, lo, hi, period, 0.5 * tol)?;
    let im = real_integral(|t| f(t).im, lo, hi, period, 0.5 * tol)?;
    Ok(Complex64::new(re, im))
}

/// `int_0^inf h(t) exp(i nu t) dt` for `h` analytic and bounded to the right
/// of `Re t = truncation`.
///
/// The head is integrated on `[0, truncation]`; the tail is rotated onto the
/// ray `t = truncation + i y / nu` (`y >= 0`), where the integrand decays like
/// `exp(-y)`. For `nu = 0` there is nothing to rotate and `h` itself must
/// decay: the integral is continued in blocks until a block contributes less
/// than the tolerance.
pub fn fourier_half_line(
    h: impl Fn(Complex64) -> Complex64,
    nu: f64,
    truncation: f64,
    tolerance: f64,
) -> Result<Complex64> {
    if !(truncation > 0.0 && tolerance > 0.0 && nu.is_finite()) {
        return Err(Error::Oracle(format!(
            "bad oracle parameters: truncation {truncation}, tolerance {tolerance}, frequency {nu}"
        )));
    }
    let phase = |t: f64| Complex64::new(0.0, nu * t).exp();
    let period = (nu != 0.0).then(|| PI / nu.abs());
    let head = complex_integral(
        |t| h(Complex64::new(t, 0.0)) * phase(t),
        0.0,
        truncation,
        period,
        0.5 * tolerance,
    )?;

    if nu == 0.0 {
        let mut total = head;
        let mut lo = truncation;
        for _ in 0..64 {
            let block = complex_integral(
                |t| h(Complex64::new(t, 0.0)),
                lo,
                2.0 * lo,
                None,
                0.25 * tolerance,
            )?;
            total += block;
            lo *= 2.0;
            if block.norm() < 0.25 * tolerance {
                return Ok(total);
            }
        }
        return Err(Error::Oracle(
            "integrand does not decay along the contour".into(),
        ));
    }

    // t = T + i s y / |nu| with s = sgn(nu); exp(i nu t) = exp(i nu T) exp(-y).
    let s = nu.signum();
    let scale = 1.0 / nu.abs();
    let ray = complex_integral(
        |y| h(Complex64::new(truncation, s * y * scale)) * (-y).exp(),
        0.0,
        TAIL_DEPTH,
        None,
        0.5 * tolerance * nu.abs(),
    )?;
    let tail = Complex64::new(0.0, s * scale) * phase(truncation) * ray;
    Ok(head + tail)
}

/// `I1` from `(1/pi) int_0^inf tanh(pi t)/t cos(beta t) dt`.
pub fn i1_oracle(beta: f64, truncation: f64, tolerance: f64) -> Result<f64> {
    if beta == 0.0 {
        return Err(Error::SingularArgument { function: "I1" });
    }
    let h = |t: Complex64| {
        if t.norm() < 1e-8 {
            Complex64::new(PI, 0.0)
        } else {
            tanh(PI * t) / t
        }
    };
    let v = fourier_half_line(h, beta.abs(), truncation, PI * tolerance)?;
    Ok(FRAC_1_PI * v.re)
}

/// `I2` from its sign-split real-axis representation
///
/// ```text
/// I2(b) = b (1 +- 1)/(2 pi)
///       -+ (exp(-+b/2)/pi) int_0^inf tanh(pi t)/(t^2 + 1/4) ((1/2) sin bt +- t cos bt) dt
/// ```
///
/// with the upper signs for `b > 0`. Both branches reduce to
/// `(b + |b|)/(2 pi) - (exp(-|b|/2)/pi) Re int tanh(pi t)/(t + i/2) exp(i|b|t) dt`,
/// which is what is integrated.
pub fn i2_oracle(beta: f64, truncation: f64, tolerance: f64) -> Result<f64> {
    if beta == 0.0 {
        return Err(Error::SingularArgument { function: "I2" });
    }
    let b = beta.abs();
    let damping = (-0.5 * b).exp();
    let h = |t: Complex64| tanh(PI * t) / (t + Complex64::new(0.0, 0.5));
    let tol = PI * tolerance / damping;
    let j = fourier_half_line(h, b, truncation, tol)?.re;
    Ok(0.5 * FRAC_1_PI * (beta + b) - FRAC_1_PI * damping * j)
}

/// Numerical inverse Mellin transform on the vertical line `Re s = offset`:
///
/// ```text
/// f(x) = (1/(2 pi i)) int_{offset - i inf}^{offset + i inf} F(s) x^{-s} ds
/// ```
///
/// `F` must be real on the real axis (so the integral is twice the real part
/// of the half-line integral), analytic in the strip swept by the tail
/// rotation, and bounded away from the real axis.
pub fn mellin_inversion_oracle(
    transform: impl Fn(Complex64) -> Complex64,
    offset: f64,
    x: f64,
    truncation: f64,
    tolerance: f64,
) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain {
            what: "inverse Mellin transform",
            value: x,
        });
    }
    let at_axis = transform(Complex64::new(offset, 0.0));
    if !at_axis.is_finite() || at_axis.norm() > 1e12 {
        return Err(Error::Contour { offset });
    }
    let nu = -x.ln();
    let weight = x.powf(-offset);
    let h = |t: Complex64| transform(Complex64::new(offset, 0.0) + Complex64::i() * t);
    let v = fourier_half_line(h, nu, truncation, PI * tolerance / weight)?;
    Ok(FRAC_1_PI * weight * v.re)
}
