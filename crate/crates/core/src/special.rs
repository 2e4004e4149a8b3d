//! The three special integrals behind the crack-face displacements and the
//! interface field.
//!
//! ```text
//! I1(b) = (1/pi) ln coth(|b|/4)
//! I2(b) = b/(2 pi) + (1/pi) ln(2 sinh(|b|/2))
//! I3(b) = (1/pi) sinh(b/2) / sinh(b) = 1 / (2 pi cosh(b/2))
//! ```
//!
//! All three are evaluated in forms that neither overflow for large `|b|`
//! nor lose relative accuracy when the result is exponentially small.
//! `I1` and `I2` are singular at `b = 0`.

use std::f64::consts::{FRAC_1_PI, PI};

use crate::error::{Error, Result};

fn nonzero(beta: f64, function: &'static str) -> Result<f64> {
    if beta == 0.0 {
        Err(Error::SingularArgument { function })
    } else if beta.is_nan() {
        Err(Error::Domain {
            what: function,
            value: beta,
        })
    } else {
        Ok(beta.abs())
    }
}

/// `I1(beta) = (1/pi) ln coth(|beta|/4)`.
///
/// Positive, even, decreasing in `|beta|`; behaves like
/// `-(1/pi) ln(|beta|/4)` near zero and `(2/pi) exp(-|beta|/2)` at infinity.
pub fn i1(beta: f64) -> Result<f64> {
    let b = nonzero(beta, "I1")?;
    // ln coth(b/4) = 2 atanh(q) with q = exp(-b/2).
    let q = (-0.5 * b).exp();
    Ok(if q < 0.5 {
        2.0 * FRAC_1_PI * q.atanh()
    } else {
        FRAC_1_PI * (q.ln_1p() - (-(-0.5 * b).exp_m1()).ln())
    })
}

/// `I2(beta) = beta/(2 pi) + (1/pi) ln(2 sinh(|beta|/2))`.
///
/// Written as `(beta + |beta|)/(2 pi) + (1/pi) ln(1 - exp(-|beta|))` so large
/// arguments do not overflow. The odd part is exactly `beta/(2 pi)`.
pub fn i2(beta: f64) -> Result<f64> {
    let b = nonzero(beta, "I2")?;
    let e = (-b).exp();
    let log_term = if e < 0.5 {
        (-e).ln_1p()
    } else {
        (-(-b).exp_m1()).ln()
    };
    Ok(0.5 * FRAC_1_PI * (beta + b) + FRAC_1_PI * log_term)
}

/// `I3(beta) = 1/(2 pi cosh(beta/2))`. Defined for every finite `beta`.
pub fn i3(beta: f64) -> f64 {
    0.5 * FRAC_1_PI / (0.5 * beta).cosh()
}

/// `I3` in its quotient form `sinh(beta/2) / (pi sinh(beta))`.
///
/// Kept to cross-check [`i3`]; it is `0/0` at the origin and overflows once
/// `|beta|` exceeds about 710.
pub fn i3_quotient(beta: f64) -> f64 {
    (0.5 * beta).sinh() / (PI * beta.sinh())
}

/// `dI1/dbeta = -sgn(beta) / (2 pi sinh(|beta|/2))`.
pub fn i1_prime(beta: f64) -> Result<f64> {
    let b = nonzero(beta, "I1'")?;
    Ok(-beta.signum() * 0.5 * FRAC_1_PI / (0.5 * b).sinh())
}

/// `d^2 I1/dbeta^2 = cosh(beta/2) / (4 pi sinh^2(beta/2))`.
pub fn i1_second(beta: f64) -> Result<f64> {
    let b = nonzero(beta, "I1''")?;
    let s = (0.5 * b).sinh();
    // cosh/sinh^2 = coth/sinh, which stays finite for large b.
    Ok(0.25 * FRAC_1_PI / (0.5 * b).tanh() / s)
}

/// `dI2/dbeta = 1 / (pi (1 - exp(-beta)))`.
pub fn i2_prime(beta: f64) -> Result<f64> {
    nonzero(beta, "I2'")?;
    Ok(FRAC_1_PI / -(-beta).exp_m1())
}

/// `d^2 I2/dbeta^2 = -1 / (4 pi sinh^2(beta/2))`.
pub fn i2_second(beta: f64) -> Result<f64> {
    let b = nonzero(beta, "I2''")?;
    let s = (0.5 * b).sinh();
    Ok(-0.25 * FRAC_1_PI / s / s)
}

/// Leading behaviour of the integrals near the origin and at infinity.
pub mod asymptotic {
    use std::f64::consts::FRAC_1_PI;

    /// `-(1/pi) ln(|beta|/4)`; the remainder is `O(beta^2)`.
    pub fn i1_small(beta: f64) -> f64 {
        -FRAC_1_PI * (0.25 * beta.abs()).ln()
    }

    /// `(2/pi) exp(-|beta|/2)`; the remainder is `O(exp(-|beta|))`.
    pub fn i1_large(beta: f64) -> f64 {
        2.0 * FRAC_1_PI * (-0.5 * beta.abs()).exp()
    }

    /// `beta/(2 pi) + (1/pi) ln|beta|`; the remainder is `O(beta^2)`.
    pub fn i2_small(beta: f64) -> f64 {
        0.5 * FRAC_1_PI * beta + FRAC_1_PI * beta.abs().ln()
    }

    /// `(beta + |beta|)/(2 pi) - (1/pi) exp(-|beta|)`.
    pub fn i2_large(beta: f64) -> f64 {
        0.5 * FRAC_1_PI * (beta + beta.abs()) - FRAC_1_PI * (-beta.abs()).exp()
    }
}
