use crate::model::ValidationReport;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationReport),

    #[error("point force at x1 = {0} is not on the crack faces (x1 must be < 0)")]
    LoadOffFace(f64),

    #[error("non-finite point force (weight {weight}, position {position})")]
    NonFiniteLoad { weight: f64, position: f64 },

    #[error("{function} is singular at beta = 0")]
    SingularArgument { function: &'static str },

    #[error("{what}: argument {value} is outside the domain of definition")]
    Domain { what: &'static str, value: f64 },

    #[error("evaluation point x1 = {x1} coincides with a load station")]
    AtLoadStation { x1: f64 },

    #[error(
        "quadrature for {context} did not converge: value {value:e}, \
         error estimate {error_estimate:e} after {panels} panels"
    )]
    Quadrature {
        context: &'static str,
        value: f64,
        error_estimate: f64,
        panels: usize,
    },

    #[error("inversion contour Re s = {offset} passes through a pole of the transform")]
    Contour { offset: f64 },

    #[error("oracle failure: {0}")]
    Oracle(String),

    #[error("zero-order stress intensity factor vanishes; ratio output is undefined")]
    VanishingK0,

    #[error("sweep rejected: {} sample(s) fail validation, first at {axis} = {value}, eta = {eta}: {report}", .count)]
    SweepRejected {
        axis: &'static str,
        value: f64,
        eta: f64,
        count: usize,
        report: ValidationReport,
    },

    #[error("scenario file: {0}")]
    Scenario(String),
}

impl Error {
    /// True for failures of the numerical machinery (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::Quadrature { .. } | Error::Oracle(_) | Error::VanishingK0
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
