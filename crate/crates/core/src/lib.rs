//! Stress intensity factors for an antiplane (Mode III) crack lying on a
//! bimaterial interface, with small smooth perturbations of the crack faces
//! and of the interface ahead of the tip.
//!
//! The stress intensity factor is expanded to first order in the
//! perturbation amplitude, `K = K0 + eps (K1a + K1b)`: [`field`] gives the
//! unperturbed solution, [`perturbation`] the corrections from face bumps
//! (`K1a`) and interface bumps (`K1b`), and [`sweep`] reproduces the
//! parameter studies.
//!
//! ```
//! use mode3_sif::{sif_breakdown, validate_scenario, BimaterialSpec, BumpProfile, ThreePointLoad};
//!
//! let scenario = validate_scenario(
//!     BimaterialSpec::from_contrast(0.5),
//!     ThreePointLoad::new(1.0, 0.25),
//!     &[BumpProfile::upper(0.1, 0.4, 0.1)],
//! )?;
//! let k = sif_breakdown(&scenario, 1.0)?;
//! assert!(k.k0 < 0.0);
//! assert_eq!(k.k1b, 0.0);
//! # Ok::<(), mode3_sif::Error>(())
//! ```

// `!(x > 0.0)` is written on purpose throughout: NaN must fail the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod field;
pub mod model;
pub mod oracle;
pub mod perturbation;
pub mod quadrature;
pub mod scenario_file;
pub mod special;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{
    face_displacement, interface_normal_jump, interface_tangential_slope, k0, k0_point_loads,
    tip_asymptotics, InterfaceDiscontinuity, LineDensity, TipAsymptotics,
};
pub use model::{
    decompose_load, validate_scenario, BimaterialSpec, BumpProfile, BumpSite, DecomposedLoad, Face,
    PointForce, Scenario, SifBreakdown, ThreePointLoad, ValidationReport, Violation,
};
pub use perturbation::{k1a, k1b, sif_breakdown, sif_from_data, SifData, WeightFunctionSet};
pub use scenario_file::parse_scenario;
pub use special::{i1, i2, i3};
pub use sweep::{
    emit_csv, emit_plot_script, run_sweep, OutputQuantity, PresetId, SweepAxis, SweepRange,
    SweepResult, SweepRow, SweepScenario,
};

// Every chapter of the guide is compiled as a doc comment, so its code
// blocks run under `cargo test --doc`.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/special-integrals.md")]
    mod special_integrals {}
    #[doc = include_str!("../../../book/src/unperturbed-field.md")]
    mod unperturbed_field {}
    #[doc = include_str!("../../../book/src/perturbation.md")]
    mod perturbation {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
    #[doc = include_str!("../../../book/src/scenario-files.md")]
    mod scenario_files {}
}
