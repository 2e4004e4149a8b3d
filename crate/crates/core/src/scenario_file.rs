//! Custom sweep scenarios read from TOML.
//!
//! ```toml
//! [material]
//! eta = [-0.5, 0.0, 0.5]        # or: mu_plus = 1.0, mu_minus = 3.0
//!
//! [load]
//! a = 1.0
//! b = 0.2
//! force = 1.0                   # optional, default 1
//!
//! [interface]                   # also [upper] and [lower]
//! amplitude = 0.2
//! center = 0.5
//! half_width = 0.25
//!
//! [sweep]
//! parameter = "interface.amplitude"
//! from = -0.2
//! to = 0.2
//! samples = 41                  # optional, default 101
//! open = true                   # optional, default true
//! output = "k1b"                # optional, default k1_total
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{BimaterialSpec, BumpProfile, BumpSite, ThreePointLoad};
use crate::sweep::{OutputQuantity, SweepAxis, SweepRange, SweepScenario, DEFAULT_SAMPLES};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileScenario {
    label: Option<String>,
    material: FileMaterial,
    load: FileLoad,
    upper: Option<FileBump>,
    lower: Option<FileBump>,
    interface: Option<FileBump>,
    sweep: FileSweep,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileMaterial {
    eta: Option<OneOrMany>,
    mu_plus: Option<f64>,
    mu_minus: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileLoad {
    a: f64,
    b: f64,
    #[serde(default = "unit")]
    force: f64,
}

fn unit() -> f64 {
    1.0
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileBump {
    amplitude: f64,
    center: f64,
    half_width: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileSweep {
    parameter: String,
    from: f64,
    to: f64,
    samples: Option<usize>,
    open: Option<bool>,
    output: Option<String>,
}

impl FileMaterial {
    fn materials(self) -> Result<Vec<BimaterialSpec>> {
        match (self.eta, self.mu_plus, self.mu_minus) {
            (Some(eta), None, None) => {
                let etas = match eta {
                    OneOrMany::One(e) => vec![e],
                    OneOrMany::Many(v) => v,
                };
                if etas.is_empty() {
                    return Err(Error::Scenario("[material] eta list is empty".into()));
                }
                Ok(etas
                    .into_iter()
                    .map(BimaterialSpec::from_contrast)
                    .collect())
            }
            (None, Some(plus), Some(minus)) => Ok(vec![BimaterialSpec::new(plus, minus)]),
            _ => Err(Error::Scenario(
                "[material] needs either `eta` or both `mu_plus` and `mu_minus`".into(),
            )),
        }
    }
}

/// Parse a scenario file. Only the shape is checked here; the geometric
/// constraints are checked per sample by [`SweepScenario::validate_all`].
pub fn parse_scenario(text: &str) -> Result<SweepScenario> {
    let file: FileScenario = toml::from_str(text).map_err(|e| Error::Scenario(e.to_string()))?;

    let mut bumps = Vec::new();
    for (site, bump) in [
        (BumpSite::UpperFace, file.upper),
        (BumpSite::LowerFace, file.lower),
        (BumpSite::Interface, file.interface),
    ] {
        if let Some(b) = bump {
            bumps.push(BumpProfile::new(site, b.amplitude, b.center, b.half_width));
        }
    }

    let axis: SweepAxis = file.sweep.parameter.parse()?;
    let output = match &file.sweep.output {
        Some(name) => name.parse()?,
        None => OutputQuantity::K1Total,
    };
    let scenario = SweepScenario {
        label: file.label.unwrap_or_else(|| "custom".into()),
        materials: file.material.materials()?,
        load: ThreePointLoad::with_force(file.load.force, file.load.a, file.load.b),
        bumps,
        axis,
        range: SweepRange {
            from: file.sweep.from,
            to: file.sweep.to,
            samples: file.sweep.samples.unwrap_or(DEFAULT_SAMPLES),
            open: file.sweep.open.unwrap_or(true),
        },
        output,
    };
    scenario.check()?;
    Ok(scenario)
}
