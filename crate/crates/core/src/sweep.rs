//! Parameter sweeps over the preset configurations (and custom scenarios),
//! with CSV and gnuplot output.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::k0;
use crate::model::{validate_scenario, BimaterialSpec, BumpProfile, BumpSite, ThreePointLoad};
use crate::perturbation::{k1a, k1b};

/// The contrast values of the published figures, in legend order.
pub const DEFAULT_ETAS: [f64; 5] = [-0.99, -0.5, 0.0, 0.5, 0.99];

/// Legend colours matching [`DEFAULT_ETAS`].
pub const CURVE_COLORS: [&str; 5] = ["dark-green", "orange", "red", "blue", "black"];

/// Relative shrink applied at each open end of a sweep range.
pub const OPEN_MARGIN: f64 = 1e-3;

pub const DEFAULT_SAMPLES: usize = 101;

/// Tolerances every correction integral is computed to.
pub const ABS_TOL: f64 = 1e-12;
pub const REL_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetId {
    Table1a,
    Table1b,
    Table1c,
    Table1d,
    Table1e,
    Table1f,
    Table1g,
    Table1h,
    Table2a,
    Table2b,
    Table2c,
    Table2d,
}

impl PresetId {
    pub const ALL: [PresetId; 12] = [
        PresetId::Table1a,
        PresetId::Table1b,
        PresetId::Table1c,
        PresetId::Table1d,
        PresetId::Table1e,
        PresetId::Table1f,
        PresetId::Table1g,
        PresetId::Table1h,
        PresetId::Table2a,
        PresetId::Table2b,
        PresetId::Table2c,
        PresetId::Table2d,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresetId::Table1a => "table1a",
            PresetId::Table1b => "table1b",
            PresetId::Table1c => "table1c",
            PresetId::Table1d => "table1d",
            PresetId::Table1e => "table1e",
            PresetId::Table1f => "table1f",
            PresetId::Table1g => "table1g",
            PresetId::Table1h => "table1h",
            PresetId::Table2a => "table2a",
            PresetId::Table2b => "table2b",
            PresetId::Table2c => "table2c",
            PresetId::Table2d => "table2d",
        }
    }

    pub fn is_face_preset(self) -> bool {
        self.name().starts_with("table1")
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PresetId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::Scenario(format!(
                    "unknown preset `{s}` (expected table1a..table1h or table2a..table2d)"
                ))
            })
    }
}

/// The parameter a sweep varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepAxis {
    /// Half-offset `b` of the lower-face forces.
    LoadOffset,
    UpperAmplitude,
    UpperCenter,
    UpperHalfWidth,
    LowerAmplitude,
    LowerCenter,
    LowerHalfWidth,
    /// Common centre of both face profiles.
    FaceCenter,
    InterfaceAmplitude,
    InterfaceCenter,
    InterfaceHalfWidth,
}

impl SweepAxis {
    pub const ALL: [SweepAxis; 11] = [
        SweepAxis::LoadOffset,
        SweepAxis::UpperAmplitude,
        SweepAxis::UpperCenter,
        SweepAxis::UpperHalfWidth,
        SweepAxis::LowerAmplitude,
        SweepAxis::LowerCenter,
        SweepAxis::LowerHalfWidth,
        SweepAxis::FaceCenter,
        SweepAxis::InterfaceAmplitude,
        SweepAxis::InterfaceCenter,
        SweepAxis::InterfaceHalfWidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::LoadOffset => "b",
            SweepAxis::UpperAmplitude => "upper.amplitude",
            SweepAxis::UpperCenter => "upper.center",
            SweepAxis::UpperHalfWidth => "upper.half_width",
            SweepAxis::LowerAmplitude => "lower.amplitude",
            SweepAxis::LowerCenter => "lower.center",
            SweepAxis::LowerHalfWidth => "lower.half_width",
            SweepAxis::FaceCenter => "face.center",
            SweepAxis::InterfaceAmplitude => "interface.amplitude",
            SweepAxis::InterfaceCenter => "interface.center",
            SweepAxis::InterfaceHalfWidth => "interface.half_width",
        }
    }

    /// Axis label for plots (lengths are in units of `a`).
    pub fn label(self) -> &'static str {
        match self {
            SweepAxis::LoadOffset => "b/a",
            SweepAxis::UpperAmplitude => "A_+/a",
            SweepAxis::UpperCenter => "c_+/a",
            SweepAxis::UpperHalfWidth => "d_+/a",
            SweepAxis::LowerAmplitude => "A_-/a",
            SweepAxis::LowerCenter => "c_-/a",
            SweepAxis::LowerHalfWidth => "d_-/a",
            SweepAxis::FaceCenter => "c_+/a = c_-/a",
            SweepAxis::InterfaceAmplitude => "A/a",
            SweepAxis::InterfaceCenter => "c/a",
            SweepAxis::InterfaceHalfWidth => "d/a",
        }
    }

    /// Profile sites this axis reads or writes.
    fn sites(self) -> &'static [BumpSite] {
        match self {
            SweepAxis::LoadOffset => &[],
            SweepAxis::UpperAmplitude | SweepAxis::UpperCenter | SweepAxis::UpperHalfWidth => {
                &[BumpSite::UpperFace]
            }
            SweepAxis::LowerAmplitude | SweepAxis::LowerCenter | SweepAxis::LowerHalfWidth => {
                &[BumpSite::LowerFace]
            }
            SweepAxis::FaceCenter => &[BumpSite::UpperFace, BumpSite::LowerFace],
            SweepAxis::InterfaceAmplitude
            | SweepAxis::InterfaceCenter
            | SweepAxis::InterfaceHalfWidth => &[BumpSite::Interface],
        }
    }

    /// Set the swept parameter to `value`.
    pub fn apply(self, value: f64, load: &mut ThreePointLoad, bumps: &mut [BumpProfile]) {
        if self == SweepAxis::LoadOffset {
            load.b = value;
            return;
        }
        for bump in bumps.iter_mut().filter(|b| self.sites().contains(&b.site)) {
            match self {
                SweepAxis::UpperAmplitude
                | SweepAxis::LowerAmplitude
                | SweepAxis::InterfaceAmplitude => bump.amplitude = value,
                SweepAxis::UpperCenter
                | SweepAxis::LowerCenter
                | SweepAxis::FaceCenter
                | SweepAxis::InterfaceCenter => bump.center = value,
                SweepAxis::UpperHalfWidth
                | SweepAxis::LowerHalfWidth
                | SweepAxis::InterfaceHalfWidth => bump.half_width = value,
                SweepAxis::LoadOffset => unreachable!(),
            }
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepAxis::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = SweepAxis::ALL.iter().map(|a| a.name()).collect();
                Error::Scenario(format!(
                    "unknown sweep parameter `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// The quantity reported in the `output` column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputQuantity {
    K1a,
    K1b,
    K1Total,
    K1bOverK0,
}

impl OutputQuantity {
    pub const ALL: [OutputQuantity; 4] = [
        OutputQuantity::K1a,
        OutputQuantity::K1b,
        OutputQuantity::K1Total,
        OutputQuantity::K1bOverK0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OutputQuantity::K1a => "k1a",
            OutputQuantity::K1b => "k1b",
            OutputQuantity::K1Total => "k1_total",
            OutputQuantity::K1bOverK0 => "k1b_over_k0",
        }
    }

    /// gnuplot-enhanced axis label.
    pub fn label(self) -> &'static str {
        match self {
            OutputQuantity::K1a => "K_{III}^{1(a)}",
            OutputQuantity::K1b => "K_{III}^{1(b)}",
            OutputQuantity::K1Total => "K_{III}^{1}",
            OutputQuantity::K1bOverK0 => "K_{III}^{1(b)}/K_{III}^{0}",
        }
    }

    fn pick(self, k0: f64, k1a: f64, k1b: f64) -> Result<f64> {
        Ok(match self {
            OutputQuantity::K1a => k1a,
            OutputQuantity::K1b => k1b,
            OutputQuantity::K1Total => k1a + k1b,
            OutputQuantity::K1bOverK0 => {
                if k0 == 0.0 {
                    return Err(Error::VanishingK0);
                }
                k1b / k0
            }
        })
    }
}

impl fmt::Display for OutputQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OutputQuantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OutputQuantity::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| {
                Error::Scenario(format!(
                    "unknown output `{s}` (expected k1a, k1b, k1_total or k1b_over_k0)"
                ))
            })
    }
}

/// Uniform samples of `[from, to]`; open ends are pulled in by
/// [`OPEN_MARGIN`] times the range width.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRange {
    pub from: f64,
    pub to: f64,
    pub samples: usize,
    pub open: bool,
}

impl SweepRange {
    pub fn open(from: f64, to: f64) -> Self {
        Self {
            from,
            to,
            samples: DEFAULT_SAMPLES,
            open: true,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        let margin = if self.open {
            OPEN_MARGIN * (self.to - self.from)
        } else {
            0.0
        };
        let (lo, hi) = (self.from + margin, self.to - margin);
        match self.samples {
            0 => Vec::new(),
            1 => vec![lo],
            n => (0..n)
                .map(|i| {
                    if i == n - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

/// A sweep: fixed geometry and load, one varying parameter, a list of
/// materials.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepScenario {
    pub label: String,
    pub materials: Vec<BimaterialSpec>,
    pub load: ThreePointLoad,
    pub bumps: Vec<BumpProfile>,
    pub axis: SweepAxis,
    pub range: SweepRange,
    pub output: OutputQuantity,
}

impl SweepScenario {
    /// One row of the published parameter tables.
    pub fn preset(id: PresetId) -> Self {
        use BumpProfile as B;
        use SweepAxis as X;
        let open = SweepRange::open;
        let (b, bumps, axis, range) = match id {
            PresetId::Table1a => (
                0.0,
                vec![B::upper(0.2, 0.4, 0.1), B::lower(-0.2, 0.4, 0.1)],
                X::LoadOffset,
                open(0.0, 0.5),
            ),
            PresetId::Table1b => (
                0.0,
                vec![B::upper(0.2, 0.4, 0.1), B::lower(0.2, 0.4, 0.1)],
                X::LoadOffset,
                open(0.0, 0.5),
            ),
            PresetId::Table1c => (
                0.2,
                vec![B::upper(0.2, 0.5, 0.0), B::lower(0.0, 0.5, 0.1)],
                X::UpperHalfWidth,
                open(0.0, 0.3),
            ),
            PresetId::Table1d => (
                0.25,
                vec![B::upper(0.0, 0.4, 0.1), B::lower(0.0, 0.4, 0.1)],
                X::UpperAmplitude,
                open(0.0, 0.2),
            ),
            PresetId::Table1e => (
                0.25,
                vec![B::upper(0.0, 0.4, 0.1), B::lower(0.2, 0.4, 0.1)],
                X::UpperAmplitude,
                open(0.0, 0.2),
            ),
            PresetId::Table1f => (
                0.25,
                vec![B::upper(0.0, 0.4, 0.1), B::lower(0.0, 0.4, 0.1)],
                X::LowerAmplitude,
                open(0.0, 0.2),
            ),
            PresetId::Table1g => (
                0.2,
                vec![B::upper(0.2, 0.0, 0.1), B::lower(-0.2, 0.0, 0.1)],
                X::FaceCenter,
                open(0.1, 0.7),
            ),
            PresetId::Table1h => (
                0.2,
                vec![B::upper(0.2, 0.0, 0.1), B::lower(0.2, 0.0, 0.1)],
                X::FaceCenter,
                open(0.1, 0.7),
            ),
            PresetId::Table2a => (
                0.2,
                vec![B::interface(0.2, 0.5, 0.0)],
                X::InterfaceHalfWidth,
                open(0.0, 0.5),
            ),
            PresetId::Table2b => (
                0.2,
                vec![B::interface(0.0, 0.5, 0.25)],
                X::InterfaceAmplitude,
                open(-0.2, 0.2),
            ),
            PresetId::Table2c => (
                0.2,
                vec![B::interface(0.2, 0.0, 0.25)],
                X::InterfaceCenter,
                open(0.25, 0.75),
            ),
            PresetId::Table2d => (
                0.0,
                vec![B::interface(0.2, 0.5, 0.25)],
                X::LoadOffset,
                open(0.0, 1.0),
            ),
        };
        let output = match id {
            PresetId::Table2d => OutputQuantity::K1bOverK0,
            id if id.is_face_preset() => OutputQuantity::K1a,
            _ => OutputQuantity::K1b,
        };
        Self {
            label: id.name().to_string(),
            materials: DEFAULT_ETAS
                .iter()
                .map(|&e| BimaterialSpec::from_contrast(e))
                .collect(),
            load: ThreePointLoad::new(1.0, b),
            bumps,
            axis,
            range,
            output,
        }
    }

    /// Replace the material list by `mu+ = 1 - eta`, `mu- = 1 + eta` for
    /// each contrast.
    pub fn with_etas(mut self, etas: &[f64]) -> Self {
        self.materials = etas
            .iter()
            .map(|&e| BimaterialSpec::from_contrast(e))
            .collect();
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.range.samples = samples;
        self
    }

    /// Load and profiles at one sample of the sweep.
    pub fn configure(&self, value: f64) -> (ThreePointLoad, Vec<BumpProfile>) {
        let mut load = self.load;
        let mut bumps = self.bumps.clone();
        self.axis.apply(value, &mut load, &mut bumps);
        (load, bumps)
    }

    /// Structural checks that do not depend on the sample values.
    pub fn check(&self) -> Result<()> {
        if self.materials.is_empty() {
            return Err(Error::Scenario("no materials to sweep over".into()));
        }
        if self.range.samples == 0 {
            return Err(Error::Scenario("sweep needs at least one sample".into()));
        }
        if !(self.range.from.is_finite() && self.range.to.is_finite())
            || self.range.from > self.range.to
        {
            return Err(Error::Scenario(format!(
                "sweep range [{}, {}] is not an increasing finite interval",
                self.range.from, self.range.to
            )));
        }
        for site in self.axis.sites() {
            if !self.bumps.iter().any(|b| b.site == *site) {
                return Err(Error::Scenario(format!(
                    "sweep parameter `{}` needs a {} profile",
                    self.axis,
                    site.name()
                )));
            }
        }
        Ok(())
    }

    /// Validate every `(sample, material)` pair; returns how many were
    /// checked.
    pub fn validate_all(&self) -> Result<usize> {
        self.check()?;
        let mut count = 0;
        let mut first = None;
        let mut checked = 0;
        for material in &self.materials {
            for value in self.range.values() {
                checked += 1;
                let (load, bumps) = self.configure(value);
                if let Err(report) = validate_scenario(*material, load, &bumps) {
                    count += 1;
                    first.get_or_insert((value, material.contrast(), report));
                }
            }
        }
        match first {
            None => Ok(checked),
            Some((value, eta, report)) => Err(Error::SweepRejected {
                axis: self.axis.name(),
                value,
                eta,
                count,
                report,
            }),
        }
    }
}

/// One evaluated grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub sweep_value: f64,
    pub eta: f64,
    pub k0: f64,
    pub k1a: f64,
    pub k1b: f64,
    pub output: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepMetadata {
    pub label: String,
    pub axis: SweepAxis,
    pub output: OutputQuantity,
    pub etas: Vec<f64>,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub version: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub metadata: SweepMetadata,
}

/// Evaluate every grid point of `scenario` on `workers` threads.
///
/// Rows come out grouped by material (one block per contrast value, in the
/// order given) with the sweep value increasing inside each block. The order
/// does not depend on the number of workers.
pub fn run_sweep(scenario: &SweepScenario, workers: usize) -> Result<SweepResult> {
    scenario.validate_all()?;
    let values = scenario.range.values();
    let grid: Vec<(BimaterialSpec, f64)> = scenario
        .materials
        .iter()
        .flat_map(|m| values.iter().map(move |v| (*m, *v)))
        .collect();

    let evaluate = |&(material, value): &(BimaterialSpec, f64)| -> Result<SweepRow> {
        let (load, bumps) = scenario.configure(value);
        let validated = validate_scenario(material, load, &bumps)?;
        let decomposed = validated.decomposed_load();
        let base = k0(&material, decomposed);
        let ka = k1a(&material, decomposed, &bumps)?;
        let kb = match validated.bump(BumpSite::Interface) {
            Some(phi) => k1b(&material, decomposed, phi)?,
            None => 0.0,
        };
        Ok(SweepRow {
            sweep_value: value,
            eta: material.contrast(),
            k0: base,
            k1a: ka,
            k1b: kb,
            output: scenario.output.pick(base, ka, kb)?,
        })
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Scenario(format!("cannot start worker pool: {e}")))?;
    let rows = pool.install(|| grid.par_iter().map(evaluate).collect::<Result<Vec<_>>>())?;

    Ok(SweepResult {
        rows,
        metadata: SweepMetadata {
            label: scenario.label.clone(),
            axis: scenario.axis,
            output: scenario.output,
            etas: scenario.materials.iter().map(|m| m.contrast()).collect(),
            abs_tol: ABS_TOL,
            rel_tol: REL_TOL,
            version: env!("CARGO_PKG_VERSION"),
        },
    })
}

// Print -0.0 as 0.
fn unsigned_zero(v: f64) -> f64 {
    v + 0.0
}

pub const CSV_HEADER: &str = "sweep_param,eta,k0,k1a,k1b,output";

/// Write the rows as CSV: fixed header, 12 significant digits, LF endings.
pub fn emit_csv(result: &SweepResult, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in &result.rows {
        writeln!(
            out,
            "{:.11e},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}",
            unsigned_zero(r.sweep_value),
            unsigned_zero(r.eta),
            unsigned_zero(r.k0),
            unsigned_zero(r.k1a),
            unsigned_zero(r.k1b),
            unsigned_zero(r.output)
        )?;
    }
    out.flush()
}

fn curve_color(index: usize, eta: f64) -> &'static str {
    DEFAULT_ETAS
        .iter()
        .position(|&e| e == eta)
        .map(|i| CURVE_COLORS[i])
        .unwrap_or(CURVE_COLORS[index % CURVE_COLORS.len()])
}

/// Write a gnuplot script that draws one curve per contrast value from the
/// CSV file `csv_path`.
pub fn emit_plot_script(
    result: &SweepResult,
    csv_path: &str,
    mut out: impl Write,
) -> io::Result<()> {
    let m = &result.metadata;
    let quoted = csv_path.replace('\\', "\\\\").replace('\'', "\\'");
    writeln!(
        out,
        "# mode3-sif {}: {} sweep over {}",
        m.version, m.label, m.axis
    )?;
    writeln!(
        out,
        "# quadrature tolerances: abs {:e}, rel {:e}",
        m.abs_tol, m.rel_tol
    )?;
    writeln!(out, "set datafile separator ','")?;
    writeln!(out, "set termoption enhanced")?;
    writeln!(out, "set key outside right")?;
    writeln!(out, "set grid")?;
    writeln!(out, "set title '{}'", m.label)?;
    writeln!(out, "set xlabel '{}'", m.axis.label())?;
    writeln!(out, "set ylabel '{}'", m.output.label())?;
    if m.etas.is_empty() {
        return out.flush();
    }
    let curves: Vec<String> = m
        .etas
        .iter()
        .enumerate()
        .map(|(i, &eta)| {
            format!(
                "'{quoted}' every ::1 using 1:(abs($2-({eta:e}))<1e-9 ? $6 : NaN) \
                 with lines lw 2 lc rgb '{}' title '({}) eta = {eta}'",
                curve_color(i, eta),
                i + 1
            )
        })
        .collect();
    writeln!(out, "plot {}", curves.join(", \\\n     "))?;
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_names_round_trip() {
        for id in PresetId::ALL {
            assert_eq!(id.name().parse::<PresetId>().unwrap(), id);
        }
        assert!("table3a".parse::<PresetId>().is_err());
        for axis in SweepAxis::ALL {
            assert_eq!(axis.name().parse::<SweepAxis>().unwrap(), axis);
        }
        for o in OutputQuantity::ALL {
            assert_eq!(o.name().parse::<OutputQuantity>().unwrap(), o);
        }
    }

    #[test]
    fn open_range_sampling() {
        let v = SweepRange::open(0.0, 0.5).values();
        assert_eq!(v.len(), 101);
        assert_eq!(v[0], 0.0005);
        assert_eq!(v[100], 0.4995);
        assert!(v.windows(2).all(|w| w[1] > w[0]));
        let closed = SweepRange {
            open: false,
            samples: 3,
            ..SweepRange::open(1.0, 2.0)
        };
        assert_eq!(closed.values(), vec![1.0, 1.5, 2.0]);
    }

    #[test]
    fn every_preset_validates_on_its_grid() {
        for id in PresetId::ALL {
            let s = SweepScenario::preset(id);
            assert_eq!(s.validate_all().unwrap(), 5 * 101, "{id}");
        }
    }

    #[test]
    fn face_center_moves_both_profiles() {
        let s = SweepScenario::preset(PresetId::Table1g);
        let (_, bumps) = s.configure(0.3);
        assert!(bumps.iter().all(|b| b.center == 0.3));
    }

    #[test]
    fn closed_range_hitting_the_boundary_is_rejected() {
        let mut s = SweepScenario::preset(PresetId::Table1c);
        s.range.open = false;
        match s.validate_all() {
            Err(Error::SweepRejected { axis, count, .. }) => {
                assert_eq!(axis, "upper.half_width");
                // d = 0 and d = 0.3 fail for every material.
                assert_eq!(count, 10);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_profile_for_axis() {
        let mut s = SweepScenario::preset(PresetId::Table2b);
        s.bumps.clear();
        assert!(matches!(s.check(), Err(Error::Scenario(_))));
    }

    #[test]
    fn csv_layout() {
        let s = SweepScenario::preset(PresetId::Table2b).with_samples(3);
        let r = run_sweep(&s, 2).unwrap();
        assert_eq!(r.rows.len(), 15);
        let mut buf = Vec::new();
        emit_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains('\r'));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 16);
        // Blocks of three rows per contrast value.
        let eta: Vec<f64> = lines[1..]
            .iter()
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert_eq!(&eta[..3], &[-0.99; 3]);
        assert_eq!(&eta[12..], &[0.99; 3]);
    }

    #[test]
    fn empty_result_is_header_only() {
        let r = SweepResult {
            rows: vec![],
            metadata: SweepMetadata {
                label: "custom".into(),
                axis: SweepAxis::LoadOffset,
                output: OutputQuantity::K1a,
                etas: vec![],
                abs_tol: ABS_TOL,
                rel_tol: REL_TOL,
                version: "0",
            },
        };
        let mut buf = Vec::new();
        emit_csv(&r, &mut buf).unwrap();
        assert_eq!(buf, format!("{CSV_HEADER}\n").into_bytes());
    }

    #[test]
    fn plot_script_curves() {
        let s = SweepScenario::preset(PresetId::Table2d).with_samples(2);
        let r = run_sweep(&s, 1).unwrap();
        let mut buf = Vec::new();
        emit_plot_script(&r, "out.csv", &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.matches("'out.csv'").count(), 5);
        assert!(text.contains("K_{III}^{1(b)}/K_{III}^{0}"));
        for c in CURVE_COLORS {
            assert!(text.contains(c));
        }

        let single = SweepScenario::preset(PresetId::Table1a)
            .with_etas(&[0.3])
            .with_samples(2);
        let r = run_sweep(&single, 1).unwrap();
        let mut buf = Vec::new();
        emit_plot_script(&r, "x.csv", &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap().matches("'x.csv'").count(),
            1
        );
    }

    #[test]
    fn zero_amplitudes_give_zero_corrections() {
        let mut s = SweepScenario::preset(PresetId::Table1a).with_samples(4);
        for b in &mut s.bumps {
            b.amplitude = 0.0;
        }
        s.bumps.push(BumpProfile::interface(0.0, 0.5, 0.2));
        let r = run_sweep(&s, 3).unwrap();
        assert!(r.rows.iter().all(|r| r.k1a == 0.0 && r.k1b == 0.0));
    }
}
