//! Command-line front end. Every reported value comes from the core
//! library or from [`crate::experiments`].

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hermsp_core::algebra::{AlgebraDescriptor, GroundRing, DEFAULT_TOL};
use hermsp_core::parametrization::{extract, sample_coordinates, synthesize};
use hermsp_core::surface::{build_polygon, FundamentalPolygon};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::experiments::{census, realization_sweep};
use crate::io::{
    coordinates_from_json, coordinates_to_json, read_json, representation_from_json, representation_to_json, to_pretty,
    write_json, CoordinatesJson, RepresentationJson,
};
use crate::report::{census_report, realization_report, synthesis_checks, Report};
use crate::{surfaces, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    #[value(name = "R")]
    Real,
    #[value(name = "C")]
    Complex,
    #[value(name = "H")]
    Quaternion,
}

impl From<Algebra> for GroundRing {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::Real => GroundRing::Real,
            Algebra::Complex => GroundRing::Complex,
            Algebra::Quaternion => GroundRing::Quaternion,
        }
    }
}

fn positive_tol(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "hermsp", version, about = "Maximal framed representations over Hermitian matrix algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Ground ring of the matrix algebra.
    #[arg(long, global = true, value_enum, default_value = "R")]
    pub algebra: Algebra,
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 1)]
    pub n: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance; overrides tolerances stored in input files.
    #[arg(long, global = true, value_parser = positive_tol)]
    pub tol: Option<f64>,
    /// Surface file, or one of the bundled surface names.
    #[arg(long, global = true)]
    pub surface: Option<String>,
    /// Coordinates file.
    #[arg(long, global = true)]
    pub coords: Option<PathBuf>,
    /// Representation file.
    #[arg(long, global = true)]
    pub rep: Option<PathBuf>,
    /// Output file; without it JSON goes to stdout and the table to stderr.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Sample count for `components` and `realize`.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    /// Base vertex of the graph on the fundamental polygon.
    #[arg(long, global = true, default_value_t = 0)]
    pub base: usize,
    /// Word length for `realize`.
    #[arg(long, global = true, default_value_t = 8)]
    pub length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Euler characteristic and triangulation counts.
    SurfaceInfo,
    /// Random coordinates.
    Sample,
    /// Coordinates to a framed representation, with verification.
    Synthesize,
    /// Framed representation to coordinates.
    Extract,
    /// Synthesize then extract, reporting the largest deviation.
    Roundtrip,
    /// Census of connected-component labels against k^(1-chi).
    Components,
    /// Classical-form preservation of random group elements.
    Realize,
}

/// A finished command: its report and, when no `--out` was given, the JSON
/// document it produced.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub document: Option<String>,
}

impl Cli {
    fn descriptor(&self) -> Result<AlgebraDescriptor> {
        Ok(AlgebraDescriptor::with_tol(self.algebra.into(), self.n, self.tol.unwrap_or(DEFAULT_TOL))?)
    }

    fn polygon(&self) -> Result<FundamentalPolygon> {
        let arg = self.surface.as_deref().ok_or(Error::MissingOption("surface"))?;
        Ok(build_polygon(&surfaces::load(arg)?)?)
    }

    fn emit<T: Serialize>(&self, report: Report, value: &T) -> Result<Outcome> {
        match &self.out {
            Some(path) => {
                write_json(path, value)?;
                Ok(Outcome { report, document: None })
            }
            None => Ok(Outcome { report, document: Some(to_pretty(value)?) }),
        }
    }
}

fn surface_report(p: &FundamentalPolygon) -> Report {
    let d = p.descriptor();
    let s = p.stats();
    let mut r = Report::new("surface");
    r.fact("genus", d.genus)
        .fact("internal punctures", d.internal_punctures)
        .fact("boundary components", d.boundary_components)
        .fact("external punctures", d.external_punctures)
        .fact("chi", s.chi)
        .fact("triangles", s.triangles)
        .fact("internal edges", s.internal_edges)
        .fact("pairings", s.pairings)
        .fact("diagonals", p.diagonals().len());
    r
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match cli.command {
        Command::SurfaceInfo => {
            let p = cli.polygon()?;
            Ok(Outcome { report: surface_report(&p), document: None })
        }
        Command::Sample => {
            let p = cli.polygon()?;
            let desc = cli.descriptor()?;
            let c = sample_coordinates(&p, desc, &mut ChaCha8Rng::seed_from_u64(cli.seed));
            let mut r = Report::new("sample");
            r.fact("algebra", desc).fact("seed", cli.seed).fact("edges", c.b.len()).fact("pairings", c.u.len());
            cli.emit(r, &coordinates_to_json(&c))
        }
        Command::Synthesize => {
            let p = cli.polygon()?;
            let path = cli.coords.as_ref().ok_or(Error::MissingOption("coords"))?;
            let c = coordinates_from_json(&read_json::<CoordinatesJson>(path)?, cli.tol)?;
            let (ls, fr) = synthesize(&p, &c, cli.base)?;
            let mut r = Report::new("synthesize");
            r.fact("algebra", c.algebra).fact("generators", fr.generators.len());
            synthesis_checks(&mut r, &p, &ls, &fr)?;
            cli.emit(r, &representation_to_json(&fr))
        }
        Command::Extract => {
            let p = cli.polygon()?;
            let path = cli.rep.as_ref().ok_or(Error::MissingOption("rep"))?;
            let fr = representation_from_json(&read_json::<RepresentationJson>(path)?, cli.tol)?;
            let c = extract(&fr, &p, cli.base)?;
            let mut r = Report::new("extract");
            r.fact("algebra", fr.algebra).fact("edges", c.b.len()).fact("pairings", c.u.len());
            cli.emit(r, &coordinates_to_json(&c))
        }
        Command::Roundtrip => {
            let p = cli.polygon()?;
            let c = match &cli.coords {
                Some(path) => coordinates_from_json(&read_json::<CoordinatesJson>(path)?, cli.tol)?,
                None => sample_coordinates(&p, cli.descriptor()?, &mut ChaCha8Rng::seed_from_u64(cli.seed)),
            };
            let (ls, fr) = synthesize(&p, &c, cli.base)?;
            let back = extract(&fr, &p, cli.base)?;
            let mut r = Report::new("roundtrip");
            r.fact("algebra", c.algebra);
            synthesis_checks(&mut r, &p, &ls, &fr)?;
            r.below("max deviation", c.max_deviation(&back)?, c.algebra.tol());
            Ok(Outcome { report: r, document: None })
        }
        Command::Components => {
            let p = cli.polygon()?;
            let desc = cli.descriptor()?;
            let result = census(&p, desc, cli.samples, cli.seed)?;
            let mut r = Report::new("components");
            r.fact("algebra", desc).fact("chi", p.stats().chi);
            census_report(&mut r, &result);
            Ok(Outcome { report: r, document: None })
        }
        Command::Realize => {
            let desc = cli.descriptor()?;
            let sweep = realization_sweep(desc, cli.samples, cli.length, cli.seed)?;
            let mut r = Report::new("realize");
            r.fact("algebra", desc);
            realization_report(&mut r, &sweep, desc.tol());
            Ok(Outcome { report: r, document: None })
        }
    }
}

/// The JSON written to stderr on failure.
pub fn error_json(e: &Error) -> String {
    let mut v = serde_json::json!({ "error": e.code(), "message": e.to_string() });
    if let Error::Verification { failed } = e {
        v["failed"] = serde_json::json!(failed);
    }
    v.to_string()
}
