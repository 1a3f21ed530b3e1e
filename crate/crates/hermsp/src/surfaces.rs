//! Surface files shipped with the crate.

use std::path::Path;

use hermsp_core::surface::PolygonSpec;

use crate::io::{read_json, surface_from_json, SurfaceJson};
use crate::{Error, Result};

const BUNDLED: [(&str, &str); 5] = [
    ("triangle", include_str!("../surfaces/triangle.json")),
    ("quadrilateral", include_str!("../surfaces/quadrilateral.json")),
    ("punctured-torus", include_str!("../surfaces/punctured-torus.json")),
    ("four-punctured-sphere", include_str!("../surfaces/four-punctured-sphere.json")),
    ("genus-two", include_str!("../surfaces/genus-two.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

pub fn bundled(name: &str) -> Option<PolygonSpec> {
    let (_, text) = BUNDLED.iter().find(|(n, _)| *n == name)?;
    let j: SurfaceJson = serde_json::from_str(text).expect("bundled surface files are valid");
    Some(surface_from_json(&j))
}

/// A path to a surface file, or the name of a bundled surface when no such
/// file exists.
pub fn load(arg: &str) -> Result<PolygonSpec> {
    let path = Path::new(arg);
    if path.exists() {
        let j: SurfaceJson = read_json(path)?;
        return Ok(surface_from_json(&j));
    }
    bundled(arg).ok_or_else(|| Error::UnknownSurface(arg.to_string()))
}
