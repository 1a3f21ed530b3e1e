//! JSON formats.
//!
//! Matrices are arrays of rows. Entries are numbers over `R`, `[re, im]`
//! over `C` and `[w, x, y, z]` over `H`; narrower entries are accepted and
//! promoted when reading. Keys of edge maps are `d{i}` for diagonals and
//! `p{j}` for pairings; framings are keyed by corner label.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use hermsp_core::algebra::{AlgebraDescriptor, AlgebraElement, GroundRing, C64, DEFAULT_TOL};
use hermsp_core::lines::IsotropicLine;
use hermsp_core::parametrization::{pairing_key, parse_pairing_key, CoordinateVector, EdgeId, FramedRepresentation};
use hermsp_core::surface::PolygonSpec;
use hermsp_core::symplectic::SymplecticElement;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
    Quaternion([f64; 4]),
}

impl Entry {
    fn quaternion(self) -> [f64; 4] {
        match self {
            Entry::Real(x) => [x, 0.0, 0.0, 0.0],
            Entry::Complex([re, im]) => [re, im, 0.0, 0.0],
            Entry::Quaternion(q) => q,
        }
    }
}

pub type MatrixJson = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorJson {
    pub kind: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymplecticJson {
    pub a: MatrixJson,
    pub b: MatrixJson,
    pub c: MatrixJson,
    pub d: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineJson {
    pub x1: MatrixJson,
    pub x2: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceJson {
    pub triangles: Vec<[u32; 3]>,
    #[serde(default)]
    pub pairings: Vec<[[usize; 2]; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinatesJson {
    pub algebra: DescriptorJson,
    pub b: BTreeMap<String, MatrixJson>,
    pub u: BTreeMap<String, MatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationJson {
    pub algebra: DescriptorJson,
    pub generators: BTreeMap<String, SymplecticJson>,
    pub framing: BTreeMap<String, LineJson>,
}

pub fn descriptor_to_json(d: &AlgebraDescriptor) -> DescriptorJson {
    DescriptorJson { kind: d.kind().symbol().to_string(), n: d.n(), tol: (d.tol() != DEFAULT_TOL).then_some(d.tol()) }
}

/// `tol` overrides the tolerance stored in the file.
pub fn descriptor_from_json(j: &DescriptorJson, tol: Option<f64>) -> Result<AlgebraDescriptor> {
    let kind =
        GroundRing::from_symbol(&j.kind).ok_or_else(|| Error::Format(format!("unknown algebra kind {:?}", j.kind)))?;
    Ok(AlgebraDescriptor::with_tol(kind, j.n, tol.or(j.tol).unwrap_or(DEFAULT_TOL))?)
}

pub fn matrix_to_json(a: &AlgebraElement) -> MatrixJson {
    let n = a.n();
    let kind = a.descriptor().kind();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match kind {
                    GroundRing::Real => Entry::Real(a.real_entry(i, j)),
                    GroundRing::Complex => {
                        let z = a.complex_entry(i, j);
                        Entry::Complex([z.re, z.im])
                    }
                    GroundRing::Quaternion => Entry::Quaternion(a.quaternion_entry(i, j)),
                })
                .collect()
        })
        .collect()
}

pub fn matrix_from_json(d: AlgebraDescriptor, m: &MatrixJson) -> Result<AlgebraElement> {
    let n = d.n();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::Format(format!("expected a {n}x{n} matrix")));
    }
    let entries = m.iter().flatten().copied();
    let narrow = |what: &str| Error::Format(format!("{what} entry in a matrix over {}", d.kind().symbol()));
    let el = match d.kind() {
        GroundRing::Real => {
            let xs = entries
                .map(|e| match e {
                    Entry::Real(x) => Ok(x),
                    _ => Err(narrow("non-real")),
                })
                .collect::<Result<Vec<_>>>()?;
            AlgebraElement::from_real_rows(d, &xs)?
        }
        GroundRing::Complex => {
            let zs = entries
                .map(|e| match e {
                    Entry::Real(x) => Ok(C64::new(x, 0.0)),
                    Entry::Complex([re, im]) => Ok(C64::new(re, im)),
                    Entry::Quaternion(_) => Err(narrow("quaternion")),
                })
                .collect::<Result<Vec<_>>>()?;
            AlgebraElement::from_complex_rows(d, &zs)?
        }
        GroundRing::Quaternion => {
            let qs: Vec<[f64; 4]> = entries.map(Entry::quaternion).collect();
            AlgebraElement::from_quaternion_rows(d, &qs)?
        }
    };
    Ok(el)
}

pub fn symplectic_to_json(g: &SymplecticElement) -> SymplecticJson {
    let [a, b, c, d] = g.matrix().blocks();
    SymplecticJson { a: matrix_to_json(a), b: matrix_to_json(b), c: matrix_to_json(c), d: matrix_to_json(d) }
}

/// Fails with `NotSymplectic` unless the blocks form an element of `Sp2`.
pub fn symplectic_from_json(desc: AlgebraDescriptor, s: &SymplecticJson) -> Result<SymplecticElement> {
    let m = |x| matrix_from_json(desc, x);
    Ok(SymplecticElement::from_blocks(m(&s.a)?, m(&s.b)?, m(&s.c)?, m(&s.d)?)?)
}

pub fn line_to_json(l: &IsotropicLine) -> LineJson {
    let x = l.representative();
    LineJson { x1: matrix_to_json(&x.x1), x2: matrix_to_json(&x.x2) }
}

pub fn line_from_json(desc: AlgebraDescriptor, l: &LineJson) -> Result<IsotropicLine> {
    Ok(IsotropicLine::from_parts(matrix_from_json(desc, &l.x1)?, matrix_from_json(desc, &l.x2)?)?)
}

pub fn surface_to_json(spec: &PolygonSpec) -> SurfaceJson {
    SurfaceJson {
        triangles: spec.triangles.clone(),
        pairings: spec.pairings.iter().map(|&((t1, s1), (t2, s2))| [[t1, s1], [t2, s2]]).collect(),
    }
}

pub fn surface_from_json(j: &SurfaceJson) -> PolygonSpec {
    PolygonSpec {
        triangles: j.triangles.clone(),
        pairings: j.pairings.iter().map(|[[t1, s1], [t2, s2]]| ((*t1, *s1), (*t2, *s2))).collect(),
    }
}

pub fn coordinates_to_json(c: &CoordinateVector) -> CoordinatesJson {
    CoordinatesJson {
        algebra: descriptor_to_json(&c.algebra),
        b: c.b.iter().map(|(e, m)| (e.to_string(), matrix_to_json(m))).collect(),
        u: c.u.iter().map(|(j, m)| (pairing_key(*j), matrix_to_json(m))).collect(),
    }
}

/// Only the shape is checked here; `CoordinateVector::validate` checks
/// domains against a polygon.
pub fn coordinates_from_json(j: &CoordinatesJson, tol: Option<f64>) -> Result<CoordinateVector> {
    let algebra = descriptor_from_json(&j.algebra, tol)?;
    let b =
        j.b.iter().map(|(k, m)| Ok((k.parse::<EdgeId>()?, matrix_from_json(algebra, m)?))).collect::<Result<_>>()?;
    let u =
        j.u.iter().map(|(k, m)| Ok((parse_pairing_key(k)?, matrix_from_json(algebra, m)?))).collect::<Result<_>>()?;
    Ok(CoordinateVector { algebra, b, u })
}

pub fn representation_to_json(fr: &FramedRepresentation) -> RepresentationJson {
    RepresentationJson {
        algebra: descriptor_to_json(&fr.algebra),
        generators: fr.generators.iter().enumerate().map(|(j, g)| (pairing_key(j), symplectic_to_json(g))).collect(),
        framing: fr.framing.iter().map(|(c, l)| (c.to_string(), line_to_json(l))).collect(),
    }
}

pub fn representation_from_json(j: &RepresentationJson, tol: Option<f64>) -> Result<FramedRepresentation> {
    let algebra = descriptor_from_json(&j.algebra, tol)?;
    let mut indexed = j
        .generators
        .iter()
        .map(|(k, s)| Ok((parse_pairing_key(k)?, symplectic_from_json(algebra, s)?)))
        .collect::<Result<Vec<_>>>()?;
    indexed.sort_by_key(|(k, _)| *k);
    if indexed.iter().enumerate().any(|(i, (k, _))| i != *k) {
        return Err(Error::Format("generator ids must be p0, p1, ... without gaps".into()));
    }
    let framing = j
        .framing
        .iter()
        .map(|(k, l)| {
            let corner = k.parse::<u32>().map_err(|_| Error::Format(format!("bad corner id {k:?}")))?;
            Ok((corner, line_from_json(algebra, l)?))
        })
        .collect::<Result<_>>()?;
    Ok(FramedRepresentation { algebra, generators: indexed.into_iter().map(|(_, g)| g).collect(), framing })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_pretty(value)?).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
