//! Bundled fundamental polygons.

use alloc::vec;
use alloc::vec::Vec;

use crate::surface::PolygonSpec;

/// One ideal triangle.
pub fn triangle() -> PolygonSpec {
    PolygonSpec { triangles: vec![[0, 1, 2]], pairings: vec![] }
}

/// Two triangles sharing the diagonal `0 -- 2`.
pub fn quadrilateral() -> PolygonSpec {
    PolygonSpec { triangles: vec![[0, 1, 2], [0, 2, 3]], pairings: vec![] }
}

/// Square with opposite sides glued.
pub fn punctured_torus() -> PolygonSpec {
    PolygonSpec { triangles: vec![[0, 1, 2], [0, 2, 3]], pairings: vec![((0, 0), (1, 1)), ((0, 1), (1, 2))] }
}

/// Hexagon fanned from corner 0, adjacent sides glued in pairs.
pub fn four_punctured_sphere() -> PolygonSpec {
    PolygonSpec {
        triangles: vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5]],
        pairings: vec![((0, 0), (0, 1)), ((1, 1), (2, 1)), ((3, 1), (3, 2))],
    }
}

/// Octagon fanned from corner 0 with side word `a b a^-1 b^-1 c d c^-1 d^-1`.
pub fn genus_two_one_puncture() -> PolygonSpec {
    // boundary side i of the octagon as (triangle, side)
    let side = |i: usize| match i {
        0 => (0, 0),
        7 => (5, 2),
        i => (i - 1, 1),
    };
    PolygonSpec {
        triangles: (0..6).map(|k| [0, k + 1, k + 2]).collect(),
        pairings: vec![(side(0), side(2)), (side(1), side(3)), (side(4), side(6)), (side(5), side(7))],
    }
}

/// Every bundled polygon with its name.
pub fn all() -> Vec<(&'static str, PolygonSpec)> {
    vec![
        ("triangle", triangle()),
        ("quadrilateral", quadrilateral()),
        ("punctured-torus", punctured_torus()),
        ("four-punctured-sphere", four_punctured_sphere()),
        ("genus-two", genus_two_one_puncture()),
    ]
}

pub fn by_name(name: &str) -> Option<PolygonSpec> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, s)| s)
}
