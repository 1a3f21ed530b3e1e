//! Punctured surfaces presented by a triangulated fundamental polygon with
//! paired boundary sides, and the graph `Gamma` whose vertices are the
//! (triangle, side) incidences of the polygon.
//!
//! Conventions. Triangle corners are listed counterclockwise and side `s`
//! runs from corner `s` to corner `s + 1`. A side whose reverse appears in
//! another triangle is a diagonal. A pairing glues two boundary sides with
//! reversed orientation: the start of one side meets the end of the other.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Topological type `(g, p_i, m, p_e)` of a punctured surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceDescriptor {
    pub genus: u32,
    pub internal_punctures: u32,
    pub boundary_components: u32,
    pub external_punctures: u32,
}

impl SurfaceDescriptor {
    pub fn new(genus: u32, internal_punctures: u32, boundary_components: u32, external_punctures: u32) -> Self {
        Self { genus, internal_punctures, boundary_components, external_punctures }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.internal_punctures as i64 - self.boundary_components as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceStats {
    pub chi: i64,
    pub triangles: i64,
    pub internal_edges: i64,
    pub pairings: i64,
}

/// Euler characteristic, triangle count, internal edge count and number of
/// free generators of the fundamental group.
pub fn surface_stats(d: &SurfaceDescriptor) -> Result<SurfaceStats> {
    let chi = d.euler_characteristic();
    let (g, pi, m, pe) =
        (d.genus as i64, d.internal_punctures as i64, d.boundary_components as i64, d.external_punctures as i64);
    if pe < m {
        return Err(Error::InvalidSurface(String::from("every boundary component needs a puncture")));
    }
    if m == 0 && pe > 0 {
        return Err(Error::InvalidSurface(String::from("external punctures need a boundary")));
    }
    let disc = g == 0 && m == 1 && pi == 0 && pe >= 3;
    if chi >= 0 && !disc {
        return Err(Error::InvalidSurface(format!("no ideal triangulation with chi = {chi}")));
    }
    Ok(SurfaceStats {
        chi,
        triangles: 4 * g - 4 + 2 * pi + 2 * m + pe,
        internal_edges: pe - 3 * chi,
        pairings: 1 - chi,
    })
}

/// `(triangle, side)`.
pub type SideRef = (usize, usize);

/// Raw polygon data: triangles by corner labels plus side pairings.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolygonSpec {
    pub triangles: Vec<[u32; 3]>,
    pub pairings: Vec<(SideRef, SideRef)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideKind {
    /// Shared with the partner side of another triangle.
    Diagonal {
        id: usize,
        partner: SideRef,
    },
    /// Glued to the partner side by pairing `id`; `first` marks the side
    /// listed first in the pairing.
    Paired {
        id: usize,
        partner: SideRef,
        first: bool,
    },
    External,
}

/// A diagonal, stored with the side in the earlier triangle first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diagonal {
    pub lower: SideRef,
    pub upper: SideRef,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub first: SideRef,
    pub second: SideRef,
}

/// A validated fundamental polygon together with the topology of the
/// glued surface.
#[derive(Clone, Debug)]
pub struct FundamentalPolygon {
    triangles: Vec<[u32; 3]>,
    sides: Vec<[SideKind; 3]>,
    diagonals: Vec<Diagonal>,
    pairings: Vec<Pairing>,
    puncture_of: BTreeMap<u32, usize>,
    external_puncture: Vec<bool>,
    descriptor: SurfaceDescriptor,
    stats: SurfaceStats,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn side_corners(t: &[u32; 3], s: usize) -> (u32, u32) {
    (t[s], t[(s + 1) % 3])
}

/// Validate incidence data, glue, and audit the counts of the glued surface.
pub fn build_polygon(spec: &PolygonSpec) -> Result<FundamentalPolygon> {
    let tris = &spec.triangles;
    if tris.is_empty() {
        return Err(Error::InvalidSurface(String::from("no triangles")));
    }
    for (t, c) in tris.iter().enumerate() {
        if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
            return Err(Error::InvalidSurface(format!("triangle {t} has a repeated corner")));
        }
    }

    let mut directed: BTreeMap<(u32, u32), SideRef> = BTreeMap::new();
    for (t, c) in tris.iter().enumerate() {
        for s in 0..3 {
            if directed.insert(side_corners(c, s), (t, s)).is_some() {
                return Err(Error::InvalidSurface(format!(
                    "side {:?} appears twice with the same direction",
                    side_corners(c, s)
                )));
            }
        }
    }

    let mut sides = vec![[SideKind::External; 3]; tris.len()];
    let mut diagonals = Vec::new();
    for (t, c) in tris.iter().enumerate() {
        for s in 0..3 {
            let (a, b) = side_corners(c, s);
            if let Some(&(t2, s2)) = directed.get(&(b, a)) {
                if t < t2 {
                    let id = diagonals.len();
                    diagonals.push(Diagonal { lower: (t, s), upper: (t2, s2) });
                    sides[t][s] = SideKind::Diagonal { id, partner: (t2, s2) };
                    sides[t2][s2] = SideKind::Diagonal { id, partner: (t, s) };
                }
            }
        }
    }

    let mut pairings = Vec::new();
    for (id, &(p, q)) in spec.pairings.iter().enumerate() {
        for r in [p, q] {
            if r.0 >= tris.len() || r.1 >= 3 {
                return Err(Error::BadPairing(format!("side {r:?} does not exist")));
            }
        }
        if p == q {
            return Err(Error::BadPairing(format!("side {p:?} paired with itself")));
        }
        for r in [p, q] {
            match sides[r.0][r.1] {
                SideKind::External => {}
                SideKind::Diagonal { .. } => return Err(Error::BadPairing(format!("side {r:?} is a diagonal"))),
                SideKind::Paired { .. } => return Err(Error::BadPairing(format!("side {r:?} is paired twice"))),
            }
        }
        sides[p.0][p.1] = SideKind::Paired { id, partner: q, first: true };
        sides[q.0][q.1] = SideKind::Paired { id, partner: p, first: false };
        pairings.push(Pairing { first: p, second: q });
    }

    // the dual graph through diagonals must be connected
    let mut seen = vec![false; tris.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(t) = queue.pop_front() {
        for kind in &sides[t] {
            if let SideKind::Diagonal { partner, .. } = kind {
                if !seen[partner.0] {
                    seen[partner.0] = true;
                    queue.push_back(partner.0);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::DisconnectedDomain);
    }

    // punctures: polygon corners modulo the pairings
    let labels: BTreeSet<u32> = tris.iter().flatten().copied().collect();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut uf = UnionFind::new(labels.len());
    for p in &pairings {
        let (a1, b1) = side_corners(&tris[p.first.0], p.first.1);
        let (a2, b2) = side_corners(&tris[p.second.0], p.second.1);
        uf.union(index[&a1], index[&b2]);
        uf.union(index[&b1], index[&a2]);
    }
    let mut class_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut puncture_of = BTreeMap::new();
    for (&c, &i) in &index {
        let root = uf.find(i);
        let next = class_id.len();
        let id = *class_id.entry(root).or_insert(next);
        puncture_of.insert(c, id);
    }
    let punctures = class_id.len();

    // boundary of the glued surface: external sides between puncture classes
    let mut external_puncture = vec![false; punctures];
    let mut degree = vec![0usize; punctures];
    let mut boundary = UnionFind::new(punctures);
    let mut external_sides = 0usize;
    for (c, kinds) in tris.iter().zip(&sides) {
        for (s, kind) in kinds.iter().enumerate() {
            if *kind == SideKind::External {
                external_sides += 1;
                let (a, b) = side_corners(c, s);
                let (pa, pb) = (puncture_of[&a], puncture_of[&b]);
                external_puncture[pa] = true;
                external_puncture[pb] = true;
                degree[pa] += 1;
                degree[pb] += 1;
                boundary.union(pa, pb);
            }
        }
    }
    for (p, &ext) in external_puncture.iter().enumerate() {
        if ext && degree[p] != 2 {
            return Err(Error::InvalidSurface(format!(
                "puncture {p} meets {} external sides; the boundary is not a union of circles",
                degree[p]
            )));
        }
    }
    let components: BTreeSet<usize> =
        (0..punctures).filter(|&p| external_puncture[p]).map(|p| boundary.find(p)).collect();

    let f = tris.len() as i64;
    let polygon_euler = labels.len() as i64 - (diagonals.len() + 2 * pairings.len() + external_sides) as i64 + f;
    if polygon_euler != 1 {
        return Err(Error::EulerMismatch(format!("polygon is not a disc (V - E + F = {polygon_euler})")));
    }
    let m = components.len() as i64;
    let p_e = external_puncture.iter().filter(|&&e| e).count() as i64;
    let p_i = punctures as i64 - p_e;
    let closed_euler = punctures as i64 - (diagonals.len() + pairings.len() + external_sides) as i64 + f;
    let twice_genus = 2 - m - closed_euler;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::EulerMismatch(format!(
            "glued complex has Euler characteristic {closed_euler} with {m} boundary circles"
        )));
    }
    let descriptor = SurfaceDescriptor::new((twice_genus / 2) as u32, p_i as u32, m as u32, p_e as u32);
    let stats = surface_stats(&descriptor)?;

    let audits = [
        ("triangles", f, stats.triangles),
        ("diagonals", diagonals.len() as i64, f - 1),
        ("pairings", pairings.len() as i64, stats.pairings),
        ("internal edges", (diagonals.len() + pairings.len()) as i64, stats.internal_edges),
        ("Euler characteristic", closed_euler - p_i, stats.chi),
    ];
    for (what, got, expected) in audits {
        if got != expected {
            return Err(Error::EulerMismatch(format!("{what}: polygon has {got}, surface type needs {expected}")));
        }
    }

    Ok(FundamentalPolygon {
        triangles: tris.clone(),
        sides,
        diagonals,
        pairings,
        puncture_of,
        external_puncture,
        descriptor,
        stats,
    })
}

impl FundamentalPolygon {
    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn side_kind(&self, side: SideRef) -> SideKind {
        self.sides[side.0][side.1]
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn descriptor(&self) -> &SurfaceDescriptor {
        &self.descriptor
    }

    pub fn stats(&self) -> &SurfaceStats {
        &self.stats
    }

    /// Corner labels of the polygon, ascending.
    pub fn corners(&self) -> impl Iterator<Item = u32> + '_ {
        self.puncture_of.keys().copied()
    }

    /// Puncture class of a polygon corner.
    pub fn puncture(&self, corner: u32) -> Option<usize> {
        self.puncture_of.get(&corner).copied()
    }

    pub fn num_punctures(&self) -> usize {
        self.external_puncture.len()
    }

    pub fn is_external_puncture(&self, p: usize) -> bool {
        self.external_puncture[p]
    }

    /// Start and end corner of a side.
    pub fn side_corners(&self, side: SideRef) -> (u32, u32) {
        side_corners(&self.triangles[side.0], side.1)
    }

    /// The `Gamma` vertex of a side.
    pub fn vertex(side: SideRef) -> usize {
        3 * side.0 + side.1
    }

    /// Corner identifications made by a pairing: each pair is
    /// (corner on the first side, matching corner on the second side).
    pub fn pairing_corner_matches(&self, id: usize) -> [(u32, u32); 2] {
        let p = self.pairings[id];
        let (a1, b1) = self.side_corners(p.first);
        let (a2, b2) = self.side_corners(p.second);
        [(b1, a2), (a1, b2)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaEdgeKind {
    /// From side `s` to side `s + 1` of the same triangle.
    InTriangle,
    /// Across diagonal `id`, from the earlier triangle to the later one.
    Crossing(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaEdge {
    pub from: usize,
    pub to: usize,
    pub kind: GammaEdgeKind,
}

/// The graph `Gamma_0` on the polygon: vertex `3t + s` sits on side `s` of
/// triangle `t`.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    polygon: FundamentalPolygon,
    edges: Vec<GammaEdge>,
    /// Per vertex, incident edges as `(edge index, neighbour, forward)`,
    /// sorted by neighbour.
    adjacency: Vec<Vec<(usize, usize, bool)>>,
}

/// One step of a path in `Gamma`, possibly against the edge orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
    pub forward: bool,
}

pub fn build_gamma(p: &FundamentalPolygon) -> GammaGraph {
    let nv = 3 * p.num_triangles();
    let mut edges = Vec::new();
    for t in 0..p.num_triangles() {
        for s in 0..3 {
            edges.push(GammaEdge { from: 3 * t + s, to: 3 * t + (s + 1) % 3, kind: GammaEdgeKind::InTriangle });
        }
    }
    for (id, d) in p.diagonals.iter().enumerate() {
        edges.push(GammaEdge {
            from: FundamentalPolygon::vertex(d.lower),
            to: FundamentalPolygon::vertex(d.upper),
            kind: GammaEdgeKind::Crossing(id),
        });
    }
    let mut adjacency = vec![Vec::new(); nv];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.from].push((i, e.to, true));
        adjacency[e.to].push((i, e.from, false));
    }
    for adj in &mut adjacency {
        adj.sort_by_key(|&(i, w, _)| (w, i));
    }
    GammaGraph { polygon: p.clone(), edges, adjacency }
}

impl GammaGraph {
    pub fn polygon(&self) -> &FundamentalPolygon {
        &self.polygon
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[GammaEdge] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[(usize, usize, bool)] {
        &self.adjacency[v]
    }

    fn corner(&self, v: usize, offset: usize) -> u32 {
        self.polygon.triangles[v / 3][(v % 3 + offset) % 3]
    }

    pub fn top(&self, v: usize) -> u32 {
        self.corner(v, 0)
    }

    pub fn bottom(&self, v: usize) -> u32 {
        self.corner(v, 1)
    }

    pub fn right(&self, v: usize) -> u32 {
        self.corner(v, 2)
    }

    /// The corner opposite `v` across its side, for vertices on diagonals.
    pub fn left(&self, v: usize) -> Option<u32> {
        match self.polygon.side_kind((v / 3, v % 3)) {
            SideKind::Diagonal { partner, .. } => Some(self.right(FundamentalPolygon::vertex(partner))),
            _ => None,
        }
    }

    /// Breadth-first shortest path, ties broken by vertex index.
    pub fn path_between(&self, v: usize, w: usize) -> Result<Vec<PathStep>> {
        let nv = self.num_vertices();
        if v >= nv || w >= nv {
            return Err(Error::Unreachable { from: v, to: w });
        }
        let mut prev: Vec<Option<PathStep>> = vec![None; nv];
        let mut seen = vec![false; nv];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x == w {
                break;
            }
            for &(edge, y, forward) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some(PathStep { edge, from: x, to: y, forward });
                    queue.push_back(y);
                }
            }
        }
        if !seen[w] {
            return Err(Error::Unreachable { from: v, to: w });
        }
        let mut path = Vec::new();
        let mut x = w;
        while x != v {
            let step = prev[x].expect("visited vertices have a parent");
            path.push(step);
            x = step.from;
        }
        path.reverse();
        Ok(path)
    }

    /// Breadth-first spanning tree from `root`: for every other vertex, the
    /// step that first reached it, in visiting order.
    pub fn spanning_tree(&self, root: usize) -> Result<Vec<PathStep>> {
        let nv = self.num_vertices();
        let mut seen = vec![false; nv];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut steps = Vec::with_capacity(nv.saturating_sub(1));
        while let Some(x) = queue.pop_front() {
            for &(edge, y, forward) in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    steps.push(PathStep { edge, from: x, to: y, forward });
                    queue.push_back(y);
                }
            }
        }
        if let Some(unreached) = seen.iter().position(|s| !s) {
            return Err(Error::Unreachable { from: root, to: unreached });
        }
        Ok(steps)
    }
}
