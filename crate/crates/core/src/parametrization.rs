//! Coordinates for maximal framed representations.
//!
//! A coordinate vector assigns a positive element to every internal edge
//! (diagonals of the polygon and pairing classes) and a unitary element to
//! every pairing. [`synthesize`] builds the trivial framed local system on
//! `Gamma_0` and reads off the representation of the free group generated
//! by the pairings; [`extract`] inverts it.
//!
//! Conventions. `T(base) = Id`. Inside a triangle `T(v_{s+1}) = turn T(v_s)`;
//! across diagonal `r` from the earlier to the later triangle
//! `T(v') = edge_matrix(b_r) T(v)`. For pairing `e` with sides `v*` (first)
//! and `w*` (second) the transition is `P_e = pairing_matrix(u_e, b_e^-1/2)`
//! and the generator is `rho(e) = T(w*)^-1 P_e T(v*)`, which carries the
//! framing of the first side onto the second.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::Rng;

use crate::algebra::{sample_with, sq, AlgebraDescriptor, AlgebraElement, SampleKind};
use crate::error::{Error, Result};
use crate::lines::{act, is_maximal_triple, is_transverse, normalize_triple, IsotropicLine};
use crate::surface::{
    build_gamma, surface_stats, FundamentalPolygon, GammaEdgeKind, GammaGraph, PathStep, SurfaceDescriptor,
};
use crate::symplectic::{Mat2, SymplecticElement};

/// Cycle closure and framing consistency are checked at this multiple of the
/// descriptor tolerance.
pub const CLOSURE_FACTOR: f64 = 1e2;

/// `[[-1, 1], [-1, 0]]`, the transition between consecutive sides of a triangle.
pub fn turn_matrix(desc: AlgebraDescriptor) -> SymplecticElement {
    let one = AlgebraElement::identity(desc);
    SymplecticElement::from_blocks(-&one, one.clone(), -&one, AlgebraElement::zero(desc))
        .expect("turn matrix is symplectic")
}

/// `[[0, a^-1/2], [-a^1/2, 0]]`, the transition across an edge with coordinate `a`.
pub fn edge_matrix(a: &AlgebraElement) -> Result<SymplecticElement> {
    let root = a.sqrt_positive()?;
    let root_inv = a.inverse_sqrt_positive()?;
    let zero = AlgebraElement::zero(*a.descriptor());
    SymplecticElement::from_blocks(zero.clone(), root_inv, -&root, zero)
}

/// `diag(u b, u b^-1) Omega = [[0, u b], [-u b^-1, 0]]`.
pub fn pairing_matrix(u: &AlgebraElement, b: &AlgebraElement) -> Result<SymplecticElement> {
    u.check_same(b)?;
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if !b.is_positive() {
        return Err(Error::NotPositive);
    }
    let zero = AlgebraElement::zero(*u.descriptor());
    SymplecticElement::from_blocks(zero.clone(), u * b, -&(u * &b.inverse()?), zero)
}

/// Internal edge of the glued surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeId {
    Diagonal(usize),
    Pairing(usize),
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeId::Diagonal(i) => write!(f, "d{i}"),
            EdgeId::Pairing(i) => write!(f, "p{i}"),
        }
    }
}

impl FromStr for EdgeId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::DomainMismatch(format!("bad edge id {s:?}"));
        let (head, tail) = s.split_at_checked(1).ok_or_else(bad)?;
        let i: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "d" => Ok(EdgeId::Diagonal(i)),
            "p" => Ok(EdgeId::Pairing(i)),
            _ => Err(bad()),
        }
    }
}

/// Pairing ids are written `p{j}`.
pub fn pairing_key(j: usize) -> String {
    EdgeId::Pairing(j).to_string()
}

pub fn parse_pairing_key(s: &str) -> Result<usize> {
    match s.parse::<EdgeId>()? {
        EdgeId::Pairing(j) => Ok(j),
        EdgeId::Diagonal(_) => Err(Error::DomainMismatch(format!("{s:?} is not a pairing id"))),
    }
}

/// Positive elements on internal edges and unitary elements on pairings.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateVector {
    pub algebra: AlgebraDescriptor,
    pub b: BTreeMap<EdgeId, AlgebraElement>,
    pub u: BTreeMap<usize, AlgebraElement>,
}

impl CoordinateVector {
    /// Check domains against the polygon and the cone and group conditions.
    pub fn validate(&self, p: &FundamentalPolygon) -> Result<()> {
        let expected_b: Vec<EdgeId> = (0..p.diagonals().len())
            .map(EdgeId::Diagonal)
            .chain((0..p.pairings().len()).map(EdgeId::Pairing))
            .collect();
        let mut got_b: Vec<EdgeId> = self.b.keys().copied().collect();
        got_b.sort();
        let mut want = expected_b.clone();
        want.sort();
        if got_b != want {
            return Err(Error::DomainMismatch(format!("edge coordinates for {:?}, polygon has {:?}", got_b, want)));
        }
        let got_u: Vec<usize> = self.u.keys().copied().collect();
        let want_u: Vec<usize> = (0..p.pairings().len()).collect();
        if got_u != want_u {
            return Err(Error::DomainMismatch(format!(
                "unitary coordinates for {:?}, polygon has {:?}",
                got_u, want_u
            )));
        }
        for x in self.b.values().chain(self.u.values()) {
            if !x.descriptor().same_algebra(&self.algebra) {
                return Err(Error::DescriptorMismatch);
            }
        }
        if !self.b.values().all(AlgebraElement::is_positive) {
            return Err(Error::NotPositive);
        }
        if !self.u.values().all(AlgebraElement::is_unitary) {
            return Err(Error::NotUnitary);
        }
        Ok(())
    }

    /// Largest relative deviation between matching slots.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        if self.b.len() != other.b.len() || self.u.len() != other.u.len() {
            return Err(Error::DomainMismatch("coordinate domains differ".to_string()));
        }
        let mut worst: f64 = 0.0;
        for (k, x) in &self.b {
            let y = other.b.get(k).ok_or_else(|| Error::DomainMismatch(format!("missing {k}")))?;
            worst = worst.max(x.distance(y) / x.norm().max(1.0));
        }
        for (k, x) in &self.u {
            let y = other.u.get(k).ok_or_else(|| Error::DomainMismatch(format!("missing p{k}")))?;
            worst = worst.max(x.distance(y) / x.norm().max(1.0));
        }
        Ok(worst)
    }

    /// All slots conjugated by one unitary `w`.
    pub fn conjugate(&self, w: &AlgebraElement) -> Result<Self> {
        if !w.is_unitary() {
            return Err(Error::NotUnitary);
        }
        let ws = w.sigma();
        let conj = |x: &AlgebraElement| &(w * x) * &ws;
        Ok(Self {
            algebra: self.algebra,
            b: self.b.iter().map(|(k, x)| (*k, conj(x).symmetrized())).collect(),
            u: self.u.iter().map(|(k, x)| (*k, conj(x))).collect(),
        })
    }
}

/// Random coordinates for a polygon.
pub fn sample_coordinates<R: Rng + ?Sized>(
    p: &FundamentalPolygon,
    desc: AlgebraDescriptor,
    rng: &mut R,
) -> CoordinateVector {
    let mut b = BTreeMap::new();
    for i in 0..p.diagonals().len() {
        b.insert(EdgeId::Diagonal(i), sample_with(desc, SampleKind::Positive, rng));
    }
    let mut u = BTreeMap::new();
    for j in 0..p.pairings().len() {
        b.insert(EdgeId::Pairing(j), sample_with(desc, SampleKind::Positive, rng));
        u.insert(j, sample_with(desc, SampleKind::Unitary, rng));
    }
    CoordinateVector { algebra: desc, b, u }
}

/// A trivial local system on `Gamma_0` together with the transitions across
/// the pairings.
#[derive(Clone, Debug)]
pub struct LocalSystem {
    gamma: GammaGraph,
    base: usize,
    vertex: Vec<SymplecticElement>,
    edge: Vec<SymplecticElement>,
    pairing: Vec<SymplecticElement>,
}

impl LocalSystem {
    pub fn gamma(&self) -> &GammaGraph {
        &self.gamma
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn vertex_map(&self, v: usize) -> &SymplecticElement {
        &self.vertex[v]
    }

    /// The transition `T(to <- from)` stored on a `Gamma_0` edge.
    pub fn edge_map(&self, edge: usize) -> &SymplecticElement {
        &self.edge[edge]
    }

    /// The transition across pairing `e`, from its first side to its second.
    pub fn pairing_map(&self, e: usize) -> &SymplecticElement {
        &self.pairing[e]
    }

    /// `T(v' <- v) = T(v') T(v)^-1`.
    pub fn transition(&self, to: usize, from: usize) -> SymplecticElement {
        self.vertex[to].mul_unchecked(&self.vertex[from].inverse_fast())
    }

    fn step_matrix(&self, step: &PathStep) -> SymplecticElement {
        let m = &self.edge[step.edge];
        if step.forward {
            m.clone()
        } else {
            m.inverse_fast()
        }
    }

    /// Product of edge transitions along a path.
    pub fn transport(&self, path: &[PathStep]) -> SymplecticElement {
        let mut g = SymplecticElement::identity(*self.vertex[0].descriptor());
        for step in path {
            g = self.step_matrix(step).mul_unchecked(&g);
        }
        g
    }

    /// Transport from `from` to `to` along the breadth-first path, optionally
    /// routed through `via`.
    pub fn transport_between(&self, from: usize, to: usize, via: Option<usize>) -> Result<SymplecticElement> {
        match via {
            None => Ok(self.transport(&self.gamma.path_between(from, to)?)),
            Some(x) => {
                let first = self.transport(&self.gamma.path_between(from, x)?);
                let second = self.transport(&self.gamma.path_between(x, to)?);
                Ok(second.mul_unchecked(&first))
            }
        }
    }

    /// Largest relative defect of `T(to) = T(to <- from) T(from)` over all edges.
    pub fn closure_residual(&self) -> f64 {
        self.gamma
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (m, t) = (&self.edge[i], &self.vertex[e.from]);
                let moved = m.mul_unchecked(t);
                moved.matrix().distance(self.vertex[e.to].matrix()) / (m.matrix().norm() * t.matrix().norm()).max(1.0)
            })
            .fold(0.0, f64::max)
    }

    /// Loop at `v` crossing pairing `e` once, computed from edge transitions
    /// only: `T(v <- w*) P_e T(v* <- v)`.
    pub fn pairing_loop(&self, e: usize, v: usize, via: Option<usize>) -> Result<SymplecticElement> {
        let p = *self.gamma.polygon().pairings().get(e).ok_or(Error::UnknownGenerator(e))?;
        let (vs, ws) = (FundamentalPolygon::vertex(p.first), FundamentalPolygon::vertex(p.second));
        let out = self.transport_between(v, vs, via)?;
        let back = self.transport_between(ws, v, via)?;
        Ok(back.mul_unchecked(&self.pairing[e]).mul_unchecked(&out))
    }

    /// `rho(e)` recovered from [`LocalSystem::pairing_loop`] based at `v`.
    pub fn path_holonomy(&self, e: usize, v: usize, via: Option<usize>) -> Result<SymplecticElement> {
        let l = self.pairing_loop(e, v, via)?;
        let t = &self.vertex[v];
        Ok(t.inverse_fast().mul_unchecked(&l).mul_unchecked(t))
    }
}

/// Generators of the free group (one per pairing) and a framing of the
/// polygon corners.
#[derive(Clone, Debug)]
pub struct FramedRepresentation {
    pub algebra: AlgebraDescriptor,
    pub generators: Vec<SymplecticElement>,
    pub framing: BTreeMap<u32, IsotropicLine>,
}

impl FramedRepresentation {
    fn line(&self, corner: u32) -> Result<&IsotropicLine> {
        self.framing.get(&corner).ok_or_else(|| Error::DomainMismatch(format!("no line for corner {corner}")))
    }

    fn check_domain(&self, p: &FundamentalPolygon) -> Result<()> {
        if self.generators.len() != p.pairings().len() {
            return Err(Error::DomainMismatch(format!(
                "{} generators for {} pairings",
                self.generators.len(),
                p.pairings().len()
            )));
        }
        let corners: Vec<u32> = p.corners().collect();
        let framed: Vec<u32> = self.framing.keys().copied().collect();
        if corners != framed {
            return Err(Error::DomainMismatch(format!("framing on {framed:?}, polygon corners {corners:?}")));
        }
        let same = |d: &AlgebraDescriptor| d.same_algebra(&self.algebra);
        if !self.generators.iter().all(|g| same(g.descriptor())) || !self.framing.values().all(|l| same(l.descriptor()))
        {
            return Err(Error::DescriptorMismatch);
        }
        Ok(())
    }

    /// `g rho g^-1` and `g F`.
    pub fn conjugate(&self, g: &SymplecticElement) -> Result<Self> {
        let gi = g.inverse()?;
        Ok(Self {
            algebra: self.algebra,
            generators: self.generators.iter().map(|r| g.compose(r)?.compose(&gi)).collect::<Result<_>>()?,
            framing: self.framing.iter().map(|(c, l)| (*c, act(g, l))).collect(),
        })
    }
}

fn check_base(gamma: &GammaGraph, base: usize) -> Result<()> {
    if base >= gamma.num_vertices() {
        return Err(Error::DomainMismatch(format!(
            "base vertex {base} out of range (graph has {})",
            gamma.num_vertices()
        )));
    }
    Ok(())
}

/// Coordinates to framed local system and representation.
pub fn synthesize(
    p: &FundamentalPolygon,
    c: &CoordinateVector,
    base: usize,
) -> Result<(LocalSystem, FramedRepresentation)> {
    c.validate(p)?;
    let desc = c.algebra;
    let tol = desc.tol();
    let gamma = build_gamma(p);
    check_base(&gamma, base)?;

    let turn = turn_matrix(desc);
    let edge: Vec<SymplecticElement> = gamma
        .edges()
        .iter()
        .map(|e| match e.kind {
            GammaEdgeKind::InTriangle => Ok(turn.clone()),
            GammaEdgeKind::Crossing(d) => edge_matrix(&c.b[&EdgeId::Diagonal(d)]),
        })
        .collect::<Result<_>>()?;
    let pairing: Vec<SymplecticElement> = (0..p.pairings().len())
        .map(|j| pairing_matrix(&c.u[&j], &c.b[&EdgeId::Pairing(j)].inverse_sqrt_positive()?))
        .collect::<Result<_>>()?;

    let mut vertex: Vec<Option<SymplecticElement>> = (0..gamma.num_vertices()).map(|_| None).collect();
    vertex[base] = Some(SymplecticElement::identity(desc));
    for step in gamma.spanning_tree(base)? {
        let m = if step.forward { edge[step.edge].clone() } else { edge[step.edge].inverse_fast() };
        let t = m.mul_unchecked(vertex[step.from].as_ref().expect("tree order"));
        vertex[step.to] = Some(SymplecticElement::new(t.into_matrix()).map_err(|e| match e {
            Error::NotSymplectic { residual } => Error::MembershipDrift { residual },
            other => other,
        })?);
    }
    let ls = LocalSystem {
        gamma,
        base,
        vertex: vertex.into_iter().map(|t| t.expect("spanning tree reaches every vertex")).collect(),
        edge,
        pairing,
    };
    let residual = ls.closure_residual();
    if residual > CLOSURE_FACTOR * tol {
        return Err(Error::CycleClosureFailure { residual });
    }

    let (plus, minus, one) = (IsotropicLine::plus(desc), IsotropicLine::minus(desc), IsotropicLine::one(desc));
    let mut framing: BTreeMap<u32, IsotropicLine> = BTreeMap::new();
    for v in 0..ls.gamma.num_vertices() {
        let t_inv = ls.vertex[v].inverse_fast();
        let scale = sq(ls.vertex[v].matrix().norm()).max(1.0);
        let corners = [(ls.gamma.top(v), &plus), (ls.gamma.bottom(v), &minus), (ls.gamma.right(v), &one)];
        for (corner, model) in corners {
            let line = act(&t_inv, model);
            match framing.get(&corner) {
                None => {
                    framing.insert(corner, line);
                }
                Some(existing) => {
                    if existing.distance(&line) > CLOSURE_FACTOR * tol * scale {
                        return Err(Error::InconsistentFraming { corner });
                    }
                }
            }
        }
    }

    let generators = p
        .pairings()
        .iter()
        .enumerate()
        .map(|(j, pr)| {
            let (vs, ws) = (FundamentalPolygon::vertex(pr.first), FundamentalPolygon::vertex(pr.second));
            ls.vertex[ws].inverse()?.compose(&ls.pairing[j])?.compose(&ls.vertex[vs])
        })
        .collect::<Result<_>>()?;

    Ok((ls, FramedRepresentation { algebra: desc, generators, framing }))
}

/// Framed representation back to coordinates, normalized so that the base
/// triangle's framing is `(l+, l-, l1)`.
pub fn extract(fr: &FramedRepresentation, p: &FundamentalPolygon, base: usize) -> Result<CoordinateVector> {
    extract_with_local_system(fr, p, base).map(|(_, c)| c)
}

pub fn extract_with_local_system(
    fr: &FramedRepresentation,
    p: &FundamentalPolygon,
    base: usize,
) -> Result<(LocalSystem, CoordinateVector)> {
    fr.check_domain(p)?;
    let desc = fr.algebra;
    let tol = desc.tol();
    for tri in p.triangles() {
        let [a, b, c] = [fr.line(tri[0])?, fr.line(tri[1])?, fr.line(tri[2])?];
        if !is_transverse(a, b) || !is_transverse(b, c) || !is_transverse(c, a) {
            return Err(Error::NotTransverse);
        }
        if !is_maximal_triple(a, b, c)? {
            return Err(Error::NotMaximal);
        }
    }
    let gamma = build_gamma(p);
    check_base(&gamma, base)?;
    let turn = turn_matrix(desc);

    // parameter of the far corner of a diagonal, seen from vertex v
    let diagonal_parameter = |t: &SymplecticElement, v: usize| -> Result<AlgebraElement> {
        let left = gamma.left(v).expect("crossing edges sit on diagonals");
        let b = act(t, fr.line(left)?).line_parameter()?.symmetrized();
        if !b.is_positive() {
            return Err(Error::NotMaximal);
        }
        Ok(b)
    };

    let mut vertex: Vec<Option<SymplecticElement>> = (0..gamma.num_vertices()).map(|_| None).collect();
    let top = fr.line(gamma.top(base))?;
    let bottom = fr.line(gamma.bottom(base))?;
    let right = fr.line(gamma.right(base))?;
    vertex[base] = Some(normalize_triple(top, bottom, right)?);
    for step in gamma.spanning_tree(base)? {
        let t = vertex[step.from].clone().expect("tree order");
        let e = gamma.edges()[step.edge];
        let m = match e.kind {
            GammaEdgeKind::InTriangle => turn.clone(),
            GammaEdgeKind::Crossing(_) => edge_matrix(&diagonal_parameter(&t, step.from)?)?,
        };
        let m = if step.forward { m } else { m.inverse_fast() };
        vertex[step.to] = Some(m.compose(&t)?);
    }
    let vertex: Vec<SymplecticElement> =
        vertex.into_iter().map(|t| t.expect("spanning tree reaches every vertex")).collect();

    let mut b = BTreeMap::new();
    let mut edge = Vec::with_capacity(gamma.edges().len());
    for e in gamma.edges() {
        match e.kind {
            GammaEdgeKind::InTriangle => edge.push(turn.clone()),
            GammaEdgeKind::Crossing(d) => {
                let bd = diagonal_parameter(&vertex[e.from], e.from)?;
                edge.push(edge_matrix(&bd)?);
                b.insert(EdgeId::Diagonal(d), bd);
            }
        }
    }

    let mut u = BTreeMap::new();
    let mut pairing = Vec::with_capacity(p.pairings().len());
    let omega_inv = Mat2::omega(desc).adjoint();
    for (j, pr) in p.pairings().iter().enumerate() {
        let (tv, tw) = (&vertex[FundamentalPolygon::vertex(pr.first)], &vertex[FundamentalPolygon::vertex(pr.second)]);
        let rho = &fr.generators[j];
        let pm = tw.mul_unchecked(rho).mul_unchecked(&tv.inverse_fast());
        let l = pm.matrix() * &omega_inv;
        let scale = tw.matrix().norm() * rho.matrix().norm() * tv.matrix().norm();
        let off = l.b.norm().max(l.c.norm());
        if off > CLOSURE_FACTOR * tol * scale.max(1.0) {
            return Err(Error::NotEquivariant { pairing: j });
        }
        let (uj, root_inv) = l.a.polar_decompose().map_err(|_| Error::NotEquivariant { pairing: j })?;
        let bj = root_inv.inverse()?;
        let bj = (&bj * &bj).symmetrized();
        pairing.push(pairing_matrix(&uj, &root_inv)?);
        b.insert(EdgeId::Pairing(j), bj);
        u.insert(j, uj);
    }

    let c = CoordinateVector { algebra: desc, b, u };
    c.validate(p)?;
    let ls = LocalSystem { gamma, base, vertex, edge, pairing };
    Ok((ls, c))
}

/// Free reduction of a word of `(generator, inverted)` letters.
pub fn reduce_word(word: &[(usize, bool)]) -> Vec<(usize, bool)> {
    let mut out: Vec<(usize, bool)> = Vec::with_capacity(word.len());
    for &(g, inv) in word {
        match out.last() {
            Some(&(h, hinv)) if h == g && hinv != inv => {
                out.pop();
            }
            _ => out.push((g, inv)),
        }
    }
    out
}

/// `rho(w)` for a word of `(generator, inverted)` letters, read left to right.
pub fn holonomy(fr: &FramedRepresentation, word: &[(usize, bool)]) -> Result<SymplecticElement> {
    let mut g = SymplecticElement::identity(fr.algebra);
    for (e, inv) in reduce_word(word) {
        let r = fr.generators.get(e).ok_or(Error::UnknownGenerator(e))?;
        let r = if inv { r.inverse_fast() } else { r.clone() };
        g = g.mul_unchecked(&r);
    }
    Ok(g)
}

/// Whether every triangle's corner triple, in counterclockwise order, is maximal.
pub fn verify_maximal(fr: &FramedRepresentation, p: &FundamentalPolygon) -> bool {
    p.triangles().iter().all(|tri| match (fr.framing.get(&tri[0]), fr.framing.get(&tri[1]), fr.framing.get(&tri[2])) {
        (Some(a), Some(b), Some(c)) => matches!(is_maximal_triple(a, b, c), Ok(true)),
        _ => false,
    })
}

/// Largest projector distance between `T(v) F^t(v)`, `T(v) F^b(v)`,
/// `T(v) F^r(v)` and `l+`, `l-`, `l1`.
pub fn adaptedness_residual(ls: &LocalSystem, fr: &FramedRepresentation) -> Result<f64> {
    let desc = fr.algebra;
    let (plus, minus, one) = (IsotropicLine::plus(desc), IsotropicLine::minus(desc), IsotropicLine::one(desc));
    let g = ls.gamma();
    let mut worst: f64 = 0.0;
    for v in 0..g.num_vertices() {
        let t = ls.vertex_map(v);
        for (corner, model) in [(g.top(v), &plus), (g.bottom(v), &minus), (g.right(v), &one)] {
            worst = worst.max(act(t, fr.line(corner)?).distance(model));
        }
    }
    Ok(worst)
}

/// Largest projector distance between a corner line on the second side of a
/// pairing and the image under `rho` of the matching line on the first side.
pub fn equivariance_residual(fr: &FramedRepresentation, p: &FundamentalPolygon) -> Result<f64> {
    fr.check_domain(p)?;
    let mut worst: f64 = 0.0;
    for (j, rho) in fr.generators.iter().enumerate() {
        for (c1, c2) in p.pairing_corner_matches(j) {
            worst = worst.max(act(rho, fr.line(c1)?).distance(fr.line(c2)?));
        }
    }
    Ok(worst)
}

/// Connected-component label: the unitary component of each `u_e`.
pub fn component_label(c: &CoordinateVector) -> Result<Vec<i32>> {
    c.u.values().map(AlgebraElement::unitary_component_label).collect()
}

/// `k^(1 - chi)` with `k` the number of components of the unitary group.
pub fn count_components(d: &SurfaceDescriptor, alg: &AlgebraDescriptor) -> Result<u64> {
    let stats = surface_stats(d)?;
    let k = alg.kind().unitary_components();
    Ok(k.pow(stats.pairings as u32))
}
