//! Isotropic lines `x A` in `A^2`, transversality, and the normal forms of
//! pairs, maximal triples and positive quadruples.

use alloc::vec::Vec;

use crate::algebra::{AlgebraDescriptor, AlgebraElement, CMatrix};
use crate::error::{Error, Result};
use crate::symplectic::{omega, Mat2, SymplecticElement, Vec2};

/// A regular isotropic line, stored by a representative with
/// `sigma(x1) x1 + sigma(x2) x2 = 1`.
#[derive(Clone, Debug)]
pub struct IsotropicLine {
    x: Vec2,
}

fn stacked(x: &Vec2) -> CMatrix {
    let e1 = x.x1.embedding();
    let e2 = x.x2.embedding();
    let (r, c) = e1.shape();
    let mut m = CMatrix::zeros(2 * r, c);
    m.view_mut((0, 0), (r, c)).copy_from(&e1);
    m.view_mut((r, 0), (r, c)).copy_from(&e2);
    m
}

fn min_singular(m: &CMatrix) -> f64 {
    m.clone().svd(false, false).singular_values.iter().copied().fold(f64::INFINITY, f64::min)
}

impl IsotropicLine {
    /// Validate regularity and isotropy, then normalize the representative.
    pub fn new(x: Vec2) -> Result<Self> {
        let tol = x.x1.tol();
        let norm = x.norm();
        if norm == 0.0 || min_singular(&stacked(&x)) <= tol * norm {
            return Err(Error::NotRegular);
        }
        let residual = omega(&x, &x).norm();
        if residual > tol * norm * norm {
            return Err(Error::NotIsotropic { residual: residual / (norm * norm) });
        }
        Ok(Self::normalized(x))
    }

    pub fn from_parts(x1: AlgebraElement, x2: AlgebraElement) -> Result<Self> {
        Self::new(Vec2::new(x1, x2)?)
    }

    /// Orthonormal representative, with the remaining unitary freedom used
    /// to make `x1` (or else `x2`) positive when it is invertible. Lines such
    /// as `l+`, `l-`, `l1` then get the same representative however they arise.
    fn normalized(x: Vec2) -> Self {
        let gram = &(&x.x1.sigma() * &x.x1) + &(&x.x2.sigma() * &x.x2);
        let s = gram.map_symmetric(|l| 1.0 / libm::sqrt(l));
        let x = x.right_mul(&s);
        let pivot = [&x.x1, &x.x2].into_iter().find(|c| c.is_invertible()).cloned();
        match pivot.and_then(|c| c.sigma().polar_decompose().ok()) {
            Some((u, _)) => Self { x: x.right_mul(&u) },
            None => Self { x },
        }
    }

    /// `l+ = (1, 0)^T A`.
    pub fn plus(desc: AlgebraDescriptor) -> Self {
        Self { x: Vec2 { x1: AlgebraElement::identity(desc), x2: AlgebraElement::zero(desc) } }
    }

    /// `l- = (0, 1)^T A`.
    pub fn minus(desc: AlgebraDescriptor) -> Self {
        Self { x: Vec2 { x1: AlgebraElement::zero(desc), x2: AlgebraElement::identity(desc) } }
    }

    /// `l1 = (1, 1)^T A`.
    pub fn one(desc: AlgebraDescriptor) -> Self {
        let one = AlgebraElement::identity(desc);
        Self::normalized(Vec2 { x1: one.clone(), x2: one })
    }

    /// `l(b) = (1, -b)^T A` for symmetric `b`.
    pub fn ell(b: &AlgebraElement) -> Result<Self> {
        Self::from_parts(AlgebraElement::identity(*b.descriptor()), -b)
    }

    /// `(b, 1)^T A` for symmetric `b`.
    pub fn point(b: &AlgebraElement) -> Result<Self> {
        Self::from_parts(b.clone(), AlgebraElement::identity(*b.descriptor()))
    }

    pub fn representative(&self) -> &Vec2 {
        &self.x
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        self.x.descriptor()
    }

    pub fn tol(&self) -> f64 {
        self.x.x1.tol()
    }

    /// Orthogonal projector onto the column space of the stacked embedding.
    pub fn projector(&self) -> CMatrix {
        let s = stacked(&self.x);
        &s * s.adjoint()
    }

    /// Distance between the orthogonal projectors of two lines.
    pub fn distance(&self, other: &Self) -> f64 {
        (self.projector() - other.projector()).norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.descriptor().same_algebra(other.descriptor()) && self.distance(other) <= tol
    }

    /// The `b` with `l = (1, -b)^T A`; needs `l` transverse to `l-`.
    pub fn line_parameter(&self) -> Result<AlgebraElement> {
        if !self.x.x1.is_invertible() {
            return Err(Error::NotTransverse);
        }
        Ok(-&(&self.x.x2 * &self.x.x1.inverse()?))
    }

    /// The `b` with `l = (b, 1)^T A`; needs `l` transverse to `l+`.
    pub fn point_parameter(&self) -> Result<AlgebraElement> {
        if !self.x.x2.is_invertible() {
            return Err(Error::NotTransverse);
        }
        Ok(&self.x.x1 * &self.x.x2.inverse()?)
    }
}

/// Whether `[x | y]` is invertible.
pub fn is_transverse(l: &IsotropicLine, m: &IsotropicLine) -> bool {
    if !l.descriptor().same_algebra(m.descriptor()) {
        return false;
    }
    let (a, b) = (stacked(&l.x), stacked(&m.x));
    let (r, c) = a.shape();
    let mut joint = CMatrix::zeros(r, 2 * c);
    joint.view_mut((0, 0), (r, c)).copy_from(&a);
    joint.view_mut((0, c), (r, c)).copy_from(&b);
    min_singular(&joint) > l.tol() * joint.norm()
}

/// The line spanned by `g x`.
pub fn act(g: &SymplecticElement, l: &IsotropicLine) -> IsotropicLine {
    IsotropicLine::normalized(g.apply(&l.x))
}

/// A `g` with `g l1 = l+` and `g l2 = l-`.
pub fn normalize_pair(l1: &IsotropicLine, l2: &IsotropicLine) -> Result<SymplecticElement> {
    if !is_transverse(l1, l2) {
        return Err(Error::NotTransverse);
    }
    let x = &l1.x;
    let w = omega(x, &l2.x);
    let y = l2.x.right_mul(&w.inverse()?);
    let m = Mat2::new(x.x1.clone(), y.x1, x.x2.clone(), y.x2)?;
    SymplecticElement::new(m)?.inverse()
}

/// The `b` with `normalize_pair(l1, l2) l3 = (b, 1)^T A`.
pub fn triple_invariant(l1: &IsotropicLine, l2: &IsotropicLine, l3: &IsotropicLine) -> Result<AlgebraElement> {
    if !is_transverse(l1, l3) || !is_transverse(l2, l3) {
        return Err(Error::NotTransverse);
    }
    let g = normalize_pair(l1, l2)?;
    let z = g.apply(&l3.x);
    Ok(&z.x1 * &z.x2.inverse()?)
}

pub fn is_maximal_triple(l1: &IsotropicLine, l2: &IsotropicLine, l3: &IsotropicLine) -> Result<bool> {
    Ok(triple_invariant(l1, l2, l3)?.is_positive())
}

/// A `g` sending a maximal triple to `(l+, l-, l1)`.
pub fn normalize_triple(l1: &IsotropicLine, l2: &IsotropicLine, l3: &IsotropicLine) -> Result<SymplecticElement> {
    let g = normalize_pair(l1, l2)?;
    let z = g.apply(&l3.x);
    let b = &z.x1 * &z.x2.inverse()?;
    let root_inv = b.inverse_sqrt_positive().map_err(|_| Error::NotMaximal)?;
    SymplecticElement::levi(&root_inv)?.compose(&g)
}

/// The positive `a` with `g (l1, l2, l3, l4) = (l+, l(a), l-, l1)`,
/// determined up to unitary conjugation.
pub fn quadruple_invariant(
    l1: &IsotropicLine,
    l2: &IsotropicLine,
    l3: &IsotropicLine,
    l4: &IsotropicLine,
) -> Result<AlgebraElement> {
    let positive =
        |a: &IsotropicLine, b: &IsotropicLine, c: &IsotropicLine| matches!(is_maximal_triple(a, b, c), Ok(true));
    if !positive(l1, l2, l3) || !positive(l1, l3, l4) {
        return Err(Error::NotPositiveQuadruple);
    }
    let g = normalize_triple(l1, l3, l4).map_err(|_| Error::NotPositiveQuadruple)?;
    let a = act(&g, l2).line_parameter().map_err(|_| Error::NotPositiveQuadruple)?;
    if !a.is_positive() {
        return Err(Error::NotPositiveQuadruple);
    }
    Ok(a)
}

/// Sorted eigenvalues, the complete invariant of a positive element up to
/// unitary conjugation.
pub fn canonical_spectrum(a: &AlgebraElement) -> Vec<f64> {
    a.symmetric_eigenvalues()
}
