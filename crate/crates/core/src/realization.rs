//! `Sp2(A, sigma)` as a classical group: `Sp(2n, R)`, `U(n, n)` and
//! `SO*(4n)`, checked by form preservation after an explicit change of basis.

use crate::algebra::{sq, AlgebraDescriptor, AlgebraElement, GroundRing};
use crate::error::{Error, Result};
use crate::symplectic::{Mat2, SymplecticElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `Sp(2n, R)`: the standard skew form `J`.
    SymplecticR,
    /// `U(n, n)`: the Hermitian form `i sigma(T) J T` with `T = diag(1, -i)`.
    HermitianNN,
    /// `SO*(4n)`: the skew-Hermitian form `j Id` after a quaternionic change of basis.
    QuaternionicSkew,
}

/// A Gram matrix on the ground-field space of dimension `2n` and the change
/// of basis `T` relating it to `Omega`.
#[derive(Clone, Debug)]
pub struct ClassicalForm {
    kind: FormKind,
    gram: AlgebraElement,
    basis: AlgebraElement,
    basis_inv: AlgebraElement,
}

fn block_diag(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let zero = AlgebraElement::zero(*x.descriptor());
    AlgebraElement::from_blocks(x, &zero, &zero, y).expect("blocks share an algebra")
}

impl ClassicalForm {
    /// The form matching the ground ring of `desc`.
    pub fn for_algebra(desc: AlgebraDescriptor) -> Self {
        let one = AlgebraElement::identity(desc);
        let zero = AlgebraElement::zero(desc);
        let j_form = AlgebraElement::from_blocks(&zero, &one, &(-&one), &zero).expect("same algebra");
        let (kind, basis) = match desc.kind() {
            GroundRing::Real => (FormKind::SymplecticR, AlgebraElement::identity(desc.doubled())),
            GroundRing::Complex => {
                let minus_i =
                    AlgebraElement::complex_scalar(desc, nalgebra::Complex::new(0.0, -1.0)).expect("complex algebra");
                (FormKind::HermitianNN, block_diag(&one, &minus_i))
            }
            GroundRing::Quaternion => {
                // (1/sqrt 2) [[1, -j], [-j, 1]] followed by diag(i, 1), which
                // turns sigma(T) J T into j Id
                let s = core::f64::consts::FRAC_1_SQRT_2;
                let a = AlgebraElement::scalar(desc, s);
                let mj = AlgebraElement::quaternion_scalar(desc, [0.0, 0.0, -s, 0.0]).expect("quaternion algebra");
                let t = AlgebraElement::from_blocks(&a, &mj, &mj, &a).expect("same algebra");
                let i = AlgebraElement::quaternion_scalar(desc, [0.0, 1.0, 0.0, 0.0]).expect("quaternion algebra");
                (FormKind::QuaternionicSkew, &t * &block_diag(&i, &one))
            }
        };
        let mut gram = &(&basis.sigma() * &j_form) * &basis;
        if kind == FormKind::HermitianNN {
            let i = AlgebraElement::complex_scalar(desc.doubled(), nalgebra::Complex::new(0.0, 1.0))
                .expect("complex algebra");
            gram = &i * &gram;
        }
        let basis_inv = basis.sigma();
        Self { kind, gram, basis, basis_inv }
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn gram(&self) -> &AlgebraElement {
        &self.gram
    }

    /// The change of basis `T`; it is unitary, so `T^-1 = sigma(T)`.
    pub fn basis(&self) -> &AlgebraElement {
        &self.basis
    }

    /// Whether the Gram matrix is invertible with the symmetry of its kind.
    pub fn is_well_formed(&self) -> bool {
        let g = &self.gram;
        let symmetry = match self.kind {
            FormKind::SymplecticR | FormKind::QuaternionicSkew => g.is_antisymmetric(),
            FormKind::HermitianNN => g.is_symmetric(),
        };
        symmetry && g.is_invertible()
    }
}

/// `[[a, b], [c, d]]` as a `2n x 2n` matrix over the ground ring.
pub fn embed(m: &SymplecticElement) -> AlgebraElement {
    m.matrix().flatten()
}

/// Residual of `sigma(M') G M' = G` for `M' = T^-1 M T`, relative to
/// `|G| max(1, |M|^2)`.
pub fn form_residual(m: &AlgebraElement, f: &ClassicalForm) -> Result<f64> {
    if !m.descriptor().same_algebra(f.gram.descriptor()) {
        return Err(Error::SizeMismatch);
    }
    let mp = &(&f.basis_inv * m) * &f.basis;
    let lhs = &(&mp.sigma() * &f.gram) * &mp;
    Ok(lhs.distance(&f.gram) / (f.gram.norm() * sq(m.norm()).max(1.0)))
}

pub fn preserves_form(m: &AlgebraElement, f: &ClassicalForm) -> Result<bool> {
    Ok(form_residual(m, f)? <= m.tol())
}

/// Whether the embedded matrix lies in the maximal compact subgroup:
/// `sigma(M) M = Id`.
pub fn is_compact(m: &AlgebraElement) -> bool {
    m.is_unitary()
}

/// Convenience: the `Mat2` view of a `2n x 2n` ground-ring matrix.
pub fn unembed(m: &AlgebraElement) -> Mat2 {
    Mat2::unflatten(m)
}
