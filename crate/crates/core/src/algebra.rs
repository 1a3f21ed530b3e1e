//! Matrix algebras `Mat(n, R)`, `Mat(n, C)` and `Mat(n, H)` with the
//! conjugate-transpose anti-involution.
//!
//! Every element is stored as a quaternionic matrix `Z1 + Z2 j` with complex
//! `n x n` blocks. Real and complex elements keep `Z2 = 0` (and `Z1` real in
//! the real case), so ring operations share one code path. Spectral work
//! (eigenvalues, square roots, singular values) goes through the complex
//! embedding
//!
//! ```text
//! chi(Z1 + Z2 j) = [[Z1, Z2], [-conj(Z2), conj(Z1)]]
//! ```
//!
//! which is a *-homomorphism, so self-adjoint elements map to Hermitian
//! matrices and positivity is read off their spectrum.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use nalgebra::{Complex, DMatrix};
use rand::Rng;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

pub(crate) fn sq(x: f64) -> f64 {
    x * x
}

/// Default relative tolerance for double precision at `n <= 16`.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroundRing {
    Real,
    Complex,
    Quaternion,
}

impl GroundRing {
    pub fn symbol(self) -> &'static str {
        match self {
            GroundRing::Real => "R",
            GroundRing::Complex => "C",
            GroundRing::Quaternion => "H",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "R" | "r" => Some(GroundRing::Real),
            "C" | "c" => Some(GroundRing::Complex),
            "H" | "h" => Some(GroundRing::Quaternion),
            _ => None,
        }
    }

    /// Number of connected components of the unitary group `O(n)`, `U(n)`, `Sp(n)`.
    pub fn unitary_components(self) -> u64 {
        match self {
            GroundRing::Real => 2,
            GroundRing::Complex | GroundRing::Quaternion => 1,
        }
    }

    /// Real dimension of the ground ring.
    pub fn real_dim(self) -> usize {
        match self {
            GroundRing::Real => 1,
            GroundRing::Complex => 2,
            GroundRing::Quaternion => 4,
        }
    }

    fn embedding_factor(self) -> usize {
        match self {
            GroundRing::Quaternion => 2,
            _ => 1,
        }
    }
}

/// Which algebra an element lives in, plus the relative tolerance used by
/// every predicate on it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlgebraDescriptor {
    kind: GroundRing,
    n: usize,
    tol: f64,
}

impl AlgebraDescriptor {
    pub fn new(kind: GroundRing, n: usize) -> Result<Self> {
        Self::with_tol(kind, n, DEFAULT_TOL)
    }

    pub fn with_tol(kind: GroundRing, n: usize, tol: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("n must be positive"));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidDescriptor("tol must be positive"));
        }
        Ok(Self { kind, n, tol })
    }

    pub fn kind(&self) -> GroundRing {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Size of the complex embedding (`n`, or `2n` for quaternions).
    pub fn embedding_dim(&self) -> usize {
        self.n * self.kind.embedding_factor()
    }

    /// Same algebra, ignoring the tolerance.
    pub fn same_algebra(&self, other: &Self) -> bool {
        self.kind == other.kind && self.n == other.n
    }

    /// The algebra of `2n x 2n` matrices over the same ground ring.
    pub fn doubled(&self) -> Self {
        Self { n: 2 * self.n, ..*self }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat({}, {})", self.n, self.kind.symbol())
    }
}

/// An element of `Mat(n, K)`, `K` in {R, C, H}.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    desc: AlgebraDescriptor,
    z1: CMatrix,
    z2: CMatrix,
}

/// Which kind of random element [`sample`] should draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleKind {
    Positive,
    Unitary,
    Invertible,
    Symmetric,
}

impl AlgebraElement {
    pub fn zero(desc: AlgebraDescriptor) -> Self {
        let n = desc.n;
        Self { desc, z1: CMatrix::zeros(n, n), z2: CMatrix::zeros(n, n) }
    }

    pub fn identity(desc: AlgebraDescriptor) -> Self {
        Self::scalar(desc, 1.0)
    }

    pub fn scalar(desc: AlgebraDescriptor, s: f64) -> Self {
        let n = desc.n;
        Self { desc, z1: CMatrix::identity(n, n) * Complex::new(s, 0.0), z2: CMatrix::zeros(n, n) }
    }

    /// `c * 1` for a complex scalar `c`. Not available over the reals.
    pub fn complex_scalar(desc: AlgebraDescriptor, c: C64) -> Result<Self> {
        if desc.kind == GroundRing::Real && c.im != 0.0 {
            return Err(Error::InvalidEntries("complex scalar in a real algebra".to_string()));
        }
        let n = desc.n;
        Ok(Self { desc, z1: CMatrix::identity(n, n) * c, z2: CMatrix::zeros(n, n) })
    }

    /// `q * 1` for the quaternion `q = w + x i + y j + z k`.
    pub fn quaternion_scalar(desc: AlgebraDescriptor, q: [f64; 4]) -> Result<Self> {
        let n = desc.n;
        let entries: Vec<[f64; 4]> = (0..n * n).map(|k| if k / n == k % n { q } else { [0.0; 4] }).collect();
        Self::from_quaternion_rows(desc, &entries)
    }

    /// Diagonal matrix with real entries.
    pub fn from_real_diagonal(desc: AlgebraDescriptor, diag: &[f64]) -> Result<Self> {
        if diag.len() != desc.n {
            return Err(Error::SizeMismatch);
        }
        let mut out = Self::zero(desc);
        for (i, &d) in diag.iter().enumerate() {
            out.z1[(i, i)] = Complex::new(d, 0.0);
        }
        out.check_finite()?;
        Ok(out)
    }

    /// Row-major real entries; valid in every algebra.
    pub fn from_real_rows(desc: AlgebraDescriptor, entries: &[f64]) -> Result<Self> {
        let n = desc.n;
        if entries.len() != n * n {
            return Err(Error::SizeMismatch);
        }
        let z1 = CMatrix::from_fn(n, n, |i, j| Complex::new(entries[i * n + j], 0.0));
        let out = Self { desc, z1, z2: CMatrix::zeros(n, n) };
        out.check_finite()?;
        Ok(out)
    }

    /// Row-major complex entries; rejected over the reals unless every
    /// imaginary part vanishes.
    pub fn from_complex_rows(desc: AlgebraDescriptor, entries: &[C64]) -> Result<Self> {
        let n = desc.n;
        if entries.len() != n * n {
            return Err(Error::SizeMismatch);
        }
        if desc.kind == GroundRing::Real && entries.iter().any(|c| c.im != 0.0) {
            return Err(Error::InvalidEntries("complex entry in a real algebra".to_string()));
        }
        let out = Self { desc, z1: CMatrix::from_fn(n, n, |i, j| entries[i * n + j]), z2: CMatrix::zeros(n, n) };
        out.check_finite()?;
        Ok(out)
    }

    /// Row-major quaternion entries `[w, x, y, z]` for `w + x i + y j + z k`.
    pub fn from_quaternion_rows(desc: AlgebraDescriptor, entries: &[[f64; 4]]) -> Result<Self> {
        let n = desc.n;
        if entries.len() != n * n {
            return Err(Error::SizeMismatch);
        }
        let fits = |q: &[f64; 4]| match desc.kind {
            GroundRing::Real => q[1] == 0.0 && q[2] == 0.0 && q[3] == 0.0,
            GroundRing::Complex => q[2] == 0.0 && q[3] == 0.0,
            GroundRing::Quaternion => true,
        };
        if !entries.iter().all(fits) {
            return Err(Error::InvalidEntries(alloc::format!("quaternion entry outside {}", desc.kind.symbol())));
        }
        // w + x i + (y + z i) j = w + x i + y j + z k
        let out = Self {
            desc,
            z1: CMatrix::from_fn(n, n, |i, j| {
                let q = entries[i * n + j];
                Complex::new(q[0], q[1])
            }),
            z2: CMatrix::from_fn(n, n, |i, j| {
                let q = entries[i * n + j];
                Complex::new(q[2], q[3])
            }),
        };
        out.check_finite()?;
        Ok(out)
    }

    /// Decode a matrix in the image of the complex embedding, projecting
    /// onto the algebra to absorb rounding.
    pub fn from_embedding(desc: AlgebraDescriptor, m: &CMatrix) -> Result<Self> {
        let n = desc.n;
        let dim = desc.embedding_dim();
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::SizeMismatch);
        }
        let out = match desc.kind {
            GroundRing::Real => Self { desc, z1: m.map(|c| Complex::new(c.re, 0.0)), z2: CMatrix::zeros(n, n) },
            GroundRing::Complex => Self { desc, z1: m.clone(), z2: CMatrix::zeros(n, n) },
            GroundRing::Quaternion => {
                let tl = m.view((0, 0), (n, n));
                let tr = m.view((0, n), (n, n));
                let bl = m.view((n, 0), (n, n));
                let br = m.view((n, n), (n, n));
                let z1 = CMatrix::from_fn(n, n, |i, j| (tl[(i, j)] + br[(i, j)].conj()) * 0.5);
                let z2 = CMatrix::from_fn(n, n, |i, j| (tr[(i, j)] - bl[(i, j)].conj()) * 0.5);
                Self { desc, z1, z2 }
            }
        };
        out.check_finite()?;
        Ok(out)
    }

    /// The `2n x 2n` element `[[a, b], [c, d]]` over the same ground ring.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        for x in [b, c, d] {
            a.check_same(x)?;
        }
        let n = a.n();
        let stack = |f: fn(&Self) -> &CMatrix| {
            let mut m = CMatrix::zeros(2 * n, 2 * n);
            m.view_mut((0, 0), (n, n)).copy_from(f(a));
            m.view_mut((0, n), (n, n)).copy_from(f(b));
            m.view_mut((n, 0), (n, n)).copy_from(f(c));
            m.view_mut((n, n), (n, n)).copy_from(f(d));
            m
        };
        Ok(Self { desc: a.desc.doubled(), z1: stack(|x| &x.z1), z2: stack(|x| &x.z2) })
    }

    /// Block `(i, j)` of an element of even size, viewed as a 2 x 2 block matrix.
    pub fn block(&self, i: usize, j: usize) -> Self {
        assert!(self.n().is_multiple_of(2) && i < 2 && j < 2, "block of an odd-sized element");
        let h = self.n() / 2;
        let desc = AlgebraDescriptor { n: h, ..self.desc };
        Self {
            desc,
            z1: self.z1.view((i * h, j * h), (h, h)).into_owned(),
            z2: self.z2.view((i * h, j * h), (h, h)).into_owned(),
        }
    }

    fn check_finite(&self) -> Result<()> {
        let finite = |m: &CMatrix| m.iter().all(|c| c.re.is_finite() && c.im.is_finite());
        if finite(&self.z1) && finite(&self.z2) {
            Ok(())
        } else {
            Err(Error::InvalidEntries("non-finite entry".to_string()))
        }
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.desc
    }

    pub fn tol(&self) -> f64 {
        self.desc.tol
    }

    pub fn n(&self) -> usize {
        self.desc.n
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.desc.tol = tol;
        self
    }

    /// Entry `(i, j)` as `[w, x, y, z]`.
    pub fn quaternion_entry(&self, i: usize, j: usize) -> [f64; 4] {
        let a = self.z1[(i, j)];
        let b = self.z2[(i, j)];
        [a.re, a.im, b.re, b.im]
    }

    pub fn complex_entry(&self, i: usize, j: usize) -> C64 {
        self.z1[(i, j)]
    }

    pub fn real_entry(&self, i: usize, j: usize) -> f64 {
        self.z1[(i, j)].re
    }

    /// All real coordinates of the element, row-major, `real_dim` per entry.
    pub fn real_coordinates(&self) -> Vec<f64> {
        let n = self.n();
        let d = self.desc.kind.real_dim();
        let mut out = Vec::with_capacity(n * n * d);
        for i in 0..n {
            for j in 0..n {
                let q = self.quaternion_entry(i, j);
                out.extend_from_slice(&q[..d]);
            }
        }
        out
    }

    fn assert_same(&self, other: &Self) {
        assert!(self.desc.same_algebra(&other.desc), "algebra mismatch: {} vs {}", self.desc, other.desc);
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.desc.same_algebra(&other.desc) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    fn is_quaternionic(&self) -> bool {
        self.desc.kind == GroundRing::Quaternion
    }

    /// The anti-involution: conjugate transpose.
    pub fn sigma(&self) -> Self {
        // (Z1 + Z2 j)^* = Z1^H - Z2^T j
        Self { desc: self.desc, z1: self.z1.adjoint(), z2: -self.z2.transpose() }
    }

    pub fn scale(&self, s: f64) -> Self {
        let c = Complex::new(s, 0.0);
        Self { desc: self.desc, z1: &self.z1 * c, z2: &self.z2 * c }
    }

    /// Frobenius norm of the quaternionic entries.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.z1.norm_squared() + self.z2.norm_squared())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (self - other).norm()
    }

    /// Relative comparison `|a - b| <= tol * max(|a|, |b|)`; absolute `tol`
    /// when both vanish.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = self.norm().max(other.norm());
        let d = self.distance(other);
        if scale == 0.0 {
            d <= tol
        } else {
            d <= tol * scale
        }
    }

    /// The complex matrix `chi(a)`.
    pub fn embedding(&self) -> CMatrix {
        if !self.is_quaternionic() {
            return self.z1.clone();
        }
        let n = self.n();
        let mut m = CMatrix::zeros(2 * n, 2 * n);
        m.view_mut((0, 0), (n, n)).copy_from(&self.z1);
        m.view_mut((0, n), (n, n)).copy_from(&self.z2);
        m.view_mut((n, 0), (n, n)).copy_from(&(-self.z2.map(|c| c.conj())));
        m.view_mut((n, n), (n, n)).copy_from(&self.z1.map(|c| c.conj()));
        m
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.embedding().try_inverse().ok_or(Error::NotInvertible)?;
        Self::from_embedding(self.desc, &inv).map_err(|_| Error::NotInvertible)
    }

    pub fn singular_values(&self) -> Vec<f64> {
        let sv = self.embedding().svd(false, false).singular_values;
        sv.iter().copied().collect()
    }

    pub fn min_singular_value(&self) -> f64 {
        self.singular_values().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Smallest singular value exceeds `tol * |a|`.
    pub fn is_invertible(&self) -> bool {
        let norm = self.norm();
        norm > 0.0 && self.min_singular_value() > self.tol() * norm
    }

    /// `(a + sigma(a)) / 2`.
    pub fn symmetrized(&self) -> Self {
        (self + &self.sigma()).scale(0.5)
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.distance(&self.sigma());
        d <= self.tol() * self.norm()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = (self + &self.sigma()).norm();
        d <= self.tol() * self.norm()
    }

    /// Eigenvalues of the symmetrized element, ascending. Quaternionic
    /// eigenvalues appear twice in the embedding; one copy of each is kept.
    pub fn symmetric_eigenvalues(&self) -> Vec<f64> {
        let h = self.symmetrized().embedding();
        let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        if self.is_quaternionic() {
            ev = ev.into_iter().step_by(2).collect();
        }
        ev
    }

    /// Membership in the positive cone: symmetric and every eigenvalue
    /// above `tol * |a|`.
    pub fn is_positive(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let eps = self.tol() * self.norm();
        let h = self.symmetrized().embedding();
        h.symmetric_eigenvalues().iter().all(|&l| l > eps)
    }

    /// Apply a real function to a symmetric element through its spectral
    /// decomposition.
    pub fn map_symmetric(&self, f: impl Fn(f64) -> f64) -> Self {
        let h = self.symmetrized().embedding();
        let eig = h.symmetric_eigen();
        let mut scaled = eig.eigenvectors.clone();
        for (j, &l) in eig.eigenvalues.iter().enumerate() {
            let fl = Complex::new(f(l), 0.0);
            scaled.column_mut(j).iter_mut().for_each(|c| *c *= fl);
        }
        let m = scaled * eig.eigenvectors.adjoint();
        // The spectral image of a self-adjoint element stays in the algebra.
        Self::from_embedding(self.desc, &m).expect("spectral calculus produced non-finite entries").symmetrized()
    }

    /// The unique positive `q` with `q^2 = a`.
    pub fn sqrt_positive(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(self.map_symmetric(libm::sqrt))
    }

    /// `sqrt(a)^-1`, computed spectrally.
    pub fn inverse_sqrt_positive(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        Ok(self.map_symmetric(|l| 1.0 / libm::sqrt(l)))
    }

    /// `a = u b` with `u` unitary and `b` positive.
    pub fn polar_decompose(&self) -> Result<(Self, Self)> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let gram = &self.sigma() * self;
        let b = gram.map_symmetric(libm::sqrt);
        let b_inv = gram.map_symmetric(|l| 1.0 / libm::sqrt(l));
        let u = self * &b_inv;
        Ok((u, b))
    }

    pub fn is_unitary(&self) -> bool {
        let id = Self::identity(self.desc);
        let r = (&(&self.sigma() * self) - &id).norm();
        r <= self.tol() * id.norm()
    }

    /// Label of the connected component of the unitary group containing
    /// `u`: the sign of the determinant over the reals, `0` otherwise.
    pub fn unitary_component_label(&self) -> Result<i32> {
        if !self.is_unitary() {
            return Err(Error::NotUnitary);
        }
        Ok(match self.desc.kind {
            GroundRing::Real => {
                let re: DMatrix<f64> = self.z1.map(|c| c.re);
                if re.determinant() > 0.0 {
                    1
                } else {
                    -1
                }
            }
            GroundRing::Complex | GroundRing::Quaternion => 0,
        })
    }

    /// Congruence `g a sigma(g)`.
    pub fn congruence(&self, g: &Self) -> Self {
        &(g * self) * &g.sigma()
    }

    fn random<R: Rng + ?Sized>(desc: AlgebraDescriptor, rng: &mut R) -> Self {
        let n = desc.n;
        let d = desc.kind.real_dim();
        let entries: Vec<[f64; 4]> = (0..n * n)
            .map(|_| {
                let mut q = [0.0; 4];
                for c in q.iter_mut().take(d) {
                    *c = rng.random_range(-1.0..1.0);
                }
                q
            })
            .collect();
        Self::from_quaternion_rows(desc, &entries).expect("random entries fit the ground ring")
    }
}

const SAMPLE_SIGMA_MIN: f64 = 0.1;
const SAMPLE_POSITIVE_SHIFT: f64 = 0.1;

/// Draw a random element of the requested class from `rng`.
pub fn sample_with<R: Rng + ?Sized>(desc: AlgebraDescriptor, which: SampleKind, rng: &mut R) -> AlgebraElement {
    match which {
        SampleKind::Invertible => loop {
            let g = AlgebraElement::random(desc, rng);
            if g.min_singular_value() > SAMPLE_SIGMA_MIN {
                return g;
            }
        },
        SampleKind::Symmetric => AlgebraElement::random(desc, rng).symmetrized(),
        SampleKind::Positive => {
            let g = sample_with(desc, SampleKind::Invertible, rng);
            let shift = AlgebraElement::scalar(desc, SAMPLE_POSITIVE_SHIFT);
            (&(&g * &g.sigma()) + &shift).symmetrized()
        }
        SampleKind::Unitary => {
            let g = sample_with(desc, SampleKind::Invertible, rng);
            g.polar_decompose().expect("sampled element is invertible").0
        }
    }
}

/// Deterministic sample for a fixed seed.
pub fn sample(desc: AlgebraDescriptor, which: SampleKind, seed: u64) -> AlgebraElement {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    sample_with(desc, which, &mut rng)
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.desc.same_algebra(&other.desc) && self.z1 == other.z1 && self.z2 == other.z2
    }
}

impl<'a> Add<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same(rhs);
        AlgebraElement { desc: self.desc, z1: &self.z1 + &rhs.z1, z2: &self.z2 + &rhs.z2 }
    }
}

impl<'a> Sub<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same(rhs);
        AlgebraElement { desc: self.desc, z1: &self.z1 - &rhs.z1, z2: &self.z2 - &rhs.z2 }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement { desc: self.desc, z1: -&self.z1, z2: -&self.z2 }
    }
}

impl<'a> Mul<&'a AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.assert_same(rhs);
        if !self.is_quaternionic() {
            let n = self.n();
            return AlgebraElement { desc: self.desc, z1: &self.z1 * &rhs.z1, z2: CMatrix::zeros(n, n) };
        }
        // (X1 + X2 j)(Y1 + Y2 j) = (X1 Y1 - X2 conj(Y2)) + (X1 Y2 + X2 conj(Y1)) j
        let y1c = rhs.z1.map(|c| c.conj());
        let y2c = rhs.z2.map(|c| c.conj());
        AlgebraElement {
            desc: self.desc,
            z1: &self.z1 * &rhs.z1 - &self.z2 * y2c,
            z2: &self.z1 * &rhs.z2 + &self.z2 * y1c,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        for i in 0..n {
            write!(f, "[")?;
            for j in 0..n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                let q = self.quaternion_entry(i, j);
                match self.desc.kind {
                    GroundRing::Real => write!(f, "{:.6}", q[0])?,
                    GroundRing::Complex => write!(f, "{:.6}{:+.6}i", q[0], q[1])?,
                    GroundRing::Quaternion => write!(f, "{:.4}{:+.4}i{:+.4}j{:+.4}k", q[0], q[1], q[2], q[3])?,
                }
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn desc(kind: GroundRing, n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::new(kind, n).unwrap()
    }

    const KINDS: [GroundRing; 3] = [GroundRing::Real, GroundRing::Complex, GroundRing::Quaternion];

    #[test]
    fn descriptor_rejects_bad_input() {
        assert!(AlgebraDescriptor::new(GroundRing::Real, 0).is_err());
        assert!(AlgebraDescriptor::with_tol(GroundRing::Real, 2, 0.0).is_err());
        assert!(AlgebraDescriptor::with_tol(GroundRing::Real, 2, f64::NAN).is_err());
    }

    #[test]
    fn sigma_examples() {
        for kind in KINDS {
            let id = AlgebraElement::identity(desc(kind, 3));
            assert_eq!(id.sigma(), id);
        }
        let d = desc(GroundRing::Real, 2);
        let a = AlgebraElement::from_real_rows(d, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let expected = AlgebraElement::from_real_rows(d, &[0.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!(a.sigma(), expected);
    }

    #[test]
    fn sigma_is_an_anti_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in KINDS {
            for n in 1..=4 {
                let d = desc(kind, n);
                let a = AlgebraElement::random(d, &mut rng);
                let b = AlgebraElement::random(d, &mut rng);
                assert_eq!(a.sigma().sigma(), a);
                let lhs = (&a * &b).sigma();
                let rhs = &b.sigma() * &a.sigma();
                assert!(lhs.approx_eq(&rhs, 1e-12), "{kind:?} n={n}");
            }
        }
    }

    /// Entry-wise quaternion product, independent of the block formula.
    fn quaternion_product_oracle(a: &AlgebraElement, b: &AlgebraElement) -> Vec<[f64; 4]> {
        fn qmul(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
            let [a1, b1, c1, d1] = p;
            let [a2, b2, c2, d2] = q;
            [
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ]
        }
        let n = a.n();
        let mut out = alloc::vec![[0.0; 4]; n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p = qmul(a.quaternion_entry(i, k), b.quaternion_entry(k, j));
                    for c in 0..4 {
                        out[i * n + j][c] += p[c];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn quaternion_product_matches_hamilton_rules() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let d = desc(GroundRing::Quaternion, 3);
        for _ in 0..20 {
            let a = AlgebraElement::random(d, &mut rng);
            let b = AlgebraElement::random(d, &mut rng);
            let expected = AlgebraElement::from_quaternion_rows(d, &quaternion_product_oracle(&a, &b)).unwrap();
            assert!((&a * &b).approx_eq(&expected, 1e-13));
        }
        // i j = k
        let d1 = desc(GroundRing::Quaternion, 1);
        let i = AlgebraElement::quaternion_scalar(d1, [0.0, 1.0, 0.0, 0.0]).unwrap();
        let j = AlgebraElement::quaternion_scalar(d1, [0.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!((&i * &j).quaternion_entry(0, 0), [0.0, 0.0, 0.0, 1.0]);
        assert_eq!((&j * &i).quaternion_entry(0, 0), [0.0, 0.0, 0.0, -1.0]);
    }

    #[test]
    fn embedding_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for kind in KINDS {
            let d = desc(kind, 3);
            let a = AlgebraElement::random(d, &mut rng);
            let b = AlgebraElement::random(d, &mut rng);
            let lhs = (&a * &b).embedding();
            let rhs = a.embedding() * b.embedding();
            assert!((lhs - rhs).norm() < 1e-12);
            assert!((a.sigma().embedding() - a.embedding().adjoint()).norm() < 1e-15);
            let back = AlgebraElement::from_embedding(d, &a.embedding()).unwrap();
            assert_eq!(back, a);
        }
    }

    #[test]
    fn entries_outside_ground_ring_are_rejected() {
        let d = desc(GroundRing::Real, 1);
        assert!(AlgebraElement::from_complex_rows(d, &[Complex::new(0.0, 1.0)]).is_err());
        let d = desc(GroundRing::Complex, 1);
        assert!(AlgebraElement::from_quaternion_rows(d, &[[0.0, 0.0, 1.0, 0.0]]).is_err());
        assert!(AlgebraElement::from_real_rows(d, &[f64::NAN]).is_err());
        assert!(AlgebraElement::from_real_rows(d, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn positivity_examples() {
        let d = desc(GroundRing::Real, 2);
        assert!(AlgebraElement::identity(d).is_positive());
        assert!(!AlgebraElement::from_real_diagonal(d, &[1.0, -1.0]).unwrap().is_positive());
        // eigenvalues 1 and 3: roots of (2 - l)^2 - 1
        let a = AlgebraElement::from_real_rows(d, &[2.0, 1.0, 1.0, 2.0]).unwrap();
        assert!(a.is_positive());
        let ev = a.symmetric_eigenvalues();
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
        // non-symmetric input
        let b = AlgebraElement::from_real_rows(d, &[2.0, 1.0, 0.0, 2.0]).unwrap();
        assert!(!b.is_positive());
        assert!(!AlgebraElement::zero(d).is_positive());
        assert!(AlgebraElement::zero(d).is_symmetric());
    }

    #[test]
    fn quaternionic_positivity_uses_embedding() {
        let d = desc(GroundRing::Quaternion, 2);
        // [[2, j], [-j, 2]] is Hermitian with eigenvalues 1 and 3
        let a = AlgebraElement::from_quaternion_rows(
            d,
            &[[2.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, -1.0, 0.0], [2.0, 0.0, 0.0, 0.0]],
        )
        .unwrap();
        assert!(a.is_symmetric());
        assert!(a.is_positive());
        let ev = a.symmetric_eigenvalues();
        assert_eq!(ev.len(), 2);
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_examples() {
        for kind in KINDS {
            let id = AlgebraElement::identity(desc(kind, 2));
            assert!(id.sqrt_positive().unwrap().approx_eq(&id, 1e-14));
        }
        let d = desc(GroundRing::Real, 2);
        let a = AlgebraElement::from_real_diagonal(d, &[4.0, 9.0]).unwrap();
        let q = a.sqrt_positive().unwrap();
        assert!(q.approx_eq(&AlgebraElement::from_real_diagonal(d, &[2.0, 3.0]).unwrap(), 1e-14));
        let neg = AlgebraElement::from_real_diagonal(d, &[4.0, -9.0]).unwrap();
        assert_eq!(neg.sqrt_positive().unwrap_err(), Error::NotPositive);
    }

    #[test]
    fn sqrt_multiplies_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for kind in KINDS {
            for n in 1..=4 {
                let a = sample_with(desc(kind, n), SampleKind::Positive, &mut rng);
                let q = a.sqrt_positive().unwrap();
                assert!(q.is_positive());
                assert!((&q * &q).approx_eq(&a, 1e-12));
            }
        }
    }

    #[test]
    fn polar_examples() {
        let d = desc(GroundRing::Real, 2);
        let (s, c) = (libm::sin(0.3), libm::cos(0.3));
        let rot = AlgebraElement::from_real_rows(d, &[c, -s, s, c]).unwrap();
        let (u, b) = rot.polar_decompose().unwrap();
        assert!(u.approx_eq(&rot, 1e-14));
        assert!(b.approx_eq(&AlgebraElement::identity(d), 1e-14));

        let spd = AlgebraElement::from_real_rows(d, &[2.0, 1.0, 1.0, 2.0]).unwrap();
        let (u, b) = spd.polar_decompose().unwrap();
        assert!(u.approx_eq(&AlgebraElement::identity(d), 1e-14));
        assert!(b.approx_eq(&spd, 1e-14));

        let singular = AlgebraElement::from_real_rows(d, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(singular.polar_decompose().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn polar_recomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for kind in KINDS {
            for n in 1..=4 {
                let a = sample_with(desc(kind, n), SampleKind::Invertible, &mut rng);
                let (u, b) = a.polar_decompose().unwrap();
                assert!(u.is_unitary());
                assert!(b.is_positive());
                assert!((&u * &b).approx_eq(&a, 1e-12));
            }
        }
    }

    #[test]
    fn unitary_examples() {
        let d = desc(GroundRing::Real, 2);
        assert!(AlgebraElement::identity(d).is_unitary());
        let (s, c) = (libm::sin(0.3), libm::cos(0.3));
        assert!(AlgebraElement::from_real_rows(d, &[c, -s, s, c]).unwrap().is_unitary());
        assert!(!AlgebraElement::from_real_diagonal(d, &[2.0, 1.0]).unwrap().is_unitary());
    }

    #[test]
    fn component_labels() {
        let d = desc(GroundRing::Real, 2);
        assert_eq!(AlgebraElement::identity(d).unitary_component_label(), Ok(1));
        let refl = AlgebraElement::from_real_diagonal(d, &[-1.0, 1.0]).unwrap();
        assert_eq!(refl.unitary_component_label(), Ok(-1));
        let not_unitary = AlgebraElement::from_real_diagonal(d, &[2.0, 1.0]).unwrap();
        assert_eq!(not_unitary.unitary_component_label(), Err(Error::NotUnitary));
        for seed in 0..10 {
            for kind in [GroundRing::Complex, GroundRing::Quaternion] {
                let u = sample(desc(kind, 3), SampleKind::Unitary, seed);
                assert_eq!(u.unitary_component_label(), Ok(0));
            }
        }
    }

    #[test]
    fn samples_satisfy_their_predicates() {
        for kind in KINDS {
            for seed in 0..5 {
                let d = desc(kind, 3);
                assert!(sample(d, SampleKind::Positive, seed).is_positive());
                assert!(sample(d, SampleKind::Unitary, seed).is_unitary());
                assert!(sample(d, SampleKind::Invertible, seed).is_invertible());
                assert!(sample(d, SampleKind::Symmetric, seed).is_symmetric());
            }
        }
        let d = desc(GroundRing::Complex, 2);
        assert_eq!(sample(d, SampleKind::Unitary, 1), sample(d, SampleKind::Unitary, 1));
        assert_ne!(sample(d, SampleKind::Unitary, 1), sample(d, SampleKind::Unitary, 2));
    }
}
