//! The group `Sp2(A, sigma)` of 2 x 2 matrices over `A` preserving
//! `omega(x, y) = sigma(x)^T Omega y`, its Lie algebra, the maximal compact
//! `KSp2`, and the Moebius action on the tube `A^sigma + i A^sigma_+`.

use core::ops::Mul;

use rand::Rng;

use crate::algebra::{sample_with, sq, AlgebraDescriptor, AlgebraElement, SampleKind};
use crate::error::{Error, Result};

/// A pair `(x1, x2)` in `A^2`, acted on from the left by 2 x 2 matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec2 {
    pub x1: AlgebraElement,
    pub x2: AlgebraElement,
}

impl Vec2 {
    pub fn new(x1: AlgebraElement, x2: AlgebraElement) -> Result<Self> {
        x1.check_same(&x2)?;
        Ok(Self { x1, x2 })
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        self.x1.descriptor()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(sq(self.x1.norm()) + sq(self.x2.norm()))
    }

    /// Right multiplication by a scalar of `A`.
    pub fn right_mul(&self, a: &AlgebraElement) -> Self {
        Self { x1: &self.x1 * a, x2: &self.x2 * a }
    }
}

/// `omega(x, y) = sigma(x1) y2 - sigma(x2) y1`.
pub fn omega(x: &Vec2, y: &Vec2) -> AlgebraElement {
    &(&x.x1.sigma() * &y.x2) - &(&x.x2.sigma() * &y.x1)
}

/// An unchecked 2 x 2 matrix `[[a, b], [c, d]]` over `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2 {
    pub a: AlgebraElement,
    pub b: AlgebraElement,
    pub c: AlgebraElement,
    pub d: AlgebraElement,
}

impl Mat2 {
    pub fn new(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement, d: AlgebraElement) -> Result<Self> {
        for x in [&b, &c, &d] {
            a.check_same(x)?;
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity(desc: AlgebraDescriptor) -> Self {
        let (one, zero) = (AlgebraElement::identity(desc), AlgebraElement::zero(desc));
        Self { a: one.clone(), b: zero.clone(), c: zero, d: one }
    }

    pub fn zero(desc: AlgebraDescriptor) -> Self {
        let zero = AlgebraElement::zero(desc);
        Self { a: zero.clone(), b: zero.clone(), c: zero.clone(), d: zero }
    }

    /// `Omega = [[0, 1], [-1, 0]]`.
    pub fn omega(desc: AlgebraDescriptor) -> Self {
        let (one, zero) = (AlgebraElement::identity(desc), AlgebraElement::zero(desc));
        Self { a: zero.clone(), b: one.clone(), c: -&one, d: zero }
    }

    pub fn diag(x: AlgebraElement, y: AlgebraElement) -> Result<Self> {
        let zero = AlgebraElement::zero(*x.descriptor());
        Self::new(x, zero.clone(), zero, y)
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        self.a.descriptor()
    }

    pub fn blocks(&self) -> [&AlgebraElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.blocks().iter().map(|x| sq(x.norm())).sum())
    }

    /// `sigma(M)^T = [[sigma(a), sigma(c)], [sigma(b), sigma(d)]]`.
    pub fn adjoint(&self) -> Self {
        Self { a: self.a.sigma(), b: self.c.sigma(), c: self.b.sigma(), d: self.d.sigma() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { a: &self.a - &other.a, b: &self.b - &other.b, c: &self.c - &other.c, d: &self.d - &other.d }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { a: &self.a + &other.a, b: &self.b + &other.b, c: &self.c + &other.c, d: &self.d + &other.d }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { a: self.a.scale(s), b: self.b.scale(s), c: self.c.scale(s), d: self.d.scale(s) }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }

    /// Relative comparison, absolute when both sides vanish.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let scale = self.norm().max(other.norm());
        let d = self.distance(other);
        if scale == 0.0 {
            d <= tol
        } else {
            d <= tol * scale
        }
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 { x1: &(&self.a * &v.x1) + &(&self.b * &v.x2), x2: &(&self.c * &v.x1) + &(&self.d * &v.x2) }
    }

    /// The `2n x 2n` element of the doubled algebra with these blocks.
    pub fn flatten(&self) -> AlgebraElement {
        AlgebraElement::from_blocks(&self.a, &self.b, &self.c, &self.d).expect("blocks share an algebra")
    }

    pub fn unflatten(m: &AlgebraElement) -> Self {
        Self { a: m.block(0, 0), b: m.block(0, 1), c: m.block(1, 0), d: m.block(1, 1) }
    }

    /// Largest of the three membership defects, relative to `max(1, |M|^2)`.
    pub fn sp2_residual(&self) -> f64 {
        let one = AlgebraElement::identity(*self.descriptor());
        let ac = &self.a.sigma() * &self.c;
        let bd = &self.b.sigma() * &self.d;
        let unit = &(&(&self.a.sigma() * &self.d) - &(&self.c.sigma() * &self.b)) - &one;
        let r = ac.distance(&ac.sigma()).max(bd.distance(&bd.sigma())).max(unit.norm());
        r / sq(self.norm()).max(1.0)
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, r: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &r.a) + &(&self.b * &r.c),
            b: &(&self.a * &r.b) + &(&self.b * &r.d),
            c: &(&self.c * &r.a) + &(&self.d * &r.c),
            d: &(&self.c * &r.b) + &(&self.d * &r.d),
        }
    }
}

/// Membership test for `Sp2(A, sigma)`.
pub fn is_sp2(m: &Mat2) -> Result<bool> {
    for x in [&m.b, &m.c, &m.d] {
        m.a.check_same(x)?;
    }
    Ok(m.sp2_residual() <= m.a.tol())
}

/// Whether `X = [[x, z], [y, -sigma(x)]]` with `y, z` symmetric.
pub fn is_sp2_lie(x: &Mat2) -> bool {
    let tol = x.a.tol();
    let scale = x.norm();
    let diag = (&x.d + &x.a.sigma()).norm();
    let sym = x.b.distance(&x.b.sigma()).max(x.c.distance(&x.c.sigma()));
    diag.max(sym) <= tol * scale
}

/// `sigma(X)^T Omega + Omega X`, which vanishes on the Lie algebra.
pub fn lie_first_order_residual(x: &Mat2) -> f64 {
    let om = Mat2::omega(*x.descriptor());
    (&x.adjoint() * &om).add(&(&om * x)).norm()
}

/// A verified element of `Sp2(A, sigma)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticElement {
    m: Mat2,
}

impl SymplecticElement {
    pub fn new(m: Mat2) -> Result<Self> {
        if is_sp2(&m)? {
            Ok(Self { m })
        } else {
            Err(Error::NotSymplectic { residual: m.sp2_residual() })
        }
    }

    pub fn from_blocks(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement, d: AlgebraElement) -> Result<Self> {
        Self::new(Mat2::new(a, b, c, d)?)
    }

    pub fn identity(desc: AlgebraDescriptor) -> Self {
        Self { m: Mat2::identity(desc) }
    }

    pub fn omega(desc: AlgebraDescriptor) -> Self {
        Self { m: Mat2::omega(desc) }
    }

    /// `Omega^-1 = [[0, -1], [1, 0]]`.
    pub fn omega_inv(desc: AlgebraDescriptor) -> Self {
        Self::omega(desc).inverse_unchecked()
    }

    /// `diag(x, sigma(x)^-1)` for invertible `x`.
    pub fn levi(x: &AlgebraElement) -> Result<Self> {
        let y = x.sigma().inverse()?;
        Self::new(Mat2::diag(x.clone(), y)?)
    }

    /// `[[1, y], [0, 1]]` for symmetric `y`.
    pub fn unipotent(y: &AlgebraElement) -> Result<Self> {
        let desc = *y.descriptor();
        let mut m = Mat2::identity(desc);
        m.b = y.clone();
        Self::new(m)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn into_matrix(self) -> Mat2 {
        self.m
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        self.m.descriptor()
    }

    pub fn tol(&self) -> f64 {
        self.m.a.tol()
    }

    pub fn with_tol(self, tol: f64) -> Self {
        let Mat2 { a, b, c, d } = self.m;
        Self { m: Mat2 { a: a.with_tol(tol), b: b.with_tol(tol), c: c.with_tol(tol), d: d.with_tol(tol) } }
    }

    fn checked(m: Mat2) -> Result<Self> {
        let tol = m.a.tol();
        let residual = m.sp2_residual();
        if residual <= tol {
            Ok(Self { m })
        } else {
            Err(Error::MembershipDrift { residual })
        }
    }

    /// `self * other`, re-verified.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.m.a.check_same(&other.m.a)?;
        Self::checked(&self.m * &other.m)
    }

    /// `g^-1 = Omega^-1 sigma(g)^T Omega = [[sigma(d), -sigma(b)], [-sigma(c), sigma(a)]]`.
    pub fn inverse(&self) -> Result<Self> {
        Self::checked(self.inverse_unchecked().m)
    }

    fn inverse_unchecked(&self) -> Self {
        Self { m: Mat2 { a: self.m.d.sigma(), b: -&self.m.b.sigma(), c: -&self.m.c.sigma(), d: self.m.a.sigma() } }
    }

    /// Product without the membership re-check. Products of members are
    /// members; callers that chain many factors verify the result once.
    pub fn mul_unchecked(&self, other: &Self) -> Self {
        Self { m: &self.m * &other.m }
    }

    pub fn inverse_fast(&self) -> Self {
        self.inverse_unchecked()
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        self.m.apply(v)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.m.approx_eq(&other.m, tol)
    }

    pub fn residual(&self) -> f64 {
        self.m.sp2_residual()
    }
}

/// Whether `sigma(M)^T M = Id`, i.e. `M` lies in `KSp2`.
pub fn is_ksp2(m: &SymplecticElement) -> bool {
    let id = Mat2::identity(*m.descriptor());
    let r = (&m.m.adjoint() * &m.m).distance(&id);
    r <= m.tol() * id.norm()
}

/// A random word of length `len` in the generators `diag(x, sigma(x)^-1)`,
/// `[[1, y], [0, 1]]` and `Omega`.
pub fn random_sp2_word<R: Rng + ?Sized>(desc: AlgebraDescriptor, len: usize, rng: &mut R) -> Result<SymplecticElement> {
    let mut g = SymplecticElement::identity(desc);
    for _ in 0..len {
        let h = match rng.random_range(0..3) {
            0 => SymplecticElement::levi(&sample_with(desc, SampleKind::Invertible, rng))?,
            1 => SymplecticElement::unipotent(&sample_with(desc, SampleKind::Symmetric, rng))?,
            _ => SymplecticElement::omega(desc),
        };
        g = g.compose(&h)?;
    }
    Ok(g)
}

/// A random element of `KSp2` as a word in `diag(u, u)`, `Omega` and the
/// rotations `[[cos h, sin h], [-sin h, cos h]]` for symmetric `h`.
pub fn random_ksp2_word<R: Rng + ?Sized>(
    desc: AlgebraDescriptor,
    len: usize,
    rng: &mut R,
) -> Result<SymplecticElement> {
    let mut g = SymplecticElement::identity(desc);
    for _ in 0..len {
        let h = match rng.random_range(0..3) {
            0 => {
                let u = sample_with(desc, SampleKind::Unitary, rng);
                SymplecticElement::new(Mat2::diag(u.clone(), u)?)?
            }
            1 => {
                let s = sample_with(desc, SampleKind::Symmetric, rng);
                let cos = s.map_symmetric(libm::cos);
                let sin = s.map_symmetric(libm::sin);
                SymplecticElement::from_blocks(cos.clone(), sin.clone(), -&sin, cos)?
            }
            _ => SymplecticElement::omega(desc),
        };
        g = g.compose(&h)?;
    }
    Ok(g)
}

/// An element `re + i im` of the complexification `A (x) C`, with `sigma`
/// extended complex-linearly.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexifiedElement {
    pub re: AlgebraElement,
    pub im: AlgebraElement,
}

impl ComplexifiedElement {
    pub fn new(re: AlgebraElement, im: AlgebraElement) -> Result<Self> {
        re.check_same(&im)?;
        Ok(Self { re, im })
    }

    pub fn real(a: &AlgebraElement) -> Self {
        Self { re: a.clone(), im: AlgebraElement::zero(*a.descriptor()) }
    }

    pub fn sigma(&self) -> Self {
        Self { re: self.re.sigma(), im: self.im.sigma() }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// `(x + i y)(p + i q) = (x p - y q) + i (x q + y p)`.
    pub fn mul(&self, o: &Self) -> Self {
        Self { re: &(&self.re * &o.re) - &(&self.im * &o.im), im: &(&self.re * &o.im) + &(&self.im * &o.re) }
    }

    /// Left multiplication by an element of `A`.
    pub fn left_mul(&self, a: &AlgebraElement) -> Self {
        Self { re: a * &self.re, im: a * &self.im }
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(sq(self.re.norm()) + sq(self.im.norm()))
    }

    /// Inverse through the real block form `[[x, -y], [y, x]]`.
    pub fn inverse(&self) -> Result<Self> {
        let block = AlgebraElement::from_blocks(&self.re, &(-&self.im), &self.im, &self.re)?;
        if !block.is_invertible() {
            return Err(Error::SingularDenominator);
        }
        let inv = block.inverse().map_err(|_| Error::SingularDenominator)?;
        Ok(Self { re: inv.block(0, 0), im: inv.block(1, 0) })
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        let scale = self.norm().max(o.norm());
        let d = self.sub(o).norm();
        if scale == 0.0 {
            d <= tol
        } else {
            d <= tol * scale
        }
    }
}

/// A point `z1 + i z2` of the tube with `z1` symmetric and `z2` positive.
#[derive(Clone, Debug, PartialEq)]
pub struct TubePoint {
    z: ComplexifiedElement,
}

impl TubePoint {
    pub fn new(z: ComplexifiedElement) -> Result<Self> {
        let tol = z.re.tol();
        let asym = z.re.distance(&z.re.sigma());
        if asym > tol * z.norm().max(1.0) || !z.im.is_positive() {
            return Err(Error::NotInTube);
        }
        Ok(Self { z })
    }

    pub fn from_parts(re: AlgebraElement, im: AlgebraElement) -> Result<Self> {
        Self::new(ComplexifiedElement::new(re, im)?)
    }

    /// The base point `i * 1`.
    pub fn base(desc: AlgebraDescriptor) -> Self {
        Self { z: ComplexifiedElement { re: AlgebraElement::zero(desc), im: AlgebraElement::identity(desc) } }
    }

    pub fn value(&self) -> &ComplexifiedElement {
        &self.z
    }
}

/// `g(z) = (a z + b)(c z + d)^-1`.
pub fn mobius_act(g: &SymplecticElement, z: &TubePoint) -> Result<TubePoint> {
    let m = g.matrix();
    m.a.check_same(&z.z.re)?;
    let num = z.z.left_mul(&m.a).add(&ComplexifiedElement::real(&m.b));
    let den = z.z.left_mul(&m.c).add(&ComplexifiedElement::real(&m.d));
    let w = num.mul(&den.inverse()?);
    // The exact image is symmetric; drop the rounding noise in the sigma-odd part.
    let w = ComplexifiedElement { re: w.re.symmetrized(), im: w.im.symmetrized() };
    TubePoint::new(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroundRing;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const KINDS: [GroundRing; 3] = [GroundRing::Real, GroundRing::Complex, GroundRing::Quaternion];

    fn desc(kind: GroundRing, n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::new(kind, n).unwrap()
    }

    fn real_mat2(e: [f64; 4]) -> Mat2 {
        let d = desc(GroundRing::Real, 1);
        let s = |x: f64| AlgebraElement::scalar(d, x);
        Mat2::new(s(e[0]), s(e[1]), s(e[2]), s(e[3])).unwrap()
    }

    fn turn(d: AlgebraDescriptor) -> Mat2 {
        let one = AlgebraElement::identity(d);
        Mat2::new(-&one, one.clone(), -&one, AlgebraElement::zero(d)).unwrap()
    }

    #[test]
    fn membership_examples() {
        for kind in KINDS {
            let d = desc(kind, 2);
            assert!(is_sp2(&Mat2::identity(d)).unwrap());
            assert!(is_sp2(&Mat2::omega(d)).unwrap());
            assert!(is_sp2(&turn(d)).unwrap());
            assert!(!is_sp2(&Mat2::identity(d).scale(2.0)).unwrap());
        }
        let mut bad = Mat2::identity(desc(GroundRing::Real, 2));
        bad.b = AlgebraElement::identity(desc(GroundRing::Real, 3));
        assert_eq!(is_sp2(&bad), Err(Error::DescriptorMismatch));
    }

    #[test]
    fn real_n1_membership_is_unit_determinant() {
        // Sp2(R) = SL2(R)
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let e: [f64; 4] = core::array::from_fn(|_| rng.random_range(-2.0..2.0));
            let det = e[0] * e[3] - e[1] * e[2];
            let m = real_mat2(e);
            assert_eq!(is_sp2(&m).unwrap(), (det - 1.0).abs() < 1e-12);
            let s = 1.0 / libm::sqrt(det.abs());
            let m = real_mat2([e[0] * s, e[1] * s, e[2] * s, e[3] * s]);
            assert_eq!(is_sp2(&m).unwrap(), det > 0.0);
        }
    }

    #[test]
    fn lie_algebra_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for kind in KINDS {
            let d = desc(kind, 3);
            assert!(is_sp2_lie(&Mat2::zero(d)));
            let x = sample_with(d, SampleKind::Invertible, &mut rng);
            let diag = Mat2::diag(x.clone(), -&x.sigma()).unwrap();
            assert!(is_sp2_lie(&diag));
            let mut up = Mat2::zero(d);
            up.b = x.clone();
            assert!(!is_sp2_lie(&up));
            let y = sample_with(d, SampleKind::Symmetric, &mut rng);
            let z = sample_with(d, SampleKind::Symmetric, &mut rng);
            let gen = Mat2::new(x.clone(), z, y, -&x.sigma()).unwrap();
            assert!(is_sp2_lie(&gen));
            assert!(lie_first_order_residual(&gen) < 1e-12 * gen.norm());
            // exp(tX) to first order stays in Sp2 up to O(t^2)
            for t in [1e-3, 1e-4] {
                let g = Mat2::identity(d).add(&gen.scale(t));
                let r = g.sp2_residual();
                assert!(r < 10.0 * t * t * sq(gen.norm()), "t={t} r={r}");
            }
        }
    }

    #[test]
    fn ksp2_examples() {
        let d = desc(GroundRing::Real, 1);
        assert!(is_ksp2(&SymplecticElement::identity(d)));
        assert!(is_ksp2(&SymplecticElement::omega(d)));
        let shear = SymplecticElement::new(real_mat2([1.0, 1.0, 0.0, 1.0])).unwrap();
        assert!(!is_ksp2(&shear));
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for kind in KINDS {
            let k = random_ksp2_word(desc(kind, 3), 6, &mut rng).unwrap();
            assert!(is_ksp2(&k));
        }
    }

    #[test]
    fn group_operations() {
        for kind in KINDS {
            let d = desc(kind, 2);
            let om = SymplecticElement::omega(d);
            let minus = SymplecticElement::new(Mat2::identity(d).scale(-1.0)).unwrap();
            assert!(om.compose(&om).unwrap().approx_eq(&minus, 1e-15));
            let t = SymplecticElement::new(turn(d)).unwrap();
            let t2 = t.compose(&t).unwrap();
            assert!(t.inverse().unwrap().approx_eq(&t2, 1e-15));
            assert!(t2.compose(&t).unwrap().approx_eq(&SymplecticElement::identity(d), 1e-15));
            assert!(om
                .compose(&SymplecticElement::omega_inv(d))
                .unwrap()
                .approx_eq(&SymplecticElement::identity(d), 0.0));
        }
    }

    #[test]
    fn random_words_are_members_and_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for kind in KINDS {
            for n in 1..=3 {
                let d = desc(kind, n);
                let g = random_sp2_word(d, 8, &mut rng).unwrap();
                assert!(is_sp2(g.matrix()).unwrap());
                let id = g.inverse().unwrap().compose(&g).unwrap();
                assert!(id.approx_eq(&SymplecticElement::identity(d), 1e-9));
            }
        }
    }

    #[test]
    fn form_is_preserved() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for kind in KINDS {
            let d = desc(kind, 3);
            for _ in 0..10 {
                let g = random_sp2_word(d, 6, &mut rng).unwrap();
                let x = Vec2::new(
                    sample_with(d, SampleKind::Invertible, &mut rng),
                    sample_with(d, SampleKind::Invertible, &mut rng),
                )
                .unwrap();
                let y = Vec2::new(
                    sample_with(d, SampleKind::Invertible, &mut rng),
                    sample_with(d, SampleKind::Invertible, &mut rng),
                )
                .unwrap();
                let before = omega(&x, &y);
                let after = omega(&g.apply(&x), &g.apply(&y));
                let scale = sq(g.matrix().norm()) * x.norm() * y.norm();
                assert!(before.distance(&after) <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn complexified_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for kind in KINDS {
            let d = desc(kind, 3);
            let z = ComplexifiedElement::new(
                sample_with(d, SampleKind::Invertible, &mut rng),
                sample_with(d, SampleKind::Invertible, &mut rng),
            )
            .unwrap();
            let one = ComplexifiedElement::real(&AlgebraElement::identity(d));
            assert!(z.mul(&z.inverse().unwrap()).approx_eq(&one, 1e-12));
            assert!(z.inverse().unwrap().mul(&z).approx_eq(&one, 1e-12));
        }
        let d = desc(GroundRing::Real, 2);
        let zero = ComplexifiedElement::real(&AlgebraElement::zero(d));
        assert_eq!(zero.inverse(), Err(Error::SingularDenominator));
    }

    #[test]
    fn complexified_matches_scalar_arithmetic() {
        // n = 1 over R: A (x) C is just C
        let d = desc(GroundRing::Real, 1);
        let z = ComplexifiedElement::new(AlgebraElement::scalar(d, 0.3), AlgebraElement::scalar(d, -1.7)).unwrap();
        let inv = z.inverse().unwrap();
        let expected = nalgebra::Complex::new(0.3, -1.7).inv();
        assert!((inv.re.real_entry(0, 0) - expected.re).abs() < 1e-15);
        assert!((inv.im.real_entry(0, 0) - expected.im).abs() < 1e-15);
    }

    #[test]
    fn mobius_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for kind in KINDS {
            let d = desc(kind, 2);
            let i = TubePoint::base(d);
            let z = TubePoint::from_parts(
                sample_with(d, SampleKind::Symmetric, &mut rng),
                sample_with(d, SampleKind::Positive, &mut rng),
            )
            .unwrap();
            let id = SymplecticElement::identity(d);
            assert!(mobius_act(&id, &z).unwrap().value().approx_eq(z.value(), 1e-14));
            let om = SymplecticElement::omega(d);
            assert!(mobius_act(&om, &i).unwrap().value().approx_eq(i.value(), 1e-14));
            let y = sample_with(d, SampleKind::Symmetric, &mut rng);
            let tr = SymplecticElement::unipotent(&y).unwrap();
            let moved = mobius_act(&tr, &z).unwrap();
            let expected = z.value().add(&ComplexifiedElement::real(&y));
            assert!(moved.value().approx_eq(&expected, 1e-13));
        }
    }

    #[test]
    fn mobius_is_an_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kind in KINDS {
            let d = desc(kind, 2);
            for _ in 0..10 {
                let g = random_sp2_word(d, 4, &mut rng).unwrap();
                let h = random_sp2_word(d, 4, &mut rng).unwrap();
                let z = TubePoint::from_parts(
                    sample_with(d, SampleKind::Symmetric, &mut rng),
                    sample_with(d, SampleKind::Positive, &mut rng),
                )
                .unwrap();
                let lhs = mobius_act(&g.compose(&h).unwrap(), &z).unwrap();
                let rhs = mobius_act(&g, &mobius_act(&h, &z).unwrap()).unwrap();
                assert!(lhs.value().approx_eq(rhs.value(), 1e-8));
            }
        }
    }

    #[test]
    fn ksp2_fixes_base_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for kind in KINDS {
            let d = desc(kind, 2);
            let k = random_ksp2_word(d, 5, &mut rng).unwrap();
            let i = TubePoint::base(d);
            assert!(mobius_act(&k, &i).unwrap().value().approx_eq(i.value(), 1e-12));
        }
    }

    #[test]
    fn tube_rejects_non_positive_imaginary_part() {
        let d = desc(GroundRing::Complex, 2);
        let im = AlgebraElement::from_real_diagonal(d, &[1.0, -1.0]).unwrap();
        assert_eq!(TubePoint::from_parts(AlgebraElement::zero(d), im), Err(Error::NotInTube));
    }
}
