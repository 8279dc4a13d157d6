//! The biquaternion algebra: complex 3-vectors, biquaternions, their product,
//! conjugations, norms and the energy-momentum biquaternion.
//!
//! A biquaternion is written `b + B` with a complex scalar part `b` and a
//! complex 3-vector part `B`. The product is
//!
//! ```text
//! (f + F) ∘ (b + B) = fb - (F,B) + fB + bF + [F,B]
//! ```
//!
//! with complex-bilinear dot and cross products (no conjugation anywhere).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Neg, Sub};

pub type Complex = Complex64;

/// Real 3-vector, used for grid coordinates and the real/imaginary parts of
/// structural coefficients.
pub type Real3 = [f64; 3];

pub fn dot3(a: Real3, b: Real3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: Real3, b: Real3) -> Real3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: Real3) -> f64 {
    dot3(a, a).sqrt()
}

pub fn scale3(a: Real3, c: f64) -> Real3 {
    [a[0] * c, a[1] * c, a[2] * c]
}

pub fn add3(a: Real3, b: Real3) -> Real3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub3(a: Real3, b: Real3) -> Real3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Some unit vector orthogonal to `a` (deterministic choice).
pub fn any_unit_orthogonal(a: Real3) -> Real3 {
    let trial = if a[0].abs() <= a[1].abs() && a[0].abs() <= a[2].abs() {
        [1.0, 0.0, 0.0]
    } else if a[1].abs() <= a[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let c = cross3(a, trial);
    let n = norm3(c);
    if n == 0.0 {
        // a is the zero vector; anything is orthogonal.
        trial
    } else {
        scale3(c, 1.0 / n)
    }
}

/// Complex 3-vector.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CVec3 {
    pub x: Complex,
    pub y: Complex,
    pub z: Complex,
}

impl CVec3 {
    pub const ZERO: CVec3 = CVec3 {
        x: Complex::new(0.0, 0.0),
        y: Complex::new(0.0, 0.0),
        z: Complex::new(0.0, 0.0),
    };

    pub fn new(x: Complex, y: Complex, z: Complex) -> Self {
        CVec3 { x, y, z }
    }

    pub fn from_real(r: Real3) -> Self {
        CVec3 {
            x: Complex::new(r[0], 0.0),
            y: Complex::new(r[1], 0.0),
            z: Complex::new(r[2], 0.0),
        }
    }

    pub fn from_imag(r: Real3) -> Self {
        CVec3 {
            x: Complex::new(0.0, r[0]),
            y: Complex::new(0.0, r[1]),
            z: Complex::new(0.0, r[2]),
        }
    }

    pub fn re(&self) -> Real3 {
        [self.x.re, self.y.re, self.z.re]
    }

    pub fn im(&self) -> Real3 {
        [self.x.im, self.y.im, self.z.im]
    }

    /// Complex-bilinear dot product (no conjugation).
    pub fn dot(&self, o: &CVec3) -> Complex {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    /// Bilinear dot against a real vector.
    pub fn dot_real(&self, r: Real3) -> Complex {
        self.x * r[0] + self.y * r[1] + self.z * r[2]
    }

    pub fn cross(&self, o: &CVec3) -> CVec3 {
        CVec3 {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    pub fn conj(&self) -> CVec3 {
        CVec3 {
            x: self.x.conj(),
            y: self.y.conj(),
            z: self.z.conj(),
        }
    }

    /// Sum of |component|^2 (six real degrees of freedom).
    pub fn norm_sqr(&self) -> f64 {
        self.x.norm_sqr() + self.y.norm_sqr() + self.z.norm_sqr()
    }

    pub fn is_finite(&self) -> bool {
        [self.x, self.y, self.z]
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scale(&self, c: Complex) -> CVec3 {
        CVec3 {
            x: self.x * c,
            y: self.y * c,
            z: self.z * c,
        }
    }
}

impl Add for CVec3 {
    type Output = CVec3;
    fn add(self, o: CVec3) -> CVec3 {
        CVec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for CVec3 {
    type Output = CVec3;
    fn sub(self, o: CVec3) -> CVec3 {
        CVec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for CVec3 {
    type Output = CVec3;
    fn neg(self) -> CVec3 {
        CVec3::new(-self.x, -self.y, -self.z)
    }
}

/// Which conjugation of the algebra to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjugationKind {
    /// conj(s) + conj(v): complex conjugation of every component.
    ComplexOnly,
    /// s - v: the quaternion conjugation.
    QuaternionOnly,
    /// conj(s) - conj(v): both combined (they commute).
    Hermitian,
}

/// Ordering/kind convention used for the energy-momentum product Ξ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum XiConvention {
    /// Ξ = Hermitian(a) ∘ a (default; reproduces the published closed forms).
    HermitianLeft,
    /// Ξ = a ∘ Hermitian(a).
    HermitianRight,
    /// Ξ = a ∘ QuaternionOnly(a).
    QuaternionOnly,
}

impl XiConvention {
    pub const ALL: [XiConvention; 3] = [
        XiConvention::HermitianLeft,
        XiConvention::HermitianRight,
        XiConvention::QuaternionOnly,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            XiConvention::HermitianLeft => "hermitian-left",
            XiConvention::HermitianRight => "hermitian-right",
            XiConvention::QuaternionOnly => "quaternion-only",
        }
    }
}

impl std::str::FromStr for XiConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "hermitian-left" => Ok(XiConvention::HermitianLeft),
            "hermitian-right" => Ok(XiConvention::HermitianRight),
            "quaternion-only" => Ok(XiConvention::QuaternionOnly),
            other => Err(format!("unknown convention `{other}`")),
        }
    }
}

/// Branch of the pseudonorm square root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum PseudonormBranch {
    /// Nonnegative real for nonnegative radicand, +i·sqrt(-radicand) otherwise.
    #[default]
    PrincipalRoot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionFlags {
    pub xi_convention: XiConvention,
    pub pseudonorm_branch: PseudonormBranch,
}

impl Default for ConventionFlags {
    fn default() -> Self {
        ConventionFlags {
            xi_convention: XiConvention::HermitianLeft,
            pseudonorm_branch: PseudonormBranch::PrincipalRoot,
        }
    }
}

impl ConventionFlags {
    pub fn with_xi(conv: XiConvention) -> Self {
        ConventionFlags {
            xi_convention: conv,
            ..Default::default()
        }
    }
}

/// Biquaternion: complex scalar + complex 3-vector (eight real degrees of
/// freedom).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Biquaternion {
    pub s: Complex,
    pub v: CVec3,
}

impl Biquaternion {
    pub const ZERO: Biquaternion = Biquaternion {
        s: Complex::new(0.0, 0.0),
        v: CVec3::ZERO,
    };

    pub const ONE: Biquaternion = Biquaternion {
        s: Complex::new(1.0, 0.0),
        v: CVec3::ZERO,
    };

    pub fn new(s: Complex, v: CVec3) -> Self {
        Biquaternion { s, v }
    }

    pub fn scalar(s: Complex) -> Self {
        Biquaternion { s, v: CVec3::ZERO }
    }

    pub fn vector(v: CVec3) -> Self {
        Biquaternion {
            s: Complex::new(0.0, 0.0),
            v,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.s.re.is_finite() && self.s.im.is_finite() && self.v.is_finite()
    }

    /// The biquaternion product a∘b.
    pub fn mul(&self, o: &Biquaternion) -> Biquaternion {
        Biquaternion {
            s: self.s * o.s - self.v.dot(&o.v),
            v: o.v.scale(self.s) + self.v.scale(o.s) + self.v.cross(&o.v),
        }
    }

    /// Componentwise αa + βb.
    pub fn linear(a: &Biquaternion, b: &Biquaternion, alpha: Complex, beta: Complex) -> Self {
        Biquaternion {
            s: alpha * a.s + beta * b.s,
            v: a.v.scale(alpha) + b.v.scale(beta),
        }
    }

    pub fn conjugate(&self, kind: ConjugationKind) -> Biquaternion {
        match kind {
            ConjugationKind::ComplexOnly => Biquaternion::new(self.s.conj(), self.v.conj()),
            ConjugationKind::QuaternionOnly => Biquaternion::new(self.s, -self.v),
            ConjugationKind::Hermitian => Biquaternion::new(self.s.conj(), -self.v.conj()),
        }
    }

    /// Sum of squared moduli of the eight real components.
    pub fn norm_sqr(&self) -> f64 {
        self.s.norm_sqr() + self.v.norm_sqr()
    }

    /// Euclidean norm of the eight real components.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Minkowski-type pseudonorm: principal square root of |s|² − Σ|v_k|²,
    /// nonnegative real or positive-imaginary.
    pub fn pseudonorm(&self) -> Complex {
        let radicand = self.s.norm_sqr() - self.v.norm_sqr();
        if radicand >= 0.0 {
            Complex::new(radicand.sqrt(), 0.0)
        } else {
            Complex::new(0.0, (-radicand).sqrt())
        }
    }

    /// The multiplicative quaternion norm-form s² + (v,v).
    pub fn bilinear_form(&self) -> Complex {
        self.s * self.s + self.v.dot(&self.v)
    }

    /// Energy-momentum biquaternion Ξ = W + iP under the given convention.
    pub fn energy_momentum(&self, flags: &ConventionFlags) -> Biquaternion {
        match flags.xi_convention {
            XiConvention::HermitianLeft => {
                Biquaternion::mul(&self.conjugate(ConjugationKind::Hermitian), self)
            }
            XiConvention::HermitianRight => self.mul(&self.conjugate(ConjugationKind::Hermitian)),
            XiConvention::QuaternionOnly => {
                self.mul(&self.conjugate(ConjugationKind::QuaternionOnly))
            }
        }
    }

    pub fn scale(&self, c: Complex) -> Biquaternion {
        Biquaternion {
            s: self.s * c,
            v: self.v.scale(c),
        }
    }
}

impl Add for Biquaternion {
    type Output = Biquaternion;
    fn add(self, o: Biquaternion) -> Biquaternion {
        Biquaternion::new(self.s + o.s, self.v + o.v)
    }
}

impl Sub for Biquaternion {
    type Output = Biquaternion;
    fn sub(self, o: Biquaternion) -> Biquaternion {
        Biquaternion::new(self.s - o.s, self.v - o.v)
    }
}

impl Neg for Biquaternion {
    type Output = Biquaternion;
    fn neg(self) -> Biquaternion {
        Biquaternion::new(-self.s, -self.v)
    }
}

/// Constant complex 3-vector coefficient F of the biwave equation, with the
/// two field decodings used by the nonstationary and the harmonic/static
/// problem families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructuralCoefficient {
    pub vector: CVec3,
}

impl StructuralCoefficient {
    pub const ZERO: StructuralCoefficient = StructuralCoefficient { vector: CVec3::ZERO };

    pub fn new(vector: CVec3) -> Self {
        StructuralCoefficient { vector }
    }

    /// Nonstationary (time-domain) decoding F = -E - iH.
    pub fn from_wave_fields(e: Real3, h: Real3) -> Self {
        StructuralCoefficient {
            vector: CVec3::new(
                Complex::new(-e[0], -h[0]),
                Complex::new(-e[1], -h[1]),
                Complex::new(-e[2], -h[2]),
            ),
        }
    }

    /// Harmonic/static decoding F = E + iH.
    pub fn from_harmonic_fields(e: Real3, h: Real3) -> Self {
        StructuralCoefficient {
            vector: CVec3::new(
                Complex::new(e[0], h[0]),
                Complex::new(e[1], h[1]),
                Complex::new(e[2], h[2]),
            ),
        }
    }

    /// E under the nonstationary convention: E = -Re F.
    pub fn wave_e(&self) -> Real3 {
        scale3(self.vector.re(), -1.0)
    }

    /// H under the nonstationary convention: H = -Im F.
    pub fn wave_h(&self) -> Real3 {
        scale3(self.vector.im(), -1.0)
    }

    /// E under the harmonic convention: E = Re F.
    pub fn harmonic_e(&self) -> Real3 {
        self.vector.re()
    }

    /// H under the harmonic convention: H = Im F.
    pub fn harmonic_h(&self) -> Real3 {
        self.vector.im()
    }

    /// F as a pure-vector biquaternion (for quaternionic application).
    pub fn bq(&self) -> Biquaternion {
        Biquaternion::vector(self.vector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    const I: Complex = Complex::new(0.0, 1.0);

    #[test]
    fn mul_identity() {
        let b = Biquaternion::new(c(0.3, -1.2), CVec3::new(c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 4.0)));
        assert_eq!(Biquaternion::ONE.mul(&b), b);
        assert_eq!(b.mul(&Biquaternion::ONE), b);
    }

    #[test]
    fn mul_basis_vectors() {
        let e1 = Biquaternion::vector(CVec3::from_real([1.0, 0.0, 0.0]));
        let e2 = Biquaternion::vector(CVec3::from_real([0.0, 1.0, 0.0]));
        let e3 = Biquaternion::vector(CVec3::from_real([0.0, 0.0, 1.0]));
        assert_eq!(e1.mul(&e2), e3);
    }

    #[test]
    fn mul_mixed_example() {
        // A = i + (1, i, 0); A∘A = -1 + (2i, -2, 0).
        let a = Biquaternion::new(I, CVec3::new(c(1.0, 0.0), I, c(0.0, 0.0)));
        let sq = a.mul(&a);
        assert!((sq.s - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((sq.v.x - c(0.0, 2.0)).norm() < 1e-15);
        assert!((sq.v.y - c(-2.0, 0.0)).norm() < 1e-15);
        assert!(sq.v.z.norm() < 1e-15);
    }

    #[test]
    fn linear_combinations() {
        let a = Biquaternion::new(I, CVec3::from_real([1.0, 0.0, 0.0]));
        let z = Biquaternion::linear(&a, &a, c(1.0, 0.0), c(-1.0, 0.0));
        assert_eq!(z, Biquaternion::ZERO);

        let d = Biquaternion::linear(&a, &Biquaternion::ZERO, c(2.0, 0.0), c(0.0, 0.0));
        assert_eq!(d, Biquaternion::new(c(0.0, 2.0), CVec3::from_real([2.0, 0.0, 0.0])));

        let e3 = Biquaternion::vector(CVec3::from_real([0.0, 0.0, 1.0]));
        let m = Biquaternion::linear(&Biquaternion::ONE, &e3, I, I);
        assert_eq!(m, Biquaternion::new(I, CVec3::new(c(0.0, 0.0), c(0.0, 0.0), I)));
    }

    #[test]
    fn conjugations() {
        let a = Biquaternion::new(I, CVec3::new(c(1.0, 0.0), I, c(0.0, 0.0)));
        let h = a.conjugate(ConjugationKind::Hermitian);
        assert_eq!(h, Biquaternion::new(-I, CVec3::new(c(-1.0, 0.0), I, c(0.0, 0.0))));
        // Involution.
        assert_eq!(h.conjugate(ConjugationKind::Hermitian), a);
        // Quaternion conjugation of a scalar is the scalar.
        let b = Biquaternion::scalar(c(2.0, -3.0));
        assert_eq!(b.conjugate(ConjugationKind::QuaternionOnly), b);
        // Hermitian = ComplexOnly then QuaternionOnly, in either order.
        let via = a
            .conjugate(ConjugationKind::ComplexOnly)
            .conjugate(ConjugationKind::QuaternionOnly);
        assert_eq!(via, h);
    }

    #[test]
    fn norm_xi_twistor_amplitude() {
        // ξ = (2,0,0), E = 0, H = (0,0,1): the amplitude has unit norm
        // and pseudonorm i/2.
        let s = 1.0 / (2.0 * 2.0_f64.sqrt());
        let amp = Biquaternion::new(
            I * 3.0_f64.sqrt() * s,
            CVec3::new(c(-2.0 * s, 0.0), c(0.0, 0.0), I * s),
        );
        assert!((amp.norm() - 1.0).abs() < 1e-14);
        let p = amp.pseudonorm();
        assert!((p - c(0.0, 0.5)).norm() < 1e-14);
    }

    #[test]
    fn norm_zero_and_evanescent_amplitude() {
        assert_eq!(Biquaternion::ZERO.norm(), 0.0);
        // Evanescent amplitude for ξ=(1,0,0), E=0, H=(0,0,2): norm 2, pseudonorm i.
        let s = 1.0 / 2.0_f64.sqrt();
        let amp = Biquaternion::new(
            c(3.0_f64.sqrt() * s, 0.0),
            CVec3::new(c(-s, 0.0), c(0.0, 0.0), c(0.0, 2.0 * s)),
        );
        assert!((amp.norm() - 2.0).abs() < 1e-14);
        assert!((amp.pseudonorm() - I).norm() < 1e-14);
    }

    #[test]
    fn pseudonorm_omega_twistor_amplitude() {
        // (1 - (0,0,2) + i(√5,0,0))/√10 has pseudonorm 2i/√5.
        let s = 1.0 / 10.0_f64.sqrt();
        let amp = Biquaternion::new(
            c(s, 0.0),
            CVec3::new(c(0.0, 5.0_f64.sqrt() * s), c(0.0, 0.0), c(-2.0 * s, 0.0)),
        );
        let p = amp.pseudonorm();
        assert!((p - c(0.0, 2.0 / 5.0_f64.sqrt())).norm() < 1e-14);
    }

    #[test]
    fn bilinear_form_examples() {
        assert_eq!(Biquaternion::ONE.bilinear_form(), c(1.0, 0.0));
        let null = Biquaternion::vector(CVec3::new(c(1.0, 0.0), I, c(0.0, 0.0)));
        assert!(null.bilinear_form().norm() < 1e-15);
    }

    #[test]
    fn energy_momentum_h0_amplitude() {
        // (i - e1)/√2 gives Ξ = 1 + i e1 under HermitianLeft.
        let s = 1.0 / 2.0_f64.sqrt();
        let a = Biquaternion::new(I * s, CVec3::from_real([-s, 0.0, 0.0]));
        let xi = a.energy_momentum(&ConventionFlags::default());
        assert!((xi.s - c(1.0, 0.0)).norm() < 1e-14);
        assert!((xi.v.x - I).norm() < 1e-14);
        assert!(xi.v.y.norm() < 1e-14);
        assert!(xi.v.z.norm() < 1e-14);
    }

    #[test]
    fn energy_momentum_general_xi_amplitude() {
        // ξ=(2,0,0), E=0, H=(0,0,1), upper branch:
        // Ξ = 1 + i((0,-1,0) + √3(1,0,0))/2.
        let s = 1.0 / (2.0 * 2.0_f64.sqrt());
        let amp = Biquaternion::new(
            I * 3.0_f64.sqrt() * s,
            CVec3::new(c(-2.0 * s, 0.0), c(0.0, 0.0), I * s),
        );
        let xi = amp.energy_momentum(&ConventionFlags::default());
        let r3 = 3.0_f64.sqrt();
        assert!((xi.s - c(1.0, 0.0)).norm() < 1e-14);
        assert!((xi.v.x - I * (r3 / 2.0)).norm() < 1e-14);
        assert!((xi.v.y - I * (-0.5)).norm() < 1e-14);
        assert!(xi.v.z.norm() < 1e-14);
    }

    #[test]
    fn energy_momentum_zero() {
        let xi = Biquaternion::ZERO.energy_momentum(&ConventionFlags::default());
        assert_eq!(xi, Biquaternion::ZERO);
    }

    fn arb_complex() -> impl Strategy<Value = Complex> {
        (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex::new(re, im))
    }

    fn arb_bq() -> impl Strategy<Value = Biquaternion> {
        (arb_complex(), arb_complex(), arb_complex(), arb_complex())
            .prop_map(|(s, x, y, z)| Biquaternion::new(s, CVec3::new(x, y, z)))
    }

    proptest! {
        #[test]
        fn associativity(a in arb_bq(), b in arb_bq(), c in arb_bq()) {
            let lhs = a.mul(&b).mul(&c);
            let rhs = a.mul(&b.mul(&c));
            let scale = a.norm() * b.norm() * c.norm();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale.max(1e-30));
        }

        #[test]
        fn hermitian_anti_homomorphism(a in arb_bq(), b in arb_bq()) {
            let lhs = a.mul(&b).conjugate(ConjugationKind::Hermitian);
            let rhs = b
                .conjugate(ConjugationKind::Hermitian)
                .mul(&a.conjugate(ConjugationKind::Hermitian));
            let scale = (a.norm() * b.norm()).max(1e-30);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }

        #[test]
        fn bilinear_form_multiplicative(a in arb_bq(), b in arb_bq()) {
            let lhs = a.mul(&b).bilinear_form();
            let rhs = a.bilinear_form() * b.bilinear_form();
            let scale = (a.norm_sqr() * b.norm_sqr()).max(1e-30);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }

        #[test]
        fn pseudonorm_radicand_round_trip(a in arb_bq()) {
            let p = a.pseudonorm();
            let radicand = a.s.norm_sqr() - a.v.norm_sqr();
            let back = (p * p).re;
            prop_assert!((back - radicand).abs() <= 1e-15 * radicand.abs().max(1.0));
        }

        #[test]
        fn xi_scalar_part_is_norm_squared(a in arb_bq()) {
            let xi = a.energy_momentum(&ConventionFlags::default());
            prop_assert!((xi.s.re - a.norm_sqr()).abs() <= 1e-12 * a.norm_sqr().max(1.0));
            prop_assert!(xi.s.im.abs() <= 1e-12 * a.norm_sqr().max(1.0));
        }
    }
}
