//! Exact plane-wave calculus: the mutual bigradients ∇±, the operators
//! D_F^± = ∇± ± F and the ω-gradients ∇_ω^± act on a plane-wave field
//! amp·exp(στ − i(κ,x)) as closed-form amplitude multipliers, so residuals of
//! the homogeneous equations can be checked to machine precision.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Biquaternion, CVec3, Complex, Real3, StructuralCoefficient};

/// Upper/lower sign of a mutual operator pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(&self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(&self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" | "upper" => Ok(Sign::Plus),
            "-" | "minus" | "lower" => Ok(Sign::Minus),
            other => Err(format!("expected `+` or `-`, got `{other}`")),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CalculusError {
    #[error("harmonic operators require a spatial field (sigma = 0), got sigma = {0}")]
    NonZeroSigma(Complex),
}

/// Plane-wave biquaternion field amp·exp(στ − i(κ,x)).
///
/// κ may be complex, so exponential spatial damping lives in the same type.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveField {
    pub amp: Biquaternion,
    pub sigma: Complex,
    pub kappa: CVec3,
}

impl PlaneWaveField {
    pub fn new(amp: Biquaternion, sigma: Complex, kappa: CVec3) -> Self {
        PlaneWaveField { amp, sigma, kappa }
    }

    /// Scalar phase exp(στ − i(κ,x)) at a point.
    pub fn phase(&self, tau: f64, x: Real3) -> Complex {
        let i = Complex::new(0.0, 1.0);
        (self.sigma * tau - i * self.kappa.dot_real(x)).exp()
    }

    /// Field value amp·exp(στ − i(κ,x)).
    pub fn eval(&self, tau: f64, x: Real3) -> Biquaternion {
        self.amp.scale(self.phase(tau, x))
    }

    fn with_amp(&self, amp: Biquaternion) -> PlaneWaveField {
        PlaneWaveField {
            amp,
            sigma: self.sigma,
            kappa: self.kappa,
        }
    }

    /// ∇± applied exactly: amp ↦ σ·amp ± κ∘amp.
    pub fn apply_bigrad(&self, sign: Sign) -> PlaneWaveField {
        let k = Biquaternion::vector(self.kappa);
        let amp = self.amp.scale(self.sigma)
            + k.mul(&self.amp).scale(Complex::new(sign.factor(), 0.0));
        self.with_amp(amp)
    }

    /// D_F^+ = ∇⁺ + F (sign = +) or D_F^- = ∇⁻ − F (sign = −), exactly:
    /// amp ↦ σ·amp ± (κ + F)∘amp.
    pub fn apply_df(&self, f: &StructuralCoefficient, sign: Sign) -> PlaneWaveField {
        let kf = Biquaternion::vector(self.kappa + f.vector);
        let amp = self.amp.scale(self.sigma)
            + kf.mul(&self.amp).scale(Complex::new(sign.factor(), 0.0));
        self.with_amp(amp)
    }

    /// Multiplier of the scalar operator □ + (F,F) + 2i(F,∇) on this wave:
    /// σ² + (κ+F, κ+F). Zero characterizes the homogeneous-solution surface.
    pub fn scalar_multiplier(&self, f: &StructuralCoefficient) -> Complex {
        let kf = self.kappa + f.vector;
        self.sigma * self.sigma + kf.dot(&kf)
    }

    /// ∇_ω^± + F on a spatial field (σ = 0): amp ↦ ω·amp ± (−iκ)∘amp + F∘amp.
    pub fn apply_harmonic(
        &self,
        f: &StructuralCoefficient,
        omega: f64,
        sign: Sign,
    ) -> Result<PlaneWaveField, CalculusError> {
        if self.sigma.norm() != 0.0 {
            return Err(CalculusError::NonZeroSigma(self.sigma));
        }
        let i = Complex::new(0.0, 1.0);
        let grad = Biquaternion::vector(self.kappa.scale(-i));
        let amp = self.amp.scale(Complex::new(omega, 0.0))
            + grad.mul(&self.amp).scale(Complex::new(sign.factor(), 0.0))
            + f.bq().mul(&self.amp);
        Ok(self.with_amp(amp))
    }

    /// Adjoint variant ∇_ω^± − F: amp ↦ ω·amp ± (−iκ)∘amp − F∘amp.
    pub fn apply_harmonic_adjoint(
        &self,
        f: &StructuralCoefficient,
        omega: f64,
        sign: Sign,
    ) -> Result<PlaneWaveField, CalculusError> {
        if self.sigma.norm() != 0.0 {
            return Err(CalculusError::NonZeroSigma(self.sigma));
        }
        let i = Complex::new(0.0, 1.0);
        let grad = Biquaternion::vector(self.kappa.scale(-i));
        let amp = self.amp.scale(Complex::new(omega, 0.0))
            + grad.mul(&self.amp).scale(Complex::new(sign.factor(), 0.0))
            - f.bq().mul(&self.amp);
        Ok(self.with_amp(amp))
    }

    /// Multiplier of Δ ± 2(F,∇) + ω² + (F,F): −(κ,κ) ± 2(F,−iκ) + ω² + (F,F).
    pub fn harmonic_scalar_multiplier(
        &self,
        f: &StructuralCoefficient,
        omega: f64,
        sign: Sign,
    ) -> Complex {
        let i = Complex::new(0.0, 1.0);
        let minus_i_kappa = self.kappa.scale(-i);
        -self.kappa.dot(&self.kappa)
            + f.vector.dot(&minus_i_kappa) * 2.0 * sign.factor()
            + omega * omega
            + f.vector.dot(&f.vector)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    const I: Complex = Complex::new(0.0, 1.0);

    #[test]
    fn eval_examples() {
        let unit = PlaneWaveField::new(Biquaternion::ONE, c(0.0, 0.0), CVec3::ZERO);
        assert_eq!(unit.eval(3.7, [1.0, -2.0, 0.5]), Biquaternion::ONE);

        let osc = PlaneWaveField::new(Biquaternion::ONE, I, CVec3::ZERO);
        let v = osc.eval(std::f64::consts::PI, [0.0; 3]);
        assert!((v.s - c(-1.0, 0.0)).norm() < 1e-14);

        // Damped along z: κ = (0,0,-i) at x = (0,0,1) gives e^{-1}.
        let damped = PlaneWaveField::new(
            Biquaternion::ONE,
            c(0.0, 0.0),
            CVec3::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)),
        );
        let v = damped.eval(0.0, [0.0, 0.0, 1.0]);
        assert!((v.s - c((-1.0_f64).exp(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn bigrad_scalar_amplitude() {
        let f = PlaneWaveField::new(
            Biquaternion::ONE,
            c(0.0, -1.0),
            CVec3::from_real([1.0, 0.0, 0.0]),
        );
        let g = f.apply_bigrad(Sign::Plus);
        assert!((g.amp.s - c(0.0, -1.0)).norm() < 1e-15);
        assert!((g.amp.v.x - c(1.0, 0.0)).norm() < 1e-15);

        // κ = 0: pure time derivative.
        let f0 = PlaneWaveField::new(
            Biquaternion::new(c(0.5, 0.0), CVec3::from_real([0.0, 1.0, 0.0])),
            c(0.2, 0.7),
            CVec3::ZERO,
        );
        let g0 = f0.apply_bigrad(Sign::Minus);
        assert!((g0.amp - f0.amp.scale(f0.sigma)).norm() < 1e-15);
    }

    #[test]
    fn df_reduces_to_bigrad_at_zero_f() {
        let f = PlaneWaveField::new(
            Biquaternion::new(c(1.0, 0.5), CVec3::from_real([0.3, -0.2, 0.9])),
            c(0.1, -0.4),
            CVec3::from_real([0.5, 1.5, -0.7]),
        );
        let a = f.apply_df(&StructuralCoefficient::ZERO, Sign::Plus);
        let b = f.apply_bigrad(Sign::Plus);
        assert!((a.amp - b.amp).norm() < 1e-15);
    }

    #[test]
    fn xi_twistor_annihilation_and_dispersion() {
        // Ψ_ξ^+ for ξ=(2,0,0), E=0, H=(0,0,1) (F = (0,0,-i)), sign=+ → 0.
        let f = StructuralCoefficient::from_wave_fields([0.0; 3], [0.0, 0.0, 1.0]);
        let s = 1.0 / (2.0 * 2.0_f64.sqrt());
        let amp = Biquaternion::new(
            I * 3.0_f64.sqrt() * s,
            CVec3::new(c(-2.0 * s, 0.0), c(0.0, 0.0), I * s),
        );
        let psi = PlaneWaveField::new(amp, I * 3.0_f64.sqrt(), CVec3::from_real([2.0, 0.0, 0.0]));
        let res = psi.apply_df(&f, Sign::Plus);
        assert!(res.amp.norm() <= 1e-15);

        // Scalar phase: D⁻ then D⁺ kills it (on-shell dispersion).
        let scalar = PlaneWaveField::new(Biquaternion::ONE, psi.sigma, psi.kappa);
        let twice = scalar.apply_df(&f, Sign::Minus).apply_df(&f, Sign::Plus);
        assert!(twice.amp.norm() <= 1e-14);
        assert!(scalar.scalar_multiplier(&f).norm() <= 1e-15);
    }

    #[test]
    fn scalar_multiplier_arithmetic() {
        let f = PlaneWaveField::new(
            Biquaternion::ONE,
            c(0.0, -1.0),
            CVec3::from_real([2.0, 0.0, 0.0]),
        );
        let m = f.scalar_multiplier(&StructuralCoefficient::ZERO);
        assert!((m - c(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn harmonic_rejects_time_dependence() {
        let f = PlaneWaveField::new(Biquaternion::ONE, c(0.0, 1.0), CVec3::ZERO);
        let err = f
            .apply_harmonic(&StructuralCoefficient::ZERO, 1.0, Sign::Plus)
            .unwrap_err();
        assert_eq!(err, CalculusError::NonZeroSigma(c(0.0, 1.0)));
    }

    #[test]
    fn harmonic_multiplies_by_omega_when_constant() {
        let f = PlaneWaveField::new(Biquaternion::ONE, c(0.0, 0.0), CVec3::ZERO);
        let g = f
            .apply_harmonic(&StructuralCoefficient::ZERO, 2.5, Sign::Plus)
            .unwrap();
        assert!((g.amp.s - c(2.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn omega_twistor_annihilation() {
        // Ψ_+^ω for ω=1, E=(0,0,2), H=0: κ=(√5,0,0), amp = (1-(0,0,2)+i(√5,0,0))/√10.
        let f = StructuralCoefficient::from_harmonic_fields([0.0, 0.0, 2.0], [0.0; 3]);
        let r5 = 5.0_f64.sqrt();
        let s = 1.0 / 10.0_f64.sqrt();
        let amp = Biquaternion::new(
            c(s, 0.0),
            CVec3::new(I * r5 * s, c(0.0, 0.0), c(-2.0 * s, 0.0)),
        );
        let psi = PlaneWaveField::new(amp, c(0.0, 0.0), CVec3::from_real([r5, 0.0, 0.0]));
        let res = psi.apply_harmonic(&f, 1.0, Sign::Plus).unwrap();
        assert!(res.amp.norm() <= 1e-15);
    }

    #[test]
    fn harmonic_factorization_on_surface() {
        // Applying (∇_ω^- - F) then (∇_ω^+ + F) multiplies by the scalar
        // Helmholtz multiplier, which vanishes on S^ω.
        let f = StructuralCoefficient::from_harmonic_fields([0.0, 0.0, 2.0], [0.0; 3]);
        let r5 = 5.0_f64.sqrt();
        let psi = PlaneWaveField::new(Biquaternion::ONE, c(0.0, 0.0), CVec3::from_real([r5, 0.0, 0.0]));
        let m = psi.harmonic_scalar_multiplier(&f, 1.0, Sign::Plus);
        assert!(m.norm() <= 1e-14);
        let twice = psi
            .apply_harmonic_adjoint(&f, 1.0, Sign::Minus)
            .unwrap()
            .apply_harmonic(&f, 1.0, Sign::Plus)
            .unwrap();
        assert!(twice.amp.norm() <= 1e-14);
    }

    fn random_bq(rng: &mut impl Rng) -> Biquaternion {
        let mut c = || Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        Biquaternion::new(c(), CVec3::new(c(), c(), c()))
    }

    #[test]
    fn factorization_identity_random() {
        // D⁺D⁻ = D⁻D⁺ = σ² + (κ+F, κ+F) on 100 random waves.
        let mut rng = ChaCha8Rng::seed_from_u64(0x1f2e);
        for _ in 0..100 {
            let amp = random_bq(&mut rng);
            let sigma = Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let mut cc = || Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let kappa = CVec3::new(cc(), cc(), cc());
            let f = StructuralCoefficient::new(CVec3::new(cc(), cc(), cc()));
            let wave = PlaneWaveField::new(amp, sigma, kappa);

            let m = wave.scalar_multiplier(&f);
            let expected = amp.scale(m);
            let pm = wave.apply_df(&f, Sign::Minus).apply_df(&f, Sign::Plus);
            let mp = wave.apply_df(&f, Sign::Plus).apply_df(&f, Sign::Minus);
            let scale = expected.norm().max(amp.norm()).max(1e-30);
            assert!((pm.amp - expected).norm() <= 1e-12 * scale);
            assert!((mp.amp - expected).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn harmonic_factorization_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9a3b);
        for _ in 0..100 {
            let amp = random_bq(&mut rng);
            let mut cc = || Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let kappa = CVec3::new(cc(), cc(), cc());
            let f = StructuralCoefficient::new(CVec3::new(cc(), cc(), cc()));
            let omega = rng.gen_range(-3.0..3.0);
            let wave = PlaneWaveField::new(amp, Complex::new(0.0, 0.0), kappa);

            for sign in [Sign::Plus, Sign::Minus] {
                let m = wave.harmonic_scalar_multiplier(&f, omega, sign);
                let expected = amp.scale(m);
                // (∇_ω^± ± F)(∇_ω^∓ ∓ F): for the upper sign the inner factor is
                // the adjoint with flipped gradient sign.
                let composed = match sign {
                    Sign::Plus => wave
                        .apply_harmonic_adjoint(&f, omega, Sign::Minus)
                        .unwrap()
                        .apply_harmonic(&f, omega, Sign::Plus)
                        .unwrap(),
                    Sign::Minus => wave
                        .apply_harmonic_adjoint(&f, omega, Sign::Plus)
                        .unwrap()
                        .apply_harmonic(&f, omega, Sign::Minus)
                        .unwrap(),
                };
                let scale = expected.norm().max(amp.norm()).max(1e-30);
                assert!((composed.amp - expected).norm() <= 1e-12 * scale);
            }
        }
    }
}
