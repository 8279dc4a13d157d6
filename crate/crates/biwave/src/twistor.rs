//! Constructors for the elementary twistor families (propagating, evanescent,
//! purely time-growing, harmonic and static), spectral-surface samplers, and
//! quadrature superposition of elementary solutions into twistor fields.

use thiserror::Error;

use crate::algebra::{
    add3, any_unit_orthogonal, cross3, dot3, norm3, scale3, sub3, Biquaternion, CVec3, Complex,
    Real3, StructuralCoefficient,
};
use crate::planewave::{PlaneWaveField, Sign};

/// Relative tolerance for the orthogonality preconditions.
const ORTHO_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum TwistorError {
    #[error("spectral parameter violates the surface condition (residual {0})")]
    NotOnSurface(f64),
    #[error("‖ξ−E‖ ≤ ‖H‖: parameter lies in the evanescent regime")]
    EvanescentRegime,
    #[error("‖ξ−E‖ > ‖H‖: parameter lies in the propagating regime")]
    PropagatingRegime,
    #[error("ξ = E: degenerate spectral parameter")]
    DegenerateXi,
    #[error("H = 0: the time-growing family needs a nonzero imaginary part of F")]
    ZeroH,
    #[error("E = 0: the static family needs a nonzero real part of F")]
    ZeroE,
    #[error("direction vector is not orthogonal to E (residual {0})")]
    NotOrthogonal(f64),
    #[error("degenerate spectral surface (ω = 0 and E = 0)")]
    DegenerateSurface,
    #[error("bad surface sampler parameters: {0}")]
    BadParams(String),
}

fn imag_unit() -> Complex {
    Complex::new(0.0, 1.0)
}

fn check_orthogonal(a: Real3, b: Real3) -> Result<(), f64> {
    let res = dot3(a, b).abs();
    if res <= ORTHO_TOL * (norm3(a) * norm3(b)).max(1.0) {
        Ok(())
    } else {
        Err(res)
    }
}

/// Kinematic characteristics of a propagating twistor wave: phase speed,
/// wavelength, frequency, period, and the angle γ between ξ−E and H.
#[derive(Clone, Copy, Debug)]
pub struct TwistorKinematics {
    pub phase_speed: f64,
    pub wavelength: f64,
    pub frequency: f64,
    pub period: f64,
    pub gamma_angle: f64,
}

impl TwistorKinematics {
    /// Kinematics of the propagating family at spectral parameter ξ. Does not
    /// require orthogonality: γ is reported as-is in [0, π].
    pub fn for_xi(xi: Real3, f: &StructuralCoefficient) -> Result<Self, TwistorError> {
        let e = f.wave_e();
        let h = f.wave_h();
        let d = sub3(xi, e);
        let l = norm3(d);
        if l == 0.0 {
            return Err(TwistorError::DegenerateXi);
        }
        let hn = norm3(h);
        if l <= hn {
            return Err(TwistorError::EvanescentRegime);
        }
        let k = norm3(xi);
        if k == 0.0 {
            return Err(TwistorError::BadParams("ξ = 0 has no wavelength".into()));
        }
        let freq = (l * l - hn * hn).sqrt();
        let gamma = if hn == 0.0 {
            std::f64::consts::FRAC_PI_2
        } else {
            (dot3(d, h) / (l * hn)).clamp(-1.0, 1.0).acos()
        };
        Ok(TwistorKinematics {
            phase_speed: freq / k,
            wavelength: 2.0 * std::f64::consts::PI / k,
            frequency: freq,
            period: 2.0 * std::f64::consts::PI / freq,
            gamma_angle: gamma,
        })
    }
}

/// Closed-form amplitude of the propagating family,
/// [±i√(‖ξ−E‖²−‖H‖²) − (ξ−E) + iH]/(√2 ‖ξ−E‖), without the orthogonality
/// precondition (the general-angle energy-momentum formulas use it).
pub fn xi_amplitude(xi: Real3, f: &StructuralCoefficient, branch: Sign) -> Biquaternion {
    let e = f.wave_e();
    let h = f.wave_h();
    let d = sub3(xi, e);
    let l = norm3(d);
    let freq = (l * l - dot3(h, h)).sqrt();
    let denom = 2.0_f64.sqrt() * l;
    let s = imag_unit() * (branch.factor() * freq / denom);
    let v = CVec3::from_real(scale3(d, -1.0 / denom)) + CVec3::from_imag(scale3(h, 1.0 / denom));
    Biquaternion::new(s, v)
}

/// Propagating elementary twistor: σ = ±i√(‖ξ−E‖²−‖H‖²), κ = ξ, with the
/// unit-norm amplitude of `xi_amplitude`. Nonstationary decoding E = −Re F,
/// H = −Im F.
pub fn xi_twistor(
    xi: Real3,
    f: &StructuralCoefficient,
    branch: Sign,
) -> Result<PlaneWaveField, TwistorError> {
    let e = f.wave_e();
    let h = f.wave_h();
    let d = sub3(xi, e);
    let l = norm3(d);
    if l == 0.0 {
        return Err(TwistorError::DegenerateXi);
    }
    check_orthogonal(d, h).map_err(TwistorError::NotOnSurface)?;
    let hn = norm3(h);
    if l <= hn {
        return Err(TwistorError::EvanescentRegime);
    }
    let freq = (l * l - hn * hn).sqrt();
    let sigma = imag_unit() * (branch.factor() * freq);
    Ok(PlaneWaveField::new(
        xi_amplitude(xi, f, branch),
        sigma,
        CVec3::from_real(xi),
    ))
}

/// Evanescent elementary twistor: σ = ±√(‖H‖²−‖ξ−E‖²) real, κ = ξ,
/// amp = [±√(‖H‖²−‖ξ−E‖²) − (ξ−E) + iH]/(√2‖ξ−E‖). At ‖ξ−E‖ = ‖H‖ both
/// branches coincide (σ = 0).
pub fn evanescent_twistor(
    xi: Real3,
    f: &StructuralCoefficient,
    branch: Sign,
) -> Result<PlaneWaveField, TwistorError> {
    let e = f.wave_e();
    let h = f.wave_h();
    let d = sub3(xi, e);
    let l = norm3(d);
    if l == 0.0 {
        return Err(TwistorError::DegenerateXi);
    }
    check_orthogonal(d, h).map_err(TwistorError::NotOnSurface)?;
    let hn = norm3(h);
    if l > hn {
        return Err(TwistorError::PropagatingRegime);
    }
    let rate = (hn * hn - l * l).sqrt();
    let sigma = Complex::new(branch.factor() * rate, 0.0);
    let denom = 2.0_f64.sqrt() * l;
    let amp = Biquaternion::new(
        sigma / denom,
        CVec3::from_real(scale3(d, -1.0 / denom)) + CVec3::from_imag(scale3(h, 1.0 / denom)),
    );
    Ok(PlaneWaveField::new(amp, sigma, CVec3::from_real(xi)))
}

/// Purely time-growing/decaying elementary twistor at the degenerate spectral
/// point ξ = E: σ = ∓‖H‖, κ = E, amp = (∓1 + i e_H)/√2.
pub fn h_twistor(f: &StructuralCoefficient, branch: Sign) -> Result<PlaneWaveField, TwistorError> {
    let h = f.wave_h();
    let hn = norm3(h);
    if hn == 0.0 {
        return Err(TwistorError::ZeroH);
    }
    let upper = -branch.factor(); // ∓ reads minus on the upper branch
    let sigma = Complex::new(upper * hn, 0.0);
    let s = 1.0 / 2.0_f64.sqrt();
    let amp = Biquaternion::new(
        Complex::new(upper * s, 0.0),
        CVec3::from_imag(scale3(h, s / hn)),
    );
    Ok(PlaneWaveField::new(amp, sigma, CVec3::from_real(f.wave_e())))
}

/// Harmonic elementary twistor of frequency ω along the unit direction e ⊥ E:
/// σ = 0, κ = H ± e√(ω²+‖E‖²), amp = [ω − E ± i e√(ω²+‖E‖²)]/(√2√(ω²+‖E‖²)).
/// Harmonic decoding E = Re F, H = Im F; annihilated by ∇_ω^+ + F.
pub fn omega_twistor(
    omega: f64,
    f: &StructuralCoefficient,
    e_dir: Real3,
    branch: Sign,
) -> Result<PlaneWaveField, TwistorError> {
    let e = f.harmonic_e();
    let h = f.harmonic_h();
    let r2 = omega * omega + dot3(e, e);
    if r2 == 0.0 {
        return Err(TwistorError::DegenerateSurface);
    }
    if (norm3(e_dir) - 1.0).abs() > 1e-10 {
        return Err(TwistorError::BadParams(format!(
            "direction must be a unit vector (‖e‖ = {})",
            norm3(e_dir)
        )));
    }
    check_orthogonal(e_dir, e).map_err(TwistorError::NotOrthogonal)?;
    let r = r2.sqrt();
    let dir = scale3(e_dir, branch.factor());
    let kappa = CVec3::from_real(add3(h, scale3(dir, r)));
    let denom = 2.0_f64.sqrt() * r;
    let amp = Biquaternion::new(
        Complex::new(omega / denom, 0.0),
        CVec3::from_real(scale3(e, -1.0 / denom)) + CVec3::from_imag(scale3(dir, r / denom)),
    );
    Ok(PlaneWaveField::new(amp, Complex::new(0.0, 0.0), kappa))
}

/// Static elementary twistor along the unit direction e ⊥ E: σ = 0,
/// κ = H − ‖E‖e, amp = (−E − i‖E‖e)/(√2‖E‖). Annihilated by ∇_0^+ + F for
/// every H.
pub fn static_twistor(
    f: &StructuralCoefficient,
    e_dir: Real3,
) -> Result<PlaneWaveField, TwistorError> {
    let e = f.harmonic_e();
    let h = f.harmonic_h();
    let en = norm3(e);
    if en == 0.0 {
        return Err(TwistorError::ZeroE);
    }
    if (norm3(e_dir) - 1.0).abs() > 1e-10 {
        return Err(TwistorError::BadParams(format!(
            "direction must be a unit vector (‖e‖ = {})",
            norm3(e_dir)
        )));
    }
    check_orthogonal(e_dir, e).map_err(TwistorError::NotOrthogonal)?;
    let kappa = CVec3::from_real(sub3(h, scale3(e_dir, en)));
    let denom = 2.0_f64.sqrt() * en;
    let amp = Biquaternion::vector(
        CVec3::from_real(scale3(e, -1.0 / denom)) + CVec3::from_imag(scale3(e_dir, -en / denom)),
    );
    Ok(PlaneWaveField::new(amp, Complex::new(0.0, 0.0), kappa))
}

/// Which spectral surface a sample discretizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Truncated annulus {ξ: (ξ−E)⊥H, ‖H‖ ≤ ‖ξ−E‖ ≤ R} (nonstationary
    /// decoding).
    SCap,
    /// Circle ‖ξ−H‖ = √(ω²+‖E‖²) in the plane (E, ξ−H) = 0 (harmonic
    /// decoding).
    SOmegaCircle,
    /// Sphere ‖ξ−H‖ = |ω| (harmonic decoding, E = 0 case).
    SOmegaSphere,
    /// Circle ‖ξ−H‖ = ‖E‖ in the plane (E, ξ−H) = 0 (static).
    SStaticCircle,
    /// The single point ξ = H (static scalar potential, E = 0 case).
    SStaticPoint,
}

/// Node counts and truncation radius for the surface samplers.
#[derive(Clone, Copy, Debug)]
pub struct SurfaceGrid {
    pub n_radial: usize,
    pub n_angular: usize,
    /// Outer radius of the SCap annulus; ≤ 0 selects 4·max(‖H‖, 1).
    pub r_trunc: f64,
}

impl Default for SurfaceGrid {
    fn default() -> Self {
        SurfaceGrid {
            n_radial: 32,
            n_angular: 64,
            r_trunc: 0.0,
        }
    }
}

/// Quadrature discretization of a spectral surface: nodes with weights, plus
/// the parameters needed to rebuild the elementary solution at each node.
#[derive(Clone, Debug)]
pub struct SpectralSurfaceSample {
    pub kind: SurfaceKind,
    pub nodes: Vec<Real3>,
    pub weights: Vec<f64>,
    pub f: StructuralCoefficient,
    pub omega: f64,
    pub grid: SurfaceGrid,
}

impl SpectralSurfaceSample {
    /// Residual of the node against its surface's defining equations
    /// (max over the equations).
    pub fn membership_residual(&self, node: Real3) -> f64 {
        match self.kind {
            SurfaceKind::SCap => {
                let e = self.f.wave_e();
                let h = self.f.wave_h();
                let d = sub3(node, e);
                let l = norm3(d);
                let ortho = dot3(d, h).abs();
                let radial = (norm3(h) - l).max(l - self.outer_radius());
                ortho.max(radial.max(0.0))
            }
            SurfaceKind::SOmegaCircle => {
                let e = self.f.harmonic_e();
                let h = self.f.harmonic_h();
                let d = sub3(node, h);
                let r = (self.omega * self.omega + dot3(e, e)).sqrt();
                (norm3(d) - r).abs().max(dot3(d, e).abs())
            }
            SurfaceKind::SOmegaSphere => {
                let h = self.f.harmonic_h();
                (norm3(sub3(node, h)) - self.omega.abs()).abs()
            }
            SurfaceKind::SStaticCircle => {
                let e = self.f.harmonic_e();
                let h = self.f.harmonic_h();
                let d = sub3(node, h);
                (norm3(d) - norm3(e)).abs().max(dot3(d, e).abs())
            }
            SurfaceKind::SStaticPoint => norm3(sub3(node, self.f.harmonic_h())),
        }
    }

    fn outer_radius(&self) -> f64 {
        if self.grid.r_trunc > 0.0 {
            self.grid.r_trunc
        } else {
            4.0 * norm3(self.f.wave_h()).max(1.0)
        }
    }
}

/// Discretize a spectral surface. Circle kinds use uniform angular nodes with
/// arc-length weights; the annulus uses a midpoint radial grid (keeping all
/// nodes strictly inside the propagating regime) with area weights r·Δr·Δθ;
/// the sphere uses Gauss-Legendre in the polar cosine times a uniform azimuth
/// grid with weights summing to 4πr².
pub fn sample_spectral_surface(
    kind: SurfaceKind,
    f: &StructuralCoefficient,
    omega: f64,
    grid: SurfaceGrid,
) -> Result<SpectralSurfaceSample, TwistorError> {
    if grid.n_angular == 0 || grid.n_radial == 0 {
        return Err(TwistorError::BadParams("node counts must be positive".into()));
    }
    let mut sample = SpectralSurfaceSample {
        kind,
        nodes: Vec::new(),
        weights: Vec::new(),
        f: *f,
        omega,
        grid,
    };
    let two_pi = 2.0 * std::f64::consts::PI;
    match kind {
        SurfaceKind::SCap => {
            let e = f.wave_e();
            let h = f.wave_h();
            let hn = norm3(h);
            if hn == 0.0 {
                return Err(TwistorError::BadParams("annulus needs H ≠ 0".into()));
            }
            let r_out = sample.outer_radius();
            if r_out <= hn {
                return Err(TwistorError::BadParams(format!(
                    "truncation radius {r_out} must exceed ‖H‖ = {hn}"
                )));
            }
            let u1 = any_unit_orthogonal(h);
            let u2 = scale3(cross3(h, u1), 1.0 / hn);
            let dr = (r_out - hn) / grid.n_radial as f64;
            let dth = two_pi / grid.n_angular as f64;
            for j in 0..grid.n_radial {
                let r = hn + (j as f64 + 0.5) * dr;
                for k in 0..grid.n_angular {
                    let th = dth * k as f64;
                    let dir = add3(scale3(u1, th.cos()), scale3(u2, th.sin()));
                    sample.nodes.push(add3(e, scale3(dir, r)));
                    sample.weights.push(r * dr * dth);
                }
            }
        }
        SurfaceKind::SOmegaCircle | SurfaceKind::SStaticCircle => {
            let e = f.harmonic_e();
            let h = f.harmonic_h();
            let r = match kind {
                SurfaceKind::SOmegaCircle => (omega * omega + dot3(e, e)).sqrt(),
                _ => norm3(e),
            };
            if r == 0.0 {
                return Err(TwistorError::BadParams("circle radius is zero".into()));
            }
            let axis = if norm3(e) > 0.0 { e } else { [0.0, 0.0, 1.0] };
            let u1 = any_unit_orthogonal(axis);
            let u2 = scale3(cross3(axis, u1), 1.0 / norm3(axis));
            let dth = two_pi / grid.n_angular as f64;
            for k in 0..grid.n_angular {
                let th = dth * k as f64;
                let dir = add3(scale3(u1, th.cos()), scale3(u2, th.sin()));
                sample.nodes.push(add3(h, scale3(dir, r)));
                sample.weights.push(r * dth);
            }
        }
        SurfaceKind::SOmegaSphere => {
            let h = f.harmonic_h();
            let r = omega.abs();
            if r == 0.0 {
                return Err(TwistorError::BadParams("sphere radius is zero".into()));
            }
            let (ct, wt) = crate::green::gauss_legendre(grid.n_radial);
            let dphi = two_pi / grid.n_angular as f64;
            for (i, &c) in ct.iter().enumerate() {
                let s = (1.0 - c * c).max(0.0).sqrt();
                for k in 0..grid.n_angular {
                    let phi = dphi * k as f64;
                    let dir = [s * phi.cos(), s * phi.sin(), c];
                    sample.nodes.push(add3(h, scale3(dir, r)));
                    sample.weights.push(wt[i] * dphi * r * r);
                }
            }
        }
        SurfaceKind::SStaticPoint => {
            sample.nodes.push(f.harmonic_h());
            sample.weights.push(1.0);
        }
    }
    Ok(sample)
}

/// Spectral density φ(ξ) weighting the surface nodes.
pub enum SpectralDensity {
    Uniform(Complex),
    /// scale · exp(−‖ξ − center‖²/(2 width²)).
    Gaussian {
        center: Real3,
        width: f64,
        scale: Complex,
    },
    Custom(Box<dyn Fn(Real3) -> Complex + Sync>),
}

impl SpectralDensity {
    pub fn eval(&self, node: Real3) -> Complex {
        match self {
            SpectralDensity::Uniform(c) => *c,
            SpectralDensity::Gaussian {
                center,
                width,
                scale,
            } => {
                let d = sub3(node, *center);
                *scale * (-dot3(d, d) / (2.0 * width * width)).exp()
            }
            SpectralDensity::Custom(f) => f(node),
        }
    }
}

/// Discrete convolution factor: point masses with biquaternion weights at
/// space-time shifts.
#[derive(Clone, Debug, Default)]
pub struct PointSourceSet {
    pub sources: Vec<(Biquaternion, f64, Real3)>,
}

/// A solution field (τ, x) ↦ Biquaternion built from elementary plane waves.
pub enum FieldEvaluator {
    /// Fixed-order weighted sum of elementary plane waves.
    Superposition(Vec<(Complex, PlaneWaveField)>),
    /// Weighted sum of space-time translates of a base field, with the
    /// biquaternion weights applied as right factors.
    Translated {
        base: Box<FieldEvaluator>,
        sources: PointSourceSet,
    },
}

impl FieldEvaluator {
    pub fn eval(&self, tau: f64, x: Real3) -> Biquaternion {
        match self {
            FieldEvaluator::Superposition(terms) => {
                let mut acc = Biquaternion::ZERO;
                for (w, pw) in terms {
                    acc = acc + pw.eval(tau, x).scale(*w);
                }
                acc
            }
            FieldEvaluator::Translated { base, sources } => {
                let mut acc = Biquaternion::ZERO;
                for (w, t0, x0) in &sources.sources {
                    acc = acc + base.eval(tau - t0, sub3(x, *x0)).mul(w);
                }
                acc
            }
        }
    }
}

/// The elementary solution attached to one node of a surface sample.
pub fn node_twistor(
    sample: &SpectralSurfaceSample,
    node: Real3,
    branch: Sign,
) -> Result<PlaneWaveField, TwistorError> {
    match sample.kind {
        SurfaceKind::SCap => xi_twistor(node, &sample.f, branch),
        SurfaceKind::SOmegaCircle | SurfaceKind::SOmegaSphere => {
            let h = sample.f.harmonic_h();
            let d = sub3(node, h);
            let e_dir = scale3(d, 1.0 / norm3(d));
            // The node is the wave vector of the upper branch; the branch
            // argument then reflects the direction.
            omega_twistor(sample.omega, &sample.f, e_dir, branch)
        }
        SurfaceKind::SStaticCircle => {
            let e = sample.f.harmonic_e();
            let h = sample.f.harmonic_h();
            // κ = H − ‖E‖e, so the node decodes as e = −(ξ−H)/‖E‖.
            let e_dir = scale3(sub3(node, h), -1.0 / norm3(e));
            static_twistor(&sample.f, e_dir)
        }
        SurfaceKind::SStaticPoint => Ok(PlaneWaveField::new(
            Biquaternion::ONE,
            Complex::new(0.0, 0.0),
            CVec3::from_real(node),
        )),
    }
}

/// Quadrature superposition Σ_j w_j φ(ξ_j) Ψ_{ξ_j} over a surface sample.
pub fn superpose(
    sample: &SpectralSurfaceSample,
    density: &SpectralDensity,
    branch: Sign,
) -> Result<FieldEvaluator, TwistorError> {
    let mut terms = Vec::with_capacity(sample.nodes.len());
    for (node, w) in sample.nodes.iter().zip(&sample.weights) {
        let pw = node_twistor(sample, *node, branch)?;
        terms.push((density.eval(*node) * w, pw));
    }
    Ok(FieldEvaluator::Superposition(terms))
}

/// Convolution with a discrete point-mass factor: the translated superposition
/// (τ, x) ↦ Σ_k base(τ−τ_k, x−x_k) ∘ w_k.
pub fn translate_superpose(base: FieldEvaluator, sources: PointSourceSet) -> FieldEvaluator {
    FieldEvaluator::Translated {
        base: Box::new(base),
        sources,
    }
}
