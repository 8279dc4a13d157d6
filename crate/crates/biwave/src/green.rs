//! Fundamental solutions and convolution solvers: the time-domain
//! spherical-wave kernel applied through spherical means and retarded
//! potentials, the Helmholtz-like kernel ψ_ω with structural damping, and the
//! exact plane-wave particular solution.
//!
//! The distributional light-cone kernel is never evaluated pointwise; it only
//! appears through the spherical-mean and retarded quadratures.

use thiserror::Error;

use crate::algebra::{sub3, Biquaternion, CVec3, Complex, Real3, StructuralCoefficient};
use crate::planewave::{PlaneWaveField, Sign};

#[derive(Debug, Error)]
pub enum GreenError {
    #[error("spherical mean requires tau > 0, got {0}")]
    NonpositiveTau(f64),
    #[error("source must declare a finite support radius")]
    UnboundedSupport,
    #[error("psi_omega kernel is singular at the origin")]
    OriginEvaluation,
    #[error("plane-wave source is on-shell (scalar multiplier {0})")]
    OnShellSource(Complex),
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Initial guess (Tricomi-style) then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence for P_n(x) and P'_n(x).
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (pm1 - x * p) / (1.0 - x * x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Product rule on the unit sphere: Gauss-Legendre in cos(colatitude) times a
/// uniform (trapezoid) azimuth grid. Weights sum to 4π.
#[derive(Clone, Copy, Debug)]
pub struct SphereRule {
    pub n_polar: usize,
    pub n_azimuth: usize,
}

impl Default for SphereRule {
    fn default() -> Self {
        SphereRule {
            n_polar: 64,
            n_azimuth: 128,
        }
    }
}

impl SphereRule {
    pub fn nodes(&self) -> Vec<(Real3, f64)> {
        let (ct, wt) = gauss_legendre(self.n_polar);
        let dphi = 2.0 * std::f64::consts::PI / self.n_azimuth as f64;
        let mut out = Vec::with_capacity(self.n_polar * self.n_azimuth);
        for (i, &c) in ct.iter().enumerate() {
            let s = (1.0 - c * c).max(0.0).sqrt();
            for j in 0..self.n_azimuth {
                let phi = dphi * j as f64;
                out.push(([s * phi.cos(), s * phi.sin(), c], wt[i] * dphi));
            }
        }
        out
    }
}

/// Scalar source q(τ, x) with a declared spatial support radius around the
/// origin. `None` marks unbounded support.
pub struct ScalarSource {
    pub func: Box<dyn Fn(f64, Real3) -> Complex + Sync>,
    pub support_radius: Option<f64>,
}

impl ScalarSource {
    pub fn new(
        func: impl Fn(f64, Real3) -> Complex + Sync + 'static,
        support_radius: f64,
    ) -> Self {
        ScalarSource {
            func: Box::new(func),
            support_radius: Some(support_radius),
        }
    }

    /// Time-independent source.
    pub fn spatial(g: impl Fn(Real3) -> Complex + Sync + 'static, support_radius: f64) -> Self {
        ScalarSource {
            func: Box::new(move |_, x| g(x)),
            support_radius: Some(support_radius),
        }
    }

    pub fn eval(&self, tau: f64, x: Real3) -> Complex {
        (self.func)(tau, x)
    }
}

/// Configuration of the time-domain solvers.
#[derive(Clone, Copy, Debug)]
pub struct GreenConfig {
    /// Kernel branch weight; 0 selects the pure retarded (causal) kernel.
    pub a: Complex,
    pub sphere: SphereRule,
    pub n_radial: usize,
    pub f: StructuralCoefficient,
}

impl GreenConfig {
    pub fn retarded(f: StructuralCoefficient) -> Self {
        GreenConfig {
            a: Complex::new(0.0, 0.0),
            sphere: SphereRule::default(),
            n_radial: 64,
            f,
        }
    }
}

/// Spherical mean of the light-cone kernel against spatial data g:
/// u(τ,x) = (1/4πτ) ∮_{‖z‖=τ} e^{i(F,z)} g(x−z) dS(z).
pub fn kirchhoff_solve(
    g: &ScalarSource,
    cfg: &GreenConfig,
    tau: f64,
    x: Real3,
) -> Result<Complex, GreenError> {
    if !(tau > 0.0) {
        return Err(GreenError::NonpositiveTau(tau));
    }
    let i = Complex::new(0.0, 1.0);
    let mut acc = Complex::new(0.0, 0.0);
    for (dir, w) in cfg.sphere.nodes() {
        let z = [dir[0] * tau, dir[1] * tau, dir[2] * tau];
        let phase = (i * cfg.f.vector.dot_real(z)).exp();
        acc += phase * g.eval(0.0, sub3(x, z)) * w;
    }
    // dS = τ² dΩ, then divide by 4πτ.
    Ok(acc * (tau / (4.0 * std::f64::consts::PI)))
}

/// Retarded potential u(τ,x) = ∫ e^{i(F,x−y)} q(τ−‖x−y‖, y)/(4π‖x−y‖) dV(y),
/// computed in spherical coordinates centered at x (integrand ∝ r).
pub fn retarded_solve(
    q: &ScalarSource,
    cfg: &GreenConfig,
    tau: f64,
    x: Real3,
) -> Result<Complex, GreenError> {
    let support = q.support_radius.ok_or(GreenError::UnboundedSupport)?;
    let i = Complex::new(0.0, 1.0);
    let r_lo = (crate::algebra::norm3(x) - support).max(0.0);
    let r_hi = crate::algebra::norm3(x) + support;
    let n = cfg.n_radial.max(1);
    let dr = (r_hi - r_lo) / n as f64;
    let sphere = cfg.sphere.nodes();
    let mut acc = Complex::new(0.0, 0.0);
    for k in 0..n {
        let r = r_lo + (k as f64 + 0.5) * dr;
        if r <= 0.0 {
            continue;
        }
        let t_ret = tau - r;
        let mut shell = Complex::new(0.0, 0.0);
        for (dir, w) in &sphere {
            let z = [dir[0] * r, dir[1] * r, dir[2] * r];
            let y = sub3(x, z);
            let phase = (i * cfg.f.vector.dot_real(z)).exp();
            shell += phase * q.eval(t_ret, y) * *w;
        }
        // dV = r² dr dΩ; kernel carries 1/(4πr), leaving an integrand ∝ r.
        acc += shell * (r * dr);
    }
    Ok(acc / (4.0 * std::f64::consts::PI))
}

/// Parameters of the harmonic kernel ψ_ω.
#[derive(Clone, Copy, Debug)]
pub struct HarmonicKernelParams {
    pub omega: f64,
    /// Branch weight: a = 1 outgoing, a = 0 incoming (default).
    pub a: Complex,
    pub f: StructuralCoefficient,
}

/// Helmholtz-like kernel with structural damping (sign-corrected):
/// ψ_ω(x) = −e^{−(F,x)}(a e^{iω‖x‖} + (1−a) e^{−iω‖x‖})/(4π‖x‖).
pub fn eval_psi_omega(x: Real3, p: &HarmonicKernelParams) -> Result<Complex, GreenError> {
    let r = crate::algebra::norm3(x);
    if r == 0.0 {
        return Err(GreenError::OriginEvaluation);
    }
    let i = Complex::new(0.0, 1.0);
    let damp = (-p.f.vector.dot_real(x)).exp();
    let osc = p.a * (i * p.omega * r).exp() + (Complex::new(1.0, 0.0) - p.a) * (-i * p.omega * r).exp();
    Ok(-damp * osc / (4.0 * std::f64::consts::PI * r))
}

/// The kernel exactly as printed (no leading minus); kept as the documented
/// failing variant of the normalization check.
pub fn eval_psi_omega_printed(x: Real3, p: &HarmonicKernelParams) -> Result<Complex, GreenError> {
    eval_psi_omega(x, p).map(|v| -v)
}

/// Volume potential (ψ_ω ∗ G)(y) by spherical quadrature centered at y.
pub fn psi_omega_volume_potential(
    g: &ScalarSource,
    p: &HarmonicKernelParams,
    sphere: &SphereRule,
    n_radial: usize,
    y: Real3,
) -> Result<Complex, GreenError> {
    let support = g.support_radius.ok_or(GreenError::UnboundedSupport)?;
    let i = Complex::new(0.0, 1.0);
    let r_lo = (crate::algebra::norm3(y) - support).max(0.0);
    let r_hi = crate::algebra::norm3(y) + support;
    let dr = (r_hi - r_lo) / n_radial as f64;
    let nodes = sphere.nodes();
    let mut acc = Complex::new(0.0, 0.0);
    for k in 0..n_radial {
        let r = r_lo + (k as f64 + 0.5) * dr;
        if r <= 0.0 {
            continue;
        }
        let osc = p.a * (i * p.omega * r).exp()
            + (Complex::new(1.0, 0.0) - p.a) * (-i * p.omega * r).exp();
        let mut shell = Complex::new(0.0, 0.0);
        for (dir, w) in &nodes {
            let z = [dir[0] * r, dir[1] * r, dir[2] * r];
            let damp = (-p.f.vector.dot_real(z)).exp();
            shell += damp * g.eval(0.0, sub3(y, z)) * *w;
        }
        acc += shell * osc * (r * dr);
    }
    // Kernel prefactor −1/(4πr) against dV = r² dr dΩ.
    Ok(-acc / (4.0 * std::f64::consts::PI))
}

/// Particular solution B = (∇_ω^− − F)(ψ_ω ∗ G) of (∇_ω^+ + F)B = G, with the
/// gradient of the volume potential taken by central differences.
pub fn helmholtz_solve(
    g: &ScalarSource,
    p: &HarmonicKernelParams,
    sphere: &SphereRule,
    n_radial: usize,
    x: Real3,
    h_fd: f64,
) -> Result<Biquaternion, GreenError> {
    let u = psi_omega_volume_potential(g, p, sphere, n_radial, x)?;
    let mut grad = [Complex::new(0.0, 0.0); 3];
    for axis in 0..3 {
        let mut xp = x;
        let mut xm = x;
        xp[axis] += h_fd;
        xm[axis] -= h_fd;
        let up = psi_omega_volume_potential(g, p, sphere, n_radial, xp)?;
        let um = psi_omega_volume_potential(g, p, sphere, n_radial, xm)?;
        grad[axis] = (up - um) / (2.0 * h_fd);
    }
    // (ω − ∇ − F) applied to the scalar u.
    let v = CVec3::new(
        -grad[0] - p.f.vector.x * u,
        -grad[1] - p.f.vector.y * u,
        -grad[2] - p.f.vector.z * u,
    );
    Ok(Biquaternion::new(u * p.omega, v))
}

/// Exact particular solution for a plane-wave right-hand side:
/// B = D_F^− G / m with m = σ² + (κ+F, κ+F); satisfies D_F^+ B = G.
pub fn pw_particular_solution(
    g: &PlaneWaveField,
    f: &StructuralCoefficient,
) -> Result<PlaneWaveField, GreenError> {
    let m = g.scalar_multiplier(f);
    let scale = g.sigma.norm_sqr() + (g.kappa + f.vector).dot(&(g.kappa + f.vector)).norm() + 1.0;
    if m.norm() <= 1e-12 * scale {
        return Err(GreenError::OnShellSource(m));
    }
    let num = g.apply_df(f, Sign::Minus);
    Ok(PlaneWaveField::new(
        num.amp.scale(Complex::new(1.0, 0.0) / m),
        g.sigma,
        g.kappa,
    ))
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

    #[test]
    fn gauss_legendre_exactness() {
        let (x, w) = gauss_legendre(8);
        // ∫ x^k dx over [-1,1].
        for k in [0usize, 2, 4, 6, 8, 10] {
            let q: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
            let exact = 2.0 / (k as f64 + 1.0);
            if k <= 15 {
                // degree ≤ 2n−1 = 15 exact
                assert!((q - exact).abs() < 1e-13, "k={k}: {q} vs {exact}");
            }
        }
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn sphere_rule_plane_wave_closed_form() {
        // ∮ e^{i(F,z)} dS over ‖z‖ = r equals 4πr² sin(cr)/(cr) for real F
        // and 4πr² sinh(cr)/(cr) for imaginary F.
        let rule = SphereRule::default();
        for &(fr, fi, r) in &[(1.5, 0.0, 1.0), (2.0, 0.0, 2.0), (0.0, 1.0, 1.0), (0.0, 2.0, 1.5)] {
            let f = CVec3::new(c(0.0, 0.0), c(0.0, 0.0), c(fr, fi));
            let i = c(0.0, 1.0);
            let mut acc = c(0.0, 0.0);
            for (dir, w) in rule.nodes() {
                let z = [dir[0] * r, dir[1] * r, dir[2] * r];
                acc += (i * f.dot_real(z)).exp() * w * r * r;
            }
            let area = 4.0 * std::f64::consts::PI * r * r;
            let expected = if fi == 0.0 {
                area * (fr * r).sin() / (fr * r)
            } else {
                area * (fi * r).sinh() / (fi * r)
            };
            assert!(
                (acc - c(expected, 0.0)).norm() < 1e-6 * area.max(expected.abs()),
                "F=({fr},{fi}) r={r}"
            );
        }
    }

    #[test]
    fn kirchhoff_closed_forms() {
        let ones = ScalarSource::spatial(|_| c(1.0, 0.0), f64::INFINITY);
        // F = 0, g ≡ 1 → u = τ.
        let cfg0 = GreenConfig::retarded(StructuralCoefficient::ZERO);
        for tau in [0.3, 1.0, 1.7] {
            let u = kirchhoff_solve(&ones, &cfg0, tau, [0.2, -0.1, 0.4]).unwrap();
            assert!((u - c(tau, 0.0)).norm() < 1e-8);
        }
        // F = -E real → u = sin(‖E‖τ)/‖E‖.
        let e = [0.0, 0.0, 1.5];
        let cfg_e = GreenConfig::retarded(StructuralCoefficient::from_wave_fields(e, [0.0; 3]));
        for tau in [0.1, 0.9, 2.0] {
            let u = kirchhoff_solve(&ones, &cfg_e, tau, [0.0; 3]).unwrap();
            let exact = (1.5 * tau).sin() / 1.5;
            assert!((u - c(exact, 0.0)).norm() < 1e-6, "tau={tau}");
        }
        // F = -iH → u = sinh(‖H‖τ)/‖H‖.
        let cfg_h =
            GreenConfig::retarded(StructuralCoefficient::from_wave_fields([0.0; 3], [0.0, 0.0, 1.0]));
        for tau in [0.1, 1.0, 2.0] {
            let u = kirchhoff_solve(&ones, &cfg_h, tau, [0.0; 3]).unwrap();
            let exact = tau.sinh();
            assert!((u - c(exact, 0.0)).norm() < 1e-6, "tau={tau}");
        }
    }

    #[test]
    fn kirchhoff_rejects_nonpositive_tau() {
        let ones = ScalarSource::spatial(|_| c(1.0, 0.0), 1.0);
        let cfg = GreenConfig::retarded(StructuralCoefficient::ZERO);
        assert!(matches!(
            kirchhoff_solve(&ones, &cfg, 0.0, [0.0; 3]),
            Err(GreenError::NonpositiveTau(_))
        ));
    }

    #[test]
    fn retarded_zero_source() {
        let zero = ScalarSource::new(|_, _| c(0.0, 0.0), 1.0);
        let cfg = GreenConfig::retarded(StructuralCoefficient::ZERO);
        let u = retarded_solve(&zero, &cfg, 1.0, [0.3, 0.0, 0.0]).unwrap();
        assert_eq!(u, c(0.0, 0.0));
    }

    #[test]
    fn retarded_unbounded_support_rejected() {
        let q = ScalarSource {
            func: Box::new(|_, _| c(1.0, 0.0)),
            support_radius: None,
        };
        let cfg = GreenConfig::retarded(StructuralCoefficient::ZERO);
        assert!(matches!(
            retarded_solve(&q, &cfg, 1.0, [0.0; 3]),
            Err(GreenError::UnboundedSupport)
        ));
    }

    #[test]
    fn retarded_mollified_pulse_approaches_kirchhoff() {
        // q(t,y) = η_ε(t)·1 with a narrow Gaussian η: u → sin(‖E‖τ)/‖E‖.
        let e = [0.0, 0.0, 1.5];
        let f = StructuralCoefficient::from_wave_fields(e, [0.0; 3]);
        let tau = 1.2_f64;
        let exact = (1.5 * tau).sin() / 1.5;
        let mut prev_err = f64::INFINITY;
        for eps in [0.08, 0.04] {
            let q = ScalarSource::new(
                move |t, _| {
                    let w = (-t * t / (2.0 * eps * eps)).exp()
                        / (eps * (2.0 * std::f64::consts::PI).sqrt());
                    c(w, 0.0)
                },
                // Spatially unbounded data ≡ 1, but the time pulse restricts
                // the shell radii; declare a radius covering τ plus the pulse.
                tau + 1.0,
            );
            let cfg = GreenConfig {
                n_radial: 600,
                ..GreenConfig::retarded(f)
            };
            let u = retarded_solve(&q, &cfg, tau, [0.0; 3]).unwrap();
            let err = (u - c(exact, 0.0)).norm();
            assert!(err < prev_err, "mollifier refinement must improve: {err} vs {prev_err}");
            prev_err = err;
        }
        assert!(prev_err < 5e-3, "final error {prev_err}");
    }

    #[test]
    fn psi_omega_examples() {
        // F=0, a=1: classical outgoing kernel −e^{iωr}/(4πr).
        let p = HarmonicKernelParams {
            omega: 2.0,
            a: c(1.0, 0.0),
            f: StructuralCoefficient::ZERO,
        };
        let x = [0.0, 0.0, 0.5];
        let v = eval_psi_omega(x, &p).unwrap();
        let i = c(0.0, 1.0);
        let expected = -(i * 2.0 * 0.5).exp() / (4.0 * std::f64::consts::PI * 0.5);
        assert!((v - expected).norm() < 1e-15);

        // F = iH: pure phase damping factor, |ψ_ω| = 1/(4π‖x‖).
        let p2 = HarmonicKernelParams {
            omega: 1.0,
            a: c(0.0, 0.0),
            f: StructuralCoefficient::from_harmonic_fields([0.0; 3], [0.3, -0.2, 0.9]),
        };
        let v2 = eval_psi_omega([0.4, 0.1, -0.3], &p2).unwrap();
        let r = crate::algebra::norm3([0.4, 0.1, -0.3]);
        assert!((v2.norm() - 1.0 / (4.0 * std::f64::consts::PI * r)).abs() < 1e-14);

        assert!(matches!(
            eval_psi_omega([0.0; 3], &p),
            Err(GreenError::OriginEvaluation)
        ));
    }

    #[test]
    fn psi_omega_fd_residual() {
        let f = StructuralCoefficient::from_harmonic_fields([0.3, 0.1, 0.2], [0.0, 0.4, 0.1]);
        let p = HarmonicKernelParams {
            omega: 2.2,
            a: c(0.0, 0.0),
            f,
        };
        let kernel = move |x: Real3| eval_psi_omega(x, &p).unwrap();
        let (res, scale) = crate::grid::fd_scalar_helmholtz_residual(
            &kernel,
            &f,
            2.2,
            Sign::Plus,
            [0.7, -0.4, 0.6],
            1e-3,
        );
        assert!(res / scale <= 1e-5, "relative residual {}", res / scale);
    }

    #[test]
    fn helmholtz_zero_source() {
        let zero = ScalarSource::spatial(|_| c(0.0, 0.0), 0.5);
        let p = HarmonicKernelParams {
            omega: 1.0,
            a: c(0.0, 0.0),
            f: StructuralCoefficient::ZERO,
        };
        let b = helmholtz_solve(&zero, &p, &SphereRule { n_polar: 8, n_azimuth: 16 }, 16, [0.3, 0.0, 0.0], 1e-3)
            .unwrap();
        assert!(b.norm() < 1e-14);
    }

    #[test]
    fn helmholtz_matches_classical_volume_potential_at_zero_f() {
        // With F = 0 the damped volume potential must coincide with the
        // classical Helmholtz one computed by an explicitly classical closure.
        let width = 0.15;
        let gsrc = ScalarSource::spatial(
            move |y: Real3| c((-crate::algebra::dot3(y, y) / (2.0 * width * width)).exp(), 0.0),
            0.6,
        );
        let p = HarmonicKernelParams {
            omega: 1.7,
            a: c(0.0, 0.0),
            f: StructuralCoefficient::ZERO,
        };
        let rule = SphereRule { n_polar: 16, n_azimuth: 32 };
        let x = [0.4, 0.2, -0.1];
        let u = psi_omega_volume_potential(&gsrc, &p, &rule, 48, x).unwrap();

        // Classical route: direct −e^{−iωr}/(4πr) kernel quadrature.
        let i = c(0.0, 1.0);
        let r_lo: f64 = 0.0;
        let r_hi = crate::algebra::norm3(x) + 0.6;
        let n = 48;
        let dr = (r_hi - r_lo) / n as f64;
        let mut acc = c(0.0, 0.0);
        for k in 0..n {
            let r = r_lo + (k as f64 + 0.5) * dr;
            let osc = (-i * 1.7 * r).exp();
            let mut shell = c(0.0, 0.0);
            for (dir, w) in rule.nodes() {
                let y = sub3(x, [dir[0] * r, dir[1] * r, dir[2] * r]);
                shell += gsrc.eval(0.0, y) * w;
            }
            acc += shell * osc * (r * dr);
        }
        let classical = -acc / (4.0 * std::f64::consts::PI);
        assert!((u - classical).norm() <= 1e-10 * classical.norm().max(1e-10));
    }

    #[test]
    fn helmholtz_fd_residual() {
        // (∇_ω^+ + F)B = G away from the source support boundary.
        let width = 0.12;
        let amp = 1.0;
        let gfun = move |y: Real3| {
            c(amp * (-crate::algebra::dot3(y, y) / (2.0 * width * width)).exp(), 0.0)
        };
        let gsrc = ScalarSource::spatial(gfun, 0.7);
        let f = StructuralCoefficient::from_harmonic_fields([0.2, 0.0, 0.1], [0.0, 0.1, 0.0]);
        let p = HarmonicKernelParams {
            omega: 1.4,
            a: c(0.0, 0.0),
            f,
        };
        let rule = SphereRule { n_polar: 24, n_azimuth: 48 };
        let n_radial = 96;
        let x0 = [0.15, 0.1, 0.05];
        let h = 0.02;

        // Sample B on a 5³ lattice around x0 and apply the grid operator.
        let b_field = crate::grid::GridField::sample(
            [0.0, x0[0] - 2.0 * h, x0[1] - 2.0 * h, x0[2] - 2.0 * h],
            [1.0, h, h, h],
            [1, 5, 5, 5],
            |_, x| helmholtz_solve(&gsrc, &p, &rule, n_radial, x, 1e-4).unwrap(),
        )
        .unwrap();
        let lhs = b_field.apply_harmonic(&f, 1.4, Sign::Plus).unwrap();
        let center = [0usize, 2, 2, 2];
        let got = *lhs.at(center);
        let expected = Biquaternion::scalar(gfun(x0));
        let rel = (got - expected).norm() / expected.norm();
        assert!(rel <= 5e-3, "relative residual {rel}");
    }

    #[test]
    fn pw_particular_solution_examples() {
        // Scalar source, σ=-i, κ=(2,0,0), F=0: m=3, B amp = (−i − (2,0,0))/3.
        let g = PlaneWaveField::new(
            Biquaternion::ONE,
            c(0.0, -1.0),
            CVec3::from_real([2.0, 0.0, 0.0]),
        );
        let b = pw_particular_solution(&g, &StructuralCoefficient::ZERO).unwrap();
        assert!((b.amp.s - c(0.0, -1.0 / 3.0)).norm() < 1e-15);
        assert!((b.amp.v.x - c(-2.0 / 3.0, 0.0)).norm() < 1e-15);
        // Right-inverse property.
        let back = b.apply_df(&StructuralCoefficient::ZERO, Sign::Plus);
        assert!((back.amp - g.amp).norm() < 1e-14);

        // Constant wave is on-shell for F=0.
        let constant = PlaneWaveField::new(Biquaternion::ONE, c(0.0, 0.0), CVec3::ZERO);
        assert!(matches!(
            pw_particular_solution(&constant, &StructuralCoefficient::ZERO),
            Err(GreenError::OnShellSource(_))
        ));
    }

    #[test]
    fn pw_particular_solution_random_off_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut made = 0;
        while made < 200 {
            let mut cc = || c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let amp = Biquaternion::new(cc(), CVec3::new(cc(), cc(), cc()));
            let sigma = cc();
            let kappa = CVec3::new(cc(), cc(), cc());
            let f = StructuralCoefficient::new(CVec3::new(cc(), cc(), cc()));
            let g = PlaneWaveField::new(amp, sigma, kappa);
            match pw_particular_solution(&g, &f) {
                Ok(b) => {
                    made += 1;
                    let back = b.apply_df(&f, Sign::Plus);
                    assert!((back.amp - g.amp).norm() <= 1e-12 * g.amp.norm().max(1e-30));
                }
                Err(GreenError::OnShellSource(_)) => continue,
                Err(e) => panic!("{e}"),
            }
        }
    }
}
