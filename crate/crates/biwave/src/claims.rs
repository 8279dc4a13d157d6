//! Machine-checkable registry of the closed-form identities the twistor
//! families satisfy. Each claim draws its parameters from a seeded generator,
//! measures a maximum residual against the identity, and reports a status.
//!
//! Identities stated with internal inconsistencies are represented as claim
//! variants: the check runs both the statement as printed and the corrected
//! reading, and reports `FailsAsPrinted-PassesCorrected` when only the
//! corrected one holds. Nothing is silently patched.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    add3, any_unit_orthogonal, cross3, dot3, norm3, scale3, sub3, Biquaternion, CVec3, Complex,
    ConventionFlags, Real3, StructuralCoefficient, XiConvention,
};
use crate::green::{
    eval_psi_omega, kirchhoff_solve, psi_omega_volume_potential, pw_particular_solution,
    GreenConfig, HarmonicKernelParams, ScalarSource, SphereRule,
};
use crate::grid::{fd_scalar_helmholtz_residual, GridField};
use crate::planewave::{PlaneWaveField, Sign};
use crate::twistor::{
    evanescent_twistor, h_twistor, omega_twistor, sample_spectral_surface, static_twistor,
    superpose, xi_amplitude, xi_twistor, SpectralDensity, SurfaceGrid, SurfaceKind,
};

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    FailsAsPrintedPassesCorrected,
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Pass => "Pass",
            ClaimStatus::Fail => "Fail",
            ClaimStatus::FailsAsPrintedPassesCorrected => "FailsAsPrinted-PassesCorrected",
        }
    }
}

/// One registered identity check.
pub struct ClaimSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub tolerance: f64,
    pub draws: u32,
    /// Whether the claim's value depends on the energy-momentum convention
    /// and is therefore run over the whole convention matrix.
    pub matrix: bool,
}

pub const REGISTRY: &[ClaimSpec] = &[
    ClaimSpec {
        id: "C3",
        description: "wave operator factorization: D_F^∓ D_F^± = □ + (F,F) + 2i(F,∇), and the factors commute",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C3H",
        description: "harmonic factorization: (∇_ω^± ± F)(∇_ω^∓ ∓ F) = Δ ± 2(F,∇) + ω² + (F,F)",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C4",
        description: "grid factorization on a Gaussian-windowed wave: FD residual ≤ 5e-3 at h=1/64 with second-order refinement from h=1/32",
        tolerance: 5e-3,
        draws: 1,
        matrix: false,
    },
    ClaimSpec {
        id: "C5",
        description: "plane-wave particular solution is an exact right inverse: D_F^+ B = G off shell",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C7K",
        description: "spherical-mean solver closed forms: u = τ (F=0), sin(‖E‖τ)/‖E‖ (F=-E), sinh(‖H‖τ)/‖H‖ (F=-iH)",
        tolerance: 1e-6,
        draws: 12,
        matrix: false,
    },
    ClaimSpec {
        id: "C13",
        description: "spectral surface samplers: every node satisfies its surface equation",
        tolerance: 1e-12,
        draws: 0,
        matrix: false,
    },
    ClaimSpec {
        id: "C17",
        description: "Gaussian-density superposition over the annulus surface is grid-annihilated by D_F^+ (residual ≤ 5e-3 at h=1/64)",
        tolerance: 5e-3,
        draws: 1,
        matrix: false,
    },
    ClaimSpec {
        id: "C19",
        description: "propagating twistor annihilation: D_F^+ Ψ_ξ^± = 0",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C20",
        description: "propagating twistor: ‖Ψ_ξ^±‖ = 1 and ⟨⟨Ψ_ξ^±⟩⟩ = i‖H‖/‖ξ−E‖",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C21",
        description: "propagating twistor energy-momentum: Ξ = 1 + i([e_{ξ−E},H] ± e_{ξ−E}√(‖ξ−E‖²−‖H‖²))/‖ξ−E‖",
        tolerance: 1e-12,
        draws: 200,
        matrix: true,
    },
    ClaimSpec {
        id: "C21g",
        description: "general-angle magnitudes: ‖Ξ‖ = √(1+(L²−‖H‖²cos²γ)/L²), ⟨⟨Ξ⟩⟩ = ‖H‖|cos γ|/L; √2 and 0 at γ = ±π/2",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C22",
        description: "H = 0 special case: Ξ(Ψ_ξ^±) = 1 ± i e_{ξ−E}",
        tolerance: 1e-12,
        draws: 200,
        matrix: true,
    },
    ClaimSpec {
        id: "C22a",
        description: "H = 0 printed amplitude variant (±i + e_{ξ−E})/√2 versus the general-family amplitude (±i − e_{ξ−E})/√2",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C25",
        description: "evanescent twistor annihilation: D_F^+ Υ_ξ^± = 0",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C26w",
        description: "harmonic kernel ψ_ω (sign-corrected) is annihilated by Δ + 2(F,∇) + ω² + (F,F) away from the origin",
        tolerance: 1e-5,
        draws: 50,
        matrix: false,
    },
    ClaimSpec {
        id: "C26s",
        description: "ψ_ω leading sign: volume-potential normalization passes with the leading minus and fails with the sign as printed",
        tolerance: 5e-3,
        draws: 1,
        matrix: false,
    },
    ClaimSpec {
        id: "C27",
        description: "evanescent twistor: ‖Υ_ξ^±‖ = ‖H‖/‖ξ−E‖ and ⟨⟨Υ_ξ^±⟩⟩ = i",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C28",
        description: "evanescent energy-momentum (Hermitian factor taken on the opposite time branch): Ξ = 1 + (i[e_{ξ−E},H] ± e_{ξ−E}√(‖H‖²−‖ξ−E‖²))/‖ξ−E‖",
        tolerance: 1e-12,
        draws: 200,
        matrix: true,
    },
    ClaimSpec {
        id: "C37",
        description: "harmonic twistor annihilation: (∇_ω^+ + F) Ψ_+^ω = 0",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C38",
        description: "harmonic twistor: ‖Ψ_+^ω‖ = 1 and ⟨⟨Ψ_+^ω⟩⟩ = i‖E‖/√(ω²+‖E‖²); null amplitude at E = 0",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "C38X",
        description: "harmonic twistor energy-momentum: printed 1 + i(ωe + [e,E])/r versus corrected cross-term [E,e]; ‖Ξ_ω‖ = √2, ⟨⟨Ξ_ω⟩⟩ = 0",
        tolerance: 1e-12,
        draws: 200,
        matrix: true,
    },
    ClaimSpec {
        id: "C45",
        description: "static twistor: corrected spectral-point family is annihilated with ‖Ψ‖ = 1, pseudonorm radicand −1, Ξ⁰ = 1 + i[e,e_E]; printed phase/amplitude variant is not annihilated",
        tolerance: 1e-12,
        draws: 200,
        matrix: false,
    },
    ClaimSpec {
        id: "CH",
        description: "time-growing twistor: ‖Ψ_H^±‖ = 1, ⟨⟨Ψ_H^±⟩⟩ = 0, annihilated; Ξ(Ψ_H^±) = 0 as printed holds under quaternion conjugation, the Hermitian conventions give 1 ∓ i e_H",
        tolerance: 1e-12,
        draws: 200,
        matrix: true,
    },
];

#[derive(Clone, Debug, Serialize)]
pub struct ClaimEntry {
    pub id: String,
    pub convention: String,
    pub status: String,
    pub max_error: f64,
    pub tolerance: f64,
    pub draws: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub seed: u64,
    pub entries: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Entries that count toward the exit code: default-convention runs.
    pub fn default_convention_failures(&self) -> Vec<&ClaimEntry> {
        self.entries
            .iter()
            .filter(|e| {
                e.convention == XiConvention::HermitianLeft.name()
                    && e.status == ClaimStatus::Fail.label()
            })
            .collect()
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<6} {:<16} {:<32} {:>12} {:>12} {:>6}\n",
            "claim", "convention", "status", "max_error", "tolerance", "draws"
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "{:<6} {:<16} {:<32} {:>12.3e} {:>12.1e} {:>6}\n",
                e.id, e.convention, e.status, e.max_error, e.tolerance, e.draws
            ));
        }
        out
    }
}

/// Derive a per-claim generator from the report seed, the claim id, and the
/// convention, so claims are independent and reordering-stable.
fn claim_rng(seed: u64, id: &str, conv: XiConvention) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes().chain(conv.name().bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn rand_range(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

fn rand_vec3(rng: &mut ChaCha8Rng, scale: f64) -> Real3 {
    [
        rand_range(rng, -scale, scale),
        rand_range(rng, -scale, scale),
        rand_range(rng, -scale, scale),
    ]
}

fn rand_complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex {
    c(
        rand_range(rng, -scale, scale),
        rand_range(rng, -scale, scale),
    )
}

fn rand_cvec3(rng: &mut ChaCha8Rng, scale: f64) -> CVec3 {
    CVec3::new(
        rand_complex(rng, scale),
        rand_complex(rng, scale),
        rand_complex(rng, scale),
    )
}

fn rand_bq(rng: &mut ChaCha8Rng, scale: f64) -> Biquaternion {
    Biquaternion::new(rand_complex(rng, scale), rand_cvec3(rng, scale))
}

fn rand_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Nonzero H with norm in [0.3, 2].
fn rand_h(rng: &mut ChaCha8Rng) -> Real3 {
    loop {
        let h = rand_vec3(rng, 2.0);
        let n = norm3(h);
        if n >= 0.3 && n <= 2.0 {
            return h;
        }
    }
}

/// Unit vector orthogonal to `a` at a random in-plane angle; any unit vector
/// when a = 0.
fn rand_orthogonal_unit(rng: &mut ChaCha8Rng, a: Real3) -> Real3 {
    let base = if norm3(a) > 0.0 { a } else { [0.0, 0.0, 1.0] };
    let u1 = any_unit_orthogonal(base);
    let u2 = scale3(cross3(base, u1), 1.0 / norm3(base));
    let th = rand_range(rng, 0.0, 2.0 * std::f64::consts::PI);
    add3(scale3(u1, th.cos()), scale3(u2, th.sin()))
}

/// Admissible propagating-family draw: (ξ, F) with (ξ−E) ⊥ H and
/// ‖ξ−E‖ > ‖H‖.
fn draw_propagating(rng: &mut ChaCha8Rng) -> (Real3, StructuralCoefficient) {
    let e = rand_vec3(rng, 2.0);
    let h = rand_h(rng);
    let dir = rand_orthogonal_unit(rng, h);
    let l = norm3(h) + rand_range(rng, 0.1, 3.0);
    let xi = add3(e, scale3(dir, l));
    (xi, StructuralCoefficient::from_wave_fields(e, h))
}

/// Admissible evanescent-family draw: 0 < ‖ξ−E‖ ≤ ‖H‖.
fn draw_evanescent(rng: &mut ChaCha8Rng) -> (Real3, StructuralCoefficient) {
    let e = rand_vec3(rng, 2.0);
    let h = rand_h(rng);
    let dir = rand_orthogonal_unit(rng, h);
    let l = norm3(h) * rand_range(rng, 0.1, 1.0);
    let xi = add3(e, scale3(dir, l));
    (xi, StructuralCoefficient::from_wave_fields(e, h))
}

fn relative_residual(out: &Biquaternion, input_scale: f64) -> f64 {
    out.norm() / input_scale.max(1e-300)
}

struct CheckOutcome {
    status: ClaimStatus,
    max_error: f64,
}

fn pass_fail(max_error: f64, tol: f64) -> CheckOutcome {
    CheckOutcome {
        status: if max_error <= tol {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        },
        max_error,
    }
}

/// Printed vs corrected variant verdict: the printed reading must fail and
/// the corrected one pass to earn the variant status.
fn variant_verdict(printed_error: f64, corrected_error: f64, tol: f64) -> CheckOutcome {
    // Report the error of whichever reading the verdict rests on.
    if printed_error <= tol {
        CheckOutcome {
            status: ClaimStatus::Pass,
            max_error: printed_error,
        }
    } else if corrected_error <= tol {
        CheckOutcome {
            status: ClaimStatus::FailsAsPrintedPassesCorrected,
            max_error: corrected_error,
        }
    } else {
        CheckOutcome {
            status: ClaimStatus::Fail,
            max_error: printed_error.min(corrected_error),
        }
    }
}

fn check_c3(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let pw = PlaneWaveField::new(rand_bq(rng, 2.0), rand_complex(rng, 2.0), rand_cvec3(rng, 2.0));
        let f = StructuralCoefficient::new(rand_cvec3(rng, 2.0));
        let m = pw.scalar_multiplier(&f);
        let scale = pw.amp.norm() * (m.norm() + 1.0);
        let ab = pw.apply_df(&f, Sign::Plus).apply_df(&f, Sign::Minus);
        let ba = pw.apply_df(&f, Sign::Minus).apply_df(&f, Sign::Plus);
        let expected = pw.amp.scale(m);
        max_err = max_err
            .max(relative_residual(&(ab.amp - expected), scale))
            .max(relative_residual(&(ba.amp - ab.amp), scale));
    }
    pass_fail(max_err, 1e-12)
}

fn check_c3h(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let pw = PlaneWaveField::new(rand_bq(rng, 2.0), c(0.0, 0.0), rand_cvec3(rng, 2.0));
        let f = StructuralCoefficient::new(rand_cvec3(rng, 2.0));
        let omega = rand_range(rng, -3.0, 3.0);
        let sign = rand_sign(rng);
        let m = pw.harmonic_scalar_multiplier(&f, omega, sign);
        let scale = pw.amp.norm() * (m.norm() + 1.0);
        // (∇_ω^± ± F) then (∇_ω^∓ ∓ F): on the upper sign the inner factor is
        // the adjoint lower-sign operator.
        let inner = pw.apply_harmonic_adjoint(&f, omega, sign.flip()).unwrap();
        let outer = match sign {
            Sign::Plus => inner.apply_harmonic(&f, omega, sign).unwrap(),
            Sign::Minus => inner.apply_harmonic(&f, omega, sign).unwrap(),
        };
        let expected = pw.amp.scale(m);
        max_err = max_err.max(relative_residual(&(outer.amp - expected), scale));
    }
    pass_fail(max_err, 1e-12)
}

/// Analytic (□ + 2i(F,∇) + (F,F))g for the Gaussian-windowed plane wave
/// g = exp(στ − i(κ,x) − (τ² + ‖x‖²)/(2w²)).
fn windowed_wave_scalar_op(
    tau: f64,
    x: Real3,
    sigma: Complex,
    kappa: Real3,
    f: &StructuralCoefficient,
    w: f64,
) -> (Complex, Complex) {
    let i = c(0.0, 1.0);
    let g = (sigma * tau - i * CVec3::from_real(kappa).dot_real(x)
        - (tau * tau + dot3(x, x)) / (2.0 * w * w))
        .exp();
    let gt = sigma - tau / (w * w);
    let dtt = gt * gt - 1.0 / (w * w);
    let mut lap = c(0.0, 0.0);
    let mut fgrad = c(0.0, 0.0);
    let fv = [f.vector.x, f.vector.y, f.vector.z];
    for k in 0..3 {
        let gk = -i * kappa[k] - x[k] / (w * w);
        lap += gk * gk - 1.0 / (w * w);
        fgrad += fv[k] * gk;
    }
    let ff = f.vector.dot(&f.vector);
    ((dtt - lap + ff + 2.0 * i * fgrad) * g, g)
}

fn check_c4(rng: &mut ChaCha8Rng) -> CheckOutcome {
    let sigma = rand_complex(rng, 1.5);
    let kappa = rand_vec3(rng, 1.5);
    let f = StructuralCoefficient::new(rand_cvec3(rng, 1.0));
    let w = 0.6;
    let i = c(0.0, 1.0);
    let field = move |tau: f64, x: Real3| {
        let g = (sigma * tau - i * CVec3::from_real(kappa).dot_real(x)
            - (tau * tau + dot3(x, x)) / (2.0 * w * w))
            .exp();
        Biquaternion::scalar(g)
    };
    let mut residuals = Vec::new();
    for &h in &[1.0 / 32.0, 1.0 / 64.0] {
        // 9 nodes per axis centered on the origin; margin 4 after the two
        // first-order applications leaves the center node.
        let n = 9usize;
        let half = (n - 1) as f64 / 2.0;
        let origin = [-half * h; 4];
        let g = GridField::sample(
            origin,
            [h; 4],
            [n; 4],
            |tau, x| field(tau, x),
        )
        .unwrap();
        let composed = g
            .apply_df(&f, Sign::Plus)
            .unwrap()
            .apply_df(&f, Sign::Minus)
            .unwrap();
        let center = [n / 2; 4];
        let got = *composed.at(center);
        let (expected, gval) = windowed_wave_scalar_op(0.0, [0.0; 3], sigma, kappa, &f, w);
        let scale = gval.norm() * (expected.norm() / gval.norm()).max(1.0);
        residuals.push((got - Biquaternion::scalar(expected)).norm() / scale.max(1e-300));
    }
    let ratio = residuals[0] / residuals[1];
    let mut out = pass_fail(residuals[1], 5e-3);
    if !(2.8..=5.2).contains(&ratio) {
        out.status = ClaimStatus::Fail;
        out.max_error = out.max_error.max(ratio);
    }
    out
}

fn check_c5(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    let mut made = 0;
    while made < draws {
        let g = PlaneWaveField::new(rand_bq(rng, 2.0), rand_complex(rng, 2.0), rand_cvec3(rng, 2.0));
        let f = StructuralCoefficient::new(rand_cvec3(rng, 2.0));
        match pw_particular_solution(&g, &f) {
            Ok(b) => {
                made += 1;
                let back = b.apply_df(&f, Sign::Plus);
                max_err = max_err.max(relative_residual(&(back.amp - g.amp), g.amp.norm()));
            }
            Err(_) => continue,
        }
    }
    pass_fail(max_err, 1e-12)
}

fn check_c7k(rng: &mut ChaCha8Rng) -> CheckOutcome {
    let ones = ScalarSource::spatial(|_| c(1.0, 0.0), f64::INFINITY);
    let mut max_err = 0.0f64;
    let mut status = ClaimStatus::Pass;
    // F = 0: |u − τ| ≤ 1e−8.
    for _ in 0..4 {
        let tau = rand_range(rng, 0.1, 2.0);
        let x = rand_vec3(rng, 1.0);
        let cfg = GreenConfig::retarded(StructuralCoefficient::ZERO);
        let u = kirchhoff_solve(&ones, &cfg, tau, x).unwrap();
        let err = (u - c(tau, 0.0)).norm();
        if err > 1e-8 {
            status = ClaimStatus::Fail;
        }
        max_err = max_err.max(err);
    }
    // F = −E: u = sin(‖E‖τ)/‖E‖; F = −iH: u = sinh(‖H‖τ)/‖H‖.
    for real_f in [true, false] {
        for _ in 0..4 {
            let tau = rand_range(rng, 0.1, 2.0);
            let n = rand_range(rng, 0.2, 2.0);
            let (f, exact) = if real_f {
                (
                    StructuralCoefficient::from_wave_fields([0.0, 0.0, n], [0.0; 3]),
                    (n * tau).sin() / n,
                )
            } else {
                (
                    StructuralCoefficient::from_wave_fields([0.0; 3], [0.0, 0.0, n]),
                    (n * tau).sinh() / n,
                )
            };
            let cfg = GreenConfig::retarded(f);
            let u = kirchhoff_solve(&ones, &cfg, tau, [0.0; 3]).unwrap();
            let err = (u - c(exact, 0.0)).norm() / exact.abs().max(1.0);
            if err > 1e-6 {
                status = ClaimStatus::Fail;
            }
            max_err = max_err.max(err);
        }
    }
    CheckOutcome {
        status,
        max_error: max_err,
    }
}

fn check_c13(rng: &mut ChaCha8Rng) -> CheckOutcome {
    let mut max_res = 0.0f64;
    let mut total = 0u32;
    for _ in 0..5 {
        let e = rand_vec3(rng, 2.0);
        let h = rand_h(rng);
        let omega = rand_range(rng, 0.2, 3.0);
        let grid = SurfaceGrid {
            n_radial: 8,
            n_angular: 16,
            r_trunc: norm3(h) + rand_range(rng, 0.5, 3.0),
        };
        let cases = [
            (SurfaceKind::SCap, StructuralCoefficient::from_wave_fields(e, h), 0.0),
            (
                SurfaceKind::SOmegaCircle,
                StructuralCoefficient::from_harmonic_fields(e, h),
                omega,
            ),
            (
                SurfaceKind::SOmegaSphere,
                StructuralCoefficient::from_harmonic_fields([0.0; 3], h),
                omega,
            ),
            (
                SurfaceKind::SStaticCircle,
                StructuralCoefficient::from_harmonic_fields(e, h),
                0.0,
            ),
            (
                SurfaceKind::SStaticPoint,
                StructuralCoefficient::from_harmonic_fields([0.0; 3], h),
                0.0,
            ),
        ];
        for (kind, f, om) in cases {
            if kind == SurfaceKind::SStaticCircle && norm3(e) < 1e-12 {
                continue;
            }
            let s = sample_spectral_surface(kind, &f, om, grid).unwrap();
            for node in &s.nodes {
                max_res = max_res.max(s.membership_residual(*node));
                total += 1;
            }
        }
    }
    let mut out = pass_fail(max_res, 1e-12);
    // Record how many nodes were examined.
    out.max_error = max_res;
    let _ = total;
    out
}

fn check_c17(rng: &mut ChaCha8Rng) -> CheckOutcome {
    let e = rand_vec3(rng, 0.5);
    let h = rand_h(rng);
    let f = StructuralCoefficient::from_wave_fields(e, h);
    let grid = SurfaceGrid {
        n_radial: 32,
        n_angular: 64,
        r_trunc: norm3(h) + 1.5,
    };
    let sample = sample_spectral_surface(SurfaceKind::SCap, &f, 0.0, grid).unwrap();
    let density = SpectralDensity::Gaussian {
        center: add3(e, [norm3(h) + 0.7, 0.0, 0.0]),
        width: 0.8,
        scale: c(1.0, 0.0),
    };
    let field = superpose(&sample, &density, Sign::Plus).unwrap();
    let hstep = 1.0 / 64.0;
    let n = 5usize;
    let half = (n - 1) as f64 / 2.0;
    let g = GridField::sample(
        [-half * hstep; 4],
        [hstep; 4],
        [n; 4],
        |tau, x| field.eval(tau, x),
    )
    .unwrap();
    let res = g.apply_df(&f, Sign::Plus).unwrap();
    // Characteristic operator magnitude: largest |σ| + ‖κ + F‖ over nodes.
    let kmax = sample
        .nodes
        .iter()
        .map(|xi| norm3(*xi) + f.vector.norm_sqr().sqrt() + norm3(sub3(*xi, e)))
        .fold(0.0f64, f64::max);
    let scale = g.interior_max_norm(0) * kmax.max(1.0);
    pass_fail(res.interior_max_norm(2) / scale.max(1e-300), 5e-3)
}

fn check_annihilation<F>(rng: &mut ChaCha8Rng, draws: u32, mut build: F) -> CheckOutcome
where
    F: FnMut(&mut ChaCha8Rng) -> (PlaneWaveField, StructuralCoefficient, Option<f64>),
{
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (pw, f, omega) = build(rng);
        let out = match omega {
            None => pw.apply_df(&f, Sign::Plus),
            Some(om) => pw.apply_harmonic(&f, om, Sign::Plus).unwrap(),
        };
        max_err = max_err.max(relative_residual(&out.amp, pw.amp.norm()));
    }
    pass_fail(max_err, 1e-12)
}

fn check_c20(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (xi, f) = draw_propagating(rng);
        let pw = xi_twistor(xi, &f, rand_sign(rng)).unwrap();
        let l = norm3(sub3(xi, f.wave_e()));
        let expected_pseudo = c(0.0, norm3(f.wave_h()) / l);
        max_err = max_err
            .max((pw.amp.norm() - 1.0).abs())
            .max((pw.amp.pseudonorm() - expected_pseudo).norm());
    }
    pass_fail(max_err, 1e-12)
}

/// Closed-form Ξ for the propagating family under the left-Hermitian
/// ordering: 1 + i([e_{ξ−E},H] ± ϖ e_{ξ−E})/‖ξ−E‖.
fn xi_energy_momentum_expected(xi: Real3, f: &StructuralCoefficient, branch: Sign) -> Biquaternion {
    let e = f.wave_e();
    let h = f.wave_h();
    let d = sub3(xi, e);
    let l = norm3(d);
    let el = scale3(d, 1.0 / l);
    let freq = (l * l - dot3(h, h)).sqrt();
    let vec = add3(cross3(el, h), scale3(el, branch.factor() * freq));
    Biquaternion::new(c(1.0, 0.0), CVec3::from_imag(scale3(vec, 1.0 / l)))
}

fn check_c21(rng: &mut ChaCha8Rng, draws: u32, flags: &ConventionFlags) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (xi, f) = draw_propagating(rng);
        let branch = rand_sign(rng);
        let pw = xi_twistor(xi, &f, branch).unwrap();
        let got = pw.amp.energy_momentum(flags);
        let expected = xi_energy_momentum_expected(xi, &f, branch);
        max_err = max_err.max((got - expected).norm());
    }
    pass_fail(max_err, 1e-12)
}

fn check_c21g(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let flags = ConventionFlags::default();
    let mut max_err = 0.0f64;
    let mut done = 0;
    while done < draws {
        let e = rand_vec3(rng, 2.0);
        let h = rand_h(rng);
        let xi = rand_vec3(rng, 3.0);
        let d = sub3(xi, e);
        let l = norm3(d);
        let hn = norm3(h);
        if l <= hn + 0.1 {
            continue;
        }
        done += 1;
        let amp = xi_amplitude(xi, &StructuralCoefficient::from_wave_fields(e, h), rand_sign(rng));
        let xi_em = amp.energy_momentum(&flags);
        let cosg = dot3(d, h) / (l * hn);
        let norm_expected = (1.0 + (l * l - hn * hn * cosg * cosg) / (l * l)).sqrt();
        let pseudo_expected = hn * cosg.abs() / l;
        // Compare squared pseudonorms: near-zero radicands make the root
        // itself lose half the working precision.
        max_err = max_err
            .max((xi_em.norm() - norm_expected).abs())
            .max((xi_em.pseudonorm().powu(2) - c(pseudo_expected * pseudo_expected, 0.0)).norm());
    }
    // γ = ±π/2 endpoint: ⟨⟨Ξ⟩⟩ = 0 and ‖Ξ‖ = √2 on admissible draws.
    for _ in 0..20 {
        let (xi, f) = draw_propagating(rng);
        let pw = xi_twistor(xi, &f, rand_sign(rng)).unwrap();
        let xi_em = pw.amp.energy_momentum(&flags);
        max_err = max_err
            .max((xi_em.norm() - 2.0_f64.sqrt()).abs())
            .max(xi_em.pseudonorm().norm_sqr());
    }
    pass_fail(max_err, 1e-12)
}

fn check_c22(rng: &mut ChaCha8Rng, draws: u32, flags: &ConventionFlags) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let e = rand_vec3(rng, 2.0);
        let f = StructuralCoefficient::from_wave_fields(e, [0.0; 3]);
        let dir = rand_orthogonal_unit(rng, [0.0, 0.0, 1.0]);
        let xi = add3(e, scale3(dir, rand_range(rng, 0.2, 3.0)));
        let branch = rand_sign(rng);
        let pw = xi_twistor(xi, &f, branch).unwrap();
        let got = pw.amp.energy_momentum(flags);
        let el = scale3(sub3(xi, e), 1.0 / norm3(sub3(xi, e)));
        let expected = Biquaternion::new(
            c(1.0, 0.0),
            CVec3::from_imag(scale3(el, branch.factor())),
        );
        max_err = max_err.max((got - expected).norm());
    }
    pass_fail(max_err, 1e-12)
}

fn check_c22a(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let flags = ConventionFlags::default();
    let mut printed_err = 0.0f64;
    let mut corrected_err = 0.0f64;
    for _ in 0..draws {
        let e = rand_vec3(rng, 2.0);
        let f = StructuralCoefficient::from_wave_fields(e, [0.0; 3]);
        let dir = rand_orthogonal_unit(rng, [0.0, 0.0, 1.0]);
        let xi = add3(e, scale3(dir, rand_range(rng, 0.2, 3.0)));
        let branch = rand_sign(rng);
        let el = scale3(sub3(xi, e), 1.0 / norm3(sub3(xi, e)));
        let expected = Biquaternion::new(
            c(1.0, 0.0),
            CVec3::from_imag(scale3(el, branch.factor())),
        );
        let s = 1.0 / 2.0_f64.sqrt();
        // As printed at H = 0: (±i + e_{ξ−E})/√2.
        let printed_amp = Biquaternion::new(
            c(0.0, branch.factor() * s),
            CVec3::from_real(scale3(el, s)),
        );
        printed_err = printed_err.max((printed_amp.energy_momentum(&flags) - expected).norm());
        // The general-family amplitude: (±i − e_{ξ−E})/√2.
        let corrected = xi_twistor(xi, &f, branch).unwrap().amp;
        corrected_err = corrected_err.max((corrected.energy_momentum(&flags) - expected).norm());
    }
    variant_verdict(printed_err, corrected_err, 1e-12)
}

fn check_c26w(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let f = StructuralCoefficient::new(CVec3::new(
            rand_complex(rng, 0.7),
            rand_complex(rng, 0.7),
            rand_complex(rng, 0.7),
        ));
        let omega = rand_range(rng, 0.0, 3.0);
        let a = if rng.gen_bool(0.5) { c(0.0, 0.0) } else { c(1.0, 0.0) };
        let p = HarmonicKernelParams { omega, a, f };
        let dir = rand_orthogonal_unit(rng, [0.0; 3]);
        let x = scale3(dir, rand_range(rng, 0.5, 2.0));
        let kernel = move |y: Real3| eval_psi_omega(y, &p).unwrap();
        let (res, scale) = fd_scalar_helmholtz_residual(&kernel, &f, omega, Sign::Plus, x, 1e-3);
        max_err = max_err.max(res / scale.max(1e-300));
    }
    pass_fail(max_err, 1e-5)
}

fn check_c26s(rng: &mut ChaCha8Rng) -> CheckOutcome {
    // Normalization witness: with a unit-mass narrow source G, the volume
    // potential u = ψ_ω ∗ G must satisfy (Δ + 2(F,∇) + ω² + (F,F))u = G.
    // The kernel without the leading minus produces −G instead.
    let f = StructuralCoefficient::new(CVec3::new(
        rand_complex(rng, 0.3),
        rand_complex(rng, 0.3),
        rand_complex(rng, 0.3),
    ));
    let omega = rand_range(rng, 0.8, 2.0);
    let width = 0.12;
    let gfun = move |y: Real3| c((-dot3(y, y) / (2.0 * width * width)).exp(), 0.0);
    let gsrc = ScalarSource::spatial(gfun, 0.7);
    let rule = SphereRule {
        n_polar: 24,
        n_azimuth: 48,
    };
    let x0 = [0.1, 0.05, 0.08];
    let expected = gfun(x0);
    let mut errs = [0.0f64; 2];
    for (slot, printed) in [(0usize, false), (1usize, true)] {
        let p = HarmonicKernelParams {
            omega,
            a: c(0.0, 0.0),
            f,
        };
        let gsrc = &gsrc;
        let potential = move |y: Real3| {
            let u = psi_omega_volume_potential(&gsrc, &p, &rule, 96, y).unwrap();
            if printed {
                -u
            } else {
                u
            }
        };
        let i = c(0.0, 1.0);
        // Plain second-order stencil of Δ + 2(F,∇) + (ω² + (F,F)) on u.
        let h = 0.02;
        let center = potential(x0);
        let mut lap = c(0.0, 0.0);
        let mut grad = [c(0.0, 0.0); 3];
        for axis in 0..3 {
            let mut xp = x0;
            let mut xm = x0;
            xp[axis] += h;
            xm[axis] -= h;
            let up = potential(xp);
            let um = potential(xm);
            lap += (up - 2.0 * center + um) / (h * h);
            grad[axis] = (up - um) / (2.0 * h);
        }
        let fgrad = f.vector.x * grad[0] + f.vector.y * grad[1] + f.vector.z * grad[2];
        let mass = (f.vector.dot(&f.vector) + omega * omega) * center;
        let got = lap + 2.0 * fgrad + mass;
        errs[slot] = (got - expected).norm() / expected.norm();
        let _ = i;
    }
    variant_verdict(errs[1], errs[0], 5e-3)
}

fn check_c27(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (xi, f) = draw_evanescent(rng);
        let pw = evanescent_twistor(xi, &f, rand_sign(rng)).unwrap();
        let l = norm3(sub3(xi, f.wave_e()));
        let expected_norm = norm3(f.wave_h()) / l;
        max_err = max_err
            .max((pw.amp.norm() - expected_norm).abs())
            .max((pw.amp.pseudonorm() - c(0.0, 1.0)).norm());
    }
    pass_fail(max_err, 1e-12)
}

fn check_c28(rng: &mut ChaCha8Rng, draws: u32, flags: &ConventionFlags) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (xi, f) = draw_evanescent(rng);
        let branch = rand_sign(rng);
        let pw = evanescent_twistor(xi, &f, branch).unwrap();
        // Hermitian conjugation continues the propagating-family pairing,
        // where conjugating σ = ±iϖ flips the time branch; for real σ the
        // flip is applied explicitly.
        let other = evanescent_twistor(xi, &f, branch.flip()).unwrap();
        let got = match flags.xi_convention {
            XiConvention::HermitianLeft => other
                .amp
                .conjugate(crate::algebra::ConjugationKind::Hermitian)
                .mul(&pw.amp),
            XiConvention::HermitianRight => pw
                .amp
                .mul(&other.amp.conjugate(crate::algebra::ConjugationKind::Hermitian)),
            XiConvention::QuaternionOnly => pw
                .amp
                .mul(&other.amp.conjugate(crate::algebra::ConjugationKind::QuaternionOnly)),
        };
        let e = f.wave_e();
        let h = f.wave_h();
        let d = sub3(xi, e);
        let l = norm3(d);
        let el = scale3(d, 1.0 / l);
        let rate = (dot3(h, h) - l * l).sqrt();
        let expected = Biquaternion::new(
            c(1.0, 0.0),
            CVec3::from_real(scale3(el, branch.factor() * rate / l))
                + CVec3::from_imag(scale3(cross3(el, h), 1.0 / l)),
        );
        max_err = max_err.max((got - expected).norm());
    }
    pass_fail(max_err, 1e-12)
}

fn draw_omega(rng: &mut ChaCha8Rng) -> (f64, StructuralCoefficient, Real3) {
    let e = rand_vec3(rng, 2.0);
    let h = rand_vec3(rng, 2.0);
    let omega = rand_range(rng, 0.2, 3.0);
    let dir = rand_orthogonal_unit(rng, e);
    (omega, StructuralCoefficient::from_harmonic_fields(e, h), dir)
}

fn check_c38(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let mut max_err = 0.0f64;
    for _ in 0..draws {
        let (omega, f, dir) = draw_omega(rng);
        let pw = omega_twistor(omega, &f, dir, rand_sign(rng)).unwrap();
        let en = norm3(f.harmonic_e());
        let r = (omega * omega + en * en).sqrt();
        max_err = max_err
            .max((pw.amp.norm() - 1.0).abs())
            .max((pw.amp.pseudonorm() - c(0.0, en / r)).norm());
    }
    pass_fail(max_err, 1e-12)
}

fn check_c38x(rng: &mut ChaCha8Rng, draws: u32, flags: &ConventionFlags) -> CheckOutcome {
    let mut printed_err = 0.0f64;
    let mut corrected_err = 0.0f64;
    let mut mag_err = 0.0f64;
    for _ in 0..draws {
        let (omega, f, dir) = draw_omega(rng);
        let branch = rand_sign(rng);
        let pw = omega_twistor(omega, &f, dir, branch).unwrap();
        let got = pw.amp.energy_momentum(flags);
        let e = f.harmonic_e();
        let en = norm3(e);
        let r = (omega * omega + en * en).sqrt();
        let bdir = scale3(dir, branch.factor());
        let make = |cross: Real3| {
            Biquaternion::new(
                c(1.0, 0.0),
                CVec3::from_imag(scale3(add3(scale3(bdir, omega), cross), 1.0 / r)),
            )
        };
        let printed = make(cross3(bdir, e));
        let corrected = make(cross3(e, bdir));
        printed_err = printed_err.max((got - printed).norm());
        corrected_err = corrected_err.max((got - corrected).norm());
        if flags.xi_convention != XiConvention::QuaternionOnly {
            mag_err = mag_err
                .max((got.norm() - 2.0_f64.sqrt()).abs())
                .max(got.pseudonorm().norm_sqr());
        }
    }
    let mut out = variant_verdict(printed_err, corrected_err, 1e-12);
    if mag_err > 1e-12 {
        out.status = ClaimStatus::Fail;
        out.max_error = out.max_error.max(mag_err);
    }
    out
}

fn check_c45(rng: &mut ChaCha8Rng, draws: u32) -> CheckOutcome {
    let flags = ConventionFlags::default();
    let mut printed_err = 0.0f64;
    let mut corrected_err = 0.0f64;
    for _ in 0..draws {
        let mut e = rand_vec3(rng, 2.0);
        while norm3(e) < 0.3 {
            e = rand_vec3(rng, 2.0);
        }
        let h = rand_vec3(rng, 2.0);
        let f = StructuralCoefficient::from_harmonic_fields(e, h);
        let dir = rand_orthogonal_unit(rng, e);
        let pw = static_twistor(&f, dir).unwrap();

        // Corrected family: annihilated, unit norm, pseudonorm radicand −1,
        // Ξ⁰ = 1 + i[e, e_E].
        let res = pw.apply_harmonic(&f, 0.0, Sign::Plus).unwrap();
        let en = norm3(e);
        let e_unit = scale3(e, 1.0 / en);
        let xi0 = Biquaternion::new(c(1.0, 0.0), CVec3::from_imag(cross3(dir, e_unit)));
        corrected_err = corrected_err
            .max(res.amp.norm())
            .max((pw.amp.norm() - 1.0).abs())
            .max((pw.amp.pseudonorm() - c(0.0, 1.0)).norm())
            .max((pw.amp.energy_momentum(&flags) - xi0).norm());

        // As printed: phase exp(−i(x, E+H)) with amplitude ((−1+i)/√2)e_E;
        // its annihilation residual does not vanish (unless E = 0).
        let s = 1.0 / 2.0_f64.sqrt();
        let printed = PlaneWaveField::new(
            Biquaternion::vector(CVec3::from_real(e_unit).scale(c(-s, s))),
            c(0.0, 0.0),
            CVec3::from_real(add3(e, h)),
        );
        let pres = printed.apply_harmonic(&f, 0.0, Sign::Plus).unwrap();
        printed_err = printed_err.max(pres.amp.norm());
    }
    variant_verdict(printed_err, corrected_err, 1e-12)
}

fn check_ch(rng: &mut ChaCha8Rng, draws: u32, flags: &ConventionFlags) -> CheckOutcome {
    let mut shared_err = 0.0f64;
    let mut printed_err = 0.0f64;
    let mut corrected_err = 0.0f64;
    for _ in 0..draws {
        let e = rand_vec3(rng, 2.0);
        let h = rand_h(rng);
        let f = StructuralCoefficient::from_wave_fields(e, h);
        let branch = rand_sign(rng);
        let pw = h_twistor(&f, branch).unwrap();
        shared_err = shared_err
            .max((pw.amp.norm() - 1.0).abs())
            .max(pw.amp.pseudonorm().norm_sqr())
            .max(pw.apply_df(&f, Sign::Plus).amp.norm());
        let got = pw.amp.energy_momentum(flags);
        // As printed: Ξ(Ψ_H^±) = 0. Under the Hermitian conventions the
        // value is 1 ∓ i e_H instead.
        printed_err = printed_err.max(got.norm());
        let upper = -branch.factor();
        let corrected = Biquaternion::new(
            c(1.0, 0.0),
            CVec3::from_imag(scale3(h, upper / norm3(h))),
        );
        corrected_err = corrected_err.max((got - corrected).norm());
    }
    let mut out = variant_verdict(printed_err, corrected_err, 1e-12);
    if shared_err > 1e-12 {
        out.status = ClaimStatus::Fail;
        out.max_error = out.max_error.max(shared_err);
    }
    out
}

fn run_check(spec: &ClaimSpec, conv: XiConvention, seed: u64) -> ClaimEntry {
    let mut rng = claim_rng(seed, spec.id, conv);
    let flags = ConventionFlags::with_xi(conv);
    let outcome = match spec.id {
        "C3" => check_c3(&mut rng, spec.draws),
        "C3H" => check_c3h(&mut rng, spec.draws),
        "C4" => check_c4(&mut rng),
        "C5" => check_c5(&mut rng, spec.draws),
        "C7K" => check_c7k(&mut rng),
        "C13" => check_c13(&mut rng),
        "C17" => check_c17(&mut rng),
        "C19" => check_annihilation(&mut rng, spec.draws, |r| {
            let (xi, f) = draw_propagating(r);
            let b = rand_sign(r);
            (xi_twistor(xi, &f, b).unwrap(), f, None)
        }),
        "C20" => check_c20(&mut rng, spec.draws),
        "C21" => check_c21(&mut rng, spec.draws, &flags),
        "C21g" => check_c21g(&mut rng, spec.draws),
        "C22" => check_c22(&mut rng, spec.draws, &flags),
        "C22a" => check_c22a(&mut rng, spec.draws),
        "C25" => check_annihilation(&mut rng, spec.draws, |r| {
            let (xi, f) = draw_evanescent(r);
            let b = rand_sign(r);
            (evanescent_twistor(xi, &f, b).unwrap(), f, None)
        }),
        "C26w" => check_c26w(&mut rng, spec.draws),
        "C26s" => check_c26s(&mut rng),
        "C27" => check_c27(&mut rng, spec.draws),
        "C28" => check_c28(&mut rng, spec.draws, &flags),
        "C37" => check_annihilation(&mut rng, spec.draws, |r| {
            let (omega, f, dir) = draw_omega(r);
            let b = rand_sign(r);
            (omega_twistor(omega, &f, dir, b).unwrap(), f, Some(omega))
        }),
        "C38" => check_c38(&mut rng, spec.draws),
        "C38X" => check_c38x(&mut rng, spec.draws, &flags),
        "C45" => check_c45(&mut rng, spec.draws),
        "CH" => check_ch(&mut rng, spec.draws, &flags),
        other => unreachable!("unregistered claim {other}"),
    };
    ClaimEntry {
        id: spec.id.to_string(),
        convention: conv.name().to_string(),
        status: outcome.status.label().to_string(),
        max_error: outcome.max_error,
        tolerance: spec.tolerance,
        draws: spec.draws,
        seed,
    }
}

pub fn claim_spec(id: &str) -> Option<&'static ClaimSpec> {
    REGISTRY.iter().find(|s| s.id == id)
}

/// Run one claim under one convention.
pub fn run_claim(id: &str, conv: XiConvention, seed: u64) -> Result<ClaimEntry, ClaimError> {
    let spec = claim_spec(id).ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))?;
    Ok(run_check(spec, conv, seed))
}

/// Run the whole registry. Convention-dependent claims are run once per
/// convention in `conventions`; the rest run under the default convention.
/// An empty convention list selects all conventions.
pub fn run_all(conventions: &[XiConvention], seed: u64) -> ClaimReport {
    let convs: Vec<XiConvention> = if conventions.is_empty() {
        XiConvention::ALL.to_vec()
    } else {
        conventions.to_vec()
    };
    let mut entries = Vec::new();
    for spec in REGISTRY {
        if spec.matrix {
            for &conv in &convs {
                entries.push(run_check(spec, conv, seed));
            }
        } else {
            entries.push(run_check(spec, XiConvention::HermitianLeft, seed));
        }
    }
    ClaimReport { seed, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim_rejected() {
        assert!(matches!(
            run_claim("C999", XiConvention::HermitianLeft, 1),
            Err(ClaimError::UnknownClaim(_))
        ));
    }

    #[test]
    fn determinism_same_seed_identical_reports() {
        let convs = [XiConvention::HermitianLeft];
        let a = run_all(&convs, 42).to_json();
        let b = run_all(&convs, 42).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn expected_statuses_under_each_convention() {
        let seed = 7;
        // Default convention reproduces the propagating-family closed form.
        let c21 = run_claim("C21", XiConvention::HermitianLeft, seed).unwrap();
        assert_eq!(c21.status, "Pass", "C21 HL: {}", c21.max_error);
        // The quaternion conjugation annihilates null amplitudes instead.
        let c21q = run_claim("C21", XiConvention::QuaternionOnly, seed).unwrap();
        assert_eq!(c21q.status, "Fail");
        let c22q = run_claim("C22", XiConvention::QuaternionOnly, seed).unwrap();
        assert_eq!(c22q.status, "Fail");
        // Ξ(Ψ_H) = 0 holds exactly there, and only there.
        let chq = run_claim("CH", XiConvention::QuaternionOnly, seed).unwrap();
        assert_eq!(chq.status, "Pass");
        let chl = run_claim("CH", XiConvention::HermitianLeft, seed).unwrap();
        assert_eq!(chl.status, "FailsAsPrinted-PassesCorrected");
        // The harmonic-family Ξ is printed in the right-Hermitian ordering.
        let x_hr = run_claim("C38X", XiConvention::HermitianRight, seed).unwrap();
        assert_eq!(x_hr.status, "Pass");
        let x_hl = run_claim("C38X", XiConvention::HermitianLeft, seed).unwrap();
        assert_eq!(x_hl.status, "FailsAsPrinted-PassesCorrected");
    }

    #[test]
    fn default_run_has_no_failures() {
        let report = run_all(&[XiConvention::HermitianLeft], 20260826);
        let failures = report.default_convention_failures();
        assert!(
            failures.is_empty(),
            "failing claims: {:?}",
            failures.iter().map(|e| (&e.id, e.max_error)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<_> = REGISTRY.iter().map(|s| s.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }
}
