//! Biquaternion differential algebra for the biwave equation ∇⁺B + F∘B = G:
//! twistor solution families, fundamental-solution solvers, and a numeric
//! verification harness for the closed-form identities the families satisfy.

pub mod algebra;
pub mod claims;
pub mod cli;
pub mod green;
pub mod io;
pub mod grid;
pub mod planewave;
pub mod twistor;

pub use algebra::{
    Biquaternion, CVec3, Complex, ConjugationKind, ConventionFlags, PseudonormBranch, Real3,
    StructuralCoefficient, XiConvention,
};
pub use planewave::{PlaneWaveField, Sign};
