//! Exact arithmetic for binary cubic forms over the rationals.
//!
//! The crate decides `SL(2)`- and `GL(2)`-equivalence of binary cubic forms
//! `aX^3 + bX^2Y + cXY^2 + dY^3` over `Q` and `Z`, recovers every transforming
//! matrix, classifies automorphism groups, computes the Cardano invariant in
//! the quadratic resolvent algebra `Q[delta]` with `delta^2 = -3*disc`, and
//! evaluates the covering map from `Z^3 = g(X,Y)` to `Y^2 = X^3 + k`.
//!
//! Module map:
//!
//! - [`poly`]: rational numbers, rational roots of cubics, linear factors of
//!   binary cubics, bihomogeneous forms with exact division.
//! - [`forms`]: the cubic form type, invariants, covariants, twisted action.
//! - [`resolvent`]: the resolvent algebra, Cardano covariant and invariant.
//! - [`equiv`]: the bicovariant, transform recovery, automorphisms, integral
//!   equivalence.
//! - [`descent`]: the covering map to `Y^2 = X^3 + k`.
//! - [`cli`]: the command-line front end used by the `cubiform` binary.
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/`
//! directory (`cargo run -p cubiform --example <name>`).

pub mod cli;
pub mod descent;
pub mod equiv;
mod error;
pub mod forms;
pub mod poly;
pub mod resolvent;

pub use descent::{cover_point, curve_k, is_on_curve, CurvePoint};
pub use equiv::{
    automorphisms, bicovariant, bilinear_factors, brute_force_oracle, factor_to_matrix,
    gl2_transforms, is_equivalent, sl2_transforms, standard_reducible_form, AutGroupKind,
    AutomorphismGroup, Group, Ring, TaggedMatrix, TransformSet,
};
pub use error::{Error, Result};
pub use forms::{BinaryCubicForm, Mat2, QuadraticForm};
pub use poly::{BiForm, Rat, UniCubic};
pub use resolvent::{
    cardano_covariant, cardano_representative, cardano_roots_numeric, check_f_identity,
    classes_equal, construct_from_invariant, is_trivial_class, rational_roots_of_form,
    CardanoCovariant, FormRoots, Orientation, ResolventAlgebra, ResolventElement,
};
