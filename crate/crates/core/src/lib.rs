//! Residues, residual forms and telescopers for bivariate rational functions.

pub mod arith;
pub mod diagonal;
mod error;

pub mod ore;
pub mod reduction;
pub mod syntax;
pub mod telescoping;

pub use arith::*;
pub use diagonal::{
    check_annihilates_series, diag_series, diagonal_ode, diagonal_report, diagonal_substitute,
    ez_pipeline, stanley_words_count, DiagReport, EzReport,
};
pub use error::{Error, Result};
pub use ore::{gcrd, lclm, rational_solutions, OreKind, OrePoly};
pub use reduction::{
    abramov_reduce, dispersion, hermite_reduce, is_exact, q_dispersion, q_reduce, reduce, residues,
    OrbitKind, Reduction, ResidualForm, ResidualTerm, ResidueData, XCase,
};
pub use syntax::{parse_operator, parse_poly, parse_ratfunc, parse_ratfunc_q};
pub use telescoping::{
    classify_factor, exists_telescoper, find_telescoper, find_telescoper_with,
    is_potential_telescoper, minimal_annihilator_diff, verify_telescoper, witness_for_operator,
    Decision, FactorShape, Shape, Strategy, TelescoperCase, TelescoperResult, WitnessInput,
};
