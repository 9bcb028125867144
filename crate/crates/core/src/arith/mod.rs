//! Exact arithmetic: rationals, polynomials, rational functions, series.

pub mod dense;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod modgcd;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod series;
pub mod ufrac;
pub mod upoly;
pub mod xpoly;

pub use factor::{factor_bivariate, factor_univariate, Factorization, UFactorization};
pub use field::Field;
pub use poly::{
    gcd as poly_gcd, resultant, squarefree_decomp, Monomial, Poly, SquarefreeDecomp, Var,
};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use series::{series_expand, SeriesVec};
pub use ufrac::URatFunc;
pub use upoly::UPoly;
pub use xpoly::XPoly;
