//! Factorization over Q of univariate and bivariate polynomials.

mod bivariate;
pub mod modp;
mod univariate;

pub use bivariate::{factor_bivariate, DEGREE_CAP};
pub use univariate::factor_univariate;

use super::poly::Poly;
use super::rat::Rat;
use super::upoly::UPoly;

/// `unit * prod f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct UFactorization {
    pub unit: Rat,
    pub factors: Vec<(UPoly, u32)>,
}

/// `content * prod f_i^{m_i}` with each `f_i` irreducible, integer-primitive,
/// positive leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(Poly, u32)>,
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
