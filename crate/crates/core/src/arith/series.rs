//! Truncated power series in t.

use num_traits::Zero;

use super::field::Field;
use super::poly::{Poly, Var};
use super::rat::Rat;
use super::ratfunc::RatFunc;
use super::ufrac::URatFunc;
use crate::{Error, Result};

/// Coefficients `c_0..=c_N` of a series in t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesVec {
    pub coeffs: Vec<Rat>,
}

impl SeriesVec {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        SeriesVec { coeffs }
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// t-adic expansion of `f` up to `t^N`; coefficients are functions of x.
pub fn series_expand(f: &RatFunc, n: usize) -> Result<Vec<RatFunc>> {
    let den = f.den().coeffs_in(Var::T);
    let num = f.num().coeffs_in(Var::T);
    if den.is_empty() || den[0].is_zero() {
        return Err(Error::NotTAdicallyRegular);
    }
    let as_x = |p: &Poly| URatFunc::from_poly(p.to_upoly(Var::X));
    let b: Vec<URatFunc> = den.iter().map(as_x).collect();
    let a: Vec<URatFunc> = num.iter().map(as_x).collect();
    let b0inv = b[0].inv();
    let mut out: Vec<URatFunc> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = a.get(k).cloned().unwrap_or_else(URatFunc::zero);
        for j in 1..=k.min(b.len() - 1) {
            acc = acc.sub(&b[j].mul(&out[k - j]));
        }
        out.push(acc.mul(&b0inv));
    }
    Ok(out
        .iter()
        .map(|c| {
            RatFunc::frac(
                Poly::from_upoly(c.num(), Var::X),
                Poly::from_upoly(c.den(), Var::X),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric() {
        let f = RatFunc::frac(Poly::one(), Poly::one().sub(&Poly::t()).sub(&Poly::x()));
        let s = series_expand(&f, 2).unwrap();
        let omx = Poly::one().sub(&Poly::x());
        for (k, c) in s.iter().enumerate() {
            assert_eq!(c, &RatFunc::frac(Poly::one(), omx.pow(k as u32 + 1)));
        }
    }

    #[test]
    fn polynomial_and_pole() {
        let s = series_expand(&RatFunc::from_poly(Poly::x()), 1).unwrap();
        assert_eq!(s, vec![RatFunc::from_poly(Poly::x()), RatFunc::zero()]);
        let f = RatFunc::frac(Poly::one(), Poly::t());
        assert!(series_expand(&f, 0).is_err());
    }
}
