//! Polynomials in x over Q(t).

use super::dense::DensePoly;
use super::field::Field;
use super::poly::{Monomial, Poly, Var};
use super::rat::Rat;
use super::ufrac::URatFunc;
use super::upoly::UPoly;

pub type XPoly = DensePoly<URatFunc>;

/// Views a polynomial in t and x as an element of Q(t)[x].
pub fn to_xpoly(p: &Poly) -> XPoly {
    let cs = p.coeffs_in(Var::X);
    XPoly::new(
        cs.iter()
            .map(|c| URatFunc::from_poly(c.to_upoly(Var::T)))
            .collect(),
    )
}

pub fn upoly_to_poly_t(p: &UPoly) -> Poly {
    Poly::from_upoly(p, Var::T)
}

/// Writes `p = N / D` with `N` in Q[t,x] and `D` monic in Q[t].
pub fn from_xpoly(p: &XPoly) -> (Poly, UPoly) {
    let mut den = UPoly::one();
    for c in p.coeffs() {
        if !c.is_zero() {
            den = den.lcm(c.den());
        }
    }
    let mut n = Poly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = c.num().mul(&den.div_exact(c.den()));
        n = n.add(&upoly_to_poly_t(&k).mul_monomial(&Monomial::var(Var::X, i as u32)));
    }
    (n, den)
}

/// The primitive normalized polynomial in Q[t,x] associated with `p`.
pub fn primitive_poly(p: &XPoly) -> Poly {
    let (n, _) = from_xpoly(p);
    n.primitive_in(Var::X).normalize()
}

pub fn map_coeffs(p: &XPoly, f: impl Fn(&URatFunc) -> URatFunc) -> XPoly {
    p.map(f)
}

/// Applies d/dt to the coefficients.
pub fn dt(p: &XPoly) -> XPoly {
    p.map(|c| c.deriv())
}

/// Coefficientwise `t -> t + a`.
pub fn shift_t(p: &XPoly, a: &Rat) -> XPoly {
    p.map(|c| c.shift(a))
}

/// Coefficientwise `t -> q t`.
pub fn qscale_t(p: &XPoly, q: &Rat) -> XPoly {
    p.map(|c| c.qscale(q))
}

pub fn xconst(c: URatFunc) -> XPoly {
    XPoly::constant(c)
}

pub fn xrat(c: &Rat) -> URatFunc {
    URatFunc::from_rat(c)
}

pub fn is_t_free(p: &XPoly) -> bool {
    p.coeffs().iter().all(|c| c.as_constant().is_some())
}

pub fn one_x() -> XPoly {
    XPoly::one()
}

pub fn is_monic(p: &XPoly) -> bool {
    p.lc().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = Poly::x().pow(2).mul(&Poly::t()).sub(&Poly::int(3));
        let x = to_xpoly(&p).monic();
        let (n, d) = from_xpoly(&x);
        assert_eq!(d, UPoly::x());
        assert_eq!(n, p);
        assert_eq!(primitive_poly(&x), p);
    }
}
