//! Reduced bivariate rational functions.

use num_traits::{One, Zero};

use super::poly::{gcd, Monomial, Poly, Var};
use super::rat::Rat;
use super::ufrac::URatFunc;
use super::upoly::UPoly;
use super::xpoly::{from_xpoly, to_xpoly, upoly_to_poly_t, XPoly};
use crate::{Error, Result};

/// `num/den` in lowest terms; `den` integer-primitive with positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let c = den.rational_content();
        RatFunc {
            num: num.scale(&c.recip()),
            den: den.scale(&c.recip()),
        }
    }

    /// Builds `num/den`, panicking on a zero denominator.
    pub fn frac(num: Poly, den: Poly) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::normalized(p, Poly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.num.has_var(v) || self.den.has_var(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        Self::normalized(self.num.mul(&d2).add(&o.num.mul(&d1)), d1.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n = self
            .num
            .div_exact(&g1)
            .unwrap()
            .mul(&o.num.div_exact(&g2).unwrap());
        let d = self
            .den
            .div_exact(&g2)
            .unwrap()
            .mul(&o.den.div_exact(&g1).unwrap());
        let c = d.rational_content();
        RatFunc {
            num: n.scale(&c.recip()),
            den: d.scale(&c.recip()),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if Zero::is_zero(c) {
                Poly::one()
            } else {
                self.den.clone()
            },
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn deriv(&self, v: Var) -> Self {
        let n = self
            .num
            .deriv(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.deriv(v)));
        Self::normalized(n, self.den.mul(&self.den))
    }

    /// Substitutes polynomials for variables.
    pub fn subs(&self, map: &[(Var, Poly)]) -> Result<Self> {
        Self::new(self.num.subs_many(map), self.den.subs_many(map))
    }

    /// Substitutes a rational function for one variable.
    pub fn subs_frac(&self, v: Var, g: &RatFunc) -> Result<Self> {
        fn hom(p: &Poly, v: Var, g: &RatFunc, d: i64) -> Poly {
            // p(g) * den(g)^d
            let cs = p.coeffs_in(v);
            let mut acc = Poly::zero();
            let mut np = Poly::one();
            let dpow: Vec<Poly> = (0..=d.max(0)).map(|k| g.den.pow(k as u32)).collect();
            for (k, c) in cs.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&c.mul(&np).mul(&dpow[(d as usize) - k]));
                }
                np = np.mul(&g.num);
            }
            acc
        }
        let dn = self.num.degree(v).max(0);
        let dd = self.den.degree(v).max(0);
        let mut n = hom(&self.num, v, g, dn);
        let mut d = hom(&self.den, v, g, dd);
        if dd > dn {
            n = n.mul(&g.den.pow((dd - dn) as u32));
        } else if dn > dd {
            d = d.mul(&g.den.pow((dn - dd) as u32));
        }
        Self::new(n, d)
    }

    /// `f(t + a, x)`.
    pub fn shift_t(&self, a: &Rat) -> Self {
        let s = Poly::t().add(&Poly::constant(a.clone()));
        self.subs(&[(Var::T, s)])
            .expect("shift keeps denominator nonzero")
    }

    /// `f(t, x + a)`.
    pub fn shift_x(&self, a: &Rat) -> Self {
        let s = Poly::x().add(&Poly::constant(a.clone()));
        self.subs(&[(Var::X, s)])
            .expect("shift keeps denominator nonzero")
    }

    /// `f(q t, x)`.
    pub fn qscale_t(&self, q: &Rat) -> Self {
        self.subs(&[(Var::T, Poly::t().scale(q))])
            .expect("nonzero q")
    }

    /// `f(t, q x)`.
    pub fn qscale_x(&self, q: &Rat) -> Self {
        self.subs(&[(Var::X, Poly::x().scale(q))])
            .expect("nonzero q")
    }

    /// Numerator and denominator as polynomials in x over Q(t).
    pub fn to_xfrac(&self) -> (XPoly, XPoly) {
        (to_xpoly(&self.num), to_xpoly(&self.den))
    }

    pub fn from_xfrac(num: &XPoly, den: &XPoly) -> Self {
        let (n, dn) = from_xpoly(num);
        let (d, dd) = from_xpoly(den);
        Self::frac(n.mul(&upoly_to_poly_t(&dd)), d.mul(&upoly_to_poly_t(&dn)))
    }

    pub fn from_xpoly(p: &XPoly) -> Self {
        let (n, d) = from_xpoly(p);
        Self::frac(n, upoly_to_poly_t(&d))
    }

    pub fn from_urat(r: &URatFunc) -> Self {
        Self::frac(upoly_to_poly_t(r.num()), upoly_to_poly_t(r.den()))
    }

    /// The univariate fraction in t, if `self` is free of x.
    pub fn to_urat(&self) -> Option<URatFunc> {
        if self.has_var(Var::X) || self.has_var(Var::Z) || self.has_var(Var::W) {
            return None;
        }
        Some(URatFunc::new(
            self.num.to_upoly(Var::T),
            self.den.to_upoly(Var::T),
        ))
    }

    pub fn eval_t(&self, a: &Rat) -> Option<Self> {
        let d = self.den.eval(Var::T, a);
        if d.is_zero() {
            return None;
        }
        Some(Self::normalized(self.num.eval(Var::T, a), d))
    }

    /// Multiplies by `x^k`, `k` possibly negative.
    pub fn mul_x_pow(&self, k: i64) -> Self {
        if k >= 0 {
            Self::normalized(
                self.num.mul_monomial(&Monomial::var(Var::X, k as u32)),
                self.den.clone(),
            )
        } else {
            Self::normalized(
                self.num.clone(),
                self.den.mul_monomial(&Monomial::var(Var::X, (-k) as u32)),
            )
        }
    }
}

pub fn rf_t() -> RatFunc {
    RatFunc::from_poly(Poly::t())
}

pub fn rf_x() -> RatFunc {
    RatFunc::from_poly(Poly::x())
}

pub fn urat_to_rf(r: &URatFunc) -> RatFunc {
    RatFunc::from_urat(r)
}

/// `a/b` as a fraction in t.
pub fn urat(a: UPoly, b: UPoly) -> URatFunc {
    URatFunc::new(a, b)
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

#[allow(clippy::should_implement_trait)]
impl RatFunc {
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn lc_num(&self) -> Rat {
        if self.num.is_zero() {
            <Rat as Zero>::zero()
        } else {
            self.num.lc()
        }
    }

    pub fn is_unit_den(&self) -> bool {
        self.den.constant_value().is_some_and(|c| One::is_one(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    fn t() -> Poly {
        Poly::t()
    }
    fn x() -> Poly {
        Poly::x()
    }

    #[test]
    fn normal_form() {
        // (2x+2)/(-4x^2+4) = -1/(2x - 2)
        let f = RatFunc::frac(
            x().scale(&rat(2)).add(&Poly::int(2)),
            x().pow(2).scale(&rat(-4)).add(&Poly::int(4)),
        );
        assert_eq!(f.den(), &x().sub(&Poly::int(1)));
        assert_eq!(f.num(), &Poly::constant(Rat::new((-1).into(), 2.into())));
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn inverse_product() {
        let f = RatFunc::frac(x().add(&t()), x().pow(2).sub(&t()));
        assert!(f.mul(&f.inv().unwrap()).is_one());
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn substitutions() {
        let f = RatFunc::frac(Poly::one(), x().scale(&rat(2)).sub(&t()));
        let g = f.shift_t(&rat(2));
        assert_eq!(g.den(), &x().scale(&rat(2)).sub(&t()).sub(&Poly::int(2)));
        // 1/(1-t-x) with x := t/x, times nothing
        let h = RatFunc::frac(Poly::one(), Poly::one().sub(&t()).sub(&x()));
        let s = h.subs_frac(Var::X, &RatFunc::frac(t(), x())).unwrap();
        assert_eq!(s, RatFunc::frac(x(), x().sub(&t().mul(&x())).sub(&t())));
    }
}
