//! Univariate rational functions in t, the coefficient field Q(t).

use num_traits::{One, Zero};

use super::field::Field;
use super::rat::Rat;
use super::upoly::UPoly;

/// `num/den` with `gcd = 1` and `den` monic.
#[derive(Clone, PartialEq, Debug)]
pub struct URatFunc {
    num: UPoly,
    den: UPoly,
}

impl URatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(UPoly::zero());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.deg() > 0 {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let l = d.lc();
        if !One::is_one(&l) {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        URatFunc { num: n, den: d }
    }

    pub fn from_poly(p: UPoly) -> Self {
        URatFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn t() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.deg() == 0
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.deg() <= 0 && self.den.deg() == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn deriv(&self) -> Self {
        // (n/d)' = (n' d - n d') / d^2
        let n = self
            .num
            .deriv()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.deriv()));
        Self::new(n, self.den.mul(&self.den))
    }

    /// `r(t + a)`.
    pub fn shift(&self, a: &Rat) -> Self {
        Self::new(self.num.shift(a), self.den.shift(a))
    }

    /// `r(q t)`.
    pub fn qscale(&self, q: &Rat) -> Self {
        Self::new(self.num.scale_var(q), self.den.scale_var(q))
    }

    pub fn eval(&self, a: &Rat) -> Option<Rat> {
        let d = self.den.eval(a);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(a) / d)
        }
    }

    pub fn height(&self) -> usize {
        (self.num.deg().max(0) + self.den.deg().max(0)) as usize
    }
}

impl Field for URatFunc {
    fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let d1 = self.den.div_exact(&g);
        let d2 = o.den.div_exact(&g);
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        Self::new(n, d1.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_poly() && o.is_poly() {
            let s = self.den.coeff(0) * o.den.coeff(0);
            return URatFunc {
                num: self.num.mul(&o.num).scale(&s.recip()),
                den: UPoly::one(),
            };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = self.num.div_exact(&g1).mul(&o.num.div_exact(&g2));
        let d = self.den.div_exact(&g2).mul(&o.den.div_exact(&g1));
        let l = d.lc();
        URatFunc {
            num: n.scale(&l.recip()),
            den: d.scale(&l.recip()),
        }
    }
    fn neg(&self) -> Self {
        URatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let l = self.num.lc();
        URatFunc {
            num: self.den.scale(&l.recip()),
            den: self.num.scale(&l.recip()),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(r.clone())
    }
    fn is_one(&self) -> bool {
        self.den.deg() == 0 && self.num.deg() == 0 && One::is_one(&self.num.coeff(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;
    use crate::arith::upoly::upoly;

    #[test]
    fn arithmetic_is_reduced() {
        let a = URatFunc::new(upoly(&[0, 1]), upoly(&[1, 1]));
        let b = URatFunc::new(upoly(&[1]), upoly(&[1, 1]));
        assert_eq!(a.add(&b), URatFunc::one());
        let c = URatFunc::new(upoly(&[1, 1]), upoly(&[0, 2]));
        assert_eq!(a.mul(&c), URatFunc::constant(Rat::new(1.into(), 2.into())));
        assert_eq!(a.mul(&a.inv()), URatFunc::one());
    }

    #[test]
    fn derivative_and_shifts() {
        let a = URatFunc::new(upoly(&[1]), upoly(&[0, 1]));
        assert_eq!(a.deriv(), URatFunc::new(upoly(&[-1]), upoly(&[0, 0, 1])));
        assert_eq!(a.shift(&rat(1)), URatFunc::new(upoly(&[1]), upoly(&[1, 1])));
        assert_eq!(
            a.qscale(&rat(2)),
            URatFunc::new(upoly(&[1]), upoly(&[0, 2]))
        );
    }
}
