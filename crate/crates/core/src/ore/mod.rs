//! Skew polynomials in D_t, S_t or Q_t over Q(t).

mod ratsol;

pub use ratsol::rational_solutions;

use crate::arith::field::Field;
use crate::arith::linalg::nullspace;
use crate::arith::poly::Var;
use crate::arith::rat::{rat, valid_q, Rat};
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::XPoly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OreKind {
    /// D_t: derivation d/dt.
    D,
    /// S_t: shift t -> t + 1.
    S,
    /// Q_t: q-shift t -> q t.
    Q(Rat),
}

impl OreKind {
    pub fn q(q: Rat) -> Result<Self> {
        if !valid_q(&q) {
            return Err(Error::InvalidQ(crate::arith::rat::rat_string(&q)));
        }
        Ok(OreKind::Q(q))
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            OreKind::D => "Dt",
            OreKind::S => "St",
            OreKind::Q(_) => "Qt",
        }
    }

    /// The endomorphism sigma of the commutation rule.
    pub fn sigma(&self, a: &URatFunc) -> URatFunc {
        match self {
            OreKind::D => a.clone(),
            OreKind::S => a.shift(&rat(1)),
            OreKind::Q(q) => a.qscale(q),
        }
    }

    pub fn sigma_pow(&self, a: &URatFunc, k: usize) -> URatFunc {
        match self {
            OreKind::D => a.clone(),
            OreKind::S => a.shift(&rat(k as i64)),
            OreKind::Q(q) => a.qscale(&crate::arith::rat::rat_pow(q, k as i64)),
        }
    }

    /// The sigma-derivation of the commutation rule.
    pub fn delta(&self, a: &URatFunc) -> URatFunc {
        match self {
            OreKind::D => a.deriv(),
            _ => URatFunc::zero(),
        }
    }

    /// The action of the operator symbol on a rational function in t and x.
    pub fn act(&self, f: &RatFunc) -> RatFunc {
        match self {
            OreKind::D => f.deriv(Var::T),
            OreKind::S => f.shift_t(&rat(1)),
            OreKind::Q(q) => f.qscale_t(q),
        }
    }

    /// The action on a univariate fraction in t.
    pub fn act_urat(&self, f: &URatFunc) -> URatFunc {
        match self {
            OreKind::D => f.deriv(),
            OreKind::S => f.shift(&rat(1)),
            OreKind::Q(q) => f.qscale(q),
        }
    }

    /// The action on polynomials in x over Q(t), coefficientwise.
    pub fn act_xpoly(&self, p: &XPoly) -> XPoly {
        p.map(|c| self.act_urat(c))
    }
}

/// `sum_i coeffs[i] * d^i`, coefficients to the left.
#[derive(Clone, Debug, PartialEq)]
pub struct OrePoly {
    pub kind: OreKind,
    coeffs: Vec<URatFunc>,
}

impl OrePoly {
    pub fn new(kind: OreKind, mut coeffs: Vec<URatFunc>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OrePoly { kind, coeffs }
    }

    pub fn zero(kind: OreKind) -> Self {
        Self::new(kind, Vec::new())
    }

    pub fn one(kind: OreKind) -> Self {
        Self::scalar(kind, URatFunc::one())
    }

    pub fn scalar(kind: OreKind, c: URatFunc) -> Self {
        Self::new(kind, vec![c])
    }

    /// The bare operator symbol.
    pub fn symbol(kind: OreKind) -> Self {
        Self::new(kind, vec![URatFunc::zero(), URatFunc::one()])
    }

    /// `c * d^k`.
    pub fn monomial(kind: OreKind, c: URatFunc, k: usize) -> Self {
        let mut v = vec![URatFunc::zero(); k + 1];
        v[k] = c;
        Self::new(kind, v)
    }

    pub fn coeffs(&self) -> &[URatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> URatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(URatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> URatFunc {
        self.coeffs.last().cloned().unwrap_or_else(URatFunc::zero)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.coeffs.len().max(o.coeffs.len());
        Ok(Self::new(
            self.kind.clone(),
            (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.kind.clone(),
            self.coeffs.iter().map(|c| c.neg()).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Left multiplication by a coefficient.
    pub fn scale_left(&self, c: &URatFunc) -> Self {
        Self::new(
            self.kind.clone(),
            self.coeffs.iter().map(|a| c.mul(a)).collect(),
        )
    }

    /// `d * self`.
    fn symbol_times(&self) -> Self {
        let mut v = vec![URatFunc::zero(); self.coeffs.len() + 1];
        for (j, b) in self.coeffs.iter().enumerate() {
            v[j + 1] = v[j + 1].add(&self.kind.sigma(b));
            let d = self.kind.delta(b);
            if !d.is_zero() {
                v[j] = v[j].add(&d);
            }
        }
        Self::new(self.kind.clone(), v)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut acc = Self::zero(self.kind.clone());
        let mut pow = o.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pow = pow.symbol_times();
            }
            if !a.is_zero() {
                acc = acc.add(&pow.scale_left(a))?;
            }
        }
        Ok(acc)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale_left(&self.lc().inv())
    }

    /// Applies the operator to a rational function in t and x.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        let mut cur = f.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                cur = self.kind.act(&cur);
            }
            if !c.is_zero() {
                acc = acc.add(&RatFunc::from_urat(c).mul(&cur));
            }
        }
        acc
    }

    /// Applies the operator to a univariate fraction in t.
    pub fn apply_urat(&self, f: &URatFunc) -> URatFunc {
        let mut acc = URatFunc::zero();
        let mut cur = f.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                cur = self.kind.act_urat(&cur);
            }
            acc = acc.add(&c.mul(&cur));
        }
        acc
    }

    /// Right division: `self = q * b + r` with `order(r) < order(b)`.
    pub fn rdiv(&self, b: &Self) -> Result<(Self, Self)> {
        self.check(b)?;
        if b.is_zero() {
            return Err(Error::ZeroOperator);
        }
        let m = b.order();
        let lb = b.lc();
        let mut r = self.clone();
        let mut q = Self::zero(self.kind.clone());
        while !r.is_zero() && r.order() >= m {
            let k = r.order() - m;
            let c = r.lc().div(&self.kind.sigma_pow(&lb, k));
            let t = Self::monomial(self.kind.clone(), c, k);
            r = r.sub(&t.mul(b)?)?;
            q = q.add(&t)?;
        }
        Ok((q, r))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.rdiv(b)?.1)
    }

    /// Left-multiplies by the element of Q(t) that makes all coefficients
    /// coprime integer polynomials with a positive leading term in the top one.
    /// Returns the result and the multiplier.
    pub fn normalize_poly(&self) -> (Self, URatFunc) {
        if self.is_zero() {
            return (self.clone(), URatFunc::one());
        }
        let mut den = crate::arith::upoly::UPoly::one();
        for c in &self.coeffs {
            if !c.is_zero() {
                den = den.lcm(c.den());
            }
        }
        let cleared: Vec<URatFunc> = self
            .coeffs
            .iter()
            .map(|c| c.mul(&URatFunc::from_poly(den.clone())))
            .collect();
        // polynomial content and integer content
        let mut g = crate::arith::upoly::UPoly::zero();
        for c in &cleared {
            g = g.gcd(c.num());
        }
        let mut scale = URatFunc::from_poly(den).div(&URatFunc::from_poly(g.clone()));
        let reduced: Vec<URatFunc> = cleared
            .iter()
            .map(|c| URatFunc::from_poly(c.num().div_exact(&g)))
            .collect();
        let polys: Vec<crate::arith::poly::Poly> = reduced
            .iter()
            .map(|c| crate::arith::poly::Poly::from_upoly(c.num(), Var::T))
            .collect();
        let mut all = crate::arith::poly::Poly::zero();
        for (i, p) in polys.iter().enumerate() {
            all = all.add(&p.mul_monomial(&crate::arith::poly::Monomial::var(Var::Z, i as u32)));
        }
        // z marks the order, so the leading term sits in the top coefficient
        let content = all.rational_content();
        scale = scale.mul(&URatFunc::constant(content.recip()));
        (self.scale_left(&scale), scale)
    }
}

pub fn gcrd(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.check(b)?;
    let (mut x, mut y) = (a.clone(), b.clone());
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroOperator);
    }
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// Monic least common left multiple, by linear algebra over Q(t).
pub fn lclm(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.check(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperator);
    }
    let (m, n) = (a.order(), b.order());
    let kind = a.kind.clone();
    let mut ra = OrePoly::one(kind.clone()).rem(a)?;
    let mut rb = OrePoly::one(kind.clone()).rem(b)?;
    let mut cols: Vec<Vec<URatFunc>> = Vec::new();
    for i in 0..=(m + n) {
        if i > 0 {
            ra = ra.symbol_times().rem(a)?;
            rb = rb.symbol_times().rem(b)?;
        }
        let mut v: Vec<URatFunc> = (0..m).map(|k| ra.coeff(k)).collect();
        v.extend((0..n).map(|k| rb.coeff(k)));
        cols.push(v);
        if i < m.max(n) {
            continue;
        }
        let rows: Vec<Vec<URatFunc>> = (0..m + n)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let ker = nullspace(&rows, cols.len());
        if let Some(v) = ker.into_iter().find(|v| !v[i].is_zero()) {
            return Ok(OrePoly::new(kind, v).monic());
        }
    }
    unreachable!("the lclm has order at most order(a) + order(b)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Poly;
    use crate::arith::upoly::upoly;

    fn c(n: i64) -> URatFunc {
        URatFunc::from_rat(&rat(n))
    }
    fn t() -> URatFunc {
        URatFunc::t()
    }
    fn op(kind: OreKind, cs: Vec<URatFunc>) -> OrePoly {
        OrePoly::new(kind, cs)
    }

    #[test]
    fn commutation_rules() {
        let tt = OrePoly::scalar(OreKind::D, t());
        let d = OrePoly::symbol(OreKind::D);
        assert_eq!(d.mul(&tt).unwrap(), op(OreKind::D, vec![c(1), t()]));
        let s = OrePoly::symbol(OreKind::S);
        let ts = OrePoly::scalar(OreKind::S, t());
        assert_eq!(
            s.mul(&ts).unwrap(),
            op(OreKind::S, vec![c(0), t().add(&c(1))])
        );
        let q = OreKind::Q(rat(3));
        let qs = OrePoly::symbol(q.clone());
        assert_eq!(
            qs.mul(&OrePoly::scalar(q.clone(), t())).unwrap(),
            op(q, vec![c(0), t().mul(&c(3))])
        );
        assert!(d.mul(&s).is_err());
    }

    #[test]
    fn application() {
        let f = RatFunc::frac(Poly::one(), Poly::x().scale(&rat(2)).sub(&Poly::t()));
        let l = op(OreKind::S, vec![c(-1), c(0), c(1)]);
        let expected = f.shift_t(&rat(2)).sub(&f);
        assert_eq!(l.apply(&f), expected);
        let f = RatFunc::frac(Poly::one(), Poly::x().pow(2).sub(&Poly::t()));
        let l = op(OreKind::D, vec![c(1), t().mul(&c(2))]);
        let u = Poly::x().pow(2).sub(&Poly::t());
        assert_eq!(
            l.apply(&f),
            RatFunc::frac(Poly::x().pow(2).add(&Poly::t()), u.pow(2))
        );
        assert!(OrePoly::zero(OreKind::D).apply(&f).is_zero());
    }

    #[test]
    fn right_division() {
        let d2 = op(OreKind::D, vec![c(0), c(0), c(1)]);
        let d = OrePoly::symbol(OreKind::D);
        let (q, r) = d2.rdiv(&d).unwrap();
        assert_eq!(q, d);
        assert!(r.is_zero());
        let a = op(OreKind::S, vec![c(2), c(-3), c(1)]);
        let b = op(OreKind::S, vec![c(-1), c(1)]);
        assert!(a.rem(&b).unwrap().is_zero());
        let (q, r) = d.rdiv(&d2).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, d);
        assert!(d.rdiv(&OrePoly::zero(OreKind::D)).is_err());
    }

    #[test]
    fn gcrd_and_lclm() {
        let d2 = op(OreKind::D, vec![c(0), c(0), c(1)]);
        let d = OrePoly::symbol(OreKind::D);
        assert_eq!(gcrd(&d2, &d).unwrap(), d);
        let a = op(OreKind::S, vec![c(-1), c(1)]);
        let b = op(OreKind::S, vec![c(-2), c(1)]);
        let l = lclm(&a, &b).unwrap();
        assert_eq!(l, op(OreKind::S, vec![c(2), c(-3), c(1)]));
        let a = op(OreKind::D, vec![t(), c(1)]);
        let l = lclm(&a, &a).unwrap();
        assert_eq!(l, a);
    }

    #[test]
    fn normalize_clears_denominators() {
        let l = op(
            OreKind::D,
            vec![URatFunc::new(upoly(&[1]), upoly(&[0, 2])), c(1)],
        );
        let (n, _) = l.normalize_poly();
        assert_eq!(n, op(OreKind::D, vec![c(1), t().mul(&c(2))]));
    }
}
