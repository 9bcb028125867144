//! Univariate polynomials over Q; gcds go through Z[x].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::DensePoly;
use super::rat::{lcm_big, Rat};

pub type UPoly = DensePoly<Rat>;

/// Integer polynomial, low degree first, no trailing zeros.
pub type ZPoly = Vec<BigInt>;

pub fn upoly(c: &[i64]) -> UPoly {
    UPoly::new(c.iter().map(|&a| super::rat::rat(a)).collect())
}

pub fn z_trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|a| a.is_zero()) {
        p.pop();
    }
    p
}

pub fn z_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for a in p {
        g = g.gcd(a);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn z_primitive(p: &[BigInt]) -> ZPoly {
    let mut g = z_content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.iter().map(|a| a / &g).collect()
}

/// Writes `p = c * P` with `P` integer-primitive with positive leading coefficient.
pub fn to_zpoly(p: &UPoly) -> (Rat, ZPoly) {
    if p.is_zero() {
        return (Rat::zero(), Vec::new());
    }
    let mut l = BigInt::one();
    for a in p.coeffs() {
        l = lcm_big(&l, a.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|a| (a * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let prim = z_primitive(&ints);
    let c = p.lc() / Rat::from_integer(prim.last().unwrap().clone());
    (c, prim)
}

pub fn from_zpoly(p: &[BigInt]) -> UPoly {
    UPoly::new(p.iter().map(|a| Rat::from_integer(a.clone())).collect())
}

/// Pseudo-remainder of integer polynomials.
pub fn z_prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: ZPoly = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for a in r.iter_mut() {
            *a *= &lb;
        }
        for (j, c) in b.iter().enumerate() {
            r[k + j] -= &lr * c;
        }
        r = z_trim(r);
    }
    r
}

impl DensePoly<Rat> {
    /// Monic gcd, computed modularly in Z[x].
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.is_constant() || o.is_constant() {
            return Self::one();
        }
        let (_, a) = to_zpoly(self);
        let (_, b) = to_zpoly(o);
        from_zpoly(&super::modgcd::z_gcd(&a, &b)).monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        self.mul(o).div_exact(&self.gcd(o)).monic()
    }

    /// Yun's algorithm: monic squarefree factors with multiplicities.
    pub fn squarefree(&self) -> Vec<(UPoly, u32)> {
        let mut out = Vec::new();
        if self.deg() <= 0 {
            return out;
        }
        let f = self.monic();
        let df = f.deriv();
        let b = f.gcd(&df);
        let mut c = f.div_exact(&b);
        let mut d = df.div_exact(&b).sub(&c.deriv());
        let mut i = 1;
        while c.deg() > 0 {
            let a = c.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a);
            d = d.div_exact(&a).sub(&c.deriv());
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> UPoly {
        let mut acc = UPoly::one();
        for (f, _) in self.squarefree() {
            acc = acc.mul(&f);
        }
        acc
    }

    /// Multiplicity of the factor `u` in `self` (self nonzero).
    pub fn valuation(&self, u: &UPoly) -> u32 {
        let mut p = self.clone();
        let mut v = 0;
        loop {
            let (q, r) = p.divrem(u);
            if !r.is_zero() {
                return v;
            }
            p = q;
            v += 1;
        }
    }

    /// Rational roots without multiplicity, ascending.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut out: Vec<Rat> = Vec::new();
        if self.deg() <= 0 {
            return out;
        }
        for (f, _) in super::factor::factor_univariate(self).factors {
            if f.deg() == 1 {
                out.push(-f.coeff(0) / f.coeff(1));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn integer_roots(&self) -> Vec<BigInt> {
        self.rational_roots()
            .into_iter()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, ratio};

    #[test]
    fn gcd_matches_euclid() {
        let a = upoly(&[-1, 0, 1]).mul(&upoly(&[3, 7, 2]));
        let b = upoly(&[1, 1])
            .mul(&upoly(&[3, 7, 2]))
            .mul(&upoly(&[5, 0, 0, 1]));
        assert_eq!(a.gcd(&b), a.gcd_euclid(&b));
        assert_eq!(a.gcd(&b), upoly(&[3, 7, 2]).monic().mul(&upoly(&[1, 1])));
    }

    #[test]
    fn yun() {
        // (x-1)(x+2)^3
        let f = upoly(&[-1, 1]).mul(&upoly(&[2, 1]).pow(3)).scale(&rat(5));
        let s = f.squarefree();
        assert_eq!(s, vec![(upoly(&[-1, 1]), 1), (upoly(&[2, 1]), 3)]);
    }

    #[test]
    fn roots() {
        let f = upoly(&[-1, 2]).mul(&upoly(&[3, 1])).mul(&upoly(&[1, 0, 1]));
        assert_eq!(f.rational_roots(), vec![rat(-3), ratio(1, 2)]);
        assert_eq!(f.integer_roots(), vec![BigInt::from(-3)]);
    }
}
