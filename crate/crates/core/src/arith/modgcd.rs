//! Gcd in Z[x] from images modulo word-size primes.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::upoly::{z_primitive, z_trim, ZPoly};

fn primes() -> &'static [u64] {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| {
        let is_prime = |n: u64| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        ((1u64 << 30)..(1u64 << 31))
            .rev()
            .filter(|&n| n % 2 == 1 && is_prime(n))
            .take(400)
            .collect()
    })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over F_p.
fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        let db = b.len() - 1;
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = a.last().unwrap() * inv % p;
            for (j, &bj) in b.iter().enumerate() {
                a[k + j] = (a[k + j] + p - c * bj % p) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|c| c * inv % p).collect()
}

/// Whether `g` divides `a` in Z[x]; `g` is primitive.
fn z_divides(a: &[BigInt], g: &[BigInt]) -> bool {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r: ZPoly = a.to_vec();
    while r.len() > dg {
        let (q, m) = r.last().unwrap().div_mod_floor(lg);
        if !m.is_zero() {
            return false;
        }
        let k = r.len() - 1 - dg;
        for (j, c) in g.iter().enumerate() {
            r[k + j] -= &q * c;
        }
        r = z_trim(r);
    }
    r.is_empty()
}

/// Gcd of nonzero integer-primitive polynomials, primitive with positive leading coefficient.
pub fn z_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut deg = usize::MAX;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    for &p in primes() {
        let gp = gamma.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let (ap, bp) = (reduce(a, p), reduce(b, p));
        if gp == 0 || ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        let g = gcd_p(&ap, &bp, p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > deg {
            continue;
        }
        let img: Vec<u64> = g.iter().map(|c| c * gp % p).collect();
        if d < deg {
            deg = d;
            acc = img.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            symmetric(&mut acc, &modulus);
            continue;
        }
        let pb = BigInt::from(p);
        let minv = BigInt::from(inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p));
        let next_mod = &modulus * &pb;
        let mut changed = false;
        for (c, &r) in acc.iter_mut().zip(&img) {
            let t = ((BigInt::from(r) - &*c) * &minv).mod_floor(&pb);
            if !t.is_zero() {
                changed = true;
                *c += &modulus * t;
            }
        }
        modulus = next_mod;
        symmetric(&mut acc, &modulus);
        if !changed {
            let cand = z_primitive(&acc);
            if z_divides(a, &cand) && z_divides(b, &cand) {
                return cand;
            }
        }
    }
    unreachable!("ran out of primes")
}

fn symmetric(v: &mut [BigInt], m: &BigInt) {
    let half: BigInt = m >> 1;
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
        if *c > half {
            *c -= m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        c.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn small_cases() {
        // (x+1)(x-2) and (x+1)(3x+5)
        assert_eq!(z_gcd(&z(&[-2, -1, 1]), &z(&[5, 8, 3])), z(&[1, 1]));
        assert_eq!(z_gcd(&z(&[1, 0, 1]), &z(&[-1, 0, 1])), z(&[1]));
        // 6x^2 - x - 1 = (3x+1)(2x-1), 4x^2 - 1
        assert_eq!(z_gcd(&z(&[-1, -1, 6]), &z(&[-1, 0, 4])), z(&[-1, 2]));
    }

    #[test]
    fn large_coefficients() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 40) + 7;
        let g = vec![big.clone(), BigInt::from(3), BigInt::from(1)];
        let mul = |p: &[BigInt], q: &[BigInt]| {
            let mut r = vec![BigInt::zero(); p.len() + q.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    r[i + j] += a * b;
                }
            }
            r
        };
        let a = mul(&g, &z(&[-5, 0, 7]));
        let b = mul(&g, &z(&[11, 2]));
        assert_eq!(z_gcd(&a, &b), g);
        assert!(*z_gcd(&a, &b).last().unwrap() > BigInt::zero());
    }
}
