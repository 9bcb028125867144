//! Factorization over Q: modular factorization, Hensel lifting, recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PPoly};
use super::{subsets, UFactorization};
use crate::arith::rat::Rat;
use crate::arith::upoly::{from_zpoly, to_zpoly, z_primitive, UPoly, ZPoly};

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Complete factorization over Q into monic irreducibles.
pub fn factor_univariate(f: &UPoly) -> UFactorization {
    let unit = f.lc();
    let mut factors = Vec::new();
    for (s, m) in f.squarefree() {
        for g in factor_squarefree(&s) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.deg(), &a.0.coeffs().to_vec())
            .partial_cmp(&(b.0.deg(), &b.0.coeffs().to_vec()))
            .unwrap()
    });
    UFactorization { unit, factors }
}

fn reduce(p: &[BigInt], m: u64) -> PPoly {
    let fp = Fp { p: m };
    let mb = BigInt::from(m);
    fp.trim(
        p.iter()
            .map(|a| a.mod_floor(&mb).to_u64().unwrap())
            .collect(),
    )
}

/// Irreducible monic factors of a squarefree polynomial.
fn factor_squarefree(f: &UPoly) -> Vec<UPoly> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let (_, z) = to_zpoly(f);
    // x divides: split it off so the modular image stays informative
    if z[0].is_zero() {
        let rest = from_zpoly(&z[1..]);
        let mut out = vec![UPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    factor_z(&z)
        .into_iter()
        .map(|g| from_zpoly(&g).monic())
        .collect()
}

fn factor_z(f: &ZPoly) -> Vec<ZPoly> {
    let d = f.len() - 1;
    if d <= 1 {
        return vec![f.clone()];
    }
    let lc = f[d].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<PPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp { p };
        let fb = fp.monic(&reduce(f, p));
        if fb.len() != d + 1 || fp.pgcd(&fb, &fp.pderiv(&fb)).len() != 1 {
            continue;
        }
        let fs = fp.factor(&fb, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, mods) = match best {
        Some(b) => b,
        None => return big_prime_fallback(f),
    };
    if mods.len() == 1 {
        return vec![f.clone()];
    }
    let norm = f.iter().map(|a| a.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << d) * BigInt::from(d + 1) * norm * 2;
    let (lifted, modulus) = hensel_lift(f, p, &mods, &bound);
    recombine(f, lifted, &modulus)
}

/// Primes from the table all divide the leading coefficient or the discriminant;
/// continue with larger primes.
fn big_prime_fallback(f: &ZPoly) -> Vec<ZPoly> {
    let d = f.len() - 1;
    let lc = f[d].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut p = 101u64;
    loop {
        if is_prime(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = Fp { p };
            let fb = fp.monic(&reduce(f, p));
            if fb.len() == d + 1 && fp.pgcd(&fb, &fp.pderiv(&fb)).len() == 1 {
                let mods = fp.factor(&fb, &mut rng);
                if mods.len() == 1 {
                    return vec![f.clone()];
                }
                let norm = f.iter().map(|a| a.abs()).max().unwrap();
                let bound = lc.abs() * (BigInt::one() << d) * BigInt::from(d + 1) * norm * 2;
                let (lifted, modulus) = hensel_lift(f, p, &mods, &bound);
                return recombine(f, lifted, &modulus);
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|i| i * i <= n).all(|i| n % i != 0)
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Linear Hensel lifting of `f = lc * prod(u_i) mod p` to a modulus exceeding `bound`.
fn hensel_lift(f: &ZPoly, p: u64, mods: &[PPoly], bound: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let fp = Fp { p };
    let pb = BigInt::from(p);
    let d = f.len() - 1;
    let lc = f[d].clone();
    let lc_inv = fp.inv(lc.mod_floor(&pb).to_u64().unwrap());
    let r = mods.len();
    // v_i = (prod_{j != i} u_j)^{-1} mod u_i
    let mut v = Vec::with_capacity(r);
    for i in 0..r {
        let mut prod: PPoly = vec![1];
        for (j, u) in mods.iter().enumerate() {
            if j != i {
                prod = fp.pmul(&prod, u);
            }
        }
        let (_, s, _) = fp.pxgcd(&fp.prem(&prod, &mods[i]), &mods[i]);
        v.push(s);
    }
    let mut fs: Vec<ZPoly> = mods
        .iter()
        .map(|u| u.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut modulus = pb.clone();
    while &modulus <= bound {
        let mut prod = vec![lc.clone()];
        for g in &fs {
            prod = zmul(&prod, g);
        }
        let e: Vec<BigInt> = (0..d).map(|k| (&f[k] - &prod[k]) / &modulus).collect();
        let eb = fp.pscale(&reduce(&e, p), lc_inv);
        for i in 0..r {
            let delta = fp.prem(&fp.pmul(&eb, &v[i]), &mods[i]);
            for (k, c) in delta.iter().enumerate() {
                fs[i][k] += &modulus * BigInt::from(*c);
            }
        }
        modulus *= &pb;
    }
    for g in fs.iter_mut() {
        for c in g.iter_mut() {
            *c = symmetric(c, &modulus);
        }
    }
    (fs, modulus)
}

fn zdivides(g: &ZPoly, f: &ZPoly) -> Option<ZPoly> {
    if g.len() > f.len() {
        return None;
    }
    // cheap constant-term filter
    if !g[0].is_zero() && !(&f[0] % &g[0]).is_zero() {
        return None;
    }
    let (q, r) = from_zpoly(f).divrem(&from_zpoly(g));
    if !r.is_zero() || q.coeffs().iter().any(|c: &Rat| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut cur = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        let lc = cur.last().unwrap().clone();
        for sub in subsets(lifted.len(), s) {
            let mut g = vec![lc.clone()];
            for &i in &sub {
                g = zmul(&g, &lifted[i]);
            }
            let g: Vec<BigInt> = g.iter().map(|c| symmetric(c, m)).collect();
            let g = z_primitive(&g);
            if let Some(q) = zdivides(&g, &cur) {
                found = Some((sub, g, q));
                break;
            }
        }
        match found {
            Some((sub, g, q)) => {
                out.push(g);
                cur = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !sub.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    let cur = z_primitive(&cur);
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::upoly::upoly;

    fn product(fs: &UFactorization) -> UPoly {
        let mut acc = UPoly::constant(fs.unit.clone());
        for (g, m) in &fs.factors {
            acc = acc.mul(&g.pow(*m));
        }
        acc
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime
        let f = upoly(&[1, 0, -10, 0, 1]);
        let fs = factor_univariate(&f);
        assert_eq!(fs.factors.len(), 1);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn mixed_product() {
        let f = upoly(&[-1, 2])
            .mul(&upoly(&[1, 0, 1]).pow(2))
            .mul(&upoly(&[-2, 0, 0, 1]))
            .mul(&upoly(&[3, 5, 0, 0, 0, 7]))
            .scale(&crate::arith::rat::rat(-6));
        let fs = factor_univariate(&f);
        assert_eq!(fs.factors.len(), 4);
        assert_eq!(product(&fs), f);
        for (g, _) in &fs.factors {
            assert_eq!(factor_univariate(g).factors.len(), 1);
        }
    }

    #[test]
    fn cyclotomic() {
        // x^12 - 1 = product of six cyclotomic polynomials
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let fs = factor_univariate(&upoly(&c));
        assert_eq!(fs.factors.len(), 6);
    }
}
