//! Polynomials over Z/p for small primes, low degree first.

use num_bigint::BigUint;
use rand::Rng;

pub type PPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut a: PPoly) -> PPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn padd(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn psub(&self, a: &[u64], b: &[u64]) -> PPoly {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn pmul(&self, a: &[u64], b: &[u64]) -> PPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut c = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                c[i + j] = (c[i + j] + x * y) % self.p;
            }
        }
        self.trim(c)
    }

    pub fn pscale(&self, a: &[u64], s: u64) -> PPoly {
        self.trim(a.iter().map(|&x| self.mul(x, s)).collect())
    }

    pub fn pdivrem(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly) {
        assert!(!b.is_empty());
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, y));
            }
            q[k] = c;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn prem(&self, a: &[u64], b: &[u64]) -> PPoly {
        self.pdivrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.pscale(a, self.inv(l)),
        }
    }

    pub fn pgcd(&self, a: &[u64], b: &[u64]) -> PPoly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.prem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn pxgcd(&self, a: &[u64], b: &[u64]) -> (PPoly, PPoly, PPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.pdivrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().unwrap());
        (
            self.pscale(&r0, inv),
            self.pscale(&s0, inv),
            self.pscale(&t0, inv),
        )
    }

    pub fn pderiv(&self, a: &[u64]) -> PPoly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PPoly {
        let mut r: PPoly = vec![1];
        let b = self.prem(base, m);
        for i in (0..e.bits()).rev() {
            r = self.prem(&self.pmul(&r, &r), m);
            if e.bit(i) {
                r = self.prem(&self.pmul(&r, &b), m);
            }
        }
        r
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn ddf(&self, f: &[u64]) -> Vec<(PPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x: PPoly = vec![0, 1];
        let mut h = x.clone();
        let pb = BigUint::from(self.p);
        let mut i = 1;
        while f.len() > 1 && 2 * i <= f.len() - 1 {
            h = self.powmod(&h, &pb, &f);
            let g = self.pgcd(&self.psub(&h, &x), &f);
            if g.len() > 1 {
                out.push((g.clone(), i));
                f = self.pdivrem(&f, &g).0;
                h = self.prem(&h, &f);
            }
            i += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((f, d));
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus), odd p.
    pub fn edf<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<PPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PPoly = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let g = self.pgcd(&a, f);
            let g = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.psub(&self.powmod(&a, &e, f), &[1]);
                self.pgcd(&b, f)
            };
            if g.len() > 1 && g.len() < f.len() {
                let h = self.pdivrem(f, &g).0;
                let mut out = self.edf(&g, d, rng);
                out.extend(self.edf(&h, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PPoly> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn splits_over_small_field() {
        let f = Fp { p: 7 };
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 is irreducible since -1 is a non-residue
        let g = f.pmul(&f.pmul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let fs = f.factor(&g, &mut rng);
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }
}
