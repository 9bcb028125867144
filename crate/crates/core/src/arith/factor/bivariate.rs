//! Factorization in Q[t,x]: evaluate t, factor over Q, Hensel-lift in t, recombine.

use num_traits::Zero;

use super::{factor_univariate, subsets, Factorization};
use crate::arith::field::Field;
use crate::arith::poly::{squarefree_decomp, Monomial, Poly, Var};
use crate::arith::rat::{rat, Rat};
use crate::arith::upoly::UPoly;
use crate::{Error, Result};

pub const DEGREE_CAP: i64 = 30;

pub fn factor_bivariate(p: &Poly) -> Result<Factorization> {
    assert!(!p.is_zero(), "factorization of zero");
    assert!(
        !p.has_var(Var::Z) && !p.has_var(Var::W),
        "factor_bivariate expects t and x only"
    );
    for v in [Var::T, Var::X] {
        if p.degree(v) > DEGREE_CAP {
            return Err(Error::DegreeCap {
                var: v.name(),
                degree: p.degree(v) as usize,
                cap: DEGREE_CAP as usize,
            });
        }
    }
    let mut out: Vec<(Poly, u32)> = Vec::new();
    let q = p.normalize();
    let cx = q.content_in(Var::X);
    for (g, m) in factor_univariate(&cx.to_upoly(Var::T)).factors {
        out.push((Poly::from_upoly(&g, Var::T).normalize(), m));
    }
    let q1 = q.div_exact(&cx).unwrap();
    let ct = q1.content_in(Var::T);
    for (g, m) in factor_univariate(&ct.to_upoly(Var::X)).factors {
        out.push((Poly::from_upoly(&g, Var::X).normalize(), m));
    }
    let q2 = q1.div_exact(&ct).unwrap();
    if q2.has_var(Var::X) {
        for (s, m) in squarefree_decomp(&q2, Var::X).factors {
            for f in factor_primitive_squarefree(&s) {
                out.push((f, m));
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.total_degree()
            .cmp(&b.0.total_degree())
            .then_with(|| cmp_poly(&a.0, &b.0))
    });
    let mut prod = Poly::one();
    for (f, m) in &out {
        prod = prod.mul(&f.pow(*m));
    }
    let content = p
        .div_exact(&prod)
        .and_then(|c| c.constant_value())
        .expect("factorization reproduces input");
    Ok(Factorization {
        content,
        factors: out,
    })
}

fn cmp_poly(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    let ka: Vec<(Monomial, Rat)> = a.terms().rev().map(|(m, c)| (*m, c.clone())).collect();
    let kb: Vec<(Monomial, Rat)> = b.terms().rev().map(|(m, c)| (*m, c.clone())).collect();
    ka.cmp(&kb)
}

/// Irreducible factors of `s`, squarefree and primitive in both variables.
fn factor_primitive_squarefree(s: &Poly) -> Vec<Poly> {
    let s = s.normalize();
    if s.degree(Var::X) <= 1 || s.degree(Var::T) <= 1 {
        return vec![s];
    }
    let lcx = s.lc_in(Var::X).to_upoly(Var::T);
    let d = s.degree(Var::X);
    let mut a = None;
    for k in 0..200i64 {
        let c = if k % 2 == 0 {
            rat(k / 2)
        } else {
            rat(-(k + 1) / 2)
        };
        if Zero::is_zero(&lcx.eval(&c)) {
            continue;
        }
        let sa = s.eval(Var::T, &c).to_upoly(Var::X);
        if sa.deg() as i64 == d && sa.gcd(&sa.deriv()).deg() == 0 {
            a = Some(c);
            break;
        }
    }
    let a = a.expect("a good evaluation point exists for a squarefree polynomial");
    let sa = s.eval(Var::T, &a).to_upoly(Var::X);
    let uni: Vec<UPoly> = factor_univariate(&sa)
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if uni.len() == 1 {
        return vec![s];
    }
    // T = t - a
    let shifted = s.subs(Var::T, &Poly::t().add(&Poly::constant(a.clone())));
    let lc_t = shifted.lc_in(Var::X).to_upoly(Var::T);
    let bound = (lc_t.deg() + shifted.degree(Var::T) as isize + 1) as usize;
    let lifted = hensel_in_t(&shifted, &uni, bound);
    let found = recombine(&shifted, &lifted, bound);
    let back = Poly::t().sub(&Poly::constant(a));
    found
        .into_iter()
        .map(|g| g.subs(Var::T, &back).normalize())
        .collect()
}

/// Series in T with coefficients in Q[x]; index = power of T.
type Series = Vec<UPoly>;

fn series_of(p: &Poly, n: usize) -> Series {
    let mut out = vec![UPoly::zero(); n];
    for (k, c) in p.coeffs_in(Var::T).into_iter().enumerate() {
        if k < n {
            out[k] = c.to_upoly(Var::X);
        }
    }
    out
}

fn series_mul(a: &Series, b: &Series, n: usize) -> Series {
    let mut out = vec![UPoly::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// Inverse of a univariate power series with nonzero constant term, mod T^n.
fn inv_series(p: &UPoly, n: usize) -> Vec<Rat> {
    let c0 = p.coeff(0).inv();
    let mut out = vec![<Rat as Zero>::zero(); n];
    out[0] = c0.clone();
    for k in 1..n {
        let mut acc = <Rat as Zero>::zero();
        for j in 1..=k {
            acc += p.coeff(j) * &out[k - j];
        }
        out[k] = -acc * &c0;
    }
    out
}

fn hensel_in_t(s: &Poly, uni: &[UPoly], n: usize) -> Vec<Series> {
    let lc = s.lc_in(Var::X).to_upoly(Var::T);
    let linv = inv_series(&lc, n);
    let linv_s: Series = linv.iter().map(|c| UPoly::constant(c.clone())).collect();
    let monic = series_mul(&series_of(s, n), &linv_s, n);
    let r = uni.len();
    let mut v = Vec::with_capacity(r);
    for i in 0..r {
        let mut prod = UPoly::one();
        for (j, u) in uni.iter().enumerate() {
            if j != i {
                prod = prod.mul(u);
            }
        }
        v.push(prod.inv_mod(&uni[i]).expect("modular factors are coprime"));
    }
    let mut fs: Vec<Series> = uni
        .iter()
        .map(|u| {
            let mut s = vec![UPoly::zero(); n];
            s[0] = u.clone();
            s
        })
        .collect();
    for k in 1..n {
        let mut prod: Series = vec![UPoly::one()];
        for f in &fs {
            prod = series_mul(&prod, f, k + 1);
        }
        let e = monic[k].sub(&prod[k]);
        if e.is_zero() {
            continue;
        }
        for i in 0..r {
            fs[i][k] = e.mul(&v[i]).rem(&uni[i]);
        }
    }
    fs
}

fn series_to_poly(s: &Series) -> Poly {
    let mut p = Poly::zero();
    for (k, c) in s.iter().enumerate() {
        p = p.add(&Poly::from_upoly(c, Var::X).mul_monomial(&Monomial::var(Var::T, k as u32)));
    }
    p
}

fn recombine(s: &Poly, lifted: &[Series], n: usize) -> Vec<Poly> {
    let mut remaining: Vec<Series> = lifted.to_vec();
    let mut cur = s.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let lc = series_of(&cur.lc_in(Var::X), n);
        let mut hit = None;
        for sub in subsets(remaining.len(), size) {
            let mut g = lc.clone();
            for &i in &sub {
                g = series_mul(&g, &remaining[i], n);
            }
            let cand = series_to_poly(&g);
            if !cand.has_var(Var::X) {
                continue;
            }
            let cand = cand.primitive_in(Var::X);
            if let Some(q) = cur.div_exact(&cand) {
                hit = Some((sub, cand, q));
                break;
            }
        }
        match hit {
            Some((sub, cand, q)) => {
                out.push(cand);
                cur = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !sub.contains(i))
                    .map(|(_, f)| f)
                    .collect();
            }
            None => size += 1,
        }
    }
    if cur.has_var(Var::X) {
        out.push(cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Poly {
        Poly::t()
    }
    fn x() -> Poly {
        Poly::x()
    }
    fn c(n: i64) -> Poly {
        Poly::int(n)
    }

    fn reconstruct(f: &Factorization) -> Poly {
        let mut acc = Poly::constant(f.content.clone());
        for (g, m) in &f.factors {
            acc = acc.mul(&g.pow(*m));
        }
        acc
    }

    #[test]
    fn spec_examples() {
        let p = t().pow(2).add(&x().pow(2));
        assert_eq!(factor_bivariate(&p).unwrap().factors, vec![(p.clone(), 1)]);
        let p = x().pow(2).sub(&t().pow(2));
        let f = factor_bivariate(&p).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(reconstruct(&f), p);
        let p = x().scale(&rat(2)).sub(&t());
        let f = factor_bivariate(&p).unwrap();
        assert_eq!(f.factors, vec![(p.clone(), 1)]);
        assert_eq!(f.content, Rat::one());
    }

    #[test]
    fn needs_true_recombination() {
        // (x^2 - t)(x^2 - 2t^3 - 1)(t x + 3): every factor is irreducible over Q
        let a = x().pow(2).sub(&t());
        let b = x().pow(2).sub(&t().pow(3).scale(&rat(2))).sub(&c(1));
        let d = t().mul(&x()).add(&c(3));
        let p = a
            .mul(&b)
            .mul(&d)
            .mul(&a)
            .scale(&rat(-7))
            .mul(&t().add(&c(1)));
        let f = factor_bivariate(&p).unwrap();
        assert_eq!(reconstruct(&f), p);
        assert_eq!(f.factors.len(), 4);
        assert!(f.factors.contains(&(a.clone(), 2)));
        assert!(f.factors.contains(&(b.normalize(), 1)));
    }

    #[test]
    fn degree_cap() {
        let p = x().pow(31).add(&t());
        assert!(factor_bivariate(&p).is_err());
    }
}
