//! Rational solutions of linear operators: denominator bound, degree bound, linear solve.

use num_traits::{One, Zero};

use super::{OreKind, OrePoly};
use crate::arith::factor::factor_univariate;
use crate::arith::field::Field;
use crate::arith::linalg::nullspace;
use crate::arith::rat::{binomial, int, q_log, rat, rat_pow, Rat};
use crate::arith::ufrac::URatFunc;
use crate::arith::upoly::UPoly;

/// A Q-basis of the rational solutions of `l(y) = 0`.
pub fn rational_solutions(l: &OrePoly) -> Vec<URatFunc> {
    if l.is_zero() {
        return Vec::new();
    }
    let (norm, _) = l.normalize_poly();
    let a: Vec<UPoly> = norm.coeffs().iter().map(|c| c.num().clone()).collect();
    if a.len() == 1 {
        return Vec::new();
    }
    let k = a.iter().position(|c| !c.is_zero()).unwrap();
    match &l.kind {
        OreKind::D => solve(l, denominator_d(&a), degree_bound_d(&a)),
        OreKind::S => {
            // L = M * S^k, and y solves L iff y(t+k) solves M
            let b = &a[k..];
            let m = OrePoly::new(
                OreKind::S,
                b.iter().map(|p| URatFunc::from_poly(p.clone())).collect(),
            );
            let sols = solve(&m, denominator_s(b), degree_bound_s(b));
            sols.into_iter()
                .map(|y| y.shift(&rat(-(k as i64))))
                .collect()
        }
        OreKind::Q(q) => {
            let b = &a[k..];
            let m = OrePoly::new(
                l.kind.clone(),
                b.iter().map(|p| URatFunc::from_poly(p.clone())).collect(),
            );
            let (den, lo) = denominator_q(b, q);
            let hi = degree_bound_q(b, q);
            let bound = match (hi, lo) {
                (Some(h), Some(_)) => Some(h),
                _ => None,
            };
            let sols = solve(&m, den, bound);
            sols.into_iter()
                .map(|y| y.qscale(&rat_pow(q, -(k as i64))))
                .collect()
        }
    }
}

/// Solves for `y = p/den` with `deg y <= bound`.
fn solve(l: &OrePoly, den: UPoly, bound: Option<i64>) -> Vec<URatFunc> {
    let Some(b) = bound else { return Vec::new() };
    let n = b + den.deg() as i64;
    if n < 0 {
        return Vec::new();
    }
    let n = n as usize;
    let imgs: Vec<URatFunc> = (0..=n)
        .map(|k| {
            l.apply_urat(&URatFunc::new(
                UPoly::monomial(<Rat as One>::one(), k),
                den.clone(),
            ))
        })
        .collect();
    let mut common = UPoly::one();
    for r in &imgs {
        if !r.is_zero() {
            common = common.lcm(r.den());
        }
    }
    let nums: Vec<UPoly> = imgs
        .iter()
        .map(|r| r.num().mul(&common.div_exact(r.den())))
        .collect();
    let rows = nums
        .iter()
        .map(|p| p.deg().max(0) as usize + 1)
        .max()
        .unwrap_or(1);
    let mat: Vec<Vec<Rat>> = (0..rows)
        .map(|i| nums.iter().map(|p| p.coeff(i)).collect())
        .collect();
    let mut out: Vec<URatFunc> = nullspace(&mat, n + 1)
        .into_iter()
        .map(|v| {
            let y = URatFunc::new(UPoly::new(v), den.clone());
            let c = y.num().lc();
            URatFunc::new(y.num().scale(&c.recip()), y.den().clone())
        })
        .collect();
    out.sort_by_key(|y| (y.num().deg(), y.den().deg()));
    out
}

/// Coefficients of `prod_{j<i} (s*m - j)` as a polynomial in m, with `s = +-1`.
fn falling(i: usize, sign: i64) -> UPoly {
    let mut p = UPoly::one();
    for j in 0..i {
        p = p.mul(&UPoly::new(vec![rat(-(j as i64)), rat(sign)]));
    }
    p
}

/// Largest integer root, if any.
fn max_int_root(p: &UPoly) -> Option<i64> {
    p.integer_roots()
        .into_iter()
        .map(|r| i64::try_from(r).expect("indicial root fits in i64"))
        .max()
}

/// Indicial polynomial at infinity for coefficients `b_i` acting like `Delta^i` on `t^d`.
fn infinity_bound(b: &[UPoly]) -> Option<i64> {
    let s = b
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| c.deg() as i64 - i as i64)
        .max()?;
    let mut chi = UPoly::zero();
    for (i, c) in b.iter().enumerate() {
        if !c.is_zero() && c.deg() as i64 - i as i64 == s {
            chi = chi.add(&falling(i, 1).scale(&c.lc()));
        }
    }
    max_int_root(&chi)
}

fn degree_bound_d(a: &[UPoly]) -> Option<i64> {
    infinity_bound(a)
}

fn degree_bound_s(a: &[UPoly]) -> Option<i64> {
    // rewrite in Delta = S - 1: S^i = sum_k C(i,k) Delta^k
    let n = a.len();
    let b: Vec<UPoly> = (0..n)
        .map(|k| {
            let mut acc = UPoly::zero();
            for (i, c) in a.iter().enumerate().skip(k) {
                acc = acc.add(&c.scale(&int(&binomial(i as u64, k as u64))));
            }
            acc
        })
        .collect();
    infinity_bound(&b)
}

/// Poles only at roots of the leading coefficient, with orders from the local indicial equation.
fn denominator_d(a: &[UPoly]) -> UPoly {
    let lead = a.last().unwrap();
    let mut den = UPoly::one();
    for (u, _) in factor_univariate(lead).factors {
        let du = u.deriv();
        let vals: Vec<Option<i64>> = a
            .iter()
            .map(|c| {
                if c.is_zero() {
                    None
                } else {
                    Some(c.valuation(&u) as i64)
                }
            })
            .collect();
        let s = vals
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| v - i as i64))
            .min()
            .unwrap();
        let mut chi: Vec<UPoly> = Vec::new();
        for (i, c) in a.iter().enumerate() {
            let Some(v) = vals[i] else { continue };
            if v - i as i64 != s {
                continue;
            }
            let w = c.div_exact(&u.pow(v as u32)).rem(&u);
            let ci = w.mul(&du.pow(i as u32)).rem(&u);
            for (k, f) in falling(i, -1).coeffs().iter().enumerate() {
                if chi.len() <= k {
                    chi.resize(k + 1, UPoly::zero());
                }
                chi[k] = chi[k].add(&ci.scale(f)).rem(&u);
            }
        }
        // each power of t in Q[t]/(u) gives a rational polynomial in m
        let mut g = UPoly::zero();
        for j in 0..u.deg().max(1) as usize {
            let p = UPoly::new(chi.iter().map(|c| c.coeff(j)).collect());
            g = g.gcd(&p);
        }
        if let Some(m) = max_int_root(&g).filter(|&m| m > 0) {
            den = den.mul(&u.pow(m as u32));
        }
    }
    den
}

/// Monic irreducible factors of `p` other than t.
fn factors_off_zero(p: &UPoly) -> Vec<UPoly> {
    irreducibles(p)
        .into_iter()
        .filter(|f| *f != UPoly::x())
        .collect()
}

fn strip_t(p: &UPoly) -> UPoly {
    let k = p
        .coeffs()
        .iter()
        .position(|c| !Zero::is_zero(c))
        .unwrap_or(0);
    UPoly::new(p.coeffs()[k..].to_vec())
}

fn irreducibles(p: &UPoly) -> Vec<UPoly> {
    factor_univariate(p)
        .factors
        .into_iter()
        .map(|(f, _)| f)
        .collect()
}

fn shift_distances(a: &UPoly, b: &UPoly) -> Vec<i64> {
    let mut hs = Vec::new();
    for f in irreducibles(a) {
        for g in irreducibles(b) {
            if f.deg() != g.deg() || f.deg() < 1 {
                continue;
            }
            let d = f.deg() as usize;
            let h = (f.coeff(d - 1) - g.coeff(d - 1)) / rat(d as i64);
            if h.is_integer() && h >= <Rat as Zero>::zero() && g.shift(&h) == f {
                hs.push(i64::try_from(h.to_integer()).unwrap());
            }
        }
    }
    hs.sort_unstable();
    hs.dedup();
    hs
}

/// Abramov's universal denominator for the shift case.
fn denominator_s(a: &[UPoly]) -> UPoly {
    let n = a.len() - 1;
    let mut aa = a[n].shift(&rat(-(n as i64)));
    let mut bb = a[0].clone();
    let mut u = UPoly::one();
    for h in shift_distances(&aa, &bb).into_iter().rev() {
        let d = aa.gcd(&bb.shift(&rat(h)));
        if d.deg() <= 0 {
            continue;
        }
        aa = aa.div_exact(&d);
        bb = bb.div_exact(&d.shift(&rat(-h)));
        for i in 0..=h {
            u = u.mul(&d.shift(&rat(-i)));
        }
    }
    u
}

fn q_distances(a: &UPoly, b: &UPoly, q: &Rat) -> Vec<i64> {
    let mut hs = Vec::new();
    for f in factors_off_zero(a) {
        for g in factors_off_zero(b) {
            if f.deg() != g.deg() || f.deg() < 1 {
                continue;
            }
            // g(q^h t)/q^{h d} monic; constant terms give q^{h d} = g0/f0
            let d = f.deg() as i64;
            let Some(hd) = q_log(q, &(g.coeff(0) / f.coeff(0))) else {
                continue;
            };
            if hd < 0 || hd % d != 0 {
                continue;
            }
            let h = hd / d;
            if g.scale_var(&rat_pow(q, h)).monic() == f {
                hs.push(h);
            }
        }
    }
    hs.sort_unstable();
    hs.dedup();
    hs
}

/// q-analogue of the universal denominator; also returns the least admissible valuation at 0.
fn denominator_q(a: &[UPoly], q: &Rat) -> (UPoly, Option<i64>) {
    let n = a.len() - 1;
    let mut aa = strip_t(&a[n].scale_var(&rat_pow(q, -(n as i64))));
    let mut bb = strip_t(&a[0]);
    let mut u = UPoly::one();
    for h in q_distances(&aa, &bb, q).into_iter().rev() {
        let d = aa.gcd(&bb.scale_var(&rat_pow(q, h)));
        if d.deg() <= 0 {
            continue;
        }
        aa = aa.div_exact(&d);
        bb = bb.div_exact(&d.scale_var(&rat_pow(q, -h)).monic());
        for i in 0..=h {
            u = u.mul(&d.scale_var(&rat_pow(q, -i)).monic());
        }
    }
    // valuation at 0: Q^i t^alpha = q^{i alpha} t^alpha
    let s = a
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.valuation(&UPoly::x()))
        .min()
        .unwrap();
    let mut chi = UPoly::zero();
    for (i, c) in a.iter().enumerate() {
        if !c.is_zero() && c.valuation(&UPoly::x()) == s {
            chi = chi.add(&UPoly::monomial(c.coeff(s as usize), i));
        }
    }
    let lo = chi
        .rational_roots()
        .iter()
        .filter_map(|r| q_log(q, r))
        .min();
    if let Some(al) = lo {
        if al < 0 {
            u = u.mul(&UPoly::monomial(<Rat as One>::one(), (-al) as usize));
        }
    }
    (u, lo)
}

fn degree_bound_q(a: &[UPoly], q: &Rat) -> Option<i64> {
    let s = a.iter().filter(|c| !c.is_zero()).map(|c| c.deg()).max()?;
    let mut chi = UPoly::zero();
    for (i, c) in a.iter().enumerate() {
        if !c.is_zero() && c.deg() == s {
            chi = chi.add(&UPoly::monomial(c.lc(), i));
        }
    }
    chi.rational_roots()
        .iter()
        .filter_map(|r| q_log(q, r))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::upoly::upoly;

    fn c(n: i64) -> URatFunc {
        URatFunc::from_rat(&rat(n))
    }
    fn p(cs: &[i64]) -> URatFunc {
        URatFunc::from_poly(upoly(cs))
    }
    fn f(n: &[i64], d: &[i64]) -> URatFunc {
        URatFunc::new(upoly(n), upoly(d))
    }

    fn check(l: &OrePoly, sols: &[URatFunc]) {
        for y in sols {
            assert!(l.apply_urat(y).is_zero(), "{y:?} is not a solution");
        }
    }

    #[test]
    fn shift_examples() {
        let l = OrePoly::new(OreKind::S, vec![f(&[-1, -1], &[0, 1]), c(1)]);
        assert_eq!(rational_solutions(&l), vec![p(&[0, 1])]);
        let l = OrePoly::new(OreKind::S, vec![c(-2), c(1)]);
        assert!(rational_solutions(&l).is_empty());
        // y = 1/(t(t+1)): (t+2) y(t+1) - t y(t) = 0
        let l = OrePoly::new(OreKind::S, vec![p(&[0, -1]), p(&[2, 1])]);
        let s = rational_solutions(&l);
        assert_eq!(s, vec![f(&[1], &[0, 1, 1])]);
        // S^2 - 1 has constants; S(S-1) too
        let l = OrePoly::new(OreKind::S, vec![c(-1), c(0), c(1)]);
        assert_eq!(rational_solutions(&l), vec![c(1)]);
        let l = OrePoly::new(OreKind::S, vec![c(0), f(&[-1, -1], &[0, 1]), c(1)]);
        let s = rational_solutions(&l);
        check(&l, &s);
        assert_eq!(s, vec![p(&[-1, 1])]);
    }

    #[test]
    fn differential_examples() {
        let l = OrePoly::new(OreKind::D, vec![c(-1), p(&[0, 1])]);
        assert_eq!(rational_solutions(&l), vec![p(&[0, 1])]);
        // y'' = 0
        let l = OrePoly::new(OreKind::D, vec![c(0), c(0), c(1)]);
        let s = rational_solutions(&l);
        assert_eq!(s.len(), 2);
        check(&l, &s);
        // t y' + 2 y = 0 has 1/t^2
        let l = OrePoly::new(OreKind::D, vec![c(2), p(&[0, 1])]);
        assert_eq!(rational_solutions(&l), vec![f(&[1], &[0, 0, 1])]);
        // y' = y has no rational solution
        let l = OrePoly::new(OreKind::D, vec![c(-1), c(1)]);
        assert!(rational_solutions(&l).is_empty());
        // (1-t) y' - y: 1/(1-t)
        let l = OrePoly::new(OreKind::D, vec![c(-1), p(&[1, -1])]);
        assert_eq!(rational_solutions(&l), vec![f(&[1], &[-1, 1])]);
        // 2t y' + y = 0 has only t^{-1/2}
        let l = OrePoly::new(OreKind::D, vec![c(1), p(&[0, 2])]);
        assert!(rational_solutions(&l).is_empty());
    }

    #[test]
    fn q_examples() {
        let q = rat(2);
        let k = OreKind::Q(q.clone());
        // y = t: y(qt) = q y
        let l = OrePoly::new(k.clone(), vec![c(-2), c(1)]);
        assert_eq!(rational_solutions(&l), vec![p(&[0, 1])]);
        // y = 1/(t-1): (qt-1) y(qt) - (t-1) y = 0
        let l = OrePoly::new(k.clone(), vec![p(&[1, -1]), p(&[-1, 2])]);
        assert_eq!(rational_solutions(&l), vec![f(&[1], &[-1, 1])]);
        // y = 1/t^2
        let l = OrePoly::new(k.clone(), vec![c(-1), c(4)]);
        assert_eq!(rational_solutions(&l), vec![f(&[1], &[0, 0, 1])]);
        let l = OrePoly::new(k.clone(), vec![c(-3), c(1)]);
        assert!(rational_solutions(&l).is_empty());
        // y = 1/((t-1)(t-2)): check via the operator built from y(qt)/y(t)
        let y = f(&[1], &[2, -3, 1]);
        let ratio = y.qscale(&q).div(&y);
        let l = OrePoly::new(k, vec![ratio.neg(), c(1)]);
        assert_eq!(rational_solutions(&l), vec![y]);
    }
}
