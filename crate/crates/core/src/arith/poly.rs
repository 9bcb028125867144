//! Sparse polynomials in t, x, z, w over Q.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{lcm_big, Rat};
use super::upoly::UPoly;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    T = 0,
    X = 1,
    Z = 2,
    W = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::T, Var::X, Var::Z, Var::W];

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::Z => "z",
            Var::W => "w",
        }
    }
}

/// Exponent vector indexed by `Var`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 4])
    }

    pub fn var(v: Var, e: u32) -> Self {
        let mut m = [0; 4];
        m[v as usize] = e;
        Monomial(m)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0).all(|(a, b)| *a <= b)
    }

    pub fn div(&self, o: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0) {
            *a -= b;
        }
        Monomial(m)
    }
}

impl Ord for Monomial {
    /// Graded lex with t < x < z < w.
    fn cmp(&self, o: &Self) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| {
            for i in (0..4).rev() {
                match self.0[i].cmp(&o.0[i]) {
                    Ordering::Equal => continue,
                    c => return c,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rat::one(), Monomial::var(v, 1))
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn lc(&self) -> Rat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total() as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Degree in `v`, `-1` for zero.
    pub fn degree(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exp(v) as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn min_degree(&self, v: Var) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exp(v) as i64)
            .min()
            .unwrap_or(-1)
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.degree(v) > 0
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.has_var(v)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn deriv(&self, v: Var) -> Self {
        let mut r = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                r.add_term(
                    m.div(&Monomial::var(v, 1)),
                    c * Rat::from_integer(BigInt::from(e)),
                );
            }
        }
        r
    }

    /// Substitutes `v := g`.
    pub fn subs(&self, v: Var, g: &Poly) -> Self {
        let coeffs = self.coeffs_in(v);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(g).add(c);
        }
        acc
    }

    /// Simultaneous substitution of several variables.
    pub fn subs_many(&self, map: &[(Var, Poly)]) -> Self {
        let mut cache: Vec<Vec<Poly>> = map.iter().map(|_| vec![Poly::one()]).collect();
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut term = Poly::constant(c.clone());
            for (k, (v, g)) in map.iter().enumerate() {
                let e = m.exp(*v) as usize;
                rest.0[*v as usize] = 0;
                while cache[k].len() <= e {
                    let nxt = cache[k].last().unwrap().mul(g);
                    cache[k].push(nxt);
                }
                term = term.mul(&cache[k][e]);
            }
            acc = acc.add(&term.mul_monomial(&rest));
        }
        acc
    }

    pub fn eval(&self, v: Var, a: &Rat) -> Self {
        self.subs(v, &Poly::constant(a.clone()))
    }

    /// Coefficients as polynomials in the remaining variables, index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree(v);
        if d < 0 {
            return Vec::new();
        }
        let mut out = vec![Poly::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut r = *m;
            r.0[v as usize] = 0;
            out[e].terms.insert(r, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, cs: &[Poly]) -> Self {
        let mut r = Poly::zero();
        for (e, c) in cs.iter().enumerate() {
            for (m, a) in &c.terms {
                r.add_term(m.mul(&Monomial::var(v, e as u32)), a.clone());
            }
        }
        r
    }

    pub fn lc_in(&self, v: Var) -> Poly {
        self.coeffs_in(v).pop().unwrap_or_else(Poly::zero)
    }

    pub fn to_upoly(&self, v: Var) -> UPoly {
        let d = self.degree(v);
        let mut c = vec![Rat::zero(); (d + 1).max(0) as usize];
        for (m, a) in &self.terms {
            assert!(
                m.total() == m.exp(v),
                "to_upoly: polynomial is not univariate in {}",
                v.name()
            );
            c[m.exp(v) as usize] = a.clone();
        }
        UPoly::new(c)
    }

    pub fn from_upoly(p: &UPoly, v: Var) -> Self {
        Poly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    /// Rational content: the positive rational `c` with `self / c` integer-primitive,
    /// carrying the sign that makes the leading coefficient positive.
    pub fn rational_content(&self) -> Rat {
        if self.is_zero() {
            return Rat::zero();
        }
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = lcm_big(&l, c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c * Rat::from_integer(l.clone())).to_integer());
        }
        let c = Rat::new(g, l);
        if self.lc().is_negative() {
            -c
        } else {
            c
        }
    }

    /// Integer-primitive with positive leading coefficient.
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.rational_content().recip())
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (*m, c.clone())) {
            if !dm.divides(&rm) {
                return None;
            }
            let m = rm.div(&dm);
            let c = rc / &dc;
            for (a, b) in &d.terms {
                r.add_term(a.mul(&m), -(b * &c));
            }
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn divides(&self, o: &Poly) -> bool {
        o.div_exact(self).is_some()
    }

    /// Greatest common divisor, integer-primitive with positive leading coefficient.
    pub fn gcd(&self, o: &Poly) -> Poly {
        gcd(self, o)
    }

    /// Content with respect to `v`: gcd of the coefficients in `v`.
    pub fn content_in(&self, v: Var) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_in(&self, v: Var) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content_in(v);
        self.div_exact(&c).unwrap()
    }
}

fn main_var(a: &Poly, b: &Poly) -> Option<Var> {
    Var::ALL
        .into_iter()
        .rev()
        .find(|&v| a.has_var(v) || b.has_var(v))
}

/// Pseudo-remainder in `v`.
fn prem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree(v) >= db {
        let k = (r.degree(v) - db) as u32;
        let lr = r.lc_in(v);
        r = r
            .mul(&lb)
            .sub(&b.mul(&lr).mul_monomial(&Monomial::var(v, k)));
    }
    r
}

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let v = match main_var(a, b) {
        None => return Poly::one(),
        Some(v) => v,
    };
    let vars: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&u| a.has_var(u) || b.has_var(u))
        .collect();
    if vars.len() == 1 {
        return Poly::from_upoly(&a.to_upoly(v).gcd(&b.to_upoly(v)), v).normalize();
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    if !a.has_var(v) || !b.has_var(v) {
        return c;
    }
    let mut p = a.div_exact(&ca).unwrap().normalize();
    let mut q = b.div_exact(&cb).unwrap().normalize();
    if p.degree(v) < q.degree(v) {
        std::mem::swap(&mut p, &mut q);
    }
    match image_gcd_degree(&p, &q, v) {
        Some(0) => return c,
        Some(d) if d == q.degree(v) => {
            if let Some(_) = p.div_exact(&q) {
                return c.mul(&q).normalize();
            }
        }
        _ => {}
    }
    if let Some(g) = interpolated_gcd(&p, &q, v) {
        return c.mul(&g).normalize();
    }
    while !q.is_zero() {
        if !q.has_var(v) {
            return c;
        }
        let r = prem(&p, &q, v);
        p = q;
        q = if r.is_zero() {
            r
        } else {
            r.primitive_in(v).normalize()
        };
    }
    c.mul(&p.primitive_in(v)).normalize()
}

/// Gcd of two polynomials primitive in `v` that involve exactly one other variable:
/// images at integer points, scaled by the gcd of leading coefficients, interpolated
/// coefficientwise and confirmed by trial division.
fn interpolated_gcd(a: &Poly, b: &Poly, v: Var) -> Option<Poly> {
    let others: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&u| u != v && (a.has_var(u) || b.has_var(u)))
        .collect();
    if others.len() != 1 {
        return None;
    }
    let u = others[0];
    let (la, lb) = (a.lc_in(v).to_upoly(u), b.lc_in(v).to_upoly(u));
    let gamma = la.gcd(&lb);
    let bound = a.degree(u).min(b.degree(u)) as usize + gamma.deg() as usize;
    let mut pts: Vec<(Rat, UPoly)> = Vec::new();
    let mut best = i64::MAX;
    let mut k = 0i64;
    let mut attempts = 0;
    while attempts < 4 * bound + 40 {
        attempts += 1;
        k += 1;
        let x = Rat::from_integer(BigInt::from(if k % 2 == 0 { k / 2 } else { -(k / 2) - 1 }));
        if la.eval(&x).is_zero() || lb.eval(&x).is_zero() {
            continue;
        }
        let g = a.eval(u, &x).to_upoly(v).gcd(&b.eval(u, &x).to_upoly(v));
        let d = g.deg() as i64;
        if d == 0 {
            return Some(Poly::one());
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            pts.clear();
        }
        pts.push((x.clone(), g.scale(&gamma.eval(&x))));
        if pts.len() > bound {
            let xs: Vec<Rat> = pts.iter().map(|(x, _)| x.clone()).collect();
            let coeffs: Vec<Poly> = (0..=best as usize)
                .map(|i| {
                    let ys: Vec<Rat> = pts.iter().map(|(_, g)| g.coeff(i)).collect();
                    Poly::from_upoly(&newton_interpolate(&xs, &ys), u)
                })
                .collect();
            let cand = Poly::from_coeffs_in(v, &coeffs).primitive_in(v).normalize();
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
    }
    None
}

fn newton_interpolate(xs: &[Rat], ys: &[Rat]) -> UPoly {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UPoly::constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = p
            .mul(&UPoly::new(vec![-xs[i].clone(), Rat::one()]))
            .add(&UPoly::constant(c[i].clone()));
    }
    p
}

/// Degree in `v` of the gcd of `a` and `b` after substituting small integers for the
/// other variables: an upper bound for the degree of their gcd when both are primitive in `v`.
fn image_gcd_degree(a: &Poly, b: &Poly, v: Var) -> Option<i64> {
    let others: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&u| u != v && (a.has_var(u) || b.has_var(u)))
        .collect();
    let (la, lb) = (a.lc_in(v), b.lc_in(v));
    for shift in [2i64, 5, 11] {
        let point: Vec<(Var, Rat)> = others
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, Rat::from_integer(BigInt::from(shift + 3 * i as i64))))
            .collect();
        let at = |p: &Poly| point.iter().fold(p.clone(), |acc, (u, x)| acc.eval(*u, x));
        if at(&la).is_zero() || at(&lb).is_zero() {
            continue;
        }
        return Some(at(a).to_upoly(v).gcd(&at(b).to_upoly(v)).deg() as i64);
    }
    None
}

/// Resultant in `v` via the Bareiss determinant of the Sylvester matrix.
pub fn resultant(a: &Poly, b: &Poly, v: Var) -> crate::Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(crate::Error::UndefinedResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Poly::zero());
    }
    let m = a.degree(v) as usize;
    let n = b.degree(v) as usize;
    if m == 0 {
        return Ok(a.pow(n as u32));
    }
    if n == 0 {
        return Ok(b.pow(m as u32));
    }
    let ac = a.coeffs_in(v);
    let bc = b.coeffs_in(v);
    let size = m + n;
    let mut mat = vec![vec![Poly::zero(); size]; size];
    for i in 0..n {
        for (k, c) in ac.iter().enumerate() {
            mat[i][i + m - k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in bc.iter().enumerate() {
            mat[n + i][i + n - k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Fraction-free determinant.
pub fn bareiss_det(mut mat: Vec<Vec<Poly>>) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(i, k);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = Poly::zero();
        }
        prev = mat[k][k].clone();
    }
    let d = mat[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Squarefree decomposition `p = content * prod f_i^{m_i}` with respect to `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomp {
    /// The part of `p` free of `v`, including the rational constant.
    pub content: Poly,
    pub factors: Vec<(Poly, u32)>,
}

pub fn squarefree_decomp(p: &Poly, v: Var) -> SquarefreeDecomp {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let f = p.primitive_in(v).normalize();
    let content = p.div_exact(&f).unwrap();
    let mut factors = Vec::new();
    if f.has_var(v) {
        let df = f.deriv(v);
        let b = gcd(&f, &df);
        let mut c = f.div_exact(&b).unwrap();
        let mut d = df.div_exact(&b).unwrap().sub(&c.deriv(v));
        let mut i = 1;
        while c.has_var(v) {
            let a = gcd(&c, &d);
            if a.has_var(v) {
                factors.push((a.clone(), i));
            }
            c = c.div_exact(&a).unwrap();
            d = d.div_exact(&a).unwrap().sub(&c.deriv(v));
            i += 1;
        }
    }
    SquarefreeDecomp { content, factors }
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
    fn c(n: i64) -> Poly {
        Poly::int(n)
    }

    #[test]
    fn term_order() {
        // x > t, x^2 > t*x > t^2
        let p = x().pow(2).add(&t().mul(&x())).add(&t().pow(2));
        let order: Vec<Monomial> = p.terms().map(|(m, _)| *m).collect();
        assert_eq!(
            order,
            vec![
                Monomial([2, 0, 0, 0]),
                Monomial([1, 1, 0, 0]),
                Monomial([0, 2, 0, 0])
            ]
        );
    }

    #[test]
    fn gcd_examples() {
        let a = x().pow(2).sub(&t().pow(2));
        assert_eq!(gcd(&a, &x().sub(&t())), x().sub(&t()));
        assert_eq!(gcd(&x().pow(2).sub(&t()), &x().add(&c(1))), c(1));
        assert_eq!(gcd(&Poly::zero(), &x().scale(&rat(2))), x());
        assert_eq!(gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn gcd_with_contents() {
        // (t+1)(x-t)(x+2) and (t+1)^2 (x-t) t
        let a = t().add(&c(1)).mul(&x().sub(&t())).mul(&x().add(&c(2)));
        let b = t().add(&c(1)).pow(2).mul(&x().sub(&t())).mul(&t());
        assert_eq!(gcd(&a, &b), t().add(&c(1)).mul(&x().sub(&t())).normalize());
    }

    #[test]
    fn resultant_examples() {
        let z = Poly::z();
        let a = c(1).sub(&z.mul(&x()).scale(&rat(2)));
        let b = x().pow(2).sub(&t());
        let r = resultant(&a, &b, Var::X).unwrap();
        assert_eq!(r, c(1).sub(&z.pow(2).mul(&t()).scale(&rat(4))));
        let r = resultant(&x().sub(&t()), &x().add(&t()), Var::X).unwrap();
        assert_eq!(r, t().scale(&rat(2)));
        assert!(resultant(&x(), &x(), Var::X).unwrap().is_zero());
        assert!(resultant(&Poly::zero(), &Poly::zero(), Var::X).is_err());
    }

    #[test]
    fn squarefree_examples() {
        let p = x().pow(3).add(&x().pow(2));
        let s = squarefree_decomp(&p, Var::X);
        assert_eq!(s.factors, vec![(x().add(&c(1)), 1), (x(), 2)]);
        let u = x().pow(2).sub(&t());
        assert_eq!(
            squarefree_decomp(&u.pow(2), Var::X).factors,
            vec![(u.clone(), 2)]
        );
        assert_eq!(squarefree_decomp(&u, Var::X).factors, vec![(u, 1)]);
    }

    #[test]
    fn exact_division() {
        let a = x().sub(&t());
        let b = x().add(&t()).mul(&c(3));
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }
}
