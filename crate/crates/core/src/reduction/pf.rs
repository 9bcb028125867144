//! Partial fractions over Q(t) on a table of monic irreducible factors, with orbit bookkeeping.

use std::collections::BTreeMap;

use super::XCase;
use crate::arith::factor::factor_bivariate;
use crate::arith::field::Field;
use crate::arith::poly::Var;
use crate::arith::rat::{q_log, rat, rat_pow};
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::{to_xpoly, XPoly};
use crate::ore::OreKind;
use crate::Result;

/// `poly + sum_f sum_j parts[f][j-1] / factor_f^j`, numerators reduced modulo their factor.
#[derive(Clone, Debug, PartialEq)]
pub struct Pf {
    pub poly: XPoly,
    pub parts: BTreeMap<usize, Vec<XPoly>>,
}

impl Default for Pf {
    fn default() -> Self {
        Pf {
            poly: XPoly::zero(),
            parts: BTreeMap::new(),
        }
    }
}

impl Pf {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero() && self.parts.values().all(|v| v.iter().all(|a| a.is_zero()))
    }

    pub fn add(&mut self, o: &Pf) {
        self.poly = self.poly.add(&o.poly);
        for (f, nums) in &o.parts {
            let e = self.parts.entry(*f).or_default();
            if e.len() < nums.len() {
                e.resize(nums.len(), XPoly::zero());
            }
            for (j, a) in nums.iter().enumerate() {
                e[j] = e[j].add(a);
            }
        }
        self.trim();
    }

    pub fn scale(&self, c: &URatFunc) -> Pf {
        let mut out = Pf {
            poly: self.poly.scale(c),
            parts: BTreeMap::new(),
        };
        for (f, nums) in &self.parts {
            out.parts
                .insert(*f, nums.iter().map(|a| a.scale(c)).collect());
        }
        out.trim();
        out
    }

    fn trim(&mut self) {
        for v in self.parts.values_mut() {
            while v.last().is_some_and(|a| a.is_zero()) {
                v.pop();
            }
        }
        self.parts.retain(|_, v| !v.is_empty());
    }
}

/// Monic irreducible factors in x over Q(t), each tagged with its orbit `(rep, offset)`:
/// `factor(x) = rep(x + offset)` for shifts, `factor(x) ~ rep(q^offset x)` for q-shifts.
#[derive(Clone, Debug)]
pub struct Table {
    pub case: XCase,
    factors: Vec<XPoly>,
    orbit: Vec<Option<(usize, i64)>>,
    frozen: bool,
}

impl Table {
    pub fn new(case: XCase) -> Self {
        Table {
            case,
            factors: Vec::new(),
            orbit: Vec::new(),
            frozen: false,
        }
    }

    /// After freezing, representatives never change; new members may get negative offsets.
    pub fn freeze(&mut self) {
        self.frozen = true;
    }

    pub fn factor(&self, id: usize) -> &XPoly {
        &self.factors[id]
    }

    pub fn orbit(&self, id: usize) -> Option<(usize, i64)> {
        self.orbit[id]
    }

    /// Offset `i` with `f = rep` moved by `i`, if f lies in the orbit of `rep`.
    fn relation(&self, rep: &XPoly, f: &XPoly) -> Option<i64> {
        let d = rep.deg();
        if d != f.deg() || d < 1 {
            return None;
        }
        match &self.case {
            XCase::Dx => None,
            XCase::Sx => {
                let du = d as usize;
                let i = f.coeff(du - 1).sub(&rep.coeff(du - 1)).as_constant()? / rat(d as i64);
                if !i.is_integer() {
                    return None;
                }
                let i = i64::try_from(i.to_integer()).ok()?;
                (rep.shift(&URatFunc::from_rat(&rat(i))) == *f).then_some(i)
            }
            XCase::Qx(q) => {
                let r = f.coeff(0).div(&rep.coeff(0)).as_constant()?;
                let m = q_log(q, &r)?;
                if m % d as i64 != 0 {
                    return None;
                }
                let i = -m / d as i64;
                (rep.scale_var(&URatFunc::from_rat(&rat_pow(q, i))).monic() == *f).then_some(i)
            }
        }
    }

    fn is_x(f: &XPoly) -> bool {
        *f == XPoly::x()
    }

    /// Id of a monic irreducible factor, adding it if new.
    pub fn intern(&mut self, f: XPoly) -> usize {
        debug_assert!(f.lc().is_one());
        if let Some(i) = self.factors.iter().position(|g| *g == f) {
            return i;
        }
        let id = self.factors.len();
        let special = matches!(self.case, XCase::Qx(_)) && Self::is_x(&f);
        let mut orbit = if special { None } else { Some((id, 0)) };
        if !special {
            let reps: Vec<usize> = (0..id).filter(|&k| self.orbit[k] == Some((k, 0))).collect();
            for r in reps {
                if let Some(i) = self.relation(&self.factors[r], &f) {
                    if i >= 0 || self.frozen {
                        orbit = Some((r, i));
                    } else {
                        // the newcomer becomes the representative
                        for o in self.orbit.iter_mut().flatten() {
                            if o.0 == r {
                                *o = (id, o.1 - i);
                            }
                        }
                        orbit = Some((id, 0));
                    }
                    break;
                }
            }
        }
        self.factors.push(f);
        self.orbit.push(orbit);
        id
    }

    /// Adds `n / factor^j` with `n` of any degree, expanding it factor-adically.
    pub fn add_term(&self, pf: &mut Pf, id: usize, j: usize, n: XPoly) {
        if n.is_zero() {
            return;
        }
        let u = &self.factors[id];
        let mut rest = n;
        let mut k = 0;
        let mut pieces = Vec::new();
        while !rest.is_zero() && k < j {
            let (q, r) = rest.divrem(u);
            pieces.push((j - k, r));
            rest = q;
            k += 1;
        }
        // what is left is a polynomial
        pf.poly = pf.poly.add(&rest);
        let e = pf.parts.entry(id).or_default();
        for (m, r) in pieces {
            if e.len() < m {
                e.resize(m, XPoly::zero());
            }
            e[m - 1] = e[m - 1].add(&r);
        }
        pf.trim();
    }

    /// Partial-fraction decomposition of a rational function.
    pub fn decompose(&mut self, f: &RatFunc) -> Result<Pf> {
        let mut out = Pf::default();
        if f.is_zero() {
            return Ok(out);
        }
        let fac = factor_bivariate(f.den())?;
        let mut blocks: Vec<(usize, u32, XPoly)> = Vec::new();
        let mut den_x = XPoly::one();
        for (g, m) in &fac.factors {
            if g.has_var(Var::X) {
                let u = to_xpoly(g).monic();
                let id = self.intern(u.clone());
                let um = u.pow(*m);
                den_x = den_x.mul(&um);
                blocks.push((id, *m, um));
            }
        }
        let full = to_xpoly(f.den());
        let unit = full.lc();
        let num = to_xpoly(f.num()).scale(&unit.inv());
        let (p, r) = num.divrem(&den_x);
        out.poly = p;
        for (id, m, um) in &blocks {
            let c = den_x.div_exact(um);
            let ci = c.inv_mod(um).expect("coprime cofactors");
            let ni = r.mul(&ci).rem(um);
            self.add_term(&mut out, *id, *m as usize, ni);
        }
        Ok(out)
    }

    /// Recombines a decomposition into a reduced rational function.
    pub fn to_ratfunc(&self, pf: &Pf) -> RatFunc {
        let mut den = XPoly::one();
        for (f, nums) in &pf.parts {
            den = den.mul(&self.factors[*f].pow(nums.len() as u32));
        }
        let mut num = pf.poly.mul(&den);
        for (f, nums) in &pf.parts {
            let u = &self.factors[*f];
            let m = nums.len();
            let co = den.div_exact(&u.pow(m as u32));
            for (j, a) in nums.iter().enumerate() {
                if !a.is_zero() {
                    num = num.add(&a.mul(&co).mul(&u.pow((m - j - 1) as u32)));
                }
            }
        }
        RatFunc::from_xfrac(&num, &den)
    }

    /// The operator action of `kind` in t on a decomposition.
    pub fn act_t(&mut self, pf: &Pf, kind: &OreKind) -> Pf {
        let mut out = Pf {
            poly: kind.act_xpoly(&pf.poly),
            parts: BTreeMap::new(),
        };
        for (f, nums) in &pf.parts {
            match kind {
                OreKind::D => {
                    let u = self.factors[*f].clone();
                    let ut = crate::arith::xpoly::dt(&u);
                    for (j0, a) in nums.iter().enumerate() {
                        let j = j0 + 1;
                        // (a/u^j)_t = a_t/u^j - j a u_t / u^(j+1)
                        self.add_term(&mut out, *f, j, crate::arith::xpoly::dt(a));
                        let b = a.mul(&ut).scale(&URatFunc::from_rat(&rat(-(j as i64))));
                        self.add_term(&mut out, *f, j + 1, b);
                    }
                }
                _ => {
                    let u = kind.act_xpoly(&self.factors[*f]);
                    let id = self.intern(u);
                    for (j0, a) in nums.iter().enumerate() {
                        self.add_term(&mut out, id, j0 + 1, kind.act_xpoly(a));
                    }
                }
            }
        }
        out
    }

    /// Moves a numerator over a member factor onto its representative; returns
    /// the certificate contribution and the moved numerator.
    pub fn move_to_rep(&mut self, id: usize, j: usize, a: &XPoly, cert: &mut Pf) -> (usize, XPoly) {
        let (rep, i) = self.orbit[id].expect("orbit member");
        if i == 0 {
            return (rep, a.clone());
        }
        let member = self.factors[id].clone();
        let moved = |s: i64, this: &Table| -> (XPoly, XPoly) {
            // member and numerator transported by s steps
            match &this.case {
                XCase::Sx => {
                    let c = URatFunc::from_rat(&rat(s));
                    (member.shift(&c), a.shift(&c))
                }
                XCase::Qx(q) => {
                    let c = URatFunc::from_rat(&rat_pow(q, s));
                    let u = member.scale_var(&c);
                    let l = u.lc();
                    let lj = l.inv();
                    let mut b = a.scale_var(&c);
                    for _ in 0..j {
                        b = b.scale(&lj);
                    }
                    (u.monic(), b)
                }
                XCase::Dx => unreachable!("no orbits under the derivation"),
            }
        };
        let neg_one = URatFunc::from_rat(&rat(-1));
        if i > 0 {
            for k in 1..=i {
                let (u, b) = moved(-k, self);
                let uid = self.intern(u);
                self.add_term(cert, uid, j, b);
            }
            (rep, moved(-i, self).1)
        } else {
            let m = -i;
            for k in 0..m {
                let (u, b) = moved(k, self);
                let uid = self.intern(u);
                self.add_term(cert, uid, j, b.scale(&neg_one));
            }
            (rep, moved(m, self).1)
        }
    }
}
