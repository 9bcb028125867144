//! Reduction modulo the image of D_x, Delta_x or Delta_{q,x}: residual forms and residues.

mod dispersion;
pub(crate) mod pf;
mod residue;

pub use dispersion::{dispersion, q_dispersion};
pub(crate) use pf::{Pf, Table};

use crate::arith::field::Field;
use crate::arith::poly::{Poly, Var};
use crate::arith::rat::{rat, rat_pow, rat_string, valid_q, Rat};
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::{primitive_poly, XPoly};
use crate::{Error, Result};

/// The operator in x.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XCase {
    /// D_x
    Dx,
    /// Delta_x: g(x+1) - g(x)
    Sx,
    /// Delta_{q,x}: g(qx) - g(x)
    Qx(Rat),
}

impl XCase {
    pub fn qx(q: Rat) -> Result<Self> {
        if !valid_q(&q) {
            return Err(Error::InvalidQ(rat_string(&q)));
        }
        Ok(XCase::Qx(q))
    }

    pub fn name(&self) -> &'static str {
        match self {
            XCase::Dx => "dx",
            XCase::Sx => "sx",
            XCase::Qx(_) => "qx",
        }
    }

    /// Applies the operator in x to a rational function.
    pub fn apply(&self, g: &RatFunc) -> RatFunc {
        match self {
            XCase::Dx => g.deriv(Var::X),
            XCase::Sx => g.shift_x(&rat(1)).sub(g),
            XCase::Qx(q) => g.qscale_x(q).sub(g),
        }
    }

    pub fn orbit_kind(&self) -> OrbitKind {
        match self {
            XCase::Dx => OrbitKind::Point,
            XCase::Sx => OrbitKind::ZOrbit,
            XCase::Qx(_) => OrbitKind::QOrbit,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    Point,
    ZOrbit,
    QOrbit,
    QInfinity,
}

impl OrbitKind {
    pub fn name(self) -> &'static str {
        match self {
            OrbitKind::Point => "point",
            OrbitKind::ZOrbit => "zOrbit",
            OrbitKind::QOrbit => "qOrbit",
            OrbitKind::QInfinity => "qInfinity",
        }
    }
}

/// `a / u^j`, with `u` primitive in Q[t,x] and `a` a polynomial in x over Q(t).
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualTerm {
    pub u: Poly,
    pub j: u32,
    pub a: RatFunc,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualForm {
    pub case: XCase,
    pub terms: Vec<ResidualTerm>,
    /// The constant term; only nonzero for Delta_{q,x}.
    pub infinity: URatFunc,
}

impl ResidualForm {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.infinity.is_zero()
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::from_urat(&self.infinity);
        for term in &self.terms {
            acc = acc.add(&term.a.mul(&RatFunc::frac(Poly::one(), term.u.pow(term.j))));
        }
        acc
    }

    /// Product of the distinct denominators.
    pub fn denominator(&self) -> Poly {
        let mut d = Poly::one();
        let mut seen: Vec<&Poly> = Vec::new();
        for term in &self.terms {
            if !seen.contains(&&term.u) {
                d = d.mul(&term.u);
                seen.push(&term.u);
            }
        }
        d
    }
}

/// A residue at the roots of `u`: the value at a root b is `rho(t, b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueData {
    pub kind: OrbitKind,
    /// Absent for the residue at infinity.
    pub u: Option<Poly>,
    pub rho: RatFunc,
    pub j: u32,
}

/// `f = D(certificate) + residual`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub certificate: RatFunc,
    pub residual: ResidualForm,
}

fn xscalar(r: Rat) -> URatFunc {
    URatFunc::from_rat(&r)
}

/// Solves `g(x+1) - g(x) = p` for a polynomial g.
fn sum_poly(p: &XPoly) -> XPoly {
    let mut rest = p.clone();
    let mut g = XPoly::zero();
    while !rest.is_zero() {
        let k = rest.deg() as usize;
        let c = rest.lc().mul(&xscalar(rat(k as i64 + 1)).inv());
        let m = XPoly::monomial(c, k + 1);
        let dm = m.shift(&URatFunc::one()).sub(&m);
        rest = rest.sub(&dm);
        g = g.add(&m);
    }
    g
}

fn integrate(p: &XPoly) -> XPoly {
    XPoly::new(
        std::iter::once(URatFunc::zero())
            .chain(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.mul(&xscalar(rat(k as i64 + 1)).inv())),
            )
            .collect(),
    )
}

/// Core reduction on a decomposition: returns `(certificate, residual)`.
pub(crate) fn reduce_pf(table: &mut Table, pf: &Pf) -> (Pf, Pf) {
    let mut cert = Pf::default();
    let mut res = Pf::default();
    let case = table.case.clone();
    match &case {
        XCase::Dx => cert.poly = integrate(&pf.poly),
        XCase::Sx => cert.poly = sum_poly(&pf.poly),
        XCase::Qx(q) => {
            res.poly = XPoly::constant(pf.poly.coeff(0));
            let cs: Vec<URatFunc> = pf
                .poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    if k == 0 {
                        URatFunc::zero()
                    } else {
                        c.mul(&xscalar(rat_pow(q, k as i64) - rat(1)).inv())
                    }
                })
                .collect();
            cert.poly = XPoly::new(cs);
        }
    }
    for (&id, nums) in &pf.parts {
        match &case {
            XCase::Dx => {
                let u = table.factor(id).clone();
                let du = u.deriv();
                let dui = du.inv_mod(&u).expect("irreducible factor is squarefree");
                let mut nums = nums.clone();
                for j in (2..=nums.len()).rev() {
                    let a = std::mem::replace(&mut nums[j - 1], XPoly::zero());
                    if a.is_zero() {
                        continue;
                    }
                    // a/u^j = D_x(-c/((j-1)u^(j-1))) + (b + c'/(j-1))/u^(j-1), a = b u + c u'
                    let c = a.mul(&dui).rem(&u);
                    let b = a.sub(&c.mul(&du)).div_exact(&u);
                    let k = xscalar(rat(j as i64 - 1)).inv();
                    table.add_term(&mut cert, id, j - 1, c.scale(&k.neg()));
                    nums[j - 2] = nums[j - 2].add(&b).add(&c.deriv().scale(&k));
                }
                table.add_term(&mut res, id, 1, nums[0].clone());
            }
            XCase::Qx(q) if table.orbit(id).is_none() => {
                // b/x^j = Delta_q(b/((q^-j - 1) x^j))
                for (j0, b) in nums.iter().enumerate() {
                    let j = j0 as i64 + 1;
                    let s = xscalar(rat_pow(q, -j) - rat(1)).inv();
                    table.add_term(&mut cert, id, j0 + 1, b.scale(&s));
                }
            }
            _ => {
                for (j0, a) in nums.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let (rep, moved) = table.move_to_rep(id, j0 + 1, a, &mut cert);
                    table.add_term(&mut res, rep, j0 + 1, moved);
                }
            }
        }
    }
    (cert, res)
}

/// Lifts a residual decomposition to its public form.
pub(crate) fn residual_form(table: &Table, res: &Pf) -> ResidualForm {
    let mut terms = Vec::new();
    for (&id, nums) in &res.parts {
        let u = primitive_poly(table.factor(id));
        let lc = URatFunc::from_poly(u.lc_in(Var::X).to_upoly(Var::T));
        let mut scale = URatFunc::one();
        for (j0, a) in nums.iter().enumerate() {
            scale = scale.mul(&lc);
            if !a.is_zero() {
                terms.push(ResidualTerm {
                    u: u.clone(),
                    j: j0 as u32 + 1,
                    a: RatFunc::from_xpoly(&a.scale(&scale)),
                });
            }
        }
    }
    ResidualForm {
        case: table.case.clone(),
        terms,
        infinity: res.poly.coeff(0),
    }
}

fn check_case(case: &XCase) -> Result<()> {
    if let XCase::Qx(q) = case {
        if !valid_q(q) {
            return Err(Error::InvalidQ(rat_string(q)));
        }
    }
    Ok(())
}

/// Decomposes and reduces `f` on a fresh orbit table.
pub(crate) fn reduce_on_table(f: &RatFunc, case: &XCase) -> Result<(Table, Pf, Pf)> {
    check_case(case)?;
    let mut table = Table::new(case.clone());
    let pf = table.decompose(f)?;
    let (cert, res) = reduce_pf(&mut table, &pf);
    Ok((table, cert, res))
}

/// `f = D(g) + r` for the operator of `case`.
pub fn reduce(f: &RatFunc, case: &XCase) -> Result<Reduction> {
    let (table, cert, res) = reduce_on_table(f, case)?;
    Ok(Reduction {
        certificate: table.to_ratfunc(&cert),
        residual: residual_form(&table, &res),
    })
}

pub fn hermite_reduce(f: &RatFunc) -> Result<Reduction> {
    reduce(f, &XCase::Dx)
}

pub fn abramov_reduce(f: &RatFunc) -> Result<Reduction> {
    reduce(f, &XCase::Sx)
}

pub fn q_reduce(f: &RatFunc, q: &Rat) -> Result<Reduction> {
    reduce(f, &XCase::qx(q.clone())?)
}

/// Residues of the residual form of `f`, one per (representative, multiplicity),
/// followed by the residue at infinity in the q-case when it is nonzero.
pub fn residues(f: &RatFunc, case: &XCase) -> Result<Vec<ResidueData>> {
    let (table, _, res) = reduce_on_table(f, case)?;
    Ok(residues_of(&table, &res))
}

pub(crate) fn residues_of(table: &Table, res: &Pf) -> Vec<ResidueData> {
    let mut out = Vec::new();
    for (&id, nums) in &res.parts {
        let u = table.factor(id);
        let up = primitive_poly(u);
        for (k0, rho) in residue::laurent_coefficients(u, nums)
            .into_iter()
            .enumerate()
        {
            if !rho.is_zero() {
                out.push(ResidueData {
                    kind: table.case.orbit_kind(),
                    u: Some(up.clone()),
                    rho: RatFunc::from_xpoly(&rho),
                    j: k0 as u32 + 1,
                });
            }
        }
    }
    let c = res.poly.coeff(0);
    if matches!(table.case, XCase::Qx(_)) && !c.is_zero() {
        out.push(ResidueData {
            kind: OrbitKind::QInfinity,
            u: None,
            rho: RatFunc::from_urat(&c),
            j: 0,
        });
    }
    out
}

/// The certificate g with `f = D(g)` when f is exact, `None` otherwise.
pub fn is_exact(f: &RatFunc, case: &XCase) -> Result<Option<RatFunc>> {
    let r = reduce(f, case)?;
    Ok(r.residual.is_zero().then_some(r.certificate))
}
