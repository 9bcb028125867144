//! Minimal telescopers by an ansatz over increasing order.

use std::collections::BTreeMap;

use super::annihilator::{minimal_annihilator_diff, rothstein_trager};
use super::shape::{classify_factor, shape_period};
use super::{exists_telescoper, verify_telescoper, TelescoperCase, TelescoperResult};
use crate::arith::field::Field;
use crate::arith::linalg::nullspace;
use crate::arith::poly::Var;
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::{primitive_poly, XPoly};
use crate::ore::{OreKind, OrePoly};
use crate::reduction::{reduce_on_table, reduce_pf, Pf, Table, XCase};
use crate::{Error, Result};

/// How `find_telescoper_with` searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Annihilator of the residues for (D_t, D_x), ansatz otherwise.
    Auto,
    /// Ascending-order ansatz only.
    Ansatz,
}

/// Coordinates of a residual: (factor, multiplicity, power of x), plus the constant.
type Key = (usize, usize, usize);
const CONST_KEY: Key = (usize::MAX, 0, 0);

fn coords(res: &Pf) -> BTreeMap<Key, URatFunc> {
    let mut out = BTreeMap::new();
    let c = res.poly.coeff(0);
    if !c.is_zero() {
        out.insert(CONST_KEY, c);
    }
    for (&id, nums) in &res.parts {
        for (j, a) in nums.iter().enumerate() {
            for (k, c) in a.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.insert((id, j, k), c.clone());
                }
            }
        }
    }
    out
}

/// Residuals `r_l` and certificates `g_l` with `d_t^l f = D_x(g_l) + r_l`, on one frozen table.
pub(crate) struct Ladder {
    table: Table,
    kind: OreKind,
    rs: Vec<Pf>,
    gs: Vec<Pf>,
}

impl Ladder {
    pub(crate) fn new(f: &RatFunc, case: &TelescoperCase) -> Result<Self> {
        let (mut table, g, r) = reduce_on_table(f, &case.dx)?;
        table.freeze();
        Ok(Ladder {
            table,
            kind: case.dt.clone(),
            rs: vec![r],
            gs: vec![g],
        })
    }

    fn level(&mut self, l: usize) -> &Pf {
        while self.rs.len() <= l {
            let last = self.rs.last().unwrap().clone();
            let moved = self.table.act_t(&last, &self.kind);
            let (c, r) = reduce_pf(&mut self.table, &moved);
            let mut g = self.table.act_t(self.gs.last().unwrap(), &self.kind);
            g.add(&c);
            self.rs.push(r);
            self.gs.push(g);
        }
        &self.rs[l]
    }

    /// Kernel of `(e_0..e_rho) -> sum e_l r_l`.
    fn kernel(&mut self, rho: usize) -> Vec<Vec<URatFunc>> {
        self.level(rho);
        let cs: Vec<BTreeMap<Key, URatFunc>> = self.rs[..=rho].iter().map(coords).collect();
        let mut keys: Vec<Key> = cs.iter().flat_map(|m| m.keys().copied()).collect();
        keys.sort_unstable();
        keys.dedup();
        let rows: Vec<Vec<URatFunc>> = keys
            .iter()
            .map(|k| {
                cs.iter()
                    .map(|m| m.get(k).cloned().unwrap_or_else(URatFunc::zero))
                    .collect()
            })
            .collect();
        nullspace(&rows, rho + 1)
    }

    fn combination(&mut self, e: &[URatFunc], of_g: bool) -> Pf {
        self.level(e.len() - 1);
        let src = if of_g { &self.gs } else { &self.rs };
        let mut acc = Pf::default();
        for (c, p) in e.iter().zip(src) {
            if !c.is_zero() {
                acc.add(&p.scale(c));
            }
        }
        acc
    }

    fn certificate(&mut self, e: &[URatFunc]) -> RatFunc {
        let g = self.combination(e, true);
        self.table.to_ratfunc(&g)
    }

    fn residual0(&self) -> &Pf {
        &self.rs[0]
    }
}

/// Order bound from the LCLM construction of the existence proofs.
fn order_bound(ladder: &Ladder, case: &TelescoperCase) -> Result<usize> {
    let r0 = ladder.residual0().clone();
    let table = &ladder.table;
    if matches!((&case.dt, &case.dx), (OreKind::D, XCase::Dx)) {
        if r0.parts.is_empty() {
            return Ok(0);
        }
        let (a, b) = rt_pair(table, &r0);
        return Ok(rothstein_trager(&a, &b)?.degree(Var::Z).max(0) as usize);
    }
    let mut bound = 0;
    for (&id, nums) in &r0.parts {
        let u = primitive_poly(table.factor(id));
        let period = shape_period(&classify_factor(&u, case)?.shape);
        bound += period * nums.len() * u.degree(Var::X) as usize;
    }
    if !r0.poly.coeff(0).is_zero() {
        bound += 1;
    }
    Ok(bound)
}

/// `a/b` for a residual with simple poles only.
fn rt_pair(table: &Table, r: &Pf) -> (XPoly, XPoly) {
    let mut b = XPoly::one();
    for &id in r.parts.keys() {
        b = b.mul(table.factor(id));
    }
    let mut a = XPoly::zero();
    for (&id, nums) in &r.parts {
        a = a.add(&nums[0].mul(&b.div_exact(table.factor(id))));
    }
    (a, b)
}

pub fn find_telescoper(
    f: &RatFunc,
    case: &TelescoperCase,
    max_order: Option<usize>,
) -> Result<TelescoperResult> {
    find_telescoper_with(f, case, max_order, Strategy::Auto)
}

pub fn find_telescoper_with(
    f: &RatFunc,
    case: &TelescoperCase,
    max_order: Option<usize>,
    strategy: Strategy,
) -> Result<TelescoperResult> {
    let decision = exists_telescoper(f, case)?;
    if !decision.answer {
        return Err(Error::NoTelescoper {
            obstructions: decision
                .obstructions
                .iter()
                .map(ToString::to_string)
                .collect(),
        });
    }
    let mut ladder = Ladder::new(f, case)?;
    let bound = order_bound(&ladder, case)?;
    let limit = max_order.unwrap_or(bound).min(bound);
    let mut trace = Vec::new();

    if strategy == Strategy::Auto
        && matches!((&case.dt, &case.dx), (OreKind::D, XCase::Dx))
        && bound > 0
    {
        if let Some(res) = fast_path(f, case, &mut ladder, limit, bound)? {
            return Ok(res);
        }
    }
    for rho in 0..=limit {
        let ker = ladder.kernel(rho);
        trace.push((rho, ker.len()));
        if let Some(v) = ker.into_iter().find(|v| !v[rho].is_zero()) {
            let lc = v[rho].inv();
            let e: Vec<URatFunc> = v.iter().map(|c| c.mul(&lc)).collect();
            return finish(f, case, &mut ladder, e, trace, bound);
        }
    }
    Err(Error::OrderBoundExceeded {
        max_order: limit,
        bound,
    })
}

fn finish(
    f: &RatFunc,
    case: &TelescoperCase,
    ladder: &mut Ladder,
    e: Vec<URatFunc>,
    trace: Vec<(usize, usize)>,
    bound: usize,
) -> Result<TelescoperResult> {
    let certificate = ladder.certificate(&e);
    let op = OrePoly::new(case.dt.clone(), e);
    if !verify_telescoper(f, &op, &certificate, case)? {
        return Err(Error::VerificationFailed(
            "telescoping identity does not hold".into(),
        ));
    }
    let minimal = trace.iter().all(|&(r, n)| r == op.order() || n == 0);
    Ok(TelescoperResult {
        op,
        certificate,
        case: case.clone(),
        minimal,
        trace,
        bound,
    })
}

/// The residues of a (D_t, D_x) residual are algebraic; their minimal annihilator is the
/// minimal telescoper. Returns `None` if the ladder does not confirm it.
fn fast_path(
    f: &RatFunc,
    case: &TelescoperCase,
    ladder: &mut Ladder,
    limit: usize,
    bound: usize,
) -> Result<Option<TelescoperResult>> {
    let r0 = ladder.residual0().clone();
    let (a, b) = rt_pair(&ladder.table, &r0);
    let l = minimal_annihilator_diff(&rothstein_trager(&a, &b)?)?;
    let rho = l.order();
    if rho > limit {
        return Err(Error::OrderBoundExceeded {
            max_order: limit,
            bound,
        });
    }
    if !ladder.combination(l.coeffs(), false).is_zero() {
        return Ok(None);
    }
    let mut trace = Vec::new();
    for k in 0..rho {
        let n = ladder.kernel(k).len();
        trace.push((k, n));
        if n > 0 {
            return Ok(None);
        }
    }
    // r_0..r_{rho-1} are independent, so the kernel at rho is the line through l
    trace.push((rho, 1));
    finish(f, case, ladder, l.coeffs().to_vec(), trace, bound).map(Some)
}
