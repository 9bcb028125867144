//! Differential annihilators of algebraic functions given by their minimal polynomials.

use crate::arith::dense::DensePoly;
use crate::arith::field::Field;
use crate::arith::linalg::nullspace;
use crate::arith::poly::{resultant, squarefree_decomp, Poly, Var};
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::{from_xpoly, XPoly};
use crate::ore::{OreKind, OrePoly};
use crate::{Error, Result};

/// Polynomials in z over Q(t).
type ZPoly = DensePoly<URatFunc>;

fn to_zpoly(p: &Poly) -> ZPoly {
    ZPoly::new(
        p.coeffs_in(Var::Z)
            .iter()
            .map(|c| URatFunc::from_poly(c.to_upoly(Var::T)))
            .collect(),
    )
}

/// Minimal monic operator in D_t annihilating every root of `r(t, z)`.
pub fn minimal_annihilator_diff(r: &Poly) -> Result<OrePoly> {
    if r.has_var(Var::X) || r.has_var(Var::W) {
        return Err(Error::InvalidInput(
            "expected a polynomial in t and z".into(),
        ));
    }
    if r.degree(Var::Z) < 1 {
        return Err(Error::InvalidInput("expected positive degree in z".into()));
    }
    let m = to_zpoly(r).monic();
    let mz = m.deriv();
    if m.gcd_euclid(&mz).deg() > 0 {
        return Err(Error::NotSquarefree("z"));
    }
    // z' = -R_t / R_z mod R
    let mt = m.map(|c| c.deriv());
    let zp = mt.neg().mul(&mz.inv_mod(&m).expect("squarefree")).rem(&m);
    let d = |e: &ZPoly| -> ZPoly { e.map(|c| c.deriv()).add(&e.deriv().mul(&zp)).rem(&m) };
    let n = m.deg() as usize;
    let mut derivs = vec![ZPoly::x().rem(&m)];
    loop {
        let k = derivs.len() - 1;
        let rows: Vec<Vec<URatFunc>> = (0..n)
            .map(|i| derivs.iter().map(|e| e.coeff(i)).collect())
            .collect();
        if let Some(v) = nullspace(&rows, k + 1)
            .into_iter()
            .find(|v| !v[k].is_zero())
        {
            return Ok(OrePoly::new(OreKind::D, v).monic());
        }
        let next = d(&derivs[k]);
        derivs.push(next);
    }
}

/// The squarefree part in z of `res_x(a - z b_x, b)` for `a/b` with b squarefree in x,
/// given as polynomials in x over Q(t). Its roots are the residues of `a/b`.
pub(crate) fn rothstein_trager(a: &XPoly, b: &XPoly) -> Result<Poly> {
    let (na, da) = from_xpoly(a);
    let (nb, db) = from_xpoly(b);
    let da = Poly::from_upoly(&da, Var::T);
    let db = Poly::from_upoly(&db, Var::T);
    // scaling by units of Q(t) leaves the z-roots alone
    let lhs = na.mul(&db).sub(&Poly::z().mul(&da).mul(&nb.deriv(Var::X)));
    let r = resultant(&lhs, &nb, Var::X)?;
    let mut out = Poly::one();
    for (f, _) in squarefree_decomp(&r, Var::Z).factors {
        if f.has_var(Var::Z) {
            out = out.mul(&f);
        }
    }
    Ok(out.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, ratio};

    fn t() -> Poly {
        Poly::t()
    }
    fn z() -> Poly {
        Poly::z()
    }
    fn d_plus(c: URatFunc) -> OrePoly {
        OrePoly::new(OreKind::D, vec![c, URatFunc::one()])
    }
    fn over_t(c: crate::arith::Rat) -> URatFunc {
        URatFunc::new(crate::arith::UPoly::constant(c), crate::arith::UPoly::x())
    }

    #[test]
    fn examples() {
        assert_eq!(
            minimal_annihilator_diff(&z().pow(2).sub(&t())).unwrap(),
            d_plus(over_t(ratio(-1, 2)))
        );
        let r = t().mul(&z().pow(2)).scale(&rat(4)).sub(&Poly::one());
        assert_eq!(
            minimal_annihilator_diff(&r).unwrap(),
            d_plus(over_t(ratio(1, 2)))
        );
        assert_eq!(
            minimal_annihilator_diff(&z().sub(&t())).unwrap(),
            d_plus(over_t(rat(-1)))
        );
        assert!(minimal_annihilator_diff(&z().sub(&t()).pow(2)).is_err());
        assert!(minimal_annihilator_diff(&t()).is_err());
    }

    #[test]
    fn reducible_gives_lclm() {
        // roots t and t^2: the annihilator has order 2
        let r = z().sub(&t()).mul(&z().sub(&t().pow(2)));
        let l = minimal_annihilator_diff(&r).unwrap();
        assert_eq!(l.order(), 2);
        for root in [t(), t().pow(2)] {
            let f = crate::arith::RatFunc::from_poly(root);
            assert!(l.apply(&f).is_zero());
        }
    }
}
