use num_traits::Signed;

use crate::arith::poly::{resultant, Poly, Var};
use crate::arith::rat::q_log;
use crate::arith::upoly::UPoly;
use crate::arith::Rat;
use crate::{Error, Result};

/// gcd over the t-coefficients of a polynomial in t and w, as a polynomial in w.
fn common_w_factor(r: &Poly) -> UPoly {
    let mut g = UPoly::zero();
    for c in r.coeffs_in(Var::T) {
        if !c.is_zero() {
            g = g.gcd(&c.to_upoly(Var::W));
        }
    }
    g
}

fn check_x(b: &Poly) -> Result<()> {
    if b.degree(Var::X) < 1 {
        return Err(Error::InvalidInput(
            "dispersion needs positive x-degree".into(),
        ));
    }
    Ok(())
}

/// Largest `i >= 0` such that `b(x)` and `b(x+i)` share a factor.
pub fn dispersion(b: &Poly) -> Result<u64> {
    check_x(b)?;
    let shifted = b.subs(Var::X, &Poly::x().add(&Poly::var(Var::W)));
    let r = resultant(b, &shifted, Var::X)?;
    let g = common_w_factor(&r);
    Ok(g.integer_roots()
        .into_iter()
        .filter(|i| !i.is_negative())
        .map(|i| u64::try_from(i).unwrap())
        .max()
        .unwrap_or(0))
}

/// Largest `i >= 0` such that `b(x)` and `b(q^i x)` share a factor other than x;
/// `None` stands for infinity (b a monomial in x).
pub fn q_dispersion(b: &Poly, q: &Rat) -> Result<Option<u64>> {
    check_x(b)?;
    if !crate::arith::rat::valid_q(q) {
        return Err(Error::InvalidQ(crate::arith::rat::rat_string(q)));
    }
    let v = b.min_degree(Var::X) as u32;
    let core = b.div_exact(&Poly::x().pow(v)).expect("x-power divides");
    if core.degree(Var::X) < 1 {
        return Ok(None);
    }
    let scaled = core.subs(Var::X, &Poly::x().mul(&Poly::var(Var::W)));
    let r = resultant(&core, &scaled, Var::X)?;
    let g = common_w_factor(&r);
    Ok(Some(
        g.rational_roots()
            .iter()
            .filter_map(|w| q_log(q, w))
            .filter(|&i| i >= 0)
            .max()
            .unwrap_or(0) as u64,
    ))
}
