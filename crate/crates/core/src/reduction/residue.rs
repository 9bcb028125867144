//! Laurent coefficients at a generic root, computed in Q(t)[x]/(u).

use crate::arith::field::Field;
use crate::arith::rat::rat;
use crate::arith::ufrac::URatFunc;
use crate::arith::xpoly::XPoly;

type Series = Vec<XPoly>;

fn smul(a: &Series, b: &Series, n: usize, u: &XPoly) -> Series {
    let mut out = vec![XPoly::zero(); n];
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
    out.into_iter().map(|c| c.rem(u)).collect()
}

/// `P(x + e) = sum_k T_k e^k`, coefficients reduced mod u.
fn taylor(p: &XPoly, n: usize, u: &XPoly) -> Series {
    let mut out = Vec::with_capacity(n);
    let mut d = p.clone();
    let mut fact = URatFunc::one();
    for k in 0..n {
        if k > 0 {
            d = d.deriv();
            fact = fact.mul(&URatFunc::from_rat(&rat(k as i64)));
        }
        out.push(d.scale(&fact.inv()).rem(u));
    }
    out
}

/// For `sum_j nums[j-1] / u^j` with u monic irreducible, the coefficient of
/// `(x - b)^(-k)` at a root b, as a polynomial in b reduced mod u, for k = 1..=m.
pub fn laurent_coefficients(u: &XPoly, nums: &[XPoly]) -> Vec<XPoly> {
    let m = nums.len();
    if m == 0 {
        return Vec::new();
    }
    // u(b + e) = e * w(e)
    let w: Series = taylor(u, m + 1, u)[1..].to_vec();
    let w0i = w[0].inv_mod(u).expect("u squarefree");
    let mut v = vec![XPoly::zero(); m];
    v[0] = w0i.clone();
    for k in 1..m {
        let mut acc = XPoly::zero();
        for i in 1..=k {
            acc = acc.add(&w[i].mul(&v[k - i]));
        }
        v[k] = acc.mul(&w0i).neg().rem(u);
    }
    let mut rho = vec![XPoly::zero(); m];
    let mut vp: Series = vec![XPoly::one()];
    vp.resize(m, XPoly::zero());
    for j in 1..=m {
        vp = smul(&vp, &v, m, u);
        let a = &nums[j - 1];
        if a.is_zero() {
            continue;
        }
        let s = smul(&taylor(a, m, u), &vp, m, u);
        for k in 1..=j {
            rho[k - 1] = rho[k - 1].add(&s[j - k]);
        }
    }
    rho.into_iter().map(|c| c.rem(u)).collect()
}
