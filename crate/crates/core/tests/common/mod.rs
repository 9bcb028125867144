#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rescope_core::arith::rat::rat;
use rescope_core::Field;
use rescope_core::{
    Monomial, OreKind, OrePoly, Poly, RatFunc, TelescoperCase, UPoly, URatFunc, Var, XCase,
};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q2() -> rescope_core::Rat {
    rat(2)
}

/// Random polynomial in t and x of total degree at most `deg`, small integer coefficients.
pub fn poly(rng: &mut ChaCha8Rng, deg: u32, density: f64) -> Poly {
    let mut terms = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            if rng.gen_bool(density) {
                let c = rng.gen_range(-5i64..=5);
                terms.push((Monomial([a, b, 0, 0]), rat(c)));
            }
        }
    }
    Poly::from_terms(terms)
}

pub fn with_x(rng: &mut ChaCha8Rng, deg: u32) -> Poly {
    loop {
        let p = poly(rng, deg, 0.5);
        if p.degree(Var::X) >= 1 {
            return p;
        }
    }
}

pub fn x_only(rng: &mut ChaCha8Rng, deg: u32) -> Poly {
    let cs: Vec<Poly> = (0..deg)
        .map(|_| Poly::int(rng.gen_range(-4..=4)))
        .chain([Poly::one()])
        .collect();
    Poly::from_coeffs_in(Var::X, &cs)
}

/// A polynomial in `mu x - lambda t` of the given degree.
pub fn integer_linear(rng: &mut ChaCha8Rng, deg: u32) -> Poly {
    let mu = rng.gen_range(1..=2);
    let lambda = rng.gen_range(-2..=2);
    let s = Poly::x()
        .scale(&rat(mu))
        .sub(&Poly::t().scale(&rat(lambda)));
    let p = x_only(rng, deg);
    p.subs(Var::X, &s)
}

/// `x^b - c t^a`, or a polynomial in x alone.
pub fn q_linear(rng: &mut ChaCha8Rng, deg: u32) -> Poly {
    if rng.gen_bool(0.3) {
        return x_only(rng, deg).add(&Poly::int(rng.gen_range(1..=3)));
    }
    let b = rng.gen_range(1..=deg);
    let a = rng.gen_range(1..=(deg.max(2) - 1));
    let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
    Poly::x().pow(b).sub(&Poly::t().pow(a).scale(&rat(c)))
}

fn is_dd(case: &TelescoperCase) -> bool {
    matches!((&case.dt, &case.dx), (OreKind::D, XCase::Dx))
}

/// A random denominator factor, biased toward the shapes the case accepts.
fn factor_for(rng: &mut ChaCha8Rng, case: &TelescoperCase, deg: u32) -> Poly {
    if is_dd(case) || rng.gen_bool(0.15) {
        return with_x(rng, deg);
    }
    match (&case.dt, &case.dx) {
        (OreKind::S, XCase::Sx) => integer_linear(rng, deg),
        (OreKind::Q(_), XCase::Qx(_)) => q_linear(rng, deg),
        _ => x_only(rng, deg),
    }
}

/// Random f with numerator and denominator of total degree at most 4.
pub fn ratfunc_for(rng: &mut ChaCha8Rng, case: &TelescoperCase) -> RatFunc {
    loop {
        let d1 = rng.gen_range(1..=2);
        let mut den = factor_for(rng, case, d1);
        let rest = 4 - den.total_degree() as u32;
        if rest >= 1 && rng.gen_bool(0.5) {
            den = den.mul(&factor_for(rng, case, rest.min(2)));
        }
        let d = rng.gen_range(0..=3);
        let num = poly(rng, d, 0.4);
        if den.total_degree() > 4 || num.is_zero() {
            continue;
        }
        let f = RatFunc::frac(num, den);
        if f.has_var(Var::X) && !f.is_poly() {
            return f;
        }
    }
}

/// Random f for a reduction case, degree at most 4 on both sides.
pub fn ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    loop {
        let d = rng.gen_range(1..=4);
        let den = with_x(rng, d);
        let d = rng.gen_range(0..=4);
        let num = poly(rng, d, 0.4);
        if !num.is_zero() {
            return RatFunc::frac(num, den);
        }
    }
}

/// Random f whose x-denominator has repeated and shifted factors, to exercise reductions.
pub fn ratfunc_structured(rng: &mut ChaCha8Rng, dx: &XCase) -> RatFunc {
    let d = rng.gen_range(1..=2);
    let u = with_x(rng, d);
    let moved = match dx {
        XCase::Dx => u.clone(),
        XCase::Sx => u.subs(Var::X, &Poly::x().add(&Poly::int(rng.gen_range(1..=3)))),
        XCase::Qx(q) => u.subs(Var::X, &Poly::x().scale(q)),
    };
    let den = if rng.gen_bool(0.5) {
        u.mul(&moved)
    } else {
        u.pow(2)
    };
    let d = rng.gen_range(0..=2);
    let num = poly(rng, d, 0.5);
    RatFunc::frac(if num.is_zero() { Poly::one() } else { num }, den)
}

pub fn all_cases() -> Vec<TelescoperCase> {
    let q = q2();
    let dts = [OreKind::D, OreKind::S, OreKind::Q(q.clone())];
    let dxs = [XCase::Dx, XCase::Sx, XCase::Qx(q)];
    let mut out = Vec::new();
    for dt in &dts {
        for dx in &dxs {
            out.push(TelescoperCase::new(dt.clone(), dx.clone()).unwrap());
        }
    }
    out
}

pub fn x_cases() -> Vec<XCase> {
    vec![XCase::Dx, XCase::Sx, XCase::Qx(q2())]
}

/// Random univariate polynomial in t of degree at most `deg`.
pub fn upoly_t(rng: &mut ChaCha8Rng, deg: usize) -> UPoly {
    UPoly::new((0..=deg).map(|_| rat(rng.gen_range(-4i64..=4))).collect())
}

/// Random nonzero element of Q(t) with numerator and denominator of degree at most 2.
pub fn urat(rng: &mut ChaCha8Rng) -> URatFunc {
    loop {
        let dn = rng.gen_range(0..=2);
        let dd = rng.gen_range(0..=1);
        let (n, d) = (upoly_t(rng, dn), upoly_t(rng, dd));
        if !n.is_zero() && !d.is_zero() {
            return URatFunc::new(n, d);
        }
    }
}

/// Random operator of order exactly `order`.
pub fn operator(rng: &mut ChaCha8Rng, kind: &OreKind, order: usize) -> OrePoly {
    let mut cs: Vec<URatFunc> = (0..order)
        .map(|_| {
            if rng.gen_bool(0.3) {
                URatFunc::zero()
            } else {
                urat(rng)
            }
        })
        .collect();
    cs.push(urat(rng));
    OrePoly::new(kind.clone(), cs)
}

pub fn kinds() -> Vec<OreKind> {
    vec![OreKind::D, OreKind::S, OreKind::Q(q2())]
}

/// Random operator of order at most `max`.
pub fn operator_upto(rng: &mut ChaCha8Rng, kind: &OreKind, max: usize) -> OrePoly {
    let order = rng.gen_range(0..=max);
    operator(rng, kind, order)
}
