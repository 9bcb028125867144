//! Shapes of irreducible denominator factors.

use num_integer::Integer;
use num_traits::Zero;

use super::TelescoperCase;
use crate::arith::factor::factor_bivariate;
use crate::arith::poly::{Monomial, Poly, Var};
use crate::arith::rat::{rat, rat_pow, Rat};
use crate::ore::OreKind;
use crate::reduction::XCase;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// Roots in Q-bar, independent of t.
    ConstantRoot,
    /// A polynomial in `mu x - lambda t`: invariant under `(t, x) -> (t + mu, x + lambda)`.
    IntegerLinear {
        lambda: i64,
        mu: i64,
    },
    /// `u(q^mu t, q^lambda x) = q^e u(t, x)`.
    QIntegerLinear {
        lambda: i64,
        mu: i64,
        e: i64,
    },
    /// No x: a unit in Q(t)[x].
    TOnly,
    Obstruction,
}

impl Shape {
    pub fn name(&self) -> &'static str {
        match self {
            Shape::ConstantRoot => "constantRoot",
            Shape::IntegerLinear { .. } => "integerLinear",
            Shape::QIntegerLinear { .. } => "qIntegerLinear",
            Shape::TOnly => "tOnly",
            Shape::Obstruction => "obstruction",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorShape {
    pub u: Poly,
    pub shape: Shape,
}

/// Which shape a factor must have for the case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Requirement {
    None,
    Constant,
    IntegerLinear,
    QIntegerLinear,
}

pub(crate) fn requirement(case: &TelescoperCase) -> Requirement {
    match (&case.dt, &case.dx) {
        (OreKind::D, XCase::Dx) => Requirement::None,
        (OreKind::S, XCase::Sx) => Requirement::IntegerLinear,
        (OreKind::Q(_), XCase::Qx(_)) => Requirement::QIntegerLinear,
        _ => Requirement::Constant,
    }
}

pub(crate) fn is_constant_root(u: &Poly) -> bool {
    let cs = u.coeffs_in(Var::X);
    let lc = cs.last().unwrap();
    // monic in x: every coefficient a rational multiple of the leading one
    cs.iter()
        .all(|c| c.is_zero() || c.div_exact(lc).is_some_and(|r| r.is_constant()))
}

pub(crate) fn integer_linear(u: &Poly) -> Option<(i64, i64)> {
    let n = u.degree(Var::X);
    if n < 1 {
        return None;
    }
    if !u.has_var(Var::T) {
        return Some((0, 1));
    }
    // top homogeneous form is c (mu x - lambda t)^n
    let n = u.total_degree();
    let cx = u.coeff(&Monomial::var(Var::X, n as u32));
    if cx.is_zero() {
        return None;
    }
    let m = Monomial::var(Var::X, n as u32 - 1).mul(&Monomial::var(Var::T, 1));
    let slope = -u.coeff(&m) / (cx * rat(n));
    let (lambda, mu) = (slope.numer().clone(), slope.denom().clone());
    let lambda = i64::try_from(lambda).ok()?;
    let mu = i64::try_from(mu).ok()?;
    let moved = u.subs_many(&[
        (Var::T, Poly::t().add(&Poly::int(mu))),
        (Var::X, Poly::x().add(&Poly::int(lambda))),
    ]);
    (moved == *u).then_some((lambda, mu))
}

pub(crate) fn q_integer_linear(u: &Poly, q: &Rat) -> Option<(i64, i64, i64)> {
    if u.degree(Var::X) < 1 {
        return None;
    }
    let support: Vec<(i64, i64)> = u
        .terms()
        .map(|(m, _)| (m.exp(Var::T) as i64, m.exp(Var::X) as i64))
        .collect();
    let (a1, b1) = support[0];
    let (mut mu, mut lambda) = match support.iter().find(|&&p| p != (a1, b1)) {
        None => (1, 0),
        Some(&(a2, b2)) => (b2 - b1, -(a2 - a1)),
    };
    let g = mu.gcd(&lambda);
    mu /= g;
    lambda /= g;
    if mu < 0 || (mu == 0 && lambda < 0) {
        mu = -mu;
        lambda = -lambda;
    }
    if mu == 0 {
        return None;
    }
    let e = mu * a1 + lambda * b1;
    if support.iter().any(|&(a, b)| mu * a + lambda * b != e) {
        return None;
    }
    let moved = u.subs_many(&[
        (Var::T, Poly::t().scale(&rat_pow(q, mu))),
        (Var::X, Poly::x().scale(&rat_pow(q, lambda))),
    ]);
    (moved == u.scale(&rat_pow(q, e))).then_some((lambda, mu, e))
}

/// Shape of an irreducible factor relative to the requirement of `case`.
pub fn classify_factor(u: &Poly, case: &TelescoperCase) -> Result<FactorShape> {
    if u.is_zero() || u.is_constant() {
        return Err(Error::InvalidInput(
            "classify needs a nonconstant factor".into(),
        ));
    }
    let fac = factor_bivariate(u)?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err(Error::ReducibleFactor);
    }
    let u = u.normalize();
    if !u.has_var(Var::X) {
        return Ok(FactorShape {
            u,
            shape: Shape::TOnly,
        });
    }
    let shape = match requirement(case) {
        Requirement::IntegerLinear => match integer_linear(&u) {
            Some((lambda, mu)) => Shape::IntegerLinear { lambda, mu },
            None => Shape::Obstruction,
        },
        Requirement::QIntegerLinear => {
            let q = case.q().expect("q-case carries q");
            match q_integer_linear(&u, &q) {
                Some((lambda, mu, e)) => Shape::QIntegerLinear { lambda, mu, e },
                None => Shape::Obstruction,
            }
        }
        // (D_t, D_x) requires nothing; it reports the constant test like the mixed cases
        Requirement::Constant | Requirement::None => {
            if is_constant_root(&u) {
                Shape::ConstantRoot
            } else {
                Shape::Obstruction
            }
        }
    };
    Ok(FactorShape { u, shape })
}

/// The multiplier `mu` of a shape, used in order bounds.
pub(crate) fn shape_period(s: &Shape) -> usize {
    match s {
        Shape::IntegerLinear { mu, .. } | Shape::QIntegerLinear { mu, .. } => {
            (*mu).unsigned_abs() as usize
        }
        _ => 1,
    }
}
