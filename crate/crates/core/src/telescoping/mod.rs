//! Existence and construction of telescopers `L(t, d_t)(f) = d_x(g)` in the nine cases.

mod annihilator;
mod engine;
mod shape;

pub use annihilator::minimal_annihilator_diff;
pub use engine::{find_telescoper, find_telescoper_with, Strategy};
pub use shape::{classify_factor, FactorShape, Shape};

use crate::arith::poly::{Poly, Var};
use crate::arith::rat::Rat;
use crate::arith::ratfunc::RatFunc;
use crate::arith::xpoly::primitive_poly;
use crate::ore::{rational_solutions, OreKind, OrePoly};
use crate::reduction::{reduce_on_table, XCase};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TelescoperCase {
    pub dt: OreKind,
    pub dx: XCase,
}

impl TelescoperCase {
    pub fn new(dt: OreKind, dx: XCase) -> Result<Self> {
        if let (OreKind::Q(a), XCase::Qx(b)) = (&dt, &dx) {
            if a != b {
                return Err(Error::InvalidInput("q must agree on both sides".into()));
            }
        }
        Ok(TelescoperCase { dt, dx })
    }

    pub fn q(&self) -> Option<Rat> {
        match (&self.dt, &self.dx) {
            (OreKind::Q(q), _) | (_, XCase::Qx(q)) => Some(q.clone()),
            _ => None,
        }
    }

    /// Short tag such as `st/sx`.
    pub fn name(&self) -> String {
        let dt = match self.dt {
            OreKind::D => "dt",
            OreKind::S => "st",
            OreKind::Q(_) => "qt",
        };
        format!("{dt}/{}", self.dx.name())
    }

    fn is_dd(&self) -> bool {
        matches!((&self.dt, &self.dx), (OreKind::D, XCase::Dx))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decision {
    pub answer: bool,
    pub shapes: Vec<FactorShape>,
    pub obstructions: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TelescoperResult {
    /// Monic.
    pub op: OrePoly,
    pub certificate: RatFunc,
    pub case: TelescoperCase,
    pub minimal: bool,
    /// (order tried, nullspace dimension)
    pub trace: Vec<(usize, usize)>,
    pub bound: usize,
}

impl TelescoperResult {
    /// The operator with coprime polynomial coefficients, and the certificate scaled to match.
    pub fn normalized(&self) -> (OrePoly, RatFunc) {
        let (op, m) = self.op.normalize_poly();
        let g = self.certificate.mul(&RatFunc::from_urat(&m));
        (op, g)
    }
}

pub fn exists_telescoper(f: &RatFunc, case: &TelescoperCase) -> Result<Decision> {
    if case.is_dd() {
        return Ok(Decision {
            answer: true,
            shapes: Vec::new(),
            obstructions: Vec::new(),
        });
    }
    let (table, _, res) = reduce_on_table(f, &case.dx)?;
    let mut shapes = Vec::new();
    let mut obstructions = Vec::new();
    for &id in res.parts.keys() {
        let s = classify_factor(&primitive_poly(table.factor(id)), case)?;
        if s.shape == Shape::Obstruction {
            obstructions.push(s.u.clone());
        }
        shapes.push(s);
    }
    Ok(Decision {
        answer: obstructions.is_empty(),
        shapes,
        obstructions,
    })
}

/// Checks `L(f) = d_x(g)` exactly.
pub fn verify_telescoper(
    f: &RatFunc,
    l: &OrePoly,
    g: &RatFunc,
    case: &TelescoperCase,
) -> Result<bool> {
    if l.kind != case.dt {
        return Err(Error::KindMismatch);
    }
    Ok(l.apply(f).sub(&case.dx.apply(g)).is_zero())
}

/// Whether `L` is a telescoper of some non-exact rational function, for every case but (D_t, D_x).
pub fn is_potential_telescoper(l: &OrePoly, case: &TelescoperCase) -> Result<bool> {
    if case.is_dd() {
        return Err(Error::NeedsAlgebraicSolutions);
    }
    if l.kind != case.dt {
        return Err(Error::KindMismatch);
    }
    Ok(!rational_solutions(l).is_empty())
}

#[derive(Clone, Debug, PartialEq)]
pub enum WitnessInput {
    /// An operator with a rational solution (all cases but (D_t, D_x)).
    Operator(OrePoly),
    /// The minimal polynomial `P(t, x)` of an algebraic solution, optionally with the operator it solves.
    MinimalPolynomial { p: Poly, op: Option<OrePoly> },
}

/// A non-exact f that the given operator telescopes. The minimal telescoper of f is
/// checked to right-divide the operator.
pub fn witness_for_operator(input: &WitnessInput, case: &TelescoperCase) -> Result<RatFunc> {
    let (f, l) = match input {
        WitnessInput::Operator(l) => {
            if case.is_dd() {
                return Err(Error::NeedsAlgebraicSolutions);
            }
            if l.kind != case.dt {
                return Err(Error::KindMismatch);
            }
            let r = rational_solutions(l)
                .into_iter()
                .next()
                .ok_or(Error::NoRationalSolution)?;
            // 1/x is q-exact, 1/(x-1) is not
            let pole = match case.dx {
                XCase::Qx(_) => Poly::x().sub(&Poly::one()),
                _ => Poly::x(),
            };
            (
                RatFunc::from_urat(&r).mul(&RatFunc::frac(Poly::one(), pole)),
                Some(l.clone()),
            )
        }
        WitnessInput::MinimalPolynomial { p, op } => {
            if !case.is_dd() {
                return Err(Error::InvalidInput(
                    "a minimal polynomial witness needs the case (D_t, D_x)".into(),
                ));
            }
            if p.degree(Var::X) < 1 || p.has_var(Var::Z) || p.has_var(Var::W) {
                return Err(Error::InvalidInput(
                    "expected P in Q[t, x] with positive x-degree".into(),
                ));
            }
            let f = RatFunc::frac(Poly::x().mul(&p.deriv(Var::X)), p.clone());
            (f, op.clone())
        }
    };
    let found = find_telescoper(&f, case, None)?;
    if let Some(l) = l {
        if !l.rem(&found.op)?.is_zero() {
            return Err(Error::VerificationFailed(
                "the operator is not a left multiple of the minimal telescoper".into(),
            ));
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::Field;
    use crate::arith::rat::{rat, ratio};
    use crate::arith::ufrac::URatFunc;
    use crate::arith::upoly::UPoly;

    fn x() -> Poly {
        Poly::x()
    }
    fn t() -> Poly {
        Poly::t()
    }
    fn fr(n: Poly, d: Poly) -> RatFunc {
        RatFunc::frac(n, d)
    }
    fn case(dt: OreKind, dx: XCase) -> TelescoperCase {
        TelescoperCase::new(dt, dx).unwrap()
    }
    fn ut() -> URatFunc {
        URatFunc::t()
    }
    fn uc(c: Rat) -> URatFunc {
        URatFunc::constant(c)
    }

    #[test]
    fn decisions() {
        let q2 = || OreKind::Q(rat(2));
        let ss = case(OreKind::S, XCase::Sx);
        assert!(
            !exists_telescoper(&fr(Poly::one(), t().pow(2).add(&x().pow(2))), &ss)
                .unwrap()
                .answer
        );
        let dsx = case(OreKind::D, XCase::Sx);
        let f = fr(Poly::one(), x().pow(2).sub(&t()));
        assert!(!exists_telescoper(&f, &dsx).unwrap().answer);
        let g = fr(Poly::one(), x().add(&t()));
        assert!(
            !exists_telescoper(&g, &case(OreKind::S, XCase::Dx))
                .unwrap()
                .answer
        );
        assert!(
            !exists_telescoper(&g, &case(q2(), XCase::Dx))
                .unwrap()
                .answer
        );
        assert!(
            exists_telescoper(&g, &case(OreKind::D, XCase::Dx))
                .unwrap()
                .answer
        );
        let h = fr(Poly::one(), x().scale(&rat(2)).sub(&t()));
        let d = exists_telescoper(&h, &ss).unwrap();
        assert!(d.answer);
        assert_eq!(d.shapes[0].shape, Shape::IntegerLinear { lambda: 1, mu: 2 });
        assert!(
            exists_telescoper(&f, &case(q2(), XCase::Qx(rat(2))))
                .unwrap()
                .answer
        );
    }

    #[test]
    fn classify_examples() {
        let ss = case(OreKind::S, XCase::Sx);
        let s = |u: Poly, c: &TelescoperCase| classify_factor(&u, c).unwrap().shape;
        assert_eq!(s(t().pow(2).add(&x().pow(2)), &ss), Shape::Obstruction);
        assert_eq!(
            s(x().scale(&rat(2)).sub(&t()), &ss),
            Shape::IntegerLinear { lambda: 1, mu: 2 }
        );
        let qq = case(OreKind::Q(rat(2)), XCase::Qx(rat(2)));
        assert_eq!(
            s(x().pow(2).sub(&t()), &qq),
            Shape::QIntegerLinear {
                lambda: 1,
                mu: 2,
                e: 2
            }
        );
        assert_eq!(
            s(x().pow(2).sub(&t()), &case(OreKind::D, XCase::Sx)),
            Shape::Obstruction
        );
        assert_eq!(
            s(x().pow(2).sub(&Poly::int(2)), &case(OreKind::D, XCase::Sx)),
            Shape::ConstantRoot
        );
        assert_eq!(
            classify_factor(&x().pow(2).sub(&Poly::one()), &ss),
            Err(Error::ReducibleFactor)
        );
    }

    #[test]
    fn find_dd() {
        let dd = case(OreKind::D, XCase::Dx);
        let f = fr(Poly::one(), x().pow(2).sub(&t()));
        for strategy in [Strategy::Auto, Strategy::Ansatz] {
            let r = find_telescoper_with(&f, &dd, None, strategy).unwrap();
            let expect = OrePoly::new(
                OreKind::D,
                vec![uc(ratio(1, 2)).mul(&ut().inv()), URatFunc::one()],
            );
            assert_eq!(r.op, expect);
            assert!(r.minimal);
            assert_eq!(r.trace, vec![(0, 0), (1, 1)]);
            let (op, g) = r.normalized();
            assert_eq!(
                op,
                OrePoly::new(OreKind::D, vec![URatFunc::one(), ut().mul(&uc(rat(2)))])
            );
            assert_eq!(g, fr(x().neg(), x().pow(2).sub(&t())));
        }
    }

    #[test]
    fn find_shift() {
        let ss = case(OreKind::S, XCase::Sx);
        let f = fr(Poly::one(), x().scale(&rat(2)).sub(&t()));
        let r = find_telescoper(&f, &ss, None).unwrap();
        let s2m1 = OrePoly::new(
            OreKind::S,
            vec![uc(rat(-1)), URatFunc::zero(), URatFunc::one()],
        );
        assert_eq!(r.op, s2m1);
        assert_eq!(r.trace, vec![(0, 0), (1, 0), (2, 1)]);
        assert!(verify_telescoper(&f, &s2m1, &r.certificate, &ss).unwrap());
        let g = fr(
            Poly::int(-1),
            x().scale(&rat(2)).sub(&t()).sub(&Poly::int(2)),
        );
        assert!(verify_telescoper(&f, &s2m1, &g, &ss).unwrap());
        assert!(!verify_telescoper(&f, &s2m1, &RatFunc::zero(), &ss).unwrap());
        assert!(matches!(
            find_telescoper(&f, &ss, Some(1)),
            Err(Error::OrderBoundExceeded { max_order: 1, .. })
        ));

        let f = fr(Poly::one(), t().mul(&x()));
        let r = find_telescoper(&f, &ss, None).unwrap();
        let tt = URatFunc::new(UPoly::x(), UPoly::x().add(&UPoly::one()));
        assert_eq!(
            r.op,
            OrePoly::new(OreKind::S, vec![tt.neg(), URatFunc::one()])
        );
        assert!(r.certificate.is_zero());
    }

    #[test]
    fn no_telescoper_error() {
        let f = fr(Poly::one(), x().add(&t()));
        assert!(matches!(
            find_telescoper(&f, &case(OreKind::S, XCase::Dx), None),
            Err(Error::NoTelescoper { .. })
        ));
    }

    #[test]
    fn q_case() {
        let q = rat(2);
        let qq = case(OreKind::Q(q.clone()), XCase::Qx(q));
        let f = fr(Poly::one(), x().pow(2).sub(&t()));
        let r = find_telescoper(&f, &qq, None).unwrap();
        assert!(verify_telescoper(&f, &r.op, &r.certificate, &qq).unwrap());
        assert!(r.minimal);
    }

    #[test]
    fn characterization() {
        let ss = case(OreKind::S, XCase::Sx);
        let l = OrePoly::new(
            OreKind::S,
            vec![
                URatFunc::new(UPoly::x().add(&UPoly::one()), UPoly::x()).neg(),
                URatFunc::one(),
            ],
        );
        assert!(is_potential_telescoper(&l, &ss).unwrap());
        assert_eq!(
            witness_for_operator(&WitnessInput::Operator(l), &ss).unwrap(),
            fr(t(), x())
        );
        let l2 = OrePoly::new(OreKind::S, vec![uc(rat(-2)), URatFunc::one()]);
        assert!(!is_potential_telescoper(&l2, &ss).unwrap());
        assert_eq!(
            witness_for_operator(&WitnessInput::Operator(l2), &ss),
            Err(Error::NoRationalSolution)
        );
        let l3 = OrePoly::new(OreKind::D, vec![uc(rat(-1)), ut()]);
        assert!(is_potential_telescoper(&l3, &case(OreKind::D, XCase::Sx)).unwrap());
        let dd = case(OreKind::D, XCase::Dx);
        assert_eq!(
            is_potential_telescoper(&l3, &dd),
            Err(Error::NeedsAlgebraicSolutions)
        );
        let p = x().pow(2).sub(&t());
        let w =
            witness_for_operator(&WitnessInput::MinimalPolynomial { p, op: None }, &dd).unwrap();
        assert_eq!(w, fr(x().pow(2).scale(&rat(2)), x().pow(2).sub(&t())));
        let q = rat(3);
        let qq = case(OreKind::Q(q.clone()), XCase::Qx(q.clone()));
        let lq = OrePoly::new(OreKind::Q(q.clone()), vec![uc(q).neg(), URatFunc::one()]);
        assert_eq!(
            witness_for_operator(&WitnessInput::Operator(lq), &qq).unwrap(),
            fr(t(), x().sub(&Poly::one()))
        );
    }
}
