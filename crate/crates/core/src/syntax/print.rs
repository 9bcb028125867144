use std::fmt;

use num_traits::{One, Signed};

use crate::arith::field::Field;
use crate::arith::poly::{Monomial, Poly, Var};
use crate::arith::rat::{rat_string, Rat};
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::ore::OrePoly;

fn monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{e}", v.name())),
        }
    }
    parts.join("*")
}

/// `c*m` with the sign kept in front.
fn term(c: &Rat, m: &Monomial) -> String {
    if *m == Monomial::one() {
        return rat_string(c);
    }
    let mono = monomial(m);
    if One::is_one(c) {
        mono
    } else if One::is_one(&-c) {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", rat_string(c))
    }
}

fn join(terms: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for s in terms {
        if out.is_empty() {
            out = s;
        } else if let Some(rest) = s.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&s);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.terms().rev().map(|(m, c)| term(c, m))))
    }
}

/// Whether the printed form can sit next to `*` or `/` without parentheses.
fn is_atomic(p: &Poly) -> bool {
    match p.num_terms() {
        0 => true,
        1 => {
            let (m, c) = p.terms().next().unwrap();
            if *m == Monomial::one() {
                c.denom().is_one() && !c.is_negative()
            } else {
                One::is_one(c)
            }
        }
        _ => false,
    }
}

fn wrap(p: &Poly) -> String {
    if is_atomic(p) {
        p.to_string()
    } else {
        format!("({p})")
    }
}

fn frac(num: &Poly, den: &Poly) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        // a product after `/` needs parentheses: a/t*x reads as (a/t)*x
        let d = if is_atomic(den) && !den.to_string().contains('*') {
            den.to_string()
        } else {
            format!("({den})")
        };
        format!("{}/{d}", wrap(num))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&frac(self.num(), self.den()))
    }
}

fn t_poly(u: &crate::arith::upoly::UPoly) -> Poly {
    Poly::from_upoly(u, Var::T)
}

impl fmt::Display for URatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&frac(&t_poly(self.num()), &t_poly(self.den())))
    }
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.kind.symbol();
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if k == 0 {
                terms.push(c.to_string());
                continue;
            }
            let power = if k == 1 {
                sym.to_string()
            } else {
                format!("{sym}^{k}")
            };
            let (n, d) = (t_poly(c.num()), t_poly(c.den()));
            let coeff = if d.is_one() && n.num_terms() == 1 {
                let s = n.to_string();
                match s.as_str() {
                    "1" => String::new(),
                    "-1" => "-".into(),
                    _ => format!("{s}*"),
                }
            } else {
                format!("({c})*")
            };
            terms.push(format!("{coeff}{power}"));
        }
        f.write_str(&join(terms))
    }
}
