use crate::arith::field::Field;
use crate::arith::poly::Poly;
use crate::arith::rat::{int, Rat};
use crate::arith::ratfunc::RatFunc;
use crate::arith::ufrac::URatFunc;
use crate::ore::{OreKind, OrePoly};
use crate::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Tokens with their character offsets.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), start));
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), start));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((Tok::Op('-'), start));
            i += 1;
        } else {
            return Err(err(start, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

#[derive(Debug)]
enum Ast {
    Num(BigInt),
    Sym(String, usize),
    Neg(Box<Ast>),
    Bin(char, Box<Ast>, Box<Ast>, usize),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.1)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.i) {
            Some((Tok::Op(c), _)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            let p = self.pos();
            self.i += 1;
            lhs = Ast::Bin(c, Box::new(lhs), Box::new(self.term()?), p);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            let p = self.pos();
            self.i += 1;
            lhs = Ast::Bin(c, Box::new(lhs), Box::new(self.unary()?), p);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        match self.peek_op() {
            Some('-') => {
                self.i += 1;
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.i += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.i += 1;
        let p = self.pos();
        match self.toks.get(self.i) {
            Some((Tok::Num(n), _)) => {
                let e = u32::try_from(n).map_err(|_| err(p, "exponent too large"))?;
                self.i += 1;
                if self.peek_op() == Some('^') {
                    return Err(err(self.pos(), "chained exponents need parentheses"));
                }
                Ok(Ast::Pow(Box::new(base), e))
            }
            _ => Err(err(p, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let p = self.pos();
        let tok = self.toks.get(self.i).cloned();
        self.i += 1;
        match tok {
            Some((Tok::Num(n), _)) => Ok(Ast::Num(n)),
            Some((Tok::Ident(s), _)) => Ok(Ast::Sym(s, p)),
            Some((Tok::Op('('), _)) => {
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(err(self.pos(), "expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some((Tok::Op(c), _)) => Err(err(p, format!("unexpected '{c}'"))),
            None => Err(err(p, "unexpected end of input")),
        }
    }
}

fn parse_ast(text: &str) -> Result<Ast> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.i < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

fn q_value(q: Option<&Rat>, pos: usize) -> Result<Rat> {
    q.cloned()
        .ok_or_else(|| err(pos, "symbol q needs a value for q"))
}

fn eval_rf(e: &Ast, q: Option<&Rat>) -> Result<RatFunc> {
    Ok(match e {
        Ast::Num(n) => RatFunc::constant(int(n)),
        Ast::Sym(s, p) => match s.as_str() {
            "t" => RatFunc::from_poly(Poly::t()),
            "x" => RatFunc::from_poly(Poly::x()),
            "q" => RatFunc::constant(q_value(q, *p)?),
            _ => return Err(err(*p, format!("unknown symbol '{s}'"))),
        },
        Ast::Neg(a) => eval_rf(a, q)?.neg(),
        Ast::Pow(a, k) => eval_rf(a, q)?.pow(*k),
        Ast::Bin(op, a, b, _) => {
            let (a, b) = (eval_rf(a, q)?, eval_rf(b, q)?);
            match op {
                '+' => a.add(&b),
                '-' => a.sub(&b),
                '*' => a.mul(&b),
                _ => a.div(&b)?,
            }
        }
    })
}

/// Parses a rational function in t and x over Q.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    eval_rf(&parse_ast(text)?, None)
}

/// As `parse_ratfunc`, with the symbol q standing for the given rational.
pub fn parse_ratfunc_q(text: &str, q: &Rat) -> Result<RatFunc> {
    eval_rf(&parse_ast(text)?, Some(q))
}

/// Parses a polynomial in t and x.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let f = parse_ratfunc(text)?;
    if !f.is_poly() {
        return Err(err(0, "expected a polynomial"));
    }
    Ok(f.num().scale(&f.den().constant_value().unwrap().recip()))
}

fn eval_op(e: &Ast, kind: &OreKind) -> Result<OrePoly> {
    let scalar = |c: Rat| OrePoly::scalar(kind.clone(), URatFunc::constant(c));
    Ok(match e {
        Ast::Num(n) => scalar(int(n)),
        Ast::Sym(s, p) => match s.as_str() {
            "t" => OrePoly::scalar(kind.clone(), URatFunc::t()),
            "q" => match kind {
                OreKind::Q(q) => scalar(q.clone()),
                _ => return Err(err(*p, "symbol q needs a value for q")),
            },
            "x" => return Err(err(*p, "x may not appear in operator coefficients")),
            "Dt" | "St" | "Qt" if s == kind.symbol() => OrePoly::symbol(kind.clone()),
            "Dt" | "St" | "Qt" => {
                return Err(err(
                    *p,
                    format!(
                        "mixing operator symbols: {s} in an operator in {}",
                        kind.symbol()
                    ),
                ))
            }
            _ => return Err(err(*p, format!("unknown symbol '{s}'"))),
        },
        Ast::Neg(a) => eval_op(a, kind)?.neg(),
        Ast::Pow(a, k) => {
            let base = eval_op(a, kind)?;
            let mut acc = OrePoly::one(kind.clone());
            for _ in 0..*k {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Ast::Bin(op, a, b, p) => {
            let (a, b) = (eval_op(a, kind)?, eval_op(b, kind)?);
            match op {
                '+' => a.add(&b)?,
                '-' => a.sub(&b)?,
                '*' => a.mul(&b)?,
                _ => {
                    if b.order() > 0 || b.is_zero() {
                        return Err(if b.is_zero() {
                            Error::ZeroDenominator
                        } else {
                            err(*p, "division by an operator")
                        });
                    }
                    // right division by a scalar c is left multiplication by sigma^k(1/c) termwise
                    let inv = b.coeff(0).inv();
                    let mut out = OrePoly::zero(kind.clone());
                    for (k, c) in a.coeffs().iter().enumerate() {
                        let term = OrePoly::monomial(kind.clone(), c.clone(), k);
                        out = out.add(&term.mul(&OrePoly::scalar(kind.clone(), inv.clone()))?)?;
                    }
                    out
                }
            }
        }
    })
}

/// Parses an operator in Dt, St or Qt (matching `kind`) with coefficients in Q(t).
pub fn parse_operator(text: &str, kind: &OreKind) -> Result<OrePoly> {
    eval_op(&parse_ast(text)?, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;

    #[test]
    fn ratfuncs() {
        let f = parse_ratfunc("1/(t^2+x^2)").unwrap();
        assert_eq!(
            f,
            RatFunc::frac(Poly::one(), Poly::t().pow(2).add(&Poly::x().pow(2)))
        );
        let g = parse_ratfunc("(2*x+1)/(x*(x+1))").unwrap();
        assert_eq!(g.den(), &Poly::x().mul(&Poly::x().add(&Poly::one())));
        assert_eq!(parse_ratfunc("1/(x-x)"), Err(Error::ZeroDenominator));
        let h = parse_ratfunc("(x + 1)/(t*x)").unwrap();
        assert_eq!(h.to_string(), "(x + 1)/(t*x)");
        assert_eq!(parse_ratfunc(&h.to_string()).unwrap(), h);
        assert_eq!(
            parse_ratfunc("-x^2").unwrap(),
            RatFunc::from_poly(Poly::x().pow(2).neg())
        );
        assert!(matches!(
            parse_ratfunc("1/(y)"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_ratfunc("x^"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_ratfunc("(x"), Err(Error::Parse { .. })));
        assert!(parse_ratfunc("q*x").is_err());
        assert_eq!(
            parse_ratfunc_q("q*x", &rat(3)).unwrap(),
            RatFunc::from_poly(Poly::x().scale(&rat(3)))
        );
        assert_eq!(
            parse_ratfunc("1 \u{2212} t").unwrap(),
            RatFunc::from_poly(Poly::one().sub(&Poly::t()))
        );
    }

    #[test]
    fn operators() {
        let l = parse_operator("(1-4*t)*Dt - 2", &OreKind::D).unwrap();
        assert_eq!(l.order(), 1);
        assert_eq!(parse_operator("St^2 - 1", &OreKind::S).unwrap().order(), 2);
        let d = parse_operator("Dt*t", &OreKind::D).unwrap();
        assert_eq!(
            d,
            OrePoly::new(OreKind::D, vec![URatFunc::one(), URatFunc::t()])
        );
        assert!(parse_operator("Dt + St", &OreKind::D).is_err());
        assert!(parse_operator("x*Dt", &OreKind::D).is_err());
        // St / t means St * (1/t) = 1/(t+1) St
        let s = parse_operator("St/t", &OreKind::S).unwrap();
        assert_eq!(s.coeff(1), URatFunc::t().add(&URatFunc::one()).inv());
        assert_eq!(
            parse_operator("Qt - q", &OreKind::Q(rat(2)))
                .unwrap()
                .coeff(0),
            URatFunc::constant(rat(-2))
        );
    }
}
