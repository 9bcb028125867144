//! Diagonals of bivariate rational functions and the binary-word example.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::poly::{Poly, Var};
use crate::arith::rat::{int, Rat};
use crate::arith::ratfunc::RatFunc;
use crate::arith::series::{series_expand, SeriesVec};
use crate::arith::ufrac::URatFunc;
use crate::arith::upoly::{upoly, UPoly};
use crate::ore::{OreKind, OrePoly};
use crate::reduction::XCase;
use crate::telescoping::{find_telescoper, TelescoperCase};
use crate::{Error, Result};

/// Longest word length `stanley_words_count` enumerates.
pub const WORD_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq)]
pub struct DiagReport {
    pub big_f: RatFunc,
    /// Polynomial coefficients.
    pub op: OrePoly,
    pub diag_series: SeriesVec,
    pub check_order: usize,
    /// `op` applied to the series, on the coefficients it determines.
    pub residual_of_check: Vec<Rat>,
}

/// `F = f(x, t/x) / x`, whose residue at x = 0 in t-adic expansion is the diagonal of f.
pub fn diagonal_substitute(f: &RatFunc) -> RatFunc {
    let w = f
        .subs(&[(Var::T, Poly::var(Var::W))])
        .expect("renaming keeps the denominator");
    let t_over_x = RatFunc::frac(Poly::t(), Poly::x());
    let g = w
        .subs_frac(Var::X, &t_over_x)
        .expect("t/x is a unit in Q(t, x)");
    let g = g
        .subs(&[(Var::W, Poly::x())])
        .expect("renaming keeps the denominator");
    g.mul(&RatFunc::frac(Poly::one(), Poly::x()))
}

fn check_origin(f: &RatFunc) -> Result<()> {
    if f.den()
        .eval(Var::T, &Rat::zero())
        .eval(Var::X, &Rat::zero())
        .is_zero()
    {
        return Err(Error::IrregularAtOrigin);
    }
    Ok(())
}

/// Coefficient of `x^k` in the Laurent expansion at 0 of a rational function of x.
fn laurent_coeff(c: &RatFunc, k: i64) -> Rat {
    let num = c.num().to_upoly(Var::X);
    let den = c.den().to_upoly(Var::X);
    let v = den.coeffs().iter().take_while(|a| a.is_zero()).count();
    let den = UPoly::new(den.coeffs()[v..].to_vec());
    let target = k + v as i64;
    if target < 0 {
        return Rat::zero();
    }
    let target = target as usize;
    // power series of num/den up to x^target
    let d0 = den.coeff(0).recip();
    let mut s: Vec<Rat> = Vec::with_capacity(target + 1);
    for i in 0..=target {
        let mut acc = num.coeff(i);
        for j in 1..=i.min(den.deg().max(0) as usize) {
            acc -= den.coeff(j) * &s[i - j];
        }
        s.push(acc * &d0);
    }
    s[target].clone()
}

/// `f_{0,0}, ..., f_{N,N}` by expanding in t, then in x.
pub fn diag_series(f: &RatFunc, n: usize) -> Result<SeriesVec> {
    check_origin(f)?;
    let cs = series_expand(f, n)?;
    Ok(SeriesVec::new(
        cs.iter()
            .enumerate()
            .map(|(i, c)| laurent_coeff(c, i as i64))
            .collect(),
    ))
}

/// `[x^-1]` of the t-adic expansion of F, coefficient by coefficient.
pub fn residue_series(big_f: &RatFunc, n: usize) -> Result<SeriesVec> {
    let cs = series_expand(big_f, n)?;
    Ok(SeriesVec::new(
        cs.iter().map(|c| laurent_coeff(c, -1)).collect(),
    ))
}

/// Minimal differential telescoper of `diagonal_substitute(f)` with polynomial coefficients.
pub fn diagonal_ode(f: &RatFunc) -> Result<OrePoly> {
    check_origin(f)?;
    let case = TelescoperCase::new(OreKind::D, XCase::Dx)?;
    let r = find_telescoper(&diagonal_substitute(f), &case, None)?;
    if r.op.order() == 0 {
        // zero diagonal: the telescoper 1 annihilates only 0, so return D_t instead
        return Ok(OrePoly::symbol(OreKind::D));
    }
    Ok(r.normalized().0)
}

fn series_mul_poly(p: &UPoly, s: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); s.len()];
    for (i, a) in p.coeffs().iter().enumerate() {
        for (j, b) in s.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += a * b;
            }
        }
    }
    out
}

/// `L(s)` on the coefficients of degree `< len(s) - order(L)`, which the truncation determines.
pub fn apply_to_series(l: &OrePoly, s: &SeriesVec) -> Result<Vec<Rat>> {
    if l.kind != OreKind::D {
        return Err(Error::KindMismatch);
    }
    let n = s.coeffs.len();
    let r = l.order();
    if n < r {
        return Err(Error::TruncationTooShort { have: n, need: r });
    }
    let (l, _) = l.normalize_poly();
    let keep = n - r;
    let mut out = vec![Rat::zero(); keep];
    let mut deriv = s.coeffs.clone();
    for k in 0..=r {
        let term = series_mul_poly(l.coeff(k).num(), &deriv);
        for (o, v) in out.iter_mut().zip(term) {
            *o += v;
        }
        deriv = deriv
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(&BigInt::from(i)))
            .collect();
    }
    Ok(out)
}

/// Whether `L` annihilates the series as far as its truncation determines.
pub fn check_annihilates_series(l: &OrePoly, s: &SeriesVec) -> Result<bool> {
    Ok(apply_to_series(l, s)?.iter().all(Zero::is_zero))
}

pub fn diagonal_report(f: &RatFunc, n: usize) -> Result<DiagReport> {
    let big_f = diagonal_substitute(f);
    let op = diagonal_ode(f)?;
    let diag = diag_series(f, n)?;
    let residual_of_check = apply_to_series(&op, &diag)?;
    Ok(DiagReport {
        big_f,
        op,
        diag_series: diag,
        check_order: n,
        residual_of_check,
    })
}

/// Binary words of length n with as many occurrences of 00 as of 01.
pub fn stanley_words_count(n: usize) -> Result<u64> {
    if n > WORD_CAP {
        return Err(Error::WordLengthCap { n, cap: WORD_CAP });
    }
    if n < 2 {
        return Ok(1 << n);
    }
    let mut count = 0;
    for w in 0u32..(1 << n) {
        let mut balance = 0i32;
        for i in 0..n - 1 {
            if w >> i & 1 == 0 {
                balance += if w >> (i + 1) & 1 == 0 { 1 } else { -1 };
            }
        }
        count += u64::from(balance == 0);
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EzReport {
    pub report: DiagReport,
    pub expected: OrePoly,
    pub matches: bool,
    /// Leading coefficient of the operator is nonzero at t = 0.
    pub ordinary_at_zero: bool,
    /// `s(0..=N)` from word enumeration.
    pub word_counts: Vec<u64>,
    pub words_match_residues: bool,
}

impl EzReport {
    pub fn series_annihilated(&self) -> bool {
        self.report.residual_of_check.iter().all(Zero::is_zero)
    }

    pub fn verdict(&self) -> &'static str {
        if self.matches {
            "MATCH"
        } else {
            "MISMATCH"
        }
    }
}

/// The word-counting generating function `f(t, y, z)` with y = x and z = 1/x, divided by x.
pub fn ez_function() -> RatFunc {
    let (t, x) = (Poly::t(), Poly::x());
    let one = Poly::one();
    let num = one.sub(&x).mul(&t).add(&one);
    let den = x
        .pow(2)
        .sub(&one)
        .mul(&t.pow(2))
        .sub(&x.add(&x.pow(2)).mul(&t))
        .add(&x);
    RatFunc::frac(num, den)
}

/// The operator printed for this example, up to normalization.
pub fn ez_expected() -> OrePoly {
    let c = |v: &[i64]| URatFunc::from_poly(upoly(v));
    OrePoly::new(
        OreKind::D,
        vec![
            c(&[0, -6, -12, 48, -72, 48]),
            c(&[2, -2, 24, -88, 152, -168, 80]),
            c(&[-1, 5, -13, 23, -30, 40, -40, 16]),
        ],
    )
}

/// Runs the example with series checks up to `t^n`.
pub fn ez_pipeline(n: usize) -> Result<EzReport> {
    let big_f = ez_function();
    let case = TelescoperCase::new(OreKind::D, XCase::Dx)?;
    let op = find_telescoper(&big_f, &case, None)?.normalized().0;
    let expected = ez_expected();
    let word_counts = (0..=n)
        .map(stanley_words_count)
        .collect::<Result<Vec<u64>>>()?;
    let words = SeriesVec::new(word_counts.iter().map(|&c| int(&BigInt::from(c))).collect());
    let words_match_residues = residue_series(&big_f, n)? == words;
    let residual_of_check = apply_to_series(&op, &words)?;
    let ordinary_at_zero = !op.lc().num().coeff(0).is_zero();
    Ok(EzReport {
        matches: op == expected,
        report: DiagReport {
            big_f,
            op,
            diag_series: words,
            check_order: n,
            residual_of_check,
        },
        expected,
        ordinary_at_zero,
        word_counts,
        words_match_residues,
    })
}
