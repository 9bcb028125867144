//! Rational numbers and small helpers around `BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parses `"p"` or `"p/q"`, with an optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// `p/q` string form used in JSON output; integers print without a denominator.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Finds `m` with `q^m == r`, if any. Requires `|q| != 1`, `q != 0`.
pub fn q_log(q: &Rat, r: &Rat) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    if r.is_one() {
        return Some(0);
    }
    let bits = r.numer().bits().max(r.denom().bits()) as i64 + 1;
    let mut up = Rat::one();
    let mut down = Rat::one();
    let qi = q.recip();
    for m in 1..=bits {
        up *= q;
        down *= &qi;
        if &up == r {
            return Some(m);
        }
        if &down == r {
            return Some(-m);
        }
    }
    None
}

/// Valid q-parameters are rationals with `q != 0` and `|q| != 1`.
pub fn valid_q(q: &Rat) -> bool {
    !q.is_zero() && !q.abs().is_one()
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    a.lcm(b)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(rat_string(&ratio(4, 2)), "2");
        assert_eq!(rat_string(&ratio(-1, 3)), "-1/3");
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn q_logs() {
        let q = rat(2);
        assert_eq!(q_log(&q, &rat(8)), Some(3));
        assert_eq!(q_log(&q, &ratio(1, 4)), Some(-2));
        assert_eq!(q_log(&q, &rat(6)), None);
        assert_eq!(q_log(&ratio(-1, 3), &ratio(-1, 27)), Some(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(40, 20), "137846528820".parse().unwrap());
    }
}
