//! Fixed inputs shared by the benchmarks.

use rescope_core::{parse_ratfunc, OreKind, RatFunc, TelescoperCase, XCase};

/// `(name, case, f)` telescoper inputs, one per case with nontrivial work.
pub fn telescoper_inputs() -> Vec<(&'static str, TelescoperCase, RatFunc)> {
    let q = rescope_core::arith::rat::rat(2);
    let rows = [
        ("dt_dx_sqrt", OreKind::D, XCase::Dx, "1/(x^2-t)"),
        ("dt_dx_cubic", OreKind::D, XCase::Dx, "(x+1)/(x^3-t*x+1)"),
        ("st_sx_linear", OreKind::S, XCase::Sx, "1/((x-t)*(x+t+1))"),
        (
            "qt_qx_mono",
            OreKind::Q(q.clone()),
            XCase::Qx(q.clone()),
            "1/((x-t)*(x^2-3*t))",
        ),
        ("dt_sx_const", OreKind::D, XCase::Sx, "t/(x^2+1)"),
    ];
    rows.into_iter()
        .map(|(n, dt, dx, f)| {
            (
                n,
                TelescoperCase::new(dt, dx).unwrap(),
                parse_ratfunc(f).unwrap(),
            )
        })
        .collect()
}

/// Inputs for the three reductions.
pub fn reduction_inputs() -> Vec<(&'static str, XCase, RatFunc)> {
    let q = rescope_core::arith::rat::rat(2);
    vec![
        (
            "hermite",
            XCase::Dx,
            parse_ratfunc("(x+t)/((x^2-t)^3*(x+1)^2)").unwrap(),
        ),
        (
            "abramov",
            XCase::Sx,
            parse_ratfunc("1/(x*(x+3)*(x+t)*(x+t+2))").unwrap(),
        ),
        (
            "q",
            XCase::Qx(q),
            parse_ratfunc("1/((x-t)*(x-4*t)*(x+1))").unwrap(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_parse_and_decide() {
        for (name, case, f) in telescoper_inputs() {
            assert!(
                rescope_core::exists_telescoper(&f, &case).unwrap().answer,
                "{name}"
            );
        }
        assert_eq!(reduction_inputs().len(), 3);
    }
}
