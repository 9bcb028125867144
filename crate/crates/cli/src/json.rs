use rescope_core::arith::rat::rat_string;
use rescope_core::{FactorShape, Rat, ResidualForm, ResidueData, Shape};
use serde_json::{json, Value};

pub fn rats(v: &[Rat]) -> Value {
    Value::from(v.iter().map(rat_string).collect::<Vec<_>>())
}

pub fn residual(r: &ResidualForm) -> Value {
    let terms: Vec<Value> = r
        .terms
        .iter()
        .map(|t| json!({ "u": t.u.to_string(), "j": t.j, "a": t.a.to_string() }))
        .collect();
    json!({ "terms": terms, "infinity": r.infinity.to_string(), "expr": r.to_ratfunc().to_string() })
}

pub fn residues(rs: &[ResidueData]) -> Value {
    Value::from(
        rs.iter()
            .map(|r| {
                json!({
                    "kind": r.kind.name(),
                    "u": r.u.as_ref().map(|u| u.to_string()),
                    "j": r.j,
                    "rho": r.rho.to_string(),
                })
            })
            .collect::<Vec<_>>(),
    )
}

pub fn shape(s: &FactorShape) -> Value {
    let mut v = json!({ "u": s.u.to_string(), "shape": s.shape.name() });
    match s.shape {
        Shape::IntegerLinear { lambda, mu } => {
            v["lambda"] = lambda.into();
            v["mu"] = mu.into();
        }
        Shape::QIntegerLinear { lambda, mu, e } => {
            v["lambda"] = lambda.into();
            v["mu"] = mu.into();
            v["e"] = e.into();
        }
        _ => {}
    }
    v
}

pub fn trace(t: &[(usize, usize)]) -> Value {
    Value::from(t.iter().map(|&(o, n)| json!([o, n])).collect::<Vec<_>>())
}
