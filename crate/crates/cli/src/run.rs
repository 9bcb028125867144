use num_traits::Zero;
use rayon::prelude::*;
use rescope_core::arith::rat::{parse_rat, rat_string, valid_q};
use rescope_core::{
    diagonal_report, exists_telescoper, ez_pipeline, find_telescoper, is_exact,
    is_potential_telescoper, parse_operator, parse_poly, parse_ratfunc, parse_ratfunc_q,
    rational_solutions, reduce, residues, verify_telescoper, witness_for_operator, Error, OreKind,
    Rat, RatFunc, TelescoperCase, WitnessInput, XCase,
};
use serde_json::{json, Map, Value};

use crate::json;
use crate::{CaseArgs, Cli, Command, Dt, Dx};

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const USAGE: u8 = 2;
pub const BOUND: u8 = 3;

pub struct Outcome {
    pub code: u8,
    pub json: Value,
    pub text: String,
}

struct Job<'a> {
    cli: &'a Cli,
    command: &'static str,
    inputs: Map<String, Value>,
    case: Value,
}

/// What a command produced before it is wrapped for output.
struct Body {
    code: u8,
    result: Value,
    certificate: Option<String>,
    trace: Option<Value>,
    text: String,
}

impl Body {
    fn new(code: u8, result: Value, text: String) -> Self {
        Body {
            code,
            result,
            certificate: None,
            trace: None,
            text,
        }
    }
}

fn code_of(e: &Error) -> u8 {
    match e {
        Error::NoTelescoper { .. } | Error::NoRationalSolution => NEGATIVE,
        Error::OrderBoundExceeded { .. } | Error::VerificationFailed(_) => BOUND,
        _ => USAGE,
    }
}

fn fail(e: Error) -> Body {
    let mut text = format!("error: {e}");
    let mut result = json!({ "error": e.to_string() });
    if let Error::NoTelescoper { obstructions } = &e {
        text = format!(
            "no telescoper exists; obstructions: {}",
            obstructions.join(", ")
        );
        result = json!({ "exists": false, "obstructions": obstructions });
    }
    Body::new(code_of(&e), result, text)
}

impl Job<'_> {
    fn finish(self, b: Body) -> Outcome {
        let mut obj = Map::new();
        obj.insert("command".into(), self.command.into());
        obj.insert("inputs".into(), Value::Object(self.inputs));
        obj.insert("case".into(), self.case);
        obj.insert("result".into(), b.result);
        if let Some(c) = b.certificate {
            obj.insert("certificate".into(), c.into());
        }
        if let Some(t) = b.trace {
            obj.insert("trace".into(), t);
        }
        Outcome {
            code: b.code,
            json: Value::Object(obj),
            text: b.text,
        }
    }

    fn q(&self) -> rescope_core::Result<Option<Rat>> {
        match &self.cli.q {
            None => Ok(None),
            Some(s) => {
                let q = parse_rat(s).ok_or_else(|| Error::InvalidQ(s.clone()))?;
                if !valid_q(&q) {
                    return Err(Error::InvalidQ(s.clone()));
                }
                Ok(Some(q))
            }
        }
    }

    fn need_q(&self) -> rescope_core::Result<Rat> {
        self.q()?
            .ok_or_else(|| Error::InvalidInput("q-shift cases need --q".into()))
    }

    fn ratfunc(&self, s: &str) -> rescope_core::Result<RatFunc> {
        match self.q()? {
            Some(q) => parse_ratfunc_q(s, &q),
            None => parse_ratfunc(s),
        }
    }

    fn dx(&self, dx: Dx) -> rescope_core::Result<XCase> {
        Ok(match dx {
            Dx::Dx => XCase::Dx,
            Dx::Sx => XCase::Sx,
            Dx::Qx => XCase::qx(self.need_q()?)?,
        })
    }

    fn dt(&self, dt: Dt) -> rescope_core::Result<OreKind> {
        Ok(match dt {
            Dt::Dt => OreKind::D,
            Dt::St => OreKind::S,
            Dt::Qt => OreKind::q(self.need_q()?)?,
        })
    }

    fn case(&self, c: &CaseArgs) -> rescope_core::Result<TelescoperCase> {
        TelescoperCase::new(self.dt(c.dt)?, self.dx(c.dx)?)
    }
}

fn input_expr(cmd_expr: &Option<String>, line: Option<&str>) -> rescope_core::Result<String> {
    line.map(str::to_string)
        .or_else(|| cmd_expr.clone())
        .ok_or_else(|| Error::InvalidInput("missing input expression".into()))
}

fn dx_name(dx: Dx) -> &'static str {
    match dx {
        Dx::Dx => "dx",
        Dx::Sx => "sx",
        Dx::Qx => "qx",
    }
}

fn case_name(c: &CaseArgs) -> String {
    let dt = match c.dt {
        Dt::Dt => "dt",
        Dt::St => "st",
        Dt::Qt => "qt",
    };
    format!("{dt}/{}", dx_name(c.dx))
}

/// Runs one command; `line` replaces the positional expression in batch mode.
fn execute(cli: &Cli, line: Option<&str>) -> Outcome {
    let (command, case) = match &cli.command {
        Command::Reduce(a) => ("reduce", Value::from(dx_name(a.dx))),
        Command::Residues(a) => ("residues", Value::from(dx_name(a.dx))),
        Command::Summable(a) => ("summable", Value::from(dx_name(a.dx))),
        Command::Telescope { case, .. } => ("telescope", case_name(case).into()),
        Command::Verify { case, .. } => ("verify", case_name(case).into()),
        Command::Characterize { case, .. } => ("characterize", case_name(case).into()),
        Command::Diag { .. } => ("diag", Value::from("dt/dx")),
        Command::EzDemo => ("ez-demo", Value::from("dt/dx")),
        Command::SolveRational { .. } => ("solve-rational", Value::Null),
    };
    let mut job = Job {
        cli,
        command,
        inputs: Map::new(),
        case,
    };
    if let Some(q) = &cli.q {
        job.inputs.insert("q".into(), q.clone().into());
    }
    let body = dispatch(&mut job, line).unwrap_or_else(fail);
    job.finish(body)
}

fn dispatch(job: &mut Job, line: Option<&str>) -> rescope_core::Result<Body> {
    let cli = job.cli;
    match &cli.command {
        Command::Reduce(a) | Command::Residues(a) | Command::Summable(a) => {
            let expr = input_expr(&a.expr, line)?;
            job.inputs.insert("expr".into(), expr.clone().into());
            let f = job.ratfunc(&expr)?;
            let dx = job.dx(a.dx)?;
            match &cli.command {
                Command::Reduce(_) => reduce_cmd(&f, &dx),
                Command::Residues(_) => residues_cmd(&f, &dx),
                _ => summable_cmd(&f, &dx),
            }
        }
        Command::Telescope { case, expr } => {
            let expr = input_expr(expr, line)?;
            job.inputs.insert("expr".into(), expr.clone().into());
            if let Some(m) = cli.max_order {
                job.inputs.insert("max_order".into(), m.into());
            }
            let f = job.ratfunc(&expr)?;
            telescope_cmd(&f, &job.case(case)?, cli.max_order)
        }
        Command::Verify { case, f, op, g } => {
            if line.is_some() {
                return Err(Error::InvalidInput("verify takes no batch input".into()));
            }
            for (k, v) in [("f", f), ("op", op), ("g", g)] {
                job.inputs.insert(k.into(), v.clone().into());
            }
            let c = job.case(case)?;
            let (f, g) = (job.ratfunc(f)?, job.ratfunc(g)?);
            let l = parse_operator(op, &c.dt)?;
            let holds = verify_telescoper(&f, &l, &g, &c)?;
            let text = format!("identity {}", if holds { "holds" } else { "fails" });
            Ok(Body::new(
                if holds { OK } else { NEGATIVE },
                json!({ "holds": holds }),
                text,
            ))
        }
        Command::Characterize { case, op, poly } => {
            let c = job.case(case)?;
            let op = match line {
                Some(l) => Some(l.to_string()),
                None => op.clone(),
            };
            if let Some(o) = &op {
                job.inputs.insert("op".into(), o.clone().into());
            }
            if let Some(p) = poly {
                job.inputs.insert("poly".into(), p.clone().into());
            }
            let l = op
                .as_deref()
                .map(|o| parse_operator(o, &c.dt))
                .transpose()?;
            characterize_cmd(l, poly.as_deref(), &c)
        }
        Command::Diag { expr } => {
            let expr = input_expr(expr, line)?;
            job.inputs.insert("expr".into(), expr.clone().into());
            job.inputs.insert("trunc".into(), cli.trunc.into());
            let f = job.ratfunc(&expr)?;
            diag_cmd(&f, cli.trunc)
        }
        Command::EzDemo => {
            if line.is_some() {
                return Err(Error::InvalidInput("ez-demo takes no batch input".into()));
            }
            job.inputs.insert("trunc".into(), cli.trunc.into());
            ez_cmd(cli.trunc)
        }
        Command::SolveRational { dt, op } => {
            let op = input_expr(op, line)?;
            job.inputs.insert("op".into(), op.clone().into());
            let l = parse_operator(&op, &job.dt(*dt)?)?;
            let sols = rational_solutions(&l);
            let strs: Vec<String> = sols.iter().map(ToString::to_string).collect();
            let text = if strs.is_empty() {
                "no nonzero rational solutions".to_string()
            } else {
                format!("rational solutions:\n  {}", strs.join("\n  "))
            };
            let code = if strs.is_empty() { NEGATIVE } else { OK };
            Ok(Body::new(code, json!({ "solutions": strs }), text))
        }
    }
}

fn reduce_cmd(f: &RatFunc, dx: &XCase) -> rescope_core::Result<Body> {
    let r = reduce(f, dx)?;
    let text = format!(
        "certificate: {}\nresidual: {}",
        r.certificate,
        r.residual.to_ratfunc()
    );
    let mut b = Body::new(OK, json!({ "residual": json::residual(&r.residual) }), text);
    b.certificate = Some(r.certificate.to_string());
    Ok(b)
}

fn residues_cmd(f: &RatFunc, dx: &XCase) -> rescope_core::Result<Body> {
    let rs = residues(f, dx)?;
    let mut lines = Vec::new();
    for r in &rs {
        match &r.u {
            Some(u) => lines.push(format!(
                "{} u = {u}, j = {}: rho = {}",
                r.kind.name(),
                r.j,
                r.rho
            )),
            None => lines.push(format!("{}: c = {}", r.kind.name(), r.rho)),
        }
    }
    if lines.is_empty() {
        lines.push("no residues".into());
    }
    Ok(Body::new(
        OK,
        json!({ "residues": json::residues(&rs) }),
        lines.join("\n"),
    ))
}

fn summable_cmd(f: &RatFunc, dx: &XCase) -> rescope_core::Result<Body> {
    Ok(match is_exact(f, dx)? {
        Some(g) => {
            let mut b = Body::new(
                OK,
                json!({ "summable": true }),
                format!("summable: yes\ncertificate: {g}"),
            );
            b.certificate = Some(g.to_string());
            b
        }
        None => Body::new(
            NEGATIVE,
            json!({ "summable": false }),
            "summable: no".into(),
        ),
    })
}

fn telescope_cmd(
    f: &RatFunc,
    c: &TelescoperCase,
    max_order: Option<usize>,
) -> rescope_core::Result<Body> {
    let d = exists_telescoper(f, c)?;
    let shapes: Vec<Value> = d.shapes.iter().map(json::shape).collect();
    if !d.answer {
        let obs: Vec<String> = d.obstructions.iter().map(ToString::to_string).collect();
        let text = format!("no telescoper exists; obstructions: {}", obs.join(", "));
        return Ok(Body::new(
            NEGATIVE,
            json!({ "exists": false, "shapes": shapes, "obstructions": obs }),
            text,
        ));
    }
    let r = find_telescoper(f, c, max_order)?;
    let (op, g) = r.normalized();
    let trace: Vec<String> = r.trace.iter().map(|(o, n)| format!("{o}:{n}")).collect();
    let text = format!(
        "telescoper: {op}\ncertificate: {g}\nminimal: {}\norder trace: {}\nbound: {}",
        r.minimal,
        trace.join(" "),
        r.bound
    );
    let result = json!({
        "exists": true,
        "shapes": shapes,
        "operator": op.to_string(),
        "monic": r.op.to_string(),
        "order": op.order(),
        "minimal": r.minimal,
        "bound": r.bound,
    });
    let mut b = Body::new(OK, result, text);
    b.certificate = Some(g.to_string());
    b.trace = Some(json::trace(&r.trace));
    Ok(b)
}

fn characterize_cmd(
    l: Option<rescope_core::OrePoly>,
    poly: Option<&str>,
    c: &TelescoperCase,
) -> rescope_core::Result<Body> {
    let input = match (poly, l) {
        (Some(p), op) => WitnessInput::MinimalPolynomial {
            p: parse_poly(p)?,
            op,
        },
        (None, Some(l)) => {
            let potential = match is_potential_telescoper(&l, c) {
                Err(Error::NeedsAlgebraicSolutions) => {
                    return Err(Error::InvalidInput(
                        "for dt/dx pass --poly P with P(t, x) the minimal polynomial of an algebraic solution".into(),
                    ))
                }
                r => r?,
            };
            if !potential {
                let text = "potential telescoper: no (no rational solution)".to_string();
                return Ok(Body::new(NEGATIVE, json!({ "potential": false }), text));
            }
            WitnessInput::Operator(l)
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "characterize needs an operator or --poly".into(),
            ))
        }
    };
    let f = match witness_for_operator(&input, c) {
        Err(Error::VerificationFailed(msg)) if poly.is_some() => {
            let text = format!("potential telescoper: no ({msg})");
            return Ok(Body::new(
                NEGATIVE,
                json!({ "potential": false, "reason": msg }),
                text,
            ));
        }
        r => r?,
    };
    let text = format!("potential telescoper: yes\nwitness: {f}");
    Ok(Body::new(
        OK,
        json!({ "potential": true, "witness": f.to_string() }),
        text,
    ))
}

fn diag_cmd(f: &RatFunc, n: usize) -> rescope_core::Result<Body> {
    let r = diagonal_report(f, n)?;
    let ok = r.residual_of_check.iter().all(Zero::is_zero);
    let series: Vec<String> = r.diag_series.coeffs.iter().map(rat_string).collect();
    let text = format!(
        "F: {}\noperator: {}\ndiagonal: {}\nannihilated through t^{}: {}",
        r.big_f,
        r.op,
        series.join(", "),
        r.residual_of_check.len() as i64 - 1,
        if ok { "yes" } else { "no" }
    );
    let result = json!({
        "F": r.big_f.to_string(),
        "operator": r.op.to_string(),
        "series": series,
        "check_order": r.check_order,
        "check_residual": json::rats(&r.residual_of_check),
        "annihilated": ok,
    });
    Ok(Body::new(if ok { OK } else { BOUND }, result, text))
}

fn ez_cmd(n: usize) -> rescope_core::Result<Body> {
    let r = ez_pipeline(n)?;
    let ok = r.series_annihilated();
    let counts: Vec<String> = r.word_counts.iter().map(ToString::to_string).collect();
    let text = format!(
        "F: {}\noperator: {}\nprinted: {}\nverdict: {}\nt = 0 ordinary: {}\nword counts: {}\nseries annihilated through t^{}: {}\nresidues of F agree with word counts: {}",
        r.report.big_f,
        r.report.op,
        r.expected,
        r.verdict(),
        r.ordinary_at_zero,
        counts.join(", "),
        r.report.residual_of_check.len() as i64 - 1,
        ok,
        r.words_match_residues
    );
    let result = json!({
        "F": r.report.big_f.to_string(),
        "operator": r.report.op.to_string(),
        "expected": r.expected.to_string(),
        "verdict": r.verdict(),
        "ordinary_at_zero": r.ordinary_at_zero,
        "word_counts": counts,
        "annihilated": ok,
        "residues_match_words": r.words_match_residues,
    });
    let pass = r.matches && ok && r.words_match_residues;
    Ok(Body::new(if pass { OK } else { NEGATIVE }, result, text))
}

fn print(cli: &Cli, o: &Outcome) {
    if cli.json {
        println!("{}", o.json);
    } else if o.code == USAGE {
        eprintln!("{}", o.text);
    } else {
        println!("{}", o.text);
    }
}

pub fn main(cli: &Cli) -> u8 {
    let Some(path) = &cli.batch else {
        let o = execute(cli, None);
        print(cli, &o);
        return o.code;
    };
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return USAGE;
        }
    };
    let lines: Vec<&str> = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    let outcomes: Vec<Outcome> = lines.par_iter().map(|l| execute(cli, Some(l))).collect();
    for o in &outcomes {
        println!("{}", o.json);
    }
    outcomes.iter().map(|o| o.code).max().unwrap_or(OK)
}
