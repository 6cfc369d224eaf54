use std::io::Write;

use serde::Serialize;
use supergrid::{classify, Coord, Cycle, Path, Shape, SolveReport};

use crate::cli::{
    read_input, read_seed_file, CheckArgs, Command, Format, FuzzArgs, InstanceSpec, Query,
    RenderArgs, SolveArgs,
};
use crate::error::{CliError, Result, Status};
use crate::fuzz;
use crate::render::{self, Overlay};

pub fn run(command: Command, out: &mut impl Write) -> Result<Status> {
    match command {
        Command::Hc(args) => solve(Query::Hc, args, out),
        Command::Hp(args) => solve(Query::Hp, args, out),
        Command::Longest(args) => solve(Query::Longest, args, out),
        Command::Check(args) => check(args, out),
        Command::Fuzz(args) => run_fuzz(args, out),
        Command::Render(args) => render_cmd(args, out),
    }
}

fn endpoints(query: Query, s: Option<Coord>, t: Option<Coord>) -> Result<(Coord, Coord)> {
    match (s, t) {
        (Some(s), Some(t)) => Ok((s, t)),
        _ => Err(CliError::Usage(
            format!("{query:?} needs --s and --t").to_lowercase(),
        )),
    }
}

pub fn solve_one(
    query: Query,
    shape: &Shape,
    s: Option<Coord>,
    t: Option<Coord>,
) -> Result<SolveReport> {
    Ok(match query {
        Query::Hc => SolveReport::hc(shape)?,
        Query::Hp => {
            let (s, t) = endpoints(query, s, t)?;
            SolveReport::hp(shape, s, t)?
        }
        Query::Longest => {
            let (s, t) = endpoints(query, s, t)?;
            SolveReport::longest(shape, s, t)?
        }
    })
}

fn overlay(rep: &SolveReport) -> Overlay<'_> {
    Overlay {
        path: rep.path.as_deref(),
        closed: rep.closed,
        s: rep.s,
        t: rep.t,
    }
}

fn text_report(rep: &SolveReport, out: &mut impl Write) -> Result<()> {
    writeln!(out, "# shape {}", rep.shape)?;
    if let (Some(s), Some(t)) = (rep.s, rep.t) {
        writeln!(out, "# s {},{} t {},{}", s.x, s.y, t.x, t.y)?;
    }
    if let Some(case) = rep.case {
        writeln!(out, "# case {case}")?;
    }
    if let Some(ub) = rep.upper_bound {
        writeln!(out, "# upper_bound {ub}")?;
    }
    if !rep.forbidden.is_empty() {
        let names: Vec<&str> = rep.forbidden.iter().map(|c| c.name()).collect();
        writeln!(out, "# forbidden {}", names.join(","))?;
    }
    match &rep.path {
        Some(path) => {
            writeln!(
                out,
                "# {} {}",
                if rep.closed { "cycle" } else { "path" },
                rep.length
            )?;
            for v in path {
                writeln!(out, "{},{}", v.x, v.y)?;
            }
        }
        None => writeln!(out, "# none")?,
    }
    Ok(())
}

fn emit(rep: &SolveReport, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Text => text_report(rep, out),
        Format::Json => {
            serde_json::to_writer(&mut *out, rep)?;
            writeln!(out)?;
            Ok(())
        }
        Format::Svg => {
            out.write_all(render::svg(&rep.shape, &overlay(rep)).as_bytes())?;
            Ok(())
        }
    }
}

fn solve(query: Query, args: SolveArgs, out: &mut impl Write) -> Result<Status> {
    let specs = match &args.seed_file {
        Some(path) => read_seed_file(path)?,
        None => vec![InstanceSpec {
            shape: args.shape.require()?,
            s: args.s,
            t: args.t,
            command: None,
        }],
    };
    let mut refused = false;
    for spec in &specs {
        let rep = solve_one(spec.command.unwrap_or(query), &spec.shape, spec.s, spec.t)?;
        refused |= !rep.forbidden.is_empty();
        emit(&rep, args.format, out)?;
    }
    Ok(if args.strict && refused {
        Status::Forbidden
    } else {
        Status::Ok
    })
}

/// A path read back for checking.
struct Claim {
    shape: Shape,
    verts: Vec<Coord>,
    closed: bool,
    report: Option<SolveReport>,
}

fn parse_text_path(text: &str) -> Result<(Vec<Coord>, bool)> {
    let mut verts = Vec::new();
    let mut closed = false;
    for line in text.lines().map(str::trim) {
        if let Some(comment) = line.strip_prefix('#') {
            closed |= comment.trim_start().starts_with("cycle");
            continue;
        }
        if line.is_empty() {
            continue;
        }
        verts.push(crate::cli::parse_coord(line).map_err(CliError::Usage)?);
    }
    Ok((verts, closed))
}

#[derive(Serialize)]
struct Verdict {
    valid: bool,
    shape: Shape,
    length: usize,
    closed: bool,
    hamiltonian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

/// Everything a report or path claims that can be re-derived.
fn verify(claim: &Claim, s: Option<Coord>, t: Option<Coord>) -> std::result::Result<(), String> {
    let shape = &claim.shape;
    if let Some(rep) = &claim.report {
        if claim.verts.is_empty() && rep.path.is_none() {
            // No path: the refusal itself must be what the classifier says.
            let expected = match (rep.closed, rep.s, rep.t) {
                (true, _, _) => classify::hc_condition(shape).into_iter().collect(),
                (false, Some(s), Some(t)) => classify::hp_conditions(shape, s, t),
                _ => return Err("report has neither a path nor endpoints".into()),
            };
            if rep.closed && expected.is_empty() && classify::hc_exists(shape) {
                return Err("report claims no cycle but one exists".into());
            }
            return if rep.forbidden == expected {
                Ok(())
            } else {
                Err(format!(
                    "forbidden {:?} but the classifier gives {expected:?}",
                    rep.forbidden
                ))
            };
        }
        if rep.length != claim.verts.len() {
            return Err(format!(
                "length {} but the path has {} vertices",
                rep.length,
                claim.verts.len()
            ));
        }
    }
    if claim.closed {
        let cyc = Cycle::new(claim.verts.clone()).map_err(|e| e.to_string())?;
        cyc.validate_in(shape).map_err(|e| e.to_string())?;
        if claim.report.is_some() {
            cyc.validate_hamiltonian(shape).map_err(|e| e.to_string())?;
        }
        return Ok(());
    }
    let path = Path::new(claim.verts.clone()).map_err(|e| e.to_string())?;
    path.validate_in(shape).map_err(|e| e.to_string())?;
    let want_s = s.or(claim.report.as_ref().and_then(|r| r.s));
    let want_t = t.or(claim.report.as_ref().and_then(|r| r.t));
    if want_s.is_some_and(|v| v != path.start()) || want_t.is_some_and(|v| v != path.end()) {
        return Err(format!("path runs {} to {}", path.start(), path.end()));
    }
    if let Some(rep) = &claim.report {
        match rep.upper_bound {
            Some(ub) => {
                let (case, bound) = supergrid::upper_bound(shape, path.start(), path.end())
                    .map_err(|e| e.to_string())?;
                if ub != bound || rep.case != Some(case) || path.len() != bound {
                    return Err(format!(
                        "claims {ub} ({:?}), bound is {bound} ({case})",
                        rep.case
                    ));
                }
            }
            None if path.len() != shape.size() => {
                return Err("Hamiltonian path misses vertices".into())
            }
            None => {}
        }
    }
    Ok(())
}

fn read_claim(input: &str, given: Option<Shape>, closed_flag: bool) -> Result<Claim> {
    let text = read_input(input)?;
    if text.trim_start().starts_with('{') {
        let rep: SolveReport = serde_json::from_str(&text)?;
        if let Some(g) = given {
            if g != rep.shape {
                return Err(CliError::Usage(format!(
                    "report is for {}, flags give {g}",
                    rep.shape
                )));
            }
        }
        return Ok(Claim {
            shape: rep.shape,
            verts: rep.path.clone().unwrap_or_default(),
            closed: rep.closed,
            report: Some(rep),
        });
    }
    let shape = given.ok_or_else(|| CliError::Usage("text input needs --shape".into()))?;
    let (verts, closed) = parse_text_path(&text)?;
    Ok(Claim {
        shape,
        verts,
        closed: closed || closed_flag,
        report: None,
    })
}

fn check(args: CheckArgs, out: &mut impl Write) -> Result<Status> {
    let claim = read_claim(&args.input, args.shape.build()?, args.closed)?;
    let outcome = verify(&claim, args.s, args.t);
    let verdict = Verdict {
        valid: outcome.is_ok(),
        shape: claim.shape,
        length: claim.verts.len(),
        closed: claim.closed,
        hamiltonian: outcome.is_ok() && claim.verts.len() == claim.shape.size(),
        reason: outcome.err(),
    };
    match args.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &verdict)?;
            writeln!(out)?;
        }
        _ => match &verdict.reason {
            None => writeln!(
                out,
                "ok: {} of {} vertices in {}{}",
                if verdict.closed { "cycle" } else { "path" },
                verdict.length,
                verdict.shape,
                if verdict.hamiltonian {
                    " (Hamiltonian)"
                } else {
                    ""
                }
            )?,
            Some(reason) => writeln!(out, "invalid: {reason}")?,
        },
    }
    Ok(if verdict.valid {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn run_fuzz(args: FuzzArgs, out: &mut impl Write) -> Result<Status> {
    let budget = match &args.budget {
        Some(text) => fuzz::parse_budget(text)?,
        None => supergrid::oracle::Budget::default(),
    };
    let report = match &args.seed_file {
        Some(path) => fuzz::instances(&read_seed_file(path)?, &budget),
        None => {
            let max = args
                .max_vertices
                .unwrap_or(fuzz::DEFAULT_MAX_VERTICES.min(budget.max_vertices));
            fuzz::enumerate(max, &budget)?
        }
    };
    match args.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
        _ => {
            for m in &report.mismatches {
                let pair = match (m.s, m.t) {
                    (Some(s), Some(t)) => format!(" {s}->{t}"),
                    _ => String::new(),
                };
                writeln!(out, "mismatch {} {}{pair}: {}", m.query, m.shape, m.detail)?;
            }
            writeln!(
                out,
                "checked {} shapes and {} pairs: {} mismatches",
                report.shapes,
                report.pairs,
                report.mismatches.len()
            )?;
        }
    }
    Ok(if report.mismatches.is_empty() {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn bare_report(shape: Shape, path: Option<Vec<Coord>>, closed: bool) -> SolveReport {
    SolveReport {
        shape,
        s: None,
        t: None,
        case: None,
        upper_bound: None,
        length: path.as_ref().map_or(0, Vec::len),
        path,
        closed,
        forbidden: Vec::new(),
    }
}

fn render_cmd(args: RenderArgs, out: &mut impl Write) -> Result<Status> {
    let given = args.shape.build()?;
    let rep = match (&args.input, args.solve) {
        (Some(input), _) => {
            let claim = read_claim(input, given, false)?;
            let mut rep = claim
                .report
                .unwrap_or_else(|| bare_report(claim.shape, Some(claim.verts), claim.closed));
            rep.s = args.s.or(rep.s);
            rep.t = args.t.or(rep.t);
            rep
        }
        (None, Some(query)) => {
            let shape = given.ok_or_else(|| CliError::Usage("--shape is required".into()))?;
            solve_one(query, &shape, args.s, args.t)?
        }
        (None, None) => {
            let shape = given.ok_or_else(|| CliError::Usage("--shape is required".into()))?;
            let mut rep = bare_report(shape, None, false);
            (rep.s, rep.t) = (args.s, args.t);
            rep
        }
    };
    let picture = match args.format {
        Format::Text => render::ascii(&rep.shape, &overlay(&rep)),
        Format::Svg => render::svg(&rep.shape, &overlay(&rep)),
        Format::Json => return Err(CliError::Usage("render draws text or svg".into())),
    };
    out.write_all(picture.as_bytes())?;
    Ok(Status::Ok)
}
