use std::str::FromStr;

use num_rational::Rational64;
use serde_json::{json, Value};

use symdual::filtrations::{
    check_filtration, duality_report, is_differentially_closed, is_ideal, l_transform, FiltrationOracle,
    FiltrationSpec, FiniteLength,
};
use symdual::monomial::{
    beta_nu_window, newton_closure_member, polyhedron_invariants, resurgence_windows, symbolic_polyhedron,
    symbolic_power, MonomialIdeal,
};
use symdual::numseq::{
    additivity_class, growth_window, left_transform_partial, parse_window, right_transform_partial, shift,
    GrowthKind, IntSeqWindow, PartialTransform, Reference,
};
use symdual::points::{nagata_check, PointConfig, PointConfigJson, PointScheme};
use symdual::scalars::ExponentVec;
use symdual::verify::{verify_section, SectionTag};

use crate::errors::CliError;
use crate::output::Report;
use crate::{Cli, Command, FiltCmd, GrowthArg, JsonInput, MonomialCmd, PointsCmd, PointsInput, SeqCmd, SeqInput};

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Seq(cmd) => seq(cmd, seed),
        Command::Filt(cmd) => filt(cmd, seed),
        Command::Points(cmd) => points(cmd, seed),
        Command::Monomial(cmd) => monomial(cmd, seed),
        Command::Verify { tag } => {
            let tag = SectionTag::from_str(tag)?;
            let report = verify_section(tag, seed);
            let failed = !report.passed;
            let mut body = String::new();
            for c in &report.criteria {
                body.push_str(&format!("{c}\n"));
                for d in &c.details {
                    body.push_str(&format!("    {d}\n"));
                }
            }
            body.push_str(&format!("{tag}: {}\n", if failed { "FAIL" } else { "PASS" }));
            Ok(Report::new(&format!("verify {tag}"), seed, report)
                .table_body(body)
                .failed_checks(failed))
        }
    }
}

fn rational(s: &str, what: &str) -> Result<Rational64, CliError> {
    Rational64::from_str(s.trim()).map_err(|_| CliError::invalid(format!("{what}: not a rational number: {s:?}")))
}

fn sequence(input: &SeqInput) -> Result<IntSeqWindow, CliError> {
    let mut w = parse_window(&input.alpha)?;
    if input.nondecreasing {
        w = w.certified_nondecreasing()?;
    }
    if let Some(slope) = &input.tail_slope {
        w = w.with_tail(rational(slope, "--tail-slope")?, rational(&input.tail_offset, "--tail-offset")?);
    }
    Ok(w)
}

fn transform_report(name: &str, seed: u64, nmax: i64, t: PartialTransform) -> Report {
    let certified = t.uncertified_from.is_none();
    Report::new(name, seed, json!({ "values": t.window, "uncertified_from": t.uncertified_from }))
        .cap("nmax", nmax)
        .certified(certified)
}

fn seq(cmd: &SeqCmd, seed: u64) -> Result<Report, CliError> {
    match cmd {
        SeqCmd::Right { input, nmax } | SeqCmd::Left { input, nmax } => {
            let alpha = sequence(input)?;
            let beta = input.beta.as_deref().map(parse_window).transpose()?;
            let reference = match &beta {
                Some(b) => Reference::Window(b),
                None => Reference::Identity,
            };
            let (name, t) = match cmd {
                SeqCmd::Right { .. } => ("seq right", right_transform_partial(&alpha, reference, *nmax)?),
                _ => ("seq left", left_transform_partial(&alpha, reference, *nmax)?),
            };
            Ok(transform_report(name, seed, *nmax, t))
        }
        SeqCmd::Class { input } => {
            let alpha = sequence(input)?;
            Ok(Report::new("seq class", seed, additivity_class(&alpha)))
        }
        SeqCmd::Growth { input, kind } => {
            let alpha = sequence(input)?;
            let kind = match kind {
                GrowthArg::Sub => GrowthKind::Sub,
                GrowthArg::Super => GrowthKind::Super,
            };
            Ok(Report::new("seq growth", seed, growth_window(&alpha, kind)?))
        }
        SeqCmd::Shift { input, k } => {
            let alpha = sequence(input)?;
            Ok(Report::new("seq shift", seed, shift(&alpha, *k)).cap("k", *k))
        }
    }
}

fn read_json(input: &JsonInput) -> Result<String, CliError> {
    match (&input.file, &input.json) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display()))),
        (None, Some(s)) => Ok(s.clone()),
        (None, None) => Err(CliError::invalid("give the input with --file or --json")),
    }
}

fn oracle(input: &JsonInput) -> Result<FiltrationOracle, CliError> {
    let spec: FiltrationSpec = serde_json::from_str(&read_json(input)?)?;
    Ok(spec.build()?)
}

fn filt(cmd: &FiltCmd, seed: u64) -> Result<Report, CliError> {
    match cmd {
        FiltCmd::Build { input, n_max, d_cap } => {
            let o = oracle(input)?;
            let dims: Vec<Vec<usize>> = (0..=*n_max)
                .map(|n| (0..=*d_cap).map(|d| o.piece(n, d).dim()).collect())
                .collect();
            let check = check_filtration(&o, *n_max, *d_cap);
            let result = json!({
                "label": o.label(),
                "nvars": o.nvars(),
                "char": o.field().characteristic(),
                "dims": dims,
                "filtration_ok": check.is_ok(),
                "violation": check.err(),
            });
            let failed = !result["filtration_ok"].as_bool().unwrap_or(false);
            Ok(Report::new("filt build", seed, result)
                .cap("n_max", *n_max)
                .cap("d_cap", *d_cap)
                .failed_checks(failed))
        }
        FiltCmd::CheckDc { input, n_max, d_cap } => {
            let o = oracle(input)?;
            Ok(Report::new("filt check-dc", seed, is_differentially_closed(&o, *n_max, *d_cap))
                .cap("n_max", *n_max)
                .cap("d_cap", *d_cap))
        }
        FiltCmd::Ltransform { input, s, d_cap } => {
            let o = oracle(input)?;
            let l = l_transform(&o, *s, *d_cap);
            let ideal = is_ideal(&l, *d_cap);
            let pieces: serde_json::Map<String, Value> = l
                .pieces
                .iter()
                .map(|(d, p)| (format!("{d:03}"), json!({ "dim": p.dim(), "quotient_dim": p.ambient_dim() - p.dim() })))
                .collect();
            let certified = matches!(l.finite_length, FiniteLength::Certified { .. });
            let result = json!({
                "s": l.s,
                "pieces": pieces,
                "finite_length": l.finite_length,
                "ideal": ideal,
            });
            Ok(Report::new("filt ltransform", seed, result)
                .cap("s", *s)
                .cap("d_cap", *d_cap)
                .certified(certified))
        }
        FiltCmd::Duality { input, n_max, s_max, d_cap } => {
            let o = oracle(input)?;
            let r = duality_report(&o, *n_max, *s_max, *d_cap)?;
            let failed = !r.all_passed();
            Ok(Report::new("filt duality", seed, r)
                .cap("n_max", *n_max)
                .cap("s_max", *s_max)
                .cap("d_cap", *d_cap)
                .failed_checks(failed))
        }
    }
}

fn point_config(p: &PointsInput) -> Result<PointConfig, CliError> {
    let mut j: PointConfigJson = serde_json::from_str(&read_json(&p.input)?)?;
    if let Some(c) = p.char {
        j.char = c;
    }
    Ok(j.build()?)
}

fn points(cmd: &PointsCmd, seed: u64) -> Result<Report, CliError> {
    match cmd {
        PointsCmd::Report { points, m_max, d_cap } => {
            let x = PointScheme::new(point_config(points)?);
            let reports = (1..=*m_max)
                .map(|m| x.fat_scheme_report(m, *d_cap))
                .collect::<Result<Vec<_>, _>>()?;
            let reg: Vec<u32> = reports.iter().map(|r| r.reg_ideal).collect();
            let alpha: Vec<u32> = reports.iter().map(|r| r.alpha).collect();
            let result = json!({
                "points": x.config().to_json(),
                "reg": reg,
                "alpha": alpha,
                "schemes": reports,
            });
            Ok(Report::new("points report", seed, result)
                .cap("m_max", *m_max)
                .cap("d_cap", *d_cap))
        }
        PointsCmd::Jets { points, d_max, k_cap } => {
            let x = PointScheme::new(point_config(points)?);
            let mut rows = Vec::new();
            for d in 1..=*d_max {
                let direct = x.jet_sep_index(d, k_cap.unwrap_or(d + 1))?;
                let via_reg = x.jet_index_from_regularity(d);
                rows.push(json!({ "d": d, "direct": direct, "from_regularity": via_reg, "agree": direct == via_reg }));
            }
            let failed = rows.iter().any(|r| r["agree"] == Value::Bool(false));
            let mut report = Report::new("points jets", seed, json!({ "points": x.config().to_json(), "jets": rows }))
                .cap("d_max", *d_max);
            if let Some(k) = k_cap {
                report = report.cap("k_cap", *k);
            }
            Ok(report.failed_checks(failed))
        }
        PointsCmd::Asymptotic { points, d_cap, m_cap } => {
            let x = PointScheme::new(point_config(points)?);
            let r = x.asymptotic_report(*d_cap, *m_cap)?;
            let failed = !r.all_passed();
            Ok(Report::new("points asymptotic", seed, r)
                .cap("d_cap", *d_cap)
                .cap("m_cap", *m_cap)
                .failed_checks(failed))
        }
        PointsCmd::Nagata { r, n, trials, m_cap, d_cap } => {
            let rep = nagata_check(*r, *n, *trials, *m_cap, *d_cap, seed)?;
            Ok(Report::new("points nagata", seed, rep)
                .cap("trials", *trials)
                .cap("m_cap", *m_cap)
                .cap("d_cap", *d_cap))
        }
    }
}

fn ideal(input: &JsonInput) -> Result<MonomialIdeal, CliError> {
    Ok(serde_json::from_str(&read_json(input)?)?)
}

fn exponent(s: &str, nvars: usize, what: &str) -> Result<ExponentVec, CliError> {
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::invalid(format!("{what}: expected comma-separated naturals, got {s:?}")))?;
    if v.len() != nvars {
        return Err(CliError::invalid(format!("{what}: expected {nvars} entries, got {}", v.len())));
    }
    Ok(ExponentVec::new(v))
}

fn monomial(cmd: &MonomialCmd, seed: u64) -> Result<Report, CliError> {
    match cmd {
        MonomialCmd::Sp { input } => {
            let i = ideal(input)?;
            let sp = symbolic_polyhedron(&i)?;
            let inv = polyhedron_invariants(&i)?;
            let result = json!({ "ideal": i.to_string(), "polyhedron": sp, "invariants": inv });
            Ok(Report::new("monomial sp", seed, result))
        }
        MonomialCmd::Symbolic { input, n } => {
            let i = ideal(input)?;
            let p = symbolic_power(&i, *n)?;
            let result = json!({ "ideal": i.to_string(), "n": n, "symbolic_power": p, "display": p.to_string() });
            Ok(Report::new("monomial symbolic", seed, result).cap("n", *n))
        }
        MonomialCmd::Resurgence { input, n_max, d_cap } => {
            let i = ideal(input)?;
            let r = resurgence_windows(&i, *n_max, *d_cap)?;
            Ok(Report::new("monomial resurgence", seed, r)
                .cap("n_max", *n_max)
                .cap("d_cap", *d_cap))
        }
        MonomialCmd::Betanu { input, weight, n_max, d_cap } => {
            let i = ideal(input)?;
            let w = exponent(weight, i.nvars(), "--weight")?;
            let b = beta_nu_window(&i, &w, *n_max, *d_cap)?;
            Ok(Report::new("monomial betanu", seed, json!({ "ideal": i.to_string(), "weight": w, "beta_nu": b }))
                .cap("n_max", *n_max)
                .cap("d_cap", *d_cap))
        }
        MonomialCmd::Closure { input, exponent: a, n } => {
            let i = ideal(input)?;
            let a = exponent(a, i.nvars(), "--exponent")?;
            let member = newton_closure_member(&a, &i, *n);
            Ok(Report::new(
                "monomial closure",
                seed,
                json!({ "ideal": i.to_string(), "exponent": a, "n": n, "in_integral_closure": member }),
            )
            .cap("n", *n))
        }
    }
}
