//! `weiljet`: batch front end. Every command builds a JSON report; the text
//! output is rendered from it. Exit codes: 0 all checks pass, 1 some check
//! failed, 2 unreadable or invalid input, 3 a size cap was hit.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weiljet::identities::{run_suites, DEFAULT_N};
use weiljet::infinitesimal::InfObject;
use weiljet::jets::json::{CandidateJson, JetFile, TowerJson};
use weiljet::jets::{
    check_pseudo, check_psi, check_second, check_second_tangential, check_third, check_third_tangential, psi, Approach,
    JetCandidate, SectionJet, TowerClass,
};
use weiljet::limits::standard_qcr;
use weiljet::par::Exec;
use weiljet::poly::{int, Polynomial};
use weiljet::report::Report;
use weiljet::Error;

use report::{render, CliReport};

#[derive(Parser, Debug)]
#[command(name = "weiljet", version, about = "Exact checks on Weil algebras, infinitesimal objects and jets")]
struct Cli {
    /// Print the JSON report instead of the table.
    #[arg(long, global = true)]
    json: bool,
    /// Run checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Standard covering of an object by cubes, with its limit certificate.
    Qcr {
        /// e.g. "D{3}_2", "D(2)", "D{3;(1,3),(2,3)}", "D^2".
        expr: String,
    },
    /// Built-in identity suite.
    VerifyIdentities {
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_N)]
        n: usize,
    },
    /// Check a candidate or tower file.
    CheckJet {
        file: PathBuf,
        /// Also check tangentiality.
        #[arg(long)]
        tangential: bool,
    },
    /// Map a tower to its second-approach candidate (phi) or a second
    /// candidate to its third-approach one (psi).
    Transmogrify {
        file: PathBuf,
        #[arg(long, value_enum)]
        map: MapKind,
    },
    /// Write a sample input file to stdout.
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        e: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum MapKind {
    Phi,
    Psi,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum SampleKind {
    /// Second-approach jet of a symbolic section.
    Holonomic,
    /// Third-approach jet of a symbolic section.
    Third,
    /// Jacobian tower of a symbolic section.
    Tower,
    /// Holonomic D^2 jet with an asymmetric second-order term (m = e = 1).
    SemiHolonomic,
    /// Two-level tower whose top level is not symmetric (m = 2, e = 1).
    SemiHolonomicTower,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

type Run = Result<(Report, Option<Value>), Failure>;

fn read_file(path: &PathBuf) -> Result<JetFile, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure { code: 2, msg: format!("{}: {e}", path.display()) })?;
    Ok(JetFile::parse(&text)?)
}

fn cmd_qcr(expr: &str) -> Run {
    let obj: InfObject = expr.parse()?;
    let (rep, verdict) = standard_qcr(&obj)?;
    let mut r = Report::new();
    r.pass(format!("{} pieces, {} overlaps", rep.pieces.len(), rep.overlaps.len()));
    let witness = (!verdict.is_limit).then(|| verdict.to_json()["certificate"].to_string());
    r.record("cone over the dual diagram is a limit", witness);
    let mut out = rep.to_json();
    out["certificate"] = verdict.to_json();
    out["diagram"] = Value::String(rep.render());
    Ok((r, Some(out)))
}

fn cmd_identities(only: Option<&str>, n: usize, exec: Exec) -> Run {
    Ok((run_suites(only, n, exec)?, None))
}

/// A check that could not even be evaluated counts as a failed entry when
/// the cause lies in the candidate itself.
fn as_entry(r: &mut Report, name: &str, got: weiljet::Result<Report>) -> Result<(), Failure> {
    match got {
        Ok(sub) => r.absorb("", sub),
        Err(e @ (Error::Inconsistent(_) | Error::Precondition(_))) => r.fail(name, e.to_string()),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn check_candidate(j: &JetCandidate, tangential: bool) -> Result<Report, Failure> {
    let mut r = Report::new();
    match j.approach() {
        Approach::Second(_) => {
            as_entry(&mut r, "pseudotangential", check_second(j))?;
            if tangential {
                as_entry(&mut r, "tangential", check_second_tangential(j))?;
            }
        }
        Approach::Third(_) => {
            as_entry(&mut r, "pseudotangential", check_third(j))?;
            if tangential {
                as_entry(&mut r, "tangential", check_third_tangential(j))?;
            }
        }
        Approach::Induced(obj) => {
            if tangential {
                return Err(Failure { code: 2, msg: format!("no tangential conditions over {obj}") });
            }
            as_entry(&mut r, "pseudotangential", check_pseudo(j))?;
        }
    }
    Ok(r)
}

fn cmd_check_jet(path: &PathBuf, tangential: bool) -> Run {
    match read_file(path)? {
        JetFile::Candidate(c) => {
            let j = c.to_candidate()?;
            Ok((check_candidate(&j, tangential)?, Some(json!({"approach": j.approach().to_string()}))))
        }
        JetFile::Tower(t) => {
            let tower = t.to_tower()?;
            let (r, class) = tower.check()?;
            Ok((r, Some(json!({"depth": tower.depth(), "class": class.to_string()}))))
        }
    }
}

fn cmd_transmogrify(path: &PathBuf, map: MapKind) -> Run {
    let file = read_file(path)?;
    let mut r = Report::new();
    let image = match (map, file) {
        (MapKind::Phi, JetFile::Tower(t)) => {
            let tower = t.to_tower()?;
            let (checks, class) = tower.check()?;
            r.absorb("tower: ", checks);
            if class != TowerClass::Holonomic {
                r.fail("phi defined", format!("tower is {class}"));
                return Ok((r, None));
            }
            let j = tower.phi(tower.depth())?;
            as_entry(&mut r, "image", check_second(&j))?;
            j
        }
        (MapKind::Psi, JetFile::Candidate(c)) => {
            let j = c.to_candidate()?;
            if !matches!(j.approach(), Approach::Second(_)) {
                return Err(Failure { code: 2, msg: format!("psi needs a D^n candidate, got {}", j.approach()) });
            }
            match psi(&j) {
                Ok(p) => {
                    as_entry(&mut r, "psi", check_psi(&j))?;
                    p
                }
                Err(e @ Error::Inconsistent(_)) => {
                    r.fail("psi defined", e.to_string());
                    return Ok((r, None));
                }
                Err(e) => return Err(e.into()),
            }
        }
        (MapKind::Phi, _) => return Err(Failure { code: 2, msg: "phi needs a tower file".into() }),
        (MapKind::Psi, _) => return Err(Failure { code: 2, msg: "psi needs a candidate file".into() }),
    };
    let out = serde_json::to_value(JetFile::Candidate(CandidateJson::from_candidate(&image))).expect("serializes");
    Ok((r, Some(out)))
}

fn sample(kind: SampleKind, m: usize, e: usize, n: usize) -> Result<JetFile, Failure> {
    let bases: Vec<_> = (0..m).map(|i| int(i as i64)).collect();
    let section = |m, e, n| SectionJet::symbolic(m, e, n, &bases[..m.min(bases.len())]);
    Ok(match kind {
        SampleKind::Holonomic => JetFile::Candidate(CandidateJson::from_candidate(&section(m, e, n)?.second(n)?)),
        SampleKind::Third => JetFile::Candidate(CandidateJson::from_candidate(&section(m, e, n)?.third(n as u32)?)),
        SampleKind::Tower => JetFile::Tower(TowerJson::from_tower(&section(m, e, n)?.first(n)?)),
        SampleKind::SemiHolonomic => {
            let j = SectionJet::symbolic(1, 1, 2, &[int(0)])?.second(2)?;
            let names = j.input_names();
            let g = Polynomial::var(j.nvars(), names.iter().position(|s| s == "g1_11").expect("input g1_11"));
            // Basis of W(D^2): 1, X1, X2, X1 X2.
            JetFile::Candidate(CandidateJson::from_candidate(&j.perturbed(0, 3, &g)?))
        }
        SampleKind::SemiHolonomicTower => {
            let t = SectionJet::symbolic(2, 1, 2, &[int(0), int(0)])?.first(2)?;
            JetFile::Tower(TowerJson::from_tower(&t.perturbed(2, 1, 1, &Polynomial::from_int(t.params().len(), 1))?))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Auto };
    if let Cmd::Sample { kind, m, e, n } = cli.cmd {
        return match sample(kind, m, e, n) {
            Ok(f) => {
                println!("{}", f.to_pretty());
                ExitCode::SUCCESS
            }
            Err(f) => {
                eprintln!("error: {}", f.msg);
                ExitCode::from(f.code)
            }
        };
    }
    let command = match &cli.cmd {
        Cmd::Qcr { expr } => json!({"name": "qcr", "expr": expr}),
        Cmd::VerifyIdentities { only, n } => json!({"name": "verify-identities", "only": only, "n": n}),
        Cmd::CheckJet { file, tangential } => {
            json!({"name": "check-jet", "file": file.display().to_string(), "tangential": tangential})
        }
        Cmd::Transmogrify { file, map } => json!({
            "name": "transmogrify",
            "file": file.display().to_string(),
            "map": if *map == MapKind::Phi { "phi" } else { "psi" },
        }),
        Cmd::Sample { .. } => unreachable!(),
    };
    let start = Instant::now();
    let run = match &cli.cmd {
        Cmd::Qcr { expr } => cmd_qcr(expr),
        Cmd::VerifyIdentities { only, n } => cmd_identities(only.as_deref(), *n, exec),
        Cmd::CheckJet { file, tangential } => cmd_check_jet(file, *tangential),
        Cmd::Transmogrify { file, map } => cmd_transmogrify(file, *map),
        Cmd::Sample { .. } => unreachable!(),
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let (report, code) = match run {
        Ok((r, out)) => {
            let rep = CliReport::new(command, r, out, ms);
            let code = if rep.pass { 0 } else { 1 };
            (rep, code)
        }
        Err(f) => (CliReport::failed(command, f.msg, ms), f.code),
    };
    let v = report.to_value();
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        print!("{}", render(&v));
    }
    ExitCode::from(code)
}
