//! Built-in identity suite: the face/degeneracy relations on `D^n` points,
//! the equalizers behind the projections, and the inclusions
//! between pure-power objects.

use crate::error::{Error, Result};
use crate::infinitesimal::{check_inclusions, InfObject};
use crate::limits::{
    drop_last_equalizer, limit_subspace, product_equalizer, standard_qcr, symmetric_limit, symmetric_multifork, Cone,
    WeilDiagram,
};
use crate::par::{self, Exec};
use crate::poly::Polynomial;
use crate::prolong::{CoordSpace, ProlongedPoint};
use crate::report::Report;

pub const SUITES: [&str; 3] = ["simplicial", "limits", "inclusions"];

/// Default size: points over `D^n` for `n <= 3`.
pub const DEFAULT_N: usize = 3;
/// Largest size accepted.
pub const MAX_N: usize = 5;

type Pt = ProlongedPoint<Polynomial>;

fn generic(n: usize) -> Result<Pt> {
    let alg = InfObject::Basic(n).algebra()?;
    let dim = alg.dim();
    ProlongedPoint::generic(CoordSpace::plain(1), alg, 0, dim)
}

/// Checks `lhs == rhs` for every index tuple, stopping at the first
/// mismatch.
fn family(
    name: &str,
    n: usize,
    cases: Vec<Vec<usize>>,
    f: impl Fn(&Pt, &[usize]) -> Result<(Pt, Pt)>,
) -> Result<(String, Option<String>)> {
    let g = generic(n)?;
    for idx in &cases {
        let (lhs, rhs) = f(&g, idx)?;
        if lhs != rhs {
            let at: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            return Ok((format!("D^{n}: {name}"), Some(format!("fails at ({})", at.join(", ")))));
        }
    }
    Ok((format!("D^{n}: {name}"), None))
}

fn pairs(lo: usize, hi: usize, cond: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in lo..=hi {
        for j in lo..=hi {
            if cond(i, j) {
                out.push(vec![i, j]);
            }
        }
    }
    out
}

type Family = (&'static str, usize, fn(usize) -> Vec<Vec<usize>>, fn(&Pt, &[usize]) -> Result<(Pt, Pt)>);

fn simplicial_families() -> Vec<Family> {
    vec![
        (
            "d_i d_j = d_(j-1) d_i for i < j",
            2,
            |n| pairs(1, n, |i, j| i < j),
            |g, x| Ok((g.d(x[1])?.d(x[0])?, g.d(x[0])?.d(x[1] - 1)?)),
        ),
        (
            "s_i s_j = s_(j+1) s_i for i <= j",
            0,
            |n| pairs(1, n + 1, |i, j| i <= j),
            |g, x| Ok((g.s(x[1])?.s(x[0])?, g.s(x[0])?.s(x[1] + 1)?)),
        ),
        (
            "d_i s_j = s_(j-1) d_i for i < j",
            1,
            |n| pairs(1, n + 1, |i, j| i < j),
            |g, x| Ok((g.s(x[1])?.d(x[0])?, g.d(x[0])?.s(x[1] - 1)?)),
        ),
        ("d_j s_j = id", 0, |n| (1..=n + 1).map(|j| vec![j]).collect(), |g, x| Ok((g.s(x[0])?.d(x[0])?, g.clone()))),
        (
            "d_(j+1) s_j = id",
            0,
            |n| (1..=n).map(|j| vec![j]).collect(),
            |g, x| Ok((g.s(x[0])?.d(x[0] + 1)?, g.clone())),
        ),
        (
            "d_i s_j = s_j d_(i-1) for i > j + 1",
            1,
            |n| pairs(1, n + 1, |i, j| i > j + 1 && j <= n),
            |g, x| Ok((g.s(x[1])?.d(x[0])?, g.d(x[0] - 1)?.s(x[1])?)),
        ),
        (
            "d_(j+1) s_j = s_j d_j",
            1,
            |n| (1..=n).map(|j| vec![j]).collect(),
            |g, x| Ok((g.s(x[0])?.d(x[0] + 1)?, g.d(x[0])?.s(x[0])?)),
        ),
    ]
}

fn simplicial(exec: Exec, n_cap: usize) -> Result<Report> {
    let mut jobs = Vec::new();
    for fam in simplicial_families() {
        for n in fam.1..=n_cap {
            jobs.push((fam, n));
        }
    }
    let results = par::map(exec, &jobs, |((name, _, cases, f), n)| family(name, *n, cases(*n), *f));
    let mut report = Report::new();
    for r in results {
        let (name, witness) = r?;
        report.record(name, witness);
    }
    Ok(report)
}

fn limit_entry(
    name: String,
    built: Result<(WeilDiagram, Cone)>,
    expect_limit: bool,
) -> Result<(String, Option<String>)> {
    let (d, c) = built?;
    let v = limit_subspace(&d, &c)?;
    let witness = if v.is_limit == expect_limit {
        None
    } else {
        Some(format!("{} (apex {}, equalizer {})", v.to_json()["verdict"], v.apex_dim, v.subspace_dim))
    };
    Ok((name, witness))
}

fn limits(exec: Exec, n_cap: usize) -> Result<Report> {
    type Job = (String, Box<dyn Fn() -> Result<(String, Option<String>)> + Send + Sync>);
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=n_cap {
        let name = format!("drop-last equalizer n={n}");
        jobs.push((name.clone(), Box::new(move || limit_entry(name.clone(), drop_last_equalizer(n), true))));
        let name = format!("product equalizer n={n}");
        jobs.push((name.clone(), Box::new(move || limit_entry(name.clone(), product_equalizer(n as u32), true))));
    }
    for n in 1..=n_cap + 1 {
        let name = format!("symmetric equalizer n={n}");
        jobs.push((name.clone(), Box::new(move || limit_entry(name.clone(), symmetric_limit(n), true))));
    }
    // Dropping the identity arrow: at n = 2 the single transposition
    // equalizes nothing. (At n = 3 the 3-cycle happens to suffice.)
    let name = "transpositions alone are not enough n=2".to_string();
    jobs.push((name.clone(), Box::new(move || limit_entry(name.clone(), symmetric_multifork(2), false))));
    for text in ["D{3}_2", "D(2)", "D(3)", "D{3;(1,3),(2,3)}"] {
        let name = format!("standard covering of {text}");
        jobs.push((
            name.clone(),
            Box::new(move || {
                let obj: InfObject = text.parse()?;
                let (_, v) = standard_qcr(&obj)?;
                Ok((name.clone(), (!v.is_limit).then(|| v.to_json().to_string())))
            }),
        ));
    }
    let results = par::map(exec, &jobs, |(_, f)| f());
    let mut report = Report::new();
    for r in results {
        let (name, witness) = r?;
        report.record(name, witness);
    }
    Ok(report)
}

/// Runs every suite, or only `only`, with size cap `n`.
pub fn run_suites(only: Option<&str>, n: usize, exec: Exec) -> Result<Report> {
    if n > MAX_N {
        return Err(Error::CapExceeded { what: "identity suite size".into(), value: n, cap: MAX_N });
    }
    if let Some(s) = only {
        if !SUITES.contains(&s) {
            return Err(Error::Unsupported(format!("unknown suite {s:?}; expected one of {}", SUITES.join(", "))));
        }
    }
    let wanted = |s: &str| only.is_none_or(|o| o == s);
    let mut report = Report::new();
    if wanted("simplicial") {
        report.absorb("simplicial: ", simplicial(exec, n)?);
    }
    if wanted("limits") {
        report.absorb("limits: ", limits(exec, n)?);
    }
    if wanted("inclusions") {
        report.absorb("inclusions: ", check_inclusions());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_the_shifted_retraction_fails() {
        let r = run_suites(Some("simplicial"), 2, Exec::Sequential).unwrap();
        let failed = r.failed_names();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|f| f.ends_with("d_(j+1) s_j = id")), "{failed:?}");
        assert!(r.get("simplicial: D^2: d_(j+1) s_j = s_j d_j").unwrap().passed);
    }

    #[test]
    fn limits_and_inclusions_pass() {
        let r = run_suites(Some("limits"), 2, Exec::Auto).unwrap();
        assert!(r.all_passed(), "{:?}", r.failed_names());
        assert!(run_suites(Some("inclusions"), 1, Exec::Auto).unwrap().all_passed());
    }

    #[test]
    fn bad_arguments() {
        assert!(run_suites(Some("nope"), 1, Exec::Auto).is_err());
        assert!(run_suites(None, MAX_N + 1, Exec::Auto).is_err());
    }
}
