//! The full regression corpus: reference spectra, golden tables, the
//! closed-form identities quoted in the text, and the atlas verifier.

use serde::Serialize;

use crate::atlas::Atlas;
use crate::chow::{resolution_chern, BundleTerm, ChernTriple};
use crate::curves::{extremal_obstruction, serre_curve, CurveClass};
use crate::golden::{golden_corpus, spectrum_table};
use crate::spectrum::{c3_upper_bound, enumerate_spectra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegressionLine {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn line(group: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> RegressionLine {
    RegressionLine {
        group,
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// The four resolutions `0 -> negative -> positive -> F -> 0` with their
/// expected `(c1, c2, c3)`.
pub fn known_resolutions() -> Vec<(&'static str, Vec<BundleTerm>, Vec<BundleTerm>, ChernTriple)> {
    use BundleTerm as B;
    vec![
        ("(0,4,8)", vec![B::line(-2, 8)], vec![B::tangent(-4, 2)], ChernTriple::rank2(0, 4, 8)),
        (
            "(0,4,10)",
            vec![B::line(-1, 1), B::line(-2, 5)],
            vec![B::tangent(-4, 1), B::line(-3, 1)],
            ChernTriple::rank2(0, 4, 10),
        ),
        (
            "(0,4,12)",
            vec![B::line(-2, 2), B::line(-1, 2)],
            vec![B::line(-3, 2)],
            ChernTriple::rank2(0, 4, 12),
        ),
        (
            "(-1,4,12)",
            vec![B::line(-1, 1), B::line(-2, 2), B::line(-3, 1)],
            vec![B::line(-4, 1), B::line(-3, 1)],
            ChernTriple::rank2(-1, 4, 12),
        ),
    ]
}

fn spectra_lines(out: &mut Vec<RegressionLine>) {
    for c1 in [0, -1] {
        let table = spectrum_table(c1).expect("reference tables exist for c1 in {0, -1}");
        for c3 in 0..=c3_upper_bound(c1, table.c2) {
            let got = enumerate_spectra(c1, table.c2, c3).unwrap_or_default();
            let want: Vec<_> = table
                .rows
                .iter()
                .find(|(c, _)| *c == c3)
                .map(|(_, v)| v.clone())
                .unwrap_or_default();
            let mut got_s: Vec<_> = got.iter().map(|v| v.spectrum.clone()).collect();
            let mut want_s = want.clone();
            got_s.sort();
            want_s.sort();
            let flags_ok = got
                .iter()
                .all(|v| v.is_realized() != table.unrealized.contains(&v.spectrum));
            let names: Vec<String> = got.iter().map(|v| v.spectrum.to_string()).collect();
            out.push(line(
                "spectra",
                format!("c1={} c3={}", c1, c3),
                got_s == want_s && flags_ok,
                names.join(" "),
            ));
        }
    }
}

fn identity_lines(out: &mut Vec<RegressionLine>) {
    for (name, pos, neg, want) in known_resolutions() {
        let got = resolution_chern(&pos, &neg);
        out.push(line(
            "resolutions",
            name,
            got.as_ref().ok() == Some(&want),
            format!("{:?}", got),
        ));
    }

    let mut serre = vec![((0, 8, 1), (5, 0)), ((-1, 12, 1), (4, 1))];
    for c3 in (0..=14).step_by(2) {
        serre.push(((0, c3, 2), (8, c3 / 2 + 1)));
    }
    for c3 in (0..=16).step_by(2) {
        serre.push(((-1, c3, 2), (6, c3 / 2 - 2)));
    }
    for ((c1, c3, k), (d, g)) in serre {
        let got = serre_curve(c1, 4, c3, k).map(|s| s.curve);
        out.push(line(
            "serre",
            format!("({},4,{}) k={}", c1, c3, k),
            got.as_ref().ok() == Some(&CurveClass { degree: d, genus: g }),
            format!("{:?}", got),
        ));
    }

    let mut ob = vec![((0, 5, 1), 1u64)];
    for len_z in [1, 2] {
        ob.push(((-1, 4, len_z), (len_z - 1) as u64));
    }
    for ((c1, d, len_z), want) in ob {
        let got = extremal_obstruction(c1, d, len_z, false);
        out.push(line(
            "obstruction",
            format!("c1={} d={} lenZ={}", c1, d, len_z),
            got.as_ref().ok().and_then(|o| o.value) == Some(want),
            format!("{:?}", got),
        ));
    }
}

/// Every regression check, in a fixed order.
pub fn run_regression() -> Vec<RegressionLine> {
    let mut out = Vec::new();
    spectra_lines(&mut out);
    for g in golden_corpus() {
        let c = g.check();
        let detail = if c.passed() {
            let mut d = format!("{} assignments", c.assignments);
            for e in &c.confirmed_errata {
                d.push_str(&format!("; erratum {}", e));
            }
            d
        } else {
            c.failures.join("; ")
        };
        out.push(line("tables", g.name.clone(), c.passed(), detail));
    }
    identity_lines(&mut out);
    let report = Atlas::builtin().verify();
    for r in &report.records {
        let failed: Vec<String> = r
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        let detail = if failed.is_empty() {
            format!("{} checks", r.checks.len())
        } else {
            failed.join("; ")
        };
        out.push(line("atlas", r.label.clone(), r.passed(), detail));
    }
    for c in &report.global {
        out.push(line("atlas", c.name.clone(), c.passed, c.detail.clone()));
    }
    out
}
