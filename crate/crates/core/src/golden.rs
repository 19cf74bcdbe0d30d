//! Reference cohomology tables and spectrum lists, embedded from `data/`.
//!
//! Each golden table stores entries as printed. Printed entries that
//! contradict Riemann-Roch are kept, next to an erratum giving the corrected
//! value; [`GoldenTable::check`] only accepts an erratum when the printed
//! column really fails the Euler characteristic.

use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use crate::cohomtable::{diff, synthesize, CohomEntry, CohomError, CohomologyTable, DiffReport, Fact, TwistRange};
use crate::expr::{for_each_assignment, Assignment, ExprError, ParamBounds, Poly};
use crate::spectrum::{c3_of_spectrum, Spectrum, SpectrumError};

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("{0}: {1}")]
    Json(String, serde_json::Error),
    #[error("{0}: {1}")]
    Invalid(String, String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum EntryField {
    Int(i64),
    Expr(String),
}

impl EntryField {
    fn entry(&self) -> Result<CohomEntry, ExprError> {
        Ok(match self {
            EntryField::Int(n) => CohomEntry::Known(*n),
            EntryField::Expr(s) => CohomEntry::from_poly(Poly::parse(s)?),
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
struct SpectrumCase {
    when: Assignment,
    values: Vec<i64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum SpectrumField {
    Single(Vec<i64>),
    Cases(Vec<SpectrumCase>),
}

#[derive(Debug, Clone, Deserialize)]
struct RowsField {
    h0: Vec<EntryField>,
    h1: Vec<EntryField>,
    h2: Vec<EntryField>,
    h3: Vec<EntryField>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
struct BoundsField {
    min: i64,
    max: i64,
}

#[derive(Debug, Clone, Deserialize)]
struct ErratumField {
    row: String,
    twist: i64,
    printed: EntryField,
    corrected: EntryField,
    note: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct GoldenFile {
    source: String,
    c1: i64,
    c2: i64,
    c3: i64,
    spectrum: SpectrumField,
    twists: [i64; 2],
    rows: RowsField,
    #[serde(default)]
    params: BTreeMap<String, BoundsField>,
    #[serde(default)]
    relations: BTreeMap<String, String>,
    #[serde(default)]
    exclude: Vec<Assignment>,
    #[serde(default)]
    facts: Vec<String>,
    #[serde(default)]
    errata: Vec<ErratumField>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub row: usize,
    pub twist: i64,
    pub printed: CohomEntry,
    pub corrected: CohomEntry,
    pub note: String,
}

impl std::fmt::Display for Erratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "h{}(F({})) printed {}, corrected {}",
            self.row, self.twist, self.printed, self.corrected
        )
    }
}

#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub name: String,
    pub source: String,
    /// `(condition, spectrum)`; a single unconditional entry when the table
    /// has one spectrum.
    spectra: Vec<(Assignment, Spectrum)>,
    printed: CohomologyTable,
    corrected: CohomologyTable,
    pub facts: Vec<Fact>,
    pub errata: Vec<Erratum>,
    exclude: Vec<Assignment>,
}

/// Outcome of [`GoldenTable::check`].
#[derive(Debug, Clone, Default)]
pub struct GoldenCheck {
    pub name: String,
    pub assignments: usize,
    pub failures: Vec<String>,
    /// Errata whose printed column was seen to violate the Euler
    /// characteristic.
    pub confirmed_errata: Vec<String>,
}

impl GoldenCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn matches(cond: &Assignment, a: &Assignment) -> bool {
    cond.iter().all(|(k, v)| a.get(k) == Some(v))
}

impl GoldenTable {
    pub fn from_json(name: &str, text: &str) -> Result<Self, GoldenError> {
        let f: GoldenFile =
            serde_json::from_str(text).map_err(|e| GoldenError::Json(name.to_string(), e))?;
        let bad = |why: String| GoldenError::Invalid(name.to_string(), why);
        let range = TwistRange::new(f.twists[0], f.twists[1]);
        if range.is_empty() {
            return Err(bad(format!("empty twist range {}", range)));
        }

        let params: BTreeMap<String, ParamBounds> = f
            .params
            .iter()
            .map(|(k, b)| (k.clone(), ParamBounds::new(b.min, Some(b.max))))
            .collect();
        let mut relations = BTreeMap::new();
        for (k, r) in &f.relations {
            let poly = Poly::parse(r)?;
            if !params.contains_key(k) {
                return Err(bad(format!("relation for undeclared parameter {}", k)));
            }
            if let Some(v) = poly.vars().into_iter().find(|v| f.relations.contains_key(v) || !params.contains_key(v)) {
                return Err(bad(format!("relation for {} uses {}, which is not a free parameter", k, v)));
            }
            relations.insert(k.clone(), poly);
        }

        let spectra = match &f.spectrum {
            SpectrumField::Single(v) => vec![(Assignment::new(), Spectrum::new(f.c1, v.clone())?)],
            SpectrumField::Cases(cs) => cs
                .iter()
                .map(|c| Ok((c.when.clone(), Spectrum::new(f.c1, c.values.clone())?)))
                .collect::<Result<Vec<_>, GoldenError>>()?,
        };
        for (cond, s) in &spectra {
            if s.c2() != f.c2 || c3_of_spectrum(s) != f.c3 {
                return Err(bad(format!("spectrum {} does not give c2 = {}, c3 = {}", s, f.c2, f.c3)));
            }
            if let Some(k) = cond.keys().find(|k| !params.contains_key(*k)) {
                return Err(bad(format!("spectrum condition on undeclared parameter {}", k)));
            }
        }

        let single = match spectra.as_slice() {
            [(c, s)] if c.is_empty() => Some(s.clone()),
            _ => None,
        };
        let mut printed = CohomologyTable::blank(f.c1, f.c2, f.c3, single, range);
        printed.params = params.clone();
        printed.relations = relations;
        let rows = [&f.rows.h0, &f.rows.h1, &f.rows.h2, &f.rows.h3];
        for (row, vals) in rows.iter().enumerate() {
            if vals.len() != range.len() {
                return Err(bad(format!("row h{} has {} entries for {} twists", row, vals.len(), range.len())));
            }
            for (p, v) in range.iter().zip(vals.iter()) {
                let e = v.entry()?;
                if let Some(poly) = e.poly() {
                    if let Some(x) = poly.vars().into_iter().find(|x| !params.contains_key(x)) {
                        return Err(bad(format!("entry h{}({}) uses undeclared parameter {}", row, p, x)));
                    }
                }
                printed.set(row, p, e);
            }
        }

        let mut corrected = printed.clone();
        let mut errata = Vec::new();
        for e in &f.errata {
            let row = e
                .row
                .strip_prefix('h')
                .and_then(|r| r.parse::<usize>().ok())
                .filter(|r| *r < 4)
                .ok_or_else(|| bad(format!("bad erratum row {:?}", e.row)))?;
            if !range.contains(e.twist) {
                return Err(bad(format!("erratum twist {} outside {}", e.twist, range)));
            }
            let p_entry = e.printed.entry()?;
            if printed.entry(row, e.twist) != &p_entry {
                return Err(bad(format!(
                    "erratum at h{}({}) quotes {} but the table has {}",
                    row,
                    e.twist,
                    p_entry,
                    printed.entry(row, e.twist)
                )));
            }
            let c_entry = e.corrected.entry()?;
            corrected.set(row, e.twist, c_entry.clone());
            errata.push(Erratum {
                row,
                twist: e.twist,
                printed: p_entry,
                corrected: c_entry,
                note: e.note.clone(),
            });
        }

        let facts = f
            .facts
            .iter()
            .map(|s| Fact::parse(s, &params))
            .collect::<Result<Vec<_>, _>>()?;

        Ok(GoldenTable {
            name: name.to_string(),
            source: f.source,
            spectra,
            printed,
            corrected,
            facts,
            errata,
            exclude: f.exclude,
        })
    }

    pub fn printed(&self) -> &CohomologyTable {
        &self.printed
    }

    pub fn corrected(&self) -> &CohomologyTable {
        &self.corrected
    }

    pub fn chern(&self) -> (i64, i64, i64) {
        (self.printed.c1, self.printed.c2, self.printed.c3)
    }

    /// The spectrum, when it does not depend on the parameters.
    pub fn single_spectrum(&self) -> Option<&Spectrum> {
        self.printed.spectrum.as_ref()
    }

    pub fn spectrum_for(&self, a: &Assignment) -> Option<&Spectrum> {
        self.spectra.iter().find(|(c, _)| matches(c, a)).map(|(_, s)| s)
    }

    /// Every allowed assignment of the parameters, derived ones included.
    pub fn assignments(&self) -> Vec<Assignment> {
        let free: Vec<(String, i64, i64)> = self
            .printed
            .params
            .iter()
            .filter(|(k, _)| !self.printed.relations.contains_key(*k))
            .map(|(k, b)| (k.clone(), b.min, b.max.expect("golden bounds are finite")))
            .collect();
        let mut out = Vec::new();
        for_each_assignment(&free, &mut |a| {
            if self.exclude.iter().any(|x| matches(x, a)) {
                return;
            }
            let mut full = a.clone();
            for (k, r) in &self.printed.relations {
                full.insert(k.clone(), r.eval(a).expect("relations use free parameters"));
            }
            out.push(full);
        });
        out
    }

    /// Facts with the parameters of `a` substituted.
    fn facts_at(&self, a: &Assignment) -> Vec<Fact> {
        self.facts
            .iter()
            .map(|f| match f {
                Fact::Param { row, twist, expr, bounds } => {
                    let e = expr.partial_eval(a);
                    match e.as_constant() {
                        Some(value) => Fact::Value { row: *row, twist: *twist, value },
                        None => Fact::Param {
                            row: *row,
                            twist: *twist,
                            expr: e,
                            bounds: bounds.clone(),
                        },
                    }
                }
                f => f.clone(),
            })
            .collect()
    }

    /// Synthesizes from the spectrum and facts at every allowed assignment
    /// and compares with the corrected table. Free column parameters of the
    /// synthesized table are solved from the reference values; each must be
    /// consistent and nonnegative.
    pub fn check(&self) -> GoldenCheck {
        let mut out = GoldenCheck {
            name: self.name.clone(),
            ..Default::default()
        };
        let (c1, c2, c3) = self.chern();
        let range = self.printed.range;

        if let Some(s) = self.single_spectrum() {
            // Symbolic comparison, with fixed parameters substituted.
            let fixed: Assignment = self
                .printed
                .params
                .iter()
                .filter(|(_, b)| b.max == Some(b.min))
                .map(|(k, b)| (k.clone(), b.min))
                .collect();
            match synthesize(c1, c2, c3, s, range, &self.facts_at(&fixed)) {
                Ok(t) => match diff(&t, &self.corrected.partial_eval(&fixed)) {
                    Ok(d) => out.failures.extend(d.entries.iter().map(|e| format!("symbolic: {}", e))),
                    Err(e) => out.failures.push(format!("symbolic: {}", e)),
                },
                Err(e) => out.failures.push(format!("symbolic synthesis: {}", e)),
            }
        }

        let mut confirmed = vec![false; self.errata.len()];
        for a in self.assignments() {
            out.assignments += 1;
            let label = format!("{:?}", a);
            let Some(s) = self.spectrum_for(&a) else {
                out.failures.push(format!("{}: no spectrum", label));
                continue;
            };
            let reference = match self.corrected.instantiate(&a) {
                Ok(t) => t,
                Err(e) => {
                    out.failures.push(format!("{}: corrected table: {}", label, e));
                    continue;
                }
            };
            match reference.identity_violations() {
                Ok(v) if v.is_empty() => {}
                Ok(v) => out.failures.push(format!("{}: corrected table violates chi at {:?}", label, v)),
                Err(e) => out.failures.push(format!("{}: {}", label, e)),
            }
            match self.printed.instantiate(&a).map(|t| t.identity_violations()) {
                Ok(Ok(v)) => {
                    for p in v {
                        let mut hit = false;
                        for (i, e) in self.errata.iter().enumerate() {
                            if e.twist == p {
                                confirmed[i] = true;
                                hit = true;
                            }
                        }
                        if !hit {
                            out.failures.push(format!("{}: printed column {} violates chi with no erratum", label, p));
                        }
                    }
                }
                Ok(Err(e)) => out.failures.push(format!("{}: {}", label, e)),
                Err(e) => out.failures.push(format!("{}: printed table: {}", label, e)),
            }

            let synth = match synthesize(c1, c2, c3, s, range, &self.facts_at(&a)) {
                Ok(t) => t,
                Err(e) => {
                    out.failures.push(format!("{}: synthesis: {}", label, e));
                    continue;
                }
            };
            match match_at(&synth, &reference, &a) {
                Ok(d) => out.failures.extend(d.entries.iter().map(|e| format!("{}: {}", label, e))),
                Err(e) => out.failures.push(format!("{}: {}", label, e)),
            }
        }
        for (e, ok) in self.errata.iter().zip(confirmed) {
            if ok {
                out.confirmed_errata.push(format!("{}: {}", self.name, e));
            } else {
                out.failures.push(format!("erratum {} is not confirmed by the Euler characteristic", e));
            }
        }
        out
    }
}

impl GoldenTable {
    /// Compares an externally synthesized table with the corrected table at
    /// every allowed assignment whose spectrum is the one `synth` was built
    /// from. Returns `(assignments compared, failures)`.
    pub fn compare(&self, synth: &CohomologyTable) -> (usize, Vec<String>) {
        let mut failures = Vec::new();
        if (synth.c1, synth.c2, synth.c3) != self.chern() {
            failures.push(format!(
                "Chern classes ({}, {}, {}) differ from ({}, {}, {})",
                synth.c1, synth.c2, synth.c3, self.printed.c1, self.printed.c2, self.printed.c3
            ));
            return (0, failures);
        }
        let mut n = 0;
        for a in self.assignments() {
            if self.spectrum_for(&a) != synth.spectrum.as_ref() {
                continue;
            }
            n += 1;
            let label = format!("{:?}", a);
            let reference = match self.corrected.instantiate(&a) {
                Ok(t) => t,
                Err(e) => {
                    failures.push(format!("{}: corrected table: {}", label, e));
                    continue;
                }
            };
            match match_at(synth, &reference, &a) {
                Ok(d) => failures.extend(d.entries.iter().map(|e| format!("{}: {}", label, e))),
                Err(e) => failures.push(format!("{}: {}", label, e)),
            }
        }
        if n == 0 {
            failures.push("no allowed assignment has this spectrum".to_string());
        }
        (n, failures)
    }
}

/// Solves the free parameters of `synth` at `a` and diffs with `reference`.
fn match_at(synth: &CohomologyTable, reference: &CohomologyTable, a: &Assignment) -> Result<DiffReport, String> {
    let solved = solve_free(synth, reference, a)?;
    synth
        .instantiate(&solved)
        .and_then(|t| diff(&t, reference))
        .map_err(|e| e.to_string())
}

/// Values of the synthesized table's own parameters read off `reference`.
fn solve_free(
    synth: &CohomologyTable,
    reference: &CohomologyTable,
    a: &Assignment,
) -> Result<Assignment, String> {
    let mut out = a.clone();
    for name in synth.params.keys().filter(|k| !a.contains_key(*k)) {
        let mut value: Option<i64> = None;
        for p in synth.range.iter() {
            for row in 0..4 {
                let CohomEntry::Param(poly) = synth.entry(row, p) else {
                    continue;
                };
                let rest = poly.partial_eval(a) - Poly::var(name);
                let (Some(c), CohomEntry::Known(target)) = (rest.as_constant(), reference.entry(row, p)) else {
                    continue;
                };
                let v = target - c;
                match value {
                    Some(old) if old != v => {
                        return Err(format!("{} would be both {} and {}", name, old, v));
                    }
                    _ => value = Some(v),
                }
            }
        }
        match value {
            Some(v) if synth.params[name].contains(v) => {
                out.insert(name.clone(), v);
            }
            Some(v) => return Err(format!("{} = {} is out of bounds", name, v)),
            None => return Err(format!("cannot solve for {}", name)),
        }
    }
    Ok(out)
}

static GOLDEN_FILES: &[(&str, &str)] = &[
    ("c1_0_c3_2_fz", include_str!("../data/golden/c1_0_c3_2_fz.json")),
    ("c1_0_c3_4_fz", include_str!("../data/golden/c1_0_c3_4_fz.json")),
    ("c1_0_c3_6_fz", include_str!("../data/golden/c1_0_c3_6_fz.json")),
    ("c1_0_c3_2_spread", include_str!("../data/golden/c1_0_c3_2_spread.json")),
    ("c1_0_c3_4_spread", include_str!("../data/golden/c1_0_c3_4_spread.json")),
    ("c1_0_c3_6_spread", include_str!("../data/golden/c1_0_c3_6_spread.json")),
    ("c1_0_c3_8", include_str!("../data/golden/c1_0_c3_8.json")),
    ("c1_0_c3_10", include_str!("../data/golden/c1_0_c3_10.json")),
    ("c1_0_c3_12", include_str!("../data/golden/c1_0_c3_12.json")),
    ("c1_m1_c3_2_low", include_str!("../data/golden/c1_m1_c3_2_low.json")),
    ("c1_m1_c3_2_spread", include_str!("../data/golden/c1_m1_c3_2_spread.json")),
    ("c1_m1_c3_4_low", include_str!("../data/golden/c1_m1_c3_4_low.json")),
    ("c1_m1_c3_4_spread", include_str!("../data/golden/c1_m1_c3_4_spread.json")),
    ("c1_m1_c3_6_low", include_str!("../data/golden/c1_m1_c3_6_low.json")),
    ("c1_m1_c3_6_spread", include_str!("../data/golden/c1_m1_c3_6_spread.json")),
    ("c1_m1_c3_8", include_str!("../data/golden/c1_m1_c3_8.json")),
    ("c1_m1_c3_10", include_str!("../data/golden/c1_m1_c3_10.json")),
    ("c1_m1_c3_12", include_str!("../data/golden/c1_m1_c3_12.json")),
];

/// Names of the embedded golden tables.
pub fn golden_names() -> Vec<&'static str> {
    GOLDEN_FILES.iter().map(|(n, _)| *n).collect()
}

/// All embedded golden tables.
pub fn golden_corpus() -> Vec<GoldenTable> {
    GOLDEN_FILES
        .iter()
        .map(|(n, t)| GoldenTable::from_json(n, t).unwrap_or_else(|e| panic!("embedded table: {}", e)))
        .collect()
}

pub fn golden_table(name: &str) -> Option<GoldenTable> {
    GOLDEN_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, t)| GoldenTable::from_json(n, t).unwrap_or_else(|e| panic!("embedded table: {}", e)))
}

#[derive(Debug, Clone, Deserialize)]
struct SpectrumRow {
    c3: i64,
    spectra: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
struct SpectrumFile {
    c1: i64,
    c2: i64,
    rows: Vec<SpectrumRow>,
    unrealized: Vec<Vec<i64>>,
}

/// Reference list of admissible spectra for `c2 = 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumTable {
    pub c1: i64,
    pub c2: i64,
    /// `(c3, spectra)` in increasing `c3`.
    pub rows: Vec<(i64, Vec<Spectrum>)>,
    pub unrealized: Vec<Spectrum>,
}

impl SpectrumTable {
    pub fn len(&self) -> usize {
        self.rows.iter().map(|(_, v)| v.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The reference spectrum list for `c1` in `{0, -1}` and `c2 = 4`.
pub fn spectrum_table(c1: i64) -> Option<SpectrumTable> {
    let text = match c1 {
        0 => include_str!("../data/spectra/c1_0.json"),
        -1 => include_str!("../data/spectra/c1_m1.json"),
        _ => return None,
    };
    let f: SpectrumFile = serde_json::from_str(text).expect("embedded spectrum table");
    let sp = |v: &Vec<i64>| Spectrum::new(f.c1, v.clone()).expect("embedded spectrum");
    Some(SpectrumTable {
        c1: f.c1,
        c2: f.c2,
        rows: f
            .rows
            .iter()
            .map(|r| {
                let mut v: Vec<Spectrum> = r.spectra.iter().map(sp).collect();
                v.sort();
                (r.c3, v)
            })
            .collect(),
        unrealized: f.unrealized.iter().map(sp).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_external_synthesis() {
        let g = golden_table("c1_0_c3_8").unwrap();
        let b = g.corrected().params.clone();
        let facts: Vec<Fact> = ["param:h0@1=l", "param:h1@2=k", "reg=4"]
            .iter()
            .map(|f| Fact::parse(f, &b).unwrap())
            .collect();
        let s = Spectrum::new(0, vec![-2, -1, -1, 0]).unwrap();
        let t = synthesize(0, 4, 8, &s, TwistRange::new(-3, 3), &facts).unwrap();
        let (n, failures) = g.compare(&t);
        assert!(failures.is_empty(), "{:?}", failures);
        assert_eq!(n, 2);
        // A wrong h2 either contradicts or shows up in the diff.
        let mut bad = facts.clone();
        bad.push(Fact::Value { row: 2, twist: 0, value: 1 });
        let t = synthesize(0, 4, 8, &s, TwistRange::new(-3, 3), &bad);
        assert!(t.is_err() || !g.compare(&t.unwrap()).1.is_empty());
        let other = synthesize(0, 4, 8, &s, TwistRange::new(-2, 2), &facts).unwrap();
        assert!(!g.compare(&other).1.is_empty());
    }

    #[test]
    fn corpus_loads() {
        let c = golden_corpus();
        assert_eq!(c.len(), 18);
        let errata: usize = c.iter().map(|t| t.errata.len()).sum();
        assert_eq!(errata, 3);
    }

    #[test]
    fn every_golden_table_checks() {
        for t in golden_corpus() {
            let r = t.check();
            assert!(r.passed(), "{}: {:#?}", t.name, r.failures);
            assert!(r.assignments >= 1);
            assert_eq!(r.confirmed_errata.len(), t.errata.len());
        }
    }

    #[test]
    fn assignments_respect_exclusions_and_relations() {
        let t = golden_table("c1_0_c3_8").unwrap();
        let a = t.assignments();
        assert_eq!(a.len(), 5);
        for x in &a {
            assert_eq!(x["k"], x["m"] * (x["l"] - 1));
        }
        assert_eq!(golden_table("c1_m1_c3_8").unwrap().assignments().len(), 6);
        assert_eq!(golden_table("c1_m1_c3_12").unwrap().assignments(), vec![Assignment::new()]);
    }

    #[test]
    fn unrecorded_violation_fails() {
        let text = include_str!("../data/golden/c1_m1_c3_6_low.json");
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        v["errata"] = serde_json::json!([]);
        let t = GoldenTable::from_json("x", &v.to_string()).unwrap();
        assert!(!t.check().passed());
    }

    #[test]
    fn erratum_on_consistent_entry_fails() {
        let text = include_str!("../data/golden/c1_m1_c3_12.json");
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        v["errata"] = serde_json::json!([
            {"row": "h2", "twist": -2, "printed": 8, "corrected": 9, "note": ""}
        ]);
        let t = GoldenTable::from_json("x", &v.to_string()).unwrap();
        assert!(!t.check().passed());
    }

    #[test]
    fn malformed_files_rejected() {
        assert!(GoldenTable::from_json("x", "{}").is_err());
        let text = include_str!("../data/golden/c1_m1_c3_12.json");
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        v["rows"]["h0"] = serde_json::json!([0, 0]);
        assert!(GoldenTable::from_json("x", &v.to_string()).is_err());
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        v["c3"] = serde_json::json!(10);
        assert!(GoldenTable::from_json("x", &v.to_string()).is_err());
    }

    #[test]
    fn spectrum_tables_load() {
        assert_eq!(spectrum_table(0).unwrap().len(), 15);
        assert_eq!(spectrum_table(-1).unwrap().len(), 15);
        assert!(spectrum_table(1).is_none());
    }
}
