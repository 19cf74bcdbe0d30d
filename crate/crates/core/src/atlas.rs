//! Registry of moduli components and strata for `c2 = 4`, with a verifier
//! that recomputes every dimension from its ingredients.
//!
//! The registry is data (`data/atlas.jsonl`); claims live there with their
//! citations and the verifier only trusts what it can recompute.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::{extremal_constraints, extremal_genus, extremal_obstruction, omega_sections, serre_curve};
use crate::liaison::linked_family_dim;
use crate::spectrum::{c3_of_spectrum, c3_upper_bound, enumerate_spectra, Spectrum};

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("(c1, c2) = ({0}, {1}) has no anchored expected dimension")]
    NotAnchored(i64, i64),
    #[error("line {0}: {1}")]
    Parse(usize, serde_json::Error),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flag {
    Smooth,
    GenericallySmooth,
    Irreducible,
    Unirational,
    Rational,
    NonReduced,
    Stratum,
    Component,
    /// A dense open stratum of its component.
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IngredientKind {
    Serre,
    Liaison,
    Sum,
}

/// How a dimension is put together.
///
/// * `serre`: `[dim_curves, h0_omega, h0_Fk]`, optionally with the twist `k`
///   carrying the section and a decomposition of `dim_curves`;
/// * `liaison`: `[dim_H, h0_C(s), h0_C(t), h0_C2(s), h0_C2(t)]`;
/// * `sum`: the terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ingredients {
    #[serde(rename = "type")]
    pub kind: IngredientKind,
    pub values: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curves: Option<Box<Ingredients>>,
}

impl Ingredients {
    pub fn evaluate(&self) -> Result<i64, String> {
        let v = &self.values;
        match self.kind {
            IngredientKind::Serre => {
                let [dim_curves, h0_omega, h0_fk] = v[..] else {
                    return Err(format!("serre needs 3 values, got {}", v.len()));
                };
                if h0_omega < 0 || h0_fk < 1 {
                    return Err(format!("serre inputs out of range: {:?}", v));
                }
                Ok(serre_family_dim(SerreFamilyInput {
                    dim_curves,
                    h0_omega: h0_omega as u64,
                    h0_fk: h0_fk as u64,
                }))
            }
            IngredientKind::Liaison => {
                let [dim_h, a, b, c, d] = v[..] else {
                    return Err(format!("liaison needs 5 values, got {}", v.len()));
                };
                if [a, b, c, d].iter().any(|x| *x < 0) {
                    return Err(format!("negative section count in {:?}", v));
                }
                Ok(linked_family_dim(dim_h, a as u64, b as u64, c as u64, d as u64))
            }
            IngredientKind::Sum => Ok(v.iter().sum()),
        }
    }

    fn describe(&self) -> String {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        match self.kind {
            IngredientKind::Serre => format!("serre({})", v.join(", ")),
            IngredientKind::Liaison => format!("liaison({})", v.join(", ")),
            IngredientKind::Sum => v.join(" + ").replace("+ -", "- "),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalInfo {
    pub d: i64,
    pub len_z: i64,
    #[serde(default)]
    pub xi_vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliComponentRecord {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub label: String,
    pub dim: i64,
    pub spectrum: Vec<i64>,
    pub flags: Vec<Flag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent_dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ingredients: Option<Ingredients>,
    pub citation: String,
    /// Label of the containing component, for strata.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    /// Set when the sheaves come from extremal curves; the tangent
    /// dimension is then recomputed from the obstruction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremal: Option<ExtremalInfo>,
    /// Described before the present classification; taken as given.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub prior_work: bool,
}

impl ModuliComponentRecord {
    pub fn has(&self, f: Flag) -> bool {
        self.flags.contains(&f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SerreFamilyInput {
    pub dim_curves: i64,
    pub h0_omega: u64,
    pub h0_fk: u64,
}

/// `dim F + h0(F(k)) = dim C + h0(omega_C(4 - 2k - c1))`, solved for `dim F`.
pub fn serre_family_dim(i: SerreFamilyInput) -> i64 {
    i.dim_curves + i.h0_omega as i64 - i.h0_fk as i64
}

/// Only the two anchored values; no general formula is assumed.
pub fn expected_dimension(c1: i64, c2: i64) -> Result<i64, AtlasError> {
    match (c1, c2) {
        (0, 4) => Ok(29),
        (-1, 4) => Ok(27),
        _ => Err(AtlasError::NotAnchored(c1, c2)),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Query {
    pub c1: Option<i64>,
    pub c3: Option<i64>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordReport {
    pub label: String,
    pub checks: Vec<CheckResult>,
}

impl RecordReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub records: Vec<RecordReport>,
    /// Checks about the registry as a whole.
    pub global: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed()) && self.global.iter().all(|c| c.passed)
    }

    pub fn failing_records(&self) -> Vec<&str> {
        self.records
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.label.as_str())
            .collect()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.records {
            for c in r.checks.iter().filter(|c| !c.passed) {
                out.push(format!("{}: {}: {}", r.label, c.name, c.detail));
            }
        }
        for c in self.global.iter().filter(|c| !c.passed) {
            out.push(format!("registry: {}: {}", c.name, c.detail));
        }
        out
    }

    pub fn check_count(&self) -> usize {
        self.records.iter().map(|r| r.checks.len()).sum::<usize>() + self.global.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    pub records: Vec<ModuliComponentRecord>,
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail,
    }
}

impl Atlas {
    /// The shipped registry.
    pub fn builtin() -> Atlas {
        Atlas::from_jsonl(include_str!("../data/atlas.jsonl")).expect("embedded registry")
    }

    pub fn from_jsonl(text: &str) -> Result<Atlas, AtlasError> {
        let mut records = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let r: ModuliComponentRecord =
                serde_json::from_str(line).map_err(|e| AtlasError::Parse(i + 1, e))?;
            if !seen.insert(r.label.clone()) {
                return Err(AtlasError::DuplicateLabel(r.label));
            }
            records.push(r);
        }
        Ok(Atlas { records })
    }

    pub fn to_jsonl(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&serde_json::to_string(r).expect("records serialize"));
            s.push('\n');
        }
        s
    }

    pub fn get(&self, label: &str) -> Option<&ModuliComponentRecord> {
        self.records.iter().find(|r| r.label == label)
    }

    pub fn query(&self, q: &Query) -> Vec<&ModuliComponentRecord> {
        self.records
            .iter()
            .filter(|r| q.c1.is_none_or(|c| r.c1 == c))
            .filter(|r| q.c3.is_none_or(|c| r.c3 == c))
            .filter(|r| q.label.as_deref().is_none_or(|l| r.label == l))
            .collect()
    }

    pub fn verify(&self) -> VerificationReport {
        let records = self.records.iter().map(|r| self.verify_record(r)).collect();
        VerificationReport {
            records,
            global: self.global_checks(),
        }
    }

    fn verify_record(&self, r: &ModuliComponentRecord) -> RecordReport {
        let mut checks = Vec::new();

        let kinds = [r.has(Flag::Stratum), r.has(Flag::Component)];
        checks.push(check(
            "kind",
            kinds.iter().filter(|x| **x).count() == 1,
            "exactly one of Stratum, Component".into(),
        ));
        if r.has(Flag::NonReduced) {
            checks.push(check(
                "non-reduced tangent",
                r.tangent_dim.is_some_and(|t| t > r.dim),
                format!("tangent {:?} vs dim {}", r.tangent_dim, r.dim),
            ));
        }

        checks.push(spectrum_check(r));

        if r.has(Flag::Component) && !r.prior_work {
            match expected_dimension(r.c1, r.c2) {
                Ok(e) => checks.push(check("expected dimension", r.dim == e, format!("dim {} vs expected {}", r.dim, e))),
                Err(e) => checks.push(check("expected dimension", false, e.to_string())),
            }
        }
        if r.has(Flag::Open) {
            let ok = r.has(Flag::Stratum)
                && expected_dimension(r.c1, r.c2).is_ok_and(|e| e == r.dim);
            checks.push(check("open stratum", ok, format!("open stratum of dim {}", r.dim)));
        }

        if let Some(p) = &r.parent {
            match self.get(p) {
                None => checks.push(check("parent", false, format!("no record {}", p))),
                Some(par) => {
                    let same = (par.c1, par.c2, par.c3) == (r.c1, r.c2, r.c3) && par.has(Flag::Component);
                    checks.push(check("parent", same, format!("inside {}", p)));
                    let ok = r.dim < par.dim || (r.dim == par.dim && r.has(Flag::Open));
                    checks.push(check(
                        "stratum dimension",
                        ok,
                        format!("{} against component {}", r.dim, par.dim),
                    ));
                }
            }
        } else if r.has(Flag::Stratum) {
            checks.push(check("parent", false, "stratum without parent".into()));
        }

        if let Some(ing) = &r.ingredients {
            checks.extend(ingredient_checks(r, ing));
        }
        if let Some(x) = &r.extremal {
            checks.extend(extremal_checks(r, x));
        }

        RecordReport {
            label: r.label.clone(),
            checks,
        }
    }

    fn global_checks(&self) -> Vec<CheckResult> {
        let mut out = Vec::new();
        for c1 in [0, -1] {
            let c2 = 4;
            let mut realized = BTreeSet::new();
            for c3 in 0..=c3_upper_bound(c1, c2) {
                if let Ok(v) = enumerate_spectra(c1, c2, c3) {
                    if v.iter().any(|s| s.is_realized()) {
                        realized.insert(c3);
                    }
                }
            }
            let present: BTreeSet<i64> = self
                .records
                .iter()
                .filter(|r| r.c1 == c1 && r.c2 == c2)
                .map(|r| r.c3)
                .collect();
            out.push(check(
                &format!("coverage c1={}", c1),
                realized == present,
                format!("realized c3 {:?}, registry c3 {:?}", realized, present),
            ));
        }
        out
    }
}

fn spectrum_check(r: &ModuliComponentRecord) -> CheckResult {
    let s = match Spectrum::new(r.c1, r.spectrum.clone()) {
        Ok(s) => s,
        Err(e) => return check("spectrum", false, e.to_string()),
    };
    if s.c2() != r.c2 || c3_of_spectrum(&s) != r.c3 {
        return check(
            "spectrum",
            false,
            format!("{} gives (c2, c3) = ({}, {})", s, s.c2(), c3_of_spectrum(&s)),
        );
    }
    let realized = enumerate_spectra(r.c1, r.c2, r.c3)
        .map(|v| v.iter().any(|x| x.spectrum == s && x.is_realized()))
        .unwrap_or(false);
    check("spectrum", realized, format!("{} among realized spectra", s))
}

fn ingredient_checks(r: &ModuliComponentRecord, ing: &Ingredients) -> Vec<CheckResult> {
    let mut out = Vec::new();
    match ing.evaluate() {
        Ok(v) => out.push(check("dimension", v == r.dim, format!("{} = {}, recorded {}", ing.describe(), v, r.dim))),
        Err(e) => out.push(check("dimension", false, e)),
    }
    if let Some(c) = &ing.curves {
        let dim_curves = ing.values.first().copied();
        match c.evaluate() {
            Ok(v) => out.push(check(
                "curve family",
                Some(v) == dim_curves,
                format!("{} = {}, used {:?}", c.describe(), v, dim_curves),
            )),
            Err(e) => out.push(check("curve family", false, e)),
        }
    }
    if let (IngredientKind::Serre, Some(k)) = (ing.kind, ing.k) {
        let n = 4 - 2 * k - r.c1;
        if n >= 1 {
            let recomputed = serre_curve(r.c1, r.c2, r.c3, k)
                .map_err(|e| e.to_string())
                .and_then(|sc| omega_sections(sc.curve, n).map(|v| (sc.curve, v)).map_err(|e| e.to_string()));
            match recomputed {
                Ok((curve, v)) => out.push(check(
                    "h0 omega",
                    ing.values.get(1) == Some(&(v as i64)),
                    format!("h0(omega_C({})) = {} for C = {}", n, v, curve),
                )),
                Err(e) => out.push(check("h0 omega", false, e)),
            }
        }
    }
    out
}

fn extremal_checks(r: &ModuliComponentRecord, x: &ExtremalInfo) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let allowed = extremal_constraints(r.c1).map(|c| c.len_z_allowed.contains(&x.len_z)).unwrap_or(false);
    out.push(check("extremal Z", allowed, format!("len Z = {}", x.len_z)));
    match (serre_curve(r.c1, r.c2, r.c3, 1), extremal_genus(x.d, x.len_z)) {
        (Ok(sc), Ok(g)) => out.push(check(
            "extremal curve",
            sc.curve.degree == x.d && sc.curve.genus == g,
            format!("section curve {} vs extremal (d={}, g={})", sc.curve, x.d, g),
        )),
        (a, b) => out.push(check("extremal curve", false, format!("{:?} {:?}", a.err(), b.err()))),
    }
    let ob = extremal_obstruction(r.c1, x.d, x.len_z, x.xi_vanishes);
    match (ob, expected_dimension(r.c1, r.c2)) {
        (Ok(o), Ok(e)) => match o.value {
            Some(v) => out.push(check(
                "tangent dimension",
                r.tangent_dim == Some(e + v as i64),
                format!("ext1 = {} + ext2 {} = {}, recorded {:?}", e, v, e + v as i64, r.tangent_dim),
            )),
            None => out.push(check(
                "tangent dimension",
                r.tangent_dim.is_some_and(|t| t <= e + o.upper_bound.unwrap_or(0) as i64),
                format!("bounded by {} + {:?}", e, o.upper_bound),
            )),
        },
        (a, b) => out.push(check("tangent dimension", false, format!("{:?} {:?}", a.err(), b.err()))),
    }
    out
}

/// Every `dimension` check in the report, as `(label, detail)`.
pub fn recomputed_dimensions(report: &VerificationReport) -> BTreeMap<String, Vec<String>> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for r in &report.records {
        for c in &r.checks {
            if matches!(c.name.as_str(), "dimension" | "curve family" | "tangent dimension" | "h0 omega") {
                out.entry(r.label.clone()).or_default().push(c.detail.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_verifies() {
        let a = Atlas::builtin();
        let r = a.verify();
        assert!(r.passed(), "{:#?}", r.failures());
    }

    #[test]
    fn serre_examples() {
        let f = |a, b, c| serre_family_dim(SerreFamilyInput { dim_curves: a, h0_omega: b, h0_fk: c });
        assert_eq!(f(24, 7, 4), 27);
        assert_eq!(f(20, 9, 1), 28);
        assert_eq!(f(19, 10, 2), 27);
        assert_eq!(f(16, 11, 1), 26);
    }

    #[test]
    fn expected() {
        assert_eq!(expected_dimension(0, 4).unwrap(), 29);
        assert_eq!(expected_dimension(-1, 4).unwrap(), 27);
        assert!(matches!(expected_dimension(0, 5), Err(AtlasError::NotAnchored(0, 5))));
    }

    #[test]
    fn queries() {
        let a = Atlas::builtin();
        let r = a.query(&Query { c1: Some(0), c3: Some(12), label: None });
        assert_eq!(r.len(), 2);
        let r0 = a.get("R(0,4,12)_0").unwrap();
        assert!(r0.has(Flag::Smooth) && r0.dim == 29);
        let r1 = a.get("R(0,4,12)_1").unwrap();
        assert!(r1.has(Flag::NonReduced) && r1.dim == 29 && r1.tangent_dim == Some(30));
        assert!(a.query(&Query { c1: Some(-1), c3: Some(14), label: None }).is_empty());
        let r = a.query(&Query { label: Some("R(0,4,8)_{2,1}".into()), ..Default::default() });
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].dim, 28);
        assert!(r[0].has(Flag::Stratum));
        for r in a.query(&Query { c1: Some(0), c3: Some(10), label: None }) {
            assert_eq!(r.spectrum, vec![-2, -1, -1, -1]);
        }
    }

    #[test]
    fn jsonl_round_trip() {
        let a = Atlas::builtin();
        assert_eq!(Atlas::from_jsonl(&a.to_jsonl()).unwrap(), a);
        let dup = format!("{}{}", a.to_jsonl(), a.to_jsonl().lines().next().unwrap());
        assert!(matches!(Atlas::from_jsonl(&dup), Err(AtlasError::DuplicateLabel(_))));
        assert!(matches!(Atlas::from_jsonl("{"), Err(AtlasError::Parse(1, _))));
    }

    #[test]
    fn perturbed_dimension_names_one_record() {
        let base = Atlas::builtin();
        let mut tried = 0;
        for i in 0..base.records.len() {
            let r = &base.records[i];
            let derivable = r.ingredients.is_some() || r.has(Flag::Open) || (r.has(Flag::Component) && !r.prior_work);
            if !derivable {
                continue;
            }
            let mut a = base.clone();
            a.records[i].dim += 1;
            let rep = a.verify();
            assert_eq!(rep.failing_records(), vec![r.label.as_str()], "{}", r.label);
            tried += 1;
        }
        assert!(tried > 20);
    }

    #[test]
    fn coverage_detects_holes() {
        let mut a = Atlas::builtin();
        a.records.retain(|r| !(r.c1 == 0 && r.c3 == 14));
        let rep = a.verify();
        assert!(!rep.passed());
        assert!(rep.failing_records().is_empty());
    }

    #[test]
    fn ingredient_arity() {
        let bad = Ingredients { kind: IngredientKind::Serre, values: vec![1, 2], k: None, curves: None };
        assert!(bad.evaluate().is_err());
        let sum = Ingredients { kind: IngredientKind::Sum, values: vec![80, -51], k: None, curves: None };
        assert_eq!(sum.evaluate(), Ok(29));
        assert_eq!(sum.describe(), "80 - 51");
    }
}
