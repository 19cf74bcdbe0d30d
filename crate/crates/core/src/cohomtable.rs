//! Cohomology tables `h^i(F(p))` over a range of twists.
//!
//! [`synthesize`] fills what the spectrum, stability and Riemann-Roch force,
//! then closes each column with the Euler characteristic. Where two entries
//! of a column stay free, the column gets a parameter `t_p` shared by `h^0`
//! and `h^1`. Facts (values, parameter expressions, regularity) are applied
//! before closure.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::chow::{euler_char, ChernTriple, ChowError};
use crate::expr::{Assignment, ExprError, ParamBounds, Poly};
use crate::spectrum::{c3_of_spectrum, h1_from_spectrum, h2_from_spectrum, h2_threshold, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomError {
    #[error("spectrum {0}")]
    InvalidSpectrum(String),
    #[error("contradiction at h{row}(F({twist})): {detail}")]
    Contradiction { row: usize, twist: i64, detail: String },
    #[error("bad fact: {0}")]
    BadFact(String),
    #[error("assignment: {0}")]
    Assignment(String),
    #[error("twist ranges differ: {0} vs {1}")]
    RangeMismatch(TwistRange, TwistRange),
    #[error("empty twist range {0}")]
    EmptyRange(TwistRange),
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomEntry {
    Known(i64),
    /// A nonnegative expression in the table parameters, e.g. `k+8`.
    Param(Poly),
    Unknown,
}

impl CohomEntry {
    /// `base + name`.
    pub fn param(base: i64, name: &str) -> Self {
        CohomEntry::Param(Poly::constant(base) + Poly::var(name))
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.as_constant() {
            Some(c) => CohomEntry::Known(c),
            None => CohomEntry::Param(p),
        }
    }

    pub fn poly(&self) -> Option<Poly> {
        match self {
            CohomEntry::Known(n) => Some(Poly::constant(*n)),
            CohomEntry::Param(p) => Some(p.clone()),
            CohomEntry::Unknown => None,
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, CohomEntry::Known(_))
    }

    fn to_json(&self) -> Value {
        match self {
            CohomEntry::Known(n) => json!(n),
            CohomEntry::Param(p) => json!(p.to_string()),
            CohomEntry::Unknown => Value::Null,
        }
    }
}

impl std::fmt::Display for CohomEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CohomEntry::Known(n) => write!(f, "{}", n),
            CohomEntry::Param(p) => write!(f, "{}", p),
            CohomEntry::Unknown => write!(f, "?"),
        }
    }
}

/// Inclusive range of twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistRange {
    pub lo: i64,
    pub hi: i64,
}

impl TwistRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        TwistRange { lo, hi }
    }

    /// Parses `a:b`.
    pub fn parse(s: &str) -> Option<Self> {
        let (a, b) = s.split_once(':')?;
        Some(TwistRange::new(a.trim().parse().ok()?, b.trim().parse().ok()?))
    }

    pub fn contains(&self, p: i64) -> bool {
        self.lo <= p && p <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        if self.hi < self.lo {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl std::fmt::Display for TwistRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    /// `None` for printed tables whose spectrum depends on a parameter.
    pub spectrum: Option<Spectrum>,
    pub range: TwistRange,
    columns: Vec<[CohomEntry; 4]>,
    pub params: BTreeMap<String, ParamBounds>,
    /// Parameters determined by others, e.g. `k = m*(l-1)`.
    pub relations: BTreeMap<String, Poly>,
}

fn row_label(row: usize) -> String {
    format!("h{}", row)
}

impl CohomologyTable {
    pub fn blank(c1: i64, c2: i64, c3: i64, spectrum: Option<Spectrum>, range: TwistRange) -> Self {
        CohomologyTable {
            c1,
            c2,
            c3,
            spectrum,
            range,
            columns: vec![
                [
                    CohomEntry::Unknown,
                    CohomEntry::Unknown,
                    CohomEntry::Unknown,
                    CohomEntry::Unknown
                ];
                range.len()
            ],
            params: BTreeMap::new(),
            relations: BTreeMap::new(),
        }
    }

    pub fn chern(&self) -> ChernTriple {
        ChernTriple::rank2(self.c1, self.c2, self.c3)
    }

    pub fn chi(&self, p: i64) -> Result<i64, ChowError> {
        euler_char(&self.chern(), p)
    }

    fn idx(&self, p: i64) -> usize {
        assert!(self.range.contains(p), "twist {} outside {}", p, self.range);
        (p - self.range.lo) as usize
    }

    pub fn entry(&self, row: usize, p: i64) -> &CohomEntry {
        &self.columns[self.idx(p)][row]
    }

    pub fn set(&mut self, row: usize, p: i64, e: CohomEntry) {
        let i = self.idx(p);
        self.columns[i][row] = e;
    }

    pub fn column(&self, p: i64) -> &[CohomEntry; 4] {
        &self.columns[self.idx(p)]
    }

    pub fn is_fully_known(&self) -> bool {
        self.columns.iter().flatten().all(|e| e.is_known())
    }

    /// Twists whose column has no unknown entry but whose alternating sum
    /// differs from the Euler characteristic.
    pub fn identity_violations(&self) -> Result<Vec<i64>, ChowError> {
        let mut bad = Vec::new();
        for p in self.range.iter() {
            if let Some(sum) = alternating_sum(self.column(p)) {
                if sum != Poly::constant(self.chi(p)?) {
                    bad.push(p);
                }
            }
        }
        Ok(bad)
    }

    /// Replaces every parameter by its value.
    ///
    /// Derived parameters are computed from their relations when missing from
    /// the assignment. Names that are not parameters of this table are
    /// ignored.
    pub fn instantiate(&self, assignment: &Assignment) -> Result<CohomologyTable, CohomError> {
        let full = complete_assignment(&self.params, &self.relations, assignment)?;
        let mut out = self.clone();
        out.params.clear();
        out.relations.clear();
        for p in self.range.iter() {
            for row in 0..4 {
                if let CohomEntry::Param(poly) = self.entry(row, p) {
                    let v = poly.eval(&full)?;
                    if v < 0 {
                        return Err(CohomError::Contradiction {
                            row,
                            twist: p,
                            detail: format!("{} evaluates to {}", poly, v),
                        });
                    }
                    out.set(row, p, CohomEntry::Known(v));
                }
            }
        }
        Ok(out)
    }

    /// Substitutes the assigned parameters and leaves the others symbolic.
    /// No bounds or sign checks.
    pub fn partial_eval(&self, assignment: &Assignment) -> CohomologyTable {
        let mut out = self.clone();
        for p in self.range.iter() {
            for row in 0..4 {
                if let CohomEntry::Param(poly) = self.entry(row, p) {
                    out.set(row, p, CohomEntry::from_poly(poly.partial_eval(assignment)));
                }
            }
        }
        out.params.retain(|k, _| !assignment.contains_key(k));
        out.relations.retain(|k, _| !assignment.contains_key(k));
        out
    }

    /// JSON in the same layout as the golden files.
    pub fn to_json(&self) -> Value {
        let mut rows = serde_json::Map::new();
        for row in 0..4 {
            let vals: Vec<Value> = self
                .range
                .iter()
                .map(|p| self.entry(row, p).to_json())
                .collect();
            rows.insert(row_label(row), Value::Array(vals));
        }
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, b)| (k.clone(), json!({"min": b.min, "max": b.max})))
            .collect();
        let relations: serde_json::Map<String, Value> = self
            .relations
            .iter()
            .map(|(k, r)| (k.clone(), json!(r.to_string())))
            .collect();
        json!({
            "c1": self.c1,
            "c2": self.c2,
            "c3": self.c3,
            "spectrum": self.spectrum.as_ref().map(|s| s.values().to_vec()),
            "twists": [self.range.lo, self.range.hi],
            "rows": rows,
            "params": params,
            "relations": relations,
        })
    }

    /// A markdown table, one column per twist.
    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| |");
        for p in self.range.iter() {
            s.push_str(&format!(" {} |", p));
        }
        s.push_str("\n|---|");
        for _ in self.range.iter() {
            s.push_str("---|");
        }
        s.push('\n');
        for row in (0..4).rev() {
            s.push_str(&format!("| h{} |", row));
            for p in self.range.iter() {
                s.push_str(&format!(" {} |", self.entry(row, p)));
            }
            s.push('\n');
        }
        s
    }

    /// Whitespace-aligned plain text.
    pub fn to_plain(&self) -> String {
        let cells: Vec<Vec<String>> = (0..4)
            .rev()
            .map(|row| self.range.iter().map(|p| self.entry(row, p).to_string()).collect())
            .collect();
        let header: Vec<String> = self.range.iter().map(|p| p.to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(header.iter())
            .map(|c| c.len())
            .max()
            .unwrap_or(1);
        let mut s = format!("{:>3} ", "p");
        for h in &header {
            s.push_str(&format!(" {:>w$}", h, w = width));
        }
        s.push('\n');
        for (i, row) in cells.iter().enumerate() {
            s.push_str(&format!("{:>3} ", format!("h{}", 3 - i)));
            for c in row {
                s.push_str(&format!(" {:>w$}", c, w = width));
            }
            s.push('\n');
        }
        for (name, b) in &self.params {
            let max = b.max.map(|m| m.to_string()).unwrap_or_else(|| "inf".into());
            s.push_str(&format!("{} in [{}, {}]\n", name, b.min, max));
        }
        s
    }
}

fn alternating_sum(col: &[CohomEntry; 4]) -> Option<Poly> {
    let mut sum = Poly::default();
    for (row, e) in col.iter().enumerate() {
        let p = e.poly()?;
        sum = if row % 2 == 0 { sum + p } else { sum - p };
    }
    Some(sum)
}

fn complete_assignment(
    params: &BTreeMap<String, ParamBounds>,
    relations: &BTreeMap<String, Poly>,
    assignment: &Assignment,
) -> Result<Assignment, CohomError> {
    let mut full = assignment.clone();
    let mut pending: Vec<(&String, &Poly)> = relations.iter().collect();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for (name, rel) in pending {
            match rel.eval(&full) {
                Ok(v) => match full.get(name) {
                    Some(&given) if given != v => {
                        return Err(CohomError::Assignment(format!(
                            "{} = {} but {} gives {}",
                            name, given, rel, v
                        )))
                    }
                    _ => {
                        full.insert(name.clone(), v);
                    }
                },
                Err(_) => rest.push((name, rel)),
            }
        }
        if rest.len() == before {
            let names: Vec<&str> = rest.iter().map(|(n, _)| n.as_str()).collect();
            return Err(CohomError::Assignment(format!(
                "cannot derive {}",
                names.join(", ")
            )));
        }
        pending = rest;
    }
    for (name, b) in params {
        match full.get(name) {
            None => return Err(CohomError::Assignment(format!("{} is not assigned", name))),
            Some(&v) if !b.contains(v) => {
                return Err(CohomError::Assignment(format!(
                    "{} = {} is outside [{}, {}]",
                    name,
                    v,
                    b.min,
                    b.max.map(|m| m.to_string()).unwrap_or_else(|| "inf".into())
                )))
            }
            _ => {}
        }
    }
    Ok(full)
}

/// Something known about the sheaf beyond its spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    /// `h^row(F(twist)) = value`.
    Value { row: usize, twist: i64, value: i64 },
    /// `h^row(F(twist)) = expr`, with bounds for the parameters in `expr`.
    Param {
        row: usize,
        twist: i64,
        expr: Poly,
        bounds: BTreeMap<String, ParamBounds>,
    },
    /// Castelnuovo-Mumford regularity: `h^i(F(p)) = 0` for `p >= r - i`, `i > 0`.
    Regularity(i64),
    /// `h^1(F(p)) = 0` for every `p`.
    Acm,
}

impl Fact {
    /// Parses `hR@P=V`, `param:hR@P=EXPR`, `reg=R` or `acm`. Parameters in
    /// `EXPR` take their bounds from `bounds`, defaulting to `[0, inf)`.
    pub fn parse(s: &str, bounds: &BTreeMap<String, ParamBounds>) -> Result<Fact, CohomError> {
        let bad = |why: &str| CohomError::BadFact(format!("{:?}: {}", s, why));
        let t = s.trim();
        if t == "acm" {
            return Ok(Fact::Acm);
        }
        if let Some(r) = t.strip_prefix("reg=") {
            return r
                .trim()
                .parse()
                .map(Fact::Regularity)
                .map_err(|_| bad("regularity must be an integer"));
        }
        let (is_param, body) = match t.strip_prefix("param:") {
            Some(b) => (true, b),
            None => (false, t),
        };
        let (lhs, rhs) = body.split_once('=').ok_or_else(|| bad("missing '='"))?;
        let (row, twist) = lhs.split_once('@').ok_or_else(|| bad("expected hR@P"))?;
        let row: usize = row
            .trim()
            .strip_prefix('h')
            .and_then(|r| r.parse().ok())
            .filter(|r| *r < 4)
            .ok_or_else(|| bad("row must be h0..h3"))?;
        let twist: i64 = twist.trim().parse().map_err(|_| bad("twist must be an integer"))?;
        let expr = Poly::parse(rhs)?;
        match expr.as_constant() {
            Some(value) if !is_param => Ok(Fact::Value { row, twist, value }),
            _ => {
                let b = expr
                    .vars()
                    .into_iter()
                    .map(|v| {
                        let bd = bounds.get(&v).copied().unwrap_or_else(ParamBounds::nonnegative);
                        (v, bd)
                    })
                    .collect();
                Ok(Fact::Param {
                    row,
                    twist,
                    expr,
                    bounds: b,
                })
            }
        }
    }
}

impl std::fmt::Display for Fact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fact::Value { row, twist, value } => write!(f, "h{}@{}={}", row, twist, value),
            Fact::Param { row, twist, expr, .. } => write!(f, "param:h{}@{}={}", row, twist, expr),
            Fact::Regularity(r) => write!(f, "reg={}", r),
            Fact::Acm => write!(f, "acm"),
        }
    }
}

/// Name of the free parameter of column `p`.
pub fn column_param(p: i64) -> String {
    if p >= 0 {
        format!("t_{}", p)
    } else {
        format!("t_m{}", -p)
    }
}

type Cell = Option<(Poly, String)>;

fn put(cell: &mut Cell, value: Poly, source: String, row: usize, p: i64) -> Result<(), CohomError> {
    match cell {
        Some((old, src)) if *old != value => Err(CohomError::Contradiction {
            row,
            twist: p,
            detail: format!("{} gives {} but {} gives {}", src, old, source, value),
        }),
        Some(_) => Ok(()),
        None => {
            *cell = Some((value, source));
            Ok(())
        }
    }
}

/// Builds the table forced by the spectrum, stability, the Euler
/// characteristic and `facts`.
pub fn synthesize(
    c1: i64,
    c2: i64,
    c3: i64,
    s: &Spectrum,
    range: TwistRange,
    facts: &[Fact],
) -> Result<CohomologyTable, CohomError> {
    if s.c1() != c1 || s.c2() != c2 {
        return Err(CohomError::InvalidSpectrum(format!(
            "{} has c1 = {}, c2 = {}; expected c1 = {}, c2 = {}",
            s,
            s.c1(),
            s.c2(),
            c1,
            c2
        )));
    }
    if c3_of_spectrum(s) != c3 {
        return Err(CohomError::InvalidSpectrum(format!(
            "{} gives c3 = {}, not {}",
            s,
            c3_of_spectrum(s),
            c3
        )));
    }
    if !s.satisfies_rules() {
        return Err(CohomError::InvalidSpectrum(format!("{} is not admissible", s)));
    }
    if range.is_empty() {
        return Err(CohomError::EmptyRange(range));
    }

    let mut table = CohomologyTable::blank(c1, c2, c3, Some(s.clone()), range);
    let mut cells: Vec<[Cell; 4]> = vec![Default::default(); range.len()];
    let at = |p: i64| (p - range.lo) as usize;

    // Facts first, so that a clash with a rule names both sources.
    for fact in facts {
        match fact {
            Fact::Value { row, twist, value } => {
                if range.contains(*twist) {
                    put(&mut cells[at(*twist)][*row], Poly::constant(*value), fact.to_string(), *row, *twist)?;
                }
            }
            Fact::Param {
                row,
                twist,
                expr,
                bounds,
            } => {
                for (name, b) in bounds {
                    match table.params.get(name) {
                        Some(old) if old != b => {
                            return Err(CohomError::BadFact(format!(
                                "parameter {} declared with two different bounds",
                                name
                            )))
                        }
                        _ => {
                            table.params.insert(name.clone(), *b);
                        }
                    }
                }
                if range.contains(*twist) {
                    put(&mut cells[at(*twist)][*row], expr.clone(), fact.to_string(), *row, *twist)?;
                }
            }
            Fact::Regularity(r) => {
                for p in range.iter() {
                    for (row, cell) in cells[at(p)].iter_mut().enumerate().skip(1) {
                        if p >= r - row as i64 {
                            put(cell, Poly::default(), fact.to_string(), row, p)?;
                        }
                    }
                }
            }
            Fact::Acm => {
                for p in range.iter() {
                    put(&mut cells[at(p)][1], Poly::default(), fact.to_string(), 1, p)?;
                }
            }
        }
    }

    for p in range.iter() {
        let col = &mut cells[at(p)];
        if p <= 0 {
            put(&mut col[0], Poly::default(), "stability".into(), 0, p)?;
        }
        if p <= -1 {
            let v = h1_from_spectrum(s, p).expect("p <= -1") as i64;
            put(&mut col[1], Poly::constant(v), "spectrum".into(), 1, p)?;
        }
        if p >= h2_threshold(c1) {
            let v = h2_from_spectrum(s, p).expect("p above threshold") as i64;
            put(&mut col[2], Poly::constant(v), "spectrum".into(), 2, p)?;
        }
        // h^3(F(p)) is dual to h^0(F(-p-4-c1)), which vanishes by stability.
        if p >= -4 - c1 {
            put(&mut col[3], Poly::default(), "stability".into(), 3, p)?;
        }
    }

    for p in range.iter() {
        let chi = table.chi(p)?;
        let col = &cells[at(p)];
        for (row, cell) in col.iter().enumerate() {
            if let Some((v, src)) = cell {
                check_nonnegative(v, &table.params, row, p, src)?;
            }
        }
        let unknown: Vec<usize> = (0..4).filter(|&r| col[r].is_none()).collect();
        let sign = |r: usize| if r.is_multiple_of(2) { 1 } else { -1 };
        // chi minus the known part of the alternating sum
        let mut residue = Poly::constant(chi);
        for (row, cell) in col.iter().enumerate() {
            if let Some((v, _)) = cell {
                residue = residue - Poly::constant(sign(row)) * v.clone();
            }
        }
        let mut entries: [CohomEntry; 4] = col
            .clone()
            .map(|c| c.map(|(v, _)| CohomEntry::from_poly(v)).unwrap_or(CohomEntry::Unknown));
        match unknown.as_slice() {
            [] => {
                if residue != Poly::default() {
                    return Err(CohomError::Contradiction {
                        row: 0,
                        twist: p,
                        detail: format!("alternating sum misses chi = {} by {}", chi, residue),
                    });
                }
            }
            [r] => {
                let v = Poly::constant(sign(*r)) * residue;
                check_nonnegative(&v, &table.params, *r, p, "Euler characteristic")?;
                entries[*r] = CohomEntry::from_poly(v);
            }
            [0, 1] => {
                let (lo, hi) = residue.range_over(&table.params);
                let t = Poly::var(&column_param(p));
                let pair = if let Some(c) = residue.as_constant() {
                    Some((Poly::constant(c.max(0)), Poly::constant((-c).max(0))))
                } else if lo.is_some_and(|x| x >= 0) {
                    Some((residue.clone(), Poly::default()))
                } else if hi.is_some_and(|x| x <= 0) {
                    Some((Poly::default(), -residue.clone()))
                } else {
                    None
                };
                if let Some((b0, b1)) = pair {
                    table
                        .params
                        .insert(column_param(p), ParamBounds::nonnegative());
                    entries[0] = CohomEntry::from_poly(b0 + t.clone());
                    entries[1] = CohomEntry::from_poly(b1 + t);
                }
            }
            _ => {}
        }
        for (row, e) in entries.into_iter().enumerate() {
            table.set(row, p, e);
        }
    }
    Ok(table)
}

fn check_nonnegative(
    v: &Poly,
    params: &BTreeMap<String, ParamBounds>,
    row: usize,
    p: i64,
    src: &str,
) -> Result<(), CohomError> {
    let (lo, _) = v.range_over(params);
    match lo {
        Some(x) if x >= 0 => Ok(()),
        _ => Err(CohomError::Contradiction {
            row,
            twist: p,
            detail: format!("{} forces the negative value {}", src, v),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffKind {
    /// Both entries known, different values.
    Value,
    /// At least one side symbolic, and they differ after renaming.
    Parameterization,
    /// One side unknown, the other not.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEntry {
    pub row: usize,
    pub twist: i64,
    pub kind: DiffKind,
    pub ours: String,
    pub theirs: String,
}

impl std::fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "h{}(F({})): {:?} mismatch, ours {} vs theirs {}",
            self.row, self.twist, self.kind, self.ours, self.theirs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    pub entries: Vec<DiffEntry>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, row: usize, twist: i64) -> Option<&DiffEntry> {
        self.entries.iter().find(|e| e.row == row && e.twist == twist)
    }
}

/// Renames parameters to `#0, #1, ...` in order of first appearance,
/// scanning twists upward and rows `h0..h3` within a twist.
fn canonical_names(t: &CohomologyTable) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for p in t.range.iter() {
        for row in 0..4 {
            if let CohomEntry::Param(poly) = t.entry(row, p) {
                for v in poly.vars_in_order() {
                    let n = map.len();
                    map.entry(v).or_insert_with(|| format!("#{}", n));
                }
            }
        }
    }
    map
}

/// Entry-wise comparison after canonical renaming of parameters.
pub fn diff(t: &CohomologyTable, golden: &CohomologyTable) -> Result<DiffReport, CohomError> {
    if t.range != golden.range {
        return Err(CohomError::RangeMismatch(t.range, golden.range));
    }
    let (ma, mb) = (canonical_names(t), canonical_names(golden));
    let mut report = DiffReport::default();
    for p in t.range.iter() {
        for row in 0..4 {
            let (a, b) = (t.entry(row, p), golden.entry(row, p));
            let kind = match (a, b) {
                (CohomEntry::Unknown, CohomEntry::Unknown) => None,
                (CohomEntry::Unknown, _) | (_, CohomEntry::Unknown) => Some(DiffKind::Unknown),
                (CohomEntry::Known(x), CohomEntry::Known(y)) => (x != y).then_some(DiffKind::Value),
                _ => {
                    let pa = a.poly().unwrap().rename(&ma);
                    let pb = b.poly().unwrap().rename(&mb);
                    (pa != pb).then_some(DiffKind::Parameterization)
                }
            };
            if let Some(kind) = kind {
                report.entries.push(DiffEntry {
                    row,
                    twist: p,
                    kind,
                    ours: a.to_string(),
                    theirs: b.to_string(),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(c1: i64, v: &[i64]) -> Spectrum {
        Spectrum::new(c1, v.to_vec()).unwrap()
    }

    fn known_row(t: &CohomologyTable, row: usize) -> Vec<i64> {
        t.range
            .iter()
            .map(|p| match t.entry(row, p) {
                CohomEntry::Known(n) => *n,
                e => panic!("h{}({}) = {}", row, p, e),
            })
            .collect()
    }

    #[test]
    fn acm_table_is_fully_known() {
        let t = synthesize(
            -1,
            4,
            12,
            &sp(-1, &[-3, -2, -2, -1]),
            TwistRange::new(-3, 3),
            &[Fact::Acm],
        )
        .unwrap();
        assert!(t.is_fully_known());
        assert_eq!(known_row(&t, 0), vec![0, 0, 0, 0, 1, 6, 18]);
        assert_eq!(known_row(&t, 1), vec![0; 7]);
        assert_eq!(known_row(&t, 2), vec![11, 8, 4, 1, 0, 0, 0]);
        assert_eq!(known_row(&t, 3), vec![0; 7]);
    }

    #[test]
    fn free_column_gets_paired_parameter() {
        let t = synthesize(
            0,
            4,
            10,
            &sp(0, &[-2, -1, -1, -1]),
            TwistRange::new(-2, 2),
            &[Fact::Regularity(3)],
        )
        .unwrap();
        assert_eq!(t.entry(0, 1), &CohomEntry::param(1, "t_1"));
        assert_eq!(t.entry(1, 1), &CohomEntry::param(0, "t_1"));
        assert_eq!(t.entry(2, -2), &CohomEntry::Known(5));
        assert_eq!(t.entry(0, 2), &CohomEntry::Known(9));
        assert_eq!(t.params.keys().collect::<Vec<_>>(), vec!["t_1"]);
    }

    #[test]
    fn contradictions_are_errors() {
        let s = sp(0, &[-1, -1, -1, -1]);
        let r = TwistRange::new(-3, 3);
        // h^1(F(-1)) = 0 from the spectrum
        let e = synthesize(0, 4, 8, &s, r, &[Fact::Value { row: 1, twist: -1, value: 2 }]);
        assert!(matches!(e, Err(CohomError::Contradiction { row: 1, twist: -1, .. })));
        // chi(F(1)) = 0, so h^1(F(1)) = -1 would be needed
        let e = synthesize(0, 4, 8, &s, r, &[Fact::Value { row: 0, twist: 1, value: 0 }, Fact::Value { row: 1, twist: 1, value: 1 }]);
        assert!(matches!(e, Err(CohomError::Contradiction { twist: 1, .. })));
        // regularity 2 kills h^1(F(1)) and then h^0(F(0)) = 0 leaves chi(F(0)) = -2 unmatched
        let e = synthesize(0, 4, 8, &s, r, &[Fact::Regularity(1)]);
        assert!(matches!(e, Err(CohomError::Contradiction { .. })));
        let e = synthesize(0, 4, 8, &s, r, &[Fact::Value { row: 0, twist: 2, value: -1 }]);
        assert!(matches!(e, Err(CohomError::Contradiction { .. })));
    }

    #[test]
    fn wrong_spectrum_rejected() {
        let r = TwistRange::new(-1, 1);
        assert!(matches!(
            synthesize(0, 4, 10, &sp(0, &[-1, -1, -1, -1]), r, &[]),
            Err(CohomError::InvalidSpectrum(_))
        ));
        assert!(matches!(
            synthesize(0, 4, 8, &sp(0, &[-1, -1, -1]), r, &[]),
            Err(CohomError::InvalidSpectrum(_))
        ));
        assert!(matches!(
            synthesize(0, 4, 8, &sp(0, &[-1, -1, -1, -1]), TwistRange::new(1, 0), &[]),
            Err(CohomError::EmptyRange(_))
        ));
    }

    #[test]
    fn instantiate_checks_bounds() {
        let mut t = CohomologyTable::blank(0, 4, 8, None, TwistRange::new(2, 2));
        t.set(0, 2, CohomEntry::Param(Poly::parse("8+k").unwrap()));
        t.params.insert("l".into(), ParamBounds::new(0, Some(2)));
        t.params.insert("m".into(), ParamBounds::new(0, Some(1)));
        t.params.insert("k".into(), ParamBounds::new(0, Some(1)));
        t.relations.insert("k".into(), Poly::parse("m*(l-1)").unwrap());
        let a: Assignment = [("l".to_string(), 1), ("m".to_string(), 1)].into();
        assert_eq!(t.instantiate(&a).unwrap().entry(0, 2), &CohomEntry::Known(8));
        let a: Assignment = [("l".to_string(), 2), ("m".to_string(), 1)].into();
        assert_eq!(t.instantiate(&a).unwrap().entry(0, 2), &CohomEntry::Known(9));
        let a: Assignment = [("l".to_string(), 3), ("m".to_string(), 1)].into();
        assert!(t.instantiate(&a).is_err());
        let a: Assignment = [("l".to_string(), 0), ("m".to_string(), 1)].into();
        assert!(t.instantiate(&a).is_err());
        let a: Assignment = [("l".to_string(), 1)].into();
        assert!(t.instantiate(&a).is_err());
    }

    #[test]
    fn empty_assignment_on_known_table() {
        let t = synthesize(-1, 4, 12, &sp(-1, &[-3, -2, -2, -1]), TwistRange::new(-3, 3), &[Fact::Acm]).unwrap();
        assert_eq!(t.instantiate(&Assignment::new()).unwrap(), t);
    }

    #[test]
    fn diff_renames_parameters() {
        let s = sp(0, &[-2, -1, -1, -1]);
        let t = synthesize(0, 4, 10, &s, TwistRange::new(-2, 2), &[Fact::Regularity(3)]).unwrap();
        let mut g = t.clone();
        g.set(0, 1, CohomEntry::param(1, "l"));
        g.set(1, 1, CohomEntry::param(0, "l"));
        assert!(diff(&t, &g).unwrap().is_empty());
        assert!(diff(&t, &t).unwrap().is_empty());
        g.set(1, 1, CohomEntry::Known(0));
        let d = diff(&t, &g).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0].kind, DiffKind::Parameterization);
        g.set(2, -2, CohomEntry::Known(4));
        assert_eq!(diff(&t, &g).unwrap().find(2, -2).unwrap().kind, DiffKind::Value);
        let other = CohomologyTable::blank(0, 4, 10, None, TwistRange::new(-1, 2));
        assert!(matches!(diff(&t, &other), Err(CohomError::RangeMismatch(..))));
    }

    #[test]
    fn fact_grammar() {
        let b = BTreeMap::new();
        assert_eq!(Fact::parse("h1@2=3", &b).unwrap(), Fact::Value { row: 1, twist: 2, value: 3 });
        assert_eq!(Fact::parse("h1@-1=0", &b).unwrap(), Fact::Value { row: 1, twist: -1, value: 0 });
        assert_eq!(Fact::parse("reg=3", &b).unwrap(), Fact::Regularity(3));
        assert_eq!(Fact::parse("acm", &b).unwrap(), Fact::Acm);
        match Fact::parse("param:h0@1=1+l", &b).unwrap() {
            Fact::Param { row, twist, expr, bounds } => {
                assert_eq!((row, twist), (0, 1));
                assert_eq!(expr.to_string(), "l+1");
                assert_eq!(bounds["l"], ParamBounds::nonnegative());
            }
            f => panic!("{:?}", f),
        }
        assert!(Fact::parse("h4@1=0", &b).is_err());
        assert!(Fact::parse("h1@x=0", &b).is_err());
        assert!(Fact::parse("reg=", &b).is_err());
        assert!(Fact::parse("h1@1", &b).is_err());
        for s in ["h1@2=3", "reg=3", "acm", "param:h0@1=l+1"] {
            assert_eq!(Fact::parse(s, &b).unwrap().to_string(), s);
        }
    }

    #[test]
    fn renderings() {
        let t = synthesize(-1, 4, 12, &sp(-1, &[-3, -2, -2, -1]), TwistRange::new(-1, 1), &[Fact::Acm]).unwrap();
        let md = t.to_markdown();
        assert!(md.starts_with("| | -1 | 0 | 1 |"));
        assert!(md.contains("| h2 | 4 | 1 | 0 |"));
        let j = t.to_json();
        assert_eq!(j["rows"]["h2"], json!([4, 1, 0]));
        assert!(t.to_plain().contains("h0"));
        assert_eq!(TwistRange::parse("-3:3"), Some(TwistRange::new(-3, 3)));
        assert_eq!(TwistRange::parse("3"), None);
    }
}
