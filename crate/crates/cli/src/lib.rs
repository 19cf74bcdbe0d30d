//! Command-line front end. `run` does all the work so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
//! 3 internal contradiction.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use refsheaf::atlas::{Atlas, ModuliComponentRecord, Query};
use refsheaf::cohomtable::{synthesize, CohomError, CohomologyTable, Fact, TwistRange};
use refsheaf::curves::{omega_sections, serre_curve};
use refsheaf::golden::{golden_table, GoldenTable};
use refsheaf::liaison::{complete_intersection_h0, h0_transfer, h1_transfer, linked_curve, LinkSpec};
use refsheaf::regression::run_regression;
use refsheaf::spectrum::{c3_upper_bound, enumerate_spectra, Spectrum, SpectrumStatus, SpectrumVerdict};
use refsheaf::atlas::{serre_family_dim, SerreFamilyInput};
use refsheaf::curves::CurveClass;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRADICTION: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    #[value(alias = "markdown-table")]
    Markdown,
    Plain,
}

#[derive(Parser, Debug)]
#[command(name = "refsheaf", version, about = "Invariants of rank-2 reflexive sheaves on P3")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Admissible spectra, with realizability.
    #[command(allow_negative_numbers = true)]
    Spectra {
        #[arg(long)]
        c1: i64,
        #[arg(long, default_value_t = 4)]
        c2: i64,
        /// Every admissible c3 when omitted.
        #[arg(long)]
        c3: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Cohomology table forced by a spectrum and facts.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long)]
        c1: i64,
        #[arg(long, default_value_t = 4)]
        c2: i64,
        #[arg(long)]
        c3: i64,
        /// Comma-separated, e.g. -2,-1,-1,0
        #[arg(long, allow_hyphen_values = true)]
        spectrum: String,
        /// Twists as lo:hi, e.g. -3:3
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        /// hR@P=V, param:hR@P=EXPR, reg=R or acm; repeatable.
        #[arg(long = "fact", allow_hyphen_values = true)]
        facts: Vec<String>,
        /// Golden table file, or the name of an embedded one.
        #[arg(long)]
        golden: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Curve of a section of F(k).
    #[command(allow_negative_numbers = true)]
    Serre {
        #[arg(long)]
        c1: i64,
        #[arg(long, default_value_t = 4)]
        c2: i64,
        #[arg(long)]
        c3: i64,
        #[arg(long)]
        k: i64,
        /// Dimension of the family of curves, for the family dimension.
        #[arg(long)]
        dim_curves: Option<i64>,
        /// h0(F(k)), for the family dimension.
        #[arg(long)]
        h0_fk: Option<u64>,
        /// Overrides the computed h0(omega_C(4-2k-c1)).
        #[arg(long)]
        h0_omega: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Residual of a curve in a complete intersection.
    #[command(allow_negative_numbers = true)]
    Liaison {
        #[arg(long)]
        deg: i64,
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
        /// Twist n for the cohomology transfers.
        #[arg(long)]
        twist: Option<i64>,
        /// h1(O_G(s+t-n-4)) of the residual; computed when that twist is negative.
        #[arg(long)]
        h1_o_linked: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Query or verify the moduli atlas.
    #[command(allow_negative_numbers = true)]
    Atlas {
        #[arg(long)]
        c1: Option<i64>,
        #[arg(long)]
        c3: Option<i64>,
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        verify: bool,
        /// Write the JSON result here.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// JSONL registry to use instead of the built-in one.
        #[arg(long)]
        registry: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the whole regression corpus.
    Check {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

/// Error carrying its exit code.
struct Fail(i32, String);

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(EXIT_USAGE, msg.to_string())
}

type Out<'a> = &'a mut dyn Write;

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", text);
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", text);
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.cmd {
        Cmd::Spectra { c1, c2, c3, format } => spectra(out, c1, c2, c3, format),
        Cmd::Table { c1, c2, c3, spectrum, range, facts, golden, format } => {
            table(out, c1, c2, c3, &spectrum, &range, &facts, golden.as_deref(), format)
        }
        Cmd::Serre { c1, c2, c3, k, dim_curves, h0_fk, h0_omega, format } => {
            serre(out, c1, c2, c3, k, dim_curves, h0_fk, h0_omega, format)
        }
        Cmd::Liaison { deg, genus, s, t, twist, h1_o_linked, format } => {
            liaison(out, deg, genus, s, t, twist, h1_o_linked, format)
        }
        Cmd::Atlas { c1, c3, label, verify, out: path, registry, format } => {
            atlas(out, Query { c1, c3, label }, verify, path, registry, format)
        }
        Cmd::Check { format } => check(out, format),
    };
    match result {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            code
        }
    }
}

fn emit(out: Out, s: &str) -> Result<(), Fail> {
    out.write_all(s.as_bytes())
        .and_then(|_| if s.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") })
        .map_err(|e| Fail(EXIT_CONTRADICTION, format!("write failed: {}", e)))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn verdict_json(v: &SpectrumVerdict) -> Value {
    let mut o = json!({ "values": v.spectrum.values() });
    match &v.status {
        SpectrumStatus::Realized => o["status"] = json!("realized"),
        SpectrumStatus::Unrealized { citation } => {
            o["status"] = json!("unrealized");
            o["citation"] = json!(citation);
        }
    }
    o
}

fn spectra(out: Out, c1: i64, c2: i64, c3: Option<i64>, format: Format) -> Result<i32, Fail> {
    let c3s: Vec<i64> = match c3 {
        Some(c) => vec![c],
        None => {
            if c2 < 1 {
                return Err(usage(format!("c2 must be positive, got {}", c2)));
            }
            (0..=c3_upper_bound(c1, c2)).collect()
        }
    };
    let mut rows = Vec::new();
    for c in c3s {
        let v = enumerate_spectra(c1, c2, c).map_err(usage)?;
        if c3.is_some() || !v.is_empty() {
            rows.push((c, v));
        }
    }
    let text = match format {
        Format::Json => pretty(&json!({
            "c1": c1,
            "c2": c2,
            "rows": rows.iter().map(|(c, v)| json!({
                "c3": c,
                "spectra": v.iter().map(verdict_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Plain => {
            let mut s = String::new();
            for (c, v) in &rows {
                if v.is_empty() {
                    s.push_str(&format!("c3={} none\n", c));
                }
                for x in v {
                    s.push_str(&format!("c3={} {} {}\n", c, x.spectrum, status_text(&x.status)));
                }
            }
            s
        }
        Format::Markdown => {
            let mut s = String::from("| c3 | spectrum | status |\n|---|---|---|\n");
            for (c, v) in &rows {
                for x in v {
                    s.push_str(&format!("| {} | {} | {} |\n", c, x.spectrum, status_text(&x.status)));
                }
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn status_text(s: &SpectrumStatus) -> String {
    match s {
        SpectrumStatus::Realized => "realized".into(),
        SpectrumStatus::Unrealized { citation } => format!("unrealized ({})", citation),
    }
}

fn load_golden(spec: &str) -> Result<GoldenTable, Fail> {
    let path = std::path::Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {}", spec, e)))?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(spec);
        return GoldenTable::from_json(name, &text).map_err(|e| usage(format!("{}: {}", spec, e)));
    }
    golden_table(spec).ok_or_else(|| usage(format!("no golden file or embedded table named {:?}", spec)))
}

fn parse_spectrum(c1: i64, s: &str) -> Result<Spectrum, Fail> {
    let values = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("bad spectrum {:?}", s)))?;
    Spectrum::new(c1, values).map_err(usage)
}

fn cohom_fail(e: CohomError) -> Fail {
    match e {
        CohomError::Contradiction { .. } => Fail(EXIT_CONTRADICTION, e.to_string()),
        e => usage(e),
    }
}

fn render_table(t: &CohomologyTable, format: Format) -> String {
    match format {
        Format::Json => pretty(&t.to_json()),
        Format::Markdown => t.to_markdown(),
        Format::Plain => t.to_plain(),
    }
}

#[allow(clippy::too_many_arguments)]
fn table(
    out: Out,
    c1: i64,
    c2: i64,
    c3: i64,
    spectrum: &str,
    range: &str,
    facts: &[String],
    golden: Option<&str>,
    format: Format,
) -> Result<i32, Fail> {
    let s = parse_spectrum(c1, spectrum)?;
    let range = TwistRange::parse(range).ok_or_else(|| usage(format!("bad range {:?}, expected lo:hi", range)))?;
    let g = golden.map(load_golden).transpose()?;
    let bounds = g.as_ref().map(|g| g.corrected().params.clone()).unwrap_or_default();
    let facts = facts
        .iter()
        .map(|f| Fact::parse(f, &bounds))
        .collect::<Result<Vec<_>, _>>()
        .map_err(cohom_fail)?;
    let t = synthesize(c1, c2, c3, &s, range, &facts).map_err(cohom_fail)?;
    let comparison = g.as_ref().map(|g| (g.name.clone(), g.compare(&t)));
    let code = match &comparison {
        Some((_, (_, failures))) if !failures.is_empty() => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    if format == Format::Json {
        let cmp = comparison.as_ref().map(|(name, (n, failures))| {
            json!({ "golden": name, "assignments": n, "failures": failures })
        });
        emit(out, &pretty(&json!({ "table": t.to_json(), "comparison": cmp })))?;
    } else {
        emit(out, &render_table(&t, format))?;
        if let Some((name, (n, failures))) = &comparison {
            if failures.is_empty() {
                emit(out, &format!("golden {}: {} assignments match", name, n))?;
            } else {
                let mut s = format!("golden {}: {} mismatches\n", name, failures.len());
                for f in failures {
                    s.push_str(&format!("  {}\n", f));
                }
                emit(out, &s)?;
            }
        }
    }
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn serre(
    out: Out,
    c1: i64,
    c2: i64,
    c3: i64,
    k: i64,
    dim_curves: Option<i64>,
    h0_fk: Option<u64>,
    h0_omega: Option<u64>,
    format: Format,
) -> Result<i32, Fail> {
    let sc = serre_curve(c1, c2, c3, k).map_err(usage)?;
    let n = 4 - 2 * k - c1;
    let omega = match h0_omega {
        Some(v) => Some(v),
        None if n >= 1 => Some(omega_sections(sc.curve, n).map_err(usage)?),
        None => None,
    };
    let family = match (dim_curves, h0_fk, omega) {
        (Some(d), Some(h), Some(o)) => Some(serre_family_dim(SerreFamilyInput {
            dim_curves: d,
            h0_omega: o,
            h0_fk: h,
        })),
        _ => None,
    };
    let v = json!({
        "c1": c1, "c2": c2, "c3": c3, "k": k,
        "curve": sc.curve,
        "extrapolated": sc.extrapolated,
        "omega_twist": n,
        "h0_omega": omega,
        "family_dim": family,
    });
    let text = match format {
        Format::Json => pretty(&v),
        _ => {
            let mut s = format!("curve: degree {}, genus {}\n", sc.curve.degree, sc.curve.genus);
            if sc.extrapolated {
                s.push_str("note: degree and genus law extrapolated beyond c2 = 4\n");
            }
            match omega {
                Some(o) => s.push_str(&format!("h0(omega_C({})) = {}\n", n, o)),
                None => s.push_str(&format!("h0(omega_C({})) not computed\n", n)),
            }
            if let Some(f) = family {
                s.push_str(&format!("family dimension: {}\n", f));
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn liaison(
    out: Out,
    deg: i64,
    genus: i64,
    s: i64,
    t: i64,
    twist: Option<i64>,
    h1_o_linked: Option<u64>,
    format: Format,
) -> Result<i32, Fail> {
    let c = CurveClass::new(deg, genus).map_err(usage)?;
    let spec = LinkSpec::new(c, s, t).map_err(usage)?;
    let g = linked_curve(&spec).map_err(usage)?;
    let mut v = json!({ "curve": c, "s": s, "t": t, "linked": g });
    let mut text = format!("linked curve: degree {}, genus {}\n", g.degree, g.genus);
    if let Some(n) = twist {
        let m = h1_transfer(&spec, n);
        let ci = complete_intersection_h0(s, t, n);
        let h1 = match h1_o_linked {
            Some(x) => Some(x),
            None if m <= -1 => Some(omega_sections(g, -m).map_err(usage)?),
            None => None,
        };
        let h0 = h1.map(|x| h0_transfer(&spec, n, ci, x));
        v["twist"] = json!(n);
        v["h1_linked_twist"] = json!(m);
        v["h0_complete_intersection"] = json!(ci);
        v["h1_o_linked"] = json!(h1);
        v["h0_ideal"] = json!(h0);
        text.push_str(&format!("h1(I_C({})) = h1(I_G({}))\n", n, m));
        text.push_str(&format!("h0(I_X({})) = {}\n", n, ci));
        if let Some(h) = h0 {
            text.push_str(&format!("h0(I_C({})) = {}\n", n, h));
        }
    }
    emit(out, &if format == Format::Json { pretty(&v) } else { text })?;
    Ok(EXIT_OK)
}

fn record_line(r: &ModuliComponentRecord) -> String {
    let flags: Vec<String> = r.flags.iter().map(|f| format!("{:?}", f)).collect();
    let sp: Vec<String> = r.spectrum.iter().map(|x| x.to_string()).collect();
    let mut s = format!("{} dim={} spectrum={{{}}} [{}]", r.label, r.dim, sp.join(","), flags.join(","));
    if let Some(t) = r.tangent_dim {
        s.push_str(&format!(" tangent={}", t));
    }
    s
}

fn atlas(
    out: Out,
    q: Query,
    verify: bool,
    path: Option<std::path::PathBuf>,
    registry: Option<std::path::PathBuf>,
    format: Format,
) -> Result<i32, Fail> {
    let a = match registry {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| usage(format!("{}: {}", p.display(), e)))?;
            Atlas::from_jsonl(&text).map_err(usage)?
        }
        None => Atlas::builtin(),
    };
    let (value, text, code) = if verify {
        let r = a.verify();
        let mut s = String::new();
        for rec in &r.records {
            s.push_str(&format!("{} {}\n", if rec.passed() { "PASS" } else { "FAIL" }, rec.label));
            for c in &rec.checks {
                s.push_str(&format!("    {} {}: {}\n", if c.passed { "ok" } else { "FAILED" }, c.name, c.detail));
            }
        }
        for c in &r.global {
            s.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
        }
        s.push_str(&format!("{} checks, {} failures\n", r.check_count(), r.failures().len()));
        let code = if r.passed() { EXIT_OK } else { EXIT_MISMATCH };
        (serde_json::to_value(&r).expect("report serializes"), s, code)
    } else {
        let found = a.query(&q);
        let v = serde_json::to_value(&found).expect("records serialize");
        let s = match format {
            Format::Markdown => {
                let mut s = String::from("| label | dim | spectrum | flags |\n|---|---|---|---|\n");
                for r in &found {
                    let flags: Vec<String> = r.flags.iter().map(|f| format!("{:?}", f)).collect();
                    let sp: Vec<String> = r.spectrum.iter().map(|x| x.to_string()).collect();
                    s.push_str(&format!("| {} | {} | {{{}}} | {} |\n", r.label, r.dim, sp.join(","), flags.join(", ")));
                }
                s
            }
            _ => found.iter().map(|r| record_line(r) + "\n").collect(),
        };
        (v, s, EXIT_OK)
    };
    if let Some(p) = path {
        std::fs::write(&p, pretty(&value) + "\n").map_err(|e| usage(format!("{}: {}", p.display(), e)))?;
    }
    emit(out, &if format == Format::Json { pretty(&value) } else { text })?;
    Ok(code)
}

fn check(out: Out, format: Format) -> Result<i32, Fail> {
    let lines = run_regression();
    let failed = lines.iter().filter(|l| !l.passed).count();
    let text = match format {
        Format::Json => pretty(&json!({ "checks": lines, "failures": failed })),
        _ => {
            let mut s = String::new();
            for l in &lines {
                s.push_str(&format!(
                    "{} {} {}: {}\n",
                    if l.passed { "PASS" } else { "FAIL" },
                    l.group,
                    l.name,
                    l.detail
                ));
            }
            s.push_str(&format!("{} checks, {} failures\n", lines.len(), failed));
            s
        }
    };
    emit(out, &text)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
