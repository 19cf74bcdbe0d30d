//! Spectra of stable rank-2 reflexive sheaves.
//!
//! A spectrum is a multiset of `c2` integers. It determines `h^1(F(p))` for
//! `p <= -1` and `h^2(F(p))` for `p` above a small threshold, and its sum
//! determines `c3`. Enumeration applies the connectivity and stability
//! occurrence rules; realizability beyond those rules is recorded in a small
//! exclusion registry.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("c1 must be 0 or -1, got {0}")]
    BadC1(i64),
    #[error("c2 must be positive, got {0}")]
    BadC2(i64),
    #[error("a spectrum needs at least one value")]
    Empty,
    #[error("twist {p} is outside the validity range of {rule} (c1 = {c1})")]
    OutOfRange { rule: &'static str, p: i64, c1: i64 },
}

/// Sorted multiset of integers attached to a normalized sheaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spectrum {
    c1: i64,
    values: Vec<i64>,
}

pub(crate) fn check_c1(c1: i64) -> Result<(), SpectrumError> {
    if c1 == 0 || c1 == -1 {
        Ok(())
    } else {
        Err(SpectrumError::BadC1(c1))
    }
}

impl Spectrum {
    pub fn new(c1: i64, mut values: Vec<i64>) -> Result<Self, SpectrumError> {
        check_c1(c1)?;
        if values.is_empty() {
            return Err(SpectrumError::Empty);
        }
        values.sort_unstable();
        Ok(Spectrum { c1, values })
    }

    pub fn c1(&self) -> i64 {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        self.values.len() as i64
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    fn count(&self, k: i64) -> usize {
        self.values.iter().filter(|&&v| v == k).count()
    }

    fn has(&self, k: i64) -> bool {
        self.values.contains(&k)
    }

    /// Connectivity and stability occurrence rules.
    pub fn satisfies_rules(&self) -> bool {
        let min = self.values[0];
        let max = *self.values.last().unwrap();
        if max > 0 && !(0..=max).all(|k| self.has(k)) {
            return false;
        }
        if min < -1 {
            let top = if self.c1 == 0 { -1 } else { -2 };
            if !(min..=top).all(|k| self.has(k)) || !self.has(-1) {
                return false;
            }
            if self.c1 == 0 && !(self.has(0) || self.count(-1) >= 2) {
                return false;
            }
        }
        true
    }

    /// Multiset notation, e.g. `{-2,-1,0,1}`.
    pub fn notation(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.notation())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SpectrumStatus {
    Realized,
    Unrealized { citation: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumVerdict {
    pub spectrum: Spectrum,
    pub status: SpectrumStatus,
}

impl SpectrumVerdict {
    pub fn is_realized(&self) -> bool {
        self.status == SpectrumStatus::Realized
    }
}

/// Admissible spectra known not to occur.
pub struct Exclusion {
    pub c1: i64,
    pub c2: i64,
    pub values: &'static [i64],
    pub citation: &'static str,
}

pub static EXCLUSIONS: &[Exclusion] = &[
    Exclusion {
        c1: 0,
        c2: 4,
        values: &[-2, -2, -1, 0],
        citation: "Hartshorne [H4], Example 5.1.3",
    },
    Exclusion {
        c1: -1,
        c2: 4,
        values: &[-3, -3, -2, -1],
        citation: "R(-1,4,14) is empty: Miro-Roig [MR], Theorem A; Chang [Ch3], Proposition 2",
    },
];

fn exclusion_for(s: &Spectrum) -> Option<&'static Exclusion> {
    EXCLUSIONS
        .iter()
        .find(|e| e.c1 == s.c1 && e.c2 == s.c2() && e.values == s.values.as_slice())
}

#[derive(Serialize)]
struct ExclusionRecord {
    c1: i64,
    c2: i64,
    spectrum: Vec<i64>,
    status: &'static str,
    citation: &'static str,
}

/// The exclusion registry as JSON records.
pub fn exclusions_json() -> serde_json::Value {
    let recs: Vec<ExclusionRecord> = EXCLUSIONS
        .iter()
        .map(|e| ExclusionRecord {
            c1: e.c1,
            c2: e.c2,
            spectrum: e.values.to_vec(),
            status: "unrealized",
            citation: e.citation,
        })
        .collect();
    serde_json::to_value(recs).expect("plain records serialize")
}

pub fn c3_of_spectrum(s: &Spectrum) -> i64 {
    -2 * s.values.iter().sum::<i64>() + s.c1 * s.c2()
}

/// Largest possible `c3` for a stable sheaf with these `c1`, `c2`.
pub fn c3_upper_bound(c1: i64, c2: i64) -> i64 {
    c2 * c2 + (1 + c1) * (2 - c2)
}

/// Every admissible spectrum for `(c1, c2, c3)`, sorted lexicographically.
///
/// `c3` outside `[0, c3_upper_bound]` or with the wrong parity gives an empty
/// list.
pub fn enumerate_spectra(c1: i64, c2: i64, c3: i64) -> Result<Vec<SpectrumVerdict>, SpectrumError> {
    check_c1(c1)?;
    if c2 < 1 {
        return Err(SpectrumError::BadC2(c2));
    }
    if c3 < 0 || c3 > c3_upper_bound(c1, c2) || (c3 - c1 * c2).rem_euclid(2) != 0 {
        return Ok(Vec::new());
    }
    let target = (c1 * c2 - c3) / 2;
    let n = c2 as usize;
    let mut found = Vec::new();
    // The occurrence rules force the support to be an integer interval
    // [lo, hi]; every value in it appears at least once.
    for lo in -c2..=0 {
        for hi in lo..=c2 {
            let width = (hi - lo + 1) as usize;
            if width > n {
                break;
            }
            if lo < -1 && hi < -1 {
                continue;
            }
            let mut mult = vec![1usize; width];
            compositions(n - width, 0, &mut mult, &mut |m| {
                let sum: i64 = m
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (lo + i as i64) * c as i64)
                    .sum();
                if sum != target {
                    return;
                }
                let mut values = Vec::with_capacity(n);
                for (i, &c) in m.iter().enumerate() {
                    values.extend(std::iter::repeat_n(lo + i as i64, c));
                }
                let s = Spectrum { c1, values };
                if s.satisfies_rules() {
                    found.push(s);
                }
            });
        }
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|s| {
            let status = match exclusion_for(&s) {
                Some(e) => SpectrumStatus::Unrealized {
                    citation: e.citation.to_string(),
                },
                None => SpectrumStatus::Realized,
            };
            SpectrumVerdict { spectrum: s, status }
        })
        .collect())
}

// Distributes `extra` additional copies over the slots from `from` onwards.
fn compositions(extra: usize, from: usize, mult: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if from == mult.len() - 1 {
        mult[from] += extra;
        f(mult);
        mult[from] -= extra;
        return;
    }
    for e in 0..=extra {
        mult[from] += e;
        compositions(extra - e, from + 1, mult, f);
        mult[from] -= e;
    }
}

/// `h^1(F(p))` for `p <= -1`.
pub fn h1_from_spectrum(s: &Spectrum, p: i64) -> Result<u64, SpectrumError> {
    if p >= 0 {
        return Err(SpectrumError::OutOfRange {
            rule: "h1",
            p,
            c1: s.c1,
        });
    }
    Ok(s.values.iter().map(|k| (k + p + 2).max(0) as u64).sum())
}

/// Smallest twist for which [`h2_from_spectrum`] applies.
pub fn h2_threshold(c1: i64) -> i64 {
    if c1 == 0 {
        -3
    } else {
        -2
    }
}

/// `h^2(F(p))` for `p >= -3` (`c1 = 0`) or `p >= -2` (`c1 = -1`).
pub fn h2_from_spectrum(s: &Spectrum, p: i64) -> Result<u64, SpectrumError> {
    if p < h2_threshold(s.c1) {
        return Err(SpectrumError::OutOfRange {
            rule: "h2",
            p,
            c1: s.c1,
        });
    }
    Ok(s.values.iter().map(|k| (-k - p - 2).max(0) as u64).sum())
}
