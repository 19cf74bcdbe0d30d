//! Oracles shared by the integration tests, written from the published
//! statements and not from the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

/// Every nondecreasing list of length `n` with entries in `[lo, hi]`.
fn multisets(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in multisets(n - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn occurs(v: &[i64], k: i64) -> bool {
    v.contains(&k)
}

/// The occurrence conditions for a spectrum of a stable sheaf, one clause
/// at a time.
fn admissible(c1: i64, v: &[i64]) -> bool {
    for &k in v {
        if k > 0 && !((1..=k).all(|j| occurs(v, j)) && occurs(v, 0)) {
            return false;
        }
        if k < -1 {
            let from = if c1 == 0 { -1 } else { -2 };
            if !(k..=from).all(|j| occurs(v, j)) || !occurs(v, -1) {
                return false;
            }
            if c1 == 0 && !(occurs(v, 0) || v.iter().filter(|&&x| x == -1).count() >= 2) {
                return false;
            }
        }
    }
    true
}

pub fn oracle(c1: i64, c2: i64) -> BTreeMap<i64, BTreeSet<Vec<i64>>> {
    let mut out: BTreeMap<i64, BTreeSet<Vec<i64>>> = BTreeMap::new();
    for v in multisets(c2 as usize, -c2 - 2, c2 + 2) {
        if !admissible(c1, &v) {
            continue;
        }
        let c3 = -2 * v.iter().sum::<i64>() + c1 * c2;
        if c3 >= 0 {
            out.entry(c3).or_default().insert(v);
        }
    }
    out
}

/// chi(F(l)) for c2 = 4, as printed.
pub fn hrr(c1: i64, c3: i64, l: i64) -> Ratio<i64> {
    let l = Ratio::from_integer(l);
    let r = |a, b| Ratio::new(a, b);
    let c = Ratio::from_integer(c3) / 2;
    if c1 == 0 {
        l * l * l * r(1, 3) + l * l * 2 - l * r(1, 3) + c - 6
    } else {
        l * l * l * r(1, 3) + l * l * r(3, 2) - l * r(11, 6) + c - 5
    }
}

/// Total Chern class of `positive - negative` as integer coefficients of
/// `1, h, h^2, h^3`, by multiplying Chern polynomials modulo `h^4`.
pub fn chern_polynomial(positive: &[Bundle], negative: &[Bundle]) -> [i64; 4] {
    let mut c = [1, 0, 0, 0];
    for b in positive {
        for _ in 0..b.mult {
            c = mul(c, b.total());
        }
    }
    for b in negative {
        for _ in 0..b.mult {
            c = mul(c, inverse(b.total()));
        }
    }
    c
}

#[derive(Clone, Copy)]
pub struct Bundle {
    /// `Some(a)` for `O(a)`, `None` with `tangent = Some(a)` for `T(a)`.
    pub line: Option<i64>,
    pub tangent: Option<i64>,
    pub mult: u32,
}

pub fn o(a: i64, mult: u32) -> Bundle {
    Bundle { line: Some(a), tangent: None, mult }
}

pub fn t(a: i64, mult: u32) -> Bundle {
    Bundle { line: None, tangent: Some(a), mult }
}

impl Bundle {
    fn total(&self) -> [i64; 4] {
        match (self.line, self.tangent) {
            (Some(a), _) => [1, a, 0, 0],
            (None, Some(a)) => {
                // c(T) = (1+h)^4 and c_t(E(a)) = sum c_i(E) (1 + a h)^(r - i), r = 3.
                let ct = [1, 4, 6, 4];
                let mut out = [0; 4];
                for (i, ci) in ct.iter().enumerate() {
                    let mut term = [*ci, 0, 0, 0];
                    for _ in 0..(3 - i) {
                        term = mul(term, [1, a, 0, 0]);
                    }
                    for j in 0..4 {
                        if i + j < 4 {
                            out[i + j] += term[j];
                        }
                    }
                }
                out
            }
            _ => unreachable!(),
        }
    }
}

pub fn mul(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn inverse(a: [i64; 4]) -> [i64; 4] {
    assert_eq!(a[0], 1);
    let mut out = [1, 0, 0, 0];
    for n in 1..4 {
        out[n] = -(1..=n).map(|i| a[i] * out[n - i]).sum::<i64>();
    }
    out
}
