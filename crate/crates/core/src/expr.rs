//! Integer polynomials in named nonnegative parameters.
//!
//! Table entries such as `8+k`, `4-z` or `l*k+m+4` are parsed into [`Poly`].
//! Grammar: sums and differences of products of integers, names and
//! parenthesized expressions.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("cannot parse expression {0:?}: {1}")]
    Parse(String, String),
    #[error("parameter {0} has no value")]
    Unassigned(String),
}

/// Bounds of a parameter; `max = None` means unbounded above.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamBounds {
    pub min: i64,
    pub max: Option<i64>,
}

impl ParamBounds {
    pub fn new(min: i64, max: Option<i64>) -> Self {
        ParamBounds { min, max }
    }

    pub fn nonnegative() -> Self {
        ParamBounds { min: 0, max: None }
    }

    pub fn contains(&self, v: i64) -> bool {
        v >= self.min && self.max.is_none_or(|m| v <= m)
    }
}

pub type Assignment = BTreeMap<String, i64>;

/// A monomial is a sorted list of parameter names (with repetition).
type Monomial = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        Poly { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![name.to_string()], 1);
        Poly { terms }
    }

    fn insert(&mut self, m: Monomial, c: i64) {
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Vec::new()).copied(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.terms.get(&Vec::new()).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.terms.keys().flatten().cloned().collect()
    }

    /// Variables in order of first appearance in the canonical term order.
    pub fn vars_in_order(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for v in m {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
        }
        out
    }

    pub fn eval(&self, a: &Assignment) -> Result<i64, ExprError> {
        let mut total = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for v in m {
                t *= a.get(v).ok_or_else(|| ExprError::Unassigned(v.clone()))?;
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes the assigned variables, leaving the others symbolic.
    pub fn partial_eval(&self, a: &Assignment) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut coeff = *c;
            let mut rest = Vec::new();
            for v in m {
                match a.get(v) {
                    Some(x) => coeff *= x,
                    None => rest.push(v.clone()),
                }
            }
            out.insert(rest, coeff);
        }
        out
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut nm: Vec<String> = m
                .iter()
                .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
                .collect();
            nm.sort();
            out.insert(nm, *c);
        }
        out
    }

    /// Minimum and maximum over the box given by `bounds`; `None` means
    /// unbounded in that direction. Variables missing from `bounds` are
    /// treated as nonnegative and unbounded.
    pub fn range_over(&self, bounds: &BTreeMap<String, ParamBounds>) -> (Option<i64>, Option<i64>) {
        let vars = self.vars();
        let finite: Vec<(String, i64, i64)> = vars
            .iter()
            .filter_map(|v| {
                bounds
                    .get(v)
                    .and_then(|b| b.max.map(|mx| (v.clone(), b.min, mx)))
            })
            .collect();
        let lower_of = |v: &str| bounds.get(v).map(|b| b.min).unwrap_or(0);
        let mut lo: Option<i64> = None;
        let mut hi: Option<i64> = None;
        let mut lo_unbounded = false;
        let mut hi_unbounded = false;
        let mut first = true;
        for_each_assignment(&finite, &mut |a| {
            let r = self.partial_eval(a);
            // Remaining variables are unbounded above and nonnegative.
            let mut any_pos = false;
            let mut any_neg = false;
            let mut at_min = Assignment::new();
            for v in r.vars() {
                at_min.insert(v.clone(), lower_of(&v));
            }
            for (m, c) in &r.terms {
                if !m.is_empty() {
                    if *c > 0 {
                        any_pos = true;
                    } else {
                        any_neg = true;
                    }
                }
            }
            let base = r.eval(&at_min).expect("all variables assigned");
            if any_neg {
                lo_unbounded = true;
            }
            if any_pos {
                hi_unbounded = true;
            }
            if first {
                lo = Some(base);
                hi = Some(base);
                first = false;
            } else {
                lo = lo.map(|x| x.min(base));
                hi = hi.map(|x| x.max(base));
            }
        });
        (
            if lo_unbounded { None } else { lo },
            if hi_unbounded { None } else { hi },
        )
    }

    pub fn parse(s: &str) -> Result<Poly, ExprError> {
        let mut p = Parser {
            src: s,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let e = p.sum()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

/// Calls `f` on every assignment in the finite box.
pub fn for_each_assignment(vars: &[(String, i64, i64)], f: &mut dyn FnMut(&Assignment)) {
    fn rec(
        vars: &[(String, i64, i64)],
        i: usize,
        cur: &mut Assignment,
        f: &mut dyn FnMut(&Assignment),
    ) {
        if i == vars.len() {
            f(cur);
            return;
        }
        let (name, lo, hi) = &vars[i];
        for v in *lo..=*hi {
            cur.insert(name.clone(), v);
            rec(vars, i + 1, cur, f);
        }
        cur.remove(name);
    }
    rec(vars, 0, &mut Assignment::new(), f);
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Parse(self.src.to_string(), format!("{} at {}", msg, self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Poly, ExprError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.product()?
            }
            Some('+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.product()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.product()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc * self.atom()?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let n = s.parse::<i64>().map_err(|_| self.err("integer overflow"))?;
                Ok(Poly::constant(n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(Poly::var(&s))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, o: Poly) -> Poly {
        for (m, c) in o.terms {
            self.insert(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self + (-o)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m: Vec<String> = m1.iter().chain(m2.iter()).cloned().collect();
                m.sort();
                out.insert(m, c1 * c2);
            }
        }
        out
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Higher-degree terms first, constant last.
        let mut terms: Vec<(&Monomial, &i64)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let c = *c;
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            }
            let a = c.abs();
            if m.is_empty() {
                write!(f, "{}", a)?;
            } else {
                if a != 1 {
                    write!(f, "{}*", a)?;
                }
                write!(f, "{}", m.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(pairs: &[(&str, i64)]) -> Assignment {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn parse_and_eval() {
        let p = Poly::parse("l*k+m+4").unwrap();
        assert_eq!(p.eval(&a(&[("l", 1), ("m", 1), ("k", 1)])), Ok(6));
        assert_eq!(Poly::parse("4-z").unwrap().eval(&a(&[("z", 3)])), Ok(1));
        assert_eq!(Poly::parse("m*(l-1)").unwrap().eval(&a(&[("m", 1), ("l", 0)])), Ok(-1));
        assert_eq!(Poly::parse(" 7 ").unwrap().as_constant(), Some(7));
        assert_eq!(Poly::parse("-3").unwrap().as_constant(), Some(-3));
        assert!(Poly::parse("l+").is_err());
        assert!(Poly::parse("(l").is_err());
        assert!(Poly::parse("l k").is_ok()); // whitespace is dropped: a single name `lk`
    }

    #[test]
    fn canonical_display() {
        assert_eq!(Poly::parse("8+k").unwrap().to_string(), "k+8");
        assert_eq!(Poly::parse("4+m+k*l").unwrap().to_string(), "k*l+m+4");
        assert_eq!(Poly::parse("l-l").unwrap().to_string(), "0");
        assert_eq!(Poly::parse("2*t_1-3").unwrap().to_string(), "2*t_1-3");
    }

    #[test]
    fn ranges() {
        let mut b = BTreeMap::new();
        b.insert("l".to_string(), ParamBounds::new(0, Some(2)));
        b.insert("m".to_string(), ParamBounds::new(0, Some(1)));
        let p = Poly::parse("m*(l-1)").unwrap();
        assert_eq!(p.range_over(&b), (Some(-1), Some(1)));
        let t = Poly::parse("t+3").unwrap();
        assert_eq!(t.range_over(&b), (Some(3), None));
        let u = Poly::parse("3-t").unwrap();
        assert_eq!(u.range_over(&b), (None, Some(3)));
    }

    #[test]
    fn rename_and_partial() {
        let p = Poly::parse("l*k+m+4").unwrap();
        let q = p.partial_eval(&a(&[("l", 0)]));
        assert_eq!(q.to_string(), "m+4");
        let mut map = BTreeMap::new();
        map.insert("m".to_string(), "x".to_string());
        assert_eq!(q.rename(&map).to_string(), "x+4");
        assert_eq!(p.vars_in_order(), vec!["k", "l", "m"]);
    }
}
