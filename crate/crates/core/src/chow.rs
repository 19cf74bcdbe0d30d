//! Chern characters on projective 3-space.
//!
//! Classes live in `Q[h]/(h^4)` with exact rational coefficients. Sheaves are
//! described by their rank and integer Chern classes; everything else goes
//! through the character, where twisting is multiplication by `exp(nh)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar.
pub type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("character {0} has no integral Chern classes")]
    NonIntegral(Box<ChowClass>),
    #[error("Euler characteristic {0} is not an integer")]
    NonIntegralEuler(Q),
    #[error("virtual rank {0} is negative")]
    NegativeRank(i128),
}

/// A class `coeff[0] + coeff[1] h + coeff[2] h^2 + coeff[3] h^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChowClass {
    pub coeff: [Q; 4],
}

impl ChowClass {
    pub fn new(coeff: [Q; 4]) -> Self {
        ChowClass { coeff }
    }

    pub fn zero() -> Self {
        ChowClass { coeff: [Q::zero(); 4] }
    }

    pub fn from_int(n: i128) -> Self {
        let mut c = Self::zero();
        c.coeff[0] = Q::from_integer(n);
        c
    }

    /// `exp(n h)` truncated at `h^4`.
    pub fn exp_h(n: i64) -> Self {
        let n = Q::from_integer(n as i128);
        ChowClass {
            coeff: [
                Q::one(),
                n,
                n * n / Q::from_integer(2),
                n * n * n / Q::from_integer(6),
            ],
        }
    }

    /// Todd class of projective 3-space.
    pub fn todd() -> Self {
        ChowClass {
            coeff: [
                Q::one(),
                Q::from_integer(2),
                Q::new(11, 6),
                Q::one(),
            ],
        }
    }

    /// Character of the tangent bundle, `4 exp(h) - 1`.
    pub fn tangent() -> Self {
        Self::exp_h(1).scale(Q::from_integer(4)) - Self::from_int(1)
    }

    pub fn scale(&self, q: Q) -> Self {
        ChowClass {
            coeff: self.coeff.map(|c| c * q),
        }
    }

    /// Degree (coefficient of `h^3`), i.e. the integral over the space.
    pub fn degree(&self) -> Q {
        self.coeff[3]
    }
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(self, o: ChowClass) -> ChowClass {
        let mut c = self.coeff;
        for (a, b) in c.iter_mut().zip(o.coeff) {
            *a += b;
        }
        ChowClass { coeff: c }
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;
    fn sub(self, o: ChowClass) -> ChowClass {
        self + (-o)
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass {
            coeff: self.coeff.map(|c| -c),
        }
    }
}

impl Mul for ChowClass {
    type Output = ChowClass;
    fn mul(self, o: ChowClass) -> ChowClass {
        let mut c = [Q::zero(); 4];
        for i in 0..4 {
            for j in 0..4 - i {
                c[i + j] += self.coeff[i] * o.coeff[j];
            }
        }
        ChowClass { coeff: c }
    }
}

impl std::fmt::Display for ChowClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeff.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "({})", a)?;
                    }
                    match i {
                        1 => write!(f, "h")?,
                        _ => write!(f, "h^{}", i)?,
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rank and Chern classes of a coherent sheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernTriple {
    pub rank: u32,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernTriple {
    pub fn new(rank: u32, c1: i64, c2: i64, c3: i64) -> Self {
        ChernTriple { rank, c1, c2, c3 }
    }

    /// A normalized rank-2 sheaf.
    pub fn rank2(c1: i64, c2: i64, c3: i64) -> Self {
        Self::new(2, c1, c2, c3)
    }
}

impl std::fmt::Display for ChernTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.rank, self.c1, self.c2, self.c3)
    }
}

fn q(n: i64) -> Q {
    Q::from_integer(n as i128)
}

pub fn chern_character(t: &ChernTriple) -> ChowClass {
    let (c1, c2, c3) = (q(t.c1), q(t.c2), q(t.c3));
    ChowClass {
        coeff: [
            q(t.rank as i64),
            c1,
            (c1 * c1 - q(2) * c2) / q(2),
            (c1 * c1 * c1 - q(3) * c1 * c2 + q(3) * c3) / q(6),
        ],
    }
}

fn integral(x: Q) -> Option<i64> {
    if x.is_integer() {
        i64::try_from(x.to_integer()).ok()
    } else {
        None
    }
}

/// Inverse of [`chern_character`]; fails unless every class is integral.
pub fn chern_triple_of(ch: &ChowClass) -> Result<ChernTriple, ChowError> {
    let bad = || ChowError::NonIntegral(Box::new(*ch));
    let rank = integral(ch.coeff[0]).ok_or_else(bad)?;
    let rank = u32::try_from(rank).map_err(|_| bad())?;
    let c1 = integral(ch.coeff[1]).ok_or_else(bad)?;
    let c2 = integral((q(c1) * q(c1) - q(2) * ch.coeff[2]) / q(2)).ok_or_else(bad)?;
    let c3 = integral((q(6) * ch.coeff[3] - q(c1) * q(c1) * q(c1) + q(3) * q(c1) * q(c2)) / q(3))
        .ok_or_else(bad)?;
    Ok(ChernTriple { rank, c1, c2, c3 })
}

pub fn twist(t: &ChernTriple, n: i64) -> ChernTriple {
    let ch = chern_character(t) * ChowClass::exp_h(n);
    chern_triple_of(&ch).expect("twist of an integral class is integral")
}

/// `chi(F(l))` by Hirzebruch-Riemann-Roch.
pub fn euler_char(t: &ChernTriple, l: i64) -> Result<i64, ChowError> {
    let x = (chern_character(t) * ChowClass::exp_h(l) * ChowClass::todd()).degree();
    integral(x).ok_or(ChowError::NonIntegralEuler(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BundleKind {
    /// `O(a)`
    Line(i64),
    /// `T(a)`, the tangent bundle twisted by `a`.
    Tangent(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BundleTerm {
    pub kind: BundleKind,
    pub multiplicity: u32,
}

impl BundleTerm {
    pub fn line(a: i64, multiplicity: u32) -> Self {
        BundleTerm {
            kind: BundleKind::Line(a),
            multiplicity,
        }
    }

    pub fn tangent(a: i64, multiplicity: u32) -> Self {
        BundleTerm {
            kind: BundleKind::Tangent(a),
            multiplicity,
        }
    }

    pub fn character(&self) -> ChowClass {
        let base = match self.kind {
            BundleKind::Line(a) => ChowClass::exp_h(a),
            BundleKind::Tangent(a) => ChowClass::tangent() * ChowClass::exp_h(a),
        };
        base.scale(q(self.multiplicity as i64))
    }
}

fn sum_characters(terms: &[BundleTerm]) -> ChowClass {
    terms
        .iter()
        .fold(ChowClass::zero(), |acc, t| acc + t.character())
}

/// Chern classes of `sum(positive) - sum(negative)` in K-theory, e.g. the
/// cokernel of an injective map `negative -> positive`.
pub fn resolution_chern(
    positive: &[BundleTerm],
    negative: &[BundleTerm],
) -> Result<ChernTriple, ChowError> {
    let ch = sum_characters(positive) - sum_characters(negative);
    let rank = ch.coeff[0].to_integer();
    if rank < 0 {
        return Err(ChowError::NegativeRank(rank));
    }
    chern_triple_of(&ch)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_examples() {
        let ch = chern_character(&ChernTriple::rank2(0, 4, 8));
        assert_eq!(ch.coeff, [q(2), q(0), q(-4), q(4)]);
        let ch = chern_character(&ChernTriple::rank2(-1, 4, 12));
        assert_eq!(ch.coeff, [q(2), q(-1), Q::new(-7, 2), Q::new(47, 6)]);
        let ch = chern_character(&ChernTriple::new(1, 0, 0, 0));
        assert_eq!(ch, ChowClass::from_int(1));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(
            twist(&ChernTriple::rank2(0, 4, 8), 1),
            ChernTriple::rank2(2, 5, 8)
        );
        assert_eq!(twist(&ChernTriple::rank2(-1, 4, 6), 2).c2, 6);
        let t = ChernTriple::rank2(-1, 4, 6);
        assert_eq!(twist(&t, 0), t);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_char(&ChernTriple::rank2(0, 4, 8), 2), Ok(8));
        assert_eq!(euler_char(&ChernTriple::rank2(-1, 4, 12), 1), Ok(1));
        let o = ChernTriple::new(1, 0, 0, 0);
        for n in 0..10i64 {
            let binom = (n + 1) * (n + 2) * (n + 3) / 6;
            assert_eq!(euler_char(&o, n), Ok(binom));
        }
    }

    #[test]
    fn odd_c3_has_fractional_euler() {
        assert!(matches!(
            euler_char(&ChernTriple::rank2(0, 4, 7), 0),
            Err(ChowError::NonIntegralEuler(_))
        ));
    }

    #[test]
    fn tangent_bundle_classes() {
        // c(T) = (1+h)^4
        let t = chern_triple_of(&ChowClass::tangent()).unwrap();
        assert_eq!(t, ChernTriple::new(3, 4, 6, 4));
    }

    #[test]
    fn negative_rank_rejected() {
        let r = resolution_chern(&[], &[BundleTerm::line(0, 1)]);
        assert_eq!(r, Err(ChowError::NegativeRank(-1)));
    }

    #[test]
    fn non_integral_character_rejected() {
        let ch = ChowClass::new([q(1), q(0), Q::new(1, 3), q(0)]);
        assert!(chern_triple_of(&ch).is_err());
    }

    #[test]
    fn display() {
        let ch = chern_character(&ChernTriple::rank2(-1, 4, 12));
        assert_eq!(ch.to_string(), "2 - h - (7/2)h^2 + (47/6)h^3");
    }
}
