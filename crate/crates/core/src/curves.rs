//! Curve side of the Serre correspondence.
//!
//! A section of `F(k)` vanishing in codimension 2 gives a curve `C` with
//! `0 -> O -> F(k) -> I_C(2k + c1) -> 0`. Everything here is numerics of
//! such curves; which case a concrete curve falls into is the caller's call.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectrum::check_c1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("genus would be {0}/2; the inputs have inconsistent parity")]
    NonIntegralGenus(i64),
    #[error("h0(omega_C({n})) would be {value}; h0(O_C(-{n})) cannot vanish")]
    NegativeSections { n: i64, value: i64 },
    #[error("{0}")]
    Unsupported(String),
}

/// Degree and arithmetic genus of a locally Cohen-Macaulay space curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub degree: i64,
    pub genus: i64,
}

impl CurveClass {
    pub fn new(degree: i64, genus: i64) -> Result<Self, CurveError> {
        if degree < 1 {
            return Err(CurveError::Invalid(format!("degree {} < 1", degree)));
        }
        Ok(CurveClass { degree, genus })
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(d={}, g={})", self.degree, self.genus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SerreCurve {
    pub curve: CurveClass,
    /// Set when `c2 != 4`; the degree and genus law is only anchored there.
    pub extrapolated: bool,
}

/// Zero locus of a section of `F(k)`: degree `c2 + c1 k + k^2` and
/// `2 p_a - 2 = c3 - degree (4 - 2k - c1)`.
pub fn serre_curve(c1: i64, c2: i64, c3: i64, k: i64) -> Result<SerreCurve, CurveError> {
    check_c1(c1).map_err(|e| CurveError::Invalid(e.to_string()))?;
    if c2 < 1 {
        return Err(CurveError::Invalid(format!("c2 = {} < 1", c2)));
    }
    if c3 % 2 != 0 {
        return Err(CurveError::Invalid(format!("c3 = {} is odd", c3)));
    }
    if k < 1 {
        return Err(CurveError::Invalid(format!("k = {} < 1", k)));
    }
    let degree = c2 + c1 * k + k * k;
    let twice = c3 - degree * (4 - 2 * k - c1) + 2;
    if twice % 2 != 0 {
        return Err(CurveError::NonIntegralGenus(twice));
    }
    Ok(SerreCurve {
        curve: CurveClass::new(degree, twice / 2)?,
        extrapolated: c2 != 4,
    })
}

/// `chi(O_C(n)) = n d + 1 - g`.
pub fn curve_chi(c: CurveClass, n: i64) -> i64 {
    n * c.degree + 1 - c.genus
}

/// `h0(omega_C(n)) = h1(O_C(-n)) = n d + g - 1`, assuming `h0(O_C(-n)) = 0`.
pub fn omega_sections(c: CurveClass, n: i64) -> Result<u64, CurveError> {
    if n < 1 {
        return Err(CurveError::Invalid(format!("twist {} < 1", n)));
    }
    let value = -curve_chi(c, -n);
    if value < 0 {
        return Err(CurveError::NegativeSections { n, value });
    }
    Ok(value as u64)
}

/// Quintic curves lying on a quadric, by the shape of their Rao function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuinticCase {
    /// Divisor of type (0,5) on a smooth quadric.
    Type05,
    /// Divisor of type (1,4).
    Type14,
    /// Subextremal, with its arithmetic genus.
    Subextremal(i64),
    Extremal,
}

/// `h^1(I_C(t))` for a quintic on a quadric.
pub fn quintic_h1_profile(case: QuinticCase, t: i64) -> Result<u64, CurveError> {
    let v = match case {
        QuinticCase::Type05 => match t {
            0 | 3 => 4,
            1 | 2 => 6,
            _ => 0,
        },
        QuinticCase::Type14 => match t {
            1 | 2 => 2,
            _ => 0,
        },
        QuinticCase::Subextremal(g) => {
            if g > 2 {
                return Err(CurveError::Invalid(format!("subextremal quintic of genus {} > 2", g)));
            }
            match t {
                1 | 2 => 2 - g,
                t if t <= 0 => (1 - g + t).max(0),
                t => (4 - g - t).max(0),
            }
        }
        QuinticCase::Extremal => {
            return Err(CurveError::Unsupported(
                "no h1 profile is given for extremal quintics".into(),
            ))
        }
    };
    Ok(v as u64)
}

/// Sextic curves on a cubic surface, split by what the cubics through them
/// look like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SexticCase {
    /// Linked to a cubic curve by two cubic surfaces.
    DirectLink,
    /// The cubics share a plane; the residual in that plane has degree `d`
    /// and meets the rest in `len_z` points. `k <= -1` is needed for `d = 4`.
    PlanarResidual { d: i64, len_z: i64, k: Option<i64> },
    QuinticOnQuadric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SexticInvariants {
    pub linked: Option<CurveClass>,
    pub genus: Option<i64>,
    /// `h0(I_C(3))`
    pub h0_cubics: Option<u64>,
}

/// `g` is the genus of the sextic; only the direct link uses it.
pub fn sextic_case_invariants(case: SexticCase, g: i64) -> Result<SexticInvariants, CurveError> {
    let out = match case {
        SexticCase::DirectLink => SexticInvariants {
            linked: Some(CurveClass::new(3, g - 3)?),
            ..Default::default()
        },
        SexticCase::PlanarResidual { d, len_z, k } => {
            if len_z < 1 {
                return Err(CurveError::Invalid(format!("len Z = {} < 1", len_z)));
            }
            if d != 4 && k.is_some() {
                return Err(CurveError::Invalid("k is only used when d = 4".into()));
            }
            let (genus, h0) = match d {
                2 => {
                    if len_z < 3 {
                        return Err(CurveError::Invalid(format!(
                            "d = 2 needs len Z >= 3 for genus <= 1, got {}",
                            len_z
                        )));
                    }
                    (4 - len_z, 2)
                }
                3 => (3 - len_z, 3),
                4 => {
                    let k = k.ok_or_else(|| CurveError::Invalid("d = 4 needs k".into()))?;
                    if k > -1 {
                        return Err(CurveError::Invalid(format!("k = {} > -1", k)));
                    }
                    (4 + k - len_z, if k == -1 { 4 } else { 3 })
                }
                _ => return Err(CurveError::Invalid(format!("planar residual of degree {}", d))),
            };
            SexticInvariants {
                linked: None,
                genus: Some(genus),
                h0_cubics: Some(h0),
            }
        }
        SexticCase::QuinticOnQuadric => SexticInvariants {
            h0_cubics: Some(2),
            ..Default::default()
        },
    };
    Ok(out)
}

/// Genus of an extremal curve of degree `d` whose planar part of degree
/// `d - 1` meets the residual line in `len_z` points.
pub fn extremal_genus(d: i64, len_z: i64) -> Result<i64, CurveError> {
    if d < 3 || len_z < 1 {
        return Err(CurveError::Invalid(format!("d = {}, len Z = {}", d, len_z)));
    }
    Ok((d - 2) * (d - 3) / 2 - len_z)
}

/// `h^1(F(t))` when `F(1)` has a section vanishing on an extremal curve.
pub fn extremal_sheaf_h1(c1: i64, d: i64, len_z: i64, t: i64) -> Result<u64, CurveError> {
    check_c1(c1).map_err(|e| CurveError::Invalid(e.to_string()))?;
    if len_z < 1 {
        return Err(CurveError::Invalid(format!("len Z = {} < 1", len_z)));
    }
    let v = if -1 - c1 <= t && t <= d - 3 - c1 {
        len_z
    } else if t == -2 - c1 || t == d - 2 - c1 {
        len_z - 1
    } else {
        0
    };
    Ok(v as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalConstraints {
    /// The twist carrying the section.
    pub k: i64,
    pub len_z_allowed: Vec<i64>,
}

pub fn extremal_constraints(c1: i64) -> Result<ExtremalConstraints, CurveError> {
    check_c1(c1).map_err(|e| CurveError::Invalid(e.to_string()))?;
    Ok(ExtremalConstraints {
        k: 1,
        len_z_allowed: if c1 == 0 { vec![1] } else { vec![1, 2] },
    })
}

/// `ext^2(F, F)` for the two extremal cases that occur; either exact or an
/// upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub value: Option<u64>,
    pub upper_bound: Option<u64>,
}

pub fn extremal_obstruction(
    c1: i64,
    d: i64,
    len_z: i64,
    xi_vanishes_on_z: bool,
) -> Result<Obstruction, CurveError> {
    if !matches!((c1, d), (0, 5) | (-1, 4)) {
        return Err(CurveError::Unsupported(format!("(c1, d) = ({}, {})", c1, d)));
    }
    if !extremal_constraints(c1)?.len_z_allowed.contains(&len_z) {
        return Err(CurveError::Invalid(format!("len Z = {} with c1 = {}", len_z, c1)));
    }
    if xi_vanishes_on_z {
        if c1 == 0 || len_z != 1 {
            return Err(CurveError::Invalid(
                "the section can vanish on Z only for c1 = -1 and len Z = 1".into(),
            ));
        }
        return Ok(Obstruction {
            value: None,
            upper_bound: Some(1),
        });
    }
    let v = if c1 == 0 { 1 } else { len_z - 1 };
    Ok(Obstruction {
        value: Some(v as u64),
        upper_bound: None,
    })
}
