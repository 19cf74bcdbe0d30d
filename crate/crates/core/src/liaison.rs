//! Linkage of space curves by complete intersections of type `(s, t)`.
//!
//! Ideal-sheaf cohomology is never computed here: the counts come from the
//! caller and this module does the bookkeeping.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curves::CurveClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiaisonError {
    #[error("surface degrees must be positive, got ({0}, {1})")]
    BadDegrees(i64, i64),
    #[error("residual degree {0} is not positive")]
    EmptyResidual(i64),
    #[error("residual genus would be {0}/2")]
    NonIntegralGenus(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSpec {
    pub curve: CurveClass,
    pub s: i64,
    pub t: i64,
}

impl LinkSpec {
    pub fn new(curve: CurveClass, s: i64, t: i64) -> Result<Self, LiaisonError> {
        if s < 1 || t < 1 {
            return Err(LiaisonError::BadDegrees(s, t));
        }
        Ok(LinkSpec { curve, s, t })
    }
}

/// Degree and genus of the residual curve.
pub fn linked_curve(l: &LinkSpec) -> Result<CurveClass, LiaisonError> {
    let (d, g) = (l.curve.degree, l.curve.genus);
    let d2 = l.s * l.t - d;
    if d2 < 1 {
        return Err(LiaisonError::EmptyResidual(d2));
    }
    let twice = (d - d2) * (l.s + l.t - 4);
    if twice % 2 != 0 {
        return Err(LiaisonError::NonIntegralGenus(2 * g - twice));
    }
    Ok(CurveClass {
        degree: d2,
        genus: g - twice / 2,
    })
}

/// `h^1(I_C(n)) = h^1(I_G(s + t - n - 4))`; returns the twist on the
/// linked side.
pub fn h1_transfer(l: &LinkSpec, n: i64) -> i64 {
    l.s + l.t - n - 4
}

/// `h^0(I_C(n)) = h^0(I_X(n)) + h^1(O_G(s + t - n - 4))`.
pub fn h0_transfer(_l: &LinkSpec, _n: i64, h0_ix: u64, h1_o_gamma: u64) -> u64 {
    h0_ix + h1_o_gamma
}

/// Dimension of the family of curves linked to a family of dimension
/// `dim_h`: `dim_h + h0(I_C2(s)) + h0(I_C2(t)) - h0(I_C(s)) - h0(I_C(t))`.
pub fn linked_family_dim(dim_h: i64, h0_c_s: u64, h0_c_t: u64, h0_c2_s: u64, h0_c2_t: u64) -> i64 {
    dim_h + h0_c2_s as i64 + h0_c2_t as i64 - h0_c_s as i64 - h0_c_t as i64
}

/// `h^0(I_X(n))` for a complete intersection of surfaces of degrees `s, t`.
pub fn complete_intersection_h0(s: i64, t: i64, n: i64) -> u64 {
    fn cubic(m: i64) -> i64 {
        if m < 0 {
            0
        } else {
            (m + 1) * (m + 2) * (m + 3) / 6
        }
    }
    let v = cubic(n - s) + cubic(n - t) - cubic(n - s - t);
    v as u64
}
