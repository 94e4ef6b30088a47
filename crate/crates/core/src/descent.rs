//! The covering map from `Z^3 = g(X, Y)` to `E_k : Y^2 = X^3 + k`, with
//! `k = -disc(g)/108`.
//!
//! A point `(x, y, z)` with `z != 0` maps to `(H(x,y)/(3z)^2, G(x,y)/(2(3z)^3))`.
//! The syzygy `4H^3 = G^2 + 27 disc g^2` puts the image on `E_k`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::BinaryCubicForm;
use crate::poly::{rat, rational_cbrt, Rat};

/// Affine point on `Y^2 = X^3 + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    pub x: Rat,
    pub y: Rat,
}

impl CurvePoint {
    pub fn new(x: Rat, y: Rat) -> Self {
        CurvePoint { x, y }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn curve_k(g: &BinaryCubicForm) -> Result<Rat> {
    Ok(-g.nonsingular_discriminant()? / rat(108))
}

pub fn is_on_curve(k: &Rat, p: &CurvePoint) -> bool {
    &p.y * &p.y == &p.x * &p.x * &p.x + k
}

/// Image of `(x, y, z)` on `E_k`. Requires `z != 0` and `z^3 = g(x, y)`.
pub fn cover_point(g: &BinaryCubicForm, x: &Rat, y: &Rat, z: &Rat) -> Result<CurvePoint> {
    g.nonsingular_discriminant()?;
    if z.is_zero() {
        return Err(Error::CoverAtInfinity);
    }
    if z * z * z != g.eval(x, y) {
        return Err(Error::NotOnCover);
    }
    let three_z = rat(3) * z;
    let h = g.hessian().eval(x, y);
    let cov = g.cubic_covariant().eval(x, y);
    Ok(CurvePoint {
        x: h / (&three_z * &three_z),
        y: cov / (rat(2) * &three_z * &three_z * &three_z),
    })
}

/// The rational `z` with `z^3 = g(x, y)`, if `g(x, y)` is a nonzero cube.
pub fn cube_root_of_value(g: &BinaryCubicForm, x: &Rat, y: &Rat) -> Option<Rat> {
    let v = g.eval(x, y);
    if v.is_zero() {
        return None;
    }
    rational_cbrt(&v)
}

/// Every `(x, y, z)` with integers `|x|, |y| <= bound`, `g(x, y) = z^3 != 0`,
/// in lexicographic order of `(x, y)`.
pub fn cube_points(g: &BinaryCubicForm, bound: i64) -> Vec<(Rat, Rat, Rat)> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let (x, y) = (rat(x), rat(y));
            if let Some(z) = cube_root_of_value(g, &x, &y) {
                out.push((x, y, z));
            }
        }
    }
    out
}
