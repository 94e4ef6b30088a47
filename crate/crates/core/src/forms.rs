//! Binary cubic forms, their invariants and covariants, and the twisted
//! `GL(2)` action.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{binary_eval, binary_mul, rat, Rat};

/// The binary cubic `aX^3 + bX^2Y + cXY^2 + dY^3` with rational coefficients.
///
/// Any coefficients are accepted; operations that need a nonzero
/// discriminant check it on entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCubicForm {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

/// The binary quadratic `q0 X^2 + q1 XY + q2 Y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    pub q0: Rat,
    pub q1: Rat,
    pub q2: Rat,
}

/// The 2x2 matrix `(r s; t u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub r: Rat,
    pub s: Rat,
    pub t: Rat,
    pub u: Rat,
}

/// `coeffs` of a binary form with `X -> rX + tY`, `Y -> sX + uY` substituted.
fn substitute(coeffs: &[Rat], m: &Mat2) -> Vec<Rat> {
    let deg = coeffs.len() - 1;
    let x_img = [m.r.clone(), m.t.clone()];
    let y_img = [m.s.clone(), m.u.clone()];
    let mut x_pows = vec![vec![Rat::one()]];
    let mut y_pows = vec![vec![Rat::one()]];
    for k in 1..=deg {
        x_pows.push(binary_mul(&x_pows[k - 1], &x_img));
        y_pows.push(binary_mul(&y_pows[k - 1], &y_img));
    }
    let mut out = vec![Rat::zero(); deg + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, term) in binary_mul(&x_pows[deg - i], &y_pows[i]).into_iter().enumerate() {
            out[k] += c * term;
        }
    }
    out
}

impl BinaryCubicForm {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        BinaryCubicForm { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        BinaryCubicForm::new(rat(a), rat(b), rat(c), rat(d))
    }

    fn from_slice(c: &[Rat]) -> Self {
        BinaryCubicForm::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    /// `[a, b, c, d]`
    pub fn coeffs(&self) -> [Rat; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        binary_eval(&self.coeffs(), x, y)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        BinaryCubicForm::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    /// `g(X, -Y)`, the transform by `diag(-1, 1)`.
    pub fn flip_y(&self) -> Self {
        BinaryCubicForm::new(
            self.a.clone(),
            -&self.b,
            self.c.clone(),
            -&self.d,
        )
    }

    /// `b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd`
    pub fn discriminant(&self) -> Rat {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        b * b * c * c - rat(4) * a * c * c * c - rat(4) * b * b * b * d - rat(27) * a * a * d * d
            + rat(18) * a * b * c * d
    }

    /// The discriminant, or an error if it vanishes.
    pub fn nonsingular_discriminant(&self) -> Result<Rat> {
        let disc = self.discriminant();
        if disc.is_zero() {
            Err(Error::ZeroDiscriminant)
        } else {
            Ok(disc)
        }
    }

    /// Seminvariants `(P, U) = (b^2 - 3ac, 2b^3 + 27a^2d - 9abc)`.
    pub fn seminvariants(&self) -> (Rat, Rat) {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let p = b * b - rat(3) * a * c;
        let u = rat(2) * b * b * b + rat(27) * a * a * d - rat(9) * a * b * c;
        (p, u)
    }

    /// The Hessian covariant; its discriminant is `-3 disc(g)`.
    pub fn hessian(&self) -> QuadraticForm {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        QuadraticForm {
            q0: b * b - rat(3) * a * c,
            q1: b * c - rat(9) * a * d,
            q2: c * c - rat(3) * b * d,
        }
    }

    /// The cubic covariant `G`, with leading coefficient `U`.
    pub fn cubic_covariant(&self) -> BinaryCubicForm {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        BinaryCubicForm {
            a: rat(2) * b * b * b + rat(27) * a * a * d - rat(9) * a * b * c,
            b: rat(3) * (b * b * c + rat(9) * a * b * d - rat(6) * a * c * c),
            c: rat(-3) * (b * c * c + rat(9) * a * c * d - rat(6) * b * b * d),
            d: -(rat(2) * c * c * c + rat(27) * a * d * d - rat(9) * b * c * d),
        }
    }

    /// `g(rX + tY, sX + uY)` without the determinant twist.
    pub fn substitute(&self, m: &Mat2) -> BinaryCubicForm {
        BinaryCubicForm::from_slice(&substitute(&self.coeffs(), m))
    }

    /// The twisted action `g^M = det(M)^-1 g(rX + tY, sX + uY)`.
    pub fn act(&self, m: &Mat2) -> Result<BinaryCubicForm> {
        let det = m.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute(m).scale(&det.recip()))
    }

    /// Checks `4H^3 = G^2 + 27 disc g^2` coefficient by coefficient.
    pub fn syzygy_holds(&self) -> bool {
        let h = self.hessian().coeffs();
        let g = self.coeffs();
        let cov = self.cubic_covariant().coeffs();
        let h3 = binary_mul(&binary_mul(&h, &h), &h);
        let g2 = binary_mul(&g, &g);
        let cov2 = binary_mul(&cov, &cov);
        let disc27 = rat(27) * self.discriminant();
        (0..7).all(|k| rat(4) * &h3[k] == &cov2[k] + &disc27 * &g2[k])
    }
}

fn fmt_binary(f: &mut fmt::Formatter<'_>, coeffs: &[Rat]) -> fmt::Result {
    let deg = coeffs.len() - 1;
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let monomial = [("X", deg - i), ("Y", i)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*");
        let abs = c.abs();
        match (first, c.is_negative()) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        if abs.is_one() && !monomial.is_empty() {
            write!(f, "{monomial}")?;
        } else if monomial.is_empty() {
            write!(f, "{abs}")?;
        } else {
            write!(f, "{abs}*{monomial}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for BinaryCubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_binary(f, &self.coeffs())
    }
}

impl QuadraticForm {
    pub fn new(q0: Rat, q1: Rat, q2: Rat) -> Self {
        QuadraticForm { q0, q1, q2 }
    }

    pub fn from_ints(q0: i64, q1: i64, q2: i64) -> Self {
        QuadraticForm::new(rat(q0), rat(q1), rat(q2))
    }

    pub fn coeffs(&self) -> [Rat; 3] {
        [self.q0.clone(), self.q1.clone(), self.q2.clone()]
    }

    pub fn discriminant(&self) -> Rat {
        &self.q1 * &self.q1 - rat(4) * &self.q0 * &self.q2
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        binary_eval(&self.coeffs(), x, y)
    }

    /// `H(rX + tY, sX + uY)` without the determinant twist.
    pub fn substitute(&self, m: &Mat2) -> QuadraticForm {
        let c = substitute(&self.coeffs(), m);
        QuadraticForm::new(c[0].clone(), c[1].clone(), c[2].clone())
    }

    /// Twisted action `det(M)^-1 H(rX + tY, sX + uY)`.
    pub fn act(&self, m: &Mat2) -> Result<QuadraticForm> {
        let det = m.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv = det.recip();
        let c = substitute(&self.coeffs(), m);
        Ok(QuadraticForm::new(&c[0] * &inv, &c[1] * &inv, &c[2] * &inv))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_binary(f, &self.coeffs())
    }
}

impl Mat2 {
    pub fn new(r: Rat, s: Rat, t: Rat, u: Rat) -> Self {
        Mat2 { r, s, t, u }
    }

    pub fn from_ints(r: i64, s: i64, t: i64, u: i64) -> Self {
        Mat2::new(rat(r), rat(s), rat(t), rat(u))
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    pub fn diag(x: Rat, y: Rat) -> Self {
        Mat2::new(x, Rat::zero(), Rat::zero(), y)
    }

    pub fn det(&self) -> Rat {
        &self.r * &self.u - &self.s * &self.t
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.r * &o.r + &self.s * &o.t,
            &self.r * &o.s + &self.s * &o.u,
            &self.t * &o.r + &self.u * &o.t,
            &self.t * &o.s + &self.u * &o.u,
        )
    }

    pub fn scale(&self, k: &Rat) -> Mat2 {
        Mat2::new(&self.r * k, &self.s * k, &self.t * k, &self.u * k)
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(&-Rat::one())
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv = det.recip();
        Ok(Mat2::new(
            &self.u * &inv,
            -&self.s * &inv,
            -&self.t * &inv,
            &self.r * &inv,
        ))
    }

    pub fn entries(&self) -> [&Rat; 4] {
        [&self.r, &self.s, &self.t, &self.u]
    }

    pub fn is_integral(&self) -> bool {
        self.entries().iter().all(|e| e.is_integer())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.r, self.s, self.t, self.u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    #[test]
    fn discriminant_examples() {
        assert_eq!(BinaryCubicForm::from_ints(1, 0, 0, -16).discriminant(), rat(-6912));
        assert_eq!(BinaryCubicForm::from_ints(1, -6, 11, -6).discriminant(), rat(4));
        assert_eq!(BinaryCubicForm::from_ints(0, 1, 1, 0).discriminant(), rat(1));
    }

    #[test]
    fn seminvariant_examples() {
        assert_eq!(
            BinaryCubicForm::from_ints(1, -6, 11, -6).seminvariants(),
            (rat(3), rat(0))
        );
        assert_eq!(
            BinaryCubicForm::from_ints(1, 0, 0, -16).seminvariants(),
            (rat(0), rat(-432))
        );
        assert_eq!(
            BinaryCubicForm::from_ints(0, 1, 1, 0).seminvariants(),
            (rat(1), rat(2))
        );
    }

    #[test]
    fn hessian_examples() {
        let cases = [
            ((1, 0, 0, -16), (0, 144, 0)),
            ((1, -6, 11, -6), (3, -12, 13)),
            ((0, 1, 1, 0), (1, 1, 1)),
        ];
        for ((a, b, c, d), (h0, h1, h2)) in cases {
            let g = BinaryCubicForm::from_ints(a, b, c, d);
            let h = g.hessian();
            assert_eq!(h, QuadraticForm::from_ints(h0, h1, h2));
            assert_eq!(h.discriminant(), rat(-3) * g.discriminant());
        }
    }

    #[test]
    fn cubic_covariant_examples() {
        let cases = [
            ((1, -6, 11, -6), (0, -18, 72, -70)),
            ((1, 0, 0, 1), (27, 0, 0, -27)),
            ((1, 0, 0, -16), (-432, 0, 0, -6912)),
        ];
        for ((a, b, c, d), expected) in cases {
            let g = BinaryCubicForm::from_ints(a, b, c, d);
            let (e0, e1, e2, e3) = expected;
            assert_eq!(g.cubic_covariant(), BinaryCubicForm::from_ints(e0, e1, e2, e3));
        }
    }

    #[test]
    fn covariant_of_example_factors_as_stated() {
        // -2Y(3X - 7Y)(3X - 5Y)
        let lin = |p: i64, q: i64| vec![rat(p), rat(q)];
        let prod = binary_mul(
            &binary_mul(&[rat(0), rat(-2)], &lin(3, -7)),
            &lin(3, -5),
        );
        let g = BinaryCubicForm::from_ints(1, -6, 11, -6);
        assert_eq!(g.cubic_covariant().coeffs().to_vec(), prod);
    }

    #[test]
    fn action_examples() {
        let g = BinaryCubicForm::from_ints(1, 0, 0, -16);
        assert_eq!(g.act(&Mat2::identity()).unwrap(), g);
        let m = Mat2::diag(rat(2), frac(1, 2));
        assert_eq!(g.act(&m).unwrap(), BinaryCubicForm::from_ints(8, 0, 0, -2));
        let minus = Mat2::from_ints(-1, 0, 0, -1);
        assert_eq!(g.act(&minus).unwrap(), g.scale(&rat(-1)));
        assert_eq!(g.act(&Mat2::from_ints(1, 2, 2, 4)), Err(Error::SingularMatrix));
        assert_eq!(g.act(&Mat2::diag(rat(-1), rat(1))).unwrap(), g.flip_y());
    }

    #[test]
    fn syzygy_examples() {
        assert!(BinaryCubicForm::from_ints(1, -6, 11, -6).syzygy_holds());
        assert!(BinaryCubicForm::from_ints(1, 0, 0, -16).syzygy_holds());
        assert!(BinaryCubicForm::new(frac(2, 3), frac(-1, 5), rat(7), frac(9, 2)).syzygy_holds());
    }

    #[test]
    fn display() {
        let g = BinaryCubicForm::new(rat(1), rat(-6), frac(11, 2), rat(0));
        assert_eq!(g.to_string(), "X^3 - 6*X^2*Y + 11/2*X*Y^2");
        assert_eq!(Mat2::diag(rat(2), frac(1, 2)).to_string(), "[[2,0],[0,1/2]]");
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat2::new(frac(-5, 2), frac(-3, 2), frac(13, 2), frac(7, 2));
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat2::identity());
        assert!(Mat2::from_ints(1, 1, 1, 1).inverse().is_err());
    }
}
