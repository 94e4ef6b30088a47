//! The resolvent algebra `L = Q[delta]`, `delta^2 = -3 disc`, and the Cardano
//! covariant and invariant of a binary cubic.
//!
//! The Cardano invariant of `g` is the class of any unit value `C(x, y)` of
//! the Cardano covariant `C = (G + 3 delta g) / 2` in `L* / L*^3`. Nothing here
//! extracts cube roots in `L`: triviality and equality of classes are decided
//! through rational roots of auxiliary cubics over `Q`.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::forms::{BinaryCubicForm, Mat2};
use crate::poly::{is_nonzero_square, linear_factors_binary_cubic, rat, rational_roots_cubic, Rat, UniCubic};

/// `Q[delta]` with `delta^2 = -3 disc`, for a fixed nonzero discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResolventAlgebra {
    /// `3 disc`, so that `delta^2 = -three_disc`.
    pub delta_squared_negated: Rat,
    /// Whether `-3 disc` is a rational square (then `L` is `Q x Q`).
    pub split: bool,
}

impl ResolventAlgebra {
    pub fn for_discriminant(disc: &Rat) -> Result<Self> {
        if disc.is_zero() {
            return Err(Error::ZeroDiscriminant);
        }
        let three_disc = rat(3) * disc;
        Ok(ResolventAlgebra {
            split: is_nonzero_square(&-three_disc.clone()),
            delta_squared_negated: three_disc,
        })
    }

    pub fn discriminant(&self) -> Rat {
        &self.delta_squared_negated / rat(3)
    }

    pub fn element(&self, u: Rat, v: Rat) -> ResolventElement {
        ResolventElement {
            u,
            v,
            algebra: self.clone(),
        }
    }

    pub fn one(&self) -> ResolventElement {
        self.element(Rat::one(), Rat::zero())
    }
}

/// `u + v delta` in a [`ResolventAlgebra`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResolventElement {
    pub u: Rat,
    pub v: Rat,
    pub algebra: ResolventAlgebra,
}

impl ResolventElement {
    fn check_same(&self, other: &ResolventElement) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &ResolventElement) -> Result<ResolventElement> {
        self.check_same(other)?;
        let k = &self.algebra.delta_squared_negated;
        Ok(self.algebra.element(
            &self.u * &other.u - k * &self.v * &other.v,
            &self.u * &other.v + &self.v * &other.u,
        ))
    }

    pub fn add(&self, other: &ResolventElement) -> Result<ResolventElement> {
        self.check_same(other)?;
        Ok(self.algebra.element(&self.u + &other.u, &self.v + &other.v))
    }

    pub fn scale(&self, k: &Rat) -> ResolventElement {
        self.algebra.element(&self.u * k, &self.v * k)
    }

    pub fn conj(&self) -> ResolventElement {
        self.algebra.element(self.u.clone(), -&self.v)
    }

    /// `u^2 + 3 disc v^2`
    pub fn norm(&self) -> Rat {
        &self.u * &self.u + &self.algebra.delta_squared_negated * &self.v * &self.v
    }

    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn pow(&self, n: u32) -> ResolventElement {
        let mut acc = self.algebra.one();
        for _ in 0..n {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    pub fn inverse(&self) -> Result<ResolventElement> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::Inconsistent("inverse of a non-unit".into()));
        }
        Ok(self.conj().scale(&n.recip()))
    }
}

impl fmt::Display for ResolventElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*delta", self.u, self.v)
    }
}

pub fn res_mul(z1: &ResolventElement, z2: &ResolventElement) -> Result<ResolventElement> {
    z1.mul(z2)
}

pub fn res_conj(z: &ResolventElement) -> ResolventElement {
    z.conj()
}

pub fn res_norm(z: &ResolventElement) -> Rat {
    z.norm()
}

/// `C(X, Y) = (G + 3 delta g) / 2`, coefficients in `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardanoCovariant {
    pub coeffs: [ResolventElement; 4],
}

impl CardanoCovariant {
    pub fn algebra(&self) -> &ResolventAlgebra {
        &self.coeffs[0].algebra
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> ResolventElement {
        let powers = [
            x * x * x,
            x * x * y,
            x * y * y,
            y * y * y,
        ];
        let mut acc = self.algebra().element(Rat::zero(), Rat::zero());
        for (c, p) in self.coeffs.iter().zip(&powers) {
            acc = acc.add(&c.scale(p)).expect("same algebra");
        }
        acc
    }

    /// `F(x1, y1, x2, y2)` with `C(p1)^2 C(p2) = F^3`.
    pub fn f_value(&self, p1: (&Rat, &Rat), p2: (&Rat, &Rat)) -> ResolventElement {
        let [c0, c1, c2, c3] = &self.coeffs;
        let (x1, y1) = p1;
        let (x2, y2) = p2;
        let xx = x1 * x1;
        let xy = x1 * y1;
        let yy = y1 * y1;
        let first = c0
            .scale(&(rat(3) * &xx))
            .add(&c1.scale(&(rat(2) * &xy)))
            .and_then(|s| s.add(&c2.scale(&yy)))
            .expect("same algebra");
        let second = c1
            .scale(&xx)
            .add(&c2.scale(&(rat(2) * &xy)))
            .and_then(|s| s.add(&c3.scale(&(rat(3) * &yy))))
            .expect("same algebra");
        first
            .scale(x2)
            .add(&second.scale(y2))
            .expect("same algebra")
            .scale(&Rat::new(1.into(), 3.into()))
    }
}

/// The Cardano covariant of `g`.
pub fn cardano_covariant(g: &BinaryCubicForm) -> Result<CardanoCovariant> {
    let disc = g.nonsingular_discriminant()?;
    let algebra = ResolventAlgebra::for_discriminant(&disc)?;
    let cov = g.cubic_covariant().coeffs();
    let coeffs = g.coeffs();
    let half = Rat::new(1.into(), 2.into());
    let make = |k: usize| algebra.element(&cov[k] * &half, rat(3) * &coeffs[k] * &half);
    Ok(CardanoCovariant {
        coeffs: [make(0), make(1), make(2), make(3)],
    })
}

/// Evaluation points in the fixed search order `(1,0), (0,1), (1,1), (1,-1),
/// (1,2), (2,1), (1,-2), (2,-1), (1,3), ...`.
pub fn evaluation_points() -> impl Iterator<Item = (Rat, Rat)> {
    let head = [(1i64, 0i64), (0, 1), (1, 1), (1, -1)];
    let tail = (2i64..).flat_map(|n| [(1, n), (n, 1), (1, -n), (n, -1)]);
    head.into_iter()
        .chain(tail)
        .map(|(x, y)| (rat(x), rat(y)))
}

/// First evaluation points (in search order) where the Hessian is nonzero.
pub fn valid_points(g: &BinaryCubicForm, count: usize) -> Vec<(Rat, Rat)> {
    let h = g.hessian();
    evaluation_points()
        .filter(|(x, y)| !h.eval(x, y).is_zero())
        .take(count)
        .collect()
}

/// A representative `C(x, y)` of the Cardano invariant, at the first search
/// point with `H(x, y) != 0`.
pub fn cardano_representative(g: &BinaryCubicForm) -> Result<(ResolventElement, (Rat, Rat))> {
    let cov = cardano_covariant(g)?;
    let point = valid_points(g, 1)
        .pop()
        .ok_or_else(|| Error::Inconsistent("no point with nonzero Hessian".into()))?;
    Ok((cov.eval(&point.0, &point.1), point))
}

/// Checks `C(p1)^2 C(p2) = F(p1, p2)^3` and `N(F(p1, p2)) = H(p1)^2 H(p2)`.
pub fn check_f_identity(g: &BinaryCubicForm, p1: (&Rat, &Rat), p2: (&Rat, &Rat)) -> Result<bool> {
    let cov = cardano_covariant(g)?;
    let c1 = cov.eval(p1.0, p1.1);
    let c2 = cov.eval(p2.0, p2.1);
    let f = cov.f_value(p1, p2);
    let lhs = c1.mul(&c1)?.mul(&c2)?;
    let h = g.hessian();
    let h1 = h.eval(p1.0, p1.1);
    let h2 = h.eval(p2.0, p2.1);
    Ok(lhs == f.pow(3) && f.norm() == &h1 * &h1 * h2)
}

/// Whether the Cardano invariant is trivial, i.e. `g` has a rational linear factor.
pub fn is_trivial_class(g: &BinaryCubicForm) -> Result<bool> {
    g.nonsingular_discriminant()?;
    Ok(!linear_factors_binary_cubic(g)?.is_empty())
}

/// Compare `z(g1)` with `z(g2)` (preserving) or with `z(g2)^-1` (reversing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Preserving => 1,
            Orientation::Reversing => -1,
        }
    }
}

/// `SL(2, Z)`-transform `g(X, nX + Y)` of an irreducible form with nonzero
/// `a`, `U` and `P`.
pub fn normalize_seminvariants(g: &BinaryCubicForm) -> Result<BinaryCubicForm> {
    for k in 0..64i64 {
        // 0, 1, -1, 2, -2, ...
        let n = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        let h = g.act(&Mat2::from_ints(1, n, 0, 1))?;
        let (p, u) = h.seminvariants();
        if !h.a.is_zero() && !p.is_zero() && !u.is_zero() {
            return Ok(h);
        }
    }
    Err(Error::Inconsistent(
        "no shear gives nonzero seminvariants".into(),
    ))
}

/// `16X^3 - 12 P1 P2 X - (U1 U2 + 27 a1 a2 disc)`, which has a rational root
/// exactly when two irreducible forms (normalized so that `a`, `P`, `U` are
/// nonzero) have the same Cardano invariant.
pub fn equality_cubic(g1: &BinaryCubicForm, g2: &BinaryCubicForm) -> UniCubic {
    let (p1, u1) = g1.seminvariants();
    let (p2, u2) = g2.seminvariants();
    let disc = g1.discriminant();
    UniCubic::new(
        -(u1 * u2 + rat(27) * &g1.a * &g2.a * disc),
        rat(-12) * p1 * p2,
        Rat::zero(),
        rat(16),
    )
}

/// Decides `z(g1) = z(g2)` (preserving) or `z(g1) = z(g2)^-1` (reversing)
/// for forms of equal nonzero discriminant.
pub fn classes_equal(
    g1: &BinaryCubicForm,
    g2: &BinaryCubicForm,
    orientation: Orientation,
) -> Result<bool> {
    let disc = g1.nonsingular_discriminant()?;
    if g2.discriminant() != disc {
        return Err(Error::DiscriminantMismatch);
    }
    let g2 = match orientation {
        Orientation::Preserving => g2.clone(),
        Orientation::Reversing => g2.flip_y(),
    };
    match (is_trivial_class(g1)?, is_trivial_class(&g2)?) {
        (true, true) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        (false, false) => {}
    }
    let n1 = normalize_seminvariants(g1)?;
    let n2 = normalize_seminvariants(&g2)?;
    Ok(!rational_roots_cubic(&equality_cubic(&n1, &n2))?.is_empty())
}

/// Rational roots of `g(X, 1)`, plus whether `g` vanishes at `(1 : 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormRoots {
    pub roots: Vec<Rat>,
    pub at_infinity: bool,
}

/// Rational roots of `g(X, 1)` via `f(X) = 8X^3 - 6PX - U = g(2X + b, -3a) / a`:
/// each rational root `x` of `f` gives the root `(2x + b) / (-3a)`.
pub fn rational_roots_of_form(g: &BinaryCubicForm) -> Result<FormRoots> {
    g.nonsingular_discriminant()?;
    if g.a.is_zero() {
        // g = Y (bX^2 + cXY + dY^2) with b != 0
        let quad = UniCubic::new(g.d.clone(), g.c.clone(), g.b.clone(), Rat::zero());
        let mut roots = rational_roots_cubic(&quad)?;
        roots.dedup();
        return Ok(FormRoots {
            roots,
            at_infinity: true,
        });
    }
    let (p, u) = g.seminvariants();
    let f = UniCubic::new(-u, rat(-6) * p, Rat::zero(), rat(8));
    let denom = rat(-3) * &g.a;
    let mut roots: Vec<Rat> = rational_roots_cubic(&f)?
        .into_iter()
        .map(|x| (rat(2) * x + &g.b) / &denom)
        .collect();
    roots.sort();
    Ok(FormRoots {
        roots,
        at_infinity: false,
    })
}

fn to_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Approximate roots of `g(X, 1)` from `-(b + w + P/w) / 3a` over the three
/// cube roots `w` of `(U + 3a sqrt(-3 disc)) / 2`, each refined by a few
/// Newton steps.
pub fn cardano_roots_numeric(g: &BinaryCubicForm) -> Result<Vec<Complex64>> {
    let disc = g.nonsingular_discriminant()?;
    if g.a.is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    let (p, u) = g.seminvariants();
    let [a, b, c, d] = g.coeffs().map(|q| to_f64(&q));
    let (p, u) = (to_f64(&p), to_f64(&u));
    let sqrt_term = Complex64::new(-3.0 * to_f64(&disc), 0.0).sqrt();
    let mut z = (u + 3.0 * a * sqrt_term) / 2.0;
    let other = (u - 3.0 * a * sqrt_term) / 2.0;
    if other.norm() > z.norm() {
        z = other;
    }
    let w0 = z.cbrt();
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let poly = |x: Complex64| ((a * x + b) * x + c) * x + d;
    let deriv = |x: Complex64| (3.0 * a * x + 2.0 * b) * x + c;
    let mut roots: Vec<Complex64> = (0..3)
        .map(|k| {
            let w = w0 * omega.powu(k);
            let mut x = -(b + w + p / w) / (3.0 * a);
            for _ in 0..4 {
                let dp = deriv(x);
                if dp.norm() == 0.0 {
                    break;
                }
                let step = poly(x) / dp;
                let next = x - step;
                if poly(next).norm() < poly(x).norm() {
                    x = next;
                } else {
                    break;
                }
            }
            x
        })
        .collect();
    roots.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(roots)
}

/// A form with discriminant `disc` whose Cardano invariant is the class of
/// `x + y delta`, where `x^2 + 3 disc y^2 = P^3`:
/// `(2y/3, 0, -P/2y, x/6y^2)` when `y != 0`, else `(0, x/P, 0, -disc/4x)`.
pub fn construct_from_invariant(disc: &Rat, x: &Rat, y: &Rat, p: &Rat) -> Result<BinaryCubicForm> {
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    if p.is_zero() {
        return Err(Error::InvalidInvariant("P must be nonzero"));
    }
    if x.is_zero() && y.is_zero() {
        return Err(Error::InvalidInvariant("x and y are both zero"));
    }
    if x * x + rat(3) * disc * y * y != p * p * p {
        return Err(Error::NotNormPCubed);
    }
    let g = if !y.is_zero() {
        BinaryCubicForm::new(
            rat(2) * y / rat(3),
            Rat::zero(),
            -p / (rat(2) * y),
            x / (rat(6) * y * y),
        )
    } else {
        BinaryCubicForm::new(Rat::zero(), x / p, Rat::zero(), -disc / (rat(4) * x))
    };
    let (gp, gu) = g.seminvariants();
    if &g.discriminant() != disc || gu != rat(2) * x || &gp != p {
        return Err(Error::Inconsistent(format!(
            "constructed form {g} does not have the requested invariants"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    fn form(a: i64, b: i64, c: i64, d: i64) -> BinaryCubicForm {
        BinaryCubicForm::from_ints(a, b, c, d)
    }

    #[test]
    fn algebra_arithmetic() {
        let alg = ResolventAlgebra::for_discriminant(&rat(4)).unwrap();
        let z = alg.element(rat(0), frac(3, 2));
        assert_eq!(z.mul(&z).unwrap(), alg.element(rat(-27), rat(0)));
        let w = alg.element(frac(2, 3), rat(-5));
        assert_eq!(w.conj().mul(&w).unwrap(), alg.element(w.norm(), rat(0)));
        assert_eq!(alg.one().norm(), rat(1));
        let other = ResolventAlgebra::for_discriminant(&rat(5)).unwrap();
        assert_eq!(z.mul(&other.one()), Err(Error::AlgebraMismatch));
        assert_eq!(w.mul(&w.inverse().unwrap()).unwrap(), alg.one());
    }

    #[test]
    fn split_flag() {
        // -3 * (-3) = 9 is a square
        assert!(ResolventAlgebra::for_discriminant(&rat(-3)).unwrap().split);
        assert!(!ResolventAlgebra::for_discriminant(&rat(4)).unwrap().split);
        assert!(ResolventAlgebra::for_discriminant(&rat(0)).is_err());
    }

    #[test]
    fn leading_cardano_coefficients() {
        let c = cardano_covariant(&form(1, -6, 11, -6)).unwrap();
        assert_eq!((c.coeffs[0].u.clone(), c.coeffs[0].v.clone()), (rat(0), frac(3, 2)));
        let c = cardano_covariant(&form(1, 0, 0, -16)).unwrap();
        assert_eq!((c.coeffs[0].u.clone(), c.coeffs[0].v.clone()), (rat(-216), frac(3, 2)));
        let c = cardano_covariant(&form(0, 1, 1, 0)).unwrap();
        assert_eq!((c.coeffs[0].u.clone(), c.coeffs[0].v.clone()), (rat(1), rat(0)));
        assert_eq!(cardano_covariant(&form(1, 2, 1, 0)), Err(Error::ZeroDiscriminant));
    }

    #[test]
    fn second_coefficient_formula() {
        let g = BinaryCubicForm::new(frac(3, 2), rat(-2), rat(5), frac(-7, 3));
        let c = cardano_covariant(&g).unwrap();
        let (a, b, cc, d) = (&g.a, &g.b, &g.c, &g.d);
        let expected_u = frac(3, 2) * (b * b * cc - rat(6) * a * cc * cc + rat(9) * a * b * d);
        assert_eq!(c.coeffs[1].u, expected_u);
        assert_eq!(c.coeffs[1].v, frac(3, 2) * b);
    }

    #[test]
    fn cube_of_linear_form() {
        // 27 c0^2 C(X, Y) = (3 c0 X + c1 Y)^3 checked at a few points
        let g = form(2, -3, 5, 7);
        let c = cardano_covariant(&g).unwrap();
        let c0 = &c.coeffs[0];
        for (x, y) in [(rat(1), rat(0)), (rat(2), rat(-3)), (frac(1, 2), rat(5))] {
            let lhs = c0.mul(c0).unwrap().scale(&rat(27)).mul(&c.eval(&x, &y)).unwrap();
            let lin = c0.scale(&(rat(3) * &x)).add(&c.coeffs[1].scale(&y)).unwrap();
            assert_eq!(lhs, lin.pow(3));
        }
    }

    #[test]
    fn representatives() {
        let (z, pt) = cardano_representative(&form(1, -6, 11, -6)).unwrap();
        assert_eq!((z.u.clone(), z.v.clone()), (rat(0), frac(3, 2)));
        assert_eq!(pt, (rat(1), rat(0)));
        assert_eq!(z.norm(), rat(27));

        let (z, pt) = cardano_representative(&form(1, 0, 0, -16)).unwrap();
        assert_eq!((z.u.clone(), z.v.clone()), (rat(-3672), frac(-45, 2)));
        assert_eq!(pt, (rat(1), rat(1)));
        assert_eq!(z.norm(), rat(2_985_984));
        assert_eq!(z.norm(), rat(144) * rat(144) * rat(144));

        let (z, _) = cardano_representative(&form(0, 1, 1, 0)).unwrap();
        assert_eq!((z.u, z.v), (rat(1), rat(0)));
    }

    #[test]
    fn search_order() {
        let pts: Vec<(Rat, Rat)> = evaluation_points().take(8).collect();
        let expected = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1)];
        assert_eq!(pts, expected.map(|(x, y)| (rat(x), rat(y))).to_vec());
    }

    #[test]
    fn f_identity_examples() {
        let (one, zero) = (rat(1), rat(0));
        for g in [form(1, -6, 11, -6), form(2, -3, 5, 7), form(0, 1, 1, 0)] {
            assert!(check_f_identity(&g, (&one, &zero), (&one, &zero)).unwrap());
        }
        assert!(check_f_identity(&form(1, -6, 11, -6), (&one, &zero), (&zero, &one)).unwrap());
        let m1 = rat(-1);
        assert!(check_f_identity(&form(1, 0, 0, -16), (&one, &one), (&one, &m1)).unwrap());
    }

    #[test]
    fn triviality() {
        assert!(is_trivial_class(&form(1, -6, 11, -6)).unwrap());
        assert!(!is_trivial_class(&form(1, 0, 0, -16)).unwrap());
        assert!(is_trivial_class(&form(0, 1, 1, 0)).unwrap());
    }

    #[test]
    fn class_equality_examples() {
        let g = form(1, 0, 0, -16);
        assert!(classes_equal(&g, &g, Orientation::Preserving).unwrap());
        assert!(classes_equal(&g, &form(8, 0, 0, -2), Orientation::Preserving).unwrap());
        assert!(classes_equal(&form(1, -6, 11, -6), &form(1, 0, -1, 0), Orientation::Preserving).unwrap());
        // X^3 - 16 Y^3 against its inverse class X^3 + 16 Y^3 under preserving orientation
        assert!(!classes_equal(&g, &form(1, 0, 0, 16), Orientation::Preserving).unwrap());
        assert!(classes_equal(&g, &form(1, 0, 0, 16), Orientation::Reversing).unwrap());
        assert_eq!(
            classes_equal(&g, &form(1, 0, 0, 1), Orientation::Preserving),
            Err(Error::DiscriminantMismatch)
        );
    }

    #[test]
    fn equality_cubic_for_reducible_pair() {
        // both forms have disc 4; f = 16X^3 - 108X - 108 has the root 3
        let f = equality_cubic(&form(1, -6, 11, -6), &form(1, 0, -1, 0));
        assert_eq!(f, UniCubic::from_ints(-108, -108, 0, 16));
        assert!(rational_roots_cubic(&f).unwrap().contains(&rat(3)));
    }

    #[test]
    fn form_roots() {
        let r = rational_roots_of_form(&form(1, -6, 11, -6)).unwrap();
        assert_eq!(r.roots, vec![rat(1), rat(2), rat(3)]);
        assert!(!r.at_infinity);
        let r = rational_roots_of_form(&form(1, 0, 0, -16)).unwrap();
        assert!(r.roots.is_empty());
        let r = rational_roots_of_form(&form(0, 1, 1, 0)).unwrap();
        assert_eq!(r.roots, vec![rat(-1), rat(0)]);
        assert!(r.at_infinity);
    }

    #[test]
    fn cube_root_witness_from_root_of_f() {
        // a root x of f gives (x + y delta)^3 = z with y = 9a / f'(x)
        let g = form(1, -6, 11, -6);
        let (z, _) = cardano_representative(&g).unwrap();
        let (p, _) = g.seminvariants();
        let alg = z.algebra.clone();
        for x in [rat(0), frac(3, 2), frac(-3, 2)] {
            let fprime = rat(24) * &x * &x - rat(6) * &p;
            let w = alg.element(x, rat(9) * &g.a / fprime);
            assert_eq!(w.pow(3), z);
        }
    }

    #[test]
    fn numeric_roots() {
        let close = |z: Complex64, re: f64, im: f64| (z.re - re).abs() < 1e-9 && (z.im - im).abs() < 1e-9;
        let r = cardano_roots_numeric(&form(1, -6, 11, -6)).unwrap();
        assert!(close(r[0], 1.0, 0.0) && close(r[1], 2.0, 0.0) && close(r[2], 3.0, 0.0));
        let r = cardano_roots_numeric(&form(1, 0, 0, -1)).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert!(close(r[0], -0.5, -h) && close(r[1], -0.5, h) && close(r[2], 1.0, 0.0));
        let r = cardano_roots_numeric(&form(1, 0, 0, -16)).unwrap();
        let c = 2.0 * 2f64.cbrt();
        assert!(close(r[2], c, 0.0));
        assert!(close(r[0], -c / 2.0, -c * h) && close(r[1], -c / 2.0, c * h));
        assert_eq!(
            cardano_roots_numeric(&form(0, 1, 1, 0)),
            Err(Error::LeadingCoefficientZero)
        );
    }

    #[test]
    fn construct_examples() {
        assert_eq!(
            construct_from_invariant(&rat(4), &rat(0), &frac(3, 2), &rat(3)).unwrap(),
            form(1, 0, -1, 0)
        );
        assert_eq!(
            construct_from_invariant(&rat(4), &rat(1), &rat(0), &rat(1)).unwrap(),
            form(0, 1, 0, -1)
        );
        assert_eq!(
            construct_from_invariant(&rat(-6912), &rat(-2160), &rat(9), &rat(144)).unwrap(),
            BinaryCubicForm::new(rat(6), rat(0), rat(-8), frac(-40, 9))
        );
        assert_eq!(
            construct_from_invariant(&rat(4), &rat(1), &rat(1), &rat(3)),
            Err(Error::NotNormPCubed)
        );
        assert!(matches!(
            construct_from_invariant(&rat(4), &rat(0), &rat(0), &rat(3)),
            Err(Error::InvalidInvariant(_))
        ));
    }

    #[test]
    fn construct_matches_cardano_value_of_second_example_form() {
        // x + y delta = C(1, 1) for (8, 0, 0, -2)
        let g = form(8, 0, 0, -2);
        let c = cardano_covariant(&g).unwrap().eval(&rat(1), &rat(1));
        assert_eq!((c.u.clone(), c.v.clone()), (rat(-2160), rat(9)));
        let built = construct_from_invariant(&rat(-6912), &c.u, &c.v, &rat(144)).unwrap();
        assert!(classes_equal(&built, &g, Orientation::Preserving).unwrap());
    }
}
