//! Equivalence of binary cubics: the bicovariant and its bilinear factors,
//! explicit transforming matrices, automorphism groups and integral
//! equivalence.
//!
//! For forms `g1`, `g2` of equal discriminant the bicovariant
//! `B = g2(X2,Y2) G1(X1,Y1) - G2(X2,Y2) g1(X1,Y1)` has bidegree `(3, 3)`, and
//! its bilinear factors over `Q` are exactly the forms
//! `L_M = -s X1X2 + r X1Y2 - u Y1X2 + t Y1Y2` with `M = (r s; t u)` in
//! `SL(2, Q)` and `g1 = g2^M`. The "plus" variant `g2 G1 + G2 g1` carries the
//! determinant `-1` transforms; their factors have the same shape `L_M`, which is
//! `det((X1 Y1) M ; (X2 Y2))` in either case.
//!
//! The action `g^M(v) = det(M)^-1 g(v M)` satisfies `(g^A)^B = g^(B A)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{BinaryCubicForm, Mat2};
use crate::poly::{is_nonzero_square, linear_factors_binary_cubic, rat, rational_sqrt, BiForm, Rat, Side};
use crate::resolvent::{is_trivial_class, Orientation};

type Point = (Rat, Rat);

/// A transforming matrix with its determinant sign and integrality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedMatrix {
    pub matrix: Mat2,
    /// `+1` or `-1`.
    pub det: i64,
    pub integral: bool,
    /// The canonically scaled bilinear factor the matrix was read from.
    pub factor: BiForm,
}

/// All matrices `M` with `g1 = g2^M` of one or both determinant signs,
/// each checked by direct action.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransformSet {
    pub entries: Vec<TaggedMatrix>,
}

impl TransformSet {
    fn verified(g1: &BinaryCubicForm, g2: &BinaryCubicForm, entries: Vec<TaggedMatrix>) -> Result<Self> {
        for sign in [1, -1] {
            if entries.iter().filter(|e| e.det == sign).count() > 3 {
                return Err(Error::Inconsistent(format!(
                    "more than three transforms of determinant {sign}"
                )));
            }
        }
        for e in &entries {
            if e.matrix.det() != rat(e.det) || &g2.act(&e.matrix)? != g1 {
                return Err(Error::Inconsistent(format!(
                    "matrix {} does not transform {g2} into {g1}",
                    e.matrix
                )));
            }
        }
        Ok(TransformSet { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn matrices(&self) -> Vec<Mat2> {
        self.entries.iter().map(|e| e.matrix.clone()).collect()
    }

    pub fn with_det(&self, det: i64) -> impl Iterator<Item = &TaggedMatrix> {
        self.entries.iter().filter(move |e| e.det == det)
    }

    pub fn integral(&self) -> impl Iterator<Item = &TaggedMatrix> {
        self.entries.iter().filter(|e| e.integral)
    }
}

/// Isomorphism type of the `GL(2, Q)` automorphism group of a cubic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AutGroupKind {
    Trivial,
    C2,
    C3,
    S3,
}

impl AutGroupKind {
    pub fn order(self) -> usize {
        match self {
            AutGroupKind::Trivial => 1,
            AutGroupKind::C2 => 2,
            AutGroupKind::C3 => 3,
            AutGroupKind::S3 => 6,
        }
    }

    /// The kind predicted by whether the form is reducible over `Q` and
    /// whether its discriminant is a square.
    pub fn predicted(reducible: bool, square_disc: bool) -> Self {
        match (reducible, square_disc) {
            (false, false) => AutGroupKind::Trivial,
            (false, true) => AutGroupKind::C3,
            (true, false) => AutGroupKind::C2,
            (true, true) => AutGroupKind::S3,
        }
    }
}

impl fmt::Display for AutGroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AutGroupKind::Trivial => "trivial",
            AutGroupKind::C2 => "C2",
            AutGroupKind::C3 => "C3",
            AutGroupKind::S3 => "S3",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub kind: AutGroupKind,
    pub transforms: TransformSet,
}

impl AutomorphismGroup {
    pub fn matrices(&self) -> Vec<Mat2> {
        self.transforms.matrices()
    }

    /// The `SL(2, Q)` part, of order 1 or 3.
    pub fn special(&self) -> Vec<Mat2> {
        self.transforms.with_det(1).map(|e| e.matrix.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    SL2,
    GL2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Q,
    Z,
}

/// Outcome of [`is_equivalent`]: `g1 = g2^witness` when equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    pub witness: Option<Mat2>,
    /// Every witness in the requested group and ring, `witness` first.
    pub witnesses: Vec<Mat2>,
}

/// `M` in `SL(2, Q)` with `g^M = Y(X^2 - disc/4 Y^2)`, for `g` with a
/// rational linear factor.
pub fn standard_reducible_form(g: &BinaryCubicForm) -> Result<(Mat2, BinaryCubicForm)> {
    let disc = g.nonsingular_discriminant()?;
    let (r, s) = linear_factors_binary_cubic(g)?
        .into_iter()
        .next()
        .ok_or(Error::NoLinearFactor)?;
    let (r, s) = (Rat::from_integer(r), Rat::from_integer(s));
    // send the factor rX + sY to Y
    let to_y = if !s.is_zero() {
        Mat2::new(s.clone(), -&r, Rat::zero(), s.recip())
    } else {
        Mat2::new(s.clone(), -&r, r.recip(), Rat::zero())
    };
    let h = g.act(&to_y)?;
    debug_assert!(h.a.is_zero() && !h.b.is_zero());
    let scale = Mat2::diag(h.b.recip(), h.b.clone());
    let h = h.act(&scale)?;
    let shear = Mat2::new(Rat::one(), Rat::zero(), -&h.c / rat(2), Rat::one());
    let m = shear.mul(&scale).mul(&to_y);
    let standard = BinaryCubicForm::new(Rat::zero(), Rat::one(), Rat::zero(), -disc / rat(4));
    if g.act(&m)? != standard {
        return Err(Error::Inconsistent(format!("{m} does not reduce {g}")));
    }
    Ok((m, standard))
}

fn check_common_discriminant(g1: &BinaryCubicForm, g2: &BinaryCubicForm) -> Result<Rat> {
    let disc = g1.nonsingular_discriminant()?;
    if g2.discriminant() != disc {
        return Err(Error::DiscriminantMismatch);
    }
    Ok(disc)
}

/// `g2(X2,Y2) G1(X1,Y1) - G2(X2,Y2) g1(X1,Y1)`, or with `+` for the reversing
/// orientation.
pub fn bicovariant(g1: &BinaryCubicForm, g2: &BinaryCubicForm, sign: Orientation) -> Result<BiForm> {
    check_common_discriminant(g1, g2)?;
    let first = BiForm::outer(&g1.cubic_covariant().coeffs(), &g2.coeffs());
    let second = BiForm::outer(&g1.coeffs(), &g2.cubic_covariant().coeffs());
    match sign {
        Orientation::Preserving => first.sub(&second),
        Orientation::Reversing => first.add(&second),
    }
}

fn cross(f: &(Rat, Rat), g: &(Rat, Rat)) -> Rat {
    &f.0 * &g.1 - &f.1 * &g.0
}

/// All bilinear factors of a bidegree `(3, 3)` form over `Q`, canonically
/// scaled and sorted.
///
/// Candidates come from rational linear factors of the cubics obtained by
/// specializing `(X1, Y1)` at three points; the ratio between the first two
/// is fixed by the third, and survivors must divide exactly.
pub fn bilinear_factors(b: &BiForm) -> Result<Vec<BiForm>> {
    if b.bidegree() != (3, 3) {
        return Err(Error::Bidegree {
            expected: (3, 3),
            got: b.bidegree(),
        });
    }
    if b.is_zero() {
        return Err(Error::ZeroBiForm);
    }
    // (1,0), (0,1), (1,1), (1,2), ... skipping points where B vanishes identically
    let points = [(1i64, 0i64), (0, 1)]
        .into_iter()
        .chain((1i64..).map(|n| (1, n)))
        .map(|(x, y)| (rat(x), rat(y)));
    // each sample point paired with the linear factors of B there
    let mut samples: Vec<(Point, Vec<Point>)> = Vec::with_capacity(3);
    for (x, y) in points {
        let cubic = b.specialize(Side::First, &x, &y)?;
        if cubic.iter().all(Zero::is_zero) {
            continue;
        }
        let form = BinaryCubicForm::new(
            cubic[0].clone(),
            cubic[1].clone(),
            cubic[2].clone(),
            cubic[3].clone(),
        );
        let mut lin: Vec<Point> = linear_factors_binary_cubic(&form)?
            .into_iter()
            .map(|(r, s)| (Rat::from_integer(r), Rat::from_integer(s)))
            .collect();
        lin.dedup();
        if lin.is_empty() {
            return Ok(Vec::new());
        }
        samples.push(((x, y), lin));
        if samples.len() == 3 {
            break;
        }
    }
    let [(q1, f1s), (q2, f2s), (q3, f3s)] = <[_; 3]>::try_from(samples).expect("three points");
    // q3 = mu1 q1 + mu2 q2
    let basis_det = &q1.0 * &q2.1 - &q2.0 * &q1.1;
    let mu1 = (&q3.0 * &q2.1 - &q2.0 * &q3.1) / &basis_det;
    let mu2 = (&q1.0 * &q3.1 - &q3.0 * &q1.1) / &basis_det;

    let mut found: Vec<BiForm> = Vec::new();
    for f1 in &f1s {
        for f2 in &f2s {
            if cross(f1, f2).is_zero() {
                continue;
            }
            for f3 in &f3s {
                let denom = &mu2 * cross(f2, f3);
                if denom.is_zero() {
                    continue;
                }
                // L(q1) = f1, L(q2) = rho f2
                let rho = -&mu1 * cross(f1, f3) / denom;
                if rho.is_zero() {
                    continue;
                }
                let g2 = (&rho * &f2.0, &rho * &f2.1);
                // solve [q1; q2] [lA; lB] = [f1; rho f2] for L = X1 lA + Y1 lB
                let la = (
                    (&q2.1 * &f1.0 - &q1.1 * &g2.0) / &basis_det,
                    (&q2.1 * &f1.1 - &q1.1 * &g2.1) / &basis_det,
                );
                let lb = (
                    (&q1.0 * &g2.0 - &q2.0 * &f1.0) / &basis_det,
                    (&q1.0 * &g2.1 - &q2.0 * &f1.1) / &basis_det,
                );
                let l = BiForm::bilinear(la.0, la.1, lb.0, lb.1).canonical();
                if found.contains(&l) {
                    continue;
                }
                if b.exact_divide(&l).is_some() {
                    found.push(l);
                }
            }
        }
    }
    found.sort_by_key(BiForm::canonical_key);
    Ok(found)
}

/// Reads `M` off a bilinear factor `-s X1X2 + r X1Y2 - u Y1X2 + t Y1Y2` and
/// rescales it to determinant `sign`.
pub fn factor_to_matrix(l: &BiForm, sign: Orientation) -> Result<Mat2> {
    if l.bidegree() != (1, 1) {
        return Err(Error::Bidegree {
            expected: (1, 1),
            got: l.bidegree(),
        });
    }
    let l = l.canonical();
    let (c00, c01, c10, c11) = (l.get(0, 0), l.get(0, 1), l.get(1, 0), l.get(1, 1));
    let m = Mat2::new(c01.clone(), -c00, c11.clone(), -c10);
    let det = m.det();
    if det.is_zero() {
        return Err(Error::ReducibleBilinear);
    }
    let lambda = rational_sqrt(&(rat(sign.sign()) / det)).ok_or(Error::ScalingObstruction)?;
    Ok(m.scale(&lambda))
}

fn signed_transforms(g1: &BinaryCubicForm, g2: &BinaryCubicForm, sign: Orientation) -> Result<Vec<TaggedMatrix>> {
    let b = bicovariant(g1, g2, sign)?;
    let mut out = Vec::new();
    for factor in bilinear_factors(&b)? {
        let m = factor_to_matrix(&factor, sign)?;
        // the factor fixes M only up to sign
        let matrix = if &g2.act(&m)? == g1 {
            m
        } else if &g2.act(&m.neg())? == g1 {
            m.neg()
        } else {
            return Err(Error::Inconsistent(format!(
                "factor {factor} gives {m}, which does not transform {g2} into {g1}"
            )));
        };
        out.push(TaggedMatrix {
            integral: matrix.is_integral(),
            matrix,
            det: sign.sign(),
            factor,
        });
    }
    Ok(out)
}

/// All `M` in `SL(2, Q)` with `g1 = g2^M`.
pub fn sl2_transforms(g1: &BinaryCubicForm, g2: &BinaryCubicForm) -> Result<TransformSet> {
    let entries = signed_transforms(g1, g2, Orientation::Preserving)?;
    TransformSet::verified(g1, g2, entries)
}

/// All `M` in `GL(2, Q)` with `g1 = g2^M`: determinant `+1` entries first,
/// then determinant `-1`.
pub fn gl2_transforms(g1: &BinaryCubicForm, g2: &BinaryCubicForm) -> Result<TransformSet> {
    let mut entries = signed_transforms(g1, g2, Orientation::Preserving)?;
    entries.extend(signed_transforms(g1, g2, Orientation::Reversing)?);
    TransformSet::verified(g1, g2, entries)
}

/// The `GL(2, Q)` automorphism group of `g`, cross-checked against the
/// prediction from reducibility and squareness of the discriminant.
pub fn automorphisms(g: &BinaryCubicForm) -> Result<AutomorphismGroup> {
    let disc = g.nonsingular_discriminant()?;
    let transforms = gl2_transforms(g, g)?;
    let kind = match (transforms.len(), transforms.with_det(1).count()) {
        (1, 1) => AutGroupKind::Trivial,
        (2, 1) => AutGroupKind::C2,
        (3, 3) => AutGroupKind::C3,
        (6, 3) => AutGroupKind::S3,
        (n, k) => {
            return Err(Error::Inconsistent(format!(
                "{n} automorphisms with {k} of determinant 1"
            )))
        }
    };
    let predicted = AutGroupKind::predicted(is_trivial_class(g)?, is_nonzero_square(&disc));
    if kind != predicted {
        return Err(Error::Inconsistent(format!(
            "automorphism group {kind} but predicted {predicted}"
        )));
    }
    Ok(AutomorphismGroup { kind, transforms })
}

/// Decides whether `g2 = g1^W` for some `W` in the requested group over the
/// requested ring. Witnesses follow the deterministic order of
/// [`gl2_transforms`]`(g2, g1)`.
///
/// Over `Q` with `GL(2)`, discriminants differing by a square factor
/// `lambda^2` are first matched through `D = diag(lambda, 1)` applied to `g1`,
/// and each witness is reported as `M D`.
pub fn is_equivalent(g1: &BinaryCubicForm, g2: &BinaryCubicForm, group: Group, ring: Ring) -> Result<Equivalence> {
    let disc1 = g1.nonsingular_discriminant()?;
    let disc2 = g2.nonsingular_discriminant()?;
    let not_equivalent = Equivalence {
        equivalent: false,
        witness: None,
        witnesses: Vec::new(),
    };
    let (source, prescale) = if disc1 == disc2 {
        (g1.clone(), None)
    } else {
        if group == Group::SL2 || ring == Ring::Z {
            return Ok(not_equivalent);
        }
        match rational_sqrt(&(&disc2 / &disc1)) {
            Some(lambda) => {
                let d = Mat2::diag(lambda, Rat::one());
                (g1.act(&d)?, Some(d))
            }
            None => return Ok(not_equivalent),
        }
    };
    let set = match group {
        Group::SL2 => sl2_transforms(g2, &source)?,
        Group::GL2 => gl2_transforms(g2, &source)?,
    };
    let witnesses: Vec<Mat2> = set
        .entries
        .iter()
        .filter(|e| ring == Ring::Q || e.integral)
        .map(|e| match &prescale {
            Some(d) => e.matrix.mul(d),
            None => e.matrix.clone(),
        })
        .collect();
    Ok(Equivalence {
        equivalent: !witnesses.is_empty(),
        witness: witnesses.first().cloned(),
        witnesses,
    })
}

/// Exhaustive search over integer matrices with entries in `[-bound, bound]`
/// and determinant `+-1` for `g1 = g2^M`. Intended as an independent check.
pub fn brute_force_oracle(g1: &BinaryCubicForm, g2: &BinaryCubicForm, bound: i64) -> Vec<Mat2> {
    let mut out = Vec::new();
    let range = -bound..=bound;
    for r in range.clone() {
        for s in range.clone() {
            for t in range.clone() {
                for u in range.clone() {
                    let det = r * u - s * t;
                    if det.abs() != 1 {
                        continue;
                    }
                    // leading coefficient of g2^M is g2(r, s) / det
                    if g2.eval(&rat(r), &rat(s)) * rat(det) != g1.a {
                        continue;
                    }
                    let m = Mat2::from_ints(r, s, t, u);
                    if g2.act(&m).as_ref() == Ok(g1) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Integer coefficients of a canonical bilinear factor, `[X1X2, X1Y2, Y1X2, Y1Y2]`.
pub fn factor_coefficients(l: &BiForm) -> Vec<BigInt> {
    l.canonical_key()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{biform_exact_divide, frac};

    fn form(a: i64, b: i64, c: i64, d: i64) -> BinaryCubicForm {
        BinaryCubicForm::from_ints(a, b, c, d)
    }

    fn bilinear(c: [i64; 4]) -> BiForm {
        BiForm::bilinear(rat(c[0]), rat(c[1]), rat(c[2]), rat(c[3]))
    }

    fn half(r: i64, s: i64, t: i64, u: i64) -> Mat2 {
        Mat2::new(frac(r, 2), frac(s, 2), frac(t, 2), frac(u, 2))
    }

    #[test]
    fn standard_form_examples() {
        let (m, std) = standard_reducible_form(&form(0, 1, 0, -1)).unwrap();
        assert_eq!(m, Mat2::identity());
        assert_eq!(std, form(0, 1, 0, -1));

        let g = form(1, -6, 11, -6);
        let (m, std) = standard_reducible_form(&g).unwrap();
        assert_eq!(m.det(), rat(1));
        assert_eq!(std, form(0, 1, 0, -1));
        assert_eq!(g.act(&m).unwrap(), std);

        let g = form(0, 1, 1, 0);
        let (m, std) = standard_reducible_form(&g).unwrap();
        assert_eq!(std, BinaryCubicForm::new(rat(0), rat(1), rat(0), frac(-1, 4)));
        assert_eq!(g.act(&m).unwrap(), std);

        assert_eq!(
            standard_reducible_form(&form(1, 0, 0, -16)),
            Err(Error::NoLinearFactor)
        );
    }

    #[test]
    fn bicovariant_diagonal_and_sign() {
        let g = form(1, -6, 11, -6);
        let b = bicovariant(&g, &g, Orientation::Preserving).unwrap();
        let diag = bilinear([0, 1, -1, 0]);
        assert!(biform_exact_divide(&b, &diag).is_some());
        assert!(biform_exact_divide(&b, &bilinear([1, 0, 0, 0])).is_none());
        let neg = bicovariant(&g, &g.scale(&rat(-1)), Orientation::Preserving).unwrap();
        assert_eq!(neg, b.scale(&rat(-1)));
        for (x, y) in [(1, 0), (2, -3), (5, 7)] {
            let (x, y) = (rat(x), rat(y));
            assert!(b.eval(&x, &y, &x, &y).is_zero());
        }
        assert_eq!(
            bicovariant(&g, &form(1, 0, 0, -16), Orientation::Preserving),
            Err(Error::DiscriminantMismatch)
        );
    }

    #[test]
    fn specialization_recovers_proof_cubic() {
        // B(1, 0, X, Y) = U1 g2 - a1 G2
        let g1 = form(1, 0, 0, -16);
        let g2 = form(8, 0, 0, -2);
        let b = bicovariant(&g1, &g2, Orientation::Preserving).unwrap();
        let spec = crate::poly::specialize_biform(&b, Side::First, &rat(1), &rat(0)).unwrap();
        let (_, u1) = g1.seminvariants();
        let expected_coeffs: Vec<Rat> = g2
            .coeffs()
            .iter()
            .zip(g2.cubic_covariant().coeffs().iter())
            .map(|(g, cov)| &u1 * g - &g1.a * cov)
            .collect();
        assert_eq!(spec.coeffs().to_vec(), expected_coeffs);
    }

    #[test]
    fn self_bicovariant_factors_of_split_reducible_form() {
        let g = form(1, -6, 11, -6);
        let b = bicovariant(&g, &g, Orientation::Preserving).unwrap();
        let factors = bilinear_factors(&b).unwrap();
        let mut expected = vec![
            bilinear([0, -1, 1, 0]).canonical(),
            bilinear([-3, 7, 5, -13]).canonical(),
            bilinear([-3, 5, 7, -13]).canonical(),
        ];
        expected.sort_by_key(BiForm::canonical_key);
        assert_eq!(factors, expected);
    }

    #[test]
    fn factor_to_matrix_examples() {
        let m = factor_to_matrix(&bilinear([0, 1, -1, 0]), Orientation::Preserving).unwrap();
        assert_eq!(m, Mat2::identity());
        let m = factor_to_matrix(&bilinear([-3, 5, 7, -13]), Orientation::Preserving).unwrap();
        assert_eq!(m, half(-5, -3, 13, 7));
        assert_eq!(
            factor_to_matrix(&bilinear([1, 2, 2, 4]), Orientation::Preserving),
            Err(Error::ReducibleBilinear)
        );
        // det of the read-off matrix is 2, not a square
        assert_eq!(
            factor_to_matrix(&bilinear([0, 1, -2, 0]), Orientation::Preserving),
            Err(Error::ScalingObstruction)
        );
    }

    #[test]
    fn reversing_factor_reads_determinant_minus_one() {
        let m = factor_to_matrix(&bilinear([0, 1, -1, 0]), Orientation::Reversing);
        // det of the identity read-off is 1, and -1 is not a square
        assert_eq!(m, Err(Error::ScalingObstruction));
        // L for diag(-1, 1) is -X1Y2 - Y1X2
        let m = factor_to_matrix(&bilinear([0, -1, -1, 0]), Orientation::Reversing).unwrap();
        assert_eq!(m.det(), rat(-1));
        assert!(m == Mat2::diag(rat(-1), rat(1)) || m == Mat2::diag(rat(1), rat(-1)));
    }

    #[test]
    fn action_composes_on_the_left() {
        let g = form(1, 2, 3, 5);
        let a = Mat2::from_ints(1, 2, 0, 1);
        let b = Mat2::from_ints(1, 0, 3, 1);
        let twice = g.act(&a).unwrap().act(&b).unwrap();
        assert_eq!(twice, g.act(&b.mul(&a)).unwrap());
        assert_ne!(twice, g.act(&a.mul(&b)).unwrap());
    }

    #[test]
    fn first_worked_example() {
        let g1 = form(8, 0, 0, -2);
        let g2 = form(1, 0, 0, -16);
        let set = sl2_transforms(&g1, &g2).unwrap();
        assert_eq!(set.matrices(), vec![Mat2::diag(rat(2), frac(1, 2))]);
        assert!(!set.entries[0].integral);
        let all = gl2_transforms(&g1, &g2).unwrap();
        assert_eq!(all.matrices(), vec![Mat2::diag(rat(2), frac(1, 2))]);
        assert!(brute_force_oracle(&g1, &g2, 3).is_empty());
    }

    #[test]
    fn second_worked_example() {
        let g = form(1, -6, 11, -6);
        // the listed generator sends g to -g, so the exact automorphisms are
        // -M and M^2
        let listed = half(-5, -3, 13, 7);
        assert_eq!(g.act(&listed).unwrap(), g.scale(&rat(-1)));
        let set = sl2_transforms(&g, &g).unwrap();
        let mut got = set.matrices();
        got.sort();
        let mut expected = vec![Mat2::identity(), listed.neg(), listed.mul(&listed)];
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(listed.mul(&listed), half(-7, -3, 13, 5));
        let aut = automorphisms(&g).unwrap();
        assert_eq!(aut.kind, AutGroupKind::S3);
        assert_eq!(aut.matrices().len(), 6);
    }

    #[test]
    fn automorphism_kinds() {
        let aut = automorphisms(&form(1, 0, 0, -16)).unwrap();
        assert_eq!(aut.kind, AutGroupKind::Trivial);
        assert_eq!(aut.matrices(), vec![Mat2::identity()]);

        let aut = automorphisms(&form(0, 1, 0, -2)).unwrap();
        assert_eq!(aut.kind, AutGroupKind::C2);
        assert_eq!(aut.matrices(), vec![Mat2::identity(), Mat2::diag(rat(1), rat(-1))]);

        // X^3 - 3XY^2 + Y^3 has discriminant 81 and is irreducible
        let aut = automorphisms(&form(1, 0, -3, 1)).unwrap();
        assert_eq!(aut.kind, AutGroupKind::C3);
        assert_eq!(aut.special().len(), 3);
    }

    #[test]
    fn equivalence_examples() {
        let g1 = form(1, 0, 0, -16);
        let g2 = form(8, 0, 0, -2);
        let v = is_equivalent(&g1, &g2, Group::SL2, Ring::Q).unwrap();
        assert!(v.equivalent);
        assert_eq!(v.witness, Some(Mat2::diag(rat(2), frac(1, 2))));
        assert_eq!(g1.act(&v.witness.unwrap()).unwrap(), g2);
        assert!(!is_equivalent(&g1, &g2, Group::SL2, Ring::Z).unwrap().equivalent);
        assert!(!is_equivalent(&g1, &g2, Group::GL2, Ring::Z).unwrap().equivalent);
        // reversed orientation: X^3 + 16 Y^3 only through determinant -1
        let flipped = form(1, 0, 0, 16);
        assert!(!is_equivalent(&g1, &flipped, Group::SL2, Ring::Q).unwrap().equivalent);
        let v = is_equivalent(&g1, &flipped, Group::GL2, Ring::Z).unwrap();
        assert!(v.equivalent);
        assert_eq!(v.witness.unwrap().det(), rat(-1));
    }

    #[test]
    fn square_ratio_prescaling() {
        let g1 = form(1, -6, 11, -6);
        let g2 = g1.scale(&rat(2));
        // disc(2g) = 16 disc(g); ratio 1/16 is a square
        let v = is_equivalent(&g1, &g2, Group::GL2, Ring::Q).unwrap();
        assert!(v.equivalent);
        for w in &v.witnesses {
            assert_eq!(&g1.act(w).unwrap(), &g2);
        }
        assert!(!is_equivalent(&g1, &g2, Group::SL2, Ring::Q).unwrap().equivalent);
        let g3 = g1.scale(&rat(3));
        // ratio 1/81 is a square too, but (3g)^M = g needs det 3
        assert!(is_equivalent(&g1, &g3, Group::GL2, Ring::Q).unwrap().equivalent);
        let g4 = form(1, 0, 0, -1);
        assert!(!is_equivalent(&g1, &g4, Group::GL2, Ring::Q).unwrap().equivalent);
    }

    #[test]
    fn brute_force_finds_constructed_witness() {
        let g = form(1, 2, -3, 5);
        let m = Mat2::from_ints(1, 0, 1, 1);
        let h = g.act(&m).unwrap();
        let found = brute_force_oracle(&h, &g, 2);
        assert!(found.contains(&m));
    }
}
