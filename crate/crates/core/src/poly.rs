//! Exact polynomial substrate.
//!
//! Rational roots of univariate polynomials of degree at most three, rational
//! linear factors of binary cubics, and dense bihomogeneous forms in
//! `(X1, Y1; X2, Y2)` with exact division by a bilinear form.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::BinaryCubicForm;

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Shorthand for an integral [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Exact cube root of a rational, if it has one.
pub fn rational_cbrt(q: &Rat) -> Option<Rat> {
    let n = q.numer().cbrt();
    let d = q.denom().cbrt();
    if &(&n * &n * &n) == q.numer() && &(&d * &d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Whether `q` is the square of a nonzero rational.
pub fn is_nonzero_square(q: &Rat) -> bool {
    !q.is_zero() && rational_sqrt(q).is_some()
}

/// Product of two binary forms given by coefficient lists in descending powers of `X`.
pub(crate) fn binary_mul(lhs: &[Rat], rhs: &[Rat]) -> Vec<Rat> {
    if lhs.is_empty() || rhs.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); lhs.len() + rhs.len() - 1];
    for (i, p) in lhs.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in rhs.iter().enumerate() {
            out[i + j] += p * q;
        }
    }
    out
}

/// Evaluates a binary form (descending powers of `X`) at `(x, y)`.
pub(crate) fn binary_eval(coeffs: &[Rat], x: &Rat, y: &Rat) -> Rat {
    let deg = coeffs.len().saturating_sub(1);
    let mut acc = Rat::zero();
    let mut xp = vec![Rat::one(); deg + 1];
    let mut yp = vec![Rat::one(); deg + 1];
    for k in 1..=deg {
        xp[k] = &xp[k - 1] * x;
        yp[k] = &yp[k - 1] * y;
    }
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc += c * &xp[deg - i] * &yp[i];
        }
    }
    acc
}

/// A univariate polynomial `p3*x^3 + p2*x^2 + p1*x + p0`; the leading
/// coefficients may vanish.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniCubic {
    /// Coefficients `p0..p3`, lowest degree first.
    pub coeffs: [Rat; 4],
}

impl UniCubic {
    pub fn new(p0: Rat, p1: Rat, p2: Rat, p3: Rat) -> Self {
        UniCubic {
            coeffs: [p0, p1, p2, p3],
        }
    }

    pub fn from_ints(p0: i64, p1: i64, p2: i64, p3: i64) -> Self {
        UniCubic::new(rat(p0), rat(p1), rat(p2), rat(p3))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (0..4).rev().find(|&k| !self.coeffs[k].is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Rational roots with multiplicity, in ascending order.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        rational_roots_cubic(self)
    }
}

/// Rational roots of `p`, with multiplicity, in ascending order.
///
/// Denominators are cleared to a primitive integer polynomial, which is then
/// made monic by the substitution `y = lead * x`; rational roots of the
/// original become integer roots of the monic one and are located by exact
/// integer bisection on intervals where the polynomial is monotone.
/// Multiplicities come from repeated exact deflation.
pub fn rational_roots_cubic(p: &UniCubic) -> Result<Vec<Rat>> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let ints = primitive_integer_coeffs(&p.coeffs[..=degree]);
    let mut roots = Vec::new();
    for root in distinct_rational_roots(&ints) {
        let mut current: Vec<Rat> = p.coeffs[..=degree].to_vec();
        while let Some(q) = deflate(&current, &root) {
            roots.push(root.clone());
            current = q;
        }
    }
    roots.sort();
    Ok(roots)
}

/// Clears denominators and removes the content. Input is lowest degree first.
fn primitive_integer_coeffs(coeffs: &[Rat]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Divides by `(x - root)`; `None` if the remainder is nonzero or the input is constant.
fn deflate(coeffs: &[Rat], root: &Rat) -> Option<Vec<Rat>> {
    if coeffs.len() < 2 {
        return None;
    }
    let n = coeffs.len() - 1;
    let mut quotient = vec![Rat::zero(); n];
    let mut carry = Rat::zero();
    for k in (1..=n).rev() {
        carry = &coeffs[k] + carry * root;
        quotient[k - 1] = carry.clone();
    }
    let remainder = &coeffs[0] + carry * root;
    remainder.is_zero().then_some(quotient)
}

/// Distinct rational roots of an integer polynomial (lowest degree first,
/// nonzero leading coefficient).
fn distinct_rational_roots(ints: &[BigInt]) -> Vec<Rat> {
    let mut coeffs = ints.to_vec();
    let mut roots = Vec::new();
    if coeffs.len() > 1 && coeffs[0].is_zero() {
        roots.push(Rat::zero());
        while coeffs.len() > 1 && coeffs[0].is_zero() {
            coeffs.remove(0);
        }
    }
    match coeffs.len() {
        0 | 1 => {}
        2 => roots.push(Rat::new(-&coeffs[0], coeffs[1].clone())),
        3 => {
            let (c, b, a) = (&coeffs[0], &coeffs[1], &coeffs[2]);
            let disc = b * b - BigInt::from(4) * a * c;
            if !disc.is_negative() {
                let s = disc.sqrt();
                if &s * &s == disc {
                    let two_a = a * BigInt::from(2);
                    roots.push(Rat::new(-b + &s, two_a.clone()));
                    if !s.is_zero() {
                        roots.push(Rat::new(-b - &s, two_a));
                    }
                }
            }
        }
        4 => {
            // y = lead * x turns the cubic into y^3 + p y^2 + q y + r
            let lead = &coeffs[3];
            let p = coeffs[2].clone();
            let q = &coeffs[1] * lead;
            let r = &coeffs[0] * lead * lead;
            for y in monic_cubic_integer_roots(&p, &q, &r) {
                roots.push(Rat::new(y, lead.clone()));
            }
        }
        _ => unreachable!("degree is at most three"),
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Integer roots of `y^3 + p y^2 + q y + r`.
fn monic_cubic_integer_roots(p: &BigInt, q: &BigInt, r: &BigInt) -> Vec<BigInt> {
    let h = |y: &BigInt| ((y + p) * y + q) * y + r;
    let bound = BigInt::one() + p.abs().max(q.abs()).max(r.abs());
    let mut found = Vec::new();
    let three = BigInt::from(3);
    let crit = p * p - &three * q;
    if !crit.is_positive() {
        // nondecreasing everywhere
        if let Some(y) = bisect_monotone(&h, -&bound, bound.clone()) {
            found.push(y);
        }
    } else {
        // critical points (-p -+ sqrt(crit)) / 3, bracketed by integer windows
        let s = crit.sqrt();
        let windows: [(BigInt, BigInt); 2] = [
            (
                Integer::div_floor(&(-p - &s - 1), &three) - 1,
                Integer::div_ceil(&(-p - &s), &three) + 1,
            ),
            (
                Integer::div_floor(&(-p + &s), &three) - 1,
                Integer::div_ceil(&(-p + &s + 1), &three) + 1,
            ),
        ];
        for (lo, hi) in &windows {
            let mut y = lo.clone();
            while &y <= hi {
                if h(&y).is_zero() {
                    found.push(y.clone());
                }
                y += 1;
            }
        }
        let gaps = [
            (-&bound, &windows[0].0 - 1),
            (&windows[0].1 + 1, &windows[1].0 - 1),
            (&windows[1].1 + 1, bound.clone()),
        ];
        for (lo, hi) in gaps {
            let lo = lo.max(-&bound);
            let hi = hi.min(bound.clone());
            if lo <= hi {
                if let Some(y) = bisect_monotone(&h, lo, hi) {
                    found.push(y);
                }
            }
        }
    }
    found.sort();
    found.dedup();
    found
}

/// Finds an integer zero of a function that is monotone on `[lo, hi]`.
fn bisect_monotone<F>(h: &F, mut lo: BigInt, mut hi: BigInt) -> Option<BigInt>
where
    F: Fn(&BigInt) -> BigInt,
{
    let mut h_lo = h(&lo);
    if h_lo.is_zero() {
        return Some(lo);
    }
    let h_hi = h(&hi);
    if h_hi.is_zero() {
        return Some(hi);
    }
    if h_lo.sign() == h_hi.sign() {
        return None;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let h_mid = h(&mid);
        if h_mid.is_zero() {
            return Some(mid);
        }
        if h_mid.sign() == h_lo.sign() {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
        }
    }
    None
}

/// Primitive integer pair `(r, s)` with first nonzero entry positive.
fn normalize_pair(r: BigInt, s: BigInt) -> (BigInt, BigInt) {
    let g = r.gcd(&s);
    let (mut r, mut s) = (r / &g, s / &g);
    if r.is_negative() || (r.is_zero() && s.is_negative()) {
        r = -r;
        s = -s;
    }
    (r, s)
}

/// All rational linear factors `rX + sY` of `g`, as primitive integer pairs
/// with first nonzero entry positive, repeated according to multiplicity and
/// sorted.
pub fn linear_factors_binary_cubic(g: &BinaryCubicForm) -> Result<Vec<(BigInt, BigInt)>> {
    let coeffs = g.coeffs();
    if coeffs.iter().all(Zero::is_zero) {
        return Err(Error::ZeroForm);
    }
    let y_power = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut factors: Vec<(BigInt, BigInt)> =
        std::iter::repeat_n((BigInt::zero(), BigInt::one()), y_power).collect();
    // g(X, 1), lowest degree first
    let dehom = UniCubic::new(
        coeffs[3].clone(),
        coeffs[2].clone(),
        coeffs[1].clone(),
        coeffs[0].clone(),
    );
    for root in rational_roots_cubic(&dehom)? {
        let (p, q) = (root.numer().clone(), root.denom().clone());
        factors.push(normalize_pair(q, -p));
    }
    factors.sort();
    Ok(factors)
}

/// Which variable pair of a [`BiForm`] an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `(X1, Y1)`
    First,
    /// `(X2, Y2)`
    Second,
}

/// Bihomogeneous polynomial of bidegree `(m, n)` in `(X1, Y1; X2, Y2)`.
///
/// Entry `(i, j)` multiplies `X1^(m-i) Y1^i X2^(n-j) Y2^j`; storage is a dense
/// row-major grid of `(m+1) * (n+1)` rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    m: usize,
    n: usize,
    coeffs: Vec<Rat>,
}

impl BiForm {
    pub fn zero(m: usize, n: usize) -> Self {
        BiForm {
            m,
            n,
            coeffs: vec![Rat::zero(); (m + 1) * (n + 1)],
        }
    }

    /// Builds from a row-major grid; the length must be `(m+1)*(n+1)`.
    pub fn from_grid(m: usize, n: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != (m + 1) * (n + 1) {
            return Err(Error::Inconsistent(format!(
                "grid of {} entries does not match bidegree ({m},{n})",
                coeffs.len()
            )));
        }
        Ok(BiForm { m, n, coeffs })
    }

    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut coeffs = Vec::with_capacity((m + 1) * (n + 1));
        for i in 0..=m {
            for j in 0..=n {
                coeffs.push(f(i, j));
            }
        }
        BiForm { m, n, coeffs }
    }

    /// The bilinear form `c00 X1X2 + c01 X1Y2 + c10 Y1X2 + c11 Y1Y2`.
    pub fn bilinear(c00: Rat, c01: Rat, c10: Rat, c11: Rat) -> Self {
        BiForm {
            m: 1,
            n: 1,
            coeffs: vec![c00, c01, c10, c11],
        }
    }

    /// Product `left(X1, Y1) * right(X2, Y2)` of two binary forms given in
    /// descending powers of `X`.
    pub fn outer(left: &[Rat], right: &[Rat]) -> Self {
        assert!(!left.is_empty() && !right.is_empty());
        BiForm::from_fn(left.len() - 1, right.len() - 1, |i, j| &left[i] * &right[j])
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.coeffs[i * (self.n + 1) + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        let n = self.n;
        &mut self.coeffs[i * (n + 1) + j]
    }

    /// Row-major coefficient grid.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &BiForm) -> Result<BiForm> {
        self.check_same_bidegree(other)?;
        Ok(BiForm {
            m: self.m,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &BiForm) -> Result<BiForm> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> BiForm {
        BiForm {
            m: self.m,
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let mut out = BiForm::zero(self.m + other.m, self.n + other.n);
        for i in 0..=self.m {
            for j in 0..=self.n {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for k in 0..=other.m {
                    for l in 0..=other.n {
                        *out.get_mut(i + k, j + l) += c * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    fn check_same_bidegree(&self, other: &BiForm) -> Result<()> {
        if self.bidegree() != other.bidegree() {
            return Err(Error::Bidegree {
                expected: self.bidegree(),
                got: other.bidegree(),
            });
        }
        Ok(())
    }

    pub fn eval(&self, x1: &Rat, y1: &Rat, x2: &Rat, y2: &Rat) -> Rat {
        let rows: Vec<Rat> = (0..=self.m)
            .map(|i| {
                let row: Vec<Rat> = (0..=self.n).map(|j| self.get(i, j).clone()).collect();
                binary_eval(&row, x2, y2)
            })
            .collect();
        binary_eval(&rows, x1, y1)
    }

    /// Substitutes `(x, y)` for the chosen variable pair and returns the
    /// remaining binary form in descending powers of its `X`.
    pub fn specialize(&self, side: Side, x: &Rat, y: &Rat) -> Result<Vec<Rat>> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(match side {
            Side::First => (0..=self.n)
                .map(|j| {
                    let column: Vec<Rat> = (0..=self.m).map(|i| self.get(i, j).clone()).collect();
                    binary_eval(&column, x, y)
                })
                .collect(),
            Side::Second => (0..=self.m)
                .map(|i| {
                    let row: Vec<Rat> = (0..=self.n).map(|j| self.get(i, j).clone()).collect();
                    binary_eval(&row, x, y)
                })
                .collect(),
        })
    }

    /// Exact quotient by `divisor`, or `None` if it does not divide.
    ///
    /// Division runs in the monomial order that compares the exponent of `X2`
    /// first and then that of `X1`; a single divisor is a Groebner basis of
    /// its ideal, so divisibility is equivalent to a zero remainder.
    pub fn exact_divide(&self, divisor: &BiForm) -> Option<BiForm> {
        if divisor.m > self.m || divisor.n > self.n {
            return None;
        }
        let (lead_i, lead_j) = (0..=divisor.n)
            .flat_map(|j| (0..=divisor.m).map(move |i| (i, j)))
            .find(|&(i, j)| !divisor.get(i, j).is_zero())?;
        let lead = divisor.get(lead_i, lead_j).clone();
        let mut rem = self.clone();
        let mut quotient = BiForm::zero(self.m - divisor.m, self.n - divisor.n);
        for j in 0..=self.n {
            for i in 0..=self.m {
                if rem.get(i, j).is_zero() {
                    continue;
                }
                if i < lead_i
                    || j < lead_j
                    || i - lead_i > quotient.m
                    || j - lead_j > quotient.n
                {
                    return None;
                }
                let (qi, qj) = (i - lead_i, j - lead_j);
                let c = rem.get(i, j) / &lead;
                for k in 0..=divisor.m {
                    for l in 0..=divisor.n {
                        let d = divisor.get(k, l);
                        if !d.is_zero() {
                            *rem.get_mut(qi + k, qj + l) -= &c * d;
                        }
                    }
                }
                *quotient.get_mut(qi, qj) += c;
            }
        }
        debug_assert!(rem.is_zero());
        Some(quotient)
    }

    /// Integer multiple with content one and first nonzero coefficient
    /// (row-major) positive. The zero form is returned unchanged.
    pub fn canonical(&self) -> BiForm {
        let ints = primitive_integer_coeffs(&self.coeffs);
        let flip = ints
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.sign() == Sign::Minus);
        BiForm {
            m: self.m,
            n: self.n,
            coeffs: ints
                .into_iter()
                .map(|c| Rat::from_integer(if flip { -c } else { c }))
                .collect(),
        }
    }

    /// Numerators of the canonical scaling, used as a sort key.
    pub fn canonical_key(&self) -> Vec<BigInt> {
        self.canonical()
            .coeffs
            .iter()
            .map(|c| c.numer().clone())
            .collect()
    }
}

impl fmt::Display for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..=self.m {
            for j in 0..=self.n {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let monomial = [
                    ("X1", self.m - i),
                    ("Y1", i),
                    ("X2", self.n - j),
                    ("Y2", j),
                ]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
                let abs = c.abs();
                let sign = if c.is_negative() {
                    if first { "-" } else { " - " }
                } else if first {
                    ""
                } else {
                    " + "
                };
                write!(f, "{sign}")?;
                if monomial.is_empty() {
                    write!(f, "{abs}")?;
                } else if abs.is_one() {
                    write!(f, "{monomial}")?;
                } else {
                    write!(f, "{abs}*{monomial}")?;
                }
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact quotient `b / l` if `l` divides `b`.
pub fn biform_exact_divide(b: &BiForm, l: &BiForm) -> Option<BiForm> {
    b.exact_divide(l)
}

/// Substitutes `(x, y)` for one variable pair of a bidegree `(3, 3)` form and
/// returns the binary cubic in the other pair.
pub fn specialize_biform(b: &BiForm, side: Side, x: &Rat, y: &Rat) -> Result<BinaryCubicForm> {
    let remaining = match side {
        Side::First => b.n,
        Side::Second => b.m,
    };
    if remaining != 3 {
        return Err(Error::Bidegree {
            expected: (3, 3),
            got: b.bidegree(),
        });
    }
    let c = b.specialize(side, x, y)?;
    Ok(BinaryCubicForm::new(
        c[0].clone(),
        c[1].clone(),
        c[2].clone(),
        c[3].clone(),
    ))
}
