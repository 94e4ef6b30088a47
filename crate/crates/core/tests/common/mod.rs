//! Independent oracles shared by the integration tests. Everything here works
//! on small machine integers and avoids the library's own algorithms.

#![allow(dead_code)]

use cubiform::{BinaryCubicForm, Mat2};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

pub type Poly2 = Vec<i128>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn disc_oracle([a, b, c, d]: [i64; 4]) -> i128 {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
}

pub fn is_square_i128(n: i128) -> bool {
    if n <= 0 {
        return false;
    }
    let r = (n as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).any(|k| k >= 0 && k * k == n)
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|k| n % k == 0).collect()
}

/// Roots `p/q` of `g(X, 1)` by brute candidate enumeration, deduplicated and
/// sorted, plus whether `(1 : 0)` is a root.
pub fn roots_oracle(c: [i64; 4]) -> (Vec<BigRational>, bool) {
    let [a, b, cc, d] = c;
    let at_infinity = a == 0;
    let lowest = [d, cc, b, a].into_iter().find(|&x| x != 0).unwrap_or(0);
    let highest = [a, b, cc, d].into_iter().find(|&x| x != 0).unwrap_or(0);
    let mut roots = Vec::new();
    let eval = |p: i64, qd: i64| {
        let (p, qd) = (p as i128, qd as i128);
        a as i128 * p * p * p + b as i128 * p * p * qd + cc as i128 * p * qd * qd + d as i128 * qd * qd * qd
    };
    if d == 0 {
        roots.push(q(0));
    }
    for p in divisors(lowest) {
        for qd in divisors(highest) {
            for sp in [p, -p] {
                if eval(sp, qd) == 0 {
                    roots.push(qf(sp, qd));
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    (roots, at_infinity)
}

pub fn reducible_oracle(c: [i64; 4]) -> bool {
    let (roots, inf) = roots_oracle(c);
    inf || !roots.is_empty()
}

pub fn form(c: [i64; 4]) -> BinaryCubicForm {
    BinaryCubicForm::from_ints(c[0], c[1], c[2], c[3])
}

/// Random integer form with coefficients in `[-9, 9]` and nonzero discriminant.
pub fn random_coeffs(rng: &mut StdRng) -> [i64; 4] {
    loop {
        let c = [
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
        ];
        if disc_oracle(c) != 0 {
            return c;
        }
    }
}

pub fn random_irreducible(rng: &mut StdRng) -> [i64; 4] {
    loop {
        let c = random_coeffs(rng);
        if !reducible_oracle(c) {
            return c;
        }
    }
}

/// Random element of `SL(2, Z)` with entries in `[-bound, bound]`.
pub fn random_sl2(rng: &mut StdRng, bound: i64) -> Mat2 {
    loop {
        let e: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-bound..=bound));
        if e[0] * e[3] - e[1] * e[2] == 1 {
            return Mat2::from_ints(e[0], e[1], e[2], e[3]);
        }
    }
}

// Dense binary forms in descending powers of X, over i128.

pub fn pmul(p: &[i128], r: &[i128]) -> Poly2 {
    let mut out = vec![0; p.len() + r.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in r.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn padd(p: &[i128], r: &[i128]) -> Poly2 {
    assert_eq!(p.len(), r.len());
    p.iter().zip(r).map(|(x, y)| x + y).collect()
}

pub fn pscale(p: &[i128], k: i128) -> Poly2 {
    p.iter().map(|x| x * k).collect()
}

/// Partial derivatives of a binary form of degree `n`.
pub fn dx(p: &[i128]) -> Poly2 {
    let n = p.len() as i128 - 1;
    p.iter().take(p.len() - 1).enumerate().map(|(i, c)| c * (n - i as i128)).collect()
}

pub fn dy(p: &[i128]) -> Poly2 {
    p.iter().enumerate().skip(1).map(|(i, c)| c * i as i128).collect()
}

/// Hessian covariant `-(g_XX g_YY - g_XY^2)/4` and cubic covariant
/// `-(g_X H_Y - g_Y H_X)`, computed from derivatives.
pub fn covariants_oracle(c: [i64; 4]) -> (Poly2, Poly2) {
    let g: Poly2 = c.iter().map(|&x| x as i128).collect();
    let gxx = dx(&dx(&g));
    let gyy = dy(&dy(&g));
    let gxy = dx(&dy(&g));
    let hess = padd(&pmul(&gxx, &gyy), &pscale(&pmul(&gxy, &gxy), -1));
    assert!(hess.iter().all(|x| x % 4 == 0));
    let h: Poly2 = hess.iter().map(|x| -x / 4).collect();
    let jac = padd(&pmul(&dx(&g), &dy(&h)), &pscale(&pmul(&dy(&g), &dx(&h)), -1));
    let cov = pscale(&jac, -1);
    (h, cov)
}

pub fn as_rats(p: &[i128]) -> Vec<BigRational> {
    p.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
}
