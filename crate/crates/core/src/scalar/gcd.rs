//! Multivariate gcd over ℚ(i) by recursive content extraction and
//! primitive pseudo-remainder sequences.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::gaussian::GaussianRational;
use super::poly::{Poly, NVARS};

/// Integer points for the evaluation test in [`gcd_free_of`].
const POINTS: [[i64; NVARS]; 3] = [
    [3, 5, 7, 11, 13, 17, 19],
    [-2, 9, 4, -7, 6, 15, -10],
    [23, -6, 29, 8, -31, 5, 37],
];

/// Monic gcd of two polynomials. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.meet(&mb);
    if a.is_monomial() || b.is_monomial() {
        return Poly::term(mono, super::gaussian::GaussianRational::one());
    }
    let a = a.div_monomial(&ma);
    let b = b.div_monomial(&mb);
    let g = gcd_no_monomial(a, b);
    if mono.is_one() {
        g
    } else {
        g.mul_monomial(&mono)
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let coeffs = p.coeffs_in(v);
    let mut g = Poly::zero();
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn gcd_no_monomial(mut a: Poly, mut b: Poly) -> Poly {
    // variables occurring in only one argument can be projected out by content
    loop {
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let mut changed = false;
        for v in 0..NVARS {
            let (ua, ub) = (a.uses_var(v), b.uses_var(v));
            if ua && !ub {
                a = content_in(&a, v);
                changed = true;
            } else if ub && !ua {
                b = content_in(&b, v);
                changed = true;
            }
            if a.is_constant() || b.is_constant() {
                return Poly::one();
            }
        }
        if !changed {
            break;
        }
    }
    if a.is_monomial() || b.is_monomial() {
        return gcd(&a, &b);
    }
    // Both now use the same variables. Drop those the gcd cannot involve; if
    // that is all of them the gcd is 1, which is the usual case and avoids
    // pseudo-remainder sequences entirely.
    let shared: Vec<usize> = (0..NVARS).filter(|&v| a.uses_var(v)).collect();
    let free: Vec<usize> = shared
        .iter()
        .copied()
        .filter(|&v| gcd_free_of(&a, &b, v))
        .collect();
    if free.len() == shared.len() {
        return Poly::one();
    }
    if !free.is_empty() {
        for &v in &free {
            a = content_in(&a, v);
            b = content_in(&b, v);
        }
        return gcd(&a, &b);
    }
    // main variable: the shared one with the smallest degree
    let v = (0..NVARS)
        .filter(|&v| a.uses_var(v))
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-constant polynomial uses a variable");

    let mut ca = a.coeffs_in(v);
    let mut cb = b.coeffs_in(v);
    let cont_a = fold_gcd(&ca);
    let cont_b = fold_gcd(&cb);
    let cont = gcd(&cont_a, &cont_b);
    if !cont_a.is_one() {
        ca = ca.iter().map(|c| exact(c, &cont_a)).collect();
    }
    if !cont_b.is_one() {
        cb = cb.iter().map(|c| exact(c, &cont_b)).collect();
    }
    if ca.len() < cb.len() {
        std::mem::swap(&mut ca, &mut cb);
    }
    loop {
        let r = pseudo_rem(&ca, &cb);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            // constant in v: primitive gcd is trivial
            return cont.monic();
        }
        ca = cb;
        cb = primitive(r);
    }
    let pg = Poly::from_coeffs_in(v, &primitive(cb));
    pg.mul(&cont).monic()
}

/// True when `gcd(a, b)` certainly has degree 0 in `v`.
///
/// At a point where the leading coefficient of `a` in `v` survives, the
/// image of the gcd keeps its degree in `v` and divides the univariate gcd
/// of the images. A constant univariate gcd therefore rules `v` out.
fn gcd_free_of(a: &Poly, b: &Poly, v: usize) -> bool {
    let (ca, cb) = (a.coeffs_in(v), b.coeffs_in(v));
    for point in &POINTS {
        let ia: Vec<GaussianRational> = ca.iter().map(|c| eval_at(c, point)).collect();
        if ia.last().is_none_or(GaussianRational::is_zero) {
            continue;
        }
        let ib: Vec<GaussianRational> = cb.iter().map(|c| eval_at(c, point)).collect();
        if univariate_gcd_degree(ia, ib) == 0 {
            return true;
        }
    }
    false
}

fn eval_at(p: &Poly, point: &[i64; NVARS]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (m, c) in p.terms() {
        let mut value = BigInt::from(1);
        for (v, &x) in point.iter().enumerate() {
            let e = m.exp(v);
            if e > 0 {
                value *= BigInt::from(x).pow(e);
            }
        }
        acc += &c.scale(&BigRational::from_integer(value));
    }
    acc
}

/// Degree of the gcd of two dense univariate polynomials (index = degree).
fn univariate_gcd_degree(mut a: Vec<GaussianRational>, mut b: Vec<GaussianRational>) -> usize {
    let strip = |v: &mut Vec<GaussianRational>| {
        while v.last().is_some_and(GaussianRational::is_zero) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = b
            .last()
            .unwrap()
            .inv()
            .expect("nonzero leading coefficient");
        let db = b.len() - 1;
        while a.len() > db {
            let q = a.last().unwrap() * &inv;
            let shift = a.len() - 1 - db;
            for (k, bc) in b.iter().enumerate() {
                a[k + shift] -= &(&q * bc);
            }
            a.pop();
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn fold_gcd(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn exact(p: &Poly, d: &Poly) -> Poly {
    p.div_exact(d).expect("content divides every coefficient")
}

fn primitive(coeffs: Vec<Poly>) -> Vec<Poly> {
    let g = fold_gcd(&coeffs);
    if g.is_one() {
        coeffs
    } else {
        coeffs.iter().map(|c| exact(c, &g)).collect()
    }
}

/// Sparse pseudo-remainder of dense coefficient vectors (index = degree).
/// Leading zeros are trimmed from the result.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&bc.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gaussian::GaussianRational;
    use crate::scalar::poly::Var;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }
    fn k(n: i64) -> Poly {
        Poly::constant(GaussianRational::from_int(n))
    }

    #[test]
    fn univariate() {
        let a = v(Var::A);
        let x = a.mul(&a).sub(&k(1));
        let y = a.sub(&k(1)).mul(&a.add(&k(2)));
        assert_eq!(gcd(&x, &y), a.sub(&k(1)));
    }

    #[test]
    fn multivariate_common_factor() {
        let (s, a, c) = (v(Var::S), v(Var::A), v(Var::C));
        let common = s
            .mul(&a)
            .sub(&c.scale(&GaussianRational::ratio(1, 2)))
            .add(&k(3));
        let x = common.mul(&s.add(&a));
        let y = common.mul(&a.mul(&a).sub(&c)).mul(&s);
        assert_eq!(gcd(&x, &y), common.monic());
    }

    #[test]
    fn monomial_factors() {
        let (s, a) = (v(Var::S), v(Var::A));
        let x = s.pow(3).mul(&a.add(&k(1)));
        let y = s.pow(2).mul(&a);
        assert_eq!(gcd(&x, &y), s.pow(2));
        assert_eq!(gcd(&s.pow(2), &s.pow(3).add(&s)), s);
    }

    #[test]
    fn gaussian_coefficients() {
        let a = v(Var::A);
        let i = Poly::constant(GaussianRational::i());
        let x = a.mul(&a).add(&k(1));
        let y = a.sub(&i).mul(&a.add(&k(3)));
        assert_eq!(gcd(&x, &y), a.sub(&i));
    }

    #[test]
    fn partial_variable_elimination() {
        let (s, a, b, c) = (v(Var::S), v(Var::A), v(Var::B), v(Var::C));
        let common = s.mul(&s).add(&a.mul(&c)).add(&k(2));
        let x = common.mul(&b.add(&s)).mul(&c.sub(&k(1)));
        let y = common.mul(&b.mul(&a).sub(&s)).mul(&c.add(&a));
        assert_eq!(gcd(&x, &y), common.monic());
        assert!(gcd(&b.add(&s).mul(&c), &b.mul(&a).sub(&c)).is_one());
    }

    #[test]
    fn univariate_images() {
        let g = |v: &[i64]| {
            v.iter()
                .map(|n| GaussianRational::from_int(*n))
                .collect::<Vec<_>>()
        };
        // (x - 1)(x + 2) and (x - 1)(x - 3)
        assert_eq!(univariate_gcd_degree(g(&[-2, 1, 1]), g(&[3, -4, 1])), 1);
        assert_eq!(univariate_gcd_degree(g(&[1, 1]), g(&[-1, 1])), 0);
        assert_eq!(univariate_gcd_degree(g(&[0, 0, 1]), g(&[0, 1])), 1);
    }

    #[test]
    fn coprime() {
        let (s, a) = (v(Var::S), v(Var::A));
        assert!(gcd(&s.add(&a), &s.sub(&a)).is_one());
    }
}
