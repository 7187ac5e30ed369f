//! Exact arithmetic in the cyclotomic field ℚ(ζ_m), realized as the quotient
//! of ℚ-polynomials by Φ_m. Elements are coefficient vectors of length
//! deg Φ_m; all operations reduce modulo the cyclotomic polynomial and
//! inverses come from the extended Euclidean algorithm.

use num::{BigInt, BigRational, One, Zero};

use crate::lincomb::Coeff;

/// Dense little-endian polynomial over ℚ with trimmed trailing zeros.
type Poly = Vec<Coeff>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_deg(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Coeff::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca.clone() * cb.clone();
        }
    }
    trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), Coeff::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        out[i] -= cb.clone();
    }
    trim(out)
}

fn poly_scale(a: &Poly, c: &Coeff) -> Poly {
    if c.is_zero() {
        return vec![];
    }
    a.iter().map(|x| x.clone() * c.clone()).collect()
}

/// Quotient and remainder of polynomial division; the divisor must be
/// nonzero.
fn poly_divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = poly_deg(b).expect("nonzero divisor");
    let lead = b[db].clone();
    let mut rem = a.clone();
    let mut quot: Poly = vec![];
    while let Some(dr) = poly_deg(&rem) {
        if dr < db {
            break;
        }
        let factor = rem[dr].clone() / lead.clone();
        let shift = dr - db;
        if quot.len() < shift + 1 {
            quot.resize(shift + 1, Coeff::zero());
        }
        quot[shift] = factor.clone();
        let mut sub = vec![Coeff::zero(); shift];
        sub.extend(poly_scale(b, &factor));
        rem = poly_sub(&rem, &sub);
    }
    (trim(quot), rem)
}

/// The m-th cyclotomic polynomial, with integer coefficients, computed by
/// dividing `x^m − 1` by the cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(m: usize) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut numer: Poly = vec![-Coeff::one()];
    numer.extend(std::iter::repeat_n(Coeff::zero(), m - 1));
    numer.push(Coeff::one());
    let mut denom: Poly = vec![Coeff::one()];
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d: Poly = cyclotomic_poly(d)
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            denom = poly_mul(&denom, &phi_d);
        }
    }
    let (quot, rem) = poly_divmod(&numer, &denom);
    assert!(rem.is_empty(), "cyclotomic division is exact");
    quot.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "cyclotomic coefficients are integers");
            c.to_integer()
        })
        .collect()
}

/// An element of ℚ(ζ_m): a polynomial in ζ of degree < deg Φ_m with rational
/// coefficients, stored as a fixed-length vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycScalar {
    coeffs: Vec<Coeff>,
}

impl CycScalar {
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational part if the element lies in ℚ, else `None`.
    pub fn as_rational(&self) -> Option<Coeff> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_display(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let num = format!("{}/{}", c.numer(), c.denom());
            match i {
                0 => parts.push(num),
                1 => parts.push(format!("{num}·z")),
                _ => parts.push(format!("{num}·z^{i}")),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// The field ℚ(ζ_m); owns the modulus and provides all arithmetic.
#[derive(Clone, Debug)]
pub struct CycField {
    m: usize,
    phi: Poly,
    degree: usize,
}

impl CycField {
    pub fn new(m: usize) -> Self {
        let phi: Poly = cyclotomic_poly(m)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let degree = phi.len() - 1;
        CycField { m, phi, degree }
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce(&self, p: Poly) -> CycScalar {
        let (_, rem) = poly_divmod(&p, &self.phi);
        let mut coeffs = rem;
        coeffs.resize(self.degree, Coeff::zero());
        CycScalar { coeffs }
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar {
            coeffs: vec![Coeff::zero(); self.degree],
        }
    }

    pub fn one(&self) -> CycScalar {
        self.from_rational(Coeff::one())
    }

    pub fn from_rational(&self, c: Coeff) -> CycScalar {
        let mut coeffs = vec![Coeff::zero(); self.degree];
        coeffs[0] = c;
        CycScalar { coeffs }
    }

    pub fn from_integer(&self, n: i64) -> CycScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The primitive m-th root of unity ζ itself.
    pub fn zeta(&self) -> CycScalar {
        if self.degree == 1 {
            // Φ_m linear: ζ is the rational root −phi[0]
            return self.from_rational(-self.phi[0].clone());
        }
        let mut coeffs = vec![Coeff::zero(); self.degree];
        coeffs[1] = Coeff::one();
        CycScalar { coeffs }
    }

    pub fn add(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        }
    }

    pub fn sub(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x.clone() - y.clone())
                .collect(),
        }
    }

    pub fn neg(&self, a: &CycScalar) -> CycScalar {
        CycScalar {
            coeffs: a.coeffs.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        self.reduce(poly_mul(&trim(a.coeffs.clone()), &trim(b.coeffs.clone())))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm; Φ_m is
    /// irreducible over ℚ, so every nonzero element is invertible.
    pub fn inv(&self, a: &CycScalar) -> Option<CycScalar> {
        if a.is_zero() {
            return None;
        }
        // extended gcd of a (as polynomial) and Φ
        let mut r0 = self.phi.clone();
        let mut r1 = trim(a.coeffs.clone());
        let mut s0: Poly = vec![];
        let mut s1: Poly = vec![Coeff::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 = gcd, a constant since Φ is irreducible and a ≠ 0 mod Φ
        debug_assert_eq!(poly_deg(&r0), Some(0));
        let g = r0[0].clone();
        Some(self.reduce(poly_scale(&s0, &(Coeff::one() / g))))
    }

    pub fn pow(&self, a: &CycScalar, mut e: usize) -> CycScalar {
        let mut base = a.clone();
        let mut out = self.one();
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(&out, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_multiplicative_order_m() {
        for m in [2usize, 3, 4, 5, 6] {
            let f = CycField::new(m);
            let z = f.zeta();
            assert_eq!(f.pow(&z, m), f.one());
            for k in 1..m {
                assert_ne!(f.pow(&z, k), f.one(), "ζ_{m}^{k} = 1 too early");
            }
        }
    }

    #[test]
    fn field_inverse() {
        let f = CycField::new(5);
        let z = f.zeta();
        let a = f.add(&z, &f.from_integer(3));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn quadratic_field_sanity() {
        // in ℚ(ζ_3): 1 + ζ + ζ² = 0
        let f = CycField::new(3);
        let z = f.zeta();
        let sum = f.add(&f.add(&f.one(), &z), &f.mul(&z, &z));
        assert!(sum.is_zero());
    }
}
