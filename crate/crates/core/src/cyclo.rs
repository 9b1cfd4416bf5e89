//! Exact arithmetic in the cyclotomic field Q(zeta_m), with just enough
//! linear algebra for rank computations.

use num::{BigRational, One, Zero};

/// The field Q(zeta_m) presented as Q[x] modulo the m-th cyclotomic
/// polynomial.
#[derive(Debug, Clone)]
pub struct CycloField {
    pub m: u64,
    /// Monic modulus coefficients, constant term first, length deg + 1.
    pub modulus: Vec<BigRational>,
}

/// An element, coefficient vector of length deg(modulus).
pub type Elem = Vec<BigRational>;

fn zero() -> BigRational {
    BigRational::zero()
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Quotient and remainder of polynomial division.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![zero()], r);
    }
    let mut q = vec![zero(); r.len() - db];
    while r.len() > db || (r.len() == db + 1 && !r[db].is_zero() && db > 0) {
        let dr = r.len() - 1;
        if dr < db || (r.len() == 1 && r[0].is_zero()) {
            break;
        }
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let sub = &c * &b[i];
            r[dr - db + i] = &r[dr - db + i] - &sub;
        }
        poly_trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        if r.len() <= db {
            break;
        }
    }
    poly_trim(&mut r);
    (q, r)
}

/// The m-th cyclotomic polynomial, computed as (x^m - 1) divided by the
/// cyclotomic polynomials of the proper divisors.
pub fn cyclotomic_poly(m: u64) -> Vec<BigRational> {
    let mut num = vec![zero(); (m + 1) as usize];
    num[0] = -BigRational::one();
    num[m as usize] = BigRational::one();
    let mut result = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_poly(d);
            let (q, r) = poly_divmod(&result, &phi_d);
            debug_assert!(r.iter().all(|c| c.is_zero()));
            result = q;
        }
    }
    poly_trim(&mut result);
    result
}

impl CycloField {
    pub fn new(m: u64) -> CycloField {
        assert!(m >= 1);
        CycloField { m, modulus: cyclotomic_poly(m) }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Elem {
        vec![zero(); self.degree()]
    }

    pub fn one(&self) -> Elem {
        let mut e = self.zero();
        e[0] = BigRational::one();
        e
    }

    pub fn from_rational(&self, r: BigRational) -> Elem {
        let mut e = self.zero();
        e[0] = r;
        e
    }

    /// zeta_m^k reduced into the field.
    pub fn zeta_pow(&self, k: i64) -> Elem {
        let k = k.rem_euclid(self.m as i64) as usize;
        let mut p = vec![zero(); k + 1];
        p[k] = BigRational::one();
        self.reduce(p)
    }

    fn reduce(&self, p: Vec<BigRational>) -> Elem {
        let (_, r) = poly_divmod(&p, &self.modulus);
        let mut out = self.zero();
        for (i, c) in r.into_iter().enumerate() {
            if i < out.len() {
                out[i] = c;
            }
        }
        out
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, a: &Elem, c: &BigRational) -> Elem {
        a.iter().map(|x| x * c).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut p = vec![zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    let add = x * y;
                    p[i + j] = &p[i + j] + add;
                }
            }
        }
        self.reduce(p)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// Q[x]; the modulus is irreducible so every non-zero element is a
    /// unit.
    pub fn inv(&self, a: &Elem) -> Elem {
        assert!(!self.is_zero(a), "division by zero in Q(zeta)");
        // extended gcd of a and modulus
        let mut r0: Vec<BigRational> = self.modulus.clone();
        let mut r1: Vec<BigRational> = a.clone();
        poly_trim(&mut r1);
        let mut s0 = vec![zero()];
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divmod(&r0, &r1);
            // s_next = s0 - q * s1
            let mut qs = vec![zero(); q.len() + s1.len()];
            for (i, x) in q.iter().enumerate() {
                for (j, y) in s1.iter().enumerate() {
                    let add = x * y;
                    qs[i + j] = &qs[i + j] + add;
                }
            }
            let len = s0.len().max(qs.len());
            let mut s_next = vec![zero(); len];
            for (i, item) in s_next.iter_mut().enumerate() {
                let a0 = s0.get(i).cloned().unwrap_or_else(zero);
                let b0 = qs.get(i).cloned().unwrap_or_else(zero);
                *item = a0 - b0;
            }
            poly_trim(&mut s_next);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s_next;
        }
        // r0 is the gcd, a non-zero constant
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let inv_c = BigRational::one() / c;
        let scaled: Vec<BigRational> = s0.iter().map(|x| x * &inv_c).collect();
        self.reduce(scaled)
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(a, &self.inv(b))
    }

    /// Rank of a matrix over the field by Gaussian elimination.
    pub fn rank(&self, m: &[Vec<Elem>]) -> usize {
        if m.is_empty() {
            return 0;
        }
        let rows = m.len();
        let cols = m[0].len();
        let mut a: Vec<Vec<Elem>> = m.to_vec();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            let pivot = (row..rows).find(|&r| !self.is_zero(&a[r][col]));
            let Some(p) = pivot else { continue };
            a.swap(row, p);
            let inv = self.inv(&a[row][col]);
            for c in col..cols {
                a[row][c] = self.mul(&a[row][c], &inv);
            }
            for r in 0..rows {
                if r != row && !self.is_zero(&a[r][col]) {
                    let f = a[r][col].clone();
                    for c in col..cols {
                        let sub = self.mul(&f, &a[row][c]);
                        a[r][c] = self.sub(&a[r][c], &sub);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// If the element is rational, return it.
    pub fn as_rational(&self, a: &Elem) -> Option<BigRational> {
        if a.iter().skip(1).all(|c| c.is_zero()) {
            Some(a[0].clone())
        } else {
            None
        }
    }
}

/// Euler's totient, for sanity checks on cyclotomic degrees.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn cyclotomic_degrees_are_totients() {
        for m in 1..=30u64 {
            let phi = cyclotomic_poly(m);
            assert_eq!(phi.len() as u64 - 1, totient(m), "m={m}");
        }
    }

    #[test]
    fn known_cyclotomic_polys() {
        let as_i64 = |p: &[BigRational]| -> Vec<i64> {
            p.iter()
                .map(|c| {
                    assert!(c.is_integer());
                    c.to_integer().to_string().parse().unwrap()
                })
                .collect()
        };
        assert_eq!(as_i64(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(as_i64(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(as_i64(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_has_order_m() {
        for m in [3u64, 4, 5, 6, 8, 12] {
            let f = CycloField::new(m);
            let z = f.zeta_pow(1);
            let mut acc = f.one();
            for i in 1..=m {
                acc = f.mul(&acc, &z);
                if i < m {
                    assert!(acc != f.one(), "m={m} i={i}");
                }
            }
            assert_eq!(acc, f.one(), "m={m}");
        }
    }

    #[test]
    fn geometric_sum_vanishes() {
        for m in [3u64, 5, 7] {
            let f = CycloField::new(m);
            let mut acc = f.zero();
            for k in 0..m {
                acc = f.add(&acc, &f.zeta_pow(k as i64));
            }
            assert!(f.is_zero(&acc), "m={m}");
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CycloField::new(5);
        let a = f.add(&f.zeta_pow(1), &f.from_rational(BigRational::from_integer(BigInt::from(2))));
        let inv = f.inv(&a);
        assert_eq!(f.mul(&a, &inv), f.one());
        let b = f.sub(&f.zeta_pow(3), &f.zeta_pow(2));
        assert_eq!(f.mul(&b, &f.inv(&b)), f.one());
    }

    #[test]
    fn rank_of_vandermonde_is_full() {
        // the character table of Z/m is a Vandermonde matrix in zeta_m
        for m in [2u64, 3, 5] {
            let f = CycloField::new(m);
            let mat: Vec<Vec<Elem>> = (0..m)
                .map(|i| (0..m).map(|j| f.zeta_pow((i * j) as i64)).collect())
                .collect();
            assert_eq!(f.rank(&mat), m as usize, "m={m}");
        }
    }

    #[test]
    fn rank_detects_dependence() {
        let f = CycloField::new(4);
        let row: Vec<Elem> = vec![f.one(), f.zeta_pow(1)];
        let scaled: Vec<Elem> = row.iter().map(|e| f.mul(e, &f.zeta_pow(1))).collect();
        assert_eq!(f.rank(&[row, scaled]), 1);
    }
}
