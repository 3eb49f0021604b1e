//! Slow, independent reference computations used to cross-check the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors from determinantal divisors: `d_k = D_k / D_{k-1}` with
/// `D_k` the gcd of all `k × k` minors. Length `min(rows, cols)`.
pub fn invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j].clone()).collect()).collect();
                g = g.gcd(&cofactor_det(&minor));
            }
        }
        if g.is_zero() {
            out.extend(std::iter::repeat(BigInt::zero()).take(rows.min(cols) - k + 1));
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Characteristic polynomial `det(xI − M)` by Faddeev–LeVerrier; coefficient
/// of `x^(n-k)` at index `k`.
pub fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, k| s + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::one()];
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[k - 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        coeffs.push(-trace / BigRational::from_integer(BigInt::from(k)));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Signature of a symmetric matrix from the signs of its characteristic
/// polynomial. All roots are real, so Descartes' rule is exact.
pub fn signature_by_char_poly(m: &[Vec<BigInt>]) -> i64 {
    let c = char_poly(m);
    let n = m.len();
    let positive = sign_changes(&c);
    // p(-x): coefficient of x^(n-k) picks up (-1)^(n-k)
    let reflected: Vec<BigRational> =
        c.iter().enumerate().map(|(k, x)| if (n - k) % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    let negative = sign_changes(&reflected);
    positive as i64 - negative as i64
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(BigInt::zero(), |s, k| s + &row[k] * &b[k][j])).collect())
        .collect()
}

pub fn transpose(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn ints(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
