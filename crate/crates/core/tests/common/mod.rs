//! Test-only oracles and generators. Nothing here calls the reducer, the
//! kernel code or the witness construction.

#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use nilpotent_rref::{Field, Matrix, RowOp, RowScript, Scalar};

pub type Dense = Vec<Vec<BigRational>>;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational entries of a matrix over Q.
pub fn to_dense(m: &Matrix) -> Dense {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|s| s.as_rational().unwrap().clone()).collect())
        .collect()
}

pub fn from_dense(d: &Dense) -> Matrix {
    let rows = d
        .iter()
        .map(|r| r.iter().cloned().map(Scalar::from_rational).collect())
        .collect();
    Matrix::from_rows(Field::RATIONALS, rows).unwrap()
}

/// Triple-loop product.
pub fn naive_mul(a: &Dense, b: &Dense) -> Dense {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            for t in 0..k {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
    }
    out
}

/// Gauss–Jordan with bottom-most pivoting and two-phase elimination, a
/// different path from the library reducer. RREF is unique, so the results
/// must agree.
pub fn naive_rref(m: &Dense) -> Dense {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).rev().find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            let f = &a[i][c] / &a[r][c];
            for j in 0..cols {
                let d = &f * &a[r][j];
                a[i][j] -= d;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    // back substitution, bottom row first
    for i in (0..rows).rev() {
        let Some(c) = (0..cols).find(|&j| !a[i][j].is_zero()) else {
            continue;
        };
        let lead = a[i][c].clone();
        for j in 0..cols {
            a[i][j] = &a[i][j] / &lead;
        }
        for k in 0..i {
            let f = a[k][c].clone();
            for j in 0..cols {
                let d = &f * &a[i][j];
                a[k][j] -= d;
            }
        }
    }
    a
}

/// Determinant mod p by cofactor expansion.
pub fn det_mod(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    if n == 1 {
        return m[0][0] % p;
    }
    let mut acc = 0u64;
    for j in 0..n {
        let minor: Vec<Vec<u64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
            .collect();
        let term = m[0][j] * det_mod(&minor, p) % p;
        acc = if j % 2 == 0 { (acc + term) % p } else { (acc + p - term) % p };
    }
    acc
}

/// |GL(n, q)| = Π_{i<n} (q^n - q^i).
pub fn gl_order(n: u32, q: u64) -> u64 {
    (0..n).map(|i| q.pow(n) - q.pow(i)).product()
}

/// Every n×n matrix over GF(p), as residue rows, in lexicographic order.
pub fn all_matrices(n: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let total = p.pow((n * n) as u32);
    (0..total)
        .map(|mut code| {
            let mut rows = vec![vec![0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    rows[i][j] = code % p;
                    code /= p;
                }
            }
            rows
        })
        .collect()
}

pub fn gf_matrix(rows: &[Vec<u64>], p: u64) -> Matrix {
    let f = Field::prime(p).unwrap();
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&v| Scalar::from_i64(f, v as i64)).collect())
        .collect();
    Matrix::from_rows(f, rows).unwrap()
}

pub fn random_scalar(rng: &mut ChaCha8Rng, field: Field, nonzero: bool) -> Scalar {
    loop {
        let s = match field.modulus() {
            None => Scalar::from_ratio(field, rng.gen_range(-9..=9), rng.gen_range(1..=5)).unwrap(),
            Some(p) => Scalar::from_i64(field, rng.gen_range(0..p as i64)),
        };
        if !nonzero || !s.is_zero() {
            return s;
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols).map(|_| random_scalar(rng, field, false)).collect();
    Matrix::new(field, rows, cols, entries).unwrap()
}

pub fn random_op(rng: &mut ChaCha8Rng, field: Field, rows: usize) -> RowOp {
    let i = rng.gen_range(1..=rows);
    let mut j = rng.gen_range(1..=rows);
    if rows > 1 {
        while j == i {
            j = rng.gen_range(1..=rows);
        }
    }
    match rng.gen_range(0..3) {
        0 if rows > 1 => RowOp::swap(i, j).unwrap(),
        1 => RowOp::scale(i, random_scalar(rng, field, true)).unwrap(),
        _ if rows > 1 => RowOp::add_mul(i, random_scalar(rng, field, false), j).unwrap(),
        _ => RowOp::scale(i, random_scalar(rng, field, true)).unwrap(),
    }
}

pub fn random_script(rng: &mut ChaCha8Rng, field: Field, rows: usize, len: usize) -> RowScript {
    (0..len).map(|_| random_op(rng, field, rows)).collect()
}

/// A product of `ops` random elementary operations, applied to I.
pub fn random_invertible(rng: &mut ChaCha8Rng, field: Field, n: usize, ops: usize) -> Matrix {
    Matrix::identity(field, n).apply(&random_script(rng, field, n, ops)).unwrap()
}

/// `P · Z · Q` with `Z` random except for at least one zero row, and `P`,
/// `Q` random invertible. Singular by construction.
pub fn random_singular(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Matrix {
    let mut z = random_matrix(rng, field, n, n);
    let zero_rows = rng.gen_range(1..=n);
    let mut rows: Vec<Vec<Scalar>> = (0..n).map(|i| z.row(i).to_vec()).collect();
    for _ in 0..zero_rows {
        let r = rng.gen_range(0..n);
        rows[r] = vec![field.zero(); n];
    }
    z = Matrix::from_rows(field, rows).unwrap();
    let p = random_invertible(rng, field, n, 10);
    let q = random_invertible(rng, field, n, 10);
    p.mul(&z).unwrap().mul(&q).unwrap()
}
