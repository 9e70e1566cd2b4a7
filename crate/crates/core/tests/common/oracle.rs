//! Slow, obviously-correct reference implementations. Nothing here calls
//! into the library's enumeration or elimination code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Rank over `Q` by textbook Gaussian elimination on dense rationals.
pub fn dense_rank_q(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][col].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone() * &inv;
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= y * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `GF(p)` by dense elimination in `u128`.
pub fn dense_rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as u128;
    let mut a: Vec<Vec<u128>> =
        rows.iter().map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p as i128) as u128).collect()).collect();
    let n_cols = a.first().map_or(0, Vec::len);
    let pow = |mut b: u128, mut e: u128| {
        let mut acc = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow(a[rank][col], p - 2);
        for r in 0..a.len() {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col] * inv % p;
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x = (*x + p - y * f % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn transpose(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n_cols = rows.first().map_or(0, Vec::len);
    (0..n_cols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let n_cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..n_cols).map(|c| (0..inner).map(|t| row[t] * b[t][c]).sum()).collect())
        .collect()
}

pub fn random_01(rng: &mut impl Rng, max_dim: usize, density: f64) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    (0..r).map(|_| (0..c).map(|_| i64::from(rng.gen_bool(density))).collect()).collect()
}

/// Facets of `vdw(n, k)` by checking every `(k+1)`-subset for being a progression.
pub fn brute_vdw_facets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: u32, n: u32, size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            let d = cur[1] - cur[0];
            if cur.windows(2).all(|w| w[1] - w[0] == d) {
                out.push(cur.clone());
            }
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k as usize + 1, &mut cur, &mut out);
    out
}

/// All faces (including the empty one) spanned by `facets`, grouped by size
/// and sorted lexicographically.
pub fn faces_by_size(facets: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let mut all = BTreeSet::new();
    for f in facets {
        for mask in 0u64..(1 << f.len()) {
            let s: Vec<u32> = f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            all.insert(s);
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![Vec::new(); top + 1];
    for s in all {
        out[s.len()].push(s);
    }
    out
}

/// Dense matrix of `×ℓ : A_i -> A_{i+1}` (rows: degree `i + 1`).
pub fn ell_matrix(faces: &[Vec<Vec<u32>>], i: usize) -> Vec<Vec<i64>> {
    let empty = Vec::new();
    let src = faces.get(i).unwrap_or(&empty);
    let dst = faces.get(i + 1).unwrap_or(&empty);
    dst.iter()
        .map(|t| src.iter().map(|s| i64::from(s.iter().all(|v| t.contains(v)))).collect())
        .collect()
}

/// `×ℓ^d` as the composition of `d` single multiplications.
pub fn ell_power_matrix(faces: &[Vec<Vec<u32>>], i: usize, d: usize) -> Vec<Vec<i64>> {
    let mut m = ell_matrix(faces, i);
    for step in 1..d {
        m = mat_mul(&ell_matrix(faces, i + step), &m);
    }
    m
}

pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
