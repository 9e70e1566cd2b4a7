//! Elimination over `GF(p)` for odd primes `p < 2^32`.

use super::engine::{self, Domain, Echelon, Overflow, Row};

#[derive(Clone, Copy, Debug)]
pub(crate) struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < 1 << 32);
        PrimeField { p }
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn pivot_cost(&self, _: &u64) -> u64 {
        0
    }

    fn prepare_pivot(&self, row: &mut Row<u64>, col: u32) -> Result<(), Overflow> {
        let inv = self.inv(*engine::entry(row, col).unwrap());
        for (_, v) in row.iter_mut() {
            *v = self.mul(*v, inv);
        }
        Ok(())
    }

    fn eliminate(&self, target: &Row<u64>, pivot: &Row<u64>, col: u32, out: &mut Row<u64>) -> Result<(), Overflow> {
        // pivot is normalized to 1 on `col`
        let factor = *engine::entry(target, col).unwrap();
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            match (target.get(i), pivot.get(j)) {
                (Some(&(a, x)), Some(&(b, y))) if a == b => {
                    let v = self.sub(x, self.mul(factor, y));
                    if v != 0 {
                        out.push((a, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(a, x)), Some(&(b, _))) if a < b => {
                    out.push((a, x));
                    i += 1;
                }
                (Some(&(a, x)), None) => {
                    out.push((a, x));
                    i += 1;
                }
                (_, Some(&(b, y))) => {
                    out.push((b, self.sub(0, self.mul(factor, y))));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Ok(())
    }
}

pub(crate) fn echelon(field: PrimeField, n_cols: usize, rows: Vec<Vec<(usize, i64)>>) -> Echelon<u64> {
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (c as u32, field.reduce(v))).collect())
        .collect();
    engine::eliminate(&field, n_cols, rows).expect("modular arithmetic cannot overflow")
}

/// Kernel basis mod `p`, one vector per free column (1 on that column, 0 on
/// the other free columns).
pub(crate) fn kernel(field: PrimeField, ech: &Echelon<u64>, free: &[u32]) -> Vec<Vec<u64>> {
    let mut basis = Vec::with_capacity(free.len());
    for &f in free {
        let mut x = vec![0u64; ech.n_cols];
        x[f as usize] = 1;
        for (col, row) in ech.pivots.iter().rev() {
            // pivot rows are normalized: x_col = -sum_{j != col} a_j x_j
            let mut acc = 0u64;
            for &(j, a) in row {
                if j != *col {
                    acc = (acc + field.mul(a, x[j as usize])) % field.p;
                }
            }
            x[*col as usize] = field.sub(0, acc);
        }
        basis.push(x);
    }
    basis
}
