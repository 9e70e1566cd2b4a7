//! Fraction-free elimination over the integers.
//!
//! A target row `t` is replaced by `(p/g) t - (t_c/g) P` with
//! `g = gcd(p, t_c)`, then divided by its content, so all arithmetic stays in
//! `Z` and no row ever carries a common factor. Rows are kept in `i128`
//! until an operation overflows, at which point the whole elimination is
//! redone over big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::engine::{self, Domain, Echelon, Overflow, Row};

pub(crate) trait ExactInt: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_bits(&self) -> u64;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    /// `a*x - b*y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_bits(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        *self / *other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_bits(&self) -> u64 {
        self.bits()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
}

pub(crate) struct FractionFree<I>(std::marker::PhantomData<I>);

impl<I> FractionFree<I> {
    fn new() -> Self {
        FractionFree(std::marker::PhantomData)
    }
}

fn make_primitive<I: ExactInt>(row: &mut Row<I>) {
    let mut g = row[0].1.clone();
    for (_, v) in &row[1..] {
        if g.magnitude_bits() <= 1 {
            break;
        }
        g = g.gcd(v);
    }
    let g = if g.is_negative() { g.neg() } else { g };
    if g.magnitude_bits() > 1 {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

impl<I: ExactInt> Domain for FractionFree<I> {
    type Elem = I;

    fn is_zero(&self, a: &I) -> bool {
        a.is_zero()
    }

    fn pivot_cost(&self, a: &I) -> u64 {
        a.magnitude_bits()
    }

    fn prepare_pivot(&self, row: &mut Row<I>, col: u32) -> Result<(), Overflow> {
        make_primitive(row);
        if engine::entry(row, col).unwrap().is_negative() {
            for (_, v) in row.iter_mut() {
                *v = v.neg();
            }
        }
        Ok(())
    }

    fn eliminate(&self, target: &Row<I>, pivot: &Row<I>, col: u32, out: &mut Row<I>) -> Result<(), Overflow> {
        let p = engine::entry(pivot, col).unwrap();
        let t = engine::entry(target, col).unwrap();
        let g = p.gcd(t);
        let a = p.div_exact(&g);
        let b = t.div_exact(&g);
        let unit_a = a.magnitude_bits() == 1 && !a.is_negative();
        let zero = I::from_i64(0);
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            match (target.get(i), pivot.get(j)) {
                (Some((c1, x)), Some((c2, y))) if c1 == c2 => {
                    let v = I::mul_sub(&a, x, &b, y).ok_or(Overflow)?;
                    if !v.is_zero() {
                        out.push((*c1, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((c1, x)), Some((c2, _))) if c1 < c2 => {
                    let v = if unit_a { x.clone() } else { a.mul(x).ok_or(Overflow)? };
                    out.push((*c1, v));
                    i += 1;
                }
                (Some((c1, x)), None) => {
                    let v = if unit_a { x.clone() } else { a.mul(x).ok_or(Overflow)? };
                    out.push((*c1, v));
                    i += 1;
                }
                (_, Some((c2, y))) => {
                    out.push((*c2, I::mul_sub(&zero, &zero, &b, y).ok_or(Overflow)?));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        if !out.is_empty() {
            make_primitive(out);
        }
        Ok(())
    }
}

/// Integer echelon form, entries widened to big integers.
pub(crate) fn echelon(n_cols: usize, rows: Vec<Vec<(usize, i64)>>) -> Echelon<BigInt> {
    let small: Vec<Row<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c as u32, v as i128)).collect())
        .collect();
    match engine::eliminate(&FractionFree::<i128>::new(), n_cols, small) {
        Ok(e) => Echelon {
            n_cols,
            pivots: e
                .pivots
                .into_iter()
                .map(|(c, r)| (c, r.into_iter().map(|(j, v)| (j, BigInt::from(v))).collect()))
                .collect(),
        },
        Err(Overflow) => {
            let big: Vec<Row<BigInt>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c as u32, BigInt::from(v))).collect())
                .collect();
            engine::eliminate(&FractionFree::<BigInt>::new(), n_cols, big)
                .expect("big integers do not overflow")
        }
    }
}

/// Integer kernel vectors for the given free columns: back-substitution over
/// `Q`, then denominators cleared and the content divided out.
pub(crate) fn kernel(ech: &Echelon<BigInt>, free: &[u32]) -> Vec<Vec<BigInt>> {
    let mut basis = Vec::with_capacity(free.len());
    for &f in free {
        let mut x: Vec<BigRational> = vec![BigRational::zero(); ech.n_cols];
        x[f as usize] = BigRational::one();
        for (col, row) in ech.pivots.iter().rev() {
            let mut acc = BigRational::zero();
            let mut lead = BigInt::one();
            for (j, a) in row {
                if j == col {
                    lead = a.clone();
                } else if !x[*j as usize].is_zero() {
                    acc += &x[*j as usize] * BigRational::from_integer(a.clone());
                }
            }
            x[*col as usize] = -acc / BigRational::from_integer(lead);
        }
        let lcm = x.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let mut v: Vec<BigInt> = x.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let g = v.iter().fold(BigInt::zero(), |g, a| Integer::gcd(&g, a));
        if !Zero::is_zero(&g) && !g.is_one() {
            for a in &mut v {
                *a /= &g;
            }
        }
        basis.push(v);
    }
    basis
}
