//! Graded Jordan types of `ℓ` acting on a graded algebra.
//!
//! A graded module over `K[ℓ]` of finite length splits into strings
//! `v, ℓv, ..., ℓ^(len-1) v` with `v` homogeneous. The multiset of
//! `(start degree, length)` pairs determines every rank
//! `rank(ℓ^d : A_i -> A_{i+d})`, which is the number of strings covering
//! both degrees. Over a field of characteristic zero the strings of
//! `A ⊗ B` with `ℓ = ℓ_A ⊗ 1 + 1 ⊗ ℓ_B` follow from those of `A` and `B`
//! by the Clebsch-Gordan rule, which lets the Lefschetz maps of a cone
//! `simplex(C) * Δ'` be read off from the much smaller link `Δ'`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Strings of `ℓ`, as `(start, length) -> multiplicity`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanType {
    strings: BTreeMap<(usize, usize), u64>,
}

impl JordanType {
    /// The ground field in degree zero.
    pub fn point() -> Self {
        let mut strings = BTreeMap::new();
        strings.insert((0, 1), 1);
        JordanType { strings }
    }

    /// Exterior-face algebra of the full simplex on `c` vertices: strings
    /// start in degree `j` with length `c + 1 - 2j`, `j <= c/2`, with
    /// multiplicity `C(c, j) - C(c, j-1)`. This is the strong Lefschetz
    /// property of `K[x_1..x_c]/(x_i^2)` in characteristic zero.
    pub fn boolean(c: usize) -> Self {
        let mut strings = BTreeMap::new();
        let mut prev = 0u64;
        let mut binom = 1u64;
        for j in 0..=c / 2 {
            strings.insert((j, c + 1 - 2 * j), binom - prev);
            prev = binom;
            binom = binom * (c - j) as u64 / (j + 1) as u64;
        }
        JordanType { strings }
    }

    /// Recovers the strings from the dimensions `dims[i]` and a rank oracle
    /// `rank(i, d)` for `ℓ^d : A_i -> A_{i+d}` (`d >= 1`).
    pub fn from_ranks(dims: &[usize], mut rank: impl FnMut(usize, usize) -> usize) -> Self {
        let top = dims.len();
        // r[i][d] = number of strings covering degrees i..=i+d
        let mut r = vec![vec![0u64; top + 1]; top];
        for (i, row) in r.iter_mut().enumerate() {
            row[0] = dims[i] as u64;
            for (d, slot) in row.iter_mut().enumerate().take(top - i).skip(1) {
                *slot = rank(i, d) as u64;
            }
        }
        let at = |i: isize, d: usize| -> i64 {
            if i < 0 || i as usize >= top || d >= r[i as usize].len() {
                0
            } else {
                r[i as usize][d] as i64
            }
        };
        let mut strings = BTreeMap::new();
        for s in 0..top {
            for len in 1..=top - s {
                let si = s as isize;
                let m = at(si, len - 1) - at(si - 1, len) - at(si, len) + at(si - 1, len + 1);
                assert!(m >= 0, "rank data is not consistent with a string decomposition");
                if m > 0 {
                    strings.insert((s, len), m as u64);
                }
            }
        }
        JordanType { strings }
    }

    /// Strings of the tensor product, characteristic zero.
    pub fn tensor(&self, other: &JordanType) -> JordanType {
        let mut strings = BTreeMap::new();
        for (&(s, a), &ma) in &self.strings {
            for (&(u, b), &mb) in &other.strings {
                for j in 0..a.min(b) {
                    *strings.entry((s + u + j, a + b - 1 - 2 * j)).or_insert(0) += ma * mb;
                }
            }
        }
        JordanType { strings }
    }

    /// `rank(ℓ^d : A_i -> A_{i+d})`; `d = 0` gives `dim A_i`.
    pub fn rank(&self, i: usize, d: usize) -> u64 {
        self.strings
            .iter()
            .filter(|(&(s, len), _)| s <= i && i + d < s + len)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.rank(i, 0)
    }

    /// `(start, length, multiplicity)` triples in increasing order.
    pub fn strings(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.strings.iter().map(|(&(s, l), &m)| (s, l, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64)
    }

    #[test]
    fn boolean_dims_and_ranks() {
        for c in 0..12 {
            let j = JordanType::boolean(c);
            for i in 0..=c {
                assert_eq!(j.dim(i), binom(c, i));
                for d in 1..=c - i {
                    assert_eq!(j.rank(i, d), binom(c, i).min(binom(c, i + d)));
                }
            }
        }
    }

    #[test]
    fn tensor_of_booleans_is_boolean() {
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(JordanType::boolean(a).tensor(&JordanType::boolean(b)), JordanType::boolean(a + b));
            }
        }
    }

    #[test]
    fn ranks_round_trip() {
        let j = JordanType::boolean(3).tensor(&JordanType::boolean(4));
        let dims: Vec<usize> = (0..8).map(|i| j.dim(i) as usize).collect();
        let back = JordanType::from_ranks(&dims, |i, d| j.rank(i, d) as usize);
        assert_eq!(back, j);
    }

    #[test]
    fn point_is_unit() {
        let j = JordanType::boolean(5);
        assert_eq!(j.tensor(&JordanType::point()), j);
    }
}
