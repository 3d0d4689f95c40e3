use std::fmt;

use super::number::{root_of_unity, CycNum};
use super::poly::lcm;

/// Dense matrix over a cyclotomic field, row-major.
#[derive(Clone, PartialEq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

impl CycMatrix {
    pub fn zeros(rows: usize, cols: usize, conductor: u32) -> Self {
        CycMatrix {
            rows,
            cols,
            entries: vec![CycNum::zero(conductor); rows * cols],
        }
    }

    /// Builds a matrix from `f(i, j)`. Entries are embedded into a common conductor.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        let conductor = entries.iter().fold(1, |n, x| lcm(n, x.conductor()));
        let entries = entries
            .into_iter()
            .map(|x| if x.conductor() == conductor { x } else { x.embed(conductor) })
            .collect();
        CycMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize, conductor: u32) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                CycNum::one(conductor)
            } else {
                CycNum::zero(conductor)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u32 {
        self.entries.first().map_or(1, CycNum::conductor)
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Rank over `Q(zeta_N)` by Gaussian elimination with exact pivots.
    ///
    /// The first nonzero entry of each column is taken as pivot.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<CycNum>> = self.entries.chunks(self.cols.max(1)).map(<[CycNum]>::to_vec).collect();
        if self.cols == 0 {
            return 0;
        }
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][c].inv().expect("pivot is nonzero");
            let pivot_row = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] * &inv;
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The circulant matrix whose `i`-th row is `v` shifted right by `i`:
/// entry `(i, j)` is `v[(j - i) mod t]`.
pub fn circulant(v: &[CycNum]) -> CycMatrix {
    let t = v.len();
    CycMatrix::from_fn(t, t, |i, j| v[(j + t - i) % t].clone())
}

/// Number of `t`-th roots of unity `w` with `sum_j v_j w^j = 0`, `t = v.len()`.
///
/// This is the nullity of [`circulant`]`(v)`: the circulant is diagonalised by
/// the discrete Fourier transform, with eigenvalues `P_v(zeta_t^s)`.
pub fn circulant_nullity(v: &[CycNum]) -> usize {
    let t = v.len() as u32;
    if t == 0 {
        return 0;
    }
    let conductor = v.iter().fold(t, |n, x| lcm(n, x.conductor()));
    let v: Vec<CycNum> = v.iter().map(|x| x.embed(conductor)).collect();
    let step = (conductor / t) as i64;
    (0..t as i64)
        .filter(|&s| {
            let mut acc = CycNum::zero(conductor);
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    acc += &(vj * &root_of_unity(conductor, step * s * j as i64));
                }
            }
            acc.is_zero()
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(conductor: u32, xs: &[i64]) -> Vec<CycNum> {
        xs.iter().map(|&x| CycNum::from_int(conductor, x)).collect()
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(CycMatrix::zeros(3, 4, 8).rank(), 0);
        for t in 1..6 {
            assert_eq!(CycMatrix::identity(t, 12).rank(), t);
        }
    }

    #[test]
    fn circulant_two_zero_minus_two_zero() {
        // P_v = 2 - 2x^2 = 2(1-x)(1+x): roots 1 and -1 among the 4th roots
        let v = ints(4, &[2, 0, -2, 0]);
        assert_eq!(circulant(&v).rank(), 2);
        assert_eq!(circulant_nullity(&v), 2);
    }

    #[test]
    fn nullity_extremes() {
        for t in 1..8 {
            let zeros = ints(1, &vec![0; t]);
            assert_eq!(circulant_nullity(&zeros), t);
            let mut delta = vec![0; t];
            delta[0] = 1;
            assert_eq!(circulant_nullity(&ints(1, &delta)), 0);
        }
    }

    #[test]
    fn all_ones_has_nullity_t_minus_one() {
        for t in 1..10 {
            let v = ints(1, &vec![1; t]);
            assert_eq!(circulant_nullity(&v), t - 1);
            assert_eq!(circulant(&v).rank(), 1);
        }
    }

    #[test]
    fn rank_with_cyclotomic_entries() {
        // [[1, i], [i, -1]] has rank 1 over Q(i)
        let i = root_of_unity(4, 1);
        let m = CycMatrix::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => CycNum::one(4),
            (1, 1) => CycNum::from_int(4, -1),
            _ => i.clone(),
        });
        assert_eq!(m.rank(), 1);
        assert!(!m.is_hermitian());
    }

    mod props {
        use super::*;
        use crate::cyclo::root_of_unity;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn nullity_matches_rank(n in 1u32..=12, coeffs in prop::collection::vec((-2i64..=2, 0i64..12), 1..=6)) {
                let v: Vec<CycNum> = coeffs.iter().map(|&(c, k)| CycNum::from_powers(n, &[(c, k % n as i64)])).collect();
                prop_assert_eq!(circulant_nullity(&v), v.len() - circulant(&v).rank());
            }

            #[test]
            fn geometric_row_has_rank_one(len in 1usize..=8, a in 0i64..8) {
                let n = len as u32;
                let v: Vec<CycNum> = (0..len as i64).map(|j| root_of_unity(n, a * j)).collect();
                prop_assert_eq!(circulant(&v).rank(), 1);
                prop_assert_eq!(circulant_nullity(&v), len - 1);
            }

            #[test]
            fn rank_is_transpose_invariant(n in 1u32..=8, entries in prop::collection::vec((-2i64..=2, 0i64..8), 9)) {
                let m = CycMatrix::from_fn(3, 3, |i, j| {
                    let (c, k) = entries[3 * i + j];
                    CycNum::from_powers(n, &[(c, k)])
                });
                let t = CycMatrix::from_fn(3, 3, |i, j| m.get(j, i).clone());
                prop_assert_eq!(m.rank(), t.rank());
            }
        }
    }
}
