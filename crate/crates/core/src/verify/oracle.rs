//! Exact linear algebra used as an independent check on the closed-form
//! formulas.

use crate::involutions::Involution;
use crate::rankmatrix::n_matrix;

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank of an integer matrix by fraction-free row reduction. Each updated
/// row is divided by the gcd of its entries, so entries stay small.
pub fn integer_rank(mut rows: Vec<Vec<i64>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let p = pivot_row[col];
        for row in rest.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(pivot_row) {
                *x = *x * p - y * c;
            }
            let g = row.iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// `dim B.N_sigma` as `dim b` minus the dimension of the centralizer of
/// `N_sigma` in the upper-triangular matrices `b` (diagonal included).
///
/// The centralizer is the kernel of `X -> X N - N X` on `b`; its dimension is
/// `dim b - rank`, so the orbit dimension is the rank of that map.
pub fn centralizer_dim_oracle(sigma: &Involution) -> usize {
    let n = sigma.n();
    let nm = n_matrix(sigma);
    let nval = |i: usize, j: usize| nm.at(i + 1, j + 1) as i64;
    let unknowns: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    // One equation per entry (r, c) of X N - N X.
    let mut equations = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let row: Vec<i64> = unknowns
                .iter()
                .map(|&(a, b)| {
                    // X_{ab} contributes N_{bc} to (XN)_{rc} when a = r,
                    // and N_{ra} to (NX)_{rc} when b = c.
                    let mut coeff = 0;
                    if a == r {
                        coeff += nval(b, c);
                    }
                    if b == c {
                        coeff -= nval(r, a);
                    }
                    coeff
                })
                .collect();
            if row.iter().any(|&v| v != 0) {
                equations.push(row);
            }
        }
    }
    let dim_b = n * (n + 1) / 2;
    let centralizer = dim_b - integer_rank(equations);
    dim_b - centralizer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::{orbit_dim, sigma_o};

    #[test]
    fn integer_rank_small_cases() {
        assert_eq!(integer_rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(vec![vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]), 3);
        assert_eq!(integer_rank(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
        assert_eq!(integer_rank(vec![]), 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(centralizer_dim_oracle(&Involution::identity(4)), 0);
        // The minimal involution of rank 2 has the smallest orbit, not the
        // orbital-variety dimension k(n-k).
        assert_eq!(centralizer_dim_oracle(&sigma_o(5, 2).unwrap()), 3);
        assert_eq!(orbit_dim(&sigma_o(5, 2).unwrap()), 3);
        assert_eq!(centralizer_dim_oracle(&Involution::parse("(2,5)(3,4)", Some(5)).unwrap()), 6);
        let s = Involution::parse("(1,5)(2,6)(3,4)", Some(6)).unwrap();
        assert_eq!(centralizer_dim_oracle(&s), 8);
        let s = Involution::parse("(1,3)(2,5)(4,6)", Some(6)).unwrap();
        assert_eq!(centralizer_dim_oracle(&s), 7);
        assert_eq!(orbit_dim(&s), 7);
    }
}
