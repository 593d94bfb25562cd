use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CurveConfig;

/// Rank of the Gram matrix over `Q`, by fraction-free elimination.
pub fn gram_rank(cfg: &CurveConfig) -> usize {
    let mut a: Vec<Vec<BigInt>> = cfg
        .gram()
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                let (q, r) = (&num / &prev, &num % &prev);
                assert!(r.is_zero(), "inexact fraction-free step");
                a[i][j] = q;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix reduced mod a prime `q`.
pub fn rank_mod_prime(m: &[Vec<i64>], q: u64) -> usize {
    let qi = q as i128;
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&v| (v as i128).rem_euclid(qi)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i128| -> i128 {
        let (mut r0, mut r1, mut s0, mut s1) = (qi, x, 0i128, 1i128);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (s0, s1) = (s1, s0 - k * s1);
        }
        s0.rem_euclid(qi)
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let pinv = inv(a[rank][col]);
        for i in 0..rows {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col] * pinv % qi;
                for j in col..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(qi);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        let cfg = CurveConfig::from_gram(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![2, 1, 3], vec![1, 1, 2], vec![3, 2, 5]],
        )
        .unwrap();
        assert_eq!(gram_rank(&cfg), 2);
        assert_eq!(rank_mod_prime(cfg.gram(), 1_000_000_007), 2);
        let zero = CurveConfig::from_gram(vec!["z".into()], vec![vec![0]]).unwrap();
        assert_eq!(gram_rank(&zero), 0);
    }

    #[test]
    fn modular_rank_can_drop() {
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_mod_prime(&m, 2), 0);
        assert_eq!(rank_mod_prime(&m, 3), 2);
    }
}
