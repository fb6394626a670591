//! Fraction-free Gaussian elimination (Bareiss) over `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::graph::Graph;

/// Rank of an integer matrix given as rows.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in (rank + 1)..rows {
            for c in (col + 1)..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of `q·A − p·I` where `λ = p/q`, i.e. of `A − λI` scaled to integers.
pub fn shifted_rank(g: &Graph, lambda: &Rational) -> usize {
    let n = g.order();
    let (p, q) = (lambda.numer(), lambda.denom());
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        -p.clone()
                    } else if g.has_edge(i, j) {
                        q.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    integer_rank(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(int_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(int_rows(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]])), 2);
        assert_eq!(integer_rank(int_rows(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(int_rows(&[&[2, 1, 1], &[1, 3, 2], &[1, 0, 0]])), 3);
        assert_eq!(integer_rank(Vec::new()), 0);
    }

    #[test]
    fn star_nullity() {
        let k14 = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(5 - shifted_rank(&k14, &Rational::zero()), 3);
        assert_eq!(5 - shifted_rank(&k14, &Rational::from_integer(2.into())), 1);
        assert_eq!(5 - shifted_rank(&k14, &Rational::from_integer(1.into())), 0);
    }
}
