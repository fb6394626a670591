//! Characteristic polynomials of adjacency matrices by Faddeev–LeVerrier.
//!
//! With `M_0 = 0` and `c_n = 1`, iterate `M_k = A·M_{k-1} + c_{n-k+1}·I` and
//! `c_{n-k} = -tr(A·M_k) / k`. For a 0/1 adjacency matrix the product `A·M`
//! is a sum of rows of `M`, so each step costs `O(n·|E|)`. The iteration runs
//! in `i128` with checked arithmetic and restarts over `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::graph::Graph;

/// `det(xI − A(G))`, coefficients low to high.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    char_poly_i128(g).unwrap_or_else(|| char_poly_big(g))
}

fn char_poly_i128(g: &Graph) -> Option<IntPolynomial> {
    let n = g.order();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![0i128; n * n];
    let mut am = vec![0i128; n * n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I, computed into `am` then swapped.
        let c = coeffs[n - k + 1];
        for i in 0..n {
            let row = &mut am[i * n..(i + 1) * n];
            row.fill(0);
            for l in g.neighbors(i) {
                let src = &m[l * n..(l + 1) * n];
                for (dst, &s) in row.iter_mut().zip(src) {
                    *dst = dst.checked_add(s)?;
                }
            }
            row[i] = row[i].checked_add(c)?;
        }
        std::mem::swap(&mut m, &mut am);
        // tr(A·M_k) = Σ_i Σ_{l ∈ N(i)} M_k[l][i]
        let mut tr = 0i128;
        for i in 0..n {
            for l in g.neighbors(i) {
                tr = tr.checked_add(m[l * n + i])?;
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        coeffs[n - k] = -(tr / k as i128);
    }
    Some(IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect()))
}

fn char_poly_big(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = vec![BigInt::zero(); n * n];
    let mut am = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            for j in 0..n {
                am[i * n + j] = BigInt::zero();
            }
            for l in g.neighbors(i) {
                for j in 0..n {
                    let s = m[l * n + j].clone();
                    am[i * n + j] += s;
                }
            }
            am[i * n + i] += &c;
        }
        std::mem::swap(&mut m, &mut am);
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in g.neighbors(i) {
                tr += &m[l * n + i];
            }
        }
        coeffs[n - k] = -(tr / BigInt::from(k));
    }
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_edge_list(leaves + 1, &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(char_poly(&star(3)), IntPolynomial::from_i64(&[0, 0, -3, 0, 1]));
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(char_poly(&c5), IntPolynomial::from_i64(&[-2, 5, 0, -5, 0, 1]));
        assert_eq!(char_poly(&Graph::empty(0).unwrap()), IntPolynomial::one());
        assert_eq!(char_poly(&Graph::empty(2).unwrap()), IntPolynomial::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn bigint_path_agrees() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(char_poly_i128(&g).unwrap(), char_poly_big(&g));
    }

    #[test]
    fn large_complete_graph_overflows_into_bigint() {
        // det(xI − A(K_n)) = (x − n + 1)(x + 1)^(n−1)
        let n = 60;
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let expected = IntPolynomial::from_i64(&[-(n as i64) + 1, 1]).mul(&IntPolynomial::from_i64(&[1, 1]).pow(n as u32 - 1));
        assert_eq!(char_poly(&g), expected);
    }
}
