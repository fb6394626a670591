//! Squarefree decomposition by Yun's algorithm, run over `Z[x]` with exact
//! divisions by primitive gcds.

use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::error::AlgebraError;

/// A squarefree primitive factor together with the multiplicity shared by
/// all of its roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub poly: IntPolynomial,
    pub multiplicity: usize,
}

/// Writes `p = c · Π s_i^(m_i)` with pairwise coprime squarefree primitive
/// `s_i`. Strata are returned by increasing multiplicity; constant factors
/// are dropped.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<Stratum>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let p = p.primitive_part();
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp).primitive_part();
    let mut b = p.div_exact(&a0).expect("gcd divides p");
    let c = dp.div_exact(&a0).expect("gcd divides p'");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).primitive_part();
        b = b.div_exact(&a).expect("gcd divides b");
        let c = d.div_exact(&a).expect("gcd divides d");
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push(Stratum { poly: a, multiplicity: i });
        }
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct irreducible factors of `p`, primitive.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let p = p.primitive_part();
    if p.is_constant() {
        return Ok(IntPolynomial::one());
    }
    let g = p.gcd(&p.derivative()).primitive_part();
    Ok(p.div_exact(&g).expect("gcd divides p").primitive_part())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn cycle_five() {
        let strata = squarefree_decomposition(&p(&[-2, 5, 0, -5, 0, 1])).unwrap();
        assert_eq!(
            strata,
            vec![
                Stratum { poly: p(&[-2, 1]), multiplicity: 1 },
                Stratum { poly: p(&[-1, 1, 1]), multiplicity: 2 },
            ]
        );
    }

    #[test]
    fn powers_and_content() {
        // 6 x^3 (x + 1)^2 (2x − 1)
        let f = p(&[0, 1]).pow(3).mul(&p(&[1, 1]).pow(2)).mul(&p(&[-1, 2])).scale(&6.into());
        let strata = squarefree_decomposition(&f).unwrap();
        let shape: Vec<_> = strata.iter().map(|s| (s.poly.clone(), s.multiplicity)).collect();
        assert_eq!(shape, vec![(p(&[-1, 2]), 1), (p(&[1, 1]), 2), (p(&[0, 1]), 3)]);
        assert_eq!(squarefree_part(&f).unwrap(), p(&[0, 1]).mul(&p(&[1, 1])).mul(&p(&[-1, 2])));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(squarefree_decomposition(&IntPolynomial::zero()), Err(AlgebraError::ZeroPolynomial));
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
    }
}
