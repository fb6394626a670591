//! Exact integer and algebraic arithmetic: polynomials over `Z`, squarefree
//! decomposition, characteristic polynomials, Sturm sequences, real algebraic
//! numbers and fraction-free rank.

mod algebraic;
mod charpoly;
mod rank;
mod squarefree;
mod sturm;
mod poly;

pub use algebraic::{parse_rational, real_roots, AlgebraicNumber};
pub use charpoly::char_poly;
pub use rank::{integer_rank, shifted_rank};
pub use squarefree::{squarefree_decomposition, squarefree_part, Stratum};
pub use sturm::{count_roots_closed, count_roots_half_open, isolate_real_roots, SturmSequence};
pub use poly::IntPolynomial;

pub type Rational = num_rational::BigRational;
