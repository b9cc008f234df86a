//! Exact integer/rational arithmetic and univariate polynomials over Q.

pub mod factor;
pub mod hensel;
pub mod modp;
pub mod poly;
pub mod rational;

pub use factor::{
    factor_over_q, factors_up_to_degree, may_have_factor_of_degree, rational_roots, squarefree_decomposition,
    squarefree_part, Factorization,
};
pub use poly::{integer_gcd, IntegerPolynomial, Poly, RationalPolynomial};
pub use rational::Rational;
