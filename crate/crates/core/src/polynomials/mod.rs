//! Sparse multivariate polynomials over `Q(i)`, monomial orders,
//! multivariate division and reduced Gröbner bases.

mod groebner;
mod monomial;
mod poly;

pub use groebner::{
    buchberger, buchberger_generic, buchberger_with_stats, contains_one, is_groebner_basis, reduce,
    reduce_generic, s_polynomial, GroebnerConfig, GroebnerStats, DEFAULT_BUDGET,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{default_var_names, eval_poly, poly_add, poly_mul, MultiPoly, Poly, ToComplex};
