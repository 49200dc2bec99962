//! Exact rational Vandermonde systems on arithmetic-progression nodes and
//! the alternating binomial sum identities they encode.
//!
//! ```
//! use boole_core::{closed_form_solution, generalized_sum, Rational};
//!
//! let a: Rational = "1/3".parse().unwrap();
//! let b: Rational = "-2/5".parse().unwrap();
//! // (-1)^3 * b^3 * 3!
//! assert_eq!(generalized_sum(&a, &b, 3, 3), "48/125".parse().unwrap());
//! assert_eq!(closed_form_solution(2), vec![1.into(), (-2).into(), 1.into()]);
//! ```

pub mod cli;
pub mod error;
pub mod identity;
pub mod rational;
pub mod sampling;
pub mod vandermonde;

pub use error::{Error, Result};
pub use identity::{
    boole_sum, closed_form_solution, expected_value, forward_difference_at_zero, generalized_sum,
    stirling2, verify_cramer, verify_stirling, verify_theorem, verify_theorem_with, CaseResult,
    CheckKind, IdentityCase, StirlingTable, VerificationReport,
};
pub use rational::{binomial, factorial, rat, rat_pow, superfactorial, BigInteger, Rational};
pub use vandermonde::{
    build_system, det_bareiss, det_vandermonde_closed, det_vandermonde_general, det_vk_closed,
    solve_exact, vandermonde_matrix, ArithmeticNodes, ExactMatrix, LinearSystem,
};
