//! Exact computer-algebra kernel for type-B superspace coinvariant rings.
//!
//! The objects live in the superspace ring Ω_n = Q[x_1..x_n] ⊗ Λ{θ_1..θ_n}:
//! commuting variables x_i alongside anticommuting variables θ_i, graded by
//! bosonic degree (in the x's) and fermionic degree (in the θ's).  The
//! hyperoctahedral group acts by signed permutations, and the central object
//! is the quotient of Ω_n by the ideal generated by the even power sums
//! p_2, p_4, …, p_{2n} together with their images under the Euler operator
//! d(f) = Σ_i ∂f/∂x_i · θ_i.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! all dimension counts are ranks of matrices over Q.  No floating point,
//! no Gröbner bases — graded pieces are small enough for direct elimination.
//!
//! Module map:
//! - [`qpoly`]: polynomials in q and bigraded (q, z) series with integer
//!   coefficients.
//! - [`subset`]: subsets of {1..n} with the Gale order and index bookkeeping.
//! - [`combinatorics`]: q-integers, q-double factorials, type-B q-Stirling
//!   numbers, staircases st^B(J), and the product identity tying them together.
//! - [`poly`]: dense-exponent commutative polynomials over Q, with the text
//!   format used by the CLI.
//! - [`superspace`]: elements of Ω_n, signed-permutation action, the Euler
//!   operators d_j, and the contraction action f ⊙ g.
//! - [`linalg`]: exact sparse row reduction, kernels, and span tests for
//!   graded pieces.
//! - [`coinvariants`]: the coinvariant ideals, brute-force Hilbert series,
//!   the Vandermondian, and superharmonic spaces.
//! - [`pji`]: the colon-ideal generators p_{J,i}/q_{J,i}, the transition
//!   matrix of complete homogeneous polynomials in squared variables, and the
//!   operators 𝔇_J built from its minors.
//! - [`arrangements`]: hyperplane arrangements between the type-A and type-B
//!   Coxeter arrangements, Saito criterion checks, Solomon–Terao ideals, and
//!   the explicit bases attached to them.

pub mod arrangements;
pub mod coinvariants;
pub mod combinatorics;
pub mod linalg;
pub mod pji;
pub mod poly;
pub mod qpoly;
pub mod subset;
pub mod superspace;

/// Exact scalar type used throughout: arbitrary-precision rationals.
pub type Rat = num::BigRational;

/// Shorthand for an integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `a/b` as a [`Rat`]; panics if `b == 0`.
pub fn ratio(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}
