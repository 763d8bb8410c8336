//! The graded algebras `B`, `B(sigma)` and `A(sigma)`.
//!
//! Parities: `a, d, sigma` even, `b, c` odd. Relations
//!
//! ```text
//! ab = t ba, ac = t ca, bc = -cb, bd = -t db, cd = -t dc,
//! ad - da = (t^-1 - t) bc,
//! sigma a = a sigma, sigma d = d sigma, sigma b = -b sigma, sigma c = -c sigma,
//! sigma^2 = 1,
//! ```
//!
//! and in `A(sigma)` additionally `ad + t bc = sigma`. Normal monomials are
//! `a^i b^j c^k d^l sigma^s`, with `i = 0` or `l = 0` in `A(sigma)`.

mod element;
mod grading;
mod monomial;
mod rewrite;
mod verify;

#[allow(unused_imports)]
pub(crate) use element::coeff_prefix;
pub use element::{normal_form, Element};
pub use grading::{bigrade, e_basis, project_00, BiDegree};
pub use monomial::{Gen, Monomial, Ring};
pub use rewrite::Rules;
pub use verify::verify_associativity;
