//! Exact scalars: rationals, square roots of rationals, multiples of
//! powers of sqrt(pi), and truncated power series over the rationals.

mod radical;
mod rat;
mod series;
mod special;

pub use radical::{PiRadical, SqrtRat};
pub use rat::Rat;
pub use series::FSeries;
pub use special::{binom_int, binomial, double_factorial, factorial, gamma_half, pochhammer};
pub(crate) use special::binom_big;
