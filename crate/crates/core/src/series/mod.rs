//! Exact coefficient rings and truncated formal power series in q.

mod jet;
mod poly;
mod qseries;
mod rational;
mod ring;

pub use jet::Jet3;
pub use poly::CoeffPoly;
pub use qseries::{pochhammer, QSeries};
pub use rational::Rational;
pub use ring::Ring;
