//! Exact arithmetic foundation: rationals, univariate polynomials, field
//! towers and dense linear algebra.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod tower;

pub use field::{rat, ratio, Degree, Field, Rational, Rationals};
pub use matrix::{Echelon, Matrix};
pub use poly::Polynomial;
pub use tower::{FieldElement, FieldTower, LevelSpec, TowerField};
