//! Gabidulin codes over number fields.
//!
//! Everything is exact: fields are towers of simple extensions of Q built
//! with [`algebra::FieldTower`], an [`Automorphism`] θ of the top extension
//! `K ⊆ L` drives the skew polynomial ring `L[X; θ]` ([`SkewPolynomial`]),
//! [`rank`] computes the four rank weights of words in `L^N`, and
//! [`GabidulinCode`] encodes and uniquely decodes up to half the minimum
//! rank distance.
//!
//! ```
//! use gabidulin_core::{presets, rank, GabidulinCode};
//!
//! let theta = presets::cyclotomic_primitive(5).unwrap();
//! let code = GabidulinCode::random(&theta, 4, 2, 7).unwrap();
//! let tower = theta.tower();
//! let message = vec![tower.generator(1), tower.from_i64(1, 3)];
//! let error = rank::random_rank_error(&theta, 4, 1, 11).unwrap();
//! let received = code.encode(&message).unwrap().add(&error).unwrap();
//! let out = code.decode(&received).unwrap();
//! assert_eq!(code.message_of(out.message_poly.as_ref().unwrap()), message);
//! ```

pub mod algebra;
pub mod code;
pub mod error;
pub mod galois;
pub mod presets;
pub mod random;
pub mod rank;
pub mod skew;

pub use code::{DecodeOutcome, DecodeStatus, GabidulinCode, SingletonReport};
pub use error::{Error, Result};
pub use galois::{AdmissibilityReport, Automorphism};
pub use rank::{RankDistance, WeightReport, Word};
pub use skew::SkewPolynomial;
