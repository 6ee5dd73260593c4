//! Constacyclic codes over finite fields and finite chain rings.
//!
//! The algebra is generic over [`Ring`] and [`FiniteChainRing`]; the aliases
//! below fix the two concrete ring types.

pub mod chainquot;
pub mod chainring;
pub mod codes;
pub mod error;
pub mod ffield;
pub mod linalg;
pub mod poly;
pub mod polyfactor;
pub mod ring;
pub mod sweep;
pub mod verify;

pub use chainquot::ChainQuotient;
pub use chainring::{ChainRing, Family, RingElem};
pub use codes::{ConstaCode, CrtSplit, CrtVariant, EquivMap, QuotientRing, WeightKind};
pub use error::{Error, Result};
pub use ffield::{Field, FieldElem};
pub use poly::{Poly, PolyRing};
pub use polyfactor::Factorization;
pub use ring::{FiniteChainRing, Ring};

pub type FieldPoly = Poly<FieldElem>;
pub type ChainPoly = Poly<RingElem>;
pub type FieldFactorization = Factorization<FieldElem>;
pub type ChainFactorization = Factorization<RingElem>;
pub type FieldQuotient = QuotientRing<Field>;
pub type ChainQuotientRing = QuotientRing<ChainRing>;
pub type FieldCode = ConstaCode<Field>;
pub type ChainCode = ConstaCode<ChainRing>;
