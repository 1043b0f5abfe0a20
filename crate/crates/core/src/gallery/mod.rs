//! Worked examples: small prime-power fields, Cayley-Dickson doubling
//! algebras, the example catalog with its frozen claims, and the shared
//! verification corpus derived from it.

pub mod cd;
pub mod corpus;
pub mod field;
pub mod items;

pub use cd::CdAlgebra;
pub use corpus::{corpus, CorpusEntry};
pub use field::SmallField;
pub use items::{default_items, families, Claim, GalleryItem, Structure, VerifiedClaim};
