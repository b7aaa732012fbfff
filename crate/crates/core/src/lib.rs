//! Exact computer algebra for DNA-style insertion products.
//!
//! Words over a finite alphabet span the free algebra; the insertion products
//! splice one word into another and extend bilinearly. The crate computes
//! these products with exact coefficients in ℚ[t, t⁻¹], evaluates associators
//! and identity defects, searches bounded word spaces for violations of the
//! left-symmetric (pre-Lie) identity and its relatives, and checks the
//! functional equations that a length-dependent weight must satisfy for the
//! weighted product to stay left-symmetric.
//!
//! ```
//! use splice_algebra::{Alphabet, InsertionOperator};
//!
//! let a = Alphabet::parse("abcde").unwrap();
//! let (x, y) = (a.parse_word("abc").unwrap(), a.parse_word("de").unwrap());
//! let p = InsertionOperator::Simple.product(&a, &x, &y).unwrap();
//! assert_eq!(p.to_string(), "abcde + dabce + deabc");
//! ```

pub mod alphabet;
pub mod coeff;
pub mod error;
pub mod identity;
pub mod ops;
pub mod poly;
pub mod weight;

pub use alphabet::{concat, insert_at, parse_word, Alphabet, Word};
pub use coeff::{Coefficient, Rational};
pub use error::{Error, Result};
pub use identity::{
    associator, audit_adjacency_restriction, check_identity, check_identity_with, identity_defect,
    identity_defect_poly, AuditCase, AuditReport, IdentityKind, IdentityReport, SearchMode,
    SearchOptions, Witness,
};
pub use ops::{
    adjacency_restricted_insertion, c_closed_form, delta_restricted_insertion, right_insertion,
    simple_insertion, synchronized_insertion, weighted_insertion, AdjacencyRelation,
    InsertionOperator,
};
pub use poly::Polynomial;
pub use weight::{
    check_f_equations, check_f_symmetry, compute_h, enumerate_binary_f, BinaryEnumeration,
    FGridReport, FViolation, HValues, SymmetryReport, WeightFunction, WeightTable,
};
