//! Exact certification toolkit for a rigidity phenomenon in hyperkahler
//! geometry: the unique trivector in 10 variables invariant under a
//! 660-element simple group, the 55 singular points of its Peskine variety,
//! and the rank-21 Picard lattice those points span on the associated
//! Debarre-Voisin fourfold.
//!
//! All arithmetic is exact: rationals, the cyclotomic field Q(zeta_11), and
//! prime fields F_p with a chosen 11th root of unity. Every claimed number
//! (discriminants, group orders, character values) is recomputed from
//! scratch and cross-checked, never trusted from a table.

pub mod field;
pub mod grouprep;
pub mod linalg;
pub mod polysys;
pub mod singsolve;
pub mod trivector;

pub use field::{CycloNum, Field, FieldError, FpNum, Rational, ReductionMap, Ring};
pub use grouprep::{CharValue, Character, CharacterTable, ClassData, GroupElem, GroupError, Sl2};
pub use polysys::{Budget, GroebnerBasis, MPoly, PolysysError, TermOrder};
pub use singsolve::{ProjPoint, SingError, SingularSet};
pub use trivector::{SkewMatrix, SubspaceBasis, Trivector, TrivectorError};
