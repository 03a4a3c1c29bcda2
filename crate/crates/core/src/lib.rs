//! Right and left keys of semistandard tableaux by the scanning method,
//! cellwise characterizations and generators for Demazure and atom
//! tableaux, and key polynomials computed both by divided differences and
//! by tableau enumeration.

pub mod atomgen;
pub mod criteria;
pub mod error;
pub mod keypoly;
pub mod poly;
pub mod scanning;
pub mod shapes;
pub mod tableau;
pub mod verify;

pub use atomgen::{
    filter_oracle, generate_atom_tableaux, generate_demazure_tableaux, GenFrame, GenLimits,
};
pub use criteria::{ConditionSet, Criteria, KeyRelation, SetKind};
pub use error::{Error, Result};
pub use keypoly::{
    atom_decomposition, atom_poly, atom_poly_tableaux, column_inert_check, demazure_poly,
    demazure_poly_tableaux, interval_poly_bounded, interval_poly_exact, schur_poly, Route,
};
pub use poly::{Monomial, Polynomial};
pub use scanning::{left_scan, right_scan, ScanPath, ScanResult};
pub use shapes::{key_to_perm, make_key, Partition, Permutation, ReducedWord};
pub use tableau::{enumerate, Remnant, Tableau};
