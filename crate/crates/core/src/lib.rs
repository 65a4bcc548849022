//! Finite posets with set-valued cone operators: `Max L`, `Min U`, complemented
//! and Boolean posets, symmetric difference, and the operator, Sheffer and dual
//! structures that axiomatize them.
//!
//! Subsets of a carrier are `u64` bitmasks, so carriers hold at most 64 elements.

pub mod complemented;
pub mod cones;
pub mod distributive;
pub mod dual;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod operator;
pub mod poset;
pub mod report;
pub mod sample;
pub mod set;
pub mod sheffer;
pub mod symdiff;
pub mod table;

pub use complemented::{find_complementations, is_boolean, ComplementedPoset};
pub use cones::ConeOp;
pub use dual::{boolean_from_dual, check_dual_axioms, dual_from_boolean, DualStructure};
pub use error::{Error, Result};
pub use io::{PosetFile, StructureFile};
pub use operator::{check_axioms, poset_from_structure, structure_from_poset, OperatorStructure};
pub use poset::{BoundedPoset, FinitePoset, Order, Relation};
pub use report::{AxiomReport, Verdict, Witness};
pub use sample::{SubsetPolicy, DEFAULT_SEED};
pub use set::ElemSet;
pub use sheffer::{check_sheffer_axioms, poset_from_sheffer, sheffer_from_poset, ShefferStructure};
pub use symdiff::sym_diff;
pub use table::Table;
