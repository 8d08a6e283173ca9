//! Interface hierarchy, argument propagation and the two checking modes.

mod check;
mod hierarchy;
mod instantiations;
mod members;
mod subst;

pub use check::{check, check_extended, check_java8, CheckReport, Mode};
pub use hierarchy::{build_hierarchy, InterfaceTable, TableEntry};
pub use instantiations::{collect_instantiations, Instantiation, InstantiationMap};
pub use members::{check_overrides, merge_members, MemberSignature};
pub use subst::{substitute, Substitution};
