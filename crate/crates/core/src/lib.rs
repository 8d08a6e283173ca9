//! A checker for a miniature generic-interface language.
//!
//! In `java8` mode it rejects an interface that inherits one generic ancestor
//! at two different argument lists, exactly as javac 8 does. In `extended`
//! mode it accepts such interfaces and merges their member tables.

pub mod cli;
pub mod corpus;
pub mod diagnostics;
pub mod semantics;
pub mod syntax;
