use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use serde::Serialize;

use super::hierarchy::InterfaceTable;
use super::subst::{substitute, Substitution};
use crate::syntax::{write_list, InterfaceDecl, TypeRef};

/// A generic interface applied to concrete arguments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instantiation {
    pub interface_name: String,
    pub args: Vec<TypeRef>,
}

impl Instantiation {
    pub fn new(interface_name: impl Into<String>, args: Vec<TypeRef>) -> Self {
        Instantiation {
            interface_name: interface_name.into(),
            args,
        }
    }

    /// `decl` applied to its own parameters.
    pub fn own(decl: &InterfaceDecl) -> Self {
        Self::new(decl.name.clone(), decl.type_param_names().map(TypeRef::simple).collect())
    }
}

impl fmt::Display for Instantiation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.interface_name)?;
        if !self.args.is_empty() {
            f.write_str("<")?;
            write_list(f, &self.args, ",")?;
            f.write_str(">")?;
        }
        Ok(())
    }
}

impl Serialize for Instantiation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// For each ancestor, the distinct argument tuples that reach it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstantiationMap {
    entries: IndexMap<String, Vec<Vec<TypeRef>>>,
    conflicts: Vec<String>,
}

impl InstantiationMap {
    pub fn get(&self, ancestor: &str) -> Option<&[Vec<TypeRef>]> {
        self.entries.get(ancestor).map(Vec::as_slice)
    }

    /// Ancestors with their tuples, in first-encounter order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &[Vec<TypeRef>])> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Ancestors reached at two or more tuples, ordered by when the second
    /// tuple was found.
    pub fn conflicts(&self) -> &[String] {
        &self.conflicts
    }

    pub fn is_java8_valid(&self) -> bool {
        self.conflicts.is_empty()
    }

    fn record(&mut self, ancestor: &str, args: Vec<TypeRef>) {
        let tuples = self.entries.entry(ancestor.to_owned()).or_default();
        if !tuples.contains(&args) {
            tuples.push(args);
            if tuples.len() == 2 {
                self.conflicts.push(ancestor.to_owned());
            }
        }
    }
}

/// Walks the extends graph depth-first in declaration order, expressing every
/// ancestor's arguments in the subject's own parameters.
///
/// The hierarchy must be resolved and acyclic below `subject`.
pub fn collect_instantiations(subject: &InterfaceDecl, table: &InterfaceTable) -> InstantiationMap {
    let mut map = InstantiationMap::default();
    let mut visited = HashSet::new();
    visit(subject, &Substitution::new(), table, &mut map, &mut visited);
    map
}

fn visit(
    decl: &InterfaceDecl,
    to_subject: &Substitution,
    table: &InterfaceTable,
    map: &mut InstantiationMap,
    visited: &mut HashSet<Instantiation>,
) {
    for sref in &decl.super_refs {
        let Some(target) = table.decl(&sref.name) else {
            continue;
        };
        let args: Vec<TypeRef> = sref.args.iter().map(|a| substitute(a, to_subject)).collect();
        map.record(&sref.name, args.clone());
        let inst = Instantiation::new(sref.name.clone(), args);
        if visited.insert(inst.clone()) {
            let next = Substitution::for_instantiation(target, &inst.args);
            visit(target, &next, table, map, visited);
        }
    }
}
