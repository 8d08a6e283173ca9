//! Brute-force reference implementations used as test oracles.
//!
//! Every root-to-ancestor path is enumerated explicitly, with no memoisation
//! and no visited set. The substitution carrying an ancestor's parameters to
//! the subject is built by composing the per-edge substitutions along the
//! path.

#![allow(dead_code)]

pub mod arb;

use std::collections::HashMap;

use ifacecheck::semantics::{substitute, Substitution};
use ifacecheck::syntax::{CompilationUnit, InterfaceDecl, TypeRef};

pub struct Oracle<'a> {
    decls: HashMap<&'a str, &'a InterfaceDecl>,
}

/// One path from the subject: the interfaces on it (subject first) and, for
/// each, the substitution from its parameters to the subject's terms.
#[derive(Clone)]
struct Path<'a> {
    nodes: Vec<(&'a InterfaceDecl, Substitution)>,
}

/// A member as plain strings: name, params, return, origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMember {
    pub name: String,
    pub params: Vec<String>,
    pub returns: String,
    pub throws: Vec<String>,
    pub origin: String,
}

impl OracleMember {
    pub fn line(&self) -> String {
        let throws = if self.throws.is_empty() { String::new() } else { format!(" throws {}", self.throws.join(", ")) };
        format!("{}({}) -> {}{throws}  [from {}]", self.name, self.params.join(", "), self.returns, self.origin)
    }

    fn erasure(&self) -> (String, Vec<String>) {
        (self.name.clone(), self.params.clone())
    }
}

impl<'a> Oracle<'a> {
    /// First declaration of each name wins.
    pub fn new(units: &'a [CompilationUnit]) -> Self {
        let mut decls = HashMap::new();
        for d in units.iter().flat_map(|u| &u.decls) {
            decls.entry(d.name.as_str()).or_insert(d);
        }
        Oracle { decls }
    }

    fn paths(&self, subject: &str) -> Vec<Path<'a>> {
        let root = self.decls[subject];
        let mut out = Vec::new();
        let start = Path {
            nodes: vec![(root, Substitution::new())],
        };
        self.extend(start, &mut out);
        out
    }

    fn extend(&self, path: Path<'a>, out: &mut Vec<Path<'a>>) {
        out.push(path.clone());
        let (current, to_subject) = path.nodes.last().unwrap();
        for sref in &current.super_refs {
            let Some(target) = self.decls.get(sref.name.as_str()) else {
                continue;
            };
            let edge = Substitution::for_instantiation(target, &sref.args);
            let composed = edge.compose(to_subject);
            let mut restricted = Substitution::new();
            for p in target.type_param_names() {
                restricted.bind(p, composed.get(p).cloned().unwrap_or_else(|| TypeRef::simple(p)));
            }
            let mut next = path.clone();
            next.nodes.push((target, restricted));
            self.extend(next, out);
        }
    }

    fn args_of(decl: &InterfaceDecl, sub: &Substitution) -> Vec<TypeRef> {
        decl.type_param_names().map(|p| substitute(&TypeRef::simple(p), sub)).collect()
    }

    /// Ancestor name to distinct tuples, both in first-discovery order.
    pub fn instantiations(&self, subject: &str) -> Vec<(String, Vec<Vec<String>>)> {
        let mut out: Vec<(String, Vec<Vec<String>>)> = Vec::new();
        for path in self.paths(subject).into_iter().skip(1) {
            let (decl, sub) = path.nodes.last().unwrap();
            let tuple: Vec<String> = Self::args_of(decl, sub).iter().map(ToString::to_string).collect();
            match out.iter_mut().find(|(n, _)| n == &decl.name) {
                Some((_, ts)) if ts.contains(&tuple) => {}
                Some((_, ts)) => ts.push(tuple),
                None => out.push((decl.name.clone(), vec![tuple])),
            }
        }
        out
    }

    /// Ancestors reached at two tuples, ordered by discovery of the second.
    pub fn conflicts(&self, subject: &str) -> Vec<String> {
        let mut seen: Vec<(String, Vec<String>)> = Vec::new();
        let mut out = Vec::new();
        for path in self.paths(subject).into_iter().skip(1) {
            let (decl, sub) = path.nodes.last().unwrap();
            let tuple: Vec<String> = Self::args_of(decl, sub).iter().map(ToString::to_string).collect();
            if seen.iter().any(|(n, t)| n == &decl.name && t == &tuple) {
                continue;
            }
            let distinct = seen.iter().filter(|(n, _)| n == &decl.name).count();
            if distinct == 1 {
                out.push(decl.name.clone());
            }
            seen.push((decl.name.clone(), tuple));
        }
        out
    }

    fn declared(decl: &InterfaceDecl, sub: &Substitution) -> Vec<OracleMember> {
        let args: Vec<String> = Self::args_of(decl, sub).iter().map(ToString::to_string).collect();
        let origin = if args.is_empty() { decl.name.clone() } else { format!("{}<{}>", decl.name, args.join(",")) };
        decl.methods
            .iter()
            .map(|m| {
                let mut throws: Vec<String> = Vec::new();
                for t in &m.throws_list {
                    if !throws.contains(&t.text) {
                        throws.push(t.text.clone());
                    }
                }
                OracleMember {
                    name: m.name.clone(),
                    params: m.params.iter().map(|p| substitute(&p.ty, sub).to_string()).collect(),
                    returns: substitute(&m.return_type, sub).to_string(),
                    throws,
                    origin: origin.clone(),
                }
            })
            .collect()
    }

    /// A member from the end of a path survives unless some earlier node on
    /// that path declares a method with the same name and parameter types.
    /// Identical signatures are then coalesced, keeping the first.
    pub fn members(&self, subject: &str) -> Vec<OracleMember> {
        let mut all: Vec<OracleMember> = Vec::new();
        for path in self.paths(subject) {
            let (end, end_sub) = path.nodes.last().unwrap();
            for m in Self::declared(end, end_sub) {
                let hidden = path.nodes[..path.nodes.len() - 1]
                    .iter()
                    .any(|(d, s)| Self::declared(d, s).iter().any(|o| o.erasure() == m.erasure()));
                if !hidden {
                    all.push(m);
                }
            }
        }
        let mut out: Vec<OracleMember> = Vec::new();
        for m in all {
            if !out.iter().any(|k| k.erasure() == m.erasure() && k.returns == m.returns) {
                out.push(m);
            }
        }
        out
    }

    /// Expected ambiguity notes: inherited members sharing an erasure but not
    /// a return type.
    pub fn ambiguity_notes(&self, subject: &str) -> Vec<String> {
        let own_origin_count = self.decls[subject].methods.len();
        let inherited: Vec<OracleMember> = self.members(subject).into_iter().skip(own_origin_count).collect();
        let mut groups: Vec<Vec<OracleMember>> = Vec::new();
        for m in inherited {
            match groups.iter_mut().find(|g| g[0].erasure() == m.erasure()) {
                Some(g) => g.push(m),
                None => groups.push(vec![m]),
            }
        }
        groups
            .into_iter()
            .filter(|g| g.iter().any(|m| m.returns != g[0].returns))
            .map(|g| {
                let origins: Vec<&str> = g.iter().map(|m| m.origin.as_str()).collect();
                format!(
                    "ambiguous inherited member: {}({}) from <{}>",
                    g[0].name,
                    g[0].params.join(", "),
                    origins.join(", ")
                )
            })
            .collect()
    }

    /// Own methods whose return type differs from an inherited member with
    /// the same erasure.
    pub fn override_clashes(&self, subject: &str) -> usize {
        let root = self.decls[subject];
        let own = Self::declared(root, &Substitution::new());
        let mut inherited: Vec<OracleMember> = Vec::new();
        for path in self.paths(subject).into_iter().skip(1) {
            let (end, sub) = path.nodes.last().unwrap();
            let tail = &path.nodes[1..path.nodes.len() - 1];
            for m in Self::declared(end, sub) {
                if !tail.iter().any(|(d, s)| Self::declared(d, s).iter().any(|o| o.erasure() == m.erasure())) {
                    inherited.push(m);
                }
            }
        }
        own.iter()
            .filter(|o| inherited.iter().any(|i| i.erasure() == o.erasure() && i.returns != o.returns))
            .count()
    }
}
