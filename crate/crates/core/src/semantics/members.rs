use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::hierarchy::InterfaceTable;
use super::instantiations::Instantiation;
use super::subst::{substitute, Substitution};
use crate::diagnostics::Diagnostic;
use crate::syntax::{write_list, TypeRef};

/// A method as seen from the subject, with every type substituted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberSignature {
    pub name: String,
    #[serde(rename = "params", serialize_with = "as_strings")]
    pub param_types: Vec<TypeRef>,
    #[serde(rename = "returns", serialize_with = "as_string")]
    pub return_type: TypeRef,
    #[serde(rename = "throws")]
    pub throws_set: Vec<String>,
    pub origin: Instantiation,
}

fn as_strings<S: serde::Serializer>(ts: &[TypeRef], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ts.iter().map(ToString::to_string))
}

fn as_string<S: serde::Serializer>(t: &TypeRef, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(t)
}

impl MemberSignature {
    /// Same name and parameter types, regardless of return type.
    pub fn same_erasure(&self, other: &MemberSignature) -> bool {
        self.name == other.name && self.param_types == other.param_types
    }

    fn identical(&self, other: &MemberSignature) -> bool {
        self.same_erasure(other) && self.return_type == other.return_type
    }

    /// `name(P1, P2)`
    pub fn signature(&self) -> String {
        let params: Vec<String> = self.param_types.iter().map(ToString::to_string).collect();
        format!("{}({})", self.name, params.join(", "))
    }
}

impl fmt::Display for MemberSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        write_list(f, &self.param_types, ", ")?;
        write!(f, ") -> {}", self.return_type)?;
        if !self.throws_set.is_empty() {
            f.write_str(" throws ")?;
            write_list(f, &self.throws_set, ", ")?;
        }
        write!(f, "  [from {}]", self.origin)
    }
}

type Memo = HashMap<Instantiation, Vec<MemberSignature>>;

/// Own methods first in declaration order, then inherited members in
/// depth-first order. An own method replaces every inherited member it
/// overrides; identical signatures keep their first origin.
pub fn merge_members(subject: &str, table: &InterfaceTable) -> Vec<MemberSignature> {
    let Some(decl) = table.decl(subject) else {
        return Vec::new();
    };
    members_of(&Instantiation::own(decl), table, &mut Memo::new())
}

/// The subject's own methods, substituted (trivially) at its own parameters.
pub(crate) fn own_members(subject: &str, table: &InterfaceTable) -> Vec<MemberSignature> {
    let Some(decl) = table.decl(subject) else {
        return Vec::new();
    };
    declared_members(&Instantiation::own(decl), table)
}

/// Members reaching the subject through its super-interfaces, before its own
/// methods override any of them.
pub(crate) fn inherited_members(subject: &str, table: &InterfaceTable) -> Vec<MemberSignature> {
    let Some(decl) = table.decl(subject) else {
        return Vec::new();
    };
    let mut memo = Memo::new();
    let mut out = Vec::new();
    for sref in &decl.super_refs {
        if table.decl(&sref.name).is_some() {
            out.extend(members_of(&Instantiation::new(sref.name.clone(), sref.args.clone()), table, &mut memo));
        }
    }
    coalesce(out)
}

fn declared_members(inst: &Instantiation, table: &InterfaceTable) -> Vec<MemberSignature> {
    let decl = table.decl(&inst.interface_name).expect("resolved interface");
    let sub = Substitution::for_instantiation(decl, &inst.args);
    decl.methods
        .iter()
        .map(|m| {
            let mut throws_set: Vec<String> = Vec::new();
            for e in &m.throws_list {
                if !throws_set.contains(&e.text) {
                    throws_set.push(e.text.clone());
                }
            }
            MemberSignature {
                name: m.name.clone(),
                param_types: m.params.iter().map(|p| substitute(&p.ty, &sub)).collect(),
                return_type: substitute(&m.return_type, &sub),
                throws_set,
                origin: inst.clone(),
            }
        })
        .collect()
}

fn members_of(inst: &Instantiation, table: &InterfaceTable, memo: &mut Memo) -> Vec<MemberSignature> {
    if let Some(done) = memo.get(inst) {
        return done.clone();
    }
    let decl = table.decl(&inst.interface_name).expect("resolved interface");
    let sub = Substitution::for_instantiation(decl, &inst.args);
    let own = declared_members(inst, table);
    let mut all = own.clone();
    for sref in &decl.super_refs {
        if table.decl(&sref.name).is_none() {
            continue;
        }
        let args = sref.args.iter().map(|a| substitute(a, &sub)).collect();
        let inherited = members_of(&Instantiation::new(sref.name.clone(), args), table, memo);
        all.extend(inherited.into_iter().filter(|m| !own.iter().any(|o| o.same_erasure(m))));
    }
    let merged = coalesce(all);
    memo.insert(inst.clone(), merged.clone());
    merged
}

fn coalesce(members: Vec<MemberSignature>) -> Vec<MemberSignature> {
    let mut out: Vec<MemberSignature> = Vec::with_capacity(members.len());
    for m in members {
        if !out.iter().any(|kept| kept.identical(&m)) {
            out.push(m);
        }
    }
    out
}

/// Inherited members that agree on name and parameter types but not on
/// return type, grouped in first-appearance order.
pub(crate) fn ambiguous_groups(subject: &str, table: &InterfaceTable) -> Vec<Vec<MemberSignature>> {
    let own = own_members(subject, table);
    let inherited: Vec<MemberSignature> = inherited_members(subject, table)
        .into_iter()
        .filter(|m| !own.iter().any(|o| o.same_erasure(m)))
        .collect();
    let mut groups: Vec<Vec<MemberSignature>> = Vec::new();
    for m in inherited {
        match groups.iter_mut().find(|g| g[0].same_erasure(&m)) {
            Some(g) => g.push(m),
            None => groups.push(vec![m]),
        }
    }
    groups.retain(|g| g.iter().any(|m| m.return_type != g[0].return_type));
    groups
}

/// An own method overriding an inherited one must keep its return type.
/// Throws clauses may differ freely; every exception is unchecked here.
pub fn check_overrides(subject: &str, table: &InterfaceTable) -> Vec<Diagnostic> {
    let Some(entry) = table.get(subject) else {
        return Vec::new();
    };
    let inherited = inherited_members(subject, table);
    let mut diags = Vec::new();
    for (method, own) in entry.decl.methods.iter().zip(own_members(subject, table)) {
        if let Some(clash) = inherited
            .iter()
            .find(|i| i.same_erasure(&own) && i.return_type != own.return_type)
        {
            diags.push(entry.error(
                method.pos,
                format!(
                    "incompatible return type in override: {} returns {}, but {} declares {}",
                    own.signature(),
                    own.return_type,
                    clash.origin,
                    clash.return_type
                ),
            ));
        }
    }
    diags
}
