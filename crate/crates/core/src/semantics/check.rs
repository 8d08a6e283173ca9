use std::collections::HashSet;
use std::fmt;

use super::hierarchy::InterfaceTable;
use super::instantiations::collect_instantiations;
use super::members::{ambiguous_groups, check_overrides, merge_members, MemberSignature};
use crate::diagnostics::Diagnostic;
use crate::syntax::TypeRef;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Reject multiple instantiations of one ancestor, as javac 8 does.
    #[default]
    Java8,
    /// Accept them and merge the instantiated member sets.
    Extended,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Java8 => "java8",
            Mode::Extended => "extended",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub interface_name: String,
    pub diagnostics: Vec<Diagnostic>,
    pub members: Vec<MemberSignature>,
    pub mode: Mode,
}

impl CheckReport {
    pub fn error_count(&self) -> usize {
        self.diagnostics.iter().filter(|d| d.is_error()).count()
    }

    pub fn notes(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| !d.is_error())
    }
}

pub fn check(subject: &str, table: &InterfaceTable, mode: Mode) -> CheckReport {
    match mode {
        Mode::Java8 => check_java8(subject, table),
        Mode::Extended => check_extended(subject, table),
    }
}

/// javac 8 semantics: an ancestor inherited at two argument tuples is an
/// error, as are inherited members whose return types cannot be reconciled.
pub fn check_java8(subject: &str, table: &InterfaceTable) -> CheckReport {
    let mut report = base_report(subject, table, Mode::Java8);
    let Some(entry) = checkable(subject, table) else {
        return report;
    };
    let decl = &entry.decl;

    let instantiations = collect_instantiations(decl, table);
    for ancestor in instantiations.conflicts() {
        let tuples = instantiations.get(ancestor).expect("conflicting ancestor is recorded");
        report.diagnostics.push(entry.error(
            decl.pos,
            format!(
                "{ancestor} cannot be inherited with different arguments: <{}> and <{}>",
                tuple_text(&tuples[0]),
                tuple_text(&tuples[1])
            ),
        ));
    }
    if instantiations.is_java8_valid() {
        report.diagnostics.extend(check_overrides(subject, table));
        for group in ambiguous_groups(subject, table) {
            let second = group
                .iter()
                .find(|m| m.return_type != group[0].return_type)
                .expect("group has two return types");
            report.diagnostics.push(entry.error(
                decl.pos,
                format!(
                    "types {} and {} are incompatible; both define {}, but with unrelated return types",
                    group[0].origin,
                    second.origin,
                    group[0].signature()
                ),
            ));
        }
    }
    finish(&mut report);
    if report.error_count() == 0 {
        report.members = merge_members(subject, table);
    }
    report
}

/// The proposed generalization: multiple instantiations are accepted and
/// their members merged. Same-signature members with different return types
/// become notes.
pub fn check_extended(subject: &str, table: &InterfaceTable) -> CheckReport {
    let mut report = base_report(subject, table, Mode::Extended);
    let Some(entry) = checkable(subject, table) else {
        return report;
    };
    report.diagnostics.extend(check_overrides(subject, table));
    for group in ambiguous_groups(subject, table) {
        let origins: Vec<String> = group.iter().map(|m| m.origin.to_string()).collect();
        report.diagnostics.push(entry.note(
            entry.decl.pos,
            format!(
                "ambiguous inherited member: {} from <{}>",
                group[0].signature(),
                origins.join(", ")
            ),
        ));
    }
    finish(&mut report);
    report.members = merge_members(subject, table);
    report
}

fn base_report(subject: &str, table: &InterfaceTable, mode: Mode) -> CheckReport {
    CheckReport {
        interface_name: subject.to_owned(),
        diagnostics: table.diagnostics_for(subject).to_vec(),
        members: Vec::new(),
        mode,
    }
}

fn checkable<'t>(subject: &str, table: &'t InterfaceTable) -> Option<&'t super::hierarchy::TableEntry> {
    if table.is_broken(subject) {
        None
    } else {
        table.get(subject)
    }
}

/// javac reports at most one error per source position.
fn finish(report: &mut CheckReport) {
    let mut seen = HashSet::new();
    report
        .diagnostics
        .retain(|d| !d.is_error() || seen.insert((d.file.clone(), d.line, d.caret_column)));
}

fn tuple_text(args: &[TypeRef]) -> String {
    args.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
