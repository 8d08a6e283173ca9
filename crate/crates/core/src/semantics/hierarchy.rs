//! The interface table: every declaration by name, with resolution and
//! cycle diagnostics.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use indexmap::IndexMap;

use crate::diagnostics::Diagnostic;
use crate::syntax::{echo_line, CompilationUnit, InterfaceDecl, SourcePos, TypeRef};

#[derive(Clone, Debug)]
pub struct TableEntry {
    pub decl: InterfaceDecl,
    pub file: String,
    lines: Arc<Vec<String>>,
}

impl TableEntry {
    pub fn echo_line(&self, line: usize) -> &str {
        echo_line(&self.lines, line)
    }

    pub(crate) fn error(&self, pos: SourcePos, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(&self.file, pos.line, pos.column, message, self.echo_line(pos.line))
    }

    pub(crate) fn note(&self, pos: SourcePos, message: impl Into<String>) -> Diagnostic {
        Diagnostic::note(&self.file, pos.line, pos.column, message, self.echo_line(pos.line))
    }
}

/// Immutable once built; checks only read it.
#[derive(Clone, Debug, Default)]
pub struct InterfaceTable {
    entries: IndexMap<String, TableEntry>,
    /// Interfaces whose own hierarchy, or some ancestor's, is in error.
    broken: HashSet<String>,
    diagnostics: HashMap<String, Vec<Diagnostic>>,
}

impl InterfaceTable {
    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        self.entries.get(name)
    }

    pub fn decl(&self, name: &str) -> Option<&InterfaceDecl> {
        self.entries.get(name).map(|e| &e.decl)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True if `name` or one of its ancestors failed resolution.
    pub fn is_broken(&self, name: &str) -> bool {
        self.broken.contains(name)
    }

    /// Hierarchy diagnostics attributed to `name`.
    pub fn diagnostics_for(&self, name: &str) -> &[Diagnostic] {
        self.diagnostics.get(name).map_or(&[], Vec::as_slice)
    }

    fn report(&mut self, subject: &str, d: Diagnostic, out: &mut Vec<Diagnostic>) {
        self.diagnostics.entry(subject.to_owned()).or_default().push(d.clone());
        out.push(d);
    }
}

/// Registers every declaration, resolves super-interface references, checks
/// arities and rejects inheritance cycles.
pub fn build_hierarchy(units: &[CompilationUnit]) -> (InterfaceTable, Vec<Diagnostic>) {
    let mut table = InterfaceTable::default();
    let mut diags = Vec::new();

    for unit in units {
        let lines = Arc::new(unit.raw_lines.clone());
        for decl in &unit.decls {
            if decl.name.is_empty() {
                continue;
            }
            let entry = TableEntry {
                decl: decl.clone(),
                file: unit.source_name.clone(),
                lines: Arc::clone(&lines),
            };
            if table.entries.contains_key(&decl.name) {
                let d = entry.error(decl.pos, format!("duplicate interface: {}", decl.name));
                table.report(&decl.name, d, &mut diags);
            } else {
                table.entries.insert(decl.name.clone(), entry);
            }
        }
    }

    let mut broken = HashSet::new();
    let names: Vec<String> = table.entries.keys().cloned().collect();
    for name in &names {
        for (message, pos) in resolution_errors(&table, name) {
            let d = table.entries[name].error(pos, message);
            table.report(name, d, &mut diags);
            broken.insert(name.clone());
        }
    }

    for cycle in find_cycles(&table) {
        let head = &cycle[0];
        let entry = &table.entries[head];
        let d = entry.error(entry.decl.pos, format!("cyclic inheritance involving {}", cycle.join(" -> ")));
        table.report(head, d, &mut diags);
        broken.extend(cycle.iter().cloned());
    }

    // Anything that reaches a broken interface is broken too.
    loop {
        let before = broken.len();
        for (name, entry) in &table.entries {
            if !broken.contains(name) && entry.decl.super_refs.iter().any(|s| broken.contains(&s.name)) {
                broken.insert(name.clone());
            }
        }
        if broken.len() == before {
            break;
        }
    }
    table.broken = broken;
    (table, diags)
}

fn resolution_errors(table: &InterfaceTable, name: &str) -> Vec<(String, SourcePos)> {
    let decl = &table.entries[name].decl;
    let params: HashSet<&str> = decl.type_param_names().collect();
    let mut errors = Vec::new();

    for sref in &decl.super_refs {
        if params.contains(sref.name.as_str()) {
            errors.push((format!("unexpected type: type parameter {} cannot be a super-interface", sref.name), sref.pos));
            continue;
        }
        match table.decl(&sref.name) {
            None => errors.push((format!("unknown super-interface: {}", sref.name), sref.pos)),
            Some(target) if target.type_params.len() != sref.args.len() => errors.push((
                format!("wrong number of type arguments; required {}", target.type_params.len()),
                sref.pos,
            )),
            Some(_) => {}
        }
    }

    let mut types: Vec<&TypeRef> = decl.super_refs.iter().collect();
    for m in &decl.methods {
        types.push(&m.return_type);
        types.extend(m.params.iter().map(|p| &p.ty));
    }
    for t in types {
        parameter_application_errors(t, &params, &mut errors);
    }

    let mut signatures = HashSet::new();
    for m in &decl.methods {
        let key = (m.name.as_str(), m.params.iter().map(|p| &p.ty).collect::<Vec<_>>());
        if !signatures.insert(key) {
            let shown: Vec<String> = m.params.iter().map(|p| p.ty.to_string()).collect();
            errors.push((
                format!("method {}({}) is already defined in interface {name}", m.name, shown.join(",")),
                m.pos,
            ));
        }
    }
    errors
}

fn parameter_application_errors(t: &TypeRef, params: &HashSet<&str>, out: &mut Vec<(String, SourcePos)>) {
    if !t.args.is_empty() && params.contains(t.name.as_str()) {
        out.push((format!("type parameter {} cannot take type arguments", t.name), t.pos));
    }
    for a in &t.args {
        parameter_application_errors(a, params, out);
    }
}

/// Each cycle once, as a path that starts and ends at the same interface.
fn find_cycles(table: &InterfaceTable) -> Vec<Vec<String>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }

    fn visit(
        table: &InterfaceTable,
        name: &str,
        color: &mut HashMap<String, Color>,
        stack: &mut Vec<String>,
        cycles: &mut Vec<Vec<String>>,
    ) {
        color.insert(name.to_owned(), Color::Grey);
        stack.push(name.to_owned());
        for sref in &table.entries[name].decl.super_refs {
            if !table.entries.contains_key(&sref.name) {
                continue;
            }
            match color.get(sref.name.as_str()).copied().unwrap_or(Color::White) {
                Color::White => visit(table, &sref.name, color, stack, cycles),
                Color::Grey => {
                    let start = stack.iter().position(|n| *n == sref.name).expect("grey node is on the stack");
                    let mut cycle = stack[start..].to_vec();
                    cycle.push(sref.name.clone());
                    cycles.push(cycle);
                }
                Color::Black => {}
            }
        }
        stack.pop();
        color.insert(name.to_owned(), Color::Black);
    }

    let mut color = HashMap::new();
    let mut cycles = Vec::new();
    for name in table.entries.keys() {
        if color.get(name.as_str()).copied().unwrap_or(Color::White) == Color::White {
            visit(table, name, &mut color, &mut Vec::new(), &mut cycles);
        }
    }
    cycles
}
