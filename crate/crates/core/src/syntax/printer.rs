use std::fmt::Write;

use super::{CompilationUnit, TypeRef};

/// Renders a unit back to source that parses to the same AST.
pub fn pretty_print(unit: &CompilationUnit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "package {};", unit.package_name);
    for decl in &unit.decls {
        out.push('\n');
        let _ = write!(out, "interface {}", decl.name);
        if !decl.type_params.is_empty() {
            let params: Vec<&str> = decl.type_param_names().collect();
            let _ = write!(out, "<{}>", params.join(", "));
        }
        if !decl.super_refs.is_empty() {
            let supers: Vec<String> = decl.super_refs.iter().map(type_text).collect();
            let _ = write!(out, "\n    extends {}", supers.join(",\n            "));
        }
        out.push_str(" {\n");
        for m in &decl.methods {
            let params: Vec<String> = m
                .params
                .iter()
                .map(|p| format!("{} {}", type_text(&p.ty), p.name.text))
                .collect();
            let _ = write!(out, "\n    {} {}({})", type_text(&m.return_type), m.name, params.join(", "));
            if !m.throws_list.is_empty() {
                let names: Vec<&str> = m.throws_list.iter().map(|e| e.text.as_str()).collect();
                let _ = write!(out, " throws {}", names.join(", "));
            }
            out.push_str(";\n");
        }
        out.push_str("\n}\n");
    }
    out
}

fn type_text(t: &TypeRef) -> String {
    if t.args.is_empty() {
        t.name.clone()
    } else {
        let args: Vec<String> = t.args.iter().map(type_text).collect();
        format!("{}<{}>", t.name, args.join(", "))
    }
}
