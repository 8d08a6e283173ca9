mod common;

use common::arb::{hierarchy, substitution, type_ref, GenHierarchy, PARAM_POOL};
use ifacecheck::cli::{check_sources, SourceFile};
use ifacecheck::corpus::load_corpus;
use ifacecheck::diagnostics::{render_transcript, Diagnostic};
use ifacecheck::semantics::{
    build_hierarchy, check_java8, collect_instantiations, substitute, Mode, Substitution,
};
use ifacecheck::syntax::{display_width, parse_source, pretty_print, CompilationUnit, TypeRef};
use proptest::prelude::*;

type MethodShape = (String, String, Vec<(String, String)>, Vec<String>);
type DeclShape = (String, Vec<String>, Vec<TypeRef>, Vec<MethodShape>);

/// The AST with every source position dropped.
fn shape(unit: &CompilationUnit) -> (String, Vec<DeclShape>) {
    let decls = unit
        .decls
        .iter()
        .map(|d| {
            let methods = d
                .methods
                .iter()
                .map(|m| {
                    let params = m.params.iter().map(|p| (p.ty.to_string(), p.name.text.clone())).collect();
                    let throws = m.throws_list.iter().map(|t| t.text.clone()).collect();
                    (m.name.clone(), m.return_type.to_string(), params, throws)
                })
                .collect();
            (d.name.clone(), d.type_param_names().map(str::to_owned).collect(), d.super_refs.clone(), methods)
        })
        .collect();
    (unit.package_name.clone(), decls)
}

/// Every diagnostic points into its echoed line, or just past its end.
fn positions_are_faithful(unit: &CompilationUnit, diags: &[Diagnostic]) -> Result<(), TestCaseError> {
    for d in diags {
        prop_assert!(d.line >= 1 && d.line <= unit.raw_lines.len(), "{d:?}");
        prop_assert_eq!(&d.echo_line, &unit.raw_lines[d.line - 1]);
        prop_assert!(d.caret_column >= 1 && d.caret_column <= display_width(&d.echo_line) + 1, "{d:?}");
    }
    Ok(())
}

const VOCABULARY: &[&str] = &[
    "package", "interface", "extends", "throws", "A", "B", "T", "x", "<", ">", ",", ";", "(", ")", "{", "}", ".",
    "#", " ", " ", "\n", "\n", "\t",
];

fn token_soup() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(VOCABULARY.to_vec()), 0..80).prop_map(|ts| ts.join(" "))
}

fn split_files(h: &GenHierarchy) -> Vec<SourceFile> {
    (0..h.len())
        .map(|k| SourceFile {
            name: format!("p/{}.java", GenHierarchy::name(k)),
            content: format!("package p;\n\n{}", h.interface_source(k)),
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn pretty_printed_units_reparse_identically(h in hierarchy()) {
        let (unit, diags) = parse_source(&h.source(), "p/Gen.java");
        prop_assert!(diags.is_empty());
        let printed = pretty_print(&unit);
        let (again, diags) = parse_source(&printed, "p/Gen.java");
        prop_assert!(diags.is_empty(), "{printed}\n{diags:?}");
        prop_assert_eq!(shape(&unit), shape(&again));
        prop_assert_eq!(pretty_print(&again), printed);
    }

    #[test]
    fn recovery_terminates_with_faithful_positions(src in token_soup()) {
        let (unit, diags) = parse_source(&src, "fuzz.java");
        positions_are_faithful(&unit, &diags)?;
        let (_, again) = parse_source(&src, "fuzz.java");
        prop_assert_eq!(diags, again);
    }

    #[test]
    fn corrupted_sources_keep_faithful_positions(h in hierarchy(), cut in any::<prop::sample::Index>(), junk in prop::sample::select(VOCABULARY.to_vec())) {
        let mut src = h.source();
        let at = cut.index(src.len() + 1);
        src.insert_str(at, junk);
        let (unit, diags) = parse_source(&src, "p/Gen.java");
        positions_are_faithful(&unit, &diags)?;
    }

    #[test]
    fn split_sources_are_order_independent(
        (h, perm) in hierarchy().prop_flat_map(|h| {
            let idx: Vec<usize> = (0..h.len()).collect();
            (Just(h), Just(idx).prop_shuffle())
        })
    ) {
        let files = split_files(&h);
        let shuffled: Vec<SourceFile> = perm.iter().map(|&i| files[i].clone()).collect();
        for mode in [Mode::Java8, Mode::Extended] {
            let a = check_sources(&files, mode, &[]);
            let b = check_sources(&shuffled, mode, &[]);
            prop_assert_eq!(a.transcript().text(), b.transcript().text());
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(&a, &check_sources(&files, mode, &[]));
        }
    }

    #[test]
    fn second_instantiation_flips_java8_to_one_error(h in hierarchy(), pick in any::<prop::sample::Index>()) {
        let (unit, _) = parse_source(&h.source(), "p/Gen.java");
        let units = vec![unit.clone()];
        let (table, _) = build_hierarchy(&units);
        let mut candidates = Vec::new();
        for (k, decl) in unit.decls.iter().enumerate() {
            if check_java8(&decl.name, &table).error_count() != 0 {
                continue;
            }
            for (ancestor, tuples) in collect_instantiations(decl, &table).iter() {
                if !tuples[0].is_empty() {
                    candidates.push((k, ancestor.to_owned(), tuples[0].len()));
                }
            }
        }
        prop_assume!(!candidates.is_empty());
        let (k, ancestor, arity) = candidates[pick.index(candidates.len())].clone();
        let mut edited = unit;
        edited.decls[k].super_refs.push(TypeRef::named(ancestor.clone(), vec![TypeRef::simple("Fresh"); arity]));
        let subject = edited.decls[k].name.clone();
        let (table, diags) = build_hierarchy(&[edited]);
        prop_assert!(diags.is_empty());
        let report = check_java8(&subject, &table);
        prop_assert_eq!(report.error_count(), 1);
        let prefix = format!("{ancestor} cannot be inherited with different arguments: <");
        prop_assert!(report.diagnostics[0].message.starts_with(&prefix), "{:?}", report.diagnostics);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn identity_substitution_is_neutral(t in type_ref()) {
        prop_assert_eq!(substitute(&t, &Substitution::identity(PARAM_POOL)), t.clone());
        prop_assert_eq!(substitute(&t, &Substitution::new()), t);
    }

    #[test]
    fn composition_applies_in_sequence(t in type_ref(), s1 in substitution(), s2 in substitution()) {
        prop_assert_eq!(substitute(&substitute(&t, &s1), &s2), substitute(&t, &s1.compose(&s2)));
    }

    #[test]
    fn transcript_has_three_lines_per_diagnostic(n_err in 0usize..5, n_note in 0usize..5) {
        let mut ds = Vec::new();
        for i in 0..n_err {
            ds.push(Diagnostic::error("a.java", i + 1, 1, "e", "x"));
        }
        for i in 0..n_note {
            ds.push(Diagnostic::note("a.java", i + 1, 1, "n", "x"));
        }
        let t = render_transcript(&ds);
        prop_assert_eq!(t.rendered_lines.len(), 3 * (n_err + n_note) + usize::from(n_err > 0));
        prop_assert_eq!(t.error_count, n_err);
    }
}

#[test]
fn corpus_parses_identically_twice() {
    for e in load_corpus().unwrap() {
        let a = parse_source(e.content, &e.relative_path);
        let b = parse_source(e.content, &e.relative_path);
        assert_eq!(a.1, b.1);
        assert_eq!(shape(&a.0), shape(&b.0));
    }
}

#[test]
fn composition_does_not_capture() {
    let mut swap = Substitution::new();
    swap.bind("T", TypeRef::simple("U")).bind("U", TypeRef::simple("T"));
    let pair = TypeRef::named("Pair", vec![TypeRef::simple("T"), TypeRef::simple("U")]);
    assert_eq!(substitute(&pair, &swap).to_string(), "Pair<U,T>");
    assert_eq!(substitute(&pair, &swap.compose(&swap)), pair);
}
