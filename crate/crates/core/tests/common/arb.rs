//! Generators for source texts, types and substitutions.

#![allow(dead_code)]

use proptest::prelude::*;

use ifacecheck::semantics::Substitution;
use ifacecheck::syntax::TypeRef;

pub const PARAM_POOL: [&str; 3] = ["T", "U", "V"];
const CONCRETE: [&str; 3] = ["Int", "Str", "Err"];
const EXCEPTIONS: [&str; 2] = ["Overflow", "ArithmeticException"];

/// A type shape whose parameter references are resolved against the
/// enclosing interface when rendered.
#[derive(Clone, Debug)]
pub enum Shape {
    Param(usize),
    Concrete(usize),
    Box(Box<Shape>),
}

fn shape() -> impl Strategy<Value = Shape> {
    let leaf = prop_oneof![3 => (0usize..3).prop_map(Shape::Param), 1 => (0usize..3).prop_map(Shape::Concrete)];
    leaf.prop_recursive(2, 4, 1, |inner| inner.prop_map(|s| Shape::Box(Box::new(s))))
}

fn render(s: &Shape, params: &[&str]) -> String {
    match s {
        Shape::Param(i) if !params.is_empty() => params[i % params.len()].to_owned(),
        Shape::Param(i) | Shape::Concrete(i) => CONCRETE[i % CONCRETE.len()].to_owned(),
        Shape::Box(inner) => format!("Box<{}>", render(inner, params)),
    }
}

#[derive(Clone, Debug)]
pub struct GenInterface {
    pub arity: usize,
    pub name_shift: usize,
    pub supers: Vec<(usize, Vec<Shape>)>,
    pub methods: Vec<(bool, Option<Shape>, Shape, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct GenHierarchy {
    pub interfaces: Vec<GenInterface>,
}

fn interface() -> impl Strategy<Value = GenInterface> {
    (
        0usize..=2,
        0usize..3,
        prop::collection::vec((any::<usize>(), prop::collection::vec(shape(), 2)), 0..=3),
        prop::collection::vec(
            (any::<bool>(), prop::option::of(shape()), shape(), prop::collection::vec(0usize..2, 0..=2)),
            0..=2,
        ),
    )
        .prop_map(|(arity, name_shift, supers, methods)| GenInterface {
            arity,
            name_shift,
            supers,
            methods,
        })
}

/// Acyclic by construction: interface `k` only extends interfaces below `k`.
pub fn hierarchy() -> impl Strategy<Value = GenHierarchy> {
    prop::collection::vec(interface(), 1..=6).prop_map(|interfaces| GenHierarchy { interfaces })
}

impl GenHierarchy {
    pub fn len(&self) -> usize {
        self.interfaces.len()
    }

    pub fn name(k: usize) -> String {
        format!("I{k}")
    }

    fn params(&self, k: usize) -> Vec<&'static str> {
        let g = &self.interfaces[k];
        (0..g.arity).map(|j| PARAM_POOL[(g.name_shift + j) % 3]).collect()
    }

    /// Source text of interface `k` alone, in package `p`.
    pub fn interface_source(&self, k: usize) -> String {
        let g = &self.interfaces[k];
        let params = self.params(k);
        let mut head = format!("interface {}", Self::name(k));
        if !params.is_empty() {
            head.push_str(&format!("<{}>", params.join(", ")));
        }
        if k > 0 && !g.supers.is_empty() {
            let supers: Vec<String> = g
                .supers
                .iter()
                .map(|(target, shapes)| {
                    let t = target % k;
                    let args: Vec<String> =
                        (0..self.interfaces[t].arity).map(|j| render(&shapes[j], &params)).collect();
                    if args.is_empty() {
                        Self::name(t)
                    } else {
                        format!("{}<{}>", Self::name(t), args.join(", "))
                    }
                })
                .collect();
            head.push_str(&format!(" extends {}", supers.join(", ")));
        }
        let mut body = String::new();
        let mut erasures: Vec<(bool, Option<String>)> = Vec::new();
        for (is_f, param, ret, throws) in &g.methods {
            let p = param.as_ref().map(|s| render(s, &params));
            if erasures.contains(&(*is_f, p.clone())) {
                continue;
            }
            erasures.push((*is_f, p.clone()));
            let name = if *is_f { "f" } else { "g" };
            let plist = p.map(|t| format!("{t} x")).unwrap_or_default();
            let mut exceptions: Vec<&str> = Vec::new();
            for t in throws {
                if !exceptions.contains(&EXCEPTIONS[*t]) {
                    exceptions.push(EXCEPTIONS[*t]);
                }
            }
            let throws = if exceptions.is_empty() { String::new() } else { format!(" throws {}", exceptions.join(", ")) };
            body.push_str(&format!("    {} {name}({plist}){throws};\n", render(ret, &params)));
        }
        format!("{head} {{\n{body}}}\n")
    }

    /// All interfaces in one compilation unit.
    pub fn source(&self) -> String {
        let mut s = String::from("package p;\n\n");
        for k in 0..self.len() {
            s.push_str(&self.interface_source(k));
        }
        s
    }
}

/// Types over the parameter pool plus a few concrete names, depth ≤ 3.
pub fn type_ref() -> impl Strategy<Value = TypeRef> {
    let leaf = prop_oneof![
        prop::sample::select(PARAM_POOL.to_vec()).prop_map(TypeRef::simple),
        prop::sample::select(CONCRETE.to_vec()).prop_map(TypeRef::simple),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        (prop::sample::select(vec!["Box", "Pair", "List"]), prop::collection::vec(inner, 1..=2))
            .prop_map(|(n, args)| TypeRef::named(n, args))
    })
}

/// Substitutions over a subset of the parameter pool.
pub fn substitution() -> impl Strategy<Value = Substitution> {
    prop::collection::vec((prop::sample::select(PARAM_POOL.to_vec()), type_ref()), 0..=3).prop_map(|bs| {
        let mut s = Substitution::new();
        for (n, t) in bs {
            s.bind(n, t);
        }
        s
    })
}
