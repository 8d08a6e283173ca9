use indexmap::IndexMap;

use crate::syntax::{InterfaceDecl, TypeRef};

/// A finite map from type-parameter names to types.
///
/// Application is simultaneous: every bound name is replaced in one pass, so
/// a binding's right-hand side is never rewritten by another binding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    bindings: IndexMap<String, TypeRef>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Maps each name to a reference to itself.
    pub fn identity<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        let mut s = Self::new();
        for n in names {
            s.bind(n, TypeRef::simple(n));
        }
        s
    }

    /// Binds `decl`'s type parameters to `args`, positionally.
    pub fn for_instantiation(decl: &InterfaceDecl, args: &[TypeRef]) -> Self {
        debug_assert_eq!(decl.type_params.len(), args.len());
        let mut s = Self::new();
        for (p, a) in decl.type_params.iter().zip(args) {
            s.bind(&p.text, a.clone());
        }
        s
    }

    pub fn bind(&mut self, name: &str, t: TypeRef) -> &mut Self {
        self.bindings.insert(name.to_owned(), t);
        self
    }

    pub fn get(&self, name: &str) -> Option<&TypeRef> {
        self.bindings.get(name)
    }

    pub fn domain(&self) -> impl Iterator<Item = &str> {
        self.bindings.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// The substitution that applies `self` and then `then`.
    pub fn compose(&self, then: &Substitution) -> Substitution {
        let mut out = Substitution::new();
        for (name, t) in &self.bindings {
            out.bind(name, substitute(t, then));
        }
        for (name, t) in &then.bindings {
            if !out.bindings.contains_key(name) {
                out.bind(name, t.clone());
            }
        }
        out
    }
}

/// Replaces bare references to names in `s`'s domain; all else is kept.
pub fn substitute(t: &TypeRef, s: &Substitution) -> TypeRef {
    if t.args.is_empty() {
        if let Some(bound) = s.get(&t.name) {
            return bound.clone();
        }
    }
    TypeRef {
        name: t.name.clone(),
        args: t.args.iter().map(|a| substitute(a, s)).collect(),
        pos: t.pos,
    }
}
