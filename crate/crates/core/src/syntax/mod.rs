//! Lexing and parsing of the interface language.
//!
//! The language is a small Java subset: a package declaration followed by
//! generic interface declarations whose bodies hold abstract method
//! signatures. The parser never fails; it returns a best-effort AST plus
//! diagnostics, recovering the way javac does on the inputs that matter.

mod lexer;
mod parser;
mod printer;

use std::fmt;
use std::hash::{Hash, Hasher};

pub use lexer::tokenize;
pub use parser::parse_unit;
pub use printer::pretty_print;

use crate::diagnostics::Diagnostic;

const TAB_WIDTH: usize = 8;

/// 1-based line and display column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SourcePos {
    pub line: usize,
    pub column: usize,
}

impl SourcePos {
    pub fn new(line: usize, column: usize) -> Self {
        SourcePos { line, column }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Package,
    Interface,
    Extends,
    Throws,
    Ident,
    Lt,
    Gt,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Dot,
    Eof,
}

impl TokenKind {
    pub fn keyword(word: &str) -> Option<TokenKind> {
        match word {
            "package" => Some(TokenKind::Package),
            "interface" => Some(TokenKind::Interface),
            "extends" => Some(TokenKind::Extends),
            "throws" => Some(TokenKind::Throws),
            _ => None,
        }
    }

    pub fn punct(c: char) -> Option<TokenKind> {
        Some(match c {
            '<' => TokenKind::Lt,
            '>' => TokenKind::Gt,
            ',' => TokenKind::Comma,
            ';' => TokenKind::Semi,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '{' => TokenKind::LBrace,
            '}' => TokenKind::RBrace,
            '.' => TokenKind::Dot,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub pos: SourcePos,
}

impl Token {
    /// Column just past the lexeme.
    pub fn end_column(&self) -> usize {
        self.pos.column + self.lexeme.chars().count()
    }
}

/// A named type applied to arguments, or a bare type-parameter reference.
///
/// Equality and hashing ignore `pos`: two occurrences of `AdditiveGroup<T>`
/// denote the same type wherever they were written.
#[derive(Clone, Debug)]
pub struct TypeRef {
    pub name: String,
    pub args: Vec<TypeRef>,
    pub pos: SourcePos,
}

impl TypeRef {
    pub fn named(name: impl Into<String>, args: Vec<TypeRef>) -> Self {
        TypeRef {
            name: name.into(),
            args,
            pos: SourcePos::default(),
        }
    }

    pub fn simple(name: impl Into<String>) -> Self {
        Self::named(name, Vec::new())
    }

    pub fn depth(&self) -> usize {
        1 + self.args.iter().map(TypeRef::depth).max().unwrap_or(0)
    }
}

impl PartialEq for TypeRef {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.args == other.args
    }
}

impl Eq for TypeRef {}

impl Hash for TypeRef {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state);
        self.args.hash(state);
    }
}

impl fmt::Display for TypeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.args.is_empty() {
            f.write_str("<")?;
            write_list(f, &self.args, ",")?;
            f.write_str(">")?;
        }
        Ok(())
    }
}

pub(crate) fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T], sep: &str) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// An identifier together with where it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub text: String,
    pub pos: SourcePos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub ty: TypeRef,
    pub name: Ident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodSig {
    pub name: String,
    pub return_type: TypeRef,
    pub params: Vec<Param>,
    pub throws_list: Vec<Ident>,
    pub pos: SourcePos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceDecl {
    pub name: String,
    pub type_params: Vec<Ident>,
    pub super_refs: Vec<TypeRef>,
    pub methods: Vec<MethodSig>,
    /// Position of the `interface` keyword.
    pub pos: SourcePos,
}

impl InterfaceDecl {
    pub fn type_param_names(&self) -> impl Iterator<Item = &str> {
        self.type_params.iter().map(|p| p.text.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompilationUnit {
    pub package_name: String,
    pub decls: Vec<InterfaceDecl>,
    pub source_name: String,
    pub raw_lines: Vec<String>,
}

impl CompilationUnit {
    /// The source line for `line`, or "" past the end.
    pub fn echo_line(&self, line: usize) -> &str {
        echo_line(&self.raw_lines, line)
    }
}

pub(crate) fn echo_line(lines: &[String], line: usize) -> &str {
    line.checked_sub(1).and_then(|i| lines.get(i)).map_or("", String::as_str)
}

/// Splits source text into the lines diagnostics echo. Always at least one.
pub fn split_lines(source: &str) -> Vec<String> {
    let mut lines: Vec<String> = source
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l).to_owned())
        .collect();
    if lines.len() > 1 && lines.last().is_some_and(String::is_empty) {
        lines.pop();
    }
    lines
}

/// Display width of a line prefix, expanding tabs to the next multiple of 8.
pub fn display_width(text: &str) -> usize {
    text.chars().fold(0, |col, c| if c == '\t' { (col / TAB_WIDTH + 1) * TAB_WIDTH } else { col + 1 })
}

/// Tokenizes and parses one source file.
pub fn parse_source(source: &str, source_name: &str) -> (CompilationUnit, Vec<Diagnostic>) {
    let (tokens, mut diags) = tokenize(source, source_name);
    let (unit, parse_diags) = parse_unit(&tokens, split_lines(source), source_name);
    diags.extend(parse_diags);
    (unit, diags)
}
