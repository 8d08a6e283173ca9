//! Recursive descent over the token stream with javac-style recovery.
//!
//! Two javac conventions shape the diagnostics:
//!
//! * an error is dropped unless it lies strictly after the previous one, so
//!   a token that already caused an error cannot cause another;
//! * a missing `;` is reported just past the previous token.
//!
//! When a declaration header cannot be parsed, the remaining tokens are read
//! as stray member declarations until the closing `}`. Stray `extends` and
//! `throws` keywords are header remnants and are skipped silently.

use std::collections::HashSet;

use super::{echo_line, CompilationUnit, Ident, InterfaceDecl, MethodSig, Param, SourcePos, Token, TokenKind, TypeRef};
use crate::diagnostics::Diagnostic;

use TokenKind as K;

/// Parses a token stream (ending in end-of-input) into a compilation unit.
pub fn parse_unit(tokens: &[Token], raw_lines: Vec<String>, source_name: &str) -> (CompilationUnit, Vec<Diagnostic>) {
    assert!(
        tokens.last().is_some_and(|t| t.kind == K::Eof),
        "token stream must end with end-of-input"
    );
    let mut p = Parser {
        tokens,
        idx: 0,
        lines: &raw_lines,
        file: source_name,
        diags: Vec::new(),
        last_error: None,
    };
    let (package_name, decls) = p.unit();
    let diags = p.diags;
    let unit = CompilationUnit {
        package_name,
        decls,
        source_name: source_name.to_owned(),
        raw_lines,
    };
    (unit, diags)
}

/// Whether a member scope is a real body or the leftovers of a broken header.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    Body,
    Stray,
}

struct Parser<'a> {
    tokens: &'a [Token],
    idx: usize,
    lines: &'a [String],
    file: &'a str,
    diags: Vec<Diagnostic>,
    last_error: Option<SourcePos>,
}

impl<'a> Parser<'a> {
    fn tok(&self) -> &'a Token {
        &self.tokens[self.idx]
    }

    fn kind(&self) -> TokenKind {
        self.tok().kind
    }

    fn peek_kind(&self, n: usize) -> TokenKind {
        self.tokens.get(self.idx + n).map_or(K::Eof, |t| t.kind)
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.idx];
        if t.kind != K::Eof {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.kind() == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error_at(&mut self, pos: SourcePos, message: impl Into<String>) {
        if self.last_error.is_some_and(|last| pos <= last) {
            return;
        }
        self.last_error = Some(pos);
        self.diags.push(Diagnostic::error(
            self.file,
            pos.line,
            pos.column,
            message,
            echo_line(self.lines, pos.line),
        ));
    }

    fn error_here(&mut self, message: &str) {
        self.error_at(self.tok().pos, message);
    }

    /// Reports just past the previous token, as javac does for a missing `;`.
    fn error_after_previous(&mut self, message: &str) {
        let pos = match self.idx.checked_sub(1) {
            Some(i) => {
                let prev = &self.tokens[i];
                SourcePos::new(prev.pos.line, prev.end_column())
            }
            None => self.tok().pos,
        };
        self.error_at(pos, message);
    }

    fn ident(&mut self) -> Option<Ident> {
        if self.kind() == K::Ident {
            let t = self.bump();
            Some(Ident {
                text: t.lexeme.clone(),
                pos: t.pos,
            })
        } else {
            None
        }
    }

    fn unit(&mut self) -> (String, Vec<InterfaceDecl>) {
        let package_name = if self.eat(K::Package) {
            self.package_name()
        } else {
            self.error_here("package declaration expected");
            String::new()
        };
        let mut decls = Vec::new();
        loop {
            match self.kind() {
                K::Eof => break,
                K::Interface => decls.push(self.interface_decl()),
                _ => {
                    self.error_here("class, interface, or enum expected");
                    self.bump();
                    while !matches!(self.kind(), K::Interface | K::Eof) {
                        self.bump();
                    }
                }
            }
        }
        (package_name, decls)
    }

    fn package_name(&mut self) -> String {
        let mut parts = Vec::new();
        loop {
            match self.ident() {
                Some(id) => parts.push(id.text),
                None => {
                    self.error_here("<identifier> expected");
                    break;
                }
            }
            if !self.eat(K::Dot) {
                break;
            }
        }
        if !self.eat(K::Semi) {
            self.error_after_previous("';' expected");
        }
        parts.join(".")
    }

    fn interface_decl(&mut self) -> InterfaceDecl {
        let keyword = self.bump();
        let mut decl = InterfaceDecl {
            name: String::new(),
            type_params: Vec::new(),
            super_refs: Vec::new(),
            methods: Vec::new(),
            pos: keyword.pos,
        };
        if self.header(&mut decl) {
            self.members(&mut decl, Scope::Body);
        } else {
            self.members(&mut decl, Scope::Stray);
        }
        self.check_duplicates(&decl);
        decl
    }

    /// Parses name, type parameters, extends clause and the opening brace.
    /// Returns false once the header had to be abandoned.
    fn header(&mut self, decl: &mut InterfaceDecl) -> bool {
        match self.ident() {
            Some(name) => decl.name = name.text,
            None => {
                self.error_here("<identifier> expected");
                return false;
            }
        }
        if self.eat(K::Lt) {
            loop {
                match self.ident() {
                    Some(p) => decl.type_params.push(p),
                    None => {
                        self.error_here("<identifier> expected");
                        return false;
                    }
                }
                match self.kind() {
                    K::Comma => {
                        self.bump();
                    }
                    K::Gt => {
                        self.bump();
                        break;
                    }
                    _ => {
                        self.error_here("> expected");
                        return false;
                    }
                }
            }
        }
        if self.eat(K::Extends) {
            loop {
                if self.kind() != K::Ident {
                    self.error_here("<identifier> expected");
                    return false;
                }
                match self.type_ref() {
                    Some(t) => decl.super_refs.push(t),
                    None => return false,
                }
                if !self.eat(K::Comma) {
                    break;
                }
            }
        }
        if self.eat(K::LBrace) {
            true
        } else {
            self.error_here("'{' expected");
            false
        }
    }

    /// `Name` or `Name<T1, ..., Tn>`; the current token must be an identifier.
    fn type_ref(&mut self) -> Option<TypeRef> {
        let head = self.bump();
        debug_assert_eq!(head.kind, K::Ident);
        let mut args = Vec::new();
        if self.eat(K::Lt) {
            loop {
                if self.kind() != K::Ident {
                    self.error_here("<identifier> expected");
                    return None;
                }
                args.push(self.type_ref()?);
                match self.kind() {
                    K::Comma => {
                        self.bump();
                    }
                    K::Gt => {
                        self.bump();
                        break;
                    }
                    _ => {
                        self.error_here("> expected");
                        return None;
                    }
                }
            }
        }
        Some(TypeRef {
            name: head.lexeme.clone(),
            args,
            pos: head.pos,
        })
    }

    /// Member declarations up to and including the closing `}`.
    fn members(&mut self, decl: &mut InterfaceDecl, mut scope: Scope) {
        loop {
            match self.kind() {
                K::Eof => {
                    if scope == Scope::Body {
                        self.error_here("reached end of file while parsing");
                    }
                    return;
                }
                K::RBrace => {
                    self.bump();
                    return;
                }
                K::Interface => {
                    self.error_after_previous("'}' expected");
                    return;
                }
                K::Semi => {
                    self.bump();
                }
                K::Extends | K::Throws if scope == Scope::Stray => {
                    self.bump();
                }
                K::Gt | K::Comma => {
                    while matches!(self.kind(), K::Gt | K::Comma) {
                        self.bump();
                    }
                    self.error_after_previous("';' expected");
                }
                K::Ident => {
                    if let Some(m) = self.member() {
                        decl.methods.push(m);
                    }
                }
                K::LBrace => {
                    self.error_here("illegal start of type");
                    self.bump();
                    scope = Scope::Body;
                }
                _ => {
                    self.error_here("illegal start of type");
                    self.bump();
                }
            }
        }
    }

    /// One method declaration starting at an identifier. Consumes at least
    /// that identifier. Returns the signature only if it parsed cleanly.
    fn member(&mut self) -> Option<MethodSig> {
        let return_type = self.type_ref()?;
        match self.kind() {
            K::Ident => {
                let name = self.ident().expect("identifier");
                self.declarator_tail(Some(name), return_type)
            }
            K::LParen => {
                self.error_here("<identifier> expected");
                self.declarator_tail(None, return_type)
            }
            K::LBrace => {
                self.error_here("illegal start of type");
                self.bump();
                self.declarator_tail(None, return_type)
            }
            _ => {
                self.error_here("<identifier> expected");
                None
            }
        }
    }

    /// Everything after the method name: parameters, throws clause, `;`.
    fn declarator_tail(&mut self, name: Option<Ident>, return_type: TypeRef) -> Option<MethodSig> {
        if !self.eat(K::LParen) {
            self.error_here("'(' expected");
            if self.kind() == K::Ident && self.peek_kind(1) == K::Lt {
                self.bump();
                self.skip_type_args();
            }
            return None;
        }
        let params = self.params()?;
        let mut throws_list = Vec::new();
        if self.eat(K::Throws) {
            loop {
                match self.ident() {
                    Some(e) => throws_list.push(e),
                    None => {
                        self.error_here("<identifier> expected");
                        return None;
                    }
                }
                if !self.eat(K::Comma) {
                    break;
                }
            }
        }
        if !self.eat(K::Semi) {
            self.error_after_previous("';' expected");
            return None;
        }
        let name = name?;
        Some(MethodSig {
            pos: return_type.pos,
            name: name.text,
            return_type,
            params,
            throws_list,
        })
    }

    /// Formal parameters after `(`, through `)`.
    fn params(&mut self) -> Option<Vec<Param>> {
        let mut params = Vec::new();
        if self.eat(K::RParen) {
            return Some(params);
        }
        loop {
            if self.kind() != K::Ident {
                self.error_here("<identifier> expected");
                self.skip_to_close_paren();
                return None;
            }
            let Some(ty) = self.type_ref() else {
                self.skip_to_close_paren();
                return None;
            };
            let Some(name) = self.ident() else {
                self.error_here("<identifier> expected");
                self.skip_to_close_paren();
                return None;
            };
            params.push(Param { ty, name });
            match self.kind() {
                K::Comma => {
                    self.bump();
                }
                K::RParen => {
                    self.bump();
                    return Some(params);
                }
                _ => {
                    self.error_here("')' expected");
                    self.skip_to_close_paren();
                    return None;
                }
            }
        }
    }

    fn skip_to_close_paren(&mut self) {
        while !matches!(self.kind(), K::RParen | K::Semi | K::LBrace | K::RBrace | K::Eof) {
            self.bump();
        }
        self.eat(K::RParen);
    }

    /// Skips a balanced `<...>` group, stopping early at statement punctuation.
    fn skip_type_args(&mut self) {
        let mut depth = 0usize;
        loop {
            match self.kind() {
                K::Lt => depth += 1,
                K::Gt => {
                    depth = depth.saturating_sub(1);
                    if depth == 0 {
                        self.bump();
                        return;
                    }
                }
                K::Semi | K::LBrace | K::RBrace | K::Eof => return,
                _ => {}
            }
            self.bump();
        }
    }

    fn check_duplicates(&mut self, decl: &InterfaceDecl) {
        let mut seen = HashSet::new();
        for p in &decl.type_params {
            if !seen.insert(p.text.as_str()) {
                self.report_unconditionally(p.pos, format!("duplicate type parameter: {}", p.text));
            }
        }
        for m in &decl.methods {
            let mut names = HashSet::new();
            for p in &m.params {
                if !names.insert(p.name.text.as_str()) {
                    self.report_unconditionally(
                        p.name.pos,
                        format!("variable {} is already defined in method {}", p.name.text, m.name),
                    );
                }
            }
            let mut thrown = HashSet::new();
            for e in &m.throws_list {
                if !thrown.insert(e.text.as_str()) {
                    self.report_unconditionally(e.pos, format!("repeated exception in throws clause: {}", e.text));
                }
            }
        }
    }

    // Well-formedness checks run after the declaration, so they bypass the
    // strictly-increasing position rule.
    fn report_unconditionally(&mut self, pos: SourcePos, message: String) {
        self.diags.push(Diagnostic::error(
            self.file,
            pos.line,
            pos.column,
            message,
            echo_line(self.lines, pos.line),
        ));
    }
}
