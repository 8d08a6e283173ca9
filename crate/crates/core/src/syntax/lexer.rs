use super::{display_width, echo_line, split_lines, SourcePos, Token, TokenKind, TAB_WIDTH};
use crate::diagnostics::Diagnostic;

/// Splits `source` into tokens, always ending with an end-of-input token.
///
/// `//` comments run to the end of the line. Characters outside the token
/// alphabet are reported as "illegal character" and skipped.
pub fn tokenize(source: &str, source_name: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let lines = split_lines(source);
    let mut tokens = Vec::new();
    let mut diags = Vec::new();

    let mut chars = source.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);

    while let Some(c) = chars.next() {
        let pos = SourcePos::new(line, column);
        match c {
            '\n' => {
                line += 1;
                column = 1;
            }
            '\t' => column = ((column - 1) / TAB_WIDTH + 1) * TAB_WIDTH + 1,
            ' ' | '\r' | '\x0C' => column += 1,
            '/' if chars.peek() == Some(&'/') => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::from(c);
                while let Some(&next) = chars.peek() {
                    if next.is_ascii_alphanumeric() || next == '_' {
                        word.push(next);
                        chars.next();
                    } else {
                        break;
                    }
                }
                column += word.len();
                let kind = TokenKind::keyword(&word).unwrap_or(TokenKind::Ident);
                tokens.push(Token { kind, lexeme: word, pos });
            }
            c => {
                column += 1;
                match TokenKind::punct(c) {
                    Some(kind) => tokens.push(Token {
                        kind,
                        lexeme: c.to_string(),
                        pos,
                    }),
                    None => diags.push(Diagnostic::error(
                        source_name,
                        pos.line,
                        pos.column,
                        format!("illegal character: {}", quote_char(c)),
                        echo_line(&lines, pos.line),
                    )),
                }
            }
        }
    }

    let last = lines.len();
    tokens.push(Token {
        kind: TokenKind::Eof,
        lexeme: String::new(),
        pos: SourcePos::new(last, display_width(&lines[last - 1]) + 1),
    });
    (tokens, diags)
}

fn quote_char(c: char) -> String {
    if c.is_ascii_graphic() {
        format!("'{c}'")
    } else {
        format!("'\\u{:04x}'", c as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src, "t").0.into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn small_interface() {
        assert_eq!(kinds("interface F <T> {}"), vec![Interface, Ident, Lt, Ident, Gt, LBrace, RBrace, Eof]);
    }

    #[test]
    fn comment_is_dropped() {
        let (toks, diags) = tokenize("T getMultInv() throws ArithmeticException; // div by Zero!", "t");
        assert!(diags.is_empty());
        assert_eq!(toks.len(), 8);
        assert_eq!(toks[7].kind, Eof);
        assert_eq!(toks[4].kind, Throws);
        assert_eq!(toks[5].lexeme, "ArithmeticException");
    }

    #[test]
    fn empty_input_is_just_eof() {
        let (toks, _) = tokenize("", "t");
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].kind, Eof);
        assert_eq!(toks[0].pos, SourcePos::new(1, 1));
    }

    #[test]
    fn positions_point_at_first_character() {
        let (toks, _) = tokenize("package algebra;\n\ninterface VectorSpace     <Vector<Scalar>>", "t");
        let second_lt = toks.iter().filter(|t| t.kind == Lt).nth(1).unwrap();
        assert_eq!(second_lt.pos, SourcePos::new(3, 34));
        let eof = toks.last().unwrap();
        assert_eq!(eof.pos, SourcePos::new(3, 43));
    }

    #[test]
    fn illegal_characters_are_reported_and_skipped() {
        let (toks, diags) = tokenize("T # x", "f.java");
        assert_eq!(toks.len(), 3);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].message, "illegal character: '#'");
        assert_eq!(diags[0].caret_column, 3);
    }

    #[test]
    fn lone_slash_is_illegal() {
        let (_, diags) = tokenize("a / b", "f");
        assert_eq!(diags.len(), 1);
    }

    #[test]
    fn tab_advances_to_next_stop() {
        let (toks, _) = tokenize("\tT", "t");
        assert_eq!(toks[0].pos.column, 9);
    }
}
