//! javac-style diagnostic rendering and golden transcript comparison.

use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Note,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Note => "note",
        })
    }
}

/// One message anchored at a source position, with the source line it echoes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagnostic {
    pub severity: Severity,
    pub file: String,
    pub line: usize,
    pub message: String,
    pub echo_line: String,
    /// 1-based display column of the caret within `echo_line`.
    pub caret_column: usize,
}

impl Diagnostic {
    pub fn error(file: &str, line: usize, column: usize, message: impl Into<String>, echo_line: &str) -> Self {
        Self::with_severity(Severity::Error, file, line, column, message, echo_line)
    }

    pub fn note(file: &str, line: usize, column: usize, message: impl Into<String>, echo_line: &str) -> Self {
        Self::with_severity(Severity::Note, file, line, column, message, echo_line)
    }

    fn with_severity(
        severity: Severity,
        file: &str,
        line: usize,
        column: usize,
        message: impl Into<String>,
        echo_line: &str,
    ) -> Self {
        Diagnostic {
            severity,
            file: file.to_owned(),
            line,
            message: message.into(),
            echo_line: echo_line.to_owned(),
            caret_column: column.max(1),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// Header, echoed source line, and caret line.
    pub fn render(&self) -> [String; 3] {
        [
            format!("{}:{}: {}: {}", self.file, self.line, self.severity, self.message),
            self.echo_line.clone(),
            format!("{}^", " ".repeat(self.caret_column - 1)),
        ]
    }
}

/// Rendered diagnostics plus the error-count trailer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Transcript {
    pub rendered_lines: Vec<String>,
    pub error_count: usize,
}

impl Transcript {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for line in &self.rendered_lines {
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.rendered_lines.is_empty()
    }
}

/// Renders diagnostics in order and appends "1 error" / "N errors" when any
/// error is present. Notes are printed but not counted.
pub fn render_transcript(ds: &[Diagnostic]) -> Transcript {
    let mut rendered_lines: Vec<String> = ds.iter().flat_map(Diagnostic::render).collect();
    let error_count = ds.iter().filter(|d| d.is_error()).count();
    match error_count {
        0 => {}
        1 => rendered_lines.push("1 error".to_owned()),
        n => rendered_lines.push(format!("{n} errors")),
    }
    Transcript {
        rendered_lines,
        error_count,
    }
}

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("missing golden file {}", .0.display())]
    Missing(PathBuf),
    #[error("cannot read golden file {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenComparison {
    Match,
    /// 1-based line of the first difference; `None` marks a missing line.
    Divergence {
        line: usize,
        expected: Option<String>,
        actual: Option<String>,
    },
}

impl GoldenComparison {
    pub fn is_match(&self) -> bool {
        matches!(self, GoldenComparison::Match)
    }
}

impl fmt::Display for GoldenComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoldenComparison::Match => f.write_str("match"),
            GoldenComparison::Divergence { line, expected, actual } => {
                let show = |s: &Option<String>| s.as_deref().map_or("<end of file>".to_owned(), |l| format!("{l:?}"));
                write!(f, "line {line}: expected {}, got {}", show(expected), show(actual))
            }
        }
    }
}

/// Line-wise comparison that ignores trailing whitespace on each line.
pub fn compare_text(transcript: &str, golden: &str) -> GoldenComparison {
    let mut actual = transcript.lines().map(str::trim_end);
    let mut expected = golden.lines().map(str::trim_end);
    let mut line = 0;
    loop {
        line += 1;
        match (expected.next(), actual.next()) {
            (None, None) => return GoldenComparison::Match,
            (e, a) if e == a => continue,
            (e, a) => {
                return GoldenComparison::Divergence {
                    line,
                    expected: e.map(str::to_owned),
                    actual: a.map(str::to_owned),
                }
            }
        }
    }
}

pub fn compare_golden(t: &Transcript, golden_file: &Path) -> Result<GoldenComparison, GoldenError> {
    if !golden_file.is_file() {
        return Err(GoldenError::Missing(golden_file.to_owned()));
    }
    let golden = std::fs::read_to_string(golden_file).map_err(|source| GoldenError::Io {
        path: golden_file.to_owned(),
        source,
    })?;
    Ok(compare_text(&t.text(), &golden))
}
