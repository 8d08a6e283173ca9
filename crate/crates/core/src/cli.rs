//! Batch front end. Diagnostics go to the error stream, member tables and
//! reports to the output stream.

use std::collections::HashSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::corpus::{ambient_library, load_corpus};
use crate::diagnostics::{compare_golden, render_transcript, Diagnostic, GoldenError, Transcript};
use crate::semantics::{build_hierarchy, check, CheckReport, MemberSignature, Mode};
use crate::syntax::{parse_source, CompilationUnit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERRORS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Java8,
    Extended,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Java8 => Mode::Java8,
            ModeArg::Extended => Mode::Extended,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StructureArg {
    Rationals,
    Integers,
    Vectors,
}

#[derive(Debug, Parser)]
#[command(name = "ifacecheck", version, about = "Check generic interface hierarchies, javac 8 style or extended")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub check: CheckArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Property-check the algebraic laws of a shipped structure.
    Laws(LawsArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Checking mode.
    #[arg(long, value_enum, default_value_t = ModeArg::Java8)]
    pub mode: ModeArg,
    /// Print the merged member table of each checked interface.
    #[arg(long, value_enum, num_args = 0..=1, require_equals = true, default_missing_value = "text")]
    pub emit_members: Option<EmitFormat>,
    /// Compare every corpus transcript against `<dir>/<Name>.<mode>.txt`.
    #[arg(long, value_name = "DIR")]
    pub golden: Option<PathBuf>,
    /// Check each embedded corpus listing.
    #[arg(long)]
    pub corpus: bool,
    /// Do not preload the clean corpus interfaces.
    #[arg(long)]
    pub no_ambient: bool,
    /// Source files.
    pub inputs: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    #[arg(long, value_enum)]
    pub structure: StructureArg,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliConfig {
    pub mode: Mode,
    pub emit_members: Option<EmitFormat>,
    pub golden_dir: Option<PathBuf>,
    pub corpus: bool,
    pub ambient: bool,
    pub inputs: Vec<PathBuf>,
}

impl From<CheckArgs> for CliConfig {
    fn from(a: CheckArgs) -> Self {
        CliConfig {
            mode: a.mode.into(),
            emit_members: a.emit_members,
            golden_dir: a.golden,
            corpus: a.corpus,
            ambient: !a.no_ambient,
            inputs: a.inputs,
        }
    }
}

/// One named source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceFile {
    pub name: String,
    pub content: String,
}

/// Result of checking a set of sources together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub diagnostics: Vec<Diagnostic>,
    /// Empty when parsing failed.
    pub reports: Vec<CheckReport>,
}

impl Outcome {
    pub fn transcript(&self) -> Transcript {
        render_transcript(&self.diagnostics)
    }

    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }
}

/// Parses `sources` as one program and checks every interface they declare.
///
/// Sources are processed in name order, so the outcome does not depend on
/// the order they are given in. Ambient declarations are shadowed by source
/// declarations of the same name. Any parse error stops before semantics.
pub fn check_sources(sources: &[SourceFile], mode: Mode, ambient: &[CompilationUnit]) -> Outcome {
    let mut sorted: Vec<&SourceFile> = sources.iter().collect();
    sorted.sort_by(|a, b| a.name.cmp(&b.name));
    sorted.dedup_by(|a, b| a.name == b.name);

    let mut units = Vec::new();
    let mut parse_diags = Vec::new();
    for s in sorted {
        let (unit, diags) = parse_source(&s.content, &s.name);
        units.push(unit);
        parse_diags.extend(diags);
    }
    if parse_diags.iter().any(Diagnostic::is_error) {
        return Outcome {
            diagnostics: parse_diags,
            reports: Vec::new(),
        };
    }

    let declared: HashSet<&str> = units.iter().flat_map(|u| u.decls.iter().map(|d| d.name.as_str())).collect();
    let mut all_units: Vec<CompilationUnit> = units.clone();
    for lib in ambient {
        if units.iter().any(|u| u.source_name == lib.source_name) {
            continue;
        }
        let mut lib = lib.clone();
        lib.decls.retain(|d| !declared.contains(d.name.as_str()));
        all_units.push(lib);
    }
    let (table, hierarchy_diags) = build_hierarchy(&all_units);

    let mut subjects: Vec<&str> = Vec::new();
    for unit in &units {
        for d in &unit.decls {
            if !d.name.is_empty() && !subjects.contains(&d.name.as_str()) {
                subjects.push(&d.name);
            }
        }
    }
    let reports: Vec<CheckReport> = subjects.iter().map(|s| check(s, &table, mode)).collect();

    let mut diagnostics = parse_diags;
    for r in &reports {
        diagnostics.extend(r.diagnostics.iter().cloned());
    }
    for d in hierarchy_diags {
        if !diagnostics.contains(&d) {
            diagnostics.push(d);
        }
    }
    Outcome { diagnostics, reports }
}

/// Entry point for the binary: parses `args` (including the program name).
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Some(Command::Laws(args)) => run_laws(&args, out, err),
        None => {
            let config = CliConfig::from(cli.check);
            if config.golden_dir.is_some() {
                verify_goldens(&config, out, err)
            } else {
                run(&config, out, err)
            }
        }
    }
}

/// Checks the configured inputs, or every corpus listing separately.
pub fn run(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if config.inputs.is_empty() && !config.corpus {
        let _ = writeln!(err, "error: no source files");
        return EXIT_USAGE;
    }
    let ambient = match ambient_for(config) {
        Ok(a) => a,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };

    let mut batches: Vec<Vec<SourceFile>> = Vec::new();
    if config.corpus {
        match load_corpus() {
            Ok(entries) => batches.extend(entries.into_iter().map(|e| {
                vec![SourceFile {
                    name: e.relative_path,
                    content: e.content.to_owned(),
                }]
            })),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if !config.inputs.is_empty() {
        match read_sources(&config.inputs) {
            Ok(files) => batches.push(files),
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_USAGE;
            }
        }
    }

    let mut any_errors = false;
    for batch in &batches {
        let outcome = check_sources(batch, config.mode, &ambient);
        any_errors |= outcome.has_errors();
        let _ = err.write_all(outcome.transcript().text().as_bytes());
        if let Some(format) = config.emit_members {
            let _ = emit_members(&outcome.reports, format, out);
        }
    }
    if any_errors {
        EXIT_ERRORS
    } else {
        EXIT_OK
    }
}

/// Checks every corpus entry in both modes against `<dir>/<Name>.<mode>.txt`.
pub fn verify_goldens(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(dir) = &config.golden_dir else {
        let _ = writeln!(err, "error: no golden directory");
        return EXIT_USAGE;
    };
    let (entries, ambient) = match (load_corpus(), ambient_library()) {
        (Ok(e), Ok(a)) => (e, a),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut divergences = Vec::new();
    let mut compared = 0;
    for entry in &entries {
        let source = [SourceFile {
            name: entry.relative_path.clone(),
            content: entry.content.to_owned(),
        }];
        for mode in [Mode::Java8, Mode::Extended] {
            let transcript = check_sources(&source, mode, &ambient).transcript();
            let golden = golden_path(dir, entry.name, mode);
            match compare_golden(&transcript, &golden) {
                Ok(c) if c.is_match() => compared += 1,
                Ok(c) => {
                    compared += 1;
                    divergences.push(format!("{} [{mode}]: {c}", entry.name));
                }
                Err(e @ (GoldenError::Missing(_) | GoldenError::Io { .. })) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
    }
    if divergences.is_empty() {
        let _ = writeln!(out, "{compared} transcripts match");
        EXIT_OK
    } else {
        for d in &divergences {
            let _ = writeln!(err, "{d}");
        }
        let _ = writeln!(err, "{} of {compared} transcripts diverge", divergences.len());
        EXIT_ERRORS
    }
}

pub fn golden_path(dir: &Path, name: &str, mode: Mode) -> PathBuf {
    dir.join(format!("{name}.{mode}.txt"))
}

/// Runs the law suite of one shipped structure; exit 1 if any law fails.
pub fn run_laws(args: &LawsArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    use algebra_tower::{check_laws, laws};
    let report = match args.structure {
        StructureArg::Rationals => check_laws(&laws::rationals(), args.samples, args.seed),
        StructureArg::Integers => check_laws(&laws::integers(), args.samples, args.seed),
        StructureArg::Vectors => match laws::rational_vectors(3) {
            Ok(w) => check_laws(&w, args.samples, args.seed),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
    };
    match report {
        Ok(r) => {
            let _ = write!(out, "{r}");
            if r.all_passed() {
                EXIT_OK
            } else {
                EXIT_ERRORS
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn ambient_for(config: &CliConfig) -> Result<Vec<CompilationUnit>, String> {
    if config.ambient {
        ambient_library().map_err(|e| e.to_string())
    } else {
        Ok(Vec::new())
    }
}

fn read_sources(paths: &[PathBuf]) -> Result<Vec<SourceFile>, String> {
    paths
        .iter()
        .map(|p| {
            let name = p.display().to_string();
            if !p.is_file() {
                return Err(format!("file not found: {name}"));
            }
            std::fs::read_to_string(p)
                .map(|content| SourceFile { name: name.clone(), content })
                .map_err(|e| format!("cannot read {name}: {e}"))
        })
        .collect()
}

#[derive(Serialize)]
struct MemberTable<'a> {
    interface: String,
    mode: String,
    members: &'a [MemberSignature],
}

/// Reports without members (java8 mode with errors) are skipped.
fn emit_members(reports: &[CheckReport], format: EmitFormat, out: &mut dyn Write) -> std::io::Result<()> {
    let tables: Vec<MemberTable> = reports
        .iter()
        .filter(|r| !r.members.is_empty())
        .map(|r| MemberTable {
            interface: r.interface_name.clone(),
            mode: r.mode.to_string(),
            members: &r.members,
        })
        .collect();
    match format {
        EmitFormat::Text => {
            for t in &tables {
                writeln!(out, "members of {} [{}]", t.interface, t.mode)?;
                for m in t.members {
                    writeln!(out, "{m}")?;
                }
            }
        }
        EmitFormat::Machine => {
            serde_json::to_writer_pretty(&mut *out, &tables)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
