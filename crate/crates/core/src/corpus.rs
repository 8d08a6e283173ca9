//! The ten algebra listings, embedded together with their golden transcripts.

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::syntax::{parse_source, CompilationUnit};

pub const DEFAULT_SUFFIX: &str = ".java";
pub const PACKAGE_DIR: &str = "algebra";

/// Number of leading entries that form the clean tower (semigroups to fields).
pub const CLEAN_ENTRIES: usize = 8;

macro_rules! entry {
    ($name:literal, $sha:literal) => {
        RawEntry {
            name: $name,
            content: include_str!(concat!("../corpus/algebra/", $name, ".java")),
            sha256: $sha,
            java8: include_str!(concat!("../goldens/", $name, ".java8.txt")),
            extended: include_str!(concat!("../goldens/", $name, ".extended.txt")),
        }
    };
}

struct RawEntry {
    name: &'static str,
    content: &'static str,
    sha256: &'static str,
    java8: &'static str,
    extended: &'static str,
}

static ENTRIES: [RawEntry; 10] = [
    entry!("AdditiveSemigroup", "668bf4eac607fb541eb694fb806110461676f438a01e7e311b118992adbbadf5"),
    entry!("MultiplicativeSemigroup", "2ea17794d9c5a572729f364be2d68115e70b139c860583a9130ff334f558ee8b"),
    entry!("AdditiveMonoid", "7b1fc7661ea7a9f51ed1976791988d1241ceace2f453627d5b26c611d3b528b0"),
    entry!("MultiplicativeMonoid", "fd59934a8b591ba9980cbb0fae1857892c4ea80cdf3a330a2bb3dfb65b0211e1"),
    entry!("AdditiveGroup", "6f2b3c37815775eb6305b79eb7c88f0d22297b906d79c304519da9952cdbd15a"),
    entry!("CommutativeRing", "a623109f0fff7091e988cd03d822d12df784efecccca3e1d854ec487ccb40a93"),
    entry!("MultiplicativeGroup", "b24d41e9c14807746bbfd8154fa82dd8b1b3a74977f86e9c9bac4c7d8fbec37f"),
    entry!("Field", "4da11ba72aa066b1e976d638accc15149b7de89f91316a1bce2c350851873034"),
    entry!("VectorSpace", "eba8ee8ba727a328c7ca98910bcf818d4b763583691cfe5eedd952d80b4598b9"),
    entry!("VectorSpaceAH", "129c4eeac599833d177ec7166f939609ff8e20c62f25db3f784436d58b0dfaa5"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub relative_path: String,
    pub content: &'static str,
    pub expected_java8: &'static str,
    pub expected_extended: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("embedded corpus entry {name} is corrupted (checksum {actual}, expected {expected})")]
    ChecksumMismatch {
        name: &'static str,
        expected: &'static str,
        actual: String,
    },
}

pub fn load_corpus() -> Result<Vec<CorpusEntry>, CorpusError> {
    load_corpus_with_suffix(DEFAULT_SUFFIX)
}

/// Entries in listing order, with paths `algebra/<Name><suffix>`.
pub fn load_corpus_with_suffix(suffix: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    ENTRIES
        .iter()
        .map(|raw| {
            verify(raw.name, raw.content, raw.sha256)?;
            Ok(CorpusEntry {
                name: raw.name,
                relative_path: format!("{PACKAGE_DIR}/{}{suffix}", raw.name),
                content: raw.content,
                expected_java8: raw.java8,
                expected_extended: raw.extended,
            })
        })
        .collect()
}

fn verify(name: &'static str, content: &str, expected: &'static str) -> Result<(), CorpusError> {
    let actual = hex_digest(content);
    if actual == expected {
        Ok(())
    } else {
        Err(CorpusError::ChecksumMismatch { name, expected, actual })
    }
}

fn hex_digest(content: &str) -> String {
    Sha256::digest(content.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

impl CorpusEntry {
    pub fn parse(&self) -> CompilationUnit {
        parse_source(self.content, &self.relative_path).0
    }
}

/// The eight clean listings, parsed. Used to resolve supers of single-file checks.
pub fn ambient_library() -> Result<Vec<CompilationUnit>, CorpusError> {
    Ok(load_corpus()?
        .into_iter()
        .take(CLEAN_ENTRIES)
        .map(|e| e.parse())
        .collect())
}
