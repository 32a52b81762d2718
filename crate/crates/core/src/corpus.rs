//! Named Gauss-code corpora: one `name: code` entry per line, `#` comments.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::embedding::realize;
use crate::error::{Error, Result};
use crate::word::DoubleOccurrenceWord;

/// Reduced prime projections up to seven crossings.
pub const BUNDLED: &str = include_str!("../data/reduced_prime.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub word: DoubleOccurrenceWord,
    pub source: String,
    pub line: usize,
}

/// Parse and validate a corpus. Names must be unique and every word must be
/// realizable on the sphere.
pub fn parse_corpus(text: &str, source: &str) -> Result<Vec<CorpusEntry>> {
    let fail = |line: usize, message: String| Error::Corpus {
        source_name: source.to_string(),
        line,
        message,
    };
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (name, code) = content
            .split_once(':')
            .ok_or_else(|| fail(line, "expected `name: code`".into()))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(fail(line, "empty name".into()));
        }
        if let Some(first) = seen.insert(name.to_string(), line) {
            return Err(fail(
                line,
                format!("duplicate name `{name}` (first on line {first})"),
            ));
        }
        let word = DoubleOccurrenceWord::parse(code).map_err(|e| fail(line, e.to_string()))?;
        if realize(&word).is_none() {
            return Err(fail(line, Error::NotRealizable.to_string()));
        }
        out.push(CorpusEntry {
            name: name.to_string(),
            word,
            source: source.to_string(),
            line,
        });
    }
    Ok(out)
}

pub fn bundled() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED, "reduced_prime.txt").expect("bundled corpus is valid")
}
