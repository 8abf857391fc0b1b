//! Plain-text monoid presentations and words over their alphabets.
//!
//! The file format is line-based:
//!
//! ```text
//! # optional comments
//! atoms: a b
//! rel: ba = bbb
//! ```
//!
//! The `atoms:` line comes first and names the generators.  Each `rel:` line
//! equates two words.  Words over single-letter alphabets are written as
//! plain strings (`bab`); alphabets with longer atom names separate letters
//! with dots (`x.y10.x`).  `1` denotes the empty word, so collapsing
//! relations like `ba = 1` are expressible.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown atom {symbol:?} at column {column}")]
    UnknownSymbol { symbol: String, column: usize },
    #[error("alphabet has multi-letter atom names; separate letters with '.' (column {column})")]
    DotsRequired { column: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("missing 'atoms:' line")]
    MissingAtoms,
    #[error("line {line}: expected the 'atoms:' line before anything else")]
    AtomsNotFirst { line: usize },
    #[error("line {line}: duplicate 'atoms:' line")]
    SecondAtomsLine { line: usize },
    #[error("line {line}: alphabet must name at least one atom")]
    EmptyAlphabet { line: usize },
    #[error("line {line}: duplicate atom {name:?}")]
    DuplicateAtom { line: usize, name: String },
    #[error("line {line}: atom name {name:?} is reserved or malformed")]
    BadAtomName { line: usize, name: String },
    #[error("line {line}: expected 'rel: <word> = <word>'")]
    MalformedRelation { line: usize },
    #[error("line {line}: unknown directive")]
    UnknownDirective { line: usize },
    #[error("line {line}: {source}")]
    BadRelationWord { line: usize, source: WordError },
}

/// Word over a presentation's alphabet, stored as atom indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub(crate) fn from_indices(letters: Vec<u32>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation, used by translation-invariance probes.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Self(letters)
    }

    /// Replaces `self[at..at + pattern]` (which the caller has matched) by
    /// `replacement`.
    pub(crate) fn splice(&self, at: usize, pattern_len: usize, replacement: &[u32]) -> Self {
        let mut letters = Vec::with_capacity(self.0.len() - pattern_len + replacement.len());
        letters.extend_from_slice(&self.0[..at]);
        letters.extend_from_slice(replacement);
        letters.extend_from_slice(&self.0[at + pattern_len..]);
        Self(letters)
    }

    /// Start indices at which `pattern` occurs, including every position for
    /// the empty pattern.
    pub(crate) fn occurrences(&self, pattern: &[u32]) -> Vec<usize> {
        if pattern.is_empty() {
            return (0..=self.0.len()).collect();
        }
        if pattern.len() > self.0.len() {
            return Vec::new();
        }
        (0..=self.0.len() - pattern.len())
            .filter(|&i| &self.0[i..i + pattern.len()] == pattern)
            .collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.0)
    }
}

/// Finitely presented monoid: an alphabet plus defining relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    atoms: Vec<String>,
    relations: Vec<(Word, Word)>,
    single_letter: bool,
}

impl Presentation {
    /// Parses the line-based text format described at module level.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut atoms: Option<Vec<String>> = None;
        let mut relation_specs: Vec<(usize, String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("atoms:") {
                if atoms.is_some() {
                    return Err(PresentationError::SecondAtomsLine { line });
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
                if names.is_empty() {
                    return Err(PresentationError::EmptyAlphabet { line });
                }
                for name in &names {
                    if name == "1" || name.contains(['.', '=', '#']) {
                        return Err(PresentationError::BadAtomName {
                            line,
                            name: name.clone(),
                        });
                    }
                    if names.iter().filter(|other| *other == name).count() > 1 {
                        return Err(PresentationError::DuplicateAtom {
                            line,
                            name: name.clone(),
                        });
                    }
                }
                atoms = Some(names);
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("rel:") {
                if atoms.is_none() {
                    return Err(PresentationError::AtomsNotFirst { line });
                }
                let sides: Vec<&str> = rest.split('=').collect();
                if sides.len() != 2 {
                    return Err(PresentationError::MalformedRelation { line });
                }
                let lhs = sides[0].trim();
                let rhs = sides[1].trim();
                if lhs.is_empty()
                    || rhs.is_empty()
                    || lhs.chars().any(char::is_whitespace)
                    || rhs.chars().any(char::is_whitespace)
                {
                    return Err(PresentationError::MalformedRelation { line });
                }
                relation_specs.push((line, lhs.to_owned(), rhs.to_owned()));
                continue;
            }
            return match atoms {
                None => Err(PresentationError::AtomsNotFirst { line }),
                Some(_) => Err(PresentationError::UnknownDirective { line }),
            };
        }
        let atoms = atoms.ok_or(PresentationError::MissingAtoms)?;
        let mut out = Self {
            single_letter: atoms.iter().all(|name| name.chars().count() == 1),
            atoms,
            relations: Vec::new(),
        };
        for (line, lhs, rhs) in relation_specs {
            let lhs = out
                .parse_word(&lhs)
                .map_err(|source| PresentationError::BadRelationWord { line, source })?;
            let rhs = out
                .parse_word(&rhs)
                .map_err(|source| PresentationError::BadRelationWord { line, source })?;
            out.relations.push((lhs, rhs));
        }
        Ok(out)
    }

    /// The family `<a, b | ba = b^n>`; `n = 1` and `n = 0` give the
    /// collapsing relatives `ba = b` and `ba = 1`.
    pub fn bn(n: u64) -> Self {
        Self {
            atoms: vec!["a".to_owned(), "b".to_owned()],
            relations: vec![(
                Word(vec![1, 0]),
                Word(std::iter::repeat(1).take(n as usize).collect()),
            )],
            single_letter: true,
        }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn atom_index(&self, name: &str) -> Option<u32> {
        self.atoms.iter().position(|a| a == name).map(|i| i as u32)
    }

    /// Parses a word token: `1` or the empty string for the empty word,
    /// plain letters over single-letter alphabets, dot-separated names
    /// otherwise.
    pub fn parse_word(&self, token: &str) -> Result<Word, WordError> {
        let token = token.trim();
        if token.is_empty() || token == "1" {
            return Ok(Word::empty());
        }
        if let Some(i) = self.atom_index(token) {
            return Ok(Word(vec![i]));
        }
        if token.contains('.') {
            let mut letters = Vec::new();
            let mut column = 1;
            for part in token.split('.') {
                match self.atom_index(part) {
                    Some(i) => letters.push(i),
                    None => {
                        return Err(WordError::UnknownSymbol {
                            symbol: part.to_owned(),
                            column,
                        })
                    }
                }
                column += part.chars().count() + 1;
            }
            return Ok(Word(letters));
        }
        if !self.single_letter {
            return Err(WordError::DotsRequired { column: 1 });
        }
        token
            .chars()
            .enumerate()
            .map(|(i, c)| {
                self.atom_index(&c.to_string())
                    .ok_or_else(|| WordError::UnknownSymbol {
                        symbol: c.to_string(),
                        column: i + 1,
                    })
            })
            .collect::<Result<Vec<u32>, WordError>>()
            .map(Word)
    }

    pub fn display_word(&self, word: &Word) -> String {
        if word.is_empty() {
            return "1".to_owned();
        }
        let names: Vec<&str> = word
            .letters()
            .iter()
            .map(|&i| self.atoms[i as usize].as_str())
            .collect();
        if self.single_letter {
            names.concat()
        } else {
            names.join(".")
        }
    }

    /// True when every letter of `word` names an atom of this alphabet.
    pub fn owns(&self, word: &Word) -> bool {
        word.letters().iter().all(|&i| (i as usize) < self.atoms.len())
    }
}
