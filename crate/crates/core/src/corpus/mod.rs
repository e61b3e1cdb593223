//! Labeled, language-tagged sentences and corpora.
//!
//! A [`Corpus`] pairs a matrix language with an embedded language (or the
//! `GIB` sentinel for masked corpora) and holds [`Sentence`]s made of
//! [`Token`]s. Natural sentences come from files; synthetic ones carry a
//! [`GenRecord`] naming the strategy, parameters, seed and source that
//! produced them.

mod io;
mod lang;
mod tokenize;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ForgeError, Result};

pub use io::{read_corpus, to_jsonl_bytes, write_corpus, CorpusFormat};
pub(crate) use io::split_raw_row;
pub use lang::{tag_language, LangConfig, MixedScriptPolicy, Script, UnivPattern};
pub use tokenize::{is_word_char, tokenize, tokenize_tagged};

/// Embedded-language sentinel for corpora whose embedded material is masked.
pub const GIB_LANGUAGE: &str = "GIB";

/// Default mask surface.
pub const DEFAULT_MASK: &str = "<GIB>";

/// Language role of a single token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LanguageTag {
    #[serde(rename = "mat")]
    Matrix,
    #[serde(rename = "emb")]
    Embedded,
    #[serde(rename = "univ")]
    Univ,
    #[serde(rename = "mask")]
    Mask,
}

impl LanguageTag {
    pub fn as_str(self) -> &'static str {
        match self {
            LanguageTag::Matrix => "mat",
            LanguageTag::Embedded => "emb",
            LanguageTag::Univ => "univ",
            LanguageTag::Mask => "mask",
        }
    }
}

/// A single surface token.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    #[serde(rename = "t")]
    pub surface: String,
    pub lang: LanguageTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos: Option<String>,
}

impl Token {
    /// Build a token, rejecting empty or whitespace-bearing surfaces.
    pub fn new(surface: impl Into<String>, lang: LanguageTag) -> Result<Self> {
        let surface = surface.into();
        validate_surface(&surface)?;
        Ok(Token {
            surface,
            lang,
            pos: None,
        })
    }

    pub fn with_pos(mut self, pos: impl Into<String>) -> Self {
        self.pos = Some(pos.into());
        self
    }
}

pub(crate) fn validate_surface(surface: &str) -> Result<()> {
    if surface.is_empty() {
        return Err(ForgeError::InvalidToken(surface.into(), "empty surface".into()));
    }
    if surface.chars().any(char::is_whitespace) {
        return Err(ForgeError::InvalidToken(
            surface.into(),
            "surface contains whitespace".into(),
        ));
    }
    Ok(())
}

/// Three-way sentiment label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SentimentLabel {
    Positive,
    Negative,
    Neutral,
}

impl SentimentLabel {
    pub const ALL: [SentimentLabel; 3] = [
        SentimentLabel::Positive,
        SentimentLabel::Negative,
        SentimentLabel::Neutral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SentimentLabel::Positive => "positive",
            SentimentLabel::Negative => "negative",
            SentimentLabel::Neutral => "neutral",
        }
    }
}

impl fmt::Display for SentimentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SentimentLabel {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(SentimentLabel::Positive),
            "negative" => Ok(SentimentLabel::Negative),
            "neutral" => Ok(SentimentLabel::Neutral),
            other => Err(ForgeError::UnknownLabel(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Natural,
    Synthetic,
}

/// Provenance of a synthetic sentence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenRecord {
    pub strategy: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub seed: u64,
    pub src: String,
}

impl GenRecord {
    pub fn new(strategy: impl Into<String>, seed: u64, src: impl Into<String>) -> Self {
        GenRecord {
            strategy: strategy.into(),
            params: BTreeMap::new(),
            seed,
            src: src.into(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sentence {
    pub id: String,
    pub label: SentimentLabel,
    pub origin: Origin,
    pub tokens: Vec<Token>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen: Option<GenRecord>,
}

impl Sentence {
    /// A natural sentence.
    pub fn natural(id: impl Into<String>, tokens: Vec<Token>, label: SentimentLabel) -> Self {
        Sentence {
            id: id.into(),
            label,
            origin: Origin::Natural,
            tokens,
            gen: None,
        }
    }

    /// A synthetic sentence with its provenance.
    pub fn synthetic(
        id: impl Into<String>,
        tokens: Vec<Token>,
        label: SentimentLabel,
        gen: GenRecord,
    ) -> Self {
        Sentence {
            id: id.into(),
            label,
            origin: Origin::Synthetic,
            tokens,
            gen: Some(gen),
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Surfaces joined by single spaces.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&t.surface);
        }
        out
    }

    /// Check the sentence-level invariants against a mask surface.
    pub fn validate(&self, mask: &str) -> Result<()> {
        if self.tokens.is_empty() {
            return Err(ForgeError::sentence(&self.id, "sentence has no tokens"));
        }
        for tok in &self.tokens {
            validate_surface(&tok.surface).map_err(|e| ForgeError::sentence(&self.id, e.to_string()))?;
            if tok.lang == LanguageTag::Mask && tok.surface != mask {
                return Err(ForgeError::sentence(
                    &self.id,
                    format!("mask-tagged token `{}` is not `{mask}`", tok.surface),
                ));
            }
        }
        match (self.origin, &self.gen) {
            (Origin::Synthetic, None) => Err(ForgeError::sentence(
                &self.id,
                "synthetic sentence without a generation record",
            )),
            (Origin::Natural, Some(_)) => Err(ForgeError::sentence(
                &self.id,
                "natural sentence with a generation record",
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LanguagePair {
    pub matrix: String,
    pub embedded: String,
}

impl LanguagePair {
    pub fn new(matrix: impl Into<String>, embedded: impl Into<String>) -> Self {
        LanguagePair {
            matrix: matrix.into(),
            embedded: embedded.into(),
        }
    }

    /// The same matrix language with the embedded side masked.
    pub fn masked(&self) -> Self {
        LanguagePair::new(self.matrix.clone(), GIB_LANGUAGE)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub language_pair: LanguagePair,
    pub sentences: Vec<Sentence>,
    pub meta: BTreeMap<String, String>,
}

impl Corpus {
    pub fn new(language_pair: LanguagePair) -> Self {
        Corpus {
            language_pair,
            sentences: Vec::new(),
            meta: BTreeMap::new(),
        }
    }

    /// Build a corpus, checking id uniqueness.
    pub fn from_sentences(language_pair: LanguagePair, sentences: Vec<Sentence>) -> Result<Self> {
        let corpus = Corpus {
            language_pair,
            sentences,
            meta: BTreeMap::new(),
        };
        corpus.check_unique_ids()?;
        Ok(corpus)
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn check_unique_ids(&self) -> Result<()> {
        let mut seen = HashSet::with_capacity(self.sentences.len());
        for s in &self.sentences {
            if !seen.insert(s.id.as_str()) {
                return Err(ForgeError::DuplicateId(s.id.clone()));
            }
        }
        Ok(())
    }

    /// Check every corpus and sentence invariant.
    pub fn validate(&self, mask: &str) -> Result<()> {
        self.check_unique_ids()?;
        let masked = self.language_pair.embedded == GIB_LANGUAGE;
        for s in &self.sentences {
            s.validate(mask)?;
            if masked && s.tokens.iter().any(|t| t.lang == LanguageTag::Embedded) {
                return Err(ForgeError::sentence(
                    &s.id,
                    "embedded-language token in a masked corpus",
                ));
            }
        }
        Ok(())
    }

    pub fn label_counts(&self) -> BTreeMap<SentimentLabel, usize> {
        let mut counts = BTreeMap::new();
        for s in &self.sentences {
            *counts.entry(s.label).or_insert(0) += 1;
        }
        counts
    }
}
