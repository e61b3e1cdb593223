use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::Rng;

use super::TranslationDictionary;
use crate::corpus::{LanguagePair, LanguageTag, Token, DEFAULT_MASK};
use crate::error::{ForgeError, Result};

/// What the dictionary translator does with words it has no entry for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OovPolicy {
    #[default]
    KeepSource,
    Drop,
    Error,
}

impl FromStr for OovPolicy {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "keep" | "keep-source" => Ok(OovPolicy::KeepSource),
            "drop" => Ok(OovPolicy::Drop),
            "error" => Ok(OovPolicy::Error),
            other => Err(ForgeError::Invalid(format!("unknown oov policy `{other}`"))),
        }
    }
}

/// Whitespace-joined source phrase to target token list.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PhraseTable {
    entries: HashMap<String, Vec<String>>,
}

impl PhraseTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, src: &str, tgt: &str) -> Result<()> {
        let key = src.split_whitespace().collect::<Vec<_>>().join(" ");
        let value: Vec<String> = tgt.split_whitespace().map(String::from).collect();
        if key.is_empty() || value.is_empty() {
            return Err(ForgeError::Invalid(format!("empty phrase in table entry `{src}` -> `{tgt}`")));
        }
        self.entries.insert(key, value);
        Ok(())
    }

    pub fn get(&self, phrase: &str) -> Option<&[String]> {
        self.entries
            .get(phrase)
            .or_else(|| self.entries.get(&phrase.to_lowercase()))
            .map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Load `src phrase<TAB>tgt phrase` rows.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
        let mut table = PhraseTable::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (src, tgt) = line
                .split_once('\t')
                .ok_or_else(|| ForgeError::parse(path, idx + 1, "expected `source<TAB>target`"))?;
            table
                .insert(src, tgt)
                .map_err(|e| ForgeError::parse(path, idx + 1, e.to_string()))?;
        }
        Ok(table)
    }
}

/// Turns selected matrix-language tokens into embedded-language (or masked) tokens.
#[derive(Debug, Clone)]
pub enum Translator {
    Dictionary(TranslationDictionary, OovPolicy),
    ConstantMask(String),
    Table(PhraseTable),
}

impl Translator {
    pub fn mask() -> Self {
        Translator::ConstantMask(DEFAULT_MASK.to_string())
    }

    /// Short name recorded in generation provenance.
    pub fn name(&self) -> &'static str {
        match self {
            Translator::Dictionary(..) => "dict",
            Translator::ConstantMask(_) => "mask",
            Translator::Table(_) => "table",
        }
    }

    /// Language pair of corpora this translator produces from `source`.
    pub fn output_pair(&self, source: &LanguagePair) -> LanguagePair {
        match self {
            Translator::ConstantMask(_) => source.masked(),
            _ => source.clone(),
        }
    }

    /// Translate one span of tokens.
    ///
    /// Language-independent and already-masked tokens pass through
    /// untouched. The dictionary translator draws one uniform number per
    /// in-vocabulary token, in token order; the other translators never
    /// touch `rng`.
    pub fn translate_tokens<R: Rng + ?Sized>(&self, tokens: &[Token], rng: &mut R) -> Result<Vec<Token>> {
        let passthrough = |t: &Token| matches!(t.lang, LanguageTag::Univ | LanguageTag::Mask);
        match self {
            Translator::ConstantMask(mask) => Ok(tokens
                .iter()
                .map(|t| {
                    if passthrough(t) {
                        t.clone()
                    } else {
                        Token {
                            surface: mask.clone(),
                            lang: LanguageTag::Mask,
                            pos: t.pos.clone(),
                        }
                    }
                })
                .collect()),
            Translator::Dictionary(dict, oov) => {
                let mut out = Vec::with_capacity(tokens.len());
                for t in tokens {
                    if passthrough(t) {
                        out.push(t.clone());
                        continue;
                    }
                    match dict.sample(&t.surface, rng) {
                        Some(word) => out.push(Token {
                            surface: word.to_string(),
                            lang: LanguageTag::Embedded,
                            pos: t.pos.clone(),
                        }),
                        None => match oov {
                            OovPolicy::KeepSource => out.push(t.clone()),
                            OovPolicy::Drop => {}
                            OovPolicy::Error => return Err(ForgeError::OutOfVocabulary(t.surface.clone())),
                        },
                    }
                }
                Ok(out)
            }
            Translator::Table(table) => {
                if tokens.iter().all(passthrough) {
                    return Ok(tokens.to_vec());
                }
                let phrase = tokens.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" ");
                Ok(match table.get(&phrase) {
                    Some(words) => words
                        .iter()
                        .map(|w| Token {
                            surface: w.clone(),
                            lang: LanguageTag::Embedded,
                            pos: None,
                        })
                        .collect(),
                    None => tokens.to_vec(),
                })
            }
        }
    }
}
