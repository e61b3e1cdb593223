//! Script- and pattern-based language tagging.
//!
//! The heuristic cannot tell romanized embedded-language words from matrix
//! words written in the same script; authoritative tags in jsonl input take
//! precedence over it.

use serde::{Deserialize, Serialize};

use super::tokenize::is_word_char;
use super::{LanguageTag, DEFAULT_MASK};
use crate::error::{ForgeError, Result};

/// Writing systems the tagger can dispatch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Script {
    Latin,
    Devanagari,
    Bengali,
    Gurmukhi,
    Gujarati,
    Tamil,
    Telugu,
    Kannada,
    Malayalam,
    Arabic,
    Cyrillic,
}

impl Script {
    pub fn contains(self, c: char) -> bool {
        let cp = c as u32;
        match self {
            Script::Latin => {
                c.is_ascii_alphabetic()
                    || matches!(cp, 0x00C0..=0x024F | 0x1E00..=0x1EFF | 0x0300..=0x036F)
                        && cp != 0x00D7
                        && cp != 0x00F7
            }
            Script::Devanagari => matches!(cp, 0x0900..=0x097F | 0xA8E0..=0xA8FF),
            Script::Bengali => matches!(cp, 0x0980..=0x09FF),
            Script::Gurmukhi => matches!(cp, 0x0A00..=0x0A7F),
            Script::Gujarati => matches!(cp, 0x0A80..=0x0AFF),
            Script::Tamil => matches!(cp, 0x0B80..=0x0BFF),
            Script::Telugu => matches!(cp, 0x0C00..=0x0C7F),
            Script::Kannada => matches!(cp, 0x0C80..=0x0CFF),
            Script::Malayalam => matches!(cp, 0x0D00..=0x0D7F),
            Script::Arabic => matches!(cp, 0x0600..=0x06FF | 0x0750..=0x077F),
            Script::Cyrillic => matches!(cp, 0x0400..=0x04FF),
        }
    }
}

/// Patterns that mark a token as language-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnivPattern {
    Punctuation,
    Digits,
    Url,
    Mention,
    Hash,
}

impl UnivPattern {
    pub const ALL: [UnivPattern; 5] = [
        UnivPattern::Punctuation,
        UnivPattern::Digits,
        UnivPattern::Url,
        UnivPattern::Mention,
        UnivPattern::Hash,
    ];

    pub fn matches(self, surface: &str) -> bool {
        match self {
            UnivPattern::Punctuation => surface.chars().all(|c| !is_word_char(c)),
            UnivPattern::Digits => surface.chars().all(|c| c.is_numeric()),
            UnivPattern::Url => is_url(surface),
            UnivPattern::Mention => is_mention(surface),
            UnivPattern::Hash => surface == "#",
        }
    }
}

pub(crate) fn is_url(surface: &str) -> bool {
    let lower = surface.to_ascii_lowercase();
    lower.starts_with("http://") || lower.starts_with("https://") || lower.starts_with("www.")
}

pub(crate) fn is_mention(surface: &str) -> bool {
    let mut chars = surface.chars();
    chars.next() == Some('@')
        && surface.len() > 1
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Tie-break for tokens whose letters are not all in one configured script.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MixedScriptPolicy {
    Matrix,
    Embedded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LangConfig {
    pub matrix: String,
    pub embedded: String,
    pub mask: String,
    pub matrix_script: Script,
    pub embedded_script: Script,
    pub univ_patterns: Vec<UnivPattern>,
    pub mixed_script: MixedScriptPolicy,
}

impl Default for LangConfig {
    fn default() -> Self {
        LangConfig {
            matrix: "en".into(),
            embedded: "hi".into(),
            mask: DEFAULT_MASK.into(),
            matrix_script: Script::Latin,
            embedded_script: Script::Devanagari,
            univ_patterns: UnivPattern::ALL.to_vec(),
            mixed_script: MixedScriptPolicy::Matrix,
        }
    }
}

impl LangConfig {
    pub fn language_pair(&self) -> super::LanguagePair {
        super::LanguagePair::new(self.matrix.clone(), self.embedded.clone())
    }
}

/// Tag one surface: mask, then univ patterns, then script dispatch.
pub fn tag_language(surface: &str, config: &LangConfig) -> Result<LanguageTag> {
    if surface.is_empty() {
        return Err(ForgeError::InvalidToken(surface.into(), "empty surface".into()));
    }
    if surface == config.mask {
        return Ok(LanguageTag::Mask);
    }
    if config.univ_patterns.iter().any(|p| p.matches(surface)) {
        return Ok(LanguageTag::Univ);
    }
    let mut letters = surface.chars().filter(|c| is_word_char(*c) && !c.is_numeric()).peekable();
    if letters.peek().is_none() {
        // digits mixed with symbols, e.g. "3:30" without the digit pattern enabled
        return Ok(fallback(config));
    }
    let letters: Vec<char> = letters.collect();
    if letters.iter().all(|c| config.matrix_script.contains(*c)) {
        Ok(LanguageTag::Matrix)
    } else if letters.iter().all(|c| config.embedded_script.contains(*c)) {
        Ok(LanguageTag::Embedded)
    } else {
        Ok(fallback(config))
    }
}

fn fallback(config: &LangConfig) -> LanguageTag {
    match config.mixed_script {
        MixedScriptPolicy::Matrix => LanguageTag::Matrix,
        MixedScriptPolicy::Embedded => LanguageTag::Embedded,
    }
}
