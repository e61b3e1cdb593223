//! Coarse social-media cleaning and neutral-sentence mining.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::corpus::{split_raw_row, tokenize_tagged, Corpus, LangConfig, SentimentLabel, Sentence};
use crate::error::{ForgeError, Result};

/// Default confidence a neutral prediction must exceed to be kept.
pub const NEUTRAL_THRESHOLD: f64 = 0.85;

/// Emoji sequence to underscore-joined English description.
#[derive(Debug, Clone, Default)]
pub struct EmojiMap {
    entries: HashMap<String, String>,
    max_chars: usize,
}

impl EmojiMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, emoji: &str, description: &str) -> Result<()> {
        let description = description.split_whitespace().collect::<Vec<_>>().join("_");
        if emoji.is_empty() || description.is_empty() {
            return Err(ForgeError::Invalid(format!(
                "emoji map entry `{emoji}` needs a non-empty emoji and description"
            )));
        }
        if description.contains('#') || description.chars().any(is_emoji_char) {
            return Err(ForgeError::Invalid(format!(
                "emoji description `{description}` may not contain '#' or emoji"
            )));
        }
        self.max_chars = self.max_chars.max(emoji.chars().count());
        self.entries.insert(emoji.to_string(), description);
        Ok(())
    }

    pub fn get(&self, emoji: &str) -> Option<&str> {
        self.entries.get(emoji).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Load `emoji<TAB>description` rows.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
        let mut map = EmojiMap::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (emoji, desc) = line
                .split_once('\t')
                .ok_or_else(|| ForgeError::parse(path, idx + 1, "expected `emoji<TAB>description`"))?;
            map.insert(emoji.trim(), desc.trim())
                .map_err(|e| ForgeError::parse(path, idx + 1, e.to_string()))?;
        }
        Ok(map)
    }
}

/// Rough Extended_Pictographic test, plus the joiners and modifiers that
/// glue emoji sequences together.
pub fn is_emoji_char(c: char) -> bool {
    matches!(c as u32,
        0x1F000..=0x1FAFF
        | 0x2600..=0x27BF
        | 0x2300..=0x23FF
        | 0x2B00..=0x2BFF
        | 0x2190..=0x21FF
        | 0x3030 | 0x303D | 0x3297 | 0x3299
        | 0x200D
        | 0xFE0E..=0xFE0F
        | 0xE0020..=0xE007F)
}

fn is_url(word: &str) -> bool {
    let lower = word.to_ascii_lowercase();
    lower.starts_with("http://") || lower.starts_with("https://") || lower.starts_with("www.")
}

/// Replace emoji runs: longest mapped sequence first, unmapped emoji
/// characters become a space.
fn replace_emoji(word: &str, map: &EmojiMap, out: &mut String) {
    let chars: Vec<char> = word.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if !is_emoji_char(chars[i]) {
            out.push(chars[i]);
            i += 1;
            continue;
        }
        let longest = map.max_chars.min(chars.len() - i);
        let mut matched = false;
        for len in (1..=longest).rev() {
            let candidate: String = chars[i..i + len].iter().collect();
            if let Some(desc) = map.get(&candidate) {
                out.push(' ');
                out.push_str(desc);
                out.push(' ');
                i += len;
                matched = true;
                break;
            }
        }
        if !matched {
            out.push(' ');
            i += 1;
        }
    }
}

/// Clean one raw social-media string.
///
/// Per whitespace-separated word: '#' characters are deleted, emoji are
/// replaced by their description (or deleted when unmapped), and the
/// resulting pieces that are URLs are dropped. Whitespace is collapsed and
/// trimmed. The function is idempotent.
pub fn clean(raw: &str, emoji_map: &EmojiMap) -> String {
    let mut pieces: Vec<String> = Vec::new();
    let mut buf = String::new();
    for word in raw.split_whitespace() {
        let unhashed: String = word.chars().filter(|c| *c != '#').collect();
        buf.clear();
        replace_emoji(&unhashed, emoji_map, &mut buf);
        for piece in buf.split_whitespace() {
            if !is_url(piece) {
                pieces.push(piece.to_string());
            }
        }
    }
    pieces.join(" ")
}

/// Clean raw `id<TAB>text<TAB>label` rows into a corpus.
///
/// Rows that are empty after cleaning are dropped.
pub fn preprocess_tsv(path: impl AsRef<Path>, emoji_map: &EmojiMap, config: &LangConfig) -> Result<Corpus> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut corpus = Corpus::new(config.language_pair());
    let mut ids = HashSet::new();
    let mut dropped = 0usize;
    for (idx, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (id, raw, label) = split_raw_row(line).map_err(|m| ForgeError::parse(path, lineno, m))?;
        let label = SentimentLabel::from_str(label).map_err(|e| ForgeError::parse(path, lineno, e.to_string()))?;
        if !ids.insert(id.to_string()) {
            return Err(ForgeError::parse(path, lineno, ForgeError::DuplicateId(id.into()).to_string()));
        }
        let tokens = tokenize_tagged(&clean(raw, emoji_map), config);
        if tokens.is_empty() {
            dropped += 1;
            continue;
        }
        corpus.sentences.push(Sentence::natural(id, tokens, label));
    }
    if dropped > 0 {
        log::info!("dropped {dropped} rows that were empty after cleaning");
    }
    Ok(corpus)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreRecord {
    pub id: String,
    pub predicted: SentimentLabel,
    pub confidence: f64,
}

impl ScoreRecord {
    pub fn new(id: impl Into<String>, predicted: SentimentLabel, confidence: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&confidence) {
            return Err(ForgeError::Invalid(format!("confidence {confidence} outside [0, 1]")));
        }
        Ok(ScoreRecord {
            id: id.into(),
            predicted,
            confidence,
        })
    }
}

/// Load `id<TAB>label<TAB>confidence` rows.
pub fn load_scores(path: impl AsRef<Path>) -> Result<Vec<ScoreRecord>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let err = |m: String| ForgeError::parse(path, idx + 1, m);
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(err(format!("expected 3 tab-separated fields, found {}", fields.len())));
        }
        let label = SentimentLabel::from_str(fields[1].trim()).map_err(|e| err(e.to_string()))?;
        let conf: f64 = fields[2]
            .trim()
            .parse()
            .map_err(|_| err(format!("bad confidence `{}`", fields[2])))?;
        out.push(ScoreRecord::new(fields[0], label, conf).map_err(|e| err(e.to_string()))?);
    }
    Ok(out)
}

/// Keep sentences predicted neutral with confidence strictly above
/// `threshold`, relabeled neutral.
pub fn mine_neutral(candidates: &Corpus, scores: &[ScoreRecord], threshold: f64) -> Result<Corpus> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(ForgeError::Invalid(format!("threshold {threshold} outside [0, 1]")));
    }
    let known: HashSet<&str> = candidates.sentences.iter().map(|s| s.id.as_str()).collect();
    let mut keep: HashSet<&str> = HashSet::new();
    for rec in scores {
        if !known.contains(rec.id.as_str()) {
            return Err(ForgeError::sentence(&rec.id, "score record for an unknown sentence id"));
        }
        if rec.predicted == SentimentLabel::Neutral && rec.confidence > threshold {
            keep.insert(rec.id.as_str());
        }
    }
    let mut out = Corpus::new(candidates.language_pair.clone());
    out.meta = candidates.meta.clone();
    out.sentences = candidates
        .sentences
        .iter()
        .filter(|s| keep.contains(s.id.as_str()))
        .map(|s| Sentence {
            label: SentimentLabel::Neutral,
            ..s.clone()
        })
        .collect();
    Ok(out)
}
