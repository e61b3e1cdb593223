//! Synthetic code-mixed sentence generation.
//!
//! Generation is two steps: choose [`Span`]s of a source sentence (random
//! words, random phrases, or every token with a given POS tag), then send
//! each span through a [`Translator`](crate::lexicon::Translator) and splice
//! the result back in place. The source label is carried over unchanged.

mod generate;
mod select;

use serde::{Deserialize, Serialize};

use crate::error::{ForgeError, Result};

pub use generate::{apply_replacement, generate_corpus, generate_pos_union, union_pos_datasets};
pub use select::{select_by_pos, select_phrases, select_words, select_spans};

/// A contiguous run of tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub len: usize,
}

impl Span {
    pub fn new(start: usize, len: usize) -> Self {
        Span { start, len }
    }

    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// Check that spans are non-empty, in bounds, sorted and non-overlapping.
pub fn validate_spans(spans: &[Span], sentence_len: usize) -> Result<()> {
    let mut cursor = 0;
    for span in spans {
        if span.len == 0 {
            return Err(ForgeError::Invalid(format!("empty span at {}", span.start)));
        }
        if span.start < cursor {
            return Err(ForgeError::Invalid(format!(
                "span at {} overlaps or precedes the previous span",
                span.start
            )));
        }
        if span.end() > sentence_len {
            return Err(ForgeError::Invalid(format!(
                "span {}..{} exceeds sentence length {sentence_len}",
                span.start,
                span.end()
            )));
        }
        cursor = span.end();
    }
    Ok(())
}

/// Default phrase lengths drawn by the phrase strategy.
pub const DEFAULT_PHRASE_LENGTHS: [usize; 3] = [1, 2, 3];

/// How spans are chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum StrategyConfig {
    /// Each eligible token replaced independently with probability `tau`.
    Word { tau: f64 },
    /// Cursor walk: with probability `tau` a phrase of a length drawn from
    /// `lengths` starts at the cursor.
    Phrase { tau: f64, lengths: Vec<usize> },
    /// Every token whose tag is in `tags`.
    Pos { tags: Vec<String> },
}

impl StrategyConfig {
    pub fn word(tau: f64) -> Self {
        StrategyConfig::Word { tau }
    }

    pub fn phrase(tau: f64) -> Self {
        StrategyConfig::Phrase {
            tau,
            lengths: DEFAULT_PHRASE_LENGTHS.to_vec(),
        }
    }

    pub fn pos<S: Into<String>>(tags: impl IntoIterator<Item = S>) -> Self {
        StrategyConfig::Pos {
            tags: tags.into_iter().map(Into::into).collect(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StrategyConfig::Word { .. } => "word",
            StrategyConfig::Phrase { .. } => "phrase",
            StrategyConfig::Pos { .. } => "pos",
        }
    }

    /// The same strategy with a different temperature; POS configs are unchanged.
    pub fn with_tau(&self, tau: f64) -> Self {
        match self {
            StrategyConfig::Word { .. } => StrategyConfig::Word { tau },
            StrategyConfig::Phrase { lengths, .. } => StrategyConfig::Phrase {
                tau,
                lengths: lengths.clone(),
            },
            other => other.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let check_tau = |tau: f64| {
            if (0.0..=1.0).contains(&tau) {
                Ok(())
            } else {
                Err(ForgeError::Invalid(format!("tau {tau} outside [0, 1]")))
            }
        };
        match self {
            StrategyConfig::Word { tau } => check_tau(*tau),
            StrategyConfig::Phrase { tau, lengths } => {
                check_tau(*tau)?;
                if lengths.is_empty() || lengths.contains(&0) {
                    return Err(ForgeError::Invalid("phrase lengths must be a non-empty set of positive integers".into()));
                }
                Ok(())
            }
            StrategyConfig::Pos { tags } => {
                if tags.is_empty() {
                    return Err(ForgeError::Invalid("POS strategy needs at least one tag".into()));
                }
                Ok(())
            }
        }
    }

    /// Parameters recorded in generation provenance.
    pub fn params(&self) -> Vec<(&'static str, serde_json::Value)> {
        match self {
            StrategyConfig::Word { tau } => vec![("tau", (*tau).into())],
            StrategyConfig::Phrase { tau, lengths } => {
                vec![("tau", (*tau).into()), ("lengths", lengths.clone().into())]
            }
            StrategyConfig::Pos { tags } => vec![("tags", tags.clone().into())],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_validation() {
        assert!(validate_spans(&[Span::new(0, 2), Span::new(2, 1)], 3).is_ok());
        assert!(validate_spans(&[Span::new(0, 2), Span::new(1, 1)], 3).is_err());
        assert!(validate_spans(&[Span::new(2, 2)], 3).is_err());
        assert!(validate_spans(&[Span::new(0, 0)], 3).is_err());
        assert!(validate_spans(&[Span::new(2, 1), Span::new(0, 1)], 3).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(StrategyConfig::word(1.2).validate().is_err());
        assert!(StrategyConfig::Phrase { tau: 0.4, lengths: vec![] }.validate().is_err());
        assert!(StrategyConfig::Phrase { tau: 0.4, lengths: vec![0, 1] }.validate().is_err());
        assert!(StrategyConfig::pos(Vec::<String>::new()).validate().is_err());
        assert!(StrategyConfig::phrase(0.4).validate().is_ok());
        assert_eq!(StrategyConfig::phrase(0.1).with_tau(0.3), StrategyConfig::phrase(0.3));
    }
}
