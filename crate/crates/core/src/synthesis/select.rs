use rand::Rng;

use super::{Span, StrategyConfig};
use crate::corpus::{LanguageTag, Sentence};
use crate::error::{ForgeError, Result};

fn eligible(lang: LanguageTag) -> bool {
    !matches!(lang, LanguageTag::Univ | LanguageTag::Mask)
}

/// Select single tokens independently with probability `tau`.
///
/// One uniform draw is made per eligible token, in order; univ and mask
/// tokens are skipped without drawing.
pub fn select_words<R: Rng + ?Sized>(sentence: &Sentence, tau: f64, rng: &mut R) -> Vec<Span> {
    let mut spans = Vec::new();
    for (i, tok) in sentence.tokens.iter().enumerate() {
        if !eligible(tok.lang) {
            continue;
        }
        let r: f64 = rng.gen();
        if r < tau {
            spans.push(Span::new(i, 1));
        }
    }
    spans
}

/// Select phrases with the cursor walk.
///
/// At each cursor position one uniform draw decides whether a phrase starts
/// there; an accepted phrase draws its length uniformly from `lengths`, is
/// truncated at the end of the sentence, and moves the cursor past it.
/// Otherwise the cursor advances one token.
pub fn select_phrases<R: Rng + ?Sized>(sentence: &Sentence, tau: f64, lengths: &[usize], rng: &mut R) -> Vec<Span> {
    let n = sentence.tokens.len();
    let mut spans = Vec::new();
    let mut cursor = 0;
    while cursor < n {
        let r: f64 = rng.gen();
        if r < tau && !lengths.is_empty() {
            let want = lengths[rng.gen_range(0..lengths.len())];
            let len = want.min(n - cursor);
            spans.push(Span::new(cursor, len));
            cursor += len;
        } else {
            cursor += 1;
        }
    }
    spans
}

/// Every token whose tag is one of `tags`, each as its own span.
pub fn select_by_pos(sentence: &Sentence, tags: &[impl AsRef<str>]) -> Result<Vec<Span>> {
    let mut spans = Vec::new();
    for (i, tok) in sentence.tokens.iter().enumerate() {
        let pos = tok.pos.as_deref().ok_or_else(|| {
            ForgeError::sentence(&sentence.id, format!("token {i} (`{}`) has no POS tag", tok.surface))
        })?;
        if tags.iter().any(|t| t.as_ref() == pos) {
            spans.push(Span::new(i, 1));
        }
    }
    Ok(spans)
}

/// Dispatch on the strategy kind.
pub fn select_spans<R: Rng + ?Sized>(sentence: &Sentence, config: &StrategyConfig, rng: &mut R) -> Result<Vec<Span>> {
    Ok(match config {
        StrategyConfig::Word { tau } => select_words(sentence, *tau, rng),
        StrategyConfig::Phrase { tau, lengths } => select_phrases(sentence, *tau, lengths, rng),
        StrategyConfig::Pos { tags } => select_by_pos(sentence, tags)?,
    })
}
