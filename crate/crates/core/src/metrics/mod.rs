//! Code-Mixing Index.
//!
//! For a sentence with `n` tokens, `u` of them language-independent, and
//! `w_i` tokens in language `i`:
//!
//! ```text
//! CMI = 100 * (1 - max_i(w_i) / (n - u))   if n > u
//!     = 0                                   otherwise
//! ```
//!
//! The languages are matrix, embedded and mask; the mask counts as a
//! language of its own so masked corpora stay comparable with translated ones.

mod calibrate;

use serde::Serialize;

use crate::corpus::{Corpus, LanguageTag, Sentence};
use crate::error::{ForgeError, Result};

pub use calibrate::{calibrate_temperature, calibrate_temperature_on, parse_grid, Branch, CalibrationResult, GridPoint};

/// Width of a histogram bucket in CMI points.
pub const HISTOGRAM_STEP: f64 = 5.0;
pub const HISTOGRAM_BUCKETS: usize = 20;

pub fn sentence_cmi(sentence: &Sentence) -> f64 {
    let mut counts = [0usize; 3];
    let mut univ = 0usize;
    for tok in &sentence.tokens {
        match tok.lang {
            LanguageTag::Matrix => counts[0] += 1,
            LanguageTag::Embedded => counts[1] += 1,
            LanguageTag::Mask => counts[2] += 1,
            LanguageTag::Univ => univ += 1,
        }
    }
    let n = sentence.tokens.len();
    if n <= univ {
        return 0.0;
    }
    let max = *counts.iter().max().expect("three counts");
    100.0 * (1.0 - max as f64 / (n - univ) as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CmiReport {
    pub per_sentence: Vec<(String, f64)>,
    pub mean: f64,
    /// Population standard deviation.
    pub stddev: f64,
    /// Counts over `[0,5), [5,10), ..., [95,100]`.
    pub histogram: Vec<usize>,
}

impl CmiReport {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.per_sentence.iter().map(|(_, v)| *v)
    }
}

fn bucket(cmi: f64) -> usize {
    ((cmi / HISTOGRAM_STEP).floor() as usize).min(HISTOGRAM_BUCKETS - 1)
}

pub fn corpus_cmi(corpus: &Corpus) -> Result<CmiReport> {
    if corpus.is_empty() {
        return Err(ForgeError::Invalid("CMI of an empty corpus".into()));
    }
    let per_sentence: Vec<(String, f64)> = corpus
        .sentences
        .iter()
        .map(|s| (s.id.clone(), sentence_cmi(s)))
        .collect();
    let n = per_sentence.len() as f64;
    let mean = per_sentence.iter().map(|(_, v)| v).sum::<f64>() / n;
    let var = per_sentence.iter().map(|(_, v)| (v - mean).powi(2)).sum::<f64>() / n;
    let mut histogram = vec![0; HISTOGRAM_BUCKETS];
    for (_, v) in &per_sentence {
        histogram[bucket(*v)] += 1;
    }
    Ok(CmiReport {
        per_sentence,
        mean,
        stddev: var.sqrt(),
        histogram,
    })
}
