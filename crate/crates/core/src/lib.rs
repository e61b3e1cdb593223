//! Synthetic code-mixed corpus generation.
//!
//! `forge` turns labeled monolingual sentences into labeled code-mixed
//! sentences and prepares them for staged fine-tuning:
//!
//! - [`corpus`]: tokens, sentences, corpora, tokenization, language tagging and jsonl I/O.
//! - [`preprocess`]: social-media text cleaning and neutral-sentence mining.
//! - [`metrics`]: Code-Mixing Index reports and temperature calibration.
//! - [`lexicon`]: Model-1 word alignment, weighted dictionaries and translators.
//! - [`postag`]: Penn Treebank tags from files or a lexicon+suffix tagger.
//! - [`synthesis`]: word, phrase and POS span selection and corpus generation.
//! - [`ngram`]: per-label backoff n-gram models with add-lambda smoothing.
//! - [`curriculum`]: staged SCM/NCM dataset schedules.
//! - [`cli`]: the `forge` command line.
//!
//! All randomness is derived from user-visible seeds through [`rng::derive_seed`].

pub mod cli;
pub mod corpus;
pub mod curriculum;
pub mod error;
pub mod lexicon;
pub mod metrics;
pub mod ngram;
pub mod postag;
pub mod preprocess;
pub mod rng;
pub mod synthesis;

pub use error::{ForgeError, Result};
