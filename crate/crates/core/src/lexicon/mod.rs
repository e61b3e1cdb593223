//! Word alignment, weighted translation dictionaries and translators.

mod align;
mod dictionary;
mod translator;

pub use align::{ibm1_align, read_bitext, read_links, write_links, AlignmentLink, Ibm1Model};
pub use dictionary::{build_dictionary, TranslationDictionary};
pub use translator::{OovPolicy, PhraseTable, Translator};

/// A parallel sentence pair of source and target tokens.
pub type SentencePair = (Vec<String>, Vec<String>);
