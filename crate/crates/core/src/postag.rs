//! Penn Treebank part-of-speech tags for source sentences.
//!
//! Tags come either from a file (authoritative, e.g. the output of an
//! external tagger) or from [`TagLexicon`], a lexicon lookup with
//! longest-suffix fallback.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::path::Path;

use crate::corpus::{Corpus, LanguageTag, Sentence};
use crate::error::{ForgeError, Result};

/// The Penn Treebank pre-terminal tag set, including punctuation tags.
pub const PENN_TAGS: &[&str] = &[
    "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD", "NN", "NNS", "NNP", "NNPS", "PDT",
    "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
    "VBZ", "WDT", "WP", "WP$", "WRB", "#", "$", "''", "``", ",", ".", ":", "-LRB-", "-RRB-", "HYPH", "NFP",
    "ADD", "AFX", "XX",
];

pub fn is_penn_tag(tag: &str) -> bool {
    PENN_TAGS.contains(&tag)
}

/// Tag given to language-independent tokens.
pub const UNIV_TAG: &str = "SYM";

#[derive(Debug, Clone)]
pub struct TagLexicon {
    words: HashMap<String, String>,
    // longest suffix first
    suffixes: Vec<(String, String)>,
    default_tag: String,
}

impl TagLexicon {
    pub fn new(default_tag: &str) -> Result<Self> {
        if !is_penn_tag(default_tag) {
            return Err(ForgeError::Invalid(format!("`{default_tag}` is not a Penn Treebank tag")));
        }
        Ok(TagLexicon {
            words: HashMap::new(),
            suffixes: Vec::new(),
            default_tag: default_tag.to_string(),
        })
    }

    pub fn add_word(&mut self, word: &str, tag: &str) {
        self.words.insert(word.to_lowercase(), tag.to_string());
    }

    /// Suffix rules keep file order among equal lengths; longer suffixes
    /// always win.
    pub fn add_suffix(&mut self, suffix: &str, tag: &str) {
        self.suffixes.push((suffix.to_lowercase(), tag.to_string()));
        self.suffixes
            .sort_by(|a, b| b.0.chars().count().cmp(&a.0.chars().count()));
    }

    pub fn default_tag(&self) -> &str {
        &self.default_tag
    }

    /// Tag one surface, ignoring language role.
    pub fn tag_word(&self, surface: &str) -> &str {
        let lower = surface.to_lowercase();
        if let Some(tag) = self.words.get(&lower) {
            return tag;
        }
        for (suffix, tag) in &self.suffixes {
            if lower.len() > suffix.len() && lower.ends_with(suffix.as_str()) {
                return tag;
            }
        }
        &self.default_tag
    }

    /// Load a `word<TAB>tag` lexicon and an optional ordered `suffix<TAB>tag` file.
    pub fn load(lexicon: impl AsRef<Path>, suffixes: Option<&Path>, default_tag: &str) -> Result<Self> {
        let mut lex = TagLexicon::new(default_tag)?;
        for (word, tag) in read_pairs(lexicon.as_ref())? {
            lex.add_word(&word, &tag);
        }
        if let Some(path) = suffixes {
            for (suffix, tag) in read_pairs(path)? {
                lex.add_suffix(&suffix, &tag);
            }
        }
        Ok(lex)
    }

    /// A small English closed-class lexicon with common suffix rules.
    pub fn builtin_english() -> Self {
        let mut lex = TagLexicon::new("NN").expect("NN is a Penn tag");
        let groups: &[(&str, &[&str])] = &[
            ("PRP", &["i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them"]),
            ("PRP$", &["my", "your", "his", "its", "our", "their"]),
            ("DT", &["a", "an", "the", "this", "that", "these", "those", "every", "some", "no", "any"]),
            ("IN", &["in", "on", "at", "of", "for", "with", "from", "by", "about", "into", "over", "after", "before", "because", "if", "than"]),
            ("CC", &["and", "or", "but", "nor", "yet"]),
            ("TO", &["to"]),
            ("MD", &["can", "could", "will", "would", "shall", "should", "may", "might", "must"]),
            ("VBP", &["am", "are", "have", "do", "love", "hate", "like", "want", "need", "know", "think"]),
            ("VBZ", &["is", "has", "does"]),
            ("VBD", &["was", "were", "had", "did", "said", "went", "made", "got"]),
            ("VB", &["be", "go", "get", "make", "see", "eat", "take"]),
            ("RB", &["not", "very", "so", "too", "also", "just", "now", "never", "always", "really", "here", "there"]),
            ("WRB", &["how", "when", "where", "why"]),
            ("WP", &["who", "what"]),
            ("UH", &["oh", "wow", "hey", "lol", "yes", "yeah", "ok", "okay"]),
            ("JJ", &["good", "bad", "great", "happy", "sad", "new", "old", "big", "small", "spicy", "best", "nice"]),
        ];
        for (tag, words) in groups {
            for w in *words {
                lex.add_word(w, tag);
            }
        }
        for (suffix, tag) in [
            ("ing", "VBG"),
            ("ed", "VBD"),
            ("ly", "RB"),
            ("est", "JJS"),
            ("ous", "JJ"),
            ("ful", "JJ"),
            ("able", "JJ"),
            ("ible", "JJ"),
            ("ive", "JJ"),
            ("less", "JJ"),
            ("ic", "JJ"),
            ("tion", "NN"),
            ("ment", "NN"),
            ("ness", "NN"),
            ("ity", "NN"),
            ("s", "NNS"),
        ] {
            lex.add_suffix(suffix, tag);
        }
        lex
    }
}

fn read_pairs(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (a, b) = line
            .split_once('\t')
            .ok_or_else(|| ForgeError::parse(path, idx + 1, "expected two tab-separated fields"))?;
        let (a, b) = (a.trim(), b.trim());
        if a.is_empty() || b.is_empty() {
            return Err(ForgeError::parse(path, idx + 1, "empty field"));
        }
        out.push((a.to_string(), b.to_string()));
    }
    Ok(out)
}

/// Tag every token: univ tokens get `SYM`, the rest go through the lexicon.
pub fn tag_sentence(sentence: &Sentence, lexicon: &TagLexicon) -> Sentence {
    let mut out = sentence.clone();
    for tok in &mut out.tokens {
        let tag = if tok.lang == LanguageTag::Univ {
            UNIV_TAG
        } else {
            lexicon.tag_word(&tok.surface)
        };
        tok.pos = Some(tag.to_string());
    }
    out
}

pub fn tag_corpus(corpus: &Corpus, lexicon: &TagLexicon) -> Corpus {
    Corpus {
        language_pair: corpus.language_pair.clone(),
        sentences: corpus.sentences.iter().map(|s| tag_sentence(s, lexicon)).collect(),
        meta: corpus.meta.clone(),
    }
}

/// Apply an `id<TAB>tag tag ...` file. Existing tags are overwritten; every
/// sentence must receive tags.
pub fn load_tags(corpus: &Corpus, path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut tags: HashMap<String, Vec<String>> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (id, seq) = line
            .split_once('\t')
            .ok_or_else(|| ForgeError::parse(path, idx + 1, "expected `id<TAB>tags`"))?;
        if tags
            .insert(id.to_string(), seq.split_whitespace().map(String::from).collect())
            .is_some()
        {
            return Err(ForgeError::parse(path, idx + 1, format!("duplicate tag line for `{id}`")));
        }
    }

    let known: BTreeSet<&str> = corpus.sentences.iter().map(|s| s.id.as_str()).collect();
    let mut unknown: Vec<&str> = tags.keys().map(String::as_str).filter(|id| !known.contains(id)).collect();
    if !unknown.is_empty() {
        unknown.sort_unstable();
        return Err(ForgeError::Invalid(format!("tags for unknown sentence ids: {}", unknown.join(", "))));
    }
    let missing: Vec<&str> = corpus
        .sentences
        .iter()
        .map(|s| s.id.as_str())
        .filter(|id| !tags.contains_key(*id))
        .collect();
    if !missing.is_empty() {
        return Err(ForgeError::Invalid(format!("no tags for sentence ids: {}", missing.join(", "))));
    }

    let mut out = corpus.clone();
    for s in &mut out.sentences {
        let seq = &tags[&s.id];
        if seq.len() != s.tokens.len() {
            return Err(ForgeError::sentence(
                &s.id,
                format!("{} tags for {} tokens", seq.len(), s.tokens.len()),
            ));
        }
        for (tok, tag) in s.tokens.iter_mut().zip(seq) {
            tok.pos = Some(tag.clone());
        }
    }
    Ok(out)
}
