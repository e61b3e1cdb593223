use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;

use rand::Rng;

use super::{AlignmentLink, SentencePair};
use crate::error::{ForgeError, Result};

/// Weighted one-to-many word translation map.
///
/// Source keys are lowercase. Each candidate list is non-empty, its weights
/// sum to one, and it is sorted by descending weight, ties broken
/// lexicographically.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TranslationDictionary {
    entries: BTreeMap<String, Vec<(String, f64)>>,
}

impl TranslationDictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build from raw positive scores per (source, target); scores are
    /// normalized per source word.
    pub fn from_scores<'a>(scores: impl IntoIterator<Item = (&'a str, &'a str, f64)>) -> Result<Self> {
        let mut grouped: BTreeMap<String, HashMap<String, f64>> = BTreeMap::new();
        for (src, tgt, w) in scores {
            if !(w > 0.0 && w.is_finite()) {
                return Err(ForgeError::Invalid(format!("weight {w} for `{src}` -> `{tgt}` must be positive")));
            }
            if src.is_empty() || tgt.is_empty() {
                return Err(ForgeError::Invalid("empty dictionary word".into()));
            }
            *grouped
                .entry(src.to_lowercase())
                .or_default()
                .entry(tgt.to_string())
                .or_insert(0.0) += w;
        }
        let mut entries = BTreeMap::new();
        for (src, cands) in grouped {
            let total: f64 = cands.values().sum();
            let mut list: Vec<(String, f64)> = cands.into_iter().map(|(t, w)| (t, w / total)).collect();
            list.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
            entries.insert(src, list);
        }
        Ok(TranslationDictionary { entries })
    }

    pub fn candidates(&self, src: &str) -> Option<&[(String, f64)]> {
        self.entries
            .get(src)
            .or_else(|| self.entries.get(&src.to_lowercase()))
            .map(Vec::as_slice)
    }

    /// Draw a candidate using one uniform number from `rng`.
    pub fn sample<R: Rng + ?Sized>(&self, src: &str, rng: &mut R) -> Option<&str> {
        let cands = self.candidates(src)?;
        let r: f64 = rng.gen();
        let mut acc = 0.0;
        for (word, w) in cands {
            acc += w;
            if r < acc {
                return Some(word);
            }
        }
        cands.last().map(|(w, _)| w.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[(String, f64)])> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    /// `src<TAB>tgt<TAB>weight` rows in key order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (src, cands) in &self.entries {
            for (tgt, w) in cands {
                out.push_str(&format!("{src}\t{tgt}\t{w}\n"));
            }
        }
        out
    }

    /// Load TSV rows; weights are renormalized per source word.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(ForgeError::parse(path, idx + 1, "expected `src<TAB>tgt<TAB>weight`"));
            }
            let w: f64 = fields[2]
                .trim()
                .parse()
                .map_err(|_| ForgeError::parse(path, idx + 1, format!("bad weight `{}`", fields[2])))?;
            if !(w > 0.0 && w.is_finite()) {
                return Err(ForgeError::parse(path, idx + 1, format!("weight {w} must be positive")));
            }
            rows.push((fields[0].trim(), fields[1].trim(), w));
        }
        Self::from_scores(rows)
    }
}

/// Count link pairs of surfaces across the corpus and normalize per source word.
pub fn build_dictionary(parallel: &[SentencePair], links: &[Vec<AlignmentLink>]) -> Result<TranslationDictionary> {
    if parallel.len() != links.len() {
        return Err(ForgeError::Invalid(format!(
            "{} sentence pairs but {} link lines",
            parallel.len(),
            links.len()
        )));
    }
    let mut counts: Vec<(&str, &str, f64)> = Vec::new();
    for (i, ((src, tgt), pair_links)) in parallel.iter().zip(links).enumerate() {
        for link in pair_links {
            if link.src >= src.len() || link.tgt >= tgt.len() {
                return Err(ForgeError::Invalid(format!(
                    "link {link} out of range for pair {i} ({}x{})",
                    src.len(),
                    tgt.len()
                )));
            }
            counts.push((&src[link.src], &tgt[link.tgt], 1.0));
        }
    }
    TranslationDictionary::from_scores(counts)
}
