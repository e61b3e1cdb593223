//! Staged SCM/NCM training schedules.
//!
//! SCM (synthetic) sentences are shuffled once. Stage `k` takes the first
//! `stage_sizes[k]` of them plus the whole NCM (natural) corpus, shuffled with
//! a stream derived from `(seed, k)`. Because every stage draws a prefix of
//! the same order, the SCM content of a later stage is always contained in
//! that of an earlier one.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use crate::corpus::{write_corpus, Corpus};
use crate::error::{ForgeError, Result};
use crate::rng::derived_stream;

pub const DEFAULT_STAGE_SIZES: [usize; 5] = [30000, 10000, 3000, 1000, 0];
pub const DEFAULT_EPOCHS: u32 = 3;
pub const DEFAULT_LEARNING_RATE: f64 = 4e-6;

/// Advisory maximum sequence length for a corpus's embedded language:
/// 40 for Spanish, 56 otherwise (Hindi and masked corpora included).
pub fn max_sequence_length(embedded: &str) -> u32 {
    match embedded {
        "es" | "spa" | "spanish" => 40,
        _ => 56,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stage {
    pub index: usize,
    pub scm_count: usize,
    pub ncm_count: usize,
    pub epochs: u32,
    pub file: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurriculumManifest {
    pub stages: Vec<Stage>,
    pub seed: u64,
    pub scm_source: Option<String>,
    pub ncm_source: Option<String>,
    /// Advisory only; nothing here trains a model.
    pub hyper: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub manifest: CurriculumManifest,
    pub stages: Vec<Corpus>,
}

pub fn stage_file_name(index: usize) -> String {
    format!("stage_{index}.jsonl")
}

pub fn build_schedule(scm: &Corpus, ncm: &Corpus, stage_sizes: &[usize], epochs: u32, seed: u64) -> Result<Schedule> {
    let last = *stage_sizes
        .last()
        .ok_or_else(|| ForgeError::Invalid("at least one stage is required".into()))?;
    if stage_sizes.windows(2).any(|w| w[1] > w[0]) {
        return Err(ForgeError::Invalid(format!("stage sizes {stage_sizes:?} must be non-increasing")));
    }
    if last != 0 {
        return Err(ForgeError::Invalid("the final stage must contain no synthetic data".into()));
    }
    if epochs == 0 {
        return Err(ForgeError::Invalid("epochs must be at least 1".into()));
    }
    let needed = stage_sizes[0];
    if scm.len() < needed {
        return Err(ForgeError::Invalid(format!(
            "schedule needs {needed} synthetic sentences but only {} are available",
            scm.len()
        )));
    }
    let ncm_ids: HashSet<&str> = ncm.sentences.iter().map(|s| s.id.as_str()).collect();
    if let Some(s) = scm.sentences.iter().find(|s| ncm_ids.contains(s.id.as_str())) {
        return Err(ForgeError::DuplicateId(s.id.clone()));
    }

    let mut order: Vec<usize> = (0..scm.len()).collect();
    order.shuffle(&mut derived_stream(&[seed.into(), "scm".into()]));

    let mut stages = Vec::with_capacity(stage_sizes.len());
    let mut corpora = Vec::with_capacity(stage_sizes.len());
    for (k, &size) in stage_sizes.iter().enumerate() {
        let mut sentences: Vec<_> = order[..size].iter().map(|&i| scm.sentences[i].clone()).collect();
        sentences.extend(ncm.sentences.iter().cloned());
        sentences.shuffle(&mut derived_stream(&[seed.into(), "stage".into(), k.into()]));
        let mut corpus = Corpus::new(ncm.language_pair.clone());
        corpus.meta.insert("stage".into(), k.to_string());
        corpus.sentences = sentences;
        corpora.push(corpus);
        stages.push(Stage {
            index: k,
            scm_count: size,
            ncm_count: ncm.len(),
            epochs,
            file: stage_file_name(k),
        });
    }

    let mut hyper = BTreeMap::new();
    hyper.insert("learning_rate".into(), DEFAULT_LEARNING_RATE.into());
    hyper.insert(
        "max_sequence_length".into(),
        max_sequence_length(&ncm.language_pair.embedded).into(),
    );
    hyper.insert("optimizer".into(), "AdamW".into());
    hyper.insert("scheduler".into(), "linear".into());

    Ok(Schedule {
        manifest: CurriculumManifest {
            stages,
            seed,
            scm_source: None,
            ncm_source: None,
            hyper,
        },
        stages: corpora,
    })
}

impl Schedule {
    /// Write every stage file and `manifest.json` into `dir`.
    pub fn write(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|e| ForgeError::io(dir, e))?;
        for (stage, corpus) in self.manifest.stages.iter().zip(&self.stages) {
            write_corpus(corpus, dir.join(&stage.file))?;
        }
        let path = dir.join("manifest.json");
        let text = serde_json::to_string_pretty(&self.manifest).expect("manifest serializes") + "\n";
        fs::write(&path, text).map_err(|e| ForgeError::io(path, e))
    }
}
