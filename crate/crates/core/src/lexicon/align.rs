//! Lexical translation model trained by expectation maximization.
//!
//! `t(tgt | src)` starts uniform over the target vocabulary. Each round
//! collects, for every target token of every pair, fractional counts
//! `t(f|e) / Σ_e' t(f|e')` over the source tokens of that pair, then
//! renormalizes per source word. No NULL word and no distortion model.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use super::SentencePair;
use crate::error::{ForgeError, Result};

/// A source-to-target token link within one sentence pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlignmentLink {
    pub src: usize,
    pub tgt: usize,
}

impl fmt::Display for AlignmentLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.src, self.tgt)
    }
}

#[derive(Debug, Clone)]
pub struct Ibm1Model {
    src_vocab: HashMap<String, u32>,
    tgt_vocab: HashMap<String, u32>,
    // sparse over co-occurring (src, tgt) pairs; absent pairs have t = 0
    // once training has started
    table: HashMap<(u32, u32), f64>,
    encoded: Vec<(Vec<u32>, Vec<u32>)>,
    iterations: usize,
}

fn intern(vocab: &mut HashMap<String, u32>, word: &str) -> u32 {
    let next = vocab.len() as u32;
    *vocab.entry(word.to_string()).or_insert(next)
}

impl Ibm1Model {
    /// Train for `iterations` EM rounds.
    pub fn train(parallel: &[SentencePair], iterations: usize) -> Result<Self> {
        if iterations == 0 {
            return Err(ForgeError::Invalid("alignment needs at least one iteration".into()));
        }
        let mut model = Self::initialize(parallel)?;
        for _ in 0..iterations {
            model.step();
        }
        Ok(model)
    }

    /// The untrained model: `t(f|e) = 1/|target vocab|` for co-occurring pairs.
    pub fn initialize(parallel: &[SentencePair]) -> Result<Self> {
        if parallel.is_empty() {
            return Err(ForgeError::Invalid("alignment needs at least one sentence pair".into()));
        }
        let mut src_vocab = HashMap::new();
        let mut tgt_vocab = HashMap::new();
        let mut encoded = Vec::with_capacity(parallel.len());
        for (i, (src, tgt)) in parallel.iter().enumerate() {
            if src.is_empty() || tgt.is_empty() {
                return Err(ForgeError::Invalid(format!("sentence pair {i} has an empty side")));
            }
            let s: Vec<u32> = src.iter().map(|w| intern(&mut src_vocab, w)).collect();
            let t: Vec<u32> = tgt.iter().map(|w| intern(&mut tgt_vocab, w)).collect();
            encoded.push((s, t));
        }

        let uniform = 1.0 / tgt_vocab.len() as f64;
        let mut table: HashMap<(u32, u32), f64> = HashMap::new();
        for (s, t) in &encoded {
            for &e in s {
                for &f in t {
                    table.insert((e, f), uniform);
                }
            }
        }

        Ok(Ibm1Model {
            src_vocab,
            tgt_vocab,
            table,
            encoded,
            iterations: 0,
        })
    }

    /// One expectation-maximization round.
    pub fn step(&mut self) {
        let mut counts: HashMap<(u32, u32), f64> = HashMap::with_capacity(self.table.len());
        let mut totals = vec![0.0f64; self.src_vocab.len()];
        for (s, t) in &self.encoded {
            for &f in t {
                let z: f64 = s.iter().map(|&e| self.table[&(e, f)]).sum();
                for &e in s {
                    let c = self.table[&(e, f)] / z;
                    *counts.entry((e, f)).or_insert(0.0) += c;
                    totals[e as usize] += c;
                }
            }
        }
        for (key, value) in self.table.iter_mut() {
            *value = counts.get(key).copied().unwrap_or(0.0) / totals[key.0 as usize];
        }
        self.iterations += 1;
    }

    /// `t(tgt | src)`; zero for unseen words or pairs that never co-occur.
    pub fn prob(&self, src: &str, tgt: &str) -> f64 {
        let (Some(&e), Some(&f)) = (self.src_vocab.get(src), self.tgt_vocab.get(tgt)) else {
            return 0.0;
        };
        self.table.get(&(e, f)).copied().unwrap_or(0.0)
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn target_vocab_size(&self) -> usize {
        self.tgt_vocab.len()
    }

    /// Link every source token to its most probable target token in the
    /// pair; ties go to the smallest target index.
    pub fn align_pair(&self, src: &[String], tgt: &[String]) -> Vec<AlignmentLink> {
        let mut links = Vec::with_capacity(src.len());
        for (i, e) in src.iter().enumerate() {
            let mut best: Option<(usize, f64)> = None;
            for (j, f) in tgt.iter().enumerate() {
                let p = self.prob(e, f);
                if best.is_none_or(|(_, bp)| p > bp) {
                    best = Some((j, p));
                }
            }
            if let Some((j, _)) = best {
                links.push(AlignmentLink { src: i, tgt: j });
            }
        }
        links
    }
}

/// Train a model and align every pair with it.
pub fn ibm1_align(parallel: &[SentencePair], iterations: usize) -> Result<Vec<Vec<AlignmentLink>>> {
    let model = Ibm1Model::train(parallel, iterations)?;
    Ok(parallel.iter().map(|(s, t)| model.align_pair(s, t)).collect())
}

/// Read `source sentence<TAB>target sentence` lines, whitespace-tokenized.
pub fn read_bitext(path: impl AsRef<Path>) -> Result<Vec<SentencePair>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut pairs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (src, tgt) = line
            .split_once('\t')
            .ok_or_else(|| ForgeError::parse(path, idx + 1, "expected `source<TAB>target`"))?;
        let src: Vec<String> = src.split_whitespace().map(String::from).collect();
        let tgt: Vec<String> = tgt.split_whitespace().map(String::from).collect();
        if src.is_empty() || tgt.is_empty() {
            return Err(ForgeError::parse(path, idx + 1, "empty side in sentence pair"));
        }
        pairs.push((src, tgt));
    }
    Ok(pairs)
}

/// Pharaoh format: one line per pair, space-separated `i-j` links.
pub fn write_links(links: &[Vec<AlignmentLink>]) -> String {
    let mut out = String::new();
    for pair in links {
        let line: Vec<String> = pair.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_links(path: impl AsRef<Path>) -> Result<Vec<Vec<AlignmentLink>>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let mut pair = Vec::new();
        for item in line.split_whitespace() {
            let parsed = item
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
            let (src, tgt) = parsed.ok_or_else(|| ForgeError::parse(path, idx + 1, format!("bad link `{item}`")))?;
            pair.push(AlignmentLink { src, tgt });
        }
        out.push(pair);
    }
    Ok(out)
}
