//! Per-label n-gram language models with backoff and add-lambda smoothing.
//!
//! A model is trained on the sentences of one sentiment label. Sentences are
//! padded with `order - 1` BOS symbols and closed with one EOS. Scoring a
//! word looks for the longest context with a nonzero count and returns
//!
//! ```text
//! (count(context, word) + λ) / (count(context) + λ·|V|)
//! ```
//!
//! backing off one order at a time down to the unigram distribution. `V`
//! is the set of observed words plus EOS; the UNK symbol stands in for
//! unseen words when scoring but is never generated.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, GenRecord, LanguagePair, LanguageTag, Sentence, SentimentLabel, Token};
use crate::error::{ForgeError, Result};
use crate::rng::{derive_seed, derived_stream, stream};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 6;
pub const DEFAULT_LAMBDA: f64 = 0.1;
pub const DEFAULT_COUNT: usize = 250;
pub const DEFAULT_MAX_LEN: usize = 50;

const FORMAT: &str = "forge-ngram";
const VERSION: u32 = 1;

/// Reserved boundary and unknown-word surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reserved {
    pub bos: String,
    pub eos: String,
    pub unk: String,
}

impl Default for Reserved {
    fn default() -> Self {
        Reserved {
            bos: "<s>".into(),
            eos: "</s>".into(),
            unk: "<unk>".into(),
        }
    }
}

type Table = BTreeMap<Vec<String>, BTreeMap<String, u64>>;

#[derive(Debug, Clone, PartialEq)]
pub struct NgramModel {
    order: usize,
    lambda: f64,
    label: SentimentLabel,
    reserved: Reserved,
    language_pair: LanguagePair,
    // observed words plus EOS, sorted
    support: Vec<String>,
    support_set: HashSet<String>,
    // tables[c]: contexts of length c
    tables: Vec<Table>,
    totals: Vec<HashMap<Vec<String>, u64>>,
    // majority language tag of each observed word
    langs: BTreeMap<String, LanguageTag>,
}

impl NgramModel {
    pub fn train(corpus: &Corpus, label: SentimentLabel, order: usize, lambda: f64) -> Result<Self> {
        Self::train_with(corpus, label, order, lambda, Reserved::default())
    }

    pub fn train_with(
        corpus: &Corpus,
        label: SentimentLabel,
        order: usize,
        lambda: f64,
        reserved: Reserved,
    ) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
            return Err(ForgeError::Invalid(format!("order {order} outside [{MIN_ORDER}, {MAX_ORDER}]")));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(ForgeError::Invalid(format!("lambda {lambda} must be positive")));
        }
        let sentences: Vec<&Sentence> = corpus.sentences.iter().filter(|s| s.label == label).collect();
        if sentences.is_empty() {
            return Err(ForgeError::Invalid(format!("no `{label}` sentences to train on")));
        }

        let mut tables: Vec<Table> = vec![BTreeMap::new(); order];
        let mut lang_votes: BTreeMap<String, BTreeMap<LanguageTag, usize>> = BTreeMap::new();
        for s in &sentences {
            let mut padded: Vec<String> = vec![reserved.bos.clone(); order - 1];
            for tok in &s.tokens {
                if tok.surface == reserved.bos || tok.surface == reserved.eos {
                    return Err(ForgeError::sentence(
                        &s.id,
                        format!("token `{}` is a reserved boundary symbol", tok.surface),
                    ));
                }
                padded.push(tok.surface.clone());
                *lang_votes
                    .entry(tok.surface.clone())
                    .or_default()
                    .entry(tok.lang)
                    .or_insert(0) += 1;
            }
            padded.push(reserved.eos.clone());
            for j in order - 1..padded.len() {
                for (c, table) in tables.iter_mut().enumerate() {
                    let ctx = padded[j - c..j].to_vec();
                    *table.entry(ctx).or_default().entry(padded[j].clone()).or_insert(0) += 1;
                }
            }
        }
        let langs = lang_votes
            .into_iter()
            .map(|(w, votes)| {
                let best = votes
                    .iter()
                    .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
                    .map(|(t, _)| *t)
                    .expect("at least one vote");
                (w, best)
            })
            .collect();
        Ok(Self::assemble(order, lambda, label, reserved, corpus.language_pair.clone(), tables, langs))
    }

    fn assemble(
        order: usize,
        lambda: f64,
        label: SentimentLabel,
        reserved: Reserved,
        language_pair: LanguagePair,
        tables: Vec<Table>,
        langs: BTreeMap<String, LanguageTag>,
    ) -> Self {
        let support: Vec<String> = tables[0]
            .get(&Vec::new())
            .map(|m| m.keys().cloned().collect())
            .unwrap_or_default();
        let support_set = support.iter().cloned().collect();
        let totals = tables
            .iter()
            .map(|t| t.iter().map(|(ctx, ws)| (ctx.clone(), ws.values().sum())).collect())
            .collect();
        NgramModel {
            order,
            lambda,
            label,
            reserved,
            language_pair,
            support,
            support_set,
            tables,
            totals,
            langs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn label(&self) -> SentimentLabel {
        self.label
    }

    pub fn reserved(&self) -> &Reserved {
        &self.reserved
    }

    pub fn language_pair(&self) -> &LanguagePair {
        &self.language_pair
    }

    /// Words that carry probability mass: observed words and EOS.
    pub fn support(&self) -> &[String] {
        &self.support
    }

    /// Scoring vocabulary: the support plus UNK.
    pub fn vocab(&self) -> BTreeSet<&str> {
        let mut v: BTreeSet<&str> = self.support.iter().map(String::as_str).collect();
        v.insert(&self.reserved.unk);
        v
    }

    pub fn name(&self) -> String {
        format!("{}-{}gram", self.label, self.order)
    }

    /// Raw count of `word` after `context` (context length < order).
    pub fn count(&self, context: &[&str], word: &str) -> u64 {
        let Some(table) = self.tables.get(context.len()) else { return 0 };
        let key: Vec<String> = context.iter().map(|s| s.to_string()).collect();
        table.get(&key).and_then(|m| m.get(word)).copied().unwrap_or(0)
    }

    /// Total count of `context`, i.e. the sum of all its extensions.
    pub fn context_count(&self, context: &[&str]) -> u64 {
        let Some(totals) = self.totals.get(context.len()) else { return 0 };
        let key: Vec<String> = context.iter().map(|s| s.to_string()).collect();
        totals.get(&key).copied().unwrap_or(0)
    }

    fn normalize_context(&self, context: &[&str]) -> Vec<String> {
        let want = self.order - 1;
        let tail = &context[context.len().saturating_sub(want)..];
        let mut out = vec![self.reserved.bos.clone(); want - tail.len()];
        for w in tail {
            if *w == self.reserved.bos || self.support_set.contains(*w) {
                out.push(w.to_string());
            } else {
                out.push(self.reserved.unk.clone());
            }
        }
        out
    }

    /// The longest suffix of the normalized context with a nonzero count.
    fn active_context<'a>(&self, ctx: &'a [String]) -> (usize, &'a [String], u64) {
        for c in (1..self.order).rev() {
            let key = &ctx[ctx.len() - c..];
            if let Some(&total) = self.totals[c].get(key) {
                if total > 0 {
                    return (c, key, total);
                }
            }
        }
        (0, &ctx[ctx.len()..], self.totals[0].get(&Vec::new()).copied().unwrap_or(0))
    }

    /// Smoothed probability of `word` after `context`.
    pub fn prob(&self, context: &[&str], word: &str) -> f64 {
        let ctx = self.normalize_context(context);
        let (level, key, total) = self.active_context(&ctx);
        let w = if self.support_set.contains(word) { word } else { self.reserved.unk.as_str() };
        let count = self.tables[level]
            .get(key)
            .and_then(|m| m.get(w))
            .copied()
            .unwrap_or(0);
        (count as f64 + self.lambda) / (total as f64 + self.lambda * self.support.len() as f64)
    }

    /// Distribution over the generation support (UNK excluded) after `context`.
    pub fn distribution(&self, context: &[&str]) -> Vec<(&str, f64)> {
        let ctx = self.normalize_context(context);
        let (level, key, total) = self.active_context(&ctx);
        let row = self.tables[level].get(key);
        let denom = total as f64 + self.lambda * self.support.len() as f64;
        let mut dist: Vec<(&str, f64)> = self
            .support
            .iter()
            .filter(|w| **w != self.reserved.unk)
            .map(|w| {
                let c = row.and_then(|m| m.get(w)).copied().unwrap_or(0);
                (w.as_str(), (c as f64 + self.lambda) / denom)
            })
            .collect();
        let mass: f64 = dist.iter().map(|(_, p)| p).sum();
        if (mass - 1.0).abs() > 1e-12 {
            for entry in &mut dist {
                entry.1 /= mass;
            }
        }
        dist
    }

    /// Ancestral sampling from BOS until EOS or `max_len` words.
    pub fn generate_words<R: Rng + ?Sized>(&self, rng: &mut R, max_len: usize) -> Vec<String> {
        let mut history: Vec<String> = vec![self.reserved.bos.clone(); self.order - 1];
        let mut words = Vec::new();
        while words.len() < max_len {
            let ctx: Vec<&str> = history[history.len() - (self.order - 1)..].iter().map(String::as_str).collect();
            let dist = self.distribution(&ctx);
            let r: f64 = rng.gen();
            let mut acc = 0.0;
            let mut choice = dist.last().map(|(w, _)| *w).unwrap_or(&self.reserved.eos);
            for (w, p) in &dist {
                acc += p;
                if r < acc {
                    choice = w;
                    break;
                }
            }
            if choice == self.reserved.eos {
                break;
            }
            words.push(choice.to_string());
            history.push(choice.to_string());
        }
        words
    }

    /// Sample one sentence; `None` when EOS comes first.
    pub fn generate_sentence<R: Rng + ?Sized>(&self, id: &str, rng: &mut R, max_len: usize, seed: u64) -> Option<Sentence> {
        let words = self.generate_words(rng, max_len);
        if words.is_empty() {
            return None;
        }
        let tokens = words
            .into_iter()
            .map(|w| {
                let lang = self.langs.get(&w).copied().unwrap_or(LanguageTag::Matrix);
                Token { surface: w, lang, pos: None }
            })
            .collect();
        let gen = GenRecord::new("ngram", seed, self.name())
            .param("order", self.order)
            .param("lambda", self.lambda)
            .param("label", self.label.as_str());
        Some(Sentence::synthetic(id, tokens, self.label, gen))
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            format: FORMAT.into(),
            version: VERSION,
            order: self.order,
            lambda: self.lambda,
            label: self.label,
            reserved: self.reserved.clone(),
            language_pair: self.language_pair.clone(),
            langs: self.langs.clone(),
            ngrams: self
                .tables
                .iter()
                .flat_map(|t| t.iter())
                .map(|(ctx, counts)| NgramRow {
                    context: ctx.clone(),
                    counts: counts.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("model serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile =
            serde_json::from_str(text).map_err(|e| ForgeError::Invalid(format!("bad model file: {e}")))?;
        if file.format != FORMAT || file.version != VERSION {
            return Err(ForgeError::Invalid(format!(
                "unsupported model format {} v{}",
                file.format, file.version
            )));
        }
        if !(MIN_ORDER..=MAX_ORDER).contains(&file.order) || !(file.lambda > 0.0) {
            return Err(ForgeError::Invalid("model order or lambda out of range".into()));
        }
        let mut tables: Vec<Table> = vec![BTreeMap::new(); file.order];
        for row in file.ngrams {
            let c = row.context.len();
            if c >= file.order {
                return Err(ForgeError::Invalid(format!("context of length {c} in an order-{} model", file.order)));
            }
            tables[c].insert(row.context, row.counts);
        }
        if tables[0].is_empty() {
            return Err(ForgeError::Invalid("model has no unigram counts".into()));
        }
        Ok(Self::assemble(
            file.order,
            file.lambda,
            file.label,
            file.reserved,
            file.language_pair,
            tables,
            file.langs,
        ))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json()).map_err(|e| ForgeError::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| ForgeError::io(path, e))?;
        Self::from_json(&text).map_err(|e| ForgeError::parse(path, 0, e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: String,
    version: u32,
    order: usize,
    lambda: f64,
    label: SentimentLabel,
    reserved: Reserved,
    language_pair: LanguagePair,
    langs: BTreeMap<String, LanguageTag>,
    ngrams: Vec<NgramRow>,
}

#[derive(Serialize, Deserialize)]
struct NgramRow {
    context: Vec<String>,
    counts: BTreeMap<String, u64>,
}

/// Train one model per (label, order) for every label present in `corpus`.
pub fn train_all(corpus: &Corpus, orders: &[usize], lambda: f64) -> Result<Vec<NgramModel>> {
    let present = corpus.label_counts();
    let mut models = Vec::new();
    for label in SentimentLabel::ALL {
        if !present.contains_key(&label) {
            continue;
        }
        for &order in orders {
            models.push(NgramModel::train(corpus, label, order, lambda)?);
        }
    }
    Ok(models)
}

/// Sample `per_model_count` sentences from every model, shuffle, and drop
/// exact duplicates (same surfaces and label), keeping the first.
///
/// Sentence `i` of model `m` uses seed `derive_seed(seed, m, i)` and gets id
/// `ng<m>-<i>`. Samples that end immediately are skipped, so the output
/// can be smaller than `models.len() * per_model_count`.
pub fn combine_generated(models: &[NgramModel], per_model_count: usize, seed: u64, max_len: usize) -> Result<Corpus> {
    let first = models
        .first()
        .ok_or_else(|| ForgeError::Invalid("no models to generate from".into()))?;
    if max_len == 0 {
        return Err(ForgeError::Invalid("max_len must be at least 1".into()));
    }
    if let Some(m) = models.iter().find(|m| m.language_pair != first.language_pair) {
        return Err(ForgeError::Invalid(format!("model {} has a different language pair", m.name())));
    }
    let jobs: Vec<(usize, usize)> = (0..models.len())
        .flat_map(|m| (0..per_model_count).map(move |i| (m, i)))
        .collect();
    let mut sentences: Vec<Sentence> = jobs
        .par_iter()
        .filter_map(|&(m, i)| {
            let s = derive_seed(&[seed.into(), m.into(), i.into()]);
            models[m].generate_sentence(&format!("ng{m}-{i}"), &mut stream(s), max_len, s)
        })
        .collect();
    sentences.shuffle(&mut derived_stream(&[seed.into(), "shuffle".into()]));

    let mut seen = HashSet::new();
    sentences.retain(|s| seen.insert((s.text(), s.label)));
    let mut corpus = Corpus::new(first.language_pair.clone());
    corpus.sentences = sentences;
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{tokenize_tagged, LangConfig};
    use crate::rng;
    use proptest::prelude::*;

    fn corpus(rows: &[(&str, SentimentLabel)]) -> Corpus {
        let sentences = rows
            .iter()
            .enumerate()
            .map(|(i, (text, label))| Sentence::natural(format!("s{i}"), tokenize_tagged(text, &LangConfig::default()), *label))
            .collect();
        Corpus::from_sentences(LanguagePair::new("en", "hi"), sentences).unwrap()
    }

    fn abab() -> NgramModel {
        NgramModel::train(&corpus(&[("a b a b", SentimentLabel::Positive)]), SentimentLabel::Positive, 2, 1.0).unwrap()
    }

    #[test]
    fn bigram_counts_by_hand() {
        let m = abab();
        assert_eq!(m.count(&["<s>"], "a"), 1);
        assert_eq!(m.count(&["a"], "b"), 2);
        assert_eq!(m.count(&["b"], "a"), 1);
        assert_eq!(m.count(&["b"], "</s>"), 1);
        assert_eq!(m.count(&["a"], "a"), 0);
        assert_eq!(m.context_count(&["a"]), 2);
        assert_eq!(m.context_count(&[]), 5);
        assert_eq!(m.support(), ["</s>", "a", "b"]);
        assert!(m.vocab().contains("<unk>"));
    }

    #[test]
    fn add_lambda_by_hand() {
        let m = abab();
        assert!((m.prob(&["a"], "b") - 0.6).abs() < 1e-12);
        assert!((m.prob(&["a"], "a") - 0.2).abs() < 1e-12);
        let total: f64 = m.support().iter().map(|w| m.prob(&["a"], w)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unseen_context_backs_off_to_unigram() {
        let m = abab();
        // unigram: count(a) = 2 of N = 5 tokens, |V| = 3
        let unigram = (2.0 + 1.0) / (5.0 + 3.0);
        assert!((m.prob(&["c"], "a") - unigram).abs() < 1e-12);
        // unseen word scores as UNK with zero count
        assert!((m.prob(&["a"], "zzz") - 1.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn short_contexts_are_bos_padded() {
        let m = NgramModel::train(&corpus(&[("x y z", SentimentLabel::Neutral)]), SentimentLabel::Neutral, 3, 0.5).unwrap();
        assert_eq!(m.prob(&[], "x"), m.prob(&["<s>", "<s>"], "x"));
        assert_eq!(m.prob(&["x"], "y"), m.prob(&["<s>", "x"], "y"));
        assert_eq!(m.prob(&["q", "w", "x"], "y"), m.prob(&["w", "x"], "y"));
    }

    #[test]
    fn training_errors() {
        let c = corpus(&[("a b", SentimentLabel::Positive)]);
        assert!(NgramModel::train(&c, SentimentLabel::Negative, 3, 0.1).is_err());
        assert!(NgramModel::train(&c, SentimentLabel::Positive, 1, 0.1).is_err());
        assert!(NgramModel::train(&c, SentimentLabel::Positive, 7, 0.1).is_err());
        assert!(NgramModel::train(&c, SentimentLabel::Positive, 3, 0.0).is_err());
        let reserved = corpus(&[("a <s> b", SentimentLabel::Positive)]);
        assert!(NgramModel::train(&reserved, SentimentLabel::Positive, 3, 0.1).is_err());
    }

    #[test]
    fn training_is_deterministic_and_label_filtered() {
        let c = corpus(&[("a b", SentimentLabel::Positive), ("c d", SentimentLabel::Negative)]);
        let a = NgramModel::train(&c, SentimentLabel::Positive, 3, 0.1).unwrap();
        let b = NgramModel::train(&c, SentimentLabel::Positive, 3, 0.1).unwrap();
        assert_eq!(a, b);
        assert!(!a.support().iter().any(|w| w == "c"));
    }

    #[test]
    fn context_counts_are_sums_of_extensions() {
        let c = corpus(&[("a b c a b", SentimentLabel::Positive), ("b c a", SentimentLabel::Positive)]);
        let m = NgramModel::train(&c, SentimentLabel::Positive, 4, 0.1).unwrap();
        for (level, table) in m.tables.iter().enumerate() {
            for (ctx, row) in table {
                assert_eq!(m.totals[level][ctx], row.values().sum::<u64>());
            }
        }
        // each lower-order context count equals the count of that context as a word sequence
        assert_eq!(m.context_count(&["a"]), 3);
        assert_eq!(m.context_count(&["a", "b"]), 2);
    }

    #[test]
    fn near_mle_generation_replays_training() {
        let c = corpus(&[("a b", SentimentLabel::Positive)]);
        let m = NgramModel::train(&c, SentimentLabel::Positive, 2, 1e-12).unwrap();
        for seed in 0..20 {
            assert_eq!(m.generate_words(&mut rng::stream(seed), 10), ["a", "b"]);
        }
    }

    #[test]
    fn max_len_bounds_output() {
        let m = abab();
        for seed in 0..50 {
            assert!(m.generate_words(&mut rng::stream(seed), 1).len() <= 1);
            assert!(m.generate_words(&mut rng::stream(seed), 4).len() <= 4);
        }
        let a = m.generate_sentence("x", &mut rng::stream(3), 10, 3);
        let b = m.generate_sentence("x", &mut rng::stream(3), 10, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn generated_tokens_keep_training_tags() {
        let mut c = corpus(&[("i love khana", SentimentLabel::Positive)]);
        c.sentences[0].tokens[2].lang = LanguageTag::Embedded;
        let m = NgramModel::train(&c, SentimentLabel::Positive, 2, 1e-9).unwrap();
        let s = m.generate_sentence("g", &mut rng::stream(0), 10, 0).unwrap();
        assert_eq!(s.text(), "i love khana");
        assert_eq!(s.tokens[2].lang, LanguageTag::Embedded);
        assert_eq!(s.label, SentimentLabel::Positive);
        assert_eq!(s.gen.as_ref().unwrap().src, "positive-2gram");
    }

    #[test]
    fn json_round_trip() {
        let c = corpus(&[("a b c", SentimentLabel::Neutral), ("c b", SentimentLabel::Neutral)]);
        let m = NgramModel::train(&c, SentimentLabel::Neutral, 4, 0.25).unwrap();
        let back = NgramModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), m.to_json());
        assert!(NgramModel::from_json("{}").is_err());
    }

    #[test]
    fn combine_counts() {
        let c = corpus(&[
            ("a b c", SentimentLabel::Positive),
            ("b c a", SentimentLabel::Positive),
            ("x y", SentimentLabel::Negative),
        ]);
        let pos = NgramModel::train(&c, SentimentLabel::Positive, 3, 0.1).unwrap();
        let out = combine_generated(std::slice::from_ref(&pos), 5, 1, 10).unwrap();
        assert!(out.len() <= 5);
        assert!(out.sentences.iter().all(|s| s.label == SentimentLabel::Positive));
        out.check_unique_ids().unwrap();

        // near-deterministic models over disjoint vocabularies: counts add exactly
        let one = corpus(&[("p q", SentimentLabel::Positive), ("u v", SentimentLabel::Negative)]);
        let m1 = NgramModel::train(&one, SentimentLabel::Positive, 2, 1e-12).unwrap();
        let m2 = NgramModel::train(&one, SentimentLabel::Negative, 2, 1e-12).unwrap();
        let a = combine_generated(std::slice::from_ref(&m1), 1, 0, 10).unwrap();
        let b = combine_generated(std::slice::from_ref(&m2), 1, 0, 10).unwrap();
        let both = combine_generated(&[m1, m2], 1, 0, 10).unwrap();
        assert_eq!(both.len(), a.len() + b.len());
        assert!(combine_generated(&[], 1, 0, 10).is_err());
    }

    #[test]
    fn combine_deterministic_across_pools() {
        let c = corpus(&[("a b c d", SentimentLabel::Positive), ("d c b a", SentimentLabel::Positive)]);
        let models = train_all(&c, &[3, 4], 0.1).unwrap();
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| combine_generated(&models, 30, 5, 12).unwrap())
        };
        assert_eq!(run(1), run(3));
    }

    proptest! {
        #[test]
        fn distributions_normalize(ctx in proptest::collection::vec(prop_oneof![Just("a"), Just("b"), Just("c"), Just("<s>"), Just("zz")], 0..6), order in 2usize..=6) {
            let c = corpus(&[("a b c a", SentimentLabel::Positive), ("c c b", SentimentLabel::Positive)]);
            let m = NgramModel::train(&c, SentimentLabel::Positive, order, 0.3).unwrap();
            let total: f64 = m.support().iter().map(|w| m.prob(&ctx, w)).sum();
            prop_assert!((total - 1.0).abs() < 1e-9);
            for w in m.support() {
                let p = m.prob(&ctx, w);
                prop_assert!(p > 0.0 && p < 1.0);
            }
            prop_assert!(m.prob(&ctx, "</s>") > 0.0);
        }
    }
}
