use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::select::select_spans;
use super::{validate_spans, Span, StrategyConfig};
use crate::corpus::{Corpus, GenRecord, Sentence, SentimentLabel};
use crate::error::{ForgeError, Result};
use crate::lexicon::Translator;
use crate::rng::{derive_seed, derived_stream, stream};

/// Translate each span and splice the result back in place.
///
/// The returned sentence keeps the id and label of `sentence`, is marked
/// synthetic and carries `gen`.
pub fn apply_replacement<R: Rng + ?Sized>(
    sentence: &Sentence,
    spans: &[Span],
    translator: &Translator,
    rng: &mut R,
    gen: GenRecord,
) -> Result<Sentence> {
    validate_spans(spans, sentence.tokens.len()).map_err(|e| ForgeError::sentence(&sentence.id, e.to_string()))?;
    let mut tokens = Vec::with_capacity(sentence.tokens.len());
    let mut cursor = 0;
    for span in spans {
        tokens.extend_from_slice(&sentence.tokens[cursor..span.start]);
        let translated = translator
            .translate_tokens(&sentence.tokens[span.start..span.end()], rng)
            .map_err(|e| ForgeError::sentence(&sentence.id, e.to_string()))?;
        tokens.extend(translated);
        cursor = span.end();
    }
    tokens.extend_from_slice(&sentence.tokens[cursor..]);
    if tokens.is_empty() {
        return Err(ForgeError::sentence(&sentence.id, "replacement removed every token"));
    }
    Ok(Sentence::synthetic(sentence.id.clone(), tokens, sentence.label, gen))
}

/// Emit `count` synthetic sentences from `source`.
///
/// Source sentences are shuffled once with a stream derived from
/// `(seed, "shuffle")` and cycled. Emission `i` uses source sentence
/// `order[i % n]` and a stream seeded with `derive_seed(seed, source id, i)`;
/// that per-sentence seed is stored in the generation record. Output ids are
/// `<source id>#<i>`. Work is spread over the current rayon pool and the
/// result does not depend on its size.
pub fn generate_corpus(
    source: &Corpus,
    config: &StrategyConfig,
    translator: &Translator,
    count: usize,
    seed: u64,
) -> Result<Corpus> {
    config.validate()?;
    if source.is_empty() {
        return Err(ForgeError::Invalid("cannot generate from an empty source corpus".into()));
    }
    if let StrategyConfig::Pos { .. } = config {
        for s in &source.sentences {
            if let Some(i) = s.tokens.iter().position(|t| t.pos.is_none()) {
                return Err(ForgeError::sentence(
                    &s.id,
                    format!("POS strategy needs tagged sources; token {i} is untagged"),
                ));
            }
        }
    }

    let mut order: Vec<usize> = (0..source.len()).collect();
    order.shuffle(&mut derived_stream(&[seed.into(), "shuffle".into()]));

    let params = config.params();
    let sentences = (0..count)
        .into_par_iter()
        .map(|i| {
            let src = &source.sentences[order[i % order.len()]];
            let sentence_seed = derive_seed(&[seed.into(), src.id.as_str().into(), i.into()]);
            let mut rng = stream(sentence_seed);
            let spans = select_spans(src, config, &mut rng)?;
            let mut gen = GenRecord::new(config.name(), sentence_seed, src.id.clone()).param("translator", translator.name());
            for (k, v) in &params {
                gen = gen.param(k, v.clone());
            }
            let mut out = apply_replacement(src, &spans, translator, &mut rng, gen)?;
            out.id = format!("{}#{i}", src.id);
            Ok(out)
        })
        .collect::<Result<Vec<Sentence>>>()?;

    let mut corpus = Corpus::new(translator.output_pair(&source.language_pair));
    corpus.meta = source.meta.clone();
    corpus.sentences = sentences;
    Ok(corpus)
}

/// Union of datasets with exact duplicates (same surfaces and label)
/// removed, keeping the first occurrence. Ids become `p<k>-<id>` where `k`
/// is the index of the dataset the sentence came from.
pub fn union_pos_datasets(datasets: &[Corpus]) -> Result<Corpus> {
    let first = datasets
        .first()
        .ok_or_else(|| ForgeError::Invalid("union of zero datasets".into()))?;
    for (k, d) in datasets.iter().enumerate() {
        if d.language_pair != first.language_pair {
            return Err(ForgeError::Invalid(format!(
                "dataset {k} has language pair {}-{}, expected {}-{}",
                d.language_pair.matrix, d.language_pair.embedded, first.language_pair.matrix, first.language_pair.embedded
            )));
        }
    }
    let mut seen: HashSet<(Vec<&str>, SentimentLabel)> = HashSet::new();
    let mut out = Corpus::new(first.language_pair.clone());
    out.meta = first.meta.clone();
    for (k, d) in datasets.iter().enumerate() {
        for s in &d.sentences {
            let key = (s.tokens.iter().map(|t| t.surface.as_str()).collect(), s.label);
            if seen.insert(key) {
                let mut s = s.clone();
                s.id = format!("p{k}-{}", s.id);
                out.sentences.push(s);
            }
        }
    }
    Ok(out)
}

/// Build one dataset per POS tag (every source sentence once, in shuffled
/// order) and union them.
pub fn generate_pos_union(source: &Corpus, tags: &[String], translator: &Translator, seed: u64) -> Result<Corpus> {
    let per_tag = tags
        .iter()
        .map(|tag| generate_corpus(source, &StrategyConfig::pos([tag.clone()]), translator, source.len(), seed))
        .collect::<Result<Vec<_>>>()?;
    union_pos_datasets(&per_tag)
}
