//! Train per-label n-gram models and sample a deduplicated synthetic corpus.
//!
//! cargo run --example ngram

use forge::corpus::{tokenize_tagged, Corpus, LangConfig, Sentence, SentimentLabel};
use forge::ngram::{combine_generated, NgramModel};

fn main() -> forge::Result<()> {
    let cfg = LangConfig::default();
    let text = [
        "yeh movie बहुत अच्छी thi",
        "movie बहुत अच्छी hai yaar",
        "khana बहुत tasty tha",
        "yeh khana बहुत अच्छा hai",
        "aaj ka din बहुत अच्छा tha",
    ];
    let sentences = text
        .iter()
        .enumerate()
        .map(|(i, t)| Sentence::natural(format!("p{i}"), tokenize_tagged(t, &cfg), SentimentLabel::Positive))
        .collect();
    let corpus = Corpus::from_sentences(cfg.language_pair(), sentences)?;

    let models = [2, 3]
        .into_iter()
        .map(|order| NgramModel::train(&corpus, SentimentLabel::Positive, order, 0.1))
        .collect::<forge::Result<Vec<_>>>()?;
    let bigram = &models[0];
    println!("{}: P(बहुत | movie) = {:.3}", bigram.name(), bigram.prob(&["movie"], "बहुत"));

    let generated = combine_generated(&models, 10, 11, 20)?;
    for s in &generated.sentences {
        println!("{:<8} {}", s.id, s.text());
    }
    Ok(())
}
