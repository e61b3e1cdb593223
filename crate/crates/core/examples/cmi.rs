//! Tag a few code-mixed sentences and report their Code-Mixing Index.
//!
//! cargo run --example cmi

use forge::corpus::{tokenize_tagged, Corpus, LangConfig, Sentence, SentimentLabel};
use forge::metrics::{corpus_cmi, sentence_cmi};

fn main() -> forge::Result<()> {
    let cfg = LangConfig::default();
    let raw = [
        ("a", "i love this movie !", SentimentLabel::Positive),
        ("b", "yeh movie बहुत अच्छी thi", SentimentLabel::Positive),
        ("c", "खाना was really tasty", SentimentLabel::Positive),
        ("d", "मुझे यह पसंद है", SentimentLabel::Neutral),
        ("e", "100 % !!!", SentimentLabel::Neutral),
    ];
    let sentences: Vec<Sentence> = raw
        .iter()
        .map(|(id, text, label)| Sentence::natural(*id, tokenize_tagged(text, &cfg), *label))
        .collect();

    for s in &sentences {
        let tags: Vec<&str> = s.tokens.iter().map(|t| t.lang.as_str()).collect();
        println!("{:>6.2}  {:<28} {}", sentence_cmi(s), s.text(), tags.join(" "));
    }

    let corpus = Corpus::from_sentences(cfg.language_pair(), sentences)?;
    let report = corpus_cmi(&corpus)?;
    println!("mean {:.2}, stddev {:.2}", report.mean, report.stddev);
    Ok(())
}
