//! Build a staged SCM/NCM schedule and print its manifest.
//!
//! cargo run --example curriculum

use forge::corpus::{Corpus, LanguagePair, LanguageTag, Sentence, SentimentLabel, Token};
use forge::curriculum::build_schedule;

fn corpus(prefix: &str, n: usize, lang: LanguageTag) -> forge::Result<Corpus> {
    let surface = if lang == LanguageTag::Matrix { "word" } else { "शब्द" };
    let sentences = (0..n)
        .map(|i| Ok(Sentence::natural(format!("{prefix}{i}"), vec![Token::new(surface, lang)?], SentimentLabel::ALL[i % 3])))
        .collect::<forge::Result<Vec<_>>>()?;
    Corpus::from_sentences(LanguagePair::new("en", "hi"), sentences)
}

fn main() -> forge::Result<()> {
    let scm = corpus("scm", 300, LanguageTag::Matrix)?;
    let ncm = corpus("ncm", 30, LanguageTag::Embedded)?;
    let schedule = build_schedule(&scm, &ncm, &[300, 100, 30, 10, 0], 3, 1)?;
    for (stage, data) in schedule.manifest.stages.iter().zip(&schedule.stages) {
        println!("{}: {} synthetic + {} natural = {}", stage.file, stage.scm_count, stage.ncm_count, data.len());
    }
    println!("{}", serde_json::to_string_pretty(&schedule.manifest).expect("manifest serializes"));
    Ok(())
}
