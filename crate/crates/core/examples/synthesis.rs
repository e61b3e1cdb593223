//! Word, phrase and POS replacement with the mask, dictionary and table translators.
//!
//! cargo run --example synthesis

use forge::corpus::{tokenize_tagged, Corpus, LangConfig, Sentence, SentimentLabel};
use forge::lexicon::{OovPolicy, PhraseTable, TranslationDictionary, Translator};
use forge::postag::{tag_corpus, TagLexicon};
use forge::synthesis::{generate_corpus, generate_pos_union, StrategyConfig};

fn show(title: &str, corpus: &Corpus) {
    println!("-- {title}");
    for s in &corpus.sentences {
        println!("{:<8} {:<9} {}", s.id, s.label.as_str(), s.text());
    }
}

fn main() -> forge::Result<()> {
    let cfg = LangConfig::default();
    let source = Corpus::from_sentences(
        cfg.language_pair(),
        vec![
            Sentence::natural("s0", tokenize_tagged("i love spicy food !", &cfg), SentimentLabel::Positive),
            Sentence::natural("s1", tokenize_tagged("the movie was very boring", &cfg), SentimentLabel::Negative),
            Sentence::natural("s2", tokenize_tagged("my friend bought good food", &cfg), SentimentLabel::Neutral),
        ],
    )?;

    let masked = generate_corpus(&source, &StrategyConfig::word(0.4), &Translator::mask(), 3, 7)?;
    show("word, tau 0.4, <GIB> mask", &masked);

    let dict = TranslationDictionary::from_scores([
        ("food", "khana", 3.0),
        ("food", "bhojan", 1.0),
        ("love", "pyaar", 1.0),
        ("movie", "film", 1.0),
        ("good", "accha", 1.0),
        ("friend", "dost", 1.0),
    ])?;
    let hindi = generate_corpus(&source, &StrategyConfig::phrase(0.5), &Translator::Dictionary(dict, OovPolicy::KeepSource), 6, 7)?;
    show("phrase, tau 0.5, dictionary", &hindi);

    let mut table = PhraseTable::new();
    table.insert("spicy food", "teekha khana")?;
    table.insert("very boring", "bahut bekaar")?;
    let tabled = generate_corpus(&source, &StrategyConfig::phrase(1.0), &Translator::Table(table), 3, 1)?;
    show("phrase, tau 1, phrase table", &tabled);

    let tagged = tag_corpus(&source, &TagLexicon::builtin_english());
    let union = generate_pos_union(&tagged, &["NN".to_string(), "JJ".to_string()], &Translator::mask(), 7)?;
    show("POS union of NN and JJ, mask", &union);
    Ok(())
}
