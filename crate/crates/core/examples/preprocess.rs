//! Clean raw social-media text, then mine confident neutral candidates.
//!
//! cargo run --example preprocess

use forge::corpus::{tokenize_tagged, Corpus, LangConfig, Sentence, SentimentLabel};
use forge::preprocess::{clean, mine_neutral, EmojiMap, ScoreRecord, NEUTRAL_THRESHOLD};

fn main() -> forge::Result<()> {
    let mut emoji = EmojiMap::new();
    emoji.insert("😍", "smiling_face_with_heart_eyes")?;
    emoji.insert("👍", "thumbs_up")?;

    let raw = [
        ("t1", "loved it 😍😍 #mustwatch https://t.co/x1"),
        ("t2", "meeting moved to 5 pm @team 👍"),
        ("t3", "kal office band hai 🙃"),
    ];
    let cfg = LangConfig::default();
    let mut sentences = Vec::new();
    for (id, text) in raw {
        let cleaned = clean(text, &emoji);
        println!("{id}: {text:?}\n    -> {cleaned:?}");
        sentences.push(Sentence::natural(id, tokenize_tagged(&cleaned, &cfg), SentimentLabel::Neutral));
    }

    let candidates = Corpus::from_sentences(cfg.language_pair(), sentences)?;
    let scores = vec![
        ScoreRecord::new("t1", SentimentLabel::Positive, 0.98)?,
        ScoreRecord::new("t2", SentimentLabel::Neutral, 0.93)?,
        ScoreRecord::new("t3", SentimentLabel::Neutral, 0.85)?,
    ];
    let kept = mine_neutral(&candidates, &scores, NEUTRAL_THRESHOLD)?;
    let ids: Vec<&str> = kept.sentences.iter().map(|s| s.id.as_str()).collect();
    println!("neutral above {NEUTRAL_THRESHOLD}: {ids:?}");
    Ok(())
}
