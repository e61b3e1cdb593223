//! Sweep the temperature grid and pick the tau whose synthetic CMI matches a target.
//!
//! cargo run --release --example calibration

use forge::corpus::{Corpus, LanguagePair, LanguageTag, Sentence, SentimentLabel, Token};
use forge::lexicon::Translator;
use forge::metrics::{calibrate_temperature_on, parse_grid, Branch};
use forge::synthesis::StrategyConfig;

fn main() -> forge::Result<()> {
    let sentences = (0..200)
        .map(|i| {
            let tokens = (0..20).map(|j| Token::new(format!("w{j}"), LanguageTag::Matrix)).collect::<forge::Result<_>>()?;
            Ok(Sentence::natural(format!("m{i}"), tokens, SentimentLabel::Neutral))
        })
        .collect::<forge::Result<Vec<_>>>()?;
    let source = Corpus::from_sentences(LanguagePair::new("en", "hi"), sentences)?;

    let grid = parse_grid("0:1:0.05")?;
    let target = 25.0;
    for branch in [Branch::Any, Branch::BelowPeak, Branch::AbovePeak] {
        let r = calibrate_temperature_on(&source, target, &StrategyConfig::phrase(0.0), &Translator::mask(), &grid, 1000, 3, branch)?;
        if branch == Branch::Any {
            for p in &r.grid {
                println!("tau {:.2}  CMI {:>6.2}  {}", p.tau, p.mean_cmi, "#".repeat((p.mean_cmi / 2.0) as usize));
            }
        }
        println!("{branch:?}: tau* = {} (peak at {})", r.tau_star, r.tau_peak);
    }
    Ok(())
}
