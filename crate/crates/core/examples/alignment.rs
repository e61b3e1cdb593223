//! Align a tiny bitext with EM, extract a weighted dictionary and sample from it.
//!
//! cargo run --example alignment

use forge::lexicon::{build_dictionary, write_links, Ibm1Model, SentencePair};
use forge::rng::stream;

fn pair(src: &str, tgt: &str) -> SentencePair {
    (
        src.split_whitespace().map(String::from).collect(),
        tgt.split_whitespace().map(String::from).collect(),
    )
}

fn main() -> forge::Result<()> {
    let bitext = vec![
        pair("i food", "mujhe khana"),
        pair("food", "khana"),
        pair("good food", "accha khana"),
        pair("good food", "accha bhojan"),
        pair("good", "accha"),
    ];

    let mut model = Ibm1Model::initialize(&bitext)?;
    for _ in 0..5 {
        model.step();
        println!(
            "iter {}: t(khana|food) {:.3}  t(bhojan|food) {:.3}  t(mujhe|food) {:.3}",
            model.iterations(),
            model.prob("food", "khana"),
            model.prob("food", "bhojan"),
            model.prob("food", "mujhe"),
        );
    }

    let links: Vec<_> = bitext.iter().map(|(s, t)| model.align_pair(s, t)).collect();
    print!("{}", write_links(&links));

    let dict = build_dictionary(&bitext, &links)?;
    print!("{}", dict.to_tsv());

    let mut rng = stream(42);
    let draws: Vec<&str> = (0..10).filter_map(|_| dict.sample("food", &mut rng)).collect();
    println!("food -> {}", draws.join(" "));
    Ok(())
}
