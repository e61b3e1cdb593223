//! Corpus files.
//!
//! The jsonl format starts with one header line carrying the language pair
//! and metadata, `{"corpus":{"matrix":"en","embedded":"hi","meta":{}}}`,
//! followed by one sentence object per line. Files without a header are
//! accepted and take the language pair from the [`LangConfig`].

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{tokenize_tagged, Corpus, LangConfig, LanguagePair, SentimentLabel, Sentence};
use crate::error::{ForgeError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    RawTsv,
}

impl FromStr for CorpusFormat {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(CorpusFormat::Jsonl),
            "raw-tsv" | "tsv" => Ok(CorpusFormat::RawTsv),
            other => Err(ForgeError::Invalid(format!("unknown corpus format `{other}`"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    corpus: Header,
}

#[derive(Serialize, Deserialize)]
struct Header {
    matrix: String,
    embedded: String,
    #[serde(default)]
    meta: BTreeMap<String, String>,
}

pub fn read_corpus(path: impl AsRef<Path>, format: CorpusFormat, config: &LangConfig) -> Result<Corpus> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| ForgeError::io(path, e))?;
    let reader = BufReader::new(file);
    let corpus = match format {
        CorpusFormat::Jsonl => read_jsonl(reader, path, config)?,
        CorpusFormat::RawTsv => read_raw_tsv(reader, path, config)?,
    };
    Ok(corpus)
}

fn read_jsonl(reader: impl BufRead, path: &Path, config: &LangConfig) -> Result<Corpus> {
    let mut corpus = Corpus::new(config.language_pair());
    let mut ids = std::collections::HashSet::new();
    let mut first = true;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| ForgeError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        if first {
            first = false;
            if line.trim_start().starts_with("{\"corpus\"") {
                let header: HeaderLine = serde_json::from_str(&line)
                    .map_err(|e| ForgeError::parse(path, lineno, e.to_string()))?;
                corpus.language_pair = LanguagePair::new(header.corpus.matrix, header.corpus.embedded);
                corpus.meta = header.corpus.meta;
                continue;
            }
        }
        let sentence: Sentence =
            serde_json::from_str(&line).map_err(|e| ForgeError::parse(path, lineno, e.to_string()))?;
        sentence
            .validate(&config.mask)
            .map_err(|e| ForgeError::parse(path, lineno, e.to_string()))?;
        if !ids.insert(sentence.id.clone()) {
            return Err(ForgeError::parse(
                path,
                lineno,
                ForgeError::DuplicateId(sentence.id).to_string(),
            ));
        }
        corpus.sentences.push(sentence);
    }
    corpus
        .validate(&config.mask)
        .map_err(|e| ForgeError::parse(path, 0, e.to_string()))?;
    Ok(corpus)
}

fn read_raw_tsv(reader: impl BufRead, path: &Path, config: &LangConfig) -> Result<Corpus> {
    let mut corpus = Corpus::new(config.language_pair());
    let mut ids = std::collections::HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| ForgeError::io(path, e))?;
        if line.is_empty() {
            continue;
        }
        let (id, text, label) = split_raw_row(&line).map_err(|msg| ForgeError::parse(path, lineno, msg))?;
        let label = SentimentLabel::from_str(label).map_err(|e| ForgeError::parse(path, lineno, e.to_string()))?;
        let tokens = tokenize_tagged(text, config);
        if tokens.is_empty() {
            return Err(ForgeError::parse(path, lineno, format!("sentence `{id}` has no tokens")));
        }
        if !ids.insert(id.to_string()) {
            return Err(ForgeError::parse(path, lineno, ForgeError::DuplicateId(id.into()).to_string()));
        }
        corpus.sentences.push(Sentence::natural(id, tokens, label));
    }
    Ok(corpus)
}

/// Split an `id<TAB>text<TAB>label` row.
pub(crate) fn split_raw_row(line: &str) -> std::result::Result<(&str, &str, &str), String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 3 {
        return Err(format!("expected 3 tab-separated fields, found {}", fields.len()));
    }
    if fields[0].is_empty() {
        return Err("empty sentence id".into());
    }
    Ok((fields[0], fields[1], fields[2].trim_end_matches('\r')))
}

/// Serialize a corpus to jsonl bytes: header line, then one line per sentence.
pub fn to_jsonl_bytes(corpus: &Corpus) -> Vec<u8> {
    let mut out = Vec::new();
    write_jsonl(corpus, &mut out).expect("writing to a Vec cannot fail");
    out
}

fn write_jsonl(corpus: &Corpus, mut w: impl Write) -> std::io::Result<()> {
    let header = HeaderLine {
        corpus: Header {
            matrix: corpus.language_pair.matrix.clone(),
            embedded: corpus.language_pair.embedded.clone(),
            meta: corpus.meta.clone(),
        },
    };
    serde_json::to_writer(&mut w, &header)?;
    w.write_all(b"\n")?;
    for s in &corpus.sentences {
        serde_json::to_writer(&mut w, s)?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

pub fn write_corpus(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| ForgeError::io(path, e))?;
    write_jsonl(corpus, BufWriter::new(file)).map_err(|e| ForgeError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{GenRecord, LanguageTag, Token};
    use std::io::Cursor;

    fn cfg() -> LangConfig {
        LangConfig::default()
    }

    fn from_str(s: &str) -> Result<Corpus> {
        read_jsonl(Cursor::new(s), Path::new("mem.jsonl"), &cfg())
    }

    #[test]
    fn empty_inputs() {
        let c = from_str("").unwrap();
        assert!(c.is_empty());
        let c = read_raw_tsv(Cursor::new(""), Path::new("mem.tsv"), &cfg()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn raw_row_is_tokenized_and_tagged() {
        let c = read_raw_tsv(Cursor::new("s1\ti love food\tpositive\n"), Path::new("m"), &cfg()).unwrap();
        let s = &c.sentences[0];
        assert_eq!(s.id, "s1");
        assert_eq!(s.label, SentimentLabel::Positive);
        assert_eq!(s.origin, crate::corpus::Origin::Natural);
        assert_eq!(s.text(), "i love food");
        assert!(s.tokens.iter().all(|t| t.lang == LanguageTag::Matrix));
    }

    #[test]
    fn raw_errors_carry_line_numbers() {
        let err = read_raw_tsv(Cursor::new("a\tx\tpositive\nb\ty\tmixed\n"), Path::new("m"), &cfg()).unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 2, .. }), "{err}");
        let err = read_raw_tsv(Cursor::new("a\tx\tpositive\na\ty\tneutral\n"), Path::new("m"), &cfg()).unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 2, ref msg, .. } if msg.contains("duplicate")));
        let err = read_raw_tsv(Cursor::new("a\tx\n"), Path::new("m"), &cfg()).unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 1, .. }));
    }

    #[test]
    fn jsonl_errors() {
        let err = from_str("{\"id\":\"a\",\"label\":\"happy\",\"origin\":\"natural\",\"tokens\":[{\"t\":\"x\",\"lang\":\"mat\"}]}\n")
            .unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 1, .. }));
        let line = "{\"id\":\"a\",\"label\":\"neutral\",\"origin\":\"natural\",\"tokens\":[{\"t\":\"x\",\"lang\":\"mat\"}]}\n";
        let err = from_str(&format!("{line}{line}")).unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 2, .. }));
        let err = from_str("{\"id\":\"a\",\"label\":\"neutral\",\"origin\":\"synthetic\",\"tokens\":[{\"t\":\"x\",\"lang\":\"mat\"}]}\n")
            .unwrap_err();
        assert!(matches!(err, ForgeError::Parse { line: 1, .. }));
    }

    #[test]
    fn headerless_jsonl_uses_config_pair() {
        let c = from_str("{\"id\":\"a\",\"label\":\"neutral\",\"origin\":\"natural\",\"tokens\":[{\"t\":\"khana\",\"lang\":\"emb\",\"pos\":\"NN\"}]}\n").unwrap();
        assert_eq!(c.language_pair, LanguagePair::new("en", "hi"));
        // authoritative tags override the script heuristic
        assert_eq!(c.sentences[0].tokens[0].lang, LanguageTag::Embedded);
        assert_eq!(c.sentences[0].tokens[0].pos.as_deref(), Some("NN"));
    }

    #[test]
    fn gen_record_round_trips() {
        let gen = GenRecord::new("phrase", 123, "s1")
            .param("tau", 0.4)
            .param("lengths", vec![1, 2, 3]);
        let s = Sentence::synthetic(
            "s1#0",
            vec![Token::new("<GIB>", LanguageTag::Mask).unwrap(), Token::new("food", LanguageTag::Matrix).unwrap().with_pos("NN")],
            SentimentLabel::Negative,
            gen,
        );
        let mut c = Corpus::from_sentences(LanguagePair::new("en", "GIB"), vec![s]).unwrap();
        c.meta.insert("k".into(), "v".into());
        let bytes = to_jsonl_bytes(&c);
        let back = read_jsonl(Cursor::new(bytes.clone()), Path::new("m"), &cfg()).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_jsonl_bytes(&back), bytes);
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("\"gen\":{\"strategy\":\"phrase\",\"params\":{\"lengths\":[1,2,3],\"tau\":0.4},\"seed\":123,\"src\":\"s1\"}"));
    }

    #[test]
    fn zero_sentence_corpus_has_only_header() {
        let c = Corpus::new(LanguagePair::new("en", "hi"));
        let text = String::from_utf8(to_jsonl_bytes(&c)).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("{\"corpus\""));
    }
}
