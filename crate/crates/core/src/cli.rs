//! The `forge` command line.
//!
//! Every subcommand reads inputs from files, writes data to files, and
//! prints a JSON [`RunReport`] on standard output. Exit codes: 0 on
//! success, 2 on usage errors, 1 on data errors (the message names the
//! offending file, line or sentence id).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{read_corpus, write_corpus, Corpus, CorpusFormat, LangConfig, MixedScriptPolicy, Script, DEFAULT_MASK};
use crate::curriculum::{build_schedule, DEFAULT_EPOCHS};
use crate::error::{ForgeError, Result};
use crate::lexicon::{build_dictionary, ibm1_align, read_bitext, read_links, write_links, OovPolicy, PhraseTable, TranslationDictionary, Translator};
use crate::metrics::{calibrate_temperature_on, corpus_cmi, parse_grid, Branch};
use crate::ngram::{combine_generated, NgramModel, DEFAULT_COUNT, DEFAULT_LAMBDA, DEFAULT_MAX_LEN};
use crate::postag::{load_tags, tag_corpus, TagLexicon};
use crate::preprocess::{load_scores, mine_neutral, preprocess_tsv, EmojiMap, NEUTRAL_THRESHOLD};
use crate::rng::sha256_hex;
use crate::synthesis::{generate_corpus, generate_pos_union, StrategyConfig, DEFAULT_PHRASE_LENGTHS};

#[derive(Debug, Parser)]
#[command(name = "forge", version, about = "Synthetic code-mixed corpus generation", arg_required_else_help = true)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for per-sentence work (output is identical for any value).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// error, warn, info, debug or trace; overrides FORGE_LOG.
    #[arg(long, global = true)]
    pub log_level: Option<String>,

    #[command(flatten)]
    pub lang: LangArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct LangArgs {
    #[arg(long, global = true, default_value = "en")]
    pub matrix: String,
    #[arg(long, global = true, default_value = "hi")]
    pub embedded: String,
    #[arg(long, global = true, default_value = DEFAULT_MASK)]
    pub mask: String,
    #[arg(long, global = true, value_enum, default_value_t = ScriptArg::Latin)]
    pub matrix_script: ScriptArg,
    #[arg(long, global = true, value_enum, default_value_t = ScriptArg::Devanagari)]
    pub embedded_script: ScriptArg,
    /// Tag mixed-script tokens as the embedded language instead of the matrix language.
    #[arg(long, global = true)]
    pub mixed_as_embedded: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScriptArg {
    Latin,
    Devanagari,
    Bengali,
    Gurmukhi,
    Gujarati,
    Tamil,
    Telugu,
    Kannada,
    Malayalam,
    Arabic,
    Cyrillic,
}

impl From<ScriptArg> for Script {
    fn from(s: ScriptArg) -> Self {
        match s {
            ScriptArg::Latin => Script::Latin,
            ScriptArg::Devanagari => Script::Devanagari,
            ScriptArg::Bengali => Script::Bengali,
            ScriptArg::Gurmukhi => Script::Gurmukhi,
            ScriptArg::Gujarati => Script::Gujarati,
            ScriptArg::Tamil => Script::Tamil,
            ScriptArg::Telugu => Script::Telugu,
            ScriptArg::Kannada => Script::Kannada,
            ScriptArg::Malayalam => Script::Malayalam,
            ScriptArg::Arabic => Script::Arabic,
            ScriptArg::Cyrillic => Script::Cyrillic,
        }
    }
}

impl LangArgs {
    pub fn config(&self) -> LangConfig {
        LangConfig {
            matrix: self.matrix.clone(),
            embedded: self.embedded.clone(),
            mask: self.mask.clone(),
            matrix_script: self.matrix_script.into(),
            embedded_script: self.embedded_script.into(),
            mixed_script: if self.mixed_as_embedded {
                MixedScriptPolicy::Embedded
            } else {
                MixedScriptPolicy::Matrix
            },
            ..LangConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Word,
    Phrase,
    Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TranslatorArg {
    Mask,
    Dict,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OovArg {
    Keep,
    Drop,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LabelArg {
    Positive,
    Negative,
    Neutral,
}

impl From<LabelArg> for crate::corpus::SentimentLabel {
    fn from(l: LabelArg) -> Self {
        match l {
            LabelArg::Positive => Self::Positive,
            LabelArg::Negative => Self::Negative,
            LabelArg::Neutral => Self::Neutral,
        }
    }
}

#[derive(Debug, Args)]
pub struct TranslatorArgs {
    #[arg(long, value_enum, default_value_t = TranslatorArg::Mask)]
    pub translator: TranslatorArg,
    /// Weighted dictionary TSV for `--translator dict`.
    #[arg(long)]
    pub dict: Option<PathBuf>,
    /// Phrase table TSV for `--translator table`.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OovArg::Keep)]
    pub oov: OovArg,
}

impl TranslatorArgs {
    fn build(&self, mask: &str, inputs: &mut Vec<PathBuf>) -> Result<Translator> {
        match self.translator {
            TranslatorArg::Mask => Ok(Translator::ConstantMask(mask.to_string())),
            TranslatorArg::Dict => {
                let path = self.dict.as_ref().ok_or_else(|| ForgeError::Invalid("--translator dict needs --dict".into()))?;
                inputs.push(path.clone());
                let oov = match self.oov {
                    OovArg::Keep => OovPolicy::KeepSource,
                    OovArg::Drop => OovPolicy::Drop,
                    OovArg::Error => OovPolicy::Error,
                };
                Ok(Translator::Dictionary(TranslationDictionary::load(path)?, oov))
            }
            TranslatorArg::Table => {
                let path = self.table.as_ref().ok_or_else(|| ForgeError::Invalid("--translator table needs --table".into()))?;
                inputs.push(path.clone());
                Ok(Translator::Table(PhraseTable::load(path)?))
            }
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clean raw `id<TAB>text<TAB>label` rows into a jsonl corpus.
    Preprocess {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        emoji: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Keep candidates classified neutral above a confidence threshold.
    MineNeutral {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        scores: PathBuf,
        #[arg(long, default_value_t = NEUTRAL_THRESHOLD)]
        threshold: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Code-Mixing Index report of a corpus.
    Cmi {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Find the temperature whose synthetic CMI matches a target.
    Calibrate {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target_cmi: f64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Phrase)]
        strategy: StrategyArg,
        #[arg(long, default_value = "0:1:0.05")]
        grid: String,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        /// Side of the CMI peak to search: any, below-peak or above-peak.
        #[arg(long, default_value = "any")]
        branch: Branch,
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<usize>>,
        #[command(flatten)]
        translator: TranslatorArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Word-align a `source<TAB>target` bitext (Pharaoh output).
    Align {
        #[arg(long)]
        bitext: PathBuf,
        #[arg(long, default_value_t = 5)]
        iters: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a weighted dictionary from a bitext and its alignment links.
    BuildDict {
        #[arg(long)]
        bitext: PathBuf,
        #[arg(long)]
        links: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Attach POS tags from a tag file or a lexicon.
    Tag {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, conflicts_with_all = ["lexicon", "suffixes"])]
        tags: Option<PathBuf>,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long, requires = "lexicon")]
        suffixes: Option<PathBuf>,
        #[arg(long, default_value = "NN")]
        default_tag: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a synthetic code-mixed corpus.
    Generate {
        #[arg(long)]
        source: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Phrase)]
        strategy: StrategyArg,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<usize>>,
        /// Comma-separated Penn tags for `--strategy pos`.
        #[arg(long, value_delimiter = ',')]
        pos: Option<Vec<String>>,
        /// Build one dataset per tag and take their union.
        #[arg(long)]
        union: bool,
        #[command(flatten)]
        translator: TranslatorArgs,
        /// Sentences to emit; defaults to the source size.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Train or sample n-gram language models.
    Ngram {
        #[command(subcommand)]
        action: NgramCommand,
    },
    /// Write staged SCM/NCM files and a manifest.
    Curriculum {
        #[arg(long)]
        scm: PathBuf,
        #[arg(long)]
        ncm: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "30000,10000,3000,1000,0")]
        stages: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_EPOCHS)]
        epochs: u32,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Summary counts for a corpus.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum NgramCommand {
    Train {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        label: LabelArg,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_LAMBDA)]
        lambda: f64,
        #[arg(long)]
        out: PathBuf,
    },
    Generate {
        #[arg(long, value_delimiter = ',', required = true)]
        models: Vec<PathBuf>,
        /// Sentences sampled per model before deduplication.
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

impl FileDigest {
    fn of(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| ForgeError::io(path, e))?;
        Ok(FileDigest {
            path: path.display().to_string(),
            sha256: sha256_hex(&bytes),
            bytes: bytes.len() as u64,
        })
    }
}

/// Machine-readable summary of one successful run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub config: Value,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub counts: BTreeMap<String, Value>,
    pub wall_time_ms: u128,
}

struct Outcome {
    command: &'static str,
    config: Value,
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    counts: BTreeMap<String, Value>,
}

impl Outcome {
    fn new(command: &'static str, config: Value) -> Self {
        Outcome {
            command,
            config,
            inputs: Vec::new(),
            outputs: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    fn count(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.counts.insert(key.to_string(), value.into());
        self
    }
}

fn read_jsonl(path: &Path, lang: &LangConfig) -> Result<Corpus> {
    read_corpus(path, CorpusFormat::Jsonl, lang)
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| ForgeError::io(path, e))
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    write_text(path, &(serde_json::to_string_pretty(value).expect("serializable") + "\n"))
}

fn strategy_config(strategy: StrategyArg, tau: f64, lengths: Option<Vec<usize>>, pos: Option<Vec<String>>) -> Result<StrategyConfig> {
    let config = match strategy {
        StrategyArg::Word => StrategyConfig::Word { tau },
        StrategyArg::Phrase => StrategyConfig::Phrase {
            tau,
            lengths: lengths.unwrap_or_else(|| DEFAULT_PHRASE_LENGTHS.to_vec()),
        },
        StrategyArg::Pos => StrategyConfig::Pos {
            tags: pos.ok_or_else(|| ForgeError::Invalid("--strategy pos needs --pos".into()))?,
        },
    };
    config.validate()?;
    Ok(config)
}

fn execute(cli: Cli) -> Result<Outcome> {
    let lang = cli.lang.config();
    let seed = cli.seed;
    match cli.command {
        Command::Preprocess { input, emoji, out } => {
            let map = match &emoji {
                Some(p) => EmojiMap::load(p)?,
                None => EmojiMap::new(),
            };
            let corpus = preprocess_tsv(&input, &map, &lang)?;
            write_corpus(&corpus, &out)?;
            let mut o = Outcome::new("preprocess", json!({"input": input, "emoji": emoji, "out": out}))
                .count("sentences", corpus.len());
            o.inputs.push(input);
            o.inputs.extend(emoji);
            o.outputs.push(out);
            Ok(o)
        }
        Command::MineNeutral { input, scores, threshold, out } => {
            let corpus = read_jsonl(&input, &lang)?;
            let records = load_scores(&scores)?;
            let mined = mine_neutral(&corpus, &records, threshold)?;
            write_corpus(&mined, &out)?;
            let mut o = Outcome::new("mine-neutral", json!({"input": input, "scores": scores, "threshold": threshold, "out": out}))
                .count("candidates", corpus.len())
                .count("kept", mined.len());
            o.inputs.extend([input, scores]);
            o.outputs.push(out);
            Ok(o)
        }
        Command::Cmi { input, report } => {
            let corpus = read_jsonl(&input, &lang)?;
            let r = corpus_cmi(&corpus)?;
            let mut o = Outcome::new("cmi", json!({"input": input, "report": report}))
                .count("sentences", corpus.len())
                .count("mean", r.mean)
                .count("stddev", r.stddev);
            if let Some(path) = report {
                write_json(&path, &r)?;
                o.outputs.push(path);
            }
            o.inputs.push(input);
            Ok(o)
        }
        Command::Calibrate { source, target_cmi, strategy, grid, samples, branch, lengths, translator, out } => {
            if strategy == StrategyArg::Pos {
                return Err(ForgeError::Invalid("calibration needs the word or phrase strategy".into()));
            }
            let corpus = read_jsonl(&source, &lang)?;
            let mut inputs = vec![source.clone()];
            let tr = translator.build(&lang.mask, &mut inputs)?;
            let config = strategy_config(strategy, 0.0, lengths, None)?;
            let tau_grid = parse_grid(&grid)?;
            let result = calibrate_temperature_on(&corpus, target_cmi, &config, &tr, &tau_grid, samples, seed, branch)?;
            write_json(&out, &result)?;
            let mut o = Outcome::new(
                "calibrate",
                json!({"source": source, "target_cmi": target_cmi, "strategy": config.name(), "grid": tau_grid,
                       "samples": samples, "branch": branch, "translator": tr.name(), "seed": seed, "out": out}),
            )
            .count("grid_points", result.grid.len())
            .count("tau_star", result.tau_star);
            o.inputs = inputs;
            o.outputs.push(out);
            Ok(o)
        }
        Command::Align { bitext, iters, out } => {
            let pairs = read_bitext(&bitext)?;
            let links = ibm1_align(&pairs, iters)?;
            write_text(&out, &write_links(&links))?;
            let mut o = Outcome::new("align", json!({"bitext": bitext, "iters": iters, "out": out}))
                .count("pairs", pairs.len())
                .count("links", links.iter().map(Vec::len).sum::<usize>());
            o.inputs.push(bitext);
            o.outputs.push(out);
            Ok(o)
        }
        Command::BuildDict { bitext, links, out } => {
            let pairs = read_bitext(&bitext)?;
            let link_lists = read_links(&links)?;
            let dict = build_dictionary(&pairs, &link_lists)?;
            write_text(&out, &dict.to_tsv())?;
            let mut o = Outcome::new("build-dict", json!({"bitext": bitext, "links": links, "out": out}))
                .count("source_words", dict.len());
            o.inputs.extend([bitext, links]);
            o.outputs.push(out);
            Ok(o)
        }
        Command::Tag { input, tags, lexicon, suffixes, default_tag, out } => {
            let corpus = read_jsonl(&input, &lang)?;
            let mut o = Outcome::new(
                "tag",
                json!({"input": input, "tags": tags, "lexicon": lexicon, "suffixes": suffixes, "default_tag": default_tag, "out": out}),
            );
            o.inputs.push(input);
            let tagged = match (tags, lexicon) {
                (Some(t), _) => {
                    let c = load_tags(&corpus, &t)?;
                    o.inputs.push(t);
                    c
                }
                (None, Some(lex_path)) => {
                    let lex = TagLexicon::load(&lex_path, suffixes.as_deref(), &default_tag)?;
                    o.inputs.push(lex_path);
                    o.inputs.extend(suffixes);
                    tag_corpus(&corpus, &lex)
                }
                (None, None) => tag_corpus(&corpus, &TagLexicon::builtin_english()),
            };
            write_corpus(&tagged, &out)?;
            o.outputs.push(out);
            Ok(o.count("sentences", tagged.len()))
        }
        Command::Generate { source, strategy, tau, lengths, pos, union, translator, count, out } => {
            let corpus = read_jsonl(&source, &lang)?;
            let mut inputs = vec![source.clone()];
            let tr = translator.build(&lang.mask, &mut inputs)?;
            if strategy != StrategyArg::Pos && tau.is_none() {
                return Err(ForgeError::Invalid("--tau is required for the word and phrase strategies".into()));
            }
            let config = strategy_config(strategy, tau.unwrap_or(0.0), lengths, pos)?;
            let generated = match (&config, union) {
                (StrategyConfig::Pos { tags }, true) => generate_pos_union(&corpus, tags, &tr, seed)?,
                (_, true) => return Err(ForgeError::Invalid("--union applies to --strategy pos only".into())),
                _ => generate_corpus(&corpus, &config, &tr, count.unwrap_or(corpus.len()), seed)?,
            };
            write_corpus(&generated, &out)?;
            let mut o = Outcome::new(
                "generate",
                json!({"source": source, "strategy": config.name(), "params": config.params().into_iter().collect::<BTreeMap<_, _>>(),
                       "union": union, "translator": tr.name(), "count": count, "seed": seed, "out": out}),
            )
            .count("sentences", generated.len());
            o.inputs = inputs;
            o.outputs.push(out);
            Ok(o)
        }
        Command::Ngram { action: NgramCommand::Train { input, label, order, lambda, out } } => {
            let corpus = read_jsonl(&input, &lang)?;
            let model = NgramModel::train(&corpus, label.into(), order, lambda)?;
            model.save(&out)?;
            let mut o = Outcome::new("ngram train", json!({"input": input, "label": model.label(), "order": order, "lambda": lambda, "out": out}))
                .count("support", model.support().len());
            o.inputs.push(input);
            o.outputs.push(out);
            Ok(o)
        }
        Command::Ngram { action: NgramCommand::Generate { models, count, max_len, out } } => {
            let loaded = models.iter().map(NgramModel::load).collect::<Result<Vec<_>>>()?;
            let corpus = combine_generated(&loaded, count, seed, max_len)?;
            write_corpus(&corpus, &out)?;
            let requested = loaded.len() * count;
            let mut o = Outcome::new("ngram generate", json!({"models": models, "count": count, "max_len": max_len, "seed": seed, "out": out}))
                .count("requested", requested)
                .count("sentences", corpus.len());
            o.inputs = models;
            o.outputs.push(out);
            Ok(o)
        }
        Command::Curriculum { scm, ncm, stages, epochs, out_dir } => {
            let scm_corpus = read_jsonl(&scm, &lang)?;
            let ncm_corpus = read_jsonl(&ncm, &lang)?;
            let mut schedule = build_schedule(&scm_corpus, &ncm_corpus, &stages, epochs, seed)?;
            schedule.manifest.scm_source = Some(scm.display().to_string());
            schedule.manifest.ncm_source = Some(ncm.display().to_string());
            schedule.write(&out_dir)?;
            let mut o = Outcome::new("curriculum", json!({"scm": scm, "ncm": ncm, "stages": stages, "epochs": epochs, "seed": seed, "out_dir": out_dir}))
                .count("stage_sizes", schedule.stages.iter().map(Corpus::len).collect::<Vec<_>>());
            o.inputs.extend([scm, ncm]);
            o.outputs.push(out_dir.join("manifest.json"));
            o.outputs.extend(schedule.manifest.stages.iter().map(|s| out_dir.join(&s.file)));
            Ok(o)
        }
        Command::Stats { input } => {
            let corpus = read_jsonl(&input, &lang)?;
            let mut o = Outcome::new("stats", json!({"input": input}))
                .count("sentences", corpus.len())
                .count("tokens", corpus.sentences.iter().map(|s| s.tokens.len()).sum::<usize>());
            let mut labels = BTreeMap::new();
            for (label, n) in corpus.label_counts() {
                labels.insert(label.as_str(), n);
            }
            let mut langs: BTreeMap<&str, usize> = BTreeMap::new();
            let mut origins: BTreeMap<&str, usize> = BTreeMap::new();
            for s in &corpus.sentences {
                *origins
                    .entry(match s.origin {
                        crate::corpus::Origin::Natural => "natural",
                        crate::corpus::Origin::Synthetic => "synthetic",
                    })
                    .or_insert(0) += 1;
                for t in &s.tokens {
                    *langs.entry(t.lang.as_str()).or_insert(0) += 1;
                }
            }
            o = o.count("labels", json!(labels)).count("languages", json!(langs)).count("origins", json!(origins));
            if !corpus.is_empty() {
                o = o.count("mean_cmi", corpus_cmi(&corpus)?.mean);
            }
            o.inputs.push(input);
            Ok(o)
        }
    }
}

fn init_logging(level: Option<&str>) {
    let env = env_logger::Env::new().filter_or("FORGE_LOG", "warn");
    let mut builder = env_logger::Builder::from_env(env);
    if let Some(level) = level {
        builder.parse_filters(level);
    }
    let _ = builder.target(env_logger::Target::Stderr).try_init();
}

/// Parse `argv` and run, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    init_logging(cli.log_level.as_deref());

    let started = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return 1;
        }
    };
    let result = pool.install(|| execute(cli)).and_then(|o| {
        Ok(RunReport {
            command: o.command.to_string(),
            config: o.config,
            inputs: o.inputs.iter().map(|p| FileDigest::of(p)).collect::<Result<_>>()?,
            outputs: o.outputs.iter().map(|p| FileDigest::of(p)).collect::<Result<_>>()?,
            counts: o.counts,
            wall_time_ms: started.elapsed().as_millis(),
        })
    });
    match result {
        Ok(report) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Run against the process's standard streams and return the exit code.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}
