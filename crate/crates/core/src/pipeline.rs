//! Runs the stages against on-disk artifacts.
//!
//! Every artifact starts with a one-line JSON header naming the artifact, the
//! stage configuration that produced it and a fingerprint of that
//! configuration. Fingerprints chain: a stage's fingerprint covers its own
//! settings and the fingerprints of the artifacts it reads, so changing an
//! upstream setting makes every downstream artifact stale.

use std::fmt;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::classifier::{
    filter_howto, parse_training, train_bayes, train_logistic, LogisticParams, Model, BUNDLED_TRAINING,
};
use crate::corpus::{filter_corpus, parse_dump, DumpFormat, Post, Preprocessor, StopList};
use crate::discovery::{discover, parse_seeds, DiscoveryParams, DiscoveryReport, MiningParams, Window};
use crate::error::{Error, Result};
use crate::eval::{report, GoldJudgments};
use crate::index::{query, IndexFile, QueryOptions};
use crate::linker::{annotate_file, write_sidecar, LinkConfig, Linker};
use crate::pos::{load_pretagged, PosTagger, TaggedTitle};
use crate::profile::{
    build_profiles, documents_from_posts, read_profiles, write_profiles, CorpusStats, EntityProfile, NgramRange,
    ProfileParams,
};

pub const ARTIFACT_VERSION: u32 = 1;

/// Pipeline settings, read from a TOML file of top-level keys. Relative paths
/// resolve against the directory holding the config file.
///
/// ```toml
/// corpus = ["dump.xml"]
/// language = "java"
/// seeds = "seeds.txt"
/// sources = "src"
/// output = "out"
/// top_k = 50
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub corpus: Vec<String>,
    /// `auto` picks by file extension; otherwise `xml` or `jsonl`.
    pub format: String,
    /// Tag a question must carry to enter the corpus.
    pub language: String,
    pub require_snippet: bool,
    pub stopwords: Option<String>,

    pub classifier: bool,
    /// `bayes` or `logistic`.
    pub classifier_model: String,
    pub classifier_training: Option<String>,
    pub include_body: bool,
    pub alpha: f64,
    pub learning_rate: f64,
    pub epochs: usize,
    pub l2: f64,
    pub seed: u64,

    pub seeds: Option<String>,
    pub pos_lexicon: Option<String>,
    /// Pre-tagged titles replacing the built-in tagger.
    pub pretagged: Option<String>,
    pub window_before: usize,
    pub window_after: usize,
    pub min_support: f64,
    pub split_ratio: f64,
    pub per_pattern_cap: usize,
    pub rounds: u32,

    pub ngram_min: usize,
    pub ngram_max: usize,
    pub top_k: usize,
    pub min_entity_posts: u64,

    pub sources: Option<String>,
    pub extensions: Vec<String>,
    pub min_normalized_weight: f64,
    pub profile_depth: usize,
    pub max_entities_per_line: usize,

    pub gold: Option<String>,
    pub k: usize,

    pub output: String,

    #[serde(skip)]
    base: PathBuf,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        let mining = MiningParams::default();
        let discovery = DiscoveryParams::default();
        let profile = ProfileParams::default();
        let link = LinkConfig::default();
        let logistic = LogisticParams::default();
        PipelineConfig {
            corpus: Vec::new(),
            format: "auto".into(),
            language: "java".into(),
            require_snippet: true,
            stopwords: None,
            classifier: false,
            classifier_model: "bayes".into(),
            classifier_training: None,
            include_body: false,
            alpha: 1.0,
            learning_rate: logistic.learning_rate,
            epochs: logistic.epochs,
            l2: logistic.l2,
            seed: logistic.seed,
            seeds: None,
            pos_lexicon: None,
            pretagged: None,
            window_before: mining.window.before,
            window_after: mining.window.after,
            min_support: mining.min_support,
            split_ratio: mining.split_ratio,
            per_pattern_cap: discovery.per_pattern_cap,
            rounds: discovery.rounds,
            ngram_min: profile.range.min,
            ngram_max: profile.range.max,
            top_k: profile.top_k,
            min_entity_posts: profile.min_entity_posts,
            sources: None,
            extensions: vec!["java".into()],
            min_normalized_weight: link.min_normalized_weight,
            profile_depth: link.profile_depth,
            max_entities_per_line: link.max_entities_per_line,
            gold: None,
            k: 4,
            output: "out".into(),
            base: PathBuf::from("."),
        }
    }
}

/// Parses a `key=value` override. The value is read as a TOML value and
/// falls back to a bare string.
fn override_value(raw: &str) -> toml::Value {
    match format!("v = {raw}").parse::<toml::Table>() {
        Ok(mut t) => t.remove("v").unwrap_or_else(|| toml::Value::String(raw.into())),
        Err(_) => toml::Value::String(raw.into()),
    }
}

impl PipelineConfig {
    /// Builds a config from TOML text plus `key=value` overrides, which win.
    pub fn from_toml(text: &str, overrides: &[(String, String)], base: impl Into<PathBuf>) -> Result<Self> {
        let mut table: toml::Table = text.parse().map_err(|e| Error::Config(format!("{e}")))?;
        for (key, value) in overrides {
            table.insert(key.clone(), override_value(value));
        }
        let mut config: PipelineConfig = toml::Value::Table(table)
            .try_into()
            .map_err(|e| Error::Config(format!("{e}")))?;
        config.base = base.into();
        config.validate()?;
        Ok(config)
    }

    /// Reads `path` (if given) and applies the overrides.
    pub fn load(path: Option<&Path>, overrides: &[(String, String)]) -> Result<Self> {
        match path {
            Some(p) => {
                let text = fs::read_to_string(p).map_err(|e| match e.kind() {
                    std::io::ErrorKind::NotFound => Error::Config(format!("config file {} not found", p.display())),
                    _ => Error::io(p, e),
                })?;
                let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
                Self::from_toml(&text, overrides, base)
            }
            None => Self::from_toml("", overrides, "."),
        }
    }

    pub fn base(&self) -> &Path {
        &self.base
    }

    pub fn resolve(&self, p: &str) -> PathBuf {
        let p = Path::new(p);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base.join(p)
        }
    }

    pub fn output_dir(&self) -> PathBuf {
        self.resolve(&self.output)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !matches!(self.format.as_str(), "auto" | "xml" | "jsonl") {
            return bad(format!("format must be auto, xml or jsonl, got `{}`", self.format));
        }
        if !matches!(self.classifier_model.as_str(), "bayes" | "logistic") {
            return bad(format!(
                "classifier_model must be bayes or logistic, got `{}`",
                self.classifier_model
            ));
        }
        if self.language.trim().is_empty() {
            return bad("language must not be empty".into());
        }
        if self.alpha.is_nan() || self.alpha <= 0.0 {
            return bad(format!("alpha must be positive, got {}", self.alpha));
        }
        if self.learning_rate.is_nan() || self.learning_rate <= 0.0 || self.l2.is_nan() || self.l2 < 0.0 {
            return bad("learning_rate must be positive and l2 non-negative".into());
        }
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.extensions.is_empty() {
            return bad("extensions must list at least one file extension".into());
        }
        self.mining().validate().map_err(|e| Error::Config(e.to_string()))?;
        self.ngram_range()
            .validate()
            .map_err(|e| Error::Config(e.to_string()))?;
        self.link_config()
            .validate()
            .map_err(|e| Error::Config(e.to_string()))?;
        if self.top_k == 0 {
            return bad("top_k must be at least 1".into());
        }
        Ok(())
    }

    pub fn mining(&self) -> MiningParams {
        MiningParams {
            split_ratio: self.split_ratio,
            min_support: self.min_support,
            window: Window {
                before: self.window_before,
                after: self.window_after,
            },
        }
    }

    pub fn ngram_range(&self) -> NgramRange {
        NgramRange {
            min: self.ngram_min,
            max: self.ngram_max,
        }
    }

    pub fn link_config(&self) -> LinkConfig {
        LinkConfig {
            min_normalized_weight: self.min_normalized_weight,
            profile_depth: self.profile_depth,
            max_entities_per_line: self.max_entities_per_line,
        }
    }

    fn logistic_params(&self) -> LogisticParams {
        LogisticParams {
            learning_rate: self.learning_rate,
            epochs: self.epochs,
            l2: self.l2,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Ingest,
    ClassifyTrain,
    ClassifyFilter,
    Discover,
    Profile,
    Annotate,
    Index,
}

impl Stage {
    pub const ALL: [Stage; 7] = [
        Stage::Ingest,
        Stage::ClassifyTrain,
        Stage::ClassifyFilter,
        Stage::Discover,
        Stage::Profile,
        Stage::Annotate,
        Stage::Index,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Ingest => "ingest",
            Stage::ClassifyTrain => "classify-train",
            Stage::ClassifyFilter => "classify-filter",
            Stage::Discover => "discover",
            Stage::Profile => "profile",
            Stage::Annotate => "annotate",
            Stage::Index => "index",
        }
    }

    /// Artifact file, relative to the output directory.
    pub fn artifact(self) -> &'static str {
        match self {
            Stage::Ingest => "posts.jsonl",
            Stage::ClassifyTrain => "classifier.json",
            Stage::ClassifyFilter => "posts.howto.jsonl",
            Stage::Discover => "entities.jsonl",
            Stage::Profile => "profiles.jsonl",
            Stage::Annotate => "annotations.jsonl",
            Stage::Index => "index.jsonl",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const REJECTS_FILE: &str = "rejects.jsonl";
pub const ANNOTATED_DIR: &str = "annotated";
pub const EVAL_FILE: &str = "eval.tsv";
pub const SIDECAR_SUFFIX: &str = ".concepts.jsonl";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArtifactHeader {
    pub artifact: String,
    pub version: u32,
    pub fingerprint: String,
    pub config: serde_json::Value,
}

fn fingerprint(config: &serde_json::Value) -> String {
    // serde_json maps are ordered by key, so this text is canonical
    let text = serde_json::to_string(config).expect("JSON values always serialize");
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

/// What a stage would read and write.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub stage: Stage,
    pub reads: Vec<PathBuf>,
    pub writes: Vec<PathBuf>,
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.stage)?;
        for r in &self.reads {
            writeln!(f, "  read  {}", r.display())?;
        }
        for w in &self.writes {
            writeln!(f, "  write {}", w.display())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub stage: Stage,
    pub summary: String,
}

/// One search result line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLine {
    /// Path of the annotated file.
    pub path: PathBuf,
    pub line: u32,
    pub text: String,
    pub concept: bool,
}

pub struct Pipeline {
    config: PipelineConfig,
    force: bool,
    pre: Preprocessor,
}

fn create_writer(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    Ok(BufWriter::new(File::create(path).map_err(|e| Error::io(path, e))?))
}

fn input_error(path: &Path, e: std::io::Error) -> Error {
    match e.kind() {
        std::io::ErrorKind::NotFound => Error::Config(format!("input file {} not found", path.display())),
        _ => Error::io(path, e),
    }
}

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| input_error(path, e))
}

/// Files under `dir` with one of `extensions`, as sorted `/`-separated paths
/// relative to `dir`.
fn source_files(dir: &Path, extensions: &[String]) -> Result<Vec<String>> {
    fn walk(dir: &Path, prefix: &str, extensions: &[String], out: &mut Vec<String>) -> Result<()> {
        let mut entries: Vec<_> = fs::read_dir(dir)
            .map_err(|e| Error::io(dir, e))?
            .collect::<std::io::Result<_>>()
            .map_err(|e| Error::io(dir, e))?;
        entries.sort_by_key(|e| e.file_name());
        for entry in entries {
            let name = entry.file_name().to_string_lossy().into_owned();
            let rel = if prefix.is_empty() {
                name.clone()
            } else {
                format!("{prefix}/{name}")
            };
            let path = entry.path();
            if path.is_dir() {
                walk(&path, &rel, extensions, out)?;
            } else if path
                .extension()
                .is_some_and(|x| extensions.iter().any(|e| e.as_str() == x.to_string_lossy()))
            {
                out.push(rel);
            }
        }
        Ok(())
    }
    if !dir.is_dir() {
        return Err(Error::Config(format!("source directory {} not found", dir.display())));
    }
    let mut out = Vec::new();
    walk(dir, "", extensions, &mut out)?;
    out.sort();
    Ok(out)
}

fn write_jsonl<T: Serialize>(out: &mut impl Write, items: &[T]) -> Result<()> {
    for item in items {
        serde_json::to_writer(&mut *out, item)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn read_jsonl<T: for<'de> Deserialize<'de>>(source: impl BufRead) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for line in source.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ManifestEntry {
    path: String,
    annotated_lines: usize,
}

impl Pipeline {
    pub fn new(config: PipelineConfig, force: bool) -> Result<Self> {
        let pre = match &config.stopwords {
            Some(p) => Preprocessor::with_stoplist(StopList::from_file(&config.resolve(p))?),
            None => Preprocessor::default(),
        };
        Ok(Pipeline { config, force, pre })
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.config
    }

    pub fn preprocessor(&self) -> &Preprocessor {
        &self.pre
    }

    pub fn artifact_path(&self, stage: Stage) -> PathBuf {
        self.config.output_dir().join(stage.artifact())
    }

    pub fn annotated_dir(&self) -> PathBuf {
        self.config.output_dir().join(ANNOTATED_DIR)
    }

    /// Stage that produced the posts later stages read.
    fn posts_stage(&self) -> Stage {
        if self.config.classifier {
            Stage::ClassifyFilter
        } else {
            Stage::Ingest
        }
    }

    /// The settings a stage depends on, including upstream fingerprints.
    pub fn stage_config(&self, stage: Stage) -> serde_json::Value {
        let c = &self.config;
        match stage {
            Stage::Ingest => json!({
                "corpus": c.corpus,
                "format": c.format,
                "language": c.language,
                "require_snippet": c.require_snippet,
                "stopwords": c.stopwords,
            }),
            Stage::ClassifyTrain => json!({
                "model": c.classifier_model,
                "training": c.classifier_training,
                "include_body": c.include_body,
                "alpha": c.alpha,
                "learning_rate": c.learning_rate,
                "epochs": c.epochs,
                "l2": c.l2,
                "seed": c.seed,
                "stopwords": c.stopwords,
            }),
            Stage::ClassifyFilter => json!({
                "ingest": self.fingerprint(Stage::Ingest),
                "classifier": self.fingerprint(Stage::ClassifyTrain),
            }),
            Stage::Discover => json!({
                "posts": self.fingerprint(self.posts_stage()),
                "seeds": c.seeds,
                "pos_lexicon": c.pos_lexicon,
                "pretagged": c.pretagged,
                "window": [c.window_before, c.window_after],
                "min_support": c.min_support,
                "split_ratio": c.split_ratio,
                "per_pattern_cap": c.per_pattern_cap,
                "rounds": c.rounds,
            }),
            Stage::Profile => json!({
                "posts": self.fingerprint(self.posts_stage()),
                "entities": self.fingerprint(Stage::Discover),
                "n_range": [c.ngram_min, c.ngram_max],
                "top_k": c.top_k,
                "min_entity_posts": c.min_entity_posts,
            }),
            Stage::Annotate => json!({
                "profiles": self.fingerprint(Stage::Profile),
                "sources": c.sources,
                "extensions": c.extensions,
                "min_normalized_weight": c.min_normalized_weight,
                "profile_depth": c.profile_depth,
                "max_entities_per_line": c.max_entities_per_line,
            }),
            Stage::Index => json!({
                "annotations": self.fingerprint(Stage::Annotate),
                "stopwords": c.stopwords,
            }),
        }
    }

    pub fn fingerprint(&self, stage: Stage) -> String {
        fingerprint(&self.stage_config(stage))
    }

    fn header(&self, stage: Stage) -> ArtifactHeader {
        let config = self.stage_config(stage);
        ArtifactHeader {
            artifact: stage.name().into(),
            version: ARTIFACT_VERSION,
            fingerprint: fingerprint(&config),
            config,
        }
    }

    fn create_artifact(&self, stage: Stage) -> Result<BufWriter<File>> {
        let path = self.artifact_path(stage);
        let mut out = create_writer(&path)?;
        serde_json::to_writer(&mut out, &self.header(stage))?;
        out.write_all(b"\n").map_err(|e| Error::io(&path, e))?;
        Ok(out)
    }

    /// Opens a stage's artifact after checking its header against the current
    /// config. Returns a reader positioned after the header.
    pub fn open_artifact(&self, stage: Stage) -> Result<BufReader<File>> {
        let path = self.artifact_path(stage);
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(Error::MissingArtifact(path)),
            Err(e) => return Err(Error::io(&path, e)),
        };
        let mut reader = BufReader::new(file);
        let mut first = String::new();
        reader.read_line(&mut first).map_err(|e| Error::io(&path, e))?;
        let header: ArtifactHeader = serde_json::from_str(&first)
            .map_err(|e| Error::malformed("artifact header", format!("{}: {e}", path.display())))?;
        if header.artifact != stage.name() || header.version != ARTIFACT_VERSION {
            return Err(Error::malformed(
                "artifact header",
                format!("{}: expected {} v{ARTIFACT_VERSION}", path.display(), stage.name()),
            ));
        }
        let expected = self.fingerprint(stage);
        if header.fingerprint != expected && !self.force {
            return Err(Error::StaleArtifact {
                path,
                expected,
                found: header.fingerprint,
            });
        }
        Ok(reader)
    }

    fn input_paths(&self, list: &[&Option<String>]) -> Vec<PathBuf> {
        list.iter()
            .filter_map(|p| p.as_deref())
            .map(|p| self.config.resolve(p))
            .collect()
    }

    pub fn plan(&self, stage: Stage) -> Plan {
        let c = &self.config;
        let artifact = |s: Stage| self.artifact_path(s);
        let (reads, mut writes) = match stage {
            Stage::Ingest => (
                c.corpus.iter().map(|p| c.resolve(p)).collect(),
                vec![artifact(Stage::Ingest), c.output_dir().join(REJECTS_FILE)],
            ),
            Stage::ClassifyTrain => (self.input_paths(&[&c.classifier_training]), vec![]),
            Stage::ClassifyFilter => (vec![artifact(Stage::Ingest), artifact(Stage::ClassifyTrain)], vec![]),
            Stage::Discover => {
                let mut r = vec![artifact(self.posts_stage())];
                r.extend(self.input_paths(&[&c.seeds, &c.pos_lexicon, &c.pretagged]));
                (r, vec![])
            }
            Stage::Profile => (vec![artifact(self.posts_stage()), artifact(Stage::Discover)], vec![]),
            Stage::Annotate => {
                let mut r = vec![artifact(Stage::Profile)];
                r.extend(self.input_paths(&[&c.sources]));
                (r, vec![self.annotated_dir()])
            }
            Stage::Index => (vec![artifact(Stage::Annotate), self.annotated_dir()], vec![]),
        };
        if stage != Stage::Ingest {
            writes.insert(0, artifact(stage));
        }
        Plan { stage, reads, writes }
    }

    /// Stages a full run executes, in order.
    pub fn stages(&self) -> Vec<Stage> {
        Stage::ALL
            .into_iter()
            .filter(|s| self.config.classifier || !matches!(s, Stage::ClassifyTrain | Stage::ClassifyFilter))
            .collect()
    }

    pub fn run(&self, stage: Stage) -> Result<StageReport> {
        let summary = match stage {
            Stage::Ingest => self.ingest()?,
            Stage::ClassifyTrain => self.classify_train()?,
            Stage::ClassifyFilter => self.classify_filter()?,
            Stage::Discover => self.discover()?,
            Stage::Profile => self.profile()?,
            Stage::Annotate => self.annotate()?,
            Stage::Index => self.index()?,
        };
        Ok(StageReport { stage, summary })
    }

    pub fn run_all(&self) -> Result<Vec<StageReport>> {
        self.stages().into_iter().map(|s| self.run(s)).collect()
    }

    fn ingest(&self) -> Result<String> {
        let c = &self.config;
        if c.corpus.is_empty() {
            return Err(Error::Config("no corpus files configured".into()));
        }
        let mut posts = Vec::new();
        let mut rejects = Vec::new();
        for p in &c.corpus {
            let path = c.resolve(p);
            let file = File::open(&path).map_err(|e| match e.kind() {
                std::io::ErrorKind::NotFound => Error::Config(format!("corpus file {} not found", path.display())),
                _ => Error::io(&path, e),
            })?;
            let format = match c.format.as_str() {
                "xml" => DumpFormat::XmlRows,
                "jsonl" => DumpFormat::JsonLines,
                _ => DumpFormat::from_path(&path),
            };
            let parsed = parse_dump(BufReader::new(file), format)?;
            if parsed.posts.is_empty() && parsed.rejects.is_empty() {
                return Err(Error::malformed(
                    "corpus",
                    format!("{} contains no post rows", path.display()),
                ));
            }
            posts.extend(parsed.posts);
            rejects.extend(parsed.rejects);
        }
        let total = posts.len();
        let kept = filter_corpus(&posts, &c.language, c.require_snippet);
        let mut out = self.create_artifact(Stage::Ingest)?;
        write_jsonl(&mut out, &kept)?;
        out.flush()?;
        let mut rej = create_writer(&c.output_dir().join(REJECTS_FILE))?;
        write_jsonl(&mut rej, &rejects)?;
        rej.flush()?;
        Ok(format!(
            "{} of {total} posts kept, {} rows rejected",
            kept.len(),
            rejects.len()
        ))
    }

    fn classify_train(&self) -> Result<String> {
        let c = &self.config;
        let text = match &c.classifier_training {
            Some(p) => read_input(&c.resolve(p))?,
            None => BUNDLED_TRAINING.to_string(),
        };
        let data = parse_training(&text)?;
        let model = match c.classifier_model.as_str() {
            "logistic" => Model::Logistic(train_logistic(&data, c.logistic_params(), &self.pre)?),
            _ => Model::Bayes(train_bayes(&data, c.alpha, &self.pre)?),
        };
        let mut out = self.create_artifact(Stage::ClassifyTrain)?;
        model.write(c.include_body, &mut out)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(format!(
            "{} model trained on {} questions",
            c.classifier_model,
            data.len()
        ))
    }

    fn load_model(&self) -> Result<(Model, bool)> {
        let mut reader = self.open_artifact(Stage::ClassifyTrain)?;
        let mut rest = String::new();
        reader.read_to_string(&mut rest)?;
        Model::read(rest.as_bytes())
    }

    pub fn load_posts(&self, stage: Stage) -> Result<Vec<Post>> {
        read_jsonl(self.open_artifact(stage)?)
    }

    fn classify_filter(&self) -> Result<String> {
        let posts = self.load_posts(Stage::Ingest)?;
        let (model, include_body) = self.load_model()?;
        let before = posts.iter().filter(|p| p.is_question()).count();
        let kept = filter_howto(posts, &model, &self.pre, include_body);
        let after = kept.iter().filter(|p| p.is_question()).count();
        let mut out = self.create_artifact(Stage::ClassifyFilter)?;
        write_jsonl(&mut out, &kept)?;
        out.flush()?;
        Ok(format!("{after} of {before} questions classified how-to"))
    }

    fn tagged_titles(&self, posts: &[Post]) -> Result<Vec<TaggedTitle>> {
        let c = &self.config;
        if let Some(p) = &c.pretagged {
            let path = c.resolve(p);
            let file = File::open(&path).map_err(|e| input_error(&path, e))?;
            return Ok(load_pretagged(BufReader::new(file))?.0);
        }
        let tagger = match &c.pos_lexicon {
            Some(p) => PosTagger::with_overrides(&read_input(&c.resolve(p))?)?,
            None => PosTagger::default(),
        };
        let mut titles = Vec::new();
        for post in posts.iter().filter(|p| p.is_question()) {
            match tagger.tag_title(post.id, &post.title_tokens(&self.pre)) {
                Ok(t) => titles.push(t),
                Err(Error::EmptyTitle) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(titles)
    }

    fn discover(&self) -> Result<String> {
        let c = &self.config;
        let seeds_path = c
            .seeds
            .as_deref()
            .ok_or_else(|| Error::Config("no seed entity file configured".into()))?;
        let seeds = parse_seeds(&read_input(&c.resolve(seeds_path))?, &self.pre)?;
        let posts = self.load_posts(self.posts_stage())?;
        let titles = self.tagged_titles(&posts)?;
        let params = DiscoveryParams {
            mining: c.mining(),
            per_pattern_cap: c.per_pattern_cap,
            rounds: c.rounds,
        };
        let report = discover(&titles, &seeds, &params, &self.pre)?;
        let mut out = self.create_artifact(Stage::Discover)?;
        serde_json::to_writer(&mut out, &report)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(format!(
            "{} seeds, {} entities discovered from {} titles",
            seeds.len(),
            report.discovered().count(),
            titles.len()
        ))
    }

    pub fn load_discovery(&self) -> Result<DiscoveryReport> {
        let mut reader = self.open_artifact(Stage::Discover)?;
        let mut line = String::new();
        reader.read_line(&mut line)?;
        Ok(serde_json::from_str(&line)?)
    }

    fn profile(&self) -> Result<String> {
        let c = &self.config;
        let posts = self.load_posts(self.posts_stage())?;
        let report = self.load_discovery()?;
        let docs = documents_from_posts(&posts, &self.pre);
        let stats = CorpusStats::build(&docs, c.ngram_range())?;
        let params = ProfileParams {
            range: c.ngram_range(),
            top_k: c.top_k,
            min_entity_posts: c.min_entity_posts,
        };
        let (profiles, skipped) = build_profiles(&report.entities, &docs, &stats, &params)?;
        let mut out = self.create_artifact(Stage::Profile)?;
        write_profiles(&mut out, &profiles)?;
        out.flush()?;
        let mut summary = format!("{} profiles over {} threads", profiles.len(), stats.total_posts);
        if !skipped.is_empty() {
            summary.push_str(&format!("; no posts for {}", skipped.join(", ")));
        }
        Ok(summary)
    }

    pub fn load_profiles(&self) -> Result<Vec<EntityProfile>> {
        read_profiles(self.open_artifact(Stage::Profile)?)
    }

    fn annotate(&self) -> Result<String> {
        let c = &self.config;
        let sources = c
            .sources
            .as_deref()
            .ok_or_else(|| Error::Config("no source directory configured".into()))?;
        let src_dir = c.resolve(sources);
        let files = source_files(&src_dir, &c.extensions)?;
        let linker = Linker::new(&self.load_profiles()?, c.link_config())?;
        let out_dir = self.annotated_dir();
        let mut manifest = Vec::with_capacity(files.len());
        let mut total = 0;
        for rel in &files {
            let bytes = fs::read(src_dir.join(rel)).map_err(|e| Error::io(src_dir.join(rel), e))?;
            let source = String::from_utf8_lossy(&bytes);
            let annotated = annotate_file(&source, &linker);
            let target = out_dir.join(rel);
            let mut w = create_writer(&target)?;
            w.write_all(annotated.text.as_bytes())
                .map_err(|e| Error::io(&target, e))?;
            w.flush()?;
            let mut side = create_writer(&out_dir.join(format!("{rel}{SIDECAR_SUFFIX}")))?;
            write_sidecar(&mut side, &annotated.lines)?;
            side.flush()?;
            total += annotated.lines.len();
            manifest.push(ManifestEntry {
                path: rel.clone(),
                annotated_lines: annotated.lines.len(),
            });
        }
        let mut out = self.create_artifact(Stage::Annotate)?;
        write_jsonl(&mut out, &manifest)?;
        out.flush()?;
        Ok(format!("{total} lines annotated across {} files", files.len()))
    }

    fn index(&self) -> Result<String> {
        let manifest: Vec<ManifestEntry> = read_jsonl(self.open_artifact(Stage::Annotate)?)?;
        let dir = self.annotated_dir();
        let mut files = Vec::with_capacity(manifest.len());
        for entry in manifest {
            let path = dir.join(&entry.path);
            let bytes = fs::read(&path).map_err(|e| match e.kind() {
                std::io::ErrorKind::NotFound => Error::MissingArtifact(path.clone()),
                _ => Error::io(&path, e),
            })?;
            files.push((entry.path, String::from_utf8_lossy(&bytes).into_owned()));
        }
        let index = crate::index::build_index(&files, &self.pre)?;
        let mut out = self.create_artifact(Stage::Index)?;
        index.write(&mut out)?;
        out.flush()?;
        Ok(format!(
            "{} terms over {} files",
            index.dictionary.len(),
            index.doc_table.len()
        ))
    }

    pub fn load_index(&self) -> Result<IndexFile> {
        IndexFile::read(self.open_artifact(Stage::Index)?)
    }

    pub fn search(&self, words: &[&str], options: QueryOptions) -> Result<Vec<SearchLine>> {
        let index = self.load_index()?;
        let hits = query(&index, words, &self.pre, options)?;
        let dir = self.annotated_dir();
        let mut out = Vec::new();
        for hit in hits {
            let path = dir.join(&hit.path);
            let text = fs::read(&path).map_err(|e| Error::io(&path, e))?;
            let text = String::from_utf8_lossy(&text);
            let lines: Vec<&str> = text.lines().collect();
            for m in hit.lines {
                out.push(SearchLine {
                    path: path.clone(),
                    line: m.line,
                    text: lines
                        .get(m.line as usize - 1)
                        .map(|l| l.trim_end().to_string())
                        .unwrap_or_default(),
                    concept: m.concept,
                });
            }
        }
        Ok(out)
    }

    /// Writes and returns the precision@k table.
    pub fn eval(&self, k: usize) -> Result<String> {
        let c = &self.config;
        let gold_path = c
            .gold
            .as_deref()
            .ok_or_else(|| Error::Config("no gold judgment file configured".into()))?;
        let gold = GoldJudgments::parse(&read_input(&c.resolve(gold_path))?)?;
        let table = report(&self.load_profiles()?, &gold, k)?;
        let path = c.output_dir().join(EVAL_FILE);
        let mut out = create_writer(&path)?;
        out.write_all(table.as_bytes()).map_err(|e| Error::io(&path, e))?;
        out.flush()?;
        Ok(table)
    }

    /// Per-stage expected fingerprint and the one found on disk, in run order.
    pub fn status(&self) -> Vec<(Stage, String, Option<String>)> {
        self.stages()
            .into_iter()
            .map(|s| {
                let on_disk = File::open(self.artifact_path(s)).ok().and_then(|f| {
                    let mut line = String::new();
                    BufReader::new(f).read_line(&mut line).ok()?;
                    serde_json::from_str::<ArtifactHeader>(&line)
                        .ok()
                        .map(|h| h.fingerprint)
                });
                (s, self.fingerprint(s), on_disk)
            })
            .collect()
    }
}
