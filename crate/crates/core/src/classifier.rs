//! Four-way question classification and the How-to-do-it corpus filter.
//!
//! Two models are provided: a multinomial naive Bayes over title lemmas and a
//! one-vs-rest logistic regression trained by full-batch gradient descent.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Post, Preprocessor};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Debug,
    NeedToKnow,
    HowToDoIt,
    SeekingDifferentSolution,
}

impl Label {
    pub const ALL: [Label; 4] = [
        Label::Debug,
        Label::NeedToKnow,
        Label::HowToDoIt,
        Label::SeekingDifferentSolution,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Debug => "debug",
            Label::NeedToKnow => "need_to_know",
            Label::HowToDoIt => "how_to_do_it",
            Label::SeekingDifferentSolution => "seeking_different_solution",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::malformed("label", format!("unknown label `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledQuestion {
    pub text: String,
    pub label: Label,
}

/// The hand-labelled training set shipped with the crate (ten questions per class).
pub const BUNDLED_TRAINING: &str = include_str!("../data/questions.tsv");

/// Parses `label<TAB>text` lines. Blank lines and `#` comments are skipped.
pub fn parse_training(text: &str) -> Result<Vec<LabeledQuestion>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (label, body) = line
            .split_once('\t')
            .ok_or_else(|| Error::malformed("training data", format!("line {}: expected label<TAB>text", i + 1)))?;
        let label = label
            .trim()
            .parse()
            .map_err(|e| Error::malformed("training data", format!("line {}: {e}", i + 1)))?;
        out.push(LabeledQuestion {
            text: body.trim().to_string(),
            label,
        });
    }
    Ok(out)
}

/// Bag-of-words features: lemmas with stop words removed.
pub fn features(text: &str, pre: &Preprocessor) -> Vec<String> {
    pre.preprocess(text).content_lemmas().map(String::from).collect()
}

/// Text a question is classified by: the title, optionally followed by the body.
pub fn question_text(post: &Post, include_body: bool) -> String {
    match (&post.title, include_body) {
        (Some(t), true) => format!("{t} {}", post.body_text),
        (Some(t), false) => t.clone(),
        (None, _) => post.body_text.clone(),
    }
}

pub trait QuestionClassifier: Sync {
    fn predict_features(&self, features: &[String]) -> Label;

    fn predict(&self, text: &str, pre: &Preprocessor) -> Label {
        self.predict_features(&features(text, pre))
    }
}

fn vocabulary<'a>(docs: impl Iterator<Item = &'a [String]>) -> Vec<String> {
    let set: BTreeSet<&String> = docs.flatten().collect();
    set.into_iter().cloned().collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BayesModel {
    pub alpha: f64,
    pub log_priors: [f64; 4],
    /// `log P(w | c)` for every vocabulary word, indexed by class.
    pub log_likelihoods: BTreeMap<String, [f64; 4]>,
}

pub fn train_bayes(data: &[LabeledQuestion], alpha: f64, pre: &Preprocessor) -> Result<BayesModel> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidArgument(format!("alpha must be positive, got {alpha}")));
    }
    let docs: Vec<(Label, Vec<String>)> = data.iter().map(|q| (q.label, features(&q.text, pre))).collect();
    let mut class_docs = [0usize; 4];
    for (label, _) in &docs {
        class_docs[label.index()] += 1;
    }
    if let Some(missing) = Label::ALL.into_iter().find(|l| class_docs[l.index()] == 0) {
        return Err(Error::MissingClass(missing.to_string()));
    }

    let vocab = vocabulary(docs.iter().map(|(_, f)| f.as_slice()));
    let mut counts: HashMap<&str, [u64; 4]> = HashMap::new();
    let mut class_tokens = [0u64; 4];
    for (label, feats) in &docs {
        for w in feats {
            counts.entry(w.as_str()).or_default()[label.index()] += 1;
            class_tokens[label.index()] += 1;
        }
    }

    let total = docs.len() as f64;
    let v = vocab.len() as f64;
    let log_priors = class_docs.map(|n| (n as f64 / total).ln());
    let log_likelihoods = vocab
        .into_iter()
        .map(|w| {
            let c = counts[w.as_str()];
            let ll = std::array::from_fn(|k| ((c[k] as f64 + alpha) / (class_tokens[k] as f64 + alpha * v)).ln());
            (w, ll)
        })
        .collect();
    Ok(BayesModel {
        alpha,
        log_priors,
        log_likelihoods,
    })
}

impl BayesModel {
    /// Unnormalized log joint `log P(c) + Σ log P(w | c)`. Words outside the
    /// vocabulary are ignored.
    pub fn log_scores(&self, features: &[String]) -> [f64; 4] {
        let mut scores = self.log_priors;
        for w in features {
            if let Some(ll) = self.log_likelihoods.get(w) {
                for k in 0..4 {
                    scores[k] += ll[k];
                }
            }
        }
        scores
    }

    pub fn posteriors(&self, features: &[String]) -> [f64; 4] {
        softmax(self.log_scores(features))
    }
}

fn softmax(scores: [f64; 4]) -> [f64; 4] {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let exp = scores.map(|s| (s - max).exp());
    let z: f64 = exp.iter().sum();
    exp.map(|e| e / z)
}

fn argmax(scores: &[f64], labels: &[Label]) -> Label {
    let mut best = 0;
    for i in 1..scores.len() {
        if scores[i] > scores[best] {
            best = i;
        }
    }
    labels[best]
}

impl QuestionClassifier for BayesModel {
    fn predict_features(&self, features: &[String]) -> Label {
        argmax(&self.log_scores(features), &Label::ALL)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogisticParams {
    pub learning_rate: f64,
    pub epochs: usize,
    pub l2: f64,
    pub seed: u64,
}

impl Default for LogisticParams {
    fn default() -> Self {
        LogisticParams {
            learning_rate: 0.5,
            epochs: 200,
            l2: 1e-3,
            seed: 17,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinaryLogistic {
    pub weights: Vec<f64>,
    pub bias: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticModel {
    pub params: LogisticParams,
    pub vocabulary: Vec<String>,
    pub classes: Vec<Label>,
    /// One binary model per entry of `classes`.
    pub models: Vec<BinaryLogistic>,
    #[serde(skip)]
    lookup: HashMap<String, usize>,
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `ln(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

/// Mean binary cross-entropy plus `l2/2 · |w|²` for dense feature rows `x`
/// and targets `y ∈ {0, 1}`. Returns the loss, `∂L/∂w` and `∂L/∂b`.
pub fn binary_loss_and_gradient(x: &[Vec<f64>], y: &[f64], model: &BinaryLogistic, l2: f64) -> (f64, Vec<f64>, f64) {
    let n = x.len().max(1) as f64;
    let mut loss = 0.0;
    let mut grad_w = vec![0.0; model.weights.len()];
    let mut grad_b = 0.0;
    for (row, &target) in x.iter().zip(y) {
        let z = model.bias + row.iter().zip(&model.weights).map(|(a, w)| a * w).sum::<f64>();
        // -[y ln σ(z) + (1-y) ln(1-σ(z))] = softplus(z) - y z
        loss += softplus(z) - target * z;
        let err = sigmoid(z) - target;
        for (g, a) in grad_w.iter_mut().zip(row) {
            *g += err * a;
        }
        grad_b += err;
    }
    loss /= n;
    grad_b /= n;
    for (g, w) in grad_w.iter_mut().zip(&model.weights) {
        *g = *g / n + l2 * w;
    }
    loss += 0.5 * l2 * model.weights.iter().map(|w| w * w).sum::<f64>();
    (loss, grad_w, grad_b)
}

/// Full-batch gradient descent on one binary problem.
pub fn train_binary(
    x: &[Vec<f64>],
    y: &[f64],
    dims: usize,
    params: &LogisticParams,
    rng: &mut ChaCha8Rng,
) -> Result<BinaryLogistic> {
    let mut model = BinaryLogistic {
        weights: (0..dims).map(|_| rng.random_range(-0.01..0.01)).collect(),
        bias: 0.0,
    };
    for epoch in 0..params.epochs {
        let (loss, gw, gb) = binary_loss_and_gradient(x, y, &model, params.l2);
        if !loss.is_finite() {
            return Err(Error::Diverged { epoch, loss });
        }
        for (w, g) in model.weights.iter_mut().zip(&gw) {
            *w -= params.learning_rate * g;
        }
        model.bias -= params.learning_rate * gb;
    }
    if model.weights.iter().any(|w| !w.is_finite()) || !model.bias.is_finite() {
        return Err(Error::Diverged {
            epoch: params.epochs,
            loss: f64::NAN,
        });
    }
    Ok(model)
}

pub fn train_logistic(data: &[LabeledQuestion], params: LogisticParams, pre: &Preprocessor) -> Result<LogisticModel> {
    if !(params.learning_rate > 0.0 && params.learning_rate.is_finite()) || params.l2 < 0.0 {
        return Err(Error::InvalidArgument(
            "learning rate must be positive and l2 non-negative".into(),
        ));
    }
    let docs: Vec<(Label, Vec<String>)> = data.iter().map(|q| (q.label, features(&q.text, pre))).collect();
    let classes: Vec<Label> = docs
        .iter()
        .map(|(l, _)| *l)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if classes.len() < 2 {
        return Err(Error::TooFewClasses(classes.len()));
    }
    let vocabulary = vocabulary(docs.iter().map(|(_, f)| f.as_slice()));
    let lookup: HashMap<String, usize> = vocabulary.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let x: Vec<Vec<f64>> = docs.iter().map(|(_, f)| dense(f, &lookup, vocabulary.len())).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut models = Vec::with_capacity(classes.len());
    for &class in &classes {
        let y: Vec<f64> = docs.iter().map(|(l, _)| if *l == class { 1.0 } else { 0.0 }).collect();
        models.push(train_binary(&x, &y, vocabulary.len(), &params, &mut rng)?);
    }
    Ok(LogisticModel {
        params,
        vocabulary,
        classes,
        models,
        lookup,
    })
}

fn dense(features: &[String], lookup: &HashMap<String, usize>, dims: usize) -> Vec<f64> {
    let mut row = vec![0.0; dims];
    for f in features {
        if let Some(&i) = lookup.get(f) {
            row[i] += 1.0;
        }
    }
    row
}

impl LogisticModel {
    fn rebuild_lookup(&mut self) {
        self.lookup = self
            .vocabulary
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
    }

    /// One-vs-rest probabilities, in the order of `classes`.
    pub fn scores(&self, features: &[String]) -> Vec<f64> {
        let mut sparse: BTreeMap<usize, f64> = BTreeMap::new();
        for f in features {
            if let Some(&i) = self.lookup.get(f) {
                *sparse.entry(i).or_default() += 1.0;
            }
        }
        self.models
            .iter()
            .map(|m| sigmoid(m.bias + sparse.iter().map(|(&i, v)| m.weights[i] * v).sum::<f64>()))
            .collect()
    }
}

impl QuestionClassifier for LogisticModel {
    fn predict_features(&self, features: &[String]) -> Label {
        argmax(&self.scores(features), &self.classes)
    }
}

/// Keeps the questions predicted How-to-do-it together with their answers,
/// in input order.
pub fn filter_howto(
    posts: Vec<Post>,
    model: &dyn QuestionClassifier,
    pre: &Preprocessor,
    include_body: bool,
) -> Vec<Post> {
    let keep: Vec<bool> = posts
        .par_iter()
        .map(|p| p.is_question() && model.predict(&question_text(p, include_body), pre) == Label::HowToDoIt)
        .collect();
    let kept_questions: BTreeSet<u64> = posts
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(p, _)| p.id)
        .collect();
    posts
        .into_iter()
        .zip(keep)
        .filter(|(p, k)| *k || p.parent_id.is_some_and(|parent| kept_questions.contains(&parent)))
        .map(|(p, _)| p)
        .collect()
}

pub const MODEL_FORMAT: &str = "conceptmap-classifier";
pub const MODEL_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Model {
    Bayes(BayesModel),
    Logistic(LogisticModel),
}

impl QuestionClassifier for Model {
    fn predict_features(&self, features: &[String]) -> Label {
        match self {
            Model::Bayes(m) => m.predict_features(features),
            Model::Logistic(m) => m.predict_features(features),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: String,
    version: u32,
    include_body: bool,
    model: Model,
}

impl Model {
    pub fn write<W: Write>(&self, include_body: bool, out: W) -> Result<()> {
        let file = ModelFile {
            format: MODEL_FORMAT.into(),
            version: MODEL_VERSION,
            include_body,
            model: self.clone(),
        };
        serde_json::to_writer_pretty(out, &file)?;
        Ok(())
    }

    /// Returns the model and whether it was trained with body text.
    pub fn read<R: Read>(source: R) -> Result<(Model, bool)> {
        let file: ModelFile = serde_json::from_reader(source)?;
        if file.format != MODEL_FORMAT || file.version != MODEL_VERSION {
            return Err(Error::malformed(
                "classifier model",
                format!("unsupported format {} v{}", file.format, file.version),
            ));
        }
        let mut model = file.model;
        if let Model::Logistic(m) = &mut model {
            if m.models.len() != m.classes.len() || m.models.iter().any(|b| b.weights.len() != m.vocabulary.len()) {
                return Err(Error::malformed(
                    "classifier model",
                    "weight shapes do not match vocabulary",
                ));
            }
            m.rebuild_lookup();
        }
        Ok((model, file.include_body))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::PostType;
    use proptest::prelude::*;

    fn pre() -> Preprocessor {
        Preprocessor::default()
    }

    fn bundled() -> Vec<LabeledQuestion> {
        parse_training(BUNDLED_TRAINING).unwrap()
    }

    fn q(label: Label, text: &str) -> LabeledQuestion {
        LabeledQuestion {
            text: text.into(),
            label,
        }
    }

    #[test]
    fn bundled_set_is_balanced() {
        let data = bundled();
        assert_eq!(data.len(), 40);
        for l in Label::ALL {
            assert_eq!(data.iter().filter(|q| q.label == l).count(), 10);
        }
    }

    #[test]
    fn malformed_training_lines() {
        assert!(parse_training("debug no tab here").is_err());
        assert!(parse_training("bogus\ttext").is_err());
        assert_eq!(parse_training("# c\n\ndebug\tx\n").unwrap().len(), 1);
    }

    #[test]
    fn likelihoods_sum_to_one() {
        let m = train_bayes(&bundled(), 1.0, &pre()).unwrap();
        for k in 0..4 {
            let s: f64 = m.log_likelihoods.values().map(|ll| ll[k].exp()).sum();
            assert!((s - 1.0).abs() < 1e-9, "class {k}: {s}");
        }
    }

    #[test]
    fn bayes_requires_every_class() {
        let data = vec![q(Label::Debug, "crash"), q(Label::HowToDoIt, "sort")];
        assert!(matches!(train_bayes(&data, 1.0, &pre()), Err(Error::MissingClass(_))));
        assert!(train_bayes(&bundled(), 0.0, &pre()).is_err());
    }

    #[test]
    fn empty_document_follows_priors() {
        let mut data = bundled();
        data.push(q(Label::NeedToKnow, "explain closures"));
        let m = train_bayes(&data, 1.0, &pre()).unwrap();
        assert_eq!(m.predict_features(&[]), Label::NeedToKnow);
    }

    #[test]
    fn large_alpha_approaches_priors() {
        let data = vec![
            q(Label::Debug, "crash crash"),
            q(Label::Debug, "crash"),
            q(Label::NeedToKnow, "explain"),
            q(Label::HowToDoIt, "implement"),
            q(Label::SeekingDifferentSolution, "suggest"),
        ];
        let doc = vec!["implement".to_string(); 3];
        let mut gaps = Vec::new();
        for alpha in [1.0, 10.0, 1000.0] {
            let m = train_bayes(&data, alpha, &pre()).unwrap();
            let post = m.posteriors(&doc);
            let priors = m.log_priors.map(f64::exp);
            gaps.push((0..4).map(|k| (post[k] - priors[k]).abs()).fold(0.0, f64::max));
        }
        assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
        assert!(gaps[2] < 1e-2);
    }

    #[test]
    fn unseen_words_keep_posteriors_finite() {
        let m = train_bayes(&bundled(), 1.0, &pre()).unwrap();
        let p = m.posteriors(&features("completely novel vocabulary xyzzy", &pre()));
        assert!(p.iter().all(|v| v.is_finite() && *v > 0.0));
    }

    #[test]
    fn duplicated_training_data_keeps_predictions() {
        let data = bundled();
        let doubled: Vec<_> = data.iter().chain(&data).cloned().collect();
        let a = train_bayes(&data, 1.0, &pre()).unwrap();
        let b = train_bayes(&doubled, 1.0, &pre()).unwrap();
        for q in &data {
            assert_eq!(a.predict(&q.text, &pre()), b.predict(&q.text, &pre()), "{}", q.text);
        }
    }

    #[test]
    fn logistic_separates_toy_set() {
        let data = vec![
            q(Label::Debug, "crash exception"),
            q(Label::Debug, "exception thrown"),
            q(Label::Debug, "crash error"),
            q(Label::HowToDoIt, "sort array"),
            q(Label::HowToDoIt, "implement list"),
            q(Label::HowToDoIt, "sort list"),
        ];
        let m = train_logistic(&data, LogisticParams::default(), &pre()).unwrap();
        for item in &data {
            assert_eq!(m.predict(&item.text, &pre()), item.label);
        }
    }

    #[test]
    fn logistic_rejects_single_class() {
        let data = vec![q(Label::Debug, "a crash"), q(Label::Debug, "an error")];
        assert!(matches!(
            train_logistic(&data, LogisticParams::default(), &pre()),
            Err(Error::TooFewClasses(1))
        ));
    }

    #[test]
    fn huge_learning_rate_diverges() {
        let x = vec![vec![1e200, -1e200]; 2];
        let y = vec![1.0, 0.0];
        let params = LogisticParams {
            learning_rate: 1e200,
            ..LogisticParams::default()
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            train_binary(&x, &y, 2, &params, &mut rng),
            Err(Error::Diverged { .. })
        ));
    }

    #[test]
    fn howto_title_kept_by_both_models() {
        let data = bundled();
        let bayes = Model::Bayes(train_bayes(&data, 1.0, &pre()).unwrap());
        let logistic = Model::Logistic(train_logistic(&data, LogisticParams::default(), &pre()).unwrap());
        for model in [&bayes, &logistic] {
            assert_eq!(model.predict("How to sort an array in Java", &pre()), Label::HowToDoIt);
        }
    }

    fn post(id: u64, parent: Option<u64>, title: Option<&str>) -> Post {
        Post {
            id,
            post_type: if parent.is_some() {
                PostType::Answer
            } else {
                PostType::Question
            },
            parent_id: parent,
            title: title.map(String::from),
            body_text: String::new(),
            tags: Default::default(),
            snippets: vec![],
        }
    }

    #[test]
    fn filter_keeps_howto_threads_in_order() {
        let model = train_bayes(&bundled(), 1.0, &pre()).unwrap();
        let posts = vec![
            post(1, None, Some("How to sort an array in Java")),
            post(2, None, Some("Why does my loop throw a NullPointerException")),
            post(3, Some(2), None),
            post(4, Some(1), None),
        ];
        let kept: Vec<u64> = filter_howto(posts, &model, &pre(), false)
            .iter()
            .map(|p| p.id)
            .collect();
        assert_eq!(kept, [1, 4]);
        assert!(filter_howto(vec![], &model, &pre(), false).is_empty());
    }

    #[test]
    fn model_files_round_trip() {
        let data = bundled();
        for model in [
            Model::Bayes(train_bayes(&data, 1.0, &pre()).unwrap()),
            Model::Logistic(train_logistic(&data, LogisticParams::default(), &pre()).unwrap()),
        ] {
            let mut buf = Vec::new();
            model.write(true, &mut buf).unwrap();
            let (back, body) = Model::read(&buf[..]).unwrap();
            assert!(body);
            assert_eq!(back, model);
            for q in &data {
                assert_eq!(back.predict(&q.text, &pre()), model.predict(&q.text, &pre()));
            }
        }
    }

    #[test]
    fn logistic_is_deterministic() {
        let data = bundled();
        let a = train_logistic(&data, LogisticParams::default(), &pre()).unwrap();
        let b = train_logistic(&data, LogisticParams::default(), &pre()).unwrap();
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn gradient_matches_finite_differences(
            rows in prop::collection::vec(prop::collection::vec(0.0f64..3.0, 3), 1..6),
            w in prop::collection::vec(-1.0f64..1.0, 3),
            b in -1.0f64..1.0,
        ) {
            let y: Vec<f64> = (0..rows.len()).map(|i| (i % 2) as f64).collect();
            let model = BinaryLogistic { weights: w, bias: b };
            let (_, gw, gb) = binary_loss_and_gradient(&rows, &y, &model, 0.1);
            let h = 1e-6;
            for (i, analytic) in gw.iter().enumerate() {
                let mut plus = model.clone();
                plus.weights[i] += h;
                let mut minus = model.clone();
                minus.weights[i] -= h;
                let fd = (binary_loss_and_gradient(&rows, &y, &plus, 0.1).0 - binary_loss_and_gradient(&rows, &y, &minus, 0.1).0) / (2.0 * h);
                prop_assert!((fd - analytic).abs() < 1e-5);
            }
            let plus = BinaryLogistic { bias: b + h, ..model.clone() };
            let minus = BinaryLogistic { bias: b - h, ..model.clone() };
            let fd = (binary_loss_and_gradient(&rows, &y, &plus, 0.1).0 - binary_loss_and_gradient(&rows, &y, &minus, 0.1).0) / (2.0 * h);
            prop_assert!((fd - gb).abs() < 1e-5);
        }
    }
}
