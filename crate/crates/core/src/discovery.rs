//! Seed-entity expansion from part-of-speech contexts in question titles.
//!
//! For each known entity, the tag window around its first mention in a title
//! is a pattern occurrence. Patterns frequent enough on the training split and
//! seen again on the held-out split are then matched against every title; the
//! words sitting in the entity slot become new entities.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Preprocessor;
use crate::error::{Error, Result};
use crate::pos::{PosTag, TaggedTitle};

/// Titles below this count cannot support a pattern estimate.
pub const MIN_TITLES_PER_SEED: usize = 5;

const SPLIT_MULTIPLIER: u64 = 2_654_435_761;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntityOrigin {
    Seed,
    Discovered { round: u32, via_pattern: PatternShape },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entity {
    pub name: String,
    pub origin: EntityOrigin,
}

impl Entity {
    pub fn seed(name: impl Into<String>) -> Self {
        Entity {
            name: name.into(),
            origin: EntityOrigin::Seed,
        }
    }
}

/// Tag context of an entity slot: tags before and after it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternShape {
    pub before: Vec<PosTag>,
    pub after: Vec<PosTag>,
}

impl PatternShape {
    /// Tag symbols with `ENTITY` at the slot; also the lexicographic sort key.
    pub fn symbols(&self) -> Vec<&'static str> {
        self.before
            .iter()
            .map(|t| t.as_str())
            .chain(std::iter::once("ENTITY"))
            .chain(self.after.iter().map(|t| t.as_str()))
            .collect()
    }
}

impl fmt::Display for PatternShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols().join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosPattern {
    #[serde(flatten)]
    pub shape: PatternShape,
    pub support_count: usize,
    pub normalized_support: f64,
    pub validated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub before: usize,
    pub after: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { before: 3, after: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MiningParams {
    pub split_ratio: f64,
    pub min_support: f64,
    pub window: Window,
}

impl Default for MiningParams {
    fn default() -> Self {
        MiningParams {
            split_ratio: 0.8,
            min_support: 0.1,
            window: Window::default(),
        }
    }
}

impl MiningParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.split_ratio > 0.0 && self.split_ratio < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "split ratio {} not in (0, 1)",
                self.split_ratio
            )));
        }
        if !(0.0..=1.0).contains(&self.min_support) {
            return Err(Error::InvalidArgument(format!(
                "min support {} not in [0, 1]",
                self.min_support
            )));
        }
        if self.window.before + self.window.after == 0 {
            return Err(Error::InvalidArgument("context window is empty".into()));
        }
        Ok(())
    }
}

/// Deterministic 80/20-style split keyed on post id.
pub fn is_train(post_id: u64, split_ratio: f64) -> bool {
    let bucket = (post_id.wrapping_mul(SPLIT_MULTIPLIER) & 0xFFFF_FFFF) % 100;
    bucket < (100.0 * split_ratio).round() as u64
}

/// Tag context around position `i`, clipped at title boundaries. `None` when
/// both sides are empty.
pub fn context_at(title: &TaggedTitle, i: usize, window: Window) -> Option<PatternShape> {
    let start = i.saturating_sub(window.before);
    let end = (i + 1 + window.after).min(title.tokens.len());
    let before: Vec<PosTag> = title.tokens[start..i].iter().map(|t| t.tag).collect();
    let after: Vec<PosTag> = title.tokens[i + 1..end].iter().map(|t| t.tag).collect();
    if before.is_empty() && after.is_empty() {
        None
    } else {
        Some(PatternShape { before, after })
    }
}

/// Pattern around the first token whose lemma is `entity`.
pub fn extract_pattern(title: &TaggedTitle, entity: &str, window: Window) -> Option<PatternShape> {
    let i = title.tokens.iter().position(|t| t.lemma == entity)?;
    context_at(title, i, window)
}

fn pattern_order(a: &PosPattern, b: &PosPattern) -> std::cmp::Ordering {
    b.support_count
        .cmp(&a.support_count)
        .then_with(|| a.shape.symbols().cmp(&b.shape.symbols()))
}

/// Mines the patterns around `entity` in `titles` (titles lacking the entity
/// are ignored). Sorted by support count, then tag sequence.
pub fn mine_patterns(titles: &[TaggedTitle], entity: &str, params: &MiningParams) -> Result<Vec<PosPattern>> {
    params.validate()?;
    let relevant: Vec<&TaggedTitle> = titles
        .iter()
        .filter(|t| t.tokens.iter().any(|tok| tok.lemma == entity))
        .collect();
    let (train, held_out): (Vec<&TaggedTitle>, Vec<&TaggedTitle>) =
        relevant.iter().partition(|t| is_train(t.post_id, params.split_ratio));
    if relevant.len() < MIN_TITLES_PER_SEED || train.is_empty() {
        return Err(Error::InsufficientEvidence {
            entity: entity.to_string(),
            titles: relevant.len(),
            needed: MIN_TITLES_PER_SEED,
        });
    }

    let mut counts: HashMap<PatternShape, usize> = HashMap::new();
    for title in &train {
        if let Some(shape) = extract_pattern(title, entity, params.window) {
            *counts.entry(shape).or_default() += 1;
        }
    }
    let held_out: HashSet<PatternShape> = held_out
        .iter()
        .filter_map(|t| extract_pattern(t, entity, params.window))
        .collect();

    let train_len = train.len() as f64;
    let mut patterns: Vec<PosPattern> = counts
        .into_iter()
        .filter(|&(_, count)| meets_support(count, train.len(), params.min_support))
        .map(|(shape, count)| PosPattern {
            validated: held_out.contains(&shape),
            shape,
            support_count: count,
            normalized_support: count as f64 / train_len,
        })
        .collect();
    patterns.sort_by(pattern_order);
    Ok(patterns)
}

/// `count / total >= min_support`, tolerant of float noise in the product.
pub fn meets_support(count: usize, total: usize, min_support: f64) -> bool {
    count as f64 + 1e-9 >= min_support * total as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub lemma: String,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternHarvest {
    pub round: u32,
    pub pattern: PosPattern,
    pub candidates: Vec<Candidate>,
    pub accepted: Vec<String>,
}

/// Slot fillers for every pattern shape occurring anywhere in `titles`.
pub struct SlotIndex {
    fillers: HashMap<PatternShape, HashMap<String, usize>>,
}

impl SlotIndex {
    pub fn build(titles: &[TaggedTitle], window: Window) -> Self {
        let mut fillers: HashMap<PatternShape, HashMap<String, usize>> = HashMap::new();
        for title in titles {
            for (i, token) in title.tokens.iter().enumerate() {
                if let Some(shape) = context_at(title, i, window) {
                    *fillers
                        .entry(shape)
                        .or_default()
                        .entry(token.lemma.clone())
                        .or_default() += 1;
                }
            }
        }
        SlotIndex { fillers }
    }

    /// Candidates for a shape, most frequent first, ties by lemma.
    pub fn candidates(&self, shape: &PatternShape) -> Vec<Candidate> {
        let mut out: Vec<Candidate> = self
            .fillers
            .get(shape)
            .into_iter()
            .flatten()
            .map(|(lemma, &count)| Candidate {
                lemma: lemma.clone(),
                count,
            })
            .collect();
        out.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.lemma.cmp(&b.lemma)));
        out
    }
}

pub fn is_acceptable_name(lemma: &str, pre: &Preprocessor) -> bool {
    lemma.chars().count() >= 2 && lemma.chars().all(char::is_alphabetic) && !pre.is_stopword(lemma)
}

/// Walks `patterns` in order, accepting up to `cap` new names per validated
/// pattern. Names accepted by one pattern are known to the next.
pub fn harvest_entities(
    patterns: &[PosPattern],
    slots: &SlotIndex,
    known: &mut BTreeSet<String>,
    cap: usize,
    round: u32,
    pre: &Preprocessor,
) -> Vec<PatternHarvest> {
    let mut out = Vec::new();
    for pattern in patterns.iter().filter(|p| p.validated) {
        let candidates = slots.candidates(&pattern.shape);
        let accepted: Vec<String> = candidates
            .iter()
            .filter(|c| !known.contains(&c.lemma) && is_acceptable_name(&c.lemma, pre))
            .take(cap)
            .map(|c| c.lemma.clone())
            .collect();
        known.extend(accepted.iter().cloned());
        out.push(PatternHarvest {
            round,
            pattern: pattern.clone(),
            candidates,
            accepted,
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedReport {
    pub round: u32,
    pub entity: String,
    pub titles: usize,
    pub patterns: Vec<PosPattern>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DiscoveryReport {
    pub seeds: Vec<SeedReport>,
    pub harvests: Vec<PatternHarvest>,
    pub entities: Vec<Entity>,
}

impl DiscoveryReport {
    pub fn discovered(&self) -> impl Iterator<Item = &Entity> {
        self.entities.iter().filter(|e| e.origin != EntityOrigin::Seed)
    }

    pub fn entity_names(&self) -> Vec<String> {
        self.entities.iter().map(|e| e.name.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscoveryParams {
    pub mining: MiningParams,
    pub per_pattern_cap: usize,
    pub rounds: u32,
}

impl Default for DiscoveryParams {
    fn default() -> Self {
        DiscoveryParams {
            mining: MiningParams::default(),
            per_pattern_cap: 5,
            rounds: 1,
        }
    }
}

/// Full discovery run. Round 1 mines around the seeds; each later round mines
/// around the names discovered in the round before it.
pub fn discover(
    titles: &[TaggedTitle],
    seeds: &[String],
    params: &DiscoveryParams,
    pre: &Preprocessor,
) -> Result<DiscoveryReport> {
    params.mining.validate()?;
    let slots = SlotIndex::build(titles, params.mining.window);
    let mut report = DiscoveryReport::default();
    let mut known: BTreeSet<String> = BTreeSet::new();
    for seed in seeds {
        if known.insert(seed.clone()) {
            report.entities.push(Entity::seed(seed.clone()));
        }
    }
    let mut frontier: Vec<String> = report.entity_names();

    for round in 1..=params.rounds {
        if frontier.is_empty() {
            break;
        }
        let mined: Vec<SeedReport> = frontier
            .par_iter()
            .map(|entity| {
                let count = titles
                    .iter()
                    .filter(|t| t.tokens.iter().any(|tok| &tok.lemma == entity))
                    .count();
                match mine_patterns(titles, entity, &params.mining) {
                    Ok(patterns) => SeedReport {
                        round,
                        entity: entity.clone(),
                        titles: count,
                        patterns,
                        skipped: None,
                    },
                    Err(e) => SeedReport {
                        round,
                        entity: entity.clone(),
                        titles: count,
                        patterns: vec![],
                        skipped: Some(e.to_string()),
                    },
                }
            })
            .collect();

        let mut merged: Vec<PosPattern> = mined
            .iter()
            .flat_map(|s| s.patterns.iter().filter(|p| p.validated).cloned())
            .collect();
        merged.sort_by(pattern_order);
        let mut seen = HashSet::new();
        merged.retain(|p| seen.insert(p.shape.clone()));

        let harvests = harvest_entities(&merged, &slots, &mut known, params.per_pattern_cap, round, pre);
        frontier.clear();
        for h in &harvests {
            for name in &h.accepted {
                report.entities.push(Entity {
                    name: name.clone(),
                    origin: EntityOrigin::Discovered {
                        round,
                        via_pattern: h.pattern.shape.clone(),
                    },
                });
                frontier.push(name.clone());
            }
        }
        report.seeds.extend(mined);
        report.harvests.extend(harvests);
    }
    Ok(report)
}

/// Seed file: one name per line, `#` comments. Names are lemmatized so they
/// line up with title lemmas.
pub fn parse_seeds(text: &str, pre: &Preprocessor) -> Result<Vec<String>> {
    let mut seeds = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.contains(char::is_whitespace) {
            return Err(Error::malformed(
                "seed file",
                format!("line {}: `{line}` has whitespace", no + 1),
            ));
        }
        let lemma = pre.lemma(line);
        if !seeds.contains(&lemma) {
            seeds.push(lemma);
        }
    }
    Ok(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::preprocess;
    use crate::pos::PosTagger;
    use proptest::prelude::*;
    use PosTag::*;

    fn tagged(id: u64, text: &str) -> TaggedTitle {
        PosTagger::default().tag_title(id, &preprocess(text)).unwrap()
    }

    const W32: Window = Window { before: 3, after: 2 };

    #[test]
    fn array_example() {
        let t = tagged(1, "How to determine type of object in an array of objects");
        let shape = extract_pattern(&t, "array", W32).unwrap();
        assert_eq!(shape.before, [Nn, In, Dt]);
        assert_eq!(shape.after, [In, Nns]);
        assert_eq!(shape.to_string(), "NN IN DT ENTITY IN NNS");
    }

    #[test]
    fn string_example_has_same_shape() {
        let t = tagged(2, "Get an array of int from a string of numbers");
        let shape = extract_pattern(&t, "string", W32).unwrap();
        assert_eq!(shape.before, [Nn, In, Dt]);
        assert_eq!(shape.after, [In, Nns]);
    }

    #[test]
    fn missing_entity() {
        assert!(extract_pattern(&tagged(3, "sort a list"), "array", W32).is_none());
    }

    #[test]
    fn context_clipped_at_edges() {
        let t = tagged(4, "array of objects");
        let shape = context_at(&t, 0, W32).unwrap();
        assert!(shape.before.is_empty());
        assert_eq!(shape.after, [In, Nns]);
        assert!(context_at(&tagged(5, "array"), 0, W32).is_none());
    }

    fn ids_by_split(train: bool, n: usize) -> Vec<u64> {
        (1..).filter(|&id| is_train(id, 0.8) == train).take(n).collect()
    }

    #[test]
    fn support_counts_and_threshold() {
        // 10 train titles: 3 with the "NN IN DT _ IN NNS" shape, 7 with a
        // shape occurring once each (0.1, kept) except where it repeats.
        let train = ids_by_split(true, 10);
        let held = ids_by_split(false, 2);
        let mut titles = Vec::new();
        for &id in &train[..3] {
            titles.push(tagged(id, "type of object in an array of objects"));
        }
        let singles = [
            "sort the array quickly",
            "print array",
            "array length",
            "copy one array",
            "big array values",
            "the array is empty",
            "reverse array order",
        ];
        for (&id, text) in train[3..].iter().zip(singles) {
            titles.push(tagged(id, text));
        }
        titles.push(tagged(held[0], "type of object in an array of objects"));
        titles.push(tagged(held[1], "resize array"));

        let patterns = mine_patterns(&titles, "array", &MiningParams::default()).unwrap();
        let top = &patterns[0];
        assert_eq!(top.shape.to_string(), "NN IN DT ENTITY IN NNS");
        assert_eq!(top.support_count, 3);
        assert!((top.normalized_support - 0.3).abs() < 1e-12);
        assert!(top.validated);
        assert!(patterns[1..].iter().all(|p| p.support_count == 1 && !p.validated));

        let strict = MiningParams {
            min_support: 0.15,
            ..MiningParams::default()
        };
        let kept = mine_patterns(&titles, "array", &strict).unwrap();
        assert_eq!(kept.len(), 1);
    }

    #[test]
    fn low_support_dropped() {
        // 20 train titles, one shape occurring once: 0.05 < 0.1
        let train = ids_by_split(true, 20);
        let mut titles: Vec<TaggedTitle> = train[..19].iter().map(|&id| tagged(id, "sort the array")).collect();
        titles.push(tagged(train[19], "type of object in an array of objects"));
        let patterns = mine_patterns(&titles, "array", &MiningParams::default()).unwrap();
        assert_eq!(patterns.len(), 1);
        assert_eq!(patterns[0].shape.to_string(), "VB DT ENTITY");
    }

    #[test]
    fn train_only_pattern_is_not_validated() {
        // 12 titles: the "IN DT _" shape appears in train only
        let train = ids_by_split(true, 10);
        let held = ids_by_split(false, 2);
        let mut titles = Vec::new();
        for &id in &train[..6] {
            titles.push(tagged(id, "values in an array"));
        }
        for &id in &train[6..] {
            titles.push(tagged(id, "sort the array"));
        }
        for &id in &held {
            titles.push(tagged(id, "sort the array"));
        }
        let patterns = mine_patterns(&titles, "array", &MiningParams::default()).unwrap();
        let by_shape: HashMap<String, bool> = patterns.iter().map(|p| (p.shape.to_string(), p.validated)).collect();
        assert!(!by_shape["NNS IN DT ENTITY"]);
        assert!(by_shape["VB DT ENTITY"]);

        let slots = SlotIndex::build(&titles, W32);
        let mut known = BTreeSet::from(["array".to_string()]);
        let harvest = harvest_entities(&patterns, &slots, &mut known, 5, 1, &Preprocessor::default());
        assert_eq!(harvest.len(), 1, "unvalidated patterns are not harvested");
    }

    #[test]
    fn too_few_titles() {
        let titles: Vec<TaggedTitle> = (1..=4).map(|id| tagged(id, "sort the array")).collect();
        assert!(matches!(
            mine_patterns(&titles, "array", &MiningParams::default()),
            Err(Error::InsufficientEvidence { titles: 4, .. })
        ));
    }

    #[test]
    fn harvest_caps_and_skips_known() {
        // 7 distinct fillers with counts 7..1 behind "VB DT _"
        let words = ["list", "map", "queue", "stack", "tree", "graph", "heap"];
        let mut titles = Vec::new();
        let mut id = 1;
        for (i, w) in words.iter().enumerate() {
            for _ in 0..(7 - i) {
                titles.push(tagged(id, &format!("sort the {w}")));
                id += 1;
            }
        }
        let pattern = PosPattern {
            shape: PatternShape {
                before: vec![Vb, Dt],
                after: vec![],
            },
            support_count: 9,
            normalized_support: 1.0,
            validated: true,
        };
        let slots = SlotIndex::build(&titles, W32);
        let mut known = BTreeSet::from(["map".to_string()]);
        let h = harvest_entities(&[pattern], &slots, &mut known, 5, 1, &Preprocessor::default());
        assert_eq!(h[0].accepted, ["list", "queue", "stack", "tree", "graph"]);
        assert_eq!(h[0].candidates.len(), 7);
        assert!(known.contains("graph"));
    }

    #[test]
    fn split_is_a_pure_function_of_id() {
        let train = (1..=10_000).filter(|&id| is_train(id, 0.8)).count();
        assert!((7_700..=8_300).contains(&train), "{train}");
        assert_eq!(is_train(12345, 0.8), is_train(12345, 0.8));
    }

    #[test]
    fn seeds_are_lemmatized() {
        let seeds = parse_seeds("# concepts\narrays\nloop\n\nloops\n", &Preprocessor::default()).unwrap();
        assert_eq!(seeds, ["array", "loop"]);
        assert!(parse_seeds("two words\n", &Preprocessor::default()).is_err());
    }

    fn arb_titles() -> impl Strategy<Value = Vec<TaggedTitle>> {
        let words = prop::sample::select(vec![
            "array", "the", "of", "in", "an", "objects", "sort", "value", "list", "big", "running",
        ]);
        prop::collection::vec(prop::collection::vec(words, 1..7), 5..40).prop_map(|rows| {
            rows.into_iter()
                .enumerate()
                .map(|(i, mut words)| {
                    words.push("array");
                    tagged(i as u64 + 1, &words.join(" "))
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn support_invariants(titles in arb_titles(), lo in 0.0f64..0.5, delta in 0.0f64..0.5) {
            let low = MiningParams { min_support: lo, ..MiningParams::default() };
            let high = MiningParams { min_support: lo + delta, ..MiningParams::default() };
            if let (Ok(a), Ok(b)) = (mine_patterns(&titles, "array", &low), mine_patterns(&titles, "array", &high)) {
                let train = titles.iter().filter(|t| is_train(t.post_id, 0.8)).count();
                for p in &a {
                    prop_assert!((0.0..=1.0).contains(&p.normalized_support));
                    prop_assert!(p.support_count as f64 >= (lo * train as f64 - 1e-9).ceil());
                }
                let shapes: HashSet<_> = a.iter().map(|p| p.shape.clone()).collect();
                prop_assert!(b.iter().all(|p| shapes.contains(&p.shape)));
                prop_assert_eq!(a.clone(), mine_patterns(&titles, "array", &low).unwrap());
            }
        }

        #[test]
        fn harvest_invariants(titles in arb_titles()) {
            let pre = Preprocessor::default();
            let seeds = vec!["array".to_string()];
            if let Ok(report) = discover(&titles, &seeds, &DiscoveryParams::default(), &pre) {
                for h in &report.harvests {
                    prop_assert!(h.accepted.len() <= 5);
                    prop_assert!(!h.accepted.contains(&"array".to_string()));
                }
                let names = report.entity_names();
                let unique: HashSet<_> = names.iter().collect();
                prop_assert_eq!(unique.len(), names.len());
            }
        }
    }
}
