//! TF-IDF ranking of skeleton n-grams per entity.
//!
//! A document is one question thread: the question's snippets plus the
//! snippets of its answers, matched to entities through the question title.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::corpus::{Post, PostType, Preprocessor, TokenizedText};
use crate::discovery::Entity;
use crate::error::{Error, Result};
use crate::lexer::{skeleton, SkeletonLine};

/// A contiguous run of skeleton lexemes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyntacticPattern(Vec<String>);

impl SyntacticPattern {
    pub fn new<S: Into<String>>(tokens: impl IntoIterator<Item = S>) -> Self {
        SyntacticPattern(tokens.into_iter().map(Into::into).collect())
    }

    /// Parses the space-separated form used in artifacts.
    pub fn parse(text: &str) -> Self {
        SyntacticPattern::new(text.split_whitespace())
    }

    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for SyntacticPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

impl Serialize for SyntacticPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SyntacticPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(SyntacticPattern::parse(&String::deserialize(d)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgramRange {
    pub min: usize,
    pub max: usize,
}

impl Default for NgramRange {
    fn default() -> Self {
        NgramRange { min: 1, max: 7 }
    }
}

impl NgramRange {
    pub fn validate(&self) -> Result<()> {
        if self.min == 0 || self.max < self.min {
            return Err(Error::InvalidArgument(format!(
                "bad n-gram range {}..={}",
                self.min, self.max
            )));
        }
        Ok(())
    }
}

pub type NgramCounts = HashMap<SyntacticPattern, u64>;

/// Every contiguous n-gram of every line, n-grams never crossing lines.
pub fn collect_ngrams(lines: &[SkeletonLine], range: NgramRange) -> NgramCounts {
    let mut counts = NgramCounts::new();
    for line in lines {
        for n in range.min..=range.max.min(line.tokens.len()) {
            for window in line.tokens.windows(n) {
                *counts.entry(SyntacticPattern(window.to_vec())).or_default() += 1;
            }
        }
    }
    counts
}

/// Question thread as a profiling document.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileDocument {
    pub id: u64,
    pub title: TokenizedText,
    pub snippets: Vec<String>,
}

impl ProfileDocument {
    pub fn ngrams(&self, range: NgramRange) -> NgramCounts {
        let mut counts = NgramCounts::new();
        for snippet in &self.snippets {
            for (g, c) in collect_ngrams(&skeleton(snippet), range) {
                *counts.entry(g).or_default() += c;
            }
        }
        counts
    }
}

/// Groups answers under their questions. Answers whose question is absent
/// from `posts` are dropped.
pub fn documents_from_posts(posts: &[Post], pre: &Preprocessor) -> Vec<ProfileDocument> {
    let mut docs: Vec<ProfileDocument> = Vec::new();
    let mut slot: HashMap<u64, usize> = HashMap::new();
    for post in posts.iter().filter(|p| p.post_type == PostType::Question) {
        slot.insert(post.id, docs.len());
        docs.push(ProfileDocument {
            id: post.id,
            title: post.title_tokens(pre),
            snippets: post.snippets.iter().map(|s| s.raw_text.clone()).collect(),
        });
    }
    for post in posts.iter().filter(|p| p.post_type == PostType::Answer) {
        if let Some(&i) = post.parent_id.as_ref().and_then(|id| slot.get(id)) {
            docs[i]
                .snippets
                .extend(post.snippets.iter().map(|s| s.raw_text.clone()));
        }
    }
    docs
}

/// Ln-based inverse document frequency.
pub fn idf(total_posts: u64, df: u64) -> Result<f64> {
    if df == 0 {
        return Err(Error::ZeroDocumentFrequency);
    }
    if total_posts == 0 || df > total_posts {
        return Err(Error::InvalidArgument(format!(
            "df {df} exceeds corpus size {total_posts}"
        )));
    }
    Ok((total_posts as f64 / df as f64).ln())
}

/// Per-document n-gram counts plus document frequencies over the IDF universe.
#[derive(Debug, Clone)]
pub struct CorpusStats {
    pub total_posts: u64,
    pub df: HashMap<SyntacticPattern, u64>,
    pub range: NgramRange,
    per_doc: Vec<NgramCounts>,
}

impl CorpusStats {
    pub fn build(docs: &[ProfileDocument], range: NgramRange) -> Result<Self> {
        range.validate()?;
        let per_doc: Vec<NgramCounts> = docs.par_iter().map(|d| d.ngrams(range)).collect();
        let df = per_doc
            .par_iter()
            .fold(HashMap::new, |mut acc: HashMap<SyntacticPattern, u64>, counts| {
                for g in counts.keys() {
                    *acc.entry(g.clone()).or_default() += 1;
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                for (g, c) in b {
                    *a.entry(g).or_default() += c;
                }
                a
            });
        Ok(CorpusStats {
            total_posts: docs.len() as u64,
            df,
            range,
            per_doc,
        })
    }

    pub fn doc_ngrams(&self, i: usize) -> &NgramCounts {
        &self.per_doc[i]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub pattern: SyntacticPattern,
    pub tf: u64,
    pub weight: f64,
    pub normalized_weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntityProfile {
    pub entity: String,
    pub entries: Vec<ProfileEntry>,
}

impl EntityProfile {
    pub fn max_n(&self) -> usize {
        self.entries.iter().map(|e| e.pattern.n()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileParams {
    pub range: NgramRange,
    pub top_k: usize,
    /// Patterns seen in fewer entity documents than this are dropped.
    pub min_entity_posts: u64,
}

impl Default for ProfileParams {
    fn default() -> Self {
        ProfileParams {
            range: NgramRange::default(),
            top_k: 50,
            min_entity_posts: 2,
        }
    }
}

/// Raw per-entity evidence for one pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Evidence {
    pub tf: u64,
    pub posts: u64,
}

/// Weights, orders, truncates and normalizes candidate patterns. Equal
/// weights go to the longer pattern: a sub-gram that only ever occurs inside a
/// longer one says nothing the longer one does not. Zero-weight patterns
/// (present in every document) carry no signal and are left out.
pub fn rank_patterns(
    evidence: impl IntoIterator<Item = (SyntacticPattern, u64)>,
    stats: &CorpusStats,
    top_k: usize,
) -> Result<Vec<ProfileEntry>> {
    let mut entries = Vec::new();
    for (pattern, tf) in evidence {
        let df = stats.df.get(&pattern).copied().unwrap_or(0);
        let weight = tf as f64 * idf(stats.total_posts, df)?;
        if weight > 0.0 {
            entries.push(ProfileEntry {
                pattern,
                tf,
                weight,
                normalized_weight: 0.0,
            });
        }
    }
    entries.sort_by(|a, b| {
        b.weight
            .total_cmp(&a.weight)
            .then_with(|| b.pattern.n().cmp(&a.pattern.n()))
            .then_with(|| a.pattern.cmp(&b.pattern))
    });
    entries.truncate(top_k);
    if let Some(max) = entries.first().map(|e| e.weight) {
        for e in &mut entries {
            e.normalized_weight = e.weight / max;
        }
    }
    Ok(entries)
}

/// Indices of documents whose title mentions `entity`.
pub fn entity_documents(docs: &[ProfileDocument], entity: &str) -> Vec<usize> {
    docs.iter()
        .enumerate()
        .filter(|(_, d)| d.title.contains_lemma(entity))
        .map(|(i, _)| i)
        .collect()
}

/// Builds one profile from the documents at `entity_docs` (indices into the
/// documents `stats` was built from).
pub fn build_profile(
    entity: &Entity,
    entity_docs: &[usize],
    stats: &CorpusStats,
    params: &ProfileParams,
) -> Result<EntityProfile> {
    if entity_docs.is_empty() {
        return Err(Error::UnprofileableEntity(entity.name.clone()));
    }
    let mut evidence: HashMap<&SyntacticPattern, Evidence> = HashMap::new();
    for &i in entity_docs {
        for (g, &c) in stats.doc_ngrams(i) {
            let e = evidence.entry(g).or_default();
            e.tf += c;
            e.posts += 1;
        }
    }
    let candidates = evidence
        .into_iter()
        .filter(|(g, e)| e.posts >= params.min_entity_posts && (params.range.min..=params.range.max).contains(&g.n()))
        .map(|(g, e)| (g.clone(), e.tf));
    Ok(EntityProfile {
        entity: entity.name.clone(),
        entries: rank_patterns(candidates, stats, params.top_k)?,
    })
}

/// Profiles for every entity in parallel. Entities without documents are
/// returned separately, in input order.
pub fn build_profiles(
    entities: &[Entity],
    docs: &[ProfileDocument],
    stats: &CorpusStats,
    params: &ProfileParams,
) -> Result<(Vec<EntityProfile>, Vec<String>)> {
    let results: Vec<Result<EntityProfile>> = entities
        .par_iter()
        .map(|e| build_profile(e, &entity_documents(docs, &e.name), stats, params))
        .collect();
    let mut profiles = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(p) => profiles.push(p),
            Err(Error::UnprofileableEntity(name)) => skipped.push(name),
            Err(e) => return Err(e),
        }
    }
    Ok((profiles, skipped))
}

/// One stored profile: `{"entity": .., "entries": [[pattern, tf, weight, normalized], ..]}`.
#[derive(Serialize, Deserialize)]
struct ProfileRecord {
    entity: String,
    entries: Vec<(SyntacticPattern, u64, f64, f64)>,
}

pub fn write_profiles<W: Write>(mut out: W, profiles: &[EntityProfile]) -> Result<()> {
    for p in profiles {
        let record = ProfileRecord {
            entity: p.entity.clone(),
            entries: p
                .entries
                .iter()
                .map(|e| (e.pattern.clone(), e.tf, e.weight, e.normalized_weight))
                .collect(),
        };
        serde_json::to_writer(&mut out, &record)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_profiles<R: BufRead>(source: R) -> Result<Vec<EntityProfile>> {
    let mut profiles = Vec::new();
    for line in source.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: ProfileRecord = serde_json::from_str(&line)?;
        profiles.push(EntityProfile {
            entity: record.entity,
            entries: record
                .entries
                .into_iter()
                .map(|(pattern, tf, weight, normalized_weight)| ProfileEntry {
                    pattern,
                    tf,
                    weight,
                    normalized_weight,
                })
                .collect(),
        });
    }
    Ok(profiles)
}
