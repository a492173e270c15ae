//! Precision@k of entity profiles against hand-made relevance judgments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lexer::lex;
use crate::profile::{EntityProfile, SyntacticPattern};

/// Relevant patterns per entity. Patterns are stored as token sequences, so
/// `for ( ;; )` and `for ( ; ; )` are the same judgment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldJudgments {
    relevant: BTreeMap<String, BTreeSet<Vec<String>>>,
}

fn pattern_tokens(text: &str) -> Vec<String> {
    lex(text).tokens.into_iter().map(|(_, t)| t.text).collect()
}

impl GoldJudgments {
    /// Parses `entity<TAB>token token ...` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gold = GoldJudgments::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (entity, pattern) = line.split_once('\t').ok_or_else(|| {
                Error::malformed("gold judgments", format!("line {}: expected entity<TAB>pattern", i + 1))
            })?;
            let tokens = pattern_tokens(pattern);
            if tokens.is_empty() || entity.trim().is_empty() {
                return Err(Error::malformed(
                    "gold judgments",
                    format!("line {}: empty entity or pattern", i + 1),
                ));
            }
            gold.insert(entity, tokens);
        }
        Ok(gold)
    }

    pub fn insert(&mut self, entity: &str, tokens: Vec<String>) {
        self.relevant
            .entry(entity.trim().to_lowercase())
            .or_default()
            .insert(tokens);
    }

    pub fn entities(&self) -> impl Iterator<Item = &str> {
        self.relevant.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.relevant.is_empty()
    }

    /// `Some(relevance)` if the entity is judged.
    pub fn is_relevant(&self, entity: &str, pattern: &SyntacticPattern) -> Option<bool> {
        self.relevant
            .get(&entity.to_lowercase())
            .map(|set| set.contains(pattern.tokens()))
    }
}

/// Fraction of the top `k` profile entries judged relevant. A profile with
/// fewer than `k` entries scores its missing slots as non-relevant.
pub fn precision_at_k(profile: &EntityProfile, gold: &GoldJudgments, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if gold
        .is_relevant(&profile.entity, &SyntacticPattern::new(Vec::<String>::new()))
        .is_none()
    {
        return Err(Error::UnjudgedEntity(profile.entity.clone()));
    }
    let hits = profile
        .entries
        .iter()
        .take(k)
        .filter(|e| gold.is_relevant(&profile.entity, &e.pattern) == Some(true))
        .count();
    Ok(hits as f64 / k as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub entity: String,
    pub precision: f64,
    /// Highest-ranked relevant pattern in the profile, if any.
    pub top_pattern: Option<SyntacticPattern>,
}

/// One row per judged entity, sorted by entity name. Judged entities without a
/// profile score zero.
pub fn report_rows(profiles: &[EntityProfile], gold: &GoldJudgments, k: usize) -> Result<Vec<ReportRow>> {
    let by_name: BTreeMap<String, &EntityProfile> = profiles.iter().map(|p| (p.entity.to_lowercase(), p)).collect();
    gold.entities()
        .map(|entity| {
            let empty = EntityProfile {
                entity: entity.to_string(),
                entries: vec![],
            };
            let profile = by_name.get(entity).copied().unwrap_or(&empty);
            Ok(ReportRow {
                entity: entity.to_string(),
                precision: precision_at_k(profile, gold, k)?,
                top_pattern: profile
                    .entries
                    .iter()
                    .find(|e| gold.is_relevant(entity, &e.pattern) == Some(true))
                    .map(|e| e.pattern.clone()),
            })
        })
        .collect()
}

/// Tab-separated table with header `entity`, `p@k`, `top pattern`.
pub fn report(profiles: &[EntityProfile], gold: &GoldJudgments, k: usize) -> Result<String> {
    let rows = report_rows(profiles, gold, k)?;
    let mut out = format!("entity\tp@{k}\ttop pattern\n");
    for row in rows {
        let top = row.top_pattern.map_or_else(|| "-".to_string(), |p| p.to_string());
        let _ = writeln!(out, "{}\t{:.2}\t{}", row.entity, row.precision, top);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::ProfileEntry;
    use proptest::prelude::*;

    fn profile(entity: &str, patterns: &[&str]) -> EntityProfile {
        EntityProfile {
            entity: entity.into(),
            entries: patterns
                .iter()
                .enumerate()
                .map(|(i, p)| ProfileEntry {
                    pattern: SyntacticPattern::parse(p),
                    tf: 1,
                    weight: 1.0 / (i + 1) as f64,
                    normalized_weight: 1.0 / (i + 1) as f64,
                })
                .collect(),
        }
    }

    fn gold() -> GoldJudgments {
        GoldJudgments::parse("loop\tfor ( ;; )\nloop\tfor ( ; ; ) {\nloop\twhile ( )\nparameter\t( )\n").unwrap()
    }

    #[test]
    fn spacing_is_ignored() {
        let g = gold();
        assert_eq!(
            g.is_relevant("loop", &SyntacticPattern::parse("for ( ; ; )")),
            Some(true)
        );
        assert_eq!(g.is_relevant("loop", &SyntacticPattern::parse("for ( )")), Some(false));
        assert_eq!(g.is_relevant("array", &SyntacticPattern::parse("[ ]")), None);
    }

    #[test]
    fn three_of_four() {
        let p = profile("loop", &["for ( ; ; )", "for ( ; ; ) {", "++", "while ( )"]);
        assert_eq!(precision_at_k(&p, &gold(), 4).unwrap(), 0.75);
    }

    #[test]
    fn short_profile_counts_missing_slots() {
        let p = profile("parameter", &["( )"]);
        assert_eq!(precision_at_k(&p, &gold(), 4).unwrap(), 0.25);
    }

    #[test]
    fn unjudged_and_bad_k() {
        let p = profile("array", &["[ ]"]);
        assert!(matches!(precision_at_k(&p, &gold(), 4), Err(Error::UnjudgedEntity(_))));
        assert!(precision_at_k(&profile("loop", &[]), &gold(), 0).is_err());
    }

    #[test]
    fn malformed_gold() {
        assert!(GoldJudgments::parse("loop for").is_err());
        assert!(GoldJudgments::parse("loop\t   ").is_err());
    }

    #[test]
    fn report_layout() {
        let profiles = vec![profile("loop", &["++", "for ( ; ; )", "while ( )", "x"])];
        let text = report(&profiles, &gold(), 4).unwrap();
        assert_eq!(
            text,
            "entity\tp@4\ttop pattern\nloop\t0.50\tfor ( ; ; )\nparameter\t0.00\t-\n"
        );
        assert!(report(&profiles, &gold(), 1).unwrap().starts_with("entity\tp@1\t"));
        assert_eq!(
            report(&profiles, &GoldJudgments::default(), 4).unwrap(),
            "entity\tp@4\ttop pattern\n"
        );
    }

    proptest! {
        #[test]
        fn precision_lattice_and_swap_monotonicity(mask in prop::collection::vec(any::<bool>(), 0..8), k in 1usize..6) {
            let pats: Vec<&str> = mask.iter().enumerate().map(|(i, rel)| match (rel, i % 3) {
                (true, 0) => "for ( ; ; )",
                (true, 1) => "for ( ; ; ) {",
                (true, _) => "while ( )",
                (false, 0) => "++",
                (false, 1) => "x",
                (false, _) => "--",
            }).collect();
            let p = profile("loop", &pats);
            let score = precision_at_k(&p, &gold(), k).unwrap();
            let scaled = score * k as f64;
            prop_assert!((scaled - scaled.round()).abs() < 1e-12 && (0.0..=1.0).contains(&score));
            if let Some(i) = mask.iter().take(k).position(|r| *r) {
                let mut swapped = p.clone();
                swapped.entries[i].pattern = SyntacticPattern::parse("not relevant");
                prop_assert!(precision_at_k(&swapped, &gold(), k).unwrap() <= score);
            }
        }
    }
}
