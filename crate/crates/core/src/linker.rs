//! Line-level entity linking: match each line's skeleton n-grams against the
//! entity profiles and append the best entities as a marker comment.

use std::collections::{HashMap, HashSet};
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexer::{skeleton, SkeletonLine};
use crate::profile::EntityProfile;

pub const MARKER: &str = " // @concepts: ";

/// Punctuation found on nearly every line. A pattern made only of these
/// tokens is no evidence for any entity.
const STRUCTURAL: [&str; 7] = ["(", ")", "{", "}", ";", ",", "."];

fn is_structural(tokens: &[String]) -> bool {
    tokens.iter().all(|t| STRUCTURAL.contains(&t.as_str()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkConfig {
    pub min_normalized_weight: f64,
    pub profile_depth: usize,
    pub max_entities_per_line: usize,
}

impl Default for LinkConfig {
    fn default() -> Self {
        LinkConfig {
            min_normalized_weight: 0.25,
            profile_depth: 20,
            max_entities_per_line: 4,
        }
    }
}

impl LinkConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.min_normalized_weight > 0.0 && self.min_normalized_weight <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "min normalized weight {} not in (0, 1]",
                self.min_normalized_weight
            )));
        }
        if self.profile_depth == 0 || self.max_entities_per_line == 0 {
            return Err(Error::InvalidArgument(
                "profile depth and entity cap must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotatedLine {
    pub line_no: usize,
    #[serde(skip)]
    pub original_text: String,
    pub entities: Vec<String>,
    pub match_scores: Vec<f64>,
}

#[derive(Debug, Clone)]
struct LinkPatterns {
    entity: String,
    /// (tokens, normalized weight), in profile order.
    patterns: Vec<(Vec<String>, f64)>,
}

/// Profiles trimmed to what the config lets the linker consult.
#[derive(Debug, Clone)]
pub struct Linker {
    profiles: Vec<LinkPatterns>,
    config: LinkConfig,
    max_n: usize,
}

impl Linker {
    pub fn new(profiles: &[EntityProfile], config: LinkConfig) -> Result<Self> {
        config.validate()?;
        let profiles: Vec<LinkPatterns> = profiles
            .iter()
            .map(|p| LinkPatterns {
                entity: p.entity.clone(),
                patterns: p
                    .entries
                    .iter()
                    .take(config.profile_depth)
                    .filter(|e| e.normalized_weight >= config.min_normalized_weight)
                    .filter(|e| !is_structural(e.pattern.tokens()))
                    .map(|e| (e.pattern.tokens().to_vec(), e.normalized_weight))
                    .collect(),
            })
            .collect();
        let max_n = profiles
            .iter()
            .flat_map(|p| p.patterns.iter().map(|(t, _)| t.len()))
            .max()
            .unwrap_or(0);
        Ok(Linker {
            profiles,
            config,
            max_n,
        })
    }

    pub fn config(&self) -> &LinkConfig {
        &self.config
    }

    pub fn link_line(&self, line: &SkeletonLine) -> AnnotatedLine {
        let mut grams: HashSet<&[String]> = HashSet::new();
        for n in 1..=self.max_n.min(line.tokens.len()) {
            grams.extend(line.tokens.windows(n));
        }
        // (score, matched length, entity)
        let mut hits: Vec<(f64, usize, &str)> = Vec::new();
        for profile in &self.profiles {
            let best = profile
                .patterns
                .iter()
                .filter(|(tokens, _)| grams.contains(tokens.as_slice()))
                .map(|(tokens, w)| (*w, tokens.len()))
                .max_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
            if let Some((score, len)) = best {
                hits.push((score, len, &profile.entity));
            }
        }
        hits.sort_by(|a, b| b.0.total_cmp(&a.0).then(b.1.cmp(&a.1)).then_with(|| a.2.cmp(b.2)));
        let mut seen = HashSet::new();
        hits.retain(|h| seen.insert(h.2));
        hits.truncate(self.config.max_entities_per_line);
        AnnotatedLine {
            line_no: line.line_no,
            original_text: String::new(),
            entities: hits.iter().map(|h| h.2.to_string()).collect(),
            match_scores: hits.iter().map(|h| h.0).collect(),
        }
    }
}

pub fn link_line(line: &SkeletonLine, profiles: &[EntityProfile], config: LinkConfig) -> Result<AnnotatedLine> {
    Ok(Linker::new(profiles, config)?.link_line(line))
}

/// Splits a line (without terminator) into content and an existing marker.
fn split_marker(line: &str) -> (&str, Option<&str>) {
    if let Some(at) = line.rfind(MARKER) {
        let list = &line[at + MARKER.len()..];
        let well_formed = !list.is_empty()
            && list
                .split(", ")
                .all(|name| !name.is_empty() && !name.contains(|c: char| c.is_whitespace() || c == ','));
        if well_formed {
            return (&line[..at], Some(list));
        }
    }
    (line, None)
}

fn split_terminator(line: &str) -> (&str, &str) {
    let body = line.strip_suffix('\n').unwrap_or(line);
    let body = body.strip_suffix('\r').unwrap_or(body);
    (body, &line[body.len()..])
}

/// Removes marker comments, leaving every other byte in place.
pub fn strip_markers(source: &str) -> String {
    source
        .split_inclusive('\n')
        .map(|line| {
            let (body, term) = split_terminator(line);
            let (content, _) = split_marker(body);
            format!("{content}{term}")
        })
        .collect()
}

/// Entity names from a line's marker comment, if any.
pub fn marker_entities(line: &str) -> Vec<&str> {
    let (body, _) = split_terminator(line);
    match split_marker(body) {
        (_, Some(list)) => list.split(", ").collect(),
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone)]
pub struct AnnotatedFile {
    pub text: String,
    /// Lines with at least one entity.
    pub lines: Vec<AnnotatedLine>,
}

/// Annotates every line that links to at least one entity. Existing markers
/// are replaced, so annotating twice changes nothing.
pub fn annotate_file(source: &str, linker: &Linker) -> AnnotatedFile {
    let clean = strip_markers(source);
    let skeletons: HashMap<usize, SkeletonLine> = skeleton(&clean).into_iter().map(|l| (l.line_no, l)).collect();
    let raw_lines: Vec<&str> = clean.split_inclusive('\n').collect();
    let linked: Vec<(String, Option<AnnotatedLine>)> = raw_lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            let (body, term) = split_terminator(line);
            let annotation = skeletons
                .get(&(i + 1))
                .map(|s| linker.link_line(s))
                .filter(|a| !a.entities.is_empty())
                .map(|mut a| {
                    a.original_text = body.to_string();
                    a
                });
            let text = match &annotation {
                Some(a) => format!("{body}{MARKER}{}{term}", a.entities.join(", ")),
                None => line.to_string(),
            };
            (text, annotation)
        })
        .collect();
    let mut text = String::with_capacity(source.len());
    let mut lines = Vec::new();
    for (t, a) in linked {
        text.push_str(&t);
        lines.extend(a);
    }
    AnnotatedFile { text, lines }
}

/// Sidecar: one JSON object per annotated line.
pub fn write_sidecar<W: Write>(mut out: W, lines: &[AnnotatedLine]) -> Result<()> {
    for line in lines {
        serde_json::to_writer(&mut out, line)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{ProfileEntry, SyntacticPattern};
    use proptest::prelude::*;

    fn profile(entity: &str, entries: &[(&str, f64)]) -> EntityProfile {
        EntityProfile {
            entity: entity.into(),
            entries: entries
                .iter()
                .map(|&(p, w)| ProfileEntry {
                    pattern: SyntacticPattern::parse(p),
                    tf: 1,
                    weight: w,
                    normalized_weight: w,
                })
                .collect(),
        }
    }

    fn fixture_profiles() -> Vec<EntityProfile> {
        vec![
            profile("loop", &[("for ( ; ; ) {", 1.0), ("for (", 0.8), ("while (", 0.6)]),
            profile("conditional", &[("if ( ) {", 1.0), ("if (", 0.9), ("else", 0.5)]),
            profile("array", &[("[ ]", 1.0), ("new [ ]", 0.7)]),
            profile("increment", &[("++", 1.0), ("++ ;", 0.9)]),
        ]
    }

    fn skel(tokens: &str) -> SkeletonLine {
        SkeletonLine {
            line_no: 1,
            tokens: tokens.split_whitespace().map(String::from).collect(),
        }
    }

    #[test]
    fn for_loop_links_loop_and_increment() {
        let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
        let a = linker.link_line(&skel("for ( = ; < ; ++ ) {"));
        // increment matches "++" at 1.0, loop only "for (" at 0.8
        assert_eq!(a.entities, ["increment", "loop"]);
        assert_eq!(a.match_scores, [1.0, 0.8]);
    }

    #[test]
    fn if_links_conditional_first() {
        let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
        let a = linker.link_line(&skel("if ( > ) {"));
        assert_eq!(a.entities, ["conditional"]);
        assert_eq!(a.match_scores, [0.9]);
    }

    #[test]
    fn at_most_four_entities() {
        let profiles: Vec<EntityProfile> = ["a", "b", "c", "d", "e", "f"]
            .iter()
            .enumerate()
            .map(|(i, name)| profile(name, &[("=", 1.0 - i as f64 * 0.1)]))
            .collect();
        let linker = Linker::new(&profiles, LinkConfig::default()).unwrap();
        let a = linker.link_line(&skel("= ;"));
        assert_eq!(a.entities, ["a", "b", "c", "d"]);
    }

    #[test]
    fn longer_match_wins_ties_then_name() {
        let profiles = vec![
            profile("zeta", &[("[ ]", 1.0)]),
            profile("beta", &[("[", 1.0)]),
            profile("alpha", &[("]", 1.0)]),
        ];
        let linker = Linker::new(&profiles, LinkConfig::default()).unwrap();
        assert_eq!(linker.link_line(&skel("[ ]")).entities, ["zeta", "alpha", "beta"]);
    }

    #[test]
    fn structural_patterns_and_thresholds_ignored() {
        let profiles = vec![
            profile("call", &[("(", 1.0), ("( ) {", 1.0), ("} ;", 0.9)]),
            profile("faint", &[(";", 1.0), ("=", 0.1)]),
        ];
        let linker = Linker::new(&profiles, LinkConfig::default()).unwrap();
        assert!(linker.link_line(&skel("( ) { = ; } ;")).entities.is_empty());
    }

    #[test]
    fn annotate_appends_marker() {
        let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
        let out = annotate_file("if (x > 0) {\n  y = 1;\n}\n", &linker);
        assert_eq!(out.text, "if (x > 0) { // @concepts: conditional\n  y = 1;\n}\n");
        assert_eq!(out.lines.len(), 1);
        assert_eq!(out.lines[0].original_text, "if (x > 0) {");
    }

    #[test]
    fn annotate_is_idempotent_and_strippable() {
        let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
        let src = "int[] a = new int[3];\r\nfor (;;) {\r\n  i++; // bump\r\n}";
        let once = annotate_file(src, &linker).text;
        assert_ne!(once, src);
        assert_eq!(annotate_file(&once, &linker).text, once);
        assert_eq!(strip_markers(&once), src);
        assert_eq!(
            marker_entities("x++; // @concepts: increment, loop\n"),
            ["increment", "loop"]
        );
    }

    #[test]
    fn comment_only_file_unchanged() {
        let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
        let src = "// for (;;) {\n/* if (x) { */\n";
        assert_eq!(annotate_file(src, &linker).text, src);
    }

    proptest! {
        #[test]
        fn cap_holds_and_scores_descend(tokens in prop::collection::vec(
            prop::sample::select(vec!["for", "(", ")", ";", "{", "++", "[", "]", "if", "new", "else", "while", "="]), 0..15)
        ) {
            let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
            let a = linker.link_line(&SkeletonLine { line_no: 1, tokens: tokens.iter().map(|s| s.to_string()).collect() });
            prop_assert!(a.entities.len() <= 4);
            prop_assert!(a.match_scores.windows(2).all(|w| w[0] >= w[1]));
            let unique: HashSet<_> = a.entities.iter().collect();
            prop_assert_eq!(unique.len(), a.entities.len());
        }

        #[test]
        fn strip_reverses_annotation(src in "[a-z(){};\\[\\]+=<0-9 \n]{0,80}") {
            let linker = Linker::new(&fixture_profiles(), LinkConfig::default()).unwrap();
            let once = annotate_file(&src, &linker).text;
            prop_assert_eq!(strip_markers(&once), src.clone());
            prop_assert_eq!(annotate_file(&once, &linker).text, once);
        }
    }
}
