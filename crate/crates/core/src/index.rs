//! Positional inverted index over annotated source files. Positions are line
//! numbers; concept names from marker comments and words from identifiers and
//! keywords share one dictionary.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::Preprocessor;
use crate::error::{Error, Result};
use crate::lexer::{lex, TokenKind};
use crate::linker::{marker_entities, strip_markers};

pub const INDEX_FORMAT: &str = "conceptmap-index";
pub const INDEX_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Posting {
    pub doc_id: u32,
    /// Strictly increasing line numbers.
    pub positions: Vec<u32>,
    /// The subset of `positions` where the term is a concept tag.
    pub concept_positions: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub doc_frequency: u32,
    pub postings: Vec<Posting>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocEntry {
    pub doc_id: u32,
    pub path: String,
    pub content_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexFile {
    pub doc_table: Vec<DocEntry>,
    pub dictionary: BTreeMap<String, TermEntry>,
}

/// One term occurrence on one line.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TermHit {
    pub line: u32,
    pub term: String,
    pub concept: bool,
}

/// Splits `parseHttpURL2_value` into `parse Http URL2 value`.
fn split_identifier(ident: &str) -> String {
    let chars: Vec<char> = ident.chars().collect();
    let mut out = String::with_capacity(ident.len() + 4);
    for (i, &c) in chars.iter().enumerate() {
        if c == '_' || c == '$' {
            out.push(' ');
            continue;
        }
        if i > 0 && c.is_uppercase() {
            let prev = chars[i - 1];
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            if prev.is_lowercase() || prev.is_ascii_digit() || (prev.is_uppercase() && next_lower) {
                out.push(' ');
            }
        }
        out.push(c);
    }
    out
}

/// Index terms of an annotated file, deduplicated per line.
pub fn line_terms(text: &str, pre: &Preprocessor) -> Vec<TermHit> {
    let mut hits: BTreeSet<TermHit> = BTreeSet::new();
    for (i, line) in text.split_inclusive('\n').enumerate() {
        for name in marker_entities(line) {
            for term in pre.preprocess(name).content_lemmas() {
                hits.insert(TermHit {
                    line: i as u32 + 1,
                    term: term.to_string(),
                    concept: true,
                });
            }
        }
    }
    let code = strip_markers(text);
    for (line, token) in lex(&code).tokens {
        if matches!(token.kind, TokenKind::Identifier | TokenKind::Keyword) {
            for term in pre.preprocess(&split_identifier(&token.text)).content_lemmas() {
                hits.insert(TermHit {
                    line: line as u32,
                    term: term.to_string(),
                    concept: false,
                });
            }
        }
    }
    hits.into_iter().collect()
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Builds the index. Documents are numbered in path order, so the result does
/// not depend on the order of `files`.
pub fn build_index(files: &[(String, String)], pre: &Preprocessor) -> Result<IndexFile> {
    let mut sorted: Vec<&(String, String)> = files.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in sorted.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::DuplicatePath(pair[0].0.clone()));
        }
    }
    let per_doc: Vec<Vec<TermHit>> = sorted.par_iter().map(|(_, text)| line_terms(text, pre)).collect();

    let mut index = IndexFile::default();
    for (doc_id, ((path, text), hits)) in sorted.iter().zip(per_doc).enumerate() {
        let doc_id = doc_id as u32;
        index.doc_table.push(DocEntry {
            doc_id,
            path: path.clone(),
            content_hash: sha256_hex(text.as_bytes()),
        });
        let mut by_term: BTreeMap<String, Posting> = BTreeMap::new();
        for hit in hits {
            let posting = by_term.entry(hit.term).or_insert_with(|| Posting {
                doc_id,
                positions: Vec::new(),
                concept_positions: Vec::new(),
            });
            if posting.positions.last() != Some(&hit.line) {
                posting.positions.push(hit.line);
            }
            if hit.concept && posting.concept_positions.last() != Some(&hit.line) {
                posting.concept_positions.push(hit.line);
            }
        }
        for (term, posting) in by_term {
            let entry = index.dictionary.entry(term).or_insert_with(|| TermEntry {
                doc_frequency: 0,
                postings: Vec::new(),
            });
            entry.doc_frequency += 1;
            entry.postings.push(posting);
        }
    }
    Ok(index)
}

#[derive(Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    corpus_hash: String,
    documents: usize,
    terms: usize,
}

#[derive(Serialize, Deserialize)]
struct TermRecord<'a> {
    term: std::borrow::Cow<'a, str>,
    df: u32,
    /// `[doc_id, positions, concept_positions]`
    postings: Vec<(u32, Vec<u32>, Vec<u32>)>,
}

impl IndexFile {
    /// Hash over the document table: identical inputs give identical hashes.
    pub fn corpus_hash(&self) -> String {
        let mut h = Sha256::new();
        for d in &self.doc_table {
            h.update(d.path.as_bytes());
            h.update([0]);
            h.update(d.content_hash.as_bytes());
            h.update([0]);
        }
        hex::encode(h.finalize())
    }

    pub fn path(&self, doc_id: u32) -> Option<&str> {
        self.doc_table.get(doc_id as usize).map(|d| d.path.as_str())
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        let header = Header {
            format: INDEX_FORMAT.into(),
            version: INDEX_VERSION,
            corpus_hash: self.corpus_hash(),
            documents: self.doc_table.len(),
            terms: self.dictionary.len(),
        };
        serde_json::to_writer(&mut out, &header)?;
        out.write_all(b"\n")?;
        for doc in &self.doc_table {
            serde_json::to_writer(&mut out, doc)?;
            out.write_all(b"\n")?;
        }
        for (term, entry) in &self.dictionary {
            let record = TermRecord {
                term: term.as_str().into(),
                df: entry.doc_frequency,
                postings: entry
                    .postings
                    .iter()
                    .map(|p| (p.doc_id, p.positions.clone(), p.concept_positions.clone()))
                    .collect(),
            };
            serde_json::to_writer(&mut out, &record)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(source: R) -> Result<Self> {
        let mut lines = source.lines();
        let header: Header = match lines.next() {
            Some(line) => serde_json::from_str(&line?)?,
            None => return Err(Error::malformed("index", "empty file")),
        };
        if header.format != INDEX_FORMAT || header.version != INDEX_VERSION {
            return Err(Error::malformed(
                "index",
                format!("unsupported format {} v{}", header.format, header.version),
            ));
        }
        let mut index = IndexFile::default();
        for _ in 0..header.documents {
            let line = lines
                .next()
                .ok_or_else(|| Error::malformed("index", "truncated document table"))??;
            index.doc_table.push(serde_json::from_str(&line)?);
        }
        for line in lines {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let record: TermRecord = serde_json::from_str(&line)?;
            let postings: Vec<Posting> = record
                .postings
                .into_iter()
                .map(|(doc_id, positions, concept_positions)| Posting {
                    doc_id,
                    positions,
                    concept_positions,
                })
                .collect();
            if postings.len() != record.df as usize {
                return Err(Error::malformed("index", format!("df mismatch for `{}`", record.term)));
            }
            index.dictionary.insert(
                record.term.into_owned(),
                TermEntry {
                    doc_frequency: record.df,
                    postings,
                },
            );
        }
        if index.dictionary.len() != header.terms || index.corpus_hash() != header.corpus_hash {
            return Err(Error::malformed("index", "header does not match contents"));
        }
        Ok(index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryOptions {
    /// List concept-tag lines before plain-word lines within a document.
    pub concepts_first: bool,
}

impl Default for QueryOptions {
    fn default() -> Self {
        QueryOptions { concepts_first: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineMatch {
    pub line: u32,
    pub concept: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub doc_id: u32,
    pub path: String,
    pub lines: Vec<LineMatch>,
}

/// Query words as index terms: lemmatized, stop words dropped, deduplicated.
pub fn query_terms(words: &[&str], pre: &Preprocessor) -> Vec<String> {
    let mut seen = HashSet::new();
    words
        .iter()
        .flat_map(|w| {
            pre.preprocess(&split_identifier(w))
                .content_lemmas()
                .map(String::from)
                .collect::<Vec<_>>()
        })
        .filter(|t| seen.insert(t.clone()))
        .collect()
}

/// Documents containing every query term, each with the union of the lines
/// where any term occurs. Ordered by document id.
pub fn query(index: &IndexFile, words: &[&str], pre: &Preprocessor, options: QueryOptions) -> Result<Vec<SearchHit>> {
    let terms = query_terms(words, pre);
    if terms.is_empty() {
        return Err(Error::EmptyQuery);
    }
    let mut entries = Vec::with_capacity(terms.len());
    for t in &terms {
        match index.dictionary.get(t) {
            Some(e) => entries.push(e),
            None => return Ok(Vec::new()),
        }
    }
    // intersect starting from the rarest term
    entries.sort_by_key(|e| e.doc_frequency);
    let mut docs: Vec<u32> = entries[0].postings.iter().map(|p| p.doc_id).collect();
    for e in &entries[1..] {
        docs = intersect_sorted(&docs, e.postings.iter().map(|p| p.doc_id));
        if docs.is_empty() {
            return Ok(Vec::new());
        }
    }

    let mut hits = Vec::with_capacity(docs.len());
    for doc_id in docs {
        let mut lines: BTreeMap<u32, bool> = BTreeMap::new();
        for e in &entries {
            let p = e
                .postings
                .binary_search_by_key(&doc_id, |p| p.doc_id)
                .map(|i| &e.postings[i])
                .expect("intersected doc present in every posting list");
            for &l in &p.positions {
                lines.entry(l).or_insert(false);
            }
            for &l in &p.concept_positions {
                lines.insert(l, true);
            }
        }
        let mut lines: Vec<LineMatch> = lines
            .into_iter()
            .map(|(line, concept)| LineMatch { line, concept })
            .collect();
        if options.concepts_first {
            lines.sort_by_key(|m| (!m.concept, m.line));
        }
        hits.push(SearchHit {
            doc_id,
            path: index.path(doc_id).unwrap_or_default().to_string(),
            lines,
        });
    }
    Ok(hits)
}

fn intersect_sorted(a: &[u32], b: impl Iterator<Item = u32>) -> Vec<u32> {
    let mut out = Vec::new();
    let mut a = a.iter().peekable();
    for x in b {
        while a.next_if(|&&y| y < x).is_some() {}
        if a.peek() == Some(&&x) {
            out.push(x);
            a.next();
        }
    }
    out
}
