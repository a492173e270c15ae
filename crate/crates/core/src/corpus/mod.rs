//! Q&A dump ingestion: posts, code snippets, corpus filtering and text
//! preprocessing.

mod dump;
pub mod html;
pub mod text;

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

pub use dump::{parse_dump, DumpFormat, DumpParse, Reject};
pub use text::{preprocess, Lemmatizer, Preprocessor, StopList, Token, TokenizedText};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PostType {
    Question,
    Answer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSnippet {
    pub post_id: u64,
    pub ordinal: usize,
    pub raw_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Post {
    pub id: u64,
    pub post_type: PostType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent_id: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub body_text: String,
    pub tags: BTreeSet<String>,
    pub snippets: Vec<CodeSnippet>,
}

impl Post {
    /// Checks the structural invariants a parsed row must satisfy.
    pub fn validate(&self) -> Result<(), String> {
        if self.id == 0 {
            return Err("id must be positive".into());
        }
        match self.post_type {
            PostType::Question if self.title.as_deref().is_none_or(|t| t.trim().is_empty()) => {
                return Err("question without title".into())
            }
            PostType::Answer if self.parent_id.is_none_or(|p| p == 0) => return Err("answer without parent id".into()),
            _ => {}
        }
        if let Some(bad) = self
            .tags
            .iter()
            .find(|t| t.is_empty() || t.contains(['<', '>']) || t.to_lowercase() != **t)
        {
            return Err(format!("invalid tag `{bad}`"));
        }
        for (i, s) in self.snippets.iter().enumerate() {
            if s.post_id != self.id || s.ordinal != i || s.raw_text.trim().is_empty() {
                return Err(format!("invalid snippet #{i}"));
            }
        }
        Ok(())
    }

    pub fn is_question(&self) -> bool {
        self.post_type == PostType::Question
    }

    pub fn title_tokens(&self, pre: &Preprocessor) -> TokenizedText {
        self.title.as_deref().map(|t| pre.preprocess(t)).unwrap_or_default()
    }

    pub fn body_tokens(&self, pre: &Preprocessor) -> TokenizedText {
        pre.preprocess(&self.body_text)
    }
}

/// Keeps questions carrying `tag` (and at least one snippet when
/// `require_snippet`), plus the answers whose parent question survived.
pub fn filter_corpus(posts: &[Post], tag: &str, require_snippet: bool) -> Vec<Post> {
    let kept_questions: HashSet<u64> = posts
        .iter()
        .filter(|p| p.is_question())
        .filter(|p| p.tags.contains(tag) && (!require_snippet || !p.snippets.is_empty()))
        .map(|p| p.id)
        .collect();
    posts
        .iter()
        .filter(|p| match p.post_type {
            PostType::Question => kept_questions.contains(&p.id),
            PostType::Answer => p.parent_id.is_some_and(|id| kept_questions.contains(&id)),
        })
        .cloned()
        .collect()
}
