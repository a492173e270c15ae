//! Learn which code patterns express which programming concepts by mining a
//! Q&A dump, then use the learned profiles to tag source lines with concept
//! names and search code by those names.
//!
//! The pipeline stages, in order:
//!
//! 1. [`corpus`]: parse dumps, keep tagged posts with code, preprocess text.
//! 2. [`classifier`]: optionally keep only how-to questions.
//! 3. [`pos`] + [`discovery`]: grow a seed set of concept entities from
//!    part-of-speech contexts in question titles.
//! 4. [`lexer`] + [`profile`]: rank code n-grams per entity by TF-IDF.
//! 5. [`linker`]: annotate source lines with matching entities.
//! 6. [`index`]: positional inverted index over annotated files.
//! 7. [`eval`]: precision@k against gold judgments.
//!
//! [`pipeline`] wires the stages to on-disk artifacts.

pub mod classifier;
pub mod corpus;
pub mod discovery;
pub mod error;
pub mod eval;
pub mod index;
pub mod lexer;
pub mod linker;
pub mod pipeline;
pub mod pos;
pub mod profile;

pub use classifier::{Label, LabeledQuestion};
pub use corpus::{preprocess, CodeSnippet, Post, PostType, Preprocessor, TokenizedText};
pub use discovery::{DiscoveryReport, Entity, EntityOrigin, PosPattern};
pub use error::{Error, Result};
pub use eval::GoldJudgments;
pub use index::{IndexFile, Posting};
pub use lexer::{CodeToken, SkeletonLine, TokenKind};
pub use linker::{AnnotatedLine, LinkConfig, Linker};
pub use pipeline::{Pipeline, PipelineConfig, Stage};
pub use pos::{PosTag, TaggedTitle};
pub use profile::{CorpusStats, EntityProfile, ProfileDocument, SyntacticPattern};
