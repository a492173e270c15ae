//! Tokenization, lemmatization and stop-word marking for natural-language text.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::{Arc, LazyLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUNDLED_STOPWORDS: &str = include_str!("../../data/stopwords.txt");
const BUNDLED_LEMMA_EXCEPTIONS: &str = include_str!("../../data/lemma_exceptions.tsv");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub is_stopword: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedText {
    pub tokens: Vec<Token>,
}

impl TokenizedText {
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn lemmas(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.lemma.as_str())
    }

    /// Lemmas with stop words removed.
    pub fn content_lemmas(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().filter(|t| !t.is_stopword).map(|t| t.lemma.as_str())
    }

    pub fn contains_lemma(&self, lemma: &str) -> bool {
        self.tokens.iter().any(|t| t.lemma == lemma)
    }
}

/// Splits on non-alphanumeric boundaries. An apostrophe with alphanumerics on
/// both sides is dropped and the two halves join (`don't` -> `dont`).
pub fn split_words(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut words = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_alphanumeric() {
            current.push(c);
        } else if is_apostrophe(c) && !current.is_empty() && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric()) {
            continue;
        } else if !current.is_empty() {
            words.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        words.push(current);
    }
    words
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}')
}

/// Ordered suffix-rule lemmatizer with an exception table.
#[derive(Debug, Clone)]
pub struct Lemmatizer {
    exceptions: HashMap<String, String>,
}

impl Default for Lemmatizer {
    fn default() -> Self {
        Self::from_table(BUNDLED_LEMMA_EXCEPTIONS).expect("bundled lemma table is valid")
    }
}

impl Lemmatizer {
    pub fn from_table(table: &str) -> Result<Self> {
        let mut exceptions = HashMap::new();
        for (no, line) in data_lines(table) {
            let (word, lemma) = line
                .split_once('\t')
                .ok_or_else(|| Error::malformed("lemma table", format!("line {no}: expected word<TAB>lemma")))?;
            exceptions.insert(word.trim().to_lowercase(), lemma.trim().to_lowercase());
        }
        Ok(Lemmatizer { exceptions })
    }

    /// Lemma of an already-lowercased word.
    pub fn lemmatize(&self, word: &str) -> String {
        if let Some(lemma) = self.exceptions.get(word) {
            return lemma.clone();
        }
        if word.chars().count() <= 3 || word.chars().any(|c| c.is_ascii_digit()) {
            return word.to_string();
        }
        suffix_rules(word)
    }
}

fn suffix_rules(word: &str) -> String {
    if let Some(stem) = word.strip_suffix("ies") {
        if stem.len() >= 2 {
            return format!("{stem}y");
        }
    }
    for suffix in ["sses", "xes", "ches", "shes", "zzes"] {
        if word.ends_with(suffix) {
            return word[..word.len() - 2].to_string();
        }
    }
    if word.ends_with("ss") || word.ends_with("us") || word.ends_with("is") {
        return word.to_string();
    }
    if let Some(stem) = word.strip_suffix('s') {
        return stem.to_string();
    }
    if word.ends_with("eed") {
        return word.to_string();
    }
    if let Some(stem) = word.strip_suffix("ied") {
        if stem.len() >= 2 {
            return format!("{stem}y");
        }
    }
    for suffix in ["ing", "ed"] {
        if let Some(stem) = word.strip_suffix(suffix) {
            if stem.len() >= 2 && has_vowel(stem) {
                return restore_stem(stem);
            }
        }
    }
    word.to_string()
}

/// Repairs a stem after removing `-ing`/`-ed`: `creat` -> `create`,
/// `runn` -> `run`, `mak` -> `make`.
fn restore_stem(stem: &str) -> String {
    let b = stem.as_bytes();
    if stem.ends_with("at") || stem.ends_with("bl") || stem.ends_with("iz") {
        return format!("{stem}e");
    }
    let n = b.len();
    if n >= 2
        && b[n - 1] == b[n - 2]
        && b[n - 1].is_ascii_alphabetic()
        && is_consonant(b, n - 1)
        && !matches!(b[n - 1], b'l' | b's' | b'z')
    {
        return stem[..n - 1].to_string();
    }
    if measure(b) == 1 && ends_cvc(b) {
        return format!("{stem}e");
    }
    stem.to_string()
}

fn is_consonant(b: &[u8], i: usize) -> bool {
    match b[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(b, i - 1),
        c => c.is_ascii_alphabetic() || !c.is_ascii(),
    }
}

fn has_vowel(stem: &str) -> bool {
    let b = stem.as_bytes();
    (0..b.len()).any(|i| !is_consonant(b, i))
}

/// Number of vowel-consonant sequences in the stem.
fn measure(b: &[u8]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..b.len() {
        let vowel = !is_consonant(b, i);
        if prev_vowel && !vowel {
            m += 1;
        }
        prev_vowel = vowel;
    }
    m
}

fn ends_cvc(b: &[u8]) -> bool {
    let n = b.len();
    n >= 3
        && is_consonant(b, n - 3)
        && !is_consonant(b, n - 2)
        && is_consonant(b, n - 1)
        && !matches!(b[n - 1], b'w' | b'x' | b'y')
}

#[derive(Debug, Clone)]
pub struct StopList {
    words: HashSet<String>,
}

impl Default for StopList {
    fn default() -> Self {
        Self::parse(BUNDLED_STOPWORDS)
    }
}

impl StopList {
    pub fn parse(text: &str) -> Self {
        StopList {
            words: data_lines(text).map(|(_, w)| w.to_lowercase()).collect(),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&text))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Bundles the lemmatizer and stop list so callers preprocess text the same
/// way at ingest, discovery, indexing and query time.
#[derive(Debug, Clone, Default)]
pub struct Preprocessor {
    lemmatizer: Arc<Lemmatizer>,
    stop: Arc<StopList>,
}

impl Preprocessor {
    pub fn new(lemmatizer: Lemmatizer, stop: StopList) -> Self {
        Preprocessor {
            lemmatizer: Arc::new(lemmatizer),
            stop: Arc::new(stop),
        }
    }

    pub fn with_stoplist(stop: StopList) -> Self {
        Self::new(Lemmatizer::default(), stop)
    }

    pub fn preprocess(&self, text: &str) -> TokenizedText {
        let tokens = split_words(text)
            .into_iter()
            .map(|surface| self.token(surface))
            .collect();
        TokenizedText { tokens }
    }

    pub fn token(&self, surface: String) -> Token {
        let lower = surface.to_lowercase();
        let lemma = if self.stop.contains(&lower) {
            lower
        } else {
            self.lemmatizer.lemmatize(&lower)
        };
        let is_stopword = self.stop.contains(&lemma);
        Token {
            surface,
            lemma,
            is_stopword,
        }
    }

    pub fn lemma(&self, word: &str) -> String {
        self.token(word.to_string()).lemma
    }

    pub fn is_stopword(&self, lemma: &str) -> bool {
        self.stop.contains(lemma)
    }

    pub fn lemmatizer(&self) -> &Lemmatizer {
        &self.lemmatizer
    }
}

static DEFAULT: LazyLock<Preprocessor> = LazyLock::new(Preprocessor::default);

/// Preprocesses with the bundled lemmatizer and stop list.
pub fn preprocess(text: &str) -> TokenizedText {
    DEFAULT.preprocess(text)
}

pub(crate) fn default_preprocessor() -> &'static Preprocessor {
    &DEFAULT
}

/// Non-empty, non-comment lines of a bundled data file, with 1-based numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}
