//! Tokenizer for Java-like source. No grammar: snippets from Q&A posts rarely
//! compile, so anything the lexer does not recognise becomes a one-character
//! operator and lexing continues.

use std::collections::HashSet;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::corpus::text::data_lines;

const BUNDLED_KEYWORDS: &str = include_str!("../data/java_keywords.txt");
const BUNDLED_OPERATORS: &str = include_str!("../data/java_operators.txt");

pub const SEPARATORS: [char; 9] = ['(', ')', '{', '}', '[', ']', ';', ',', '.'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Keyword,
    Operator,
    Separator,
    Identifier,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    Comment,
}

impl TokenKind {
    /// Kinds that survive cleaning into a skeleton.
    pub fn is_structural(self) -> bool {
        matches!(self, TokenKind::Keyword | TokenKind::Operator | TokenKind::Separator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeToken {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the lexeme in the source.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexWarning {
    pub line_no: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Lexed {
    /// `(line_no, token)`, 1-based line of the token's first character.
    pub tokens: Vec<(usize, CodeToken)>,
    pub warnings: Vec<LexWarning>,
}

/// A source line reduced to keywords, operators and separators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonLine {
    pub line_no: usize,
    pub tokens: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Lexer {
    keywords: HashSet<String>,
    /// Longest first, for maximal munch.
    operators: Vec<String>,
}

impl Default for Lexer {
    fn default() -> Self {
        Lexer::from_tables(BUNDLED_KEYWORDS, BUNDLED_OPERATORS)
    }
}

static DEFAULT_LEXER: LazyLock<Lexer> = LazyLock::new(Lexer::default);

/// Lexes with the bundled Java tables.
pub fn lex(source: &str) -> Lexed {
    DEFAULT_LEXER.lex(source)
}

/// Lexes and cleans with the bundled Java tables.
pub fn skeleton(source: &str) -> Vec<SkeletonLine> {
    clean(&lex(source).tokens)
}

pub fn is_keyword(word: &str) -> bool {
    DEFAULT_LEXER.keywords.contains(word)
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn peek_nth(&self, n: usize) -> Option<char> {
        self.rest().chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn bump_while(&mut self, mut pred: impl FnMut(char) -> bool) {
        while self.peek().is_some_and(&mut pred) {
            self.bump();
        }
    }
}

impl Lexer {
    pub fn from_tables(keywords: &str, operators: &str) -> Self {
        let keywords = data_lines(keywords).map(|(_, w)| w.trim().to_string()).collect();
        let mut operators: Vec<String> = data_lines(operators).map(|(_, o)| o.trim().to_string()).collect();
        operators.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Lexer { keywords, operators }
    }

    pub fn lex(&self, source: &str) -> Lexed {
        let mut out = Lexed::default();
        let mut cur = Cursor {
            src: source,
            pos: 0,
            line: 1,
        };
        while let Some(c) = cur.peek() {
            if c.is_whitespace() {
                cur.bump();
                continue;
            }
            let start = cur.pos;
            let line = cur.line;
            let kind = self.scan(&mut cur, c, &mut out.warnings);
            out.tokens.push((
                line,
                CodeToken {
                    kind,
                    text: source[start..cur.pos].to_string(),
                    offset: start,
                },
            ));
        }
        out
    }

    fn scan(&self, cur: &mut Cursor<'_>, c: char, warnings: &mut Vec<LexWarning>) -> TokenKind {
        let next = cur.peek_nth(1);
        match c {
            '/' if next == Some('/') => {
                cur.bump_while(|c| c != '\n');
                TokenKind::Comment
            }
            '/' if next == Some('*') => {
                let line = cur.line;
                match cur.rest()[2..].find("*/") {
                    Some(end) => {
                        let target = cur.pos + 2 + end + 2;
                        while cur.pos < target {
                            cur.bump();
                        }
                    }
                    None => {
                        cur.bump_while(|_| true);
                        warn(warnings, line, "unterminated block comment");
                    }
                }
                TokenKind::Comment
            }
            '"' if cur.rest().starts_with("\"\"\"") => {
                let line = cur.line;
                cur.bump();
                cur.bump();
                cur.bump();
                if !scan_quoted(cur, "\"\"\"", true) {
                    warn(warnings, line, "unterminated text block");
                }
                TokenKind::StringLiteral
            }
            '"' | '\'' => {
                let line = cur.line;
                cur.bump();
                let close = if c == '"' { "\"" } else { "'" };
                if !scan_quoted(cur, close, false) {
                    warn(warnings, line, "unterminated literal");
                }
                if c == '"' {
                    TokenKind::StringLiteral
                } else {
                    TokenKind::CharLiteral
                }
            }
            c if c.is_ascii_digit() || (c == '.' && next.is_some_and(|n| n.is_ascii_digit())) => {
                scan_number(cur);
                TokenKind::NumberLiteral
            }
            c if c.is_alphabetic() || c == '_' || c == '$' => {
                let start = cur.pos;
                cur.bump_while(|c| c.is_alphanumeric() || c == '_' || c == '$');
                if self.keywords.contains(&cur.src[start..cur.pos]) {
                    TokenKind::Keyword
                } else {
                    TokenKind::Identifier
                }
            }
            c if SEPARATORS.contains(&c) && !(c == '.' && cur.rest().starts_with("...")) => {
                cur.bump();
                TokenKind::Separator
            }
            _ => {
                let len = self
                    .operators
                    .iter()
                    .find(|op| cur.rest().starts_with(op.as_str()))
                    .map_or(c.len_utf8(), |op| op.len());
                let target = cur.pos + len;
                while cur.pos < target {
                    cur.bump();
                }
                TokenKind::Operator
            }
        }
    }
}

/// Consumes a quoted literal body and its closing delimiter. Single-line
/// literals stop before a newline. Returns false when unterminated.
fn scan_quoted(cur: &mut Cursor<'_>, close: &str, multiline: bool) -> bool {
    loop {
        if cur.rest().starts_with(close) {
            for _ in 0..close.len() {
                cur.bump();
            }
            return true;
        }
        match cur.peek() {
            None => return false,
            Some('\n') if !multiline => return false,
            Some('\\') => {
                cur.bump();
                if cur.peek().is_some_and(|c| c != '\n' || multiline) {
                    cur.bump();
                }
            }
            Some(_) => {
                cur.bump();
            }
        }
    }
}

fn scan_number(cur: &mut Cursor<'_>) {
    let hex = matches!(cur.rest().get(..2), Some("0x" | "0X"));
    let mut prev = '\0';
    let mut seen_dot = false;
    while let Some(c) = cur.peek() {
        let accept = match c {
            c if c.is_ascii_alphanumeric() || c == '_' => true,
            '.' => !seen_dot && !hex && cur.peek_nth(1) != Some('.'),
            '+' | '-' if hex => matches!(prev, 'p' | 'P'),
            '+' | '-' => matches!(prev, 'e' | 'E'),
            _ => false,
        };
        if !accept {
            break;
        }
        seen_dot |= c == '.';
        prev = c;
        cur.bump();
    }
}

fn warn(warnings: &mut Vec<LexWarning>, line_no: usize, message: &str) {
    warnings.push(LexWarning {
        line_no,
        message: message.to_string(),
    });
}

/// Drops identifiers, literals and comments, grouping what remains by line.
/// Lines left empty are omitted.
pub fn clean(tokens: &[(usize, CodeToken)]) -> Vec<SkeletonLine> {
    let mut lines: Vec<SkeletonLine> = Vec::new();
    for (line_no, token) in tokens.iter().filter(|(_, t)| t.kind.is_structural()) {
        match lines.last_mut() {
            Some(last) if last.line_no == *line_no => last.tokens.push(token.text.clone()),
            _ => lines.push(SkeletonLine {
                line_no: *line_no,
                tokens: vec![token.text.clone()],
            }),
        }
    }
    lines
}

/// Rebuilds the source from tokens, copying the whitespace between them from
/// `source`. Returns `None` if any gap holds something other than whitespace.
pub fn reassemble(source: &str, tokens: &[(usize, CodeToken)]) -> Option<String> {
    let mut out = String::with_capacity(source.len());
    let mut pos = 0;
    for (_, token) in tokens {
        let gap = source.get(pos..token.offset)?;
        if !gap.chars().all(char::is_whitespace) {
            return None;
        }
        out.push_str(gap);
        out.push_str(&token.text);
        pos = token.offset + token.text.len();
    }
    let tail = source.get(pos..)?;
    if !tail.chars().all(char::is_whitespace) {
        return None;
    }
    out.push_str(tail);
    Some(out)
}
