//! Lexicon + heuristic part-of-speech tagging for question titles.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::corpus::text::{data_lines, default_preprocessor};
use crate::corpus::{Reject, TokenizedText};
use crate::error::{Error, Result};

const BUNDLED_LEXICON: &str = include_str!("../data/lexicon.tsv");

macro_rules! pos_tags {
    ($($variant:ident => $symbol:literal),* $(,)?) => {
        /// Penn Treebank tag inventory.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PosTag {
            $($variant),*
        }

        impl PosTag {
            pub const ALL: &'static [PosTag] = &[$(PosTag::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(PosTag::$variant => $symbol),*
                }
            }
        }

        impl FromStr for PosTag {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($symbol => Ok(PosTag::$variant),)*
                    other => Err(Error::UnknownTag(other.to_string())),
                }
            }
        }
    };
}

pos_tags! {
    Cc => "CC", Cd => "CD", Dt => "DT", Ex => "EX", Fw => "FW", In => "IN",
    Jj => "JJ", Jjr => "JJR", Jjs => "JJS", Ls => "LS", Md => "MD",
    Nn => "NN", Nns => "NNS", Nnp => "NNP", Nnps => "NNPS", Pdt => "PDT",
    Pos => "POS", Prp => "PRP", PrpS => "PRP$", Rb => "RB", Rbr => "RBR",
    Rbs => "RBS", Rp => "RP", Sym => "SYM", To => "TO", Uh => "UH",
    Vb => "VB", Vbd => "VBD", Vbg => "VBG", Vbn => "VBN", Vbp => "VBP",
    Vbz => "VBZ", Wdt => "WDT", Wp => "WP", WpS => "WP$", Wrb => "WRB",
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for PosTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PosTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedToken {
    pub surface: String,
    pub lemma: String,
    pub tag: PosTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedTitle {
    pub post_id: u64,
    pub tokens: Vec<TaggedToken>,
}

impl TaggedTitle {
    pub fn tags(&self) -> impl Iterator<Item = PosTag> + '_ {
        self.tokens.iter().map(|t| t.tag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LexEntry {
    Fixed(PosTag),
    /// Verb/noun homograph, resolved from the previous tag.
    VerbOrNoun,
}

#[derive(Debug, Clone)]
pub struct PosTagger {
    lexicon: HashMap<String, LexEntry>,
}

impl Default for PosTagger {
    fn default() -> Self {
        let mut tagger = PosTagger {
            lexicon: HashMap::new(),
        };
        tagger.load_lexicon(BUNDLED_LEXICON).expect("bundled lexicon is valid");
        tagger
    }
}

impl PosTagger {
    /// Bundled lexicon with entries from `overrides` (`word<TAB>TAG` lines)
    /// layered on top.
    pub fn with_overrides(overrides: &str) -> Result<Self> {
        let mut tagger = Self::default();
        tagger.load_lexicon(overrides)?;
        Ok(tagger)
    }

    fn load_lexicon(&mut self, table: &str) -> Result<()> {
        for (no, line) in data_lines(table) {
            let (word, tag) = line
                .split_once('\t')
                .ok_or_else(|| Error::malformed("lexicon", format!("line {no}: expected word<TAB>TAG")))?;
            let entry = match tag.trim() {
                "VB,NN" => LexEntry::VerbOrNoun,
                tag => LexEntry::Fixed(tag.parse()?),
            };
            self.lexicon.insert(word.trim().to_lowercase(), entry);
        }
        Ok(())
    }

    pub fn tag_title(&self, post_id: u64, title: &TokenizedText) -> Result<TaggedTitle> {
        if title.is_empty() {
            return Err(Error::EmptyTitle);
        }
        let mut tokens: Vec<TaggedToken> = Vec::with_capacity(title.len());
        for token in &title.tokens {
            let prev = tokens.last().map(|t| t.tag);
            let word = token.surface.to_lowercase();
            let tag = self.tag_word(&word, &token.lemma, prev);
            tokens.push(TaggedToken {
                surface: token.surface.clone(),
                lemma: token.lemma.clone(),
                tag,
            });
        }
        Ok(TaggedTitle { post_id, tokens })
    }

    fn tag_word(&self, word: &str, lemma: &str, prev: Option<PosTag>) -> PosTag {
        match self.lexicon.get(word) {
            Some(LexEntry::Fixed(tag)) => return *tag,
            Some(LexEntry::VerbOrNoun) => {
                return match prev {
                    None | Some(PosTag::To | PosTag::Md | PosTag::Wrb | PosTag::Rb | PosTag::Prp) => PosTag::Vb,
                    Some(_) => PosTag::Nn,
                }
            }
            None => {}
        }
        let inflected = lemma != word;
        if word.starts_with(|c: char| c.is_ascii_digit()) {
            PosTag::Cd
        } else if inflected && word.ends_with("ing") {
            PosTag::Vbg
        } else if inflected && word.ends_with("ed") {
            PosTag::Vbd
        } else if word.len() >= 5 && word.ends_with("ly") {
            PosTag::Rb
        } else if inflected && word.ends_with('s') {
            PosTag::Nns
        } else {
            PosTag::Nn
        }
    }
}

/// Reads externally tagged titles: `post_id<TAB>word/TAG word/TAG ...`.
pub fn load_pretagged<R: BufRead>(source: R) -> Result<(Vec<TaggedTitle>, Vec<Reject>)> {
    let pre = default_preprocessor();
    let mut titles = Vec::new();
    let mut rejects = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = i + 1;
        match parse_pretagged_line(&line, |w| pre.lemma(w)) {
            Ok(title) => titles.push(title),
            Err(reason) => rejects.push(Reject { row, reason }),
        }
    }
    Ok((titles, rejects))
}

fn parse_pretagged_line(line: &str, lemma: impl Fn(&str) -> String) -> std::result::Result<TaggedTitle, String> {
    let (id, rest) = line.split_once('\t').ok_or("expected post_id<TAB>tokens")?;
    let post_id = id.trim().parse::<u64>().map_err(|_| format!("bad post id `{id}`"))?;
    let tokens = rest
        .split_whitespace()
        .map(|pair| {
            let (word, tag) = pair
                .rsplit_once('/')
                .ok_or_else(|| format!("token `{pair}` lacks /TAG"))?;
            if word.is_empty() {
                return Err(format!("token `{pair}` has empty word"));
            }
            let tag = tag.parse::<PosTag>().map_err(|e| e.to_string())?;
            Ok(TaggedToken {
                surface: word.to_string(),
                lemma: lemma(&word.to_lowercase()),
                tag,
            })
        })
        .collect::<std::result::Result<Vec<_>, String>>()?;
    if tokens.is_empty() {
        return Err("no tokens".into());
    }
    Ok(TaggedTitle { post_id, tokens })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::preprocess;
    use proptest::prelude::*;

    fn tags(title: &str) -> Vec<&'static str> {
        PosTagger::default()
            .tag_title(1, &preprocess(title))
            .unwrap()
            .tags()
            .map(PosTag::as_str)
            .collect()
    }

    #[test]
    fn object_in_an_array_of_objects() {
        assert_eq!(
            tags("object in an array of objects"),
            ["NN", "IN", "DT", "NN", "IN", "NNS"]
        );
    }

    #[test]
    fn determiner_and_gerund() {
        assert_eq!(tags("the"), ["DT"]);
        assert_eq!(tags("running"), ["VBG"]);
        assert_eq!(tags("How what"), ["WRB", "WP"]);
    }

    #[test]
    fn homographs_follow_context() {
        assert_eq!(tags("how to sort a list"), ["WRB", "TO", "VB", "DT", "NN"]);
        assert_eq!(tags("a simple sort"), ["DT", "JJ", "NN"]);
    }

    #[test]
    fn empty_title_is_an_error() {
        assert!(matches!(
            PosTagger::default().tag_title(1, &preprocess("?!")),
            Err(Error::EmptyTitle)
        ));
    }

    #[test]
    fn lexicon_override() {
        let tagger = PosTagger::with_overrides("array\tNNP\n").unwrap();
        let t = tagger.tag_title(1, &preprocess("array")).unwrap();
        assert_eq!(t.tokens[0].tag, PosTag::Nnp);
        assert!(PosTagger::with_overrides("array\tXX\n").is_err());
    }

    #[test]
    fn pretagged_parsing() {
        let (titles, rejects) = load_pretagged("12\tarray/NN of/IN objects/NNS\n13\tarray/XX\n".as_bytes()).unwrap();
        assert_eq!(titles.len(), 1);
        assert_eq!(titles[0].post_id, 12);
        assert_eq!(titles[0].tokens.len(), 3);
        assert_eq!(titles[0].tokens[2].lemma, "object");
        assert_eq!(rejects.len(), 1);
        assert_eq!(rejects[0].row, 2);
        assert!(rejects[0].reason.contains("XX"));

        let (titles, rejects) = load_pretagged("".as_bytes()).unwrap();
        assert!(titles.is_empty() && rejects.is_empty());
    }

    #[test]
    fn tag_symbols_round_trip() {
        for tag in PosTag::ALL {
            assert_eq!(tag.as_str().parse::<PosTag>().unwrap(), *tag);
        }
    }

    #[test]
    fn gold_fixture_accuracy() {
        let gold = include_str!("../fixtures/pos_gold.tsv");
        let (titles, rejects) = load_pretagged(gold.as_bytes()).unwrap();
        assert!(rejects.is_empty());
        let tagger = PosTagger::default();
        let (mut total, mut correct) = (0, 0);
        for title in &titles {
            let text = title
                .tokens
                .iter()
                .map(|t| t.surface.as_str())
                .collect::<Vec<_>>()
                .join(" ");
            let predicted = tagger.tag_title(title.post_id, &preprocess(&text)).unwrap();
            assert_eq!(predicted.tokens.len(), title.tokens.len());
            for (p, g) in predicted.tokens.iter().zip(&title.tokens) {
                total += 1;
                if p.tag == g.tag {
                    correct += 1;
                }
            }
        }
        assert_eq!(total, 200);
        let accuracy = correct as f64 / total as f64;
        assert!(accuracy >= 0.90, "accuracy {accuracy}");
    }

    proptest! {
        #[test]
        fn one_tag_per_token(title in "[a-z]{1,8}( [a-z]{1,8}){0,8}") {
            let tagger = PosTagger::default();
            let text = preprocess(&title);
            let tagged = tagger.tag_title(1, &text).unwrap();
            prop_assert_eq!(tagged.tokens.len(), text.len());
            prop_assert_eq!(tagged.clone(), tagger.tag_title(1, &text).unwrap());
        }
    }
}
