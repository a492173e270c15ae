use std::collections::BTreeSet;
use std::io::BufRead;

use quick_xml::events::{BytesStart, Event};
use quick_xml::{Reader, XmlVersion};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::html::split_body;
use super::{CodeSnippet, Post, PostType};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpFormat {
    /// `<row Id=".." PostTypeId=".." .../>` elements, one per line.
    XmlRows,
    JsonLines,
}

impl DumpFormat {
    /// Guesses from a file extension: `.jsonl`/`.json` are JSON lines,
    /// anything else is XML.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl" | "json" | "ndjson") => DumpFormat::JsonLines,
            _ => DumpFormat::XmlRows,
        }
    }
}

/// A row that could not be turned into a post.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reject {
    /// 1-based ordinal of the row within the dump.
    pub row: usize,
    pub reason: String,
}

#[derive(Debug, Default, Clone)]
pub struct DumpParse {
    pub posts: Vec<Post>,
    pub rejects: Vec<Reject>,
}

/// Raw fields of one dump row before validation.
#[derive(Debug, Default)]
struct RawRow {
    id: Option<String>,
    post_type: Option<String>,
    parent_id: Option<String>,
    title: Option<String>,
    body: Option<String>,
    tags: Vec<String>,
}

/// Parses a dump. Only I/O failures are fatal; damaged rows are collected in
/// [`DumpParse::rejects`] and parsing carries on.
pub fn parse_dump<R: BufRead>(source: R, format: DumpFormat) -> Result<DumpParse> {
    let mut out = DumpParse::default();
    let mut ordinal = 0;
    for line in source.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let rows = match format {
            DumpFormat::XmlRows => {
                if !trimmed.contains("<row") {
                    // xml declaration, root element open/close
                    continue;
                }
                xml_rows(trimmed)
            }
            DumpFormat::JsonLines => vec![json_row(trimmed)],
        };
        for row in rows {
            ordinal += 1;
            match row.and_then(into_post) {
                Ok(Some(post)) => out.posts.push(post),
                Ok(None) => {}
                Err(reason) => out.rejects.push(Reject { row: ordinal, reason }),
            }
        }
    }
    Ok(out)
}

fn xml_rows(line: &str) -> Vec<Result<RawRow, String>> {
    let mut reader = Reader::from_str(line);
    // a line is a fragment; the root element is usually opened elsewhere
    reader.config_mut().check_end_names = false;
    let mut rows = Vec::new();
    loop {
        match reader.read_event() {
            Ok(Event::Empty(e)) | Ok(Event::Start(e)) if e.name().as_ref() == "row" => {
                rows.push(xml_attributes(&e));
            }
            Ok(Event::Eof) => break,
            Ok(_) => {}
            Err(e) => {
                rows.push(Err(format!("xml: {e}")));
                break;
            }
        }
    }
    if rows.is_empty() {
        rows.push(Err("no row element".into()));
    }
    rows
}

fn xml_attributes(e: &BytesStart<'_>) -> Result<RawRow, String> {
    let mut row = RawRow::default();
    for attr in e.attributes() {
        let attr = attr.map_err(|e| format!("attribute: {e}"))?;
        let value = attr
            .normalized_value(XmlVersion::Implicit1_0)
            .map_err(|e| format!("attribute value: {e}"))?
            .into_owned();
        match attr.key.as_ref() {
            "Id" => row.id = Some(value),
            "PostTypeId" => row.post_type = Some(value),
            "ParentId" => row.parent_id = Some(value),
            "Title" => row.title = Some(value),
            "Body" => row.body = Some(value),
            "Tags" => row.tags = split_tags(&value),
            _ => {}
        }
    }
    Ok(row)
}

/// Accepts both `<java><arrays>` and `|java|arrays|` tag encodings.
fn split_tags(raw: &str) -> Vec<String> {
    raw.split(['<', '>', '|'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

fn json_row(line: &str) -> Result<RawRow, String> {
    let value: Value = serde_json::from_str(line).map_err(|e| format!("json: {e}"))?;
    let obj = value.as_object().ok_or("json: row is not an object")?;
    let scalar = |key: &str| -> Option<String> {
        match obj.get(key)? {
            Value::String(s) => Some(s.clone()),
            Value::Number(n) => Some(n.to_string()),
            _ => None,
        }
    };
    let post_type = match obj.get("type") {
        Some(Value::String(s)) if s.eq_ignore_ascii_case("question") => Some("1".to_string()),
        Some(Value::String(s)) if s.eq_ignore_ascii_case("answer") => Some("2".to_string()),
        _ => scalar("type"),
    };
    let tags = match obj.get("tags") {
        Some(Value::Array(items)) => items
            .iter()
            .map(|t| t.as_str().map(str::to_lowercase).ok_or("json: non-string tag"))
            .collect::<Result<Vec<_>, _>>()?,
        Some(Value::String(s)) => split_tags(s),
        None | Some(Value::Null) => Vec::new(),
        Some(_) => return Err("json: tags must be an array".into()),
    };
    Ok(RawRow {
        id: scalar("id"),
        post_type,
        parent_id: scalar("parent_id"),
        title: scalar("title"),
        body: scalar("body"),
        tags,
    })
}

fn into_post(row: RawRow) -> Result<Option<Post>, String> {
    let post_type = match row.post_type.as_deref().map(str::trim) {
        Some("1") => PostType::Question,
        Some("2") => PostType::Answer,
        Some(other) if other.parse::<u32>().is_ok() => return Ok(None),
        Some(other) => return Err(format!("bad PostTypeId `{other}`")),
        None => return Err("missing PostTypeId".into()),
    };
    let id = parse_id(row.id.as_deref(), "Id")?;
    let parent_id = match (post_type, row.parent_id.as_deref()) {
        (PostType::Answer, p) => Some(parse_id(p, "ParentId")?),
        (PostType::Question, _) => None,
    };
    let split = split_body(row.body.as_deref().unwrap_or(""));
    let snippets = split
        .code_blocks
        .into_iter()
        .filter(|c| !c.trim().is_empty())
        .enumerate()
        .map(|(ordinal, raw_text)| CodeSnippet {
            post_id: id,
            ordinal,
            raw_text,
        })
        .collect();
    let post = Post {
        id,
        post_type,
        parent_id,
        title: match post_type {
            PostType::Question => row.title.map(|t| t.trim().to_string()),
            PostType::Answer => None,
        },
        body_text: split.text,
        tags: row.tags.into_iter().collect::<BTreeSet<_>>(),
        snippets,
    };
    post.validate()?;
    Ok(Some(post))
}

fn parse_id(raw: Option<&str>, field: &str) -> Result<u64, String> {
    let raw = raw.ok_or_else(|| format!("missing {field}"))?;
    match raw.trim().parse::<u64>() {
        Ok(0) | Err(_) => Err(format!("bad {field} `{raw}`")),
        Ok(id) => Ok(id),
    }
}
