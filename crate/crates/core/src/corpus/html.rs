//! Just enough HTML handling for Q&A post bodies: pull out `<pre><code>` blocks,
//! strip the remaining tags, decode character references.

use std::borrow::Cow;
use std::sync::LazyLock;

use quick_xml::escape::resolve_html5_entity;
use regex::Regex;

static CODE_BLOCK: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?is)<pre(?:\s[^>]*)?>\s*<code(?:\s[^>]*)?>(.*?)</code>\s*</pre>").unwrap());

static TAG: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"(?s)</?[A-Za-z][^<>]*>").unwrap());

/// A post body split into plain text and decoded code blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitBody {
    pub text: String,
    pub code_blocks: Vec<String>,
}

/// Splits an HTML body into prose and code. Block boundaries are found on the
/// still-escaped markup, so escaped text such as `&lt;code&gt;` never opens a
/// block.
pub fn split_body(html: &str) -> SplitBody {
    let mut text = String::with_capacity(html.len());
    let mut code_blocks = Vec::new();
    let mut last = 0;
    for caps in CODE_BLOCK.captures_iter(html) {
        let whole = caps.get(0).unwrap();
        text.push_str(&strip_tags(&html[last..whole.start()]));
        text.push('\n');
        code_blocks.push(decode_entities(caps.get(1).unwrap().as_str()).into_owned());
        last = whole.end();
    }
    text.push_str(&strip_tags(&html[last..]));
    SplitBody {
        text: normalize_space(&decode_entities(&text)),
        code_blocks,
    }
}

fn strip_tags(html: &str) -> Cow<'_, str> {
    TAG.replace_all(html, " ")
}

fn normalize_space(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Lenient character-reference decoding. Unknown or malformed references are
/// kept literally.
pub fn decode_entities(input: &str) -> Cow<'_, str> {
    if !input.contains('&') {
        return Cow::Borrowed(input);
    }
    let mut out = String::with_capacity(input.len());
    let mut rest = input;
    while let Some(amp) = rest.find('&') {
        out.push_str(&rest[..amp]);
        let tail = &rest[amp..];
        // entity names are short; bound the search so a stray `&` is cheap
        let end = tail[1..]
            .char_indices()
            .take(32)
            .find(|&(_, c)| c == ';' || c == '&' || c.is_whitespace())
            .filter(|&(_, c)| c == ';')
            .map(|(i, _)| i + 1);
        match end.and_then(|end| resolve(&tail[1..end]).map(|r| (end, r))) {
            Some((end, replacement)) => {
                out.push_str(&replacement);
                rest = &tail[end + 1..];
            }
            None => {
                out.push('&');
                rest = &tail[1..];
            }
        }
    }
    out.push_str(rest);
    Cow::Owned(out)
}

fn resolve(name: &str) -> Option<Cow<'static, str>> {
    if let Some(num) = name.strip_prefix('#') {
        let code = match num.strip_prefix(['x', 'X']) {
            Some(hex) => u32::from_str_radix(hex, 16).ok()?,
            None => num.parse::<u32>().ok()?,
        };
        return char::from_u32(code).map(|c| Cow::Owned(c.to_string()));
    }
    resolve_html5_entity(name).map(Cow::Borrowed)
}
