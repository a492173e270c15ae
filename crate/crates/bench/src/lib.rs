//! Fixture loading shared by the benchmarks.

use std::fs;
use std::path::{Path, PathBuf};

use conceptmap::corpus::{parse_dump, DumpFormat};
use conceptmap::Post;

pub fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(rel)
}

/// All Java sources in the lexer fixture directory, sorted by name.
pub fn java_sources() -> Vec<String> {
    let mut paths: Vec<PathBuf> = fs::read_dir(fixture("lexer"))
        .expect("lexer fixtures")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "java"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| fs::read_to_string(p).expect("utf-8 source"))
        .collect()
}

pub fn posts(rel: &str) -> Vec<Post> {
    let file = fs::File::open(fixture(rel)).expect("dump fixture");
    parse_dump(std::io::BufReader::new(file), DumpFormat::XmlRows)
        .expect("parses")
        .posts
}
