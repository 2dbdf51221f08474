#![allow(dead_code)]

use std::io::Read;
use std::path::PathBuf;

use dissalpha::graph::parse_graph6_stream;
use dissalpha::Graph;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Raw text of a corpus file; `.gz` files are decompressed.
pub fn corpus_text(name: &str) -> String {
    let path = data_path(name);
    let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if name.ends_with(".gz") {
        let mut text = String::new();
        flate2::read::GzDecoder::new(&bytes[..])
            .read_to_string(&mut text)
            .expect("valid gzip");
        text
    } else {
        String::from_utf8(bytes).expect("ascii corpus")
    }
}

/// Every graph in a corpus file; any unparsable line is a test failure.
pub fn corpus(name: &str) -> Vec<Graph> {
    parse_graph6_stream(&corpus_text(name))
        .into_iter()
        .map(|(line, g)| g.unwrap_or_else(|e| panic!("{name} line {line}: {e}")))
        .collect()
}

pub const CUBIC_ORDERS: [usize; 6] = [6, 8, 10, 12, 14, 16];
/// Connected cubic graphs of orders 6..16 (OEIS A002851).
pub const CUBIC_COUNTS: [usize; 6] = [2, 5, 19, 85, 509, 4060];

pub fn cubic_corpus(n: usize) -> Vec<Graph> {
    corpus(&format!("cubic_n{n}.g6"))
}

/// All connected subcubic graphs with 1..=9 vertices: built-in enumeration up
/// to 7, corpus files for 8 and 9.
pub fn subcubic_connected_upto9() -> Vec<Graph> {
    use dissalpha::survey::{enumerate_graphs, EnumFilter};
    let filter = EnumFilter {
        connected: true,
        max_degree: Some(3),
    };
    let mut all = Vec::new();
    for n in 1..=7 {
        all.extend(enumerate_graphs(n, filter).unwrap());
    }
    all.extend(corpus("subcubic_connected_n8.g6"));
    all.extend(corpus("subcubic_connected_n9.g6"));
    all
}
