//! graph6 codec, plus sparse6 input.
//!
//! Layout: a size field `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant bit first, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";
/// Largest order accepted by the codec.
pub const MAX_ORDER: usize = 1 << 18;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn payload(bytes: &[u8], at: usize) -> Result<u8> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(parse_err(at, format!("non-printable payload byte 0x{b:02x}"))),
        None => Err(parse_err(at, "record truncated")),
    }
}

/// Decodes `N(n)`; returns `(n, bytes consumed)`.
fn decode_size(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let first = *bytes
        .get(start)
        .ok_or_else(|| parse_err(start, "missing length prefix"))?;
    if (63..=125).contains(&first) {
        return Ok(((first - 63) as usize, 1));
    }
    if first != 126 {
        return Err(parse_err(start, format!("malformed length prefix byte 0x{first:02x}")));
    }
    let (width, skip) = if bytes.get(start + 1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    let mut n = 0usize;
    for i in 0..width {
        let at = start + skip + i;
        let b = payload(bytes, at).map_err(|_| parse_err(at, "malformed length prefix"))?;
        n = (n << 6) | b as usize;
    }
    if n > MAX_ORDER {
        return Err(parse_err(start, format!("order {n} exceeds {MAX_ORDER}")));
    }
    Ok((n, skip + width))
}

fn encode_size(n: usize, out: &mut String) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    Ok(())
}

fn strip_line(text: &str) -> &str {
    text.trim_end_matches(['\n', '\r'])
}

/// Parses one graph6 record. A leading `>>graph6<<` header is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = strip_line(text);
    let start = if line.starts_with(GRAPH6_HEADER) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let bytes = line.as_bytes();
    let (n, used) = decode_size(bytes, start)?;
    let data = start + used;
    let bits = n * n.saturating_sub(1) / 2;
    let len = bits.div_ceil(6);
    if bytes.len() > data + len {
        return Err(parse_err(data + len, "trailing garbage after record"));
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let at = data + k / 6;
            let byte = payload(bytes, at)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
            k += 1;
        }
    }
    // payload bytes holding only padding still have to be printable
    for at in data + k.div_ceil(6)..data + len {
        payload(bytes, at)?;
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out)?;
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one sparse6 record (`:` prefix). Loops are rejected; repeated
/// edges collapse.
pub fn parse_sparse6(text: &str) -> Result<Graph> {
    let line = strip_line(text);
    let start = if line.starts_with(SPARSE6_HEADER) {
        SPARSE6_HEADER.len()
    } else {
        0
    };
    let bytes = line.as_bytes();
    match bytes.get(start) {
        Some(b':') => {}
        Some(b';') => return Err(parse_err(start, "incremental sparse6 is not supported")),
        _ => return Err(parse_err(start, "sparse6 record must start with ':'")),
    }
    let (n, used) = decode_size(bytes, start + 1)?;
    let data = start + 1 + used;
    let width = if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    } as usize;

    let mut bits = Vec::with_capacity((bytes.len() - data) * 6);
    for at in data..bytes.len() {
        let b = payload(bytes, at)?;
        bits.extend((0..6).rev().map(|i| (b >> i) & 1 == 1));
    }
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + width <= bits.len() {
        let step = bits[pos];
        let x = bits[pos + 1..pos + 1 + width]
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | b as usize);
        pos += 1 + width;
        if step {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return Err(parse_err(data + pos / 6, format!("loop at vertex {v}")));
            }
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, &edges)
}

fn parse_any(line: &str) -> Result<Graph> {
    let body = line.strip_prefix(SPARSE6_HEADER).unwrap_or(line);
    if body.starts_with(':') || body.starts_with(';') {
        parse_sparse6(line)
    } else {
        parse_graph6(line)
    }
}

/// Parses a stream of records, one per line, accepting graph6 and sparse6.
/// Blank lines are skipped; a header-only first line is allowed. Each entry
/// carries its 1-based line number so failures can be reported without
/// disturbing neighbouring records.
pub fn parse_graph6_stream(text: &str) -> Vec<(usize, Result<Graph>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if i == 0 && (line == GRAPH6_HEADER || line == SPARSE6_HEADER) {
            continue;
        }
        out.push((i + 1, parse_any(line)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_cycle};

    #[test]
    fn k1_and_k4() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(encode_graph6(&k1).unwrap(), "@");

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, gen_complete(4).unwrap());
        assert_eq!(encode_graph6(&gen_complete(4).unwrap()).unwrap(), "C~");
    }

    #[test]
    fn empty_graph() {
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn c5_is_three_bytes() {
        let s = encode_graph6(&gen_cycle(5).unwrap()).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(parse_graph6(&s).unwrap().degrees(), vec![2; 5]);
    }

    #[test]
    fn header_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Parse { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("C\x07") {
            Err(Error::Parse { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("\x10") {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("~?") {
            Err(Error::Parse { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D").is_err());
    }

    #[test]
    fn long_form_size() {
        let g = gen_cycle(70).unwrap();
        let s = encode_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert!(encode_graph6(&Graph::empty(MAX_ORDER + 1)).is_err());
    }

    #[test]
    fn sparse6_example() {
        // the worked example from the format description: n = 7,
        // edges 0-1 0-2 1-2 5-6
        let g = parse_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
    }

    #[test]
    fn stream_isolates_failures() {
        let text = ">>graph6<<\nC~\nbad!\n\n@\n";
        let recs = parse_graph6_stream(text);
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].0, 2);
        assert!(recs[0].1.is_ok());
        assert_eq!(recs[1].0, 3);
        assert!(recs[1].1.is_err());
        assert_eq!(recs[2].1.as_ref().unwrap().n(), 1);
    }
}
