//! graph6 text format, strict on input.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn push_n(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n < 1 << 18, "graph6 supports at most 258047 vertices");
    let mut out = Vec::new();
    push_n(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and a single
/// trailing newline are accepted; anything else malformed is an error,
/// including nonzero padding bits.
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let text = text
        .strip_suffix('\n')
        .map(|t| t.strip_suffix('\r').unwrap_or(t))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Err(Error::Graph6(msg));
    if bytes.is_empty() {
        return bad("empty input".into());
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return bad(format!("byte {} at offset {pos} outside 63..=126", bytes[pos]));
    }
    let (n, mut pos) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return bad("graphs with more than 258047 vertices are not supported".into());
        }
        if bytes.len() < 4 {
            return bad("truncated vertex count".into());
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return bad(format!("non-canonical vertex count {n}"));
        }
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return bad(format!("expected {need} data bytes, found {}", bytes.len() - pos));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return bad("nonzero padding bits".into());
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    #[test]
    fn small_encodings() {
        assert_eq!(encode(&NamedGraph::Complete(2).build().unwrap()), "A_");
        let g = decode("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        let c4 = NamedGraph::Cycle(4).build().unwrap();
        let s = encode(&c4);
        assert_eq!(s, "Cl");
        assert_eq!(decode(&s).unwrap(), c4);
        assert_eq!(encode(&Graph::empty(0)), "?");
        let p = NamedGraph::Petersen.build().unwrap();
        assert_eq!(decode(&encode(&p)).unwrap(), p);
    }

    #[test]
    fn large_vertex_count() {
        let g = NamedGraph::Cycle(100).build().unwrap();
        let s = encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn strictness() {
        assert!(decode("").is_err());
        assert!(decode("A_x").is_err());
        assert!(decode("A").is_err());
        assert!(decode("A ").is_err());
        // one edge bit followed by a set padding bit
        assert!(decode("A`").is_err());
        assert!(decode("A_\n").is_ok());
        assert!(decode(">>graph6<<A_").is_ok());
    }
}
