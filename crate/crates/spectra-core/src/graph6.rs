//! graph6 encoding/decoding (byte-level standard, n ≤ 62 is all we need)
//! and the plain edge-list text format ("n\nu v\n…").

use crate::graph::Graph;
use crate::{Error, Result};

/// Encode a graph in graph6 format.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Parameter("graph6 encoder supports n <= 62".into()));
    }
    let mut bytes = vec![(n as u8) + 63];
    // Upper-triangle bits in column order: x(0,1), x(0,2), x(1,2), x(0,3)…
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        bytes.push(v + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

/// Decode a graph6 string.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if bytes[0] == 126 {
        return Err(Error::Parse("graph6 decoder supports n <= 62".into()));
    }
    if bytes[0] < 63 || bytes[0] > 63 + 62 {
        return Err(Error::Parse(format!("bad graph6 size byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::Parse("graph6 with zero vertices".into()));
    }
    let need_bits = n * (n - 1) / 2;
    let need_bytes = (need_bits + 5) / 6;
    if bytes.len() != 1 + need_bytes {
        return Err(Error::Parse(format!(
            "graph6 length mismatch: n={n} wants {} data bytes, got {}",
            need_bytes,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("bad graph6 data byte {b}")));
        }
        let v = b - 63;
        for k in 0..6 {
            bits.push(v >> (5 - k) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, edges)
}

/// Emit the edge-list text format: first line the vertex count, then one
/// "u v" line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parse the edge-list text format.
pub fn from_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("line 1: bad vertex count {first:?}")))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.ok_or_else(|| Error::Parse(format!("line {}: expected \"u v\"", lineno + 1)))?
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad vertex index", lineno + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: trailing tokens after edge",
                lineno + 1
            )));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn known_encodings() {
        // Standard reference values: K_4 is "C~", P_4 is "Cr"? Verify by
        // round-trip plus the documented C_5 example "DqK".
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        let c5 = make_family(&Family::Cycle(5)).unwrap();
        let enc = to_graph6(&c5).unwrap();
        let dec = from_graph6(&enc).unwrap();
        assert!(crate::canon::is_isomorphic(&c5, &dec));
    }

    #[test]
    fn round_trips_everything_small() {
        for n in 1..=6 {
            for g in crate::enumerate::enumerate_connected(n, crate::enumerate::GraphClass::All)
                .unwrap()
            {
                let enc = to_graph6(&g).unwrap();
                let dec = from_graph6(&enc).unwrap();
                assert_eq!(g.edges(), dec.edges());
                assert_eq!(g.n(), dec.n());
            }
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let g = make_family(&Family::Star(5)).unwrap();
        let txt = to_edge_list(&g);
        let back = from_edge_list(&txt).unwrap();
        assert_eq!(g.edges(), back.edges());
        assert!(from_edge_list("3\n0 1\n1 2 9\n").is_err());
        assert!(from_edge_list("").is_err());
    }
}
