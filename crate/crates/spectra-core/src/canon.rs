//! Canonical forms for small graphs (n ≤ 16): iterated color refinement
//! plus individualization backtracking, minimizing the upper-triangle
//! adjacency bitstring. Used for isomorphism dedup during enumeration.

use crate::graph::Graph;

const MAX_N: usize = 16;

fn adjacency_rows(g: &Graph) -> Vec<u32> {
    let mut rows = vec![0u32; g.n()];
    for &(a, b) in g.edges() {
        rows[a] |= 1 << b;
        rows[b] |= 1 << a;
    }
    rows
}

/// Stable color refinement: repeatedly split color classes by the multiset
/// of neighbor colors until stable. Colors are normalized so the class
/// containing the smallest signature gets color 0, etc.
fn refine(rows: &[u32], colors: &mut Vec<usize>) {
    let n = rows.len();
    loop {
        // Signature: (old color, sorted neighbor colors).
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = (0..n)
                .filter(|&w| rows[v] >> w & 1 == 1)
                .map(|w| colors[w])
                .collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut uniq: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let new_count = uniq.len();
        let old_count = colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut new_colors = Vec::with_capacity(n);
        for v in 0..n {
            let c = uniq.binary_search(&&sigs[v]).unwrap();
            new_colors.push(c);
        }
        *colors = new_colors;
        if new_count == old_count {
            return;
        }
    }
}

/// Upper-triangle adjacency bits of the graph relabeled so vertex v goes to
/// position pos[v]; bit index for positions i<j is j(j-1)/2 + i.
fn key_under_positions(rows: &[u32], pos: &[usize]) -> u128 {
    let n = rows.len();
    let mut key = 0u128;
    for v in 0..n {
        for w in (v + 1)..n {
            if rows[v] >> w & 1 == 1 {
                let (i, j) = if pos[v] < pos[w] {
                    (pos[v], pos[w])
                } else {
                    (pos[w], pos[v])
                };
                key |= 1 << (j * (j - 1) / 2 + i);
            }
        }
    }
    key
}

fn search(rows: &[u32], colors: Vec<usize>, best: &mut Option<u128>) {
    let n = rows.len();
    let mut colors = colors;
    refine(rows, &mut colors);
    // Find the first non-singleton cell (smallest color).
    let mut cell_count = vec![0usize; n];
    for &c in &colors {
        cell_count[c] += 1;
    }
    let split = (0..n).find(|&c| cell_count[c] > 1);
    match split {
        None => {
            // Discrete: the color is the position.
            let key = key_under_positions(rows, &colors);
            if best.map_or(true, |b| key < b) {
                *best = Some(key);
            }
        }
        Some(c) => {
            for v in 0..n {
                if colors[v] != c {
                    continue;
                }
                // Individualize v within its cell.
                let mut child: Vec<usize> = colors.iter().map(|&x| x * 2 + 1).collect();
                child[v] -= 1;
                search(rows, child, best);
            }
        }
    }
}

/// Canonical key: minimum upper-triangle adjacency bitstring over all
/// labelings compatible with the refinement search tree. Equal keys iff
/// isomorphic (for graphs on the same vertex count).
pub fn canonical_key(g: &Graph) -> u128 {
    assert!(g.n() <= MAX_N, "canonical form supports n <= {MAX_N}");
    let rows = adjacency_rows(g);
    let mut best = None;
    search(&rows, vec![0; g.n()], &mut best);
    best.expect("search visits at least one leaf")
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_key(a) == canonical_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family, Graph};

    #[test]
    fn path_relabelings_agree() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        // A scrambled P_4: 2-0-3-1.
        let q = Graph::new(4, vec![(0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(is_isomorphic(&p4, &q));
    }

    #[test]
    fn distinguishes_star_and_path() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        let s4 = make_family(&Family::Star(4)).unwrap();
        assert!(!is_isomorphic(&p4, &s4));
    }

    #[test]
    fn handles_high_symmetry() {
        let k33 = make_family(&Family::CompleteBipartite(3, 3)).unwrap();
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        assert!(!is_isomorphic(&k33, &c6));
        assert_eq!(canonical_key(&k33), canonical_key(&k33));
    }

    #[test]
    fn key_is_invariant_under_permutation() {
        // C_5 with two different labelings.
        let a = make_family(&Family::Cycle(5)).unwrap();
        let b = Graph::new(5, vec![(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }
}
