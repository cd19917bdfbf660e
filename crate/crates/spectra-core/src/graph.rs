//! Simple undirected graphs with optional positive rational edge weights,
//! the named graph families, and the structural transformations used by the
//! verification suites (bipartite reduction, subdivision, line graph,
//! vertex/edge deletion, pendant-arm tree shifts).

use crate::poly::Rat;
use crate::{Error, Result};
use num_traits::{One, Signed};
use std::collections::BTreeMap;

pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    weights: Option<BTreeMap<Edge, Rat>>,
}

/// A fixed 2-coloring of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// An even cycle with pendant leaves attached at some cycle positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunSpec {
    pub cycle_len: usize,
    pub loaded: Vec<usize>,
}

impl SunSpec {
    pub fn new(cycle_len: usize, loaded: Vec<usize>) -> Result<Self> {
        if cycle_len < 4 || cycle_len % 2 != 0 {
            return Err(Error::Parameter(format!(
                "sun cycle length must be even and >= 4, got {cycle_len}"
            )));
        }
        let mut loaded = loaded;
        loaded.sort_unstable();
        loaded.dedup();
        if loaded.iter().any(|&p| p >= cycle_len) {
            return Err(Error::Parameter(
                "loaded position outside the cycle".into(),
            ));
        }
        Ok(SunSpec { cycle_len, loaded })
    }

    /// Sparse 3-separated: loaded positions at pairwise cyclic distance >= 3.
    pub fn is_three_separated(&self) -> bool {
        let l = self.cycle_len;
        for (i, &a) in self.loaded.iter().enumerate() {
            for &b in &self.loaded[i + 1..] {
                let d = (b - a).min(l - (b - a));
                if d < 3 {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Sun(SunSpec),
}

/// One pendant-arm shift: the two arms hang at `v` as pendant paths; the
/// shift deletes the edge v–b[0] and adds the edge a[last]–b[0],
/// concatenating both arms into one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShiftStep {
    pub v: usize,
    /// Vertices of the first arm, from the neighbor of v outward.
    pub arm_a: Vec<usize>,
    /// Vertices of the second arm, from the neighbor of v outward.
    pub arm_b: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("graph needs at least one vertex".into()));
        }
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.0 == e.1 {
                return Err(Error::Parameter(format!("self-loop at {}", e.0)));
            }
            if e.1 >= n {
                return Err(Error::Parameter(format!(
                    "edge ({}, {}) outside 0..{}",
                    e.0, e.1, n
                )));
            }
        }
        edges.sort_unstable();
        let len = edges.len();
        edges.dedup();
        if edges.len() != len {
            return Err(Error::Parameter("duplicate edge".into()));
        }
        Ok(Graph {
            n,
            edges,
            weights: None,
        })
    }

    pub fn with_weights(mut self, weights: BTreeMap<Edge, Rat>) -> Result<Self> {
        for (e, w) in &weights {
            if !self.edges.contains(e) {
                return Err(Error::Parameter(format!("weight on missing edge {e:?}")));
            }
            if w.is_negative() {
                return Err(Error::Parameter(format!("negative weight on {e:?}")));
            }
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weight(&self, u: usize, v: usize) -> Rat {
        let e = (u.min(v), u.max(v));
        match &self.weights {
            Some(w) => w.get(&e).cloned().unwrap_or_else(Rat::one),
            None => Rat::one(),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d == 1).count()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// Induced subgraph on `verts` (sorted old indices); vertex i of the
    /// result corresponds to verts[i]. Weights are carried over.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        let mut weights = BTreeMap::new();
        for &(a, b) in &self.edges {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                let e = (index[a].min(index[b]), index[a].max(index[b]));
                edges.push(e);
                if self.weights.is_some() {
                    weights.insert(e, self.weight(a, b));
                }
            }
        }
        edges.sort_unstable();
        Graph {
            n: verts.len(),
            edges,
            weights: if self.weights.is_some() {
                Some(weights)
            } else {
                None
            },
        }
    }

    /// Number of 4-cycles (as subgraphs), counted exactly.
    pub fn count_c4(&self) -> u64 {
        // For each unordered pair {u,v}, count common neighbors c(u,v);
        // #C4 = Σ C(c,2) / 2.
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let mut total = 0u64;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let c = (0..self.n)
                    .filter(|&w| w != u && w != v && adj[u][w] && adj[v][w])
                    .count() as u64;
                total += c * (c.saturating_sub(1)) / 2;
            }
        }
        total / 2
    }
}

pub fn make_family(f: &Family) -> Result<Graph> {
    match f {
        Family::Path(n) => {
            if *n < 1 {
                return Err(Error::Parameter("path needs n >= 1".into()));
            }
            Graph::new(*n, (1..*n).map(|i| (i - 1, i)).collect())
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(Error::Parameter("cycle needs n >= 3".into()));
            }
            let mut e: Vec<Edge> = (1..*n).map(|i| (i - 1, i)).collect();
            e.push((0, *n - 1));
            Graph::new(*n, e)
        }
        Family::Star(n) => {
            if *n < 1 {
                return Err(Error::Parameter("star needs n >= 1".into()));
            }
            Graph::new(*n, (1..*n).map(|i| (0, i)).collect())
        }
        Family::CompleteBipartite(a, b) => {
            if *a < 1 || *b < 1 {
                return Err(Error::Parameter("complete bipartite needs a,b >= 1".into()));
            }
            let mut e = Vec::new();
            for i in 0..*a {
                for j in 0..*b {
                    e.push((i, a + j));
                }
            }
            Graph::new(a + b, e)
        }
        Family::Sun(spec) => {
            let l = spec.cycle_len;
            let mut e: Vec<Edge> = (1..l).map(|i| (i - 1, i)).collect();
            e.push((0, l - 1));
            for (k, &p) in spec.loaded.iter().enumerate() {
                e.push((p, l + k));
            }
            Graph::new(l + spec.loaded.len(), e)
        }
    }
}

/// Deterministic 2-coloring: BFS per component, component roots (minimum
/// index) colored left. Returns None if some edge fails to cross.
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    let mut color = vec![-1i8; g.n()];
    let mut adj = vec![Vec::new(); g.n()];
    for &(a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in adj.iter_mut() {
        v.sort_unstable();
    }
    for s in 0..g.n() {
        if color[s] >= 0 {
            continue;
        }
        color[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if color[w] < 0 {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let left = (0..g.n()).filter(|&v| color[v] == 0).collect();
    let right = (0..g.n()).filter(|&v| color[v] == 1).collect();
    Some(Bipartition { left, right })
}

/// BFS spanning tree from vertex 0: parent array (parent[0] = 0).
fn bfs_tree_parents(g: &Graph) -> Vec<usize> {
    let mut adj = vec![Vec::new(); g.n()];
    for &(a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in adj.iter_mut() {
        v.sort_unstable();
    }
    let mut parent = vec![usize::MAX; g.n()];
    parent[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Connected bipartite spanning subgraph: keep exactly the edges crossing
/// the bipartition induced by the BFS spanning tree from vertex 0. For
/// bipartite input this is the identity.
pub fn bipartite_reduction(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Contract("bipartite reduction needs a connected graph".into()));
    }
    let parent = bfs_tree_parents(g);
    // Tree 2-coloring by BFS depth parity.
    let mut depth = vec![usize::MAX; g.n()];
    depth[0] = 0;
    // Parents are discovered before children in BFS order, so a simple
    // sweep is not enough; iterate until all depths settle.
    let mut remaining = g.n() - 1;
    while remaining > 0 {
        for v in 1..g.n() {
            if depth[v] == usize::MAX && depth[parent[v]] != usize::MAX {
                depth[v] = depth[parent[v]] + 1;
                remaining -= 1;
            }
        }
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| depth[a] % 2 != depth[b] % 2)
        .collect();
    Graph::new(g.n(), edges)
}

/// Unsigned incidence matrix N: rows = vertices, columns = edges (in the
/// sorted edge order); entry 1 iff the vertex is an endpoint.
pub fn incidence_matrix(g: &Graph) -> Vec<Vec<u8>> {
    let mut m = vec![vec![0u8; g.m()]; g.n()];
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        m[a][j] = 1;
        m[b][j] = 1;
    }
    m
}

/// Subdivision graph on V ⊔ E: vertex v (index v) adjacent to edge e
/// (index n + position of e) iff v is an endpoint of e.
pub fn subdivision(g: &Graph) -> Graph {
    let mut edges = Vec::with_capacity(2 * g.m());
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((a, g.n() + j));
        edges.push((b, g.n() + j));
    }
    Graph::new(g.n() + g.m(), edges).expect("subdivision is well formed")
}

/// Line graph: vertices = edges of G (sorted order), adjacent iff the edges
/// share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::Parameter("line graph of an edgeless graph".into()));
    }
    let mut edges = Vec::new();
    for i in 0..g.m() {
        for j in (i + 1)..g.m() {
            let (a, b) = g.edges()[i];
            let (c, d) = g.edges()[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(g.m(), edges)
}

/// Delete a vertex; the remaining components come back as separate graphs
/// with dense labels plus the new→old vertex map for each.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Vec<(Graph, Vec<usize>)>> {
    if v >= g.n() {
        return Err(Error::Parameter(format!("no vertex {v}")));
    }
    if g.n() == 1 {
        return Ok(vec![]);
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    let whole = g.induced(&rest);
    Ok(whole
        .components()
        .into_iter()
        .map(|comp| {
            let back: Vec<usize> = comp.iter().map(|&i| rest[i]).collect();
            (whole.induced(&comp), back)
        })
        .collect())
}

/// Delete a vertex but keep everything in one (possibly disconnected)
/// graph, with the new→old map.
pub fn delete_vertex_whole(g: &Graph, v: usize) -> Result<(Graph, Vec<usize>)> {
    if v >= g.n() {
        return Err(Error::Parameter(format!("no vertex {v}")));
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    Ok((g.induced(&rest), rest))
}

pub fn delete_edge(g: &Graph, e: Edge) -> Result<Graph> {
    let e = (e.0.min(e.1), e.0.max(e.1));
    if !g.has_edge(e.0, e.1) {
        return Err(Error::Parameter(format!("no edge {e:?}")));
    }
    let edges = g.edges().iter().copied().filter(|&f| f != e).collect();
    let mut out = Graph::new(g.n(), edges)?;
    if let Some(w) = &g.weights {
        let mut w = w.clone();
        w.remove(&e);
        out = out.with_weights(w)?;
    }
    Ok(out)
}

pub fn add_edge(g: &Graph, e: Edge) -> Result<Graph> {
    let e = (e.0.min(e.1), e.0.max(e.1));
    if g.has_edge(e.0, e.1) {
        return Err(Error::Parameter(format!("edge {e:?} already present")));
    }
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.push(e);
    let mut out = Graph::new(g.n(), edges)?;
    if let Some(w) = &g.weights {
        out = out.with_weights(w.clone())?;
    }
    Ok(out)
}

/// Locate the deterministic pendant-arm shift of a tree: root at the
/// lowest-index leaf, pick the farthest branching vertex (ties → lowest
/// index), and its two lexicographically smallest pendant-path arms away
/// from the root. Returns None iff the tree is a path.
pub fn find_tree_shift(t: &Graph) -> Result<Option<TreeShiftStep>> {
    if !t.is_tree() {
        return Err(Error::Contract("tree shift needs a tree".into()));
    }
    let deg = t.degrees();
    if deg.iter().all(|&d| d <= 2) {
        return Ok(None);
    }
    let root = (0..t.n()).find(|&v| deg[v] <= 1).expect("a tree has a leaf");
    // BFS from root for depth and parent.
    let mut adj = vec![Vec::new(); t.n()];
    for &(a, b) in t.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in adj.iter_mut() {
        v.sort_unstable();
    }
    let mut parent = vec![usize::MAX; t.n()];
    let mut depth = vec![usize::MAX; t.n()];
    parent[root] = root;
    depth[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let v = (0..t.n())
        .filter(|&u| deg[u] >= 3)
        .max_by_key(|&u| (depth[u], std::cmp::Reverse(u)))
        .expect("non-path tree has a branching vertex");
    // Children subtrees of the farthest branching vertex are pendant paths.
    let mut arms: Vec<Vec<usize>> = Vec::new();
    for &c in &adj[v] {
        if c == parent[v] && v != root {
            continue;
        }
        let mut arm = vec![c];
        let mut prev = v;
        let mut cur = c;
        loop {
            let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
            match next.len() {
                0 => break,
                1 => {
                    prev = cur;
                    cur = next[0];
                    arm.push(cur);
                }
                _ => {
                    return Err(Error::Contract(
                        "internal: arm below the farthest branching vertex branches again".into(),
                    ))
                }
            }
        }
        arms.push(arm);
    }
    arms.sort();
    Ok(Some(TreeShiftStep {
        v,
        arm_a: arms[0].clone(),
        arm_b: arms[1].clone(),
    }))
}

/// Check that `arm` is a pendant path attached at v (first vertex adjacent
/// to v, consecutive vertices adjacent, internal degrees 2, terminal leaf).
fn validate_arm(t: &Graph, v: usize, arm: &[usize]) -> bool {
    if arm.is_empty() || !t.has_edge(v, arm[0]) {
        return false;
    }
    for w in arm.windows(2) {
        if !t.has_edge(w[0], w[1]) {
            return false;
        }
    }
    for (i, &u) in arm.iter().enumerate() {
        let want = if i + 1 == arm.len() { 1 } else { 2 };
        if t.degree(u) != want {
            return false;
        }
    }
    true
}

/// Apply a pendant-arm shift: delete v–b₁, add a_last–b₁. The leaf count
/// drops by exactly one.
pub fn apply_tree_shift(t: &Graph, step: &TreeShiftStep) -> Result<Graph> {
    if !t.is_tree() {
        return Err(Error::Contract("tree shift needs a tree".into()));
    }
    if !validate_arm(t, step.v, &step.arm_a) || !validate_arm(t, step.v, &step.arm_b) {
        return Err(Error::Contract("invalid shift step for this tree".into()));
    }
    let mut shared = step.arm_a.clone();
    shared.retain(|u| step.arm_b.contains(u));
    if !shared.is_empty() {
        return Err(Error::Contract("arms overlap".into()));
    }
    let u_last = *step.arm_a.last().unwrap();
    let w1 = step.arm_b[0];
    let out = delete_edge(t, (step.v, w1))?;
    add_edge(&out, (u_last, w1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let p1 = make_family(&Family::Path(1)).unwrap();
        assert_eq!((p1.n(), p1.m()), (1, 0));
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        assert_eq!(c6.m(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        let sun = make_family(&Family::Sun(SunSpec::new(4, vec![0]).unwrap())).unwrap();
        assert_eq!((sun.n(), sun.m()), (5, 5));
        let mut ds = sun.degrees();
        ds.sort_unstable();
        assert_eq!(ds, vec![1, 2, 2, 2, 3]);
        assert!(make_family(&Family::Cycle(2)).is_err());
        assert!(SunSpec::new(5, vec![]).is_err());
    }

    #[test]
    fn bipartitions() {
        let p4 = make_family(&Family::Path(4)).unwrap();
        let b = bipartition_of(&p4).unwrap();
        assert_eq!(b.left, vec![0, 2]);
        assert_eq!(b.right, vec![1, 3]);
        assert!(bipartition_of(&make_family(&Family::Cycle(5)).unwrap()).is_none());
        let b6 = bipartition_of(&make_family(&Family::Cycle(6)).unwrap()).unwrap();
        assert_eq!(b6.left.len(), 3);
    }

    #[test]
    fn reduction_keeps_bipartite_fixed() {
        let c6 = make_family(&Family::Cycle(6)).unwrap();
        assert_eq!(bipartite_reduction(&c6).unwrap(), c6);
        let k3 = make_family(&Family::Cycle(3)).unwrap();
        let h = bipartite_reduction(&k3).unwrap();
        assert_eq!(h.m(), 2);
        assert!(h.is_connected());
        assert!(bipartition_of(&h).is_some());
    }

    #[test]
    fn subdivision_and_line_graph() {
        let p3 = make_family(&Family::Path(3)).unwrap();
        let s = subdivision(&p3);
        assert_eq!((s.n(), s.m()), (5, 4));
        assert!(s.degrees().iter().filter(|&&d| d == 1).count() == 2);
        // line_graph(K_{1,3}) = K_3.
        let star = make_family(&Family::Star(4)).unwrap();
        let lg = line_graph(&star).unwrap();
        assert_eq!((lg.n(), lg.m()), (3, 3));
        // line_graph(P_{m+1}) = P_m.
        let p5 = make_family(&Family::Path(5)).unwrap();
        let lp = line_graph(&p5).unwrap();
        assert_eq!((lp.n(), lp.m()), (4, 3));
        assert!(lp.degrees().iter().all(|&d| d <= 2));
        assert!(line_graph(&make_family(&Family::Path(1)).unwrap()).is_err());
    }

    #[test]
    fn deletions() {
        let c4 = make_family(&Family::Cycle(4)).unwrap();
        let comps = delete_vertex(&c4, 0).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0.m(), 2);
        let star = make_family(&Family::Star(5)).unwrap();
        assert_eq!(delete_vertex(&star, 0).unwrap().len(), 4);
        let p4 = delete_edge(&c4, (0, 1)).unwrap();
        assert!(p4.is_tree());
    }

    #[test]
    fn tree_shifts() {
        let p7 = make_family(&Family::Path(7)).unwrap();
        assert!(find_tree_shift(&p7).unwrap().is_none());
        let star = make_family(&Family::Star(4)).unwrap();
        let step = find_tree_shift(&star).unwrap().unwrap();
        assert_eq!(step.v, 0);
        let shifted = apply_tree_shift(&star, &step).unwrap();
        assert!(shifted.is_tree());
        assert_eq!(shifted.leaf_count(), star.leaf_count() - 1);
        assert!(shifted.degrees().iter().all(|&d| d <= 2)); // P_4
    }

    #[test]
    fn shift_sequences_terminate() {
        // Spider with legs (2,2,1): center 0, legs 1-2, 3-4, 5.
        let spider = Graph::new(6, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let mut t = spider;
        let mut steps = 0;
        while let Some(step) = find_tree_shift(&t).unwrap() {
            t = apply_tree_shift(&t, &step).unwrap();
            steps += 1;
        }
        assert_eq!(steps, 1); // 3 leaves → path in exactly leaves-2 steps
        assert!(t.degrees().iter().all(|&d| d <= 2));
    }

    #[test]
    fn c4_count() {
        assert_eq!(make_family(&Family::Cycle(4)).unwrap().count_c4(), 1);
        assert_eq!(make_family(&Family::Path(5)).unwrap().count_c4(), 0);
        assert_eq!(
            make_family(&Family::CompleteBipartite(2, 3)).unwrap().count_c4(),
            3
        );
    }
}
