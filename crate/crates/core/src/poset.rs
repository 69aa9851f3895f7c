//! Finite connected posets given by cover relations.
//!
//! A poset is built once from its Hasse diagram (the cover pairs) and is
//! immutable afterwards. Construction validates the input: covers must be
//! genuine (no transitively implied pair is accepted), the order must be
//! antisymmetric, and the cover graph must be connected. All derived data —
//! the full order relation, interval lengths, chain and cycle inventories —
//! is computed from the covers.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("empty poset")]
    EmptyPoset,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` is empty or contains whitespace or a delimiter")]
    InvalidLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover relations contain a directed cycle through `{0}`")]
    DirectedCycle(String),
    #[error("pair ({0}, {1}) is not a cover")]
    NotACover(String, String),
    #[error("cover ({0}, {1}) listed twice")]
    DuplicateCover(String, String),
    #[error("cover graph is disconnected")]
    Disconnected,
    #[error("subset is empty")]
    EmptySubset,
    #[error("vertex sequence is not a walk")]
    NotAWalk,
    #[error("vertex sequence is not a cycle")]
    NotACycle,
}

/// A finite connected poset. Elements are indexed `0..n` in the order they
/// were listed; labels are kept for rendering and file formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major `n x n`: `leq[i * n + j]` iff element `i <= j`.
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    /// Longest chain from `i` to `j` (in steps); `None` when `i <= j` fails.
    interval_len: Vec<Option<usize>>,
    /// Undirected cover-graph adjacency, each list in index order.
    neighbors: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Builds the poset whose order is the reflexive-transitive closure of
    /// `covers`. Every listed pair must be a genuine cover of the resulting
    /// order and the cover graph must be connected.
    pub fn from_cover_relations<S: AsRef<str>>(
        labels: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, PosetError> {
        if labels.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let mut index = HashMap::new();
        let mut owned_labels = Vec::with_capacity(labels.len());
        // Labels appear inside `e(x,y)` tokens and arithmetic expressions,
        // so the delimiter characters are reserved.
        const RESERVED: &[char] = &['(', ')', ',', '*', '+', '-', '/', '=', '#'];
        for l in labels {
            let l = l.as_ref();
            if l.is_empty() || l.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
                return Err(PosetError::InvalidLabel(l.to_string()));
            }
            if index.insert(l.to_string(), owned_labels.len()).is_some() {
                return Err(PosetError::DuplicateLabel(l.to_string()));
            }
            owned_labels.push(l.to_string());
        }
        let n = owned_labels.len();
        let lookup = |s: &S| -> Result<usize, PosetError> {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| PosetError::UnknownLabel(s.as_ref().to_string()))
        };

        let mut cover_pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(PosetError::NotACover(a.as_ref().into(), b.as_ref().into()));
            }
            if cover_pairs.contains(&(i, j)) {
                return Err(PosetError::DuplicateCover(
                    a.as_ref().into(),
                    b.as_ref().into(),
                ));
            }
            cover_pairs.push((i, j));
        }

        // Reflexive-transitive closure (Warshall).
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(i, j) in &cover_pairs {
            leq[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(PosetError::DirectedCycle(owned_labels[i].clone()));
                }
            }
        }
        // Each listed pair must have no intermediate element.
        for &(i, j) in &cover_pairs {
            for z in 0..n {
                if z != i && z != j && leq[i * n + z] && leq[z * n + j] {
                    return Err(PosetError::NotACover(
                        owned_labels[i].clone(),
                        owned_labels[j].clone(),
                    ));
                }
            }
        }

        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in &cover_pairs {
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }

        // Connectivity of the undirected cover graph.
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        while let Some(v) = queue.pop() {
            for &w in &neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(PosetError::Disconnected);
        }

        let mut sorted_covers = cover_pairs;
        sorted_covers.sort_unstable();

        let interval_len = interval_lengths(n, &leq, &sorted_covers);
        Ok(FinitePoset {
            labels: owned_labels,
            index,
            leq,
            covers: sorted_covers,
            interval_len,
            neighbors,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size() + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Cover pairs `(i, j)` with `i` covered by `j`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.interval_length(i, j) == Some(1)
    }

    /// Undirected cover-graph neighbours of `v`, in index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Length of the interval from `i` to `j` (longest chain, in steps);
    /// `None` when `i <= j` does not hold.
    pub fn interval_length(&self, i: usize, j: usize) -> Option<usize> {
        self.interval_len[i * self.size() + j]
    }

    /// The interval `{z : i <= z <= j}` in index order; empty when
    /// incomparable.
    pub fn interval(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&z| self.leq(i, z) && self.leq(z, j))
            .collect()
    }

    /// Maximum chain length (in steps) within `subset`.
    pub fn length(&self, subset: &[usize]) -> Result<usize, PosetError> {
        if subset.is_empty() {
            return Err(PosetError::EmptySubset);
        }
        let mut members = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        // Longest chain ending at each member, walking a linear extension.
        let order = self.linear_extension();
        let mut best: HashMap<usize, usize> = HashMap::new();
        let mut overall = 0;
        for &v in &order {
            if !members.contains(&v) {
                continue;
            }
            let mut len = 0;
            for &u in &members {
                if self.lt(u, v) {
                    if let Some(&l) = best.get(&u) {
                        len = len.max(l + 1);
                    }
                }
            }
            overall = overall.max(len);
            best.insert(v, len);
        }
        Ok(overall)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&v| self.covers.iter().all(|&(_, j)| j != v))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&v| self.covers.iter().all(|&(i, _)| i != v))
            .collect()
    }

    /// Every saturated chain from a minimal to a maximal element, ascending,
    /// in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for m in self.minimal_elements() {
            path.push(m);
            self.chain_dfs(&mut path, &mut out);
            path.pop();
        }
        out.sort();
        out
    }

    fn chain_dfs(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        let uppers: Vec<usize> = self
            .covers
            .iter()
            .filter(|&&(i, _)| i == v)
            .map(|&(_, j)| j)
            .collect();
        if uppers.is_empty() {
            out.push(path.clone());
            return;
        }
        for j in uppers {
            path.push(j);
            self.chain_dfs(path, out);
            path.pop();
        }
    }

    /// All cycles of the Hasse diagram, one canonical representative per
    /// class under rotation, reflection and start choice: the least rotation
    /// of the lexicographically smaller orientation.
    pub fn enumerate_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        for s in 0..self.size() {
            path.push(s);
            self.cycle_dfs(s, &mut path, &mut out);
            path.pop();
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }

    fn cycle_dfs(&self, start: usize, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
        let v = *path.last().unwrap();
        for &w in &self.neighbors[v] {
            if w == start {
                if path.len() >= 4 && path[1] < *path.last().unwrap() {
                    let mut vertices = path.clone();
                    vertices.push(start);
                    out.push(Cycle { vertices });
                }
            } else if w > start && !path.contains(&w) {
                path.push(w);
                self.cycle_dfs(start, path, out);
                path.pop();
            }
        }
    }

    /// A deterministic walk from `u0` to `v`: breadth-first search over the
    /// cover graph with neighbours expanded in index order.
    pub fn walk_between(&self, u0: usize, v: usize) -> Walk {
        if u0 == v {
            return Walk {
                vertices: vec![u0],
            };
        }
        let mut parent = vec![usize::MAX; self.size()];
        let mut queue = std::collections::VecDeque::new();
        parent[u0] = u0;
        queue.push_back(u0);
        while let Some(u) = queue.pop_front() {
            if u == v {
                break;
            }
            for &w in &self.neighbors[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut vertices = vec![v];
        let mut cur = v;
        while cur != u0 {
            cur = parent[cur];
            vertices.push(cur);
        }
        vertices.reverse();
        Walk { vertices }
    }

    /// Whether some bijection `t` of the elements satisfies
    /// `x <= y  iff  t(y) <= t(x)`.
    pub fn self_anti_isomorphism_exists(&self) -> bool {
        let n = self.size();
        let mut assigned = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.anti_backtrack(0, &mut assigned, &mut used)
    }

    fn anti_backtrack(&self, pos: usize, assigned: &mut [usize], used: &mut [bool]) -> bool {
        let n = self.size();
        if pos == n {
            return true;
        }
        'candidate: for cand in 0..n {
            if used[cand] {
                continue;
            }
            for prev in 0..pos {
                let img_prev = assigned[prev];
                if self.leq(prev, pos) != self.leq(cand, img_prev)
                    || self.leq(pos, prev) != self.leq(img_prev, cand)
                {
                    continue 'candidate;
                }
            }
            assigned[pos] = cand;
            used[cand] = true;
            if self.anti_backtrack(pos + 1, assigned, used) {
                return true;
            }
            assigned[pos] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    /// Strict pairs `(x, y)`, `x < y`, in canonical `(x, y)` order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All comparable pairs `(x, y)`, `x <= y`, in canonical order.
    pub fn all_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Index order sorted by strict down-set size; a linear extension.
    fn linear_extension(&self) -> Vec<usize> {
        let n = self.size();
        let mut order: Vec<usize> = (0..n).collect();
        let down_size: Vec<usize> =
            (0..n).map(|v| (0..n).filter(|&u| self.lt(u, v)).count()).collect();
        order.sort_by_key(|&v| down_size[v]);
        order
    }

    pub fn render_vertices(&self, vs: &[usize]) -> String {
        vs.iter()
            .map(|&v| self.labels[v].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn interval_lengths(n: usize, leq: &[bool], covers: &[(usize, usize)]) -> Vec<Option<usize>> {
    let mut lp: Vec<Option<usize>> = vec![None; n * n];
    for i in 0..n {
        lp[i * n + i] = Some(0);
    }
    // Linear extension by strict down-set size.
    let mut order: Vec<usize> = (0..n).collect();
    let down_size: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && leq[u * n + v]).count())
        .collect();
    order.sort_by_key(|&v| down_size[v]);
    for &j in &order {
        for &(k, jj) in covers {
            if jj != j {
                continue;
            }
            for i in 0..n {
                if let Some(l) = lp[i * n + k] {
                    let cand = l + 1;
                    if lp[i * n + j].is_none_or(|cur| cur < cand) {
                        lp[i * n + j] = Some(cand);
                    }
                }
            }
        }
    }
    // Sanity: reachability by covers must match the closure.
    debug_assert!((0..n * n).all(|idx| lp[idx].is_some() == leq[idx]));
    lp
}

/// A walk in the Hasse diagram: consecutive vertices form a cover pair in
/// one direction or the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(poset: &FinitePoset, vertices: Vec<usize>) -> Result<Self, PosetError> {
        if vertices.is_empty() || vertices.iter().any(|&v| v >= poset.size()) {
            return Err(PosetError::NotAWalk);
        }
        for w in vertices.windows(2) {
            if !poset.is_cover(w[0], w[1]) && !poset.is_cover(w[1], w[0]) {
                return Err(PosetError::NotAWalk);
            }
        }
        Ok(Walk { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// This walk followed by `other`, which must start where it ends.
    pub fn concat(&self, other: &Walk) -> Result<Walk, PosetError> {
        if self.vertices.last() != other.vertices.first() {
            return Err(PosetError::NotAWalk);
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Walk { vertices })
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }
}

/// A closed walk of length at least 4 visiting no vertex twice except the
/// endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn new(poset: &FinitePoset, vertices: Vec<usize>) -> Result<Self, PosetError> {
        let walk = Walk::new(poset, vertices.clone())?;
        if !walk.is_closed() || walk.len() < 4 {
            return Err(PosetError::NotACycle);
        }
        let inner = &vertices[..vertices.len() - 1];
        let mut sorted = inner.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != inner.len() {
            return Err(PosetError::NotACycle);
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps, at least 4.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_walk(&self) -> Walk {
        Walk {
            vertices: self.vertices.clone(),
        }
    }

    pub fn reversed(&self) -> Cycle {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Cycle { vertices }
    }
}
