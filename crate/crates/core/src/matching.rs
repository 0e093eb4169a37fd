//! Maximum matching in general graphs (Edmonds' blossom contraction) and in
//! bipartite graphs (augmenting paths).

use std::collections::VecDeque;

use crate::graph::{ThresholdGraph, Vertex};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<Vertex>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract it onto its base
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum-cardinality matching of an undirected graph given by adjacency
/// lists. `result[v]` is the partner of `v`, if matched.
pub fn maximum_matching(adj: &[Vec<Vertex>]) -> Vec<Option<Vertex>> {
    let n = adj.len();
    let mut state = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::with_capacity(n),
    };
    for root in 0..n {
        if state.mate[root] == NONE {
            if let Some(end) = state.find_path(root) {
                state.augment(end);
            }
        }
    }
    state
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// Perfect matching of a threshold graph as sorted pairs, if one exists.
pub fn perfect_matching(graph: &ThresholdGraph) -> Option<Vec<[Vertex; 2]>> {
    let adj: Vec<Vec<Vertex>> = (0..graph.n())
        .map(|v| graph.neighbors(v).collect())
        .collect();
    let mate = maximum_matching(&adj);
    let mut pairs = Vec::with_capacity(graph.n() / 2);
    for (v, m) in mate.iter().enumerate() {
        match m {
            None => return None,
            Some(u) if v < *u => pairs.push([v, *u]),
            Some(_) => {}
        }
    }
    Some(pairs)
}

fn try_kuhn(u: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [usize]) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        if match_right[v] == NONE || try_kuhn(match_right[v], adj, seen, match_right) {
            match_right[v] = u;
            return true;
        }
    }
    false
}

/// Maximum bipartite matching; `adj[left]` lists right vertices in `0..right_len`.
/// Returns the partner of each left vertex.
pub fn bipartite_matching(adj: &[Vec<usize>], right_len: usize) -> Vec<Option<usize>> {
    let mut match_right = vec![NONE; right_len];
    for u in 0..adj.len() {
        let mut seen = vec![false; right_len];
        try_kuhn(u, adj, &mut seen, &mut match_right);
    }
    let mut match_left = vec![None; adj.len()];
    for (v, &u) in match_right.iter().enumerate() {
        if u != NONE {
            match_left[u] = Some(v);
        }
    }
    match_left
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    /// Exhaustive maximum matching size.
    fn brute_force(n: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
        let Some(v) = (0..n).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = brute_force(n, adj, used);
        for &u in &adj[v] {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + brute_force(n, adj, used));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }

    fn check_valid(adj: &[Vec<usize>], mate: &[Option<usize>]) -> usize {
        let mut size = 0;
        for (v, m) in mate.iter().enumerate() {
            if let Some(u) = *m {
                assert_eq!(mate[u], Some(v));
                assert!(adj[v].contains(&u));
                size += 1;
            }
        }
        size / 2
    }

    #[test]
    fn odd_cycle_needs_contraction() {
        // Triangle 0-1-2 with pendants; the search from 3 runs into the odd cycle.
        let adj = adjacency(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5), (1, 5)]);
        let mate = maximum_matching(&adj);
        assert_eq!(check_valid(&adj, &mate), 3);
    }

    #[test]
    fn petersen_graph_has_perfect_matching() {
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let adj = adjacency(10, &edges);
        assert_eq!(check_valid(&adj, &maximum_matching(&adj)), 5);
    }

    #[test]
    fn bipartite_hall_violation() {
        // Left 0 and 1 both only see right 0.
        let adj = vec![vec![0], vec![0], vec![1, 2]];
        let m = bipartite_matching(&adj, 3);
        assert_eq!(m.iter().filter(|x| x.is_some()).count(), 2);
    }

    proptest! {
        #[test]
        fn blossom_matches_brute_force(n in 1usize..10, raw in prop::collection::vec((0usize..10, 0usize..10), 0..30)) {
            let edges: Vec<_> = raw.into_iter().filter(|&(a, b)| a < n && b < n).collect();
            let adj = adjacency(n, &edges);
            let mate = maximum_matching(&adj);
            let size = check_valid(&adj, &mate);
            prop_assert_eq!(size, brute_force(n, &adj, &mut vec![false; n]));
        }

        #[test]
        fn bipartite_matches_general(l in 1usize..7, r in 1usize..7, raw in prop::collection::vec((0usize..7, 0usize..7), 0..25)) {
            let pairs: Vec<_> = raw.into_iter().filter(|&(a, b)| a < l && b < r).collect();
            let mut adj = vec![Vec::new(); l];
            for &(a, b) in &pairs {
                if !adj[a].contains(&b) { adj[a].push(b); }
            }
            let m = bipartite_matching(&adj, r);
            let size = m.iter().flatten().count();
            let mut seen = std::collections::HashSet::new();
            for (a, b) in m.iter().enumerate() {
                if let Some(b) = b { prop_assert!(adj[a].contains(b)); prop_assert!(seen.insert(*b)); }
            }
            let general = adjacency(l + r, &pairs.iter().map(|&(a, b)| (a, l + b)).collect::<Vec<_>>());
            prop_assert_eq!(size, check_valid(&general, &maximum_matching(&general)));
        }
    }
}
