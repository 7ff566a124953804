//! Connectivity checks on adjacency lists. Parallel edges are harmless here.

/// `true` when every vertex is reachable from vertex 0.
pub fn is_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Some cut vertex of a connected graph, found with an iterative low-point DFS.
pub fn articulation_point(adj: &[Vec<usize>]) -> Option<usize> {
    articulation_point_skipping(adj, usize::MAX)
}

/// Same as [`articulation_point`] on the graph with `skip` deleted.
fn articulation_point_skipping(adj: &[Vec<usize>], skip: usize) -> Option<usize> {
    let n = adj.len();
    let root = (0..n).find(|&v| v != skip)?;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut root_children = 0;
    // (vertex, parent, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    disc[root] = time;
    low[root] = time;
    time += 1;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if w == skip {
                continue;
            }
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return Some(p);
                }
            }
        }
    }
    if root_children > 1 {
        return Some(root);
    }
    None
}

/// Reached-count check for the graph with `skip` removed.
fn connected_skipping(adj: &[Vec<usize>], skip: usize) -> bool {
    let n = adj.len();
    let Some(root) = (0..n).find(|&v| v != skip) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[root] = true;
    if skip < n {
        seen[skip] = true;
    }
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|s| *s)
}

/// At least two vertices, connected, and no cut vertex.
pub fn is_biconnected(adj: &[Vec<usize>]) -> bool {
    adj.len() >= 2 && is_connected(adj) && articulation_point(adj).is_none()
}

/// Brute force: `G - v` is 2-connected for every `v`. Quadratic, meant for checks.
pub fn is_triconnected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n < 4 || !is_biconnected(adj) {
        return false;
    }
    (0..n).all(|v| connected_skipping(adj, v) && articulation_point_skipping(adj, v).is_none())
}

/// Removes duplicate neighbours so multigraph adjacency becomes simple.
pub fn simplify(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    adj.iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l.dedup();
            l
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(u, v) in edges {
            a[u].push(v);
            a[v].push(u);
        }
        a
    }

    #[test]
    fn path_has_cut_vertex() {
        let a = adj(3, &[(0, 1), (1, 2)]);
        assert_eq!(articulation_point(&a), Some(1));
        assert!(!is_biconnected(&a));
    }

    #[test]
    fn cycle_is_biconnected_not_triconnected() {
        let a = adj(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(is_biconnected(&a));
        assert!(!is_triconnected(&a));
    }

    #[test]
    fn k4_is_triconnected() {
        let a = adj(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(is_triconnected(&a));
    }

    #[test]
    fn bowtie_cut_vertex_found() {
        let a = adj(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(articulation_point(&a), Some(2));
    }
}
