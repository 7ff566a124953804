use crate::error::{Error, Result};

/// st-numbering of a 2-connected multigraph given as adjacency lists, by depth-first
/// search and the sign list of Tarjan. Returns the vertices in st-order.
pub fn st_order(adj: &[Vec<usize>], s: usize, t: usize) -> Result<Vec<usize>> {
    let n = adj.len();
    if s >= n || t >= n || s == t || !adj[s].contains(&t) {
        return Err(Error::InvalidOrdering(format!("{{{s}, {t}}} is not an edge")));
    }
    if n == 2 {
        return Ok(vec![s, t]);
    }
    const NONE: usize = usize::MAX;
    let mut pre = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut low = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    pre[s] = 0;
    order.push(s);
    low[s] = s;
    // iterative DFS; the first tree edge is s -> t
    let mut stack: Vec<(usize, usize)> = Vec::new();
    pre[t] = 1;
    parent[t] = s;
    low[t] = t;
    order.push(t);
    stack.push((t, 0));
    let mut parent_edge_skipped = vec![false; n];
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if *i < adj[v].len() {
            let w = adj[v][*i];
            *i += 1;
            if w == parent[v] && !parent_edge_skipped[v] {
                parent_edge_skipped[v] = true;
                continue;
            }
            if pre[w] == NONE {
                pre[w] = order.len();
                parent[w] = v;
                low[w] = w;
                order.push(w);
                stack.push((w, 0));
            } else if pre[w] < pre[low[v]] {
                low[v] = w;
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != NONE && p != s && pre[low[v]] < pre[low[p]] {
                low[p] = low[v];
            }
        }
    }
    if order.len() != n {
        return Err(Error::Disconnected);
    }
    // doubly linked list with signs; `minus` means "insert before parent"
    let mut next = vec![NONE; n];
    let mut prev = vec![NONE; n];
    let mut minus = vec![false; n];
    next[s] = t;
    prev[t] = s;
    minus[s] = true;
    for &v in &order[2..] {
        let p = parent[v];
        if low[v] == v || low[v] == p {
            return Err(Error::NotTwoConnected(p));
        }
        if minus[low[v]] {
            // before p
            let a = prev[p];
            next[v] = p;
            prev[v] = a;
            prev[p] = v;
            if a != NONE {
                next[a] = v;
            }
            minus[p] = false;
        } else {
            let b = next[p];
            prev[v] = p;
            next[v] = b;
            next[p] = v;
            if b != NONE {
                prev[b] = v;
            }
            minus[p] = true;
        }
    }
    let mut out = Vec::with_capacity(n);
    let mut v = s;
    while v != NONE {
        out.push(v);
        v = next[v];
    }
    debug_assert!(out.len() == n && out[n - 1] == t);
    Ok(out)
}

/// Every vertex other than `s` and `t` has a lower and a higher neighbour, and
/// `s`, `t` hold the extreme ranks.
pub fn is_st_numbering(adj: &[Vec<usize>], rank: &[usize], s: usize, t: usize) -> bool {
    let n = adj.len();
    if rank.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &r in rank {
        if r == 0 || r > n || seen[r - 1] {
            return false;
        }
        seen[r - 1] = true;
    }
    if rank[s] != 1 || rank[t] != n {
        return false;
    }
    (0..n).all(|v| {
        v == s
            || v == t
            || (adj[v].iter().any(|&w| rank[w] < rank[v]) && adj[v].iter().any(|&w| rank[w] > rank[v]))
    })
}
