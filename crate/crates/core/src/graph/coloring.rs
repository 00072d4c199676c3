use std::collections::VecDeque;

use super::{Graph, GraphError, Vertex};

pub const DEFAULT_COLORING_BUDGET: u64 = 50_000_000;

/// BFS 2-coloring, component by component. The lowest vertex of each
/// component goes to the first part. `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let side = two_color(g).ok()?;
    let (a, b): (Vec<_>, Vec<_>) = (0..g.order()).partition(|&v| side[v] == 0);
    Some((a, b))
}

/// An odd closed walk, returned as its vertex sequence without repeating the
/// start at the end. `None` for bipartite graphs.
pub fn odd_closed_walk(g: &Graph) -> Option<Vec<Vertex>> {
    let (u, v, parent) = match two_color(g) {
        Ok(_) => return None,
        Err(conflict) => conflict,
    };
    let to_root = |mut x: Vertex| {
        let mut path = vec![x];
        while let Some(p) = parent[x] {
            path.push(p);
            x = p;
        }
        path
    };
    // root .. u, then v .. root (the shared root closes the walk)
    let mut walk: Vec<Vertex> = to_root(u).into_iter().rev().collect();
    let back = to_root(v);
    walk.extend(&back[..back.len() - 1]);
    Some(walk)
}

type Conflict = (Vertex, Vertex, Vec<Option<Vertex>>);

fn two_color(g: &Graph) -> Result<Vec<u8>, Conflict> {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![None; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    parent[y] = Some(x);
                    queue.push_back(y);
                } else if side[y] == side[x] {
                    return Err((x, y, parent));
                }
            }
        }
    }
    Ok(side)
}

pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    chromatic_number_with_budget(g, DEFAULT_COLORING_BUDGET)
}

/// Exact chromatic number: a greedy clique gives the starting bound, then
/// `k = bound, bound+1, …` is tested by DSATUR-ordered backtracking.
pub fn chromatic_number_with_budget(g: &Graph, budget: u64) -> Result<usize, GraphError> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let adj = adjacency_matrix(g);
    let mut k = greedy_clique(g, &adj).max(2);
    let mut nodes = 0u64;
    loop {
        let mut colors = vec![usize::MAX; n];
        if k_colorable(&adj, k, &mut colors, 0, &mut nodes, budget)? {
            return Ok(k);
        }
        k += 1;
    }
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.order()]; g.order()];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn greedy_clique(g: &Graph, adj: &[Vec<bool>]) -> usize {
    let mut best = 1;
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut candidates: Vec<Vertex> = g.neighbors(start).collect();
        candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for v in candidates {
            if clique.iter().all(|&c| adj[c][v]) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn k_colorable(
    adj: &[Vec<bool>],
    k: usize,
    colors: &mut [usize],
    colored: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, GraphError> {
    let n = adj.len();
    if colored == n {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(GraphError::BudgetExceeded(budget));
    }
    // DSATUR: most distinct neighbor colors, then most uncolored neighbors,
    // then lowest index.
    let mut pick = None;
    let mut pick_key = (0usize, 0usize);
    let mut pick_used = Vec::new();
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut used = vec![false; k];
        let mut free_degree = 0;
        for w in 0..n {
            if adj[v][w] {
                match colors[w] {
                    usize::MAX => free_degree += 1,
                    c => used[c] = true,
                }
            }
        }
        let sat = used.iter().filter(|&&b| b).count();
        if pick.is_none() || (sat, free_degree) > pick_key {
            pick = Some(v);
            pick_key = (sat, free_degree);
            pick_used = used;
        }
    }
    let v = pick.expect("an uncolored vertex remains");
    // colors beyond the first unused one are interchangeable
    let max_used = colors.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    for c in 0..k.min(max_used + 1) {
        if pick_used[c] {
            continue;
        }
        colors[v] = c;
        if k_colorable(adj, k, colors, colored + 1, nodes, budget)? {
            return Ok(true);
        }
    }
    colors[v] = usize::MAX;
    Ok(false)
}
