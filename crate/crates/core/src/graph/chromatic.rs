use super::{bits, Graph};

/// Greedy clique, used as the lower bound.
fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for start in 0..g.order() {
        let mut clique = 1;
        let mut cand = g.neighbors(start);
        while cand != 0 {
            let v = bits(cand)
                .max_by_key(|&v| (g.neighbors(v) & cand).count_ones())
                .unwrap();
            clique += 1;
            cand &= g.neighbors(v);
        }
        best = best.max(clique);
    }
    best
}

/// DSATUR greedy coloring, used as the upper bound.
fn dsatur_colors(g: &Graph) -> usize {
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                let sat: u64 = bits(g.neighbors(v))
                    .filter(|&w| color[w] != usize::MAX)
                    .fold(0, |m, w| m | 1 << color[w]);
                (sat.count_ones(), g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        let taken: u64 = bits(g.neighbors(v))
            .filter(|&w| color[w] != usize::MAX)
            .fold(0, |m, w| m | 1 << color[w]);
        let c = (!taken).trailing_zeros() as usize;
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Whether `g` has a proper coloring with at most `k` colors.
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    if k >= n {
        return true;
    }
    // classes[c] is the vertex mask of color c
    fn rec(g: &Graph, k: usize, classes: &mut Vec<u64>, left: u64) -> bool {
        if left == 0 {
            return true;
        }
        // most constrained uncolored vertex
        let v = bits(left)
            .max_by_key(|&v| {
                let blocked = classes.iter().filter(|&&c| g.neighbors(v) & c != 0).count();
                (
                    blocked,
                    (g.neighbors(v) & left).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        for c in 0..classes.len() {
            if g.neighbors(v) & classes[c] == 0 {
                classes[c] |= 1 << v;
                if rec(g, k, classes, left & !(1 << v)) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        if classes.len() < k {
            classes.push(1 << v);
            if rec(g, k, classes, left & !(1 << v)) {
                return true;
            }
            classes.pop();
        }
        false
    }
    rec(g, k, &mut Vec::with_capacity(k), g.vertex_mask())
}

/// Exact chromatic number: clique lower bound, DSATUR upper bound, and an
/// exact colorability search in between.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let lo = greedy_clique(g);
    let hi = dsatur_colors(g);
    (lo..hi).find(|&k| is_colorable(g, k)).unwrap_or(hi)
}

/// Edges whose removal lowers the chromatic number.
pub fn color_critical_edges(g: &Graph) -> Vec<(usize, usize)> {
    let chi = chromatic_number(g);
    g.edges()
        .filter(|&(u, v)| {
            let mut h = g.clone();
            h.remove_edge(u, v);
            is_colorable(&h, chi - 1)
        })
        .collect()
}

/// Vertices whose removal lowers the chromatic number.
pub fn color_critical_vertices(g: &Graph) -> Vec<usize> {
    let chi = chromatic_number(g);
    (0..g.order())
        .filter(|&v| chi > 0 && is_colorable(&g.remove_vertex(v), chi - 1))
        .collect()
}

/// Length of a shortest odd cycle; `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.order() {
        let dist = g.distances_from(s);
        for (u, v) in g.edges() {
            if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                if du == dv {
                    let len = 2 * du + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
