use super::{automorphism_count, bits, BigCount, Graph};

/// Search order over pattern vertices: each step picks the vertex with the
/// most already-placed neighbors, then the highest degree.
struct Plan {
    order: Vec<usize>,
    /// For step `i`, the steps `j < i` whose vertex is adjacent to `order[i]`.
    back: Vec<Vec<usize>>,
}

impl Plan {
    fn new(h: &Graph) -> Plan {
        let n = h.order();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (h.neighbors(v) & placed).count_ones(),
                        h.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex");
            order.push(v);
            placed |= 1 << v;
        }
        let back = (0..n)
            .map(|i| (0..i).filter(|&j| h.has_edge(order[i], order[j])).collect())
            .collect();
        Plan { order, back }
    }
}

struct Search<'a> {
    plan: &'a Plan,
    g: &'a Graph,
    images: Vec<usize>,
}

impl Search<'_> {
    fn candidates(&self, step: usize, used: u64) -> u64 {
        let mut cand = self.g.vertex_mask() & !used;
        for &j in &self.plan.back[step] {
            cand &= self.g.neighbors(self.images[j]);
        }
        cand
    }

    fn count(&mut self, step: usize, used: u64) -> u128 {
        let cand = self.candidates(step, used);
        if step + 1 == self.plan.order.len() {
            return cand.count_ones() as u128;
        }
        let mut total = 0;
        for w in bits(cand) {
            self.images[step] = w;
            total += self.count(step + 1, used | 1 << w);
        }
        total
    }

    fn exists(&mut self, step: usize, used: u64) -> bool {
        let cand = self.candidates(step, used);
        if step + 1 == self.plan.order.len() {
            return cand != 0;
        }
        for w in bits(cand) {
            self.images[step] = w;
            if self.exists(step + 1, used | 1 << w) {
                return true;
            }
        }
        false
    }
}

/// Number of injective maps `V(h) -> V(g)` sending edges to edges
/// (labeled, not necessarily induced copies).
pub fn count_embeddings(h: &Graph, g: &Graph) -> BigCount {
    if h.order() > g.order() {
        return BigCount::from(0u32);
    }
    if h.order() == 0 {
        return BigCount::from(1u32);
    }
    let plan = Plan::new(h);
    let mut search = Search {
        plan: &plan,
        g,
        images: vec![0; h.order()],
    };
    BigCount::from(search.count(0, 0))
}

/// Whether `g` contains `h` as a (not necessarily induced) subgraph.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    if h.order() > g.order() {
        return false;
    }
    if h.order() == 0 {
        return true;
    }
    if h.edge_count() > g.edge_count() {
        return false;
    }
    let plan = Plan::new(h);
    let mut search = Search {
        plan: &plan,
        g,
        images: vec![0; h.order()],
    };
    search.exists(0, 0)
}

/// Number of unlabeled copies of `h` in `g`.
pub fn count_copies(h: &Graph, g: &Graph) -> BigCount {
    let emb = count_embeddings(h, g);
    let aut = automorphism_count(h);
    debug_assert!((&emb % &aut) == BigCount::from(0u32));
    emb / aut
}
