//! Canonical labeling by partition refinement and individualization, with
//! pruning by the automorphisms discovered at the leaves.

use std::cmp::Ordering;

use super::{bits, Graph};

/// Refine an ordered partition (cells as vertex masks) to the coarsest
/// equitable partition below it. Splits are ordered by neighbor count, so the
/// result is invariant under relabeling.
pub(crate) fn refine(g: &Graph, mut cells: Vec<u64>) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u32; n];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones();
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    next.push(cell);
                    continue;
                }
                let mut values: Vec<u32> = bits(cell).map(|v| counts[v]).collect();
                values.sort_unstable();
                values.dedup();
                for val in values {
                    next.push(
                        bits(cell)
                            .filter(|&v| counts[v] == val)
                            .fold(0, |m, v| m | 1 << v),
                    );
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

/// Result of [`canonical_labeling`].
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `labeling[p]` is the original vertex placed at canonical position `p`.
    pub labeling: Vec<usize>,
    /// The graph relabeled canonically.
    pub graph: Graph,
    /// Automorphisms found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    /// Whether `u` and `v` lie in one orbit of the group generated by the
    /// discovered automorphisms (a subgroup of the full group).
    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let mut uf = UnionFind::new(self.labeling.len());
        for g in &self.generators {
            for (i, &j) in g.iter().enumerate() {
                uf.union(i, j);
            }
        }
        uf.find(u) == uf.find(v)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[derive(Clone)]
struct Leaf {
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn leaf_rows(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let mut pos = vec![0usize; n];
        for (p, &v) in lab.iter().enumerate() {
            pos[v] = p;
        }
        lab.iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |r, w| r | 1 << pos[w]))
            .collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut perm = vec![0usize; from.len()];
        for (p, &v) in from.iter().enumerate() {
            perm[v] = to[p];
        }
        if perm.iter().enumerate().any(|(i, &j)| i != j) && !self.generators.contains(&perm) {
            self.generators.push(perm);
        }
    }

    /// Returns the depth to unwind to when this leaf is equivalent to a
    /// stored one: the branch taken at that depth mirrors an explored branch.
    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = self.leaf_rows(&lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                rows,
                path: path.to_vec(),
            };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        };
        if first.rows == rows {
            let (flab, depth) = (first.lab.clone(), common_prefix(&first.path, path));
            self.record_automorphism(&lab, &flab);
            return Some(depth);
        }
        let best = self.best.as_ref().unwrap();
        match rows.cmp(&best.rows) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    lab,
                    rows,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let (blab, depth) = (best.lab.clone(), common_prefix(&best.path, path));
                self.record_automorphism(&lab, &blab);
                Some(depth)
            }
            Ordering::Less => None,
        }
    }

    fn pruned(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.order());
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] == p) {
                any = true;
                for (i, &j) in gen.iter().enumerate() {
                    uf.union(i, j);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }

    fn run(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let mut explored = Vec::new();
        for v in bits(cells[target]) {
            if self.pruned(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cells[target] & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let jump = self.run(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Compute a canonical labeling: isomorphic graphs map to identical
/// relabeled graphs.
pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    if n == 0 {
        return CanonicalLabeling {
            labeling: Vec::new(),
            graph: g.clone(),
            generators: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    search.run(vec![g.vertex_mask()], &mut Vec::new());
    let Leaf { lab, rows, .. } = search.best.take().unwrap();
    CanonicalLabeling {
        labeling: lab,
        graph: Graph::from_rows(rows).expect("relabeling preserves validity"),
        generators: search.generators,
    }
}

/// Canonical byte string: the order followed by the canonical graph's upper
/// triangle, packed eight pairs per byte in `(0,1),(0,2),(1,2),(0,3),...`
/// order. Equal strings iff isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    encode_upper_triangle(&canonical_labeling(g).graph)
}

pub(crate) fn encode_upper_triangle(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + n * n / 16 + 1);
    out.push(n as u8);
    let mut byte = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                byte |= 1 << (k % 8);
            }
            k += 1;
            if k % 8 == 0 {
                out.push(byte);
                byte = 0;
            }
        }
    }
    if k % 8 != 0 {
        out.push(byte);
    }
    out
}
