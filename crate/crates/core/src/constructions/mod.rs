//! Graph families, blow-up specifications and the graph-expression language.

mod blowup;
mod expr;

pub use blowup::{
    blown_path, end_blown_path_power, turan, turan_sizes, unbalanced_cycle_power_host, BlowupSpec,
};
pub use expr::{parse_graph_expr, GraphExpr};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn check_order(n: usize, what: &str) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::capacity(format!(
            "{what} has {n} vertices, more than {MAX_ORDER}"
        )))
    } else {
        Ok(())
    }
}

/// Path on `k` vertices `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::argument("path needs at least one vertex"));
    }
    check_order(k, "path")?;
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::argument("cycle needs at least three vertices"));
    }
    check_order(k, "cycle")?;
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

pub fn clique(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::argument("clique needs at least one vertex"));
    }
    complete_multipartite(&vec![1; r])
}

/// Complete multipartite graph; part `i` occupies a consecutive vertex range.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.contains(&0) {
        return Err(Error::argument("parts must be nonempty"));
    }
    let n: usize = sizes.iter().sum();
    check_order(n, "complete multipartite graph")?;
    let mut part = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(p, s));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub fn biclique(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// The star `K_{1,a}` with hub `0`.
pub fn star(a: usize) -> Result<Graph> {
    check_order(a + 1, "star")?;
    let edges: Vec<_> = (1..=a).map(|i| (0, i)).collect();
    Graph::from_edges(a + 1, &edges)
}

/// Double star `S_{a,b}`: central edge `0 - 1`, leaves `2..a+2` on `0` and
/// the next `b` vertices on `1`.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    let n = a + b + 2;
    check_order(n, "double star")?;
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_edges(n, &edges)
}

/// `g^k`: join two vertices iff their distance is between 1 and `k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::argument("graph power exponent must be at least 1"));
    }
    let n = g.order();
    let mut out = Graph::empty(n)?;
    for u in 0..n {
        for (v, d) in g.distances_from(u).into_iter().enumerate() {
            if let Some(d) = d {
                if v > u && d <= k {
                    out.add_edge(u, v);
                }
            }
        }
    }
    Ok(out)
}

/// Two triangles sharing one vertex (vertex `0`).
pub fn bowtie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphism_count, chromatic_number, BigCount};

    #[test]
    fn family_examples() {
        let p1 = path(1).unwrap();
        assert_eq!((p1.order(), p1.edge_count()), (1, 0));
        assert_eq!(cycle(3).unwrap(), clique(3).unwrap());
        let t53 = complete_multipartite(&[2, 2, 1]).unwrap();
        assert_eq!(t53.edge_count(), 8);
        assert!(cycle(2).is_err());
        assert!(matches!(path(65), Err(Error::Capacity(_))));
    }

    #[test]
    fn double_star_examples() {
        assert_eq!(
            double_star(1, 1).unwrap(),
            path(4).unwrap().permuted(&[2, 0, 1, 3])
        );
        let s23 = double_star(2, 3).unwrap();
        assert_eq!((s23.order(), s23.edge_count()), (7, 6));
        assert_eq!(
            automorphism_count(&double_star(2, 2).unwrap()),
            BigCount::from(8u32)
        );
    }

    #[test]
    fn power_examples() {
        let p4sq = graph_power(&path(4).unwrap(), 2).unwrap();
        assert_eq!(
            p4sq.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(
            graph_power(&cycle(5).unwrap(), 2).unwrap(),
            clique(5).unwrap()
        );
        let c7sq = graph_power(&cycle(7).unwrap(), 2).unwrap();
        assert_eq!(c7sq.edge_count(), 14);
        assert_eq!(chromatic_number(&c7sq), 4);
    }

    #[test]
    fn power_never_joins_components() {
        let g = path(3).unwrap().disjoint_union(&path(2).unwrap()).unwrap();
        let sq = graph_power(&g, 10).unwrap();
        assert!(!sq.has_edge(0, 3));
        assert_eq!(sq.edge_count(), 3 + 1);
    }
}
