use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{clique, cycle, graph_power, path};
use crate::error::{Error, Result};
use crate::graph::{BigCount, Graph, MAX_ORDER};
use crate::graph6::{graph6_decode, graph6_encode};

/// A blow-up described by its base graph and one class size per base vertex.
///
/// Base vertex `i` becomes an independent class of `sizes[i]` vertices and
/// every base edge becomes a complete bipartite join. Sizes are arbitrary
/// precision so hosts with astronomically many vertices stay symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    base: Graph,
    sizes: Vec<BigCount>,
}

impl BlowupSpec {
    pub fn new(base: Graph, sizes: Vec<BigCount>) -> Result<Self> {
        if sizes.len() != base.order() {
            return Err(Error::argument(format!(
                "size vector has length {} but the base has {} vertices",
                sizes.len(),
                base.order()
            )));
        }
        if let Some(i) = sizes.iter().position(|s| s.is_zero()) {
            return Err(Error::argument(format!("class {i} has size 0")));
        }
        Ok(BlowupSpec { base, sizes })
    }

    pub fn from_sizes(base: Graph, sizes: &[u64]) -> Result<Self> {
        BlowupSpec::new(base, sizes.iter().map(|&s| BigCount::from(s)).collect())
    }

    /// The trivial blow-up (all classes of size one) denoting `g` itself.
    pub fn from_graph(g: &Graph) -> Self {
        BlowupSpec {
            base: g.clone(),
            sizes: vec![BigCount::from(1u32); g.order()],
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[BigCount] {
        &self.sizes
    }

    pub fn total(&self) -> BigCount {
        self.sizes.iter().sum()
    }

    /// Class sizes as machine integers; errors if any exceeds `limit`.
    pub fn small_sizes(&self, limit: usize) -> Result<Vec<usize>> {
        self.sizes
            .iter()
            .map(|s| {
                s.to_usize().filter(|&v| v <= limit).ok_or_else(|| {
                    Error::capacity(format!("class size {s} exceeds the limit {limit}"))
                })
            })
            .collect()
    }

    /// Concrete blow-up graph; class `i` is a consecutive range of vertices
    /// in base-vertex order.
    pub fn materialize(&self) -> Result<Graph> {
        let total = self.total();
        if total > BigCount::from(MAX_ORDER) {
            return Err(Error::capacity(format!(
                "blow-up has {total} vertices, more than {MAX_ORDER}"
            )));
        }
        let sizes = self.small_sizes(MAX_ORDER)?;
        let mut class = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            class.extend(std::iter::repeat_n(i, s));
        }
        let n = class.len();
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if self.base.has_edge(class[u], class[v]) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Expression that parses back to this spec.
    pub fn to_expr(&self) -> String {
        let sizes: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        format!(
            "blow(g6:{},[{}])",
            graph6_encode(&self.base),
            sizes.join(",")
        )
    }
}

/// Serialized form: base in graph6, sizes as decimal strings.
#[derive(Serialize, Deserialize)]
struct SpecRepr {
    base: String,
    sizes: Vec<String>,
}

impl Serialize for BlowupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecRepr {
            base: graph6_encode(&self.base),
            sizes: self.sizes.iter().map(|v| v.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlowupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SpecRepr::deserialize(d)?;
        let base = graph6_decode(&repr.base).map_err(D::Error::custom)?;
        let sizes = repr
            .sizes
            .iter()
            .map(|s| s.parse::<BigCount>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        BlowupSpec::new(base, sizes).map_err(D::Error::custom)
    }
}

/// Balanced partition of `n` into `r` parts, weakly decreasing.
pub fn turan_sizes(n: u64, r: u64) -> Result<Vec<u64>> {
    if r == 0 || r > n {
        return Err(Error::argument(format!(
            "Turan graph needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let (q, rem) = (n / r, n % r);
    Ok((0..r).map(|i| if i < rem { q + 1 } else { q }).collect())
}

/// The Turan graph `T(n, r)` as a blow-up of `K_r`.
pub fn turan(n: u64, r: u64) -> Result<BlowupSpec> {
    let sizes = turan_sizes(n, r)?;
    if r as usize > MAX_ORDER {
        return Err(Error::capacity("Turan base clique exceeds 64 vertices"));
    }
    BlowupSpec::from_sizes(clique(r as usize)?, &sizes)
}

/// `P_k^{r-1}` with both end vertices blown up to independent sets of order `a`.
pub fn end_blown_path_power(k: usize, r: usize, a: u64) -> Result<BlowupSpec> {
    if k < 3 || r < 2 || a < 1 {
        return Err(Error::argument(format!(
            "end-blown path power needs k >= 3, r >= 2, a >= 1 (got k={k}, r={r}, a={a})"
        )));
    }
    let base = graph_power(&path(k)?, r - 1)?;
    let mut sizes = vec![1u64; k];
    sizes[0] = a;
    sizes[k - 1] = a;
    BlowupSpec::from_sizes(base, &sizes)
}

/// Blow-up of the path on `kk` vertices with end classes `a`, `b` and inner
/// classes `m`. With `a = b = m` this is the balanced blow-up `P_kk(m)`.
pub fn blown_path(kk: usize, m: u64, a: u64, b: u64) -> Result<BlowupSpec> {
    if kk < 2 || kk % 2 == 1 || m < 1 || a < 1 || b < 1 {
        return Err(Error::argument(format!(
            "blown path needs an even kk >= 2 and positive sizes (got kk={kk}, m={m}, a={a}, b={b})"
        )));
    }
    let mut sizes = vec![m; kk];
    sizes[0] = a;
    sizes[kk - 1] = b;
    BlowupSpec::from_sizes(path(kk)?, &sizes)
}

/// Blow-up of `C_k^{r-1}` on `n` vertices: the first `k - 1` classes have
/// `floor(gamma * n)` vertices and the last class takes the rest.
pub fn unbalanced_cycle_power_host(
    k: usize,
    r: usize,
    gamma_num: u64,
    gamma_den: u64,
    n: u64,
) -> Result<BlowupSpec> {
    if k < 3 || r < 2 {
        return Err(Error::argument(format!(
            "cycle power host needs k >= 3 and r >= 2 (got k={k}, r={r})"
        )));
    }
    if gamma_num == 0 || gamma_den == 0 {
        return Err(Error::argument("gamma must be a positive fraction"));
    }
    if u128::from(gamma_num) * (k as u128 - 1) >= u128::from(gamma_den) {
        return Err(Error::argument(format!(
            "gamma = {gamma_num}/{gamma_den} must be below 1/(k-1) = 1/{}",
            k - 1
        )));
    }
    if u128::from(n) < k as u128 * u128::from(gamma_den) {
        return Err(Error::argument(format!(
            "n = {n} must be at least k * gamma_den = {}",
            k as u128 * u128::from(gamma_den)
        )));
    }
    let small = (u128::from(gamma_num) * u128::from(n) / u128::from(gamma_den)) as u64;
    let rest = u128::from(n) - (k as u128 - 1) * u128::from(small);
    if small == 0 || rest == 0 {
        return Err(Error::argument("every class of the host must be nonempty"));
    }
    let mut sizes = vec![small; k - 1];
    sizes.push(rest as u64);
    BlowupSpec::from_sizes(graph_power(&cycle(k)?, r - 1)?, &sizes)
}
