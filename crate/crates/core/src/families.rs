//! Nikiforov hypergraphs and a few stock graphs.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::symmetry::Coloring;

/// Default cap on the number of edges a generator may enumerate.
pub const DEFAULT_EDGE_BUDGET: u128 = 1_000_000;

/// Partition sizes for a `4k`-uniform Nikiforov hypergraph on `A ∪ B ∪ C`.
///
/// `A` takes vertices `1..=a`, `B` the next `b`, `C` the last `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NikiforovParams {
    pub k: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub size_c: usize,
}

impl NikiforovParams {
    pub fn new(k: usize, size_a: usize, size_b: usize, size_c: usize) -> Result<Self> {
        let p = Self { k, size_a, size_b, size_c };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k;
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        if self.size_a < 6 * k || self.size_b < 6 * k || self.size_c < 4 * k {
            return Err(Error::InvalidParameter(format!(
                "need |A| >= {}, |B| >= {}, |C| >= {}; got ({}, {}, {})",
                6 * k,
                6 * k,
                4 * k,
                self.size_a,
                self.size_b,
                self.size_c
            )));
        }
        Ok(())
    }

    pub fn uniformity(&self) -> usize {
        4 * self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.size_a + self.size_b + self.size_c
    }

    /// `C(a,2k)C(c,2k) + C(b,2k)C(c,2k) + C(a,k)C(b,3k) + C(a,3k)C(b,k)`, or
    /// `None` on overflow.
    pub fn edge_count(&self) -> Option<u128> {
        let (a, b, c) = (self.size_a, self.size_b, self.size_c);
        self.families()
            .iter()
            .map(|&[ia, ib, ic]| {
                binomial(a, ia)?.checked_mul(binomial(b, ib)?)?.checked_mul(binomial(c, ic)?)
            })
            .try_fold(0u128, |acc, n| acc.checked_add(n?))
    }

    /// Intersection sizes `[|e∩A|, |e∩B|, |e∩C|]` of the four edge families.
    pub fn families(&self) -> [[usize; 3]; 4] {
        let k = self.k;
        [[2 * k, 0, 2 * k], [0, 2 * k, 2 * k], [k, 3 * k, 0], [3 * k, k, 0]]
    }

    /// Which part (0 = A, 1 = B, 2 = C) vertex `v` lies in.
    pub fn part_of(&self, v: usize) -> usize {
        if v <= self.size_a {
            0
        } else if v <= self.size_a + self.size_b {
            1
        } else {
            2
        }
    }
}

fn binomial(n: usize, r: usize) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    (0..r).try_fold(1u128, |acc, i| Some(acc.checked_mul((n - i) as u128)? / (i as u128 + 1)))
}

pub fn nikiforov(params: &NikiforovParams) -> Result<Hypergraph> {
    nikiforov_with_budget(params, DEFAULT_EDGE_BUDGET)
}

/// Enumerates all four edge families, refusing up front when the edge count
/// exceeds `budget`.
pub fn nikiforov_with_budget(params: &NikiforovParams, budget: u128) -> Result<Hypergraph> {
    params.validate()?;
    let count = params.edge_count().unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }

    let a0 = 1;
    let b0 = a0 + params.size_a;
    let c0 = b0 + params.size_b;
    let parts = [a0..b0, b0..c0, c0..c0 + params.size_c];

    let mut edges = Vec::with_capacity(count as usize);
    for sizes in params.families() {
        let choices: Vec<Vec<Vec<usize>>> = parts
            .iter()
            .zip(sizes)
            .map(|(part, r)| part.clone().combinations(r).collect())
            .collect();
        for pick in choices.iter().multi_cartesian_product() {
            edges.push(pick.into_iter().flatten().copied().collect());
        }
    }
    Hypergraph::new(params.uniformity(), params.vertex_count(), edges)
}

/// The odd-coloring `φ|_A = 1`, `φ|_B = 4k - 1`, `φ|_C = 0` over `Z_{4k}`.
pub fn nikiforov_coloring(params: &NikiforovParams) -> Result<Coloring> {
    params.validate()?;
    let m = params.uniformity() as u64;
    let colors = [1 % m, m - 1, 0];
    let values = (1..=params.vertex_count()).map(|v| colors[params.part_of(v)]).collect();
    Coloring::new(m, values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StockKind {
    Cycle,
    Path,
    Complete,
    SingleEdge,
}

impl std::str::FromStr for StockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(Self::Cycle),
            "path" => Ok(Self::Path),
            "complete" => Ok(Self::Complete),
            "single-edge" | "single_edge" => Ok(Self::SingleEdge),
            other => Err(Error::InvalidParameter(format!("unknown stock kind `{other}`"))),
        }
    }
}

/// Cycle `C_n`, path `P_n` and complete graph `K_n` are 2-uniform on `n`
/// vertices; `SingleEdge` is one `n`-uniform edge on `n` vertices.
pub fn stock(kind: StockKind, n: usize) -> Result<Hypergraph> {
    let min = match kind {
        StockKind::Cycle => 3,
        StockKind::Path | StockKind::Complete | StockKind::SingleEdge => 2,
    };
    if n < min {
        return Err(Error::InvalidParameter(format!("{kind:?} needs at least {min} vertices, got {n}")));
    }
    match kind {
        StockKind::Cycle => cycle(n),
        StockKind::Path => Hypergraph::new(2, n, (1..n).map(|i| vec![i, i + 1]).collect()),
        StockKind::Complete => Hypergraph::new(2, n, (1..=n).tuple_combinations().map(|(a, b)| vec![a, b]).collect()),
        StockKind::SingleEdge => Hypergraph::new(n, n, vec![(1..=n).collect()]),
    }
}

pub fn cycle(n: usize) -> Result<Hypergraph> {
    Hypergraph::new(2, n, (1..=n).map(|i| vec![i, i % n + 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::verify_coloring;

    fn small() -> NikiforovParams {
        NikiforovParams::new(1, 6, 6, 4).unwrap()
    }

    #[test]
    fn nikiforov_small_counts() {
        let p = small();
        assert_eq!(p.edge_count(), Some(420));
        let g = nikiforov(&p).unwrap();
        assert_eq!((g.uniformity(), g.vertex_count(), g.edge_count()), (4, 16, 420));
        assert!(g.is_connected());
        for e in g.edges() {
            let in_c = e.iter().filter(|&&v| p.part_of(v) == 2).count();
            assert!(in_c == 0 || in_c == 2);
        }
    }

    #[test]
    fn nikiforov_rejects_small_parts() {
        assert!(matches!(NikiforovParams::new(1, 6, 6, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(NikiforovParams::new(1, 5, 6, 4), Err(Error::InvalidParameter(_))));
        assert!(matches!(NikiforovParams::new(0, 6, 6, 4), Err(Error::InvalidParameter(_))));
        let raw = NikiforovParams { k: 1, size_a: 6, size_b: 6, size_c: 3 };
        assert!(nikiforov(&raw).is_err());
        assert!(nikiforov_coloring(&raw).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            nikiforov_with_budget(&small(), 419),
            Err(Error::BudgetExceeded { count: 420, budget: 419 })
        );
        let big = NikiforovParams::new(3, 40, 40, 40).unwrap();
        assert!(matches!(nikiforov(&big), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn coloring_values() {
        let phi = nikiforov_coloring(&small()).unwrap();
        assert_eq!(phi.modulus(), 4);
        assert_eq!(phi.values(), &[1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 0, 0, 0, 0]);
        let g = nikiforov(&small()).unwrap();
        assert!(verify_coloring(&g, &phi, 2).unwrap());
        // E_3 edge: one vertex of A, three of B.
        let e3 = [1usize, 7, 8, 9];
        assert_eq!(e3.iter().map(|&v| phi.color(v)).sum::<u64>() % 4, 2);
    }

    #[test]
    fn stock_shapes() {
        assert_eq!(stock(StockKind::Cycle, 4).unwrap().edges(), &[vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]);
        assert_eq!(stock(StockKind::Complete, 4).unwrap().edge_count(), 6);
        assert_eq!(stock(StockKind::Path, 3).unwrap().edges(), &[vec![1, 2], vec![2, 3]]);
        let single = stock(StockKind::SingleEdge, 6).unwrap();
        assert_eq!((single.uniformity(), single.vertex_count(), single.edge_count()), (6, 6, 1));
        assert!(stock(StockKind::Cycle, 2).is_err());
        assert!(stock(StockKind::SingleEdge, 1).is_err());
        assert_eq!("single-edge".parse::<StockKind>().unwrap(), StockKind::SingleEdge);
        assert!("star".parse::<StockKind>().is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), Some(15));
        assert_eq!(binomial(6, 3), Some(20));
        assert_eq!(binomial(4, 5), Some(0));
        assert_eq!(binomial(60, 30), Some(118264581564861424));
    }
}
