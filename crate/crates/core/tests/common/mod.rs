//! Random instances and brute-force oracles shared by the integration tests.
//! Oracles here never call into the solver or symmetry modules.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hypercyclic::Hypergraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected `t`-uniform hypergraph on `n` vertices.
///
/// Grows a connected core edge by edge (each new edge meets the covered set
/// and covers at least one new vertex), then adds up to `extra` random edges.
pub fn random_connected<R: Rng>(rng: &mut R, t: usize, n: usize, extra: usize) -> Hypergraph {
    assert!(n >= t);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut covered: Vec<usize> = vec![order[0]];
    let mut uncovered: Vec<usize> = order[1..].to_vec();
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();

    while !uncovered.is_empty() {
        let anchor = covered[rng.gen_range(0..covered.len())];
        let lo = t.saturating_sub(covered.len()).max(1);
        let fresh = rng.gen_range(lo..=uncovered.len().min(t - 1));
        let mut edge = vec![anchor];
        for _ in 0..fresh {
            let i = rng.gen_range(0..uncovered.len());
            let v = uncovered.swap_remove(i);
            edge.push(v);
            covered.push(v);
        }
        while edge.len() < t {
            let v = rng.gen_range(1..=n);
            if !edge.contains(&v) && covered.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        edges.insert(edge);
    }
    for _ in 0..extra {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(rng);
        let mut edge = all[..t].to_vec();
        edge.sort_unstable();
        edges.insert(edge);
    }
    Hypergraph::new(t, n, edges.into_iter().collect()).unwrap()
}

/// Random connected `t`-uniform hypergraph carrying a planted `(t, ell)`
/// coloring: only edges whose color sum is `t/ell` mod `t` are kept.
/// Returns `None` when the sampled coloring does not allow a connected result.
pub fn random_planted<R: Rng>(rng: &mut R, t: usize, n: usize, ell: usize, tries: usize) -> Option<Hypergraph> {
    let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..t)).collect();
    let target = (t / ell) % t;
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    for _ in 0..tries {
        let mut all: Vec<usize> = (1..=n).collect();
        all.shuffle(rng);
        let mut edge = all[..t].to_vec();
        if edge.iter().map(|&v| colors[v - 1]).sum::<usize>() % t == target {
            edge.sort_unstable();
            edges.insert(edge);
        }
    }
    let g = Hypergraph::new(t, n, edges.into_iter().collect()).ok()?;
    connected_by_closure(&g).then_some(g)
}

/// Connectivity by transitive closure of the vertex adjacency relation.
pub fn connected_by_closure(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = g.edges().iter().any(|e| e.contains(&(i + 1)));
    }
    for e in g.edges() {
        for &a in e {
            for &b in e {
                reach[a - 1][b - 1] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach.iter().all(|row| row.iter().all(|&r| r))
}

/// Calls `f` on every vector in `Z_m^len` until it returns true.
pub fn any_vector(m: u64, len: usize, mut f: impl FnMut(&[u64]) -> bool) -> bool {
    let mut x = vec![0u64; len];
    loop {
        if f(&x) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == len {
                return false;
            }
            x[i] += 1;
            if x[i] < m {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Exhaustive solvability of `A x ≡ b (mod m)`.
pub fn brute_force_solvable(a: &[Vec<u64>], b: &[u64], m: u64) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    any_vector(m, cols, |x| {
        a.iter().zip(b).all(|(row, &bi)| row.iter().zip(x).map(|(p, q)| p * q).sum::<u64>() % m == bi)
    })
}

/// Exhaustive test for an `(m, ell)`-coloring.
pub fn brute_force_colorable(g: &Hypergraph, ell: u64) -> bool {
    let m = g.uniformity() as u64;
    let target = (m / ell) % m;
    any_vector(m, g.vertex_count(), |phi| {
        g.edges().iter().all(|e| e.iter().map(|&v| phi[v - 1]).sum::<u64>() % m == target)
    })
}

/// Proper 2-coloring by breadth-first search on a 2-uniform graph.
pub fn bfs_bipartite(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e[0] - 1].push(e[1] - 1);
        adj[e[1] - 1].push(e[0] - 1);
    }
    let mut side = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(!side[u].unwrap());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == side[u].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The property corpus: connected `t`-uniform bases (`t ∈ {2,3}`, `n ≤ 8`)
/// paired with `s ∈ {2,3,4}`. Half are uniformly random, half carry a planted
/// coloring so that `c(G) > 1` shows up often.
pub fn power_corpus(seed: u64, size: usize) -> Vec<(Hypergraph, usize)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let t = rng.gen_range(2..=3);
        let n = rng.gen_range(t + 1..=8);
        let s = rng.gen_range(2..=4);
        let g = if out.len() % 2 == 0 {
            let extra = rng.gen_range(0..=n);
            random_connected(&mut rng, t, n, extra)
        } else {
            match random_planted(&mut rng, t, n, t, 4 * n) {
                Some(g) => g,
                None => continue,
            }
        };
        out.push((g, s));
    }
    out
}
