//! Spectral symmetry of uniform hypergraphs.
//!
//! The cyclic index `c(G)` of a connected `m`-uniform hypergraph is the largest
//! `ℓ` such that the spectrum of its adjacency tensor is invariant under rotation
//! by `e^{2πi/ℓ}`. For connected hypergraphs this is decided exactly: `G` is
//! spectral `ℓ`-symmetric iff `B_G x = (m/ℓ)·1` is solvable over `Z_m`, where
//! `B_G` is the edge-vertex incidence matrix.
//!
//! The crate builds generalized power hypergraphs `G^{m,s}`, checks the relation
//! `c(G^{m,s}) = s·c(G)` instance by instance, and provides a numerical side
//! (Perron root by power iteration, diagonal-similarity certificates).

pub mod cli;
pub mod error;
pub mod families;
pub mod format;
pub mod hypergraph;
pub mod modlin;
pub mod power;
pub mod symmetry;
pub mod tensor;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, IncidenceMatrix};
pub use modlin::{mat_vec_mod, solve_linear_mod, DiagonalForm, ModMatrix, ModVector};
pub use power::{
    conjecture_check, generalized_power, power_cyclic_index_shortcut, ConjectureReport,
    PowerLayout,
};
pub use symmetry::{cyclic_index, is_l_symmetric, verify_coloring, Coloring, SymmetryReport};

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
