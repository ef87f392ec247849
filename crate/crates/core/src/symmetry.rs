//! Spectral `ℓ`-symmetry and the cyclic index of connected uniform hypergraphs.
//!
//! A connected `m`-uniform hypergraph is spectral `ℓ`-symmetric exactly when it
//! admits an `(m, ℓ)`-coloring: a map `φ: V → Z_m` whose color sum on every
//! edge is `m/ℓ` mod `m`. That is the linear system `B_G φ = (m/ℓ)·1` over `Z_m`.

use crate::divisors;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::modlin::{solve_linear_mod, ModVector};

/// A vertex coloring with values in `Z_modulus`, indexed by vertex `1..=n`
/// through `values[v - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    modulus: u64,
    values: Vec<u64>,
}

impl Coloring {
    pub fn new(modulus: u64, values: Vec<u64>) -> Result<Self> {
        let v = ModVector::new(modulus, values)?;
        Ok(Self { modulus, values: v.into_entries() })
    }

    pub fn zeros(modulus: u64, len: usize) -> Result<Self> {
        Self::new(modulus, vec![0; len])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Color of the 1-based vertex `v`.
    pub fn color(&self, v: usize) -> u64 {
        self.values[v - 1]
    }
}

impl From<ModVector> for Coloring {
    fn from(v: ModVector) -> Self {
        Coloring { modulus: v.modulus(), values: v.into_entries() }
    }
}

/// Outcome of the `ℓ`-symmetry test for one divisor `ℓ` of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorEvidence {
    pub ell: u64,
    pub witness: Option<Coloring>,
}

impl DivisorEvidence {
    pub fn solvable(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub modulus: u64,
    pub cyclic_index: u64,
    /// One entry per divisor of `m`, ascending.
    pub divisor_evidence: Vec<DivisorEvidence>,
}

impl SymmetryReport {
    pub fn evidence(&self, ell: u64) -> Option<&DivisorEvidence> {
        self.divisor_evidence.iter().find(|e| e.ell == ell)
    }
}

fn check_divides(ell: u64, modulus: u64) -> Result<()> {
    if ell == 0 || !modulus.is_multiple_of(ell) {
        Err(Error::NotDivisor { ell, modulus })
    } else {
        Ok(())
    }
}

/// Returns an `(m, ℓ)`-coloring of `g` if one exists.
pub fn is_l_symmetric(g: &Hypergraph, ell: u64) -> Result<Option<Coloring>> {
    g.require_connected()?;
    let m = g.uniformity() as u64;
    check_divides(ell, m)?;
    solve_coloring(g, ell)
}

fn solve_coloring(g: &Hypergraph, ell: u64) -> Result<Option<Coloring>> {
    let m = g.uniformity() as u64;
    let b = g.incidence_matrix().to_mod(m)?;
    let rhs = ModVector::constant(m, g.edge_count(), m / ell)?;
    let witness = solve_linear_mod(&b, &rhs)?.map(Coloring::from);
    if let Some(phi) = &witness {
        if !verify_coloring(g, phi, ell)? {
            return Err(Error::Consistency(format!("solver coloring for ell={ell} does not verify")));
        }
    }
    Ok(witness)
}

/// True iff every edge's color sum is `m/ℓ` mod `m`.
pub fn verify_coloring(g: &Hypergraph, phi: &Coloring, ell: u64) -> Result<bool> {
    let m = g.uniformity() as u64;
    if phi.modulus != m {
        return Err(Error::ModulusMismatch { left: m, right: phi.modulus });
    }
    if phi.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: phi.len() });
    }
    check_divides(ell, m)?;
    let target = (m / ell) % m;
    Ok(g.edges().iter().all(|e| e.iter().map(|&v| phi.color(v)).sum::<u64>() % m == target))
}

/// Computes `c(G)` by testing every divisor of `m`.
///
/// All divisors are evaluated; the flags must be closed under taking divisors,
/// and a violation is reported as [`Error::Consistency`].
pub fn cyclic_index(g: &Hypergraph) -> Result<SymmetryReport> {
    g.require_connected()?;
    let m = g.uniformity() as u64;
    let divisor_evidence = divisors(m)
        .into_iter()
        .map(|ell| Ok(DivisorEvidence { ell, witness: solve_coloring(g, ell)? }))
        .collect::<Result<Vec<_>>>()?;

    for e in divisor_evidence.iter().filter(|e| e.solvable()) {
        let missing = divisor_evidence.iter().find(|d| e.ell % d.ell == 0 && !d.solvable());
        if let Some(d) = missing {
            return Err(Error::Consistency(format!(
                "{}-symmetric but not {}-symmetric",
                e.ell, d.ell
            )));
        }
    }

    let cyclic_index = divisor_evidence
        .iter()
        .filter(|e| e.solvable())
        .map(|e| e.ell)
        .max()
        .ok_or_else(|| Error::Consistency("ell = 1 is not solvable".into()))?;
    Ok(SymmetryReport { modulus: m, cyclic_index, divisor_evidence })
}
