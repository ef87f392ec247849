//! Generalized power hypergraphs `G^{m,s}` and the check of `c(G^{m,s}) = s·c(G)`.
//!
//! `G^{m,s}` blows every vertex `v` of a `t`-uniform `G` up into an `s`-set and
//! pads each edge `e` with a private `(m - ts)`-set. Vertices are numbered with
//! the vertex blocks first (block of `v` is `(v-1)s+1 ..= vs`) followed by the
//! edge blocks in canonical edge order. The first member of each vertex block
//! stands for the base vertex itself.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::modlin::{mat_vec_mod, solve_linear_mod, ModVector};
use crate::symmetry::{cyclic_index, verify_coloring, Coloring, SymmetryReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerLayout {
    pub base_uniformity: usize,
    pub s: usize,
    pub m: usize,
    /// `vertex_blocks[v - 1]` is the `s`-set replacing base vertex `v`.
    pub vertex_blocks: Vec<Vec<usize>>,
    /// `edge_blocks[j]` is the `(m - ts)`-set added to the `j`-th base edge.
    pub edge_blocks: Vec<Vec<usize>>,
}

impl PowerLayout {
    pub fn vertex_count(&self) -> usize {
        self.vertex_blocks.iter().chain(&self.edge_blocks).map(Vec::len).sum()
    }

    /// The power vertex that stands for base vertex `v`.
    pub fn representative(&self, v: usize) -> usize {
        self.vertex_blocks[v - 1][0]
    }

    fn is_pure_blowup(&self) -> bool {
        self.m == self.s * self.base_uniformity
    }

    /// Lift of a base `(t, ℓ)`-coloring that is constant on every vertex block.
    ///
    /// Only meaningful for `m = st`, where it yields an `(m, ℓ)`-coloring of the power.
    pub fn lift_block_constant(&self, phi: &Coloring) -> Result<Coloring> {
        if !self.is_pure_blowup() {
            return Err(Error::InvalidParameter("block-constant lift needs m = s*t".into()));
        }
        if phi.modulus() != self.base_uniformity as u64 {
            return Err(Error::ModulusMismatch { left: self.base_uniformity as u64, right: phi.modulus() });
        }
        if phi.len() != self.vertex_blocks.len() {
            return Err(Error::DimensionMismatch { expected: self.vertex_blocks.len(), found: phi.len() });
        }
        let mut values = vec![0; self.vertex_count()];
        for (block, &c) in self.vertex_blocks.iter().zip(phi.values()) {
            for &u in block {
                values[u - 1] = c;
            }
        }
        Coloring::new(self.m as u64, values)
    }

    /// Puts `values[v - 1]` on the representative of `v` and 0 everywhere else.
    pub fn lift_single_member(&self, values: &[u64]) -> Result<Coloring> {
        if values.len() != self.vertex_blocks.len() {
            return Err(Error::DimensionMismatch { expected: self.vertex_blocks.len(), found: values.len() });
        }
        let mut lifted = vec![0; self.vertex_count()];
        for (v, &c) in values.iter().enumerate() {
            lifted[self.representative(v + 1) - 1] = c % self.m as u64;
        }
        Coloring::new(self.m as u64, lifted)
    }

    /// `φ(v) = Σ_{u ∈ block(v)} Φ(u)` over `Z_m`.
    pub fn fold_to_base(&self, phi: &Coloring) -> Result<ModVector> {
        if phi.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), found: phi.len() });
        }
        let m = phi.modulus();
        let values = self
            .vertex_blocks
            .iter()
            .map(|block| block.iter().map(|&u| phi.color(u)).sum::<u64>() % m)
            .collect();
        ModVector::new(m, values)
    }
}

fn check_power_params(t: usize, m: usize, s: usize) -> Result<()> {
    if s < 1 || s * t > m {
        return Err(Error::InvalidParameter(format!("need 1 <= s <= m/t, got s={s}, m={m}, t={t}")));
    }
    Ok(())
}

/// Builds `G^{m,s}`.
pub fn generalized_power(g: &Hypergraph, m: usize, s: usize) -> Result<(Hypergraph, PowerLayout)> {
    let t = g.uniformity();
    check_power_params(t, m, s)?;
    let n = g.vertex_count();
    let pad = m - s * t;

    let vertex_blocks: Vec<Vec<usize>> = (0..n).map(|v| (v * s + 1..=(v + 1) * s).collect()).collect();
    let edge_blocks: Vec<Vec<usize>> =
        (0..g.edge_count()).map(|j| (n * s + j * pad + 1..=n * s + (j + 1) * pad).collect()).collect();

    let edges = g
        .edges()
        .iter()
        .zip(&edge_blocks)
        .map(|(e, pad_block)| {
            e.iter().flat_map(|&v| vertex_blocks[v - 1].iter().copied()).chain(pad_block.iter().copied()).collect()
        })
        .collect();
    let vertex_count = n * s + g.edge_count() * pad;
    let power = Hypergraph::new(m, vertex_count, edges)?;
    Ok((power, PowerLayout { base_uniformity: t, s, m, vertex_blocks, edge_blocks }))
}

/// `c(G^{m,s}) = m` whenever `m > st`, since every edge then owns a degree-1
/// vertex. Returns `None` for `m = st`.
pub fn power_cyclic_index_shortcut(g: &Hypergraph, m: usize, s: usize) -> Result<Option<u64>> {
    check_power_params(g.uniformity(), m, s)?;
    Ok((m > s * g.uniformity()).then_some(m as u64))
}

/// Both sides of `c(G^{m,s}) = s·c(G)` for one instance, with `m = st`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub t: u64,
    pub s: u64,
    pub m: u64,
    pub base_cyclic_index: u64,
    pub power_cyclic_index: u64,
    /// `s·c(G)`.
    pub product: u64,
    pub equality: bool,
    /// Whether `B_G x = (t/c(G))·1` is solvable over `Z_m`.
    pub characterization_solvable: bool,
    pub characterization_witness: Option<Vec<u64>>,
    /// `lcm(s, c(G))`, a symmetry order the power always has.
    pub guaranteed_symmetry: u64,
}

impl ConjectureReport {
    /// Relations that must hold for every connected base.
    pub fn check_invariants(&self) -> Result<()> {
        let pc = self.power_cyclic_index;
        let checks = [
            (pc.is_multiple_of(self.s), "s | c(power)"),
            (pc.is_multiple_of(self.base_cyclic_index), "c(base) | c(power)"),
            (self.product.is_multiple_of(pc), "c(power) | s*c(base)"),
            (pc.is_multiple_of(self.guaranteed_symmetry), "lcm(s, c(base)) | c(power)"),
            (self.equality == self.characterization_solvable, "equality <=> characterization"),
            (self.m.is_multiple_of(pc), "c(power) | m"),
        ];
        match checks.iter().find(|(ok, _)| !ok) {
            Some((_, what)) => Err(Error::Consistency(format!("{what} violated: {self:?}"))),
            None => Ok(()),
        }
    }
}

/// Computes `c(G)`, builds `G^{st,s}`, computes its cyclic index from scratch,
/// and decides the `Z_m` characterization.
///
/// Besides [`ConjectureReport::check_invariants`] this re-verifies the lifts
/// that relate colorings of `G` and `G^{m,s}`; any failure is an
/// [`Error::Consistency`].
pub fn conjecture_check(g: &Hypergraph, s: usize) -> Result<ConjectureReport> {
    if s < 2 {
        return Err(Error::InvalidParameter(format!("s must be at least 2, got {s}")));
    }
    g.require_connected()?;
    let t = g.uniformity();
    let m = s * t;

    let base = cyclic_index(g)?;
    let (power, layout) = generalized_power(g, m, s)?;
    let power_report = cyclic_index(&power)?;
    let c = base.cyclic_index;

    let b = g.incidence_matrix().to_mod(m as u64)?;
    let rhs = ModVector::constant(m as u64, g.edge_count(), t as u64 / c)?;
    let witness = solve_linear_mod(&b, &rhs)?;

    let (s64, t64) = (s as u64, t as u64);
    let report = ConjectureReport {
        t: t64,
        s: s64,
        m: m as u64,
        base_cyclic_index: c,
        power_cyclic_index: power_report.cyclic_index,
        product: s64 * c,
        equality: power_report.cyclic_index == s64 * c,
        characterization_solvable: witness.is_some(),
        characterization_witness: witness.as_ref().map(|w| w.entries().to_vec()),
        guaranteed_symmetry: s64.lcm(&c),
    };
    report.check_invariants()?;
    check_lifts(g, &power, &layout, &base, &power_report, witness.as_ref())?;
    Ok(report)
}

fn check_lifts(
    g: &Hypergraph,
    power: &Hypergraph,
    layout: &PowerLayout,
    base: &SymmetryReport,
    power_report: &SymmetryReport,
    witness: Option<&ModVector>,
) -> Result<()> {
    let (s, t, m) = (layout.s as u64, layout.base_uniformity as u64, layout.m as u64);
    let c = base.cyclic_index;
    let fail = |what: String| Err(Error::Consistency(what));

    let ones = vec![1; g.vertex_count()];
    if !verify_coloring(power, &layout.lift_single_member(&ones)?, s)? {
        return fail(format!("single-member lift is not an (m, {s})-coloring"));
    }

    for ev in &base.divisor_evidence {
        if let Some(phi) = &ev.witness {
            if !verify_coloring(power, &layout.lift_block_constant(phi)?, ev.ell)? {
                return fail(format!("block-constant lift of a base {}-coloring fails", ev.ell));
            }
        }
    }

    if let Some(x) = witness {
        if !verify_coloring(power, &layout.lift_single_member(x.entries())?, s * c)? {
            return fail("lifted characterization witness is not an (m, s*c)-coloring".into());
        }
    }

    // Folding an (m, s*l')-coloring of the power gives a base (t, l')-coloring.
    let b = g.incidence_matrix().to_mod(m)?;
    for ev in &power_report.divisor_evidence {
        let Some(big_phi) = &ev.witness else { continue };
        if ev.ell % s != 0 {
            continue;
        }
        let folded = layout.fold_to_base(big_phi)?;
        let sums = mat_vec_mod(&b, &folded)?;
        if sums != ModVector::constant(m, g.edge_count(), m / ev.ell)? {
            return fail(format!("fold of a power {}-coloring does not solve the base system", ev.ell));
        }
        let reduced = Coloring::new(t, folded.entries().iter().map(|&v| v % t).collect())?;
        if !verify_coloring(g, &reduced, ev.ell / s)? {
            return fail(format!("fold of a power {}-coloring is not a base coloring", ev.ell));
        }
    }
    Ok(())
}
