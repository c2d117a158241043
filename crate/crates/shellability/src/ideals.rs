//! Squarefree monomial ideals as pure combinatorics: generators are the
//! supports of squarefree monomials, minimal generation is the antichain
//! condition, the Alexander dual is minimal-transversal dualization, and
//! linear quotients reduce to an exchange condition on supports.

use crate::base::{minimal_sets, minimal_transversals, Graph, Labeling, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::shelling::{search, MAX_SEARCH_ITEMS};

/// A squarefree monomial ideal, stored as the antichain of its minimal
/// generator supports in canonical order.  The zero ideal has no
/// generators; the unit ideal has the single generator `1` (empty support).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Labeling,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    /// Build from generator supports.  Non-minimal generators are redundant
    /// for the ideal they generate and are dropped.
    pub fn new<I: IntoIterator<Item = VertexSet>>(
        universe: Labeling,
        supports: I,
    ) -> Result<MonomialIdeal> {
        let supports: Vec<VertexSet> = supports.into_iter().collect();
        for &s in &supports {
            universe.check_set(s)?;
        }
        let generators = minimal_sets(&supports);
        Ok(MonomialIdeal {
            universe,
            generators,
        })
    }

    /// The zero ideal (no generators).
    pub fn zero(universe: Labeling) -> MonomialIdeal {
        MonomialIdeal {
            universe,
            generators: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Labeling {
        &self.universe
    }

    /// Minimal generator supports in canonical order.
    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Is this the unit ideal `⟨1⟩`?
    pub fn is_unit(&self) -> bool {
        self.generators == [VertexSet::EMPTY]
    }

    /// Variable name for a vertex: the label itself, prefixed with `x` when
    /// it starts with a digit (so numeric universes render as `x1, x2, …`).
    pub fn variable(&self, index: usize) -> String {
        let label = self.universe.label(index);
        if label.starts_with(|c: char| c.is_ascii_digit()) {
            format!("x{label}")
        } else {
            label.to_string()
        }
    }

    /// Render one monomial, e.g. `x1*x3`; the empty support renders as `1`.
    pub fn render_monomial(&self, support: VertexSet) -> String {
        if support.is_empty() {
            return "1".to_string();
        }
        support
            .iter()
            .map(|i| self.variable(i))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Render the generator list, e.g. `x1*x2, x2*x3`; the zero ideal
    /// renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.generators
            .iter()
            .map(|&s| self.render_monomial(s))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Structures with a natural squarefree monomial ideal.
pub trait ToIdeal {
    fn to_ideal(&self) -> MonomialIdeal;
}

impl ToIdeal for Graph {
    /// The edge ideal `I(G) = ⟨x_i x_j : {i,j} ∈ E(G)⟩`.
    fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.universe().clone(), self.edges().to_vec())
            .expect("edges lie in the universe")
    }
}

impl ToIdeal for SimplicialComplex {
    /// The facet ideal `I(Δ) = ⟨x_F : F a facet⟩`.
    fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.universe().clone(), self.facets().to_vec())
            .expect("facets lie in the universe")
    }
}

/// The edge ideal of a graph.
pub fn edge_ideal(graph: &Graph) -> MonomialIdeal {
    graph.to_ideal()
}

/// The facet ideal of a complex.
pub fn facet_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    complex.to_ideal()
}

/// The Alexander dual `I^∨ = ⋂_i ⟨x_j : x_j divides u_i⟩`: its minimal
/// generators are the minimal transversals of the generator supports.
/// The dual of the zero ideal is undefined (an empty intersection has no
/// canonical meaning here) and reported as an error; the dual of the unit
/// ideal is the zero ideal.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::DualOfZeroIdeal);
    }
    let generators = minimal_transversals(ideal.generators());
    Ok(MonomialIdeal {
        universe: ideal.universe().clone(),
        generators,
    })
}

/// Maximum variable count accepted by [`oracle_alexander_dual`].
pub const MAX_DUAL_ORACLE_VARIABLES: usize = 12;

/// Ground-truth Alexander dual: enumerate every squarefree monomial on the
/// universe, keep those lying in every prime `⟨x_j : x_j | u_i⟩` (i.e.
/// whose support meets every generator support), and minimalize.
pub fn oracle_alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::DualOfZeroIdeal);
    }
    let n = ideal.universe().len();
    if n > MAX_DUAL_ORACLE_VARIABLES {
        return Err(Error::OracleTooLarge(n, MAX_DUAL_ORACLE_VARIABLES));
    }
    let members: Vec<VertexSet> = (0u64..(1 << n))
        .map(VertexSet::from_bits)
        .filter(|&t| ideal.generators().iter().all(|&g| t.intersects(g)))
        .collect();
    Ok(MonomialIdeal {
        universe: ideal.universe().clone(),
        generators: minimal_sets(&members),
    })
}

/// Result of checking one generator order for linear quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearQuotients {
    Linear,
    /// Position (within the order) of the first generator whose colon
    /// ideal against its predecessors is not generated by variables.
    FirstViolation { position: usize },
}

impl LinearQuotients {
    pub fn is_linear(self) -> bool {
        matches!(self, LinearQuotients::Linear)
    }
}

fn check_generator_permutation(ideal: &MonomialIdeal, order: &[usize]) -> Result<()> {
    let m = ideal.generators().len();
    if order.len() != m {
        return Err(Error::NotAPermutation(m));
    }
    let mut seen = vec![false; m];
    for &i in order {
        if i >= m || seen[i] {
            return Err(Error::NotAPermutation(m));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Does `f_k` witness linearity of the colon `⟨…, f_j, …⟩ : f_i` in the
/// `j` direction: `|supp f_k ∖ supp f_i| = 1` and that variable divides
/// `f_j / gcd(f_j, f_i)`?
fn colon_witness(sj: VertexSet, si: VertexSet, sk: VertexSet) -> bool {
    let diff = sk.minus(si);
    diff.len() == 1 && diff.is_subset_of(sj.minus(si))
}

/// Check whether a generator order has linear quotients: for every
/// position `i ≥ 1` and every earlier `j` there must be an earlier `k`
/// with `|supp(f_k) ∖ supp(f_i)| = 1` and
/// `supp(f_k) ∖ supp(f_i) ⊆ supp(f_j) ∖ supp(f_i)`.
pub fn linear_quotients_in_order(
    ideal: &MonomialIdeal,
    order: &[usize],
) -> Result<LinearQuotients> {
    check_generator_permutation(ideal, order)?;
    let gens = ideal.generators();
    for i_pos in 1..order.len() {
        let si = gens[order[i_pos]];
        for j_pos in 0..i_pos {
            let sj = gens[order[j_pos]];
            let found = (0..i_pos).any(|k_pos| colon_witness(sj, si, gens[order[k_pos]]));
            if !found {
                return Ok(LinearQuotients::FirstViolation { position: i_pos });
            }
        }
    }
    Ok(LinearQuotients::Linear)
}

/// Search for a generator order with linear quotients; `Ok(None)` after
/// exhausting all admissible prefixes.  Deterministic: generators are tried
/// in canonical order, so the first order found is lexicographically least.
pub fn find_linear_quotients(ideal: &MonomialIdeal) -> Result<Option<Vec<usize>>> {
    let m = ideal.generators().len();
    if m > MAX_SEARCH_ITEMS {
        return Err(Error::SearchTooLarge(MAX_SEARCH_ITEMS, m));
    }
    let gens = ideal.generators();
    // witness[j][i]: mask of k that witness the pair (earlier j, new i).
    let mut witness = vec![vec![0u128; m]; m];
    for j in 0..m {
        for i in 0..m {
            if i == j {
                continue;
            }
            let mut mask = 0u128;
            for (k, &sk) in gens.iter().enumerate() {
                if k != i && colon_witness(gens[j], gens[i], sk) {
                    mask |= 1u128 << k;
                }
            }
            witness[j][i] = mask;
        }
    }
    let found = search::lex_least_order(m, None, |i, chosen| {
        let mut remaining = chosen;
        while remaining != 0 {
            let j = remaining.trailing_zeros() as usize;
            remaining &= remaining - 1;
            if witness[j][i] & chosen == 0 {
                return false;
            }
        }
        true
    });
    if let Some(ref order) = found {
        debug_assert!(linear_quotients_in_order(ideal, order)?.is_linear());
    }
    Ok(found)
}
