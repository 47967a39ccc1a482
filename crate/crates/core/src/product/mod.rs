//! Product-state sets and the orthogonality-graph unextendibility decision.
//!
//! A [`ProductStateSet`] holds `k` product states over `N` subsystems.
//! Its per-party orthogonality graphs drive everything else:
//!
//! * a set of product states is mutually orthogonal iff the union of its
//!   orthogonality graphs is complete;
//! * a mutually orthogonal set is unextendible iff no tuple of per-party
//!   unsaturated vertex sets covers all vertices, where a vertex set is
//!   unsaturated when its local vectors fail to span the local space.
//!
//! [`ProductStateSet::is_upb`] decides both conditions and, for extendible
//! sets, returns an explicit product witness that is re-verified against
//! every member state before the verdict is produced.
//!
//! State and party indices are 1-based throughout the public interface,
//! matching graph vertices.

mod checks;
mod unsat;

pub use checks::{
    DegreeBoundsReport, DegreeViolation, Gupb333Report, PartyRegularity, RegularityReport,
    SubsetRankCheck,
};
pub use unsat::UnsaturatedSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{is_orthogonal, tensor, LinalgError, Mode, Vector};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProductError {
    #[error("a product-state set needs at least 2 parties")]
    TooFewParties,
    #[error("a product-state set needs at least one state")]
    NoStates,
    #[error("every local dimension must be at least 1")]
    BadDimension,
    #[error("state {state}: expected {expected} local vectors, found {found}")]
    WrongPartyCount {
        state: usize,
        expected: usize,
        found: usize,
    },
    #[error("state {state}, party {party}: expected dimension {expected}, found {found}")]
    WrongLocalDimension {
        state: usize,
        party: usize,
        expected: usize,
        found: usize,
    },
    #[error("state {state}, party {party}: local vector is zero")]
    ZeroLocalVector { state: usize, party: usize },
    #[error("states mix exact and float vectors")]
    MixedModes,
    #[error("party {0} out of range 1..={1}")]
    PartyOutOfRange(usize, usize),
    #[error("state {0} out of range 1..={1}")]
    StateOutOfRange(usize, usize),
    #[error(
        "party {party}: the local vectors span only {rank} of {dim} dimensions, \
         so the set is trivially extendible"
    )]
    TriviallyExtendible {
        party: usize,
        dim: usize,
        rank: usize,
    },
    #[error("invalid bipartition: {0}")]
    BadBipartition(String),
    #[error("expected shape {expected}, found {found}")]
    WrongShape { expected: String, found: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `k` product states over `N` subsystems with fixed local dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductStateSet {
    dims: Vec<usize>,
    states: Vec<Vec<Vector>>,
    mode: Mode,
}

impl ProductStateSet {
    pub fn new(dims: Vec<usize>, states: Vec<Vec<Vector>>) -> Result<Self, ProductError> {
        if dims.len() < 2 {
            return Err(ProductError::TooFewParties);
        }
        if dims.iter().any(|&d| d == 0) {
            return Err(ProductError::BadDimension);
        }
        if states.is_empty() {
            return Err(ProductError::NoStates);
        }
        let mode = states[0][0].mode();
        for (i, state) in states.iter().enumerate() {
            if state.len() != dims.len() {
                return Err(ProductError::WrongPartyCount {
                    state: i + 1,
                    expected: dims.len(),
                    found: state.len(),
                });
            }
            for (m, local) in state.iter().enumerate() {
                if local.dim() != dims[m] {
                    return Err(ProductError::WrongLocalDimension {
                        state: i + 1,
                        party: m + 1,
                        expected: dims[m],
                        found: local.dim(),
                    });
                }
                if local.mode() != mode {
                    return Err(ProductError::MixedModes);
                }
                if local.is_zero() {
                    return Err(ProductError::ZeroLocalVector {
                        state: i + 1,
                        party: m + 1,
                    });
                }
            }
        }
        Ok(Self { dims, states, mode })
    }

    pub fn n_parties(&self) -> usize {
        self.dims.len()
    }

    pub fn k(&self) -> usize {
        self.states.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Product of the local dimensions.
    pub fn total_dimension(&self) -> usize {
        self.dims.iter().product()
    }

    /// Local vector of state `i` at party `m` (both 1-based).
    pub fn local(&self, i: usize, m: usize) -> Result<&Vector, ProductError> {
        if i < 1 || i > self.k() {
            return Err(ProductError::StateOutOfRange(i, self.k()));
        }
        if m < 1 || m > self.n_parties() {
            return Err(ProductError::PartyOutOfRange(m, self.n_parties()));
        }
        Ok(&self.states[i - 1][m - 1])
    }

    /// All `k` local vectors at party `m`.
    pub fn party_vectors(&self, m: usize) -> Result<Vec<Vector>, ProductError> {
        if m < 1 || m > self.n_parties() {
            return Err(ProductError::PartyOutOfRange(m, self.n_parties()));
        }
        Ok(self.states.iter().map(|s| s[m - 1].clone()).collect())
    }

    /// Full tensor-product vector of state `i` (1-based).
    pub fn tensor_state(&self, i: usize) -> Result<Vector, ProductError> {
        if i < 1 || i > self.k() {
            return Err(ProductError::StateOutOfRange(i, self.k()));
        }
        Ok(tensor(&self.states[i - 1])?)
    }

    /// Orthogonality graph at party `m`: vertices are the `k` states,
    /// with an edge wherever the party-`m` local vectors are orthogonal.
    pub fn orthogonality_graph(&self, m: usize) -> Result<Graph, ProductError> {
        if m < 1 || m > self.n_parties() {
            return Err(ProductError::PartyOutOfRange(m, self.n_parties()));
        }
        let k = self.k();
        let mut edges = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if is_orthogonal(&self.states[i][m - 1], &self.states[j][m - 1])? {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Ok(Graph::new(k, edges).expect("edges constructed in range"))
    }

    pub fn orthogonality_graphs(&self) -> Vec<Graph> {
        (1..=self.n_parties())
            .map(|m| self.orthogonality_graph(m).expect("party is in range"))
            .collect()
    }

    /// True iff the union of the orthogonality graphs is complete,
    /// equivalently iff all tensor states are pairwise orthogonal.
    pub fn mutual_orthogonality(&self) -> bool {
        Graph::union(&self.orthogonality_graphs())
            .expect("graphs share a vertex set")
            .is_complete()
    }

    /// `k - 1 - sum_{i != m} (d_i - 1)`, the cap on unsaturated-set sizes
    /// at party `m` for any unextendible set.
    pub fn unsaturated_size_bound(&self, m: usize) -> Result<i64, ProductError> {
        if m < 1 || m > self.n_parties() {
            return Err(ProductError::PartyOutOfRange(m, self.n_parties()));
        }
        let others: i64 = self
            .dims
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != m - 1)
            .map(|(_, &d)| d as i64 - 1)
            .sum();
        Ok(self.k() as i64 - 1 - others)
    }

    /// Tensors each state's local vectors within the two sides of `bp`
    /// (ascending party order), producing a bipartite set.
    pub fn group(&self, bp: &Bipartition) -> Result<ProductStateSet, ProductError> {
        if bp.n_parties() != self.n_parties() {
            return Err(ProductError::BadBipartition(format!(
                "bipartition is over {} parties, set has {}",
                bp.n_parties(),
                self.n_parties()
            )));
        }
        let side_dims: Vec<usize> = [&bp.side1, &bp.side2]
            .iter()
            .map(|side| side.iter().map(|&m| self.dims[m - 1]).product())
            .collect();
        let mut states = Vec::with_capacity(self.k());
        for state in &self.states {
            let mut grouped = Vec::with_capacity(2);
            for side in [&bp.side1, &bp.side2] {
                let factors: Vec<Vector> =
                    side.iter().map(|&m| state[m - 1].clone()).collect();
                grouped.push(tensor(&factors)?);
            }
            states.push(grouped);
        }
        ProductStateSet::new(side_dims, states)
    }

    /// Runs the unextendibility decision on every bipartition grouping.
    pub fn is_gupb(&self) -> GupbVerdict {
        let mut outcomes = Vec::new();
        let mut all_upb = true;
        for bp in Bipartition::enumerate(self.n_parties()) {
            let grouped = self.group(&bp).expect("enumerated bipartitions are valid");
            let verdict = grouped.is_upb();
            all_upb &= verdict.is_upb;
            outcomes.push(BipartitionOutcome {
                bipartition: bp,
                verdict,
            });
        }
        GupbVerdict {
            is_gupb: all_upb,
            numerical: self.mode == Mode::Float,
            bipartitions: outcomes,
        }
    }
}

/// A split of the parties `{1,...,N}` into two nonempty disjoint sides.
/// Side 1 always contains party 1, which makes each unordered bipartition
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side1: Vec<usize>,
    side2: Vec<usize>,
}

impl Bipartition {
    /// Builds the bipartition of `{1..=n}` whose first side is `side1`
    /// (the complement becomes side 2). Sides are swapped if needed so
    /// that side 1 contains party 1.
    pub fn new(n: usize, side1: impl IntoIterator<Item = usize>) -> Result<Self, ProductError> {
        if n < 2 {
            return Err(ProductError::TooFewParties);
        }
        let mut in_side1 = vec![false; n + 1];
        for m in side1 {
            if m < 1 || m > n {
                return Err(ProductError::BadBipartition(format!(
                    "party {m} out of range 1..={n}"
                )));
            }
            if in_side1[m] {
                return Err(ProductError::BadBipartition(format!("party {m} repeated")));
            }
            in_side1[m] = true;
        }
        let side1: Vec<usize> = (1..=n).filter(|&m| in_side1[m]).collect();
        let side2: Vec<usize> = (1..=n).filter(|&m| !in_side1[m]).collect();
        if side1.is_empty() || side2.is_empty() {
            return Err(ProductError::BadBipartition(
                "both sides must be nonempty".to_string(),
            ));
        }
        if side1.contains(&1) {
            Ok(Self { side1, side2 })
        } else {
            Ok(Self {
                side1: side2,
                side2: side1,
            })
        }
    }

    /// All `2^(n-1) - 1` bipartitions of `{1..=n}`, ordered by the bitmask
    /// of side 1's parties beyond party 1 (so `{1}|rest` comes first).
    pub fn enumerate(n: usize) -> Vec<Bipartition> {
        let others: Vec<usize> = (2..=n).collect();
        let mut out = Vec::new();
        for mask in 0..(1u32 << others.len()) - 1 {
            let mut side1 = vec![1];
            for (bit, &m) in others.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    side1.push(m);
                }
            }
            out.push(Bipartition::new(n, side1).expect("constructed in range"));
        }
        out
    }

    pub fn side1(&self) -> &[usize] {
        &self.side1
    }

    pub fn side2(&self) -> &[usize] {
        &self.side2
    }

    pub fn n_parties(&self) -> usize {
        self.side1.len() + self.side2.len()
    }
}

impl std::fmt::Display for Bipartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for m in &self.side1 {
            write!(f, "A{m}")?;
        }
        write!(f, "|")?;
        for m in &self.side2 {
            write!(f, "A{m}")?;
        }
        Ok(())
    }
}

/// An explicit product state orthogonal to every member of a set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductWitness {
    /// One local vector per party.
    pub locals: Vec<Vector>,
}

impl ProductWitness {
    pub fn tensor(&self) -> Result<Vector, LinalgError> {
        tensor(&self.locals)
    }

    /// Checks orthogonality against every state of `set` (exact zero in
    /// exact mode, relative tolerance in float mode), via full tensor
    /// inner products.
    pub fn verified_against(&self, set: &ProductStateSet) -> Result<bool, ProductError> {
        let w = self.tensor()?;
        for i in 1..=set.k() {
            let s = set.tensor_state(i)?;
            if !is_orthogonal(&w, &s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Why a set failed to be a UPB.
#[derive(Debug, Clone, Serialize)]
pub enum ExtendibilityEvidence {
    /// Condition (union of graphs complete) fails: two member states are
    /// not orthogonal.
    NotMutuallyOrthogonal { state_a: usize, state_b: usize },
    /// Some party's local vectors do not span the local space; the
    /// witness uses an orthocomplement vector there and unit vectors
    /// elsewhere.
    TriviallyExtendible {
        party: usize,
        witness: ProductWitness,
    },
    /// A tuple of maximal unsaturated sets covers all vertices; the
    /// witness tensors the corresponding hyperplane normals.
    CoveredByUnsaturatedSets {
        cover: Vec<CoverChoice>,
        witness: ProductWitness,
    },
}

/// One party's chosen vertex set inside a covering tuple.
#[derive(Debug, Clone, Serialize)]
pub struct CoverChoice {
    pub party: usize,
    pub vertices: Vec<usize>,
}

/// Structural data gathered while deciding a verdict.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictDiagnostics {
    pub graphs: Vec<Graph>,
    /// `degrees[m-1][v-1]` is the degree of vertex `v` in graph `m`.
    pub degrees: Vec<Vec<usize>>,
    /// Maximal unsaturated vertex sets per party; `None` when the
    /// decision ended before they were computed.
    pub maximal_unsaturated: Option<Vec<Vec<Vec<usize>>>>,
    /// True for float-mode input: the verdict is numerical, not exact.
    pub numerical: bool,
}

/// Outcome of the unextendibility decision.
#[derive(Debug, Clone, Serialize)]
pub struct UpbVerdict {
    pub is_upb: bool,
    pub evidence: Option<ExtendibilityEvidence>,
    pub diagnostics: VerdictDiagnostics,
}

impl UpbVerdict {
    pub fn witness(&self) -> Option<&ProductWitness> {
        match &self.evidence {
            Some(ExtendibilityEvidence::TriviallyExtendible { witness, .. }) => Some(witness),
            Some(ExtendibilityEvidence::CoveredByUnsaturatedSets { witness, .. }) => Some(witness),
            _ => None,
        }
    }
}

/// Per-bipartition outcome of the genuine-unextendibility decision.
#[derive(Debug, Clone, Serialize)]
pub struct BipartitionOutcome {
    pub bipartition: Bipartition,
    pub verdict: UpbVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct GupbVerdict {
    pub is_gupb: bool,
    pub numerical: bool,
    pub bipartitions: Vec<BipartitionOutcome>,
}

impl GupbVerdict {
    pub fn first_failure(&self) -> Option<&BipartitionOutcome> {
        self.bipartitions.iter().find(|o| !o.verdict.is_upb)
    }
}

/// Witness orthogonality check used inside the verifier: exact zero in
/// exact mode, tolerance-relative in float mode, via full tensor inner
/// products.
pub(crate) fn witness_holds(set: &ProductStateSet, witness: &ProductWitness) -> bool {
    witness.verified_against(set).unwrap_or(false)
}

#[cfg(test)]
mod tests;
