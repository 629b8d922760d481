use serde::Serialize;

use super::{PretorsionContext, PretorsionError};
use crate::lattice::{bits_of, is_subset, lattice_isomorphic, order_ideal_lattice, Bits, FiniteLattice, Poset};
use crate::module::{find_epimorphism, is_brick, trace, ModuleError, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinIrreducibleReport {
    /// Join-irreducible pretorsion classes.
    pub pretorsion: Vec<Bits>,
    /// Join-irreducible torsion classes.
    pub torsion: Vec<Bits>,
    /// `Gen(M)` for each indecomposable `M`, in catalog order.
    pub generated: Vec<Bits>,
    /// The join-irreducible pretorsion classes are exactly the `Gen(M)`,
    /// pairwise distinct.
    pub bijection: bool,
    pub equal: bool,
    pub lrd: bool,
    pub all_bricks: bool,
}

impl JoinIrreducibleReport {
    /// The two sets of join-irreducibles agree exactly when every
    /// indecomposable is a brick, and the combinatorial criterion forces this.
    pub fn consistent(&self) -> bool {
        self.equal == self.all_bricks && (!self.lrd || self.equal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", content = "detail", rename_all = "snake_case")]
pub enum IdentificationFailure {
    NotLocallyRepresentationDirected(String),
    NotIsomorphic,
}

/// The comparison of the pretorsion lattice with the order ideals of the
/// join-irreducible torsion classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    /// `φ(T)` as an index into the ideal lattice, for each pretorsion class.
    pub map: Option<Vec<usize>>,
    pub failure: Option<IdentificationFailure>,
    pub pretorsion_size: usize,
    pub closure_size: usize,
}

/// The poset of indecomposables under `M ≤ N` iff `N` maps onto `M`, and its
/// ideal lattice compared with the pretorsion lattice.
#[derive(Clone, Debug)]
pub struct EpiRealization {
    pub poset: Poset,
    pub ideals: FiniteLattice,
    /// The order ideals are literally the pretorsion classes.
    pub ideals_are_classes: bool,
    pub isomorphism: Option<Vec<usize>>,
}

/// Whether an indecomposable `n` lies in `Gen(x) ∨ Gen(y) = Gen(x ∪ y)` and
/// in either of the two classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinWitness {
    pub in_join: bool,
    pub in_first: bool,
    pub in_second: bool,
}

impl JoinWitness {
    /// `n` is in the join but not in `add` of the union.
    pub fn separates(&self) -> bool {
        self.in_join && !self.in_first && !self.in_second
    }
}

pub fn separates_join(x: &[Representation], y: &[Representation], n: &Representation) -> Result<JoinWitness, ModuleError> {
    let both: Vec<Representation> = x.iter().chain(y).cloned().collect();
    Ok(JoinWitness {
        in_join: trace(&both, n)?.is_whole(),
        in_first: trace(x, n)?.is_whole(),
        in_second: trace(y, n)?.is_whole(),
    })
}

impl PretorsionContext {
    pub fn join_irreducible_report(
        &self,
        lt: &FiniteLattice,
        tors: &FiniteLattice,
    ) -> Result<JoinIrreducibleReport, PretorsionError> {
        let pretorsion: Vec<Bits> = lt.join_irreducible_indices().into_iter().map(|i| lt.element(i)).collect();
        let torsion: Vec<Bits> = tors.join_irreducible_indices().into_iter().map(|i| tors.element(i)).collect();
        let generated: Vec<Bits> = (0..self.len()).map(|i| self.gen_closure(1 << i)).collect();
        let mut sorted_gen = generated.clone();
        sorted_gen.sort_unstable();
        sorted_gen.dedup();
        let mut sorted_ji = pretorsion.clone();
        sorted_ji.sort_unstable();
        let bijection = sorted_gen.len() == generated.len() && sorted_gen == sorted_ji;
        let mut sorted_tors = torsion.clone();
        sorted_tors.sort_unstable();
        let mut all_bricks = true;
        for i in 0..self.len() {
            all_bricks &= is_brick(self.module(i))?;
        }
        Ok(JoinIrreducibleReport {
            equal: sorted_ji == sorted_tors,
            pretorsion,
            torsion,
            generated,
            bijection,
            lrd: self.catalog().algebra().lrd_criterion().holds,
            all_bricks,
        })
    }

    /// `φ(T) = {J ∈ Ji(tors) : J ⊆ T}` checked to be a lattice isomorphism
    /// onto the order ideals of `Ji(tors)`.
    pub fn distributive_closure_identification(&self, lt: &FiniteLattice, tors: &FiniteLattice) -> Identification {
        let poset = tors.join_irreducibles();
        let ideals = order_ideal_lattice(&poset);
        let lrd = self.catalog().algebra().lrd_criterion();
        let mut out = Identification {
            map: None,
            failure: None,
            pretorsion_size: lt.len(),
            closure_size: ideals.len(),
        };
        if !lrd.holds {
            let why = lrd
                .witness
                .map(|w| format!("{w:?}"))
                .unwrap_or_else(|| "criterion fails".to_string());
            out.failure = Some(IdentificationFailure::NotLocallyRepresentationDirected(why));
            return out;
        }
        let nodes = poset.elements().expect("join-irreducibles record their lattice indices");
        let phi: Vec<Option<usize>> = lt
            .elements()
            .iter()
            .map(|&t| {
                let ideal = bits_of((0..nodes.len()).filter(|&k| is_subset(tors.element(nodes[k]), t)));
                ideals.index_of(ideal)
            })
            .collect();
        let n = lt.len();
        let ok = ideals.len() == n
            && phi.iter().all(Option::is_some)
            && (0..n).all(|a| {
                (0..n).all(|b| lt.leq(a, b) == ideals.leq(phi[a].expect("checked"), phi[b].expect("checked")))
            });
        if ok {
            out.map = Some(phi.into_iter().map(|p| p.expect("checked")).collect());
        } else {
            out.failure = Some(IdentificationFailure::NotIsomorphic);
        }
        out
    }

    /// Realises the pretorsion lattice as the order ideals of the epimorphism
    /// order on indecomposables, which requires the lattice to be distributive.
    pub fn epi_poset_realization(&self, lt: &FiniteLattice) -> Result<EpiRealization, PretorsionError> {
        if lt.is_distributive().is_err() {
            return Err(PretorsionError::HypothesisNotMet(
                "the lattice of pretorsion classes is not distributive".to_string(),
            ));
        }
        let k = self.len();
        let mut leq = vec![vec![false; k]; k];
        for m in 0..k {
            for n in 0..k {
                leq[m][n] = m == n
                    || (self.gen_closure(1 << n) >> m & 1 == 1
                        && find_epimorphism(self.module(n), self.module(m))?.is_some());
            }
        }
        for m in 0..k {
            for n in m + 1..k {
                if leq[m][n] && leq[n][m] {
                    return Err(PretorsionError::PreorderNotAntisymmetric(
                        self.catalog().label(m).to_string(),
                        self.catalog().label(n).to_string(),
                    ));
                }
            }
        }
        let labels = self.catalog().labels();
        let poset = Poset::new(labels, leq)?;
        let ideals = order_ideal_lattice(&poset).relabel(|b| self.add_label(b));
        let ideals_are_classes = ideals.elements() == lt.elements();
        let isomorphism = lattice_isomorphic(lt, &ideals);
        Ok(EpiRealization {
            poset,
            ideals,
            ideals_are_classes,
            isomorphism,
        })
    }
}
