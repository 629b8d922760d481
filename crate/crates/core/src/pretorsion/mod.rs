//! Pretorsion, pretorsion-free and torsion classes over a catalog of
//! indecomposables, and the pretorsion theories they form.

mod report;
mod theory;

use std::collections::HashMap;
use std::sync::Mutex;

use crate::indec::IndecCatalog;
use crate::lattice::{bits_of, indices_of, Bits, FiniteLattice, LatticeError, PosetError, MAX_GROUND};
use crate::module::{hom_space, quotient_by, HomSpace, ModuleError, Representation, Submodule};

pub use report::{
    separates_join, EpiRealization, Identification, IdentificationFailure, JoinIrreducibleReport, JoinWitness,
};
pub use theory::{Rejection, Route, TheoryVerdict, VerifiedTheory, ZSequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PretorsionError {
    #[error("catalog has {0} indecomposables; at most {MAX_GROUND} are supported")]
    TooManyIndecomposables(usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("{0} is not closed under quotients")]
    NotGenClosed(String),
    #[error("{0} is not closed under submodules")]
    NotCogenClosed(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("{0} and {1} are epimorphic images of each other but not isomorphic")]
    PreorderNotAntisymmetric(String, String),
    #[error("full check disagrees with the {route} verdict on ({torsion}, {free})")]
    AuditMismatch {
        torsion: String,
        free: String,
        route: String,
    },
}

/// Which indecomposable witnesses a failure of extension closure: `module`
/// is outside the class while both its trace `sub` in the class and the
/// quotient by it lie inside.
#[derive(Clone, Debug)]
pub struct ExtensionWitness {
    pub module: usize,
    pub sub: Representation,
    pub quotient: Representation,
}

#[derive(Clone, Debug)]
pub struct ExtensionCheck {
    pub holds: bool,
    pub witness: Option<ExtensionWitness>,
}

/// A catalog with all Hom spaces between its members and memoised closures.
pub struct PretorsionContext {
    catalog: IndecCatalog,
    modules: Vec<Representation>,
    homs: Vec<Vec<HomSpace>>,
    gen_cache: Mutex<HashMap<Bits, Bits>>,
    cogen_cache: Mutex<HashMap<Bits, Bits>>,
    ext_cache: Mutex<HashMap<Bits, bool>>,
    ext_free_cache: Mutex<HashMap<Bits, bool>>,
}

impl PretorsionContext {
    pub fn new(catalog: IndecCatalog) -> Result<Self, PretorsionError> {
        let k = catalog.len();
        if k > MAX_GROUND {
            return Err(PretorsionError::TooManyIndecomposables(k));
        }
        let modules = catalog.modules();
        let homs = modules
            .iter()
            .map(|m| modules.iter().map(|n| hom_space(m, n)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PretorsionContext {
            catalog,
            modules,
            homs,
            gen_cache: Mutex::new(HashMap::new()),
            cogen_cache: Mutex::new(HashMap::new()),
            ext_cache: Mutex::new(HashMap::new()),
            ext_free_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn catalog(&self) -> &IndecCatalog {
        &self.catalog
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module(&self, i: usize) -> &Representation {
        &self.modules[i]
    }

    pub fn modules_of(&self, s: Bits) -> Vec<Representation> {
        indices_of(s).into_iter().map(|i| self.modules[i].clone()).collect()
    }

    /// `Hom(M_i, M_j)`.
    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    pub fn full(&self) -> Bits {
        bits_of(0..self.len())
    }

    /// Trace of the members of `s` in `M_j`.
    pub fn trace_in(&self, s: Bits, j: usize) -> Submodule {
        let mut acc = Submodule::zero(&self.modules[j]);
        for i in indices_of(s) {
            for f in &self.homs[i][j].basis {
                acc = acc.sum(&f.image());
            }
            if acc.is_whole() {
                break;
            }
        }
        acc
    }

    /// Reject of the members of `s` in `M_j`.
    pub fn reject_in(&self, s: Bits, j: usize) -> Submodule {
        let mut acc = Submodule::whole(&self.modules[j]);
        for i in indices_of(s) {
            for f in &self.homs[j][i].basis {
                acc = acc.intersect(&f.kernel());
            }
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Indecomposables generated by `s`: those equal to their trace.
    pub fn gen_closure(&self, s: Bits) -> Bits {
        if let Some(&c) = self.gen_cache.lock().expect("cache").get(&s) {
            return c;
        }
        let c = bits_of((0..self.len()).filter(|&j| self.trace_in(s, j).is_whole()));
        self.gen_cache.lock().expect("cache").insert(s, c);
        c
    }

    /// Indecomposables cogenerated by `s`: those with zero reject.
    pub fn cogen_closure(&self, s: Bits) -> Bits {
        if let Some(&c) = self.cogen_cache.lock().expect("cache").get(&s) {
            return c;
        }
        let c = bits_of((0..self.len()).filter(|&j| self.reject_in(s, j).is_zero()));
        self.cogen_cache.lock().expect("cache").insert(s, c);
        c
    }

    /// Whether an arbitrary module lies in `add` of the quotient-closed class `t`.
    pub fn in_gen_class(&self, t: Bits, m: &Representation) -> Result<bool, PretorsionError> {
        Ok(crate::module::trace(&self.modules_of(t), m)?.is_whole())
    }

    /// Whether an arbitrary module lies in `add` of the submodule-closed class `f`.
    pub fn in_cogen_class(&self, f: Bits, m: &Representation) -> Result<bool, PretorsionError> {
        Ok(crate::module::reject(&self.modules_of(f), m)?.is_zero())
    }

    /// `add(...)` notation in catalog order, `0` for the empty class and
    /// `mod A` for everything.
    pub fn add_label(&self, s: Bits) -> String {
        if s == 0 {
            "0".to_string()
        } else if s == self.full() {
            "mod A".to_string()
        } else {
            let parts: Vec<&str> = indices_of(s).into_iter().map(|i| self.catalog.label(i)).collect();
            format!("add({})", parts.join(", "))
        }
    }

    fn singletons(&self) -> Vec<Bits> {
        (0..self.len()).map(|i| 1 << i).collect()
    }

    /// The lattice of pretorsion classes, each given by its indecomposables.
    pub fn pretorsion_lattice(&self) -> Result<FiniteLattice, PretorsionError> {
        let l = FiniteLattice::generate_from_closure(self.len(), |s| self.gen_closure(s), &self.singletons())?;
        Ok(l.relabel(|b| self.add_label(b)))
    }

    /// The lattice of pretorsion-free classes.
    pub fn pretorsionfree_lattice(&self) -> Result<FiniteLattice, PretorsionError> {
        let l = FiniteLattice::generate_from_closure(self.len(), |s| self.cogen_closure(s), &self.singletons())?;
        Ok(l.relabel(|b| self.add_label(b)))
    }

    /// Extension closure of a quotient-closed class `t`.
    ///
    /// `t` fails to be closed under extensions exactly when some
    /// indecomposable `E` outside `t` has `E / tr_t(E)` in `t`: the sequence
    /// `0 -> tr_t(E) -> E -> E / tr_t(E) -> 0` is then a witness, and
    /// conversely the torsion part of `E / tr_t(E)` pulls back to such an
    /// indecomposable summand of its preimage.
    pub fn is_extension_closed(&self, t: Bits) -> Result<ExtensionCheck, PretorsionError> {
        if self.gen_closure(t) != t {
            return Err(PretorsionError::NotGenClosed(self.add_label(t)));
        }
        for e in indices_of(self.full() & !t) {
            let m = &self.modules[e];
            let tr = self.trace_in(t, e);
            if tr.is_zero() {
                continue;
            }
            let (q, _) = quotient_by(m, &tr)?;
            if self.in_gen_class(t, &q)? {
                let (sub, _) = tr.to_representation(m)?;
                return Ok(ExtensionCheck {
                    holds: false,
                    witness: Some(ExtensionWitness {
                        module: e,
                        sub,
                        quotient: q,
                    }),
                });
            }
        }
        Ok(ExtensionCheck {
            holds: true,
            witness: None,
        })
    }

    /// Dual check for a submodule-closed class `f`: some indecomposable
    /// outside `f` has its reject in `f`.
    pub fn is_extension_closed_free(&self, f: Bits) -> Result<ExtensionCheck, PretorsionError> {
        if self.cogen_closure(f) != f {
            return Err(PretorsionError::NotCogenClosed(self.add_label(f)));
        }
        for e in indices_of(self.full() & !f) {
            let m = &self.modules[e];
            let rej = self.reject_in(f, e);
            if rej.is_whole() {
                continue;
            }
            let (sub, _) = rej.to_representation(m)?;
            if self.in_cogen_class(f, &sub)? {
                let (q, _) = quotient_by(m, &rej)?;
                return Ok(ExtensionCheck {
                    holds: false,
                    witness: Some(ExtensionWitness {
                        module: e,
                        sub,
                        quotient: q,
                    }),
                });
            }
        }
        Ok(ExtensionCheck {
            holds: true,
            witness: None,
        })
    }

    /// Torsion classes: the extension-closed pretorsion classes, with joins
    /// taken as the least torsion class above the union.
    pub fn torsion_lattice(&self) -> Result<FiniteLattice, PretorsionError> {
        let lt = self.pretorsion_lattice()?;
        let mut family = Vec::new();
        for &t in lt.elements() {
            if self.is_extension_closed(t)?.holds {
                family.push(t);
            }
        }
        let l = FiniteLattice::from_meet_closed(self.len(), &family)?;
        Ok(l.relabel(|b| self.add_label(b)))
    }

    pub fn torsionfree_lattice(&self) -> Result<FiniteLattice, PretorsionError> {
        let ltf = self.pretorsionfree_lattice()?;
        let mut family = Vec::new();
        for &f in ltf.elements() {
            if self.is_extension_closed_free(f)?.holds {
                family.push(f);
            }
        }
        let l = FiniteLattice::from_meet_closed(self.len(), &family)?;
        Ok(l.relabel(|b| self.add_label(b)))
    }

    /// Indecomposables with no nonzero map from any member of `t`.
    pub fn right_perp(&self, t: Bits) -> Bits {
        bits_of((0..self.len()).filter(|&x| indices_of(t).iter().all(|&i| self.homs[i][x].dim() == 0)))
    }

    /// Indecomposables with no nonzero map to any member of `f`.
    pub fn left_perp(&self, f: Bits) -> Bits {
        bits_of((0..self.len()).filter(|&x| indices_of(f).iter().all(|&i| self.homs[x][i].dim() == 0)))
    }
}
