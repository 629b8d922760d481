//! Finite lattices of subsets of a small ground set.

mod iso;
mod poset;

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

pub use iso::lattice_isomorphic;
pub use poset::{order_ideal_lattice, Poset, PosetError};

/// Subsets of a ground set of at most 128 points.
pub type Bits = u128;

pub const MAX_GROUND: usize = 128;

pub fn bits_of(indices: impl IntoIterator<Item = usize>) -> Bits {
    indices.into_iter().fold(0, |acc, i| acc | (1 << i))
}

pub fn indices_of(b: Bits) -> Vec<usize> {
    (0..MAX_GROUND).filter(|&i| b >> i & 1 == 1).collect()
}

pub fn is_subset(a: Bits, b: Bits) -> bool {
    a & !b == 0
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("ground set of size {0} exceeds {MAX_GROUND}")]
    GroundTooLarge(usize),
    #[error("closure is not {property} at {set:#b}")]
    ClosureNotIdempotent { property: &'static str, set: Bits },
    #[error("intersection of {a:#b} and {b:#b} is not an element")]
    MeetNotClosed { a: Bits, b: Bits },
    #[error("family has no top element")]
    NoTop,
    #[error("family is empty")]
    Empty,
}

/// Sort key giving the order (cardinality, then the sorted index list).
fn elem_key(b: &Bits) -> (u32, Vec<usize>) {
    (b.count_ones(), indices_of(*b))
}

/// A finite lattice of subsets ordered by inclusion in which meets are
/// intersections. Joins are the least element containing the union.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    ground: usize,
    elements: Vec<Bits>,
    index: HashMap<Bits, usize>,
    labels: Vec<String>,
    joins: OnceLock<Vec<u32>>,
}

/// A triple on which one of the distributive laws fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityFailure {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemidistributiveSide {
    Join,
    Meet,
}

/// `x ∨ y = x ∨ z` but `x ∨ (y ∧ z)` differs (join side), or the dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemidistributivityFailure {
    pub side: SemidistributiveSide,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// A join-irreducible `j` whose set `{y : y ∧ j = ĵ}` has several maximal
/// elements, so that `κ(j)` does not exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaFailure {
    pub j: usize,
    pub lower_cover: usize,
    pub maximal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidistributivityReport {
    pub holds: bool,
    pub failure: Option<SemidistributivityFailure>,
    pub kappa_failures: Vec<KappaFailure>,
}

impl FiniteLattice {
    /// All joins of closures of `generators`, starting from the closure of
    /// the empty set. The closure of the whole ground set is added as top.
    pub fn generate_from_closure<C>(ground: usize, closure: C, generators: &[Bits]) -> Result<Self, LatticeError>
    where
        C: Fn(Bits) -> Bits,
    {
        if ground > MAX_GROUND {
            return Err(LatticeError::GroundTooLarge(ground));
        }
        let full: Bits = if ground == MAX_GROUND { !0 } else { (1 << ground) - 1 };
        let checked = |s: Bits| -> Result<Bits, LatticeError> {
            let c = closure(s);
            if !is_subset(s, c) {
                return Err(LatticeError::ClosureNotIdempotent { property: "extensive", set: s });
            }
            if closure(c) != c {
                return Err(LatticeError::ClosureNotIdempotent { property: "idempotent", set: s });
            }
            Ok(c)
        };
        let gens: Vec<Bits> = generators.iter().map(|&g| checked(g)).collect::<Result<_, _>>()?;
        let bottom = checked(0)?;
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut elements = vec![bottom];
        seen.insert(bottom);
        let mut frontier = vec![bottom];
        for &c in gens.iter().chain(std::iter::once(&closure(full))) {
            if seen.insert(c) {
                elements.push(c);
                frontier.push(c);
            }
        }
        // every join of generators is reached by adding one generator at a time
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                if is_subset(g, x) {
                    continue;
                }
                let c = closure(x | g);
                if seen.insert(c) {
                    elements.push(c);
                    frontier.push(c);
                }
            }
        }
        for &x in &elements {
            for &y in &elements {
                if !seen.contains(&(x & y)) {
                    return Err(LatticeError::MeetNotClosed { a: x, b: y });
                }
            }
        }
        Ok(Self::assemble(ground, elements))
    }

    /// A family of subsets closed under intersection with a largest member.
    pub fn from_meet_closed(ground: usize, family: &[Bits]) -> Result<Self, LatticeError> {
        if ground > MAX_GROUND {
            return Err(LatticeError::GroundTooLarge(ground));
        }
        let mut elements: Vec<Bits> = family.to_vec();
        elements.sort_by_key(elem_key);
        elements.dedup();
        let Some(&top) = elements.last() else {
            return Err(LatticeError::Empty);
        };
        if elements.iter().any(|&x| !is_subset(x, top)) {
            return Err(LatticeError::NoTop);
        }
        let set: HashSet<Bits> = elements.iter().copied().collect();
        for &x in &elements {
            for &y in &elements {
                if !set.contains(&(x & y)) {
                    return Err(LatticeError::MeetNotClosed { a: x, b: y });
                }
            }
        }
        Ok(Self::assemble(ground, elements))
    }

    fn assemble(ground: usize, mut elements: Vec<Bits>) -> Self {
        elements.sort_by_key(elem_key);
        let index = elements.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let labels = elements
            .iter()
            .map(|&b| {
                let parts: Vec<String> = indices_of(b).iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", parts.join(", "))
            })
            .collect();
        FiniteLattice {
            ground,
            elements,
            index,
            labels,
            joins: OnceLock::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.elements.len());
        self.labels = labels;
        self
    }

    /// Relabels every element through `f`.
    pub fn relabel(self, f: impl Fn(Bits) -> String) -> Self {
        let labels = self.elements.iter().map(|&b| f(b)).collect();
        self.with_labels(labels)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Bits] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Bits {
        self.elements[i]
    }

    pub fn index_of(&self, b: Bits) -> Option<usize> {
        self.index.get(&b).copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        is_subset(self.elements[i], self.elements[j])
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[&(self.elements[i] & self.elements[j])]
    }

    /// Least element containing `b`.
    pub fn least_above(&self, b: Bits) -> usize {
        // elements are sorted by size, so the first superset is the least one
        self.elements
            .iter()
            .position(|&x| is_subset(b, x))
            .expect("top contains every union")
    }

    fn join_table(&self) -> &[u32] {
        self.joins.get_or_init(|| {
            let n = self.len();
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in i..n {
                    let k = self.least_above(self.elements[i] | self.elements[j]) as u32;
                    t[i * n + j] = k;
                    t[j * n + i] = k;
                }
            }
            t
        })
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join_table()[i * self.len() + j] as usize
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            for i in self.lower_covers(j) {
                out.push((i, j));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        // sorted by size, so everything strictly below j comes earlier
        let below: Vec<usize> = (0..j).filter(|&i| self.leq(i, j)).collect();
        below
            .iter()
            .copied()
            .filter(|&i| !below.iter().any(|&k| k != i && self.leq(i, k)))
            .collect()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (i + 1..self.len()).filter(|&j| self.leq(i, j)).collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| k != j && self.leq(k, j)))
            .collect()
    }

    /// Exhaustive check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn is_distributive(&self) -> Result<(), DistributivityFailure> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Err(DistributivityFailure { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_semidistributive(&self) -> SemidistributivityReport {
        let n = self.len();
        let mut failure = None;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    if self.join(x, y) == self.join(x, z) && self.join(x, self.meet(y, z)) != self.join(x, y) {
                        failure = Some(SemidistributivityFailure {
                            side: SemidistributiveSide::Join,
                            x,
                            y,
                            z,
                        });
                        break 'outer;
                    }
                    if self.meet(x, y) == self.meet(x, z) && self.meet(x, self.join(y, z)) != self.meet(x, y) {
                        failure = Some(SemidistributivityFailure {
                            side: SemidistributiveSide::Meet,
                            x,
                            y,
                            z,
                        });
                        break 'outer;
                    }
                }
            }
        }
        let mut kappa_failures = Vec::new();
        for j in 0..n {
            let lower = self.lower_covers(j);
            let [jhat] = lower[..] else { continue };
            let set: Vec<usize> = (0..n).filter(|&y| self.meet(y, j) == jhat).collect();
            let maximal: Vec<usize> = set
                .iter()
                .copied()
                .filter(|&y| !set.iter().any(|&w| w != y && self.leq(y, w)))
                .collect();
            if maximal.len() > 1 {
                kappa_failures.push(KappaFailure {
                    j,
                    lower_cover: jhat,
                    maximal,
                });
            }
        }
        SemidistributivityReport {
            holds: failure.is_none(),
            failure,
            kappa_failures,
        }
    }

    /// Indices of the elements with exactly one lower cover.
    pub fn join_irreducible_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.lower_covers(j).len() == 1).collect()
    }

    /// The join-irreducibles as a poset under the induced order. Node `k` of
    /// the poset is element `nodes[k]` of the lattice.
    pub fn join_irreducibles(&self) -> Poset {
        let nodes = self.join_irreducible_indices();
        let leq = nodes
            .iter()
            .map(|&a| nodes.iter().map(|&b| self.leq(a, b)).collect())
            .collect();
        Poset::new(nodes.iter().map(|&i| self.labels[i].clone()).collect(), leq)
            .expect("induced order is a partial order")
            .with_elements(nodes)
    }

    /// Whether every element is the union of the join-irreducibles below it,
    /// which holds exactly when joins are unions.
    pub fn is_union_closed(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.elements[self.join(i, j)] == self.elements[i] | self.elements[j]))
    }
}

#[cfg(test)]
mod tests;
