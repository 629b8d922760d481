use super::{bits_of, indices_of, Bits, FiniteLattice, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("relation matrix is not square with one row per node")]
    Shape,
    #[error("too many nodes: {0}")]
    TooLarge(usize),
    #[error("node {0} is not related to itself")]
    NotReflexive(usize),
    #[error("nodes {0} and {1} are distinct but mutually related")]
    NotAntisymmetric(usize, usize),
    #[error("{0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
}

/// A finite partial order given by its full relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    elements: Option<Vec<usize>>,
}

impl Poset {
    pub fn new(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, PosetError> {
        let n = labels.len();
        if n > MAX_GROUND {
            return Err(PosetError::TooLarge(n));
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(PosetError::Shape);
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(PosetError::NotReflexive(i));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAntisymmetric(i, j));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(PosetError::NotTransitive(i, j, k));
                    }
                }
            }
        }
        Ok(Poset {
            labels,
            leq,
            elements: None,
        })
    }

    /// An antichain on the given labels.
    pub fn antichain(labels: Vec<String>) -> Self {
        let n = labels.len();
        let leq = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        Poset::new(labels, leq).expect("antichain")
    }

    /// Records which outside object each node stands for, such as a lattice index.
    pub fn with_elements(mut self, elements: Vec<usize>) -> Self {
        assert_eq!(elements.len(), self.labels.len());
        self.elements = Some(elements);
        self
    }

    pub fn elements(&self) -> Option<&[usize]> {
        self.elements.as_deref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] && !(0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The down-set generated by `s`.
    pub fn down_closure(&self, s: Bits) -> Bits {
        let n = self.len();
        bits_of((0..n).filter(|&i| indices_of(s).iter().any(|&j| self.leq[i][j])))
    }
}

/// The lattice of down-closed subsets, ordered by inclusion.
pub fn order_ideal_lattice(p: &Poset) -> FiniteLattice {
    let gens: Vec<Bits> = (0..p.len()).map(|i| 1 << i).collect();
    FiniteLattice::generate_from_closure(p.len(), |s| p.down_closure(s), &gens)
        .expect("down-closure is a closure operator")
        .relabel(|b| {
            let parts: Vec<&str> = indices_of(b).iter().map(|&i| p.labels[i].as_str()).collect();
            format!("{{{}}}", parts.join(", "))
        })
}
