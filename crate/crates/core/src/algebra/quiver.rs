use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self, AlgebraError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(AlgebraError::DuplicateVertex(v.as_ref().to_string()));
            }
        }
        let lookup = |v: &S| {
            index
                .get(v.as_ref())
                .copied()
                .ok_or_else(|| AlgebraError::UnknownVertex(v.as_ref().to_string()))
        };
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            if !seen.insert(name.as_ref().to_string()) {
                return Err(AlgebraError::DuplicateArrow(name.as_ref().to_string()));
            }
            out.push(Arrow {
                name: name.as_ref().to_string(),
                source: lookup(s)?,
                target: lookup(t)?,
            });
        }
        Ok(Quiver {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            arrows: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows ending at `v` (loops included), in declaration order.
    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }

    /// Arrows starting at `v` (loops included), in declaration order.
    pub fn arrows_out_of(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }
}

/// A path of the quiver; `arrows` compose left to right (first arrow first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Composite "self then other", `None` when the endpoints do not match.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(&other.arrows);
        Some(Path {
            start: self.start,
            end: other.end,
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices()[self.start])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// A monomial relation: a path of length at least two, stored as arrow indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialRelation {
    pub arrows: Vec<usize>,
}

/// `kQ/I` for a finite quiver and an admissible ideal generated by paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<MonomialRelation>,
    path_basis: Vec<Path>,
}

impl BoundQuiverAlgebra {
    /// Validates the relations (given by arrow names, composing left to right)
    /// and computes the path basis.
    ///
    /// Finiteness: let `m` be the longest relation length (at least 2). Whether a
    /// relation-free path stays relation-free after appending an arrow depends
    /// only on its last `m - 1` arrows. If `N` relation-free paths of length
    /// `m - 1` exist, a relation-free path of length `m - 1 + N` repeats such a
    /// window, and the segment between the repeats can be pumped forever. So the
    /// enumeration either dies out before that length or the algebra is infinite.
    pub fn new<S: AsRef<str>>(quiver: Quiver, relations: &[Vec<S>]) -> Result<Self, AlgebraError> {
        let mut rels = Vec::with_capacity(relations.len());
        for rel in relations {
            let names: Vec<String> = rel.iter().map(|s| s.as_ref().to_string()).collect();
            let arrows = names
                .iter()
                .map(|n| {
                    quiver
                        .arrow_index(n)
                        .ok_or_else(|| AlgebraError::UnknownArrow(n.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if arrows.is_empty() {
                return Err(AlgebraError::RelationNotAPath(names));
            }
            if arrows
                .windows(2)
                .any(|w| quiver.arrow(w[0]).target != quiver.arrow(w[1]).source)
            {
                return Err(AlgebraError::RelationNotAPath(names));
            }
            if arrows.len() == 1 {
                return Err(AlgebraError::ArrowInIdeal(names[0].clone()));
            }
            rels.push(MonomialRelation { arrows });
        }
        let mut alg = BoundQuiverAlgebra {
            quiver,
            relations: rels,
            path_basis: Vec::new(),
        };
        alg.path_basis = alg.enumerate_paths()?;
        Ok(alg)
    }

    fn enumerate_paths(&self) -> Result<Vec<Path>, AlgebraError> {
        let q = &self.quiver;
        let m = self.relations.iter().map(|r| r.arrows.len()).max().unwrap_or(2).max(2);
        let mut basis: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut frontier: Vec<Path> = basis.clone();
        let mut length = 0;
        let mut windows = usize::MAX;
        while !frontier.is_empty() {
            length += 1;
            let mut next = Vec::new();
            for p in &frontier {
                for a in q.arrows_out_of(p.end) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    if self.has_relation_suffix(&arrows) {
                        continue;
                    }
                    next.push(Path {
                        start: p.start,
                        end: q.arrow(a).target,
                        arrows,
                    });
                }
            }
            if length == m - 1 {
                windows = next.len();
            }
            if length >= m - 1 && length >= (m - 1).saturating_add(windows) && !next.is_empty() {
                return Err(AlgebraError::NotAdmissible(self.pumpable_cycle(&next[0], m)));
            }
            basis.extend(next.iter().cloned());
            frontier = next;
        }
        basis.sort_by(|a, b| (a.len(), a.start, &a.arrows).cmp(&(b.len(), b.start, &b.arrows)));
        Ok(basis)
    }

    /// Extracts the repeated-window segment from an over-long relation-free path.
    fn pumpable_cycle(&self, p: &Path, m: usize) -> Vec<String> {
        let k = m - 1;
        let mut seen: HashMap<&[usize], usize> = HashMap::new();
        for i in 0..=p.arrows.len() - k {
            let w = &p.arrows[i..i + k];
            if let Some(&j) = seen.get(w) {
                return p.arrows[j..i]
                    .iter()
                    .map(|&a| self.quiver.arrow(a).name.clone())
                    .collect();
            }
            seen.insert(w, i);
        }
        p.arrows.iter().map(|&a| self.quiver.arrow(a).name.clone()).collect()
    }

    fn has_relation_suffix(&self, arrows: &[usize]) -> bool {
        self.relations.iter().any(|r| arrows.ends_with(&r.arrows))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[MonomialRelation] {
        &self.relations
    }

    pub fn path_basis(&self) -> &[Path] {
        &self.path_basis
    }

    pub fn dimension(&self) -> usize {
        self.path_basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// True when the arrow sequence contains a relation as a contiguous block.
    pub fn in_ideal(&self, arrows: &[usize]) -> bool {
        self.relations
            .iter()
            .any(|r| arrows.windows(r.arrows.len()).any(|w| w == r.arrows.as_slice()))
    }

    /// True when `[a, b]` ("a then b") is zero in the algebra.
    pub fn composite_vanishes(&self, a: usize, b: usize) -> bool {
        self.in_ideal(&[a, b])
    }

    pub fn paths_from(&self, v: usize) -> Vec<&Path> {
        self.path_basis.iter().filter(|p| p.start == v).collect()
    }

    pub fn paths_to(&self, v: usize) -> Vec<&Path> {
        self.path_basis.iter().filter(|p| p.end == v).collect()
    }

    /// Position of a path in the basis, `None` when it is zero in the algebra.
    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.path_basis.iter().position(|b| b == p)
    }

    pub fn relation_names(&self) -> Vec<Vec<String>> {
        self.relations
            .iter()
            .map(|r| r.arrows.iter().map(|&a| self.quiver.arrow(a).name.clone()).collect())
            .collect()
    }

    /// Restriction to a set of vertices (taken in increasing order): keeps the
    /// arrows and relations supported there.
    pub fn restrict(&self, vertices: &[usize]) -> BoundQuiverAlgebra {
        let names: Vec<&str> = vertices.iter().map(|&v| self.quiver.vertices()[v].as_str()).collect();
        let arrows: Vec<(&str, &str, &str)> = self
            .quiver
            .arrows()
            .iter()
            .filter(|a| vertices.contains(&a.source))
            .map(|a| {
                (
                    a.name.as_str(),
                    self.quiver.vertices()[a.source].as_str(),
                    self.quiver.vertices()[a.target].as_str(),
                )
            })
            .collect();
        let q = Quiver::new(&names, &arrows).expect("sub-quiver of a valid quiver");
        let rels: Vec<Vec<String>> = self
            .relation_names()
            .into_iter()
            .zip(&self.relations)
            .filter(|(_, r)| vertices.contains(&self.quiver.arrow(r.arrows[0]).source))
            .map(|(n, _)| n)
            .collect();
        BoundQuiverAlgebra::new(q, &rels).expect("restriction of an admissible algebra")
    }
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                format!(
                    "{}:{}->{}",
                    a.name,
                    self.quiver.vertices()[a.source],
                    self.quiver.vertices()[a.target]
                )
            })
            .collect();
        let rels: Vec<String> = self.relation_names().iter().map(|r| r.join("·")).collect();
        write!(
            f,
            "Q0 = {{{}}}, Q1 = {{{}}}, I = <{}>",
            self.quiver.vertices().join(", "),
            arrows.join(", "),
            rels.join(", ")
        )
    }
}
