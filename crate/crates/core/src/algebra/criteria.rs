use serde::Serialize;

use super::{Band, BoundQuiverAlgebra, Quiver};

/// Which clause of the string-algebra definition fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum StringViolation {
    /// More than two arrows end at the vertex.
    InDegree { vertex: usize },
    /// More than two arrows start at the vertex.
    OutDegree { vertex: usize },
    /// Two arrows `β` with `arrow·β ∉ I`.
    TwoSuccessors { arrow: usize, successors: [usize; 2] },
    /// Two arrows `α` with `α·arrow ∉ I`.
    TwoPredecessors { arrow: usize, predecessors: [usize; 2] },
}

impl StringViolation {
    pub fn clause(&self) -> &'static str {
        match self {
            StringViolation::InDegree { .. } | StringViolation::OutDegree { .. } => "a",
            _ => "b",
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        let v = |i: usize| q.vertices()[i].as_str();
        let a = |i: usize| q.arrow(i).name.as_str();
        match self {
            StringViolation::InDegree { vertex } => {
                format!("(a) more than two arrows end at vertex {}", v(*vertex))
            }
            StringViolation::OutDegree { vertex } => {
                format!("(a) more than two arrows start at vertex {}", v(*vertex))
            }
            StringViolation::TwoSuccessors { arrow, successors } => format!(
                "(b) both {}·{} and {}·{} are nonzero",
                a(*arrow),
                a(successors[0]),
                a(*arrow),
                a(successors[1])
            ),
            StringViolation::TwoPredecessors { arrow, predecessors } => format!(
                "(b) both {}·{} and {}·{} are nonzero",
                a(predecessors[0]),
                a(*arrow),
                a(predecessors[1]),
                a(*arrow)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringAlgebraCheck {
    pub holds: bool,
    pub violation: Option<StringViolation>,
}

/// A forbidden local configuration for distributivity of the pretorsion lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "configuration", rename_all = "snake_case")]
pub enum DistributivityWitness {
    /// (i): two arrows (loops included) end at `vertex`.
    TwoEntering { vertex: usize, arrows: [usize; 2] },
    /// (ii): three arrows (loops included) start at `vertex`.
    ThreeExiting { vertex: usize, arrows: [usize; 3] },
    /// (iii): one arrow `entering` and two arrows `exiting` with both composites nonzero.
    UnrelatedFork {
        vertex: usize,
        entering: usize,
        exiting: [usize; 2],
    },
}

impl DistributivityWitness {
    pub fn family(&self) -> &'static str {
        match self {
            DistributivityWitness::TwoEntering { .. } => "i",
            DistributivityWitness::ThreeExiting { .. } => "ii",
            DistributivityWitness::UnrelatedFork { .. } => "iii",
        }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        let v = |i: usize| q.vertices()[i].as_str();
        let a = |i: usize| q.arrow(i).name.as_str();
        match self {
            DistributivityWitness::TwoEntering { vertex, arrows } => format!(
                "(i) arrows {} and {} both end at vertex {}",
                a(arrows[0]),
                a(arrows[1]),
                v(*vertex)
            ),
            DistributivityWitness::ThreeExiting { vertex, arrows } => format!(
                "(ii) arrows {}, {} and {} all start at vertex {}",
                a(arrows[0]),
                a(arrows[1]),
                a(arrows[2]),
                v(*vertex)
            ),
            DistributivityWitness::UnrelatedFork {
                vertex,
                entering,
                exiting,
            } => format!(
                "(iii) at vertex {} neither {}·{} nor {}·{} lies in the ideal",
                v(*vertex),
                a(*entering),
                a(exiting[0]),
                a(*entering),
                a(exiting[1])
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum LrdWitness {
    NotDistributive(DistributivityWitness),
    Loop { arrow: usize },
    /// A rotation of an oriented cycle that is nonzero in the algebra.
    CycleNotInIdeal { arrows: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criterion<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Criterion<W> {
    fn from_witness(witness: Option<W>) -> Self {
        Criterion {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Summary of the combinatorial predicates of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_string_algebra: bool,
    pub string_violation: Option<String>,
    pub band: Option<String>,
    pub distributive: bool,
    pub distributive_witness: Option<String>,
    pub distributive_family: Option<String>,
    pub lrd: bool,
    pub lrd_witness: Option<String>,
    /// Vertex labels of each connected component.
    pub components: Vec<Vec<String>>,
}

impl BoundQuiverAlgebra {
    pub fn is_string_algebra(&self) -> StringAlgebraCheck {
        let q = self.quiver();
        let mut violation = None;
        for v in 0..q.vertex_count() {
            if q.arrows_into(v).len() > 2 {
                violation = Some(StringViolation::InDegree { vertex: v });
            } else if q.arrows_out_of(v).len() > 2 {
                violation = Some(StringViolation::OutDegree { vertex: v });
            }
            if violation.is_some() {
                break;
            }
        }
        if violation.is_none() {
            for b in 0..q.arrows().len() {
                let arrow = q.arrow(b);
                let succ: Vec<usize> = q
                    .arrows_out_of(arrow.target)
                    .into_iter()
                    .filter(|&g| !self.composite_vanishes(b, g))
                    .collect();
                if succ.len() > 1 {
                    violation = Some(StringViolation::TwoSuccessors {
                        arrow: b,
                        successors: [succ[0], succ[1]],
                    });
                    break;
                }
                let pred: Vec<usize> = q
                    .arrows_into(arrow.source)
                    .into_iter()
                    .filter(|&a| !self.composite_vanishes(a, b))
                    .collect();
                if pred.len() > 1 {
                    violation = Some(StringViolation::TwoPredecessors {
                        arrow: b,
                        predecessors: [pred[0], pred[1]],
                    });
                    break;
                }
            }
        }
        StringAlgebraCheck {
            holds: violation.is_none(),
            violation,
        }
    }

    /// The quiver criterion for distributivity of the pretorsion lattice: no
    /// vertex with two entering arrows, none with three exiting arrows, and at a
    /// vertex with one entering `α` and two exiting `β, γ`, one of `αβ`, `αγ`
    /// lies in the ideal. Loops count both as entering and as exiting.
    pub fn distributivity_criterion(&self) -> Criterion<DistributivityWitness> {
        let q = self.quiver();
        for v in 0..q.vertex_count() {
            let ins = q.arrows_into(v);
            let outs = q.arrows_out_of(v);
            if ins.len() >= 2 {
                return Criterion::from_witness(Some(DistributivityWitness::TwoEntering {
                    vertex: v,
                    arrows: [ins[0], ins[1]],
                }));
            }
            if outs.len() >= 3 {
                return Criterion::from_witness(Some(DistributivityWitness::ThreeExiting {
                    vertex: v,
                    arrows: [outs[0], outs[1], outs[2]],
                }));
            }
            if ins.len() == 1
                && outs.len() == 2
                && !self.composite_vanishes(ins[0], outs[0])
                && !self.composite_vanishes(ins[0], outs[1])
            {
                return Criterion::from_witness(Some(DistributivityWitness::UnrelatedFork {
                    vertex: v,
                    entering: ins[0],
                    exiting: [outs[0], outs[1]],
                }));
            }
        }
        Criterion::from_witness(None)
    }

    /// Distributive, loop-free, and every oriented cycle is zero in the algebra.
    pub fn lrd_criterion(&self) -> Criterion<LrdWitness> {
        if let Some(w) = self.distributivity_criterion().witness {
            return Criterion::from_witness(Some(LrdWitness::NotDistributive(w)));
        }
        let q = self.quiver();
        if let Some(a) = (0..q.arrows().len()).find(|&a| q.arrow(a).is_loop()) {
            return Criterion::from_witness(Some(LrdWitness::Loop { arrow: a }));
        }
        for cycle in self.simple_cycles() {
            for r in 0..cycle.len() {
                let rotated = [&cycle[r..], &cycle[..r]].concat();
                if !self.in_ideal(&rotated) {
                    return Criterion::from_witness(Some(LrdWitness::CycleNotInIdeal { arrows: rotated }));
                }
            }
        }
        Criterion::from_witness(None)
    }

    /// Oriented cycles visiting no vertex twice, each listed once starting at its
    /// smallest vertex. Every closed path contains one of these (up to rotation)
    /// as a contiguous block.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let q = self.quiver();
        let mut out = Vec::new();
        for root in 0..q.vertex_count() {
            let mut stack: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![root], Vec::new())];
            while let Some((verts, arrows)) = stack.pop() {
                let here = *verts.last().expect("nonempty");
                for a in q.arrows_out_of(here) {
                    let t = q.arrow(a).target;
                    let mut path = arrows.clone();
                    path.push(a);
                    if t == root {
                        out.push(path);
                    } else if t > root && !verts.contains(&t) {
                        let mut vs = verts.clone();
                        vs.push(t);
                        stack.push((vs, path));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Vertex sets of the connected components of the underlying graph, each
    /// sorted, ordered by their smallest vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let q = self.quiver();
        let n = q.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in q.arrows() {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }

    pub fn connected_components(&self) -> Vec<BoundQuiverAlgebra> {
        self.component_vertices()
            .iter()
            .map(|vs| self.restrict(vs))
            .collect()
    }

    pub fn classify(&self) -> ClassificationReport {
        let q = self.quiver();
        let string = self.is_string_algebra();
        let band: Option<Band> = if string.holds { self.find_band().ok().flatten() } else { None };
        let dist = self.distributivity_criterion();
        let lrd = self.lrd_criterion();
        let lrd_witness = lrd.witness.as_ref().map(|w| match w {
            LrdWitness::NotDistributive(d) => format!("not distributive: {}", d.describe(q)),
            LrdWitness::Loop { arrow } => format!("loop {}", q.arrow(*arrow).name),
            LrdWitness::CycleNotInIdeal { arrows } => format!(
                "cycle {} is nonzero",
                arrows
                    .iter()
                    .map(|&a| q.arrow(a).name.as_str())
                    .collect::<Vec<_>>()
                    .join("·")
            ),
        });
        ClassificationReport {
            is_string_algebra: string.holds,
            string_violation: string.violation.map(|v| v.describe(q)),
            band: band.map(|b| b.display),
            distributive: dist.holds,
            distributive_family: dist.witness.as_ref().map(|w| w.family().to_string()),
            distributive_witness: dist.witness.map(|w| w.describe(q)),
            lrd: lrd.holds,
            lrd_witness,
            components: self
                .component_vertices()
                .iter()
                .map(|vs| vs.iter().map(|&v| q.vertices()[v].clone()).collect())
                .collect(),
        }
    }
}
