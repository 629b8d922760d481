use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::ModuleError;
use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::linalg::{Field, Matrix};

/// A finite-dimensional representation: one vector space per vertex and one
/// matrix per arrow (rows = dimension at the target, columns = at the source).
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
    label: Option<String>,
}

/// Plain-data view used for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationData {
    pub label: Option<String>,
    pub dims: Vec<usize>,
    pub maps: Vec<ArrowMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowMatrix {
    pub arrow: String,
    pub matrix: Vec<Vec<String>>,
}

impl PartialEq for Representation {
    /// Structural equality (same matrices), not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.field == other.field && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

impl Representation {
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self, ModuleError> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(ModuleError::Shape(format!(
                "expected {} dimensions and {} matrices",
                q.vertex_count(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.field() != field {
                return Err(ModuleError::Linalg(crate::linalg::LinalgError::FieldMismatch));
            }
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(ModuleError::Shape(format!(
                    "matrix of {} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Representation {
            algebra,
            field,
            dims,
            maps,
            label: None,
        };
        for (rel, names) in rep.algebra.relations().iter().zip(rep.algebra.relation_names()) {
            if !rep.arrow_sequence_matrix(&rel.arrows).is_zero() {
                return Err(ModuleError::RelationViolated(names.join("·")));
            }
        }
        Ok(rep)
    }

    /// Builds a representation from flat row-major integer entries, one slice per arrow.
    pub fn from_flat(
        algebra: Arc<BoundQuiverAlgebra>,
        field: Field,
        dims: &[usize],
        maps: &[&[i64]],
    ) -> Result<Self, ModuleError> {
        let q = algebra.quiver();
        if maps.len() != q.arrows().len() || dims.len() != q.vertex_count() {
            return Err(ModuleError::Shape("wrong number of matrices or dimensions".into()));
        }
        let mats = q
            .arrows()
            .iter()
            .zip(maps)
            .map(|(a, m)| Matrix::from_i64(field, dims[a.target], dims[a.source], m))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(algebra, field, dims.to_vec(), mats)
    }

    pub fn zero(algebra: Arc<BoundQuiverAlgebra>, field: Field) -> Self {
        let n = algebra.vertex_count();
        Self::from_parts_unchecked(algebra, field, vec![0; n])
    }

    fn from_parts_unchecked(algebra: Arc<BoundQuiverAlgebra>, field: Field, dims: Vec<usize>) -> Self {
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            algebra,
            field,
            dims,
            maps,
            label: None,
        }
    }

    /// The simple module at vertex `v`.
    pub fn simple(algebra: Arc<BoundQuiverAlgebra>, field: Field, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        Self::from_parts_unchecked(algebra, field, dims)
    }

    /// The indecomposable projective `P_v`: basis the nonzero paths starting at
    /// `v`, an arrow acting by appending itself.
    pub fn projective(algebra: Arc<BoundQuiverAlgebra>, field: Field, v: usize) -> Self {
        let q = algebra.quiver();
        let n = q.vertex_count();
        let by_end: Vec<Vec<&Path>> = (0..n)
            .map(|x| algebra.paths_from(v).into_iter().filter(|p| p.end == x).collect())
            .collect();
        let dims: Vec<usize> = by_end.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (c, p) in by_end[a.source].iter().enumerate() {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                if let Some(r) = by_end[a.target].iter().position(|t| t.arrows == arrows) {
                    m.set(r, c, field.one());
                }
            }
            maps.push(m);
        }
        Representation {
            algebra,
            field,
            dims,
            maps,
            label: None,
        }
    }

    /// The indecomposable injective `I_v`: at `x` the dual of the paths `x -> v`;
    /// an arrow `a: x -> y` sends `q*` to the sum of `q'*` with `a·q' = q`.
    pub fn injective(algebra: Arc<BoundQuiverAlgebra>, field: Field, v: usize) -> Self {
        let q = algebra.quiver();
        let n = q.vertex_count();
        let by_start: Vec<Vec<&Path>> = (0..n)
            .map(|x| algebra.paths_to(v).into_iter().filter(|p| p.start == x).collect())
            .collect();
        let dims: Vec<usize> = by_start.iter().map(Vec::len).collect();
        let mut maps = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (r, qp) in by_start[a.target].iter().enumerate() {
                let mut arrows = vec![ai];
                arrows.extend(&qp.arrows);
                if let Some(c) = by_start[a.source].iter().position(|t| t.arrows == arrows) {
                    m.set(r, c, field.one());
                }
            }
            maps.push(m);
        }
        Representation {
            algebra,
            field,
            dims,
            maps,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Matrix of the path "a1 then a2 then ..." (product `M_ak ... M_a1`).
    pub fn arrow_sequence_matrix(&self, arrows: &[usize]) -> Matrix {
        let q = self.algebra.quiver();
        let start = arrows.first().map(|&a| q.arrow(a).source);
        let mut acc = match start {
            Some(s) => Matrix::identity(self.field, self.dims[s]),
            None => return Matrix::zeros(self.field, 0, 0),
        };
        for &a in arrows {
            acc = self.maps[a].mul(&acc).expect("composable path");
        }
        acc
    }

    pub fn path_matrix(&self, p: &Path) -> Matrix {
        if p.is_trivial() {
            Matrix::identity(self.field, self.dims[p.start])
        } else {
            self.arrow_sequence_matrix(&p.arrows)
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, ModuleError> {
        if !self.same_algebra(other) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if self.field != other.field {
            return Err(ModuleError::Linalg(crate::linalg::LinalgError::FieldMismatch));
        }
        Ok(Representation {
            algebra: self.algebra.clone(),
            field: self.field,
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect(),
            label: None,
        })
    }

    pub fn direct_sum_all(algebra: Arc<BoundQuiverAlgebra>, field: Field, parts: &[Representation]) -> Result<Representation, ModuleError> {
        parts
            .iter()
            .try_fold(Representation::zero(algebra, field), |acc, p| acc.direct_sum(p))
    }

    /// The same representation over another field (entries must be representable).
    pub fn change_field(&self, field: Field) -> Result<Representation, ModuleError> {
        let maps = self
            .maps
            .iter()
            .map(|m| m.to_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        let mut rep = Representation::new(self.algebra.clone(), field, self.dims.clone(), maps)?;
        rep.label = self.label.clone();
        Ok(rep)
    }

    pub fn data(&self) -> RepresentationData {
        let q = self.algebra.quiver();
        RepresentationData {
            label: self.label.clone(),
            dims: self.dims.clone(),
            maps: q
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| ArrowMatrix {
                    arrow: a.name.clone(),
                    matrix: m.to_string_rows(),
                })
                .collect(),
        }
    }

    pub(crate) fn with_maps_unchecked(&self, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            field: self.field,
            dims,
            maps,
            label: None,
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            return write!(f, "{l}");
        }
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", dims.join(","))
    }
}
