use super::{ModuleError, Representation, Submodule};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

/// A module morphism given by one matrix per vertex
/// (rows = dimension of the target, columns = of the source).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub components: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(m: &Representation, n: &Representation) -> Self {
        Morphism {
            components: (0..m.dims().len())
                .map(|v| Matrix::zeros(m.field(), n.dim(v), m.dim(v)))
                .collect(),
        }
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism {
            components: m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect(),
        }
    }

    /// `self ∘ first` (apply `first`, then `self`).
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g.mul(f).expect("composable morphisms"))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b).expect("same shape"))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism {
            components: self.components.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    /// Checks `N_a f_s = f_t M_a` for every arrow.
    pub fn is_homomorphism(&self, m: &Representation, n: &Representation) -> bool {
        let q = m.algebra().quiver();
        q.arrows().iter().enumerate().all(|(i, a)| {
            let lhs = n.map(i).mul(&self.components[a.source]).expect("shape");
            let rhs = self.components[a.target].mul(m.map(i)).expect("shape");
            lhs == rhs
        })
    }

    pub fn image(&self) -> Submodule {
        Submodule::new(self.components.iter().map(Matrix::image).collect())
    }

    pub fn kernel(&self) -> Submodule {
        Submodule::new(self.components.iter().map(Matrix::kernel).collect())
    }

    /// Entries of all components, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.components
            .iter()
            .flat_map(|m| m.entries().iter().cloned())
            .collect()
    }

    /// `k`-th power of an endomorphism.
    pub fn power(&self, k: usize) -> Morphism {
        let mut acc = Morphism {
            components: self
                .components
                .iter()
                .map(|m| Matrix::identity(m.field(), m.rows()))
                .collect(),
        };
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.after(&base);
            }
            base = base.after(&base);
            e >>= 1;
        }
        acc
    }
}

/// All morphisms between two representations, as a subspace of the flattened
/// component entries together with its canonical basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
    solutions: Subspace,
    shapes: Vec<(usize, usize)>,
    field: Field,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn solution_space(&self) -> &Subspace {
        &self.solutions
    }

    /// Coordinates of a morphism in the canonical basis.
    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        self.solutions.coordinates(&f.flatten())
    }

    /// The morphism with the given coordinates.
    pub fn combination(&self, coeffs: &[Scalar]) -> Morphism {
        unflatten(self.field, &self.shapes, &self.solutions.vector(coeffs))
    }

    /// Subspace of coordinate space spanned by the given morphisms.
    pub fn span(&self, fs: &[Morphism]) -> Subspace {
        let coords: Vec<Vec<Scalar>> = fs
            .iter()
            .map(|f| self.coordinates(f).expect("morphism lies in the hom space"))
            .collect();
        Subspace::from_vectors(self.field, self.dim(), &coords)
    }
}

pub(crate) fn unflatten(field: Field, shapes: &[(usize, usize)], flat: &[Scalar]) -> Morphism {
    let mut offset = 0;
    let components = shapes
        .iter()
        .map(|&(r, c)| {
            let m = Matrix::from_scalars(field, r, c, flat[offset..offset + r * c].to_vec()).expect("shape");
            offset += r * c;
            m
        })
        .collect();
    Morphism { components }
}

/// Solves the commuting-square system `N_a X_s - X_t M_a = 0` over all arrows.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.field() != n.field() {
        return Err(ModuleError::Linalg(crate::linalg::LinalgError::FieldMismatch));
    }
    let field = m.field();
    let q = m.algebra().quiver();
    let nv = q.vertex_count();
    let shapes: Vec<(usize, usize)> = (0..nv).map(|v| (n.dim(v), m.dim(v))).collect();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for &(r, c) in &shapes {
        offsets.push(total);
        total += r * c;
    }
    let var = |v: usize, i: usize, j: usize| offsets[v] + i * shapes[v].1 + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        // entry (i, j) of N_a X_s - X_t M_a, i < dim N_t, j < dim M_s
        for i in 0..n.dim(t) {
            for j in 0..m.dim(s) {
                let mut row = vec![field.zero(); total];
                for k in 0..n.dim(s) {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let x = var(s, k, j);
                        row[x] = &row[x] + c;
                    }
                }
                for k in 0..m.dim(t) {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let x = var(t, i, k);
                        row[x] = &row[x] - c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        Subspace::full(field, total)
    } else {
        Matrix::from_row_vectors(field, total, &rows).kernel()
    };
    let basis = solutions
        .basis()
        .iter()
        .map(|v| unflatten(field, &shapes, v))
        .collect();
    Ok(HomSpace {
        basis,
        solutions,
        shapes,
        field,
    })
}
