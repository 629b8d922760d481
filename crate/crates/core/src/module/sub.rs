use super::{hom_space, ModuleError, Morphism, Representation};
use crate::linalg::{Matrix, Scalar, Subspace};

/// A family of subspaces, one per vertex, of some parent representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    pub spaces: Vec<Subspace>,
}

impl Submodule {
    pub fn new(spaces: Vec<Subspace>) -> Self {
        Submodule { spaces }
    }

    pub fn zero(parent: &Representation) -> Self {
        Submodule::new(
            parent
                .dims()
                .iter()
                .map(|&d| Subspace::zero(parent.field(), d))
                .collect(),
        )
    }

    pub fn whole(parent: &Representation) -> Self {
        Submodule::new(
            parent
                .dims()
                .iter()
                .map(|&d| Subspace::full(parent.field(), d))
                .collect(),
        )
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn is_whole(&self) -> bool {
        self.spaces.iter().all(Subspace::is_full)
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.sum(b).expect("same parent"))
                .collect(),
        )
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        Submodule::new(
            self.spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| a.intersect(b).expect("same parent"))
                .collect(),
        )
    }

    pub fn contains(&self, other: &Submodule) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains(b).expect("same parent"))
    }

    /// Whether every arrow maps the subspace at its source into the one at its target.
    pub fn is_submodule_of(&self, parent: &Representation) -> bool {
        if self.spaces.len() != parent.dims().len()
            || self.spaces.iter().zip(parent.dims()).any(|(s, &d)| s.ambient_dim() != d)
        {
            return false;
        }
        let q = parent.algebra().quiver();
        q.arrows().iter().enumerate().all(|(i, a)| {
            let img = self.spaces[a.source].map(parent.map(i)).expect("shape");
            self.spaces[a.target].contains(&img).expect("shape")
        })
    }

    /// The submodule as a representation in the canonical bases of its
    /// subspaces, with the inclusion into the parent.
    pub fn to_representation(&self, parent: &Representation) -> Result<(Representation, Morphism), ModuleError> {
        if !self.is_submodule_of(parent) {
            return Err(ModuleError::NotASubmodule);
        }
        let field = parent.field();
        let q = parent.algebra().quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let src = &self.spaces[a.source];
                let tgt = &self.spaces[a.target];
                let cols: Vec<Vec<Scalar>> = src
                    .basis()
                    .iter()
                    .map(|b| tgt.coordinates(&parent.map(i).apply(b)).expect("stable subspace"))
                    .collect();
                Matrix::from_column_vectors(field, tgt.dim(), &cols)
            })
            .collect();
        let sub = parent.with_maps_unchecked(self.dims(), maps);
        let inclusion = Morphism {
            components: self
                .spaces
                .iter()
                .map(|s| Matrix::from_column_vectors(field, s.ambient_dim(), s.basis()))
                .collect(),
        };
        Ok((sub, inclusion))
    }
}

/// Sum of the images of all morphisms from the generators into `n`.
pub fn trace(generators: &[Representation], n: &Representation) -> Result<Submodule, ModuleError> {
    let mut acc = Submodule::zero(n);
    for g in generators {
        let h = hom_space(g, n)?;
        for f in &h.basis {
            acc = acc.sum(&f.image());
        }
        if acc.is_whole() {
            break;
        }
    }
    Ok(acc)
}

/// Intersection of the kernels of all morphisms from `n` to the cogenerators.
pub fn reject(cogenerators: &[Representation], n: &Representation) -> Result<Submodule, ModuleError> {
    let mut acc = Submodule::whole(n);
    for c in cogenerators {
        let h = hom_space(n, c)?;
        for f in &h.basis {
            acc = acc.intersect(&f.kernel());
        }
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `n / s` on the pivot-column complements of `s`, with the projection.
pub fn quotient_by(n: &Representation, s: &Submodule) -> Result<(Representation, Morphism), ModuleError> {
    if !s.is_submodule_of(n) {
        return Err(ModuleError::NotASubmodule);
    }
    let field = n.field();
    let free: Vec<Vec<usize>> = s.spaces.iter().map(Subspace::free_columns).collect();
    let project = |v: usize, x: &[Scalar]| -> Vec<Scalar> {
        let r = s.spaces[v].reduce(x);
        free[v].iter().map(|&c| r[c].clone()).collect()
    };
    let unit = |d: usize, c: usize| -> Vec<Scalar> {
        (0..d).map(|i| if i == c { field.one() } else { field.zero() }).collect()
    };
    let dims: Vec<usize> = free.iter().map(Vec::len).collect();
    let q = n.algebra().quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let cols: Vec<Vec<Scalar>> = free[a.source]
                .iter()
                .map(|&c| project(a.target, &n.map(i).apply(&unit(n.dim(a.source), c))))
                .collect();
            Matrix::from_column_vectors(field, dims[a.target], &cols)
        })
        .collect();
    let projection = Morphism {
        components: (0..n.dims().len())
            .map(|v| {
                let cols: Vec<Vec<Scalar>> = (0..n.dim(v)).map(|c| project(v, &unit(n.dim(v), c))).collect();
                Matrix::from_column_vectors(field, dims[v], &cols)
            })
            .collect(),
    };
    Ok((n.with_maps_unchecked(dims, maps), projection))
}

/// The radical, the top dimensions, and whether the top is simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalTop {
    pub radical: Submodule,
    pub top_dims: Vec<usize>,
    pub unique_max: bool,
}

/// Image of `s` under all arrows, summed per target vertex.
fn arrow_image(m: &Representation, s: &Submodule) -> Submodule {
    let mut acc = Submodule::zero(m);
    let q = m.algebra().quiver();
    for (i, a) in q.arrows().iter().enumerate() {
        let img = s.spaces[a.source].map(m.map(i)).expect("shape");
        acc.spaces[a.target] = acc.spaces[a.target].sum(&img).expect("shape");
    }
    acc
}

pub fn radical_top(m: &Representation) -> RadicalTop {
    let radical = arrow_image(m, &Submodule::whole(m));
    let top_dims: Vec<usize> = m.dims().iter().zip(radical.dims()).map(|(d, r)| d - r).collect();
    let unique_max = top_dims.iter().sum::<usize>() == 1;
    RadicalTop {
        radical,
        top_dims,
        unique_max,
    }
}

/// Dimension vectors of the layers `rad^k M / rad^(k+1) M`, top first.
pub fn radical_layers(m: &Representation) -> Vec<Vec<usize>> {
    let mut layers = Vec::new();
    let mut current = Submodule::whole(m);
    while !current.is_zero() {
        let next = arrow_image(m, &current);
        layers.push(current.dims().iter().zip(next.dims()).map(|(a, b)| a - b).collect());
        current = next;
    }
    layers
}

/// Stacked composition-factor label such as `1 3/2`: radical layers from the
/// top, separated by `/`, vertices within a layer in vertex order.
pub fn layer_label(m: &Representation) -> String {
    if m.is_zero() {
        return "0".into();
    }
    let names = m.algebra().quiver().vertices();
    radical_layers(m)
        .iter()
        .map(|layer| {
            layer
                .iter()
                .enumerate()
                .flat_map(|(v, &k)| std::iter::repeat(names[v].as_str()).take(k))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("/")
}
