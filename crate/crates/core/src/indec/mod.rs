//! Catalogs of indecomposable modules up to isomorphism.

mod brute;

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraError, BoundQuiverAlgebra, StringWalk};
use crate::linalg::{Field, Matrix};
use crate::module::{ar_translate, is_isomorphic, layer_label, ModuleError, Representation};

pub use brute::{enumerate_brute_force, BRUTE_FORCE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndecError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(
        "dimension bound {bound} reached: dimension vector {dims:?} carries {count} pairwise non-isomorphic \
         indecomposables, a one-parameter family over GF({prime})"
    )]
    DimBoundReached {
        bound: usize,
        dims: Vec<usize>,
        count: usize,
        prime: u32,
    },
    #[error("indecomposable of dimension vector {dims:?} has endomorphism residue of dimension {residue_dim}")]
    EndResidueTooLarge { dims: Vec<usize>, residue_dim: usize },
    #[error("dimension vector {dims:?} needs {entries} matrix entries over GF({prime}); too many to enumerate")]
    SearchSpaceTooLarge { dims: Vec<usize>, entries: usize, prime: u32 },
    #[error("brute-force enumeration needs a prime field")]
    NeedsPrimeField,
    #[error(
        "catalog is not closed: {what} with dimension vector {dims:?} is missing at dimension bound {bound}"
    )]
    Incomplete { what: String, dims: Vec<usize>, bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum CatalogMethod {
    Strings,
    BruteForce { prime: u32, dim_bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogOptions {
    /// Field for string-module catalogs.
    pub field: Field,
    /// Characteristic used by the brute-force enumerator.
    pub prime: u32,
    /// Per-vertex dimension bound for the brute-force enumerator.
    pub dim_bound: usize,
    /// Use brute force even when strings would apply.
    pub force_brute: bool,
}

impl Default for CatalogOptions {
    fn default() -> Self {
        CatalogOptions {
            field: Field::Rational,
            prime: 2,
            dim_bound: 3,
            force_brute: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IndecEntry {
    pub module: Representation,
    pub label: String,
    pub string: Option<StringWalk>,
}

/// The indecomposable modules of an algebra, one per isomorphism class, in a
/// fixed order: total dimension, then dimension vector (earlier vertices
/// first), then string or enumeration order.
#[derive(Clone, Debug)]
pub struct IndecCatalog {
    algebra: Arc<BoundQuiverAlgebra>,
    field: Field,
    method: CatalogMethod,
    entries: Vec<IndecEntry>,
    index: HashMap<String, usize>,
}

/// The string module: one basis vector per position of the walk, identity
/// entries along its letters.
pub fn string_to_module(algebra: &Arc<BoundQuiverAlgebra>, field: Field, w: &StringWalk) -> Representation {
    let q = algebra.quiver();
    let verts = w.vertices(q);
    let n = q.vertex_count();
    // position -> index inside its vertex space
    let mut slot = vec![0; verts.len()];
    let mut dims = vec![0; n];
    for (i, &v) in verts.iter().enumerate() {
        slot[i] = dims[v];
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
        .collect();
    for (i, l) in w.letters.iter().enumerate() {
        let (from, to) = if l.inverse { (i + 1, i) } else { (i, i + 1) };
        maps[l.arrow].set(slot[to], slot[from], field.one());
    }
    Representation::new(algebra.clone(), field, dims, maps).expect("strings avoid relations")
}

fn order_key(m: &Representation) -> (usize, Vec<std::cmp::Reverse<usize>>) {
    (m.total_dim(), m.dims().iter().map(|&d| std::cmp::Reverse(d)).collect())
}

impl IndecCatalog {
    /// String modules when the algebra is a string algebra without bands,
    /// brute force over `GF(p)` when it is not a string algebra.
    pub fn build(algebra: Arc<BoundQuiverAlgebra>, options: &CatalogOptions) -> Result<Self, IndecError> {
        let string = algebra.is_string_algebra();
        if string.holds && !options.force_brute {
            if let Some(b) = algebra.find_band()? {
                return Err(AlgebraError::BandPresent(b.display).into());
            }
            return Ok(Self::from_strings(algebra, options.field)?);
        }
        let field = Field::prime(options.prime).map_err(ModuleError::from)?;
        let modules = enumerate_brute_force(&algebra, field, options.dim_bound)?;
        let catalog = Self::from_modules(
            algebra,
            field,
            CatalogMethod::BruteForce {
                prime: options.prime,
                dim_bound: options.dim_bound,
            },
            modules.into_iter().map(|m| (m, None)).collect(),
        );
        catalog.check_closed(options.dim_bound)?;
        Ok(catalog)
    }

    /// A bounded enumeration is only trusted when the indecomposable
    /// projectives and injectives, and the translate of every entry, are
    /// already in the list.
    fn check_closed(&self, bound: usize) -> Result<(), IndecError> {
        let n = self.algebra.vertex_count();
        let mut required: Vec<(String, Representation)> = Vec::new();
        for v in 0..n {
            let name = &self.algebra.quiver().vertices()[v];
            required.push((format!("projective P{name}"), Representation::projective(self.algebra.clone(), self.field, v)));
            required.push((format!("injective I{name}"), Representation::injective(self.algebra.clone(), self.field, v)));
        }
        for e in &self.entries {
            let t = ar_translate(&e.module)?;
            if !t.is_zero() {
                required.push((format!("the translate of {}", e.label), t));
            }
        }
        for (what, m) in required {
            if self.find(&m)?.is_none() {
                return Err(IndecError::Incomplete {
                    what,
                    dims: m.dims().to_vec(),
                    bound,
                });
            }
        }
        Ok(())
    }

    /// Index of the entry isomorphic to the indecomposable `m`.
    pub fn find(&self, m: &Representation) -> Result<Option<usize>, ModuleError> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.module.dims() == m.dims() && is_isomorphic(&e.module, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn from_strings(algebra: Arc<BoundQuiverAlgebra>, field: Field) -> Result<Self, IndecError> {
        let strings = algebra.enumerate_strings()?;
        let mut items: Vec<(Representation, Option<StringWalk>)> = strings
            .into_iter()
            .map(|w| (string_to_module(&algebra, field, &w), Some(w)))
            .collect();
        items.sort_by(|(m, w), (n, v)| {
            order_key(m).cmp(&order_key(n)).then_with(|| {
                let (w, v) = (w.as_ref().expect("string"), v.as_ref().expect("string"));
                w.cmp_key(v)
            })
        });
        Ok(Self::from_modules(algebra, field, CatalogMethod::Strings, items))
    }

    /// Wraps an already deduplicated list; the order is normalised and labels
    /// are assigned from radical layers.
    pub fn from_modules(
        algebra: Arc<BoundQuiverAlgebra>,
        field: Field,
        method: CatalogMethod,
        mut items: Vec<(Representation, Option<StringWalk>)>,
    ) -> Self {
        items.sort_by_key(|(m, _)| order_key(m));
        let mut index = HashMap::new();
        let mut entries = Vec::with_capacity(items.len());
        for (i, (m, string)) in items.into_iter().enumerate() {
            let mut label = layer_label(&m);
            while index.contains_key(&label) {
                label.push('\'');
            }
            index.insert(label.clone(), i);
            entries.push(IndecEntry {
                module: m.with_label(label.clone()),
                label,
                string,
            });
        }
        IndecCatalog {
            algebra,
            field,
            method,
            entries,
            index,
        }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn method(&self) -> CatalogMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[IndecEntry] {
        &self.entries
    }

    pub fn module(&self, i: usize) -> &Representation {
        &self.entries[i].module
    }

    pub fn modules(&self) -> Vec<Representation> {
        self.entries.iter().map(|e| e.module.clone()).collect()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.entries[i].label
    }

    pub fn labels(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

#[cfg(test)]
mod tests;
