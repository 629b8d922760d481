//! Serializable report documents. Field order is fixed and every list is in
//! catalog or lattice order, so output is byte-for-byte reproducible.

use std::collections::BTreeMap;

use pretors_core::algebra::ClassificationReport;
use pretors_core::indec::{CatalogMethod, IndecCatalog};
use pretors_core::lattice::{indices_of, order_ideal_lattice, Bits, FiniteLattice, SemidistributiveSide};
use pretors_core::linalg::Field;
use pretors_core::module::{is_brick, is_tau_rigid, radical_top, ModuleError};
use pretors_core::pretorsion::{PretorsionContext, VerifiedTheory};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub name: String,
    pub is_string_algebra: bool,
    pub string_violation: Option<String>,
    pub band: Option<String>,
    pub distributive: bool,
    pub distributive_family: Option<String>,
    pub distributive_witness: Option<String>,
    pub lrd: bool,
    pub lrd_witness: Option<String>,
    pub components: Vec<Vec<String>>,
}

impl ClassifyReport {
    pub fn new(name: &str, c: ClassificationReport) -> Self {
        ClassifyReport {
            name: name.to_string(),
            is_string_algebra: c.is_string_algebra,
            string_violation: c.string_violation,
            band: c.band,
            distributive: c.distributive,
            distributive_family: c.distributive_family,
            distributive_witness: c.distributive_witness,
            lrd: c.lrd,
            lrd_witness: c.lrd_witness,
            components: c.components,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndecRow {
    pub index: usize,
    pub label: String,
    pub dims: Vec<usize>,
    pub string: Option<String>,
    pub brick: bool,
    pub tau_rigid: bool,
    pub unique_max: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndecsReport {
    pub name: String,
    pub field: String,
    pub method: String,
    pub count: usize,
    pub indecomposables: Vec<IndecRow>,
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".to_string(),
        Field::Prime(p) => format!("GF({p})"),
    }
}

fn method_name(m: CatalogMethod) -> String {
    match m {
        CatalogMethod::Strings => "strings".to_string(),
        CatalogMethod::BruteForce { prime, dim_bound } => format!("brute_force(p={prime}, bound={dim_bound})"),
    }
}

impl IndecsReport {
    pub fn new(name: &str, catalog: &IndecCatalog) -> Result<Self, ModuleError> {
        let q = catalog.algebra().quiver();
        let mut rows = Vec::with_capacity(catalog.len());
        for (i, e) in catalog.entries().iter().enumerate() {
            rows.push(IndecRow {
                index: i,
                label: e.label.clone(),
                dims: e.module.dims().to_vec(),
                string: e.string.as_ref().map(|w| w.display(q)),
                brick: is_brick(&e.module)?,
                tau_rigid: is_tau_rigid(&e.module)?,
                unique_max: radical_top(&e.module).unique_max,
            });
        }
        Ok(IndecsReport {
            name: name.to_string(),
            field: field_name(catalog.field()),
            method: method_name(catalog.method()),
            count: rows.len(),
            indecomposables: rows,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LatticeKind {
    Pretorsion,
    Pretorsionfree,
    Torsion,
    BirkhoffOfTors,
}

impl LatticeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LatticeKind::Pretorsion => "pretorsion",
            LatticeKind::Pretorsionfree => "pretorsionfree",
            LatticeKind::Torsion => "torsion",
            LatticeKind::BirkhoffOfTors => "birkhoff-of-tors",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRow {
    pub index: usize,
    pub label: String,
    /// Labels of the ground-set points the element contains.
    pub members: Vec<String>,
    /// Total dimension of the members, or the member count when the ground
    /// set is not a set of modules. Used to rank DOT output.
    pub rank: usize,
    pub join_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub side: Option<String>,
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaRow {
    pub join_irreducible: String,
    pub lower_cover: String,
    pub maximal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub name: String,
    pub kind: String,
    pub size: usize,
    pub elements: Vec<ElementRow>,
    pub hasse_edges: Vec<[usize; 2]>,
    pub join_irreducibles: Vec<String>,
    pub distributive: bool,
    pub distributivity_failure: Option<Triple>,
    pub semidistributive: bool,
    pub semidistributivity_failure: Option<Triple>,
    pub kappa_failures: Vec<KappaRow>,
    /// Size of the lattice of order ideals of the join-irreducibles.
    pub birkhoff_size: usize,
}

impl LatticeReport {
    /// `ground_labels[i]` and `weights[i]` describe ground point `i`.
    pub fn new(name: &str, kind: LatticeKind, l: &FiniteLattice, ground_labels: &[String], weights: &[usize]) -> Self {
        let ji = l.join_irreducible_indices();
        let members = |b: Bits| -> Vec<usize> { indices_of(b) };
        let elements = (0..l.len())
            .map(|i| {
                let m = members(l.element(i));
                ElementRow {
                    index: i,
                    label: l.label(i).to_string(),
                    rank: m.iter().map(|&k| weights[k]).sum(),
                    members: m.iter().map(|&k| ground_labels[k].clone()).collect(),
                    join_irreducible: ji.contains(&i),
                }
            })
            .collect();
        let lab = |i: usize| l.label(i).to_string();
        let distributivity_failure = l.is_distributive().err().map(|f| Triple {
            side: None,
            x: lab(f.x),
            y: lab(f.y),
            z: lab(f.z),
        });
        let sd = l.is_semidistributive();
        LatticeReport {
            name: name.to_string(),
            kind: kind.as_str().to_string(),
            size: l.len(),
            elements,
            hasse_edges: l.hasse_edges().into_iter().map(|(a, b)| [a, b]).collect(),
            join_irreducibles: ji.iter().map(|&i| lab(i)).collect(),
            distributive: distributivity_failure.is_none(),
            distributivity_failure,
            semidistributive: sd.holds,
            semidistributivity_failure: sd.failure.map(|f| Triple {
                side: Some(
                    match f.side {
                        SemidistributiveSide::Join => "join",
                        SemidistributiveSide::Meet => "meet",
                    }
                    .to_string(),
                ),
                x: lab(f.x),
                y: lab(f.y),
                z: lab(f.z),
            }),
            kappa_failures: sd
                .kappa_failures
                .iter()
                .map(|k| KappaRow {
                    join_irreducible: lab(k.j),
                    lower_cover: lab(k.lower_cover),
                    maximal: k.maximal.iter().map(|&i| lab(i)).collect(),
                })
                .collect(),
            birkhoff_size: order_ideal_lattice(&l.join_irreducibles()).len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceRow {
    pub module: String,
    pub torsion_dims: Vec<usize>,
    pub free_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryRow {
    pub torsion: String,
    pub free: String,
    pub trivial: String,
    pub route: String,
    pub audited: bool,
    pub sequences: Vec<SequenceRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoriesReport {
    pub name: String,
    pub audit: bool,
    pub pairs_checked: usize,
    pub count: usize,
    pub routes: BTreeMap<String, usize>,
    /// Grouped by route, each group in lattice order.
    pub theories: Vec<TheoryRow>,
}

impl TheoriesReport {
    pub fn new(name: &str, ctx: &PretorsionContext, pairs_checked: usize, audit: bool, mut found: Vec<VerifiedTheory>) -> Self {
        found.sort_by_key(|t| t.route);
        let mut routes = BTreeMap::new();
        for t in &found {
            *routes.entry(t.route.as_str().to_string()).or_insert(0) += 1;
        }
        let theories = found
            .iter()
            .map(|t| TheoryRow {
                torsion: ctx.add_label(t.torsion),
                free: ctx.add_label(t.free),
                trivial: ctx.add_label(t.trivial),
                route: t.route.as_str().to_string(),
                audited: t.audited,
                sequences: t
                    .sequences
                    .iter()
                    .map(|s| SequenceRow {
                        module: ctx.catalog().label(s.module).to_string(),
                        torsion_dims: s.torsion_dims.clone(),
                        free_dims: s.free_dims.clone(),
                    })
                    .collect(),
            })
            .collect();
        TheoriesReport {
            name: name.to_string(),
            audit,
            pairs_checked,
            count: found.len(),
            routes,
            theories,
        }
    }
}
