#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use pretors_core::algebra::BoundQuiverAlgebra;
use pretors_core::format::QuiverFile;
use pretors_core::indec::{IndecCatalog, IndecError};
use pretors_core::lattice::{indices_of, Bits};
use pretors_core::linalg::Field;
use pretors_core::module::{
    enumerate_submodules, hom_space, quotient_by, radical_top, search_hom, ModuleError, Morphism, Representation,
};
use pretors_core::pretorsion::{separates_join, PretorsionContext};

/// Fixtures whose catalogs are complete.
pub const FINITE: &[&str] = &[
    "a1",
    "a1-a2",
    "a2",
    "a3-linear",
    "a3-rel",
    "a3-sink",
    "a3-source",
    "d4-rel",
    "d4-source",
    "d4-subspace",
    "loop-eps2",
    "loop-eps3",
    "loop-plus-arrow",
    "twocycle-exit",
    "twocycle-lrd",
];

/// Fixtures for which lattice construction is refused.
pub const REFUSED: &[&str] = &["kronecker", "loop-exit-norel", "three-exit", "two-loops"];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.toml"))
}

pub fn file(name: &str) -> QuiverFile {
    QuiverFile::load(&fixture_path(name)).unwrap()
}

pub fn algebra(name: &str) -> Arc<BoundQuiverAlgebra> {
    Arc::new(file(name).to_algebra().unwrap())
}

pub fn catalog(name: &str) -> Result<IndecCatalog, IndecError> {
    let f = file(name);
    IndecCatalog::build(Arc::new(f.to_algebra().unwrap()), &f.catalog_options(None, None, None).unwrap())
}

/// Catalog over `GF(2)`, with strings or brute force as the file dictates.
pub fn catalog_gf2(name: &str) -> Result<IndecCatalog, IndecError> {
    let f = file(name);
    let o = f.catalog_options(Some("gf"), Some(2), None).unwrap();
    IndecCatalog::build(Arc::new(f.to_algebra().unwrap()), &o)
}

pub fn context(name: &str) -> PretorsionContext {
    PretorsionContext::new(catalog(name).unwrap()).unwrap()
}

pub fn rep(alg: &Arc<BoundQuiverAlgebra>, dims: &[usize], maps: &[&[i64]]) -> Representation {
    Representation::from_flat(alg.clone(), Field::Rational, dims, maps).unwrap()
}

/// Whether `⊕ M^k` over `M` in `sources` maps onto `n`, by an exhaustive
/// search for a surjective combination. `k = min(dim Hom(M, n), dim top n)`
/// suffices: images of basis maps cover `top n` once some `dim top n` of them
/// do, and covering the top is enough.
pub fn epi_oracle(sources: &[Representation], n: &Representation) -> Result<bool, ModuleError> {
    let top: usize = radical_top(n).top_dims.iter().sum();
    let mut parts = Vec::new();
    for m in sources {
        let h = hom_space(m, n)?.dim();
        parts.extend(std::iter::repeat(m.clone()).take(h.min(top)));
    }
    if parts.is_empty() {
        return Ok(n.is_zero());
    }
    let x = Representation::direct_sum_all(n.algebra().clone(), n.field(), &parts)?;
    let h = hom_space(&x, n)?;
    Ok(search_hom(&h, n.total_dim(), Morphism::is_surjective)?.is_some())
}

/// Extension closure of a quotient-closed `t` decided by enumerating every
/// submodule `U` of every indecomposable `E` outside `t` and asking whether
/// both `U` and `E/U` lie in `t`. Needs a context over a prime field.
pub fn ext_oracle(ctx: &PretorsionContext, t: Bits) -> Result<bool, ModuleError> {
    for e in 0..ctx.len() {
        if t >> e & 1 == 1 {
            continue;
        }
        let m = ctx.module(e);
        for u in enumerate_submodules(m)? {
            if u.is_zero() || u.is_whole() {
                continue;
            }
            let (sub, _) = u.to_representation(m)?;
            let (quot, _) = quotient_by(m, &u)?;
            if ctx.in_gen_class(t, &sub).unwrap() && ctx.in_gen_class(t, &quot).unwrap() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn members(ctx: &PretorsionContext, s: Bits) -> Vec<Representation> {
    indices_of(s).into_iter().map(|i| ctx.module(i).clone()).collect()
}

/// A module from one of the non-distributivity examples, lying in the join of
/// `Gen(first)` and `Gen(second)`.
pub struct WitnessCase {
    pub family: &'static str,
    pub fixture: &'static str,
    pub first: Representation,
    pub second: Representation,
    pub module: Representation,
}

pub fn witness_cases() -> Vec<WitnessCase> {
    let mut out = Vec::new();

    let a = algebra("a3-sink");
    out.push(WitnessCase {
        family: "A3 with a sink",
        fixture: "a3-sink",
        first: rep(&a, &[1, 1, 0], &[&[1], &[]]),
        second: rep(&a, &[0, 1, 1], &[&[], &[1]]),
        module: rep(&a, &[1, 1, 1], &[&[1], &[1]]),
    });

    let a = algebra("kronecker");
    out.push(WitnessCase {
        family: "Kronecker",
        fixture: "kronecker",
        first: rep(&a, &[1, 1], &[&[1], &[0]]),
        second: rep(&a, &[1, 1], &[&[1], &[1]]),
        module: rep(&a, &[2, 1], &[&[1, 0], &[0, 1]]),
    });

    let a = algebra("d4-subspace");
    out.push(WitnessCase {
        family: "D4, three arrows out",
        fixture: "d4-subspace",
        first: rep(&a, &[0, 1, 1, 1], &[&[], &[1], &[1]]),
        second: rep(&a, &[1, 0, 1, 1], &[&[1], &[], &[1]]),
        module: rep(&a, &[1, 1, 1, 2], &[&[1, 0], &[1, 1], &[0, 1]]),
    });

    let a = algebra("d4-source");
    out.push(WitnessCase {
        family: "D4, arrow into the branch vertex",
        fixture: "d4-source",
        first: rep(&a, &[1, 1, 1, 1], &[&[1], &[1], &[1]]),
        second: rep(&a, &[0, 1, 1, 0], &[&[], &[1], &[]]),
        module: rep(&a, &[1, 2, 1, 1], &[&[1, 1], &[1, 0], &[0, 1]]),
    });

    let a = algebra("loop-plus-arrow");
    out.push(WitnessCase {
        family: "loop plus arrow",
        fixture: "loop-plus-arrow",
        first: rep(&a, &[1, 1], &[&[1], &[0]]),
        second: rep(&a, &[0, 2], &[&[], &[0, 0, 1, 0]]),
        module: rep(&a, &[1, 2], &[&[0, 1], &[0, 0, 1, 0]]),
    });

    let a = algebra("two-loops");
    out.push(WitnessCase {
        family: "two loops",
        fixture: "two-loops",
        first: rep(&a, &[2], &[&[0, 0, 0, 0], &[0, 0, 1, 0]]),
        second: rep(&a, &[2], &[&[0, 0, 1, 0], &[0, 0, 0, 0]]),
        module: rep(&a, &[3], &[&[0, 1, 0, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0, 0]]),
    });

    let a = algebra("three-exit");
    out.push(WitnessCase {
        family: "vertex with three exits",
        fixture: "three-exit",
        first: rep(&a, &[1, 1, 1], &[&[0], &[1], &[1]]),
        second: rep(&a, &[2, 1, 0], &[&[0, 0, 1, 0], &[1, 0], &[]]),
        module: rep(
            &a,
            &[3, 1, 1],
            &[&[0, 0, 0, 1, 0, 0, 0, 0, 0], &[1, 0, 1], &[0, 0, 1]],
        ),
    });

    let a = algebra("twocycle-exit");
    out.push(WitnessCase {
        family: "two-cycle with an exit",
        fixture: "twocycle-exit",
        first: rep(&a, &[0, 1, 1], &[&[], &[], &[1]]),
        second: rep(&a, &[2, 1, 1], &[&[1, 0], &[0, 1], &[1]]),
        module: rep(&a, &[2, 2, 1], &[&[1, 0, 1, 0], &[0, 0, 1, 0], &[0, 1]]),
    });

    let a = algebra("loop-exit-norel");
    out.push(WitnessCase {
        family: "loop with an exit, no relation",
        fixture: "loop-exit-norel",
        first: rep(&a, &[2, 2], &[&[0, 0, 1, 0], &[1, 0, 0, 1]]),
        second: rep(
            &a,
            &[4, 1],
            &[&[0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0], &[0, 0, 0, 1]],
        ),
        module: rep(
            &a,
            &[5, 2],
            &[
                &[0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                &[0, 1, 0, 0, 0, 0, 0, 0, 1, 0],
            ],
        ),
    });
    out
}

/// The module lies in the join of the two classes and in neither class.
pub fn witness_over(c: &WitnessCase, field: Field) -> WitnessCase {
    let f = |m: &Representation| m.change_field(field).unwrap();
    WitnessCase {
        family: c.family,
        fixture: c.fixture,
        first: f(&c.first),
        second: f(&c.second),
        module: f(&c.module),
    }
}

pub fn witness_holds(c: &WitnessCase) -> Result<bool, ModuleError> {
    let w = separates_join(&[c.first.clone()], &[c.second.clone()], &c.module)?;
    Ok(w.separates())
}
