use serde::Serialize;

use super::{PretorsionContext, PretorsionError};
use crate::lattice::{indices_of, is_subset, Bits, FiniteLattice};
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::module::{hom_space, quotient_by, HomSpace};

/// How a pair was accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// One side is the whole module category.
    FullCategory,
    /// A torsion pair in the classical sense: both sides extension-closed and `T ∩ F = 0`.
    Classic,
    /// Both sides extension-closed and `⊥F ⊆ T`, with nonzero trivial class.
    Condition1,
    /// `add(T ∪ F)` is everything.
    Condition3,
    /// Accepted by the definitional check alone.
    FullCheck,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::FullCategory => "full_category",
            Route::Classic => "classic",
            Route::Condition1 => "condition1",
            Route::Condition3 => "condition3",
            Route::FullCheck => "full_check",
        }
    }
}

/// Why a pair is not a pretorsion theory. Indices refer to the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    /// `module` has no maps from `T` but is not in `F`.
    RightPerpNotInFree { module: usize },
    /// `module` has no maps to `F` but is not in `T`.
    LeftPerpNotInTorsion { module: usize },
    HomNotTrivial { torsion: usize, free: usize },
    CompositeNotTrivial { module: usize },
    /// A map from `test` into `module` has trivial composite with the
    /// reflection but does not land in the trace.
    NotZKernel { module: usize, test: usize },
    /// A map from `module` to `test` kills the trace up to trivial maps but
    /// not the reject.
    NotZCokernel { module: usize, test: usize },
}

/// Dimension vectors of `T_X` and `F_X` in the sequence `T_X -> X -> F_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZSequence {
    pub module: usize,
    pub torsion_dims: Vec<usize>,
    pub free_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifiedTheory {
    pub torsion: Bits,
    pub free: Bits,
    pub trivial: Bits,
    pub route: Route,
    /// The definitional check was also run and agreed.
    pub audited: bool,
    pub sequences: Vec<ZSequence>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryVerdict {
    Verified(VerifiedTheory),
    Rejected(Rejection),
}

impl TheoryVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, TheoryVerdict::Verified(_))
    }
}

/// Span of the flattened composites `g ∘ h` over the given pairs of Hom
/// spaces `x -> z` and `z -> y`.
fn composite_span(field: Field, ambient: usize, pairs: &[(&HomSpace, &HomSpace)]) -> Subspace {
    let mut vectors = Vec::new();
    for (left, right) in pairs {
        for h in &left.basis {
            for g in &right.basis {
                vectors.push(g.after(h).flatten());
            }
        }
    }
    Subspace::from_vectors(field, ambient, &vectors)
}

/// Basis of `{c : Σ c_i v_i ∈ w}`.
fn coefficient_preimage(field: Field, vectors: &[Vec<Scalar>], w: &Subspace) -> Vec<Vec<Scalar>> {
    let d = vectors.len();
    let mut cols: Vec<Vec<Scalar>> = vectors.to_vec();
    cols.extend(w.basis().iter().cloned());
    let m = Matrix::from_column_vectors(field, w.ambient_dim(), &cols);
    let heads: Vec<Vec<Scalar>> = m.null_vectors().into_iter().map(|v| v[..d].to_vec()).collect();
    Subspace::from_vectors(field, d, &heads).basis().to_vec()
}

impl PretorsionContext {
    /// Morphisms `M_m -> M_n` factoring through `add` of the members of `z`,
    /// as a subspace of the coordinates of `Hom(M_m, M_n)`.
    pub fn z_trivial_subspace(&self, m: usize, n: usize, z: Bits) -> Subspace {
        let hom = self.hom(m, n);
        let mut fs = Vec::new();
        for i in indices_of(z) {
            for h in &self.hom(m, i).basis {
                for g in &self.hom(i, n).basis {
                    fs.push(g.after(h));
                }
            }
        }
        hom.span(&fs)
    }

    fn ext_closed_cached(&self, t: Bits, free: bool) -> Result<bool, PretorsionError> {
        let cache = if free { &self.ext_free_cache } else { &self.ext_cache };
        if let Some(&b) = cache.lock().expect("cache").get(&t) {
            return Ok(b);
        }
        let b = if free {
            self.is_extension_closed_free(t)?.holds
        } else {
            self.is_extension_closed(t)?.holds
        };
        cache.lock().expect("cache").insert(t, b);
        Ok(b)
    }

    /// Verdicts that need no universal-property check, or `None`.
    fn fast_verdict(&self, t: Bits, f: Bits) -> Result<Option<Result<Route, Rejection>>, PretorsionError> {
        let full = self.full();
        if t == full || f == full {
            return Ok(Some(Ok(Route::FullCategory)));
        }
        let rp = self.right_perp(t);
        if let Some(&m) = indices_of(rp & !f).first() {
            return Ok(Some(Err(Rejection::RightPerpNotInFree { module: m })));
        }
        let lp = self.left_perp(f);
        if let Some(&m) = indices_of(lp & !t).first() {
            return Ok(Some(Err(Rejection::LeftPerpNotInTorsion { module: m })));
        }
        if self.ext_closed_cached(t, false)? && self.ext_closed_cached(f, true)? {
            let route = if t & f == 0 { Route::Classic } else { Route::Condition1 };
            return Ok(Some(Ok(route)));
        }
        if t | f == full {
            return Ok(Some(Ok(Route::Condition3)));
        }
        Ok(None)
    }

    /// The definition checked directly: Hom from `T` to `F` is trivial, and
    /// for every indecomposable `X` the trace `T_X -> X` and the reflection
    /// `X -> F_X` form a short `Z`-exact sequence. Universal properties are
    /// tested against every indecomposable; both conditions are additive.
    pub fn full_check(&self, t: Bits, f: Bits) -> Result<Option<Rejection>, PretorsionError> {
        let z = t & f;
        let zs = indices_of(z);
        let field = self.catalog().field();
        for i in indices_of(t) {
            for j in indices_of(f) {
                let h = self.hom(i, j);
                if h.dim() > 0 && self.z_trivial_subspace(i, j, z).dim() != h.dim() {
                    return Ok(Some(Rejection::HomNotTrivial { torsion: i, free: j }));
                }
            }
        }
        for x in 0..self.len() {
            let m = self.module(x);
            let tr = self.trace_in(t, x);
            let (tx, incl) = tr.to_representation(m)?;
            let rej = self.reject_in(f, x);
            let (fx, proj) = quotient_by(m, &rej)?;
            let (_, rej_incl) = rej.to_representation(m)?;
            let (_, to_top) = quotient_by(m, &tr)?;
            let into_fx: Vec<HomSpace> = zs.iter().map(|&i| hom_space(self.module(i), &fx)).collect::<Result<_, _>>()?;
            let from_tx: Vec<HomSpace> = zs.iter().map(|&i| hom_space(&tx, self.module(i))).collect::<Result<_, _>>()?;

            let comp = proj.after(&incl).flatten();
            let pairs: Vec<(&HomSpace, &HomSpace)> = from_tx.iter().zip(&into_fx).collect();
            if !composite_span(field, comp.len(), &pairs).contains_vector(&comp) {
                return Ok(Some(Rejection::CompositeNotTrivial { module: x }));
            }

            for y in 0..self.len() {
                let hyx = self.hom(y, x);
                if hyx.dim() > 0 {
                    let vecs: Vec<Vec<Scalar>> = hyx.basis.iter().map(|l| proj.after(l).flatten()).collect();
                    let pairs: Vec<(&HomSpace, &HomSpace)> =
                        zs.iter().zip(&into_fx).map(|(&i, r)| (self.hom(y, i), r)).collect();
                    let w = composite_span(field, vecs[0].len(), &pairs);
                    for c in coefficient_preimage(field, &vecs, &w) {
                        if !to_top.after(&hyx.combination(&c)).is_zero() {
                            return Ok(Some(Rejection::NotZKernel { module: x, test: y }));
                        }
                    }
                }
                let hxy = self.hom(x, y);
                if hxy.dim() > 0 {
                    let vecs: Vec<Vec<Scalar>> = hxy.basis.iter().map(|mu| mu.after(&incl).flatten()).collect();
                    let pairs: Vec<(&HomSpace, &HomSpace)> =
                        zs.iter().zip(&from_tx).map(|(&i, l)| (l, self.hom(i, y))).collect();
                    let w = composite_span(field, vecs[0].len(), &pairs);
                    for c in coefficient_preimage(field, &vecs, &w) {
                        if !hxy.combination(&c).after(&rej_incl).is_zero() {
                            return Ok(Some(Rejection::NotZCokernel { module: x, test: y }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn sequences(&self, t: Bits, f: Bits) -> Vec<ZSequence> {
        (0..self.len())
            .map(|x| {
                let m = self.module(x);
                let rej = self.reject_in(f, x).dims();
                ZSequence {
                    module: x,
                    torsion_dims: self.trace_in(t, x).dims(),
                    free_dims: m.dims().iter().zip(&rej).map(|(a, b)| a - b).collect(),
                }
            })
            .collect()
    }

    /// Decides whether `(t, f)` is a pretorsion theory. Sufficient conditions
    /// are tried first; with `audit` the definitional check runs as well and
    /// any disagreement is an error.
    pub fn is_pretorsion_theory(&self, t: Bits, f: Bits, audit: bool) -> Result<TheoryVerdict, PretorsionError> {
        if self.gen_closure(t) != t {
            return Err(PretorsionError::NotGenClosed(self.add_label(t)));
        }
        if self.cogen_closure(f) != f {
            return Err(PretorsionError::NotCogenClosed(self.add_label(f)));
        }
        let fast = self.fast_verdict(t, f)?;
        let full = if audit || fast.is_none() {
            Some(self.full_check(t, f)?)
        } else {
            None
        };
        let outcome = match (fast, full) {
            (Some(fast), Some(full)) => {
                if fast.is_ok() != full.is_none() {
                    let route = match &fast {
                        Ok(r) => r.as_str().to_string(),
                        Err(_) => "screen".to_string(),
                    };
                    return Err(PretorsionError::AuditMismatch {
                        torsion: self.add_label(t),
                        free: self.add_label(f),
                        route,
                    });
                }
                fast
            }
            (Some(fast), None) => fast,
            (None, Some(None)) => Ok(Route::FullCheck),
            (None, Some(Some(r))) => Err(r),
            (None, None) => unreachable!("full check runs when no fast verdict exists"),
        };
        Ok(match outcome {
            Ok(route) => TheoryVerdict::Verified(VerifiedTheory {
                torsion: t,
                free: f,
                trivial: t & f,
                route,
                audited: audit,
                sequences: self.sequences(t, f),
            }),
            Err(r) => TheoryVerdict::Rejected(r),
        })
    }

    /// Every pretorsion theory, in the order of the pretorsion lattice and
    /// then of the pretorsion-free lattice.
    pub fn enumerate_pretorsion_theories(
        &self,
        lt: &FiniteLattice,
        ltf: &FiniteLattice,
        audit: bool,
    ) -> Result<Vec<VerifiedTheory>, PretorsionError> {
        let mut out = Vec::new();
        for &t in lt.elements() {
            for &f in ltf.elements() {
                if let TheoryVerdict::Verified(v) = self.is_pretorsion_theory(t, f, audit)? {
                    out.push(v);
                }
            }
        }
        Ok(out)
    }

    /// Whether `add(T1 ∪ T2)` is already closed under quotients for every
    /// pair of pretorsion classes.
    pub fn unions_are_pretorsion(&self, lt: &FiniteLattice) -> bool {
        lt.elements()
            .iter()
            .all(|&a| lt.elements().iter().all(|&b| is_subset(self.gen_closure(a | b), a | b)))
    }
}
