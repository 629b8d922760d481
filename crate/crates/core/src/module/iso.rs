use super::{hom_space, HomSpace, ModuleError, Morphism, Representation, Submodule};
use crate::linalg::{Field, Scalar};

/// Largest number of coefficient vectors an exhaustive combination search may visit.
pub const SEARCH_LIMIT: u64 = 1 << 21;

/// Largest endomorphism-algebra dimension accepted by [`decompose`].
pub const END_LIMIT: usize = 12;

/// Looks for a morphism in `hom` satisfying `pred`, where `pred` holds on a
/// Zariski-open set cut out by a polynomial of degree at most `degree`.
///
/// Basis elements and a few fixed combinations are tried first. Over `GF(p)` the
/// fallback visits every coefficient vector. Over `Q` it visits the grid
/// `{0, ..., degree}^d`: a nonzero polynomial of total degree at most `degree`
/// cannot vanish on all of it, so the search is exact.
pub fn search_hom<F>(hom: &HomSpace, degree: usize, pred: F) -> Result<Option<Morphism>, ModuleError>
where
    F: Fn(&Morphism) -> bool,
{
    let d = hom.dim();
    let field = hom.field();
    if d == 0 {
        return Ok(None);
    }
    for f in &hom.basis {
        if pred(f) {
            return Ok(Some(f.clone()));
        }
    }
    let mut probes: Vec<Vec<i64>> = vec![vec![1; d], (1..=d as i64).collect()];
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..8 {
        probes.push(
            (0..d)
                .map(|_| {
                    seed ^= seed << 13;
                    seed ^= seed >> 7;
                    seed ^= seed << 17;
                    (seed % 1009) as i64
                })
                .collect(),
        );
    }
    for c in &probes {
        let f = hom.combination(&scalars(field, c));
        if pred(&f) {
            return Ok(Some(f));
        }
    }
    let base = match field {
        Field::Prime(p) => p as u64,
        Field::Rational => degree as u64 + 1,
    };
    let total = (base as f64).powi(d as i32);
    if total > SEARCH_LIMIT as f64 {
        return Err(ModuleError::SearchTooLarge {
            hom_dim: d,
            points: total as u64,
        });
    }
    let mut digits = vec![0u64; d];
    loop {
        let c: Vec<i64> = digits.iter().map(|&x| x as i64).collect();
        let f = hom.combination(&scalars(field, &c));
        if pred(&f) {
            return Ok(Some(f));
        }
        if !advance(&mut digits, base) {
            return Ok(None);
        }
    }
}

fn scalars(field: Field, c: &[i64]) -> Vec<Scalar> {
    c.iter().map(|&x| field.from_i64(x)).collect()
}

/// Mixed-radix increment; `false` once every digit has wrapped.
pub(crate) fn advance(digits: &mut [u64], base: u64) -> bool {
    for x in digits.iter_mut() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

/// Whether some morphism `m -> n` is bijective at every vertex.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool, ModuleError> {
    if !m.same_algebra(n) {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let h = hom_space(m, n)?;
    Ok(search_hom(&h, m.total_dim(), Morphism::is_isomorphism)?.is_some())
}

/// An epimorphism `x -> n` from a single copy of `x`, if one exists.
pub fn find_epimorphism(x: &Representation, n: &Representation) -> Result<Option<Morphism>, ModuleError> {
    if n.dims().iter().zip(x.dims()).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let h = hom_space(x, n)?;
    let images = h.basis.iter().fold(Submodule::zero(n), |acc, f| acc.sum(&f.image()));
    if !images.is_whole() {
        return Ok(None);
    }
    search_hom(&h, n.total_dim(), Morphism::is_surjective)
}

/// A monomorphism `n -> y` into a single copy of `y`, if one exists.
pub fn find_monomorphism(n: &Representation, y: &Representation) -> Result<Option<Morphism>, ModuleError> {
    if n.dims().iter().zip(y.dims()).any(|(a, b)| a > b) {
        return Ok(None);
    }
    let h = hom_space(n, y)?;
    search_hom(&h, n.total_dim(), Morphism::is_injective)
}

pub fn is_brick(m: &Representation) -> Result<bool, ModuleError> {
    Ok(hom_space(m, m)?.dim() == 1)
}

/// Structure of `End(m)` over a prime field.
#[derive(Clone, Debug)]
pub struct EndAnalysis {
    pub end_dim: usize,
    /// A non-nilpotent non-invertible endomorphism raised to a power that
    /// splits `m` as image ⊕ kernel, when `m` is decomposable.
    pub splitting: Option<Morphism>,
    /// For local `End(m)`: dimension of `End(m)` modulo its radical.
    pub residue_dim: Option<usize>,
}

/// Classifies every endomorphism as nilpotent, invertible, or splitting
/// (Fitting's lemma: for `φ` with `N = dim m`, `m = im φ^N ⊕ ker φ^N`).
pub fn analyse_end(m: &Representation) -> Result<EndAnalysis, ModuleError> {
    let Field::Prime(p) = m.field() else {
        return Err(ModuleError::NeedsPrimeField);
    };
    let end = hom_space(m, m)?;
    let d = end.dim();
    let n = m.total_dim();
    let classify = |f: &Morphism| -> u8 {
        let g = f.power(n);
        if g.is_zero() {
            0
        } else if g.is_isomorphism() {
            1
        } else {
            2
        }
    };
    for f in &end.basis {
        if classify(f) == 2 {
            return Ok(EndAnalysis {
                end_dim: d,
                splitting: Some(f.power(n)),
                residue_dim: None,
            });
        }
    }
    if d > END_LIMIT {
        return Err(ModuleError::EndTooLarge { dim: d, limit: END_LIMIT });
    }
    let mut digits = vec![0u64; d];
    let mut nilpotent: u64 = 0;
    let field = m.field();
    loop {
        let c: Vec<i64> = digits.iter().map(|&x| x as i64).collect();
        let f = end.combination(&scalars(field, &c));
        match classify(&f) {
            0 => nilpotent += 1,
            1 => {}
            _ => {
                return Ok(EndAnalysis {
                    end_dim: d,
                    splitting: Some(f.power(n)),
                    residue_dim: None,
                })
            }
        }
        if !advance(&mut digits, p as u64) {
            break;
        }
    }
    let mut rad_dim = 0;
    let mut k = nilpotent;
    while k > 1 {
        k /= p as u64;
        rad_dim += 1;
    }
    Ok(EndAnalysis {
        end_dim: d,
        splitting: None,
        residue_dim: Some(d - rad_dim),
    })
}

/// Indecomposable summands over `GF(p)`, found by repeated Fitting splits.
pub fn decompose(m: &Representation) -> Result<Vec<Representation>, ModuleError> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let a = analyse_end(m)?;
    let Some(g) = a.splitting else {
        return Ok(vec![m.clone()]);
    };
    let (img, _) = g.image().to_representation(m)?;
    let (ker, _) = g.kernel().to_representation(m)?;
    let mut out = decompose(&img)?;
    out.extend(decompose(&ker)?);
    Ok(out)
}

/// Indecomposability over `GF(p)` (local endomorphism ring).
pub fn is_indecomposable(m: &Representation) -> Result<bool, ModuleError> {
    Ok(!m.is_zero() && analyse_end(m)?.splitting.is_none())
}
