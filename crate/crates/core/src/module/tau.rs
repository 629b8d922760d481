use super::{hom_space, radical_top, ModuleError, Morphism, Representation};
use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::linalg::{Matrix, Scalar};

/// Paths `u -> x`: the basis of `P_u` at `x`.
fn proj_basis(alg: &BoundQuiverAlgebra, u: usize, x: usize) -> Vec<&Path> {
    alg.paths_from(u).into_iter().filter(|p| p.end == x).collect()
}

/// Paths `x -> u`: the dual basis of `I_u` at `x`.
fn inj_basis(alg: &BoundQuiverAlgebra, u: usize, x: usize) -> Vec<&Path> {
    alg.paths_to(u).into_iter().filter(|p| p.start == x).collect()
}

/// A projective cover `P -> m` built from a basis of the top.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of each indecomposable summand `P_v`, in summand order.
    pub summands: Vec<usize>,
    pub projective: Representation,
    pub map: Morphism,
}

pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover, ModuleError> {
    let alg = m.algebra().clone();
    let field = m.field();
    let n = alg.vertex_count();
    let rad = radical_top(m).radical;
    // lift the top: standard vectors at the non-pivot columns of the radical
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for c in rad.spaces[v].free_columns() {
            gens.push((v, c));
        }
    }
    let summands: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let parts: Vec<Representation> = summands
        .iter()
        .map(|&v| Representation::projective(alg.clone(), field, v))
        .collect();
    let projective = Representation::direct_sum_all(alg.clone(), field, &parts)?;
    let components = (0..n)
        .map(|x| {
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for &(v, c) in &gens {
                let mut e = vec![field.zero(); m.dim(v)];
                e[c] = field.one();
                for p in proj_basis(&alg, v, x) {
                    cols.push(m.path_matrix(p).apply(&e));
                }
            }
            Matrix::from_column_vectors(field, m.dim(x), &cols)
        })
        .collect();
    Ok(ProjectiveCover {
        summands,
        projective,
        map: Morphism { components },
    })
}

/// Auslander-Reiten translate via a minimal projective presentation
/// `P1 -f-> P0 -> m -> 0`: `τm` is the kernel of `ν(f): ν(P1) -> ν(P0)`, where
/// the Nakayama functor sends `P_v` to `I_v`.
pub fn ar_translate(m: &Representation) -> Result<Representation, ModuleError> {
    let alg = m.algebra().clone();
    let field = m.field();
    let zero = Representation::zero(alg.clone(), field);
    if m.is_zero() {
        return Ok(zero);
    }
    let cover0 = projective_cover(m)?;
    let (omega, incl) = cover0.map.kernel().to_representation(&cover0.projective)?;
    if omega.is_zero() {
        return Ok(zero);
    }
    let cover1 = projective_cover(&omega)?;
    let f = incl.after(&cover1.map);
    let n = alg.vertex_count();

    // offset of each summand of a sum of projectives at vertex x
    let offsets = |summands: &[usize], x: usize| -> Vec<usize> {
        let mut acc = 0;
        summands
            .iter()
            .map(|&u| {
                let o = acc;
                acc += proj_basis(&alg, u, x).len();
                o
            })
            .collect()
    };

    // coeff[i][j]: the paths p: u_j -> v_i with their coefficients in f(e_{v_i})
    let coeff: Vec<Vec<Vec<(Path, Scalar)>>> = cover1
        .summands
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let trivial = proj_basis(&alg, v, v)
                .iter()
                .position(|p| p.is_trivial())
                .expect("trivial path");
            let col = f.components[v].column(offsets(&cover1.summands, v)[i] + trivial);
            let offs = offsets(&cover0.summands, v);
            cover0
                .summands
                .iter()
                .enumerate()
                .map(|(j, &u)| {
                    proj_basis(&alg, u, v)
                        .into_iter()
                        .enumerate()
                        .filter(|(k, _)| !col[offs[j] + k].is_zero())
                        .map(|(k, p)| (p.clone(), col[offs[j] + k].clone()))
                        .collect()
                })
                .collect()
        })
        .collect();

    let inj1: Vec<Representation> = cover1
        .summands
        .iter()
        .map(|&v| Representation::injective(alg.clone(), field, v))
        .collect();
    let nu_p1 = Representation::direct_sum_all(alg.clone(), field, &inj1)?;
    let inj0_dims: Vec<usize> = (0..n)
        .map(|x| cover0.summands.iter().map(|&u| inj_basis(&alg, u, x).len()).sum())
        .collect();

    // block (j, i) at x: row r (path x -> u_j), column q (path x -> v_i),
    // entry the sum of c_p over the paths p with r·p = q
    let components = (0..n)
        .map(|x| {
            let mut mat = Matrix::zeros(field, inj0_dims[x], nu_p1.dim(x));
            let mut row0 = 0;
            for (j, &u) in cover0.summands.iter().enumerate() {
                let rows = inj_basis(&alg, u, x);
                let mut col0 = 0;
                for (i, &v) in cover1.summands.iter().enumerate() {
                    let cols = inj_basis(&alg, v, x);
                    for (r, rp) in rows.iter().enumerate() {
                        for (p, s) in &coeff[i][j] {
                            let Some(comp) = rp.then(p) else { continue };
                            if let Some(c) = cols.iter().position(|q| q.arrows == comp.arrows) {
                                let e = mat.get(row0 + r, col0 + c) + s;
                                mat.set(row0 + r, col0 + c, e);
                            }
                        }
                    }
                    col0 += cols.len();
                }
                row0 += rows.len();
            }
            mat
        })
        .collect();
    let nu_f = Morphism { components };
    let (tau, _) = nu_f.kernel().to_representation(&nu_p1)?;
    Ok(tau)
}

/// `Hom(m, τm) = 0`.
pub fn is_tau_rigid(m: &Representation) -> Result<bool, ModuleError> {
    Ok(hom_space(m, &ar_translate(m)?)?.dim() == 0)
}
