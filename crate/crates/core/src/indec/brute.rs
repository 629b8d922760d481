use std::sync::Arc;

use super::{order_key, IndecError};
use crate::algebra::BoundQuiverAlgebra;
use crate::linalg::{Field, Matrix};
use crate::module::{analyse_end, is_isomorphic, ModuleError, Representation};

/// Largest number of matrix tuples visited for a single dimension vector.
pub const BRUTE_FORCE_LIMIT: u64 = 1 << 22;

/// Dimension vectors in `{0..=bound}^n` with connected nonempty support.
fn dimension_vectors(alg: &BoundQuiverAlgebra, bound: usize) -> Vec<Vec<usize>> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    let mut d = vec![0usize; n];
    loop {
        let mut i = 0;
        while i < n {
            d[i] += 1;
            if d[i] <= bound {
                break;
            }
            d[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        let support: Vec<usize> = (0..n).filter(|&v| d[v] > 0).collect();
        if connected(alg, &support, |_| true) {
            out.push(d.clone());
        }
    }
    out.sort_by_key(|d| (d.iter().sum::<usize>(), d.iter().map(|&x| std::cmp::Reverse(x)).collect::<Vec<_>>()));
    out
}

/// Connectivity of `support` through the arrows accepted by `keep`.
fn connected(alg: &BoundQuiverAlgebra, support: &[usize], keep: impl Fn(usize) -> bool) -> bool {
    let Some(&first) = support.first() else {
        return false;
    };
    let q = alg.quiver();
    let mut seen = vec![first];
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        for (i, a) in q.arrows().iter().enumerate() {
            if !keep(i) {
                continue;
            }
            let other = if a.source == v {
                a.target
            } else if a.target == v {
                a.source
            } else {
                continue;
            };
            if support.contains(&other) && !seen.contains(&other) {
                seen.push(other);
                stack.push(other);
            }
        }
    }
    seen.len() == support.len()
}

/// Enumerates all representations over `GF(p)` with dimensions bounded by
/// `bound` at every vertex, keeps the indecomposable ones (local endomorphism
/// ring) and one representative per isomorphism class.
///
/// Refuses with [`IndecError::DimBoundReached`] when a dimension vector that
/// touches the bound carries at least `p + 1` pairwise non-isomorphic
/// indecomposables, the signature of a family parametrised by the projective
/// line. Indecomposables whose endomorphism ring has a residue field larger
/// than `GF(p)` are refused with [`IndecError::EndResidueTooLarge`].
pub fn enumerate_brute_force(
    alg: &Arc<BoundQuiverAlgebra>,
    field: Field,
    bound: usize,
) -> Result<Vec<Representation>, IndecError> {
    let Some(p) = field.order() else {
        return Err(IndecError::NeedsPrimeField);
    };
    let q = alg.quiver();
    let vectors = dimension_vectors(alg, bound);
    let shapes_of = |dims: &[usize]| -> Vec<(usize, usize)> {
        q.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect()
    };
    // refuse up front rather than after hours of smaller cases
    for dims in &vectors {
        let entries: usize = shapes_of(dims).iter().map(|(r, c)| r * c).sum();
        if (p as f64).powi(entries as i32) > BRUTE_FORCE_LIMIT as f64 {
            return Err(IndecError::SearchSpaceTooLarge {
                dims: dims.clone(),
                entries,
                prime: p,
            });
        }
    }
    let mut found: Vec<Representation> = Vec::new();
    for dims in vectors {
        let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
        let shapes = shapes_of(&dims);
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let mut here: Vec<Representation> = Vec::new();
        let mut residue_problem = None;
        let mut digits = vec![0u64; entries];
        loop {
            let mut offset = 0;
            let maps: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    let vals: Vec<i64> = digits[offset..offset + r * c].iter().map(|&x| x as i64).collect();
                    offset += r * c;
                    Matrix::from_i64(field, r, c, &vals).expect("shape")
                })
                .collect();
            // nonzero arrows must connect the support, otherwise the module splits
            if connected(alg, &support, |i| !maps[i].is_zero()) {
                match Representation::new(alg.clone(), field, dims.clone(), maps) {
                    Ok(m) => {
                        let mut known = false;
                        for h in &here {
                            if is_isomorphic(h, &m)? {
                                known = true;
                                break;
                            }
                        }
                        if !known {
                            let a = analyse_end(&m)?;
                            if a.splitting.is_none() {
                                match a.residue_dim {
                                    Some(r) if r > 1 => {
                                        residue_problem.get_or_insert(IndecError::EndResidueTooLarge {
                                            dims: dims.clone(),
                                            residue_dim: r,
                                        });
                                    }
                                    _ => here.push(m),
                                }
                            }
                        }
                    }
                    Err(ModuleError::RelationViolated(_)) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            if !advance(&mut digits, p as u64) {
                break;
            }
        }
        if dims.contains(&bound) && here.len() > p as usize {
            return Err(IndecError::DimBoundReached {
                bound,
                dims,
                count: here.len(),
                prime: p,
            });
        }
        if let Some(e) = residue_problem {
            return Err(e);
        }
        found.extend(here);
    }
    found.sort_by_key(order_key);
    Ok(found)
}

fn advance(digits: &mut [u64], base: u64) -> bool {
    for x in digits.iter_mut() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}
