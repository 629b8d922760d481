use super::{ModuleError, Representation, Submodule};
use crate::linalg::{Field, Subspace};

/// Largest number of candidate subspace tuples [`enumerate_submodules`] will visit.
pub const SUBMODULE_LIMIT: u64 = 1 << 20;

/// Every subspace of `GF(p)^n`, by enumerating reduced echelon forms.
pub fn all_subspaces(field: Field, n: usize) -> Vec<Subspace> {
    let p = field.order().expect("finite field") as u64;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask & (1 << c) != 0).collect();
        // free slots: row i may be nonzero at non-pivot columns right of its pivot
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &pc)| {
                let pivots = &pivots;
                ((pc + 1)..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u64; slots.len()];
        loop {
            let mut rows: Vec<Vec<_>> = pivots
                .iter()
                .map(|&pc| {
                    let mut r = vec![field.zero(); n];
                    r[pc] = field.one();
                    r
                })
                .collect();
            for (&(i, c), &d) in slots.iter().zip(&digits) {
                rows[i][c] = field.from_i64(d as i64);
            }
            out.push(Subspace::from_vectors(field, n, &rows));
            if !super::iso::advance(&mut digits, p) {
                break;
            }
        }
    }
    out
}

/// Every submodule of a representation over `GF(p)`.
pub fn enumerate_submodules(m: &Representation) -> Result<Vec<Submodule>, ModuleError> {
    let field = m.field();
    if field.order().is_none() {
        return Err(ModuleError::NeedsPrimeField);
    }
    let per_vertex: Vec<Vec<Subspace>> = m.dims().iter().map(|&d| all_subspaces(field, d)).collect();
    let product = per_vertex
        .iter()
        .fold(1f64, |acc, s| acc * s.len() as f64);
    if product > SUBMODULE_LIMIT as f64 {
        return Err(ModuleError::SubmoduleEnumerationTooLarge {
            candidates: product as u64,
            limit: SUBMODULE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut choice: Vec<Subspace> = Vec::with_capacity(per_vertex.len());
    fn rec(
        m: &Representation,
        per_vertex: &[Vec<Subspace>],
        choice: &mut Vec<Subspace>,
        out: &mut Vec<Submodule>,
    ) {
        let v = choice.len();
        if v == per_vertex.len() {
            out.push(Submodule::new(choice.clone()));
            return;
        }
        let q = m.algebra().quiver();
        for cand in &per_vertex[v] {
            choice.push(cand.clone());
            // check arrows whose endpoints are both chosen and one of them is v
            let ok = q.arrows().iter().enumerate().all(|(i, a)| {
                if a.source > v || a.target > v || (a.source != v && a.target != v) {
                    return true;
                }
                let img = choice[a.source].map(m.map(i)).expect("shape");
                choice[a.target].contains(&img).expect("shape")
            });
            if ok {
                rec(m, per_vertex, choice, out);
            }
            choice.pop();
        }
    }
    rec(m, &per_vertex, &mut choice, &mut out);
    Ok(out)
}
