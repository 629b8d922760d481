use super::FiniteLattice;

/// Per-element invariants preserved by any order isomorphism.
fn signature(l: &FiniteLattice, i: usize) -> (usize, usize, usize, usize) {
    let n = l.len();
    let below = (0..n).filter(|&j| l.leq(j, i)).count();
    let above = (0..n).filter(|&j| l.leq(i, j)).count();
    (below, above, l.lower_covers(i).len(), l.upper_covers(i).len())
}

/// An order isomorphism `a -> b` as a vector of indices into `b`, found by
/// backtracking over elements with matching invariants.
pub fn lattice_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut ms = sa.clone();
    let mut ns = sb.clone();
    ms.sort_unstable();
    ns.sort_unstable();
    if ms != ns {
        return None;
    }
    // bottom-up along a linear extension, so comparable elements are placed early
    let order: Vec<usize> = (0..n).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &sa, &sb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &FiniteLattice,
    b: &FiniteLattice,
    sa: &[(usize, usize, usize, usize)],
    sb: &[(usize, usize, usize, usize)],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(k) else {
        return true;
    };
    for y in 0..b.len() {
        if used[y] || sb[y] != sa[x] {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| a.leq(x, u) == b.leq(y, map[u]) && a.leq(u, x) == b.leq(map[u], y));
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if assign(a, b, sa, sb, order, k + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}
