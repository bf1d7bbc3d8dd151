//! Backtracking isomorphism test for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub(crate) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    let n = g.n();
    let mut ag = vec![vec![false; n]; n];
    let mut ah = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        ag[a][b] = true;
        ag[b][a] = true;
    }
    for &(a, b) in h.edges() {
        ah[a][b] = true;
        ah[b][a] = true;
    }
    // Visit high-degree vertices first so conflicts surface early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(dg[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(0, &order, &dg, &dh, &ag, &ah, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    dg: &[usize],
    dh: &[usize],
    ag: &[Vec<bool>],
    ah: &[Vec<bool>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..map.len() {
        if used[w] || dg[v] != dh[w] {
            continue;
        }
        let fits = order[..depth].iter().all(|&u| ag[v][u] == ah[w][map[u]]);
        if !fits {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(depth + 1, order, dg, dh, ag, ah, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_match() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let h = g.relabel(&[3, 0, 4, 1, 2]);
        assert!(isomorphic(&g, &h));
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C6 versus two triangles.
        let two = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&Graph::cycle(6), &two));
    }
}
