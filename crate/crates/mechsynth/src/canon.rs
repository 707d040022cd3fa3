//! Brute-force canonical labeling of small typed multigraphs.
//!
//! The canonical key of a graph whose edges are partitioned into typed
//! classes (ports, springs, ...) is the lexicographically smallest tuple of
//! sorted per-type edge lists over all vertex relabelings. Permutations are
//! restricted to vertex classes with equal per-type degree vectors, which
//! keeps the search tiny at the sizes handled here (at most seven vertices).

pub type Pair = (u32, u32);

fn relabel(edges: &[Pair], perm: &[u32]) -> Vec<Pair> {
    let mut out: Vec<Pair> = edges
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (perm[a as usize], perm[b as usize]);
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Canonical labeling of `n` vertices under typed edge lists.
/// Returns the canonical per-type edge lists and one permutation realizing
/// them (`perm[v]` = new label of `v`).
pub fn canonical_typed(n: u32, typed_edges: &[&[Pair]]) -> (Vec<Vec<Pair>>, Vec<u32>) {
    let mut degrees: Vec<Vec<u32>> = vec![vec![0; typed_edges.len()]; n as usize];
    for (t, edges) in typed_edges.iter().enumerate() {
        for &(a, b) in *edges {
            degrees[a as usize][t] += 1;
            degrees[b as usize][t] += 1;
        }
    }
    let mut keyed: Vec<(Vec<u32>, u32)> = (0..n).map(|v| (degrees[v as usize].clone(), v)).collect();
    keyed.sort();
    let mut classes: Vec<Vec<u32>> = Vec::new();
    let mut prev: Option<&Vec<u32>> = None;
    for (key, v) in &keyed {
        if prev != Some(key) {
            classes.push(Vec::new());
        }
        classes.last_mut().unwrap().push(*v);
        prev = Some(key);
    }

    let mut best: Option<(Vec<Vec<Pair>>, Vec<u32>)> = None;
    let mut perm = vec![0u32; n as usize];
    assign_classes(&classes, 0, 0, &mut perm, &mut |perm: &[u32]| {
        let cand: Vec<Vec<Pair>> = typed_edges.iter().map(|e| relabel(e, perm)).collect();
        let better = match &best {
            None => true,
            Some((b, _)) => &cand < b,
        };
        if better {
            best = Some((cand, perm.to_vec()));
        }
    });
    best.expect("at least one labeling")
}

fn assign_classes(
    classes: &[Vec<u32>],
    idx: usize,
    next_label: u32,
    perm: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if idx == classes.len() {
        visit(perm);
        return;
    }
    let members = &classes[idx];
    let k = members.len();
    let mut order: Vec<usize> = (0..k).collect();
    heap_permutations(&mut order, k, &mut |order: &Vec<usize>| {
        for (offset, &pos) in order.iter().enumerate() {
            perm[members[pos] as usize] = next_label + offset as u32;
        }
        assign_classes(classes, idx + 1, next_label + k as u32, perm, visit);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&Vec<usize>)) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
