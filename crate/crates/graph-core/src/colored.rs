/// Canonical labeling of an undirected graph with colored vertices.
///
/// Returns, for each vertex, its position in the canonical order. Two
/// graphs get equal relabeled adjacency exactly when they are isomorphic by
/// a color-preserving map. Colors order the canonical positions, so equal
/// colors land in contiguous blocks in increasing color order.
pub fn canonical_labeling<C: Ord>(colors: &[C], adj: &[Vec<usize>]) -> Vec<usize> {
    let n = colors.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| colors[a].cmp(&colors[b]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(c) if colors[c[0]] == colors[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<(Vec<(usize, usize)>, Vec<usize>)> = None;
    search(cells, adj, &mut best);
    best.map(|b| b.1).unwrap_or_default()
}

fn refine(cells: &mut Vec<Vec<usize>>, adj: &[Vec<usize>]) {
    let n = adj.len();
    loop {
        let mut cell_of = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut split = false;
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut s: Vec<usize> = adj[v].iter().map(|&u| cell_of[u]).collect();
                    s.sort_unstable();
                    (s, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            for (k, (s, v)) in keyed.iter().enumerate() {
                if k > 0 && keyed[k - 1].0 == *s {
                    next.last_mut().expect("open cell").push(*v);
                } else {
                    next.push(vec![*v]);
                }
            }
            split |= next.len() - start > 1;
        }
        *cells = next;
        if !split {
            return;
        }
    }
}

fn search(mut cells: Vec<Vec<usize>>, adj: &[Vec<usize>], best: &mut Option<(Vec<(usize, usize)>, Vec<usize>)>) {
    refine(&mut cells, adj);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut lab = vec![0; adj.len()];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let mut cert: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(v, ns)| ns.iter().map(move |&u| (v, u)))
            .map(|(v, u)| (lab[v], lab[u]))
            .collect();
        cert.sort_unstable();
        if best.as_ref().is_none_or(|b| cert < b.0) {
            *best = Some((cert, lab));
        }
        return;
    };
    for &v in &cells[target] {
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
        let mut child = cells[..target].to_vec();
        child.push(vec![v]);
        child.push(rest);
        child.extend_from_slice(&cells[target + 1..]);
        search(child, adj, best);
    }
}
