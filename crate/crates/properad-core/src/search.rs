use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Breadth-first search from both ends under a symmetric move relation.
///
/// `Yes` when the two reachable sets meet. `No` when one side's reachable
/// set is exhausted without meeting the other: since moves are symmetric,
/// that set is a whole equivalence class. `Unknown` when more than `budget`
/// terms would have to be expanded.
pub fn bidirectional_search<T, F>(a: T, b: T, budget: usize, mut moves: F) -> Verdict
where
    T: Ord + Clone,
    F: FnMut(&T) -> Vec<T>,
{
    if a == b {
        return Verdict::Yes;
    }
    let mut seen = [BTreeSet::from([a.clone()]), BTreeSet::from([b.clone()])];
    let mut frontier = [vec![a], vec![b]];
    let mut expanded = 0;
    loop {
        if frontier[0].is_empty() || frontier[1].is_empty() {
            return Verdict::No;
        }
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        let mut next = Vec::new();
        for t in std::mem::take(&mut frontier[side]) {
            if expanded >= budget {
                return Verdict::Unknown;
            }
            expanded += 1;
            for u in moves(&t) {
                if seen[1 - side].contains(&u) {
                    return Verdict::Yes;
                }
                if seen[side].insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        frontier[side] = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues() {
        // moves n -> n ± 3 within 0..12: classes are residues mod 3
        let moves = |&n: &i32| [n - 3, n + 3].into_iter().filter(|m| (0..12).contains(m)).collect();
        assert_eq!(bidirectional_search(1, 10, 100, moves), Verdict::Yes);
        assert_eq!(bidirectional_search(1, 11, 100, moves), Verdict::No);
        assert_eq!(bidirectional_search(1, 10, 0, moves), Verdict::Unknown);
        assert_eq!(bidirectional_search(4, 4, 0, moves), Verdict::Yes);
    }
}
