//! Order-isomorphism testing by backtracking.

use crate::poset::Poset;

/// Per-vertex data preserved by every order isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Invariant {
    below: usize,
    above: usize,
    height: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn invariants(p: &Poset) -> Vec<Invariant> {
    let heights = p.heights();
    let mut lower_covers = vec![0; p.len()];
    let mut upper_covers = vec![0; p.len()];
    for (a, b) in p.cover_indices() {
        upper_covers[a] += 1;
        lower_covers[b] += 1;
    }
    (0..p.len())
        .map(|i| Invariant {
            below: p.down_set(i).count_ones(..),
            above: p.up_set(i).count_ones(..),
            height: heights[i],
            lower_covers: lower_covers[i],
            upper_covers: upper_covers[i],
        })
        .collect()
}

/// Returns an order isomorphism `p -> q` as a vertex assignment, if one exists.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.relation_len() != q.relation_len() {
        return None;
    }
    let inv_p = invariants(p);
    let inv_q = invariants(q);
    let mut sorted_p = inv_p.clone();
    let mut sorted_q = inv_q.clone();
    sorted_p.sort_unstable();
    sorted_q.sort_unstable();
    if sorted_p != sorted_q {
        return None;
    }

    // Map vertices of p in an order where each vertex has as many already
    // mapped neighbours as possible: bottom-up, rarest invariant class first.
    let mut order: Vec<usize> = p.linear_order();
    let class_size = |i: usize| sorted_p.iter().filter(|&&x| x == inv_p[i]).count();
    order.sort_by_key(|&i| (inv_p[i].height, class_size(i)));

    let mut state = Search {
        p,
        q,
        inv_p: &inv_p,
        inv_q: &inv_q,
        order: &order,
        assignment: vec![usize::MAX; p.len()],
        used: vec![false; q.len()],
    };
    if state.extend(0) {
        Some(state.assignment)
    } else {
        None
    }
}

/// True iff an order isomorphism between `p` and `q` exists.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}

struct Search<'a> {
    p: &'a Poset,
    q: &'a Poset,
    inv_p: &'a [Invariant],
    inv_q: &'a [Invariant],
    order: &'a [usize],
    assignment: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.q.len() {
            if self.used[w] || self.inv_q[w] != self.inv_p[v] || !self.consistent(v, w, depth) {
                continue;
            }
            self.assignment[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.assignment[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, v: usize, w: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let fu = self.assignment[u];
            self.p.leq(u, v) == self.q.leq(fu, w) && self.p.leq(v, u) == self.q.leq(w, fu)
        })
    }
}
