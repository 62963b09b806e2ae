//! Brute-force oracles and poset corpora shared by the integration tests.
//!
//! Relations here are plain `u32` rows (`rows[i] >> j & 1` means `i <= j`),
//! kept apart from the library's own representation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use posetkit::{Label, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rows = Vec<u32>;

pub fn labels(n: usize) -> Vec<Label> {
    (0..n)
        .map(|i| Label::new(((b'a' + i as u8) as char).to_string()).unwrap())
        .collect()
}

pub fn rows_of(p: &Poset) -> Rows {
    (0..p.len())
        .map(|i| {
            (0..p.len())
                .filter(|&j| p.leq(i, j))
                .map(|j| 1u32 << j)
                .sum()
        })
        .collect()
}

pub fn poset_of(rows: &Rows) -> Poset {
    Poset::from_order_fn(labels(rows.len()), |i, j| rows[i] >> j & 1 == 1).unwrap()
}

pub fn is_transitive(rows: &Rows) -> bool {
    (0..rows.len()).all(|i| {
        (0..rows.len())
            .filter(|&j| rows[i] >> j & 1 == 1)
            .all(|j| rows[j] & !rows[i] == 0)
    })
}

pub fn is_antisymmetric(rows: &Rows) -> bool {
    (0..rows.len())
        .all(|i| (0..rows.len()).all(|j| i == j || rows[i] >> j & 1 == 0 || rows[j] >> i & 1 == 0))
}

pub fn closure(rows: &Rows) -> Rows {
    let mut r = rows.clone();
    loop {
        let next: Rows = (0..r.len())
            .map(|i| {
                (0..r.len())
                    .filter(|&j| r[i] >> j & 1 == 1)
                    .fold(r[i], |acc, j| acc | r[j])
            })
            .collect();
        if next == r {
            return r;
        }
        r = next;
    }
}

/// Smallest relabeled encoding over all vertex permutations.
pub fn canonical_form(rows: &Rows) -> Vec<u32> {
    let n = rows.len();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut enc = vec![0u32; n];
            for i in 0..n {
                for j in 0..n {
                    if rows[i] >> j & 1 == 1 {
                        enc[perm[i]] |= 1 << perm[j];
                    }
                }
            }
            enc
        })
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of posets on `n` vertices.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rows: Rows = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        if is_transitive(&rows) && is_antisymmetric(&rows) && seen.insert(canonical_form(&rows)) {
            out.push(poset_of(&rows));
        }
    }
    out
}

pub fn all_posets_up_to(n: usize) -> Vec<Poset> {
    (0..=n).flat_map(all_posets).collect()
}

pub fn is_forest(rows: &Rows) -> bool {
    (0..rows.len()).all(|x| {
        let below: Vec<usize> = (0..rows.len()).filter(|&y| rows[y] >> x & 1 == 1).collect();
        below.iter().all(|&a| {
            below
                .iter()
                .all(|&b| rows[a] >> b & 1 == 1 || rows[b] >> a & 1 == 1)
        })
    })
}

pub fn all_forests_up_to(n: usize) -> Vec<Poset> {
    all_posets_up_to(n)
        .into_iter()
        .filter(|p| is_forest(&rows_of(p)))
        .collect()
}

/// Random order on `n` vertices: each pair `i < j` is related with
/// probability `density`, then closed.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Poset {
    let mut rows: Rows = (0..n).map(|i| 1 << i).collect();
    for (i, row) in rows.iter_mut().enumerate() {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                *row |= 1 << j;
            }
        }
    }
    let perm: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            v.swap(k, rng.gen_range(0..=k));
        }
        v
    };
    let mut shuffled = vec![0u32; n];
    for (i, row) in closure(&rows).into_iter().enumerate() {
        for j in (0..n).filter(|&j| row >> j & 1 == 1) {
            shuffled[perm[i]] |= 1 << perm[j];
        }
    }
    poset_of(&shuffled)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn b2() -> Poset {
    Poset::from_pairs([("x", "y"), ("x", "z")]).unwrap()
}

pub fn diamond() -> Poset {
    Poset::from_pairs([("r", "a"), ("r", "b"), ("a", "t"), ("b", "t")]).unwrap()
}

/// Chains, antichains, B2, the diamond and seeded random posets on 4 and 5
/// vertices.
pub fn sample_posets() -> Vec<Poset> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(Poset::chain(n));
        out.push(Poset::antichain(n));
    }
    out.push(b2());
    out.push(diamond());
    let mut r = rng(7);
    for k in 0..16 {
        let n = 4 + k % 2;
        let density = [0.2, 0.35, 0.5, 0.7][k % 4];
        out.push(random_poset(&mut r, n, density));
    }
    out
}

/// All `2^|C|` supersets of the order, filtered for transitivity, as sorted
/// lists of added pairs in (size, lexicographic) order.
pub fn monotone_oracle(p: &Poset) -> (u64, Vec<Vec<(usize, usize)>>) {
    let base = rows_of(p);
    let n = base.len();
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| base[i] >> j & 1 == 0)
        .collect();
    let mut found = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut rows = base.clone();
        for (k, &(i, j)) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        if is_transitive(&rows) {
            found.push(
                free.iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &pair)| pair)
                    .collect::<Vec<_>>(),
            );
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    (1u64 << free.len(), found)
}

/// Every labeling `n^n`, reduced to restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for code in 0..n.pow(n as u32).max(1) {
        let mut c = code;
        let raw: Vec<usize> = (0..n)
            .map(|_| {
                let d = c % n.max(1);
                c /= n.max(1);
                d
            })
            .collect();
        let mut rename = vec![usize::MAX; n];
        let mut next = 0;
        let rgs = raw
            .iter()
            .map(|&d| {
                if rename[d] == usize::MAX {
                    rename[d] = next;
                    next += 1;
                }
                rename[d]
            })
            .collect::<Vec<_>>();
        out.insert(rgs);
    }
    out.into_iter().collect()
}

/// Block digraph of `rgs` (edge `B -> B'` when some `a` in `B` is below some
/// `b` in `B'`), as rows over block indices.
pub fn block_digraph(rows: &Rows, rgs: &[usize]) -> Rows {
    let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut g = vec![0u32; k];
    for a in 0..rgs.len() {
        for b in 0..rgs.len() {
            if rows[a] >> b & 1 == 1 && rgs[a] != rgs[b] {
                g[rgs[a]] |= 1 << rgs[b];
            }
        }
    }
    g
}

pub fn has_cycle(g: &Rows) -> bool {
    fn visit(g: &Rows, v: usize, state: &mut [u8]) -> bool {
        state[v] = 1;
        for w in 0..g.len() {
            if g[v] >> w & 1 == 1 && (state[w] == 1 || (state[w] == 0 && visit(g, w, state))) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; g.len()];
    (0..g.len()).any(|v| state[v] == 0 && visit(g, v, &mut state))
}

/// Regular partitions as RGS, most blocks first, ties in RGS order.
pub fn regular_oracle(p: &Poset) -> (u64, Vec<Vec<usize>>) {
    let rows = rows_of(p);
    let all = set_partitions(p.len());
    let analyzed = all.len() as u64;
    let mut found: Vec<Vec<usize>> = all
        .into_iter()
        .filter(|rgs| !has_cycle(&block_digraph(&rows, rgs)))
        .collect();
    let blocks = |r: &Vec<usize>| r.iter().copied().max().map_or(0, |m| m + 1);
    found.sort_by(|a, b| blocks(b).cmp(&blocks(a)).then_with(|| a.cmp(b)));
    (analyzed, found)
}

/// Block order of a regular partition: reflexive closure of its block digraph.
pub fn quotient_rows(p: &Poset, rgs: &[usize]) -> Rows {
    let g = block_digraph(&rows_of(p), rgs);
    let with_loops: Rows = g.iter().enumerate().map(|(i, r)| r | 1 << i).collect();
    closure(&with_loops)
}

pub fn linear_extension_oracle(p: &Poset) -> usize {
    let n = p.len();
    (0..n)
        .permutations(n)
        .filter(|seq| {
            let mut pos = vec![0; n];
            for (k, &v) in seq.iter().enumerate() {
                pos[v] = k;
            }
            (0..n).all(|i| (0..n).all(|j| !p.leq(i, j) || pos[i] <= pos[j]))
        })
        .count()
}

/// Lattice paths from `(0, 0)` to `(m, n)` with east, north and northeast steps.
pub fn delannoy(m: usize, n: usize) -> u64 {
    let mut paths = vec![vec![0u64; n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            paths[i][j] = if i == 0 || j == 0 {
                1
            } else {
                paths[i - 1][j] + paths[i][j - 1] + paths[i - 1][j - 1]
            };
        }
    }
    paths[m][n]
}
