//! Monotone and regular partitions of a poset.
//!
//! A *monotone partition* is a preorder on the vertex set that contains the
//! order of the poset; its blocks are the classes of mutually related
//! vertices. A *regular partition* is a set partition whose block digraph
//! (an edge `B -> B'` whenever some `x` in `B` lies below some `y` in `B'`) has
//! no cycles.
//!
//! Both enumerations are exhaustive searches whose candidate counts are
//! reported alongside the results: `2^|C|` preorder candidates, where `C` is
//! the set of ordered pairs of distinct vertices outside the order, and
//! `Bell(n)` set partitions.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::{is_transitive, transitive_closure, Label, Poset};

/// Candidates examined and partitions found by one enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationReport {
    pub analyzed: u64,
    pub found: u64,
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Analyzed: {} - Partitions: {}",
            self.analyzed, self.found
        )
    }
}

/// Search-size limits for callers that must not run away on large inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `|C|` accepted by the monotone search.
    pub max_free_pairs: usize,
    /// Largest vertex count accepted by the regular search.
    pub max_regular_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_free_pairs: 24,
            max_regular_elements: 10,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_free_pairs: usize::MAX,
            max_regular_elements: usize::MAX,
        }
    }
}

/// A preorder containing the order of its base poset.
#[derive(Clone)]
pub struct MonotonePartition {
    base: Arc<Poset>,
    rows: Vec<FixedBitSet>,
}

impl PartialEq for MonotonePartition {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && *self.base == *other.base
    }
}

impl Eq for MonotonePartition {}

impl fmt::Debug for MonotonePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonotonePartition")
            .field("quotient", &self.to_poset().describe())
            .finish()
    }
}

impl MonotonePartition {
    fn from_rows(base: Arc<Poset>, rows: Vec<FixedBitSet>) -> Self {
        debug_assert!(is_transitive(&rows));
        debug_assert!(base
            .up_rows()
            .iter()
            .zip(&rows)
            .all(|(b, r)| b.is_subset(r)));
        MonotonePartition { base, rows }
    }

    /// The preorder generated by the order of `base` together with `pairs`.
    pub fn generated_by<A, B>(base: &Arc<Poset>, pairs: &[(A, B)]) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut rows = base.up_rows().to_vec();
        for (a, b) in pairs {
            let a = base.require(a.as_ref())?;
            let b = base.require(b.as_ref())?;
            rows[a].insert(b);
        }
        transitive_closure(&mut rows);
        Ok(Self::from_rows(Arc::clone(base), rows))
    }

    /// The order of `base` itself; the bottom of the monotone lattice.
    pub fn identity(base: &Arc<Poset>) -> Self {
        Self::from_rows(Arc::clone(base), base.up_rows().to_vec())
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn relation_len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// Pairs of the preorder that are not in the base order, sorted by index.
    pub fn added_pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.ones()
                    .filter(move |&j| !self.base.leq(i, j))
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn added_pairs_labeled(&self) -> Vec<(Label, Label)> {
        self.added_pairs()
            .into_iter()
            .map(|(i, j)| (self.base.label(i).clone(), self.base.label(j).clone()))
            .collect()
    }

    /// Full preorder as label pairs sorted by index.
    pub fn preorder(&self) -> Vec<(Label, Label)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.ones()
                    .map(move |j| (self.base.label(i).clone(), self.base.label(j).clone()))
            })
            .collect()
    }

    /// Preorder inclusion: the lattice order on monotone partitions.
    pub fn is_below(&self, other: &MonotonePartition) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    /// Classes of mutually related vertices.
    pub fn blocks(&self) -> SetPartition {
        let n = self.rows.len();
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if block_of[i] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let members: Vec<usize> = self.rows[i]
                .ones()
                .filter(|&j| self.rows[j].contains(i))
                .collect();
            for &j in &members {
                block_of[j] = id;
            }
            blocks.push(members);
        }
        SetPartition { blocks, block_of }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.ones().all(|j| j == i || !self.rows[j].contains(i)))
    }

    pub fn is_total(&self) -> bool {
        let n = self.rows.len();
        (0..n).all(|i| (0..n).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// Collapses each block to a single vertex.
    pub fn to_poset(&self) -> QuotientPoset {
        let blocks = self.blocks();
        let reps: Vec<usize> = blocks.blocks.iter().map(|b| b[0]).collect();
        let labels = block_labels(&self.base, &blocks);
        let poset = Poset::from_order_fn(labels, |a, b| self.leq(reps[a], reps[b]))
            .expect("quotient of a preorder is antisymmetric");
        QuotientPoset::new(poset, blocks, &self.base)
    }
}

/// A set partition of `0..n` in canonical form: members of each block in
/// increasing order, blocks ordered by least member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl SetPartition {
    /// From a restricted growth string: `rgs[i]` is the block of `i`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        debug_assert!(blocks.iter().all(|b| !b.is_empty()));
        SetPartition {
            blocks,
            block_of: rgs.to_vec(),
        }
    }

    /// Validates and canonicalizes blocks of indices covering `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::InvalidPartition(format!("index {i} out of range")));
                }
                if block_of[i] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("index {i} in two blocks")));
                }
                block_of[i] = b;
            }
        }
        if let Some(i) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("index {i} not covered")));
        }
        Ok(Self::from_rgs(&canonical_rgs(&block_of)))
    }

    /// Blocks given by vertex labels of `p`.
    pub fn from_labels<B, L>(p: &Poset, blocks: &[B]) -> Result<Self>
    where
        B: AsRef<[L]>,
        L: AsRef<str>,
    {
        let blocks = blocks
            .iter()
            .map(|b| {
                b.as_ref()
                    .iter()
                    .map(|l| p.require(l.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(p.len(), &blocks)
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_rgs(&(0..n).collect::<Vec<_>>())
    }

    pub fn single_block(n: usize) -> Self {
        Self::from_rgs(&vec![0; n])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn element_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Restricted growth string of this partition.
    pub fn rgs(&self) -> &[usize] {
        &self.block_of
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.blocks.iter().all(|b| {
            let target = other.block_of[b[0]];
            b.iter().all(|&i| other.block_of[i] == target)
        })
    }

    pub fn labeled_blocks(&self, p: &Poset) -> Vec<Vec<Label>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&i| p.label(i).clone()).collect())
            .collect()
    }

    /// Concatenated block labels separated by `|`, e.g. `xy|z`.
    pub fn describe(&self, p: &Poset) -> String {
        block_labels(p, self)
            .iter()
            .map(Label::as_str)
            .collect::<Vec<_>>()
            .join("|")
    }

    /// True iff the block digraph induced by `p` is acyclic.
    pub fn is_regular_for(&self, p: &Poset) -> bool {
        regular_to_poset(self, p).is_ok()
    }
}

fn canonical_rgs(assignment: &[usize]) -> Vec<usize> {
    let mut renumber = std::collections::HashMap::new();
    assignment
        .iter()
        .map(|&b| {
            let next = renumber.len();
            *renumber.entry(b).or_insert(next)
        })
        .collect()
}

/// Block labels: member labels concatenated in canonical order. If two blocks
/// happen to concatenate to the same text, every label gets a `#k` suffix.
fn block_labels(p: &Poset, partition: &SetPartition) -> Vec<Label> {
    let texts: Vec<String> = partition
        .blocks
        .iter()
        .map(|b| b.iter().map(|&i| p.label(i).as_str()).collect())
        .collect();
    let distinct: HashSet<&String> = texts.iter().collect();
    let clash = distinct.len() != texts.len();
    texts
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let text = if clash {
                format!("{t}#{}", k + 1)
            } else {
                t.clone()
            };
            Label::new(text).expect("concatenated labels are valid")
        })
        .collect()
}

/// A poset of blocks, together with the projection from the base poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoset {
    poset: Poset,
    partition: SetPartition,
    base_labels: Vec<Label>,
}

impl QuotientPoset {
    fn new(poset: Poset, partition: SetPartition, base: &Poset) -> Self {
        QuotientPoset {
            poset,
            partition,
            base_labels: base.elements(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    /// Block (vertex of the quotient) containing base vertex `i`.
    pub fn projection(&self) -> &[usize] {
        self.partition.rgs()
    }

    /// Label of the block containing the base vertex named `label`.
    pub fn block_label_of(&self, label: &str) -> Option<&Label> {
        let i = self.base_labels.iter().position(|l| l == label)?;
        Some(self.poset.label(self.partition.block_of(i)))
    }

    /// Compact text form: `a<b<c` for chains, otherwise the cover pairs
    /// followed by isolated blocks, comma-separated.
    pub fn describe(&self) -> String {
        let p = &self.poset;
        if p.is_empty() {
            return "(empty)".to_string();
        }
        if p.is_chain() {
            return p
                .linear_order()
                .into_iter()
                .map(|i| p.label(i).as_str())
                .collect::<Vec<_>>()
                .join("<");
        }
        let covers = p.cover_indices();
        let mut parts: Vec<String> = covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
            .collect();
        for i in 0..p.len() {
            if !covers.iter().any(|&(a, b)| a == i || b == i) {
                parts.push(p.label(i).to_string());
            }
        }
        parts.join(",")
    }
}

/// Streams the monotone partitions of a poset in canonical order: by number
/// of added pairs, then lexicographically on the sorted added-pair list.
pub struct MonotonePartitions {
    base: Arc<Poset>,
    free: Vec<(usize, usize)>,
    size: usize,
    combo: Vec<usize>,
    fresh: bool,
    done: bool,
    scratch: Vec<FixedBitSet>,
    report: EnumerationReport,
}

impl MonotonePartitions {
    pub fn new(base: Arc<Poset>) -> Self {
        let n = base.len();
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && !base.leq(i, j))
            .collect();
        let scratch = base.up_rows().to_vec();
        MonotonePartitions {
            base,
            free,
            size: 0,
            combo: Vec::new(),
            fresh: true,
            done: false,
            scratch,
            report: EnumerationReport::default(),
        }
    }

    /// `|C|`: ordered pairs of distinct vertices outside the order.
    pub fn free_pairs(&self) -> usize {
        self.free.len()
    }

    pub fn report(&self) -> EnumerationReport {
        self.report
    }

    /// Moves `combo` to the next `size`-subset of `free` in lexicographic
    /// order, growing `size` when the current size is exhausted.
    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let m = self.free.len();
        let k = self.size;
        if let Some(i) = (0..k).rev().find(|&i| self.combo[i] < m - k + i) {
            self.combo[i] += 1;
            for t in i + 1..k {
                self.combo[t] = self.combo[t - 1] + 1;
            }
            return true;
        }
        if k == m {
            return false;
        }
        self.size += 1;
        self.combo = (0..self.size).collect();
        true
    }
}

impl Iterator for MonotonePartitions {
    type Item = MonotonePartition;

    fn next(&mut self) -> Option<MonotonePartition> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            self.report.analyzed += 1;
            for (row, base) in self.scratch.iter_mut().zip(self.base.up_rows()) {
                row.clone_from(base);
            }
            for &c in &self.combo {
                let (a, b) = self.free[c];
                self.scratch[a].insert(b);
            }
            if is_transitive(&self.scratch) {
                self.report.found += 1;
                return Some(MonotonePartition::from_rows(
                    Arc::clone(&self.base),
                    self.scratch.clone(),
                ));
            }
        }
        None
    }
}

/// All monotone partitions of `p` in canonical order.
///
/// Panics if `p` has 64 or more free pairs.
pub fn monotone_partitions(p: &Poset) -> (Vec<MonotonePartition>, EnumerationReport) {
    monotone_partitions_within(p, &Limits::unlimited()).expect("no limit")
}

/// Like [`monotone_partitions`], refusing inputs beyond `limits`.
pub fn monotone_partitions_within(
    p: &Poset,
    limits: &Limits,
) -> Result<(Vec<MonotonePartition>, EnumerationReport)> {
    let mut it = checked_monotone(p, limits)?;
    let items: Vec<_> = it.by_ref().collect();
    Ok((items, it.report()))
}

/// Counts monotone partitions without keeping them.
pub fn count_monotone_partitions(p: &Poset, limits: &Limits) -> Result<EnumerationReport> {
    let mut it = checked_monotone(p, limits)?;
    it.by_ref().for_each(drop);
    Ok(it.report())
}

fn checked_monotone(p: &Poset, limits: &Limits) -> Result<MonotonePartitions> {
    let it = MonotonePartitions::new(Arc::new(p.clone()));
    if it.free_pairs() > limits.max_free_pairs {
        return Err(Error::GuardExceeded {
            what: "number of free pairs",
            actual: it.free_pairs(),
            limit: limits.max_free_pairs,
        });
    }
    if it.free_pairs() >= u64::BITS as usize {
        return Err(Error::GuardExceeded {
            what: "number of free pairs",
            actual: it.free_pairs(),
            limit: u64::BITS as usize - 1,
        });
    }
    Ok(it)
}

/// Streams the regular partitions of a poset in restricted-growth-string
/// lexicographic order.
pub struct RegularPartitions {
    covers: Vec<(usize, usize)>,
    rgs: Vec<usize>,
    prefix_max: Vec<usize>,
    fresh: bool,
    done: bool,
    preds: Vec<u64>,
    report: EnumerationReport,
}

/// Largest vertex count the regular search can represent.
pub const MAX_REGULAR_ELEMENTS: usize = 64;

impl RegularPartitions {
    /// Panics if `poset` has more than [`MAX_REGULAR_ELEMENTS`] vertices.
    pub fn new(poset: &Poset) -> Self {
        let n = poset.len();
        assert!(
            n <= MAX_REGULAR_ELEMENTS,
            "too many elements for the regular search"
        );
        RegularPartitions {
            covers: poset.cover_indices(),
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            fresh: true,
            done: false,
            preds: vec![0; n],
            report: EnumerationReport::default(),
        }
    }

    pub fn report(&self) -> EnumerationReport {
        self.report
    }

    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let n = self.rgs.len();
        // prefix_max[i] = max(rgs[0..i]), the largest value rgs[i] may exceed by one
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i] {
                self.rgs[i] += 1;
                let m = self.prefix_max[i].max(self.rgs[i]);
                for t in i + 1..n {
                    self.rgs[t] = 0;
                    self.prefix_max[t] = m;
                }
                return true;
            }
        }
        false
    }

    /// Kahn's algorithm on the block digraph, with blocks as bit positions.
    fn block_digraph_is_acyclic(&mut self) -> bool {
        let blocks = self.rgs.iter().max().map_or(0, |&m| m + 1);
        self.preds[..blocks].fill(0);
        for &(a, b) in &self.covers {
            let (ba, bb) = (self.rgs[a], self.rgs[b]);
            if ba != bb {
                self.preds[bb] |= 1 << ba;
            }
        }
        let mut remaining: u64 = if blocks == 64 {
            u64::MAX
        } else {
            (1u64 << blocks) - 1
        };
        while remaining != 0 {
            let mut progress = false;
            let mut bits = remaining;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.preds[b] & remaining == 0 {
                    remaining &= !(1 << b);
                    progress = true;
                }
            }
            if !progress {
                return false;
            }
        }
        true
    }
}

impl Iterator for RegularPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            self.report.analyzed += 1;
            if self.block_digraph_is_acyclic() {
                self.report.found += 1;
                return Some(SetPartition::from_rgs(&self.rgs));
            }
        }
        None
    }
}

/// All regular partitions of `p`, ordered by block count (descending), then
/// in restricted-growth-string order.
///
/// Panics if `p` has more than [`MAX_REGULAR_ELEMENTS`] vertices.
pub fn regular_partitions(p: &Poset) -> (Vec<SetPartition>, EnumerationReport) {
    regular_partitions_within(p, &Limits::unlimited()).expect("no limit")
}

pub fn regular_partitions_within(
    p: &Poset,
    limits: &Limits,
) -> Result<(Vec<SetPartition>, EnumerationReport)> {
    let mut it = checked_regular(p, limits)?;
    let mut items: Vec<_> = it.by_ref().collect();
    items.sort_by_key(|sp| std::cmp::Reverse(sp.block_count()));
    Ok((items, it.report()))
}

pub fn count_regular_partitions(p: &Poset, limits: &Limits) -> Result<EnumerationReport> {
    let mut it = checked_regular(p, limits)?;
    it.by_ref().for_each(drop);
    Ok(it.report())
}

fn checked_regular(p: &Poset, limits: &Limits) -> Result<RegularPartitions> {
    let limit = limits.max_regular_elements.min(MAX_REGULAR_ELEMENTS);
    if p.len() > limit {
        return Err(Error::GuardExceeded {
            what: "number of elements",
            actual: p.len(),
            limit,
        });
    }
    Ok(RegularPartitions::new(p))
}

/// Quotient of a monotone partition.
pub fn partition_to_poset(mp: &MonotonePartition) -> QuotientPoset {
    mp.to_poset()
}

/// Quotient of a regular partition: blocks ordered by the closure of the
/// block digraph.
pub fn regular_to_poset(sp: &SetPartition, p: &Poset) -> Result<QuotientPoset> {
    check_partition_of(sp, p)?;
    let labels = block_labels(p, sp);
    let edges: Vec<(usize, usize)> = p
        .cover_indices()
        .into_iter()
        .map(|(a, b)| (sp.block_of(a), sp.block_of(b)))
        .filter(|(a, b)| a != b)
        .collect();
    let poset = Poset::from_edges(labels, &edges).map_err(|e| match e {
        Error::Cycle(a, b) => Error::NotRegular(a, b),
        other => other,
    })?;
    Ok(QuotientPoset::new(poset, sp.clone(), p))
}

/// The preorder generated by the order of `p` and the blocks of `sp`.
pub fn as_preorder(sp: &SetPartition, p: &Arc<Poset>) -> Result<MonotonePartition> {
    regular_to_poset(sp, p)?;
    let mut rows = p.up_rows().to_vec();
    for block in sp.blocks() {
        for &a in block {
            for &b in block {
                rows[a].insert(b);
            }
        }
    }
    transitive_closure(&mut rows);
    Ok(MonotonePartition::from_rows(Arc::clone(p), rows))
}

fn check_partition_of(sp: &SetPartition, p: &Poset) -> Result<()> {
    if sp.element_count() != p.len() {
        return Err(Error::InvalidPartition(format!(
            "partition has {} elements, poset has {}",
            sp.element_count(),
            p.len()
        )));
    }
    Ok(())
}

/// Linear extensions of `p` as vertex sequences (lowest first), in the
/// canonical monotone-partition order of the corresponding total preorders.
pub fn linear_extension_orders(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    extend_linear(p, &mut seq, &mut placed, &mut out);
    // All extensions add the same number of pairs, so the canonical order
    // reduces to comparing the sorted added-pair lists.
    let mut keyed: Vec<_> = out
        .into_iter()
        .map(|seq| {
            let mut pos = vec![0; n];
            for (k, &v) in seq.iter().enumerate() {
                pos[v] = k;
            }
            let added: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && pos[i] < pos[j] && !p.leq(i, j))
                .collect();
            (added, seq)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, seq)| seq).collect()
}

fn extend_linear(
    p: &Poset,
    seq: &mut Vec<usize>,
    placed: &mut FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if seq.len() == p.len() {
        out.push(seq.clone());
        return;
    }
    for v in 0..p.len() {
        if placed.contains(v) {
            continue;
        }
        if p.down_set(v).ones().all(|u| u == v || placed.contains(u)) {
            placed.insert(v);
            seq.push(v);
            extend_linear(p, seq, placed, out);
            seq.pop();
            placed.set(v, false);
        }
    }
}

/// Linear extensions of `p`, each as a chain of singleton blocks.
pub fn linear_extensions(p: &Poset) -> Vec<QuotientPoset> {
    let base = Arc::new(p.clone());
    linear_extension_orders(p)
        .into_iter()
        .map(|seq| {
            let n = seq.len();
            let mut pos = vec![0; n];
            for (k, &v) in seq.iter().enumerate() {
                pos[v] = k;
            }
            let rows = (0..n)
                .map(|i| {
                    let mut row = FixedBitSet::with_capacity(n);
                    for j in 0..n {
                        if pos[i] <= pos[j] {
                            row.insert(j);
                        }
                    }
                    row
                })
                .collect();
            MonotonePartition::from_rows(Arc::clone(&base), rows).to_poset()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Poset {
        Poset::from_pairs([("x", "y"), ("x", "z")]).unwrap()
    }

    fn added(mp: &MonotonePartition) -> Vec<(String, String)> {
        mp.added_pairs_labeled()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        list.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn b2_monotone_order() {
        let (parts, report) = monotone_partitions(&b2());
        assert_eq!(
            report,
            EnumerationReport {
                analyzed: 16,
                found: 7
            }
        );
        let expected = [
            pairs(&[]),
            pairs(&[("y", "z")]),
            pairs(&[("z", "y")]),
            pairs(&[("y", "x"), ("y", "z")]),
            pairs(&[("y", "z"), ("z", "y")]),
            pairs(&[("z", "x"), ("z", "y")]),
            pairs(&[("y", "x"), ("y", "z"), ("z", "x"), ("z", "y")]),
        ];
        let got: Vec<_> = parts.iter().map(added).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn fourth_b2_partition_collapses_to_chain() {
        let (parts, _) = monotone_partitions(&b2());
        let q = partition_to_poset(&parts[3]);
        assert_eq!(q.poset().elements(), vec!["xy", "z"]);
        assert!(q.poset().is_chain());
        assert_eq!(q.describe(), "xy<z");
        assert_eq!(q.block_label_of("y").unwrap(), "xy");
    }

    #[test]
    fn identity_and_full_quotients() {
        let p = Arc::new(b2());
        let id = partition_to_poset(&MonotonePartition::identity(&p));
        assert_eq!(id.poset(), &*p);
        let (parts, _) = monotone_partitions(&p);
        let top = partition_to_poset(parts.last().unwrap());
        assert_eq!(top.poset().elements(), vec!["xyz"]);
    }

    #[test]
    fn small_counts() {
        for (n, analyzed, found) in [(2, 2, 2), (3, 8, 4), (4, 64, 8)] {
            let (_, r) = monotone_partitions(&Poset::chain(n));
            assert_eq!((r.analyzed, r.found), (analyzed, found));
        }
        let (parts, r) = monotone_partitions(&Poset::chain(1));
        assert_eq!((r.analyzed, r.found, parts.len()), (1, 1, 1));
        let (_, r) = monotone_partitions(&Poset::antichain(3));
        assert_eq!(r.found, 29);
        let (parts, r) = monotone_partitions(&Poset::empty());
        assert_eq!((r.analyzed, r.found, parts.len()), (1, 1, 1));
    }

    #[test]
    fn regular_counts() {
        let (parts, r) = regular_partitions(&b2());
        assert_eq!((r.analyzed, r.found), (5, 5));
        assert_eq!(parts[0], SetPartition::discrete(3));
        assert_eq!(parts[4], SetPartition::single_block(3));
        for (n, analyzed, found) in [(2, 2, 2), (3, 5, 4), (4, 15, 8)] {
            let (_, r) = regular_partitions(&Poset::chain(n));
            assert_eq!((r.analyzed, r.found), (analyzed, found));
        }
        let m2 = Poset::from_pairs([("r", "a"), ("r", "b"), ("b", "t"), ("a", "t")]).unwrap();
        let (_, r) = regular_partitions(&m2);
        assert_eq!((r.analyzed, r.found), (15, 11));
        let (_, r) = regular_partitions(&Poset::antichain(4));
        assert_eq!((r.analyzed, r.found), (15, 15));
        let (parts, r) = regular_partitions(&Poset::empty());
        assert_eq!((r.analyzed, r.found, parts.len()), (1, 1, 1));
    }

    #[test]
    fn regular_order_sorts_by_block_count() {
        let (parts, _) = regular_partitions(&Poset::antichain(4));
        let counts: Vec<usize> = parts.iter().map(SetPartition::block_count).collect();
        assert!(counts.windows(2).all(|w| w[0] >= w[1]));
        // ties keep RGS order
        let twos: Vec<&[usize]> = parts
            .iter()
            .filter(|p| p.block_count() == 3)
            .map(|p| p.rgs())
            .collect();
        assert!(twos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rgs_walk_is_lexicographic_and_complete() {
        let p = Poset::antichain(5);
        let all: Vec<Vec<usize>> = RegularPartitions::new(&p)
            .map(|s| s.rgs().to_vec())
            .collect();
        assert_eq!(all.len(), 52);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], vec![0; 5]);
        assert_eq!(all[51], vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn regular_quotients() {
        let p = Poset::from_pairs([("a", "b"), ("b", "c")]).unwrap();
        let ab_c = SetPartition::from_labels(&p, &[vec!["a", "b"], vec!["c"]]).unwrap();
        let q = regular_to_poset(&ab_c, &p).unwrap();
        assert_eq!(q.describe(), "ab<c");

        let ac_b = SetPartition::from_labels(&p, &[vec!["a", "c"], vec!["b"]]).unwrap();
        assert!(matches!(
            regular_to_poset(&ac_b, &p),
            Err(Error::NotRegular(..))
        ));
        assert!(!ac_b.is_regular_for(&p));

        let discrete = regular_to_poset(&SetPartition::discrete(3), &p).unwrap();
        assert_eq!(discrete.poset(), &p);
    }

    #[test]
    fn as_preorder_examples() {
        let p = Arc::new(b2());
        let xy_z = SetPartition::from_labels(&p, &[vec!["x", "y"], vec!["z"]]).unwrap();
        let mp = as_preorder(&xy_z, &p).unwrap();
        assert_eq!(added(&mp), pairs(&[("y", "x"), ("y", "z")]));
        assert_eq!(mp.blocks(), xy_z);

        let id = as_preorder(&SetPartition::discrete(3), &p).unwrap();
        assert_eq!(id, MonotonePartition::identity(&p));

        let full = as_preorder(&SetPartition::single_block(3), &p).unwrap();
        assert_eq!(full.relation_len(), 9);

        let chain = Arc::new(Poset::chain(3));
        let bad = SetPartition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        assert!(as_preorder(&bad, &chain).is_err());
    }

    #[test]
    fn set_partition_validation() {
        assert!(SetPartition::from_blocks(3, &[vec![0, 1]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![0, 1], vec![1]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![0, 1], vec![]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![0, 5]]).is_err());
        let sp = SetPartition::from_blocks(4, &[vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(sp.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert!(SetPartition::discrete(4).refines(&sp));
        assert!(sp.refines(&SetPartition::single_block(4)));
        assert!(!sp.refines(&SetPartition::discrete(4)));
    }

    #[test]
    fn mismatched_partition_size() {
        let p = Poset::chain(3);
        assert!(matches!(
            regular_to_poset(&SetPartition::discrete(2), &p),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn linear_extension_examples() {
        let exts = linear_extensions(&b2());
        let described: Vec<String> = exts.iter().map(QuotientPoset::describe).collect();
        assert_eq!(described, vec!["x<y<z", "x<z<y"]);
        assert_eq!(linear_extensions(&Poset::chain(4)).len(), 1);
        assert_eq!(linear_extensions(&Poset::antichain(3)).len(), 6);
        assert_eq!(linear_extensions(&Poset::empty()).len(), 1);
    }

    #[test]
    fn linear_extensions_follow_monotone_order() {
        let p = Poset::antichain(3);
        let (parts, _) = monotone_partitions(&p);
        let filtered: Vec<String> = parts
            .iter()
            .filter(|m| m.is_antisymmetric() && m.is_total())
            .map(|m| m.to_poset().describe())
            .collect();
        let direct: Vec<String> = linear_extensions(&p)
            .iter()
            .map(QuotientPoset::describe)
            .collect();
        assert_eq!(filtered, direct);
    }

    #[test]
    fn guards() {
        let limits = Limits::default();
        assert!(matches!(
            monotone_partitions_within(&Poset::antichain(6), &limits),
            Err(Error::GuardExceeded { actual: 30, .. })
        ));
        assert!(matches!(
            count_regular_partitions(&Poset::antichain(11), &limits),
            Err(Error::GuardExceeded { actual: 11, .. })
        ));
        let r = count_regular_partitions(&Poset::antichain(6), &limits).unwrap();
        assert_eq!(r.found, 203);
        let r = count_monotone_partitions(&b2(), &limits).unwrap();
        assert_eq!(r.to_string(), "Analyzed: 16 - Partitions: 7");
    }

    #[test]
    fn clashing_block_labels_get_suffixes() {
        let q = Poset::from_pairs_with_vertices(
            std::iter::empty::<(&str, &str)>(),
            ["a", "bc", "ab", "c"],
        )
        .unwrap();
        let sp = SetPartition::from_labels(&q, &[vec!["a", "bc"], vec!["ab", "c"]]).unwrap();
        let quotient = regular_to_poset(&sp, &q).unwrap();
        assert_eq!(quotient.poset().elements(), vec!["abc#1", "abc#2"]);
    }
}
