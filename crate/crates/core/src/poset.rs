//! Finite posets over labeled vertices.
//!
//! A [`Poset`] keeps its vertices in a canonical sequence (first-appearance
//! order of the input) and stores the full order relation, reflexive pairs
//! included, as one up-set and one down-set bitset per vertex.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex name. Non-empty, no whitespace, must not start with `#`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        let valid = !text.is_empty()
            && !text.starts_with('#')
            && !text.chars().any(|c| c.is_whitespace() || c.is_control());
        if valid {
            Ok(Label(text))
        } else {
            Err(Error::InvalidLabel(text))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Label {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for Label {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl PartialEq<str> for Label {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for Label {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// An edge of the Hasse diagram: `upper` covers `lower`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverPair {
    pub lower: Label,
    pub upper: Label,
}

/// A finite partially ordered set.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_indices()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl Default for Poset {
    fn default() -> Self {
        Poset::empty()
    }
}

/// Collects labels in first-appearance order.
#[derive(Default)]
struct LabelTable {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl LabelTable {
    fn intern(&mut self, text: &str) -> Result<usize> {
        if let Some(&i) = self.index.get(text) {
            return Ok(i);
        }
        let label = Label::new(text)?;
        let i = self.labels.len();
        self.index.insert(label.clone(), i);
        self.labels.push(label);
        Ok(i)
    }
}

fn reflexive_rows(n: usize) -> Vec<FixedBitSet> {
    (0..n)
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(i);
            row
        })
        .collect()
}

/// Warshall closure over bitset rows: `rows[i]` is the set of successors of `i`.
pub(crate) fn transitive_closure(rows: &mut [FixedBitSet]) {
    let n = rows.len();
    for k in 0..n {
        for i in 0..n {
            if i != k && rows[i].contains(k) {
                let (a, b) = if i < k {
                    let (lo, hi) = rows.split_at_mut(k);
                    (&mut lo[i], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&mut hi[0], &lo[k])
                };
                a.union_with(b);
            }
        }
    }
}

/// True when every successor's row is contained in its predecessor's row.
pub(crate) fn is_transitive(rows: &[FixedBitSet]) -> bool {
    rows.iter()
        .enumerate()
        .all(|(i, row)| row.ones().all(|j| j == i || rows[j].is_subset(row)))
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.ones() {
            out[j].insert(i);
        }
    }
    out
}

impl Poset {
    pub fn empty() -> Self {
        Poset {
            labels: Vec::new(),
            index: HashMap::new(),
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    /// Builds the poset generated by `pairs`. A pair `(a, a)` only declares `a`.
    pub fn from_pairs<I, A, B>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        Self::from_pairs_with_vertices(pairs, std::iter::empty::<&str>())
    }

    /// Like [`Poset::from_pairs`], with extra (possibly isolated) vertices
    /// appended after those named by `pairs`.
    pub fn from_pairs_with_vertices<I, A, B, V, C>(pairs: I, vertices: V) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
        V: IntoIterator<Item = C>,
        C: AsRef<str>,
    {
        let mut table = LabelTable::default();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            let a = table.intern(a.as_ref())?;
            let b = table.intern(b.as_ref())?;
            edges.push((a, b));
        }
        for v in vertices {
            table.intern(v.as_ref())?;
        }
        Self::from_edges(table.labels, &edges)
    }

    /// Closes `edges` (pairs of indices into `labels`) reflexively and transitively.
    pub fn from_edges(labels: Vec<Label>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut up = reflexive_rows(labels.len());
        for &(a, b) in edges {
            up[a].insert(b);
        }
        transitive_closure(&mut up);
        Self::from_closed_rows(labels, up)
    }

    /// Builds a poset from an order predicate that is already reflexive and
    /// transitive; antisymmetry is still checked.
    pub fn from_order_fn(labels: Vec<Label>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = reflexive_rows(n);
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && leq(i, j) {
                    row.insert(j);
                }
            }
        }
        debug_assert!(is_transitive(&up));
        Self::from_closed_rows(labels, up)
    }

    pub(crate) fn from_closed_rows(labels: Vec<Label>, up: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidLabel(format!("{label} (duplicate)")));
            }
        }
        for (i, row) in up.iter().enumerate() {
            if let Some(j) = row.ones().find(|&j| j != i && up[j].contains(i)) {
                return Err(Error::Cycle(labels[i].to_string(), labels[j].to_string()));
            }
        }
        let down = transpose(&up);
        Ok(Poset {
            labels,
            index,
            up,
            down,
        })
    }

    /// Total order `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Self {
        Self::from_order_fn(numbered(n), |i, j| i <= j).expect("chain is a poset")
    }

    /// `n` pairwise incomparable vertices labeled `1..n`.
    pub fn antichain(n: usize) -> Self {
        Self::from_order_fn(numbered(n), |i, j| i == j).expect("antichain is a poset")
    }

    /// Subsets of an `n`-set ordered by inclusion. Vertex `m` is the subset
    /// with bitmask `m`; its label is the bitstring whose `k`-th character
    /// marks element `k + 1`. The lone vertex of `boolean_algebra(0)` is `0`.
    pub fn boolean_algebra(n: usize) -> Self {
        assert!(
            n < usize::BITS as usize - 1,
            "boolean_algebra({n}) is too large"
        );
        let size = 1usize << n;
        let labels = (0..size)
            .map(|m| {
                let text: String = if n == 0 {
                    "0".to_string()
                } else {
                    (0..n)
                        .map(|k| if m >> k & 1 == 1 { '1' } else { '0' })
                        .collect()
                };
                Label(text)
            })
            .collect();
        Self::from_order_fn(labels, |a, b| a & b == a).expect("boolean algebra is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertices in canonical order.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn elements(&self) -> Vec<Label> {
        self.labels.clone()
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{j : i <= j}`.
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// `{j : j <= i}`.
    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub(crate) fn up_rows(&self) -> &[FixedBitSet] {
        &self.up
    }

    /// Number of pairs in the order relation, reflexive pairs included.
    pub fn relation_len(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn relation_indices(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
            .collect()
    }

    /// The full order relation sorted by canonical vertex index.
    pub fn relation(&self) -> Vec<(Label, Label)> {
        self.relation_indices()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && self.up[i].intersection(&self.down[j]).count() == 2
    }

    pub fn cover_indices(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| {
                self.up[i]
                    .ones()
                    .filter(move |&j| self.is_cover(i, j))
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// The covering relation (Hasse diagram edges) in canonical order.
    pub fn covering(&self) -> Vec<CoverPair> {
        self.cover_indices()
            .into_iter()
            .map(|(i, j)| CoverPair {
                lower: self.labels[i].clone(),
                upper: self.labels[j].clone(),
            })
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down[i].count_ones(..) == 1)
            .collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.up[i].count_ones(..) == 1)
            .collect()
    }

    /// Indices sorted so that every element follows everything below it.
    pub fn linear_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.down[i].count_ones(..));
        order
    }

    /// Number of elements in the longest chain ending at each vertex.
    pub fn heights(&self) -> Vec<usize> {
        let mut heights = vec![0; self.len()];
        for i in self.linear_order() {
            heights[i] = 1 + self.down[i]
                .ones()
                .filter(|&j| j != i)
                .map(|j| heights[j])
                .max()
                .unwrap_or(0);
        }
        heights
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    fn is_chain_set(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|a| {
            set.ones()
                .all(|b| self.up[a].contains(b) || self.down[a].contains(b))
        })
    }

    /// Every principal down-set is totally ordered.
    pub fn is_forest(&self) -> bool {
        self.first_non_forest_vertex().is_none()
    }

    pub(crate) fn first_non_forest_vertex(&self) -> Option<usize> {
        (0..self.len()).find(|&i| !self.is_chain_set(&self.down[i]))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len())
            .all(|i| self.up[i].count_ones(..) + self.down[i].count_ones(..) == self.len() + 1)
    }

    /// Same order with every label passed through `rename`.
    pub fn relabeled(&self, mut rename: impl FnMut(usize, &Label) -> String) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| Label::new(rename(i, l)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_closed_rows(labels, self.up.clone())
    }

    /// Serializes to the line-oriented poset text format: one `v` line per
    /// vertex, then one `r` line per cover pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            out.push_str(&format!("v {l}\n"));
        }
        for (a, b) in self.cover_indices() {
            out.push_str(&format!("r {} {}\n", self.labels[a], self.labels[b]));
        }
        out
    }

    /// Parses the poset text format.
    ///
    /// Each non-blank line is `v LABEL` or `r A B`; a token starting with `#`
    /// comments out the rest of the line. The closure is taken on load.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = LabelTable::default();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let tokens: Vec<&str> = line
                .split_whitespace()
                .take_while(|t| !t.starts_with('#'))
                .collect();
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match tokens.as_slice() {
                [] => {}
                ["v", v] => {
                    table.intern(v).map_err(|e| parse_err(e.to_string()))?;
                }
                ["r", a, b] => {
                    let a = table.intern(a).map_err(|e| parse_err(e.to_string()))?;
                    let b = table.intern(b).map_err(|e| parse_err(e.to_string()))?;
                    edges.push((a, b));
                }
                ["v", ..] => return Err(parse_err("expected `v LABEL`".into())),
                ["r", ..] => return Err(parse_err("expected `r LOWER UPPER`".into())),
                [other, ..] => return Err(parse_err(format!("unknown directive {other:?}"))),
            }
        }
        Self::from_edges(table.labels, &edges)
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Poset::parse(s)
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn numbered(n: usize) -> Vec<Label> {
    (1..=n).map(|i| Label(i.to_string())).collect()
}
