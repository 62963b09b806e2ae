//! Products and coproducts of posets (monotone maps) and of forests (open
//! maps), plus exhaustive map enumeration used to check universal properties.
//!
//! The forest product is built from *synchronized chains*: an element of
//! `F x G` over the pair `(x, y)` is a chain in the componentwise order of
//! `F x G` whose first coordinates run through exactly the down-set of `x` and
//! whose second coordinates run through exactly the down-set of `y`. One chain
//! lies below another when it is an initial segment of it.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::poset::{Label, Poset};

/// Default bound on the source size for map enumeration.
pub const DEFAULT_MAP_GUARD: usize = 6;

/// A total vertex assignment between two posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap<'a> {
    source: &'a Poset,
    target: &'a Poset,
    assignment: Vec<usize>,
}

impl<'a> PosetMap<'a> {
    pub fn new(source: &'a Poset, target: &'a Poset, assignment: Vec<usize>) -> Self {
        assert_eq!(assignment.len(), source.len(), "assignment must be total");
        assert!(assignment.iter().all(|&v| v < target.len()));
        PosetMap {
            source,
            target,
            assignment,
        }
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels(
        source: &'a Poset,
        target: &'a Poset,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut assignment = vec![usize::MAX; source.len()];
        for &(a, b) in pairs {
            assignment[source.require(a)?] = target.require(b)?;
        }
        if let Some(i) = assignment.iter().position(|&v| v == usize::MAX) {
            return Err(Error::UnknownLabel(format!(
                "no image given for {}",
                source.label(i)
            )));
        }
        Ok(Self::new(source, target, assignment))
    }

    pub fn source(&self) -> &'a Poset {
        self.source
    }

    pub fn target(&self) -> &'a Poset {
        self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn image_of(&self, label: &str) -> Option<&'a Label> {
        let i = self.source.index_of(label)?;
        Some(self.target.label(self.assignment[i]))
    }

    pub fn is_monotone(&self) -> bool {
        self.source
            .relation_indices()
            .into_iter()
            .all(|(a, b)| self.target.leq(self.assignment[a], self.assignment[b]))
    }

    /// Monotone, and the image of every down-set is the down-set of the image.
    pub fn is_open(&self) -> bool {
        self.is_monotone() && (0..self.source.len()).all(|x| self.maps_down_set_onto(x))
    }

    fn maps_down_set_onto(&self, x: usize) -> bool {
        let image: HashSet<usize> = self
            .source
            .down_set(x)
            .ones()
            .map(|z| self.assignment[z])
            .collect();
        let fx = self.assignment[x];
        image.len() == self.target.down_set(fx).count_ones(..)
            && image.iter().all(|&w| self.target.leq(w, fx))
    }
}

pub fn is_monotone_map(m: &PosetMap<'_>) -> bool {
    m.is_monotone()
}

pub fn is_open_map(m: &PosetMap<'_>) -> bool {
    m.is_open()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Category {
    /// Posets and monotone maps.
    Poset,
    /// Forests and open maps.
    Forest,
}

/// Labels that are distinct after appending `#k` (1-based position) to every
/// entry when the raw texts collide.
fn unique_labels(texts: Vec<String>) -> Vec<Label> {
    let distinct: HashSet<&String> = texts.iter().collect();
    let clash = distinct.len() != texts.len();
    texts
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            let t = if clash { format!("{t}#{}", k + 1) } else { t };
            Label::new(t).expect("derived labels are valid")
        })
        .collect()
}

/// Disjoint union. If any label occurs in more than one summand, every
/// label of summand `k` (1-based) is suffixed with `#k`.
pub fn poset_sum(ps: &[Poset]) -> Poset {
    let mut seen = HashSet::new();
    let clash = ps
        .iter()
        .flat_map(|p| p.labels().iter())
        .any(|l| !seen.insert(l.as_str()));
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (k, p) in ps.iter().enumerate() {
        let offset = labels.len();
        for l in p.labels() {
            let text = if clash {
                format!("{l}#{}", k + 1)
            } else {
                l.to_string()
            };
            labels.push(Label::new(text).expect("tagged labels are valid"));
        }
        edges.extend(
            p.cover_indices()
                .into_iter()
                .map(|(a, b)| (a + offset, b + offset)),
        );
    }
    Poset::from_edges(labels, &edges).expect("disjoint union of posets is a poset")
}

fn require_forest(p: &Poset) -> Result<()> {
    match p.first_non_forest_vertex() {
        Some(i) => Err(Error::NotAForest(p.label(i).to_string())),
        None => Ok(()),
    }
}

/// Coproduct of forests: the disjoint union, after checking every summand.
pub fn forest_sum(ps: &[Poset]) -> Result<Poset> {
    ps.iter().try_for_each(require_forest)?;
    Ok(poset_sum(ps))
}

/// A binary product together with its two projections.
#[derive(Clone, Debug)]
pub struct Product {
    poset: Poset,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Product {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    /// Projections onto the two factors.
    pub fn projections<'a>(&'a self, p: &'a Poset, q: &'a Poset) -> (PosetMap<'a>, PosetMap<'a>) {
        (
            PosetMap::new(&self.poset, p, self.left.clone()),
            PosetMap::new(&self.poset, q, self.right.clone()),
        )
    }

    /// Product elements lying over `(x, y)`.
    fn fibers(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut fibers: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for z in 0..self.poset.len() {
            fibers
                .entry((self.left[z], self.right[z]))
                .or_default()
                .push(z);
        }
        fibers
    }
}

/// Cartesian product with the componentwise order; vertex `(a, b)` sits at
/// index `a * |q| + b`.
pub fn poset_product_pair(p: &Poset, q: &Poset) -> Product {
    let m = q.len();
    let mut texts = Vec::with_capacity(p.len() * m);
    let mut left = Vec::with_capacity(p.len() * m);
    let mut right = Vec::with_capacity(p.len() * m);
    for a in 0..p.len() {
        for b in 0..m {
            texts.push(format!("({},{})", p.label(a), q.label(b)));
            left.push(a);
            right.push(b);
        }
    }
    let poset = Poset::from_order_fn(unique_labels(texts), |i, j| {
        p.leq(left[i], left[j]) && q.leq(right[i], right[j])
    })
    .expect("product of posets is a poset");
    Product { poset, left, right }
}

/// n-ary product, folded from the left. The empty product is the one-point
/// poset `()`.
pub fn poset_product(ps: &[Poset]) -> Poset {
    match ps.split_first() {
        None => unit(),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, p| {
            poset_product_pair(&acc, p).into_poset()
        }),
    }
}

fn unit() -> Poset {
    Poset::from_pairs([("()", "()")]).expect("valid label")
}

/// An element of the forest product: a chain of pairs, lowest first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SyncChain {
    pub trace: Vec<(usize, usize)>,
}

impl SyncChain {
    pub fn top(&self) -> (usize, usize) {
        *self.trace.last().expect("traces are non-empty")
    }
}

/// The forest product with its element representation.
#[derive(Clone, Debug)]
pub struct ForestProduct {
    product: Product,
    chains: Vec<SyncChain>,
}

impl ForestProduct {
    pub fn poset(&self) -> &Poset {
        &self.product.poset
    }

    pub fn into_poset(self) -> Poset {
        self.product.poset
    }

    pub fn product(&self) -> &Product {
        &self.product
    }

    /// Chain of vertex `i` of the product poset.
    pub fn chains(&self) -> &[SyncChain] {
        &self.chains
    }
}

/// Product in the category of forests and open maps.
pub fn forest_product_pair(f: &Poset, g: &Poset) -> Result<ForestProduct> {
    require_forest(f)?;
    require_forest(g)?;
    let upper_covers = |p: &Poset| {
        let mut covers = vec![Vec::new(); p.len()];
        for (a, b) in p.cover_indices() {
            covers[a].push(b);
        }
        covers
    };
    let (up_f, up_g) = (upper_covers(f), upper_covers(g));

    let mut chains = Vec::new();
    let mut stack: Vec<SyncChain> = Vec::new();
    for &x in f.minimal().iter().rev() {
        for &y in g.minimal().iter().rev() {
            stack.push(SyncChain {
                trace: vec![(x, y)],
            });
        }
    }
    while let Some(chain) = stack.pop() {
        let (x, y) = chain.top();
        let steps_x = std::iter::once(x).chain(up_f[x].iter().copied());
        for nx in steps_x {
            let steps_y = std::iter::once(y).chain(up_g[y].iter().copied());
            for ny in steps_y {
                if (nx, ny) == (x, y) {
                    continue;
                }
                let mut trace = chain.trace.clone();
                trace.push((nx, ny));
                stack.push(SyncChain { trace });
            }
        }
        chains.push(chain);
    }
    chains.sort_by(|a, b| (a.trace.len(), &a.trace).cmp(&(b.trace.len(), &b.trace)));

    let texts = chains
        .iter()
        .map(|c| {
            c.trace
                .iter()
                .map(|&(a, b)| format!("({},{})", f.label(a), g.label(b)))
                .collect::<String>()
        })
        .collect();
    let poset = Poset::from_order_fn(unique_labels(texts), |i, j| {
        chains[j].trace.starts_with(&chains[i].trace)
    })
    .expect("initial-segment order is a partial order");
    let left = chains.iter().map(|c| c.top().0).collect();
    let right = chains.iter().map(|c| c.top().1).collect();
    Ok(ForestProduct {
        product: Product { poset, left, right },
        chains,
    })
}

/// Binary forest product as a bare poset.
pub fn forest_product(f: &Poset, g: &Poset) -> Result<Poset> {
    Ok(forest_product_pair(f, g)?.into_poset())
}

/// n-ary forest product, folded from the left; the empty product is `()`.
pub fn forest_product_all(fs: &[Poset]) -> Result<Poset> {
    match fs.split_first() {
        None => Ok(unit()),
        Some((first, rest)) => {
            require_forest(first)?;
            rest.iter()
                .try_fold(first.clone(), |acc, f| forest_product(&acc, f))
        }
    }
}

fn check_guard(p: &Poset, max_source: usize) -> Result<()> {
    if p.len() > max_source {
        return Err(Error::GuardExceeded {
            what: "map source size",
            actual: p.len(),
            limit: max_source,
        });
    }
    Ok(())
}

/// All monotone maps `p -> q` in lexicographic assignment order.
pub fn monotone_maps<'a>(p: &'a Poset, q: &'a Poset) -> Result<Vec<PosetMap<'a>>> {
    monotone_maps_within(p, q, DEFAULT_MAP_GUARD)
}

pub fn monotone_maps_within<'a>(
    p: &'a Poset,
    q: &'a Poset,
    max_source: usize,
) -> Result<Vec<PosetMap<'a>>> {
    check_guard(p, max_source)?;
    let candidates = vec![(0..q.len()).collect::<Vec<_>>(); p.len()];
    let mut out = Vec::new();
    search_maps(p, q, &candidates, &mut Vec::new(), &mut |a| {
        out.push(PosetMap::new(p, q, a.to_vec()));
        true
    });
    Ok(out)
}

/// All open maps between forests `f -> g` in lexicographic assignment order.
pub fn open_maps<'a>(f: &'a Poset, g: &'a Poset) -> Result<Vec<PosetMap<'a>>> {
    open_maps_within(f, g, DEFAULT_MAP_GUARD)
}

pub fn open_maps_within<'a>(
    f: &'a Poset,
    g: &'a Poset,
    max_source: usize,
) -> Result<Vec<PosetMap<'a>>> {
    Ok(monotone_maps_within(f, g, max_source)?
        .into_iter()
        .filter(PosetMap::is_open)
        .collect())
}

/// Depth-first search over monotone assignments where vertex `i` may only go
/// to `candidates[i]`. `visit` returns false to stop the search.
fn search_maps(
    p: &Poset,
    q: &Poset,
    candidates: &[Vec<usize>],
    partial: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let i = partial.len();
    if i == p.len() {
        return visit(partial);
    }
    for &w in &candidates[i] {
        let ok = partial
            .iter()
            .enumerate()
            .all(|(u, &fu)| (!p.leq(u, i) || q.leq(fu, w)) && (!p.leq(i, u) || q.leq(w, fu)));
        if ok {
            partial.push(w);
            let go_on = search_maps(p, q, candidates, partial, visit);
            partial.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

fn category_maps<'a>(
    category: Category,
    t: &'a Poset,
    p: &'a Poset,
    max_source: usize,
) -> Result<Vec<PosetMap<'a>>> {
    match category {
        Category::Poset => monotone_maps_within(t, p, max_source),
        Category::Forest => open_maps_within(t, p, max_source),
    }
}

/// Checks the universal property of the product of `p` and `q` against every
/// witness `T`: each pair of category maps `T -> p`, `T -> q` must factor
/// through exactly one category map `T -> p x q`.
pub fn check_product_universal(
    category: Category,
    p: &Poset,
    q: &Poset,
    witnesses: &[Poset],
) -> Result<bool> {
    check_product_universal_within(category, p, q, witnesses, DEFAULT_MAP_GUARD)
}

pub fn check_product_universal_within(
    category: Category,
    p: &Poset,
    q: &Poset,
    witnesses: &[Poset],
    max_source: usize,
) -> Result<bool> {
    let product = match category {
        Category::Poset => poset_product_pair(p, q),
        Category::Forest => {
            witnesses.iter().try_for_each(require_forest)?;
            forest_product_pair(p, q)?.product
        }
    };
    let (pi1, pi2) = product.projections(p, q);
    if category == Category::Forest && !(pi1.is_open() && pi2.is_open()) {
        return Ok(false);
    }
    let fibers = product.fibers();
    for t in witnesses {
        check_guard(t, max_source)?;
        let to_p = category_maps(category, t, p, max_source)?;
        let to_q = category_maps(category, t, q, max_source)?;
        for f in &to_p {
            for g in &to_q {
                let candidates: Vec<Vec<usize>> = (0..t.len())
                    .map(|i| {
                        fibers
                            .get(&(f.apply(i), g.apply(i)))
                            .cloned()
                            .unwrap_or_default()
                    })
                    .collect();
                let mut factorizations = 0;
                search_maps(t, product.poset(), &candidates, &mut Vec::new(), &mut |h| {
                    let h = PosetMap::new(t, product.poset(), h.to_vec());
                    if category == Category::Poset || h.is_open() {
                        factorizations += 1;
                    }
                    factorizations < 2
                });
                if factorizations != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
