//! Finite partially ordered sets: construction, Hasse diagrams, monotone and
//! regular partitions, partition lattices, and products and coproducts of
//! posets and forests.

pub mod casestudy;
pub mod category;
pub mod dot;
pub mod error;
pub mod iso;
pub mod lattice;
pub mod partition;
pub mod poset;

pub use category::{
    check_product_universal, forest_product, forest_product_all, forest_product_pair, forest_sum,
    is_monotone_map, is_open_map, monotone_maps, open_maps, poset_product, poset_product_pair,
    poset_sum, Category, ForestProduct, PosetMap, Product, SyncChain,
};
pub use dot::{hasse_dot, HasseDot};
pub use error::{Error, Result};
pub use iso::{are_isomorphic, find_isomorphism};
pub use lattice::{Lattice, PartitionKind, PartitionLattice};
pub use partition::{
    as_preorder, linear_extensions, monotone_partitions, partition_to_poset, regular_partitions,
    regular_to_poset, EnumerationReport, Limits, MonotonePartition, QuotientPoset, SetPartition,
};
pub use poset::{CoverPair, Label, Poset};
