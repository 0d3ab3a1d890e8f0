//! Partitions, bipartitions, dominance, a/b statistics and the `≐` graph.

mod bipartition;
mod distance;
mod partition;

use thiserror::Error;

pub use bipartition::{bipartitions, BiPartition};
pub use distance::{distance, distance_table, DistanceTable};
pub use partition::{partitions, Dominance, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("sizes differ")]
    SizeMismatch,
    #[error("no chain connects the two bipartitions")]
    Unreachable,
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

pub fn transpose(p: &Partition) -> Partition {
    p.transpose()
}

pub fn dominates(p: &Partition, q: &Partition) -> Result<Dominance, CombinatError> {
    p.dominates(q)
}

pub fn a_function(p: &Partition) -> usize {
    p.a_value()
}

pub fn b_function(bp: &BiPartition) -> usize {
    bp.b_value()
}

pub fn dot_adjacent(x: &BiPartition, y: &BiPartition) -> Result<bool, CombinatError> {
    x.is_dot_adjacent(y)
}

pub fn enumerate_bipartitions(n: usize) -> Vec<BiPartition> {
    bipartitions(n)
}

macro_rules! serde_as_text {
    ($t:ty) => {
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
        impl<'de> serde::Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_as_text!(Partition);
serde_as_text!(BiPartition);
