use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use super::{bipartitions, BiPartition, CombinatError};

/// All-pairs `≐` distances over `𝙿(n)`.
#[derive(Debug)]
pub struct DistanceTable {
    index: HashMap<BiPartition, usize>,
    dist: Vec<Vec<Option<u32>>>,
}

impl DistanceTable {
    pub fn build(n: usize) -> Self {
        let labels = bipartitions(n);
        let index: HashMap<_, _> = labels.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let adj: Vec<Vec<usize>> = labels
            .iter()
            .map(|b| b.dot_neighbours().iter().map(|m| index[m]).collect())
            .collect();
        let dist = (0..labels.len())
            .map(|src| {
                let mut d = vec![None; labels.len()];
                d[src] = Some(0);
                let mut queue = VecDeque::from([src]);
                while let Some(v) = queue.pop_front() {
                    let dv = d[v].unwrap();
                    for &w in &adj[v] {
                        if d[w].is_none() {
                            d[w] = Some(dv + 1);
                            queue.push_back(w);
                        }
                    }
                }
                d
            })
            .collect();
        DistanceTable { index, dist }
    }

    pub fn get(&self, x: &BiPartition, y: &BiPartition) -> Result<u32, CombinatError> {
        let (i, j) = match (self.index.get(x), self.index.get(y)) {
            (Some(&i), Some(&j)) => (i, j),
            _ => return Err(CombinatError::SizeMismatch),
        };
        self.dist[i][j].ok_or(CombinatError::Unreachable)
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<DistanceTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DistanceTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn distance_table(n: usize) -> Arc<DistanceTable> {
    if let Some(t) = cache().read().unwrap().get(&n) {
        return t.clone();
    }
    let mut w = cache().write().unwrap();
    w.entry(n).or_insert_with(|| Arc::new(DistanceTable::build(n))).clone()
}

/// Length of a shortest `≐` chain from `x` to `y`.
pub fn distance(x: &BiPartition, y: &BiPartition) -> Result<u32, CombinatError> {
    if x.size() != y.size() {
        return Err(CombinatError::SizeMismatch);
    }
    distance_table(x.size()).get(x, y)
}
