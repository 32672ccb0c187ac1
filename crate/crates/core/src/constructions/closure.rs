use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::{canonical_key, CanonicalKey, Graph};
use crate::kb::Kb;
use crate::status::Status;

/// A join of two occurring graphs that produced `key`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinCertificate {
    pub key: CanonicalKey,
    pub left: CanonicalKey,
    pub right: CanonicalKey,
}

impl JoinCertificate {
    /// Recomputes the join and compares canonical keys.
    pub fn verify(&self) -> bool {
        Graph::join(self.left.graph(), self.right.graph()).is_ok_and(|g| canonical_key(&g) == self.key)
    }

    pub fn provenance(&self) -> String {
        format!("join of {} and {}", self.left, self.right)
    }
}

/// Distinct joins of Occurs records whose orders sum to `n`, one certificate per
/// key (the first factor pair in key order), sorted by key.
pub fn join_closure(kb: &Kb, n: usize) -> Vec<JoinCertificate> {
    let occurring: Vec<CanonicalKey> =
        kb.records().filter(|r| r.status == Status::Occurs && r.order < n).map(|r| r.key).collect();
    let pairs: Vec<(CanonicalKey, CanonicalKey)> = occurring
        .iter()
        .enumerate()
        .flat_map(|(i, a)| occurring[i..].iter().map(move |b| (*a, *b)))
        .filter(|(a, b)| a.order() + b.order() == n)
        .collect();
    let found: Vec<JoinCertificate> = pairs
        .par_iter()
        .map(|(a, b)| {
            let g = Graph::join(a.graph(), b.graph()).expect("orders sum to n");
            JoinCertificate { key: canonical_key(&g), left: *a, right: *b }
        })
        .collect();
    let mut best: BTreeMap<CanonicalKey, JoinCertificate> = BTreeMap::new();
    for cert in found {
        best.entry(cert.key).or_insert(cert);
    }
    best.into_values().collect()
}
