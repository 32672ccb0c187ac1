use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::ConstructionError;
use crate::graph::{Graph, MAX_VERTICES};

/// A prime bound to a name. Literal primes use their decimal string as name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeLabel {
    pub name: String,
    pub value: BigUint,
}

impl PrimeLabel {
    pub fn new(name: impl Into<String>, value: BigUint) -> PrimeLabel {
        PrimeLabel { name: name.into(), value }
    }

    pub fn literal(value: u64) -> PrimeLabel {
        PrimeLabel { name: value.to_string(), value: BigUint::from(value) }
    }
}

/// Product of labelled primes with positive exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactoredInteger {
    factors: BTreeMap<String, u64>,
}

impl FactoredInteger {
    pub fn one() -> FactoredInteger {
        FactoredInteger::default()
    }

    pub fn prime(label: &str) -> FactoredInteger {
        FactoredInteger::one().times(label, 1)
    }

    /// Multiplies by `label^exponent`; exponent zero is a no-op.
    pub fn times(mut self, label: &str, exponent: u64) -> FactoredInteger {
        if exponent > 0 {
            *self.factors.entry(label.to_string()).or_insert(0) += exponent;
        }
        self
    }

    pub fn product<'a>(labels: impl IntoIterator<Item = &'a str>) -> FactoredInteger {
        labels.into_iter().fold(FactoredInteger::one(), |acc, l| acc.times(l, 1))
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut out = self.clone();
        for (label, &e) in &other.factors {
            out = out.times(label, e);
        }
        out
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &FactoredInteger) -> Option<FactoredInteger> {
        let mut out = self.clone();
        for (label, &e) in &other.factors {
            let have = out.factors.get_mut(label)?;
            if *have < e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                out.factors.remove(label);
            }
        }
        Some(out)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, label: &str) -> u64 {
        self.factors.get(label).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.factors.keys().map(String::as_str)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u64)> {
        self.factors.iter().map(|(l, &e)| (l.as_str(), e))
    }

    /// Expands the product; only sensible for small exponents.
    pub fn evaluate(&self, values: &BTreeMap<String, BigUint>) -> Option<BigUint> {
        let mut acc = BigUint::one();
        for (label, &e) in &self.factors {
            acc *= values.get(label)?.pow(u32::try_from(e).ok()?);
        }
        Some(acc)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(l, &e)| if e == 1 { l.clone() } else { format!("{l}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A set of character degrees over a fixed registry of prime labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSet {
    primes: BTreeMap<String, BigUint>,
    degrees: BTreeSet<FactoredInteger>,
}

impl DegreeSet {
    /// Empty apart from the degree 1. Names and values must be distinct.
    pub fn new(primes: &[PrimeLabel]) -> Result<DegreeSet, ConstructionError> {
        let mut registry = BTreeMap::new();
        for label in primes {
            if label.value < BigUint::from(2u8) {
                return Err(ConstructionError::BadLabel { label: label.name.clone(), reason: "value below 2".into() });
            }
            if let Some((other, _)) = registry.iter().find(|(_, v)| **v == label.value) {
                return Err(ConstructionError::BadLabel {
                    label: label.name.clone(),
                    reason: format!("same value as {other}"),
                });
            }
            if registry.insert(label.name.clone(), label.value.clone()).is_some() {
                return Err(ConstructionError::BadLabel { label: label.name.clone(), reason: "duplicate name".into() });
            }
        }
        Ok(DegreeSet { primes: registry, degrees: BTreeSet::from([FactoredInteger::one()]) })
    }

    pub fn insert(&mut self, degree: FactoredInteger) -> Result<(), ConstructionError> {
        if let Some(l) = degree.labels().find(|l| !self.primes.contains_key(*l)) {
            return Err(ConstructionError::BadLabel { label: l.to_string(), reason: "not registered".into() });
        }
        self.degrees.insert(degree);
        Ok(())
    }

    pub fn degrees(&self) -> impl Iterator<Item = &FactoredInteger> {
        self.degrees.iter()
    }

    pub fn contains(&self, d: &FactoredInteger) -> bool {
        self.degrees.contains(d)
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn value(&self, label: &str) -> Option<&BigUint> {
        self.primes.get(label)
    }

    pub fn primes(&self) -> &BTreeMap<String, BigUint> {
        &self.primes
    }

    /// Replaces every exponent through `f`, keeping which labels co-occur.
    pub fn map_exponents(&self, mut f: impl FnMut(&str, u64) -> u64) -> DegreeSet {
        let degrees = self
            .degrees
            .iter()
            .map(|d| d.factors().fold(FactoredInteger::one(), |acc, (l, e)| acc.times(l, f(l, e).max(1))))
            .collect();
        DegreeSet { primes: self.primes.clone(), degrees }
    }

    /// Prime vertex graph: labels dividing some degree, ordered by value, with an
    /// edge when two labels divide a common degree.
    pub fn degree_graph(&self) -> Result<(Graph, Vec<String>), ConstructionError> {
        let used: BTreeSet<&str> = self.degrees.iter().flat_map(|d| d.labels()).collect();
        let mut labels: Vec<String> = used.into_iter().map(str::to_string).collect();
        labels.sort_by(|a, b| self.primes[a].cmp(&self.primes[b]));
        if labels.len() > MAX_VERTICES {
            return Err(ConstructionError::TooManyPrimes(labels.len()));
        }
        let index = |l: &str| labels.iter().position(|x| x == l).unwrap();
        let mut edges = Vec::new();
        for d in &self.degrees {
            let ids: Vec<usize> = d.labels().map(index).collect();
            for (i, &u) in ids.iter().enumerate() {
                for &v in &ids[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(labels.len(), &edges).expect("indices in range");
        Ok((g, labels))
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = FactoredInteger::prime("p").times("p", 2).times("q", 1);
        assert_eq!(a.exponent("p"), 3);
        assert_eq!(a.to_string(), "p^3*q");
        let b = FactoredInteger::prime("q");
        assert_eq!(a.div(&b).unwrap().to_string(), "p^3");
        assert_eq!(b.div(&a), None);
        assert_eq!(a.div(&b).unwrap().mul(&b), a);
        assert!(FactoredInteger::one().is_one());
    }

    #[test]
    fn registry_rules() {
        let p = |n: &str, v: u64| PrimeLabel::new(n, BigUint::from(v));
        assert!(DegreeSet::new(&[p("a", 3), p("b", 3)]).is_err());
        assert!(DegreeSet::new(&[p("a", 3), p("a", 5)]).is_err());
        assert!(DegreeSet::new(&[p("a", 1)]).is_err());
        let mut d = DegreeSet::new(&[p("a", 3)]).unwrap();
        assert!(d.insert(FactoredInteger::prime("z")).is_err());
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn trivial_degree_graph() {
        let d = DegreeSet::new(&[]).unwrap();
        let (g, labels) = d.degree_graph().unwrap();
        assert_eq!(g.order(), 0);
        assert!(labels.is_empty());
    }
}
