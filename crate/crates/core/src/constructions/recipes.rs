//! Construction recipe files: one recipe per line,
//! `<kind> name=<id> <param>=<int>... factors=<label>:<value>,...`.

use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use super::{dugan_cd_general, dugan_cd_q3, galois_cd, ConstructionError, DegreeSet, PrimeLabel};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("recipe line {line}: {message}")]
pub struct RecipeParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecipeKind {
    Galois { m: u32 },
    Dugan3 { p: u64, r: u64 },
    DuganQ { p: u64, q: u64, r: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub name: String,
    pub kind: RecipeKind,
    pub factors: Vec<PrimeLabel>,
}

/// Degree set of a recipe together with its prime vertex graph.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub degrees: DegreeSet,
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl Recipe {
    pub fn degree_set(&self, check_primality: bool) -> Result<DegreeSet, ConstructionError> {
        match self.kind {
            RecipeKind::Galois { m } => galois_cd(m, &self.factors, check_primality),
            RecipeKind::Dugan3 { p, r } => dugan_cd_q3(p, r, &self.factors, check_primality),
            RecipeKind::DuganQ { p, q, r } => dugan_cd_general(p, q, r, &self.factors, check_primality),
        }
    }

    pub fn render(&self, check_primality: bool) -> Result<Rendered, ConstructionError> {
        let degrees = self.degree_set(check_primality)?;
        let (graph, labels) = degrees.degree_graph()?;
        Ok(Rendered { degrees, graph, labels })
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            RecipeKind::Galois { .. } => "galois",
            RecipeKind::Dugan3 { .. } => "dugan3",
            RecipeKind::DuganQ { .. } => "duganQ",
        }
    }
}

fn int<T: FromStr>(params: &[(String, String)], key: &str) -> Result<T, String> {
    let raw = params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
        .ok_or_else(|| format!("missing parameter {key}"))?;
    raw.parse().map_err(|_| format!("bad integer for {key}: {raw}"))
}

pub fn parse_recipes(text: &str) -> Result<Vec<Recipe>, RecipeParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| RecipeParseError { line: i + 1, message };
        let mut words = line.split_whitespace();
        let kind_word = words.next().unwrap();
        let mut params = Vec::new();
        for w in words {
            let (k, v) = w.split_once('=').ok_or_else(|| err(format!("expected key=value, got {w}")))?;
            params.push((k.to_string(), v.to_string()));
        }
        let kind = match kind_word {
            "galois" => RecipeKind::Galois { m: int(&params, "m").map_err(err)? },
            "dugan3" => RecipeKind::Dugan3 { p: int(&params, "p").map_err(err)?, r: int(&params, "r").map_err(err)? },
            "duganQ" => RecipeKind::DuganQ {
                p: int(&params, "p").map_err(err)?,
                q: int(&params, "q").map_err(err)?,
                r: int(&params, "r").map_err(err)?,
            },
            other => return Err(err(format!("unknown recipe kind {other}"))),
        };
        let name = params
            .iter()
            .find(|(k, _)| k == "name")
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| format!("recipe-{}", i + 1));
        let list = params
            .iter()
            .find(|(k, _)| k == "factors")
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| err("missing factors".into()))?;
        let mut factors = Vec::new();
        for item in list.split(',') {
            let (label, value) = item.split_once(':').ok_or_else(|| err(format!("expected label:value, got {item}")))?;
            let value: BigUint = value.parse().map_err(|_| err(format!("bad factor value for {label}")))?;
            factors.push(PrimeLabel::new(label, value));
        }
        out.push(Recipe { name, kind, factors });
    }
    Ok(out)
}

/// Recipes shipped with the crate.
pub fn shipped_recipes() -> Vec<Recipe> {
    parse_recipes(SHIPPED).expect("bundled recipes parse")
}

pub const SHIPPED: &str = include_str!("../../data/recipes.txt");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors() {
        assert_eq!(parse_recipes("# nothing\n\n").unwrap(), vec![]);
        assert_eq!(parse_recipes("galois m=11").unwrap_err().line, 1);
        assert!(parse_recipes("\nmystery m=1 factors=a:2").unwrap_err().message.contains("mystery"));
        assert!(parse_recipes("galois m=x factors=a:2").is_err());
        assert!(parse_recipes("galois m=11 factors=a").is_err());
    }

    #[test]
    fn parse_one() {
        let r = parse_recipes("galois name=m11 m=11 factors=a:23,b:89").unwrap();
        assert_eq!(r[0].name, "m11");
        assert_eq!(r[0].kind, RecipeKind::Galois { m: 11 });
        assert_eq!(r[0].factors.len(), 2);
        assert_eq!(r[0].render(true).unwrap().graph.order(), 3);
    }
}
