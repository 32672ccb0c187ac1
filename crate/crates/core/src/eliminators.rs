//! Structural eliminators for connected candidates.

use thiserror::Error;

use crate::conditions::palfy_condition;
use crate::graph::{canonical_key, members, Graph};
use crate::kb::Kb;
use crate::status::{Reason, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EliminationVerdict {
    Eliminated { reason: Reason, provenance: String },
    NoVerdict,
}

impl EliminationVerdict {
    pub fn is_eliminated(&self) -> bool {
        matches!(self, EliminationVerdict::Eliminated { .. })
    }

    pub fn reason(&self) -> Option<Reason> {
        match self {
            EliminationVerdict::Eliminated { reason, .. } => Some(*reason),
            EliminationVerdict::NoVerdict => None,
        }
    }

    fn eliminated(reason: Reason, provenance: impl Into<String>) -> EliminationVerdict {
        EliminationVerdict::Eliminated { reason, provenance: provenance.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("gamma family needs k >= t >= 1, got k = {k}, t = {t}")]
    BadParameters { k: usize, t: usize },
}

pub fn cut_vertex_eliminator(g: &Graph) -> EliminationVerdict {
    let cuts = g.cut_vertices();
    if cuts.count_ones() >= 2 {
        let list: Vec<String> = members(cuts).map(|v| v.to_string()).collect();
        EliminationVerdict::eliminated(Reason::Cut2, format!("cut vertices {}", list.join(",")))
    } else {
        EliminationVerdict::NoVerdict
    }
}

/// A non-complete regular degree graph must be `(n-2)`-regular.
pub fn regularity_eliminator(g: &Graph) -> EliminationVerdict {
    match g.regular_degree() {
        Some(k) if !g.is_complete() && k + 2 != g.order() => {
            EliminationVerdict::eliminated(Reason::Reg, format!("{k}-regular on {} vertices", g.order()))
        }
        _ => EliminationVerdict::NoVerdict,
    }
}

/// Adjacent degree-two vertices with no common neighbour.
pub fn degree2_pair(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| {
        g.degree(u) == 2 && g.degree(v) == 2 && g.neighbors(u) & g.neighbors(v) == 0
    })
}

pub fn degree2_pair_eliminator(g: &Graph) -> EliminationVerdict {
    if g.order() < 5 || !palfy_condition(g) {
        return EliminationVerdict::NoVerdict;
    }
    match degree2_pair(g) {
        Some((u, v)) => EliminationVerdict::eliminated(Reason::Deg2, format!("degree-two pair {u}-{v}")),
        None => EliminationVerdict::NoVerdict,
    }
}

/// `K_k` on `0..k`, `K_t` on `k..k+t`, and vertex `k + i` joined to `i`.
pub fn gamma_family_generate(k: usize, t: usize) -> Result<Graph, GammaError> {
    if t == 0 || t > k || k + t > crate::graph::MAX_VERTICES {
        return Err(GammaError::BadParameters { k, t });
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    for u in 0..t {
        for v in u + 1..t {
            edges.push((k + u, k + v));
        }
        edges.push((k + u, u));
    }
    Ok(Graph::from_edges(k + t, &edges).expect("valid by construction"))
}

pub fn gamma_family_status(k: usize, t: usize) -> Status {
    if t == 1 || (k, t) == (2, 2) {
        Status::Occurs
    } else {
        Status::NotOccurs
    }
}

pub fn gamma_family_recognize(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let key = canonical_key(g);
    (1..=n / 2)
        .map(|t| (n - t, t))
        .find(|&(k, t)| gamma_family_generate(k, t).is_ok_and(|h| canonical_key(&h) == key))
}

pub fn gamma_eliminator(g: &Graph) -> EliminationVerdict {
    match gamma_family_recognize(g) {
        Some((k, t)) if gamma_family_status(k, t) == Status::NotOccurs => {
            EliminationVerdict::eliminated(Reason::Gamma, format!("isomorphic to Gamma({k},{t})"))
        }
        _ => EliminationVerdict::NoVerdict,
    }
}

/// Matches `g` against NotOccurs entries of a catalog.
pub fn catalog_eliminator(g: &Graph, catalog: &Kb) -> EliminationVerdict {
    match catalog.lookup(g) {
        Some(rec) if rec.status == Status::NotOccurs => {
            EliminationVerdict::eliminated(Reason::Catalog, format!("{} [{}]", rec.provenance, rec.reason))
        }
        _ => EliminationVerdict::NoVerdict,
    }
}

/// Every eliminator in run order, all evaluated.
pub fn all_eliminators(g: &Graph, catalog: &Kb) -> Vec<EliminationVerdict> {
    vec![
        gamma_eliminator(g),
        catalog_eliminator(g, catalog),
        cut_vertex_eliminator(g),
        regularity_eliminator(g),
        degree2_pair_eliminator(g),
    ]
}
