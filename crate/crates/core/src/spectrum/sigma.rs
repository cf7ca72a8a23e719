use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{PolyY, Spectrum};
use crate::ktheory::{basis_label, coefficient_prefix, join_terms, GradedProjClass};

/// Coefficient of one top-dimensional stratum closure `[S]` of the singular locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopTerm {
    pub label: String,
    /// Index into [`crate::lattice::Lattice::flats`].
    pub flat: usize,
    pub coeff: PolyY,
}

/// A class in `H_*(Sigma)[y]`: one generator per top-dimensional stratum (dimension
/// `n - 2`) and a single generator `[P^d]` in each lower dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaClass {
    pub n: usize,
    pub top: Vec<TopTerm>,
    pub lower: BTreeMap<usize, PolyY>,
}

impl SigmaClass {
    pub fn new(n: usize) -> Self {
        SigmaClass {
            n,
            top: Vec::new(),
            lower: BTreeMap::new(),
        }
    }

    pub fn top_coeff(&self, label: &str) -> Option<&PolyY> {
        self.top.iter().find(|t| t.label == label).map(|t| &t.coeff)
    }

    pub fn lower_coeff(&self, d: usize) -> PolyY {
        self.lower.get(&d).cloned().unwrap_or_else(PolyY::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.top.iter().all(|t| t.coeff.is_zero()) && self.lower.values().all(PolyY::is_zero)
    }

    /// Every stratum closure is a linear subspace, so `[S]` maps to `[P^{n-2}]`.
    pub fn pushforward(&self) -> GradedProjClass {
        let mut out = GradedProjClass::zero(self.n);
        if self.n >= 2 {
            for t in &self.top {
                out.add_to(self.n - 2, &t.coeff);
            }
        }
        for (&d, p) in &self.lower {
            out.add_to(d, p);
        }
        out
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .top
            .iter()
            .filter(|t| !t.coeff.is_zero())
            .map(|t| format!("{}[{}]", coefficient_prefix(&t.coeff), t.label))
            .collect();
        for (&d, p) in self.lower.iter().rev() {
            if !p.is_zero() {
                terms.push(format!("{}{}", coefficient_prefix(p), basis_label(d)));
            }
        }
        f.write_str(&join_terms(&terms))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum StratumKind {
    Point,
    Edge,
    EdgeAtInfinity,
}

impl StratumKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StratumKind::Point => "point",
            StratumKind::Edge => "edge",
            StratumKind::EdgeAtInfinity => "edge-at-infinity",
        }
    }
}

/// Local spectrum attached to a stratum, with the multiplicity data it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumSpec {
    pub label: String,
    pub flat: usize,
    pub kind: StratumKind,
    pub spectrum: Spectrum,
    /// `m_S` or `m_P`.
    pub multiplicity: usize,
    /// Degree `m` of the arrangement.
    pub degree: usize,
}
