use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arrangement::Arrangement;
use super::linalg::{in_span, rref};
use crate::algebra::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_FLATS: usize = 100_000;

/// One element of the intersection lattice of the cone over an arrangement.
///
/// A flat is stored through the span of the forms vanishing on it. `dim` is the
/// projective dimension `n - rank`, so the ambient space has `dim = n`, hyperplanes
/// have `dim = n - 1`, and the cone vertex (when it is a flat) has `dim = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub label: String,
    pub rank: usize,
    pub dim: isize,
    pub span_basis: Vec<Vec<Rational>>,
    /// Indices (0-based, input order) of hyperplanes containing the flat.
    pub hyperplanes: Vec<usize>,
    pub mobius: BigInt,
}

impl Flat {
    pub fn multiplicity(&self) -> usize {
        self.hyperplanes.len()
    }

    /// Affine dimension of the flat in the cone `A^{n+1}`.
    pub fn affine_dim(&self) -> usize {
        (self.dim + 1) as usize
    }

    /// `self ⊋ other` as subspaces, i.e. `other` lies strictly inside `self`.
    pub fn strictly_contains(&self, other: &Flat) -> bool {
        self.hyperplanes.len() < other.hyperplanes.len()
            && is_sorted_subset(&self.hyperplanes, &other.hyperplanes)
    }
}

fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Intersection lattice `L(A^)` of the affine cone, with Möbius values and the
/// characteristic polynomial.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    num_hyperplanes: usize,
    essential: bool,
    flats: Vec<Flat>,
    charpoly: Vec<BigInt>,
}

impl Lattice {
    pub fn build(arr: &Arrangement) -> Result<Self> {
        Self::build_with_limit(arr, DEFAULT_MAX_FLATS)
    }

    /// Breadth-first closure of the hyperplanes under intersection. Fails once more
    /// than `max_flats` flats have been found.
    pub fn build_with_limit(arr: &Arrangement, max_flats: usize) -> Result<Self> {
        let n = arr.dim();
        let forms = arr.forms();
        let mut found: BTreeMap<Vec<Vec<Rational>>, Vec<usize>> = BTreeMap::new();
        found.insert(Vec::new(), Vec::new());
        let mut queue: VecDeque<Vec<Vec<Rational>>> = VecDeque::new();
        queue.push_back(Vec::new());

        while let Some(basis) = queue.pop_front() {
            let members = found[&basis].clone();
            for (i, form) in forms.iter().enumerate() {
                if members.binary_search(&i).is_ok() {
                    continue;
                }
                let mut rows = basis.clone();
                rows.push(form.clone());
                let next = rref(rows);
                if found.contains_key(&next) {
                    continue;
                }
                let hyperplanes: Vec<usize> = (0..forms.len())
                    .filter(|&j| in_span(&next, &forms[j]))
                    .collect();
                found.insert(next.clone(), hyperplanes);
                if found.len() > max_flats {
                    return Err(Error::TooManyFlats { limit: max_flats });
                }
                queue.push_back(next);
            }
        }

        let mut flats: Vec<Flat> = found
            .into_iter()
            .map(|(span_basis, hyperplanes)| {
                let rank = span_basis.len();
                Flat {
                    label: String::new(),
                    rank,
                    dim: n as isize - rank as isize,
                    span_basis,
                    hyperplanes,
                    mobius: BigInt::zero(),
                }
            })
            .collect();
        // hyperplanes keep input order; other flats sort by multiplicity, then span
        let key = |f: &Flat| {
            (
                f.rank,
                f.hyperplanes.len(),
                if f.rank == 1 { f.hyperplanes[0] } else { 0 },
            )
        };
        flats.sort_by(|a, b| {
            key(a)
                .cmp(&key(b))
                .then_with(|| a.span_basis.cmp(&b.span_basis))
        });

        for z in 0..flats.len() {
            let value = if flats[z].rank == 0 {
                BigInt::one()
            } else {
                let (above, rest) = flats.split_at(z);
                let target = &rest[0];
                -above
                    .iter()
                    .filter(|w| w.strictly_contains(target))
                    .map(|w| &w.mobius)
                    .sum::<BigInt>()
            };
            flats[z].mobius = value;
        }

        assign_labels(&mut flats);

        let mut charpoly = vec![BigInt::zero(); n + 2];
        for f in &flats {
            charpoly[f.affine_dim()] += &f.mobius;
        }
        let essential = flats.last().is_some_and(|f| f.rank == n + 1);
        Ok(Lattice {
            dim: n,
            num_hyperplanes: forms.len(),
            essential,
            flats,
            charpoly,
        })
    }

    /// Ambient projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes `m`.
    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn is_essential(&self) -> bool {
        self.essential
    }

    /// Flats sorted by rank, then multiplicity, then canonical span basis
    /// (hyperplanes in input order).
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, index: usize) -> &Flat {
        &self.flats[index]
    }

    pub fn find(&self, label: &str) -> Option<&Flat> {
        self.flats.iter().find(|f| f.label == label)
    }

    /// Coefficients of `chi(x)`, ascending: `charpoly()[k]` multiplies `x^k`.
    pub fn charpoly(&self) -> &[BigInt] {
        &self.charpoly
    }

    pub fn charpoly_at(&self, x: &BigInt) -> BigInt {
        self.charpoly
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `mu(1) := chi(0)`, zero exactly for non-essential arrangements.
    pub fn mu_one(&self) -> BigInt {
        self.charpoly[0].clone()
    }

    /// The smallest flat: the intersection of all hyperplanes.
    pub fn center(&self) -> &Flat {
        self.flats
            .last()
            .expect("lattice always contains the ambient space")
    }

    /// Number of flats of each rank, indexed by rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dim + 2];
        for f in &self.flats {
            counts[f.rank] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    /// Renders `chi` with descending powers, e.g. `x^4 - 4x^3 + 5x^2 - 2x`.
    pub fn charpoly_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.charpoly.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let var = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            if k == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&var);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `V` ambient, `H<i>` hyperplanes in input order, `S<k>` projective lines,
/// `P<k>` projective points, `O` the cone vertex, `F<k>` anything else.
fn assign_labels(flats: &mut [Flat]) {
    let (mut lines, mut points, mut others) = (0, 0, 0);
    for f in flats.iter_mut() {
        f.label = match (f.rank, f.dim) {
            (0, _) => "V".to_string(),
            (1, _) => format!("H{}", f.hyperplanes[0] + 1),
            (_, 1) => {
                lines += 1;
                format!("S{lines}")
            }
            (_, 0) => {
                points += 1;
                format!("P{points}")
            }
            (_, -1) => "O".to_string(),
            _ => {
                others += 1;
                format!("F{others}")
            }
        };
    }
}
