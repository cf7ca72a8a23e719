use super::flats::{Flat, Lattice};

/// Singular strata of a projective arrangement read off its lattice: projective lines
/// (`edges`) and points of codimension at least two, with point-on-edge incidence.
///
/// All indices refer to [`Lattice::flats`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataTables {
    pub edges: Vec<usize>,
    pub points: Vec<usize>,
    /// `incidence[k]` lists the edges containing `points[k]`.
    pub incidence: Vec<Vec<usize>>,
}

impl StrataTables {
    pub fn new(lat: &Lattice) -> Self {
        let flats = lat.flats();
        let singular = |f: &Flat, dim: isize| f.dim == dim && f.rank >= 2;
        let edges: Vec<usize> = (0..flats.len())
            .filter(|&i| singular(&flats[i], 1))
            .collect();
        let points: Vec<usize> = (0..flats.len())
            .filter(|&i| singular(&flats[i], 0))
            .collect();
        let incidence = points
            .iter()
            .map(|&p| {
                edges
                    .iter()
                    .copied()
                    .filter(|&e| flats[e].strictly_contains(&flats[p]))
                    .collect()
            })
            .collect();
        StrataTables {
            edges,
            points,
            incidence,
        }
    }

    /// Points lying on the given edge (flat indices).
    pub fn points_on(&self, edge: usize) -> Vec<usize> {
        self.points
            .iter()
            .zip(&self.incidence)
            .filter(|(_, edges)| edges.contains(&edge))
            .map(|(&p, _)| p)
            .collect()
    }

    /// Edges through the given point (flat indices).
    pub fn edges_through(&self, point: usize) -> &[usize] {
        let k = self
            .points
            .iter()
            .position(|&p| p == point)
            .expect("not a point stratum");
        &self.incidence[k]
    }
}

/// `m_{P,S} = m_P - m_S` for a point on an edge.
pub fn relative_multiplicity(point: &Flat, edge: &Flat) -> i64 {
    point.multiplicity() as i64 - edge.multiplicity() as i64
}

/// `m_{inf,S} = -(m - m_S)` for the point where an edge meets a generic hyperplane.
pub fn infinity_multiplicity(lat: &Lattice, edge: &Flat) -> i64 {
    -(lat.num_hyperplanes() as i64 - edge.multiplicity() as i64)
}
