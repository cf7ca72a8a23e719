//! Exact row reduction over Q, used to canonicalize spans of linear forms.

use num_traits::Zero;

use crate::algebra::Rational;

/// Reduced row-echelon form with the zero rows removed. Pivots are 1 and every pivot
/// column is zero outside its pivot row, so equal spans give identical output.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v -= &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Whether `v` lies in the row span of a basis already in reduced row-echelon form.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut rest = v.to_vec();
    for row in basis {
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if rest[pc].is_zero() {
            continue;
        }
        let factor = rest[pc].clone();
        for (x, b) in rest.iter_mut().zip(row) {
            *x -= &factor * b;
        }
    }
    rest.iter().all(Zero::is_zero)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows.to_vec()).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(vec![row(&[1, 1, 0]), row(&[1, 0, 0])]);
        let b = rref(vec![row(&[0, 2, 0]), row(&[3, 1, 0])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![row(&[1, 0, 0]), row(&[0, 1, 0])]);
    }

    #[test]
    fn dependent_rows_dropped() {
        let r = rref(vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 0, 0])]);
        assert_eq!(r.len(), 1);
        assert_eq!(rank(&[row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
    }

    #[test]
    fn span_membership() {
        let basis = rref(vec![row(&[1, 0, 1]), row(&[0, 1, 1])]);
        assert!(in_span(&basis, &row(&[1, 1, 2])));
        assert!(!in_span(&basis, &row(&[0, 0, 1])));
        assert!(in_span(&[], &row(&[0, 0, 0])));
    }
}
