use super::class::GradedProjClass;
use super::kclass::{raty, KClassRat};
use crate::algebra::{binomial, int, rat, PolyY, RatY};
use crate::error::{Error, Result};

/// Normalized virtual Hirzebruch class of a degree-`m` hypersurface in `P^n`, pushed
/// into `H_*(P^n)[y]`, computed in K-theory.
///
/// `DR = (1+ty)^{n+1} (1-t^m) / ((1+y)(1+t^m y))`. With `u = 1 - t^m` nilpotent,
/// `1/(1+t^m y) = sum_{k<=n} (uy)^k / (1+y)^{k+1}` is exact.
pub fn virtual_pushforward_series(n: usize, m: usize) -> Result<GradedProjClass> {
    if n == 0 || m == 0 {
        return Err(Error::Dimension {
            found: n,
            expected: "n >= 1 and m >= 1",
        });
    }
    let one = KClassRat::one(n);
    let u = &one - &KClassRat::t(n).pow(m as u32);
    let uy = u.scale(&raty(PolyY::y()));
    let mut inverse = KClassRat::zero(n);
    let mut power = one.clone();
    for k in 0..=n as u32 {
        inverse = &inverse + &power.scale(&RatY::new(PolyY::one(), k + 1));
        power = &power * &uy;
    }
    // 1 + ty = (1+y) - y s
    let lambda = KClassRat::from_s_coeffs(n, vec![raty(PolyY::one_plus_y()), raty(-PolyY::y())]);
    let dr = (&(&lambda.pow(n as u32 + 1) * &u) * &inverse).scale(&RatY::new(PolyY::one(), 1));

    let coeffs = dr
        .todd_pushforward()
        .into_iter()
        .enumerate()
        .map(|(d, c)| c.div_unit_power(d as u32).into_poly())
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedProjClass::from_coeffs(n, coeffs))
}

/// Closed forms of the same class for plane curves and surfaces in `P^3`.
pub fn virtual_pushforward_closed(n: usize, m: usize) -> Result<GradedProjClass> {
    let mi = m as i64;
    let y_minus_one = PolyY::from_ints(&[-1, 1]);
    match n {
        2 => Ok(GradedProjClass::from_coeffs(
            2,
            vec![y_minus_one.scale(&rat(mi * (mi - 3), 2)), PolyY::from(mi)],
        )),
        3 => {
            let pt = &PolyY::one_plus_y()
                .pow(2)
                .scale(&int(1 + binomial(mi - 1, 3)))
                - &PolyY::monomial(int(mi * mi * mi - 4 * mi * mi + 6 * mi), 1);
            Ok(GradedProjClass::from_coeffs(
                3,
                vec![
                    pt,
                    y_minus_one.scale(&rat(mi * (mi - 4), 2)),
                    PolyY::from(mi),
                ],
            ))
        }
        _ => Err(Error::Dimension {
            found: n,
            expected: "2 or 3",
        }),
    }
}
