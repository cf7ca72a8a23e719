use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::linalg;
use crate::algebra::{int, parse_rational, render_rational, Rational};
use crate::error::{Error, Result};

/// A reduced central arrangement: `m` pairwise non-proportional linear forms in
/// `n + 1` variables, read as hyperplanes of `P^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<Vec<Rational>>,
}

impl Arrangement {
    /// Validates and canonically scales the forms (first nonzero entry becomes 1).
    pub fn new(dim: usize, forms: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension {
                found: 0,
                expected: ">= 1",
            });
        }
        if forms.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        let mut scaled = Vec::with_capacity(forms.len());
        for (index, form) in forms.into_iter().enumerate() {
            if form.len() != dim + 1 {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "hyperplane {} has {} coefficients, expected {}",
                        index + 1,
                        form.len(),
                        dim + 1
                    ),
                });
            }
            let Some(lead) = form.iter().find(|c| !c.is_zero()).cloned() else {
                return Err(Error::ZeroHyperplane { index: index + 1 });
            };
            let canonical: Vec<Rational> = form.iter().map(|c| c / &lead).collect();
            if let Some(first) = scaled.iter().position(|f: &Vec<Rational>| *f == canonical) {
                return Err(Error::NotReduced {
                    first: first + 1,
                    second: index + 1,
                });
            }
            scaled.push(canonical);
        }
        Ok(Arrangement { dim, forms: scaled })
    }

    pub fn from_int_rows(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            dim,
            rows.iter()
                .map(|r| r.iter().map(|&c| int(c)).collect())
                .collect(),
        )
    }

    /// Parses the line-oriented arrangement format:
    ///
    /// ```text
    /// # comment
    /// dim 3
    /// hyperplane 1 0 0 0
    /// hyperplane 1 1/2 0 0
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut dim: Option<usize> = None;
        let mut forms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match (keyword, dim) {
                ("dim", None) => {
                    let value = words
                        .next()
                        .ok_or_else(|| parse_err("missing dimension after `dim`".into()))?;
                    let n: usize = value
                        .parse()
                        .map_err(|_| parse_err(format!("invalid dimension `{value}`")))?;
                    if words.next().is_some() {
                        return Err(parse_err("trailing tokens after dimension".into()));
                    }
                    dim = Some(n);
                }
                ("dim", Some(_)) => return Err(parse_err("duplicate `dim` line".into())),
                ("hyperplane", None) => {
                    return Err(parse_err("`hyperplane` before `dim`".into()));
                }
                ("hyperplane", Some(n)) => {
                    let coeffs = words
                        .map(|w| {
                            parse_rational(w)
                                .ok_or_else(|| parse_err(format!("invalid rational `{w}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if coeffs.len() != n + 1 {
                        return Err(parse_err(format!(
                            "expected {} coefficients, found {}",
                            n + 1,
                            coeffs.len()
                        )));
                    }
                    forms.push((line_no, coeffs));
                }
                (other, None) => {
                    return Err(parse_err(format!("expected `dim <n>`, found `{other}`")));
                }
                (other, Some(_)) => {
                    return Err(parse_err(format!("unknown directive `{other}`")));
                }
            }
        }
        let Some(n) = dim else {
            return Err(Error::Parse {
                line: 0,
                message: "missing `dim` line".into(),
            });
        };
        if let Some((line, _)) = forms.iter().find(|(_, f)| f.iter().all(Zero::is_zero)) {
            return Err(Error::Parse {
                line: *line,
                message: "hyperplane form is identically zero".into(),
            });
        }
        Self::new(n, forms.into_iter().map(|(_, f)| f).collect())
    }

    /// Ambient projective dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes `m`.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    /// Rank of the forms; the arrangement is essential when this is `n + 1`.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.forms)
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim + 1
    }

    /// The cone over this arrangement in one dimension higher: each form gains a
    /// trailing zero coefficient, so every hyperplane passes through the new vertex.
    pub fn cone(&self) -> Arrangement {
        let forms = self
            .forms
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(Rational::zero());
                g
            })
            .collect();
        Arrangement {
            dim: self.dim + 1,
            forms,
        }
    }

    /// Serializes back to the text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for form in &self.forms {
            out.push_str("hyperplane");
            for c in form {
                let _ = write!(out, " {}", render_rational(c));
            }
            out.push('\n');
        }
        out
    }

    /// Whether the first nonzero coefficient of every form is 1.
    pub fn is_canonical(&self) -> bool {
        self.forms
            .iter()
            .all(|f| f.iter().find(|c| !c.is_zero()).is_some_and(One::is_one))
    }
}

impl FromStr for Arrangement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Arrangement::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    const XYZ_XY: &str = "# xyz(x+y) = 0\ndim 3\nhyperplane 1 0 0 0\nhyperplane 0 1 0 0\nhyperplane 0 0 1 0\nhyperplane 1 1 0 0\n";

    #[test]
    fn parses_xyz_xy() {
        let a = Arrangement::parse(XYZ_XY).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.len(), 4);
        assert!(!a.is_essential());
    }

    #[test]
    fn parses_coordinate_lines() {
        let a: Arrangement = "dim 2\nhyperplane 1 0 0\nhyperplane 0 1 0\nhyperplane 0 0 1\n"
            .parse()
            .unwrap();
        assert_eq!((a.dim(), a.len()), (2, 3));
        assert!(a.is_essential());
    }

    #[test]
    fn canonical_scaling() {
        let a = Arrangement::parse("dim 2\nhyperplane 0 -2 4/3\n").unwrap();
        assert_eq!(a.forms()[0], vec![int(0), int(1), rat(-2, 3)]);
        assert!(a.is_canonical());
    }

    #[test]
    fn rejects_duplicates_and_multiples() {
        let dup = "dim 2\nhyperplane 1 0 0\nhyperplane 1 0 0\n";
        assert_eq!(
            Arrangement::parse(dup),
            Err(Error::NotReduced {
                first: 1,
                second: 2
            })
        );
        let mult = "dim 2\nhyperplane 1 2 0\nhyperplane 0 1 0\nhyperplane -2 -4 0\n";
        assert_eq!(
            Arrangement::parse(mult),
            Err(Error::NotReduced {
                first: 1,
                second: 3
            })
        );
    }

    #[test]
    fn reports_parse_errors_with_lines() {
        let bad = "dim 2\nhyperplane 1 x 0\n";
        assert!(matches!(
            Arrangement::parse(bad),
            Err(Error::Parse { line: 2, .. })
        ));
        let short = "dim 2\n\nhyperplane 1 0\n";
        assert!(matches!(
            Arrangement::parse(short),
            Err(Error::Parse { line: 3, .. })
        ));
        let zero = "dim 2\nhyperplane 0 0 0\n";
        assert!(matches!(
            Arrangement::parse(zero),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Arrangement::parse("hyperplane 1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Arrangement::parse("dim 2\n"),
            Err(Error::EmptyArrangement)
        ));
        assert!(matches!(Arrangement::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(
            Arrangement::parse("dim 2\ndim 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn any_dimension_parses() {
        let a = Arrangement::parse("dim 4\nhyperplane 1 0 0 0 0\nhyperplane 0 1 0 0 0\n").unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn text_round_trip() {
        let a = Arrangement::parse("dim 2\nhyperplane 2 1/3 0\nhyperplane 0 1 -1\n").unwrap();
        assert_eq!(Arrangement::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn cone_adds_vertex() {
        let a =
            Arrangement::from_int_rows(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let c = a.cone();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.rank(), 3);
        assert!(!c.is_essential());
    }
}
