use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("hyperplanes {first} and {second} are proportional (arrangement is not reduced)")]
    NotReduced { first: usize, second: usize },

    #[error("hyperplane {index} has an all-zero defining form")]
    ZeroHyperplane { index: usize },

    #[error("arrangement is empty")]
    EmptyArrangement,

    #[error("ambient dimension {found} not supported here (expected {expected})")]
    Dimension {
        found: usize,
        expected: &'static str,
    },

    #[error("polynomial is not divisible by (1+y)^{power}")]
    NotDivisible { power: u32 },

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,

    #[error("characteristic polynomial is not monic of degree {expected_degree}")]
    NotMonic { expected_degree: usize },

    #[error(
        "class has nonzero coefficient on [P^{dim}], outside the support of the singular locus"
    )]
    SupportViolation { dim: usize },

    #[error("spectral exponent {exponent} lies outside (0, {bound}]")]
    ExponentOutOfRange { exponent: String, bound: usize },

    #[error("intersection lattice exceeds {limit} flats")]
    TooManyFlats { limit: usize },

    #[error("virtual class mismatch between closed form and series expansion (n={n}, m={m})")]
    VirtualMismatch { n: usize, m: usize },
}
