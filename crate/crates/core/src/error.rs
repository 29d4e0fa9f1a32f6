use std::fmt;

use thiserror::Error;

/// A single failed certification check, naming the offending constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertFailure {
    /// Constituent `index` has self inner product != 1.
    NotIrreducible { index: usize, self_ip: u64 },
    /// Constituents `i` and `j` have a nonzero cross inner product.
    NotDistinct { i: usize, j: usize, ip: u64 },
    /// Claimed multiplicity disagrees with the Mackey inner product.
    WrongMultiplicity {
        index: usize,
        claimed: u64,
        actual: u64,
    },
    /// Sum of multiplicity * degree does not match the target degree.
    DegreeAudit { sum: u128, target: u128 },
    /// [target, target] != sum of squared multiplicities.
    Frobenius { self_ip: u64, sum_sq: u64 },
}

impl fmt::Display for CertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertFailure::NotIrreducible { index, self_ip } => {
                write!(f, "constituent {index} is not irreducible ([x,x]={self_ip})")
            }
            CertFailure::NotDistinct { i, j, ip } => {
                write!(f, "constituents {i} and {j} are not distinct ([i,j]={ip})")
            }
            CertFailure::WrongMultiplicity {
                index,
                claimed,
                actual,
            } => write!(
                f,
                "constituent {index} has multiplicity {actual}, not {claimed}"
            ),
            CertFailure::DegreeAudit { sum, target } => {
                write!(f, "degree audit failed: sum {sum} != target degree {target}")
            }
            CertFailure::Frobenius { self_ip, sum_sq } => {
                write!(f, "[target,target]={self_ip} != sum of m_i^2 = {sum_sq}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("inconsistent presentation at overlap {overlap}: {lhs} != {rhs}")]
    Inconsistent {
        overlap: String,
        lhs: String,
        rhs: String,
    },

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("size guard exceeded in {op}: size {actual} > bound {bound}")]
    SizeGuard {
        op: &'static str,
        bound: u128,
        actual: u128,
    },

    #[error("coset bound exceeded: index {index} > bound {bound}")]
    CosetBound { index: u128, bound: u128 },

    #[error("orbit bound exceeded: bound {bound}")]
    OrbitBound { bound: u128 },

    #[error("unsupported overgroup for extension fiber: {0}")]
    UnsupportedOvergroup(String),

    #[error("certification failed: {}", format_failures(.0))]
    Certification(Vec<CertFailure>),

    #[error("no decomposition strategy applies: {0}")]
    NoStrategyApplies(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("element does not belong to the subgroup")]
    NotAMember,

    #[error("mismatched ambient groups: {0}")]
    Mismatch(String),
}

fn format_failures(failures: &[CertFailure]) -> String {
    failures
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
