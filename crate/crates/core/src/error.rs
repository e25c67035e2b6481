use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring has {size} elements, above the size guard of {limit}")]
    TooLarge { size: u64, limit: u64 },

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("a product needs at least one factor")]
    EmptyProduct,

    #[error("factor {index} of the product is the zero ring")]
    ZeroFactor { index: usize },

    #[error("ring size overflows 64 bits")]
    SizeOverflow,

    #[error("table ring violates {axiom} (witness elements {witness:?})")]
    TableAxiom {
        axiom: &'static str,
        witness: Vec<u64>,
    },

    #[error("literal {literal} is not an element of {ring}: {reason}")]
    BadElement {
        literal: String,
        ring: String,
        reason: String,
    },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("{ideal} is not prime{}", match witness {
        Some((a, b)) => format!(": {a}*{b} lies in it but neither factor does"),
        None => " (it is the whole ring)".to_string(),
    })]
    NotPrime {
        ideal: String,
        witness: Option<(String, String)>,
    },

    #[error("{0} is not a direct product ring")]
    NotAProduct(String),

    #[error("factor index {index} is out of range for {count} factors")]
    UnknownIndex { index: usize, count: usize },

    #[error("ideal oracle found more than {cap} ideals in {ring}")]
    TooManyIdeals { ring: String, cap: usize },

    #[error("not a ring homomorphism: {0}")]
    NotAHom(String),

    #[error("factor {index} ({ring}) is not a local ring")]
    NotLocal { index: usize, ring: String },

    #[error("factor {index} ({ring}) is not an integral domain")]
    NotDomain { index: usize, ring: String },

    #[error("filter is improper (it contains the empty set)")]
    ImproperFilter,

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("index set of size {size} is too large (at most {max})")]
    IndexSetTooLarge { size: usize, max: usize },

    #[error("not a multiplicative set: {0}")]
    NotMultiplicative(String),

    #[error("{0} is not a max-regular ideal")]
    NotMaxRegular(String),

    #[error("homomorphism is not injective")]
    NotInjective,

    #[error("{0} is not a minimal prime")]
    NotMinimal(String),

    #[error("no prime of the target lies over {0}")]
    LyingOverFailed(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

/// Exhaustive-scan bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring any O(|R|^2) scan will accept.
    pub max_size: u64,
    /// Largest ring handed to the all-ideals oracle.
    pub oracle_size: u64,
    /// Largest number of ideals the oracle may produce.
    pub max_ideals: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_size: 4096,
            oracle_size: 64,
            max_ideals: 4096,
        }
    }
}

impl Limits {
    pub fn with_max_size(max_size: u64) -> Self {
        Limits {
            max_size,
            ..Limits::default()
        }
    }

    pub fn check(&self, size: u64) -> Result<()> {
        if size > self.max_size {
            return Err(Error::TooLarge {
                size,
                limit: self.max_size,
            });
        }
        Ok(())
    }

    pub fn check_oracle(&self, size: u64) -> Result<()> {
        if size > self.oracle_size {
            return Err(Error::TooLarge {
                size,
                limit: self.oracle_size,
            });
        }
        Ok(())
    }
}
