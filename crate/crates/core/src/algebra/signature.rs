use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported dimension `n = p + q`.
pub const MAX_DIM: usize = 12;

/// Metric signature `(p, q)` of `Cl(p,q)`.
///
/// Basis vectors `e_1 .. e_p` square to `+1` and `e_{p+1} .. e_n` square to
/// `-1`. The metric is diagonal in this basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(Error::InvalidArgument("signature must have n >= 1".into()));
        }
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge { n, max: MAX_DIM });
        }
        Ok(Self { p, q })
    }

    /// `Cl(n) = Cl(n,0)`.
    pub fn euclidean(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn is_euclidean(&self) -> bool {
        self.q == 0
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Mask of the pseudoscalar `I = e_1 e_2 ... e_n`.
    pub fn pseudoscalar_mask(&self) -> u32 {
        (1u32 << self.dim()) - 1
    }

    /// Bits of the basis vectors that square to `-1`.
    pub fn negative_mask(&self) -> u32 {
        self.pseudoscalar_mask() & !((1u32 << self.p) - 1)
    }

    /// `g_ii` for the zero-based vector index `i`.
    pub fn metric(&self, i: usize) -> i8 {
        debug_assert!(i < self.dim());
        if i < self.p {
            1
        } else {
            -1
        }
    }

    /// `g_ij` for zero-based indices.
    pub fn metric_entry(&self, i: usize, j: usize) -> i8 {
        if i == j {
            self.metric(i)
        } else {
            0
        }
    }

    pub fn require_euclidean(&self) -> Result<()> {
        if self.is_euclidean() {
            Ok(())
        } else {
            Err(Error::NonEuclideanSignature(*self))
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Parses `p,q` (as used by the `--sig` flag) or a bare `n`.
impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid signature `{s}`, expected `p,q`"));
        let mut parts = s.split(',').map(str::trim);
        let p = parts.next().ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?;
        let q = match parts.next() {
            Some(q) => q.parse::<usize>().map_err(|_| bad())?,
            None => 0,
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Signature::new(p, q)
    }
}
