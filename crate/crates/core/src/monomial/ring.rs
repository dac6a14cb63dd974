use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    /// `K[z_1, ..., z_s]`
    Plain,
    /// `K[z_{i,j} : 1 <= i <= s, 1 <= j <= B]`
    Grid,
}

/// The variable set of a polynomial ring.
///
/// Variables are flattened row-major: `z_{i,j}` sits at `(i-1)*B + (j-1)`.
/// A plain ring is stored with a single level, so `z_i` sits at `i-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingDescriptor {
    kind: RingKind,
    s: usize,
    levels: usize,
}

impl RingDescriptor {
    pub fn plain(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidRing("s must be positive".into()));
        }
        Ok(Self {
            kind: RingKind::Plain,
            s,
            levels: 1,
        })
    }

    pub fn grid(s: usize, levels: usize) -> Result<Self> {
        if s == 0 || levels == 0 {
            return Err(Error::InvalidRing(format!(
                "grid ring needs s >= 1 and B >= 1, got s={s}, B={levels}"
            )));
        }
        Ok(Self {
            kind: RingKind::Grid,
            s,
            levels,
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_grid(&self) -> bool {
        self.kind == RingKind::Grid
    }

    /// Number of rows.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of levels `B`; always 1 for a plain ring.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn num_vars(&self) -> usize {
        self.s * self.levels
    }

    /// Flat index of `z_{row,level}` (1-based arguments). Plain rings accept
    /// only `level == 1`.
    pub fn index(&self, row: usize, level: usize) -> Result<usize> {
        if row == 0 || row > self.s || level == 0 || level > self.levels {
            return Err(Error::VariableOutOfRange {
                ring: *self,
                row,
                level,
            });
        }
        Ok((row - 1) * self.levels + (level - 1))
    }

    pub fn var(&self, index: usize) -> Var {
        debug_assert!(index < self.num_vars());
        Var {
            row: index / self.levels + 1,
            level: index % self.levels + 1,
        }
    }

    /// Same grid with more levels. Plain rings are returned unchanged.
    pub fn with_levels(&self, levels: usize) -> Result<Self> {
        match self.kind {
            RingKind::Plain => Ok(*self),
            RingKind::Grid => Self::grid(self.s, levels),
        }
    }

    pub(crate) fn var_display(&self, v: Var) -> VarDisplay {
        VarDisplay {
            kind: self.kind,
            var: v,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Plain => write!(f, "K[z_1..z_{}]", self.s),
            RingKind::Grid => write!(f, "K[z_(1,1)..z_({},{})]", self.s, self.levels),
        }
    }
}

/// A variable `z_{row,level}`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub row: usize,
    pub level: usize,
}

impl Var {
    pub fn new(row: usize, level: usize) -> Self {
        Self { row, level }
    }
}

pub(crate) struct VarDisplay {
    kind: RingKind,
    var: Var,
}

impl fmt::Display for VarDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Plain => write!(f, "z_{}", self.var.row),
            RingKind::Grid => write!(f, "z_{{{},{}}}", self.var.row, self.var.level),
        }
    }
}
