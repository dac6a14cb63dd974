use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "starconfig", version, about = "Symbolic powers of monomial star configurations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derived constants of the fold ideal; with --n-max, the α profile.
    Params {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimal generators of the fold ideal I_a(z_1^b ... z_s^b).
    Gens {
        #[command(flatten)]
        fold: FoldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The symbolic power I^(m) and its polarization dual.
    Symbolic {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Also compare with the definition-based symbolic power.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Betti numbers of the polarization dual of I^(m).
    Betti {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_delimiter = ',', default_value = "formula")]
        method: Vec<Method>,
        /// Field characteristic for the homology method.
        #[arg(long = "char", default_value_t = 2)]
        field_char: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Linear quotients of the polarization dual of I^(m).
    Linquot {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The SSS ideal Pol(I^(m))^∨.
    Dual {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sequential Cohen–Macaulay certificate for I^(m).
    Certify {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// I^(l(h+m-1)-h+k) ⊆ m^P (I^(m))^l with P = ((l-1)(h-1)+k-1)μ̂_h.
    Containment {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Containment checks over a parameter grid (c0 < h, k = 1..h).
    Sweep {
        #[arg(long, default_value = "2..5")]
        s: Range,
        #[arg(long, default_value = "2..3")]
        b: Range,
        #[arg(long, default_value = "1..3")]
        l: Range,
        #[arg(long, default_value = "1..3")]
        m: Range,
        /// Fill the runtime_ms column.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Macaulay2 input for manual cross-checks.
    ExportCas {
        #[command(flatten)]
        fold: FoldArgs,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_enum, default_value_t = CasTarget::Dual)]
        what: CasTarget,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct FoldArgs {
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long)]
    pub a: u32,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the data output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Cone,
    Homology,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasTarget {
    Fold,
    Symbolic,
    Dual,
}

/// `4`, `3..5` (inclusive) or `1,2,4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range(pub Vec<u32>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad number {t:?}: {e}"));
        let values = if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            (lo..=hi).collect()
        } else {
            s.split(',').map(num).collect::<Result<Vec<_>, _>>()?
        };
        Ok(Range(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3..5".parse::<Range>().unwrap().0, vec![3, 4, 5]);
        assert_eq!("3..=4".parse::<Range>().unwrap().0, vec![3, 4]);
        assert_eq!("2,4".parse::<Range>().unwrap().0, vec![2, 4]);
        assert!("5..3".parse::<Range>().is_err());
        assert!("x".parse::<Range>().is_err());
    }
}
