use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "symsig", version, about = "Exact free-rank and differential symmetric signature certificates")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON report to this path (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Field characteristic; overrides the ring file.
    #[arg(long = "char", global = true, value_name = "P")]
    pub characteristic: Option<u64>,
    /// Budget of S-pair reductions per Groebner computation.
    #[arg(long, global = true, env = "SYMSIG_LIMIT_PAIRS", value_name = "N")]
    pub limit_pairs: Option<u64>,
    /// Seed for randomized corpora; recorded, never used by a verdict.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
}

/// A ring file plus inline or file-based polynomials, or a full ideal file.
#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// Ideal file (ring fields plus `generators`).
    #[arg(long, value_name = "FILE", conflicts_with = "ring")]
    pub ideal: Option<PathBuf>,
    /// Ring file (`variables`, `characteristic`, optional `cyclotomic_order`).
    #[arg(long, value_name = "FILE")]
    pub ring: Option<PathBuf>,
    /// Generator polynomial; repeat for several.
    #[arg(long = "poly", value_name = "POLY")]
    pub polys: Vec<String>,
    /// File with one generator per nonempty line.
    #[arg(long, value_name = "FILE")]
    pub poly_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Signature of a hypersurface ring P/(f).
    Hypersurface {
        #[command(flatten)]
        input: IdealInput,
        /// Record that P/(f) is a domain.
        #[arg(long)]
        assume_domain: bool,
        /// Largest symmetric power checked directly.
        #[arg(long, default_value_t = symsig_core::differentials::DEFAULT_MAX_Q)]
        max_q: u32,
        /// Use untruncated syzygy modules.
        #[arg(long)]
        full_syzygy_basis: bool,
    },
    /// Free rank of Omega and signature for a complete intersection.
    CiFreerank {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long)]
        assume_domain: bool,
        /// Record that every Sym^q(Omega) is reflexive.
        #[arg(long)]
        assume_reflexive: bool,
        #[arg(long, default_value_t = symsig_core::differentials::DEFAULT_MAX_Q)]
        max_q: u32,
        #[arg(long)]
        full_syzygy_basis: bool,
    },
    /// Signature of an invariant ring under a finite small group.
    Quotient {
        /// Group file (`n`, optional `cyclotomic_order`, `generators`).
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        /// Truncation degree of the Molien series.
        #[arg(long, default_value_t = 200)]
        max_degree: usize,
    },
    /// Reduced Groebner basis.
    Groebner {
        #[command(flatten)]
        input: IdealInput,
        /// Monomial order (`grevlex` or `lex`); overrides the ring file.
        #[arg(long)]
        order: Option<String>,
    },
    /// Normal form of a polynomial modulo an ideal, with cofactors.
    Nf {
        #[command(flatten)]
        input: IdealInput,
        /// Polynomial to reduce.
        #[arg(long, value_name = "POLY")]
        target: String,
    },
    /// Krull dimension of P/I.
    Dim {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Hilbert series of P/I for homogeneous I.
    Hilbert {
        #[command(flatten)]
        input: IdealInput,
        /// Number of Hilbert function values listed.
        #[arg(long, default_value_t = 10)]
        max_degree: u64,
    },
    /// Replay the certificates of a JSON report.
    Verify {
        #[arg(value_name = "REPORT")]
        report: PathBuf,
    },
}
