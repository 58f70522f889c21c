use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::Overrides;

#[derive(Debug, Parser)]
#[command(name = "braidgt", version, about = "Braid groups, Grothendieck–Teichmüller relations and the KZ associator at finite truncation")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    /// Read parameters from a JSON file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print a table instead of JSON (verify only).
    #[arg(long, global = true)]
    pub table: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Strands (or cyclotomic level for `cyclo`).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Truncation degree.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Working precision in bits (default from BRAIDGT_PRECISION, else 256).
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Numeric tolerance (default 10^(−precision/4)).
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Prime ℓ.
    #[arg(long, global = true)]
    pub ell: Option<u64>,
    /// Exponent k of the residue ring ℤ/ℓ^k.
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Smaller grids and lower precision.
    #[arg(long, global = true)]
    pub quick: bool,
}

impl Common {
    pub fn overrides(&self) -> Overrides {
        Overrides {
            n: self.n,
            degree: self.degree,
            precision: self.precision,
            tolerance: self.tolerance,
            ell: self.ell,
            k: self.k,
            quick: self.quick.then_some(true),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite: braid, burau, rigidity, gt-relations, chi, kz, cyclo or all.
    Verify { suite: String },
    #[command(subcommand)]
    Rigidity(RigidityCmd),
    #[command(subcommand)]
    Gt(GtCmd),
    #[command(subcommand)]
    Kz(KzCmd),
    #[command(subcommand)]
    Cyclo(CycloCmd),
}

#[derive(Debug, Subcommand)]
pub enum RigidityCmd {
    /// Classify B₃ → SL₂ representations with R(σ₁) = a_λ.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Q, F<p> or Z<l>^<k>.
        #[arg(long, default_value = "Q")]
        ring: String,
    },
    /// Compare exhaustive enumeration over F_p with the classification.
    Brute {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GtCmd {
    /// Solve relations (I)–(III) degree by degree over ℚ.
    Solve {
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        lambda: String,
        /// Free parameters as degree=value, e.g. 3=1 5=-2.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Residuals of relations (I), (II), (III) for an element read from a file.
    Check {
        #[command(flatten)]
        element: ElementArgs,
    },
    /// The twisted integral Burau representation R∘g.
    Act {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value = "burau")]
        rep: String,
    },
    /// χ_d(g) for 2 ≤ d ≤ d-max from the Burau representation of B_{d-max+1}.
    Chi {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long)]
        d_max: usize,
    },
    /// χ_d(g₀) from its closed form in odd zeta values.
    ChiClosedForm {
        #[arg(long)]
        d: usize,
    },
    /// ρ of an element given by a word f in the free group on x1, x2, over ℤ/ℓ^k.
    Rho {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long)]
        f: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ElementArgs {
    /// JSON file with {"lambda", "log_f"}, the output of `gt solve`, or a bare log f.
    #[arg(long)]
    pub f_file: PathBuf,
    /// Overrides the λ in the file.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum KzCmd {
    /// Compute Φ_KZ up to the given degree.
    Solve {
        #[arg(long, default_value_t = 0.125)]
        eps: f64,
        #[arg(long, default_value_t = 1)]
        richardson: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CycloCmd {
    /// ε_{m,n} in ℤ[ζ_{ℓⁿ}].
    Epsilon {
        #[arg(long)]
        m: u32,
        /// Certify the sign at every real embedding.
        #[arg(long)]
        verify_positive: bool,
    },
}
