//! Argument surface and dispatch.

use crate::commands::{self, CmdOutput};
use crate::error::CliError;
use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "assocform",
    about = "Exact computation of associated forms of nondegenerate homogeneous polynomials",
    long_about = "Computes associated forms, socle coefficients, Hessians, binary \
discriminants, contravariant profiles, degree bounds for the minimal discriminant \
exponent, and pole certificates along pencils. All arithmetic is exact; results are \
machine-readable JSON on stdout with a human summary on stderr."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Associated form and socle coefficients of a nondegenerate form
    Assoc {
        /// Number of variables
        #[arg(short, long)]
        n: usize,
        /// Expected homogeneous degree (validated against the form)
        #[arg(short, long)]
        d: Option<u32>,
        /// The form, e.g. "z1^3 + z2^3"
        form: String,
    },
    /// Socle coefficients of every top-degree monomial
    Mu {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        form: String,
    },
    /// Hessian determinant of a form
    Hessian {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        form: String,
    },
    /// Decide whether a form has an isolated singularity at the origin
    Nondegenerate {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        form: String,
    },
    /// Verify the codimension-one contract of the top-degree ideal slice
    Socle {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        form: String,
    },
    /// Discriminant of a binary form (resultant normalization)
    Discriminant {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        form: String,
    },
    /// Contravariant profile, and its value on a binary form when given
    Contravariant {
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        d: u32,
        /// Discriminant exponent
        #[arg(short, long)]
        p: u32,
        form: Option<String>,
    },
    /// Degree bounds for the minimal discriminant exponent
    Bounds {
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        d: u32,
    },
    /// Bound table over a degree range
    BoundsTable {
        #[arg(short, long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        dmin: u32,
        #[arg(long)]
        dmax: u32,
    },
    /// Reconstruct socle coefficients along the pencil f0 + t g and read
    /// pole orders off the degeneracy locus
    Probe {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: Option<u32>,
        /// Base form (must be nondegenerate)
        #[arg(long)]
        f0: String,
        /// Direction form of the same degree, or 0
        #[arg(long)]
        g: String,
        /// Socle exponents to reconstruct, like --exp 1,1 (default: all)
        #[arg(long = "exp")]
        exponents: Vec<String>,
    },
    /// Check the equivariance identity on seeded random forms
    EquivarianceCheck {
        #[arg(short, long)]
        n: usize,
        #[arg(short, long)]
        d: u32,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

pub fn run(cmd: &Cmd) -> Result<CmdOutput, CliError> {
    match cmd {
        Cmd::Assoc { n, d, form } => commands::assoc(*n, *d, form),
        Cmd::Mu { n, d, form } => commands::mu(*n, *d, form),
        Cmd::Hessian { n, d, form } => commands::hessian_cmd(*n, *d, form),
        Cmd::Nondegenerate { n, d, form } => commands::nondegenerate(*n, *d, form),
        Cmd::Socle { n, d, form } => commands::socle(*n, *d, form),
        Cmd::Discriminant { n, d, form } => commands::discriminant(*n, *d, form),
        Cmd::Contravariant { n, d, p, form } => {
            commands::contravariant(*n, *d, *p, form.as_deref())
        }
        Cmd::Bounds { n, d } => commands::bounds_cmd(*n, *d),
        Cmd::BoundsTable { n, dmin, dmax } => commands::bounds_table(*n, *dmin, *dmax),
        Cmd::Probe {
            n,
            d,
            f0,
            g,
            exponents,
        } => commands::probe(*n, *d, f0, g, exponents),
        Cmd::EquivarianceCheck {
            n,
            d,
            trials,
            seed,
        } => commands::equivariance_check(*n, *d, *trials, *seed),
    }
}
