//! `superhopf`: exact computations in Λ, sQSym and sNSym from the command line.

mod error;
mod expr;
mod output;
mod value;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superhopf::combinatorics::{coarsenings, dotted_compositions, refinements, superpartitions, Refinement};
use superhopf::suites::{self, Report, Suite};
use superhopf::{Bidegree, DottedComposition, Error, SuperPartition, SymBasis, SymElement};

use crate::error::CliError;
use crate::expr::Basis;
use crate::output::Format;
use crate::value::{Context, Value};

const DEFAULT_SEED: u64 = 0x5eed;

/// Exact arithmetic with symmetric, quasisymmetric and noncommutative
/// symmetric functions in superspace.
///
/// Expressions combine basis literals with `+`, `-`, `*` and rational
/// scalars `p/q`. Literals are `M[..]`, `L[..]`, `Lb[..]` (sQSym), `H[..]`
/// (sNSym), indexed by dotted compositions such as `3.,2`, and `m`, `p`,
/// `e`, `h`, `s`, `sb`, `s*`, `sb*` (Λ), indexed by superpartitions such as
/// `2,0;3,1`.
#[derive(Parser, Debug)]
#[command(name = "superhopf", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,
    /// Largest n+m allowed. For `check`, the degree the suite runs to.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of the expressions, left to right.
    Mul {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Coproduct, in the basis of the input.
    Comul {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    Antipode {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The involution ω on Λ.
    Omega {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// ⟨F, G⟩ between sNSym and sQSym, or the Hall product on Λ.
    Pair {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// The Hall scalar product ⟨⟨f, g⟩⟩ on Λ.
    Hall {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Change of basis. Also maps Λ into sQSym, symmetric elements of sQSym
    /// back to Λ, and sNSym onto Λ.
    Convert {
        /// Basis the expression must be written in.
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// A Schur function in superspace, in the monomial basis by default.
    Schur {
        /// s̄ instead of s.
        #[arg(long)]
        bar: bool,
        /// The dual function s* or s̄*.
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value = "m")]
        to: String,
        /// Superpartition, e.g. `1,0;2`.
        index: String,
    },
    /// The skew function s_{Λ/Ω} (or s̄ with `--bar`) in its own basis.
    Skew {
        #[arg(long)]
        bar: bool,
        lambda: String,
        omega: String,
    },
    /// Littlewood–Richardson expansion of s_Γ s_Ω (or s̄_Γ s̄_Ω with `--bar`).
    Lr {
        #[arg(long)]
        bar: bool,
        gamma: String,
        omega: String,
    },
    /// List indices.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// Expand an element as a polynomial in x₁..x_N and θ₁..θ_N.
    Oracle {
        /// N. Defaults to one more than the largest n+m in the input.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run an exhaustive identity suite.
    Check {
        /// A suite name, or `all`.
        #[arg(long)]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum Enumerate {
    /// Superpartitions of bidegree (n|m).
    Superpartitions { n: usize, m: usize },
    /// Dotted compositions of bidegree (n|m).
    Compositions { n: usize, m: usize },
    /// Strong coarsenings, or weak ones with `--weak`.
    Coarsenings {
        #[arg(long)]
        weak: bool,
        composition: String,
    },
    /// Strong refinements, or weak ones with `--weak`.
    Refinements {
        #[arg(long)]
        weak: bool,
        composition: String,
    },
}

fn expression(ctx: &Context, text: &str) -> Result<Value, CliError> {
    ctx.eval(&expr::parse(text)?)
}

fn basis(text: &str) -> Result<Basis, CliError> {
    text.parse().map_err(CliError::Usage)
}

fn superpartition(text: &str) -> Result<SuperPartition, CliError> {
    Ok(text.parse()?)
}

fn composition(text: &str) -> Result<DottedComposition, CliError> {
    Ok(text.parse()?)
}

fn value_basis(v: &Value) -> Option<Basis> {
    match v {
        Value::Scalar(_) => None,
        Value::Qs(b, _) => Some(Basis::Qs(*b)),
        Value::Ns(_) => Some(Basis::H),
        Value::Sym(f) => Some(Basis::Sym(f.basis)),
    }
}

fn schur_family(bar: bool) -> SymBasis {
    if bar {
        SymBasis::SchurBar
    } else {
        SymBasis::Schur
    }
}

fn refinement(weak: bool) -> Refinement {
    if weak {
        Refinement::Weak
    } else {
        Refinement::Strong
    }
}

fn check(suite: &str, max_degree: Option<usize>, seed: u64, format: Format) -> Result<String, CliError> {
    let chosen: Vec<Suite> = if suite == "all" {
        Suite::DEFAULT.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            CliError::Usage(format!("unknown suite {suite:?}; expected all or one of {}", names.join(", ")))
        })?]
    };
    if let Some(d) = max_degree {
        // `all` runs each suite to the smaller of `d` and its own limit, but
        // still refuses a degree that no suite supports.
        let limit = chosen.iter().map(|s| s.max_degree()).max().unwrap_or(0);
        if d > limit {
            return Err(Error::DegreeGuard {
                bidegree: Bidegree::new(d, 0),
                limit,
            }
            .into());
        }
    }
    let sym = superhopf::Sym::new();
    let mut reports: Vec<Report> = Vec::new();
    for s in chosen {
        let d = max_degree.map_or(s.default_degree(), |d| d.min(s.max_degree()));
        reports.push(suites::run_with(&sym, s, d, seed)?);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{}", output::reports(&reports, format));
    if failed > 0 {
        return Err(CliError::SuiteFailed(failed));
    }
    Ok(String::new())
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    let ctx = Context::new(cli.max_degree);
    let show = |v: &Value| output::value(v, format);
    Ok(match cli.command {
        Command::Mul { exprs } => {
            let mut acc = Value::Scalar(num_traits::One::one());
            for e in &exprs {
                acc = ctx.mul(&acc, &expression(&ctx, e)?)?;
            }
            show(&acc)
        }
        Command::Comul { expr } => output::tensor_value(&ctx.comul(&expression(&ctx, &expr)?)?, format),
        Command::Antipode { expr } => show(&ctx.antipode(&expression(&ctx, &expr)?)?),
        Command::Omega { expr } => show(&ctx.omega(&expression(&ctx, &expr)?)?),
        Command::Pair { left, right } => {
            let q = ctx.pair(&expression(&ctx, &left)?, &expression(&ctx, &right)?)?;
            output::scalar(&q, format)
        }
        Command::Hall { left, right } => {
            let q = ctx.hall(&expression(&ctx, &left)?, &expression(&ctx, &right)?)?;
            output::scalar(&q, format)
        }
        Command::Convert { from, to, expr } => {
            let v = expression(&ctx, &expr)?;
            if let Some(from) = from {
                let from = basis(&from)?;
                if let Some(b) = value_basis(&v).filter(|&b| b != from) {
                    return Err(CliError::Usage(format!("expression is in the {b} basis, not {from}")));
                }
            }
            show(&ctx.convert(&v, basis(&to)?)?)
        }
        Command::Schur { bar, dual, to, index } => {
            let family = match (bar, dual) {
                (false, false) => SymBasis::Schur,
                (true, false) => SymBasis::SchurBar,
                (false, true) => SymBasis::DualSchur,
                (true, true) => SymBasis::DualSchurBar,
            };
            let f = Value::Sym(SymElement::basis_element(family, superpartition(&index)?));
            show(&ctx.convert(&f, basis(&to)?)?)
        }
        Command::Skew { bar, lambda, omega } => {
            let f = ctx
                .sym
                .skew(schur_family(bar), &superpartition(&lambda)?, &superpartition(&omega)?)?;
            show(&Value::Sym(f))
        }
        Command::Lr { bar, gamma, omega } => {
            let family = schur_family(bar);
            let c = ctx
                .sym
                .lr_coeffs(family, &superpartition(&gamma)?, &superpartition(&omega)?)?;
            show(&Value::Sym(SymElement::new(family, c)))
        }
        Command::Enumerate { what } => enumerate(&ctx, what, format)?,
        Command::Oracle { vars, expr } => output::polynomial(&ctx.expand(&expression(&ctx, &expr)?, vars)?, format),
        Command::Check { suite } => check(&suite, cli.max_degree, cli.seed, format)?,
    })
}

fn enumerate(ctx: &Context, what: Enumerate, format: Format) -> Result<String, CliError> {
    let guard = |b: Bidegree| -> Result<(), CliError> {
        if b.weight() > ctx.max_degree {
            return Err(Error::DegreeGuard {
                bidegree: b,
                limit: ctx.max_degree,
            }
            .into());
        }
        Ok(())
    };
    Ok(match what {
        Enumerate::Superpartitions { n, m } => {
            guard(Bidegree::new(n, m))?;
            output::indices("superpartitions", &superpartitions(Bidegree::new(n, m)), format)
        }
        Enumerate::Compositions { n, m } => {
            guard(Bidegree::new(n, m))?;
            output::indices("compositions", &dotted_compositions(Bidegree::new(n, m)), format)
        }
        Enumerate::Coarsenings { weak, composition: c } => {
            let c = composition(&c)?;
            guard(c.bidegree())?;
            output::indices("coarsenings", &coarsenings(&c, refinement(weak)), format)
        }
        Enumerate::Refinements { weak, composition: c } => {
            let c = composition(&c)?;
            guard(c.bidegree())?;
            output::indices("refinements", &refinements(&c, refinement(weak)), format)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
