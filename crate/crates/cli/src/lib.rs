//! Front end for `orbitcat`: the input format, command dispatch and emitters.

pub mod commands;
pub mod emit;
pub mod resolve;
pub mod syntax;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{FunctorSpec, ModuleSpec, OrbitVariant, RunError, Target};
use orbitcat::skew::SkewPresentation;
use resolve::{resolve, Overrides};
use syntax::{parse, parse_substitution, FieldDecl};

#[derive(Parser, Debug)]
#[command(name = "orbitcat", version, about = "Skew categories, orbit categories and smash products of finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
    /// `Q` or `GF(p)`; overrides the document.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<FieldDecl>,
    /// Path length bound for completion and enumeration.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Arrow substitution such as `x=(g,1)-1`; may be repeated.
    #[arg(long = "subst", global = true)]
    pub substitutions: Vec<String>,
    /// Exhaustive isomorphism search over prime fields.
    #[arg(long, global = true)]
    pub exhaustive_iso: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Matrix,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FunctorArg {
    P,
    Q,
    Omega,
    Epsilon,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TargetArg {
    Input,
    Skew,
    Orbit1,
    Orbit2,
    Basic,
    Skewcat,
    Smash,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Quiver presentation of the skew category.
    Skew { file: String },
    /// First, second or matrix orbit category.
    Orbit {
        file: String,
        #[arg(long, value_enum, default_value = "1")]
        variant: VariantArg,
    },
    /// Smash product of the graded basic orbit category.
    Smash { file: String },
    /// Smash product with the checks on the comparison functor.
    Liberalize { file: String },
    /// Covering checks for a named functor.
    CoverCheck {
        file: String,
        #[arg(long, value_enum, default_value = "p")]
        functor: FunctorArg,
    },
    /// Basic category of the first orbit category.
    Basic { file: String },
    /// Basic category, idempotent splitting and the skew category.
    Skewcat { file: String },
    /// Quiver with relations of a derived category (characteristic 0).
    Represent {
        file: String,
        #[arg(long, value_enum, default_value = "basic")]
        of: TargetArg,
    },
    /// Pushdown of a module along the orbit functor.
    Pushdown {
        file: String,
        /// `regular`, `simple:<vertex>` or `proj:<vertex>`.
        #[arg(long, default_value = "regular")]
        module: String,
    },
    /// Grading of the orbit category and the smash round trip.
    GradingCheck { file: String },
    /// Self-injective algebra with a given Nakayama permutation.
    Nakayama {
        /// Cycles such as `(1)(2)(3 4)`.
        #[arg(long)]
        perm: String,
        /// Number of vertices, by default the largest listed.
        #[arg(short)]
        n: Option<usize>,
    },
    /// DOT of the input quiver or of the skew quiver.
    Dot {
        file: String,
        #[arg(long, value_enum, default_value = "skew")]
        of: TargetArg,
    },
    /// JSON of the input or of the skew presentation.
    Json {
        file: String,
        #[arg(long, value_enum, default_value = "skew")]
        of: TargetArg,
    },
}

pub fn parse_field(s: &str) -> Result<FieldDecl, String> {
    let s = s.trim();
    if s == "Q" {
        return Ok(FieldDecl::Rationals);
    }
    s.strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.trim().parse().ok())
        .map(FieldDecl::Prime)
        .ok_or_else(|| format!("`{s}`: expected Q or GF(p)"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: parse error at {source}")]
    Parse { path: String, source: syntax::ParseError },
    #[error("--subst: {0}")]
    Subst(syntax::ParseError),
    #[error(transparent)]
    Run(#[from] RunError),
}

fn unsupported(what: &str) -> CliError {
    CliError::Run(RunError::Usage(format!("--of {what} is not available here")))
}

impl Cli {
    pub fn overrides(&self) -> Result<Overrides, CliError> {
        let mut substitutions = Vec::new();
        for s in &self.substitutions {
            substitutions.push(parse_substitution(s).map_err(CliError::Subst)?);
        }
        Ok(Overrides { field: self.field, bound: self.bound, seed: self.seed, substitutions })
    }

    /// Runs the command, reading the document from `file`.
    pub fn run(&self) -> Result<String, CliError> {
        let ex = self.exhaustive_iso;
        let file = match &self.command {
            Cmd::Nakayama { perm, n } => {
                let field = resolve::field_of(self.field.unwrap_or(FieldDecl::Rationals)).map_err(RunError::from)?;
                return Ok(commands::nakayama(perm, *n, field)?);
            }
            Cmd::Skew { file }
            | Cmd::Orbit { file, .. }
            | Cmd::Smash { file }
            | Cmd::Liberalize { file }
            | Cmd::CoverCheck { file, .. }
            | Cmd::Basic { file }
            | Cmd::Skewcat { file }
            | Cmd::Represent { file, .. }
            | Cmd::Pushdown { file, .. }
            | Cmd::GradingCheck { file }
            | Cmd::Dot { file, .. }
            | Cmd::Json { file, .. } => file,
        };
        let text = std::fs::read_to_string(file).map_err(|source| CliError::Io { path: file.clone(), source })?;
        let doc = parse(&text).map_err(|source| CliError::Parse { path: file.clone(), source })?;
        let r = resolve(&doc, &self.overrides()?).map_err(RunError::from)?;
        let out = match &self.command {
            Cmd::Skew { .. } => commands::skew(&r)?,
            Cmd::Orbit { variant, .. } => {
                let v = match variant {
                    VariantArg::One => OrbitVariant::One,
                    VariantArg::Two => OrbitVariant::Two,
                    VariantArg::Matrix => OrbitVariant::Matrix,
                };
                commands::orbit(&r, v, ex)?
            }
            Cmd::Smash { .. } => commands::smash_cmd(&r, ex)?,
            Cmd::Liberalize { .. } => commands::liberalize(&r, ex)?,
            Cmd::CoverCheck { functor, .. } => {
                let f = match functor {
                    FunctorArg::P => FunctorSpec::P,
                    FunctorArg::Q => FunctorSpec::Q,
                    FunctorArg::Omega => FunctorSpec::Omega,
                    FunctorArg::Epsilon => FunctorSpec::Epsilon,
                };
                commands::cover_check(&r, f, ex)?
            }
            Cmd::Basic { .. } => commands::basic_cmd(&r, ex)?,
            Cmd::Skewcat { .. } => commands::skewcat(&r, ex)?,
            Cmd::Represent { of, .. } => commands::represent_cmd(&r, target(*of), ex)?,
            Cmd::Pushdown { module, .. } => {
                let spec: ModuleSpec = module.parse().map_err(|e: String| RunError::Usage(e))?;
                commands::pushdown_cmd(&r, &spec)?
            }
            Cmd::GradingCheck { .. } => commands::grading_check(&r, ex)?,
            Cmd::Dot { of, .. } => match of {
                TargetArg::Input => emit::dot(&r.action.algebra.quiver, "input", usize::MAX),
                TargetArg::Skew => {
                    let sp = SkewPresentation::new(&r.action);
                    emit::dot(&sp.quiver, "skew", sp.original_arrows)
                }
                _ => return Err(unsupported("for dot")),
            },
            Cmd::Json { of, .. } => match of {
                TargetArg::Input => emit::to_json(&emit::input_dto(&r)),
                TargetArg::Skew => emit::to_json(&emit::skew_dto(&r, &SkewPresentation::new(&r.action))),
                _ => return Err(unsupported("for json")),
            },
            Cmd::Nakayama { .. } => unreachable!(),
        };
        Ok(out)
    }
}

fn target(t: TargetArg) -> Target {
    match t {
        TargetArg::Input => Target::Input,
        TargetArg::Skew => Target::Skew,
        TargetArg::Orbit1 => Target::Orbit1,
        TargetArg::Orbit2 => Target::Orbit2,
        TargetArg::Basic => Target::Basic,
        TargetArg::Skewcat => Target::Skewcat,
        TargetArg::Smash => Target::Smash,
    }
}
