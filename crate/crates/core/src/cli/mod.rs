//! Command-line front end: expression parsing, subcommands, text and JSON
//! output, and the `verify` suite.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 domain error, 4 a
//! verification check failed.

pub mod parser;
pub mod verify;

use crate::arith::{FieldElem, NumberField, Poly, Rat, Scalar};
use crate::classify::classify;
use crate::conditions::{conditions_from_subalgebra, kernel_span, kernel_subalgebra, LinearFunctional, Subalgebra};
use crate::derivations::{cluster_of, conjecture_dim_check, derivation_space, ln_coefficients};
use crate::error::{Error, Result};
use crate::resultants::{char_poly_multi, char_poly_multi_symmetric, char_poly_pair};
use crate::roots::RootMode;
use crate::sagbi::{membership, sagbi_complete};
use crate::semigroup::DegreeSemigroup;
use crate::spectrum::{compute_clusters, compute_spectrum};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "subalg", version, about = "Subalgebras of finite codimension in K[x]")]
pub struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field Q[t]/(MODULUS), MODULUS a polynomial in t.
    #[arg(long, global = true, value_name = "MODULUS")]
    pub field: Option<String>,
    /// Numeric tolerance for root matching.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    /// Degree bound override.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Characteristic polynomial as a gcd over every choice of distinguished generator.
    #[arg(long, global = true)]
    pub symmetrize: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Characteristic polynomial of a pair.
    Charpoly {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Characteristic polynomial of several generators.
    CharpolyMulti {
        #[arg(required = true, num_args = 2..)]
        gens: Vec<String>,
    },
    /// Spectrum points, their kind and the clusters.
    Spectrum {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Minimal SAGBI basis, type and codimension.
    Sagbi {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Gaps, genus, conductor and Frobenius number of a numerical semigroup.
    Semigroup {
        #[arg(required = true)]
        degrees: Vec<usize>,
    },
    /// Membership by subduction.
    Member {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, required = true, num_args = 1..)]
        algebra: Vec<String>,
    },
    /// Linear conditions cutting out the algebra, read off an exact spectrum.
    Conditions {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Subalgebra defined by a JSON list of conditions.
    Kernel {
        #[arg(long)]
        conditions: PathBuf,
    },
    /// k_alpha and the space of derivative-combination derivations at alpha.
    Derivations {
        #[arg(required = true)]
        gens: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Case of the codimension <= 3 classification.
    Classify {
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Coefficients of L_n for odd n.
    LnCoeffs { n: i64 },
    /// Runs the worked examples and the acceptance checks.
    Verify {
        /// Skip the long randomized sweeps.
        #[arg(long)]
        quick: bool,
    },
}

/// Result of one command: text for humans, JSON for machines, exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownSymbol(_) => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome { code: exit_code(e), text: format!("error: {}", e), json: json!({"error": e.to_string(), "kind": format!("{:?}", e)}) }
}

fn ok(text: String, json: Value) -> Outcome {
    Outcome { code: EXIT_OK, text, json }
}

/// Coefficient domain selected by `--field`.
enum Domain {
    Rational,
    Field(Arc<NumberField>),
}

impl Domain {
    fn from_flag(field: Option<&str>) -> Result<Self> {
        match field {
            None => Ok(Domain::Rational),
            Some(src) => {
                let modulus = parser::parse_modulus(src)?;
                Ok(Domain::Field(NumberField::new(modulus, format!("Q[t]/({})", src.trim()))?))
            }
        }
    }
}

/// Parsers for one coefficient domain.
struct Io<F: Scalar> {
    poly: Box<dyn Fn(&str) -> Result<Poly<F>>>,
    elem: Box<dyn Fn(&str) -> Result<F>>,
}

impl<F: Scalar> Io<F> {
    fn polys(&self, srcs: &[String]) -> Result<Vec<Poly<F>>> {
        srcs.iter().map(|s| (self.poly)(s)).collect()
    }
}

fn rational_io() -> Io<Rat> {
    Io { poly: Box::new(parser::parse_poly), elem: Box::new(parser::parse_rational) }
}

fn field_io(k: &Arc<NumberField>) -> Io<FieldElem> {
    let (k1, k2) = (k.clone(), k.clone());
    Io { poly: Box::new(move |s| parser::parse_poly_in(s, &k1)), elem: Box::new(move |s| parser::parse_field_elem(s, &k2)) }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            Outcome { code, text: e.to_string(), json: json!({"error": e.to_string(), "kind": "Usage"}) }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Semigroup { degrees } => return wrap(semigroup(degrees)),
        Command::LnCoeffs { n } => return wrap(ln(*n)),
        Command::Verify { quick } => return verify::run_suite(*quick),
        _ => {}
    }
    let domain = match Domain::from_flag(cli.field.as_deref()) {
        Ok(d) => d,
        Err(e) => return failure(&e),
    };
    match domain {
        Domain::Rational => wrap(dispatch(cli, &rational_io())),
        Domain::Field(k) => wrap(dispatch(cli, &field_io(&k))),
    }
}

fn wrap(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| failure(&e))
}

fn dispatch<F: Scalar>(cli: &Cli, io: &Io<F>) -> Result<Outcome> {
    match &cli.command {
        Command::Charpoly { p, q } => {
            let (p, q) = ((io.poly)(p)?, (io.poly)(q)?);
            let chi = char_poly_pair(&p, &q)?;
            Ok(ok(chi.to_string(), json!({"charpoly": chi.to_string(), "degree": chi.degree()})))
        }
        Command::CharpolyMulti { gens } => {
            let gens = io.polys(gens)?;
            let chi = if cli.symmetrize { char_poly_multi_symmetric(&gens)? } else { char_poly_multi(&gens)? };
            Ok(ok(chi.to_string(), json!({"charpoly": chi.to_string(), "degree": chi.degree(), "symmetrized": cli.symmetrize})))
        }
        Command::Spectrum { gens } => spectrum_cmd(cli, &Subalgebra::from_generators(io.polys(gens)?)),
        Command::Sagbi { gens } => sagbi_cmd(cli, io.polys(gens)?),
        Command::Member { f, algebra } => {
            let f = (io.poly)(f)?;
            let a = Subalgebra::from_generators(io.polys(algebra)?);
            let (member, steps) = membership(&f, &a)?;
            let text = format!("{}: {}", f, if member { "member" } else { "not a member" });
            let steps: Vec<Value> =
                steps.iter().map(|s| json!({"degree": s.degree, "coeff": s.coeff.to_string(), "factors": s.factors})).collect();
            Ok(ok(text, json!({"member": member, "subduction": steps})))
        }
        Command::Conditions { gens } => {
            let a = Subalgebra::from_generators(io.polys(gens)?);
            let spec = compute_spectrum(&a, &RootMode::Field(Vec::new()), cli.tol)?;
            let pts = spec.exact_points().ok_or(Error::SpectrumNotExact)?;
            let conds = conditions_from_subalgebra(&a, &pts)?;
            let text = conds.iter().map(|c| format!("{} = 0", c)).collect::<Vec<_>>().join("\n");
            Ok(ok(text, json!({"conditions": conds.iter().map(|c| c.to_json()).collect::<Vec<_>>()})))
        }
        Command::Kernel { conditions } => kernel_cmd(cli, io, conditions),
        Command::Derivations { gens, alpha } => {
            let a = Subalgebra::from_generators(io.polys(gens)?);
            let alpha = (io.elem)(alpha)?;
            let spec = compute_spectrum(&a, &RootMode::Field(vec![alpha.clone()]), cli.tol)?;
            let inside = spec.points.iter().any(|p| p.value.exact() == Some(&alpha));
            let cluster = cluster_of(&a, &alpha, &spec)?;
            let space = derivation_space(&a, &alpha, &cluster)?;
            let report = conjecture_dim_check(&a, &alpha, &cluster, inside)?;
            let mut text = format!("k_alpha = {}\nderivative combinations: {}", space.k_alpha, space.dim());
            for d in &space.combo_basis {
                text.push_str(&format!("\n  {}", d));
            }
            text.push_str(&format!("\nverdict: {}", if report.equal { "equal" } else { "unequal" }));
            Ok(ok(
                text,
                json!({
                    "alpha": alpha.to_string(),
                    "in_spectrum": inside,
                    "cluster": cluster.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "k_alpha": space.k_alpha,
                    "combo_basis": space.combo_basis.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
                    "quotient_witnesses": space.quotient_witnesses.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "degree_bound": space.degree_bound,
                    "max_order": space.max_order,
                    "verdict": if report.equal { "equal" } else { "unequal" },
                }),
            ))
        }
        Command::Classify { gens } => {
            let c = classify(&Subalgebra::from_generators(io.polys(gens)?))?;
            let mut text = format!("{}\ncodimension {}, type {:?}, |Sp| = {}", c.label(), c.codimension, c.type_tuple, c.spectrum_size);
            for (n, v) in &c.parameters {
                text.push_str(&format!("\n  {} = {}", n, v));
            }
            Ok(ok(text, c.to_json()))
        }
        Command::Semigroup { .. } | Command::LnCoeffs { .. } | Command::Verify { .. } => unreachable!(),
    }
}

fn spectrum_cmd<F: Scalar>(cli: &Cli, a: &Subalgebra<F>) -> Result<Outcome> {
    let spec = compute_spectrum(a, &RootMode::Field(Vec::new()), cli.tol)?;
    let clusters = compute_clusters(a, &spec)?;
    let mut text = format!("chi = {}\n{} points", spec.chi, spec.len());
    for (i, p) in spec.points.iter().enumerate() {
        let kind = match (p.critical, p.is_paired()) {
            (true, true) => "critical, paired",
            (true, false) => "critical",
            (false, _) => "paired",
        };
        text.push_str(&format!("\n  [{}] {} ({})", i, p.value, kind));
    }
    let groups: Vec<String> = clusters.iter().map(|c| format!("{:?}", c.members)).collect();
    text.push_str(&format!("\nclusters: {}", groups.join(" ")));
    let mut js = spec.to_json();
    js["clusters"] = json!(clusters.iter().map(|c| c.members.clone()).collect::<Vec<_>>());
    Ok(ok(text, js))
}

fn basis_json<F: Scalar>(elems: &[Poly<F>]) -> Value {
    json!(elems.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn sagbi_cmd<F: Scalar>(cli: &Cli, gens: Vec<Poly<F>>) -> Result<Outcome> {
    let b = sagbi_complete(&gens)?;
    let mut text = b.elements().iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
    text.push_str(&format!("\ntype {:?}, codimension {}", b.degrees(), b.genus()));
    let mut js = json!({"basis": basis_json(b.elements()), "type": b.degrees(), "codimension": b.genus()});
    if let Some(bound) = cli.bound {
        let lin = b.linear_basis(bound);
        text.push_str(&format!("\nlinear basis up to degree {}: {} elements", bound, lin.len()));
        js["linear_basis"] = basis_json(&lin);
    }
    Ok(ok(text, js))
}

fn kernel_cmd<F: Scalar>(cli: &Cli, io: &Io<F>, path: &PathBuf) -> Result<Outcome> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {}", path.display(), e)))?;
    let v: Value = serde_json::from_str(&src).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    let list = v.get("conditions").unwrap_or(&v).as_array().ok_or_else(|| Error::Invalid("expected a list of conditions".into()))?;
    let conds: Vec<LinearFunctional<F>> = list.iter().map(|c| LinearFunctional::from_json(c, &*io.elem)).collect::<Result<_>>()?;
    let a = kernel_subalgebra(&conds)?;
    let b = a.sagbi()?;
    let mut text = b.elements().iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
    text.push_str(&format!("\ntype {:?}, codimension {}", b.degrees(), b.genus()));
    let mut js = json!({"basis": basis_json(b.elements()), "type": b.degrees(), "codimension": b.genus()});
    if let Some(bound) = cli.bound {
        let span = kernel_span(&conds, bound, &a.ctx());
        text.push_str(&format!("\nkernel dimension up to degree {}: {}", bound, span.dim()));
        js["kernel_dim"] = json!(span.dim());
    }
    Ok(ok(text, js))
}

fn semigroup(degrees: &[usize]) -> Result<Outcome> {
    let s = DegreeSemigroup::from_degrees(degrees)?;
    let list = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    let text = format!(
        "generators {}\ngaps {}\ngenus {}\nconductor {}\nfrobenius {}",
        list(s.generators()),
        list(s.gaps()),
        s.genus(),
        s.conductor(),
        s.frobenius()
    );
    Ok(ok(
        text,
        json!({"generators": s.generators(), "gaps": s.gaps(), "genus": s.genus(), "conductor": s.conductor(), "frobenius": s.frobenius()}),
    ))
}

fn ln(n: i64) -> Result<Outcome> {
    let c = ln_coefficients(n)?;
    let text = c.iter().rev().map(|(k, v)| format!("D_{}: {}", k, v)).collect::<Vec<_>>().join("\n");
    let js: serde_json::Map<String, Value> = c.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
    Ok(ok(text, json!({"n": n, "coefficients": js})))
}

/// Installs the logger according to `SUBALG_LOG` (`off`, `info`, `debug`).
pub fn init_logging() {
    let level = match std::env::var("SUBALG_LOG").as_deref() {
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Off,
    };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();
}
