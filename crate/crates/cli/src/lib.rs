//! Command-line front end: `expand`, `verify`, `discover`, `genus`, `basis`
//! and `list`, with deterministic text or JSON output.
//!
//! Exit codes: 0 on success, 1 when a verification fails or is inconclusive,
//! discovery finds no equation, or genus data is inconsistent; 2 on usage
//! errors.

pub mod json;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use jacobi_mde::mde::{self, GenusInput, Status};
use jacobi_mde::{catalog, ring, Error, Rational};

#[derive(Debug, Parser)]
#[command(
    name = "jacobi-mde",
    version,
    about = "Exact q,ζ-expansions and modular differential equations of weak Jacobi forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Number of q-powers to compute (the series is exact below q^N).
    #[arg(long = "q-order", value_name = "N", default_value_t = 12,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub q_order: u32,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

impl Common {
    fn trunc24(&self) -> i64 {
        24 * self.q_order as i64
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the q,ζ-expansion of a catalog form.
    Expand {
        #[arg(long)]
        form: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify ledger equations with vanishing certificates.
    Verify {
        #[arg(long, conflicts_with = "equation", required_unless_present = "equation")]
        all: bool,
        #[arg(long, value_name = "ID")]
        equation: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Find the minimal-degree modular differential equation of a form.
    Discover {
        #[arg(long)]
        form: String,
        #[arg(long = "max-degree", value_name = "R", default_value_t = 5)]
        max_degree: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Elliptic genus of a Calabi–Yau d-fold from its Euler number or χ_y data.
    Genus {
        #[arg(long, value_name = "D")]
        dim: u32,
        #[arg(
            long,
            value_name = "E",
            allow_hyphen_values = true,
            required_unless_present = "chi"
        )]
        euler: Option<String>,
        /// Comma-separated χ_0,…,χ_D.
        #[arg(long, value_name = "c0,c1,...", allow_hyphen_values = true)]
        chi: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// List the structure-theorem basis of J_{k,m}.
    Basis {
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_name = "M", allow_hyphen_values = true)]
        index: String,
        #[arg(long)]
        json: bool,
    },
    /// List catalog forms and ledger equations.
    List {
        #[arg(long)]
        json: bool,
    },
}

/// Why a command did not succeed.
enum Failure {
    /// Exit 2.
    Usage(Error),
    /// Exit 1 with a diagnostic.
    Negative(Error),
    /// Exit 1; the report was already printed.
    Reported,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InconsistentHodgeData(_) | Error::InsufficientTruncation { .. } | Error::NotInSpan => {
                Failure::Negative(e)
            }
            _ => Failure::Usage(e),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name), writing to
/// `out` and `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            if json_mode {
                let rendered = e.to_string();
                let first = rendered.lines().next().unwrap_or("invalid command line");
                let msg = first.trim_start_matches("error: ").to_string();
                write_error(out, "usage", &msg);
            }
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    let json = match &cli.command {
        Command::Expand { common, .. }
        | Command::Verify { common, .. }
        | Command::Discover { common, .. }
        | Command::Genus { common, .. } => common.json,
        Command::Basis { json, .. } | Command::List { json } => *json,
    };
    let result = dispatch(&cli.command, out);
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Reported) => 1,
        Err(Failure::Usage(e)) | Err(Failure::Negative(e)) if json => {
            let code = exit_code_of(&e);
            write_error(out, json::error_kind(&e), &e.to_string());
            let _ = writeln!(err, "error: {e}");
            code
        }
        Err(Failure::Usage(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Negative(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn exit_code_of(e: &Error) -> i32 {
    match Failure::from(e.clone()) {
        Failure::Usage(_) => 2,
        _ => 1,
    }
}

fn write_error(out: &mut dyn Write, kind: &'static str, message: &str) {
    let doc = json::ErrorDoc {
        error: json::ErrorBody {
            kind,
            message: message.to_string(),
        },
    };
    let _ = out.write_all(json::to_string(&doc).as_bytes());
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational, Failure> {
    json::parse_rational(s).map_err(|m| Failure::Usage(Error::InvalidArgument(format!("--{flag}: {m}"))))
}

/// A value entered as a multiple of ½, returned doubled.
fn parse_doubled(flag: &str, s: &str) -> Result<i64, Failure> {
    let v = parse_rational(flag, s)? * Rational::from_integer(2.into());
    if !v.is_integer() {
        return Err(Failure::Usage(Error::InvalidArgument(format!(
            "--{flag}: {s} is not a multiple of 1/2"
        ))));
    }
    i64::try_from(v.to_integer())
        .map_err(|_| Failure::Usage(Error::InvalidArgument(format!("--{flag}: {s} is out of range"))))
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Expand { form, common } => expand(form, common, out),
        Command::Verify { equation, common, .. } => verify(equation.as_deref(), common, out),
        Command::Discover {
            form,
            max_degree,
            common,
        } => discover(form, *max_degree, common, out),
        Command::Genus {
            dim,
            euler,
            chi,
            common,
        } => genus(*dim, euler.as_deref(), chi.as_deref(), common, out),
        Command::Basis { weight, index, json } => basis(weight, index, *json, out),
        Command::List { json } => list(*json, out),
    }
}

fn expand(name: &str, common: &Common, out: &mut dyn Write) -> Outcome {
    let s = catalog::form(name, common.trunc24())?;
    if common.json {
        emit(out, &json::to_string(&json::Series::from(&s)));
    } else {
        emit(out, &render::series(&s));
    }
    Ok(())
}

fn verify(equation: Option<&str>, common: &Common, out: &mut dyn Write) -> Outcome {
    let t = common.trunc24();
    let results = match equation {
        Some(id) => vec![mde::verify_equation(id, t)?],
        None => mde::verify_all(t)?,
    };
    let count = |s: Status| results.iter().filter(|v| v.status == s).count();
    let summary = json::Summary {
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        inconclusive: count(Status::Inconclusive),
    };
    let all_pass = summary.pass == results.len();
    if common.json {
        let doc = json::VerifyDoc {
            q_order: common.q_order,
            trunc24: t,
            entries: results.iter().map(Into::into).collect(),
            summary,
        };
        emit(out, &json::to_string(&doc));
    } else {
        let width = results.iter().map(|v| v.id.len()).max().unwrap_or(2).max(2);
        let mut text = format!("{:<width$}  {:<12}  CERTIFICATE\n", "ID", "STATUS");
        for v in &results {
            text.push_str(&format!(
                "{:<width$}  {:<12}  {}\n",
                v.id,
                v.status.as_str(),
                certificate_summary(v)
            ));
            text.push_str(&format!("{:<width$}  {}\n", "", v.statement));
            if let Some(note) = v.note {
                text.push_str(&format!("{:<width$}  note: {note}\n", ""));
            }
        }
        text.push_str(&format!(
            "\n{} passed, {} failed, {} inconclusive (q-order {})\n",
            summary.pass, summary.fail, summary.inconclusive, common.q_order
        ));
        emit(out, &text);
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

/// The weakest certificate of an entry, e.g.
/// `certified_zero, 1 component, zero to q^12, needs q^2`.
fn certificate_summary(v: &mde::Verification) -> String {
    let worst = v
        .components
        .iter()
        .find(|c| c.certificate.verdict != ring::Verdict::CertifiedZero)
        .or_else(|| v.components.iter().max_by_key(|c| c.required_trunc24()));
    let Some(c) = worst else {
        return "no components".into();
    };
    let n = v.components.len();
    let plural = if n == 1 { "" } else { "s" };
    let need = match c.required_trunc24() {
        Some(b) => format!("needs q^{}", render::exponent(b, 24)),
        None => "no bound".into(),
    };
    format!(
        "{}, {n} component{plural}, {}, {}, {need}",
        c.certificate.verdict.as_str(),
        json::criterion_name(c.certificate.criterion),
        zero_to(c.certificate.vanish_order24 + c.eta_normalizer as i64)
    )
}

fn zero_to(order24: i64) -> String {
    format!("zero to q^{}", render::exponent(order24, 24))
}

fn discover(name: &str, max_degree: usize, common: &Common, out: &mut dyn Write) -> Outcome {
    let entry = catalog::lookup(name)?;
    let d = mde::discover(name, max_degree, common.trunc24())?;
    if common.json {
        let doc = json::DiscoverDoc::new(&d, entry.weight2, entry.index2, entry.eta_power, common.trunc24());
        emit(out, &json::to_string(&doc));
    } else {
        let mut text = format!(
            "form: {name} (weight {}, index {})\n",
            render::halves(entry.weight2),
            render::halves(entry.index2)
        );
        for r in &d.reports {
            let what = match &r.outcome {
                mde::DegreeOutcome::Infeasible { rank, augmented_rank } => {
                    format!("infeasible (rank {rank} < augmented rank {augmented_rank})")
                }
                mde::DegreeOutcome::Uncertified { verdict } => format!("uncertified ({})", verdict.as_str()),
                mde::DegreeOutcome::Found => "found".into(),
            };
            text.push_str(&format!(
                "degree {}: {what}; {} unknowns, {} equations from slices below q^{}\n",
                r.degree,
                r.unknowns,
                r.equations,
                render::exponent(r.bound24, 24)
            ));
        }
        match &d.equation {
            Some(eq) => {
                text.push_str(&format!("equation: {}\n", render::equation(eq)));
                for g in &eq.coeffs {
                    text.push_str(&format!("  {}\n", render::modular_coefficient(g)));
                }
                if !eq.nullspace.is_empty() {
                    text.push_str(&format!(
                        "  not unique: {} free direction(s) in the coefficients\n",
                        eq.nullspace.len()
                    ));
                }
                let c = &eq.certificate;
                text.push_str(&format!(
                    "certificate: {} ({}), {}\n",
                    c.verdict.as_str(),
                    json::criterion_name(c.criterion),
                    zero_to(c.vanish_order24 + eq.eta_normalizer as i64)
                ));
            }
            None => text.push_str(&format!("no equation of degree ≤ {max_degree}\n")),
        }
        emit(out, &text);
    }
    if d.equation.is_some() {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn genus(dim: u32, euler: Option<&str>, chi: Option<&str>, common: &Common, out: &mut dyn Write) -> Outcome {
    let euler = euler.map(|e| parse_rational("euler", e)).transpose()?;
    let chi = chi
        .map(|c| {
            c.split(',')
                .map(|v| parse_rational("chi", v))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    let g = mde::elliptic_genus(&GenusInput { dim, euler, chi }, common.trunc24())?;
    if common.json {
        emit(out, &json::to_string(&json::GenusDoc::new(dim, &g)));
    } else {
        let combo = render::combination(
            g.coordinates
                .iter()
                .zip(g.basis.monomials())
                .map(|(c, m)| (c, render::monomial(m))),
        );
        let mut text = format!(
            "elliptic genus in J_{{0,{}}} = {combo}\n",
            render::halves(g.basis.index2())
        );
        for w in &g.warnings {
            match w {
                mde::GenusWarning::NonIntegral => {
                    text.push_str("warning: non-integral Fourier coefficients; not the genus of a manifold\n")
                }
            }
        }
        text.push_str(&render::series(&g.series));
        emit(out, &text);
    }
    Ok(())
}

fn basis(weight: &str, index: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w2 = parse_doubled("weight", weight)?;
    let i2 = parse_doubled("index", index)?;
    let b = ring::basis(w2, i2);
    if json {
        emit(out, &json::to_string(&json::BasisDoc::from(&b)));
    } else {
        let mut text = format!(
            "J_{{{},{}}}: dimension {}\n",
            render::halves(w2),
            render::halves(i2),
            b.dimension()
        );
        for m in b.monomials() {
            text.push_str(&format!("  {}\n", render::monomial(m)));
        }
        emit(out, &text);
    }
    Ok(())
}

fn list(json: bool, out: &mut dyn Write) -> Outcome {
    let forms = catalog::entries();
    let equations = mde::ledger();
    if json {
        let doc = json::ListDoc {
            forms: forms
                .iter()
                .map(|f| json::FormInfo {
                    name: f.name,
                    weight2: f.weight2,
                    index2: f.index2,
                    eta_power: f.eta_power,
                    quasi: f.quasi,
                    formula: f.formula,
                })
                .collect(),
            equations: equations.iter().map(|e| e.id).collect(),
        };
        emit(out, &json::to_string(&doc));
    } else {
        let width = forms.iter().map(|f| f.name.len()).max().unwrap_or(4);
        let mut text = String::from("forms:\n");
        for f in forms {
            text.push_str(&format!(
                "  {:<width$}  weight {:<5} index {:<5} {}\n",
                f.name,
                render::halves(f.weight2),
                render::halves(f.index2),
                f.formula
            ));
        }
        text.push_str("equations:\n");
        for e in equations {
            text.push_str(&format!("  {}  {}\n", e.id, e.statement));
        }
        emit(out, &text);
    }
    Ok(())
}
