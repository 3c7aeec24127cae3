use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use colorsym::descent::{write_coeff_csv, DEFAULT_VERTEX_CAP};
use colorsym::skew::{self, SkewTarget};
use colorsym::tableau::{enumerate_skew_standard, enumerate_skew_tableaux};
use colorsym::verify::{self, Suite};
use colorsym::{
    left_quotient, nsym, qsym, uncolor, uncolored_coeffs, Alphabet, BasisTag, DescentGraph, Error, Expr, Sentence,
    Side, TensorExpr, Variant,
};

#[derive(Parser)]
#[command(name = "colorsym", version, about = "Colored QSym/NSym computer algebra")]
struct Cli {
    /// Ordered color letters, e.g. "abc"
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an expression to another basis on the same side
    Expand {
        expr: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        json: bool,
        /// Replace each index by its word lengths
        #[arg(long)]
        uncolor: bool,
    },
    /// List tableaux of a shape and type
    Tableaux {
        #[arg(long)]
        shape: String,
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        row_strict: bool,
        #[arg(long)]
        standard: bool,
    },
    /// Export a descent graph
    Graph {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        row_strict: bool,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u128,
    },
    /// Signed path-sum inverse coefficients as CSV
    Coeffs {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        uncolored: bool,
        #[arg(long)]
        row_strict: bool,
        /// Enumerate paths explicitly instead of using the recurrence
        #[arg(long)]
        paths: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u128,
    },
    /// Right Pieri rule: IM[sentence] * H[word]
    Pieri {
        #[arg(long)]
        sentence: String,
        #[arg(long)]
        word: String,
    },
    /// H-expansion of an immaculate function via creation operators
    Creation {
        #[arg(long)]
        sentence: String,
    },
    /// Duality pairing of an NSym and a QSym expression
    Pair { nsym: String, qsym: String },
    /// Skew dual immaculate function
    Skew {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long, value_enum)]
        to: SkewTo,
        #[arg(long)]
        row_strict: bool,
    },
    /// Coproduct of a basis element
    Coproduct {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        sentence: String,
    },
    /// Immaculate structure constants of IM[left] * IM[right]
    Structure {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        row_strict: bool,
    },
    /// Product, coproduct or antipode of expressions
    Hopf {
        #[arg(value_enum)]
        op: HopfOp,
        expr: String,
        other: Option<String>,
    },
    /// The psi involution
    Psi { expr: String },
    /// Uncoloring map
    Uncolor { expr: String },
    /// Run a property battery
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u128,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SkewTo {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
    #[value(name = "DI")]
    Di,
}

#[derive(Clone, Copy, ValueEnum)]
enum HopfOp {
    Product,
    Coproduct,
    Antipode,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Out = Result<String, Failure>;

fn variant(row_strict: bool) -> Variant {
    if row_strict {
        Variant::RowStrict
    } else {
        Variant::Immaculate
    }
}

fn parse_expr(text: &str, al: &Alphabet) -> Result<Expr, Failure> {
    Expr::parse(text, al).map_err(|e| Failure::Domain(format!("cannot parse {text:?}: {e}")))
}

fn parse_sentence(text: &str, al: &Alphabet) -> Result<Sentence, Failure> {
    al.sentence(text).map_err(|e| Failure::Domain(format!("cannot parse sentence {text:?}: {e}")))
}

fn convert(e: &Expr, to: BasisTag) -> colorsym::Result<Expr> {
    match e.side() {
        Side::QSym => qsym::convert(e, to),
        Side::NSym => nsym::convert(e, to),
    }
}

fn tensor(t: &TensorExpr) -> String {
    let s = t.render();
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn run(cli: Cli) -> Out {
    let Some(letters) = cli.alphabet else {
        return Err(Failure::Usage("the --alphabet option is required".into()));
    };
    let al = Alphabet::new(&letters)?;
    match cli.command {
        Command::Expand { expr, to, json, uncolor: flat } => {
            let e = parse_expr(&expr, &al)?;
            let to = BasisTag::parse(&to)?;
            let got = convert(&e, to)?;
            Ok(if json {
                got.to_json().to_string()
            } else if flat {
                uncolor(&got).render()
            } else {
                got.render()
            })
        }
        Command::Tableaux { shape, ty, inner, row_strict, standard } => {
            let outer = parse_sentence(&shape, &al)?;
            let inner = match inner {
                Some(t) => parse_sentence(&t, &al)?,
                None => Sentence::empty(),
            };
            if left_quotient(&outer, &inner.to_weak()).is_none() {
                return Err(Failure::Domain(format!("{} is not left-contained in {}", al.render(&inner), al.render(&outer))));
            }
            let v = variant(row_strict);
            let mut blocks = Vec::new();
            if standard {
                for t in enumerate_skew_standard(&outer, &inner, v) {
                    blocks.push(format!("{}\ndescent {}", t.render(&al), al.render(&t.descent_composition())));
                }
            } else {
                let Some(ty) = ty else {
                    return Err(Failure::Usage("--type is required unless --standard is given".into()));
                };
                let ty = al.weak_sentence(&ty).map_err(|e| Failure::Domain(format!("cannot parse type {ty:?}: {e}")))?;
                for t in enumerate_skew_tableaux(&outer, &inner, &ty, v) {
                    blocks.push(t.render(&al));
                }
            }
            let n = blocks.len();
            blocks.push(format!("{n} tableaux"));
            Ok(blocks.join("\n\n"))
        }
        Command::Graph { degree, row_strict, root, format, cap } => {
            if degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            let g = DescentGraph::build_with_cap(degree, &al, variant(row_strict), cap)?;
            let root = root.map(|r| parse_sentence(&r, &al)).transpose()?;
            if let Some(r) = &root {
                if r.size() != degree {
                    return Err(Failure::Domain(format!("root {} has size {}, not {degree}", al.render(r), r.size())));
                }
            }
            match format {
                GraphFormat::Dot => Ok(g.to_dot(root.as_ref()).trim_end().to_string()),
                GraphFormat::Csv => {
                    let mut buf = Vec::new();
                    g.write_csv(root.as_ref(), &mut buf)?;
                    Ok(String::from_utf8(buf).expect("csv output is utf-8").trim_end().to_string())
                }
            }
        }
        Command::Coeffs { degree, uncolored, row_strict, paths, cap } => {
            if degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            let mut buf = Vec::new();
            if uncolored {
                write_coeff_csv(&uncolored_coeffs(degree, variant(row_strict))?, &mut buf)?;
            } else {
                let g = DescentGraph::build_with_cap(degree, &al, variant(row_strict), cap)?;
                g.write_inverse_csv(paths, &mut buf)?;
            }
            Ok(String::from_utf8(buf).expect("csv output is utf-8").trim_end().to_string())
        }
        Command::Pieri { sentence, word } => {
            let j = parse_sentence(&sentence, &al)?;
            let w = al.word(&word)?;
            if w.is_empty() {
                return Err(Error::EmptyOperatorWord.into());
            }
            Ok(nsym::pieri(&j, &w, &al).render())
        }
        Command::Creation { sentence } => {
            let j = parse_sentence(&sentence, &al)?;
            Ok(nsym::immaculate_in_h(&j, &al).render())
        }
        Command::Pair { nsym: n, qsym: q } => {
            let n = parse_expr(&n, &al)?;
            let q = parse_expr(&q, &al)?;
            Ok(nsym::pair(&n, &q)?.to_string())
        }
        Command::Skew { outer, inner, to, row_strict } => {
            let i = parse_sentence(&outer, &al)?;
            let j = parse_sentence(&inner, &al)?;
            if left_quotient(&i, &j.to_weak()).is_none() {
                return Err(Failure::Domain(format!("{} is not left-contained in {}", al.render(&j), al.render(&i))));
            }
            let target = match to {
                SkewTo::M => SkewTarget::M,
                SkewTo::F => SkewTarget::F,
                SkewTo::Di => SkewTarget::DI,
            };
            Ok(skew::skew_expand(&i, &j, target, variant(row_strict), &al)?.render())
        }
        Command::Coproduct { basis, sentence } => {
            let tag = BasisTag::parse(&basis)?;
            let s = parse_sentence(&sentence, &al)?;
            let e = Expr::basis(tag, &al, s);
            let t = match tag {
                BasisTag::H => nsym::coproduct_h(&e)?,
                _ => qsym::coproduct(&e)?,
            };
            Ok(tensor(&t))
        }
        Command::Structure { left, right, row_strict } => {
            let j = parse_sentence(&left, &al)?;
            let k = parse_sentence(&right, &al)?;
            Ok(skew::structure_constants(&j, &k, variant(row_strict), &al)?.render())
        }
        Command::Hopf { op, expr, other } => {
            let e = parse_expr(&expr, &al)?;
            match op {
                HopfOp::Product => {
                    let Some(other) = other else {
                        return Err(Failure::Usage("product needs two expressions".into()));
                    };
                    let f = parse_expr(&other, &al)?;
                    let got = match e.side() {
                        Side::QSym => qsym::product(&e, &f)?,
                        Side::NSym => nsym::product(&e, &f)?,
                    };
                    Ok(got.render())
                }
                HopfOp::Coproduct => {
                    let t = match e.tag() {
                        BasisTag::H => nsym::coproduct_h(&e)?,
                        _ => qsym::coproduct(&e)?,
                    };
                    Ok(tensor(&t))
                }
                HopfOp::Antipode => {
                    let got = match e.tag() {
                        BasisTag::H => nsym::antipode_h(&e)?,
                        _ => qsym::antipode_m(&e)?,
                    };
                    Ok(got.render())
                }
            }
        }
        Command::Psi { expr } => {
            let e = parse_expr(&expr, &al)?;
            let got = match e.side() {
                Side::QSym => qsym::psi(&e)?,
                Side::NSym => nsym::psi(&e)?,
            };
            Ok(got.render())
        }
        Command::Uncolor { expr } => Ok(uncolor(&parse_expr(&expr, &al)?).render()),
        Command::Verify { suite, max_degree, json, cap } => {
            let Some(s) = Suite::parse(&suite) else {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return Err(Failure::Usage(format!("unknown suite {suite:?}; expected one of {}", names.join(", "))));
            };
            let report = verify::run(s, &al, max_degree, cap)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else {
                report.summary()
            };
            match report.failures.first() {
                None => Ok(text),
                Some(f) => Err(Failure::Domain(format!(
                    "{text}\nfirst counterexample ({}): {}\n  expected: {}\n  got: {}",
                    f.name, f.input, f.expected, f.got
                ))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            if !text.is_empty() {
                let mut out = std::io::stdout().lock();
                // a closed pipe (e.g. `| head`) is not an error
                let _ = writeln!(out, "{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            Cli::command().error(clap::error::ErrorKind::MissingRequiredArgument, msg).exit();
        }
    }
}
