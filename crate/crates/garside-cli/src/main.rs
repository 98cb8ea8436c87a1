//! `garside`: JSON queries over the library and the named verification suites.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use garside::braid::{Braid, PositiveBraid, DEFAULT_ENUMERATION_BOUND};
use garside::chars::{char_table_a, char_table_b, default_q_samples, span_check_type_a};
use garside::conjugacy::{are_conjugate, centralizer_generators, super_summit_set};
use garside::coxeter::{make_system, CoxeterSystem, DiagramAutomorphism, Element, GenSet};
use garside::dcat::{chain_check, enumerate_f_roots, hom_search};
use garside::hecke::{e_set, fixed_divisible_count, lefschetz_trace_poly, variety_irreducible};
use garside::verify::{run_suite, Status, VerifyOptions, DEFAULT_BUDGET};
use garside::{Error, HeckeElt, Result};

#[derive(Parser)]
#[command(name = "garside", version, about = "Garside braid monoids, D⁺, Hecke algebras and character data")]
struct Cli {
    /// Pretty-print, and summarize verification reports line by line.
    #[arg(long, global = true)]
    human: bool,
    /// State budget for searches.
    #[arg(long, global = true, env = "GARSIDE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary of a finite Coxeter group.
    Group(GroupArgs),
    #[command(subcommand)]
    Braid(BraidCmd),
    #[command(subcommand)]
    Dcat(DcatCmd),
    #[command(subcommand)]
    Conj(ConjCmd),
    #[command(subcommand)]
    Hecke(HeckeCmd),
    #[command(subcommand)]
    Chars(CharsCmd),
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(garside::verify::SUITES))]
        suite: String,
        /// Largest rank parameter for suites that have one.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec such as A3, B2, D4, I2(6).
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct Twist {
    /// Diagram automorphism: `id` or the image list, e.g. "3,2,1".
    #[arg(long, default_value = "id")]
    f: String,
}

#[derive(Subcommand)]
enum BraidCmd {
    /// Left-greedy normal form of a positive word.
    Nf {
        #[command(flatten)]
        g: GroupArgs,
        /// Dot-separated generators, e.g. 1.2.1.
        #[arg(long)]
        word: String,
    },
    /// Δ-normal form of a signed word such as 1.-2.1.
    Group {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Whether a positive braid is a d-th F-root of π.
    Root {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        twist: Twist,
    },
}

#[derive(Subcommand)]
enum DcatCmd {
    /// Shortest chain of elementary morphisms between two objects of D⁺.
    Path {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[command(flatten)]
        twist: Twist,
    },
    /// All d-th F-roots of π.
    Roots {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        twist: Twist,
        /// Only examine lifts of W.
        #[arg(long)]
        lifts_only: bool,
    },
    /// Follow a chain of conjugators from an object of D⁺.
    Chain {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        word: String,
        /// Comma-separated conjugator words, e.g. "1.2.3.1,2.4,1.3".
        #[arg(long)]
        conj: String,
        #[command(flatten)]
        twist: Twist,
    },
}

#[derive(Subcommand)]
enum ConjCmd {
    /// Super summit set with its simple-conjugator graph.
    Sss {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decide conjugacy and return a conjugator y with y⁻¹ay = b.
    Test {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Generating set of the centralizer.
    Centralizer {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
enum HeckeCmd {
    /// Coefficient of T_at in T_v T_t.
    Coeff {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        at: String,
    },
    /// E-set of a positive braid relative to a parabolic subgroup.
    Eset {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        word: String,
        /// Comma-separated generators of I (default: all of S).
        #[arg(long)]
        set: Option<String>,
    },
    /// Lefschetz trace polynomial of x ↦ T_t F(x).
    Trace {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        twist: Twist,
    },
    /// Irreducibility criterion, cross-checked against the trace.
    Irr {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        twist: Twist,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableType {
    A,
    B,
}

#[derive(Subcommand)]
enum CharsCmd {
    /// Character table of S_n (type A_{n−1}) or of the hyperoctahedral group B_n.
    Table {
        #[arg(long = "type", value_enum, ignore_case = true)]
        kind: TableType,
        #[arg(long)]
        n: usize,
    },
    /// Cuspidal-span check for type A_n and regular order d.
    Span {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split('.').map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{t}` in `{s}`")))).collect()
}

fn parse_signed_word(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split('.').map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{t}` in `{s}`")))).collect()
}

fn positive(sys: &Arc<CoxeterSystem>, s: &str) -> Result<PositiveBraid> {
    PositiveBraid::of_word(sys, &parse_word(s)?)
}

fn signed(sys: &Arc<CoxeterSystem>, s: &str) -> Result<Braid> {
    Braid::of_signed_word(sys, &parse_signed_word(s)?)
}

fn element(sys: &Arc<CoxeterSystem>, s: &str) -> Result<Element> {
    sys.element(&parse_word(s)?)
}

fn twist(sys: &Arc<CoxeterSystem>, t: &Twist) -> Result<DiagramAutomorphism> {
    if t.f == "id" {
        return Ok(sys.identity_automorphism());
    }
    let images = t
        .f
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad automorphism `{}`", t.f))))
        .collect::<Result<Vec<usize>>>()?;
    sys.automorphism(&images)
}

fn element_json(sys: &CoxeterSystem, w: &Element) -> Value {
    json!({ "word": sys.word(w), "length": w.length() })
}

fn nf_json(b: &PositiveBraid) -> Value {
    json!({ "factors": b.factor_words() })
}

fn run(cli: &Cli) -> Result<(Value, Option<ExitCode>)> {
    let budget = cli.budget;
    let out = match &cli.command {
        Command::Group(g) => {
            let sys = make_system(&g.group)?;
            let classes = sys.conjugacy_classes()?;
            json!({
                "group": g.group,
                "rank": sys.rank(),
                "order": sys.group_order().to_string(),
                "n_positive_roots": sys.n_positive_roots(),
                "coxeter_matrix": sys.coxeter_matrix(),
                "degrees": sys.degrees()?,
                "longest_element": element_json(&sys, sys.w0()),
                "conjugacy_classes": classes.iter().map(|c| json!({
                    "representative": sys.word(&c.representative),
                    "size": c.len(),
                    "cuspidal": sys.is_cuspidal_class(c),
                })).collect::<Vec<_>>(),
            })
        }
        Command::Braid(cmd) => match cmd {
            BraidCmd::Nf { g, word } => nf_json(&positive(&make_system(&g.group)?, word)?),
            BraidCmd::Group { g, word } => signed(&make_system(&g.group)?, word)?.to_json(),
            BraidCmd::Root { g, word, d, twist: t } => {
                let sys = make_system(&g.group)?;
                let b = positive(&sys, word)?;
                let f = twist(&sys, t)?;
                json!({ "braid": nf_json(&b), "d": d, "is_root": b.is_f_root_of_pi(&f, *d) })
            }
        },
        Command::Dcat(cmd) => match cmd {
            DcatCmd::Path { g, from, to, twist: t } => {
                let sys = make_system(&g.group)?;
                let (a, b) = (positive(&sys, from)?, positive(&sys, to)?);
                let path = hom_search(&a, &b, &twist(&sys, t)?, budget)?;
                json!({ "from": a.factor_words(), "to": b.factor_words(), "path": path.iter().map(PositiveBraid::word).collect::<Vec<_>>() })
            }
            DcatCmd::Roots { g, d, twist: t, lifts_only } => {
                let sys = make_system(&g.group)?;
                let roots = enumerate_f_roots(&sys, &twist(&sys, t)?, *d, *lifts_only, DEFAULT_ENUMERATION_BOUND)?;
                json!({ "d": d, "count": roots.len(), "roots": roots.iter().map(PositiveBraid::factor_words).collect::<Vec<_>>() })
            }
            DcatCmd::Chain { g, word, conj, twist: t } => {
                let sys = make_system(&g.group)?;
                let b = positive(&sys, word)?;
                let conj = conj.split(',').map(|c| positive(&sys, c)).collect::<Result<Vec<_>>>()?;
                let report = chain_check(&b, &conj, &twist(&sys, t)?, false)?;
                json!({
                    "objects": report.objects.iter().map(PositiveBraid::factor_words).collect::<Vec<_>>(),
                    "product": report.product.word(),
                    "closes": report.closes,
                })
            }
        },
        Command::Conj(cmd) => match cmd {
            ConjCmd::Sss { g, word } => {
                let graph = super_summit_set(&signed(&make_system(&g.group)?, word)?, budget)?;
                let sys = graph.base.system().clone();
                let (inf, sup) = graph.inf_sup();
                json!({
                    "inf": inf,
                    "sup": sup,
                    "to_summit": graph.to_summit.to_json(),
                    "vertices": graph.vertices.iter().map(Braid::to_json).collect::<Vec<_>>(),
                    "edges": graph.edges.iter().map(|(a, s, b)| json!([a, sys.word(s), b])).collect::<Vec<_>>(),
                })
            }
            ConjCmd::Test { g, word, other } => {
                let sys = make_system(&g.group)?;
                match are_conjugate(&signed(&sys, word)?, &signed(&sys, other)?, budget) {
                    Ok(y) => json!({ "conjugate": true, "conjugator": y.to_json() }),
                    Err(Error::NotConjugate) => json!({ "conjugate": false }),
                    Err(e) => return Err(e),
                }
            }
            ConjCmd::Centralizer { g, word } => {
                let gens = centralizer_generators(&signed(&make_system(&g.group)?, word)?, budget)?;
                json!({ "generators": gens.iter().map(Braid::to_json).collect::<Vec<_>>() })
            }
        },
        Command::Hecke(cmd) => match cmd {
            HeckeCmd::Coeff { g, v, t, at } => {
                let sys = make_system(&g.group)?;
                let prod = HeckeElt::basis(&sys, &element(&sys, v)?).mul(&HeckeElt::of_braid(&positive(&sys, t)?))?;
                prod.coeff(&element(&sys, at)?).to_json()
            }
            HeckeCmd::Eset { g, word, set } => {
                let sys = make_system(&g.group)?;
                let set = match set {
                    None => sys.generators(),
                    Some(s) => {
                        let mut out = GenSet::default();
                        for x in s.split(',') {
                            let i = x.trim().parse().map_err(|_| Error::Parse(format!("bad generator `{x}`")))?;
                            sys.check_index(i)?;
                            out.insert(i);
                        }
                        out
                    }
                };
                let e = e_set(&positive(&sys, word)?, set)?;
                json!({ "elements": e.iter().map(|v| sys.word(v)).collect::<Vec<_>>() })
            }
            HeckeCmd::Trace { g, word, twist: t } => {
                let sys = make_system(&g.group)?;
                lefschetz_trace_poly(&positive(&sys, word)?, &twist(&sys, t)?)?.to_json()
            }
            HeckeCmd::Irr { g, word, twist: t } => {
                let sys = make_system(&g.group)?;
                let (b, f) = (positive(&sys, word)?, twist(&sys, t)?);
                json!({
                    "irreducible": variety_irreducible(&b, &f)?,
                    "trace": lefschetz_trace_poly(&b, &f)?.to_json(),
                    "fixed_divisible_count": fixed_divisible_count(&b, &f)?,
                })
            }
        },
        Command::Chars(cmd) => match cmd {
            CharsCmd::Table { kind: TableType::A, n } => serde_json::to_value(char_table_a(*n)?).map_err(ser)?,
            CharsCmd::Table { kind: TableType::B, n } => serde_json::to_value(char_table_b(*n)?).map_err(ser)?,
            CharsCmd::Span { n, d } => serde_json::to_value(span_check_type_a(*n, *d, &default_q_samples())?).map_err(ser)?,
        },
        Command::Verify { suite, n } => {
            let report = run_suite(suite, &VerifyOptions { n: *n, budget })?;
            if cli.human {
                for c in &report.claims {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIP",
                    };
                    eprintln!("{tag} {}: {}", c.id, c.anchor);
                }
            }
            let code = ExitCode::from(report.exit_code() as u8);
            return Ok((report.to_json(), Some(code)));
        }
    };
    Ok((out, None))
}

fn ser(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, code)) => {
            let text = if cli.human { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) };
            println!("{}", text.expect("JSON values serialize"));
            code.unwrap_or(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
