//! Command-line interface: enumeration, products, coproducts, pairings,
//! antipodes, power-series expansion, axiom/duality/oracle verification, and
//! the cyclotomic Weyl-relation checker. All output is deterministic
//! (canonical key order) and exact.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use qsymn::lincomb::{lincomb_to_json, tensor2_to_json};
use qsymn::{
    antipode, check_bialgebra, coeff_from_str, coeff_to_string, deconcat_coproduct,
    deconcat_coproduct_m, duality_pairing, enumerate_trees, expand_m, grafting_product,
    h_coproduct, h_product, pruning_coproduct, quasi_shuffle, run_full_check,
    verify_doubling_oracle, verify_nsym_qsym_duality, verify_quasi_shuffle_oracle,
    verify_tree_duality, AxiomReport, BasisKey, Coeff, DualTreeHopf, LinComb, MultiSeq, NsymHopf,
    QsymHopf, RocTree, Tensor2, TreeHopf, VerifyReport, DEFAULT_ENUM_CAP,
};

#[derive(Parser)]
#[command(name = "qsymn", version, about = "Exact Hopf-algebra computations on coloured trees, non-commutative and quasi-symmetric functions", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Tree enumeration
    Trees {
        #[command(subcommand)]
        cmd: TreesCmd,
    },
    /// Operations on single trees
    Tree {
        #[command(subcommand)]
        cmd: TreeCmd,
    },
    /// The bunch basis: juxtaposition product, rowwise coproduct, antipode
    Nsym {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// The monomial basis: quasi-shuffle product, deconcatenation, antipode
    Qsym {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Duality pairing of a monomial-side value against a bunch-side value
    Pair {
        /// Monomial side: multisequence or linear-combination JSON
        m_side: String,
        /// Bunch side: multisequence or linear-combination JSON
        h_side: String,
    },
    /// Expand a monomial function over positions 1..=BOUND
    Expand {
        /// Largest usable position
        #[arg(short = 'N', long = "bound")]
        bound: usize,
        /// The multisequence to expand
        multiseq: String,
    },
    /// Exhaustive verification suites
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Weyl commutation-relation checks over cyclotomic fields
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
}

#[derive(Subcommand)]
enum TreesCmd {
    /// List all trees with the given colour count and edge count
    Enumerate {
        /// Number of edge colours
        #[arg(short)]
        n: u32,
        /// Number of edges
        #[arg(short)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    /// Concatenation product (or grafting with --dual)
    Product {
        #[command(flatten)]
        opts: TreeOpts,
        a: String,
        b: String,
    },
    /// Pruning coproduct (or deconcatenation with --dual)
    Coproduct {
        #[command(flatten)]
        opts: TreeOpts,
        tree: String,
    },
}

#[derive(Args)]
struct TreeOpts {
    /// Colour count; defaults to the largest colour in the operands
    #[arg(short)]
    n: Option<u32>,
    /// Use the dual structure (grafting / deconcatenation)
    #[arg(long)]
    dual: bool,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Product {
        #[arg(short)]
        n: Option<u32>,
        i: String,
        j: String,
    },
    Coproduct {
        #[arg(short)]
        n: Option<u32>,
        i: String,
    },
    Antipode {
        #[arg(short)]
        n: Option<u32>,
        i: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Exhaustive graded-bialgebra axioms for one algebra
    Axioms {
        #[arg(long, value_enum)]
        algebra: Algebra,
        /// Check the dual structure instead (trees only)
        #[arg(long)]
        dual: bool,
        #[arg(short)]
        n: u32,
        #[arg(long)]
        max_weight: usize,
    },
    /// Adjointness of all four dual (product, coproduct) pairs
    Duality {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        max_weight: usize,
    },
    /// Power-series oracles for the quasi-shuffle and the doubling coproduct
    Oracle {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        max_weight: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Tree,
    Nsym,
    Qsym,
}

#[derive(Subcommand)]
enum WeylCmd {
    /// Run the full exact battery in one clock/shift dimension
    Check {
        #[arg(short)]
        d: usize,
        /// Four nonzero rational scale factors, comma-separated
        #[arg(long, value_delimiter = ',')]
        scales: Option<Vec<String>>,
        /// Singularity retries with refreshed scales
        #[arg(long, default_value_t = 4)]
        retries: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_tree(s: &str) -> Result<RocTree, String> {
    let t = s.trim();
    if t.starts_with('[') {
        serde_json::from_str(t).map_err(|e| format!("bad tree JSON `{t}`: {e}"))
    } else {
        RocTree::parse(t).map_err(|e| e.to_string())
    }
}

fn parse_multiseq(s: &str) -> Result<MultiSeq, String> {
    let t = s.trim();
    if t.starts_with('[') {
        serde_json::from_str(t).map_err(|e| format!("bad multisequence JSON `{t}`: {e}"))
    } else {
        MultiSeq::parse(t).map_err(|e| e.to_string())
    }
}

/// A pairing operand: either a bare multisequence or LinComb JSON
/// (`[{"coeff": "...", "key": ...}, ...]`).
fn parse_multiseq_lincomb(s: &str) -> Result<LinComb<MultiSeq>, String> {
    let t = s.trim();
    if t.starts_with('[') {
        if let Ok(items) = serde_json::from_str::<Vec<Value>>(t) {
            if items
                .iter()
                .all(|v| v.get("coeff").is_some() && v.get("key").is_some())
                && !items.is_empty()
            {
                let mut out = LinComb::zero();
                for item in items {
                    let c = coeff_from_str(item["coeff"].as_str().ok_or("coeff must be a string")?)
                        .map_err(|e| e.to_string())?;
                    let key: MultiSeq = serde_json::from_value(item["key"].clone())
                        .map_err(|e| format!("bad key: {e}"))?;
                    out.add_term(key, c);
                }
                return Ok(out);
            }
        }
    }
    Ok(LinComb::single(parse_multiseq(s)?))
}

fn infer_tree_n(n: Option<u32>, trees: &[&RocTree]) -> Result<u32, String> {
    let max = trees.iter().map(|t| t.max_colour()).max().unwrap_or(0);
    match n {
        Some(n) => {
            if max > n {
                Err(format!("operand uses colour {max} outside 1..={n}"))
            } else {
                Ok(n)
            }
        }
        None => Ok(max.max(1)),
    }
}

fn infer_multiseq_n(n: Option<u32>, seqs: &[&MultiSeq]) -> Result<u32, String> {
    let max = seqs.iter().map(|m| m.max_colour()).max().unwrap_or(0);
    match n {
        Some(n) => {
            if max > n {
                Err(format!("operand uses colour {max} outside 1..={n}"))
            } else {
                Ok(n)
            }
        }
        None => Ok(max.max(1)),
    }
}

fn print_lincomb<B: BasisKey + serde::Serialize>(lc: &LinComb<B>, format: Format) {
    match format {
        Format::Json => println!("{}", lincomb_to_json(lc)),
        Format::Pretty => {
            if lc.is_zero() {
                println!("0");
            }
            for (k, c) in lc.iter() {
                println!("{} {}", coeff_to_string(c), render_key(&k.encode()));
            }
        }
    }
}

fn print_tensor<B: BasisKey + serde::Serialize>(t: &Tensor2<B, B>, format: Format) {
    match format {
        Format::Json => println!("{}", tensor2_to_json(t)),
        Format::Pretty => {
            for ((a, b), c) in t.iter() {
                println!(
                    "{} {} ⊗ {}",
                    coeff_to_string(c),
                    render_key(&a.encode()),
                    render_key(&b.encode())
                );
            }
        }
    }
}

fn render_key(encoded: &str) -> &str {
    if encoded.is_empty() {
        "1"
    } else {
        encoded
    }
}

fn print_verify_reports(reports: &[VerifyReport], format: Format) -> ExitCode {
    let passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => println!("{}", serde_json::to_string(reports).expect("serializes")),
        Format::Pretty => {
            for r in reports {
                let status = if r.passed() { "pass" } else { "FAIL" };
                println!("{status} {} ({} cases)", r.name, r.cases);
                for f in &r.failures {
                    println!("  counterexample: {f}");
                }
            }
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_axiom_report(name: &str, report: &AxiomReport, format: Format) -> ExitCode {
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "algebra": name,
                "passed": report.passed(),
                "report": report,
            });
            println!("{value}");
        }
        Format::Pretty => {
            let status = if report.passed() { "pass" } else { "FAIL" };
            println!(
                "{status} {name}: {} keys, {} pairs, {} triples up to weight {}",
                report.keys_checked,
                report.pairs_checked,
                report.triples_checked,
                report.max_weight
            );
            for f in &report.failures {
                println!(
                    "  {} fails on [{}]: {}",
                    f.axiom,
                    f.keys.join(", "),
                    f.detail
                );
            }
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Trees { cmd } => match cmd {
            TreesCmd::Enumerate { n, k } => {
                if n == 0 {
                    return Err("colour count must be at least 1".into());
                }
                let trees = enumerate_trees(n, k, DEFAULT_ENUM_CAP).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => {
                        println!("{}", serde_json::to_string(&trees).expect("serializes"));
                    }
                    Format::Pretty => {
                        // listings print the canonical string encodings
                        for t in &trees {
                            println!("{}", render_key(&t.encode()));
                        }
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Tree { cmd } => match cmd {
            TreeCmd::Product { opts, a, b } => {
                let (a, b) = (parse_tree(&a)?, parse_tree(&b)?);
                let n = infer_tree_n(opts.n, &[&a, &b])?;
                let result = if opts.dual {
                    grafting_product(&a, &b)
                } else {
                    LinComb::single(TreeHopf::new(n).concat(&a, &b).map_err(|e| e.to_string())?)
                };
                print_lincomb(&result, format);
                Ok(ExitCode::SUCCESS)
            }
            TreeCmd::Coproduct { opts, tree } => {
                let t = parse_tree(&tree)?;
                infer_tree_n(opts.n, &[&t])?;
                let result = if opts.dual {
                    deconcat_coproduct(&t)
                } else {
                    pruning_coproduct(&t)
                };
                print_tensor(&result, format);
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Nsym { cmd } => match cmd {
            AlgebraCmd::Product { n, i, j } => {
                let (i, j) = (parse_multiseq(&i)?, parse_multiseq(&j)?);
                infer_multiseq_n(n, &[&i, &j])?;
                print_lincomb(&LinComb::single(h_product(&i, &j)), format);
                Ok(ExitCode::SUCCESS)
            }
            AlgebraCmd::Coproduct { n, i } => {
                let i = parse_multiseq(&i)?;
                infer_multiseq_n(n, &[&i])?;
                print_tensor(&h_coproduct(&i), format);
                Ok(ExitCode::SUCCESS)
            }
            AlgebraCmd::Antipode { n, i } => {
                let i = parse_multiseq(&i)?;
                let n = infer_multiseq_n(n, &[&i])?;
                let s =
                    antipode(&NsymHopf::new(n), &LinComb::single(i)).map_err(|e| e.to_string())?;
                print_lincomb(&s, format);
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Qsym { cmd } => match cmd {
            AlgebraCmd::Product { n, i, j } => {
                let (i, j) = (parse_multiseq(&i)?, parse_multiseq(&j)?);
                infer_multiseq_n(n, &[&i, &j])?;
                print_lincomb(&quasi_shuffle(&i, &j), format);
                Ok(ExitCode::SUCCESS)
            }
            AlgebraCmd::Coproduct { n, i } => {
                let i = parse_multiseq(&i)?;
                infer_multiseq_n(n, &[&i])?;
                print_tensor(&deconcat_coproduct_m(&i), format);
                Ok(ExitCode::SUCCESS)
            }
            AlgebraCmd::Antipode { n, i } => {
                let i = parse_multiseq(&i)?;
                let n = infer_multiseq_n(n, &[&i])?;
                let s =
                    antipode(&QsymHopf::new(n), &LinComb::single(i)).map_err(|e| e.to_string())?;
                print_lincomb(&s, format);
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Pair { m_side, h_side } => {
            let m = parse_multiseq_lincomb(&m_side)?;
            let h = parse_multiseq_lincomb(&h_side)?;
            let value = duality_pairing(&m, &h);
            match format {
                Format::Json => println!("{}", Value::String(coeff_to_string(&value))),
                Format::Pretty => println!("{}", coeff_to_string(&value)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Expand { bound, multiseq } => {
            let i = parse_multiseq(&multiseq)?;
            let poly = expand_m(&i, bound);
            print_lincomb(&poly.to_lincomb(), format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { cmd } => match cmd {
            VerifyCmd::Axioms {
                algebra,
                dual,
                n,
                max_weight,
            } => {
                let (name, report) = match (algebra, dual) {
                    (Algebra::Tree, false) => (
                        "trees (concatenation, pruning)",
                        check_bialgebra(&TreeHopf::new(n), max_weight),
                    ),
                    (Algebra::Tree, true) => (
                        "trees (grafting, deconcatenation)",
                        check_bialgebra(&DualTreeHopf::new(n), max_weight),
                    ),
                    (Algebra::Nsym, false) => (
                        "bunch basis",
                        check_bialgebra(&NsymHopf::new(n), max_weight),
                    ),
                    (Algebra::Qsym, false) => (
                        "monomial basis",
                        check_bialgebra(&QsymHopf::new(n), max_weight),
                    ),
                    (_, true) => return Err("--dual applies to the tree algebra only".into()),
                };
                Ok(print_axiom_report(name, &report, format))
            }
            VerifyCmd::Duality { n, max_weight } => {
                let reports = vec![
                    verify_tree_duality(n, max_weight).map_err(|e| e.to_string())?,
                    verify_nsym_qsym_duality(n, max_weight).map_err(|e| e.to_string())?,
                ];
                Ok(print_verify_reports(&reports, format))
            }
            VerifyCmd::Oracle { n, max_weight } => {
                let reports = vec![
                    verify_quasi_shuffle_oracle(n, max_weight).map_err(|e| e.to_string())?,
                    verify_doubling_oracle(n, max_weight, max_weight.max(1))
                        .map_err(|e| e.to_string())?,
                ];
                Ok(print_verify_reports(&reports, format))
            }
        },
        Command::Weyl { cmd } => match cmd {
            WeylCmd::Check { d, scales, retries } => {
                if d < 2 {
                    return Err("dimension must be at least 2".into());
                }
                let scales = match scales {
                    None => qsymn::default_scales(),
                    Some(parts) => {
                        if parts.len() != 4 {
                            return Err("--scales needs exactly four rationals".into());
                        }
                        let mut out: Vec<Coeff> = Vec::with_capacity(4);
                        for p in &parts {
                            out.push(coeff_from_str(p).map_err(|e| e.to_string())?);
                        }
                        [
                            out[0].clone(),
                            out[1].clone(),
                            out[2].clone(),
                            out[3].clone(),
                        ]
                    }
                };
                let report = run_full_check(d, scales, retries).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => {
                        println!("{}", serde_json::to_string(&report).expect("serializes"))
                    }
                    Format::Pretty => {
                        for c in &report.checks {
                            let status = if c.residual_is_zero { "ok  " } else { "FAIL" };
                            println!("{status} d={} {}", c.dimension, c.relation);
                        }
                    }
                }
                Ok(if report.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            }
        },
    }
}
