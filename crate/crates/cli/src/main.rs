//! `triplekit`: exact verification of Lie triple system identities from JSON
//! documents or built-in fixtures.
//!
//! Exit codes: 0 = all checks passed, 1 = a check failed (or a mathematical
//! precondition like "is a cocycle" does not hold), 2 = malformed or
//! unresolvable input.

mod registry;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use triplekit::cohomology::{o_operator_cohomology, yamaguti_cohomology};
use triplekit::deformations::{
    check_equivalence, check_formal, check_nijenhuis_element, check_trivial_deformation,
    rigidity_certificate, DeformationSeries, EquivalencePair,
};
use triplekit::doc::Document;
use triplekit::exactla::Matrix;
use triplekit::lie_bridge::{
    check_lie_o_operator, check_lie_rep, transfer_1cocycle, transfer_2cocycle, transfer_o_operator,
    transfer_t_1cocycle, transfer_t_2cocycle,
};
use triplekit::lts::{check_lie_axioms, check_lts_axioms, wedge_pairs, Bivector};
use triplekit::operators::{
    check_nijenhuis_operator, check_o_morphism, check_o_operator, check_prelts_axioms,
    check_rota_baxter, NijenhuisCandidate, OOperator, OOperatorMorphism,
};
use triplekit::reps::check_rep_axioms;
use triplekit::Error;

#[derive(Parser)]
#[command(name = "triplekit", version, about = "Exact Lie triple system toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Lts,
    Lie,
    Rep,
    Rb,
    #[value(name = "o-op")]
    OOp,
    Nijenhuis,
    Prelts,
    Morphism,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Yamaguti,
    #[value(name = "o-operator")]
    OOperator,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms or defining identity of a structure.
    Verify {
        #[arg(long, value_enum)]
        kind: VerifyKind,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        /// Built-in fixture name (e.g. paper/dim2), a file in
        /// $TRIPLEKIT_FIXTURES, or a path to a JSON document.
        target: String,
    },
    /// Cocycle/coboundary/quotient dimensions at one odd degree.
    Cohomology {
        #[arg(long, value_enum, default_value = "yamaguti")]
        flavor: Flavor,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// Deformation-theoretic checks for an operator document.
    Deform {
        #[command(subcommand)]
        sub: DeformCommand,
    },
    /// Transfers between Lie algebra pairs and triple system pairs.
    Bridge {
        #[command(subcommand)]
        sub: BridgeCommand,
    },
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Order-by-order formal deformation equations.
    Check {
        /// Pad or truncate the coefficient list to this order.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// Equivalence conditions between two order-1 deformations.
    Equivalence {
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// Nijenhuis-element membership of the document's bivector.
    Nijenhuis {
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// One-sided rigidity certificate.
    Rigidity {
        /// Candidate family: currently `basis` (the full wedge basis).
        #[arg(long, default_value = "basis")]
        candidates: String,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// Triviality of a deformation under the supplied equivalence pair.
    Trivial {
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
}

#[derive(Subcommand)]
enum BridgeCommand {
    /// Emit the associated triple-system pair of a Lie pair document.
    FromLie {
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
    /// Transfer a degree-1 or degree-2 cocycle (operator-level when the
    /// document carries an operator).
    TransferCocycle {
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
        target: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

/// Input and shape problems are exit 2; failed mathematical preconditions are
/// exit 1.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_)
        | Error::DimensionMismatch(_)
        | Error::AmbientMismatch(_, _)
        | Error::EvenDegree(_)
        | Error::ConflictingBrackets(_) => 2,
        _ => 1,
    }
}

fn load(target: &str) -> Result<Document, Error> {
    if let Some(doc) = registry::builtin(target) {
        return Ok(doc);
    }
    let mut candidates: Vec<PathBuf> = Vec::new();
    if let Ok(dir) = std::env::var("TRIPLEKIT_FIXTURES") {
        let base = PathBuf::from(dir);
        candidates.push(base.join(target));
        candidates.push(base.join(format!("{target}.json")));
    }
    candidates.push(PathBuf::from(target));
    for path in candidates {
        if path.is_file() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            return Document::parse(&text);
        }
    }
    Err(Error::InvalidInput(format!(
        "target `{target}` is neither a built-in fixture nor a readable file"
    )))
}

fn emit(output: Output, passed: bool, value: serde_json::Value) {
    match output {
        Output::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        Output::Text => {
            print_text(&value, 0);
            println!("overall: {}", if passed { "pass" } else { "FAIL" });
        }
    }
}

fn print_text(value: &serde_json::Value, indent: usize) {
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                match v {
                    serde_json::Value::Object(_) | serde_json::Value::Array(_) => {
                        println!("{:indent$}{k}:", "", indent = indent);
                        print_text(v, indent + 2);
                    }
                    _ => println!("{:indent$}{k}: {v}", "", indent = indent),
                }
            }
        }
        serde_json::Value::Array(items) => {
            for v in items {
                print_text(v, indent);
            }
        }
        other => println!("{:indent$}{other}", "", indent = indent),
    }
}

fn verdict(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify { kind, output, target } => {
            let doc = load(&target)?;
            let (passed, value) = run_verify(kind, &doc)?;
            emit(output, passed, value);
            Ok(verdict(passed))
        }
        Command::Cohomology {
            flavor,
            degree,
            output,
            target,
        } => {
            let doc = load(&target)?;
            let report = match flavor {
                Flavor::Yamaguti => yamaguti_cohomology(&doc.require_pair()?, degree)?,
                Flavor::OOperator => {
                    let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
                    o_operator_cohomology(&op, degree)?
                }
            };
            emit(output, true, serde_json::to_value(&report).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Deform { sub } => run_deform(sub),
        Command::Bridge { sub } => run_bridge(sub),
    }
}

fn run_verify(kind: VerifyKind, doc: &Document) -> Result<(bool, serde_json::Value), Error> {
    Ok(match kind {
        VerifyKind::Lts => {
            let report = check_lts_axioms(&doc.require_lts()?);
            (
                report.passed(),
                json!({"kind": "lts", "passed": report.passed(), "report": report}),
            )
        }
        VerifyKind::Lie => {
            let report = check_lie_axioms(&doc.require_lie()?);
            (
                report.passed(),
                json!({"kind": "lie", "passed": report.passed(), "report": report}),
            )
        }
        VerifyKind::Rep => {
            if doc.lie_algebra.is_some() && doc.algebra.is_none() {
                let pair = doc.require_lie_pair()?;
                let report = check_lie_rep(pair.rep());
                return Ok((
                    report.passed,
                    json!({"kind": "lie-rep", "passed": report.passed, "report": report}),
                ));
            }
            let pair = doc.require_pair()?;
            let report = check_rep_axioms(pair.rep());
            (
                report.passed(),
                json!({"kind": "rep", "passed": report.passed(), "report": report}),
            )
        }
        VerifyKind::Rb => {
            if doc.lie_algebra.is_some() && doc.algebra.is_none() {
                let pair = doc.require_lie_pair()?;
                let report = check_lie_o_operator(&pair, &doc.require_operator()?)?;
                return Ok((
                    report.passed,
                    json!({"kind": "lie-o-op", "passed": report.passed, "report": report}),
                ));
            }
            let report = check_rota_baxter(&doc.require_lts()?, &doc.require_operator()?)?;
            (
                report.passed,
                json!({"kind": "rb", "passed": report.passed, "report": report}),
            )
        }
        VerifyKind::OOp => {
            if doc.lie_algebra.is_some() && doc.algebra.is_none() {
                let pair = doc.require_lie_pair()?;
                let report = check_lie_o_operator(&pair, &doc.require_operator()?)?;
                return Ok((
                    report.passed,
                    json!({"kind": "lie-o-op", "passed": report.passed, "report": report}),
                ));
            }
            let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
            let report = check_o_operator(&op)?;
            (
                report.passed,
                json!({"kind": "o-op", "passed": report.passed, "report": report}),
            )
        }
        VerifyKind::Nijenhuis => {
            let matrix = match &doc.nijenhuis {
                Some(m) => m.to_matrix()?,
                None => doc.require_operator()?,
            };
            let nc = NijenhuisCandidate {
                algebra: doc.require_lts()?,
                matrix,
            };
            let report = check_nijenhuis_operator(&nc)?;
            (
                report.passed,
                json!({"kind": "nijenhuis", "passed": report.passed, "report": report}),
            )
        }
        VerifyKind::Prelts => {
            let p = doc
                .prelts
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("document has no `prelts` section".into()))?
                .to_prelts()?;
            let report = check_prelts_axioms(&p);
            (
                report.passed(),
                json!({"kind": "prelts", "passed": report.passed(), "report": report}),
            )
        }
        VerifyKind::Morphism => {
            let pair = doc.require_pair()?;
            let source = OOperator::new(pair.clone(), doc.require_operator()?)?;
            let target_matrix = match &doc.target_operator {
                Some(m) => m.to_matrix()?,
                None => source.matrix().clone(),
            };
            let target = OOperator::new(pair, target_matrix)?;
            let phi = doc
                .phi
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("document has no `phi` section".into()))?
                .to_matrix()?;
            let psi = doc
                .psi
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("document has no `psi` section".into()))?
                .to_matrix()?;
            let m = OOperatorMorphism {
                source,
                target,
                phi,
                psi,
            };
            let report = check_o_morphism(&m)?;
            (
                report.passed(),
                json!({"kind": "morphism", "passed": report.passed(), "report": report}),
            )
        }
    })
}

/// Builds the series from the document. An explicit `order` pads or truncates
/// to exactly that many coefficients; otherwise the truncation order defaults
/// to 3 (the identity is cubic) or the coefficient count, whichever is larger.
fn document_series(doc: &Document, order: Option<usize>) -> Result<DeformationSeries, Error> {
    let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
    let mut coefficients: Vec<Matrix> = match &doc.coefficients {
        Some(list) => list.iter().map(|m| m.to_matrix()).collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let n = order.unwrap_or_else(|| coefficients.len().max(3));
    let shape = (op.matrix().rows(), op.matrix().cols());
    coefficients.resize(n, Matrix::zeros(shape.0, shape.1));
    DeformationSeries::new(op, coefficients)
}

fn document_bivector(doc: &Document, dim: usize) -> Result<Bivector, Error> {
    match &doc.bivector {
        Some(b) => b.to_bivector(),
        None => Ok(Bivector::zero(dim)),
    }
}

fn run_deform(sub: DeformCommand) -> Result<ExitCode, Error> {
    match sub {
        DeformCommand::Check { order, output, target } => {
            let doc = load(&target)?;
            let series = document_series(&doc, order)?;
            let report = check_formal(&series);
            let passed = report.passed();
            emit(
                output,
                passed,
                json!({"command": "deform-check", "passed": passed, "report": report}),
            );
            Ok(verdict(passed))
        }
        DeformCommand::Equivalence { output, target } => {
            let doc = load(&target)?;
            let base = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
            let d1 = document_series(&doc, None)?;
            let second: Vec<Matrix> = doc
                .second_coefficients
                .as_ref()
                .ok_or_else(|| {
                    Error::InvalidInput("document has no `second_coefficients` section".into())
                })?
                .iter()
                .map(|m| m.to_matrix())
                .collect::<Result<_, _>>()?;
            let d2 = DeformationSeries::new(base.clone(), second)?;
            let x = document_bivector(&doc, base.pair().algebra().dim())?;
            let report = check_equivalence(&base, &d1, &d2, &x)?;
            let passed = report.passed();
            emit(
                output,
                passed,
                json!({"command": "deform-equivalence", "passed": passed, "report": report}),
            );
            Ok(verdict(passed))
        }
        DeformCommand::Nijenhuis { output, target } => {
            let doc = load(&target)?;
            let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
            let x = document_bivector(&doc, op.pair().algebra().dim())?;
            let report = check_nijenhuis_element(&op, &x)?;
            let member = report.member();
            emit(
                output,
                member,
                json!({"command": "deform-nijenhuis", "member": member, "report": report}),
            );
            Ok(verdict(member))
        }
        DeformCommand::Rigidity {
            candidates,
            output,
            target,
        } => {
            if candidates != "basis" {
                return Err(Error::InvalidInput(format!(
                    "unknown candidate family `{candidates}` (supported: basis)"
                )));
            }
            let doc = load(&target)?;
            let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
            let n = op.pair().algebra().dim();
            let family: Vec<Bivector> = wedge_pairs(n)
                .into_iter()
                .map(|(i, j)| Bivector::from_pair(n, i, j).expect("valid pair"))
                .collect();
            let report = rigidity_certificate(&op, &family)?;
            emit(
                output,
                report.certified,
                json!({"command": "deform-rigidity", "report": report}),
            );
            Ok(ExitCode::SUCCESS)
        }
        DeformCommand::Trivial { output, target } => {
            let doc = load(&target)?;
            let op = OOperator::new(doc.require_pair()?, doc.require_operator()?)?;
            let series = document_series(&doc, None)?;
            let x = document_bivector(&doc, op.pair().algebra().dim())?;
            let to_mats = |list: &Option<Vec<triplekit::doc::MatrixDoc>>| -> Result<Vec<Matrix>, Error> {
                match list {
                    Some(v) => v.iter().map(|m| m.to_matrix()).collect(),
                    None => Ok(Vec::new()),
                }
            };
            let pair = EquivalencePair {
                bivector: x,
                higher_phi: to_mats(&doc.higher_phi)?,
                higher_psi: to_mats(&doc.higher_psi)?,
            };
            let report = check_trivial_deformation(&op, &series, &pair)?;
            let passed = report.trivial();
            emit(
                output,
                passed,
                json!({"command": "deform-trivial", "trivial": passed, "report": report}),
            );
            Ok(verdict(passed))
        }
    }
}

fn run_bridge(sub: BridgeCommand) -> Result<ExitCode, Error> {
    match sub {
        BridgeCommand::FromLie { output, target } => {
            let doc = load(&target)?;
            let pair = doc.require_lie_pair()?;
            let lts_pair = triplekit::lie_bridge::lts_rep_from_lie(&pair)?;
            let mut out = Document::from_lts_pair(&lts_pair);
            // Carry a verified operator over when present.
            if let Some(op) = &doc.operator {
                let t = op.to_matrix()?;
                transfer_o_operator(&pair, &t)?;
                out.operator = Some(triplekit::doc::MatrixDoc::from_matrix(&t));
            }
            match output {
                Output::Json => print!("{}", out.emit()),
                Output::Text => {
                    println!("transferred pair: dim {}", lts_pair.algebra().dim());
                    println!("module dim: {}", lts_pair.rep().module_dim());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        BridgeCommand::TransferCocycle { output, target } => {
            let doc = load(&target)?;
            let pair = doc.require_lie_pair()?;
            let n = pair.algebra().dim();
            let m = pair.rep().module_dim();
            let cdoc = doc
                .cochain
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("document has no `cochain` section".into()))?;
            let (value, passed) = if let Some(opdoc) = &doc.operator {
                let t = opdoc.to_matrix()?;
                // Operator-level cochains live on V with values in L.
                let f = cdoc.to_lie_cochain(m, n)?;
                let (transferred, v) = match cdoc.degree {
                    1 => transfer_t_1cocycle(&pair, &t, &f)?,
                    2 => transfer_t_2cocycle(&pair, &t, &f)?,
                    d => {
                        return Err(Error::InvalidInput(format!(
                            "transfer supports degrees 1 and 2, got {d}"
                        )))
                    }
                };
                (
                    json!({
                        "command": "bridge-transfer-cocycle",
                        "level": "operator",
                        "degree": cdoc.degree,
                        "transferred_degree": transferred.degree(),
                        "is_cocycle": v.transferred_cocycle,
                    }),
                    v.transferred_cocycle,
                )
            } else {
                let f = cdoc.to_lie_cochain(n, m)?;
                let (transferred, report) = match cdoc.degree {
                    1 => transfer_1cocycle(&pair, &f)?,
                    2 => transfer_2cocycle(&pair, &f)?,
                    d => {
                        return Err(Error::InvalidInput(format!(
                            "transfer supports degrees 1 and 2, got {d}"
                        )))
                    }
                };
                let ok = report.is_cocycle();
                (
                    json!({
                        "command": "bridge-transfer-cocycle",
                        "level": "pair",
                        "degree": cdoc.degree,
                        "transferred_degree": transferred.degree(),
                        "is_cocycle": ok,
                        "report": report,
                    }),
                    ok,
                )
            };
            emit(output, passed, value);
            Ok(verdict(passed))
        }
    }
}
