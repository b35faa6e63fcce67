//! Command-line front end: generation, verification, classification,
//! quotients, radicals, antichain invariants, projection-problem solving,
//! topologies, and the set-function extractions, over canonical JSON
//! documents.
//!
//! Exit codes: 0 success, 1 domain error (violated hypothesis or guard),
//! 2 usage or schema error, 3 failed internal certificate.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use pomonoid::ideal::{classify, quotient, radical_of};
use pomonoid::kappa::{kappa, reduce_set, solve_projection_problem};
use pomonoid::monoid::{build_family, verify_axioms, Family, FiniteMonoid};
use pomonoid::projection::{all_translates, enumerate_projections, EndoMap, ProjKind};
use pomonoid::setfunc::{
    canonical_blocks, halmos_savage_extract, kelley_report, kelley_separation_lp, FunctionFamily,
    Norm, SetFunction,
};
use pomonoid::subset::ElementSubset;
use pomonoid::topology::{order_topology, prime_topology, specialization_dot};
use pomonoid::{Error, Rat, Result, DEFAULT_MAP_GUARD, DEFAULT_SIZE_GUARD};
use pomonoid_cli::{
    format_rational, parse_document, serialize_endomap, serialize_ideal, serialize_monoid,
    serialize_report, Check, Document, IdealDoc, Report,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pomonoid",
    version,
    about = "finite positively ordered monoid toolkit"
)]
struct Cli {
    /// Size and enumeration guard; defaults depend on the operation.
    #[arg(long, global = true)]
    guard: Option<u64>,

    /// Vector norm for extraction weights.
    #[arg(long, global = true, value_enum, default_value_t = NormArg::L1)]
    norm: NormArg,

    /// Output mode for report-producing commands (documents are always
    /// canonical JSON).
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    L1,
    Linf,
}

impl From<NormArg> for Norm {
    fn from(v: NormArg) -> Norm {
        match v {
            NormArg::L1 => Norm::L1,
            NormArg::Linf => Norm::LInf,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum QfamArg {
    /// All translates.
    Translates,
    /// All order projections.
    Order,
    /// All monoid projections.
    Monoid,
}

#[derive(Clone, Copy, ValueEnum)]
enum TopologyKind {
    Order,
    Prime,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a monoid: chain N | boolean K | capped N CAP | grid D L.
    Gen { family: String, params: Vec<usize> },
    /// Check every monoid and order axiom; exit 0 only if all hold.
    Verify { monoid: String },
    /// Classify a subset: monoid/order/radical/prime/dedekind flags.
    Classify { monoid: String, ideal: String },
    /// Quotient by a monoid ideal; emits the quotient monoid document.
    Quotient { monoid: String, ideal: String },
    /// Radical of an ideal; emits an ideal document.
    Radical { monoid: String, ideal: String },
    /// Antichain invariant: prints kappa and one maximum antichain.
    Kappa {
        monoid: String,
        #[arg(long, default_value = "all")]
        set: String,
        #[arg(long, default_value = "zero")]
        ideal: String,
    },
    /// Reduce a set for the projection problem; emits the reduced set.
    Reduce {
        monoid: String,
        #[arg(long, default_value = "all")]
        set: String,
        #[arg(long, default_value = "zero")]
        ideal: String,
        #[arg(long, value_enum, default_value_t = QfamArg::Translates)]
        qfam: QfamArg,
    },
    /// Solve the projection problem; emits the first projector or "none".
    Project {
        monoid: String,
        #[arg(long, default_value = "all")]
        set: String,
        #[arg(long, default_value = "zero")]
        ideal: String,
        #[arg(long, value_enum, default_value_t = QfamArg::Translates)]
        qfam: QfamArg,
    },
    /// Emit the order or prime topology; --dot renders the specialization
    /// order.
    Topology {
        monoid: String,
        #[arg(long, value_enum)]
        kind: TopologyKind,
        #[arg(long)]
        dot: bool,
    },
    /// Extract a detecting sequence for a set function.
    HsExtract {
        monoid: String,
        setfunction: String,
        #[arg(long, default_value = "all")]
        set: String,
    },
    /// Full extraction report for a family of set functions.
    Kelley { monoid: String, family: String },
    /// Exact separation optima over blocks (canonical level sets by
    /// default).
    LpSeparate {
        monoid: String,
        family: String,
        #[arg(long)]
        block: Vec<String>,
    },
}

struct Loader {
    stdin_used: bool,
}

impl Loader {
    fn read_spec(&mut self, spec: &str) -> Result<String> {
        if spec == "-" {
            if self.stdin_used {
                return Err(Error::structure("stdin may be read only once"));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::structure(format!("reading stdin: {e}")))?;
            Ok(buf)
        } else {
            std::fs::read_to_string(spec)
                .map_err(|e| Error::structure(format!("reading {spec}: {e}")))
        }
    }

    fn document(&mut self, spec: &str) -> Result<Document> {
        let text = self.read_spec(spec)?;
        parse_document(&text, &|path| {
            std::fs::read_to_string(path)
                .map_err(|e| Error::structure(format!("reading {path}: {e}")))
        })
    }

    fn monoid(&mut self, spec: &str) -> Result<FiniteMonoid> {
        match self.document(spec)? {
            Document::Monoid(m) => Ok(m),
            _ => Err(Error::structure(format!(
                "{spec}: expected a monoid document"
            ))),
        }
    }

    fn subset(&mut self, spec: &str, m: &FiniteMonoid) -> Result<ElementSubset> {
        match spec {
            "zero" => Ok(ElementSubset::singleton(m.len(), m.zero())),
            "empty" => Ok(ElementSubset::empty(m.len())),
            "all" => Ok(ElementSubset::full(m.len())),
            "nonzero" => {
                let mut s = ElementSubset::full(m.len());
                s.remove(m.zero());
                Ok(s)
            }
            _ => match self.document(spec)? {
                Document::Ideal(doc) => {
                    if doc.monoid.len() != m.len() {
                        return Err(Error::structure(format!(
                            "{spec}: ideal carrier has {} elements, monoid has {}",
                            doc.monoid.len(),
                            m.len()
                        )));
                    }
                    ElementSubset::from_indices(m.len(), &doc.members)
                }
                _ => Err(Error::structure(format!(
                    "{spec}: expected an ideal document"
                ))),
            },
        }
    }

    fn setfunction(&mut self, spec: &str, m: &FiniteMonoid) -> Result<SetFunction<Rat>> {
        match self.document(spec)? {
            Document::SetFunc(doc) => SetFunction::new(m, doc.dim, doc.values),
            _ => Err(Error::structure(format!(
                "{spec}: expected a setfunction document"
            ))),
        }
    }

    fn family(&mut self, spec: &str, m: &FiniteMonoid) -> Result<FunctionFamily<Rat>> {
        match self.document(spec)? {
            Document::Family(docs) => {
                let members = docs
                    .into_iter()
                    .map(|doc| SetFunction::new(m, doc.dim, doc.values))
                    .collect::<Result<Vec<_>>>()?;
                FunctionFamily::new(m, members)
            }
            _ => Err(Error::structure(format!(
                "{spec}: expected a family document"
            ))),
        }
    }
}

fn qfam_maps(m: &FiniteMonoid, arg: QfamArg, map_guard: u64) -> Result<Vec<EndoMap>> {
    match arg {
        QfamArg::Translates => Ok(all_translates(m)),
        QfamArg::Order => enumerate_projections(m, ProjKind::Order, map_guard),
        QfamArg::Monoid => enumerate_projections(m, ProjKind::Monoid, map_guard),
    }
}

fn ideal_doc(m: &FiniteMonoid, s: &ElementSubset) -> String {
    serialize_ideal(&IdealDoc {
        monoid: m.clone(),
        members: s.members(),
    })
}

fn names(m: &FiniteMonoid, indices: &[usize]) -> String {
    indices
        .iter()
        .map(|&i| m.name(i))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<i32> {
    let mut loader = Loader { stdin_used: false };
    let size_guard = cli.guard.map(|g| g as usize).unwrap_or(DEFAULT_SIZE_GUARD);
    let map_guard = cli.guard.unwrap_or(DEFAULT_MAP_GUARD);
    let ideal_limit = cli.guard.map(|g| g as usize).unwrap_or(1 << 16);
    let norm: Norm = cli.norm.into();

    match cli.command {
        Cmd::Gen { family, params } => {
            let spec = match (family.as_str(), params.as_slice()) {
                ("chain", [n]) => Family::Chain(*n),
                ("boolean", [k]) => Family::BooleanAlgebra(*k),
                ("capped", [n, cap]) => Family::CappedExponent(*n, *cap),
                ("grid", [d, l]) => Family::Grid(*d, *l),
                _ => {
                    return Err(Error::structure(
                        "gen expects: chain N | boolean K | capped N CAP | grid D L",
                    ))
                }
            };
            let m = build_family(spec, size_guard)?;
            println!("{}", serialize_monoid(&m));
            Ok(0)
        }
        Cmd::Verify { monoid } => {
            let m = loader.monoid(&monoid)?;
            let report = verify_axioms(&m);
            match cli.output {
                OutputArg::Text => {
                    for (name, check) in report.checks() {
                        if check.ok {
                            println!("{name} ok");
                        } else {
                            let witness = check
                                .witness
                                .as_ref()
                                .map(|w| {
                                    w.iter()
                                        .map(|x| x.to_string())
                                        .collect::<Vec<_>>()
                                        .join(" ")
                                })
                                .unwrap_or_default();
                            println!("{name} FAIL {witness}");
                        }
                    }
                }
                OutputArg::Json => {
                    let checks = report
                        .checks()
                        .into_iter()
                        .map(|(name, check)| Check {
                            name: name.to_string(),
                            pass: check.ok,
                            witness: check.witness.as_ref().map(|w| json!(w)),
                        })
                        .collect();
                    println!("{}", serialize_report(&Report { checks }));
                }
            }
            Ok(if report.all_ok() { 0 } else { 1 })
        }
        Cmd::Classify { monoid, ideal } => {
            let m = loader.monoid(&monoid)?;
            let s = loader.subset(&ideal, &m)?;
            let c = classify(&m, &s);
            let flags = [
                ("monoid_ideal", c.flags.monoid_ideal),
                ("order_ideal", c.flags.order_ideal),
                ("radical", c.flags.radical),
                ("prime", c.flags.prime),
                ("dedekind", c.flags.dedekind),
            ];
            match cli.output {
                OutputArg::Text => {
                    for (name, value) in flags {
                        println!("{name} {value}");
                    }
                }
                OutputArg::Json => {
                    let checks = flags
                        .into_iter()
                        .map(|(name, value)| Check {
                            name: name.to_string(),
                            pass: value,
                            witness: None,
                        })
                        .collect();
                    println!("{}", serialize_report(&Report { checks }));
                }
            }
            Ok(0)
        }
        Cmd::Quotient { monoid, ideal } => {
            let m = loader.monoid(&monoid)?;
            let s = loader.subset(&ideal, &m)?;
            let q = quotient(&m, &s)?;
            println!("{}", serialize_monoid(&q.monoid));
            Ok(0)
        }
        Cmd::Radical { monoid, ideal } => {
            let m = loader.monoid(&monoid)?;
            let s = loader.subset(&ideal, &m)?;
            let r = radical_of(&m, &s)?;
            println!("{}", ideal_doc(&m, &r.set));
            Ok(0)
        }
        Cmd::Kappa { monoid, set, ideal } => {
            let m = loader.monoid(&monoid)?;
            let t = loader.subset(&set, &m)?;
            let i = loader.subset(&ideal, &m)?;
            let v = kappa(&m, &t, &i);
            match cli.output {
                OutputArg::Text => {
                    println!("{}", v.k);
                    println!("{}", names(&m, &v.witness));
                }
                OutputArg::Json => {
                    let report = Report {
                        checks: vec![Check {
                            name: "kappa".into(),
                            pass: true,
                            witness: Some(json!({"antichain": v.witness, "k": v.k})),
                        }],
                    };
                    println!("{}", serialize_report(&report));
                }
            }
            Ok(0)
        }
        Cmd::Reduce {
            monoid,
            set,
            ideal,
            qfam,
        } => {
            let m = loader.monoid(&monoid)?;
            let t = loader.subset(&set, &m)?;
            let i = loader.subset(&ideal, &m)?;
            let maps = qfam_maps(&m, qfam, map_guard)?;
            let out = reduce_set(&m, &t, &maps, &i)?;
            let t0 = ElementSubset::from_indices(m.len(), &out.t0)?;
            println!("{}", ideal_doc(&m, &t0));
            Ok(0)
        }
        Cmd::Project {
            monoid,
            set,
            ideal,
            qfam,
        } => {
            let m = loader.monoid(&monoid)?;
            let t = loader.subset(&set, &m)?;
            let i = loader.subset(&ideal, &m)?;
            let maps = qfam_maps(&m, qfam, map_guard)?;
            match solve_projection_problem(&m, &t, &maps, &i)? {
                Some(q) => println!("{}", serialize_endomap(&maps[q])),
                None => println!("none"),
            }
            Ok(0)
        }
        Cmd::Topology { monoid, kind, dot } => {
            let m = loader.monoid(&monoid)?;
            let tau = match kind {
                TopologyKind::Order => order_topology(&m, ideal_limit)?,
                TopologyKind::Prime => prime_topology(&m, ideal_limit, map_guard)?,
            };
            if dot {
                print!("{}", specialization_dot(&m, &tau));
                return Ok(0);
            }
            match cli.output {
                OutputArg::Text => {
                    for open in tau.opens() {
                        println!("open: {}", names(&m, &open.members()));
                    }
                }
                OutputArg::Json => {
                    let opens: Vec<Vec<usize>> = tau.opens().iter().map(|s| s.members()).collect();
                    let report = Report {
                        checks: vec![Check {
                            name: "topology".into(),
                            pass: true,
                            witness: Some(json!({ "opens": opens })),
                        }],
                    };
                    println!("{}", serialize_report(&report));
                }
            }
            Ok(0)
        }
        Cmd::HsExtract {
            monoid,
            setfunction,
            set,
        } => {
            let m = loader.monoid(&monoid)?;
            let f = loader.setfunction(&setfunction, &m)?;
            let t = loader.subset(&set, &m)?;
            let hs = halmos_savage_extract(&m, &f, &t)?;
            match cli.output {
                OutputArg::Text => println!("{}", names(&m, &hs)),
                OutputArg::Json => {
                    let report = Report {
                        checks: vec![Check {
                            name: "hs-extract".into(),
                            pass: true,
                            witness: Some(json!({ "h": hs })),
                        }],
                    };
                    println!("{}", serialize_report(&report));
                }
            }
            Ok(0)
        }
        Cmd::Kelley { monoid, family } => {
            let m = loader.monoid(&monoid)?;
            let fam = loader.family(&family, &m)?;
            let rep = kelley_report(&m, &fam, norm, ideal_limit)?;
            let zero_radical_order =
                rep.common_zero_flags.radical && rep.common_zero_flags.order_ideal;
            match cli.output {
                OutputArg::Text => {
                    println!("family_ideal_kappa {}", rep.family_ideal_kappa);
                    println!("blocks {}", rep.separation.len());
                    println!("separation_positive {}", rep.separation_positive);
                    println!(
                        "selected {}",
                        rep.extract
                            .selected
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    println!("all_members_sigma {}", rep.all_members_sigma);
                    println!("zero_set_radical_order {zero_radical_order}");
                    println!(
                        "extract_implies_separation {}",
                        rep.extract_implies_separation
                    );
                    println!(
                        "extract_implies_radical_order {}",
                        rep.extract_implies_radical_order
                    );
                    println!("trivial {}", rep.trivial);
                }
                OutputArg::Json => {
                    let tstars: Vec<String> = rep
                        .separation
                        .iter()
                        .map(|c| format_rational(&c.tstar))
                        .collect();
                    let checks = vec![
                        Check {
                            name: "family_ideal_kappa".into(),
                            pass: true,
                            witness: Some(json!(rep.family_ideal_kappa)),
                        },
                        Check {
                            name: "separation_positive".into(),
                            pass: rep.separation_positive,
                            witness: Some(json!({ "tstars": tstars })),
                        },
                        Check {
                            name: "extract_zero_set_equal".into(),
                            pass: true,
                            witness: Some(json!({
                                "selected": rep.extract.selected,
                                "trivial": rep.trivial
                            })),
                        },
                        Check {
                            name: "members_sigma".into(),
                            pass: rep.all_members_sigma,
                            witness: None,
                        },
                        Check {
                            name: "zero_set_radical_order".into(),
                            pass: zero_radical_order,
                            witness: None,
                        },
                        Check {
                            name: "extract_implies_separation".into(),
                            pass: rep.extract_implies_separation,
                            witness: None,
                        },
                        Check {
                            name: "extract_implies_radical_order".into(),
                            pass: rep.extract_implies_radical_order,
                            witness: None,
                        },
                    ];
                    println!("{}", serialize_report(&Report { checks }));
                }
            }
            Ok(0)
        }
        Cmd::LpSeparate {
            monoid,
            family,
            block,
        } => {
            let m = loader.monoid(&monoid)?;
            let fam = loader.family(&family, &m)?;
            let blocks: Vec<ElementSubset> = if block.is_empty() {
                let extract = pomonoid::setfunc::kelley_extract(&m, &fam, norm)?;
                canonical_blocks(&m, &extract.f0)
            } else {
                block
                    .iter()
                    .map(|spec| loader.subset(spec, &m))
                    .collect::<Result<Vec<_>>>()?
            };
            let certs = kelley_separation_lp(&m, &fam, &blocks)?;
            match cli.output {
                OutputArg::Text => {
                    for c in &certs {
                        let lambda = c
                            .lambda
                            .iter()
                            .map(format_rational)
                            .collect::<Vec<_>>()
                            .join(" ");
                        println!("t* {} lambda {}", format_rational(&c.tstar), lambda);
                    }
                }
                OutputArg::Json => {
                    let checks = certs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| Check {
                            name: format!("block{i}"),
                            pass: c.tstar > Rat::new(0.into(), 1.into()),
                            witness: Some(json!({
                                "lambda": c.lambda.iter().map(format_rational).collect::<Vec<_>>(),
                                "tstar": format_rational(&c.tstar)
                            })),
                        })
                        .collect();
                    println!("{}", serialize_report(&Report { checks }));
                }
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Structure(_) => 2,
                Error::Guard { .. } => 1,
                Error::Hypothesis(_) => 1,
                Error::PaperCheck(_) => 3,
            };
            std::process::exit(code);
        }
    }
}
