//! Command-line surface for the design engine: admissibility queries,
//! generation, search, construction, verification, applications, and
//! catalog management.
//!
//! Exit codes: 0 success / valid; 1 negative result (invalid design,
//! nonexistent, construction failure); 2 usage or input error; 3 budget
//! exhausted.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use ipbd_core::arith::{
    admissible_gdd_gnh1, admissible_gdd_uniform, admissible_igdd, admissible_ipbd,
    admissible_ipbd_lambda, admissible_pbd, admissible_rgdd, derive_params, Admissibility,
};
use ipbd_core::compose::{construct_gdd_gnh1, construct_ipbd, Resolver};
use ipbd_core::derived::{
    covering_from_template, imols_from_ipbd, packing_from_template, HoleFiller, PackingRecipe,
    PackingTemplate,
};
use ipbd_core::gen::{
    self, builtin_keys, search, tabulated, CatalogObject, SearchOutcome, SearchProblem,
};
use ipbd_core::io::{
    design_from_json, design_to_json, latin_from_json, latin_to_json, looks_like_latin,
};
use ipbd_core::model::{BlockSizeSet, Design, DesignKind};
use ipbd_core::verify::{
    packing_stats, verify_class_uniform, verify_design, verify_latin, verify_orthogonal,
    verify_resolution,
};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ipbd",
    version,
    about = "incomplete pairwise balanced design toolkit"
)]
struct Cli {
    /// Emit machine-readable JSON results.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized modes (runs are deterministic by default).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for parallel search.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Budgets {
    /// Search node budget.
    #[arg(long, default_value_t = ipbd_core::gen::DEFAULT_NODE_BUDGET)]
    nodes: u64,
    /// Search time budget in seconds.
    #[arg(long, default_value_t = 60)]
    time_s: u64,
    /// Desk-scale point cap for searches.
    #[arg(long, default_value_t = ipbd_core::gen::DEFAULT_POINT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check necessary divisibility and inequality conditions.
    Admissible {
        #[command(subcommand)]
        family: AdmissibleFamily,
    },
    /// Generate a classical design or latin square set.
    Gen {
        #[command(subcommand)]
        what: GenWhat,
        /// Write the object to a file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Exhaustive backtracking search for a design.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Recursive construction pipelines.
    Construct {
        #[command(subcommand)]
        target: ConstructTarget,
    },
    /// Verify a design or latin square file (`-` for stdin).
    Verify { file: String },
    /// Application pipelines: incomplete MOLS, packings, coverings.
    App {
        #[command(subcommand)]
        what: AppWhat,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Catalog management.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum AdmissibleFamily {
    Pbd {
        #[arg(long)]
        v: u64,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
    },
    Ipbd {
        #[arg(long)]
        v: u64,
        #[arg(long)]
        w: u64,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        lambda: Option<u64>,
    },
    /// GDD of type g^n h^1 (use --h 0 via `gdd-uniform` for plain types).
    Gdd {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
    },
    GddUniform {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        u: u64,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
    },
    Igdd {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        u: u64,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
    },
    Rgdd {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        u: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand)]
enum GenWhat {
    Fano,
    Affine {
        #[arg(long)]
        q: usize,
    },
    Projective {
        #[arg(long)]
        q: usize,
    },
    Sts {
        #[arg(long)]
        v: usize,
    },
    Td {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: usize,
    },
    Mols {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        idempotent: bool,
    },
    OneFactorization {
        #[arg(long)]
        v: usize,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    Ipbd {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        resolvable: bool,
        #[command(flatten)]
        budgets: Budgets,
    },
    Pbd {
        #[arg(long)]
        v: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        resolvable: bool,
        #[command(flatten)]
        budgets: Budgets,
    },
    /// GDD with an explicit group type, e.g. --groups 2,2,2.
    Gdd {
        #[arg(long, value_delimiter = ',')]
        groups: Vec<usize>,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        resolvable: bool,
        #[command(flatten)]
        budgets: Budgets,
    },
    Igdd {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        u: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[command(flatten)]
        budgets: Budgets,
    },
}

#[derive(Subcommand)]
enum ConstructTarget {
    Ipbd {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        /// Print the construction trace.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Gdd {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AppWhat {
    Imols {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
        #[arg(long = "K", value_delimiter = ',')]
        k: Vec<usize>,
    },
    Packing {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
    },
    Covering {
        #[arg(long)]
        v: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        key: String,
    },
    /// Verify a file and store it under the given key in the catalog
    /// directory (IPBD_CATALOG_DIR).
    Add {
        file: PathBuf,
        #[arg(long)]
        key: String,
    },
}

fn sizes_of(k: &[usize]) -> Result<BlockSizeSet, String> {
    derive_params(k.iter().copied()).map_err(|e| e.to_string())
}

fn report_admissible(json: bool, what: &str, adm: &Admissibility) -> u8 {
    if json {
        println!(
            "{}",
            serde_json::json!({
                "query": what,
                "admissible": adm.ok,
                "reason": adm.reason(),
            })
        );
    } else {
        println!(
            "{what}: {} ({})",
            if adm.ok { "admissible" } else { "inadmissible" },
            adm.reason()
        );
    }
    if adm.ok {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn emit_design(design: &Design, out: &Option<PathBuf>, json: bool) -> Result<(), String> {
    let text = design_to_json(design).map_err(|e| e.to_string())?;
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
        None if json => println!("{text}"),
        None => {
            println!("{text}");
        }
    }
    Ok(())
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    // --seed is accepted for reproducibility of any future randomized
    // modes; all current paths are deterministic
    let _ = cli.seed;

    match cli.command {
        Command::Admissible { family } => {
            let code = match family {
                AdmissibleFamily::Pbd { v, k } => {
                    let ks = sizes_of(&k)?;
                    report_admissible(cli.json, &format!("PBD({v},{ks})"), &admissible_pbd(v, &ks))
                }
                AdmissibleFamily::Ipbd { v, w, k, lambda } => {
                    let ks = sizes_of(&k)?;
                    let adm = match lambda {
                        Some(l) => admissible_ipbd_lambda(v, w, &ks, l),
                        None => admissible_ipbd(v, w, &ks),
                    };
                    report_admissible(cli.json, &format!("IPBD(({v};{w}),{ks})"), &adm)
                }
                AdmissibleFamily::Gdd { g, n, h, k } => {
                    let ks = sizes_of(&k)?;
                    report_admissible(
                        cli.json,
                        &format!("GDD({g}^{n} {h}^1,{ks})"),
                        &admissible_gdd_gnh1(g, n, h, &ks),
                    )
                }
                AdmissibleFamily::GddUniform { g, u, k } => {
                    let ks = sizes_of(&k)?;
                    report_admissible(
                        cli.json,
                        &format!("GDD({g}^{u},{ks})"),
                        &admissible_gdd_uniform(g, u, &ks),
                    )
                }
                AdmissibleFamily::Igdd { g, h, u, k } => {
                    let ks = sizes_of(&k)?;
                    report_admissible(
                        cli.json,
                        &format!("IGDD(({g};{h})^{u},{ks})"),
                        &admissible_igdd(g, h, u, &ks),
                    )
                }
                AdmissibleFamily::Rgdd { g, u, k } => report_admissible(
                    cli.json,
                    &format!("resolvable GDD({g}^{u},{{{k}}})"),
                    &admissible_rgdd(g, u, k),
                ),
            };
            Ok(code)
        }

        Command::Gen { what, out } => {
            let result: Result<String, ipbd_core::Error> = match what {
                GenWhat::Fano => gen::projective_plane(2).and_then(|d| design_to_json(&d)),
                GenWhat::Affine { q } => gen::affine_plane(q).and_then(|d| design_to_json(&d)),
                GenWhat::Projective { q } => {
                    gen::projective_plane(q).and_then(|d| design_to_json(&d))
                }
                GenWhat::Sts { v } => gen::steiner_triple(v).and_then(|d| design_to_json(&d)),
                GenWhat::Td { k, q } => {
                    gen::transversal_design(k, q).and_then(|d| design_to_json(&d))
                }
                GenWhat::Mols { q, t, idempotent } => {
                    let set = if idempotent {
                        gen::idempotent_mols(q, t)
                    } else {
                        gen::mols(q, t)
                    };
                    set.and_then(|s| latin_to_json(&s))
                }
                GenWhat::OneFactorization { v } => {
                    gen::one_factorization(v).and_then(|d| design_to_json(&d))
                }
            };
            match result {
                Ok(text) => {
                    match out {
                        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
                        None => println!("{text}"),
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_USAGE)
                }
            }
        }

        Command::Search { target } => {
            let (kind, k, resolvable, budgets) = match target {
                SearchTarget::Ipbd {
                    v,
                    w,
                    k,
                    resolvable,
                    budgets,
                } => (DesignKind::ipbd(v, w), k, resolvable, budgets),
                SearchTarget::Pbd {
                    v,
                    k,
                    resolvable,
                    budgets,
                } => (DesignKind::Pbd { v }, k, resolvable, budgets),
                SearchTarget::Gdd {
                    groups,
                    k,
                    resolvable,
                    budgets,
                } => (DesignKind::gdd_of_sizes(&groups), k, resolvable, budgets),
                SearchTarget::Igdd {
                    g,
                    h,
                    u,
                    k,
                    budgets,
                } => (DesignKind::igdd_uniform(g, h, u), k, false, budgets),
            };
            let mut problem = SearchProblem::new(kind, sizes_of(&k)?);
            problem.require_resolution = resolvable;
            problem.node_budget = budgets.nodes;
            problem.time_budget = Duration::from_secs(budgets.time_s);
            problem.point_cap = budgets.cap;
            problem.workers = cli.workers;
            match search(&problem).map_err(|e| e.to_string())? {
                SearchOutcome::Found(d) => {
                    println!("{}", design_to_json(&d).map_err(|e| e.to_string())?);
                    Ok(EXIT_OK)
                }
                SearchOutcome::Nonexistent => {
                    println!("NONEXISTENT");
                    Ok(EXIT_NEGATIVE)
                }
                SearchOutcome::BudgetExhausted => {
                    println!("BUDGET_EXHAUSTED");
                    Ok(EXIT_BUDGET)
                }
            }
        }

        Command::Construct { target } => {
            let resolver = Resolver::new().with_workers(cli.workers);
            let (report, trace, out) = match target {
                ConstructTarget::Ipbd {
                    v,
                    w,
                    k,
                    trace,
                    out,
                } => {
                    let ks = sizes_of(&k)?;
                    match construct_ipbd(v, w, &ks, &resolver) {
                        Ok(r) => (r, trace, out),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return Ok(EXIT_NEGATIVE);
                        }
                    }
                }
                ConstructTarget::Gdd {
                    g,
                    n,
                    h,
                    k,
                    trace,
                    out,
                } => {
                    let ks = sizes_of(&k)?;
                    match construct_gdd_gnh1(g, n, h, &ks, &resolver) {
                        Ok(r) => (r, trace, out),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return Ok(EXIT_NEGATIVE);
                        }
                    }
                }
            };
            if trace {
                for line in &report.trace {
                    eprintln!("trace: {line}");
                }
            }
            match report.design {
                Some(d) => {
                    emit_design(&d, &out, cli.json)?;
                    Ok(EXIT_OK)
                }
                None => {
                    eprintln!("construction failed; rerun with --trace for the attempt log");
                    if !trace {
                        for line in &report.trace {
                            eprintln!("trace: {line}");
                        }
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }

        Command::Verify { file } => {
            let text = if file == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| e.to_string())?;
                buf
            } else {
                match std::fs::read_to_string(&file) {
                    Ok(t) => t,
                    Err(e) => {
                        eprintln!("error: cannot read {file}: {e}");
                        return Ok(EXIT_USAGE);
                    }
                }
            };
            if looks_like_latin(&text) {
                let set = match latin_from_json(&text) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("malformed latin square file: {e}");
                        return Ok(EXIT_USAGE);
                    }
                };
                let latin = verify_latin(&set);
                let orth = verify_orthogonal(&set);
                println!("latin conditions: {}", latin.summary());
                if set.t() > 1 {
                    println!("orthogonality: {}", orth.summary());
                }
                return Ok(if latin.valid && orth.valid {
                    EXIT_OK
                } else {
                    EXIT_NEGATIVE
                });
            }
            let design = match design_from_json(&text) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("malformed design file: {e}");
                    return Ok(EXIT_USAGE);
                }
            };
            let cert = verify_design(&design);
            println!("pair coverage: {}", cert.summary());
            let mut ok = cert.valid;
            if design.resolution.is_some() {
                let res = verify_resolution(&design);
                println!("resolution: {}", res.summary());
                let (uni, ms) = verify_class_uniform(&design);
                if uni.valid {
                    if let Some(ms) = ms {
                        println!("class-uniform: yes, multiset {ms:?}");
                    }
                } else {
                    println!("class-uniform: no");
                }
                ok &= res.valid;
            }
            if let DesignKind::Packing { .. } = design.kind {
                if let Ok(stats) = packing_stats(&design) {
                    println!(
                        "packing: b = {}, johnson = {}, deficiency = {}, leave degrees {:?}",
                        stats.b,
                        stats.johnson,
                        stats.deficiency,
                        stats.leave_degrees()
                    );
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
        }

        Command::App { what, out } => {
            let resolver = Resolver::new().with_workers(cli.workers);
            match what {
                AppWhat::Imols { n, m, t, k } => {
                    let ks = sizes_of(&k)?;
                    let report =
                        construct_ipbd(n, m.max(1), &ks, &resolver).map_err(|e| e.to_string())?;
                    let template = match report.design {
                        Some(d) => d,
                        None => {
                            eprintln!("no IPBD(({n};{m})) template available");
                            return Ok(EXIT_NEGATIVE);
                        }
                    };
                    match imols_from_ipbd(&template, t) {
                        Ok(set) => {
                            let text = latin_to_json(&set).map_err(|e| e.to_string())?;
                            match out {
                                Some(path) => {
                                    std::fs::write(path, text).map_err(|e| e.to_string())?
                                }
                                None => println!("{text}"),
                            }
                            Ok(EXIT_OK)
                        }
                        Err(e) => {
                            eprintln!("error: {e}");
                            Ok(EXIT_NEGATIVE)
                        }
                    }
                }
                AppWhat::Packing { v, k } => {
                    // the (v,k,1) recipes implemented at desk scale
                    let recipe = if k == 3 && v % 6 == 5 && v >= 11 {
                        PackingRecipe {
                            v,
                            k,
                            template: PackingTemplate::Ipbd { v, w: 5 },
                            hole_filler: HoleFiller::Catalog("packing(5,3,1)".into()),
                            fill_groups: false,
                        }
                    } else if k == 3 && (v % 6 == 0 || v % 6 == 2) {
                        PackingRecipe {
                            v,
                            k,
                            template: PackingTemplate::Gdd {
                                g: 2,
                                n: v / 2,
                                h: 0,
                            },
                            hole_filler: HoleFiller::None,
                            fill_groups: false,
                        }
                    } else if k == 3 && (v % 6 == 1 || v % 6 == 3) {
                        // perfect packing: a triple system
                        let d = gen::steiner_triple(v).map_err(|e| e.to_string())?;
                        let packing = Design::new(
                            DesignKind::Packing { v, k },
                            1,
                            BlockSizeSet::new([k]).map_err(|e| e.to_string())?,
                            d.blocks,
                            None,
                        )
                        .map_err(|e| e.to_string())?;
                        let stats = packing_stats(&packing).map_err(|e| e.to_string())?;
                        println!(
                            "b = {}, johnson = {}, deficiency = {}, leave degrees {:?}",
                            stats.b,
                            stats.johnson,
                            stats.deficiency,
                            stats.leave_degrees()
                        );
                        emit_design(&packing, &out, cli.json)?;
                        return Ok(EXIT_OK);
                    } else {
                        eprintln!("no packing recipe for v = {v}, k = {k} at desk scale");
                        return Ok(EXIT_NEGATIVE);
                    };
                    match packing_from_template(&recipe, &resolver) {
                        Ok((d, stats)) => {
                            println!(
                                "b = {}, johnson = {}, deficiency = {}, leave degrees {:?}",
                                stats.b,
                                stats.johnson,
                                stats.deficiency,
                                stats.leave_degrees()
                            );
                            emit_design(&d, &out, cli.json)?;
                            Ok(EXIT_OK)
                        }
                        Err(e) => {
                            eprintln!("error: {e}");
                            Ok(EXIT_NEGATIVE)
                        }
                    }
                }
                AppWhat::Covering { v, k } => {
                    if k != 3 {
                        eprintln!("covering recipes are implemented for k = 3");
                        return Ok(EXIT_NEGATIVE);
                    }
                    match covering_from_template(v, &resolver) {
                        Ok((d, stats)) => {
                            println!("b = {}, total excess = {}", stats.b, stats.total_excess);
                            emit_design(&d, &out, cli.json)?;
                            Ok(EXIT_OK)
                        }
                        Err(e) => {
                            eprintln!("error: {e}");
                            Ok(EXIT_NEGATIVE)
                        }
                    }
                }
            }
        }

        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for key in builtin_keys() {
                    println!("{key}");
                }
                if let Some(dir) = ipbd_core::gen::catalog_dir_entries() {
                    for key in dir {
                        println!("{key} (local)");
                    }
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Show { key } => match tabulated(&key) {
                Ok(CatalogObject::Design(d)) => {
                    println!("{}", design_to_json(&d).map_err(|e| e.to_string())?);
                    Ok(EXIT_OK)
                }
                Ok(CatalogObject::Squares(s)) => {
                    println!("{}", latin_to_json(&s).map_err(|e| e.to_string())?);
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(EXIT_USAGE)
                }
            },
            CatalogAction::Add { file, key } => {
                let dir = match std::env::var_os("IPBD_CATALOG_DIR") {
                    Some(d) => PathBuf::from(d),
                    None => {
                        eprintln!("IPBD_CATALOG_DIR is not set");
                        return Ok(EXIT_USAGE);
                    }
                };
                let text = std::fs::read_to_string(&file).map_err(|e| e.to_string())?;
                // verify before storing
                if looks_like_latin(&text) {
                    let set = latin_from_json(&text).map_err(|e| e.to_string())?;
                    let cert = verify_latin(&set);
                    if !cert.valid {
                        eprintln!("refusing to store an invalid object: {}", cert.summary());
                        return Ok(EXIT_NEGATIVE);
                    }
                } else {
                    let d = design_from_json(&text).map_err(|e| e.to_string())?;
                    let cert = verify_design(&d);
                    if !cert.valid {
                        eprintln!("refusing to store an invalid object: {}", cert.summary());
                        return Ok(EXIT_NEGATIVE);
                    }
                }
                std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
                std::fs::write(dir.join(format!("{key}.json")), text).map_err(|e| e.to_string())?;
                println!("stored {key}");
                Ok(EXIT_OK)
            }
        },
    }
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. piping into `head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
