use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cd_core::catalog::{
    classify_orders, format_entry, parse_catalog, parse_catalog_str, parse_order_range, Catalog,
};
use cd_core::constructions::{
    builtin_group, complement_structure, construct_primitive_group, Builtin,
};
use cd_core::lattice::{cd_lattice, is_cd_simple, verify_lattice_identities};
use cd_core::normal::has_property_a;
use cd_core::numtheory::{lemma210_enumerate, wagstaff_primes};
use cd_core::verify::{claim_keys, verify_paper, TAGS};
use cd_core::{Error, Group, Result};

#[derive(Parser)]
#[command(
    name = "cdtool",
    version,
    about = "Chermak-Delgado lattices of small groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Chermak-Delgado lattice of one group.
    Lattice(LatticeArgs),
    /// Classify catalog groups by order.
    Classify {
        /// Catalog file; the bundled orders 1..50 catalog if omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Inclusive range `A..B`, or a single order.
        #[arg(long, default_value = "1..50")]
        orders: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the affine group [GF(p^n)] T H with |T| = q and |H| = p^r.
    Construct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Write the group in catalog format to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// List the admissible (p, q, n, r) tuples with p <= PMAX.
    Lemma210 {
        #[arg(long)]
        pmax: u64,
    },
    /// Primes p < LIMIT with (p^p - 1)/(p - 1) prime.
    Wagstaff {
        #[arg(long)]
        limit: u64,
    },
    /// Rerun every checkable claim; exit status 1 if any fails.
    VerifyPaper {
        /// Claim key or tag to skip; repeatable.
        #[arg(long)]
        skip: Vec<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// List claim keys and tags, then exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "source")]
struct Source {
    /// Named group, e.g. `symmetric:4`, `dihedral:5`, `frobenius56`.
    #[arg(long)]
    builtin: Option<String>,
    /// Catalog id `<order>.<index>`.
    #[arg(long)]
    id: Option<String>,
    /// File whose first record is the group.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct LatticeArgs {
    #[command(flatten)]
    source: Source,
    /// Catalog used with `--id`; the bundled one if omitted.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog> {
    let cat = match path {
        Some(p) => parse_catalog(p)?,
        None => Catalog::bundled(),
    };
    for w in &cat.warnings {
        eprintln!("warning: {w}");
    }
    Ok(cat)
}

fn lattice_group(args: &LatticeArgs) -> Result<(String, Group)> {
    let s = &args.source;
    if let Some(name) = &s.builtin {
        let b: Builtin = name.parse()?;
        return Ok((b.to_string(), builtin_group(b)?));
    }
    if let Some(id) = &s.id {
        let bad = || Error::InvalidParameters(format!("catalog id `{id}` is not <order>.<index>"));
        let (o, i) = id.split_once('.').ok_or_else(bad)?;
        let (o, i): (usize, usize) = (o.parse().map_err(|_| bad())?, i.parse().map_err(|_| bad())?);
        let mut cat = load_catalog(args.catalog.as_ref())?;
        let pos = cat
            .entries
            .iter()
            .position(|e| e.order == o && e.index == i)
            .ok_or_else(|| Error::InvalidParameters(format!("no catalog entry {id}")))?;
        return Ok((id.clone(), cat.entries.swap_remove(pos).group));
    }
    let path = s.file.as_ref().expect("clap enforces one source");
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut cat = parse_catalog_str(&text)?;
    if cat.entries.is_empty() {
        return Err(Error::InvalidParameters(format!(
            "{} has no group",
            path.display()
        )));
    }
    let e = cat.entries.swap_remove(0);
    Ok((e.id(), e.group))
}

fn run_lattice(args: &LatticeArgs) -> Result<bool> {
    let (name, g) = lattice_group(args)?;
    let l = cd_lattice(&g);
    let identities = verify_lattice_identities(&g, &l);
    let property_a = has_property_a(&g).holds;
    let cd_simple = is_cd_simple(&g);
    if args.json {
        let members: Vec<_> = l
            .members
            .iter()
            .enumerate()
            .map(|(i, h)| {
                json!({
                    "order": h.order(),
                    "dual": l.dual[i],
                    "generators": g.small_generating_set(h).iter().map(|&x| g.element(x).to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let v = json!({
            "group": name,
            "order": g.order(),
            "m_star": l.max_measure,
            "cd_size": l.len(),
            "cd_simple": cd_simple,
            "property_a": property_a,
            "members": members,
            "covers": l.covers(),
            "identity_failures": identities.failures,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        println!("group {name}, order {}", g.order());
        println!("m* = {}, |CD(G)| = {}", l.max_measure, l.len());
        for (i, h) in l.members.iter().enumerate() {
            let gens: Vec<String> = g
                .small_generating_set(h)
                .iter()
                .map(|&x| g.element(x).to_string())
                .collect();
            println!(
                "  [{i}] order {:<6} dual [{}]  <{}>",
                h.order(),
                l.dual[i],
                gens.join(", ")
            );
        }
        let covers: Vec<String> = l.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
        println!("covers: {}", covers.join(" "));
        println!("CD-simple: {cd_simple}, Property A: {property_a}");
        println!(
            "identities: {} checks, {} failures",
            identities.checks,
            identities.failures.len()
        );
        for f in &identities.failures {
            println!("  {f}");
        }
    }
    Ok(identities.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Lattice(args) => run_lattice(&args),
        Command::Classify {
            catalog,
            orders,
            json,
        } => {
            let range = parse_order_range(&orders)?;
            let cat = load_catalog(catalog.as_ref())?;
            let report = classify_orders(&cat, range);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.summary.errors == 0)
        }
        Command::Construct { p, q, n, r, emit } => {
            let a = construct_primitive_group(p, q, n, r)?;
            let g = &a.group;
            let k = complement_structure(&a)?;
            println!("[GF({p}^{n})] T H with |T| = {q}, |H| = {p}^{r}");
            println!("order {} acting on {} points", g.order(), g.degree());
            println!("complement structure: {k}");
            println!("CD-simple: {}", is_cd_simple(g));
            if let Some(path) = emit {
                let text = format!(
                    "# [GF({p}^{n})] T H, (p, q, n, r) = ({p}, {q}, {n}, {r})\n{}",
                    format_entry(g.order(), 1, g)
                );
                std::fs::write(&path, text)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                println!("wrote {}", path.display());
            }
            Ok(k.is_ok())
        }
        Command::Lemma210 { pmax } => {
            let r = lemma210_enumerate(pmax)?;
            for a in &r.direct {
                println!("{a}");
            }
            println!(
                "{} tuples; direct search and closed form agree: {}",
                r.direct.len(),
                r.agrees()
            );
            Ok(r.agrees())
        }
        Command::Wagstaff { limit } => {
            let ps = wagstaff_primes(limit)?;
            let s: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            println!("{}", s.join(" "));
            Ok(true)
        }
        Command::VerifyPaper {
            skip,
            catalog,
            list,
        } => {
            if list {
                println!("claims: {}", claim_keys().join(" "));
                println!("tags: {}", TAGS.join(" "));
                return Ok(true);
            }
            let cat = load_catalog(catalog.as_ref())?;
            let ledger = verify_paper(&cat, &skip);
            print!("{}", ledger.to_text());
            for f in ledger.failed() {
                eprintln!("failed claim: {}", f.key);
            }
            Ok(ledger.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
