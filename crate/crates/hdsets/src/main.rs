//! Command-line driver: batch verification, exhaustive searches,
//! classification, identity checks, representation diagnostics, and the
//! product-construction demos.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hdsets::catalog::{self, Catalog, GroupId, RowOutcome};
use hdsets::constructions::{
    dillon_product, hadamard_support, menon_product, rds_spread_search, spread_search,
    verify_line_identities, SearchOutcome,
};
use hdsets::designs::{self, is_difference_set, DesignParams, Equivalence};
use hdsets::groupring::GroupRingElement;
use hdsets::groups::{build_group, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
use hdsets::presentation::parse_presentation;
use hdsets::repcheck::RepVerifier;

#[derive(Parser)]
#[command(
    name = "hdsets",
    version,
    about = "(36,15,6) Hadamard difference sets: constructions, searches, exact verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Spread,
    Rds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Menon16,
    Dillon16,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Sets,
    Transforms,
}

#[derive(Subcommand)]
enum Command {
    /// Verify all catalog rows and classify the row-derived sets per group
    Verify {
        /// Catalog file (defaults to the bundled catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also identify D with D^(-1) when classifying
        #[arg(long)]
        allow_inverse: bool,
    },
    /// Exhaustively search one group for difference sets
    Search {
        /// Group id g1..g9
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Classify element sets from a file into equivalence classes
    Classify {
        /// Group id g1..g9
        #[arg(long)]
        group: String,
        /// One set per line: comma-separated canonical words
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        allow_inverse: bool,
    },
    /// Check the spread-line identities in Z[C3xC3]
    Identities,
    /// Exact representation-theoretic check of one catalog row
    Repcheck {
        /// Row label, e.g. D33
        #[arg(long)]
        row: String,
    },
    /// Run a product-construction demo in a group of order 16
    Product {
        #[arg(long, value_enum)]
        demo: Demo,
    },
    /// Print the catalog-derived sets or transforms of one group
    Export {
        /// Group id g1..g9
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Option<PathBuf>) -> Result<Catalog, String> {
    match path {
        None => Ok(catalog::load_bundled()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            catalog::load_catalog(&text).map_err(|e| e.to_string())
        }
    }
}

fn group_by_id(cat: &Catalog, id: &str) -> Result<(GroupId, FiniteGroup), String> {
    let gid = GroupId::parse(id).ok_or_else(|| format!("bad group id '{id}' (want g1..g9)"))?;
    let cg = cat
        .group(gid)
        .ok_or_else(|| format!("group {gid} not in catalog"))?;
    Ok((gid, cg.group.clone()))
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify {
            catalog: path,
            allow_inverse,
        } => {
            let cat = load(&path)?;
            let report = catalog::verify_all(&cat, allow_inverse);
            print!("{}", report.render());
            Ok(report.ok())
        }

        Command::Search { group, method } => {
            let cat = catalog::load_bundled();
            let (_, g) = group_by_id(&cat, &group)?;
            let out: SearchOutcome = match method {
                Method::Spread => spread_search(&g).map_err(|e| e.to_string())?,
                Method::Rds => rds_spread_search(&g).map_err(|e| e.to_string())?,
            };
            for set in &out.sets {
                println!("{}", designs::render_set(&g, set));
            }
            let eq = Equivalence::new(&g, false);
            let classes = eq.classify(&out.sets).len();
            eprintln!(
                "candidates examined: {}; condition passes: {}; sets constructed: {}; distinct sets: {}; classes: {}",
                out.summary.candidates_examined,
                out.summary.condition_passes,
                out.summary.sets_constructed,
                out.summary.distinct_sets,
                classes,
            );
            Ok(true)
        }

        Command::Classify {
            group,
            input,
            allow_inverse,
        } => {
            let cat = catalog::load_bundled();
            let (_, g) = group_by_id(&cat, &group)?;
            let text = std::fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let sets = designs::parse_sets(&g, &text).map_err(|e| e.to_string())?;
            let eq = Equivalence::new(&g, allow_inverse);
            let classes = eq.classify(&sets);
            for (i, class) in classes.iter().enumerate() {
                println!(
                    "class {} ({} members): {}",
                    i + 1,
                    class.members.len(),
                    designs::render_set(&g, &class.representative)
                );
            }
            eprintln!("{} sets in {} classes", sets.len(), classes.len());
            Ok(true)
        }

        Command::Identities => {
            let p = parse_presentation("<a,b: a^3=b^3=[a,b]=1>").expect("fixed presentation");
            let h = build_group(&p, DEFAULT_ORDER_CAP).expect("C3xC3 builds");
            let ok = verify_line_identities(&h).map_err(|e| e.to_string())?;
            println!(
                "subgroup sums:  Li^(-1)=Li, Li*H=3H, Li^2=3Li, Li*Lj=H (i!=j), sum Li = 3+H"
            );
            println!(
                "transforms:     Li^^(-1)=Li^, Li^*H=3H, Li^^2=3H-6Li^, Li^*Lj^=H (i!=j), sum Li^ = -6+2H"
            );
            println!(
                "{}",
                if ok {
                    "all identities hold exactly in Z[C3xC3]"
                } else {
                    "IDENTITY FAILURE"
                }
            );
            Ok(ok)
        }

        Command::Repcheck { row } => {
            let cat = catalog::load_bundled();
            let r = cat
                .rows
                .iter()
                .find(|r| r.label == row)
                .ok_or_else(|| format!("no catalog row labeled '{row}'"))?;
            let cg = cat.group(r.group).expect("row group exists");
            let verifier = RepVerifier::new(&cg.group).map_err(|e| {
                format!(
                    "row {row} is in {}, which the representation machinery does not cover: {e}",
                    r.group
                )
            })?;
            let outcome = catalog::verify_row(&cat, r);
            let s = outcome
                .transform
                .as_ref()
                .ok_or_else(|| format!("row {row} does not construct: {:?}", outcome.note))?;
            let ok = verifier.verify_transform(s);
            print!("{}", verifier.diagnostics(s));
            println!(
                "row {row}: phi(S)*conj-transpose(phi(S)) = 36*I in all 12 representations: {}",
                if ok { "yes" } else { "NO" }
            );
            Ok(ok)
        }

        Command::Product { demo } => {
            let (g, h, k, sh, sk, label) = match demo {
                Demo::Menon16 => {
                    let p = parse_presentation(
                        "<p,q,u,v: p^2=q^2=u^2=v^2=[p,q]=[p,u]=[p,v]=[q,u]=[q,v]=[u,v]=1>",
                    )
                    .expect("fixed presentation");
                    let g = build_group(&p, DEFAULT_ORDER_CAP).expect("C2^4 builds");
                    let h = Subgroup::generated_by(&g, &[g.generator(0), g.generator(1)]);
                    let k = Subgroup::generated_by(&g, &[g.generator(2), g.generator(3)]);
                    let sh = &GroupRingElement::subgroup_sum(&h)
                        - &(2 * &GroupRingElement::from_subset(&g, &[g.generator(0)]));
                    let sk = &GroupRingElement::subgroup_sum(&k)
                        - &(2 * &GroupRingElement::from_subset(&g, &[g.generator(2)]));
                    (g, h, k, sh, sk, "menon16: C2^2 x C2^2 inside C2^4")
                }
                Demo::Dillon16 => {
                    let p = parse_presentation("<r,s,t: r^4=s^2=t^2=[r,t]=[s,t]=1, srs=r^3>")
                        .expect("fixed presentation");
                    let g = build_group(&p, DEFAULT_ORDER_CAP).expect("D8xC2 builds");
                    let h = Subgroup::generated_by(&g, &[g.generator(0)]);
                    let k = Subgroup::generated_by(&g, &[g.generator(1), g.generator(2)]);
                    let sh = &GroupRingElement::subgroup_sum(&h)
                        - &(2 * &GroupRingElement::from_subset(&g, &[g.generator(0)]));
                    let sk = &GroupRingElement::subgroup_sum(&k)
                        - &(2 * &GroupRingElement::from_subset(&g, &[g.generator(1)]));
                    (g, h, k, sh, sk, "dillon16: C4 and C2^2 inside D8xC2")
                }
            };
            let s = match demo {
                Demo::Menon16 => menon_product(&g, &h, &k, &sh, &sk),
                Demo::Dillon16 => dillon_product(&g, &h, &k, &sh, &sk),
            }
            .map_err(|e| e.to_string())?;
            let d = hadamard_support(&s);
            let params = DesignParams::new(16, 6, 2).expect("valid parameters");
            let ok = is_difference_set(&g, &d, &params);
            println!("{label}");
            println!("transform: {}", s.render());
            println!("difference set: {}", designs::render_set(&g, &d));
            println!(
                "(16,6,2) difference-set equation: {}",
                if ok { "holds" } else { "FAILS" }
            );
            Ok(ok)
        }

        Command::Export { group, format } => {
            let cat = catalog::load_bundled();
            let (gid, g) = group_by_id(&cat, &group)?;
            let outcomes: Vec<RowOutcome> = cat
                .rows_for(gid)
                .map(|r| catalog::verify_row(&cat, r))
                .collect();
            let mut all_ok = true;
            for o in &outcomes {
                if !o.pass {
                    eprintln!("row {} failed: {:?}", o.label, o.note);
                    all_ok = false;
                    continue;
                }
                match format {
                    ExportFormat::Sets => println!("{}", designs::render_set(&g, &o.set)),
                    ExportFormat::Transforms => {
                        println!("{}", o.transform.as_ref().expect("passing row").render())
                    }
                }
            }
            Ok(all_ok)
        }
    }
}
