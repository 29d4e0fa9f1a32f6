use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use pchar_core::characters::lin_all;
use pchar_core::families::{family_a, family_b, wreath_lift, FamilyInstance};
use pchar_core::induction::{eta, parse_element, StrategyHint};
use pchar_core::oracle::irr_exhaustive;
use pchar_core::pcgroup::{textfmt, PcGroup, Subgroup};
use pchar_core::verify::{emit_report, run_check_battery, CheckName};
use pchar_core::Limits;

/// Exact character induction engine for finite p-groups.
#[derive(Parser)]
#[command(name = "pchar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named verification checks and emit a report.
    Verify(VerifyArgs),
    /// Exhaustive scans (currently: theorem-a).
    Scan(ScanArgs),
    /// Decompose an induced character: eta and its certificate.
    Eta(EtaArgs),
    /// Brute-force oracle commands.
    Oracle(OracleArgs),
    /// Group family constructors.
    Group(GroupArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name, or "all" for the whole battery.
    #[arg(long)]
    check: String,
    /// Primes to run at (repeatable); defaults to the check's battery.
    #[arg(long)]
    prime: Vec<u64>,
    /// Number of wreath-lift iterations where applicable.
    #[arg(long)]
    iterate: Option<u32>,
    /// Write the JSON report document here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Scan name; "theorem-a" is supported.
    name: String,
    #[arg(long)]
    prime: Vec<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EtaArgs {
    /// Pc presentation file.
    #[arg(long)]
    group: PathBuf,
    /// Comma-separated generator words for H, e.g. "g2, g4" or "g2 g3^2, g4".
    #[arg(long)]
    subgroup: String,
    /// Character assignments "g2:0,g4:1" on presentation generators
    /// contained in H; must determine the character uniquely.
    #[arg(long = "char")]
    character: String,
    /// Largest group order the oracle strategy may enumerate.
    #[arg(long, default_value_t = 243)]
    oracle_bound: u128,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    command: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Complete irreducible table of the group in the presentation file.
    Irr {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 243)]
        oracle_bound: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[command(subcommand)]
    command: GroupCommand,
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Print the pc presentation of a family member.
    Show {
        /// Family: "a" or "b".
        #[arg(long)]
        family: String,
        #[arg(long)]
        prime: u64,
        /// Apply this many wreath lifts.
        #[arg(long, default_value_t = 0)]
        iterate: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Verify(args) => {
            let names: Vec<CheckName> = if args.check == "all" {
                CheckName::all().to_vec()
            } else {
                vec![CheckName::from_str(&args.check)?]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.extend(run_check_battery(name, &args.prime, args.iterate));
            }
            let (json, table, exit) = emit_report(&reports);
            print!("{table}");
            write_or_print(&args.out, &json, false)?;
            Ok(ExitCode::from(exit as u8))
        }
        Command::Scan(args) => {
            if args.name != "theorem-a" {
                return Err(format!("unknown scan '{}'; supported: theorem-a", args.name).into());
            }
            let reports = run_check_battery(CheckName::TheoremAScan, &args.prime, None);
            let (json, table, exit) = emit_report(&reports);
            print!("{table}");
            write_or_print(&args.out, &json, false)?;
            Ok(ExitCode::from(exit as u8))
        }
        Command::Eta(args) => {
            let limits = Limits {
                oracle_max_order: args.oracle_bound,
                ..Limits::default()
            };
            let group = load_group(&args.group)?;
            let gens = args
                .subgroup
                .split(',')
                .map(|w| parse_element(&group, w.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::from_generators(&group, &gens);
            let theta = resolve_character(&group, &h, &args.character, &limits)?;
            let full = Subgroup::full(&group);
            let result = eta(&theta, &full, &StrategyHint::Auto, &limits)?;
            println!("eta = {}", result.eta);
            let doc = serde_json::to_string_pretty(&result.certificate.to_doc())?;
            write_or_print(&args.out, &doc, true)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(args) => match args.command {
            OracleCommand::Irr {
                group,
                oracle_bound,
                out,
            } => {
                let limits = Limits {
                    oracle_max_order: oracle_bound,
                    ..Limits::default()
                };
                let g = load_group(&group)?;
                let table = irr_exhaustive(&Subgroup::full(&g), &limits)?;
                let doc = serde_json::to_string_pretty(&table.to_doc()?)?;
                write_or_print(&out, &doc, true)?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Group(args) => match args.command {
            GroupCommand::Show {
                family,
                prime,
                iterate,
            } => {
                let inst = build_family(&family, prime, iterate)?;
                print!("{}", textfmt::write_pc(inst.group.presentation()));
                Ok(ExitCode::SUCCESS)
            }
        },
    }
}

fn build_family(family: &str, prime: u64, iterate: u32) -> Result<FamilyInstance, Box<dyn std::error::Error>> {
    let mut inst = match family {
        "a" => family_a(prime)?,
        "b" => family_b(prime)?,
        other => return Err(format!("unknown family '{other}'; use a or b").into()),
    };
    for _ in 0..iterate {
        inst = wreath_lift(&inst)?;
    }
    Ok(inst)
}

fn load_group(path: &PathBuf) -> Result<Arc<PcGroup>, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)?;
    let pres = textfmt::parse_pc(&text)?;
    Ok(PcGroup::new(pres)?)
}

/// Resolves "g2:0,g4:1" to the unique linear character of H with those
/// values, by filtering the complete character list of H.
fn resolve_character(
    group: &Arc<PcGroup>,
    h: &Subgroup,
    spec: &str,
    limits: &Limits,
) -> Result<pchar_core::characters::LinearCharacter, Box<dyn std::error::Error>> {
    let mut constraints = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        let (name, val) = item
            .split_once(':')
            .ok_or_else(|| format!("bad assignment '{item}'; expected name:exponent"))?;
        let elem = parse_element(group, name.trim())?;
        if !h.contains(&elem) {
            return Err(format!("generator '{name}' is not a member of the subgroup").into());
        }
        let val: u64 = val.trim().parse()?;
        constraints.push((elem, val));
    }
    // Exponents are read modulo the value order lin_all assigns to the
    // subgroup (the exponent of its abelianization).
    let matching: Vec<_> = lin_all(h, limits)?
        .into_iter()
        .filter(|chi| {
            constraints
                .iter()
                .all(|(elem, val)| chi.eval(elem) == Some(*val % chi.value_order()))
        })
        .collect();
    match matching.len() {
        0 => Err("no linear character of the subgroup matches the assignments".into()),
        1 => Ok(matching.into_iter().next().unwrap()),
        n => Err(format!(
            "assignments are underdetermined: {n} characters match; assign more generators"
        )
        .into()),
    }
}

fn write_or_print(
    out: &Option<PathBuf>,
    content: &str,
    print_when_no_file: bool,
) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            if print_when_no_file {
                println!("{content}");
            }
            Ok(())
        }
    }
}
