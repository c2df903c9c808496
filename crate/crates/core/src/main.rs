use clap::{Args, Parser, Subcommand, ValueEnum};
use lorenz_links::grid::GridDiagram;
use lorenz_links::invariants::{Bracket, InvariantOptions, DEFAULT_BRACKET_CROSSING_LIMIT};
use lorenz_links::lorenz::LorenzVector;
use lorenz_links::parse::{parse_tlink_spec, parse_vector_spec};
use lorenz_links::verify::{
    battery, battery_text, instance_text, report_line, verify_instance, InstanceResult,
};
use lorenz_links::{Error, Result};

/// Build and cross-check braid and grid presentations of Lorenz links.
#[derive(Parser)]
#[command(name = "lorenz-links", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the derived presentations and invariants of one instance
    Show(ShowArgs),
    /// Check that all presentations of one instance agree
    Verify(InstanceArgs),
    /// Check every vector with entry sum up to a bound
    Battery(BatteryArgs),
}

/// Exactly one of `--vector` or `--tlink` names the instance.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecArgs {
    /// vector spec like `3^4,5^3`
    #[arg(long, value_name = "SPEC")]
    vector: Option<String>,
    /// parameter spec like `(3,4),(5,3)`
    #[arg(long, value_name = "SPEC")]
    tlink: Option<String>,
}

impl SpecArgs {
    fn resolve(&self) -> Result<LorenzVector> {
        match (&self.vector, &self.tlink) {
            (Some(v), None) => parse_vector_spec(v),
            (None, Some(t)) => Ok(parse_tlink_spec(t)?.decompress()),
            _ => unreachable!("clap enforces exactly one spec"),
        }
    }
}

#[derive(Args)]
struct ShowArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// write the grid diagram as SVG to this path
    #[arg(long, value_name = "PATH")]
    svg: Option<std::path::PathBuf>,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct InstanceArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct BatteryArgs {
    /// largest entry sum to enumerate
    #[arg(long, default_value_t = 10)]
    max_sum: u32,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct CommonOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// largest diagram the bracket state sum will attempt
    #[arg(long, value_name = "N", default_value_t = DEFAULT_BRACKET_CROSSING_LIMIT)]
    max_bracket_crossings: usize,
    /// leave out an invariant (repeatable)
    #[arg(long, value_enum)]
    skip: Vec<SkipKind>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SkipKind {
    Jones,
    Alexander,
}

impl CommonOpts {
    fn invariant_options(&self) -> InvariantOptions {
        InvariantOptions {
            max_bracket_crossings: self.max_bracket_crossings,
            skip_jones: self.skip.contains(&SkipKind::Jones),
            skip_alexander: self.skip.contains(&SkipKind::Alexander),
        }
    }
}

fn main() {
    // die quietly when stdout closes early, e.g. piping into head
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Show(args) => {
            let v = args.spec.resolve()?;
            let opts = args.common.invariant_options();
            let r = verify_instance(&v, &opts)?;
            let grid = GridDiagram::from_shuffle(&v.shuffle());
            if let Some(path) = &args.svg {
                std::fs::write(path, grid.render_svg())
                    .map_err(|e| Error::Io(format!("cannot write {}: {}", path.display(), e)))?;
            }
            match args.common.format {
                Format::Text => print!("{}", show_text(&r, &grid)),
                Format::Json => println!("{}", to_json(&r)),
            }
            warn_skips(&r);
            Ok(0)
        }
        Cmd::Verify(args) => {
            let v = args.spec.resolve()?;
            let opts = args.common.invariant_options();
            let r = verify_instance(&v, &opts)?;
            match args.common.format {
                Format::Text => print!("{}", instance_text(&r)),
                Format::Json => println!("{}", to_json(&r)),
            }
            warn_skips(&r);
            Ok(if r.verified { 0 } else { 1 })
        }
        Cmd::Battery(args) => {
            if args.max_sum == 0 {
                return Err(Error::Parse("--max-sum must be at least 1".into()));
            }
            let opts = args.common.invariant_options();
            let s = battery(args.max_sum, &opts)?;
            match args.common.format {
                Format::Text => print!("{}", battery_text(&s)),
                Format::Json => println!("{}", to_json(&s.results)),
            }
            Ok(if s.all_verified() { 0 } else { 1 })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn show_text(r: &InstanceResult, grid: &GridDiagram) -> String {
    let mut out = String::new();
    out.push_str(&format!("vector: {}\n", r.vector));
    out.push_str(&format!("T-link: {}\n", r.tlink.spec_string()));
    out.push_str(&format!("lorenz strands: {}\n", r.braids.lorenz.strands()));
    out.push_str(&format!("t strands: {}\n", r.braids.t.strands()));
    out.push_str(&format!("lorenz word: {}\n", r.braids.lorenz.text()));
    out.push_str(&format!("t word: {}\n", r.braids.t.text()));
    out.push_str(&format!(
        "grid ({0} x {0}):\n{1}\n",
        grid.n(),
        grid.render_ascii()
    ));
    out.push_str(&format!(
        "grid crossings: {} (writhe {})\n",
        grid.crossings().len(),
        grid.writhe()
    ));
    for rep in &r.invariants {
        out.push_str(&report_line(rep));
        out.push('\n');
    }
    out
}

fn warn_skips(r: &InstanceResult) {
    for rep in &r.invariants {
        if let Bracket::Skipped { crossings, limit } = &rep.kauffman_f {
            if *limit > 0 {
                eprintln!(
                    "warning: kauffman bracket skipped for {} ({} crossings > limit {})",
                    rep.source.label(),
                    crossings,
                    limit
                );
            }
        }
    }
}
