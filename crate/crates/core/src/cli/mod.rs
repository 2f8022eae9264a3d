//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 on a consistency failure (or an
//! internal/I/O error), 2 on a usage error.

mod dot;
mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::embedding::{identity_embedding, Embedding, RoutedEmbedding};
use crate::error::Error;
use crate::formulas::wl_formula;
use crate::graph::{build_guest, check_guest_params, Guest, MAX_N};
use crate::host::{cut_family, labeled_host, HostKind, HostTree, LayoutVariant};
use crate::search::{exhaustive_min_wirelength, local_search_min, DEFAULT_EVALUATION_BUDGET};

pub use dot::{guest_to_dot, host_to_dot};
pub use report::{SweepRow, WirelengthJson, SWEEP_COLUMNS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` the routing engine is run at.
pub const ENGINE_MAX_N: u32 = 8;
/// Largest `n` exhaustive search is run at (`2^n <= 8`).
pub const EXHAUSTIVE_MAX_N: u32 = 3;

#[derive(Debug, Parser)]
#[command(name = "treewire", version, about = "Wirelength of complete multipartite graphs in rooted binary and sibling trees")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the labeled complete 2^p-partite guest.
    Guest(GuestArgs),
    /// Print a labeled k-rooted host tree.
    Host(HostArgs),
    /// Compare direct, cut-based and closed-form wirelength.
    Wirelength(WirelengthArgs),
    /// Check the three cut conditions for every cut of the host.
    Verify(VerifyArgs),
    /// Tabulate formula and engine values over parameter ranges.
    #[command(long_about = SWEEP_HELP)]
    Sweep(SweepArgs),
    /// Write a host or guest as a DOT graph.
    ExportDot(ExportArgs),
}

const SWEEP_HELP: &str = "Tabulate formula and engine values over parameter ranges.

One row per (n, p, n1, host_kind), ordered by n, p, n1, then binary before sibling.
CSV columns, in order:
  n,p,n1,k,host_kind,closed_form,direct,via_partition,exhaustive_min,cut_conditions_ok,agree
Engine columns are empty with --formula-only; exhaustive_min is empty without --exhaustive.

Caps: n <= 20 with --formula-only, n <= 8 otherwise, n <= 3 with --exhaustive.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HostChoice {
    Binary,
    Sibling,
}

impl From<HostChoice> for HostKind {
    fn from(c: HostChoice) -> Self {
        match c {
            HostChoice::Binary => HostKind::Binary,
            HostChoice::Sibling => HostKind::Sibling,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepHosts {
    Binary,
    Sibling,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    Host,
    Guest,
}

#[derive(Debug, Args)]
pub struct GuestArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: u32,
    #[arg(long = "output", value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct HostShape {
    /// Height of each rooted subtree.
    #[arg(long)]
    pub n1: u32,
    /// Number of rooted subtrees; defaults to 2^(n - n1) when --n is given, else 1.
    #[arg(long)]
    pub k: Option<usize>,
    /// Guest scale; fixes k = 2^(n - n1).
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long = "host", value_enum, default_value = "binary")]
    pub host: HostChoice,
    /// Sibling layout variant: 0 left,right,parent; 1 right,left,parent;
    /// 2 parent,left,right; 3 parent,right,left.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=3))]
    pub variant: u8,
}

impl HostShape {
    fn build(&self) -> Result<HostTree, Error> {
        let k = match (self.k, self.n) {
            (Some(k), None) => k,
            (None, None) => 1,
            (k, Some(n)) => {
                if self.n1 < 1 || self.n1 > n {
                    return Err(Error::invalid(format!("need 1 <= n1 <= n, got n1 = {}", self.n1)));
                }
                let derived = 1usize << (n - self.n1);
                if k.is_some_and(|k| k != derived) {
                    return Err(Error::invalid(format!("k must equal 2^(n - n1) = {derived}")));
                }
                derived
            }
        };
        labeled_host(self.n1, k, self.host.into(), LayoutVariant::from_index(self.variant)?)
    }
}

#[derive(Debug, Args)]
pub struct HostArgs {
    #[command(flatten)]
    pub shape: HostShape,
    #[arg(long = "output", value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: u32,
    /// Subtree height; defaults to n (a single rooted tree).
    #[arg(long)]
    pub n1: Option<u32>,
    #[arg(long = "host", value_enum, default_value = "binary")]
    pub host: HostChoice,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=3))]
    pub variant: u8,
    /// Exchange the images of two guest vertices, e.g. `--swap 1,6`.
    #[arg(long, value_parser = parse_pair)]
    pub swap: Option<(usize, usize)>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two comma-separated vertices, got `{s}`"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// A validated guest/host pair with its embedding.
struct Instance {
    n: u32,
    p: u32,
    n1: u32,
    guest: Guest,
    host: HostTree,
    embedding: Embedding,
}

impl InstanceArgs {
    fn n1(&self) -> u32 {
        self.n1.unwrap_or(self.n)
    }

    fn build(&self) -> Result<Instance, Error> {
        check_guest_params(self.n, self.p)?;
        let n1 = self.n1();
        if n1 < 1 || n1 > self.n {
            return Err(Error::invalid(format!("need 1 <= n1 <= n, got n1 = {n1}")));
        }
        if self.n > ENGINE_MAX_N {
            return Err(Error::invalid(format!(
                "engine commands are capped at n <= {ENGINE_MAX_N}, got n = {}",
                self.n
            )));
        }
        let guest = build_guest(self.n, self.p)?;
        let host = labeled_host(
            n1,
            1 << (self.n - n1),
            self.host.into(),
            LayoutVariant::from_index(self.variant)?,
        )?;
        let mut embedding = identity_embedding(&guest, &host)?;
        if let Some((a, b)) = self.swap {
            embedding = embedding.swapped(a, b)?;
        }
        Ok(Instance {
            n: self.n,
            p: self.p,
            n1,
            guest,
            host,
            embedding,
        })
    }
}

#[derive(Debug, Args)]
pub struct WirelengthArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Also compute the exact minimum over all bijections (2^n <= 8).
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_EVALUATION_BUDGET)]
    pub budget: u128,
    /// Run 2-swap local search for this many swap evaluations (needs --seed).
    #[arg(long, requires = "seed")]
    pub local_search: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long = "output", value_enum, default_value = "json")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long = "output", value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: u32,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long)]
    pub p_min: Option<u32>,
    #[arg(long)]
    pub p_max: Option<u32>,
    #[arg(long)]
    pub n1_min: Option<u32>,
    #[arg(long)]
    pub n1_max: Option<u32>,
    #[arg(long = "host", value_enum, default_value = "both")]
    pub host: SweepHosts,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=3))]
    pub variant: u8,
    #[arg(long, conflicts_with = "formula_only")]
    pub exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_EVALUATION_BUDGET)]
    pub budget: u128,
    /// Skip the engine; allows n up to 20.
    #[arg(long)]
    pub formula_only: bool,
    #[arg(long = "output", value_enum, default_value = "csv")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_enum)]
    pub target: ExportTarget,
    /// Host subtree height (host target).
    #[arg(long)]
    pub n1: Option<u32>,
    /// Number of rooted subtrees (host target).
    #[arg(long)]
    pub k: Option<usize>,
    /// Guest scale; with the host target fixes k = 2^(n - n1).
    #[arg(long)]
    pub n: Option<u32>,
    /// Guest partite exponent (guest target).
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long = "host", value_enum, default_value = "binary")]
    pub host: HostChoice,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=3))]
    pub variant: u8,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Error raised by a command, mapped onto an exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::ResourceLimit { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(Error::Io(e))
    }
}

type Outcome = Result<bool, Failure>;

/// Parse `args` (program name first), run the command and return the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match &config.command {
        Command::Guest(a) => cmd_guest(a, out),
        Command::Host(a) => cmd_host(a, out),
        Command::Wirelength(a) => cmd_wirelength(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::ExportDot(a) => cmd_export_dot(a, out),
    };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            let _ = writeln!(err, "treewire: consistency check failed");
            EXIT_INCONSISTENT
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "treewire: usage error: {msg}");
            EXIT_USAGE
        }
        // downstream closed early, e.g. piped into `head`
        Err(Failure::Runtime(Error::Io(e))) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "treewire: {e}");
            EXIT_INCONSISTENT
        }
    }
}

fn unsupported(format: OutputFormat, command: &str) -> Failure {
    Failure::Usage(format!("{command} does not support {format:?} output"))
}

fn cmd_guest(args: &GuestArgs, out: &mut dyn Write) -> Outcome {
    let guest = build_guest(args.n, args.p)?;
    match args.output {
        OutputFormat::Text => report::write_guest_text(&guest, out)?,
        OutputFormat::Json => report::write_guest_json(&guest, out)?,
        OutputFormat::Dot => out.write_all(guest_to_dot(&guest).as_bytes())?,
        other => return Err(unsupported(other, "guest")),
    }
    Ok(true)
}

fn cmd_host(args: &HostArgs, out: &mut dyn Write) -> Outcome {
    let host = args.shape.build()?;
    match args.output {
        OutputFormat::Text => report::write_host_text(&host, out)?,
        OutputFormat::Json => report::write_host_json(&host, out)?,
        OutputFormat::Dot => out.write_all(host_to_dot(&host).as_bytes())?,
        other => return Err(unsupported(other, "host")),
    }
    Ok(true)
}

fn cmd_wirelength(args: &WirelengthArgs, out: &mut dyn Write) -> Outcome {
    if !matches!(args.output, OutputFormat::Json | OutputFormat::Text) {
        return Err(unsupported(args.output, "wirelength"));
    }
    if args.exhaustive && args.instance.n > EXHAUSTIVE_MAX_N {
        return Err(Failure::Usage(format!(
            "exhaustive search is capped at n <= {EXHAUSTIVE_MAX_N} (2^n <= 8)"
        )));
    }
    let inst = args.instance.build()?;
    let routed = RoutedEmbedding::new(&inst.guest, &inst.host, &inst.embedding)?;
    let mut wl = routed.report()?;
    wl.closed_form = Some(wl_formula(inst.n, inst.n1, inst.p, inst.host.is_sibling())?);
    if args.exhaustive {
        wl.exhaustive_min =
            Some(exhaustive_min_wirelength(&inst.guest, &inst.host, args.budget)?.best_value);
    }
    let local = match (args.local_search, args.seed) {
        (Some(iters), Some(seed)) => {
            Some(local_search_min(&inst.guest, &inst.host, seed, iters)?.best_value)
        }
        _ => None,
    };
    // an upper bound below the claimed minimum would refute it
    let floor = wl.exhaustive_min.or(wl.closed_form).unwrap_or(0);
    let consistent = wl.is_consistent() && local.is_none_or(|v| v >= floor);
    let json = WirelengthJson::new(inst.n, inst.p, &inst.host, args.instance.swap, wl, local);
    match args.output {
        OutputFormat::Json => report::write_json(&json, out)?,
        _ => report::write_wirelength_text(&json, out)?,
    }
    Ok(consistent)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let inst = args.instance.build()?;
    let routed = RoutedEmbedding::new(&inst.guest, &inst.host, &inst.embedding)?;
    let wl = routed.report()?;
    let cuts = cut_family(&inst.host)?;
    let rows: Vec<report::VerifyRow> = cuts
        .iter()
        .zip(&wl.per_cut)
        .map(|(cut, c)| report::VerifyRow::new(cut, c))
        .collect();
    let ok = rows.iter().all(|r| r.passes());
    match args.output {
        OutputFormat::Text => report::write_verify_text(&rows, out)?,
        OutputFormat::Json => report::write_json(&rows, out)?,
        OutputFormat::Csv => report::write_verify_csv(&rows, out)?,
        other => return Err(unsupported(other, "verify")),
    }
    Ok(ok)
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Outcome {
    if !matches!(args.output, OutputFormat::Csv | OutputFormat::Json) {
        return Err(unsupported(args.output, "sweep"));
    }
    let n_range = args.n_min.max(2)..=args.n_max;
    if !n_range.is_empty() {
        let top = args.n_max;
        let (cap, what) = if args.formula_only {
            (MAX_N, "formula scale")
        } else if args.exhaustive {
            (EXHAUSTIVE_MAX_N, "exhaustive scale (2^n <= 8)")
        } else {
            (ENGINE_MAX_N, "engine scale")
        };
        if top > cap {
            return Err(Failure::Usage(format!(
                "sweep up to n = {top} exceeds the {what} cap n <= {cap}"
            )));
        }
    }
    let kinds: &[HostKind] = match args.host {
        SweepHosts::Binary => &[HostKind::Binary],
        SweepHosts::Sibling => &[HostKind::Sibling],
        SweepHosts::Both => &[HostKind::Binary, HostKind::Sibling],
    };
    let variant = LayoutVariant::from_index(args.variant)?;
    let mut rows = Vec::new();
    for n in n_range {
        let p_lo = args.p_min.unwrap_or(2).max(2);
        let p_hi = args.p_max.unwrap_or(n).min(n);
        for p in p_lo..=p_hi {
            let n1_lo = args.n1_min.unwrap_or(1).max(1);
            let n1_hi = args.n1_max.unwrap_or(n).min(n);
            for n1 in n1_lo..=n1_hi {
                for &kind in kinds {
                    rows.push(sweep_row(n, p, n1, kind, variant, args)?);
                }
            }
        }
    }
    let ok = rows.iter().all(|r| r.agree);
    match args.output {
        OutputFormat::Csv => report::write_sweep_csv(&rows, out)?,
        _ => report::write_json(&rows, out)?,
    }
    Ok(ok)
}

fn sweep_row(
    n: u32,
    p: u32,
    n1: u32,
    kind: HostKind,
    variant: LayoutVariant,
    args: &SweepArgs,
) -> Result<SweepRow, Failure> {
    let closed_form = wl_formula(n, n1, p, kind == HostKind::Sibling)?;
    let mut row = SweepRow {
        n,
        p,
        n1,
        k: 1u64 << (n - n1),
        host_kind: kind,
        closed_form,
        direct: None,
        via_partition: None,
        exhaustive_min: None,
        cut_conditions_ok: None,
        agree: true,
    };
    if args.formula_only {
        return Ok(row);
    }
    let guest = build_guest(n, p)?;
    let host = labeled_host(n1, 1 << (n - n1), kind, variant)?;
    let emb = identity_embedding(&guest, &host)?;
    let mut wl = RoutedEmbedding::new(&guest, &host, &emb)?.report()?;
    wl.closed_form = Some(closed_form);
    if args.exhaustive {
        wl.exhaustive_min = Some(exhaustive_min_wirelength(&guest, &host, args.budget)?.best_value);
    }
    row.direct = Some(wl.direct);
    row.via_partition = Some(wl.via_partition);
    row.exhaustive_min = wl.exhaustive_min;
    row.cut_conditions_ok = Some(wl.cut_conditions_ok);
    row.agree = wl.is_consistent();
    Ok(row)
}

fn cmd_export_dot(args: &ExportArgs, out: &mut dyn Write) -> Outcome {
    let text = match args.target {
        ExportTarget::Guest => {
            let (Some(n), Some(p)) = (args.n, args.p) else {
                return Err(Failure::Usage("guest export needs --n and --p".into()));
            };
            guest_to_dot(&build_guest(n, p)?)
        }
        ExportTarget::Host => {
            let Some(n1) = args.n1 else {
                return Err(Failure::Usage("host export needs --n1".into()));
            };
            let shape = HostShape {
                n1,
                k: args.k,
                n: args.n,
                host: args.host,
                variant: args.variant,
            };
            host_to_dot(&shape.build()?)
        }
    };
    match &args.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(true)
}
