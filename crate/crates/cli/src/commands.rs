use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use hexpath::bounds::{census, census_csv, census_text, optimal_length, theorem_bound};
use hexpath::connection::{is_minimal_winning_path, is_winning, removable_stone};
use hexpath::construct::{extend, generate, witness};
use hexpath::render::{render, RenderFormat, RenderSpec};
use hexpath::search::{find_longest, SearchConfig, SearchMode, SearchOutcome};
use hexpath::unitgrid::{boundary_components, eq1_check, eq2_check, region_excess, wasted, Region};
use hexpath::{pathfile, BoardSize, StoneSet};
use sha2::{Digest, Sha256};

use crate::{Command, FormatArg, RegionArg};

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_MALFORMED: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// Error with its exit code.
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn malformed(message: impl Into<String>) -> Self {
        CliError { code: EXIT_MALFORMED, message: message.into() }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<hexpath::Error> for CliError {
    fn from(e: hexpath::Error) -> Self {
        use hexpath::Error::*;
        let code = match &e {
            Input(_) => EXIT_MALFORMED,
            Domain(_) | Internal(_) => EXIT_FAILURE,
            Resource { .. } => EXIT_RESOURCE,
        };
        let message = match &e {
            Resource { nodes_expanded, .. } => format!("{e} (nodes_expanded={nodes_expanded})"),
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { code: EXIT_FAILURE, message: format!("i/o error: {e}") }
    }
}

type CliResult = Result<ExitCode, CliError>;

pub fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Bound { n } => bound(n),
        Command::Length { n } => {
            println!("{}", optimal_length(size(n)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { max, csv } => {
            let rows = census(size(max)?);
            print!("{}", if csv { census_csv(&rows) } else { census_text(&rows) });
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { n, count, enumerate, target, workers, node_limit } => {
            let mode = match (count, &enumerate) {
                (_, Some(_)) => SearchMode::EnumerateAll,
                (true, None) => SearchMode::CountAll,
                (false, None) => SearchMode::FindOne,
            };
            let mut cfg = SearchConfig::new(size(n)?).mode(mode);
            cfg.worker_budget = workers.unwrap_or_else(default_workers);
            cfg.target_length = target;
            cfg.node_limit = node_limit;
            search(&cfg, enumerate.as_deref())
        }
        Command::Verify { file } => verify(&read_path(&file)?),
        Command::Waste { file, region } => waste(&read_path(&file)?, region),
        Command::Witness { n } => emit(&witness(size(n)?)?),
        Command::Extend { file } => emit(&extend(&read_path(&file)?)?),
        Command::Generate { n } => {
            let (s, trace) = generate(size(n)?)?;
            eprint!("{trace}");
            emit(&s)
        }
        Command::Render { file, format, waste, extension } => {
            let format = match format {
                FormatArg::Ascii => RenderFormat::Ascii,
                FormatArg::Svg => RenderFormat::Svg,
            };
            let spec = RenderSpec { format, show_waste: waste, show_extension: extension };
            print!("{}", render(&read_path(&file)?, &spec)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn size(n: u32) -> Result<BoardSize, CliError> {
    Ok(BoardSize::new(n)?)
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

/// Reads a path file; `-` is standard input.
fn read_path(file: &Path) -> Result<StoneSet, CliError> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::malformed(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| CliError::malformed(format!("{}: {e}", file.display())))?
    };
    Ok(pathfile::parse(&text)?)
}

fn emit(s: &StoneSet) -> CliResult {
    io::stdout().write_all(pathfile::emit(s).as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn bound(n: u32) -> CliResult {
    let b = theorem_bound(size(n)?).map_err(|_| {
        CliError::malformed(format!("no residue-class bound for n = {n}: the census table lists N/A below n = 5"))
    })?;
    println!("{b}");
    Ok(ExitCode::SUCCESS)
}

fn search(cfg: &SearchConfig, dir: Option<&Path>) -> CliResult {
    let r = find_longest(cfg)?;
    match cfg.mode {
        SearchMode::FindOne => println!("length={} proven={}", r.length, r.proven_optimal),
        _ => println!("length={} count={} proven={}", r.length, r.count, r.proven_optimal),
    }
    println!("nodes={}", r.nodes_expanded);
    if cfg.mode == SearchMode::FindOne {
        if let Some(p) = r.paths.as_ref().and_then(|p| p.first()) {
            print!("{}", pathfile::emit(p));
        }
    }
    if let Some(dir) = dir {
        write_enumeration(dir, cfg, &r)?;
    }
    Ok(ExitCode::SUCCESS)
}

/// Short content hash used as a file name.
pub fn path_hash(text: &str) -> String {
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

fn write_enumeration(dir: &Path, cfg: &SearchConfig, r: &SearchOutcome) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let mut manifest = format!(
        "hexpath-manifest 1\nsize {}\nlength {}\ncount {}\nproven {}\n",
        cfg.n, r.length, r.count, r.proven_optimal
    );
    for p in r.paths.as_deref().unwrap_or_default() {
        let text = pathfile::emit(p);
        let name = format!("{}.path", path_hash(&text));
        fs::write(dir.join(&name), &text)?;
        manifest.push_str(&name);
        manifest.push('\n');
    }
    fs::write(dir.join("MANIFEST"), manifest)?;
    Ok(())
}

fn verify(s: &StoneSet) -> CliResult {
    let winning = is_winning(s);
    let minimal = is_minimal_winning_path(s);
    let t = wasted(s, &Region::whole(s.size()))?.t;
    println!("winning={winning}");
    println!("minimal={minimal}");
    println!("k={}", s.len());
    println!("t={t}");
    if minimal {
        println!("eq1={}", eq1_check(s)?.holds);
        return Ok(ExitCode::SUCCESS);
    }
    println!("eq1=n/a");
    if !winning {
        println!("reason=not winning");
    } else if let Some(c) = removable_stone(s) {
        println!("reason=removable stone {c}");
    }
    Ok(ExitCode::from(EXIT_FAILURE))
}

fn waste(s: &StoneSet, region: RegionArg) -> CliResult {
    if !is_minimal_winning_path(s) {
        println!("minimal=false");
        return Ok(ExitCode::from(EXIT_FAILURE));
    }
    let n = s.size();
    let mut out = String::new();
    let regions = match region {
        RegionArg::All => {
            out.push_str("region=all\n");
            out.push_str(&wasted(s, &Region::whole(n))?.to_kv());
            vec![("A", Region::a(n)), ("B", Region::b(n))]
        }
        RegionArg::A => vec![("A", Region::a(n))],
        RegionArg::B => vec![("B", Region::b(n))],
    };
    for (name, r) in regions {
        out.push_str(&format!("region={name}\n"));
        out.push_str(&wasted(s, &r)?.to_kv());
        out.push_str(&boundary_components(s, &r)?.to_kv());
        let chk = eq2_check(s, &r)?;
        debug_assert_eq!(chk.e, region_excess(&r));
        out.push_str(&format!("e={}\nt_down-t_up={}\neq2={}\n", chk.e, chk.t_down - chk.t_up, chk.holds));
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}
