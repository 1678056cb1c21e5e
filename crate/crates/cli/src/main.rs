use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use simperm::formats::{markov_dot, to_json, EnumerationJson, MarkovJson};
use simperm_core::dynamics::{find_nonrepetitive_loop, periodic_orbit_from_loop, SharkovskiiKey};
use simperm_core::genealogy::{
    brute_force_sim, enumerate_sim_4n2, family_chain, substar, BranchFamily, BRUTE_FORCE_CAP,
};
use simperm_core::simplicity::{mixed_structure, stefan_variant};
use simperm_core::{
    classify, forces_period, left_paste, markov_graph, paste_cycles, primitive_function,
    reverse_cycle, reverse_perm, right_paste, Block, CycleForm, Permutation, SimplicityClass,
};

/// Simple cyclic permutations: classification, enumeration, Markov graphs
/// and forced periods.
///
/// Permutations are given in one-line form ("6,4,5,1,2,3") or cycle form
/// ("(1,6,3,5,2,4)").
#[derive(Parser)]
#[command(name = "simperm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a permutation as odd, power-of-two or mixed simple.
    Check { perm: String },
    /// List every simple permutation of an order 4n+2.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
        /// Cross-check against exhaustive search (order <= 10).
        #[arg(long)]
        oracle: bool,
    },
    /// Print the first members of a branch, as cycles.
    Branch { family: String, count: usize },
    /// Print the Markov graph of a cycle.
    Markov {
        perm: String,
        /// Write the graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a cycle forces period m, with a witness orbit.
    Forces { perm: String, m: usize },
    /// Tabulate the affine branches of the primitive map.
    Primitive { perm: String },
    /// Paste two permutations (left, right) or two disjoint cycles.
    Paste {
        mode: PasteMode,
        a: String,
        b: String,
    },
    /// Reverse a permutation, or a single cycle with --cycle.
    Reverse {
        perm: String,
        #[arg(long)]
        cycle: bool,
    },
    /// Compare two positive integers in the Sharkovskii ordering.
    Cmp { a: u64, b: u64 },
    /// Predecessors and successor of a simple permutation.
    Genealogy { perm: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum PasteMode {
    Left,
    Right,
    Cycles,
}

/// Exit 2 for bad input, 1 for a broken internal invariant.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<simperm_core::Error> for Failure {
    fn from(e: simperm_core::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse()
        .map_err(|e| usage(format!("cannot parse permutation {s:?}: {e}")))
}

fn parse_cycle(s: &str) -> Result<CycleForm, Failure> {
    s.parse()
        .map_err(|e| usage(format!("cannot parse cycle {s:?}: {e}")))
}

fn parse_full_cycle(s: &str) -> Result<Permutation, Failure> {
    let p = parse_perm(s)?;
    if !p.is_full_cycle() {
        return Err(usage(format!("{p} is not a full cycle")));
    }
    Ok(p)
}

fn check(perm: &str) -> Outcome {
    let p = parse_perm(perm)?;
    let class = classify(&p);
    println!("{class}");
    if let SimplicityClass::MixedSimple { .. } = class {
        let m = mixed_structure(&p)
            .ok_or_else(|| Failure::Internal("missing block structure".into()))?;
        println!("block permutation: {}", m.block_perm);
        for (block, variant) in &m.restrictions {
            println!("{block} {}", variant.name());
        }
    }
    Ok(())
}

fn enumerate(order: usize, json: bool, oracle: bool) -> Outcome {
    if order < 6 || order % 4 != 2 {
        return Err(usage(format!(
            "order {order} is not of the form 4n+2 with n >= 1"
        )));
    }
    if oracle && order > BRUTE_FORCE_CAP {
        return Err(usage(format!("--oracle needs order <= {BRUTE_FORCE_CAP}")));
    }
    let perms = enumerate_sim_4n2((order - 2) / 4)?;
    let verdict = if oracle {
        let mut mine = perms.clone();
        mine.sort();
        Some(brute_force_sim(order)? == mine)
    } else {
        None
    };
    if json {
        println!("{}", to_json(&EnumerationJson::new(order, &perms, verdict)));
    } else {
        for p in &perms {
            println!("{p}");
        }
        if let Some(ok) = verdict {
            println!("{}", if ok { "MATCH" } else { "MISMATCH" });
        }
    }
    Ok(())
}

fn branch(family: &str, count: usize) -> Outcome {
    let family: BranchFamily = family.parse().map_err(|_| {
        let names: Vec<_> = BranchFamily::ALL.iter().map(|f| f.name()).collect();
        usage(format!(
            "unknown family {family:?}; expected one of {}",
            names.join(", ")
        ))
    })?;
    if count == 0 {
        return Err(usage("count must be at least 1"));
    }
    for p in family_chain(family, count)? {
        println!("{}", p.to_cycle_string());
    }
    Ok(())
}

fn markov(perm: &str, dot: Option<PathBuf>, json: bool) -> Outcome {
    let p = parse_full_cycle(perm)?;
    if p.degree() < 2 {
        return Err(usage("the Markov graph needs degree at least 2"));
    }
    let g = markov_graph(&p)?;
    if let Some(path) = dot {
        std::fs::write(&path, markov_dot(&g))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        println!("{}", path.display());
    } else if json {
        println!("{}", to_json(&MarkovJson::from(&g)));
    } else {
        for (k, l) in g.edges() {
            println!("J{k} -> J{l}");
        }
    }
    Ok(())
}

fn forces(perm: &str, m: usize) -> Outcome {
    let p = parse_full_cycle(perm)?;
    if m == 0 {
        return Err(usage("period must be at least 1"));
    }
    if !forces_period(&p, m)? {
        println!("NO");
        return Ok(());
    }
    println!("YES period {m} forced");
    let n = p.degree();
    let witness = if n >= 2 {
        let g = markov_graph(&p)?;
        match find_nonrepetitive_loop(&g, m) {
            Some(lp) => Some((periodic_orbit_from_loop(&primitive_function(&p)?, &lp)?, lp)),
            None => None,
        }
    } else {
        None
    };
    match witness {
        Some((orbit, lp)) => {
            let names: Vec<String> = lp.vertices().iter().map(|k| format!("J{k}")).collect();
            println!("loop: {}", names.join(" "));
            let pts: Vec<String> = orbit.points.iter().map(|x| x.to_string()).collect();
            println!("orbit: {}", pts.join(" -> "));
        }
        None => {
            // period n with no loop of that length: the cycle itself is the orbit
            let mut pts = vec![1];
            while pts.len() < n {
                pts.push(p.apply(*pts.last().expect("non-empty")));
            }
            let pts: Vec<String> = pts.iter().map(|x| x.to_string()).collect();
            println!("orbit: {}", pts.join(" -> "));
        }
    }
    Ok(())
}

fn primitive(perm: &str) -> Outcome {
    let p = parse_perm(perm)?;
    if p.degree() < 2 {
        return Err(usage("the primitive map needs degree at least 2"));
    }
    let f = primitive_function(&p)?;
    let n = f.degree();
    println!("x < 1: f(x) = {}", f.left_clamp());
    for (i, b) in f.branches().iter().enumerate() {
        let k = i + 1;
        println!(
            "J{k} [{k},{}]: f(x) = {}x {} {}",
            k + 1,
            b.slope,
            if b.intercept < 0 { '-' } else { '+' },
            b.intercept.unsigned_abs()
        );
    }
    println!("x >= {n}: f(x) = {}", f.right_clamp());
    Ok(())
}

fn paste(mode: PasteMode, a: &str, b: &str) -> Outcome {
    match mode {
        PasteMode::Left => println!("{}", left_paste(&parse_perm(a)?, &parse_perm(b)?)),
        PasteMode::Right => println!("{}", right_paste(&parse_perm(a)?, &parse_perm(b)?)),
        PasteMode::Cycles => {
            let (u, v) = (parse_cycle(a)?, parse_cycle(b)?);
            let joined = paste_cycles(&u, &v).map_err(|e| usage(e.to_string()))?;
            println!("{joined}");
        }
    }
    Ok(())
}

fn reverse(perm: &str, cycle: bool) -> Outcome {
    if cycle {
        println!("{}", reverse_cycle(&parse_cycle(perm)?));
    } else {
        println!("{}", reverse_perm(&parse_perm(perm)?));
    }
    Ok(())
}

fn cmp(a: u64, b: u64) -> Outcome {
    let key = |x: u64| SharkovskiiKey::new(x).ok_or_else(|| usage("arguments must be positive"));
    let (ka, kb) = (key(a)?, key(b)?);
    match ka.cmp(&kb) {
        std::cmp::Ordering::Less => println!("{a} ⊲ {b}"),
        std::cmp::Ordering::Greater => println!("{b} ⊲ {a}"),
        std::cmp::Ordering::Equal => println!("{a} = {b}"),
    }
    Ok(())
}

fn genealogy(perm: &str) -> Outcome {
    let p = parse_perm(perm)?;
    let class = classify(&p);
    println!("{class}");
    if !class.is_simple() {
        return Ok(());
    }
    let family = BranchFamily::containing(&p);
    if let Some(f) = family {
        println!("branch: {f}");
    }
    match class {
        SimplicityClass::Pow2Simple => {
            // every level halves through substar down to (1)
            let mut chain = Vec::new();
            let mut cur = p.clone();
            while cur.degree() > 1 {
                cur = substar(&cur)?;
                chain.push(cur.to_cycle_string());
            }
            if !chain.is_empty() {
                chain.reverse();
                println!("predecessors: {}", chain.join(" ≺ "));
            }
        }
        SimplicityClass::OddSimple(v) => {
            if p.degree() > 3 {
                println!(
                    "predecessor: {}",
                    v.build(p.degree() - 2)?.to_cycle_string()
                );
            }
        }
        SimplicityClass::MixedSimple { s, q } => {
            if s == 1 {
                let square = p.power(2);
                let name = |lo: usize, hi: usize| -> Result<&'static str, Failure> {
                    let r = square.restrict_to_block(Block::new(lo, hi)?)?;
                    let v = stefan_variant(&r).ok_or_else(|| {
                        Failure::Internal("square is not pasted Stefan cycles".into())
                    })?;
                    Ok(v.name())
                };
                println!("square: {} ◇| {}", name(1, q)?, name(q + 1, 2 * q)?);
                println!("index: {}", p.apply(1));
            }
            if let Some(f) = family {
                if p.degree() > 6 {
                    println!(
                        "predecessor: {}",
                        f.member(p.degree() - 4)?.to_cycle_string()
                    );
                }
            }
        }
        SimplicityClass::NotSimple | SimplicityClass::NotFullCycle => {
            unreachable!("filtered above")
        }
    }
    if let Some(f) = family {
        let next = match f {
            BranchFamily::Pow2(_) => 2 * p.degree(),
            BranchFamily::Stefan(_) => p.degree() + 2,
            BranchFamily::Mixed(_) => p.degree() + 4,
        };
        println!("successor: {}", f.member(next)?.to_cycle_string());
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { perm } => check(&perm),
        Command::Enumerate {
            order,
            json,
            oracle,
        } => enumerate(order, json, oracle),
        Command::Branch { family, count } => branch(&family, count),
        Command::Markov { perm, dot, json } => markov(&perm, dot, json),
        Command::Forces { perm, m } => forces(&perm, m),
        Command::Primitive { perm } => primitive(&perm),
        Command::Paste { mode, a, b } => paste(mode, &a, &b),
        Command::Reverse { perm, cycle } => reverse(&perm, cycle),
        Command::Cmp { a, b } => cmp(a, b),
        Command::Genealogy { perm } => genealogy(&perm),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
