//! The `s1s` command line: deciding formulas, compiling them to automata,
//! and operations on automaton files.
//!
//! Exit codes: 0 for SAT or MEMBER (and for commands that only write
//! output), 1 for UNSAT or NONMEMBER, 2 for errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use s1s_core::buchi::{find_match, intersection, match_for_up, union, AutomatonError, FormatError};
use s1s_core::complement::{
    complement_with, ComplementConfig, ComplementError, DEFAULT_MAX_COLORS,
};
use s1s_core::encodings::{
    exists_prefix_merge_nfa, merge0_nfa, merge_fo_names, merge_so_names, never_merge_nfa, phi_merge,
};
use s1s_core::logic::{
    decode_full, interp_to_upword, models_full_up_with, models_up_with, parse_interpretation,
    translate_full_with, translate_with, upword_to_interp, BitWord, FullFormula, InterpError,
    LogicError, MinFormula, NodeStats, ParseError, ParsedFormula, TranslateConfig, Translation,
    UpInterpretation,
};
use s1s_core::random::all_semigroups;
use s1s_core::word::WordError;
use s1s_core::{BuchiNfa, Match, UpWord};

#[derive(Debug, Parser)]
#[command(
    name = "s1s",
    version,
    about = "Decide S1S formulas over ultimately periodic words"
)]
pub struct Cli {
    /// Budget on realizable colors per complementation.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COLORS)]
    pub max_colors: usize,
    /// Print automaton sizes as `#` comment lines.
    #[arg(long, global = true)]
    pub stats: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide satisfiability and print a witness interpretation.
    Sat {
        /// Formula file, or `-` for standard input.
        formula: PathBuf,
    },
    /// Decide whether an interpretation satisfies a formula.
    Check {
        formula: PathBuf,
        interpretation: PathBuf,
    },
    /// Compile a formula to an automaton over its set-letter alphabet.
    Compile {
        formula: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Complement an automaton on ultimately periodic words.
    Complement {
        automaton: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Intersection of two automata.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Union of two automata.
    Union {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Nonemptiness, with an accepting lasso when there is one.
    Empty { automaton: PathBuf },
    /// Membership of `x|y`, the word x y y y ..., letters separated by spaces.
    Member { automaton: PathBuf, word: String },
    /// Write the merging automata and formulas for all semigroups up to a size.
    Corpus {
        directory: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}:{0}", path = .1)]
    Parse(ParseError, String),
    #[error("{path}: {source}", path = .1, source = .0)]
    Format(FormatError, String),
    #[error("{path}: {source}", path = .1, source = .0)]
    Interpretation(InterpError, String),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Complement(#[from] ComplementError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Outcome of a decision: SAT/MEMBER map to exit code 0, UNSAT/NONMEMBER
/// to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Sat,
    Unsat,
    Member,
    Nonmember,
    Done,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Unsat | Status::Nonmember => 1,
            _ => 0,
        }
    }
}

/// Runs one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let config = TranslateConfig {
        complement: ComplementConfig {
            max_colors: cli.max_colors,
            ..TranslateConfig::default().complement
        },
        ..TranslateConfig::default()
    };
    let io = |e: io::Error| CliError::Io {
        path: "<output>".into(),
        source: e,
    };
    match &cli.command {
        Command::Sat { formula } => {
            let f = Formula::load(formula)?;
            let t = f.compile(&config)?;
            print_stats(cli, &t.stats, out).map_err(io)?;
            match find_match(&t.nfa) {
                Some(m) => {
                    let witness = f.decode(&m.up_word())?;
                    writeln!(out, "SAT").map_err(io)?;
                    if !witness.is_empty() {
                        writeln!(out, "{witness}").map_err(io)?;
                    }
                    Ok(Status::Sat)
                }
                None => {
                    writeln!(out, "UNSAT").map_err(io)?;
                    Ok(Status::Unsat)
                }
            }
        }
        Command::Check {
            formula,
            interpretation,
        } => {
            let f = Formula::load(formula)?;
            let text = read(interpretation)?;
            let given = f
                .interpretation(&text)
                .map_err(|e| CliError::Interpretation(e, display(interpretation)))?;
            let holds = f.check(given, &config)?;
            let status = if holds {
                Status::Member
            } else {
                Status::Nonmember
            };
            writeln!(out, "{}", if holds { "MEMBER" } else { "NONMEMBER" }).map_err(io)?;
            Ok(status)
        }
        Command::Compile {
            formula,
            output,
            dot,
        } => {
            let f = Formula::load(formula)?;
            let t = f.compile(&config)?;
            print_stats(cli, &t.stats, out).map_err(io)?;
            let text = format!("# letter bits: {}\n{}", f.letter_names().join(" "), t.nfa);
            emit(output.as_deref(), &text, out)?;
            if let Some(path) = dot {
                write_file(path, &t.nfa.to_dot())?;
            }
            Ok(Status::Done)
        }
        Command::Complement { automaton, output } => {
            let a = load_nfa(automaton)?;
            let construction = ComplementConfig {
                max_colors: cli.max_colors,
                ..ComplementConfig::default()
            };
            let (c, stats) = complement_with(&a, &construction)?;
            if cli.stats {
                writeln!(
                    out,
                    "# colors {} compatible {} incompatible {} states {}",
                    stats.colors, stats.compatible_kinds, stats.incompatible_kinds, stats.states
                )
                .map_err(io)?;
            }
            emit(output.as_deref(), &c.to_string(), out)?;
            Ok(Status::Done)
        }
        Command::Product {
            left,
            right,
            output,
        }
        | Command::Union {
            left,
            right,
            output,
        } => {
            let (a, b) = (load_nfa(left)?, load_nfa(right)?);
            let c = match cli.command {
                Command::Product { .. } => intersection(&a, &b)?,
                _ => union(&a, &b)?,
            };
            if cli.stats {
                writeln!(
                    out,
                    "# states {} transitions {}",
                    c.state_count(),
                    c.transition_count()
                )
                .map_err(io)?;
            }
            emit(output.as_deref(), &c.to_string(), out)?;
            Ok(Status::Done)
        }
        Command::Empty { automaton } => {
            let a = load_nfa(automaton)?;
            match find_match(&a) {
                Some(m) => {
                    writeln!(out, "SAT\n{}", render_match(&m)).map_err(io)?;
                    Ok(Status::Sat)
                }
                None => {
                    writeln!(out, "UNSAT").map_err(io)?;
                    Ok(Status::Unsat)
                }
            }
        }
        Command::Member { automaton, word } => {
            let a = load_nfa(automaton)?;
            let sigma = UpWord::parse(word, None)?;
            match match_for_up(&a, &sigma)? {
                Some(m) => {
                    writeln!(out, "MEMBER\n{}", render_match(&m)).map_err(io)?;
                    Ok(Status::Member)
                }
                None => {
                    writeln!(out, "NONMEMBER").map_err(io)?;
                    Ok(Status::Nonmember)
                }
            }
        }
        Command::Corpus {
            directory,
            max_size,
        } => {
            let count = write_corpus(directory, *max_size)?;
            writeln!(out, "wrote {count} semigroups to {}", directory.display()).map_err(io)?;
            Ok(Status::Done)
        }
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn read(path: &Path) -> Result<String, CliError> {
    let err = |e| CliError::Io {
        path: display(path),
        source: e,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(err)
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: display(path),
        source: e,
    })
}

/// Writes to `path`, or to `out` without one.
fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "<output>".into(),
            source: e,
        }),
    }
}

fn load_nfa(path: &Path) -> Result<BuchiNfa, CliError> {
    read(path)?
        .parse()
        .map_err(|e| CliError::Format(e, display(path)))
}

fn print_stats(cli: &Cli, stats: &[NodeStats], out: &mut dyn Write) -> io::Result<()> {
    if !cli.stats {
        return Ok(());
    }
    for (k, s) in stats.iter().enumerate() {
        let colors = s.colors.map(|c| format!(" colors {c}")).unwrap_or_default();
        writeln!(
            out,
            "# node {k} {} vars {} states {} transitions {}{colors}",
            s.op, s.vars, s.states, s.transitions
        )?;
    }
    Ok(())
}

fn render_match(m: &Match) -> String {
    let path = |p: &[usize]| {
        p.iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "word {}|{}\nstem path {}\ncycle path {}",
        m.stem,
        m.cycle,
        path(&m.stem_path),
        path(&m.cycle_path)
    )
}

/// A parsed formula file, either over set variables only or with
/// first-order variables as well.
struct Formula {
    parsed: ParsedFormula,
    shape: Shape,
}

enum Shape {
    Min(MinFormula),
    /// The formula and its first-order variable count, including helpers
    /// introduced for set-level atoms.
    Full(FullFormula, usize),
}

impl Formula {
    fn load(path: &Path) -> Result<Formula, CliError> {
        let text = read(path)?;
        let body: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join("\n");
        let parsed = ParsedFormula::parse(&body).map_err(|e| CliError::Parse(e, display(path)))?;
        let shape = match parsed.to_min() {
            Some(phi) => Shape::Min(phi),
            None => {
                let (phi, n1) = parsed.to_full();
                Shape::Full(phi, n1)
            }
        };
        Ok(Formula { parsed, shape })
    }

    fn n2(&self) -> usize {
        self.parsed.so_names.len()
    }

    fn compile(&self, config: &TranslateConfig) -> Result<Translation, CliError> {
        Ok(match &self.shape {
            Shape::Min(phi) => translate_with(phi, self.n2(), config)?,
            Shape::Full(phi, n1) => translate_full_with(phi, *n1, self.n2(), config)?,
        })
    }

    /// Names of the letter bits of the compiled automaton, lowest first.
    fn letter_names(&self) -> Vec<String> {
        match &self.shape {
            Shape::Min(_) => self.parsed.so_names.clone(),
            Shape::Full(_, n1) => {
                let mut names = self.parsed.fo_names.clone();
                names.extend((names.len()..*n1).map(|k| format!("_f{k}")));
                names.extend(self.parsed.so_names.iter().cloned());
                names.push("_tmp".into());
                names
            }
        }
    }

    /// Names of the free variables, first-order then second-order.
    fn free_names(&self) -> (Vec<String>, Vec<String>) {
        let (fo, so) = match &self.shape {
            Shape::Min(phi) => (Default::default(), phi.free_vars()),
            Shape::Full(phi, _) => phi.free_vars(),
        };
        (
            fo.into_iter()
                .map(|x| self.parsed.fo_names[x].clone())
                .collect(),
            so.into_iter()
                .map(|x| self.parsed.so_names[x].clone())
                .collect(),
        )
    }

    /// The free variables of an accepted set-letter word, in surface syntax.
    fn decode(&self, sigma: &UpWord) -> Result<String, CliError> {
        let interp = match &self.shape {
            Shape::Min(_) => UpInterpretation::second_order(upword_to_interp(sigma, self.n2())),
            Shape::Full(phi, n1) => decode_full(phi, *n1, self.n2(), sigma)?,
        };
        Ok(self.render_free(&interp))
    }

    fn render_free(&self, interp: &UpInterpretation) -> String {
        let (fo, so) = self.free_names();
        let at =
            |names: &[String], name: &String| names.iter().position(|n| n == name).expect("named");
        let mut lines = Vec::new();
        for name in &fo {
            lines.push(format!(
                "{name} = {}",
                interp.fo[at(&self.parsed.fo_names, name)]
            ));
        }
        for name in &so {
            let w = interp.so[at(&self.parsed.so_names, name)].normalized();
            lines.push(format!("{name} = {}", BitWord(&w)));
        }
        lines.join("\n")
    }

    /// Truth under an interpretation of the free variables; bound variables
    /// need no value.
    fn interpretation(&self, text: &str) -> Result<UpInterpretation, InterpError> {
        let (fo, so) = self.free_names();
        parse_interpretation(text, &fo, &so)
    }

    /// `given` assigns the free variables in the order of
    /// [`free_names`](Self::free_names).
    fn check(&self, given: UpInterpretation, config: &TranslateConfig) -> Result<bool, CliError> {
        let (fo, so) = self.free_names();
        let empty = UpWord::from_vecs(vec![0], vec![0]).expect("nonempty");
        let mut interp = UpInterpretation {
            fo: vec![0; self.parsed.fo_names.len()],
            so: vec![empty; self.n2()],
        };
        for (name, v) in fo.iter().zip(&given.fo) {
            interp.fo[self
                .parsed
                .fo_names
                .iter()
                .position(|n| n == name)
                .expect("named")] = *v;
        }
        for (name, w) in so.iter().zip(&given.so) {
            interp.so[self
                .parsed
                .so_names
                .iter()
                .position(|n| n == name)
                .expect("named")] = w.clone();
        }
        Ok(match &self.shape {
            Shape::Min(phi) => {
                models_up_with(&interp_to_upword(&interp.so), phi, self.n2(), config)?
            }
            Shape::Full(phi, n1) => {
                interp.fo.resize(*n1, 0);
                models_full_up_with(&interp, phi, *n1, self.n2(), config)?
            }
        })
    }
}

/// Per semigroup `gK`: its table, the three merging automata and the
/// merging formula. Returns the number of semigroups written.
fn write_corpus(dir: &Path, max_size: usize) -> Result<usize, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io {
        path: display(dir),
        source: e,
    })?;
    let mut count = 0;
    for size in 1..=max_size {
        for g in all_semigroups(size) {
            let stem = dir.join(format!("g{count}"));
            let file = |ext: &str| stem.with_extension(ext);
            write_file(&file("semigroup"), &g.to_string())?;
            write_file(&file("merge0.nfa"), &merge0_nfa(&g).to_string())?;
            write_file(&file("never_merge.nfa"), &never_merge_nfa(&g).to_string())?;
            write_file(
                &file("exists_prefix_merge.nfa"),
                &exists_prefix_merge_nfa(&g).to_string(),
            )?;
            let phi = phi_merge(&g).render(&merge_fo_names(), &merge_so_names(g.size()));
            write_file(&file("merge.s1s"), &format!("{phi}\n"))?;
            count += 1;
        }
    }
    Ok(count)
}
