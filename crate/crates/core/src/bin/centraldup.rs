use std::cmp::Ordering;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use centraldup::action::{apply_word_bounded, expansion_levels, trace, ApplyError, Oracle, Verdict};
use centraldup::blueprint::{chi, chi_star};
use centraldup::decide::{check_free, dil, Decider, MulTable};
use centraldup::garside::{delta, lcm, partial_iter};
use centraldup::redress::Redresser;
use centraldup::{parse_term, PosWord, Term, Word};

#[derive(Parser)]
#[command(name = "centraldup", version, about = "Terms, words and decisions for x(yz) = (xy)(yz)")]
struct Cli {
    /// Print `{"ok": bool, "result": ...}` instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Ceiling on term size, in leaves.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_size: usize,
    /// Ceiling on redressing steps.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Equivalence of two terms (exit 0 if equivalent, 1 if not).
    Decide { t: String, u: String },
    /// Equivalence of two one-variable terms.
    Decide1 { t: String, u: String },
    /// Applies a signed word to a term.
    Apply {
        t: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Canonical pair of terms for a word.
    Trace {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Redresses a word to `N | D`.
    Redress {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Equivalence of positive words in the monoid.
    Posequiv { u: String, v: String },
    /// Equality of words in the group.
    Groupequiv {
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// The complement `U\V`.
    Complement { u: String, v: String },
    /// Right lcm of two positive words.
    Lcm { u: String, v: String },
    /// The word Δ of a term.
    Delta { t: String },
    /// Iterates ∂ on a term.
    Partial {
        t: String,
        #[arg(short, default_value_t = 1)]
        n: usize,
    },
    /// Blueprint of a one-variable term.
    Chi {
        t: String,
        #[arg(long)]
        star: bool,
    },
    /// `dil(I, U)`.
    Dil { i: usize, u: String },
    /// Classifies a word as P_minus, P_zero or P_plus.
    Classify {
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Left-division order of one-variable terms.
    Compare { t: String, u: String },
    /// Freeness of a multiplication table read from FILE (`-` for stdin).
    Checkfree { file: String },
    /// Brute-force equivalence check (exit 3 when inconclusive).
    Oracle {
        t: String,
        u: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Terms reachable by at most N expansions, by level.
    Expand {
        t: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
}

struct Outcome {
    text: String,
    result: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: impl ToString, result: Value) -> Outcome {
        Outcome { text: text.to_string(), result, code: 0 }
    }

    fn yes_no(b: bool) -> Outcome {
        Outcome { text: b.to_string(), result: json!(b), code: if b { 0 } else { 1 } }
    }
}

fn term(s: &str) -> Result<Term, String> {
    parse_term(s).map_err(|e| format!("term {s:?}: {e}"))
}

fn word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e| format!("word {s:?}: {e}"))
}

fn pos(s: &str) -> Result<PosWord, String> {
    s.parse().map_err(|e| format!("word {s:?}: {e}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let redresser = Redresser::new(cli.budget);
    let decider = Decider { redresser, max_size: cli.max_size };
    Ok(match &cli.cmd {
        Cmd::Decide { t, u } => Outcome::yes_no(decider.decide(&term(t)?, &term(u)?).map_err(err)?),
        Cmd::Decide1 { t, u } => Outcome::yes_no(decider.decide_one_var(&term(t)?, &term(u)?).map_err(err)?),
        Cmd::Apply { t, w } => match apply_word_bounded(&term(t)?, &word(w)?, cli.max_size) {
            Ok(r) => Outcome::ok(&r, json!(r.to_string())),
            Err(ApplyError::Undefined { step }) => Outcome {
                text: format!("undefined at step {step}"),
                result: json!({ "undefined_at_step": step }),
                code: 1,
            },
            Err(e) => return Err(e.to_string()),
        },
        Cmd::Trace { w } => match trace(&word(w)?) {
            Some(tr) => Outcome::ok(&tr, json!({ "left": tr.left.to_string(), "right": tr.right.to_string() })),
            None => Outcome { text: "empty".into(), result: Value::Null, code: 1 },
        },
        Cmd::Redress { w } => {
            let f = redresser.redress(&word(w)?).map_err(err)?;
            Outcome::ok(&f, json!({ "num": f.num.to_string(), "den": f.den.to_string() }))
        }
        Cmd::Posequiv { u, v } => Outcome::yes_no(redresser.pos_equiv(&pos(u)?, &pos(v)?).map_err(err)?),
        Cmd::Groupequiv { w, v } => Outcome::yes_no(redresser.group_equiv(&word(w)?, &word(v)?).map_err(err)?),
        Cmd::Complement { u, v } => {
            let c = redresser.complement(&pos(u)?, &pos(v)?).map_err(err)?;
            Outcome::ok(&c, json!(c.to_string()))
        }
        Cmd::Lcm { u, v } => {
            let m = lcm(&pos(u)?, &pos(v)?).map_err(err)?;
            Outcome::ok(&m, json!(m.to_string()))
        }
        Cmd::Delta { t } => {
            let d = delta(&term(t)?);
            Outcome::ok(&d, json!(d.to_string()))
        }
        Cmd::Partial { t, n } => {
            let r = partial_iter(&term(t)?, *n, cli.max_size).map_err(err)?;
            Outcome::ok(&r, json!(r.to_string()))
        }
        Cmd::Chi { t, star } => {
            let t = term(t)?;
            let w = if *star { chi_star(&t) } else { chi(&t) }.map_err(err)?;
            Outcome::ok(&w, json!(w.to_string()))
        }
        Cmd::Dil { i, u } => {
            let d = dil(*i, &pos(u)?);
            Outcome::ok(d, json!(d))
        }
        Cmd::Classify { w } => {
            let c = decider.classify(&word(w)?).map_err(err)?;
            Outcome::ok(c, json!(c))
        }
        Cmd::Compare { t, u } => {
            let name = match decider.compare(&term(t)?, &term(u)?).map_err(err)? {
                Ordering::Less => "Less",
                Ordering::Equal => "Equal",
                Ordering::Greater => "Greater",
            };
            Outcome::ok(name, json!(name))
        }
        Cmd::Checkfree { file } => {
            let text = if file == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(err)?
            } else {
                std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?
            };
            let table: MulTable = text.parse().map_err(err)?;
            Outcome::yes_no(check_free(&table).map_err(err)?)
        }
        Cmd::Oracle { t, u, depth } => {
            let v = Oracle::default().equiv(&term(t)?, &term(u)?, *depth);
            let code = match v {
                Verdict::Equivalent => 0,
                Verdict::NotEquivalent => 1,
                Verdict::Unknown => 3,
            };
            Outcome { text: format!("{v:?}"), result: json!(v), code }
        }
        Cmd::Expand { t, steps } => {
            let levels = expansion_levels(&term(t)?, *steps);
            let strings: Vec<Vec<String>> =
                levels.iter().map(|l| l.iter().map(Term::to_string).collect()).collect();
            let text = strings
                .iter()
                .enumerate()
                .flat_map(|(i, l)| l.iter().map(move |s| format!("{i} {s}")))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok(text, json!(strings))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", json!({ "ok": true, "result": out.result }));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            if cli.json {
                println!("{}", json!({ "ok": false, "result": Value::Null, "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
    }
}
