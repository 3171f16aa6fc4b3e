use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use typeb::cayley::{interval, parse_permutation, parse_signed_permutation};
use typeb::embed::{iota_a, iota_b, iota_gamma, iota_inverse_a, iota_inverse_b};
use typeb::freeprob::{cumulant_b, mixed_cumulant, moment_series_b, r_transform_b, Letter, Pair, Slot};
use typeb::partitions::{abs_fiber, abs_map, enumerate_nca, enumerate_ncb, AnyPartition, PartitionRecord};
use typeb::series::{boxconv_a, boxconv_a_dual, boxconv_b, parse_series_a, parse_series_b};
use typeb::verify::{self, Params, PROPERTIES};
use typeb::{
    Error, FormalSpaceB, LinkingElement, MarkedElement, NcPartitionA, NcPartitionB, NonCrossing, Permutation, SeriesB,
    Side, SignedPermutation,
};

const BOUND_A: usize = 8;
const BOUND_B: usize = 6;
const BOUND_SERIES: usize = 8;

#[derive(Parser)]
#[command(name = "typeb", version, about = "Non-crossing partitions, boxed convolutions and type-B free cumulants")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Largest accepted rank or series order (defaults: 8 for type A, 6 for type B, 8 for series).
    #[arg(long, global = true)]
    bound: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvKind {
    A,
    B,
    #[value(name = "AC", alias = "ac")]
    Ac,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    S,
    W,
}

#[derive(Subcommand)]
enum Command {
    /// List the non-crossing partitions of [n] (type A) or [±n] (type B).
    Enum {
        #[arg(value_enum, ignore_case = true)]
        kind: Kind,
        n: usize,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },
    /// Kreweras complement of a partition such as "{(1,2),(3,4)}".
    Kreweras {
        partition: String,
        /// Use the left complement Kr'.
        #[arg(long)]
        left: bool,
    },
    /// Absolute value of a type-B partition.
    Abs { partition: String },
    /// All type-B partitions whose absolute value is the given type-A partition.
    Fiber { partition: String },
    /// Send a partition to its permutation, or a permutation back with --inverse.
    Iota {
        input: String,
        /// Map a type-A partition into [ε, γ] of W_n.
        #[arg(long)]
        gamma: bool,
        /// Read a permutation in cycle notation and return its partition.
        #[arg(long, requires_all = ["group", "n"])]
        inverse: bool,
        #[arg(long, value_enum, ignore_case = true)]
        group: Option<Group>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Elements of the interval [e, top] in S_n or W_n.
    Interval {
        #[arg(long, value_enum, ignore_case = true)]
        group: Group,
        #[arg(long)]
        n: usize,
        /// `c`, `omega`, `gamma`, or a permutation in cycle notation.
        #[arg(long)]
        top: Option<String>,
        #[arg(long)]
        count: bool,
    },
    /// Boxed convolution of two series, e.g. "[1,1,1]" or "[[1,0],[2,3]]".
    Boxconv {
        #[arg(value_enum, ignore_case = true)]
        kind: ConvKind,
        f: String,
        g: String,
        /// Truncate both series to this order first.
        #[arg(long)]
        order: Option<usize>,
        /// Compute the type-B convolution both by NC^(B) summation and with dual numbers, and compare.
        #[arg(long, alias = "check-5-3")]
        check_dual: bool,
    },
    /// Cumulants in a space given by a JSON description.
    ///
    /// Each SLOT is a word such as "a1 a2" or "x"; at most one may contain a vector
    /// generator. Slots of the form "a:x" are marked pairs and give the type-B cumulant.
    Cumulant {
        #[arg(long)]
        space: String,
        slots: Vec<String>,
        /// Print the moment series and R-transform of the marked pair "a:x".
        #[arg(long)]
        transform: Option<String>,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Run a registered property check.
    Verify {
        property: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// List the registered properties.
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, text: impl Display, value: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Json => println!("{value}"),
        }
    }

    fn lines<T: Display>(&self, items: &[T], value: Value) {
        match self.format {
            Format::Text => items.iter().for_each(|i| println!("{i}")),
            Format::Json => println!("{value}"),
        }
    }
}

fn check_bound(n: usize, bound: usize, what: &str) -> Outcome {
    if n == 0 || n > bound {
        return Err(Failure::Usage(format!("{what} {n} is outside 1..={bound}; raise it with --bound")));
    }
    Ok(())
}

fn record<P: NonCrossing>(p: &P) -> Value {
    serde_json::to_value(PartitionRecord::from(p)).expect("records serialize")
}

fn parse_partition(text: &str) -> Result<AnyPartition, Failure> {
    Ok(text.parse::<AnyPartition>()?)
}

fn cmd_enum(out: &Out, bound: Option<usize>, kind: Kind, n: usize, count: bool) -> Outcome {
    match kind {
        Kind::A => {
            check_bound(n, bound.unwrap_or(BOUND_A), "type-A rank")?;
            list_partitions(out, "A", n, enumerate_nca(n)?.collect::<Vec<NcPartitionA>>(), count)
        }
        Kind::B => {
            check_bound(n, bound.unwrap_or(BOUND_B), "type-B rank")?;
            list_partitions(out, "B", n, enumerate_ncb(n)?.collect::<Vec<NcPartitionB>>(), count)
        }
    }
}

fn list_partitions<P: NonCrossing>(out: &Out, kind: &str, n: usize, all: Vec<P>, count: bool) -> Outcome {
    if count {
        out.emit(all.len(), json!({"type": kind, "n": n, "count": all.len()}));
    } else {
        out.lines(&all, Value::Array(all.iter().map(record).collect()));
    }
    Ok(())
}

fn cmd_kreweras(out: &Out, text: &str, left: bool) -> Outcome {
    let side = if left { Side::Left } else { Side::Right };
    match parse_partition(text)? {
        AnyPartition::A(p) => {
            let k = p.kreweras(side);
            out.emit(&k, record(&k));
        }
        AnyPartition::B(p) => {
            let k = p.kreweras(side);
            out.emit(&k, record(&k));
        }
    }
    Ok(())
}

fn type_b(text: &str) -> Result<NcPartitionB, Failure> {
    Ok(text.parse::<NcPartitionB>()?)
}

fn type_a(text: &str) -> Result<NcPartitionA, Failure> {
    match parse_partition(text)? {
        AnyPartition::A(p) => Ok(p),
        AnyPartition::B(_) => Err(Failure::Usage(format!("`{text}` is not a type-A partition"))),
    }
}

fn cmd_iota(out: &Out, input: &str, gamma: bool, inverse: bool, group: Option<Group>, n: Option<usize>) -> Outcome {
    if inverse {
        let (group, n) = (group.expect("required by clap"), n.expect("required by clap"));
        let p = match group {
            Group::S => AnyPartition::A(iota_inverse_a(&parse_permutation(input, n)?)?),
            Group::W => AnyPartition::B(iota_inverse_b(&parse_signed_permutation(input, n)?)?),
        };
        out.emit(&p, serde_json::to_value(PartitionRecord::from(&p)).expect("records serialize"));
        return Ok(());
    }
    let (text, len) = if gamma {
        let t = iota_gamma(&type_a(input)?);
        (t.to_string(), t.word_length())
    } else {
        match parse_partition(input)? {
            AnyPartition::A(p) => {
                let t = iota_a(&p);
                (t.to_string(), t.word_length())
            }
            AnyPartition::B(p) => {
                let t = iota_b(&p);
                (t.to_string(), t.word_length())
            }
        }
    };
    out.emit(&text, json!({"permutation": text, "length": len}));
    Ok(())
}

fn list_elements<G: MarkedElement>(out: &Out, top: &G, count: bool) {
    let elems = interval(top);
    if count {
        out.emit(elems.len(), json!({"top": top.to_string(), "count": elems.len()}));
    } else {
        let value = elems.iter().map(|e| json!({"element": e.to_string(), "length": e.word_length()})).collect();
        out.lines(&elems, Value::Array(value));
    }
}

fn cmd_interval(out: &Out, bound: Option<usize>, group: Group, n: usize, top: Option<String>, count: bool) -> Outcome {
    match group {
        Group::S => {
            check_bound(n, bound.unwrap_or(BOUND_A), "rank")?;
            let top = match top.as_deref().unwrap_or("c") {
                "c" => Permutation::long_cycle(n)?,
                "omega" | "gamma" => return Err(Failure::Usage("omega and gamma live in W_n".into())),
                literal => parse_permutation(literal, n)?,
            };
            list_elements(out, &top, count);
        }
        Group::W => {
            check_bound(n, bound.unwrap_or(BOUND_B), "rank")?;
            let top = match top.as_deref().unwrap_or("omega") {
                "omega" => SignedPermutation::long_cycle(n)?,
                "gamma" => SignedPermutation::paired_long_cycle(n)?,
                "c" => return Err(Failure::Usage("c lives in S_n; use omega or gamma".into())),
                literal => parse_signed_permutation(literal, n)?,
            };
            list_elements(out, &top, count);
        }
    }
    Ok(())
}

fn truncated<T: typeb::series::Ring>(s: typeb::Series<T>, order: Option<usize>) -> Result<typeb::Series<T>, Failure> {
    Ok(match order {
        Some(n) => s.truncate(n)?,
        None => s,
    })
}

fn series_json(s: &SeriesB) -> Value {
    s.coeffs().iter().map(|c| json!([c.prime.to_string(), c.double_prime.to_string()])).collect()
}

fn cmd_boxconv(
    out: &Out,
    bound: Option<usize>,
    kind: ConvKind,
    (f, g): (&str, &str),
    order: Option<usize>,
    check: bool,
) -> Outcome {
    let bound = bound.unwrap_or(BOUND_SERIES);
    if kind == ConvKind::A {
        if check {
            return Err(Failure::Usage("--check-dual compares type-B convolutions; use B or AC".into()));
        }
        let (f, g) = (truncated(parse_series_a(f)?, order)?, truncated(parse_series_a(g)?, order)?);
        check_bound(f.order().max(g.order()), bound, "series order")?;
        let h = boxconv_a(&f, &g)?;
        let coeffs: Vec<String> = h.coeffs().iter().map(|c| c.to_string()).collect();
        out.emit(&h, json!({"type": "A", "result": coeffs}));
        return Ok(());
    }
    let (f, g) = (truncated(parse_series_b(f)?, order)?, truncated(parse_series_b(g)?, order)?);
    check_bound(f.order().max(g.order()), bound, "series order")?;
    let h = if kind == ConvKind::B { boxconv_b(&f, &g)? } else { boxconv_a_dual(&f, &g)? };
    let label = if kind == ConvKind::B { "B" } else { "AC" };
    if !check {
        out.emit(&h, json!({"type": label, "result": series_json(&h)}));
        return Ok(());
    }
    let (direct, dual) = (boxconv_b(&f, &g)?, boxconv_a_dual(&f, &g)?);
    let agree = direct == dual;
    let text = if agree {
        format!("{h}\ncheck: pass, NC^(B) summation equals the dual-number convolution")
    } else {
        format!("{h}\ncheck: FAIL, NC^(B) summation gives {direct}, dual numbers give {dual}")
    };
    out.emit(
        text,
        json!({"type": label, "result": series_json(&h), "check": {"passed": agree, "direct": series_json(&direct), "dual": series_json(&dual)}}),
    );
    if agree {
        Ok(())
    } else {
        Err(Failure::Check("the two type-B convolutions differ".into()))
    }
}

fn marked_pair(space: &FormalSpaceB, text: &str) -> Result<Pair<FormalSpaceB>, Failure> {
    let (a, x) = text.split_once(':').ok_or_else(|| Failure::Usage(format!("`{text}` is not a marked pair `a:x`")))?;
    Ok(LinkingElement::new(space.word_elem(a)?, space.word_vector(x)?))
}

fn cmd_cumulant(
    out: &Out,
    bound: Option<usize>,
    path: &str,
    slots: &[String],
    transform: Option<&str>,
    order: usize,
) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let space = FormalSpaceB::from_json(&text)?;
    if let Some(t) = transform {
        check_bound(order, bound.unwrap_or(BOUND_SERIES), "series order")?;
        let pair = marked_pair(&space, t)?;
        let m = moment_series_b(&space, &pair, order)?;
        let r = r_transform_b(&space, &pair, order)?;
        out.emit(format!("M = {m}\nR = {r}"), json!({"pair": t, "M": series_json(&m), "R": series_json(&r)}));
        return Ok(());
    }
    if slots.is_empty() {
        return Err(Failure::Usage("give at least one slot, or --transform".into()));
    }
    if slots.iter().any(|s| s.contains(':')) {
        let pairs = slots.iter().map(|s| marked_pair(&space, s)).collect::<Result<Vec<_>, _>>()?;
        let k = cumulant_b(&space, &pairs)?;
        out.emit(&k, json!({"kind": "B", "slots": slots, "value": [k.prime.to_string(), k.double_prime.to_string()]}));
        return Ok(());
    }
    let args = slots
        .iter()
        .map(|s| {
            let w = space.parse_word(s)?;
            let has_vector = w.iter().any(|l| matches!(l, Letter::Vec(_)));
            Ok(if has_vector { Slot::Vector(space.word_vector(s)?) } else { Slot::Alg(space.word_elem(s)?) })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let k = mixed_cumulant(&space, &args)?;
    out.emit(&k, json!({"kind": "A", "slots": slots, "value": k.to_string()}));
    Ok(())
}

fn cmd_verify(out: &Out, property: Option<&str>, params: Params, list: bool) -> Outcome {
    if list || property.is_none() {
        let rows: Vec<String> = PROPERTIES.iter().map(|p| format!("{:<24}{}", p.id, p.description)).collect();
        let value = PROPERTIES.iter().map(|p| json!({"id": p.id, "description": p.description})).collect();
        out.lines(&rows, Value::Array(value));
        return if list { Ok(()) } else { Err(Failure::Usage("name a property to run".into())) };
    }
    let id = property.expect("checked above");
    let report = verify::run(id, &params).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut settings = Vec::new();
    if let Some(n) = report.n {
        settings.push(format!("n = {n}"));
    }
    if let Some(order) = report.order {
        settings.push(format!("order = {order}"));
    }
    if let Some(samples) = report.samples {
        settings.push(format!("samples = {samples}"));
    }
    settings.push(format!("seed = {}", report.seed));
    let verdict = if report.passed { "pass" } else { "FAIL" };
    let mut text = format!(
        "{verdict}: {} ({}): {} [{} checks, {} ms]",
        report.property,
        settings.join(", "),
        report.summary,
        report.checked,
        report.elapsed_ms
    );
    if let Some(c) = &report.counterexample {
        text.push_str(&format!("\ncounterexample: {c}"));
    }
    out.emit(text, serde_json::to_value(&report).expect("reports serialize"));
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} failed", report.property)))
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let out = Out { format: cli.format };
    let bound = cli.bound;
    match cli.command {
        Command::Enum { kind, n, count } => cmd_enum(&out, bound, kind, n, count),
        Command::Kreweras { partition, left } => cmd_kreweras(&out, &partition, left),
        Command::Abs { partition } => {
            let p = abs_map(&type_b(&partition)?);
            out.emit(&p, record(&p));
            Ok(())
        }
        Command::Fiber { partition } => {
            let fiber = abs_fiber(&type_a(&partition)?);
            out.lines(&fiber, Value::Array(fiber.iter().map(record).collect()));
            Ok(())
        }
        Command::Iota { input, gamma, inverse, group, n } => cmd_iota(&out, &input, gamma, inverse, group, n),
        Command::Interval { group, n, top, count } => cmd_interval(&out, bound, group, n, top, count),
        Command::Boxconv { kind, f, g, order, check_dual } => {
            cmd_boxconv(&out, bound, kind, (&f, &g), order, check_dual)
        }
        Command::Cumulant { space, slots, transform, order } => {
            cmd_cumulant(&out, bound, &space, &slots, transform.as_deref(), order)
        }
        Command::Verify { property, n, order, samples, list } => {
            cmd_verify(&out, property.as_deref(), Params { n, order, samples, seed: cli.seed }, list)
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
