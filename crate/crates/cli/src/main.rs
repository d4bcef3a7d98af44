use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use dbs_core::braid::parse_braid;
use dbs_core::counting::{component_lower_bound, count_f, CountResult};
use dbs_core::diagram::{build_triangulation, parse_pattern, triangulation_seed, Side};
use dbs_core::dt::{
    check_green_sequence, conf_e_seed, dt_order, dt_script, maximal_green_sequence, periodicity_bound, za_order,
    BipartiteDynkin, DEFAULT_MAX_POWER,
};
use dbs_core::oracle::brute_force_f;
use dbs_core::seed::{parse_script, Color, SeedJson};
use dbs_core::{braids_equal, BraidWord, CartanData, FramedSeed, Seed};

#[derive(Parser)]
#[command(name = "dbs", version, about = "Cluster combinatorics of double Bott-Samelson cells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the seed of a triangulation.
    Seed {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        words: WordArgs,
        /// Triangle sides from left to right, e.g. "TBB" (default: all top, then all bottom).
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a mutation script to a seed read from a JSON file.
    Mutate {
        /// Seed file as printed by `seed --json`.
        #[arg(long)]
        seed: PathBuf,
        /// Comma-separated vertex ids, e.g. "1:1,1:2".
        #[arg(long)]
        script: String,
        #[arg(long)]
        json: bool,
    },
    /// Maximal green sequence of the all-bottom seed of a word.
    Mgs {
        #[command(flatten)]
        cartan: CartanArgs,
        /// Positive braid word, e.g. "1 2 1".
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the DT script of a pair and check that its c-matrix becomes -id.
    DtCheck {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        words: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Order of the DT transformation of a pair.
    DtOrder {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        words: WordArgs,
        /// Largest power to try before giving up.
        #[arg(long, default_value_t = DEFAULT_MAX_POWER)]
        max: usize,
        #[command(flatten)]
        batch: BatchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Zamolodchikov order of the square product of a Dynkin type with A_N.
    Za {
        /// Named Dynkin type of the left factor.
        #[arg(long)]
        left: String,
        /// Rank N of the right factor A_N.
        #[arg(long)]
        right_rank: usize,
        /// Largest power to try before giving up.
        #[arg(long, default_value_t = DEFAULT_MAX_POWER)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Point-count polynomials f and g of a pair.
    Count {
        #[command(flatten)]
        cartan: CartanArgs,
        #[command(flatten)]
        words: WordArgs,
        #[command(flatten)]
        batch: BatchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force count over a small finite field, checked against the DP.
    Oracle {
        /// A1 or A2.
        #[arg(long = "type")]
        type_name: String,
        #[command(flatten)]
        words: WordArgs,
        /// Field size: 2, 3 or 4.
        #[arg(long)]
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two positive braid words are equal.
    BraidEq {
        #[command(flatten)]
        cartan: CartanArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Maximum number of words to visit before answering undecided.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CartanArgs {
    /// Named type: A1 to A9, B2 to B4, C3, D4, F4, G2, or A1xA1.
    #[arg(long = "type")]
    type_name: Option<String>,
    /// JSON file {"C": [[...]], "D": [...]}, optionally with "corank" and "C_ext".
    #[arg(long)]
    cartan: Option<PathBuf>,
}

impl CartanArgs {
    fn load(&self) -> Result<CartanData> {
        match (&self.type_name, &self.cartan) {
            (Some(name), _) => Ok(CartanData::from_name(name)?),
            (None, Some(path)) => {
                let text = read(path)?;
                Ok(CartanData::from_json_str(&text)?)
            }
            (None, None) => bail!("one of --type or --cartan is required"),
        }
    }
}

#[derive(Args)]
struct WordArgs {
    /// Top word b, e.g. "1 2 1".
    #[arg(long, default_value = "")]
    top: String,
    /// Bottom word d.
    #[arg(long, default_value = "")]
    bottom: String,
}

impl WordArgs {
    fn parse(&self, c: &CartanData) -> Result<(BraidWord, BraidWord)> {
        Ok((parse_braid(&self.top, c)?, parse_braid(&self.bottom, c)?))
    }
}

#[derive(Args)]
struct BatchArgs {
    /// File of instances, one "TOP | BOTTOM" per line; replaces --top/--bottom.
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Worker threads for --batch.
    #[arg(long, default_value_t = 1, requires = "batch")]
    jobs: usize,
}

impl BatchArgs {
    /// The instances to process: the batch file, or the single pair.
    fn instances(&self, words: &WordArgs, c: &CartanData) -> Result<Vec<(BraidWord, BraidWord)>> {
        let Some(path) = &self.batch else {
            return Ok(vec![words.parse(c)?]);
        };
        let text = read(path)?;
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (top, bottom) = line
                .split_once('|')
                .ok_or_else(|| anyhow!("{}:{}: expected \"TOP | BOTTOM\"", path.display(), n + 1))?;
            let pair = (parse_braid(top, c)?, parse_braid(bottom, c)?);
            out.push(pair);
        }
        Ok(out)
    }

    fn run<T: Send>(
        &self,
        items: &[(BraidWord, BraidWord)],
        f: impl Fn(&BraidWord, &BraidWord) -> Result<T> + Sync,
    ) -> Result<Vec<T>> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.jobs.max(1)).build()?;
        pool.install(|| items.par_iter().map(|(b, d)| f(b, d)).collect())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn word_text(w: &BraidWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn print_seed(s: &Seed, as_json: bool) -> Result<()> {
    if as_json {
        return print_json(&serde_json::to_value(s.to_json())?);
    }
    let ids: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
    println!("vertices: {}", ids.join(" "));
    let frozen: Vec<String> = s.frozen_vertices().iter().map(|v| v.to_string()).collect();
    println!(
        "frozen: {}",
        if frozen.is_empty() {
            "none".into()
        } else {
            frozen.join(" ")
        }
    );
    let d: Vec<String> = s.multipliers().iter().map(|x| x.to_string()).collect();
    println!("d: {}", d.join(" "));
    println!("epsilon:");
    print!("{}", s.epsilon());
    Ok(())
}

fn cmd_seed(c: &CartanData, words: &WordArgs, pattern: Option<&str>, as_json: bool) -> Result<()> {
    let (b, d) = words.parse(c)?;
    let pattern = match pattern {
        Some(p) => parse_pattern(p)?,
        None => [vec![Side::Top; b.len()], vec![Side::Bottom; d.len()]].concat(),
    };
    let t = build_triangulation(b, d, pattern)?;
    print_seed(&triangulation_seed(&t, c)?, as_json)
}

fn cmd_mutate(path: &Path, script: &str, as_json: bool) -> Result<()> {
    let j: SeedJson =
        serde_json::from_str(&read(path)?).with_context(|| format!("invalid seed JSON in {}", path.display()))?;
    let mut s = Seed::from_json(&j)?;
    for v in parse_script(script)? {
        s = s.mutate(v)?;
    }
    print_seed(&s, as_json)
}

fn cmd_mgs(c: &CartanData, word: &str, as_json: bool) -> Result<()> {
    let w = parse_braid(word, c)?;
    let seed = conf_e_seed(&w, c)?;
    let script = maximal_green_sequence(&w, c)?;
    let mut f = FramedSeed::frame(&seed)?;
    let mut trace = Vec::new();
    for &v in &script.steps {
        trace.push((v, f.vertex_color(v)?));
        f.mutate(v)?;
    }
    let report = check_green_sequence(&seed, &script.steps)?;
    let color = |c: Color| if c == Color::Green { "green" } else { "red" };
    if as_json {
        let steps: Vec<Value> = trace
            .iter()
            .map(|(v, c)| json!({"vertex": v.to_string(), "color": color(*c)}))
            .collect();
        return print_json(&json!({
            "word": w,
            "script": script.steps.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "trace": steps,
            "final_all_red": report.final_all_red,
            "maximal_green": report.is_maximal_green(),
        }));
    }
    println!("word: {}", word_text(&w));
    println!("script: {script}");
    for (n, (v, c)) in trace.iter().enumerate() {
        println!("  {:>3}. {v} {}", n + 1, color(*c));
    }
    println!("final all red: {}", report.final_all_red);
    println!("maximal green: {}", report.is_maximal_green());
    Ok(())
}

fn cmd_dt_check(c: &CartanData, words: &WordArgs, as_json: bool) -> Result<()> {
    let (b, d) = words.parse(c)?;
    let ds = dt_script(&b, &d, c)?;
    if as_json {
        let mut v = serde_json::to_value(ds.to_json())?;
        v["verified"] = json!(true);
        return print_json(&v);
    }
    println!("script: {}", ds.script);
    let sigma: Vec<String> = ds.sigma.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    println!("sigma: {}", sigma.join(" "));
    println!("c = -id after sigma: verified");
    Ok(())
}

fn cmd_dt_order(c: &CartanData, words: &WordArgs, batch: &BatchArgs, max: usize, as_json: bool) -> Result<()> {
    let items = batch.instances(words, c)?;
    let results = batch.run(&items, |b, d| {
        let ds = dt_script(b, d, c)?;
        let report = dt_order(&ds, max)?;
        Ok((report, periodicity_bound(b, d, c, 100_000)))
    })?;
    let mut out = Vec::new();
    for ((b, d), (report, bound)) in items.iter().zip(results) {
        if as_json {
            out.push(json!({
                "top": b,
                "bottom": d,
                "order": report.order,
                "order_up_to_permutation": report.order_up_to_permutation,
                "bound": bound,
            }));
            continue;
        }
        let order = report
            .order
            .map_or(format!("not reached within {max}"), |o| o.to_string());
        let bound = bound.map_or(String::new(), |b| format!(" (bound {b})"));
        if items.len() > 1 {
            print!("{} | {}: ", word_text(b), word_text(d));
        }
        println!("DT order = {order}{bound}");
    }
    if as_json {
        return print_json(&if batch.batch.is_some() {
            Value::Array(out)
        } else {
            out.remove(0)
        });
    }
    Ok(())
}

fn cmd_za(left: &str, n: usize, max: usize, as_json: bool) -> Result<()> {
    if n == 0 {
        bail!("--right-rank must be at least 1");
    }
    let c = CartanData::from_name(left)?;
    let h = c.coxeter_number()?;
    let l = BipartiteDynkin::standard(c)?;
    let r = BipartiteDynkin::standard(CartanData::from_name(&format!("A{n}"))?)?;
    let report = za_order(&l, &r, max)?;
    let bound = h + n + 1;
    if as_json {
        return print_json(&json!({
            "left": left,
            "right_rank": n,
            "order": report.order,
            "order_up_to_permutation": report.order_up_to_permutation,
            "bound": bound,
        }));
    }
    match report.order {
        Some(o) => println!("Za order = {o} (bound {bound})"),
        None => println!("Za order not reached within {max} (bound {bound})"),
    }
    Ok(())
}

fn count_json(r: &CountResult) -> Result<Value> {
    Ok(json!({
        "f": serde_json::to_value(&r.f)?,
        "g": serde_json::to_value(&r.g)?,
        "components_conjectural": component_lower_bound(&r.g)?,
    }))
}

fn cmd_count(c: &CartanData, words: &WordArgs, batch: &BatchArgs, as_json: bool) -> Result<()> {
    let items = batch.instances(words, c)?;
    let results = batch.run(&items, |b, d| Ok(count_f(c, b, d)?))?;
    if as_json {
        let values = results.iter().map(count_json).collect::<Result<Vec<_>>>()?;
        let v = if batch.batch.is_some() {
            Value::Array(values)
        } else {
            values.into_iter().next().expect("one instance")
        };
        return print_json(&v);
    }
    for (n, ((b, d), r)) in items.iter().zip(&results).enumerate() {
        if n > 0 {
            println!();
        }
        println!(
            "top = {}, bottom = {}, word = {}",
            word_text(b),
            word_text(d),
            word_text(&r.word_used)
        );
        println!("f = {}", r.f.to_ascending_string());
        println!("f = {}", r.f.to_descending_string());
        println!("g = {}", r.g);
        println!("conjectural component count = {}", component_lower_bound(&r.g)?);
    }
    Ok(())
}

fn cmd_oracle(type_name: &str, words: &WordArgs, q: u32, as_json: bool) -> Result<()> {
    let c = CartanData::from_name(type_name)?;
    if !c.is_type_a() || c.rank() > 2 {
        bail!("oracle supports types A1 and A2, got {type_name}");
    }
    let (b, d) = words.parse(&c)?;
    let brute = brute_force_f(c.rank(), &b, &d, q)?;
    let dp = count_f(&c, &b, &d)?.f.eval(&q.into());
    let agree = brute == dp;
    if as_json {
        print_json(&json!({"q": q, "brute_force": brute.to_string(), "dp": dp.to_string(), "agree": agree}))?;
    } else {
        println!("brute force |Conf(F_{q})| = {brute}");
        println!("DP f({q}) = {dp}");
        println!("agree: {agree}");
    }
    if !agree {
        bail!("oracle and DP disagree at q = {q}");
    }
    Ok(())
}

fn cmd_braid_eq(c: &CartanData, a: &str, b: &str, cap: usize, as_json: bool) -> Result<()> {
    let verdict = braids_equal(&parse_braid(a, c)?, &parse_braid(b, c)?, c, cap);
    if as_json {
        return print_json(&json!({"equal": verdict.to_string()}));
    }
    println!("{verdict}");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Seed {
            cartan,
            words,
            pattern,
            json,
        } => cmd_seed(&cartan.load()?, &words, pattern.as_deref(), json),
        Command::Mutate { seed, script, json } => cmd_mutate(&seed, &script, json),
        Command::Mgs { cartan, word, json } => cmd_mgs(&cartan.load()?, &word, json),
        Command::DtCheck { cartan, words, json } => cmd_dt_check(&cartan.load()?, &words, json),
        Command::DtOrder {
            cartan,
            words,
            max,
            batch,
            json,
        } => cmd_dt_order(&cartan.load()?, &words, &batch, max, json),
        Command::Za {
            left,
            right_rank,
            max,
            json,
        } => cmd_za(&left, right_rank, max, json),
        Command::Count {
            cartan,
            words,
            batch,
            json,
        } => cmd_count(&cartan.load()?, &words, &batch, json),
        Command::Oracle {
            type_name,
            words,
            q,
            json,
        } => cmd_oracle(&type_name, &words, q, json),
        Command::BraidEq {
            cartan,
            a,
            b,
            cap,
            json,
        } => cmd_braid_eq(&cartan.load()?, &a, &b, cap, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
