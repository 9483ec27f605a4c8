//! The `dyck` command line.

use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dyck::{dts, gf_dyck, gf_z_paths, hermite_history, hermite_label, hook_length_gf, to_svg};
use crate::error::{Error, Result};
use crate::label::{build_poset, gf_z, gf_z_recursive, post_order_seed, Direction, LabeledTree};
use crate::lgv::{factorization, gf_w, gf_y, YDir, YoungDiagram};
use crate::path::{parse_steps, steps_to_string, DyckPath};
use crate::poset::Poset;
use crate::qpoly::QPoly;
use crate::rational::*;
use crate::tau::{label_of_tau, tau_of_label, tau_poset, verify_lattice, Tau};
use crate::tiling::Tiling;
use crate::tree::PlaneTree;

pub const DEFAULT_MAX_PLAIN: usize = 7;
pub const DEFAULT_MAX_RATIONAL: usize = 9;
pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "dyck", version, about = "Labeled plane trees, Dyck tilings and their generating functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest accepted size: n for plain commands (default 7), n*k or n*max(a,b) for rational ones (default 9).
    #[arg(long, global = true)]
    pub max_size: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List paths, trees, labels, tilings, rational paths or Stirling permutations.
    Enumerate(EnumerateArgs),
    /// Convert between labels, tilings, tau sequences and set families.
    Bijection(BijectionArgs),
    /// Generating functions: hook formula, Z of a label, Z between paths, Y of a diagram.
    Gf(GfArgs),
    /// Build a poset from a seed.
    Poset(PosetArgs),
    /// Check join, meet and grading of tau-posets.
    LatticeCheck(LatticeArgs),
    /// Run the built-in reference checks.
    VerifyPaper,
}

#[derive(Args, Debug, Default)]
pub struct Params {
    /// Dyck word over U/D (or parentheses).
    #[arg(long)]
    pub path: Option<String>,
    /// Tree as a bracket word; same role as --path.
    #[arg(long)]
    pub tree: Option<String>,
    /// Pre-order label word, e.g. 1423 or 1,4,2,3.
    #[arg(long)]
    pub label: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub seed_tau: Option<String>,
    /// Upper path for tilings.
    #[arg(long)]
    pub top: Option<String>,
    /// Read --label as an increasing label (decreasing by default).
    #[arg(long)]
    pub increasing: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).args(["paths", "trees", "labels", "tilings", "rational", "stirling"])))]
pub struct EnumerateArgs {
    #[arg(long)]
    pub paths: bool,
    #[arg(long)]
    pub trees: bool,
    #[arg(long)]
    pub labels: bool,
    #[arg(long)]
    pub tilings: bool,
    #[arg(long)]
    pub rational: bool,
    #[arg(long)]
    pub stirling: bool,
    /// With --rational, only the inflated paths.
    #[arg(long)]
    pub inflated: bool,
    #[command(flatten)]
    pub p: Params,
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    /// (1,k) sequence mu, e.g. 2,1,0; needs --k.
    #[arg(long)]
    pub mu: Option<String>,
    #[command(flatten)]
    pub p: Params,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("kind").args(["hook", "young"])))]
pub struct GfArgs {
    #[arg(long)]
    pub hook: bool,
    /// Young diagram rows, e.g. 2,1.
    #[arg(long)]
    pub young: Option<String>,
    /// With --young, the up version.
    #[arg(long)]
    pub up: bool,
    #[command(flatten)]
    pub p: Params,
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    /// Use the tau-poset of the label instead of the label poset.
    #[arg(long)]
    pub tau: bool,
    /// (1,k) sequence mu of the seed; needs --k.
    #[arg(long)]
    pub mu: Option<String>,
    /// With --mu, the transposed (k,1) lattice.
    #[arg(long)]
    pub dual: bool,
    /// Column counts of a trivial (a,b)-tiling seed; needs --a and --b.
    #[arg(long)]
    pub columns: Option<String>,
    #[command(flatten)]
    pub p: Params,
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub p: Params,
}

/// Output text and exit status.
pub struct Output {
    pub text: String,
    pub status: i32,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("cannot read {s:?} as a list of integers"));
    if s.contains(',') {
        s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    Ok(parse_list(s)?.into_iter().map(|x| x as i64).collect())
}

impl Params {
    fn path(&self) -> Result<DyckPath> {
        match (&self.path, &self.tree) {
            (Some(_), Some(_)) => Err(usage("give either --path or --tree, not both")),
            (Some(w), None) | (None, Some(w)) => DyckPath::parse(w),
            (None, None) => Err(usage("missing --path (or --tree)")),
        }
    }

    fn has_path(&self) -> bool {
        self.path.is_some() || self.tree.is_some()
    }

    fn direction(&self) -> Direction {
        if self.increasing {
            Direction::Increasing
        } else {
            Direction::Decreasing
        }
    }

    fn label(&self, lambda: &DyckPath) -> Result<LabeledTree> {
        let w = self.label.as_deref().ok_or_else(|| usage("missing --label"))?;
        LabeledTree::from_pre_order(PlaneTree::from_path(lambda), &parse_list(w)?, self.direction())
    }

    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| usage("missing --n"))
    }

    fn ab(&self) -> Result<(usize, usize)> {
        match (self.a, self.b) {
            (Some(a), Some(b)) if a > 0 && b > 0 => Ok((a, b)),
            (Some(_), Some(_)) => Err(usage("--a and --b must be positive")),
            (None, None) => Ok((1, 1)),
            _ => Err(usage("give both --a and --b")),
        }
    }

    fn k(&self) -> Result<usize> {
        match self.k {
            Some(k) if k > 0 => Ok(k),
            Some(_) => Err(usage("--k must be positive")),
            None => Err(usage("missing --k")),
        }
    }
}

struct Guard {
    plain: usize,
    rational: usize,
}

impl Guard {
    fn new(max: Option<usize>) -> Guard {
        Guard { plain: max.unwrap_or(DEFAULT_MAX_PLAIN), rational: max.unwrap_or(DEFAULT_MAX_RATIONAL) }
    }

    fn plain(&self, n: usize) -> Result<()> {
        if n > self.plain {
            return Err(Error::TooLarge { what: "n", got: n, max: self.plain });
        }
        Ok(())
    }

    fn rational(&self, n: usize, k: usize) -> Result<()> {
        if n * k > self.rational {
            return Err(Error::TooLarge { what: "n*k", got: n * k, max: self.rational });
        }
        Ok(())
    }
}

fn word(steps: &[crate::path::Step]) -> String {
    if steps.is_empty() {
        "(empty)".into()
    } else {
        steps_to_string(steps)
    }
}

fn need_format(f: Format, allowed: &[Format], verb: &str) -> Result<()> {
    if allowed.contains(&f) {
        Ok(())
    } else {
        Err(usage(format!("--format {f:?} is not available for {verb}").to_lowercase()))
    }
}

fn envelope(kind: &str, body: Value) -> String {
    let mut v = json!({ "schema": format!("dyck/{kind}/v{SCHEMA_VERSION}") });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

fn tiles_text(t: &Tiling) -> String {
    let v: Vec<String> = t.tiles.iter().map(|x| format!("({},{})s{}", x.anchor.0, x.anchor.1, x.size())).collect();
    v.join(" ")
}

/// The line printed by `gf --hook`, e.g. `[3]! = 1 + 2q + 2q^2 + q^3`.
pub fn hook_line(t: &PlaneTree) -> Result<String> {
    let mut lhs = format!("[{}]!", t.size());
    let mut hooks: Vec<usize> = (0..t.size()).map(|e| t.chord(e).len()).filter(|&h| h > 1).collect();
    hooks.sort_unstable_by(|x, y| y.cmp(x));
    if !hooks.is_empty() {
        lhs.push_str(" / ");
        for h in hooks {
            let _ = write!(lhs, "[{h}]");
        }
    }
    Ok(format!("{lhs} = {}", hook_length_gf(t)?.compact()))
}

/// Parse arguments and run, returning the text to print and the exit status.
pub fn main_with_args<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            Output { text: e.render().to_string(), status }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let guard = Guard::new(cli.max_size);
    let res = match &cli.command {
        Command::Enumerate(a) => enumerate(a, cli.format, &guard),
        Command::Bijection(a) => bijection(a, cli.format, &guard),
        Command::Gf(a) => gf(a, cli.format, &guard),
        Command::Poset(a) => poset(a, cli.format, &guard),
        Command::LatticeCheck(a) => lattice_check(a, cli.format, &guard),
        Command::VerifyPaper => verify_paper(cli.format),
    };
    match res {
        Ok(o) => o,
        Err(e) => {
            let status = match e {
                Error::TooLarge { .. } => 3,
                Error::Domain(_) | Error::Parse(_) | Error::InvalidPath { .. } | Error::InvalidLabel(_) => 2,
                _ => 1,
            };
            let hint = if status == 3 { " (raise the bound with --max-size)" } else { "" };
            Output { text: format!("error: {e}{hint}\n"), status }
        }
    }
}

fn ok(text: String) -> Result<Output> {
    Ok(Output { text, status: 0 })
}

fn enumerate(a: &EnumerateArgs, f: Format, g: &Guard) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json], "enumerate")?;
    let p = &a.p;
    if a.paths || a.trees {
        let n = p.n()?;
        g.plain(n)?;
        let paths = DyckPath::enumerate(n);
        let items: Vec<String> = if a.paths {
            paths.iter().map(|x| x.to_string()).collect()
        } else {
            paths.iter().map(|x| PlaneTree::from_path(x).to_parens()).collect()
        };
        let kind = if a.paths { "paths" } else { "trees" };
        return ok(match f {
            Format::Json => envelope("enumerate", json!({ "kind": kind, "n": n, "count": items.len(), "items": items })),
            _ => items.iter().map(|s| if s.is_empty() { "(empty)\n".to_string() } else { format!("{s}\n") }).collect(),
        });
    }
    if a.labels {
        let lambda = p.path()?;
        g.plain(lambda.size())?;
        let ls = LabeledTree::enumerate(&PlaneTree::from_path(&lambda), p.direction());
        return ok(match f {
            Format::Json => envelope(
                "enumerate",
                json!({ "kind": "labels", "tree": lambda.to_string(), "direction": p.direction(), "count": ls.len(),
                        "items": ls.iter().map(|l| l.labels().to_vec()).collect::<Vec<_>>() }),
            ),
            _ => ls.iter().map(|l| format!("{l}\n")).collect(),
        });
    }
    if a.tilings {
        let lambda = p.path()?;
        let (ta, tb) = p.ab()?;
        let n = lambda.size();
        if (ta, tb) == (1, 1) {
            g.plain(n)?;
        } else {
            g.rational(n, ta.max(tb))?;
        }
        let bottom = expand_du(&lambda, ta, tb);
        let top = match &p.top {
            Some(w) => parse_steps(w)?,
            None => expand_du(&DyckPath::top(n), ta, tb),
        };
        let ts = crate::tiling::enumerate_tilings_below(ta, tb, &bottom, &top);
        return ok(match f {
            Format::Json => envelope(
                "enumerate",
                json!({ "kind": "tilings", "a": ta, "b": tb, "bottom": steps_to_string(&bottom), "count": ts.len(), "items": ts }),
            ),
            _ => {
                let mut s = String::new();
                for t in &ts {
                    let _ = writeln!(s, "top {} weight {} tiles {}", word(&t.top()?), t.weight(), tiles_text(t));
                }
                s
            }
        });
    }
    if a.rational {
        let n = p.n()?;
        let (ra, rb) = p.ab()?;
        g.rational(n, ra.max(rb))?;
        let ps = if a.inflated { inflated_paths(n, ra, rb) } else { enumerate_rational(n, ra, rb)? };
        let items: Vec<String> = ps.iter().map(|x| x.to_string()).collect();
        return ok(match f {
            Format::Json => envelope(
                "enumerate",
                json!({ "kind": "rational", "n": n, "a": ra, "b": rb, "inflated_only": a.inflated, "count": items.len(), "items": items }),
            ),
            _ => items.iter().map(|s| if s.is_empty() { "(empty)\n".to_string() } else { format!("{s}\n") }).collect(),
        });
    }
    // stirling
    let n = p.n()?;
    let k = p.k()?;
    g.rational(n, k)?;
    let mut perms: Vec<Vec<usize>> =
        all_mu(n, k).iter().map(|m| stirling_from_sets(&sets_from_mu(m, k)?)).collect::<Result<_>>()?;
    perms.sort();
    ok(match f {
        Format::Json => envelope("enumerate", json!({ "kind": "stirling", "n": n, "k": k, "count": perms.len(), "items": perms })),
        _ => perms.iter().map(|s| format!("{}\n", fmt_seq(s))).collect(),
    })
}

fn fmt_seq(s: &[usize]) -> String {
    let sep = if s.iter().any(|&x| x > 9) { "," } else { "" };
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn bijection(a: &BijectionArgs, f: Format, g: &Guard) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json, Format::Svg], "bijection")?;
    let p = &a.p;
    let lambda = p.path()?;
    if let Some(mu) = &a.mu {
        let k = p.k()?;
        g.rational(lambda.size(), k)?;
        need_format(f, &[Format::Text, Format::Json], "bijection --mu")?;
        let mu = parse_list(mu)?;
        let s = sets_from_mu(&mu, k)?;
        let l = label_1k(&lambda, &s)?;
        let tau = tau_1k_of_sets(&lambda, &s)?;
        let inc = phi(&l)?;
        let q = chain_sets(&inc, k)?;
        let eta = eta_block_seq(&inc, k)?;
        let stirling = stirling_from_sets(&s)?;
        return ok(match f {
            Format::Json => envelope(
                "bijection",
                json!({ "kind": "1k", "path": lambda.to_string(), "k": k, "mu": mu, "sets": s,
                        "stirling": stirling, "decreasing_label": l.to_json(), "tau": tau,
                        "increasing_label": inc.to_json(), "dual_sets": q, "eta": eta }),
            ),
            _ => format!(
                "sets {s:?}\nstirling {}\ndecreasing label {l} on {}\ntau {tau} blocks {:?}\nincreasing label {inc}\ndual sets {q:?}\neta {eta}\n",
                fmt_seq(&stirling),
                l.tree(),
                tau.blocks_one_based()
            ),
        });
    }
    g.plain(lambda.size())?;
    let (dec, inc) = if let Some(t) = &p.seed_tau {
        let d = label_of_tau(&PlaneTree::from_path(&lambda), &Tau::parse(t)?)?;
        let i = d.bar();
        (d, i)
    } else if let Some(top) = &p.top {
        let top = DyckPath::parse(top)?;
        let t = crate::dyck::path_to_trivial_tiling(&lambda, &top)?;
        let d = hermite_label(&t)?;
        let i = d.bar();
        (d, i)
    } else {
        let l = p.label(&lambda)?;
        let b = l.bar();
        match l.direction() {
            Direction::Decreasing => (l, b),
            Direction::Increasing => (b, l),
        }
    };
    let t = dts(&inc)?;
    let back = hermite_label(&t)?;
    if back != dec {
        return Err(Error::Invariant(format!("history of the tiling decodes to {back}, expected {dec}")));
    }
    let tau = tau_of_label(&dec)?;
    let top = t.top()?;
    ok(match f {
        Format::Svg => to_svg(&t),
        Format::Json => envelope(
            "bijection",
            json!({ "kind": "dyck", "path": lambda.to_string(), "decreasing_label": dec.to_json(),
                    "increasing_label": inc.to_json(), "tau": tau.0, "tiling": t, "top": steps_to_string(&top),
                    "weight": t.weight(), "hermite_history": hermite_history(&t) }),
        ),
        _ => format!(
            "decreasing label {dec}\nincreasing label {inc}\ntau {tau}\ntop {}\nweight {}\nhistory {:?}\ntiles {}\n",
            word(&top),
            t.weight(),
            hermite_history(&t),
            tiles_text(&t)
        ),
    })
}

fn gf(a: &GfArgs, f: Format, g: &Guard) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json], "gf")?;
    let p = &a.p;
    if let Some(y) = &a.young {
        let mu = YoungDiagram::new(parse_list(y)?)?;
        g.plain(mu.parts().len().max(mu.parts().first().copied().unwrap_or(0)))?;
        let dir = if a.up { YDir::Up } else { YDir::Down };
        let v = gf_y(&mu, dir);
        let name = if a.up { "Y_up" } else { "Y_down" };
        return ok(match f {
            Format::Json => envelope("gf", json!({ "kind": name, "diagram": mu.parts(), "gf": v })),
            _ => format!("{name}({mu}) = {}\n", v.compact()),
        });
    }
    let lambda = p.path()?;
    g.plain(lambda.size())?;
    if a.hook {
        let t = PlaneTree::from_path(&lambda);
        let v = hook_length_gf(&t)?;
        return ok(match f {
            Format::Json => envelope("gf", json!({ "kind": "hook", "tree": lambda.to_string(), "gf": v, "line": hook_line(&t)? })),
            _ => format!("{}\n", hook_line(&t)?),
        });
    }
    if let Some(top) = &p.top {
        let mu = DyckPath::parse(top)?;
        let z = gf_z_paths(&lambda, &mu)?;
        let d = gf_dyck(&lambda, &mu)?;
        return ok(match f {
            Format::Json => envelope("gf", json!({ "kind": "paths", "bottom": lambda.to_string(), "top": mu.to_string(), "dyck": d, "z": z })),
            _ => format!("Dyck({lambda}, {mu}) = {}\nZ({lambda}, {mu}) = {}\n", d.compact(), z.compact()),
        });
    }
    let l = if p.label.is_some() { p.label(&lambda)? } else { post_order_seed(&PlaneTree::from_path(&lambda)) };
    if l.direction() != Direction::Decreasing {
        return Err(usage("gf works on decreasing labels; drop --increasing"));
    }
    let z = gf_z(&l)?;
    let zr = gf_z_recursive(&l)?;
    let fac = factorization(&l);
    let w = gf_w(&l);
    let show = |r: &Result<QPoly>| match r {
        Ok(v) => v.compact(),
        Err(e) => format!("n/a ({e})"),
    };
    let fac_gf = fac.as_ref().map(|fs| fs.iter().map(|x| x.y_down.clone()).product::<QPoly>()).map_err(Clone::clone);
    ok(match f {
        Format::Json => envelope(
            "gf",
            json!({ "kind": "label", "label": l.to_json(), "z": z, "z_recursive": zr,
                    "factorized": fac_gf.as_ref().ok(),
                    "diagrams": fac.as_ref().ok().map(|fs| fs.iter().map(|x| x.diagram.parts().to_vec()).collect::<Vec<_>>()),
                    "w": w.as_ref().ok() }),
        ),
        _ => {
            let mut s = format!("label {l} on {}\nZ = {}\nZ (recursive) = {}\nfactorized = {}\n", l.tree(), z.compact(), zr.compact(), show(&fac_gf));
            if let Ok(fs) = &fac {
                let ds: Vec<String> = fs.iter().map(|x| x.diagram.to_string()).collect();
                let _ = writeln!(s, "diagrams {}", ds.join(" "));
            }
            let _ = writeln!(s, "W = {}", show(&w));
            s
        }
    })
}

/// Render a poset with its elements ordered by rank, then by label.
fn render_poset<T>(p: &Poset<T>, f: Format, kind: &str, label: impl Fn(&T) -> String) -> Result<String>
where
    T: Clone + Eq + std::hash::Hash,
{
    let labels: Vec<String> = p.elements.iter().map(&label).collect();
    let ranks = p.ranks().ok();
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (ranks.as_ref().map_or(0, |r| r[i]), labels[i].clone()));
    let mut pos = vec![0; p.len()];
    for (k, &i) in order.iter().enumerate() {
        pos[i] = k;
    }
    let mut covers: Vec<(usize, usize)> = p.covers.iter().map(|&(i, j)| (pos[i], pos[j])).collect();
    covers.sort();
    let lattice = p.is_lattice();
    Ok(match f {
        Format::Dot => {
            let q = Poset::from_parts(order.iter().map(|&i| labels[i].clone()).collect(), covers);
            q.to_dot(kind, |s| s.clone())
        }
        Format::Json => envelope(
            "poset",
            json!({ "kind": kind,
                    "elements": order.iter().map(|&i| json!({ "label": labels[i], "rank": ranks.as_ref().map(|r| r[i]) })).collect::<Vec<_>>(),
                    "covers": covers, "lattice": lattice, "graded": ranks.is_some() }),
        ),
        _ => {
            let mut s = format!("{} elements, {} covers, lattice: {}\n", p.len(), covers.len(), if lattice { "yes" } else { "no" });
            match &ranks {
                Some(r) => {
                    let top = r.iter().copied().max().unwrap_or(0);
                    for k in 0..=top {
                        let row: Vec<&str> = order.iter().filter(|&&i| r[i] == k).map(|&i| labels[i].as_str()).collect();
                        let _ = writeln!(s, "rank {k}: {}", row.join(" "));
                    }
                }
                None => {
                    let row: Vec<&str> = order.iter().map(|&i| labels[i].as_str()).collect();
                    let _ = writeln!(s, "not graded: {}", row.join(" "));
                }
            }
            for (i, j) in covers {
                let _ = writeln!(s, "{} < {}", labels[order[i]], labels[order[j]]);
            }
            s
        }
    })
}

fn poset(a: &PosetArgs, f: Format, g: &Guard) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json, Format::Dot], "poset")?;
    let p = &a.p;
    let lambda = p.path()?;
    if let Some(cols) = &a.columns {
        let (va, vb) = p.ab()?;
        g.rational(lambda.size(), va.max(vb))?;
        let seed = vhh_seed(&lambda, va, vb, &parse_i64_list(cols)?)?;
        let ps = vhh_poset(&seed)?;
        let (lo, hi) = nonzero_window(&seed)?;
        let mut names = std::collections::HashMap::new();
        for t in &ps.elements {
            names.insert(t.clone(), vhh_compact(t, lo, hi)?);
        }
        return ok(render_poset(&ps, f, "vhh", |t: &Tiling| names[t].clone())?);
    }
    if let Some(mu) = &a.mu {
        let k = p.k()?;
        g.rational(lambda.size(), k)?;
        let s = sets_from_mu(&parse_list(mu)?, k)?;
        if a.dual {
            let seed = phi(&label_1k(&lambda, &s)?)?;
            let ps = eta_poset(&seed, k)?;
            let mut names = std::collections::HashMap::new();
            for l in &ps.elements {
                names.insert(l.clone(), eta_block_seq(l, k)?.to_string());
            }
            return ok(render_poset(&ps, f, "eta", |l: &LabeledTree| names[l].clone())?);
        }
        let ps = tau_1k_poset(&tau_1k_of_sets(&lambda, &s)?)?;
        return ok(render_poset(&ps, f, "tau_block", |x: &BlockSeq| x.to_string())?);
    }
    g.plain(lambda.size())?;
    if a.tau || p.seed_tau.is_some() {
        let seed = match &p.seed_tau {
            Some(t) => Tau::parse(t)?,
            None => tau_of_label(&p.label(&lambda)?)?,
        };
        label_of_tau(&PlaneTree::from_path(&lambda), &seed)?;
        let ps = tau_poset(&seed)?;
        return ok(render_poset(&ps, f, "tau", |t: &Tau| t.to_string())?);
    }
    let seed = p.label(&lambda)?;
    let ps = build_poset(&seed)?;
    ok(render_poset(&ps, f, "label", |l: &LabeledTree| l.to_string())?)
}

fn lattice_check(a: &LatticeArgs, f: Format, g: &Guard) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json], "lattice-check")?;
    let p = &a.p;
    let mut cases: Vec<(PlaneTree, Tau)> = Vec::new();
    if p.has_path() {
        let lambda = p.path()?;
        g.plain(lambda.size())?;
        let t = PlaneTree::from_path(&lambda);
        let seed = match (&p.seed_tau, &p.label) {
            (Some(s), _) => Tau::parse(s)?,
            (None, Some(_)) => tau_of_label(&p.label(&lambda)?)?,
            (None, None) => tau_of_label(&post_order_seed(&t))?,
        };
        label_of_tau(&t, &seed)?;
        cases.push((t, seed));
    } else {
        let n = p.n()?;
        g.plain(n)?;
        for t in PlaneTree::enumerate(n) {
            for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                cases.push((t.clone(), tau_of_label(&l)?));
            }
        }
    }
    let mut reports = Vec::with_capacity(cases.len());
    for (t, seed) in &cases {
        reports.push((t.to_string(), seed.to_string(), verify_lattice(t, seed)?));
    }
    let failed = reports.iter().filter(|r| !r.2.ok()).count();
    let status = i32::from(failed > 0);
    let text = match f {
        Format::Json => envelope(
            "lattice-check",
            json!({ "checked": reports.len(), "failed": failed,
                    "reports": reports.iter().map(|(t, s, r)| json!({ "tree": t, "seed": s, "report": r })).collect::<Vec<_>>() }),
        ),
        _ => {
            let mut s = String::new();
            if reports.len() == 1 {
                let (t, seed, r) = &reports[0];
                let _ = writeln!(s, "tree {t} seed {seed}");
                let _ = writeln!(s, "{} elements, {} covers, height {}, bottom {}, top {}", r.elements, r.covers, r.height, r.bottom, r.top);
                let _ = writeln!(s, "pairs where the scan join or mirror meet differ: {}", r.scan_mismatches);
                for v in &r.violations {
                    let _ = writeln!(s, "violation: {v}");
                }
            }
            let _ = writeln!(s, "{} of {} seeds give a graded lattice", reports.len() - failed, reports.len());
            s
        }
    };
    Ok(Output { text, status })
}

fn verify_paper(f: Format) -> Result<Output> {
    need_format(f, &[Format::Text, Format::Json], "verify-paper")?;
    let res = crate::golden::run_all();
    let failed = res.iter().filter(|r| !r.passed).count();
    let text = match f {
        Format::Json => envelope("verify-paper", json!({ "total": res.len(), "failed": failed, "checks": res })),
        _ => {
            let mut s = String::new();
            for r in &res {
                match &r.detail {
                    None => {
                        let _ = writeln!(s, "PASS  {}", r.name);
                    }
                    Some(d) => {
                        let _ = writeln!(s, "FAIL  {}: {d}", r.name);
                    }
                }
            }
            let _ = writeln!(s, "{} of {} checks passed", res.len() - failed, res.len());
            s
        }
    };
    Ok(Output { text, status: i32::from(failed > 0) })
}
