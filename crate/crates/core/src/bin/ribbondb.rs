use std::error::Error;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ribbondb::database::{self, builtin_table};
use ribbondb::invariants;
use ribbondb::pd::{parse_pd, PlanarDiagram};
use ribbondb::simplify::{certify_unlink, simplify_greedy, UnlinkCertificate};
use ribbondb::tangle::{self, end_by_name, EndAssignment, Stitching, Tangle};
use ribbondb::verify::{verify_table, VerifyOptions};
use ribbondb::EdgeLabel;

type Result<T> = std::result::Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(
    name = "ribbondb",
    version,
    about = "Planar diagrams, tangle closures and ribbon knot table verification"
)]
struct Cli {
    /// Emit JSON. With a path, write it there instead of stdout.
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    json: Option<Option<PathBuf>>,
    /// Exit nonzero when a verification check fails.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a PD code, printing its canonical form.
    Parse(Input),
    /// Compute invariants of a closed diagram.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        which: Option<Which>,
    },
    /// Apply closures and stitchings to a tangle.
    Close {
        #[command(flatten)]
        tangle: TangleInput,
        #[arg(long, value_enum, default_value = "none")]
        closure: Closure,
        /// Extra stitching such as `t1:t4`, named by the input tangle's ends.
        #[arg(long, value_name = "END:END")]
        stitch: Vec<String>,
    },
    /// Cut a knot diagram into a 4-strand tangle.
    Cut {
        #[command(flatten)]
        input: Input,
        /// Cut edges `1,v1,v2,v3`; defaults to the table values of `--knot`.
        #[arg(long, value_delimiter = ',')]
        labels: Vec<u32>,
        #[arg(long)]
        mirrored: bool,
    },
    /// Greedy Reidemeister I/II reduction.
    Simplify {
        #[command(flatten)]
        input: Input,
        /// Reduce the unlink candidate of this table knot instead.
        #[arg(long, value_name = "NAME", conflicts_with_all = ["pd", "knot"])]
        candidate: Option<String>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Verify table rows against reference invariants.
    Verify {
        #[arg(long, conflicts_with = "knot")]
        all: bool,
        #[arg(long, value_name = "NAME")]
        knot: Vec<String>,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Reference file replacing the embedded one.
        #[arg(long, value_name = "PATH")]
        references: Option<PathBuf>,
    },
    /// List the table rows.
    List {
        /// Print rows as tab-separated text.
        #[arg(long)]
        export: bool,
    },
}

#[derive(Args)]
struct Input {
    #[arg(long, conflicts_with = "knot")]
    pd: Option<String>,
    /// A table row name such as `6_1`.
    #[arg(long)]
    knot: Option<String>,
}

#[derive(Args)]
struct TangleInput {
    /// Crossingless tangle with this many strands.
    #[arg(long, value_name = "N", conflicts_with_all = ["knot", "pd"])]
    untangle: Option<usize>,
    /// Table knot cut along its tangle values.
    #[arg(long, conflicts_with = "pd")]
    knot: Option<String>,
    /// Tangle interior; needs `--tops` and `--bottoms`.
    #[arg(long, requires_all = ["tops", "bottoms"])]
    pd: Option<String>,
    #[arg(long, value_delimiter = ',')]
    tops: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    bottoms: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Jones,
    Alexander,
    Det,
    Components,
    Bracket,
    Writhe,
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    None,
    Top,
    Bottom,
    Full,
    Both,
}

fn knot_record(name: &str) -> Result<&'static database::TangleRecord> {
    builtin_table()
        .get(name)
        .ok_or_else(|| format!("unknown knot `{name}` (see `ribbondb list`)").into())
}

fn read_input(input: &Input) -> Result<PlanarDiagram> {
    match (&input.pd, &input.knot) {
        (Some(text), _) => Ok(parse_pd(text)?),
        (None, Some(name)) => Ok(knot_record(name)?.diagram()?),
        (None, None) => Err("give --pd or --knot".into()),
    }
}

fn labels(xs: &[u32]) -> Result<Vec<EdgeLabel>> {
    xs.iter()
        .map(|&x| EdgeLabel::new(x).ok_or_else(|| "edge labels must be >= 1".into()))
        .collect()
}

fn read_tangle(t: &TangleInput) -> Result<Tangle> {
    if let Some(n) = t.untangle {
        return Ok(tangle::untangle(n)?);
    }
    if let Some(name) = &t.knot {
        let r = knot_record(name)?;
        return Ok(tangle::cut(
            &r.diagram()?,
            &r.tangle_values.cut_labels(),
            EndAssignment::Forward,
        )?);
    }
    if let Some(text) = &t.pd {
        return Ok(Tangle::new(
            parse_pd(text)?,
            labels(&t.tops)?,
            labels(&t.bottoms)?,
        )?);
    }
    Err("give --untangle, --knot or --pd".into())
}

struct Output {
    json: Option<Option<PathBuf>>,
}

impl Output {
    fn emit(&self, text: String, value: serde_json::Value) -> Result<()> {
        let out = match &self.json {
            None => text,
            Some(None) => serde_json::to_string_pretty(&value)? + "\n",
            Some(Some(path)) => {
                std::fs::write(path, serde_json::to_string_pretty(&value)? + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                text
            }
        };
        let text: String = out
            .lines()
            .map(|l| l.trim_end().to_string() + "\n")
            .collect();
        match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        }
    }
}

fn diagram_json(pd: &PlanarDiagram) -> serde_json::Value {
    json!({
        "pd": pd.to_string(),
        "crossings": pd.crossing_count(),
        "free_loops": pd.free_loops(),
        "boundary": pd.boundary_labels().iter().map(|x| x.get()).collect::<Vec<_>>(),
    })
}

fn tangle_json(t: &Tangle) -> serde_json::Value {
    let ids = |xs: &[EdgeLabel]| xs.iter().map(|x| x.get()).collect::<Vec<_>>();
    json!({
        "pd": t.interior().to_string(),
        "crossings": t.crossing_count(),
        "free_loops": t.interior().free_loops(),
        "arcs": t.interior().arcs().iter().map(|(a, b)| [a.get(), b.get()]).collect::<Vec<_>>(),
        "tops": ids(t.tops()),
        "bottoms": ids(t.bottoms()),
    })
}

fn tangle_text(t: &Tangle) -> String {
    let ids = |xs: &[EdgeLabel]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut s = format!("pd: {}\ncrossings: {}\n", t.interior(), t.crossing_count());
    if !t.interior().arcs().is_empty() {
        let arcs: Vec<String> = t
            .interior()
            .arcs()
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        s += &format!("arcs: {}\n", arcs.join(" "));
    }
    s += &format!(
        "free_loops: {}\ntops: [{}]\nbottoms: [{}]\n",
        t.interior().free_loops(),
        ids(t.tops()),
        ids(t.bottoms())
    );
    s
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Parse(input) => {
            let pd = read_input(&input)?;
            let components = pd.trace_components().ok().map(|c| c.count);
            let mut text = format!("{pd}\ncrossings: {}\n", pd.crossing_count());
            match components {
                Some(c) => text += &format!("components: {c}\n"),
                None => {
                    let b: Vec<String> =
                        pd.boundary_labels().iter().map(|x| x.to_string()).collect();
                    text += &format!("boundary: {}\n", b.join(","));
                }
            }
            let mut value = diagram_json(&pd);
            value["components"] = json!(components);
            out.emit(text, value)?;
        }
        Command::Invariants { input, which } => {
            let pd = read_input(&input)?;
            let all = which.is_none();
            let wants = |w: Which| all || which == Some(w);
            let mut text = String::new();
            let mut value = serde_json::Map::new();
            let mut put = |key: &str, shown: String, v: serde_json::Value| {
                if all {
                    text += &format!("{key}: {shown}\n");
                } else {
                    text += &format!("{shown}\n");
                }
                value.insert(key.to_string(), v);
            };
            if wants(Which::Components) {
                let c = pd.trace_components()?.count;
                put("components", c.to_string(), json!(c));
            }
            if wants(Which::Writhe) {
                let w = invariants::writhe(&pd)?;
                put("writhe", w.to_string(), json!(w));
            }
            if wants(Which::Bracket) {
                let b = invariants::kauffman_bracket(&pd)?;
                put("bracket", b.to_string(), json!(b.to_json_terms()));
            }
            if wants(Which::Jones) {
                let j = invariants::jones(&pd)?;
                put("jones", j.to_string(), json!(j.to_json_terms()));
            }
            let knot = pd.trace_components()?.count == 1;
            if wants(Which::Alexander) && (knot || !all) {
                let a = invariants::alexander(&pd)?;
                put("alexander", a.to_string(), json!(a.to_json_terms()));
            }
            if wants(Which::Det) && (knot || !all) {
                let d = invariants::determinant(&pd)?;
                put("det", d.to_string(), json!(d));
            }
            out.emit(text, serde_json::Value::Object(value))?;
        }
        Command::Close {
            tangle: input,
            closure,
            stitch,
        } => {
            let t = read_tangle(&input)?;
            let extra: Vec<Stitching> = stitch
                .iter()
                .map(|s| {
                    let (a, b) = s
                        .split_once(':')
                        .ok_or_else(|| format!("bad stitching `{s}`, expected END:END"))?;
                    let end =
                        |n: &str| end_by_name(&t, n).ok_or_else(|| format!("no end named `{n}`"));
                    Ok(Stitching::new(end(a)?, end(b)?))
                })
                .collect::<std::result::Result<_, String>>()?;
            let closed = match closure {
                Closure::None => t,
                Closure::Top => t.top_closure()?,
                Closure::Bottom => t.bottom_closure()?,
                Closure::Full => t.full_closure()?,
                Closure::Both => t.top_closure()?.bottom_closure()?,
            };
            let result = closed.stitch(&extra)?;
            let mut text = tangle_text(&result);
            let mut value = tangle_json(&result);
            if result.is_closed() {
                let c = result.interior().trace_components()?.count;
                text += &format!("components: {c}\n");
                value["components"] = json!(c);
            }
            out.emit(text, value)?;
        }
        Command::Cut {
            input,
            labels: cut_labels,
            mirrored,
        } => {
            let pd = read_input(&input)?;
            let cut_labels = match (&input.knot, cut_labels.is_empty()) {
                (_, false) => cut_labels,
                (Some(name), true) => knot_record(name)?.tangle_values.cut_labels().to_vec(),
                (None, true) => return Err("give --labels 1,v1,v2,v3".into()),
            };
            let assignment = if mirrored {
                EndAssignment::Mirrored
            } else {
                EndAssignment::Forward
            };
            let t = tangle::cut(&pd, &cut_labels, assignment)?;
            let mut text = tangle_text(&t);
            text += &format!("pure_braid: {}\n", t.is_pure_braid());
            let mut value = tangle_json(&t);
            value["pure_braid"] = json!(t.is_pure_braid());
            out.emit(text, value)?;
        }
        Command::Simplify {
            input,
            candidate,
            max_steps,
        } => {
            let pd = match &candidate {
                Some(name) => knot_record(name)?.unlink_candidate(EndAssignment::Forward)?,
                None => read_input(&input)?,
            };
            pd.require_closed()?;
            let budget = max_steps.unwrap_or(10 * pd.crossing_count());
            let s = simplify_greedy(&pd, budget);
            let cert = certify_unlink(&pd);
            let mut text = format!(
                "pd: {}\ncrossings: {} -> {}\nfree_loops: {}\nmoves: {}\n",
                s.diagram,
                pd.crossing_count(),
                s.diagram.crossing_count(),
                s.diagram.free_loops(),
                s.moves.len()
            );
            for m in &s.moves {
                text += &format!("  {:?} {:?}\n", m.kind, m.crossings);
            }
            if s.incomplete {
                text += "incomplete: step budget exhausted\n";
            }
            text += &match cert {
                UnlinkCertificate::Certified(n) => format!("certified unlink of {n} components\n"),
                UnlinkCertificate::Unknown => "not certified\n".to_string(),
            };
            let mut value = diagram_json(&s.diagram);
            value["moves"] = json!(s.moves);
            value["incomplete"] = json!(s.incomplete);
            value["certificate"] = json!(cert);
            out.emit(text, value)?;
        }
        Command::Verify {
            all,
            knot,
            max_steps,
            references,
        } => {
            let table = builtin_table();
            for name in &knot {
                knot_record(name)?;
            }
            if !all && knot.is_empty() {
                return Err("give --all or --knot NAME".into());
            }
            let loaded;
            let refs = match &references {
                Some(path) => {
                    loaded = database::load_references(path)?;
                    &loaded
                }
                None => database::builtin_references(),
            };
            let only = (!all).then_some(knot.as_slice());
            let report = verify_table(table, refs, only, VerifyOptions { max_steps });
            out.emit(report.render_text(), serde_json::to_value(&report)?)?;
            if cli.strict && report.has_failures() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::List { export } => {
            let table = builtin_table();
            let text = if export {
                table.export_text()
            } else {
                table
                    .records
                    .iter()
                    .map(|r| {
                        let n = r.diagram().map(|d| d.crossing_count()).unwrap_or(0);
                        format!(
                            "{:<8} {:>2} crossings  values {}\n",
                            r.name, n, r.tangle_values
                        )
                    })
                    .collect()
            };
            out.emit(text, serde_json::to_value(table)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
