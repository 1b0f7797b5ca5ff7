use std::{collections::BTreeMap, fs, path::PathBuf, process::ExitCode};

use clap::{Args, Parser, Subcommand};
use mapforge::{
    corpus::{self, CorpusSpec},
    flagfile::{self, FlagFileError},
    generate::{generate, GENERATORS},
    properties,
};
use mapforge_core::{
    coloring_group, construct, direct_pso, dual, find_coloring, find_inconsistent_cycle,
    i_double, medial, opposite, petrie, quotient, recognize_i_double, sherk_double, ColorSet,
    ColoringGroup, FlagSystem, PsoKind, SurfaceSignature,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mapforge", version, about = "Flag systems of maps and maniplexes")]
struct Cli {
    /// Print a JSON document instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Flag file, or - for standard input.
    file: String,
}

#[derive(Args)]
struct WithSet {
    /// Flag file, or - for standard input.
    file: String,
    /// Color set in digit syntax, e.g. 02; e is the empty set.
    #[arg(long)]
    set: String,
}

#[derive(Args)]
struct WithEdge {
    /// Flag file, or - for standard input.
    file: String,
    /// Any flag of the edge.
    #[arg(long)]
    edge: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the flag-system invariants.
    Validate(Input),
    /// Cell counts, degrees, surface and coloring group.
    Info(Input),
    /// Find an I-coloring, or an inconsistent closed word.
    Color(WithSet),
    /// The coloring group T(M).
    Tgroup(Input),
    /// Pseudo-orientations built directly from arrows.
    Pso {
        file: String,
        /// face, vertex, edge, full or all.
        #[arg(long, default_value = "all")]
        kind: String,
    },
    /// Swap the roles of vertices and faces.
    Dual(Input),
    /// Faces become Petrie polygons.
    Petrie(Input),
    /// Replace r2 by r0 r2.
    Opp(Input),
    /// The medial map.
    Medial(Input),
    /// The I-double.
    Double(WithSet),
    /// The {0}-double of a map that is not vertex-bipartite.
    Sherk(Input),
    /// Recover M from an I-double of it.
    RecognizeDouble(WithSet),
    /// Identify each flag with its image under a deck involution.
    Quotient {
        file: String,
        /// File with the involution as whitespace-separated flag numbers.
        #[arg(long)]
        deck: String,
    },
    /// Connected sum along the faces of two flags.
    Sum {
        first: String,
        second: String,
        /// Flag of the first map, flag of the second, e.g. 0,5.
        #[arg(long)]
        flags: String,
    },
    /// Insert a vertex in the middle of an edge.
    Subdivide(WithEdge),
    /// Add a parallel edge, making a bigon.
    DoubleEdge(WithEdge),
    /// Add two parallel edges.
    TripleEdge(WithEdge),
    /// Generate a named map; `gen list` shows the generators.
    Gen {
        name: String,
        params: Vec<String>,
    },
    /// A map with a given coloring group on a given surface.
    BuildGroup {
        /// Comma-separated color sets, e.g. e,1.
        #[arg(long)]
        group: String,
        /// o<g> or n<k>.
        #[arg(long)]
        surface: String,
    },
    /// Find an isomorphism between two flag systems.
    Iso { first: String, second: String },
    /// Run property checks over a seeded corpus.
    Verify {
        /// JSON corpus specification; defaults to the built-in corpus.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Comma-separated checks; defaults to the spec's list or all.
        #[arg(long)]
        properties: Option<String>,
        /// Extra flag files added to the corpus.
        #[arg(long = "extra")]
        extra: Vec<String>,
        /// Directory receiving flag files of failing maps.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    /// A property or precondition did not hold.
    Property(String),
    /// Input could not be parsed or failed validation.
    Input(String),
}

impl From<FlagFileError> for Failure {
    fn from(e: FlagFileError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<mapforge_core::Error> for Failure {
    fn from(e: mapforge_core::Error) -> Self {
        Failure::Property(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    json: bool,
}

impl Out {
    fn report(&self, pairs: &[(&str, Value)]) {
        if self.json {
            let map: serde_json::Map<String, Value> =
                pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            println!("{}", Value::Object(map));
        } else {
            for (k, v) in pairs {
                match v {
                    Value::String(s) => println!("{k}={s}"),
                    other => println!("{k}={other}"),
                }
            }
        }
    }

    fn map(&self, m: &FlagSystem) {
        if self.json {
            println!("{}", json!({ "rank": m.rank(), "flags": m.flag_count(), "connections": m.connections() }));
        } else {
            print!("{}", flagfile::write(m));
        }
    }
}

fn load(path: &str) -> Result<FlagSystem, Failure> {
    Ok(flagfile::load(path)?)
}

fn color_set(text: &str, m: &FlagSystem) -> Result<ColorSet, Failure> {
    ColorSet::parse(text, m.rank()).map_err(|e| Failure::Input(e.to_string()))
}

fn edge_of(m: &FlagSystem, f: usize) -> Result<mapforge_core::Cell, Failure> {
    Ok(m.cell_containing(1, f)?)
}

fn degree_summary(m: &FlagSystem, dim: usize) -> String {
    let mut counts = BTreeMap::new();
    for c in m.cells(dim) {
        *counts.entry(c.degree()).or_insert(0usize) += 1;
    }
    counts.iter().map(|(d, n)| format!("{d}x{n}")).collect::<Vec<_>>().join(",")
}

fn info(m: &FlagSystem, out: &Out) -> Outcome {
    let t = coloring_group(m)?;
    let counts: Vec<usize> = (0..=m.rank()).map(|d| m.cell_count(d)).collect();
    if m.rank() == 2 {
        let sig = m.surface_signature()?;
        if out.json {
            out.report(&[
                ("rank", json!(2)),
                ("flags", json!(m.flag_count())),
                ("V", json!(counts[0])),
                ("E", json!(counts[1])),
                ("F", json!(counts[2])),
                ("chi", json!(sig.euler_characteristic)),
                ("surface", json!(sig.to_string())),
                ("T", json!(t.to_string())),
                ("vertex_degrees", json!(degree_summary(m, 0))),
                ("face_degrees", json!(degree_summary(m, 2))),
            ]);
        } else {
            println!("rank=2 flags={}", m.flag_count());
            println!(
                "V={} E={} F={} chi={} surface={sig} T={t}",
                counts[0], counts[1], counts[2], sig.euler_characteristic
            );
            println!("vertex_degrees={}", degree_summary(m, 0));
            println!("face_degrees={}", degree_summary(m, 2));
        }
    } else {
        let cells = counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        out.report(&[
            ("rank", json!(m.rank())),
            ("flags", json!(m.flag_count())),
            ("cells", json!(cells)),
            ("T", json!(t.to_string())),
        ]);
    }
    Ok(())
}

fn verify(
    spec: Option<PathBuf>,
    names: Option<String>,
    extra: Vec<String>,
    dump: Option<PathBuf>,
    out: &Out,
) -> Outcome {
    let mut spec: CorpusSpec = match spec {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => CorpusSpec::default(),
    };
    if let Ok(seed) = std::env::var("MAPFORGE_SEED") {
        spec.seed = seed
            .parse()
            .map_err(|_| Failure::Input(format!("MAPFORGE_SEED={seed:?} is not an integer")))?;
    }
    if let Some(names) = names {
        spec.operations = names.split(',').map(str::to_string).collect();
    }
    spec.validate().map_err(Failure::Input)?;
    let checks: Vec<&'static properties::Check> = if spec.operations.is_empty() {
        properties::CHECKS.iter().collect()
    } else {
        spec.operations.iter().filter_map(|n| properties::find(n)).collect()
    };
    let mut maps = corpus::build(&spec).map_err(|e| Failure::Input(e.to_string()))?;
    let mut broken = Vec::new();
    for path in extra {
        match flagfile::load(&path) {
            Ok(map) => maps.push(corpus::CorpusMap { name: path, map }),
            Err(e) => broken.push((path, e.to_string())),
        }
    }
    let outcomes = properties::run(&maps, &checks, spec.seed);
    let mut lines = Vec::new();
    for check in &checks {
        let failed = outcomes
            .iter()
            .filter(|o| o.property == check.name && o.error.is_some())
            .count();
        lines.push(json!({ "property": check.name, "passed": maps.len() - failed, "failed": failed }));
    }
    let failures: Vec<Value> = broken
        .iter()
        .map(|(path, e)| json!({ "property": "validate", "map": path, "error": e }))
        .chain(outcomes.iter().filter_map(|o| {
            o.error.as_ref().map(|e| json!({ "property": o.property, "map": maps[o.map].name, "error": e }))
        }))
        .collect();
    if let Some(dir) = &dump {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for o in outcomes.iter().filter(|o| o.error.is_some()) {
            let m = &maps[o.map];
            let text = format!(
                "# {}\n# {}: {}\n{}",
                m.name,
                o.property,
                o.error.as_deref().unwrap_or(""),
                flagfile::write(&m.map)
            );
            let path = dir.join(format!("{:03}-{}.flags", o.map, o.property));
            fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        }
    }
    if out.json {
        println!(
            "{}",
            json!({ "seed": spec.seed, "maps": maps.len(), "properties": lines, "failures": failures })
        );
    } else {
        println!("seed={} maps={}", spec.seed, maps.len());
        for l in &lines {
            println!("property={} passed={} failed={}", l["property"].as_str().unwrap(), l["passed"], l["failed"]);
        }
        for f in &failures {
            println!(
                "FAIL property={} map={} error={}",
                f["property"].as_str().unwrap(),
                f["map"].as_str().unwrap(),
                f["error"].as_str().unwrap()
            );
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Property(format!("{} failures", failures.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Validate(Input { file }) => {
            let m = load(&file)?;
            out.report(&[("valid", json!(true)), ("rank", json!(m.rank())), ("flags", json!(m.flag_count()))]);
        }
        Command::Info(Input { file }) => info(&load(&file)?, &out)?,
        Command::Color(WithSet { file, set }) => {
            let m = load(&file)?;
            let set = color_set(&set, &m)?;
            match find_coloring(&m, &set) {
                Some(c) => out.report(&[("set", json!(set.to_string())), ("coloring", json!(c.to_string()))]),
                None => {
                    let (f, word) = find_inconsistent_cycle(&m, &set).expect("no coloring means a bad cycle");
                    let letters: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
                    out.report(&[
                        ("set", json!(set.to_string())),
                        ("colorable", json!(false)),
                        ("flag", json!(f)),
                        ("cycle", json!(letters.join(" "))),
                    ]);
                    return Err(Failure::Property(format!("not {set}-colorable")));
                }
            }
        }
        Command::Tgroup(Input { file }) => {
            let t = coloring_group(&load(&file)?)?;
            out.report(&[("T", json!(t.to_string())), ("order", json!(t.len()))]);
        }
        Command::Pso { file, kind } => {
            let m = load(&file)?;
            let kinds: Vec<PsoKind> = if kind == "all" {
                PsoKind::ALL.to_vec()
            } else {
                vec![kind.parse().map_err(|e: mapforge_core::Error| Failure::Input(e.to_string()))?]
            };
            let mut pairs = Vec::new();
            for k in kinds {
                pairs.push((k.name(), json!(direct_pso(&m, k)?.is_some())));
            }
            out.report(&pairs);
        }
        Command::Dual(Input { file }) => out.map(&dual(&load(&file)?)),
        Command::Petrie(Input { file }) => out.map(&petrie(&load(&file)?)?),
        Command::Opp(Input { file }) => out.map(&opposite(&load(&file)?)?),
        Command::Medial(Input { file }) => out.map(&medial(&load(&file)?)?),
        Command::Double(WithSet { file, set }) => {
            let m = load(&file)?;
            let d = i_double(&m, &color_set(&set, &m)?)?;
            if d.split {
                eprintln!("map is {set}-colorable; the double splits into two copies");
            }
            out.map(&d.system);
        }
        Command::Sherk(Input { file }) => out.map(&sherk_double(&load(&file)?)?),
        Command::RecognizeDouble(WithSet { file, set }) => {
            let m = load(&file)?;
            let set = color_set(&set, &m)?;
            let rec = recognize_i_double(&m, &set)
                .ok_or_else(|| Failure::Property(format!("not the {set}-double of a map")))?;
            out.map(&rec.base);
        }
        Command::Quotient { file, deck } => {
            let m = load(&file)?;
            let text = flagfile::read_source(&deck)?;
            let u = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or(""))
                .flat_map(str::split_whitespace)
                .map(|t| t.parse::<usize>().map_err(|_| Failure::Input(format!("bad flag {t:?} in {deck}"))))
                .collect::<Result<Vec<_>, _>>()?;
            out.map(&quotient(&m, &u)?.0);
        }
        Command::Sum { first, second, flags } => {
            let pair: Vec<usize> = flags
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| Failure::Input(format!("bad --flags {flags:?}"))))
                .collect::<Result<_, _>>()?;
            let [fa, fb] = pair[..] else {
                return Err(Failure::Input("--flags needs two flags".into()));
            };
            out.map(&construct::connected_sum(&load(&first)?, &load(&second)?, fa, fb)?);
        }
        Command::Subdivide(WithEdge { file, edge }) => {
            let m = load(&file)?;
            out.map(&construct::subdivide_edge(&m, &edge_of(&m, edge)?)?);
        }
        Command::DoubleEdge(WithEdge { file, edge }) => {
            let m = load(&file)?;
            out.map(&construct::double_edge(&m, &edge_of(&m, edge)?)?);
        }
        Command::TripleEdge(WithEdge { file, edge }) => {
            let m = load(&file)?;
            out.map(&construct::triple_edge(&m, &edge_of(&m, edge)?)?);
        }
        Command::Gen { name, params } => {
            if name == "list" {
                for (n, p) in GENERATORS {
                    println!("{n} {p}");
                }
                return Ok(());
            }
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            out.map(&generate(&name, &params).map_err(|e| Failure::Input(e.to_string()))?);
        }
        Command::BuildGroup { group, surface } => {
            let h = ColoringGroup::parse(&group, 2).map_err(|e| Failure::Input(e.to_string()))?;
            let s: SurfaceSignature = surface.parse().map_err(|e: mapforge_core::Error| Failure::Input(e.to_string()))?;
            out.map(&construct::build_map_with_group(&h, s)?);
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            match a.isomorphism_to(&b)? {
                Some(phi) => {
                    let images: Vec<String> = phi.iter().map(|f| f.to_string()).collect();
                    out.report(&[("isomorphic", json!(true)), ("map", json!(images.join(" ")))]);
                }
                None => {
                    out.report(&[("isomorphic", json!(false))]);
                    return Err(Failure::Property("not isomorphic".into()));
                }
            }
        }
        Command::Verify { spec, properties: names, extra, dump, list } => {
            if list {
                for c in properties::CHECKS {
                    println!("{} {}", c.name, c.description);
                }
                return Ok(());
            }
            verify(spec, names, extra, dump, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("mapforge: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("mapforge: {msg}");
            ExitCode::from(2)
        }
    }
}
