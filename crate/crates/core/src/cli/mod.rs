//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code and both output streams, so it can be tested in-process.

pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::e8fold::{build_folding, coxeter_versor, verify_h4_relations};
use crate::induction::{self, catalog_roots, check_spinorial_automorphisms, identify, Identified};
use crate::linalg::Vector;
use crate::reptheory::{
    self, character_table, irrep_labels, mckay_graph, minus_one_class, natural_spinor_irrep, rep_norm_squared,
    CharacterTable, MatrixRep, DEFAULT_SEED,
};
use crate::rootsystem::{
    automorphism_order, cartan_matrix, generate, parse_diagram, resolve_simple_roots, verify, CoxeterDiagram,
    DiagramError, Family, RootSystem, RootSystemError, DEFAULT_ROOT_CEILING,
};
use crate::versorgroup::{VersorGroup, DEFAULT_GROUP_CEILING};
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "cliffcox",
    version,
    about = "Exact Clifford-algebra computations for reflection groups and root systems"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Bits of precision for decimal renderings of exact values.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(16..=4096))]
    precision: u32,
    /// Element-count ceiling for root and group generation.
    #[arg(long, global = true)]
    ceiling: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct KindFlags {
    /// The full group of pinors.
    #[arg(long)]
    pin: bool,
    /// The even subgroup (default).
    #[arg(long)]
    spin: bool,
    /// Rotations: spinors modulo sign.
    #[arg(long)]
    chiral: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepKind {
    /// 3×3 rotation matrices of the rotation group.
    So3,
    /// 4×4 left multiplication on spinors.
    Leftmult,
    /// ±1 by parity on the pinor group.
    Parity,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots generated from a diagram's simple roots.
    Roots { diagram: String },
    /// Order, classes and elements of the versor group of a diagram.
    Group {
        diagram: String,
        #[command(flatten)]
        kind: KindFlags,
    },
    /// Conjugacy classes with representatives.
    Classes {
        diagram: String,
        #[command(flatten)]
        kind: KindFlags,
    },
    /// 4D root system formed by the spinors of a 3D root system.
    Induce {
        diagram: String,
        /// Name the result from a catalog of 4D root systems.
        #[arg(long)]
        identify: bool,
        /// Sweep all left-right multiplications and count automorphisms.
        #[arg(long)]
        check_aut: bool,
    },
    /// Order of the automorphism group of a root system.
    Aut {
        /// A diagram, or `induced:<diagram>` for an induced 4D system.
        target: String,
    },
    /// Characters of a representation built from multivector actions.
    Rep {
        diagram: String,
        #[arg(long, value_enum)]
        kind: RepKind,
    },
    /// Character table of the rotation group (or its double cover).
    Chartable {
        diagram: String,
        /// Use the spin group instead of the rotation group.
        #[arg(long)]
        binary: bool,
    },
    /// McKay graph of the spin group.
    Mckay { diagram: String },
    /// Folding of E8 onto H4 in Cl(8).
    FoldE8 {
        /// Report the Coxeter relations of the folded generators.
        #[arg(long)]
        relations: bool,
        /// Report the Coxeter versor and its order.
        #[arg(long)]
        coxeter: bool,
    },
}

/// Exit status and output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RootSystem(RootSystemError::Diagram(d)) => Failure::Usage(d.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::from(Error::from(e))
            }
        }
    )*};
}

domain_from!(
    DiagramError,
    RootSystemError,
    crate::versorgroup::GroupError,
    crate::induction::InductionError,
    crate::reptheory::RepError,
    crate::e8fold::FoldError,
    crate::clifford::CliffordError
);

/// A command's result in every format it supports.
struct Report {
    meta: Value,
    data: Value,
    text: String,
    csv: Option<String>,
    dot: Option<String>,
}

struct Context {
    bits: u32,
    root_ceiling: usize,
    group_ceiling: usize,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let ctx = Context {
        bits: cli.precision,
        root_ceiling: cli.ceiling.unwrap_or(DEFAULT_ROOT_CEILING),
        group_ceiling: cli.ceiling.unwrap_or(DEFAULT_GROUP_CEILING),
    };
    let result = execute(&cli.command, &ctx).and_then(|report| emit(report, cli.format));
    match result {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn emit(report: Report, format: Format) -> Result<String, Failure> {
    let unsupported = |name: &str| Failure::Usage(format!("--format {name} is not available for this command"));
    match format {
        Format::Json => {
            let doc = json!({ "meta": report.meta, "data": report.data });
            Ok(serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n")
        }
        Format::Text => Ok(report.text),
        Format::Csv => report.csv.ok_or_else(|| unsupported("csv")),
        Format::Dot => report.dot.ok_or_else(|| unsupported("dot")),
    }
}

fn meta(command: &str, input: Option<&str>, extra: Value) -> Value {
    let mut m = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "field_basis": ["1", "√2", "τ", "√2τ"],
        "conventions": {
            "ordering": "descending lexicographic order of exact coordinates",
            "spinor_basis": "(1, e2e3, e3e1, e1e2)",
            "reflection": "v -> -a v a / (a|a)",
        },
    });
    if let Some(i) = input {
        m["input"] = json!(i);
    }
    if let (Value::Object(m), Value::Object(extra)) = (&mut m, extra) {
        m.extend(extra);
    }
    m
}

/// A diagram with coordinates found for its simple roots.
struct Resolved {
    input: String,
    diagram: CoxeterDiagram,
    family: Family,
    simple: Vec<Vector>,
}

impl Resolved {
    fn meta(&self, command: &str) -> Value {
        meta(
            command,
            Some(&self.input),
            json!({ "diagram": self.diagram.to_dsl(), "coordinates_from": self.family.name() }),
        )
    }
}

fn resolve(text: &str) -> Result<Resolved, Failure> {
    let diagram = parse_diagram(text)?;
    let (family, simple) = resolve_simple_roots(&diagram)?;
    Ok(Resolved {
        input: text.trim().to_string(),
        diagram,
        family,
        simple,
    })
}

fn kind_of(flags: &KindFlags) -> &'static str {
    if flags.pin {
        "pin"
    } else if flags.chiral {
        "chiral"
    } else {
        "spin"
    }
}

fn build_group(simple: &[Vector], kind: &str, ctx: &Context) -> Result<VersorGroup, Failure> {
    let pin = VersorGroup::pin(simple, ctx.group_ceiling)?;
    Ok(match kind {
        "pin" => pin,
        "spin" => pin.even_subgroup()?,
        _ => pin.even_subgroup()?.rotation_quotient()?,
    })
}

fn execute(command: &Command, ctx: &Context) -> Result<Report, Failure> {
    match command {
        Command::Roots { diagram } => roots(diagram, ctx),
        Command::Group { diagram, kind } => group(diagram, kind_of(kind), ctx),
        Command::Classes { diagram, kind } => classes(diagram, kind_of(kind), ctx),
        Command::Induce {
            diagram,
            identify,
            check_aut,
        } => induce(diagram, *identify, *check_aut, ctx),
        Command::Aut { target } => aut(target, ctx),
        Command::Rep { diagram, kind } => rep(diagram, *kind, ctx),
        Command::Chartable { diagram, binary } => chartable(diagram, *binary, ctx),
        Command::Mckay { diagram } => mckay(diagram, ctx),
        Command::FoldE8 { relations, coxeter } => {
            let both = !relations && !coxeter;
            fold_e8(*relations || both, *coxeter || both, ctx)
        }
    }
}

fn roots_csv(rs: &RootSystem) -> String {
    let mut header = vec!["index".to_string()];
    header.extend((1..=rs.dimension()).map(|i| format!("x{i}")));
    let rows: Vec<Vec<String>> = rs
        .roots()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![i.to_string()];
            row.extend(r.iter().map(|x| x.to_string()));
            row
        })
        .collect();
    render::csv(&header, &rows)
}

fn roots(diagram: &str, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    let rs = generate(&r.simple, ctx.root_ceiling)?;
    let report = verify(&rs);
    let cartan = cartan_matrix(&r.simple)?;
    let data = json!({
        "dimension": rs.dimension(),
        "count": rs.len(),
        "simple_roots": r.simple.iter().map(|v| render::vector(v, ctx.bits)).collect::<Vec<_>>(),
        "cartan_matrix": render::matrix(&cartan, ctx.bits),
        "roots": rs.roots().iter().map(|v| render::vector(v, ctx.bits)).collect::<Vec<_>>(),
        "verify": { "negation_closed": report.axiom1_holds(), "reflection_closed": report.axiom2_holds() },
    });
    let mut text = format!("{}: {} roots in dimension {}\n", r.input, rs.len(), rs.dimension());
    for v in rs.roots() {
        text.push_str(&render::vector_text(v));
        text.push('\n');
    }
    Ok(Report {
        meta: r.meta("roots"),
        data,
        text,
        csv: Some(roots_csv(&rs)),
        dot: None,
    })
}

fn group(diagram: &str, kind: &str, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    let g = build_group(&r.simple, kind, ctx)?;
    let sizes = g.class_sizes();
    let data = json!({
        "kind": g.kind().to_string(),
        "order": g.order(),
        "class_count": sizes.len(),
        "class_sizes": sizes,
        "elements": g.elements().iter().map(|e| render::multivector(e, ctx.bits)).collect::<Vec<_>>(),
    });
    let text = format!(
        "{} {} group: order {}, {} classes of sizes {:?}\n",
        r.input,
        g.kind(),
        g.order(),
        sizes.len(),
        sizes
    );
    let header = ["index", "order", "class", "element"].map(String::from);
    let rows: Vec<Vec<String>> = (0..g.order())
        .map(|i| {
            vec![
                i.to_string(),
                g.element_order(i).to_string(),
                g.class_of(i).to_string(),
                g.element(i).to_string(),
            ]
        })
        .collect();
    Ok(Report {
        meta: r.meta("group"),
        data,
        text,
        csv: Some(render::csv(&header, &rows)),
        dot: None,
    })
}

fn classes(diagram: &str, kind: &str, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    let g = build_group(&r.simple, kind, ctx)?;
    let list: Vec<Value> = g
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            json!({
                "index": k,
                "size": c.len(),
                "element_order": g.element_order(c[0]),
                "representative": render::multivector(g.element(c[0]), ctx.bits),
                "members": c,
            })
        })
        .collect();
    let mut text = format!("{} {} group of order {}\n", r.input, g.kind(), g.order());
    let header = ["class", "size", "order", "representative"].map(String::from);
    let mut rows = Vec::new();
    for (k, c) in g.conjugacy_classes().iter().enumerate() {
        let order = g.element_order(c[0]);
        text.push_str(&format!("{k}: size {}, order {order}, {}\n", c.len(), g.element(c[0])));
        rows.push(vec![
            k.to_string(),
            c.len().to_string(),
            order.to_string(),
            g.element(c[0]).to_string(),
        ]);
    }
    Ok(Report {
        meta: r.meta("classes"),
        data: json!({ "kind": g.kind().to_string(), "order": g.order(), "classes": list }),
        text,
        csv: Some(render::csv(&header, &rows)),
        dot: None,
    })
}

fn induce(diagram: &str, with_identify: bool, check_aut: bool, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    if r.family.dimension() != 3 {
        return Err(Failure::Domain(format!(
            "induction needs a 3D root system; `{}` has coordinates in dimension {}",
            r.input,
            r.family.dimension()
        )));
    }
    let g = build_group(&r.simple, "spin", ctx)?;
    let phi = induction::induce_from_group(&g)?;
    let report = verify(&phi);
    let mut data = json!({
        "count": phi.len(),
        "roots": phi.roots().iter().map(|v| render::vector(v, ctx.bits)).collect::<Vec<_>>(),
        "verify": { "negation_closed": report.axiom1_holds(), "reflection_closed": report.axiom2_holds() },
    });
    let mut text = format!("{}: {} induced roots in dimension 4\n", r.input, phi.len());
    if with_identify {
        let name = identify(&phi);
        data["identified"] = json!(name.to_string());
        text.push_str(&format!("identified: {name}\n"));
    }
    if check_aut {
        let sweep = check_spinorial_automorphisms(&g)?;
        let order = automorphism_order(&phi);
        data["automorphisms"] = json!({
            "pairs_checked": sweep.pairs_checked,
            "pairs_preserving": sweep.pairs_preserving,
            "distinct_maps": sweep.distinct_maps,
            "distinct_maps_with_reversal": sweep.distinct_maps_with_reversal,
            "automorphism_order": order.to_string(),
        });
        text.push_str(&format!(
            "left-right pairs preserving the roots: {}/{}\ndistinct maps: {} ({} with reversal)\nautomorphism group order: {order}\n",
            sweep.pairs_preserving, sweep.pairs_checked, sweep.distinct_maps, sweep.distinct_maps_with_reversal
        ));
    }
    Ok(Report {
        meta: r.meta("induce"),
        data,
        text,
        csv: Some(roots_csv(&phi)),
        dot: None,
    })
}

/// Root systems for `aut`: diagrams with coordinates, the 4D catalog by
/// diagram, or an induced system.
fn aut_target(target: &str, ctx: &Context) -> Result<(RootSystem, Value), Failure> {
    let target = target.trim();
    if let Some(source) = target.strip_prefix("induced:") {
        let r = resolve(source)?;
        if r.family.dimension() != 3 {
            return Err(Failure::Domain(format!("`{source}` is not a 3D root system")));
        }
        let g = build_group(&r.simple, "spin", ctx)?;
        let phi = induction::induce_from_group(&g)?;
        return Ok((phi, meta("aut", Some(target), json!({ "diagram": r.diagram.to_dsl() }))));
    }
    let diagram = parse_diagram(target)?;
    match resolve_simple_roots(&diagram) {
        Ok((family, simple)) => {
            let rs = generate(&simple, ctx.root_ceiling)?;
            let m = meta(
                "aut",
                Some(target),
                json!({ "diagram": diagram.to_dsl(), "coordinates_from": family.name() }),
            );
            Ok((rs, m))
        }
        Err(RootSystemError::NoCoordinates(dsl)) => {
            for name in [Identified::D4, Identified::F4, Identified::H4, Identified::A1Fourth] {
                let named = crate::rootsystem::named_family(&name.to_string()).expect("catalog names parse");
                if named == diagram {
                    let rs = RootSystem::from_roots(4, catalog_roots(name))?;
                    let m = meta(
                        "aut",
                        Some(target),
                        json!({ "diagram": dsl, "coordinates_from": "4D catalog" }),
                    );
                    return Ok((rs, m));
                }
            }
            Err(RootSystemError::NoCoordinates(dsl).into())
        }
        Err(e) => Err(e.into()),
    }
}

fn aut(target: &str, ctx: &Context) -> Result<Report, Failure> {
    let (rs, meta) = aut_target(target, ctx)?;
    let order = automorphism_order(&rs);
    Ok(Report {
        meta,
        data: json!({ "roots": rs.len(), "dimension": rs.dimension(), "automorphism_order": order.to_string() }),
        text: format!("{order}\n"),
        csv: Some(render::csv(
            &["roots".into(), "automorphism_order".into()],
            &[vec![rs.len().to_string(), order.to_string()]],
        )),
        dot: None,
    })
}

fn rep(diagram: &str, kind: RepKind, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    if r.family.dimension() != 3 && kind != RepKind::Parity {
        return Err(Failure::Domain("spinor representations need a 3D root system".into()));
    }
    let (g, rep, name): (VersorGroup, MatrixRep, &str) = match kind {
        RepKind::So3 => {
            let g = build_group(&r.simple, "chiral", ctx)?;
            let rep = reptheory::so3_rep(&g)?;
            (g, rep, "so3")
        }
        RepKind::Leftmult => {
            let g = build_group(&r.simple, "spin", ctx)?;
            let rep = reptheory::left_mult_rep(&g)?;
            (g, rep, "leftmult")
        }
        RepKind::Parity => {
            let g = build_group(&r.simple, "pin", ctx)?;
            let rep = reptheory::parity_rep(&g);
            (g, rep, "parity")
        }
    };
    let norm = rep_norm_squared(&rep, &g);
    let kind_label = match norm.as_rational().map(|q| q.to_string()).as_deref() {
        Some("1") => "real",
        Some("2") => "complex",
        Some("4") => "quaternionic",
        _ => "reducible",
    };
    let classes = g.conjugacy_classes();
    let characters: Vec<Value> = classes
        .iter()
        .zip(&rep.character)
        .map(|(c, chi)| {
            json!({
                "size": c.len(),
                "element_order": g.element_order(c[0]),
                "representative": render::multivector(g.element(c[0]), ctx.bits),
                "character": render::scalar(chi, ctx.bits),
            })
        })
        .collect();
    let mut text = format!(
        "{} {name} representation of degree {} on a {} group of order {}\n",
        r.input,
        rep.degree,
        g.kind(),
        g.order()
    );
    let header = ["class", "size", "order", "character"].map(String::from);
    let mut rows = Vec::new();
    for (k, (c, chi)) in classes.iter().zip(&rep.character).enumerate() {
        text.push_str(&format!("{k}: size {} character {chi}\n", c.len()));
        rows.push(vec![
            k.to_string(),
            c.len().to_string(),
            g.element_order(c[0]).to_string(),
            chi.to_string(),
        ]);
    }
    text.push_str(&format!("norm squared: {norm} ({kind_label})\n"));
    Ok(Report {
        meta: r.meta("rep"),
        data: json!({
            "kind": name,
            "group": { "kind": g.kind().to_string(), "order": g.order() },
            "degree": rep.degree,
            "classes": characters,
            "norm_squared": render::scalar(&norm, ctx.bits),
            "type": kind_label,
        }),
        text,
        csv: Some(render::csv(&header, &rows)),
        dot: None,
    })
}

/// Class names such as `1`, `20C3`, `12C5'`.
fn class_labels(table: &CharacterTable) -> Vec<String> {
    let mut used: Vec<String> = Vec::new();
    table
        .class_sizes
        .iter()
        .zip(&table.class_orders)
        .map(|(&size, &order)| {
            let mut label = if order == 1 {
                "1".to_string()
            } else {
                format!("{size}C{order}")
            };
            while used.contains(&label) {
                label.push('\'');
            }
            used.push(label.clone());
            label
        })
        .collect()
}

fn table_for(r: &Resolved, binary: bool, ctx: &Context) -> Result<(VersorGroup, CharacterTable), Failure> {
    if r.family.dimension() != 3 {
        return Err(Failure::Domain(
            "character tables are computed for 3D root systems".into(),
        ));
    }
    let g = build_group(&r.simple, if binary { "spin" } else { "chiral" }, ctx)?;
    let table = character_table(&g, DEFAULT_SEED)?;
    Ok((g, table))
}

fn chartable(diagram: &str, binary: bool, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    let (g, table) = table_for(&r, binary, ctx)?;
    let labels = irrep_labels(&table, minus_one_class(&g), natural_spinor_irrep(&g, &table));
    let classes = class_labels(&table);
    let irreps: Vec<Value> = (0..table.degrees.len())
        .map(|i| {
            json!({
                "label": labels[i],
                "degree": table.degrees[i],
                "characters": table.rows[i].iter().map(|e| render::entry(e, ctx.bits)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut header = vec!["irrep".to_string()];
    header.extend(classes.iter().cloned());
    let rows: Vec<Vec<String>> = (0..table.degrees.len())
        .map(|i| {
            let mut row = vec![labels[i].clone()];
            row.extend(table.rows[i].iter().map(render::entry_text));
            row
        })
        .collect();
    let mut text = format!("{} {} group of order {}\n", r.input, g.kind(), g.order());
    text.push_str(&header.join("\t"));
    text.push('\n');
    for row in &rows {
        text.push_str(&row.join("\t"));
        text.push('\n');
    }
    Ok(Report {
        meta: r.meta("chartable"),
        data: json!({
            "group": { "kind": g.kind().to_string(), "order": g.order() },
            "classes": classes.iter().zip(&table.class_sizes).zip(&table.class_orders).map(|((l, s), o)| {
                json!({ "label": l, "size": s, "element_order": o })
            }).collect::<Vec<_>>(),
            "irreps": irreps,
            "degree_sum": table.degrees.iter().sum::<usize>(),
            "all_exact": table.all_exact(),
            "orthogonality_residual": table.orthogonality_residual(),
        }),
        text,
        csv: Some(render::csv(&header, &rows)),
        dot: None,
    })
}

fn mckay(diagram: &str, ctx: &Context) -> Result<Report, Failure> {
    let r = resolve(diagram)?;
    let (g, table) = table_for(&r, true, ctx)?;
    let graph = mckay_graph(&g, &table)?;
    let affine = graph.affine_type().map(|k| k.to_string());
    let mut text = format!(
        "{} McKay graph ({})\n",
        r.input,
        affine.as_deref().unwrap_or("no affine match")
    );
    for &(i, j, m) in &graph.edges {
        text.push_str(&format!("{} -- {} x{m}\n", graph.labels[i], graph.labels[j]));
    }
    let header = ["from", "to", "multiplicity"].map(String::from);
    let rows: Vec<Vec<String>> = graph
        .edges
        .iter()
        .map(|&(i, j, m)| vec![graph.labels[i].clone(), graph.labels[j].clone(), m.to_string()])
        .collect();
    Ok(Report {
        meta: r.meta("mckay"),
        data: json!({
            "nodes": graph.labels.iter().zip(&graph.degrees).map(|(l, d)| json!({ "label": l, "degree": d })).collect::<Vec<_>>(),
            "edges": graph.edges.iter().map(|&(i, j, m)| json!([i, j, m])).collect::<Vec<_>>(),
            "spinor_node": graph.spinor,
            "affine_type": affine,
            "degree_sum": graph.degrees.iter().sum::<usize>(),
        }),
        text,
        csv: Some(render::csv(&header, &rows)),
        dot: Some(graph.to_dot()),
    })
}

fn fold_e8(relations: bool, coxeter: bool, ctx: &Context) -> Result<Report, Failure> {
    let cfg = build_folding()?;
    let mut data = json!({
        "pairs": cfg.pairs.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "generators": cfg.generators.iter().map(|a| render::multivector(a.value(), ctx.bits)).collect::<Vec<_>>(),
    });
    let mut text = String::new();
    if relations {
        let rel = verify_h4_relations(&cfg)?;
        data["relations"] = json!({
            "pairs_orthogonal": rel.pairs_orthogonal,
            "squares_minus_one": rel.squares_minus_one,
            "involutions": rel.involutions,
            "map_orders": rel.map_orders,
            "versor_orders": rel.versor_orders,
            "expected_h4": rel.expected,
            "matches_h4": rel.matches_h4(),
        });
        text.push_str(&format!(
            "pairs orthogonal: {}\norders of s_ai s_aj: {:?}\nmatches H4: {}\n",
            rel.pairs_orthogonal,
            rel.map_orders,
            rel.matches_h4()
        ));
    }
    if coxeter {
        let cox = coxeter_versor(&cfg)?;
        let sign = |s: i8| match s {
            1 => "+W",
            -1 => "-W",
            _ => "neither",
        };
        data["coxeter"] = json!({
            "w": render::multivector(&cox.w, ctx.bits),
            "w_is_unit": cox.w_is_unit,
            "coxeter_number": cox.coxeter_number,
            "versor_order": cox.versor_order,
            "h4_coxeter_number": cox.h4_coxeter_number,
            "w_h4_equals": sign(cox.h4_sign),
            "conjugator": cox.conjugator,
            "conjugate_equals": sign(cox.conjugate_sign),
            "permutes_roots": cox.permutes_roots,
        });
        text.push_str(&format!(
            "Coxeter number: {} (versor order {})\nH4 Coxeter number: {}\nW_H4 equals: {}\nconjugated by {:?}: {}\nW permutes the 240 roots: {}\n",
            cox.coxeter_number,
            cox.versor_order,
            cox.h4_coxeter_number,
            sign(cox.h4_sign),
            cox.conjugator,
            sign(cox.conjugate_sign),
            cox.permutes_roots
        ));
    }
    let conventions = json!({
        "e8_simple_roots": "a1..a6 = e7-e6, e6-e5, e5-e4, e4-e3, e3-e2, e2-e1; a7 = (1,-1,-1,-1,-1,-1,-1,1)/2; a8 = e1+e2",
        "h4_labels": "5 on the last pair",
    });
    Ok(Report {
        meta: meta("fold-e8", None, json!({ "e8_conventions": conventions })),
        data,
        text,
        csv: None,
        dot: None,
    })
}
