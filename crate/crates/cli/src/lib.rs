//! Command-line front end. Documents come in and go out as JSON (see
//! [`doc`]); diagnostics go to the error stream so standard output stays
//! machine-readable. Exit statuses: 0 success or pass, 1 a checked property
//! fails or a counterexample is found, 2 usage, parse, or budget errors.

pub mod doc;
pub mod dot;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use gf_core::duality::{downset_algebra, spectrum, stone};
use gf_core::frames::{
    classify_one_rel, classify_two_rel, complex_gao, complex_one_rel, one_rel_transform,
    prime_transform, second_transform, Inclusion,
};
use gf_core::modal::{classify, induced_relations, verify_representation, LawCheck};
use gf_core::{
    enum_forests, enum_gaos, enum_two_rel_frames, find_counterexample, property_catalog,
    theorem_catalog, verify_theorem, Budget, Error, FrameDedup, OneRelClass, TwoRelConstraint,
};
use serde_json::{json, Value};
use std::io::{Read, Write};

use doc::{downset_names, Doc, Frame1Doc, Frame2Doc, ForestDoc, GaoDoc, Object};

#[derive(Parser)]
#[command(name = "gf", version, about = "Finite Gödel algebras with operators and their forest frames")]
struct Cli {
    /// Raise every enumeration budget to this many forest nodes
    /// (overrides the GF_MAX_NODES environment variable).
    #[arg(long, global = true, value_name = "N")]
    max_nodes: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a document and check its validity; reports the first violated
    /// law with a witness.
    Validate { input: String },
    /// Dual of the input: forest -> downset algebra, algebra -> spectrum
    /// forest, GAO -> spectrum frame with the induced relations.
    Dual { input: String },
    /// Check the representation theorem on a GAO, including the
    /// single-relation routes its variety flags unlock.
    Represent {
        /// Verify the reconstruction (always on; flag kept for scripts).
        #[arg(long)]
        verify: bool,
        input: String,
    },
    /// Subvariety flags of a GAO, with a witness for every failed law.
    Classify { input: String },
    /// Frame-class flags of a frame document, with witness pairs.
    FrameClass { input: String },
    /// Rewrite a frame's relations: --prime or --second on two-relation
    /// frames, --cj or --fs on one-relation frames.
    Transform {
        #[arg(long)]
        prime: bool,
        #[arg(long)]
        second: bool,
        #[arg(long)]
        cj: bool,
        #[arg(long)]
        fs: bool,
        input: String,
    },
    /// Complex GAO of a frame. One-relation frames need --class.
    Complex {
        /// Frame class for one-relation input: cj, fs, fsd, or w.
        #[arg(long, value_name = "CLASS")]
        class: Option<String>,
        input: String,
    },
    /// Stream every forest, frame, or GAO with exactly N nodes as JSON
    /// lines (GAOs: up to N nodes, one per isomorphism class).
    Enumerate {
        #[arg(long)]
        forests: bool,
        #[arg(long)]
        frames: bool,
        #[arg(long)]
        gaos: bool,
        #[arg(short = 'n', long = "nodes", value_name = "N")]
        nodes: usize,
        /// Frame deduplication: none, tables, or iso.
        #[arg(long, default_value = "tables")]
        dedup: String,
        /// Frame constraint: forest, or, or p.
        #[arg(long, default_value = "forest")]
        constraint: String,
    },
    /// Check a registered statement against every instance with at most N
    /// forest nodes.
    Verify {
        #[arg(long, value_name = "TAG")]
        theorem: String,
        #[arg(short = 'n', long = "nodes", value_name = "N")]
        nodes: usize,
    },
    /// Search for a counterexample to a registered property within N
    /// forest nodes.
    Hunt {
        #[arg(long, value_name = "NAME")]
        property: String,
        #[arg(short = 'n', long = "nodes", value_name = "N")]
        nodes: usize,
    },
    /// Render a document as a DOT graph.
    ExportDot { input: String },
}

struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

fn input_error(e: Error) -> Failure {
    Failure { code: 2, msg: format!("input: {e}") }
}

/// Failures arising while running a command on valid input: precondition
/// and property failures exit 1, resource and lookup problems exit 2.
fn run_error(e: Error) -> Failure {
    let code = match e {
        Error::FrameClass { .. } | Error::Algebra(_) | Error::TheoremViolation { .. } => 1,
        _ => 2,
    };
    Failure { code, msg: e.to_string() }
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut argv = vec!["gf".to_string()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let stream: &mut dyn Write = if help { out } else { err };
            let _ = write!(stream, "{e}");
            return if help { 0 } else { 2 };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.msg.is_empty() {
                let _ = writeln!(err, "gf: {}", f.msg);
            }
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = resolve_budget(cli.max_nodes)?;
    match &cli.cmd {
        Cmd::Validate { input } => cmd_validate(input, out),
        Cmd::Dual { input } => cmd_dual(input, out),
        Cmd::Represent { input, .. } => cmd_represent(input, out),
        Cmd::Classify { input } => cmd_classify(input, out),
        Cmd::FrameClass { input } => cmd_frame_class(input, out),
        Cmd::Transform { prime, second, cj, fs, input } => {
            cmd_transform(*prime, *second, *cj, *fs, input, out)
        }
        Cmd::Complex { class, input } => cmd_complex(class.as_deref(), input, out),
        Cmd::Enumerate { forests, frames, gaos, nodes, dedup, constraint } => {
            cmd_enumerate(*forests, *frames, *gaos, *nodes, dedup, constraint, &budget, out)
        }
        Cmd::Verify { theorem, nodes } => cmd_verify(theorem, *nodes, &budget, out),
        Cmd::Hunt { property, nodes } => cmd_hunt(property, *nodes, &budget, out),
        Cmd::ExportDot { input } => cmd_export_dot(input, out),
    }
}

fn resolve_budget(flag: Option<usize>) -> Result<Budget, Failure> {
    let env = match std::env::var("GF_MAX_NODES") {
        Ok(s) => Some(
            s.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("GF_MAX_NODES must be an integer, got {s:?}")))?,
        ),
        Err(_) => None,
    };
    Ok(match flag.or(env) {
        Some(k) => Budget { forest_nodes: k, frame_nodes: k, gao_nodes: k, deadline: None },
        None => Budget::default(),
    })
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))
    }
}

fn parse_doc(path: &str) -> Result<Doc, Failure> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{path}: {e}")))
}

fn load(path: &str) -> Result<Object, Failure> {
    parse_doc(path)?.realize().map_err(input_error)
}

/// A closed pipe downstream is a normal way for a consumer to stop reading,
/// so it ends the run quietly; any other write failure is diagnosed.
fn write_error(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Failure { code: 0, msg: String::new() }
    } else {
        usage(format!("writing output: {e}"))
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).expect("serializable");
    writeln!(out, "{s}").map_err(write_error)
}

fn emit_doc(out: &mut dyn Write, d: &Doc) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(d).expect("serializable");
    writeln!(out, "{s}").map_err(write_error)
}

fn cmd_validate(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = parse_doc(input)?;
    match doc.realize() {
        Ok(obj) => {
            emit(out, &json!({"type": "report", "command": "validate", "kind": obj.kind(), "ok": true}))?;
            Ok(0)
        }
        Err(e) => {
            emit(
                out,
                &json!({"type": "report", "command": "validate", "ok": false, "error": e.to_string()}),
            )?;
            Ok(1)
        }
    }
}

fn cmd_dual(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match load(input)? {
        Object::Forest(f) => {
            let dual = downset_algebra(&f).map_err(run_error)?;
            let names = downset_names(&dual);
            emit_doc(out, &Doc::Algebra(doc::AlgebraDoc::of(&dual.algebra, &names)))?;
        }
        Object::Algebra(a, _) => {
            let spec = spectrum(&a).map_err(run_error)?;
            emit_doc(out, &Doc::Forest(ForestDoc::of(&spec.forest)))?;
        }
        Object::Gao(g, _) => {
            let ind = induced_relations(&g).map_err(run_error)?;
            let d = Frame2Doc {
                forest: ForestDoc::of(&ind.spectrum.forest),
                rbox: ind.rbox.pairs(),
                rdia: ind.rdia.pairs(),
                ra: Some(ind.ra.pairs()),
            };
            emit_doc(out, &Doc::Frame2(d))?;
        }
        obj => return Err(usage(format!("dual expects a forest, algebra, or gao, got {}", obj.kind()))),
    }
    Ok(0)
}

fn cmd_represent(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match load(input)? {
        Object::Algebra(a, _) => {
            let corr = stone(&a).map_err(run_error)?;
            emit(
                out,
                &json!({"type": "representation", "elements": corr.r_index.len(), "routes": ["stone"]}),
            )?;
            Ok(0)
        }
        Object::Gao(g, _) => {
            let rep = verify_representation(&g).map_err(run_error)?;
            emit(out, &json!({"type": "representation", "elements": rep.elements, "routes": rep.routes}))?;
            Ok(0)
        }
        obj => Err(usage(format!("represent expects an algebra or gao, got {}", obj.kind()))),
    }
}

fn law(names: &[String], c: &LawCheck) -> Value {
    match c.witness() {
        None => json!({"holds": true}),
        Some(w) => {
            let args: Vec<&str> = w.args.iter().map(|&i| names[i].as_str()).collect();
            json!({
                "holds": false,
                "witness": {"args": args, "lhs": names[w.lhs], "rhs": names[w.rhs]},
            })
        }
    }
}

fn cmd_classify(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match load(input)? {
        Object::Gao(g, names) => {
            let fl = classify(&g);
            emit(
                out,
                &json!({
                    "type": "flags",
                    "gao": true,
                    "d1": law(&names, &fl.d1),
                    "d2": law(&names, &fl.d2),
                    "fs1": law(&names, &fl.fs1),
                    "fs2": law(&names, &fl.fs2),
                    "bb": law(&names, &fl.bb),
                    "db": law(&names, &fl.db),
                    "bao": law(&names, &fl.bao),
                    "dgao": fl.dgao(),
                    "fsgao": fl.fsgao(),
                    "fsdgao": fl.fsdgao(),
                    "wgao": fl.wgao(),
                }),
            )?;
            Ok(0)
        }
        obj => Err(usage(format!("classify expects a gao, got {}", obj.kind()))),
    }
}

fn incl(i: Inclusion) -> Value {
    match i.witness() {
        None => json!({"holds": true}),
        Some((a, b)) => json!({"holds": false, "witness": [a, b]}),
    }
}

fn cmd_frame_class(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match load(input)? {
        Object::Frame2(fr) => {
            let fl = classify_two_rel(&fr);
            emit(
                out,
                &json!({
                    "type": "frame-flags",
                    "kind": "frame2",
                    "m": incl(fl.m),
                    "a": incl(fl.a),
                    "or1": incl(fl.or1),
                    "or2": incl(fl.or2),
                    "p1": incl(fl.p1),
                    "p2": incl(fl.p2),
                    "forest_frame": fl.forest_frame(),
                    "or_frame": fl.or_frame(),
                    "p_frame": fl.p_frame(),
                }),
            )?;
            Ok(0)
        }
        Object::Frame1(fr) => {
            let fl = classify_one_rel(&fr);
            emit(
                out,
                &json!({
                    "type": "frame-flags",
                    "kind": "frame1",
                    "cj1": incl(fl.cj1),
                    "cj2": incl(fl.cj2),
                    "fs1f": incl(fl.fs1f),
                    "fs2f": incl(fl.fs2f),
                    "fscj2": incl(fl.fscj2),
                    "w1": incl(fl.w1),
                    "w2": incl(fl.w2),
                    "cj": fl.cj(),
                    "fs": fl.fs(),
                    "fsd": fl.fsd(),
                    "w": fl.w(),
                    "basic": fl.is_basic(),
                }),
            )?;
            Ok(0)
        }
        obj => Err(usage(format!("frame-class expects a frame, got {}", obj.kind()))),
    }
}

fn cmd_transform(
    prime: bool,
    second: bool,
    cj: bool,
    fs: bool,
    input: &str,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let picked = [prime, second, cj, fs].iter().filter(|&&b| b).count();
    if picked != 1 {
        return Err(usage("transform needs exactly one of --prime, --second, --cj, --fs"));
    }
    let obj = load(input)?;
    match (obj, prime, second) {
        (Object::Frame2(fr), true, _) => {
            let t = prime_transform(&fr).map_err(run_error)?;
            emit_doc(out, &Doc::Frame2(Frame2Doc::of(&t)))?;
        }
        (Object::Frame2(fr), _, true) => {
            let t = second_transform(&fr).map_err(run_error)?;
            emit_doc(out, &Doc::Frame2(Frame2Doc::of(&t)))?;
        }
        (Object::Frame1(fr), false, false) => {
            let class = if cj { OneRelClass::Cj } else { OneRelClass::Fs };
            let t = one_rel_transform(&fr, class).map_err(run_error)?;
            emit_doc(out, &Doc::Frame1(Frame1Doc::of(&t)))?;
        }
        (obj, _, _) => {
            return Err(usage(format!(
                "--prime and --second expect a frame2, --cj and --fs a frame1, got {}",
                obj.kind()
            )))
        }
    }
    Ok(0)
}

fn cmd_complex(class: Option<&str>, input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    match load(input)? {
        Object::Frame2(fr) => {
            if class.is_some() {
                return Err(usage("--class applies only to one-relation frames"));
            }
            let (dual, gao) = complex_gao(&fr).map_err(run_error)?;
            emit_doc(out, &Doc::Gao(GaoDoc::of(&gao, &downset_names(&dual))))?;
            Ok(0)
        }
        Object::Frame1(fr) => {
            let name = class.ok_or_else(|| usage("one-relation frames need --class cj|fs|fsd|w"))?;
            let class = OneRelClass::parse(name).map_err(|_| usage(format!("unknown class {name:?}")))?;
            if class == OneRelClass::Basic {
                return Err(usage("class basic has no complex recipe; pick one of cj, fs, fsd, w"));
            }
            let (dual, gao) = complex_one_rel(&fr, class).map_err(run_error)?;
            emit_doc(out, &Doc::Gao(GaoDoc::of(&gao, &downset_names(&dual))))?;
            Ok(0)
        }
        obj => Err(usage(format!("complex expects a frame, got {}", obj.kind()))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    forests: bool,
    frames: bool,
    gaos: bool,
    nodes: usize,
    dedup: &str,
    constraint: &str,
    budget: &Budget,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if [forests, frames, gaos].iter().filter(|&&b| b).count() != 1 {
        return Err(usage("enumerate needs exactly one of --forests, --frames, --gaos"));
    }
    if forests {
        for f in enum_forests(nodes, budget).map_err(run_error)? {
            emit_line(out, &Doc::Forest(ForestDoc::of(&f)))?;
        }
    } else if frames {
        let constraint = TwoRelConstraint::parse(constraint)
            .map_err(|_| usage(format!("unknown constraint {constraint:?}")))?;
        let dedup =
            FrameDedup::parse(dedup).map_err(|_| usage(format!("unknown dedup mode {dedup:?}")))?;
        for f in enum_forests(nodes, budget).map_err(run_error)? {
            for fr in enum_two_rel_frames(&f, constraint, dedup, budget).map_err(run_error)? {
                emit_line(out, &Doc::Frame2(Frame2Doc::of(&fr)))?;
            }
        }
    } else {
        for (f, g) in enum_gaos(nodes, budget).map_err(run_error)? {
            let dual = downset_algebra(&f).map_err(run_error)?;
            emit_line(out, &Doc::Gao(GaoDoc::of(&g, &downset_names(&dual))))?;
        }
    }
    Ok(0)
}

fn emit_line(out: &mut dyn Write, d: &Doc) -> Result<(), Failure> {
    let s = serde_json::to_string(d).expect("serializable");
    writeln!(out, "{s}").map_err(write_error)
}

fn cmd_verify(tag: &str, nodes: usize, budget: &Budget, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = verify_theorem(tag, nodes, budget).map_err(|e| match e {
        Error::UnknownTheorem { ref tag } => {
            let known: Vec<&str> = theorem_catalog().iter().map(|(t, _)| *t).collect();
            usage(format!("unknown theorem {tag:?}; known: {}", known.join(", ")))
        }
        other => run_error(other),
    })?;
    emit(
        out,
        &json!({
            "type": "theorem",
            "tag": report.theorem,
            "nodes": nodes,
            "instances": report.instances,
            "pass": report.pass(),
            "counterexample": report.counterexample,
        }),
    )?;
    Ok(if report.pass() { 0 } else { 1 })
}

fn cmd_hunt(property: &str, nodes: usize, budget: &Budget, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = find_counterexample(property, nodes, budget).map_err(|e| match e {
        Error::UnknownProperty { ref name } => {
            let known: Vec<&str> = property_catalog().iter().map(|(p, _)| *p).collect();
            usage(format!("unknown property {name:?}; known: {}", known.join(", ")))
        }
        other => run_error(other),
    })?;
    let found = report.witness.is_some();
    emit(
        out,
        &json!({
            "type": "hunt",
            "property": report.property,
            "nodes": nodes,
            "searched": report.searched,
            "witness": report.witness,
        }),
    )?;
    Ok(if found { 1 } else { 0 })
}

fn cmd_export_dot(input: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = match load(input)? {
        Object::Forest(f) => dot::forest(&f),
        Object::Algebra(a, names) => dot::algebra(&a, &names),
        Object::Gao(g, names) => dot::gao(&g, &names),
        Object::Frame2(fr) => dot::frame2(fr.forest(), fr.rbox(), fr.rdia()),
        Object::Frame1(fr) => dot::frame1(fr.forest(), fr.r()),
    };
    write!(out, "{text}").map_err(write_error)?;
    Ok(0)
}
