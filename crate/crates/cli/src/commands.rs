use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use jumploci::builtins;
use jumploci::fibration::{FiberAnalysis, FibrationReport, V1Component};
use jumploci::{
    aomoto_complex, census, enumerate_multinets, find_pointed, h2_torsion, multinet_pencil, orbifold_v1_shape,
    pointed_vs_fiber, render_svg, translated_components, Arrangement, ArrangementFile, EnumerationOptions, Lambda,
    Multinet, Pencil, Window,
};
use serde_json::{json, Value};

use crate::output::{Failure, Report};
use crate::{EnumArgs, Source};

type Outcome = Result<Report, Failure>;

fn load(command: &'static str, source: &Source) -> Result<Arrangement, Failure> {
    if let Some(name) = &source.builtin {
        return builtins::arrangement(name).map_err(|e| Failure::from_core(command, e));
    }
    let path = source.file.as_ref().expect("clap requires a source");
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(command, format!("{}: {e}", path.display())))?;
    let file: ArrangementFile =
        serde_json::from_str(&text).map_err(|e| Failure::Input(command, format!("{}: {e}", path.display())))?;
    file.to_arrangement().map_err(|e| Failure::from_core(command, e))
}

fn source_json(source: &Source) -> Value {
    match (&source.builtin, &source.file) {
        (Some(b), _) => json!({ "builtin": b }),
        (_, Some(f)) => json!({ "file": f.display().to_string() }),
        _ => Value::Null,
    }
}

fn labels_of(a: &Arrangement, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| a.line(i).label.clone()).collect()
}

pub fn lattice(source: &Source) -> Outcome {
    const CMD: &str = "lattice";
    let a = load(CMD, source)?;
    let pts = a.lattice();
    let cen = census(&pts);
    let points: Vec<Value> = pts
        .iter()
        .map(|p| {
            json!({
                "coords": p.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "lines": labels_of(&a, &p.incident),
                "multiplicity": p.multiplicity(),
            })
        })
        .collect();
    let census_json: Vec<Value> = cen.iter().map(|(m, c)| json!({ "multiplicity": m, "count": c })).collect();
    let mut human = format!("{}: {} lines, {} multiple points\n", a.name(), a.len(), pts.len());
    for (m, c) in &cen {
        let _ = writeln!(human, "  multiplicity {m}: {c}");
    }
    Ok(Report::new(
        CMD,
        source_json(source),
        json!({ "arrangement": a.name(), "lines": a.len(), "points": points, "census": census_json }),
        human,
    ))
}

fn options(search: &EnumArgs) -> EnumerationOptions {
    EnumerationOptions { max_k: search.max_k as usize, max_mult: search.max_mult, parallel: true }
}

fn net_json(a: &Arrangement, index: usize, net: &Multinet) -> Value {
    let classes: Vec<Vec<String>> = net.classes.iter().map(|c| labels_of(a, c)).collect();
    let mult: Vec<Value> =
        a.lines().iter().zip(&net.mult).map(|(l, m)| json!({ "line": l.label, "multiplicity": m })).collect();
    json!({
        "index": index,
        "k": net.k(),
        "weight": net.kappa,
        "classes": classes,
        "multiplicities": mult,
        "base_points": net.base_locus.len(),
        "pointed_at": labels_of(a, &find_pointed(a, net)),
        "k_bound_holds": net.k_bound_holds(),
    })
}

fn net_line(a: &Arrangement, index: usize, net: &Multinet) -> String {
    let classes: Vec<String> = net
        .classes
        .iter()
        .map(|c| {
            let parts: Vec<String> = c
                .iter()
                .map(|&i| match net.mult[i] {
                    1 => a.line(i).label.clone(),
                    m => format!("{}^{m}", a.line(i).label),
                })
                .collect();
            format!("{{{}}}", parts.join(", "))
        })
        .collect();
    let pointed = labels_of(a, &find_pointed(a, net));
    let mut s = format!(
        "#{index}: ({}, {})-multinet, {} base points: {}",
        net.k(),
        net.kappa,
        net.base_locus.len(),
        classes.join(" ")
    );
    if !pointed.is_empty() {
        let _ = write!(s, "; pointed at {}", pointed.join(", "));
    }
    s
}

pub fn multinets(source: &Source, search: &EnumArgs) -> Outcome {
    const CMD: &str = "multinets";
    let a = load(CMD, source)?;
    let nets = enumerate_multinets(&a, options(search));
    let mut human = format!(
        "{}: {} multinets with k <= {}, multiplicities <= {}\n",
        a.name(),
        nets.len(),
        search.max_k,
        search.max_mult
    );
    for (i, n) in nets.iter().enumerate() {
        let _ = writeln!(human, "  {}", net_line(&a, i, n));
    }
    let list: Vec<Value> = nets.iter().enumerate().map(|(i, n)| net_json(&a, i, n)).collect();
    let mut inputs = source_json(source);
    inputs["max_k"] = json!(search.max_k);
    inputs["max_mult"] = json!(search.max_mult);
    Ok(Report::new(CMD, inputs, json!({ "arrangement": a.name(), "multinets": list }), human))
}

pub enum PencilChoice {
    Text(String),
    Builtin(String),
    Multinet(usize),
    Default,
}

impl PencilChoice {
    pub fn from_flags(text: Option<String>, builtin: Option<String>, multinet: Option<usize>) -> PencilChoice {
        match (text, builtin, multinet) {
            (Some(t), _, _) => PencilChoice::Text(t),
            (_, Some(b), _) => PencilChoice::Builtin(b),
            (_, _, Some(n)) => PencilChoice::Multinet(n),
            _ => PencilChoice::Default,
        }
    }
}

fn resolve_pencil(
    a: &Arrangement,
    source: &Source,
    choice: &PencilChoice,
    search: &EnumArgs,
) -> Result<(Pencil, Value), Failure> {
    const CMD: &str = "analyze";
    let core = |e| Failure::from_core(CMD, e);
    match choice {
        PencilChoice::Text(t) => {
            let (g1, g2) = t
                .split_once(';')
                .ok_or_else(|| Failure::Input(CMD, "pencil must be given as `g1;g2`".into()))?;
            Ok((Pencil::parse(g1, g2).map_err(core)?, json!({ "text": t })))
        }
        PencilChoice::Builtin(name) => Ok((builtins::pencil(name).map_err(core)?, json!({ "builtin": name }))),
        PencilChoice::Multinet(n) => {
            let nets = enumerate_multinets(a, options(search));
            let net = nets.get(*n).ok_or_else(|| {
                Failure::Input(CMD, format!("multinet #{n} requested, {} found", nets.len()))
            })?;
            let p = multinet_pencil(a, net).map_err(core)?;
            Ok((p, json!({ "multinet": n, "max_k": search.max_k, "max_mult": search.max_mult })))
        }
        PencilChoice::Default => {
            let name = match source.builtin.as_deref() {
                Some("b3") | Some("b3_del_z") => "b3",
                Some("double_star") => "double_star",
                _ => return Err(Failure::Input(CMD, "no pencil given; use --pencil, --pencil-builtin or --from-multinet".into())),
            };
            Ok((builtins::pencil(name).map_err(core)?, json!({ "builtin": name })))
        }
    }
}

fn part_json(a: &Arrangement, f: &FiberAnalysis) -> Vec<Value> {
    f.arrangement_part.iter().map(|&(i, e)| json!({ "line": a.line(i).label, "exponent": e })).collect()
}

fn part_text(a: &Arrangement, f: &FiberAnalysis) -> String {
    let parts: Vec<String> = f
        .arrangement_part
        .iter()
        .map(|&(i, e)| match e {
            1 => format!("({})", a.line(i).label),
            e => format!("({})^{e}", a.line(i).label),
        })
        .collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

fn fiber_json(a: &Arrangement, f: &FiberAnalysis) -> Value {
    json!({
        "lambda": f.lambda.to_string(),
        "removed": f.is_removed(),
        "multiple": f.is_multiple(),
        "lines": part_json(a, f),
        "residual": f.residual.to_string(),
        "mu": f.mu,
        "reduced": f.reduced.as_ref().map(|p| p.to_string()),
    })
}

fn component_json(a: &Arrangement, c: &V1Component) -> Value {
    let affine = c.affine_view(a);
    json!({
        "labels": c.labels,
        "rho_exponents": c.rho_exponents,
        "rho": c.rho_values(),
        "t_exponents": c.t_exponents,
        "torsion_order": c.torsion_order,
        "dimension": c.dimension,
        "character": c.character,
        "affine": {
            "labels": affine.labels,
            "rho": affine.rho_values(),
            "t_exponents": affine.t_exponents,
        },
    })
}

fn analysis_human(a: &Arrangement, p: &Pencil, rep: &FibrationReport, comps: &[V1Component], extra: &[String]) -> String {
    let mut h = String::new();
    let _ = writeln!(h, "{}: {} lines, pencil of degree {}", a.name(), a.len(), p.degree());
    let removed: Vec<String> = rep.removed.iter().map(ToString::to_string).collect();
    let _ = writeln!(h, "removed fibers (k = {}): {}", rep.k, removed.join(" "));
    for f in rep.fibers.iter().filter(|f| f.is_removed()) {
        let _ = writeln!(h, "  {}: {}", f.lambda, part_text(a, f));
    }
    if rep.multiple_fibers.is_empty() {
        let _ = writeln!(h, "multiple fibers: none");
    }
    for f in &rep.multiple_fibers {
        let reduced = f.reduced.as_ref().map_or_else(String::new, ToString::to_string);
        let _ = writeln!(h, "multiple fiber {}: mu = {}, lines {}, residual = ({reduced})^{}", f.lambda, f.mu, part_text(a, f), f.mu);
    }
    let _ = writeln!(h, "class: {}", rep.class);
    for c in comps {
        let _ = writeln!(h, "component: {c}");
        if a.lines().iter().any(|l| l.is_line_at_infinity()) {
            let _ = writeln!(h, "  affine chart: {}", c.affine_view(a));
        }
    }
    for s in extra {
        let _ = writeln!(h, "{s}");
    }
    let hy = &rep.hypotheses;
    let _ = writeln!(
        h,
        "hypotheses: connected generic fiber {}, surjectivity {}",
        hy.connected_generic_fiber, hy.surjective
    );
    h
}

pub fn analyze(source: &Source, choice: PencilChoice, search: &EnumArgs, lambdas: &[String]) -> Outcome {
    const CMD: &str = "analyze";
    let core = |e| Failure::from_core(CMD, e);
    let a = load(CMD, source)?;
    let (pencil, pencil_src) = resolve_pencil(&a, source, &choice, search)?;
    let extra: Vec<Lambda> = lambdas.iter().map(|l| Lambda::parse(l)).collect::<Result<_, _>>().map_err(core)?;
    let rep = jumploci::analyze(&a, &pencil, &extra).map_err(core)?;

    let shape = if rep.k >= 2 { Some(orbifold_v1_shape(rep.k, &rep.mu_vector).map_err(core)?) } else { None };
    let comps = if rep.class == jumploci::FibrationClass::Small {
        translated_components(&a, &rep).map_err(core)?
    } else {
        Vec::new()
    };
    let pointed = if rep.multiple_fibers.is_empty() { None } else { Some(pointed_vs_fiber(&rep).map_err(core)?) };

    let mut notes = Vec::new();
    if let Some(s) = &shape {
        notes.push(format!(
            "contribution: {} (dimension {}, torsion {:?}, {} translated)",
            serde_json::to_value(s.kind).expect("serializes").as_str().unwrap_or(""),
            s.dimension,
            s.torsion,
            s.translated
        ));
    }
    if let Some(pc) = &pointed {
        notes.push(format!("pointed multinet explained: {}", pc.pointed_multinet_explained));
        for w in pc.witnesses.iter().filter(|w| !w.splits) {
            notes.push(format!("  {} has no linear factor over the field at {}", w.remainder, w.lambda));
        }
    }
    let human = analysis_human(&a, &pencil, &rep, &comps, &notes);

    let mut inputs = source_json(source);
    inputs["pencil"] = pencil_src;
    inputs["lambda"] = json!(lambdas);
    let results = json!({
        "arrangement": a.name(),
        "pencil": { "g1": pencil.g1.to_string(), "g2": pencil.g2.to_string(), "degree": pencil.degree() },
        "k": rep.k,
        "removed": rep.removed.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "class": rep.class,
        "mu_vector": rep.mu_vector,
        "fibers": rep.fibers.iter().map(|f| fiber_json(&a, f)).collect::<Vec<_>>(),
        "shape": shape,
        "components": comps.iter().map(|c| component_json(&a, c)).collect::<Vec<_>>(),
        "pointed_multinet_explained": pointed.as_ref().map(|p| p.pointed_multinet_explained),
        "pointed_witnesses": pointed.as_ref().map(|p| &p.witnesses),
        "hypotheses": rep.hypotheses,
    });
    Ok(Report::new(CMD, inputs, results, human))
}

pub fn aomoto(source: &Source, omega: &[i64]) -> Outcome {
    const CMD: &str = "aomoto";
    let a = load(CMD, source)?;
    let cx = aomoto_complex(&a, omega).map_err(|e| Failure::from_core(CMD, e))?;
    let h = h2_torsion(&cx);
    let torsion: Vec<String> = h.h2_torsion.iter().map(|d| format!("Z/{d}")).collect();
    let mut human = format!("{}: {} affine lines, b2 = {}\n", a.name(), h.n, h.b2);
    let _ = writeln!(human, "H1 rank: {}", h.h1_rank);
    let _ = writeln!(
        human,
        "H2: free rank {}, torsion {}",
        h.h2_free_rank,
        if torsion.is_empty() { "none".to_string() } else { torsion.join(" + ") }
    );
    let _ = writeln!(human, "2-torsion: {}", if h.has_two_torsion { "yes" } else { "no" });
    let mut inputs = source_json(source);
    inputs["omega"] = json!(omega);
    let results = json!({
        "arrangement": a.name(),
        "lines": cx.basis.labels,
        "n": h.n,
        "b2": h.b2,
        "h1_rank": h.h1_rank,
        "h2_free_rank": h.h2_free_rank,
        "h2_torsion": serde_json::to_value(&h).expect("serializes")["h2_torsion"],
        "has_two_torsion": h.has_two_torsion,
        "divisors": serde_json::to_value(&h.snf).expect("serializes")["divisors"],
        "d2": cx.d2,
    });
    Ok(Report::new(CMD, inputs, results, human))
}

pub fn render(source: &Source, output: &Path, classes: Option<Vec<usize>>, half: f64) -> Outcome {
    const CMD: &str = "render";
    let a = load(CMD, source)?;
    if let Some(c) = &classes {
        if c.len() != a.len() {
            return Err(Failure::Input(CMD, format!("{} classes given for {} lines", c.len(), a.len())));
        }
    }
    if !(half.is_finite() && half > 0.0) {
        return Err(Failure::Input(CMD, format!("window half-width must be positive, got {half}")));
    }
    let svg = render_svg(&a, &Window::square(half), classes.as_deref());
    fs::write(output, &svg).map_err(|e| Failure::Input(CMD, format!("{}: {e}", output.display())))?;
    let drawn = svg.matches("<line ").count();
    let mut inputs = source_json(source);
    inputs["output"] = json!(output.display().to_string());
    inputs["classes"] = json!(classes);
    inputs["half"] = json!(half);
    Ok(Report::new(
        CMD,
        inputs,
        json!({ "arrangement": a.name(), "drawn": drawn, "bytes": svg.len() }),
        format!("wrote {} ({drawn} lines drawn)\n", output.display()),
    ))
}

pub fn builtins() -> Outcome {
    let mut human = String::from("arrangements:\n");
    let mut arrs = Vec::new();
    for name in builtins::ARRANGEMENTS {
        let a = builtins::arrangement(name).map_err(|e| Failure::from_core("builtins", e))?;
        let _ = writeln!(human, "  {name} ({} lines)", a.len());
        arrs.push(json!({ "name": name, "lines": a.len() }));
    }
    human.push_str("pencils:\n");
    for name in builtins::PENCILS {
        let _ = writeln!(human, "  {name}");
    }
    Ok(Report::new("builtins", Value::Null, json!({ "arrangements": arrs, "pencils": builtins::PENCILS }), human))
}

pub fn identities() -> Outcome {
    const CMD: &str = "identities";
    let ids = builtins::star_identities().map_err(|e| Failure::from_core(CMD, e))?;
    let mark = |b: bool| if b { "holds" } else { "FAILS" };
    let g1: Vec<String> = ids.groups.h1_group.iter().map(|i| format!("l{}", i + 1)).collect();
    let g2: Vec<String> = ids.groups.h2_group.iter().map(|i| format!("l{}", i + 1)).collect();
    let mut human = String::new();
    let _ = writeln!(human, "h1 = product of {} (scalar {})", g1.join(" "), ids.groups.h1_scalar);
    let _ = writeln!(human, "h2 = product of {} (scalar {})", g2.join(" "), ids.groups.h2_scalar);
    let _ = writeln!(human, "group products: {}", mark(ids.products_match));
    let _ = writeln!(human, "c*h1, c*h2 equal the bracketed quintics: {}", mark(ids.brackets_match));
    let _ = writeln!(human, "h1 - h2 = (r/c) (x^2 + y^2 - 1)^2: {}", mark(ids.affine_difference));
    let _ = writeln!(human, "homogenized: z (x^2 + y^2 - z^2)^2 form: {}", mark(ids.homogeneous_difference));
    let mut r = Report::new(CMD, Value::Null, serde_json::to_value(&ids).expect("serializes"), human);
    if !ids.all_hold() {
        r.exit_status = 1;
    }
    Ok(r)
}

pub fn export(source: &Source, output: Option<&Path>) -> Outcome {
    const CMD: &str = "export";
    let a = load(CMD, source)?;
    let file = ArrangementFile::from(&a);
    let text = serde_json::to_string_pretty(&file).expect("serializes") + "\n";
    let human = match output {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Failure::Input(CMD, format!("{}: {e}", p.display())))?;
            format!("wrote {}\n", p.display())
        }
        None => text,
    };
    let mut inputs = source_json(source);
    inputs["output"] = json!(output.map(|p| p.display().to_string()));
    Ok(Report::new(CMD, inputs, serde_json::to_value(&file).expect("serializes"), human))
}
