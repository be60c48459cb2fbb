//! Executes subcommands against a parsed scene and renders reports.

use std::process::ExitCode;

use blowup_calc::blowup::{
    blow_up, poset_blow_up, pushout_blow_up, strict_transform, ExcessiveSquare, PushoutOrder,
    StrictMode,
};
use blowup_calc::catalog::{Params, Registry, Verdict};
use blowup_calc::deform::{
    composite_deformation_space, deformation_space, multiple_deformation_space, DeformationSpace,
};
use blowup_calc::report::ReportDoc;

use crate::scene::{parse_scene, OrderChoice, Scene};
use crate::{Command, DeformKindArg, OrderArg, OrderOfBlowups, OutputKind, StrictArg};

type DynError = Box<dyn std::error::Error>;

fn load_scene(path: &str, order: OrderArg) -> Result<Scene, DynError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read scene `{path}`: {e}"))?;
    let choice = match order {
        OrderArg::Grevlex => OrderChoice::GrevLex,
        OrderArg::Lex => OrderChoice::Lex,
    };
    Ok(parse_scene(&text, choice).map_err(|e| format!("{path}:{e}"))?)
}

fn emit(output: OutputKind, doc: &ReportDoc, text: &str) {
    match output {
        OutputKind::Json => println!("{}", doc.to_json()),
        OutputKind::Text => print!("{text}"),
    }
}

pub fn run(cmd: Command) -> Result<ExitCode, DynError> {
    match cmd {
        Command::Blowup { scene, center, transform, strict_mode, order, output } => {
            let sc = load_scene(&scene, order)?;
            let sub = sc
                .subs
                .get(&center)
                .ok_or_else(|| format!("unresolved sub `{center}`"))?;
            let b = blow_up(sub.ambient(), sub)?;
            let mut doc = ReportDoc::default()
                .with_atlas(&b.result)
                .with_divisor("E", &b.exceptional);
            let mut text = format!("blowup along `{center}`\n{}", b.result);
            for (i, c) in b.result.charts().iter().enumerate() {
                text.push_str(&format!(
                    "exceptional on {}: {}\n",
                    c.label,
                    b.exceptional.gen(i)
                ));
                let proj = &b.projections[i];
                let images: Vec<String> = proj
                    .source()
                    .var_names()
                    .iter()
                    .zip(proj.images())
                    .map(|(v, im)| format!("{v} -> {im}"))
                    .collect();
                text.push_str(&format!("projection into {}: {}\n", c.label, images.join(", ")));
            }
            if let Some(tname) = transform {
                let t = sc
                    .subs
                    .get(&tname)
                    .ok_or_else(|| format!("unresolved sub `{tname}`"))?;
                let mode = match strict_mode {
                    StrictArg::Quotient => StrictMode::QuotientOnce,
                    StrictArg::Saturate => StrictMode::Saturate,
                };
                let s = strict_transform(&b, t, mode)?;
                for (i, c) in b.result.charts().iter().enumerate() {
                    text.push_str(&format!(
                        "strict transform of {tname} on {}: [{}]\n",
                        c.label,
                        s.ideal(i).serialized().join(", ")
                    ));
                    doc.divisors
                        .entry(format!("strict[{tname}]"))
                        .or_default()
                        .push(s.ideal(i).serialized().join(", "));
                }
            }
            emit(output, &doc, &text);
            Ok(ExitCode::SUCCESS)
        }
        Command::PosetBlowup { scene, diagram, order, output } => {
            let sc = load_scene(&scene, order)?;
            let (_, _, d) = sc
                .diagrams
                .get(&diagram)
                .ok_or_else(|| format!("unresolved diagram `{diagram}`"))?;
            let r = poset_blow_up(d)?;
            let mut doc = ReportDoc::default().with_atlas(&r.atlas);
            let mut text = format!("poset blowup of `{diagram}`\n{}", r.atlas);
            for step in &r.tower {
                text.push_str(&format!("step {}: centers {:?}\n", step.center_label, step.center_gens));
            }
            for (&el, div) in &r.strict_exceptionals {
                doc = doc.with_divisor(&format!("E'[{}]", d.lattice.name(el)), div);
                for (i, c) in r.atlas.charts().iter().enumerate() {
                    text.push_str(&format!(
                        "E'[{}] on {}: {}\n",
                        d.lattice.name(el),
                        c.label,
                        div.gen(i)
                    ));
                }
            }
            emit(output, &doc, &text);
            Ok(ExitCode::SUCCESS)
        }
        Command::PushoutBlowup { scene, w, z, y, recipe, order, output } => {
            let sc = load_scene(&scene, order)?;
            let get = |n: &str| {
                sc.subs
                    .get(n)
                    .cloned()
                    .ok_or_else(|| format!("unresolved sub `{n}`"))
            };
            let (wv, zv, yv) = (get(&w)?, get(&z)?, get(&y)?);
            let ambient = wv.ambient().clone();
            let sq = ExcessiveSquare::new(&ambient, wv, zv, yv)?;
            let ord = match recipe {
                OrderOfBlowups::ZFirst => PushoutOrder::ZFirst,
                OrderOfBlowups::YFirst => PushoutOrder::YFirst,
            };
            let r = pushout_blow_up(&sq, ord)?;
            let doc = ReportDoc::default()
                .with_atlas(&r.atlas)
                .with_divisor("E'Y", &r.e_y)
                .with_divisor("E'Z", &r.e_z)
                .with_divisor("E'W", &r.e_w);
            let mut text = format!("pushout blowup ({w}, {z}, {y})\n{}", r.atlas);
            for step in &r.tower {
                text.push_str(&format!("{}: centers {:?}\n", step.center_label, step.center_gens));
            }
            for (name, d) in [("E'Y", &r.e_y), ("E'Z", &r.e_z), ("E'W", &r.e_w)] {
                for (i, c) in r.atlas.charts().iter().enumerate() {
                    text.push_str(&format!("{name} on {}: {}\n", c.label, d.gen(i)));
                }
            }
            emit(output, &doc, &text);
            Ok(ExitCode::SUCCESS)
        }
        Command::Deform { scene, kind, input, order, output } => {
            let sc = load_scene(&scene, order)?;
            let render = |d: &DeformationSpace, tag: &str| -> (ReportDoc, String) {
                let mut doc = ReportDoc::default().with_atlas(&d.total);
                let mut text = format!("{tag}\n{}", d.total);
                for step in &d.tower {
                    text.push_str(&format!(
                        "step {}: centers {:?}\n",
                        step.center_label, step.center_gens
                    ));
                }
                for (name, div) in &d.labeled {
                    doc = doc.with_divisor(name, div);
                    for (i, c) in d.total.charts().iter().enumerate() {
                        text.push_str(&format!("{name} on {}: {}\n", c.label, div.gen(i)));
                    }
                }
                (doc, text)
            };
            match kind {
                DeformKindArg::Single => {
                    let sub = sc
                        .subs
                        .get(&input)
                        .ok_or_else(|| format!("unresolved sub `{input}`"))?;
                    let d = deformation_space(sub)?;
                    let (doc, text) = render(&d, &format!("deformation space of `{input}`"));
                    emit(output, &doc, &text);
                }
                DeformKindArg::Multiple => {
                    let members = sc
                        .families
                        .get(&input)
                        .ok_or_else(|| format!("unresolved family `{input}`"))?;
                    let family: Vec<_> =
                        members.iter().map(|m| sc.subs[m].clone()).collect();
                    let d = multiple_deformation_space(&family)?;
                    let (doc, text) =
                        render(&d, &format!("multiple deformation space of `{input}`"));
                    emit(output, &doc, &text);
                }
                DeformKindArg::Composite => {
                    let (zn, yn, _) = sc
                        .chains
                        .get(&input)
                        .ok_or_else(|| format!("unresolved chain `{input}`"))?;
                    let c = composite_deformation_space(&sc.subs[zn], &sc.subs[yn])?;
                    let empties = c.verify_empty_boundaries()?;
                    let mut doc = ReportDoc::default();
                    let mut text = String::new();
                    for (tag, piece) in [
                        ("D", &c.d),
                        ("boundary_Y", &c.boundary_y),
                        ("boundary_Z", &c.boundary_z),
                        ("boundary_YZ", &c.boundary_yz),
                    ] {
                        let (pdoc, ptext) = render(piece, &format!("{tag} of `{input}`"));
                        if tag == "D" {
                            doc.charts = pdoc.charts;
                        }
                        for (k, v) in pdoc.divisors {
                            doc.divisors.insert(format!("{tag}.{k}"), v);
                        }
                        text.push_str(&ptext);
                    }
                    text.push_str(&format!(
                        "vanishing checks: {}\n",
                        if empties.is_empty() { "both boundary E'Z empty" } else { "FAILED" }
                    ));
                    emit(output, &doc, &text);
                    if !empties.is_empty() {
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scene { scene, order } => {
            let sc = load_scene(&scene, order)?;
            print!("{}", sc.serialize());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { name, suite, output } => {
            let registry = Registry::standard();
            let report = match (name, suite) {
                (Some(n), None) => blowup_calc::catalog::SuiteReport {
                    entries: vec![registry.run_check(&n, &Params::new())?],
                },
                (None, Some(tag)) => {
                    let tag = tag.trim();
                    registry.run_suite(if tag.is_empty() { None } else { Some(tag) })
                }
                (None, None) => registry.run_suite(None),
                (Some(_), Some(_)) => {
                    return Err("pass either a check name or --suite, not both".into())
                }
            };
            let doc = ReportDoc::default().with_suite(&report);
            let mut text = String::new();
            for e in &report.entries {
                let status = match &e.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                    Verdict::Skipped(_) => "skipped",
                };
                text.push_str(&format!("{:26} {status}   [{}] {}\n", e.name, e.anchor.reference, e.anchor.quote));
                for d in &e.details {
                    text.push_str(&format!("    {d}\n"));
                }
            }
            text.push_str(&format!(
                "{} checks, {} failed\n",
                report.entries.len(),
                report.failed()
            ));
            emit(output, &doc, &text);
            if report.failed() > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
