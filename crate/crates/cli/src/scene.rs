//! The `.scene` language: line-oriented declarations of rings, ideals,
//! subschemes, divisors, lattices, diagrams, chains and families.
//!
//! ```text
//! ring R = QQ[x,y]
//! ideal I in R = (x*y, x^2)
//! sub Y in R = I          # or inline: sub Y in R = (x, y)
//! divisor D in R = (x)
//! lattice L = {0<a, 0<b, a<1, b<1}
//! diagram d on L = {0: Y0, a: Ya, b: Yb, 1: R}
//! chain c = Z < Y < R
//! family F = (Y1, Y2)
//! ```
//!
//! Comments start with `#`. Names share one namespace and must be unique.

use std::collections::BTreeMap;
use std::fmt;

use blowup_calc::blowup::{Lattice, PosetDiagram};
use blowup_calc::geom::{Atlas, Chart, ClosedSubscheme, Divisor};
use blowup_calc::idealcalc::Ideal;
use blowup_calc::polycore::{parse_polynomial, MonomialOrder, PolyRing, Polynomial, RingRef};

/// A positioned diagnostic (1-based line and column).
#[derive(Debug)]
pub struct SceneError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for SceneError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderChoice {
    GrevLex,
    Lex,
}

/// A parsed and validated scene.
pub struct Scene {
    pub rings: BTreeMap<String, RingRef>,
    pub atlases: BTreeMap<String, Atlas>,
    pub ideals: BTreeMap<String, (String, Ideal)>,
    pub subs: BTreeMap<String, ClosedSubscheme>,
    pub sub_ring: BTreeMap<String, String>,
    pub divisors: BTreeMap<String, (String, Divisor)>,
    pub lattices: BTreeMap<String, (Lattice, Vec<(usize, usize)>)>,
    pub diagrams: BTreeMap<String, (String, Vec<String>, PosetDiagram)>,
    pub chains: BTreeMap<String, (String, String, String)>,
    pub families: BTreeMap<String, Vec<String>>,
    decl_order: Vec<(String, String)>,
}

struct Cursor<'a> {
    text: &'a str,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, col: usize, msg: impl Into<String>) -> SceneError {
        SceneError { line: self.line, col, msg: msg.into() }
    }

    fn err_at(&self, byte: usize, msg: impl Into<String>) -> SceneError {
        SceneError { line: self.line, col: byte + 1, msg: msg.into() }
    }

    fn offset_of(&self, part: &str) -> usize {
        self.text.find(part).map(|p| p + 1).unwrap_or(1)
    }
}

pub fn parse_scene(text: &str, order: OrderChoice) -> Result<Scene, SceneError> {
    let mut scene = Scene {
        rings: BTreeMap::new(),
        atlases: BTreeMap::new(),
        ideals: BTreeMap::new(),
        subs: BTreeMap::new(),
        sub_ring: BTreeMap::new(),
        divisors: BTreeMap::new(),
        lattices: BTreeMap::new(),
        diagrams: BTreeMap::new(),
        chains: BTreeMap::new(),
        families: BTreeMap::new(),
        decl_order: Vec::new(),
    };
    let mut names: BTreeMap<String, usize> = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cur = Cursor { text: raw, line: lineno + 1 };
        let (kw, rest) = line.split_once(char::is_whitespace).ok_or_else(|| {
            cur.err(1, "expected a declaration")
        })?;
        let rest = rest.trim();
        let register = |names: &mut BTreeMap<String, usize>, name: &str| -> Result<(), SceneError> {
            if names.insert(name.to_string(), lineno + 1).is_some() {
                return Err(cur.err(cur.offset_of(name), format!("duplicate name `{name}`")));
            }
            Ok(())
        };
        match kw {
            "ring" => {
                let (name, body) = split_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let body = body
                    .strip_prefix("QQ[")
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| cur.err(cur.offset_of(&body), "expected QQ[vars]"))?;
                let vars: Vec<&str> = body.split(',').map(|v| v.trim()).collect();
                let ord = match order {
                    OrderChoice::GrevLex => MonomialOrder::grevlex(vars.len()),
                    OrderChoice::Lex => MonomialOrder::lex(vars.len()),
                };
                let ring = PolyRing::with_order(vars, ord)
                    .map_err(|e| cur.err(1, e.to_string()))?;
                let chart = Chart::new(&name, &ring, Ideal::zero(&ring))
                    .map_err(|e| cur.err(1, e.to_string()))?;
                scene.atlases.insert(name.clone(), Atlas::single(chart));
                scene.rings.insert(name.clone(), ring);
                scene.decl_order.push(("ring".into(), name));
            }
            "ideal" => {
                let (name, ring_name, body) = split_in_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let ring = scene.rings.get(&ring_name).ok_or_else(|| {
                    cur.err(cur.offset_of(&ring_name), format!("unresolved ring `{ring_name}`"))
                })?;
                let gens = parse_poly_list(&cur, ring, &body)?;
                let ideal =
                    Ideal::new(ring, gens).map_err(|e| cur.err(1, e.to_string()))?;
                scene.ideals.insert(name.clone(), (ring_name, ideal));
                scene.decl_order.push(("ideal".into(), name));
            }
            "sub" => {
                let (name, ring_name, body) = split_in_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let atlas = scene.atlases.get(&ring_name).cloned().ok_or_else(|| {
                    cur.err(cur.offset_of(&ring_name), format!("unresolved ring `{ring_name}`"))
                })?;
                let ideal = if body.starts_with('(') {
                    let ring = &scene.rings[&ring_name];
                    Ideal::new(ring, parse_poly_list(&cur, ring, &body)?)
                        .map_err(|e| cur.err(1, e.to_string()))?
                } else {
                    let (iring, ideal) = scene.ideals.get(body.trim()).ok_or_else(|| {
                        cur.err(cur.offset_of(body.trim()), format!("unresolved ideal `{}`", body.trim()))
                    })?;
                    if *iring != ring_name {
                        return Err(cur.err(1, "ideal lives in a different ring"));
                    }
                    ideal.clone()
                };
                let sub = ClosedSubscheme::new(&atlas, vec![ideal])
                    .map_err(|e| cur.err(1, e.to_string()))?;
                scene.subs.insert(name.clone(), sub);
                scene.sub_ring.insert(name.clone(), ring_name);
                scene.decl_order.push(("sub".into(), name));
            }
            "divisor" => {
                let (name, ring_name, body) = split_in_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let atlas = scene.atlases.get(&ring_name).cloned().ok_or_else(|| {
                    cur.err(cur.offset_of(&ring_name), format!("unresolved ring `{ring_name}`"))
                })?;
                let ring = &scene.rings[&ring_name];
                let gens = parse_poly_list(&cur, ring, &body)?;
                if gens.len() != 1 {
                    return Err(cur.err(1, "a divisor takes exactly one generator"));
                }
                let d = Divisor::new(&atlas, gens).map_err(|e| cur.err(1, e.to_string()))?;
                scene.divisors.insert(name.clone(), (ring_name, d));
                scene.decl_order.push(("divisor".into(), name));
            }
            "lattice" => {
                let (name, body) = split_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let body = strip_braces(&cur, &body)?;
                let mut elements: Vec<String> = Vec::new();
                let mut covers = Vec::new();
                for part in body.split(',').map(|p| p.trim()).filter(|p| !p.is_empty()) {
                    let (a, b) = part.split_once('<').ok_or_else(|| {
                        cur.err(cur.offset_of(part), "expected `a<b`")
                    })?;
                    let (a, b) = (a.trim().to_string(), b.trim().to_string());
                    for e in [&a, &b] {
                        if !elements.contains(e) {
                            elements.push(e.clone());
                        }
                    }
                    let ai = elements.iter().position(|e| *e == a).unwrap();
                    let bi = elements.iter().position(|e| *e == b).unwrap();
                    covers.push((ai, bi));
                }
                let lattice = Lattice::from_covers(elements, &covers)
                    .map_err(|e| cur.err(1, format!("invalid lattice: {e}")))?;
                scene.lattices.insert(name.clone(), (lattice, covers));
                scene.decl_order.push(("lattice".into(), name));
            }
            "diagram" => {
                let (name, lat_name, body) = split_on_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let (lattice, _) = scene.lattices.get(&lat_name).cloned().ok_or_else(|| {
                    cur.err(cur.offset_of(&lat_name), format!("unresolved lattice `{lat_name}`"))
                })?;
                let body = strip_braces(&cur, &body)?;
                let mut assign_names = vec![String::new(); lattice.len()];
                for part in body.split(',').map(|p| p.trim()).filter(|p| !p.is_empty()) {
                    let (el, target) = part.split_once(':').ok_or_else(|| {
                        cur.err(cur.offset_of(part), "expected `element: name`")
                    })?;
                    let el = el.trim();
                    let idx = lattice.index_of(el).ok_or_else(|| {
                        cur.err(cur.offset_of(el), format!("unknown lattice element `{el}`"))
                    })?;
                    assign_names[idx] = target.trim().to_string();
                }
                let mut ambient: Option<(String, Atlas)> = None;
                for n in &assign_names {
                    if n.is_empty() {
                        return Err(cur.err(1, "every lattice element needs an assignment"));
                    }
                    if let Some(rn) = scene.sub_ring.get(n) {
                        let a = scene.atlases[rn].clone();
                        ambient.get_or_insert((rn.clone(), a));
                    }
                }
                let (ring_name, atlas) = ambient
                    .ok_or_else(|| cur.err(1, "diagram needs at least one subscheme entry"))?;
                let assign = assign_names
                    .iter()
                    .map(|n| {
                        if let Some(sub) = scene.subs.get(n) {
                            Ok(sub.clone())
                        } else if scene.rings.contains_key(n) {
                            if *n != ring_name {
                                return Err(cur.err(
                                    cur.offset_of(n),
                                    "diagram members live in different rings",
                                ));
                            }
                            Ok(ClosedSubscheme::whole(&atlas))
                        } else {
                            Err(cur.err(cur.offset_of(n), format!("unresolved name `{n}`")))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let d = PosetDiagram::new(lattice, &atlas, assign)
                    .map_err(|e| cur.err(1, e.to_string()))?;
                let mono = d.verify_monotone().map_err(|e| cur.err(1, e.to_string()))?;
                if let Some(first) = mono.first() {
                    return Err(cur.err(1, format!("diagram is not monotone: {first}")));
                }
                scene.diagrams.insert(name.clone(), (lat_name, assign_names, d));
                scene.decl_order.push(("diagram".into(), name));
            }
            "chain" => {
                let (name, body) = split_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let parts: Vec<&str> = body.split('<').map(|p| p.trim()).collect();
                if parts.len() != 3 {
                    return Err(cur.err(1, "expected `chain c = Z < Y < R`"));
                }
                for p in &parts[..2] {
                    if !scene.subs.contains_key(*p) {
                        return Err(cur.err(cur.offset_of(p), format!("unresolved sub `{p}`")));
                    }
                }
                if !scene.rings.contains_key(parts[2]) {
                    return Err(cur.err(
                        cur.offset_of(parts[2]),
                        format!("unresolved ring `{}`", parts[2]),
                    ));
                }
                let z = &scene.subs[parts[0]];
                let y = &scene.subs[parts[1]];
                if !z.contained_in(y).map_err(|e| cur.err(1, e.to_string()))? {
                    return Err(cur.err(1, "chain is not nested"));
                }
                scene
                    .chains
                    .insert(name.clone(), (parts[0].into(), parts[1].into(), parts[2].into()));
                scene.decl_order.push(("chain".into(), name));
            }
            "family" => {
                let (name, body) = split_eq(&cur, rest)?;
                register(&mut names, &name)?;
                let body = body
                    .strip_prefix('(')
                    .and_then(|b| b.strip_suffix(')'))
                    .ok_or_else(|| cur.err(1, "expected `(Y1, Y2, …)`"))?;
                let members: Vec<String> = body
                    .split(',')
                    .map(|p| p.trim().to_string())
                    .filter(|p| !p.is_empty())
                    .collect();
                if members.is_empty() {
                    return Err(cur.err(1, "empty family"));
                }
                for m in &members {
                    if !scene.subs.contains_key(m) {
                        return Err(cur.err(cur.offset_of(m), format!("unresolved sub `{m}`")));
                    }
                }
                scene.families.insert(name.clone(), members);
                scene.decl_order.push(("family".into(), name));
            }
            other => {
                return Err(cur.err(1, format!("unknown declaration `{other}`")));
            }
        }
    }
    Ok(scene)
}

fn split_eq(cur: &Cursor, rest: &str) -> Result<(String, String), SceneError> {
    let (name, body) = rest
        .split_once('=')
        .ok_or_else(|| cur.err(1, "expected `name = …`"))?;
    Ok((name.trim().to_string(), body.trim().to_string()))
}

fn split_in_eq(cur: &Cursor, rest: &str) -> Result<(String, String, String), SceneError> {
    let (head, body) = rest
        .split_once('=')
        .ok_or_else(|| cur.err(1, "expected `name in R = …`"))?;
    let (name, ring) = head
        .trim()
        .split_once(" in ")
        .ok_or_else(|| cur.err(1, "expected `name in R`"))?;
    Ok((name.trim().to_string(), ring.trim().to_string(), body.trim().to_string()))
}

fn split_on_eq(cur: &Cursor, rest: &str) -> Result<(String, String, String), SceneError> {
    let (head, body) = rest
        .split_once('=')
        .ok_or_else(|| cur.err(1, "expected `name on L = …`"))?;
    let (name, lat) = head
        .trim()
        .split_once(" on ")
        .ok_or_else(|| cur.err(1, "expected `name on L`"))?;
    Ok((name.trim().to_string(), lat.trim().to_string(), body.trim().to_string()))
}

fn strip_braces(cur: &Cursor, body: &str) -> Result<String, SceneError> {
    body.strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .map(|b| b.to_string())
        .ok_or_else(|| cur.err(cur.offset_of(body), "expected `{…}`"))
}

fn parse_poly_list(
    cur: &Cursor,
    ring: &RingRef,
    body: &str,
) -> Result<Vec<Polynomial>, SceneError> {
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| cur.err(cur.offset_of(body), "expected `(p1, p2, …)`"))?;
    let mut out = Vec::new();
    for part in inner.split(',').map(|p| p.trim()).filter(|p| !p.is_empty()) {
        let p = parse_polynomial(ring, part).map_err(|e| match e {
            blowup_calc::Error::Parse { pos, msg } => {
                cur.err_at(cur.offset_of(part) - 1 + pos, msg)
            }
            other => cur.err(cur.offset_of(part), other.to_string()),
        })?;
        out.push(p);
    }
    Ok(out)
}

impl Scene {
    /// Canonical serialization: declarations in original order, bodies in
    /// canonical text form. `parse ∘ serialize` is the identity on the
    /// serialized form.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (kind, name) in &self.decl_order {
            match kind.as_str() {
                "ring" => {
                    let r = &self.rings[name];
                    out.push_str(&format!("ring {} = QQ[{}]\n", name, r.var_names().join(",")));
                }
                "ideal" => {
                    let (ring, ideal) = &self.ideals[name];
                    let gens: Vec<String> =
                        ideal.gens().iter().map(|g| g.to_string()).collect();
                    out.push_str(&format!("ideal {name} in {ring} = ({})\n", gens.join(", ")));
                }
                "sub" => {
                    let sub = &self.subs[name];
                    let ring = &self.sub_ring[name];
                    let gens: Vec<String> =
                        sub.ideal(0).gens().iter().map(|g| g.to_string()).collect();
                    out.push_str(&format!("sub {name} in {ring} = ({})\n", gens.join(", ")));
                }
                "divisor" => {
                    let (ring, d) = &self.divisors[name];
                    out.push_str(&format!("divisor {name} in {ring} = ({})\n", d.gen(0)));
                }
                "lattice" => {
                    let (lattice, covers) = &self.lattices[name];
                    let parts: Vec<String> = covers
                        .iter()
                        .map(|&(a, b)| format!("{}<{}", lattice.name(a), lattice.name(b)))
                        .collect();
                    out.push_str(&format!("lattice {name} = {{{}}}\n", parts.join(", ")));
                }
                "diagram" => {
                    let (lat, assign, d) = &self.diagrams[name];
                    let parts: Vec<String> = (0..d.lattice.len())
                        .map(|i| format!("{}: {}", d.lattice.name(i), assign[i]))
                        .collect();
                    out.push_str(&format!("diagram {name} on {lat} = {{{}}}\n", parts.join(", ")));
                }
                "chain" => {
                    let (z, y, x) = &self.chains[name];
                    out.push_str(&format!("chain {name} = {z} < {y} < {x}\n"));
                }
                "family" => {
                    let members = &self.families[name];
                    out.push_str(&format!("family {name} = ({})\n", members.join(", ")));
                }
                _ => unreachable!(),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AXES: &str = "\
ring R = QQ[x,y]
ideal I in R = (x, y)
sub origin in R = I
sub xaxis in R = (y)
divisor D in R = (x)
lattice L = {0<a, 0<b, a<1, b<1}
diagram d on L = {0: origin, a: xaxis, b: xaxis, 1: R}
chain c = origin < xaxis < R
family F = (origin, xaxis)
";

    fn parsed(text: &str) -> Scene {
        match parse_scene(text, OrderChoice::GrevLex) {
            Ok(s) => s,
            Err(e) => panic!("parse failed: {e}"),
        }
    }

    fn parse_err(text: &str) -> SceneError {
        match parse_scene(text, OrderChoice::GrevLex) {
            Ok(_) => panic!("expected a diagnostic"),
            Err(e) => e,
        }
    }

    #[test]
    fn round_trip() {
        let scene = parsed(AXES);
        let text = scene.serialize();
        let again = parsed(&text);
        assert_eq!(text, again.serialize());
    }

    #[test]
    fn antisymmetry_diagnostic() {
        let err = parse_err("lattice L = {a<b, b<a}\n");
        assert!(err.msg.contains("invalid lattice"), "{err}");
        assert_eq!(err.line, 1);
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_err("ring R = QQ[x]\nideal I in R = (x**)\n");
        assert_eq!(err.line, 2);
        assert!(err.col > 16, "column {} should point into the polynomial", err.col);
    }

    #[test]
    fn unresolved_name() {
        let err = parse_err("sub Y in R = (x)\n");
        assert!(err.msg.contains("unresolved ring"));
    }

    #[test]
    fn duplicate_names() {
        let err = parse_err("ring R = QQ[x]\nring R = QQ[y]\n");
        assert!(err.msg.contains("duplicate"));
    }

    #[test]
    fn non_monotone_diagram_rejected() {
        let err = parse_err(
            "ring R = QQ[x,y]\nsub fat in R = (x^2, y)\nsub ax in R = (y)\nsub ay in R = (x)\nlattice L = {0<a, 0<b, a<1, b<1}\ndiagram d on L = {0: fat, a: ax, b: ay, 1: R}\n",
        );
        assert!(err.msg.contains("monotone"), "{err}");
    }
}
