//! Deformation-to-the-normal-cone spaces.
//!
//! The single space is `Bl_{Y×0}(X×ℙ¹)` with its exceptional (the
//! projectivized normal cone) and the strict transform of `X×0` (the
//! blowup of X); the multiple space runs the poset tower over the
//! power-set lattice of a family of immersions; the composite space
//! performs four pushout-blowups over `X×ℙ¹×ℙ¹` and its boundary strata.

use std::collections::BTreeMap;

use crate::blowup::{
    blow_up, divisor_transform, poset_blow_up, pushout_blow_up, total_transform,
    ExcessiveSquare, Lattice, PosetDiagram, PushoutOrder, StepLog,
};
use crate::geom::{Atlas, BaseSpace, ClosedSubscheme, Divisor, ProductAtlas};
use crate::polycore::Polynomial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformKind {
    Single,
    Multiple,
    Composite,
}

/// A deformation space: the total atlas, labeled strict exceptional
/// divisors, and (when the construction has a fiber coordinate) the
/// section of the ambient at fiber value 1.
#[derive(Clone, Debug)]
pub struct DeformationSpace {
    pub kind: DeformKind,
    pub total: Atlas,
    pub labeled: BTreeMap<String, Divisor>,
    pub section: Option<ClosedSubscheme>,
    pub tower: Vec<StepLog>,
    /// Per total chart, the ambient chart it lies over.
    pub orig_chart: Vec<usize>,
    pub ambient: Atlas,
}

impl DeformationSpace {
    /// The section must avoid every labeled divisor (unit ideal sums).
    pub fn verify_section_disjoint(&self) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        let Some(section) = &self.section else {
            return Ok(notes);
        };
        for (name, d) in &self.labeled {
            let meet = section.intersect(d.subscheme())?;
            if !meet.is_empty() {
                notes.push(format!("section meets {name}"));
            }
        }
        Ok(notes)
    }
}

fn subset_label(subset: &[usize]) -> String {
    let inner = subset.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
    format!("E'{{{inner}}}")
}

/// `X × ℙ¹` together with the factor-level and product-level loci at the
/// fiber coordinates 0 and 1.
struct AmbientWithLine {
    prod: ProductAtlas,
    p1: Atlas,
    /// {0} and {1} and ℙ¹ itself, as subschemes of the ℙ¹ factor.
    zero_f: ClosedSubscheme,
    one_f: ClosedSubscheme,
    whole_f: ClosedSubscheme,
    /// X×1 as a subscheme of the product.
    one: ClosedSubscheme,
    /// X×0 as a divisor of the product.
    zero_divisor: Divisor,
}

fn ambient_with_line(x: &Atlas) -> Result<AmbientWithLine> {
    let bs = BaseSpace::proj(1);
    let p1 = bs.atlas()?;
    let zero_f = bs.proj_point_zero(&p1, 0)?;
    let one_f = bs.proj_point_one(&p1, 0)?;
    let whole_f = ClosedSubscheme::whole(&p1);
    let prod = crate::geom::product(x, &p1)?;
    let whole = ClosedSubscheme::whole(x);
    let one = prod.product_subscheme(&whole, &one_f)?;
    let mut zero_gens = Vec::new();
    for (ci, &(_, r)) in prod.pairs.iter().enumerate() {
        let ring = &prod.atlas.chart(ci).ring;
        if r == 0 {
            zero_gens.push(prod.inject_right(ci, &Polynomial::var(&p1.chart(0).ring, 0)));
        } else {
            zero_gens.push(Polynomial::one(ring));
        }
    }
    let zero_divisor = Divisor::new(&prod.atlas, zero_gens)?;
    Ok(AmbientWithLine { prod, p1, zero_f, one_f, whole_f, one, zero_divisor })
}

/// The single deformation space `D(i) = Bl_{Y×0}(X×ℙ¹)`, labeled with
/// `E'{1}` (the projectivized normal cone piece) and `E'{}` (the strict
/// transform of `X×0`, the blowup of X along Y).
pub fn deformation_space(y: &ClosedSubscheme) -> Result<DeformationSpace> {
    let x = y.ambient();
    let line = ambient_with_line(x)?;
    let y_zero = line.prod.product_subscheme(y, &line.zero_f)?;
    let b = blow_up(&line.prod.atlas, &y_zero)?;

    let mut labeled = BTreeMap::new();
    labeled.insert(subset_label(&[0]), b.exceptional.clone());
    labeled.insert(subset_label(&[]), divisor_transform(&b, &line.zero_divisor)?);
    let section = total_transform(&b, &line.one)?;

    Ok(DeformationSpace {
        kind: DeformKind::Single,
        total: b.result.clone(),
        labeled,
        section: Some(section),
        tower: vec![StepLog {
            center_label: subset_label(&[0]),
            center_gens: b
                .source
                .charts()
                .iter()
                .zip(&b.center_gens)
                .map(|(c, g)| (c.label.clone(), g.iter().map(|p| p.to_string()).collect()))
                .collect(),
        }],
        orig_chart: b.source_chart.clone(),
        ambient: line.prod.atlas.clone(),
    })
}

/// The power-set lattice diagram of a family `(Y_ω ⊆ X_ω)` inside
/// `X^Ω × ℙ¹`: one subscheme `Y^Ψ × X^{Ω∖Ψ} × 0` per subset Ψ, with the
/// ambient adjoined as the top. Returns the diagram, the (subset, lattice
/// index) table, and the `X^Ω×1` section of the ambient.
pub fn multiple_deformation_diagram(
    family: &[ClosedSubscheme],
) -> Result<(PosetDiagram, Vec<(Vec<usize>, usize)>, ClosedSubscheme)> {
    let n = family.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty family".into()));
    }

    // fold the ambient product X^Ω, tracking a subscheme per subset
    let mut amb = family[0].ambient().clone();
    let mut subs: Vec<(Vec<usize>, ClosedSubscheme)> = vec![
        (vec![], ClosedSubscheme::whole(&amb)),
        (vec![0], family[0].clone()),
    ];
    for (k, yk) in family.iter().enumerate().skip(1) {
        let xk = yk.ambient();
        let prod = crate::geom::product(&amb, xk)?;
        let whole_k = ClosedSubscheme::whole(xk);
        let mut next = Vec::new();
        for (set, sub) in &subs {
            next.push((set.clone(), prod.product_subscheme(sub, &whole_k)?));
            let mut with_k = set.clone();
            with_k.push(k);
            next.push((with_k, prod.product_subscheme(sub, yk)?));
        }
        amb = prod.atlas.clone();
        subs = next;
    }

    // cross with ℙ¹ at fiber coordinate 0
    let line = ambient_with_line(&amb)?;
    let mut entries: Vec<(Vec<usize>, ClosedSubscheme)> = Vec::new();
    for (set, sub) in &subs {
        entries.push((set.clone(), line.prod.product_subscheme(sub, &line.zero_f)?));
    }
    // the lattice minimum (the full subset) comes first
    entries.sort_by_key(|(set, _)| (usize::MAX - set.len(), set.clone()));

    // lattice: P(Ω)^op plus an adjoined top (the ambient)
    let m = entries.len();
    let mut names: Vec<String> = entries.iter().map(|(s, _)| subset_label(s)).collect();
    names.push("top".into());
    let mut leq = vec![vec![false; m + 1]; m + 1];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
        row[m] = true;
    }
    for i in 0..m {
        for j in 0..m {
            // Ψ ≤ Φ in P(Ω)^op iff Ψ ⊇ Φ
            if entries[j].0.iter().all(|e| entries[i].0.contains(e)) {
                leq[i][j] = true;
            }
        }
    }
    let lattice = Lattice::from_leq(names, leq)?;
    let mut assign: Vec<ClosedSubscheme> = entries.iter().map(|(_, s)| s.clone()).collect();
    assign.push(ClosedSubscheme::whole(&line.prod.atlas));
    let diagram = PosetDiagram::new(lattice, &line.prod.atlas, assign)?;
    let table = entries.iter().enumerate().map(|(i, (s, _))| (s.clone(), i)).collect();
    Ok((diagram, table, line.one))
}

/// The multiple deformation space of a family `(Y_ω ⊆ X_ω)`: the poset
/// blowup of the power-set diagram `Ψ ↦ Y^Ψ × X^{Ω∖Ψ} × 0` inside
/// `X^Ω × ℙ¹`, with one strict exceptional divisor per subset.
pub fn multiple_deformation_space(family: &[ClosedSubscheme]) -> Result<DeformationSpace> {
    let (diagram, table, one) = multiple_deformation_diagram(family)?;
    let entries = table;
    let line_one = one;

    let r = poset_blow_up(&diagram)?;
    let mut labeled = BTreeMap::new();
    for (set, i) in &entries {
        labeled.insert(subset_label(set), r.strict_exceptionals[i].clone());
    }
    // section X^Ω×1, pulled to the tower
    let mut ideals = Vec::new();
    for (fc, chart) in r.atlas.charts().iter().enumerate() {
        ideals.push(line_one.ideal(r.orig_chart[fc]).embed_by_name(&chart.ring)?);
    }
    let section = ClosedSubscheme::new(&r.atlas, ideals)?;
    let ambient = diagram.ambient.clone();

    Ok(DeformationSpace {
        kind: DeformKind::Multiple,
        total: r.atlas.clone(),
        labeled,
        section: Some(section),
        tower: r.tower.clone(),
        orig_chart: r.orig_chart.clone(),
        ambient,
    })
}

/// The four pieces of the composite deformation space of a chain
/// `Z ⊆ Y ⊆ X`.
#[derive(Clone, Debug)]
pub struct CompositeDeformation {
    /// Over `X×ℙ¹×ℙ¹`.
    pub d: DeformationSpace,
    /// Over `X×ℙ¹×0` (the first ℙ¹ survives).
    pub boundary_y: DeformationSpace,
    /// Over `X×0×ℙ¹` (the second ℙ¹ survives).
    pub boundary_z: DeformationSpace,
    /// Over `X×0×0`.
    pub boundary_yz: DeformationSpace,
}

impl CompositeDeformation {
    /// The two vanishing identities: the strict exceptional divisor over
    /// the Z-leg is empty on both `∂_Y D` and `∂_{Y,Z} D`.
    pub fn verify_empty_boundaries(&self) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        if !self.boundary_y.labeled["E'Z"].is_empty() {
            notes.push("E'Z of the Y-boundary is not empty".into());
        }
        if !self.boundary_yz.labeled["E'Z"].is_empty() {
            notes.push("E'Z of the corner boundary is not empty".into());
        }
        Ok(notes)
    }
}

fn piece(
    ambient: &Atlas,
    w: ClosedSubscheme,
    zn: ClosedSubscheme,
    yn: ClosedSubscheme,
    section: Option<ClosedSubscheme>,
) -> Result<DeformationSpace> {
    let sq = ExcessiveSquare::new(ambient, w, zn, yn)?;
    let r = pushout_blow_up(&sq, PushoutOrder::ZFirst)?;
    let mut labeled = BTreeMap::new();
    labeled.insert("E'Y".to_string(), r.e_y.clone());
    labeled.insert("E'Z".to_string(), r.e_z.clone());
    labeled.insert("E'YZ".to_string(), r.e_w.clone());
    let section = match section {
        None => None,
        Some(s) => {
            let mut ideals = Vec::new();
            for (fc, chart) in r.atlas.charts().iter().enumerate() {
                ideals.push(s.ideal(r.orig_chart[fc]).embed_by_name(&chart.ring)?);
            }
            Some(ClosedSubscheme::new(&r.atlas, ideals)?)
        }
    };
    Ok(DeformationSpace {
        kind: DeformKind::Composite,
        total: r.atlas.clone(),
        labeled,
        section,
        tower: r.tower.clone(),
        orig_chart: r.orig_chart.clone(),
        ambient: ambient.clone(),
    })
}

/// Builds the composite deformation space: four pushout-blowups over
/// `X×ℙ¹×ℙ¹`, `X×ℙ¹(×0)`, `X(×0)×ℙ¹`, and `X(×0×0)`.
pub fn composite_deformation_space(
    z: &ClosedSubscheme,
    y: &ClosedSubscheme,
) -> Result<CompositeDeformation> {
    let x = y.ambient();
    if z.ambient() != x {
        return Err(Error::InvalidDiagram("chain members on different atlases".into()));
    }
    if !z.contained_in(y)? {
        return Err(Error::InvalidDiagram("Z is not contained in Y".into()));
    }

    // X×ℙ¹ data shared by three pieces
    let line1 = ambient_with_line(x)?;
    let a_xp = line1.prod.atlas.clone();
    let z_zero = line1.prod.product_subscheme(z, &line1.zero_f)?;
    let z_line = line1.prod.product_subscheme(z, &line1.whole_f)?;
    let y_zero = line1.prod.product_subscheme(y, &line1.zero_f)?;
    let y_line = line1.prod.product_subscheme(y, &line1.whole_f)?;
    let x_one = line1.one.clone();

    // D: over (X×ℙ¹)×ℙ¹ with W = Z×0×0, Z-leg = Z×0×ℙ¹, Y-leg = Y×ℙ¹×0
    let line2 = ambient_with_line(&a_xp)?;
    let w_d = line2.prod.product_subscheme(&z_zero, &line2.zero_f)?;
    let z_d = line2.prod.product_subscheme(&z_zero, &line2.whole_f)?;
    let y_d = line2.prod.product_subscheme(&y_line, &line2.zero_f)?;
    let section_d = line2.prod.product_subscheme(&x_one, &line2.one_f)?;
    let _ = &line2.p1;
    let d = piece(&line2.prod.atlas, w_d, z_d, y_d, Some(section_d))?;

    // ∂_Y D: over X×ℙ¹ with W = Z-leg = Z×0 and Y-leg = Y×ℙ¹
    let by = piece(&a_xp, z_zero.clone(), z_zero.clone(), y_line, None)?;

    // ∂_Z D: over X×ℙ¹ with W = Z×0, Z-leg = Z×ℙ¹, Y-leg = Y×0
    let bz = piece(&a_xp, z_zero.clone(), z_line, y_zero, None)?;

    // ∂_{Y,Z} D: over X with W = Z-leg = Z and Y-leg = Y
    let byz = piece(x, z.clone(), z.clone(), y.clone(), None)?;

    Ok(CompositeDeformation { d, boundary_y: by, boundary_z: bz, boundary_yz: byz })
}
