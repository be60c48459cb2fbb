//! The registered identity checks and their fixture correspondences.
//!
//! Every correspondence here is hand-derived data; the library only
//! verifies it (a failing correspondence is a finding about the fixture,
//! not a property of the checker).

use super::{Anchor, IdentityCheck, Params};
use crate::blowup::{
    blow_up, conormal_of_strict_transform, divisor_transform, excessive_check_lattice,
    poset_blow_up, pushout_blow_up, strict_transform, verify_poset_disjointness,
    verify_poset_products, ExcessiveSquare, Lattice, PosetDiagram, PushoutOrder, StrictMode,
};
use crate::deform::{
    composite_deformation_space, deformation_space, multiple_deformation_diagram,
};
use crate::geom::{
    affine_space, bundle_proj, bundle_total, check_iso, check_morphism, open_complement_family,
    product, Atlas, BaseSpace, ChartPairing, ClosedSubscheme, Correspondence, Divisor,
    MorphismData, TwistedSum,
};
use crate::idealcalc::{Ideal, RingMap};
use crate::polycore::parse_polynomial;
use crate::Result;

pub fn all() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new(
            "ID-SUBTRACT",
            &["divisor", "blowup"],
            Anchor {
                reference: "blowup-subtract-divisor",
                quote: r"$\mathrm{Bl}_YX=\mathrm{Bl}_{Y-D}X$ with $\mathrm{E}_{Y-D}X+D|_{\mathrm{Bl}_{Y-D}X}$",
            },
            Box::new(id_subtract),
        ),
        IdentityCheck::new(
            "ID-TOTALTRANS",
            &["divisor", "blowup"],
            Anchor {
                reference: "total-transform-excessive",
                quote: r"$\mathrm{Bl}_ZY=\mathrm{Bl}_{\mathrm{E}_ZX}(Y|_{\mathrm{Bl}_ZX})$",
            },
            Box::new(id_totaltrans),
        ),
        IdentityCheck::new(
            "ID-POSET-E",
            &["poset"],
            Anchor {
                reference: "poset-representability",
                quote: r"$\mathrm{E}_\pi(i)=\sum_{\rho\le\pi}\mathrm{E}'_\rho(i)$",
            },
            Box::new(id_poset_e),
        ),
        IdentityCheck::new(
            "ID-POSET-DISJ",
            &["poset"],
            Anchor {
                reference: "poset-representability",
                quote: r"$\mathrm{E}'_\pi(i)\cap\mathrm{E}'_\rho(i)=\varnothing$",
            },
            Box::new(id_poset_disj),
        ),
        IdentityCheck::new(
            "ID-PUSHOUT-8",
            &["pushout"],
            Anchor {
                reference: "pushout-blowup-description",
                quote: r"$\mathrm{Bl}'=\mathrm{Bl}_{\mathrm{Bl}_{\mathrm{E}_WY}(\mathrm{E}_ZX)_W}\mathrm{Bl}_{\mathrm{Bl}_WY}\mathrm{Bl}_ZX$",
            },
            Box::new(id_pushout8),
        ),
        IdentityCheck::new(
            "ID-BL0V",
            &["bundle"],
            Anchor {
                reference: "p-homotopy-vector-bundle",
                quote: r"$\mathrm{Bl}_0\mathbf{V}_T(\mathcal{E})=\mathbf{V}_{\mathbf{P}_T(\mathcal{E})}(\mathcal{O}(1))$",
            },
            Box::new(id_bl0v),
        ),
        IdentityCheck::new(
            "ID-BL0P",
            &["bundle"],
            Anchor {
                reference: "p-homotopy-vector-bundle",
                quote: r"$\mathrm{Bl}_0\mathbf{P}_T(\mathcal{E}\oplus\mathcal{O})=\mathbf{P}_{\mathbf{P}_T(\mathcal{E})}(\mathcal{O}(1)\oplus\mathcal{O})$",
            },
            Box::new(id_bl0p),
        ),
        IdentityCheck::new(
            "ID-COMPL",
            &["bundle"],
            Anchor {
                reference: "unstable-gysin",
                quote: r"$\mathbf{P}_T(\mathcal{E}\oplus\mathcal{O})\setminus\mathbf{P}_T(\mathcal{O})=\mathbf{V}_{\mathbf{P}_T(\mathcal{E})}(\mathcal{O}(-1))$",
            },
            Box::new(id_compl),
        ),
        IdentityCheck::new(
            "ID-BLPE",
            &["bundle"],
            Anchor {
                reference: "gysin-normalization-corollary",
                quote: r"$\mathrm{Bl}_{\mathbf{P}_Z(\mathcal{E})}\mathbf{P}_Z(\mathcal{E}\oplus\mathcal{F})=\mathbf{P}_{\mathbf{P}_Z(\mathcal{F})}(\mathcal{E}(-1)\oplus\mathcal{O})$",
            },
            Box::new(id_blpe),
        ),
        IdentityCheck::new(
            "ID-VT-SPLIT",
            &["bundle", "deform"],
            Anchor {
                reference: "gysin-normalization",
                quote: r"$(v,t)\mapsto[v:t]$ carries $\mathrm{Bl}_{(0,0)}(\mathbf{V}_Y(\mathcal{E})\times0)$ into $\mathbf{P}_Y(\mathcal{E})$",
            },
            Box::new(id_vt_split),
        ),
        IdentityCheck::new(
            "ID-DEFORM",
            &["deform"],
            Anchor {
                reference: "multiple-deformation-space",
                quote: r"$\mathrm{E}'_\Omega\mathrm{D}(i)=\mathbf{P}_Y(\mathcal{N}_i\oplus\mathcal{O})$",
            },
            Box::new(id_deform),
        ),
        IdentityCheck::new(
            "ID-COMPOSITE-EMPTY",
            &["deform", "pushout"],
            Anchor {
                reference: "composite-deformation-space",
                quote: r"$\mathrm{E}'_Z\partial_Y\mathrm{D}=\mathrm{E}'_Z\partial_{Y,Z}\mathrm{D}=\varnothing$",
            },
            Box::new(id_composite_empty),
        ),
        IdentityCheck::new(
            "ID-CONORMAL",
            &["conormal"],
            Anchor {
                reference: "blowup-edges",
                quote: r"$\mathcal{N}_{\mathrm{Bl}_WZ/\mathrm{Bl}_YX}=\mathrm{fib}(\mathcal{N}_{Z/X}|_{\mathrm{Bl}_WZ}\to\mathcal{N}_{W/Y}|_{\mathrm{E}_WZ})(\mathrm{E}_WZ)$",
            },
            Box::new(id_conormal),
        ),
    ]
}

fn note(notes: &mut Vec<String>, failed: bool, msg: impl Into<String>) {
    if failed {
        notes.push(msg.into());
    }
}

/// Builds a pairing by chart labels with textual images.
fn pair(
    left: &Atlas,
    right: &Atlas,
    l_label: &str,
    r_label: &str,
    fwd: &[&str],
    bwd: &[&str],
) -> Result<ChartPairing> {
    let li = left
        .chart_by_label(l_label)
        .ok_or_else(|| crate::Error::Coverage(format!("no left chart `{l_label}`")))?;
    let ri = right
        .chart_by_label(r_label)
        .ok_or_else(|| crate::Error::Coverage(format!("no right chart `{r_label}`")))?;
    Correspondence::pair_from_strs(left, right, li, ri, fwd, bwd)
}

fn run_iso(
    notes: &mut Vec<String>,
    tag: &str,
    left: &Atlas,
    right: &Atlas,
    pairs: Vec<ChartPairing>,
) -> Result<()> {
    let rep = check_iso(left, right, &Correspondence { pairs })?;
    for n in rep.notes {
        notes.push(format!("{tag}: {n}"));
    }
    Ok(())
}

fn plane() -> Result<Atlas> {
    affine_space(2)
}

fn id_subtract(params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let x = plane()?;
    let ring = x.chart(0).ring.clone();
    let r = parse_polynomial(&ring, params.get("r").map(|s| s.as_str()).unwrap_or("x"))?;
    let g = parse_polynomial(&ring, params.get("g").map(|s| s.as_str()).unwrap_or("y"))?;
    let d = Divisor::new(&x, vec![r.clone()])?;

    // principal fixture: Y = (r·g)
    let y = ClosedSubscheme::new(&x, vec![Ideal::new(&ring, vec![&r * &g])?])?;
    let ym = y.subtract_divisor(&d)?;
    note(
        &mut notes,
        !ym.same_subscheme(&ClosedSubscheme::new(&x, vec![Ideal::new(&ring, vec![g.clone()])?])?)?,
        "Y − D is not (g)",
    );
    // adding D back recovers Y (the adjunction on divisors)
    note(&mut notes, !ym.add_closed(d.subscheme())?.same_subscheme(&y)?, "(Y−D)+D ≠ Y");

    let b1 = blow_up(&x, &y)?;
    let b2 = blow_up(&x, &ym)?;
    run_iso(&mut notes, "principal", &b1.result, &b2.result, {
        Correspondence::identity(&b1.result, &b2.result)?.pairs
    })?;
    exceptional_decomposition(&mut notes, "principal", &b1, &b2, &d)?;

    // two-generator fixture: Y₂ = (x·y, x²) with D = (x)
    let y2 = ClosedSubscheme::from_strs(&x, &[&["x*y", "x^2"]])?;
    let dx = Divisor::from_strs(&x, &["x"])?;
    let y2m = y2.subtract_divisor(&dx)?;
    note(
        &mut notes,
        !y2m.same_subscheme(&ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?)?,
        "Y₂ − D is not the origin",
    );
    let c1 = blow_up(&x, &y2)?;
    let c2 = blow_up(&x, &y2m)?;
    run_iso(&mut notes, "two-generator", &c1.result, &c2.result, {
        Correspondence::identity(&c1.result, &c2.result)?.pairs
    })?;
    exceptional_decomposition(&mut notes, "two-generator", &c1, &c2, &dx)?;
    Ok(notes)
}

/// `E_Y = E_{Y−D} + D|` as chartwise ideal equalities, using the identity
/// correspondence between the two blowups; `D|` is the total pullback of
/// the divisor along the projection.
fn exceptional_decomposition(
    notes: &mut Vec<String>,
    tag: &str,
    b_y: &crate::blowup::BlowupResult,
    b_ym: &crate::blowup::BlowupResult,
    d: &Divisor,
) -> Result<()> {
    for (i, chart) in b_y.result.charts().iter().enumerate() {
        let left = Ideal::new(&chart.ring, vec![b_y.exceptional.gen(i).clone()])?
            .sum(&chart.relations)?;
        let target = &b_ym.result.chart(i);
        let d_pulled = d.gen(b_ym.source_chart[i]).embed_by_name(&target.ring)?;
        let prod = b_ym.exceptional.gen(i) * &d_pulled;
        let right = Ideal::new(&target.ring, vec![prod])?.sum(&target.relations)?;
        if !left.equals(&right)? {
            notes.push(format!("{tag}: E_Y ≠ E_(Y−D)+D| on chart {}", chart.label));
        }
    }
    Ok(())
}

fn id_totaltrans(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let x = plane()?;
    let z = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
    let y = ClosedSubscheme::from_strs(&x, &[&["y"]])?;

    let b = blow_up(&x, &z)?;
    let s_sat = strict_transform(&b, &y, StrictMode::Saturate)?;
    let s_q = strict_transform(&b, &y, StrictMode::QuotientOnce)?;
    note(&mut notes, !s_sat.same_subscheme(&s_q)?, "strict-transform modes disagree");

    // Bl_Z Y, computed on Y's own atlas
    let y_atlas = y.as_atlas()?;
    let z_in_y = ClosedSubscheme::from_strs(&y_atlas, &[&["x", "y"]])?;
    let by = blow_up(&y_atlas, &z_in_y)?;

    // the strict transform, as an atlas, against Bl_Z Y
    let s_atlas = s_sat.as_atlas()?;
    note(
        &mut notes,
        s_atlas.charts().len() != 1 || by.result.charts().len() != 1,
        "unexpected chart counts",
    );
    if notes.is_empty() {
        let p = pair(
            &s_atlas,
            &by.result,
            "A:1",
            "A",
            &["x", "y", "0"],
            &["x", "y"],
        )?;
        run_iso(&mut notes, "Bl_Z Y", &s_atlas, &by.result, vec![p])?;

        // E_Z Y = E_{E_Z X}(Y|): the restricted exceptional corresponds to
        // the exceptional of Bl_Z Y
        let s_chart = s_atlas.chart(0);
        let e_meet = Ideal::new(
            &s_chart.ring,
            vec![b.exceptional.gen(b.result.chart_by_label("A:1").unwrap()).clone()],
        )?
        .sum(&s_chart.relations)?;
        let back = RingMap::new(
            &by.result.chart(0).ring,
            &s_chart.ring,
            vec![
                parse_polynomial(&s_chart.ring, "x")?,
                parse_polynomial(&s_chart.ring, "y")?,
            ],
            Some(s_chart.relations.clone()),
        )?;
        let pulled = back
            .pullback_ideal(&Ideal::new(
                &by.result.chart(0).ring,
                vec![by.exceptional.gen(0).clone()],
            )?)?
            .sum(&s_chart.relations)?;
        note(&mut notes, !e_meet.equals(&pulled)?, "E_Z Y does not match E_{E_Z X}(Y|)");
    }
    Ok(notes)
}

fn axes_diagram() -> Result<PosetDiagram> {
    let x = plane()?;
    let l = Lattice::from_covers(vec!["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])?;
    let assign = vec![
        ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?,
        ClosedSubscheme::from_strs(&x, &[&["y"]])?,
        ClosedSubscheme::from_strs(&x, &[&["x"]])?,
        ClosedSubscheme::whole(&x),
    ];
    PosetDiagram::new(l, &x, assign)
}

fn two_line_family_diagram() -> Result<PosetDiagram> {
    let a1 = affine_space(1)?;
    let y = ClosedSubscheme::from_strs(&a1, &[&["x"]])?;
    let (d, _, _) = multiple_deformation_diagram(&[y.clone(), y])?;
    Ok(d)
}

fn id_poset_e(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for (tag, d) in [("axes", axes_diagram()?), ("family", two_line_family_diagram()?)] {
        note(&mut notes, !excessive_check_lattice(&d)?, format!("{tag}: not excessive"));
        let r = poset_blow_up(&d)?;
        for n in verify_poset_products(&d, &r)? {
            notes.push(format!("{tag}: {n}"));
        }
    }
    Ok(notes)
}

fn id_poset_disj(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for (tag, d) in [("axes", axes_diagram()?), ("family", two_line_family_diagram()?)] {
        let r = poset_blow_up(&d)?;
        for n in verify_poset_disjointness(&d, &r)? {
            notes.push(format!("{tag}: {n}"));
        }
    }
    Ok(notes)
}

fn id_pushout8(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let x = plane()?;
    let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
    let z = ClosedSubscheme::from_strs(&x, &[&["y"]])?;
    let y = ClosedSubscheme::from_strs(&x, &[&["x"]])?;
    let sq = ExcessiveSquare::new(&x, w, z, y)?;
    let rz = pushout_blow_up(&sq, PushoutOrder::ZFirst)?;
    let ry = pushout_blow_up(&sq, PushoutOrder::YFirst)?;
    for n in rz.verify_cube_conditions(&sq)? {
        notes.push(format!("z-first: {n}"));
    }
    for n in ry.verify_cube_conditions(&sq)? {
        notes.push(format!("y-first: {n}"));
    }
    note(
        &mut notes,
        rz.incidence()? != ry.incidence()?,
        "incidence data differs between recipe orders",
    );
    run_iso(&mut notes, "orders", &rz.atlas, &ry.atlas, {
        Correspondence::identity(&rz.atlas, &ry.atlas)?.pairs
    })?;
    Ok(notes)
}

fn id_bl0v(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();

    // E = O² over the point: Bl_0 A² against V_{P¹}(O(1))
    let v2 = bundle_total(&TwistedSum::trivial_over_point(2))?;
    let lhs = blow_up(&v2.atlas, &v2.zero_section()?)?;
    let rhs = bundle_total(&TwistedSum::over_proj(1, &[1]))?;
    let pairs = vec![
        pair(&lhs.result, &rhs.atlas, "pt:0", "U1", &["s*v0", "v0", "s"], &["u1", "v1"])?,
        pair(&lhs.result, &rhs.atlas, "pt:1", "U0", &["v0", "t*v0", "t"], &["u0", "v0"])?,
    ];
    run_iso(&mut notes, "rank 2", &lhs.result, &rhs.atlas, pairs)?;

    // E = O over the point: Bl_0 A¹ = A¹ = V_{P⁰}(O(1))
    let v1 = bundle_total(&TwistedSum::trivial_over_point(1))?;
    let lhs1 = blow_up(&v1.atlas, &v1.zero_section()?)?;
    let rhs1 = bundle_total(&TwistedSum::trivial_over_point(1))?;
    run_iso(&mut notes, "rank 1", &lhs1.result, &rhs1.atlas, {
        Correspondence::identity(&lhs1.result, &rhs1.atlas)?.pairs
    })?;
    Ok(notes)
}

fn id_bl0p(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();

    // E = O²: Bl_{[0:0:1]} P² against P_{P¹}(O(1) ⊕ O)
    let p3 = bundle_proj(&TwistedSum::trivial_over_point(3))?;
    let center = p3.sub_bundle(&[2])?;
    let lhs = blow_up(&p3.atlas, &center)?;
    let rhs = bundle_proj(&TwistedSum::new(
        BaseSpace::proj(1),
        vec![vec![1], vec![0]],
    )?)?;
    let pairs = vec![
        pair(&lhs.result, &rhs.atlas, "pt|P0", "U0|P0", &["t", "w1"], &["w1", "w2"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P1", "U1|P0", &["s", "w1"], &["w0", "w2"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P2:0", "U1|P1", &["s*w0", "w0", "s"], &["u1", "w1"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P2:1", "U0|P1", &["w0", "t*w0", "t"], &["u0", "w0"])?,
    ];
    run_iso(&mut notes, "rank 2", &lhs.result, &rhs.atlas, pairs)?;

    // E = O: Bl at a point of P¹ is P¹ again
    let p2 = bundle_proj(&TwistedSum::trivial_over_point(2))?;
    let lhs1 = blow_up(&p2.atlas, &p2.sub_bundle(&[1])?)?;
    let rhs1 = bundle_proj(&TwistedSum::trivial_over_point(2))?;
    run_iso(&mut notes, "rank 1", &lhs1.result, &rhs1.atlas, {
        Correspondence::identity(&lhs1.result, &rhs1.atlas)?.pairs
    })?;
    Ok(notes)
}

fn id_compl(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();

    // E = O²: P² minus the O-point against V_{P¹}(O(-1))
    let p3 = bundle_proj(&TwistedSum::trivial_over_point(3))?;
    let lhs = open_complement_family(&p3.atlas, &p3.sub_bundle(&[2])?)?;
    let rhs = bundle_total(&TwistedSum::over_proj(1, &[-1]))?;
    let pairs = vec![
        pair(&lhs, &rhs.atlas, "pt|P0", "U0", &["t", "v0"], &["w1", "w2"])?,
        pair(&lhs, &rhs.atlas, "pt|P1", "U1", &["s", "v0"], &["w0", "w2"])?,
    ];
    run_iso(&mut notes, "rank 2", &lhs, &rhs.atlas, pairs)?;

    // E = O: P¹ minus a point is the affine chart
    let p2 = bundle_proj(&TwistedSum::trivial_over_point(2))?;
    let lhs1 = open_complement_family(&p2.atlas, &p2.sub_bundle(&[1])?)?;
    let rhs1 = bundle_total(&TwistedSum::trivial_over_point(1))?;
    let pairs = vec![pair(&lhs1, &rhs1.atlas, "pt|P0", "pt", &["v0"], &["w1"])?];
    run_iso(&mut notes, "rank 1", &lhs1, &rhs1.atlas, pairs)?;
    Ok(notes)
}

fn id_blpe(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();

    // E = O, F = O²: Bl_{[1:0:0]} P² against P_{P¹}(O(-1) ⊕ O)
    let p3 = bundle_proj(&TwistedSum::trivial_over_point(3))?;
    let lhs = blow_up(&p3.atlas, &p3.sub_bundle(&[0])?)?;
    let rhs = bundle_proj(&TwistedSum::new(
        BaseSpace::proj(1),
        vec![vec![-1], vec![0]],
    )?)?;
    let pairs = vec![
        pair(&lhs.result, &rhs.atlas, "pt|P1", "U0|P1", &["w0", "t"], &["w2", "w0"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P2", "U1|P1", &["w0", "s"], &["w1", "w0"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P0:0", "U1|P0", &["s*w1", "w1", "s"], &["u1", "w2"])?,
        pair(&lhs.result, &rhs.atlas, "pt|P0:1", "U0|P0", &["w1", "t*w1", "t"], &["u0", "w1"])?,
    ];
    run_iso(&mut notes, "main", &lhs.result, &rhs.atlas, pairs)?;

    // E = O², F = O: the center is a divisor, both sides are P²
    let lhs1 = blow_up(&p3.atlas, &p3.sub_bundle(&[0, 1])?)?;
    let rhs1 = bundle_proj(&TwistedSum::trivial_over_point(3))?;
    run_iso(&mut notes, "divisor", &lhs1.result, &rhs1.atlas, {
        Correspondence::identity(&lhs1.result, &rhs1.atlas)?.pairs
    })?;
    Ok(notes)
}

fn id_vt_split(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for rank in [1usize, 2] {
        let tag = format!("rank {rank}");
        let v = bundle_total(&TwistedSum::trivial_over_point(rank))?;
        let bs = BaseSpace::proj(1);
        let p1 = bs.atlas()?;
        let zero_f = bs.proj_point_zero(&p1, 0)?;
        let prod = product(&v.atlas, &p1)?;
        let center = prod.product_subscheme(&v.zero_section()?, &zero_f)?;
        let dom_b = blow_up(&prod.atlas, &center)?;
        let dom = dom_b.result.clone();
        let cod = bundle_proj(&TwistedSum::trivial_over_point(rank + 1))?;

        // comaps per chart: (v, t) ↦ [v : t]
        let mut assignments = Vec::new();
        let comap = |dl: &str, cl: &str, imgs: &[&str]| -> Result<(usize, usize, RingMap)> {
            let di = dom.chart_by_label(dl).unwrap();
            let ci = cod.atlas.chart_by_label(cl).unwrap();
            let dchart = dom.chart(di);
            let images = imgs
                .iter()
                .map(|s| parse_polynomial(&dchart.ring, s))
                .collect::<Result<Vec<_>>>()?;
            Ok((
                di,
                ci,
                RingMap::new(
                    &cod.atlas.chart(ci).ring,
                    &dchart.ring,
                    images,
                    Some(dchart.relations.clone()),
                )?,
            ))
        };
        if rank == 1 {
            // charts pt*U0:0 (exc t, u1 = v0/t), pt*U0:1 (exc v0, u0 = t/v0), pt*U1
            assignments.push(comap("pt*U0:0", "pt|P1", &["u1"])?); // w0 ↦ v0/t
            assignments.push(comap("pt*U0:1", "pt|P0", &["u0"])?); // w1 ↦ t/v0
            assignments.push(comap("pt*U1", "pt|P1", &["v0*s"])?); // [v0 : 1/s] = [v0·s : 1]
        } else {
            assignments.push(comap("pt*U0:0", "pt|P2", &["u2", "u1"])?);
            assignments.push(comap("pt*U0:1", "pt|P1", &["u2", "u0"])?);
            assignments.push(comap("pt*U0:2", "pt|P0", &["u1", "u0"])?);
            assignments.push(comap("pt*U1", "pt|P2", &["v0*s", "v1*s"])?);
        }
        let data = MorphismData { assignments };
        let rep = check_morphism(&dom, &cod.atlas, &data)?;
        for n in rep.notes {
            notes.push(format!("{tag}: {n}"));
        }

        // Bl_{(0,0)}(V(E)×0) is carried into P(E)
        let x_zero = {
            let mut gens = Vec::new();
            for (ci, &(_, r)) in prod.pairs.iter().enumerate() {
                let ring = &prod.atlas.chart(ci).ring;
                if r == 0 {
                    gens.push(prod.inject_right(ci, &crate::polycore::Polynomial::var(&p1.chart(0).ring, 0)));
                } else {
                    gens.push(crate::polycore::Polynomial::one(ring));
                }
            }
            Divisor::new(&prod.atlas, gens)?
        };
        let strict_zero = divisor_transform(&dom_b, &x_zero)?;
        let pe = cod.sub_bundle(&(0..rank).collect::<Vec<_>>())?;
        for (di, ci, m) in &data.assignments {
            let dchart = dom.chart(*di);
            let pulled = m.pullback_ideal(pe.ideal(*ci))?.sum(&dchart.relations)?;
            let strict = Ideal::new(&dchart.ring, vec![strict_zero.gen(*di).clone()])?
                .sum(&dchart.relations)?;
            if !pulled.equals(&strict)? {
                notes.push(format!(
                    "{tag}: P(E) does not pull back to the strict transform on {}",
                    dchart.label
                ));
            }
        }
    }
    Ok(notes)
}

fn id_deform(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();

    // Y = 0 ⊂ A¹: E'{1} is P(N ⊕ O) = P¹
    {
        let a1 = affine_space(1)?;
        let y = ClosedSubscheme::from_strs(&a1, &[&["x"]])?;
        let d = deformation_space(&y)?;
        let e = d.labeled["E'{1}"].as_atlas()?;
        let pn = bundle_proj(&TwistedSum::trivial_over_point(2))?;
        let pairs = vec![
            pair(&e, &pn.atlas, "A*U0:0", "pt|P1", &["0", "0", "w0"], &["u1"])?,
            pair(&e, &pn.atlas, "A*U0:1", "pt|P0", &["0", "0", "w1"], &["u0"])?,
        ];
        run_iso(&mut notes, "line: exceptional", &e, &pn.atlas, pairs)?;

        // residual piece: Bl_0 A¹ = A¹
        let r = d.labeled["E'{}"].as_atlas()?;
        let bl = blow_up(&a1, &y)?;
        let pairs = vec![pair(&r, &bl.result, "A*U0:1", "A", &["x", "0", "0"], &["x"])?];
        run_iso(&mut notes, "line: residual", &r, &bl.result, pairs)?;
        for n in d.verify_section_disjoint()? {
            notes.push(format!("line: {n}"));
        }
    }

    // Y = origin ⊂ A²: E'{1} is P(N ⊕ O) = P²
    {
        let a2 = plane()?;
        let y = ClosedSubscheme::from_strs(&a2, &[&["x", "y"]])?;
        let d = deformation_space(&y)?;
        let e = d.labeled["E'{1}"].as_atlas()?;
        let pn = bundle_proj(&TwistedSum::trivial_over_point(3))?;
        let pairs = vec![
            pair(&e, &pn.atlas, "A*U0:0", "pt|P2", &["0", "0", "0", "w1", "w0"], &["u2", "u1"])?,
            pair(&e, &pn.atlas, "A*U0:1", "pt|P1", &["0", "0", "0", "w2", "w0"], &["u2", "u0"])?,
            pair(&e, &pn.atlas, "A*U0:2", "pt|P0", &["0", "0", "0", "w2", "w1"], &["u1", "u0"])?,
        ];
        run_iso(&mut notes, "plane: exceptional", &e, &pn.atlas, pairs)?;

        // residual piece: Bl_0 A²
        let r = d.labeled["E'{}"].as_atlas()?;
        let bl = blow_up(&a2, &y)?;
        let pairs = vec![
            pair(&r, &bl.result, "A*U0:1", "A:0", &["x", "y", "0", "0", "u1"], &["x", "y", "u2"])?,
            pair(&r, &bl.result, "A*U0:2", "A:1", &["x", "y", "0", "0", "u0"], &["x", "y", "u1"])?,
        ];
        run_iso(&mut notes, "plane: residual", &r, &bl.result, pairs)?;

        // the two labeled divisors meet along P(N) = E_Y X
        let meet = d.labeled["E'{1}"]
            .subscheme()
            .intersect(d.labeled["E'{}"].subscheme())?;
        note(&mut notes, meet.is_empty(), "plane: E'{1} and E'{} do not meet");
        for n in d.verify_section_disjoint()? {
            notes.push(format!("plane: {n}"));
        }
    }
    Ok(notes)
}

fn id_composite_empty(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let x = plane()?;
    let z = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
    let y = ClosedSubscheme::from_strs(&x, &[&["y"]])?;
    let c = composite_deformation_space(&z, &y)?;
    notes.extend(c.verify_empty_boundaries()?);
    for n in c.d.verify_section_disjoint()? {
        notes.push(format!("D: {n}"));
    }

    // the degenerate middle-column facts: blowing up Z×0 inside Z×0 gives
    // the empty atlas, and inside Z×P¹ the identity
    let z_atlas = z.as_atlas()?;
    let bs = BaseSpace::proj(1);
    let p1 = bs.atlas()?;
    let zero_f = bs.proj_point_zero(&p1, 0)?;
    let prod = product(&z_atlas, &p1)?;
    let z_zero = prod.product_subscheme(&ClosedSubscheme::whole(&z_atlas), &zero_f)?;
    let ident = blow_up(&prod.atlas, &z_zero)?;
    run_iso(&mut notes, "Bl_{Z×0}(Z×P¹)", &ident.result, &prod.atlas, {
        Correspondence::identity(&ident.result, &prod.atlas)?.pairs
    })?;
    let z_zero_atlas = z_zero.as_atlas()?;
    let empty = blow_up(&z_zero_atlas, &ClosedSubscheme::whole(&z_zero_atlas))?;
    note(&mut notes, !empty.result.charts().is_empty(), "Bl_{Z×0}(Z×0) is not empty");
    Ok(notes)
}

fn id_conormal(_params: &Params) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let x = plane()?;

    // twisted fixture: W = Y = origin, Z = the y-axis
    {
        let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
        let z = ClosedSubscheme::from_strs(&x, &[&["x"]])?;
        let y = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
        let sq = ExcessiveSquare::new(&x, w, z.clone(), y.clone())?;
        let b = blow_up(&x, &y)?;
        let sc = conormal_of_strict_transform(&sq, &b)?;
        for (i, chart) in b.result.charts().iter().enumerate() {
            if sc.strict.ideal(i).is_unit() {
                continue;
            }
            if sc.per_chart[i].free_rank() != Some(1) {
                notes.push(format!("twisted: rank ≠ 1 on {}", chart.label));
            }
            // the exceptional twist is visible: the pulled-back generator
            // of I_Z factors through the exceptional exactly once
            if sc.twist_multiplicities[i] != vec![1] {
                notes.push(format!("twisted: multiplicity ≠ 1 on {}", chart.label));
            }
        }
    }

    // untwisted fixture: W = origin ⊂ Y = the x-axis, Z = the y-axis
    {
        let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]])?;
        let z = ClosedSubscheme::from_strs(&x, &[&["x"]])?;
        let y = ClosedSubscheme::from_strs(&x, &[&["y"]])?;
        let sq = ExcessiveSquare::new(&x, w, z, y.clone())?;
        let b = blow_up(&x, &y)?;
        let sc = conormal_of_strict_transform(&sq, &b)?;
        for (i, chart) in b.result.charts().iter().enumerate() {
            if sc.strict.ideal(i).is_unit() {
                continue;
            }
            if sc.per_chart[i].free_rank() != Some(1) {
                notes.push(format!("divisor-blowup: rank ≠ 1 on {}", chart.label));
            }
            if sc.twist_multiplicities[i] != vec![0] {
                notes.push(format!("divisor-blowup: unexpected twist on {}", chart.label));
            }
        }
    }

    // W = ∅: a center disjoint from Z, untwisted conormal
    {
        let w = ClosedSubscheme::empty(&x);
        let z = ClosedSubscheme::from_strs(&x, &[&["x"]])?;
        let y = ClosedSubscheme::from_strs(&x, &[&["x - 1", "y"]])?;
        let sq = ExcessiveSquare::new(&x, w, z, y.clone())?;
        let b = blow_up(&x, &y)?;
        let sc = conormal_of_strict_transform(&sq, &b)?;
        for (i, chart) in b.result.charts().iter().enumerate() {
            if sc.strict.ideal(i).is_unit() {
                continue;
            }
            if sc.per_chart[i].free_rank() != Some(1) {
                notes.push(format!("disjoint: rank ≠ 1 on {}", chart.label));
            }
            if sc.twist_multiplicities[i] != vec![0] {
                notes.push(format!("disjoint: unexpected twist on {}", chart.label));
            }
        }
    }
    Ok(notes)
}
