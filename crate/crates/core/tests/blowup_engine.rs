//! Hand-computed blowup fixtures: charts, exceptional divisors, strict
//! transforms, and the universal pullback equality.

use blowup_calc::blowup::{
    blow_up, divisor_transform, excessive_check_square, poset_blow_up, pushout_blow_up,
    strict_transform, total_transform, verify_poset_structure, ExcessiveSquare, Lattice,
    PosetDiagram, PushoutOrder, StrictMode,
};
use blowup_calc::geom::{
    affine_space, check_iso, ClosedSubscheme, Correspondence, Divisor,
};
use blowup_calc::idealcalc::{ideal_from_strs, is_nonzerodivisor, Ideal};
use blowup_calc::polycore::parse_polynomial;

fn plane() -> blowup_calc::geom::Atlas {
    affine_space(2).unwrap()
}

/// Universal property: the pullback of the center ideal equals the
/// exceptional ideal in every chart, and the exceptional generator is a
/// nonzerodivisor.
fn assert_universal(b: &blowup_calc::blowup::BlowupResult) {
    let total = total_transform(b, &b.center).unwrap();
    for (rc, chart) in b.result.charts().iter().enumerate() {
        let exc = Ideal::new(&chart.ring, vec![b.exceptional.gen(rc).clone()])
            .unwrap()
            .sum(&chart.relations)
            .unwrap();
        assert!(
            total.ideal(rc).equals(&exc).unwrap(),
            "universal equality fails on chart {}",
            chart.label
        );
        assert!(is_nonzerodivisor(b.exceptional.gen(rc), &chart.relations).unwrap());
    }
}

#[test]
fn blowup_of_the_origin_in_the_plane() {
    let x = plane();
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    assert_eq!(b.result.charts().len(), 2);
    // generators ascend as [y, x]: chart 0 has exceptional y, chart 1 has x
    // generator list ascends as [y, x]: chart 0 is the y-chart (x = u1·y),
    // chart 1 is the x-chart (y = u0·x)
    let c0 = b.result.chart(0);
    let c1 = b.result.chart(1);
    assert_eq!(c0.relations.serialized(), vec!["y*u1 - x".to_string()]);
    assert_eq!(c1.relations.serialized(), vec!["x*u0 - y".to_string()]);
    assert_eq!(b.exceptional.gen(0).to_string(), "y");
    assert_eq!(b.exceptional.gen(1).to_string(), "x");
    assert!(b.result.verify_gluings().unwrap().is_empty());
    assert_universal(&b);
}

#[test]
fn blowup_along_a_divisor_is_the_identity() {
    let x = plane();
    let d = ClosedSubscheme::from_strs(&x, &[&["x*y"]]).unwrap();
    let b = blow_up(&x, &d).unwrap();
    assert_eq!(b.result.charts().len(), 1);
    assert_eq!(*b.result.chart(0).ring, *x.chart(0).ring);
    assert!(b.result.chart(0).relations.is_zero());
    assert_eq!(b.exceptional.gen(0).to_string(), "x*y");
    let corr = Correspondence::identity(&b.result, &x).unwrap();
    assert!(check_iso(&b.result, &x, &corr).unwrap().ok);
    assert_universal(&b);
}

#[test]
fn blowup_of_the_whole_space_is_empty() {
    let x = plane();
    let whole = ClosedSubscheme::whole(&x);
    let b = blow_up(&x, &whole).unwrap();
    assert!(b.result.charts().is_empty());
}

#[test]
fn blowup_along_the_empty_center_is_the_identity_with_empty_exceptional() {
    let x = plane();
    let empty = ClosedSubscheme::empty(&x);
    let b = blow_up(&x, &empty).unwrap();
    assert_eq!(b.result.charts().len(), 1);
    assert!(b.result.chart(0).relations.is_zero());
    assert!(b.exceptional.is_empty());
}

#[test]
fn cusp_strict_transform_is_smooth() {
    // y^2 - x^3 under Bl_0 A^2: on the chart with y = u1·x the strict
    // transform is u1^2 - x
    let x = plane();
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let cusp = ClosedSubscheme::from_strs(&x, &[&["y^2 - x^3"]]).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    let strict = strict_transform(&b, &cusp, StrictMode::Saturate).unwrap();
    // chart 0: vars (x, y, u1) with y = x·u1, exceptional y... chart 0 has
    // exceptional y and fiber u1 with x*u1 = y? No: chart 0 is the chart of
    // generator y with u1·y = x.
    // Identify the chart whose exceptional is x (there y = u0·x):
    let cx = (0..2).find(|&i| b.exceptional.gen(i).to_string() == "x").unwrap();
    let expect = ideal_from_strs(&b.result.chart(cx).ring, &["u0^2 - x", "y - x*u0"]).unwrap();
    assert!(strict.ideal(cx).equals(&expect).unwrap());
    // smoothness in that chart: Jacobian ideal of the curve + curve = unit.
    // Generators u0^2 - x, y - x*u0 in variables (x,y,u0):
    // the Jacobian 2x2 minors include the unit -1·1... check directly that
    // adding the partial derivatives' determinant yields the unit ideal.
    // d(u0^2 - x)/dx = -1 is already a unit: the strict transform is smooth.
    let jac = ideal_from_strs(
        &b.result.chart(cx).ring,
        &["1"], // -1 times the minor from (d/dx, d/dy) = det [[-1, 0], [-u0, 1]] = -1
    )
    .unwrap();
    let sum = strict.ideal(cx).sum(&jac).unwrap();
    assert!(sum.is_unit());
    // the cusp meets the center with multiplicity two, so the single
    // divisor subtraction differs from the full saturation here: it
    // removes one exceptional copy only
    let strict2 = strict_transform(&b, &cusp, StrictMode::QuotientOnce).unwrap();
    assert!(!strict.same_subscheme(&strict2).unwrap());
    let once = ideal_from_strs(
        &b.result.chart(cx).ring,
        &["x*u0^2 - x^2", "y - x*u0"],
    )
    .unwrap();
    assert!(strict2.ideal(cx).equals(&once).unwrap());
}

#[test]
fn strict_transform_modes_agree_at_multiplicity_one() {
    // a smooth curve through the origin with multiplicity one
    let x = plane();
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    for curve in ["y - x^2", "y", "y + x", "y - x^3 + x"] {
        let c = ClosedSubscheme::from_strs(&x, &[&[curve]]).unwrap();
        let s1 = strict_transform(&b, &c, StrictMode::Saturate).unwrap();
        let s2 = strict_transform(&b, &c, StrictMode::QuotientOnce).unwrap();
        assert!(s1.same_subscheme(&s2).unwrap(), "modes disagree for {curve}");
    }
}

#[test]
fn strict_transform_of_the_center_is_empty() {
    let x = plane();
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    let total = total_transform(&b, &origin).unwrap();
    // the total transform is exactly the exceptional
    assert!(total.same_subscheme(b.exceptional.subscheme()).unwrap());
    let strict = strict_transform(&b, &origin, StrictMode::Saturate).unwrap();
    assert!(strict.is_empty());
}

#[test]
fn strict_transform_of_a_divisor_center_is_empty() {
    let x = plane();
    let d = ClosedSubscheme::from_strs(&x, &[&["x"]]).unwrap();
    let b = blow_up(&x, &d).unwrap();
    let strict = strict_transform(&b, &d, StrictMode::Saturate).unwrap();
    assert!(strict.is_empty());
    let strict_q = strict_transform(&b, &d, StrictMode::QuotientOnce).unwrap();
    assert!(strict_q.is_empty());
}

#[test]
fn node_blowup_separates_branches() {
    // Bl of the node xy = 0 along the origin: the chart over x has the
    // x-branch only
    let x = plane();
    let node_ring =
        blowup_calc::polycore::PolyRing::new(vec!["x", "y"]).unwrap();
    let _ = node_ring;
    let node = {
        let chart = blowup_calc::geom::Chart::new(
            "N",
            &x.chart(0).ring,
            ideal_from_strs(&x.chart(0).ring, &["x*y"]).unwrap(),
        )
        .unwrap();
        blowup_calc::geom::Atlas::single(chart)
    };
    let origin = ClosedSubscheme::from_strs(&node, &[&["x", "y"]]).unwrap();
    let b = blow_up(&node, &origin).unwrap();
    assert_eq!(b.result.charts().len(), 2);
    let cx = (0..2).find(|&i| b.exceptional.gen(i).to_string() == "x").unwrap();
    // in that chart the relations force u0 = 0 (the other branch is gone)
    let chart = b.result.chart(cx);
    assert!(chart.relations.contains(&parse_polynomial(&chart.ring, "u0").unwrap()).unwrap());
    assert_universal(&b);
}

#[test]
fn two_axes_poset_blowup() {
    // lattice 0 < a, b < 1 over A^2: origin, the two axes, the ambient
    let x = plane();
    let l = Lattice::from_covers(vec!["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
        .unwrap();
    let assign = vec![
        ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x, &[&["x"]]).unwrap(),
        ClosedSubscheme::whole(&x),
    ];
    let d = PosetDiagram::new(l, &x, assign).unwrap();
    let r = poset_blow_up(&d).unwrap();
    assert_eq!(r.order_used, vec![0, 1, 2]);
    assert_eq!(r.atlas.charts().len(), 2);
    assert!(verify_poset_structure(&d, &r).unwrap().is_empty());
    // disjointness: the two axis exceptionals never meet
    let ea = r.strict_exceptional(1);
    let eb = r.strict_exceptional(2);
    let meet = ea.subscheme().intersect(eb.subscheme()).unwrap();
    assert!(meet.is_empty());
}

#[test]
fn singleton_poset_blowup_is_a_plain_blowup() {
    let x = plane();
    let l = Lattice::from_covers(vec!["0", "1"], &[(0, 1)]).unwrap();
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let d = PosetDiagram::new(l, &x, vec![origin.clone(), ClosedSubscheme::whole(&x)]).unwrap();
    let r = poset_blow_up(&d).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    assert_eq!(r.atlas.charts().len(), b.result.charts().len());
    for (i, c) in r.atlas.charts().iter().enumerate() {
        assert_eq!(c.label, b.result.chart(i).label);
        assert!(c.relations.equals(&b.result.chart(i).relations).unwrap());
        assert_eq!(r.strict_exceptional(0).gen(i), b.exceptional.gen(i));
    }
}

#[test]
fn poset_blowup_with_divisor_member() {
    // lattice with Y_a itself a divisor: the tower still passes the
    // structure checks
    let x = plane();
    let l = Lattice::from_covers(vec!["0", "a", "1"], &[(0, 1), (1, 2)]).unwrap();
    let assign = vec![
        ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap(),
        ClosedSubscheme::whole(&x),
    ];
    let d = PosetDiagram::new(l, &x, assign).unwrap();
    let r = poset_blow_up(&d).unwrap();
    assert!(verify_poset_structure(&d, &r).unwrap().is_empty());
}

#[test]
fn pushout_blowup_of_transverse_axes() {
    // W = origin, Z = x-axis (y=0), Y = y-axis (x=0) in A^2
    let x = plane();
    let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let z = ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap();
    let y = ClosedSubscheme::from_strs(&x, &[&["x"]]).unwrap();
    let sq = ExcessiveSquare::new(&x, w, z, y).unwrap();
    assert!(excessive_check_square(&sq).unwrap());

    let rz = pushout_blow_up(&sq, PushoutOrder::ZFirst).unwrap();
    let ry = pushout_blow_up(&sq, PushoutOrder::YFirst).unwrap();
    assert!(rz.verify_cube_conditions(&sq).unwrap().is_empty());
    assert!(ry.verify_cube_conditions(&sq).unwrap().is_empty());
    // both orders end on the plane itself
    assert_eq!(rz.atlas.charts().len(), 1);
    assert_eq!(ry.atlas.charts().len(), 1);
    let corr = Correspondence::identity(&rz.atlas, &ry.atlas).unwrap();
    assert!(check_iso(&rz.atlas, &ry.atlas, &corr).unwrap().ok);
    // incidence data agrees across orders
    assert_eq!(rz.incidence().unwrap(), ry.incidence().unwrap());
    // E'W is empty: the third center is already exceptional
    assert!(rz.e_w.is_empty());
    assert_eq!(rz.e_y.gen(0).to_string(), "x");
    assert_eq!(rz.e_z.gen(0).to_string(), "y");
}

#[test]
fn pushout_blowup_degenerate_w_equals_z() {
    // W = Z = origin inside Y = x-axis: E'Z vanishes and the cube
    // conditions still hold
    let x = plane();
    let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let z = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let y = ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap();
    let sq = ExcessiveSquare::new(&x, w, z, y).unwrap();
    let r = pushout_blow_up(&sq, PushoutOrder::ZFirst).unwrap();
    assert!(r.verify_cube_conditions(&sq).unwrap().is_empty());
    assert!(r.e_z.is_empty());
    assert!(!r.e_y.is_empty());
    assert!(!r.e_w.is_empty());
}

#[test]
fn pushout_blowup_degenerate_w_equals_y() {
    // W = Y ⊆ Z: collapsing centers, invariants still pass
    let x = plane();
    let w = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let z = ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap();
    let y = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let sq = ExcessiveSquare::new(&x, w, z, y).unwrap();
    let r = pushout_blow_up(&sq, PushoutOrder::ZFirst).unwrap();
    assert!(r.verify_cube_conditions(&sq).unwrap().is_empty());
}

#[test]
fn divisor_transforms_through_towers() {
    // strict transform of the divisor x^2 y^3 under subtracting (x y):
    // quotient then product round-trips
    let x = plane();
    let big = ClosedSubscheme::from_strs(&x, &[&["x^2*y^3"]]).unwrap();
    let d = Divisor::from_strs(&x, &["x*y"]).unwrap();
    let diff = big.subtract_divisor(&d).unwrap();
    let expect = ClosedSubscheme::from_strs(&x, &[&["x*y^2"]]).unwrap();
    assert!(diff.same_subscheme(&expect).unwrap());
    let back = diff.add_closed(d.subscheme()).unwrap();
    assert!(back.same_subscheme(&big).unwrap());

    // divisor strict transform through the origin blowup divides out the
    // exceptional multiplicity
    let origin = ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap();
    let b = blow_up(&x, &origin).unwrap();
    let dd = Divisor::from_strs(&x, &["x*y"]).unwrap();
    let t = divisor_transform(&b, &dd).unwrap();
    for (i, chart) in b.result.charts().iter().enumerate() {
        // pullback x·y has exceptional multiplicity 2
        let pulled = dd.gen(0).embed_by_name(&chart.ring).unwrap();
        let exc2 = b.exceptional.gen(i).pow(2);
        let prod = &exc2 * t.gen(i);
        assert!(chart.relations.contains(&(&prod - &pulled)).unwrap());
    }
}

#[test]
fn cross_fiber_gluings_are_coherent() {
    // blowing up a point of P² records gluings between the untouched
    // charts and the Rees charts; all of them must verify
    use blowup_calc::geom::{bundle_proj, TwistedSum};
    let p2 = bundle_proj(&TwistedSum::trivial_over_point(3)).unwrap();
    let b = blow_up(&p2.atlas, &p2.sub_bundle(&[2]).unwrap()).unwrap();
    assert_eq!(b.result.charts().len(), 4);
    // connected: every pair of charts is linked through some gluing path
    let n = b.result.charts().len();
    let mut reach = vec![false; n];
    reach[0] = true;
    for _ in 0..n {
        for g in b.result.gluings() {
            if reach[g.left] || reach[g.right] {
                reach[g.left] = true;
                reach[g.right] = true;
            }
        }
    }
    assert!(reach.iter().all(|&r| r));
    assert!(b.result.verify_gluings().unwrap().is_empty());
}

#[test]
fn projective_bundle_closure_is_coherent() {
    use blowup_calc::geom::{bundle_proj, BaseSpace, TwistedSum};
    let e = TwistedSum::new(BaseSpace::proj(1), vec![vec![1], vec![0]]).unwrap();
    let p = bundle_proj(&e).unwrap();
    // four charts with the diagonal overlaps recorded
    assert_eq!(p.atlas.charts().len(), 4);
    assert!(p.atlas.gluings().len() >= 6);
    assert!(p.atlas.verify_gluings().unwrap().is_empty());
}

#[test]
fn poset_blowup_commutes_with_localization() {
    // restrict the two-axes diagram to the chart element x + y + 1 ≠ 0
    // and blow up; compare chartwise with localizing the blowup
    use blowup_calc::geom::{check_iso, Chart, Correspondence};
    use blowup_calc::polycore::PolyRing;

    let x = plane().clone();
    let l = Lattice::from_covers(vec!["0", "a", "b", "1"], &[(0, 1), (0, 2), (1, 3), (2, 3)])
        .unwrap();
    let assign = vec![
        ClosedSubscheme::from_strs(&x, &[&["x", "y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x, &[&["y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x, &[&["x"]]).unwrap(),
        ClosedSubscheme::whole(&x),
    ];
    let d = PosetDiagram::new(l.clone(), &x, assign).unwrap();
    let r = poset_blow_up(&d).unwrap();

    // route B: localize the ambient first (the inverse variable comes
    // first so the center's minimal generators stay [y, x])
    let ring_loc = PolyRing::new(vec!["w", "x", "y"]).unwrap();
    let rel = ideal_from_strs(&ring_loc, &["x*w + y*w + w - 1"]).unwrap();
    let x_loc = blowup_calc::geom::Atlas::single(Chart::new("A", &ring_loc, rel).unwrap());
    let assign_loc = vec![
        ClosedSubscheme::from_strs(&x_loc, &[&["x", "y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x_loc, &[&["y"]]).unwrap(),
        ClosedSubscheme::from_strs(&x_loc, &[&["x"]]).unwrap(),
        ClosedSubscheme::whole(&x_loc),
    ];
    let d_loc = PosetDiagram::new(l, &x_loc, assign_loc).unwrap();
    let r_loc = poset_blow_up(&d_loc).unwrap();

    // route A: localize each blowup chart at the pullback of x + y + 1
    assert_eq!(r.atlas.charts().len(), r_loc.atlas.charts().len());
    let mut charts_a = Vec::new();
    for c in r.atlas.charts() {
        let f = parse_polynomial(&c.ring, "x + y + 1").unwrap();
        let (ring, rel, _) = c.localized(&f).unwrap();
        charts_a.push(Chart::new(c.label.clone(), &ring, rel).unwrap());
    }
    let atlas_a = blowup_calc::geom::Atlas::new(charts_a, Vec::new()).unwrap();

    // chartwise correspondence: same variable names, inv ↔ w
    let mut pairs = Vec::new();
    for i in 0..atlas_a.charts().len() {
        let ca = atlas_a.chart(i);
        let cb = r_loc.atlas.chart(i);
        assert_eq!(ca.label, cb.label);
        let fwd: Vec<String> = ca
            .ring
            .var_names()
            .iter()
            .map(|v| if v == "inv" { "w".to_string() } else { v.clone() })
            .collect();
        let bwd: Vec<String> = cb
            .ring
            .var_names()
            .iter()
            .map(|v| if v == "w" { "inv".to_string() } else { v.clone() })
            .collect();
        pairs.push(
            Correspondence::pair_from_strs(
                &atlas_a,
                &r_loc.atlas,
                i,
                i,
                &fwd.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                &bwd.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            )
            .unwrap(),
        );
    }
    // the claim is chartwise, so compare the chart data without gluings
    let b_charts =
        blowup_calc::geom::Atlas::new(r_loc.atlas.charts().to_vec(), Vec::new()).unwrap();
    let rep = check_iso(&atlas_a, &b_charts, &Correspondence { pairs }).unwrap();
    assert!(rep.ok, "{:?}", rep.notes);

    // the strict exceptionals match under the renaming
    for el in [0usize, 1, 2] {
        for i in 0..atlas_a.charts().len() {
            let ga = r.strict_exceptional(el).gen(i);
            let gb = r_loc.strict_exceptional(el).gen(i);
            let ga_in_b = ga.embed_by_name(&r_loc.atlas.chart(i).ring).unwrap();
            let ia = Ideal::new(&r_loc.atlas.chart(i).ring, vec![ga_in_b])
                .unwrap()
                .sum(&r_loc.atlas.chart(i).relations)
                .unwrap();
            let ib = Ideal::new(&r_loc.atlas.chart(i).ring, vec![gb.clone()])
                .unwrap()
                .sum(&r_loc.atlas.chart(i).relations)
                .unwrap();
            assert!(ia.equals(&ib).unwrap(), "exceptional {el} differs on chart {i}");
        }
    }
}

#[test]
fn complement_kills_exactly_the_divisor_locus() {
    use blowup_calc::geom::open_complement_divisor;
    let a1 = affine_space(1).unwrap();
    let d = Divisor::from_strs(&a1, &["x"]).unwrap();
    let c = open_complement_divisor(&a1, &d).unwrap();
    let chart = c.chart(0);
    // the divisor ideal becomes the unit ideal on the complement
    let image = ideal_from_strs(&chart.ring, &["x"]).unwrap().sum(&chart.relations).unwrap();
    assert!(image.is_unit());
    // a subscheme disjoint from the divisor survives
    let other = ideal_from_strs(&chart.ring, &["x - 1"]).unwrap().sum(&chart.relations).unwrap();
    assert!(!other.is_unit());
}
