//! Coherence of the standard atlases and bundle constructions.

use blowup_calc::geom::{
    affine_space, bundle_proj, bundle_total, check_iso, open_complement_divisor,
    open_complement_family, product, projective_space, BaseSpace, ClosedSubscheme,
    Correspondence, Divisor, TwistedSum,
};

#[test]
fn projective_line_atlas() {
    let p1 = projective_space(1).unwrap();
    assert_eq!(p1.charts().len(), 2);
    assert_eq!(p1.chart(0).ring.var_names(), ["t"]);
    assert_eq!(p1.chart(1).ring.var_names(), ["s"]);
    assert!(p1.verify_gluings().unwrap().is_empty());
}

#[test]
fn projective_plane_atlas() {
    let p2 = projective_space(2).unwrap();
    assert_eq!(p2.charts().len(), 3);
    assert!(p2.verify_gluings().unwrap().is_empty());
}

#[test]
fn point_and_affine() {
    let p0 = projective_space(0).unwrap();
    assert_eq!(p0.charts().len(), 1);
    assert_eq!(p0.chart(0).ring.num_vars(), 0);
    let a1 = affine_space(1).unwrap();
    assert_eq!(a1.charts().len(), 1);
}

#[test]
fn products_glue() {
    let a1 = affine_space(1).unwrap();
    let p1 = projective_space(1).unwrap();
    let prod = product(&a1, &p1).unwrap();
    assert_eq!(prod.atlas.charts().len(), 2);
    assert_eq!(prod.atlas.chart(0).ring.var_names(), ["x", "t"]);
    assert_eq!(prod.atlas.chart(1).ring.var_names(), ["x", "s"]);
    assert!(prod.atlas.verify_gluings().unwrap().is_empty());

    let p1xp1 = product(&p1, &p1).unwrap();
    assert_eq!(p1xp1.atlas.charts().len(), 4);
    assert!(p1xp1.atlas.verify_gluings().unwrap().is_empty());
}

#[test]
fn base_space_two_factors() {
    let b = BaseSpace::proj(1).with_proj(1);
    let atlas = b.atlas().unwrap();
    assert_eq!(atlas.charts().len(), 4);
    assert!(atlas.verify_gluings().unwrap().is_empty());
}

#[test]
fn trivial_bundle_over_point_is_affine_space() {
    let e = TwistedSum::trivial_over_point(2);
    let v = bundle_total(&e).unwrap();
    assert_eq!(v.atlas.charts().len(), 1);
    assert_eq!(v.atlas.chart(0).ring.num_vars(), 2);
    assert!(v.zero_section().unwrap().verify_compatible().unwrap().is_empty());
}

#[test]
fn hirzebruch_surface_atlas() {
    // P(O(-1) ⊕ O) over P^1: 4 charts, coherent transitions
    let e = TwistedSum::over_proj(1, &[-1, 0]);
    let p = bundle_proj(&e).unwrap();
    assert_eq!(p.atlas.charts().len(), 4);
    assert!(p.atlas.verify_gluings().unwrap().is_empty());
    // the sub-bundle P(O(-1)) is chartwise compatible
    let sb = p.sub_bundle(&[0]).unwrap();
    assert!(sb.verify_compatible().unwrap().is_empty());
}

#[test]
fn serre_twist_total_spaces_glue() {
    for d in [-2i64, -1, 0, 1, 2] {
        let e = TwistedSum::over_proj(1, &[d]);
        let v = bundle_total(&e).unwrap();
        assert_eq!(v.atlas.charts().len(), 2);
        assert!(v.atlas.verify_gluings().unwrap().is_empty(), "twist {d}");
    }
}

#[test]
fn proj_of_rank_one_is_the_base() {
    // P(O) over Y is Y itself
    let e = TwistedSum::over_proj(1, &[0]);
    let p = bundle_proj(&e).unwrap();
    let base = projective_space(1).unwrap();
    let corr = Correspondence::identity(&p.atlas, &base).unwrap();
    let rep = check_iso(&p.atlas, &base, &corr).unwrap();
    assert!(rep.ok, "{:?}", rep.notes);
}

#[test]
fn complement_of_origin_divisor_in_line() {
    // A^1 \ (x) = Spec Q[x, inv]/(inv*x - 1)
    let a1 = affine_space(1).unwrap();
    let d = Divisor::from_strs(&a1, &["x"]).unwrap();
    let c = open_complement_divisor(&a1, &d).unwrap();
    assert_eq!(c.charts().len(), 1);
    assert_eq!(c.chart(0).ring.num_vars(), 2);
    assert_eq!(c.chart(0).relations.serialized(), vec!["x*inv - 1".to_string()]);
}

#[test]
fn complement_of_infinity_in_line() {
    // P^1 \ {infinity} is the t-chart
    let p1 = projective_space(1).unwrap();
    let infty = ClosedSubscheme::from_strs(&p1, &[&["1"], &["s"]]).unwrap();
    let c = open_complement_family(&p1, &infty).unwrap();
    assert_eq!(c.charts().len(), 1);
    assert_eq!(c.chart(0).ring.var_names(), ["t"]);
}

#[test]
fn complement_coverage_is_checked() {
    // removing a point that meets every chart is not family-covered
    let p1 = projective_space(1).unwrap();
    let mid = ClosedSubscheme::from_strs(&p1, &[&["t - 1"], &["s - 1"]]).unwrap();
    assert!(open_complement_family(&p1, &mid).is_err());
}

#[test]
fn localized_complements_glue() {
    // P^1 minus the section at 1 still glues coherently
    let p1 = projective_space(1).unwrap();
    let d = Divisor::from_strs(&p1, &["t - 1", "s - 1"]).unwrap();
    let c = open_complement_divisor(&p1, &d).unwrap();
    assert_eq!(c.charts().len(), 2);
    assert!(c.verify_gluings().unwrap().is_empty());
}
