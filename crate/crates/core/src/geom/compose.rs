//! Composing distinguished-open gluings. Fractions are handled
//! generically: denominators are cleared through the localization
//! relation, and inverses come from Gröbner-based inversion, so a
//! composite fails gracefully (no gluing) on empty overlaps.

use super::atlas::{Atlas, Chart, Gluing};
use crate::idealcalc::{groebner_basis, invert_mod, normal_form, Ideal, RingMap};
use crate::polycore::{MonomialOrder, Polynomial};
use crate::Result;

/// Rewrites `p` (an element of a localization `ring + inv` with relation
/// `inv·m = 1`) as an inverse-free polynomial `h` with `h ≡ m^k·p`;
/// returns `None` when no inverse-free representative appears.
pub(crate) fn clear_denominator(
    p: &Polynomial,
    m_loc: &Polynomial,
    inv: usize,
    local_relations: &Ideal,
) -> Option<Polynomial> {
    let ring = p.ring().clone();
    let order = MonomialOrder::block(ring.num_vars(), &[inv]).ok()?;
    let gb = groebner_basis(local_relations.gens(), &order);
    let mut nf = normal_form(p, &gb, &order);
    let mut guard = 0;
    loop {
        let e = nf.terms().iter().map(|(mm, _)| mm.exps()[inv]).max().unwrap_or(0);
        if e == 0 {
            return Some(nf);
        }
        nf = normal_form(&(&nf * &m_loc.pow(e)), &gb, &order);
        guard += 1;
        if guard > 8 {
            return None;
        }
    }
}

pub(crate) fn transpose_gluing(g: &Gluing) -> Gluing {
    Gluing {
        left: g.right,
        right: g.left,
        left_mult: g.right_mult.clone(),
        right_mult: g.left_mult.clone(),
        left_to_right: g.right_to_left.clone(),
        right_to_left: g.left_to_right.clone(),
    }
}

/// Composite gluing `A ~ C` of `g1: A ~ B` and `g2: B ~ C`, defined on
/// the triple overlap. Returns `None` when the overlap is empty or an
/// inverse fails to exist.
pub fn compose_gluings(charts: &[Chart], g1: &Gluing, g2: &Gluing) -> Result<Option<Gluing>> {
    assert_eq!(g1.right, g2.left, "composition needs a common middle chart");
    let a = g1.left;
    let c = g2.right;
    let chart_a = &charts[a];
    let chart_c = &charts[c];

    // A-side multiplier: m1A · (cleared image of g2's B-side multiplier)
    let (a_loc, a_rel, a_inv) = chart_a.localized(&g1.left_mult)?;
    let m2b_on_a = g1
        .right_to_left
        .apply(&g2.left_mult.embed_by_name(g1.right_to_left.source())?)?;
    let m1a_loc = g1.left_mult.embed_by_name(&a_loc)?;
    let Some(ha) = clear_denominator(&m2b_on_a, &m1a_loc, a_inv, &a_rel) else {
        return Ok(None);
    };
    let ha = restrict_to(&ha, chart_a)?;
    if chart_a.relations.contains(&ha)? {
        return Ok(None);
    }
    let left_mult = &g1.left_mult * &ha;

    // C-side multiplier: m2C · (cleared image of g1's B-side multiplier)
    let (c_loc, c_rel, c_inv) = chart_c.localized(&g2.right_mult)?;
    let m1b_on_c = g2
        .left_to_right
        .apply(&g1.right_mult.embed_by_name(g2.left_to_right.source())?)?;
    let m2c_loc = g2.right_mult.embed_by_name(&c_loc)?;
    let Some(hc) = clear_denominator(&m1b_on_c, &m2c_loc, c_inv, &c_rel) else {
        return Ok(None);
    };
    let hc = restrict_to(&hc, chart_c)?;
    if chart_c.relations.contains(&hc)? {
        return Ok(None);
    }
    let right_mult = &g2.right_mult * &hc;

    let (ll, ll_rel, _) = chart_a.localized(&left_mult)?;
    let (rl, rl_rel, _) = chart_c.localized(&right_mult)?;

    // bridge: B localized at g1's B-side multiplier → C at the composite
    // localization. B chart variables go through g2's transition (with the
    // inverse of g2's C-side multiplier re-expressed); the inverse of
    // g1's B-side multiplier inverts its image.
    let b_to_c = {
        let src = g1.left_to_right.target().clone();
        let inv_m2c = match invert_mod(&g2.right_mult.embed_by_name(&rl)?, &rl_rel) {
            Some(p) => p,
            None => return Ok(None),
        };
        let mut images = Vec::new();
        for k in 0..src.num_vars() {
            if k + 1 == src.num_vars() {
                let m1b_in_src2 = g1.right_mult.embed_by_name(g2.left_to_right.source())?;
                let q = g2.left_to_right.apply(&m1b_in_src2)?;
                let q = rewrite_inv(&q, &inv_m2c, g2.left_to_right.target(), &rl)?;
                match invert_mod(&q, &rl_rel) {
                    Some(p) => images.push(p),
                    None => return Ok(None),
                }
            } else {
                let img = g2.left_to_right.images()[k].clone();
                images.push(rewrite_inv(&img, &inv_m2c, g2.left_to_right.target(), &rl)?);
            }
        }
        RingMap::new(&src, &rl, images, Some(rl_rel.clone()))?
    };

    // A localized at the composite multiplier → C
    let mut left_images = Vec::new();
    for k in 0..chart_a.ring.num_vars() {
        let v = Polynomial::var(g1.left_to_right.source(), k);
        let through_b = g1.left_to_right.apply(&v)?;
        left_images.push(b_to_c.apply(&through_b)?);
    }
    {
        let temp = RingMap::new(&chart_a.ring, &rl, left_images.clone(), Some(rl_rel.clone()))?;
        let m_img = temp.apply(&left_mult)?;
        match invert_mod(&m_img, &rl_rel) {
            Some(p) => left_images.push(p),
            None => return Ok(None),
        }
    }

    // mirror bridge: B localized at g2's B-side multiplier → A
    let b_to_a = {
        let src = g2.right_to_left.target().clone();
        let inv_m1a = match invert_mod(&g1.left_mult.embed_by_name(&ll)?, &ll_rel) {
            Some(p) => p,
            None => return Ok(None),
        };
        let mut images = Vec::new();
        for k in 0..src.num_vars() {
            if k + 1 == src.num_vars() {
                let m2b_in_src1 = g2.left_mult.embed_by_name(g1.right_to_left.source())?;
                let q = g1.right_to_left.apply(&m2b_in_src1)?;
                let q = rewrite_inv(&q, &inv_m1a, g1.right_to_left.target(), &ll)?;
                match invert_mod(&q, &ll_rel) {
                    Some(p) => images.push(p),
                    None => return Ok(None),
                }
            } else {
                let img = g1.right_to_left.images()[k].clone();
                images.push(rewrite_inv(&img, &inv_m1a, g1.right_to_left.target(), &ll)?);
            }
        }
        RingMap::new(&src, &ll, images, Some(ll_rel.clone()))?
    };
    let mut right_images = Vec::new();
    for k in 0..chart_c.ring.num_vars() {
        let v = Polynomial::var(g2.right_to_left.source(), k);
        let through_b = g2.right_to_left.apply(&v)?;
        right_images.push(b_to_a.apply(&through_b)?);
    }
    {
        let temp = RingMap::new(&chart_c.ring, &ll, right_images.clone(), Some(ll_rel.clone()))?;
        let m_img = temp.apply(&right_mult)?;
        match invert_mod(&m_img, &ll_rel) {
            Some(p) => right_images.push(p),
            None => return Ok(None),
        }
    }

    Ok(Some(Gluing {
        left: a,
        right: c,
        left_mult,
        right_mult,
        left_to_right: RingMap::new(&ll, &rl, left_images, Some(rl_rel))?,
        right_to_left: RingMap::new(&rl, &ll, right_images, Some(ll_rel))?,
    }))
}

/// Re-expresses `p`, written over an old localization ring, inside a new
/// localization of the same chart: chart variables keep their names and
/// the old inverse variable maps to the supplied inverse element.
fn rewrite_inv(
    p: &Polynomial,
    inverse: &Polynomial,
    old_loc: &crate::polycore::RingRef,
    new_loc: &crate::polycore::RingRef,
) -> Result<Polynomial> {
    let mut images = Vec::new();
    for (k, name) in old_loc.var_names().iter().enumerate() {
        if k + 1 == old_loc.num_vars() {
            images.push(inverse.clone());
        } else {
            images.push(Polynomial::var_named(new_loc, name)?);
        }
    }
    let map = RingMap::new(old_loc, new_loc, images, None)?;
    map.apply(p)
}

/// Forgets the inverse variable of a chart localization (the element must
/// already be inverse-free).
fn restrict_to(p: &Polynomial, chart: &Chart) -> Result<Polynomial> {
    let mut terms = Vec::new();
    let n = chart.ring.num_vars();
    for (m, c) in p.terms() {
        let mut exps = m.exps().to_vec();
        debug_assert!(exps[n..].iter().all(|&e| e == 0));
        exps.truncate(n);
        terms.push((crate::polycore::Monomial::from_exps(exps), c.clone()));
    }
    Ok(Polynomial::from_terms(&chart.ring, terms))
}

/// Adds composite gluings for chart pairs connected by a length-two path
/// but lacking a direct gluing. Composites with empty overlaps are
/// silently skipped.
pub fn close_gluings(atlas: &Atlas) -> Result<Atlas> {
    let n = atlas.charts().len();
    let mut have = vec![vec![false; n]; n];
    for g in atlas.gluings() {
        have[g.left][g.right] = true;
        have[g.right][g.left] = true;
    }
    let oriented = |x: usize, y: usize| -> Option<Gluing> {
        atlas.gluings().iter().find_map(|g| {
            if g.left == x && g.right == y {
                Some(g.clone())
            } else if g.left == y && g.right == x {
                Some(transpose_gluing(g))
            } else {
                None
            }
        })
    };
    let mut extra = Vec::new();
    for a in 0..n {
        for c in (a + 1)..n {
            if have[a][c] {
                continue;
            }
            for b in 0..n {
                if b == a || b == c || !have[a][b] || !have[b][c] {
                    continue;
                }
                let g1 = oriented(a, b).unwrap();
                let g2 = oriented(b, c).unwrap();
                if let Some(g) = compose_gluings(atlas.charts(), &g1, &g2)? {
                    extra.push(g);
                    break;
                }
            }
        }
    }
    let mut gluings = atlas.gluings().to_vec();
    gluings.extend(extra);
    Atlas::new(atlas.charts().to_vec(), gluings)
}
