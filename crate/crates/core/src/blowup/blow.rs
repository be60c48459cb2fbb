//! The Rees-algebra blowup: per source chart with center generators
//! f₀,…,f_k, one chart per generator, with fiber variables u_j subject to
//! u_j·f_i − f_j and the chart ideal saturated by f_i.

use crate::geom::{Atlas, Chart, ClosedSubscheme, Divisor, Gluing};
use crate::idealcalc::{Ideal, RingMap};
use crate::par::par_map;
use crate::polycore::{Polynomial, RingRef};
use crate::{Error, Result};

/// A blowup `Bl_Y X → X` with its exceptional divisor and chartwise
/// projection maps.
#[derive(Clone, Debug)]
pub struct BlowupResult {
    pub source: Atlas,
    pub center: ClosedSubscheme,
    pub result: Atlas,
    pub exceptional: Divisor,
    /// Per result chart: the ring map from the source chart it lies over.
    pub projections: Vec<RingMap>,
    /// Per result chart: the index of the source chart it lies over.
    pub source_chart: Vec<usize>,
    /// Per source chart: the minimal center generators used.
    pub center_gens: Vec<Vec<Polynomial>>,
}

struct ChartBatch {
    charts: Vec<Chart>,
    exc: Vec<Polynomial>,
    gen_index: Vec<usize>,
}

/// Blows up `x` along `y`.
///
/// Degenerate centers follow the scheme conventions: a center equal to a
/// whole chart contributes no blowup charts (the blowup is empty there),
/// and an empty center (unit ideal) contributes the chart unchanged with
/// unit exceptional generator. Single-generator centers keep the chart
/// ring and label.
pub fn blow_up(x: &Atlas, y: &ClosedSubscheme) -> Result<BlowupResult> {
    if x != y.ambient() {
        return Err(Error::RingMismatch("center lives on a different atlas".into()));
    }

    let center_gens: Vec<Vec<Polynomial>> = (0..x.charts().len())
        .map(|ci| y.min_gens(ci))
        .collect::<Result<_>>()?;

    let batches: Vec<Result<ChartBatch>> = par_map(
        &(0..x.charts().len()).collect::<Vec<_>>(),
        |&ci| build_charts(x.chart(ci), &center_gens[ci]),
    );

    let mut charts = Vec::new();
    let mut exc_gens = Vec::new();
    let mut source_chart = Vec::new();
    let mut gen_index = Vec::new();
    // first chart of each (source chart, generator) pair, for gluing lookup
    let mut pos: Vec<Vec<Option<usize>>> = Vec::new();
    for (ci, batch) in batches.into_iter().enumerate() {
        let batch = batch?;
        let mut here = vec![None; center_gens[ci].len().max(1)];
        for (k, chart) in batch.charts.into_iter().enumerate() {
            here[batch.gen_index[k]] = Some(charts.len());
            charts.push(chart);
            exc_gens.push(batch.exc[k].clone());
            source_chart.push(ci);
            gen_index.push(batch.gen_index[k]);
        }
        pos.push(here);
    }

    let mut gluings = Vec::new();
    // Rees gluings within each source chart's fiber
    for (ci, here) in pos.iter().enumerate() {
        let gens = &center_gens[ci];
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                if let (Some(a), Some(b)) = (here[i], here[j]) {
                    gluings.push(rees_gluing(&charts, a, b, i, j, gens.len())?);
                }
            }
        }
    }
    // gluings across source charts: verbatim between single-generator
    // charts, and localized ones between a single-generator chart and the
    // Rees charts on the far side
    for g in x.gluings() {
        let (lf, rf) = (&pos[g.left], &pos[g.right]);
        if lf.len() == 1 && rf.len() == 1 {
            if let (Some(a), Some(b)) = (lf[0], rf[0]) {
                let mut ng = g.clone();
                ng.left = a;
                ng.right = b;
                gluings.push(ng);
            }
            continue;
        }
        if lf.len() == 1 {
            if let Some(a) = lf[0] {
                for (i, slot) in rf.iter().enumerate() {
                    if let Some(b) = *slot {
                        if let Some(ng) = cross_fiber_gluing(
                            x, g, false, &charts, a, b, &center_gens[g.right], i,
                        )? {
                            gluings.push(ng);
                        }
                    }
                }
            }
        } else if rf.len() == 1 {
            if let Some(a) = rf[0] {
                for (i, slot) in lf.iter().enumerate() {
                    if let Some(b) = *slot {
                        if let Some(ng) = cross_fiber_gluing(
                            x, g, true, &charts, a, b, &center_gens[g.left], i,
                        )? {
                            gluings.push(ng);
                        }
                    }
                }
            }
        }
    }

    let result = Atlas::new(charts, gluings)?;
    let exceptional = Divisor::new(&result, exc_gens)?;
    let projections = result
        .charts()
        .iter()
        .zip(&source_chart)
        .map(|(c, &ci)| {
            RingMap::inclusion(&x.chart(ci).ring, &c.ring, Some(c.relations.clone()))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(BlowupResult {
        source: x.clone(),
        center: y.clone(),
        result,
        exceptional,
        projections,
        source_chart,
        center_gens,
    })
}

fn build_charts(chart: &Chart, gens: &[Polynomial]) -> Result<ChartBatch> {
    let mut out = ChartBatch { charts: Vec::new(), exc: Vec::new(), gen_index: Vec::new() };
    if gens.is_empty() {
        // center is the whole chart: the blowup is empty over it
        return Ok(out);
    }
    if gens.len() == 1 {
        let rel = chart.relations.saturation(&gens[0])?;
        if !rel.is_unit() {
            out.charts.push(Chart::new(chart.label.clone(), &chart.ring, rel)?);
            out.exc.push(gens[0].clone());
            out.gen_index.push(0);
        }
        return Ok(out);
    }
    for i in 0..gens.len() {
        let (ring, fiber_pos) = rees_ring(&chart.ring, gens.len(), i)?;
        let n = chart.ring.num_vars();
        let var_map: Vec<usize> = (0..n).collect();
        let fi = gens[i].embed(&ring, &var_map);
        let mut rel_gens: Vec<Polynomial> = chart
            .relations
            .gens()
            .iter()
            .map(|g| g.embed(&ring, &var_map))
            .collect();
        for (j, gj) in gens.iter().enumerate() {
            if j != i {
                let uj = Polynomial::var(&ring, fiber_pos[j]);
                rel_gens.push(&(&uj * &fi) - &gj.embed(&ring, &var_map));
            }
        }
        let rel = Ideal::new(&ring, rel_gens)?.saturation(&fi)?;
        if rel.is_unit() {
            continue;
        }
        out.charts.push(Chart::new(format!("{}:{}", chart.label, i), &ring, rel)?);
        out.exc.push(fi);
        out.gen_index.push(i);
    }
    Ok(out)
}

/// The chart ring for generator `i`: source variables plus fiber
/// variables u_j (j ≠ i). Returns the position of u_j per generator j
/// (the chart's own index maps to usize::MAX).
fn rees_ring(base: &RingRef, k: usize, i: usize) -> Result<(RingRef, Vec<usize>)> {
    let mut names: Vec<String> = base.var_names().to_vec();
    let n = names.len();
    let mut fiber_pos = vec![usize::MAX; k];
    let mut added = 0;
    for j in 0..k {
        if j == i {
            continue;
        }
        let mut name = format!("u{j}");
        while names.contains(&name) {
            name.push('\'');
        }
        fiber_pos[j] = n + added;
        names.push(name);
        added += 1;
    }
    Ok((crate::polycore::PolyRing::new(names)?, fiber_pos))
}

/// In chart `a` (generator i), u_m = f_m/f_i; in chart `b` (generator j),
/// u_m = f_m/f_j. The overlap inverts u_j on the left and u_i on the
/// right, and the transition is monomial.
fn rees_gluing(
    charts: &[Chart],
    a: usize,
    b: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Gluing> {
    let aring = &charts[a].ring;
    let bring = &charts[b].ring;
    let nbase = aring.num_vars() - (k - 1);
    let a_pos = fiber_positions(nbase, k, i);
    let b_pos = fiber_positions(nbase, k, j);

    let left_mult = Polynomial::var(aring, a_pos[j]);
    let right_mult = Polynomial::var(bring, b_pos[i]);
    let (lloc, _, linv) = charts[a].localized(&left_mult)?;
    let (rloc, _, rinv) = charts[b].localized(&right_mult)?;
    let w_r = Polynomial::var(&rloc, rinv);
    let w_l = Polynomial::var(&lloc, linv);

    let mut left_images = Vec::new();
    for pos in 0..aring.num_vars() {
        if pos < nbase {
            left_images.push(Polynomial::var(&rloc, pos));
        } else {
            let m = a_pos.iter().position(|&p| p == pos).unwrap();
            if m == j {
                left_images.push(w_r.clone());
            } else {
                // u_m^(a) = u_m^(b) · (f_j/f_i) = u_m^(b) · w_r
                left_images.push(&Polynomial::var(&rloc, b_pos[m]) * &w_r);
            }
        }
    }
    left_images.push(Polynomial::var(&rloc, b_pos[i]));

    let mut right_images = Vec::new();
    for pos in 0..bring.num_vars() {
        if pos < nbase {
            right_images.push(Polynomial::var(&lloc, pos));
        } else {
            let m = b_pos.iter().position(|&p| p == pos).unwrap();
            if m == i {
                right_images.push(w_l.clone());
            } else {
                right_images.push(&Polynomial::var(&lloc, a_pos[m]) * &w_l);
            }
        }
    }
    right_images.push(Polynomial::var(&lloc, a_pos[j]));

    Gluing::build(charts, a, b, left_mult, right_mult, left_images, right_images)
}

fn fiber_positions(nbase: usize, k: usize, own: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; k];
    let mut added = 0;
    for j in 0..k {
        if j != own {
            pos[j] = nbase + added;
            added += 1;
        }
    }
    pos
}

/// A gluing between a single-generator chart `far` (left) and a Rees
/// chart `rees` over the neighboring source chart (generator `i` of
/// `gens`). Defined on the locus where the source overlap meets the
/// region on which generator `i` is invertible; empty overlaps yield
/// nothing. `transpose` says the source gluing runs rees-side ~ far-side.
#[allow(clippy::too_many_arguments)]
fn cross_fiber_gluing(
    x: &Atlas,
    g: &Gluing,
    transpose: bool,
    charts: &[Chart],
    far: usize,
    rees: usize,
    gens: &[Polynomial],
    i: usize,
) -> Result<Option<Gluing>> {
    use crate::idealcalc::invert_mod;

    // orient the source gluing with the far chart on the left
    let (m_far, m_src, fwd, bwd) = if transpose {
        (&g.right_mult, &g.left_mult, &g.right_to_left, &g.left_to_right)
    } else {
        (&g.left_mult, &g.right_mult, &g.left_to_right, &g.right_to_left)
    };
    let far_chart = &charts[far];
    let rees_chart = &charts[rees];
    let fi = &gens[i];

    // far-side multiplier: m_far · (cleared image of the generator)
    let (floc, frel, finv) = far_chart.localized(m_far)?;
    let fi_pulled = bwd.apply(&fi.embed_by_name(bwd.source())?)?;
    let m_far_loc = m_far.embed_by_name(&floc)?;
    let Some(h) =
        crate::geom::compose_support::clear_denominator(&fi_pulled, &m_far_loc, finv, &frel)
    else {
        return Ok(None);
    };
    let h = {
        let mut terms = Vec::new();
        let n = far_chart.ring.num_vars();
        for (m, c) in h.terms() {
            let mut exps = m.exps().to_vec();
            if exps[n..].iter().any(|&e| e != 0) {
                return Ok(None);
            }
            exps.truncate(n);
            terms.push((crate::polycore::Monomial::from_exps(exps), c.clone()));
        }
        Polynomial::from_terms(&far_chart.ring, terms)
    };
    if far_chart.relations.contains(&h)? {
        return Ok(None);
    }
    let left_mult = m_far * &h;

    // rees-side multiplier: the pulled-back source multiplier times the
    // exceptional generator
    let right_mult = &m_src.embed_by_name(&rees_chart.ring)? * &fi.embed_by_name(&rees_chart.ring)?;

    let (ll, ll_rel, _) = far_chart.localized(&left_mult)?;
    let (rl, rl_rel, _) = rees_chart.localized(&right_mult)?;

    // far-chart variables through the source transition, with the inverse
    // of the source multiplier re-expressed on the Rees side
    let inv_m_src = match invert_mod(&m_src.embed_by_name(&rl)?, &rl_rel) {
        Some(p) => p,
        None => return Ok(None),
    };
    let rewrite_fwd = |p: &Polynomial| -> Result<Polynomial> {
        let old = fwd.target();
        let mut images = Vec::new();
        for (k, name) in old.var_names().iter().enumerate() {
            if k + 1 == old.num_vars() {
                images.push(inv_m_src.clone());
            } else {
                images.push(Polynomial::var_named(&rl, name)?);
            }
        }
        RingMap::new(old, &rl, images, Some(rl_rel.clone()))?.apply(p)
    };
    let mut left_images = Vec::new();
    for k in 0..far_chart.ring.num_vars() {
        let v = Polynomial::var(fwd.source(), k);
        left_images.push(rewrite_fwd(&fwd.apply(&v)?)?);
    }
    {
        let temp = RingMap::new(&far_chart.ring, &rl, left_images.clone(), Some(rl_rel.clone()))?;
        match invert_mod(&temp.apply(&left_mult)?, &rl_rel) {
            Some(p) => left_images.push(p),
            None => return Ok(None),
        }
    }

    // rees-chart variables: source variables through the backward
    // transition (the inverse of the far multiplier is Ω·h), fiber
    // variables as ratios of pulled-back generators
    let omega = Polynomial::var(&ll, far_chart.ring.num_vars());
    let inv_m_far = &omega * &h.embed_by_name(&ll)?;
    let rewrite_bwd = |p: &Polynomial| -> Result<Polynomial> {
        let old = bwd.target();
        let mut images = Vec::new();
        for (k, name) in old.var_names().iter().enumerate() {
            if k + 1 == old.num_vars() {
                images.push(inv_m_far.clone());
            } else {
                images.push(Polynomial::var_named(&ll, name)?);
            }
        }
        RingMap::new(old, &ll, images, Some(ll_rel.clone()))?.apply(p)
    };
    let src_ring = &x.chart(if transpose { g.left } else { g.right }).ring;
    let nsrc = src_ring.num_vars();
    let fiber_pos = fiber_positions(nsrc, gens.len(), i);
    // the inverse of the pulled-back generator f_i on the far side
    let fi_on_far = rewrite_bwd(&bwd.apply(&fi.embed_by_name(bwd.source())?)?)?;
    let inv_fi = match invert_mod(&fi_on_far, &ll_rel) {
        Some(p) => p,
        None => return Ok(None),
    };
    let mut right_images = vec![Polynomial::zero(&ll); rl.num_vars()];
    for k in 0..nsrc {
        let v = Polynomial::var(bwd.source(), k);
        right_images[k] = rewrite_bwd(&bwd.apply(&v)?)?;
    }
    for (j, gj) in gens.iter().enumerate() {
        if j == i {
            continue;
        }
        let gj_on_far = rewrite_bwd(&bwd.apply(&gj.embed_by_name(bwd.source())?)?)?;
        right_images[fiber_pos[j]] = &gj_on_far * &inv_fi;
    }
    {
        let temp = RingMap::new(
            &rees_chart.ring,
            &ll,
            right_images[..rees_chart.ring.num_vars()].to_vec(),
            Some(ll_rel.clone()),
        )?;
        match invert_mod(&temp.apply(&right_mult)?, &ll_rel) {
            Some(p) => right_images[rl.num_vars() - 1] = p,
            None => return Ok(None),
        }
    }

    Ok(Some(Gluing {
        left: far,
        right: rees,
        left_mult,
        right_mult,
        left_to_right: RingMap::new(&ll, &rl, left_images, Some(rl_rel))?,
        right_to_left: RingMap::new(&rl, &ll, right_images, Some(ll_rel))?,
    }))
}
