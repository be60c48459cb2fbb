//! Twisted-sum bundles over product bases: total spaces V(E) and
//! projectivizations P(E) of direct sums of line-bundle twists
//! E = O(d₁) ⊕ … ⊕ O(dᵣ).

use super::atlas::{Atlas, Chart, Gluing};
use super::spaces::BaseSpace;
use super::subscheme::ClosedSubscheme;
use crate::idealcalc::Ideal;
use crate::polycore::{PolyRing, Polynomial, RingRef};
use crate::{Error, Result};

/// A direct sum of line-bundle twists over a product base; `twists[s][f]`
/// is the degree of summand `s` along projective factor `f`.
#[derive(Clone, Debug)]
pub struct TwistedSum {
    pub base: BaseSpace,
    pub twists: Vec<Vec<i64>>,
}

impl TwistedSum {
    pub fn new(base: BaseSpace, twists: Vec<Vec<i64>>) -> Result<TwistedSum> {
        for t in &twists {
            if t.len() != base.proj_dims.len() {
                return Err(Error::Dimension(format!(
                    "a twist with {} degrees over a base with {} projective factors",
                    t.len(),
                    base.proj_dims.len()
                )));
            }
        }
        if twists.is_empty() {
            return Err(Error::InvalidInput("twisted sum of rank zero".into()));
        }
        Ok(TwistedSum { base, twists })
    }

    /// O^rank over a point.
    pub fn trivial_over_point(rank: usize) -> TwistedSum {
        TwistedSum { base: BaseSpace::point(), twists: vec![Vec::new(); rank] }
    }

    /// Sum of O(d) twists over a single projective factor.
    pub fn over_proj(dim: usize, degrees: &[i64]) -> TwistedSum {
        TwistedSum {
            base: BaseSpace::proj(dim),
            twists: degrees.iter().map(|&d| vec![d]).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// The total space V(E): base charts with one fiber variable per summand.
#[derive(Clone, Debug)]
pub struct TotalSpace {
    pub atlas: Atlas,
    pub bundle: TwistedSum,
    /// Position of each summand's fiber variable, per chart.
    pub fiber_pos: Vec<Vec<usize>>,
}

impl TotalSpace {
    /// The zero section (all fiber variables vanish).
    pub fn zero_section(&self) -> Result<ClosedSubscheme> {
        let ideals = self
            .atlas
            .charts()
            .iter()
            .zip(&self.fiber_pos)
            .map(|(c, pos)| {
                let gens = pos.iter().map(|&p| Polynomial::var(&c.ring, p)).collect();
                Ideal::new(&c.ring, gens)
            })
            .collect::<Result<Vec<_>>>()?;
        ClosedSubscheme::new(&self.atlas, ideals)
    }
}

/// `mult^d`, using the inverse variable for negative powers.
fn twist_power(mult: &Polynomial, inv: &Polynomial, d: i64) -> Polynomial {
    if d >= 0 {
        mult.pow(d as u32)
    } else {
        inv.pow((-d) as u32)
    }
}

/// Builds V(E) over the structured base.
pub fn bundle_total(e: &TwistedSum) -> Result<TotalSpace> {
    let base = &e.base;
    let indices = base.chart_indices();
    let rank = e.rank();

    let mut charts = Vec::new();
    let mut fiber_pos = Vec::new();
    for m in &indices {
        let mut vars = base.chart_vars(m);
        let nbase = vars.len();
        for s in 0..rank {
            let mut name = format!("v{s}");
            while vars.contains(&name) {
                name.push('\'');
            }
            vars.push(name);
        }
        let ring = PolyRing::new(vars)?;
        charts.push(Chart::new(base.chart_label(m), &ring, Ideal::zero(&ring))?);
        fiber_pos.push((nbase..nbase + rank).collect::<Vec<_>>());
    }

    let gluings = build_gluings(base, &indices, &charts, |ctx| {
        // fiber variable of summand s on the source side:
        //   v_s^{src} = (X_src/X_dst)^{d_s} · v_s^{dst}
        let mut images = Vec::new();
        for s in 0..rank {
            let factor = twist_power(&ctx.dst_mult, &ctx.dst_inv, e.twists[s][ctx.factor]);
            let v_dst = Polynomial::var(&ctx.dst_loc, fiber_pos[ctx.dst_chart][s]);
            images.push(&factor * &v_dst);
        }
        Ok(images)
    })?;

    Ok(TotalSpace {
        atlas: Atlas::new(charts, gluings)?,
        bundle: e.clone(),
        fiber_pos,
    })
}

/// The projectivization P(E): one chart per (base chart, summand), with
/// ratio variables `w{s'}` for the other summands.
#[derive(Clone, Debug)]
pub struct ProjBundle {
    pub atlas: Atlas,
    pub bundle: TwistedSum,
    /// (base chart, summand) per atlas chart, row-major.
    pub pairs: Vec<(usize, usize)>,
    /// Position of ratio variable `v_{s'}/v_s`, per chart, indexed by `s'`
    /// (the chart's own summand maps to `usize::MAX`).
    pub ratio_pos: Vec<Vec<usize>>,
}

impl ProjBundle {
    pub fn chart_of(&self, base_chart: usize, summand: usize) -> usize {
        self.pairs
            .iter()
            .position(|&(b, s)| b == base_chart && s == summand)
            .expect("projective bundle chart")
    }

    /// The sub-bundle P(⊕_{s∈keep} O(d_s)) as a closed subscheme.
    pub fn sub_bundle(&self, keep: &[usize]) -> Result<ClosedSubscheme> {
        let mut ideals = Vec::new();
        for (ci, &(_b, s)) in self.pairs.iter().enumerate() {
            let ring = &self.atlas.chart(ci).ring;
            if keep.contains(&s) {
                let gens = (0..self.bundle.rank())
                    .filter(|s2| *s2 != s && !keep.contains(s2))
                    .map(|s2| Polynomial::var(ring, self.ratio_pos[ci][s2]))
                    .collect();
                ideals.push(Ideal::new(ring, gens)?);
            } else {
                ideals.push(Ideal::unit(ring));
            }
        }
        ClosedSubscheme::new(&self.atlas, ideals)
    }
}

/// Builds P(E) over the structured base.
pub fn bundle_proj(e: &TwistedSum) -> Result<ProjBundle> {
    let base = &e.base;
    let indices = base.chart_indices();
    let rank = e.rank();

    let mut charts = Vec::new();
    let mut pairs = Vec::new();
    let mut ratio_pos: Vec<Vec<usize>> = Vec::new();
    for (bi, m) in indices.iter().enumerate() {
        for s in 0..rank {
            let mut vars = base.chart_vars(m);
            let nbase = vars.len();
            let mut pos = vec![usize::MAX; rank];
            let mut k = 0;
            for s2 in 0..rank {
                if s2 != s {
                    let mut name = format!("w{s2}");
                    while vars.contains(&name) {
                        name.push('\'');
                    }
                    vars.push(name);
                    pos[s2] = nbase + k;
                    k += 1;
                }
            }
            let ring = PolyRing::new(vars)?;
            let label = if rank == 1 {
                base.chart_label(m)
            } else {
                format!("{}|P{s}", base.chart_label(m))
            };
            charts.push(Chart::new(label, &ring, Ideal::zero(&ring))?);
            pairs.push((bi, s));
            ratio_pos.push(pos);
        }
    }
    let chart_of = |b: usize, s: usize| b * rank + s;

    let mut gluings = Vec::new();

    // (a) same base chart, summand s ~ summand s'
    for bi in 0..indices.len() {
        for s in 0..rank {
            for s2 in (s + 1)..rank {
                let li = chart_of(bi, s);
                let ri = chart_of(bi, s2);
                let lmul = Polynomial::var(&charts[li].ring, ratio_pos[li][s2]);
                let rmul = Polynomial::var(&charts[ri].ring, ratio_pos[ri][s]);
                let (lloc, _, linv) = charts[li].localized(&lmul)?;
                let (rloc, _, rinv) = charts[ri].localized(&rmul)?;
                let w_r = Polynomial::var(&rloc, rinv);
                let w_l = Polynomial::var(&lloc, linv);

                // left chart vars: base vars identity, ratios w_k -> w_k·w, w_{s2} -> w
                let mut left_images = Vec::new();
                for (pos, name) in charts[li].ring.var_names().iter().enumerate() {
                    if pos < charts[li].ring.num_vars() - (rank - 1) {
                        left_images.push(Polynomial::var_named(&rloc, name)?);
                    } else {
                        let k = ratio_pos[li].iter().position(|&p| p == pos).unwrap();
                        if k == s2 {
                            left_images.push(w_r.clone());
                        } else {
                            let wk = Polynomial::var(&rloc, ratio_pos[ri][k]);
                            left_images.push(&wk * &w_r);
                        }
                    }
                }
                left_images.push(Polynomial::var(&rloc, ratio_pos[ri][s]));

                let mut right_images = Vec::new();
                for (pos, name) in charts[ri].ring.var_names().iter().enumerate() {
                    if pos < charts[ri].ring.num_vars() - (rank - 1) {
                        right_images.push(Polynomial::var_named(&lloc, name)?);
                    } else {
                        let k = ratio_pos[ri].iter().position(|&p| p == pos).unwrap();
                        if k == s {
                            right_images.push(w_l.clone());
                        } else {
                            let wk = Polynomial::var(&lloc, ratio_pos[li][k]);
                            right_images.push(&wk * &w_l);
                        }
                    }
                }
                right_images.push(Polynomial::var(&lloc, ratio_pos[li][s2]));

                gluings.push(Gluing::build(
                    &charts,
                    li,
                    ri,
                    lmul,
                    rmul,
                    left_images,
                    right_images,
                )?);
            }
        }
    }

    // (b) base transitions, same summand: ratios pick up the twist difference
    for s in 0..rank {
        let sub_charts: Vec<Chart> = indices
            .iter()
            .enumerate()
            .map(|(bi, _)| charts[chart_of(bi, s)].clone())
            .collect();
        let more = build_gluings(base, &indices, &sub_charts, |ctx| {
            let mut images = Vec::new();
            for s2 in 0..rank {
                if s2 == s {
                    continue;
                }
                let delta = e.twists[s2][ctx.factor] - e.twists[s][ctx.factor];
                let factor = twist_power(&ctx.dst_mult, &ctx.dst_inv, delta);
                let w_dst =
                    Polynomial::var(&ctx.dst_loc, ratio_pos[chart_of(ctx.dst_chart, s)][s2]);
                images.push(&factor * &w_dst);
            }
            Ok(images)
        })?;
        for mut g in more {
            g.left = chart_of(g.left, s);
            g.right = chart_of(g.right, s);
            gluings.push(g);
        }
    }

    // diagonal overlaps (different base chart and summand) are composites
    let atlas = super::compose::close_gluings(&Atlas::new(charts, gluings)?)?;
    Ok(ProjBundle { atlas, bundle: e.clone(), pairs, ratio_pos })
}

/// Context handed to fiber-image callbacks while extending a base
/// transition between charts of one projective factor.
pub(crate) struct FiberCtx {
    pub factor: usize,
    pub dst_chart: usize,
    pub dst_loc: RingRef,
    /// The multiplier on the destination side, `X_src/X_dst`, embedded in
    /// the destination localization.
    pub dst_mult: Polynomial,
    /// Its inverse (the localization variable).
    pub dst_inv: Polynomial,
}

/// Builds the base gluings for `charts` (whose rings extend the base chart
/// rings by fiber variables), asking `fiber_images` for the images of the
/// source chart's fiber variables in the destination localization.
fn build_gluings<F>(
    base: &BaseSpace,
    indices: &[Vec<usize>],
    charts: &[Chart],
    fiber_images: F,
) -> Result<Vec<Gluing>>
where
    F: Fn(&FiberCtx) -> Result<Vec<Polynomial>>,
{
    let mut gluings = Vec::new();
    for (li, lm) in indices.iter().enumerate() {
        for (ri, rm) in indices.iter().enumerate().skip(li + 1) {
            let diff: Vec<usize> = (0..lm.len()).filter(|&f| lm[f] != rm[f]).collect();
            if diff.len() != 1 {
                continue;
            }
            let f = diff[0];
            let (a, b) = (lm[f], rm[f]);
            let lring = &charts[li].ring;
            let rring = &charts[ri].ring;
            let nbase_l = base.chart_vars(lm).len();
            let nbase_r = base.chart_vars(rm).len();

            let left_mult = Polynomial::var(lring, base.var_position(lm, f, b));
            let right_mult = Polynomial::var(rring, base.var_position(rm, f, a));
            let (lloc, _, linv) = charts[li].localized(&left_mult)?;
            let (rloc, _, rinv) = charts[ri].localized(&right_mult)?;
            let w_r = Polynomial::var(&rloc, rinv);
            let w_l = Polynomial::var(&lloc, linv);

            // base variable images, as in BaseSpace::atlas
            let mut left_images = Vec::new();
            for name in lring.var_names().iter().take(nbase_l) {
                left_images.push(base_transition_image(base, name, f, a, b, &rloc, &w_r)?);
            }
            let ctx = FiberCtx {
                factor: f,
                dst_chart: ri,
                dst_loc: rloc.clone(),
                dst_mult: Polynomial::var_named(&rloc, rring.var_name(base.var_position(rm, f, a)))?,
                dst_inv: w_r.clone(),
            };
            left_images.extend(fiber_images(&ctx)?);
            left_images.push(ctx.dst_mult.clone());

            let mut right_images = Vec::new();
            for name in rring.var_names().iter().take(nbase_r) {
                right_images.push(base_transition_image(base, name, f, b, a, &lloc, &w_l)?);
            }
            let ctx = FiberCtx {
                factor: f,
                dst_chart: li,
                dst_loc: lloc.clone(),
                dst_mult: Polynomial::var_named(&lloc, lring.var_name(base.var_position(lm, f, b)))?,
                dst_inv: w_l.clone(),
            };
            right_images.extend(fiber_images(&ctx)?);
            right_images.push(ctx.dst_mult.clone());

            gluings.push(Gluing::build(
                charts,
                li,
                ri,
                left_mult,
                right_mult,
                left_images,
                right_images,
            )?);
        }
    }
    Ok(gluings)
}

/// Image of a base chart variable under the factor-`f` transition from
/// the chart inverting `a` to the chart inverting `b`.
fn base_transition_image(
    base: &BaseSpace,
    name: &str,
    f: usize,
    a: usize,
    b: usize,
    dst_loc: &RingRef,
    w: &Polynomial,
) -> Result<Polynomial> {
    let single = base.proj_dims.len() == 1;
    let d = base.proj_dims[f];
    for k in 0..=d {
        if k != a && super::spaces::proj_var_name_pub(single, f, d, a, k) == name {
            return if k == b {
                Ok(w.clone())
            } else {
                let xkb = Polynomial::var_named(
                    dst_loc,
                    &super::spaces::proj_var_name_pub(single, f, d, b, k),
                )?;
                Ok(&xkb * w)
            };
        }
    }
    Polynomial::var_named(dst_loc, name)
}
