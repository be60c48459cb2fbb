//! Standard atlases: affine spaces, projective spaces, products, and the
//! structured bases (products of projective spaces and affine factors)
//! that twisted-sum bundles live over.

use super::atlas::{Atlas, Chart, Gluing};
use super::subscheme::ClosedSubscheme;
use crate::idealcalc::Ideal;
use crate::polycore::{PolyRing, Polynomial, RingRef};
use crate::{Error, Result};

/// 𝔸ⁿ as a single chart. Variables are named x, y, z for n ≤ 3 and
/// x1,…,xn otherwise.
pub fn affine_space(n: usize) -> Result<Atlas> {
    let names = affine_names(n);
    affine_with(&names.iter().map(|s| s.as_str()).collect::<Vec<_>>())
}

pub fn affine_names(n: usize) -> Vec<String> {
    match n {
        0 => Vec::new(),
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// 𝔸ⁿ with explicit variable names.
pub fn affine_with(names: &[&str]) -> Result<Atlas> {
    let ring = PolyRing::new(names.to_vec())?;
    Ok(Atlas::single(Chart::new("A", &ring, Ideal::zero(&ring))?))
}

/// ℙⁿ with its n+1 standard charts and monomial transitions.
pub fn projective_space(n: usize) -> Result<Atlas> {
    BaseSpace::proj(n).atlas()
}

/// A product base: affine coordinates plus a list of projective factors.
#[derive(Clone, Debug)]
pub struct BaseSpace {
    pub affine: Vec<String>,
    pub proj_dims: Vec<usize>,
}

/// The chart var holding homogeneous coordinate `k` of a factor in the
/// chart where coordinate `i` is inverted (requires `k != i`).
pub(crate) fn proj_var_name_pub(single: bool, factor: usize, dim: usize, i: usize, k: usize) -> String {
    proj_var_name(single, factor, dim, i, k)
}

fn proj_var_name(single: bool, factor: usize, dim: usize, i: usize, k: usize) -> String {
    debug_assert_ne!(i, k);
    if dim == 1 {
        // chart 0 inverts coordinate 0 and sees t = X1/X0; chart 1 sees s = X0/X1
        let name = if i == 0 { "t" } else { "s" };
        if single {
            name.to_string()
        } else {
            format!("{name}{factor}")
        }
    } else if single {
        format!("x{k}_{i}")
    } else {
        format!("p{factor}x{k}_{i}")
    }
}

impl BaseSpace {
    pub fn point() -> BaseSpace {
        BaseSpace { affine: Vec::new(), proj_dims: Vec::new() }
    }

    pub fn affine(names: &[&str]) -> BaseSpace {
        BaseSpace { affine: names.iter().map(|s| s.to_string()).collect(), proj_dims: Vec::new() }
    }

    pub fn proj(n: usize) -> BaseSpace {
        BaseSpace { affine: Vec::new(), proj_dims: vec![n] }
    }

    pub fn with_proj(mut self, n: usize) -> BaseSpace {
        self.proj_dims.push(n);
        self
    }

    pub fn num_factors(&self) -> usize {
        self.proj_dims.len()
    }

    /// All chart multi-indices, lexicographically.
    pub fn chart_indices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &d in &self.proj_dims {
            let mut next = Vec::new();
            for idx in &out {
                for i in 0..=d {
                    let mut e = idx.clone();
                    e.push(i);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    pub fn chart_label(&self, multi: &[usize]) -> String {
        let mut parts = Vec::new();
        if !self.affine.is_empty() {
            parts.push("A".to_string());
        }
        let single = self.proj_dims.len() == 1 && self.affine.is_empty();
        for (f, &i) in multi.iter().enumerate() {
            if single {
                parts.push(format!("U{i}"));
            } else {
                parts.push(format!("U{f}.{i}"));
            }
        }
        if parts.is_empty() {
            parts.push("pt".to_string());
        }
        parts.join("*")
    }

    fn single_naming(&self) -> bool {
        self.proj_dims.len() == 1
    }

    /// Variable names of the chart at `multi`: affine names first, then
    /// each factor's chart coordinates in homogeneous-index order.
    pub fn chart_vars(&self, multi: &[usize]) -> Vec<String> {
        let single = self.single_naming();
        let mut vars = self.affine.clone();
        for (f, &i) in multi.iter().enumerate() {
            let d = self.proj_dims[f];
            for k in 0..=d {
                if k != i {
                    vars.push(proj_var_name(single, f, d, i, k));
                }
            }
        }
        vars
    }

    /// Position of factor `f`'s coordinate `k` in the chart at `multi`.
    pub fn var_position(&self, multi: &[usize], f: usize, k: usize) -> usize {
        let mut pos = self.affine.len();
        for g in 0..f {
            pos += self.proj_dims[g];
        }
        let i = multi[f];
        assert_ne!(k, i, "coordinate {k} is inverted in this chart");
        pos + if k < i { k } else { k - 1 }
    }

    pub fn rings(&self) -> Result<Vec<RingRef>> {
        self.chart_indices()
            .iter()
            .map(|m| PolyRing::new(self.chart_vars(m)))
            .collect()
    }

    /// Builds the atlas: one chart per multi-index, with gluings between
    /// charts differing in exactly one factor coordinate.
    pub fn atlas(&self) -> Result<Atlas> {
        let indices = self.chart_indices();
        let rings = self.rings()?;
        let charts = indices
            .iter()
            .zip(&rings)
            .map(|(m, r)| Chart::new(self.chart_label(m), r, Ideal::zero(r)))
            .collect::<Result<Vec<_>>>()?;

        let mut gluings = Vec::new();
        for (li, lm) in indices.iter().enumerate() {
            for (ri, rm) in indices.iter().enumerate().skip(li + 1) {
                let diff: Vec<usize> =
                    (0..lm.len()).filter(|&f| lm[f] != rm[f]).collect();
                if diff.len() != 1 {
                    continue;
                }
                let f = diff[0];
                let (a, b) = (lm[f], rm[f]);
                // left chart inverts coordinate a, right chart coordinate b
                let lring = &rings[li];
                let rring = &rings[ri];
                let left_mult = Polynomial::var(lring, self.var_position(lm, f, b));
                let right_mult = Polynomial::var(rring, self.var_position(rm, f, a));
                let (lloc, _, linv) = charts[li].localized(&left_mult)?;
                let (rloc, _, rinv) = charts[ri].localized(&right_mult)?;

                // images of left-local variables in the right localization
                let mut left_images = Vec::new();
                let w_r = Polynomial::var(&rloc, rinv);
                for name in lring.var_names() {
                    left_images.push(self.transition_image(
                        name, lm, rm, f, a, b, &rloc, &w_r,
                    )?);
                }
                // left inverse variable 1/(X_b/X_a) = X_a/X_b
                left_images.push(Polynomial::var_named(&rloc, rring.var_name(self.var_position(rm, f, a)))?);

                let mut right_images = Vec::new();
                let w_l = Polynomial::var(&lloc, linv);
                for name in rring.var_names() {
                    right_images.push(self.transition_image(
                        name, rm, lm, f, b, a, &lloc, &w_l,
                    )?);
                }
                right_images.push(Polynomial::var_named(&lloc, lring.var_name(self.var_position(lm, f, b)))?);

                gluings.push(Gluing::build(
                    &charts,
                    li,
                    ri,
                    left_mult,
                    right_mult,
                    left_images,
                    right_images,
                )?);
            }
        }
        Atlas::new(charts, gluings)
    }

    /// Image of a source chart variable under the factor-`f` transition
    /// from the chart inverting `a` to the chart inverting `b`; `w` is the
    /// inverse of the target-side multiplier `X_a/X_b`.
    #[allow(clippy::too_many_arguments)]
    fn transition_image(
        &self,
        name: &str,
        src_multi: &[usize],
        dst_multi: &[usize],
        f: usize,
        a: usize,
        b: usize,
        dst_loc: &RingRef,
        w: &Polynomial,
    ) -> Result<Polynomial> {
        let single = self.single_naming();
        let d = self.proj_dims[f];
        // Is it a factor-f coordinate X_k/X_a?
        for k in 0..=d {
            if k != a && proj_var_name(single, f, d, a, k) == name {
                return if k == b {
                    Ok(w.clone())
                } else {
                    // X_k/X_a = (X_k/X_b) · w
                    let xkb = Polynomial::var_named(
                        dst_loc,
                        &proj_var_name(single, f, d, b, k),
                    )?;
                    Ok(&xkb * w)
                };
            }
        }
        let _ = (src_multi, dst_multi);
        // affine variables and other factors' coordinates are untouched
        Polynomial::var_named(dst_loc, name)
    }

    /// The point `0` of a ℙ¹ factor (homogeneous [1:0]): cut out by `t`
    /// in charts inverting coordinate 0 and empty elsewhere.
    pub fn proj_point_zero(&self, atlas: &Atlas, f: usize) -> Result<ClosedSubscheme> {
        if self.proj_dims[f] != 1 {
            return Err(Error::InvalidInput("zero-point only on ℙ¹ factors".into()));
        }
        let indices = self.chart_indices();
        let mut ideals = Vec::new();
        for (ci, m) in indices.iter().enumerate() {
            let ring = &atlas.chart(ci).ring;
            if m[f] == 0 {
                let t = Polynomial::var(ring, self.var_position(m, f, 1));
                ideals.push(Ideal::new(ring, vec![t])?);
            } else {
                ideals.push(Ideal::unit(ring));
            }
        }
        ClosedSubscheme::new(atlas, ideals)
    }

    /// The section of a ℙ¹ factor at `1` (homogeneous [1:1]).
    pub fn proj_point_one(&self, atlas: &Atlas, f: usize) -> Result<ClosedSubscheme> {
        if self.proj_dims[f] != 1 {
            return Err(Error::InvalidInput("one-point only on ℙ¹ factors".into()));
        }
        let indices = self.chart_indices();
        let mut ideals = Vec::new();
        for (ci, m) in indices.iter().enumerate() {
            let ring = &atlas.chart(ci).ring;
            let k = if m[f] == 0 { 1 } else { 0 };
            let v = Polynomial::var(ring, self.var_position(m, f, k));
            ideals.push(Ideal::new(ring, vec![&v - &Polynomial::one(ring)])?);
        }
        ClosedSubscheme::new(atlas, ideals)
    }
}

/// A product of two atlases with chartwise products and induced gluings.
/// Right-hand variable names are primed on collision.
#[derive(Clone, Debug)]
pub struct ProductAtlas {
    pub atlas: Atlas,
    /// (left chart, right chart) per product chart, in row-major order.
    pub pairs: Vec<(usize, usize)>,
    /// Per product chart: positions of the left chart's variables.
    pub left_pos: Vec<Vec<usize>>,
    /// Per product chart: positions of the right chart's variables.
    pub right_pos: Vec<Vec<usize>>,
}

impl ProductAtlas {
    pub fn chart_of(&self, left: usize, right: usize) -> usize {
        self.pairs
            .iter()
            .position(|&(l, r)| l == left && r == right)
            .expect("product chart")
    }

    /// Injects a polynomial from a left chart into a product chart ring.
    pub fn inject_left(&self, chart: usize, f: &Polynomial) -> Polynomial {
        let ring = self.atlas.chart(chart).ring.clone();
        f.embed(&ring, &self.left_pos[chart])
    }

    pub fn inject_right(&self, chart: usize, f: &Polynomial) -> Polynomial {
        let ring = self.atlas.chart(chart).ring.clone();
        f.embed(&ring, &self.right_pos[chart])
    }

    /// The product subscheme `a × b` (chartwise ideal sum of injections).
    pub fn product_subscheme(
        &self,
        a: &ClosedSubscheme,
        b: &ClosedSubscheme,
    ) -> Result<ClosedSubscheme> {
        let mut ideals = Vec::new();
        for (ci, &(l, r)) in self.pairs.iter().enumerate() {
            let ring = &self.atlas.chart(ci).ring;
            let mut gens: Vec<Polynomial> = a
                .ideal(l)
                .gens()
                .iter()
                .map(|g| self.inject_left(ci, g))
                .collect();
            gens.extend(b.ideal(r).gens().iter().map(|g| self.inject_right(ci, g)));
            ideals.push(Ideal::new(ring, gens)?);
        }
        ClosedSubscheme::new(&self.atlas, ideals)
    }
}

/// Chartwise product of two atlases.
pub fn product(a: &Atlas, b: &Atlas) -> Result<ProductAtlas> {
    let mut charts = Vec::new();
    let mut pairs = Vec::new();
    let mut left_pos = Vec::new();
    let mut right_pos = Vec::new();
    for (li, lc) in a.charts().iter().enumerate() {
        for (ri, rc) in b.charts().iter().enumerate() {
            let mut names: Vec<String> = lc.ring.var_names().to_vec();
            let mut rpos = Vec::new();
            for v in rc.ring.var_names() {
                let mut name = v.clone();
                while names.contains(&name) {
                    name.push('\'');
                }
                rpos.push(names.len());
                names.push(name);
            }
            let lpos: Vec<usize> = (0..lc.ring.num_vars()).collect();
            let ring = PolyRing::new(names)?;
            let mut gens: Vec<Polynomial> = lc
                .relations
                .gens()
                .iter()
                .map(|g| g.embed(&ring, &lpos))
                .collect();
            gens.extend(rc.relations.gens().iter().map(|g| g.embed(&ring, &rpos)));
            let label = format!("{}*{}", lc.label, rc.label);
            charts.push(Chart::new(label, &ring, Ideal::new(&ring, gens)?)?);
            pairs.push((li, ri));
            left_pos.push(lpos);
            right_pos.push(rpos);
        }
    }

    let chart_of = |l: usize, r: usize| l * b.charts().len() + r;
    let mut gluings = Vec::new();
    // left-factor gluings, right chart fixed
    for g in a.gluings() {
        for ri in 0..b.charts().len() {
            gluings.push(extend_gluing(
                &charts, &left_pos, &right_pos, g, chart_of(g.left, ri), chart_of(g.right, ri),
                true,
            )?);
        }
    }
    // right-factor gluings, left chart fixed
    for g in b.gluings() {
        for li in 0..a.charts().len() {
            gluings.push(extend_gluing(
                &charts, &right_pos, &left_pos, g, chart_of(li, g.left), chart_of(li, g.right),
                false,
            )?);
        }
    }

    let atlas = Atlas::new(charts, gluings)?;
    Ok(ProductAtlas { atlas, pairs, left_pos, right_pos })
}

/// Extends a factor gluing to product charts, identity on the other
/// factor's variables. `active_pos` locates the gluing factor's variables
/// in the product charts, `passive_pos` the other factor's.
fn extend_gluing(
    charts: &[Chart],
    active_pos: &[Vec<usize>],
    passive_pos: &[Vec<usize>],
    g: &Gluing,
    new_left: usize,
    new_right: usize,
    _left_factor: bool,
) -> Result<Gluing> {
    let lmul = g.left_mult.embed(&charts[new_left].ring, &active_pos[new_left]);
    let rmul = g.right_mult.embed(&charts[new_right].ring, &active_pos[new_right]);
    let (lloc, _, linv) = charts[new_left].localized(&lmul)?;
    let (rloc, _, rinv) = charts[new_right].localized(&rmul)?;

    // factor-local images, re-embedded: factor localization var -> product
    // localization var
    let old_lloc_n = g.left_to_right.source().num_vars();
    let old_rloc_n = g.left_to_right.target().num_vars();
    let mut embed_r: Vec<usize> = active_pos[new_right].clone();
    embed_r.push(rinv);
    debug_assert_eq!(embed_r.len(), old_rloc_n);
    let mut embed_l: Vec<usize> = active_pos[new_left].clone();
    embed_l.push(linv);
    debug_assert_eq!(embed_l.len(), old_lloc_n);

    let mut left_images = vec![Polynomial::zero(&rloc); lloc.num_vars()];
    // active factor variables + inverse var
    for (old, img) in g.left_to_right.images().iter().enumerate() {
        let pos = if old < old_lloc_n - 1 { active_pos[new_left][old] } else { linv };
        left_images[pos] = img.embed(&rloc, &embed_r);
    }
    // passive variables map identically
    for (old, &pl) in passive_pos[new_left].iter().enumerate() {
        let pr = passive_pos[new_right][old];
        left_images[pl] = Polynomial::var(&rloc, pr);
    }

    let mut right_images = vec![Polynomial::zero(&lloc); rloc.num_vars()];
    for (old, img) in g.right_to_left.images().iter().enumerate() {
        let pos = if old < old_rloc_n - 1 { active_pos[new_right][old] } else { rinv };
        right_images[pos] = img.embed(&lloc, &embed_l);
    }
    for (old, &pr) in passive_pos[new_right].iter().enumerate() {
        let pl = passive_pos[new_left][old];
        right_images[pr] = Polynomial::var(&lloc, pl);
    }

    Gluing::build(charts, new_left, new_right, lmul, rmul, left_images, right_images)
}
