//! Closed-formula structure constants of the Schubert basis, Chevalley
//! coefficients, and expansions into the Schubert basis, in ordinary and
//! equivariant flavors for full and partial flag varieties.
//!
//! The ordinary constants are alternating sums of augmented Demazure values
//! of products of lift representatives; the equivariant ones replace the
//! scalar lift by the tensor lift and keep whole polynomials. Parabolic
//! variants reweight by the Moebius function of the coset poset. Integrality
//! of every ordinary entry is asserted, not assumed: the lift carries a
//! denominator of `1/|W|` and a non-integer entry means the build is broken.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::demazure::demazure;
use crate::error::{Error, Result};
use crate::laurent::{rat_to_i64, LaurentPoly, Rat};
use crate::lifts::{OrdinaryLift, TensorLift};
use crate::rootdata::Weight;
use crate::weyl::{ElemId, ParabolicSubset};
use crate::GroupData;

fn alternating_sum_rows(gd: &GroupData, t: &[Rat]) -> Vec<Rat> {
    let wg = &gd.wg;
    (0..wg.order())
        .map(|z| {
            let mut acc = Rat::zero();
            for w in 0..wg.order() {
                if wg.bruhat_leq(w, z) {
                    let sign = (wg.length(z) - wg.length(w)) % 2 == 0;
                    if sign {
                        acc += &t[w];
                    } else {
                        acc -= &t[w];
                    }
                }
            }
            acc
        })
        .collect()
}

fn alternating_sum_rows_poly(gd: &GroupData, t: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let wg = &gd.wg;
    (0..wg.order())
        .map(|z| {
            let mut acc = LaurentPoly::zero(gd.rank());
            for w in 0..wg.order() {
                if wg.bruhat_leq(w, z) {
                    if (wg.length(z) - wg.length(w)) % 2 == 0 {
                        acc = acc.add(&t[w]);
                    } else {
                        acc = acc.sub(&t[w]);
                    }
                }
            }
            acc
        })
        .collect()
}

fn collect_integer_map(values: Vec<Rat>) -> BTreeMap<ElemId, i64> {
    values
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(z, v)| {
            let n = rat_to_i64(&v).expect("ordinary structure constant must be an integer");
            (z, n)
        })
        .collect()
}

/// `c^z_{x,y}`: coefficients of the product of two opposite Schubert classes
/// in ordinary K-theory; zero entries are omitted.
pub fn ordinary_constants(
    gd: &GroupData,
    ol: &OrdinaryLift,
    x: ElemId,
    y: ElemId,
) -> BTreeMap<ElemId, i64> {
    let product = ol
        .l_schubert(gd, x)
        .mul(ol.l_schubert(gd, y))
        .mul_monomial(&gd.rs.rho, &Rat::one());
    let t: Vec<Rat> = (0..gd.wg.order())
        .map(|w| demazure(gd, &product, w).augmentation())
        .collect();
    collect_integer_map(alternating_sum_rows(gd, &t))
}

/// `q^{lambda}_{x,y}`: ordinary Chevalley coefficients of a line-bundle class
/// against a Schubert class, as a map over `y`.
pub fn ordinary_chevalley(
    gd: &GroupData,
    ol: &OrdinaryLift,
    lambda: &Weight,
    x: ElemId,
) -> BTreeMap<ElemId, i64> {
    let target = ol
        .l_schubert(gd, x)
        .mul_monomial(lambda, &Rat::one());
    let t: Vec<Rat> = (0..gd.wg.order())
        .map(|w| demazure(gd, &target, w).augmentation())
        .collect();
    collect_integer_map(alternating_sum_rows(gd, &t))
}

/// `d^z_{x,y}`: partial-flag structure constants for `x, y, z` in `W^I`,
/// weighted by the Moebius function of the coset poset.
pub fn ordinary_partial(
    gd: &GroupData,
    ol: &OrdinaryLift,
    i_set: &ParabolicSubset,
    x: ElemId,
    y: ElemId,
) -> Result<BTreeMap<ElemId, i64>> {
    let reps = gd.wg.min_coset_reps(i_set);
    for v in [x, y] {
        if !reps.contains(&v) {
            return Err(Error::NotMinimalRep(gd.wg.render(v), format!("{i_set}")));
        }
    }
    let product = ol
        .l_schubert(gd, x)
        .mul(ol.l_schubert(gd, y))
        .mul_monomial(&gd.rs.rho, &Rat::one());
    let mut out = BTreeMap::new();
    for &z in &reps {
        let mut acc = Rat::zero();
        for &w in &reps {
            if gd.wg.bruhat_leq(w, z) {
                let mu = gd.wg.mobius(i_set, w, z)?;
                if mu != 0 {
                    let val = demazure(gd, &product, w).augmentation();
                    if mu > 0 {
                        acc += val;
                    } else {
                        acc -= val;
                    }
                }
            }
        }
        if !acc.is_zero() {
            out.insert(
                z,
                rat_to_i64(&acc).expect("partial structure constant must be an integer"),
            );
        }
    }
    Ok(out)
}

/// Equivariant `C^z_{x,y}` as polynomials in the torus characters.
pub fn equivariant_constants(
    gd: &GroupData,
    tl: &TensorLift,
    x: ElemId,
    y: ElemId,
) -> BTreeMap<ElemId, LaurentPoly> {
    let t = equivariant_inner_sums(gd, tl, x, y);
    alternating_sum_rows_poly(gd, &t)
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// The shared inner sums `T_w = sum_{i,j} a_i a_j e^{rho} L_w(...)`.
fn equivariant_inner_sums(
    gd: &GroupData,
    tl: &TensorLift,
    x: ElemId,
    y: ElemId,
) -> Vec<LaurentPoly> {
    let n = gd.wg.order();
    let rho = &gd.rs.rho;
    let mut t = vec![LaurentPoly::zero(gd.rank()); n];
    for i in 0..n {
        for j in 0..n {
            let aa = tl.a[i].mul(&tl.a[j]);
            if aa.is_zero() {
                continue;
            }
            let inner = tl.lb[x][i].mul(&tl.lb[y][j]).mul_monomial(rho, &Rat::one());
            for (w, slot) in t.iter_mut().enumerate() {
                let lw = demazure(gd, &inner, w).mul_monomial(rho, &Rat::one());
                *slot = slot.add(&aa.mul(&lw));
            }
        }
    }
    t
}

/// Equivariant Chevalley coefficients `Q^{lambda}_{x,y}` as a map over `y`.
pub fn equivariant_chevalley(
    gd: &GroupData,
    tl: &TensorLift,
    lambda: &Weight,
    x: ElemId,
) -> BTreeMap<ElemId, LaurentPoly> {
    let n = gd.wg.order();
    let rho = &gd.rs.rho;
    let mut t = vec![LaurentPoly::zero(gd.rank()); n];
    for i in 0..n {
        if tl.a[i].is_zero() {
            continue;
        }
        let inner = tl.lb[x][i].mul_monomial(lambda, &Rat::one());
        for (w, slot) in t.iter_mut().enumerate() {
            let lw = demazure(gd, &inner, w).mul_monomial(rho, &Rat::one());
            *slot = slot.add(&tl.a[i].mul(&lw));
        }
    }
    alternating_sum_rows_poly(gd, &t)
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .collect()
}

/// Equivariant partial-flag constants `D^z_{x,y}`.
pub fn equivariant_partial(
    gd: &GroupData,
    tl: &TensorLift,
    i_set: &ParabolicSubset,
    x: ElemId,
    y: ElemId,
) -> Result<BTreeMap<ElemId, LaurentPoly>> {
    let reps = gd.wg.min_coset_reps(i_set);
    for v in [x, y] {
        if !reps.contains(&v) {
            return Err(Error::NotMinimalRep(gd.wg.render(v), format!("{i_set}")));
        }
    }
    let t = equivariant_inner_sums(gd, tl, x, y);
    let mut out = BTreeMap::new();
    for &z in &reps {
        let mut acc = LaurentPoly::zero(gd.rank());
        for &w in &reps {
            if gd.wg.bruhat_leq(w, z) {
                let mu = gd.wg.mobius(i_set, w, z)?;
                match mu {
                    1 => acc = acc.add(&t[w]),
                    -1 => acc = acc.sub(&t[w]),
                    _ => {}
                }
            }
        }
        if !acc.is_zero() {
            out.insert(z, acc);
        }
    }
    Ok(out)
}

/// Coefficients of the class of `f` (a Laurent polynomial standing for a sum
/// of line bundles) in the opposite Schubert basis of ordinary K-theory.
pub fn expand_line_bundle(gd: &GroupData, f: &LaurentPoly) -> BTreeMap<ElemId, i64> {
    let target = f.mul_monomial(&gd.rs.rho.neg(), &Rat::one());
    let t: Vec<Rat> = (0..gd.wg.order())
        .map(|w| demazure(gd, &target, w).augmentation())
        .collect();
    collect_integer_map(alternating_sum_rows(gd, &t))
}

/// The dual-basis expansion: the signed indicator of the upper order ideal
/// above `w`. Its Moebius inverse recovers the upper-set sum.
pub fn xi_expansion(gd: &GroupData, w: ElemId) -> BTreeMap<ElemId, i64> {
    (0..gd.wg.order())
        .filter(|&wp| gd.wg.bruhat_leq(w, wp))
        .map(|wp| {
            let sign = if (gd.wg.length(wp) - gd.wg.length(w)) % 2 == 0 {
                1
            } else {
                -1
            };
            (wp, sign)
        })
        .collect()
}

/// Table flavors for serialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFlavor {
    Ordinary,
    Equivariant,
}

impl TableFlavor {
    pub fn name(self) -> &'static str {
        match self {
            TableFlavor::Ordinary => "ordinary",
            TableFlavor::Equivariant => "equivariant",
        }
    }
}

/// One table value: an integer for ordinary tables, a polynomial otherwise.
#[derive(Clone, PartialEq, Debug)]
pub enum TableValue {
    Int(i64),
    Poly(LaurentPoly),
}

impl TableValue {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            TableValue::Int(n) => serde_json::json!(n),
            TableValue::Poly(p) => p.to_json(),
        }
    }

    /// Coefficientwise augmentation, for forgetful-compatibility checks.
    pub fn augment(&self) -> Rat {
        match self {
            TableValue::Int(n) => Rat::new((*n).into(), 1.into()),
            TableValue::Poly(p) => p.augmentation(),
        }
    }
}

/// A full structure-constant table with provenance metadata.
pub struct ConstantTable {
    pub group: String,
    pub flavor: TableFlavor,
    /// `None` for the full flag variety, otherwise the parabolic subset.
    pub parabolic: Option<ParabolicSubset>,
    pub entries: BTreeMap<(ElemId, ElemId, ElemId), TableValue>,
    pub convention: String,
    pub lift_source: String,
}

impl ConstantTable {
    pub fn to_json(&self, gd: &GroupData) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(x, y, z), v)| {
                serde_json::json!({
                    "x": gd.wg.render(x),
                    "y": gd.wg.render(y),
                    "z": gd.wg.render(z),
                    "value": v.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "group": self.group,
            "flavor": self.flavor.name(),
            "I": self.parabolic.as_ref().map(|i| format!("{i}")).unwrap_or_default(),
            "convention": self.convention,
            "lift": self.lift_source,
            "version": env!("CARGO_PKG_VERSION"),
            "entries": entries,
        })
    }
}

fn unordered_pairs(n: usize) -> Vec<(ElemId, ElemId)> {
    let mut pairs = Vec::with_capacity(n * (n + 1) / 2);
    for x in 0..n {
        for y in x..n {
            pairs.push((x, y));
        }
    }
    pairs
}

/// The full ordinary c-table; pairs are generated in parallel and mirrored
/// through the symmetry `c^z_{x,y} = c^z_{y,x}`.
pub fn ordinary_table(gd: &GroupData, ol: &OrdinaryLift) -> ConstantTable {
    let pairs = unordered_pairs(gd.wg.order());
    let rows = crate::par::par_map(pairs, |(x, y)| {
        ((x, y), ordinary_constants(gd, ol, x, y))
    });
    let mut entries = BTreeMap::new();
    for ((x, y), row) in rows {
        for (z, v) in row {
            entries.insert((x, y, z), TableValue::Int(v));
            if x != y {
                entries.insert((y, x, z), TableValue::Int(v));
            }
        }
    }
    ConstantTable {
        group: gd.label().name().to_string(),
        flavor: TableFlavor::Ordinary,
        parabolic: None,
        entries,
        convention: crate::demazure::CONVENTION.fingerprint(),
        lift_source: "anti-invariant closed form".into(),
    }
}

/// The full equivariant C-table.
pub fn equivariant_table(gd: &GroupData, tl: &TensorLift) -> ConstantTable {
    let pairs = unordered_pairs(gd.wg.order());
    let rows = crate::par::par_map(pairs, |(x, y)| {
        ((x, y), equivariant_constants(gd, tl, x, y))
    });
    let mut entries = BTreeMap::new();
    for ((x, y), row) in rows {
        for (z, v) in row {
            entries.insert((x, y, z), TableValue::Poly(v.clone()));
            if x != y {
                entries.insert((y, x, z), TableValue::Poly(v));
            }
        }
    }
    ConstantTable {
        group: gd.label().name().to_string(),
        flavor: TableFlavor::Equivariant,
        parabolic: None,
        entries,
        convention: crate::demazure::CONVENTION.fingerprint(),
        lift_source: "steinberg tensor solve".into(),
    }
}

/// Full partial-flag table for a parabolic subset.
pub fn ordinary_partial_table(
    gd: &GroupData,
    ol: &OrdinaryLift,
    i_set: &ParabolicSubset,
) -> Result<ConstantTable> {
    let reps = gd.wg.min_coset_reps(i_set);
    let mut pairs = Vec::new();
    for (ai, &x) in reps.iter().enumerate() {
        for &y in reps.iter().skip(ai) {
            pairs.push((x, y));
        }
    }
    let rows = crate::par::par_map(pairs, |(x, y)| {
        ((x, y), ordinary_partial(gd, ol, i_set, x, y))
    });
    let mut entries = BTreeMap::new();
    for ((x, y), row) in rows {
        for (z, v) in row? {
            entries.insert((x, y, z), TableValue::Int(v));
            if x != y {
                entries.insert((y, x, z), TableValue::Int(v));
            }
        }
    }
    Ok(ConstantTable {
        group: gd.label().name().to_string(),
        flavor: TableFlavor::Ordinary,
        parabolic: Some(i_set.clone()),
        entries,
        convention: crate::demazure::CONVENTION.fingerprint(),
        lift_source: "anti-invariant closed form".into(),
    })
}
