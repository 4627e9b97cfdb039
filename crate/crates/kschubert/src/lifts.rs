//! Canonical lifts of Schubert classes.
//!
//! The ordinary lift is the closed-form scalar `u0 = det(w0) d / |W|` built
//! from the canonical anti-invariant; applying Demazure operators and
//! multiplying by `e^{rho}` produces representatives `r_v` of the opposite
//! Schubert classes in ordinary K-theory. The tensor lift has no closed form:
//! it is found by solving the Steinberg-matrix linear system over the
//! polynomial ring with fraction-free (Bareiss) elimination, and both lifts
//! are gated on their Kronecker-delta identities before being returned.

use num_traits::One;

use crate::demazure::demazure;
use crate::error::{Error, Result};
use crate::laurent::{anti_invariant, LaurentPoly, Rat, TensorElem};
use crate::rootdata::Weight;
use crate::weyl::{ElemId, ParabolicSubset};
use crate::GroupData;

/// Largest group order for which the tensor lift runs without the explicit
/// opt-in; the symbolic solve is the most expensive step in the crate.
pub const TENSOR_LIFT_DEFAULT_CAP: usize = 12;

/// The ordinary lift `u0` and the Schubert representatives derived from it.
pub struct OrdinaryLift {
    /// `det(w0) * d / |W|`.
    pub u0: LaurentPoly,
    /// `L_w(u0)` for every `w`, in enumeration order.
    pub lw_u0: Vec<LaurentPoly>,
    /// `r_v = L_{v^{-1} w0}(u0) * e^{rho}` for every `v`.
    pub rv: Vec<LaurentPoly>,
}

impl OrdinaryLift {
    pub fn build(gd: &GroupData) -> Result<OrdinaryLift> {
        let wg = &gd.wg;
        let d = anti_invariant(&gd.rs, wg)?;
        let det_w0 = wg.det(wg.longest_element());
        let order = wg.order() as i64;
        let u0 = d.scale(&Rat::new(det_w0.into(), order.into()));

        let lw_u0: Vec<LaurentPoly> = (0..wg.order()).map(|w| demazure(gd, &u0, w)).collect();
        for (w, lw) in lw_u0.iter().enumerate() {
            let expected = i64::from(w == wg.longest_element());
            if lw.augmentation() != Rat::new(expected.into(), 1.into()) {
                return Err(Error::DeltaCheckFailed(wg.render(w)));
            }
        }
        // L_{w0}(u0) collapses to e^{-rho} exactly, not just in augmentation.
        if lw_u0[wg.longest_element()] != LaurentPoly::exp(&gd.rs.rho.neg()) {
            return Err(Error::DeltaCheckFailed(wg.render(wg.longest_element())));
        }

        let rv: Vec<LaurentPoly> = (0..wg.order())
            .map(|v| {
                let idx = wg.mult(wg.inverse(v), wg.longest_element());
                lw_u0[idx].mul_monomial(&gd.rs.rho, &Rat::one())
            })
            .collect();

        Ok(OrdinaryLift { u0, lw_u0, rv })
    }

    pub fn r(&self, v: ElemId) -> &LaurentPoly {
        &self.rv[v]
    }

    /// `L_{x^{-1} w0}(u0)`, the un-shifted Schubert numerator.
    pub fn l_schubert(&self, gd: &GroupData, x: ElemId) -> &LaurentPoly {
        let wg = &gd.wg;
        &self.lw_u0[wg.mult(wg.inverse(x), wg.longest_element())]
    }
}

/// Steinberg exponent `p_w = w(sum of omega_j over simple roots sent negative by w)`.
pub fn steinberg_exponent(gd: &GroupData, w: ElemId) -> Weight {
    let rank = gd.rank();
    let mut sum = Weight::zero(rank);
    for j in 0..rank {
        let image = gd.wg.act_weight(w, &gd.rs.simple_roots[j]);
        if gd.rs.is_positive_root(&image.neg()) {
            let mut omega = Weight::zero(rank);
            omega.0[j] = 1;
            sum = sum.add(&omega);
        }
    }
    gd.wg.act_weight(w, &sum)
}

/// Steinberg basis element `f_v` of the `W_I`-invariants: the orbit sum
/// (without multiplicity) of `v^{-1} q_v` under `W_I`, where `q_v` collects
/// the fundamental weights whose simple root is sent negative by `v^{-1}`.
pub fn steinberg_orbit_sum(
    gd: &GroupData,
    v: ElemId,
    i_set: &ParabolicSubset,
) -> Result<LaurentPoly> {
    let wg = &gd.wg;
    if !wg.min_coset_reps(i_set).contains(&v) {
        return Err(Error::NotMinimalRep(wg.render(v), format!("{i_set}")));
    }
    let rank = gd.rank();
    let v_inv = wg.inverse(v);
    let mut q = Weight::zero(rank);
    for j in 0..rank {
        let image = wg.act_weight(v_inv, &gd.rs.simple_roots[j]);
        if gd.rs.is_positive_root(&image.neg()) {
            q.0[j] += 1;
        }
    }
    let base = wg.act_weight(v_inv, &q);
    let mut orbit = std::collections::BTreeSet::new();
    for &x in &wg.subgroup(i_set) {
        orbit.insert(wg.act_weight(x, &base));
    }
    Ok(LaurentPoly::from_terms(
        rank,
        orbit.into_iter().map(|mu| (mu, Rat::one())),
    ))
}

/// Divide a whole row by its unit content: the coordinatewise minimum
/// exponent monomial and the rational content. Units do not disturb the
/// exact divisions of fraction-free elimination and keep entries small.
fn strip_row_content(rank: usize, row: &mut [LaurentPoly]) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero as _;
    let mut mins = vec![i64::MAX; rank];
    let mut num_gcd = BigInt::ZERO;
    let mut den_lcm = BigInt::from(1);
    let mut any = false;
    for entry in row.iter() {
        for (lambda, c) in entry.terms() {
            any = true;
            for (m, &k) in mins.iter_mut().zip(lambda.coords()) {
                *m = (*m).min(k);
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    if !any || num_gcd.is_zero() {
        return;
    }
    let scale = Rat::new(den_lcm, num_gcd);
    let shift = Weight(mins).neg();
    for entry in row.iter_mut() {
        *entry = entry.mul_monomial(&shift, &scale);
    }
}

/// Solve `A x = b` over the Laurent ring by one augmented fraction-free
/// (Bareiss) forward elimination and exact back substitution. Returns `None`
/// when the matrix is singular; a non-polynomial solution entry surfaces as
/// `Some(vec with None at that position)`.
fn bareiss_solve(
    rank: usize,
    a: &[Vec<LaurentPoly>],
    b: &[LaurentPoly],
) -> Option<Vec<Option<LaurentPoly>>> {
    let n = a.len();
    let mut aug: Vec<Vec<LaurentPoly>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            strip_row_content(rank, &mut r);
            r
        })
        .collect();
    let mut prev = LaurentPoly::one(rank);
    for k in 0..n.saturating_sub(1) {
        if aug[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !aug[i][k].is_zero())?;
            aug.swap(k, swap);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let num = aug[k][k].mul(&aug[i][j]).sub(&aug[i][k].mul(&aug[k][j]));
                aug[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss interior division is exact in an integral domain");
            }
            aug[i][k] = LaurentPoly::zero(rank);
            strip_row_content(rank, &mut aug[i][k + 1..=n]);
        }
        prev = aug[k][k].clone();
    }
    if aug[n - 1][n - 1].is_zero() {
        return None;
    }
    // Back substitution: each quotient is exact precisely when the solution
    // entry is an honest polynomial.
    let mut x: Vec<Option<LaurentPoly>> = vec![None; n];
    for k in (0..n).rev() {
        let mut num = aug[k][n].clone();
        let mut poly_so_far = true;
        for j in k + 1..n {
            match &x[j] {
                Some(xj) => num = num.sub(&aug[k][j].mul(xj)),
                None => poly_so_far = false,
            }
        }
        if poly_so_far {
            x[k] = num.exact_div(&aug[k][k]);
        }
    }
    Some(x)
}

/// Fraction-free determinant over the Laurent ring. Bareiss elimination with
/// row pivoting; every interior division is exact in the polynomial ring.
pub fn bareiss_det(rank: usize, mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(rank);
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(rank);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero(rank);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss interior division is exact in an integral domain");
            }
            m[i][k] = LaurentPoly::zero(rank);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// The tensor lift: paired coefficient lists, the lifted top class, and the
/// lifted Schubert classes.
pub struct TensorLift {
    pub a: Vec<LaurentPoly>,
    pub b: Vec<LaurentPoly>,
    /// `v0 = sum_i a_i (x) b_i`, a representative of the top class.
    pub v0: TensorElem,
    /// `u0 = v0 * (1 (x) e^{-rho})`.
    pub u0: TensorElem,
    /// `U_w = L-tensor_{w^{-1} w0}(u0) * (1 (x) e^{rho})` for every `w`.
    pub classes: Vec<TensorElem>,
    /// `lb[x][i] = L_{x^{-1} w0}(b_i e^{-rho})`, the shared subexpressions of
    /// every equivariant table.
    pub lb: Vec<Vec<LaurentPoly>>,
}

impl TensorLift {
    pub fn build(gd: &GroupData) -> Result<TensorLift> {
        Self::build_with_options(gd, false)
    }

    pub fn build_with_options(gd: &GroupData, allow_large: bool) -> Result<TensorLift> {
        let wg = &gd.wg;
        let n = wg.order();
        if n > TENSOR_LIFT_DEFAULT_CAP && !allow_large {
            return Err(Error::GroupTooLarge(n));
        }
        let rank = gd.rank();
        let rho = &gd.rs.rho;

        let exponents: Vec<Weight> = (0..n).map(|w| steinberg_exponent(gd, w)).collect();
        // matrix[w'][w] = L_{w'}(e^{p_w})
        let matrix: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|wp| {
                (0..n)
                    .map(|w| demazure(gd, &LaurentPoly::exp(&exponents[w]), wp))
                    .collect()
            })
            .collect();

        // Right-hand side: e^{-rho} on the top-cell row, zero elsewhere.
        let rhs: Vec<LaurentPoly> = (0..n)
            .map(|wp| {
                if wp == wg.longest_element() {
                    LaurentPoly::exp(&rho.neg())
                } else {
                    LaurentPoly::zero(rank)
                }
            })
            .collect();
        let solution = bareiss_solve(rank, &matrix, &rhs).ok_or(Error::SingularMatrix)?;
        let a: Vec<LaurentPoly> = solution
            .into_iter()
            .enumerate()
            .map(|(w, q)| q.ok_or_else(|| Error::NonPolynomialSolution(wg.render(w))))
            .collect::<Result<_>>()?;

        let b: Vec<LaurentPoly> = exponents
            .iter()
            .map(|p| LaurentPoly::exp(&rho.add(p)))
            .collect();

        // Gate on the Kronecker identity before assembling anything.
        for w in 0..n {
            let mut acc = LaurentPoly::zero(rank);
            for i in 0..n {
                let lw = demazure(gd, &LaurentPoly::exp(&exponents[i]), w);
                acc = acc.add(&a[i].mul(&lw.mul_monomial(rho, &Rat::one())));
            }
            let expected = if w == wg.longest_element() {
                LaurentPoly::one(rank)
            } else {
                LaurentPoly::zero(rank)
            };
            if acc != expected {
                return Err(Error::DeltaCheckFailed(wg.render(w)));
            }
        }

        let mut v0 = TensorElem::zero(rank);
        for i in 0..n {
            v0 = v0.add(&TensorElem::pure(&a[i], &b[i]));
        }
        let u0 = v0.mul_second_monomial(&rho.neg());

        let lb: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|x| {
                let op = wg.mult(wg.inverse(x), wg.longest_element());
                (0..n)
                    .map(|i| demazure(gd, &LaurentPoly::exp(&exponents[i]), op))
                    .collect()
            })
            .collect();

        let classes: Vec<TensorElem> = (0..n)
            .map(|x| {
                let mut acc = TensorElem::zero(rank);
                for i in 0..n {
                    let second = lb[x][i].mul_monomial(rho, &Rat::one());
                    acc = acc.add(&TensorElem::pure(&a[i], &second));
                }
                acc
            })
            .collect();

        Ok(TensorLift {
            a,
            b,
            v0,
            u0,
            classes,
            lb,
        })
    }

    pub fn class(&self, w: ElemId) -> &TensorElem {
        &self.classes[w]
    }
}

/// One row of the invariance report: for `v` in `W^I`, whether `r_v` is
/// `W_I`-invariant and whether the second slot of `U_v` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceRecord {
    pub mask: u32,
    pub v: ElemId,
    pub ordinary_invariant: bool,
    pub tensor_invariant: bool,
}

/// Check invariance for every subset I and every minimal representative.
pub fn invariance_report(
    gd: &GroupData,
    ol: &OrdinaryLift,
    tl: Option<&TensorLift>,
) -> Vec<InvarianceRecord> {
    let rank = gd.rank();
    let mut out = Vec::new();
    for mask in 0..(1u32 << rank) {
        let i_set = ParabolicSubset::from_mask(rank, mask);
        for v in gd.wg.min_coset_reps(&i_set) {
            let ordinary_invariant = ol.rv[v].is_invariant(&gd.wg, &i_set);
            let tensor_invariant = match tl {
                None => true,
                Some(tl) => i_set.indices().iter().all(|&j| {
                    tl.classes[v].act_second(&gd.wg, gd.wg.simple_reflection(j))
                        == tl.classes[v]
                }),
            };
            out.push(InvarianceRecord {
                mask,
                v,
                ordinary_invariant,
                tensor_invariant,
            });
        }
    }
    out
}

/// Ordinary lift JSON per the external schema.
pub fn ordinary_lift_json(gd: &GroupData, ol: &OrdinaryLift) -> serde_json::Value {
    serde_json::json!({
        "group": gd.label().name(),
        "convention": crate::demazure::CONVENTION.fingerprint(),
        "u0": ol.u0.to_json(),
        "rv": (0..gd.wg.order()).map(|v| serde_json::json!({
            "v": gd.wg.render(v),
            "poly": ol.rv[v].to_json(),
        })).collect::<Vec<_>>(),
    })
}

/// Tensor lift JSON per the external schema.
pub fn tensor_lift_json(gd: &GroupData, ol: &OrdinaryLift, tl: &TensorLift) -> serde_json::Value {
    let mut base = ordinary_lift_json(gd, ol);
    let obj = base.as_object_mut().unwrap();
    obj.insert(
        "a".into(),
        serde_json::Value::Array(tl.a.iter().map(|p| p.to_json()).collect()),
    );
    obj.insert(
        "b".into(),
        serde_json::Value::Array(tl.b.iter().map(|p| p.to_json()).collect()),
    );
    base
}

/// Demazure operators drop ideal filtration degree one step at a time, so
/// `L_w(u0)` for `w != w0` stays inside the augmentation-type ideal generated
/// by `1 - e^{alpha}`. At rank one the ideal is principal and membership is a
/// divisibility test.
pub fn rank_one_ideal_membership(gd: &GroupData, ol: &OrdinaryLift) -> bool {
    if gd.rank() != 1 {
        return true;
    }
    let alpha = &gd.rs.positive_roots[0];
    (0..gd.wg.order())
        .filter(|&w| w != gd.wg.longest_element())
        .all(|w| ol.lw_u0[w].divide_exact(alpha).is_ok())
}
