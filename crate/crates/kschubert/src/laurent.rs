//! Exact arithmetic in the group algebra of the weight lattice.
//!
//! `LaurentPoly` models the representation ring of the torus with rational
//! coefficients: a finite map from exponent vectors (weights) to nonzero
//! rationals. `TensorElem` is the same thing with paired exponents and models
//! the tensor square. Terms are kept in a `BTreeMap`, so iteration order is
//! the lexicographic order of exponent vectors and serialization is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::weyl::{ElemId, ParabolicSubset, WeylGroup};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `base^k` for a nonzero rational base and signed integer exponent.
pub fn rat_pow(base: &Rat, k: i64) -> Rat {
    use num_traits::Pow;
    if k == 0 {
        return Rat::one();
    }
    let e = u32::try_from(k.unsigned_abs()).expect("exponent out of range");
    let num = Pow::pow(base.numer(), e);
    let den = Pow::pow(base.denom(), e);
    if k > 0 {
        Rat::new(num, den)
    } else {
        Rat::new(den, num)
    }
}

/// An element of the rational group algebra of the weight lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Weight, Rat>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), Rat::one())
    }

    pub fn constant(rank: usize, c: Rat) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    /// `c * e^{lambda}`.
    pub fn monomial(lambda: Weight, c: Rat) -> Self {
        let rank = lambda.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        LaurentPoly { rank, terms }
    }

    /// `e^{lambda}`.
    pub fn exp(lambda: &Weight) -> Self {
        Self::monomial(lambda.clone(), Rat::one())
    }

    pub fn from_terms(rank: usize, entries: impl IntoIterator<Item = (Weight, Rat)>) -> Self {
        let mut out = Self::zero(rank);
        for (w, c) in entries {
            out.add_term(w, c);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Weight) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// The lexicographically largest exponent, when nonzero.
    pub fn lead_exponent(&self) -> Option<&Weight> {
        self.terms.keys().next_back()
    }

    fn add_term(&mut self, lambda: Weight, c: Rat) {
        if c.is_zero() {
            return;
        }
        assert_eq!(lambda.rank(), self.rank, "rank mismatch in term insert");
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, other.rank, "rank mismatch in add");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, other.rank, "rank mismatch in sub");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.rank, other.rank, "rank mismatch in mul");
        let mut out = Self::zero(self.rank);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.add(wb), ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `c * e^{lambda}`.
    pub fn mul_monomial(&self, lambda: &Weight, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, k)| (w.add(lambda), k * c))
                .collect(),
        }
    }

    /// Relabel exponents through the Weyl action; coefficients unchanged.
    pub fn act(&self, wg: &WeylGroup, w: ElemId) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(lam, c)| (wg.act_weight(w, lam), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients: evaluation `e^{lambda} -> 1`.
    pub fn augmentation(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// `e^{lambda} -> e^{-lambda}`.
    pub fn involution(&self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.neg(), c.clone())).collect(),
        }
    }

    /// True iff `s_j f = f` for every `j` in `I`.
    pub fn is_invariant(&self, wg: &WeylGroup, i_set: &ParabolicSubset) -> bool {
        i_set
            .indices()
            .iter()
            .all(|&j| self.act(wg, wg.simple_reflection(j)) == *self)
    }

    /// Exact quotient by `1 - e^{alpha}`; fails when no exact quotient exists.
    pub fn divide_exact(&self, alpha: &Weight) -> Result<LaurentPoly> {
        let mut divisor = LaurentPoly::one(self.rank);
        divisor.add_term(alpha.clone(), -Rat::one());
        self.exact_div(&divisor)
            .ok_or_else(|| Error::NotDivisible(alpha.to_string()))
    }

    /// General exact division in the Laurent ring.
    ///
    /// Both operands are shifted so every coordinate minimum is zero; the
    /// quotient of the shifted polynomials is an honest polynomial whenever
    /// the Laurent quotient exists, so plain lexicographic leading-term
    /// reduction decides divisibility.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert_eq!(self.rank, divisor.rank, "rank mismatch in exact_div");
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.rank));
        }
        let shift_f = self.coordinate_mins();
        let shift_g = divisor.coordinate_mins();
        let f = self.mul_monomial(&shift_f.neg(), &Rat::one());
        let g = divisor.mul_monomial(&shift_g.neg(), &Rat::one());

        let (g_lead, g_lead_c) = g.terms.iter().next_back().map(|(w, c)| (w.clone(), c.clone()))?;
        let mut rem = f.terms;
        let mut quot: BTreeMap<Weight, Rat> = BTreeMap::new();
        while let Some((r_lead, r_c)) = rem.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
            let q_exp: Vec<i64> = r_lead
                .coords()
                .iter()
                .zip(g_lead.coords())
                .map(|(a, b)| a - b)
                .collect();
            if q_exp.iter().any(|&c| c < 0) {
                return None;
            }
            let q_exp = Weight(q_exp);
            let q_c = &r_c / &g_lead_c;
            // rem -= q_c * e^{q_exp} * g
            for (gw, gc) in &g.terms {
                let target = q_exp.add(gw);
                let delta = &q_c * gc;
                use std::collections::btree_map::Entry;
                match rem.entry(target) {
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    Entry::Occupied(mut o) => {
                        let val = o.get() - &delta;
                        if val.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = val;
                        }
                    }
                }
            }
            quot.insert(q_exp, q_c);
        }
        let quot = LaurentPoly {
            rank: self.rank,
            terms: quot,
        };
        Some(quot.mul_monomial(&shift_f.sub(&shift_g), &Rat::one()))
    }

    fn coordinate_mins(&self) -> Weight {
        let mut mins = vec![i64::MAX; self.rank];
        for w in self.terms.keys() {
            for (m, &c) in mins.iter_mut().zip(w.coords()) {
                *m = (*m).min(c);
            }
        }
        Weight(mins)
    }

    /// Largest absolute exponent coordinate over all terms.
    pub fn max_coord_magnitude(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|w| w.coords().iter().map(|c| c.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Evaluate at a torus point: `e^{lambda} -> prod t_i^{lambda_i}`.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.rank, "rank mismatch in eval");
        let mut acc = Rat::zero();
        for (w, c) in &self.terms {
            let mut term = c.clone();
            for (v, &k) in values.iter().zip(w.coords()) {
                term *= rat_pow(v, k);
            }
            acc += term;
        }
        acc
    }

    /// Returns the unique integer value when the polynomial is a constant
    /// integer, used to assert integrality of ordinary tables.
    pub fn as_integer_constant(&self) -> Result<i64> {
        if self.is_zero() {
            return Ok(0);
        }
        if self.terms.len() != 1 {
            return Err(Error::NonInteger(format!("{self}")));
        }
        let (w, c) = self.terms.iter().next().unwrap();
        if !w.is_zero() {
            return Err(Error::NonInteger(format!("{self}")));
        }
        rat_to_i64(c)
    }

    /// JSON form: array of `[exponents, numerator, denominator]`, already in
    /// lexicographic exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    serde_json::json!([
                        w.coords(),
                        c.numer().to_string(),
                        c.denom().to_string()
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(rank: usize, v: &serde_json::Value) -> Result<LaurentPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Usage("polynomial JSON must be an array".into()))?;
        let mut out = LaurentPoly::zero(rank);
        for entry in arr {
            let triple = entry
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| Error::Usage("polynomial term must be [exp, num, den]".into()))?;
            let exps = triple[0]
                .as_array()
                .ok_or_else(|| Error::Usage("term exponent must be an array".into()))?;
            if exps.len() != rank {
                return Err(Error::RankMismatch(exps.len(), rank));
            }
            let coords: Vec<i64> = exps
                .iter()
                .map(|e| {
                    e.as_i64()
                        .ok_or_else(|| Error::Usage("exponent must be an integer".into()))
                })
                .collect::<Result<_>>()?;
            let num: BigInt = parse_bigint(&triple[1])?;
            let den: BigInt = parse_bigint(&triple[2])?;
            if den.is_zero() {
                return Err(Error::Usage("zero denominator".into()));
            }
            out.add_term(Weight(coords), Rat::new(num, den));
        }
        Ok(out)
    }
}

fn parse_bigint(v: &serde_json::Value) -> Result<BigInt> {
    let s = match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) => n.to_string(),
        _ => return Err(Error::Usage("expected integer string".into())),
    };
    s.parse()
        .map_err(|_| Error::Usage(format!("bad integer '{s}'")))
}

pub fn rat_to_i64(c: &Rat) -> Result<i64> {
    use num_traits::ToPrimitive;
    if !c.denom().is_one() {
        return Err(Error::NonInteger(c.to_string()));
    }
    c.numer()
        .to_i64()
        .ok_or_else(|| Error::NonInteger(c.to_string()))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_zero() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "e[{w}]")?;
            } else {
                write!(f, "{c}*e[{w}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The antisymmetrizer: `J(f) = sum_w det(w) * w(f)`.
pub fn antisymmetrize(wg: &WeylGroup, f: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(f.rank());
    for w in 0..wg.order() {
        let img = f.act(wg, w);
        acc = if wg.det(w) > 0 { acc.add(&img) } else { acc.sub(&img) };
    }
    acc
}

/// The canonical anti-invariant `d = J(e^{rho})`, cross-checked against the
/// integral-exponent product form `det(w0) e^{-rho} prod_{alpha>0}(1 - e^{alpha})`.
pub fn anti_invariant(rs: &RootSystem, wg: &WeylGroup) -> Result<LaurentPoly> {
    let d = antisymmetrize(wg, &LaurentPoly::exp(&rs.rho));
    let mut product = LaurentPoly::one(rs.rank());
    for alpha in &rs.positive_roots {
        let mut factor = LaurentPoly::one(rs.rank());
        factor = factor.sub(&LaurentPoly::exp(alpha));
        product = product.mul(&factor);
    }
    let det_w0 = wg.det(wg.longest_element());
    let alt = product
        .mul_monomial(&rs.rho.neg(), &rat_int(det_w0));
    if alt != d {
        return Err(Error::InternalInconsistency(
            "anti-invariant disagrees with its product form".into(),
        ));
    }
    Ok(d)
}

/// An element of the tensor square: finite map from exponent pairs to
/// nonzero rationals. The first slot is the module ("u") factor, the second
/// the characteristic ("v") factor.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElem {
    rank: usize,
    terms: BTreeMap<(Weight, Weight), Rat>,
}

impl TensorElem {
    pub fn zero(rank: usize) -> Self {
        TensorElem {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), Weight::zero(rank), Rat::one())
    }

    pub fn monomial(u: Weight, v: Weight, c: Rat) -> Self {
        assert_eq!(u.rank(), v.rank(), "rank mismatch in tensor monomial");
        let rank = u.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((u, v), c);
        }
        TensorElem { rank, terms }
    }

    /// `a (x) b` for polynomials `a`, `b`.
    pub fn pure(a: &LaurentPoly, b: &LaurentPoly) -> Self {
        assert_eq!(a.rank(), b.rank(), "rank mismatch in tensor product");
        let mut out = Self::zero(a.rank());
        for (u, ca) in a.terms() {
            for (v, cb) in b.terms() {
                out.add_term(u.clone(), v.clone(), ca * cb);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Weight, Weight), &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, u: Weight, v: Weight, c: Rat) {
        if c.is_zero() {
            return;
        }
        assert_eq!(u.rank(), self.rank, "rank mismatch in tensor insert");
        assert_eq!(v.rank(), self.rank, "rank mismatch in tensor insert");
        use std::collections::btree_map::Entry;
        match self.terms.entry((u, v)) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.rank, other.rank, "rank mismatch in add");
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.rank, other.rank, "rank mismatch in sub");
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> TensorElem {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        TensorElem {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.rank, other.rank, "rank mismatch in mul");
        let mut out = Self::zero(self.rank);
        for ((ua, va), ca) in &self.terms {
            for ((ub, vb), cb) in &other.terms {
                out.add_term(ua.add(ub), va.add(vb), ca * cb);
            }
        }
        out
    }

    /// Multiply by `1 (x) e^{mu}`.
    pub fn mul_second_monomial(&self, mu: &Weight) -> TensorElem {
        TensorElem {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|((u, v), c)| ((u.clone(), v.add(mu)), c.clone()))
                .collect(),
        }
    }

    /// Apply a Weyl element to the second slot only.
    pub fn act_second(&self, wg: &WeylGroup, w: ElemId) -> TensorElem {
        let mut out = Self::zero(self.rank);
        for ((u, v), c) in &self.terms {
            out.add_term(u.clone(), wg.act_weight(w, v), c.clone());
        }
        out
    }

    /// Group terms by first-slot exponent: the decomposition
    /// `F = sum_u e^{u} (x) f_u`.
    pub fn first_slices(&self) -> BTreeMap<Weight, LaurentPoly> {
        let mut out: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
        for ((u, v), c) in &self.terms {
            out.entry(u.clone())
                .or_insert_with(|| LaurentPoly::zero(self.rank))
                .add_term(v.clone(), c.clone());
        }
        out.retain(|_, f| !f.is_zero());
        out
    }

    /// Rebuild from first-slot slices.
    pub fn from_first_slices(rank: usize, slices: BTreeMap<Weight, LaurentPoly>) -> TensorElem {
        let mut out = Self::zero(rank);
        for (u, f) in slices {
            for (v, c) in f.terms() {
                out.add_term(u.clone(), v.clone(), c.clone());
            }
        }
        out
    }

    /// Evaluate the first slot at a torus point, leaving a polynomial in the
    /// second slot.
    pub fn specialize_first(&self, values: &[Rat]) -> Result<LaurentPoly> {
        if values.len() != self.rank {
            return Err(Error::RankMismatch(values.len(), self.rank));
        }
        if let Some(pos) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroCoordinate(pos));
        }
        let mut out = LaurentPoly::zero(self.rank);
        for ((u, v), c) in &self.terms {
            let mut coeff = c.clone();
            for (val, &k) in values.iter().zip(u.coords()) {
                coeff *= rat_pow(val, k);
            }
            out.add_term(v.clone(), coeff);
        }
        Ok(out)
    }

    /// Flatten into a single Laurent polynomial in `2 * rank` variables
    /// (first-slot coordinates first).
    pub fn to_flat(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(2 * self.rank);
        for ((u, v), c) in &self.terms {
            let mut coords = Vec::with_capacity(2 * self.rank);
            coords.extend_from_slice(u.coords());
            coords.extend_from_slice(v.coords());
            out.add_term(Weight(coords), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((u, v), c)| {
                    serde_json::json!([
                        u.coords(),
                        v.coords(),
                        c.numer().to_string(),
                        c.denom().to_string()
                    ])
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((u, v), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*e[{u}](x)e[{v}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::GroupLabel;

    fn a1() -> (RootSystem, WeylGroup) {
        let rs = RootSystem::from_label(GroupLabel::A1).unwrap();
        let wg = WeylGroup::build(&rs);
        (rs, wg)
    }

    fn a2() -> (RootSystem, WeylGroup) {
        let rs = RootSystem::from_label(GroupLabel::A2).unwrap();
        let wg = WeylGroup::build(&rs);
        (rs, wg)
    }

    #[test]
    fn ring_examples() {
        let alpha = Weight(vec![2]);
        let one = LaurentPoly::one(1);
        let ea = LaurentPoly::exp(&alpha);
        let lhs = one.sub(&ea).mul(&one.add(&ea));
        let rhs = one.sub(&LaurentPoly::exp(&alpha.scaled(2)));
        assert_eq!(lhs, rhs);

        let f = LaurentPoly::from_terms(
            1,
            [(Weight(vec![1]), rat_int(3)), (Weight(vec![-2]), rat_frac(1, 2))],
        );
        assert!(f.add(&f.neg()).is_zero());

        // (e^{-w} - e^{w})^2 = e^{-2w} - 2 + e^{2w}
        let u = LaurentPoly::exp(&Weight(vec![-1])).sub(&LaurentPoly::exp(&Weight(vec![1])));
        let sq = u.mul(&u);
        let expected = LaurentPoly::from_terms(
            1,
            [
                (Weight(vec![-2]), rat_int(1)),
                (Weight(vec![0]), rat_int(-2)),
                (Weight(vec![2]), rat_int(1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn act_and_augmentation() {
        let (rs, wg) = a2();
        let f = LaurentPoly::exp(&rs.rho);
        assert_eq!(f.act(&wg, wg.identity()), f);
        assert_eq!(
            f.act(&wg, wg.longest_element()),
            LaurentPoly::exp(&rs.rho.neg())
        );
        for w in 0..wg.order() {
            let g = LaurentPoly::from_terms(
                2,
                [
                    (Weight(vec![1, -2]), rat_int(4)),
                    (Weight(vec![0, 1]), rat_frac(-3, 7)),
                ],
            );
            assert_eq!(g.act(&wg, w).augmentation(), g.augmentation());
        }
        let one_minus = LaurentPoly::one(2).sub(&LaurentPoly::exp(&rs.simple_roots[0]));
        assert!(one_minus.augmentation().is_zero());
    }

    #[test]
    fn involution_is_an_involution() {
        let f = LaurentPoly::from_terms(
            2,
            [
                (Weight(vec![3, -1]), rat_frac(2, 5)),
                (Weight(vec![0, 2]), rat_int(-7)),
            ],
        );
        assert_eq!(f.involution().involution(), f);
        assert_eq!(LaurentPoly::one(2).involution(), LaurentPoly::one(2));
    }

    #[test]
    fn divide_exact_examples() {
        let alpha = Weight(vec![2]);
        // (1 - e^{2a}) / (1 - e^{a}) with a the positive root itself
        let f = LaurentPoly::one(1).sub(&LaurentPoly::exp(&alpha.scaled(2)));
        let q = f.divide_exact(&alpha).unwrap();
        assert_eq!(q, LaurentPoly::one(1).add(&LaurentPoly::exp(&alpha)));

        assert!(LaurentPoly::zero(1).divide_exact(&alpha).unwrap().is_zero());

        // e^{-w} - e^{w} = e^{-w} (1 - e^{2w})
        let f = LaurentPoly::exp(&Weight(vec![-1])).sub(&LaurentPoly::exp(&Weight(vec![1])));
        let q = f.divide_exact(&alpha).unwrap();
        assert_eq!(q, LaurentPoly::exp(&Weight(vec![-1])));

        let bad = LaurentPoly::exp(&Weight(vec![1]));
        assert!(matches!(
            bad.divide_exact(&alpha),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn exact_div_round_trip_randomized() {
        let (rs, _) = a2();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let mut g = LaurentPoly::zero(2);
            for _ in 0..4 {
                let a = (next() % 7) as i64 - 3;
                let b = (next() % 7) as i64 - 3;
                let c = (next() % 9) as i64 - 4;
                g = g.add(&LaurentPoly::monomial(Weight(vec![a, b]), rat_int(c)));
            }
            if g.is_zero() {
                continue;
            }
            for alpha in &rs.positive_roots {
                let one_minus = LaurentPoly::one(2).sub(&LaurentPoly::exp(alpha));
                let f = one_minus.mul(&g);
                assert_eq!(f.divide_exact(alpha).unwrap(), g);
            }
        }
    }

    #[test]
    fn antisymmetrizer_properties() {
        let (rs, wg) = a1();
        assert!(antisymmetrize(&wg, &LaurentPoly::one(1)).is_zero());
        let d = antisymmetrize(&wg, &LaurentPoly::exp(&rs.rho));
        let expected = LaurentPoly::exp(&Weight(vec![1])).sub(&LaurentPoly::exp(&Weight(vec![-1])));
        assert_eq!(d, expected);

        let (rs2, wg2) = a2();
        let f = LaurentPoly::from_terms(
            2,
            [
                (Weight(vec![2, 0]), rat_int(1)),
                (Weight(vec![-1, 1]), rat_int(5)),
            ],
        );
        let jf = antisymmetrize(&wg2, &f);
        for w in 0..wg2.order() {
            let lhs = jf.act(&wg2, w);
            let rhs = if wg2.det(w) > 0 { jf.clone() } else { jf.neg() };
            assert_eq!(lhs, rhs);
        }
        let s0 = wg2.simple_reflection(0);
        assert_eq!(antisymmetrize(&wg2, &f.act(&wg2, s0)), antisymmetrize(&wg2, &f).neg());
        let _ = rs2;
    }

    #[test]
    fn anti_invariant_matches_product_form() {
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            let wg = WeylGroup::build(&rs);
            let d = anti_invariant(&rs, &wg).unwrap();
            for j in 0..rs.rank() {
                assert_eq!(d.act(&wg, wg.simple_reflection(j)), d.neg(), "{label}");
            }
        }
    }

    #[test]
    fn invariance_checks() {
        let (_, wg) = a1();
        let i_full = ParabolicSubset::full(1);
        let sym = LaurentPoly::exp(&Weight(vec![1])).add(&LaurentPoly::exp(&Weight(vec![-1])));
        assert!(sym.is_invariant(&wg, &i_full));
        assert!(LaurentPoly::one(1).is_invariant(&wg, &i_full));
        assert!(!LaurentPoly::exp(&Weight(vec![1])).is_invariant(&wg, &i_full));
    }

    #[test]
    fn tensor_ops_and_specialization() {
        let (_, _wg) = a1();
        let f = LaurentPoly::exp(&Weight(vec![1])).add(&LaurentPoly::one(1));
        let tensor = TensorElem::pure(&LaurentPoly::one(1), &f);
        let t = [rat_int(2)];
        assert_eq!(tensor.specialize_first(&t).unwrap(), f);

        let t1 = TensorElem::pure(&LaurentPoly::exp(&Weight(vec![1])), &LaurentPoly::one(1));
        assert_eq!(
            t1.specialize_first(&t).unwrap(),
            LaurentPoly::constant(1, rat_int(2))
        );

        // -e^{-w} (x) e^{w} + 1 (x) 1 at t1 = 2 gives 1 - e^{w}/2
        let v0 = TensorElem::one(1).sub(&TensorElem::pure(
            &LaurentPoly::exp(&Weight(vec![-1])),
            &LaurentPoly::exp(&Weight(vec![1])),
        ));
        let specialized = v0.specialize_first(&t).unwrap();
        let expected = LaurentPoly::one(1).sub(&LaurentPoly::monomial(
            Weight(vec![1]),
            rat_frac(1, 2),
        ));
        assert_eq!(specialized, expected);

        let zero_coord = [rat_int(0)];
        assert!(matches!(
            v0.specialize_first(&zero_coord),
            Err(Error::ZeroCoordinate(0))
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = LaurentPoly::from_terms(
            2,
            [
                (Weight(vec![-1, 0]), rat_frac(1, 2)),
                (Weight(vec![1, -3]), rat_int(-4)),
            ],
        );
        let v = f.to_json();
        let back = LaurentPoly::from_json(2, &v).unwrap();
        assert_eq!(f, back);
        // exponents serialize in lexicographic order
        let arr = v.as_array().unwrap();
        assert_eq!(arr[0][0][0], serde_json::json!(-1));
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn mixed_rank_addition_panics() {
        let f = LaurentPoly::one(1);
        let g = LaurentPoly::one(2);
        let _ = f.add(&g);
    }

    #[test]
    fn ring_axioms_randomized() {
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        let mut rand_poly = move || {
            let mut f = LaurentPoly::zero(2);
            for _ in 0..3 {
                let a = (next() % 5) as i64 - 2;
                let b = (next() % 5) as i64 - 2;
                let c = (next() % 11) as i64 - 5;
                f = f.add(&LaurentPoly::monomial(Weight(vec![a, b]), rat_int(c)));
            }
            f
        };
        for _ in 0..20 {
            let f = rand_poly();
            let g = rand_poly();
            let h = rand_poly();
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            assert_eq!(f.mul(&g), g.mul(&f));
        }
    }
}
