//! Independent verification engines.
//!
//! Nothing in this module may route through the Demazure-operator pipeline it
//! is checking. The two expansion oracles are a generic-point evaluation
//! solve (the quotient by the kernel ideal becomes functions on a free Weyl
//! orbit) and a monomial-window linear reduction modulo the ideal generated
//! by augmented fundamental-orbit sums. Bruhat order and the parabolic
//! Moebius function get brute-force counterparts, and the Weyl dimension
//! formula audits Euler characteristics at the longest element.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat_int, rat_pow, rat_to_i64, LaurentPoly, Rat};
use crate::rootdata::Weight;
use crate::weyl::{ElemId, ParabolicSubset};
use crate::GroupData;

/// Deterministic 64-bit generator (splitmix64); seeds fully determine every
/// oracle draw, so reports are byte-identical across runs and thread counts.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A rational point of the torus with a genericity certificate: the orbit
/// evaluation functionals, read off on the fundamental monomials, are
/// pairwise distinct.
#[derive(Clone, Debug)]
pub struct TorusPoint {
    pub values: Vec<Rat>,
}

const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const GENERIC_RETRIES: usize = 64;

/// Evaluate `e^{lambda}` at the orbit point `w . t`, which by definition is
/// the evaluation of `e^{w^{-1} lambda}` at `t`.
pub fn orbit_eval_monomial(gd: &GroupData, t: &TorusPoint, w: ElemId, lambda: &Weight) -> Rat {
    let mu = gd.wg.act_weight(gd.wg.inverse(w), lambda);
    let mut acc = Rat::one();
    for (v, &k) in t.values.iter().zip(mu.coords()) {
        acc *= rat_pow(v, k);
    }
    acc
}

/// Evaluate a polynomial at the orbit point `w . t`.
pub fn orbit_eval(gd: &GroupData, t: &TorusPoint, w: ElemId, f: &LaurentPoly) -> Rat {
    let mut acc = Rat::zero();
    for (lambda, c) in f.terms() {
        acc += c * orbit_eval_monomial(gd, t, w, lambda);
    }
    acc
}

fn is_generic(gd: &GroupData, values: &[Rat]) -> bool {
    let t = TorusPoint {
        values: values.to_vec(),
    };
    let rank = gd.rank();
    let mut signatures = BTreeSet::new();
    for w in 0..gd.wg.order() {
        let sig: Vec<Rat> = (0..rank)
            .map(|i| {
                let mut omega = Weight::zero(rank);
                omega.0[i] = 1;
                orbit_eval_monomial(gd, &t, w, &omega)
            })
            .collect();
        if !signatures.insert(sig) {
            return false;
        }
    }
    true
}

/// Draw a torus point from small distinct primes until the orbit separates.
pub fn generic_point(gd: &GroupData, seed: u64) -> Result<TorusPoint> {
    let mut rng = SplitMix64::new(seed);
    let rank = gd.rank();
    for _ in 0..GENERIC_RETRIES {
        let mut pool: Vec<i64> = PRIMES.to_vec();
        let mut values = Vec::with_capacity(rank);
        for _ in 0..rank {
            let k = rng.below(pool.len() as u64) as usize;
            values.push(rat_int(pool.remove(k)));
        }
        if is_generic(gd, &values) {
            return Ok(TorusPoint { values });
        }
    }
    Err(Error::GenericityFailure(GENERIC_RETRIES))
}

/// Expand `target` in `basis` modulo the ideal specialized at `t`: evaluate
/// everything on the orbit points indexed by `orbit` and solve the square
/// rational system.
pub fn expand_by_evaluation(
    gd: &GroupData,
    t: &TorusPoint,
    target: &LaurentPoly,
    basis: &[LaurentPoly],
    orbit: &[ElemId],
) -> Result<Vec<Rat>> {
    if basis.len() != orbit.len() {
        return Err(Error::RankMismatch(basis.len(), orbit.len()));
    }
    let matrix: Vec<Vec<Rat>> = orbit
        .iter()
        .map(|&w| basis.iter().map(|f| orbit_eval(gd, t, w, f)).collect())
        .collect();
    let rhs: Vec<Rat> = orbit.iter().map(|&w| orbit_eval(gd, t, w, target)).collect();
    crate::ratmat::solve_square(&matrix, &rhs).ok_or(Error::SingularEvaluation)
}

/// The fundamental orbit sums `sum over the orbit of omega_i of e^{mu}`;
/// they generate the invariants, and their augmented versions
/// `chi_i - eps(chi_i)` generate the kernel ideal of the characteristic map.
pub fn fundamental_orbit_sums(gd: &GroupData) -> Vec<LaurentPoly> {
    let rank = gd.rank();
    (0..rank)
        .map(|i| {
            let mut omega = Weight::zero(rank);
            omega.0[i] = 1;
            let orbit: BTreeSet<Weight> = (0..gd.wg.order())
                .map(|w| gd.wg.act_weight(w, &omega))
                .collect();
            LaurentPoly::from_terms(rank, orbit.into_iter().map(|mu| (mu, Rat::one())))
        })
        .collect()
}

type SparseRow = BTreeMap<Weight, Rat>;

/// Lexicographic-order-preserving interning of exponent vectors over a
/// bounding box: the most significant coordinate gets the largest stride, so
/// comparing ids is comparing monomials.
struct MonomialBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
    strides: Vec<u64>,
    size: u64,
}

impl MonomialBox {
    fn new(lo: Vec<i64>, hi: Vec<i64>) -> MonomialBox {
        let sizes: Vec<u64> = lo
            .iter()
            .zip(&hi)
            .map(|(&a, &b)| (b - a + 1) as u64)
            .collect();
        let mut strides = vec![1u64; lo.len()];
        for i in (0..lo.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        let size = strides.first().copied().unwrap_or(1) * sizes.first().copied().unwrap_or(1);
        MonomialBox {
            lo,
            hi,
            strides,
            size,
        }
    }

    fn id(&self, w: &Weight) -> Option<u64> {
        let mut acc = 0u64;
        for ((&c, (&a, &b)), &s) in w
            .coords()
            .iter()
            .zip(self.lo.iter().zip(&self.hi))
            .zip(&self.strides)
        {
            if c < a || c > b {
                return None;
            }
            acc += (c - a) as u64 * s;
        }
        Some(acc)
    }

    fn weight(&self, mut id: u64) -> Weight {
        let mut coords = Vec::with_capacity(self.lo.len());
        for (&a, &s) in self.lo.iter().zip(&self.strides) {
            coords.push(a + (id / s) as i64);
            id %= s;
        }
        Weight(coords)
    }
}

/// A sparse row over interned monomials, sorted ascending; the lead is the
/// last entry.
type IdRow = Vec<(u64, Rat)>;

fn map_sub_scaled(row: &mut BTreeMap<u64, Rat>, pivot: &IdRow, factor: &Rat) {
    for (id, pc) in pivot {
        let delta = factor * pc;
        use std::collections::btree_map::Entry;
        match row.entry(*id) {
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
}

/// Row echelon data for the window-truncated relation space, with pivot rows
/// indexed by their leading monomial id.
struct WindowEchelon {
    bx: MonomialBox,
    pivots: Vec<Option<IdRow>>,
}

impl WindowEchelon {
    fn insert_row(&mut self, row: IdRow) {
        let mut cur: BTreeMap<u64, Rat> = row.into_iter().collect();
        loop {
            // reduce the leading monomial until it is pivot-free or the row dies
            let Some((&lead, lead_c)) = cur.iter().next_back() else {
                return;
            };
            if let Some(pivot) = &self.pivots[lead as usize] {
                let factor = lead_c.clone();
                map_sub_scaled(&mut cur, pivot, &factor);
                debug_assert!(!cur.contains_key(&lead));
            } else {
                let inv = lead_c.clone();
                let stored: IdRow = cur.into_iter().map(|(id, c)| (id, &c / &inv)).collect();
                self.pivots[lead as usize] = Some(stored);
                return;
            }
        }
    }

    /// Reduce to the canonical normal form modulo the span of the pivots:
    /// process pivot monomials from the top down, each subtraction adding
    /// only lexicographically smaller monomials. Monomials outside the box
    /// cannot meet a pivot and pass straight through.
    fn reduce(&self, f: &LaurentPoly) -> SparseRow {
        let mut outside = SparseRow::new();
        let mut cur: BTreeMap<u64, Rat> = BTreeMap::new();
        for (w, c) in f.terms() {
            match self.bx.id(w) {
                Some(id) => {
                    cur.insert(id, c.clone());
                }
                None => {
                    outside.insert(w.clone(), c.clone());
                }
            }
        }
        let mut work: BTreeSet<u64> = cur
            .keys()
            .filter(|&&m| self.pivots[m as usize].is_some())
            .copied()
            .collect();
        while let Some(&m) = work.iter().next_back() {
            work.remove(&m);
            let Some(c) = cur.get(&m).cloned() else {
                continue;
            };
            let pivot = self.pivots[m as usize].as_ref().unwrap();
            for (id, pc) in pivot {
                let delta = &c * pc;
                use std::collections::btree_map::Entry;
                match cur.entry(*id) {
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
                if *id < m && self.pivots[*id as usize].is_some() && cur.contains_key(id) {
                    work.insert(*id);
                }
            }
            debug_assert!(!cur.contains_key(&m));
        }
        let mut out = outside;
        for (id, c) in cur {
            out.insert(self.bx.weight(id), c);
        }
        out
    }
}

/// The monomial-window oracle: expand targets in a fixed basis modulo the
/// ideal generated by the augmented fundamental-orbit sums, by exact linear
/// algebra over a truncated window of monomial multiples.
pub struct WindowOracle<'g> {
    gd: &'g GroupData,
    basis: Vec<LaurentPoly>,
    reduced_basis: Vec<SparseRow>,
    echelon: WindowEchelon,
    pub window: i64,
}

/// Hard cap on the window bound; reaching it without solvability is reported
/// loudly, never silently truncated.
pub const WINDOW_CAP: i64 = 32;

impl<'g> WindowOracle<'g> {
    /// Build the echelonized relation space for multipliers with coordinates
    /// bounded by `window`.
    pub fn with_window(gd: &'g GroupData, basis: Vec<LaurentPoly>, window: i64) -> Self {
        let rank = gd.rank();
        let generators: Vec<LaurentPoly> = fundamental_orbit_sums(gd)
            .into_iter()
            .map(|chi| {
                let eps = chi.augmentation();
                chi.sub(&LaurentPoly::constant(rank, eps))
            })
            .collect();

        let gen_span = generators
            .iter()
            .map(|g| g.max_coord_magnitude())
            .max()
            .unwrap_or(1);
        let bound = window + gen_span;
        let bx = MonomialBox::new(vec![-bound; rank], vec![bound; rank]);

        // all shift rows e^{mu} * gen, mu in the window box, sorted by
        // leading monomial descending for cheap echelon insertion
        let mut rows: Vec<IdRow> = Vec::new();
        let mut mu = vec![-window; rank];
        loop {
            let shift = Weight(mu.clone());
            for gen in &generators {
                let shifted = gen.mul_monomial(&shift, &Rat::one());
                let row: IdRow = shifted
                    .terms()
                    .map(|(w, c)| (bx.id(w).expect("relation stays in the box"), c.clone()))
                    .collect();
                rows.push(row);
            }
            // advance the odometer over the box
            let mut idx = 0;
            loop {
                if idx == rank {
                    break;
                }
                mu[idx] += 1;
                if mu[idx] <= window {
                    break;
                }
                mu[idx] = -window;
                idx += 1;
            }
            if idx == rank {
                break;
            }
        }
        rows.sort_by(|a, b| b.last().unwrap().0.cmp(&a.last().unwrap().0));
        let mut echelon = WindowEchelon {
            pivots: vec![None; bx.size as usize],
            bx,
        };
        for row in rows {
            echelon.insert_row(row);
        }
        let reduced_basis = basis.iter().map(|f| echelon.reduce(f)).collect();
        WindowOracle {
            gd,
            basis,
            reduced_basis,
            echelon,
            window,
        }
    }

    /// Coordinates of `target` in the basis modulo the ideal, or `None` when
    /// the current window cannot certify membership.
    pub fn reduce(&self, target: &LaurentPoly) -> Result<Option<Vec<Rat>>> {
        let reduced = self.echelon.reduce(target);
        let mut support: BTreeSet<Weight> = reduced.keys().cloned().collect();
        for rb in &self.reduced_basis {
            support.extend(rb.keys().cloned());
        }
        let support: Vec<Weight> = support.into_iter().collect();
        let matrix: Vec<Vec<Rat>> = support
            .iter()
            .map(|m| {
                self.reduced_basis
                    .iter()
                    .map(|rb| rb.get(m).cloned().unwrap_or_else(Rat::zero))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = support
            .iter()
            .map(|m| reduced.get(m).cloned().unwrap_or_else(Rat::zero))
            .collect();
        crate::ratmat::solve_unique(&matrix, &rhs)
    }

    pub fn basis(&self) -> &[LaurentPoly] {
        &self.basis
    }

    /// Starting window bound per the sizing rule: twice the largest exponent
    /// magnitude over target and basis.
    pub fn starting_window(target: &LaurentPoly, basis: &[LaurentPoly]) -> i64 {
        let m = basis
            .iter()
            .map(|f| f.max_coord_magnitude())
            .chain(std::iter::once(target.max_coord_magnitude()))
            .max()
            .unwrap_or(1);
        (2 * m).max(2)
    }

    /// Tighter sizing for whole-table batteries: the largest exponent
    /// magnitude over all targets and the basis, plus the generator span.
    /// The echelon cost grows with the window like the box volume, so
    /// starting just past the supports and escalating on failure is what
    /// keeps rank-three tables tractable.
    pub fn tight_window(gd: &GroupData, targets: &[LaurentPoly], basis: &[LaurentPoly]) -> i64 {
        let m = basis
            .iter()
            .chain(targets.iter())
            .map(|f| f.max_coord_magnitude())
            .max()
            .unwrap_or(1);
        let gen_span = fundamental_orbit_sums(gd)
            .iter()
            .map(|g| g.max_coord_magnitude())
            .max()
            .unwrap_or(1);
        (m + gen_span + 1).max(2)
    }

    pub fn group(&self) -> &'g GroupData {
        self.gd
    }
}

/// Expand `target` in the Schubert representatives modulo the augmented
/// invariants, enlarging the window until the linear system is solvable.
pub fn reduce_modulo_augmented_invariants(
    gd: &GroupData,
    basis: &[LaurentPoly],
    target: &LaurentPoly,
) -> Result<Vec<Rat>> {
    let mut window = WindowOracle::starting_window(target, basis);
    loop {
        let oracle = WindowOracle::with_window(gd, basis.to_vec(), window);
        if let Some(coords) = oracle.reduce(target)? {
            return Ok(coords);
        }
        if window >= WINDOW_CAP {
            return Err(Error::WindowExhausted(window));
        }
        window = (window * 2).min(WINDOW_CAP);
    }
}

/// Expand a whole family of targets against one shared echelonized window,
/// escalating the window when any member is unsolvable. The echelon is by
/// far the dominant cost, so table-scale checks amortize it across targets.
pub fn reduce_family(
    gd: &GroupData,
    basis: &[LaurentPoly],
    targets: &[LaurentPoly],
) -> Result<Vec<Vec<Rat>>> {
    let mut window = WindowOracle::tight_window(gd, targets, basis);
    loop {
        let oracle = WindowOracle::with_window(gd, basis.to_vec(), window);
        let results = crate::par::par_map(targets.to_vec(), |t| oracle.reduce(&t));
        let mut out = Vec::with_capacity(targets.len());
        let mut unsolved = false;
        for r in results {
            match r? {
                Some(coords) => out.push(coords),
                None => {
                    unsolved = true;
                    break;
                }
            }
        }
        if !unsolved {
            return Ok(out);
        }
        if window >= WINDOW_CAP {
            return Err(Error::WindowExhausted(window));
        }
        window = (window * 2).min(WINDOW_CAP);
    }
}

/// Subword brute force: try every subword of a fixed reduced word of `w`.
pub fn brute_bruhat(gd: &GroupData, u: ElemId, w: ElemId) -> bool {
    let word = &gd.wg.elem(w).word;
    let k = word.len();
    for mask in 0u32..(1 << k) {
        let sub: Vec<u8> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
        if gd.wg.element_by_word(&sub) == u {
            return true;
        }
    }
    false
}

/// The defining Moebius recursion on the coset poset built from the brute
/// Bruhat order: `sum over u in [v,w] of mu(u, w) = delta_{v,w}`.
pub fn brute_mobius(
    gd: &GroupData,
    i_set: &ParabolicSubset,
    v: ElemId,
    w: ElemId,
) -> Result<i64> {
    let reps = gd.wg.min_coset_reps(i_set);
    for x in [v, w] {
        if !reps.contains(&x) {
            return Err(Error::NotMinimalRep(gd.wg.render(x), format!("{i_set}")));
        }
    }
    fn mob(
        gd: &GroupData,
        reps: &[ElemId],
        memo: &mut BTreeMap<ElemId, i64>,
        u: ElemId,
        w: ElemId,
    ) -> i64 {
        if u == w {
            return 1;
        }
        if let Some(&m) = memo.get(&u) {
            return m;
        }
        let mut acc = 0i64;
        for &x in reps {
            if x != u && brute_bruhat(gd, u, x) && brute_bruhat(gd, x, w) {
                acc += mob(gd, reps, memo, x, w);
            }
        }
        memo.insert(u, -acc);
        -acc
    }
    if !brute_bruhat(gd, v, w) {
        return Ok(0);
    }
    let mut memo = BTreeMap::new();
    Ok(mob(gd, &reps, &mut memo, v, w))
}

/// The Weyl dimension formula, exact over the coroot pairings of the Cartan
/// datum.
pub fn weyl_dim(gd: &GroupData, mu: &Weight) -> Result<i64> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let rho = &gd.rs.rho;
    let shifted = mu.add(rho);
    let mut acc = Rat::one();
    for idx in 0..gd.rs.num_positive_roots() {
        let num = gd.rs.coroot_pairing(&shifted, idx);
        let den = gd.rs.coroot_pairing(rho, idx);
        acc *= Rat::new(num.into(), den.into());
    }
    rat_to_i64(&acc)
}

/// Seeded random polynomial over a coordinate box, for property tests.
pub fn random_poly(rank: usize, rng: &mut SplitMix64, terms: usize, span: i64) -> LaurentPoly {
    let mut f = LaurentPoly::zero(rank);
    for _ in 0..terms {
        let coords: Vec<i64> = (0..rank).map(|_| rng.int_in(-span, span)).collect();
        let c = rng.int_in(-6, 6);
        f = f.add(&LaurentPoly::monomial(Weight(coords), rat_int(c)));
    }
    f
}
