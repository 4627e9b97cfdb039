//! Demazure operators on the weight-lattice algebra, their tensor extensions,
//! the collapse of composite operators back into the group, and
//! Euler-characteristic functionals.
//!
//! The simple operator is `L_j(f) = (f - s_j f) / (1 - e^{alpha_j})`, which
//! sends `1` to `0`. With that normalization the Euler characteristic of a
//! Schubert variety against a line bundle is `chi(X_w, L(lambda)) =
//! eps(L_w(e^{lambda - rho}))`, and line bundles attached to antidominant
//! weights are the effective ones; `DemazureConvention` pins this choice and
//! is validated on the rank-one group where every value is hand-checkable.

use crate::error::{Error, Result};
use crate::laurent::{rat_to_i64, LaurentPoly, Rat, TensorElem};
use crate::rootdata::{GroupLabel, RootSystem, Weight};
use crate::weyl::ElemId;
use crate::GroupData;

/// The operator and Euler-characteristic conventions in force, as a value
/// that can be validated at startup and fingerprinted into table metadata.
#[derive(Clone, Debug)]
pub struct DemazureConvention {
    pub operator: &'static str,
    pub euler: &'static str,
    pub equivariant_euler: &'static str,
    pub effectivity: &'static str,
}

pub const CONVENTION: DemazureConvention = DemazureConvention {
    operator: "L_j(e^l) = (e^l - e^{s_j l})/(1 - e^{alpha_j})",
    euler: "chi(X_w, L(l)) = eps L_w(e^{l - rho})",
    equivariant_euler: "chi^T(X_w, L(l)) = e^{rho} L_w(e^{l - rho})",
    effectivity: "L(l) has positive chi for antidominant l",
};

impl DemazureConvention {
    /// Stable fingerprint used for cache keys and table provenance.
    pub fn fingerprint(&self) -> String {
        format!(
            "{}|{}|{}|{}",
            self.operator, self.euler, self.equivariant_euler, self.effectivity
        )
    }

    /// Validate on the rank-one group: `L_s(1) = 0`, `chi(X_s, -omega) = 2`
    /// and `chi^T(X_s, -omega) = e^{omega} + e^{-omega}`.
    pub fn validate(&self) -> Result<()> {
        let gd = GroupData::from_label(GroupLabel::A1)?;
        let s = gd.wg.longest_element();
        if !demazure_simple(&gd.rs, &LaurentPoly::one(1), 0).is_zero() {
            return Err(Error::InternalInconsistency(
                "convention check failed: L_s(1) != 0".into(),
            ));
        }
        let minus_omega = Weight(vec![-1]);
        if euler_char(&gd, s, &minus_omega) != 2 {
            return Err(Error::InternalInconsistency(
                "convention check failed: chi(X_s, -omega) != 2".into(),
            ));
        }
        let chi_t = euler_char_t(&gd, s, &minus_omega);
        let expected = LaurentPoly::exp(&Weight(vec![1])).add(&LaurentPoly::exp(&Weight(vec![-1])));
        if chi_t != expected {
            return Err(Error::InternalInconsistency(
                "convention check failed: chi^T(X_s, -omega) != e^w + e^-w".into(),
            ));
        }
        Ok(())
    }
}

/// `L_j` applied to a single monomial, by the closed string formula.
///
/// For `k = <lambda, alpha_j^v>`:
///   k = 0  ->  0
///   k > 0  ->  -(e^{lambda - alpha} + ... + e^{lambda - k alpha})
///   k < 0  ->   e^{lambda} + e^{lambda + alpha} + ... + e^{lambda + (|k|-1) alpha}
fn demazure_monomial_into(
    rs: &RootSystem,
    lambda: &Weight,
    coeff: &Rat,
    j: usize,
    out: &mut Vec<(Weight, Rat)>,
) {
    let k = rs.pairing(lambda, j);
    let alpha = &rs.simple_roots[j];
    if k == 0 {
        return;
    }
    if k > 0 {
        let mut cur = lambda.clone();
        for _ in 0..k {
            cur = cur.sub(alpha);
            out.push((cur.clone(), -coeff.clone()));
        }
    } else {
        let mut cur = lambda.clone();
        out.push((cur.clone(), coeff.clone()));
        for _ in 0..(-k - 1) {
            cur = cur.add(alpha);
            out.push((cur.clone(), coeff.clone()));
        }
    }
}

/// The simple Demazure operator `L_j`, extended linearly.
///
/// Identical to `(f - s_j f).divide_exact(alpha_j)`; the closed form skips
/// the division. The equality of the two routes is pinned by a test.
pub fn demazure_simple(rs: &RootSystem, f: &LaurentPoly, j: usize) -> LaurentPoly {
    let mut terms = Vec::new();
    for (lambda, c) in f.terms() {
        demazure_monomial_into(rs, lambda, c, j, &mut terms);
    }
    LaurentPoly::from_terms(f.rank(), terms)
}

/// The literal quotient form of the simple operator.
pub fn demazure_simple_by_division(rs: &RootSystem, f: &LaurentPoly, j: usize) -> Result<LaurentPoly> {
    let reflected = LaurentPoly::from_terms(
        f.rank(),
        f.terms().map(|(w, c)| (rs.reflect(j, w), c.clone())),
    );
    f.sub(&reflected).divide_exact(&rs.simple_roots[j])
}

/// Apply `L` along an explicit word, rightmost letter first, so that the word
/// `s_{i_1} ... s_{i_k}` acts as the operator composition
/// `L_{i_1} ( L_{i_2} ( ... L_{i_k}(f) ... ) )`.
pub fn demazure_word(rs: &RootSystem, f: &LaurentPoly, word: &[u8]) -> LaurentPoly {
    let mut cur = f.clone();
    for &j in word.iter().rev() {
        cur = demazure_simple(rs, &cur, j as usize);
    }
    cur
}

/// `L_w(f)` along the stored reduced word of `w`; the result is independent
/// of the chosen reduced word.
pub fn demazure(gd: &GroupData, f: &LaurentPoly, w: ElemId) -> LaurentPoly {
    demazure_word(&gd.rs, f, &gd.wg.elem(w).word)
}

/// The tensor extension: apply `L_w` to the second slot only.
pub fn demazure_tensor(gd: &GroupData, f: &TensorElem, w: ElemId) -> TensorElem {
    let slices = f.first_slices();
    let mut out = std::collections::BTreeMap::new();
    for (u, g) in slices {
        let lg = demazure(gd, &g, w);
        if !lg.is_zero() {
            out.insert(u, lg);
        }
    }
    TensorElem::from_first_slices(f.rank(), out)
}

/// The unique element whose Demazure operator equals
/// `L_{w'} compose L_{w^{-1} w0}`, found by folding the letters of `w'` into
/// `w^{-1} w0`: a letter that lengthens is absorbed into the word, a letter
/// that shortens is dropped.
pub fn demazure_composite(gd: &GroupData, w_prime: ElemId, w: ElemId) -> ElemId {
    let wg = &gd.wg;
    let mut cur = wg.mult(wg.inverse(w), wg.longest_element());
    for &j in wg.elem(w_prime).word.iter().rev() {
        let scur = wg.mult(wg.simple_reflection(j as usize), cur);
        if wg.length(scur) > wg.length(cur) {
            cur = scur;
        }
    }
    cur
}

/// `chi(X_w, L(lambda)) = eps L_w(e^{lambda - rho})`; always an integer.
pub fn euler_char(gd: &GroupData, w: ElemId, lambda: &Weight) -> i64 {
    let f = LaurentPoly::exp(&lambda.sub(&gd.rs.rho));
    let value = demazure(gd, &f, w).augmentation();
    rat_to_i64(&value).expect("Euler characteristic must be an integer")
}

/// `chi^T(X_w, L(lambda)) = e^{rho} L_w(e^{lambda - rho})`.
pub fn euler_char_t(gd: &GroupData, w: ElemId, lambda: &Weight) -> LaurentPoly {
    let f = LaurentPoly::exp(&lambda.sub(&gd.rs.rho));
    demazure(gd, &f, w).mul_monomial(&gd.rs.rho, &num_traits::One::one())
}

/// The equivariant Euler characteristic of the class represented by a tensor
/// element: `sum_terms a * e^{rho} L_{w0}(b e^{-rho})`. Well defined modulo
/// the kernel ideal of the characteristic map because `L_{w0}` is linear over
/// the invariants.
pub fn chi_t(gd: &GroupData, f: &TensorElem) -> LaurentPoly {
    let w0 = gd.wg.longest_element();
    let rho = &gd.rs.rho;
    let mut acc = LaurentPoly::zero(f.rank());
    for (u, g) in f.first_slices() {
        let inner = demazure(gd, &g.mul_monomial(&rho.neg(), &num_traits::One::one()), w0);
        let term = inner.mul_monomial(&rho.add(&u).clone(), &num_traits::One::one());
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{rat_frac, rat_int};
    use crate::rootdata::GroupLabel;
    use crate::weyl::ParabolicSubset;

    fn gd(label: GroupLabel) -> GroupData {
        GroupData::from_label(label).unwrap()
    }

    fn seeded_poly(rank: usize, state: &mut u64, terms: usize, span: i64) -> LaurentPoly {
        let mut next = || {
            *state ^= *state << 13;
            *state ^= *state >> 7;
            *state ^= *state << 17;
            *state
        };
        let mut f = LaurentPoly::zero(rank);
        for _ in 0..terms {
            let coords: Vec<i64> = (0..rank)
                .map(|_| (next() % (2 * span as u64 + 1)) as i64 - span)
                .collect();
            let c = (next() % 13) as i64 - 6;
            f = f.add(&LaurentPoly::monomial(Weight(coords), rat_int(c)));
        }
        f
    }

    #[test]
    fn convention_is_valid() {
        CONVENTION.validate().unwrap();
        assert!(CONVENTION.fingerprint().contains("antidominant"));
    }

    #[test]
    fn simple_operator_examples() {
        let g = gd(GroupLabel::A1);
        assert!(demazure_simple(&g.rs, &LaurentPoly::one(1), 0).is_zero());
        assert_eq!(
            demazure_simple(&g.rs, &LaurentPoly::exp(&Weight(vec![-1])), 0),
            LaurentPoly::exp(&Weight(vec![-1]))
        );
        assert_eq!(
            demazure_simple(&g.rs, &LaurentPoly::exp(&Weight(vec![1])), 0),
            LaurentPoly::exp(&Weight(vec![-1])).neg()
        );
        // geometric sum after exact division
        let f = LaurentPoly::exp(&Weight(vec![-2]));
        assert_eq!(
            demazure(&g, &f, g.wg.longest_element()),
            f.add(&LaurentPoly::one(1))
        );
    }

    #[test]
    fn closed_form_matches_division_route() {
        for label in [GroupLabel::A2, GroupLabel::B2, GroupLabel::G2] {
            let g = gd(label);
            let mut state = 0xabcdefu64 + label.name().len() as u64;
            for _ in 0..12 {
                let f = seeded_poly(g.rank(), &mut state, 5, 3);
                for j in 0..g.rank() {
                    assert_eq!(
                        demazure_simple(&g.rs, &f, j),
                        demazure_simple_by_division(&g.rs, &f, j).unwrap(),
                        "{label} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn idempotency_on_random_inputs() {
        let g = gd(GroupLabel::B2);
        let mut state = 7u64;
        for _ in 0..10 {
            let f = seeded_poly(2, &mut state, 6, 3);
            for j in 0..2 {
                let once = demazure_simple(&g.rs, &f, j);
                assert_eq!(demazure_simple(&g.rs, &once, j), once);
            }
        }
    }

    #[test]
    fn identity_element_is_identity_operator() {
        let g = gd(GroupLabel::A2);
        let mut state = 99u64;
        let f = seeded_poly(2, &mut state, 5, 2);
        assert_eq!(demazure(&g, &f, g.wg.identity()), f);
    }

    #[test]
    fn reduced_word_independence_small_groups() {
        for label in [GroupLabel::A2, GroupLabel::B2] {
            let g = gd(label);
            let mut state = 1234u64;
            let f = seeded_poly(2, &mut state, 5, 2);
            for w in 0..g.wg.order() {
                let words = g.wg.reduced_words(w);
                let reference = demazure_word(&g.rs, &f, &words[0]);
                for word in &words[1..] {
                    assert_eq!(demazure_word(&g.rs, &f, word), reference, "{label}");
                }
            }
        }
    }

    #[test]
    fn tensor_operator_acts_on_second_slot() {
        let g = gd(GroupLabel::A1);
        let s = g.wg.longest_element();
        let a_tensor_one = TensorElem::pure(
            &LaurentPoly::exp(&Weight(vec![2])),
            &LaurentPoly::one(1),
        );
        assert!(demazure_tensor(&g, &a_tensor_one, s).is_zero());

        let f = TensorElem::pure(
            &LaurentPoly::exp(&Weight(vec![1])),
            &LaurentPoly::exp(&Weight(vec![-2])),
        );
        assert_eq!(demazure_tensor(&g, &f, g.wg.identity()), f);

        let one_tensor = TensorElem::pure(
            &LaurentPoly::one(1),
            &LaurentPoly::exp(&Weight(vec![-1])),
        );
        assert_eq!(demazure_tensor(&g, &one_tensor, s), one_tensor);
    }

    #[test]
    fn composite_examples() {
        let g = gd(GroupLabel::A2);
        let wg = &g.wg;
        let w0 = wg.longest_element();
        let s1 = wg.parse_word("s1").unwrap();
        let s2 = wg.parse_word("s2").unwrap();
        // empty fold
        for w in 0..wg.order() {
            assert_eq!(
                demazure_composite(&g, wg.identity(), w),
                wg.mult(wg.inverse(w), w0)
            );
        }
        // folding into w0 absorbs every letter
        for wp in 0..wg.order() {
            assert_eq!(demazure_composite(&g, wp, wg.identity()), w0);
        }
        assert_eq!(demazure_composite(&g, s1, s1), w0);
        assert_ne!(demazure_composite(&g, s2, s1), w0);
    }

    #[test]
    fn composite_collapses_iff_bruhat_below() {
        for label in [GroupLabel::A2, GroupLabel::B2, GroupLabel::G2] {
            let g = gd(label);
            let w0 = g.wg.longest_element();
            for w in 0..g.wg.order() {
                for wp in 0..g.wg.order() {
                    let collapsed = demazure_composite(&g, wp, w) == w0;
                    assert_eq!(collapsed, g.wg.bruhat_leq(w, wp), "{label}");
                }
            }
        }
    }

    #[test]
    fn composite_matches_operator_composition() {
        let g = gd(GroupLabel::A2);
        let mut state = 5u64;
        let f = seeded_poly(2, &mut state, 4, 2);
        let w0 = g.wg.longest_element();
        for w in 0..g.wg.order() {
            for wp in 0..g.wg.order() {
                let wr = g.wg.mult(g.wg.inverse(w), w0);
                let lhs = demazure(&g, &demazure(&g, &f, wr), wp);
                let rhs = demazure(&g, &f, demazure_composite(&g, wp, w));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn euler_characteristic_examples() {
        let g = gd(GroupLabel::A1);
        let s = g.wg.longest_element();
        for n in -3..=3 {
            assert_eq!(euler_char(&g, g.wg.identity(), &Weight(vec![n])), 1);
        }
        assert_eq!(euler_char(&g, s, &Weight(vec![-1])), 2);
        assert_eq!(euler_char(&g, s, &Weight(vec![1])), 0);
        assert_eq!(
            euler_char_t(&g, g.wg.identity(), &Weight(vec![2])),
            LaurentPoly::exp(&Weight(vec![2]))
        );
        assert_eq!(
            euler_char_t(&g, s, &Weight(vec![-1])),
            LaurentPoly::exp(&Weight(vec![1])).add(&LaurentPoly::exp(&Weight(vec![-1])))
        );
        assert!(euler_char_t(&g, s, &Weight(vec![1])).is_zero());
    }

    #[test]
    fn chi_t_functional_examples() {
        let g = gd(GroupLabel::A1);
        // 1 (x) e^{lambda} recovers the equivariant Euler characteristic
        for n in -2..=2 {
            let f = TensorElem::pure(&LaurentPoly::one(1), &LaurentPoly::exp(&Weight(vec![n])));
            assert_eq!(
                chi_t(&g, &f),
                euler_char_t(&g, g.wg.longest_element(), &Weight(vec![n]))
            );
        }
        // c (x) 1 - 1 (x) c dies for invariant c
        let mut state = 31u64;
        for label in [GroupLabel::A1, GroupLabel::A2] {
            let g = gd(label);
            let raw = seeded_poly(g.rank(), &mut state, 4, 2);
            let mut c = LaurentPoly::zero(g.rank());
            for w in 0..g.wg.order() {
                c = c.add(&raw.act(&g.wg, w));
            }
            assert!(c.is_invariant(&g.wg, &ParabolicSubset::full(g.rank())));
            let diff = TensorElem::pure(&c, &LaurentPoly::one(g.rank()))
                .sub(&TensorElem::pure(&LaurentPoly::one(g.rank()), &c));
            assert!(chi_t(&g, &diff).is_zero(), "{label}");
        }
    }

    #[test]
    fn twisted_leibniz_identity() {
        // L_g((1-e^a) g) three-term expansion, for every positive root and
        // every simple reflection, on random input.
        for label in [GroupLabel::A2, GroupLabel::B2] {
            let g = gd(label);
            let mut state = 77u64;
            for _ in 0..5 {
                let f = seeded_poly(2, &mut state, 4, 2);
                for alpha in &g.rs.positive_roots {
                    let one_minus =
                        LaurentPoly::one(2).sub(&LaurentPoly::exp(alpha));
                    for j in 0..2 {
                        let lhs = demazure_simple(&g.rs, &one_minus.mul(&f), j);
                        let l_one_minus = demazure_simple(&g.rs, &one_minus, j);
                        let l_f = demazure_simple(&g.rs, &f, j);
                        let gamma = &g.rs.simple_roots[j];
                        let one_minus_gamma =
                            LaurentPoly::one(2).sub(&LaurentPoly::exp(gamma));
                        let rhs = f
                            .mul(&l_one_minus)
                            .add(&one_minus.mul(&l_f))
                            .sub(&one_minus_gamma.mul(&l_one_minus).mul(&l_f));
                        assert_eq!(lhs, rhs, "{label}");
                    }
                }
            }
        }
    }

    #[test]
    fn longest_operator_via_antisymmetrizer() {
        use crate::laurent::antisymmetrize;
        for label in [GroupLabel::A1, GroupLabel::A2, GroupLabel::B2] {
            let g = gd(label);
            let mut state = 4242u64;
            for _ in 0..6 {
                let f = seeded_poly(g.rank(), &mut state, 4, 2);
                let direct = demazure(&g, &f, g.wg.longest_element());
                let j_f = antisymmetrize(&g.wg, &f);
                let j_rho_neg = antisymmetrize(&g.wg, &LaurentPoly::exp(&g.rs.rho.neg()));
                let quotient = j_f.exact_div(&j_rho_neg).expect("J(f)/J(e^-rho) exact");
                let rhs = quotient.mul_monomial(&g.rs.rho.neg(), &rat_int(1));
                assert_eq!(direct, rhs, "{label}");
            }
        }
        let _ = rat_frac(1, 2);
    }

    #[test]
    fn invariant_slices_are_transparent() {
        // For W_I-invariant r: L_{v w'}(r e^{-rho}) = L_v(r e^{-rho}) for
        // (w', v) in W_I x W^I.
        let g = gd(GroupLabel::A2);
        let mut state = 2024u64;
        for mask in 0u32..4 {
            let i_set = ParabolicSubset::from_mask(2, mask);
            let raw = seeded_poly(2, &mut state, 4, 2);
            let mut r = LaurentPoly::zero(2);
            for &u in &g.wg.subgroup(&i_set) {
                r = r.add(&raw.act(&g.wg, u));
            }
            assert!(r.is_invariant(&g.wg, &i_set));
            let target = r.mul_monomial(&g.rs.rho.neg(), &rat_int(1));
            for &wp in &g.wg.subgroup(&i_set) {
                for &v in &g.wg.min_coset_reps(&i_set) {
                    let vwp = g.wg.mult(v, wp);
                    assert_eq!(
                        g.wg.length(vwp),
                        g.wg.length(v) + g.wg.length(wp),
                        "coset lengths add"
                    );
                    let lhs = demazure(&g, &target, vwp);
                    let rhs = demazure(&g, &target, v);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
