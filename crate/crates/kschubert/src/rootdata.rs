//! Root systems in fundamental-weight coordinates.
//!
//! A weight is stored as its vector of coroot pairings `coords[i] = <lambda, alpha_i^v>`,
//! so the simple root `alpha_j` is column `j` of the Cartan matrix and the simple
//! reflection `s_j` is the one-line update `lambda - lambda[j] * alpha_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the positive-root closure; hitting it means the matrix is not
/// of finite type.
pub const POSITIVE_ROOT_CAP: usize = 200;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinatewise sum with overflow checks; exponent corruption must abort
    /// loudly rather than wrap.
    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.0.len(), other.0.len(), "rank mismatch in weight add");
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.0.len(), other.0.len(), "rank mismatch in weight sub");
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_sub(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(
            self.0
                .iter()
                .map(|a| a.checked_mul(k).expect("weight coordinate overflow"))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Parse the CLI syntax: comma-separated integers, e.g. `1,-2`.
    pub fn parse(s: &str) -> Result<Weight> {
        let coords: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        coords
            .map(Weight)
            .map_err(|e| Error::Usage(format!("bad weight '{s}': {e}")))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The built-in group labels plus `Custom` for a user-supplied Cartan matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GroupLabel {
    A1,
    A2,
    A3,
    B2,
    C2,
    G2,
    Custom,
}

impl GroupLabel {
    pub const BUILTIN: [GroupLabel; 6] = [
        GroupLabel::A1,
        GroupLabel::A2,
        GroupLabel::A3,
        GroupLabel::B2,
        GroupLabel::C2,
        GroupLabel::G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupLabel::A1 => "A1",
            GroupLabel::A2 => "A2",
            GroupLabel::A3 => "A3",
            GroupLabel::B2 => "B2",
            GroupLabel::C2 => "C2",
            GroupLabel::G2 => "G2",
            GroupLabel::Custom => "Custom",
        }
    }

    pub fn parse(s: &str) -> Result<GroupLabel> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Ok(GroupLabel::A1),
            "A2" => Ok(GroupLabel::A2),
            "A3" => Ok(GroupLabel::A3),
            "B2" => Ok(GroupLabel::B2),
            "C2" => Ok(GroupLabel::C2),
            "G2" => Ok(GroupLabel::G2),
            other => Err(Error::Usage(format!(
                "unknown group '{other}' (expected one of A1 A2 A3 B2 C2 G2)"
            ))),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cartan matrix plus its label. `cartan[i][j] = <alpha_j, alpha_i^v>`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CartanDatum {
    pub label: GroupLabel,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
}

impl CartanDatum {
    pub fn builtin(label: GroupLabel) -> CartanDatum {
        let cartan: Vec<Vec<i64>> = match label {
            GroupLabel::A1 => vec![vec![2]],
            GroupLabel::A2 => vec![vec![2, -1], vec![-1, 2]],
            GroupLabel::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            GroupLabel::B2 => vec![vec![2, -1], vec![-2, 2]],
            // C2 is the transpose orientation of B2.
            GroupLabel::C2 => vec![vec![2, -2], vec![-1, 2]],
            GroupLabel::G2 => vec![vec![2, -1], vec![-3, 2]],
            GroupLabel::Custom => panic!("Custom label requires an explicit matrix"),
        };
        let rank = cartan.len();
        CartanDatum {
            label,
            rank,
            cartan,
        }
    }

    pub fn custom(cartan: Vec<Vec<i64>>) -> Result<CartanDatum> {
        let rank = cartan.len();
        let datum = CartanDatum {
            label: GroupLabel::Custom,
            rank,
            cartan,
        };
        datum.validate()?;
        Ok(datum)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if self.cartan.len() != self.rank || self.cartan.iter().any(|r| r.len() != self.rank) {
            return Err(Error::InvalidCartan(format!(
                "matrix must be {0}x{0}",
                self.rank
            )));
        }
        for i in 0..self.rank {
            if self.cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({i},{i}) is {}, expected 2",
                    self.cartan[i][i]
                )));
            }
            for j in 0..self.rank {
                if i != j {
                    if self.cartan[i][j] > 0 {
                        return Err(Error::InvalidCartan(format!(
                            "off-diagonal entry ({i},{j}) is positive"
                        )));
                    }
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0) {
                        return Err(Error::InvalidCartan(format!(
                            "entries ({i},{j}) and ({j},{i}) must vanish together"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A root system: Cartan datum, simple and positive roots, and `rho`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub datum: CartanDatum,
    /// `alpha_j` in fundamental-weight coordinates (column j of the Cartan matrix).
    pub simple_roots: Vec<Weight>,
    /// All positive roots, in the deterministic order produced by the closure.
    pub positive_roots: Vec<Weight>,
    /// The same roots in simple-root coordinates.
    positive_roots_simple: Vec<Vec<i64>>,
    /// Half the sum of positive roots; always `(1,...,1)`.
    pub rho: Weight,
    /// Symmetrizer `d` with `d_i * C[i][j]` symmetric; fixes relative root lengths.
    symmetrizer: Vec<i64>,
}

impl RootSystem {
    pub fn build(datum: CartanDatum) -> Result<RootSystem> {
        datum.validate()?;
        let rank = datum.rank;
        let simple_roots: Vec<Weight> = (0..rank)
            .map(|j| Weight((0..rank).map(|i| datum.cartan[i][j]).collect()))
            .collect();

        // Close the simple roots under simple reflections, keeping vectors whose
        // simple-root coordinates stay nonnegative. Pairs are (weight coords,
        // simple coords); reflecting subtracts the pairing from coordinate j.
        let mut roots: Vec<(Weight, Vec<i64>)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for j in 0..rank {
            let mut simple = vec![0i64; rank];
            simple[j] = 1;
            seen.insert(simple.clone());
            roots.push((simple_roots[j].clone(), simple));
        }
        let mut frontier: Vec<usize> = (0..roots.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &idx in &frontier {
                let (w, s) = roots[idx].clone();
                for j in 0..rank {
                    let k = w.0[j];
                    let mut s2 = s.clone();
                    s2[j] -= k;
                    if s2.iter().any(|&c| c < 0) {
                        continue;
                    }
                    let w2 = reflect_weight(&datum, j, &w);
                    if seen.insert(s2.clone()) {
                        roots.push((w2, s2));
                        next.push(roots.len() - 1);
                        if roots.len() > POSITIVE_ROOT_CAP {
                            return Err(Error::NotFiniteType(POSITIVE_ROOT_CAP));
                        }
                    }
                }
            }
            frontier = next;
        }
        roots.sort_by(|a, b| {
            let ha: i64 = a.1.iter().sum();
            let hb: i64 = b.1.iter().sum();
            (ha, &a.1).cmp(&(hb, &b.1))
        });
        let positive_roots: Vec<Weight> = roots.iter().map(|(w, _)| w.clone()).collect();
        let positive_roots_simple: Vec<Vec<i64>> = roots.iter().map(|(_, s)| s.clone()).collect();

        let symmetrizer = compute_symmetrizer(&datum)?;

        Ok(RootSystem {
            simple_roots,
            positive_roots,
            positive_roots_simple,
            rho: Weight(vec![1; rank]),
            symmetrizer,
            datum,
        })
    }

    pub fn from_label(label: GroupLabel) -> Result<RootSystem> {
        RootSystem::build(CartanDatum::builtin(label))
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `s_j(lambda) = lambda - <lambda, alpha_j^v> alpha_j`, zero-based `j`.
    pub fn reflect(&self, j: usize, lambda: &Weight) -> Weight {
        reflect_weight(&self.datum, j, lambda)
    }

    /// `<lambda, alpha_j^v>` is just a coordinate read.
    pub fn pairing(&self, lambda: &Weight, j: usize) -> i64 {
        lambda.0[j]
    }

    /// Is this weight a positive root?
    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.iter().any(|r| r == w)
    }

    /// `<lambda, beta^v>` for the positive root with index `idx`.
    ///
    /// With symmetrizer `d`, `(lambda, alpha_j) = d_j lambda_j` and
    /// `(beta,beta) = sum_{j,k} c_j c_k d_k C[k][j]` for `beta = sum c_j alpha_j`,
    /// so the pairing is `2 (lambda, beta) / (beta, beta)`; it is always an integer.
    pub fn coroot_pairing(&self, lambda: &Weight, idx: usize) -> i64 {
        let c = &self.positive_roots_simple[idx];
        let d = &self.symmetrizer;
        let rank = self.rank();
        let mut num = 0i64;
        for j in 0..rank {
            num += 2 * c[j] * d[j] * lambda.0[j];
        }
        let mut len2 = 0i64;
        for j in 0..rank {
            for k in 0..rank {
                len2 += c[j] * c[k] * d[k] * self.datum.cartan[k][j];
            }
        }
        assert!(len2 > 0, "root length must be positive");
        assert_eq!(num % len2, 0, "coroot pairing must be integral");
        num / len2
    }

    /// Positive root in simple-root coordinates.
    pub fn positive_root_simple_coords(&self, idx: usize) -> &[i64] {
        &self.positive_roots_simple[idx]
    }
}

fn reflect_weight(datum: &CartanDatum, j: usize, lambda: &Weight) -> Weight {
    let k = lambda.0[j];
    let mut out = lambda.0.clone();
    for i in 0..datum.rank {
        out[i] = out[i]
            .checked_sub(k.checked_mul(datum.cartan[i][j]).expect("overflow"))
            .expect("overflow");
    }
    Weight(out)
}

/// Find positive integers `d_i` with `d_i C[i][j] = d_j C[j][i]` by propagating
/// ratios along the Dynkin graph, then clearing denominators.
fn compute_symmetrizer(datum: &CartanDatum) -> Result<Vec<i64>> {
    let rank = datum.rank;
    // Rational d_i as (num, den) pairs; propagate over edges.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; rank];
    for start in 0..rank {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (ni, di_) = d[i].unwrap();
            for j in 0..rank {
                if i == j || datum.cartan[i][j] == 0 {
                    continue;
                }
                // d_j = d_i * C[i][j] / C[j][i]
                let nj = ni * datum.cartan[i][j];
                let dj = di_ * datum.cartan[j][i];
                let g = gcd(nj.abs(), dj.abs());
                let (nj, dj) = (nj / g, dj / g);
                let (nj, dj) = if dj < 0 { (-nj, -dj) } else { (nj, dj) };
                match d[j] {
                    None => {
                        d[j] = Some((nj, dj));
                        stack.push(j);
                    }
                    Some((n2, d2)) => {
                        if n2 * dj != nj * d2 {
                            return Err(Error::InvalidCartan(
                                "matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
    }
    let lcm_den = d
        .iter()
        .map(|p| p.unwrap().1)
        .fold(1i64, |acc, x| acc / gcd(acc, x) * x);
    let mut out: Vec<i64> = d.iter().map(|p| p.unwrap().0 * (lcm_den / p.unwrap().1)).collect();
    let g = out.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()));
    if g > 1 {
        for x in &mut out {
            *x /= g;
        }
    }
    if out.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
    }
    Ok(out)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_single_positive_root() {
        let rs = RootSystem::from_label(GroupLabel::A1).unwrap();
        assert_eq!(rs.positive_roots, vec![Weight(vec![2])]);
        assert_eq!(rs.rho, Weight(vec![1]));
    }

    #[test]
    fn a2_positive_roots_and_rho() {
        let rs = RootSystem::from_label(GroupLabel::A2).unwrap();
        let mut roots = rs.positive_roots.clone();
        roots.sort();
        let mut expected = vec![
            Weight(vec![2, -1]),
            Weight(vec![-1, 2]),
            Weight(vec![1, 1]),
        ];
        expected.sort();
        assert_eq!(roots, expected);
        assert_eq!(rs.rho, Weight(vec![1, 1]));
    }

    #[test]
    fn g2_has_six_positive_roots() {
        let rs = RootSystem::from_label(GroupLabel::G2).unwrap();
        assert_eq!(rs.num_positive_roots(), 6);
    }

    #[test]
    fn builtin_root_counts() {
        for (label, count) in [
            (GroupLabel::A1, 1),
            (GroupLabel::A2, 3),
            (GroupLabel::A3, 6),
            (GroupLabel::B2, 4),
            (GroupLabel::C2, 4),
            (GroupLabel::G2, 6),
        ] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.num_positive_roots(), count, "{label}");
        }
    }

    #[test]
    fn reflect_examples() {
        let a1 = RootSystem::from_label(GroupLabel::A1).unwrap();
        assert_eq!(a1.reflect(0, &Weight(vec![1])), Weight(vec![-1]));
        let a2 = RootSystem::from_label(GroupLabel::A2).unwrap();
        assert_eq!(a2.reflect(0, &a2.rho), Weight(vec![-1, 2]));
        assert_eq!(a2.reflect(1, &Weight::zero(2)), Weight::zero(2));
    }

    #[test]
    fn reflect_is_an_involution() {
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            let r = rs.rank();
            let mut probe = Weight((0..r as i64).map(|i| 2 * i - 3).collect());
            probe.0[0] = 5;
            for j in 0..r {
                assert_eq!(rs.reflect(j, &rs.reflect(j, &probe)), probe);
            }
        }
    }

    #[test]
    fn reflecting_a_positive_root_stays_a_root() {
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            for (idx, beta) in rs.positive_roots.iter().enumerate() {
                for j in 0..rs.rank() {
                    let image = rs.reflect(j, beta);
                    let neg = image.neg();
                    assert!(
                        rs.is_positive_root(&image) || rs.is_positive_root(&neg),
                        "{label}: s_{j} of root {idx} is not a root"
                    );
                    if rs.is_positive_root(&neg) {
                        assert_eq!(beta, &rs.simple_roots[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = RootSystem::from_label(GroupLabel::A2).unwrap();
        let alpha1 = &a2.simple_roots[0];
        assert_eq!(a2.pairing(alpha1, 0), 2);
        assert_eq!(a2.pairing(alpha1, 1), -1);
        let a1 = RootSystem::from_label(GroupLabel::A1).unwrap();
        assert_eq!(a1.pairing(&Weight(vec![-1]), 0), -1);
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            for j in 0..rs.rank() {
                assert_eq!(rs.pairing(&rs.rho, j), 1);
            }
        }
    }

    #[test]
    fn invalid_cartan_rejected() {
        assert!(matches!(
            CartanDatum::custom(vec![vec![1]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanDatum::custom(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanDatum::custom(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::InvalidCartan(_))
        ));
    }

    #[test]
    fn affine_cartan_is_not_finite_type() {
        // Affine A1: the closure never stops producing roots.
        let datum = CartanDatum::custom(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(
            RootSystem::build(datum),
            Err(Error::NotFiniteType(_))
        ));
    }

    #[test]
    fn positive_roots_have_nonnegative_simple_coords() {
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            for i in 0..rs.num_positive_roots() {
                assert!(rs.positive_root_simple_coords(i).iter().all(|&c| c >= 0));
            }
        }
    }

    #[test]
    fn coroot_pairings_on_rho_are_positive() {
        for label in GroupLabel::BUILTIN {
            let rs = RootSystem::from_label(label).unwrap();
            for i in 0..rs.num_positive_roots() {
                assert!(rs.coroot_pairing(&rs.rho, i) >= 1);
            }
        }
    }
}
