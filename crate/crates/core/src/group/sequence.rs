use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};

/// A sequence `(alpha_1, ..., alpha_m)` with entries in `1..=k`, indexing the
/// basis tensor `e_alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSequence(Vec<u8>);

impl IndexSequence {
    pub fn new(entries: Vec<u8>) -> Self {
        IndexSequence(entries)
    }

    /// Validates entries against `1..=k`.
    pub fn checked(entries: Vec<u8>, k: u32) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x == 0 || x as u32 > k) {
            return Err(Error::EntryOutOfRange { entry: bad as u32, k });
        }
        Ok(IndexSequence(entries))
    }

    pub fn constant(len: usize, value: u8) -> Self {
        IndexSequence(vec![value; len])
    }

    /// `(1, 2, 2, ..., 2)`.
    pub fn one_then_twos(len: usize) -> Self {
        let mut v = vec![2; len];
        v[0] = 1;
        IndexSequence(v)
    }

    /// `(1, 2, ..., 2, 3)`.
    pub fn one_twos_three(len: usize) -> Self {
        let mut v = vec![2; len];
        v[0] = 1;
        v[len - 1] = 3;
        IndexSequence(v)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest entry, i.e. the smallest `k` with this sequence in `Gamma_k^m`.
    pub fn max_entry(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// The right action `(alpha sigma)_i = alpha_{sigma(i)}`.
    pub fn act_perm(&self, perm: &[u16]) -> IndexSequence {
        IndexSequence(perm.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn act(&self, g: &FiniteGroup, sigma: GroupElement) -> IndexSequence {
        self.act_perm(g.perm(sigma))
    }

    pub(crate) fn is_fixed_by(&self, perm: &[u16]) -> bool {
        perm.iter().enumerate().all(|(i, &j)| self.0[i] == self.0[j as usize])
    }

    /// Is this the lexicographically least sequence of its orbit?
    pub fn is_orbit_representative(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|x| {
            let perm = g.perm_idx(x);
            for (i, &j) in perm.iter().enumerate() {
                let (a, b) = (self.0[i], self.0[j as usize]);
                if a != b {
                    return a < b;
                }
            }
            true
        })
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lexicographically least members of the first `cap` orbits of
/// `Gamma_k^m` under `G`, in lexicographic order.
///
/// Sequences are generated lazily; `Gamma_k^m` is never materialised.
pub fn orbit_representatives(g: &FiniteGroup, k: u32, cap: usize) -> Vec<IndexSequence> {
    assert!(k >= 1 && k <= u8::MAX as u32);
    let m = g.degree();
    let mut reps = Vec::new();
    let mut current = vec![1u8; m];
    loop {
        if reps.len() >= cap {
            break;
        }
        let seq = IndexSequence(current.clone());
        if seq.is_orbit_representative(g) {
            reps.push(seq);
        }
        // odometer increment, last position fastest
        let mut pos = m;
        loop {
            if pos == 0 {
                return reps;
            }
            pos -= 1;
            if (current[pos] as u32) < k {
                current[pos] += 1;
                break;
            }
            current[pos] = 1;
        }
    }
    reps
}

/// Builds `gamma` in `Gamma_k^m` with `C ∩ G_gamma` equal to `target`.
///
/// `target` must be a rotation subgroup `<rot^d>` inside `support`. The
/// sequence repeats the pattern `(1, 2, ..., 2)` of length `d` along the first
/// cycle of the rotation generator and is constant elsewhere; when
/// `target == support` it is constant. The result is checked against
/// [`FiniteGroup::stabilizer`].
pub fn construct_sequence_with_stabilizer(
    g: &FiniteGroup,
    k: u32,
    support: &Subgroup,
    target: &Subgroup,
) -> Result<IndexSequence> {
    let r = g.rotation_order();
    let step = target
        .members()
        .iter()
        .filter(|x| !x.reflect && x.exponent > 0)
        .map(|x| x.exponent)
        .min()
        .unwrap_or(r);
    if target.members().iter().any(|x| x.reflect)
        || *target != g.rotation_subgroup(step)
        || target.members().iter().any(|&x| !support.contains(g, x))
    {
        return Err(Error::NotRotationSubgroup);
    }
    let t_gamma = (support.order() / target.order()) as u32;
    let degree = g.degree();
    let gamma = if target == support {
        IndexSequence::constant(degree, 1)
    } else {
        if k < 2 {
            return Err(Error::ConstructionFailure {
                t_gamma,
                reason: format!("k = {k} leaves only the constant sequence"),
            });
        }
        let rot = g.perm(g.rot());
        let mut entries = vec![2u8; degree];
        // walk the cycle of rot through point 0
        let mut x = 0usize;
        for pos in 0..r {
            entries[x] = if pos % step == 0 { 1 } else { 2 };
            x = rot[x] as usize;
        }
        IndexSequence(entries)
    };
    let stab = g.stabilizer(&gamma)?;
    if support.intersection(&stab) != *target {
        return Err(Error::ConstructionFailure {
            t_gamma,
            reason: format!("pattern {gamma} has the wrong stabilizer"),
        });
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupFamily};

    fn burnside(g: &FiniteGroup, k: u32) -> usize {
        let total: u64 = g
            .elements()
            .iter()
            .map(|&x| {
                let fixed_points = g.perm(x).iter().enumerate().filter(|(i, &j)| *i == j as usize).count();
                let cycles = g.cycles(x).len() + fixed_points;
                (k as u64).pow(cycles as u32)
            })
            .sum();
        (total / g.order() as u64) as usize
    }

    #[test]
    fn single_orbit_for_k_one() {
        let g = build_group(GroupFamily::Dicyclic(2)).unwrap();
        let reps = orbit_representatives(&g, 1, 10);
        assert_eq!(reps, vec![IndexSequence::constant(8, 1)]);
    }

    #[test]
    fn orbit_count_matches_burnside() {
        for fam in [
            GroupFamily::Dihedral(3),
            GroupFamily::Dihedral(4),
            GroupFamily::Dihedral(6),
            GroupFamily::Dicyclic(2),
            GroupFamily::Semidihedral(2),
        ] {
            let g = build_group(fam).unwrap();
            for k in 1..=3 {
                if (k as f64).powi(g.degree() as i32) > 1e6 {
                    continue;
                }
                let reps = orbit_representatives(&g, k, usize::MAX);
                assert_eq!(reps.len(), burnside(&g, k), "{fam} k={k}");
            }
        }
    }

    #[test]
    fn representatives_are_least_and_distinct() {
        let g = build_group(GroupFamily::Dihedral(5)).unwrap();
        let reps = orbit_representatives(&g, 3, 30);
        for a in &reps {
            for x in g.elements() {
                assert!(*a <= a.act(&g, x));
            }
        }
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(g.elements().iter().all(|&x| a.act(&g, x) != *b));
            }
        }
    }

    #[test]
    fn cap_limits_output() {
        let g = build_group(GroupFamily::Semidihedral(3)).unwrap();
        assert_eq!(orbit_representatives(&g, 3, 5).len(), 5);
    }

    #[test]
    fn construction_trivial_target() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let c = g.rotation_subgroup(1);
        let trivial = g.rotation_subgroup(0);
        let gamma = construct_sequence_with_stabilizer(&g, 2, &c, &trivial).unwrap();
        assert_eq!(gamma, IndexSequence::one_then_twos(12));
    }

    #[test]
    fn construction_full_target_is_constant() {
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let c = g.rotation_subgroup(3);
        let gamma = construct_sequence_with_stabilizer(&g, 1, &c, &c).unwrap();
        assert_eq!(gamma, IndexSequence::constant(24, 1));
    }

    #[test]
    fn construction_t24_period_six() {
        // 2n = 12, p = 3, C = <r^3> of order 4, t_gamma = 2: target <r^6>
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let c = g.rotation_subgroup(3);
        let target = g.rotation_subgroup(6);
        let gamma = construct_sequence_with_stabilizer(&g, 2, &c, &target).unwrap();
        let stab = g.stabilizer(&gamma).unwrap();
        assert_eq!(c.intersection(&stab), target);
        assert_eq!(c.order() / target.order(), 2);
        assert_eq!(&gamma.entries()[..12], &[1, 2, 2, 2, 2, 2, 1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn construction_needs_two_letters() {
        let g = build_group(GroupFamily::Dihedral(6)).unwrap();
        let c = g.rotation_subgroup(1);
        let target = g.rotation_subgroup(2);
        assert!(matches!(
            construct_sequence_with_stabilizer(&g, 1, &c, &target),
            Err(Error::ConstructionFailure { t_gamma: 2, .. })
        ));
    }

    #[test]
    fn construction_rejects_non_rotation_target() {
        let g = build_group(GroupFamily::Dihedral(6)).unwrap();
        let c = g.rotation_subgroup(1);
        let target = g.generated(&[g.refl()]);
        assert_eq!(
            construct_sequence_with_stabilizer(&g, 2, &c, &target),
            Err(Error::NotRotationSubgroup)
        );
    }
}
