//! Decomposable symmetrized tensors and the orbital subspaces they span.
//!
//! `e^phi_alpha = (phi(e)/|S|) * sum_{sigma in S} phi(sigma) e_{alpha sigma^-1}`
//! with `S` the domain of `phi`. Tensors are sparse maps from index sequences
//! to exact coefficients; the basis `{e_alpha}` is orthonormal.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::brauer::{cyclic_support, BrauerCharacter};
use crate::cyclo::{circulant_nullity, CycMatrix, CycNum, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, IndexSequence, Subgroup};

/// A sparse tensor `sum c_delta e_delta`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTensor {
    conductor: u32,
    terms: HashMap<IndexSequence, CycNum>,
}

impl SymTensor {
    pub fn zero(conductor: u32) -> Self {
        SymTensor {
            conductor,
            terms: HashMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, delta: &IndexSequence) -> CycNum {
        self.terms
            .get(delta)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.conductor))
    }

    /// Terms sorted by index sequence.
    pub fn terms(&self) -> Vec<(&IndexSequence, &CycNum)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    fn add_term(&mut self, delta: IndexSequence, c: CycNum) {
        use std::collections::hash_map::Entry;
        match self.terms.entry(delta) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `<self, self>`.
    pub fn norm_sq(&self) -> CycNum {
        inner_product_direct(self, self)
    }
}

/// `e^phi_alpha`, with terms of equal `alpha sigma^-1` merged.
pub fn symmetrized_tensor(g: &FiniteGroup, phi: &BrauerCharacter, alpha: &IndexSequence) -> SymTensor {
    let domain = phi.domain_idx();
    let scale = Rational::new(BigInt::from(1), BigInt::from(domain.len()));
    let lead = phi.degree().scale(&scale);
    let mut out = SymTensor::zero(phi.conductor());
    for x in domain {
        let value = phi.value_idx(x).expect("domain element");
        if value.is_zero() {
            continue;
        }
        let delta = alpha.act_perm(g.perm_idx(g.inv_idx(x)));
        out.add_term(delta, &lead * value);
    }
    out
}

/// `<u, v> = sum_delta u_delta * conj(v_delta)`.
pub fn inner_product_direct(u: &SymTensor, v: &SymTensor) -> CycNum {
    let mut acc = CycNum::zero(u.conductor);
    for (delta, a) in &u.terms {
        if let Some(b) = v.terms.get(delta) {
            acc += &(a * &b.conj());
        }
    }
    acc
}

/// `<e^phi_{alpha sigma1}, e^phi_{alpha sigma2}>` from the stabilizer of
/// `alpha`, without expanding either tensor:
///
/// `(phi(e)^2/|S|^2) * sum_{mu in S} sum_{tau in G_alpha} phi(mu) conj(phi(mu sigma1^-1 tau sigma2))`
///
/// where only terms with `mu sigma1^-1 tau sigma2 in S` contribute.
pub fn inner_product_formula(
    g: &FiniteGroup,
    phi: &BrauerCharacter,
    alpha: &IndexSequence,
    sigma1: GroupElement,
    sigma2: GroupElement,
) -> Result<CycNum> {
    let stab = g.stabilizer(alpha)?;
    let domain = phi.domain_idx();
    let s1_inv = g.inv_idx(g.index(sigma1));
    let s2 = g.index(sigma2);
    let middles: Vec<usize> = stab
        .members()
        .iter()
        .map(|&tau| g.mul_idx(g.mul_idx(s1_inv, g.index(tau)), s2))
        .collect();
    let mut acc = CycNum::zero(phi.conductor());
    for &mu in &domain {
        let a = phi.value_idx(mu).expect("domain element");
        if a.is_zero() {
            continue;
        }
        let mut inner = CycNum::zero(phi.conductor());
        for &mid in &middles {
            if let Some(b) = phi.value_idx(g.mul_idx(mu, mid)) {
                inner += b;
            }
        }
        if !inner.is_zero() {
            acc += &(a * &inner.conj());
        }
    }
    let d = phi.degree();
    let scale = Rational::new(BigInt::from(1), BigInt::from(domain.len() * domain.len()));
    Ok((&(d * d) * &acc).scale(&scale))
}

/// The action of `sigma` on tensors: `e_delta -> e_{delta sigma^-1}`.
pub fn translate(g: &FiniteGroup, u: &SymTensor, sigma: GroupElement) -> SymTensor {
    let perm = g.perm(g.inv(sigma));
    let mut out = SymTensor::zero(u.conductor);
    for (delta, c) in &u.terms {
        out.add_term(delta.act_perm(perm), c.clone());
    }
    out
}

/// The partition of `G` into double cosets `G_alpha sigma C`, each sorted,
/// ordered by smallest member.
pub fn equiv_classes_sim_alpha(g: &FiniteGroup, c: &Subgroup, alpha: &IndexSequence) -> Result<Vec<Vec<GroupElement>>> {
    let stab = g.stabilizer(alpha)?;
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut class = Vec::new();
        for &h in stab.members() {
            let hx = g.mul_idx(g.index(h), x);
            for &k in c.members() {
                let y = g.mul_idx(hx, g.index(k));
                if !seen[y] {
                    seen[y] = true;
                    class.push(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class.into_iter().map(|y| g.element(y)).collect());
    }
    Ok(classes)
}

/// Data attached to `gamma` relative to the cyclic support `C = <tau>`.
#[derive(Debug, Clone)]
pub struct OrbitalData {
    pub gamma: IndexSequence,
    pub support: Subgroup,
    pub stabilizer: Subgroup,
    /// `|C| / |C ∩ G_gamma|`.
    pub t_gamma: u32,
    /// `tau, tau^2, ..., tau^t_gamma`.
    pub coset_reps: Vec<GroupElement>,
    /// `v_j = sum_{h in C ∩ G_gamma} phi(h tau^(t_gamma - j))`, `j = 0..t_gamma`.
    pub v: Vec<CycNum>,
    /// Number of `t_gamma`-th roots of unity annihilating `sum v_j x^j`.
    pub d_gamma: u32,
    /// `t_gamma - d_gamma`.
    pub dim: u32,
}

struct CyclicContext {
    support: Subgroup,
    tau: GroupElement,
    stabilizer: Subgroup,
    meet: Subgroup,
    t_gamma: u32,
}

fn cyclic_context(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<CyclicContext> {
    let info = cyclic_support(g, phi);
    if !info.support_is_cyclic {
        return Err(Error::SupportNotCyclic(phi.label()));
    }
    let stabilizer = g.stabilizer(gamma)?;
    let meet = info.subgroup.intersection(&stabilizer);
    let t_gamma = (info.subgroup.order() / meet.order()) as u32;
    Ok(CyclicContext {
        support: info.subgroup,
        tau: info.generator,
        stabilizer,
        meet,
        t_gamma,
    })
}

fn sum_over(g: &FiniteGroup, phi: &BrauerCharacter, h: &Subgroup, x: GroupElement) -> CycNum {
    let mut acc = CycNum::zero(phi.conductor());
    for &m in h.members() {
        acc += &phi.evaluate(g.mul(m, x)).expect("C lies in the domain");
    }
    acc
}

pub fn orbital_data(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<OrbitalData> {
    let ctx = cyclic_context(g, phi, gamma)?;
    let t = ctx.t_gamma;
    let v: Vec<CycNum> = (0..t)
        .map(|j| sum_over(g, phi, &ctx.meet, g.pow(ctx.tau, t - j)))
        .collect();
    let d_gamma = circulant_nullity(&v) as u32;
    Ok(OrbitalData {
        gamma: gamma.clone(),
        coset_reps: (1..=t).map(|i| g.pow(ctx.tau, i)).collect(),
        support: ctx.support,
        stabilizer: ctx.stabilizer,
        t_gamma: t,
        v,
        d_gamma,
        dim: t - d_gamma,
    })
}

/// `(M_gamma)_ij = sum_{h in C ∩ G_gamma} phi(h tau^i tau^j)`, `i, j = 1..t_gamma`.
pub fn matrix_m_gamma(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<CycMatrix> {
    let ctx = cyclic_context(g, phi, gamma)?;
    let t = ctx.t_gamma as usize;
    let row: Vec<CycNum> = (0..2 * t + 1)
        .map(|k| sum_over(g, phi, &ctx.meet, g.pow(ctx.tau, k as u32)))
        .collect();
    Ok(CycMatrix::from_fn(t, t, |i, j| row[i + j + 2].clone()))
}

/// The standard tensors `e^phi_{gamma tau^i}`, `i = 1..t_gamma`.
pub fn coset_tensors(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<Vec<SymTensor>> {
    let ctx = cyclic_context(g, phi, gamma)?;
    Ok((1..=ctx.t_gamma)
        .map(|i| symmetrized_tensor(g, phi, &gamma.act(g, g.pow(ctx.tau, i))))
        .collect())
}

fn gram_of(tensors: &[SymTensor]) -> CycMatrix {
    let n = tensors.len();
    let conjugates: Vec<SymTensor> = tensors
        .iter()
        .map(|u| SymTensor {
            conductor: u.conductor,
            terms: u.terms.iter().map(|(d, c)| (d.clone(), c.conj())).collect(),
        })
        .collect();
    let mut upper: Vec<Vec<CycNum>> = vec![Vec::new(); n];
    for (i, u) in tensors.iter().enumerate() {
        for v in &conjugates[i..] {
            let mut acc = CycNum::zero(u.conductor);
            for (delta, a) in &u.terms {
                if let Some(b) = v.terms.get(delta) {
                    acc += &(a * b);
                }
            }
            upper[i].push(acc);
        }
    }
    CycMatrix::from_fn(n, n, |i, j| {
        if i <= j {
            upper[i][j - i].clone()
        } else {
            upper[j][i - j].conj()
        }
    })
}

/// Gram matrix of [`coset_tensors`] by direct expansion.
pub fn gram_matrix(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<CycMatrix> {
    Ok(gram_of(&coset_tensors(g, phi, gamma)?))
}

/// Lexicographically first set of `size` indices whose tensors are nonzero
/// and pairwise orthogonal under `gram`.
fn first_orthogonal_subset(gram: &CycMatrix, size: usize, forced: Option<usize>) -> Option<Vec<usize>> {
    let n = gram.rows();
    let usable: Vec<bool> = (0..n).map(|i| !gram.get(i, i).is_zero()).collect();
    fn extend(gram: &CycMatrix, usable: &[bool], chosen: &mut Vec<usize>, from: usize, size: usize) -> bool {
        if chosen.len() == size {
            return true;
        }
        let n = usable.len();
        for i in from..n {
            if n - i < size - chosen.len() {
                break;
            }
            if usable[i] && chosen.iter().all(|&j| gram.get(j, i).is_zero()) {
                chosen.push(i);
                if extend(gram, usable, chosen, i + 1, size) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if size == 0 {
        return Some(chosen);
    }
    match forced {
        Some(f) => {
            if !usable[f] {
                return None;
            }
            // the forced tensor is put first; the rest are searched in order
            let reordered: Vec<usize> = std::iter::once(f).chain((0..n).filter(|&i| i != f)).collect();
            let sub = CycMatrix::from_fn(n, n, |i, j| gram.get(reordered[i], reordered[j]).clone());
            let usable: Vec<bool> = reordered.iter().map(|&i| usable[i]).collect();
            chosen.push(0);
            extend(&sub, &usable, &mut chosen, 1, size).then(|| {
                let mut out: Vec<usize> = chosen.iter().map(|&i| reordered[i]).collect();
                out.sort_unstable();
                out
            })
        }
        None => extend(gram, &usable, &mut chosen, 0, size).then_some(chosen),
    }
}

/// Searches the coset tensors `e^phi_{gamma tau^i}` for an orthogonal basis of
/// the orbital subspace over `C`.
///
/// Returns the exponents `i` (1-based, increasing) of the lexicographically
/// first witness, `Some(vec![])` when the subspace is zero, or `None` when no
/// subset of the right size is pairwise orthogonal.
pub fn obasis_search(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence) -> Result<Option<Vec<u32>>> {
    let data = orbital_data(g, phi, gamma)?;
    let gram = gram_matrix(g, phi, gamma)?;
    Ok(first_orthogonal_subset(&gram, data.dim as usize, None)
        .map(|idx| idx.into_iter().map(|i| i as u32 + 1).collect()))
}

/// Are the coset tensors with these 1-based exponents nonzero and pairwise
/// orthogonal?
pub fn is_orthogonal_family(g: &FiniteGroup, phi: &BrauerCharacter, gamma: &IndexSequence, exponents: &[u32]) -> Result<bool> {
    let gram = gram_matrix(g, phi, gamma)?;
    let idx: Vec<usize> = exponents.iter().map(|&i| (i as usize - 1) % gram.rows()).collect();
    Ok(idx.iter().all(|&i| !gram.get(i, i).is_zero())
        && idx
            .iter()
            .enumerate()
            .all(|(a, &i)| idx[a + 1..].iter().all(|&j| i != j && gram.get(i, j).is_zero())))
}

/// The orbital subspace `V_alpha = span { e^phi_{alpha sigma} : sigma in G }`.
///
/// Nonzero standard tensors are grouped into classes of scalar multiples;
/// one representative per class is kept, the class of `e^phi_alpha` first.
/// Multiples share their orthogonality relations, so the search for an
/// orthogonal basis only needs the representatives.
#[derive(Debug, Clone)]
pub struct OrbitSpace {
    pub alpha: IndexSequence,
    /// A `sigma` for each class of parallel nonzero tensors.
    pub translates: Vec<GroupElement>,
    pub tensors: Vec<SymTensor>,
    pub gram: CycMatrix,
    has_zero: bool,
}

/// `u` and `v` are nonzero multiples of each other.
fn parallel(u: &SymTensor, v: &SymTensor) -> bool {
    if u.terms.len() != v.terms.len() {
        return false;
    }
    let Some((d0, u0)) = u.terms.iter().next() else {
        return false;
    };
    let Some(v0) = v.terms.get(d0) else {
        return false;
    };
    u.terms.iter().all(|(d, ud)| match v.terms.get(d) {
        Some(vd) => u0 * vd == v0 * ud,
        None => false,
    })
}

impl OrbitSpace {
    pub fn new(g: &FiniteGroup, phi: &BrauerCharacter, alpha: &IndexSequence) -> Self {
        let mut seen = HashMap::new();
        let mut by_support: HashMap<Vec<IndexSequence>, Vec<usize>> = HashMap::new();
        let mut translates = Vec::new();
        let mut tensors: Vec<SymTensor> = Vec::new();
        let mut has_zero = false;
        for x in g.elements() {
            let seq = alpha.act(g, x);
            if seen.insert(seq.clone(), ()).is_some() {
                continue;
            }
            let u = symmetrized_tensor(g, phi, &seq);
            if u.is_zero() {
                has_zero = true;
                continue;
            }
            let mut support: Vec<IndexSequence> = u.terms.keys().cloned().collect();
            support.sort_unstable();
            let bucket = by_support.entry(support).or_default();
            if bucket.iter().any(|&i| parallel(&tensors[i], &u)) {
                continue;
            }
            bucket.push(tensors.len());
            translates.push(x);
            tensors.push(u);
        }
        let gram = gram_of(&tensors);
        OrbitSpace {
            alpha: alpha.clone(),
            translates,
            tensors,
            gram,
            has_zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rank()
    }

    /// An orthogonal basis of standard tensors, as translating elements.
    ///
    /// Any such basis can be translated to one containing `e^phi_alpha`, so
    /// the search starts there.
    pub fn obasis(&self) -> Option<Vec<GroupElement>> {
        let dim = self.dim();
        if dim == 0 {
            return Some(Vec::new());
        }
        first_orthogonal_subset(&self.gram, dim, Some(0)).map(|idx| idx.into_iter().map(|i| self.translates[i]).collect())
    }

    /// `<e^phi_{alpha sigma}, e^phi_alpha> != 0` for every `sigma`.
    pub fn all_overlap_alpha(&self) -> bool {
        !self.has_zero && !self.tensors.is_empty() && (0..self.tensors.len()).all(|i| !self.gram.get(i, 0).is_zero())
    }
}

/// The o-basis verdict for one orbit representative.
#[derive(Debug, Clone)]
pub struct OrbitVerdict {
    pub alpha: IndexSequence,
    pub dim: usize,
    pub basis: Option<Vec<GroupElement>>,
}

/// Per-orbit verdicts over a sample of representatives.
#[derive(Debug, Clone)]
pub struct WholeSpaceVerdict {
    pub orbits: Vec<OrbitVerdict>,
}

impl WholeSpaceVerdict {
    /// Conjunction over the sampled orbits. A sample is not all of the
    /// orbit set, so `true` only means no counterexample was sampled.
    pub fn has_obasis(&self) -> bool {
        self.orbits.iter().all(|o| o.basis.is_some())
    }
}

pub fn whole_space_obasis(g: &FiniteGroup, phi: &BrauerCharacter, sample: &[IndexSequence]) -> WholeSpaceVerdict {
    WholeSpaceVerdict {
        orbits: sample
            .iter()
            .map(|alpha| {
                let space = OrbitSpace::new(g, phi, alpha);
                OrbitVerdict {
                    alpha: alpha.clone(),
                    dim: space.dim(),
                    basis: space.obasis(),
                }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{find_character, irreducible_brauer_characters, ordinary_table};
    use crate::group::{build_group, construct_sequence_with_stabilizer, GroupFamily};

    fn q(n: i64, d: i64) -> CycNum {
        CycNum::from_rational(1, Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn trivial_character_on_free_orbit() {
        let g = build_group(GroupFamily::Dicyclic(2)).unwrap();
        let triv = &ordinary_table(&g)[0];
        let alpha = IndexSequence::one_then_twos(8);
        let u = symmetrized_tensor(&g, triv, &alpha);
        assert_eq!(u.support_len(), 8);
        assert!(u.terms().iter().all(|(_, c)| **c == q(1, 8)));
        assert_eq!(u.norm_sq(), q(1, 8));
        assert!(inner_product_direct(&SymTensor::zero(4), &u).is_zero());
    }

    #[test]
    fn formula_matches_direct_on_all_pairs() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let alpha = IndexSequence::new(vec![1, 2, 2, 1, 2, 2, 1, 1, 2, 2, 2, 2]);
        for phi in irreducible_brauer_characters(&g, 3).unwrap() {
            for s1 in g.elements() {
                for s2 in [g.identity(), g.rot(), g.refl(), GroupElement::refl(4)] {
                    let lhs = inner_product_formula(&g, &phi, &alpha, s1, s2).unwrap();
                    let rhs = inner_product_direct(
                        &symmetrized_tensor(&g, &phi, &alpha.act(&g, s1)),
                        &symmetrized_tensor(&g, &phi, &alpha.act(&g, s2)),
                    );
                    assert_eq!(lhs, rhs, "{} {s1} {s2}", phi.label());
                }
            }
        }
    }

    #[test]
    fn translation_identity() {
        let g = build_group(GroupFamily::Semidihedral(3)).unwrap();
        let alpha = IndexSequence::one_twos_three(12);
        for phi in irreducible_brauer_characters(&g, 3).unwrap() {
            let u = symmetrized_tensor(&g, &phi, &alpha);
            for s in g.elements() {
                let lhs = translate(&g, &u, s);
                let rhs = symmetrized_tensor(&g, &phi, &alpha.act(&g, g.inv(s)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn vanishing_tensor_for_t24() {
        // T_24, p = 3, l = 4, psi_hat_1: b t_gamma / l in Z only for t_gamma = 4
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let phi = find_character(&ibr, "psi_hat[b=1]").unwrap();
        let c = g.rotation_subgroup(3);
        for (d, t, nonzero) in [(6, 2, false), (3, 1, false), (12, 4, true)] {
            let gamma = construct_sequence_with_stabilizer(&g, 2, &c, &g.rotation_subgroup(d)).unwrap();
            let data = orbital_data(&g, phi, &gamma).unwrap();
            assert_eq!(data.t_gamma, t);
            assert_eq!(symmetrized_tensor(&g, phi, &gamma).is_zero(), !nonzero);
            assert_eq!(data.dim, if nonzero { 2 } else { 0 });
            assert_eq!(matrix_m_gamma(&g, phi, &gamma).unwrap().rank() as u32, data.dim);
            let gram = gram_matrix(&g, phi, &gamma).unwrap();
            assert!(gram.is_hermitian());
            assert_eq!(gram.rank() as u32, data.dim);
        }
    }

    #[test]
    fn witness_pair_for_l_four() {
        // nu_2(2/4) = -1: witness {sigma_2, sigma_1}
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let phi = find_character(&ibr, "psi_hat[b=1]").unwrap();
        let gamma = IndexSequence::one_then_twos(24);
        assert_eq!(obasis_search(&g, phi, &gamma).unwrap(), Some(vec![1, 2]));
        assert!(is_orthogonal_family(&g, phi, &gamma, &[2, 1]).unwrap());
    }

    #[test]
    fn zero_subspace_has_empty_basis() {
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let phi = find_character(&ibr, "psi_hat[b=1]").unwrap();
        let c = g.rotation_subgroup(3);
        let gamma = construct_sequence_with_stabilizer(&g, 2, &c, &g.rotation_subgroup(6)).unwrap();
        assert_eq!(obasis_search(&g, phi, &gamma).unwrap(), Some(vec![]));
    }

    #[test]
    fn non_cyclic_support_is_rejected() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let gamma = IndexSequence::one_then_twos(12);
        assert!(matches!(orbital_data(&g, &ibr[0], &gamma), Err(Error::SupportNotCyclic(_))));
    }

    #[test]
    fn constant_on_support_gives_one_by_one() {
        // trivial Brauer character mod 2 on T_12: C = <r^2> = G-hat, G_gamma ⊇ C
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 2).unwrap();
        let gamma = IndexSequence::constant(12, 1);
        let m = matrix_m_gamma(&g, &ibr[0], &gamma).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(*m.get(0, 0), CycNum::from_int(1, 3));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn double_cosets_partition() {
        let g = build_group(GroupFamily::Dicyclic(2)).unwrap();
        let c = g.rotation_subgroup(1);
        let free = IndexSequence::one_then_twos(8);
        let classes = equiv_classes_sim_alpha(&g, &c, &free).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|k| k.len() == 4));
        let whole = g.rotation_subgroup(0);
        let constant = IndexSequence::constant(8, 1);
        assert_eq!(equiv_classes_sim_alpha(&g, &whole, &constant).unwrap().len(), 1);
        let everything = g.generated(&[g.rot(), g.refl()]);
        assert_eq!(equiv_classes_sim_alpha(&g, &everything, &free).unwrap().len(), 1);
    }

    #[test]
    fn linear_mod_two_passes_on_every_orbit() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 2).unwrap();
        let sample = crate::group::orbit_representatives(&g, 2, 12);
        assert!(whole_space_obasis(&g, &ibr[0], &sample).has_obasis());
    }

    #[test]
    fn linear_odd_p_fails_on_witness() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let alpha = IndexSequence::one_then_twos(12);
        let space = OrbitSpace::new(&g, &ibr[0], &alpha);
        assert!(space.all_overlap_alpha());
        assert!(space.dim() >= 2);
        assert!(space.obasis().is_none());
        let verdict = whole_space_obasis(&g, &ibr[0], &[alpha]);
        assert!(!verdict.has_obasis());
    }

    mod props {
        use super::*;
        use crate::brauer::irreducible_brauer_characters;
        use crate::group::{build_group, GroupFamily};
        use proptest::prelude::*;

        fn family() -> impl Strategy<Value = GroupFamily> {
            prop_oneof![
                (3u32..=8).prop_map(GroupFamily::Dihedral),
                (2u32..=4).prop_map(GroupFamily::Dicyclic),
                Just(GroupFamily::Semidihedral(2)),
            ]
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn formula_matches_expansion(
                fam in family(),
                p in prop::sample::select(vec![2u32, 3, 5]),
                pick: usize,
                seed: Vec<u8>,
                x: usize,
                y: usize,
            ) {
                let g = build_group(fam).unwrap();
                let chars = irreducible_brauer_characters(&g, p).unwrap();
                let phi = &chars[pick % chars.len()];
                let entries: Vec<u8> = (0..g.degree()).map(|i| 1 + seed.get(i).copied().unwrap_or(0) % 3).collect();
                let alpha = IndexSequence::new(entries);
                let (s1, s2) = (g.element(x % g.order()), g.element(y % g.order()));
                let direct = inner_product_direct(
                    &symmetrized_tensor(&g, phi, &alpha.act(&g, s1)),
                    &symmetrized_tensor(&g, phi, &alpha.act(&g, s2)),
                );
                prop_assert_eq!(inner_product_formula(&g, phi, &alpha, s1, s2).unwrap(), direct);
            }

            #[test]
            fn inner_product_is_hermitian_and_invariant(
                fam in family(),
                pick: usize,
                seed: Vec<u8>,
                x: usize,
                y: usize,
                z: usize,
            ) {
                let g = build_group(fam).unwrap();
                let chars = ordinary_table(&g);
                let phi = &chars[pick % chars.len()];
                let entries: Vec<u8> = (0..g.degree()).map(|i| 1 + seed.get(i).copied().unwrap_or(0) % 2).collect();
                let alpha = IndexSequence::new(entries);
                let n = g.order();
                let u = symmetrized_tensor(&g, phi, &alpha.act(&g, g.element(x % n)));
                let v = symmetrized_tensor(&g, phi, &alpha.act(&g, g.element(y % n)));
                let uv = inner_product_direct(&u, &v);
                prop_assert_eq!(uv.conj(), inner_product_direct(&v, &u));
                let s = g.element(z % n);
                prop_assert_eq!(inner_product_direct(&translate(&g, &u, s), &translate(&g, &v, s)), uv);
            }
        }
    }
}
