//! Ordinary character tables of the three families and their irreducible
//! Brauer characters.
//!
//! Values are produced by closed formulas on normal-form words and stored
//! once per conjugacy class, embedded in the family's conductor.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclo::{root_of_unity, CycNum};
use crate::error::{Error, Result};
use crate::group::{check_prime, split_prime_power, FiniteGroup, GroupElement, GroupFamily, Subgroup};

/// Linear or two-dimensional, with its table index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum CharacterKind {
    Linear(u32),
    TwoDim(u32),
}

/// Identifies a character of one family.
///
/// `epsilon` is the number of linear characters in the list this character
/// belongs to: the full count for ordinary tables, the `p`-dependent count
/// for Brauer lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacterSpec {
    pub family: GroupFamily,
    pub kind: CharacterKind,
    pub epsilon: u32,
    /// Restricted to the `p`-regular elements.
    pub brauer: bool,
}

impl CharacterSpec {
    pub fn is_linear(&self) -> bool {
        matches!(self.kind, CharacterKind::Linear(_))
    }

    pub fn index(&self) -> u32 {
        match self.kind {
            CharacterKind::Linear(h) | CharacterKind::TwoDim(h) => h,
        }
    }

    /// Label such as `chi_hat[1]`, `psi_hat'[h=3]` or `chi[h=2]`.
    ///
    /// Linear characters are `psi` for the dihedral family and `chi` for the
    /// other two; two-dimensional ones the other letter. For odd `n` in the
    /// dicyclic and semidihedral families the nontrivial characters carry a
    /// prime.
    pub fn label(&self) -> String {
        let (lin, two, key) = match self.family {
            GroupFamily::Dihedral(_) => ("psi", "chi", "h"),
            GroupFamily::Dicyclic(_) => ("chi", "psi", "b"),
            GroupFamily::Semidihedral(_) => ("chi", "psi", "h"),
        };
        let hat = if self.brauer { "_hat" } else { "" };
        let prime = if self.family.primed() && self.kind != CharacterKind::Linear(0) {
            "'"
        } else {
            ""
        };
        match self.kind {
            CharacterKind::Linear(k) => format!("{lin}{hat}{prime}[{k}]"),
            CharacterKind::TwoDim(h) => format!("{two}{hat}{prime}[{key}={h}]"),
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A character restricted to a set of classes.
///
/// Ordinary characters have every class in their domain and `prime = None`.
/// Brauer characters are defined on the `p`-regular classes only.
#[derive(Debug, Clone)]
pub struct BrauerCharacter {
    spec: CharacterSpec,
    prime: Option<u32>,
    rotation_order: u32,
    conductor: u32,
    class_of: Arc<[u16]>,
    class_values: Vec<Option<CycNum>>,
    degree: CycNum,
}

impl BrauerCharacter {
    pub fn spec(&self) -> &CharacterSpec {
        &self.spec
    }

    pub fn label(&self) -> String {
        self.spec.label()
    }

    pub fn family(&self) -> GroupFamily {
        self.spec.family
    }

    pub fn prime(&self) -> Option<u32> {
        self.prime
    }

    /// `phi(e)`.
    pub fn degree(&self) -> &CycNum {
        &self.degree
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn element_index(&self, g: GroupElement) -> usize {
        (g.reflect as u32 * self.rotation_order + g.exponent % self.rotation_order) as usize
    }

    /// Exact value at `g`; fails outside the domain.
    pub fn evaluate(&self, g: GroupElement) -> Result<CycNum> {
        self.value_idx(self.element_index(g))
            .cloned()
            .ok_or(Error::NotPRegular(g))
    }

    pub(crate) fn value_idx(&self, x: usize) -> Option<&CycNum> {
        self.class_values[self.class_of[x] as usize].as_ref()
    }

    pub fn in_domain(&self, g: GroupElement) -> bool {
        self.value_idx(self.element_index(g)).is_some()
    }

    /// The domain as a sorted element list.
    pub fn domain(&self) -> Vec<GroupElement> {
        (0..self.class_of.len())
            .filter(|&x| self.value_idx(x).is_some())
            .map(|x| element_at(self.rotation_order, x))
            .collect()
    }

    pub(crate) fn domain_idx(&self) -> Vec<usize> {
        (0..self.class_of.len()).filter(|&x| self.value_idx(x).is_some()).collect()
    }

    /// Values on the whole group, `None` outside the domain.
    pub fn values(&self) -> Vec<(GroupElement, Option<CycNum>)> {
        (0..self.class_of.len())
            .map(|x| (element_at(self.rotation_order, x), self.value_idx(x).cloned()))
            .collect()
    }
}

fn element_at(rotation_order: u32, x: usize) -> GroupElement {
    GroupElement {
        reflect: x as u32 >= rotation_order,
        exponent: x as u32 % rotation_order,
    }
}

/// Exponents of `zeta_4` for the linear characters, as `(rot, refl)`.
fn linear_params(family: GroupFamily) -> Vec<(u32, u32)> {
    match family {
        GroupFamily::Dihedral(m) => {
            let all = [(0, 0), (0, 2), (2, 0), (2, 2)];
            all[..if m % 2 == 0 { 4 } else { 2 }].to_vec()
        }
        GroupFamily::Dicyclic(n) if n % 2 == 0 => vec![(0, 0), (2, 0), (0, 2), (2, 2)],
        GroupFamily::Dicyclic(_) => vec![(0, 0), (2, 1), (0, 2), (2, 3)],
        GroupFamily::Semidihedral(n) => {
            let all = [(0, 0), (0, 2), (2, 0), (2, 2), (1, 0), (1, 2), (3, 0), (3, 2)];
            all[..if n % 2 == 0 { 4 } else { 8 }].to_vec()
        }
    }
}

/// Indices of the two-dimensional ordinary characters.
fn two_dim_indices(family: GroupFamily) -> Vec<u32> {
    match family {
        GroupFamily::Dihedral(m) => (1..m).filter(|h| 2 * h < m).collect(),
        GroupFamily::Dicyclic(n) => (1..n).collect(),
        GroupFamily::Semidihedral(n) => {
            let mut v: Vec<u32> = (1..n).map(|j| 2 * j).collect();
            v.extend((1..n).filter(|h| h % 2 == 1));
            v.extend((2 * n + 1..3 * n).filter(|h| h % 2 == 1));
            v.sort_unstable();
            v
        }
    }
}

fn quarter_turn(conductor: u32, q: u32) -> CycNum {
    match q % 4 {
        0 => CycNum::one(conductor),
        2 => CycNum::from_int(conductor, -1),
        q => root_of_unity(conductor, (q * conductor / 4) as i64),
    }
}

/// Value of an ordinary character at `g`, by its closed formula.
fn ordinary_value(family: GroupFamily, kind: CharacterKind, g: GroupElement) -> CycNum {
    let n_cond = family.conductor();
    match kind {
        CharacterKind::Linear(k) => {
            let (qr, qs) = linear_params(family)[k as usize];
            quarter_turn(n_cond, qs * g.reflect as u32 + qr * g.exponent)
        }
        CharacterKind::TwoDim(h) => {
            if g.reflect {
                return CycNum::zero(n_cond);
            }
            let r = family.rotation_order() as i64;
            let step = (n_cond as i64) / r;
            let k = g.exponent as i64 * h as i64;
            let other = match family {
                GroupFamily::Semidihedral(n) => k * (2 * n as i64 - 1),
                _ => -k,
            };
            CycNum::from_powers(n_cond, &[(1, step * k), (1, step * other)])
        }
    }
}

fn build(
    g: &FiniteGroup,
    class_of: &Arc<[u16]>,
    reps: &[usize],
    spec: CharacterSpec,
    prime: Option<u32>,
    in_domain: &dyn Fn(usize) -> bool,
) -> BrauerCharacter {
    let family = g.family();
    let class_values = reps
        .iter()
        .map(|&x| in_domain(x).then(|| ordinary_value(family, spec.kind, g.element(x))))
        .collect();
    let degree = CycNum::from_int(family.conductor(), if spec.is_linear() { 1 } else { 2 });
    BrauerCharacter {
        spec,
        prime,
        rotation_order: g.rotation_order(),
        conductor: family.conductor(),
        class_of: Arc::clone(class_of),
        class_values,
        degree,
    }
}

fn class_data(g: &FiniteGroup) -> (Arc<[u16]>, Vec<usize>) {
    let classes = g.classes_idx();
    let reps = classes.iter().map(|c| c[0]).collect();
    let class_of: Vec<u16> = g.class_map().into_iter().map(|c| c as u16).collect();
    (class_of.into(), reps)
}

/// The ordinary irreducible characters, linear ones first.
pub fn ordinary_table(g: &FiniteGroup) -> Vec<BrauerCharacter> {
    let family = g.family();
    let (class_of, reps) = class_data(g);
    let lin = linear_params(family).len() as u32;
    let kinds = (0..lin)
        .map(CharacterKind::Linear)
        .chain(two_dim_indices(family).into_iter().map(CharacterKind::TwoDim));
    kinds
        .map(|kind| {
            let spec = CharacterSpec {
                family,
                kind,
                epsilon: lin,
                brauer: false,
            };
            build(g, &class_of, &reps, spec, None, &|_| true)
        })
        .collect()
}

/// Number of linear Brauer characters for prime `p`.
pub fn brauer_epsilon(family: GroupFamily, p: u32) -> u32 {
    let (l, _) = split_prime_power(family.rotation_order(), p);
    match family {
        GroupFamily::Dihedral(_) if p == 2 => 1,
        GroupFamily::Dihedral(_) => {
            if l % 2 == 0 {
                4
            } else {
                2
            }
        }
        GroupFamily::Dicyclic(_) | GroupFamily::Semidihedral(_) if p == 2 => 1,
        GroupFamily::Dicyclic(_) => 4,
        GroupFamily::Semidihedral(n) => {
            if n % 2 == 0 {
                4
            } else {
                8
            }
        }
    }
}

/// The set `Pi` of two-dimensional indices surviving modulo an odd prime
/// in the semidihedral family: `{ j p^t : j in E ∪ O_1 ∪ O_2 }`.
pub fn semidihedral_pi(n: u32, p: u32) -> Vec<u32> {
    let (l, t) = split_prime_power(4 * n, p);
    let pt = p.pow(t);
    if p == 2 {
        return (1..=(l - 1) / 2).map(|j| j * pt).collect();
    }
    let eps = if n.is_multiple_of(2) { 1 } else { 2 };
    let mut js: Vec<u32> = (1..l / 4).map(|j| 2 * j).collect();
    js.extend((1..l / 4 + 1).filter(|j| j % 2 == 1 && j + eps <= l / 4));
    js.extend((1..l / 4 + 1).filter(|j| j % 2 == 1 && j + eps <= l / 4).map(|j| l / 2 + j));
    js.sort_unstable();
    js.into_iter().map(|j| j * pt).collect()
}

/// Indices of the two-dimensional Brauer characters for prime `p`.
fn brauer_two_dim_indices(family: GroupFamily, p: u32) -> Vec<u32> {
    let (l, _) = split_prime_power(family.rotation_order(), p);
    match family {
        GroupFamily::Dihedral(_) | GroupFamily::Dicyclic(_) => (1..l).filter(|b| 2 * b < l).collect(),
        GroupFamily::Semidihedral(n) => semidihedral_pi(n, p),
    }
}

/// The irreducible Brauer characters of `G` modulo `p`, linear ones first.
///
/// Each is the restriction of an ordinary character to the `p`-regular
/// elements. When `p` does not divide `|G|` this is the ordinary table.
pub fn irreducible_brauer_characters(g: &FiniteGroup, p: u32) -> Result<Vec<BrauerCharacter>> {
    check_prime(p)?;
    let family = g.family();
    let (class_of, reps) = class_data(g);
    let regular: Vec<bool> = (0..g.order()).map(|x| !g.order_idx(x).is_multiple_of(p)).collect();
    let eps = brauer_epsilon(family, p);
    let kinds = (0..eps)
        .map(CharacterKind::Linear)
        .chain(brauer_two_dim_indices(family, p).into_iter().map(CharacterKind::TwoDim));
    Ok(kinds
        .map(|kind| {
            let spec = CharacterSpec {
                family,
                kind,
                epsilon: eps,
                brauer: true,
            };
            build(g, &class_of, &reps, spec, Some(p), &|x| regular[x])
        })
        .collect())
}

/// Finds a character by label or by position in `chars`.
pub fn find_character<'a>(chars: &'a [BrauerCharacter], key: &str) -> Result<&'a BrauerCharacter> {
    if let Ok(i) = key.parse::<usize>() {
        return chars.get(i).ok_or(Error::IndexOutOfRange { index: i as u32 });
    }
    let normalized = key.replace(' ', "");
    chars
        .iter()
        .find(|c| {
            let label = c.label();
            label == normalized || label.replace("_hat", "") == normalized
        })
        .ok_or_else(|| Error::UnknownCharacter(key.to_string()))
}

/// Where a character is supported inside the `p`-regular set.
#[derive(Debug, Clone)]
pub struct SupportInfo {
    /// `phi` vanishes on every domain element outside `C`.
    pub support_is_cyclic: bool,
    /// `phi` has no zero on `C`.
    pub nonzero_on_support: bool,
    /// `C = <tau>`.
    pub subgroup: Subgroup,
    pub generator: GroupElement,
}

/// Tests `phi` against `C = <rot^(p^t)>`, where `p^t` is the exact power of
/// `p` in the rotation order. Ordinary characters use `C = <rot>`.
pub fn cyclic_support(g: &FiniteGroup, phi: &BrauerCharacter) -> SupportInfo {
    let pt = match phi.prime() {
        Some(p) => {
            let (_, t) = split_prime_power(g.rotation_order(), p);
            p.pow(t)
        }
        None => 1,
    };
    let generator = GroupElement::rot(pt % g.rotation_order());
    let subgroup = g.rotation_subgroup(pt);
    let mut support_is_cyclic = true;
    let mut nonzero_on_support = true;
    for x in phi.domain_idx() {
        let v = phi.value_idx(x).expect("domain element");
        if subgroup.contains_idx(x) {
            nonzero_on_support &= !v.is_zero();
        } else {
            support_is_cyclic &= v.is_zero();
        }
    }
    SupportInfo {
        support_is_cyclic,
        nonzero_on_support,
        subgroup,
        generator,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::two_cos;
    use crate::group::build_group;

    fn families() -> Vec<GroupFamily> {
        let mut v: Vec<GroupFamily> = (3..=12).map(GroupFamily::Dihedral).collect();
        for n in 2..=7 {
            v.push(GroupFamily::Dicyclic(n));
            v.push(GroupFamily::Semidihedral(n));
        }
        v
    }

    fn inner(g: &FiniteGroup, a: &BrauerCharacter, b: &BrauerCharacter) -> CycNum {
        g.elements()
            .iter()
            .map(|&x| &a.evaluate(x).unwrap() * &b.evaluate(x).unwrap().conj())
            .sum()
    }

    #[test]
    fn table_size_and_orthogonality() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            let table = ordinary_table(&g);
            assert_eq!(table.len(), g.conjugacy_classes().len(), "{fam}");
            for (i, a) in table.iter().enumerate() {
                for (j, b) in table.iter().enumerate() {
                    let expected = if i == j { g.order() as i64 } else { 0 };
                    assert_eq!(inner(&g, a, b), CycNum::from_int(1, expected), "{fam} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn degrees_sum_to_group_order() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            let total: CycNum = ordinary_table(&g).iter().map(|c| c.degree() * c.degree()).sum();
            assert_eq!(total, CycNum::from_int(1, g.order() as i64));
        }
    }

    #[test]
    fn characters_are_class_functions_and_homomorphic() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            for chi in ordinary_table(&g) {
                for x in g.elements() {
                    for y in g.elements() {
                        let conj = g.mul(g.mul(y, x), g.inv(y));
                        assert_eq!(chi.evaluate(x).unwrap(), chi.evaluate(conj).unwrap());
                        if chi.spec().is_linear() {
                            let lhs = chi.evaluate(g.mul(x, y)).unwrap();
                            assert_eq!(lhs, &chi.evaluate(x).unwrap() * &chi.evaluate(y).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dicyclic_two_dim_is_twice_cosine() {
        let g = build_group(GroupFamily::Dicyclic(5)).unwrap();
        for chi in ordinary_table(&g).iter().filter(|c| !c.spec().is_linear()) {
            let j = chi.spec().index() as i64;
            for k in 0..10 {
                assert_eq!(chi.evaluate(GroupElement::rot(k)).unwrap(), two_cos(k as i64 * j, 5));
                assert!(chi.evaluate(GroupElement::refl(k)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn trivial_character_is_one() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            let triv = &ordinary_table(&g)[0];
            assert!(g.elements().iter().all(|&x| triv.evaluate(x).unwrap() == CycNum::one(1)));
        }
    }

    #[test]
    fn semidihedral_primed_chi4() {
        // n odd: chi'_4(a^r) = (-1)^(r/2) for even r
        let g = build_group(GroupFamily::Semidihedral(3)).unwrap();
        let chi4 = &ordinary_table(&g)[4];
        assert_eq!(chi4.label(), "chi'[4]");
        for r in (0..12).step_by(2) {
            let sign = if (r / 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(chi4.evaluate(GroupElement::rot(r)).unwrap(), CycNum::from_int(1, sign));
        }
    }

    #[test]
    fn semidihedral_odd_values_are_imaginary_on_odd_powers() {
        let g = build_group(GroupFamily::Semidihedral(3)).unwrap();
        for chi in ordinary_table(&g) {
            let CharacterKind::TwoDim(h) = chi.spec().kind else { continue };
            for r in 0..12u32 {
                let v = chi.evaluate(GroupElement::rot(r)).unwrap();
                if (h * r) % 2 == 1 {
                    assert_eq!(v.conj(), -v.clone(), "h={h} r={r}");
                } else {
                    assert_eq!(v.conj(), v, "h={h} r={r}");
                }
            }
        }
    }

    #[test]
    fn brauer_counts_match_regular_classes() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            for p in [2, 3, 5, 7] {
                let ibr = irreducible_brauer_characters(&g, p).unwrap();
                assert_eq!(ibr.len(), g.p_regular_classes(p).unwrap().len(), "{fam} p={p}");
            }
        }
    }

    #[test]
    fn brauer_characters_are_distinct_restrictions() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            let table = ordinary_table(&g);
            for p in [2, 3, 5] {
                let ibr = irreducible_brauer_characters(&g, p).unwrap();
                let regular = g.p_regular_elements(p).unwrap();
                let restrict = |c: &BrauerCharacter| -> Vec<CycNum> {
                    regular.iter().map(|&x| c.evaluate(x).unwrap()).collect()
                };
                let rows: Vec<Vec<CycNum>> = ibr.iter().map(restrict).collect();
                for (i, a) in rows.iter().enumerate() {
                    assert!(rows[i + 1..].iter().all(|b| a != b), "{fam} p={p}");
                    assert!(table.iter().any(|c| restrict(c) == *a), "{fam} p={p}");
                }
                assert_eq!(ibr[0].domain(), regular);
            }
        }
    }

    #[test]
    fn coprime_prime_gives_ordinary_table() {
        let g = build_group(GroupFamily::Dicyclic(2)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let table = ordinary_table(&g);
        assert_eq!(ibr.len(), table.len());
        for (a, b) in ibr.iter().zip(&table) {
            assert_eq!(a.spec().kind, b.spec().kind);
            assert_eq!(a.domain().len(), 8);
        }
    }

    #[test]
    fn dicyclic_mod_two_list() {
        // T_24: 2n = 12 = 3 * 4, only chi_hat_0 and psi_hat_1
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 2).unwrap();
        let labels: Vec<String> = ibr.iter().map(|c| c.label()).collect();
        assert_eq!(labels, vec!["chi_hat[0]", "psi_hat[b=1]"]);
    }

    #[test]
    fn semidihedral_pi_sets() {
        // n = 3, p = 3: l = 4, t = 1; E = {}, O_1 = {1..=-1}, O_2 = {}, empty
        assert!(semidihedral_pi(3, 3).is_empty());
        // n = 6, p = 3: l = 8, E = {2}, O_1 = {1} (n even), O_2 = {5}
        assert_eq!(semidihedral_pi(6, 3), vec![3, 6, 15]);
        // n = 2, p = 3: l = 8, t = 0
        assert_eq!(semidihedral_pi(2, 3), vec![1, 2, 5]);
        // n = 3, p = 2: l = 3, t = 2
        assert_eq!(semidihedral_pi(3, 2), vec![4]);
    }

    #[test]
    fn evaluate_outside_domain_fails() {
        let g = build_group(GroupFamily::Dicyclic(3)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        assert_eq!(
            ibr[0].evaluate(GroupElement::rot(1)),
            Err(Error::NotPRegular(GroupElement::rot(1)))
        );
        assert_eq!(ibr[0].evaluate(GroupElement::IDENTITY).unwrap(), CycNum::one(1));
    }

    #[test]
    fn evaluate_psi_hat_on_regular_rotations() {
        // psi_hat_b(r^(j p^t)) = 2cos(j p^t b pi / n)
        let g = build_group(GroupFamily::Dicyclic(6)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let psi = find_character(&ibr, "psi_hat[b=1]").unwrap();
        for j in 0..4 {
            assert_eq!(psi.evaluate(GroupElement::rot(3 * j)).unwrap(), two_cos(3 * j as i64, 6));
        }
    }

    #[test]
    fn two_dim_support_is_cyclic_for_odd_p() {
        for fam in families() {
            let g = build_group(fam).unwrap();
            for p in [3, 5, 7] {
                for phi in irreducible_brauer_characters(&g, p).unwrap() {
                    let info = cyclic_support(&g, &phi);
                    assert_eq!(info.support_is_cyclic, !phi.spec().is_linear(), "{fam} p={p} {}", phi.label());
                }
            }
        }
    }

    #[test]
    fn everything_is_cyclic_for_p_two() {
        for n in 2..=6 {
            let g = build_group(GroupFamily::Semidihedral(n)).unwrap();
            for phi in irreducible_brauer_characters(&g, 2).unwrap() {
                assert!(cyclic_support(&g, &phi).support_is_cyclic);
            }
        }
    }

    #[test]
    fn support_can_have_zeros_on_c() {
        // T_8, p = 3: psi_1(r) = 2cos(pi/2) = 0
        let g = build_group(GroupFamily::Dicyclic(2)).unwrap();
        let ibr = irreducible_brauer_characters(&g, 3).unwrap();
        let info = cyclic_support(&g, find_character(&ibr, "psi_hat[b=1]").unwrap());
        assert!(info.support_is_cyclic);
        assert!(!info.nonzero_on_support);
        assert_eq!(info.generator, GroupElement::rot(1));
    }

    #[test]
    fn find_by_label_or_index() {
        let g = build_group(GroupFamily::Semidihedral(3)).unwrap();
        let table = ordinary_table(&g);
        assert_eq!(find_character(&table, "0").unwrap().label(), "chi[0]");
        assert_eq!(find_character(&table, "psi'[h=7]").unwrap().spec().index(), 7);
        assert!(matches!(find_character(&table, "99"), Err(Error::IndexOutOfRange { index: 99 })));
        assert!(matches!(find_character(&table, "nope"), Err(Error::UnknownCharacter(_))));
    }
}
