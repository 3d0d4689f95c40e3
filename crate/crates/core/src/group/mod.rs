//! The dihedral, dicyclic and semidihedral families as permutation groups.
//!
//! Elements are kept as words `refl^f * rot^i` in normal form. Each group also
//! carries a faithful permutation action on `degree` points, cached once per
//! element; sequences are acted on through those permutations.

mod sequence;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use sequence::{
    construct_sequence_with_stabilizer, orbit_representatives, IndexSequence,
};

/// One of the three supported families with its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", content = "param", rename_all = "lowercase")]
pub enum GroupFamily {
    /// `D_m = <r, s | r^m = s^2 = 1, srs = r^-1>`, order `2m`.
    Dihedral(u32),
    /// `T_4n = <r, s | r^2n = e, r^n = s^2, s^-1 r s = r^-1>`, order `4n`.
    Dicyclic(u32),
    /// `SD_8n = <a, b | a^4n = b^2 = e, bab = a^(2n-1)>`, order `8n`.
    Semidihedral(u32),
}

impl GroupFamily {
    pub fn param(&self) -> u32 {
        match *self {
            GroupFamily::Dihedral(m) => m,
            GroupFamily::Dicyclic(n) | GroupFamily::Semidihedral(n) => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GroupFamily::Dihedral(_) => "dihedral",
            GroupFamily::Dicyclic(_) => "dicyclic",
            GroupFamily::Semidihedral(_) => "semidihedral",
        }
    }

    /// Builds a family from its CLI name.
    pub fn from_name(name: &str, param: u32) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "dihedral" | "d" => Some(GroupFamily::Dihedral(param)),
            "dicyclic" | "t" => Some(GroupFamily::Dicyclic(param)),
            "semidihedral" | "sd" => Some(GroupFamily::Semidihedral(param)),
            _ => None,
        }
    }

    /// Order of the cyclic rotation subgroup `<r>` (resp. `<a>`).
    pub fn rotation_order(&self) -> u32 {
        match *self {
            GroupFamily::Dihedral(m) => m,
            GroupFamily::Dicyclic(n) => 2 * n,
            GroupFamily::Semidihedral(n) => 4 * n,
        }
    }

    pub fn order(&self) -> u32 {
        2 * self.rotation_order()
    }

    /// Degree of the permutation embedding.
    pub fn degree(&self) -> u32 {
        match *self {
            GroupFamily::Dihedral(m) => m,
            GroupFamily::Dicyclic(n) | GroupFamily::Semidihedral(n) => 4 * n,
        }
    }

    /// True when `n` is odd for the dicyclic and semidihedral families, which
    /// switches to the primed character tables.
    pub fn primed(&self) -> bool {
        match *self {
            GroupFamily::Dihedral(_) => false,
            GroupFamily::Dicyclic(n) | GroupFamily::Semidihedral(n) => n % 2 == 1,
        }
    }

    /// Conductor of a cyclotomic field holding every character value.
    pub fn conductor(&self) -> u32 {
        let r = self.rotation_order();
        match self {
            GroupFamily::Dihedral(_) => r,
            _ => num_integer::lcm(r, 4),
        }
    }

    fn validate(&self) -> Result<()> {
        let (min, value) = match *self {
            GroupFamily::Dihedral(m) => (3, m),
            GroupFamily::Dicyclic(n) | GroupFamily::Semidihedral(n) => (2, n),
        };
        if value < min {
            return Err(Error::ParameterOutOfRange {
                family: self.name(),
                value,
                min,
            });
        }
        Ok(())
    }

    fn symbols(&self) -> (&'static str, &'static str) {
        match self {
            GroupFamily::Semidihedral(_) => ("a", "b"),
            _ => ("r", "s"),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Dihedral(m) => write!(f, "D_{m}"),
            GroupFamily::Dicyclic(n) => write!(f, "T_{}", 4 * n),
            GroupFamily::Semidihedral(n) => write!(f, "SD_{}", 8 * n),
        }
    }
}

/// Normal-form word `refl^reflect * rot^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub reflect: bool,
    pub exponent: u32,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        reflect: false,
        exponent: 0,
    };

    pub fn rot(exponent: u32) -> Self {
        GroupElement {
            reflect: false,
            exponent,
        }
    }

    pub fn refl(exponent: u32) -> Self {
        GroupElement {
            reflect: true,
            exponent,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.exponent) {
            (false, 0) => write!(f, "e"),
            (false, i) => write!(f, "rot^{i}"),
            (true, 0) => write!(f, "refl"),
            (true, i) => write!(f, "refl*rot^{i}"),
        }
    }
}

/// A member of one of the three families, with its multiplication table and
/// permutation images precomputed.
///
/// Elements are indexed `reflect * R + exponent` where `R` is the rotation
/// order; index 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    family: GroupFamily,
    table: Vec<u16>,
    inverses: Vec<u16>,
    perms: Vec<Vec<u16>>,
}

/// Builds the group and its permutation embedding.
pub fn build_group(family: GroupFamily) -> Result<FiniteGroup> {
    FiniteGroup::new(family)
}

impl FiniteGroup {
    pub fn new(family: GroupFamily) -> Result<Self> {
        family.validate()?;
        let r = family.rotation_order();
        let order = family.order() as usize;
        let word = |idx: usize| (idx as u32 >= r, idx as u32 % r);
        // r^i * refl = refl * r^twist(i)
        let twist = |i: u32| match family {
            GroupFamily::Dihedral(_) | GroupFamily::Dicyclic(_) => (r - i % r) % r,
            GroupFamily::Semidihedral(n) => ((i as u64 * (2 * n as u64 - 1)) % r as u64) as u32,
        };
        // refl^2 as a rotation exponent
        let refl_sq = match family {
            GroupFamily::Dicyclic(n) => n,
            _ => 0,
        };
        let mut table = vec![0u16; order * order];
        for x in 0..order {
            let (f1, i1) = word(x);
            for y in 0..order {
                let (f2, i2) = word(y);
                let (f, e) = match (f1, f2) {
                    (_, false) => (f1, (i1 + i2) % r),
                    (false, true) => (true, (twist(i1) + i2) % r),
                    (true, true) => (false, (refl_sq + twist(i1) + i2) % r),
                };
                table[x * order + y] = (f as u32 * r + e) as u16;
            }
        }
        let inverses = (0..order)
            .map(|x| (0..order).find(|&y| table[x * order + y] == 0).unwrap() as u16)
            .collect();

        let (rot, refl) = generator_images(family);
        let degree = family.degree() as usize;
        let mut perms = Vec::with_capacity(order);
        for idx in 0..order {
            let (f, i) = word(idx);
            // image(refl^f rot^i) = image(refl)^f o image(rot)^i, applied right to left
            let perm: Vec<u16> = (0..degree)
                .map(|mut x| {
                    for _ in 0..i {
                        x = rot[x] as usize;
                    }
                    if f {
                        x = refl[x] as usize;
                    }
                    x as u16
                })
                .collect();
            perms.push(perm);
        }
        Ok(FiniteGroup {
            family,
            table,
            inverses,
            perms,
        })
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn order(&self) -> usize {
        self.inverses.len()
    }

    pub fn degree(&self) -> usize {
        self.family.degree() as usize
    }

    pub fn rotation_order(&self) -> u32 {
        self.family.rotation_order()
    }

    pub fn conductor(&self) -> u32 {
        self.family.conductor()
    }

    pub fn index(&self, g: GroupElement) -> usize {
        let r = self.rotation_order();
        assert!(g.exponent < r, "exponent {} out of range for {}", g.exponent, self.family);
        (g.reflect as u32 * r + g.exponent) as usize
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        let r = self.rotation_order() as usize;
        GroupElement {
            reflect: idx >= r,
            exponent: (idx % r) as u32,
        }
    }

    /// All elements in index order: rotations first, then reflections.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    /// The generator `r` (resp. `a`).
    pub fn rot(&self) -> GroupElement {
        GroupElement::rot(1 % self.rotation_order())
    }

    /// The generator `s` (resp. `b`).
    pub fn refl(&self) -> GroupElement {
        GroupElement::refl(0)
    }

    pub(crate) fn mul_idx(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order() + y] as usize
    }

    pub(crate) fn inv_idx(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn mul(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.element(self.mul_idx(self.index(g), self.index(h)))
    }

    pub fn inv(&self, g: GroupElement) -> GroupElement {
        self.element(self.inv_idx(self.index(g)))
    }

    pub fn pow(&self, g: GroupElement, k: u32) -> GroupElement {
        let x = self.index(g);
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul_idx(acc, x);
        }
        self.element(acc)
    }

    /// Zero-based permutation image: `perm[i] = g(i)`.
    pub fn perm(&self, g: GroupElement) -> &[u16] {
        &self.perms[self.index(g)]
    }

    pub(crate) fn perm_idx(&self, x: usize) -> &[u16] {
        &self.perms[x]
    }

    /// The permutation image in cycle notation on points `1..=degree`.
    pub fn cycles(&self, g: GroupElement) -> Vec<Vec<u32>> {
        let perm = self.perm(g);
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for start in 0..perm.len() {
            if seen[start] || perm[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32 + 1);
                x = perm[x] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub(crate) fn order_idx(&self, x: usize) -> u32 {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul_idx(acc, x);
            k += 1;
        }
        k
    }

    /// Smallest `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: GroupElement) -> u32 {
        self.order_idx(self.index(g))
    }

    /// Conjugacy classes, each sorted by index, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        self.classes_idx()
            .into_iter()
            .map(|c| c.into_iter().map(|x| self.element(x)).collect())
            .collect()
    }

    pub(crate) fn classes_idx(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|x| self.mul_idx(self.mul_idx(x, g), self.inv_idx(x)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Class index of every element.
    pub(crate) fn class_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.order()];
        for (c, class) in self.classes_idx().iter().enumerate() {
            for &x in class {
                map[x] = c;
            }
        }
        map
    }

    pub(crate) fn p_regular_idx(&self, p: u32) -> Vec<usize> {
        (0..self.order()).filter(|&x| !self.order_idx(x).is_multiple_of(p)).collect()
    }

    /// The set of elements whose order is prime to `p`.
    pub fn p_regular_elements(&self, p: u32) -> Result<Vec<GroupElement>> {
        check_prime(p)?;
        Ok(self.p_regular_idx(p).into_iter().map(|x| self.element(x)).collect())
    }

    /// Conjugacy classes made of `p`-regular elements.
    pub fn p_regular_classes(&self, p: u32) -> Result<Vec<Vec<GroupElement>>> {
        check_prime(p)?;
        Ok(self
            .conjugacy_classes()
            .into_iter()
            .filter(|c| !self.element_order(c[0]).is_multiple_of(p))
            .collect())
    }

    /// The stabilizer `G_alpha = { g : alpha g = alpha }`.
    pub fn stabilizer(&self, alpha: &IndexSequence) -> Result<Subgroup> {
        if alpha.len() != self.degree() {
            return Err(Error::LengthMismatch {
                expected: self.degree(),
                found: alpha.len(),
            });
        }
        Ok(self.subgroup_from_mask((0..self.order()).map(|x| alpha.is_fixed_by(self.perm_idx(x))).collect()))
    }

    /// Subgroup generated by the given elements.
    pub fn generated(&self, gens: &[GroupElement]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut frontier = vec![0usize];
        let gens: Vec<usize> = gens.iter().map(|&g| self.index(g)).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul_idx(x, g);
                if !mask[y] {
                    mask[y] = true;
                    frontier.push(y);
                }
            }
        }
        self.subgroup_from_mask(mask)
    }

    /// The rotation subgroup `<rot^d>`.
    pub fn rotation_subgroup(&self, d: u32) -> Subgroup {
        self.generated(&[GroupElement::rot(d % self.rotation_order())])
    }

    pub(crate) fn subgroup_from_mask(&self, mask: Vec<bool>) -> Subgroup {
        Subgroup {
            members: mask
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(x, _)| self.element(x))
                .collect(),
            mask,
        }
    }

    /// True when the multiplication table is closed, associative and has
    /// inverses; exhaustive.
    pub fn check_group_axioms(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| self.mul_idx(x, self.inv_idx(x)) == 0 && self.mul_idx(0, x) == x)
            && (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| self.mul_idx(self.mul_idx(x, y), z) == self.mul_idx(x, self.mul_idx(y, z))))
            })
    }

    /// True when `g -> perm(g)` is an injective homomorphism; exhaustive.
    pub fn check_faithful_action(&self) -> bool {
        let n = self.order();
        let homomorphism = (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.perm_idx(self.mul_idx(x, y));
                let px = self.perm_idx(x);
                let py = self.perm_idx(y);
                (0..self.degree()).all(|i| xy[i] == px[py[i] as usize])
            })
        });
        let mut images: Vec<&[u16]> = self.perms.iter().map(Vec::as_slice).collect();
        images.sort_unstable();
        images.dedup();
        homomorphism && images.len() == n
    }

    pub fn describe(&self, g: GroupElement) -> String {
        let (rot, refl) = self.family.symbols();
        match (g.reflect, g.exponent) {
            (false, 0) => "e".into(),
            (false, 1) => rot.into(),
            (false, i) => format!("{rot}^{i}"),
            (true, 0) => refl.into(),
            (true, 1) => format!("{refl}{rot}"),
            (true, i) => format!("{refl}{rot}^{i}"),
        }
    }
}

/// Zero-based images of the two generators.
fn generator_images(family: GroupFamily) -> (Vec<u16>, Vec<u16>) {
    match family {
        GroupFamily::Dihedral(m) => {
            // natural action on the vertices 1..m, residues mod m
            let rot = (0..m).map(|x| ((x + 1) % m) as u16).collect();
            // point x (0-based) is residue x+1; s: t -> -t
            let refl = (0..m).map(|x| ((2 * m - (x + 1) - 1) % m) as u16).collect();
            (rot, refl)
        }
        GroupFamily::Dicyclic(n) => {
            let deg = 4 * n;
            let mut rot = vec![0u16; deg as usize];
            for x in 1..=2 * n {
                rot[(x - 1) as usize] = (x % (2 * n)) as u16;
                let y = 2 * n + x;
                rot[(y - 1) as usize] = (2 * n + x % (2 * n)) as u16;
            }
            // s = prod_{i=1..n} (i, x_i, n+i, y_i) with
            // x_1 = 2n+1, y_1 = 3n+1 and x_i = 4n+2-i, y_i = 3n+2-i for i >= 2
            let mut refl = vec![0u16; deg as usize];
            for i in 1..=n {
                let (xi, yi) = if i == 1 {
                    (2 * n + 1, 3 * n + 1)
                } else {
                    (4 * n + 2 - i, 3 * n + 2 - i)
                };
                let cycle = [i, xi, n + i, yi];
                for k in 0..4 {
                    refl[(cycle[k] - 1) as usize] = (cycle[(k + 1) % 4] - 1) as u16;
                }
            }
            (rot, refl)
        }
        GroupFamily::Semidihedral(n) => {
            // points 1..4n stand for residues mod 4n, with 4n = 0
            let m = 4 * n;
            let to_point = |res: u32| if res == 0 { m } else { res };
            let rot = (1..=m).map(|t| (to_point((t + 1) % m) - 1) as u16).collect();
            let refl = (1..=m)
                .map(|t| (to_point(((2 * n - 1) * t) % m) - 1) as u16)
                .collect();
            (rot, refl)
        }
    }
}

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Writes `x = l * p^t` with `p` not dividing `l`.
pub fn split_prime_power(x: u32, p: u32) -> (u32, u32) {
    let (mut l, mut t) = (x, 0);
    while l % p == 0 {
        l /= p;
        t += 1;
    }
    (l, t)
}

/// A subgroup stored as a sorted member list plus a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<GroupElement>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: &FiniteGroup, x: GroupElement) -> bool {
        self.mask[g.index(x)]
    }

    pub(crate) fn contains_idx(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask: Vec<bool> = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Subgroup {
            members: self.members.iter().copied().filter(|x| other.members.contains(x)).collect(),
            mask,
        }
    }

    /// True when the member set is closed under products and inverses and
    /// contains the identity.
    pub fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        let idx: Vec<usize> = self.members.iter().map(|&x| g.index(x)).collect();
        self.mask[0]
            && idx.iter().all(|&x| self.mask[g.inv_idx(x)])
            && idx.iter().all(|&x| idx.iter().all(|&y| self.mask[g.mul_idx(x, y)]))
    }

    /// Is this the trivial subgroup?
    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}
