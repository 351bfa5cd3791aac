//! Finite groups as Cayley tables, with homomorphisms, actions, orbits and
//! conjugacy classes.
//!
//! Elements are dense indices and the identity is always index 0.
//! Permutations compose left to right: `(a * b)(i) = b(a(i))`, so that
//! `(123)(23)(132) = (12)`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default bound on group orders produced by closures and enumerations.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    names: Option<Vec<String>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table and relabels its identity to index 0.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(alloc::format!(
                    "row {} has length {}, expected {}",
                    r,
                    row.len(),
                    n
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(alloc::format!(
                    "entry {} in row {} out of range",
                    bad,
                    r
                )));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == e && table[y][x] == e) {
                return Err(Error::NoInverse { element: x });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // Swap labels 0 and e.
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
            }
        }
        Ok(Self::from_valid_table(n, mul, None))
    }

    /// Closure of a set of permutations of `0..degree`, elements in order of
    /// first discovery by breadth-first right multiplication.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !is_permutation(g, degree) {
                return Err(Error::InvalidPermutation {
                    generator: i,
                    degree,
                });
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[x], g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::OrderBoundExceeded { bound: cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p, false)).collect();
        Ok(Self::from_element_list(&elements, &index, names))
    }

    fn from_element_list(
        elements: &[Vec<usize>],
        index: &BTreeMap<Vec<usize>, usize>,
        names: Vec<String>,
    ) -> Self {
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        Self::from_valid_table(n, mul, Some(names))
    }

    /// Builds from a table already known to be a group with identity 0.
    pub(crate) fn from_valid_table(
        order: usize,
        mul: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut inv = vec![0; order];
        for x in 0..order {
            inv[x] = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .expect("validated table has inverses");
        }
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for x in 0..order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..order {
                let c = mul[mul[g * order + x] * order + inv[g]];
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        FiniteGroup {
            order,
            mul,
            inv,
            names,
            classes,
            class_of,
        }
    }

    /// Cyclic group `Z/n`, element `k` is `r^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let names = (0..n).map(|k| power_name("r", k)).collect();
        Self::from_valid_table(n, mul, Some(names))
    }

    /// Dihedral group of order `2n`: index `k` is `r^k`, index `n + k` is `s r^k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let order = 2 * n;
        let decode = |x: usize| (x / n, x % n);
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                let (ea, ka) = decode(a);
                let (eb, kb) = decode(b);
                // (s^ea r^ka)(s^eb r^kb) = s^(ea+eb) r^((-1)^eb ka + kb)
                let k = if eb == 1 {
                    (n - ka + kb) % n
                } else {
                    (ka + kb) % n
                };
                mul[a * order + b] = ((ea + eb) % 2) * n + k;
            }
        }
        let names = (0..order)
            .map(|x| {
                let (e, k) = decode(x);
                match (e, k) {
                    (0, k) => power_name("r", k),
                    (_, 0) => "s".into(),
                    (_, k) => alloc::format!("s{}", power_name("r", k)),
                }
            })
            .collect();
        Self::from_valid_table(order, mul, Some(names))
    }

    /// Symmetric group on `n` points, ordered by (number of transpositions
    /// needed, cycle notation); for `n = 3` this is e,(12),(13),(23),(123),(132).
    pub fn symmetric(n: usize, cap: usize) -> Result<Self> {
        let total = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        if total.is_none_or(|t| t > cap) {
            return Err(Error::OrderBoundExceeded { bound: cap });
        }
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        let mut keyed: Vec<(usize, String, Vec<usize>)> = perms
            .into_iter()
            .map(|p| (n - cycle_count(&p), cycle_notation(&p, n <= 9), p))
            .collect();
        keyed.sort();
        let index = keyed
            .iter()
            .enumerate()
            .map(|(i, (_, _, p))| (p.clone(), i))
            .collect();
        let elements: Vec<Vec<usize>> = keyed.iter().map(|(_, _, p)| p.clone()).collect();
        let names = keyed.into_iter().map(|(_, s, _)| s).collect();
        Ok(Self::from_element_list(&elements, &index, names))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, x| acc.lcm(&self.element_order(x)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(n) => n[x].clone(),
            None => alloc::format!("{}", x),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    /// Finds the element with the given display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    /// Conjugacy classes, each sorted, listed by smallest element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(g, z) == self.mul(z, g)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in elements {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        member[0]
            && elements
                .iter()
                .all(|&a| elements.iter().all(|&b| member[self.mul(a, self.inv[b])]))
    }

    /// The subgroup on `elements` (which must be closed), relabeled in
    /// increasing order of the ambient indices.
    pub fn subgroup(&self, elements: &[usize]) -> Subgroup {
        let mut embed = elements.to_vec();
        embed.sort_unstable();
        embed.dedup();
        assert!(self.is_subgroup(&embed), "elements do not form a subgroup");
        let k = embed.len();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in embed.iter().enumerate() {
            local[x] = i;
        }
        let mut mul = vec![0; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = local[self.mul(embed[a], embed[b])];
            }
        }
        let names = self
            .names
            .as_ref()
            .map(|n| embed.iter().map(|&x| n[x].clone()).collect());
        Subgroup {
            group: FiniteGroup::from_valid_table(k, mul, names),
            embed,
            local,
        }
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// A small generating set, chosen greedily by index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[0] = true;
        for x in 1..self.order {
            if !member[x] {
                gens.push(x);
                for y in self.span(&gens) {
                    member[y] = true;
                }
            }
        }
        gens
    }
}

/// A subgroup with its embedding into the ambient group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// Ambient index of each subgroup element.
    pub embed: Vec<usize>,
    local: Vec<usize>,
}

impl Subgroup {
    /// Subgroup index of an ambient element, if it belongs to the subgroup.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.local.get(x).copied().filter(|&i| i != usize::MAX)
    }
}

/// A homomorphism stored on elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHomomorphism {
    map: Vec<usize>,
}

impl GroupHomomorphism {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvariantViolation(
                "homomorphism table has the wrong shape".into(),
            ));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotHomomorphism { x, y });
                }
            }
        }
        Ok(GroupHomomorphism { map })
    }

    pub fn trivial(source: &FiniteGroup) -> Self {
        GroupHomomorphism {
            map: vec![0; source.order()],
        }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHomomorphism {
            map: (0..group.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }
}

/// A left action of `G` on `H` by automorphisms, `act(g, h) = g . h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    g_order: usize,
    h_order: usize,
    act: Vec<usize>,
}

impl GroupAction {
    pub fn new(g: &FiniteGroup, h: &FiniteGroup, table: &[Vec<usize>]) -> Result<Self> {
        if table.len() != g.order() || table.iter().any(|row| row.len() != h.order()) {
            return Err(Error::InvalidAction("table has the wrong shape".into()));
        }
        let action = GroupAction {
            g_order: g.order(),
            h_order: h.order(),
            act: table.iter().flatten().copied().collect(),
        };
        action.validate(g, h)?;
        Ok(action)
    }

    fn validate(&self, g: &FiniteGroup, h: &FiniteGroup) -> Result<()> {
        let hn = h.order();
        if self.act.iter().any(|&x| x >= hn) {
            return Err(Error::InvalidAction("image out of range".into()));
        }
        if (0..hn).any(|x| self.apply(0, x) != x) {
            return Err(Error::InvalidAction(
                "identity does not act trivially".into(),
            ));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                if let Some(x) =
                    (0..hn).find(|&x| self.apply(ab, x) != self.apply(a, self.apply(b, x)))
                {
                    return Err(Error::InvalidAction(alloc::format!(
                        "({a} {b}).{x} != {a}.({b}.{x})"
                    )));
                }
            }
        }
        for a in 0..g.order() {
            for x in 0..hn {
                for y in 0..hn {
                    if self.apply(a, h.mul(x, y)) != h.mul(self.apply(a, x), self.apply(a, y)) {
                        return Err(Error::InvalidAction(alloc::format!(
                            "{a} does not act by an automorphism at ({x}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let hn = h.order();
        GroupAction {
            g_order: g.order(),
            h_order: hn,
            act: (0..g.order() * hn).map(|i| i % hn).collect(),
        }
    }

    /// Conjugation action of `g` on the normal subgroup `h` of `g`, where
    /// `embed[i]` is the ambient index of the `i`-th element of `h`.
    pub fn conjugation(g: &FiniteGroup, h: &Subgroup) -> Self {
        let hn = h.group.order();
        let mut act = Vec::with_capacity(g.order() * hn);
        for a in 0..g.order() {
            for x in 0..hn {
                act.push(h.local(g.conj(a, h.embed[x])).expect("subgroup is normal"));
            }
        }
        GroupAction {
            g_order: g.order(),
            h_order: hn,
            act,
        }
    }

    #[inline]
    pub fn apply(&self, g: usize, h: usize) -> usize {
        self.act[g * self.h_order + h]
    }

    pub fn acting_order(&self) -> usize {
        self.g_order
    }

    pub fn set_order(&self) -> usize {
        self.h_order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.g_order)
            .map(|g| self.act[g * self.h_order..(g + 1) * self.h_order].to_vec())
            .collect()
    }

    /// Orbits with minimal-index representatives, witnesses and stabilizers.
    pub fn orbits(&self) -> OrbitData {
        let hn = self.h_order;
        let mut orbit_of = vec![usize::MAX; hn];
        let mut witness = vec![usize::MAX; hn];
        let mut orbit_reps = Vec::new();
        let mut orbits = Vec::new();
        let mut stabilizers = Vec::new();
        for s in 0..hn {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            orbit_reps.push(s);
            let mut orbit = Vec::new();
            let mut stab = Vec::new();
            for g in 0..self.g_order {
                let h = self.apply(g, s);
                if h == s {
                    stab.push(g);
                }
                if orbit_of[h] == usize::MAX {
                    orbit_of[h] = s;
                    witness[h] = g;
                    orbit.push(h);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
            stabilizers.push(stab);
        }
        OrbitData {
            orbit_reps,
            orbit_of,
            witness,
            stabilizers,
            orbits,
        }
    }
}

/// Orbit decomposition of an action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    /// Smallest index of each orbit, increasing.
    pub orbit_reps: Vec<usize>,
    /// Representative of the orbit containing each element.
    pub orbit_of: Vec<usize>,
    /// Some `g` with `g . orbit_of[h] = h`; the identity for representatives.
    pub witness: Vec<usize>,
    /// `Stab(rep)` as sorted acting-group indices, per representative.
    pub stabilizers: Vec<Vec<usize>>,
    /// Sorted elements of each orbit, per representative.
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitData {
    /// Position of `rep` among the orbit representatives.
    pub fn position(&self, rep: usize) -> Option<usize> {
        self.orbit_reps.iter().position(|&r| r == rep)
    }
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    p.iter()
        .all(|&x| x < degree && !core::mem::replace(&mut seen[x], true))
}

/// Left-to-right product: apply `a`, then `b`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for i in 0..p.len() {
        if !seen[i] {
            count += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = p[j];
            }
        }
    }
    count
}

/// Cycle notation, `e` for the identity. Compact one-based form (`(123)`)
/// or zero-based with spaces (`(0 1 2)`).
pub fn cycle_notation(p: &[usize], compact_one_based: bool) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            continue;
        }
        out.push('(');
        let mut j = i;
        let mut first = true;
        while !seen[j] {
            seen[j] = true;
            if !first && !compact_one_based {
                out.push(' ');
            }
            if compact_one_based {
                out.push_str(&alloc::format!("{}", j + 1));
            } else {
                out.push_str(&alloc::format!("{}", j));
            }
            first = false;
            j = p[j];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => alloc::format!("{}^{}", base, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes(), &[vec![0]]);
    }

    #[test]
    fn z2_is_self_inverse() {
        let g = FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn identity_is_relabeled() {
        // Z/3 with identity at label 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_cayley(&t).unwrap();
        assert!((0..3).all(|x| g.mul(0, x) == x && g.mul(x, 0) == x));
    }

    #[test]
    fn cayley_errors() {
        assert_eq!(
            FiniteGroup::from_cayley(&[vec![1, 0], vec![0, 0]]),
            Err(Error::NoIdentity)
        );
        // Identity 0, element 1 has no inverse.
        assert_eq!(
            FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NoInverse { element: 1 })
        );
        // A Latin square with identity that is not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley(&t),
            Err(Error::NotAssociative { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_cayley(&[vec![0, 1], vec![1]]),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn permutation_closures() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap();
        assert_eq!(s3.order(), 6);
        let c4 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]], 100).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        let d4 =
            FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], 100).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(
            FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], 10),
            Err(Error::OrderBoundExceeded { bound: 10 })
        );
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], 10),
            Err(Error::InvalidPermutation { generator: 0, .. })
        ));
    }

    #[test]
    fn s3_enumeration_and_classes() {
        let s3 = FiniteGroup::symmetric(3, 100).unwrap();
        let names: Vec<_> = (0..6).map(|x| s3.name(x)).collect();
        assert_eq!(names, ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]);
        let sizes: Vec<_> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 3, 2]);
        // (123)(23)(132) = (12)
        let c = s3.element_by_name("(123)").unwrap();
        let t = s3.element_by_name("(23)").unwrap();
        assert_eq!(s3.name(s3.conj(c, t)), "(12)");
    }

    #[test]
    fn d4_classes() {
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.conjugacy_classes().len(), 5);
        assert_eq!(d4.center(), vec![0, 2]);
        assert_eq!(d4.name(5), "sr");
    }

    #[test]
    fn orbit_examples() {
        let s3 = FiniteGroup::symmetric(3, 100).unwrap();
        let all = s3.subgroup(&(0..6).collect::<Vec<_>>());
        let od = GroupAction::conjugation(&s3, &all).orbits();
        let stab: Vec<_> = od.stabilizers.iter().map(Vec::len).collect();
        assert_eq!(stab, [6, 2, 3]);
        let triv = GroupAction::trivial(&s3, &FiniteGroup::cyclic(4)).orbits();
        assert_eq!(triv.orbit_reps, [0, 1, 2, 3]);
        assert!(triv.stabilizers.iter().all(|s| s.len() == 6));
    }
}
