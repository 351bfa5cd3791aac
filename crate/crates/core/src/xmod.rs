//! Crossed modules `(G, H, mu, gamma)` and the standard constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::chartable::{
    central_idempotents_group, character_table, GroupAlgebraElement, GroupCharTable,
    DEFAULT_TABLE_CAP,
};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupAction, GroupHomomorphism, OrbitData, Subgroup};

/// Largest group whose automorphisms are enumerated.
pub const AUT_ORDER_CAP: usize = 16;

/// A simple-module label: orbit representative in `H` and irrep index of its
/// stabilizer.
pub type Label = (usize, usize);

/// Stabilizer of an orbit representative with its character data.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub subgroup: Subgroup,
    pub table: GroupCharTable,
    /// Central idempotents in the subgroup's own indexing.
    pub idempotents: Vec<GroupAlgebraElement>,
}

#[derive(Clone, Debug)]
pub struct CrossedModule {
    g: FiniteGroup,
    h: FiniteGroup,
    mu: GroupAction,
    gamma: GroupHomomorphism,
    orbits: OrbitData,
    stabilizers: Vec<Stabilizer>,
}

impl PartialEq for CrossedModule {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.h == other.h && self.mu == other.mu && self.gamma == other.gamma
    }
}

impl Eq for CrossedModule {}

/// The standard examples.
#[derive(Clone, Debug)]
pub enum StandardXmod {
    /// `(G, G, conj, id)`.
    Conjugation(FiniteGroup),
    /// `(G, {1}, trivial, trivial)`.
    TrivialH(FiniteGroup),
    /// `(G, N, conj, inclusion)` for a normal subgroup given by its elements.
    NormalSubgroup(FiniteGroup, Vec<usize>),
    /// `(Aut(G), G, evaluation, x -> conj_x)`.
    Automorphism(FiniteGroup),
}

pub fn standard_xmod(kind: StandardXmod) -> Result<CrossedModule> {
    match kind {
        StandardXmod::Conjugation(g) => CrossedModule::conjugation(&g),
        StandardXmod::TrivialH(g) => CrossedModule::trivial_h(&g),
        StandardXmod::NormalSubgroup(g, n) => CrossedModule::normal_subgroup(&g, &n),
        StandardXmod::Automorphism(g) => CrossedModule::automorphism(&g),
    }
}

impl CrossedModule {
    /// Checks both axioms exhaustively.
    pub fn new(
        g: FiniteGroup,
        h: FiniteGroup,
        mu: GroupAction,
        gamma: GroupHomomorphism,
    ) -> Result<Self> {
        if mu.acting_order() != g.order()
            || mu.set_order() != h.order()
            || gamma.table().len() != h.order()
            || gamma.table().iter().any(|&x| x >= g.order())
        {
            return Err(Error::XmodMismatch);
        }
        for a in 0..g.order() {
            for x in 0..h.order() {
                if gamma.apply(mu.apply(a, x)) != g.conj(a, gamma.apply(x)) {
                    return Err(Error::EquivarianceViolation { g: a, h: x });
                }
            }
        }
        for x in 0..h.order() {
            for n in 0..h.order() {
                if mu.apply(gamma.apply(x), n) != h.conj(x, n) {
                    return Err(Error::PeifferViolation { h: x, n });
                }
            }
        }
        Self::assemble(g, h, mu, gamma)
    }

    /// Skips the axiom checks; used to build negative controls.
    pub fn new_unchecked(
        g: FiniteGroup,
        h: FiniteGroup,
        mu: GroupAction,
        gamma: GroupHomomorphism,
    ) -> Result<Self> {
        Self::assemble(g, h, mu, gamma)
    }

    fn assemble(
        g: FiniteGroup,
        h: FiniteGroup,
        mu: GroupAction,
        gamma: GroupHomomorphism,
    ) -> Result<Self> {
        let orbits = mu.orbits();
        let stabilizers = orbits
            .stabilizers
            .iter()
            .map(|stab| {
                let subgroup = g.subgroup(stab);
                let table = character_table(&subgroup.group, DEFAULT_TABLE_CAP)?;
                let idempotents = central_idempotents_group(&table)?;
                Ok(Stabilizer {
                    subgroup,
                    table,
                    idempotents,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CrossedModule {
            g,
            h,
            mu,
            gamma,
            orbits,
            stabilizers,
        })
    }

    pub fn conjugation(g: &FiniteGroup) -> Result<Self> {
        let all: Vec<usize> = (0..g.order()).collect();
        let sub = g.subgroup(&all);
        Self::new(
            g.clone(),
            g.clone(),
            GroupAction::conjugation(g, &sub),
            GroupHomomorphism::identity(g),
        )
    }

    pub fn trivial_h(g: &FiniteGroup) -> Result<Self> {
        let h = FiniteGroup::cyclic(1);
        Self::new(
            g.clone(),
            h.clone(),
            GroupAction::trivial(g, &h),
            GroupHomomorphism::trivial(&h),
        )
    }

    pub fn normal_subgroup(g: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        if !g.is_subgroup(elements) {
            return Err(Error::InvalidAction(
                "elements do not form a subgroup".into(),
            ));
        }
        for a in 0..g.order() {
            if let Some(&x) = elements
                .iter()
                .find(|&&x| !elements.contains(&g.conj(a, x)))
            {
                return Err(Error::NotNormal { g: a, h: x });
            }
        }
        let sub = g.subgroup(elements);
        let mu = GroupAction::conjugation(g, &sub);
        let gamma = GroupHomomorphism::new(&sub.group, g, sub.embed.clone())?;
        Self::new(g.clone(), sub.group, mu, gamma)
    }

    pub fn automorphism(g: &FiniteGroup) -> Result<Self> {
        let aut = AutomorphismGroup::enumerate(g)?;
        let mu = GroupAction::new(&aut.group, g, &aut.maps)?;
        let gamma_map = (0..g.order())
            .map(|x| {
                let conj: Vec<usize> = (0..g.order()).map(|y| g.conj(x, y)).collect();
                aut.index_of(&conj)
                    .expect("inner automorphisms are automorphisms")
            })
            .collect();
        let gamma = GroupHomomorphism::new(g, &aut.group, gamma_map)?;
        Self::new(aut.group, g.clone(), mu, gamma)
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn mu(&self) -> &GroupAction {
        &self.mu
    }

    pub fn gamma(&self) -> &GroupHomomorphism {
        &self.gamma
    }

    /// `g . h`.
    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.mu.apply(g, h)
    }

    #[inline]
    pub fn gamma_of(&self, h: usize) -> usize {
        self.gamma.apply(h)
    }

    pub fn orbit_data(&self) -> &OrbitData {
        &self.orbits
    }

    pub fn orbit_reps(&self) -> &[usize] {
        &self.orbits.orbit_reps
    }

    /// Stabilizer data of the orbit representative `s`.
    pub fn stabilizer(&self, s: usize) -> Option<&Stabilizer> {
        self.orbits.position(s).map(|k| &self.stabilizers[k])
    }

    pub fn stabilizers(&self) -> &[Stabilizer] {
        &self.stabilizers
    }

    /// `|G| |H|`, the dimension of `D(G,H)`.
    pub fn algebra_dim(&self) -> usize {
        self.g.order() * self.h.order()
    }

    /// All simple labels, ordered by orbit representative then irrep.
    pub fn labels(&self) -> Vec<Label> {
        self.orbits
            .orbit_reps
            .iter()
            .zip(&self.stabilizers)
            .flat_map(|(&s, st)| (0..st.table.len()).map(move |i| (s, i)))
            .collect()
    }

    pub fn check_label(&self, (s, i): Label) -> Result<&Stabilizer> {
        match self.stabilizer(s) {
            Some(st) if i < st.table.len() => Ok(st),
            _ => Err(Error::InvalidLabel {
                orbit_rep: s,
                irrep: i,
            }),
        }
    }

    /// `|G . s| d_i`.
    pub fn label_dim(&self, label: Label) -> Result<usize> {
        let st = self.check_label(label)?;
        let k = self.orbits.position(label.0).expect("checked");
        Ok(self.orbits.orbits[k].len() * st.table.degrees()[label.1])
    }

    /// Index of the unit object's label: orbit of the identity, trivial irrep.
    pub fn unit_label(&self) -> Label {
        (0, 0)
    }

    /// The elements `c` of `Z(G)` with `c^2 = 1` acting trivially on `H`.
    pub fn ribbon_group(&self) -> Vec<usize> {
        self.g
            .center()
            .into_iter()
            .filter(|&c| self.g.mul(c, c) == 0 && (0..self.h.order()).all(|x| self.act(c, x) == x))
            .collect()
    }

    pub fn label_name(&self, (s, i): Label) -> String {
        format!("({}, {})", self.h.name(s), i)
    }
}

/// `Aut(G)` with each automorphism stored as its image array. The product is
/// composition `(phi psi)(x) = phi(psi(x))`, so evaluation is a left action.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub group: FiniteGroup,
    pub maps: Vec<Vec<usize>>,
}

impl AutomorphismGroup {
    pub fn enumerate(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        if n > AUT_ORDER_CAP {
            return Err(Error::OrderBoundExceeded {
                bound: AUT_ORDER_CAP,
            });
        }
        let gens = g.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&s| {
                (0..n)
                    .filter(|&y| g.element_order(y) == g.element_order(s))
                    .collect()
            })
            .collect();
        let mut maps = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        'outer: loop {
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, v)| v[c]).collect();
            if let Some(map) = extend(g, &gens, &images) {
                maps.push(map);
            }
            for k in (0..gens.len()).rev() {
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    continue 'outer;
                }
                choice[k] = 0;
            }
            break;
        }
        maps.sort();
        maps.dedup();
        let m = maps.len();
        let index_of = |p: &[usize]| maps.binary_search_by(|q| q.as_slice().cmp(p)).ok();
        let mut mul = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                let comp: Vec<usize> = (0..n).map(|x| maps[a][maps[b][x]]).collect();
                mul[a * m + b] = index_of(&comp).expect("automorphisms are closed");
            }
        }
        let names = maps
            .iter()
            .map(|p| {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|&s| format!("{}->{}", g.name(s), g.name(p[s])))
                    .collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        let group = FiniteGroup::from_valid_table(m, mul, Some(names));
        Ok(AutomorphismGroup { group, maps })
    }

    pub fn index_of(&self, p: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }
}

/// Extends generator images to an automorphism, if one exists.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = g.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    let mut seen = vec![false; n];
    for &y in &map {
        if y == usize::MAX || core::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != g.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}
