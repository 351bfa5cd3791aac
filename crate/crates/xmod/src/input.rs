//! JSON input documents: groups, crossed modules, tangles and braid links.

use serde::{Deserialize, Serialize};
use xmod_core::group::{FiniteGroup, GroupAction, GroupHomomorphism};
use xmod_core::rt::{Atom, Color, ColoredTangle, Orientation, StrandType};
use xmod_core::xmod::{CrossedModule, Label};
use xmod_core::Error;

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupDesc {
    Cayley {
        table: Vec<Vec<usize>>,
    },
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Named {
        name: NamedFamily,
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum NamedFamily {
    Cyclic,
    Dihedral,
    Symmetric,
}

impl GroupDesc {
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, CliError> {
        let g = match self {
            GroupDesc::Cayley { table } => FiniteGroup::from_cayley(table)?,
            GroupDesc::Perm { degree, generators } => {
                FiniteGroup::from_permutations(*degree, generators, max_order)?
            }
            GroupDesc::Named { name, n } => {
                let n = *n;
                let too_big = match name {
                    NamedFamily::Cyclic => n > max_order,
                    NamedFamily::Dihedral => n.saturating_mul(2) > max_order,
                    NamedFamily::Symmetric => (1..=n)
                        .try_fold(1usize, |a, k| a.checked_mul(k))
                        .is_none_or(|o| o > max_order),
                };
                if too_big {
                    return Err(Error::OrderBoundExceeded { bound: max_order }.into());
                }
                match name {
                    NamedFamily::Cyclic if n >= 1 => FiniteGroup::cyclic(n),
                    NamedFamily::Dihedral if n >= 1 => FiniteGroup::dihedral(n),
                    NamedFamily::Symmetric if n >= 1 => FiniteGroup::symmetric(n, max_order)?,
                    _ => return Err(CliError::Parse(format!("{:?} needs n >= 1", name))),
                }
            }
        };
        if g.order() > max_order {
            return Err(Error::OrderBoundExceeded { bound: max_order }.into());
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum MuDesc {
    Table(Vec<Vec<usize>>),
    Named(MuKind),
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum MuKind {
    Trivial,
    Conjugation,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GammaDesc {
    Table(Vec<usize>),
    Named(GammaKind),
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum GammaKind {
    Identity,
    Zero,
    Inclusion,
}

/// A crossed module, either spelled out or one of the standard families.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum XmodDesc {
    Explicit {
        #[serde(rename = "G")]
        g: GroupDesc,
        #[serde(rename = "H")]
        h: GroupDesc,
        mu: MuDesc,
        gamma: GammaDesc,
    },
    Standard {
        standard: StandardKind,
        group: GroupDesc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subgroup: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum StandardKind {
    Conjugation,
    TrivialH,
    NormalSubgroup,
    Automorphism,
}

/// The parts of a crossed module before the axioms are checked.
pub struct XmodParts {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    pub mu: GroupAction,
    pub gamma: GroupHomomorphism,
}

/// Positions of `h`'s elements inside `g`, matched by element name.
fn inclusion(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<usize>, CliError> {
    (0..h.order())
        .map(|x| {
            let name = h.name(x);
            g.element_by_name(&name).ok_or_else(|| {
                CliError::Parse(format!("H element {} has no counterpart in G", name))
            })
        })
        .collect()
}

impl XmodDesc {
    pub fn parts(&self, max_order: usize) -> Result<XmodParts, CliError> {
        let (g, h, mu, gamma) = match self {
            XmodDesc::Explicit { g, h, mu, gamma } => (g, h, mu, gamma),
            XmodDesc::Standard { .. } => {
                let x = self.build(max_order)?;
                return Ok(XmodParts {
                    g: x.g().clone(),
                    h: x.h().clone(),
                    mu: x.mu().clone(),
                    gamma: x.gamma().clone(),
                });
            }
        };
        let g = g.build(max_order)?;
        let h = h.build(max_order)?;
        let gamma = match gamma {
            GammaDesc::Table(t) => GroupHomomorphism::new(&h, &g, t.clone())?,
            GammaDesc::Named(GammaKind::Zero) => {
                GroupHomomorphism::new(&h, &g, vec![0; h.order()])?
            }
            GammaDesc::Named(GammaKind::Identity) => {
                if g != h {
                    return Err(CliError::Parse("gamma = identity needs G = H".into()));
                }
                GroupHomomorphism::identity(&g)
            }
            GammaDesc::Named(GammaKind::Inclusion) => {
                GroupHomomorphism::new(&h, &g, inclusion(&g, &h)?)?
            }
        };
        let mu = match mu {
            MuDesc::Table(t) => GroupAction::new(&g, &h, t)?,
            MuDesc::Named(MuKind::Trivial) => GroupAction::trivial(&g, &h),
            MuDesc::Named(MuKind::Conjugation) => {
                let embed = if g == h {
                    (0..g.order()).collect()
                } else {
                    inclusion(&g, &h)?
                };
                let mut table = vec![vec![0; h.order()]; g.order()];
                for (a, row) in table.iter_mut().enumerate() {
                    for (x, out) in row.iter_mut().enumerate() {
                        let y = g.conj(a, embed[x]);
                        *out = embed
                            .iter()
                            .position(|&e| e == y)
                            .ok_or(Error::NotNormal { g: a, h: embed[x] })?;
                    }
                }
                GroupAction::new(&g, &h, &table)?
            }
        };
        Ok(XmodParts { g, h, mu, gamma })
    }

    pub fn build(&self, max_order: usize) -> Result<CrossedModule, CliError> {
        match self {
            XmodDesc::Standard {
                standard,
                group,
                subgroup,
            } => {
                let g = group.build(max_order)?;
                Ok(match standard {
                    StandardKind::Conjugation => CrossedModule::conjugation(&g)?,
                    StandardKind::TrivialH => CrossedModule::trivial_h(&g)?,
                    StandardKind::Automorphism => CrossedModule::automorphism(&g)?,
                    StandardKind::NormalSubgroup => {
                        let n = subgroup.as_ref().ok_or_else(|| {
                            CliError::Parse("normal_subgroup needs \"subgroup\"".into())
                        })?;
                        CrossedModule::normal_subgroup(&g, n)?
                    }
                })
            }
            XmodDesc::Explicit { .. } => {
                let p = self.parts(max_order)?;
                Ok(CrossedModule::new(p.g, p.h, p.mu, p.gamma)?)
            }
        }
    }
}

/// A simple-module color: `[orbit rep index, irrep index]` or
/// `"<H element name>:<irrep index>"`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum ColorDesc {
    Indices([usize; 2]),
    Named(String),
}

impl ColorDesc {
    pub fn resolve(&self, x: &CrossedModule) -> Result<Label, CliError> {
        let label = match self {
            ColorDesc::Indices([s, i]) => (*s, *i),
            ColorDesc::Named(text) => {
                let (name, i) = text
                    .rsplit_once(':')
                    .ok_or_else(|| Error::UnresolvedColor(text.clone()))?;
                let s = x
                    .h()
                    .element_by_name(name.trim())
                    .ok_or_else(|| Error::UnresolvedColor(text.clone()))?;
                let i = i
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnresolvedColor(text.clone()))?;
                (s, i)
            }
        };
        x.check_label(label)?;
        Ok(label)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OrientationDesc {
    Up,
    Down,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StrandDesc {
    pub color: ColorDesc,
    pub orientation: OrientationDesc,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum AtomKind {
    Id,
    PosCross,
    NegCross,
    Cap,
    Cup,
    Twist,
    TwistInv,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AtomDesc {
    pub atom: AtomKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<ColorDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<OrientationDesc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TangleDesc {
    pub boundary_in: Vec<StrandDesc>,
    pub slices: Vec<Vec<AtomDesc>>,
}

fn strand(
    x: &CrossedModule,
    color: &ColorDesc,
    o: OrientationDesc,
) -> Result<StrandType, CliError> {
    Ok(StrandType {
        color: Color::Simple(color.resolve(x)?),
        orientation: match o {
            OrientationDesc::Up => Orientation::Up,
            OrientationDesc::Down => Orientation::Down,
        },
    })
}

impl TangleDesc {
    pub fn build(&self, x: &CrossedModule) -> Result<ColoredTangle, CliError> {
        let boundary = self
            .boundary_in
            .iter()
            .map(|s| strand(x, &s.color, s.orientation))
            .collect::<Result<Vec<_>, _>>()?;
        let mut slices = Vec::with_capacity(self.slices.len());
        for (si, slice) in self.slices.iter().enumerate() {
            let mut atoms = Vec::with_capacity(slice.len());
            for a in slice {
                let typed = || -> Result<StrandType, CliError> {
                    match (&a.color, a.orientation) {
                        (Some(c), Some(o)) => strand(x, c, o),
                        _ => Err(CliError::Parse(format!(
                            "slice {}: {:?} needs a color and an orientation",
                            si, a.atom
                        ))),
                    }
                };
                atoms.push(match a.atom {
                    AtomKind::Id => Atom::Id(typed()?),
                    AtomKind::PosCross => Atom::PosCross,
                    AtomKind::NegCross => Atom::NegCross,
                    AtomKind::Cap => Atom::Cap,
                    AtomKind::Cup => Atom::Cup(typed()?),
                    AtomKind::Twist => Atom::Twist(typed()?),
                    AtomKind::TwistInv => Atom::TwistInv(typed()?),
                });
            }
            slices.push(atoms);
        }
        Ok(ColoredTangle::new(boundary, slices))
    }
}

/// A braid closure. Without `colors` every coloring of the components by
/// simple modules is evaluated.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BraidDesc {
    pub strands: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<Vec<ColorDesc>>,
    pub word: Vec<i64>,
    pub framings: Vec<i64>,
}
