//! Core model: identifiers, attacks, and validated immutable frameworks.
//!
//! A [`Framework`] is a finite set of named arguments together with named
//! attacks. Every attack is sourced at an argument; its target is either an
//! argument or another attack, so attacks on attacks may nest to any finite
//! depth, as long as every chain of targets eventually lands on an argument.
//!
//! Construction validates the whole structure once and canonicalizes element
//! order by name. After that the framework is immutable: queries cannot
//! observe a half-built or inconsistent state.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::defeat::DefeatTable;
use crate::error::{BuildError, SolveError};

/// Name of an argument or attack.
///
/// Names share one flat namespace and follow the token grammar: an ASCII
/// letter followed by ASCII letters, digits or underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(name: impl Into<String>) -> Result<Self, BuildError> {
        let name = name.into();
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        if head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Ok(ElementId(name))
        } else {
            Err(BuildError::InvalidId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::borrow::Borrow<str> for ElementId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// Whether a name denotes an argument or an attack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElementKind {
    Argument,
    Attack,
}

/// A resolved reference to an element, remembering what it resolved to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementRef {
    pub kind: ElementKind,
    pub id: ElementId,
}

/// A named attack, as stored in a built framework.
///
/// The source is always an argument; the target reference tells whether the
/// attack lands on an argument or on another attack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attack {
    id: ElementId,
    source: ElementId,
    target: ElementRef,
}

impl Attack {
    pub fn id(&self) -> &ElementId {
        &self.id
    }

    pub fn source(&self) -> &ElementId {
        &self.source
    }

    pub fn target(&self) -> &ElementRef {
        &self.target
    }
}

pub(crate) struct ElementInfo {
    pub(crate) id: ElementId,
    /// `None` for arguments; `(source, target)` element indices for attacks.
    pub(crate) edge: Option<(usize, usize)>,
}

/// A validated, immutable framework of arguments and recursive attacks.
pub struct Framework {
    /// All elements in canonical order (sorted by name, kinds mixed).
    elements: Vec<ElementInfo>,
    index: BTreeMap<ElementId, usize>,
    /// Attack views sorted by attack name.
    attacks: Vec<Attack>,
    pub(crate) defeat_cache: OnceLock<DefeatTable>,
}

impl Framework {
    /// Validates and freezes a framework.
    ///
    /// `attacks` triples are `(id, source, target)`. A target may name an
    /// attack declared anywhere in the list, including later; the only
    /// requirement is that every chain of attack targets ends at an
    /// argument.
    pub fn new<I, A, T>(arguments: A, attacks: T) -> Result<Self, BuildError>
    where
        I: Into<String>,
        A: IntoIterator<Item = I>,
        T: IntoIterator<Item = (I, I, I)>,
    {
        let argument_ids: Vec<ElementId> = arguments
            .into_iter()
            .map(ElementId::new)
            .collect::<Result<_, _>>()?;
        let attack_triples: Vec<(ElementId, ElementId, ElementId)> = attacks
            .into_iter()
            .map(|(id, source, target)| {
                Ok((
                    ElementId::new(id)?,
                    ElementId::new(source)?,
                    ElementId::new(target)?,
                ))
            })
            .collect::<Result<_, BuildError>>()?;

        let mut seen: BTreeSet<&ElementId> = BTreeSet::new();
        for id in argument_ids
            .iter()
            .chain(attack_triples.iter().map(|(id, _, _)| id))
        {
            if !seen.insert(id) {
                return Err(BuildError::DuplicateId(id.to_string()));
            }
        }

        let mut names: Vec<&ElementId> = seen.iter().copied().collect();
        names.sort();
        let index: BTreeMap<ElementId, usize> = names
            .iter()
            .enumerate()
            .map(|(i, id)| ((*id).clone(), i))
            .collect();

        let argument_names: BTreeSet<&ElementId> = argument_ids.iter().collect();
        let mut edges: Vec<Option<(usize, usize)>> = vec![None; names.len()];
        for (id, source, target) in &attack_triples {
            if !argument_names.contains(source) {
                return Err(BuildError::DanglingSource {
                    attack: id.to_string(),
                    src: source.to_string(),
                });
            }
            let Some(&target_idx) = index.get(target) else {
                return Err(BuildError::DanglingTarget {
                    attack: id.to_string(),
                    target: target.to_string(),
                });
            };
            edges[index[id]] = Some((index[source], target_idx));
        }

        // Well-foundedness: every target chain must reach an argument. Mark
        // attacks whose chain is known to terminate, fixpoint-style; anything
        // left over sits on a cycle of attack targets.
        let mut terminates: Vec<bool> = edges.iter().map(|e| e.is_none()).collect();
        loop {
            let mut changed = false;
            for i in 0..edges.len() {
                if let Some((_, target)) = edges[i] {
                    if !terminates[i] && terminates[target] {
                        terminates[i] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(stuck) = (0..edges.len()).find(|&i| !terminates[i]) {
            return Err(BuildError::CyclicTargetChain(names[stuck].to_string()));
        }

        let elements: Vec<ElementInfo> = names
            .iter()
            .enumerate()
            .map(|(i, id)| ElementInfo {
                id: (*id).clone(),
                edge: edges[i],
            })
            .collect();
        let attacks = elements
            .iter()
            .filter_map(|info| {
                let (source, target) = info.edge?;
                Some(Attack {
                    id: info.id.clone(),
                    source: elements[source].id.clone(),
                    target: ElementRef {
                        kind: if elements[target].edge.is_some() {
                            ElementKind::Attack
                        } else {
                            ElementKind::Argument
                        },
                        id: elements[target].id.clone(),
                    },
                })
            })
            .collect();

        Ok(Framework {
            elements,
            index,
            attacks,
            defeat_cache: OnceLock::new(),
        })
    }

    /// All arguments in canonical (name) order.
    pub fn arguments(&self) -> impl Iterator<Item = &ElementId> {
        self.elements
            .iter()
            .filter(|info| info.edge.is_none())
            .map(|info| &info.id)
    }

    /// All attacks in canonical (name) order.
    pub fn attacks(&self) -> &[Attack] {
        &self.attacks
    }

    /// Looks up one attack by name.
    pub fn attack(&self, name: &str) -> Option<&Attack> {
        self.attacks
            .binary_search_by(|a| a.id.as_str().cmp(name))
            .ok()
            .map(|i| &self.attacks[i])
    }

    /// All element names in canonical order, arguments and attacks mixed.
    pub fn element_ids(&self) -> impl Iterator<Item = &ElementId> {
        self.elements.iter().map(|info| &info.id)
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn argument_count(&self) -> usize {
        self.elements.len() - self.attacks.len()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn kind_of(&self, name: &str) -> Option<ElementKind> {
        let &i = self.index.get(name)?;
        Some(if self.elements[i].edge.is_some() {
            ElementKind::Attack
        } else {
            ElementKind::Argument
        })
    }

    /// Source argument of the named attack.
    pub fn src(&self, attack: &str) -> Result<&ElementId, SolveError> {
        match self.attack(attack) {
            Some(a) => Ok(&a.source),
            None => Err(SolveError::UnknownAttack(attack.to_string())),
        }
    }

    /// Target of the named attack, with the kind it resolved to.
    pub fn trg(&self, attack: &str) -> Result<&ElementRef, SolveError> {
        match self.attack(attack) {
            Some(a) => Ok(&a.target),
            None => Err(SolveError::UnknownAttack(attack.to_string())),
        }
    }

    /// True when every attack targets an argument, i.e. the framework is a
    /// classical argument-to-argument one.
    pub fn is_plain_af(&self) -> bool {
        self.attacks
            .iter()
            .all(|a| a.target.kind == ElementKind::Argument)
    }

    pub(crate) fn idx_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn id_at(&self, i: usize) -> &ElementId {
        &self.elements[i].id
    }

    pub(crate) fn edge(&self, i: usize) -> Option<(usize, usize)> {
        self.elements[i].edge
    }

    pub(crate) fn is_attack_idx(&self, i: usize) -> bool {
        self.elements[i].edge.is_some()
    }

    /// Maps a set of names to element indices, rejecting unknown members.
    pub(crate) fn resolve(&self, set: &ElementSet) -> Result<Vec<usize>, SolveError> {
        set.iter()
            .map(|id| {
                self.idx_of(id.as_str())
                    .ok_or_else(|| SolveError::UnknownElement(id.to_string()))
            })
            .collect()
    }

    pub(crate) fn set_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> ElementSet {
        indices
            .into_iter()
            .map(|i| self.elements[i].id.clone())
            .collect()
    }
}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Framework")
            .field("arguments", &self.arguments().collect::<Vec<_>>())
            .field("attacks", &self.attacks)
            .finish()
    }
}

impl Clone for Framework {
    fn clone(&self) -> Self {
        Framework {
            elements: self
                .elements
                .iter()
                .map(|info| ElementInfo {
                    id: info.id.clone(),
                    edge: info.edge,
                })
                .collect(),
            index: self.index.clone(),
            attacks: self.attacks.clone(),
            defeat_cache: OnceLock::new(),
        }
    }
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index
            && self.attacks == other.attacks
            && self.elements.len() == other.elements.len()
    }
}

impl Eq for Framework {}

/// A canonically ordered set of element names, arguments and attacks mixed.
///
/// Sets compare lexicographically over their sorted members, which is the
/// order extension listings use.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(BTreeSet<ElementId>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(BTreeSet::new())
    }

    pub fn from_names<I>(names: I) -> Result<Self, BuildError>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        names.into_iter().map(ElementId::new).collect()
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        self.0.insert(id)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementId> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &Self) -> Self {
        ElementSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        ElementSet(self.0.intersection(&other.0).cloned().collect())
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<T: IntoIterator<Item = ElementId>>(iter: T) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a ElementId;
    type IntoIter = std::collections::btree_set::Iter<'a, ElementId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}
