//! Acceptability semantics over mixed sets of arguments and attacks.
//!
//! Extensions are subsets of the whole element universe: an extension may
//! contain attacks as well as arguments, and an attack in the set defends
//! the set exactly like an argument-level defender would in a classical
//! framework. The membership predicates here work directly on the defeat
//! relation; the extension-enumerating semantics run on the flattened
//! defeat graph (see [`crate::dung`]), whose extensions coincide with the
//! ones defined directly — an equivalence the test suite cross-checks
//! against an independent brute-force reference.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::defeat;
use crate::dung;
use crate::error::SolveError;
use crate::framework::{ElementSet, Framework};

/// Identifier for a semantics or an enumeration query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Complete,
    Grounded,
    Preferred,
    Stable,
    SemiStable,
    Ideal,
    Admissible,
    ConflictFree,
}

impl Semantics {
    pub const ALL: [Semantics; 8] = [
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::SemiStable,
        Semantics::Ideal,
        Semantics::Admissible,
        Semantics::ConflictFree,
    ];

    /// The six extension semantics, without the enumeration queries.
    pub const EXTENSION: [Semantics; 6] = [
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::SemiStable,
        Semantics::Ideal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
            Semantics::Stable => "stable",
            Semantics::SemiStable => "semi_stable",
            Semantics::Ideal => "ideal",
            Semantics::Admissible => "admissible",
            Semantics::ConflictFree => "conflict_free",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown semantics `{s}` (expected one of: {})",
                    Semantics::ALL.map(Semantics::name).join(", ")
                )
            })
    }
}

/// Tunables for the solving entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    /// Largest element count accepted by subset-enumeration queries
    /// (conflict-free and admissible listings). Listings grow as `2^n`, so
    /// values above 32 are clamped to 32.
    pub max_enum: usize,
    /// Optional wall-clock budget for extension searches.
    pub timeout: Option<Duration>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            max_enum: 24,
            timeout: None,
        }
    }
}

impl SolveConfig {
    pub(crate) fn effective_bound(&self) -> usize {
        self.max_enum.min(32)
    }

    pub(crate) fn deadline(&self) -> Option<(Instant, Duration)> {
        self.timeout.map(|t| (Instant::now() + t, t))
    }
}

/// All extensions under one semantics, canonically ordered and
/// duplicate-free: extensions sort lexicographically by their sorted
/// member names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSet {
    semantics: Semantics,
    extensions: Vec<ElementSet>,
}

impl ExtensionSet {
    pub fn new(semantics: Semantics, extensions: impl IntoIterator<Item = ElementSet>) -> Self {
        let canonical: BTreeSet<ElementSet> = extensions.into_iter().collect();
        ExtensionSet {
            semantics,
            extensions: canonical.into_iter().collect(),
        }
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn extensions(&self) -> &[ElementSet] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn contains(&self, extension: &ElementSet) -> bool {
        self.extensions.binary_search(extension).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementSet> {
        self.extensions.iter()
    }
}

/// Element indices of `s` plus a membership table, shared by the
/// predicates below.
fn resolve_members(fw: &Framework, s: &ElementSet) -> Result<(Vec<usize>, Vec<bool>), SolveError> {
    let members = fw.resolve(s)?;
    let mut in_set = vec![false; fw.element_count()];
    for &i in &members {
        in_set[i] = true;
    }
    Ok((members, in_set))
}

/// Membership table of everything defeated by a member of the set.
fn defeated_by(fw: &Framework, members: &[usize]) -> Vec<bool> {
    let table = defeat::table(fw);
    let mut defeated = vec![false; fw.element_count()];
    for &i in members {
        for &v in &table.defeats_of[i] {
            defeated[v] = true;
        }
    }
    defeated
}

/// True when no member defeats another member (or itself).
pub fn is_conflict_free(fw: &Framework, s: &ElementSet) -> Result<bool, SolveError> {
    let (members, in_set) = resolve_members(fw, s)?;
    let table = defeat::table(fw);
    Ok(members
        .iter()
        .all(|&i| table.defeats_of[i].iter().all(|&v| !in_set[v])))
}

/// True when every attack defeating `element` is defeated by some member
/// of `s`.
pub fn is_acceptable(fw: &Framework, element: &str, s: &ElementSet) -> Result<bool, SolveError> {
    let v = fw
        .idx_of(element)
        .ok_or_else(|| SolveError::UnknownElement(element.to_string()))?;
    let (members, _) = resolve_members(fw, s)?;
    let defeated = defeated_by(fw, &members);
    let table = defeat::table(fw);
    Ok(table.defeaters_of[v].iter().all(|&a| defeated[a]))
}

/// Everything acceptable with respect to `s`.
pub fn characteristic_function(fw: &Framework, s: &ElementSet) -> Result<ElementSet, SolveError> {
    let (members, _) = resolve_members(fw, s)?;
    let defeated = defeated_by(fw, &members);
    let table = defeat::table(fw);
    let acceptable = (0..fw.element_count())
        .filter(|&v| table.defeaters_of[v].iter().all(|&a| defeated[a]));
    Ok(fw.set_from_indices(acceptable))
}

/// The set together with everything its members defeat.
pub fn range(fw: &Framework, s: &ElementSet) -> Result<ElementSet, SolveError> {
    let (members, mut covered) = resolve_members(fw, s)?;
    for (v, hit) in defeated_by(fw, &members).into_iter().enumerate() {
        if hit {
            covered[v] = true;
        }
    }
    Ok(fw.set_from_indices(
        (0..fw.element_count()).filter(|&v| covered[v]),
    ))
}

/// Conflict-free and self-defending.
pub fn is_admissible(fw: &Framework, s: &ElementSet) -> Result<bool, SolveError> {
    let (members, in_set) = resolve_members(fw, s)?;
    let table = defeat::table(fw);
    let conflict_free = members
        .iter()
        .all(|&i| table.defeats_of[i].iter().all(|&v| !in_set[v]));
    if !conflict_free {
        return Ok(false);
    }
    let defeated = defeated_by(fw, &members);
    Ok(members
        .iter()
        .all(|&v| table.defeaters_of[v].iter().all(|&a| defeated[a])))
}

/// The least fixed point of the characteristic function, found by
/// iterating it from the empty set; the iteration settles after at most
/// one round per element.
pub fn grounded_extension(fw: &Framework) -> ElementSet {
    let table = defeat::table(fw);
    let n = fw.element_count();
    let mut current = vec![false; n];
    loop {
        let mut defeated = vec![false; n];
        for i in 0..n {
            if current[i] {
                for &v in &table.defeats_of[i] {
                    defeated[v] = true;
                }
            }
        }
        let next: Vec<bool> = (0..n)
            .map(|v| table.defeaters_of[v].iter().all(|&a| defeated[a]))
            .collect();
        if next == current {
            break;
        }
        current = next;
    }
    fw.set_from_indices((0..n).filter(|&v| current[v]))
}

/// Every conflict-free subset, in canonical order.
pub fn conflict_free_sets(
    fw: &Framework,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    enumerate_subsets(fw, config, Semantics::ConflictFree)
}

/// Every admissible subset, in canonical order.
pub fn admissible_sets(fw: &Framework, config: &SolveConfig) -> Result<ExtensionSet, SolveError> {
    enumerate_subsets(fw, config, Semantics::Admissible)
}

pub fn complete_extensions(
    fw: &Framework,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    extensions(fw, Semantics::Complete, config)
}

pub fn preferred_extensions(
    fw: &Framework,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    extensions(fw, Semantics::Preferred, config)
}

pub fn stable_extensions(
    fw: &Framework,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    extensions(fw, Semantics::Stable, config)
}

pub fn semi_stable_extensions(
    fw: &Framework,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    extensions(fw, Semantics::SemiStable, config)
}

/// The unique largest admissible set contained in every preferred
/// extension.
pub fn ideal_extension(fw: &Framework, config: &SolveConfig) -> Result<ElementSet, SolveError> {
    let result = extensions(fw, Semantics::Ideal, config)?;
    Ok(result
        .extensions()
        .first()
        .expect("the ideal extension always exists")
        .clone())
}

/// Extension query dispatcher: the enumeration queries and the grounded
/// fixpoint run directly on the defeat relation, everything else runs on
/// the flattened defeat graph.
pub fn extensions(
    fw: &Framework,
    which: Semantics,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    match which {
        Semantics::Grounded => Ok(ExtensionSet::new(which, [grounded_extension(fw)])),
        Semantics::ConflictFree | Semantics::Admissible => enumerate_subsets(fw, config, which),
        Semantics::Complete
        | Semantics::Preferred
        | Semantics::Stable
        | Semantics::SemiStable
        | Semantics::Ideal => dung::d_semantics(&dung::flatten(fw), which, config),
    }
}

fn enumerate_subsets(
    fw: &Framework,
    config: &SolveConfig,
    which: Semantics,
) -> Result<ExtensionSet, SolveError> {
    let n = fw.element_count();
    let bound = config.effective_bound();
    if n > bound {
        return Err(SolveError::TooLargeToEnumerate { elements: n, bound });
    }
    let table = defeat::table(fw);
    let defeats_mask: Vec<u64> = (0..n)
        .map(|i| table.defeats_of[i].iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let defeaters_mask: Vec<u64> = (0..n)
        .map(|i| table.defeaters_of[i].iter().fold(0u64, |m, &a| m | 1 << a))
        .collect();
    let deadline = config.deadline();
    let mut found = Vec::new();
    for subset in 0u64..1u64 << n {
        if subset.is_multiple_of(4096) {
            if let Some((at, budget)) = deadline {
                if Instant::now() > at {
                    return Err(SolveError::TimedOut(budget));
                }
            }
        }
        let mut defeated = 0u64;
        let mut members = subset;
        while members != 0 {
            let i = members.trailing_zeros() as usize;
            members &= members - 1;
            defeated |= defeats_mask[i];
        }
        if defeated & subset != 0 {
            continue; // a member defeats a member
        }
        if which == Semantics::Admissible {
            let mut undefended = false;
            let mut members = subset;
            while members != 0 {
                let i = members.trailing_zeros() as usize;
                members &= members - 1;
                if defeaters_mask[i] & !defeated != 0 {
                    undefended = true;
                    break;
                }
            }
            if undefended {
                continue;
            }
        }
        found.push(fw.set_from_indices((0..n).filter(|&i| subset & 1 << i != 0)));
    }
    Ok(ExtensionSet::new(which, found))
}
