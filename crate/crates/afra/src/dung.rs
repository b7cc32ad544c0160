//! Classical argument-only frameworks and the two bridges to them.
//!
//! [`DungAf`] is the classical model: a set of arguments and a binary
//! attack relation. Two constructions connect it to the recursive-attack
//! model:
//!
//! * [`flatten`] turns every element (arguments and attacks alike) into a
//!   node and every defeat into an edge. Extensions of the flattened graph
//!   use exactly the same element names, so the solving path computes
//!   there and hands the results straight back.
//! * [`lift`] goes the other way for frameworks whose attacks all target
//!   arguments: a classical extension (arguments only) is completed by
//!   adjoining every attack sourced inside it.
//!
//! [`check_flatten_correspondence`] and [`check_af_correspondence`] verify
//! the two bridges on a concrete framework.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::defeat;
use crate::error::{BuildError, SolveError};
use crate::framework::{ElementId, ElementKind, ElementSet, Framework};
use crate::semantics::{self, ExtensionSet, Semantics, SolveConfig};

/// An argument-only framework with a binary attack relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DungAf {
    arguments: Vec<ElementId>,
    index: BTreeMap<ElementId, usize>,
    edges: BTreeSet<(usize, usize)>,
    attackers_of: Vec<Vec<usize>>,
    targets_of: Vec<Vec<usize>>,
}

impl DungAf {
    pub fn new<I, A, P>(arguments: A, attacks: P) -> Result<Self, BuildError>
    where
        I: Into<String>,
        A: IntoIterator<Item = I>,
        P: IntoIterator<Item = (I, I)>,
    {
        let mut names = Vec::new();
        for raw in arguments {
            let id = ElementId::new(raw)?;
            if names.contains(&id) {
                return Err(BuildError::DuplicateId(id.as_str().to_string()));
            }
            names.push(id);
        }
        names.sort();
        let index: BTreeMap<ElementId, usize> = names
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        let mut edges = BTreeSet::new();
        for (source, target) in attacks {
            let source: String = source.into();
            let target: String = target.into();
            let label = format!("({source},{target})");
            let s = *index
                .get(source.as_str())
                .ok_or_else(|| BuildError::DanglingSource {
                    attack: label.clone(),
                    src: source.clone(),
                })?;
            let t = *index
                .get(target.as_str())
                .ok_or_else(|| BuildError::DanglingTarget {
                    attack: label.clone(),
                    target: target.clone(),
                })?;
            edges.insert((s, t));
        }
        let mut attackers_of = vec![Vec::new(); names.len()];
        let mut targets_of = vec![Vec::new(); names.len()];
        for &(s, t) in &edges {
            attackers_of[t].push(s);
            targets_of[s].push(t);
        }
        Ok(DungAf {
            arguments: names,
            index,
            edges,
            attackers_of,
            targets_of,
        })
    }

    /// Reads a recursive-attack framework whose attacks all target
    /// arguments as a classical framework over the same argument names.
    pub fn from_plain(fw: &Framework) -> Result<Self, SolveError> {
        if !fw.is_plain_af() {
            return Err(SolveError::NotPlainAf);
        }
        let pairs: Vec<(String, String)> = fw
            .attacks()
            .iter()
            .map(|a| {
                (
                    a.source().as_str().to_string(),
                    a.target().id.as_str().to_string(),
                )
            })
            .collect();
        let arguments: Vec<String> = fw
            .arguments()
            .map(|id| id.as_str().to_string())
            .collect();
        Ok(DungAf::new(arguments, pairs).expect("a validated framework projects cleanly"))
    }

    pub fn arguments(&self) -> impl Iterator<Item = &ElementId> {
        self.arguments.iter()
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn attack_pairs(&self) -> impl Iterator<Item = (&ElementId, &ElementId)> + '_ {
        self.edges
            .iter()
            .map(|&(s, t)| (&self.arguments[s], &self.arguments[t]))
    }

    pub fn attack_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub(crate) fn attackers_idx(&self, i: usize) -> &[usize] {
        &self.attackers_of[i]
    }

    pub(crate) fn targets_idx(&self, i: usize) -> &[usize] {
        &self.targets_of[i]
    }

    fn set_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> ElementSet {
        indices
            .into_iter()
            .map(|i| self.arguments[i].clone())
            .collect()
    }

    fn resolve(&self, s: &ElementSet) -> Result<Vec<usize>, SolveError> {
        s.iter()
            .map(|id| {
                self.index
                    .get(id)
                    .copied()
                    .ok_or_else(|| SolveError::UnknownElement(id.as_str().to_string()))
            })
            .collect()
    }
}

/// The defeat graph of a framework, as a classical framework whose
/// arguments are all the original elements — attacks included.
pub fn flatten(fw: &Framework) -> DungAf {
    let names: Vec<ElementId> = fw.element_ids().cloned().collect();
    let index: BTreeMap<ElementId, usize> = names
        .iter()
        .enumerate()
        .map(|(i, id)| (id.clone(), i))
        .collect();
    let edges: BTreeSet<(usize, usize)> = defeat::table(fw)
        .edges
        .iter()
        .map(|e| (index[&e.attacker], index[&e.victim]))
        .collect();
    let mut attackers_of = vec![Vec::new(); names.len()];
    let mut targets_of = vec![Vec::new(); names.len()];
    for &(s, t) in &edges {
        attackers_of[t].push(s);
        targets_of[s].push(t);
    }
    DungAf {
        arguments: names,
        index,
        edges,
        attackers_of,
        targets_of,
    }
}

/// Closes a set of arguments under the attacks they source: the result is
/// the set plus every attack whose source argument is a member.
pub fn lift(fw: &Framework, arguments: &ElementSet) -> Result<ElementSet, SolveError> {
    let mut out = BTreeSet::new();
    for id in arguments.iter() {
        match fw.kind_of(id.as_str()) {
            None => return Err(SolveError::UnknownElement(id.as_str().to_string())),
            Some(ElementKind::Attack) => {
                return Err(SolveError::NotAnArgument(id.as_str().to_string()))
            }
            Some(ElementKind::Argument) => {
                out.insert(id.clone());
            }
        }
    }
    for attack in fw.attacks() {
        if arguments.contains(attack.source().as_str()) {
            out.insert(attack.id().clone());
        }
    }
    Ok(out.into_iter().collect())
}

/// Extension queries on a classical framework.
pub fn d_semantics(
    af: &DungAf,
    which: Semantics,
    config: &SolveConfig,
) -> Result<ExtensionSet, SolveError> {
    match which {
        Semantics::Grounded => Ok(ExtensionSet::new(which, [d_grounded(af)])),
        Semantics::Complete => Ok(ExtensionSet::new(
            which,
            complete_in_sets(af, config.deadline())?,
        )),
        Semantics::Preferred => {
            let completes = complete_in_sets(af, config.deadline())?;
            Ok(ExtensionSet::new(which, maximal_sets(completes)))
        }
        Semantics::Stable => {
            let completes = complete_in_sets(af, config.deadline())?;
            let full: Vec<ElementSet> = completes
                .into_iter()
                .filter(|s| {
                    let members = af.resolve(s).expect("computed extensions resolve");
                    d_range_table(af, &members).into_iter().all(|covered| covered)
                })
                .collect();
            Ok(ExtensionSet::new(which, full))
        }
        Semantics::SemiStable => {
            let completes = complete_in_sets(af, config.deadline())?;
            let ranges: Vec<ElementSet> = completes
                .iter()
                .map(|s| {
                    let members = af.resolve(s).expect("computed extensions resolve");
                    let covered = d_range_table(af, &members);
                    af.set_from_indices(
                        (0..af.argument_count()).filter(|&i| covered[i]),
                    )
                })
                .collect();
            let keep: Vec<ElementSet> = completes
                .iter()
                .enumerate()
                .filter(|&(i, _)| {
                    !ranges.iter().enumerate().any(|(j, other)| {
                        j != i && ranges[i].is_subset(other) && ranges[i] != *other
                    })
                })
                .map(|(_, s)| s.clone())
                .collect();
            Ok(ExtensionSet::new(which, keep))
        }
        Semantics::Ideal => Ok(ExtensionSet::new(which, [d_ideal(af, config)?])),
        Semantics::Admissible | Semantics::ConflictFree => d_enumerate(af, config, which),
    }
}

/// The grounded extension: iterate accepting arguments with all attackers
/// rejected and rejecting arguments with an accepted attacker.
pub fn d_grounded(af: &DungAf) -> ElementSet {
    let n = af.argument_count();
    let mut accepted = vec![false; n];
    let mut rejected = vec![false; n];
    loop {
        let mut changed = false;
        for x in 0..n {
            if !accepted[x] && af.attackers_idx(x).iter().all(|&b| rejected[b]) {
                accepted[x] = true;
                changed = true;
            }
        }
        for x in 0..n {
            if !rejected[x] && af.attackers_idx(x).iter().any(|&b| accepted[b]) {
                rejected[x] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    af.set_from_indices((0..n).filter(|&x| accepted[x]))
}

/// Checks that extensions of a plain framework and classical extensions
/// of its argument-level reading are the same sets after [`lift`].
///
/// Defined for the six extension semantics; the enumeration queries do
/// not transfer this way (an attack can be admissible on its own, without
/// its source argument).
pub fn check_af_correspondence(
    fw: &Framework,
    which: Semantics,
    config: &SolveConfig,
) -> Result<bool, SolveError> {
    if !fw.is_plain_af() {
        return Err(SolveError::NotPlainAf);
    }
    if !Semantics::EXTENSION.contains(&which) {
        return Err(SolveError::PreconditionViolated(format!(
            "the lift correspondence covers extension semantics only, not `{which}`"
        )));
    }
    let mixed = semantics::extensions(fw, which, config)?;
    let af = DungAf::from_plain(fw)?;
    let classical = d_semantics(&af, which, config)?;
    let lifted: Result<Vec<ElementSet>, SolveError> = classical
        .extensions()
        .iter()
        .map(|u| lift(fw, u))
        .collect();
    Ok(mixed == ExtensionSet::new(which, lifted?))
}

/// Checks that extensions computed over the defeat relation and classical
/// extensions of the flattened defeat graph are literally the same sets.
pub fn check_flatten_correspondence(
    fw: &Framework,
    which: Semantics,
    config: &SolveConfig,
) -> Result<bool, SolveError> {
    let direct = semantics::extensions(fw, which, config)?;
    let flattened = d_semantics(&flatten(fw), which, config)?;
    Ok(direct == flattened)
}

/// Labels used while searching for complete labellings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Lab {
    Unknown,
    In,
    Out,
    Undec,
}

/// Enumerates the in-sets of all complete labellings by branching on the
/// first unlabelled argument and propagating forced labels.
fn complete_in_sets(
    af: &DungAf,
    deadline: Option<(Instant, Duration)>,
) -> Result<Vec<ElementSet>, SolveError> {
    let mut acc = Vec::new();
    let mut state = vec![Lab::Unknown; af.argument_count()];
    if propagate(af, &mut state).is_ok() {
        search(af, state, deadline, &mut acc)?;
    }
    Ok(acc)
}

fn search(
    af: &DungAf,
    state: Vec<Lab>,
    deadline: Option<(Instant, Duration)>,
    acc: &mut Vec<ElementSet>,
) -> Result<(), SolveError> {
    if let Some((at, budget)) = deadline {
        if Instant::now() > at {
            return Err(SolveError::TimedOut(budget));
        }
    }
    match state.iter().position(|&l| l == Lab::Unknown) {
        None => {
            if verify_complete(af, &state) {
                acc.push(af.set_from_indices(
                    (0..state.len()).filter(|&i| state[i] == Lab::In),
                ));
            }
            Ok(())
        }
        Some(x) => {
            for lab in [Lab::In, Lab::Out, Lab::Undec] {
                let mut next = state.clone();
                next[x] = lab;
                if propagate(af, &mut next).is_ok() {
                    search(af, next, deadline, acc)?;
                }
            }
            Ok(())
        }
    }
}

/// Fills in labels forced by the complete-labelling rules; `Err` means the
/// partial labelling can no longer be completed.
fn propagate(af: &DungAf, state: &mut [Lab]) -> Result<(), ()> {
    loop {
        let mut changed = false;
        for x in 0..state.len() {
            let mut any_in = false;
            let mut any_undec = false;
            let mut any_unknown = false;
            for &b in af.attackers_idx(x) {
                match state[b] {
                    Lab::In => any_in = true,
                    Lab::Undec => any_undec = true,
                    Lab::Unknown => any_unknown = true,
                    Lab::Out => {}
                }
            }
            let all_out = !any_in && !any_undec && !any_unknown;
            match state[x] {
                Lab::Unknown => {
                    if any_in {
                        state[x] = Lab::Out;
                        changed = true;
                    } else if all_out {
                        state[x] = Lab::In;
                        changed = true;
                    }
                }
                Lab::In => {
                    // Every attacker must end up rejected.
                    if any_in || any_undec {
                        return Err(());
                    }
                    if any_unknown {
                        for &b in af.attackers_idx(x) {
                            if state[b] == Lab::Unknown {
                                state[b] = Lab::Out;
                                changed = true;
                            }
                        }
                    }
                }
                Lab::Out => {
                    // Rejection needs an accepted attacker; if none can
                    // appear any more, this branch is dead.
                    if !any_in && !any_unknown {
                        return Err(());
                    }
                }
                Lab::Undec => {
                    if any_in || all_out {
                        return Err(());
                    }
                }
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// Full re-check of the complete-labelling conditions at a leaf.
fn verify_complete(af: &DungAf, state: &[Lab]) -> bool {
    (0..state.len()).all(|x| {
        let attackers = af.attackers_idx(x);
        let any_in = attackers.iter().any(|&b| state[b] == Lab::In);
        let all_out = attackers.iter().all(|&b| state[b] == Lab::Out);
        let expected = if all_out {
            Lab::In
        } else if any_in {
            Lab::Out
        } else {
            Lab::Undec
        };
        state[x] == expected
    })
}

/// Membership table of `members` plus everything they attack.
fn d_range_table(af: &DungAf, members: &[usize]) -> Vec<bool> {
    let mut covered = vec![false; af.argument_count()];
    for &i in members {
        covered[i] = true;
        for &t in af.targets_idx(i) {
            covered[t] = true;
        }
    }
    covered
}

fn maximal_sets(sets: Vec<ElementSet>) -> Vec<ElementSet> {
    sets.iter()
        .filter(|s| {
            !sets
                .iter()
                .any(|other| *s != other && s.is_subset(other))
        })
        .cloned()
        .collect()
}

/// The largest admissible set contained in every preferred extension,
/// found by pruning their intersection until it defends itself.
fn d_ideal(af: &DungAf, config: &SolveConfig) -> Result<ElementSet, SolveError> {
    let preferred = maximal_sets(complete_in_sets(af, config.deadline())?);
    let n = af.argument_count();
    let mut candidate = vec![true; n];
    for ext in &preferred {
        let members = af.resolve(ext).expect("computed extensions resolve");
        let mut inside = vec![false; n];
        for &i in &members {
            inside[i] = true;
        }
        for x in 0..n {
            candidate[x] &= inside[x];
        }
    }
    loop {
        let members: Vec<usize> = (0..n).filter(|&x| candidate[x]).collect();
        let mut attacked = vec![false; n];
        for &i in &members {
            for &t in af.targets_idx(i) {
                attacked[t] = true;
            }
        }
        let keep: Vec<bool> = (0..n)
            .map(|x| {
                candidate[x]
                    && !attacked[x]
                    && af.targets_idx(x).iter().all(|&t| !candidate[t])
                    && af.attackers_idx(x).iter().all(|&b| attacked[b])
            })
            .collect();
        if keep == candidate {
            break;
        }
        candidate = keep;
    }
    Ok(af.set_from_indices((0..n).filter(|&x| candidate[x])))
}

fn d_enumerate(
    af: &DungAf,
    config: &SolveConfig,
    which: Semantics,
) -> Result<ExtensionSet, SolveError> {
    let n = af.argument_count();
    let bound = config.effective_bound();
    if n > bound {
        return Err(SolveError::TooLargeToEnumerate { elements: n, bound });
    }
    let targets_mask: Vec<u64> = (0..n)
        .map(|i| af.targets_idx(i).iter().fold(0u64, |m, &t| m | 1 << t))
        .collect();
    let attackers_mask: Vec<u64> = (0..n)
        .map(|i| af.attackers_idx(i).iter().fold(0u64, |m, &b| m | 1 << b))
        .collect();
    let mut found = Vec::new();
    for subset in 0u64..1u64 << n {
        let mut attacked = 0u64;
        let mut members = subset;
        while members != 0 {
            let i = members.trailing_zeros() as usize;
            members &= members - 1;
            attacked |= targets_mask[i];
        }
        if attacked & subset != 0 {
            continue;
        }
        if which == Semantics::Admissible {
            let mut undefended = false;
            let mut members = subset;
            while members != 0 {
                let i = members.trailing_zeros() as usize;
                members &= members - 1;
                if attackers_mask[i] & !attacked != 0 {
                    undefended = true;
                    break;
                }
            }
            if undefended {
                continue;
            }
        }
        found.push(af.set_from_indices((0..n).filter(|&i| subset & 1 << i != 0)));
    }
    Ok(ExtensionSet::new(which, found))
}
