//! Frameworks whose attacks-on-attacks target unnamed attack pairs.
//!
//! In this model the second-level relation points at `(source, target)`
//! pairs of the base attack relation rather than at named attack
//! elements, and whether an attack succeeds as a defeat depends on the
//! set under evaluation. Construction enforces the model's symmetry
//! constraint on second-level attacks against mutual attack pairs. The
//! semantics here follow the set-sensitive defeat notion literally;
//! [`eaf_to_afra`] re-expresses a framework with named attack elements
//! instead, which in general changes the extensions (see the test suite
//! for a worked example).

use std::collections::BTreeSet;

use crate::error::SolveError;
use crate::framework::{ElementId, ElementSet, Framework};
use crate::semantics::{ExtensionSet, Semantics};

/// Largest argument count accepted by the subset-enumerating queries in
/// [`eaf_semantics`]; the set-sensitive defeat checks make each subset
/// expensive.
pub const EAF_ENUM_BOUND: usize = 16;

/// An extended framework: arguments, a binary attack relation, and
/// attacks on attack pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eaf {
    arguments: Vec<ElementId>,
    attacks: BTreeSet<(ElementId, ElementId)>,
    attack_attacks: BTreeSet<(ElementId, (ElementId, ElementId))>,
}

impl Eaf {
    pub fn new<I>(
        arguments: impl IntoIterator<Item = I>,
        attacks: impl IntoIterator<Item = (I, I)>,
        attack_attacks: impl IntoIterator<Item = (I, (I, I))>,
    ) -> Result<Self, SolveError>
    where
        I: Into<String>,
    {
        let invalid = |message: String| SolveError::InvalidEaf(message);
        let mut args = Vec::new();
        for raw in arguments {
            let id = ElementId::new(raw).map_err(|e| invalid(e.to_string()))?;
            if args.contains(&id) {
                return Err(invalid(format!("duplicate argument `{id}`")));
            }
            args.push(id);
        }
        args.sort();
        let known = |name: &ElementId| args.binary_search(name).is_ok();

        let mut r = BTreeSet::new();
        for (a, b) in attacks {
            let a = ElementId::new(a).map_err(|e| invalid(e.to_string()))?;
            let b = ElementId::new(b).map_err(|e| invalid(e.to_string()))?;
            for end in [&a, &b] {
                if !known(end) {
                    return Err(invalid(format!(
                        "attack ({a},{b}) mentions undeclared argument `{end}`"
                    )));
                }
            }
            r.insert((a, b));
        }

        let mut d = BTreeSet::new();
        for (x, (a, b)) in attack_attacks {
            let x = ElementId::new(x).map_err(|e| invalid(e.to_string()))?;
            let a = ElementId::new(a).map_err(|e| invalid(e.to_string()))?;
            let b = ElementId::new(b).map_err(|e| invalid(e.to_string()))?;
            if !known(&x) {
                return Err(invalid(format!(
                    "attack on attack ({x},({a},{b})) mentions undeclared argument `{x}`"
                )));
            }
            if !r.contains(&(a.clone(), b.clone())) {
                return Err(invalid(format!(
                    "attack on attack ({x},({a},{b})) targets a pair outside the attack relation"
                )));
            }
            d.insert((x, (a, b)));
        }

        // Attacks against both orientations of a mutual pair must come
        // from mutually attacking arguments.
        for (x, (a, b)) in &d {
            for (y, (c, e)) in &d {
                if a == e && b == c {
                    let forward = r.contains(&(x.clone(), y.clone()));
                    let backward = r.contains(&(y.clone(), x.clone()));
                    if !(forward && backward) {
                        return Err(invalid(format!(
                            "attacks on ({a},{b}) and ({b},{a}) require mutual attacks \
                             between `{x}` and `{y}`"
                        )));
                    }
                }
            }
        }

        Ok(Eaf {
            arguments: args,
            attacks: r,
            attack_attacks: d,
        })
    }

    pub fn arguments(&self) -> impl Iterator<Item = &ElementId> {
        self.arguments.iter()
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn attacks(&self) -> impl Iterator<Item = &(ElementId, ElementId)> {
        self.attacks.iter()
    }

    pub fn attack_attacks(&self) -> impl Iterator<Item = &(ElementId, (ElementId, ElementId))> {
        self.attack_attacks.iter()
    }

    fn contains(&self, name: &str) -> bool {
        self.arguments.iter().any(|a| a.as_str() == name)
    }

    fn check_member(&self, name: &str) -> Result<(), SolveError> {
        if self.contains(name) {
            Ok(())
        } else {
            Err(SolveError::UnknownElement(name.to_string()))
        }
    }

    fn check_set(&self, s: &ElementSet) -> Result<(), SolveError> {
        for id in s.iter() {
            self.check_member(id.as_str())?;
        }
        Ok(())
    }

    /// The attack `(attacker, victim)` succeeds unless some member of `s`
    /// attacks that pair.
    fn defeat_s(&self, attacker: &str, victim: &str, s: &ElementSet) -> bool {
        let pair = (
            ElementId::new(attacker).expect("validated member name"),
            ElementId::new(victim).expect("validated member name"),
        );
        self.attacks.contains(&pair)
            && !self
                .attack_attacks
                .iter()
                .any(|(y, p)| *p == pair && s.contains(y.as_str()))
    }

    /// Set-sourced defeats that survive the mutual-support requirement:
    /// a pair is kept only while every argument attacking it is itself the
    /// victim of a kept pair.
    fn reinstatement_pairs(&self, s: &ElementSet) -> BTreeSet<(ElementId, ElementId)> {
        let mut kept: BTreeSet<(ElementId, ElementId)> = self
            .attacks
            .iter()
            .filter(|(x, y)| s.contains(x.as_str()) && self.defeat_s(x.as_str(), y.as_str(), s))
            .cloned()
            .collect();
        loop {
            let next: BTreeSet<(ElementId, ElementId)> = kept
                .iter()
                .filter(|pair| {
                    self.attack_attacks
                        .iter()
                        .filter(|(_, p)| p == *pair)
                        .all(|(y, _)| kept.iter().any(|(_, victim)| victim == y))
                })
                .cloned()
                .collect();
            if next == kept {
                return kept;
            }
            kept = next;
        }
    }

    /// Every attack on `victim` that succeeds against `s` is answered by
    /// a member defeat with mutual support behind it.
    fn acceptable(&self, victim: &str, s: &ElementSet) -> bool {
        let reinstated = self.reinstatement_pairs(s);
        self.attacks
            .iter()
            .filter(|(b, a)| a.as_str() == victim && self.defeat_s(b.as_str(), a.as_str(), s))
            .all(|(b, _)| {
                reinstated
                    .iter()
                    .any(|(_, beaten)| beaten == b)
            })
    }

    fn is_conflict_free(&self, s: &ElementSet) -> bool {
        for a in s.iter() {
            for b in s.iter() {
                let pair = (a.clone(), b.clone());
                if !self.attacks.contains(&pair) {
                    continue;
                }
                if self.attacks.contains(&(b.clone(), a.clone())) {
                    return false;
                }
                let countered = self
                    .attack_attacks
                    .iter()
                    .any(|(c, p)| *p == pair && s.contains(c.as_str()));
                if !countered {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether the attack `(attacker, victim)` succeeds as a defeat when `s`
/// is the set under evaluation.
pub fn eaf_defeat_s(
    eaf: &Eaf,
    attacker: &str,
    victim: &str,
    s: &ElementSet,
) -> Result<bool, SolveError> {
    eaf.check_member(attacker)?;
    eaf.check_member(victim)?;
    eaf.check_set(s)?;
    Ok(eaf.defeat_s(attacker, victim, s))
}

/// Conflict-freeness in the set-sensitive model: members may attack each
/// other only one-way and only when the set itself cancels the attack.
pub fn eaf_is_conflict_free(eaf: &Eaf, s: &ElementSet) -> Result<bool, SolveError> {
    eaf.check_set(s)?;
    Ok(eaf.is_conflict_free(s))
}

/// Whether the defeat of `victim` by `attacker` is backed by mutually
/// supporting set-sourced defeats. Only defined when that defeat holds in
/// the first place.
pub fn eaf_reinstatement_exists(
    eaf: &Eaf,
    attacker: &str,
    victim: &str,
    s: &ElementSet,
) -> Result<bool, SolveError> {
    eaf.check_member(attacker)?;
    eaf.check_member(victim)?;
    eaf.check_set(s)?;
    if !s.contains(attacker) || !eaf.defeat_s(attacker, victim, s) {
        return Err(SolveError::PreconditionViolated(format!(
            "reinstatement is defined only for set-sourced defeats that hold, \
             and ({attacker},{victim}) is not one"
        )));
    }
    let attacker = ElementId::new(attacker).expect("validated member name");
    let victim = ElementId::new(victim).expect("validated member name");
    Ok(eaf.reinstatement_pairs(s).contains(&(attacker, victim)))
}

/// Extension queries in the set-sensitive model. Supports the admissible,
/// complete, preferred, stable, and grounded queries; grounded iterates
/// the acceptance operator from the empty set and needs no enumeration
/// bound, the others sweep all subsets of arguments.
pub fn eaf_semantics(eaf: &Eaf, which: Semantics) -> Result<ExtensionSet, SolveError> {
    match which {
        Semantics::Grounded => Ok(ExtensionSet::new(which, [eaf_grounded(eaf)])),
        Semantics::Admissible
        | Semantics::Complete
        | Semantics::Preferred
        | Semantics::Stable => eaf_enumerate(eaf, which),
        Semantics::SemiStable | Semantics::Ideal | Semantics::ConflictFree => {
            Err(SolveError::PreconditionViolated(format!(
                "the set-sensitive model supports admissible, complete, preferred, \
                 stable, and grounded queries, not `{which}`"
            )))
        }
    }
}

fn eaf_grounded(eaf: &Eaf) -> ElementSet {
    // The acceptance operator is not monotone here, so iterate from the
    // empty set, union the iterates, and stop on a fixpoint or a repeat.
    let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
    let mut current = ElementSet::new();
    let mut union = ElementSet::new();
    loop {
        if !seen.insert(current.clone()) {
            return union;
        }
        let next: ElementSet = eaf
            .arguments
            .iter()
            .filter(|a| eaf.acceptable(a.as_str(), &current))
            .cloned()
            .collect();
        if next == current {
            return union;
        }
        union = union.union(&next);
        current = next;
    }
}

fn eaf_enumerate(eaf: &Eaf, which: Semantics) -> Result<ExtensionSet, SolveError> {
    let n = eaf.argument_count();
    if n > EAF_ENUM_BOUND {
        return Err(SolveError::TooLargeToEnumerate {
            elements: n,
            bound: EAF_ENUM_BOUND,
        });
    }
    let subset_of = |mask: u64| -> ElementSet {
        (0..n)
            .filter(|&i| mask & 1 << i != 0)
            .map(|i| eaf.arguments[i].clone())
            .collect()
    };
    let mut admissible_masks = Vec::new();
    let mut found = Vec::new();
    for mask in 0u64..1u64 << n {
        let s = subset_of(mask);
        if !eaf.is_conflict_free(&s) {
            continue;
        }
        let acceptable_all = |set: &ElementSet| {
            eaf.arguments
                .iter()
                .filter(|a| eaf.acceptable(a.as_str(), set))
                .cloned()
                .collect::<ElementSet>()
        };
        match which {
            Semantics::Admissible | Semantics::Preferred => {
                let members_ok = s.iter().all(|a| eaf.acceptable(a.as_str(), &s));
                if members_ok {
                    admissible_masks.push(mask);
                    found.push(s);
                }
            }
            Semantics::Complete => {
                // Complete here means conflict-free and closed under
                // acceptance; members themselves need not be acceptable.
                if acceptable_all(&s).is_subset(&s) {
                    found.push(s);
                }
            }
            Semantics::Stable => {
                let all_outsiders_defeated = eaf.arguments.iter().all(|b| {
                    s.contains(b.as_str())
                        || s.iter().any(|a| eaf.defeat_s(a.as_str(), b.as_str(), &s))
                });
                if all_outsiders_defeated {
                    found.push(s);
                }
            }
            _ => unreachable!("filtered by eaf_semantics"),
        }
    }
    if which == Semantics::Preferred {
        let keep: Vec<ElementSet> = found
            .iter()
            .filter(|s| {
                !found
                    .iter()
                    .any(|other| *s != other && s.is_subset(other))
            })
            .cloned()
            .collect();
        return Ok(ExtensionSet::new(which, keep));
    }
    Ok(ExtensionSet::new(which, found))
}

/// Re-expresses an extended framework with named attack elements: every
/// base pair becomes an attack on its target argument, and every
/// second-level attack becomes an attack on the corresponding attack
/// element.
pub fn eaf_to_afra(eaf: &Eaf) -> Result<Framework, SolveError> {
    let mut taken: BTreeSet<String> = eaf
        .arguments
        .iter()
        .map(|a| a.as_str().to_string())
        .collect();
    let mut fresh = |base: String| -> String {
        if !taken.contains(&base) {
            taken.insert(base.clone());
            return base;
        }
        let mut k = 2usize;
        loop {
            let candidate = format!("{base}_{k}");
            if !taken.contains(&candidate) {
                taken.insert(candidate.clone());
                return candidate;
            }
            k += 1;
        }
    };
    let mut triples: Vec<(String, String, String)> = Vec::new();
    let mut pair_names: std::collections::BTreeMap<(ElementId, ElementId), String> =
        std::collections::BTreeMap::new();
    for (a, b) in &eaf.attacks {
        let name = fresh(format!("att_{a}_{b}"));
        pair_names.insert((a.clone(), b.clone()), name.clone());
        triples.push((name, a.as_str().to_string(), b.as_str().to_string()));
    }
    for (x, pair) in &eaf.attack_attacks {
        let target = pair_names[pair].clone();
        let name = fresh(format!("att_{x}_{target}"));
        triples.push((name, x.as_str().to_string(), target));
    }
    let arguments: Vec<String> = eaf
        .arguments
        .iter()
        .map(|a| a.as_str().to_string())
        .collect();
    Framework::new(arguments, triples)
        .map_err(|e| SolveError::InvalidEaf(format!("translation failed: {e}")))
}
