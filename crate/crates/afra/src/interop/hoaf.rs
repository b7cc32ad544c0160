//! Frameworks that reify attacks through companion arguments.
//!
//! In this model every core argument `a` comes with a derived companion
//! `not_a`, and every attack is itself an element wired up by plain
//! links: the attack's source is reached through the source's companion
//! (`not_src -> attack`), and the attack points at its victim directly
//! (`attack -> victim`, where the victim is a core argument or another
//! attack element). Acceptance is then ordinary argument-level acceptance
//! over all three kinds of element, which is what [`hoaf_semantics`]
//! computes. [`hoaf_to_afra`] and [`afra_to_hoaf`] translate to and from
//! the recursive-attack model; the round trip is the identity.

use std::collections::{BTreeMap, BTreeSet};

use crate::dung::{self, DungAf};
use crate::error::SolveError;
use crate::framework::{ElementId, Framework};
use crate::semantics::{ExtensionSet, Semantics, SolveConfig};

/// A higher-order framework: core arguments, derived companions, attack
/// elements, and the links wiring them together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hoaf {
    core: Vec<ElementId>,
    companions: BTreeMap<ElementId, ElementId>,
    attack_elems: Vec<ElementId>,
    links: BTreeSet<(ElementId, ElementId)>,
}

/// Deterministic companion names: `not_<core>`, suffixed `_2`, `_3`, …
/// when the plain name is already taken.
fn derive_companions(
    core: &[ElementId],
    taken: &BTreeSet<ElementId>,
) -> BTreeMap<ElementId, ElementId> {
    let mut assigned: BTreeSet<ElementId> = taken.clone();
    let mut out = BTreeMap::new();
    for a in core {
        let base = format!("not_{a}");
        let mut candidate = ElementId::new(base.clone()).expect("derived from a valid name");
        let mut k = 2usize;
        while assigned.contains(&candidate) {
            candidate = ElementId::new(format!("{base}_{k}")).expect("derived from a valid name");
            k += 1;
        }
        assigned.insert(candidate.clone());
        out.insert(a.clone(), candidate);
    }
    out
}

impl Hoaf {
    /// Builds a framework from core arguments, attack elements, and
    /// links. Companions are derived, not declared: a link mentioning a
    /// core argument's companion must use the derived name.
    pub fn new<I>(
        core: impl IntoIterator<Item = I>,
        attack_elems: impl IntoIterator<Item = I>,
        links: impl IntoIterator<Item = (I, I)>,
    ) -> Result<Self, SolveError>
    where
        I: Into<String>,
    {
        let invalid = |message: String| SolveError::InvalidHoaf(message);
        let mut core_ids = Vec::new();
        for raw in core {
            let id = ElementId::new(raw).map_err(|e| invalid(e.to_string()))?;
            core_ids.push(id);
        }
        core_ids.sort();
        let mut attack_ids = Vec::new();
        for raw in attack_elems {
            let id = ElementId::new(raw).map_err(|e| invalid(e.to_string()))?;
            attack_ids.push(id);
        }
        attack_ids.sort();
        let mut declared: BTreeSet<ElementId> = BTreeSet::new();
        for id in core_ids.iter().chain(attack_ids.iter()) {
            if !declared.insert(id.clone()) {
                return Err(invalid(format!("duplicate element `{id}`")));
            }
        }

        let companions = derive_companions(&core_ids, &declared);
        let companion_set: BTreeSet<&ElementId> = companions.values().collect();
        let is_core = |id: &ElementId| core_ids.binary_search(id).is_ok();
        let is_attack = |id: &ElementId| attack_ids.binary_search(id).is_ok();

        let mut link_set = BTreeSet::new();
        let mut companion_pair_seen: BTreeSet<ElementId> = BTreeSet::new();
        let mut predecessors: BTreeMap<ElementId, usize> =
            attack_ids.iter().map(|h| (h.clone(), 0)).collect();
        let mut successors: BTreeMap<ElementId, usize> =
            attack_ids.iter().map(|h| (h.clone(), 0)).collect();
        for (u, v) in links {
            let u = ElementId::new(u).map_err(|e| invalid(e.to_string()))?;
            let v = ElementId::new(v).map_err(|e| invalid(e.to_string()))?;
            if !link_set.insert((u.clone(), v.clone())) {
                continue; // ignore a repeated link
            }
            if is_core(&u) {
                if companions.get(&u) != Some(&v) {
                    return Err(invalid(format!(
                        "core argument `{u}` may only be linked to its own \
                         companion, not to `{v}`"
                    )));
                }
                companion_pair_seen.insert(u.clone());
            } else if companion_set.contains(&u) {
                if !is_attack(&v) {
                    return Err(invalid(format!(
                        "companion `{u}` may only be linked to an attack \
                         element, not to `{v}`"
                    )));
                }
                *predecessors.get_mut(&v).expect("checked attack element") += 1;
            } else if is_attack(&u) {
                if !is_core(&v) && !is_attack(&v) {
                    return Err(invalid(format!(
                        "attack element `{u}` may only point at a core \
                         argument or another attack element, not at `{v}`"
                    )));
                }
                *successors.get_mut(&u).expect("checked attack element") += 1;
            } else {
                return Err(invalid(format!("link mentions unknown element `{u}`")));
            }
        }

        for a in &core_ids {
            if !companion_pair_seen.contains(a) {
                let companion = &companions[a];
                return Err(invalid(format!(
                    "missing companion link ({a},{companion})"
                )));
            }
        }
        for h in &attack_ids {
            let preds = predecessors[h];
            if preds != 1 {
                return Err(invalid(format!(
                    "attack element `{h}` needs exactly one companion \
                     predecessor, found {preds}"
                )));
            }
            let succs = successors[h];
            if succs != 1 {
                return Err(invalid(format!(
                    "attack element `{h}` needs exactly one successor, \
                     found {succs}"
                )));
            }
        }

        Ok(Hoaf {
            core: core_ids,
            companions,
            attack_elems: attack_ids,
            links: link_set,
        })
    }

    pub fn core_arguments(&self) -> impl Iterator<Item = &ElementId> {
        self.core.iter()
    }

    pub fn companion_of(&self, core: &str) -> Option<&ElementId> {
        self.companions.get(core)
    }

    pub fn attack_elements(&self) -> impl Iterator<Item = &ElementId> {
        self.attack_elems.iter()
    }

    pub fn links(&self) -> impl Iterator<Item = &(ElementId, ElementId)> {
        self.links.iter()
    }

    pub fn element_count(&self) -> usize {
        self.core.len() * 2 + self.attack_elems.len()
    }

    /// The framework read as a classical graph over all three kinds of
    /// element, with the links as attacks.
    fn as_dung(&self) -> DungAf {
        let names: Vec<String> = self
            .core
            .iter()
            .chain(self.companions.values())
            .chain(self.attack_elems.iter())
            .map(|id| id.as_str().to_string())
            .collect();
        let edges: Vec<(String, String)> = self
            .links
            .iter()
            .map(|(u, v)| (u.as_str().to_string(), v.as_str().to_string()))
            .collect();
        DungAf::new(names, edges).expect("a validated framework projects cleanly")
    }
}

/// Extension queries: acceptance runs on the full element graph, so
/// extensions mix core arguments, companions, and attack elements.
pub fn hoaf_semantics(hoaf: &Hoaf, which: Semantics) -> Result<ExtensionSet, SolveError> {
    dung::d_semantics(&hoaf.as_dung(), which, &SolveConfig::default())
}

/// Reads the reified attacks back as recursive attacks: each attack
/// element becomes an attack from the core argument behind its companion
/// predecessor to its successor.
pub fn hoaf_to_afra(hoaf: &Hoaf) -> Result<Framework, SolveError> {
    let mut source_core: BTreeMap<&ElementId, &ElementId> = BTreeMap::new();
    for (core, companion) in &hoaf.companions {
        source_core.insert(companion, core);
    }
    let mut triples = Vec::new();
    for h in &hoaf.attack_elems {
        let mut source = None;
        let mut target = None;
        for (u, v) in &hoaf.links {
            if v == h {
                if let Some(core) = source_core.get(u) {
                    source = Some((*core).clone());
                }
            }
            if u == h {
                target = Some(v.clone());
            }
        }
        let source = source.expect("validated: exactly one companion predecessor");
        let target = target.expect("validated: exactly one successor");
        triples.push((
            h.as_str().to_string(),
            source.as_str().to_string(),
            target.as_str().to_string(),
        ));
    }
    let arguments: Vec<String> = hoaf.core.iter().map(|a| a.as_str().to_string()).collect();
    Framework::new(arguments, triples)
        .map_err(|e| SolveError::InvalidHoaf(format!("attack elements do not form a framework: {e}")))
}

/// Reifies every attack of a framework as an attack element wired through
/// companions. [`hoaf_to_afra`] inverts this exactly.
pub fn afra_to_hoaf(fw: &Framework) -> Hoaf {
    let taken: BTreeSet<ElementId> = fw.element_ids().cloned().collect();
    let core: Vec<ElementId> = fw.arguments().cloned().collect();
    let companions = derive_companions(&core, &taken);
    let mut links: Vec<(String, String)> = Vec::new();
    for a in &core {
        links.push((a.as_str().to_string(), companions[a].as_str().to_string()));
    }
    for attack in fw.attacks() {
        links.push((
            companions[attack.source()].as_str().to_string(),
            attack.id().as_str().to_string(),
        ));
        links.push((
            attack.id().as_str().to_string(),
            attack.target().id.as_str().to_string(),
        ));
    }
    let core_names: Vec<String> = core.iter().map(|a| a.as_str().to_string()).collect();
    let attack_names: Vec<String> = fw
        .attacks()
        .iter()
        .map(|a| a.id().as_str().to_string())
        .collect();
    Hoaf::new(core_names, attack_names, links).expect("a validated framework reifies cleanly")
}
