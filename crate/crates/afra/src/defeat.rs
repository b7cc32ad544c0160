//! The defeat relation induced by attacks.
//!
//! An attack *directly* defeats the element it targets, and *indirectly*
//! defeats every attack sourced at the argument it targets. Only attacks
//! defeat anything; arguments never do, which is why argument-only sets can
//! never be in conflict.

use crate::error::SolveError;
use crate::framework::{ElementId, Framework};

/// How an attack defeats its victim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DefeatMode {
    /// The attack targets the victim itself.
    Direct,
    /// The attack targets the source argument of the victim (an attack).
    Indirect,
}

/// One edge of the materialized defeat relation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefeatEdge {
    pub attacker: ElementId,
    pub victim: ElementId,
    pub mode: DefeatMode,
}

/// Adjacency view of the defeat relation, cached on the framework.
#[derive(Debug)]
pub(crate) struct DefeatTable {
    /// For every element index: attack indices that defeat it, ascending.
    pub(crate) defeaters_of: Vec<Vec<usize>>,
    /// For every element index: element indices it defeats, ascending.
    /// Empty for arguments.
    pub(crate) defeats_of: Vec<Vec<usize>>,
    /// All edges, sorted by attacker then victim.
    pub(crate) edges: Vec<DefeatEdge>,
}

pub(crate) fn table(fw: &Framework) -> &DefeatTable {
    fw.defeat_cache.get_or_init(|| {
        let n = fw.element_count();
        let mut defeaters_of = vec![Vec::new(); n];
        let mut defeats_of = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for attacker in 0..n {
            let Some((_, target)) = fw.edge(attacker) else {
                continue;
            };
            let mut victims = vec![(target, DefeatMode::Direct)];
            // Indirect defeat: the target is an argument that sources other
            // attacks. (When the target is an attack there is nothing
            // sourced at it, since sources are always arguments.)
            if !fw.is_attack_idx(target) {
                for victim in 0..n {
                    if fw.edge(victim).is_some_and(|(source, _)| source == target) {
                        victims.push((victim, DefeatMode::Indirect));
                    }
                }
            }
            for (victim, mode) in victims {
                defeaters_of[victim].push(attacker);
                defeats_of[attacker].push(victim);
                edges.push(DefeatEdge {
                    attacker: fw.id_at(attacker).clone(),
                    victim: fw.id_at(victim).clone(),
                    mode,
                });
            }
        }
        for list in defeaters_of.iter_mut().chain(defeats_of.iter_mut()) {
            list.sort_unstable();
        }
        edges.sort();
        DefeatTable {
            defeaters_of,
            defeats_of,
            edges,
        }
    })
}

fn resolve(fw: &Framework, name: &str) -> Result<usize, SolveError> {
    fw.idx_of(name)
        .ok_or_else(|| SolveError::UnknownElement(name.to_string()))
}

/// True when `attack` is an attack whose target is `victim`.
pub fn directly_defeats(fw: &Framework, attack: &str, victim: &str) -> Result<bool, SolveError> {
    let a = resolve(fw, attack)?;
    let v = resolve(fw, victim)?;
    Ok(fw.edge(a).is_some_and(|(_, target)| target == v))
}

/// True when `attack` targets the source argument of the attack `victim`.
pub fn indirectly_defeats(fw: &Framework, attack: &str, victim: &str) -> Result<bool, SolveError> {
    let a = resolve(fw, attack)?;
    let v = resolve(fw, victim)?;
    let Some((_, target)) = fw.edge(a) else {
        return Ok(false);
    };
    Ok(fw.edge(v).is_some_and(|(source, _)| source == target))
}

/// Direct or indirect defeat.
pub fn defeats(fw: &Framework, attack: &str, victim: &str) -> Result<bool, SolveError> {
    Ok(directly_defeats(fw, attack, victim)? || indirectly_defeats(fw, attack, victim)?)
}

/// The whole defeat relation in canonical order.
///
/// Computed once per framework and cached; later calls return the same
/// slice.
pub fn defeat_relation(fw: &Framework) -> &[DefeatEdge] {
    &table(fw).edges
}
