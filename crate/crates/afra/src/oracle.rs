//! Brute-force reference solver, kept independent of the main solving
//! path.
//!
//! Every answer here is recomputed from first principles: the defeat
//! pairs are re-derived pairwise from the raw attack structure (without
//! the cached table in [`crate::defeat`]), every subset of elements is
//! tried explicitly, and each semantics is transcribed literally from its
//! definition. That makes this module slow and small — and useful as a
//! cross-check for the optimised path, which [`cross_check`] automates.

use crate::dung::DungAf;
use crate::error::SolveError;
use crate::framework::{ElementSet, Framework};
use crate::semantics::{self, ExtensionSet, Semantics, SolveConfig};

/// Largest element count the reference solver accepts; beyond this the
/// full subset sweep stops being practical.
pub const ORACLE_BOUND: usize = 20;

/// Outcome of one reference-versus-solver comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub semantics: Semantics,
    pub oracle_result: ExtensionSet,
    pub solver_result: ExtensionSet,
    pub agree: bool,
}

/// A finite universe with per-element hit masks: `hits[i]` are the
/// elements `i` defeats (or attacks), `hitters[i]` the elements defeating
/// it. Both the recursive-attack and the classical case reduce to this.
struct Space {
    n: usize,
    hits: Vec<u64>,
    hitters: Vec<u64>,
}

impl Space {
    fn universe(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn hit_by(&self, s: u64) -> u64 {
        let mut acc = 0u64;
        let mut members = s;
        while members != 0 {
            let i = members.trailing_zeros() as usize;
            members &= members - 1;
            acc |= self.hits[i];
        }
        acc
    }

    fn conflict_free(&self, s: u64) -> bool {
        self.hit_by(s) & s == 0
    }

    /// Mask of every element all of whose hitters are hit by `s`.
    fn acceptable_wrt(&self, s: u64) -> u64 {
        let hit = self.hit_by(s);
        let mut acc = 0u64;
        for i in 0..self.n {
            if self.hitters[i] & !hit == 0 {
                acc |= 1 << i;
            }
        }
        acc
    }

    fn admissible(&self, s: u64) -> bool {
        self.conflict_free(s) && s & !self.acceptable_wrt(s) == 0
    }

    fn complete(&self, s: u64) -> bool {
        self.conflict_free(s) && s == self.acceptable_wrt(s)
    }

    fn stable(&self, s: u64) -> bool {
        self.conflict_free(s) && self.universe() & !s & !self.hit_by(s) == 0
    }

    fn range(&self, s: u64) -> u64 {
        s | self.hit_by(s)
    }

    fn enumerate(&self, which: Semantics) -> Vec<u64> {
        let all: Vec<u64> = (0..=self.universe()).collect();
        match which {
            Semantics::ConflictFree => {
                all.into_iter().filter(|&s| self.conflict_free(s)).collect()
            }
            Semantics::Admissible => all.into_iter().filter(|&s| self.admissible(s)).collect(),
            Semantics::Complete => all.into_iter().filter(|&s| self.complete(s)).collect(),
            Semantics::Preferred => {
                maximal(all.into_iter().filter(|&s| self.admissible(s)).collect())
            }
            Semantics::Stable => all.into_iter().filter(|&s| self.stable(s)).collect(),
            Semantics::Grounded => {
                let completes: Vec<u64> =
                    all.into_iter().filter(|&s| self.complete(s)).collect();
                let least = completes
                    .iter()
                    .copied()
                    .find(|&s| completes.iter().all(|&t| s & !t == 0))
                    .expect("a least complete extension always exists");
                vec![least]
            }
            Semantics::SemiStable => {
                let completes: Vec<u64> =
                    all.into_iter().filter(|&s| self.complete(s)).collect();
                completes
                    .iter()
                    .copied()
                    .filter(|&s| {
                        !completes.iter().any(|&t| {
                            let (rs, rt) = (self.range(s), self.range(t));
                            rs != rt && rs & !rt == 0
                        })
                    })
                    .collect()
            }
            Semantics::Ideal => {
                let admissible: Vec<u64> =
                    all.iter().copied().filter(|&s| self.admissible(s)).collect();
                let preferred = maximal(admissible.clone());
                let candidates: Vec<u64> = admissible
                    .into_iter()
                    .filter(|&s| preferred.iter().all(|&p| s & !p == 0))
                    .collect();
                let top = maximal(candidates);
                assert_eq!(top.len(), 1, "the ideal extension must be unique");
                top
            }
        }
    }
}

fn maximal(sets: Vec<u64>) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s & !t == 0))
        .collect()
}

/// Rebuilds the defeat structure of a framework pairwise, without going
/// through the cached defeat table.
fn afra_space(fw: &Framework) -> Result<Space, SolveError> {
    let n = fw.element_count();
    if n > ORACLE_BOUND {
        return Err(SolveError::TooLargeToEnumerate {
            elements: n,
            bound: ORACLE_BOUND,
        });
    }
    let mut hits = vec![0u64; n];
    let mut hitters = vec![0u64; n];
    for i in 0..n {
        let Some((_, target)) = fw.edge(i) else {
            continue; // arguments defeat nothing
        };
        for j in 0..n {
            let direct = target == j;
            let indirect = fw.edge(j).is_some_and(|(source, _)| source == target);
            if direct || indirect {
                hits[i] |= 1 << j;
                hitters[j] |= 1 << i;
            }
        }
    }
    Ok(Space { n, hits, hitters })
}

fn dung_space(af: &DungAf) -> Result<Space, SolveError> {
    let n = af.argument_count();
    if n > ORACLE_BOUND {
        return Err(SolveError::TooLargeToEnumerate {
            elements: n,
            bound: ORACLE_BOUND,
        });
    }
    let index: std::collections::BTreeMap<&str, usize> = af
        .arguments()
        .enumerate()
        .map(|(i, id)| (id.as_str(), i))
        .collect();
    let mut hits = vec![0u64; n];
    let mut hitters = vec![0u64; n];
    for (source, target) in af.attack_pairs() {
        let s = index[source.as_str()];
        let t = index[target.as_str()];
        hits[s] |= 1 << t;
        hitters[t] |= 1 << s;
    }
    Ok(Space { n, hits, hitters })
}

fn to_extension_set(
    names: &[&crate::framework::ElementId],
    which: Semantics,
    masks: Vec<u64>,
) -> ExtensionSet {
    let sets = masks.into_iter().map(|mask| {
        (0..names.len())
            .filter(|&i| mask & 1 << i != 0)
            .map(|i| names[i].clone())
            .collect::<ElementSet>()
    });
    ExtensionSet::new(which, sets)
}

/// Reference answer for a recursive-attack framework.
pub fn brute_force(fw: &Framework, which: Semantics) -> Result<ExtensionSet, SolveError> {
    let space = afra_space(fw)?;
    let names: Vec<_> = fw.element_ids().collect();
    Ok(to_extension_set(&names, which, space.enumerate(which)))
}

/// Reference answer for a classical framework.
pub fn brute_force_dung(af: &DungAf, which: Semantics) -> Result<ExtensionSet, SolveError> {
    let space = dung_space(af)?;
    let names: Vec<_> = af.arguments().collect();
    Ok(to_extension_set(&names, which, space.enumerate(which)))
}

/// Runs both the reference and the optimised path and reports whether
/// they agree.
pub fn cross_check(fw: &Framework, which: Semantics) -> Result<OracleReport, SolveError> {
    let oracle_result = brute_force(fw, which)?;
    let solver_result = semantics::extensions(fw, which, &SolveConfig::default())?;
    let agree = oracle_result == solver_result;
    Ok(OracleReport {
        semantics: which,
        oracle_result,
        solver_result,
        agree,
    })
}
