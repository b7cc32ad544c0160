//! Fixtures and helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use afra::{ElementSet, Framework};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn es(names: &[&str]) -> ElementSet {
    ElementSet::from_names(names.iter().copied()).unwrap()
}

/// Five arguments and a five-attack chain ending in a mutual pair; the
/// recurring worked example of the crate.
pub fn travel() -> Framework {
    Framework::new(
        ["c", "g", "p", "n", "a"],
        [
            ("alpha", "g", "c"),
            ("beta", "c", "g"),
            ("gamma", "p", "beta"),
            ("delta", "n", "gamma"),
            ("epsilon", "a", "n"),
        ],
    )
    .unwrap()
}

/// The canonical travel-framework document text.
pub fn travel_doc() -> &'static str {
    "arg(a).\narg(c).\narg(g).\narg(n).\narg(p).\n\
     att(alpha,g,c).\natt(beta,c,g).\natt(delta,n,gamma).\n\
     att(epsilon,a,n).\natt(gamma,p,beta).\n"
}

/// Seven arguments, ten attacks, self-defeat included: three complete
/// extensions, two preferred, no stable one.
pub fn contested() -> Framework {
    Framework::new(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("alpha", "a", "b"),
            ("beta", "b", "alpha"),
            ("gamma", "c", "alpha"),
            ("delta", "c", "d"),
            ("epsilon", "e", "delta"),
            ("eta", "d", "epsilon"),
            ("zeta", "a", "f"),
            ("theta", "f", "a"),
            ("iota", "f", "g"),
            ("kappa", "g", "g"),
        ],
    )
    .unwrap()
}

/// Two mutual pairs around a contested middle argument; every attack
/// targets an argument.
pub fn plain_square() -> Framework {
    Framework::new(
        ["a", "b", "c", "d"],
        [
            ("alpha", "a", "b"),
            ("beta", "b", "a"),
            ("gamma", "a", "c"),
            ("delta", "b", "c"),
            ("epsilon", "c", "d"),
            ("zeta", "d", "c"),
        ],
    )
    .unwrap()
}

/// A random framework with at most 12 elements. Attack targets prefer
/// arguments but may hit an earlier attack, which keeps every target
/// chain well-founded by construction. With `plain_only` every target is
/// an argument.
pub fn random_framework(rng: &mut ChaCha8Rng, plain_only: bool) -> Framework {
    let n_args = rng.random_range(1..=6usize);
    let max_attacks = (12 - n_args).min(8);
    let n_attacks = rng.random_range(0..=max_attacks);
    let arg_names: Vec<String> = (0..n_args)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let mut triples: Vec<(String, String, String)> = Vec::new();
    for k in 0..n_attacks {
        let id = format!("r{}", k + 1);
        let source = arg_names[rng.random_range(0..n_args)].clone();
        let target = if !plain_only && !triples.is_empty() && rng.random_bool(0.3) {
            triples[rng.random_range(0..triples.len())].0.clone()
        } else {
            arg_names[rng.random_range(0..n_args)].clone()
        };
        triples.push((id, source, target));
    }
    Framework::new(arg_names, triples).expect("targets only point backwards")
}

/// A random subset of the framework's arguments.
pub fn random_argument_set(rng: &mut ChaCha8Rng, fw: &Framework) -> ElementSet {
    fw.arguments()
        .filter(|_| rng.random_bool(0.5))
        .cloned()
        .collect()
}

/// A random subset of all elements, attacks included.
pub fn random_element_set(rng: &mut ChaCha8Rng, fw: &Framework) -> ElementSet {
    fw.element_ids()
        .filter(|_| rng.random_bool(0.5))
        .cloned()
        .collect()
}

/// Structure equality up to attack names: same argument names, and the
/// same multiset of attack shapes, where an attack's shape is its source
/// plus the shape of its target.
pub fn isomorphic(a: &Framework, b: &Framework) -> bool {
    let args_a: BTreeSet<&str> = a.arguments().map(|x| x.as_str()).collect();
    let args_b: BTreeSet<&str> = b.arguments().map(|x| x.as_str()).collect();
    if args_a != args_b || a.attack_count() != b.attack_count() {
        return false;
    }
    fn shape(fw: &Framework, name: &str) -> String {
        match fw.attack(name) {
            None => format!("arg:{name}"),
            Some(at) => format!("({} -> {})", at.source(), shape(fw, at.target().id.as_str())),
        }
    }
    let shapes = |fw: &Framework| -> Vec<String> {
        let mut v: Vec<String> = fw
            .attacks()
            .iter()
            .map(|at| shape(fw, at.id().as_str()))
            .collect();
        v.sort();
        v
    };
    shapes(a) == shapes(b)
}
