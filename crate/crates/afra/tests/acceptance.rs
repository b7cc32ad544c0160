//! End-to-end acceptance checks.
//!
//! Each test covers one scenario group, prints one `PASS`/`FAIL` line
//! (visible with `--nocapture`), and compares exact values — no
//! tolerances anywhere. The whole target is budgeted to finish well
//! under a minute.

mod common;

use afra::dung::{self, DungAf};
use afra::interop::{self, Eaf, Hoaf};
use afra::semantics::{self, ExtensionSet};
use afra::{oracle, ElementSet, Framework, Semantics, SolveConfig, SolveError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::es;

struct Criterion {
    name: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        if !ok {
            self.failures.push(label.into());
        }
    }

    fn check_eq<T: std::fmt::Debug + PartialEq>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("PASS: {}", self.name);
        } else {
            println!("FAIL: {}", self.name);
            for f in &self.failures {
                println!("  - {f}");
            }
            panic!("{} failed {} check(s)", self.name, self.failures.len());
        }
    }
}

fn minus(a: &ElementSet, b: &ElementSet) -> ElementSet {
    a.iter()
        .filter(|x| !b.contains(x.as_str()))
        .cloned()
        .collect()
}

fn exts(which: Semantics, sets: &[&[&str]]) -> ExtensionSet {
    ExtensionSet::new(which, sets.iter().map(|names| es(names)))
}

/// The forty admissible sets of the travel framework.
const TRAVEL_ADMISSIBLE: [&[&str]; 40] = [
    &[],
    &["p"],
    &["a"],
    &["alpha"],
    &["epsilon"],
    &["a", "p"],
    &["epsilon", "gamma"],
    &["g", "alpha"],
    &["p", "epsilon"],
    &["a", "epsilon"],
    &["p", "alpha"],
    &["a", "alpha"],
    &["epsilon", "alpha"],
    &["p", "epsilon", "alpha"],
    &["a", "epsilon", "alpha"],
    &["g", "epsilon", "alpha"],
    &["p", "g", "alpha"],
    &["a", "g", "alpha"],
    &["g", "epsilon", "gamma"],
    &["a", "p", "alpha"],
    &["a", "p", "epsilon"],
    &["p", "epsilon", "gamma"],
    &["a", "epsilon", "gamma"],
    &["epsilon", "gamma", "alpha"],
    &["p", "g", "epsilon", "alpha"],
    &["a", "g", "epsilon", "alpha"],
    &["a", "p", "epsilon", "gamma"],
    &["p", "g", "epsilon", "gamma"],
    &["a", "g", "epsilon", "gamma"],
    &["p", "epsilon", "gamma", "alpha"],
    &["a", "epsilon", "gamma", "alpha"],
    &["g", "epsilon", "gamma", "alpha"],
    &["a", "p", "g", "alpha"],
    &["a", "p", "epsilon", "alpha"],
    &["p", "g", "epsilon", "gamma", "alpha"],
    &["a", "g", "epsilon", "gamma", "alpha"],
    &["a", "p", "epsilon", "gamma", "alpha"],
    &["a", "p", "g", "epsilon", "gamma"],
    &["a", "p", "g", "epsilon", "alpha"],
    &["a", "p", "g", "epsilon", "gamma", "alpha"],
];

#[test]
fn travel_framework_semantics() {
    let mut c = Criterion::new("travel framework: admissible landscape and extensions");
    let fw = common::travel();
    let cfg = SolveConfig::default();

    let admissible = semantics::admissible_sets(&fw, &cfg).unwrap();
    c.check_eq(
        "admissible sets",
        admissible,
        exts(Semantics::Admissible, &TRAVEL_ADMISSIBLE),
    );

    let winner: &[&str] = &["a", "alpha", "epsilon", "g", "gamma", "p"];
    for which in Semantics::EXTENSION {
        let result = semantics::extensions(&fw, which, &cfg).unwrap();
        c.check_eq(&format!("{which} extensions"), result, exts(which, &[winner]));
    }
    c.check_eq(
        "grounded via the fixpoint",
        semantics::grounded_extension(&fw),
        es(winner),
    );
    c.finish();
}

#[test]
fn contested_framework_extension_families() {
    let mut c = Criterion::new("contested framework: families, ranges, no stable extension");
    let fw = common::contested();
    let cfg = SolveConfig::default();

    let s_grounded: &[&str] = &["b", "beta", "c", "e", "gamma"];
    let s_semi: &[&str] = &["b", "beta", "c", "e", "f", "gamma", "iota", "theta"];
    let s_other: &[&str] = &["a", "b", "beta", "c", "e", "gamma", "zeta"];

    c.check_eq(
        "complete extensions",
        semantics::extensions(&fw, Semantics::Complete, &cfg).unwrap(),
        exts(Semantics::Complete, &[s_grounded, s_semi, s_other]),
    );
    c.check_eq(
        "grounded extension",
        semantics::grounded_extension(&fw),
        es(s_grounded),
    );
    c.check_eq(
        "preferred extensions",
        semantics::extensions(&fw, Semantics::Preferred, &cfg).unwrap(),
        exts(Semantics::Preferred, &[s_semi, s_other]),
    );
    c.check_eq(
        "stable extensions",
        semantics::extensions(&fw, Semantics::Stable, &cfg).unwrap(),
        exts(Semantics::Stable, &[]),
    );
    c.check_eq(
        "semi-stable extensions",
        semantics::extensions(&fw, Semantics::SemiStable, &cfg).unwrap(),
        exts(Semantics::SemiStable, &[s_semi]),
    );
    c.check_eq(
        "ideal extension",
        semantics::ideal_extension(&fw, &cfg).unwrap(),
        es(s_grounded),
    );

    // The semi-stable winner covers strictly more than the other
    // preferred extension.
    let range_semi = semantics::range(&fw, &es(s_semi)).unwrap();
    let range_other = semantics::range(&fw, &es(s_other)).unwrap();
    c.check_eq(
        "defeated part of the semi-stable extension",
        minus(&range_semi, &es(s_semi)),
        es(&["a", "alpha", "g", "kappa", "zeta"]),
    );
    c.check_eq(
        "defeated part of the other preferred extension",
        minus(&range_other, &es(s_other)),
        es(&["alpha", "f", "iota", "theta"]),
    );
    c.check(
        "the semi-stable range strictly covers the other",
        range_other.is_subset(&range_semi) && range_other != range_semi,
    );
    c.finish();
}

#[test]
fn plain_framework_lift_correspondence() {
    let mut c = Criterion::new("plain framework: classical reading and lifted extensions agree");
    let fw = common::plain_square();
    let cfg = SolveConfig::default();
    let af = DungAf::from_plain(&fw).unwrap();

    c.check_eq(
        "classical complete extensions",
        dung::d_semantics(&af, Semantics::Complete, &cfg).unwrap(),
        exts(Semantics::Complete, &[&[], &["a", "d"], &["b", "d"], &["d"]]),
    );
    c.check_eq(
        "lifted complete extensions",
        semantics::extensions(&fw, Semantics::Complete, &cfg).unwrap(),
        exts(
            Semantics::Complete,
            &[
                &[],
                &["a", "alpha", "d", "gamma", "zeta"],
                &["b", "beta", "d", "delta", "zeta"],
                &["d", "zeta"],
            ],
        ),
    );
    for which in Semantics::EXTENSION {
        c.check_eq(
            &format!("lift correspondence under {which}"),
            dung::check_af_correspondence(&fw, which, &cfg),
            Ok(true),
        );
    }
    c.check_eq(
        "classical ideal extension",
        dung::d_semantics(&af, Semantics::Ideal, &cfg).unwrap(),
        exts(Semantics::Ideal, &[&["d"]]),
    );
    c.check_eq(
        "lifted ideal extension",
        semantics::ideal_extension(&fw, &cfg).unwrap(),
        es(&["d", "zeta"]),
    );
    c.check_eq(
        "lift of the classical ideal extension",
        dung::lift(&fw, &es(&["d"])).unwrap(),
        es(&["d", "zeta"]),
    );
    c.check_eq(
        "grounded on both sides",
        (semantics::grounded_extension(&fw), dung::d_grounded(&af)),
        (es(&[]), es(&[])),
    );
    c.check_eq(
        "lift of the empty set",
        dung::lift(&fw, &es(&[])).unwrap(),
        es(&[]),
    );
    c.finish();
}

#[test]
fn extended_framework_translation_gap() {
    let mut c = Criterion::new("extended framework: set-sensitive answers and the translation gap");
    let eaf = Eaf::new(
        ["a", "b", "c"],
        [("b", "a"), ("c", "b")],
        [("b", ("c", "b"))],
    )
    .unwrap();

    c.check_eq(
        "set-sensitive grounded extension",
        interop::eaf_semantics(&eaf, Semantics::Grounded).unwrap(),
        exts(Semantics::Grounded, &[&["a", "c"]]),
    );
    c.check_eq(
        "set-sensitive preferred extensions",
        interop::eaf_semantics(&eaf, Semantics::Preferred).unwrap(),
        exts(Semantics::Preferred, &[&["a", "c"], &["b", "c"]]),
    );

    let fw = interop::eaf_to_afra(&eaf).unwrap();
    c.check_eq(
        "translated grounded extension",
        semantics::grounded_extension(&fw),
        es(&["c"]),
    );
    c.check_eq(
        "translated preferred extensions",
        semantics::extensions(&fw, Semantics::Preferred, &SolveConfig::default()).unwrap(),
        exts(
            Semantics::Preferred,
            &[
                &["a", "att_c_b", "c"],
                &["att_b_a", "att_b_att_c_b", "b", "c"],
            ],
        ),
    );
    // The two models disagree about a: the named-attack reading leaves it
    // out of the grounded extension.
    c.check(
        "the translation changes the grounded verdict on a",
        !semantics::grounded_extension(&fw).contains("a"),
    );
    c.finish();
}

#[test]
fn higher_order_reification() {
    let mut c = Criterion::new("higher-order framework: reified semantics and read-back");
    let hoaf = Hoaf::new(
        ["a", "n", "p", "c", "g"],
        ["c_g", "g_c", "p_cg", "n_pcg", "a_n"],
        [
            ("a", "not_a"),
            ("not_a", "a_n"),
            ("a_n", "n"),
            ("n", "not_n"),
            ("not_n", "n_pcg"),
            ("n_pcg", "p_cg"),
            ("p", "not_p"),
            ("not_p", "p_cg"),
            ("p_cg", "c_g"),
            ("c", "not_c"),
            ("not_c", "c_g"),
            ("c_g", "g"),
            ("g", "not_g"),
            ("not_g", "g_c"),
            ("g_c", "c"),
        ],
    )
    .unwrap();

    let winner: &[&str] = &["a", "a_n", "g", "g_c", "not_c", "not_n", "p", "p_cg"];
    for which in Semantics::EXTENSION {
        c.check_eq(
            &format!("reified {which} extensions"),
            interop::hoaf_semantics(&hoaf, which).unwrap(),
            exts(which, &[winner]),
        );
    }

    let fw = interop::hoaf_to_afra(&hoaf).unwrap();
    c.check(
        "read-back is the travel framework up to attack names",
        common::isomorphic(&fw, &common::travel()),
    );
    c.check(
        "reifying the travel framework round-trips",
        interop::hoaf_to_afra(&interop::afra_to_hoaf(&common::travel())).unwrap()
            == common::travel(),
    );
    c.finish();
}

#[test]
fn randomized_invariants_and_oracle_agreement() {
    let mut c = Criterion::new("random frameworks: structural laws and full oracle agreement");
    let mut rng = ChaCha8Rng::seed_from_u64(0xAF7A);
    let cfg = SolveConfig::default();
    let mut campaign_size = 0usize;

    for round in 0..250 {
        let plain_only = round >= 200;
        let fw = common::random_framework(&mut rng, plain_only);
        campaign_size += 1;

        // The acceptance operator is monotone.
        let s1 = common::random_element_set(&mut rng, &fw);
        let s2 = s1.union(&common::random_element_set(&mut rng, &fw));
        let f1 = semantics::characteristic_function(&fw, &s1).unwrap();
        let f2 = semantics::characteristic_function(&fw, &s2).unwrap();
        c.check(
            format!("round {round}: acceptance operator is monotone"),
            f1.is_subset(&f2),
        );

        // It preserves conflict-freeness.
        if semantics::is_conflict_free(&fw, &s1).unwrap() {
            c.check(
                format!("round {round}: acceptance preserves conflict-freeness"),
                semantics::is_conflict_free(&fw, &f1).unwrap(),
            );
        }

        // An admissible set absorbs anything acceptable to it and stays
        // admissible.
        let admissible = semantics::admissible_sets(&fw, &cfg).unwrap();
        let chosen = admissible.extensions().last().unwrap().clone();
        let acceptable = semantics::characteristic_function(&fw, &chosen).unwrap();
        c.check(
            format!("round {round}: admissible sets sit inside their acceptables"),
            chosen.is_subset(&acceptable),
        );
        for x in minus(&acceptable, &chosen).iter() {
            let mut grown = chosen.clone();
            grown.insert(x.clone());
            c.check(
                format!("round {round}: absorbing `{x}` keeps the set admissible"),
                semantics::is_admissible(&fw, &grown).unwrap(),
            );
        }

        // Family inclusions, existence, and least/greatest structure.
        let complete = semantics::extensions(&fw, Semantics::Complete, &cfg).unwrap();
        let preferred = semantics::extensions(&fw, Semantics::Preferred, &cfg).unwrap();
        let stable = semantics::extensions(&fw, Semantics::Stable, &cfg).unwrap();
        let semi = semantics::extensions(&fw, Semantics::SemiStable, &cfg).unwrap();
        let grounded = semantics::grounded_extension(&fw);
        let ideal = semantics::ideal_extension(&fw, &cfg).unwrap();

        c.check(
            format!("round {round}: at least one preferred extension"),
            !preferred.is_empty(),
        );
        for s in stable.iter() {
            c.check(format!("round {round}: stable is semi-stable"), semi.contains(s));
        }
        for s in semi.iter() {
            c.check(
                format!("round {round}: semi-stable is preferred"),
                preferred.contains(s),
            );
        }
        for s in preferred.iter() {
            c.check(
                format!("round {round}: preferred is complete"),
                complete.contains(s),
            );
            c.check(
                format!("round {round}: preferred is admissible"),
                semantics::is_admissible(&fw, s).unwrap(),
            );
        }
        c.check(
            format!("round {round}: grounded is complete"),
            complete.contains(&grounded),
        );
        for s in complete.iter() {
            c.check(
                format!("round {round}: grounded is the least complete extension"),
                grounded.is_subset(s),
            );
        }
        c.check(
            format!("round {round}: ideal is complete"),
            complete.contains(&ideal),
        );
        c.check(
            format!("round {round}: ideal is admissible"),
            semantics::is_admissible(&fw, &ideal).unwrap(),
        );
        for s in preferred.iter() {
            c.check(
                format!("round {round}: ideal sits inside every preferred extension"),
                ideal.is_subset(s),
            );
        }

        // The flattened defeat graph gives the same answers.
        for which in Semantics::ALL {
            c.check(
                format!("round {round}: flatten correspondence under {which}"),
                dung::check_flatten_correspondence(&fw, which, &cfg) == Ok(true),
            );
        }

        // The brute-force reference agrees on every query.
        for which in Semantics::ALL {
            let report = oracle::cross_check(&fw, which).unwrap();
            c.check(
                format!("round {round}: oracle agreement under {which}"),
                report.agree,
            );
        }

        // Plain frameworks: lift laws and the classical correspondence.
        if fw.is_plain_af() {
            let u1 = common::random_argument_set(&mut rng, &fw);
            let u2 = u1.union(&common::random_argument_set(&mut rng, &fw));
            let l1 = dung::lift(&fw, &u1).unwrap();
            let l2 = dung::lift(&fw, &u2).unwrap();
            c.check(
                format!("round {round}: lift is monotone"),
                l1.is_subset(&l2),
            );
            if u1 != u2 {
                c.check(
                    format!("round {round}: lift is strictly monotone"),
                    l1 != l2,
                );
            }
            c.check(
                format!("round {round}: lift distributes over union"),
                dung::lift(&fw, &u1.union(&u2)).unwrap() == l1.union(&l2),
            );

            // The range of a lifted set is the lift of the classical
            // range.
            let mut d_range = u1.clone();
            for attack in fw.attacks() {
                if u1.contains(attack.source().as_str()) {
                    d_range.insert(attack.target().id.clone());
                }
            }
            c.check(
                format!("round {round}: range of a lift is the lift of the range"),
                semantics::range(&fw, &l1).unwrap() == dung::lift(&fw, &d_range).unwrap(),
            );

            for which in Semantics::EXTENSION {
                c.check(
                    format!("round {round}: lift correspondence under {which}"),
                    dung::check_af_correspondence(&fw, which, &cfg) == Ok(true),
                );
            }
        }
    }
    c.check("at least 200 frameworks were exercised", campaign_size >= 200);
    c.finish();
}

#[test]
fn degenerate_frameworks() {
    let mut c = Criterion::new("degenerate frameworks: self-defeat and emptiness");
    let cfg = SolveConfig::default();

    let fw = Framework::new(["a"], [("r", "a", "a")]).unwrap();
    c.check_eq(
        "self-defeat: complete",
        semantics::extensions(&fw, Semantics::Complete, &cfg).unwrap(),
        exts(Semantics::Complete, &[&[]]),
    );
    c.check_eq(
        "self-defeat: preferred",
        semantics::extensions(&fw, Semantics::Preferred, &cfg).unwrap(),
        exts(Semantics::Preferred, &[&[]]),
    );
    c.check_eq(
        "self-defeat: no stable extension",
        semantics::extensions(&fw, Semantics::Stable, &cfg).unwrap(),
        exts(Semantics::Stable, &[]),
    );
    c.check_eq(
        "self-defeat: semi-stable",
        semantics::extensions(&fw, Semantics::SemiStable, &cfg).unwrap(),
        exts(Semantics::SemiStable, &[&[]]),
    );
    c.check_eq(
        "self-defeat: grounded and ideal are empty",
        (
            semantics::grounded_extension(&fw),
            semantics::ideal_extension(&fw, &cfg).unwrap(),
        ),
        (es(&[]), es(&[])),
    );
    c.check_eq(
        "self-defeat: only the empty set is admissible",
        semantics::admissible_sets(&fw, &cfg).unwrap(),
        exts(Semantics::Admissible, &[&[]]),
    );
    c.check_eq(
        "self-defeat: conflict-free sets",
        semantics::conflict_free_sets(&fw, &cfg).unwrap(),
        exts(Semantics::ConflictFree, &[&[], &["a"]]),
    );

    let empty = Framework::new(Vec::<&str>::new(), Vec::<(&str, &str, &str)>::new()).unwrap();
    for which in Semantics::ALL {
        c.check_eq(
            &format!("empty framework: {which}"),
            semantics::extensions(&empty, which, &cfg).unwrap(),
            exts(which, &[&[]]),
        );
    }
    c.finish();
}

#[test]
fn mutual_attack_modelling_gap() {
    let mut c = Criterion::new("mutual attack pairs: rejected in one model, harmless in the other");

    let rejected = Eaf::new(
        ["a", "b", "c", "cp"],
        [("a", "b"), ("b", "a")],
        [("c", ("a", "b")), ("cp", ("b", "a"))],
    );
    c.check(
        "one-sided cancellation of a mutual pair is rejected",
        matches!(rejected, Err(SolveError::InvalidEaf(_))),
    );

    let fw = Framework::new(
        ["a", "b", "c", "cp"],
        [
            ("alpha", "a", "b"),
            ("beta", "b", "a"),
            ("gamma", "c", "alpha"),
            ("delta", "cp", "beta"),
        ],
    )
    .unwrap();
    c.check_eq(
        "the named-attack encoding accepts the full cast as conflict-free",
        semantics::is_conflict_free(&fw, &es(&["a", "b", "c", "cp", "delta", "gamma"])),
        Ok(true),
    );
    c.finish();
}
