//! Seeded property suites for the defining identities.
//!
//! Each suite combines an exhaustive sweep of the smallest instances with
//! seeded random trials, uniform over the configurations of each total
//! weight. A failing instance comes back as a [`Counterexample`] carrying
//! the serialized inputs and both sides; the suites never panic on a
//! mathematical failure.
//!
//! Trials are numbered, and trial `i` draws from stream `i` of the seed, so
//! enabling `parallel` changes scheduling but never the verdict or the
//! counterexample found.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::DecorationAlphabet;
use crate::enumerate::TreeTables;
use crate::lincomb::{bilinear_extend, LinComb};
use crate::par::maybe_par_map;
use crate::products::{
    brace, brace_comb, prelie_planar, prelie_planar_comb, prelie_rooted, prelie_rooted_comb,
    shuffle, splittings, star_planar, star_planar_comb, star_rooted,
};
use crate::sample::{compositions, TreeSampler};
use crate::tree::{b_planar, Forest, PlanarTree, RootedTree};

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Largest total weight of a sampled configuration.
    pub max_weight: u64,
    /// Random trials per total weight.
    pub trials: u64,
    pub seed: u64,
    /// Run trials on separate threads (needs the `parallel` feature).
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_weight: 5,
            trials: 100,
            seed: 42,
            parallel: false,
        }
    }
}

/// A failing instance: the law, the inputs, and the two unequal sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "law violated: {}", self.law)?;
        writeln!(f, "inputs: {}", self.inputs.join(" ; "))?;
        writeln!(f, "lhs: {}", self.lhs)?;
        write!(f, "rhs: {}", self.rhs)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Individual law instances compared.
    pub checks: u64,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Iterates `arity`-fold index tuples over `0..len`, odometer order.
fn for_each_index_tuple(len: usize, arity: usize, f: &mut impl FnMut(&[usize])) {
    if arity == 0 {
        f(&[]);
        return;
    }
    if len == 0 {
        return;
    }
    let mut idx = vec![0usize; arity];
    'outer: loop {
        f(&idx);
        let mut i = arity - 1;
        loop {
            idx[i] += 1;
            if idx[i] < len {
                continue 'outer;
            }
            idx[i] = 0;
            if i == 0 {
                break 'outer;
            }
            i -= 1;
        }
    }
}

/// All ordered forests of exact total weight, built over the tables.
fn all_forests(tables: &TreeTables, weight: u64) -> Vec<Forest> {
    if weight == 0 {
        return vec![Forest::empty()];
    }
    let mut out = Vec::new();
    for first in 1..=weight {
        for t in tables.planar(first) {
            for rest in all_forests(tables, weight - first) {
                let mut trees = vec![t.clone()];
                trees.extend(rest.trees().iter().cloned());
                out.push(Forest::new(trees));
            }
        }
    }
    out
}

/// Runs numbered trials, sequentially or in parallel, returning the total
/// check count and the counterexample from the lowest-numbered failing
/// trial.
fn run_trials(
    opts: &SuiteOptions,
    trial_count: u64,
    per_trial_checks: u64,
    run: impl Fn(u64) -> Option<Counterexample> + Sync + Send,
) -> (u64, Option<Counterexample>) {
    let trials: Vec<u64> = (0..trial_count).collect();
    let outcomes = maybe_par_map(trials, opts.parallel, run);
    let first = outcomes.into_iter().flatten().next();
    (trial_count * per_trial_checks, first)
}

fn combine(
    name: &'static str,
    exhaustive: (u64, Option<Counterexample>),
    random: (u64, Option<Counterexample>),
) -> SuiteReport {
    SuiteReport {
        name,
        checks: exhaustive.0 + random.0,
        counterexample: exhaustive.1.or(random.1),
    }
}

/// Totals swept by random trials: everything above the exhaustive range.
fn random_totals(smallest: u64, exhaustive_top: u64, max: u64) -> Vec<u64> {
    (smallest.max(exhaustive_top + 1)..=max).collect()
}

fn prelie_rooted_counterexample(
    alphabet: &DecorationAlphabet,
    x: &RootedTree,
    y: &RootedTree,
    z: &RootedTree,
) -> Option<Counterexample> {
    let basis = |t: &RootedTree| LinComb::basis(t.clone());
    let assoc = |a: &RootedTree, b: &RootedTree, c: &RootedTree| {
        prelie_rooted_comb(&prelie_rooted(a, b), &basis(c))
            - prelie_rooted_comb(&basis(a), &prelie_rooted(b, c))
    };
    let lhs = assoc(x, y, z);
    let rhs = assoc(y, x, z);
    (lhs != rhs).then(|| Counterexample {
        law: "pre-Lie associator symmetry on rooted trees".into(),
        inputs: vec![
            x.serialize(alphabet),
            y.serialize(alphabet),
            z.serialize(alphabet),
        ],
        lhs: lhs.to_text(alphabet),
        rhs: rhs.to_text(alphabet),
    })
}

fn prelie_planar_counterexample(
    alphabet: &DecorationAlphabet,
    x: &PlanarTree,
    y: &PlanarTree,
    z: &PlanarTree,
) -> Option<Counterexample> {
    let basis = |t: &PlanarTree| LinComb::basis(t.clone());
    let assoc = |a: &PlanarTree, b: &PlanarTree, c: &PlanarTree| {
        prelie_planar_comb(&prelie_planar(a, b), &basis(c))
            - prelie_planar_comb(&basis(a), &prelie_planar(b, c))
    };
    let lhs = assoc(x, y, z);
    let rhs = assoc(y, x, z);
    (lhs != rhs).then(|| Counterexample {
        law: "pre-Lie associator symmetry on planar trees".into(),
        inputs: vec![
            x.serialize(alphabet),
            y.serialize(alphabet),
            z.serialize(alphabet),
        ],
        lhs: lhs.to_text(alphabet),
        rhs: rhs.to_text(alphabet),
    })
}

/// Pre-Lie axiom, rooted and planar: the associator `(x∘y)∘z − x∘(y∘z)` is
/// symmetric in `x, y`.
pub fn check_prelie(alphabet: &DecorationAlphabet, opts: &SuiteOptions) -> SuiteReport {
    let max = opts.max_weight.max(3);
    let tables = TreeTables::new(alphabet.clone(), max);
    let exhaustive_top = 4.min(max);

    let mut checks = 0;
    let mut failure = None;
    for total in 3..=exhaustive_top {
        for split in compositions(3, total) {
            for x in tables.rooted(split[0]) {
                for y in tables.rooted(split[1]) {
                    for z in tables.rooted(split[2]) {
                        checks += 1;
                        failure =
                            failure.or_else(|| prelie_rooted_counterexample(alphabet, x, y, z));
                    }
                }
            }
            for x in tables.planar(split[0]) {
                for y in tables.planar(split[1]) {
                    for z in tables.planar(split[2]) {
                        checks += 1;
                        failure =
                            failure.or_else(|| prelie_planar_counterexample(alphabet, x, y, z));
                    }
                }
            }
        }
    }

    let totals = random_totals(3, exhaustive_top, max);
    let random = run_trials(opts, totals.len() as u64 * opts.trials, 2, |i| {
        let total = totals[(i / opts.trials) as usize];
        let mut sampler = TreeSampler::for_trial(&tables, opts.seed, i);
        let rooted = sampler.rooted_tuple(3, total)?;
        let planar = sampler.planar_tuple(3, total)?;
        prelie_rooted_counterexample(alphabet, &rooted[0], &rooted[1], &rooted[2])
            .or_else(|| prelie_planar_counterexample(alphabet, &planar[0], &planar[1], &planar[2]))
    });
    combine("prelie", (checks, failure), random)
}

fn nap_rooted_counterexample(
    alphabet: &DecorationAlphabet,
    x: &RootedTree,
    y: &RootedTree,
    z: &RootedTree,
) -> Option<Counterexample> {
    let lhs = star_rooted(x, &star_rooted(y, z));
    let rhs = star_rooted(y, &star_rooted(x, z));
    (lhs != rhs).then(|| Counterexample {
        law: "permutative law on rooted trees".into(),
        inputs: vec![
            x.serialize(alphabet),
            y.serialize(alphabet),
            z.serialize(alphabet),
        ],
        lhs: lhs.serialize(alphabet),
        rhs: rhs.serialize(alphabet),
    })
}

fn nap_planar_counterexample(
    alphabet: &DecorationAlphabet,
    x: &PlanarTree,
    y: &PlanarTree,
    z: &PlanarTree,
) -> Option<Counterexample> {
    let basis = |t: &PlanarTree| LinComb::basis(t.clone());
    let lhs = star_planar_comb(&basis(x), &star_planar(y, z));
    let rhs = star_planar_comb(&basis(y), &star_planar(x, z));
    (lhs != rhs).then(|| Counterexample {
        law: "permutative law on planar trees".into(),
        inputs: vec![
            x.serialize(alphabet),
            y.serialize(alphabet),
            z.serialize(alphabet),
        ],
        lhs: lhs.to_text(alphabet),
        rhs: rhs.to_text(alphabet),
    })
}

/// NAP axiom, rooted and planar: `x ⋆ (y ⋆ z) = y ⋆ (x ⋆ z)`.
pub fn check_nap(alphabet: &DecorationAlphabet, opts: &SuiteOptions) -> SuiteReport {
    let max = opts.max_weight.max(3);
    let tables = TreeTables::new(alphabet.clone(), max);
    let exhaustive_top = 4.min(max);

    let mut checks = 0;
    let mut failure = None;
    for total in 3..=exhaustive_top {
        for split in compositions(3, total) {
            for x in tables.rooted(split[0]) {
                for y in tables.rooted(split[1]) {
                    for z in tables.rooted(split[2]) {
                        checks += 1;
                        failure = failure.or_else(|| nap_rooted_counterexample(alphabet, x, y, z));
                    }
                }
            }
            for x in tables.planar(split[0]) {
                for y in tables.planar(split[1]) {
                    for z in tables.planar(split[2]) {
                        checks += 1;
                        failure = failure.or_else(|| nap_planar_counterexample(alphabet, x, y, z));
                    }
                }
            }
        }
    }

    let totals = random_totals(3, exhaustive_top, max);
    let random = run_trials(opts, totals.len() as u64 * opts.trials, 2, |i| {
        let total = totals[(i / opts.trials) as usize];
        let mut sampler = TreeSampler::for_trial(&tables, opts.seed, i);
        let rooted = sampler.rooted_tuple(3, total)?;
        let planar = sampler.planar_tuple(3, total)?;
        nap_rooted_counterexample(alphabet, &rooted[0], &rooted[1], &rooted[2])
            .or_else(|| nap_planar_counterexample(alphabet, &planar[0], &planar[1], &planar[2]))
    });
    combine("nap", (checks, failure), random)
}

/// Both sides of the brace composition law for concrete argument lists.
fn brace_composition_sides(
    a_args: &[PlanarTree],
    b_args: &[PlanarTree],
    target: &PlanarTree,
) -> (LinComb<PlanarTree>, LinComb<PlanarTree>) {
    let a_combs: Vec<LinComb<PlanarTree>> =
        a_args.iter().map(|t| LinComb::basis(t.clone())).collect();
    let lhs = brace_comb(&a_combs, &brace(b_args, target));

    let k = a_args.len();
    let mut rhs = LinComb::zero();
    let mut cuts = vec![0usize; 2 * b_args.len()];
    splittings(0, k, &mut cuts, &mut |cuts| {
        let mut outer: Vec<LinComb<PlanarTree>> = Vec::new();
        let first_cut = cuts.first().copied().unwrap_or(k);
        for t in &a_args[..first_cut] {
            outer.push(LinComb::basis(t.clone()));
        }
        for (i, b) in b_args.iter().enumerate() {
            outer.push(brace(&a_args[cuts[2 * i]..cuts[2 * i + 1]], b));
            let gap_end = cuts.get(2 * i + 2).copied().unwrap_or(k);
            for t in &a_args[cuts[2 * i + 1]..gap_end] {
                outer.push(LinComb::basis(t.clone()));
            }
        }
        rhs += brace_comb(&outer, &LinComb::basis(target.clone()));
    });
    (lhs, rhs)
}

fn brace_counterexample(
    alphabet: &DecorationAlphabet,
    a_args: &[PlanarTree],
    b_args: &[PlanarTree],
    target: &PlanarTree,
) -> Option<Counterexample> {
    let (lhs, rhs) = brace_composition_sides(a_args, b_args, target);
    (lhs != rhs).then(|| {
        let list = |ts: &[PlanarTree]| {
            let names: Vec<String> = ts.iter().map(|t| t.serialize(alphabet)).collect();
            format!("[{}]", names.join(","))
        };
        Counterexample {
            law: "brace composition".into(),
            inputs: vec![list(a_args), list(b_args), target.serialize(alphabet)],
            lhs: lhs.to_text(alphabet),
            rhs: rhs.to_text(alphabet),
        }
    })
}

/// Brace composition law `<a_1..a_m; <b_1..b_n; c>>`, exhaustive for
/// `m, n <= 2` over arguments of weight at most 2 and targets of weight at
/// most 3, plus random heavier trials.
pub fn check_brace(alphabet: &DecorationAlphabet, opts: &SuiteOptions) -> SuiteReport {
    let max = opts.max_weight.max(3);
    let tables = TreeTables::new(alphabet.clone(), max);
    let args_pool: Vec<PlanarTree> = (1..=2.min(max))
        .flat_map(|w| tables.planar(w).to_vec())
        .collect();
    let target_pool: Vec<PlanarTree> = (1..=3.min(max))
        .flat_map(|w| tables.planar(w).to_vec())
        .collect();

    let mut checks = 0;
    let mut failure = None;
    for m in 0..=2usize {
        for n in 0..=2usize {
            if m + n == 0 {
                continue;
            }
            for_each_index_tuple(args_pool.len(), m, &mut |ai| {
                let a_args: Vec<PlanarTree> = ai.iter().map(|&i| args_pool[i].clone()).collect();
                for_each_index_tuple(args_pool.len(), n, &mut |bi| {
                    let b_args: Vec<PlanarTree> =
                        bi.iter().map(|&i| args_pool[i].clone()).collect();
                    for target in &target_pool {
                        checks += 1;
                        failure = failure
                            .take()
                            .or_else(|| brace_counterexample(alphabet, &a_args, &b_args, target));
                    }
                });
            });
        }
    }

    let random = run_trials(opts, opts.trials, 1, |i| {
        let mut sampler = TreeSampler::for_trial(&tables, opts.seed, 2 * i);
        let mut aux = ChaCha8Rng::seed_from_u64(opts.seed);
        aux.set_stream(2 * i + 1);
        let m = aux.random_range(0..=2usize);
        let n_min = if m == 0 { 1 } else { 0 };
        let n = aux.random_range(n_min..=2usize);
        let arg_top = 2.min(max);
        let a_args: Vec<PlanarTree> = (0..m)
            .filter_map(|_| sampler.planar_up_to(arg_top))
            .collect();
        let b_args: Vec<PlanarTree> = (0..n)
            .filter_map(|_| sampler.planar_up_to(arg_top))
            .collect();
        let target = sampler.planar_up_to(3.min(max))?;
        brace_counterexample(alphabet, &a_args, &b_args, &target)
    });
    combine("brace", (checks, failure), random)
}

fn e1_counterexample(
    alphabet: &DecorationAlphabet,
    x: &PlanarTree,
    y: &Forest,
) -> Option<Counterexample> {
    let mut failure = None;
    for d in alphabet.decorations() {
        let target = b_planar(alphabet, d, y.clone()).expect("decoration from the alphabet");
        let lhs = star_planar(x, &target);
        let word = shuffle(&Forest::new(vec![x.clone()]), y);
        let rhs = word
            .map_basis(|f| b_planar(alphabet, d, f.clone()).expect("decoration from the alphabet"));
        if lhs != rhs {
            failure = Some(Counterexample {
                law: "star against a grafted forest is a shuffle".into(),
                inputs: vec![
                    x.serialize(alphabet),
                    format!("B_{}({})", alphabet.symbol(d), y.serialize(alphabet)),
                ],
                lhs: lhs.to_text(alphabet),
                rhs: rhs.to_text(alphabet),
            });
            break;
        }
    }
    failure
}

/// The bridge identity `x ⋆ B_d(y) = B_d(x * y)` with `*` the shuffle,
/// exhaustive for `x` and `y` of weight at most 3, plus random trials.
pub fn check_e1(alphabet: &DecorationAlphabet, opts: &SuiteOptions) -> SuiteReport {
    let max = opts.max_weight.max(3);
    let tables = TreeTables::new(alphabet.clone(), max);
    let top = 3.min(max);

    let mut checks = 0;
    let mut failure = None;
    for xw in 1..=top {
        for x in tables.planar(xw) {
            for yw in 0..=top {
                for y in all_forests(&tables, yw) {
                    checks += 1;
                    failure = failure
                        .take()
                        .or_else(|| e1_counterexample(alphabet, x, &y));
                }
            }
        }
    }

    let random = run_trials(opts, opts.trials, 1, |i| {
        let mut sampler = TreeSampler::for_trial(&tables, opts.seed, 2 * i);
        let mut aux = ChaCha8Rng::seed_from_u64(opts.seed);
        aux.set_stream(2 * i + 1);
        let x = sampler.planar_up_to(max.saturating_sub(1).max(1))?;
        let y_weight = aux.random_range(0..=max.saturating_sub(x.weight()));
        let y = sampler.forest(y_weight)?;
        e1_counterexample(alphabet, &x, &y)
    });
    combine("e1", (checks, failure), random)
}

fn shuffle_comm_counterexample(
    alphabet: &DecorationAlphabet,
    f1: &Forest,
    f2: &Forest,
) -> Option<Counterexample> {
    let lhs = shuffle(f1, f2);
    let rhs = shuffle(f2, f1);
    (lhs != rhs).then(|| Counterexample {
        law: "shuffle commutativity".into(),
        inputs: vec![f1.serialize(alphabet), f2.serialize(alphabet)],
        lhs: lhs.to_text(alphabet),
        rhs: rhs.to_text(alphabet),
    })
}

fn shuffle_assoc_counterexample(
    alphabet: &DecorationAlphabet,
    f1: &Forest,
    f2: &Forest,
    f3: &Forest,
) -> Option<Counterexample> {
    let basis = |f: &Forest| LinComb::basis(f.clone());
    let lhs = bilinear_extend(shuffle, &shuffle(f1, f2), &basis(f3));
    let rhs = bilinear_extend(shuffle, &basis(f1), &shuffle(f2, f3));
    (lhs != rhs).then(|| Counterexample {
        law: "shuffle associativity".into(),
        inputs: vec![
            f1.serialize(alphabet),
            f2.serialize(alphabet),
            f3.serialize(alphabet),
        ],
        lhs: lhs.to_text(alphabet),
        rhs: rhs.to_text(alphabet),
    })
}

/// Commutativity and associativity of the shuffle product on forests.
pub fn check_shuffle(alphabet: &DecorationAlphabet, opts: &SuiteOptions) -> SuiteReport {
    let max = opts.max_weight.max(2);
    let tables = TreeTables::new(alphabet.clone(), max);
    let small: Vec<Forest> = (0..=2.min(max))
        .flat_map(|w| all_forests(&tables, w))
        .collect();

    let mut checks = 0;
    let mut failure = None;
    for f1 in &small {
        for f2 in &small {
            checks += 1;
            failure = failure
                .take()
                .or_else(|| shuffle_comm_counterexample(alphabet, f1, f2));
            for f3 in &small {
                checks += 1;
                failure = failure
                    .take()
                    .or_else(|| shuffle_assoc_counterexample(alphabet, f1, f2, f3));
            }
        }
    }

    let random = run_trials(opts, opts.trials, 2, |i| {
        let mut sampler = TreeSampler::for_trial(&tables, opts.seed, 2 * i);
        let mut aux = ChaCha8Rng::seed_from_u64(opts.seed);
        aux.set_stream(2 * i + 1);
        // Keep the interleaving count manageable: total weight is bounded,
        // and each forest length is at most its weight.
        let w1 = aux.random_range(0..=max / 2);
        let w2 = aux.random_range(0..=max.saturating_sub(w1).min(max / 2));
        let w3 = aux.random_range(0..=max.saturating_sub(w1 + w2));
        let f1 = sampler.forest(w1)?;
        let f2 = sampler.forest(w2)?;
        let f3 = sampler.forest(w3)?;
        shuffle_comm_counterexample(alphabet, &f1, &f2)
            .or_else(|| shuffle_assoc_counterexample(alphabet, &f1, &f2, &f3))
    });
    combine("shuffle", (checks, failure), random)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SuiteOptions {
        SuiteOptions {
            max_weight: 5,
            trials: 25,
            seed: 42,
            parallel: false,
        }
    }

    #[test]
    fn prelie_suite_passes() {
        let al = DecorationAlphabet::new(["a"]).unwrap();
        let report = check_prelie(&al, &opts());
        assert!(report.passed(), "{:?}", report.counterexample);
        assert!(report.checks > 0);
    }

    #[test]
    fn nap_suite_passes() {
        let al = DecorationAlphabet::new(["a", "b"]).unwrap();
        let report = check_nap(&al, &opts());
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn brace_suite_passes() {
        let al = DecorationAlphabet::new(["a"]).unwrap();
        let report = check_brace(&al, &opts());
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn e1_suite_passes() {
        let al = DecorationAlphabet::new(["a"]).unwrap();
        let report = check_e1(&al, &opts());
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn shuffle_suite_passes() {
        let al = DecorationAlphabet::new(["a"]).unwrap();
        let report = check_shuffle(&al, &opts());
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn suites_pass_on_graded_alphabets() {
        let al = DecorationAlphabet::with_grades(["a", "b"], vec![1, 2]).unwrap();
        let o = SuiteOptions {
            max_weight: 4,
            trials: 10,
            ..opts()
        };
        assert!(check_prelie(&al, &o).passed());
        assert!(check_nap(&al, &o).passed());
        assert!(check_brace(&al, &o).passed());
        assert!(check_e1(&al, &o).passed());
        assert!(check_shuffle(&al, &o).passed());
    }

    #[test]
    fn parallel_verdict_matches_sequential() {
        let al = DecorationAlphabet::new(["a"]).unwrap();
        let seq = check_nap(
            &al,
            &SuiteOptions {
                parallel: false,
                ..opts()
            },
        );
        let par = check_nap(
            &al,
            &SuiteOptions {
                parallel: true,
                ..opts()
            },
        );
        assert_eq!(seq.checks, par.checks);
        assert_eq!(seq.counterexample, par.counterexample);
    }

    #[test]
    fn counterexample_display_carries_inputs_and_sides() {
        let ce = Counterexample {
            law: "permutative law on rooted trees".into(),
            inputs: vec!["a".into(), "b".into(), "c".into()],
            lhs: "c[a,b]".into(),
            rhs: "c[b,a]".into(),
        };
        let shown = ce.to_string();
        assert!(shown.contains("permutative law"));
        assert!(shown.contains("a ; b ; c"));
        assert!(shown.contains("lhs: c[a,b]"));
        assert!(shown.contains("rhs: c[b,a]"));
    }

    #[test]
    fn detector_fires_on_a_broken_law() {
        // The star is not commutative, so checking it as if it were must
        // produce a counterexample with both sides filled in.
        let al = DecorationAlphabet::new(["a", "b"]).unwrap();
        let tables = TreeTables::new(al.clone(), 1);
        let a = tables.planar(1)[0].clone();
        let b = tables.planar(1)[1].clone();
        let lhs = star_planar(&a, &b);
        let rhs = star_planar(&b, &a);
        let ce = (lhs != rhs).then(|| Counterexample {
            law: "star commutativity (false)".into(),
            inputs: vec![a.serialize(&al), b.serialize(&al)],
            lhs: lhs.to_text(&al),
            rhs: rhs.to_text(&al),
        });
        let ce = ce.expect("the star is order-sensitive");
        assert_eq!(ce.lhs, "b[a]");
        assert_eq!(ce.rhs, "a[b]");
    }
}
