//! Products on trees: pre-Lie, brace, NAP star, and shuffle.
//!
//! All maps are defined on basis trees and extended (bi/multi)linearly. The
//! brace product follows the interval-splitting recursion: grafting
//! arguments `x_1..x_k` over a target `B_d(s_1..s_m)` sums over every way of
//! cutting the argument list into consecutive, possibly empty blocks
//! `A_0, B_1, A_1, .., B_m, A_m`; block `A_j` contributes root children in
//! place, block `B_i` is grafted recursively over `s_i`:
//!
//! ```text
//! <x_1..x_k; B_d(s_1..s_m)> =
//!     sum B_d(A_0, <B_1; s_1>, A_1, .., <B_m; s_m>, A_m)
//! ```
//!
//! At `k = 1` this reduces to the two-part induction for the pre-Lie product
//! on planar trees (insert at a root gap, or recurse into one subtree).

use num_rational::BigRational;
use num_traits::One;

use crate::lincomb::{bilinear_extend, LinComb};
use crate::tree::{Forest, PlanarTree, RootedTree};

/// Pre-Lie product on rooted trees: grafts `t1` as a new child of each
/// vertex of `t2`. Grafts landing on symmetric vertices merge, so
/// coefficients above 1 arise; total multiplicity is the vertex count of
/// `t2`.
pub fn prelie_rooted(t1: &RootedTree, t2: &RootedTree) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    let mut at_root = t2.children().to_vec();
    at_root.push(t1.clone());
    out.add_term(
        RootedTree::from_parts(t2.decoration(), t2.root_grade(), at_root),
        BigRational::one(),
    );
    for (i, child) in t2.children().iter().enumerate() {
        for (grafted, c) in prelie_rooted(t1, child).into_terms() {
            let mut children = t2.children().to_vec();
            children[i] = grafted;
            out.add_term(
                RootedTree::from_parts(t2.decoration(), t2.root_grade(), children),
                c,
            );
        }
    }
    out
}

/// Brace product `<args; target>` on planar trees. `brace(&[], t)` is `t`
/// itself; every coefficient is a positive integer.
pub fn brace(args: &[PlanarTree], target: &PlanarTree) -> LinComb<PlanarTree> {
    if args.is_empty() {
        return LinComb::basis(target.clone());
    }
    let subs = target.children();
    let mut out = LinComb::zero();
    let mut cuts = vec![0usize; 2 * subs.len()];
    splittings(0, args.len(), &mut cuts, &mut |cuts| {
        // Children before the first grafted slot.
        let prefix: Vec<PlanarTree> = args[..cuts.first().copied().unwrap_or(args.len())].to_vec();
        let mut assembled = LinComb::basis_children(prefix);
        for (i, s) in subs.iter().enumerate() {
            let grafted = brace(&args[cuts[2 * i]..cuts[2 * i + 1]], s);
            let gap_end = cuts.get(2 * i + 2).copied().unwrap_or(args.len());
            let gap = &args[cuts[2 * i + 1]..gap_end];
            assembled = assembled.extend_children(&grafted, gap);
        }
        for (children, c) in assembled.into_terms() {
            out.add_term(
                PlanarTree::from_parts(target.decoration(), target.root_grade(), children.0),
                c,
            );
        }
    });
    out
}

/// Ordered child lists under construction, kept as a combination so grafted
/// slots expand multilinearly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct ChildList(Vec<PlanarTree>);

impl LinComb<ChildList> {
    fn basis_children(children: Vec<PlanarTree>) -> Self {
        LinComb::basis(ChildList(children))
    }

    fn extend_children(self, slot: &LinComb<PlanarTree>, then: &[PlanarTree]) -> Self {
        let mut out = LinComb::zero();
        for (list, c) in self.into_terms() {
            for (t, ct) in slot.terms() {
                let mut next = list.0.clone();
                next.push(t.clone());
                next.extend(then.iter().cloned());
                out.add_term(ChildList(next), &c * ct);
            }
        }
        out
    }
}

/// Emits every non-decreasing tuple filling `cuts` with values in `0..=k`.
pub(crate) fn splittings(
    pos: usize,
    k: usize,
    cuts: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if pos == cuts.len() {
        emit(cuts);
        return;
    }
    let lo = if pos == 0 { 0 } else { cuts[pos - 1] };
    for c in lo..=k {
        cuts[pos] = c;
        splittings(pos + 1, k, cuts, emit);
    }
}

/// Pre-Lie product on planar trees, the one-argument brace.
pub fn prelie_planar(t1: &PlanarTree, t2: &PlanarTree) -> LinComb<PlanarTree> {
    brace(std::slice::from_ref(t1), t2)
}

/// NAP star on planar trees: inserts `t` at each of the `n+1` gaps between
/// the root children of `t2`. Equal insertions merge; total multiplicity is
/// always `n+1`.
pub fn star_planar(t: &PlanarTree, t2: &PlanarTree) -> LinComb<PlanarTree> {
    let mut out = LinComb::zero();
    for i in 0..=t2.root_fertility() {
        let mut children = t2.children().to_vec();
        children.insert(i, t.clone());
        out.add_term(
            PlanarTree::from_parts(t2.decoration(), t2.root_grade(), children),
            BigRational::one(),
        );
    }
    out
}

/// NAP star on rooted trees: grafts `t1` on the root of `t2`. A single tree,
/// no sum.
pub fn star_rooted(t1: &RootedTree, t2: &RootedTree) -> RootedTree {
    let mut children = t2.children().to_vec();
    children.push(t1.clone());
    RootedTree::from_parts(t2.decoration(), t2.root_grade(), children)
}

/// Shuffle product of forests: all order-preserving interleavings, with
/// binomial(|f1|+|f2|, |f1|) total multiplicity.
pub fn shuffle(f1: &Forest, f2: &Forest) -> LinComb<Forest> {
    fn interleave(
        xs: &[PlanarTree],
        ys: &[PlanarTree],
        acc: &mut Vec<PlanarTree>,
        out: &mut LinComb<Forest>,
    ) {
        if xs.is_empty() && ys.is_empty() {
            out.add_term(Forest::new(acc.clone()), BigRational::one());
            return;
        }
        if let Some((head, rest)) = xs.split_first() {
            acc.push(head.clone());
            interleave(rest, ys, acc, out);
            acc.pop();
        }
        if let Some((head, rest)) = ys.split_first() {
            acc.push(head.clone());
            interleave(xs, rest, acc, out);
            acc.pop();
        }
    }
    let mut out = LinComb::zero();
    interleave(f1.trees(), f2.trees(), &mut Vec::new(), &mut out);
    out
}

/// Bilinear extension of [`prelie_rooted`].
pub fn prelie_rooted_comb(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    bilinear_extend(prelie_rooted, x, y)
}

/// Bilinear extension of [`prelie_planar`].
pub fn prelie_planar_comb(x: &LinComb<PlanarTree>, y: &LinComb<PlanarTree>) -> LinComb<PlanarTree> {
    bilinear_extend(prelie_planar, x, y)
}

/// Bilinear extension of [`star_planar`].
pub fn star_planar_comb(x: &LinComb<PlanarTree>, y: &LinComb<PlanarTree>) -> LinComb<PlanarTree> {
    bilinear_extend(star_planar, x, y)
}

/// Bilinear extension of [`star_rooted`].
pub fn star_rooted_comb(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    bilinear_extend(|a, b| LinComb::basis(star_rooted(a, b)), x, y)
}

/// Multilinear extension of [`brace`] to combinations in every slot.
pub fn brace_comb(
    args: &[LinComb<PlanarTree>],
    target: &LinComb<PlanarTree>,
) -> LinComb<PlanarTree> {
    fn expand(
        args: &[LinComb<PlanarTree>],
        chosen: &mut Vec<PlanarTree>,
        scale: BigRational,
        target: &LinComb<PlanarTree>,
        out: &mut LinComb<PlanarTree>,
    ) {
        match args.split_first() {
            None => {
                for (t, ct) in target.terms() {
                    for (u, cu) in brace(chosen, t).into_terms() {
                        out.add_term(u, &scale * ct * cu);
                    }
                }
            }
            Some((first, rest)) => {
                for (a, ca) in first.terms() {
                    chosen.push(a.clone());
                    expand(rest, chosen, &scale * ca, target, out);
                    chosen.pop();
                }
            }
        }
    }
    let mut out = LinComb::zero();
    expand(args, &mut Vec::new(), BigRational::one(), target, &mut out);
    out
}
