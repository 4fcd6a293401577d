//! Avoidance families over the groups of order 6.

use std::collections::HashSet;

use super::{
    avoid_on, cycle_excess, first_decomposition, fundamental_masks, guarantee_met, needed, require_forbidden_len,
    single_vertex_flows, xor_into, Certificates, FlowFamily, Provenance,
};
use crate::bounds::{ceil_pow2, ceil_pow2_ratio};
use crate::cubic::{project_family, reduce_to_cubic};
use crate::decomposition::{decomposition_containing_cycle_unchecked, enumerate_decompositions, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::flow::{elementary_flow, ForbiddenAssignment, GroupFlow};
use crate::graph::{Cycle, EdgeSet, Multigraph};
use crate::group::{GroupElement, GroupSpec};
use crate::peripheral::{
    is_peripheral, longest_peripheral_cycle, peripheral_cycle_through_unchecked, require_cubic_3ec,
};

/// How an order-6 group is written: `Z6`, `Z2xZ3` or `Z3xZ2`.
#[derive(Clone, Copy, Debug)]
enum Layout {
    Cyclic,
    TwoThree,
    ThreeTwo,
}

impl Layout {
    fn of(spec: &GroupSpec) -> Result<Self> {
        match spec.moduli() {
            [6] => Ok(Layout::Cyclic),
            [2, 3] => Ok(Layout::TwoThree),
            [3, 2] => Ok(Layout::ThreeTwo),
            _ => precondition(format!("group {spec} is not Z6, Z2xZ3 or Z3xZ2")),
        }
    }

    /// `(Z2 part, Z3 part)`; for `Z6` this is `x -> (x mod 2, x mod 3)`.
    fn split(self, e: &GroupElement) -> (u32, u32) {
        let r = e.residues();
        match self {
            Layout::Cyclic => (r[0] % 2, r[0] % 3),
            Layout::TwoThree => (r[0], r[1]),
            Layout::ThreeTwo => (r[1], r[0]),
        }
    }

    /// Inverse of `split`; for `Z6`, `(a, b) -> 3a + 4b mod 6`.
    fn join(self, spec: &GroupSpec, a: u32, b: u32) -> GroupElement {
        let residues = match self {
            Layout::Cyclic => vec![(3 * a + 4 * b) % 6],
            Layout::TwoThree => vec![a, b],
            Layout::ThreeTwo => vec![b, a],
        };
        spec.element(&residues).expect("residues are reduced")
    }
}

/// A Z2xZ3 assignment as separate coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Pair {
    two: Vec<u32>,
    three: Vec<u32>,
}

struct Target<'a> {
    layout: Layout,
    spec: &'a GroupSpec,
    f1: Vec<u32>,
    f2: Vec<u32>,
}

impl Target<'_> {
    fn new<'a>(spec: &'a GroupSpec, values: &[GroupElement]) -> Result<Target<'a>> {
        let layout = Layout::of(spec)?;
        let (f1, f2) = values.iter().map(|v| layout.split(v)).unzip();
        Ok(Target { layout, spec, f1, f2 })
    }

    fn to_flow(&self, p: &Pair) -> GroupFlow {
        let values = p.two.iter().zip(&p.three).map(|(&a, &b)| self.layout.join(self.spec, a, b)).collect();
        GroupFlow { spec: self.spec.clone(), values }
    }
}

fn residues(phi: &GroupFlow) -> Vec<u32> {
    phi.values.iter().map(|v| v.residues()[0]).collect()
}

/// Z2 parts for every `S` with `B' ⊆ S ⊆ B' ∪ A`, each paired with `three`.
/// `B'` holds the base edges outside `A` where `f1` is 0; the Z2 part is the
/// sum of the fundamental cycles of `S`.
fn subset_family(
    g: &Multigraph,
    d: &Decomposition,
    three: &[u32],
    a: &[usize],
    target: &Target,
    limit: usize,
) -> Result<Vec<Pair>> {
    let in_a = EdgeSet::from_iter(a.iter().copied());
    let fixed: Vec<usize> = d.base.iter().filter(|&e| !in_a.contains(e) && target.f1[e] == 0).collect();
    let m = g.edge_count();
    let mut start = vec![false; m];
    for mask in fundamental_masks(g, &d.tree, &fixed)? {
        xor_into(&mut start, &mask);
    }
    let free = fundamental_masks(g, &d.tree, a)?;
    let available = if a.len() >= 63 { usize::MAX } else { 1usize << a.len() };
    let mut out = Vec::new();
    for index in 0..available.min(limit) {
        let mut mask = start.clone();
        for (i, c) in free.iter().enumerate() {
            if index >> i & 1 == 1 {
                xor_into(&mut mask, c);
            }
        }
        out.push(Pair { two: mask.iter().map(|&b| u32::from(b)).collect(), three: three.to_vec() });
    }
    Ok(out)
}

/// Z3 flow avoiding `f2` on the tree side.
fn three_part(g: &Multigraph, d: &Decomposition, certs: &Certificates, target: &Target) -> Result<Vec<u32>> {
    let z3 = GroupSpec::cyclic(3);
    let phi = avoid_on(g, &certs.base, &z3, &d.tree, |e| z3.decode(u64::from(target.f2[e])))?;
    Ok(residues(&phi))
}

/// Z2 flow avoiding `f1` on the base side.
fn two_part(g: &Multigraph, d: &Decomposition, certs: &Certificates, target: &Target) -> Result<Vec<u32>> {
    let z2 = GroupSpec::cyclic(2);
    let psi = avoid_on(g, &certs.tree, &z2, &d.base, |e| z2.decode(u64::from(target.f1[e])))?;
    Ok(residues(&psi))
}

/// Flows from a decomposition whose base contains the peripheral cycle `c`.
fn cycle_family(g: &Multigraph, c: &Cycle, target: &Target, limit: usize) -> Result<Vec<Pair>> {
    let d = decomposition_containing_cycle_unchecked(g, c)?;
    let certs = Certificates::new(g, &d)?;
    let mut three = three_part(g, &d, &certs, target)?;
    // shift around c so at least two thirds of its edges miss f2
    let z3 = GroupSpec::cyclic(3);
    let rho = residues(&elementary_flow(g, c, &z3.decode(1), &z3));
    let missing = |shift: u32| c.edges().filter(|&e| (three[e] + shift * rho[e]) % 3 != target.f2[e]).count();
    let best = (0..3).max_by_key(|&s| (missing(s), std::cmp::Reverse(s))).expect("three shifts");
    for e in c.edges() {
        three[e] = (three[e] + best * rho[e]) % 3;
    }
    let a: Vec<usize> = c.edges().filter(|&e| three[e] != target.f2[e]).collect();
    if 3 * a.len() < 2 * c.len() {
        return Err(Error::Internal("best shift around the cycle misses fewer than two thirds of f".into()));
    }
    subset_family(g, &d, &three, &a, target, limit)
}

fn finish(pairs: Vec<Pair>, target: &Target, map: Option<&crate::cubic::ReductionMap>) -> Result<Vec<GroupFlow>> {
    let flows: Vec<GroupFlow> = pairs.iter().map(|p| target.to_flow(p)).collect();
    match map {
        Some(map) => project_family(map, &flows),
        None => Ok(flows),
    }
}

/// At least `⌈2^(2q/3)⌉` flows avoiding `f` on a cubic 3-edge-connected
/// graph with a peripheral cycle `c` of length `q`, over `Z6`, `Z2xZ3` or
/// `Z3xZ2`. Stops at `max(target, guarantee)` flows.
pub fn avoid_z6_peripheral(g: &Multigraph, c: &Cycle, f: &ForbiddenAssignment, target: usize) -> Result<FlowFamily> {
    require_cubic_3ec(g)?;
    c.check(g)?;
    if !is_peripheral(g, &c.edge_set()) {
        return precondition("cycle is not peripheral");
    }
    require_forbidden_len(f, g)?;
    let split = Target::new(&f.spec, &f.values)?;
    let guarantee = ceil_pow2_ratio(2 * c.len() as u64, 3);
    let pairs = cycle_family(g, c, &split, needed(target, guarantee))?;
    let flows = finish(pairs, &split, None)?;
    guarantee_met(flows.len(), guarantee)?;
    Ok(FlowFamily {
        spec: f.spec.clone(),
        flows,
        guarantee,
        provenance: Provenance::PeripheralCycleAvoidance,
        forbidden: Some(f.clone()),
    })
}

/// Knobs for [`avoid_z6`].
#[derive(Clone, Debug)]
pub struct Z6Options {
    /// stop after this many flows, or at the guarantee if that is larger
    pub target: usize,
    /// permutes the decomposition search
    pub seed: u64,
    /// most decompositions enumerated
    pub decomposition_budget: usize,
    /// cycle budget for the exhaustive longest peripheral cycle search
    pub cycle_budget: usize,
    /// fail rather than enumerate fewer decompositions than the counting
    /// argument asks for
    pub strict: bool,
    /// skip the long-cycle branch
    pub force_decompositions: bool,
}

impl Default for Z6Options {
    fn default() -> Self {
        Z6Options {
            target: 0,
            seed: 0,
            decomposition_budget: 100_000,
            cycle_budget: 200_000,
            strict: false,
            force_decompositions: false,
        }
    }
}

/// `√ℓ / log ℓ`, logarithm base 2.
fn exponent(excess: i64) -> f64 {
    let l = excess as f64;
    l.sqrt() / l.log2()
}

/// The promised count: `⌈2^(√ℓ/log ℓ)⌉` when `ℓ >= 11`, else 1.
pub(crate) fn z6_guarantee(excess: i64) -> u64 {
    if excess >= 11 {
        ceil_pow2(exponent(excess))
    } else {
        1
    }
}

/// Flows differing from `f` on every edge of a 3-edge-connected graph over
/// `Z6`, `Z2xZ3` or `Z3xZ2`.
///
/// With `ℓ = m - n >= 11`: a peripheral cycle of length at least
/// `1.5 √ℓ / log ℓ` gives the family directly. Otherwise decompositions are
/// enumerated; one whose Z3 part misses `f2` on many base edges is expanded
/// over subsets, and failing that each decomposition contributes one pair.
/// With `ℓ < 11` a single decomposition gives one flow.
pub fn avoid_z6(g: &Multigraph, f: &ForbiddenAssignment, options: &Z6Options) -> Result<FlowFamily> {
    require_forbidden_len(f, g)?;
    Layout::of(&f.spec)?;
    let excess = cycle_excess(g);
    let guarantee = z6_guarantee(excess);
    let limit = needed(options.target, guarantee);
    let family = |flows: Vec<GroupFlow>, provenance| -> Result<FlowFamily> {
        guarantee_met(flows.len(), guarantee)?;
        Ok(FlowFamily { spec: f.spec.clone(), flows, guarantee, provenance, forbidden: Some(f.clone()) })
    };
    if g.vertex_count() == 1 {
        return family(single_vertex_flows(g, &f.spec, &f.values, limit), Provenance::SingleVertex);
    }
    let map = reduce_to_cubic(g)?;
    let cubic = &map.cubic;
    // forest edges are extended with zero
    let target = Target::new(&f.spec, &map.extend_to_cubic(&f.values, f.spec.zero()))?;

    if excess < 11 {
        let d = first_decomposition(cubic)?;
        let certs = Certificates::new(cubic, &d)?;
        let pair = Pair { two: two_part(cubic, &d, &certs, &target)?, three: three_part(cubic, &d, &certs, &target)? };
        return family(finish(vec![pair], &target, Some(&map))?, Provenance::SingleDecomposition);
    }

    let threshold = exponent(excess);
    if !options.force_decompositions {
        let at = cubic.incident(0);
        let mut c = peripheral_cycle_through_unchecked(cubic, 0, at[0].0, at[1].0)?;
        if (c.len() as f64) < 1.5 * threshold {
            c = longest_peripheral_cycle(cubic, options.cycle_budget)?.0;
        }
        if c.len() as f64 >= 1.5 * threshold {
            let pairs = cycle_family(cubic, &c, &target, limit)?;
            return family(finish(pairs, &target, Some(&map))?, Provenance::PeripheralCycleAvoidance);
        }
    }

    // 2^(2ℓ/2q) decompositions with q = 1.5 √ℓ / log ℓ
    let l = excess as f64;
    let paper_count = ceil_pow2(2.0 / 3.0 * l.sqrt() * l.log2());
    let budget = options.decomposition_budget as u64;
    if options.strict && paper_count > budget {
        return Err(Error::BudgetExceeded(format!(
            "{paper_count} decompositions required, budget {}",
            options.decomposition_budget
        )));
    }
    let cap = paper_count.min(budget) as usize;
    let mut request = cap.min(limit.saturating_mul(4).max(64));
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seen = HashSet::new();
    let mut tried = HashSet::new();
    loop {
        let decompositions = enumerate_decompositions(cubic, 0, request, options.seed)?;
        for d in &decompositions {
            if !tried.insert(d.base.clone()) {
                continue;
            }
            let certs = Certificates::new(cubic, d)?;
            let three = three_part(cubic, d, &certs, &target)?;
            let a: Vec<usize> = d.base.iter().filter(|&e| three[e] != target.f2[e]).collect();
            if a.len() as f64 >= threshold {
                let expanded = subset_family(cubic, d, &three, &a, &target, limit)?;
                return family(finish(expanded, &target, Some(&map))?, Provenance::DecompositionAvoidance);
            }
            let pair = Pair { two: two_part(cubic, d, &certs, &target)?, three };
            if seen.insert(pair.clone()) {
                pairs.push(pair);
                if pairs.len() >= limit {
                    return family(finish(pairs, &target, Some(&map))?, Provenance::DecompositionAvoidance);
                }
            }
        }
        if decompositions.len() < request || request >= cap {
            break;
        }
        request = cap.min(request.saturating_mul(2));
    }
    if (pairs.len() as u64) < guarantee && (cap as u64) < paper_count {
        return Err(Error::BudgetExceeded(format!("{} decompositions gave {} flows", tried.len(), pairs.len())));
    }
    family(finish(pairs, &target, Some(&map))?, Provenance::DecompositionAvoidance)
}
