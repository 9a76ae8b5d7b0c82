//! Executable verification suites: group axioms, the action laws, and the
//! structure results, each run exhaustively on small instances and by
//! seeded sampling on larger ones, plus the built-in desk corpus they run
//! over.
//!
//! Every check reports a stable identifier, a pass/fail/skipped status and
//! the number of cases exercised; skipped means the hypothesis of the
//! statement does not apply to the instance (for example sign checks on
//! non-symmetric factors), never that a failure was ignored.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::Result;
use crate::gwp::{FactorSpec, GwpElement, GwpGroup, Limits};
use crate::mingen::{gf2_rank, sign_quotient, unit_sign_witnesses};
use crate::perm::Perm;
use crate::poset::Poset;
use crate::structure::{
    conj_action, conjugate_generation_check, decompose, generating_set_d, generating_set_h,
    h_pair_direct_check, semidirect_witness, subgroup_contains, subgroup_generators, theta,
    theta_inverse, tuple_compose, wreath_witness, SubgroupSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub status: CheckStatus,
    pub cases: u64,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(id: &'static str, cases: u64) -> CheckOutcome {
        CheckOutcome {
            id,
            status: CheckStatus::Pass,
            cases,
            detail: String::new(),
        }
    }

    fn fail(id: &'static str, cases: u64, detail: String) -> CheckOutcome {
        CheckOutcome {
            id,
            status: CheckStatus::Fail,
            cases,
            detail,
        }
    }

    fn skipped(id: &'static str, detail: &str) -> CheckOutcome {
        CheckOutcome {
            id,
            status: CheckStatus::Skipped,
            cases: 0,
            detail: String::from(detail),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Sampling budgets. Axiom checks are exhaustive up to `exhaustive_axioms`
/// group elements, the structure checks up to `exhaustive_lemmas`.
#[derive(Clone, Copy, Debug)]
pub struct CheckBudget {
    pub exhaustive_axioms: u64,
    pub exhaustive_lemmas: u64,
    pub axiom_samples: u64,
    pub lemma_samples: u64,
}

impl Default for CheckBudget {
    fn default() -> Self {
        CheckBudget {
            exhaustive_axioms: 64,
            exhaustive_lemmas: 256,
            axiom_samples: 10_000,
            lemma_samples: 300,
        }
    }
}

/// Element pool: every element when the group is small enough, otherwise
/// the identity, the supported-only generators and random fill.
fn element_pool<R: Rng + ?Sized>(
    g: &GwpGroup,
    cap: u64,
    sample: usize,
    rng: &mut R,
) -> Result<(Vec<GwpElement>, bool)> {
    if let Some(order) = g.theoretical_order_u64()
        && order <= cap
        && order <= g.limits().max_enumeration
    {
        return Ok((g.elements()?, true));
    }
    let mut pool = vec![g.identity()];
    pool.extend(generating_set_h(g)?);
    while pool.len() < sample {
        pool.push(g.random_element(rng));
    }
    Ok((pool, false))
}

fn run<F>(id: &'static str, body: F) -> CheckOutcome
where
    F: FnOnce() -> Result<(bool, u64, String)>,
{
    match body() {
        Ok((true, cases, _)) => CheckOutcome::pass(id, cases),
        Ok((false, cases, detail)) => CheckOutcome::fail(id, cases, detail),
        Err(err) => CheckOutcome::fail(id, 0, format!("errored: {err}")),
    }
}

// ---- group axioms and the action ------------------------------------------------

fn chk_associativity<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("group-axioms-associativity", || {
        let (pool, exhaustive) = element_pool(g, budget.exhaustive_axioms, 12, rng)?;
        let mut cases = 0u64;
        let mut bad = None;
        if exhaustive {
            for a in &pool {
                for b in &pool {
                    let ab = g.multiply(a, b)?;
                    for c in &pool {
                        cases += 1;
                        if g.multiply(&ab, c)? != g.multiply(a, &g.multiply(b, c)?)? {
                            bad = Some(format!("({}, {}, {})", g.format_element(a), g.format_element(b), g.format_element(c)));
                        }
                    }
                }
            }
        } else {
            for _ in 0..budget.axiom_samples {
                cases += 1;
                let a = g.random_element(rng);
                let b = g.random_element(rng);
                let c = g.random_element(rng);
                if g.multiply(&g.multiply(&a, &b)?, &c)? != g.multiply(&a, &g.multiply(&b, &c)?)? {
                    bad = Some(format!("({}, {}, {})", g.format_element(&a), g.format_element(&b), g.format_element(&c)));
                }
            }
        }
        Ok((bad.is_none(), cases, bad.unwrap_or_default()))
    })
}

fn chk_identity<R: Rng + ?Sized>(g: &GwpGroup, budget: &CheckBudget, rng: &mut R) -> CheckOutcome {
    run("group-axioms-identity", || {
        let (pool, _) = element_pool(g, budget.exhaustive_axioms, 24, rng)?;
        let e = g.identity();
        let mut cases = 0u64;
        for f in &pool {
            cases += 1;
            if g.multiply(&e, f)? != *f || g.multiply(f, &e)? != *f {
                return Ok((false, cases, g.format_element(f)));
            }
        }
        for point in g.points()? {
            cases += 1;
            if g.act(&point, &e)? != point {
                return Ok((false, cases, format!("{point:?}")));
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_inverse<R: Rng + ?Sized>(g: &GwpGroup, budget: &CheckBudget, rng: &mut R) -> CheckOutcome {
    run("group-axioms-inverse", || {
        let (pool, _) = element_pool(g, budget.exhaustive_axioms, 24, rng)?;
        let mut cases = 0u64;
        for f in &pool {
            cases += 1;
            let inv = g.invert(f)?;
            if !g.multiply(f, &inv)?.is_identity() || !g.multiply(&inv, f)?.is_identity() {
                return Ok((false, cases, g.format_element(f)));
            }
            if g.as_permutation(&inv)? != g.as_permutation(f)?.inverse() {
                return Ok((false, cases, g.format_element(f)));
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_action_compatibility<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("action-compatibility", || {
        let (pool, exhaustive) = element_pool(g, budget.exhaustive_axioms, 12, rng)?;
        let points = g.points()?;
        let mut cases = 0u64;
        if exhaustive {
            for f in &pool {
                for h in &pool {
                    let fh = g.multiply(f, h)?;
                    for p in &points {
                        cases += 1;
                        if g.act(&g.act(p, f)?, h)? != g.act(p, &fh)? {
                            return Ok((false, cases, format!("{p:?}")));
                        }
                    }
                }
            }
        } else {
            for _ in 0..budget.axiom_samples {
                cases += 1;
                let f = g.random_element(rng);
                let h = g.random_element(rng);
                let p = &points[rng.random_range(0..points.len())];
                if g.act(&g.act(p, &f)?, &h)? != g.act(p, &g.multiply(&f, &h)?)? {
                    return Ok((false, cases, format!("{p:?}")));
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

// ---- projections and equivalences ------------------------------------------------

fn chk_equivalence_preservation<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("equivalence-preservation", || {
        let (pool, _) = element_pool(g, budget.exhaustive_lemmas, 16, rng)?;
        let points = g.points()?;
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            let small = (points.len() * points.len()) as u64 * pool.len() as u64
                <= budget.axiom_samples * 8;
            if small {
                for a in &points {
                    for b in &points {
                        if !g.equiv(a, b, &set)? {
                            continue;
                        }
                        for f in &pool {
                            cases += 1;
                            if !g.equiv(&g.act(a, f)?, &g.act(b, f)?, &set)? {
                                return Ok((false, cases, format!("J={:?}", set.members())));
                            }
                        }
                    }
                }
            } else {
                for _ in 0..budget.lemma_samples {
                    cases += 1;
                    // random equivalent pair: same coordinates inside the set
                    let a = &points[rng.random_range(0..points.len())];
                    let mut coords = a.coords().to_vec();
                    for (i, c) in coords.iter_mut().enumerate() {
                        if !set.contains(i) {
                            *c = rng.random_range(0..g.domains()[i]);
                        }
                    }
                    let b = g.point(coords)?;
                    let f = g.random_element(rng);
                    if !g.equiv(&g.act(a, &f)?, &g.act(&b, &f)?, &set)? {
                        return Ok((false, cases, format!("J={:?}", set.members())));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

/// (δπ_J)(fφ_J) = (δf)π_J for one ancestral set of one group.
fn projection_compatible<R: Rng + ?Sized>(
    g: &GwpGroup,
    set: &crate::poset::AncestralSet,
    pool: &[GwpElement],
    budget: &CheckBudget,
    rng: &mut R,
    cases: &mut u64,
) -> Result<Option<String>> {
    let restricted = g.restrict(set)?;
    let points = g.points()?;
    let mut run_one = |p: &crate::gwp::Point, f: &GwpElement| -> Result<Option<String>> {
        *cases += 1;
        let image = g.project_element(f, set)?;
        let lhs = restricted.act(
            &restricted.point(g.project_point(p, set.members())?)?,
            &image,
        )?;
        let rhs = g.project_point(&g.act(p, f)?, set.members())?;
        if lhs.coords() != rhs.as_slice() {
            return Ok(Some(format!(
                "J={:?}, point {:?}, f={}",
                set.members(),
                p,
                g.format_element(f)
            )));
        }
        Ok(None)
    };
    if points.len() as u64 * pool.len() as u64 <= budget.axiom_samples {
        for p in &points {
            for f in pool {
                if let Some(detail) = run_one(p, f)? {
                    return Ok(Some(detail));
                }
            }
        }
    } else {
        for _ in 0..budget.lemma_samples {
            let p = &points[rng.random_range(0..points.len())];
            let f = g.random_element(rng);
            if let Some(detail) = run_one(p, &f)? {
                return Ok(Some(detail));
            }
        }
    }
    Ok(None)
}

fn chk_projection_compatibility<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("projection-compatibility", || {
        let (pool, _) = element_pool(g, budget.exhaustive_lemmas, 16, rng)?;
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            if let Some(detail) = projection_compatible(g, &set, &pool, budget, rng, &mut cases)? {
                return Ok((false, cases, detail));
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_projection_compatibility_nested<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("projection-compatibility-nested", || {
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            if set.len() == g.index_count() {
                continue;
            }
            let mid = g.restrict(&set)?;
            let (mid_pool, _) = element_pool(&mid, budget.exhaustive_lemmas, 8, rng)?;
            for inner in mid.poset().ancestral_subsets() {
                if let Some(detail) =
                    projection_compatible(&mid, &inner, &mid_pool, budget, rng, &mut cases)?
                {
                    return Ok((false, cases, detail));
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_projection_homomorphism<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("projection-homomorphism", || {
        let (pool, exhaustive) = element_pool(g, budget.exhaustive_lemmas, 16, rng)?;
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            let restricted = g.restrict(&set)?;
            let mut run_one = |f: &GwpElement, h: &GwpElement| -> Result<bool> {
                cases += 1;
                let lhs = g.project_element(&g.multiply(f, h)?, &set)?;
                let rhs = restricted
                    .multiply(&g.project_element(f, &set)?, &g.project_element(h, &set)?)?;
                Ok(lhs == rhs)
            };
            if exhaustive && (pool.len() * pool.len()) as u64 <= budget.axiom_samples {
                for f in &pool {
                    for h in &pool {
                        if !run_one(f, h)? {
                            return Ok((false, cases, format!("J={:?}", set.members())));
                        }
                    }
                }
            } else {
                for _ in 0..budget.lemma_samples {
                    let f = g.random_element(rng);
                    let h = g.random_element(rng);
                    if !run_one(&f, &h)? {
                        return Ok((false, cases, format!("J={:?}", set.members())));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_kernel_subgroup<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("kernel-subgroup", || {
        // For nested ancestral K ⊆ J the kernel of the projection from the
        // J-part onto the K-part is the trivial-on-K predicate set; verify
        // it is a normal subgroup and matches the projection kernel.
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            if set.is_empty() {
                continue;
            }
            let mid = g.restrict(&set)?;
            let (mid_pool, exhaustive) = element_pool(&mid, budget.exhaustive_lemmas, 12, rng)?;
            for inner in mid.poset().ancestral_subsets() {
                let kernel: Vec<GwpElement> = if exhaustive {
                    mid_pool
                        .iter()
                        .filter(|f| mid.kernel_contains(f, &inner).unwrap_or(false))
                        .cloned()
                        .collect()
                } else {
                    // random members: trivialize the inner tables
                    (0..budget.lemma_samples.min(24))
                        .map(|_| {
                            let f = mid.random_element(rng);
                            let mut tables: Vec<Vec<Perm>> =
                                (0..mid.index_count()).map(|i| f.table(i).to_vec()).collect();
                            for &i in inner.members() {
                                for entry in tables[i].iter_mut() {
                                    *entry = Perm::identity(mid.domains()[i]);
                                }
                            }
                            mid.element_from_tables(tables)
                        })
                        .collect::<Result<_>>()?
                };
                for a in &kernel {
                    // projection of kernel members is trivial
                    cases += 1;
                    if !mid.project_element(a, &inner)?.is_identity() {
                        return Ok((false, cases, format!("K={:?}", inner.members())));
                    }
                    for b in kernel.iter().take(8) {
                        cases += 1;
                        if !mid.kernel_contains(&mid.multiply(a, b)?, &inner)? {
                            return Ok((false, cases, String::from("kernel not closed")));
                        }
                    }
                    if !mid.kernel_contains(&mid.invert(a)?, &inner)? {
                        return Ok((false, cases, String::from("kernel not inverse-closed")));
                    }
                    for f in mid_pool.iter().take(8) {
                        cases += 1;
                        if !mid.kernel_contains(&mid.conjugate(a, f)?, &inner)? {
                            return Ok((false, cases, String::from("kernel not normal")));
                        }
                    }
                }
                if exhaustive {
                    // and nothing outside the predicate set projects trivially
                    for f in &mid_pool {
                        cases += 1;
                        let trivial_image = mid.project_element(f, &inner)?.is_identity();
                        if trivial_image != mid.kernel_contains(f, &inner)? {
                            return Ok((false, cases, format!("K={:?}", inner.members())));
                        }
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

// ---- structure: θ, conjugation, splittings ---------------------------------------

fn supported_pool<R: Rng + ?Sized>(
    g: &GwpGroup,
    i: usize,
    budget: &CheckBudget,
    rng: &mut R,
) -> Result<Vec<GwpElement>> {
    let spec = SubgroupSpec::SupportedOnly { i };
    let gens = subgroup_generators(g, &spec)?;
    match g.closure(&gens, budget.exhaustive_lemmas) {
        Ok(members) => Ok(members),
        Err(_) => {
            let mut pool = gens;
            for _ in 0..16 {
                let mut f = g.identity();
                for rank in 0..g.table_size(i) {
                    f = g.multiply(&g.plant(i, rank, g.factor(i).random_element(rng))?, &f)?;
                }
                pool.push(f);
            }
            Ok(pool)
        }
    }
}

fn chk_theta_isomorphism<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("theta-isomorphism", || {
        let mut cases = 0u64;
        for i in 0..g.index_count() {
            let members = supported_pool(g, i, budget, rng)?;
            let mut images = alloc::collections::BTreeSet::new();
            for f in &members {
                cases += 1;
                let t = theta(g, i, f)?;
                if theta_inverse(g, &t)? != *f {
                    return Ok((false, cases, format!("index {i}: not inverse")));
                }
                images.insert(t);
            }
            if images.len() != members.len() {
                return Ok((false, cases, format!("index {i}: not injective")));
            }
            for f in members.iter().take(16) {
                for h in members.iter().take(16) {
                    cases += 1;
                    let lhs = theta(g, i, &g.multiply(f, h)?)?;
                    let rhs = tuple_compose(&theta(g, i, f)?, &theta(g, i, h)?)?;
                    if lhs != rhs {
                        return Ok((false, cases, format!("index {i}: not multiplicative")));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_theta_equivariance<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("theta-equivariance", || {
        let mut cases = 0u64;
        for &i in &g.poset().minimal_elements() {
            let rest = g.poset().ancestral(&g.complement_of(i))?;
            let h_pool = supported_pool(g, i, budget, rng)?;
            let rest_group = g.restrict(&rest)?;
            let (rest_pool, _) = element_pool(&rest_group, budget.exhaustive_lemmas, 12, rng)?;
            for h in h_pool.iter().take(24) {
                for f_sub in rest_pool.iter().take(24) {
                    cases += 1;
                    let f = g.embed_element(&rest, f_sub)?;
                    let lhs = theta(g, i, &g.conjugate(h, &f)?)?;
                    let rhs = conj_action(g, &theta(g, i, h)?, &f)?;
                    if lhs != rhs {
                        return Ok((false, cases, format!("index {i}")));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_conjugation_action_law<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("conjugation-action-law", || {
        let mut cases = 0u64;
        for &i in &g.poset().minimal_elements() {
            let h_pool = supported_pool(g, i, budget, rng)?;
            for _ in 0..budget.lemma_samples.min(60) {
                cases += 1;
                let t = theta(g, i, &h_pool[rng.random_range(0..h_pool.len())])?;
                let f = g.random_element(rng);
                let h = g.random_element(rng);
                let lhs = conj_action(g, &conj_action(g, &t, &f)?, &h)?;
                let rhs = conj_action(g, &t, &g.multiply(&f, &h)?)?;
                if lhs != rhs {
                    return Ok((false, cases, format!("index {i}")));
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_h_normality<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("h-normality", || {
        let (pool, _) = element_pool(g, budget.exhaustive_lemmas, 24, rng)?;
        let mut cases = 0u64;
        for &i in &g.poset().minimal_elements() {
            let spec = SubgroupSpec::SupportedOnly { i };
            let gens = subgroup_generators(g, &spec)?;
            for h in &gens {
                for f in &pool {
                    cases += 1;
                    if !subgroup_contains(g, &spec, &g.conjugate(h, f)?)? {
                        return Ok((false, cases, format!("index {i}")));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_h_pairs_direct(g: &GwpGroup) -> CheckOutcome {
    run("h-pairs-direct-product", || {
        let minimals = g.poset().minimal_elements();
        let mut cases = 0u64;
        for (pos, &i) in minimals.iter().enumerate() {
            for &j in &minimals[pos + 1..] {
                cases += 1;
                if !h_pair_direct_check(g, i, j)? {
                    return Ok((false, cases, format!("indices {i}, {j}")));
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_semidirect<R: Rng + ?Sized>(g: &GwpGroup, budget: &CheckBudget, rng: &mut R) -> CheckOutcome {
    run("semidirect-split", || {
        let mut cases = 0u64;
        for &i in &g.poset().minimal_elements() {
            let report = semidirect_witness(g, i, budget.lemma_samples.min(100), rng)?;
            cases += report.cases;
            if !report.all_ok() {
                return Ok((false, cases, format!("index {i}: {report:?}")));
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_wreath<R: Rng + ?Sized>(g: &GwpGroup, budget: &CheckBudget, rng: &mut R) -> CheckOutcome {
    run("wreath-split", || {
        let mut cases = 0u64;
        for &i in &g.poset().minimal_elements() {
            let report = wreath_witness(g, i, budget.lemma_samples.min(100), rng)?;
            cases += report.cases;
            if !report.all_ok() {
                return Ok((false, cases, format!("index {i}: {report:?}")));
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_decomposition_order(g: &GwpGroup) -> CheckOutcome {
    run("decomposition-order", || {
        let d = decompose(g)?;
        Ok((
            d.order() == &g.theoretical_order(),
            1,
            format!("{:?} vs {:?}", d.order(), g.theoretical_order()),
        ))
    })
}

fn chk_h_generation(g: &GwpGroup) -> CheckOutcome {
    run("h-generation", || {
        let image = g.permutation_group(&generating_set_h(g)?)?;
        Ok((
            image.order() == g.theoretical_order(),
            1,
            format!("{:?} vs {:?}", image.order(), g.theoretical_order()),
        ))
    })
}

fn chk_d_generation(g: &GwpGroup) -> CheckOutcome {
    if !g.all_factors_transitive() {
        // the generating lemma requires transitive factors; the
        // constructor must reject the instance
        return run("d-generation-rejects-intransitive", || {
            Ok((generating_set_d(g).is_err(), 1, String::new()))
        });
    }
    run("d-generation", || {
        let image = g.permutation_group(&generating_set_d(g)?)?;
        Ok((
            image.order() == g.theoretical_order(),
            1,
            format!("{:?} vs {:?}", image.order(), g.theoretical_order()),
        ))
    })
}

fn chk_d_conjugate_generation(g: &GwpGroup) -> CheckOutcome {
    let minimals = g.poset().minimal_elements();
    let applicable: Vec<usize> = minimals
        .iter()
        .copied()
        .filter(|&i| g.upset(i).iter().all(|&j| g.factor(j).is_transitive()))
        .collect();
    if applicable.is_empty() {
        return CheckOutcome::skipped("d-conjugate-generation", "no minimal index with transitive overheads");
    }
    run("d-conjugate-generation", || {
        let mut cases = 0u64;
        for &i in &applicable {
            match conjugate_generation_check(g, i) {
                Ok(true) => cases += 1,
                Ok(false) => return Ok((false, cases, format!("index {i}"))),
                // enumeration too large for this index: skip it
                Err(crate::error::Error::TooLarge { .. }) => continue,
                Err(err) => return Err(err),
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_embed_project_inverse<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    run("embedding-inverts-projection", || {
        let mut cases = 0u64;
        for set in g.poset().ancestral_subsets() {
            let restricted = g.restrict(&set)?;
            let (sub_pool, _) = element_pool(&restricted, budget.exhaustive_lemmas, 12, rng)?;
            let spec = SubgroupSpec::SupportedIn { set: set.clone() };
            for x in &sub_pool {
                cases += 1;
                let lifted = g.embed_element(&set, x)?;
                if !subgroup_contains(g, &spec, &lifted)?
                    || g.project_element(&lifted, &set)? != *x
                {
                    return Ok((false, cases, format!("J={:?}", set.members())));
                }
            }
            // supported-only parts project onto their counterparts
            for &i in set.members() {
                for h in subgroup_generators(g, &SubgroupSpec::SupportedOnly { i })? {
                    cases += 1;
                    let image = g.project_element(&h, &set)?;
                    let i_in_sub = restricted.poset().index_of(g.poset().label(i))?;
                    if !subgroup_contains(
                        &restricted,
                        &SubgroupSpec::SupportedOnly { i: i_in_sub },
                        &image,
                    )? {
                        return Ok((false, cases, format!("J={:?}", set.members())));
                    }
                }
            }
        }
        Ok((true, cases, String::new()))
    })
}

fn chk_transitivity_iff(g: &GwpGroup) -> CheckOutcome {
    run("transitivity-iff-factors", || {
        let image = g.permutation_group(&generating_set_h(g)?)?;
        Ok((
            image.is_transitive() == g.all_factors_transitive(),
            1,
            format!(
                "image transitive: {}, factors transitive: {}",
                image.is_transitive(),
                g.all_factors_transitive()
            ),
        ))
    })
}

fn chk_sign_quotient<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> CheckOutcome {
    if !g.all_factors_symmetric() {
        return CheckOutcome::skipped("sign-quotient", "factors are not all symmetric");
    }
    if g.domains().iter().any(|&d| d < 2) {
        return CheckOutcome::skipped("sign-quotient", "a domain has fewer than two points");
    }
    run("sign-quotient", || {
        let (pool, exhaustive) = element_pool(g, budget.exhaustive_lemmas, 16, rng)?;
        let mut cases = 0u64;
        if exhaustive {
            for f in &pool {
                for h in &pool {
                    cases += 1;
                    let lhs = sign_quotient(g, &g.multiply(f, h)?)?;
                    let rhs = sign_quotient(g, f)?.xor(&sign_quotient(g, h)?);
                    if lhs != rhs {
                        return Ok((false, cases, String::from("not a homomorphism")));
                    }
                }
            }
        } else {
            for _ in 0..budget.lemma_samples {
                cases += 1;
                let f = g.random_element(rng);
                let h = g.random_element(rng);
                let lhs = sign_quotient(g, &g.multiply(&f, &h)?)?;
                let rhs = sign_quotient(g, &f)?.xor(&sign_quotient(g, &h)?);
                if lhs != rhs {
                    return Ok((false, cases, String::from("not a homomorphism")));
                }
            }
        }
        let units = unit_sign_witnesses(g)?;
        let signs = units
            .iter()
            .map(|u| sign_quotient(g, u))
            .collect::<Result<Vec<_>>>()?;
        cases += units.len() as u64;
        Ok((
            gf2_rank(&signs)? == g.index_count(),
            cases,
            String::from("unit witnesses do not span"),
        ))
    })
}

fn chk_subgroup_closures(g: &GwpGroup, budget: &CheckBudget) -> CheckOutcome {
    let small = g
        .theoretical_order_u64()
        .map(|o| o <= budget.exhaustive_lemmas)
        .unwrap_or(false);
    if !small {
        return CheckOutcome::skipped("subgroup-closures", "group too large to enumerate");
    }
    run("subgroup-closures", || {
        let all = g.elements()?;
        let mut cases = 0u64;
        let mut specs: Vec<SubgroupSpec> = Vec::new();
        for i in 0..g.index_count() {
            specs.push(SubgroupSpec::TrivialAt { j: i });
            specs.push(SubgroupSpec::SupportedOnly { i });
            specs.push(SubgroupSpec::anchored_default(i));
        }
        for set in g.poset().ancestral_subsets() {
            specs.push(SubgroupSpec::SupportedIn { set });
        }
        for spec in &specs {
            cases += 1;
            let closure = g.closure(
                &subgroup_generators(g, spec)?,
                g.limits().max_enumeration,
            )?;
            let by_predicate: Vec<GwpElement> = all
                .iter()
                .filter(|f| subgroup_contains(g, spec, f).unwrap_or(false))
                .cloned()
                .collect();
            if closure != by_predicate {
                return Ok((false, cases, format!("{spec:?}")));
            }
        }
        Ok((true, cases, String::new()))
    })
}

/// Run every applicable check suite against one instance.
pub fn run_all_checks<R: Rng + ?Sized>(
    g: &GwpGroup,
    budget: &CheckBudget,
    rng: &mut R,
) -> Vec<CheckOutcome> {
    vec![
        chk_identity(g, budget, rng),
        chk_associativity(g, budget, rng),
        chk_inverse(g, budget, rng),
        chk_action_compatibility(g, budget, rng),
        chk_equivalence_preservation(g, budget, rng),
        chk_projection_compatibility(g, budget, rng),
        chk_projection_compatibility_nested(g, budget, rng),
        chk_projection_homomorphism(g, budget, rng),
        chk_kernel_subgroup(g, budget, rng),
        chk_theta_isomorphism(g, budget, rng),
        chk_theta_equivariance(g, budget, rng),
        chk_conjugation_action_law(g, budget, rng),
        chk_h_normality(g, budget, rng),
        chk_h_pairs_direct(g),
        chk_semidirect(g, budget, rng),
        chk_wreath(g, budget, rng),
        chk_decomposition_order(g),
        chk_h_generation(g),
        chk_d_generation(g),
        chk_d_conjugate_generation(g),
        chk_embed_project_inverse(g, budget, rng),
        chk_transitivity_iff(g),
        chk_sign_quotient(g, budget, rng),
        chk_subgroup_closures(g, budget),
    ]
}

// ---- the desk corpus ---------------------------------------------------------

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    pub group: GwpGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusScope {
    /// Every built-in instance.
    Full,
    /// A fast subset for smoke runs.
    Quick,
    /// Nothing; vacuous pass.
    Empty,
}

fn symmetric_instance(name: &str, labels: &[&str], covers: &[(&str, &str)], domains: Vec<usize>) -> CorpusItem {
    let poset = Poset::from_covers(labels, covers).expect("valid corpus poset");
    let factors = domains.iter().map(|_| FactorSpec::Symmetric).collect();
    CorpusItem {
        name: String::from(name),
        group: GwpGroup::with_limits(poset, domains, factors, Limits::default())
            .expect("valid corpus instance"),
    }
}

fn explicit_instance(
    name: &str,
    labels: &[&str],
    covers: &[(&str, &str)],
    domains: Vec<usize>,
    factors: Vec<FactorSpec>,
) -> CorpusItem {
    let poset = Poset::from_covers(labels, covers).expect("valid corpus poset");
    CorpusItem {
        name: String::from(name),
        group: GwpGroup::with_limits(poset, domains, factors, Limits::default())
            .expect("valid corpus instance"),
    }
}

/// The built-in desk corpus: chains, antichains, the three-element shapes,
/// two four-element posets, plus instances with non-symmetric and
/// intransitive factors and a singleton domain.
pub fn corpus(scope: CorpusScope) -> Vec<CorpusItem> {
    if scope == CorpusScope::Empty {
        return Vec::new();
    }
    let quick = vec![
        symmetric_instance("chain2-2x2", &["a", "b"], &[("a", "b")], vec![2, 2]),
        symmetric_instance("antichain2-2x3", &["a", "b"], &[], vec![2, 3]),
        symmetric_instance(
            "pyramid-2x2x2",
            &["i", "j", "k"],
            &[("i", "k"), ("j", "k")],
            vec![2, 2, 2],
        ),
        symmetric_instance(
            "chain3-2x2x2",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            vec![2, 2, 2],
        ),
        explicit_instance(
            "chain2-intransitive-top",
            &["a", "b"],
            &[("a", "b")],
            vec![2, 3],
            vec![
                FactorSpec::Symmetric,
                FactorSpec::Explicit(vec![Perm::transposition(3, 0, 1).expect("valid")]),
            ],
        ),
    ];
    if scope == CorpusScope::Quick {
        return quick;
    }
    let mut items = quick;
    items.extend([
        symmetric_instance("chain2-3x2", &["a", "b"], &[("a", "b")], vec![3, 2]),
        symmetric_instance("chain2-2x3", &["a", "b"], &[("a", "b")], vec![2, 3]),
        symmetric_instance("chain2-3x3", &["a", "b"], &[("a", "b")], vec![3, 3]),
        symmetric_instance("antichain2-2x2", &["a", "b"], &[], vec![2, 2]),
        symmetric_instance("antichain3-2x2x2", &["a", "b", "c"], &[], vec![2, 2, 2]),
        symmetric_instance("antichain3-2x3x2", &["a", "b", "c"], &[], vec![2, 3, 2]),
        symmetric_instance(
            "chain3-2x2x3",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            vec![2, 2, 3],
        ),
        symmetric_instance(
            "chain3-3x2x2",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            vec![3, 2, 2],
        ),
        symmetric_instance(
            "chain3-3x3x3",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            vec![3, 3, 3],
        ),
        symmetric_instance(
            "triangle-2x2x2",
            &["i", "j", "k"],
            &[("i", "j"), ("i", "k")],
            vec![2, 2, 2],
        ),
        symmetric_instance(
            "triangle-2x2x3",
            &["i", "j", "k"],
            &[("i", "j"), ("i", "k")],
            vec![2, 2, 3],
        ),
        symmetric_instance(
            "pyramid-3x2x2",
            &["i", "j", "k"],
            &[("i", "k"), ("j", "k")],
            vec![3, 2, 2],
        ),
        symmetric_instance(
            "one-relation-2x2x2",
            &["i", "j", "k"],
            &[("i", "k")],
            vec![2, 2, 2],
        ),
        symmetric_instance(
            "one-relation-2x3x3",
            &["i", "j", "k"],
            &[("i", "k")],
            vec![2, 3, 3],
        ),
        symmetric_instance(
            "two-chains-2x2x2x2",
            &["a", "b", "c", "d"],
            &[("a", "b"), ("c", "d")],
            vec![2, 2, 2, 2],
        ),
        symmetric_instance(
            "diamond-2x2x2x2",
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
            vec![2, 2, 2, 2],
        ),
        symmetric_instance("singleton-domain", &["a", "b"], &[], vec![1, 2]),
        explicit_instance(
            "chain2-cyclic-bottom",
            &["a", "b"],
            &[("a", "b")],
            vec![4, 2],
            vec![
                FactorSpec::Explicit(vec![Perm::full_cycle(4)]),
                FactorSpec::Symmetric,
            ],
        ),
    ]);
    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn corpus_sizes() {
        assert!(corpus(CorpusScope::Full).len() >= 20);
        assert!(!corpus(CorpusScope::Quick).is_empty());
        assert!(corpus(CorpusScope::Empty).is_empty());
    }

    #[test]
    fn quick_corpus_passes_all_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let budget = CheckBudget {
            axiom_samples: 500,
            lemma_samples: 60,
            ..CheckBudget::default()
        };
        for item in corpus(CorpusScope::Quick) {
            for outcome in run_all_checks(&item.group, &budget, &mut rng) {
                assert!(
                    !outcome.failed(),
                    "{}: {} failed: {}",
                    item.name,
                    outcome.id,
                    outcome.detail
                );
            }
        }
    }

    #[test]
    fn intransitive_factor_flips_the_transitivity_check() {
        let item = corpus(CorpusScope::Quick)
            .into_iter()
            .find(|item| item.name == "chain2-intransitive-top")
            .unwrap();
        assert!(!item.group.all_factors_transitive());
        let outcome = chk_transitivity_iff(&item.group);
        assert_eq!(outcome.status, CheckStatus::Pass);
        let image = item
            .group
            .permutation_group(&generating_set_h(&item.group).unwrap())
            .unwrap();
        assert!(!image.is_transitive());
    }
}
