//! The paper-reproduction suite: one row per claim, each comparing freshly
//! computed structures against golden constants. Corrupting any golden
//! value flips the corresponding row to FAIL.

use congkit::algebra::{ideal_lattice, SemigroupAlgebra};
use congkit::correspondence::{build_phi_context, f_of_alpha, rho};
use congkit::gf::{self, PrimeField};
use congkit::relations::{
    self, as_relation, enumerate_partitions, is_permutable, BinaryRelation, Partition,
};
use congkit::semigroup::{build, FamilySpec};
use congkit::{Error, Guards, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowResult {
    pub index: usize,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub timing_ms: u64,
}

type RowFn = fn(&[u64], &Guards) -> Result<(bool, String)>;

struct Row {
    name: &'static str,
    run: RowFn,
}

const ROWS: &[Row] = &[
    Row {
        name: "two-element semilattice: 4 ideals forming a diamond",
        run: row_semilattice_ideals,
    },
    Row {
        name: "F2[C4]: 5-ideal chain with the named nodes",
        run: row_gf2_cyclic4_chain,
    },
    Row {
        name: "F3[C4]: join-compatibility fails with the span witness",
        run: row_gf3_cyclic4_failure,
    },
    Row {
        name: "F2[C4]: join-compatibility and circ-homomorphism hold",
        run: row_gf2_cyclic4_checks,
    },
    Row {
        name: "right/left zero pair: 3-ideal chain, kernel classes, all checks",
        run: row_zero_semigroups,
    },
    Row {
        name: "2x2 band: six ideals, generators, lattice, kernel classes",
        run: row_band,
    },
    Row {
        name: "permutability verdicts across the families",
        run: row_permutability,
    },
    Row {
        name: "corollaries: circ-homomorphism iff the size bounds hold",
        run: row_corollaries,
    },
    Row {
        name: "property suites (rho∘F, meet-hom, dims, counts, assoc, theta)",
        run: row_property_suites,
    },
];

/// Run every verification row over the given primes.
pub fn run_all(primes: &[u64], guards: &Guards) -> Vec<RowResult> {
    ROWS.iter()
        .enumerate()
        .map(|(i, row)| {
            let start = std::time::Instant::now();
            let (pass, detail) = match (row.run)(primes, guards) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            RowResult {
                index: i + 1,
                name: row.name.to_string(),
                pass,
                detail,
                timing_ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}

fn algebra(spec: FamilySpec, p: u64) -> Result<SemigroupAlgebra> {
    Ok(SemigroupAlgebra::new(build(spec)?, PrimeField::new(p)?))
}

fn expect(cond: bool, what: &str, failures: &mut Vec<String>) {
    if !cond {
        failures.push(what.to_string());
    }
}

fn finish(failures: Vec<String>, detail: String) -> (bool, String) {
    if failures.is_empty() {
        (true, detail)
    } else {
        (false, failures.join("; "))
    }
}

fn row_semilattice_ideals(primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for &p in primes {
        let a = algebra(FamilySpec::TwoElementSemilattice, p)?;
        let ideals = a.enumerate_ideals(guards)?;
        let bases: Vec<Vec<Vec<u64>>> =
            ideals.iter().map(|i| i.space().basis().to_vec()).collect();
        let golden = vec![
            vec![],
            vec![vec![1, 0]],
            vec![vec![1, p - 1]],
            vec![vec![1, 0], vec![0, 1]],
        ];
        expect(bases == golden, &format!("p={p}: ideal bases"), &mut failures);
        let edges = ideal_lattice(&ideals)?;
        expect(
            edges == vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            &format!("p={p}: diamond shape"),
            &mut failures,
        );
    }
    Ok(finish(failures, format!("4 ideals, diamond, p ∈ {primes:?}")))
}

fn row_gf2_cyclic4_chain(_primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let a = algebra(FamilySpec::CyclicGroup(4), 2)?;
    let ideals = a.enumerate_ideals(guards)?;
    let dims: Vec<usize> = ideals.iter().map(|i| i.dim()).collect();
    expect(dims == vec![0, 1, 2, 3, 4], "dims 0..4", &mut failures);
    let edges = ideal_lattice(&ideals)?;
    expect(
        edges == vec![(0, 1), (1, 2), (2, 3), (3, 4)],
        "chain covers",
        &mut failures,
    );
    if ideals.len() == 5 {
        let principal = a.ideal_closure(&[a.element(vec![1, 1, 1, 1])])?;
        expect(
            ideals[1] == principal,
            "dim-1 node = closure(1+a+a²+a³)",
            &mut failures,
        );
        let alpha_c2 = Partition::from_labels(&[0, 1, 0, 1]);
        expect(
            ideals[2] == f_of_alpha(&a, &alpha_c2)?,
            "dim-2 node = F[alpha_C2]",
            &mut failures,
        );
        expect(
            ideals[3] == f_of_alpha(&a, &Partition::universal(4))?,
            "dim-3 node = F[omega]",
            &mut failures,
        );
    }
    Ok(finish(failures, "5 ideals 0..4 matching the figure".into()))
}

fn row_gf3_cyclic4_failure(_primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let a = algebra(FamilySpec::CyclicGroup(4), 3)?;
    let i = a.ideal_from_space(gf::rref(
        a.field(),
        4,
        &[a.element(vec![1, 0, 1, 0]), a.element(vec![0, 1, 0, 1])],
    )?)?;
    let j = a.ideal_from_space(gf::rref(
        a.field(),
        4,
        &[
            a.element(vec![1, 1, 0, 0]),
            a.element(vec![0, 1, 1, 0]),
            a.element(vec![0, 0, 1, 1]),
        ],
    )?)?;
    let rho_i = rho(&a, &i)?;
    let rho_j = rho(&a, &j)?;
    let joined = relations::join(&rho_i, &rho_j)?;
    expect(
        joined == Partition::from_labels(&[0, 1, 0, 1]),
        "rho(I) ∨ rho(J) = {1,a²}{a,a³}",
        &mut failures,
    );
    let sum = a.ideal_sum(&i, &j)?;
    expect(
        rho(&a, &sum)? == Partition::universal(4),
        "rho(I+J) = omega",
        &mut failures,
    );
    let ctx = build_phi_context(a, guards)?;
    let join_report = ctx.check_join_compatible_kernel()?;
    expect(!join_report.verdict, "join check verdict FALSE", &mut failures);
    let witness_hit = join_report.witnesses.iter().any(|w| {
        w.left.basis.as_deref() == Some(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1]][..])
            && w.right.basis.as_deref()
                == Some(&[vec![1, 0, 0, 1], vec![0, 1, 0, 2], vec![0, 0, 1, 1]][..])
    });
    expect(witness_hit, "witness pair (I, J) reported", &mut failures);
    expect(
        !ctx.check_circ_homomorphism()?.verdict,
        "circ check verdict FALSE",
        &mut failures,
    );
    Ok(finish(
        failures,
        "∨-compatibility fails over F3 with the span witness".into(),
    ))
}

fn row_gf2_cyclic4_checks(_primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let ctx = build_phi_context(algebra(FamilySpec::CyclicGroup(4), 2)?, guards)?;
    expect(
        ctx.check_join_compatible_kernel()?.verdict,
        "join check TRUE",
        &mut failures,
    );
    expect(
        ctx.check_circ_homomorphism()?.verdict,
        "circ check TRUE",
        &mut failures,
    );
    Ok(finish(failures, "both checks hold over F2".into()))
}

fn row_zero_semigroups(primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for spec in [FamilySpec::RightZero(2), FamilySpec::LeftZero(2)] {
        for &p in primes {
            let tag = format!("{spec:?} p={p}");
            let ctx = build_phi_context(algebra(spec.clone(), p)?, guards)?;
            let bases: Vec<Vec<Vec<u64>>> = ctx
                .ideals()
                .iter()
                .map(|i| i.space().basis().to_vec())
                .collect();
            let golden = vec![
                vec![],
                vec![vec![1, p - 1]],
                vec![vec![1, 0], vec![0, 1]],
            ];
            expect(bases == golden, &format!("{tag}: 3-ideal chain"), &mut failures);
            expect(
                ideal_lattice(ctx.ideals())? == vec![(0, 1), (1, 2)],
                &format!("{tag}: chain covers"),
                &mut failures,
            );
            expect(
                ctx.kernel_classes() == vec![vec![0], vec![1, 2]],
                &format!("{tag}: kernel classes"),
                &mut failures,
            );
            expect(
                ctx.check_meet_homomorphism()?.verdict
                    && ctx.check_join_compatible_kernel()?.verdict
                    && ctx.check_circ_homomorphism()?.verdict,
                &format!("{tag}: all checks TRUE"),
                &mut failures,
            );
        }
    }
    Ok(finish(failures, format!("chains of 3 for p ∈ {primes:?}")))
}

fn row_band(primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for &p in primes {
        let tag = format!("p={p}");
        let ctx = build_phi_context(algebra(FamilySpec::RectangularBand(2, 2), p)?, guards)?;
        let a = ctx.algebra();
        let dims: Vec<usize> = ctx.ideals().iter().map(|i| i.dim()).collect();
        expect(
            dims == vec![0, 1, 2, 2, 3, 4],
            &format!("{tag}: dims 0,1,2,2,3,4"),
            &mut failures,
        );
        // The unique dim-1 ideal is generated by the corner combination and
        // equals J_L ∩ J_R.
        let corner = a.element(vec![1, p - 1, p - 1, 1]);
        let min_ideal = a.ideal_closure(&[corner])?;
        expect(
            ctx.ideals().get(1) == Some(&min_ideal) && min_ideal.dim() == 1,
            &format!("{tag}: dim-1 = closure of corner combination"),
            &mut failures,
        );
        let alpha_l = f_of_alpha(a, &Partition::from_labels(&[0, 0, 1, 1]))?;
        let alpha_r = f_of_alpha(a, &Partition::from_labels(&[0, 1, 0, 1]))?;
        expect(
            a.ideal_intersect(&alpha_l, &alpha_r)? == min_ideal,
            &format!("{tag}: J_L ∩ J_R is the minimal ideal"),
            &mut failures,
        );
        let f_omega = f_of_alpha(a, &Partition::universal(4))?;
        expect(
            a.ideal_sum(&alpha_l, &alpha_r)? == f_omega,
            &format!("{tag}: J_L + J_R = F[omega]"),
            &mut failures,
        );
        expect(
            ideal_lattice(ctx.ideals())?
                == vec![(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
            &format!("{tag}: six-node figure"),
            &mut failures,
        );
        expect(
            ctx.kernel_classes() == vec![vec![0, 1], vec![3], vec![2], vec![4, 5]],
            &format!("{tag}: kernel classes"),
            &mut failures,
        );
        expect(
            ctx.check_meet_homomorphism()?.verdict
                && ctx.check_join_compatible_kernel()?.verdict
                && ctx.check_circ_homomorphism()?.verdict,
            &format!("{tag}: all checks TRUE"),
            &mut failures,
        );
    }
    Ok(finish(failures, format!("six ideals for p ∈ {primes:?}")))
}

fn row_permutability(_primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let positive = [
        FamilySpec::CyclicGroup(4),
        FamilySpec::TwoElementSemilattice,
        FamilySpec::LeftZero(2),
        FamilySpec::RightZero(2),
        FamilySpec::RectangularBand(2, 2),
    ];
    for spec in positive {
        let s = build(spec.clone())?;
        expect(
            is_permutable(&s, &spec.to_string(), guards)?.verdict,
            &format!("{spec:?} permutable"),
            &mut failures,
        );
    }
    let negative = [
        FamilySpec::SemilatticeChain(3),
        FamilySpec::RectangularBand(2, 3),
        FamilySpec::RectangularBand(3, 2),
    ];
    for spec in negative {
        let s = build(spec.clone())?;
        let report = is_permutable(&s, &spec.to_string(), guards)?;
        expect(
            !report.verdict && !report.witnesses.is_empty(),
            &format!("{spec:?} non-permutable with witness"),
            &mut failures,
        );
    }
    // Frozen witness for the 3-chain: ({e,f}{g}, {e}{f,g}) differing at (e,g).
    let chain = build(FamilySpec::SemilatticeChain(3))?;
    let report = is_permutable(&chain, "chain-semilattice:3", guards)?;
    if let Some(w) = report.witnesses.first() {
        expect(
            w.left.label == "{{e,f},{g}}"
                && w.right.label == "{{e},{f,g}}"
                && w.element_pair == Some(["e".to_string(), "g".to_string()]),
            "chain-3 witness tuple",
            &mut failures,
        );
    }
    Ok(finish(failures, "5 permutable, 3 non-permutable".into()))
}

fn row_corollaries(primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let mut skipped = Vec::new();
    for n in 1..=4usize {
        for &p in primes {
            let spec = FamilySpec::SemilatticeChain(n);
            match build_phi_context(algebra(spec, p)?, guards) {
                Ok(ctx) => {
                    let verdict = ctx.check_circ_homomorphism()?.verdict;
                    expect(
                        verdict == (n <= 2),
                        &format!("chain:{n} p={p} circ={verdict}"),
                        &mut failures,
                    );
                }
                Err(Error::GuardExceeded { .. }) => skipped.push(format!("chain:{n},p={p}")),
                Err(e) => return Err(e),
            }
        }
    }
    for l in 1..=3usize {
        for r in 1..=3usize {
            if l * r > 6 {
                continue;
            }
            for &p in primes {
                let spec = FamilySpec::RectangularBand(l, r);
                match build_phi_context(algebra(spec, p)?, guards) {
                    Ok(ctx) => {
                        let verdict = ctx.check_circ_homomorphism()?.verdict;
                        expect(
                            verdict == (l <= 2 && r <= 2),
                            &format!("band:{l},{r} p={p} circ={verdict}"),
                            &mut failures,
                        );
                    }
                    Err(Error::GuardExceeded { .. }) => {
                        skipped.push(format!("band:{l},{r},p={p}"))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let mut detail = "semilattices iff n ≤ 2; bands iff l,r ≤ 2".to_string();
    if !skipped.is_empty() {
        detail.push_str(&format!(" (guard-skipped: {})", skipped.join(", ")));
    }
    Ok(finish(failures, detail))
}

const PROPERTY_FAMILIES: [FamilySpec; 6] = [
    FamilySpec::TwoElementSemilattice,
    FamilySpec::CyclicGroup(4),
    FamilySpec::LeftZero(2),
    FamilySpec::RightZero(2),
    FamilySpec::RectangularBand(2, 2),
    FamilySpec::SemilatticeChain(3),
];

fn row_property_suites(primes: &[u64], guards: &Guards) -> Result<(bool, String)> {
    let mut failures = Vec::new();

    // (a) rho(F[alpha]) = alpha and (b) meet-homomorphism everywhere.
    for spec in PROPERTY_FAMILIES {
        for &p in primes {
            let a = algebra(spec.clone(), p)?;
            for alpha in relations::enumerate_congruences(a.semigroup(), guards)? {
                let back = rho(&a, &f_of_alpha(&a, &alpha)?)?;
                expect(
                    back == alpha,
                    &format!("(a) rho(F[alpha]) = alpha for {spec:?} p={p}"),
                    &mut failures,
                );
            }
            let ctx = build_phi_context(a, guards)?;
            expect(
                ctx.check_meet_homomorphism()?.verdict,
                &format!("(b) meet-homomorphism for {spec:?} p={p}"),
                &mut failures,
            );
            // (c) dimension formula over all ideal pairs.
            for u in ctx.ideals() {
                for w in ctx.ideals() {
                    let s = gf::sum(u.space(), w.space())?;
                    let i = gf::intersect(u.space(), w.space())?;
                    expect(
                        s.dim() + i.dim() == u.dim() + w.dim(),
                        &format!("(c) dim formula for {spec:?} p={p}"),
                        &mut failures,
                    );
                }
            }
        }
    }

    // (d) subspace counts match the Gaussian binomial formula.
    for n in 0..=4usize {
        for p in [2u64, 3, 5] {
            let field = PrimeField::new(p)?;
            let count = gf::enumerate_subspaces(field, n, guards)?.count() as u128;
            expect(
                count == gf::subspace_count(n, p),
                &format!("(d) count n={n} p={p}"),
                &mut failures,
            );
        }
    }

    // (e) relation composition associativity: exhaustive on a 2-element
    // carrier, deterministic samples on a 5-element carrier.
    let two: Vec<BinaryRelation> = (0..16u32)
        .map(|m| {
            let mut r = BinaryRelation::new(2);
            for x in 0..2 {
                for y in 0..2 {
                    r.set(x, y, m >> (2 * x + y) & 1 == 1);
                }
            }
            r
        })
        .collect();
    for a in &two {
        for b in &two {
            for c in &two {
                expect(
                    a.compose(b)?.compose(c)? == a.compose(&b.compose(c)?)?,
                    "(e) associativity on 2 elements",
                    &mut failures,
                );
            }
        }
    }
    let mut seed = 0x2545F4914F6CDD1Du64;
    let mut rand_rel = || {
        let mut r = BinaryRelation::new(5);
        for x in 0..5 {
            for y in 0..5 {
                seed ^= seed << 13;
                seed ^= seed >> 7;
                seed ^= seed << 17;
                r.set(x, y, seed & 1 == 1);
            }
        }
        r
    };
    for _ in 0..200 {
        let (a, b, c) = (rand_rel(), rand_rel(), rand_rel());
        expect(
            a.compose(&b)?.compose(&c)? == a.compose(&b.compose(&c)?)?,
            "(e) associativity on sampled 5-element relations",
            &mut failures,
        );
    }
    // The equivalence criterion: a∘b is an equivalence iff a∘b = b∘a,
    // exhaustive over partition pairs on up to 5 elements.
    for n in 1..=5usize {
        let parts: Vec<Partition> = enumerate_partitions(n, guards)?.collect();
        for a in &parts {
            for b in &parts {
                let ab = as_relation(a).compose(&as_relation(b))?;
                let ba = as_relation(b).compose(&as_relation(a))?;
                expect(
                    ab.is_equivalence() == (ab == ba),
                    "(e) equivalence iff commuting",
                    &mut failures,
                );
            }
        }
    }

    // (f) theta composition realized by ideal sums wherever the carrier
    // guard allows.
    let theta_families = [
        FamilySpec::TwoElementSemilattice,
        FamilySpec::CyclicGroup(4),
        FamilySpec::LeftZero(2),
        FamilySpec::RightZero(2),
        FamilySpec::RectangularBand(2, 2),
        FamilySpec::SemilatticeChain(3),
        FamilySpec::SemilatticeChain(4),
        FamilySpec::RectangularBand(2, 3),
        FamilySpec::RectangularBand(3, 2),
    ];
    for spec in theta_families {
        for &p in primes {
            let a = algebra(spec.clone(), p)?;
            let carrier = (p as u128).checked_pow(a.dim() as u32);
            if carrier.is_none_or(|c| c > guards.max_algebra_carrier) {
                continue;
            }
            let ideals = match a.enumerate_ideals(guards) {
                Ok(list) => list,
                Err(Error::GuardExceeded { .. }) => continue,
                Err(e) => return Err(e),
            };
            // The check is symmetric in (I, J): it verifies both
            // composition orders, so unordered pairs cover all of them.
            for (ui, u) in ideals.iter().enumerate() {
                for w in &ideals[ui..] {
                    expect(
                        a.congruence_permutability_check(u, w, guards)?,
                        &format!("(f) theta check for {spec:?} p={p}"),
                        &mut failures,
                    );
                }
            }
        }
    }

    failures.sort();
    failures.dedup();
    Ok(finish(failures, "suites (a)-(f) hold".into()))
}
