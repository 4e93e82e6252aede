"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.  Every tolerance is fixed
here; nothing is calibrated at run time.  Two tests document known-blocked
expectations (see data/instances/README.md and notes in the repository):
the Harwell-Boeing instances cannot be redistributed from this environment,
and the zero-dispersion expectation for randomized repetitions on dense
random graphs conflicts with identifier-sensitive tie-breaking; those tests
fail honestly rather than assert something weaker.
"""

import os
import statistics

import pytest

from cbsum.bench import run_instance, run_robustness, single_run
from cbsum.errors import DomainError
from cbsum.generate import (
    erdos_renyi,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_power_cycle,
    make_wheel,
    parse_spec,
)
from cbsum.graph import Graph, Labeling, cbs, rotate_labels
from cbsum.graphio import read_matrix_market
from cbsum.merge import (
    PartialOrder,
    best_insertion,
    eval_count,
    insertion_candidates,
    merge_paths,
    partial_cbs,
    reset_eval_count,
)
from cbsum.pathfind import find_paths, jaccard, weighted_jaccard
from cbsum.reference import (
    brute_force_optimum,
    optimum_complete_bipartite,
    optimum_cycle,
    optimum_path,
    optimum_power_cycle,
    optimum_wheel,
    upper_bound_cartesian,
)
from cbsum.rng import SplitMix64, derive_seed

SEED = 42
JOBS = min(2, os.cpu_count() or 1)
DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "instances")


def _families_up_to(limit):
    """(name, graph, exact optimum) for every family instance with n <= limit."""
    for n in range(1, limit + 1):
        yield f"path-{n}", make_path(n), optimum_path(n)
    for n in range(3, limit + 1):
        yield f"cycle-{n}", make_cycle(n), optimum_cycle(n)
    for total in range(4, limit + 1):
        yield f"wheel-{total}", make_wheel(total - 1), optimum_wheel(total)
    for k in (2, 3):
        for n in range(2 * k + 3, limit + 1):  # smallest non-degenerate size
            yield f"pgc-{n}-{k}", make_power_cycle(n, k), optimum_power_cycle(n, k)
    for k in range(1, limit // 2 + 1):
        yield (
            f"cbg-{k}-{k}",
            make_complete_bipartite(k, k),
            optimum_complete_bipartite(k, k),
        )
    for k in range(1, limit // 4 + 1):
        yield (
            f"cbg-{k}-{3 * k}",
            make_complete_bipartite(k, 3 * k),
            optimum_complete_bipartite(k, 3 * k),
        )


def test_criterion_1_exact_optimum_families():
    """Median over 30 randomized repetitions equals the closed form, n <= 64."""
    failures = []
    for name, graph, opt in _families_up_to(64):
        stats = run_instance(graph, repetitions=30, seed=SEED, instance=name, jobs=JOBS)
        if stats.median_cbs != opt:
            failures.append(f"{name}: median {stats.median_cbs} != {opt}")
    if failures:
        print(f"criterion 1: FAIL — {len(failures)} instances off: {failures[:5]}")
        pytest.fail("; ".join(failures[:10]))
    print("criterion 1: PASS — every family instance (n <= 64) hits its optimum")


def test_criterion_2_oracle_consistency():
    """Closed forms equal the enumeration oracle for n <= 9, and the
    heuristic's best of 30 equals that optimum on every such instance."""
    checked = 0
    for name, graph, opt in _families_up_to(9):
        exact, _ = brute_force_optimum(graph)
        assert exact == opt, f"{name}: formula {opt} != oracle {exact}"
        stats = run_instance(graph, repetitions=30, seed=SEED, instance=name)
        assert min(stats.values) >= exact
        assert min(stats.values) == exact, f"{name}: best {min(stats.values)} != {exact}"
        checked += 1
    print(f"criterion 2: PASS — {checked} instances agree with the oracle")


def test_criterion_3_incremental_engine_equivalence():
    """Engine objective == from-scratch objective at every insertion position
    and orientation, on 100 seeded random graphs (tolerance 0)."""
    count = 0
    produced = 0
    attempt = 0
    while produced < 100:
        s = derive_seed(SEED, 3, attempt)
        attempt += 1
        rng = SplitMix64(s)
        n = 6 + rng.randbelow(35)  # [6, 40]
        p = 0.1 + 0.8 * rng.uniform()
        try:
            graph = erdos_renyi(n, p, seed=derive_seed(s, 1))
        except DomainError:
            continue  # sparse draw stayed disconnected; take the next seed
        produced += 1
        paths = sorted(
            (list(q) for q in find_paths(graph).paths), key=lambda q: (-len(q), q[0])
        )
        partial = PartialOrder(order=list(paths[0]))
        for path in paths[1:]:
            for pos, rev, value in insertion_candidates(graph, partial, path):
                pth = path[::-1] if rev else path
                arrangement = partial.order[:pos] + pth + partial.order[pos:]
                assert value == partial_cbs(graph, arrangement), (
                    f"engine {value} != direct at n={n} pos={pos} rev={rev}"
                )
                count += 1
            plan = best_insertion(graph, partial, path)
            ins = path[::-1] if plan.reversed else path
            partial.order[plan.position:plan.position] = ins
        final = merge_paths([list(q) for q in paths], graph)
        assert cbs(graph, final) == partial_cbs(graph, partial.order)
    print(f"criterion 3: PASS — {count} candidate evaluations match exactly")


# Published upper-bound columns for the six Cartesian-product families,
# keyed by (m, n).  The complete x complete rows reflect the published
# table's own arithmetic (see reference.upper_bound_cartesian).
PK_UB = {(5, 5): 395, (5, 10): 3165, (5, 15): 10560, (5, 20): 25080,
         (10, 5): 1545, (10, 10): 12590, (10, 15): 42135, (10, 20): 100180,
         (15, 5): 3445, (15, 10): 28265, (15, 15): 94710, (15, 20): 225280,
         (20, 5): 6095, (20, 10): 50190, (20, 15): 168285, (20, 20): 400380}
CK_UB = {(5, 5): 415, (5, 10): 3205, (5, 15): 10620, (5, 20): 25160,
         (10, 5): 1590, (10, 10): 12680, (10, 15): 42270, (10, 20): 100360,
         (15, 5): 3515, (15, 10): 28405, (15, 15): 94920, (15, 20): 225560,
         (20, 5): 6190, (20, 10): 50380, (20, 15): 168570, (20, 20): 400760}
KK_UB = {(5, 5): 474, (10, 5): 3324, (10, 10): 14149, (15, 5): 10800,
         (15, 10): 44475, (15, 15): 102900, (20, 5): 25399, (20, 10): 103299,
         (20, 15): 236199, (20, 20): 426599}
PC_UB = {(5, 5): 145, (5, 10): 290, (5, 15): 435, (5, 20): 580,
         (10, 5): 545, (10, 10): 1090, (10, 15): 1635, (10, 20): 2180,
         (15, 5): 1195, (15, 10): 2390, (15, 15): 3585, (15, 20): 4780,
         (20, 5): 2095, (20, 10): 4190, (20, 15): 6285, (20, 20): 8380}
PP_UB = {(5, 5): 120, (10, 5): 265, (10, 10): 990, (15, 5): 410,
         (15, 10): 1535, (15, 15): 3360, (20, 5): 555, (20, 10): 2080,
         (20, 15): 4555, (20, 20): 7980}
CC_UB = {(5, 5): 165, (10, 5): 330, (10, 10): 1180, (15, 5): 495,
         (15, 10): 1770, (15, 15): 3795, (20, 5): 660, (20, 10): 2360,
         (20, 15): 5060, (20, 20): 8760}


def test_criterion_4_cartesian_product_bounds():
    tables = [
        ("path", "complete", PK_UB),
        ("cycle", "complete", CK_UB),
        ("complete", "complete", KK_UB),
        ("path", "cycle", PC_UB),
        ("path", "path", PP_UB),
        ("cycle", "cycle", CC_UB),
    ]
    for fg, fh, table in tables:
        for (m, n), expected in table.items():
            got = upper_bound_cartesian(fg, fh, m, n)
            assert got == expected, f"{fg}x{fh} ({m},{n}): {got} != {expected}"

    spec = parse_spec("family=pk m=5 n=5")
    stats = run_instance(spec.build(), repetitions=30, seed=SEED, jobs=JOBS)
    assert stats.median_cbs <= 220, f"P5xK5 median {stats.median_cbs} > 220"

    rds = []
    for m in (5, 10):
        for n in (5, 10):
            g = parse_spec(f"family=pk m={m} n={n}").build()
            s = run_instance(g, repetitions=30, seed=SEED, jobs=JOBS)
            rds.append((s.median_cbs - PK_UB[(m, n)]) / PK_UB[(m, n)])
    mean_rd = statistics.mean(rds)
    assert mean_rd <= -0.4, f"mean rd over path x complete subset {mean_rd:.3f} > -0.4"
    print(
        "criterion 4: PASS — 82 published bound rows reproduced; "
        f"P5xK5 median {stats.median_cbs}; mean rd {mean_rd:.2f}"
    )


def test_criterion_5_harwell_boeing_instances():
    """Needs the published can24/bcspwr01 matrices (not redistributable from
    this build environment; see data/instances/README.md)."""
    can24 = os.path.join(DATA_DIR, "can24.mtx")
    bcspwr01 = os.path.join(DATA_DIR, "bcspwr01.mtx")
    missing = [p for p in (can24, bcspwr01) if not os.path.exists(p)]
    if missing:
        print("criterion 5: FAIL — instance files not available in this environment")
        pytest.fail(
            "missing Harwell-Boeing instances: "
            + ", ".join(os.path.basename(p) for p in missing)
            + " — place the Matrix Market files under data/instances/ "
            "(see data/instances/README.md); they cannot be fetched or "
            "reconstructed inside this sandbox"
        )
    loaded = read_matrix_market(can24)
    assert (loaded.graph.n, loaded.graph.m) == (24, 68)
    power = read_matrix_market(bcspwr01)
    assert (power.graph.n, power.graph.m) == (39, 46)
    best = min(
        single_run(loaded.graph, derive_seed(SEED, 5, r))[0] for r in range(50)
    )
    assert best <= 229, f"can24 best-of-50 {best} > 229"
    print(f"criterion 5: PASS — can24 (24,68), bcspwr01 (39,46), best {best} <= 229")


def test_criterion_6_robustness_protocol():
    """Published protocol expectations on 10 seeded G(100, 0.3) instances:
    rd(median(min-over-k), overall min) <= 0.01 for k in {10,20,50} and
    per-instance MAD of 30 single repetitions equal to 0."""
    failures = []
    for i in range(10):
        inst_seed = derive_seed(SEED, 6, i)
        graph = erdos_renyi(100, 0.3, seed=inst_seed)
        stats = run_instance(
            graph, repetitions=30, seed=derive_seed(inst_seed, 1), jobs=JOBS
        )
        if stats.mad_cbs != 0:
            failures.append(f"instance {i}: mad {stats.mad_cbs} != 0")
        rb = run_robustness(
            graph,
            k_values=[10, 20, 50],
            repetitions=30,
            seed=derive_seed(inst_seed, 2),
            jobs=JOBS,
        )
        for k, rd in rb.rds.items():
            if rd > 0.01:
                failures.append(f"instance {i}: rd(k={k}) = {rd:.4f} > 0.01")
    if failures:
        print(f"criterion 6: FAIL — {len(failures)} violations: {failures}")
        pytest.fail(
            "identifier-sensitive tie-breaking makes repetition values vary "
            "on dense random graphs; the zero-dispersion expectation does not "
            "hold under per-repetition identifier randomization: "
            + "; ".join(failures)
        )
    print("criterion 6: PASS")


def test_criterion_7_property_suite():
    rng = SplitMix64(derive_seed(SEED, 7))
    for trial in range(25):
        n = 2 + rng.randbelow(14)
        g = erdos_renyi(n, 0.2 + 0.6 * rng.uniform(), seed=rng.next_u64())

        labeling = merge_paths(find_paths(g), g)
        assert sorted(labeling.perm) == list(range(n))  # bijection

        r = rng.randbelow(n)
        assert cbs(g, rotate_labels(labeling, r)) == cbs(g, labeling)
        mirrored = Labeling(tuple((n - 1 - p) % n for p in labeling.perm))
        assert cbs(g, mirrored) == cbs(g, labeling)

        find_paths(g).validate(g)

        unit = Graph(n=g.n, adj=g.adj, wadj=g.wadj, weighted=True)
        for u, v, _ in g.edges():
            assert weighted_jaccard(unit, u, v) == float(jaccard(g, u, v))

        scaled = unit.reweighted(3.0)
        assert cbs(scaled, labeling) == 3 * cbs(g, labeling)

        again = merge_paths(find_paths(g), g)
        assert again.perm == labeling.perm  # determinism

        v1, _ = single_run(g, derive_seed(SEED, 7, trial))
        v2, _ = single_run(g, derive_seed(SEED, 7, trial))
        assert v1 == v2
    print("criterion 7: PASS — property suite holds on 25 random graphs")


def test_criterion_8_workload_ceiling():
    """Edge-evaluation counts stay below c * m * n with one fixed c."""
    CEILING = 8  # fixed a priori; counts both sweeps plus base evaluations
    for n in (64, 128, 256):
        g = make_cycle(n)
        reset_eval_count()
        merge_paths(find_paths(g), g)
        used = eval_count()
        assert used <= CEILING * g.m * g.n, f"cycle {n}: {used} evals"
    # complete bipartite is the worst case for the merge: many singleton
    # paths, each scanned against every position
    for n1 in (8, 16):
        g = make_complete_bipartite(n1, 3 * n1)
        reset_eval_count()
        merge_paths(find_paths(g), g)
        used = eval_count()
        assert used <= CEILING * g.m * g.n, f"cbg {n1}: {used} > {CEILING * g.m * g.n}"
    print("criterion 8: PASS — evaluation counts within the fixed O(m*n) ceiling")
