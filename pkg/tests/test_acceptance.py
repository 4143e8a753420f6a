"""Acceptance gate: one test per criterion, each under its time limit.

Every test prints a single ``PASS``/``FAIL`` line with its wall time.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial, prod

import pytest

import genhurwitz.characters
import genhurwitz.cutjoin
import genhurwitz.hurwitz
import genhurwitz.partitions
import genhurwitz.perms

from genhurwitz.characters import check_orthogonality
from genhurwitz.cli import main
from genhurwitz.cutjoin import (
    DiffTerm,
    build_w,
    build_w_hat,
    class_sum_oracle,
    compose,
    diff_terms,
    eigen_failure,
    first_composition_failure,
    normalized_product_failure,
    structure_constants,
)
from genhurwitz.genfun import (
    direct_series,
    evolve,
    initial_k0,
    initial_k0_from_schur,
    initial_k1,
    initial_k1_from_schur,
    make_marks,
    pde_residual,
)
from genhurwitz.hurwitz import CoverSpec, associativity_check, default_budget, hurwitz_number, hurwitz_oracle
from genhurwitz.laurent import ZLaurent
from genhurwitz.partitions import Partition, aut_factor, class_size, dim_irrep, partitions_of

P = Partition
F = Fraction


def clear_caches():
    """Drop every memo table so each criterion is timed from a cold start."""
    for mod in (
        genhurwitz.characters,
        genhurwitz.cutjoin,
        genhurwitz.hurwitz,
        genhurwitz.partitions,
        genhurwitz.perms,
    ):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        clear_caches()
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            status = "PASS" if elapsed < limit else "FAIL (too slow)"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\ncriterion {number:>2}: {status:<15} {elapsed:8.2f}s / {limit}s  {title}")
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"

    return run


def test_criterion_01_degree2_operator(criterion, capsys):
    with criterion(1, "W((2)) at d=2 rendered as a differential operator", 1):
        assert set(diff_terms(build_w(2, P((2,))))) == {
            DiffTerm(2, F(1, 2), P((2,)), P((1, 1))),
            DiffTerm(0, F(1), P((1, 1)), P((2,))),
        }
        assert main(["cutjoin", "show", "--degree", "2", "--partition", "(2)"]) == 0
        out = capsys.readouterr().out.strip()
        assert set(out.split(" + ")) == {"1/2 z^2 p_2 ∂^2/∂p_1∂p_1", "p_1 p_1 ∂/∂p_2"}


def test_criterion_02_degree3_operator(criterion):
    with criterion(2, "W((2,1)) at d=3 has the four displayed terms", 1):
        terms = diff_terms(build_w(3, P((2, 1))))
        assert set(terms) == {
            DiffTerm(2, F(2), P((3,)), P((2, 1))),
            DiffTerm(2, F(1, 2), P((2, 1)), P((1, 1, 1))),
            DiffTerm(0, F(1), P((1, 1, 1)), P((2, 1))),
            DiffTerm(0, F(3), P((2, 1)), P((3,))),
        }
        assert len(terms) == 4


def test_criterion_03_evolved_series(criterion):
    with criterion(3, "evolved series d=3, (2,1), g=0, k=0", 1):
        s = evolve(initial_k0(3), make_marks([P((2, 1))]), [3])
        got = {(v, m.p, c) for v, m, c in s.terms()}
        assert got == {
            ((0,), P((1, 1, 1)), ZLaurent.monomial(F(1, 6), -6)),
            ((1,), P((2, 1)), ZLaurent.monomial(F(1, 2), -4)),
            ((2,), P((3,)), ZLaurent.monomial(F(1, 2), -2)),
            ((2,), P((1, 1, 1)), ZLaurent.monomial(F(1, 4), -4)),
            ((3,), P((2, 1)), ZLaurent.monomial(F(3, 4), -2)),
        }


def test_criterion_04_initial_values(criterion):
    with criterion(4, "Schur collapse and Cauchy form of initial values, d<=5", 5):
        for d in range(1, 6):
            assert initial_k0_from_schur(d) == initial_k0(d)
            assert initial_k1_from_schur(d) == initial_k1(d)


def test_criterion_05_oracle_equivalence(criterion):
    with criterion(5, "character formula equals permutation count, d<=5 g<=1 k<=3", 300):
        budget = default_budget()
        count = 0
        for d in range(1, 6):
            parts = partitions_of(d)
            for g in (0, 1):
                for k in range(4):
                    for profs in combinations_with_replacement(parts, k):
                        spec = CoverSpec(g, d, profs)
                        assert hurwitz_oracle(spec, budget=budget) == hurwitz_number(spec), spec
                        count += 1
        assert count > 0


def test_criterion_06_composition_law(criterion):
    with criterion(6, "W(D1) W(D2) expands over structure constants, d<=6", 120):
        for d in range(1, 7):
            assert first_composition_failure(d) is None, d


def test_criterion_07_commuting_normalized(criterion):
    with criterion(7, "normalized operators commute, constants match class sums, d<=6", 120):
        for d in range(1, 7):
            assert normalized_product_failure(d) is None, d
            parts = partitions_of(d)
            for a, b in combinations(parts, 2):
                ab = compose(build_w_hat(d, a), build_w_hat(d, b))
                ba = compose(build_w_hat(d, b), build_w_hat(d, a))
                assert ab.same_matrix(ba)
            sc, oracle = structure_constants(d), class_sum_oracle(d)
            for key in product(parts, repeat=3):
                assert sc[key] == oracle[key], key


def test_criterion_08_eigenfunctions(criterion):
    with criterion(8, "Schur functions are eigenfunctions with eigenvalue phi, d<=6", 60):
        for d in range(1, 7):
            assert eigen_failure(d) is None, d


def test_criterion_09_pde(criterion):
    with criterion(9, "series solves the cut-and-join equation through u-order 4, d<=4", 60):
        for d in range(1, 5):
            parts = partitions_of(d)
            mark_sets = [[x] for x in parts] + [list(pr) for pr in combinations_with_replacement(parts, 2)]
            for k in (0, 1):
                for ps in mark_sets:
                    s = direct_series(0, d, make_marks(ps), [5] * len(ps), k)
                    for i in range(len(ps)):
                        res = pde_residual(s, i)
                        assert all(not r for v, r in res.items() if max(v) <= 4), (d, k, ps, i)


def test_criterion_10_associativity(criterion):
    with criterion(10, "gluing identity for every split, d<=4 k<=4 g<=1", 60):
        for d in range(1, 5):
            parts = partitions_of(d)
            for g in (0, 1):
                for k in range(2, 5):
                    for profs in product(parts, repeat=k):
                        spec = CoverSpec(g, d, profs)
                        for split in range(1, k):
                            assert associativity_check(spec, split), (g, profs, split)


def test_criterion_11_orthogonality_and_invariants(criterion):
    with criterion(11, "character orthogonality, centralizer and Burnside, d<=7", 10):
        for d in range(1, 8):
            n = factorial(d)
            parts = partitions_of(d)
            assert check_orthogonality(d)
            assert all(class_size(D) * aut_factor(D) * prod(D) == n for D in parts)
            assert sum(class_size(D) for D in parts) == n
            assert sum(dim_irrep(lam) ** 2 for lam in parts) == n
