"""Run every identity of the theory at small degree and collect a report."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import factorial, prod
from typing import Callable

from .characters import char_table, check_orthogonality, tabloid_character_table
from .cutjoin import (
    DEFAULT_ORACLE_CAP,
    build_w,
    class_sum_oracle,
    classical_cut_and_join,
    eigen_failure,
    first_composition_failure,
    normalized_product_failure,
    schur_basis_is_basis,
    structure_constants,
)
from .errors import BudgetExceededError
from .genfun import (
    direct_series,
    evolve,
    grading_failures,
    initial_k0,
    initial_k0_from_schur,
    initial_k1,
    initial_k1_from_schur,
    make_marks,
    pde_residual,
)
from .hurwitz import (
    CoverSpec,
    associativity_check,
    default_budget,
    hurwitz_number,
    hurwitz_oracle,
    oracle_cost,
    source_euler,
)
from .partitions import Partition, aut_factor, class_size, dim_irrep, partitions_of

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass(frozen=True)
class CheckResult:
    name: str
    degree: int
    status: str
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "degree": c.degree, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
        }

    def __str__(self) -> str:
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [
            f"{c.status:<7} d={c.degree}  {c.name:<{width}}  {c.detail}".rstrip()
            for c in self.checks
        ]
        return "\n".join(lines)


def _result(name: str, d: int, failure) -> CheckResult:
    if failure is None:
        return CheckResult(name, d, PASS)
    return CheckResult(name, d, FAIL, f"counterexample: {failure}")


def _profiles_upto(d: int, kmax: int, ordered: bool = False):
    parts = partitions_of(d)
    for k in range(kmax + 1):
        yield from (product(parts, repeat=k) if ordered else combinations_with_replacement(parts, k))


def _fmt(profiles) -> str:
    return ";".join(str(p) for p in profiles) or "none"


def check_characters(d: int, budget: int) -> list[CheckResult]:
    out = [CheckResult("orthogonality", d, PASS if check_orthogonality(d) else FAIL)]
    n = factorial(d)
    parts = partitions_of(d)
    bad = next((D for D in parts if class_size(D) * aut_factor(D) * prod(D) != n), None)
    if sum(class_size(D) for D in parts) != n:
        bad = "class sizes do not sum to d!"
    if sum(dim_irrep(lam) ** 2 for lam in parts) != n:
        bad = "sum of dim^2 is not d!"
    out.append(_result("centralizer-and-burnside", d, bad))
    cost = len(parts) * n * len(parts)
    if cost > budget:
        out.append(CheckResult("character-oracle", d, SKIPPED, f"estimated cost {cost} over budget"))
    else:
        tab = char_table(d, cap=max(d, 10))
        oracle = tabloid_character_table(d)
        bad = next((k for k, v in oracle.items() if tab[k] != v), None)
        out.append(_result("character-oracle", d, bad))
    return out


def check_hurwitz(d: int, budget: int, kmax: int = 3, gmax: int = 1) -> list[CheckResult]:
    specs = [CoverSpec(g, d, profs) for g in range(gmax + 1) for profs in _profiles_upto(d, kmax)]
    out = []
    # d! mu counts tuples, and parity failure forces zero.
    bad = None
    for s in specs:
        v = hurwitz_number(s) * factorial(d)
        if v.denominator != 1 or v < 0 or (source_euler(s).parity_failure and v):
            bad = f"g={s.genus} {_fmt(s.profiles)}"
            break
    out.append(_result("hurwitz-integrality-parity", d, bad))
    total = sum(oracle_cost(s) for s in specs)
    if total > budget:
        out.append(
            CheckResult("hurwitz-oracle", d, SKIPPED, f"estimated {total} compositions over budget {budget}")
        )
    else:
        bad = None
        for s in specs:
            if hurwitz_oracle(s, budget=budget) != hurwitz_number(s):
                bad = f"g={s.genus} {_fmt(s.profiles)}"
                break
        out.append(_result("hurwitz-oracle", d, bad))
    kmax_assoc = 4 if d <= 4 else 3
    bad = None
    for g in (0, 1):
        for profs in _profiles_upto(d, kmax_assoc, ordered=True):
            s = CoverSpec(g, d, profs)
            for split in range(1, len(profs)):
                if not associativity_check(s, split):
                    bad = f"g={g} {_fmt(profs)} split={split}"
                    break
            if bad:
                break
        if bad:
            break
    out.append(_result("associativity", d, bad))
    return out


def check_operators(d: int, budget: int) -> list[CheckResult]:
    out = [_result("composition-law", d, first_composition_failure(d))]
    out.append(_result("normalized-algebra-commutative", d, normalized_product_failure(d)))
    cost = factorial(d) ** 2
    if cost > budget or d > DEFAULT_ORACLE_CAP:
        out.append(CheckResult("class-sum-oracle", d, SKIPPED, f"estimated {cost} compositions"))
    else:
        sc, oracle = structure_constants(d), class_sum_oracle(d)
        bad = next((k for k in sc.table if sc[k] != oracle[k]), None)
        out.append(_result("class-sum-oracle", d, bad))
    bad = None
    for D in partitions_of(d):
        for key, v in build_w(d, D).matrix.items():
            t = v.single_term()
            if t is None or t[0] < 0 or t[0] % 2:
                bad = (D, key)
                break
    out.append(_result("z-grading", d, bad))
    bad = None
    for D in partitions_of(d):
        w1 = {k: v.evaluate(1) for k, v in build_w(d, D).matrix.items()}
        if w1 != classical_cut_and_join(d, D):
            bad = D
            break
    out.append(_result("classical-limit", d, bad))
    out.append(_result("eigenfunctions", d, eigen_failure(d)))
    out.append(_result("schur-basis", d, None if schur_basis_is_basis(d) else "singular"))
    return out


def check_genfun(d: int, order: int = 4) -> list[CheckResult]:
    out = []
    bad = None
    if initial_k0(d) != initial_k0_from_schur(d):
        bad = "k=0"
    elif initial_k1(d) != initial_k1_from_schur(d):
        bad = "k=1"
    out.append(_result("initial-values", d, bad))
    parts = partitions_of(d)
    simple = Partition((2,) + (1,) * (d - 2)) if d >= 2 else parts[0]
    mark_sets = [[simple], [simple, parts[0]]]
    pde_bad = cross_bad = grade_bad = None
    for k in (0, 1):
        init = initial_k0(d) if k == 0 else initial_k1(d)
        for ps in mark_sets:
            marks = make_marks(ps)
            orders = [order] * len(marks)
            direct = direct_series(0, d, marks, orders, k)
            for i in range(len(marks)):
                if any(pde_residual(direct, i).values()) and pde_bad is None:
                    pde_bad = f"k={k} marks={_fmt(ps)} i={i}"
            if not evolve(init, marks, orders).same_coefficients(direct) and cross_bad is None:
                cross_bad = f"k={k} marks={_fmt(ps)}"
            if grading_failures(direct) and grade_bad is None:
                grade_bad = f"k={k} marks={_fmt(ps)}"
    out.append(_result("pde", d, pde_bad))
    out.append(_result("evolve-vs-direct", d, cross_bad))
    out.append(_result("series-z-grading", d, grade_bad))
    return out


GROUPS: list[Callable[..., list[CheckResult]]] = [
    check_characters,
    check_hurwitz,
    check_operators,
]


def verify_degree(d: int, budget: int | None = None) -> list[CheckResult]:
    budget = default_budget() if budget is None else budget
    out = []
    for group in GROUPS:
        try:
            out.extend(group(d, budget))
        except BudgetExceededError as exc:
            out.append(CheckResult(group.__name__, d, SKIPPED, str(exc)))
    out.extend(check_genfun(d))
    return out


def verify_all(d_max: int, budget: int | None = None) -> VerifyReport:
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    report = VerifyReport()
    for d in range(1, d_max + 1):
        report.checks.extend(verify_degree(d, budget))
    return report
