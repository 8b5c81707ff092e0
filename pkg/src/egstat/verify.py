"""Exhaustive checks of the EG-statistic theorems at small sizes.

Each ``check_*`` function returns a :class:`VerificationReport`.  Several
accept test-only keywords (``perms``, ``words``, ``inject_non_eg``) that
replace part of the machinery; they exist so the suites can be shown to
fail when fed bad data.
"""

from __future__ import annotations

import json
import os
import time
from collections import defaultdict
from collections.abc import Callable, Iterable, Sequence
from dataclasses import asdict, dataclass, field

from .eg import (
    EGTableau,
    eg_coefficients,
    eg_count,
    enumerate_eg,
    is_eg_tableau,
    is_lambda_maximal,
    staircase_witness,
    syt_to_eg,
)
from .perm import (
    Perm,
    Word,
    coxeter_length,
    enumerate_length_n,
    involutions,
    involutions_bruteforce,
    is_totally_commutative,
    normalize,
    reduced_words,
    support,
    tits_component,
    words_bfs,
)
from .tableaux import (
    Kind,
    Partition,
    enumerate_syt,
    hook_count,
    make_partition,
    partitions_of,
    standardize,
    sweep_map,
    tableau,
    validate,
)

FIGURE2_STD = tableau((1, 3, 6, 8), (2, 5, 7), (4,), (9,))
FIGURE2_SWEEP = tableau((1, 2, 3, 4), (2, 3, 4), (3,), (5,))


class SuiteError(ValueError):
    """Unknown suite name or bad configuration."""


class CapExceeded(SuiteError):
    pass


@dataclass(frozen=True)
class Caps:
    """Upper limits on suite parameters.

    ``length`` bounds the Coxeter length of exhaustively enumerated
    permutations, ``size`` bounds tableau sizes.  ``EG_MAX_CAP=N`` in the
    environment sets ``length=N`` and ``size=max(8, N + 3)``.
    """

    length: int = 5
    size: int = 8

    @classmethod
    def from_env(cls) -> Caps:
        raw = os.environ.get("EG_MAX_CAP")
        if not raw:
            return cls()
        try:
            n = int(raw)
        except ValueError:
            raise SuiteError(f"EG_MAX_CAP must be an integer, got {raw!r}") from None
        return cls(length=n, size=max(8, n + 3))

    def check_length(self, n: int) -> None:
        if n > self.length:
            raise CapExceeded(f"length {n} exceeds cap {self.length} (raise EG_MAX_CAP to allow)")

    def check_size(self, n: int) -> None:
        if n > self.size:
            raise CapExceeded(f"size {n} exceeds cap {self.size} (raise EG_MAX_CAP to allow)")


@dataclass
class VerificationReport:
    suite_name: str
    parameters: dict = field(default_factory=dict)
    checked_count: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, reason: str, **payload) -> None:
        self.counterexamples.append({"reason": reason, **payload})

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        report = cls(
            data["suite_name"],
            dict(data["parameters"]),
            int(data["checked_count"]),
            list(data["counterexamples"]),
            float(data["wall_time"]),
        )
        if report.passed != data.get("passed", report.passed):
            raise ValueError("'passed' disagrees with counterexamples")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _timed:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = time.perf_counter() - self.start
        return False


def _perms_up_to(n_max: int) -> list[Perm]:
    return [p for n in range(0, n_max + 1) for p in enumerate_length_n(n)]


def _tab(t) -> dict:
    return t.to_dict()


def check_injectivity(
    n_max: int,
    *,
    perms: Iterable[Perm] | None = None,
    inject_non_eg: tuple[Sequence[int], Sequence[int]] | None = None,
    caps: Caps | None = None,
) -> VerificationReport:
    """Standardization is injective on every EG(shape, w), and a_{w,shape} <= f^shape.

    ``inject_non_eg=(shape, alphabet)`` adds a fault task: every row- and
    column-strict filling of ``shape`` over ``alphabet`` is admitted with the
    reduced-word condition switched off.
    """
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("injectivity", {"n_max": n_max})
    with _timed(report):
        tasks: list[tuple[Partition, Perm | None, list]] = []
        for w in perms if perms is not None else _perms_up_to(n_max):
            for shape in partitions_of(coxeter_length(w)):
                tasks.append((shape, w, enumerate_eg(shape, w)))
        if inject_non_eg is not None:
            shape, alphabet = make_partition(inject_non_eg[0]), list(inject_non_eg[1])
            report.parameters["injected"] = {"shape": list(shape), "alphabet": alphabet}
            tasks.append((shape, None, enumerate_eg(shape, (), alphabet=alphabet, check_word=False)))
        pairs = 0
        for shape, w, tabs in tasks:
            pairs += 1
            report.checked_count += len(tabs) or 1
            f = hook_count(shape)
            if w is not None and len(tabs) > f:
                report.fail("a_{w,shape} exceeds f^shape", perm=list(w), shape=list(shape), a=len(tabs), f=f)
            groups: dict = defaultdict(list)
            for t in tabs:
                groups[standardize(t)].append(t)
            for image, members in groups.items():
                if len(members) > 1:
                    report.fail(
                        "standardization collision",
                        perm=None if w is None else list(w),
                        shape=list(shape),
                        std=_tab(image),
                        pair=[_tab(members[0]), _tab(members[1])],
                        group_size=len(members),
                    )
        report.parameters["pairs"] = pairs
    return report


def check_max_theorem(n: int, *, perms: Iterable[Perm] | None = None, caps: Caps | None = None) -> VerificationReport:
    """max EG over length-n permutations is inv(n), attained exactly at the
    totally commutative ones."""
    if n < 1:
        raise SuiteError("n must be positive")
    (caps or Caps.from_env()).check_length(n)
    report = VerificationReport("max_theorem", {"n": n})
    with _timed(report):
        candidates = list(perms) if perms is not None else enumerate_length_n(n)
        stats = {w: sum(eg_coefficients(w).values()) for w in candidates}
        report.checked_count = len(stats)
        target = involutions(n)
        best = max(stats.values())
        argmax = sorted(w for w, v in stats.items() if v == best)
        tc = sorted(w for w in stats if is_totally_commutative(w))
        report.parameters.update(
            inv=target,
            max=best,
            candidates=len(stats),
            argmax=[list(w) for w in argmax],
        )
        if best != target:
            report.fail("maximum differs from inv(n)", max=best, inv=target, perms=[list(w) for w in argmax])
        for w in sorted(set(argmax) - set(tc)):
            report.fail("maximizer is not totally commutative", perm=list(w), eg=stats[w])
        for w in sorted(set(tc) - set(argmax)):
            report.fail("totally commutative permutation is not a maximizer", perm=list(w), eg=stats[w])
    return report


def _has_monotone_word(w: Perm, increasing: bool) -> bool:
    for word in reduced_words(w):
        pairs = zip(word, word[1:])
        if all((a < b) if increasing else (a > b) for a, b in pairs):
            return True
    return False


def predicted_maximal(w: Perm, shape: Partition) -> bool:
    """Which w the classification theorem says are shape-maximal (with l(w) = |shape|)."""
    if coxeter_length(w) != sum(shape):
        return False
    if len(shape) == 1:
        return _has_monotone_word(w, increasing=False)
    if shape[0] == 1:
        return _has_monotone_word(w, increasing=True)
    return is_totally_commutative(w)


def check_classification(
    shape: Sequence[int], *, perms: Iterable[Perm] | None = None, caps: Caps | None = None
) -> VerificationReport:
    shape = make_partition(shape)
    n = sum(shape)
    if n < 1:
        raise SuiteError("shape must be non-empty")
    (caps or Caps.from_env()).check_length(n)
    report = VerificationReport("classification", {"shape": list(shape)})
    with _timed(report):
        maximal = []
        for w in perms if perms is not None else enumerate_length_n(n):
            report.checked_count += 1
            got = is_lambda_maximal(w, shape)
            if got:
                maximal.append(list(w))
            if got != predicted_maximal(w, shape):
                report.fail(
                    "maximality disagrees with prediction",
                    perm=list(w),
                    maximal=got,
                    a=eg_count(shape, w),
                    f=hook_count(shape),
                )
        report.parameters["maximal"] = maximal
    return report


def check_maximal_lemmas(n_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """Totally commutative w are maximal for every shape; w with fewer
    support letters than its length are maximal for none."""
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("maximal_lemmas", {"n_max": n_max})
    with _timed(report):
        for w in _perms_up_to(n_max):
            if not w:
                continue
            coeffs = eg_coefficients(w)
            report.checked_count += 1
            if is_totally_commutative(w):
                for shape, a in coeffs.items():
                    if a != hook_count(shape):
                        report.fail("totally commutative but not maximal", perm=list(w), shape=list(shape), a=a)
            if len(support(w)) < coxeter_length(w):
                for shape, a in coeffs.items():
                    if a == hook_count(shape):
                        report.fail("short support yet maximal", perm=list(w), shape=list(shape), a=a)
    return report


WordSource = Callable[[Perm], Iterable[Word]]


def check_support_invariance(
    n_max: int,
    *,
    perms: Iterable[Perm] | None = None,
    words: WordSource = reduced_words,
    caps: Caps | None = None,
) -> VerificationReport:
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("support_invariance", {"n_max": n_max})
    with _timed(report):
        for w in perms if perms is not None else _perms_up_to(n_max):
            report.checked_count += 1
            letter_sets = {frozenset(word): word for word in words(w)}
            if len(letter_sets) > 1:
                report.fail(
                    "reduced words with different letter sets",
                    perm=list(w),
                    words=[list(word) for word in sorted(letter_sets.values())],
                )
    return report


def _all_before(word: Word, a: int, b: int) -> bool:
    last_a = max((i for i, v in enumerate(word) if v == a), default=-1)
    first_b = min((i for i, v in enumerate(word) if v == b), default=len(word))
    return last_a < first_b


def check_order_lemma(
    n_max: int,
    *,
    perms: Iterable[Perm] | None = None,
    words: WordSource = reduced_words,
    caps: Caps | None = None,
) -> VerificationReport:
    """For adjacent support letters a, b, "every a precedes every b" holds
    in all reduced words or in none."""
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("order_lemma", {"n_max": n_max})
    with _timed(report):
        for w in perms if perms is not None else _perms_up_to(n_max):
            report.checked_count += 1
            red = list(words(w))
            supp = sorted(support(w))
            for a in supp:
                for b in (a - 1, a + 1):
                    if b not in supp:
                        continue
                    verdicts = {_all_before(word, a, b) for word in red}
                    if len(verdicts) > 1:
                        report.fail("order of adjacent letters not constant", perm=list(w), a=a, b=b)
    return report


def check_tits_connectivity(
    n_max: int, *, perms: Iterable[Perm] | None = None, caps: Caps | None = None
) -> VerificationReport:
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("tits_connectivity", {"n_max": n_max})
    with _timed(report):
        for w in perms if perms is not None else _perms_up_to(n_max):
            report.checked_count += 1
            red = set(reduced_words(w))
            reached = tits_component(min(red))
            if reached != red:
                report.fail(
                    "Tits moves do not connect Red(w)",
                    perm=list(w),
                    unreached=[list(x) for x in sorted(red - reached)],
                )
    return report


def check_sweep_proposition(size_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """sweep sends every standard tableau to a semistandard one of the same shape."""
    (caps or Caps.from_env()).check_size(size_max)
    report = VerificationReport("sweep_proposition", {"size_max": size_max})
    with _timed(report):
        for n in range(0, size_max + 1):
            for shape in partitions_of(n):
                for u in enumerate_syt(shape):
                    report.checked_count += 1
                    image = sweep_map(u)
                    if image.shape != u.shape or validate(image) is Kind.NEITHER:
                        report.fail("sweep image not semistandard", tableau=_tab(u), sweep=_tab(image))
        report.checked_count += 1
        if sweep_map(FIGURE2_STD) != FIGURE2_SWEEP:
            report.fail("worked example sweep mismatch", tableau=_tab(FIGURE2_STD), sweep=_tab(sweep_map(FIGURE2_STD)))
    return report


def check_schensted_identity(n_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """sum of f^shape over shapes of size n equals inv(n); also checks the
    hook-length formula against SYT enumeration and the involution
    recurrence against brute force."""
    (caps or Caps.from_env()).check_size(n_max)
    report = VerificationReport("schensted_identity", {"n_max": n_max})
    with _timed(report):
        sums = {}
        for n in range(0, n_max + 1):
            total = 0
            for shape in partitions_of(n):
                report.checked_count += 1
                f = hook_count(shape)
                listed = len(enumerate_syt(shape))
                if f != listed:
                    report.fail("hook formula disagrees with enumeration", shape=list(shape), hook=f, listed=listed)
                total += f
            sums[n] = total
            if total != involutions(n):
                report.fail("sum of f^shape differs from inv(n)", n=n, sum=total, inv=involutions(n))
            if n <= 8 and involutions(n) != involutions_bruteforce(n):
                report.fail("involution recurrence disagrees with brute force", n=n)
        report.parameters["sums"] = sums
    return report


def check_staircase(n_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """EG(w_n) = inv(n) with a_{w_n,shape} = f^shape, and relabelling i -> 2i-1
    maps SYT(shape) onto EG(shape, w_n)."""
    if n_max < 1:
        raise SuiteError("n_max must be positive")
    (caps or Caps.from_env()).check_size(n_max)
    report = VerificationReport("staircase", {"n_max": n_max})
    with _timed(report):
        for n in range(1, n_max + 1):
            w = staircase_witness(n)
            total = 0
            for shape in partitions_of(n):
                report.checked_count += 1
                listed = enumerate_eg(shape, w)
                image = sorted(syt_to_eg(t, n).rows for t in enumerate_syt(shape))
                total += len(listed)
                if len(listed) != hook_count(shape):
                    report.fail("a_{w_n,shape} differs from f^shape", n=n, shape=list(shape), a=len(listed))
                if image != [t.rows for t in listed]:
                    report.fail("relabelled SYT do not match EG(shape, w_n)", n=n, shape=list(shape))
            if total != involutions(n):
                report.fail("EG(w_n) differs from inv(n)", n=n, eg=total, inv=involutions(n))
    return report


def check_normalization(n_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """Gap compression is harmless: over every length-n permutation in
    S_{2n+1}, normalizing keeps EG(w) and the maximum matches the canonical
    search."""
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("normalization", {"n_max": n_max})
    with _timed(report):
        maxima = {}
        for n in range(1, n_max + 1):
            canonical = set(enumerate_length_n(n))
            full = sorted(words_bfs(n, 2 * n))
            stats = {}
            for w in full:
                report.checked_count += 1
                stats[w] = sum(eg_coefficients(w).values())
                rep = normalize(w)
                if rep not in canonical:
                    report.fail("normal form missing from canonical set", perm=list(w), normal=list(rep))
                elif sum(eg_coefficients(rep).values()) != stats[w]:
                    report.fail("normalization changed EG", perm=list(w), normal=list(rep))
            canon_max = max(sum(eg_coefficients(w).values()) for w in canonical)
            maxima[n] = max(stats.values())
            if maxima[n] != canon_max:
                report.fail("maximum over S_{2n+1} differs from canonical maximum", n=n)
        report.parameters["maxima"] = maxima
    return report


def check_eg_membership(n_max: int, *, caps: Caps | None = None) -> VerificationReport:
    """Every enumerated tableau passes the EG predicate."""
    (caps or Caps.from_env()).check_length(n_max)
    report = VerificationReport("eg_membership", {"n_max": n_max})
    with _timed(report):
        for w in _perms_up_to(n_max):
            for shape in partitions_of(coxeter_length(w)):
                for t in enumerate_eg(shape, w):
                    report.checked_count += 1
                    if not is_eg_tableau(t, w):
                        report.fail("enumerated tableau is not EG", perm=list(w), tableau=_tab(t))
    return report


# suite name -> (parameter kind, default)
DEFAULTS: dict[str, tuple[str, int]] = {
    "injectivity": ("length", 5),
    "max": ("length", 5),
    "classification": ("length", 5),
    "lemmas": ("length", 5),
    "support": ("length", 5),
    "order": ("length", 5),
    "tits": ("length", 5),
    "membership": ("length", 5),
    "normalization": ("length", 4),
    "sweep": ("size", 7),
    "schensted": ("size", 8),
    "staircase": ("size", 7),
}
SUITES = tuple(DEFAULTS)


def _run_one(name: str, n: int, caps: Caps) -> list[VerificationReport]:
    if name == "max":
        return [check_max_theorem(k, caps=caps) for k in range(1, n + 1)]
    if name == "classification":
        return [check_classification(s, caps=caps) for k in range(1, n + 1) for s in partitions_of(k)]
    single = {
        "injectivity": check_injectivity,
        "lemmas": check_maximal_lemmas,
        "support": check_support_invariance,
        "order": check_order_lemma,
        "tits": check_tits_connectivity,
        "membership": check_eg_membership,
        "normalization": check_normalization,
        "sweep": check_sweep_proposition,
        "schensted": check_schensted_identity,
        "staircase": check_staircase,
    }
    return [single[name](n, caps=caps)]


def resolve_suites(names: str | Sequence[str]) -> list[str]:
    if isinstance(names, str):
        names = [s.strip() for s in names.split(",") if s.strip()]
    out: list[str] = []
    for name in names:
        if name == "all":
            out.extend(s for s in SUITES if s not in out)
        elif name in DEFAULTS:
            if name not in out:
                out.append(name)
        else:
            raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(('all',) + SUITES)}")
    if not out:
        raise SuiteError("no suite selected")
    return out


def run_suite(
    suites: str | Sequence[str] = "all",
    *,
    max_length: int | None = None,
    size_max: int | None = None,
    caps: Caps | None = None,
) -> list[VerificationReport]:
    """Run the named suites in canonical order.

    ``max_length`` overrides the parameter of every length-bounded suite,
    ``size_max`` that of every size-bounded suite.  All caps are checked
    before anything runs.
    """
    caps = caps or Caps.from_env()
    plan = []
    for name in resolve_suites(suites):
        kind, default = DEFAULTS[name]
        override = max_length if kind == "length" else size_max
        n = default if override is None else override
        if n < 1:
            raise SuiteError(f"suite {name!r} needs a positive bound, got {n}")
        (caps.check_length if kind == "length" else caps.check_size)(n)
        plan.append((name, n))
    reports: list[VerificationReport] = []
    for name, n in plan:
        reports.extend(_run_one(name, n, caps))
    return reports


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


__all__ = [
    "Caps",
    "CapExceeded",
    "EGTableau",
    "SUITES",
    "SuiteError",
    "VerificationReport",
    "all_passed",
    "check_classification",
    "check_eg_membership",
    "check_injectivity",
    "check_max_theorem",
    "check_maximal_lemmas",
    "check_normalization",
    "check_order_lemma",
    "check_schensted_identity",
    "check_staircase",
    "check_support_invariance",
    "check_sweep_proposition",
    "check_tits_connectivity",
    "predicted_maximal",
    "run_suite",
]
