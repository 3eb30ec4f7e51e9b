"""Differential sweep harness: enumerate instance families, compare every
classification predicate against its brute-force oracle, and aggregate.

Any disagreement is reported as a counterexample; since the
characterizations are proved, a nonempty mismatch list indicts the
implementation, never the mathematics.  Reports are deterministic for a
fixed plan (including the seed), apart from the wall-time field.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from . import linear_semigroup as lsg
from . import transform_semigroup as tsg
from .gflinear import GFMatrix, all_subspaces, null_space
from .semigroups import (
    FiniteSemigroup,
    SizeCapExceeded,
    closure_elements,
    element_oracle,
    inverse_by_unique_inverses,
    semigroup_oracle,
    subgroup_containing,
)
from .transformations import IndexSubset, Transformation, canonical_transversal, image_kernel

SCHEMA_VERSION = 1

_EXHAUSTIVE_BASE_LIMIT = 16
_DEFINITION_CHECK_LIMIT = 200
_PAIR_SCAN_LIMIT = 32
_TRANSVERSAL_CAP = 4096

_IMPLICATIONS = (
    ("inverse", "regular"),
    ("unit_regular", "regular"),
    ("completely_regular", "regular"),
)


@dataclass(frozen=True)
class SweepPlan:
    """One homogeneous slice of a sweep.

    ``source`` is ``{"kind": "exhaustive"}`` or ``{"kind": "seeded",
    "count": C, "seed": S}``; the per-cell RNG seed is derived from S and
    the cell key, so identical plans reproduce identical reports.
    ``element_cap`` bounds the build size for element-level checks
    (0 disables them); builds beyond ``size_cap`` are skipped, not run.
    """

    family: str
    ns: tuple = ()
    pns: tuple = ()
    subset_sizes: tuple | None = None
    source: tuple = ("exhaustive",)
    modes: tuple = ("regular",)
    size_cap: int = 1_000_000
    element_cap: int = 4096
    definition_checks: bool = True
    transversal_checks: bool = True
    alpha_family_checks: bool = True

    def __post_init__(self):
        if self.family not in ("transformation", "linear"):
            raise ValueError(f"unknown family {self.family!r}")
        allowed = tsg.T_SEMIGROUP_MODES if self.family == "transformation" else lsg.L_SEMIGROUP_MODES
        for m in self.modes:
            if m not in allowed:
                raise ValueError(f"mode {m!r} not available for family {self.family!r}")
        if self.source[0] not in ("exhaustive", "seeded"):
            raise ValueError(f"unknown source {self.source!r}")

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "ns": list(self.ns),
            "pns": [list(pn) for pn in self.pns],
            "subset_sizes": None if self.subset_sizes is None else list(self.subset_sizes),
            "source": list(self.source),
            "modes": list(self.modes),
            "size_cap": self.size_cap,
            "element_cap": self.element_cap,
            "definition_checks": self.definition_checks,
            "transversal_checks": self.transversal_checks,
            "alpha_family_checks": self.alpha_family_checks,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepPlan":
        return cls(
            family=d["family"],
            ns=tuple(d.get("ns", ())),
            pns=tuple(tuple(pn) for pn in d.get("pns", ())),
            subset_sizes=None if d.get("subset_sizes") is None else tuple(d["subset_sizes"]),
            source=tuple(d.get("source", ("exhaustive",))),
            modes=tuple(d.get("modes", ("regular",))),
            size_cap=d.get("size_cap", 1_000_000),
            element_cap=d.get("element_cap", 4096),
            definition_checks=d.get("definition_checks", True),
            transversal_checks=d.get("transversal_checks", True),
            alpha_family_checks=d.get("alpha_family_checks", True),
        )


@dataclass
class SweepReport:
    """Aggregate of one run_sweep call; see SweepPlan for determinism."""

    plan: dict
    instances_run: int = 0
    semigroup_checks: dict = field(default_factory=dict)
    semigroup_agreements: dict = field(default_factory=dict)
    element_checks: dict = field(default_factory=dict)
    element_agreements: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    implication_violations: list = field(default_factory=list)
    size_formula_violations: list = field(default_factory=list)
    transversal_failures: list = field(default_factory=list)
    transversal_checks_run: int = 0
    definition_failures: list = field(default_factory=list)
    definition_checks_run: int = 0
    alpha_family_failures: list = field(default_factory=list)
    alpha_family_checks_run: int = 0
    witnesses_checked: int = 0
    skipped: list = field(default_factory=list)
    wall_time_s: float = 0.0
    schema_version: int = SCHEMA_VERSION

    @property
    def clean(self) -> bool:
        return not (
            self.mismatches
            or self.implication_violations
            or self.size_formula_violations
            or self.transversal_failures
            or self.definition_failures
            or self.alpha_family_failures
        )

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "schema_version": self.schema_version,
            "plan": self.plan,
            "instances_run": self.instances_run,
            "semigroup_checks": self.semigroup_checks,
            "semigroup_agreements": self.semigroup_agreements,
            "element_checks": self.element_checks,
            "element_agreements": self.element_agreements,
            "mismatches": self.mismatches,
            "implication_violations": self.implication_violations,
            "size_formula_violations": self.size_formula_violations,
            "transversal_failures": self.transversal_failures,
            "transversal_checks_run": self.transversal_checks_run,
            "definition_failures": self.definition_failures,
            "definition_checks_run": self.definition_checks_run,
            "alpha_family_failures": self.alpha_family_failures,
            "alpha_family_checks_run": self.alpha_family_checks_run,
            "witnesses_checked": self.witnesses_checked,
            "skipped": self.skipped,
        }
        if include_timing:
            d["wall_time_s"] = self.wall_time_s
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SweepReport":
        known = {f for f in cls.__dataclass_fields__}
        return cls(**{k: v for k, v in d.items() if k in known})

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing=include_timing), sort_keys=True, indent=2)


# -- base monoids and subsemigroup sources --------------------------------


@lru_cache(maxsize=None)
def _base_monoid(kind: str, size: int, p: int | None = None) -> FiniteSemigroup:
    if kind == "transformation":
        elems = [Transformation(t) for t in product(range(size), repeat=size)]
    elif kind == "linear":
        elems = [
            GFMatrix(p, [flat[i * size:(i + 1) * size] for i in range(size)], cols=size)
            for flat in product(range(p), repeat=size * size)
        ]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return FiniteSemigroup(elems)


@lru_cache(maxsize=None)
def enumerate_subsemigroups(kind: str, base_size: int, source: tuple, p: int | None = None) -> tuple:
    """Nonempty composition-closed subsets of T(k) or L(W), exhaustively or
    as deduplicated seeded-random closures of 1-3 generators.

    Exhaustive enumeration is refused past a 16-element base monoid (the
    2^16 subset scan is the tractability boundary)."""
    base = _base_monoid(kind, base_size, p)
    if source[0] == "exhaustive":
        m = len(base)
        if m > _EXHAUSTIVE_BASE_LIMIT:
            raise ValueError("intractable exhaustive request")
        table = base.table
        out = []
        for mask in range(1, 1 << m):
            idxs = [i for i in range(m) if mask >> i & 1]
            closed = True
            for a in idxs:
                row = table[a]
                for b in idxs:
                    if not mask >> row[b] & 1:
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                out.append(FiniteSemigroup([base.elements[i] for i in idxs]))
        return tuple(out)
    _, count, seed = source
    rng = random.Random(seed)
    seen: dict[frozenset, FiniteSemigroup] = {}
    for _ in range(count):
        k = rng.randint(1, 3)
        gens = [base.elements[rng.randrange(len(base.elements))] for _ in range(k)]
        elems = closure_elements(gens)
        key = frozenset(elems)
        if key not in seen:
            seen[key] = FiniteSemigroup(elems)
    return tuple(seen.values())


def _cell_source(plan: SweepPlan, cell_key: str) -> tuple:
    if plan.source[0] == "exhaustive":
        return ("exhaustive",)
    _, count, seed = plan.source
    return ("seeded", count, f"{seed}:{cell_key}")


def _instances(plan: SweepPlan):
    """Deterministically ordered (cell_key, instance) pairs for the plan."""
    if plan.family == "transformation":
        for n in plan.ns:
            sizes = plan.subset_sizes if plan.subset_sizes is not None else range(1, n + 1)
            for size in sizes:
                if not 1 <= size <= n:
                    continue
                for members in combinations(range(n), size):
                    y = IndexSubset(n, members)
                    cell = f"t:{n}:{y.to_text()}"
                    source = _cell_source(plan, cell)
                    for s_y in enumerate_subsemigroups("transformation", size, source):
                        yield cell, tsg.TInstance(n, y, s_y)
    else:
        for p, n in plan.pns:
            sizes = plan.subset_sizes if plan.subset_sizes is not None else range(n + 1)
            for dim in sizes:
                if not 0 <= dim <= n:
                    continue
                for w in all_subspaces(p, n, dim):
                    cell = f"l:{p}:{n}:" + ";".join(",".join(map(str, r)) for r in w.basis)
                    source = _cell_source(plan, cell)
                    for s_w in enumerate_subsemigroups("linear", dim, source, p=p):
                        yield cell, lsg.LInstance(p, n, w, s_w)


# -- per-instance checks ----------------------------------------------------


def _has_identity(inst) -> bool:
    return inst.has_identity_y if isinstance(inst, tsg.TInstance) else inst.has_identity_w


def _expected_size(inst) -> int:
    if isinstance(inst, tsg.TInstance):
        return len(inst.s_y) * inst.n ** (inst.n - len(inst.y))
    k = inst.w.dim
    return len(inst.s_w) * inst.p ** (inst.n * (inst.n - k))


def _check_transversal_t(inst, f) -> str | None:
    pair = canonical_transversal(f, inst.y)
    t_set = set(pair.t.members)
    ty_set = set(pair.t_on_y.members)
    image, _, classes = image_kernel(f)
    if len(t_set) != len(image):
        return "transversal size differs from image size"
    for cls in classes:
        if len(t_set.intersection(cls)) != 1:
            return "a fibre does not meet T exactly once"
    if ty_set != t_set.intersection(inst.y.members):
        return "T on Y is not the trace of T"
    y_fibers: dict[int, set] = {}
    for x in inst.y.members:
        y_fibers.setdefault(f.map[x], set()).add(x)
    for fiber in y_fibers.values():
        if len(ty_set & fiber) != 1:
            return "a restricted fibre does not meet T on Y exactly once"
    return None


def _check_transversal_l(inst, f) -> str | None:
    from .gflinear import canonical_transversal_subspace

    tr = canonical_transversal_subspace(f, inst.w)
    ns = null_space(f)
    if tr.u.dim != f.rank:
        return "transversal dimension differs from rank"
    if tr.u.intersect(ns).dim != 0:
        return "transversal meets the null space"
    if tr.u_meet_w != tr.u.intersect(inst.w):
        return "U meet W is not the trace of U"
    ns_on_w = ns.intersect(inst.w)  # null space of the restriction, ambient
    if tr.u_meet_w.dim + ns_on_w.dim != inst.w.dim:
        return "U meet W is not a complement of the restricted null space"
    if tr.u_meet_w.intersect(ns_on_w).dim != 0:
        return "U meet W meets the restricted null space"
    return None


def _definition_failures(s: FiniteSemigroup) -> list[str]:
    """Dual-definition agreement: inverse via unique inverses, completely
    regular via an explicit containing-subgroup search."""
    out = []
    by_idem = semigroup_oracle(s, "inverse").holds
    by_unique = inverse_by_unique_inverses(s).holds
    if by_idem != by_unique:
        out.append(f"inverse definitions disagree ({by_idem} vs {by_unique})")
    scan_pairs = len(s) <= _PAIR_SCAN_LIMIT
    for a in s.elements:
        std = element_oracle(s, a, "completely_regular").holds
        sub = subgroup_containing(s, a, scan_pairs=scan_pairs) is not None
        if std != sub:
            out.append(
                f"completely-regular definitions disagree on {a.to_text()} ({std} vs {sub})"
            )
    return out


def run_sweep(plan: SweepPlan) -> SweepReport:
    """Run every theorem-vs-oracle comparison the plan asks for."""
    t0 = time.perf_counter()
    rep = SweepReport(plan=plan.to_dict())
    for mode in plan.modes:
        rep.semigroup_checks[mode] = 0
        rep.semigroup_agreements[mode] = 0
    for mode in ("regular", "unit_regular"):
        if mode in plan.modes:
            rep.element_checks[mode] = 0
            rep.element_agreements[mode] = 0
    is_t = plan.family == "transformation"
    seen_definition_keys: set[frozenset] = set()

    for cell, inst in _instances(plan):
        rep.instances_run += 1
        key = inst.key()
        try:
            _run_instance(plan, rep, inst, key, is_t, seen_definition_keys)
        except SizeCapExceeded as exc:
            rep.skipped.append({"instance": key, "reason": str(exc)})
        except Exception as exc:  # recorded, not fatal: the report must survive
            rep.mismatches.append(
                {"instance": key, "element": None, "mode": "error", "detail": repr(exc)}
            )
    rep.wall_time_s = time.perf_counter() - t0
    return rep


def _run_instance(plan, rep, inst, key, is_t, seen_definition_keys):
    build = tsg.build_tsy(inst, plan.size_cap) if is_t else lsg.build_lsw(inst, plan.size_cap)
    expected = _expected_size(inst)
    if len(build) != expected:
        rep.size_formula_violations.append(
            {"instance": key, "expected": expected, "actual": len(build)}
        )
    has_ident = _has_identity(inst)

    oracle_holds: dict[str, bool] = {}
    for mode in plan.modes:
        if mode == "unit_regular" and not has_ident:
            continue
        thm = tsg.thm_semigroup_t(inst, mode) if is_t else lsg.thm_semigroup_l(inst, mode)
        orc = semigroup_oracle(build, mode)
        oracle_holds[mode] = orc.holds
        rep.semigroup_checks[mode] += 1
        if thm.holds == orc.holds:
            rep.semigroup_agreements[mode] += 1
        else:
            rep.mismatches.append(
                {
                    "instance": key, "element": None, "mode": mode,
                    "theorem": thm.holds, "oracle": orc.holds, "clause": thm.clause,
                }
            )
    for strong, weak in _IMPLICATIONS:
        if oracle_holds.get(strong) and weak in oracle_holds and not oracle_holds[weak]:
            rep.implication_violations.append(
                {"instance": key, "implication": f"{strong} => {weak}"}
            )

    if plan.element_cap and len(build) <= plan.element_cap:
        element_modes = [
            m for m in ("regular", "unit_regular")
            if m in plan.modes and (m != "unit_regular" or has_ident)
        ]
        for f in build.elements:
            for mode in element_modes:
                thm = tsg.thm_element_t(inst, f, mode) if is_t else lsg.thm_element_l(inst, f, mode)
                orc = element_oracle(build, f, mode)
                rep.element_checks[mode] += 1
                if thm.holds == orc.holds:
                    rep.element_agreements[mode] += 1
                else:
                    rep.mismatches.append(
                        {
                            "instance": key, "element": f.to_text(), "mode": mode,
                            "theorem": thm.holds, "oracle": orc.holds, "clause": thm.clause,
                        }
                    )
                if thm.holds and thm.witness is not None:
                    rep.witnesses_checked += 1  # witnesses are verified inside the predicate

    if plan.transversal_checks and len(build) <= _TRANSVERSAL_CAP:
        for f in build.elements:
            problem = _check_transversal_t(inst, f) if is_t else _check_transversal_l(inst, f)
            rep.transversal_checks_run += 1
            if problem is not None:
                rep.transversal_failures.append(
                    {"instance": key, "element": f.to_text(), "problem": problem}
                )

    if plan.alpha_family_checks and not is_t:
        if inst.w.codim == 1 and lsg.is_subgroup_of_aut(inst.s_w):
            verdict = lsg.alpha_family_check(inst, plan.size_cap)
            rep.alpha_family_checks_run += 1
            if not verdict.holds:
                rep.alpha_family_failures.append({"instance": key, "clause": verdict.clause})

    if plan.definition_checks:
        inner = inst.s_y if is_t else inst.s_w
        for s in (build, inner):
            skey = s.key()
            if len(s) <= _DEFINITION_CHECK_LIMIT and skey not in seen_definition_keys:
                seen_definition_keys.add(skey)
                rep.definition_checks_run += 1
                for problem in _definition_failures(s):
                    rep.definition_failures.append({"instance": key, "problem": problem})
