"""Exhaustive desk-scale verification of the degree-bound statement catalog.

Every check scans a finite window of the group exhaustively and either asserts
a claim (pass/fail, with replayable witnesses on failure) or records what it
saw (advisory).  The catalog numbering is stable: ids beginning ``lemma-3`` /
``cor-3`` / ``theorem-3`` concern the regime m_st = 3 with m_sr >= 7, ids
beginning ``lemma-4`` / ``cor-4`` the regime m_st >= 4 (the suffix statements
4.1-4.5 already hold once m_sr >= 4, the degree statements 4.6-4.8 need
m_sr >= 5).  Statements with a free choice between t and r expand into one
check per concrete assignment, e.g. ``lemma-4.7[a=t]`` and ``lemma-4.7[a=r]``.

Running a check whose parameter hypothesis the current group does not satisfy
is allowed and useful (negative controls); such runs are flagged ``advisory``
and never fail, whatever they find.

Pair scans can be split across worker processes (``jobs``).  Workers return
plain histograms and word strings, and the merge is order-independent, so the
report is byte-identical for every job count.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from time import perf_counter

from .coxeter import CoxeterGroup, Element, GroupParams, R, S, T, TheoremCase
from .hecke import HeckeAlgebra
from .words import word_from_text

FORMAT_VERSION = 1
WITNESS_CAP = 100       # witnesses stored per report; the total is still counted
ARGMAX_CAP = 16

DEFAULT_PAIR_CAP = 8    # pair scans: both factors run over lengths <= this
DEFAULT_SINGLE_CAP = 10  # single-element scans (suffix patterns)


@dataclass
class CheckReport:
    """Outcome of one check run; serializes to one entry of the report document."""

    check_id: str
    claim: str
    n_cap: int | None
    status: str                    # pass | fail | advisory
    hypothesis_met: bool
    bound: int | None
    max_degree_seen: int | None
    scanned: int
    violations_total: int
    witnesses: list[tuple[str, ...]]
    histogram: dict[int, int]
    argmax: list[tuple[str, ...]] = field(default_factory=list)
    extras: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "claim": self.claim,
            "N": self.n_cap,
            "status": self.status,
            "hypothesis_met": self.hypothesis_met,
            "bound": self.bound,
            "max_degree_seen": self.max_degree_seen,
            "scanned": self.scanned,
            "violations": self.violations_total,
            "witnesses": [list(w) for w in self.witnesses],
            "argmax": [list(w) for w in self.argmax],
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
            "extras": self.extras,
            "seconds": self.seconds,
        }


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    kind: str                     # suffix | sandwich | degree | parabolic | coset | scan
    claim: str
    applies: Callable[[GroupParams], bool]
    bound: Callable[[GroupParams], int | None]
    payload: tuple = ()
    hyp: Callable | None = None   # degree-like kinds: (group, x, y) -> bool
    build: Callable | None = None  # degree-like kinds: (group, x, y) -> (left, right)
    default_cap: int | None = DEFAULT_PAIR_CAP


# ----- parameter-hypothesis predicates ---------------------------------------

def _case_a(p: GroupParams) -> bool:
    return p.case is TheoremCase.CASE_A


def _case_b(p: GroupParams) -> bool:
    return p.case is TheoremCase.CASE_B


def _sec4_weak(p: GroupParams) -> bool:
    # the suffix and sandwich statements of the m_st >= 4 regime
    return p.m_sr >= 4 and p.m_st >= 4


def _in_scope(p: GroupParams) -> bool:
    return p.case is not TheoremCase.OUT_OF_SCOPE


def _always(p: GroupParams) -> bool:
    return True


def _bound_none(p: GroupParams):
    return None


def _bound_msr(p: GroupParams) -> int:
    return p.m_sr


def _bound_max(p: GroupParams) -> int:
    return max(p.m_sr, p.m_st)


def _bound_case(p: GroupParams) -> int | None:
    return p.degree_bound()


def _bound_const(k: int):
    def bound(p: GroupParams) -> int:
        return k
    return bound


# ----- pair hypotheses and factor builders ------------------------------------

def _true_hyp(group, x, y) -> bool:
    return True


def _avoid_hyp(gens):
    gset = frozenset(gens)

    def hyp(group, x, y):
        return not (x.right_descents & gset) and not (y.left_descents & gset)
    return hyp


def _exact_hyp(right_of_x, left_of_y):
    rset = frozenset(right_of_x)
    lset = frozenset(left_of_y)

    def hyp(group, x, y):
        return x.right_descents == rset and y.left_descents == lset
    return hyp


def _coset_hyp(group, x, y) -> bool:
    # both factors must carry a nontrivial piece of the s-r parabolic,
    # with at least three letters of it between them
    _, w_part = group.parabolic_decompose(x, (S, R), side="right")
    u_part, _ = group.parabolic_decompose(y, (S, R), side="left")
    return (w_part.length >= 1 and u_part.length >= 1
            and w_part.length + u_part.length >= 3)


def _identity_build(group, x, y):
    return x, y


def _factor_build(left_gens, right_gens):
    def build(group, x, y):
        left = x if left_gens is None else group.multiply(
            x, group.longest_parabolic(left_gens))
        right = y if right_gens is None else group.multiply(
            group.longest_parabolic(right_gens), y)
        return left, right
    return build


# ----- the catalog -------------------------------------------------------------

def _suffix(check_id, pat_a, pat_b, applies, claim):
    return CheckSpec(check_id, "suffix", claim, applies, _bound_none,
                     payload=(pat_a, pat_b), default_cap=DEFAULT_SINGLE_CAP)


def _sandwich(check_id, gens, min_w, applies, claim):
    return CheckSpec(check_id, "sandwich", claim, applies, _bound_none,
                     payload=(tuple(sorted(gens)), min_w))


_REGISTRY_ORDER = [
    _suffix("lemma-3.1", "st", "sr", _case_a,
            "no element admits reduced forms ending in both st and sr"),
    _suffix("cor-3.2", "srs", "t", _case_a,
            "no element admits reduced forms ending in both srs and t"),
    _suffix("cor-3.3", "srsr", "t", _case_a,
            "no element admits reduced forms ending in both srsr and t"),
    _suffix("lemma-3.4", "ts", "r", _case_a,
            "no element admits reduced forms ending in both ts and r"),
    _sandwich("lemma-3.5", (S, R), 5, _case_a,
              "x(w)y with w in the s-r parabolic, l(w) >= 5, s and r outside "
              "R(x) and L(y): lengths add and the outer descent sets transfer"),
    CheckSpec("lemma-3.6", "degree",
              "s,t outside R(x) and L(y): deg f_{x*w_st, y, z} <= 1",
              _case_a, _bound_const(1),
              hyp=_avoid_hyp((S, T)), build=_factor_build((S, T), None)),
    CheckSpec("lemma-3.7", "degree",
              "t,r outside R(x) and L(y): deg f_{x*tr, y, z} <= 2",
              _case_a, _bound_const(2),
              hyp=_avoid_hyp((T, R)), build=_factor_build((T, R), None)),
    CheckSpec("cor-3.8", "degree",
              "R(x)={r}, L(y)={t}: deg f_{x*w_st, w_sr*y, z} <= 2",
              _case_a, _bound_const(2),
              hyp=_exact_hyp((R,), (T,)), build=_factor_build((S, T), (S, R))),
    CheckSpec("lemma-3.9", "degree",
              "R(x)={s}, L(y)={t}: deg f_{x*tr, w_sr*y, z} <= 3",
              _case_a, _bound_const(3),
              hyp=_exact_hyp((S,), (T,)), build=_factor_build((T, R), (S, R))),
    CheckSpec("lemma-3.10", "degree",
              "R(x)={s}, L(y)={r}: deg f_{x*tr, w_st*y, z} <= 4",
              _case_a, _bound_const(4),
              hyp=_exact_hyp((S,), (R,)), build=_factor_build((T, R), (S, T))),
    CheckSpec("lemma-3.11", "parabolic",
              "products inside the s-r parabolic stay supported there with "
              "deg f_{w,u,v} <= l(v)",
              _always, _bound_none, default_cap=None),
    CheckSpec("lemma-3.12", "coset",
              "x = x1*w and y = u*y1 coset-split over the s-r parabolic with "
              "l(w), l(u) >= 1 and l(w)+l(u) >= 3: deg f_{x,y,z} <= m_sr",
              _case_a, _bound_msr,
              hyp=_coset_hyp, build=_identity_build),
    CheckSpec("theorem-3.13", "degree",
              "deg f_{x,y,z} <= m_sr for all pairs (m_st = 3 regime)",
              _case_a, _bound_msr,
              hyp=_true_hyp, build=_identity_build),
    _suffix("lemma-4.1", "r", "ts", _sec4_weak,
            "no element admits reduced forms ending in both r and ts"),
    _suffix("cor-4.2", "t", "rs", _sec4_weak,
            "no element admits reduced forms ending in both t and rs"),
    _suffix("lemma-4.3a", "r", "sts", _sec4_weak,
            "no element admits reduced forms ending in both r and sts"),
    _suffix("lemma-4.3b", "r", "tst", _sec4_weak,
            "no element admits reduced forms ending in both r and tst"),
    _suffix("lemma-4.3c", "t", "srs", _sec4_weak,
            "no element admits reduced forms ending in both t and srs"),
    _suffix("lemma-4.3d", "t", "rsr", _sec4_weak,
            "no element admits reduced forms ending in both t and rsr"),
    _suffix("lemma-4.4", "sr", "st", _sec4_weak,
            "no element admits reduced forms ending in both sr and st"),
    _sandwich("lemma-4.5[a=t]", (S, T), 4, _sec4_weak,
              "sandwich transfer through the s-t parabolic for l(w) >= 4"),
    _sandwich("lemma-4.5[a=r]", (S, R), 4, _sec4_weak,
              "sandwich transfer through the s-r parabolic for l(w) >= 4"),
    CheckSpec("lemma-4.6", "degree",
              "t,r outside R(x) and L(y): deg f_{x*tr, y, z} <= 1",
              _case_b, _bound_const(1),
              hyp=_avoid_hyp((T, R)), build=_factor_build((T, R), None)),
    CheckSpec("lemma-4.7[a=t]", "degree",
              "R(x)={t}, L(y)={s}: deg f_{x*w_sr, tr*y, z} <= 2",
              _case_b, _bound_const(2),
              hyp=_exact_hyp((T,), (S,)), build=_factor_build((S, R), (T, R))),
    CheckSpec("lemma-4.7[a=r]", "degree",
              "R(x)={r}, L(y)={s}: deg f_{x*w_st, tr*y, z} <= 2",
              _case_b, _bound_const(2),
              hyp=_exact_hyp((R,), (S,)), build=_factor_build((S, T), (T, R))),
    CheckSpec("lemma-4.8", "degree",
              "deg f_{x*tr, y, z} <= max(m_sr, m_st) for all pairs",
              _case_b, _bound_max,
              hyp=_true_hyp, build=_factor_build((T, R), None)),
    CheckSpec("theorem", "degree",
              "deg f_{x,y,z} <= m_sr (m_st = 3 regime) or max(m_sr, m_st) "
              "(m_st >= 4 regime) for all pairs",
              _in_scope, _bound_case,
              hyp=_true_hyp, build=_identity_build),
    CheckSpec("scan-degrees", "scan",
              "histogram of structure-constant degrees over the window "
              "(informational)",
              _always, _bound_none,
              hyp=_true_hyp, build=_identity_build),
]

REGISTRY: dict[str, CheckSpec] = {spec.check_id: spec for spec in _REGISTRY_ORDER}
CHECK_IDS: list[str] = [spec.check_id for spec in _REGISTRY_ORDER]


def list_checks() -> str:
    """Stable sorted listing of check ids with their claims."""
    lines = []
    for check_id in sorted(REGISTRY):
        spec = REGISTRY[check_id]
        lines.append(f"{check_id:18s} [{spec.kind}] {spec.claim}")
    return "\n".join(lines)


# ----- scan cores ---------------------------------------------------------------

def _scan_pair_range(group: CoxeterGroup, hecke: HeckeAlgebra, spec: CheckSpec,
                     n_cap: int, lo: int, hi: int) -> dict:
    elems = group.enumerate_up_to(n_cap)
    n = len(elems)
    bound = spec.bound(group.params)
    hist: dict[int, int] = {}
    stratum_max: dict[int, int] = {}
    max_deg: int | None = None
    argmax: list[tuple[str, str]] = []
    violations: list[tuple[str, str, str]] = []
    scanned = 0
    for k in range(lo, hi):
        i, j = divmod(k, n)
        x, y = elems[i], elems[j]
        if not spec.hyp(group, x, y):
            continue
        left, right = spec.build(group, x, y)
        vec = hecke.product(left, right)
        scanned += 1
        pair_max = -1
        for z, f in vec.items():
            d = f.degree
            hist[d] = hist.get(d, 0) + 1
            if d > pair_max:
                pair_max = d
            if bound is not None and d > bound:
                violations.append((x.text, y.text, z.text))
        if max_deg is None or pair_max > max_deg:
            max_deg = pair_max
            argmax = [(x.text, y.text)]
        elif pair_max == max_deg:
            argmax.append((x.text, y.text))
        stratum = max(x.length, y.length)
        if pair_max > stratum_max.get(stratum, -1):
            stratum_max[stratum] = pair_max
    return {
        "hist": hist,
        "stratum_max": stratum_max,
        "max_deg": max_deg,
        "argmax": argmax,
        "violations": violations,
        "scanned": scanned,
    }


_WORKER_ENGINES: dict[tuple[int, int, bool], tuple[CoxeterGroup, HeckeAlgebra]] = {}


def _pair_chunk_worker(args: tuple) -> dict:
    m_sr, m_st, memo, check_id, n_cap, lo, hi = args
    key = (m_sr, m_st, memo)
    engine = _WORKER_ENGINES.get(key)
    if engine is None:
        group = CoxeterGroup(GroupParams(m_sr, m_st))
        engine = (group, HeckeAlgebra(group, memo=memo))
        _WORKER_ENGINES[key] = engine
    group, hecke = engine
    return _scan_pair_range(group, hecke, REGISTRY[check_id], n_cap, lo, hi)


def _merge_pair_parts(parts: list[dict]) -> dict:
    hist: dict[int, int] = {}
    stratum_max: dict[int, int] = {}
    max_deg: int | None = None
    violations: list[tuple[str, str, str]] = []
    scanned = 0
    for part in parts:
        for d, c in part["hist"].items():
            hist[d] = hist.get(d, 0) + c
        for s, d in part["stratum_max"].items():
            if d > stratum_max.get(s, -1):
                stratum_max[s] = d
        if part["max_deg"] is not None and (max_deg is None or part["max_deg"] > max_deg):
            max_deg = part["max_deg"]
        violations.extend(part["violations"])
        scanned += part["scanned"]
    argmax = sorted({pair for part in parts if part["max_deg"] == max_deg
                     for pair in part["argmax"]})
    return {
        "hist": hist,
        "stratum_max": stratum_max,
        "max_deg": max_deg,
        "argmax": argmax[:ARGMAX_CAP],
        "violations": sorted(violations),
        "scanned": scanned,
    }


def _run_pair_scan(group: CoxeterGroup, spec: CheckSpec, n_cap: int,
                   jobs: int, memo: bool) -> dict:
    total = len(group.enumerate_up_to(n_cap)) ** 2
    if jobs <= 1 or spec.check_id not in REGISTRY or total == 0:
        hecke = HeckeAlgebra(group, memo=memo)
        parts = [_scan_pair_range(group, hecke, spec, n_cap, 0, total)]
        return _merge_pair_parts(parts)
    n_chunks = min(total, jobs * 4)
    edges = [total * i // n_chunks for i in range(n_chunks + 1)]
    args = [(group.params.m_sr, group.params.m_st, memo, spec.check_id,
             n_cap, edges[i], edges[i + 1]) for i in range(n_chunks)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_pair_chunk_worker, args))
    return _merge_pair_parts(parts)


def _run_suffix(group: CoxeterGroup, spec: CheckSpec, n_cap: int) -> dict:
    pat_a = word_from_text(spec.payload[0])
    pat_b = word_from_text(spec.payload[1])
    for pat, text in ((pat_a, spec.payload[0]), (pat_b, spec.payload[1])):
        if not group.is_reduced(pat):
            return {"witnesses": [], "scanned": 0,
                    "skip_note": f"pattern {text!r} is not reduced at these bond labels"}
    witnesses = []
    elems = group.enumerate_up_to(n_cap)
    for w in elems:
        if group.ends_with_reduced(w, pat_a) and group.ends_with_reduced(w, pat_b):
            witnesses.append((w.text,))
    return {"witnesses": witnesses, "scanned": len(elems)}


def _run_sandwich(group: CoxeterGroup, spec: CheckSpec, n_cap: int) -> dict:
    gens, min_w = spec.payload
    gset = frozenset(gens)
    middles = [w for w in group.parabolic_elements(gens) if w.length >= min_w]
    xs = [x for x in group.enumerate_up_to(n_cap) if not (x.right_descents & gset)]
    ys = [y for y in group.enumerate_up_to(n_cap) if not (y.left_descents & gset)]
    witnesses = []
    scanned = 0
    for x in xs:
        for w in middles:
            xw = group.multiply(x, w)
            for y in ys:
                scanned += 1
                wy = group.multiply(w, y)
                xwy = group.multiply(xw, y)
                ok = (xwy.length == x.length + w.length + y.length
                      and xwy.right_descents == wy.right_descents
                      and xwy.left_descents == xw.left_descents)
                if not ok:
                    witnesses.append((x.text, w.text, y.text))
    return {"witnesses": witnesses, "scanned": scanned}


def _run_parabolic(group: CoxeterGroup, spec: CheckSpec) -> dict:
    hecke = HeckeAlgebra(group)
    members = group.parabolic_elements((S, R))
    member_set = set(members)
    top = group.longest_parabolic((S, R))
    witnesses = []
    hist: dict[int, int] = {}
    max_deg = None
    scanned = 0
    for w in members:
        for u in members:
            scanned += 1
            for v, f in hecke.product(w, u).items():
                d = f.degree
                hist[d] = hist.get(d, 0) + 1
                if max_deg is None or d > max_deg:
                    max_deg = d
                if v not in member_set or d > v.length:
                    witnesses.append((w.text, u.text, v.text))
    top_deg = hecke.f_coeff(top, top, top).degree
    extras = {
        "parabolic_order": len(members),
        "top_triple_degree": top_deg,
        "bound_attained_at_top": top_deg == group.params.m_sr,
    }
    return {"witnesses": witnesses, "scanned": scanned, "hist": hist,
            "max_deg": max_deg, "extras": extras}


# ----- the public runner ---------------------------------------------------------

def resolve_spec(check: str | CheckSpec) -> CheckSpec:
    if isinstance(check, CheckSpec):
        return check
    spec = REGISTRY.get(check)
    if spec is None:
        raise KeyError(f"unknown check id {check!r}; see list_checks()")
    return spec


def run_check(group: CoxeterGroup, check: str | CheckSpec, n_cap: int | None = None,
              jobs: int = 1, memo: bool = False) -> CheckReport:
    """Run one check against one group and assemble its report."""
    spec = resolve_spec(check)
    if n_cap is None:
        n_cap = spec.default_cap
    applies = spec.applies(group.params)
    bound = spec.bound(group.params)
    start = perf_counter()

    hist: dict[int, int] = {}
    stratum_max: dict[int, int] = {}
    max_deg = None
    argmax: list[tuple[str, ...]] = []
    extras: dict = {}
    if spec.kind in ("degree", "coset", "scan"):
        merged = _run_pair_scan(group, spec, n_cap, jobs, memo)
        witnesses = merged["violations"]
        hist = merged["hist"]
        stratum_max = merged["stratum_max"]
        max_deg = merged["max_deg"]
        argmax = merged["argmax"]
        scanned = merged["scanned"]
        if spec.kind == "scan":
            extras["stratum_max"] = {str(k): stratum_max[k] for k in sorted(stratum_max)}
    elif spec.kind == "suffix":
        out = _run_suffix(group, spec, n_cap)
        witnesses = sorted(out["witnesses"])
        scanned = out["scanned"]
        if "skip_note" in out:
            extras["skipped"] = out["skip_note"]
            applies = False
    elif spec.kind == "sandwich":
        out = _run_sandwich(group, spec, n_cap)
        witnesses = sorted(out["witnesses"])
        scanned = out["scanned"]
    elif spec.kind == "parabolic":
        out = _run_parabolic(group, spec)
        witnesses = sorted(out["witnesses"])
        scanned = out["scanned"]
        hist = out["hist"]
        max_deg = out["max_deg"]
        extras = out["extras"]
        n_cap = None
    else:  # pragma: no cover - registry is closed
        raise AssertionError(f"unhandled check kind {spec.kind!r}")

    violations_total = len(witnesses)
    if spec.kind == "scan" or not applies:
        status = "advisory"
    else:
        status = "pass" if violations_total == 0 else "fail"
    return CheckReport(
        check_id=spec.check_id,
        claim=spec.claim,
        n_cap=n_cap,
        status=status,
        hypothesis_met=applies,
        bound=bound,
        max_degree_seen=max_deg,
        scanned=scanned,
        violations_total=violations_total,
        witnesses=[tuple(w) for w in witnesses[:WITNESS_CAP]],
        histogram=hist,
        argmax=[tuple(a) for a in argmax],
        extras=extras,
        seconds=perf_counter() - start,
    )


def run_suite(group: CoxeterGroup, checks: list[str] | None = None,
              n_cap: int | None = None, jobs: int = 1, memo: bool = False
              ) -> list[CheckReport]:
    """Run several checks in declared order; None means the whole catalog."""
    ids = CHECK_IDS if checks is None else checks
    return [run_check(group, cid, n_cap=n_cap, jobs=jobs, memo=memo) for cid in ids]


def build_report_doc(params: GroupParams, reports: list[CheckReport]) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "params": {"m_sr": params.m_sr, "m_st": params.m_st},
        "case": params.case.value,
        "checks": [r.to_dict() for r in reports],
    }


def replay_witness(group: CoxeterGroup, check: str | CheckSpec,
                   witness: tuple[str, ...]) -> bool:
    """Re-derive one witness from scratch; True iff the violation reproduces."""
    spec = resolve_spec(check)
    if spec.kind == "suffix":
        (w_text,) = witness
        w = group.reduce(word_from_text(w_text))
        pat_a = word_from_text(spec.payload[0])
        pat_b = word_from_text(spec.payload[1])
        return group.ends_with_reduced(w, pat_a) and group.ends_with_reduced(w, pat_b)
    if spec.kind == "sandwich":
        x_text, w_text, y_text = witness
        gens, min_w = spec.payload
        gset = frozenset(gens)
        x = group.reduce(word_from_text(x_text))
        w = group.reduce(word_from_text(w_text))
        y = group.reduce(word_from_text(y_text))
        if (x.right_descents & gset) or (y.left_descents & gset) or w.length < min_w:
            return False
        xw = group.multiply(x, w)
        wy = group.multiply(w, y)
        xwy = group.multiply(xw, y)
        return not (xwy.length == x.length + w.length + y.length
                    and xwy.right_descents == wy.right_descents
                    and xwy.left_descents == xw.left_descents)
    if spec.kind == "parabolic":
        w_text, u_text, v_text = witness
        hecke = HeckeAlgebra(group)
        w = group.reduce(word_from_text(w_text))
        u = group.reduce(word_from_text(u_text))
        v = group.reduce(word_from_text(v_text))
        members = set(group.parabolic_elements((S, R)))
        f = hecke.f_coeff(w, u, v)
        return (not f.is_zero) and (v not in members or f.degree > v.length)
    if spec.kind in ("degree", "coset"):
        x_text, y_text, z_text = witness
        bound = spec.bound(group.params)
        if bound is None:
            return False
        x = group.reduce(word_from_text(x_text))
        y = group.reduce(word_from_text(y_text))
        z = group.reduce(word_from_text(z_text))
        if not spec.hyp(group, x, y):
            return False
        left, right = spec.build(group, x, y)
        f = HeckeAlgebra(group).f_coeff(left, right, z)
        return (not f.is_zero) and f.degree > bound
    raise AssertionError(f"unhandled check kind {spec.kind!r}")


# convenience wrappers mirroring the operation-level view of the verifier ---------

def check_no_double_suffix(group: CoxeterGroup, pattern: tuple[str, str],
                           n_cap: int = DEFAULT_SINGLE_CAP,
                           check_id: str = "custom-suffix") -> CheckReport:
    spec = _suffix(check_id, pattern[0], pattern[1], _always,
                   f"no element ends reduced in both {pattern[0]} and {pattern[1]}")
    return run_check(group, spec, n_cap=n_cap)


def check_sandwich(group: CoxeterGroup, gens, min_w_len: int,
                   n_cap: int = DEFAULT_PAIR_CAP) -> CheckReport:
    spec = _sandwich("custom-sandwich", tuple(sorted(gens)), min_w_len, _always,
                     "sandwich transfer (custom parameters)")
    return run_check(group, spec, n_cap=n_cap)


def check_degree_pattern(group: CoxeterGroup, pattern_id: str,
                         n_cap: int | None = None, jobs: int = 1,
                         memo: bool = False) -> CheckReport:
    spec = resolve_spec(pattern_id)
    if spec.kind != "degree":
        raise ValueError(f"{pattern_id!r} is not a degree-pattern check")
    return run_check(group, spec, n_cap=n_cap, jobs=jobs, memo=memo)


def check_parabolic(group: CoxeterGroup) -> CheckReport:
    return run_check(group, "lemma-3.11")


def check_coset_product(group: CoxeterGroup, n_cap: int | None = None,
                        jobs: int = 1, memo: bool = False) -> CheckReport:
    return run_check(group, "lemma-3.12", n_cap=n_cap, jobs=jobs, memo=memo)


def check_main_theorem(group: CoxeterGroup, n_cap: int | None = None,
                       jobs: int = 1, memo: bool = False) -> CheckReport:
    return run_check(group, "theorem", n_cap=n_cap, jobs=jobs, memo=memo)


def scan_degrees(group: CoxeterGroup, n_cap: int | None = None,
                 jobs: int = 1, memo: bool = False) -> CheckReport:
    return run_check(group, "scan-degrees", n_cap=n_cap, jobs=jobs, memo=memo)
