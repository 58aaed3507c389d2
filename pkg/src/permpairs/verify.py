"""Exhaustive (or sampled) verification of every theorem over S_n x S_n.

Each named check counts passes and failures and keeps the first
counterexample in enumeration order.  Work can be split across processes by
white permutation; merging sums the counters and keeps the earliest
counterexample, so the report does not depend on the number of workers.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from math import factorial
from multiprocessing import get_context

from . import right_action
from .errors import DomainError
from .graph import (
    build_model,
    component_pairs,
    expected_rerouted_model,
    model_partition,
    num_components,
    two_walks_exist,
    wild_walk_criterion,
    tame_walk_criterion,
)
from .oracle import DEFAULT_CAP, _perm, is_transitive_oracle, symmetric_group_images
from .pair import (
    ExceptionalClass,
    GenusEffect,
    PermutationPair,
    TypeClass,
    boundary_walk,
    classify_exceptional,
    classify_type,
    delete_edge,
    deletion_face_cycles,
    euler_characteristic,
    genus_effect,
    synthetic_genus,
)
from .perm import GroundSet, canonical_cycle, format_permutation
from .reroute import (
    BRANCH_ROWS,
    branch_row,
    conjugate_by_transposition,
    double_reroute,
    double_reroute_direct,
    reroute,
)

GROUPS = {
    "reroute": ["reroute_theorem", "genus_change", "reroute_clauses", "reroute_port"],
    "branch": ["branch_prediction"],
    "classify": ["type_port", "exceptional_port", "exceptional_symmetry"],
    "genus": ["genus_effect", "genus_effect_port", "genus_step_bound"],
    "conjugation": ["double_reroute_direct", "conjugation_equivalence"],
    "transitivity": ["transitivity_theorem", "nu_decrease_corollary", "sphere_corollary"],
    "walks": ["wild_walks", "tame_walks", "two_walks_sufficient"],
    "graph": ["model_operation", "oracle_graph", "counting_boundary", "genus_additivity"],
    "faces": ["chi_parity", "deletion", "deletion_faces", "boundary_walks"],
    "transfer": ["orbit_transfer"],
}
ALL_GROUPS = tuple(GROUPS)

REROUTE_DELTA = {TypeClass.U: 1, TypeClass.N: -1}


@dataclass
class VerificationReport:
    degree: int
    cases_checked: int = 0
    expected_cases: int = 0
    checks: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)
    branch_coverage: dict = field(default_factory=dict)
    tame_witnesses: dict = field(default_factory=dict)
    groups: tuple = ()
    sampled: bool = False

    @property
    def failures(self) -> int:
        return sum(c["fail"] for c in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.cases_checked == self.expected_cases

    def passed(self, name) -> bool:
        c = self.checks.get(name)
        return c is not None and c["fail"] == 0 and c["pass"] > 0

    def uncovered_rows(self) -> list:
        return [r for r, n in self.branch_coverage.items() if n == 0]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "cases_checked": self.cases_checked,
            "expected_cases": self.expected_cases,
            "sampled": self.sampled,
            "groups": list(self.groups),
            "ok": self.ok,
            "failures": self.failures,
            "checks": {k: self.checks[k] for k in sorted(self.checks)},
            "counterexamples": {k: self.counterexamples[k] for k in sorted(self.counterexamples)},
            "branch_coverage": self.branch_coverage,
            "tame_witnesses": self.tame_witnesses,
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, default=str)


class _Recorder:
    def __init__(self):
        self.checks = {}
        self.counterexamples = {}
        self.coverage = {r.row_id: 0 for r in BRANCH_ROWS}
        self.witnesses = {}
        self.index = 0
        self.pair = None
        self.ab = None

    def check(self, name, ok, expected=None, actual=None):
        c = self.checks.setdefault(name, {"pass": 0, "fail": 0})
        if ok:
            c["pass"] += 1
            return
        c["fail"] += 1
        if name not in self.counterexamples:
            a, b = self.ab if self.ab else (None, None)
            self.counterexamples[name] = {
                "index": self.index,
                "white": format_permutation(self.pair.white),
                "black": format_permutation(self.pair.black),
                "a": str(a) if a is not None else None,
                "b": str(b) if b is not None else None,
                "expected": str(expected),
                "actual": str(actual),
            }

    def witness(self, name, data):
        if name not in self.witnesses:
            self.witnesses[name] = dict(data, index=self.index)


def _pair_level(rec, pair, groups, info):
    """Checks that depend on the pair only."""
    p = pair.product
    if "graph" in groups:
        model = build_model(pair)
        comps = num_components(model)
        rec.check("oracle_graph", info["transitive"] == (comps == 1), info["transitive"], comps == 1)
        rec.check("counting_boundary", p.num_cycles >= comps, f">= {comps}", p.num_cycles)
        parts = component_pairs(pair)
        total = sum(synthetic_genus(q) for q in parts)
        rec.check("genus_additivity", total == info["genus"] + len(parts) - 1,
                  info["genus"] + len(parts) - 1, total)
    if "faces" in groups:
        rec.check("chi_parity", info["chi"] % 2 == 0, "even", info["chi"])
        _deletion_checks(rec, pair, info)
        counts = {}
        for c in p.cycles():
            for x in boundary_walk(pair, c[0]):
                counts[x] = counts.get(x, 0) + 1
        rec.check("boundary_walks", all(counts.get(x) == 2 for x in pair.ground), "each edge twice", counts)


def _deletion_checks(rec, pair, info):
    if len(pair) < 2:
        return
    w, b, p = pair.white, pair.black, pair.product
    for e in pair.ground:
        if w(e) == e or b(e) == e:
            continue
        smaller = delete_edge(pair, e)
        one_face = p.orbit_id(e) == p.orbit_id(w(e))
        want = info["chi"] + (2 if one_face else 0)
        got = euler_characteristic(smaller)
        rec.check("deletion", got == want, want, got)
        # the new faces are the constructed cycles plus untouched old faces
        touched = {p.orbit_id(e), p.orbit_id(w(e))}
        expected = {canonical_cycle(c) for c in deletion_face_cycles(pair, e) if c}
        expected |= {c for i, c in enumerate(p.cycles()) if i not in touched}
        actual = set(smaller.product.cycles())
        rec.check("deletion_faces", expected == actual, expected, actual)


def _orbit_transfer(rec, pair, a, b, rp, aw, ab):
    p, pp = pair.product, rp.product
    wa = pair.white(a)
    S = {a, wa, b}
    # name: (start, end, rerouted head, rerouted tail, hypothesis).  C, B and D
    # get extra hypotheses: when they fail, their source sequence is also the
    # source of P1P2 (C with wa = a) or P4N (B and D with wa = b), whose
    # conclusion holds instead.  B with wa = a names a label that no longer exists.
    table = (
        ("P1P2", a, wa, [ab], b, True),
        ("P1P4", wa, b, [aw, wa], ab, wa not in (a, b)),
        ("P1P3", b, a, [b], aw, wa != a),
        ("P4N", b, wa, [b], b, True),
        ("P2N", wa, a, [aw, wa], aw, wa not in (a, b)),
        ("P3N", a, b, [ab], ab, wa != b),
        ("C", a, a, [ab], aw, wa != a),
        ("B", wa, wa, [aw, wa], b, wa not in (a, b)),
        ("D", b, b, [b], ab, wa != b),
    )
    for name, x, y, head, tail, hyp in table:
        if not hyp:
            continue
        interior = []
        z = p(x)
        while z not in S:
            interior.append(z)
            z = p(z)
        if z != y:
            continue  # no strict sequence from x to y
        seq = head + interior + [tail]
        ok = all(u in rp.ground and pp(u) == v for u, v in zip(seq, seq[1:])) and seq[0] in rp.ground
        degenerate = "wa=a" if wa == a else "wa=b" if wa == b else "generic"
        rec.check(f"orbit_transfer.{name}", ok, seq, f"not a rerouted sequence ({degenerate})")


def _op_clauses(pair, a, b, rp, aw, ab) -> list:
    """Which of the seven listed reroute properties fail."""
    w, bl = pair.white, pair.black
    W, B = rp.white, rp.black
    bad = []
    # both white rules name W(aW) when w(a) == b; the rule sending it to aB wins
    if w(a) == a:
        if W(aw) != aw:
            bad.append("white_at_aW")
    else:
        if (w(a) != b and W(aw) != w(a)) or any(W(x) != aw for x in pair.ground if x != a and w(x) == a):
            bad.append("white_at_aW")
    if w(a) == b:
        if W(aw) != ab:
            bad.append("white_into_aB")
    elif any(W(x) != ab for x in pair.ground if x != a and w(x) == b):
        bad.append("white_into_aB")
    if W(ab) != b:
        bad.append("white_at_aB")
    if any(W(x) != w(x) for x in pair.ground if x != a and w(x) not in (a, b)):
        bad.append("white_elsewhere")
    if B(aw) != aw:
        bad.append("black_at_aW")
    if bl(a) == a:
        if B(ab) != ab:
            bad.append("black_at_aB")
    elif B(ab) != bl(a) or any(B(x) != ab for x in pair.ground if x != a and bl(x) == a):
        bad.append("black_at_aB")
    if any(B(x) != bl(x) for x in pair.ground if x != a and bl(x) != a):
        bad.append("black_elsewhere")
    return bad


def _tuple_level(rec, pair, a, b, groups, info, cache, classify):
    t = classify(pair, a, b)
    p = pair.product
    need_reroute = groups & {"reroute", "branch", "graph", "transfer"}
    if need_reroute:
        r = reroute(pair, a, b)
        rp, aw, ab = r.pair, r.a_white, r.a_black

    if "reroute" in groups:
        g1 = synthetic_genus(rp)
        want = REROUTE_DELTA.get(t, 0)
        rec.check("reroute_theorem", g1 - info["genus"] == want, f"{t.value}: {want:+d}", g1 - info["genus"])
        lhs = info["chi"] - euler_characteristic(rp)
        rhs = p.num_cycles - rp.product.num_cycles
        books = (
            rp.white.num_cycles == pair.white.num_cycles
            and rp.black.num_cycles == pair.black.num_cycles + 1
            and len(rp) == len(pair) + 1
        )
        rec.check("genus_change", lhs == rhs and books, rhs, lhs)
        bad = _op_clauses(pair, a, b, rp, aw, ab)
        rec.check("reroute_clauses", not bad, "all seven rules hold", bad)
        if info["dicts"] is not None:
            via = right_action.reroute_as_pair(pair, a, b)
            rec.check("reroute_port", via == rp, rp, via)

    if "branch" in groups:
        row = branch_row(pair, a, b, t)
        rec.coverage[row.row_id] += 1
        actual = classify_type(rp, b, aw)
        rec.check("branch_prediction", row.predicted is actual, f"{row.row_id}: {row.predicted.value}", actual.value)

    ex = None
    if groups & {"classify", "transitivity", "walks"}:
        ex = classify_exceptional(pair, a, b)

    if "classify" in groups:
        back = cache.setdefault(("ex", b, a), classify_exceptional(pair, b, a))
        cache[("ex", a, b)] = ex
        sym = {
            ExceptionalClass.TAME_1A: ExceptionalClass.TAME_1B,
            ExceptionalClass.TAME_1B: ExceptionalClass.TAME_1A,
        }.get(ex, ex)
        ok = back is sym
        if ex is ExceptionalClass.WILD:
            ok = ok and classify_type(pair, a, b) is TypeClass.P2 and classify_type(pair, b, a) is TypeClass.P2
        rec.check("exceptional_symmetry", ok, sym, back)
        if info["dicts"] is not None:
            wd, bd = info["dicts"]
            name = right_action.type_name(wd, bd, a, b)
            rec.check("type_port", name == t.value, t.value, name)
            ported = {
                ExceptionalClass.TAME_1A: right_action.is_tame_exceptional_1a(wd, bd, a, b),
                ExceptionalClass.TAME_1B: right_action.is_tame_exceptional_1b(wd, bd, a, b),
                ExceptionalClass.TAME_2: right_action.is_tame_exceptional_2(wd, bd, a, b),
                ExceptionalClass.WILD: right_action.is_wild_exceptional(wd, bd, a, b),
            }
            mine = {k: ex is k for k in ported}
            ok = ported == mine and right_action.is_exceptional(wd, bd, a, b) == (ex is not ExceptionalClass.NONE)
            rec.check("exceptional_port", ok, mine, ported)

    need_conj = groups & {"genus", "conjugation", "transitivity", "walks"}
    if need_conj:
        key = ("conj", min(a, b), max(a, b))
        if key not in cache:
            conj = conjugate_by_transposition(pair, a, b)
            cache[key] = (conj, conj.product.num_cycles, is_transitive_oracle(conj), synthetic_genus(conj))
        conj, nu_t, trans_t, genus_t = cache[key]
        nu = p.num_cycles

    if "genus" in groups:
        effect = genus_effect(pair, a, b)
        dg = nu - nu_t
        rec.check("genus_step_bound", dg % 2 == 0 and abs(dg) <= 2, "|dg| <= 1", dg / 2)
        rec.check("genus_effect", effect.delta * 2 == dg, effect.value, dg // 2)
        if info["dicts"] is not None:
            wd, bd = info["dicts"]
            flags = (
                right_action.is_genus_raising(wd, bd, a, b),
                right_action.is_genus_lowering(wd, bd, a, b),
                right_action.is_genus_preserving(wd, bd, a, b),
            )
            mine = (effect is GenusEffect.RAISING, effect is GenusEffect.LOWERING, effect is GenusEffect.PRESERVING)
            rec.check("genus_effect_port", flags == mine, mine, flags)

    if "conjugation" in groups:
        dbl = double_reroute(pair, a, b)
        rec.check("double_reroute_direct", dbl == double_reroute_direct(pair, a, b), "equal", "differ")
        same = is_transitive_oracle(dbl) == trans_t and synthetic_genus(dbl) == genus_t
        rec.check("conjugation_equivalence", same and dbl.product.num_cycles == nu_t,
                  (trans_t, genus_t, nu_t), (is_transitive_oracle(dbl), synthetic_genus(dbl), dbl.product.num_cycles))

    if "transitivity" in groups and info["transitive"]:
        if ex is ExceptionalClass.NONE:
            rec.check("transitivity_theorem", trans_t, True, trans_t)
        if nu_t < nu:
            rec.check("nu_decrease_corollary", trans_t, True, trans_t)
        if info["genus"] == 0 and ex is not ExceptionalClass.WILD:
            rec.check("sphere_corollary", trans_t == (nu_t <= nu), nu_t <= nu, trans_t)
        if ex.is_tame:
            rec.witness("transitive" if trans_t else "non_transitive", {
                "white": format_permutation(pair.white),
                "black": format_permutation(pair.black),
                "a": a, "b": b, "class": ex.value,
            })

    if "walks" in groups and info["transitive"]:
        wild = wild_walk_criterion(pair, a, b)
        rec.check("wild_walks", wild == trans_t, trans_t, wild)
        if ex.is_tame:
            tame = tame_walk_criterion(pair, a, b)
            rec.check("tame_walks", tame == trans_t, trans_t, tame)
        if two_walks_exist(pair, a, b):
            rec.check("two_walks_sufficient", trans_t, True, trans_t)

    if "graph" in groups:
        got = model_partition(rp)
        want = expected_rerouted_model(pair, a, b)
        rec.check("model_operation", got == want, want, got)

    if "transfer" in groups:
        _orbit_transfer(rec, pair, a, b, rp, aw, ab)


def _run_chunk(args):
    degree, pair_indices, groups, classify = args
    groups = set(groups)
    n = degree
    images = symmetric_group_images(n)
    count = len(images)
    ground = GroundSet.range(n)
    rec = _Recorder()
    per_pair = n * (n - 1)
    cases = 0
    perms = {}

    def perm(i):
        if i not in perms:
            perms[i] = _perm(ground, images[i])
        return perms[i]

    for pi in pair_indices:
        wi, bi = divmod(pi, count)
        pair = PermutationPair(perm(wi), perm(bi))
        chi = euler_characteristic(pair)
        info = {
            "chi": chi,
            "genus": 1 - chi // 2,
            "transitive": is_transitive_oracle(pair),
            "dicts": right_action.to_dicts(pair),
        }
        rec.pair, rec.ab, rec.index = pair, None, pi * per_pair
        _pair_level(rec, pair, groups, info)
        cache = {}
        k = 0
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if a == b:
                    continue
                rec.ab, rec.index = (a, b), pi * per_pair + k
                k += 1
                _tuple_level(rec, pair, a, b, groups, info, cache, classify)
                cases += 1
    return cases, rec.checks, rec.counterexamples, rec.coverage, rec.witnesses


def _merge(report: VerificationReport, part):
    cases, checks, cexs, coverage, witnesses = part
    report.cases_checked += cases
    for name, c in checks.items():
        d = report.checks.setdefault(name, {"pass": 0, "fail": 0})
        d["pass"] += c["pass"]
        d["fail"] += c["fail"]
    for name, cx in cexs.items():
        old = report.counterexamples.get(name)
        if old is None or cx["index"] < old["index"]:
            report.counterexamples[name] = cx
    for row, n in coverage.items():
        report.branch_coverage[row] = report.branch_coverage.get(row, 0) + n
    for name, wdata in witnesses.items():
        old = report.tame_witnesses.get(name)
        if old is None or wdata["index"] < old["index"]:
            report.tame_witnesses[name] = wdata


def verify_all(
    degree: int,
    threads: int = 1,
    sample: int | None = None,
    seed: int = 0,
    groups=ALL_GROUPS,
    classify=classify_type,
    cap: int = DEFAULT_CAP,
) -> VerificationReport:
    """Check every property over S_n x S_n and all ordered (a, b), a != b.

    ``sample`` picks that many pairs uniformly (with ``seed``) instead of all
    of them.  ``classify`` replaces the type classifier used by the reroute
    and branch checks, which lets tests confirm that a broken classifier is
    caught.  ``degree`` above ``cap`` is rejected unless sampling.
    """
    if degree < 2 or (degree > cap and sample is None):
        raise DomainError(f"degree must be between 2 and {cap} (or sampled), got {degree}")
    unknown = set(groups) - set(GROUPS)
    if unknown:
        raise DomainError(f"unknown check groups: {sorted(unknown)}")
    total_pairs = factorial(degree) ** 2
    if sample is not None and sample < total_pairs:
        indices = sorted(random.Random(seed).sample(range(total_pairs), sample))
    else:
        indices = list(range(total_pairs))
    report = VerificationReport(
        degree=degree,
        expected_cases=len(indices) * degree * (degree - 1),
        groups=tuple(groups),
        sampled=len(indices) < total_pairs,
    )
    report.branch_coverage = {r.row_id: 0 for r in BRANCH_ROWS} if "branch" in groups else {}
    threads = max(1, int(threads))
    if threads == 1:
        _merge(report, _run_chunk((degree, indices, tuple(groups), classify)))
    else:
        chunks = [indices[i::threads] for i in range(threads)]
        with get_context("spawn").Pool(threads) as pool:
            for part in pool.map(_run_chunk, [(degree, c, tuple(groups), classify) for c in chunks]):
                _merge(report, part)
    if "branch" not in groups:
        report.branch_coverage = {}
    return report


def swapped_np1_classifier(pair, a, b):
    """A deliberately broken classifier (N and P1 exchanged)."""
    t = classify_type(pair, a, b)
    return {TypeClass.N: TypeClass.P1, TypeClass.P1: TypeClass.N}.get(t, t)
