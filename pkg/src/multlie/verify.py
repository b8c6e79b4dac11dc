"""Named, individually runnable checks of the structural results.

Every check takes an :class:`Instance` (an algebra plus a candidate ideal)
and returns a :class:`VerificationReport`.  Hypothesis failures give the
verdict ``inapplicable``; ``refuted`` always carries a concrete witness.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import builtins, kernels
from .algebra import (MultLieAlg, all_ideals, double_center, ideal_violation, is_ideal,
                      lie_center, mult_lie_center, restrict)
from .analysis import find_isomorphism, star_nilpotency_class, star_solvable
from .constructions import (direct_product_mla, excision, excision_maps, fiber_ideal,
                            idealization, iterated_iso_pair, t2_isomorphisms)
from .errors import OrderTooLarge, UnknownTheoremId, VerificationFailed
from .group import center, commutator_subgroup
from .io import parse_ideal
from .subset import MAX_ORDER, Subset

VERIFIED, REFUTED, INAPPLICABLE = "verified", "refuted", "inapplicable"


@dataclass
class Instance:
    name: str
    algebra: MultLieAlg
    ideal: Subset


@dataclass
class VerificationReport:
    theorem: str
    instance: str
    verdict: str
    witness: Optional[list] = None
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "instance": self.instance, "verdict": self.verdict,
                "witness": self.witness, "detail": self.detail,
                "seconds": round(self.seconds, 4)}


class _Inapplicable(Exception):
    pass


class _Refuted(Exception):
    def __init__(self, detail, witness):
        super().__init__(detail)
        self.witness = list(witness) if witness else ["<no witness>"]


def _hypothesis(inst: Instance) -> None:
    """Ideal contained in the group center; raises _Inapplicable otherwise."""
    M, I = inst.algebra, inst.ideal
    bad = ideal_violation(M, I)
    if bad is not None:
        raise _Inapplicable(f"not an ideal ({bad[0]} at {bad[1]})")
    Z = center(M.group)
    outside = [a for a in I if a not in Z]
    if outside:
        raise _Inapplicable(f"ideal not central: {M.label_of(outside[0])} is outside Z(G)")


def _fits(n: int) -> None:
    if n > MAX_ORDER:
        raise _Inapplicable(f"needs a carrier of order {n}, above the cap of {MAX_ORDER}")


def _pairs(E: MultLieAlg, A: Iterable[int], B: Iterable[int]) -> Subset:
    A, B = set(A), set(B)
    return E.group.subset(x for x, (g, a) in enumerate(E.label.coords) if g in A and a in B)


# ------------------------------------------------------------------ checks

def check_L1(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    G, s = M.group, M.s
    for g in range(M.order):
        for h in range(M.order):
            for b in I:
                v = s[g][b]
                if G.conj(h, v) != v or s[G.conj(h, g)][b] != v:
                    raise _Refuted("conjugation moved g*b", (g, h, b))
    lz, mz = lie_center(M) & I, mult_lie_center(M) & I
    if lz != mz:
        raise _Refuted("LZ(G) and MZ(G) differ on I", sorted(set(lz) ^ set(mz)))
    return "conjugation-invariant on all (g,h,b); LZ and MZ agree on I"


def check_T1(inst):
    from .errors import AxiomViolation

    _hypothesis(inst)
    _fits(inst.algebra.order * len(inst.ideal))
    for build in (excision, idealization):
        try:
            build(inst.algebra, inst.ideal)
        except AxiomViolation as exc:
            raise _Refuted(f"{build.__name__}: {exc}", (build.__name__, exc.axiom) + exc.witnesses)
    return "both star tables satisfy all five axioms"


def check_l1(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I))
    E, P = excision(M, I), idealization(M, I)
    trivial_on_I = all(M.s[a][b] == M.identity for a in I for b in I)
    iso = find_isomorphism(E, P) is not None
    if iso != trivial_on_I:
        raise _Refuted("isomorphism does not match I*I = 1", ("I*I=1", trivial_on_I, "iso", iso))
    J = fiber_ideal(M, P)
    if not is_ideal(P, J) or any(P.s[x][y] != P.identity for x in J for y in J):
        raise _Refuted("J is not a star-trivial ideal of the idealization", sorted(J))
    return f"I*I=1 is {trivial_on_I}, excision ~ idealization is {iso}; J*''J = 1"


def check_PI(inst):
    _hypothesis(inst)
    _fits(inst.algebra.order * len(inst.ideal))
    try:
        p, i = excision_maps(inst.algebra, inst.ideal)
    except VerificationFailed as exc:
        raise _Refuted(str(exc), exc.witness or ("p o i",))
    return f"p: {p.kind}, i: {i.kind}, p o i = id"


def check_P3(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I))
    E, P = excision(M, I), idealization(M, I)
    ideals = all_ideals(M)
    checked = 0
    for K in ideals:
        for J in ideals:
            if not J <= I:
                continue
            cond = all(M.s[a][k] in J for a in I for k in K)
            for tag, A in (("excision", E), ("idealization", P)):
                got = is_ideal(A, _pairs(A, K, J))
                checked += 1
                if got != cond:
                    raise _Refuted(f"{tag}: K+J ideal is {got} but I*K in J is {cond}",
                                   (tag, sorted(K), sorted(J)))
    return f"{checked} (K, J, construction) triples agree"


def check_P4(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I))
    G = M.group
    one = [G.identity]
    for tag, A in (("excision", excision(M, I)), ("idealization", idealization(M, I))):
        zz = double_center(M)
        expected = {
            "commutator": _pairs(A, commutator_subgroup(G), one),
            "center": _pairs(A, center(G), I),
            "lie_center": _pairs(A, lie_center(M), lie_center(M) & I),
            "double_center": _pairs(A, zz, zz & I),
            "mult_lie_center": _pairs(A, mult_lie_center(M), mult_lie_center(M) & I),
        }
        got = {
            "commutator": commutator_subgroup(A.group),
            "center": center(A.group),
            "lie_center": lie_center(A),
            "double_center": double_center(A),
            "mult_lie_center": mult_lie_center(A),
        }
        for key in expected:
            if expected[key] != got[key]:
                diff = sorted(set(expected[key]) ^ set(got[key]))
                raise _Refuted(f"{tag}: {key} formula fails", (tag, key) + tuple(diff))
    return "all five subset formulas hold for excision and idealization"


def check_DIAG(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I))
    E, P = excision(M, I), idealization(M, I)
    inv = M.group.i
    delta = {(inv[a], a) for a in I}
    D_E = E.group.subset(x for x, c in enumerate(E.label.coords) if c in delta)
    bad = ideal_violation(E, D_E)
    if bad is not None:
        raise _Refuted("diagonal is not an ideal of the excision", (bad[0],) + tuple(bad[1]))
    D_P = P.group.subset(x for x, c in enumerate(P.label.coords) if c in delta)
    return f"diagonal ideal in excision; in idealization: {is_ideal(P, D_P)}"


def check_ITERA(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I) ** 2)
    done = []
    for n in (2, 3):
        if M.order * len(I) ** n > MAX_ORDER:
            break
        try:
            iterated_iso_pair(M, I, n)
        except VerificationFailed as exc:
            raise _Refuted(f"n={n}: {exc}", (n,) + tuple(exc.witness or ()))
        done.append(n)
    return f"phi/psi mutually inverse isomorphisms for n in {done}"


def check_T2(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order ** 2)
    try:
        maps = t2_isomorphisms(M, I)
    except VerificationFailed as exc:
        raise _Refuted(str(exc), exc.witness or ("t2",))
    for k, f in enumerate(maps, 1):
        if len(set(f.map)) != len(f.map):
            raise _Refuted(f"f{k} is not injective", (k,))
    return "f1, f2, f3 are isomorphisms onto the excision"


def check_NILP(inst):
    _hypothesis(inst)
    M, I = inst.algebra, inst.ideal
    _fits(M.order * len(I))
    c = star_nilpotency_class(M)
    if c is None:
        raise _Inapplicable("algebra is not star-nilpotent")
    P, E = idealization(M, I), excision(M, I)
    for tag, A in (("idealization", P), ("excision", E)):
        cA = star_nilpotency_class(A)
        if cA is None or cA > c:
            raise _Refuted(f"{tag} class {cA} exceeds {c}", (tag, c, cA))
    sM, sP = star_solvable(M), star_solvable(P)
    if sM is not None and sP is None:
        raise _Refuted("idealization is not solvable", ("solvable", sM, sP))
    return f"class {c}; idealization and excision stay within it"


def check_R14(inst):
    M = inst.algebra
    zz = double_center(M)
    _fits(M.order * len(zz))
    E, P = excision(M, zz), idealization(M, zz)
    D = direct_product_mla(M, restrict(M, zz))
    for (a, A), (b, B) in ((("excision", E), ("idealization", P)),
                           (("excision", E), ("direct", D)),
                           (("idealization", P), ("direct", D))):
        if find_isomorphism(A, B) is None:
            raise _Refuted(f"{a} and {b} are not isomorphic", (a, b))
    return f"three constructions by Z(G) meet LZ(G) (order {len(zz)}) are isomorphic"


def check_R12(inst):
    M = inst.algebra
    G = M.group
    C = commutator_subgroup(G)
    if not C <= center(G):
        raise _Inapplicable("group is not nilpotent of class at most 2")
    if not is_ideal(M, C):
        raise _Inapplicable("[G,G] is not an ideal")
    _fits(M.order * len(C))
    bad = [(a, b) for a in C for b in C if M.s[a][b] != M.identity]
    if bad:
        raise _Refuted("[G,G]*[G,G] is not trivial", bad[0])
    if find_isomorphism(excision(M, C), idealization(M, C)) is None:
        raise _Refuted("excision and idealization by [G,G] differ", ("iso",))
    return "[G,G]*[G,G] = 1 and both constructions agree"


CHECKS: dict[str, Callable] = {
    "L1": check_L1,
    "T1": check_T1,
    "l1": check_l1,
    "PI": check_PI,
    "P3": check_P3,
    "P4": check_P4,
    "DIAG": check_DIAG,
    "ITERA": check_ITERA,
    "T2": check_T2,
    "NILP": check_NILP,
    "R14": check_R14,
    "R12": check_R12,
}


def verify_theorem(theorem: str, inst: Instance) -> VerificationReport:
    try:
        check = CHECKS[theorem]
    except KeyError:
        raise UnknownTheoremId(f"unknown theorem id {theorem!r}; known: {', '.join(CHECKS)}") from None
    t0 = time.perf_counter()
    try:
        detail = check(inst)
        verdict, witness = VERIFIED, None
    except _Inapplicable as exc:
        verdict, witness, detail = INAPPLICABLE, None, str(exc)
    except OrderTooLarge as exc:
        verdict, witness, detail = INAPPLICABLE, None, str(exc)
    except _Refuted as exc:
        verdict, witness, detail = REFUTED, exc.witness, str(exc)
    return VerificationReport(theorem, inst.name, verdict, witness, detail,
                              time.perf_counter() - t0)


def builtin_instances() -> list[Instance]:
    out = []
    for name, alg, spec in builtins.INSTANCES:
        M = builtins.algebra(alg)
        out.append(Instance(name, M, parse_ideal(M, spec)))
    return out


def _job(args):
    theorem, inst = args
    return verify_theorem(theorem, inst)


def run_suite(theorems: Iterable[str], instances: list[Instance],
              n_workers: Optional[int] = None) -> list[VerificationReport]:
    """Every (theorem, instance) pair, in theorem-then-instance order."""
    theorems = list(theorems)
    for t in theorems:
        if t not in CHECKS:
            raise UnknownTheoremId(f"unknown theorem id {t!r}")
    jobs = [(t, inst) for t in theorems for inst in instances]
    n_workers = kernels.workers() if n_workers is None else n_workers
    if n_workers <= 1:
        return [_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(_job, jobs))
