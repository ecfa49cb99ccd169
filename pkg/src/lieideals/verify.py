"""Theorem suites: each statement compiled to a quantified check over
enumerated instances, with serialized witnesses on failure.

Suites are grouped by the structural hypotheses they need:

* s2 - identities valid in any ring;
* s3 - semiprime rings;
* s4 - the Lie-ideal trichotomy and plane criteria (simple unital);
* s5 - when L + aL contains a nonzero ideal (simple unital; the
  semiprime corollary also runs standalone);
* s6 - commuting powers of Lie ideals;
* s7 - products of Lie ideals containing ideals;
* s8 - centralizers of products.

Equivalences are checked instance-by-instance in both directions;
hypothesis-false instances count as vacuous, not as passes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .algebra import Algebra, Element, matrix_algebra
from .enumeration import all_lie_ideals, contains_nonzero_ideal
from .errors import (
    AssociativityError,
    BudgetExceededError,
    TheoremViolationError,
    UnsupportedAlgebraError,
)
from .finite_linalg import (
    Subspace,
    all_elements,
    span,
    span_rows,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
)
from .report import CheckReport, Collector, element_obj, relation, subspace_obj
from .classify import (
    _plane_span,
    abelian_equivalences,
    classify_lie_ideal,
    is_semiprime,
    is_simple,
    plane_lie_ideal_criterion,
)
from .classify import is_exceptional as _is_exceptional
from .subspace_calc import (
    all_idempotents,
    bracket_space,
    c_span,
    center,
    centralizer,
    commutator_space,
    dim_over_c,
    ideal_generated,
    idempotent_span,
    is_ideal,
    is_lie_ideal,
    is_unit,
    noncentral_elements,
    power_space,
    product_space,
    subring_closure,
)


@dataclass(frozen=True)
class VerifyConfig:
    max_power: int = 3
    max_factors: int = 3
    samples: int = 200
    seed: int = 0
    limit: int = 100000
    budget: int = 2**20
    tuple_cap: int = 100000
    exhaustive_cap: int = 2**12


DEFAULT_CONFIG = VerifyConfig()


# -- shared helpers ---------------------------------------------------------


def _exceptional(r: Algebra) -> bool:
    return (not r.is_commutative()) and _is_exceptional(r)


def _scan_elements(r: Algebra, cfg: VerifyConfig, sub: Subspace | None = None) -> np.ndarray:
    """Exhaustive element rows when small enough, else seeded random rows."""
    space = sub if sub is not None else r.full_space()
    if space.element_count() <= cfg.exhaustive_cap:
        return all_elements(space)
    rng = np.random.default_rng(cfg.seed)
    coeffs = rng.integers(0, r.field.p, size=(cfg.samples, space.dim), dtype=np.int64)
    return (coeffs @ space.basis) % r.field.p


def _a_times(r: Algebra, a: np.ndarray, l: Subspace) -> Subspace:
    """Span of a*L."""
    if l.is_zero():
        return l
    rows = np.einsum("i,lj,ijk->lk", a, l.basis, r.table) % r.field.p
    return span_rows(r.field, rows, r.dim)


def _noncentral_ideals(r: Algebra, cfg: VerifyConfig) -> list[Subspace]:
    z = center(r)
    return [l for l in all_lie_ideals(r, cfg.limit, cfg.budget) if not subspace_leq(l, z)]


@dataclass
class _IdealInfo:
    sub: Subspace
    csp: Subspace
    dimc: int
    plane_form: bool  # c_span equals Z(R)a + Z(R) for every noncentral a


def _ideal_infos(r: Algebra, cfg: VerifyConfig) -> list[_IdealInfo]:
    infos = []
    for k in _noncentral_ideals(r, cfg):
        csp = c_span(r, k)
        dimc = dim_over_c(r, csp)
        plane_form = dimc == 2
        if plane_form:
            for a in noncentral_elements(r, k):
                if _plane_span(r, a) != csp:
                    plane_form = False
                    break
        infos.append(_IdealInfo(k, csp, dimc, plane_form))
    return infos


def _sorted(reports: list[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda rep: (rep.check_id, rep.algebra))


# -- s2: any-ring identities ------------------------------------------------


def suite_s2_identities(
    r: Algebra, max_power: int = 3, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    full = r.full_space()
    ideals = all_lie_ideals(r, cfg.limit, cfg.budget)

    closure = Collector("s2.lie_closure_products", r.name)
    for k in ideals:
        for l in ideals:
            if k.is_zero() or l.is_zero():
                closure.vac()
                continue
            br = bracket_space(k, l, r)
            pr = product_space(k, l, r)
            closure.check(
                is_lie_ideal(r, br) and is_lie_ideal(r, pr),
                lambda br=br, pr=pr: relation("is_lie_ideal", subspace_obj(br), expect=True)
                | {"kind": "closure-of-lie-ideals", "product": subspace_obj(pr)},
            )

    lem_i = Collector("s2.lemma2.1.i", r.name)
    rng = np.random.default_rng(cfg.seed)
    for _ in range(50):
        k = int(rng.integers(0, r.dim + 1))
        rows = rng.integers(0, r.field.p, size=(k, r.dim), dtype=np.int64)
        a = span_rows(r.field, rows, r.dim) if k else r.zero_space()
        lhs = bracket_space(a, full, r)
        rhs = bracket_space(subring_closure(r, a), full, r)
        lem_i.check(
            lhs == rhs,
            lambda lhs=lhs, rhs=rhs, a=a: relation(
                "eq", subspace_obj(lhs), subspace_obj(rhs), subgroup=subspace_obj(a)
            ),
        )

    lem_iv = Collector("s2.lemma2.1.iv", r.name)
    lem_v = Collector("s2.lemma2.1.v", r.name)
    lem_vi = Collector("s2.lemma2.1.vi", r.name)
    thm13 = Collector("s2.theorem1.3", r.name)
    gen_ideal = Collector("s2.generated_is_ideal", r.name)
    for l in ideals:
        if l.is_zero():
            for col in (lem_iv, lem_v, lem_vi, thm13, gen_ideal):
                col.vac()
            continue
        gen = ideal_generated(r, l)
        one_sided = subspace_sum(l, product_space(full, l, r))
        lem_iv.check(
            gen == one_sided,
            lambda gen=gen, one_sided=one_sided, l=l: relation(
                "eq", subspace_obj(gen), subspace_obj(one_sided), lie_ideal=subspace_obj(l)
            ),
        )
        gen_ideal.check(
            is_ideal(r, gen),
            lambda gen=gen: relation("is_lie_ideal", subspace_obj(gen), expect=True),
        )
        powers = {m: power_space(l, m, r) for m in range(1, max_power + 1)}
        for m in range(2, max_power + 1):
            ideal = ideal_generated(r, bracket_space(powers[m - 1], powers[m], r))
            inner = subspace_intersect(powers[m], l)
            ok = subspace_leq(ideal, powers[m]) and subspace_leq(
                bracket_space(ideal, full, r), inner
            )
            lem_v.check(
                ok,
                lambda ideal=ideal, m=m, l=l: relation(
                    "leq",
                    subspace_obj(ideal),
                    subspace_obj(powers[m]),
                    lie_ideal=subspace_obj(l),
                    power=m,
                ),
            )
        briefs = ideal_generated(r, bracket_space(l, l, r))
        lem_vi.check(
            subspace_leq(bracket_space(full, briefs, r), l),
            lambda briefs=briefs, l=l: relation(
                "leq",
                subspace_obj(bracket_space(full, briefs, r)),
                subspace_obj(l),
                lie_ideal=subspace_obj(l),
            ),
        )
        bound = subspace_sum(l, powers[2])
        thm13.check(
            subspace_leq(briefs, bound),
            lambda briefs=briefs, bound=bound, l=l: relation(
                "leq", subspace_obj(briefs), subspace_obj(bound), lie_ideal=subspace_obj(l)
            ),
        )

    return _sorted(
        [c.report() for c in (closure, lem_i, lem_iv, lem_v, lem_vi, thm13, gen_ideal)]
    )


# -- s3: semiprime rings ----------------------------------------------------


def suite_s3_semiprime(
    r: Algebra, max_power: int = 3, samples: int = 200, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    if not is_semiprime(r, cfg.budget):
        return [CheckReport("s3.precondition", r.name, "skipped")]
    full = r.full_space()
    z = center(r)
    ideals = all_lie_ideals(r, cfg.limit, cfg.budget)

    lem31 = Collector("s3.lemma3.1", r.name)
    cor32 = Collector("s3.cor3.2", r.name)
    thm34 = Collector("s3.thm3.4", r.name)
    for l in ideals:
        if l.is_zero():
            lem31.vac()
            cor32.vac()
            thm34.vac()
            continue
        cent_l = centralizer(r, l)
        abelian = bracket_space(l, l, r).is_zero()
        powers = {m: power_space(l, m, r) for m in range(1, max_power + 1)}
        for m in range(2, max_power + 1):
            lem31.check(
                subspace_leq(centralizer(r, powers[m]), cent_l),
                lambda m=m, l=l: relation(
                    "leq",
                    subspace_obj(centralizer(r, powers[m])),
                    subspace_obj(cent_l),
                    lie_ideal=subspace_obj(l),
                    power=m,
                ),
            )
            if subspace_leq(powers[m], z):
                cor32.check(
                    subspace_leq(l, z),
                    lambda l=l, m=m: relation(
                        "leq", subspace_obj(l), subspace_obj(z), power=m
                    ),
                )
            elif subspace_leq(l, z):
                # central L trivially has central powers; still informative
                cor32.ok()
            else:
                cor32.vac()
            if abelian:
                thm34.vac()
            else:
                ideal = ideal_generated(r, bracket_space(powers[m - 1], powers[m], r))
                thm34.check(
                    (not ideal.is_zero()) and subspace_leq(ideal, powers[m]),
                    lambda ideal=ideal, l=l, m=m: relation(
                        "leq",
                        subspace_obj(ideal),
                        subspace_obj(powers[m]),
                        lie_ideal=subspace_obj(l),
                        power=m,
                        nonzero_required=True,
                    ),
                )

    cor33 = Collector("s3.cor3.3", r.name)
    comm = commutator_space(r)
    comm_powers = {m: power_space(comm, m, r) for m in range(1, max_power + 1)} if not comm.is_zero() else {}
    for m in range(1, max_power + 1):
        for n in range(1, max_power + 1):
            if comm.is_zero():
                cor33.ok()  # commutative: hypothesis and conclusion both hold
                continue
            hyp = bracket_space(comm_powers[m], comm_powers[n], r).is_zero()
            cor33.check(
                hyp == r.is_commutative(),
                lambda m=m, n=n, hyp=hyp: relation(
                    "is_zero",
                    subspace_obj(bracket_space(comm_powers[m], comm_powers[n], r)),
                    expect=r.is_commutative(),
                    powers=[m, n],
                ),
            )

    return _sorted([c.report() for c in (lem31, cor32, cor33, thm34)])


# -- s4: the trichotomy -----------------------------------------------------


def suite_s4_structure(r: Algebra, cfg: VerifyConfig = DEFAULT_CONFIG) -> list[CheckReport]:
    if r.unity is None or not is_simple(r, cfg.budget):
        return [CheckReport("s4.precondition", r.name, "skipped")]
    z = center(r)
    ideals = all_lie_ideals(r, cfg.limit, cfg.budget)
    reports: list[CheckReport] = []

    lem41 = Collector("s4.lemma4.1", r.name)
    cor42 = Collector("s4.cor4.2", r.name)
    for l in ideals:
        if subspace_leq(l, z):
            lem41.vac()
            cor42.vac()
            continue
        sub = abelian_equivalences(r, l)
        if sub.status == "fail":
            lem41.fail(sub.witness)
        else:
            lem41.ok()
        lc = c_span(r, l)
        plane = dim_over_c(r, lc) == 2
        for k in (2, 3):
            has_ideal = contains_nonzero_ideal(r, power_space(l, k, r)) is not None
            cor42.check(
                has_ideal != plane,
                lambda l=l, k=k, has_ideal=has_ideal, plane=plane: relation(
                    "contains_nonzero_ideal",
                    subspace_obj(power_space(l, k, r)),
                    expect=not plane,
                    lie_ideal=subspace_obj(l),
                    power=k,
                ),
            )
    reports.extend([lem41.report(), cor42.report()])

    if r.is_commutative():
        reports.append(CheckReport("s4.theorem4.4", r.name, "skipped"))
    else:
        reports.append(plane_lie_ideal_criterion(r))

    thma = Collector("s4.theoremA", r.name)
    for l in ideals:
        try:
            cls = classify_lie_ideal(r, l)
        except TheoremViolationError as exc:
            thma.fail({"kind": "trichotomy-violation", "detail": str(exc), **exc.witness})
            continue
        thma.check(
            len(cls.flags) > 0,
            lambda l=l: {"kind": "empty-flags", "lie_ideal": subspace_obj(l)},
        )
    reports.append(thma.report())
    return _sorted(reports)


def lie_ideal_census(r: Algebra, cfg: VerifyConfig = DEFAULT_CONFIG) -> dict[str, int]:
    """Multiset of trichotomy flags over all Lie ideals (flag -> count)."""
    counts: dict[str, int] = {}
    for l in all_lie_ideals(r, cfg.limit, cfg.budget):
        for flag in classify_lie_ideal(r, l).flags:
            counts[flag] = counts.get(flag, 0) + 1
    return counts


# -- s5: L + aL and ideals --------------------------------------------------


def _theorem_b_prediction(
    r: Algebra,
    l: Subspace,
    a: np.ndarray,
    abelian: bool,
    lc: Subspace,
    comm_c: Subspace,
    b: np.ndarray | None,
) -> bool | None:
    """Predicted ideal containment for L + aL, or None when no case applies."""
    if not abelian:
        if subspace_leq(span(r.field, [a], r.dim), center(r)):
            return None
        return True
    if a in lc:
        return False
    if a in comm_c:
        return True
    assert b is not None
    ab = Element(r, a).bracket(Element(r, b))
    return is_unit(r, ab)


def theorem_b_instance(r: Algebra, l: Subspace, a: np.ndarray) -> tuple[bool | None, bool]:
    """(prediction, observed) for one (L, a) pair on a simple unital algebra."""
    abelian = bracket_space(l, l, r).is_zero()
    lc = c_span(r, l)
    comm_c = c_span(r, commutator_space(r))
    b = None
    if abelian:
        nc = noncentral_elements(r, l)
        b = nc[0]
    predicted = _theorem_b_prediction(r, l, a, abelian, lc, comm_c, b)
    observed = contains_nonzero_ideal(r, subspace_sum(l, _a_times(r, a, l))) is not None
    return predicted, observed


def suite_s5_theoremB(
    r: Algebra, samples: int = 200, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    cfg = replace(cfg, samples=samples)
    simple_unital = r.unity is not None and is_simple(r, cfg.budget)
    if not simple_unital:
        if not is_semiprime(r, cfg.budget):
            return [CheckReport("s5.precondition", r.name, "skipped")]
        return _sorted([_s5_cor53(r, cfg)])

    full = r.full_space()
    z = center(r)
    comm = commutator_space(r)
    comm_c = c_span(r, comm)
    exceptional = _exceptional(r)
    reports: list[CheckReport] = []

    thmb = Collector("s5.theoremB", r.name)
    for l in _noncentral_ideals(r, cfg):
        abelian = bracket_space(l, l, r).is_zero()
        lc = c_span(r, l)
        b = noncentral_elements(r, l)[0] if abelian else None
        for a in _scan_elements(r, cfg):
            predicted = _theorem_b_prediction(r, l, a, abelian, lc, comm_c, b)
            if predicted is None:
                thmb.vac()
                continue
            s = subspace_sum(l, _a_times(r, a, l))
            observed = contains_nonzero_ideal(r, s) is not None
            thmb.check(
                observed == predicted,
                lambda s=s, predicted=predicted, l=l, a=a: relation(
                    "contains_nonzero_ideal",
                    subspace_obj(s),
                    expect=predicted,
                    lie_ideal=subspace_obj(l),
                    element=element_obj(a),
                ),
            )
    reports.append(thmb.report())

    lem51 = Collector("s5.lemma5.1", r.name)
    if exceptional:
        for a in _scan_elements(r, cfg):
            line = span(r.field, [a], r.dim)
            if subspace_leq(line, z):
                lem51.vac()
                continue
            czr = centralizer(r, line)
            plane = _plane_span(r, a)
            lem51.check(
                czr == plane,
                lambda czr=czr, plane=plane, a=a: relation(
                    "eq", subspace_obj(czr), subspace_obj(plane), element=element_obj(a)
                ),
            )
    else:
        lem51.vac()
    reports.append(lem51.report())

    rem54 = Collector("s5.remark5.4", r.name)
    if exceptional:
        l = comm
        m = bracket_space(l, l, r)
        rem54.check(
            (not m.is_zero()) and subspace_leq(m, z),
            lambda m=m: relation("leq", subspace_obj(m), subspace_obj(z), nonzero_required=True),
        )
        for a in _scan_elements(r, cfg):
            s = subspace_sum(m, _a_times(r, a, m))
            rem54.check(
                contains_nonzero_ideal(r, s) is None,
                lambda s=s, a=a: relation(
                    "contains_nonzero_ideal", subspace_obj(s), expect=False, element=element_obj(a)
                ),
            )
    else:
        rem54.vac()
    reports.append(rem54.report())

    thm55 = Collector("s5.theorem5.5", r.name)
    for l in all_lie_ideals(r, cfg.limit, cfg.budget):
        m = bracket_space(l, l, r)
        if m.is_zero() or m != bracket_space(l, full, r):
            thm55.vac()
            continue
        for a in _scan_elements(r, cfg):
            if subspace_leq(span(r.field, [a], r.dim), z):
                thm55.vac()
                continue
            s = subspace_sum(m, _a_times(r, a, m))
            thm55.check(
                contains_nonzero_ideal(r, s) is not None,
                lambda s=s, l=l, a=a: relation(
                    "contains_nonzero_ideal",
                    subspace_obj(s),
                    expect=True,
                    lie_ideal=subspace_obj(l),
                    element=element_obj(a),
                ),
            )
    reports.append(thm55.report())

    cor56 = Collector("s5.cor5.6", r.name)
    idems = all_idempotents(r, cfg.budget)
    nontrivial = any(
        row.any() and not (row == r.unity.coords).all() for row in idems
    )
    if nontrivial:
        e_span = idempotent_span(r, cfg.budget)
        m = bracket_space(e_span, e_span, r)
        for a in _scan_elements(r, cfg):
            if subspace_leq(span(r.field, [a], r.dim), z):
                cor56.vac()
                continue
            s = subspace_sum(m, _a_times(r, a, m))
            cor56.check(
                contains_nonzero_ideal(r, s) is not None,
                lambda s=s, a=a: relation(
                    "contains_nonzero_ideal", subspace_obj(s), expect=True, element=element_obj(a)
                ),
            )
    else:
        cor56.vac()
    reports.append(cor56.report())

    cor57 = Collector("s5.cor5.7", r.name)
    if r.is_commutative():
        cor57.vac()
    else:
        for a in _scan_elements(r, cfg):
            if subspace_leq(span(r.field, [a], r.dim), z):
                cor57.vac()
                continue
            s = subspace_sum(comm, _a_times(r, a, comm))
            cor57.check(
                contains_nonzero_ideal(r, s) is not None,
                lambda s=s, a=a: relation(
                    "contains_nonzero_ideal", subspace_obj(s), expect=True, element=element_obj(a)
                ),
            )
    reports.append(cor57.report())

    reports.append(_s5_cor53(r, cfg))
    return _sorted(reports)


def _s5_cor53(r: Algebra, cfg: VerifyConfig) -> CheckReport:
    col = Collector("s5.cor5.3", r.name)
    for l in all_lie_ideals(r, cfg.limit, cfg.budget):
        if l.is_zero():
            col.vac()
            continue
        for a in _scan_elements(r, cfg, sub=l):
            if bracket_space(span(r.field, [a], r.dim), l, r).is_zero():
                col.vac()
                continue
            s = subspace_sum(l, _a_times(r, a, l))
            col.check(
                contains_nonzero_ideal(r, s) is not None,
                lambda s=s, l=l, a=a: relation(
                    "contains_nonzero_ideal",
                    subspace_obj(s),
                    expect=True,
                    lie_ideal=subspace_obj(l),
                    element=element_obj(a),
                ),
            )
    return col.report()


# -- s6: commuting powers ---------------------------------------------------


def suite_s6_commutators(
    r: Algebra, max_power: int = 3, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    if r.unity is None or not is_simple(r, cfg.budget):
        return [CheckReport("s6.precondition", r.name, "skipped")]
    infos = _ideal_infos(r, cfg)
    exceptional = _exceptional(r) if infos else False
    z = center(r)
    powers = {
        (id(i.sub), m): power_space(i.sub, m, r)
        for i in infos
        for m in range(1, max(max_power, 3) + 1)
    }

    thmc = Collector("s6.theoremC", r.name)
    commuting_pairs = 0
    for ki in infos:
        for li in infos:
            e2 = bracket_space(ki.sub, li.sub, r).is_zero()
            e3 = exceptional and ki.csp == li.csp and li.plane_form
            if e2:
                commuting_pairs += 1
            for m in range(1, max_power + 1):
                for n in range(1, max_power + 1):
                    e1 = bracket_space(
                        powers[(id(ki.sub), m)], powers[(id(li.sub), n)], r
                    ).is_zero()
                    thmc.check(
                        e1 == e2 == e3,
                        lambda ki=ki, li=li, m=m, n=n, e1=e1, e2=e2, e3=e3: {
                            "kind": "theoremC-divergence",
                            "K": subspace_obj(ki.sub),
                            "L": subspace_obj(li.sub),
                            "powers": [m, n],
                            "power_bracket_zero": e1,
                            "bracket_zero": e2,
                            "plane_condition": e3,
                        },
                    )

    nonvac = Collector("s6.nonvacuity", r.name)
    if exceptional:
        nonvac.check(
            commuting_pairs >= 1,
            lambda: {"kind": "no-commuting-pairs-in-exceptional-ring"},
        )
    else:
        nonvac.vac()

    cor62 = Collector("s6.cor6.2", r.name)
    if exceptional:
        comm_c = c_span(r, commutator_space(r))
        for ki in infos:
            for li in infos:
                lhs = subspace_leq(bracket_space(ki.sub, li.sub, r), z)
                rhs = subspace_leq(ki.csp, comm_c) and subspace_leq(li.csp, comm_c)
                cor62.check(
                    lhs == rhs,
                    lambda ki=ki, li=li, lhs=lhs, rhs=rhs: {
                        "kind": "cor6.2-divergence",
                        "K": subspace_obj(ki.sub),
                        "L": subspace_obj(li.sub),
                        "bracket_central": lhs,
                        "inside_commutators": rhs,
                    },
                )
    else:
        cor62.vac()

    thm64 = Collector("s6.theorem6.4", r.name)
    total = len(infos) ** 3 * max_power * 4
    if total > cfg.tuple_cap:
        thm64.skip(total)
    else:
        for ki in infos:
            for li in infos:
                for ni in infos:
                    for s in (2, 3):
                        for t in (2, 3):
                            inner = bracket_space(
                                powers[(id(li.sub), s)], powers[(id(ni.sub), t)], r
                            )
                            for m in range(1, max_power + 1):
                                hyp = bracket_space(
                                    powers[(id(ki.sub), m)], inner, r
                                ).is_zero()
                                if not hyp:
                                    thm64.vac()
                                    continue
                                if ki.dimc >= 3:
                                    concl = li.dimc == 2 == ni.dimc
                                else:
                                    concl = (
                                        ki.csp == li.csp
                                        or ki.csp == ni.csp
                                        or li.dimc == 2 == ni.dimc
                                    )
                                thm64.check(
                                    exceptional and concl,
                                    lambda ki=ki, li=li, ni=ni, m=m, s=s, t=t: {
                                        "kind": "theorem6.4-divergence",
                                        "K": subspace_obj(ki.sub),
                                        "L": subspace_obj(li.sub),
                                        "N": subspace_obj(ni.sub),
                                        "powers": [m, s, t],
                                        "exceptional": exceptional,
                                    },
                                )
    return _sorted([c.report() for c in (thmc, nonvac, cor62, thm64)])


# -- s7: products -----------------------------------------------------------


def _product_tuples(
    r: Algebra, infos: list[_IdealInfo], max_factors: int, min_factors: int = 1
) -> list[tuple[tuple[int, ...], Subspace]]:
    """All ordered factor tuples (as index tuples) with their products."""
    out: list[tuple[tuple[int, ...], Subspace]] = []
    level: list[tuple[tuple[int, ...], Subspace]] = [((i,), info.sub) for i, info in enumerate(infos)]
    for m in range(1, max_factors + 1):
        if m >= min_factors:
            out.extend(level)
        if m == max_factors:
            break
        level = [
            (idx + (j,), product_space(prod, infos[j].sub, r))
            for idx, prod in level
            for j in range(len(infos))
        ]
    return out


def suite_s7_products(
    r: Algebra, max_factors: int = 3, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    if r.unity is None or not is_simple(r, cfg.budget):
        return [CheckReport("s7.precondition", r.name, "skipped")]
    infos = _ideal_infos(r, cfg)
    z = center(r)

    thmd = Collector("s7.theoremD", r.name)
    lem72 = Collector("s7.lemma7.2", r.name)
    n = len(infos)
    total = sum(n**m for m in range(1, max_factors + 1))
    if total > cfg.tuple_cap:
        thmd.skip(total)
        lem72.skip(total)
    else:
        contains_cache: dict[Subspace, bool] = {}
        for idx, prod in _product_tuples(r, infos, max_factors):
            lem72.check(
                is_lie_ideal(r, prod) and not subspace_leq(prod, z),
                lambda idx=idx, prod=prod: {
                    "kind": "lemma7.2-divergence",
                    "factors": list(idx),
                    "product": subspace_obj(prod),
                },
            )
            if len(idx) < 2:
                continue
            first = infos[idx[0]]
            exception = first.plane_form and all(
                infos[j].csp == first.csp for j in idx
            )
            if prod not in contains_cache:
                contains_cache[prod] = contains_nonzero_ideal(r, prod) is not None
            has_ideal = contains_cache[prod]
            thmd.check(
                has_ideal != exception,
                lambda idx=idx, prod=prod, exception=exception: relation(
                    "contains_nonzero_ideal",
                    subspace_obj(prod),
                    expect=not exception,
                    factors=list(idx),
                ),
            )
    return _sorted([thmd.report(), lem72.report()])


# -- s8: centralizers -------------------------------------------------------


def suite_s8_centralizers(
    r: Algebra, max_factors: int = 3, cfg: VerifyConfig = DEFAULT_CONFIG
) -> list[CheckReport]:
    if r.unity is None or not is_simple(r, cfg.budget):
        return [CheckReport("s8.precondition", r.name, "skipped")]
    infos = _ideal_infos(r, cfg)
    z = center(r)

    thm81 = Collector("s8.theorem8.1", r.name)
    for ki in infos:
        czr = centralizer(r, ki.sub)
        ok = ((czr == z) == (ki.dimc > 2)) and ((czr == ki.csp) == (ki.dimc == 2))
        thm81.check(
            ok,
            lambda ki=ki, czr=czr: {
                "kind": "theorem8.1-divergence",
                "K": subspace_obj(ki.sub),
                "centralizer": subspace_obj(czr),
                "dim_over_c": ki.dimc,
            },
        )

    thm82 = Collector("s8.theorem8.2", r.name)
    thme = Collector("s8.theoremE", r.name)
    n = len(infos)
    total = sum(n**m for m in range(1, max_factors + 1))
    if total > cfg.tuple_cap:
        thm82.skip(total)
        thme.skip(total * total)
        return _sorted([thm81.report(), thm82.report(), thme.report()])

    tuples = _product_tuples(r, infos, max_factors)
    for idx, prod in tuples:
        czr = centralizer(r, prod)
        first = infos[idx[0]]
        plane_case = (
            first.dimc == 2
            and all(infos[j].csp == first.csp for j in idx)
            and czr == first.csp
        )
        thm82.check(
            czr == z or plane_case,
            lambda idx=idx, prod=prod, czr=czr: {
                "kind": "theorem8.2-divergence",
                "factors": list(idx),
                "product": subspace_obj(prod),
                "centralizer": subspace_obj(czr),
            },
        )

    if thme.skipped == 0:
        # The bracket only depends on the two product values and the plane
        # condition only on whether every factor shares one plane c-span, so
        # tuples collapse into classes; each class pair is one bracket test
        # covering size_k * size_l tuple pairs exactly.
        classes: dict[tuple[Subspace, Subspace | None], list[tuple[int, ...]]] = {}
        for idx, prod in tuples:
            first = infos[idx[0]]
            uniform = (
                first.csp
                if first.plane_form and all(infos[j].csp == first.csp for j in idx)
                else None
            )
            classes.setdefault((prod, uniform), []).append(idx)
        pairs = len(classes) ** 2
        if pairs > cfg.tuple_cap:
            thme.skip(len(tuples) ** 2)
        else:
            for (prod_k, uk), idxs_k in classes.items():
                for (prod_l, ul), idxs_l in classes.items():
                    lhs = bracket_space(prod_k, prod_l, r).is_zero()
                    rhs = uk is not None and uk == ul
                    thme.check(
                        lhs == rhs,
                        lambda idxs_k=idxs_k, idxs_l=idxs_l, lhs=lhs, rhs=rhs: {
                            "kind": "theoremE-divergence",
                            "K_factors": list(idxs_k[0]),
                            "L_factors": list(idxs_l[0]),
                            "bracket_zero": lhs,
                            "plane_condition": rhs,
                        },
                    )
                    thme.ok(len(idxs_k) * len(idxs_l) - 1)
    return _sorted([thm81.report(), thm82.report(), thme.report()])


# -- dispatch ---------------------------------------------------------------


SUITES = ("s2", "s3", "s4", "s5", "s6", "s7", "s8")


def run_suite(r: Algebra, suite: str, cfg: VerifyConfig = DEFAULT_CONFIG) -> list[CheckReport]:
    if suite == "s2":
        return suite_s2_identities(r, cfg.max_power, cfg)
    if suite == "s3":
        return suite_s3_semiprime(r, cfg.max_power, cfg.samples, cfg)
    if suite == "s4":
        return suite_s4_structure(r, cfg)
    if suite == "s5":
        return suite_s5_theoremB(r, cfg.samples, cfg)
    if suite == "s6":
        return suite_s6_commutators(r, cfg.max_power, cfg)
    if suite == "s7":
        return suite_s7_products(r, cfg.max_factors, cfg)
    if suite == "s8":
        return suite_s8_centralizers(r, cfg.max_factors, cfg)
    raise ValueError(f"unknown suite {suite!r}")


def applicable_suites(r: Algebra, cfg: VerifyConfig = DEFAULT_CONFIG) -> list[str]:
    suites = ["s2"]
    if is_semiprime(r, cfg.budget):
        suites.append("s3")
    if r.unity is not None and is_simple(r, cfg.budget):
        suites.extend(["s4", "s5", "s6", "s7", "s8"])
    return suites


def run_all(r: Algebra, cfg: VerifyConfig = DEFAULT_CONFIG) -> list[CheckReport]:
    """Dispatch every suite whose hypotheses the algebra satisfies."""
    reports: list[CheckReport] = []
    for suite in applicable_suites(r, cfg):
        reports.extend(run_suite(r, suite, cfg))
    return _sorted(reports)


def reports_to_jsonl(reports: list[CheckReport]) -> str:
    lines = [json.dumps(rep.to_json_obj(), sort_keys=True) for rep in _sorted(reports)]
    return "\n".join(lines) + ("\n" if lines else "")


# -- witness round trip -----------------------------------------------------


def _eval_operand(r: Algebra, obj):
    if obj is None:
        return None
    if obj.get("type") == "subspace":
        return span(r.field, [np.asarray(row) for row in obj["basis"]], r.dim)
    if obj.get("type") == "element":
        return Element(r, obj["coords"])
    raise ValueError(f"unknown operand {obj!r}")


def recheck_witness(r: Algebra, witness: dict) -> bool | None:
    """Re-evaluate a relation witness from its serialized form.

    Returns True when the relation now holds as the theorem expects,
    False when it still fails (the honest outcome for a real witness),
    and None when the witness carries no re-evaluable relation.
    """
    rel = witness.get("relation")
    if rel is None:
        return None
    lhs = _eval_operand(r, rel["lhs"])
    rhs = _eval_operand(r, rel.get("rhs"))
    op = rel["op"]
    if op == "leq":
        value = subspace_leq(lhs, rhs)
    elif op == "eq":
        value = lhs == rhs
    elif op == "is_zero":
        value = lhs.is_zero()
    elif op == "is_lie_ideal":
        value = is_lie_ideal(r, lhs)
    elif op == "contains_nonzero_ideal":
        value = contains_nonzero_ideal(r, lhs) is not None
    elif op == "is_unit":
        value = is_unit(r, lhs)
    else:
        raise ValueError(f"unknown relation op {op!r}")
    return value == rel["expect"]


# -- mutation sensitivity ---------------------------------------------------


def scripted_mutations(count: int = 20) -> list[tuple[int, int, int, int]]:
    """Deterministic single-constant mutations of the M2(GF(2)) table."""
    base = matrix_algebra(2, 2)
    out = []
    for (i, j, k), c in np.ndenumerate(base.table):
        out.append((int(i), int(j), int(k), int(1 - c)))
        if len(out) == count:
            break
    return out


def mutation_outcomes(cfg: VerifyConfig = DEFAULT_CONFIG, count: int = 20) -> list[str]:
    """For each scripted mutation: 'rejected' (associativity), 'changed'
    (at least one report differs from the unmutated run) or 'unchanged'."""
    base = matrix_algebra(2, 2)
    baseline = reports_to_jsonl(run_all(base, cfg))
    outcomes = []
    for i, j, k, val in scripted_mutations(count):
        table = np.array(base.table)
        table[i, j, k] = val
        try:
            mutant = Algebra(base.name, base.field, table)
        except AssociativityError:
            outcomes.append("rejected")
            continue
        try:
            mutated = reports_to_jsonl(run_all(mutant, cfg))
        except (TheoremViolationError, UnsupportedAlgebraError, BudgetExceededError):
            outcomes.append("changed")
            continue
        outcomes.append("changed" if mutated != baseline else "unchanged")
    return outcomes
