"""Buchberger engine for submodules of Q[x1..xn]^r and oracles built on it:
reduced Groebner bases, normal forms, Macaulay complements, the naive
border-basis construction, syzygies and ideal intersection."""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction

from .division import Prebasis
from .errors import PreconditionError
from .ordermodule import OrderIdeal, OrderModule
from .ring import (
    Poly,
    TermOrder,
    Vector,
    term_deg,
    term_divides,
    term_lcm,
    term_mul,
    term_one,
    term_quot,
)


def modterm_divides(ms, mt):
    """Divisibility of module terms: same component and term divisibility."""
    return ms[1] == mt[1] and term_divides(ms[0], mt[0])


def _monic(v, order):
    _, c = v.leading_modterm(order)
    return v if c == 1 else v.scale(Fraction(1) / c)


def gb_normal_form(gb, v, order):
    """Full normal form of v against gb: no support term of the result is
    divisible by a leading term of gb."""
    if not gb or v.is_zero():
        return v
    lead = [(g.leading_modterm(order), g) for g in gb]
    out = {}
    w = v
    while not w.is_zero():
        mt, c = w.leading_modterm(order)
        t, k = mt
        hit = None
        for (lmt, lc), g in lead:
            if modterm_divides(lmt, mt):
                hit = (g, term_quot(t, lmt[0]), c / lc)
                break
        if hit is None:
            out[mt] = c
            w = w - Vector.monomial(v.nvars, v.rank, t, k, c)
        else:
            g, tq, f = hit
            w = w - g.mul_term(tq, f)
    return Vector(v.nvars, v.rank, out)


def _spair_key(gi, gj, order):
    (ti, k), _ = gi.leading_modterm(order)
    (tj, _), _ = gj.leading_modterm(order)
    return order.mod_key((term_lcm(ti, tj), k))


def groebner_basis(gens, order):
    """The reduced sigma-Pos Groebner basis of the submodule generated by
    `gens`, sorted by leading term, largest first."""
    basis = [_monic(v, order) for v in gens if not v.is_zero()]
    if not basis:
        return []
    heap = []
    counter = itertools.count()

    def push_pairs(new_idx):
        gi = basis[new_idx]
        (_, k), _ = gi.leading_modterm(order)
        for idx in range(new_idx):
            (_, k2), _ = basis[idx].leading_modterm(order)
            if k == k2:
                key = _spair_key(basis[idx], gi, order)
                heapq.heappush(heap, (key, next(counter), idx, new_idx))

    for idx in range(len(basis)):
        push_pairs(idx)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        gi, gj = basis[i], basis[j]
        (ti, k), _ = gi.leading_modterm(order)
        (tj, _), _ = gj.leading_modterm(order)
        lcm = term_lcm(ti, tj)
        s = gi.mul_term(term_quot(lcm, ti)) - gj.mul_term(term_quot(lcm, tj))
        h = gb_normal_form(basis, s, order)
        if not h.is_zero():
            basis.append(_monic(h, order))
            push_pairs(len(basis) - 1)
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    items = sorted(
        basis, key=lambda g: order.mod_key(g.leading_modterm(order)[0])
    )
    kept = []
    kept_lts = []
    for g in items:
        lt = g.leading_modterm(order)[0]
        if any(modterm_divides(l, lt) for l in kept_lts):
            continue
        kept.append(g)
        kept_lts.append(lt)
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            h = gb_normal_form(others, kept[idx], order)
            if h != kept[idx]:
                kept[idx] = _monic(h, order)
                changed = True
    kept.sort(
        key=lambda g: order.mod_key(g.leading_modterm(order)[0]), reverse=True
    )
    return kept


def leading_module(gb, order):
    """Leading terms of a GB, as a list of module terms."""
    return [g.leading_modterm(order)[0] for g in gb]


def macaulay_complement(gb, order, bound=32):
    """The order module of all module terms outside the leading-term module
    of gb.  Finiteness is decided by the pure-power criterion."""
    if not gb:
        raise PreconditionError(
            "complement of the zero submodule is not finite"
        )
    nvars, rank = gb[0].nvars, gb[0].rank
    lts = leading_module(gb, order)
    ideals = []
    for k in range(1, rank + 1):
        comp = [t for t, kk in lts if kk == k]
        if any(t == term_one(nvars) for t in comp):
            ideals.append(OrderIdeal(nvars, []))
            continue
        box = []
        for i in range(nvars):
            powers = [
                t[i]
                for t in comp
                if t[i] > 0 and all(e == 0 for s, e in enumerate(t) if s != i)
            ]
            if not powers:
                raise PreconditionError(
                    f"complement is not finite: no pure power of x{i + 1} "
                    f"among the leading terms of component {k}"
                )
            box.append(range(min(powers)))
        terms = [
            t
            for t in itertools.product(*box)
            if not any(term_divides(s, t) for s in comp)
        ]
        if any(term_deg(t) > bound for t in terms):
            raise PreconditionError(
                f"complement exceeds the degree bound {bound}"
            )
        ideals.append(OrderIdeal(nvars, terms))
    return OrderModule(ideals, order, nvars=nvars)


def naive_border_basis(gens, order, bound=32):
    """Border basis via the Groebner route: M = Macaulay complement of a
    reduced GB, G_j = b_j e - NF(b_j e)."""
    gb = groebner_basis(gens, order)
    om = macaulay_complement(gb, order, bound)
    nvars, rank = om.nvars, om.rank
    vectors = []
    for t, k in om.border_terms:
        mono = Vector.monomial(nvars, rank, t, k)
        vectors.append(mono - gb_normal_form(gb, mono, order))
    return om, Prebasis.from_vectors(om, vectors)


class _HeadEliminationOrder:
    """Module ordering that makes every head-component term (component 1)
    larger than every tagged term; used to read syzygies off a GB."""

    def __init__(self, base):
        self.base = base
        self.name = f"elim({base.name})"

    def key(self, t):
        return self.base.key(t)

    def mod_key(self, mt):
        t, k = mt
        return (1 if k == 1 else 0, self.base.key(t), -k)


def syzygies(polys, order=None):
    """Generators of the syzygy module Syz_P(f_1..f_r), via the tagged-GB
    construction: a GB of {f_i e_head + e_i} under a head-eliminating
    ordering; elements with zero head carry the syzygies in their tags."""
    if order is None:
        order = TermOrder("degrevlex")
    polys = list(polys)
    if not polys:
        return []
    nvars = polys[0].nvars
    r = len(polys)
    tagged = []
    for i, p in enumerate(polys):
        if p.is_zero():
            raise PreconditionError("zero polynomial in syzygy input")
        entries = {(t, 1): c for t, c in p.coeffs.items()}
        entries[(term_one(nvars), i + 2)] = Fraction(1)
        tagged.append(Vector(nvars, r + 1, entries))
    gb = groebner_basis(tagged, _HeadEliminationOrder(order))
    out = []
    for g in gb:
        if all(k != 1 for _, k in g.support()):
            syz = Vector(
                nvars, r, {(t, k - 1): c for (t, k), c in g.coeffs.items()}
            )
            check = Poly.zero(nvars)
            for v in range(1, r + 1):
                check = check + syz.component(v) * polys[v - 1]
            assert check.is_zero(), "tagged construction produced a non-syzygy"
            out.append(syz)
    return out


def ideal_intersection(hgens, fgens, order=None):
    """Coefficient tuples (q_1w..q_rw) with sum_v q_vw f_v generating
    I ∩ J for I = <hgens>, J = <fgens>."""
    if order is None:
        order = TermOrder("degrevlex")
    hgens, fgens = list(hgens), list(fgens)
    syz = syzygies(hgens + fgens, order)
    s = len(hgens)
    out = []
    for v in syz:
        q = [-v.component(s + idx + 1) for idx in range(len(fgens))]
        if all(p.is_zero() for p in q):
            continue
        out.append(q)
    return out
