"""Converse certificates for the two-user s.d.o.f. region.

The outer bound is assembled from dof-accounting steps.  Each
:class:`BoundStep` says ``w1*d1 + w2*d2 <= sum(caps)``, where every cap is
the integer prelog of one entropy or mutual-information term.  The entropy
inequalities behind the caps are not re-derived; only their arithmetic is
checked.  A :class:`Certificate` pairs the outer bound with the achievable
region and records whether the two coincide.

Bounds are derived in a frame where ``r1 <= r2`` (so ``|A| <= |C|``).
Configurations with ``r1 > r2`` are swapped, solved, and reflected back.
"""
from dataclasses import dataclass, field

from .exceptions import InvalidSizes
from .region import (DofRegion, RegionCase, classify_case, pos, sdof_region,
                     validate_dims)


@dataclass(frozen=True)
class RecursiveCover:
    """Recursive family ``F_1..F_g`` tiling ``f`` concatenated copies of G.

    ``f_sets[i-1]`` is ``F_i`` as an ordered tuple (elements taken from the
    remaining elements of ``V_{i-1}`` first, then the wrap-around set ``H_i``).
    ``v_sets`` and ``counters`` are indexed from 0.
    """

    f_size: int
    g_size: int
    f_sets: tuple
    h_sets: tuple
    v_sets: tuple
    counters: tuple
    cases: tuple

    def verify(self):
        """Raise ``AssertionError`` naming the first violated invariant."""
        f, g = self.f_size, self.g_size
        assert 1 <= f <= g, "need 1 <= |F| <= |G|"
        assert len(self.f_sets) == g and len(self.v_sets) == g + 1
        assert len(self.counters) == g + 1
        assert self.v_sets[0] == frozenset(range(1, g + 1)), "V_0 must be G"
        assert self.counters[0] == 1, "c_0 must be 1"
        for i, fi in enumerate(self.f_sets, start=1):
            assert len(fi) == f and len(set(fi)) == f, f"|F_{i}| != |F|"
            step = self.counters[i] - self.counters[i - 1]
            assert step == (1 if self.cases[i - 1] == "II" else 0), f"counter jump at {i}"
        assert self.counters[g] == f, "c_|G| must equal |F|"
        assert self.v_sets[g] == frozenset(), "V_|G| must be empty"
        counts = {x: 0 for x in range(1, g + 1)}
        for fi in self.f_sets:
            for x in fi:
                counts[x] += 1
        assert all(n == f for n in counts.values()), "coverage is not |F|-fold"
        return True

    def rows(self):
        """Table rows ``(i, F_i, H_i, V_i, c_i, case)``; row 0 has no F or H."""
        out = [(0, None, None, self.v_sets[0], self.counters[0], None)]
        for i in range(1, self.g_size + 1):
            out.append((i, self.f_sets[i - 1], self.h_sets[i - 1], self.v_sets[i],
                        self.counters[i], self.cases[i - 1]))
        return out

    def to_json(self):
        return {
            "f": self.f_size,
            "g": self.g_size,
            "rows": [
                {"i": i,
                 "F": list(fi) if fi is not None else None,
                 "H": sorted(hi) if hi is not None else None,
                 "V": sorted(vi), "c": ci, "case": case}
                for i, fi, hi, vi, ci, case in self.rows()
            ],
        }


def build_cover(f_size, g_size):
    """Construct the recursive cover for ``|F| = f_size``, ``|G| = g_size``.

    Examples
    --------
    >>> cov = build_cover(3, 7)
    >>> cov.f_sets[4], sorted(cov.v_sets[5]), cov.counters[4:6]
    ((6, 7, 1), [2, 3, 4, 5, 6, 7], (2, 3))
    """
    for name, v in (("f_size", f_size), ("g_size", g_size)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidSizes(f"{name} must be an integer, got {v!r}")
    if not 1 <= f_size <= g_size:
        raise InvalidSizes(f"need 1 <= f_size <= g_size, got ({f_size}, {g_size})")
    ground = list(range(1, g_size + 1))
    v_prev, c_prev = list(ground), 1
    f_sets, h_sets, v_sets, counters, cases = [], [], [frozenset(v_prev)], [1], []
    for _ in range(g_size):
        if len(v_prev) >= f_size:
            fi, hi = tuple(v_prev[:f_size]), frozenset()
            v_next, c_next = v_prev[f_size:], c_prev
            cases.append("I")
        else:
            hi = list(range(1, f_size - len(v_prev) + 1))
            fi = tuple(v_prev) + tuple(hi)
            v_next = [x for x in ground if x not in hi]
            hi, c_next = frozenset(hi), c_prev + 1
            cases.append("II")
        f_sets.append(fi)
        h_sets.append(hi)
        v_sets.append(frozenset(v_next))
        counters.append(c_next)
        v_prev, c_prev = v_next, c_next
    return RecursiveCover(f_size, g_size, tuple(f_sets), tuple(h_sets),
                          tuple(v_sets), tuple(counters), tuple(cases))


@dataclass(frozen=True)
class BoundStep:
    label: str
    weights: tuple
    terms: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if len(w) != 2 or min(w) < 0 or max(w) == 0:
            raise ValueError(f"weights must be two nonnegative ints, not both 0: {self.weights}")
        terms = tuple((str(d), int(c)) for d, c in self.terms)
        for d, c in terms:
            if c < 0:
                raise ValueError(f"negative dof cap in term {d!r}")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "terms", terms)

    @property
    def rhs(self):
        return sum(c for _, c in self.terms)

    @property
    def halfspace(self):
        return (self.weights[0], self.weights[1], self.rhs)

    def relabeled(self, relabel, swap=False):
        """Apply ``relabel`` to all text; ``swap`` also exchanges the weights."""
        w = self.weights[::-1] if swap else self.weights
        return BoundStep(relabel(self.label), w,
                         tuple((relabel(d), c) for d, c in self.terms))

    def to_json(self):
        return {"label": self.label, "weights": list(self.weights),
                "terms": [{"desc": d, "cap": c} for d, c in self.terms]}


# Step text names frame users {u}, {v} and link sets {A}, {C} so a swap can relabel.
_PLAIN = {"{u}": "1", "{v}": "2", "{A}": "A", "{C}": "C"}
_SWAPPED = {"{u}": "2", "{v}": "1", "{A}": "C", "{C}": "A"}


def _fill(text, table):
    for k, v in table.items():
        text = text.replace(k, v)
    return text


def _single_user_steps(r1, r2, n_e):
    return [
        BoundStep("single-user cap {u}", (1, 0),
                  [("user {u} alone: rank r{u} minus N_E leaked dimensions", pos(r1 - n_e))]),
        BoundStep("single-user cap {v}", (0, 1),
                  [("user {v} alone: rank r{v} minus N_E leaked dimensions", pos(r2 - n_e))]),
    ]


def _cover_steps(cover, f, base_extra, extra_desc):
    """Recursive steps ``i*d_u + c_i*d_v <= i*|F| + |V_i| + c_i*extra``."""
    steps = []
    for i in range(cover.g_size + 1):
        c_i = cover.counters[i]
        terms = [(f"I(M, X_{{u}},B; Y_F{j}) with M = (Y_{{u}},{{A}}, X_{{v}},B+{{C}})", f)
                 for j in range(1, i + 1)]
        terms.append((f"I(M, X_{{u}},B-G; Y_V{i}) on the residual links", len(cover.v_sets[i])))
        if base_extra:
            terms.append((f"{c_i} x {extra_desc}", c_i * base_extra))
        steps.append(BoundStep(f"recursive bound i={i}", (i, c_i), terms))
    return steps


def _frame_bound(r0, r1, r2, n_e):
    """Steps and eavesdropper metadata in the frame ``r1 <= r2``."""
    case = classify_case(r0, r1, r2, n_e)
    a, b, c = r0 - r2, r1 + r2 - r0, r0 - r1
    link_a = list(range(1, a + 1))
    link_b = list(range(a + 1, a + b + 1))
    link_c = list(range(a + b + 1, r0 + 1))
    steps = _single_user_steps(r1, r2, n_e)
    meta = {}
    if case is RegionCase.A:
        steps.append(BoundStep("sum bound", (1, 1), [
            ("h(Y_{A} minus E{u}) private links of user {u}", a - n_e),
            ("h(Y_B) shared links", b),
            ("h(Y_{C} minus E{v}) private links of user {v}", c - n_e),
        ]))
        meta = {"E1": link_a[:n_e], "E2": link_c[:n_e]}
    elif case is RegionCase.C:
        f, g = a + b - n_e, b + c - n_e
        e1 = link_a + link_b[b - (n_e - a):]
        e2 = sorted(link_c + link_b[b - (n_e - c):])
        cover = build_cover(f, g)
        cover.verify()
        cover_steps = _cover_steps(cover, f, 0, "")
        last = cover_steps[-1]
        assert last.halfspace == (g, f, f * g), "cover sum must equal |F||G|"
        steps += cover_steps
        g_links = [x for x in link_b if x not in e2]
        meta = {"E1": e1, "E2": e2, "E1_per_step": [
            sorted(link_a + [x for x in link_b if x not in {g_links[j - 1] for j in fi}])
            for fi in cover.f_sets]}
    elif case is RegionCase.B:
        f = a + b - n_e
        e1 = link_a + link_b[b - (n_e - a):]
        e2 = link_c[:n_e]
        steps.append(BoundStep("explicit cap {u}", (1, 0),
                               [("user {u} links of B outside E{u}", f)]))
        if f > 0:
            cover = build_cover(f, b)
            cover.verify()
            steps += _cover_steps(cover, f, c - n_e, "h(Y_{C} minus E{v}) private links of user {v}")
            assert steps[-1].halfspace == (b, f, (b + c - n_e) * f)
            meta = {"E1": e1, "E2": e2, "E1_per_step": [
                sorted(link_a + [x for x in link_b if x not in {link_b[j - 1] for j in fi}])
                for fi in cover.f_sets]}
        else:
            meta = {"E1": e1, "E2": e2}
    return case, steps, meta


def _check_eavesdropper_sets(meta, n_e):
    for key in ("E1", "E2"):
        if key in meta and len(meta[key]) != n_e:
            raise AssertionError(f"|{key}| != N_E")
    for e in meta.get("E1_per_step", []):
        if len(e) != n_e:
            raise AssertionError("per-step E1 has the wrong size")


def outer_bound(r0, r1, r2, n_e):
    """Outer-bound region and the dof-accounting steps that produce it.

    Returns
    -------
    region : DofRegion
    steps : list of BoundStep
    """
    region, steps, _, _ = _outer(r0, r1, r2, n_e)
    return region, steps


def _outer(r0, r1, r2, n_e):
    validate_dims(r0, r1, r2, n_e)
    swap = r1 > r2
    fr1, fr2 = (r2, r1) if swap else (r1, r2)
    case, steps, meta = _frame_bound(r0, fr1, fr2, n_e)
    _check_eavesdropper_sets(meta, n_e)
    if swap:
        steps = [s.relabeled(lambda t: _fill(t, _SWAPPED), swap=True) for s in steps]
        flip = lambda links: sorted(r0 + 1 - x for x in links)
        meta = {"E1": flip(meta.get("E2", [])), "E2": flip(meta.get("E1", [])),
                **({"E2_per_step": [flip(e) for e in meta["E1_per_step"]]}
                   if "E1_per_step" in meta else {})} if meta else {}
    else:
        steps = [s.relabeled(lambda t: _fill(t, _PLAIN)) for s in steps]
    nonneg = [(-1, 0, 0), (0, -1, 0)]
    region = DofRegion.from_halfspaces(nonneg + [s.halfspace for s in steps])
    return region, steps, meta, swap


@dataclass(frozen=True)
class Certificate:
    config: tuple
    case: RegionCase
    achievable: DofRegion
    outer: DofRegion
    steps: tuple
    verdict: bool
    swap_applied: bool
    eavesdropper_sets: dict = field(default_factory=dict)

    def to_json(self):
        r0, r1, r2, n_e = self.config
        return {
            "config": {"r0": r0, "r1": r1, "r2": r2, "n_e": n_e},
            "case": self.case.value,
            "achievable": self.achievable.to_json(),
            "outer": self.outer.to_json(),
            "verdict": self.verdict,
            "steps": [s.to_json() for s in self.steps],
            "swap_applied": self.swap_applied,
            "eavesdropper_sets": self.eavesdropper_sets,
        }


def certify(r0, r1, r2, n_e):
    """Certify that the achievable region meets the converse.

    Examples
    --------
    >>> certify(3, 2, 2, 1).verdict
    True
    """
    achievable = sdof_region(r0, r1, r2, n_e)
    outer, steps, meta, swap = _outer(r0, r1, r2, n_e)
    return Certificate(
        config=(r0, r1, r2, n_e),
        case=classify_case(r0, r1, r2, n_e),
        achievable=achievable,
        outer=outer,
        steps=tuple(steps),
        verdict=achievable == outer,
        swap_applied=swap,
        eavesdropper_sets=meta,
    )


def generic_ranks(nt1, nt2, nr):
    """Ranks of generic channels: ``r_k = min(N_Tk, N_R)``, ``r0 = min(N_T1+N_T2, N_R)``."""
    return min(nt1 + nt2, nr), min(nt1, nr), min(nt2, nr)


def certify_grid(n_max):
    """Certificates for every antenna tuple in ``[0, n_max]^4``, sorted by tuple.

    Returns a list of ``((nt1, nt2, nr, n_e), Certificate)`` pairs.  Rank
    tuples repeat across antenna tuples, so certificates are cached.
    """
    cache, out = {}, []
    rng = range(n_max + 1)
    for nt1 in rng:
        for nt2 in rng:
            for nr in rng:
                for n_e in rng:
                    key = generic_ranks(nt1, nt2, nr) + (n_e,)
                    if key not in cache:
                        cache[key] = certify(*key)
                    out.append(((nt1, nt2, nr, n_e), cache[key]))
    return out


def certify_from_channels(h1, h2, n_e, tol=1e-10):
    """Certificate for the ranks found by the GSVD of ``(h1, h2)``."""
    from .gsvd import gsvd
    d = gsvd(h1, h2, tol=tol).dims
    return certify(d.r0, d.r1, d.r2, int(n_e))
