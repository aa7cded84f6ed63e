"""Admissible root sets and the monoid action on them.

Type D admissibility is the triple rule: whenever three distinct members
g1, g2, g3 admit a root g with |(g, gi)| = 1 for all i, the positive root of
R_g R_{g1} R_{g2} R_{g3} g must also belong to the set.  A subset of the
projected B-system is admissible when its sigma-invariant lift into the
D-system is admissible.  Generators act through their phi-images on the
lift; delta acts trivially.

Throughout, k!! means 1*3*5*...*(2k-1), the number of perfect matchings on
2k points, so 0!! = 1, 1!! = 1, 2!! = 3, 3!! = 15.  This is the convention
that makes every counting formula in the package come out right.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from brauerb import weyl
from brauerb.weyl import (
    WeylB,
    beta,
    dot,
    is_short,
    mate,
    positive,
    project_p,
    reflect_vector,
    root_coords,
)


def double_factorial(k):
    """k!! = 1*3*5*...*(2k-1)."""
    out = 1
    for i in range(1, k + 1):
        out *= 2 * i - 1
    return out


class NotAdmissibleError(ValueError):
    """Raised when a set has no admissible closure."""


def mutually_orthogonal(roots):
    roots = list(roots)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if dot(roots[i], roots[j]):
                return False
    return True


def lift(b_roots, m):
    """The sigma-invariant lift: preimages under the projection, in Phi^+.

    A long root lifts to itself; a short root eps_j lifts to the pair
    eps_j - eps_1, eps_j + eps_1.
    """
    out = set()
    for r in b_roots:
        if is_short(r):
            j = root_coords(r)[0]
            lo = list(r)
            lo[0] = -1
            hi = list(r)
            hi[0] = 1
            out.add(tuple(lo))
            out.add(tuple(hi))
        else:
            out.add(tuple(r))
    return frozenset(out)


@lru_cache(maxsize=None)
def _phi_positive(m):
    return tuple(weyl.phi_positive(m))


def _triple_violations(roots, m):
    """Yield positive roots forced by the triple rule but missing from the set."""
    roots = sorted(roots)
    k = len(roots)
    for a in range(k):
        for b in range(a + 1, k):
            for c in range(b + 1, k):
                g1, g2, g3 = roots[a], roots[b], roots[c]
                for g in _phi_positive(m):
                    if abs(dot(g, g1)) == 1 and abs(dot(g, g2)) == 1 and abs(dot(g, g3)) == 1:
                        v = reflect_vector(g, g3)
                        v = reflect_vector(v, g2)
                        v = reflect_vector(v, g1)
                        v = reflect_vector(v, g)
                        v = positive(v)
                        if v not in roots:
                            yield v


def is_admissible_d(roots, m=None):
    """Triple-rule admissibility for mutually orthogonal subsets of Phi^+."""
    roots = frozenset(roots)
    if not roots:
        return True
    m = m or len(next(iter(roots)))
    if not mutually_orthogonal(roots):
        raise ValueError("input roots are not mutually orthogonal")
    for _ in _triple_violations(roots, m):
        return False
    return True


def closure_d(roots, m=None):
    """Least admissible superset in the D-system.

    Adds triple-rule roots until stable.  Raises NotAdmissibleError when a
    forced root breaks mutual orthogonality, i.e. no admissible superset
    exists.
    """
    roots = set(roots)
    if not roots:
        return frozenset()
    m = m or len(next(iter(roots)))
    if not mutually_orthogonal(roots):
        raise NotAdmissibleError("roots are not mutually orthogonal")
    while True:
        forced = None
        for v in _triple_violations(frozenset(roots), m):
            forced = v
            break
        if forced is None:
            return frozenset(roots)
        for r in roots:
            if dot(forced, r):
                raise NotAdmissibleError(
                    f"forced root {forced} is not orthogonal to {r}; no admissible closure"
                )
        roots.add(forced)


def is_admissible_b(roots, m):
    """B-side admissibility through the lift.

    The input must itself be mutually orthogonal (error otherwise); the
    verdict is False when the lift fails orthogonality or the triple rule.
    """
    roots = frozenset(roots)
    if not mutually_orthogonal(roots):
        raise ValueError("input roots are not mutually orthogonal")
    lifted = lift(roots, m)
    if not mutually_orthogonal(lifted):
        return False
    return is_admissible_d(lifted, m)


def closure_b(roots, m):
    """Least admissible superset on the B side (error when none exists)."""
    roots = frozenset(roots)
    if not roots:
        return frozenset()
    if not mutually_orthogonal(roots):
        raise NotAdmissibleError("roots are not mutually orthogonal")
    lifted = lift(roots, m)
    if not mutually_orthogonal(lifted):
        raise NotAdmissibleError("lift is not mutually orthogonal; no admissible closure")
    closed = closure_d(lifted, m)
    return frozenset(positive(project_p(r)) for r in closed)


# --- standard representatives ---------------------------------------------


def z_plain(n, t):
    """Z_t: t pairwise orthogonal long roots, no mates."""
    m = n + 1
    return frozenset(beta(m, n - 1 - 2 * i) for i in range(t))


def z_tilde(n, t):
    """Z~_t: t long roots together with their mates."""
    out = set()
    m = n + 1
    for i in range(t):
        r = beta(m, n - 1 - 2 * i)
        out.add(r)
        out.add(mate(r))
    return frozenset(out)


def z_bar(n, t):
    """Z-_t: t-1 mate pairs plus the short root beta_0."""
    m = n + 1
    return frozenset(z_tilde(n, t - 1)) | {beta(m, 0)}


def standard_rep(kind, t, n):
    if kind == 1:
        return z_plain(n, t)
    if kind == 2:
        return z_tilde(n, t)
    if kind == 3:
        return z_bar(n, t)
    raise ValueError(f"unknown representative kind {kind}")


def type_ranges(n):
    """Valid (kind, t) pairs for the three orbit families at rank n."""
    out = [(1, t) for t in range((n + 2) // 2)]  # 0 <= t < (n+1)/2
    out += [(2, t) for t in range(1, n // 2 + 1)]  # 1 <= t <= n/2
    out += [(3, t) for t in range(1, (n + 1) // 2 + 1)]  # 1 <= t <= (n+1)/2
    return out


def orbit_size_formula(kind, t, n):
    """Lemma-style closed forms for the three orbit families."""
    if kind == 1:
        return 2**t * comb(n, 2 * t) * double_factorial(t)
    if kind == 2:
        return comb(n, 2 * t) * double_factorial(t)
    if kind == 3:
        return n * comb(n - 1, 2 * t - 2) * double_factorial(t - 1)
    raise ValueError(f"unknown representative kind {kind}")


def orbit_of(b_set, n):
    w = WeylB(n)
    return weyl.orbit(w.gens, frozenset(b_set), weyl.act_on_root_set)


def orbit_size(kind, t, n):
    """BFS orbit count of the standard representative under W(B_n)."""
    if (kind, t) not in type_ranges(n):
        raise ValueError(f"(kind={kind}, t={t}) out of range for n={n}")
    return len(orbit_of(standard_rep(kind, t, n), n))


@lru_cache(maxsize=None)
def all_admissible_sets(n):
    """Every admissible subset of Psi^+, as the union of all W(B_n)-orbits."""
    out = set()
    for kind, t in type_ranges(n):
        out |= orbit_of(standard_rep(kind, t, n), n)
    return frozenset(out)


def classify(b_set, n):
    """Classify an admissible set: returns (kind, t, g) with g*set = rep.

    The transporter g is found by BFS and satisfies
    act_on_root_set(g, set) == standard_rep(kind, t, n).
    """
    b_set = frozenset(b_set)
    shorts = [r for r in b_set if is_short(r)]
    longs = [r for r in b_set if not is_short(r)]
    paired = [r for r in longs if mate(r) in b_set]
    if shorts:
        if len(shorts) != 1 or len(paired) != len(longs):
            raise ValueError("not an admissible set")
        kind, t = 3, len(longs) // 2 + 1
    elif paired:
        if len(paired) != len(longs):
            raise ValueError("not an admissible set")
        kind, t = 2, len(longs) // 2
    else:
        kind, t = 1, len(longs)
    rep = standard_rep(kind, t, n)
    w = WeylB(n)
    g = weyl.transporter(w.gens, b_set, rep, weyl.act_on_root_set)
    if g is None:
        raise ValueError("set is not in the orbit of its putative representative")
    return kind, t, g


# --- the monoid action ------------------------------------------------------


def act_d_reflection(root, a_set):
    return frozenset(positive(reflect_vector(r, root)) for r in a_set)


def act_d_e(alpha_root, a_set, m):
    """The E-generator action on admissible sets of the D-system."""
    a_set = frozenset(a_set)
    if alpha_root in a_set:
        return a_set
    if all(dot(alpha_root, r) == 0 for r in a_set):
        return closure_d(a_set | {alpha_root}, m)
    # choice of beta is immaterial (tested); take the minimal one
    b = min(r for r in a_set if dot(alpha_root, r))
    return act_d_reflection(b, act_d_reflection(alpha_root, a_set))


def act_generator(token, b_set, n):
    """Action of one B-type generator token on an admissible subset of Psi^+.

    Acts through the phi-image on the sigma-invariant lift, then projects:
    r_0 -> R_1 R_2, e_0 -> E_1 E_2, r_i -> R_{i+2}, e_i -> E_{i+2}, and the
    d tokens act trivially.
    """
    kind, i = token
    m = n + 1
    if kind == "d":
        return frozenset(b_set)
    lifted = lift(b_set, m)
    if kind == "r":
        if i == 0:
            for j in (2, 1):
                lifted = act_d_reflection(weyl.alpha(m, j), lifted)
        else:
            lifted = act_d_reflection(weyl.alpha(m, i + 2), lifted)
    elif kind == "e":
        if i == 0:
            lifted = act_d_e(weyl.alpha(m, 2), lifted, m)
            lifted = act_d_e(weyl.alpha(m, 1), lifted, m)
        else:
            lifted = act_d_e(weyl.alpha(m, i + 2), lifted, m)
    else:
        raise ValueError(f"unknown token {token}")
    return frozenset(positive(project_p(r)) for r in lifted)


def act_word(tokens, b_set, n):
    """Right-to-left action of a generator word."""
    cur = frozenset(b_set)
    for token in reversed(tokens):
        cur = act_generator(token, cur, n)
    return cur


def act_perm(p, b_set):
    """Action of a Weyl element given as a signed permutation."""
    return weyl.act_on_root_set(p, frozenset(b_set))


# --- JSON ---------------------------------------------------------------


def set_to_json(b_set):
    return {"kind": "B", "roots": sorted(list(r) for r in b_set)}


def set_from_json(data):
    return frozenset(tuple(r) for r in data["roots"])
