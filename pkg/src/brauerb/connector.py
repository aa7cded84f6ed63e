"""Decorated connectors: the diagram-side index set of the type-B basis.

An (n+1)-connector is a perfect matching on the 2(n+1) points
{1..n+1, -1..-(n+1)}; bottom points are the negative integers.  A decorated
connector carries an even-cardinality set of marked pairs.  Connectors are
never composed here; they only index and count basis elements.

Class notation: T0 = no decorations, Teq = at least one horizontal strand,
Tbar = the strand (1, -1) is present, TbarEq = Tbar and Teq.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from brauerb.admissible import double_factorial
from brauerb.ring import Marker, ONE, THETA, XI


def _canon_pair(a, b):
    return (a, b) if (a, b) == tuple(sorted((a, b), key=lambda x: (abs(x), x < 0))) else (b, a)


def canonical_pairs(pairs):
    """Sort each pair and the list of pairs into the canonical order."""
    out = []
    for a, b in pairs:
        p, q = sorted((a, b), key=lambda x: (-x if x < 0 else x, x < 0))
        out.append((p, q))
    out.sort(key=lambda pq: (abs(pq[0]), pq[0] < 0, abs(pq[1]), pq[1] < 0))
    return tuple(out)


@dataclass(frozen=True)
class DecoratedConnector:
    """A perfect matching of {1..n+1, -1..-(n+1)} with an even decorated subset."""

    n_plus_1: int
    pairs: tuple
    decorated: tuple

    @classmethod
    def make(cls, n_plus_1, pairs, decorated=()):
        pairs = canonical_pairs(pairs)
        decorated = canonical_pairs(decorated)
        pts = sorted(abs(x) * (1 if x > 0 else -1) for p in pairs for x in p)
        want = sorted(list(range(1, n_plus_1 + 1)) + list(range(-n_plus_1, 0)))
        if pts != want:
            raise ValueError("pairs do not form a perfect matching of the point set")
        if not set(decorated) <= set(pairs):
            raise ValueError("decorated strands must be strands")
        if len(decorated) % 2:
            raise ValueError("the number of decorated strands must be even")
        return cls(n_plus_1, pairs, decorated)

    @classmethod
    def identity(cls, n_plus_1):
        return cls.make(n_plus_1, [(i, -i) for i in range(1, n_plus_1 + 1)])

    def is_horizontal(self, pair):
        a, b = pair
        return (a > 0) == (b > 0)

    def has_horizontal(self):
        return any(self.is_horizontal(p) for p in self.pairs)

    def class_membership(self):
        """Flags {in_T0, in_Teq, in_Tbar, in_TbarEq}."""
        in_t0 = not self.decorated
        in_teq = self.has_horizontal()
        in_tbar = (1, -1) in self.pairs
        return {
            "in_T0": in_t0,
            "in_Teq": in_teq,
            "in_Tbar": in_tbar,
            "in_TbarEq": in_tbar and in_teq,
        }


@dataclass(frozen=True)
class DiagramIndex:
    """Marker plus decorated connector plus a power of d: a basis index."""

    marker: Marker
    connector: DecoratedConnector
    delta_exp: int = 0

    def key(self):
        return (self.marker.tag, self.connector.pairs, self.connector.decorated)


def is_symmetric_basis_index(d):
    """Membership in the type-B basis T^| + xi T^{|=} + theta (T^= cap T^0)."""
    flags = d.connector.class_membership()
    if d.marker.tag == ONE:
        return flags["in_Tbar"]
    if d.marker.tag == XI:
        return flags["in_TbarEq"]
    if d.marker.tag == THETA:
        return flags["in_Teq"] and flags["in_T0"]
    return False


# --- enumeration ----------------------------------------------------------


def matchings(points):
    """All perfect matchings of a list of points."""
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    rest = points[1:]
    for i, other in enumerate(rest):
        for sub in matchings(rest[:i] + rest[i + 1 :]):
            yield [(first, other)] + sub


def even_subsets(items):
    items = list(items)
    k = len(items)
    for mask in range(1 << k):
        if bin(mask).count("1") % 2 == 0:
            yield [items[i] for i in range(k) if mask >> i & 1]


@lru_cache(maxsize=None)
def all_connectors(n_plus_1):
    """All decorated (n+1)-connectors, canonically ordered."""
    pts = list(range(1, n_plus_1 + 1)) + list(range(-n_plus_1, 0))
    out = []
    for match in matchings(pts):
        for dec in even_subsets(match):
            out.append(DecoratedConnector.make(n_plus_1, match, dec))
    out.sort(key=lambda c: (c.pairs, c.decorated))
    return tuple(out)


def count_class(n, cls):
    """Exhaustive count of a basis class of (n+1)-connectors.

    cls is one of "T|", "T|=", "TeqT0", "all_B_basis".
    """
    total = {"T|": 0, "T|=": 0, "TeqT0": 0}
    for c in all_connectors(n + 1):
        f = c.class_membership()
        if f["in_Tbar"]:
            total["T|"] += 1
        if f["in_TbarEq"]:
            total["T|="] += 1
        if f["in_Teq"] and f["in_T0"]:
            total["TeqT0"] += 1
    if cls == "all_B_basis":
        return total["T|"] + total["T|="] + total["TeqT0"]
    return total[cls]


def class_count_formula(n, cls):
    """Closed forms; |T^{|=}| uses 2^n(n!! - n!), forced by the rank identity."""
    if cls == "T|":
        return 2**n * double_factorial(n)
    if cls == "T|=":
        return 2**n * (double_factorial(n) - factorial(n))
    if cls == "TeqT0":
        return double_factorial(n + 1) - factorial(n + 1)
    if cls == "all_B_basis":
        return rank_formula(n)
    raise ValueError(cls)


def rank_formula(n):
    """f(n) = 2^(n+1) n!! - 2^n n! + (n+1)!! - (n+1)!"""
    return (
        2 ** (n + 1) * double_factorial(n)
        - 2**n * factorial(n)
        + double_factorial(n + 1)
        - factorial(n + 1)
    )


def matching_sum_identity(k):
    """sum_t (C(k,2t) t!!)^2 (k-2t)! for 0 <= 2t <= k; equals k!!."""
    return sum(
        (comb(k, 2 * t) * double_factorial(t)) ** 2 * factorial(k - 2 * t)
        for t in range(k // 2 + 1)
    )


def m_class_of(c):
    """The 1/1-hat strand shape class of an undecorated horizontal diagram.

    Returns one of 2..6 for members of T^= cap T^0, mirroring the five
    shape classes: 2 = vertical strand (1,-1); 3 = horizontals at both 1
    and -1; 4 = two different vertical strands at 1 and -1; 5 = horizontal
    at 1, vertical at -1; 6 = horizontal at -1, vertical at 1.
    """
    top = next(p for p in c.pairs if 1 in p)
    bot = next(p for p in c.pairs if -1 in p)
    top_horizontal = c.is_horizontal(top)
    bot_horizontal = c.is_horizontal(bot)
    if top == bot:
        return 2
    if top_horizontal and bot_horizontal:
        return 3
    if not top_horizontal and not bot_horizontal:
        return 4
    return 5 if top_horizontal else 6


def m_class_counts(n):
    """Counts of T^= cap T^0 diagrams by (top strand count t, M-class)."""
    out = {}
    for c in all_connectors(n + 1):
        f = c.class_membership()
        if not (f["in_Teq"] and f["in_T0"]):
            continue
        t = sum(1 for p in c.pairs if c.is_horizontal(p) and p[0] > 0)
        cls = m_class_of(c)
        out[(t, cls)] = out.get((t, cls), 0) + 1
    return out


def stratified_identity_rhs(n, t):
    """(C(n+1,2t) t!!)^2 (n+1-2t)!: all of T^= cap T^0 with t top strands."""
    return (comb(n + 1, 2 * t) * double_factorial(t)) ** 2 * factorial(n + 1 - 2 * t)


# --- encoding --------------------------------------------------------------


def canonical_encode(d):
    """Stable JSON-ready encoding of a diagram index."""
    return {
        "pairs": [list(p) for p in d.connector.pairs],
        "decorated": [list(p) for p in d.connector.decorated],
        "marker": d.marker.tag,
        "dexp": d.delta_exp,
    }


def canonical_decode(data, n_plus_1=None):
    pairs = [tuple(p) for p in data["pairs"]]
    if n_plus_1 is None:
        n_plus_1 = len(pairs)
    conn = DecoratedConnector.make(n_plus_1, pairs, [tuple(p) for p in data["decorated"]])
    return DiagramIndex(Marker(data["marker"]), conn, data["dexp"])


def render_ascii(d):
    """Two rows of points; horizontal arcs as brackets, dots as '*'."""
    np1 = d.connector.n_plus_1
    lines = [f"marker: {d.marker.tag}   d^{d.delta_exp}"]
    for p in d.connector.pairs:
        mark = " *" if p in d.connector.decorated else ""
        a, b = p
        fmt = lambda x: str(x) if x > 0 else f"{abs(x)}'"
        lines.append(f"  {fmt(a)} -- {fmt(b)}{mark}")
    lines.append("  top: 1.." + str(np1) + ", bottom: 1'.." + str(np1) + "'")
    return "\n".join(lines)
