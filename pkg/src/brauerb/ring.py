"""The coefficient ring Z[d, d^-1] and the marker monoid H.

Laurent elements are sparse maps exponent -> coefficient with exact integer
coefficients.  The marker monoid H = <d^(+-1), xi, theta> obeys

    xi*xi = d^2,   xi*theta = d*theta,   theta*theta = d^2*theta,

so every product of markers is a single marker times a power of d.
"""

from __future__ import annotations


class Laurent:
    """An element of Z[d, d^-1] as a dict {exponent: nonzero coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = t.get(e, 0) + c
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        self.terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        """coeff * d^exponent"""
        return cls({exponent: coeff} if coeff else {})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            c = t.get(e, 0) + c
            if c:
                t[e] = c
            else:
                t.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.terms = t
        return out

    def __neg__(self):
        out = Laurent.__new__(Laurent)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                c = t.get(e, 0) + c1 * c2
                if c:
                    t[e] = c
                else:
                    t.pop(e, None)
        out = Laurent.__new__(Laurent)
        out.terms = t
        return out

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by d^k."""
        out = Laurent.__new__(Laurent)
        out.terms = {e + k: c for e, c in self.terms.items()}
        return out

    def evaluate(self, value):
        """Substitute a Fraction or int for d.  Requires value != 0."""
        acc = 0
        for e, c in self.terms.items():
            acc += c * value**e
        return acc

    def __str__(self):
        # canonical textual form: terms sorted by ascending exponent
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                s = str(c)
            else:
                base = "d" if e == 1 else f"d^{e}"
                if c == 1:
                    s = base
                elif c == -1:
                    s = "-" + base
                else:
                    s = f"{c}*{base}"
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Laurent({self.terms!r})"

    def to_json(self):
        return {str(e): c for e, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): c for e, c in data.items()})


# --- marker monoid -----------------------------------------------------

ONE = "1"
XI = "xi"
THETA = "theta"

_MARKERS = (ONE, XI, THETA)

# (a, b) -> (product marker, delta shift); defined on the quotient {1, xi, theta}
_MARKER_TABLE = {
    (ONE, ONE): (ONE, 0),
    (ONE, XI): (XI, 0),
    (ONE, THETA): (THETA, 0),
    (XI, ONE): (XI, 0),
    (XI, XI): (ONE, 2),
    (XI, THETA): (THETA, 1),
    (THETA, ONE): (THETA, 0),
    (THETA, XI): (THETA, 1),
    (THETA, THETA): (THETA, 2),
}


class Marker:
    """One of the three loop scalars 1, xi, theta (powers of d kept separate)."""

    __slots__ = ("tag",)

    def __init__(self, tag):
        if tag not in _MARKERS:
            raise ValueError(f"unknown marker {tag!r}")
        self.tag = tag

    def __eq__(self, other):
        return isinstance(other, Marker) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Marker({self.tag!r})"

    def __str__(self):
        return self.tag


def marker_mul(a, b):
    """Multiply two markers.  Returns (marker, delta_shift)."""
    ta = a.tag if isinstance(a, Marker) else a
    tb = b.tag if isinstance(b, Marker) else b
    tag, shift = _MARKER_TABLE[(ta, tb)]
    return Marker(tag), shift
