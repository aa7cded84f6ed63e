"""Signed permutations, root systems of types B_n and D_{n+1}, cosets.

Conventions, used consistently across the package:

* Vectors live in R^m with m = n + 1; coordinate c (1-based) is eps_c.
  Roots are integer tuples of length m with entries in {-1, 0, 1}.
* A signed permutation is a tuple ``p`` of signed 1-based images:
  ``p[i-1] == +-j`` means p(eps_i) = +-eps_j.  Products compose like
  functions, ``mul(p, q)`` applies q first.
* W(B_n) is realised as the signed permutations of {1..m} fixing
  coordinate 1, acting on the projected root system Psi in eps_2..eps_m.
  W(D_{n+1}) is the even-sign subgroup of all signed permutations of {1..m}.
* Positive roots have their last nonzero coordinate equal to +1.
* The total order on permutations used for canonical coset representatives
  is lexicographic on image tuples under 1 < -1 < 2 < -2 < ...; the
  identity is minimal in every subgroup.

Simple roots: alpha_1 = eps_1 + eps_2 and alpha_i = eps_i - eps_{i-1}
(type D); beta_0 = eps_2 and beta_i = eps_{i+2} - eps_{i+1} (type B).
"""

from __future__ import annotations

from functools import lru_cache


# --- signed permutations -------------------------------------------------


def identity_perm(m):
    return tuple(range(1, m + 1))


def mul(p, q):
    """(p*q)(x) = p(q(x))."""
    return tuple(p[j - 1] if j > 0 else -p[-j - 1] for j in q)


def mul_many(*perms):
    acc = perms[0]
    for p in perms[1:]:
        acc = mul(acc, p)
    return acc


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p, start=1):
        if j > 0:
            out[j - 1] = i
        else:
            out[-j - 1] = -i
    return tuple(out)


def perm_key(p):
    """Sort key realising the order 1 < -1 < 2 < -2 < ... on images."""
    return tuple((abs(x) << 1) | (x < 0) for x in p)


def apply_to_vector(p, v):
    out = [0] * len(v)
    for i, x in enumerate(v):
        if x:
            j = p[i]
            if j > 0:
                out[j - 1] = x
            else:
                out[-j - 1] = -x
    return tuple(out)


def num_negative(p):
    return sum(1 for x in p if x < 0)


def unsigned(p):
    """Forget signs."""
    return tuple(abs(x) for x in p)


def perm_order(p):
    q, k = p, 1
    e = identity_perm(len(p))
    while q != e:
        q = mul(q, p)
        k += 1
    return k


# --- roots ---------------------------------------------------------------


def is_positive_root(v):
    for x in reversed(v):
        if x:
            return x > 0
    return False


def positive(v):
    """The positive representative of {v, -v}."""
    return v if is_positive_root(v) else tuple(-x for x in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def root_coords(v):
    """1-based coordinates where the root is nonzero, ascending."""
    return tuple(i for i, x in enumerate(v, start=1) if x)


def is_short(v):
    return len(root_coords(v)) == 1


def is_long(v):
    return len(root_coords(v)) == 2


def unit(m, c):
    """eps_c in R^m."""
    v = [0] * m
    v[c - 1] = 1
    return tuple(v)


def long_root(m, hi, lo, sign):
    """eps_hi + sign*eps_lo with hi > lo."""
    v = [0] * m
    v[hi - 1] = 1
    v[lo - 1] = sign
    return tuple(v)


def mate(v):
    """Orthogonal mate eps_j - eps_i <-> eps_j + eps_i of a long root."""
    c = root_coords(v)
    if len(c) != 2:
        raise ValueError(f"short root {v} has no orthogonal mate")
    lo, hi = c
    w = list(v)
    w[lo - 1] = -w[lo - 1]
    return positive(tuple(w))


def reflection(root):
    """The orthogonal reflection in a (short or long) root, as a perm."""
    c = root_coords(root)
    m = len(root)
    p = list(range(1, m + 1))
    if len(c) == 1:
        p[c[0] - 1] = -c[0]
    elif len(c) == 2:
        lo, hi = c
        if root[lo - 1] * root[hi - 1] < 0:  # eps_hi - eps_lo: plain swap
            p[lo - 1], p[hi - 1] = hi, lo
        else:  # eps_hi + eps_lo: swap with both signs flipped
            p[lo - 1], p[hi - 1] = -hi, -lo
    else:
        raise ValueError(f"not a root: {root}")
    return tuple(p)


def reflect_vector(v, root):
    """R_root(v) = v - 2(v,root)/(root,root) * root."""
    c = 2 * dot(v, root) // dot(root, root)
    return tuple(a - c * b for a, b in zip(v, root))


def project_p(v):
    """The projection killing the eps_1 component: p(x) = (sigma(x)+x)/2."""
    return (0,) + tuple(v[1:])


def sigma_flip(v):
    """The reflection sigma in eps_1."""
    return (-v[0],) + tuple(v[1:])


# --- type D and type B root systems --------------------------------------


def phi_positive(m):
    """Positive roots of D_m: eps_j +- eps_i, j > i."""
    out = []
    for j in range(2, m + 1):
        for i in range(1, j):
            out.append(long_root(m, j, i, -1))
            out.append(long_root(m, j, i, +1))
    return out


def psi_positive(m):
    """Positive roots of the projected B-system: coordinates 2..m."""
    out = [unit(m, j) for j in range(2, m + 1)]
    for j in range(3, m + 1):
        for i in range(2, j):
            out.append(long_root(m, j, i, -1))
            out.append(long_root(m, j, i, +1))
    return out


def alpha(m, i):
    """Simple roots of D_{m}: alpha_1 = eps_1+eps_2, alpha_i = eps_i-eps_{i-1}."""
    if i == 1:
        return long_root(m, 2, 1, +1)
    return long_root(m, i, i - 1, -1)


def beta(m, i):
    """Simple roots of the B-system: beta_0 = eps_2, beta_i = eps_{i+2}-eps_{i+1}."""
    if i == 0:
        return unit(m, 2)
    return long_root(m, i + 2, i + 1, -1)


def lift_to_d(p):
    """Lift a coordinate-1-fixing perm to W(D_m) by flipping eps_1 if needed.

    This is the phi-image of a W(B_n) element: signs come in even numbers
    in W(D_{n+1}), so an odd sign count on coordinates 2..m flips eps_1.
    """
    if p[0] != 1:
        raise ValueError("not a B-type permutation")
    if num_negative(p) % 2:
        return (-1,) + p[1:]
    return p


# --- words ---------------------------------------------------------------


def parse_word(text, n):
    """Parse the CLI word grammar ``r0 r1 e0 e2 d d-1`` into tokens.

    Tokens are ("r", i), ("e", i) with 0 <= i < n, or ("d", +-1).
    """
    tokens = []
    for pos, tok in enumerate(text.split()):
        if tok == "d":
            tokens.append(("d", 1))
        elif tok in ("d-1", "d^-1"):
            tokens.append(("d", -1))
        elif tok and tok[0] in "re":
            try:
                i = int(tok[1:])
            except ValueError:
                raise ValueError(f"bad token {tok!r} at position {pos}") from None
            if not 0 <= i < n:
                raise ValueError(f"index out of range in token {tok!r} at position {pos}")
            tokens.append((tok[0], i))
        else:
            raise ValueError(f"bad token {tok!r} at position {pos}")
    return tokens


def word_to_perm(tokens, n):
    """Product of simple reflections for an r-only word."""
    m = n + 1
    p = identity_perm(m)
    for kind, i in tokens:
        if kind != "r":
            raise ValueError("word contains a non-reflection token")
        p = mul(p, reflection(beta(m, i)))
    return p


# --- generic orbit / transporter / coset machinery -----------------------


def generate_group(gens, m=None):
    """All elements of the group generated by ``gens`` (BFS, deterministic)."""
    if not gens:
        return [identity_perm(m)]
    e = identity_perm(len(gens[0]))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = mul(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen, key=perm_key)


def orbit(gens, x, act):
    """Orbit of x under the group generated by gens, where act(g, x) is the action."""
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for g in gens:
                z = act(g, y)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return seen


def transporter(gens, x, y, act):
    """Some g in <gens> with act(g, x) == y, or None.

    Breadth first search over the orbit with a fixed generator order, so the
    result is deterministic.
    """
    if x == y:
        return identity_perm(len(gens[0])) if gens else None
    seen = {x: None}
    frontier = [x]
    parent = {}
    while frontier:
        nxt = []
        for z in frontier:
            for g in gens:
                w = act(g, z)
                if w not in seen:
                    seen[w] = (g, z)
                    nxt.append(w)
                    if w == y:
                        # reconstruct the group element along the path
                        p = identity_perm(len(g))
                        cur = w
                        while seen[cur] is not None:
                            gg, prev = seen[cur]
                            p = mul(p, gg)
                            cur = prev
                        return p
        frontier = nxt
    return None


def act_on_root_set(g, roots):
    """Action on sets of positive roots: negatives are flipped back."""
    return frozenset(positive(apply_to_vector(g, r)) for r in roots)


class Subgroup:
    """A subgroup of signed permutations with coset representative tables.

    Left representatives are canonical for g*N (minimal in the image order),
    right representatives for N*g.  Tables are filled lazily one coset at a
    time, so only visited cosets are ever materialised.
    """

    def __init__(self, gens, m, elements=None):
        self.m = m
        self.gens = tuple(gens)
        if elements is None:
            elements = generate_group(list(gens) or [], m)
        self.elements = tuple(sorted(elements, key=perm_key))
        self.element_set = frozenset(self.elements)
        self._left = {}
        self._right = {}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.element_set

    def left_rep(self, g):
        """Canonical representative of the left coset g*N."""
        r = self._left.get(g)
        if r is None:
            coset = [mul(g, x) for x in self.elements]
            r = min(coset, key=perm_key)
            for c in coset:
                self._left[c] = r
        return r

    def right_rep(self, g):
        """Canonical representative of the right coset N*g."""
        r = self._right.get(g)
        if r is None:
            coset = [mul(x, g) for x in self.elements]
            r = min(coset, key=perm_key)
            for c in coset:
                self._right[c] = r
        return r


def canonical_coset_rep(subgroup_gens, g):
    """Minimal representative of g*<subgroup_gens> in the image-tuple order."""
    sub = Subgroup(subgroup_gens, len(g))
    return sub.left_rep(g)


def factor_in_product(a_gens, w_gens, x):
    """Factor x = b*a with b in <w_gens> and a in <a_gens>.

    Deterministic: takes the minimal valid a in the element order.  Raises
    ValueError when no factorisation exists (the ambient product assumption
    failed, which indicates a bug in the subgroup data).
    """
    m = len(x)
    a_sub = Subgroup(a_gens, m)
    w_sub = Subgroup(w_gens, m)
    for a in a_sub.elements:
        b = mul(x, inv(a))
        if b in w_sub:
            return b, a
    raise ValueError("element does not factor as W-part times A-part")


class WeylB:
    """The group W(B_n) acting on coordinates 2..n+1 of R^(n+1)."""

    def __init__(self, n):
        self.n = n
        self.m = n + 1
        self.simple_roots = [beta(self.m, i) for i in range(n)]
        self.gens = [reflection(b) for b in self.simple_roots]

    @property
    def order(self):
        return (2**self.n) * _factorial(self.n)

    def elements(self):
        return _weyl_b_elements(self.n)

    def r(self, i):
        return self.gens[i]

    def r_word_perm(self, indices):
        """Perm of the word r_{i1} r_{i2} ... (leftmost applied last)."""
        p = identity_perm(self.m)
        for i in indices:
            p = mul(p, self.gens[i])
        return p

    def short_flip(self, c):
        """r_{eps_c}: the reflection flipping coordinate c (2 <= c <= m)."""
        return reflection(unit(self.m, c))

    def coxeter_word(self, p):
        """A shortest word in r_0..r_{n-1} for p, as a list of indices."""
        return _weyl_b_words(self.n)[p]


@lru_cache(maxsize=None)
def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def _weyl_b_elements(n):
    w = WeylB(n)
    return tuple(generate_group(w.gens, w.m))


@lru_cache(maxsize=None)
def _weyl_b_words(n):
    """BFS word table: perm -> shortest r-word (list of generator indices)."""
    w = WeylB(n)
    e = identity_perm(w.m)
    words = {e: ()}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            base = words[p]
            for i, g in enumerate(w.gens):
                q = mul(g, p)
                if q not in words:
                    words[q] = (i,) + base
                    nxt.append(q)
        frontier = nxt
    return words


# --- JSON adapters --------------------------------------------------------


def perm_to_json(p, kind="B"):
    """JSON images over the abstract coordinates of the group.

    B-type perms fix coordinate 1 internally; JSON uses 1..n with
    coordinate c of R^(n+1) appearing as abstract index c-1.
    """
    if kind == "B":
        if p[0] != 1:
            raise ValueError("not a B-type permutation")
        images = []
        for x in p[1:]:
            images.append(x - 1 if x > 0 else x + 1)
        return {"kind": "B", "images": images}
    return {"kind": "D", "images": list(p)}


def perm_from_json(data, n=None):
    kind = data.get("kind", "B")
    images = data["images"]
    if kind == "B":
        out = [1]
        for x in images:
            out.append(x + 1 if x > 0 else x - 1)
        return tuple(out)
    return tuple(images)
