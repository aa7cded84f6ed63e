"""Per-class subgroup data attached to each F-element f_t^(i).

For every class i in 1..6 and admissible t this module builds:

* the defining word of f_t^(i) and its top/bottom admissible sets,
* generator lists for the subgroups C (commutes with f), A (absorbed by f),
  W (pushes through f into C) and the stabiliser-like N = A.W,
* the push-through homomorphisms Theta_L, Theta_R with n*f = f*Theta_L(n)
  for n in N_L and f*n = Theta_R(n)*f for n in N_R.

The push-throughs are computed from coordinates, not from words: on the
theta-marked classes 2..6 all sign data washes out, so Theta is the
unsigned restriction to the free coordinate block; on class 1 it is the
signed restriction times the mate-swap parity mapped onto the reflection
in the mate of beta_{n-1}.

The generator ranges follow the orders demanded by the cardinality table
(|C_t^(2)| = (n-2t)! and so on); the printed ranges in the source material
are off by one against its own table and structure lemma, and only these
ranges make the rank sum come out to f(n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from brauerb import admissible as adm
from brauerb import weyl
from brauerb.admissible import double_factorial
from brauerb.weyl import (
    Subgroup,
    beta,
    identity_perm,
    inv,
    is_short,
    mate,
    mul,
    mul_many,
    positive,
    reflection,
    root_coords,
    unit,
)

OPPOSITE_CLASS = {1: 1, 2: 2, 3: 3, 4: 4, 5: 6, 6: 5}


def class_ranges(n):
    """Valid t per class: {i: [t...]}."""
    return {
        1: list(range((n + 2) // 2)),  # 0 <= t < (n+1)/2
        2: list(range(1, n // 2 + 1)),
        3: list(range(1, (n + 1) // 2 + 1)),
        4: list(range(1, (n - 1) // 2 + 1)),
        5: list(range(1, n // 2 + 1)),
        6: list(range(1, n // 2 + 1)),
    }


def f_word(n, i, t):
    """Defining token word of f_t^(i) (empty for the identity f_0^(1))."""

    def estar(j):
        # e_{mate(beta_j)} = r_{eps_{j+1}} e_j r_{eps_{j+1}}
        flip = [("r", k) for k in range(j - 1, 0, -1)] + [("r", 0)] + [
            ("r", k) for k in range(1, j)
        ]
        return flip + [("e", j)] + flip

    def f2(tt):
        out = []
        for k in range(1, tt + 1):
            j = n + 1 - 2 * k
            out += [("e", j)] + estar(j)
        return out

    if i == 1:
        return tuple(("e", n + 1 - 2 * k) for k in range(1, t + 1))
    if i == 2:
        return tuple(f2(t))
    if i == 3:
        return tuple([("e", 0)] + f2(t - 1))
    if i == 4:
        return tuple([("e", 2), ("r", 1), ("e", 0), ("e", 1), ("e", 2)] + f2(t - 1))
    if i == 5:
        return tuple([("e", 0), ("e", 1)] + f2(t - 1))
    if i == 6:
        return tuple([("e", 1), ("e", 0)] + f2(t - 1))
    raise ValueError(f"bad class {i}")


def table1_d(n, i, t):
    """Coset counts |D_t^(i)| from the cardinality table."""
    if i == 1:
        return 2**t * comb(n, 2 * t) * double_factorial(t)
    if i in (2, 6):
        return comb(n, 2 * t) * double_factorial(t)
    if i == 3:
        return n * comb(n - 1, 2 * t - 2) * double_factorial(t - 1)
    if i == 4:
        return n * comb(n - 1, 2 * t) * double_factorial(t)
    if i == 5:
        return n * (n - 1) * comb(n - 2, 2 * t - 2) * double_factorial(t - 1)
    raise ValueError(f"bad class {i}")


def table1_c(n, i, t):
    """Centraliser orders |C_t^(i)| from the cardinality table."""
    if i == 1:
        if t == 0:
            return 2**n * factorial(n)
        return 2 ** (n + 1 - 2 * t) * factorial(n - 2 * t)
    if i in (2, 5, 6):
        return factorial(n - 2 * t)
    if i == 3:
        return factorial(n + 1 - 2 * t)
    if i == 4:
        return factorial(n - 1 - 2 * t)
    raise ValueError(f"bad class {i}")


def layer_size(n, i, t):
    """|D_L| * |C| * |D_R| for the (i, t) layer."""
    j = OPPOSITE_CLASS[i]
    return table1_d(n, i, t) * table1_c(n, i, t) * table1_d(n, j, t)


# --- explicit permutation constructions -------------------------------------


def perm_with_images(m, images):
    """Signed perm with the given {src: +-dst} images, coordinate 1 fixed.

    Unspecified source coordinates are matched to the unused target
    coordinates in ascending order with positive sign.
    """
    images = dict(images)
    images.setdefault(1, 1)
    used_src = set(images)
    used_dst = {abs(v) for v in images.values()}
    if len(used_dst) != len(images):
        raise ValueError("target coordinates collide")
    free_src = [c for c in range(1, m + 1) if c not in used_src]
    free_dst = [c for c in range(1, m + 1) if c not in used_dst]
    for s, d in zip(free_src, free_dst):
        images[s] = d
    p = [0] * m
    for s, d in images.items():
        p[s - 1] = d
    return tuple(p)


def _set_structure(roots):
    """Split a mutually orthogonal set into shorts, full mate pairs, bare longs."""
    roots = set(roots)
    shorts = sorted(r for r in roots if is_short(r))
    longs = [r for r in roots if not is_short(r)]
    pair_coords = set()
    bare = []
    for r in longs:
        if mate(r) in roots:
            pair_coords.add(root_coords(r))
        else:
            bare.append(r)
    return shorts, sorted(pair_coords), sorted(bare)


def conjugator(src, dst, m, fix=()):
    """A signed perm s with s . src = dst as sets of positive roots.

    Both sets must have the same structure (short count, full-pair count,
    bare-long count).  Coordinates in ``fix`` are mapped identically; the
    result is deterministic.
    """
    s_shorts, s_pairs, s_bare = _set_structure(src)
    d_shorts, d_pairs, d_bare = _set_structure(dst)
    if (len(s_shorts), len(s_pairs), len(s_bare)) != (len(d_shorts), len(d_pairs), len(d_bare)):
        raise ValueError("sets have different structure")
    images = {c: c for c in fix}
    images[1] = 1
    for sr, dr in zip(s_shorts, d_shorts):
        images[root_coords(sr)[0]] = root_coords(dr)[0]
    for (sa, sb), (da, db) in zip(s_pairs, d_pairs):
        images[sa], images[sb] = da, db
    for sr, dr in zip(s_bare, d_bare):
        (sa, sb), (da, db) = root_coords(sr), root_coords(dr)
        s_plus = sr[sa - 1] == sr[sb - 1]
        d_plus = dr[da - 1] == dr[db - 1]
        # flip the low coordinate when orientations disagree
        images[sa] = -da if s_plus != d_plus else da
        images[sb] = db
    s = perm_with_images(m, images)
    if weyl.act_on_root_set(s, frozenset(src)) != frozenset(dst):
        raise AssertionError("conjugator construction failed")
    return s


# --- class data --------------------------------------------------------------


@dataclass
class ClassData:
    n: int
    i: int
    t: int
    word: tuple
    x_left: frozenset
    x_right: frozenset
    free: tuple
    pair_roots: tuple
    c_gens: list
    a_gens: list
    w_gens: list
    c_sub: Subgroup
    n_left: Subgroup
    n_right: Subgroup = None
    star: tuple = None  # class 1 only: reflection in mate(beta_{n-1})


class SubgroupTables:
    """Builds and caches ClassData for one rank n."""

    def __init__(self, n):
        self.n = n
        self.m = n + 1
        self.w = weyl.WeylB(n)
        self._data = {}
        self.ranges = class_ranges(n)

    def valid(self, i, t):
        return t in self.ranges[i]

    def r(self, i):
        return self.w.gens[i]

    def rstar(self, i):
        return reflection(mate(beta(self.m, i)))

    def flip(self, c):
        return reflection(unit(self.m, c))

    def chain(self, lo, hi):
        return [self.r(i) for i in range(lo, hi + 1)] if hi >= lo else []

    def mu(self, i):
        """Adjacent pair swap r_{n-2i} r_{n+1-2i} r_{n-1-2i} r_{n-2i}."""
        n = self.n
        return mul_many(
            self.r(n - 2 * i), self.r(n + 1 - 2 * i), self.r(n - 1 - 2 * i), self.r(n - 2 * i)
        )

    def _c_gens(self, i, t):
        n = self.n
        if i == 1:
            if t == 0:
                return list(self.w.gens)
            return [self.rstar(n - 1)] + self.chain(0, n - 1 - 2 * t)
        if i == 2:
            return self.chain(1, n - 1 - 2 * t)
        if i == 3:
            return self.chain(2, n + 1 - 2 * t)
        if i == 4:
            return self.chain(4, n + 1 - 2 * t)
        return self.chain(3, n + 1 - 2 * t)  # classes 5, 6

    def _a_gens(self, i, t):
        n = self.n
        if i == 1:
            return [self.mu(k) for k in range(1, t)] + [
                self.r(n + 1 - 2 * k) for k in range(1, t + 1)
            ]
        if i == 2:
            return (
                [self.flip(n + 2 - 2 * t)]
                + self._a_gens(1, t)
                + [self.rstar(n + 1 - 2 * k) for k in range(1, t + 1)]
            )
        if i == 3:
            out = [self.r(0)]
            if t >= 2:
                out.append(self.flip(n + 4 - 2 * t))
            out += [self.mu(k) for k in range(1, t - 1)]
            for k in range(1, t):
                out += [self.r(n + 1 - 2 * k), self.rstar(n + 1 - 2 * k)]
            return out
        if i == 4:
            out = [self.flip(3), self.r(0), self.r(2), self.rstar(2)]
            if t >= 2:
                rt = reflection(
                    tuple(
                        a - b
                        for a, b in zip(unit(self.m, n + 4 - 2 * t), unit(self.m, 4))
                    )
                )
                out.append(mul_many(rt, self.r(2), self.r(n + 3 - 2 * t), rt))
            out += self._a_gens(1, t - 1)
            for k in range(1, t):
                out += [self.r(n + 1 - 2 * k), self.rstar(n + 1 - 2 * k)]
            return out
        if i == 5:
            return self._a_gens(3, t) + [self.flip(3)]
        if i == 6:
            tau = self._tau(t)
            return [mul_many(tau, g, inv(tau)) for g in self._a_gens(2, t)]
        raise ValueError(f"bad class {i}")

    def _w_gens(self, i, t):
        n = self.n
        if i == 1:
            return self.chain(0, n - 1 - 2 * t) + [
                self.rstar(n + 1 - 2 * k) for k in range(1, t + 1)
            ]
        if i == 2:
            return self.chain(0, n - 1 - 2 * t)
        if i == 3:
            out = self.chain(2, n + 1 - 2 * t)
            if 3 <= n + 3 - 2 * t:
                out.append(self.flip(3))
            return out
        if i == 4:
            out = self.chain(4, n + 1 - 2 * t)
            if 5 <= n + 3 - 2 * t:
                out.append(self.flip(5))
            return out
        if i == 5:
            out = self.chain(3, n + 1 - 2 * t)
            if 4 <= n + 3 - 2 * t:
                out.append(self.flip(4))
            return out
        if i == 6:
            tau = self._tau(t)
            return [mul_many(tau, g, inv(tau)) for g in self._w_gens(2, t)]
        raise ValueError(f"bad class {i}")

    def _tau(self, t):
        """A perm sending Z~_t(std) to Z~_{t-1}(std) + {beta_1, beta_1*}."""
        a = self.n + 2 - 2 * t  # low coordinate of the lowest pair of Z~_t
        return perm_with_images(self.m, {a: 2, a + 1: 3})

    def free_coords(self, i, t):
        n = self.n
        if i in (1, 2):
            return tuple(range(2, n + 2 - 2 * t))
        if i == 3:
            return tuple(range(3, n + 4 - 2 * t))
        if i == 4:
            return tuple(range(5, n + 4 - 2 * t))
        return tuple(range(4, n + 4 - 2 * t))  # classes 5, 6

    def data(self, i, t):
        key = (i, t)
        if key in self._data:
            return self._data[key]
        if not self.valid(i, t):
            raise ValueError(f"(i={i}, t={t}) out of range for n={self.n}")
        n, m = self.n, self.m
        word = f_word(n, i, t)
        x_left = adm.act_word(list(word), frozenset(), n)
        if i == 1:
            expected = adm.z_plain(n, t)
        elif i == 2:
            expected = adm.z_tilde(n, t)
        elif i == 3:
            expected = adm.z_bar(n, t)
        else:
            anchor = beta(m, {4: 2, 5: 0, 6: 1}[i])
            extra = {anchor} if i == 5 else {anchor, mate(anchor)}
            expected = frozenset(extra) | adm.z_tilde(n, t - 1)
        if x_left != expected:
            raise AssertionError(f"top set of f_{t}^({i}) is {x_left}, expected {expected}")
        j = OPPOSITE_CLASS[i]
        x_right = adm.act_word(list(f_word(n, j, t)), frozenset(), n)

        c_gens = self._c_gens(i, t)
        a_gens = self._a_gens(i, t)
        w_gens = self._w_gens(i, t)
        c_sub = Subgroup(c_gens, m)
        if len(c_sub) != table1_c(n, i, t):
            raise AssertionError(
                f"|C_{t}^({i})| = {len(c_sub)}, table demands {table1_c(n, i, t)}"
            )
        n_left = self._n_subgroup(i, t, x_left, a_gens, w_gens)
        pair_roots = tuple(sorted(beta(m, n - 1 - 2 * k) for k in range(t))) if i == 1 else ()
        cd = ClassData(
            n=n,
            i=i,
            t=t,
            word=word,
            x_left=x_left,
            x_right=x_right,
            free=self.free_coords(i, t),
            pair_roots=pair_roots,
            c_gens=c_gens,
            a_gens=a_gens,
            w_gens=w_gens,
            c_sub=c_sub,
            n_left=n_left,
            star=self.rstar(n - 1) if i == 1 and t >= 1 else None,
        )
        self._data[key] = cd
        cd.n_right = self.data(j, t).n_left if j != i else n_left
        return cd

    def _n_subgroup(self, i, t, x_left, a_gens, w_gens):
        m = self.m
        if i in (1, 2, 3, 6):
            members = [
                g for g in self.w.elements() if weyl.act_on_root_set(g, x_left) == x_left
            ]
            return Subgroup(a_gens + w_gens, m, elements=members)
        # classes 4, 5: N = A.W, a proper subgroup of the stabiliser of x_left
        a_elts = weyl.generate_group(a_gens or [], m)
        w_elts = weyl.generate_group(w_gens or [], m)
        members = {mul(a, b) for a in a_elts for b in w_elts}
        if len(members) != len(a_elts) * len(w_elts):
            raise AssertionError("A and W do not intersect trivially")
        return Subgroup(a_gens + w_gens, m, elements=sorted(members, key=weyl.perm_key))

    # --- push-throughs ----------------------------------------------------

    def theta_left(self, i, t, g):
        """Theta_L: n * f = f * Theta_L(n) for n in N_{t,L}^(i)."""
        cd = self.data(i, t)
        m = self.m
        img = list(identity_perm(m))
        if i == 1:
            for c in cd.free:
                x = g[c - 1]
                if abs(x) not in cd.free:
                    raise AssertionError("element does not preserve the free block")
                img[c - 1] = x
            p = tuple(img)
            # each pair block of Z_t maps with 0 or 2 negative signs; the
            # negated blocks are exactly the ones acting like the mate
            # reflection, and their count mod 2 is the r*-exponent
            negatives = sum(
                1
                for root in cd.pair_roots
                for c in root_coords(root)
                if g[c - 1] < 0
            )
            if negatives % 2:
                raise AssertionError("pair block with a single sign flip in N")
            if (negatives // 2) % 2:
                p = mul(p, cd.star)
            return p
        for c in cd.free:
            x = abs(g[c - 1])
            if x not in cd.free:
                raise AssertionError("element does not preserve the free block")
            img[c - 1] = x
        return tuple(img)

    def theta_right(self, i, t, g):
        """Theta_R: f * n = Theta_R(n) * f for n in N_{t,R}^(i)."""
        j = OPPOSITE_CLASS[i]
        return inv(self.theta_left(j, t, inv(g)))
