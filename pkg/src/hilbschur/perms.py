"""Symmetric group arithmetic, Young subgroups and parabolic double cosets.

Permutations are tuples in one-line notation with 1-based values:
``w = (2, 3, 1)`` sends 1 to 2, 2 to 3 and 3 to 1.  All operations are
pure; enumeration results are cached and must never be mutated.

Double cosets of a pair of Young subgroups carry a canonical
representative: the unique element of minimal inversion number.  An
assertion guards the (provable) uniqueness; determinism everywhere else
follows from fixed lexicographic orderings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial

from .partitions import (SetPartition, act, ground_size, maximal_partition,
                         meet, minimal_partition)

Perm = tuple  # one-line notation, 1-based


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def check_perm(w: Perm) -> Perm:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("not a permutation in one-line notation: %r" % (w,))
    return w


def compose(u: Perm, v: Perm) -> Perm:
    """u after v: (u o v)(i) = u(v(i))."""
    if len(u) != len(v):
        raise ValueError("cannot compose permutations of different degree")
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def inversions(w: Perm) -> int:
    """Number of pairs i < j with w(i) > w(j); the Coxeter length."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def transposition(n: int, a: int, b: int) -> Perm:
    img = list(range(1, n + 1))
    img[a - 1], img[b - 1] = b, a
    return tuple(img)


def from_cycles(n: int, cycles) -> Perm:
    """Build a permutation from disjoint cycles, e.g. ((1, 2),) -> (2, 1, 3)."""
    img = list(range(1, n + 1))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return check_perm(tuple(img))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple:
    return tuple(sorted(permutations(range(1, n + 1))))


@lru_cache(maxsize=None)
def young_subgroup(lam: SetPartition) -> tuple:
    """All elements permuting each block of `lam` within itself, sorted."""
    n = ground_size(lam)
    result = []
    for assignment in _block_assignments(lam):
        img = list(range(1, n + 1))
        for src, dst in assignment:
            img[src - 1] = dst
        result.append(tuple(img))
    return tuple(sorted(result))


def _block_assignments(lam: SetPartition):
    """Iterate over tuples of (source, image) pairs, one bijection per block."""
    pools = []
    for block in lam:
        pools.append([tuple(zip(block, perm)) for perm in permutations(block)])
    def rec(i):
        if i == len(pools):
            yield ()
            return
        for choice in pools[i]:
            for rest in rec(i + 1):
                yield choice + rest
    return rec(0)


@lru_cache(maxsize=None)
def young_transpositions(lam: SetPartition) -> tuple:
    """Adjacent transpositions inside each block: generators of the Young
    subgroup."""
    n = ground_size(lam)
    gens = []
    for block in lam:
        for a, b in zip(block, block[1:]):
            gens.append(transposition(n, a, b))
    return tuple(gens)


def young_order(lam: SetPartition) -> int:
    out = 1
    for b in lam:
        out *= factorial(len(b))
    return out


@dataclass(frozen=True)
class DoubleCoset:
    """A double coset of a pair of Young subgroups, with its unique
    minimal-length representative."""
    left: SetPartition
    right: SetPartition
    rep: Perm
    size: int

    def __post_init__(self):
        stab = meet(self.left, act(self.rep, self.right))
        expected = young_order(self.left) * young_order(self.right) // young_order(stab)
        if expected != self.size:
            raise AssertionError("double coset size %d != index formula %d"
                                 % (self.size, expected))


def _orbit(start: Perm, left_gens, right_gens) -> frozenset:
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in left_gens:
                u = compose(g, w)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
            for h in right_gens:
                u = compose(w, h)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return frozenset(seen)


def has_interval_blocks(lam: SetPartition) -> bool:
    """True iff every block is a run of consecutive integers; exactly then
    the Young subgroup is generated by simple reflections."""
    return all(b[-1] - b[0] + 1 == len(b) for b in lam)


def _min_length_rep(coset, strict: bool) -> Perm:
    """The minimal-inversions element, lexicographically least among ties.

    For interval-block Young subgroups the minimizer is provably unique and
    `strict` enforces that; for other block shapes ties genuinely occur
    (e.g. both blocks {{1,3},{2}} at n=3) and the lexicographic tie-break
    keeps the choice deterministic.
    """
    best = min(coset, key=lambda w: (inversions(w), w))
    if strict:
        ties = [w for w in coset if inversions(w) == inversions(best)]
        if len(ties) != 1:
            raise AssertionError(
                "minimal-length representative not unique in double coset; "
                "candidates %r" % (sorted(ties),))
    return best


def _double_cosets_in(elements, nu: SetPartition, lam: SetPartition):
    strict = has_interval_blocks(nu) and has_interval_blocks(lam)
    left_gens = young_transpositions(nu)
    right_gens = young_transpositions(lam)
    remaining = set(elements)
    out = []
    while remaining:
        start = min(remaining)
        orbit = _orbit(start, left_gens, right_gens)
        if not orbit <= remaining:
            raise AssertionError("double coset escapes the ambient set")
        remaining -= orbit
        out.append((_min_length_rep(orbit, strict), len(orbit)))
    out.sort(key=lambda t: t[0])
    return out


@lru_cache(maxsize=None)
def double_cosets(nu: SetPartition, lam: SetPartition) -> tuple:
    """S_nu \\ S_n / S_lam as DoubleCoset records, sorted by representative."""
    n = ground_size(nu)
    if ground_size(lam) != n:
        raise ValueError("partitions of different ground sets")
    found = _double_cosets_in(all_perms(n), nu, lam)
    cosets = tuple(DoubleCoset(nu, lam, rep, size) for rep, size in found)
    if sum(c.size for c in cosets) != factorial(n):
        raise AssertionError("double coset sizes do not sum to n!")
    return cosets


@lru_cache(maxsize=None)
def double_coset_reps_in(ambient: SetPartition, nu: SetPartition,
                         lam: SetPartition) -> tuple:
    """Minimal-length representatives of S_nu \\ S_ambient / S_lam for Young
    subgroups S_nu, S_lam inside the Young subgroup S_ambient."""
    return tuple(rep for rep, _ in
                 _double_cosets_in(young_subgroup(ambient), nu, lam))


@lru_cache(maxsize=None)
def _rep_lookup(nu: SetPartition, lam: SetPartition) -> dict:
    left = young_subgroup(nu)
    right = young_subgroup(lam)
    table = {}
    for c in double_cosets(nu, lam):
        for g in left:
            gw = compose(g, c.rep)
            for h in right:
                table[compose(gw, h)] = c.rep
    return table


def double_coset_rep(nu: SetPartition, lam: SetPartition, x: Perm) -> Perm:
    """Canonical representative of the double coset S_nu x S_lam."""
    return _rep_lookup(nu, lam)[x]


@lru_cache(maxsize=None)
def left_coset_reps(mu: SetPartition) -> tuple:
    """Minimal-length representatives y of the cosets S_mu y, sorted."""
    n = ground_size(mu)
    return double_coset_reps_in(maximal_partition(n), mu, minimal_partition(n))


@lru_cache(maxsize=None)
def _left_coset_lookup(mu: SetPartition) -> dict:
    table = {}
    for rep in left_coset_reps(mu):
        for g in young_subgroup(mu):
            table[compose(g, rep)] = rep
    return table


def left_coset_rep(mu: SetPartition, x: Perm) -> Perm:
    """Canonical representative of the coset S_mu x."""
    return _left_coset_lookup(mu)[x]


@lru_cache(maxsize=None)
def factor_in_double_coset(nu: SetPartition, lam: SetPartition, v: Perm):
    """Write v = x * rep * y with x in S_nu, y in S_lam and rep canonical.

    Returns (rep, x).  The choice of y is immaterial to callers.
    """
    rep = double_coset_rep(nu, lam, v)
    rep_inv = inverse(rep)
    nu_set = frozenset(young_subgroup(nu))
    for y in young_subgroup(lam):
        x = compose(compose(v, inverse(y)), rep_inv)
        if x in nu_set:
            return rep, x
    raise AssertionError("element not in the double coset of its representative")


# -- serialization -----------------------------------------------------------

def format_perm(w: Perm) -> str:
    return ",".join(str(x) for x in w)


def parse_perm(s: str) -> Perm:
    return check_perm(tuple(int(x) for x in s.split(",")))
