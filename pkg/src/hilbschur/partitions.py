"""Set partitions of [n] = {1, ..., n} and integer partitions of n.

A set partition is stored canonically as a tuple of blocks, each block a
sorted tuple of integers, with blocks ordered by their minimum element.
Canonical storage makes equality, hashing and dict keys reliable, so every
function here both accepts and returns canonical values.

An integer partition is a weakly decreasing tuple of positive integers.
The refinement order on set partitions and the induced merge order on
integer partitions are the two orders used throughout the package.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

SetPartition = tuple  # tuple[tuple[int, ...], ...], canonical form
IntegerPartition = tuple  # tuple[int, ...], weakly decreasing


def setpart(blocks) -> SetPartition:
    """Canonicalize `blocks` into a set partition of {1, ..., n}.

    >>> setpart([[3], [2, 1]])
    ((1, 2), (3,))
    """
    canon = tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))
    seen = sorted(x for b in canon for x in b)
    if seen != list(range(1, len(seen) + 1)):
        raise ValueError("blocks do not partition {1..n}: %r" % (blocks,))
    return canon


def ground_size(lam: SetPartition) -> int:
    return sum(len(b) for b in lam)


def minimal_partition(n: int) -> SetPartition:
    return tuple((i,) for i in range(1, n + 1))


def maximal_partition(n: int) -> SetPartition:
    if n == 0:
        return ()
    return (tuple(range(1, n + 1)),)


def block_of(lam: SetPartition, x: int):
    for b in lam:
        if x in b:
            return b
    raise ValueError("%d not in ground set of %r" % (x, lam))


def meet(lam: SetPartition, mu: SetPartition) -> SetPartition:
    """Greatest lower bound in refinement order: nonempty pairwise
    intersections of blocks."""
    if ground_size(lam) != ground_size(mu):
        raise ValueError("ground sets differ")
    out = []
    for a in lam:
        sa = set(a)
        for b in mu:
            c = sa.intersection(b)
            if c:
                out.append(tuple(sorted(c)))
    return setpart(out)


def refines(lam: SetPartition, mu: SetPartition) -> bool:
    """True iff every block of `lam` is contained in a block of `mu`."""
    if ground_size(lam) != ground_size(mu):
        raise ValueError("ground sets differ")
    where = {}
    for i, b in enumerate(mu):
        for x in b:
            where[x] = i
    return all(len({where[x] for x in b}) == 1 for b in lam)


def comparable(lam: SetPartition, mu: SetPartition) -> bool:
    return refines(lam, mu) or refines(mu, lam)


def act(w, lam: SetPartition) -> SetPartition:
    """Image of `lam` under the permutation `w` (one-line tuple, 1-based)."""
    return setpart(tuple(w[x - 1] for x in b) for b in lam)


def hat(lam: SetPartition) -> IntegerPartition:
    """Block sizes, sorted decreasingly."""
    return tuple(sorted((len(b) for b in lam), reverse=True))


def canonical_section(shape: IntegerPartition) -> SetPartition:
    """The standard set partition with the given block sizes: consecutive
    intervals, largest parts first.

    >>> canonical_section((3, 2, 1))
    ((1, 2, 3), (4, 5), (6,))
    """
    if list(shape) != sorted(shape, reverse=True) or any(p <= 0 for p in shape):
        raise ValueError("not an integer partition: %r" % (shape,))
    blocks, start = [], 1
    for p in shape:
        blocks.append(tuple(range(start, start + p)))
        start += p
    return tuple(blocks)


@lru_cache(maxsize=None)
def integer_partitions(n: int) -> tuple:
    """All integer partitions of n, in reverse lexicographic order.

    >>> integer_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - p, p):
                yield (p,) + rest

    return tuple(gen(n, n))


def num_partitions(n: int) -> int:
    """p(n), the number of integer partitions of n."""
    return len(integer_partitions(n))


@lru_cache(maxsize=None)
def preceq(lam_hat: IntegerPartition, mu_hat: IntegerPartition) -> bool:
    """Merge order on integer partitions of the same n: true iff `mu_hat`
    can be obtained from `lam_hat` by merging (summing) groups of parts.

    >>> preceq((1, 1, 1), (3,))
    True
    >>> preceq((2, 2), (3, 1))
    False
    """
    if sum(lam_hat) != sum(mu_hat):
        raise ValueError("partitions of different integers")
    if not mu_hat:
        return not lam_hat

    target = mu_hat[0]
    parts = list(lam_hat)

    # choose a sub-multiset of parts summing to the first part of mu_hat
    def choose(i, need, taken):
        if need == 0:
            rest = list(parts)
            for t in taken:
                rest.remove(t)
            if preceq(tuple(sorted(rest, reverse=True)), mu_hat[1:]):
                return True
            return False
        if i >= len(parts) or need < 0:
            return False
        # skip duplicates at the branching level to cut the search
        if choose(i + 1, need - parts[i], taken + [parts[i]]):
            return True
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        return choose(j, need, taken)

    return choose(0, target, [])


@lru_cache(maxsize=None)
def set_partitions_of(elements: tuple) -> tuple:
    """All partitions of the given element tuple (blocks canonical),
    enumerated deterministically."""
    elements = tuple(sorted(elements))
    if not elements:
        return ((),)
    first, rest = elements[0], elements[1:]
    out = []
    for sub in set_partitions_of(rest):
        # insert `first` into each existing block, or as its own block
        for i in range(len(sub)):
            blocks = [tuple(sorted(sub[j] + ((first,) if j == i else ())))
                      for j in range(len(sub))]
            out.append(tuple(sorted(blocks, key=lambda b: b[0])))
        out.append(tuple(sorted(sub + ((first,),), key=lambda b: b[0])))
    return tuple(sorted(set(out)))


def all_set_partitions(n: int) -> tuple:
    return set_partitions_of(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def refinements(kappa: SetPartition) -> tuple:
    """All set partitions refining `kappa`, i.e. the interval
    [minimal, kappa], sorted canonically."""
    per_block = [set_partitions_of(b) for b in kappa]
    out = []
    for combo in product(*per_block):
        out.append(setpart(b for part in combo for b in part))
    return tuple(sorted(set(out)))


def split_block(block, shape: IntegerPartition):
    """Cut a sorted block into consecutive runs with lengths given by
    `shape` (largest first)."""
    if sum(shape) != len(block):
        raise ValueError("shape does not match block size")
    block = tuple(sorted(block))
    out, start = [], 0
    for p in shape:
        out.append(block[start:start + p])
        start += p
    return tuple(out)


def refinement_orbit_reps(kappa: SetPartition) -> tuple:
    """One representative per orbit of the Young subgroup of `kappa` acting
    on the interval [minimal, kappa].

    Orbits are labelled by a tuple of integer partitions, one per block of
    `kappa` (in canonical block order); the representative splits each
    block into consecutive runs of decreasing length.

    Returns a tuple of (label, representative) pairs.
    """
    per_block = [integer_partitions(len(b)) for b in kappa]
    out = []
    for combo in product(*per_block):
        rep = setpart(sub for b, shape in zip(kappa, combo)
                      for sub in split_block(b, shape))
        out.append((tuple(combo), rep))
    return tuple(out)


def orbit_label_of(kappa: SetPartition, mu: SetPartition) -> tuple:
    """The orbit label of a refinement `mu` of `kappa`: the integer
    partition that `mu` induces on each block of `kappa`."""
    if not refines(mu, kappa):
        raise ValueError("%r does not refine %r" % (mu, kappa))
    label = []
    for b in kappa:
        sizes = sorted((len(set(b).intersection(c)) for c in mu
                        if set(b).intersection(c)), reverse=True)
        label.append(tuple(sizes))
    return tuple(label)


# -- serialization -----------------------------------------------------------

def format_set_partition(lam: SetPartition) -> str:
    """Pipe-separated blocks, e.g. "1 2 4|3|5 6"."""
    return "|".join(" ".join(str(x) for x in b) for b in lam)


def parse_set_partition(s: str) -> SetPartition:
    if s.strip() == "":
        return ()
    return setpart([int(x) for x in chunk.split()] for chunk in s.split("|"))


def format_int_partition(shape: IntegerPartition) -> str:
    return ",".join(str(p) for p in shape)


def parse_int_partition(s: str) -> IntegerPartition:
    if s.strip() == "":
        return ()
    parts = tuple(int(x) for x in s.split(","))
    if list(parts) != sorted(parts, reverse=True) or any(p <= 0 for p in parts):
        raise ValueError("not a weakly decreasing positive sequence: %r" % s)
    return parts


def parse_partition_arg(s: str, n: int | None = None) -> SetPartition:
    """CLI-facing parser: "1 2|3" is a set partition, "2,1" (or "3") is an
    integer partition resolved through the canonical section."""
    if "|" in s or " " in s.strip():
        lam = parse_set_partition(s)
    else:
        lam = canonical_section(parse_int_partition(s))
    if n is not None and ground_size(lam) != n:
        raise ValueError("partition %r does not have ground set of size %d" % (s, n))
    return lam
