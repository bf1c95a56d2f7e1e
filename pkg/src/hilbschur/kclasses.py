"""Elements of the graded convolution ring: K-classes on double-coset stacks.

A K-class with source lam and target nu assigns to each canonical
double-coset representative w (for the pair of Young subgroups of nu and
lam) a virtual character of the stabilizer Young subgroup of
meet(nu, w.lam); zero stalks are omitted.  The three generator families,
the integer linear structure, the transpose anti-involution and the
conversion to the integral basis indexed by (representative, refinement
orbit label) all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import characters as ch
from .characters import VirtualCharacter, dim, trivial_character, twist
from .partitions import (SetPartition, act, comparable, format_set_partition,
                         ground_size, meet, parse_set_partition,
                         refinement_orbit_reps)
from .perms import (Perm, double_coset_rep, double_cosets,
                    factor_in_double_coset, format_perm, inverse, parse_perm)


@dataclass(frozen=True)
class KClass:
    """An element of the (target, source) summand of the graded ring."""
    target: SetPartition
    source: SetPartition
    stalks: tuple  # tuple[(Perm, VirtualCharacter), ...] sorted by rep

    def stalk_map(self) -> dict:
        return dict(self.stalks)

    def is_zero(self) -> bool:
        return not self.stalks

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __rmul__(self, c: int):
        return scale(c, self)


def kclass(target: SetPartition, source: SetPartition, stalks: dict) -> KClass:
    """Build a K-class, validating canonical representatives and stalk hosts."""
    n = ground_size(target)
    if ground_size(source) != n:
        raise ValueError("grading mismatch: different ground sets")
    canonical = {c.rep for c in double_cosets(target, source)}
    items = []
    for w, chi in sorted(stalks.items()):
        if not chi:
            continue
        if w not in canonical:
            raise ValueError("stalk key %r is not a canonical representative"
                             % (w,))
        host = meet(target, act(w, source))
        if chi.host != host:
            raise ValueError("stalk host %r differs from stabilizer %r"
                             % (chi.host, host))
        items.append((w, chi))
    return KClass(target, source, tuple(items))


def zero(target: SetPartition, source: SetPartition) -> KClass:
    return kclass(target, source, {})


def add(a: KClass, b: KClass) -> KClass:
    if (a.target, a.source) != (b.target, b.source):
        raise ValueError("grading mismatch in addition")
    out = a.stalk_map()
    for w, chi in b.stalks:
        out[w] = out[w] + chi if w in out else chi
    return kclass(a.target, a.source, out)


def scale(c: int, a: KClass) -> KClass:
    return kclass(a.target, a.source, {w: c * chi for w, chi in a.stalks})


def gen_one(nu: SetPartition, mu: SetPartition) -> KClass:
    """The comparability generator: supported on the identity double coset
    with stalk the trivial character of the smaller Young subgroup."""
    if not comparable(nu, mu):
        raise ValueError("partitions %r, %r are not comparable"
                         % (nu, mu))
    return kclass(nu, mu, {identity_rep(nu, mu): trivial_character(meet(nu, mu))})


def identity_rep(nu: SetPartition, mu: SetPartition) -> Perm:
    n = ground_size(nu)
    return double_coset_rep(nu, mu, tuple(range(1, n + 1)))


def gen_perm(w: Perm, lam: SetPartition) -> KClass:
    """The invertible generator moving lam to w.lam: supported on the
    double coset of w with trivial stalk."""
    wlam = act(w, lam)
    rep = double_coset_rep(wlam, lam, w)
    return kclass(wlam, lam, {rep: trivial_character(wlam)})


def gen_rep(chi: VirtualCharacter) -> KClass:
    """A virtual character of S_lam placed at the identity double coset."""
    lam = chi.host
    return kclass(lam, lam, {identity_rep(lam, lam): chi})


def idempotent(lam: SetPartition) -> KClass:
    return gen_one(lam, lam)


def transpose(a: KClass) -> KClass:
    """The anti-involution: stalk at w moves to w^{-1}, transported along
    conjugation into the stabilizer on the other side.

    Inversion preserves inversion number, so w^{-1} is again the canonical
    representative of its coset; the constructor would reject it if the
    lexicographic tie-break ever broke this symmetry.
    """
    out = {}
    for w, chi in a.stalks:
        w_inv = inverse(w)
        out[w_inv] = twist(w_inv, chi)
    return kclass(a.source, a.target, out)


class BasisIndex(NamedTuple):
    """Index of an integral basis element: a canonical double-coset
    representative together with a refinement orbit label of its
    stabilizer."""
    target: SetPartition
    source: SetPartition
    rep: Perm
    label: tuple  # tuple[IntegerPartition, ...] per stabilizer block


def basis_indices(nu: SetPartition, lam: SetPartition) -> tuple:
    """All basis indices of the (nu, lam) summand, deterministically ordered."""
    out = []
    for c in double_cosets(nu, lam):
        kappa = meet(nu, act(c.rep, lam))
        for label, _rep_partition in refinement_orbit_reps(kappa):
            out.append(BasisIndex(nu, lam, c.rep, label))
    return tuple(out)


def to_basis_coords(a: KClass) -> dict:
    """Integer coordinates of a K-class in the basis indexed by
    (representative, orbit label); exact by unimodularity."""
    out = {}
    for w, chi in a.stalks:
        for label, coeff in sorted(ch.to_perm_coords(chi).items()):
            out[BasisIndex(a.target, a.source, w, label)] = coeff
    return out


def from_basis_coords(target: SetPartition, source: SetPartition,
                      coords: dict) -> KClass:
    stalks = {}
    for idx, coeff in coords.items():
        if (idx.target, idx.source) != (target, source):
            raise ValueError("basis index grading mismatch")
        kappa = meet(target, act(idx.rep, source))
        chi = coeff * ch.induced_trivial(kappa, idx.label)
        stalks[idx.rep] = stalks[idx.rep] + chi if idx.rep in stalks else chi
    return kclass(target, source, stalks)


def basis_element(idx: BasisIndex) -> KClass:
    return from_basis_coords(idx.target, idx.source, {idx: 1})


def stalk_dimensions(a: KClass) -> dict:
    """Virtual dimension of each stalk, keyed by representative."""
    return {w: dim(chi) for w, chi in a.stalks}


def canonicalize_support(target: SetPartition, source: SetPartition,
                         v: Perm, chi: VirtualCharacter):
    """Rewrite a stalk sitting at an arbitrary support element v onto the
    canonical representative of its double coset.

    If v = x * rep * y with x in the target Young subgroup and y in the
    source one, the stalk character transports along conjugation by
    x^{-1}; the result is independent of the factorization because
    characters are class functions.
    """
    rep, x = factor_in_double_coset(target, source, v)
    if rep == v:
        return rep, chi
    return rep, twist(inverse(x), chi)


# -- serialization -----------------------------------------------------------

def kclass_to_json(a: KClass) -> dict:
    return {
        "target": format_set_partition(a.target),
        "source": format_set_partition(a.source),
        "stalks": [
            {
                "rep": format_perm(w),
                "character": [
                    {"label": [",".join(str(p) for p in part) for part in iota],
                     "coeff": coeff}
                    for iota, coeff in chi.items
                ],
            }
            for w, chi in a.stalks
        ],
    }


def kclass_from_json(doc: dict) -> KClass:
    target = parse_set_partition(doc["target"])
    source = parse_set_partition(doc["source"])
    stalks = {}
    for entry in doc["stalks"]:
        w = parse_perm(entry["rep"])
        host = meet(target, act(w, source))
        coeffs = {}
        for item in entry["character"]:
            iota = tuple(tuple(int(x) for x in part.split(","))
                         for part in item["label"])
            coeffs[iota] = coeffs.get(iota, 0) + int(item["coeff"])
        stalks[w] = ch.virtual_character(host, coeffs)
    return kclass(target, source, stalks)
