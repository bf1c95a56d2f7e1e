"""The classical double-coset convolution algebra and the quotient onto it.

Integer-valued functions on double cosets of Young subgroups, multiplied
by summing over cosets of the middle subgroup, form the algebra Morita
equivalent to the Schur algebra.  Sending a K-class to the virtual
dimensions of its stalks is a surjective algebra homomorphism onto it;
multiplicativity is exactly the free-action dimension law of the sheaf
convolution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import dim
from .kclasses import KClass
from .partitions import SetPartition, format_set_partition
from .perms import (Perm, compose, double_coset_rep, double_cosets,
                    format_perm, inverse, left_coset_reps)


@dataclass(frozen=True)
class DoubleCosetFunction:
    """An integer-valued function on the double cosets of a pair of Young
    subgroups; values keyed by canonical representatives, zeros dropped."""
    target: SetPartition
    source: SetPartition
    values: tuple  # tuple[(Perm, int), ...] sorted

    def value_map(self) -> dict:
        return dict(self.values)

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other):
        if (self.target, self.source) != (other.target, other.source):
            raise ValueError("grading mismatch")
        out = self.value_map()
        for w, v in other.values:
            out[w] = out.get(w, 0) + v
        return coset_function(self.target, self.source, out)

    def __rmul__(self, c: int):
        return coset_function(self.target, self.source,
                              {w: c * v for w, v in self.values})


def coset_function(target: SetPartition, source: SetPartition,
                   values: dict) -> DoubleCosetFunction:
    canonical = {c.rep for c in double_cosets(target, source)}
    for w in values:
        if w not in canonical:
            raise ValueError("%r is not a canonical representative" % (w,))
    items = tuple(sorted((w, v) for w, v in values.items() if v != 0))
    return DoubleCosetFunction(target, source, items)


def zero_function(target: SetPartition, source: SetPartition) -> DoubleCosetFunction:
    return coset_function(target, source, {})


def delta(target: SetPartition, source: SetPartition, w: Perm) -> DoubleCosetFunction:
    rep = double_coset_rep(target, source, w)
    return coset_function(target, source, {rep: 1})


def value_at(f: DoubleCosetFunction, x: Perm) -> int:
    rep = double_coset_rep(f.target, f.source, x)
    return f.value_map().get(rep, 0)


def convolve_functions(psi: DoubleCosetFunction,
                       phi: DoubleCosetFunction) -> DoubleCosetFunction:
    """(psi o phi)(x) = sum over cosets (middle subgroup) y of
    psi(x y^{-1}) phi(y), one y per coset."""
    if psi.source != phi.target:
        raise ValueError("inner gradings do not match")
    mu = psi.source
    reps = left_coset_reps(mu)
    out = {}
    for c in double_cosets(psi.target, phi.source):
        total = 0
        for y in reps:
            total += value_at(psi, compose(c.rep, inverse(y))) * value_at(phi, y)
        if total:
            out[c.rep] = total
    return coset_function(psi.target, phi.source, out)


def quotient_map(a: KClass) -> DoubleCosetFunction:
    """Virtual dimension of each stalk: the algebra homomorphism onto the
    double-coset function algebra."""
    return coset_function(a.target, a.source,
                          {w: dim(chi) for w, chi in a.stalks})


def rank_of_function_algebra(target: SetPartition, source: SetPartition) -> int:
    return len(double_cosets(target, source))


def verify_quotient_hom(n: int, reduced: bool = True):
    """Multiplicativity of the quotient on all composable basis pairs."""
    from .algebra import Report, basis, grading_partitions, multiply
    from .kclasses import basis_element
    rep = Report()
    parts = grading_partitions(n, reduced)
    elems = {}
    for nu in parts:
        for lam in parts:
            elems[(nu, lam)] = [basis_element(i) for i in basis(nu, lam)]
    for nu in parts:
        for mu in parts:
            for lam in parts:
                for a in elems[(nu, mu)]:
                    qa = quotient_map(a)
                    for b in elems[(mu, lam)]:
                        lhs = quotient_map(multiply(a, b))
                        rhs = convolve_functions(qa, quotient_map(b))
                        rep.record(lhs == rhs,
                                   "quotient not multiplicative at %r * %r"
                                   % (a, b))
    return rep


# -- serialization -----------------------------------------------------------

def function_to_json(f: DoubleCosetFunction) -> dict:
    return {
        "target": format_set_partition(f.target),
        "source": format_set_partition(f.source),
        "values": [[format_perm(w), v] for w, v in f.values],
    }
