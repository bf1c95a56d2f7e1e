"""Exact character theory of Young subgroups S_kappa = prod S_block.

Conjugacy classes of a Young subgroup are labelled by one cycle type per
block, irreducible characters by one integer partition per block; both
labels follow the canonical block order (blocks sorted by minimum).  All
values are integers; rationals appear only transiently inside inner
products.  Character tables of the symmetric groups are built with the
Murnaghan-Nakayama rule and memoized.

The "permutation basis" of the virtual character group of S_kappa is the
family of characters induced from trivial characters of Young subgroups
refining kappa, indexed by refinement orbit labels; the change of basis to
irreducible coordinates is unimodular and both directions are exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .partitions import (IntegerPartition, SetPartition, act, ground_size,
                         integer_partitions, refines, split_block)
from .perms import Perm, from_cycles

ClassLabel = tuple  # tuple[IntegerPartition, ...], one cycle type per block
IrrLabel = tuple    # tuple[IntegerPartition, ...], one partition per block


# -- symmetric group character table ----------------------------------------

@lru_cache(maxsize=None)
def _mn(lam: IntegerPartition, rho: IntegerPartition) -> int:
    """Murnaghan-Nakayama: the value of the irreducible character chi_lam
    of S_m on the class of cycle type rho, via beta-sets."""
    if not lam:
        return 1 if not rho else 0
    if not rho:
        return 0
    r = rho[0]
    rest = rho[1:]
    k = len(lam)
    beta = [lam[j] + (k - 1 - j) for j in range(k)]  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beta_set:
            continue
        new_beta = sorted((beta_set - {b}) | {b - r}, reverse=True)
        height = sum(1 for c in beta if b - r < c < b)
        new_lam = tuple(x - (k - 1 - j) for j, x in enumerate(new_beta))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def sym_char_value(lam: IntegerPartition, rho: IntegerPartition) -> int:
    """chi_lam of S_m evaluated on the class of cycle type rho."""
    if sum(lam) != sum(rho):
        raise ValueError("partition and cycle type of different sizes")
    return _mn(lam, rho)


@lru_cache(maxsize=None)
def character_table(m: int):
    """Full character table of S_m as a dict (lam, rho) -> integer."""
    parts = integer_partitions(m)
    return {(lam, rho): _mn(lam, rho) for lam in parts for rho in parts}


def centralizer_order(rho: IntegerPartition) -> int:
    """z(rho) = prod_i i^{m_i} m_i! for cycle type rho."""
    out = 1
    mult = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for i, mi in mult.items():
        out *= i ** mi * factorial(mi)
    return out


# -- class and irreducible labels for a Young subgroup -----------------------

@lru_cache(maxsize=None)
def class_labels(host: SetPartition) -> tuple:
    return tuple(product(*(integer_partitions(len(b)) for b in host)))


# labels coincide as index sets, but keep both names for readability
irr_labels = class_labels


def class_size(host: SetPartition, c: ClassLabel) -> int:
    out = 1
    for b, rho in zip(host, c):
        out *= factorial(len(b)) // centralizer_order(rho)
    return out


def group_order(host: SetPartition) -> int:
    out = 1
    for b in host:
        out *= factorial(len(b))
    return out


def identity_class(host: SetPartition) -> ClassLabel:
    return tuple((1,) * len(b) for b in host)


def class_rep(host: SetPartition, c: ClassLabel) -> Perm:
    """A permutation realizing the class: cycles on consecutive runs of
    each sorted block."""
    n = ground_size(host)
    cycles = []
    for b, rho in zip(host, c):
        cycles.extend(split_block(b, rho))
    return from_cycles(n, cycles)


def cycle_type_on_block(w: Perm, block) -> IntegerPartition:
    remaining = set(block)
    lengths = []
    while remaining:
        x = min(remaining)
        length = 0
        y = x
        while True:
            remaining.discard(y)
            length += 1
            y = w[y - 1]
            if y == x:
                break
            if y not in block:
                raise ValueError("permutation does not preserve the block")
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def class_of(host: SetPartition, w: Perm) -> ClassLabel:
    return tuple(cycle_type_on_block(w, b) for b in host)


def irr_value(host: SetPartition, iota: IrrLabel, c: ClassLabel) -> int:
    out = 1
    for lam, rho in zip(iota, c):
        out *= _mn(lam, rho)
    return out


# -- virtual characters ------------------------------------------------------

@dataclass(frozen=True)
class VirtualCharacter:
    """An integer combination of irreducible characters of a Young
    subgroup; `items` is sorted with zero coefficients dropped."""
    host: SetPartition
    items: tuple  # tuple[(IrrLabel, int), ...]

    def coeffs(self) -> dict:
        return dict(self.items)

    def __add__(self, other):
        if self.host != other.host:
            raise ValueError("host mismatch")
        out = self.coeffs()
        for k, v in other.items:
            out[k] = out.get(k, 0) + v
        return virtual_character(self.host, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return virtual_character(self.host,
                                 {k: scalar * v for k, v in self.items})

    def __bool__(self):
        return bool(self.items)


def virtual_character(host: SetPartition, coeffs: dict) -> VirtualCharacter:
    items = tuple(sorted((k, v) for k, v in coeffs.items() if v != 0))
    for label, _ in items:
        if len(label) != len(host) or any(sum(p) != len(b)
                                          for p, b in zip(label, host)):
            raise ValueError("label %r does not fit host %r" % (label, host))
    return VirtualCharacter(host, items)


def irreducible(host: SetPartition, iota: IrrLabel) -> VirtualCharacter:
    return virtual_character(host, {iota: 1})


def trivial_character(host: SetPartition) -> VirtualCharacter:
    return irreducible(host, tuple((len(b),) for b in host))


def sign_character(host: SetPartition) -> VirtualCharacter:
    return irreducible(host, tuple((1,) * len(b) for b in host))


def regular_character(host: SetPartition) -> VirtualCharacter:
    coeffs = {iota: irr_value(host, iota, identity_class(host))
              for iota in irr_labels(host)}
    return virtual_character(host, coeffs)


def evaluate(chi: VirtualCharacter, c: ClassLabel) -> int:
    return sum(coeff * irr_value(chi.host, iota, c) for iota, coeff in chi.items)


def char_values(chi: VirtualCharacter) -> dict:
    return {c: evaluate(chi, c) for c in class_labels(chi.host)}


def dim(chi: VirtualCharacter) -> int:
    return evaluate(chi, identity_class(chi.host))


def inner_product(host: SetPartition, f: dict, g: dict) -> Fraction:
    """<f, g> = (1/|S_host|) sum over classes of size * f * g, exact."""
    total = sum(class_size(host, c) * Fraction(f[c]) * Fraction(g[c])
                for c in class_labels(host))
    return Fraction(total, group_order(host))


def decompose(host: SetPartition, values: dict) -> VirtualCharacter:
    """Express a class function in irreducible coordinates; raises if any
    multiplicity is non-integral (i.e. not a virtual character)."""
    coeffs = {}
    for iota in irr_labels(host):
        ivals = {c: irr_value(host, iota, c) for c in class_labels(host)}
        m = inner_product(host, values, ivals)
        if m.denominator != 1:
            raise ValueError("not a virtual character: multiplicity %s at %r"
                             % (m, iota))
        if m != 0:
            coeffs[iota] = int(m)
    return virtual_character(host, coeffs)


# -- induction, restriction, tensor, twist -----------------------------------

@lru_cache(maxsize=None)
def fuse_class(lam: SetPartition, mu: SetPartition, c: ClassLabel) -> ClassLabel:
    """Class fusion along S_lam <= S_mu: concatenate the cycle types of the
    lam-blocks inside each mu-block."""
    out = []
    for b in mu:
        merged = []
        for a, rho in zip(lam, c):
            if a[0] in b:
                merged.extend(rho)
        out.append(tuple(sorted(merged, reverse=True)))
    return tuple(out)


@lru_cache(maxsize=None)
def _restrict_label(mu: SetPartition, lam: SetPartition, iota: IrrLabel):
    values = {c: irr_value(mu, iota, fuse_class(lam, mu, c))
              for c in class_labels(lam)}
    return decompose(lam, values).items


def restrict(chi: VirtualCharacter, lam: SetPartition) -> VirtualCharacter:
    """Restriction to a refining Young subgroup, via class fusion."""
    if not refines(lam, chi.host):
        raise ValueError("%r does not refine %r" % (lam, chi.host))
    if lam == chi.host:
        return chi
    out = {}
    for iota, coeff in chi.items:
        for jota, m in _restrict_label(chi.host, lam, iota):
            out[jota] = out.get(jota, 0) + coeff * m
    return virtual_character(lam, out)


@lru_cache(maxsize=None)
def _induce_label(lam: SetPartition, mu: SetPartition, iota: IrrLabel):
    # Frobenius reciprocity against the character table of S_mu
    ivals = {c: irr_value(lam, iota, c) for c in class_labels(lam)}
    coeffs = {}
    for jota in irr_labels(mu):
        rvals = {c: irr_value(mu, jota, fuse_class(lam, mu, c))
                 for c in class_labels(lam)}
        m = inner_product(lam, ivals, rvals)
        if m.denominator != 1:
            raise AssertionError("induction produced a non-integer multiplicity")
        if m != 0:
            coeffs[jota] = int(m)
    return tuple(sorted(coeffs.items()))


def induce(chi: VirtualCharacter, mu: SetPartition) -> VirtualCharacter:
    """Induction to a coarser Young subgroup, blockwise by reciprocity."""
    if not refines(chi.host, mu):
        raise ValueError("%r does not refine %r" % (chi.host, mu))
    if mu == chi.host:
        return chi
    out = {}
    for iota, coeff in chi.items:
        for jota, m in _induce_label(chi.host, mu, iota):
            out[jota] = out.get(jota, 0) + coeff * m
    return virtual_character(mu, out)


def induced_values(lam: SetPartition, values: dict, mu: SetPartition) -> dict:
    """Values of the induced class function, computed by the classical
    class-size formula rather than by reciprocity (independent cross-check
    of `induce`)."""
    index = group_order(mu) // group_order(lam)
    out = {}
    for cmu in class_labels(mu):
        total = Fraction(0)
        for clam in class_labels(lam):
            if fuse_class(lam, mu, clam) == cmu:
                total += class_size(lam, clam) * Fraction(values[clam])
        v = index * total / class_size(mu, cmu)
        if v.denominator != 1:
            raise AssertionError("induced values are not integral")
        out[cmu] = int(v)
    return out


@lru_cache(maxsize=None)
def _tensor_labels(host: SetPartition, i1: IrrLabel, i2: IrrLabel):
    values = {c: irr_value(host, i1, c) * irr_value(host, i2, c)
              for c in class_labels(host)}
    return decompose(host, values).items


def tensor(chi: VirtualCharacter, psi: VirtualCharacter) -> VirtualCharacter:
    """Pointwise product of class functions."""
    if chi.host != psi.host:
        raise ValueError("host mismatch")
    out = {}
    for i1, c1 in chi.items:
        for i2, c2 in psi.items:
            for jota, m in _tensor_labels(chi.host, i1, i2):
                out[jota] = out.get(jota, 0) + c1 * c2 * m
    return virtual_character(chi.host, out)


def block_relabeling(w: Perm, host: SetPartition):
    """The permutation of block positions induced by w: host -> w(host)."""
    new_host = act(w, host)
    mapping = []
    for b in host:
        image_min = min(w[x - 1] for x in b)
        mapping.append(next(j for j, c in enumerate(new_host)
                            if c[0] == image_min))
    return new_host, tuple(mapping)


def twist(w: Perm, chi: VirtualCharacter) -> VirtualCharacter:
    """Transport a character along conjugation by w onto the host w(host):
    a pure relabeling of block positions, since characters are class
    functions on each symmetric group factor."""
    new_host, pos = block_relabeling(w, chi.host)
    out = {}
    for iota, coeff in chi.items:
        new_label = [None] * len(iota)
        for i, p in enumerate(iota):
            new_label[pos[i]] = p
        out[tuple(new_label)] = coeff
    return virtual_character(new_host, out)


# -- permutation (induced-trivial) basis -------------------------------------

@lru_cache(maxsize=None)
def _transition(m: int):
    """Matrix A with A[i][j] = multiplicity of chi_{parts[i]} in the
    character induced from the trivial character of the Young subgroup of
    shape parts[j]; together with its exact integer inverse."""
    from .partitions import canonical_section
    parts = integer_partitions(m)
    host = canonical_section((m,)) if m else ()
    a = []
    for sigma in parts:
        row = []
        for rho in parts:
            sub = canonical_section(rho)
            vals_one = {c: 1 for c in class_labels(sub)}
            svals = {c: irr_value(host, (sigma,), fuse_class(sub, host, c))
                     for c in class_labels(sub)}
            mult = inner_product(sub, vals_one, svals)
            assert mult.denominator == 1
            row.append(int(mult))
        a.append(row)
    inv = _invert_integer_matrix(a)
    return parts, a, inv


def _invert_integer_matrix(a):
    """Exact inverse of an integer matrix; raises unless the inverse is
    again integral (unimodularity check)."""
    k = len(a)
    aug = [[Fraction(a[i][j]) for j in range(k)] +
           [Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [[aug[i][k + j] for j in range(k)] for i in range(k)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise AssertionError("transition matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def transition_determinant(m: int) -> int:
    """Determinant of the induced-trivial transition matrix (must be +-1)."""
    parts, a, _ = _transition(m)
    k = len(parts)
    mat = [[Fraction(a[i][j]) for j in range(k)] for i in range(k)]
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if mat[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        pv = mat[col][col]
        for r in range(col + 1, k):
            if mat[r][col] != 0:
                f = mat[r][col] / pv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    assert det.denominator == 1
    return int(det)


def _apply_factorwise(host: SetPartition, coords: dict, use_inverse: bool) -> dict:
    """Apply the per-block transition matrix (or its inverse) to a dict of
    coordinates keyed by label tuples."""
    cur = dict(coords)
    for i, b in enumerate(host):
        parts, a, inv = _transition(len(b))
        mat = inv if use_inverse else a
        index = {p: j for j, p in enumerate(parts)}
        nxt = {}
        for key, coeff in cur.items():
            j = index[key[i]]
            for r, p in enumerate(parts):
                m = mat[r][j]
                if m == 0 or coeff == 0:
                    continue
                nk = key[:i] + (p,) + key[i + 1:]
                nxt[nk] = nxt.get(nk, 0) + coeff * m
        cur = {k: v for k, v in nxt.items() if v != 0}
    return cur


def to_perm_coords(chi: VirtualCharacter) -> dict:
    """Coordinates of chi in the induced-trivial basis, keyed by refinement
    orbit labels of the host."""
    return _apply_factorwise(chi.host, chi.coeffs(), use_inverse=True)


def from_perm_coords(host: SetPartition, coords: dict) -> VirtualCharacter:
    """Inverse of `to_perm_coords`."""
    return virtual_character(host, _apply_factorwise(host, coords,
                                                     use_inverse=False))


def induced_trivial(host: SetPartition, label) -> VirtualCharacter:
    """The induced-trivial basis element with the given orbit label."""
    return from_perm_coords(host, {tuple(label): 1})
