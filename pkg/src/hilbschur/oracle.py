"""Independent brute-force multiplication via explicit equivariant sheaves.

A concrete sheaf assigns to every group element a finite-dimensional
rational vector space with commuting left/right actions of the two Young
subgroups, moving stalks along multiplication.  The three generator
families are realized literally (rank-one constant sheaves; matrix models
of honest characters cut out of permutation modules by exact central
idempotent projection), composition is the literal invariants formula

    (A o B)_x = [ sum over yz = x of A_y tensor B_z ] ^ (S_mu)

with the inner group acting by w * (a (x) b) = (a . w^{-1}) (x) (w . b),
and a K-class is read off a sheaf by taking stabilizer traces at each
canonical double-coset representative and decomposing exactly.

Because the inner action permutes the (y, z) blocks freely, the averaging
projector restricts to an isomorphism from the block of any orbit
representative onto the invariants supported on its orbit.  Stalks of a
convolution are therefore stored in those compressed coordinates; induced
action matrices and stabilizer traces are computed lazily through the
recursion, which keeps coarse gradings tractable without ever changing
the underlying formula.  Everything is exact: Fractions only, no floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import characters as ch
from .characters import VirtualCharacter, evaluate
from .kclasses import KClass, kclass, zero
from .partitions import SetPartition, act, canonical_section, meet
from .perms import (Perm, all_perms, compose, double_cosets, inverse,
                    left_coset_rep, young_order, young_subgroup)

# -- small exact-linear-algebra kit -------------------------------------------

def mat_identity(d):
    return [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            f = ai[k]
            if f:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += f * bk[j]
    return out


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def kron(a, b):
    ra, rb = len(a), len(b)
    ca = len(a[0]) if ra else 0
    cb = len(b[0]) if rb else 0
    out = [[Fraction(0)] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            f = a[i][j]
            if f:
                for k in range(rb):
                    for l in range(cb):
                        if b[k][l]:
                            out[i * rb + k][j * cb + l] = f * b[k][l]
    return out


def column_space_basis(p):
    """Reduced basis of the column space of `p`: returns (basis, pivots)
    where `basis` is a matrix whose columns span the space and whose rows
    at the pivot indices form the identity."""
    rows = [list(col) for col in zip(*p)] if p else []
    ncols = len(p)
    reduced = []
    pivots = []
    for row in rows:
        row = list(row)
        for prow, ppos in zip(reduced, pivots):
            f = row[ppos]
            if f:
                row = [x - f * y for x, y in zip(row, prow)]
        pos = next((j for j, x in enumerate(row) if x), None)
        if pos is None:
            continue
        pv = row[pos]
        row = [x / pv for x in row]
        for k, (prow, ppos) in enumerate(zip(reduced, pivots)):
            f = prow[pos]
            if f:
                reduced[k] = [x - f * y for x, y in zip(prow, row)]
        reduced.append(row)
        pivots.append(pos)
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    reduced = [reduced[k] for k in order]
    pivots = [pivots[k] for k in order]
    basis = [[reduced[k][i] for k in range(len(reduced))] for i in range(ncols)]
    return basis, pivots


def mat_rank(p):
    return len(column_space_basis(p)[1])


# -- matrix models of honest characters ---------------------------------------

@lru_cache(maxsize=None)
def _coset_space(m: int, shape):
    """Cosets x * S_shape of the symmetric group S_m: minimal
    representatives and a membership lookup."""
    sub = young_subgroup(canonical_section(shape))
    lookup = {}
    reps = []
    for x in all_perms(m):
        if x in lookup:
            continue
        coset = sorted(compose(x, h) for h in sub)
        rep = coset[0]
        reps.append(rep)
        for y in coset:
            lookup[y] = rep
    reps.sort()
    index = {r: i for i, r in enumerate(reps)}
    return tuple(reps), index, lookup


class IrrModel:
    """A concrete model of one irreducible character of S_m, cut out of
    the permutation module on cosets of a Young subgroup by the central
    character idempotent; all matrices exact."""

    def __init__(self, m: int, lam):
        self.m = m
        self.lam = lam
        self.dim = ch.sym_char_value(lam, (1,) * m) if m else 1
        self._mats = {}
        self._basis = None
        self._pivots = None

    def _perm_matrix(self, g, reps, index, lookup):
        n = len(reps)
        mat = [[Fraction(0)] * n for _ in range(n)]
        for j, r in enumerate(reps):
            mat[index[lookup[compose(g, r)]]][j] = Fraction(1)
        return mat

    def _build(self):
        reps, index, lookup = _coset_space(self.m, self.lam)
        n = len(reps)
        order = 1
        for k in range(2, self.m + 1):
            order *= k
        proj = [[Fraction(0)] * n for _ in range(n)]
        for g in all_perms(self.m):
            val = ch.sym_char_value(self.lam, ch.cycle_type_on_block(
                g, tuple(range(1, self.m + 1)))) if self.m else 1
            if val == 0:
                continue
            for j, r in enumerate(reps):
                proj[index[lookup[compose(g, r)]]][j] += Fraction(val)
        scale = Fraction(self.dim, order)
        proj = [[scale * x for x in row] for row in proj]
        basis, pivots = column_space_basis(proj)
        if len(pivots) != self.dim:
            raise AssertionError("isotypic projection has wrong rank")
        self._basis = basis
        self._pivots = pivots

    def mat(self, g: Perm):
        if g in self._mats:
            return self._mats[g]
        if self._basis is None:
            self._build()
        reps, index, lookup = _coset_space(self.m, self.lam)
        moved = self._perm_matrix(g, reps, index, lookup)
        full = mat_mul(moved, self._basis)
        out = [full[i] for i in self._pivots]
        self._mats[g] = out
        return out


@lru_cache(maxsize=None)
def irr_model(m: int, lam) -> IrrModel:
    return IrrModel(m, lam)


class YoungModel:
    """Matrix model of an honest (non-virtual) character of a Young
    subgroup: a direct sum over irreducible labels of Kronecker products
    of per-block models."""

    def __init__(self, chi: VirtualCharacter):
        if any(c < 0 for _, c in chi.items):
            raise ValueError("cannot realize a virtual character with "
                             "negative multiplicities: %r" % (chi,))
        self.chi = chi
        self.host = chi.host
        self.dim = ch.dim(chi)
        self._relabel = []
        for block in self.host:
            self._relabel.append({x: i + 1 for i, x in enumerate(block)})
        self._mats = {}

    def mat(self, g: Perm):
        if g in self._mats:
            return self._mats[g]
        blocks = []
        for iota, count in self.chi.items:
            piece = None
            for bi, block in enumerate(self.host):
                fwd = self._relabel[bi]
                sub = tuple(fwd[g[x - 1]] for x in block)
                bm = irr_model(len(block), iota[bi]).mat(sub)
                piece = bm if piece is None else kron(piece, bm)
            if piece is None:
                piece = mat_identity(1)
            for _ in range(count):
                blocks.append(piece)
        out = _block_diag(blocks)
        self._mats[g] = out
        return out


def _block_diag(blocks):
    total = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * total for _ in range(total)]
    offset = 0
    for b in blocks:
        d = len(b)
        for i in range(d):
            for j in range(d):
                out[offset + i][offset + j] = b[i][j]
        offset += d
    return out


# -- concrete sheaves ----------------------------------------------------------

class ConstantSheaf:
    """Rank-one sheaf, constant on a union of double cosets, with identity
    actions; realizes the comparability and permutation generators."""

    def __init__(self, target: SetPartition, source: SetPartition, support):
        self.target = target
        self.source = source
        self._support = frozenset(support)

    def support(self):
        return self._support

    def dim(self, x: Perm) -> int:
        return 1 if x in self._support else 0

    def left_mat(self, g: Perm, x: Perm):
        if x not in self._support:
            raise ValueError("stalk is zero")
        return mat_identity(1)

    def right_mat(self, x: Perm, h: Perm):
        if x not in self._support:
            raise ValueError("stalk is zero")
        return mat_identity(1)

    def mixed_trace(self, x: Perm, g: Perm, h: Perm) -> Fraction:
        if x not in self._support:
            return Fraction(0)
        if compose(compose(g, x), h) != x:
            raise ValueError("mixed trace needs g.x.h = x")
        return Fraction(1)


class RepSheaf:
    """The sheaf of an honest character of S_lam: the module on every
    element of S_lam, left action by the module structure, right action
    by identity maps."""

    def __init__(self, chi: VirtualCharacter):
        self.chi = chi
        lam = chi.host
        self.target = lam
        self.source = lam
        self._support = frozenset(young_subgroup(lam))
        self._dim = ch.dim(chi)
        self._model = YoungModel(chi)

    def support(self):
        return self._support

    def dim(self, x: Perm) -> int:
        return self._dim if x in self._support else 0

    def left_mat(self, g: Perm, x: Perm):
        if x not in self._support:
            raise ValueError("stalk is zero")
        return self._model.mat(g)

    def right_mat(self, x: Perm, h: Perm):
        if x not in self._support:
            raise ValueError("stalk is zero")
        return mat_identity(self._dim)

    def mixed_trace(self, x: Perm, g: Perm, h: Perm) -> Fraction:
        if x not in self._support:
            return Fraction(0)
        if compose(compose(g, x), h) != x:
            raise ValueError("mixed trace needs g.x.h = x")
        return Fraction(evaluate(self.chi, ch.class_of(self.chi.host, g)))


class ConvolvedSheaf:
    """The composition of two concrete sheaves by the invariants formula,
    in compressed coordinates indexed by orbit representatives of the free
    inner action on index pairs."""

    def __init__(self, a, b):
        if a.source != b.target:
            raise ValueError("inner gradings do not match")
        self.a = a
        self.b = b
        self.mu = a.source
        self.target = a.target
        self.source = b.source
        self._mu_order = young_order(self.mu)
        self._support = frozenset(compose(y, u) for y in a.support()
                                  for u in b.support())
        self._reps = {}
        self._dims = {}
        self._traces = {}
        self._left = {}
        self._right = {}

    def support(self):
        return self._support

    def stalk_reps(self, x: Perm):
        """Orbit representatives (y0, u0) of index pairs y.u0 = x, one per
        inner-group orbit, sorted by u0."""
        if x in self._reps:
            return self._reps[x]
        asupp = self.a.support()
        bsupp = self.b.support()
        seen = set()
        out = []
        for u in bsupp:
            y = compose(x, inverse(u))
            if y not in asupp:
                continue
            u0 = left_coset_rep(self.mu, u)
            if u0 in seen:
                continue
            seen.add(u0)
            out.append((compose(x, inverse(u0)), u0))
        out.sort(key=lambda t: t[1])
        self._reps[x] = tuple(out)
        return self._reps[x]

    def dim(self, x: Perm) -> int:
        """Free-action dimension law: one block per inner-coset of index
        pairs."""
        if x not in self._dims:
            self._dims[x] = sum(self.a.dim(y) * self.b.dim(u)
                                for y, u in self.stalk_reps(x))
        return self._dims[x]

    def mixed_trace(self, x: Perm, g: Perm, h: Perm) -> Fraction:
        """Trace of v -> g.v.h on the invariants, as the average over the
        inner group of block-diagonal traces of the full sum."""
        if compose(compose(g, x), h) != x:
            raise ValueError("mixed trace needs g.x.h = x")
        key = (x, g, h)
        if key in self._traces:
            return self._traces[key]
        if x not in self._support:
            self._traces[key] = Fraction(0)
            return self._traces[key]
        mu_set = frozenset(young_subgroup(self.mu))
        asupp = self.a.support()
        bsupp = self.b.support()
        total = Fraction(0)
        for y in asupp:
            u = compose(inverse(y), x)
            if u not in bsupp:
                continue
            w = compose(compose(inverse(y), g), y)
            if w not in mu_set:
                continue
            ta = self.a.mixed_trace(y, g, inverse(w))
            if not ta:
                continue
            tb = self.b.mixed_trace(u, w, h)
            if not tb:
                continue
            total += ta * tb
        out = total / self._mu_order
        self._traces[key] = out
        return out

    def _locate(self, x: Perm):
        """Index ranges of each orbit block in the compressed basis at x."""
        offsets = []
        pos = 0
        for y0, u0 in self.stalk_reps(x):
            d = self.a.dim(y0) * self.b.dim(u0)
            offsets.append(((y0, u0), pos, d))
            pos += d
        return offsets

    def left_mat(self, g: Perm, x: Perm):
        """Left action in compressed coordinates: the coset-representative
        component of each block is unchanged, so blocks map within the
        same representative index via the left action on the first factor."""
        key = (g, x)
        if key in self._left:
            return self._left[key]
        gx = compose(g, x)
        src = self._locate(x)
        dst_pos = {pair[1]: (pos, d) for pair, pos, d in self._locate(gx)}
        out = [[Fraction(0)] * self.dim(x) for _ in range(self.dim(gx))]
        for (y0, u0), pos, d in src:
            dpos, _ = dst_pos[u0]
            block = kron(self.a.left_mat(g, y0),
                         mat_identity(self.b.dim(u0)))
            for i in range(len(block)):
                for j in range(d):
                    if block[i][j]:
                        out[dpos + i][pos + j] = block[i][j]
        self._left[key] = out
        return out

    def right_mat(self, x: Perm, h: Perm):
        """Right action in compressed coordinates: the image pair
        (y0, u0 h) is moved back onto the representative of its coset by a
        uniquely determined inner element."""
        key = (x, h)
        if key in self._right:
            return self._right[key]
        xh = compose(x, h)
        src = self._locate(x)
        dst_pos = {pair[1]: (pos, d) for pair, pos, d in self._locate(xh)}
        out = [[Fraction(0)] * self.dim(x) for _ in range(self.dim(xh))]
        for (y0, u0), pos, d in src:
            u0h = compose(u0, h)
            u2 = left_coset_rep(self.mu, u0h)
            tau = compose(u2, inverse(u0h))
            dpos, _ = dst_pos[u2]
            ma = self.a.right_mat(y0, inverse(tau))
            mb = mat_mul(self.b.left_mat(tau, u0h), self.b.right_mat(u0, h))
            block = kron(ma, mb)
            for i in range(len(block)):
                for j in range(d):
                    if block[i][j]:
                        out[dpos + i][pos + j] = block[i][j]
        self._right[key] = out
        return out


# -- realization of generators and summands ------------------------------------

def realize_one(nu: SetPartition, mu: SetPartition) -> ConstantSheaf:
    from .partitions import refines
    if refines(mu, nu):
        support = young_subgroup(nu)
    elif refines(nu, mu):
        support = young_subgroup(mu)
    else:
        raise ValueError("incomparable partitions")
    return ConstantSheaf(nu, mu, support)


def realize_perm(w: Perm, lam: SetPartition) -> ConstantSheaf:
    support = tuple(compose(w, h) for h in young_subgroup(lam))
    return ConstantSheaf(act(w, lam), lam, support)


def realize_rep(chi: VirtualCharacter) -> RepSheaf:
    return RepSheaf(chi)


def realize_generator(atom):
    """Realize a generator letter from the rewriting engine as a sheaf."""
    from .algebra import One, PermAtom, RepAtom
    if isinstance(atom, One):
        return realize_one(atom.target, atom.source)
    if isinstance(atom, PermAtom):
        raise ValueError("permutation letters need their source grading; "
                         "use realize_perm")
    if isinstance(atom, RepAtom):
        return realize_rep(atom.chi)
    raise TypeError("unknown generator letter %r" % (atom,))


def convolve_concrete(a, b) -> ConvolvedSheaf:
    return ConvolvedSheaf(a, b)


def realize_summand(target: SetPartition, source: SetPartition, w: Perm,
                    chi: VirtualCharacter) -> ConvolvedSheaf:
    """The four-letter realization one(target,kappa) o rep(chi) o
    one(kappa, w.source) o perm(w) of a canonical summand with honest
    stalk."""
    kappa = meet(target, act(w, source))
    if chi.host != kappa:
        raise ValueError("stalk host does not match the stabilizer")
    word = convolve_concrete(realize_one(target, kappa), realize_rep(chi))
    word = convolve_concrete(word, realize_one(kappa, act(w, source)))
    word = convolve_concrete(word, realize_perm(w, source))
    return word


# -- reading a K-class off a sheaf ---------------------------------------------

def stalk_decompose(sheaf) -> KClass:
    """Stabilizer traces at every canonical representative, decomposed into
    irreducible coordinates.

    The stabilizer of the coset of w acts on the stalk at w by
    z . v = z v w^{-1} z^{-1} w; a non-integral decomposition would signal
    a broken action convention and raises immediately.
    """
    target, source = sheaf.target, sheaf.source
    stalks = {}
    for c in double_cosets(target, source):
        w = c.rep
        if sheaf.dim(w) == 0:
            continue
        kappa = meet(target, act(w, source))
        w_inv = inverse(w)
        values = {}
        for clabel in ch.class_labels(kappa):
            z = ch.class_rep(kappa, clabel)
            h = compose(compose(w_inv, inverse(z)), w)
            values[clabel] = sheaf.mixed_trace(w, z, h)
        # the identity trace must reproduce the coset-counted dimension
        # (free-action dimension law, checked through the trace recursion)
        if values[ch.identity_class(kappa)] != sheaf.dim(w):
            raise AssertionError("identity trace differs from the stalk "
                                 "dimension at %r" % (w,))
        for clabel, v in values.items():
            if Fraction(v).denominator != 1:
                raise ValueError(
                    "non-integral stabilizer trace %s at class %r: the "
                    "stabilizer action convention z.v = z v w^-1 z^-1 w "
                    "is violated" % (v, clabel))
        chi = ch.decompose(kappa, {k: int(v) for k, v in values.items()})
        if chi:
            stalks[w] = chi
    return kclass(target, source, stalks)


def _sign_split(chi: VirtualCharacter):
    pos = {k: v for k, v in chi.items if v > 0}
    neg = {k: -v for k, v in chi.items if v < 0}
    out = []
    if pos:
        out.append((1, ch.virtual_character(chi.host, pos)))
    if neg:
        out.append((-1, ch.virtual_character(chi.host, neg)))
    return out


def oracle_multiply(a: KClass, b: KClass) -> KClass:
    """Product computed entirely on the sheaf side: split every stalk into
    honest positive and negative parts, realize each canonical summand as
    the convolution of its four generator letters, convolve the two sides,
    decompose, and recombine with signs."""
    if a.source != b.target:
        raise ValueError("inner gradings do not match")
    result = zero(a.target, b.source)
    left_parts = [(w, sgn, chi) for w, stalk in a.stalks
                  for sgn, chi in _sign_split(stalk)]
    right_parts = [(v, sgn, chi) for v, stalk in b.stalks
                   for sgn, chi in _sign_split(stalk)]
    left_sheaves = [(sgn, realize_summand(a.target, a.source, w, chi))
                    for w, sgn, chi in left_parts]
    right_sheaves = [(sgn, realize_summand(b.target, b.source, v, chi))
                     for v, sgn, chi in right_parts]
    for sl, shl in left_sheaves:
        for sr, shr in right_sheaves:
            piece = stalk_decompose(convolve_concrete(shl, shr))
            result = result + (sl * sr) * piece
    return result


# -- explicit projector (test support) -----------------------------------------

def averaging_projector(a, b, x: Perm):
    """The full averaging projector over the inner group on the block space
    sum over yu = x of A_y tensor B_u, as an explicit matrix.

    Returns (projector, blocks) where blocks lists (y, u, offset, dim).
    Intended for validating idempotency and rank on small instances.
    """
    mu = a.source
    mu_group = young_subgroup(mu)
    pairs = []
    pos = 0
    for u in sorted(b.support()):
        y = compose(x, inverse(u))
        if y not in a.support():
            continue
        d = a.dim(y) * b.dim(u)
        pairs.append((y, u, pos, d))
        pos += d
    index = {(y, u): (off, d) for y, u, off, d in pairs}
    total = pos
    proj = [[Fraction(0)] * total for _ in range(total)]
    order = len(mu_group)
    for w in mu_group:
        w_inv = inverse(w)
        for y, u, off, d in pairs:
            ty, tu = compose(y, w_inv), compose(w, u)
            toff, td = index[(ty, tu)]
            block = kron(a.right_mat(y, w_inv), b.left_mat(w, u))
            for i in range(td):
                for j in range(d):
                    if block[i][j]:
                        proj[toff + i][off + j] += Fraction(block[i][j], order)
    return proj, pairs
