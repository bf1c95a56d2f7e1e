"""The multiplication engine of the graded convolution ring, by rewriting.

Every K-class decomposes into canonical summands, one per supported double
coset: a summand with target nu, support representative w and stalk W (a
virtual character of the stabilizer kappa = meet(nu, w.source)) stands for
the four-letter generator word

    one(nu, kappa) . rep(W) . one(kappa, w.source) . perm(w).

Multiplication folds those letters one at a time onto the right factor;
each fold is the case analysis of the presentation's defining relations:
permutation letters are absorbed by twisting, rep letters tensor after
restriction, an upward comparability letter induces the stalk, and a
downward one explodes into a Mackey sum over double cosets of the middle
Young subgroup.  Support is re-canonicalized after every fold, so results
are always honest K-classes.

The same module exposes the dimension and basis services, the relation
verifier, the parabolic embedding (with an independent blockwise product
used to test it), structure constant tables and a deterministic JSON
export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import characters as ch
from .characters import VirtualCharacter, induce, restrict, tensor, twist
from .kclasses import (BasisIndex, KClass, basis_element, basis_indices,
                       canonicalize_support, gen_one, gen_perm, idempotent,
                       kclass, to_basis_coords, zero)
from .partitions import (SetPartition, act, all_set_partitions,
                         canonical_section, format_set_partition, ground_size,
                         integer_partitions, meet, num_partitions, refines)
from .perms import (Perm, all_perms, compose, double_coset_reps_in,
                    double_cosets, format_perm, inverse, young_subgroup)


@dataclass(frozen=True)
class Summand:
    """One canonical summand: coefficientless since the stalk character is
    already an integer combination."""
    target: SetPartition
    source: SetPartition
    w: Perm
    stalk: VirtualCharacter


def canonical_summands(a: KClass):
    return [Summand(a.target, a.source, w, chi) for w, chi in a.stalks]


def summands_to_kclass(target, source, summands) -> KClass:
    stalks = {}
    for s in summands:
        if not s.stalk:
            continue
        if (s.target, s.source) != (target, source):
            raise AssertionError("summand grading drifted")
        stalks[s.w] = stalks[s.w] + s.stalk if s.w in stalks else s.stalk
    return kclass(target, source, stalks)


# -- generator atoms ----------------------------------------------------------

@dataclass(frozen=True)
class One:
    target: SetPartition
    source: SetPartition


@dataclass(frozen=True)
class PermAtom:
    w: Perm


@dataclass(frozen=True)
class RepAtom:
    chi: VirtualCharacter


def word_for_summand(s: Summand):
    """The four-letter word realizing a canonical summand."""
    kappa = meet(s.target, act(s.w, s.source))
    return [One(s.target, kappa), RepAtom(s.stalk),
            One(kappa, act(s.w, s.source)), PermAtom(s.w)]


def _canonical(target, source, v, chi) -> Summand:
    rep, moved = canonicalize_support(target, source, v, chi)
    return Summand(target, source, rep, moved)


def left_compose_generator(atom, s: Summand):
    """Left-compose one generator letter onto a canonical summand.

    Returns a list of canonical summands (an integer combination, with the
    coefficients folded into the stalk characters).
    """
    if not s.stalk:
        return []
    kappa = s.stalk.host  # = meet(s.target, s.w . s.source)

    if isinstance(atom, PermAtom):
        z = atom.w
        return [_canonical(act(z, s.target), s.source,
                           compose(z, s.w), twist(z, s.stalk))]

    if isinstance(atom, RepAtom):
        if atom.chi.host != s.target:
            raise ValueError("rep letter not composable with summand target")
        moved = tensor(restrict(atom.chi, kappa), s.stalk)
        return [Summand(s.target, s.source, s.w, moved)]

    if isinstance(atom, One):
        tau, nu = atom.target, atom.source
        if nu != s.target:
            raise ValueError("comparability letter not composable")
        if tau == nu:
            return [s]
        if refines(nu, tau):
            # going up: induce the stalk into the larger stabilizer; the
            # coarser target can change the canonical representative
            new_host = meet(tau, act(s.w, s.source))
            return [_canonical(tau, s.source, s.w, induce(s.stalk, new_host))]
        if refines(tau, nu):
            # going down: Mackey sum over double cosets inside S_nu
            out = []
            for z in double_coset_reps_in(nu, tau, kappa):
                zw = compose(z, s.w)
                mid = meet(tau, act(z, kappa))
                new_host = meet(tau, act(zw, s.source))
                moved = induce(restrict(twist(z, s.stalk), mid), new_host)
                out.append(_canonical(tau, s.source, zw, moved))
            return out
        raise ValueError("comparability letter with incomparable partitions")

    raise TypeError("unknown generator letter: %r" % (atom,))


def multiply(a: KClass, b: KClass) -> KClass:
    """Product in the graded ring; inner gradings must match."""
    if a.source != b.target:
        raise ValueError("inner gradings do not match: %r vs %r"
                         % (a.source, b.target))
    result = zero(a.target, b.source)
    for s in canonical_summands(a):
        terms = canonical_summands(b)
        for atom in reversed(word_for_summand(s)):
            nxt = []
            for t in terms:
                nxt.extend(left_compose_generator(atom, t))
            terms = _merge(nxt)
        result = result + summands_to_kclass(a.target, b.source, terms)
    return result


def _merge(summands):
    acc = {}
    for s in summands:
        key = (s.target, s.source, s.w)
        acc[key] = acc[key] + s.stalk if key in acc else s.stalk
    return [Summand(t, src, w, chi) for (t, src, w), chi in sorted(acc.items())
            if chi]


# -- dimension and basis ------------------------------------------------------

def dimension(nu: SetPartition, lam: SetPartition) -> int:
    """Rank of the (nu, lam) summand: sum over double cosets of the product
    of partition counts of the stabilizer block sizes."""
    total = 0
    for c in double_cosets(nu, lam):
        kappa = meet(nu, act(c.rep, lam))
        prod = 1
        for b in kappa:
            prod *= num_partitions(len(b))
        total += prod
    return total


def basis(nu: SetPartition, lam: SetPartition) -> tuple:
    return basis_indices(nu, lam)


# -- relation verification ----------------------------------------------------

@dataclass
class Report:
    checked: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str):
        self.checked += 1
        if not ok:
            self.failures.append(message)


RELATION_BOUND = 4


def verify_relations(n: int) -> Report:
    """Instantiate the defining relations over all applicable tuples of set
    partitions and permutations of [n] and check them with `multiply`.

    The instance count is quadratic in n! so the exhaustive sweep is
    capped at n = 4 (13624 instances)."""
    if n > RELATION_BOUND:
        raise ValueError("relation verification is exhaustive and bounded "
                         "at n <= %d" % RELATION_BOUND)
    rep = Report()
    parts = all_set_partitions(n)
    perms = all_perms(n)
    comparable_pairs = [(nu, mu) for nu in parts for mu in parts
                        if refines(mu, nu) or refines(nu, mu)]

    # (a): transitivity of the comparability generators along chains
    for nu, mu in comparable_pairs:
        for lam in parts:
            if (refines(lam, mu) and refines(mu, nu)) or \
               (refines(nu, mu) and refines(mu, lam)):
                lhs = multiply(gen_one(nu, mu), gen_one(mu, lam))
                rep.record(lhs == gen_one(nu, lam),
                           "(a) fails at %r <= %r <= %r" % (lam, mu, nu))

    # (b): the permutation letters compose; Young-subgroup elements act
    # trivially on their own idempotent
    for lam in parts:
        for w in perms:
            for z in perms:
                lhs = multiply(gen_perm(w, act(z, lam)), gen_perm(z, lam))
                rep.record(lhs == gen_perm(compose(w, z), lam),
                           "(b) fails at w=%r z=%r lam=%r" % (w, z, lam))
        for w in young_subgroup(lam):
            rep.record(gen_perm(w, lam) == idempotent(lam),
                       "(b) fails: w in S_lam does not give e_lam")

    # (c): permutation letters slide across comparability letters
    for nu, mu in comparable_pairs:
        for w in perms:
            lhs = multiply(gen_perm(w, nu), gen_one(nu, mu))
            rhs = multiply(gen_one(act(w, nu), act(w, mu)), gen_perm(w, mu))
            rep.record(lhs == rhs, "(c) fails at w=%r nu=%r mu=%r" % (w, nu, mu))
        for w in young_subgroup(nu):
            lhs = multiply(gen_perm(w, nu), gen_one(nu, mu))
            rep.record(lhs == gen_one(nu, mu),
                       "(c) absorb-left fails at w=%r" % (w,))
        for w in young_subgroup(mu):
            lhs = multiply(gen_one(nu, mu), gen_perm(w, mu))
            rep.record(lhs == gen_one(nu, mu),
                       "(c) absorb-right fails at w=%r" % (w,))

    # (d): the Mackey decomposition, in both displayed forms
    for nu in parts:
        below = [lam for lam in parts if refines(lam, nu)]
        for mu in below:
            for lam in below:
                lhs = multiply(gen_one(mu, nu), gen_one(nu, lam))
                rhs1 = zero(mu, lam)
                rhs2 = zero(mu, lam)
                for z in double_coset_reps_in(nu, mu, lam):
                    zlam = act(z, lam)
                    mid = meet(mu, zlam)
                    term1 = multiply(gen_one(mu, mid),
                                     multiply(gen_perm(z, act(inverse(z), mid)),
                                              gen_one(meet(act(inverse(z), mu),
                                                           lam), lam)))
                    rhs1 = rhs1 + term1
                    term2 = multiply(gen_one(mu, mid),
                                     multiply(gen_one(mid, zlam),
                                              gen_perm(z, lam)))
                    rhs2 = rhs2 + term2
                rep.record(lhs == rhs1,
                           "(d) form 1 fails at mu=%r lam=%r nu=%r" % (mu, lam, nu))
                rep.record(lhs == rhs2,
                           "(d) form 2 fails at mu=%r lam=%r nu=%r" % (mu, lam, nu))
    return rep


# -- parabolic subalgebra -----------------------------------------------------

def embed_parabolic(lam: SetPartition, a: KClass) -> KClass:
    """Inclusion of the parabolic subalgebra attached to lam: gradings must
    refine lam and the support must stay inside its Young subgroup.

    Double cosets of subgroups of S_lam never merge in the ambient group
    and minimal representatives agree, so the stalk data embeds verbatim.
    """
    if not (refines(a.target, lam) and refines(a.source, lam)):
        raise ValueError("gradings do not refine %r" % (lam,))
    inside = frozenset(young_subgroup(lam))
    for w, _ in a.stalks:
        if w not in inside:
            raise ValueError("support %r escapes the parabolic subgroup" % (w,))
    return a


def _relabel_to_standard(block):
    """Order isomorphism from a sorted block onto {1, ..., k}."""
    fwd = {x: i + 1 for i, x in enumerate(block)}
    back = {i + 1: x for i, x in enumerate(block)}
    return fwd, back


def _restrict_perm(w: Perm, block, fwd):
    return tuple(fwd[w[x - 1]] for x in block)


def _restrict_partition(kappa: SetPartition, block, fwd) -> SetPartition:
    blockset = set(block)
    return tuple(sorted((tuple(sorted(fwd[x] for x in b))
                         for b in kappa if b[0] in blockset),
                        key=lambda b: b[0]))


def parabolic_multiply(lam: SetPartition, a: KClass, b: KClass) -> KClass:
    """Product of two parabolic classes computed blockwise in the factor
    rings of the blocks of lam, then reassembled.

    This is an independent code path from `multiply` (products are taken
    in smaller symmetric groups after relabeling); it exists to test that
    the parabolic embedding is multiplicative.
    """
    embed_parabolic(lam, a)
    embed_parabolic(lam, b)
    if a.source != b.target:
        raise ValueError("inner gradings do not match")

    relabelings = [_relabel_to_standard(block) for block in lam]

    def split(k: KClass):
        """Decompose into pure tensors over the blocks of lam: one factor
        KClass per block for each (support, irreducible label) pair."""
        out = []
        for w, chi in k.stalks:
            host = chi.host
            for iota, coeff in chi.items:
                factors = []
                for block, (fwd, _) in zip(lam, relabelings):
                    bt = _restrict_partition(k.target, block, fwd)
                    bs = _restrict_partition(k.source, block, fwd)
                    bw = _restrict_perm(w, block, fwd)
                    bh = _restrict_partition(host, block, fwd)
                    blabel = tuple(iota[i] for i, hb in enumerate(host)
                                   if hb[0] in set(block))
                    factors.append(kclass(bt, bs,
                                          {bw: ch.virtual_character(bh,
                                                                    {blabel: 1})}))
                out.append((coeff, factors))
        return out

    target, source = a.target, b.source
    result = zero(target, source)
    for ca, fa in split(a):
        for cb, fb in split(b):
            prods = [multiply(x, y) for x, y in zip(fa, fb)]
            result = result + (ca * cb) * _assemble(lam, target, source,
                                                    relabelings, prods)
    return result


def _assemble(lam, target, source, relabelings, factors) -> KClass:
    """Tensor blockwise K-classes back into the ambient grading."""
    n = ground_size(lam)
    items = [[(w, chi) for w, chi in f.stalks] for f in factors]

    def rec(i, w_img, pieces):
        if i == len(factors):
            yield w_img, pieces
            return
        block = lam[i]
        _, back = relabelings[i]
        for bw, chi in items[i]:
            w_new = dict(w_img)
            for j, x in enumerate(block):
                w_new[x] = back[bw[j]]
            for iota, coeff in chi.items:
                host_blocks = tuple(tuple(sorted(back[y] for y in hb))
                                    for hb in chi.host)
                yield from rec(i + 1, w_new,
                               pieces + [(host_blocks, iota, coeff)])

    stalks = {}
    for w_img, pieces in rec(0, {}, []):
        w = tuple(w_img[x] for x in range(1, n + 1))
        blocks = [hb for host_blocks, _, _ in pieces for hb in host_blocks]
        host = tuple(sorted(blocks, key=lambda b: b[0]))
        label_by_block = {}
        coeff = 1
        for host_blocks, iota, c in pieces:
            coeff *= c
            for hb, part in zip(host_blocks, iota):
                label_by_block[hb] = part
        iota_full = tuple(label_by_block[hb] for hb in host)
        chi = coeff * ch.virtual_character(host, {iota_full: 1})
        # blockwise products of canonical representatives need not be
        # canonical for the ambient pair of Young subgroups
        rep, moved = canonicalize_support(target, source, w, chi)
        stalks[rep] = stalks[rep] + moved if rep in stalks else moved
    return kclass(target, source, stalks)


# -- structure constants and export -------------------------------------------

def grading_partitions(n: int, reduced: bool) -> tuple:
    if reduced:
        return tuple(canonical_section(shape) for shape in integer_partitions(n))
    return all_set_partitions(n)


def structure_constants(n: int, reduced: bool = True) -> dict:
    """Integer coordinates of every composable product of basis elements.

    Returns a dict with the global basis list and a mapping
    (left index, right index) -> coordinate dict.
    """
    parts = grading_partitions(n, reduced)
    index_list = []
    for nu in parts:
        for lam in parts:
            index_list.extend(basis(nu, lam))
    position = {idx: i for i, idx in enumerate(index_list)}
    elements = {idx: basis_element(idx) for idx in index_list}
    products = {}
    for i1, idx1 in enumerate(index_list):
        for i2, idx2 in enumerate(index_list):
            if idx1.source != idx2.target:
                continue
            prod = multiply(elements[idx1], elements[idx2])
            coords = to_basis_coords(prod)
            products[(i1, i2)] = {position[k]: v for k, v in coords.items()}
    return {"n": n, "reduced": reduced, "basis": index_list,
            "position": position, "products": products}


def export_presentation(n: int, reduced: bool = True, mod_p: int | None = None) -> dict:
    """Deterministic JSON-able document with idempotents, basis and the
    full structure constant table."""
    table = structure_constants(n, reduced)
    parts = grading_partitions(n, reduced)
    index_list = table["basis"]

    def fmt_index(idx: BasisIndex):
        return {
            "target": format_set_partition(idx.target),
            "source": format_set_partition(idx.source),
            "rep": format_perm(idx.rep),
            "label": ["%s" % ",".join(str(p) for p in part)
                      for part in idx.label],
        }

    basis_by_grading = {}
    for i, idx in enumerate(index_list):
        key = "%s|%s" % (format_set_partition(idx.target),
                         format_set_partition(idx.source))
        basis_by_grading.setdefault(key, []).append(dict(fmt_index(idx),
                                                         index=i))
    products = []
    for (i1, i2), coords in sorted(table["products"].items()):
        cc = sorted((k, v % mod_p if mod_p else v) for k, v in coords.items())
        products.append({"left": i1, "right": i2,
                         "coords": [[k, v] for k, v in cc if v != 0]})
    return {
        "n": n,
        "reduced": reduced,
        "mod_p": mod_p,
        "idempotents": [format_set_partition(p) for p in parts],
        "basis": basis_by_grading,
        "products": products,
    }


def export_json(n: int, reduced: bool = True, mod_p: int | None = None) -> str:
    return json.dumps(export_presentation(n, reduced, mod_p),
                      sort_keys=True, separators=(",", ":")) + "\n"


# -- the rank-3 quiver presentation -------------------------------------------

def quiver_presentation() -> dict:
    """The quiver presentation of the reduced algebra at n = 3, emitted as
    data and re-verified against `multiply` at emit time."""
    n = 3
    e111 = canonical_section((1, 1, 1))
    e21 = canonical_section((2, 1))
    e3 = canonical_section((3,))
    s = gen_perm((2, 1, 3), e111)
    t = gen_perm((1, 3, 2), e111)
    p = gen_one(e21, e111)
    q = gen_one(e111, e21)
    x = gen_one(e3, e21)
    y = gen_one(e21, e3)
    st = multiply(s, t)
    checks = {
        "s^2 = e(1^3)": multiply(s, s) == idempotent(e111),
        "t^2 = e(1^3)": multiply(t, t) == idempotent(e111),
        "(st)^3 = e(1^3)": multiply(st, multiply(st, st)) == idempotent(e111),
        "p s = p": multiply(p, s) == p,
        "s q = q": multiply(s, q) == q,
        "x p = x p t": multiply(x, p) == multiply(multiply(x, p), t),
        "q y = t q y": multiply(q, y) == multiply(t, multiply(q, y)),
        "q p = e(1^3) + s": multiply(q, p) == idempotent(e111) + s,
        "y x = e(21) + p t q": multiply(y, x) ==
            idempotent(e21) + multiply(p, multiply(t, q)),
    }
    return {
        "n": n,
        "vertices": ["1,1,1", "2,1", "3"],
        "generators": {
            "s": "permutation (1 2) at vertex 1,1,1",
            "t": "permutation (2 3) at vertex 1,1,1",
            "p": "1,1,1 -> 2,1",
            "q": "2,1 -> 1,1,1",
            "x": "2,1 -> 3",
            "y": "3 -> 2,1",
        },
        "relations": list(checks.keys()),
        "verified": checks,
    }
