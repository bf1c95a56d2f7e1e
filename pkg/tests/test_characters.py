from fractions import Fraction

import pytest

from hilbschur import characters as ch
from hilbschur.partitions import (all_set_partitions, canonical_section,
                                  integer_partitions, minimal_partition,
                                  refinements, refines, setpart)


def test_character_table_small():
    assert ch.character_table(1) == {((1,), (1,)): 1}
    # chi_(2,1) of S_3 on (1^3), (2,1), (3)
    assert ch.sym_char_value((2, 1), (1, 1, 1)) == 2
    assert ch.sym_char_value((2, 1), (2, 1)) == 0
    assert ch.sym_char_value((2, 1), (3,)) == -1
    # hook dimension of the staircase in S_4
    assert ch.sym_char_value((2, 1, 1), (1, 1, 1, 1)) == 3


def test_column_orthogonality():
    for m in range(1, 7):
        for mu in integer_partitions(m):
            assert sum(ch.sym_char_value(lam, mu) ** 2
                       for lam in integer_partitions(m)) == \
                ch.centralizer_order(mu)


def test_row_orthogonality():
    from math import factorial
    for m in range(1, 7):
        parts = integer_partitions(m)
        for a in parts:
            for b in parts:
                total = sum(Fraction(factorial(m), ch.centralizer_order(mu)) *
                            ch.sym_char_value(a, mu) * ch.sym_char_value(b, mu)
                            for mu in parts)
                assert total == (factorial(m) if a == b else 0)


def test_evaluate_and_inner_product():
    host = canonical_section((3,))
    triv = ch.trivial_character(host)
    sgn = ch.sign_character(host)
    for c in ch.class_labels(host):
        assert ch.evaluate(triv, c) == 1
    assert ch.evaluate(sgn, ((2, 1),)) == -1
    assert ch.inner_product(host, ch.char_values(triv), ch.char_values(sgn)) == 0
    for iota in ch.irr_labels(host):
        vals = ch.char_values(ch.irreducible(host, iota))
        assert ch.inner_product(host, vals, vals) == 1
    # linearity of evaluation
    combo = 2 * triv - sgn
    for c in ch.class_labels(host):
        assert ch.evaluate(combo, c) == 2 * ch.evaluate(triv, c) - ch.evaluate(sgn, c)


def test_decompose():
    host = canonical_section((3,))
    reg = ch.regular_character(host)
    assert ch.decompose(host, ch.char_values(reg)).coeffs() == \
        {((3,),): 1, ((2, 1),): 2, ((1, 1, 1),): 1}
    for iota in ch.irr_labels(host):
        chi = ch.irreducible(host, iota)
        assert ch.decompose(host, ch.char_values(chi)) == chi
    # the permutation character of S_3 on cosets of S_2: values (3, 1, 0)
    vals = {((1, 1, 1),): 3, ((2, 1),): 1, ((3,),): 0}
    assert ch.decompose(host, vals).coeffs() == {((3,),): 1, ((2, 1),): 1}
    with pytest.raises(ValueError):
        ch.decompose(host, {((1, 1, 1),): 1, ((2, 1),): 0, ((3,),): 0})


def test_induce_examples():
    host = canonical_section((3,))
    sub = canonical_section((2, 1))
    chi = ch.irreducible(sub, ((2,), (1,)))
    assert ch.induce(chi, sub) == chi
    ind = ch.induce(ch.trivial_character(sub), host)
    assert ind.coeffs() == {((3,),): 1, ((2, 1),): 1}
    assert ch.dim(ind) == 3
    # dimension scales with the index
    for lam in all_set_partitions(4):
        for mu in all_set_partitions(4):
            if refines(lam, mu) and lam != mu:
                index = ch.group_order(mu) // ch.group_order(lam)
                chi = ch.sign_character(lam)
                assert ch.dim(ch.induce(chi, mu)) == index * ch.dim(chi)


def test_restrict_examples():
    host = canonical_section((3,))
    sub = canonical_section((2, 1))
    assert ch.restrict(ch.trivial_character(host), sub) == \
        ch.trivial_character(sub)
    std = ch.irreducible(host, ((2, 1),))
    assert ch.restrict(std, sub).coeffs() == \
        {((2,), (1,)): 1, ((1, 1), (1,)): 1}


def test_frobenius_reciprocity():
    for n in range(1, 6):
        for mu in all_set_partitions(n):
            for lam in refinements(mu):
                for iota in ch.irr_labels(lam):
                    chi = ch.irreducible(lam, iota)
                    ind = ch.induce(chi, mu)
                    for jota in ch.irr_labels(mu):
                        psi = ch.irreducible(mu, jota)
                        lhs = ch.inner_product(mu, ch.char_values(ind),
                                               ch.char_values(psi))
                        rhs = ch.inner_product(
                            lam, ch.char_values(chi),
                            ch.char_values(ch.restrict(psi, lam)))
                        assert lhs == rhs


def test_induce_against_class_size_formula():
    # reciprocity-based induction agrees with the classical values formula
    for n in range(1, 6):
        for mu in all_set_partitions(n):
            for lam in refinements(mu):
                for iota in ch.irr_labels(lam):
                    chi = ch.irreducible(lam, iota)
                    via_formula = ch.induced_values(
                        lam, ch.char_values(chi), mu)
                    assert ch.char_values(ch.induce(chi, mu)) == via_formula


def test_induce_restrict_trivial_is_permutation_character():
    lam = canonical_section((2, 1, 1))
    mu = canonical_section((4,))
    perm_char = ch.induce(ch.trivial_character(lam), mu)
    assert ch.dim(perm_char) == 12
    assert ch.inner_product(mu, ch.char_values(perm_char),
                            ch.char_values(ch.trivial_character(mu))) == 1


def test_tensor():
    host = canonical_section((3,))
    triv = ch.trivial_character(host)
    sgn = ch.sign_character(host)
    std = ch.irreducible(host, ((2, 1),))
    assert ch.tensor(triv, std) == std
    assert ch.tensor(sgn, sgn) == triv
    assert ch.tensor(std, std).coeffs() == \
        {((3,),): 1, ((2, 1),): 1, ((1, 1, 1),): 1}


def test_twist():
    host = setpart([[1, 2], [3]])
    chi = ch.virtual_character(host, {((2,), (1,)): 1, ((1, 1), (1,)): 2})
    assert ch.twist((1, 2, 3), chi) == chi
    # twisting by an element of the host subgroup fixes the character
    assert ch.twist((2, 1, 3), chi) == chi
    moved = ch.twist((3, 2, 1), chi)
    assert moved.host == setpart([[2, 3], [1]])
    assert moved.coeffs() == {((1,), (2,)): 1, ((1,), (1, 1)): 2}
    # evaluations transport along conjugation: tw(w z w^-1) == chi(z)
    from hilbschur.perms import compose, inverse, young_subgroup
    w = (3, 1, 2)
    tw = ch.twist(w, chi)
    for z in young_subgroup(chi.host):
        conj = compose(compose(w, z), inverse(w))
        assert ch.evaluate(tw, ch.class_of(tw.host, conj)) == \
            ch.evaluate(chi, ch.class_of(chi.host, z))


def test_perm_basis_examples():
    host = canonical_section((3,))
    assert ch.to_perm_coords(ch.trivial_character(host)) == {((3,),): 1}
    host2 = canonical_section((2,))
    assert ch.to_perm_coords(ch.regular_character(host2)) == {((1, 1),): 1}
    sgn = ch.sign_character(host)
    # solve the unitriangular system: regular - 2 Ind(2,1) + Ind(3)
    coords = ch.to_perm_coords(sgn)
    assert coords == {((1, 1, 1),): 1, ((2, 1),): -2, ((3,),): 1}
    rebuilt = (coords[((1, 1, 1),)] * ch.induced_trivial(host, ((1, 1, 1),)) +
               coords[((2, 1),)] * ch.induced_trivial(host, ((2, 1),)) +
               coords[((3,),)] * ch.induced_trivial(host, ((3,),)))
    assert rebuilt == sgn


def test_perm_basis_round_trip_and_determinant():
    for n in range(1, 6):
        for host in all_set_partitions(n):
            for iota in ch.irr_labels(host):
                chi = ch.irreducible(host, iota)
                assert ch.from_perm_coords(host, ch.to_perm_coords(chi)) == chi
    for m in range(1, 7):
        assert ch.transition_determinant(m) in (1, -1)


def test_induced_trivial_matches_direct_induction():
    from hilbschur.partitions import refinement_orbit_reps
    kappa = setpart([[1, 2, 3], [4]])
    for label, rep in refinement_orbit_reps(kappa):
        direct = ch.induce(ch.trivial_character(rep), kappa)
        assert ch.induced_trivial(kappa, label) == direct
