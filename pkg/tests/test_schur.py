import random

import pytest

from hilbschur import characters as ch
from hilbschur.algebra import basis, grading_partitions, multiply
from hilbschur.kclasses import (basis_element, gen_one, gen_perm, gen_rep,
                                idempotent)
from hilbschur.partitions import (all_set_partitions, canonical_section,
                                  minimal_partition)
from hilbschur.schur import (DoubleCosetFunction, convolve_functions,
                             coset_function, delta, function_to_json,
                             quotient_map, rank_of_function_algebra,
                             value_at, verify_quotient_hom, zero_function)

E111 = canonical_section((1, 1, 1))
E21 = canonical_section((2, 1))
E3 = canonical_section((3,))


def test_delta_is_unit():
    d = delta(E21, E21, (1, 2, 3))
    f = coset_function(E21, E111, {(1, 2, 3): 3, (1, 3, 2): -1})
    assert convolve_functions(d, f) == f
    g = coset_function(E111, E21, {(1, 2, 3): 2})
    assert convolve_functions(g, d) == g


def test_values_constant_on_double_cosets():
    f = coset_function(E21, E21, {(1, 3, 2): 5})
    for x in [(1, 3, 2), (3, 1, 2), (2, 3, 1), (3, 2, 1)]:
        assert value_at(f, x) == 5
    assert value_at(f, (1, 2, 3)) == 0


def test_convolution_associative():
    rnd = random.Random(4)
    for n in (2, 3, 4):
        parts = grading_partitions(n, reduced=True)
        for _ in range(40):
            nu, mu, lam, ka = (rnd.choice(parts) for _ in range(4))
            from hilbschur.perms import double_cosets
            def rand_fn(a, b):
                return coset_function(
                    a, b, {c.rep: rnd.randint(-2, 2)
                           for c in double_cosets(a, b)})
            f = rand_fn(nu, mu)
            g = rand_fn(mu, lam)
            h = rand_fn(lam, ka)
            assert convolve_functions(convolve_functions(f, g), h) == \
                convolve_functions(f, convolve_functions(g, h))


def test_quotient_of_generators():
    assert quotient_map(idempotent(E21)) == delta(E21, E21, (1, 2, 3))
    reg = ch.regular_character(E21)
    assert quotient_map(gen_rep(reg)) == 2 * delta(E21, E21, (1, 2, 3))
    for w in [(2, 1, 3), (3, 1, 2)]:
        q = quotient_map(gen_perm(w, E111))
        assert list(q.value_map().values()) == [1]


def test_quotient_of_qp():
    q = gen_one(E111, E21)
    p = gen_one(E21, E111)
    qp = quotient_map(multiply(q, p))
    assert qp.value_map() == {(1, 2, 3): 1, (2, 1, 3): 1}
    assert qp == convolve_functions(quotient_map(q), quotient_map(p))


def test_quotient_multiplicative_small():
    for n in (1, 2, 3):
        rep = verify_quotient_hom(n, reduced=False)
        assert rep.ok, rep.failures[:3]


def test_quotient_surjective():
    # the basis element with the full orbit label maps to the indicator of
    # its double coset, so every indicator is hit
    from hilbschur.partitions import act, hat, meet
    for n in (2, 3, 4):
        parts = grading_partitions(n, reduced=True)
        for nu in parts:
            for lam in parts:
                hits = set()
                for idx in basis(nu, lam):
                    kappa = meet(nu, act(idx.rep, lam))
                    if idx.label == tuple((len(b),) for b in kappa):
                        img = quotient_map(basis_element(idx))
                        assert img == delta(nu, lam, idx.rep)
                        hits.add(idx.rep)
                assert len(hits) == rank_of_function_algebra(nu, lam)


def test_grading_checks():
    with pytest.raises(ValueError):
        convolve_functions(coset_function(E21, E21, {}),
                           coset_function(E111, E111, {}))
    with pytest.raises(ValueError):
        coset_function(E21, E21, {(2, 1, 3): 1})  # not canonical


def test_serialization():
    f = coset_function(E21, E21, {(1, 3, 2): -2, (1, 2, 3): 1})
    assert function_to_json(f) == {
        "target": "1 2|3", "source": "1 2|3",
        "values": [["1,2,3", 1], ["1,3,2", -2]],
    }
