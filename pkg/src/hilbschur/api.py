"""Plain-data facade shared by the HTTP service and the command line.

Every function here takes and returns JSON-friendly values with fully
deterministic contents (fixed orderings, seeded sampling), so identical
requests produce byte-identical responses.
"""

from __future__ import annotations

import random

from . import algebra, schur, stalks
from .kclasses import basis_element, kclass_from_json, kclass_to_json
from .oracle import oracle_multiply
from .partitions import (format_int_partition, format_set_partition,
                         parse_int_partition, parse_partition_arg)
from .perms import format_perm


def compute_dims(n: int, target: str, source: str) -> dict:
    nu = parse_partition_arg(target, n)
    lam = parse_partition_arg(source, n)
    return {"n": n, "target": format_set_partition(nu),
            "source": format_set_partition(lam),
            "dimension": algebra.dimension(nu, lam)}


def compute_basis(n: int, target: str, source: str) -> dict:
    nu = parse_partition_arg(target, n)
    lam = parse_partition_arg(source, n)
    indices = algebra.basis(nu, lam)
    return {
        "n": n,
        "target": format_set_partition(nu),
        "source": format_set_partition(lam),
        "count": len(indices),
        "indices": [
            {"rep": format_perm(i.rep),
             "label": [format_int_partition(p) for p in i.label]}
            for i in indices
        ],
    }


def do_multiply(left: dict, right: dict) -> dict:
    a = kclass_from_json(left)
    b = kclass_from_json(right)
    return {"product": kclass_to_json(algebra.multiply(a, b))}


def quiver_doc() -> dict:
    doc = algebra.quiver_presentation()
    if not all(doc["verified"].values()):
        raise AssertionError("quiver relations failed verification")
    return doc


def phi_doc(shape_str: str) -> dict:
    shape = parse_int_partition(shape_str)
    return {
        "shape": format_int_partition(shape),
        "phi": stalks.phi_matrix(shape).to_json(),
        "dual_phi": stalks.dual_phi_matrix(shape).to_json(),
    }


def export_doc(n: int, reduced: bool = True, mod_p: int | None = None) -> str:
    return algebra.export_json(n, reduced, mod_p)


# -- verification suites -------------------------------------------------------

def _sample_pairs(n: int, samples: int, seed: int):
    """Deterministic sample of composable basis pairs over the reduced
    gradings of [n]."""
    rnd = random.Random(seed)
    parts = algebra.grading_partitions(n, reduced=True)
    triples = [(nu, mu, lam) for nu in parts for mu in parts for lam in parts
               if algebra.basis(nu, mu) and algebra.basis(mu, lam)]
    out = []
    for _ in range(samples):
        nu, mu, lam = rnd.choice(triples)
        i1 = rnd.choice(algebra.basis(nu, mu))
        i2 = rnd.choice(algebra.basis(mu, lam))
        out.append((i1, i2))
    return out


def check_relations(n: int) -> dict:
    lines = []
    ok = True
    for k in range(1, n + 1):
        rep = algebra.verify_relations(k)
        ok = ok and rep.ok
        lines.append("relations n=%d: %d instances, %d failures"
                     % (k, rep.checked, len(rep.failures)))
        lines.extend("  " + f for f in rep.failures[:10])
    lines.append("all relations hold" if ok else "RELATION FAILURES")
    return {"ok": ok, "output": "\n".join(lines)}


def check_oracle(n: int, samples: int = 200, seed: int = 0) -> dict:
    """Rewriting engine against the sheaf-convolution engine: exhaustive on
    every composable pair of basis elements through n = 4 (all set
    partitions through n = 3, reduced gradings at n = 4), sampled beyond."""
    lines = []
    ok = True
    for k in range(1, min(n, 4) + 1):
        parts = algebra.grading_partitions(k, reduced=(k >= 4))
        checked = failures = 0
        for nu in parts:
            for mu in parts:
                for lam in parts:
                    for i1 in algebra.basis(nu, mu):
                        a = basis_element(i1)
                        for i2 in algebra.basis(mu, lam):
                            b = basis_element(i2)
                            if oracle_multiply(a, b) != algebra.multiply(a, b):
                                failures += 1
                            checked += 1
        ok = ok and failures == 0
        lines.append("oracle n=%d (%s): %d pairs, %d disagreements"
                     % (k, "reduced" if k >= 4 else "all set partitions",
                        checked, failures))
    for k in range(5, n + 1):
        failures = 0
        for i1, i2 in _sample_pairs(k, samples, seed):
            a, b = basis_element(i1), basis_element(i2)
            if oracle_multiply(a, b) != algebra.multiply(a, b):
                failures += 1
        ok = ok and failures == 0
        lines.append("oracle n=%d: %d sampled pairs, %d disagreements"
                     % (k, samples, failures))
    lines.append("oracle agrees" if ok else "ORACLE DISAGREEMENTS")
    return {"ok": ok, "output": "\n".join(lines)}


def check_assoc(n: int, samples: int = 500, seed: int = 0) -> dict:
    lines = []
    ok = True
    for k in range(1, n + 1):
        if k <= 3:
            parts = algebra.grading_partitions(k, reduced=True)
            checked = failures = 0
            for nu in parts:
                for mu in parts:
                    for lam in parts:
                        for ka in parts:
                            for i1 in algebra.basis(nu, mu):
                                a = basis_element(i1)
                                for i2 in algebra.basis(mu, lam):
                                    b = basis_element(i2)
                                    ab = algebra.multiply(a, b)
                                    for i3 in algebra.basis(lam, ka):
                                        c = basis_element(i3)
                                        if algebra.multiply(ab, c) != \
                                           algebra.multiply(a, algebra.multiply(b, c)):
                                            failures += 1
                                        checked += 1
            lines.append("assoc n=%d: %d exhaustive triples, %d failures"
                         % (k, checked, failures))
        else:
            rnd = random.Random(seed)
            parts = algebra.grading_partitions(k, reduced=True)
            quads = [(nu, mu, lam, ka) for nu in parts for mu in parts
                     for lam in parts for ka in parts]
            failures = 0
            for _ in range(samples):
                nu, mu, lam, ka = rnd.choice(quads)
                a = basis_element(rnd.choice(algebra.basis(nu, mu)))
                b = basis_element(rnd.choice(algebra.basis(mu, lam)))
                c = basis_element(rnd.choice(algebra.basis(lam, ka)))
                if algebra.multiply(algebra.multiply(a, b), c) != \
                   algebra.multiply(a, algebra.multiply(b, c)):
                    failures += 1
            lines.append("assoc n=%d: %d sampled triples, %d failures"
                         % (k, samples, failures))
        ok = ok and failures == 0
    lines.append("associativity holds" if ok else "ASSOCIATIVITY FAILURES")
    return {"ok": ok, "output": "\n".join(lines)}


def check_schur(n: int) -> dict:
    lines = []
    ok = True
    for k in range(1, n + 1):
        rep = schur.verify_quotient_hom(k, reduced=(k >= 4))
        ok = ok and rep.ok
        lines.append("schur quotient n=%d (%s): %d pairs, %d failures"
                     % (k, "reduced" if k >= 4 else "all set partitions",
                        rep.checked, len(rep.failures)))
    lines.append("quotient map is multiplicative" if ok
                 else "QUOTIENT FAILURES")
    return {"ok": ok, "output": "\n".join(lines)}


def check_stalks(n: int) -> dict:
    tri = stalks.check_triangularity(n)
    col = stalks.check_column_sums(n)
    ok = tri.ok and col.ok
    lines = [
        "triangularity n<=%d: %d instances, %d failures"
        % (n, tri.checked, len(tri.failures)),
        "column sums n<=%d: %d instances, %d failures"
        % (n, col.checked, len(col.failures)),
        "stalk operators consistent" if ok else "STALK FAILURES",
    ]
    return {"ok": ok, "output": "\n".join(lines)}


CHECKS = {
    "relations": lambda n, samples, seed: check_relations(n),
    "oracle": check_oracle,
    "assoc": check_assoc,
    "schur": lambda n, samples, seed: check_schur(n),
    "stalks": lambda n, samples, seed: check_stalks(n),
}


def run_check(suite: str, n: int, samples: int, seed: int) -> dict:
    if suite not in CHECKS:
        raise ValueError("unknown check suite %r" % suite)
    return CHECKS[suite](n, samples, seed)
