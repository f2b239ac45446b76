#!/usr/bin/env python3
"""Search for weak extended contact algebras that are not full ones.

The one-atom algebra admits only 256 covering tables, so that case is
exhausted outright; the two-atom case is sampled with a seeded generator.
Both searches report how many tables satisfy the weak axioms, how many of
those satisfy the full axioms, and the first separating example found.

A hand-built separating table is also checked: covering exactly the triples
with a zero on the left, i.e. (a, b) |- f iff a = 0 or b = 0.  It satisfies
every weak axiom and fails ECA1 and ECA3.
"""

from __future__ import annotations

import argparse
import random

import numpy as np

from mereotop import CoveringRelation, FiniteBooleanAlgebra, check_eca, check_weca


def table_from_bits(n: int, bits: int) -> np.ndarray:
    flat = np.array([bits >> i & 1 for i in range(n**3)], dtype=bool)
    return flat.reshape(n, n, n)


def zero_sided_covering(atom_count: int) -> CoveringRelation:
    """(a, b) |- f iff a = 0 or b = 0 — weak but not full."""
    n = 1 << atom_count
    table = np.zeros((n, n, n), dtype=bool)
    table[0, :, :] = True
    table[:, 0, :] = True
    return CoveringRelation(FiniteBooleanAlgebra(atom_count), table)


def classify(covering: CoveringRelation):
    weca = check_weca(covering)
    if not weca.all_passed:
        return "not-weak", None
    eca = check_eca(covering)
    if eca.all_passed:
        return "full", None
    return "weak-only", eca.failures()


def exhaust_one_atom():
    algebra = FiniteBooleanAlgebra(1)
    counts = {"not-weak": 0, "full": 0, "weak-only": 0}
    first = None
    for bits in range(1 << 8):
        covering = CoveringRelation(algebra, table_from_bits(2, bits))
        verdict, failures = classify(covering)
        counts[verdict] += 1
        if verdict == "weak-only" and first is None:
            first = (covering, failures)
    return counts, first


def sample_two_atoms(seed: int, samples: int):
    algebra = FiniteBooleanAlgebra(2)
    rng = random.Random(seed)
    counts = {"not-weak": 0, "full": 0, "weak-only": 0}
    first = None
    for _ in range(samples):
        covering = CoveringRelation(algebra, table_from_bits(4, rng.getrandbits(64)))
        verdict, failures = classify(covering)
        counts[verdict] += 1
        if verdict == "weak-only" and first is None:
            first = (covering, failures)
    return counts, first


def describe(tag: str, counts: dict, found) -> None:
    total = sum(counts.values())
    print(
        f"{tag}: {total} tables -> {counts['not-weak']} fail the weak axioms, "
        f"{counts['full']} satisfy the full axioms, "
        f"{counts['weak-only']} are weak-only"
    )
    if found is not None:
        covering, failures = found
        failing = ", ".join(f"{r.name} at {r.witness}" for r in failures)
        print(f"  first weak-only table: triples {covering.true_triples()}")
        print(f"  full-axiom failures: {failing}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=5000)
    args = parser.parse_args()

    fixed = zero_sided_covering(1)
    verdict, failures = classify(fixed)
    assert verdict == "weak-only", verdict
    describe("hand-built zero-sided table (one atom)", {verdict: 1, "not-weak": 0, "full": 0}, (fixed, failures))

    counts, found = exhaust_one_atom()
    describe("one atom, exhaustive", counts, found)

    counts, found = sample_two_atoms(args.seed, args.samples)
    describe(f"two atoms, {args.samples} samples (seed {args.seed})", counts, found)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
