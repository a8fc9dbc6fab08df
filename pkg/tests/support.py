"""Seeded random generators shared across the test modules.

Everything takes an explicit random.Random so each test controls its seed;
no generator touches the global RNG state.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from hfa import Cdthfa, Cnthfa, Nthfa, Thfe, ZERO, reachable_vectors
from hfa.errors import ClosureBudgetExceeded

# Small degree pool keeping THFE operations cheap and collisions likely.
SMALL_POOL = tuple(Fraction(n, 4) for n in range(5))

TIGHT_POOL = (Fraction(0), Fraction(1, 2), Fraction(1))


def farey_pool(max_denominator: int = 10) -> tuple[Fraction, ...]:
    """All reduced fractions p/q in [0,1] with q at most max_denominator."""
    return tuple(
        sorted(
            {
                Fraction(p, q)
                for q in range(1, max_denominator + 1)
                for p in range(q + 1)
            }
        )
    )


def random_thfe(
    rng: random.Random,
    pool: Sequence[Fraction] = SMALL_POOL,
    max_cardinality: int = 3,
) -> Thfe:
    k = rng.randint(1, min(max_cardinality, len(pool)))
    return Thfe(rng.sample(pool, k))


def _random_states(rng: random.Random, max_states: int) -> list[str]:
    return [f"q{i}" for i in range(rng.randint(1, max_states))]


def _random_alphabet(rng: random.Random, max_symbols: int) -> list[str]:
    return ["a", "b", "c"][: rng.randint(1, max_symbols)]


def random_nthfa(
    rng: random.Random,
    max_states: int = 3,
    max_symbols: int = 2,
    pool: Sequence[Fraction] = SMALL_POOL,
    max_cardinality: int = 3,
    density: float = 0.8,
    alphabet: Sequence[str] | None = None,
) -> Nthfa:
    states = _random_states(rng, max_states)
    if alphabet is None:
        alphabet = _random_alphabet(rng, max_symbols)
    psi = {}
    for q in states:
        for a in alphabet:
            for p in states:
                if rng.random() < density:
                    value = random_thfe(rng, pool, max_cardinality)
                    if value != ZERO:
                        psi[(q, a, p)] = value
    final = {q: random_thfe(rng, pool, max_cardinality) for q in states}
    return Nthfa(states, alphabet, psi, states[0], final)


def random_zero_one_nthfa(
    rng: random.Random,
    max_states: int = 3,
    max_symbols: int = 2,
    pool: Sequence[Fraction] = SMALL_POOL,
    max_cardinality: int = 3,
    density: float = 0.6,
    alphabet: Sequence[str] | None = None,
) -> Nthfa:
    """Machine with {0}/{1} transition weights but arbitrary final values."""
    states = _random_states(rng, max_states)
    if alphabet is None:
        alphabet = _random_alphabet(rng, max_symbols)
    psi = {
        (q, a, p): Thfe([1])
        for q in states
        for a in alphabet
        for p in states
        if rng.random() < density
    }
    final = {q: random_thfe(rng, pool, max_cardinality) for q in states}
    return Nthfa(states, alphabet, psi, states[0], final)


def random_cnthfa(
    rng: random.Random,
    max_states: int = 3,
    max_symbols: int = 2,
    pool: Sequence[Fraction] = SMALL_POOL,
    max_cardinality: int = 3,
    density: float = 0.5,
    alphabet: Sequence[str] | None = None,
) -> Cnthfa:
    states = _random_states(rng, max_states)
    if alphabet is None:
        alphabet = _random_alphabet(rng, max_symbols)
    delta = {}
    for q in states:
        for a in alphabet:
            targets = {p for p in states if rng.random() < density}
            if targets:
                delta[(q, a)] = targets
    final = {q: random_thfe(rng, pool, max_cardinality) for q in states}
    return Cnthfa(states, alphabet, delta, states[0], final)


def random_cdthfa(
    rng: random.Random,
    max_states: int = 3,
    max_symbols: int = 2,
    pool: Sequence[Fraction] = SMALL_POOL,
    max_cardinality: int = 3,
    alphabet: Sequence[str] | None = None,
) -> Cdthfa:
    states = _random_states(rng, max_states)
    if alphabet is None:
        alphabet = _random_alphabet(rng, max_symbols)
    delta = {(q, a): rng.choice(states) for q in states for a in alphabet}
    final = {q: random_thfe(rng, pool, max_cardinality) for q in states}
    return Cdthfa(states, alphabet, delta, states[0], final)


def random_small_range_nthfa(
    rng: random.Random,
    max_vectors: int = 8,
    attempts: int = 500,
) -> tuple[Nthfa, int]:
    """A random machine whose reachable-vector count stays small, found by
    rejection sampling, together with that count."""
    for _ in range(attempts):
        m = random_nthfa(
            rng, max_states=2, max_symbols=2, pool=TIGHT_POOL, max_cardinality=2
        )
        try:
            count = len(reachable_vectors(m, max_vectors=max_vectors))
        except ClosureBudgetExceeded:
            continue
        return m, count
    raise RuntimeError(f"no machine with at most {max_vectors} vectors found")


def perturb_nthfa(rng: random.Random, m: Nthfa) -> Nthfa:
    """Copy of ``m`` with one transition weight or final value re-rolled;
    the result usually computes a different language (but may not)."""
    psi = dict(m.psi)
    final = dict(m.final_map)
    if rng.random() < 0.5:
        q = rng.choice(m.states)
        final[q] = random_thfe(rng)
    else:
        q = rng.choice(m.states)
        a = rng.choice(m.alphabet)
        p = rng.choice(m.states)
        value = random_thfe(rng)
        if value == ZERO:
            psi.pop((q, a, p), None)
        else:
            psi[(q, a, p)] = value
    return Nthfa(m.states, m.alphabet, psi, m.initial, final)
