"""Closure constructions on hesitant automata: union, range computation,
level decomposition and recomposition, crisp embedding, crispification,
determinization, intersection, and an exact equivalence decider.

Several constructions rest on one backbone: the set of value vectors an
Nthfa can reach is finite, and the step from one vector to the next is
deterministic per symbol.  Saturating that step therefore yields a finite
deterministic "vector automaton" that knows the exact value of every word,
which is what range computation, level cuts, and the equivalence decider
need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .classic import Nfa, subset_name
from .errors import AlphabetMismatch, ClosureBudgetExceeded
from .hesitant import Cdthfa, Cnthfa, Nthfa
from .hfe import ONE, ZERO, Thfe, inf_combination, leq, sup_combination, sup_combination_n

__all__ = [
    "DEFAULT_MAX_VECTORS",
    "EquivalenceVerdict",
    "LevelDecomposition",
    "union_nthfa",
    "h_union_pointwise",
    "reachable_vectors",
    "compute_range",
    "level_automaton",
    "decompose",
    "eval_decomposition",
    "recompose",
    "embed_cnthfa",
    "crispify_nthfa",
    "determinize_cnthfa",
    "intersect_cdthfa",
    "equivalent",
    "constant_automaton",
    "hyperbolic_language_eval",
]

DEFAULT_MAX_VECTORS = 100_000


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of a language comparison; the counterexample, present exactly
    when not equivalent, evaluates to different THFEs under the two inputs."""

    equivalent: bool
    counterexample: tuple[str, ...] | None


class LevelDecomposition:
    """A language represented as level cuts: finitely many (key, NFA) pairs
    where each NFA accepts the words whose value dominates its key.  The
    represented value of a word is the join of all applicable keys, {0} when
    none applies."""

    def __init__(self, alphabet: Sequence[str], levels: Iterable[tuple[Thfe, Nfa]]):
        self.alphabet = tuple(alphabet)
        self.levels = tuple(levels)
        seen: set[Thfe] = set()
        for key, nfa in self.levels:
            if key in seen:
                raise ValueError(f"duplicate level key {key}")
            seen.add(key)
            if set(nfa.alphabet) != set(self.alphabet):
                raise AlphabetMismatch(
                    f"level {key} uses alphabet {sorted(nfa.alphabet)}, "
                    f"expected {sorted(self.alphabet)}"
                )


def _require_same_alphabet(a, b) -> None:
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatch(
            f"alphabets differ: {sorted(a.alphabet)} vs {sorted(b.alphabet)}"
        )


def union_nthfa(m1: Nthfa, m2: Nthfa) -> Nthfa:
    """Automaton computing the pointwise join of the two input languages.

    Both input machines are copied side by side under "L."/"R." prefixes
    (which guarantees disjoint state names), and a fresh initial state is
    added that mirrors every transition leaving either original initial
    state.  Its final value is the join of the two initial final values, so
    the empty word also evaluates to the join.
    """
    _require_same_alphabet(m1, m2)
    fresh = "q0"
    states = [fresh]
    states += [f"L.{q}" for q in m1.states]
    states += [f"R.{q}" for q in m2.states]
    psi: dict[tuple[str, str, str], Thfe] = {}
    for (q, a, p), value in m1.psi.items():
        psi[(f"L.{q}", a, f"L.{p}")] = value
        if q == m1.initial:
            psi[(fresh, a, f"L.{p}")] = value
    for (q, a, p), value in m2.psi.items():
        psi[(f"R.{q}", a, f"R.{p}")] = value
        if q == m2.initial:
            psi[(fresh, a, f"R.{p}")] = value
    final: dict[str, Thfe] = {
        fresh: sup_combination(m1.final_map[m1.initial], m2.final_map[m2.initial])
    }
    for q, value in m1.final_map.items():
        final[f"L.{q}"] = value
    for q, value in m2.final_map.items():
        final[f"R.{q}"] = value
    return Nthfa(states, m1.alphabet, psi, fresh, final)


def h_union_pointwise(
    f1_eval: Callable[[Sequence[str]], Thfe],
    f2_eval: Callable[[Sequence[str]], Thfe],
    w: Sequence[str],
) -> Thfe:
    """Pointwise join of two language evaluators; the union oracle."""
    return sup_combination(f1_eval(w), f2_eval(w))


def _saturate(
    m: Nthfa, max_vectors: int | None
) -> tuple[list[tuple[Thfe, ...]], dict[tuple[int, str], int], list[Thfe]]:
    """Breadth-first saturation of the reachable value vectors.

    Returns the vectors in discovery order (index 0 is the empty-word
    vector), the per-symbol successor map on vector indices, and the machine
    value of each vector.  Discovery order is fixed by state and alphabet
    order, so every construction built on top is deterministic.
    """
    budget = DEFAULT_MAX_VECTORS if max_vectors is None else max_vectors
    start = tuple(ONE if q == m.initial else ZERO for q in m.states)
    order: list[tuple[Thfe, ...]] = [start]
    index: dict[tuple[Thfe, ...], int] = {start: 0}
    delta: dict[tuple[int, str], int] = {}
    i = 0
    while i < len(order):
        vector = dict(zip(m.states, order[i]))
        for a in m.alphabet:
            stepped = m.advance(vector, a)
            successor = tuple(stepped[q] for q in m.states)
            if successor not in index:
                if len(order) >= budget:
                    raise ClosureBudgetExceeded(
                        f"more than {budget} reachable value vectors"
                    )
                index[successor] = len(order)
                order.append(successor)
            delta[(i, a)] = index[successor]
        i += 1
    values = [m.value_of(dict(zip(m.states, vec))) for vec in order]
    return order, delta, values


def reachable_vectors(
    m: Nthfa, max_vectors: int | None = None
) -> list[dict[str, Thfe]]:
    """All value vectors the machine can reach, in discovery order."""
    order, _, _ = _saturate(m, max_vectors)
    return [dict(zip(m.states, vec)) for vec in order]


def compute_range(m: Nthfa, max_vectors: int | None = None) -> frozenset[Thfe]:
    """The exact set of values the language attains over all words."""
    _, _, values = _saturate(m, max_vectors)
    return frozenset(values)


def _level_nfa(
    alphabet: Sequence[str],
    delta: dict[tuple[int, str], int],
    values: list[Thfe],
    key: Thfe,
) -> Nfa:
    states = [f"v{i}" for i in range(len(values))]
    nfa_delta = {(f"v{i}", a): {f"v{j}"} for (i, a), j in delta.items()}
    finals = [f"v{i}" for i, value in enumerate(values) if leq(key, value)]
    return Nfa(states, alphabet, nfa_delta, "v0", finals)


def level_automaton(m: Nthfa, k: Thfe, max_vectors: int | None = None) -> Nfa:
    """NFA accepting exactly the words whose value dominates ``k``.

    Built on the vector automaton: states are the reachable value vectors,
    and a vector is final when its machine value dominates ``k``.  Cutting
    individual transition weights at ``k`` instead would not recognize this
    language: a word's value is a join over many paths, and the order is not
    compatible with inf-combination on multi-valued elements, so the value
    may dominate ``k`` although no single path does.  Tracking exact vectors
    sidesteps that entirely.
    """
    _, delta, values = _saturate(m, max_vectors)
    return _level_nfa(m.alphabet, delta, values, k)


def decompose(m: Nthfa, max_vectors: int | None = None) -> LevelDecomposition:
    """One level automaton per range value, keys sorted ascending."""
    _, delta, values = _saturate(m, max_vectors)
    keys = sorted(set(values), key=lambda t: t.degrees)
    return LevelDecomposition(
        m.alphabet, ((k, _level_nfa(m.alphabet, delta, values, k)) for k in keys)
    )


def eval_decomposition(l: LevelDecomposition, w: Sequence[str]) -> Thfe:
    """Join of all level keys whose NFA accepts ``w``; {0} when none does."""
    return sup_combination_n(k for k, nfa in l.levels if nfa.accepts(w))


def recompose(l: LevelDecomposition) -> Nthfa:
    """Collapse a level decomposition back into a single Nthfa.

    Each level NFA is determinized, turned into a weight-{0}/{1} machine
    whose accepting states carry the level key as final value, and the
    per-level machines are folded together with union_nthfa.  The resulting
    language equals eval_decomposition(l, .) pointwise.
    """
    machines: list[Nthfa] = []
    for key, nfa in l.levels:
        dfa = nfa.to_dfa()
        psi = {(q, a, p): ONE for (q, a), p in dfa.delta.items()}
        final = {q: (key if q in dfa.finals else ZERO) for q in dfa.states}
        machines.append(Nthfa(dfa.states, dfa.alphabet, psi, dfa.initial, final))
    if not machines:
        return Nthfa(["q0"], l.alphabet, {}, "q0", {"q0": ZERO})
    combined = machines[0]
    for machine in machines[1:]:
        combined = union_nthfa(combined, machine)
    return combined


def embed_cnthfa(n: Cnthfa) -> Nthfa:
    """The Nthfa with weight {1} on every crisp transition and {0} elsewhere;
    it computes the same language as ``n``."""
    psi = {
        (q, a, p): ONE for (q, a), targets in n.delta.items() for p in targets
    }
    return Nthfa(n.states, n.alphabet, psi, n.initial, n.final_map)


def _fresh_sink_name(taken: Iterable[str]) -> str:
    taken = set(taken)
    name = "q_aleph"
    while name in taken:
        name += "_"
    return name


def _crispify_zero_one(m: Nthfa, metadata: dict | None = None) -> Cnthfa:
    sink = _fresh_sink_name(m.states)
    states = list(m.states) + [sink]
    delta: dict[tuple[str, str], set[str]] = {}
    for q in m.states:
        for a in m.alphabet:
            targets = {p for p in m.states if m.psi.get((q, a, p)) == ONE}
            # Any remaining target carries weight {0}: that case routes to the sink.
            if len(targets) < len(m.states):
                targets.add(sink)
            delta[(q, a)] = targets
    for a in m.alphabet:
        delta[(sink, a)] = {sink}
    final = dict(m.final_map)
    final[sink] = ZERO
    return Cnthfa(states, m.alphabet, delta, m.initial, final, metadata)


def crispify_nthfa(m: Nthfa, max_vectors: int | None = None) -> Cnthfa:
    """Convert an Nthfa to a crisp-nondeterministic machine, preserving the
    language pointwise.

    Machines whose weights are already all {0} or {1} convert directly: the
    {1}-transitions become crisp edges and a fresh absorbing sink with final
    value {0} picks up every {0} case, adding exactly one state.  General
    machines are first normalized to that form via decompose/recompose; the
    result's metadata records that the normalization happened.
    """
    if m.is_zero_one():
        return _crispify_zero_one(m)
    normalized = recompose(decompose(m, max_vectors))
    return _crispify_zero_one(normalized, metadata={"normalized": True})


def determinize_cnthfa(n: Cnthfa) -> Cdthfa:
    """Subset construction lifted to THFE-valued finals.

    Only subsets reachable from {initial} are materialized; a subset's final
    value is the join of its members' final values, and the empty subset
    (reachable when the crisp transition map is partial) gets {0}.
    """
    initial_subset = frozenset({n.initial})
    order: list[frozenset[str]] = [initial_subset]
    index: dict[frozenset[str], int] = {initial_subset: 0}
    delta: dict[tuple[str, str], str] = {}
    i = 0
    while i < len(order):
        subset = order[i]
        for a in n.alphabet:
            target = frozenset(p for q in subset for p in n.delta.get((q, a), ()))
            if target not in index:
                index[target] = len(order)
                order.append(target)
            delta[(subset_name(subset), a)] = subset_name(target)
        i += 1
    names = [subset_name(s) for s in order]
    final = {
        subset_name(s): sup_combination_n(n.final_map[q] for q in n.states if q in s)
        for s in order
    }
    return Cdthfa(names, n.alphabet, delta, subset_name(initial_subset), final)


def intersect_cdthfa(d1: Cdthfa, d2: Cdthfa) -> Cdthfa:
    """Product automaton computing the pointwise inf-combination of the two
    languages; only reachable state pairs are materialized."""
    _require_same_alphabet(d1, d2)
    alphabet = d1.alphabet
    start = (d1.initial, d2.initial)
    order: list[tuple[str, str]] = [start]
    index: dict[tuple[str, str], int] = {start: 0}
    delta: dict[tuple[str, str], str] = {}

    def name(pair: tuple[str, str]) -> str:
        return f"({pair[0]},{pair[1]})"

    i = 0
    while i < len(order):
        q, p = order[i]
        for a in alphabet:
            target = (d1.delta[(q, a)], d2.delta[(p, a)])
            if target not in index:
                index[target] = len(order)
                order.append(target)
            delta[(name((q, p)), a)] = name(target)
        i += 1
    names = [name(pair) for pair in order]
    final = {
        name((q, p)): inf_combination(d1.final_map[q], d2.final_map[p])
        for q, p in order
    }
    return Cdthfa(names, alphabet, delta, name(start), final)


def _to_cdthfa(a, max_vectors: int | None) -> Cdthfa:
    if isinstance(a, Cdthfa):
        return a
    if isinstance(a, Cnthfa):
        return determinize_cnthfa(a)
    if isinstance(a, Nthfa):
        return determinize_cnthfa(crispify_nthfa(a, max_vectors))
    raise TypeError(f"not a hesitant automaton: {type(a).__name__}")


def equivalent(a, b, max_vectors: int | None = None) -> EquivalenceVerdict:
    """Decide whether two hesitant automata compute the same language.

    Both inputs are brought to crisp-deterministic form, then the reachable
    pairs of the synchronized product are explored breadth-first in alphabet
    order.  The languages are equal iff every reachable pair carries equal
    final values; the first violating pair found yields the counterexample,
    which is therefore the earliest distinguishing word in length-then-
    alphabet enumeration order.
    """
    _require_same_alphabet(a, b)
    alphabet = a.alphabet
    d1 = _to_cdthfa(a, max_vectors)
    d2 = _to_cdthfa(b, max_vectors)
    start = (d1.initial, d2.initial)
    if d1.final_map[start[0]] != d2.final_map[start[1]]:
        return EquivalenceVerdict(equivalent=False, counterexample=())
    seen = {start}
    queue: list[tuple[tuple[str, str], tuple[str, ...]]] = [(start, ())]
    i = 0
    while i < len(queue):
        (q, p), word = queue[i]
        i += 1
        for a_sym in alphabet:
            target = (d1.delta[(q, a_sym)], d2.delta[(p, a_sym)])
            if target in seen:
                continue
            seen.add(target)
            extended = word + (a_sym,)
            if d1.final_map[target[0]] != d2.final_map[target[1]]:
                return EquivalenceVerdict(equivalent=False, counterexample=extended)
            queue.append((target, extended))
    return EquivalenceVerdict(equivalent=True, counterexample=None)


def constant_automaton(x: Thfe, alphabet: Sequence[str]) -> Nthfa:
    """Two-state machine whose language is constantly ``x``: every transition
    weight and every final value equals ``x``."""
    states = ["q0", "q1"]
    psi = {(q, a, p): x for q in states for a in alphabet for p in states}
    return Nthfa(states, alphabet, psi, "q0", {q: x for q in states})


def hyperbolic_language_eval(w: Sequence[str]) -> Thfe:
    """Value {1/(2^i + 1) : 0 <= i <= |w|}; a language whose range grows with
    the word length and therefore fits no finite-range machine."""
    return Thfe(Fraction(1, 2**i + 1) for i in range(len(w) + 1))
