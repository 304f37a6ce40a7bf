"""Exact simulator for a depth-truncated weakly monotone Fock space.

Basis vectors are weakly decreasing label tuples (the empty tuple is the
vacuum).  A creation with label i prepends i when i is at least the current
leading label, otherwise it kills the vector; an annihilation with label i
strips a matching leading label and kills anything else.  States are finite
rational-coefficient combinations of basis tuples, so every expectation
computed here is exact.

The 2n-th moment of the sum of the first m position operators (creation plus
annihilation for each label) comes out of iterating that sum on the vacuum;
a path returning to the vacuum after 2n steps never climbs above depth n, so
truncating at depth n loses nothing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

BasisTuple = tuple[int, ...]
FockState = dict[BasisTuple, Fraction]
Letter = tuple[int, int]  # (label, sign); sign +1 creates, -1 annihilates
OperatorWord = tuple[Letter, ...]  # leftmost letter acts last

DEFAULT_MOMENT_BOUND = 5

CREATE = 1
ANNIHILATE = -1


def vacuum_state() -> FockState:
    return {(): Fraction(1)}


def _add_term(state: FockState, key: BasisTuple, coeff: Fraction) -> None:
    new = state.get(key, Fraction(0)) + coeff
    if new == 0:
        state.pop(key, None)
    else:
        state[key] = new


def apply_annihilation(label: int, state: FockState) -> FockState:
    """Strip a leading ``label``; vectors led by anything else (and the
    vacuum) are killed."""
    out: FockState = {}
    for t, c in state.items():
        if t and t[0] == label:
            _add_term(out, t[1:], c)
    return out


def apply_creation(label: int, state: FockState, depth: Optional[int] = None) -> FockState:
    """Prepend ``label`` where it keeps the tuple weakly decreasing.

    Terms that would exceed ``depth`` are dropped (compression onto the
    truncated space); pass ``depth=None`` to disable truncation.
    """
    out: FockState = {}
    for t, c in state.items():
        if t and label < t[0]:
            continue
        if depth is not None and len(t) + 1 > depth:
            continue
        _add_term(out, (label,) + t, c)
    return out


def apply_letter(letter: Letter, state: FockState, depth: Optional[int] = None) -> FockState:
    label, sign = letter
    if label < 1:
        raise ValueError("labels must be positive")
    if sign == CREATE:
        return apply_creation(label, state, depth)
    if sign == ANNIHILATE:
        return apply_annihilation(label, state)
    raise ValueError(f"letter sign must be +1 or -1, got {sign}")


def apply_word(word: OperatorWord, state: FockState, depth: Optional[int] = None) -> FockState:
    """Apply a word of letters, rightmost letter first."""
    for letter in reversed(word):
        state = apply_letter(letter, state, depth)
        if not state:
            break
    return state


def apply_position_sum(m: int, state: FockState, depth: Optional[int] = None) -> FockState:
    """One application of the sum over labels 1..m of creation + annihilation."""
    out: FockState = {}
    for t, c in state.items():
        for label in range(1, m + 1):
            if t and t[0] == label:
                _add_term(out, t[1:], c)
            if (not t or label >= t[0]) and (depth is None or len(t) < depth):
                _add_term(out, (label,) + t, c)
    return out


def vacuum_expectation(word: OperatorWord, depth: Optional[int] = None) -> Fraction:
    """Coefficient of the vacuum in word . vacuum."""
    return apply_word(word, vacuum_state(), depth).get((), Fraction(0))


def states_equal(a: FockState, b: FockState) -> bool:
    return a == b  # zero coefficients are never stored


def inner_product(a: FockState, b: FockState) -> Fraction:
    """Pairing in the orthonormal tuple basis (coefficients here are real)."""
    if len(b) < len(a):
        a, b = b, a
    return sum((b[t] * c for t, c in a.items() if t in b), Fraction(0))


def basis_tuples(m: int, depth: int) -> Iterator[BasisTuple]:
    """All weakly decreasing tuples over {1, ..., m} up to the given length,
    vacuum first, in length-then-lexicographic order."""
    for length in range(depth + 1):
        for combo in itertools.combinations_with_replacement(range(1, m + 1), length):
            yield tuple(reversed(combo))


def moment_via_fock(
    m: int,
    n: int,
    depth: Optional[int] = None,
    bound: int = DEFAULT_MOMENT_BOUND,
) -> int:
    """2n-th vacuum moment of the sum of the first m position operators.

    Computed by 2n applications of the operator sum at truncation depth n
    (the default; deeper never changes the answer).  Exact integer.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise ValueError(f"n={n} exceeds the moment bound {bound}; raise `bound` explicitly")
    if depth is None:
        depth = n
    state = vacuum_state()
    for _ in range(2 * n):
        state = apply_position_sum(m, state, depth)
    value = state.get((), Fraction(0))
    assert value.denominator == 1
    return int(value)


def odd_power_vacuum_coefficient(m: int, n: int, depth: Optional[int] = None) -> Fraction:
    """Vacuum coefficient after 2n+1 applications of the operator sum (always 0)."""
    state = vacuum_state()
    for _ in range(2 * n + 1):
        state = apply_position_sum(m, state, depth if depth is not None else n + 1)
    return state.get((), Fraction(0))


# ---------------------------------------------------------------------------
# identity and independence checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    status: str  # "pass" or "fail"
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _single(t: BasisTuple) -> FockState:
    return {t: Fraction(1)}


def _word_on(word: OperatorWord, t: BasisTuple) -> FockState:
    return apply_word(word, _single(t))


def _alpha(j: int, k: int) -> int:
    return 1 if j >= k else 0


def _scale(state: FockState, c: Fraction | int) -> FockState:
    c = Fraction(c)
    if c == 0:
        return {}
    return {t: v * c for t, v in state.items()}


def check_operator_identities(m: int, depth: int) -> list[IdentityCheck]:
    """Mechanically verify the creation/annihilation relations on every basis
    tuple of depth at most ``depth - 1``.

    Covered relations, for labels in 1..m (A = annihilation, C = creation):
    ordered products vanish (C_i C_j = A_j A_i = 0 for i < j, A_i C_j = 0 for
    i != j), the projector absorption rules A_k A_j C_j = alpha(j,k) A_k and
    A_j C_j C_k = alpha(j,k) C_k, pass-through for j >= k, the two-projector
    minimum rule, the sandwich rule A_j A_k C_k C_j = alpha(k,j) A_j C_j,
    projector idempotence and power collapse, and adjointness of matrix
    elements.  Internal applications are untruncated so every equality is an
    exact operator statement.
    """
    if depth < 3:
        raise ValueError("depth must be at least 3 to exercise the identities")
    tuples = list(basis_tuples(m, depth - 1))
    labels = range(1, m + 1)
    checks: list[IdentityCheck] = []

    def run(name: str, cases) -> None:
        for descr, lhs_word, rhs_builder in cases:
            for t in tuples:
                lhs = _word_on(lhs_word, t)
                rhs = rhs_builder(t)
                if not states_equal(lhs, rhs):
                    checks.append(
                        IdentityCheck(name, "fail", f"{descr} on tuple {t}: {lhs} != {rhs}")
                    )
                    return
        checks.append(IdentityCheck(name, "pass"))

    zero = lambda t: {}

    run(
        "creation_order_vanishes",
        [
            (f"C_{i} C_{j}", ((i, CREATE), (j, CREATE)), zero)
            for i in labels
            for j in labels
            if i < j
        ],
    )
    run(
        "annihilation_order_vanishes",
        [
            (f"A_{j} A_{i}", ((j, ANNIHILATE), (i, ANNIHILATE)), zero)
            for i in labels
            for j in labels
            if i < j
        ],
    )
    run(
        "mixed_label_vanishes",
        [
            (f"A_{i} C_{j}", ((i, ANNIHILATE), (j, CREATE)), zero)
            for i in labels
            for j in labels
            if i != j
        ],
    )
    run(
        "annihilation_through_projector",
        [
            (
                f"A_{k} A_{j} C_{j}",
                ((k, ANNIHILATE), (j, ANNIHILATE), (j, CREATE)),
                (lambda t, j=j, k=k: _scale(_word_on(((k, ANNIHILATE),), t), _alpha(j, k))),
            )
            for j in labels
            for k in labels
        ],
    )
    run(
        "creation_through_projector",
        [
            (
                f"A_{j} C_{j} C_{k}",
                ((j, ANNIHILATE), (j, CREATE), (k, CREATE)),
                (lambda t, j=j, k=k: _scale(_word_on(((k, CREATE),), t), _alpha(j, k))),
            )
            for j in labels
            for k in labels
        ],
    )
    run(
        "projector_passes_lower_annihilation",
        [
            (
                f"A_{j} C_{j} A_{k}",
                ((j, ANNIHILATE), (j, CREATE), (k, ANNIHILATE)),
                (lambda t, k=k: _word_on(((k, ANNIHILATE),), t)),
            )
            for j in labels
            for k in labels
            if j >= k
        ],
    )
    run(
        "projector_passes_lower_creation",
        [
            (
                f"C_{k} A_{j} C_{j}",
                ((k, CREATE), (j, ANNIHILATE), (j, CREATE)),
                (lambda t, k=k: _word_on(((k, CREATE),), t)),
            )
            for j in labels
            for k in labels
            if j >= k
        ],
    )
    run(
        "projector_minimum_rule",
        [
            (
                f"A_{j} C_{j} A_{k} C_{k}",
                ((j, ANNIHILATE), (j, CREATE), (k, ANNIHILATE), (k, CREATE)),
                (
                    lambda t, j=j, k=k: _word_on(
                        ((min(j, k), ANNIHILATE), (min(j, k), CREATE)), t
                    )
                ),
            )
            for j in labels
            for k in labels
        ],
    )
    run(
        "sandwich_rule",
        [
            (
                f"A_{j} A_{k} C_{k} C_{j}",
                ((j, ANNIHILATE), (k, ANNIHILATE), (k, CREATE), (j, CREATE)),
                (
                    lambda t, j=j, k=k: _scale(
                        _word_on(((j, ANNIHILATE), (j, CREATE)), t), _alpha(k, j)
                    )
                ),
            )
            for j in labels
            for k in labels
        ],
    )
    run(
        "projector_idempotent",
        [
            (
                f"(A_{i} C_{i})^2",
                ((i, ANNIHILATE), (i, CREATE), (i, ANNIHILATE), (i, CREATE)),
                (lambda t, i=i: _word_on(((i, ANNIHILATE), (i, CREATE)), t)),
            )
            for i in labels
        ],
    )
    run(
        "projector_power_collapse",
        [
            (
                f"A_{i}^{p} C_{i}^{p}",
                tuple([(i, ANNIHILATE)] * p + [(i, CREATE)] * p),
                (lambda t, i=i: _word_on(((i, ANNIHILATE), (i, CREATE)), t)),
            )
            for i in labels
            for p in (2, 3)
        ],
    )

    # adjointness of matrix elements: <C_i u, v> == <u, A_i v>
    adjoint_witness = None
    for i in labels:
        for u in tuples:
            cu = _word_on(((i, CREATE),), u)
            for v in tuples:
                lhs = inner_product(cu, _single(v))
                rhs = inner_product(_single(u), _word_on(((i, ANNIHILATE),), v))
                if lhs != rhs:
                    adjoint_witness = f"label {i}, u={u}, v={v}: {lhs} != {rhs}"
                    break
            if adjoint_witness:
                break
        if adjoint_witness:
            break
    checks.append(
        IdentityCheck(
            "adjoint_matrix_elements",
            "fail" if adjoint_witness else "pass",
            adjoint_witness,
        )
    )
    return checks


@dataclass(frozen=True)
class AlgebraElement:
    """Rational combination of words in a single label's creation/annihilation."""

    label: int
    terms: tuple[tuple[Fraction, OperatorWord], ...]

    def __post_init__(self) -> None:
        for _, word in self.terms:
            if not word:
                raise ValueError("constant terms are not allowed (identity not in the algebra)")
            if any(label != self.label for label, _ in word):
                raise ValueError("all letters must share the element's label")

    def apply(self, state: FockState, depth: Optional[int] = None) -> FockState:
        out: FockState = {}
        for coeff, word in self.terms:
            for t, c in apply_word(word, state, depth).items():
                _add_term(out, t, c * coeff)
        return out

    def vacuum_expectation(self) -> Fraction:
        return self.apply(vacuum_state()).get((), Fraction(0))


def random_algebra_element(
    rng: random.Random, label: int, max_terms: int = 3, max_len: int = 2
) -> AlgebraElement:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(
            (label, rng.choice((CREATE, ANNIHILATE))) for _ in range(rng.randint(1, max_len))
        )
        num = rng.choice([x for x in range(-6, 7) if x != 0])
        coeff = Fraction(num, rng.randint(1, 6))
        terms.append((coeff, word))
    return AlgebraElement(label, tuple(terms))


@dataclass
class IndependenceReport:
    """Outcome of randomized monotone-independence checks (all equalities exact)."""

    seed: int
    trials: int
    passed: bool = True
    middle_factorization_checks: int = 0
    product_split_checks: int = 0
    boundary_product_checks: int = 0
    failures: list[str] = field(default_factory=list)

    def record_failure(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)


def _sample_valley_labels(rng: random.Random, m: int) -> list[int]:
    """Index sequences that strictly decrease to a minimum then strictly increase."""
    length = rng.randint(2, min(4, 2 * m - 1))
    while True:
        k = rng.randint(1, length)  # position of the minimum
        arm = max(k - 1, length - k)  # longest strict run above the minimum
        if arm <= m - 1:
            break
    low = rng.randint(1, m - arm)
    down_rest = sorted(rng.sample(range(low + 1, m + 1), k - 1), reverse=True)
    up = sorted(rng.sample(range(low + 1, m + 1), length - k))
    return down_rest + [low] + up


def check_monotone_independence(
    m: int,
    depth: int = 8,
    trials: int = 100,
    seed: int = 0,
    max_len: int = 2,
) -> IndependenceReport:
    """Randomized exact verification of the monotone-independence laws.

    Per trial: (a) for sampled labels i < j > k and random elements of the
    corresponding single-label algebras, the middle element factors out of
    the triple product as its vacuum expectation, checked as an operator
    identity on every basis tuple of depth at most ``depth - 3*max_len``;
    (b) for a sampled valley-shaped label sequence, the vacuum expectation of
    the product splits into the product of vacuum expectations; (c) for
    sampled k < r, the product of two elements applied to the vacuum factors
    through the right element's expectation.  All equalities are exact over
    the rationals; internal applications are untruncated so depth never
    interferes.
    """
    if m < 2:
        raise ValueError("independence checks need at least two labels")
    rng = random.Random(seed)
    report = IndependenceReport(seed=seed, trials=trials)
    v_depth = max(0, depth - 3 * max_len)
    test_tuples = list(basis_tuples(m, v_depth))

    for trial in range(trials):
        # (a) middle element factors out of i < j > k products
        j = rng.randint(2, m)
        i = rng.randint(1, j - 1)
        k = rng.randint(1, j - 1)
        p_i = random_algebra_element(rng, i, max_len=max_len)
        p_j = random_algebra_element(rng, j, max_len=max_len)
        p_k = random_algebra_element(rng, k, max_len=max_len)
        w_j = p_j.vacuum_expectation()
        for t in test_tuples:
            lhs = p_i.apply(p_j.apply(p_k.apply(_single(t))))
            rhs = _scale(p_i.apply(p_k.apply(_single(t))), w_j)
            if not states_equal(lhs, rhs):
                report.record_failure(
                    f"trial {trial}: middle factorization failed for (i,j,k)=({i},{j},{k}) on {t}"
                )
                break
        report.middle_factorization_checks += 1

        # (b) vacuum expectation of a valley-shaped product splits
        labels = _sample_valley_labels(rng, m)
        elements = [random_algebra_element(rng, lab, max_len=max_len) for lab in labels]
        state = vacuum_state()
        for el in reversed(elements):
            state = el.apply(state)
        lhs_val = state.get((), Fraction(0))
        rhs_val = Fraction(1)
        for el in elements:
            rhs_val *= el.vacuum_expectation()
        if lhs_val != rhs_val:
            report.record_failure(
                f"trial {trial}: product split failed for labels {labels}: {lhs_val} != {rhs_val}"
            )
        report.product_split_checks += 1

        # (c) ordered pair acting on the vacuum
        k_low = rng.randint(1, m - 1)
        r_high = rng.randint(k_low + 1, m)
        p_low = random_algebra_element(rng, k_low, max_len=max_len)
        p_high = random_algebra_element(rng, r_high, max_len=max_len)
        lhs_state = p_low.apply(p_high.apply(vacuum_state()))
        rhs_state = _scale(p_low.apply(vacuum_state()), p_high.vacuum_expectation())
        if not states_equal(lhs_state, rhs_state):
            report.record_failure(
                f"trial {trial}: boundary product failed for (k,r)=({k_low},{r_high})"
            )
        report.boundary_product_checks += 1

    return report
