"""End-to-end arbitration: closed-form spectra against the exact oracle.

The oracle (group -> graph -> matrix -> characteristic polynomial) is ground
truth; the closed forms are claims under test.  A mismatch never aborts a
grid run: it produces a report carrying the first differing coefficient and a
factored residual to aid diagnosis.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .closedform import (
    QuadraticEig,
    SpectrumSpec,
    spectrum_for,
    spectrum_to_polynomial,
)
from .exactalg import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    is_perfect_square,
    rational_roots_of_quadratic,
)
from .graphs import (
    ALL_KINDS,
    MatrixKind,
    NotCompleteMultipartite,
    PartitionStructure,
    distance_matrix,
    matrix_of_kind,
    non_commuting_graph,
    part_major,
)
from .groups import (
    METACYCLIC,
    Q4N,
    QD,
    U6N,
    GroupSpec,
    enumerate_elements,
)

DEFAULT_ORDER_CAP = 150


class OrderCapExceeded(ValueError):
    """Graph order exceeds the configured verification cap."""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one closed-form-versus-oracle comparison."""

    group: GroupSpec
    kind: MatrixKind
    order: int
    matched: bool
    oracle_poly: IntPolynomial
    closed_poly: IntPolynomial
    partition: PartitionStructure | None
    diff_summary: str = ""
    residual: IntPolynomial | None = None
    unmatched_closed: tuple[tuple[object, int], ...] = ()
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.matched and self.error is None


@dataclass(frozen=True)
class IntegralityRecord:
    """Integrality of one spectrum: the stated condition vs computation."""

    group: GroupSpec
    kind: MatrixKind
    predicted_integral: bool
    computed_integral: bool
    witness: int | None = None
    note: str = ""

    @property
    def agree(self) -> bool:
        return self.predicted_integral == self.computed_integral


def oracle_matrix(spec: GroupSpec, kind: MatrixKind) -> tuple[IntMatrix, PartitionStructure]:
    """Group -> graph -> certified part-major ordering -> matrix of the kind."""
    group = enumerate_elements(spec)
    graph, partition = part_major(non_commuting_graph(group))
    return matrix_of_kind(distance_matrix(graph), kind), partition


def _factor_out(
    oracle: IntPolynomial, spectrum: SpectrumSpec
) -> tuple[IntPolynomial, tuple[tuple[object, int], ...]]:
    """Divide every closed-form factor out of the oracle polynomial.

    Returns the residual oracle factor and the closed-form entries (with
    leftover multiplicities) that did not divide.
    """
    residual = oracle
    leftover = []
    for desc, mult in spectrum.entries:
        if isinstance(desc, QuadraticEig):
            factor = IntPolynomial((desc.p, -desc.s, 1))
        else:
            factor = IntPolynomial.x_minus(desc)
        used = 0
        while used < mult:
            quot, rem = residual.divmod_monic(factor)
            if not rem.is_zero:
                break
            residual = quot
            used += 1
        if used < mult:
            leftover.append((desc, mult - used))
    return residual, tuple(leftover)


def _first_diff(a: IntPolynomial, b: IntPolynomial) -> str:
    ca, cb = a.coeffs, b.coeffs
    for i in range(max(len(ca), len(cb))):
        va = ca[i] if i < len(ca) else 0
        vb = cb[i] if i < len(cb) else 0
        if va != vb:
            return f"first differing coefficient at x^{i}: oracle={va}, closed={vb}"
    return ""


def verify_instance(
    spec: GroupSpec, kind: MatrixKind, order_cap: int = DEFAULT_ORDER_CAP
) -> VerificationReport:
    """Compare the closed-form spectrum polynomial with the oracle, exactly."""
    group = enumerate_elements(spec)
    graph = non_commuting_graph(group)
    if graph.order > order_cap:
        raise OrderCapExceeded(
            f"{spec.label()} graph order {graph.order} exceeds cap {order_cap}"
        )
    graph, partition = part_major(graph)
    matrix = matrix_of_kind(distance_matrix(graph), kind)
    oracle = char_poly(matrix)
    closed = spectrum_to_polynomial(spectrum_for(spec, kind))
    if oracle == closed:
        return VerificationReport(
            spec, kind, graph.order, True, oracle, closed, partition
        )
    residual, leftover = _factor_out(oracle, spectrum_for(spec, kind))
    return VerificationReport(
        spec,
        kind,
        graph.order,
        False,
        oracle,
        closed,
        partition,
        diff_summary=_first_diff(oracle, closed),
        residual=residual,
        unmatched_closed=leftover,
    )


def _verify_job(args: tuple[GroupSpec, MatrixKind, int]) -> VerificationReport:
    spec, kind, cap = args
    try:
        return verify_instance(spec, kind, cap)
    except (OrderCapExceeded, NotCompleteMultipartite, ValueError) as exc:
        return VerificationReport(
            spec,
            kind,
            spec.order,
            False,
            IntPolynomial(),
            IntPolynomial(),
            None,
            error=f"{type(exc).__name__}: {exc}",
        )


def verify_grid(
    specs: list[GroupSpec],
    kinds: tuple[MatrixKind, ...] = ALL_KINDS,
    order_cap: int = DEFAULT_ORDER_CAP,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run verify_instance over the whole grid, never aborting on one failure.

    Instances are independent pure computations; with jobs > 1 they run in a
    process pool.  Output order is always by (spec, kind) position, not by
    completion time.
    """
    work = [(spec, kind, order_cap) for spec in specs for kind in kinds]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_job, work, chunksize=1))
    return [_verify_job(w) for w in work]


def default_grid() -> list[GroupSpec]:
    """The desk-scale parameter grid: every instance has graph order <= 150."""
    specs = [GroupSpec.q4n(n) for n in range(2, 13)]
    specs += [GroupSpec.qd(n) for n in range(4, 8)]
    specs += [GroupSpec.u6n(n) for n in range(1, 11)]
    specs += [GroupSpec.metacyclic(m, n) for m in range(3, 11) for n in range(1, 5)]
    return specs


def _both_integral(roots: tuple[Fraction, Fraction] | None) -> bool:
    return roots is not None and all(r.denominator == 1 for r in roots)


def _t_quadratic(spec: GroupSpec) -> tuple[int, int, int] | None:
    """The quadratic satisfied by the scale t in the signless-Laplacian pair."""
    if spec.family == Q4N:
        n = spec.n
        return (2 * n - 2, 10 - 4 * n, -2 * n)
    if spec.family == QD:
        half = 2 ** (spec.n - 1)
        return (half - 2, -(2 * half - 10), -half)
    if spec.family == METACYCLIC:
        m = spec.m
        if m % 2:
            return (m - 1, -(2 * m - 5), -m)
        if m > 4:
            return (m - 2, -2 * (m - 5), -m)
    return None


def predicted_integral(spec: GroupSpec, kind: MatrixKind) -> tuple[bool, int | None, str]:
    """The stated arithmetic integrality condition, evaluated exactly.

    Distance: the square-free core of the surd pair must be a perfect square.
    Distance Laplacian: always integral.  Signless Laplacian: both roots t of
    the family's quadratic must be integers (U_6n and M_8n are stated as
    always integral).  Returns (predicted, witness, note); the witness is the
    integer square root when one certifies the prediction, and for a rational
    non-integral t the note records its denominator as evidence.
    """
    if kind == MatrixKind.DISTANCE_LAPLACIAN:
        return True, None, "integral for all parameters"
    if kind == MatrixKind.DISTANCE:
        if spec.family == Q4N:
            core = 5 * spec.n * spec.n - 10 * spec.n + 9
        elif spec.family == QD:
            q = 2 ** (spec.n - 2)
            core = 5 * q * q - 10 * q + 9
        elif spec.family == U6N:
            core = 6 * spec.n * spec.n
        elif spec.m % 2:
            core = 5 * spec.m * spec.m - 10 * spec.m + 9
        else:
            core = 5 * spec.m * spec.m - 20 * spec.m + 36
        root = is_perfect_square(core)
        return root is not None, root, f"square core {core}"
    if spec.family == U6N:
        return True, None, "integral for all parameters"
    if spec.family == METACYCLIC and spec.m == 4:
        return True, None, "integral for all parameters"
    tquad = _t_quadratic(spec)
    roots = rational_roots_of_quadratic(*tquad)
    if _both_integral(roots):
        return True, is_perfect_square(tquad[1] ** 2 - 4 * tquad[0] * tquad[2]), "integral t"
    if roots is not None:
        dens = sorted({r.denominator for r in roots if r.denominator != 1})
        return False, None, f"rational t with denominator {dens[0]}"
    return False, None, "irrational t"


def integrality_record(spec: GroupSpec, kind: MatrixKind) -> IntegralityRecord:
    predicted, witness, note = predicted_integral(spec, kind)
    computed = spectrum_for(spec, kind).is_integral
    return IntegralityRecord(spec, kind, predicted, computed, witness, note)


def search_integral(
    specs: list[GroupSpec], kind: MatrixKind
) -> list[IntegralityRecord]:
    """Records with predicted_integral true, plus every disagreement record.

    A disagreement (predicted != computed) is a finding about the stated
    condition and is always included, never silently dropped.
    """
    out = []
    for spec in specs:
        rec = integrality_record(spec, kind)
        if rec.predicted_integral or not rec.agree:
            out.append(rec)
    return out
