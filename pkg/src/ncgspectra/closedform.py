"""Closed-form spectra of the non-commuting graphs of the four families.

Every function here transcribes a stated closed form exactly as written,
including forms suspected of being misprints; the verifier, not this module,
arbitrates each claim against the characteristic-polynomial oracle.

Conjugate surd eigenvalue pairs are stored as monic integer quadratics by
(sum, product), never as floating radicals.  Whenever such a pair has a
perfect-square discriminant it is normalized into its two integer roots, so no
pair with a square discriminant ever appears in output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .exactalg import (
    IntMatrix,
    IntPolynomial,
    POLY_ONE,
    is_perfect_square,
    rational_roots_of_quadratic,
)
from .graphs import (
    MatrixKind,
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
    InvalidParameters,
    enumerate_elements,
)


class NonIntegralSpectrum(ValueError):
    """A non-integer rational eigenvalue survived normalization."""


@dataclass(frozen=True)
class QuadraticEig:
    """The two roots of x^2 - s*x + p, stored exactly by sum and product."""

    s: int
    p: int

    @property
    def discriminant(self) -> int:
        return self.s * self.s - 4 * self.p

    def __str__(self) -> str:
        return str(IntPolynomial((self.p, -self.s, 1)))

    def integer_roots(self) -> tuple[int, int] | None:
        """Both roots when the discriminant is a perfect square, else None.

        A monic integer quadratic with rational roots has integer roots, and
        s and sqrt(disc) always share parity, so the halving below is exact.
        """
        sq = is_perfect_square(self.discriminant)
        if sq is None:
            return None
        if (self.s - sq) % 2:
            raise ArithmeticError(f"parity violation in {self}")
        return ((self.s - sq) // 2, (self.s + sq) // 2)


EigDesc = Union[int, QuadraticEig]


@dataclass(frozen=True)
class SpectrumSpec:
    """Exact eigenvalue multiset: integers plus conjugate quadratic pairs."""

    order: int
    kind: MatrixKind
    entries: tuple[tuple[EigDesc, int], ...]

    @property
    def eigenvalue_count(self) -> int:
        return sum(
            (2 if isinstance(d, QuadraticEig) else 1) * m for d, m in self.entries
        )

    @property
    def eigenvalue_sum(self) -> int:
        return sum(
            (d.s if isinstance(d, QuadraticEig) else d) * m for d, m in self.entries
        )

    @property
    def is_integral(self) -> bool:
        return all(isinstance(d, int) for d, _ in self.entries)

    def multiplicity(self, value: int) -> int:
        for d, m in self.entries:
            if d == value:
                return m
        return 0

    def to_polynomial(self) -> IntPolynomial:
        return spectrum_to_polynomial(self)


def make_spectrum(
    order: int, kind: MatrixKind, raw: Iterable[tuple[EigDesc, int]]
) -> SpectrumSpec:
    """Normalize, merge and order raw entries into a canonical SpectrumSpec.

    Pairs with square discriminant are split into integers, zero
    multiplicities are dropped, duplicates merged, and the bookkeeping
    (eigenvalue count == order) is enforced.
    """
    ints: dict[int, int] = {}
    pairs: dict[QuadraticEig, int] = {}
    for desc, mult in raw:
        if mult < 0:
            raise ValueError(f"negative multiplicity {mult} for {desc}")
        if mult == 0:
            continue
        if isinstance(desc, QuadraticEig):
            roots = desc.integer_roots()
            if roots is None:
                pairs[desc] = pairs.get(desc, 0) + mult
            else:
                for r in roots:
                    ints[r] = ints.get(r, 0) + mult
        else:
            ints[desc] = ints.get(desc, 0) + mult
    entries: list[tuple[EigDesc, int]] = sorted(ints.items())
    entries.extend(sorted(pairs.items(), key=lambda e: (e[0].s, e[0].p)))
    spec = SpectrumSpec(order, kind, tuple(entries))
    if spec.eigenvalue_count != order:
        raise ValueError(
            f"multiplicities sum to {spec.eigenvalue_count}, expected {order}"
        )
    return spec


def is_integral(spectrum: SpectrumSpec) -> bool:
    """True iff every normalized entry is an integer."""
    return spectrum.is_integral


def spectrum_to_polynomial(spectrum: SpectrumSpec) -> IntPolynomial:
    """Expand prod (x - v)^mult * prod (x^2 - s*x + p)^mult exactly."""
    result = POLY_ONE
    for desc, mult in spectrum.entries:
        if isinstance(desc, QuadraticEig):
            factor = IntPolynomial((desc.p, -desc.s, 1))
        elif isinstance(desc, int):
            factor = IntPolynomial.x_minus(desc)
        else:
            raise NonIntegralSpectrum(f"cannot expand entry {desc!r}")
        result = result * factor**mult
    return result


def multipartite_distance_charpoly(
    partition: PartitionStructure | Sequence[int],
) -> IntPolynomial:
    """Distance characteristic polynomial of K_{n_1,...,n_k}, expanded exactly.

    (x+2)^(N-k) * [ prod_i (x - n_i + 2) - sum_i n_i * prod_{j != i} (x - n_j + 2) ]
    """
    if isinstance(partition, PartitionStructure):
        sizes = partition.sizes
    else:
        sizes = tuple(int(s) for s in partition)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    total = sum(sizes)
    k = len(sizes)
    linear = [IntPolynomial((2 - s, 1)) for s in sizes]
    prefix = [POLY_ONE]
    for lin in linear:
        prefix.append(prefix[-1] * lin)
    suffix = [POLY_ONE]
    for lin in reversed(linear):
        suffix.append(suffix[-1] * lin)
    suffix.reverse()
    bracket = prefix[k]
    for i, size in enumerate(sizes):
        bracket = bracket - size * (prefix[i] * suffix[i + 1])
    return IntPolynomial((2, 1)) ** (total - k) * bracket


def _scaled_root_pair(
    tquad: tuple[int, int, int], scale: int, offset: int
) -> QuadraticEig:
    """Monic quadratic satisfied by scale*t + offset where qa*t^2 + qb*t + qc = 0.

    Eliminates t exactly; requires qa to divide qb*scale and qc*scale^2, which
    holds for every family because qa divides scale.
    """
    qa, qb, qc = tquad
    if qa == 0:
        raise ValueError("degenerate quadratic for t")
    b_num = qb * scale
    c_num = qc * scale * scale
    if b_num % qa or c_num % qa:
        raise ArithmeticError("elimination does not stay integral")
    b = b_num // qa
    c = c_num // qa
    return QuadraticEig(2 * offset - b, offset * offset - b * offset + c)


def spectrum_q4n(kind: MatrixKind, n: int) -> SpectrumSpec:
    """Spectrum of the chosen matrix of the non-commuting graph of Q_4n.

    The graph is K_{2n-2, 2 x n} of order 4n-2.  The signless-Laplacian
    exceptional eigenvalues are (2n-2)t + (6n-2) for the two roots t of
    (2n-2)x^2 + (10-4n)x - 2n = 0, eliminated into a monic pair.
    """
    if n < 2:
        raise InvalidParameters(f"q4n requires n >= 2, got n={n}")
    order = 4 * n - 2
    if kind == MatrixKind.DISTANCE:
        raw = [
            (-2, 3 * n - 3),
            (0, n - 1),
            (QuadraticEig(6 * (n - 1), 4 * n * (n - 2)), 1),
        ]
    elif kind == MatrixKind.DISTANCE_LAPLACIAN:
        raw = [(0, 1), (4 * n - 2, n), (4 * n, n), (6 * n - 4, 2 * n - 3)]
    else:
        pair = _scaled_root_pair(
            (2 * n - 2, 10 - 4 * n, -2 * n), 2 * n - 2, 6 * n - 2
        )
        raw = [
            (4 * n - 4, n),
            (6 * n - 8, 2 * n - 3),
            (4 * n - 2, n - 1),
            (pair, 1),
        ]
    return make_spectrum(order, kind, raw)


def spectrum_qd(kind: MatrixKind, n: int) -> SpectrumSpec:
    """Spectrum for the quasidihedral group of order 2^n.

    The graph is K_{2^(n-1)-2, 2 x 2^(n-2)}.  The signless-Laplacian
    exceptional eigenvalues are taken as printed in the source closed form,
    t*(2^(n-1)-2) + 3*(2^(n-1)-2); the verifier arbitrates that constant.
    """
    if n < 4:
        raise InvalidParameters(f"qd requires n >= 4, got n={n}")
    half = 2 ** (n - 1)
    quarter = 2 ** (n - 2)
    order = 2**n - 2
    if kind == MatrixKind.DISTANCE:
        raw = [
            (-2, 3 * quarter - 3),
            (0, quarter - 1),
            (QuadraticEig(6 * (quarter - 1), 4 * quarter * (quarter - 2)), 1),
        ]
    elif kind == MatrixKind.DISTANCE_LAPLACIAN:
        raw = [
            (0, 1),
            (2**n - 2, quarter),
            (2**n, quarter),
            (2**n + half - 4, half - 3),
        ]
    else:
        pair = _scaled_root_pair(
            (half - 2, -(2**n - 10), -half), half - 2, 3 * (half - 2)
        )
        raw = [
            (2**n - 4, quarter),
            (2**n - 2, quarter - 1),
            (2**n + half - 8, half - 3),
            (pair, 1),
        ]
    return make_spectrum(order, kind, raw)


def spectrum_u6n(kind: MatrixKind, n: int) -> SpectrumSpec:
    """Spectrum for the group U_6n; the graph is K_{2n, n, n, n} of order 5n."""
    if n < 1:
        raise InvalidParameters(f"u6n requires n >= 1, got n={n}")
    order = 5 * n
    if kind == MatrixKind.DISTANCE:
        raw = [
            (-2, 5 * n - 4),
            (n - 2, 2),
            (QuadraticEig(8 * n - 4, (4 * n - 2) ** 2 - 6 * n * n), 1),
        ]
    elif kind == MatrixKind.DISTANCE_LAPLACIAN:
        raw = [(0, 1), (5 * n, 3), (6 * n, 3 * (n - 1)), (7 * n, 2 * n - 1)]
    else:
        raw = [
            (6 * n - 4, 3 * (n - 1)),
            (7 * n - 4, 2 * n + 1),
            (8 * n - 4, 1),
            (13 * n - 4, 1),
        ]
    return make_spectrum(order, kind, raw)


def spectrum_metacyclic(kind: MatrixKind, m: int, n: int) -> SpectrumSpec:
    """Spectrum for the metacyclic group of order 2mn, dispatching on parity of m.

    The graph is K_{(m-1)n, n x m} for odd m and K_{(m-2)n, 2n x m/2} for even
    m.  For the signless Laplacian the even case further splits at m = 4,
    where all parts coincide in size.  The quadratics defining the exceptional
    eigenvalues are read with middle terms (2m-5)x and 2(m-5)x respectively;
    the verifier arbitrates those readings.
    """
    if m <= 2:
        raise InvalidParameters(f"metacyclic requires m > 2, got m={m}")
    if n < 1:
        raise InvalidParameters(f"metacyclic requires n >= 1, got n={n}")
    if m % 2:
        order = (2 * m - 1) * n
        if kind == MatrixKind.DISTANCE:
            s = 3 * m * n - n - 4
            num = s * s - n * n * (5 * m * m - 10 * m + 9)
            if num % 4:
                raise ArithmeticError("distance pair product is not integral")
            raw = [
                (-2, 2 * m * n - (m + n) - 1),
                (n - 2, m - 1),
                (QuadraticEig(s, num // 4), 1),
            ]
        elif kind == MatrixKind.DISTANCE_LAPLACIAN:
            raw = [
                (0, 1),
                (n * (2 * m - 1), m),
                (2 * m * n, m * (n - 1)),
                ((3 * m - 2) * n, (m - 1) * n - 1),
            ]
        else:
            pair = _scaled_root_pair(
                (m - 1, -(2 * m - 5), -m), n * (m - 1), 3 * m * n + n - 4
            )
            raw = [
                (2 * m * n - 4, m * (n - 1)),
                ((2 * m + 1) * n - 4, m - 1),
                ((3 * m - 2) * n - 4, (m - 1) * n - 1),
                (pair, 1),
            ]
        return make_spectrum(order, kind, raw)

    half = m // 2
    order = 2 * n * (m - 1)
    if kind == MatrixKind.DISTANCE:
        s = 3 * m * n - 2 * n - 4
        num = s * s - n * n * (5 * m * m - 20 * m + 36)
        if num % 4:
            raise ArithmeticError("distance pair product is not integral")
        raw = [
            (-2, 2 * n * (m - 1) - half - 1),
            (2 * n - 2, half - 1),
            (QuadraticEig(s, num // 4), 1),
        ]
    elif kind == MatrixKind.DISTANCE_LAPLACIAN:
        raw = [
            (0, 1),
            (2 * n * (m - 1), half),
            (2 * m * n, (2 * n - 1) * half),
            ((3 * m - 4) * n, (half - 1) * 2 * n - 1),
        ]
    elif m == 4:
        raw = [
            (8 * n - 4, 3 * (2 * n - 1)),
            (10 * n - 4, 2),
            (16 * n - 4, 1),
        ]
    else:
        pair = _scaled_root_pair(
            (m - 2, -2 * (m - 5), -m), n * (m - 2), 3 * m * n + 2 * n - 4
        )
        raw = [
            (3 * m * n - 4 * n - 4, (m - 2) * n - 1),
            (4 * m * n - 4 * n - 4, (2 * n - 1) * half),
            (2 * m * n - 4, half - 1),
            (pair, 1),
        ]
    return make_spectrum(order, kind, raw)


def spectrum_for(spec: GroupSpec, kind: MatrixKind) -> SpectrumSpec:
    """Dispatch to the family's closed form."""
    if spec.family == Q4N:
        return spectrum_q4n(kind, spec.n)
    if spec.family == QD:
        return spectrum_qd(kind, spec.n)
    if spec.family == U6N:
        return spectrum_u6n(kind, spec.n)
    return spectrum_metacyclic(kind, spec.m, spec.n)


def claimed_partition_sizes(spec: GroupSpec) -> tuple[int, ...]:
    """Part sizes the family's non-commuting graph is claimed to have.

    Q_4n -> K_{2n-2, 2 x n}; QD_2^n -> K_{2^(n-1)-2, 2 x 2^(n-2)};
    U_6n -> K_{2n, n, n, n}; M_2mn -> K_{(m-1)n, n x m} for odd m and
    K_{(m-2)n, 2n x m/2} for even m.  Always listed largest part first.
    """
    if spec.family == Q4N:
        return (2 * spec.n - 2,) + (2,) * spec.n
    if spec.family == QD:
        return (2 ** (spec.n - 1) - 2,) + (2,) * (2 ** (spec.n - 2))
    if spec.family == U6N:
        return (2 * spec.n,) + (spec.n,) * 3
    m, n = spec.m, spec.n
    if m % 2:
        return ((m - 1) * n,) + (n,) * m
    return ((m // 2 - 1) * 2 * n,) + (2 * n,) * (m // 2)


@dataclass(frozen=True)
class EigenFamily:
    """A named batch of integer eigenvectors sharing one integer eigenvalue."""

    eigenvalue: int
    label: str
    vectors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EigenbasisResult:
    """Explicit eigenvector families for a Laplacian-type matrix of Q_4n.

    When the scaled-constant eigenvectors of the signless Laplacian would need
    an irrational scale t, they are omitted and the monic quadratic whose
    roots they would realize is reported in `irrational_pair`.
    """

    kind: MatrixKind
    n: int
    families: tuple[EigenFamily, ...]
    irrational_pair: QuadraticEig | None = None

    @property
    def vector_count(self) -> int:
        return sum(len(f.vectors) for f in self.families)


def _basis_vector(length: int, assignments: dict[int, int]) -> tuple[int, ...]:
    v = [0] * length
    for idx, val in assignments.items():
        v[idx] = val
    return tuple(v)


def eigenbasis_q4n(kind: MatrixKind, n: int) -> EigenbasisResult:
    """Explicit integer eigenvectors for D^L or D^Q of the graph of Q_4n.

    Vertices are in part-major order: the 2n-2 cyclic-part vertices first,
    then n parts of size 2.  Every returned vector v is verified exactly
    against the actual matrix: M v = eigenvalue * v.
    """
    if kind == MatrixKind.DISTANCE:
        raise ValueError("eigenbasis is available for dl and dq only")
    if n < 2:
        raise InvalidParameters(f"q4n requires n >= 2, got n={n}")
    group = enumerate_elements(GroupSpec.q4n(n))
    graph, partition = part_major(non_commuting_graph(group))
    matrix = matrix_of_kind(distance_matrix(graph), kind)
    order = 4 * n - 2
    big = 2 * n - 2
    if partition.sizes != (big,) + (2,) * n:
        raise ValueError(f"unexpected partition {partition.sizes} for Q_4n")

    def small(p: int) -> int:
        return big + 2 * p

    families = []
    irrational: QuadraticEig | None = None
    if kind == MatrixKind.DISTANCE_LAPLACIAN:
        families.append(
            EigenFamily(0, "all-ones", (tuple([1] * order),))
        )
        families.append(
            EigenFamily(
                4 * n - 2,
                "big-part-vs-one-small-part",
                tuple(
                    tuple(
                        [-1] * big
                        + [n - 1 if q == p else 0 for q in range(n) for _ in range(2)]
                    )
                    for p in range(n)
                ),
            )
        )
        families.append(
            EigenFamily(
                4 * n,
                "small-part-difference",
                tuple(
                    _basis_vector(order, {small(p): -1, small(p) + 1: 1})
                    for p in range(n)
                ),
            )
        )
        families.append(
            EigenFamily(
                6 * n - 4,
                "big-part-difference",
                tuple(
                    _basis_vector(order, {0: -1, i: 1}) for i in range(1, big)
                ),
            )
        )
    else:
        families.append(
            EigenFamily(
                4 * n - 4,
                "small-part-difference",
                tuple(
                    _basis_vector(order, {small(p): -1, small(p) + 1: 1})
                    for p in range(n)
                ),
            )
        )
        families.append(
            EigenFamily(
                6 * n - 8,
                "big-part-difference",
                tuple(
                    _basis_vector(order, {0: -1, i: 1}) for i in range(1, big)
                ),
            )
        )
        families.append(
            EigenFamily(
                4 * n - 2,
                "small-part-vs-small-part",
                tuple(
                    _basis_vector(
                        order,
                        {
                            small(0): -1,
                            small(0) + 1: -1,
                            small(p): 1,
                            small(p) + 1: 1,
                        },
                    )
                    for p in range(1, n)
                ),
            )
        )
        tquad = (2 * n - 2, 10 - 4 * n, -2 * n)
        roots = rational_roots_of_quadratic(*tquad)
        if roots is None:
            irrational = _scaled_root_pair(tquad, 2 * n - 2, 6 * n - 2)
        else:
            for t in roots:
                num, den = t.numerator, t.denominator
                mu_num = (2 * n - 2) * num + (6 * n - 2) * den
                if mu_num % den:
                    raise ArithmeticError("scaled-constant eigenvalue not integral")
                vec = tuple([num] * big + [den] * (2 * n))
                families.append(
                    EigenFamily(mu_num // den, "scaled-constant", (vec,))
                )

    for family in families:
        for vec in family.vectors:
            image = matrix.mat_vec(vec)
            expect = tuple(family.eigenvalue * x for x in vec)
            if image != expect:
                raise ArithmeticError(
                    f"vector {vec} fails M v = {family.eigenvalue} v "
                    f"for {kind} at n={n}"
                )
    return EigenbasisResult(kind, n, tuple(families), irrational)
