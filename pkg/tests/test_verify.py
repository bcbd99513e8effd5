import pytest

from ncgspectra import (
    ALL_KINDS,
    GroupSpec,
    IntPolynomial,
    MatrixKind,
    OrderCapExceeded,
    QuadraticEig,
    default_grid,
    integrality_record,
    make_spectrum,
    predicted_integral,
    search_integral,
    spectrum_for,
    spectrum_qd,
    spectrum_to_polynomial,
    verify_grid,
    verify_instance,
)

D = MatrixKind.DISTANCE
DL = MatrixKind.DISTANCE_LAPLACIAN
DQ = MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN


class TestVerifyInstance:
    def test_octahedron_all_kinds_match(self):
        for kind in ALL_KINDS:
            report = verify_instance(GroupSpec.q4n(2), kind)
            assert report.matched
            assert report.oracle_poly == report.closed_poly
            assert report.oracle_poly.is_monic
            assert report.order == 6
            assert report.partition.sizes == (2, 2, 2)

    def test_u6n_dq_matches(self):
        report = verify_instance(GroupSpec.u6n(3), DQ)
        assert report.matched
        assert report.order == 15

    def test_qd_dq_arbitration(self):
        report = verify_instance(GroupSpec.qd(4), DQ)
        assert report.matched == (report.oracle_poly == report.closed_poly)
        again = verify_instance(GroupSpec.qd(4), DQ)
        assert report == again
        if not report.matched:
            assert report.diff_summary
            assert report.residual is not None and not report.residual.is_zero
            assert report.unmatched_closed

    def test_qd_dq_residual_quadratic(self):
        # arbitration outcome for the quasidihedral signless-Laplacian pair:
        # the oracle keeps x^2 - 50x + 568 while the stated closed form offers
        # x^2 - 42x + 384; the linear coefficients differ by 8
        report = verify_instance(GroupSpec.qd(4), DQ)
        assert not report.matched
        assert report.residual == IntPolynomial((568, -50, 1))
        assert report.unmatched_closed == ((QuadraticEig(42, 384), 1),)
        oracle_pair = QuadraticEig(50, 568)
        stated_pair = QuadraticEig(42, 384)
        assert oracle_pair.s - stated_pair.s == 8

    def test_qd_dq_corrected_constant_matches_oracle(self):
        # shifting the stated scaled-constant offset from 3*(2^(n-1)-2) to
        # 3*2^(n-1) - 2 reproduces the oracle exactly
        for n in (4, 5):
            report = verify_instance(GroupSpec.qd(n), DQ)
            half = 2 ** (n - 1)
            stated = spectrum_qd(DQ, n)
            fixed_entries = [
                (d, m) for d, m in stated.entries if not isinstance(d, QuadraticEig)
            ]
            shift = (3 * half - 2) - 3 * (half - 2)
            (pair,) = [d for d, _ in stated.entries if isinstance(d, QuadraticEig)]
            corrected = QuadraticEig(
                pair.s + 2 * shift,
                pair.p + shift * pair.s + shift * shift,
            )
            fixed_entries.append((corrected, 1))
            fixed = make_spectrum(stated.order, DQ, fixed_entries)
            assert spectrum_to_polynomial(fixed) == report.oracle_poly

    def test_metacyclic_even_dq_arbitration(self):
        # two of the stated eigenvalue/multiplicity pairs for even m > 4 do
        # not divide the oracle polynomial; the residual for M_12 factors as
        # (x - 8)(x - 10)^2
        report = verify_instance(GroupSpec.metacyclic(6, 1), DQ)
        assert not report.matched
        assert report.residual == IntPolynomial((-800, 260, -28, 1))
        assert report.unmatched_closed == ((16, 3),)

    def test_metacyclic_odd_dq_matches(self):
        for m, n in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (9, 2)]:
            assert verify_instance(GroupSpec.metacyclic(m, n), DQ).matched

    def test_metacyclic_m4_dq_matches(self):
        for n in (1, 2, 3):
            assert verify_instance(GroupSpec.metacyclic(4, n), DQ).matched

    def test_order_cap(self):
        with pytest.raises(OrderCapExceeded):
            verify_instance(GroupSpec.qd(7), D, order_cap=100)
        assert verify_instance(GroupSpec.qd(7), D, order_cap=126).matched

    def test_dl_oracle_has_simple_zero_root(self):
        # connected graphs: the distance Laplacian annihilates exactly the
        # all-ones line, so x divides the oracle polynomial exactly once
        x = IntPolynomial((0, 1))
        for spec in [GroupSpec.q4n(3), GroupSpec.u6n(2), GroupSpec.metacyclic(6, 1)]:
            report = verify_instance(spec, DL)
            quot, rem = report.oracle_poly.divmod_monic(x)
            assert rem.is_zero
            _, rem2 = quot.divmod_monic(x)
            assert not rem2.is_zero
            closed = [m for d, m in spectrum_for(spec, DL).entries if d == 0]
            assert closed == [1]


class TestVerifyGrid:
    def test_small_grid_counts_and_order(self):
        specs = [GroupSpec.q4n(n) for n in (2, 3, 4)]
        reports = verify_grid(specs, ALL_KINDS)
        assert len(reports) == 9
        assert [r.group.n for r in reports] == [2, 2, 2, 3, 3, 3, 4, 4, 4]
        assert [r.kind for r in reports] == list(ALL_KINDS) * 3
        assert all(r.matched for r in reports)

    def test_errors_embedded_not_raised(self):
        specs = [GroupSpec.q4n(2), GroupSpec.q4n(12)]
        reports = verify_grid(specs, (D,), order_cap=10)
        assert len(reports) == 2
        assert reports[0].matched and reports[0].error is None
        assert not reports[1].matched
        assert "OrderCapExceeded" in reports[1].error

    def test_parallel_equals_serial(self):
        specs = [GroupSpec.u6n(n) for n in (1, 2, 3)]
        serial = verify_grid(specs, ALL_KINDS, jobs=1)
        parallel = verify_grid(specs, ALL_KINDS, jobs=2)
        assert serial == parallel

    def test_default_grid_shape(self):
        specs = default_grid()
        assert len(specs) == 11 + 4 + 10 + 32
        assert len({(s.family, s.m, s.n) for s in specs}) == len(specs)


def test_grid_traces_match_polynomial_coefficients(grid_results):
    from ncgspectra import transmissions
    from ncgspectra.verify import oracle_matrix

    by_spec = {}
    for report in grid_results.reports:
        n = report.order
        subleading = report.oracle_poly.coeffs[n - 1]
        if report.kind == D:
            assert subleading == 0
        else:
            if report.group not in by_spec:
                dist, _ = oracle_matrix(report.group, D)
                by_spec[report.group] = sum(transmissions(dist))
            assert subleading == -by_spec[report.group]


class TestPredictedIntegral:
    def test_distance_conditions(self):
        assert predicted_integral(GroupSpec.q4n(2), D)[:2] == (True, 3)
        assert predicted_integral(GroupSpec.q4n(3), D)[0] is False
        assert predicted_integral(GroupSpec.qd(4), D)[:2] == (True, 7)
        assert predicted_integral(GroupSpec.u6n(5), D)[0] is False
        assert predicted_integral(GroupSpec.metacyclic(9, 1), D)[:2] == (True, 18)

    def test_dl_always(self):
        for spec in [GroupSpec.q4n(6), GroupSpec.qd(5), GroupSpec.u6n(4),
                     GroupSpec.metacyclic(7, 2)]:
            assert predicted_integral(spec, DL)[0] is True

    def test_dq_conditions(self):
        assert predicted_integral(GroupSpec.q4n(2), DQ)[:2] == (True, 6)
        ok, witness, note = predicted_integral(GroupSpec.q4n(3), DQ)
        assert not ok and "denominator 2" in note
        assert predicted_integral(GroupSpec.u6n(9), DQ)[0] is True
        assert predicted_integral(GroupSpec.metacyclic(4, 7), DQ)[0] is True
        assert predicted_integral(GroupSpec.qd(5), DQ)[0] is False
        assert predicted_integral(GroupSpec.metacyclic(6, 1), DQ)[0] is False


class TestSearchIntegral:
    def test_q4n_distance_first_four(self):
        recs = search_integral([GroupSpec.q4n(n) for n in range(2, 31)], D)
        assert [r.group.n for r in recs] == [2, 4, 9, 22]
        assert [r.witness for r in recs] == [3, 7, 18, 47]
        assert all(r.agree for r in recs)

    def test_u6n_distance_empty(self):
        assert search_integral([GroupSpec.u6n(n) for n in range(1, 200)], D) == []

    def test_q4n_dl_all(self):
        recs = search_integral([GroupSpec.q4n(n) for n in range(2, 50)], DL)
        assert [r.group.n for r in recs] == list(range(2, 50))
        assert all(r.predicted_integral and r.computed_integral for r in recs)

    def test_q4n_dq_disagreements_are_findings(self):
        recs = search_integral([GroupSpec.q4n(n) for n in range(2, 60)], DQ)
        by_n = {r.group.n: r for r in recs}
        assert by_n[2].predicted_integral and by_n[2].computed_integral
        # the stated condition (integral t) misses parameters where the
        # eigenvalues are integral although t is a non-integer rational
        assert sorted(n for n, r in by_n.items() if not r.agree) == [3, 6, 11, 28, 57]
        for n in (3, 6, 11, 28, 57):
            assert not by_n[n].predicted_integral
            assert by_n[n].computed_integral
            assert "denominator" in by_n[n].note

    def test_q4n_dq_computed_agrees_with_oracle_at_n3(self):
        report = verify_instance(GroupSpec.q4n(3), DQ)
        assert report.matched
        rec = integrality_record(GroupSpec.q4n(3), DQ)
        assert rec.computed_integral

    def test_metacyclic_odd_dq_disagreement(self):
        recs = search_integral(
            [GroupSpec.metacyclic(m, 1) for m in range(3, 20, 2)], DQ
        )
        assert sorted(r.group.m for r in recs) == [3, 11]
        assert all(not r.predicted_integral and r.computed_integral for r in recs)

    def test_qd_distance_only_n4(self):
        recs = search_integral([GroupSpec.qd(n) for n in range(4, 16)], D)
        assert [r.group.n for r in recs] == [4]
        assert recs[0].agree
