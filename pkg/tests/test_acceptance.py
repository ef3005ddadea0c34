"""Acceptance gate: one test per criterion, exact values, stated budgets.

Each test prints a single PASS/FAIL line (visible with ``pytest -s``).
"""

import random
import time
from contextlib import contextmanager

import pytest

from hanoilab.cli import main
from hanoilab.moves import (
    Configuration,
    Move,
    MoveTrace,
    disc_move_counts,
    generate_frame_stewart,
    generate_three_peg,
    gray_trace,
    moment_trace,
    validate_sequence,
    verify_subtower_independence,
)
from hanoilab.oracle import certify_range
from hanoilab.recurrences import (
    HanoiSolver,
    balanced_fs,
    delta_k,
    fs_split,
    growth_exponent_diagnostic,
    ratio_rho,
    t3_closed,
    tp_optimal,
)
from hanoilab.tables import REFERENCE


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:02d} {label}: FAIL")
        raise
    print(f"ACCEPTANCE {number:02d} {label}: PASS")


@pytest.fixture(scope="module")
def certified():
    """Shared BFS sweeps for criteria 5 and 7, with their total runtime."""
    started = time.perf_counter()
    sweeps = {pegs: certify_range(pegs, 10) for pegs in (3, 4)}
    return sweeps, time.perf_counter() - started


def test_criterion_01_table1_reproduction(capsys):
    with criterion(1, "table1 reproduction"):
        started = time.perf_counter()
        code = main(["table", "--kind", "table1", "--from", "1", "--to", "15"])
        elapsed = time.perf_counter() - started
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,k,t4,fs_balanced,rho"
        expected = [
            f"{r.n},{r.k},{r.t4},{r.fs_balanced},{r.rho}" for r in REFERENCE.table1_rows
        ]
        assert lines[1:] == expected
        by_n = {int(line.split(",")[0]): line.split(",")[4] for line in lines[1:]}
        assert by_n[9] == "1.195"
        assert by_n[13] == "1.660"
        assert by_n[15] == "2.364"
        assert elapsed < 1.0


def test_criterion_02_extended_ratios():
    with criterion(2, "extended ratios"):
        started = time.perf_counter()
        solver = HanoiSolver()
        rendered = [ratio_rho(n, solver).rendered for n in range(16, 21)]
        assert rendered == ["1.994", "2.990", "2.636", "4.300", "3.879"]
        assert time.perf_counter() - started < 1.0


def test_criterion_03_balanced_window():
    with criterion(3, "balanced window"):
        started = time.perf_counter()
        solver = HanoiSolver()
        for n in range(1, 9):
            assert balanced_fs(n, solver) == tp_optimal(4, n, solver).cost
        for n in range(9, 31):
            assert balanced_fs(n, solver) > tp_optimal(4, n, solver).cost
        assert time.perf_counter() - started < 1.0


def test_criterion_04_oeis_regression():
    with criterion(4, "sequence regression"):
        started = time.perf_counter()
        solver = HanoiSolver()
        for i, expected in enumerate(REFERENCE.a000225_prefix):
            assert tp_optimal(3, i + 1, solver).cost == expected
            assert t3_closed(i + 1) == expected
        for i, expected in enumerate(REFERENCE.a007664_prefix):
            assert tp_optimal(4, i + 1, solver).cost == expected
        assert REFERENCE.a007664_prefix[-1] == 289
        assert time.perf_counter() - started < 1.0


def test_criterion_05_oracle_certification(certified):
    with criterion(5, "oracle certification"):
        sweeps, elapsed = certified
        three, four = sweeps[3], sweeps[4]
        assert not three.skipped and not four.skipped
        assert [r.distance for r in three.reports] == [2**n - 1 for n in range(1, 11)]
        assert [r.distance for r in four.reports] == [1, 3, 5, 9, 13, 17, 25, 33, 41, 49]
        assert three.all_agree and four.all_agree
        assert all(r.agrees for r in three.reports + four.reports)
        assert elapsed < 10.0


def test_criterion_06_move_trace_contracts():
    with criterion(6, "move-trace contracts"):
        started = time.perf_counter()
        solver = HanoiSolver()
        for n in range(0, 17):
            trace = generate_three_peg(n)
            assert len(trace) == 2**n - 1
            final = validate_sequence(trace.initial, trace.moves)
            assert final == Configuration.perfect(n, 3, 2)
        for n in range(2, 16):
            for k in range(1, n):
                trace = generate_frame_stewart(4, n, k, solver)
                assert len(trace) == fs_split(n, k, solver)
                final = validate_sequence(trace.initial, trace.moves)
                assert final == Configuration.perfect(n, 4, 3)
        assert time.perf_counter() - started < 5.0


def _random_legal_walk(rng, pegs, discs, steps):
    start = Configuration(pegs, tuple(rng.randrange(pegs) for _ in range(discs)))
    current = list(start.pegs)
    moves = []
    for _ in range(steps):
        tops = {}
        for disc in range(1, discs + 1):
            tops.setdefault(current[disc - 1], disc)
        options = [
            Move(disc, peg, dest)
            for peg, disc in sorted(tops.items())
            for dest in range(pegs)
            if dest != peg and (dest not in tops or tops[dest] > disc)
        ]
        move = rng.choice(options)
        moves.append(move)
        current[move.disc - 1] = move.target
    return MoveTrace(start, tuple(moves))


def test_criterion_07_invariant_suite(certified):
    with criterion(7, "invariant suite"):
        solver = HanoiSolver()

        # Gray single-flip plus the ruler pattern on optimal traces
        for n in range(0, 13):
            report = gray_trace(generate_three_peg(n))
            assert report.single_flip and report.ruler_pattern
            for a, b in zip(report.vectors, report.vectors[1:]):
                assert bin(a ^ b).count("1") == 1

        # per-disc move counts halve with rank
        for n in range(1, 13):
            counts = disc_move_counts(generate_three_peg(n))
            assert counts == tuple(2 ** (n - j) for j in range(1, n + 1))

        # moment-delta law on 1000 randomly generated legal traces
        rng = random.Random(20260810)
        for _ in range(1000):
            trace = _random_legal_walk(
                rng, rng.randint(3, 5), rng.randint(1, 6), rng.randint(1, 30)
            )
            for order in (1, 2):
                values = moment_trace(trace, order)
                for (a, b), move in zip(zip(values, values[1:]), trace.moves):
                    assert b - a == move.disc**order * (move.target - move.source)

        # unique geodesic between the perfect three-peg towers
        assert all(r.geodesic_count == 1 for r in certified[0][3].reports)

        # subtower independence and adjacent-swap interleaving
        swaps = 0
        for n in range(1, 13):
            trace = generate_frame_stewart(4, n, "optimal", solver)
            report = verify_subtower_independence(trace)
            assert report.single_largest_move
            assert report.independent and report.disjoint_outside_sink
            group_of = {d: home for home, ds in report.subtowers for d in ds}
            cut = next(
                i for i, m in enumerate(trace.moves) if m.disc == report.largest_disc
            )
            moves = list(trace.moves)
            for i in range(cut + 1, len(moves) - 1):
                a, b = moves[i], moves[i + 1]
                if group_of.get(a.disc) == group_of.get(b.disc):
                    continue
                if {a.source, a.target} & {b.source, b.target}:
                    continue  # contended peg: order stays fixed
                swapped = tuple(moves[:i] + [b, a] + moves[i + 2 :])
                assert len(swapped) == len(trace)
                assert validate_sequence(trace.initial, swapped) == trace.final()
                swaps += 1
        assert swaps > 0


def test_criterion_08_telescoping_and_anchors():
    with criterion(8, "telescoping sensitivity"):
        solver = HanoiSolver()
        for n in range(3, 31):
            for k in range(1, n - 1):
                expected = fs_split(n, k + 1, solver) - fs_split(n, k, solver)
                assert delta_k(n, k, solver).delta == expected
        assert delta_k(9, 5, solver).delta == 0
        assert delta_k(8, 3, solver).delta == -8


def test_criterion_09_growth_data(capsys):
    with criterion(9, "growth curves"):
        code = main(["table", "--kind", "growth", "--pegs", "3,4,5", "--from", "1", "--to", "15"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,t3,t4,t5"
        assert len(lines) == 16
        checked = 0
        for i, line in enumerate(lines[1:]):
            n, t3, t4, t5 = (int(part) for part in line.split(","))
            assert n == i + 1
            assert t3 == REFERENCE.a000225_prefix[i]
            assert t4 == REFERENCE.a007664_prefix[i]
            assert t5 == REFERENCE.t5_figure3[i]
            checked += 3
        assert checked == 45


def test_criterion_10_asymptotic_diagnostic():
    with criterion(10, "asymptotic diagnostic"):
        fit = growth_exponent_diagnostic(4, (1, 30))
        assert fit.correlation > 0.99
