"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.
"""
import random
import time
from contextlib import contextmanager

from logictables import (
    Bindings,
    LogicTable,
    RenderStyle,
    boolean_f,
    boolean_g,
    compile_continuous,
    compile_dnf_not,
    compile_dnf_xnor,
    compile_with_unknowns,
    evaluate,
    load_document,
    render,
    run_simulation,
    truth_table,
)


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"FAIL  criterion {number}: {label}")
        raise
    print(f"PASS  criterion {number}: {label}")


def bits_of(pattern, n):
    return tuple((pattern >> (n - 1 - i)) & 1 for i in range(n))


# Frozen operator catalogs: rows (0,0),(0,1),(1,0),(1,1) down, g1..g16
# across, and f1..f4 across for x = 0, 1.
G_TABLE = [
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
]
F_TABLE = [
    [0, 0, 1, 1],
    [0, 1, 0, 1],
]


def test_criterion_1_operator_catalog_fidelity():
    with criterion(1, "operator catalog fidelity (64 + 8 cells, < 1s)"):
        start = time.perf_counter()
        for row, (x, y) in enumerate([(0, 0), (0, 1), (1, 0), (1, 1)]):
            for n in range(1, 17):
                assert boolean_g(n, x, y) == G_TABLE[row][n - 1]
        for x in (0, 1):
            for n in range(1, 5):
                assert boolean_f(n, x) == F_TABLE[x][n - 1]
        assert time.perf_counter() - start < 1.0


def test_criterion_2_dnf_equivalence_at_scale():
    with criterion(2, "NOT-form and XNOR-form DNF match row lookup, 500 tables (< 10s)"):
        start = time.perf_counter()
        rng = random.Random(1337)
        for _ in range(500):
            n = rng.randint(2, 6)
            patterns = rng.sample(range(1 << n), rng.randint(1, 1 << n))
            outputs = [rng.randint(0, 1) for _ in patterns]
            rows = [
                (list(bits_of(p, n)), o) for p, o in zip(patterns, outputs)
            ]
            names = [f"x{i}" for i in range(n)]
            table = LogicTable.build("t", names, rows)
            configured = dict(zip(patterns, outputs))
            via_not = truth_table(compile_dnf_not(table), names)
            via_xnor = truth_table(compile_dnf_xnor(table), names)
            for pattern in range(1 << n):
                expected = float(configured.get(pattern, 0))
                assert via_not[pattern][1] == expected
                assert via_xnor[pattern][1] == expected
        assert time.perf_counter() - start < 10.0


def test_criterion_3_golden_renders(xor_path, adder_doc):
    with criterion(3, "canonical equation renders, byte-exact and structural"):
        doc = load_document(xor_path)
        xor = doc.table("xor")
        assert (
            render(compile_dnf_not(xor), RenderStyle.NOT)
            == "(NOT(X) AND Y) OR (X AND NOT(Y))"
        )
        assert (
            render(compile_dnf_xnor(xor), RenderStyle.XNOR)
            == "(XNOR(X,0) AND XNOR(Y,1)) OR (XNOR(X,1) AND XNOR(Y,0))"
        )
        assert (
            render(compile_continuous(xor), RenderStyle.CONTINUOUS)
            == "(EQ(X,0) * EQ(Y,1)) ⊕ (EQ(X,1) * EQ(Y,0))"
        )

        recognizer = doc.table("bit_sequence_101")
        assert (
            render(compile_dnf_not(recognizer), RenderStyle.NOT)
            == "(X AND NOT(Y) AND Z)"
        )
        assert (
            render(compile_dnf_xnor(recognizer), RenderStyle.XNOR)
            == "(XNOR(X,1) AND XNOR(Y,0) AND XNOR(Z,1))"
        )

        def term_constants(expr):
            return [
                tuple(int(f.right.value.value) for f in term.children)
                for term in expr.children
            ]

        carry = compile_dnf_xnor(adder_doc.table("adder_carry"))
        total = compile_dnf_xnor(adder_doc.table("adder_sum"))
        assert term_constants(carry) == [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
        assert term_constants(total) == [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]


def test_criterion_4_adder_semantics(adder_doc):
    with criterion(4, "three-bit adder matches addition on all 8 inputs"):
        carry = compile_continuous(adder_doc.table("adder_carry"))
        total = compile_continuous(adder_doc.table("adder_sum"))
        for pattern in range(8):
            x, y, z = bits_of(pattern, 3)
            bound = Bindings.continuous(
                {"X": float(x), "Y": float(y), "Z": float(z)}
            )
            # (0,0,0) is configured by no row; both bits must still be 0.
            assert evaluate(carry, bound) == float((x + y + z) >> 1)
            assert evaluate(total, bound) == float((x + y + z) & 1)


def test_criterion_5_xor_surface(xor_table):
    with criterion(5, "xor surface pinned at corners, 0.5 center, in range on 65x65"):
        expr = compile_continuous(xor_table)

        def at(x, y):
            return evaluate(expr, Bindings.continuous({"X": x, "Y": y}))

        assert at(0.0, 0.0) == 0.0
        assert at(0.0, 1.0) == 1.0
        assert at(1.0, 0.0) == 1.0
        assert at(1.0, 1.0) == 0.0
        assert abs(at(0.5, 0.5) - 0.5) < 1e-12
        for i in range(65):
            for j in range(65):
                assert 0.0 <= at(i / 64, j / 64) <= 1.0


def test_criterion_6_interpolation_properties():
    with criterion(6, "exact recall and single-row monotone decay, 200 tables each"):
        rng = random.Random(2718)
        for _ in range(200):
            n = rng.randint(2, 5)
            patterns = rng.sample(range(1 << n), rng.randint(1, 1 << n))
            rows = [(list(bits_of(p, n)), rng.random()) for p in patterns]
            names = [f"x{i}" for i in range(n)]
            expr = compile_continuous(LogicTable.build("t", names, rows))
            for pattern, (_, output) in zip(patterns, rows):
                bound = Bindings.continuous(
                    {f"x{i}": float(b) for i, b in enumerate(bits_of(pattern, n))}
                )
                assert evaluate(expr, bound) == output  # exact

        for _ in range(200):
            n = rng.randint(1, 4)
            cells = [rng.random() for _ in range(n)]
            output = rng.random()
            names = [f"x{i}" for i in range(n)]
            expr = compile_continuous(
                LogicTable.build("t", names, [(cells, output)])
            )
            at_row = Bindings.continuous(dict(zip(names, cells)))
            assert abs(evaluate(expr, at_row) - output) < 1e-12
            k = rng.randrange(n)
            a, b = rng.random(), rng.random()
            near, far = sorted((a, b), key=lambda v: abs(v - cells[k]))
            v_near = evaluate(
                expr,
                Bindings.continuous({**dict(zip(names, cells)), names[k]: near}),
            )
            v_far = evaluate(
                expr,
                Bindings.continuous({**dict(zip(names, cells)), names[k]: far}),
            )
            assert v_far <= v_near + 1e-12


def test_criterion_7_unknown_elision(soccer_doc):
    with criterion(7, "Unknown cells contribute no factor (turn tables + 1000 samples)"):
        rng = random.Random(3141)
        for name, side in (("turn_right", "s3"), ("turn_left", "s4")):
            expr = compile_with_unknowns(soccer_doc.table(name))
            unk_term = expr.children[0]
            for _ in range(50):
                level = rng.random()
                contributions = {
                    evaluate(
                        unk_term,
                        Bindings.continuous({"s1": rng.random(), side: level}),
                    )
                    for _ in range(5)
                }
                assert contributions == {level}

        # Synthetic tables with one column Unknown in every row: the
        # matching input can never influence the result.
        samples = 0
        while samples < 1000:
            n = rng.randint(2, 4)
            blind = rng.randrange(n)
            n_rows = rng.randint(1, 4)
            rows = []
            for _ in range(n_rows):
                cells = [
                    "UNK" if i == blind else rng.random() for i in range(n)
                ]
                rows.append((cells, rng.random()))
            names = [f"x{i}" for i in range(n)]
            expr = compile_with_unknowns(LogicTable.build("t", names, rows))
            for _ in range(10):
                point = {name: rng.random() for name in names}
                base = evaluate(expr, Bindings.continuous(point))
                point[names[blind]] = rng.random()
                assert evaluate(expr, Bindings.continuous(point)) == base
                samples += 1


def test_criterion_8_soccer_liveness():
    with criterion(8, "20000-tick game: >=3 pickups/throws/goals, bounded, repeatable"):
        start = time.perf_counter()
        first = run_simulation(20000)
        first_hash = first.trace_hash()
        assert time.perf_counter() - start < 5.0

        start = time.perf_counter()
        second_hash = run_simulation(20000).trace_hash()
        assert time.perf_counter() - start < 5.0
        assert first_hash == second_hash

        summary = first.summary
        assert summary.ticks == 20000
        assert summary.pickups >= 3
        assert summary.throws >= 3
        assert summary.goals >= 3
        for record in first.records:
            d = record.decisions
            for value in (d.drive_forward, d.throw_ball, d.turn_right, d.turn_left):
                assert 0.0 <= value <= 1.0
            ball = record.world.ball_pos
            assert 0.0 <= ball.x <= 512.0
            assert 0.0 <= ball.y <= 512.0
