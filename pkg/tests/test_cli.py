import csv
import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsort.cli import main, make_input, parse_sizes

from helpers import EXAMPLE_ARRAY


def _write(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return str(path)


def _example_file(tmp_path):
    return _write(tmp_path, "input.txt", [str(v) for v in EXAMPLE_ARRAY])


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sort_worked_example(capsys, tmp_path):
    path = _example_file(tmp_path)
    for algorithm in ("trivial", "graph", "graph-merge"):
        code, out, _ = _run(capsys, ["sort", path, "--algorithm", algorithm])
        assert code == 0
        assert out == "-2.2\n1\n2\n3.5\n5\n9\n11\n"


def test_sort_empty_file(capsys, tmp_path):
    path = _write(tmp_path, "empty.txt", [])
    code, out, _ = _run(capsys, ["sort", path])
    assert code == 0 and out == ""


def test_sort_preserves_duplicate_tokens_in_order(capsys, tmp_path):
    path = _write(tmp_path, "dups.txt", ["2.0", "1", "2"])
    code, out, _ = _run(capsys, ["sort", path])
    assert code == 0
    assert out == "1\n2.0\n2\n"  # equal values keep their original token order


def test_sort_writes_output_file(capsys, tmp_path):
    path = _example_file(tmp_path)
    dest = tmp_path / "sorted.txt"
    code, out, _ = _run(capsys, ["sort", path, "--out", str(dest)])
    assert code == 0 and out == ""
    assert dest.read_text() == "-2.2\n1\n2\n3.5\n5\n9\n11\n"


def test_parse_failure_reports_line_and_exits_2(capsys, tmp_path):
    path = _write(tmp_path, "bad.txt", ["1.5", "pear", "2"])
    code, _, err = _run(capsys, ["sort", path])
    assert code == 2
    assert "bad.txt:2" in err


def test_nan_rejected(capsys, tmp_path):
    path = _write(tmp_path, "nan.txt", ["1.0", "nan"])
    code, _, err = _run(capsys, ["sort", path])
    assert code == 2 and "NaN" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = _run(capsys, ["sort", str(tmp_path / "absent.txt")])
    assert code == 2 and err


def test_usage_errors_exit_1(capsys, tmp_path):
    path = _example_file(tmp_path)
    code, _, _ = _run(capsys, ["sort", path, "--algorithm", "bogosort"])
    assert code == 1
    code, _, _ = _run(capsys, ["frobnicate"])
    assert code == 1


def test_parse_sizes_forms():
    assert parse_sizes("100") == [100]
    assert parse_sizes("8,16,32") == [8, 16, 32]
    assert parse_sizes("2^3..2^6") == [8, 16, 32, 64]
    assert parse_sizes("2^5") == [32]
    assert parse_sizes("7,2^3..2^4") == [7, 8, 16]
    from graphsort import ParameterError

    with pytest.raises(ParameterError):
        parse_sizes("2^6..2^3")
    with pytest.raises(ParameterError):
        parse_sizes("grape")


def test_make_input_distributions():
    rng = random.Random(0)
    assert make_input("sorted", 50, rng) == sorted(make_input("sorted", 50, random.Random(0)))
    rev = make_input("reverse", 50, random.Random(1))
    assert rev == sorted(rev, reverse=True)
    dups = make_input("duplicates", 200, random.Random(2))
    assert len(set(dups)) <= 16
    part = make_input("partial", 100, random.Random(3))
    misplaced = sum(1 for a, b in zip(part, part[1:]) if a > b)
    assert misplaced <= 100 // 20


def _bench_rows(capsys, argv):
    code, out, _ = _run(capsys, argv)
    assert code == 0
    return list(csv.DictReader(io.StringIO(out)))


def test_bench_rows_are_deterministic_except_wall_time(capsys):
    argv = ["bench", "--algorithm", "graph", "--sizes", "32,64", "--trials", "2", "--seed", "9"]
    first = _bench_rows(capsys, argv)
    second = _bench_rows(capsys, argv)
    assert len(first) == 4
    for a, b in zip(first, second):
        a.pop("wall_time_ns"), b.pop("wall_time_ns")
        assert a == b


def test_bench_sorted_distribution_has_no_merge_rounds(capsys):
    rows = _bench_rows(
        capsys, ["bench", "--algorithm", "graph", "--sizes", "16,33", "--distribution", "sorted"]
    )
    for row in rows:
        assert row["merge_rounds"] == "0"
        assert row["first_forest_components"] == "1"


def test_bench_reverse_sweep_hits_the_worst_case(capsys):
    rows = _bench_rows(
        capsys,
        [
            "bench",
            "--algorithm",
            "graph",
            "--sizes",
            "64",
            "--distribution",
            "reverse",
            "--visit-order",
            "sweep",
        ],
    )
    assert rows[0]["first_forest_components"] == "64"
    assert rows[0]["merge_rounds"] == "6"


def test_bench_reference_and_shuffle(capsys):
    rows = _bench_rows(capsys, ["bench", "--algorithm", "reference", "--sizes", "128"])
    assert int(rows[0]["comparisons"]) > 0
    rows = _bench_rows(
        capsys,
        ["bench", "--algorithm", "graph", "--sizes", "64", "--shuffle-visits", "3"],
    )
    assert rows[0]["algorithm"] == "graph"


def test_bench_refuses_oversized_trivial(capsys):
    code, _, err = _run(capsys, ["bench", "--algorithm", "trivial", "--sizes", "5000"])
    assert code == 1 and "4096" in err


def test_inspect_worked_example_stages(capsys, tmp_path):
    path = _example_file(tmp_path)
    out_dir = tmp_path / "stages"
    code, _, err = _run(capsys, ["inspect", path, "--out-dir", str(out_dir)])
    assert code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == [
        "00-construct.dot",
        "01-forest0.dot",
        "02-merged1.dot",
        "03-forest1.dot",
        "04-merged2.dot",
        "05-forest2.dot",
    ]
    construct = (out_dir / "00-construct.dot").read_text()
    assert construct.count("->") == 7
    assert 'label="-2.2"' in construct
    merged = (out_dir / "02-merged1.dot").read_text()
    assert merged.count("penwidth=2") == 5  # the five fresh arcs drawn bold


def test_inspect_single_element_writes_one_file(capsys, tmp_path):
    path = _write(tmp_path, "one.txt", ["42"])
    out_dir = tmp_path / "one-stages"
    code, _, _ = _run(capsys, ["inspect", path, "--out-dir", str(out_dir)])
    assert code == 0
    assert [p.name for p in out_dir.iterdir()] == ["00-construct.dot"]


def test_inspect_pairs_seed_has_three_arcs(capsys, tmp_path):
    path = _example_file(tmp_path)
    out_dir = tmp_path / "gm-stages"
    code, _, _ = _run(
        capsys, ["inspect", path, "--algorithm", "graph-merge", "--out-dir", str(out_dir)]
    )
    assert code == 0
    first = sorted(out_dir.iterdir())[0].read_text()
    assert first.count("->") == 3


def test_inspect_guard_and_override(capsys, tmp_path):
    path = _write(tmp_path, "big.txt", [str(i) for i in range(201)])
    out_dir = tmp_path / "big-stages"
    code, _, err = _run(capsys, ["inspect", path, "--out-dir", str(out_dir)])
    assert code == 1 and "--max-n" in err
    code, _, _ = _run(capsys, ["inspect", path, "--out-dir", str(out_dir), "--max-n", "300"])
    assert code == 0


def test_inspect_output_is_deterministic(capsys, tmp_path):
    path = _example_file(tmp_path)
    dir_a, dir_b = tmp_path / "a", tmp_path / "b"
    assert _run(capsys, ["inspect", path, "--out-dir", str(dir_a)])[0] == 0
    assert _run(capsys, ["inspect", path, "--out-dir", str(dir_b)])[0] == 0
    for pa, pb in zip(sorted(dir_a.iterdir()), sorted(dir_b.iterdir())):
        assert pa.read_bytes() == pb.read_bytes()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-99, 99), max_size=30), st.sampled_from(["trivial", "graph", "graph-merge"]))
def test_sort_command_matches_stable_reference(tmp_path_factory, values, algorithm):
    tmp = tmp_path_factory.mktemp("cli-prop")
    tokens = [str(v) for v in values]
    path = tmp / "vals.txt"
    path.write_text("".join(t + "\n" for t in tokens), encoding="utf-8")
    dest = tmp / "out.txt"
    assert main(["sort", str(path), "--algorithm", algorithm, "--out", str(dest)]) == 0
    got = dest.read_text().splitlines()
    expected = [tokens[i] for i in sorted(range(len(values)), key=lambda i: values[i])]
    assert got == expected
