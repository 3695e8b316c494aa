"""Golden tests for the command line front end.

Everything runs in process through main(argv); exit codes and exact
output lines are pinned, except the bench timings which only get a shape
check.
"""

import re

import pytest

from cographlap import cli

from test_cotree import FIG_EDGES

P4_EDGES = "4 3\n0 1\n1 2\n2 3\n"
WORKED_G = "J(1,U(J(2),J(2)))"
WORKED_H = "J(1,U(2,J(2)))"


def run(argv, capsys):
    try:
        code = cli.main(argv)
    except SystemExit as e:
        code = e.code if isinstance(e.code, int) else 1
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.fixture
def fig_file(tmp_path):
    p = tmp_path / "fig.edges"
    p.write_text(FIG_EDGES)
    return str(p)


def test_spectrum_expression(capsys):
    assert run(["spectrum", "-e", "J(U(3),U(J(3),1))"], capsys) == (
        0,
        "7:1 6:2 4:2 3:1 0:1\n",
        "",
    )
    assert run(["spectrum", "-e", "1"], capsys) == (0, "0:1\n", "")
    assert run(["spectrum", "-e", "J(2,U(2,J(2)))"], capsys) == (
        0,
        "6:2 4:1 2:2 0:1\n",
        "",
    )


def test_spectrum_file(fig_file, capsys):
    assert run(["spectrum", "-f", fig_file], capsys) == (0, "8:2 7:3 5:1 2:1 0:1\n", "")


def test_spectrum_rejects_non_cograph(tmp_path, capsys):
    p = tmp_path / "p4.edges"
    p.write_text(P4_EDGES)
    assert run(["spectrum", "-f", str(p)], capsys) == (2, "witness: 0 1 2 3\n", "")


def test_count(capsys):
    assert run(["count", "-e", "J(U(3),U(J(3),1))", "--at", "6"], capsys) == (0, "1 2 4\n", "")
    assert run(["count", "-e", "J(3)", "--at", "5/2"], capsys) == (0, "2 0 1\n", "")
    assert run(["count", "-e", "J(3)", "--at", "-1"], capsys) == (0, "3 0 0\n", "")
    assert run(["count", "-e", "U(2)", "--at", "0"], capsys) == (0, "0 2 0\n", "")


def test_count_rejects_bad_x(capsys):
    code, out, err = run(["count", "-e", "J(3)", "--at", "0.5"], capsys)
    assert (code, out) == (1, "")
    assert err == "error: expected an integer or p/q rational, got '0.5'\n"
    code, out, err = run(["count", "-e", "J(3)", "--at", "7/0"], capsys)
    assert (code, err) == (1, "error: rational denominator must be nonzero\n")


def test_twins(fig_file, capsys):
    assert run(["twins", "-f", fig_file], capsys) == (
        0,
        "k=4 t=(2,3,1,2) types=(coclique,clique,singleton,clique)\n",
        "",
    )
    assert run(["twins", "-e", "J(2)"], capsys) == (0, "k=1 t=(2) types=(clique)\n", "")


def test_reduce(fig_file, capsys):
    assert run(["reduce", "-e", "J(U(3),U(J(3),1))"], capsys) == (
        0,
        "k=3 t=(3,3,1) types=(coclique,clique,singleton)\nreps=(0,3,6)\nreduced=J(1,U(2))\n",
        "",
    )
    assert run(["reduce", "-f", fig_file], capsys) == (
        0,
        "k=4 t=(2,3,1,2) types=(coclique,clique,singleton,clique)\n"
        "reps=(0,2,5,6)\nreduced=J(U(J(2),1),1)\n",
        "",
    )


def test_equivalent(capsys):
    assert run(["equivalent", WORKED_G, WORKED_H], capsys) == (
        0,
        "equivalent=yes k=3 t=(1,2,2) map=(0,2,1) shared=(0,1)\n",
        "",
    )
    assert run(["equivalent", "G:3", "H:3"], capsys) == (0, "equivalent=no\n", "")
    assert run(["equivalent", "G:3", "G:3"], capsys) == (
        0,
        "equivalent=yes k=3 t=(3,3,1) map=(0,1,2) shared=(0,1,2)\n",
        "",
    )
    assert run(["equivalent", "J(2)", "U(2)"], capsys) == (
        0,
        "equivalent=yes k=1 t=(2) map=(0) shared=()\n",
        "",
    )


def test_verify(fig_file, capsys):
    assert run(["verify", WORKED_G, WORKED_H], capsys) == (
        0,
        "equivalent=yes k=3 bound=4 common=4 holds=yes\n",
        "",
    )
    assert run(["verify", "G:3", "H:3"], capsys) == (0, "equivalent=no\n", "")
    assert run(["verify", "J(2)", "U(2)"], capsys) == (
        0,
        "equivalent=yes k=1 bound=1 common=1 holds=yes\n",
        "",
    )
    assert run(["verify", "@" + fig_file, "@" + fig_file], capsys) == (
        0,
        "equivalent=yes k=4 bound=8 common=8 holds=yes\n",
        "",
    )


def test_family(capsys):
    assert run(["family", "--n", "3"], capsys) == (
        0,
        "a=J(U(3),U(J(3),1))\nb=J(U(J(U(2),1),1),U(J(2),1))\nspectrum=7:1 6:2 4:2 3:1 0:1\n",
        "",
    )
    assert run(["family", "--n", "3", "--prefix", "U(3)"], capsys) == (
        0,
        "a=J(U(3),U(3),U(J(3),1))\nb=J(U(3),U(J(U(2),1),1),U(J(2),1))\n"
        "spectrum=10:2 9:2 7:4 6:1 0:1\n",
        "",
    )
    assert run(["family", "--n", "2"], capsys) == (1, "", "error: need n >= 3\n")


def test_random(capsys):
    assert run(["random", "--n", "1", "--seed", "0"], capsys) == (0, "1\n", "")
    assert run(["random", "--n", "12", "--seed", "7"], capsys) == (0, "J(1,U(10),1)\n", "")
    assert run(["random", "--n", "0", "--seed", "1"], capsys) == (
        1,
        "",
        "error: need at least one leaf\n",
    )


def test_random_is_reproducible(capsys):
    first = run(["random", "--n", "40", "--seed", "9"], capsys)
    assert run(["random", "--n", "40", "--seed", "9"], capsys) == first


def test_repeat_invocations_are_byte_identical(fig_file, capsys):
    # bench excluded: it reports wall time
    for argv in (
        ["spectrum", "-f", fig_file],
        ["reduce", "-f", fig_file],
        ["family", "--n", "4"],
        ["verify", WORKED_G, WORKED_H],
    ):
        assert run(argv, capsys) == run(argv, capsys)


def test_bench_output_shape(capsys):
    code, out, err = run(["bench", "--n", "50", "--seed", "3", "--queries", "2"], capsys)
    assert (code, err) == (0, "")
    lines = out.splitlines()
    assert len(lines) == 3
    assert re.fullmatch(r"x=0 greater=48 equal=2 less=0 ms=\d+\.\d", lines[0])
    assert re.fullmatch(r"x=1 greater=48 equal=0 less=2 ms=\d+\.\d", lines[1])
    assert re.fullmatch(r"n=50 queries=2 min_ms=\d+\.\d mean_ms=\d+\.\d", lines[2])


def test_usage_errors(capsys):
    code, out, err = run(["spectrum", "G:4"], capsys)
    assert (code, out) == (1, "")
    assert err == "cographlap spectrum: error: one of the arguments -e/--expr -f/--file is required\n"
    code, out, err = run(["spectrum", "-e", "J(2)", "extra"], capsys)
    assert (code, err) == (1, "cographlap: error: unrecognized arguments: extra\n")
    code, out, err = run(["count", "-e", "J(2)"], capsys)
    assert (code, err) == (1, "cographlap count: error: the following arguments are required: --at\n")
    code, out, err = run([], capsys)
    assert (code, err) == (1, "cographlap: error: the following arguments are required: command\n")
    code, out, err = run(["nosuch"], capsys)
    assert code == 1
    assert "invalid choice: 'nosuch'" in err


def test_parse_and_io_errors(capsys):
    code, out, err = run(["spectrum", "-e", "U()"], capsys)
    assert (code, out, err) == (1, "", "error: empty node (at position 2)\n")
    code, out, err = run(["spectrum", "-f", "/nonexistent.edges"], capsys)
    assert code == 1
    assert err == "error: [Errno 2] No such file or directory: '/nonexistent.edges'\n"
    code, out, err = run(["equivalent", "@/nonexistent.edges", "J(2)"], capsys)
    assert code == 1
    assert "No such file or directory" in err
