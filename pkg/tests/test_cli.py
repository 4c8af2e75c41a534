import json
import subprocess
import sys

import pytest

from asg.cli import main, parse_gens
from asg.errors import MalformedInput


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_gens():
    assert parse_gens("5,3,1; 1,5,2") == [(5, 3, 1), (1, 5, 2)]
    with pytest.raises(MalformedInput):
        parse_gens("1,a")
    with pytest.raises(MalformedInput):
        parse_gens("  ")


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "3,0;0,3;5,2;2,5", "--json")
    assert code == 0
    assert json.loads(out)["conductor"]["minimal_generators"] == [[2, 8], [5, 5], [8, 2]]


def test_check_cm(capsys):
    assert run(capsys, "check", "cm", "--gens", "2,0;0,2;4,1;2,3") == (0, "false\n", "")
    assert run(capsys, "check", "gorenstein", "--gens", "1,5;5,1;2,2;3,3")[1] == "true\n"
    assert run(capsys, "check", "normal", "--gens", "1,2;2,1;1,1")[1] == "true\n"


def test_exit_codes(capsys):
    assert run(capsys, "analyze", "--gens", "1,0,0;0,1,0")[0] == 3
    assert run(capsys, "analyze", "--gens", "0,0,1;1,0,1;0,1,1;1,1,1")[0] == 3
    assert run(capsys, "analyze", "--gens", "1,-2;3,4")[0] == 2
    assert run(capsys, "analyze", "--gens", "1,2;3")[0] == 2
    assert run(capsys, "frobenius", "--gens", "3,0;0,3")[0] == 2
    assert run(capsys, "analyze", "--gens", "3,0;0,3;5,2;2,5", "--limit-tuples", "4")[0] == 4
    assert run(capsys, "bogus")[0] == 2
    code, _, err = run(capsys, "apery", "--gens", "1,0,0;0,1,0")
    assert code == 3 and "rank" in err


def test_subcommands(capsys):
    assert run(capsys, "frobenius", "--gens", "3;5;7")[1] == "4\n"
    assert run(capsys, "type", "--gens", "3;5;7")[1] == "2\n2\n4\n"
    assert run(capsys, "conductor", "--gens", "5,2;2,2;2,1;5,3")[1] == "4,2\n5,2\n"
    assert run(capsys, "normalization", "--gens", "3,0;0,3;5,2;2,5")[1] == "0,3\n1,1\n3,0\n"
    data = json.loads(run(capsys, "apery", "--gens", "3,0;0,3;5,2;2,5", "--json")[1])
    assert len(data["elements"]) == 6 and data["remainders"] == [[0, 0], [1, 1], [2, 2]]


def test_file_input(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"generators": [[3, 0], [0, 3], [2, 1]]}))
    assert run(capsys, "check", "cm", "--file", str(path))[1] == "true\n"
    path.write_text("[1, 2]")
    assert run(capsys, "check", "cm", "--file", str(path))[0] == 2
    assert run(capsys, "check", "cm", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_threads_flag_output_identical(capsys):
    gens = "5,3,1;1,5,2;8,3,5;2,1,1;2,2,1"
    one = run(capsys, "analyze", "--gens", gens, "--json")[1]
    four = run(capsys, "analyze", "--gens", gens, "--json", "--threads", "4")[1]
    assert one == four


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "asg", "check", "cm", "--gens", "3,0;0,3;2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "true\n"
