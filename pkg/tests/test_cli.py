import json
import subprocess
import sys

import pytest

from valuesets.cli import main, parse_config
from valuesets.constructions import sweep, verify
from valuesets.family import enumerate_spectrum

from conftest import field


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_eval_plus_x(capsys):
    code, out, _ = run(capsys, "eval", "--p", "13", "--chain", "4,5,10,12,11", "--x", "1", "--plus-x")
    assert code == 0 and out.strip() == "2"


def test_eval_all(capsys):
    code, out, _ = run(capsys, "eval", "--p", "13", "--chain", "4,5,10,12,11", "--all")
    assert code == 0 and len(out.splitlines()) == 13
    code, out, _ = run(capsys, "eval", "--p", "13", "--chain", "4,5,10,12,11", "--all",
                       "--format", "tsv")
    assert out.splitlines()[0] == "x\tvalue" and len(out.splitlines()) == 14


def test_eval_zero_constant(capsys):
    code, _, err = run(capsys, "eval", "--p", "13", "--chain", "4,0,10", "--x", "1")
    assert code == 2 and "c_i must be nonzero" in err


def test_eval_extension_field(capsys):
    code, out, _ = run(capsys, "eval", "--p", "5", "--r", "2", "--chain", "[1,1],2,3", "--x", "[0,1]")
    assert code == 0 and isinstance(json.loads(out), list)


def test_decompose_examples(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "13", "--g", "-1,2", "--poles", "0,11,9,2")
    rec = records(out)[0]
    assert code == 0 and rec["chain"] == [4, 5, 10, 12, 11] and rec["trace"]["epsilon"] == 2
    code, out, _ = run(capsys, "decompose", "--p", "13", "--g", "5,3", "--poles", "0,12,1,8,6,2")
    assert records(out)[0]["chain"] == [7, 2, 3, 6, 10, 5, 2]
    code, out, _ = run(capsys, "decompose", "--p", "13", "--g", "-1,2", "--poles", "0,11,9,2",
                       "--format", "tsv")
    assert out.splitlines()[-1] == "chain\t4,5,10,12,11"


def test_decompose_bad_anchor(capsys):
    code, _, err = run(capsys, "decompose", "--p", "13", "--g", "-1,2", "--poles", "0,11,9,3")
    assert code == 2 and err.startswith("error:")


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "13", "--chain", "4,5,10,12,11", "--interpolate")
    rec = records(out)[0]
    assert code == 0 and rec["g"] == {"a": 12, "b": 2} and rec["poles"] == [0, 11, 9, 2]
    assert rec["profile"]["size"] == 3 and rec["sum_of_values"] == 0
    assert not rec["complete_mapping"] and len(rec["f_coefficients"]) <= 13
    code2, out2, _ = run(capsys, "analyze", "--p", "13", "--g", "-1,2", "--poles", "0,11,9,2",
                         "--interpolate")
    assert out2 == out


def test_analyze_rejects_zero_alpha_chain(capsys):
    code, _, err = run(capsys, "analyze", "--p", "5", "--chain", "1,1,4,1")
    assert code == 2 and "not in the family" in err


def test_spectrum_n2_and_cli_matches_module(capsys):
    code, out, _ = run(capsys, "spectrum", "--p", "13", "--n", "2")
    assert code == 0
    recs = records(out)
    assert {r["size"] for r in recs} == {3, 11}
    assert recs == enumerate_spectrum(field(13), 2).records()


def test_spectrum_budget_and_invalid_n(capsys):
    code, _, err = run(capsys, "spectrum", "--p", "13", "--n", "9")
    assert code == 3 and "sample" in err
    code, _, _ = run(capsys, "spectrum", "--p", "13", "--n", "1")
    assert code == 2


def test_spectrum_sample_seed(capsys):
    args = ("spectrum", "--p", "13", "--n", "7", "--mode", "sample", "--samples", "200")
    _, a, _ = run(capsys, *args, "--seed", "3")
    _, b, _ = run(capsys, *args, "--seed", "3")
    assert a == b and all(r["seed"] == 3 for r in records(a))


def test_construct_and_verify(capsys):
    code, out, _ = run(capsys, "construct", "--family", "coset", "--p", "13", "--alpha", "3", "--c", "2")
    rec = records(out)[0]
    assert code == 0 and rec["match"] and rec["predicted"]["missing"] == [2, 5, 6]
    code, out, _ = run(capsys, "verify", "--family", "thm7iv", "--p", "13", "--n", "4", "--sweep-b")
    recs = records(out)
    assert code == 0 and len(recs) == 12 and all(r["match"] for r in recs)
    module = [verify(c).to_json() for c in sweep("thm7iv", field(13), n=4)]
    assert [json.dumps(r, sort_keys=True) for r in recs] == \
        [json.dumps(r, sort_keys=True) for r in module]


def test_verify_tsv_header(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cor3i", "--p", "7", "--sweep", "--format", "tsv")
    lines = out.splitlines()
    assert lines[0] == "family\tparams\tsize\tcounts\tmatch\tmismatches" and len(lines) == 7


def test_usage_errors(capsys):
    assert run(capsys, "construct", "--family", "cor3i", "--p", "13", "--c", "0")[0] == 2
    assert run(capsys, "eval", "--p", "12", "--chain", "1,2,3", "--x", "1")[0] == 2
    assert run(capsys, "eval", "--p", "13", "--chain", "1,2", "--x", "abc")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_negative_values_parse():
    cfg = parse_config(["decompose", "--p", "13", "--g", "-1,2", "--poles", "0,11,9,2"])
    assert cfg.params["g"] == "-1,2" and cfg.seed == 0


@pytest.mark.parametrize("argv", [
    ["spectrum", "--p", "11", "--n", "3", "--format", "tsv"],
    ["verify", "--family", "thm7ii", "--p", "13", "--sweep"],
])
def test_byte_identical_subprocess_runs(argv):
    cmd = [sys.executable, "-m", "valuesets", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
