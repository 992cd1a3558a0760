import json

import pytest

from cltgroups import builtins
from cltgroups.cli import main
from cltgroups.permgroup import format_group_file
from cltgroups.spectrum import SpectrumReport, spectrum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_json_roundtrip(capsys):
    code, out, _ = run(capsys, "spectrum", "--builtin", "A4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["degree"] == "5/6" and data["missing_orders"] == [6]
    assert SpectrumReport.from_dict(data) == spectrum(builtins.resolve("A4"))


def test_spectrum_text(capsys):
    code, out, _ = run(capsys, "spectrum", "--builtin", "SL23")
    assert code == 0 and "degree: 7/8" in out


def test_degree_alias(capsys):
    assert run(capsys, "degree", "--builtin", "SL23") == (0, "7/8\n", "")


def test_spectrum_from_file(tmp_path, capsys):
    path = tmp_path / "a4.grp"
    path.write_text(format_group_file(builtins.resolve("A4")))
    code, out, _ = run(capsys, "degree", "--file", str(path))
    assert (code, out) == (0, "5/6\n")


def test_malformed_file_reports_line(tmp_path, capsys):
    path = tmp_path / "bad.grp"
    path.write_text("degree 3\n# fine\ngen 1 2 2\n")
    code, _, err = run(capsys, "spectrum", "--file", str(path))
    assert code == 2 and "line 3" in err


def test_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "spectrum", "--file", str(tmp_path / "nope"))
    assert code == 2


def test_unknown_builtin(capsys):
    assert run(capsys, "spectrum", "--builtin", "M11")[0] == 2


def test_oracle_cap_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("CLT_ORACLE_CAP", "50")
    code, _, err = run(capsys, "spectrum", "--builtin", "S5")
    assert code == 3 and err


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "60", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 180 and data["verified"] == "oracle_verified"


def test_construct_prime_power(capsys):
    code, _, err = run(capsys, "construct", "8")
    assert code == 2 and "prime power" in err


def test_construct_full_agl(capsys):
    code, out, _ = run(capsys, "construct", "60", "--full-agl", "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["minimal"]["order"], data["full"]["order"]) == (180, 360)


@pytest.mark.parametrize("extra", [[], ["--full-agl"]])
def test_verify_roundtrip(tmp_path, capsys, extra):
    _, out, _ = run(capsys, "construct", "12", "--json", *extra)
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, msg, _ = run(capsys, "verify", str(path))
    assert code == 0 and msg.startswith("OK")


def test_verify_certificate_only(tmp_path, capsys):
    _, out, _ = run(capsys, "construct", "158", "--json")
    assert json.loads(out)["verified"] == "certificate_only"
    path = tmp_path / "cert.json"
    path.write_text(out)
    assert run(capsys, "verify", str(path))[0] == 0


@pytest.mark.parametrize("tamper", [
    lambda c: c.update(order=c["order"] * 2),
    lambda c: c["trace"][0].update(r=c["trace"][0]["r"] + 1),
    lambda c: c.update(factorization=[[2, 1], [3, 1]]),
    lambda c: c.update(description="A_4"),
    lambda c: c["generators"].pop(),
])
def test_verify_detects_tampering(tmp_path, capsys, tamper):
    _, out, _ = run(capsys, "construct", "12", "--json")
    cert = json.loads(out)
    tamper(cert)
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    code, msg, _ = run(capsys, "verify", str(path))
    assert code == 1 and "FAIL" in msg


def test_verify_detects_wrong_group(tmp_path, capsys):
    # swap in generators of a group that does have a subgroup of order 6
    _, out, _ = run(capsys, "construct", "6", "--json")
    cert = json.loads(out)
    cert["generators"] = [[2, 1, 3, 4], [2, 3, 4, 1]]
    cert["degree"] = 4
    cert["order"] = 24
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    assert run(capsys, "verify", str(path))[0] == 1


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "cert.json"
    path.write_text("{not json")
    assert run(capsys, "verify", str(path))[0] == 2
    path.write_text("{}")
    assert run(capsys, "verify", str(path))[0] == 2


def test_approximate(capsys):
    code, out, _ = run(capsys, "approximate", "0.9", "--eps", "0.01", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["index_set"] == [2, 17] and data["product"] == "154/171"
    assert data["verification"] == "certificate_only"


def test_approximate_bad_input(capsys):
    assert run(capsys, "approximate", "abc")[0] == 2
    assert run(capsys, "approximate", "1.5")[0] == 2
    assert run(capsys, "approximate", "0.5", "--eps", "0")[0] == 2


def test_sn(capsys):
    code, out, _ = run(capsys, "sn", "4", "--json")
    assert code == 0 and json.loads(out)["degree"] == "1/1"


def test_sn_frontier(capsys):
    assert run(capsys, "sn", "7")[0] == 3


def test_gpqn(capsys):
    code, out, _ = run(capsys, "gpqn", "2", "3", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["degree"] == "8/9" and data["missing_orders"] == [18]


def test_gpqn_invalid(capsys):
    assert run(capsys, "gpqn", "2", "5", "0")[0] == 2


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2
