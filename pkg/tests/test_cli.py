import io
import json

import jsonschema
import pytest

from cohoc.cli import REPORT_SCHEMA, run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_hilbert_fixture():
    code, out, _ = run("hilbert", "fixtures:s9_G")
    assert code == 0
    assert "equal to reference: yes" in out
    assert out.count("equal to reference polynomial: yes") == 1
    assert out.startswith("series: (1 + t + 2*t^2")


def test_hilbert_truncated():
    code, out, _ = run("hilbert", "fixtures:s9_G", "--truncate", "14")
    assert code == 0
    _, full, _ = run("hilbert", "fixtures:s9_G", "--expand", "14")
    assert out.splitlines()[0] in full.splitlines()
    code, _, err = run("hilbert", "fixtures:s9_G", "--truncate", "5")
    assert code == 1 and "below the top relation degree" in err


def test_king_rel_command(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(
        "--report", str(report),
        "criterion", "king-rel", "fixtures:s9_G",
        "--param-degrees", "4,12,7,6", "--depth", "3", "-n", "26", "--surjective",
    )
    assert code == 0
    assert "verdict: complete" in out and "polynomial degree: 25" in out
    data = json.loads(report.read_text())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["data"]["threshold"] == 26


def test_inapplicable_exit_code():
    code, out, _ = run("criterion", "king-rel", "fixtures:s9_G", "--param-degrees", "4,12,7,6", "--depth", "3", "-n", "25", "--surjective")
    assert code == 2 and "inapplicable" in out
    code, _, _ = run("gendeg", "fixtures:res_G_to_U_printed")
    assert code == 2


def test_not_yet_is_definite():
    code, out, _ = run("criterion", "king-gen", "fixtures:res_G_to_U", "-n", "7")
    assert code == 0 and "verdict: not-yet" in out


def test_gendeg_command():
    code, out, _ = run("gendeg", "fixtures:res_G_to_U")
    assert code == 0
    assert out.splitlines()[0] == "gendeg: 8"


def test_king_rel_with_morphism():
    code, out, _ = run(
        "criterion", "king-rel", "fixtures:s9_G", "--param-degrees", "4,12,7,6",
        "--depth", "3", "-n", "26", "--morphism", "fixtures:res_G_to_U",
    )
    assert code == 0 and "verdict: complete" in out


@pytest.mark.parametrize(
    "argv, needle",
    [
        (("validate-morphism", "fixtures:res_G_to_S"), "valid: yes"),
        (("validate-morphism", "fixtures:res_G_to_S_printed"), "first failing relation: 1"),
        (("dim", "fixtures:s9_U"), "krull dimension: 4"),
        (("dim", "fixtures:s9_G", "--param", "b_2_0^2 + c_4_0"), "krull dimension: 3"),
        (("hsop-check", "fixtures:s9_G", "--params", "fixtures:s9_symonds"), "quotient top degree: 32"),
        (("regular-check", "fixtures:free_x", "--param", "x"), "regular sequence: yes"),
        (("fregular-report", "fixtures:free_x", "--params", "fixtures:free_x_params"), "filter-regular hsop: yes"),
        (("pars-exist", "fixtures:s9_G", "--params", "fixtures:s9_pars_fixed", "--degree", "7"), "verdict: exists"),
        (("replace-search", "fixtures:s9_G", "--params", "fixtures:s9_symonds", "--slot", "1", "--max-degree", "3"), "replacements: none"),
        (("criterion", "benson", "--param-degrees", "8,12,14,15"), "threshold: 45"),
        (("criterion", "symonds", "fixtures:free_x", "--param", "x", "-n", "1"), "verdict: complete"),
        (("compare-all", "fixtures:free_x_bundle"), "king-rel"),
    ],
)
def test_commands(tmp_path, argv, needle):
    report = tmp_path / "r.json"
    code, out, err = run("--report", str(report), *argv)
    assert code == 0, err
    assert needle in out
    jsonschema.validate(json.loads(report.read_text()), REPORT_SCHEMA)


def test_output_is_stable():
    first = run("hilbert", "fixtures:s9_U", "--expand", "10")
    assert first == run("hilbert", "fixtures:s9_U", "--expand", "10")


@pytest.mark.parametrize(
    "argv",
    [
        ("bogus",),
        ("hilbert",),
        ("hilbert", "fixtures:nope"),
        ("criterion", "benson"),
        ("hsop-check", "fixtures:s9_G"),
        ("dim", "fixtures:s9_G", "--param", "b_1_0 +"),
        ("gendeg", "fixtures:s9_G"),
        ("criterion", "king-rel", "fixtures:s9_G", "--param-degrees", "4,x", "--depth", "1", "-n", "3"),
    ],
)
def test_errors_exit_one(argv):
    code, _, err = run(*argv)
    assert code == 1
    assert err


def test_console_script_entry_point():
    from importlib.metadata import entry_points

    (ep,) = [e for e in entry_points(group="console_scripts") if e.name == "cohoc"]
    assert ep.value == "cohoc.cli:main"
