import pytest

from hopfinv.cli import main, build_parser, ALGEBRA_FORMS, MANIFOLD_FORMS, COCYCLE_FORMS
from hopfinv.hopf import dumps_hopf, group_algebra, builtin_group, HopfData
from hopfinv.diagram import fixture_text
from hopfinv.scalar import CycScalar


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_help_contains_every_selector_form(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    for form, _desc in ALGEBRA_FORMS + MANIFOLD_FORMS + COCYCLE_FORMS:
        assert form in out, form


def test_invariant_s3(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "s3", "--algebra", "taft:4")
    assert code == 0
    assert out.strip() == "1"


def test_invariant_lens_golden(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "lens:4:1:fL", "--algebra", "taft:4")
    assert code == 0
    assert out.strip() == "8 - 8*z (z = zeta_4)"


def test_invariant_prints_zeta7_polynomial(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "lens:7:1:fL", "--algebra", "taft:7")
    assert code == 0
    # -42 z - 35 z^2 - ... - 7 z^6 reduced into the power basis mod Phi_7
    assert out.strip() == "7 - 35*z - 28*z^2 - 21*z^3 - 14*z^4 - 7*z^5 (z = zeta_7)"


def test_subcommands_listed_in_help(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    for command in ("invariant", "axioms", "integrals", "identities", "gauge-test", "parse"):
        assert command in out


def test_machine_mode_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run(capsys, "--machine", "integrals", "--algebra", "taft:3")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]
    assert "alpha_at_g" in runs[0]


def test_machine_invariant_format(capsys):
    code, out, _ = run(capsys, "--machine", "invariant", "--manifold", "nu:2",
                       "--algebra", "group:s3")
    assert code == 0
    assert out.strip() == "invariant = 4"


def test_gauge_test_equal(capsys):
    code, out, _ = run(capsys, "--machine", "gauge-test", "--manifold", "lens:4:1:fL",
                       "--algebra", "taft:4", "--cocycle", "taft-bichar:1")
    assert code == 0
    lines = dict(ln.split(" = ", 1) for ln in out.strip().splitlines())
    assert lines["result"] == "EQUAL"
    assert lines["value_h"] == lines["value_hf"] == "8 - 8*z (z = zeta_4)"


def test_gauge_test_klein_dual(capsys):
    code, out, _ = run(capsys, "--machine", "gauge-test", "--manifold", "nutilde:5:2",
                       "--algebra", "dual:group:z2xz2", "--cocycle", "klein-dual")
    assert code == 0
    assert "result = EQUAL" in out


def test_parse_command(capsys, tmp_path):
    path = tmp_path / "q8.diagram"
    path.write_text(fixture_text("q8"))
    code, out, _ = run(capsys, "--machine", "parse", str(path))
    assert code == 0
    lines = dict(ln.split(" = ", 1) for ln in out.strip().splitlines())
    assert lines["genus"] == "2"
    assert lines["points"] == "8"
    assert lines["sigma"] == "1 6 3 8 5 2 7 4"
    assert lines["s"] == "1 1 2 3 1 3 2 1"


def test_parse_inadmissible_reports(capsys, tmp_path):
    text = fixture_text("s3").replace("total_phi -1/2", "total_phi 1/2")
    path = tmp_path / "bad.diagram"
    path.write_text(text)
    code, out, _ = run(capsys, "--machine", "parse", str(path))
    assert code == 0
    assert "admissible_upper_mu = no" in out


def test_axioms_command(capsys):
    code, out, _ = run(capsys, "--machine", "axioms", "--algebra", "dual:group:s3")
    assert code == 0
    assert "all = pass" in out


def test_identities_command(capsys):
    code, out, _ = run(capsys, "--machine", "identities", "--algebra", "group:z2",
                       "--max-n", "3")
    assert code == 0
    assert "all = pass" in out


def test_algebra_file_roundtrip(capsys, tmp_path):
    from hopfinv.hopf import taft
    H = taft(2, CycScalar.from_rational(-1))
    path = tmp_path / "sweedler.hopf"
    path.write_text(dumps_hopf(H))
    code, out, _ = run(capsys, "invariant", "--manifold", "nu:2",
                       "--algebra", f"file:{path}")
    assert code == 0
    assert out.strip() == "2"


def test_group_table_file(capsys, tmp_path):
    G = builtin_group("z3")
    text = " ".join(G.names) + "\n" + "\n".join(
        " ".join(G.names[G.table[i][j]] for j in range(3)) for i in range(3))
    path = tmp_path / "z3.group"
    path.write_text(text)
    code, out, _ = run(capsys, "invariant", "--manifold", "nu:3",
                       "--algebra", f"group:{path}")
    assert code == 0
    assert out.strip() == "3"


def test_plan_selectors(capsys):
    code, out, _ = run(capsys, "invariant", "--manifold", "planR:5:2", "--algebra", "group:z4")
    assert code == 0
    assert out.strip() == "1"  # #{x in Z/4 : x^5 = e}
    code, out, _ = run(capsys, "invariant", "--manifold", "planL:5:3", "--algebra", "group:z4")
    assert code == 0
    assert out.strip() == "1"


def test_plan_file(capsys, tmp_path):
    path = tmp_path / "s2xs1.diagram"
    path.write_text(fixture_text("s2xs1"))
    code, out, _ = run(capsys, "invariant", "--manifold", f"plan:{path}",
                       "--algebra", "group:q8")
    assert code == 0
    assert out.strip() == "8"


def test_exit_code_validation_error(capsys):
    code, _, err = run(capsys, "invariant", "--manifold", "lens:6:4:fR", "--algebra", "taft:2")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "invariant", "--manifold", "s3", "--algebra", "group:nosuch")
    assert code == 1
    code, _, err = run(capsys, "invariant", "--manifold", "bogus", "--algebra", "taft:2")
    assert code == 1


def test_exit_code_computational_failure(capsys, tmp_path):
    # structurally valid file that is not a Hopf algebra: integrals must fail
    H = group_algebra(builtin_group("z2"))
    broken = HopfData(H.dim, H.labels, H.field_order, H.mult, H.unit,
                      H.comult, H.counit, [dict() for _ in range(H.dim)])
    path = tmp_path / "broken.hopf"
    path.write_text(dumps_hopf(broken))
    code, _, err = run(capsys, "invariant", "--manifold", "nu:2",
                       "--algebra", f"file:{path}")
    assert code == 2
    assert "computation failed" in err


def test_bad_usage_exits_one(capsys):
    assert main(["invariant"]) == 1  # missing required flags
    assert main(["nonsense"]) == 1
