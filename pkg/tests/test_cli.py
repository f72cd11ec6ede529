"""CLI behaviour: golden text output, exit codes, JSON schema conformance."""

import io
import json
import subprocess
import sys
from importlib import resources

from jsonschema import Draft202012Validator

from lefschetz.cli import main

SCHEMA = json.loads(
    resources.files("lefschetz").joinpath("schemas/cli_output.json").read_text()
)
VALIDATOR = Draft202012Validator(SCHEMA)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    payload = json.loads(out)
    VALIDATOR.validate(payload)
    return code, payload, err


def test_schema_is_itself_valid():
    Draft202012Validator.check_schema(SCHEMA)


class TestGoldenText:
    def test_motive(self, capsys):
        assert run(capsys, "motive", "P(3)") == (0, "1 + L + L^2 + L^3\n", "")

    def test_motive_with_opaque(self, capsys):
        code, out, _ = run(capsys, "motive", "fano(1; odd_trivial=false)")
        assert code == 0
        assert out == "1 + L + L^2 + L^3 + [M^1(X)] + [M^1(J)*L] + [M^5(X)]\n"

    def test_orbit_demo(self, capsys):
        assert run(capsys, "orbit-demo", "P(1)") == (0, "{0, 1}\n", "")

    def test_orbit_demo_with_multiplicity(self, capsys):
        code, out, _ = run(capsys, "orbit-demo", "Q(2)")
        assert (code, out) == (0, "{0, 1, 1, 2}\n")

    def test_check_fec_failure(self, capsys):
        code, out, _ = run(capsys, "check-fec", "fano(1; odd_trivial=false)")
        assert (code, out) == (1, "fails-odd-vanishing\n")

    def test_check_fec_ok(self, capsys):
        code, out, _ = run(capsys, "check-fec", "P(2)")
        assert (code, out) == (0, "ok (min length 1)\n")

    def test_poincare(self, capsys):
        code, out, _ = run(capsys, "poincare", "Gr(2,4)")
        assert (code, out) == (0, "1 + t^2 + 2*t^4 + t^6 + t^8\n")

    def test_hodge(self, capsys):
        code, out, _ = run(capsys, "hodge", "Q(2)")
        assert (code, out) == (0, "h^{0,0} = 1\nh^{1,1} = 2\nh^{2,2} = 1\n")

    def test_k0(self, capsys):
        code, out, _ = run(capsys, "k0", "P(2)")
        assert (code, out) == (0, "1 + Lv + Lv^2\n")

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("P(1) * P(1)\n"))
        code, out, _ = run(capsys, "motive", "-")
        assert (code, out) == (0, "1 + 2*L + L^2\n")


class TestSodSolve:
    def write_collection(self, tmp_path, pieces):
        path = tmp_path / "collection.json"
        path.write_text(json.dumps({"pieces": pieces}))
        return str(path)

    def kuznetsov(self, tmp_path, d):
        pieces = [{"label": "Cl0(Q_%d)" % d, "kind": "opaque"}]
        pieces += [
            {"label": "O" if k == 0 else "O(%d)" % k, "kind": "exceptional"}
            for k in range(-d + 1, 1)
        ]
        return self.write_collection(tmp_path, pieces)

    def test_solves_clifford_rank(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "sod-solve", "Q(3)", "--collection", self.kuznetsov(tmp_path, 3)
        )
        assert code == 0
        assert out == "Cl0(Q_3): n_j = 1\nO(-2): n_j = 1\nO(-1): n_j = 1\nO: n_j = 1\n"

    def test_json_mode(self, capsys, tmp_path):
        code, payload, _ = run_json(
            capsys,
            "sod-solve",
            "Q(4)",
            "--collection",
            self.kuznetsov(tmp_path, 4),
            "--json",
        )
        assert code == 0
        assert payload["total_rank"] == 6
        assert payload["pieces"][0] == {
            "label": "Cl0(Q_4)",
            "kind": "opaque",
            "nc_rank": 2,
        }

    def test_missing_flag_is_usage_error(self, capsys):
        code, _, err = run(capsys, "sod-solve", "Q(3)")
        assert code == 2
        assert "--collection" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "sod-solve", "Q(3)", "--collection", "/no/file")
        assert code == 2 and err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "sod-solve", "Q(3)", "--collection", str(path))
        assert code == 2 and err

    def test_underdetermined(self, capsys, tmp_path):
        path = self.write_collection(
            tmp_path,
            [{"label": "A", "kind": "opaque"}, {"label": "B", "kind": "opaque"}],
        )
        code, _, err = run(capsys, "sod-solve", "Q(3)", "--collection", path)
        assert code == 1 and "refusing to guess" in err

    def test_inconsistent(self, capsys, tmp_path):
        path = self.write_collection(
            tmp_path, [{"label": "O", "kind": "exceptional"}]
        )
        code, _, err = run(capsys, "sod-solve", "Q(3)", "--collection", path)
        assert code == 1 and err

    def test_opaque_total_rejected(self, capsys, tmp_path):
        path = self.write_collection(
            tmp_path, [{"label": "O", "kind": "exceptional"}]
        )
        code, _, err = run(
            capsys, "sod-solve", "fano(1; odd_trivial=false)", "--collection", path
        )
        assert code == 1 and "opaque" in err


class TestExitCodes:
    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, "motive", "P(")
        assert code == 2 and "syntax error" in err

    def test_semantic_error(self, capsys):
        code, _, err = run(capsys, "motive", "Q(0)")
        assert code == 2 and "semantic error" in err

    def test_domain_failure_poincare_on_opaque(self, capsys):
        code, _, err = run(capsys, "poincare", "fano(1; odd_trivial=false)")
        assert code == 1 and "opaque" in err

    def test_domain_failure_k0_on_opaque(self, capsys):
        code, _, err = run(capsys, "k0", "fano(0; odd_trivial=false)")
        assert code == 1

    def test_orbit_demo_dim_too_small(self, capsys):
        code, _, err = run(capsys, "orbit-demo", "Q(2)", "--dim", "1")
        assert code == 1 and "support" in err

    def test_orbit_demo_dim_override_ok(self, capsys):
        code, out, _ = run(capsys, "orbit-demo", "P(1)", "--dim", "5")
        assert (code, out) == (0, "{0, 1}\n")

    def test_unknown_verb(self, capsys):
        assert run(capsys, "frobnicate", "P(1)")[0] == 2

    def test_no_arguments(self, capsys):
        assert run(capsys)[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0


class TestJsonMode:
    def test_motive(self, capsys):
        code, payload, _ = run_json(capsys, "motive", "fano(1; odd_trivial=false)", "--json")
        assert code == 0
        assert payload["verb"] == "motive"
        assert payload["expr"] == "fano(1; odd_trivial=false)"
        assert payload["terms"] == {"0": 1, "1": 1, "2": 1, "3": 1}
        assert [p["name"] for p in payload["opaque"]] == ["M^1(X)", "M^1(J)", "M^5(X)"]

    def test_poincare(self, capsys):
        code, payload, _ = run_json(capsys, "poincare", "P(2)", "--json")
        assert code == 0
        assert payload["coefficients"] == {"0": 1, "2": 1, "4": 1}

    def test_hodge(self, capsys):
        code, payload, _ = run_json(capsys, "hodge", "Q(2)", "--json")
        assert code == 0
        assert payload["hodge_numbers"] == {"0,0": 1, "1,1": 2, "2,2": 1}
        assert payload["hodge_tate"] is True

    def test_k0(self, capsys):
        code, payload, _ = run_json(capsys, "k0", "Gr(2,4)", "--json")
        assert code == 0
        assert payload["terms"] == {"0": 1, "1": 1, "2": 2, "3": 1, "4": 1}

    def test_check_fec_ok(self, capsys):
        code, payload, _ = run_json(capsys, "check-fec", "Q(2)", "--json")
        assert code == 0
        assert payload["verdict"] == "ok"
        assert payload["min_length"] == 2
        assert payload["bound"] == 4

    def test_check_fec_failure_still_emits_json(self, capsys):
        code, payload, _ = run_json(
            capsys, "check-fec", "fano(2; odd_trivial=false)", "--json"
        )
        assert code == 1
        assert payload["verdict"] == "fails-odd-vanishing"
        assert payload["min_length"] is None

    def test_orbit_demo(self, capsys):
        code, payload, _ = run_json(capsys, "orbit-demo", "Q(2)", "--json")
        assert code == 0
        assert payload == {
            "verb": "orbit-demo",
            "expr": "Q(2)",
            "dim": 2,
            "exponents": [0, 1, 1, 2],
        }


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "lefschetz.cli", "motive", "P(3)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 + L + L^2 + L^3\n"
