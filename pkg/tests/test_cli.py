import io
import json
import subprocess
import sys

from geompoly.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_poly_geom_example():
    code, out, _ = call("poly", "geom", "--n", "4", "--r", "1")
    assert code == EXIT_OK
    assert json.loads(out)["coefficients"] == ["0", "1", "14", "36", "24"]


def test_poly_rational_r_is_exact():
    code, out, _ = call("poly", "geom", "--n", "2", "--r", "1/3", "--eval", "3/2")
    data = json.loads(out)
    assert data["coefficients"] == ["0", "1/3", "4/9"]
    assert data["eval"]["value"] == "3/2"


def test_series_p11_example():
    code, out, _ = call("series", "eval", "--identity", "P11", "--r", "0", "--x", "1/2", "--mode", "both")
    assert code == EXIT_OK
    data = json.loads(out)
    assert abs(data["closed"]["value"] - 1.3862943611) < 1e-10
    assert data["abs_diff"] <= 2e-10
    for key in ("value", "tol", "method", "terms_used", "tail_bound"):
        assert key in data["direct"]
    assert data["params"] == {"r": "0", "x": "1/2"}


def test_decimal_flags_parse_exactly():
    code, out, _ = call("series", "eval", "--identity", "BINOMIAL_SERIES", "--r", "1/2",
                        "--p", "1", "--x", "0.3", "--mode", "closed")
    assert code == EXIT_OK
    assert json.loads(out)["params"]["x"] == "3/10"


def test_tables():
    code, out, _ = call("table", "stirling2", "--max-n", "3")
    assert json.loads(out)["rows"][3] == ["0", "1", "3", "1"]
    code, out, _ = call("table", "bernoulli", "--max-n", "2", "--format", "csv")
    assert out.splitlines() == ["n,B_n", "0,1", "1,-1/2", "2,1/6"]


def test_error_exit_codes():
    code, _, err = call("series", "eval", "--identity", "NOPE", "--x", "1")
    assert code == EXIT_USAGE
    code, _, err = call("poly", "geom", "--n", "2", "--r", "1/0")
    assert code == EXIT_USAGE and "rational" in err
    code, _, err = call("series", "eval", "--identity", "P11", "--r", "0", "--x", "2")
    assert code == EXIT_DOMAIN and "|x| < 1" in err
    code, _, _ = call("poly", "exp", "--n", "2", "--format", "csv")
    assert code == EXIT_USAGE


def test_verify_suite_is_deterministic():
    a = call("verify", "--suite", "polynomials")
    b = call("verify", "--suite", "polynomials")
    assert a[0] == b[0] == EXIT_OK
    va = [c["status"] for c in json.loads(a[1])["checks"]]
    vb = [c["status"] for c in json.loads(b[1])["checks"]]
    assert va == vb and set(va) == {"pass"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "geompoly", "poly", "exp", "--n", "3", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "x^3 + 3*x^2 + x"
