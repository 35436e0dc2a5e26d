import io
import json
import subprocess
import sys

import pytest

from newtonbases.cli import run
from newtonbases.core import Polynomial
from newtonbases.orderings import NewtonOrdering, SemigroupOrdering
from newtonbases.parser import (ParseError, infer_variables, parse_ordering, parse_polynomial,
                                render_ordering)

BIG = ("x^12+y^12+z^12+x^5*y^5+x^5*z^5+y^5*z^5"
       "+x*y*z*(x^2*y^2+x^2*z^2+y^2*z^2)+x^2*y^2*z^2")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    xy = ["x", "y"]
    assert parse_polynomial("x^2+y^3", xy) == Polynomial(2, {(2, 0): 1, (0, 3): 1})
    assert len(parse_polynomial(BIG, ["x", "y", "z"])) == 10
    assert parse_polynomial("(x+y)*(x−y)", xy) == parse_polynomial("x^2-y^2", xy)
    assert parse_polynomial("x**2/4 - -y", xy) == Polynomial(2, {(2, 0): "1/4", (0, 1): 1})
    assert parse_polynomial("(x+1)^(2)", xy) == parse_polynomial("x^2+2*x+1", xy)


@pytest.mark.parametrize("text,fragment", [
    ("x^-2", "negative exponent"),
    ("2x", "operator"),
    ("x y", "operator"),
    ("x^2^3", "chained"),
    ("z+1", "unknown variable 'z'"),
    ("x/y", "division"),
    ("(x+1", "expected ')'"),
    ("x $ y", "unexpected character"),
    ("", "empty"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_polynomial(text, ["x", "y"])
    assert fragment in str(exc.value) and "column" in str(exc.value)


def test_multichar_names_and_inference():
    assert infer_variables(["b*a + a^2", "c"]) == ["b", "a", "c"]
    p = parse_polynomial("xyz*x", ["x", "xyz"])
    assert p == Polynomial(2, {(1, 1): 1})


@pytest.mark.parametrize("spec", [
    "ds", "dp", "lex", "ws(2,3)", "wp(1,2)", "weighted(-1,-2;tie=ds)",
    "newton:forms=[[3,3],[2,6],[6,2]];delta=[1,1];tie=ds",
    "newton:forms=[[1/2,1/3]];delta=[1,1];tie=dp",
])
def test_ordering_round_trip(spec):
    o = parse_ordering(spec, 2)
    assert parse_ordering(render_ordering(o), 2) == o


def test_ordering_errors():
    for bad in ["foo", "ws(1)", "ws(1,-1)", "newton:forms=[[1,2]];delta=[-1,0]",
                "newton:forms=[1,2]", "newton:delta=[1,1]"]:
        with pytest.raises(ParseError):
            parse_ordering(bad, 2)
    assert isinstance(parse_ordering("newton:forms=[[1,2]]", 2), NewtonOrdering)
    assert parse_ordering("lp", 2) == SemigroupOrdering("lex", 2)


def test_spectrum_json():
    code, out, _ = call("spectrum", "-v", "x,y", "-f", "x^2+y^3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["milnor"] == 2 and data["pg"] == 1 and data["nondegenerate"] is True
    assert data["spectrum"] == [{"value": "5/6", "mult": 1}, {"value": "7/6", "mult": 1}]


def test_spectrum_text():
    code, out, _ = call("spectrum", "-f", "x^2+y^3")
    assert code == 0
    assert out.splitlines()[0] == "spectrum: t^(5/6) + t^(7/6)"


def test_milnor_of_big_example():
    code, out, _ = call("milnor", "-v", "x,y,z", "-f", BIG)
    assert code == 0 and out.strip() == "323"


def test_polytope_output():
    code, out, _ = call("polytope", "-v", "x,y", "-f", "x^2+y^3", "--json")
    assert code == 0
    assert json.loads(out) == {"facets": [{"form": ["1/2", "1/3"], "face_points": [[0, 3], [2, 0]]}]}


def test_stdbasis_and_convert():
    code, out, _ = call("stdbasis", "-f", "x^2+y^3", "-f", "x*y", "--json")
    assert code == 0
    leads = sorted(item["lead"] for item in json.loads(out)["basis"])
    assert leads == ["x*y", "x^2", "y^4"]
    code, out, _ = call("convert", "-f", "2*x", "-f", "3*y^2",
                        "--target-order", "newton:forms=[[1/2,1/3]];delta=[1,1]", "--json")
    assert code == 0 and json.loads(out)["staircase"] == ["1", "y"]


def test_exit_codes():
    assert call("spectrum", "-f", "x^2+2*x*y+y^2+x^3+y^3")[0] == 1
    assert call("milnor", "-f", "x^2*y")[0] == 1
    assert call("stdbasis", "-v", "x,y", "-f", "x", "--order", "newton:forms=[[1,-1],[-1,2]];delta=[1,1]")[0] == 1
    code, _, err = call("spectrum", "-v", "x,y", "-f", "x^2+w")
    assert code == 2 and "'w'" in err
    assert call("spectrum", "-f", "x^2", "-f", "y^2")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("convert", "-f", "x")[0] == 2
    assert call("stdbasis", "-v", "x,x", "-f", "x")[0] == 2


def test_output_is_deterministic():
    args = ["spectrum", "-v", "x,y", "-f", "x^5+x^2*y^2+y^6", "--json"]
    assert call(*args)[1] == call(*args)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "newtonbases", "spectrum", "-f", "x^2+y^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "t^(1)" in proc.stdout
