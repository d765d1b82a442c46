import json

import pytest

from qfock.cli import main
from qfock.fock import FockVector
from qfock.qring import HalfLaurent
from qfock.schur import SchurPoly
from qfock.words import parse_word, word_text


class TestParseWord:
    def test_examples(self):
        assert parse_word("f0 f1^(2) f0") == (("f0", 1), ("f1", 2), ("f0", 1))
        assert parse_word("") == ()
        assert parse_word("K0inv qd e1^(3)") == (("K0inv", 1), ("qd", 1), ("e1", 3))

    def test_unknown_token(self):
        with pytest.raises(ValueError, match="token 1"):
            parse_word("f2")
        with pytest.raises(ValueError, match="token 3"):
            parse_word("f0 f1 g0")

    def test_bad_power(self):
        with pytest.raises(ValueError, match="token 1"):
            parse_word("f0^(0)")
        with pytest.raises(ValueError, match="not allowed"):
            parse_word("K0^(2)")

    def test_roundtrip_text(self):
        w = parse_word("e0^(2) K1 f1")
        assert parse_word(word_text(w)) == w


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out.rstrip("\n"), out.err


class TestCliText:
    def test_apply_example(self, capsys):
        rc, out, _ = run(capsys, "apply", "--sector", "0", "f0")
        assert (rc, out) == (0, "q^2 * e^{1a}")

    def test_x_example(self, capsys):
        rc, out, _ = run(
            capsys, "x", "--sign", "minus", "--n", "0", "--sector", "0",
            "--charge", "1", "--mu", "1",
        )
        assert rc == 0
        assert out == "-1 * s[2] e^{0a} + q^4 * s[1,1] e^{0a}"

    def test_empty_word_is_identity(self, capsys):
        rc, out, _ = run(capsys, "apply", "--sector", "1", "--charge", "-1", "")
        assert (rc, out) == (0, "1 * e^{-1a+a/2}")

    def test_straighten_zero(self, capsys):
        rc, out, _ = run(capsys, "straighten", "1,2,2")
        assert (rc, out) == (0, "0")

    def test_conjugate(self, capsys):
        rc, out, _ = run(capsys, "conjugate", "4,1")
        assert (rc, out) == (0, "2,1,1,1")


class TestCliJson:
    def test_straighten_example(self, capsys):
        rc, out, _ = run(capsys, "--json", "straighten", "1,4,1")
        assert rc == 0
        assert json.loads(out) == {"sign": -1, "partition": [3, 2, 1]}

    def test_schur_poly_roundtrip(self, capsys):
        rc, out, _ = run(capsys, "--json", "lr", "2,1", "2,1")
        assert rc == 0
        poly = SchurPoly.from_json(json.loads(out))
        from qfock.schur import lr_product

        assert poly == lr_product((2, 1), (2, 1))

    def test_vector_roundtrip(self, capsys):
        rc, out, _ = run(capsys, "--json", "apply", "--sector", "1", "f1 f0 f1")
        assert rc == 0
        vec = FockVector.from_json(json.loads(out))
        from qfock.fock import apply_word

        assert vec == apply_word(parse_word("f1 f0 f1"), FockVector.basis(1))

    def test_mixed(self, capsys):
        rc, out, _ = run(capsys, "--json", "mixed", "1", "2,1,1,1")
        assert json.loads(out) == {"sign": 1, "partition": [3, 2, 1]}

    def test_inner_deformed(self, capsys):
        rc, out, _ = run(capsys, "--json", "inner", "--kind", "deformed", "1", "1")
        data = json.loads(out)
        assert HalfLaurent.from_json(data["numerator"]) == HalfLaurent.const(1)
        assert HalfLaurent.from_json(data["denominator"]) == HalfLaurent({0: 1, 4: 1})


class TestCliErrors:
    def test_unknown_generator(self, capsys):
        rc, _, err = run(capsys, "apply", "f2")
        assert rc == 1
        assert "token 1" in err

    def test_bad_partition(self, capsys):
        rc, _, err = run(capsys, "lr", "1,2", "1")
        assert rc == 1
        assert "weakly decreasing" in err

    def test_bad_tuple_text(self, capsys):
        rc, _, err = run(capsys, "straighten", "1,x")
        assert rc == 1

    def test_unknown_suite(self, capsys):
        rc, _, err = run(capsys, "check", "--suite", "bogus")
        assert rc == 1

    def test_divided_requires_positive_r(self, capsys):
        rc, _, err = run(
            capsys, "divided", "--sign", "plus", "--n", "0", "--r", "0"
        )
        assert rc == 1


class TestCliCheck:
    def test_passing_suite(self, capsys):
        rc, out, _ = run(capsys, "check", "--suite", "golden")
        assert rc == 0
        assert out == "golden: PASS"

    def test_failing_suite_exits_2(self, capsys, monkeypatch):
        import qfock.fock as fockmod

        original = fockmod.apply_word

        def broken(word, vec):
            return original(word, vec).scale(HalfLaurent.qpow(1))

        monkeypatch.setattr(fockmod, "apply_word", broken)
        rc, out, _ = run(capsys, "check", "--suite", "golden")
        assert rc == 2
        assert "FAIL" in out

    def test_json_reports(self, capsys):
        rc, out, _ = run(
            capsys, "--json", "check", "--suite", "qvandermonde", "--max-k", "3"
        )
        assert rc == 0
        reports = json.loads(out)
        assert reports[0]["suite"] == "q_vandermonde"
        assert reports[0]["config"] == {"max_k": 3}
        assert reports[0]["pass"] is True
