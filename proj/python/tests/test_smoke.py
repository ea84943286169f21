import pytest

import ciore


def test_prove_and_check():
    v = ciore.prove("|- o o p")
    assert v["status"] == "proved"
    ok, message, path = ciore.check_proof(v["proof"], "gciore-prime")
    assert ok, message
    assert path == []


def test_refutation():
    assert ciore.countermodel("p |- o p") == {"p": "1/2"}
    assert ciore.countermodel("p |- p") is None
    assert not ciore.valid("|- p & ~p")
    assert ciore.prove("|- p & ~p")["status"] == "refuted"


def test_first_order():
    r = ciore.prove_fo("exists x. P(x) |- forall x. P(x)")
    assert r["status"] == "refuted"
    assert len(r["structure"]["domain"]) >= 2
    assert ciore.prove_fo("forall x. P(x) |- P(a1)")["status"] == "proved"


def test_errors():
    with pytest.raises(ciore.ParseError):
        ciore.prove("p &")
    with pytest.raises(ciore.InvalidArgument):
        ciore.prove("|- P(a1)")
    with pytest.raises(ciore.ResourceError):
        ciore.prove("|- p, q, r", atom_cap=2)


def test_cli():
    code, out, _ = ciore.run_cli(["countermodel", "p |- o p"])
    assert code == 1
    assert out.strip() == '{"p":"1/2"}'
    code, _, _ = ciore.run_cli(["prove"])
    assert code == 64
