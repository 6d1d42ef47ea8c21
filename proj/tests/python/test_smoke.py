import motso


def test_rank_and_kernel():
    assert motso.rank([[1, 1], [1, 1]]) == 1
    assert motso.rank([[1, 0], [0, 1]]) == 2
    ker = motso.kernel_basis([[1, 1, 0], [0, 1, 1]])
    assert ker == [[1, 1, 1]]
    assert motso.solve([[1, 1], [0, 1]], [0, 1]) == [1, 1]
    assert motso.solve([[0, 0]], [1]) is None


def test_qop():
    assert motso.qop(0, 4, "m[1,1,1]") == "m[2,1,1]"
    assert motso.qop(0, 1, "x1") == "m[2]"
    assert motso.qop(0, 2, "x1") == "x1^2"
    assert motso.qop_so(0, 6, "w4") == "w5"
    assert motso.qop_so(0, 4, "w4") == "0"


def test_weights():
    assert motso.weight("bo:4", "w4") == 4
    assert motso.weight("bso:6", "w6") == 4
    assert motso.weight("bso:5", "w3") == 1
    assert motso.weight("bo:3/c1", "w1*w3") == 2


def test_dims_and_kernel_table():
    entries = {(e["degree"], e["twist"]): e["dim"] for e in motso.dims("bo:3", 4)}
    assert entries[(4, 4)] == 4
    table = {(e["degree"], e["twist"]): e["dim"] for e in motso.kernel_table(2, 12)}
    assert table[(4, 2)] == 1
    assert table[(12, 6)] == 2
    assert table == {
        (e["degree"], e["twist"]): e["dim"] for e in motso.kernel_closed_form(2, 12)
    }


def test_wilson_and_verify():
    basis = motso.wilson_basis(2, 2)
    assert len(basis) == 2
    assert motso.verify_wilson(3, 10)
    assert motso.verify_milnor_laws(100, 7)
    assert motso.verify_theorem(2, 12)
    assert not motso.verify_theorem(3, 12, perturbed=True)
