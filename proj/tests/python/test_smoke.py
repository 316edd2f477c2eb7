import extensor


def test_characters():
    assert extensor.character("2,1", "3") == "-1"
    assert extensor.character("1,1", "1,1") == "1"
    assert extensor.character_dim("2,2") == "2"


def test_capelli_and_eigenvalues():
    assert extensor.capelli(1, 3) == "E11 + E22 + E33"
    assert extensor.hc_eigenvalue("capelli:2", "1,1", 2) == "2"
    # G-circ on a column is the Capelli element.
    assert extensor.quantum_immanant("Gcirc", "1,1", 2) == extensor.capelli(2, 2)


def test_symmetric_functions():
    assert extensor.schur("2", ["2", "5"]) == "39"
    assert extensor.kostka("2,1", "1,1,1") == 2
    assert extensor.content_sum("1", "2,1", 2, "B") == "3"


def test_immanants():
    m = [["1", "2"], ["3", "4"]]
    assert extensor.immanant("column", "1,1", m) == "-2"
    assert extensor.immanant("column", "2", m) == "10"


def test_verify_suite():
    out = extensor.run_verify("ccr", n=2)
    assert len(out) == 1
    assert out[0]["ok"] is True
    assert all(case["equal"] for case in out[0]["cases"])
