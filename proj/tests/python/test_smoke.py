import math

import pytest

import gaqc

HAMMING = ["1000110", "0100101", "0010011", "0001111"]


def test_field_arithmetic():
    f = gaqc.Field(6)
    assert f.size == 64 and f.modulus == 0x43
    for x in range(1, 64):
        assert f.mul(x, f.inv(x)) == 1
    basis = f.self_dual_basis()
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert f.trace(f.mul(a, b)) == (1 if i == j else 0)


def test_hamming_css():
    h = gaqc.LinearCode.from_generator(HAMMING, "hamming")
    assert (h.n, h.k) == (7, 4)
    assert gaqc.min_distance(h)["lower"] == 3
    q = gaqc.css(h, h)
    assert (q["n"], q["k"], q["dz"]["lower"], q["dx"]["lower"], q["pure"]) == (7, 1, 3, 3, "verified")


def test_goppa_55_16_19():
    c = gaqc.goppa_code(6, "z^9+1")
    assert (c.n, c.k) == (55, 16)
    d = gaqc.min_distance(c)
    assert d["status"] == "exact" and d["lower"] == 19
    # Direct oracle on the weight histogram.
    hist = gaqc.weight_distribution(c)
    assert sum(hist) == 2**16
    assert min(w for w, a in enumerate(hist) if a and w) == 19
    assert c.extend().n == 56 and c.puncture(54).n == 54


def test_subclass_and_grs():
    q = gaqc.bezzateev_aqc(6, 9, "extended")
    assert (q["n"], q["k"], q["dz"]["lower"], q["dx"]["lower"], q["S"]) == (56, 15, 20, 2, 1)
    g = gaqc.expanded_grs_aqc(3, 4, 4)
    assert g["extension"] == {"n": 7, "k": 1, "dz": 4, "dx": 4}
    assert g["contained"] and g["binary"]["n"] == 21


def test_gv_zero():
    rows = gaqc.gv_curves(0.001)
    assert rows[-1][0] == pytest.approx(0.5) and rows[-1][1] == pytest.approx(0.0, abs=1e-12)
    assert gaqc.inverse_entropy(0.5) == pytest.approx(0.110028, abs=1e-6)
    assert gaqc.binary_entropy(0.5) == pytest.approx(1.0)
    assert 1 - 2 * gaqc.binary_entropy(0.110028) == pytest.approx(0.0, abs=1e-5)
    assert not math.isnan(rows[100][2])


def test_reproduce_rows():
    rows = gaqc.reproduce(1, "1,16")
    assert rows[0]["verdict"] == "match"
    assert rows[1]["verdict"] == "mismatch" and rows[1]["alternatives"]
    assert all(r["verdict"] == "match" for r in gaqc.reproduce(2, "m6"))


def test_errors():
    with pytest.raises(gaqc.UsageError):
        gaqc.goppa_code(6, "z^9+1", variant="nope")
    with pytest.raises(ValueError):
        gaqc.reproduce(1, "99")
    h = gaqc.LinearCode.from_generator(HAMMING)
    with pytest.raises(gaqc.UsageError):
        gaqc.css(h.dual(), h.dual())
