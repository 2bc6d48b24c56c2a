"""Smoke test for the gabsc extension module.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``
or ``pip install ./crates/python``, then run ``python python/smoke_test.py``.
"""

import gabsc
from gabsc import Blade, Multivector, SymbolTable


def check_signs():
    a, b = Blade("11001010"), Blade("01000100")
    assert gabsc.product_sign(a, b) == -1
    sign, blade = gabsc.geometric_product(a, b)
    assert (sign, str(blade)) == (-1, "10001110")
    assert a * b == (sign, blade)
    assert gabsc.product_sign_reference(a, b) == sign
    assert gabsc.blade_inverse(Blade("1010")) == (-1, Blade("1010"))
    assert gabsc.hamming(a, b) == Blade("10001110").grade


def check_multivectors():
    x = Multivector(4, [(2.0, "0110"), (2.0, "1111")])
    name = Multivector.from_blade(Blade("1010"))
    assert (name * x).terms() == [(2.0, "0101"), (-2.0, "1100")]
    assert x.similarity(x) == 8.0
    pat = Multivector.from_blade(Blade("1100"))
    assert pat.trace_product(name * x, 4) == 32.0
    e14 = gabsc.rep(Multivector.from_blade(Blade("1001")), 4)
    assert [e14[i][i] for i in range(4)] == [1j, -1j, -1j, 1j]


def check_codecs():
    table = SymbolTable.generate(3, 64, 16, ["r1", "r2", "r3"], ["f1", "f2", "f3"])
    pairs = [("r1", "f2"), ("r2", "f3"), ("r3", "f1")]
    record = gabsc.ga_encode(table, pairs, [1.0, -2.0, 0.5])
    assert gabsc.Record.from_json(record.to_json()).multivector() == record.multivector()
    for (role, filler), weight in zip(pairs, [1.0, -2.0, 0.5]):
        out = gabsc.ga_decode(record, table, role)
        assert (out["filler"], out["score"], out["ambiguous"]) == (filler, weight, False)

    wide = SymbolTable.generate(5, 1024, 1024, ["r1", "r2", "r3"], ["f1", "f2", "f3"])
    classic = gabsc.classic_encode(wide, pairs, seed=1)
    assert classic.codec == "classic"
    for role, filler in pairs:
        assert gabsc.classic_decode(classic, wide, role)["filler"] == filler

    try:
        gabsc.ga_decode(record, table, "missing")
    except gabsc.GaBscError as e:
        assert "missing" in str(e)
    else:
        raise AssertionError("unknown role accepted")


def check_verify_and_bench():
    report = gabsc.verify()
    assert report["passed"] and report["trace_value"] == 32.0
    try:
        gabsc.verify(3)
    except ValueError:
        pass
    else:
        raise AssertionError("m=3 accepted")
    small = gabsc.bench(64, seed=1)
    assert small["n"] == 64 and small["products_per_sec"] > 0


if __name__ == "__main__":
    check_signs()
    check_multivectors()
    check_codecs()
    check_verify_and_bench()
    print("gabsc smoke test passed")
