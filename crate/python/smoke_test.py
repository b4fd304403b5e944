"""Smoke test for the sedqm extension module.

Build first:  cd crates/python && maturin develop
Run:          python python/smoke_test.py
"""

import math

import sedqm
from sedqm import Element


def main():
    assert len(sedqm.basis_units()) == 16
    assert sedqm.basis_product("i0", "i1") == "-e1"

    i4, i5, i2 = (Element.basis(n) for n in ("i4", "i5", "i2"))
    assert str(sedqm.na_bracket(i4, i5, i2)) == "-2*i3"
    assert str(sedqm.evaluate("[i4,i5,i2]")) == "-2*i3"
    assert str(sedqm.evaluate("assoc(i1,i2,i4)")) == "2*i7"
    assert str(sedqm.commutator(Element.basis("i1"), Element.basis("i2"))) == "2*i3"

    x = Element.basis("i1") + 1j * Element.basis("e1")
    assert str(x) == "i1 + (0+1I)*e1"
    assert str(x * x) == "-2 + (0+2I)*i0"
    assert x.coeff("e1") == 1j
    assert len(x.coeffs()) == 16
    assert (-x + x).is_zero()

    try:
        sedqm.evaluate("i1*")
    except ValueError as e:
        assert "^" in str(e)
    else:
        raise AssertionError("expected ValueError")

    reports = sedqm.run_all()
    assert len(reports) == len(sedqm.suite_names())
    assert all(not r["failures"] for r in reports), [r["suite"] for r in reports if r["failures"]]
    assert not sedqm.homomorphism_check()["failures"]
    assert not sedqm.pauli_relations_check()["failures"]

    assert sedqm.rep("e3")[0][0] in (1, -1, 1j, -1j, 0)
    assert sedqm.export_table("csv").count("\n") >= 16

    times, states = sedqm.simulate("na-qubit", t_max=2 * math.pi, dt=1e-3)
    assert len(times) == 6284
    assert abs(times[-1] - 2 * math.pi) < 1e-12
    drift = max(abs(sum(c * c for c in s) - 1.0) for s in states)
    assert drift < 1e-8, drift

    s = sedqm.analytic_rotation([1.0, 0.0, 0.0], 1.0, 2 * math.pi, "na")
    assert abs(sum(c * c for c in s) - 1.0) < 1e-12

    ds, dl = sedqm.operator_rhs([1.0, 0.0, 0.0], l=[0.0, 1.0, 0.0])
    assert len(ds) == 3 and len(dl) == 3

    sx, ly = sedqm.analytic_extended(1.0, 1.0, 1.0, 1.0, 1, -1, 0.0)
    assert abs(sx - 1.0) < 1e-12 and abs(ly - 1.0) < 1e-12

    print("smoke test passed")


if __name__ == "__main__":
    main()
