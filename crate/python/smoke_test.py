#!/usr/bin/env python3
"""Smoke test for the pchar_py extension module.

Builds the cdylib with cargo, copies it next to this script under the
importable name, and exercises the main types and operations end to end.
Run from anywhere: `python3 python/smoke_test.py`.
"""

import json
import pathlib
import shutil
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "pchar-py"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libpchar_py.so"
    target = HERE / "pchar_py.so"
    shutil.copy2(built, target)
    sys.path.insert(0, str(HERE))
    import pchar_py

    return pchar_py


def main():
    m = build_and_import()

    # Family construction and the headline eta values.
    inst = m.family_a(3)
    g = inst.group()
    assert g.order() == 81
    assert inst.index_exponent() == 2
    eta, mults, cert = inst.eta()
    assert eta == 2, eta
    assert sorted(mults) == [1, 2], mults
    cert = json.loads(cert)
    assert cert["checks_passed"] is True
    assert cert["evidence"][0][0] == 5  # [lambda^G, lambda^G]

    for p, expect in [(3, 2), (5, 3), (7, 4)]:
        eta, _, _ = m.family_a(p).eta(oracle_bound=p**4)
        assert eta == expect, (p, eta, expect)

    b7 = m.family_b(7)
    eta, mults, _ = b7.eta()
    assert (eta, sorted(mults)) == (3, [1, 3, 3])

    lifted = m.wreath_lift(m.family_a(3))
    assert lifted.group().order() == 3**13
    eta, mults, _ = lifted.eta()
    assert (eta, sorted(mults)) == (2, [1, 2])

    # Element arithmetic: a*c collects to c*a*b in the order-81 group.
    a = [0, 1, 0, 0]
    c = [1, 0, 0, 0]
    assert g.multiply(a, c) == [1, 1, 1, 0]
    assert g.multiply(g.inverse(a), a) == [0, 0, 0, 0]
    # a^{c^2} = a b^2 z.
    assert g.conjugate(a, g.power(c, 2)) == [0, 1, 2, 1]

    # Subgroups, characters, inner products.
    h = g.subgroup([[0, 1, 0, 0], [0, 0, 0, 1]])
    assert h.order() == 9
    assert h.contains([0, 2, 0, 1])
    assert not h.contains(c)
    lam = h.character([0, 1], 3)
    assert lam.eval([0, 2, 0, 1]) == 1
    assert lam.eval(c) is None
    assert m.mackey_inner_product(lam, lam) == 5
    assert m.naive_inner_product(lam, lam) == (5, 1)
    eta, cert = lam.eta()
    assert eta == 2

    a_sub = g.subgroup([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert len(a_sub.linear_characters()) == 27

    # Presentation text round trip.
    text = g.to_text()
    g2 = m.PcGroup.from_text(text)
    assert g2.to_text() == text

    # Oracle table of the order-81 group.
    table = json.loads(m.oracle_irr(g))
    assert table["count"] == 17
    assert sorted(set(table["degrees"])) == [1, 3]

    # A verification check through the bindings.
    report = json.loads(m.verify_check("prop-dade", prime=5))
    assert report["status"] == "pass"
    assert report["computed"] == {"eta": 3}

    print("smoke test: all assertions passed")


if __name__ == "__main__":
    main()
