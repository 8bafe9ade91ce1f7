"""Smoke test for the ifv_topsis extension module.

Build and install first:

    pip install --no-build-isolation -e crates/python
"""

import math

import ifv_topsis as ft


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    a = ft.Ifv(0.6, 0.3)
    b = ft.Ifv(0.5, 0.2)
    assert close(a.score(), 0.3, 1e-12)
    assert a.complement() == ft.Ifv(0.3, 0.6)
    assert a.meet(b) == ft.Ifv(0.5, 0.3)
    assert close((a + b).mu, 0.8, 1e-12)
    assert close((a * b).nu, 0.44, 1e-12)
    assert ft.compare(ft.Ifv(0.3, 0.0), ft.Ifv(0.64, 0.36), "partial") is None
    assert ft.compare(ft.Ifv(0.64, 0.36), ft.Ifv(0.3, 0.0)) == -1
    assert ft.distance(ft.Ifv(0.0, 1.0), ft.Ifv(1.0, 0.0), "zx", 10.0) == 1.0
    assert close(ft.euclid([ft.Ifv(0.0, 1.0)], [ft.Ifv(1.0, 0.0)]), 1.0, 1e-12)

    try:
        ft.Ifv(0.7, 0.8)
    except ValueError:
        pass
    else:
        raise AssertionError("invalid IFV accepted")

    p = ft.Problem.dataset("supplier_selection")
    r = ft.topsis_proposed(p)
    assert r["ranking"] == "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1", r
    assert close(r["closeness"][0], 0.4321, 5e-5)

    q = ft.Problem.from_json(p.to_json())
    assert q.to_json() == p.to_json()

    pm = ft.Problem.dataset("project_manager")
    r = ft.topsis_proposed(pm, order="kk", lam=100.0, gamma1=0.2, gamma2=0.4)
    assert r["ranking"] == "A1 ≻ A3 ≻ A5 ≻ A2 ≻ A4", r

    li = ft.topsis_li(ft.Problem.dataset("li_ifv_weights"))
    assert close(li["closeness"][1], 0.9085917, 1e-6)
    chen = ft.topsis_chen(ft.Problem.dataset("chen_xy"))
    assert chen["ranking"] == "A4 ≻ A3 ≻ A2 ≻ A1"

    ids = ft.check_ids()
    assert "sck_collision" in ids
    for cid in ids:
        ok, text = ft.run_check(cid)
        assert ok, text
    assert not math.isnan(r["closeness"][0])
    print(f"ok: {len(ids)} checks passed")


if __name__ == "__main__":
    main()
