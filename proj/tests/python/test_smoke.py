"""Smoke tests for the python bindings; runnable standalone or under pytest."""

import math
import sys


def test_failure_probability():
    import hqt

    assert abs(hqt.failure_probability(1.4) - math.exp(-2 * 1.4**2) / 2) < 1e-15
    assert hqt.lossy_failure_probability(1.0, 0.0) == hqt.failure_probability(1.0)


def test_teleport_roundtrip():
    import hqt

    rng = hqt.Rng.stream(7, 0, 0, 0)
    q = hqt.HybridQubit(0.6, 0.8j, 1.2)
    fails = 0
    shots = 2000
    for _ in range(shots):
        r = hqt.teleport(q, hqt.ChannelKind.PSI_C, rng)
        if r.success:
            assert hqt.fidelity(r.output, q) > 1 - 1e-12
        else:
            fails += 1
    pf = hqt.failure_probability(1.2)
    sigma = math.sqrt(pf * (1 - pf) / shots)
    assert abs(fails / shots - pf) < 5 * sigma


def test_oracle_distribution():
    import hqt

    q = hqt.HybridQubit(1.0, 0.0, 0.7)
    rows = hqt.oracle_teleport_distribution(q, hqt.ChannelKind.PSI_C)
    total = sum(r.probability for r in rows)
    assert abs(total - 1.0) < 1e-6
    for r in rows:
        if not r.failure:
            assert r.fidelity > 1 - 1e-7


def test_resources():
    import hqt

    assert round(hqt.total_round_cost(hqt.Strategy.GI, 1.0)) == 28780
    assert 0.55 < hqt.crossover_alpha() < 0.63


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
