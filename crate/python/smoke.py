"""Smoke test for the knotforge Python bindings.

Build and install first:  pip install -e crates/python --no-build-isolation
"""

import knotforge_py as kf

QUARTIC = [(0, 1), (1, -3), (2, 5), (3, -3), (4, 1)]

k0 = kf.Diagram(kf.PD_63)
assert len(k0) == 6 and k0.writhe == 0
assert k0.alexander() == QUARTIC
assert kf.is_irreducible(QUARTIC)
assert kf.fox_milnor(QUARTIC) is None
assert kf.Diagram.from_tuples(k0.tuples()) == k0
square = [(0, 1), (1, -6), (2, 19), (3, -36), (4, 45), (5, -36), (6, 19), (7, -6), (8, 1)]
assert kf.fox_milnor(square) == QUARTIC

k1 = kf.family_63(1)
km1 = kf.family_63(-1)
assert k1.alexander() == QUARTIC
assert k0.jones() != k1.jones()
assert k0.jones() == km1.jones()
assert kf.monodromy_alexander(1) == QUARTIC
assert k0.mirror().jones() == [(-e, c) for e, c in reversed(k0.jones())]

assert kf.d3_family(0) == "3/2"
assert kf.d3_family(1) == "-1/2"
assert kf.d3('{"linking": [], "rotations": [], "q": 0}') == "-1/2"
assert kf.same_fibered_knot(0, -1) and not kf.same_fibered_knot(0, 1)

c0 = kf.Certificate("K_0", k0, fibered="asserted", distinct="jones-mismatch")
c1 = kf.Certificate("K_1", k1, fibered="inherited-via-0-surgery")
assert kf.miyazaki_verdict(c0, c1)["conclusion"] == "NotRibbon"
assert kf.fox_milnor_verdict(c0)["conclusion"] == "FoxMilnorObstructed"
assert kf.fox_milnor_verdict(c0.composite(c1))["conclusion"] == "Inconclusive"
bare = kf.Certificate("K_1", k1)
assert kf.miyazaki_verdict(c0, bare)["conclusion"] == "NotApplicable"

report = kf.dichotomy(1, 2, jones_crossing_limit=0)
assert report["d3"] == ["-1/2", "-9/2"]
assert report["not_ribbon"]["conclusion"] == "NotRibbon"

try:
    kf.dichotomy(0, -1)
except ValueError as e:
    assert "same" in str(e)
else:
    raise AssertionError("K_0 and K_-1 must be rejected")

try:
    kf.Diagram("X(1,1,2,3)")
except ValueError as e:
    assert "arc" in str(e)
else:
    raise AssertionError("bad PD accepted")

print("knotforge_py", kf.__version__, "smoke test passed")
