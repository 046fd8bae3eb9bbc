"""Count w-core invertible pairs in M_2(Z_p) and cross-check against brute force.

Run with ``python3 demos/finite_ring_census.py [p]`` (default p = 2).
"""

import sys
from collections import Counter

from wcore.geninv import GenInvKind, try_inverse
from wcore.harness import brute_force_inverse, enumerate_ring

p = int(sys.argv[1]) if len(sys.argv) > 1 else 2
ring = list(enumerate_ring(p, 2))
tally = Counter()
for a in ring:
    for w in ring:
        x = try_inverse(GenInvKind.WCORE, a, w)
        found = brute_force_inverse(GenInvKind.WCORE, a, w)
        assert (x is None) == (not found) and (x is None or found == [x])
        tally["invertible" if x is not None else "not invertible"] += 1

print(f"M_2(Z_{p}): {len(ring)} matrices, {len(ring) ** 2} pairs (a, w)")
for k, v in sorted(tally.items()):
    print(f"  {k}: {v}")
print("constructor and brute force agree on every pair")
