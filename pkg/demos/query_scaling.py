# Eigenvalue counting cost against graph order.  The work per query is
# one pass over the cotree, so doubling the order should double the time.

import random
import time

from cographlap.cotree import random_cotree
from cographlap.diagonalize import count_relative

rng = random.Random(0)

for n in (12500, 25000, 50000, 100000):
    t = random_cotree(n, rng)
    count_relative(t, 50)  # warm caches before timing
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        count_relative(t, 50)
        best = min(best, time.perf_counter() - t0)
    print(f"n={n:6d}  {best * 1000:7.2f} ms per query")
