"""Strict 1-bridge braids with two or more solid torus fillings, omega <= N."""
import argparse
import time

from oneone import braid as br

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("N", type=int, nargs="?", default=20)
args = ap.parse_args()

t0 = time.time()
three, two = br.berge_search(args.N)
print(f"omega <= {args.N}: {len(three)} braids with three fillings, {len(two)} with two "
      f"({time.time() - t0:.1f}s)")
for K, fs in three:
    I = br.slope_interval(K)
    print(f"  {K}  I = {I}  fillings {', '.join(map(str, fs))}  mirror {br.mirror(K)}")
