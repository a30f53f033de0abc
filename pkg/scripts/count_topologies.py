"""Print labeled topology counts, with connected counts, for n = 1..max_n."""

import argparse
import time

from fintopo.topology import topologies


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        start = time.monotonic()
        spaces = topologies(n)
        connected = sum(s.is_connected for s in spaces)
        print(f"n={n} topologies={len(spaces)} connected={connected} ({time.monotonic() - start:.2f}s)")


if __name__ == "__main__":
    main()
