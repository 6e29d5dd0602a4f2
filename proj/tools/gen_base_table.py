#!/usr/bin/env python3
"""Regenerates the embedded good-permutation table in src/base_table.cpp
(prints the initializer rows; paste them into base_table()).

For every n <= 6, start s and variant (1 = odd-high, 2 = odd-low) prints the
lexicographically first good permutation of [n], if any.
"""
from itertools import permutations

MAX_N = 6


def graceful(p):
    diffs = [abs(b - a) for a, b in zip(p, p[1:])]
    return len(set(diffs)) == len(diffs)


def halves_ok(p, variant):
    n = len(p)
    hi = (n + 2) // 2  # ceil((n+1)/2)
    lo = (n + 1) // 2  # floor((n+1)/2)
    for i, v in enumerate(p, start=1):
        if variant == 1:
            if (i % 2 == 1 and v < hi) or (i % 2 == 0 and v >= hi):
                return False
        else:
            if (i % 2 == 1 and v > lo) or (i % 2 == 0 and v <= lo):
                return False
    return True


def main():
    for n in range(1, MAX_N + 1):
        for s in range(1, n + 1):
            for variant in (1, 2):
                for p in permutations(range(1, n + 1)):
                    if p[0] == s and graceful(p) and halves_ok(p, variant):
                        body = ", ".join(str(v) for v in p)
                        print(f"    {{{n}, {s}, GoodVariant::Type{variant}, {{{body}}}}},")
                        break


if __name__ == "__main__":
    main()
