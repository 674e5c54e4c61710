"""Regenerates fixtures/sz8.json.

Sz(8) is built from its 4x4 matrix generators over GF(8) acting on the
65 points of the Suzuki-Tits ovoid in PG(3,8). Two random elements that
generate the whole group are written out in cycle notation.
"""
import json
import random
import sys

from sympy.combinatorics import Permutation, PermutationGroup

POLY = 0b1011  # x^3 + x + 1


def mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= POLY
    return r


def power(a, e):
    r = 1
    for _ in range(e):
        r = mul(r, a)
    return r


def inv(a):
    return power(a, 6)


R = 4  # x -> x^4 squares to the Frobenius on GF(8)


def t_mat(a, b):
    return [
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, power(a, R), 1, 0],
        [mul(power(a, 2 + R), 1) ^ mul(a, b) ^ power(b, R), power(a, 1 + R) ^ b, a, 1],
    ]


def d_mat(k):
    return [
        [power(k, 3), 0, 0, 0],
        [0, power(k, 2), 0, 0],
        [0, 0, inv(power(k, 2)), 0],
        [0, 0, 0, inv(power(k, 3))],
    ]


W = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def apply(m, v):
    out = []
    for row in m:
        s = 0
        for x, y in zip(row, v):
            s ^= mul(x, y)
        out.append(s)
    return normalize(out)


def normalize(v):
    for x in v:
        if x:
            c = inv(x)
            return tuple(mul(c, y) for y in v)
    raise ValueError("zero vector")


def main():
    gens = [t_mat(1, 0), t_mat(0, 1), t_mat(2, 0), d_mat(2), W]
    start = normalize([0, 0, 0, 1])
    orbit = [start]
    index = {start: 0}
    i = 0
    while i < len(orbit):
        for m in gens:
            w = apply(m, orbit[i])
            if w not in index:
                index[w] = len(orbit)
                orbit.append(w)
        i += 1
    assert len(orbit) == 65, len(orbit)
    orbit.sort()
    index = {v: i for i, v in enumerate(orbit)}
    perms = [Permutation([index[apply(m, v)] for v in orbit]) for m in gens]
    full = PermutationGroup(perms)
    assert full.order() == 29120, full.order()

    rng = random.Random(8)

    def random_word():
        p = Permutation(64)
        for _ in range(40):
            p = p * rng.choice(perms)
        return p

    while True:
        a, b = random_word(), random_word()
        if PermutationGroup([a, b]).order() == 29120:
            break

    def cycles(p):
        out = []
        for c in p.cyclic_form:
            k = c.index(min(c))
            c = c[k:] + c[:k]
            out.append("(" + ",".join(str(x + 1) for x in c) + ")")
        out.sort(key=lambda s: int(s[1:].split(",")[0].rstrip(")")))
        return "".join(out)

    doc = {
        "format_version": 1,
        "name": "Sz(8)",
        "degree": 65,
        "generators": [cycles(a), cycles(b)],
        "claimed_order": 29120,
        "provenance": "Suzuki group Sz(8) acting 2-transitively on the 65 points of the "
        "Suzuki-Tits ovoid in PG(3,8); two generators chosen from the group built by "
        "fixtures/gen_sz8.py from the standard 4x4 matrix generators over GF(8).",
    }
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
