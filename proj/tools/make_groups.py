#!/usr/bin/env python3
"""Regenerates the Cayley-table files under data/groups/.

Each group is built from an explicit normal-form multiplication rule, then
written with the identity relabelled to index 0. Element order inside a file
is the sorted order of the normal forms, so the output is deterministic.
"""
import itertools
import os
import sys


class Group:
    def __init__(self, elements, mul, identity):
        self.elements = list(elements)
        self.mul = mul
        self.identity = identity


def direct(g, h):
    els = [(a, b) for a in g.elements for b in h.elements]
    return Group(els, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
                 (g.identity, h.identity))


def quotient(g, central):
    """Quotient by a central subgroup given as a list of elements."""
    reps = {}
    classes = []
    for x in sorted(g.elements):
        if x in reps:
            continue
        coset = sorted(g.mul(x, z) for z in central)
        for y in coset:
            reps[y] = coset[0]
        classes.append(coset[0])
    return Group(classes, lambda x, y: reps[g.mul(x, y)], reps[g.identity])


def cyclic(n):
    return Group(range(n), lambda x, y: (x + y) % n, 0)


def dihedral(n):
    # order 2n: (i, j) = r^i s^j, s r = r^-1 s
    els = [(i, j) for i in range(n) for j in range(2)]
    return Group(els, lambda x, y: ((x[0] + (-1) ** x[1] * y[0]) % n,
                                    (x[1] + y[1]) % 2), (0, 0))


def dicyclic(n):
    # order 4n: a^i b^j, a of order 2n, b^2 = a^n, b a = a^-1 b
    def mul(x, y):
        i = (x[0] + (-1) ** x[1] * y[0]) % (2 * n)
        j = x[1] + y[1]
        if j == 2:
            i = (i + n) % (2 * n)
            j = 0
        return (i, j)
    els = [(i, j) for i in range(2 * n) for j in range(2)]
    return Group(els, mul, (0, 0))


def metacyclic(n, m, k):
    # a^i b^j with a^n = b^m = 1, b a b^-1 = a^k
    def mul(x, y):
        return ((x[0] + pow(k, x[1], n) * y[0]) % n, (x[1] + y[1]) % m)
    els = [(i, j) for i in range(n) for j in range(m)]
    return Group(els, mul, (0, 0))


def quaternion():
    return dicyclic(2)


def sl23():
    p = 3
    els = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            els.append((a, b, c, d))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)
    return Group(els, mul, (1, 0, 0, 1))


def power(g, x, k):
    r = g.identity
    for _ in range(k):
        r = g.mul(r, x)
    return r


def c3_semidirect_d4():
    # C3 x| D4 where the rotation of D4 inverts C3 and the reflection centralises it
    d4 = dihedral(4)

    def act(d, c):
        return c if d[0] % 2 == 0 else (-c) % 3

    def mul(x, y):
        return ((x[0] + act(x[1], y[0])) % 3, d4.mul(x[1], y[1]))
    els = [(c, d) for c in range(3) for d in d4.elements]
    return Group(els, mul, (0, (0, 0)))


def central_product(g, zg, h, zh):
    prod = direct(g, h)
    return quotient(prod, [prod.identity, (zg, zh)])


def write(group, path):
    els = [group.identity] + [x for x in sorted(group.elements) if x != group.identity]
    index = {x: i for i, x in enumerate(els)}
    n = len(els)
    with open(path, "w") as out:
        out.write("order %d\n" % n)
        for x in els:
            out.write(" ".join(str(index[group.mul(x, y)]) for y in els) + "\n")
    return index


def order48_datum(outdir):
    """C2 x SL(2,3) and a generating 5-tuple with product 1 for the genus 25
    cover used in data/examples/order48_r5.json."""
    s = sl23()
    els = s.elements

    def inv(x):
        return next(y for y in els if s.mul(x, y) == s.identity)
    found = None
    for g2, g3, g4 in itertools.product(els, repeat=3):
        g5 = s.mul(g3, g3)
        if g5 == s.identity or s.mul(g5, g5) != s.identity:
            continue
        if s.mul(g4, g4) != g5 or power(s, g2, 3) != s.identity or g2 == s.identity:
            continue
        if s.mul(s.mul(inv(g2), g3), g2) != g4:
            continue
        if s.mul(s.mul(inv(g2), g4), g2) != s.mul(g3, g4):
            continue
        if s.mul(s.mul(inv(g3), g4), g3) != s.mul(g4, g5):
            continue
        found = (g2, g3, g4, g5)
        break
    g2, g3, g4, g5 = found
    grp = direct(cyclic(2), s)
    e = s.identity
    G1 = (1, e)
    lift = lambda x: (0, x)
    m = grp.mul
    tup = [m(G1, lift(g5)), G1, lift(s.mul(g2, g4)), lift(s.mul(s.mul(g2, g3), g4)), lift(g2)]
    sigma = lift(g5)
    index = write(grp, os.path.join(outdir, "c2_x_sl23.cayley"))
    return [index[t] for t in tup], index[sigma]


GROUPS = {
    "d4": lambda: dihedral(4),
    "q8": quaternion,
    "d12": lambda: dihedral(6),
    "dic3": lambda: dicyclic(3),
    "c4_rtimes_c4": lambda: metacyclic(4, 4, 3),
    "d16": lambda: dihedral(8),
    "sd16": lambda: metacyclic(8, 2, 3),
    "c2_x_d4": lambda: direct(cyclic(2), dihedral(4)),
    "c2_x_q8": lambda: direct(cyclic(2), quaternion()),
    "c4_central_d4": lambda: central_product(cyclic(4), 2, dihedral(4), (2, 0)),
    "c2_x_dic3": lambda: direct(cyclic(2), dicyclic(3)),
    "c3_rtimes_d4": c3_semidirect_d4,
    "c8_central_d4": lambda: central_product(cyclic(8), 4, dihedral(4), (2, 0)),
    "c4_central_d16": lambda: central_product(cyclic(4), 2, dihedral(8), (4, 0)),
    "c2_x_c4_central_d4": lambda: direct(cyclic(2), central_product(cyclic(4), 2, dihedral(4), (2, 0))),
    "d4_central_q8": lambda: central_product(dihedral(4), (2, 0), quaternion(), (2, 0)),
    "q8_central_d16": lambda: central_product(quaternion(), (2, 0), dihedral(8), (4, 0)),
    "c2_c2_x_d4": lambda: direct(direct(cyclic(2), cyclic(2)), dihedral(4)),
}


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    outdir = os.path.join(root, "data", "groups")
    os.makedirs(outdir, exist_ok=True)
    for name, make in sorted(GROUPS.items()):
        write(make(), os.path.join(outdir, name + ".cayley"))
    tup, sigma = order48_datum(outdir)
    print("order 48 datum tuple:", tup, "sigma:", sigma, file=sys.stderr)


if __name__ == "__main__":
    main()
