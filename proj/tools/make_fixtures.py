#!/usr/bin/env python3
"""Regenerates the JSON fixtures under data/.

Small groups are written as explicit permutation generators. Groups without a
convenient small-degree representation (Q8 products, SL(2,3), the order-64
quaternionic-type holonomy group) are built abstractly and written as
permutation groups on cosets or on their own elements.

Usage: python3 tools/make_fixtures.py [data-dir]
"""

import json
import os
import sys
from fractions import Fraction


def to_cycles(perm):
    """perm: tuple of 0-based images. Returns 1-based cycles, fixed points omitted."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append([x + 1 for x in cyc])
    return cycles


def from_cycles(degree, cycles):
    p = list(range(degree))
    for c in cycles:
        for i, x in enumerate(c):
            p[x - 1] = c[(i + 1) % len(c)] - 1
    return tuple(p)


def compose(p, q):
    """p after q."""
    return tuple(p[q[i]] for i in range(len(q)))


def left_regular(elements, mul, gens):
    """Left regular permutation representation: g acts on x by x -> g x."""
    index = {x: i for i, x in enumerate(elements)}
    out = {}
    for name, g in gens.items():
        out[name] = tuple(index[mul(g, x)] for x in elements)
    return out


def closure(gens, mul, identity):
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def group_json(name, degree, gens, provenance):
    return {
        "name": name,
        "provenance": provenance,
        "degree": degree,
        "generators": {k: to_cycles(v) for k, v in gens.items()},
    }


# --- quaternions and dihedral elements as small tuples ----------------------


def q8_mul(x, y):
    # elements (sign, unit) with unit in {1,i,j,k}
    units = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    s, u = units[(x[1], y[1])]
    return (x[0] * y[0] * s, u)


def d8_mul(x, y):
    # (r, f): rotation^r * flip^f, flip r flip = r^-1
    r1, f1 = x
    r2, f2 = y
    r2e = -r2 if f1 else r2
    return ((r1 + r2e) % 4, f1 ^ f2)


def central_product(mul1, mul2, gens1, gens2, z1, z2, id1, id2):
    """(G1 x G2)/<(z1,z2)> for central involutions z1, z2."""
    def norm(p):
        a, b = p
        alt = (mul1(a, z1), mul2(b, z2))
        return min(p, alt)

    def mul(p, q):
        return norm((mul1(p[0], q[0]), mul2(p[1], q[1])))

    gens = {}
    for k, g in gens1.items():
        gens[k] = norm((g, id2))
    for k, g in gens2.items():
        gens[k] = norm((id1, g))
    ident = norm((id1, id2))
    elems = closure(list(gens.values()), mul, ident)
    return elems, mul, gens


# --- SL(2,3) -----------------------------------------------------------------

def sl23():
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    gens = {"s": (1, 1, 0, 1), "t": (1, 0, 1, 1)}
    ident = (1, 0, 0, 1)
    elems = closure(list(gens.values()), mul, ident)
    assert len(elems) == 24
    return elems, mul, gens


# --- the order-64 group from its power-commutator presentation ---------------

RHO1 = {
    "a": [[1, 13], [2, 14], [3, 9], [4, 10], [5, 21], [6, 22], [7, 11], [8, 12], [15, 24], [16, 23],
          [17, 26], [18, 25], [19, 27], [20, 28], [29, 31], [30, 32]],
    "b": [[1, 3, 2, 4], [5, 18, 6, 17], [7, 15, 8, 16], [9, 14, 10, 13], [11, 24, 12, 23],
          [19, 30, 20, 29], [21, 25, 22, 26], [27, 32, 28, 31]],
    "c": [[1, 5], [2, 6], [3, 18], [4, 17], [7, 20], [8, 19], [9, 26], [10, 25], [11, 27], [12, 28],
          [13, 22], [14, 21], [15, 29], [16, 30], [23, 31], [24, 32]],
    "d": [[1, 8, 2, 7], [3, 15, 4, 16], [5, 19, 6, 20], [9, 23, 10, 24], [11, 14, 12, 13],
          [17, 30, 18, 29], [21, 28, 22, 27], [25, 32, 26, 31]],
}

# squares: a^2 = c^2 = z1, b^2 = d^2 = z2; commutators [g_i, g_j] in Z = <z1, z2>
SQUARES = [(1, 0), (0, 1), (1, 0), (0, 1)]
COMMS = {(0, 1): (1, 0), (0, 2): (1, 1), (0, 3): (0, 1), (1, 2): (1, 0), (1, 3): (1, 1), (2, 3): (0, 0)}


def pc_mul(u, w):
    x, y = u[:4], w[:4]
    z = [u[4] ^ w[4], u[5] ^ w[5]]
    for i in range(4):
        for j in range(4):
            if x[i] and y[j]:
                if i > j:
                    c = COMMS[(j, i)]
                    z = [z[0] ^ c[0], z[1] ^ c[1]]
                elif i == j:
                    s = SQUARES[i]
                    z = [z[0] ^ s[0], z[1] ^ s[1]]
    return tuple(x[i] ^ y[i] for i in range(4)) + tuple(z)


def g64():
    ident = (0,) * 6
    gens = {"a": (1, 0, 0, 0, 0, 0), "b": (0, 1, 0, 0, 0, 0), "c": (0, 0, 1, 0, 0, 0), "d": (0, 0, 0, 1, 0, 0)}
    elems = closure(list(gens.values()), pc_mul, ident)
    assert len(elems) == 64
    rho1 = {k: from_cycles(32, v) for k, v in RHO1.items()}
    # homomorphism to rho1 along the Cayley graph (composition order)
    image = {ident: tuple(range(32))}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for k, s in gens.items():
                y = pc_mul(x, s)
                p = compose(image[x], rho1[k])
                if y in image:
                    assert image[y] == p, "rho1 is not a representation of the presented group"
                else:
                    image[y] = p
                    nxt.append(y)
        frontier = nxt
    kernel = [x for x in elems if image[x] == tuple(range(32))]
    assert kernel == [ident, (0, 0, 0, 0, 1, 0)], kernel
    # coset action on G / <b^2>
    b2 = (0, 0, 0, 0, 0, 1)
    cosets = []
    coset_of = {}
    for x in elems:
        if x in coset_of:
            continue
        coset_of[x] = len(cosets)
        coset_of[pc_mul(x, b2)] = len(cosets)
        cosets.append(x)
    out = {}
    for k, s in gens.items():
        second = tuple(coset_of[pc_mul(s, x)] for x in cosets)
        out[k] = rho1[k] + tuple(32 + i for i in second)
    return out


def dumps(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        items = [f'{pad}  {json.dumps(k)}: {dumps(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(x, (list, dict)) for x in obj):
        if all(isinstance(x, list) and not any(isinstance(y, (list, dict)) for y in x) for x in obj) and \
                sum(len(x) for x in obj) <= 64:
            return json.dumps(obj, separators=(", ", ": "))
        items = [f"{pad}  {dumps(x, indent + 1)}" for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, separators=(", ", ": "))


def write(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write(dumps(obj))
        fh.write("\n")


def frac_strings(v):
    return [str(Fraction(x)) for x in v]


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
    fx = os.path.join(root, "fixtures")

    def cyc(name, n):
        return group_json(name, n, {"a": tuple((i + 1) % n for i in range(n))}, f"cyclic group of order {n}")

    write(os.path.join(fx, "c1.json"), group_json("C1", 1, {"e": (0,)}, "trivial group"))
    for n in (2, 3, 4, 6, 8):
        write(os.path.join(fx, f"c{n}.json"), cyc(f"C{n}", n))
    write(os.path.join(fx, "v4.json"), group_json("C2xC2", 4, {"a": from_cycles(4, [[1, 2]]), "b": from_cycles(4, [[3, 4]])},
                                                 "Klein four-group"))
    write(os.path.join(fx, "c2c2c2.json"), group_json("C2xC2xC2", 6, {
        "a": from_cycles(6, [[1, 2]]), "b": from_cycles(6, [[3, 4]]), "c": from_cycles(6, [[5, 6]])},
        "elementary abelian group of order 8"))
    write(os.path.join(fx, "c4c4.json"), group_json("C4xC4", 8, {
        "a": from_cycles(8, [[1, 2, 3, 4]]), "b": from_cycles(8, [[5, 6, 7, 8]])}, "C4 x C4"))
    write(os.path.join(fx, "s3.json"), group_json("S3", 3, {"a": from_cycles(3, [[1, 2]]), "b": from_cycles(3, [[1, 2, 3]])},
                                                 "symmetric group on 3 points"))
    write(os.path.join(fx, "s4.json"), group_json("S4", 4, {"a": from_cycles(4, [[1, 2]]), "b": from_cycles(4, [[1, 2, 3, 4]])},
                                                 "symmetric group on 4 points"))
    write(os.path.join(fx, "a4.json"), group_json("A4", 4, {"a": from_cycles(4, [[1, 2, 3]]), "b": from_cycles(4, [[2, 3, 4]])},
                                                 "alternating group on 4 points"))
    write(os.path.join(fx, "d8.json"), group_json("D8", 4, {"r": from_cycles(4, [[1, 2, 3, 4]]), "s": from_cycles(4, [[1, 3]])},
                                                 "dihedral group of order 8"))

    q8_elems = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]
    q8_reg = left_regular(q8_elems, q8_mul, {"i": (1, "i"), "j": (1, "j")})
    write(os.path.join(fx, "q8.json"), group_json("Q8", 8, q8_reg, "quaternion group of order 8, regular action"))

    el, mul, gens = sl23()
    write(os.path.join(fx, "sl23.json"), group_json("SL(2,3)", 24, left_regular(el, mul, gens),
                                                   "SL(2,3), regular action on its 24 elements"))

    d8_gens = {"r": (1, 0), "s": (0, 1)}
    q8_gens = {"i": (1, "i"), "j": (1, "j")}
    el, mul, gens = central_product(q8_mul, d8_mul, q8_gens, d8_gens, (-1, "1"), (2, 0), (1, "1"), (0, 0))
    assert len(el) == 32
    write(os.path.join(fx, "es32minus.json"), group_json("Q8*D8", 32, left_regular(el, mul, gens),
                                                        "extraspecial group 2^(1+4)_- as central product Q8*D8, regular action"))
    d8b = {"u": (1, 0), "v": (0, 1)}
    el, mul, gens = central_product(d8_mul, d8_mul, d8_gens, d8b, (2, 0), (2, 0), (0, 0), (0, 0))
    assert len(el) == 32
    write(os.path.join(fx, "es32plus.json"), group_json("D8*D8", 32, left_regular(el, mul, gens),
                                                       "extraspecial group 2^(1+4)_+ as central product D8*D8, regular action"))

    write(os.path.join(fx, "rho1.json"), group_json(
        "rho1", 32, {k: from_cycles(32, v) for k, v in RHO1.items()},
        "32-point permutation representation rho1 printed in the quaternionic-type construction (kernel <a^2>)"))

    g = g64()
    g64_json = group_json("G64", 64, g,
                          "order-64 holonomy group: points 1-32 carry rho1 verbatim, points 33-64 the coset action on G/<b^2>")
    write(os.path.join(fx, "g64.json"), g64_json)

    thm = os.path.join(root, "paper-thm1")
    write(os.path.join(thm, "group.json"), g64_json)
    write(os.path.join(thm, "relations.json"), {
        "provenance": "presentation of the order-64 holonomy group",
        "relations": ["a^2=c^2", "b^2=d^2", "[a,b]=a^2", "[a,c]=a^2b^2", "[a,d]=b^2", "[b,c]=a^2",
                      "[b,d]=a^2b^2", "[c,d]=1", "a^4=1", "b^4=1"],
    })
    rho_m = {
        "a": ([8, 9, 12, 13], [[1, 7], [2, 5], [3, 11], [4, 6], [8, 12], [9, 13], [10, 14], [15, 16]]),
        "b": ([2, 3, 5, 6, 8, 10, 13, 14], [[1, 2], [3, 9], [4, 8], [5, 7], [6, 12], [10, 15], [11, 13], [14, 16]]),
        "c": ([2, 4, 5, 7, 9, 10, 11, 13], [[1, 3], [2, 9], [4, 10], [5, 13], [6, 14], [7, 11], [8, 15], [12, 16]]),
        "d": ([1, 6, 8, 9, 10, 11, 12, 13], [[1, 4], [2, 8], [3, 10], [5, 12], [6, 7], [9, 15], [11, 14], [13, 16]]),
    }
    action = {}
    for k, (neg, cycles) in rho_m.items():
        p = from_cycles(16, cycles)
        rows = []
        for i in range(16):
            row = [0] * 16
            row[p[i]] = -1 if (i + 1) in neg else 1
            rows.append(row)
        action[k] = rows
    write(os.path.join(thm, "module.json"), {
        "provenance": "signed permutation matrices rho_M printed for the lattice M = Z^16 (rows negated as listed)",
        "convention": "right",
        "rank": 16,
        "action": action,
    })
    half = Fraction(1, 2)
    alpha = {
        "a": [0, half, 0, 0, 0, half, half, half, half, 0, half, 0, 0, half, half, 0],
        "b": [0, 0, 0, half, 0, half, 0, half, 0, half, 0, half, 0, half, half, half],
        "c": [0, half, half, 0, 0, half, half, half, 0, half, 0, 0, half, 0, 0, half],
        "d": [0] * 16,
    }
    write(os.path.join(thm, "cocycle.json"), {
        "provenance": "printed cocycle alpha-hat with values in Q^16/Z^16",
        "module": "module.json",
        "values": {k: frac_strings(v) for k, v in alpha.items()},
    })
    basis = []
    for i in range(16):
        v = [0] * 32
        v[2 * i] = 1
        v[2 * i + 1] = -1
        basis.append(v)
    write(os.path.join(thm, "basis.json"), {
        "provenance": "printed Z-basis e1-e2, e3-e4, ..., e31-e32 of M inside the rho1 permutation lattice",
        "orbit": list(range(1, 33)),
        "basis": basis,
    })

    ex = os.path.join(root, "examples")
    hw = os.path.join(ex, "hantzsche-wendt")
    write(os.path.join(hw, "group.json"), group_json("C2xC2", 4, {"a": from_cycles(4, [[1, 2]]), "b": from_cycles(4, [[3, 4]])},
                                                    "holonomy group of the 3-dimensional Hantzsche-Wendt manifold"))
    write(os.path.join(hw, "module.json"), {
        "provenance": "holonomy matrices A, B of the Hantzsche-Wendt group",
        "rank": 3,
        "action": {"a": [[1, 0, 0], [0, -1, 0], [0, 0, -1]], "b": [[-1, 0, 0], [0, 1, 0], [0, 0, -1]]},
    })
    write(os.path.join(hw, "cocycle.json"), {
        "provenance": "translations of gamma_1 = (A, (1/2,1/2,0)) and gamma_2 = (B, (0,1/2,1/2))",
        "module": "module.json",
        "values": {"a": ["1/2", "1/2", "0"], "b": ["0", "1/2", "1/2"]},
    })
    kb = os.path.join(ex, "klein-bottle")
    write(os.path.join(kb, "group.json"), group_json("C2", 2, {"a": from_cycles(2, [[1, 2]])}, "holonomy group of the Klein bottle"))
    write(os.path.join(kb, "module.json"), {"provenance": "Klein bottle holonomy diag(1,-1)", "rank": 2,
                                            "action": {"a": [[1, 0], [0, -1]]}})
    write(os.path.join(kb, "cocycle.json"), {"provenance": "glide reflection (diag(1,-1), (1/2, 0))", "module": "module.json",
                                             "values": {"a": ["1/2", "0"]}})
    m2 = os.path.join(ex, "m2")
    c = [[-1, -1], [1, 0]]
    i2 = [[1, 0], [0, 1]]
    c2 = [[0, 1], [-1, -1]]

    def blockdiag(*blocks):
        n = 2 * len(blocks)
        m = [[0] * n for _ in range(n)]
        for k, b in enumerate(blocks):
            for r in range(2):
                for s in range(2):
                    m[2 * k + r][2 * k + s] = b[r][s]
        return m

    write(os.path.join(m2, "group.json"), group_json("C3xC3", 6, {"a": from_cycles(6, [[1, 2, 3]]), "b": from_cycles(6, [[4, 5, 6]])},
                                                    "holonomy group (Z_3)^2 of the complex-type manifold M_2"))
    write(os.path.join(m2, "module.json"), {
        "provenance": "matrices D = diag(I2,C,C,C) and E = diag(C,I2,C,C^2), C = [[-1,-1],[1,0]]",
        "rank": 8,
        "action": {"a": blockdiag(i2, c, c, c), "b": blockdiag(c, i2, c, c2)},
    })
    write(os.path.join(m2, "cocycle.json"), {
        "provenance": "translations of gamma_D and gamma_E",
        "module": "module.json",
        "values": {"a": ["-2/3", "1/3", "0", "0", "-2/3", "1/3", "-2/3", "1/3"],
                   "b": ["0", "0", "-2/3", "1/3", "0", "0", "0", "0"]},
    })


if __name__ == "__main__":
    main()
