#!/usr/bin/env python3
"""Independent oracle for the Jordan-flavored catalog instances.

All arithmetic is exact (Fraction / sympy.Rational).

  * sym2: symmetric 2x2 matrices, basis s1=E11, s2=E12+E21, s3=E22,
    product x o y = (xy + yx)/2. Recomputes the structure table, verifies
    commutativity and the classical Jordan identity symbolically, and the
    cyclic linearized Jordan form over all 81 basis quadruples.
  * regular sym2 bimodule: verifies the classical specialization of the
    bimodule conditions (r3/r4/r5 with identity twists) over basis tuples.
  * matrix2x2: verifies that x*y + y*x (the plus product with identity
    twists) satisfies the Jordan identity over basis quadruples.
  * conjugation by diag(1,-1): automorphism of both instances.
  * rb_toy: mu(e1,e1)=e2 (rest 0), R=diag(0,1): weight-0 Rota-Baxter
    identity over the four basis pairs; deformed product is zero.

Outputs are frozen into the C++ test suite.
"""
import itertools
from fractions import Fraction

import sympy as sp

# ---- sym2 ----
E = lambda i, j: sp.Matrix(2, 2, lambda r, c: 1 if (r, c) == (i, j) else 0)
S = [E(0, 0), E(0, 1) + E(1, 0), E(1, 1)]


def jprod(x, y):
    return (x * y + y * x) / 2


def coords(m):
    # m symmetric: m = c1 s1 + c2 s2 + c3 s3
    assert m[0, 1] == m[1, 0]
    return [m[0, 0], m[0, 1], m[1, 1]]


print("== sym2 table ==")
tab = [[coords(jprod(S[i], S[j])) for j in range(3)] for i in range(3)]
for i in range(3):
    for j in range(3):
        print(f"  s{i+1} o s{j+1} -> {tab[i][j]}")

x1, x2, x3, y1, y2, y3 = sp.symbols("x1 x2 x3 y1 y2 y3")
X = x1 * S[0] + x2 * S[1] + x3 * S[2]
Y = y1 * S[0] + y2 * S[1] + y3 * S[2]
comm = sp.simplify(jprod(X, Y) - jprod(Y, X)) == sp.zeros(2, 2)
jid = sp.expand(jprod(jprod(X, Y), jprod(X, X)) - jprod(X, jprod(Y, jprod(X, X)))) == sp.zeros(2, 2)
print("commutative (symbolic):", comm)
print("classical Jordan identity (symbolic):", jid)


def jmul_vec(u, v):
    out = [sp.Integer(0)] * 3
    for i in range(3):
        for j in range(3):
            if u[i] == 0 or v[j] == 0:
                continue
            for k in range(3):
                out[k] += u[i] * v[j] * tab[i][j][k]
    return out


def jassoc(u, v, w):
    l = jmul_vec(jmul_vec(u, v), w)
    r = jmul_vec(u, jmul_vec(v, w))
    return [sp.expand(a - b) for a, b in zip(l, r)]


def bvec(i):
    return [sp.Integer(1) if t == i else sp.Integer(0) for t in range(3)]


ok = True
for ix, iw, iz, iy in itertools.product(range(3), repeat=4):
    tot = [sp.Integer(0)] * 3
    for (x, w, z) in [(ix, iw, iz), (iw, iz, ix), (iz, ix, iw)]:
        t = jassoc(jmul_vec(bvec(x), bvec(w)), bvec(iy), bvec(z))
        tot = [a + b for a, b in zip(tot, t)]
    if any(sp.expand(c) != 0 for c in tot):
        ok = False
        print("  cyclic Jordan fails at", (ix, iw, iz, iy))
        break
print("cyclic linearized Jordan over 81 quadruples:", ok)

# regular bimodule, identity twists: r3: x.v = v.x; r4: cyc as(mu(x,y), v, z) = 0;
# r5: as(v.x, y, z) + as(v.z, y, x) + as(mu(x,z), y, v) = 0, all mixed associators
# computed with rho_l = rho_r = o.
r3 = all(
    all(sp.expand(a - b) == 0 for a, b in zip(jmul_vec(bvec(i), bvec(p)), jmul_vec(bvec(p), bvec(i))))
    for i in range(3) for p in range(3)
)
print("regular bimodule r3 (commutativity):", r3)

r4_ok = True
for ix, iy, iz, iv in itertools.product(range(3), repeat=4):
    tot = [sp.Integer(0)] * 3
    for (x, y, z) in [(ix, iy, iz), (iy, iz, ix), (iz, ix, iy)]:
        t = jassoc(jmul_vec(bvec(x), bvec(y)), bvec(iv), bvec(z))
        tot = [a + b for a, b in zip(tot, t)]
    if any(sp.expand(c) != 0 for c in tot):
        r4_ok = False
        break
print("regular bimodule r4 (cyclic):", r4_ok)

r5_ok = True
for ix, iy, iz, iv in itertools.product(range(3), repeat=4):
    t1 = jassoc(jmul_vec(bvec(iv), bvec(ix)), bvec(iy), bvec(iz))
    t2 = jassoc(jmul_vec(bvec(iv), bvec(iz)), bvec(iy), bvec(ix))
    t3 = jassoc(jmul_vec(bvec(ix), bvec(iz)), bvec(iy), bvec(iv))
    tot = [a + b + c for a, b, c in zip(t1, t2, t3)]
    if any(sp.expand(c) != 0 for c in tot):
        r5_ok = False
        print("  r5 fails at", (ix, iy, iz, iv))
        break
print("regular bimodule r5:", r5_ok)

# conjugation by diag(1,-1) on sym2
g = sp.diag(1, -1)
conj = [coords(g * S[i] * g) for i in range(3)]
print("sym2 conj images:", conj)
auto = True
for i, j in itertools.product(range(3), repeat=2):
    lhs = coords(g * jprod(S[i], S[j]) * g)
    rhs = jmul_vec(conj[i], conj[j])
    if any(sp.expand(a - b) != 0 for a, b in zip(lhs, rhs)):
        auto = False
print("sym2 conj is an automorphism:", auto)

# ---- matrix2x2 plus product ----
print("\n== matrix2x2 ==")
B = [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]  # E11, E12, E21, E22


def mcoords(m):
    return [m[0, 0], m[0, 1], m[1, 0], m[1, 1]]


mtab = [[mcoords(B[i] * B[j]) for j in range(4)] for i in range(4)]
print("product table nonzeros:")
for i in range(4):
    for j in range(4):
        nz = [(k, mtab[i][j][k]) for k in range(4) if mtab[i][j][k] != 0]
        if nz:
            print(f"  E{i} E{j} -> {nz}")


def pprod(x, y):
    return x * y + y * x


ptab = [[mcoords(pprod(B[i], B[j])) for j in range(4)] for i in range(4)]


def pmul_vec(u, v):
    out = [sp.Integer(0)] * 4
    for i in range(4):
        for j in range(4):
            if u[i] == 0 or v[j] == 0:
                continue
            for k in range(4):
                out[k] += u[i] * v[j] * ptab[i][j][k]
    return out


def passoc(u, v, w):
    l = pmul_vec(pmul_vec(u, v), w)
    r = pmul_vec(u, pmul_vec(v, w))
    return [sp.expand(a - b) for a, b in zip(l, r)]


def mb(i):
    return [sp.Integer(1) if t == i else sp.Integer(0) for t in range(4)]


pj = True
for ix, iw, iz, iy in itertools.product(range(4), repeat=4):
    tot = [sp.Integer(0)] * 4
    for (x, w, z) in [(ix, iw, iz), (iw, iz, ix), (iz, ix, iw)]:
        t = passoc(pmul_vec(mb(x), mb(w)), mb(iy), mb(z))
        tot = [a + b for a, b in zip(tot, t)]
    if any(sp.expand(c) != 0 for c in tot):
        pj = False
        print("  fails at", (ix, iw, iz, iy))
        break
print("plus product passes cyclic Jordan over 256 quadruples:", pj)

conj2 = [mcoords(g * B[i] * g) for i in range(4)]
print("matrix2x2 conj images:", conj2)
auto2 = all(
    all(sp.expand(a - b) == 0 for a, b in zip(mcoords(g * (B[i] * B[j]) * g),
                                              [sum(conj2[i][p] * conj2[j][q] * mtab[p][q][k] for p in range(4) for q in range(4)) for k in range(4)]))
    for i in range(4) for j in range(4)
)
print("matrix2x2 conj is an automorphism:", auto2)

# ---- rb_toy ----
print("\n== rb_toy ==")
rtab = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
rtab[0][0] = [0, 1]  # e1*e1 = e2


def rmul(u, v):
    out = [Fraction(0), Fraction(0)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out[k] += u[i] * v[j] * rtab[i][j][k]
    return out


R = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(1)]]  # diag(0,1), columns = images


def rapp(m, v):
    return [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]


rb_ok = True
for i, j in itertools.product(range(2), repeat=2):
    x = [Fraction(1) if t == i else Fraction(0) for t in range(2)]
    y = [Fraction(1) if t == j else Fraction(0) for t in range(2)]
    lhs = rmul(rapp(R, x), rapp(R, y))
    inner = [a + b for a, b in zip(rmul(rapp(R, x), y), rmul(x, rapp(R, y)))]
    rhs = rapp(R, inner)
    if lhs != rhs:
        rb_ok = False
        print("  RB fails at", (i, j), lhs, rhs)
print("weight-0 Rota-Baxter identity over 4 pairs:", rb_ok)
deformed_zero = all(
    all(c == 0 for c in [a + b for a, b in zip(rmul(rapp(R, [Fraction(1) if t == i else Fraction(0) for t in range(2)]),
                                                    [Fraction(1) if t == j else Fraction(0) for t in range(2)]),
                                               rmul([Fraction(1) if t == i else Fraction(0) for t in range(2)],
                                                    rapp(R, [Fraction(1) if t == j else Fraction(0) for t in range(2)])))])
    for i in range(2) for j in range(2)
)
print("deformed product identically zero:", deformed_zero)
