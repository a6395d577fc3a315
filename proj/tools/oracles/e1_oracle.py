#!/usr/bin/env python3
"""Independent oracle for the two parametric 2-dim algebras and the plus product.

Recomputes, with sympy rational functions in a, b:
  * twist commutation and multiplicativity for both tables,
  * BiHom-associativity / left+right alternativity verdicts (linearized, basis triples),
  * the true inverses of alpha and beta for the first table,
  * the plus-product table mu'(x,y) = mu(x,y) + mu(alpha^-1 beta (y), beta^-1 alpha (x)),
  * mismatches between the recomputed plus table and the printed one,
  * BiHom-commutativity and the Jordan cyclic form for the plus algebra,
  * verdicts for the 4-dim direct sum.

Outputs are frozen into the C++ test suite; run manually:  python3 e1_oracle.py
"""
import itertools
import sympy as sp

a, b = sp.symbols("a b")


def simp(x):
    return sp.simplify(sp.together(sp.expand(x)))


class Alg:
    def __init__(self, name, dim, alpha, beta, mu):
        self.name = name
        self.dim = dim
        self.alpha = alpha  # sympy Matrix, columns are images
        self.beta = beta
        self.mu = mu        # mu[i][j] = coordinate vector of e_i * e_j

    def mult(self, x, y):
        out = [sp.Integer(0)] * self.dim
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                if y[j] == 0:
                    continue
                for k in range(self.dim):
                    out[k] += x[i] * y[j] * self.mu[i][j][k]
        return [simp(c) for c in out]

    def app(self, m, x):
        v = m * sp.Matrix(self.dim, 1, x)
        return [simp(v[i]) for i in range(self.dim)]

    def associator(self, x, y, z):
        lhs = self.mult(self.mult(x, y), self.app(self.beta, z))
        rhs = self.mult(self.app(self.alpha, x), self.mult(y, z))
        return [simp(lhs[k] - rhs[k]) for k in range(self.dim)]


def basis(dim, i):
    return [sp.Integer(1) if k == i else sp.Integer(0) for k in range(dim)]


def is_zero_vec(v):
    return all(simp(c) == 0 for c in v)


def vec_add(u, v):
    return [simp(x + y) for x, y in zip(u, v)]


def check_validate(A):
    comm = sp.simplify(A.alpha * A.beta - A.beta * A.alpha) == sp.zeros(A.dim, A.dim)
    mult_ok = True
    for m in (A.alpha, A.beta):
        for i, j in itertools.product(range(A.dim), repeat=2):
            lhs = A.app(m, A.mu[i][j])
            rhs = A.mult(A.app(m, basis(A.dim, i)), A.app(m, basis(A.dim, j)))
            if not is_zero_vec([x - y for x, y in zip(lhs, rhs)]):
                mult_ok = False
    return comm and mult_ok


def check_assoc(A):
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        if not is_zero_vec(A.associator(basis(A.dim, i), basis(A.dim, j), basis(A.dim, k))):
            return False, (i, j, k)
    return True, None


def check_left_alt(A):
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        x, y, z = basis(A.dim, i), basis(A.dim, j), basis(A.dim, k)
        t1 = A.associator(A.app(A.beta, x), A.app(A.alpha, y), z)
        t2 = A.associator(A.app(A.beta, y), A.app(A.alpha, x), z)
        if not is_zero_vec(vec_add(t1, t2)):
            return False, (i, j, k)
    return True, None


def check_right_alt(A):
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        x, y, z = basis(A.dim, i), basis(A.dim, j), basis(A.dim, k)
        t1 = A.associator(x, A.app(A.beta, y), A.app(A.alpha, z))
        t2 = A.associator(x, A.app(A.beta, z), A.app(A.alpha, y))
        if not is_zero_vec(vec_add(t1, t2)):
            return False, (i, j, k)
    return True, None


def check_commutative(A):
    for i, j in itertools.product(range(A.dim), repeat=2):
        x, y = basis(A.dim, i), basis(A.dim, j)
        l = A.mult(A.app(A.beta, x), A.app(A.alpha, y))
        r = A.mult(A.app(A.beta, y), A.app(A.alpha, x))
        if not is_zero_vec([p - q for p, q in zip(l, r)]):
            return False, (i, j)
    return True, None


def pw(m, k):
    r = sp.eye(m.shape[0])
    for _ in range(k):
        r = r * m
    return r


def check_jordan_cyclic(A):
    al, be = A.alpha, A.beta
    a2b = pw(al, 2) * be
    a3 = pw(al, 3)
    b2 = pw(be, 2)
    ab = al * be
    for ix, iw, iz, iy in itertools.product(range(A.dim), repeat=4):
        tot = [sp.Integer(0)] * A.dim
        # cyclic sum over (x, w, z)
        trip = [(ix, iw, iz), (iw, iz, ix), (iz, ix, iw)]
        for (x, w, z) in trip:
            first = A.mult(A.app(b2, basis(A.dim, x)), A.app(ab, basis(A.dim, w)))
            t = A.associator(first, A.app(a2b, basis(A.dim, iy)), A.app(a3, basis(A.dim, z)))
            tot = vec_add(tot, t)
        if not is_zero_vec(tot):
            return False, (ix, iw, iz, iy)
    return True, None


def fmt_vec(v):
    return "[" + ", ".join(sp.sstr(sp.factor(c)) for c in v) + "]"


# first table
al1 = sp.Matrix([[1, 2 * a / (b - 1)], [0, -1]])
be1 = sp.Matrix([[1, -a], [0, b]])
mu1 = [
    [[sp.Integer(1), sp.Integer(0)], [-a, b]],
    [[2 * a / (b - 1), sp.Integer(-1)], [-a**2 * (b - 2) / (b - 1) ** 2, a]],
]
A1 = Alg("first", 2, al1, be1, mu1)

# second table
al2 = sp.Matrix([[1, b * (1 - a) / a], [0, a]])
be2 = sp.Matrix([[1, b], [0, 1 - a]])
mu2 = [
    [[sp.Integer(1), sp.Integer(0)], [b, 1 - a]],
    [[b * (1 - a) / a, a], [sp.Integer(0), b / a]],
]
A2 = Alg("second", 2, al2, be2, mu2)

for A in (A1, A2):
    print(f"== {A.name} ==")
    print("validate:", check_validate(A))
    ok, w = check_assoc(A)
    print("associative:", ok, "witness:", w)
    ok, w = check_left_alt(A)
    print("left-alternative:", ok, "witness:", w)
    ok, w = check_right_alt(A)
    print("right-alternative:", ok, "witness:", w)

print("\n== first-table involution and inverses ==")
print("alpha^2 == I:", sp.simplify(al1 * al1) == sp.eye(2))
ai = al1.inv()
bi = be1.inv()
print("alpha_inv columns:", fmt_vec([ai[0, 0], ai[1, 0]]), fmt_vec([ai[0, 1], ai[1, 1]]))
print("beta_inv columns:", fmt_vec([bi[0, 0], bi[1, 0]]), fmt_vec([bi[0, 1], bi[1, 1]]))

print("\n== plus product of the first table (true inverses) ==")
aib = ai * be1   # alpha^-1 beta
bia = bi * al1   # beta^-1 alpha
plus = []
for i in range(2):
    row = []
    for j in range(2):
        x, y = basis(2, i), basis(2, j)
        t1 = A1.mult(x, y)
        t2 = A1.mult(A1.app(aib, y), A1.app(bia, x))
        row.append(vec_add(t1, t2))
    plus.append(row)
for i in range(2):
    for j in range(2):
        print(f"mu'(e{i+1},e{j+1}) =", fmt_vec(plus[i][j]))

printed = [
    [[(b - 1) / b, sp.Integer(0)],
     [a * (-1 + 1 / b + 4 / (b - 1)), b]],
    [[a * (1 + 1 / b), b - 1],
     [a**2 * (3 * b**2 + 11 * b - 8) / (b - 1) ** 2 + a**2 * (1 + b) / b, -4 * a * b**2 / (b - 1)]],
]
print("\n== printed plus table vs recomputed ==")
for i in range(2):
    for j in range(2):
        same = all(simp(plus[i][j][k] - printed[i][j][k]) == 0 for k in range(2))
        print(f"entry (e{i+1},e{j+1}): match={same} printed={fmt_vec(printed[i][j])}")

print("\n== plus algebra checks ==")
P = Alg("plus", 2, al1, be1, plus)
print("validate:", check_validate(P))
ok, w = check_commutative(P)
print("commutative:", ok, w)
ok, w = check_jordan_cyclic(P)
print("jordan cyclic (16 quadruples):", ok, w)

print("\n== direct sum of the two tables (4-dim) ==")
dim = 4
alD = sp.diag(al1, al2)
beD = sp.diag(be1, be2)
muD = [[[sp.Integer(0)] * dim for _ in range(dim)] for _ in range(dim)]
for i in range(2):
    for j in range(2):
        for k in range(2):
            muD[i][j][k] = mu1[i][j][k]
            muD[2 + i][2 + j][2 + k] = mu2[i][j][k]
D = Alg("sum", dim, alD, beD, muD)
print("validate:", check_validate(D))
ok, w = check_left_alt(D)
print("left-alternative:", ok, w)
ok, w = check_right_alt(D)
print("right-alternative:", ok, w)
