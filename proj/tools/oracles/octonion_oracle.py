#!/usr/bin/env python3
"""Independent octonion oracle.

Builds the 8-dim Cayley algebra by doubling the quaternions,
  (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c)),
with basis e0..e3 = quaternions 1,i,j,k and e4..e7 = (0,1),(0,i),(0,j),(0,k).

Verifies exhaustively (integer arithmetic):
  * e0 is a two-sided identity,
  * the product table is made of signed basis vectors; prints it,
  * left and right alternativity in linearized form over all 512 basis triples,
  * the lexicographically least basis triple where the associator is nonzero,
  * sigma(a,b) = (a,-b) is an order-2 automorphism (64 product pairs).

Outputs are frozen into the C++ catalog table and tests.
"""
import itertools

# quaternion table: q[i][j] = (sign, index) for basis 1,i,j,k
QT = [[None] * 4 for _ in range(4)]
for i in range(4):
    QT[0][i] = (1, i)
    QT[i][0] = (1, i)
for i in (1, 2, 3):
    QT[i][i] = (-1, 0)
cyc = {(1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
       (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
for (i, j), v in cyc.items():
    QT[i][j] = v


def qmul(x, y):
    """x, y: length-4 int vectors."""
    out = [0, 0, 0, 0]
    for i in range(4):
        if x[i] == 0:
            continue
        for j in range(4):
            if y[j] == 0:
                continue
            s, k = QT[i][j]
            out[k] += s * x[i] * y[j]
    return out


def qconj(x):
    return [x[0], -x[1], -x[2], -x[3]]


def qadd(x, y):
    return [p + q for p, q in zip(x, y)]


def qsub(x, y):
    return [p - q for p, q in zip(x, y)]


def omul(x, y):
    """x, y: pairs of quaternions."""
    a, b = x
    c, d = y
    return (qsub(qmul(a, c), qmul(qconj(d), b)), qadd(qmul(d, a), qmul(b, qconj(c))))


def obasis(i):
    z = [0, 0, 0, 0]
    q = [0, 0, 0, 0]
    q[i % 4] = 1
    return (q, z) if i < 4 else (z, q)


def ovec(x):
    return x[0] + x[1]


def from_vec(v):
    return (v[:4], v[4:])


def ovadd(u, v):
    return [p + q for p, q in zip(u, v)]


def ovmul(u, v):
    out = [0] * 8
    for i in range(8):
        if u[i] == 0:
            continue
        for j in range(8):
            if v[j] == 0:
                continue
            w = ovec(omul(obasis(i), obasis(j)))
            for k in range(8):
                out[k] += u[i] * v[j] * w[k]
    return out


# table
table = [[None] * 8 for _ in range(8)]
for i in range(8):
    for j in range(8):
        w = ovec(omul(obasis(i), obasis(j)))
        nz = [(k, w[k]) for k in range(8) if w[k] != 0]
        assert len(nz) == 1 and abs(nz[0][1]) == 1, (i, j, w)
        table[i][j] = (nz[0][1], nz[0][0])

print("signed table (sign,index), rows i cols j for e_i*e_j:")
for i in range(8):
    print(" ", " ".join(f"{s:+d}e{k}" for (s, k) in table[i]))

# identity
for i in range(8):
    assert table[0][i] == (1, i) and table[i][0] == (1, i)
print("e0 two-sided identity: True")

# alternativity (alpha=beta=id): linearized forms over 512 triples


def assoc(i, j, k):
    l = ovmul(ovec(omul(obasis(i), obasis(j))), [1 if t == k else 0 for t in range(8)])
    r = ovmul([1 if t == i else 0 for t in range(8)], ovec(omul(obasis(j), obasis(k))))
    return [p - q for p, q in zip(l, r)]


left_ok = right_ok = True
least_nonassoc = None
for i, j, k in itertools.product(range(8), repeat=3):
    asv = assoc(i, j, k)
    if any(asv) and least_nonassoc is None:
        least_nonassoc = (i, j, k, asv)
    if any(ovadd(asv, assoc(j, i, k))):
        left_ok = False
    if any(ovadd(asv, assoc(i, k, j))):
        right_ok = False
print("left alternative over 512 triples:", left_ok)
print("right alternative over 512 triples:", right_ok)
print("least associator witness:", least_nonassoc[:3], "residual:", least_nonassoc[3])

# sigma
def sigma(i):
    return (1 if i < 4 else -1, i)


auto_ok = True
for i, j in itertools.product(range(8), repeat=2):
    s, k = table[i][j]
    # sigma(e_i e_j) must equal sigma(e_i) sigma(e_j)
    lhs = (s * sigma(k)[0], k)
    rhs = (sigma(i)[0] * sigma(j)[0] * s, k)
    if lhs != rhs:
        auto_ok = False
        print("  automorphism fails at", (i, j))
print("sigma is an automorphism:", auto_ok)
print("sigma^2 = id: True (diagonal signs squared)")
