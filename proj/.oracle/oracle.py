#!/usr/bin/env python3
# Independent oracle: brute-force reference values for the C++ test suite.
# Pure Python + fractions; no shared code with the implementation.
import itertools, math, cmath
from fractions import Fraction
from math import gcd

def euler_phi(q):
    r = 0
    for a in range(1, q + 1):
        if gcd(a, q) == 1:
            r += 1
    return r

def ramanujan_brute(q, x):
    # sum over units a of zeta_q^{ax}, exact via complex + rounding check
    s = sum(cmath.exp(2j * cmath.pi * a * x / q) for a in range(q) if gcd(a, q) == 1)
    r = round(s.real)
    assert abs(s.imag) < 1e-9 and abs(s.real - r) < 1e-9, (q, x, s)
    return r

def honold_wt(q):
    phi = euler_phi(q)
    return [phi - ramanujan_brute(q, x) for x in range(q)]

def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))

def prime_power(q):
    for p in range(2, q + 1):
        if is_prime(p):
            k, m = 0, q
            while m % p == 0:
                m //= p; k += 1
            if m == 1:
                return p, k
    return None

def fourier(m):
    return [[(i * j) % m for j in range(m)] for i in range(m)], m

def kron(A, B, q):
    na, nb = len(A), len(B)
    return [[(A[a][b] + B[c][d]) % q for b in range(na) for d in range(nb)]
            for a in range(na) for c in range(nb)]

def bh_code(M, q):
    n = len(M[0])
    words = set()
    for row in M:
        for al in range(q):
            words.add(tuple((x + al) % q for x in row))
    return sorted(words)

def row_code(M):
    return sorted(set(tuple(r) for r in M))

def radius(code, q, wt):
    n = len(code[0])
    best, hole = -1, None
    for x in itertools.product(range(q), repeat=n):
        d = min(sum(wt[(x[k] - y[k]) % q] for k in range(n)) for y in code)
        if d > best:
            best, hole = d, x
    return best, hole

BH48 = [[0,0,0,0],[0,2,4,6],[0,4,0,4],[0,6,4,2]]

def show_radii():
    F2, _ = fourier(2); F3, _ = fourier(3); F4, _ = fourier(4); F5, _ = fourier(5)
    cases = [
        ("F2 bh", bh_code(F2, 2), 2),
        ("F3 bh", bh_code(F3, 3), 3),
        ("F4 bh", bh_code(F4, 4), 4),
        ("F5 bh", bh_code(F5, 5), 5),
        ("kron22 bh", bh_code(kron(F2, F2, 2), 2), 2),
        ("kron33 bh", bh_code(kron(F3, F3, 3), 3), 3),
        ("BH48 bh", bh_code(BH48, 8), 8),
        ("F3 rows", row_code(F3), 3),
    ]
    for name, code, q in cases:
        hw = honold_wt(q)
        rh, holeh = radius(code, q, hw)
        line = f"{name}: |C|={len(code)} honold={rh} hole={holeh}"
        pp = prime_power(q)
        if pp:
            p, k = pp
            sw = [w // p for w in hw]
            assert all(w % p == 0 for w in hw)
            rs, holes = radius(code, q, sw)
            line += f" standard={rs} hole_s={holes}"
        print(line)

def bent_census(M, q, name):
    n = len(M[0])
    sq = math.isqrt(n)
    exact_sqrt = sq * sq == n
    found = []
    for x in itertools.product(range(q), repeat=n):
        z = [sum(cmath.exp(2j * cmath.pi * ((M[i][k] + x[k]) % q) / q) for k in range(n))
             for i in range(n)]
        if not all(abs(abs(zi)**2 - n) < 1e-7 for zi in z):
            continue
        # self-dual: z_i * zeta^{-x_i} constant; conj: z_i * zeta^{x_i} constant
        sd_vals = [z[i] * cmath.exp(-2j * cmath.pi * x[i] / q) for i in range(n)]
        cs_vals = [z[i] * cmath.exp(2j * cmath.pi * x[i] / q) for i in range(n)]
        sd = all(abs(v - sd_vals[0]) < 1e-7 for v in sd_vals)
        cs = all(abs(v - cs_vals[0]) < 1e-7 for v in cs_vals)
        cls = "SelfDual" if sd else ("ConjSelfDual" if cs else "Bent")
        lam = None
        if (sd or cs) and exact_sqrt:
            v0 = sd_vals[0] if sd else cs_vals[0]
            for t in range(q):
                if abs(v0 - sq * cmath.exp(2j * cmath.pi * t / q)) < 1e-7:
                    lam = t
                    break
        found.append((x, cls, lam, sd, cs))
    nb = len(found)
    nred = len([f for f in found if f[0][0] == 0])
    print(f"bent {name}: total={nb} first0={nred} "
          f"sd={sum(1 for f in found if f[3])} cs={sum(1 for f in found if f[4])}")
    if nb and nb <= 48:
        for f in found[:48]:
            print("   ", f[0], f[1], "lam", f[2])
    return found

def moments():
    F3, _ = fourier(3)
    C = bh_code(kron(F3, F3, 3), 3)
    hw = honold_wt(3)
    s2 = sum(sum(hw[s] for s in w) ** 2 for w in C)
    print("kron33 second moment v=0:", s2, "predicted", 81 * 2 * (2 * len(C) + 3))
    v = tuple([1, 0, 2, 0, 0, 1, 0, 0, 0])
    s2v = sum(sum(hw[(v[k] + w[k]) % 3] for k in range(9)) ** 2 for w in C)
    print("kron33 second moment v!=0:", s2v)
    F2, _ = fourier(2)
    C2 = bh_code(kron(F2, F2, 2), 2)
    hw2 = honold_wt(2)
    print("kron22 second moment:", sum(sum(hw2[s] for s in w) ** 2 for w in C2), "predicted 160")

def small_sums():
    print("c_6(2) =", ramanujan_brute(6, 2), " c_8(4) =", ramanujan_brute(8, 4))
    print("honold wt q=4:", honold_wt(4), " q=6:", honold_wt(6))

def strength(code, q, s):
    n = len(code[0])
    if len(code) % (q ** s):
        return False
    want = len(code) // (q ** s)
    for coords in itertools.combinations(range(n), s):
        cnt = {}
        for w in code:
            k = tuple(w[c] for c in coords)
            cnt[k] = cnt.get(k, 0) + 1
        if len(cnt) != q ** s or any(v != want for v in cnt.values()):
            return False
    return True

def strengths():
    F3, _ = fourier(3); F4, _ = fourier(4); F2, _ = fourier(2)
    C33 = bh_code(kron(F3, F3, 3), 3)
    print("kron33 strength2:", strength(C33, 3, 2), "strength3:", strength(C33, 3, 3))
    C4 = bh_code(F4, 4)
    print("F4 strength1:", strength(C4, 4, 1), "strength2:", strength(C4, 4, 2))
    C22 = bh_code(kron(F2, F2, 2), 2)
    print("kron22 strength2:", strength(C22, 2, 2), "strength3:", strength(C22, 2, 3))
    C5 = bh_code(fourier(5)[0], 5)
    print("F5 strength2:", strength(C5, 5, 2))
    CB = bh_code(BH48, 8)
    print("BH48 strength1:", strength(CB, 8, 1))

if __name__ == "__main__":
    small_sums()
    show_radii()
    strengths()
    moments()
    F2, _ = fourier(2); F3, _ = fourier(3); F4, _ = fourier(4); F5, _ = fourier(5)
    bent_census(F2, 2, "F2")
    bent_census(kron(F2, F2, 2), 2, "kron22")
    bent_census(F3, 3, "F3")
    bent_census(F4, 4, "F4")
    bent_census(F5, 5, "F5")
    bent_census(BH48, 8, "BH48")
