#!/usr/bin/env python3
"""Independent reference values for the C++ unit tests.

Written separately from the C++ code: exact sympy/Fraction arithmetic,
principal-coefficient matrix mutation for C-matrices, direct rational
X and A mutation, and the octahedral recurrence at a rational point.
Run from the repository root:  python3 tests/oracle/gen_golden.py
"""
import json
import random
from fractions import Fraction
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "golden"
rng = random.Random(271828)


def frac(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def mutate_eps(e, k):
    n = len(e)
    f = [row[:] for row in e]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                f[i][j] = -e[i][j]
            else:
                f[i][j] = e[i][j] + (abs(e[i][k]) * e[k][j] + e[i][k] * abs(e[k][j])) // 2
    return f


def permute_list(xs, p):
    out = [None] * len(xs)
    for i, x in enumerate(xs):
        out[p[i]] = x
    return out


def permute_eps(e, p):
    n = len(e)
    f = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            f[p[i]][p[j]] = e[i][j]
    return f


def random_quiver(n, bound):
    e = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            e[i][j], e[j][i] = v, -v
    return e


def random_word(n, length):
    w = []
    for _ in range(length):
        if rng.random() < 0.15:
            p = list(range(n))
            rng.shuffle(p)
            w.append(("p", p))
        else:
            w.append(("m", rng.randrange(n)))
    return w


def word_json(w):
    return [{"m": x + 1} if t == "m" else {"p": [y + 1 for y in x]} for t, x in w]


# ---------------------------------------------------------------- C-matrices
# Fomin-Zelevinsky extended matrix [B; I] with B = eps^T; c-vectors are the
# columns of the lower block (rows of the C-matrix in the tested convention).
def fz_c_matrix(e, w):
    n = len(e)
    B = [[e[j][i] for j in range(n)] for i in range(n)] + [[int(i == j) for j in range(n)] for i in range(n)]
    eps = [row[:] for row in e]
    for t, x in w:
        if t == "p":
            P = [[None] * n for _ in range(2 * n)]
            for r in range(2 * n):
                for j in range(n):
                    P[x[r] if r < n else r][x[j]] = B[r][j]
            B = P
            eps = permute_eps(eps, x)
            continue
        k = x
        M = [row[:] for row in B]
        for i in range(2 * n):
            for j in range(n):
                if i == k or j == k:
                    M[i][j] = -B[i][j]
                else:
                    a, b = B[i][k], B[k][j]
                    s = (a > 0) - (a < 0)
                    M[i][j] = B[i][j] + s * max(a * b, 0)
        B = M
        eps = mutate_eps(eps, k)
    C = [[B[n + i][j] for i in range(n)] for j in range(n)]
    return C, eps


def gen_cmatrix():
    cases = []
    for _ in range(40):
        n = rng.randint(2, 5)
        e = random_quiver(n, 2)
        w = random_word(n, rng.randint(0, 7))
        C, eps = fz_c_matrix(e, w)
        cases.append({"eps": e, "word": word_json(w), "c_matrix": C, "final_eps": eps})
    return cases


# ---------------------------------------------------------------- X and A pushforwards
def x_replay(e, xs, w):
    e = [row[:] for row in e]
    xs = list(xs)
    for t, x in w:
        if t == "p":
            xs = permute_list(xs, x)
            e = permute_eps(e, x)
            continue
        k = x
        new = list(xs)
        for i in range(len(xs)):
            if i == k:
                new[i] = 1 / xs[k]
            elif e[i][k] != 0:
                s = 1 if e[i][k] > 0 else -1
                new[i] = xs[i] * (1 + xs[k] ** (-s)) ** (-e[i][k])
        xs = [sp.factor(sp.cancel(v)) if isinstance(v, sp.Basic) else v for v in new]
        e = mutate_eps(e, k)
    return xs


def a_replay(e, xs, w):
    e = [row[:] for row in e]
    xs = list(xs)
    for t, x in w:
        if t == "p":
            xs = permute_list(xs, x)
            e = permute_eps(e, x)
            continue
        k = x
        pos = 1
        neg = 1
        for j in range(len(xs)):
            if e[k][j] > 0:
                pos *= xs[j] ** e[k][j]
            elif e[k][j] < 0:
                neg *= xs[j] ** (-e[k][j])
        xs[k] = (pos + neg) / xs[k]
        if isinstance(xs[k], sp.Basic):
            xs[k] = sp.cancel(xs[k])
        e = mutate_eps(e, k)
    return xs


def cycle(n):
    e = [[0] * n for _ in range(n)]
    if n > 2:
        for i in range(n):
            e[i][(i + 1) % n] += 1
            e[(i + 1) % n][i] -= 1
    return e


def tau_word(cyc):
    # mu_{i1} mu_{i2} ... mu_{i_{N-1}}, swap of the last two, then the mutations back
    N = len(cyc)
    w = [("m", cyc[t]) for t in range(N - 1)]
    p = list(range(N))
    p[cyc[N - 2]], p[cyc[N - 1]] = cyc[N - 1], cyc[N - 2]
    w.append(("p", p))
    w += [("m", cyc[t]) for t in range(N - 2, -1, -1)]
    return w


def gen_pushforward():
    cases = []
    quivers = [("a2", [[0, 1], [-1, 0]], [("m", 0), ("m", 1)])]
    for N in (3, 4, 5):
        quivers.append((f"q{N}", cycle(N), tau_word(list(range(N)))))
    for t in range(6):
        n = rng.randint(2, 4)
        e = random_quiver(n, 2)
        quivers.append((f"random{t}", e, [x for x in random_word(n, rng.randint(1, 5)) if x[0] == "m"]))
    for name, e, w in quivers:
        n = len(e)
        pt = [Fraction(rng.randint(2, 40), rng.randint(1, 9)) for _ in range(n)]
        case = {
            "name": name,
            "eps": e,
            "word": word_json(w),
            "point": [frac(p) for p in pt],
            "x_values": [frac(v) for v in x_replay(e, pt, w)],
            "a_values": [frac(v) for v in a_replay(e, pt, w)],
        }
        if n <= 3:
            syms = sp.symbols(f"x1:{n + 1}")
            case["x_symbolic"] = [str(v) for v in x_replay(e, list(syms), w)]
        cases.append(case)
    return cases


# ---------------------------------------------------------------- octahedral recurrence
def octahedral(m, face):
    T = dict(face)
    T[(m, 0, 0, 0)] = T[(0, m, 0, 0)] = T[(0, 0, m, 0)] = Fraction(1)
    for s in range(1, m):
        tot = m - s
        for b in range(tot, -1, -1):
            for a in range(0, tot - b + 1):
                c = tot - a - b
                if a == 0:
                    T[(a, b, c, s)] = T[(s, m - s, 0, 0)] * T[(0, b, m - b, 0)]
                elif c == 0:
                    T[(a, b, c, s)] = T[(m - b, b, 0, 0)] * T[(0, m - s, s, 0)]
                else:
                    num = T[(a + 1, b, c, s - 1)] * T[(a - 1, b + 1, c, s)] + T[(a, b, c + 1, s - 1)] * T[(a, b + 1, c - 1, s)]
                    T[(a, b, c, s)] = num / T[(a, b + 1, c, s - 1)]
    return T


def gen_octahedral():
    cases = []
    for m in (3, 4, 5):
        pts = [(a, b, m - a - b) for a in range(m, -1, -1) for b in range(m - a, -1, -1)
               if m not in (a, b, m - a - b)]
        face = {(a, b, c, 0): Fraction(rng.randint(2, 50), rng.randint(1, 7)) for a, b, c in pts}
        T = octahedral(m, face)
        cases.append({
            "m": m,
            "face": [{"point": [a, b, c], "value": frac(face[(a, b, c, 0)])} for a, b, c in pts],
            "delta_star": [{"point": [a, b, c], "value": frac(T[(c, 0, a, b)])} for a, b, c in pts],
        })
    return cases


# ---------------------------------------------------------------- quantum dilogarithm
def gen_dilog():
    # Psi coefficients at q = 3/7, and log Psi by the power-series logarithm
    q0 = Fraction(3, 7)
    order = 8
    psi = []
    for n in range(order + 1):
        d = Fraction(1)
        for a in range(1, n + 1):
            d *= q0 ** (2 * a) - 1
        psi.append(q0 ** n / d)
    # L' = P'/P  ->  n L_n = n P_n - sum_{k=1}^{n-1} k L_k P_{n-k}
    L = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        L[n] = (n * psi[n] - sum(k * L[k] * psi[n - k] for k in range(1, n))) / n
    return {"q": "3/7", "psi": [frac(c) for c in psi], "log": [frac(c) for c in L[1:]]}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    data = {
        "cmatrix.json": gen_cmatrix(),
        "pushforward.json": gen_pushforward(),
        "octahedral.json": gen_octahedral(),
        "dilog.json": gen_dilog(),
    }
    for name, obj in data.items():
        (OUT / name).write_text(json.dumps(obj, indent=1) + "\n")
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
