"""Independent reference computations, written without the C++ library.

Prints a JSON document whose values are frozen into the C++ unit tests.
Run: python3 tests/oracle/oracle.py
"""

import json

import numpy as np

TYPES = {
    "D4": dict(n=4, t=2, m_t=2, edges=[(1, 2), (2, 3), (2, 4)]),
    "E6": dict(n=6, t=4, m_t=3, edges=[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]),
    "E7": dict(n=7, t=4, m_t=4, edges=[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7)]),
    "E8": dict(n=8, t=4, m_t=6, edges=[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]),
}


def cartan(d):
    n = d["n"]
    c = 2 * np.eye(n, dtype=np.int64)
    for i, j in d["edges"]:
        c[i - 1, j - 1] = c[j - 1, i - 1] = -1
    return c


def positive_roots(c):
    n = len(c)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots, frontier = set(simple), list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                p = int(np.dot(np.array(r), c[:, i]))
                s = list(r)
                s[i] -= p
                s = tuple(s)
                if all(x >= 0 for x in s) and s not in roots:
                    roots.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def gram(d, ambient):
    n = d["n"]
    dim = {"V": n + 2, "Vtilde": n + 3, "Vhat": n + 4}[ambient]
    g = np.zeros((dim, dim), dtype=np.int64)
    g[:n, :n] = cartan(d)
    if ambient != "V":
        g[n + 1, n + 2] = g[n + 2, n + 1] = 1
    if ambient == "Vhat":
        g[n, n + 3] = g[n + 3, n] = 1
    return g


def signature(g):
    ev = np.linalg.eigvalsh(g.astype(float))
    return [int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum())]


def vec(d, beta, k, l, dim):
    v = np.zeros(dim, dtype=np.int64)
    v[: d["n"]] = beta
    v[d["n"]] = k
    v[d["n"] + 1] = l
    return v


def reflection(g, gamma):
    # s(v) = v - (v|gamma) gamma on column vectors
    return np.eye(len(g), dtype=np.int64) - np.outer(gamma, gamma @ g)


def coxeter_roots(d):
    n, t = d["n"], d["t"]
    c = cartan(d)
    highest = np.array(positive_roots(c)[-1])
    simple = lambda i: np.array([int(i == j) for j in range(n)])
    out = [(simple(i), 0, 0) for i in range(n) if i != t - 1]
    out.append((-highest, 0, 1))
    out.append((simple(t - 1), 0, 0))
    out.append((simple(t - 1), 1, 0))
    return out


def coxeter_matrix(d, ambient):
    g = gram(d, ambient)
    m = np.eye(len(g), dtype=np.int64)
    for beta, k, l in coxeter_roots(d):
        m = m @ reflection(g, vec(d, beta, k, l, len(g)))
    return m


def order(m, cap=1000):
    p = m.copy()
    for e in range(1, cap):
        if (p == np.eye(len(m), dtype=np.int64)).all():
            return e
        p = p @ m
    return None


def rank_q(m):
    return int(np.linalg.matrix_rank(m.astype(float)))


def kind_report(name):
    d = TYPES[name]
    n, t = d["n"], d["t"]
    c = cartan(d)
    pos = positive_roots(c)
    cv = coxeter_matrix(d, "V")
    ct = coxeter_matrix(d, "Vtilde")
    ch = coxeter_matrix(d, "Vhat")
    m = d["m_t"]
    fixed_dim = len(ch) - rank_q(ch - np.eye(len(ch), dtype=np.int64))
    return {
        "num_roots": 2 * len(pos),
        "highest_root": list(pos[-1]),
        "lambda_t_one": sum(1 for r in pos if r[t - 1] == 1),
        "signatures": {a: signature(gram(d, a)) for a in ("V", "Vtilde", "Vhat")},
        "coxeter_order_V": order(cv),
        "coxeter_order_Vtilde": order(ct),
        "coxeter_power_Vtilde": np.linalg.matrix_power(ct, m).tolist(),
        "coxeter_hat_fixed_dim": fixed_dim,
        "coxeter_hat_length": len(ch) - fixed_dim,
    }


# Hurwitz action on canonical roots of D4, tuples of (beta, k, l).
C4 = cartan(TYPES["D4"])


def canon(g):
    beta, k, l = g
    for v in beta:
        if v != 0:
            return g if v > 0 else (tuple(-x for x in beta), -k, -l)
    raise ValueError("zero root")


def refl(d, g):
    p = int(np.array(d[0]) @ C4 @ np.array(g[0]))
    return (tuple(g[0][i] - p * d[0][i] for i in range(4)), g[1] - p * d[1], g[2] - p * d[2])


def sigma(t, i, inverse):
    t = list(t)
    i -= 1
    if not inverse:
        t[i], t[i + 1] = t[i + 1], canon(refl(t[i + 1], t[i]))
    else:
        t[i], t[i + 1] = canon(refl(t[i], t[i + 1])), t[i]
    return t


def apply_word(word, t):
    for letter in word:
        t = sigma(t, abs(letter), letter < 0)
    return t


def census(seed, bound):
    k_lim = bound + max(abs(g[1]) for g in seed)
    l_lim = bound + max(abs(g[2]) for g in seed)
    key = lambda t: tuple(t)
    seen, frontier, trunc, depth = {key(seed)}, [seed], 0, 0
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, len(seed)):
                for inv in (False, True):
                    u = sigma(t, i, inv)
                    if any(abs(g[1]) > k_lim or abs(g[2]) > l_lim for g in u):
                        trunc += 1
                        continue
                    if key(u) not in seen:
                        seen.add(key(u))
                        nxt.append(u)
        if nxt:
            depth += 1
        frontier = nxt
    return {"states": len(seen), "truncations": trunc, "depth": depth}


def d4_hurwitz():
    r = lambda beta, k=0, l=0: canon((tuple(beta), k, l))
    h = (1, 2, 1, 1)
    source = [r((1, 0, 0, 0), -1), r((0, 0, 1, 0), -1), r((0, 0, 0, 1), -1), r(h, 1, -1),
              r((0, 1, 0, 0), 0, -1), r((0, 1, 0, 0), -1, -1)]
    # displayed factors, read as a composition: the rightmost factor acts first
    inner = [2, 3, 4, 5, 1, 2, 3, 4]
    full = [4, 5, 3, 4, 2, 3, 1, 2] + inner
    as_list = lambda t: [[list(g[0]), g[1], g[2]] for g in t]
    standard = [r((1, 0, 0, 0)), r((0, 0, 1, 0)), r((0, 0, 0, 1)), r((-1, -2, -1, -1), 0, 1),
                r((0, 1, 0, 0)), r((0, 1, 0, 0), 1, 0)]
    return {
        "tau_intermediate": as_list(apply_word(list(reversed(inner)), source)),
        "tau_final": as_list(apply_word(list(reversed(full)), source)),
        "census_bound0": census(standard, 0),
    }


if __name__ == "__main__":
    out = {name: kind_report(name) for name in TYPES}
    out["D4_hurwitz"] = d4_hurwitz()
    print(json.dumps(out, indent=1))
