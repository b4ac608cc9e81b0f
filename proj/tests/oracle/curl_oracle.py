"""Brute-force reference used to freeze expected values in the C++ tests.

Deliberately naive: every quantity is computed straight from its definition.
"""
import itertools
import sys


def cn(s):
    n = len(s)
    best = 1
    for L in range(1, n // 2 + 1):
        k = 1
        while (k + 1) * L <= n and s[n - (k + 1) * L:n - k * L] == s[n - L:]:
            k += 1
        best = max(best, k)
    return best


def cn_pi(s):
    k = cn(s)
    if k == 1:
        return 1, 1
    for L in range(1, len(s) // k + 1):
        if all(s[len(s) - (j + 1) * L:len(s) - j * L] == s[len(s) - L:] for j in range(k)):
            return k, L


def extend(s, limit=10000):
    s = list(s)
    t = 0
    while True:
        k = cn(s)
        if k == 1:
            return t, s
        s.append(k)
        t += 1
        assert t <= limit


def weak(s0):
    s = list(s0)
    while True:
        k = cn(s)
        if k == 1:
            return True
        if cn(s[1:]) != k:
            return False
        s.append(k)


def construct_larger(s0):
    _, ext = extend(s0)
    start = ext + list(s0)
    t, full = extend(start)
    return len(start), len(full), t


def periods(s, p):
    return all(s[i] == s[i + p] for i in range(len(s) - p))


def words(n):
    return itertools.product([2, 3], repeat=n)


def split_by_period(n, k):
    out = {}
    for s in words(n):
        kk, pi = cn_pi(list(s))
        if kk == k:
            out[pi] = out.get(pi, 0) + 1
    return dict(sorted(out.items()))


def a_count(n, i):
    return sum(1 for s in words(n) if cn(s) == 1 and cn(s[n - i:] + s) == 1)


def b_count(n, i):
    return sum(1 for s in words(n) if cn(s) == 1 and cn(s + s[n - i:] + s) == 1)


def main():
    print("weak(3,2,2) =", weak([3, 2, 2]))
    print("weak(2,3,2,2,2,3,2,3) =", weak([2, 3, 2, 2, 2, 3, 2, 3]))
    print("construct_larger(2323) =", construct_larger([2, 3, 2, 3]))
    print("construct_larger(2) =", construct_larger([2]))
    fw = [s for s in itertools.product([2, 3], repeat=7)
          if periods(s, 4) and periods(s, 6) and not periods(s, 2)]
    print("fine-wilf len7 counterexamples:", ["".join(map(str, s)) for s in fw])
    g = [1]
    while len(g) < 220:
        g.append(cn(g))
    print("G first 4 at", g.index(4) + 1)
    print("c(12,4) by period:", split_by_period(12, 4))
    print("c(12,3) by period:", split_by_period(12, 3))
    print("a(5,4) =", a_count(5, 4), " a(9,3) =", a_count(9, 3), " b(9,3) =", b_count(9, 3))
    print("a(10,9) =", a_count(10, 9), " b(7,5) =", b_count(7, 5), " a(7,5) =", a_count(7, 5), " b(5,2) =", b_count(5, 2))


if __name__ == "__main__":
    main()
