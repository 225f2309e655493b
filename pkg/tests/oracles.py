"""Brute-force reference implementations used to derive frozen test values.

Nothing here imports specfock. Partitions are plain tuples, Laurent
polynomials are ``{exponent: coefficient}`` dicts.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache


def parts(n, maxp=None):
    if maxp is None:
        maxp = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxp), 0, -1):
        for rest in parts(n - k, k):
            yield (k,) + rest


def cells(lam):
    return {(r + 1, c + 1) for r, row in enumerate(lam) for c in range(row)}


def conj(lam):
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0] if lam else 0))


def hook(lam, r, c):
    cs = cells(lam)
    arm = sum(1 for (a, b) in cs if a == r and b > c)
    leg = sum(1 for (a, b) in cs if b == c and a > r)
    return arm + leg + 1


def strip(lam):
    return tuple(x for x in lam if x)


def add_box(lam, r):
    lst = list(lam) + [0]
    lst[r - 1] += 1
    return strip(lst)


def addables(lam):
    out = []
    for r in range(1, len(lam) + 2):
        c = (lam[r - 1] if r <= len(lam) else 0) + 1
        if r == 1 or lam[r - 2] >= c:
            out.append((r, c))
    return out


def removables(lam):
    return [(r, lam[r - 1]) for r in range(1, len(lam) + 1) if r == len(lam) or lam[r] < lam[r - 1]]


def res(node, l):
    return (node[1] - node[0]) % l


def counts(small, gamma, l):
    """(N_r, N_l) for adding ``gamma`` to ``small``: indent minus removable above / below."""
    i = res(gamma, l)
    A = [x for x in addables(small) if x != gamma and res(x, l) == i]
    R = [x for x in removables(small) if res(x, l) == i]
    nr = sum(x[0] < gamma[0] for x in A) - sum(x[0] < gamma[0] for x in R)
    nl = sum(x[0] > gamma[0] for x in A) - sum(x[0] > gamma[0] for x in R)
    return nr, nl


def weight_by_hook_removal(lam, l):
    """l-weight by repeatedly sliding beta-numbers down by l."""
    b = len(lam)
    beta = {lam[i] + b - 1 - i for i in range(b)}
    w = 0
    moved = True
    while moved:
        moved = False
        for x in sorted(beta, reverse=True):
            if x - l >= 0 and x - l not in beta:
                beta.remove(x)
                beta.add(x - l)
                w += 1
                moved = True
                break
    core = sorted(beta, reverse=True)
    return strip(tuple(x - (len(core) - 1 - i) for i, x in enumerate(core))), w


# -- polynomials as dicts --------------------------------------------------


def padd(a, b, s=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + s * c
    return {e: c for e, c in out.items() if c}


def pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def peval(a, x):
    x = Fraction(x)
    return sum((c * x**e for e, c in a.items()), Fraction(0))


def qint(n):
    return {k: 1 for k in range(n)}


def cyclo(n):
    """Phi_n by dividing q^n - 1 by Phi_d for proper divisors d, as coefficient lists."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = cyclo_list(d)
            num = _divide(num, den)
    return {e: c for e, c in enumerate(num) if c}


@lru_cache(None)
def cyclo_list(n):
    c = cyclo(n)
    return tuple(c.get(e, 0) for e in range(max(c) + 1))


def _divide(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coef = num[k + len(den) - 1] // den[-1]
        out[k] = coef
        for j, d in enumerate(den):
            num[k + j] -= coef * d
    assert not any(num), "inexact division"
    return out


def valuation_by_evaluation(n, l):
    """Multiplicity of Phi_l in [n]_q: 1 iff a primitive l-th root of unity kills [n]."""
    return int(n % l == 0)


# -- Fock space ------------------------------------------------------------


def fock_f(vec, i, l, convention="right"):
    out = {}
    for lam, c in vec.items():
        for g in addables(lam):
            if res(g, l) != i:
                continue
            nr, nl = counts(lam, g, l)
            e = nr if convention == "right" else -nl
            mu = add_box(lam, g[0])
            out[mu] = padd(out.get(mu, {}), {k + e: v for k, v in c.items()})
    return {k: v for k, v in out.items() if v}


def fock_e(vec, i, l, convention="right"):
    out = {}
    for mu, c in vec.items():
        for g in removables(mu):
            if res(g, l) != i:
                continue
            lst = list(mu)
            lst[g[0] - 1] -= 1
            lam = strip(lst)
            nr, nl = counts(lam, g, l)
            e = -nl if convention == "right" else nr
            out[lam] = padd(out.get(lam, {}), {k + e: v for k, v in c.items()})
    return {k: v for k, v in out.items() if v}


def ladder_word(lam, l):
    """``[(residue, size)]`` of the ladders of ``lam``, innermost first; ladder k holds (r, c) with (r-1)+(l-1)(c-1) = k."""
    by = Counter((r - 1) + (l - 1) * (c - 1) for (r, c) in cells(lam))
    return [((-k) % l, by[k]) for k in sorted(by)]


def balanced_fact(k):
    out = {0: 1}
    for j in range(1, k + 1):
        out = pmul(out, {e - (j - 1): 1 for e in range(0, 2 * j - 1, 2)})
    return out


def pdiv_exact(a, b):
    """Exact division of Laurent dicts by long division from the top exponent."""
    a = dict(a)
    top_b = max(b)
    out = {}
    while a:
        top = max(a)
        coef, rem = divmod(a[top], b[top_b])
        assert rem == 0 and top - top_b >= min(a) - min(b), "inexact"
        out[top - top_b] = coef
        a = padd(a, {e + top - top_b: c * coef for e, c in b.items()}, -1)
    return out


def first_approx(lam, l, convention="right"):
    vec = {(): {0: 1}}
    for i, k in ladder_word(lam, l):
        for _ in range(k):
            vec = fock_f(vec, i, l, convention)
        d = balanced_fact(k)
        vec = {mu: pdiv_exact(c, d) for mu, c in vec.items()}
    return vec


def regular(lam, l):
    return all(Counter(lam)[x] < l for x in set(lam))


def sym_split(c):
    """gamma = bar(gamma) with c - gamma in qZ[q]."""
    g = {}
    for e, v in c.items():
        if e < 0:
            g[e] = g.get(e, 0) + v
            g[-e] = g.get(-e, 0) + v
        elif e == 0:
            g[0] = g.get(0, 0) + v
    return {e: v for e, v in g.items() if v}


def canonical(n, l):
    """Right-convention canonical columns by straightening, least dominant label first."""
    labels = [lam for lam in parts(n) if regular(lam, l)]
    done = {}
    for lam in sorted(labels):
        v = first_approx(lam, l)
        while True:
            bad = [mu for mu, c in v.items() if mu != lam and min(c) <= 0]
            if not bad:
                break
            mu = max(bad)
            g = sym_split(v[mu])
            for nu, c in done[mu].items():
                v[nu] = padd(v.get(nu, {}), pmul(g, c), -1)
            v = {k: c for k, c in v.items() if c}
        done[lam] = v
    return done


# -- SL2 tilting at q = 1 ---------------------------------------------------


def _weyl_add(acc, k, mult):
    # chi(-1) = 0, chi(-k-2) = -chi(k)
    if k == -1:
        return
    if k < -1:
        k, mult = -k - 2, -mult
    acc[k] += mult


def _weights(ch):
    w = Counter()
    for s, m in ch.items():
        for x in range(-s, s + 1, 2):
            w[x] += m
    return w


@lru_cache(None)
def donkin_tilting(m, p):
    """q = 1 tilting character of SL2 in characteristic p via Donkin's tensor product formula."""
    if m <= 2 * p - 2:
        if m <= p - 1:
            return frozenset({m: 1}.items())
        return frozenset({m: 1, 2 * p - 2 - m: 1}.items())
    for a in range(p - 1, 2 * p - 1):
        if (m - a) % p == 0:
            low = dict(donkin_tilting(a, p))
            high = _weights(dict(donkin_tilting((m - a) // p, p)))
            acc = Counter()
            for s, ms in low.items():
                for mu, mv in high.items():
                    _weyl_add(acc, s + p * mu, ms * mv)
            return frozenset((k, v) for k, v in acc.items() if v)
    raise AssertionError("unreachable")


# -- symmetric group algebra at q = 1 ----------------------------------------


def perm_sign(w):
    sign, seen = 1, set()
    for i in range(len(w)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = w[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign
