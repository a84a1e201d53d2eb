"""Brute-force reference values frozen into the C++ tests.

Independent of the library: fields are built from scratch as polynomial
tuples, characters and sums are evaluated term by term.
"""
import cmath
import itertools
import math


def polymulmod(a, b, f, p):
    r = len(f)
    prod = [0] * (2 * r - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, r - 1, -1):
        c = prod[d]
        if c:
            for i in range(r):
                prod[d - r + i] = (prod[d - r + i] - c * f[i]) % p
            prod[d] = 0
    return tuple(prod[:r])


def decode(k, p, r):
    return tuple((k // p**i) % p for i in range(r))


def encode(v, p):
    return sum(c * p**i for i, c in enumerate(v))


def is_irreducible(f, p):
    r = len(f)
    elems = [decode(k, p, r) for k in range(p**r)]
    one = decode(1, p, r)
    # a field iff every nonzero element has an inverse
    for a in elems[1:]:
        if not any(polymulmod(a, b, f, p) == one for b in elems[1:]):
            return False
    return True


def field(p, r, g=None):
    for k in range(p**r):
        f = decode(k, p, r)
        if r == 1 or is_irreducible(f, p):
            break
    one = decode(1, p, r)

    def mul(a, b):
        return polymulmod(a, b, f, p) if r > 1 else ((a[0] * b[0]) % p,)

    def order(a):
        x, n = a, 1
        while x != one:
            x, n = mul(x, a), n + 1
        return n

    if g is None:
        g = next(k for k in range(1, p**r) if order(decode(k, p, r)) == p**r - 1)
    powers = [one]
    for _ in range(p**r - 2):
        powers.append(mul(powers[-1], decode(g, p, r)))
    log = {encode(x, p): j for j, x in enumerate(powers)}

    def tr(k):
        x = decode(k, p, r)
        acc, y = [0] * r, x
        for _ in range(r):
            acc = [(s + t) % p for s, t in zip(acc, y)]
            z = y
            for _ in range(p - 1):
                z = mul(z, y)
            y = z
        assert all(c == 0 for c in acc[1:])
        return acc[0]

    def fmul(a, b):
        return encode(mul(decode(a, p, r), decode(b, p, r)), p)

    return dict(p=p, r=r, q=p**r, f=f, g=g, log=log, tr=tr, mul=fmul)


def gauss_field(F, alpha, beta):
    q, p = F['q'], F['p']
    s = 0
    for x in range(1, q):
        s += cmath.exp(2j * math.pi * alpha * F['log'][x] / (q - 1)) * cmath.exp(
            2j * math.pi * F['tr'](F['mul'](beta, x)) / p)
    return s


def show(label, z):
    print(f"{label}: {z.real:.15f} {z.imag:+.15f}i  turns={(cmath.phase(z) / (2 * math.pi)) % 1:.12f}")


if __name__ == '__main__':
    for p, r in [(3, 2), (2, 3), (2, 4), (5, 2), (3, 3), (7, 2)]:
        F = field(p, r)
        print(f"F_{p}^{r}: modpoly={F['f']} g={F['g']}")
    F9 = field(3, 2)
    print("F9 trace table", [F9['tr'](k) for k in range(9)])
    for a, b in [(1, 1), (3, 2), (4, 5)]:
        show(f"G(F9, alpha={a}, beta={b})", gauss_field(F9, a, b))
    F8 = field(2, 3)
    show("G(F8, alpha=1, beta=1)", gauss_field(F8, 1, 1))
    F27 = field(3, 3)
    show("G(F27, alpha=5, beta=7)", gauss_field(F27, 5, 7))
    F5 = field(5, 1)
    show("G(F5, alpha=1, beta=1)", gauss_field(F5, 1, 1))
    # ring sums with the (-1, 5) parametrization for 2-powers, smallest primitive roots otherwise
    def ring_gauss(n, chi, beta):
        return sum(chi(x) * cmath.exp(2j * math.pi * beta * x / n) for x in range(n))

    def chi_mod9(alpha):
        lg = {pow(2, j, 9): j for j in range(6)}
        return lambda x: 0 if math.gcd(x, 9) != 1 else cmath.exp(2j * math.pi * alpha * lg[x % 9] / 6)

    show("G(Z/9, alpha=1, beta=1)", ring_gauss(9, chi_mod9(1), 1))
    show("G(Z/9, alpha=3, beta=3)", ring_gauss(9, chi_mod9(3), 3))
    show("G(Z/9, alpha=2, beta=6)", ring_gauss(9, chi_mod9(2), 6))

    def chi_mod16(a0, a1):
        lg = {}
        for i in range(2):
            for k in range(4):
                lg[(pow(-1, i) * pow(5, k)) % 16] = (i, k)
        def c(x):
            if x % 2 == 0:
                return 0
            i, k = lg[x % 16]
            return cmath.exp(2j * math.pi * (a0 * i / 2 + a1 * k / 4))
        return c

    show("G(Z/16, (1,1), beta=1)", ring_gauss(16, chi_mod16(1, 1), 1))
    show("G(Z/16, (0,2), beta=2)", ring_gauss(16, chi_mod16(0, 2), 2))
    # conductors mod 16 by divisor test
    def cond(n, chi):
        for c in sorted(d for d in range(1, n + 1) if n % d == 0):
            if all(abs(chi(x) - chi(y)) < 1e-12 for x in range(n) for y in range(n)
                   if math.gcd(x, n) == 1 and math.gcd(y, n) == 1 and (x - y) % c == 0):
                return c
    print("conductors mod 16:", {(a, b): cond(16, chi_mod16(a, b)) for a in range(2) for b in range(4)})
