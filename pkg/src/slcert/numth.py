"""Integer number theory plumbing used across the package.

Everything here is exact arbitrary-precision arithmetic on Python ints:
primality (deterministic Miller-Rabin below 2**64, BPSW above), Pollard-rho
factorization, multiplicative orders, Tonelli-Shanks square roots, classic
CRT, and Pohlig-Hellman discrete logs in cyclic groups (Z/m)*.
"""

from math import gcd, isqrt

from .errors import BudgetExhausted, IncompatibleModuli, ZeroArgument

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)

# Verified base set: Miller-Rabin with these witnesses is exact below 2**64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

COMPOSITE = "composite"
PRIME = "prime"
PROBABLE_PRIME = "probable_prime"


def _mr_witness(n, a, d, r):
    # True if a witnesses compositeness of n = d*2^r + 1, d odd.
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _lucas_strong_probable_prime(n):
    # Strong Lucas test with Selfridge parameters; n odd, n > 2, not a square.
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -(D + 2) if D > 0 else -(D - 2)
    Q = (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Lucas sequences U_d, V_d by binary ladder.
    U, V, k = 1, 1, 1
    Qk = Q % n
    bits = bin(d)[3:]
    inv2 = (n + 1) // 2
    for b in bits:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        k *= 2
        if b == "1":
            U, V = (U + V) * inv2 % n, (V + D * U) * inv2 % n
            Qk = Qk * Q % n
            k += 1
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def primality(n):
    """Classify n as COMPOSITE, PRIME, or PROBABLE_PRIME.

    Deterministic below 2**64; beyond that a BPSW pass (no known
    counterexample) reports PROBABLE_PRIME.
    """
    if n < 2:
        return COMPOSITE
    for p in _SMALL_PRIMES:
        if n == p:
            return PRIME
        if n % p == 0:
            return COMPOSITE
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < 1 << 64:
        for a in _MR_BASES_64:
            if _mr_witness(n, a, d, r):
                return COMPOSITE
        return PRIME
    if _mr_witness(n, 2, d, r):
        return COMPOSITE
    s = isqrt(n)
    if s * s == n:
        return COMPOSITE
    return PROBABLE_PRIME if _lucas_strong_probable_prime(n) else COMPOSITE


def is_prime(n):
    return primality(n) != COMPOSITE


def sieve_primes(limit):
    """All primes < limit, ascending."""
    if limit <= 2:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [i for i in range(limit) if sieve[i]]


def _pollard_rho(n, budget_iters=1 << 22):
    # Brent's cycle-finding variant; n odd composite, not a prime power issue
    # is handled by the caller loop.
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        it = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = gcd(q, n)
                it += r
                if it > budget_iters:
                    break
            r *= 2
            if it > budget_iters:
                break
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise BudgetExhausted("pollard-rho", budget_iters, "failed to split %d" % n)


def factorint(n):
    """Factor |n| into a {prime: exponent} dict.  factorint(±1) == {}."""
    n = abs(n)
    if n == 0:
        raise ZeroArgument("cannot factor 0")
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def multiplicative_order(a, m, phi_m=None, phi_factors=None):
    """Order of a modulo m.  a must be coprime to m."""
    a %= m
    if gcd(a, m) != 1:
        raise ZeroArgument("order of a non-unit mod %d" % m)
    if m == 1:
        return 1
    if phi_m is None:
        phi_m = euler_phi_int(m)
    if phi_factors is None:
        phi_factors = factorint(phi_m)
    order = phi_m
    for p in phi_factors:
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def euler_phi_int(n):
    n = abs(n)
    if n == 0:
        raise ZeroArgument("phi(0)")
    out = 1
    for p, e in factorint(n).items():
        out *= (p - 1) * p ** (e - 1)
    return out


def crt_pair(r1, m1, r2, m2):
    """Solve x = r1 (mod m1), x = r2 (mod m2); returns (x, lcm)."""
    g = gcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise IncompatibleModuli("no solution mod %d and %d" % (m1, m2))
    l = m1 // g * m2
    t = (r2 - r1) // g * pow(m1 // g, -1, m2 // g) if m2 != g else 0
    return (r1 + m1 * t) % l, l


def crt_list(residues, moduli):
    x, m = 0, 1
    for r, mm in zip(residues, moduli):
        x, m = crt_pair(x, m, r, mm)
    return x, m


def jacobi(a, n):
    """Jacobi symbol (a|n) for odd positive n."""
    assert n > 0 and n % 2 == 1
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def sqrt_mod_prime(a, p):
    """Tonelli-Shanks: x with x*x = a (mod p), p an odd prime; None if no root."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q*2^s
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _bsgs(g, h, m, order):
    """x in [0, order) with g^x = h (mod m), g of the given order; None if absent."""
    step = isqrt(order) + 1
    table = {}
    e = 1
    for j in range(step):
        table.setdefault(e, j)
        e = e * g % m
    factor = pow(pow(g, step, m), -1, m)
    gamma = h % m
    for i in range(step + 1):
        j = table.get(gamma)
        if j is not None:
            return (i * step + j) % order
        gamma = gamma * factor % m
    return None


def dlog_cyclic(g, h, m, order, order_factors=None):
    """Discrete log of h base g in the cyclic subgroup of (Z/m)* generated
    by g, where g has the given (known) order.

    Pohlig-Hellman over the factorization of the order, baby-step/giant-step
    inside each prime-power block.  Returns the least non-negative exponent,
    or None when h is outside <g>.
    """
    h %= m
    if h == 1:
        return 0
    if order_factors is None:
        order_factors = factorint(order)
    residues, moduli = [], []
    for p, e in order_factors.items():
        pe = p ** e
        gp = pow(g, order // pe, m)
        hp = pow(h, order // pe, m)
        # digits of the exponent base p
        x = 0
        gamma = pow(gp, p ** (e - 1), m)  # order p
        for k in range(e):
            hk = pow(hp * pow(gp, -x, m) % m, p ** (e - 1 - k), m)
            d = _bsgs(gamma, hk, m, p)
            if d is None:
                return None
            x += d * p ** k
        residues.append(x)
        moduli.append(pe)
    x, _ = crt_list(residues, moduli)
    if pow(g, x, m) != h:
        return None
    return x


def strip_factors(n, primes):
    """Remove all factors of the given primes from n; returns (reduced, exponents)."""
    exps = {}
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            exps[p] = e
    return n, exps
