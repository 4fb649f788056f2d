"""Exponent-set engine for the coded and secret share supports.

All reasoning about worker counts reduces to finite sets of non-negative
integer exponents: the coded supports fixed by the PolyDot layout, the
secret supports chosen to dodge the t^2 important powers, and their
pairwise sumsets whose union is the support of H(x) = F_A(x) F_B(x).

The brute-force union computed by ``support_H`` is the ground-truth oracle
for the closed-form worker counts in ``counts``.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class SchemeParams:
    """Partition counts (s rows, t columns) and collusion bound z.

    Derived scalars:
      theta   column stride of the coded-B support, t(2s-1)
      tau     theta - ts - t, the width of the reusable gap windows
      p       how many full gap windows the secret-A terms span
    """

    s: int
    t: int
    z: int

    def __post_init__(self):
        if self.s < 1 or self.t < 1 or self.z < 1:
            raise ValueError("s, t, and z must all be >= 1")

    @property
    def theta(self) -> int:
        return self.t * (2 * self.s - 1)

    @property
    def tau(self) -> int:
        return self.theta - self.t * self.s - self.t

    @property
    def p(self) -> int:
        # ts - t = 0 only for s = 1, where p = t - 1 by convention (the
        # floor of (z-1)/0 is read as +infinity, clamped by the min).
        gap = self.t * self.s - self.t
        if gap == 0:
            return self.t - 1
        return min((self.z - 1) // gap, self.t - 1)

    @property
    def p_prime(self) -> int:
        """Window count for the mid-range secret-B support.

        Only meaningful when (tau+1)/2 < z <= tau (the denominator is then
        at least 1).
        """
        den = self.tau - self.z + 1
        if den < 1:
            raise ValueError("p' is defined only for z <= tau")
        return min((self.z - 1) // den, self.t - 1)

    def z_at_most_upsilon(self) -> bool:
        """z <= max{ts-2t-s+2, (ts-2t+1)/2}, compared without rationals."""
        ts, t, s, z = self.t * self.s, self.t, self.s, self.z
        return z <= ts - 2 * t - s + 2 or 2 * z <= ts - 2 * t + 1


def sumset(a, b) -> frozenset:
    """{x + y : x in a, y in b}."""
    return frozenset(x + y for x in a for y in b)


def p_CA(params: SchemeParams) -> frozenset:
    """Coded support of F_A: {i + t*j} = {0, ..., ts-1}."""
    t, s = params.t, params.s
    return frozenset(i + t * j for i in range(t) for j in range(s))


def p_CB(params: SchemeParams) -> frozenset:
    """Coded support of F_B: {t(s-1-k) + theta*l}."""
    t, s, th = params.t, params.s, params.theta
    return frozenset(t * (s - 1 - k) + th * l for k in range(s) for l in range(t))


def p_SA(params: SchemeParams) -> frozenset:
    """Secret support of F_A: the z cheapest exponents clearing condition C1.

    For large z (z > ts-t with s,t > 1) the support fills p full windows of
    width t(s-1) between consecutive coded-B strides, then spills into the
    next window; otherwise it is the single run starting at ts + theta*p.
    """
    s, t, z = params.s, params.t, params.z
    ts, th, p = t * s, params.theta, params.p
    if z > ts - t and s != 1 and t != 1:
        window = t * (s - 1)
        out = {ts + th * l + w for l in range(p) for w in range(window)}
        out |= {ts + th * p + u for u in range(z - p * window)}
        return frozenset(out)
    return frozenset(ts + th * p + u for u in range(z))


def p_SB(params: SchemeParams) -> frozenset:
    """Secret support of F_B: the z cheapest exponents clearing C2 and C3.

    Three regimes: past the last coded stride (large z, and always for
    s = 1 or t = 1); packed into the tau-z+1 wide gap windows (mid z);
    or the single run right after the coded-A support (small z).
    """
    s, t, z = params.s, params.t, params.z
    ts, th, tau = t * s, params.theta, params.tau
    if z > tau or t == 1 or s == 1:
        base = ts + th * (t - 1)
        return frozenset(base + r for r in range(z))
    if 2 * z > tau + 1:
        pp = params.p_prime
        width = tau - z + 1
        out = {ts + th * l + d for l in range(pp) for d in range(width)}
        out |= {ts + th * pp + v for v in range(z - pp * width)}
        return frozenset(out)
    return frozenset(ts + v for v in range(z))


def important_powers(params: SchemeParams) -> frozenset:
    """The t^2 product exponents carrying the output blocks Y_{i,l}."""
    t, s, th = params.t, params.s, params.theta
    return frozenset(i + t * (s - 1) + th * l for i in range(t) for l in range(t))


def support_H(params: SchemeParams) -> frozenset:
    """Brute-force support of F_A * F_B: union of the four sumsets.

    Generic coefficients (data plus uniform randomness) are assumed not to
    cancel, so the worker count is the cardinality of this union.
    """
    ca, cb = p_CA(params), p_CB(params)
    sa, sb = p_SA(params), p_SB(params)
    return sumset(ca, cb) | sumset(ca, sb) | sumset(sa, cb) | sumset(sa, sb)


def check_conditions(params: SchemeParams):
    """Verify the three sumset-disjointness conditions guarding recovery.

    C1: important not in P(S_A)+P(C_B); C2: not in P(S_A)+P(S_B);
    C3: not in P(S_B)+P(C_A).  Returns (ok, violations); each violation is
    (important_power, condition_name, (elem_from_first, elem_from_second)).
    """
    ca, cb = p_CA(params), p_CB(params)
    sa, sb = p_SA(params), p_SB(params)
    imp = important_powers(params)
    violations = []
    for name, left, right in (("C1", sa, cb), ("C2", sa, sb), ("C3", sb, ca)):
        for a in left:
            for b in right:
                if a + b in imp:
                    violations.append((a + b, name, (a, b)))
    return not violations, violations
