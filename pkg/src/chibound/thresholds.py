"""Exact evaluation of the explicit threshold formulas and recursions.

Everything is exact big-integer arithmetic up to a digit budget. Several
recursions (notably T6.2 and the main constant) produce numbers far too
large to materialize for most parameters; evaluation then stops with a
structural report: which subterm blocked, a lazy expression tree, and an
order-of-magnitude estimate expressed as a power tower. The estimate is
presentational; the exact path never rounds.

Lemma identifiers name entries of the threshold catalog (T2.2 .. T6.2 and
"main"). Compositions that are assembled from several catalog entries
rather than a single closed formula are flagged derived_composition.
"""

import math
from dataclasses import dataclass, field

from .errors import ThresholdTooLarge

DEFAULT_DIGIT_LIMIT = 100_000
_LOG10_2 = math.log10(2.0)
_FLOAT_CAP = 1e15


def ramsey_bound(s, t):
    """An order forcing a clique of size s or a stable set of size t:
    the binomial bound C(s+t-2, s-1). Sufficient, not claimed minimal."""
    if s < 1 or t < 1:
        raise ValueError(f"arguments must be positive, got s={s}, t={t}")
    return math.comb(s + t - 2, s - 1)


# ------------------------------------------------------- magnitude towers

class Mag:
    """Rough magnitude as a power tower: height h over top value x stands
    for 10^(10^(...^x)) with h exponentiations. Only for display when the
    exact integer is out of reach; arithmetic here is deliberately coarse
    at great heights."""

    __slots__ = ("h", "x")

    def __init__(self, h, x):
        while x >= _FLOAT_CAP:
            x = math.log10(x)
            h += 1
        while h > 0 and x < 15.0:
            nx = 10.0 ** x
            if nx >= _FLOAT_CAP:
                break
            x = nx
            h -= 1
        self.h = h
        self.x = x

    @staticmethod
    def of(value):
        if isinstance(value, Mag):
            return value
        v = int(value)
        if v < 0:
            raise ValueError("magnitudes are non-negative")
        bl = v.bit_length()
        if bl <= 50:
            return Mag(0, float(v))
        return Mag(1, bl * _LOG10_2)

    def key(self):
        return (self.h, self.x)

    def log10(self):
        if self.h >= 1:
            return Mag(self.h - 1, self.x)
        return Mag(0, math.log10(self.x) if self.x > 1 else 0.0)

    def exp10(self):
        return Mag(self.h + 1, self.x)

    def add(self, other):
        other = Mag.of(other)
        if self.h == 0 and other.h == 0:
            return Mag(0, self.x + other.x)
        return self if self.key() >= other.key() else other

    def mul(self, other):
        other = Mag.of(other)
        if self.h == 0 and other.h == 0 and self.x * other.x < _FLOAT_CAP:
            return Mag(0, self.x * other.x)
        return self.log10().add(other.log10()).exp10()

    def mul_const(self, c):
        if c <= 0:
            raise ValueError("constants here are positive")
        if self.h == 0:
            return Mag(0, self.x * c)
        if self.h == 1:
            return Mag(1, self.x + math.log10(c))
        return self

    def __str__(self):
        if self.h == 0:
            return f"about {self.x:.4g}"
        if self.h == 1:
            return f"about 10^{self.x:.4g}"
        if self.h == 2:
            return f"about 10^(10^{self.x:.4g})"
        return f"about a power tower of height {self.h} topped by {self.x:.4g}"


def _mag_pow2(e):
    """2^e as a magnitude."""
    e = Mag.of(e)
    return e.mul_const(_LOG10_2).exp10()


def _mag_max(*vals):
    best = Mag.of(vals[0])
    for v in vals[1:]:
        v = Mag.of(v)
        if v.key() > best.key():
            best = v
    return best


def _mag_binom(n, k):
    """C(n, k) as a magnitude."""
    n, k = Mag.of(n), Mag.of(k)
    if n.h == 0 and n.x < 1e12:
        ni, ki = int(n.x), int(min(k.x if k.h == 0 else n.x, n.x))
        ki = max(0, min(ki, ni))
        if ni <= 1:
            return Mag(0, 1.0)
        ln10 = math.log(10.0)
        lg = (
            math.lgamma(ni + 1) - math.lgamma(ki + 1) - math.lgamma(ni - ki + 1)
        ) / ln10
        return Mag(0, 1.0) if lg < 1 else Mag(1, lg)
    # both huge: bounded above by 2^n, which is the right scale here
    return _mag_pow2(n)


# ------------------------------------------------------- exact evaluation

class _Budget:
    def __init__(self, digit_limit):
        self.digits = digit_limit

    def check_bits(self, bits, where, mag):
        if bits * _LOG10_2 > self.digits:
            raise ThresholdTooLarge(where, mag)

    def mul(self, a, b, where="product"):
        self.check_bits(a.bit_length() + b.bit_length(), where, Mag.of(a).mul(Mag.of(b)))
        return a * b

    def pow2(self, e, where="power of two"):
        self.check_bits(e, where, _mag_pow2(Mag.of(e)))
        return 1 << e

    def ramsey(self, s, t, where="ramsey bound"):
        n, k = s + t - 2, s - 1
        if n > 1e12:
            raise ThresholdTooLarge(where, _mag_binom(Mag.of(n), Mag.of(k)))
        if n > 1:
            ln10 = math.log(10.0)
            lg = (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / ln10
            if lg > self.digits:
                raise ThresholdTooLarge(where, Mag(1, lg))
        return math.comb(n, k)


def _t22(c, tau, bud):
    return bud.mul(2 * c + 3 * tau + 3, tau, "T2.2")


def _t23(d, tau, bud):
    return _t22(bud.mul(d, tau, "T2.3"), tau, bud)


def _t25(d, tau, bud):
    return max(bud.ramsey(tau + 1, d, "T2.5 ramsey") if d >= 1 else 0, _t23(d, tau, bud))


def _t26(a, d, tau, bud):
    return bud.mul(a, _t25(d, tau, bud), "T2.6")


def _t27(a, b, d, tau, bud):
    dh = max(d, b + 1)
    c1 = _t26(tau, dh, tau, bud)
    return _t26(c1 + a + b, dh, tau, bud), {"d_hat": dh, "c1": c1}


def _t31(k, d, tau, bud):
    seq = [2 * tau]
    for _ in range(2, k + 1):
        prev = seq[-1]
        seq.append(max(bud.mul(2 * d, prev, "T3.1"), 2 * _t26(prev, d, tau, bud)))
    return seq[-1], {"c_sequence": seq if len(seq) <= 64 else [seq[0], seq[-1]]}


def _t32(c, tau, d, k, bud):
    c1, _ = _t31(k, d, tau, bud)
    return bud.mul((2 * k + 2 * d + 3) * tau + c + c1, tau, "T3.2"), {"c1": c1}


def _t33(r, s, d, ks, tau, bud):
    if r == 1:
        return tau
    c1 = _t33(r - 1, s, d, ks, tau, bud)
    c2 = 0 if s == 1 else _t33(r, s - 1, d, ks[:-1], tau, bud)
    c3, _ = _t32(c2, c1, d, ks[-1], bud)
    return c1 + c3


def _t41(k, d, tau, bud):
    m = 2 * d * d
    n = bud.ramsey(tau + 1, m, "T4.1 ramsey")
    c0 = _t26(tau, d, tau, bud)
    if k >= 2:
        c, inner = _t27((m + 1) * tau + c0, 0, d, tau, bud)
    else:
        c, inner = _t27((m + 1) * tau + c0, bud.mul(m, n, "T4.1"), d + m * n, tau, bud)
    return c, {"m": m, "n": n, "c0": c0, **inner}


def _t42(k, d, tau, bud):
    c0, inter = _t41(k, d, tau, bud)
    n = d * inter["n"]
    big = bud.mul(bud.pow2(bud.mul(n, n, "T4.2 exponent"), "T4.2"), c0, "T4.2")
    c = max(big, _t26(tau, d, tau, bud))
    return c, {"n": n, "c0": c0}


def _t51(c, d, tau):
    return 2 * max(c, tau) + d * tau + 1


def _t52(n, c, d, tau, bud):
    """Iterate x -> T5.1(d*tau + x, d, tau) n times. Once d*tau + x >= tau
    the step is affine (x -> 2x + 3*d*tau + 1) and the remaining iterations
    collapse to one closed form, which is the identical value."""
    x = c
    steps = 0
    seq = [x]
    while steps < n and d * tau + x < tau:
        x = _t51(d * tau + x, d, tau)
        steps += 1
        seq.append(x)
    remaining = n - steps
    if remaining:
        beta = 3 * d * tau + 1
        p = bud.pow2(remaining, "T5.2")
        x = bud.mul(p, x + beta, "T5.2") - beta
        seq.append(x)
    return x, {"c_sequence": seq if len(seq) <= 64 else [seq[0], seq[-1]]}


def _t53(k, d, tau, bud):
    c4, inter = _t42(k, d, tau, bud)
    c, _ = _t52(inter["n"], c4, d, tau, bud)
    return c, {"cathedral_c": c4, "cathedral_n": inter["n"]}


def _t61(c, d, tau, bud):
    x = c
    for _ in range(d):
        x, _ = _t32(x, tau, d, d, bud)
    return x


def _t62(d, tau, bud):
    cprime, inter = _t41(1, d, tau, bud)
    n0 = inter["n"]
    n = (2 * d + 1) * n0
    x = max(bud.mul(cprime, bud.pow2(bud.mul(n, n, "T6.2 exponent"), "T6.2"), "T6.2"), d * tau)
    start = x
    for _ in range(n):
        psi = _t61(x, d, tau, bud)
        x, _ = _t53(1, d, psi, bud)
    return x, {"n": n, "n0": n0, "free_cathedral_c": cprime, "c_n": start}


def _main(kappa, k, d, bud):
    if kappa == 0:
        return 0, {"tau": 0}
    tau1, _ = _main(kappa - 1, k, d, bud)
    leg = max(d - 1, k)
    tau = max(tau1, _t33(k, d + 1, d, [leg] * d + [k], tau1, bud))
    c1, _ = _t53(k, d, tau, bud)
    c2, _ = _t62(d, tau1, bud)
    return max(c1, c2), {"tau": tau, "tau_prev": tau1, "c_starry": c1, "c_radius_one": c2}



# ------------------------------------------------- magnitude twin of each

def _m_ramsey(s, t):
    s, t = Mag.of(s), Mag.of(t)
    if s.h == 0 and t.h == 0 and s.x + t.x < 1e12:
        n = max(s.x + t.x - 2.0, 0.0)
        k = min(max(s.x - 1.0, 0.0), n)
        if n <= 1:
            return Mag(0, 1.0)
        lg = (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / math.log(10.0)
        return Mag(0, 10.0 ** lg) if lg < 15 else Mag(1, lg)
    return _mag_binom(s.add(t), _mag_min(s, t))


def _mag_min(a, b):
    a, b = Mag.of(a), Mag.of(b)
    return a if a.key() <= b.key() else b


def _m_t22(c, tau):
    tau = Mag.of(tau)
    return Mag.of(c).mul_const(2).add(tau.mul_const(3)).add(3).mul(tau)


def _m_t23(d, tau):
    return _m_t22(Mag.of(d).mul(tau), tau)


def _m_t25(d, tau):
    return _mag_max(_m_ramsey(Mag.of(tau).add(1), d), _m_t23(d, tau))


def _m_t26(a, d, tau):
    return Mag.of(a).mul(_m_t25(d, tau))


def _m_t27(a, b, d, tau):
    dh = _mag_max(d, Mag.of(b).add(1))
    c1 = _m_t26(tau, dh, tau)
    return _m_t26(c1.add(a).add(b), dh, tau)


def _m_t31(k, d, tau):
    x = Mag.of(tau).mul_const(2)
    for _ in range(2, k + 1):
        x = _mag_max(Mag.of(d).mul(x).mul_const(2), _m_t26(x, d, tau).mul_const(2))
    return x


def _m_t32(c, tau, d, k):
    head = Mag.of(tau).mul_const(2 * k + 2 * d + 3).add(c).add(_m_t31(k, d, tau))
    return head.mul(tau)


def _m_t33(r, s, d, ks, tau):
    if r == 1:
        return Mag.of(tau)
    c1 = _m_t33(r - 1, s, d, ks, tau)
    c2 = Mag.of(0) if s == 1 else _m_t33(r, s - 1, d, ks[:-1], tau)
    return c1.add(_m_t32(c2, c1, d, ks[-1]))


def _m_t41(k, d, tau):
    """Returns (c, n) as magnitudes."""
    tau = Mag.of(tau)
    m = 2 * d * d
    n = _m_ramsey(tau.add(1), m)
    c0 = _m_t26(tau, d, tau)
    a = tau.mul_const(m + 1).add(c0)
    if k >= 2:
        return _m_t27(a, Mag.of(0), Mag.of(d), tau), n
    mn = n.mul_const(m)
    return _m_t27(a, mn, mn.add(d), tau), n


def _m_t42(k, d, tau):
    c0, n0 = _m_t41(k, d, tau)
    n = n0.mul_const(d)
    return _mag_max(_mag_pow2(n.mul(n)).mul(c0), _m_t26(tau, d, tau)), n


def _m_t51(c, d, tau):
    return _mag_max(c, tau).mul_const(2).add(Mag.of(d).mul(tau)).add(1)


def _m_t52(n, c, d, tau):
    # affine growth: roughly 2^n times (c plus the additive step)
    beta = Mag.of(d).mul(tau).mul_const(3).add(1)
    return _mag_pow2(Mag.of(n)).mul(Mag.of(c).add(beta))


def _m_t53(k, d, tau):
    c4, n4 = _m_t42(k, d, tau)
    return _m_t52(n4, c4, d, tau)


def _m_t61(c, d, tau):
    x = Mag.of(c)
    for _ in range(d):
        x = _m_t32(x, tau, d, d)
    return x


def _m_t62(d, tau):
    cprime, n0 = _m_t41(1, d, tau)
    if n0.h == 0 and n0.x <= 2000:
        loops = (2 * d + 1) * int(n0.x)
    else:
        loops = 2000
    n = n0.mul_const(2 * d + 1)
    x = _mag_max(cprime.mul(_mag_pow2(n.mul(n))), Mag.of(d).mul(tau))
    for _ in range(min(loops, 2000)):
        before = x.key()
        x = _m_t53(1, d, _m_t61(x, d, tau))
        if x.h > 60 and x.key() == before:
            break
    return x


def _m_main(kappa, k, d):
    if kappa == 0:
        return Mag.of(0)
    tau1 = _m_main(kappa - 1, k, d)
    leg = max(d - 1, k)
    tau = _mag_max(tau1, _m_t33(k, d + 1, d, [leg] * d + [k], tau1))
    return _mag_max(_m_t53(k, d, tau), _m_t62(d, tau1))


# --------------------------------------------------------------- registry

@dataclass
class ThresholdResult:
    lemma_id: str
    params: dict
    value: int | None
    intermediates: dict = field(default_factory=dict)
    derived_composition: bool = False
    magnitude: str | None = None
    blocked_at: str | None = None
    expr: dict | None = None


_INT = "int"
_LIST = "list"

# id -> (ordered param names, param kinds, derived flag, formula recipe)
LEMMAS = {
    "T2.2": (("c", "tau"), "single stable-set split bound: (2c + 3 tau + 3) tau", False),
    "T2.3": (("d", "tau"), "split with a long path: T2.2(d tau, tau)", False),
    "T2.5": (("d", "tau"), "stable-set equipment: max(ramsey(tau+1, d), T2.3(d, tau))", False),
    "T2.6": (("a", "d", "tau"), "bounded-chromatic equipment: a * T2.5(d, tau)", False),
    "T2.7": (
        ("a", "b", "d", "tau"),
        "paired equipment with forbidden set: d^ = max(d, b+1); T2.6(T2.6(tau, d^, tau) + a + b, d^, tau)",
        False,
    ),
    "T3.1": (
        ("k", "d", "tau"),
        "rooted broom and bristle: c_1 = 2 tau; c_i = max(2 d c_{i-1}, 2 T2.6(c_{i-1}, d, tau)); value c_k",
        False,
    ),
    "T3.2": (
        ("c", "tau", "d", "k"),
        "tree split: ((2k + 2d + 3) tau + c + T3.1(k, d, tau)) tau",
        False,
    ),
    "T3.3": (
        ("r", "s", "d", "ks", "tau"),
        "rooted sum: r=1 -> tau; else c1 = rec(r-1), c2 = rec(s-1), value c1 + T3.2(c2, c1, d, k_s)",
        True,  # the bracketing of the double recursion is reconstructed
    ),
    "T4.1": (
        ("k", "d", "tau"),
        "free cathedral: m = 2 d^2, n = ramsey(tau+1, m), c0 = T2.6(tau, d, tau); "
        "k>=2: T2.7((m+1) tau + c0, 0, d, tau); k=1: T2.7((m+1) tau + c0, m n, d + m n, tau)",
        False,
    ),
    "T4.2": (
        ("k", "d", "tau"),
        "cathedral: (c0, n0) = T4.1(k, d, tau); n = d n0; c = max(2^(n^2) c0, T2.6(tau, d, tau))",
        False,
    ),
    "T5.1": (("c", "d", "tau"), "single spire: 2 max(c, tau) + d tau + 1", False),
    "T5.2": (
        ("n", "c", "d", "tau"),
        "cathedral construction: c_n = c; c_i = T5.1(d tau + c_{i+1}, d, tau); value c_0",
        True,  # iterated composition of the single-spire bound
    ),
    "T5.3": (
        ("k", "d", "tau"),
        "starriness from bounded balls of radius two: T5.2(n, c, d, tau) with (c, n) = T4.2(k, d, tau)",
        True,
    ),
    "T6.1": (
        ("c", "d", "tau"),
        "superstar split: d-fold composition x -> T3.2(x, tau, d, d) starting at c",
        True,
    ),
    "T6.2": (
        ("d", "tau"),
        "radius-one starriness: (c', n0) = T4.1(1, d, tau); n = (2d+1) n0; "
        "c_n = max(c' 2^(n^2), d tau); c_i = T5.3(1, d, T6.1(c_{i+1}, d, tau)); value c_0",
        True,
    ),
    "main": (
        ("kappa", "k", "d"),
        "induction on the clique bound: tau from T3.3 over the rooted-sum decompositions, "
        "then max(T5.3(k, d, tau), T6.2(d, tau_prev))",
        True,
    ),
}


def _as_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"parameter {name} must be a non-negative integer, got {value!r}")
    if value < 0:
        raise ValueError(f"parameter {name} must be non-negative, got {value}")
    return value


def lemma_threshold(lemma_id, params, digit_limit=DEFAULT_DIGIT_LIMIT):
    """Evaluate one catalog entry exactly.

    params maps parameter names to non-negative integers (T3.3 additionally
    takes ks, a list of k values of length s). When the exact integer would
    exceed digit_limit decimal digits the result carries value None, the
    blocking subterm, and a tower-magnitude estimate instead.
    """
    if lemma_id not in LEMMAS:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {', '.join(sorted(LEMMAS))}")
    names, recipe, derived = LEMMAS[lemma_id]
    missing = [p for p in names if p not in params]
    if missing:
        raise ValueError(f"{lemma_id} needs parameters {', '.join(names)}; missing {missing}")
    args = {}
    for p in names:
        if p == "ks":
            ks = list(params[p])
            args[p] = [_as_int("ks entry", v) for v in ks]
        else:
            args[p] = _as_int(p, params[p])

    if lemma_id == "T3.3":
        r, s, ks = args["r"], args["s"], args["ks"]
        if s < 1 or len(ks) != s:
            raise ValueError(f"T3.3 needs s >= 1 and len(ks) == s, got s={s}, ks={ks}")
        if r < 1 or (ks and r > min(ks)):
            raise ValueError(f"T3.3 needs 1 <= r <= min(ks), got r={r}, ks={ks}")
    if lemma_id in ("T3.1", "T3.2") and args.get("k", 1) < 1:
        raise ValueError("k must be at least 1")
    if lemma_id in ("T3.1", "T3.2", "T4.1", "T4.2", "T5.3", "T6.1", "T6.2", "main") and args.get("d", 1) < 1:
        raise ValueError("d must be at least 1")
    if lemma_id in ("T4.1", "T4.2", "T5.3", "main") and args.get("k", 1) < 1:
        raise ValueError("k must be at least 1")

    bud = _Budget(digit_limit)
    result = ThresholdResult(
        lemma_id=lemma_id,
        params={k: v for k, v in args.items()},
        value=None,
        derived_composition=derived,
        expr={"lemma": lemma_id, "recipe": recipe, "params": {k: v for k, v in args.items()}},
    )
    try:
        value, inter = _dispatch_exact(lemma_id, args, bud)
        result.value = value
        result.intermediates = inter
    except ThresholdTooLarge as e:
        result.blocked_at = e.where
        result.magnitude = str(_dispatch_mag(lemma_id, args))
        result.expr["blocked_at"] = e.where
    return result


def _dispatch_exact(lemma_id, a, bud):
    if lemma_id == "T2.2":
        return _t22(a["c"], a["tau"], bud), {}
    if lemma_id == "T2.3":
        return _t23(a["d"], a["tau"], bud), {}
    if lemma_id == "T2.5":
        return _t25(a["d"], a["tau"], bud), {}
    if lemma_id == "T2.6":
        return _t26(a["a"], a["d"], a["tau"], bud), {}
    if lemma_id == "T2.7":
        return _t27(a["a"], a["b"], a["d"], a["tau"], bud)
    if lemma_id == "T3.1":
        return _t31(a["k"], a["d"], a["tau"], bud)
    if lemma_id == "T3.2":
        return _t32(a["c"], a["tau"], a["d"], a["k"], bud)
    if lemma_id == "T3.3":
        return _t33(a["r"], a["s"], a["d"], a["ks"], a["tau"], bud), {}
    if lemma_id == "T4.1":
        return _t41(a["k"], a["d"], a["tau"], bud)
    if lemma_id == "T4.2":
        return _t42(a["k"], a["d"], a["tau"], bud)
    if lemma_id == "T5.1":
        return _t51(a["c"], a["d"], a["tau"]), {}
    if lemma_id == "T5.2":
        return _t52(a["n"], a["c"], a["d"], a["tau"], bud)
    if lemma_id == "T5.3":
        return _t53(a["k"], a["d"], a["tau"], bud)
    if lemma_id == "T6.1":
        return _t61(a["c"], a["d"], a["tau"], bud), {}
    if lemma_id == "T6.2":
        return _t62(a["d"], a["tau"], bud)
    if lemma_id == "main":
        return _main(a["kappa"], a["k"], a["d"], bud)
    raise AssertionError(lemma_id)


def _dispatch_mag(lemma_id, a):
    if lemma_id == "T2.2":
        return _m_t22(a["c"], a["tau"])
    if lemma_id == "T2.3":
        return _m_t23(a["d"], a["tau"])
    if lemma_id == "T2.5":
        return _m_t25(a["d"], a["tau"])
    if lemma_id == "T2.6":
        return _m_t26(a["a"], a["d"], a["tau"])
    if lemma_id == "T2.7":
        return _m_t27(a["a"], a["b"], a["d"], a["tau"])
    if lemma_id == "T3.1":
        return _m_t31(a["k"], a["d"], a["tau"])
    if lemma_id == "T3.2":
        return _m_t32(a["c"], a["tau"], a["d"], a["k"])
    if lemma_id == "T3.3":
        return _m_t33(a["r"], a["s"], a["d"], a["ks"], a["tau"])
    if lemma_id == "T4.1":
        return _m_t41(a["k"], a["d"], a["tau"])[0]
    if lemma_id == "T4.2":
        return _m_t42(a["k"], a["d"], a["tau"])[0]
    if lemma_id == "T5.1":
        return _m_t51(a["c"], a["d"], a["tau"])
    if lemma_id == "T5.2":
        return _m_t52(a["n"], a["c"], a["d"], a["tau"])
    if lemma_id == "T5.3":
        return _m_t53(a["k"], a["d"], a["tau"])
    if lemma_id == "T6.1":
        return _m_t61(a["c"], a["d"], a["tau"])
    if lemma_id == "T6.2":
        return _m_t62(a["d"], a["tau"])
    if lemma_id == "main":
        return _m_main(a["kappa"], a["k"], a["d"])
    raise AssertionError(lemma_id)


def format_value(value, decimal_digit_cap=10_000, lead=40):
    """Decimal when small enough, otherwise digit count and leading digits."""
    s = str(value)
    if len(s) <= decimal_digit_cap:
        return s
    return f"<{len(s)} digits: {s[:lead]}...>"


def format_result(result, decimal_digit_cap=10_000):
    lines = [f"{result.lemma_id}({', '.join(f'{k}={v}' for k, v in result.params.items())})"]
    if result.derived_composition:
        lines.append("  note: derived composition (assembled from referenced entries)")
    if result.value is not None:
        lines.append(f"  value: {format_value(result.value, decimal_digit_cap)}")
    else:
        lines.append(f"  value: exact evaluation blocked at {result.blocked_at}")
        lines.append(f"  magnitude: {result.magnitude}")
    for name, v in result.intermediates.items():
        if isinstance(v, list):
            shown = ", ".join(format_value(x, 40, 20) for x in v)
            lines.append(f"  {name}: [{shown}]")
        else:
            lines.append(f"  {name}: {format_value(v, 120, 40)}")
    if result.expr is not None:
        lines.append(f"  recipe: {result.expr['recipe']}")
    return "\n".join(lines)
