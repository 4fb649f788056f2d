"""Closed-form worker counts and scheme comparison.

``n_polydot`` evaluates the six-region closed form whose correctness is
checked against the brute-force support oracle in ``powersets.support_H``.
The three baselines (Entangled-CMPC, SSMM, GCSA-NA) are single formulas.
Region predicates for the efficiency lemmas use exact rational arithmetic;
they are the claims under test, with direct formula comparison as ground
truth.
"""

from dataclasses import dataclass
from fractions import Fraction

from polydot_cmpc.powersets import SchemeParams

REGION_FORMULAS = ("psi1", "psi2", "psi3", "psi4", "psi5", "psi6")

# Winner ties go to the baselines; PolyDot-CMPC only wins outright.
TIE_ORDER = ("entangled", "ssmm", "gcsa", "polydot")


def _region(params: SchemeParams) -> tuple[str, int]:
    s, t, z = params.s, params.t, params.z
    ts, th, p = t * s, params.theta, params.p
    hits = []
    if ts < z or t == 1:
        hits.append(("psi1", (p + 2) * ts + th * (t - 1) + 2 * z - 1))
    if s != 1 and t != 1:
        if ts - t < z <= ts:
            hits.append(("psi2", 2 * ts + th * (t - 1) + 3 * z - 1))
        if ts - 2 * t < z <= ts - t:
            hits.append(("psi3", 2 * ts + th * (t - 1) + 2 * z - 1))
        if not params.z_at_most_upsilon() and z <= ts - 2 * t:
            hits.append(("psi4", (t + 1) * ts + (t - 1) * (z + t - 1) + 2 * z - 1))
        if params.z_at_most_upsilon():
            hits.append(("psi5", th * t + z))
    if s == 1 and t >= z and t != 1:
        hits.append(("psi6", t * t + 2 * t + t * z - 1))
    if len(hits) != 1:
        raise RuntimeError(f"region dispatch hit {len(hits)} cases for "
                           f"(s={s}, t={t}, z={z}): {[h[0] for h in hits]}")
    return hits[0]


def region_label(params: SchemeParams) -> str:
    return _region(params)[0]


def n_polydot(params: SchemeParams) -> int:
    return _region(params)[1]


def n_entangled(params: SchemeParams) -> int:
    s, t, z = params.s, params.t, params.z
    if z > t * s - s:
        return 2 * s * t * t + 2 * z - 1
    return s * t * t + 3 * s * t - 2 * s + t * (z - 1) + 1


def n_ssmm(params: SchemeParams) -> int:
    s, t, z = params.s, params.t, params.z
    return (t + 1) * (t * s + z) - 1


def n_gcsa(params: SchemeParams) -> int:
    s, t, z = params.s, params.t, params.z
    return 2 * s * t * t + 2 * z - 1


@dataclass(frozen=True)
class WorkerCountReport:
    """All four worker counts for one parameter point, plus the winner."""

    params: SchemeParams
    n_polydot: int
    n_entangled: int
    n_ssmm: int
    n_gcsa: int
    region_label: str
    winner: str

    def counts(self) -> dict[str, int]:
        return {"polydot": self.n_polydot, "entangled": self.n_entangled,
                "ssmm": self.n_ssmm, "gcsa": self.n_gcsa}


def best_scheme(params: SchemeParams) -> WorkerCountReport:
    """Evaluate all four schemes; ties resolve by TIE_ORDER."""
    label, n_pd = _region(params)
    counts = {"polydot": n_pd, "entangled": n_entangled(params),
              "ssmm": n_ssmm(params), "gcsa": n_gcsa(params)}
    low = min(counts.values())
    winner = next(name for name in TIE_ORDER if counts[name] == low)
    return WorkerCountReport(params=params, n_polydot=n_pd,
                             n_entangled=counts["entangled"],
                             n_ssmm=counts["ssmm"], n_gcsa=counts["gcsa"],
                             region_label=label, winner=winner)


def lemma1_fired(params: SchemeParams) -> list[int]:
    """Indices (1-based) of the sixteen beats-Entangled regions that fire.

    Transcribed verbatim, fractional bounds and all; soundness against the
    direct formula comparison is enforced by tests where claimed.
    """
    s, t, z = params.s, params.t, params.z
    ts, p = t * s, params.p
    half = Fraction(ts - 2 * t + 1, 2)
    fired = []

    if z > ts and p < Fraction(t - 1, s) and t != 1:
        fired.append(1)
    if ts - s < z <= ts and t - 1 > s and s != 1 and t != 1:
        fired.append(2)
    if (t - 1) ** 2 < z < t * (t - 1) and s == t - 1 and s != 1 and t != 1:
        fired.append(3)
    if t > 3 and s != 1:
        lo = ts - t - min(0, 1 - Fraction(2 * s - 5, t - 3))
        if lo < z <= ts - s:
            fired.append(4)
    if s == 2 and t == 3 and z == 4:
        fired.append(5)
    if t == 2 and s == 2 and z in (1, 2):
        fired.append(6)
    if t > 2 and t >= s and s != 1:
        lo = max(Fraction(s * t - t - s) - Fraction(2, t - 2), Fraction(ts - 2 * t))
        if lo < z <= ts - t:
            fired.append(7)
    if t < s <= 2 * t and ts - s < z <= ts - t and s != 1 and t != 1:
        fired.append(8)
    if t == 2 and 3 <= s <= 4 and 2 * (s - 2) < z <= 2 * (s - 1):
        fired.append(9)
    if s * t - 2 * t < z <= ts - s and t > 2 and t < s <= 2 * t:
        fired.append(10)
    if s > 2 * t and ts - 2 * t < z <= ts - t and s != 1 and t != 1:
        fired.append(11)
    if 2 * t >= s and s != 1 and t != 1:
        lo = max(Fraction(ts - 2 * t - s + 2), half)
        hi = min(s * t - 2 * t, 2 * ts - t * t + t - 2 * s + 1)
        if lo < z <= hi:
            fired.append(12)
    if s > 2 * t and ts - s < z <= ts - 2 * t and t not in (1, 2):
        fired.append(13)
    if t == 2 and 4 < s < z < 2 * s - 4:
        fired.append(14)
    if ts - 2 * t - s + 2 < z < ts - s and 2 * t < s and s != 1 and t != 1:
        fired.append(15)
    if s != 1 and t != 1:
        lo = s * t - 2 * s - t - Fraction(1, t - 1)
        hi = max(Fraction(ts - 2 * t - s + 2), half)
        if lo < z <= hi:
            fired.append(16)
    return fired


def lemma2_fired(params: SchemeParams) -> list[int]:
    """Beats-SSMM regions.  Both bounds carry the s,t != 1 scope of their
    derivations; without it the degenerate s = 1 case would fire falsely."""
    s, t, z = params.s, params.t, params.z
    ts, p = t * s, params.p
    fired = []
    if t != 1 and z > max(ts, ts - t + Fraction(p * ts, t - 1)):
        fired.append(1)
    if t > 2 and s != 1 and Fraction((t - 1) * (s * t - t), t - 2) < z <= ts:
        fired.append(2)
    return fired


def lemma3_fired(params: SchemeParams) -> list[int]:
    """Beats-GCSA-NA regions, with the same implicit derivation scope."""
    s, t, z = params.s, params.t, params.z
    ts, p = t * s, params.p
    fired = []
    if z > ts and p < Fraction(t - 1, s) and t != 1:
        fired.append(1)
    if s < t and s != 1 and ts - t < z <= min(ts, t * (t - 1) - 1):
        fired.append(2)
    if z <= ts - t and t != 1:
        fired.append(3)
    if s == 1 and t > z and t != 2:
        fired.append(4)
    return fired


_LEMMAS = {"entangled": (lemma1_fired, n_entangled),
           "ssmm": (lemma2_fired, n_ssmm),
           "gcsa": (lemma3_fired, n_gcsa)}


def lemma_region(which: str, params: SchemeParams) -> bool:
    """True iff params falls in one of the lemma's enumerated regions."""
    fired_fn, _ = _LEMMAS[which]
    return bool(fired_fn(params))


def lemma_soundness_violations(which: str, params: SchemeParams) -> list[int]:
    """Fired conditions whose strict-improvement claim fails here."""
    fired_fn, baseline = _LEMMAS[which]
    fired = fired_fn(params)
    if not fired:
        return []
    if n_polydot(params) < baseline(params):
        return []
    return fired
