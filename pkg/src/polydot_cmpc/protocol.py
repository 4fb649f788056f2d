"""In-process simulation of the full coded-MPC matrix multiplication.

One run walks the complete message flow: the two sources evaluate their
share polynomials at every worker point; each worker multiplies its two
shares, scales by its reconstruction coefficients and re-shares the result
behind z fresh masks; workers exchange those re-shares, sum them, and the
master interpolates the first t^2 + z coefficients to read off Y = A^T B.

Everything is deterministic given (seed): every party's randomness is
keyed by its role, so the transcript is byte-stable no matter how the
worker loop is scheduled.
"""

from dataclasses import dataclass

import numpy as np

from polydot_cmpc import backend, counts, powersets
from polydot_cmpc.blockmatrix import BlockMatrix, assemble, partition, transpose_blockwise
from polydot_cmpc.errors import (
    DivisibilityError,
    SetupExhaustedError,
    ShapeMismatchError,
    SingularMatrixError,
)
from polydot_cmpc.field import DEFAULT_MODULUS, EvaluationPoints, FieldModulus
from polydot_cmpc.powersets import SchemeParams
from polydot_cmpc.rng import DeterministicStream
from polydot_cmpc.shares import SharePolynomial, build_FA, build_FB

SETUP_RETRIES = 64


@dataclass(frozen=True)
class ProtocolConfig:
    """Parameters of one protocol run; N is fixed by the scheme."""

    params: SchemeParams
    m: int
    modulus: FieldModulus = DEFAULT_MODULUS
    seed: int = 0

    def __post_init__(self):
        if self.m % self.params.s or self.m % self.params.t:
            raise DivisibilityError(
                f"s={self.params.s}, t={self.params.t} must divide m={self.m}")
        if self.params.z * 2 >= self.n_workers:
            # Cannot happen for this scheme (N >= 2z+1 in every region);
            # kept as a guard on the collusion model.
            raise ValueError("collusion bound must stay below half the workers")

    @property
    def n_workers(self) -> int:
        return counts.n_polydot(self.params)

    @property
    def master_evaluations(self) -> int:
        return self.params.t ** 2 + self.params.z


@dataclass
class Transcript:
    """Everything every party saw during one run.

    g_messages[n][n'] is the re-share worker n sent to worker n'.  The
    share polynomials and the per-worker masks are retained so the privacy
    auditor can inspect the literal view of any colluding subset.
    """

    alphas: EvaluationPoints
    fa_evals: np.ndarray        # (N, m/t, m/s)
    fb_evals: np.ndarray        # (N, m/s, m/t)
    h_evals: np.ndarray         # (N, m/t, m/t)
    g_messages: np.ndarray      # (N, N, m/t, m/t)
    i_evals: np.ndarray         # (N, m/t, m/t)
    y: np.ndarray               # (m, m)
    fa_poly: SharePolynomial
    fb_poly: SharePolynomial
    g_masks: np.ndarray         # (N, z, m/t, m/t)
    extraction: np.ndarray      # (t^2, N) reconstruction scalars
    master_evals_used: int


def _draw_points(config: ProtocolConfig, attempt: int) -> EvaluationPoints:
    stream = DeterministicStream(config.seed, "alpha", attempt)
    n = config.n_workers
    q = config.modulus.q
    if n > q - 1:
        raise SetupExhaustedError(
            f"need {n} distinct nonzero points but GF({q}) has only {q - 1}")
    alphas = stream.distinct_nonzero(n, q)
    return EvaluationPoints(tuple(alphas), config.modulus)


def _try_setup(config: ProtocolConfig, attempt: int):
    """Draw points and compute the reconstruction scalars.

    Fails (returns None) when the generalized Vandermonde on the product
    support is singular for this draw.  The master-side Vandermonde on the
    contiguous support {0..t^2+z-1} is checked as well, although distinct
    points make it provably invertible.
    """
    pts = _draw_points(config, attempt)
    params, q = config.params, config.modulus.q
    support = np.array(sorted(powersets.support_H(params)), dtype=np.int64)
    alphas = np.array(list(pts), dtype=np.int64)
    n = config.n_workers
    k = len(support)
    # The worker pool can exceed the product support (the s=1 closed form
    # over-counts for z < t); the first k evaluations then determine every
    # coefficient and the remaining workers get zero scalars.
    v_h = backend.power_matrix(alphas[:k], support, q)

    t, s, th = params.t, params.s, params.theta
    # List position i + t*l holds the target for output block (i, l), so
    # extraction row e matches re-share exponent e.
    targets = [i + t * (s - 1) + th * l for l in range(t) for i in range(t)]
    index = {int(e): i for i, e in enumerate(support)}
    rhs = np.zeros((k, len(targets)), dtype=np.int64)
    for col, tgt in enumerate(targets):
        rhs[index[tgt], col] = 1
    sol = backend.solve_mod(v_h.T.copy(), rhs, q)
    if sol is None:
        return None
    if k < n:
        sol = np.vstack([sol, np.zeros((n - k, len(targets)), dtype=np.int64)])

    k_master = config.master_evaluations
    v_master = backend.power_matrix(alphas[:k_master],
                                    np.arange(k_master, dtype=np.int64), q)
    probe = backend.solve_mod(v_master, np.zeros(k_master, dtype=np.int64), q)
    if probe is None:
        return None
    return pts, np.ascontiguousarray(sol.T)


def _setup(config: ProtocolConfig):
    for attempt in range(SETUP_RETRIES):
        result = _try_setup(config, attempt)
        if result is not None:
            return result
    raise SetupExhaustedError(
        f"no invertible point set found in {SETUP_RETRIES} draws; "
        "the modulus is too small for this support")


def setup_points(config: ProtocolConfig) -> EvaluationPoints:
    """Distinct nonzero points passing both invertibility checks."""
    return _setup(config)[0]


def worker_compute_H(fa_eval: np.ndarray, fb_eval: np.ndarray,
                     modulus: FieldModulus) -> np.ndarray:
    """The worker-side share product H(alpha_n) = F_A(alpha_n) F_B(alpha_n)."""
    if fa_eval.shape[1] != fb_eval.shape[0]:
        raise ShapeMismatchError("share evaluation shapes do not multiply")
    return backend.mod_matmul(fa_eval, fb_eval, modulus.q)


def worker_build_G(n: int, h_eval: np.ndarray, extraction_scalars,
                   config: ProtocolConfig) -> SharePolynomial:
    """Worker n's re-share polynomial.

    The first t^2 coefficients are r_n^{(i,l)} H(alpha_n) at exponent
    i + t*l; the top z coefficients are fresh uniform masks drawn from the
    (seed, "W", n) stream.
    """
    params, q = config.params, config.modulus.q
    t, z = params.t, params.z
    scalars = [int(r) for r in extraction_scalars]
    if len(scalars) != t * t:
        raise ValueError(f"expected {t * t} extraction scalars")
    mt = config.m // t
    if h_eval.shape != (mt, mt):
        raise ShapeMismatchError("H evaluation has wrong shape")
    h_obj = h_eval.astype(object)
    coeffs = {}
    for e in range(t * t):
        coeffs[e] = ((h_obj * scalars[e]) % q).astype(np.int64)
    stream = DeterministicStream(config.seed, "W", n)
    for w in range(z):
        coeffs[t * t + w] = stream.field_matrix(mt, mt, q)
    return SharePolynomial(coeffs=coeffs,
                           coded_support=frozenset(range(t * t)),
                           secret_support=frozenset(range(t * t, t * t + z)),
                           block_shape=(mt, mt), modulus=config.modulus)


def _check_input(name: str, mat: np.ndarray, config: ProtocolConfig):
    if mat.shape != (config.m, config.m):
        raise ShapeMismatchError(f"{name} must be {config.m} x {config.m}")
    if mat.min() < 0 or int(mat.max()) >= config.modulus.q:
        raise ValueError(f"{name} entries must be residues in [0, q)")


def run_protocol(a: np.ndarray, b: np.ndarray, config: ProtocolConfig,
                 corrupt_shares: bool = False) -> tuple[np.ndarray, Transcript]:
    """Execute all protocol phases; returns (Y, transcript) with Y = A^T B.

    `corrupt_shares` is a test hook: it rebuilds F_A with one secret mask
    reused twice, which leaves the output correct but must trip the
    privacy auditor.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    _check_input("A", a, config)
    _check_input("B", b, config)
    params, q = config.params, config.modulus.q
    s, t, z = params.s, params.t, params.z
    n = config.n_workers
    mt, ms = config.m // t, config.m // s

    pts, extraction = _setup(config)
    alphas = np.array(list(pts), dtype=np.int64)

    fa = build_FA(transpose_blockwise(partition(a, s, t)), params,
                  config.modulus, config.seed)
    fb = build_FB(partition(b, s, t), params, config.modulus, config.seed)
    if corrupt_shares:
        fa = _reuse_one_mask(fa)

    fa_evals = _evaluate_all(fa, alphas, q).reshape(n, mt, ms)
    fb_evals = _evaluate_all(fb, alphas, q).reshape(n, ms, mt)

    h_evals = np.empty((n, mt, mt), dtype=np.int64)
    for idx in range(n):
        h_evals[idx] = backend.mod_matmul(fa_evals[idx], fb_evals[idx], q)

    # Re-share coefficient tensor: for worker n, exponent e < t^2 carries
    # extraction[e, n] * H_n; exponents t^2..t^2+z-1 carry the masks.
    be = mt * mt
    k_g = t * t + z
    h_flat = h_evals.reshape(n, be)
    coeff = np.empty((n, k_g, be), dtype=np.int64)
    for e in range(t * t):
        scaled = backend.mod_mul_elemwise(
            np.repeat(extraction[e][:, None], be, axis=1), h_flat, q)
        coeff[:, e, :] = scaled
    g_masks = np.empty((n, z, mt, mt), dtype=np.int64)
    for idx in range(n):
        stream = DeterministicStream(config.seed, "W", idx)
        for w in range(z):
            g_masks[idx, w] = stream.field_matrix(mt, mt, q)
    coeff[:, t * t:, :] = g_masks.reshape(n, z, be)

    # All pairwise messages at once: G_n(alpha_{n'}) for every (n, n').
    p_g = backend.power_matrix(alphas, np.arange(k_g, dtype=np.int64), q)
    stacked = np.ascontiguousarray(coeff.transpose(0, 2, 1).reshape(n * be, k_g))
    evals = backend.mod_matmul(stacked, p_g.T.copy(), q)
    g_messages = np.ascontiguousarray(
        evals.reshape(n, be, n).transpose(0, 2, 1)).reshape(n, n, mt, mt)

    i_flat = backend.sum_mod_axis0(g_messages.reshape(n, n * be), q)
    i_evals = i_flat.reshape(n, mt, mt)

    k_master = config.master_evaluations
    v_master = backend.power_matrix(alphas[:k_master],
                                    np.arange(k_master, dtype=np.int64), q)
    coeffs = backend.solve_mod(v_master, i_evals[:k_master].reshape(k_master, be), q)
    if coeffs is None:  # unreachable: distinct points, contiguous support
        raise SingularMatrixError("master interpolation system is singular")
    y_blocks = [[coeffs[i + t * l].reshape(mt, mt) for l in range(t)]
                for i in range(t)]
    y = assemble(BlockMatrix(y_blocks))

    transcript = Transcript(alphas=pts, fa_evals=fa_evals, fb_evals=fb_evals,
                            h_evals=h_evals, g_messages=g_messages,
                            i_evals=i_evals, y=y, fa_poly=fa, fb_poly=fb,
                            g_masks=g_masks, extraction=extraction,
                            master_evals_used=k_master)
    return y, transcript


def _evaluate_all(poly: SharePolynomial, alphas: np.ndarray, q: int) -> np.ndarray:
    """Evaluate a share polynomial at every point: one power table, one matmul."""
    support = np.array(sorted(poly.coeffs), dtype=np.int64)
    table = backend.power_matrix(alphas, support, q)
    flat = np.stack([poly.coeffs[int(e)].reshape(-1) for e in support])
    return backend.mod_matmul(table, flat, q)


def _reuse_one_mask(poly: SharePolynomial) -> SharePolynomial:
    """Corruption hook: duplicate one secret mask across two exponents."""
    secret = sorted(poly.secret_support)
    if len(secret) < 2:
        raise ValueError("need z >= 2 to reuse a mask")
    coeffs = dict(poly.coeffs)
    coeffs[secret[1]] = coeffs[secret[0]].copy()
    return SharePolynomial(coeffs=coeffs, coded_support=poly.coded_support,
                           secret_support=poly.secret_support,
                           block_shape=poly.block_shape, modulus=poly.modulus)


@dataclass
class SubsetAudit:
    subset: tuple
    failures: list  # names of the mask structures that lost rank

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class AuditReport:
    subsets: list

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.subsets)

    @property
    def failure_count(self) -> int:
        return sum(0 if entry.passed else 1 for entry in self.subsets)


def _gf_rank(rows: list[list[int]], q: int) -> int:
    rows = [list(r) for r in rows]
    rank, cols = 0, len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % q), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        rows[rank] = [(v * inv) % q for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q:
                f = rows[r][col]
                rows[r] = [(v - f * p) % q for v, p in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _mask_columns(subset_alphas: list[int], groups: dict, q: int) -> list[list[int]]:
    """One column per distinct mask matrix; duplicated masks merge columns.

    Column entries are sum over the exponents carrying that mask of
    alpha^e, i.e. the actual coefficient with which the mask pads each
    colluder's view.
    """
    cols = []
    for exps in groups.values():
        cols.append([sum(pow(a, e, q) for e in exps) % q for a in subset_alphas])
    return [list(row) for row in zip(*cols)]


def _group_by_matrix(poly_coeffs: dict, exponents) -> dict:
    groups: dict[bytes, list[int]] = {}
    for e in sorted(exponents):
        groups.setdefault(poly_coeffs[e].tobytes(), []).append(e)
    return groups


def audit_privacy(transcript: Transcript, config: ProtocolConfig,
                  subset_samples: int) -> AuditReport:
    """Rank-audit the masking structure against sampled z-collusions.

    For each sampled subset S of z workers three structures must have full
    rank z over GF(q): the source-A mask coefficients on S's F_A views,
    the source-B ones, and for every worker n the coefficients of its
    re-share masks on S's received messages.  Full rank makes the masks a
    one-time pad on the subset's view; a reused mask collapses two columns
    and is reported as a rank deficiency.
    """
    params, q = config.params, config.modulus.q
    z, n = params.z, config.n_workers
    alphas = list(transcript.alphas)
    stream = DeterministicStream(config.seed, "audit")
    fa_groups = _group_by_matrix(transcript.fa_poly.coeffs,
                                 transcript.fa_poly.secret_support)
    fb_groups = _group_by_matrix(transcript.fb_poly.coeffs,
                                 transcript.fb_poly.secret_support)
    mask_exps = list(range(params.t ** 2, params.t ** 2 + z))

    entries = []
    for _ in range(subset_samples):
        subset = tuple(stream.sample_indices(n, z))
        sub_alphas = [alphas[i] for i in subset]
        failures = []
        if _gf_rank(_mask_columns(sub_alphas, fa_groups, q), q) < z:
            failures.append("source-A masks")
        if _gf_rank(_mask_columns(sub_alphas, fb_groups, q), q) < z:
            failures.append("source-B masks")
        for worker in range(n):
            groups: dict[bytes, list[int]] = {}
            for w, e in enumerate(mask_exps):
                groups.setdefault(transcript.g_masks[worker, w].tobytes(),
                                  []).append(e)
            if _gf_rank(_mask_columns(sub_alphas, groups, q), q) < z:
                failures.append(f"worker-{worker} masks")
        entries.append(SubsetAudit(subset=subset, failures=failures))
    return AuditReport(subsets=entries)
