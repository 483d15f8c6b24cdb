"""Explicit eigenvector basis of a blown-up free-form Sudoku graph.

For a blow-up factor k, a full eigenbasis of the blown-up adjacency (in
subsquare vertex order) is assembled from Kronecker products built out of
the original graph's layers:

  XV:  x (x) 1_k (x) y   x an eigenvector of l_v (value lam), y in ker(J_k)
                         -> eigenvalue lam*k - 1
  XH:  x (x) y (x) 1_k   x an eigenvector of l_h (value lam), y in ker(J_k)
                         -> eigenvalue lam*k - 1
  XE:  e_i (x) y (x) z   e_i standard basis, y, z in ker(J_k)
                         -> eigenvalue -1
  XM:  x (x) 1_{k^2}     x an eigenvector of M = k^2 l_b + k l_h + k l_v
                         (value lam) -> eigenvalue lam + k^2 - 1

With N cells in the original grid the families have sizes (k-1)N, (k-1)N,
(k-1)^2 N and N, totalling k^2 N, and they are jointly independent; the
largest eigenvalue always comes from XM.  Eigenvector ingredients with
integer eigenvalues are exact (integer vectors from rational kernels);
non-integer eigenpairs come from the floating-point oracle and are flagged
approximate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graph, linalg, spectra
from .blowup import blown_adjacency
from .linalg import all_ones, kron, unit_vector
from .tiling import Tiling

__all__ = [
    "EigenSpace",
    "EigenFamily",
    "EigenBasisReport",
    "VerificationFailure",
    "kj_basis",
    "eigenvector_basis",
    "build_families",
    "predicted_spectrum",
    "verify",
]

FAMILY_KINDS = ("XV", "XH", "XE", "XM")


class VerificationFailure(Exception):
    """An eigenbasis verification clause failed; names the clause."""

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


@dataclass(frozen=True, eq=False)
class EigenSpace:
    """One eigenvalue with a basis of its eigenspace.

    Exact spaces carry integer eigenvalues and primitive integer vectors;
    approximate ones carry a float eigenvalue and one unit float vector.
    """

    value: int | float
    vectors: tuple[np.ndarray, ...]
    exact: bool

    @property
    def dim(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True, eq=False)
class EigenFamily:
    kind: str
    vectors: tuple[np.ndarray, ...]
    eigenvalues: tuple
    exact: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True, eq=False)
class EigenBasisReport:
    families: tuple[EigenFamily, EigenFamily, EigenFamily, EigenFamily]
    total_rank: int
    max_residual: float
    predicted: tuple
    oracle: tuple[float, ...]
    spectrum_max_error: float
    max_predicted: float
    max_family: str
    max_lower_bound: int

    @property
    def family_sizes(self) -> tuple[int, int, int, int]:
        return tuple(len(f) for f in self.families)  # type: ignore[return-value]


def kj_basis(k: int) -> list[np.ndarray]:
    """The k-1 vectors (1, -1, 0, ...), (1, 0, -1, ...), ...: a maximal
    independent subset of ker(J_k).  Empty for k = 1."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = []
    for i in range(1, k):
        v = np.full(k, 0, dtype=object)
        v[0] = 1
        v[i] = -1
        out.append(v)
    return out


def _match_residual_indices(w: np.ndarray, integer_part, atol: float = 1e-6) -> list[int]:
    """Indices of the float eigenvalues not accounted for by integer ones.

    Both lists are ascending and the integer multiset is a sub-multiset of
    the true spectrum, so a greedy sweep pairs them off; near-collisions
    within atol are harmless downstream (the residual tolerance absorbs
    them).
    """
    ints = [lam for lam, mult in integer_part for _ in range(mult)]
    leftover = []
    pos = 0
    for idx, val in enumerate(w):
        if pos < len(ints) and abs(val - ints[pos]) <= atol:
            pos += 1
        else:
            leftover.append(idx)
    if pos != len(ints):
        raise RuntimeError("exact integer eigenvalues not found in float spectrum")
    return leftover


def eigenvector_basis(a) -> list[EigenSpace]:
    """Maximal independent eigenvector sets of a symmetric integer matrix.

    Every integer eigenvalue gets an exact rational-kernel basis; if the
    spectrum has a non-integer part, those eigenpairs come from the float
    oracle (one vector each) and are flagged approximate.  The union spans
    the whole space.
    """
    a = linalg._require_symmetric(a)
    n = a.shape[0]
    spectrum = spectra.exact_spectrum(a)
    spaces = []
    for lam, mult in spectrum.integer_part:
        vecs = linalg.rational_kernel(a, lam)
        if len(vecs) != mult:
            raise RuntimeError(
                f"eigenvalue {lam}: kernel dimension {len(vecs)} != multiplicity {mult}"
            )
        vecs = sorted(vecs, key=lambda v: tuple(v))
        spaces.append(EigenSpace(lam, tuple(vecs), True))
    if spectrum.residual_degree:
        w, v = linalg._float_eigen_pairs(a)
        for idx in _match_residual_indices(w, spectrum.integer_part):
            spaces.append(EigenSpace(float(w[idx]), (v[:, idx].copy(),), False))
    spaces.sort(key=lambda s: (float(s.value), not s.exact))
    if sum(s.dim for s in spaces) != n:
        raise RuntimeError("eigenspaces do not span")
    return spaces


def _family(kind, entries) -> EigenFamily:
    vectors, values, exact = [], [], []
    for vec, val, ex in entries:
        vectors.append(vec)
        values.append(val)
        exact.append(ex)
    return EigenFamily(kind, tuple(vectors), tuple(values), tuple(exact))


def build_families(
    t: Tiling, k: int
) -> tuple[EigenFamily, EigenFamily, EigenFamily, EigenFamily]:
    """Assemble the four eigenvector families of the k-fold blow-up.

    For k = 1 the first three families are empty (ker(J_1) is trivial) and
    XM alone is a full eigenbasis of the original adjacency.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = graph.layers(t)
    n = t.n_cells
    kj = kj_basis(k)
    ones_k = all_ones(k)
    ones_k2 = all_ones(k * k)

    xv = []
    for space in eigenvector_basis(d.l_v):
        mu = space.value * k - 1
        for x in space.vectors:
            for y in kj:
                xv.append((kron(kron(x, ones_k), y), mu, space.exact))

    xh = []
    for space in eigenvector_basis(d.l_h):
        mu = space.value * k - 1
        for x in space.vectors:
            for y in kj:
                xh.append((kron(kron(x, y), ones_k), mu, space.exact))

    xe = []
    for i in range(n):
        e_i = unit_vector(n, i)
        for y in kj:
            for z in kj:
                xe.append((kron(kron(e_i, y), z), -1, True))

    m_matrix = k * k * d.l_b + k * d.l_h + k * d.l_v
    xm = []
    for space in eigenvector_basis(m_matrix):
        mu = space.value + k * k - 1
        for x in space.vectors:
            xm.append((kron(x, ones_k2), mu, space.exact))

    return (
        _family("XV", xv),
        _family("XH", xh),
        _family("XE", xe),
        _family("XM", xm),
    )


def _full_eigenvalues(a) -> list[tuple[float | int, bool]]:
    """All eigenvalues: exact integers plus float residual roots."""
    spectrum = spectra.exact_spectrum(a)
    out: list[tuple[float | int, bool]] = [
        (lam, True) for lam, mult in spectrum.integer_part for _ in range(mult)
    ]
    if spectrum.residual_degree:
        w, _ = linalg._float_eigen_pairs(a)
        out.extend((float(w[i]), False) for i in _match_residual_indices(w, spectrum.integer_part))
    out.sort(key=lambda pair: float(pair[0]))
    return out


def predicted_spectrum(t: Tiling, k: int) -> tuple:
    """Predicted eigenvalue multiset of the k-fold blow-up, sorted.

    lam*k - 1 for each eigenvalue lam of l_v and of l_h (each k-1 times),
    -1 with multiplicity (k-1)^2 * N, and lam + k^2 - 1 for each eigenvalue
    lam of M = k^2 l_b + k l_h + k l_v; N = number of original cells.
    Exact entries are ints, approximate ones floats.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    d = graph.layers(t)
    n = t.n_cells
    values: list[float | int] = []
    if k > 1:
        for layer in (d.l_v, d.l_h):
            for lam, _exact in _full_eigenvalues(layer):
                values.extend([lam * k - 1] * (k - 1))
        values.extend([-1] * ((k - 1) * (k - 1) * n))
    m_matrix = k * k * d.l_b + k * d.l_h + k * d.l_v
    for lam, _exact in _full_eigenvalues(m_matrix):
        values.append(lam + k * k - 1)
    assert len(values) == k * k * n
    return tuple(sorted(values, key=float))


def _as_float(vec: np.ndarray) -> np.ndarray:
    return np.asarray(vec, dtype=float)


def verify(t: Tiling, k: int, residual_tol: float = 1e-8, spectrum_tol: float = 1e-6) -> EigenBasisReport:
    """Verify the eigenbasis construction against the blown-up graph.

    Checks, in order: every family vector is an eigenvector for its
    predicted eigenvalue (exactly for integer-path vectors, within
    residual_tol * ||A|| * ||v|| for approximate ones); the stacked family
    has full rank (exact fraction-free rank when everything is rational,
    SVD with a relative 1e-8 threshold otherwise); the largest predicted
    eigenvalue comes from XM, is at least m*k^2 - 1 and matches the oracle
    maximum; and the predicted multiset matches the float oracle pairwise
    within spectrum_tol.  Raises VerificationFailure naming the first
    violated clause.
    """
    families = build_families(t, k)
    up_a = blown_adjacency(t, k)
    dim = up_a.shape[0]
    up_f = np.asarray(up_a, dtype=float)
    fro = np.linalg.norm(up_f)

    max_residual = 0.0
    for fam in families:
        for vec, mu, exact in zip(fam.vectors, fam.eigenvalues, fam.exact):
            if exact:
                nz = np.flatnonzero(vec != 0)
                av = up_a[:, nz] @ vec[nz]
                if np.any(av - mu * vec != 0):
                    raise VerificationFailure(
                        "eigenvector-residual",
                        f"{fam.kind} vector for eigenvalue {mu} is not exact",
                    )
            else:
                vf = _as_float(vec)
                res = float(np.linalg.norm(up_f @ vf - mu * vf))
                allowed = residual_tol * fro * float(np.linalg.norm(vf))
                if res > allowed:
                    raise VerificationFailure(
                        "eigenvector-residual",
                        f"{fam.kind} eigenvalue {mu}: residual {res:.3e} > {allowed:.3e}",
                    )
                max_residual = max(max_residual, res)

    all_exact = all(all(fam.exact) for fam in families)
    stacked = [vec for fam in families for vec in fam.vectors]
    if len(stacked) != dim:
        raise VerificationFailure(
            "basis-rank", f"{len(stacked)} vectors for dimension {dim}"
        )
    if all_exact:
        mat = np.empty((dim, dim), dtype=object)
        for i, vec in enumerate(stacked):
            mat[i, :] = vec
        total_rank = linalg.rank(mat)
    else:
        mat_f = np.array([_as_float(v) for v in stacked])
        sing = np.linalg.svd(mat_f, compute_uv=False)
        total_rank = int(np.sum(sing > 1e-8 * sing[0]))
    if total_rank != dim:
        raise VerificationFailure("basis-rank", f"rank {total_rank} != {dim}")

    predicted = predicted_spectrum(t, k)
    oracle = tuple(linalg.float_eigen(up_a))

    xm = families[3]
    max_predicted = max(float(v) for v in xm.eigenvalues)
    overall_max = max(float(v) for v in predicted)
    if max_predicted < overall_max - spectrum_tol:
        raise VerificationFailure(
            "largest-not-from-XM",
            f"XM max {max_predicted} below overall {overall_max}",
        )
    # block size >= m, so M has k^2(J_s - I_s) as a principal submatrix and
    # interlacing puts its top eigenvalue above (m-1)k^2
    lower = t.m * k * k - 1
    if max_predicted < lower - spectrum_tol:
        raise VerificationFailure(
            "largest-eigenvalue-lower-bound",
            f"max {max_predicted} < {lower}",
        )
    if abs(max_predicted - oracle[-1]) > spectrum_tol:
        raise VerificationFailure(
            "largest-eigenvalue-mismatch",
            f"predicted {max_predicted} vs oracle {oracle[-1]}",
        )

    errs = [abs(float(p) - o) for p, o in zip(predicted, oracle)]
    spectrum_max_error = max(errs)
    if spectrum_max_error > spectrum_tol:
        raise VerificationFailure(
            "spectrum-oracle-mismatch", f"max pairing error {spectrum_max_error:.3e}"
        )

    return EigenBasisReport(
        families=families,
        total_rank=total_rank,
        max_residual=max_residual,
        predicted=predicted,
        oracle=oracle,
        spectrum_max_error=spectrum_max_error,
        max_predicted=max_predicted,
        max_family="XM",
        max_lower_bound=lower,
    )
