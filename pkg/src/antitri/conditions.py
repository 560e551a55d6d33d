"""Hypothesis checkers and seeded instance generators.

``check_conditions`` evaluates the residual of every algebraic
hypothesis (and existence clause) attached to a formula identifier and
reports pass/fail per clause.  ``generate`` manufactures (E, F) pairs
that satisfy a formula's hypotheses exactly in exact arithmetic --
realized in floating point through integer unimodular similarities --
or deliberately violate exactly one named clause.

Generation recipe: draw a unimodular integer S (product of elementary
matrices with entries in {-2..2}); set F = S diag(C, N) S^-1 with C an
invertible diagonal (moduli in [0.5, 2]) and N a direct sum of
nilpotent Jordan blocks of index <= 3; then F^pi = S diag(0, I) S^-1
and each formula's constraints on E become block-structural in the
same basis (e.g. FEF^pi = 0 forces the upper-right block of E to
vanish and N E22 = 0).  Transposed hypothesis families (F^pi E F = 0
instead of F E F^pi = 0) are generated by transposing a pair built for
the untransposed family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, block2x2, frobenius_norm, identity, matrix, zeros
from .formulas import BlockPair, Pattern
from .geninv import drazin
from .reports import ConditionEntry, ConditionReport


class InfeasibleRecipeError(ValueError):
    """The requested violation is structurally forced to be impossible."""


PATTERN_FOR = {
    "thm23": Pattern.EI_F0,
    "thm25": Pattern.EI_F0,
    "cor26": Pattern.EF_I0,
    "thm27": Pattern.EI_F0,
    "thm31": Pattern.EI_F0,
    "cor32": Pattern.EF_I0,
    "thm33": Pattern.EF_I0,
    "cor34": Pattern.EI_F0,
    "cor35": Pattern.EF_I0,
    "thm41": Pattern.EF_F0,
    "cor42": Pattern.EF_F0,
    "cor43": Pattern.EF_F0,
    "cor44": Pattern.EF_F0,
}

THEOREM_IDS = tuple(PATTERN_FOR)

# clauses per formula id: annihilator hypotheses first, then existence clauses
THEOREM_CONDITIONS = {
    "lemma22": ("PQP", "Q2P"),
    "lemma24": ("PQ",),
    "thm23": ("EFE", "F2E"),
    "thm25": ("EFEFpi", "F2EFpi"),
    "cor26": ("EFEFpi", "F2EFpi"),
    "thm27": ("EFEFpi", "F2EFpi"),
    "thm31": ("FEFpi", "FFpi", "EpiFpi"),
    "cor32": ("FEFpi", "FFpi", "EpiFpi"),
    "thm33": ("FpiEF", "FFpi", "FpiEpi"),
    "cor34": ("FpiEF", "FFpi", "FpiEpi"),
    "cor35": ("EF2-FEF", "FFpi", "FpiEpi"),
    "thm41": ("FFpi", "FEFpi", "EEpiFpi"),
    "cor42": ("FFpi", "FpiEF", "FpiEpiE"),
    "cor43": ("EEpi", "FFpi", "FEFpi|FpiEF"),
    "cor44": ("EEpi", "FFpi", "EF2-FEF"),
}


def check_conditions(
    e: np.ndarray,
    f: np.ndarray,
    theorem_id: str,
    tol: float = DEFAULT_TOL,
    lam: complex | None = None,
) -> ConditionReport:
    """One residual entry per clause of the named formula.

    Residual = Frobenius norm of the clause's left-hand side; threshold
    = tol * max(1, |E|_F) * max(1, |F|_F).  FFpi/EEpi encode group
    invertibility (X group invertible iff X X^pi = 0).  A supplied lam
    adds the EF - lam FE alternative to the commutation clause; the
    either-or clauses take the smaller residual.
    """
    if theorem_id not in THEOREM_CONDITIONS:
        raise KeyError(f"unknown formula id {theorem_id!r}")
    if e.shape != f.shape or e.shape[0] != e.shape[1]:
        raise ValueError(f"E and F must be square of equal shape, got {e.shape}, {f.shape}")
    threshold = tol * max(1.0, frobenius_norm(e)) * max(1.0, frobenius_norm(f))
    names = THEOREM_CONDITIONS[theorem_id]
    need_idem = any("pi" in n.lower() for n in names if n not in ("PQ", "PQP", "Q2P"))
    epi = drazin(e, tol).idempotent if need_idem else None
    fpi = drazin(f, tol).idempotent if need_idem else None
    exprs = {
        "PQ": lambda: e @ f,
        "PQP": lambda: e @ f @ e,
        "Q2P": lambda: f @ f @ e,
        "EFE": lambda: e @ f @ e,
        "F2E": lambda: f @ f @ e,
        "EFEFpi": lambda: e @ f @ e @ fpi,
        "F2EFpi": lambda: f @ f @ e @ fpi,
        "FEFpi": lambda: f @ e @ fpi,
        "FpiEF": lambda: fpi @ e @ f,
        "EpiFpi": lambda: epi @ fpi,
        "FpiEpi": lambda: fpi @ epi,
        "EEpiFpi": lambda: e @ epi @ fpi,
        "FpiEpiE": lambda: fpi @ epi @ e,
        "FFpi": lambda: f @ fpi,
        "EEpi": lambda: e @ epi,
        "EF2-FEF": lambda: e @ f @ f - f @ e @ f,
    }
    entries = []
    for name in names:
        if name == "FEFpi|FpiEF":
            residual = min(frobenius_norm(exprs["FEFpi"]()), frobenius_norm(exprs["FpiEF"]()))
        elif name == "EF2-FEF" and lam is not None:
            residual = min(
                frobenius_norm(exprs["EF2-FEF"]()),
                frobenius_norm(e @ f - lam * (f @ e)),
            )
            name = "EF-lFE|EF2-FEF"
        else:
            residual = frobenius_norm(exprs[name]())
        entries.append(
            ConditionEntry(
                name=name, residual=residual, threshold=threshold, passed=residual <= threshold
            )
        )
    return ConditionReport.build(entries)


@dataclass(frozen=True)
class GeneratorRecipe:
    theorem_id: str
    dimension: int
    seed: int
    violate: str | None = None


def example_45() -> BlockPair:
    """The built-in golden fixture: integer involution E, Gaussian-integer F."""
    e = matrix([[1, 2], [0, -1]])
    f = matrix([[1j, 1j], [0, 0]])
    return BlockPair(E=e, F=f, pattern=Pattern.EF_F0)


# ---------------------------------------------------------------------------
# construction helpers


def _unimodular(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer unimodular S and its exact integer inverse."""
    s = np.eye(n, dtype=np.int64)
    s_inv = np.eye(n, dtype=np.int64)
    if n == 1:
        return s.astype(np.complex128), s_inv.astype(np.complex128)
    for _ in range(n + 2):
        i, j = rng.integers(0, n, 2)
        c = int(rng.integers(-2, 3))
        if i == j or c == 0:
            continue
        trial = s.copy()
        trial[i, :] += c * trial[j, :]
        if np.max(np.abs(trial)) > 40:  # keep conditioning under control
            continue
        s = trial
        s_inv[:, j] -= c * s_inv[:, i]  # fold in the inverse elementary op
    return s.astype(np.complex128), s_inv.astype(np.complex128)


def _phase(rng: np.random.Generator) -> complex:
    return complex(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))


def _invertible_diag(rng: np.random.Generator, n: int) -> np.ndarray:
    if n == 0:
        return zeros(0, 0)
    vals = np.array([rng.uniform(0.5, 2.0) * _phase(rng) for _ in range(n)], dtype=np.complex128)
    return np.diag(vals)


def _free(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    if rows == 0 or cols == 0:
        return zeros(rows, cols)
    grid = rng.integers(-2, 3, (rows, cols)) + 1j * rng.integers(-2, 3, (rows, cols))
    return (grid / 2.0).astype(np.complex128)


def _nilpotent(rng: np.random.Generator, size: int, lead_index: int = 1) -> tuple[np.ndarray, list[int]]:
    """Direct sum of Jordan blocks, sizes <= 3, first block of size >= lead_index."""
    sizes: list[int] = []
    left = size
    while left > 0:
        hi = min(3, left)
        lo = min(lead_index, hi) if not sizes else 1
        sizes.append(int(rng.integers(lo, hi + 1)))
        left -= sizes[-1]
    n = zeros(size, size)
    at = 0
    for s in sizes:
        for k in range(s - 1):
            n[at + k, at + k + 1] = 1.0
        at += s
    return n, sizes


def _kernel_indices(sizes: list[int], depth: int) -> list[int]:
    """Indices spanning ker(N^depth) for a direct sum of Jordan blocks."""
    out = []
    at = 0
    for s in sizes:
        out.extend(range(at, at + min(depth, s)))
        at += s
    return out


def _group_diag(rng: np.random.Generator, size: int, rank: int | None = None) -> np.ndarray:
    """Group invertible block: invertible diagonal padded with zeros."""
    if size == 0:
        return zeros(0, 0)
    g = int(rng.integers(0, size + 1)) if rank is None else rank
    out = zeros(size, size)
    out[:g, :g] = _invertible_diag(rng, g)
    return out


def _infeasible(recipe: GeneratorRecipe, why: str):
    raise InfeasibleRecipeError(
        f"recipe {recipe.theorem_id} n={recipe.dimension} violate={recipe.violate}: {why}"
    )


def _split(rng: np.random.Generator, n: int, min_z: int = 0, max_z: int | None = None) -> tuple[int, int]:
    """Pick (r, z) with r + z = n and min_z <= z <= max_z."""
    hi = n if max_z is None else min(n, max_z)
    z = int(rng.integers(min_z, hi + 1))
    return n - z, z


# ---------------------------------------------------------------------------
# per-family builders: all work in the F-eigenbasis, then conjugate by S


def _build_thm23(rng, n, violate, recipe):
    """EFE = 0 and F^2 E = 0 via a three-way index partition.

    im(E) lives on index set J_E, F maps span(J_E) into span(J_K), and
    both E and F kill span(J_K); then EFE = 0 and F^2 E = 0 exactly.
    """
    if violate not in (None, "EFE", "F2E"):
        _infeasible(recipe, f"unknown clause {violate!r}")
    if n == 1:
        if violate:
            _infeasible(recipe, "scalar hypotheses cannot be broken one at a time")
        if rng.random() < 0.5:
            return zeros(1, 1), _free(rng, 1, 1)
        return _free(rng, 1, 1), zeros(1, 1)
    mode = rng.random()
    if violate is None and mode < 0.12:
        return zeros(n, n), _free(rng, n, n)
    if violate is None and mode < 0.24:
        return _free(rng, n, n), zeros(n, n)
    idx = list(rng.permutation(n))
    n_e = int(rng.integers(1, n))
    n_k = int(rng.integers(1, n - n_e + 1))
    j_e, j_k = idx[:n_e], idx[n_e:n_e + n_k]
    j_r = idx[n_e + n_k:]
    e = zeros(n, n)
    f = zeros(n, n)
    e[np.ix_(j_e, j_e + j_r)] = _free(rng, n_e, n_e + len(j_r))
    f[np.ix_(j_k, j_e)] = _free(rng, n_k, n_e)
    if j_r:
        f[np.ix_(j_k + j_r, j_r)] = _free(rng, n_k + len(j_r), len(j_r))
    if violate:
        i1, k0 = j_e[0], j_k[0]
        e[:, i1] = 0.0
        e[i1, i1] = 1.0  # e_{i1} in im(E)
        f[k0, :] = 0.0
        f[k0, i1] = 1.0  # F e_{i1} = e_{k0} exactly
        if violate == "EFE":
            e[i1, k0] = 1.0  # E no longer kills e_{k0}: (EFE)[i1, i1] = 1
        else:
            target = j_r[0] if j_r else j_e[-1]  # never in J_K
            f[target, :] = 0.0
            f[target, k0] = 1.0  # F no longer kills e_{k0}: (F^2 E)[target, i1] = 1
    return e, f


def _build_thm25(rng, n, violate, recipe):
    """EFEF^pi = 0 and F^2 E F^pi = 0.

    With F = diag(C, N), the constraints on E = [[E11, E12], [E21, E22]]
    are E12 = 0, N^2 E22 = 0 and E22 N E22 = 0; the last two hold when
    E22's rows live on ker(N^2) and its columns vanish on ker(N).
    """
    if violate not in (None, "EFEFpi", "F2EFpi"):
        _infeasible(recipe, f"unknown clause {violate!r}")
    min_z = {"EFEFpi": 2, "F2EFpi": 3}.get(violate, 1)
    if violate and n < min_z:
        _infeasible(recipe, f"needs a nilpotent corner of size >= {min_z}")
    s, s_inv = _unimodular(rng, n)
    if violate is None:
        mode = rng.random()
        if mode < 0.10:
            return _free(rng, n, n), zeros(n, n)
        if mode < 0.20:
            return _free(rng, n, n), s @ _invertible_diag(rng, n) @ s_inv
    r, z = _split(rng, n, min_z=min_z)
    nil, sizes = _nilpotent(rng, z, lead_index=min_z if violate else 1)
    c = _invertible_diag(rng, r)
    ft = block2x2(c, zeros(r, z), zeros(z, r), nil)
    e22 = zeros(z, z)
    if violate is None:
        k1 = _kernel_indices(sizes, 1)
        k2 = _kernel_indices(sizes, 2)
        cols = [j for j in range(z) if j not in k1]
        if k2 and cols:
            e22[np.ix_(k2, cols)] = _free(rng, len(k2), len(cols))
    elif violate == "EFEFpi":  # E22 N E22 != 0 while N^2 E22 = 0
        at = sum(sizes[:0])  # lead block starts at 0
        e22[at + 1, at] = 1.0
        e22[at + 1, at + 1] = 1.0
    else:  # N^2 E22 != 0 while E22 N E22 = 0
        e22[2, 2] = 1.0  # lead block has size 3 at offset 0
    e11 = _free(rng, r, r)
    e21 = _free(rng, z, r)
    et = np.block([[e11, zeros(r, z)], [e21, e22]])
    return s @ et @ s_inv, s @ ft @ s_inv


def _build_group_eif0(rng, n, violate, recipe, transposed: bool):
    """F E F^pi = 0 with existence clause (F group, E^pi F^pi = 0).

    transposed=True yields the F^pi E F = 0 / F^pi E^pi = 0 family by
    transposing a pair built for the plain one.
    """
    plain_violate = violate
    if transposed:
        plain_violate = {None: None, "FpiEF": "FEFpi", "FpiEpi": "EpiFpi", "FFpi": "FFpi"}.get(
            violate, "?"
        )
    if plain_violate not in (None, "FEFpi", "EpiFpi", "FFpi"):
        _infeasible(recipe, f"unknown clause {violate!r}")
    if plain_violate == "FFpi":
        # FEF^pi = 0 with N != 0 forces N E22 = 0, so E22 is singular and
        # the E^pi F^pi clause fails along with this one: never sharp.
        _infeasible(recipe, "breaking F's group invertibility alone is structurally impossible")
    s, s_inv = _unimodular(rng, n)
    if plain_violate is None and rng.random() < 0.10:
        et, ft = _free(rng, n, n), _invertible_diag(rng, n)  # F^pi = 0 degenerate
    elif plain_violate == "FEFpi":
        if n < 2:
            _infeasible(recipe, "needs both an invertible part and a kernel in F")
        r, z = _split(rng, n, min_z=1, max_z=n - 1)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        e12 = _free(rng, r, z)
        e12.flat[0] = 1.0
        # E invertible block-triangular: existence clause passes trivially
        et = np.block([[_invertible_diag(rng, r), e12], [zeros(z, r), _invertible_diag(rng, z)]])
    else:
        r, z = _split(rng, n, min_z=1)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        if plain_violate == "EpiFpi":
            if z == 0:
                _infeasible(recipe, "F invertible forces the existence clause")
            e22 = _group_diag(rng, z, rank=int(rng.integers(0, z)))
        else:
            e22 = _invertible_diag(rng, z)
        et = np.block(
            [[_free(rng, r, r), zeros(r, z)], [_free(rng, z, r), e22]]
        )
    if transposed:
        et, ft = et.T.copy(), ft.T.copy()
    return s @ et @ s_inv, s @ ft @ s_inv


def _build_identical(rng, n, violate, recipe, transposed: bool):
    """F E F^pi = 0 with F group invertible standing and E E^pi F^pi = 0.

    transposed=True gives the F^pi E F = 0 / F^pi E^pi E = 0 family.
    """
    plain_violate = violate
    if transposed:
        plain_violate = {None: None, "FpiEF": "FEFpi", "FpiEpiE": "EEpiFpi", "FFpi": "FFpi"}.get(
            violate, "?"
        )
    if plain_violate not in (None, "FEFpi", "EEpiFpi", "FFpi"):
        _infeasible(recipe, f"unknown clause {violate!r}")
    s, s_inv = _unimodular(rng, n)
    if plain_violate == "FFpi":
        # feasible here: the existence clause needs only a group invertible
        # E-corner, which can live inside ker N
        if n < 2:
            _infeasible(recipe, "nilpotent corner of size >= 2 required")
        r, z = _split(rng, n, min_z=2)
        nil, sizes = _nilpotent(rng, z, lead_index=2)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), nil)
        k1 = _kernel_indices(sizes, 1)
        e22 = zeros(z, z)
        e22[k1[0], k1[0]] = 1.0  # idempotent corner inside ker N: group, N E22 = 0
        et = np.block([[_free(rng, r, r), zeros(r, z)], [_free(rng, z, r), e22]])
    elif plain_violate == "FEFpi":
        if n < 2:
            _infeasible(recipe, "needs both an invertible part and a kernel in F")
        r, z = _split(rng, n, min_z=1, max_z=n - 1)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        e12 = _free(rng, r, z)
        e12.flat[0] = 1.0
        et = np.block([[_invertible_diag(rng, r), e12], [zeros(z, r), _invertible_diag(rng, z)]])
    elif plain_violate == "EEpiFpi":
        if n < 2:
            _infeasible(recipe, "needs a kernel of size >= 2 in F")
        r, z = _split(rng, n, min_z=2)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        e22 = zeros(z, z)
        e22[0, 1] = 1.0  # index-2 corner: E E^pi F^pi != 0
        if z > 2:
            e22[2:, 2:] = _group_diag(rng, z - 2)
        et = np.block([[_free(rng, r, r), zeros(r, z)], [_free(rng, z, r), e22]])
    else:
        r, z = _split(rng, n)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        et = np.block(
            [[_free(rng, r, r), zeros(r, z)], [_free(rng, z, r), _group_diag(rng, z)]]
        )
    if transposed:
        et, ft = et.T.copy(), ft.T.copy()
    return s @ et @ s_inv, s @ ft @ s_inv


def _build_cor43(rng, n, violate, recipe):
    """Both blocks group invertible, either annihilator hypothesis."""
    if violate not in (None, "EEpi", "FFpi", "FEFpi|FpiEF"):
        _infeasible(recipe, f"unknown clause {violate!r}")
    s, s_inv = _unimodular(rng, n)
    if violate == "FFpi":
        if n < 2:
            _infeasible(recipe, "nilpotent corner of size >= 2 required")
        r, z = _split(rng, n, min_z=2)
        nil, sizes = _nilpotent(rng, z, lead_index=2)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), nil)
        k1 = _kernel_indices(sizes, 1)
        e22 = zeros(z, z)
        e22[k1[0], k1[0]] = 1.0  # keeps FEF^pi = 0 and E group invertible
        et = block2x2(_group_diag(rng, r), zeros(r, z), zeros(z, r), e22)
        return s @ et @ s_inv, s @ ft @ s_inv
    if violate == "EEpi":
        if n < 2:
            _infeasible(recipe, "needs room for an index-2 corner in E")
        r, z = _split(rng, n, min_z=2)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        corner = zeros(z, z)
        corner[0, 1] = 1.0  # index-2 nilpotent part of E
        if z > 2:
            corner[2:, 2:] = _group_diag(rng, z - 2)
        et = block2x2(_group_diag(rng, r), zeros(r, z), zeros(z, r), corner)
        return s @ et @ s_inv, s @ ft @ s_inv
    if violate == "FEFpi|FpiEF":
        if n < 2:
            _infeasible(recipe, "needs both an invertible part and a kernel in F")
        r, z = _split(rng, n, min_z=1, max_z=n - 1)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        e12 = _free(rng, r, z)
        e12.flat[0] = 1.0
        e21 = _free(rng, z, r)
        e21.flat[0] = 1.0
        et = np.block(
            [[_invertible_diag(rng, r), e12], [e21, _invertible_diag(rng, z)]]
        )
        return s @ et @ s_inv, s @ ft @ s_inv
    r, z = _split(rng, n)
    ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
    e11 = _group_diag(rng, r)
    e22 = _group_diag(rng, z)
    mode = rng.random()
    if mode < 0.4 or r == 0 or z == 0:
        et = block2x2(e11, zeros(r, z), zeros(z, r), e22)  # both families hold
    elif mode < 0.7:
        # shear similarity: keeps E group invertible, FEF^pi family only
        t = _free(rng, z, r)
        et = np.block([[e11, zeros(r, z)], [t @ e11 - e22 @ t, e22]])
    else:
        # upper shear: F^pi E F family only
        t = _free(rng, r, z)
        et = np.block([[e11, e11 @ t - t @ e22], [zeros(z, r), e22]])
    return s @ et @ s_inv, s @ ft @ s_inv


def _build_commuting(rng, n, violate, recipe, need_group_e: bool):
    """cor35 (need_group_e=False) and cor44 (True): commutation-type pairs.

    Valid draws either commute outright (simultaneously diagonal in the
    S basis, lam = 1) or satisfy only EF^2 = FEF (block upper triangular
    E over a diagonal F).
    """
    exist_clause = "FpiEpi" if not need_group_e else "EEpi"
    if violate not in (None, "EF2-FEF", exist_clause):
        _infeasible(recipe, f"unknown clause {violate!r}")
    s, s_inv = _unimodular(rng, n)
    if violate == "EEpi":
        if n < 2:
            _infeasible(recipe, "needs n >= 2 for an index-2 corner in E")
        ft = _invertible_diag(rng, 1)[0, 0] * identity(n)  # scalar F commutes with all E
        et = zeros(n, n)
        et[0, 1] = 1.0
        if n > 2:
            et[2:, 2:] = _group_diag(rng, n - 2)
        return s @ et @ s_inv, s @ ft @ s_inv
    if violate == "EF2-FEF":
        if n < 2:
            _infeasible(recipe, "needs two distinct invertible eigenvalues of F")
        r, z = _split(rng, n, min_z=0, max_z=n - 2)
        c = _invertible_diag(rng, r)
        c[1, 1] = 2.0 * c[0, 0]  # distinct eigenvalues make the coupling sharp
        ft = block2x2(c, zeros(r, z), zeros(z, r), zeros(z, z))
        corner_e = _invertible_diag(rng, r) if need_group_e else _group_diag(rng, r)
        corner_e[0, 1] = 1.0  # coupling: (EF^2 - FEF)[0,1] = c1(c1 - c0)
        et = block2x2(corner_e, zeros(r, z), zeros(z, r), _invertible_diag(rng, z))
        return s @ et @ s_inv, s @ ft @ s_inv
    if violate == "FpiEpi":
        r, z = _split(rng, n, min_z=1)
        ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
        dz = _group_diag(rng, z, rank=int(rng.integers(0, z)))
        dr = _group_diag(rng, r)
        et = block2x2(dr, zeros(r, z), zeros(z, r), dz)
        return s @ et @ s_inv, s @ ft @ s_inv
    # valid draws
    r, z = _split(rng, n)
    ft = block2x2(_invertible_diag(rng, r), zeros(r, z), zeros(z, r), zeros(z, z))
    if rng.random() < 0.5 and r >= 1 and z >= 1:
        # EF^2 = FEF but EF != FE: diagonal-over-diagonal with coupling
        a = _invertible_diag(rng, r) if need_group_e else _group_diag(rng, r)
        et = np.block([[a, _free(rng, r, z)], [zeros(z, r), _invertible_diag(rng, z)]])
    else:
        dr = _invertible_diag(rng, r) if need_group_e else _group_diag(rng, r)
        et = block2x2(dr, zeros(r, z), zeros(z, r), _invertible_diag(rng, z))
    return s @ et @ s_inv, s @ ft @ s_inv


_BUILDERS = {
    "thm23": lambda rng, n, v, rec: _build_thm23(rng, n, v, rec),
    "thm25": lambda rng, n, v, rec: _build_thm25(rng, n, v, rec),
    "cor26": lambda rng, n, v, rec: _build_thm25(rng, n, v, rec),
    "thm27": lambda rng, n, v, rec: _build_thm25(rng, n, v, rec),
    "thm31": lambda rng, n, v, rec: _build_group_eif0(rng, n, v, rec, transposed=False),
    "cor32": lambda rng, n, v, rec: _build_group_eif0(rng, n, v, rec, transposed=False),
    "thm33": lambda rng, n, v, rec: _build_group_eif0(rng, n, v, rec, transposed=True),
    "cor34": lambda rng, n, v, rec: _build_group_eif0(rng, n, v, rec, transposed=True),
    "cor35": lambda rng, n, v, rec: _build_commuting(rng, n, v, rec, need_group_e=False),
    "thm41": lambda rng, n, v, rec: _build_identical(rng, n, v, rec, transposed=False),
    "cor42": lambda rng, n, v, rec: _build_identical(rng, n, v, rec, transposed=True),
    "cor43": lambda rng, n, v, rec: _build_cor43(rng, n, v, rec),
    "cor44": lambda rng, n, v, rec: _build_commuting(rng, n, v, rec, need_group_e=True),
}


def generate(recipe: GeneratorRecipe) -> BlockPair:
    """Deterministic (E, F) pair for the recipe's formula.

    Without ``violate`` the pair satisfies all the formula's clauses;
    with ``violate`` exactly that clause fails.  Structurally impossible
    requests raise InfeasibleRecipeError.
    """
    if recipe.theorem_id not in _BUILDERS:
        raise KeyError(f"unknown formula id {recipe.theorem_id!r}")
    if recipe.dimension < 1:
        raise InfeasibleRecipeError("dimension must be >= 1")
    rng = np.random.default_rng(recipe.seed)
    e, f = _BUILDERS[recipe.theorem_id](rng, recipe.dimension, recipe.violate, recipe)
    return BlockPair(E=matrix(e), F=matrix(f), pattern=PATTERN_FOR[recipe.theorem_id])
