"""Game specifications: schema, loading, validation, serialization.

Two kinds of scenario documents are supported, both JSON-compatible objects
whose numeric entries are decimal strings (auditable, locale-proof):

``kind = "lq"`` -- a linear-quadratic dynamic game.  Each decision maker
(DM) ``i`` has dynamics ``x' = A x + B u + C y + w`` and stage cost
``x'Qx + u'Ru + 2 y'(K u + L x)`` with terminal cost ``x'Q_T x`` and
discount ``beta``.  A shared environment variable ``y`` is produced by an
environment state ``x0`` plus the DM average::

    x0' = A0 x0 + (1/N) sum_i (B1_i u_i + B2_i x_i) + w0
    y   = D x0  + (1/N) sum_i (E1_i u_i + E2_i x_i) + xi

Matrices are dense row-major lists of decimal strings.  Per-DM matrices may
be given once (broadcast over all stages) or as a list of per-stage
matrices when the horizon is finite.  ``horizon`` is a positive integer or
the token ``"infinite"``.  The noise block declares Gaussian laws for the
stacked initial state ``X_0 = (x0, x_1, ..., x_N)``, the per-DM process
noises, the environment noises, and the primitive pre-play observation
``y_prev`` (jointly Gaussian with ``X_0``; only a Gaussian joint law is
supported).

``kind = "finite"`` -- a single-stage game with finite action sets, a
finite environment set, a disturbance pmf, an outcome table
``(joint action, disturbance) -> y`` and per-DM cost tables
``(own action, y) -> cost``.  Values are exact rationals ("1/3" or "0.5").

Specs are immutable after load (arrays are marked read-only) and safe to
share across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ._linalg import (
    as_f64,
    is_symmetric,
    min_eig_sym,
    pbh_stabilizable,
    spectral_radius,
)

INFINITE = "infinite"

__all__ = [
    "ScenarioError",
    "ParseError",
    "DimensionError",
    "DefinitenessError",
    "DmBlock",
    "EnvBlock",
    "NoiseBlock",
    "LqGameSpec",
    "FiniteGameSpec",
    "CheckResult",
    "ValidationReport",
    "load_spec",
    "loads_spec",
    "load_spec_file",
    "dump_spec",
    "dumps_spec",
    "validate_lq_spec",
]


class ScenarioError(ValueError):
    """Base class for scenario-document problems."""


class ParseError(ScenarioError):
    """Malformed document; message carries the offending location."""


class DimensionError(ScenarioError):
    """Inconsistent matrix dimensions; message names the offending block."""


class DefinitenessError(ScenarioError):
    """A matrix required to be (semi)definite is not."""


# --------------------------------------------------------------------------
# parsing helpers


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _num(obj, where: str) -> float:
    if isinstance(obj, bool) or obj is None:
        raise ParseError(f"{where}: expected a number, got {obj!r}")
    try:
        return float(obj)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: cannot parse number from {obj!r}") from None


def _int(obj, where: str) -> int:
    v = _num(obj, where)
    if v != int(v):
        raise ParseError(f"{where}: expected an integer, got {obj!r}")
    return int(v)


def _matrix(obj, where: str) -> np.ndarray:
    """Parse a dense row-major matrix of decimal strings; [] is 0x0."""
    if obj is None:
        raise ParseError(f"{where}: missing matrix")
    if not isinstance(obj, Sequence) or isinstance(obj, (str, bytes)):
        raise ParseError(f"{where}: expected a list of rows")
    rows = list(obj)
    if not rows:
        m = np.zeros((0, 0))
    else:
        parsed = []
        width = None
        for r, row in enumerate(rows):
            if not isinstance(row, Sequence) or isinstance(row, (str, bytes)):
                raise ParseError(f"{where}[{r}]: expected a row (list)")
            vals = [_num(v, f"{where}[{r}][{c}]") for c, v in enumerate(row)]
            if width is None:
                width = len(vals)
            elif len(vals) != width:
                raise ParseError(f"{where}[{r}]: ragged row ({len(vals)} vs {width})")
            parsed.append(vals)
        m = np.array(parsed, dtype=np.float64).reshape(len(rows), width or 0)
    m.flags.writeable = False
    return m


def _vector(obj, where: str) -> np.ndarray:
    if obj is None:
        raise ParseError(f"{where}: missing vector")
    if not isinstance(obj, Sequence) or isinstance(obj, (str, bytes)):
        raise ParseError(f"{where}: expected a list")
    v = np.array([_num(x, f"{where}[{i}]") for i, x in enumerate(obj)], dtype=np.float64)
    v.flags.writeable = False
    return v


def _expect_shape(m: np.ndarray, shape: tuple[int, int], where: str) -> np.ndarray:
    if m.shape == shape:
        return m
    # a 0x0 parse is accepted for any empty target block
    if m.size == 0 and (shape[0] == 0 or shape[1] == 0):
        z = np.zeros(shape)
        z.flags.writeable = False
        return z
    raise DimensionError(f"{where}: expected shape {shape}, got {m.shape}")


def _mat_or_schedule(obj, where: str):
    """A single matrix, or a list of per-stage matrices (time-varying)."""
    if (
        isinstance(obj, Sequence)
        and obj
        and isinstance(obj[0], Sequence)
        and not isinstance(obj[0], (str, bytes))
        and obj[0]
        and isinstance(obj[0][0], Sequence)
        and not isinstance(obj[0][0], (str, bytes))
    ):
        return tuple(_matrix(stage, f"{where}[t={t}]") for t, stage in enumerate(obj))
    return _matrix(obj, where)


def at(x, t: int) -> np.ndarray:
    """Stage-``t`` value of a (possibly time-varying) matrix."""
    if isinstance(x, tuple):
        return x[t]
    return x


def _schedule_shape(x, shape, where, horizon):
    if isinstance(x, tuple):
        if horizon is None:
            raise ParseError(f"{where}: time-varying matrices need a finite horizon")
        if len(x) != horizon:
            raise DimensionError(f"{where}: schedule length {len(x)} != horizon {horizon}")
        return tuple(_expect_shape(m, shape, f"{where}[t={t}]") for t, m in enumerate(x))
    return _expect_shape(x, shape, where)


# --------------------------------------------------------------------------
# LQ spec


@dataclass(frozen=True)
class DmBlock:
    """One DM's dynamics/cost data.  Matrix fields are a single array or a
    tuple of per-stage arrays; use :func:`at` for stage access."""

    A: object
    B: object
    C: object
    Q: object
    Q_T: np.ndarray
    R: object
    K: object
    L: object
    beta: float
    n: int
    m: int


@dataclass(frozen=True)
class EnvBlock:
    A0: object
    B1: tuple
    B2: tuple
    D: object
    E1: tuple
    E2: tuple
    n0: int
    p: int


@dataclass(frozen=True)
class NoiseBlock:
    x0_mean: np.ndarray
    x0_cov: np.ndarray
    w0_mean: np.ndarray
    w0_cov: np.ndarray
    w_means: tuple
    w_covs: tuple
    xi_mean: np.ndarray
    xi_cov: np.ndarray
    yprev_mean: np.ndarray
    yprev_cov: np.ndarray
    yprev_x0_cov: np.ndarray


@dataclass(frozen=True)
class LqGameSpec:
    n_dm: int
    horizon: int | None  # None = infinite
    per_dm: tuple[DmBlock, ...]
    env: EnvBlock
    noise: NoiseBlock

    @property
    def is_infinite(self) -> bool:
        return self.horizon is None

    @property
    def p(self) -> int:
        return self.env.p

    @property
    def nx(self) -> int:
        """Dimension of the stacked state X = (x0, x_1, ..., x_N)."""
        return self.env.n0 + sum(dm.n for dm in self.per_dm)

    def x_offset(self, i: int) -> int:
        """Offset of DM ``i``'s state inside X (i=0 is the environment)."""
        off = 0 if i == 0 else self.env.n0 + sum(d.n for d in self.per_dm[: i - 1])
        return off

    def x_slice(self, i: int) -> slice:
        off = self.x_offset(i)
        n = self.env.n0 if i == 0 else self.per_dm[i - 1].n
        return slice(off, off + n)

    def stacked_w_mean(self) -> np.ndarray:
        return np.concatenate([self.noise.w0_mean] + [m for m in self.noise.w_means])

    def stacked_w_cov(self) -> np.ndarray:
        import scipy.linalg

        blocks = [self.noise.w0_cov] + [c for c in self.noise.w_covs]
        return scipy.linalg.block_diag(*[b if b.size else np.zeros((0, 0)) for b in blocks])


def _load_lq(doc: Mapping) -> LqGameSpec:
    n_dm = _int(doc.get("n_dm"), "n_dm")
    if n_dm <= 0:
        raise ParseError("n_dm must be positive")
    hraw = doc.get("horizon")
    if hraw == INFINITE:
        horizon = None
    else:
        horizon = _int(hraw, "horizon")
        if horizon <= 0:
            raise ParseError("horizon must be a positive integer or 'infinite'")

    per_dm_raw = doc.get("per_dm")
    if not isinstance(per_dm_raw, Sequence) or len(per_dm_raw) != n_dm:
        raise ParseError(f"per_dm: expected a list of {n_dm} DM blocks")

    blocks = []
    for i, b in enumerate(per_dm_raw):
        w = f"per_dm[{i}]"
        A = _mat_or_schedule(b.get("A"), f"{w}.A")
        n = at(A, 0).shape[0]
        B = _mat_or_schedule(b.get("B"), f"{w}.B")
        m = at(B, 0).shape[1]
        K = _mat_or_schedule(b.get("K"), f"{w}.K")
        p = at(K, 0).shape[0]
        C = _mat_or_schedule(b.get("C"), f"{w}.C")
        Q = _mat_or_schedule(b.get("Q"), f"{w}.Q")
        Q_T = _matrix(b.get("Q_T", b.get("Q")), f"{w}.Q_T") if horizon is not None else None
        R = _mat_or_schedule(b.get("R"), f"{w}.R")
        L = _mat_or_schedule(b.get("L"), f"{w}.L")
        beta = _num(b.get("beta", "1"), f"{w}.beta")

        A = _schedule_shape(A, (n, n), f"{w}.A", horizon)
        B = _schedule_shape(B, (n, m), f"{w}.B", horizon)
        C = _schedule_shape(C, (n, p), f"{w}.C", horizon)
        Q = _schedule_shape(Q, (n, n), f"{w}.Q", horizon)
        R = _schedule_shape(R, (m, m), f"{w}.R", horizon)
        K = _schedule_shape(K, (p, m), f"{w}.K", horizon)
        L = _schedule_shape(L, (p, n), f"{w}.L", horizon)
        if horizon is not None:
            Q_T = _expect_shape(Q_T, (n, n), f"{w}.Q_T")
        else:
            Q_T = at(Q, 0)
        blocks.append(DmBlock(A, B, C, Q, Q_T, R, K, L, beta, n, m))

    p = at(blocks[0].K, 0).shape[0]
    for i, b in enumerate(blocks):
        if at(b.K, 0).shape[0] != p:
            raise DimensionError(f"per_dm[{i}].K: environment dimension differs across DMs")

    env_raw = doc.get("env")
    if not isinstance(env_raw, Mapping):
        raise ParseError("env: expected an object")
    A0 = _mat_or_schedule(env_raw.get("A0", []), "env.A0")
    n0 = at(A0, 0).shape[0]
    A0 = _schedule_shape(A0, (n0, n0), "env.A0", horizon)
    D = _schedule_shape(_mat_or_schedule(env_raw.get("D", [[]] * p), "env.D"), (p, n0), "env.D", horizon)

    def per_dm_env(key, rows_of):
        raw = env_raw.get(key)
        if raw is None:
            raw = [[] for _ in range(n_dm)]
        if not isinstance(raw, Sequence) or len(raw) != n_dm:
            raise ParseError(f"env.{key}: expected a list of {n_dm} matrices")
        out = []
        for i, obj in enumerate(raw):
            mat = _mat_or_schedule(obj, f"env.{key}[{i}]")
            cols = blocks[i].m if key in ("B1", "E1") else blocks[i].n
            rows = n0 if rows_of == "n0" else p
            out.append(_schedule_shape(mat, (rows, cols), f"env.{key}[{i}]", horizon))
        return tuple(out)

    env = EnvBlock(
        A0=A0,
        B1=per_dm_env("B1", "n0"),
        B2=per_dm_env("B2", "n0"),
        D=D,
        E1=per_dm_env("E1", "p"),
        E2=per_dm_env("E2", "p"),
        n0=n0,
        p=p,
    )

    nx = n0 + sum(b.n for b in blocks)
    noise_raw = doc.get("noise")
    if not isinstance(noise_raw, Mapping):
        raise ParseError("noise: expected an object")

    def law(key, dim, where):
        return _law_from(noise_raw.get(key), dim, where)

    x0_mean, x0_cov = law("x0", nx, "noise.x0")
    w0_mean, w0_cov = law("w0", n0, "noise.w0")
    w_raw = noise_raw.get("w")
    if w_raw is None:
        w_raw = [None] * n_dm
    if not isinstance(w_raw, Sequence) or len(w_raw) != n_dm:
        raise ParseError(f"noise.w: expected a list of {n_dm} laws")
    w_means, w_covs = [], []
    for i, obj in enumerate(w_raw):
        mean, cov = _law_from(obj, blocks[i].n, f"noise.w[{i}]")
        w_means.append(mean)
        w_covs.append(cov)
    xi_mean, xi_cov = law("xi", p, "noise.xi")
    yp_raw = noise_raw.get("y_prev")
    yprev_mean, yprev_cov = law("y_prev", p, "noise.y_prev")
    if isinstance(yp_raw, Mapping) and "cov_with_x0" in yp_raw:
        yprev_x0_cov = _expect_shape(
            _matrix(yp_raw["cov_with_x0"], "noise.y_prev.cov_with_x0"), (p, nx), "noise.y_prev.cov_with_x0"
        )
    else:
        yprev_x0_cov = np.zeros((p, nx))
        yprev_x0_cov.flags.writeable = False

    noise = NoiseBlock(
        x0_mean=x0_mean,
        x0_cov=x0_cov,
        w0_mean=w0_mean,
        w0_cov=w0_cov,
        w_means=tuple(w_means),
        w_covs=tuple(w_covs),
        xi_mean=xi_mean,
        xi_cov=xi_cov,
        yprev_mean=yprev_mean,
        yprev_cov=yprev_cov,
        yprev_x0_cov=yprev_x0_cov,
    )

    spec = LqGameSpec(n_dm=n_dm, horizon=horizon, per_dm=tuple(blocks), env=env, noise=noise)
    _check_lq_hard_invariants(spec)
    return spec


def _law_from(obj, dim, where):
    """Parse a Gaussian law {mean, cov}; a missing law is a point mass at 0."""
    if obj is None:
        mean = np.zeros(dim)
        cov = np.zeros((dim, dim))
        mean.flags.writeable = False
        cov.flags.writeable = False
        return mean, cov
    if not isinstance(obj, Mapping):
        raise ParseError(f"{where}: expected an object with mean/cov")
    mean = _vector(obj.get("mean", ["0"] * dim), f"{where}.mean")
    if mean.shape != (dim,):
        raise DimensionError(f"{where}.mean: expected length {dim}, got {mean.shape[0]}")
    if "cov" in obj:
        cov = _expect_shape(_matrix(obj["cov"], f"{where}.cov"), (dim, dim), f"{where}.cov")
    else:
        cov = np.zeros((dim, dim))
        cov.flags.writeable = False
    return mean, cov


def _stages(spec: LqGameSpec):
    return range(spec.horizon) if spec.horizon is not None else range(1)


def _check_lq_hard_invariants(spec: LqGameSpec) -> None:
    """Definiteness and covariance invariants that make a document invalid."""
    for i, dm in enumerate(spec.per_dm, start=1):
        for t in _stages(spec):
            for name, m in (("Q", at(dm.Q, t)), ("R", at(dm.R, t))):
                if not is_symmetric(m):
                    raise DefinitenessError(f"per_dm[{i - 1}].{name}[t={t}] is not symmetric")
                lo = min_eig_sym(m)
                if m.shape[0] and lo <= 0:
                    raise DefinitenessError(
                        f"per_dm[{i - 1}].{name}[t={t}] is not positive definite "
                        f"(min eigenvalue {lo:.6g})"
                    )
        if spec.horizon is not None:
            lo = min_eig_sym(dm.Q_T)
            if not is_symmetric(dm.Q_T) or (dm.Q_T.shape[0] and lo <= 0):
                raise DefinitenessError(
                    f"per_dm[{i - 1}].Q_T is not symmetric positive definite "
                    f"(min eigenvalue {lo:.6g})"
                )
        lo, hi = (0.0, 1.0) if spec.horizon is not None else (0.0, 1.0 - 1e-15)
        if not (lo <= dm.beta <= hi):
            kind = "[0,1]" if spec.horizon is not None else "[0,1)"
            raise ParseError(f"per_dm[{i - 1}].beta={dm.beta} outside {kind}")
    covs = [
        ("noise.x0.cov", spec.noise.x0_cov),
        ("noise.w0.cov", spec.noise.w0_cov),
        ("noise.xi.cov", spec.noise.xi_cov),
        ("noise.y_prev.cov", spec.noise.yprev_cov),
    ] + [(f"noise.w[{i}].cov", c) for i, c in enumerate(spec.noise.w_covs)]
    for name, c in covs:
        if not is_symmetric(c):
            raise DefinitenessError(f"{name} is not symmetric")
        if c.size and min_eig_sym(c) < -1e-10:
            raise DefinitenessError(
                f"{name} is not positive semidefinite (min eigenvalue {min_eig_sym(c):.6g})"
            )


# --------------------------------------------------------------------------
# finite single-stage games


@dataclass(frozen=True)
class FiniteGameSpec:
    n_dm: int
    actions: tuple[tuple[str, ...], ...]
    env_values: tuple[str, ...]
    xi_values: tuple[str, ...]
    xi_pmf: tuple[Fraction, ...]
    outcome: Mapping  # (joint action tuple, xi index) -> env value
    cost: tuple[Mapping, ...]  # per DM: (own action, env value) -> Fraction

    def joint_actions(self):
        import itertools

        return itertools.product(*self.actions)

    @property
    def n_joint(self) -> int:
        n = 1
        for a in self.actions:
            n *= len(a)
        return n


def _frac(obj, where: str) -> Fraction:
    try:
        return Fraction(str(obj))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot parse rational from {obj!r}") from None


def _load_finite(doc: Mapping) -> FiniteGameSpec:
    n_dm = _int(doc.get("n_dm"), "n_dm")
    if n_dm <= 0:
        raise ParseError("n_dm must be positive")
    actions_raw = doc.get("actions")
    if not isinstance(actions_raw, Sequence) or len(actions_raw) != n_dm:
        raise ParseError(f"actions: expected a list of {n_dm} action sets")
    actions = []
    for i, acts in enumerate(actions_raw):
        labels = tuple(str(a) for a in acts)
        if not labels:
            raise ParseError(f"actions[{i}]: empty action set")
        if len(set(labels)) != len(labels):
            raise ParseError(f"actions[{i}]: duplicate action labels")
        for a in labels:
            if "," in a or "|" in a:
                raise ParseError(f"actions[{i}]: label {a!r} may not contain ',' or '|'")
        actions.append(labels)
    env_values = tuple(str(v) for v in doc.get("env_values", ()))
    if not env_values or len(set(env_values)) != len(env_values):
        raise ParseError("env_values: expected a nonempty set of distinct labels")

    dist = doc.get("disturbance")
    if not isinstance(dist, Mapping):
        raise ParseError("disturbance: expected an object with values/pmf")
    xi_values = tuple(str(v) for v in dist.get("values", ()))
    pmf = tuple(_frac(x, f"disturbance.pmf[{i}]") for i, x in enumerate(dist.get("pmf", ())))
    if len(pmf) != len(xi_values) or not xi_values:
        raise ParseError("disturbance: values and pmf must be nonempty and equal length")
    if any(q < 0 for q in pmf):
        raise ParseError("disturbance.pmf: negative probability")
    total = sum(pmf)
    if abs(float(total - 1)) > 1e-12:
        raise ParseError(f"disturbance.pmf sums to {float(total)!r}, not 1")

    outcome_raw = doc.get("outcome")
    if not isinstance(outcome_raw, Mapping):
        raise ParseError("outcome: expected a table keyed 'u1,...,uN|k'")
    outcome = {}
    for key, val in outcome_raw.items():
        try:
            joint_s, k_s = key.rsplit("|", 1)
            joint = tuple(joint_s.split(","))
            k = int(k_s)
        except ValueError:
            raise ParseError(f"outcome key {key!r}: expected 'u1,...,uN|k'") from None
        y = str(val)
        if y not in env_values:
            raise ParseError(f"outcome[{key!r}]: value {y!r} not in env_values")
        outcome[(joint, k)] = y
    import itertools

    for joint in itertools.product(*actions):
        for k in range(len(xi_values)):
            if (joint, k) not in outcome:
                raise ParseError(
                    f"outcome: missing entry for joint action {','.join(joint)} "
                    f"and disturbance index {k} (map must be total)"
                )

    cost_raw = doc.get("cost")
    if not isinstance(cost_raw, Sequence) or len(cost_raw) != n_dm:
        raise ParseError(f"cost: expected a list of {n_dm} tables")
    cost = []
    for i, table in enumerate(cost_raw):
        if not isinstance(table, Mapping):
            raise ParseError(f"cost[{i}]: expected a table keyed 'u|y'")
        parsed = {}
        for key, val in table.items():
            try:
                u, y = key.split("|", 1)
            except ValueError:
                raise ParseError(f"cost[{i}] key {key!r}: expected 'u|y'") from None
            parsed[(u, y)] = _frac(val, f"cost[{i}][{key!r}]")
        for u in actions[i]:
            for y in env_values:
                if (u, y) not in parsed:
                    raise ParseError(f"cost[{i}]: missing entry for action {u!r}, y {y!r}")
        cost.append(parsed)

    return FiniteGameSpec(
        n_dm=n_dm,
        actions=tuple(actions),
        env_values=env_values,
        xi_values=xi_values,
        xi_pmf=pmf,
        outcome=outcome,
        cost=tuple(cost),
    )


# --------------------------------------------------------------------------
# entry points


def load_spec(doc: Mapping):
    """Load a scenario document (parsed JSON object) into a validated spec."""
    if not isinstance(doc, Mapping):
        raise ParseError("scenario document must be a JSON object")
    kind = doc.get("kind")
    if kind == "lq":
        return _load_lq(doc)
    if kind == "finite":
        return _load_finite(doc)
    raise ParseError(f"kind: expected 'lq' or 'finite', got {kind!r}")


def loads_spec(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return load_spec(doc)


def load_spec_file(path):
    with open(path, "r", encoding="utf-8") as f:
        return loads_spec(f.read())


def _dump_matrix(m) -> list:
    if isinstance(m, tuple):
        return [_dump_matrix(x) for x in m]
    return [[_fmt(v) for v in row] for row in np.asarray(m)]


def _dump_vector(v) -> list:
    return [_fmt(x) for x in np.asarray(v)]


def dump_spec(spec) -> dict:
    """Serialize a spec back to the scenario-document object model."""
    if isinstance(spec, LqGameSpec):
        doc = {
            "kind": "lq",
            "n_dm": str(spec.n_dm),
            "horizon": INFINITE if spec.horizon is None else str(spec.horizon),
            "per_dm": [
                {
                    "A": _dump_matrix(dm.A),
                    "B": _dump_matrix(dm.B),
                    "C": _dump_matrix(dm.C),
                    "Q": _dump_matrix(dm.Q),
                    "Q_T": _dump_matrix(dm.Q_T),
                    "R": _dump_matrix(dm.R),
                    "K": _dump_matrix(dm.K),
                    "L": _dump_matrix(dm.L),
                    "beta": _fmt(dm.beta),
                }
                for dm in spec.per_dm
            ],
            "env": {
                "A0": _dump_matrix(spec.env.A0),
                "B1": [_dump_matrix(m) for m in spec.env.B1],
                "B2": [_dump_matrix(m) for m in spec.env.B2],
                "D": _dump_matrix(spec.env.D),
                "E1": [_dump_matrix(m) for m in spec.env.E1],
                "E2": [_dump_matrix(m) for m in spec.env.E2],
            },
            "noise": {
                "x0": {"mean": _dump_vector(spec.noise.x0_mean), "cov": _dump_matrix(spec.noise.x0_cov)},
                "w0": {"mean": _dump_vector(spec.noise.w0_mean), "cov": _dump_matrix(spec.noise.w0_cov)},
                "w": [
                    {"mean": _dump_vector(m), "cov": _dump_matrix(c)}
                    for m, c in zip(spec.noise.w_means, spec.noise.w_covs)
                ],
                "xi": {"mean": _dump_vector(spec.noise.xi_mean), "cov": _dump_matrix(spec.noise.xi_cov)},
                "y_prev": {
                    "mean": _dump_vector(spec.noise.yprev_mean),
                    "cov": _dump_matrix(spec.noise.yprev_cov),
                    "cov_with_x0": _dump_matrix(spec.noise.yprev_x0_cov),
                },
            },
        }
        return doc
    if isinstance(spec, FiniteGameSpec):
        return {
            "kind": "finite",
            "n_dm": str(spec.n_dm),
            "actions": [list(a) for a in spec.actions],
            "env_values": list(spec.env_values),
            "disturbance": {"values": list(spec.xi_values), "pmf": [str(q) for q in spec.xi_pmf]},
            "outcome": {f"{','.join(joint)}|{k}": y for (joint, k), y in sorted(spec.outcome.items())},
            "cost": [
                {f"{u}|{y}": str(c) for (u, y), c in sorted(table.items())} for table in spec.cost
            ],
        }
    raise TypeError(f"not a spec: {type(spec)!r}")


def dumps_spec(spec, indent: int = 2) -> str:
    return json.dumps(dump_spec(spec), indent=indent, sort_keys=True)


# --------------------------------------------------------------------------
# validation report


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def validate_lq_spec(spec: LqGameSpec) -> ValidationReport:
    """Check every model condition and report pass/fail per condition.

    Nothing is raised; callers that need a hard gate inspect ``passed``.
    """
    checks: list[CheckResult] = []

    def add(name, ok, detail=""):
        checks.append(CheckResult(name, bool(ok), detail))

    for i, dm in enumerate(spec.per_dm, start=1):
        for t in _stages(spec):
            stage = f"[t={t}]" if spec.horizon is not None and isinstance(dm.Q, tuple) else ""
            q, r = at(dm.Q, t), at(dm.R, t)
            add(f"dm{i}.Q{stage} symmetric pd", is_symmetric(q) and min_eig_sym(q) > 0,
                f"min eig {min_eig_sym(q):.6g}")
            add(f"dm{i}.R{stage} symmetric pd", is_symmetric(r) and min_eig_sym(r) > 0,
                f"min eig {min_eig_sym(r):.6g}")
            if not isinstance(dm.Q, tuple):
                break
        if spec.horizon is not None:
            add(f"dm{i}.Q_T symmetric pd", is_symmetric(dm.Q_T) and min_eig_sym(dm.Q_T) > 0,
                f"min eig {min_eig_sym(dm.Q_T):.6g}")
        if spec.horizon is None:
            add(f"dm{i}.beta in [0,1)", 0.0 <= dm.beta < 1.0, f"beta={dm.beta}")
        else:
            add(f"dm{i}.beta in [0,1]", 0.0 <= dm.beta <= 1.0, f"beta={dm.beta}")

    for name, c in [
        ("noise.x0.cov", spec.noise.x0_cov),
        ("noise.w0.cov", spec.noise.w0_cov),
        ("noise.xi.cov", spec.noise.xi_cov),
        ("noise.y_prev.cov", spec.noise.yprev_cov),
    ] + [(f"noise.w[{i}].cov", c) for i, c in enumerate(spec.noise.w_covs)]:
        add(f"{name} psd", is_symmetric(c) and min_eig_sym(c) >= -1e-10,
            f"min eig {min_eig_sym(c):.6g}")

    # the joint (y_prev, X0) block must itself be a valid covariance
    joint = np.block(
        [
            [spec.noise.yprev_cov, spec.noise.yprev_x0_cov],
            [spec.noise.yprev_x0_cov.T, spec.noise.x0_cov],
        ]
    )
    add("joint (y_prev, X0) covariance psd", min_eig_sym(joint) >= -1e-10,
        f"min eig {min_eig_sym(joint):.6g}")

    if spec.is_infinite:
        rho = spectral_radius(spec.env.A0)
        add("A0 stable", rho < 1.0, f"spectral radius {rho:.6g}")
        for i, dm in enumerate(spec.per_dm, start=1):
            ok = pbh_stabilizable(at(dm.A, 0), at(dm.B, 0))
            add(f"(A{i}, B{i}) stabilizable", ok)

    return ValidationReport(tuple(checks))
