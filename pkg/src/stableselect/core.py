"""Shared domain types: datasets, group partitions, selection sets and records.

Selection always operates on *group* indices.  Ungrouped analysis is the
trivial partition where every feature is its own group, so both code paths
share one representation.

Selection frequencies are stored as integer counts out of ``m_runs`` rather
than as floats, and thresholds are compared through exact rational
arithmetic (`selection_count_threshold`).  This makes the rule
"frequency >= eta" immune to binary-float boundary artifacts such as
0.4999... vs 0.5.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .errors import ConfigError, InvalidDataError

RationalLike = Union[Fraction, float, int, str]


def as_fraction(x: RationalLike) -> Fraction:
    """Convert a user-supplied number to an exact Fraction.

    Floats are interpreted through their shortest decimal repr (so 0.81
    means 81/100, not the binary double closest to 0.81).  Strings are
    parsed as decimals.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ConfigError(f"non-finite value {x!r} is not a valid threshold")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x)
    raise ConfigError(f"cannot interpret {x!r} as a rational number")


def selection_count_threshold(m_runs: int, eta: RationalLike) -> int:
    """Smallest integer count c such that c / m_runs >= eta.

    This is the exact discrete form of the aggregation threshold: a group
    with selection count c is in the final set iff c >= this value.  At
    integral ``m_runs * eta`` the boundary count itself qualifies.
    """
    if m_runs < 1:
        raise ConfigError(f"m_runs must be >= 1, got {m_runs}")
    eta_f = as_fraction(eta)
    if not (0 < eta_f <= 1):
        raise ConfigError(f"eta must lie in (0, 1], got {eta}")
    return int(math.ceil(eta_f * m_runs))


@dataclass(frozen=True)
class Dataset:
    """An n-by-p covariate matrix with a length-n response vector.

    Attributes
    ----------
    x : ndarray of shape (n, p)
        Covariates; must be finite.
    y : ndarray of shape (n,)
        Response, real-valued or binary {0, 1}.
    feature_names : tuple of str, optional
        Length-p column labels.
    """

    x: np.ndarray
    y: np.ndarray
    feature_names: Optional[tuple] = None

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.ndim != 2:
            raise InvalidDataError(f"x must be 2-D, got shape {x.shape}")
        if y.ndim != 1:
            raise InvalidDataError(f"y must be 1-D, got shape {y.shape}")
        n, p = x.shape
        if n < 2:
            raise InvalidDataError(f"need at least 2 samples, got {n}")
        if p < 1:
            raise InvalidDataError("need at least 1 feature")
        if y.shape[0] != n:
            raise InvalidDataError(
                f"y has length {y.shape[0]} but x has {n} rows"
            )
        if not np.all(np.isfinite(x)):
            raise InvalidDataError("x contains missing or non-finite values")
        if not np.all(np.isfinite(y)):
            raise InvalidDataError("y contains missing or non-finite values")
        if self.feature_names is not None:
            names = tuple(str(s) for s in self.feature_names)
            if len(names) != p:
                raise InvalidDataError(
                    f"{len(names)} feature names for {p} features"
                )
            object.__setattr__(self, "feature_names", names)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def n_samples(self) -> int:
        return self.x.shape[0]

    @property
    def n_features(self) -> int:
        return self.x.shape[1]


@dataclass(frozen=True)
class GroupPartition:
    """An ordered partition of {0..p-1} into contiguous runs of columns."""

    groups: tuple

    def __post_init__(self):
        groups = tuple(tuple(int(i) for i in g) for g in self.groups)
        if not groups:
            raise InvalidDataError("partition must contain at least one group")
        seen = []
        for g in groups:
            if not g:
                raise InvalidDataError("groups must be nonempty")
            if list(g) != list(range(g[0], g[-1] + 1)):
                raise InvalidDataError(f"group {g} is not a contiguous run")
            seen.extend(g)
        p = max(seen) + 1
        if sorted(seen) != list(range(p)):
            raise InvalidDataError("groups must be disjoint and cover 0..p-1")
        starts = [g[0] for g in groups]
        if starts != sorted(starts):
            raise InvalidDataError("groups must be listed in column order")
        object.__setattr__(self, "groups", groups)

    @property
    def n_features(self) -> int:
        return self.groups[-1][-1] + 1

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    def group_of(self) -> np.ndarray:
        """Length-p array mapping each feature to its group index."""
        out = np.empty(self.n_features, dtype=np.int64)
        for gi, g in enumerate(self.groups):
            out[list(g)] = gi
        return out

    def is_trivial(self) -> bool:
        return all(len(g) == 1 for g in self.groups)


def make_trivial_partition(p: int) -> GroupPartition:
    """Partition with p singleton groups in column order."""
    if p < 1:
        raise InvalidDataError(f"p must be >= 1, got {p}")
    return GroupPartition(tuple((j,) for j in range(p)))


@dataclass(frozen=True)
class SelectionSet:
    """A set of selected group indices (feature indices under the trivial partition)."""

    indices: frozenset

    def __post_init__(self):
        object.__setattr__(
            self, "indices", frozenset(int(i) for i in self.indices)
        )
        if any(i < 0 for i in self.indices):
            raise InvalidDataError("selection indices must be nonnegative")

    def validate_against(self, n_groups: int) -> None:
        if any(i >= n_groups for i in self.indices):
            raise InvalidDataError(
                f"selection contains an index >= {n_groups} groups"
            )

    def __contains__(self, idx) -> bool:
        return int(idx) in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def sorted(self) -> list:
        return sorted(self.indices)


@dataclass(frozen=True)
class SelectionRecord:
    """The per-run selection sets of an aggregated analysis plus the final set.

    ``counts[j]`` is the exact number of runs that selected group j, so the
    selection frequency of group j is ``counts[j] / m_runs`` and the final
    set is ``{j : counts[j] >= selection_count_threshold(m_runs, eta)}``.
    """

    per_run: tuple
    counts: np.ndarray
    m_runs: int
    eta: Fraction
    final: SelectionSet

    @classmethod
    def from_runs(
        cls,
        per_run: Sequence[SelectionSet],
        n_groups: int,
        eta: RationalLike,
    ) -> "SelectionRecord":
        per_run = tuple(per_run)
        if not per_run:
            raise InvalidDataError("need at least one run")
        m = len(per_run)
        eta_f = as_fraction(eta)
        counts = np.zeros(n_groups, dtype=np.int64)
        for s in per_run:
            s.validate_against(n_groups)
            for j in s.indices:
                counts[j] += 1
        cutoff = selection_count_threshold(m, eta_f)
        final = SelectionSet(frozenset(np.nonzero(counts >= cutoff)[0].tolist()))
        return cls(per_run=per_run, counts=counts, m_runs=m, eta=eta_f, final=final)

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if len(self.per_run) != self.m_runs:
            raise InvalidDataError("per_run length must equal m_runs")
        if np.any(counts < 0) or np.any(counts > self.m_runs):
            raise InvalidDataError("counts must lie in [0, m_runs]")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "eta", as_fraction(self.eta))

    @property
    def n_groups(self) -> int:
        return self.counts.shape[0]

    @property
    def frequencies(self) -> np.ndarray:
        """Selection frequencies as floats (counts stay the source of truth)."""
        return self.counts / float(self.m_runs)

    def threshold_count(self) -> int:
        return selection_count_threshold(self.m_runs, self.eta)


def selection_record_to_csv(record: SelectionRecord, path) -> None:
    """Write one row per group: (group_id, count, M, pi, selected)."""
    cutoff = record.threshold_count()
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["group_id", "count", "M", "pi", "selected"])
        for j in range(record.n_groups):
            c = int(record.counts[j])
            writer.writerow(
                [j, c, record.m_runs, repr(c / record.m_runs), int(c >= cutoff)]
            )


@dataclass(frozen=True)
class ErrorTarget:
    """Requested type-I error guarantee.

    kind "pfer" bounds the expected number of false discoveries by v;
    kind "kfwer" bounds P(at least k false discoveries) by alpha.
    """

    kind: str
    v: float = 0.0
    k: int = 1
    alpha: float = 0.05

    def __post_init__(self):
        if self.kind not in ("pfer", "kfwer"):
            raise ConfigError(f"unknown error-target kind {self.kind!r}")
        if self.v < 0:
            raise ConfigError("v must be nonnegative")
        if self.kind == "kfwer":
            if self.k < 1:
                raise ConfigError("k must be a positive integer")
            if not (0 < self.alpha < 1):
                raise ConfigError("alpha must lie in (0, 1)")


def dataset_from_csv(
    path,
    has_header: bool = True,
    response: Optional[str] = None,
) -> Dataset:
    """Load a Dataset from a CSV file.

    Parameters
    ----------
    path : str or Path
        File with one row per sample.
    has_header : bool
        Whether the first row carries column names.
    response : str, optional
        Name of the response column (requires a header).  When omitted the
        last column is the response.
    """
    with open(path, "r", newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if not rows:
        raise InvalidDataError(f"{path}: empty file")
    names = None
    if has_header:
        names = [c.strip() for c in rows[0]]
        rows = rows[1:]
    if not rows:
        raise InvalidDataError(f"{path}: no data rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InvalidDataError(f"{path}: ragged rows")
    if response is not None:
        if names is None:
            raise InvalidDataError("response column by name requires a header row")
        if response not in names:
            raise InvalidDataError(f"response column {response!r} not in header")
        y_col = names.index(response)
    else:
        y_col = width - 1
    try:
        data = np.array([[float(v) for v in r] for r in rows], dtype=float)
    except ValueError as exc:
        raise InvalidDataError(f"{path}: non-numeric cell ({exc})") from exc
    y = data[:, y_col]
    x = np.delete(data, y_col, axis=1)
    feature_names = None
    if names is not None:
        feature_names = tuple(n for i, n in enumerate(names) if i != y_col)
    return Dataset(x=x, y=y, feature_names=feature_names)
