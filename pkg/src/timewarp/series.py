"""Core sequence types and the vector-space operators defined on them.

A :class:`TimeSeries` is an ordered list of samples, each a real value
vector paired with a strictly increasing timestamp.  The empty series is a
valid member of the universe.  On the subset of equal-length series sharing
one timestamp grid, :func:`add` and :func:`scale` give the usual
vector-space structure, which the time-warp inner products rely on.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    LengthMismatchError,
    TimestampMismatchError,
)


class Sample(NamedTuple):
    """One observation: a value vector and its timestamp."""

    value: tuple
    timestamp: float


class TimeSeries:
    """Immutable sequence of vector-valued samples with increasing timestamps.

    Parameters
    ----------
    values : array-like
        Either shape ``(n, k)`` or a flat length-``n`` sequence (treated as
        ``k=1``).
    timestamps : array-like, optional
        Strictly increasing reals.  Defaults to ``1..n``, the convention
        used for datasets that carry no explicit time axis.
    """

    __slots__ = ("_values", "_timestamps")

    def __init__(self, values, timestamps=None):
        v = np.asarray(values, dtype=np.float64)
        if v.ndim == 1:
            v = v.reshape(-1, 1)
        elif v.ndim != 2:
            raise DimensionMismatchError(f"values must be 1-D or 2-D, got ndim={v.ndim}")
        if v.shape[0] > 0 and v.shape[1] < 1:
            raise DimensionMismatchError("sample value dimension must be >= 1")
        if timestamps is None:
            t = np.arange(1.0, v.shape[0] + 1.0)
        else:
            t = np.asarray(timestamps, dtype=np.float64)
        if t.shape != (v.shape[0],):
            raise LengthMismatchError(
                f"{v.shape[0]} samples but {t.shape[0] if t.ndim == 1 else '?'} timestamps"
            )
        if v.shape[0] > 1 and not np.all(np.diff(t) > 0):
            raise TimestampMismatchError("timestamps must strictly increase")
        v.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "_values", v)
        object.__setattr__(self, "_timestamps", t)

    @property
    def values(self) -> np.ndarray:
        """Read-only ``(n, k)`` value array."""
        return self._values

    @property
    def timestamps(self) -> np.ndarray:
        """Read-only ``(n,)`` timestamp array."""
        return self._timestamps

    @property
    def dim(self) -> int:
        return self._values.shape[1]

    @property
    def samples(self) -> tuple:
        return tuple(
            Sample(tuple(v), float(t)) for v, t in zip(self._values, self._timestamps)
        )

    def __len__(self) -> int:
        return self._values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return (
            self._values.shape == other._values.shape
            and np.array_equal(self._values, other._values)
            and np.array_equal(self._timestamps, other._timestamps)
        )

    def __hash__(self):
        return hash((self._values.tobytes(), self._timestamps.tobytes()))

    def __repr__(self) -> str:
        if len(self) == 0:
            return "TimeSeries(empty)"
        return f"TimeSeries(n={len(self)}, dim={self.dim})"


#: The empty series.
EMPTY = TimeSeries(np.empty((0, 1)))


class SymbolSequence:
    """Ordered tokens from a finite alphabet, compared by equality only."""

    __slots__ = ("_symbols",)

    def __init__(self, symbols: Iterable):
        if isinstance(symbols, str):
            self._symbols = tuple(symbols)
        else:
            self._symbols = tuple(symbols)

    @property
    def symbols(self) -> tuple:
        return self._symbols

    def __len__(self) -> int:
        return len(self._symbols)

    def __getitem__(self, i):
        return self._symbols[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, SymbolSequence):
            return self._symbols == other._symbols
        return NotImplemented

    def __hash__(self):
        return hash(self._symbols)

    def __repr__(self) -> str:
        return f"SymbolSequence({''.join(map(str, self._symbols))!r})"


def scale(lam: float, a: TimeSeries) -> TimeSeries:
    """Multiply every sample value by ``lam``, keeping the timestamps."""
    return TimeSeries(lam * a.values, a.timestamps)


def add(a: TimeSeries, b: TimeSeries) -> TimeSeries:
    """Element-wise sum of two series on the same timestamp grid."""
    if len(a) != len(b):
        raise LengthMismatchError(f"|a|={len(a)} but |b|={len(b)}")
    if not np.array_equal(a.timestamps, b.timestamps):
        raise TimestampMismatchError("series timestamps differ")
    if len(a) > 0 and a.dim != b.dim:
        raise DimensionMismatchError(f"dim {a.dim} vs {b.dim}")
    return TimeSeries(a.values + b.values, a.timestamps)


def lp_norm_dist(x, y, p: int = 1) -> float:
    """``||x - y||_p`` for ``p`` in {1, 2}."""
    xv = np.asarray(x, dtype=np.float64).ravel()
    yv = np.asarray(y, dtype=np.float64).ravel()
    if xv.shape != yv.shape:
        raise DimensionMismatchError(f"vector dims {xv.shape[0]} vs {yv.shape[0]}")
    if p == 1:
        return float(np.sum(np.abs(xv - yv)))
    if p == 2:
        return float(math.sqrt(np.sum((xv - yv) ** 2)))
    raise ValueError(f"norm order must be 1 or 2, got {p}")


def as_series(obj, timestamps=None) -> TimeSeries:
    """Coerce array-likes (or a digit string) to a :class:`TimeSeries`."""
    if isinstance(obj, TimeSeries):
        return obj
    if isinstance(obj, str):
        return TimeSeries([float(c) for c in obj], timestamps)
    return TimeSeries(obj, timestamps)
