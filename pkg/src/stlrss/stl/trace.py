"""Uniformly sampled, finite, vector-valued traces and their CSV format.

CSV layout: header ``t,<chan1>,<chan2>,...`` followed by one row per
sample.  The ``t`` column must be strictly increasing and uniform to a
relative tolerance of 1e-9.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np


class TraceError(ValueError):
    pass


class Trace:
    """Immutable multi-channel signal sampled every ``dt`` seconds."""

    __slots__ = ("dt", "_channels", "_n")

    def __init__(self, dt: float, channels: Mapping[str, Iterable[float]]):
        if not (dt > 0 and math.isfinite(dt)):
            raise TraceError(f"dt must be positive and finite, got {dt}")
        if not channels:
            raise TraceError("trace needs at least one channel")
        data: dict[str, np.ndarray] = {}
        n = None
        for name, values in channels.items():
            arr = np.asarray(values, dtype=np.float64)
            arr.setflags(write=False)
            if arr.ndim != 1:
                raise TraceError(f"channel {name!r} is not one-dimensional")
            if n is None:
                n = arr.shape[0]
            elif arr.shape[0] != n:
                raise TraceError(f"channel {name!r} has {arr.shape[0]} samples, expected {n}")
            if not np.all(np.isfinite(arr)):
                raise TraceError(f"channel {name!r} contains non-finite samples")
            data[name] = arr
        if n is None or n < 1:
            raise TraceError("trace needs at least one sample")
        self.dt = float(dt)
        self._channels = data
        self._n = int(n)

    def __len__(self) -> int:
        return self._n

    @property
    def n_samples(self) -> int:
        return self._n

    @property
    def channel_names(self) -> tuple[str, ...]:
        return tuple(self._channels)

    def channel(self, name: str) -> np.ndarray:
        try:
            return self._channels[name]
        except KeyError:
            raise TraceError(f"trace has no channel {name!r} (channels: {', '.join(self._channels)})") from None

    def __contains__(self, name: str) -> bool:
        return name in self._channels

    def times(self) -> np.ndarray:
        return np.arange(self._n) * self.dt

    def with_channels(self, extra: Mapping[str, Iterable[float]]) -> "Trace":
        merged: dict[str, Iterable[float]] = dict(self._channels)
        merged.update(extra)
        return Trace(self.dt, merged)


def write_trace_csv(trace: Trace, path: str | Path) -> None:
    path = Path(path)
    names = trace.channel_names
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", *names])
        cols = [trace.channel(n) for n in names]
        for i in range(trace.n_samples):
            writer.writerow([repr(i * trace.dt), *(repr(float(c[i])) for c in cols)])


def read_trace_csv(path: str | Path) -> Trace:
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise TraceError(f"{path}: empty trace file") from None
        if not header or header[0].strip() != "t":
            raise TraceError(f"{path}: first column must be 't', got {header[:1]}")
        names = [h.strip() for h in header[1:]]
        if not names:
            raise TraceError(f"{path}: no signal channels in header")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise TraceError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise TraceError(f"{path}:{lineno}: {exc}") from None
    if len(rows) < 2:
        raise TraceError(f"{path}: need at least two samples to infer dt")
    data = np.asarray(rows, dtype=np.float64)
    t = data[:, 0]
    if not np.all(np.diff(t) > 0):
        raise TraceError(f"{path}: time column is not strictly increasing")
    dt = t[1] - t[0]
    expected = t[0] + np.arange(len(t)) * dt
    tol = 1e-9 * max(1.0, abs(float(t[-1])))
    worst = float(np.max(np.abs(t - expected)))
    if worst > tol:
        raise TraceError(f"{path}: non-uniform sampling (max deviation {worst:g} s exceeds tolerance {tol:g} s)")
    return Trace(float(dt), {name: data[:, j + 1] for j, name in enumerate(names)})
