"""Dataset-level operations: write/read, equal-thirds mixing, statistics and
the full-scan action/mask validator."""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict

import numpy as np

from ..util import config_hash
from .container import (DatasetFile, DatasetHeader, DatasetWriter,
                        SchemaMismatchError)


def write_dataset(path, header: DatasetHeader, episodes) -> DatasetHeader:
    w = DatasetWriter(path, header)
    try:
        for ep in episodes:
            w.add_episode(ep)
    except BaseException:
        w.abort()
        raise
    return w.close()


def read_dataset(path):
    """Returns (header, streaming episode iterator)."""
    f = DatasetFile(path)
    return f.header, iter(f)


@dataclass
class DatasetStats:
    episode_count: int
    returns: list          # per-episode sum of zero-sum rewards, controlled team
    mean: float
    std: float
    quartiles: tuple       # (q25, median, q75)
    min: float
    max: float
    win_rate: float
    total_steps: int

    def to_json(self) -> str:
        d = asdict(self)
        d["returns"] = [round(float(r), 6) for r in self.returns]
        return json.dumps(d, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["episode,return"]
        lines += [f"{i},{r:.6f}" for i, r in enumerate(self.returns)]
        return "\n".join(lines) + "\n"


def dataset_stats(path) -> DatasetStats:
    """One streaming pass; the per-episode return is R = sum_t r_t (gamma=1)
    of zero-sum rewards summed over the controlled heroes."""
    returns, steps, win_points = [], 0, 0.0
    with DatasetFile(path) as f:
        for ep in f:
            returns.append(float(np.sum(ep.zero_sum, dtype=np.float64)))
            steps += ep.length
            w = ep.winner
            win_points += 0.5 if w is None else (1.0 if w == 0 else 0.0)
    arr = np.array(returns, dtype=np.float64)
    q25, q50, q75 = np.percentile(arr, [25, 50, 75])
    return DatasetStats(
        episode_count=len(returns), returns=returns,
        mean=float(arr.mean()), std=float(arr.std()),
        quartiles=(float(q25), float(q50), float(q75)),
        min=float(arr.min()), max=float(arr.max()),
        win_rate=win_points / len(returns) if returns else 0.0,
        total_steps=steps)


def mix_datasets(inputs, out_path, seed: int = 0) -> DatasetHeader:
    """Equal mixture: floor(min common count) episodes from every input,
    interleaved by a seeded shuffle. Deterministic in (inputs, seed)."""
    files = [DatasetFile(p) for p in inputs]
    try:
        key = files[0].header.schema_key()
        for f in files[1:]:
            if f.header.schema_key() != key:
                raise SchemaMismatchError(
                    f"{f.path}: schema differs from {files[0].path}")
        per_input = min(len(f) for f in files)
        pairs = [(i, j) for i in range(len(files)) for j in range(per_input)]
        order = np.random.Generator(np.random.PCG64(seed)).permutation(len(pairs))
        h0 = files[0].header
        header = DatasetHeader(
            mode=h0.mode, action_spec=h0.action_spec, obs_dim=h0.obs_dim,
            n_heroes_controlled=h0.n_heroes_controlled, recipe="mixed",
            config_hash=config_hash({
                "op": "mix", "seed": seed,
                "inputs": [f.header.config_hash for f in files],
                "bodies": [f.header.body_sha256 for f in files],
            }),
            extra={"sources": [f.header.recipe for f in files],
                   "episodes_per_source": per_input, "mix_seed": seed})
        w = DatasetWriter(out_path, header)
        try:
            for k in order:
                i, j = pairs[int(k)]
                w.add_episode(files[i].episode(j))
        except BaseException:
            w.abort()
            raise
        return w.close()
    finally:
        for f in files:
            f.close()


@dataclass
class ValidationReport:
    episode_count: int
    frames_checked: int
    illegal_actions: int
    body_hash_ok: bool

    @property
    def ok(self) -> bool:
        return self.illegal_actions == 0 and self.body_hash_ok


def validate_dataset(path) -> ValidationReport:
    """Full scan: body hash, episode count, and masks admit every action."""
    illegal = frames = count = 0
    with DatasetFile(path) as f:
        f.verify_body_hash()
        for ep in f:
            count += 1
            for k, size in enumerate(ep.spec.head_sizes):
                a = ep.actions[:, :, k].astype(np.int64)
                in_range = a < size
                picked = np.take_along_axis(
                    ep.masks[k], np.minimum(a, size - 1)[:, :, None],
                    axis=2).squeeze(2)
                illegal += int(np.size(a) - np.count_nonzero(picked & in_range))
            frames += ep.length * ep.n_heroes
    return ValidationReport(episode_count=count, frames_checked=frames,
                            illegal_actions=illegal, body_hash_ok=True)
