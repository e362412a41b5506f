"""In-memory episode records and their array encoding.

An EpisodeRecord holds one trajectory for the controlled team: observations,
bit-packable legality masks, action indices, the full reward decomposition and
the done flags, plus a small metadata dict (seed, levels, winner, sub-task
outcome). Frames follow the convention (obs_t, masks_t, a_t, r_t, done_t)
where r_t and done_t result from applying a_t.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..env import ActionSpec


@dataclass
class HeroFrame:
    observation: np.ndarray
    legal: list                  # per-head bool arrays
    action: tuple
    sub_action_active: tuple     # active-head row for the chosen button
    items: dict
    weighted: float
    zero_sum: float


@dataclass
class StepFrame:
    heroes: list                 # HeroFrame per controlled hero
    done: bool


class EpisodeRecord:
    """Arrays are shaped (length, n_heroes, ...); see docs/formats.md."""

    def __init__(self, meta: dict, spec: ActionSpec, obs: np.ndarray,
                 masks: list, actions: np.ndarray, items: np.ndarray,
                 weighted: np.ndarray, zero_sum: np.ndarray, done: np.ndarray,
                 item_names: tuple):
        self.meta = meta
        self.spec = spec
        self.obs = obs                      # (L, H, D) float32
        self.masks = masks                  # list over heads of (L, H, size) bool
        self.actions = actions              # (L, H, n_heads) uint16
        self.items = items                  # (L, H, n_items) float32
        self.weighted = weighted            # (L, H) float32
        self.zero_sum = zero_sum            # (L, H) float32
        self.done = done                    # (L,) uint8
        self.item_names = tuple(item_names)
        if not (len(obs) == len(actions) == len(done) == self.length):
            raise ValueError("inconsistent array lengths")
        if self.length == 0 or not bool(done[-1]):
            raise ValueError("episode must end with done=true")

    @property
    def length(self) -> int:
        return int(self.meta["length"])

    @property
    def n_heroes(self) -> int:
        return self.obs.shape[1]

    @property
    def winner(self):
        return self.meta.get("winner")

    def frame(self, t: int) -> StepFrame:
        heroes = []
        for h in range(self.n_heroes):
            button = int(self.actions[t, h, 0])
            heroes.append(HeroFrame(
                observation=self.obs[t, h],
                legal=[m[t, h] for m in self.masks],
                action=tuple(int(a) for a in self.actions[t, h]),
                sub_action_active=self.spec.active_heads(button),
                items=dict(zip(self.item_names, self.items[t, h].tolist())),
                weighted=float(self.weighted[t, h]),
                zero_sum=float(self.zero_sum[t, h])))
        return StepFrame(heroes=heroes, done=bool(self.done[t]))

    def frames(self):
        for t in range(self.length):
            yield self.frame(t)

    @classmethod
    def from_rollout(cls, outcome, spec: ActionSpec, obs_dim: int,
                     item_names, controlled_ids, extra_meta=None):
        """Assemble a record from rollout frames for the controlled heroes."""
        frames = outcome.frames
        L, H = len(frames), len(controlled_ids)
        obs = np.zeros((L, H, obs_dim), dtype=np.float32)
        masks = [np.zeros((L, H, s), dtype=bool) for s in spec.head_sizes]
        actions = np.zeros((L, H, spec.n_heads), dtype=np.uint16)
        items = np.zeros((L, H, len(item_names)), dtype=np.float32)
        weighted = np.zeros((L, H), dtype=np.float32)
        zero_sum = np.zeros((L, H), dtype=np.float32)
        done = np.zeros(L, dtype=np.uint8)
        for t, fr in enumerate(frames):
            done[t] = fr["done"]
            for j, hid in enumerate(controlled_ids):
                obs[t, j] = fr["obs"][hid]
                for k in range(spec.n_heads):
                    masks[k][t, j] = fr["legal"][hid][k]
                actions[t, j] = fr["actions"][hid]
                rv = fr["rewards"][hid]
                items[t, j] = [rv.items[name] for name in item_names]
                weighted[t, j] = rv.weighted
                zero_sum[t, j] = rv.zero_sum
        meta = {
            "seed": outcome.seed,
            "winner": outcome.winner,
            "length": L,
            # string keys so the metadata survives the JSON round trip
            "team_gold": {str(k): int(v) for k, v in outcome.team_gold.items()},
            "hero_gold": {str(k): int(v) for k, v in outcome.hero_gold.items()},
        }
        if extra_meta:
            meta.update(extra_meta)
        return cls(meta, spec, obs, masks, actions, items, weighted, zero_sum,
                   done, item_names)

    # -- binary codec -------------------------------------------------------
    def encode(self) -> bytes:
        import json
        meta_json = json.dumps(self.meta, sort_keys=True).encode("utf-8")
        parts = [len(meta_json).to_bytes(4, "little"), meta_json]
        mask_bits = np.concatenate([m.reshape(-1) for m in self.masks])
        for arr in (self.obs.astype("<f4"), self.actions.astype("<u2"),
                    np.packbits(mask_bits), self.items.astype("<f4"),
                    self.weighted.astype("<f4"), self.zero_sum.astype("<f4"),
                    self.done.astype("u1")):
            parts.append(arr.tobytes())
        return b"".join(parts)

    @classmethod
    def decode(cls, blob: bytes, spec: ActionSpec, obs_dim: int,
               n_heroes: int, item_names) -> "EpisodeRecord":
        import json
        meta_len = int.from_bytes(blob[:4], "little")
        meta = json.loads(blob[4:4 + meta_len].decode("utf-8"))
        off = 4 + meta_len
        L, H = int(meta["length"]), n_heroes

        def take(count, dtype):
            nonlocal off
            arr = np.frombuffer(blob, dtype=dtype, count=count, offset=off)
            off += arr.nbytes
            return arr

        obs = take(L * H * obs_dim, "<f4").reshape(L, H, obs_dim).copy()
        actions = take(L * H * spec.n_heads, "<u2").reshape(L, H, spec.n_heads).copy()
        total_bits = L * H * sum(spec.head_sizes)
        packed = take((total_bits + 7) // 8, "u1")
        bits = np.unpackbits(packed, count=total_bits).astype(bool)
        masks, pos = [], 0
        for s in spec.head_sizes:
            n = L * H * s
            masks.append(bits[pos:pos + n].reshape(L, H, s).copy())
            pos += n
        items = take(L * H * len(item_names), "<f4").reshape(L, H, -1).copy()
        weighted = take(L * H, "<f4").reshape(L, H).copy()
        zero_sum = take(L * H, "<f4").reshape(L, H).copy()
        done = take(L, "u1").copy()
        return cls(meta, spec, obs, masks, actions, items, weighted, zero_sum,
                   done, tuple(item_names))
