"""The ``.mmof`` dataset container.

Layout (all integers little-endian):

    magic   b"MMOF"
    version u16
    hlen    u32
    header  JSON (hlen bytes)
    blocks  episode_count times: u32 block length + episode block

The header carries schema (mode, action spec, obs dim), provenance (recipe
name, generator config hash), the behavior win rate, the episode count and a
sha256 over the episode blocks. The writer spools blocks to a temp file and
assembles the final artifact on close, so the header is always complete and
files are byte-reproducible for identical inputs.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field

from ..env import ActionSpec, Mode, item_names as reward_item_names
from ..util import sha256_hex
from .records import EpisodeRecord

MAGIC = b"MMOF"
FORMAT_VERSION = 1
DRAW_CONVENTION = "draws_count_0.5"


class DatasetError(Exception):
    pass


class DatasetFormatError(DatasetError):
    pass


class VersionMismatchError(DatasetFormatError):
    def __init__(self, found: int):
        self.found = found
        super().__init__(f"unsupported dataset version {found}, "
                         f"expected {FORMAT_VERSION}")


class TruncatedDatasetError(DatasetFormatError):
    def __init__(self, episode_index: int):
        self.episode_index = episode_index
        super().__init__(f"file truncated inside episode {episode_index}")


class CountMismatchError(DatasetFormatError):
    def __init__(self, declared: int, found: int):
        self.declared, self.found = declared, found
        super().__init__(f"header declares {declared} episodes, body has {found}")


class HashMismatchError(DatasetFormatError):
    def __init__(self):
        super().__init__("episode body does not match header body_sha256")


class SchemaMismatchError(DatasetError):
    pass


@dataclass
class DatasetHeader:
    mode: Mode
    action_spec: ActionSpec
    obs_dim: int
    n_heroes_controlled: int
    recipe: str
    config_hash: str
    episode_count: int = 0
    behavior_win_rate: float | None = None
    body_sha256: str = ""
    reward_items: tuple = ()
    format_version: int = FORMAT_VERSION
    draw_convention: str = DRAW_CONVENTION
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.reward_items:
            self.reward_items = reward_item_names(self.mode)

    def to_json(self) -> str:
        d = {
            "format_version": self.format_version,
            "mode": self.mode.value,
            "action_spec": self.action_spec.to_json_dict(),
            "obs_dim": self.obs_dim,
            "n_heroes_controlled": self.n_heroes_controlled,
            "recipe": self.recipe,
            "config_hash": self.config_hash,
            "episode_count": self.episode_count,
            "behavior_win_rate": self.behavior_win_rate,
            "body_sha256": self.body_sha256,
            "reward_items": list(self.reward_items),
            "draw_convention": self.draw_convention,
            "extra": self.extra,
        }
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DatasetHeader":
        d = json.loads(text)
        return cls(mode=Mode(d["mode"]),
                   action_spec=ActionSpec.from_json_dict(d["action_spec"]),
                   obs_dim=int(d["obs_dim"]),
                   n_heroes_controlled=int(d["n_heroes_controlled"]),
                   recipe=d["recipe"],
                   config_hash=d["config_hash"],
                   episode_count=int(d["episode_count"]),
                   behavior_win_rate=d["behavior_win_rate"],
                   body_sha256=d["body_sha256"],
                   reward_items=tuple(d["reward_items"]),
                   format_version=int(d["format_version"]),
                   draw_convention=d["draw_convention"],
                   extra=d.get("extra", {}))

    def schema_key(self) -> tuple:
        return (self.mode, self.action_spec.head_names,
                self.action_spec.head_sizes, self.obs_dim,
                self.n_heroes_controlled, self.reward_items)


class DatasetWriter:
    """Single-owner writer; call add_episode() then close()."""

    def __init__(self, path, header: DatasetHeader):
        self.path = str(path)
        self.header = header
        self._tmp_path = self.path + ".tmp"
        self._tmp = open(self._tmp_path, "wb")
        self._sha = hashlib.sha256()
        self._count = 0
        self._win_points = 0.0

    def add_episode(self, episode: EpisodeRecord):
        block = episode.encode()
        prefix = len(block).to_bytes(4, "little")
        self._tmp.write(prefix)
        self._tmp.write(block)
        self._sha.update(prefix)
        self._sha.update(block)
        self._count += 1
        w = episode.winner
        self._win_points += 0.5 if w is None else (1.0 if w == 0 else 0.0)

    def close(self) -> DatasetHeader:
        self._tmp.close()
        self.header.episode_count = self._count
        self.header.body_sha256 = self._sha.hexdigest()
        if self.header.behavior_win_rate is None and self._count:
            self.header.behavior_win_rate = round(self._win_points / self._count, 6)
        hjson = self.header.to_json().encode("utf-8")
        with open(self.path, "wb") as f:
            f.write(MAGIC)
            f.write(FORMAT_VERSION.to_bytes(2, "little"))
            f.write(len(hjson).to_bytes(4, "little"))
            f.write(hjson)
            with open(self._tmp_path, "rb") as tmp:
                while chunk := tmp.read(1 << 20):
                    f.write(chunk)
        os.remove(self._tmp_path)
        return self.header

    def abort(self):
        self._tmp.close()
        if os.path.exists(self._tmp_path):
            os.remove(self._tmp_path)


class DatasetFile:
    """Random-access reader; episodes stream lazily from disk."""

    def __init__(self, path):
        self.path = str(path)
        if not os.path.exists(self.path):
            raise FileNotFoundError(self.path)
        self._f = open(self.path, "rb")
        magic = self._f.read(4)
        if magic != MAGIC:
            raise DatasetFormatError(f"{self.path}: not a dataset file")
        version = int.from_bytes(self._f.read(2), "little")
        if version != FORMAT_VERSION:
            raise VersionMismatchError(version)
        hlen = int.from_bytes(self._f.read(4), "little")
        self.header = DatasetHeader.from_json(self._f.read(hlen).decode("utf-8"))
        self._first_block = self._f.tell()
        self._offsets = None

    def close(self):
        self._f.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def __len__(self):
        return self.header.episode_count

    def _index(self):
        if self._offsets is not None:
            return self._offsets
        offsets = []
        pos = self._first_block
        size = os.path.getsize(self.path)
        for i in range(self.header.episode_count):
            if pos + 4 > size:
                if pos == size:
                    raise CountMismatchError(self.header.episode_count, i)
                raise TruncatedDatasetError(i)
            self._f.seek(pos)
            blen = int.from_bytes(self._f.read(4), "little")
            if pos + 4 + blen > size:
                raise TruncatedDatasetError(i)
            offsets.append((pos, blen))
            pos = pos + 4 + blen
        self._offsets = offsets
        return offsets

    def _read_block(self, i: int) -> bytes:
        pos, blen = self._index()[i]
        self._f.seek(pos + 4)
        return self._f.read(blen)

    def raw_blocks(self):
        """(length-prefix, payload) pairs in order; used for hashing/mixing."""
        for i in range(len(self)):
            pos, blen = self._index()[i]
            yield blen.to_bytes(4, "little"), self._read_block(i)

    def episode(self, i: int) -> EpisodeRecord:
        return EpisodeRecord.decode(self._read_block(i), self.header.action_spec,
                                    self.header.obs_dim,
                                    self.header.n_heroes_controlled,
                                    self.header.reward_items)

    def __iter__(self):
        for i in range(len(self)):
            yield self.episode(i)

    def verify_body_hash(self):
        sha = hashlib.sha256()
        for prefix, payload in self.raw_blocks():
            sha.update(prefix)
            sha.update(payload)
        if sha.hexdigest() != self.header.body_sha256:
            raise HashMismatchError()
