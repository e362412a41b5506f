"""Episode driver: wires per-hero controllers to the environment.

A controller maps (observation, masks[, structured view], stream) to one
StructuredAction. Scripted policies set ``needs_view`` and receive the rule
-friendly view; learned policies act from the raw observation vector only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .env import EnvConfig, Environment
from .rng import Stream

_POLICY_STREAM_TAG = 0xAC7


class Controller:
    needs_view = False

    def decide(self, obs, masks, view, stream):
        raise NotImplementedError


@dataclass
class EpisodeOutcome:
    seed: int
    winner: int | None          # team index, None for a timeout draw
    length: int
    hero_gold: dict
    team_gold: dict
    returns: dict               # per-hero sum of zero-sum rewards
    frames: list | None = None

    def win_score(self, team: int = 0) -> float:
        """1 for a win, 0 for a loss, 0.5 for a draw."""
        if self.winner is None:
            return 0.5
        return 1.0 if self.winner == team else 0.0

    @property
    def gain_gold_outcome(self) -> int:
        return self.team_gold[0]

    @property
    def frame_length_outcome(self) -> int:
        return self.length


def play_episode(config: EnvConfig, episode_seed: int, controllers: dict,
                 record_ids=()) -> EpisodeOutcome:
    """Run one full episode; deterministic in (config, episode_seed)."""
    env = Environment(config)
    res = env.reset(episode_seed)
    streams = {hid: Stream(episode_seed, hid, _POLICY_STREAM_TAG)
               for hid in env.hero_ids}
    record_ids = tuple(record_ids)
    frames = [] if record_ids else None
    returns = {hid: 0.0 for hid in env.hero_ids}

    while not res.done:
        actions = {}
        for hid in env.hero_ids:
            ctl = controllers[hid]
            view = env.hero_view(hid) if ctl.needs_view else None
            actions[hid] = ctl.decide(res.observations[hid], res.masks[hid],
                                      view, streams[hid])
        prev = res
        res = env.step(actions)
        for hid in env.hero_ids:
            returns[hid] += res.rewards[hid].zero_sum
        if frames is not None:
            frames.append({
                "obs": {h: prev.observations[h] for h in record_ids},
                "legal": {h: prev.masks[h].legal for h in record_ids},
                "actions": {h: actions[h].head_indices for h in record_ids},
                "rewards": {h: res.rewards[h] for h in record_ids},
                "done": res.done,
            })

    info = res.info
    team_gold = {0: 0, 1: 0}
    for hid, g in info["hero_gold"].items():
        team_gold[int(env.team_of(hid))] += g
    winner = info["winner"]
    return EpisodeOutcome(
        seed=episode_seed,
        winner=int(winner) if winner is not None else None,
        length=info["step"],
        hero_gold=dict(info["hero_gold"]),
        team_gold=team_gold,
        returns=returns,
        frames=frames,
    )


def team_controllers(config: EnvConfig, team_a, team_b=None) -> dict:
    """Assign one controller (or a per-slot list) to each side's heroes."""
    n = config.mode.heroes_per_team
    out = {}

    def assign(policy_or_list, hero_ids):
        if policy_or_list is None:
            return
        if isinstance(policy_or_list, (list, tuple)):
            for hid, p in zip(hero_ids, policy_or_list):
                out[hid] = p
        else:
            for hid in hero_ids:
                out[hid] = policy_or_list

    assign(team_a, list(range(n)))
    assign(team_b, list(range(n, 2 * n)))
    return out
