"""Seeded random instance generators for both problem families.

Reproducibility contract: the instance is fully determined by (seed, config).
Random-stream consumption order is fixed and documented per generator so
within-implementation determinism holds across runs; bit-identity across
other implementations is not promised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ConfigError
from .graphs import ConflictGraph
from .hospital import HospitalInstance, make_instance


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int
    num_departments: int = 5
    compat_min: int = 1
    compat_max: int = 3
    density: float = 0.3

    def __post_init__(self):
        if self.n < 0:
            raise ConfigError("n must be nonnegative")
        if self.num_departments < 1:
            raise ConfigError("num_departments must be positive")
        if not 1 <= self.compat_min <= self.compat_max <= self.num_departments:
            raise ConfigError(
                "need 1 <= compat_min <= compat_max <= num_departments, got "
                f"{self.compat_min}..{self.compat_max} of {self.num_departments}"
            )
        if not 0.0 <= self.density <= 1.0:
            raise ConfigError(f"density must be in [0, 1], got {self.density}")


def department_names(count: int) -> list[str]:
    return [f"d{i + 1}" for i in range(count)]


def gen_hospital(cfg: GenConfig) -> HospitalInstance:
    """Random instance with n patients and n beds.

    Bed departments are a shuffled balanced multiset: counts per department
    differ by at most one, and each bed's department is marginally uniform.
    Patient i's compatible set always contains the department of bed i (a
    uniform department, since bed departments are shuffled), topped up with
    distinct extra departments to the drawn size. This makes the identity
    assignment feasible, so every generated instance admits a perfect
    matching; fully independent draws starve random departments often
    enough that small instances lose theirs.

    Stream order: beds first (one shuffle of the department multiset), then
    patients (one compatible-set-size draw, then a without-replacement
    sample of the extra departments each).
    """
    rng = random.Random(cfg.seed)
    depts = department_names(cfg.num_departments)
    bed_depts = [depts[j % cfg.num_departments] for j in range(cfg.n)]
    rng.shuffle(bed_depts)
    beds = [(f"b{j + 1}", bed_depts[j]) for j in range(cfg.n)]
    patients = []
    for i in range(cfg.n):
        size = rng.randint(cfg.compat_min, cfg.compat_max)
        home = bed_depts[i]
        extras = rng.sample([d for d in depts if d != home], size - 1)
        patients.append((f"p{i + 1}", [home, *extras]))
    return make_instance(depts, patients, beds)


def gen_conflict_graph(cfg: GenConfig) -> ConflictGraph:
    """Erdos-Renyi G(n, p) conflict graph with p = density.

    Stream order: one uniform draw per unordered pair, pairs in
    lexicographic order (0,1), (0,2), ..., (n-2, n-1).
    """
    rng = random.Random(cfg.seed)
    g = ConflictGraph(cfg.n)
    rand = rng.random
    for i in range(cfg.n):
        for j in range(i + 1, cfg.n):
            if rand() < cfg.density:
                g.add_conflict(i, j)
    return g
