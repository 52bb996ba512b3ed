"""Synthetic dataset generation for desk-scale testing.

The real mineral-profile dataset is not redistributable, so the test suite
and the CLI `synth` subcommand work from generated data whose shape mirrors
the real files: 12 mineral columns, three classes, honey origins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import (
    N_FEATURES,
    BotanicalOrigin,
    ClassLabel,
    Dataset,
    MineralFeature,
    Sample,
)

# Origins cycled over honey rows when no explicit mix is configured.
_DEFAULT_ORIGIN_MIX = {o: 1.0 for o in BotanicalOrigin if o is not BotanicalOrigin.NONE}


@dataclass
class SynthConfig:
    """Per-class Gaussian feature model with per-feature ND probabilities.

    means/stds/nd_probs are (3, 12) arrays indexed [class, feature]; negative
    draws are clamped to zero so concentrations stay physical.
    """

    n_per_class: tuple[int, int, int]
    means: np.ndarray
    stds: np.ndarray
    nd_probs: np.ndarray
    origin_mix: dict[BotanicalOrigin, float] = field(
        default_factory=lambda: dict(_DEFAULT_ORIGIN_MIX)
    )

    def validate(self) -> None:
        if len(self.n_per_class) != len(ClassLabel):
            raise ValueError("n_per_class must have one count per class")
        if any(n <= 0 for n in self.n_per_class):
            raise ValueError("class counts must be positive")
        shape = (len(ClassLabel), N_FEATURES)
        for name, arr in (("means", self.means), ("stds", self.stds), ("nd_probs", self.nd_probs)):
            if np.asarray(arr).shape != shape:
                raise ValueError(f"{name} must have shape {shape}")
        if np.any(np.asarray(self.stds) < 0):
            raise ValueError("standard deviations must be >= 0")
        nd = np.asarray(self.nd_probs)
        if np.any(nd < 0) or np.any(nd > 1):
            raise ValueError("ND probabilities must lie in [0, 1]")
        if not self.origin_mix or any(w < 0 for w in self.origin_mix.values()):
            raise ValueError("origin_mix must be non-empty with non-negative weights")
        if sum(self.origin_mix.values()) <= 0:
            raise ValueError("origin_mix weights must not all be zero")
        if BotanicalOrigin.NONE in self.origin_mix:
            raise ValueError("origin_mix applies to honey rows only; none is not allowed")


def generate_synthetic(cfg: SynthConfig, seed: int) -> Dataset:
    """Draw a dataset from cfg; bit-identical for a fixed (cfg, seed)."""
    cfg.validate()
    rng = np.random.default_rng(seed)

    origins = sorted(cfg.origin_mix, key=int)
    weights = np.array([cfg.origin_mix[o] for o in origins], dtype=np.float64)
    weights = weights / weights.sum()

    samples = []
    for c in ClassLabel:
        n = cfg.n_per_class[int(c)]
        raw = rng.normal(cfg.means[int(c)], cfg.stds[int(c)], size=(n, N_FEATURES))
        raw = np.maximum(raw, 0.0)
        nd = rng.random((n, N_FEATURES)) < cfg.nd_probs[int(c)]
        if c is ClassLabel.SYRUP:
            row_origins = [BotanicalOrigin.NONE] * n
        else:
            picks = rng.choice(len(origins), size=n, p=weights)
            row_origins = [origins[i] for i in picks]
        for i in range(n):
            values = tuple(
                None if nd[i, j] else float(raw[i, j]) for j in range(N_FEATURES)
            )
            samples.append(
                Sample(
                    id=f"s{int(c)}-{i:04d}",
                    origin=row_origins[i],
                    label=c,
                    values=values,
                )
            )
    return Dataset(tuple(samples))


def separable_config() -> SynthConfig:
    """Three well-separated classes sized like the real dataset (201/45/183).

    Classes sit >= 6 standard deviations apart on K, Na and P, so any
    reasonable classifier should be near-perfect on this preset.
    """
    means = np.full((3, N_FEATURES), 50.0)
    stds = np.full((3, N_FEATURES), 10.0)
    for f in (MineralFeature.K, MineralFeature.NA, MineralFeature.P):
        means[0, f] = 100.0
        means[1, f] = 400.0
        means[2, f] = 700.0
        stds[:, f] = 20.0
    nd_probs = np.zeros((3, N_FEATURES))
    nd_probs[1, MineralFeature.BA] = 0.6  # syrup often below detection on Ba
    nd_probs[2, MineralFeature.BA] = 0.2
    return SynthConfig(n_per_class=(201, 45, 183), means=means, stds=stds, nd_probs=nd_probs)


def planted_config() -> SynthConfig:
    """One informative feature (Ba); every other mineral is class-independent noise."""
    means = np.full((3, N_FEATURES), 50.0)
    stds = np.full((3, N_FEATURES), 10.0)
    means[0, MineralFeature.BA] = 20.0
    means[1, MineralFeature.BA] = 90.0
    means[2, MineralFeature.BA] = 160.0
    stds[:, MineralFeature.BA] = 8.0
    nd_probs = np.zeros((3, N_FEATURES))
    return SynthConfig(n_per_class=(100, 100, 100), means=means, stds=stds, nd_probs=nd_probs)


PRESETS = {
    "separable": separable_config,
    "planted": planted_config,
}


def preset_config(name: str) -> SynthConfig:
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
