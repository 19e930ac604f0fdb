"""Dataclass configs for networks, losses, optimization, and experiments."""
from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

VARIANTS = (
    "full",
    "no_refine",
    "uggc_knn",
    "uggc_global",
    "self_attn_encoder",
    "no_uema",
    "self_attn_decoder",
    "cross_attn_decoder",
    "dwconv_decoder",
    "uema_both",
    "uema_encoder_only",
)


@dataclass
class NetworkConfig:
    """Shapes and switches shared by both stages.

    ``channels`` are the per-level widths of the 4-stage encoder; each stage
    halves the spatial resolution of its input, so ``input_size`` must be
    divisible by 16.
    """

    input_size: tuple[int, int] = (256, 256)
    channels: tuple[int, int, int, int] = (64, 256, 512, 1024)
    n_s: int = 5
    n_p: int = 2
    dropout_rate: float = 0.5
    variant: str = "full"
    knn_k: int = 8

    def __post_init__(self):
        h, w = self.input_size
        if h % 16 or w % 16:
            raise ValueError(f"input_size must be divisible by 16, got {self.input_size}")
        if self.n_s < 2:
            raise ValueError(f"n_s must be >= 2, got {self.n_s}")
        if any(a >= b for a, b in zip(self.channels, self.channels[1:])):
            raise ValueError(f"channels must be strictly increasing, got {self.channels}")
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ValueError(f"dropout_rate must be in [0,1), got {self.dropout_rate}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}, expected one of {VARIANTS}")

    def pyramid_shapes(self) -> list[tuple[int, int, int]]:
        """Expected (H, W, C) of each encoder level."""
        h, w = self.input_size
        return [(h >> (k + 1), w >> (k + 1), c) for k, c in enumerate(self.channels)]


@dataclass
class LossWeights:
    """Mixing constants: bce/dice combine the per-mask loss, main/aux weight the heads."""

    bce: float = 0.7
    dice: float = 0.3
    main: float = 1.0
    aux: float = 0.35

    def __post_init__(self):
        if min(self.bce, self.dice, self.main, self.aux) < 0:
            raise ValueError("loss weights must be non-negative")


@dataclass
class OptimSettings:
    lr: float = 1e-4
    batch_size: int = 8
    epochs_stage1: int = 200
    epochs_stage2: int = 200


@dataclass
class ExperimentConfig:
    """One JSON file drives a full run; CLI flags override individual fields.

    ``train_roots`` may list several dataset roots; their train splits are
    merged, which is how union-training protocols are expressed. Test samples
    come from the test splits of ``test_roots`` (defaults to ``train_roots``).
    """

    train_roots: list[str] = field(default_factory=list)
    test_roots: list[str] = field(default_factory=list)
    network: NetworkConfig = field(default_factory=NetworkConfig)
    loss: LossWeights = field(default_factory=LossWeights)
    optim: OptimSettings = field(default_factory=OptimSettings)
    seed: int = 0
    out_dir: str = "runs/default"
    attacks: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.test_roots:
            self.test_roots = list(self.train_roots)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        d = dict(d)
        if "network" in d:
            net = dict(d["network"])
            for key in ("input_size", "channels"):
                if key in net:
                    net[key] = tuple(net[key])
            d["network"] = NetworkConfig(**net)
        if "loss" in d:
            d["loss"] = LossWeights(**d["loss"])
        if "optim" in d:
            d["optim"] = OptimSettings(**d["optim"])
        return cls(**d)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2))

    @classmethod
    def load(cls, path: str | Path) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))


def config_hash(network: NetworkConfig, loss: LossWeights) -> str:
    """Stable digest of the fields that determine model structure."""
    payload = json.dumps(
        {"network": dataclasses.asdict(network), "loss": dataclasses.asdict(loss)},
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def paper_scale() -> NetworkConfig:
    """Full-scale configuration: 256x256 inputs, widths (64, 256, 512, 1024)."""
    return NetworkConfig()


def toy_scale(variant: str = "full", dropout_rate: float = 0.3) -> NetworkConfig:
    """Desk-scale configuration small enough to train on one CPU core."""
    return NetworkConfig(
        input_size=(64, 64),
        channels=(16, 32, 64, 128),
        dropout_rate=dropout_rate,
        variant=variant,
    )
