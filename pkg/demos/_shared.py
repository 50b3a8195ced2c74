"""Bits the demo scripts share: model loading with sensible fallbacks,
plus a couple of PNG helpers.

The demos prefer the fully trained default-configuration run if one exists
under runs/ (the test suite and `ctxseg train` both produce it). Without
one they train a small stand-in model on a reduced world, cached under
runs/demo_micro so only the first demo you run pays for it. The micro
model is for showing the moving parts; its masks are rougher than the
full run's.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from ctxseg.engine.config import TrainConfig
from ctxseg.engine.data import SceneSplit
from ctxseg.engine.evaluate import build_prompt_bank
from ctxseg.engine.train import load_model, train_joint
from ctxseg.sampling import PromptBank

REPO = Path(__file__).resolve().parents[1]
MICRO_DIR = REPO / "runs" / "demo_micro"
OUT_ROOT = REPO / "demos" / "out"


def micro_config() -> TrainConfig:
    return TrainConfig(
        steps=1500,
        batch_size_images=2,
        lr=2e-4,
        n_train_scenes=48,
        n_train_granularity=48,
        n_videos=8,
        n_eval_scenes=16,
        n_eval_pairs=16,
        checkpoint_every=500,
        log_every=100,
    )


def demo_model():
    """Best available model and its config.

    Order of preference: the completed default-config training run, then
    the cached micro model, then training the micro model fresh.
    """
    full_cfg = TrainConfig()
    full_dir = REPO / "runs" / full_cfg.run_hash()
    if (full_dir / "summary.json").exists() and (full_dir / "model.npz").exists():
        print(f"using the full training run at runs/{full_cfg.run_hash()}\n")
        model = load_model(full_dir / "model.npz")
        model.eval()
        return model, full_cfg

    cfg = micro_config()
    path = MICRO_DIR / "model.npz"
    if not path.exists():
        print(f"no trained run found; training a small demo model, {cfg.steps} steps (one-time)...")
        train_joint(cfg, MICRO_DIR, echo=False)
        print("done.\n")
    model = load_model(path)
    model.eval()
    return model, cfg


def demo_bank(model, cfg: TrainConfig) -> PromptBank:
    """A prompt bank for the model, reusing a cached one when possible."""
    run_dir = REPO / "runs" / cfg.run_hash()
    cached = run_dir / "bank.npz"
    if cached.exists():
        return PromptBank.load(cached)
    scenes = SceneSplit("train", cfg.n_train_scenes, cfg)
    bank = build_prompt_bank(model, scenes, source_split="train")
    if run_dir.exists():
        bank.save(cached)
    return bank


def to_uint8(image: np.ndarray) -> np.ndarray:
    return (np.clip(image, 0.0, 1.0) * 255).astype(np.uint8)


PALETTE = np.array(
    [
        [66, 133, 244],
        [219, 68, 55],
        [244, 180, 0],
        [15, 157, 88],
        [171, 71, 188],
        [0, 172, 193],
        [255, 112, 67],
        [158, 157, 36],
    ],
    dtype=np.float32,
)


def overlay_masks(image: np.ndarray, masks: list[np.ndarray], alpha: float = 0.55) -> np.ndarray:
    """Blend each mask over the image in a palette color."""
    canvas = to_uint8(image).astype(np.float32)
    for i, mask in enumerate(masks):
        color = PALETTE[i % len(PALETTE)]
        canvas[mask] = (1 - alpha) * canvas[mask] + alpha * color
    return canvas.astype(np.uint8)


def save_png(path: Path, array: np.ndarray) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(array).save(path)
    print(f"  wrote {path.relative_to(REPO)}")
