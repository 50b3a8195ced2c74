"""Segment a scene two ways: from a category bank, and from one scribble.

Trains a small model on first run (cached afterwards), then walks through
the two modes the service exposes, printing what comes back and writing
overlay PNGs under demos/out/quickstart/.

    python3 demos/quickstart.py
"""

from __future__ import annotations

import numpy as np
import torch

from ctxseg.engine.data import SceneSplit
from ctxseg.engine.evaluate import queries_tensor
from ctxseg.inference import assemble_panoptic, propose_generic, refer
from ctxseg.prompts import VisualPromptSpec
from ctxseg.sampling import sample_bank_queries

from _shared import OUT_ROOT, demo_bank, demo_model, overlay_masks, save_png

OUT = OUT_ROOT / "quickstart"


def main() -> None:
    model, cfg = demo_model()
    scene = SceneSplit("val", cfg.n_eval_scenes, cfg)[3]
    print(f"target scene: {len(scene.instances)} objects, {scene.image.shape[1]}x{scene.image.shape[0]} px\n")

    # -- generic mode: "segment everything the bank knows about" ------------
    print("generic mode, prompted by the category bank:")
    bank = demo_bank(model, cfg)
    qset = sample_bank_queries(bank, np.random.default_rng(0), n_incontext=8)
    proposals = propose_generic(model, scene.image, queries_tensor(model, qset))
    segments, _ = assemble_panoptic(proposals, scene.image.shape[:2])
    for seg in segments:
        print(f"  {qset.names[seg.column]:<18} score {seg.score:.2f}  {int(seg.mask.sum())} px")
    save_png(OUT / "generic.png", overlay_masks(scene.image, [s.mask for s in segments]))

    # -- referring mode: "segment things like THIS" -------------------------
    inst = scene.instances[0]
    ys, xs = np.nonzero(inst.mask)
    h, w = scene.image.shape[:2]
    cy, cx = ys.mean() / h, xs.mean() / w
    stroke = VisualPromptSpec.from_json(
        {
            "kind": "scribble",
            "points": [[cx - 0.04, cy], [cx, cy], [cx + 0.04, cy]],
            "radius": 0.02,
        }
    )
    print("\nreferring mode, prompted by a scribble on the first object:")
    with torch.inference_mode():
        pyr = model.encode_image(scene.image)
        feat = model.encode_prompts(pyr, [stroke]).mean(dim=0, keepdim=True)
    hits = refer(model, scene.image, feat)
    best = hits[0]
    iou = (best.mask & inst.mask).sum() / max(1, (best.mask | inst.mask).sum())
    print(f"  best match: score {best.score:.2f}, IoU vs the scribbled object {iou:.2f}")
    save_png(OUT / "referring.png", overlay_masks(scene.image, [best.mask]))


if __name__ == "__main__":
    main()
