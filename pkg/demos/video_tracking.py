"""Track a prompted object through a synthetic video.

A single point on frame 0 starts the track; the model then re-finds the
object frame by frame, feeding its own predictions back as memory. Run
with a short and a long memory to see why remembering more frames helps.

    python3 demos/video_tracking.py
"""

from __future__ import annotations

import numpy as np

from ctxseg.engine.data import VideoSplit
from ctxseg.prompts import VisualPromptSpec
from ctxseg.tracker import track_video

from _shared import OUT_ROOT, demo_model, overlay_masks, save_png, to_uint8

OUT = OUT_ROOT / "video_tracking"


def main() -> None:
    model, cfg = demo_model()
    seq = next(iter(VideoSplit("val", 2, cfg)))
    print(f"video: {seq.num_frames} frames, {len(seq.tracks)} ground-truth tracks")

    gt0 = seq.tracks[0][0]
    ys, xs = np.nonzero(gt0)
    h, w = gt0.shape
    prompt = VisualPromptSpec.from_json(
        {"kind": "point", "point": [float(xs.mean() / w), float(ys.mean() / h)]}
    )
    print(f"prompt: one point on the object at frame 0\n")

    for mem_len in (1, 8):
        result = track_video(model, seq, prompt, mem_len=mem_len)
        jf = result.jf
        print(
            f"  memory of {mem_len} frame(s): J {jf['j']:.3f}  F {jf['f']:.3f}  J&F {jf['jf']:.3f}"
        )
        if mem_len == 8:
            strip = np.concatenate(
                [
                    overlay_masks(seq.frames[t], [result.masks[t]])
                    if t > 0
                    else to_uint8(seq.frames[t])
                    for t in range(seq.num_frames)
                ],
                axis=1,
            )
            save_png(OUT / "track_strip.png", strip)

    print("\nframe 0 shows the raw input; every later frame is a prediction.")


if __name__ == "__main__":
    main()
