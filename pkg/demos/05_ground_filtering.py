"""Separate ground from structure with the cloth simulation filter.

Three control scenes: a flat plane (everything is ground), a plane with a
raised roof (the cloth must not climb onto it), and a 10 degree slope
(the cloth must follow it). The Soil/Terrain suggestion at the end is
advisory only; nothing downstream applies it without an explicit opt-in.
"""

import numpy as np

from aerialseg.csf import ClothParams, run_csf, suggest_ground_type
from aerialseg.synth import (flat_plane, lawn_asphalt, plane_with_roof,
                             sloped_plane)
from aerialseg.taxonomy import ClassId

PARAMS = ClothParams(grid_resolution=1.0, class_threshold=0.5)


def main():
    flat = flat_plane(n=4000, seed=1)
    res = run_csf(flat, PARAMS)
    print(f"flat plane: {res.ground_mask.mean():.1%} ground, "
          f"converged={res.converged} after {res.iterations} iterations")

    cloud, is_roof = plane_with_roof(n_plane=4000, n_roof=1000, seed=2)
    res = run_csf(cloud, PARAMS)
    roof_leak = res.ground_mask[is_roof].sum()
    plane_recall = res.ground_mask[~is_roof].mean()
    print(f"roof scene: {int(roof_leak)} roof points marked ground, "
          f"plane recall {plane_recall:.1%}")

    slope = sloped_plane(n=4000, slope_deg=10.0, seed=3)
    res = run_csf(slope, PARAMS)
    print(f"10 deg slope: ground recall {res.ground_mask.mean():.1%}")

    # advisory Soil vs Terrain call: half lawn, half asphalt, all ground
    ground, true_type = lawn_asphalt(n=4000, seed=4)
    res = run_csf(ground, PARAMS)
    sug = suggest_ground_type(ground, res.ground_mask)
    soil = int((sug.suggestion == ClassId.SOIL).sum())
    sealed = int((sug.suggestion == ClassId.TERRAIN).sum())
    agree = (sug.suggestion == true_type).mean()
    print(f"ground type suggestion (advisory={sug.advisory}): "
          f"{soil} soil, {sealed} sealed terrain, "
          f"{agree:.1%} agree with the planted truth")
    for w in sug.warnings:
        print("  warning:", w)


if __name__ == "__main__":
    main()
