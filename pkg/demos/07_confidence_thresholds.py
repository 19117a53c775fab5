"""Per-class confidence thresholds for pseudo-label selection.

Each class gets the mean confidence of the points it claimed, so easy
classes set themselves a high bar and rare, uncertain classes keep a low
one. Overrides replace a class's threshold outright and are recorded as
provenance. Filtering keeps a point only when its confidence is strictly
above its class threshold.
"""

import numpy as np

from aerialseg.features import FeatureSet, extract_features
from aerialseg.model import TrainConfig, train_baseline
from aerialseg.pseudolabel import (adjust_thresholds, compute_thresholds,
                                   filter_pseudolabels,
                                   render_threshold_table)
from aerialseg.synth import urban_scene
from aerialseg.taxonomy import ClassId


def main():
    # a deliberately short training run so confidences stay interesting
    train = urban_scene(n=15_000, seed=70)
    target = urban_scene(n=15_000, seed=71)
    fs = FeatureSet(descriptor="extended", engineered=True)
    result = train_baseline(
        extract_features(train, fs), train.label,
        TrainConfig(epochs=20, learning_rate=0.5, class_weighting=True),
    )
    preds = result.model.predict(extract_features(target, fs))

    table = compute_thresholds(preds, iteration=1)
    print(render_threshold_table(table))

    adjusted = adjust_thresholds(table, {"Soil": 0.1, "Water": 0.9})
    print("after overrides:")
    print(render_threshold_table(adjusted))

    kept = filter_pseudolabels(preds, adjusted)
    print(f"kept {len(kept)} of {len(preds)} points as pseudo-labels")
    for cid, n in kept.kept_per_class.items():
        claimed = int((preds.argmax_class() == cid).sum())
        if claimed:
            print(f"  {ClassId(cid).name.lower():<12} {n:>6} of {claimed}")

    mean_conf = float(np.mean(kept.confidence)) if len(kept) else float("nan")
    print(f"mean confidence of kept points: {mean_conf:.3f}")


if __name__ == "__main__":
    main()
