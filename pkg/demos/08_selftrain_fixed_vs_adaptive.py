"""Run the self-training loop twice: frozen thresholds vs adaptive ones.

Both runs start from the same weak bootstrap predictions, produced by a
model trained briefly on a small held-out scene. Iteration 1 computes the
same threshold table either way, so the first records match exactly. The
fixed strategy then keeps that table for the whole run while the adaptive
strategy recomputes it from each iteration's own predictions, raising the
bar as the model grows more confident. Every artifact lands under the run
directory and the manifest records enough to replay either run.

Takes about half a minute.
"""

import shutil
from pathlib import Path

from aerialseg.features import FeatureSet, extract_features
from aerialseg.las_io import LasHeaderInfo, write_las, write_predictions
from aerialseg.metrics import evaluate
from aerialseg.model import TrainConfig, train_baseline
from aerialseg.pipeline import PipelineConfig, run_selftrain
from aerialseg.synth import urban_scene

OUT = Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    fs = FeatureSet(descriptor="extended", engineered=True)
    scenes, clouds = {}, {}
    for name, n, seed in (("train", 100_000, 10), ("val", 10_000, 11),
                          ("test", 20_000, 12)):
        cloud = urban_scene(n=n, seed=seed)
        path = OUT / f"{name}.las"
        write_las(cloud, LasHeaderInfo.for_cloud(cloud), path)
        scenes[name], clouds[name] = str(path), cloud

    # deliberately weak bootstrap: a short run on a small separate scene
    boot_scene = urban_scene(n=3000, seed=99)
    boot = train_baseline(
        extract_features(boot_scene, fs), boot_scene.label,
        TrainConfig(epochs=30, learning_rate=0.1, class_weighting=True,
                    seed=5),
    )
    boot_pred_path = OUT / "boot.pred"
    write_predictions(boot.model.predict(extract_features(clouds["train"], fs)),
                      boot_pred_path)
    boot_report = evaluate(
        clouds["test"].label,
        boot.model.predict(extract_features(clouds["test"], fs)).argmax_class(),
    )
    print(f"bootstrap model alone: test mIoU {boot_report.miou:.4f}")

    runs_root = OUT / "runs"
    if runs_root.exists():
        shutil.rmtree(runs_root)   # a run owns its directory exclusively

    manifests = {}
    for strategy in ("fixed", "adaptive"):
        config = PipelineConfig(
            train_cloud=scenes["train"],
            val_cloud=scenes["val"],
            test_cloud=scenes["test"],
            bootstrap={"kind": "predictions", "path": str(boot_pred_path)},
            strategy=strategy,
            iterations=3,
            feature_set=fs,
            train=TrainConfig(epochs=300, learning_rate=1.0,
                              class_weighting=True, seed=0),
            seed=0,
            run_root=str(runs_root),
            run_id=strategy,
        )
        manifests[strategy] = run_selftrain(config)
        print(f"{strategy}: manifest at {manifests[strategy].path}")

    print()
    print("            ------ fixed ------   ----- adaptive -----")
    print("iteration   kept      test mIoU   kept       test mIoU")
    pairs = zip(manifests["fixed"].iterations,
                manifests["adaptive"].iterations)
    for rec_f, rec_a in pairs:
        print(f"iter{rec_f['iteration']}       "
              f"{rec_f['pseudolabels']['total']:<9} "
              f"{rec_f['test_report']['miou']:.4f}     "
              f"{rec_a['pseudolabels']['total']:<10} "
              f"{rec_a['test_report']['miou']:.4f}")
    print()
    print("iteration 1 is identical by construction; afterwards the frozen "
          "table keeps\nmore (noisier) points while the adaptive one keeps "
          "fewer, cleaner ones. Both\nclear the bootstrap by a wide margin "
          "on this scene.")


if __name__ == "__main__":
    main()
