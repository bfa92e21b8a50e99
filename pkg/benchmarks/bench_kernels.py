"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--points 600 2000 20000] [--repeat 20]

Both paths are imported from the same module, so the comparison does not
depend on ``REDSDF_DISABLE_NUMBA``.  Results also confirm that the two paths
agree to float rounding.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from redsdf import _kernels as K
from redsdf.geometry import ArticulatedModel, PrimitiveShape, PackedShapes, rpy_transform


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def scene() -> PackedShapes:
    shapes = [
        PrimitiveShape.sphere(0.25, (0.3, 0.0, 0.2)),
        PrimitiveShape.capsule(0.05, 0.2, rpy_transform((0.0, 0.1, 0.3), (0.0, 1.2, 0.0))),
        PrimitiveShape.capsule(0.04, 0.15, rpy_transform((0.1, -0.2, 0.1), (0.4, 0.0, 0.0))),
        PrimitiveShape.box((0.3, 0.5, 0.02), rpy_transform((0.5, -0.3, -0.05))),
    ]
    return PackedShapes.from_shapes(shapes)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, nargs="+", default=[66, 600, 20000])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    if not K.USE_NUMBA:
        print("numba path disabled or unavailable; only the numpy path is timed")
    rng = np.random.default_rng(0)
    packed = scene()
    centers = rng.uniform(-0.5, 0.5, size=(18, 3))
    radii = rng.uniform(0.05, 0.15, size=18)
    print(f"{'kernel':<22}{'points':>8}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}{'max |diff|':>13}")
    for n in args.points:
        X = rng.uniform(-1.0, 1.0, size=(n, 3))
        cases = [
            ("union_sdf", K.union_sdf_np, getattr(K, "_union_sdf_nb", None),
             (X, packed.kinds, packed.rots, packed.trans, packed.dims)),
            ("min_sphere_distance", K.min_sphere_distance_np, getattr(K, "_min_sphere_distance_nb", None),
             (X, centers, radii)),
        ]
        for name, f_np, f_nb, a in cases:
            t_np = best_of(lambda: f_np(*a), args.repeat)
            if K.USE_NUMBA and f_nb is not None:
                f_nb(*a)  # compile / load cache
                t_nb = best_of(lambda: f_nb(*a), args.repeat)
                diff = max(float(np.max(np.abs(u - v))) for u, v in zip(f_np(*a), f_nb(*a)))
                print(f"{name:<22}{n:>8}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.1f}{diff:>13.2e}")
            else:
                print(f"{name:<22}{n:>8}{1e3 * t_np:>12.3f}{'-':>12}{'-':>10}{'-':>13}")

    arm = ArticulatedModel.from_config(__file__.rsplit("/benchmarks/", 1)[0] + "/configs/arm3.yaml")
    q = np.array([0.3, -0.4, 1.1])
    X = rng.uniform(-1.0, 1.0, size=(600, 3))
    t = best_of(lambda: arm.sdf(X, q), args.repeat)
    print(f"\narm oracle (FK + packing + union_sdf), 600 points: {1e3 * t:.3f} ms "
          f"[{'numba' if K.USE_NUMBA else 'numpy'} path]")


if __name__ == "__main__":
    main()
