# 2026 bhlearn developers

"""Reference computations the tests compare against."""

import math

import numpy as np

from bhlearn import repo, cube


def direct_transform(f):
    """Coefficient sums straight from the definition, one full 2^n x 2^n sign matrix"""
    points = np.arange(1 << f.n)
    overlap = points[:, None] & points[None, :]
    parity = np.zeros_like(overlap)
    for i in range(f.n):
        parity ^= overlap >> i & 1
    return (1.0 - 2.0 * parity) @ f.values / (1 << f.n)


def random_table(n, seed):
    return cube.truth_table(n, repo.generator(seed).uniform(-1, 1, 1 << n))


def random_coeffs(n, seed, terms=6):
    rng = repo.generator(seed)
    keys = rng.integers(0, 1 << n, terms).tolist()
    return cube.coeff_map(n, {k: v for k, v in zip(keys, rng.uniform(-1, 1, terms).tolist())})


def bits_of_points(n, points):
    return np.array([[bool(p >> i & 1) for i in range(n)] for p in points], dtype=bool).reshape(-1, n)


def three_sigma(p, trials):
    return 3 * math.sqrt(p * (1 - p) / trials)
