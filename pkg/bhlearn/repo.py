# 2026 bhlearn developers

"""
Shared settings and small helpers used across the package: the process-wide numeric
settings namespace, bit tricks for packed masks, seeded generators and the
thread shares that run independent trials in parallel.
"""

import logging
import os
import threading
from argparse import Namespace
from pathlib import Path

import numpy as np

BASE_DIR = Path(__file__).resolve().parent
CONFIG = BASE_DIR / 'config' / 'config.yaml'
TEST_CONFIG = BASE_DIR / 'config' / 'test_config.yaml'
THREADS_ENV = 'BHLEARN_THREADS'

# updated in place by the cli from the merged configuration
settings = Namespace(**{
    'n_max': 24,  # dense truth tables only up to this dimension
    'tolerance': 1e-12,
    'kappa': 1.0,  # heuristic constant in exp(kappa * sqrt(d ln d))
    'C': 1.0,  # constant of the dimension-free sample count
    'max_subsets': 5_000_000,
    'block': 64,  # subsets per estimation block
    'retries': 8,
    'search_budget': 1000,
    'max_threads': 0,
})

popcount = lambda v: bin(v).count('1')
parity = lambda v: popcount(v) & 1
tomask = lambda indices: sum(1 << i for i in indices)
toindices = lambda bits: [i for i in range(bits.bit_length()) if bits >> i & 1]
tohex = lambda bits: format(bits, 'x')
fromhex = lambda text: int(text.strip().lower().replace('0x', '') or '0', 16)


def generator(*keys):
    """
    A Philox counter-based generator keyed by a :class:`numpy.random.SeedSequence`
    over the given non-negative integer keys, e.g. (master seed, cell, trial, stream).
    The same keys give the same stream on every platform. The key count is part of the
    entropy, so (s,) and (s, 0) give different streams.
    """
    entropy = list()
    for key in keys:
        if isinstance(key, (list, tuple)):
            entropy.extend(int(k) for k in key)
        else:
            entropy.append(int(key))
    if any(k < 0 for k in entropy):
        raise ValueError('seed keys must be non-negative: %s' % entropy)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([len(entropy)] + entropy)))


def max_threads(requested=None):
    """Flag > BHLEARN_THREADS > config; 0 or unset means all CPUs."""
    for value in (requested, os.environ.get(THREADS_ENV), settings.max_threads):
        if value in (None, ''):
            continue
        try:
            value = int(value)
        except ValueError:
            raise ValueError('invalid thread count: %s' % value)
        if value < 0:
            raise ValueError('invalid thread count: %d' % value)
        if value > 0:
            return value
        break
    return os.cpu_count() or 1


class share_thread(threading.Thread):
    """A thread that runs one share of independent jobs and keeps results by key"""

    def __init__(self, job, keys, prefix):
        threading.Thread.__init__(self)
        self.job = job
        self.keys = keys
        self.prefix = prefix
        self.results = dict()
        self.error = None

    def run(self):
        try:
            for key in self.keys:
                self.results[key] = self.job(key)
        except Exception as ex:
            self.error = ex


def run_shares(job, keys, threads=None):
    """
    Runs :code:`job(key)` for every key, spread over at most :code:`threads` threads,
    and returns the results in the order of :code:`keys`. Every job must derive its
    randomness from its key alone; the thread count then never changes the output.
    """
    log = logging.getLogger(__name__)
    keys = list(keys)
    runs = max(1, min(max_threads(threads), len(keys)))
    if runs == 1:
        return [job(key) for key in keys]

    active_threads = list()
    for j in range(runs):
        thread = share_thread(job, keys[j::runs], 'share_%d' % j)
        active_threads.append(thread)
        thread.start()
    log.debug('active shares: %d for %d jobs' % (runs, len(keys)))

    results = dict()
    for thread in active_threads:
        thread.join()
        if thread.error is not None:
            raise thread.error
        results.update(thread.results)
    return [results[key] for key in keys]
