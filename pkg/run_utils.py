from __future__ import annotations

import os
import random

import numpy as np
from joblib import Parallel, delayed

WORKERS_ENV = "PSEUDOACHROMATIC_MAX_WORKERS"


def resolve_n_jobs(requested: int = 1) -> int:
    """Clamp a joblib worker count by $PSEUDOACHROMATIC_MAX_WORKERS (if set)."""
    n_jobs = (os.cpu_count() or 1) if requested in (-1, 0) else max(1, requested)
    cap = os.environ.get(WORKERS_ENV)
    if cap:
        try:
            n_jobs = min(n_jobs, max(1, int(cap)))
        except ValueError:
            print(f"[WARN] ignoring {WORKERS_ENV}={cap!r} (not an integer)")
    return n_jobs


def run_jobs(fn, arg_list: list[tuple], n_jobs: int = 1) -> list:
    """fn(*args) for every args tuple, results in input order."""
    n_jobs = resolve_n_jobs(n_jobs)
    if n_jobs == 1 or len(arg_list) < 2:
        return [fn(*args) for args in arg_list]
    return Parallel(n_jobs=n_jobs)(delayed(fn)(*args) for args in arg_list)


def set_seed(seed: int = 42) -> np.random.Generator:
    random.seed(seed)
    os.environ["PYTHONHASHSEED"] = str(seed)
    return np.random.default_rng(seed)
