"""Shared loading for the demos: read-only access to a finished run."""

import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
OUT = os.path.join(ROOT, 'demos', 'out')

from ghfeat.config import load_config  # noqa: E402
from ghfeat.pipeline import Run, load_data, load_encoder, load_generator  # noqa: E402


def load_run(run_dir=None):
    """Returns (config, generator, y_avg, split, run) for a trained run.

    The run is only read, so no lock is taken; do not point this at a run
    that a command is still writing.
    """
    config = load_config(os.path.join(ROOT, 'configs', 'acceptance.cfg'), {
        'paths.run_dir': run_dir or os.path.join(ROOT, 'runs', 'acceptance'),
        'paths.data_dir': os.path.join(ROOT, 'data', 'mnist')})
    run = Run(config, 'demo')
    try:
        generator, y_avg = load_generator(run)
    except Exception as exc:
        sys.exit(f'{exc}\nrun scripts/run_acceptance.sh first')
    os.makedirs(OUT, exist_ok=True)
    return config, generator, y_avg, load_data(config), run


def encoder(run, generator, name='encoder'):
    return load_encoder(run, generator, name)
