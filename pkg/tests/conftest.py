# 2026 bhlearn developers

import logging
from argparse import Namespace

from pytest import fixture

from bhlearn import repo


@fixture(autouse=True)
def restore_settings():
    """The cli updates the shared settings in place; every test starts from the defaults."""
    saved = Namespace(**vars(repo.settings))
    yield
    repo.settings.__dict__.clear()
    repo.settings.__dict__.update(vars(saved))
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, 'bhlearn', False)]:
        root.removeHandler(handler)
        handler.close()
