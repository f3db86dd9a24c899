import os
import tempfile

import pytest


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache():
    """Point the structure-constant cache at a throwaway directory."""
    old = os.environ.get("SYMRING_CACHE_DIR")
    with tempfile.TemporaryDirectory(prefix="symring-cache-") as tmp:
        os.environ["SYMRING_CACHE_DIR"] = tmp
        yield tmp
    if old is None:
        os.environ.pop("SYMRING_CACHE_DIR", None)
    else:
        os.environ["SYMRING_CACHE_DIR"] = old
