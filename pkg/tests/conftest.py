import shutil
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from prodoc.docdb import build_index  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def corpus_root() -> Path:
    return DATA / "corpus"


@pytest.fixture(scope="session")
def corpus_index(corpus_root):
    # the index is immutable, sharing one across tests is safe
    return build_index(corpus_root)


@pytest.fixture
def corpus_copy(tmp_path):
    """A writable copy of the corpus for mutation tests."""
    dest = tmp_path / "corpus"
    shutil.copytree(DATA / "corpus", dest)
    return dest
