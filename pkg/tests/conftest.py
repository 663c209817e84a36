import pytest

from bgescore import create_context
from bgescore.models.dataset import Dataset
from bgescore.utils.handlers.file_formats import FileFormatsHandler
from tests.helpers import chain_data


@pytest.fixture
def chain_ctx():
    return create_context(chain_data(100, seed=7))


@pytest.fixture
def write_csv(tmp_path):
    def _write(dataset: Dataset, name: str = "data.csv"):
        path = tmp_path / name
        FileFormatsHandler.dataset_to_csv(dataset, path)
        return path
    return _write


@pytest.fixture
def write_text(tmp_path):
    def _write(content: str, name: str):
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write
