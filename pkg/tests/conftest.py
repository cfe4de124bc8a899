import pytest

from mvlogic.config import reset_settings
from mvlogic.mvcore import TruthTable
from mvlogic.tablestore import TableFormat, save_table


@pytest.fixture(autouse=True)
def fresh_settings():
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def write_table(tmp_path):
    """Save a table under tmp_path and return its path."""

    def write(f: TruthTable, name: str, fmt: TableFormat = TableFormat.TEXT):
        path = tmp_path / name
        save_table(f, path, fmt)
        return path

    return write
