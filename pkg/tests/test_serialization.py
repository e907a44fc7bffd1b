import json

import pytest

from src.exceptions import InputFileError
from src.geometry import ConfigurationMode, LatticePoint, certify
from src.utils.serialization import (
    polygon_from_dict,
    polygon_to_dict,
    dump_json,
    read_polygon_file,
    rows_to_csv,
    write_polygon_file,
)


def test_polygon_to_dict(rectangle_3x4):
    assert polygon_to_dict(rectangle_3x4, ConfigurationMode.SET) == {
        'mode': 'set',
        'vertices': [["0", "0"], ["3", "0"], ["3", "4"], ["0", "4"]],
    }


def test_written_file_certifies_identically(tmp_path, rectangle_3x4):
    path = tmp_path / "rectangle.json"
    write_polygon_file(str(path), iter(rectangle_3x4))
    points, mode = read_polygon_file(str(path))
    assert points == rectangle_3x4
    assert mode is ConfigurationMode.POLYGON
    assert certify(points, 3).to_dict() == certify(rectangle_3x4, 3).to_dict()


def test_large_coordinates_survive():
    big = 10**30
    points, _ = polygon_from_dict({'vertices': [[str(big), "-1"]]})
    assert points == [LatticePoint(big, -1)]


@pytest.mark.parametrize("document, message", [
    ([], "JSON object"),
    ({'mode': 'ring', 'vertices': []}, "unknown mode"),
    ({'mode': 'set'}, "vertices"),
    ({'vertices': [["1"]]}, "vertex 0"),
    ({'vertices': [["1", "2"], [1.5, "2"]]}, "vertex 1"),
])
def test_schema_violations(document, message):
    with pytest.raises(InputFileError, match=message):
        polygon_from_dict(document)


def test_unreadable_and_malformed_files(tmp_path):
    with pytest.raises(InputFileError, match="cannot read"):
        read_polygon_file(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text('{"vertices": [')
    with pytest.raises(InputFileError, match="malformed JSON"):
        read_polygon_file(str(broken))


def test_dump_json_renders_integers_as_strings():
    data = json.loads(dump_json({'n': 10**30, 'flag': True, 'nested': [1, None]}))
    assert data == {'n': str(10**30), 'flag': True, 'nested': ["1", None]}


def test_rows_to_csv():
    text = rows_to_csv([{'x': '7', 'y': '5'}, {'x': '41', 'y': '29'}], columns=['x', 'y'])
    assert text.splitlines() == ['x,y', '7,5', '41,29']
