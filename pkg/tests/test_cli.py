import json

import pytest

from src.cli import run
from src.utils.serialization import read_polygon_file, write_polygon_file


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pell_csv(capsys, config_file):
    code, out, _ = run_cli(capsys, 'pell', '--d', '2', '--n', '-1', '--count', '5', '--config', config_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'x,y,d,n'
    assert [line.split(',')[0] for line in lines[1:]] == ['1', '7', '41', '239', '1393']


def test_certify_rectangle(capsys, tmp_path, config_file, rectangle_3x4):
    path = tmp_path / "square.json"
    write_polygon_file(str(path), rectangle_3x4)
    code, out, _ = run_cli(capsys, '--config', config_file, 'certify', '--file', str(path), '--k', '3')
    assert code == 0
    report = json.loads(out)
    assert report['pairs_with_length']
    assert report['is_diophantine'] is True


def test_search_ngon_is_empty(capsys, config_file):
    code, out, _ = run_cli(capsys, 'search', 'ngon', '--k', '3', '--n', '5', '--limit', '1000000',
                           '--config', config_file)
    assert code == 0
    assert json.loads(out)['witnesses'] == []


def test_search_ngon_honours_zero_limit(capsys, config_file):
    code, out, _ = run_cli(capsys, 'search', 'ngon', '--k', '3', '--n', '4', '--limit', '0',
                           '--config', config_file)
    assert code == 0
    report = json.loads(out)
    assert report['parameters']['limit'] == "0"
    assert len(report['witnesses']) == 1


@pytest.mark.parametrize("argv", [
    ['search', 'pairs', '--k', '3', '--limit', '0'],
    ['search', 'triangles', '--k', '3', '--radius', '0'],
    ['search', 'polygons', '--k', '3', '--n', '4', '--radius', '0'],
])
def test_zero_bounds_are_domain_errors(capsys, config_file, argv):
    code, out, err = run_cli(capsys, *argv, '--config', config_file)
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_search_triangles_csv(capsys, config_file):
    code, out, _ = run_cli(capsys, 'search', 'triangles', '--k', '4', '--radius', '50', '--jobs', '2',
                           '--format', 'csv', '--config', config_file)
    assert code == 0
    assert len(out.splitlines()) == 1 + 3


def test_family_table(capsys, config_file):
    code, out, _ = run_cli(capsys, 'family', '--k', '3', '--limit', '100', '--config', config_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith('b,h,side_short,side_long,x0,y0')
    assert [line.split(',')[0] for line in lines[1:]] == ['0', '7', '48']


def test_construct_round_trip(capsys, tmp_path, config_file):
    path = tmp_path / "triangle.json"
    code, out, _ = run_cli(capsys, 'construct', '--shape', 'triangle', '--k', '7', '--output', str(path),
                           '--config', config_file)
    assert code == 0
    assert json.loads(out)['vertices'] == [["0", "0"], ["7", "0"], ["0", "24"]]
    code, out, _ = run_cli(capsys, 'certify', '--file', str(path), '--k', '7', '--config', config_file)
    assert code == 0
    assert json.loads(out)['is_diophantine'] is True


def test_construct_several_rectangles(capsys, tmp_path, config_file):
    path = tmp_path / "rect.json"
    code, out, _ = run_cli(capsys, 'construct', '--shape', 'rectangle', '--k', '12', '--limit', '100',
                           '--output', str(path), '--config', config_file)
    assert code == 0
    assert len(json.loads(out)) == 4
    points, _ = read_polygon_file(str(tmp_path / "rect-3.json"))
    assert points[2].y == 35


def test_certify_impossible(capsys, config_file):
    code, out, _ = run_cli(capsys, 'certify-impossible', '--case', 'K2', '--limit', '1000',
                           '--config', config_file)
    assert code == 0
    assert json.loads(out)['witness_count'] == "0"
    code, out, _ = run_cli(capsys, 'certify-impossible', '--k', '2', '--radius', '8', '--config', config_file)
    assert code == 0
    assert json.loads(out)['witness_count'] == "0"


@pytest.mark.parametrize("argv", [
    ['bogus'],
    ['pell', '--d', '2'],
    ['certify-impossible'],
    ['certify-impossible', '--case', 'K2', '--k', '2'],
    ['search', 'ngon', '--k', 'three', '--n', '5'],
])
def test_usage_errors_exit_2(capsys, config_file, argv):
    code, _, err = run_cli(capsys, *argv, '--config', config_file)
    assert code == 2
    assert err


def test_input_file_errors_exit_2(capsys, tmp_path, config_file):
    code, _, err = run_cli(capsys, 'certify', '--file', str(tmp_path / "none.json"), '--config', config_file)
    assert code == 2
    assert "cannot read" in err
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, _, err = run_cli(capsys, 'certify', '--file', str(broken), '--config', config_file)
    assert code == 2
    assert "malformed JSON" in err


@pytest.mark.parametrize("argv", [
    ['construct', '--shape', 'triangle', '--k', '2'],
    ['pell', '--d', '5', '--n', '1'],
    ['family', '--k', '5', '--limit', '10'],
    ['search', 'ngon', '--k', '3', '--n', '3'],
])
def test_domain_errors_exit_1(capsys, config_file, argv):
    code, out, err = run_cli(capsys, *argv, '--config', config_file)
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_help_exits_0(capsys):
    assert run(['--help']) == 0
