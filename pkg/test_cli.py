"""Тесты CLI: подкоманды, коды выхода, детерминированность отчётов, SVG"""
import json

import numpy as np
import pytest
from click.testing import CliRunner

from conftest import chain_ovals, ovals_to_json, write_json
from smoothrig.cli import cli, dispatch
from smoothrig.errors import SolverError, ValidationError
from smoothrig.geometry import build_domains, build_nesting_forest, square_oval, validate_configuration
from smoothrig.parser import parse_config_file, parse_points_file, parse_poly_file
from smoothrig.render import render_svg


def _run(args):
    result = CliRunner().invoke(cli, [str(a) for a in args])
    return result


def _report(path):
    return json.loads(path.read_text(encoding='utf-8'))


def _poly_file(path, terms):
    return write_json(path, {'nvars': 2, 'terms': [{'exp': e, 'coef': c} for e, c in terms]})


def test_decompose_annulus(tmp_path, annulus_file):
    out = tmp_path / 'out.json'
    svg = tmp_path / 'out.svg'
    result = _run(['decompose', '--config', annulus_file, '--svg', svg, '--out', out])
    assert result.exit_code == 0, result.output
    report = _report(out)
    body = report['report']
    assert body['domain_count'] == 2
    assert body['identity_holds']
    assert body['mu']['value'] == pytest.approx(0.49)
    assert body['mu']['formula']
    assert report['manifest']['subcommand'] == 'decompose'
    assert 'config' in report['manifest']['inputs']
    assert svg.read_text(encoding='utf-8').count('class="domain"') == 2


def test_decompose_random_circles(tmp_path):
    out = tmp_path / 'out.json'
    result = _run(['decompose', '--random-circles', 8, '--seed', 4, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['domain_count'] == body['ovals']
    assert len(body['configuration']['ovals']) == body['ovals']


def test_bounds_annulus(tmp_path, annulus_file):
    out = tmp_path / 'bounds.json'
    result = _run(['bounds', '--config', annulus_file, '--degree', 2, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['remez_topological']['value'] == pytest.approx((8 / 0.49) ** 2)
    ids = {entry['id'] for entry in body['rigidity']['bounds']}
    assert ids == {'topological_literal', 'topological_composed'}
    assert body['brudnyi_ganzburg']['value'] >= 1.0


def test_bounds_too_few_ovals(tmp_path, annulus_file):
    out = tmp_path / 'bounds.json'
    result = _run(['bounds', '--config', annulus_file, '--degree', 3, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert 'skipped' in body['remez_topological']
    assert body['rigidity']['bounds'] == []


def test_remez_lp_half_line(tmp_path):
    z = tmp_path / 'halfline.csv'
    z.write_text('\n'.join(str(x) for x in np.linspace(-1.0, 0.0, 512)), encoding='utf-8')
    out = tmp_path / 'remez.json'
    result = _run(['remez-lp', '--degree', 2, '--z', z, '--grid', 1024, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['remez']['value'] == pytest.approx(17.0, rel=0.05)
    assert body['remez']['witness_poly']['terms']
    assert body['inverse_remez']['value'] == pytest.approx(1.0 / body['remez']['value'])


def test_rigidity_1d(tmp_path):
    out = tmp_path / 'r1d.json'
    result = _run(['rigidity-1d', '--zeros', '-0.5,0.5', '--z0', 0, '--fz0', 1, '--degree', 1,
                   '--out', out])
    assert result.exit_code == 0, result.output
    values = sorted(entry['value'] for entry in _report(out)['report']['bounds'])
    assert values == pytest.approx([0.5, 8.0])


def test_rigidity_with_interior_line(tmp_path, annulus_file):
    f = _poly_file(tmp_path / 'f.json', [([2, 0], 1.0), ([1, 0], -0.5)])
    out = tmp_path / 'rig.json'
    result = _run(['rigidity', '--config', annulus_file, '--degree', 1, '--f', f,
                   '--z0', '-0.9,0', '--zint', '0.25,0', '--out', out])
    assert result.exit_code == 0, result.output
    bounds = {entry['id']: entry['value'] for entry in _report(out)['report']['bounds']}
    assert bounds['interior_line'] == pytest.approx(2.0 / 1.26, rel=1e-6)


def test_curve_check(tmp_path):
    f = _poly_file(tmp_path / 'f.json', [([3, 0], 1.0), ([0, 1], 1.0)])
    points = tmp_path / 'points.csv'
    points.write_text('-0.5,0\n0.5,0\n', encoding='utf-8')
    out = tmp_path / 'curve.json'
    result = _run(['curve-check', '--f', f, '--points', points, '--s', 1, '--degree', 2,
                   '--tgrid', 64, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['composition']['lower_order'] == 3
    # w(t) = (t/sqrt(2), 0): g''' = 6/2^(3/2), ||f'''|| = 6
    assert body['composition']['c_hat'] == pytest.approx(2.0 ** 1.5, rel=1e-9)


def test_boxdim(tmp_path):
    xs = np.linspace(-0.5, 0.5, 4096, endpoint=False)
    points = tmp_path / 'segment.csv'
    np.savetxt(points, np.column_stack([xs, np.full_like(xs, 0.1)]), delimiter=',')
    out = tmp_path / 'box.json'
    result = _run(['boxdim', '--points', points, '--degree', 1, '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['box_dimension']['slope'] == pytest.approx(1.0, abs=0.1)
    assert body['threshold']['value'] == '3/2'
    assert body['threshold']['exceeds'] is False


def test_verify_proof(tmp_path, pigeonhole_file):
    poly = _poly_file(tmp_path / 'p.json', [
        ([4, 0], 1.0), ([0, 4], 1.0), ([2, 2], 2.0), ([3, 0], -0.6), ([1, 2], -0.6),
        ([2, 0], -0.64), ([0, 2], -0.64), ([1, 0], 0.384),
    ])
    out = tmp_path / 'proof.json'
    result = _run(['verify-proof', '--poly', poly, '--config', pigeonhole_file, '--grid', 32,
                   '--samples', 16, '--no-stability', '--out', out])
    assert result.exit_code == 0, result.output
    body = _report(out)['report']
    assert body['degree'] == 4
    assert body['bezout']['status'] in ('consistent', 'violation')
    assert sorted(body['pigeonhole']['flagged']) == [1, 2]
    assert body['pigeonhole']['flagged_without_critical_point'] == []


def test_determinism(tmp_path, annulus_file):
    """Повторный запуск на тех же входах даёт то же тело отчёта"""
    f = _poly_file(tmp_path / 'f.json', [([3, 0], 1.0), ([0, 1], 1.0)])
    points = tmp_path / 'points.csv'
    points.write_text('-0.5,0\n0.5,0\n', encoding='utf-8')
    z = tmp_path / 'z.csv'
    z.write_text('\n'.join(str(x) for x in np.linspace(-1.0, 0.0, 64)), encoding='utf-8')
    commands = [
        ['decompose', '--config', annulus_file],
        ['bounds', '--config', annulus_file, '--degree', 2],
        ['rigidity', '--config', annulus_file, '--degree', 2],
        ['rigidity-1d', '--zeros', '-0.5,0.25,0.5', '--z0', 0, '--degree', 2],
        ['remez-lp', '--degree', 2, '--z', z, '--grid', 33],
        ['curve-check', '--f', f, '--points', points, '--s', 1, '--degree', 2, '--tgrid', 16],
        ['boxdim', '--points', points, '--scales', '0.5,0.25,0.125', '--degree', 1],
        ['verify-proof', '--poly', f, '--config', annulus_file, '--grid', 12, '--samples', 8,
         '--no-stability'],
    ]
    for index, command in enumerate(commands):
        bodies = []
        for attempt in range(2):
            out = tmp_path / f"run{index}_{attempt}.json"
            result = _run(command + ['--out', out])
            assert result.exit_code == 0, (command, result.output)
            bodies.append(json.dumps(_report(out)['report'], sort_keys=True))
        assert bodies[0] == bodies[1], command[0]


def test_exit_codes(tmp_path):
    bow_tie = write_json(tmp_path / 'bow.json', {'ovals': [
        {'id': 1, 'vertices': [[0, 0], [0.5, 0.5], [0.5, 0], [0, 0.5]]}]})
    result = _run(['decompose', '--config', bow_tie])
    assert result.exit_code == 2
    assert '✗' in result.output

    broken = write_json(tmp_path / 'broken.json', {'ovals': [{'id': 1, 'vertices': [[0, 'a']]}]})
    result = _run(['decompose', '--config', broken])
    assert result.exit_code == 2
    assert 'ovals[0].vertices[0]' in result.output

    assert dispatch(['no-such-command']) == 2
    assert dispatch(['decompose', '--config', str(bow_tie)]) == 2
    assert dispatch(['rigidity-1d', '--zeros', '-0.5,0.5', '--z0', '0', '--degree', '1']) == 0
    assert SolverError('SolverFailure', tolerance=1e-9, reason='x').exit_code == 3


def test_parsers_name_offending_field(tmp_path):
    with pytest.raises(ValidationError) as e:
        parse_config_file(write_json(tmp_path / 'c.json', {'ovals': [{'vertices': []}]}))
    assert e.value.details['field'] == 'ovals[0].id'

    with pytest.raises(ValidationError) as e:
        parse_poly_file(write_json(tmp_path / 'p.json', {'nvars': 2, 'terms': [{'exp': [1]}]}))
    assert e.value.details['field'] == 'terms[0]'

    points = tmp_path / 'pts.json'
    points.write_text('[0.1, 0.2, 0.3]', encoding='utf-8')
    assert parse_points_file(points).shape == (3, 1)


def test_svg_rendering():
    config = validate_configuration(chain_ovals())
    domains = build_domains(build_nesting_forest(config))
    text = render_svg(config, domains)
    assert text.count('class="domain"') == 3
    assert text.count('class="oval"') == 3
    assert 'W3:' in text

    single = validate_configuration([square_oval(1, (0.0, 0.0), 1.0)])
    text = render_svg(single, build_domains(build_nesting_forest(single)))
    assert text.count('class="domain"') == 1
    assert 'W1: 1' in text


def test_config_round_trip_through_cli_fixture(tmp_path):
    path = write_json(tmp_path / 'chain.json', ovals_to_json(chain_ovals()))
    assert [oval.id for oval in parse_config_file(path)] == [1, 2, 3]
