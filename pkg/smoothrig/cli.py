"""CLI интерфейс"""
import functools
import json
import math
import sys
from pathlib import Path

import click
import numpy as np

from smoothrig.config import (
    CRITICAL_GRID, CURVE_STEPS, DEFAULT_SCALES, GRID_STEPS, LP_TOLERANCE, SAMPLES_PER_OVAL,
)
from smoothrig.curves import (
    FORMULA_COROLLARY, composition_report, corollary_bound, crossing_count, fit_curve,
)
from smoothrig.errors import SmoothRigError, ValidationError
from smoothrig.fractal import (
    FORMULA_THRESHOLD, THRESHOLD_CONCLUSION, PointCloud, box_dimension_estimate,
    rigidity_threshold, rigidity_threshold_check,
)
from smoothrig.geometry import (
    FORMULA_AREA, FORMULA_MU, ball_grid, boundary_samples, build_domains, build_nesting_forest,
    mu, random_circle_configuration, validate_configuration,
)
from smoothrig.parser import (
    config_to_dict, parse_config_file, parse_points_file, parse_poly_file, poly_to_dict,
)
from smoothrig.prooftrace import (
    bezout_check, default_direction, default_eps, domain_pigeonhole_report,
    find_critical_points, perturb_linear, perturbation_stability,
)
from smoothrig.prooftrace.critical import UNIT_BOX
from smoothrig.remez import (
    FORMULA_BRUDNYI_GANZBURG, FORMULA_EMPIRICAL_RATIO, FORMULA_INVERSE, FORMULA_TOPOLOGICAL,
    brudnyi_ganzburg_bound, empirical_remez_ratio, inverse_remez, remez_bound_topological,
    remez_estimate_lp,
)
from smoothrig.render import write_svg
from smoothrig.report import RunManifest, emit_report, quantity
from smoothrig.rigidity import (
    FORMULA_INTERIOR_LINE, BoundEntry, build_1d_report, build_config_report,
    interior_line_bound,
)

RATIO_SLACK = 1e-6


def reports_errors(command):
    """Перевести SmoothRigError в сообщение "✗ ..." и код выхода 2 или 3"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SmoothRigError as e:
            click.echo(f"✗ Ошибка: {e}", err=True)
            click.get_current_context().exit(e.exit_code)
    return wrapper


def _floats(text: str, option: str):
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValidationError('MalformedInput', path=option, field=text)


def _point(text: str, option: str):
    values = _floats(text, option)
    if not values:
        raise ValidationError('MalformedInput', path=option, field=text)
    return np.asarray(values, dtype=float)


def _load_geometry(config_path):
    """Прочитать, проверить конфигурацию и построить лес и области"""
    config = validate_configuration(parse_config_file(Path(config_path)))
    forest = build_nesting_forest(config)
    return config, forest, build_domains(forest)


def _output(manifest: RunManifest, body: dict, out):
    text = emit_report(manifest, body, Path(out) if out else None)
    if out:
        click.echo(f"✓ Отчёт записан: {out}")
    else:
        click.echo(text)


@click.group()
def cli():
    """Гладкая жёсткость нулевых множеств: оценки Ремеза, области W_j и трассировка доказательства"""
    pass


@cli.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='JSON с овалами')
@click.option('--random-circles', type=click.IntRange(min=1), default=None,
              help='Сгенерировать конфигурацию из N вложенных окружностей')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--max-depth', type=click.IntRange(min=1), default=4, show_default=True)
@click.option('--svg', type=click.Path(dir_okay=False), default=None, help='Куда записать SVG')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def decompose(config_path, random_circles, seed, max_depth, svg, out):
    """Лес вложенности, области W_j и mu(Z)"""
    manifest = RunManifest('decompose', {
        'config': config_path, 'random_circles': random_circles, 'seed': seed,
        'max_depth': max_depth, 'svg': svg,
    })
    if config_path:
        manifest.add_input('config', config_path)
        config, forest, domains = _load_geometry(config_path)
    elif random_circles:
        rng = np.random.default_rng(seed)
        config = validate_configuration(random_circle_configuration(rng, random_circles, max_depth))
        forest = build_nesting_forest(config)
        domains = build_domains(forest)
    else:
        raise ValidationError('MalformedInput', path='<options>', field='--config')

    body = {
        'ovals': config.N,
        'domain_count': len(domains),
        'identity_holds': len(domains) == config.N,
        'max_depth': forest.max_depth,
        'forest': forest.to_dict(),
        'domains': [
            dict(domain.to_dict(), area=quantity(domain.area, FORMULA_AREA))
            for domain in domains
        ],
        'mu': quantity(mu(domains), FORMULA_MU),
    }
    if random_circles and not config_path:
        body['configuration'] = config_to_dict(config)
    if svg:
        write_svg(config, domains, Path(svg))
        body['svg'] = svg
    _output(manifest, body, out)


@cli.command('remez-lp')
@click.option('--degree', type=click.IntRange(min=0), required=True)
@click.option('--z', 'z_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='CSV/JSON с точками или JSON-конфигурация овалов')
@click.option('--grid', type=click.IntRange(min=1), default=GRID_STEPS, show_default=True,
              help='Число точек отрезка (n=1) или шагов сетки шара (n>=2)')
@click.option('--samples-per-oval', type=click.IntRange(min=1), default=SAMPLES_PER_OVAL,
              show_default=True)
@click.option('--tol', type=float, default=LP_TOLERANCE, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def remez_lp(degree, z_path, grid, samples_per_oval, tol, out):
    """Численная нижняя оценка константы Ремеза"""
    manifest = RunManifest('remez-lp', {
        'degree': degree, 'z': z_path, 'grid': grid,
        'samples_per_oval': samples_per_oval, 'tol': tol,
    })
    manifest.add_input('z', z_path)
    if _is_config(z_path):
        config, _, _ = _load_geometry(z_path)
        zs = boundary_samples(config, samples_per_oval)
    else:
        zs = parse_points_file(Path(z_path))
    candidates = ball_grid(zs.shape[1], grid)

    estimate = remez_estimate_lp(zs, degree, candidates, tol)
    body = {
        'remez': estimate.to_dict(),
        'inverse_remez': quantity(inverse_remez(estimate), FORMULA_INVERSE),
    }
    _output(manifest, body, out)


def _is_config(path) -> bool:
    if Path(path).suffix.lower() != '.json':
        return False
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError:
            return False
    return isinstance(data, dict) and 'ovals' in data


@cli.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--degree', type=click.IntRange(min=1), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def bounds(config_path, degree, out):
    """Замкнутые оценки: (8/mu)^d, обе оценки жёсткости и Брудный-Ганзбург"""
    manifest = RunManifest('bounds', {'config': config_path, 'degree': degree})
    manifest.add_input('config', config_path)
    config, forest, domains = _load_geometry(config_path)
    mu_value = mu(domains)

    body = {
        'ovals': config.N,
        'degree': degree,
        'mu': quantity(mu_value, FORMULA_MU),
    }
    try:
        body['remez_topological'] = quantity(
            remez_bound_topological(mu_value, degree, 2, config.N), FORMULA_TOPOLOGICAL)
    except ValidationError as e:
        if e.kind != 'TooFewOvals':
            raise
        body['remez_topological'] = {'skipped': str(e), 'formula': FORMULA_TOPOLOGICAL}

    # Доля площади внутренностей корневых овалов в единичном круге
    root_area = sum(forest.nodes[oid].oval.area() for oid in forest.roots)
    lam = min(root_area / math.pi, 1.0)
    body['brudnyi_ganzburg'] = quantity(
        brudnyi_ganzburg_bound(lam, degree, 2), FORMULA_BRUDNYI_GANZBURG,
        **{'lambda': lam, 'subset': 'interiors of root ovals'})
    body['rigidity'] = build_config_report(mu_value, config.N, degree).to_dict()
    _output(manifest, body, out)


@cli.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--degree', type=click.IntRange(min=1), required=True)
@click.option('--lp/--no-lp', default=False, help='Добавить оценку через численную константу Ремеза')
@click.option('--grid', type=click.IntRange(min=1), default=GRID_STEPS, show_default=True)
@click.option('--samples-per-oval', type=click.IntRange(min=1), default=SAMPLES_PER_OVAL,
              show_default=True)
@click.option('--tol', type=float, default=LP_TOLERANCE, show_default=True)
@click.option('--f', 'f_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Многочлен для оценки по прямой через z0 и внутреннюю точку')
@click.option('--z0', default=None, help='"x,y"')
@click.option('--zint', default=None, help='"x,y"')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def rigidity(config_path, degree, lp, grid, samples_per_oval, tol, f_path, z0, zint, out):
    """Отчёт об оценках жёсткости для конфигурации овалов"""
    manifest = RunManifest('rigidity', {
        'config': config_path, 'degree': degree, 'lp': lp, 'grid': grid,
        'samples_per_oval': samples_per_oval, 'tol': tol, 'f': f_path, 'z0': z0, 'zint': zint,
    })
    manifest.add_input('config', config_path)
    manifest.add_input('f', f_path)
    config, _, domains = _load_geometry(config_path)

    estimate = None
    if lp:
        estimate = remez_estimate_lp(boundary_samples(config, samples_per_oval), degree,
                                     ball_grid(2, grid), tol)
    report = build_config_report(mu(domains), config.N, degree, estimate=estimate)

    if f_path:
        if z0 is None or zint is None:
            raise ValidationError('MalformedInput', path='<options>', field='--z0/--zint')
        f = parse_poly_file(Path(f_path))
        point = _point(z0, '--z0')
        scale = abs(f(*point))
        if scale == 0.0:
            raise ValidationError('InvalidRange', name='f(z0)', value=0.0)
        value = interior_line_bound(lambda pts: f.values(pts) / scale, point,
                                    _point(zint, '--zint'), degree)
        report.add(BoundEntry('interior_line', value, FORMULA_INTERIOR_LINE))

    body = report.to_dict()
    if estimate is not None:
        body['remez'] = estimate.to_dict()
    _output(manifest, body, out)


@cli.command('rigidity-1d')
@click.option('--zeros', required=True, help='Нули через запятую или путь к файлу с точками')
@click.option('--z0', type=float, required=True)
@click.option('--fz0', type=float, default=1.0, show_default=True)
@click.option('--degree', type=click.IntRange(min=0), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def rigidity_1d(zeros, z0, fz0, degree, out):
    """Оценка жёсткости по разделённым разностям на отрезке"""
    manifest = RunManifest('rigidity-1d', {'zeros': zeros, 'z0': z0, 'fz0': fz0, 'degree': degree})
    if Path(zeros).is_file():
        manifest.add_input('zeros', zeros)
        nodes = parse_points_file(Path(zeros))[:, 0].tolist()
    else:
        nodes = _floats(zeros, '--zeros')
    _output(manifest, build_1d_report(nodes, z0, fz0, degree).to_dict(), out)


@cli.command('curve-check')
@click.option('--f', 'f_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--points', 'points_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--s', 's', type=click.IntRange(min=1), required=True)
@click.option('--degree', type=click.IntRange(min=0), required=True)
@click.option('--tgrid', type=click.IntRange(min=2), default=512, show_default=True)
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Конфигурация для подсчёта пересечений кривой с Z')
@click.option('--gamma', type=float, default=None, help='Нижняя граница |f(z0)| на кривой')
@click.option('--steps', type=click.IntRange(min=2), default=CURVE_STEPS, show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def curve_check(f_path, points_path, s, degree, tgrid, config_path, gamma, steps, out):
    """Неравенство цепного правила вдоль тестовой кривой"""
    manifest = RunManifest('curve-check', {
        'f': f_path, 'points': points_path, 's': s, 'degree': degree, 'tgrid': tgrid,
        'config': config_path, 'gamma': gamma, 'steps': steps,
    })
    manifest.add_input('f', f_path)
    manifest.add_input('points', points_path)
    manifest.add_input('config', config_path)

    f = parse_poly_file(Path(f_path))
    omega = fit_curve(parse_points_file(Path(points_path)), s)
    report = composition_report(f, omega, degree, tgrid)
    report['g'] = poly_to_dict(report['g'])
    body = {
        'curve': {
            's': omega.s,
            'components': [poly_to_dict(component) for component in omega.components],
            'max_radius': omega.max_radius(),
        },
        'composition': report,
    }

    if config_path:
        config, _, _ = _load_geometry(config_path)
        crossings = crossing_count(omega, config, steps=steps)
        body['crossings'] = crossings
        if gamma is not None:
            if crossings >= degree + 1:
                body['corollary'] = quantity(corollary_bound(report['c_hat'], gamma, degree),
                                             FORMULA_COROLLARY, gamma=gamma)
            else:
                body['corollary'] = {
                    'skipped': f"пересечений {crossings}, требуется не меньше {degree + 1}",
                    'formula': FORMULA_COROLLARY,
                }
    _output(manifest, body, out)


@cli.command()
@click.option('--points', 'points_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--scales', default=None, help='Убывающие масштабы через запятую')
@click.option('--degree', type=click.IntRange(min=0), required=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def boxdim(points_path, scales, degree, out):
    """Клеточная размерность облака точек и проверка порога n - 1/(d+1)"""
    eps_list = _floats(scales, '--scales') if scales else list(DEFAULT_SCALES)
    manifest = RunManifest('boxdim', {'points': points_path, 'scales': eps_list, 'degree': degree})
    manifest.add_input('points', points_path)

    cloud = PointCloud(parse_points_file(Path(points_path)))
    estimate = box_dimension_estimate(cloud, eps_list)
    exceeds = rigidity_threshold_check(estimate['slope'], cloud.dim, degree)
    body = {
        'points': len(cloud),
        'n': cloud.dim,
        'box_dimension': estimate,
        'threshold': {
            'd': degree,
            'value': rigidity_threshold(cloud.dim, degree),
            'beta': estimate['slope'],
            'exceeds': exceeds,
            'conclusion': THRESHOLD_CONCLUSION if exceeds else None,
            'formula': FORMULA_THRESHOLD,
        },
    }
    _output(manifest, body, out)


@cli.command('verify-proof')
@click.option('--poly', 'poly_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--degree', type=click.IntRange(min=1), default=None,
              help='По умолчанию степень многочлена')
@click.option('--grid', type=click.IntRange(min=2), default=CRITICAL_GRID, show_default=True)
@click.option('--eps', type=float, default=None, help='По умолчанию 1e-6 * max |коэффициент|')
@click.option('--samples', type=click.IntRange(min=1), default=64, show_default=True,
              help='Шагов решётки внутри каждой области')
@click.option('--stability/--no-stability', default=True,
              help='Повторить поиск с eps/2 и сопоставить критические точки')
@click.option('--out', type=click.Path(dir_okay=False), default=None)
@reports_errors
def verify_proof(poly_path, config_path, degree, grid, eps, samples, stability, out):
    """Численная трассировка доказательства: отношение Ремеза, Безу и принцип Дирихле"""
    manifest = RunManifest('verify-proof', {
        'poly': poly_path, 'config': config_path, 'degree': degree, 'grid': grid,
        'eps': eps, 'samples': samples, 'stability': stability,
    })
    manifest.add_input('poly', poly_path)
    manifest.add_input('config', config_path)

    p = parse_poly_file(Path(poly_path))
    if p.nvars != 2:
        raise ValidationError('DimensionMismatch', expected=2, actual=p.nvars)
    d = degree if degree is not None else max(p.degree, 1)
    config, _, domains = _load_geometry(config_path)
    mu_value = mu(domains)

    ratio = empirical_remez_ratio(p, boundary_samples(config, SAMPLES_PER_OVAL),
                                  ball_grid(2, GRID_STEPS))
    body = {
        'degree': d,
        'ovals': config.N,
        'mu': quantity(mu_value, FORMULA_MU),
        'empirical_ratio': quantity(ratio, FORMULA_EMPIRICAL_RATIO),
    }
    try:
        topological = remez_bound_topological(mu_value, d, 2, config.N)
    except ValidationError as e:
        if e.kind != 'TooFewOvals':
            raise
        body['remez_topological'] = {'skipped': str(e), 'formula': FORMULA_TOPOLOGICAL}
    else:
        body['remez_topological'] = quantity(topological, FORMULA_TOPOLOGICAL)
        body['ratio_within_bound'] = ratio <= topological + RATIO_SLACK

    eps = default_eps(p) if eps is None else eps
    direction = default_direction()
    critical = find_critical_points(perturb_linear(p, direction, eps), UNIT_BOX, grid)
    critical.assign_domains(domains)
    body['perturbation'] = {'eps': eps, 'direction': list(direction)}
    body['bezout'] = bezout_check(critical, d).to_dict()
    body['pigeonhole'] = domain_pigeonhole_report(p, config, domains, samples, grid=grid,
                                                  critical=critical)
    if stability:
        body['stability'] = perturbation_stability(p, eps, direction, UNIT_BOX, grid)
    _output(manifest, body, out)


def dispatch(argv=None) -> int:
    """
    Запустить подкоманду и вернуть код выхода

    0 - успех, 2 - ошибка входных данных или неизвестная подкоманда, 3 - сбой решателя
    """
    try:
        result = cli.main(args=argv, prog_name='smoothrig', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("✗ Прервано", err=True)
        return 1
    except SmoothRigError as e:
        click.echo(f"✗ Ошибка: {e}", err=True)
        return e.exit_code
    return result if isinstance(result, int) else 0


def main():
    sys.exit(dispatch())

