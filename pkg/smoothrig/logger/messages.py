"""Словарь русских сообщений для журнала операций и ошибок"""
# Централизованный словарь сообщений: журнал и тексты исключений берутся отсюда

MESSAGES = {
    # Геометрия (configuration)
    'config_validation_started': 'Проверка конфигурации: {count} овалов',
    'config_validated': 'Конфигурация корректна: N={count}',
    'forest_built': 'Лес вложенности построен: корней {roots}, максимальная глубина {depth}',
    'domains_built': 'Построено областей: {count}, mu={mu:.6g}',

    # Оценка константы Ремеза (remez)
    'lp_sweep_started': 'ЛП-оценка: степень {degree}, точек Z {samples}, кандидатов {candidates}, базис {basis}',
    'lp_sweep_finished': 'ЛП-оценка завершена: значение {value:.6g}, решено ЛП {solved}, итераций {iterations}',
    'lp_degenerate': 'Z лежит в нулевом множестве многочлена степени {degree}: константа бесконечна',
    'lp_unbounded': 'ЛП неограничена в точке {point}: константа бесконечна',

    # Критические точки (prooftrace)
    'newton_started': 'Многостартовый Ньютон: {seeds} начальных точек',
    'newton_finished': 'Ньютон завершён: сошлось {converged}, отброшено {dropped}, кластеров {clusters}',
    'bezout_violation': 'Кластеров {count} больше границы Безу {bound}: численный артефакт',
    'pigeonhole_finished': 'Области с внутренним максимумом: {flagged} из {domains}, нарушений запертости {violations}',

    # Размерность (fractal)
    'boxdim_finished': 'Наклон {slope:.4f}, невязка {residual:.3g} по {scales} масштабам',

    # Одномерные сечения (rigidity)
    'line_zeros_found': 'На прямой найдено нулей: {count}, требуется {required}',

    # Тестовые кривые (curves)
    'composition_finished': 'Композиция степени {degree}, c_hat={c_hat}',

    # Ошибки проверки входных данных
    'SelfIntersecting': 'Овал {id} имеет самопересечения',
    'BoundariesIntersect': 'Границы овалов {id1} и {id2} пересекаются',
    'OutsideUnitBall': 'Овал {id} выходит за пределы единичного круга',
    'TooFewVertices': 'Овал {id} содержит меньше трёх вершин',
    'NonPositiveArea': 'Неположительная площадь у овала/области {id}',
    'DuplicateId': 'Повторяющийся идентификатор овала {id}',
    'EmptyConfiguration': 'Пустая конфигурация: нет ни одной области',
    'DimensionMismatch': 'Несовпадение размерностей: ожидалось {expected}, получено {actual}',
    'Overflow': 'Размер базиса слишком велик: n={n}, d={d}',
    'TooFewOvals': 'Недостаточно овалов: {count}, требуется не меньше {required}',
    'MuNonPositive': 'Величина mu должна быть положительной, получено {mu}',
    'LambdaOutOfRange': 'Доля меры lambda должна лежать в (0, 1], получено {value}',
    'DuplicateNodes': 'Узлы должны строго возрастать',
    'DegenerateNodes': 'Вырожденный набор узлов: {reason}',
    'TooManyPoints': 'Точек {k} больше, чем s+1 = {limit}',
    'ImageLeavesBall': 'Образ кривой выходит из единичного шара (|w(t)|={radius:.6g})',
    'DegenerateScales': 'Некорректные масштабы: {reason}',
    'InvalidPerturbation': 'Некорректное возмущение: {reason}',
    'InvalidRange': 'Параметр {name} вне допустимого диапазона: {value}',
    'DegreeTooLarge': 'Степень {d} больше допустимой {limit}',
    'MalformedInput': 'Некорректный входной файл {path}: поле {field}',
    'SolverFailure': 'Сбой ЛП-решателя (допуск {tolerance}): {reason}',
    'SamplerFailure': 'Сбой функции-сэмплера: {reason}',
}


def get_message(key, **kwargs):
    """
    Получить русское сообщение по ключу с подстановкой параметров

    Args:
        key: Ключ сообщения из словаря MESSAGES
        **kwargs: Параметры для форматирования сообщения

    Returns:
        Отформатированное сообщение или ключ, если сообщение не найдено
    """
    template = MESSAGES.get(key)
    if template is None:
        return key

    try:
        return template.format(**kwargs)
    except (KeyError, ValueError):
        return template
