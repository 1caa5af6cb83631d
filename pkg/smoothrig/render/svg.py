"""SVG-схема областей W_j: заливка областей, контуры овалов и легенда с площадями"""
from pathlib import Path
from typing import List

from lxml import etree

from smoothrig.geometry import Domain, OvalConfiguration

SVG_NS = 'http://www.w3.org/2000/svg'
SIZE = 480
MARGIN = 20
LEGEND_WIDTH = 200
LEGEND_LINE = 18

# Палитра по кругу; при большом числе областей оттенок сдвигается
PALETTE = (
    '#4e79a7', '#f28e2b', '#e15759', '#76b7b2', '#59a14f',
    '#edc948', '#b07aa1', '#ff9da7', '#9c755f', '#bab0ac',
)


def _color(index: int) -> str:
    if index < len(PALETTE):
        return PALETTE[index]
    hue = (index * 137) % 360
    return f"hsl({hue}, 60%, 60%)"


def _to_canvas(point):
    """[-1, 1]^2 -> пиксели, ось y направлена вверх"""
    scale = (SIZE - 2 * MARGIN) / 2.0
    x, y = point
    return MARGIN + (x + 1.0) * scale, MARGIN + (1.0 - y) * scale


def _ring_path(vertices) -> str:
    coords = [_to_canvas(v) for v in vertices]
    head = f"M {coords[0][0]:.3f} {coords[0][1]:.3f}"
    tail = ' '.join(f"L {x:.3f} {y:.3f}" for x, y in coords[1:])
    return f"{head} {tail} Z"


def render_svg(config: OvalConfiguration, domains: List[Domain]) -> str:
    """
    SVG-документ: по пути на область (outer и дыры, правило evenodd), по контуру
    на овал и легенда "область -> площадь"
    """
    height = max(SIZE, MARGIN * 2 + LEGEND_LINE * (len(domains) + 1))
    root = etree.Element(f"{{{SVG_NS}}}svg", nsmap={None: SVG_NS})
    root.set('width', str(SIZE + LEGEND_WIDTH))
    root.set('height', str(height))
    root.set('viewBox', f"0 0 {SIZE + LEGEND_WIDTH} {height}")

    unit = etree.SubElement(root, f"{{{SVG_NS}}}circle")
    cx, cy = _to_canvas((0.0, 0.0))
    unit.set('cx', f"{cx:.3f}")
    unit.set('cy', f"{cy:.3f}")
    unit.set('r', f"{(SIZE - 2 * MARGIN) / 2.0:.3f}")
    unit.set('class', 'unit-ball')
    unit.set('fill', 'none')
    unit.set('stroke', '#cccccc')
    unit.set('stroke-dasharray', '4 4')

    fills = etree.SubElement(root, f"{{{SVG_NS}}}g", id='domains')
    for index, domain in enumerate(domains):
        rings = [domain.outer.vertices] + [hole.vertices for hole in domain.holes]
        path = etree.SubElement(fills, f"{{{SVG_NS}}}path")
        path.set('class', 'domain')
        path.set('data-domain', str(domain.id))
        path.set('d', ' '.join(_ring_path(ring) for ring in rings))
        path.set('fill', _color(index))
        path.set('fill-rule', 'evenodd')
        path.set('fill-opacity', '0.75')

    outlines = etree.SubElement(root, f"{{{SVG_NS}}}g", id='ovals')
    for oval in config.ovals:
        path = etree.SubElement(outlines, f"{{{SVG_NS}}}path")
        path.set('class', 'oval')
        path.set('data-oval', str(oval.id))
        path.set('d', _ring_path(oval.vertices))
        path.set('fill', 'none')
        path.set('stroke', '#222222')
        path.set('stroke-width', '1.5')

    legend = etree.SubElement(root, f"{{{SVG_NS}}}g", id='legend')
    title = etree.SubElement(legend, f"{{{SVG_NS}}}text", x=str(SIZE + 10), y=str(MARGIN + 4))
    title.text = 'domain: area'
    for index, domain in enumerate(domains):
        y = MARGIN + LEGEND_LINE * (index + 1)
        swatch = etree.SubElement(legend, f"{{{SVG_NS}}}rect")
        swatch.set('x', str(SIZE + 10))
        swatch.set('y', str(y - 8))
        swatch.set('width', '12')
        swatch.set('height', '12')
        swatch.set('fill', _color(index))
        label = etree.SubElement(legend, f"{{{SVG_NS}}}text")
        label.set('class', 'legend')
        label.set('x', str(SIZE + 28))
        label.set('y', str(y + 2))
        label.text = f"W{domain.id}: {domain.area:.6g}"

    return etree.tostring(root, pretty_print=True, xml_declaration=True,
                          encoding='UTF-8').decode('utf-8')


def write_svg(config: OvalConfiguration, domains: List[Domain], file_path: Path) -> Path:
    file_path = Path(file_path)
    file_path.write_text(render_svg(config, domains), encoding='utf-8')
    return file_path
