from quadkit import GeneratorSpec, generate_quads, parse_record
from quadkit.figure import emit_svg

FIGURE_LINE = '{"A": ["10", "0"], "B": ["16", "4"], "C": ["4", "6"], "D": ["0", "0"]}'


def figure_quad():
    return parse_record(FIGURE_LINE)


class TestEmitSvg:
    def test_document_structure(self):
        svg = emit_svg(figure_quad())
        assert svg.startswith('<?xml version="1.0"')
        assert '<svg xmlns="http://www.w3.org/2000/svg" version="1.1"' in svg
        assert svg.rstrip().endswith("</svg>")

    def test_outline_and_shaded_pairs(self):
        svg = emit_svg(figure_quad())
        # 4 translucent decomposition triangles + 1 outline.
        assert svg.count("<polygon") == 5
        assert svg.count('fill-opacity="0.16"') == 4
        assert svg.count("<line") == 2  # the two diagonals

    def test_vertex_labels(self):
        svg = emit_svg(figure_quad())
        for name in "ABCD":
            assert f">{name}</text>" in svg

    def test_area_annotations(self):
        svg = emit_svg(figure_quad())
        assert "K[BCD] = 40" in svg
        assert "K[ACD] = 30" in svg
        assert "K[ABD] = 20" in svg
        assert "K[ABC] = 30" in svg
        assert "K[ABCD] = 60" in svg

    def test_y_axis_flipped(self):
        svg = emit_svg(figure_quad())
        # C has the greatest model-space y, so the smallest SVG y.
        import re

        labels = {
            m.group(2): float(m.group(1))
            for m in re.finditer(
                r'<text x="[0-9.]+" y="([0-9.]+)" font-family="sans-serif" '
                r'font-size="14">([A-D])</text>',
                svg,
            )
        }
        assert labels["C"] < labels["A"]
        assert labels["C"] < labels["D"]

    def test_unit_square_annotations(self):
        line = '{"A": ["0", "0"], "B": ["1", "0"], "C": ["1", "1"], "D": ["0", "1"]}'
        svg = emit_svg(parse_record(line))
        assert svg.count("= 1/2") == 4
        assert "K[ABCD] = 1" in svg

    def test_crossed_quadruple_renders(self):
        spec = GeneratorSpec(kind="crossed", count=1, seed=4)
        (q,) = generate_quads(spec)
        svg = emit_svg(q)
        assert svg.count("<polygon") == 5

    def test_deterministic_output(self):
        assert emit_svg(figure_quad()) == emit_svg(figure_quad())

    def test_degenerate_extent_renders(self):
        line = '{"A": ["2", "2"], "B": ["2", "2"], "C": ["2", "2"], "D": ["2", "2"]}'
        svg = emit_svg(parse_record(line))
        assert "</svg>" in svg
