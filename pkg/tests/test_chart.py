import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from adamschart.chart import (
    Chart,
    ChartError,
    HurewiczAnnotation,
    Status,
    chart_from_ext,
    connective_cover_chart,
    parse,
    render_ascii,
    render_svg,
    serialize,
)
from adamschart.hurewicz import apply_criterion
from adamschart.resolve import ExtTable
from figures import FIGURE_1, FIGURE_2, dots

SVG = "{http://www.w3.org/2000/svg}"


def test_chart_from_ext():
    assert chart_from_ext(ExtTable()).dots == {}
    ch = chart_from_ext(ExtTable({(2, 6): 1}, 3, 10, 10))
    assert ch.dots == {(2, 4): 1}
    assert ch.window == (3, 10)


def test_figure_1(ko_chart):
    assert ko_chart.restrict(8, 13) == dots(FIGURE_1)
    assert ko_chart.total() == sum(ko_chart.dots.values())


def test_cover_c1_is_figure_2(ko_chart):
    bo = connective_cover_chart(ko_chart, 1)
    assert bo.c == 1 and bo.window == (7, 20)
    fig2 = {k: v for k, v in dots(FIGURE_2).items() if k[0] <= 7}
    assert bo.restrict(7, 13) == fig2


def test_cover_c8_and_c2(ko_chart):
    k8 = connective_cover_chart(ko_chart, 8)
    assert min(k8.dots) == (0, 8)
    assert all(k8.mult(s, 8) for s in range(5))
    k2 = connective_cover_chart(ko_chart, 2)
    assert k2.mult(0, 2) == 1
    assert all(k2.mult(s, 4) for s in range(1, 7))
    assert all(k2.mult(s, 8) for s in range(2, 7))
    assert k2.mult(3, 9) == 1 and k2.mult(4, 10) == 1


def test_cover_rejects_bad_c(ko_chart):
    for c in (3, 5, 6, 7, 11):
        with pytest.raises(ChartError, match="0, 1, 2 or 4 mod 8"):
            connective_cover_chart(ko_chart, c)
    with pytest.raises(ChartError, match="empty"):
        connective_cover_chart(ko_chart, 16)


@pytest.mark.parametrize("c", [1, 2, 4, 8, 9, 10, 12])
def test_cover_invariants(ko_chart, c):
    cover = connective_cover_chart(ko_chart, c)
    assert all(s >= 0 and n >= c for s, n in cover.dots)
    assert connective_cover_chart(cover, c) == cover


def test_cover_requires_ko_chart(ko_chart):
    bo = connective_cover_chart(ko_chart, 1)
    with pytest.raises(ChartError, match="ko chart"):
        connective_cover_chart(bo, 2)


def test_ascii():
    assert render_ascii(Chart()) == "# chart p=2 c=0\n"
    text = render_ascii(Chart({(0, 0): 1}))
    assert text.splitlines()[1] == "0 | 1"
    assert "*" in render_ascii(Chart({(0, 0): 12}))


def test_ascii_marks_survivors(ko_chart):
    bo = apply_criterion(connective_cover_chart(ko_chart, 1), 1, 2)
    lines = render_ascii(bo).splitlines()
    s_top = max(s for s, _ in bo.dots)
    marks = set()
    for i, line in enumerate(lines[1 : s_top + 2]):
        cells = line.split("|")[1].split()
        marks |= {(s_top - i, n) for n, cell in enumerate(cells) if cell == "o"}
    assert marks == {(0, 1), (1, 2), (2, 4), (3, 8)}


def _circles(svg):
    root = ET.fromstring(svg)
    return root.findall(f"{SVG}circle")


def test_svg_empty_has_axes():
    root = ET.fromstring(render_svg(Chart()))
    assert root.tag == f"{SVG}svg"
    texts = [t.text for t in root.findall(f"{SVG}text")]
    assert "t-s" in texts and "s" in texts
    assert not _circles(render_svg(Chart()))


def test_svg_figure_1(ko_chart):
    sub = Chart(ko_chart.restrict(8, 13))
    assert len(_circles(render_svg(sub))) == len(dots(FIGURE_1))


def test_svg_multiplicity_and_survivors():
    circles = _circles(render_svg(Chart({(1, 3): 2})))
    assert len(circles) == 2
    assert circles[0].get("cy") == circles[1].get("cy")
    assert circles[0].get("cx") != circles[1].get("cx")
    ann = {(0, 1): HurewiczAnnotation(Status.SURVIVOR, 1, False, 1)}
    (c,) = _circles(render_svg(Chart({(0, 1): 1}, c=1, annotations=ann)))
    assert c.get("fill") == "white"
    for attr in ("cx", "cy", "r"):
        assert len(c.get(attr).split(".")[1]) == 1


def test_serialize_format():
    ch = Chart({(3, 8): 1, (0, 1): 2}, c=1)
    assert serialize(ch) == "chart v1 p=2 c=1\ndot s=0 n=1 mult=2\ndot s=3 n=8 mult=1\n"
    assert parse("chart v1 p=2 c=0\ndot s=3 n=8 mult=1\n").dots == {(3, 8): 1}


def test_parse_errors():
    with pytest.raises(ChartError, match="line 2: unknown key 'colour'"):
        parse("chart v1 p=2 c=0\ndot s=1 n=1 mult=1 colour=red\n")
    with pytest.raises(ChartError, match="line 3"):
        parse("chart v1 p=2 c=0\ndot s=1 n=1 mult=1\ndot s=x n=1 mult=1\n")
    with pytest.raises(ChartError, match="line 1"):
        parse("dot s=1 n=1 mult=1\n")
    with pytest.raises(ChartError, match="unknown key 'blob'"):
        parse("chart v1 p=2 c=0\nblob\n")


annotations = st.one_of(
    st.none(),
    st.just(HurewiczAnnotation(Status.KILLED)),
    st.builds(lambda k, d: HurewiczAnnotation(Status.SURVIVOR, k, d, None), st.integers(1, 64), st.booleans()),
)


@st.composite
def charts(draw):
    keys = draw(st.sets(st.tuples(st.integers(0, 12), st.integers(0, 30)), max_size=25))
    dots_ = {k: draw(st.integers(1, 12)) for k in keys}
    anns = {}
    for k in keys:
        a = draw(annotations)
        if a is not None:
            if a.status is Status.SURVIVOR:
                a = HurewiczAnnotation(Status.SURVIVOR, a.target_k, a.delta_factored, k[1])
            anns[k] = a
    window = draw(st.one_of(st.none(), st.tuples(st.integers(0, 20), st.integers(0, 40))))
    return Chart(dots_, draw(st.sampled_from([2, 3, 5])), draw(st.integers(0, 9)), window, anns)


@given(charts())
def test_round_trip(ch):
    assert parse(serialize(ch)) == ch
