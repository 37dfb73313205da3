import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tenseki.corpus import build_corpus, fixtures, strict_chain_fixture
from tenseki.errors import ParseError, ResolveError, ShapeError, SpecError, TensekiError
from tenseki.kalman import center_C, kalman_K
from tenseki.nelson import fv_kalman
from tenseki.specfile import SpecDocument, dump, emit_spec, from_instance, parse_spec, to_instance

B2_TEXT = "algebra B2\nelements 0 1\nleq 0<=1\nop2 imp: 1 1 ; 0 1\n"


def test_inline_b2():
    doc = parse_spec(B2_TEXT)
    assert doc.name == "B2" and doc.profile == "dl"
    assert doc.elements == ("0", "1")
    assert doc.leq == (("0", "1"),)
    assert doc.binary == (("imp", (("1", "1"), ("0", "1"))),)
    alg = to_instance(doc)
    assert alg.op("imp").tolist() == [[1, 1], [0, 1]]


def test_row_form_equals_inline_form():
    rows = "algebra B2\nelements 0 1\nleq 0<=1\nop2 imp\n1 1\n0 1\n"
    assert parse_spec(rows) == parse_spec(B2_TEXT)


def test_long_row_is_a_shape_error():
    text = "algebra B2\nelements 0 1\nleq 0<=1\nop2 imp\n1 1\n0 1 1\n"
    with pytest.raises(ShapeError) as exc:
        parse_spec(text)
    assert exc.value.line == 6


def test_long_inline_row_is_a_shape_error():
    with pytest.raises(ShapeError):
        parse_spec("algebra B2\nelements 0 1\nop2 imp: 1 1 1 ; 0 1\n")


def test_missing_rows_is_a_shape_error():
    with pytest.raises(ShapeError):
        parse_spec("algebra B2\nelements 0 1\nop2 imp\n1 1\nop1 neg 1 0\n")


def test_undeclared_element_named():
    text = "algebra C\nelements 0 m 1\nleq 0<=m m<=q\n"
    with pytest.raises(ResolveError) as exc:
        parse_spec(text)
    assert exc.value.name == "q"
    assert (exc.value.line, exc.value.column) == (3, 13)


def test_unknown_keyword_lists_expected():
    with pytest.raises(ParseError) as exc:
        parse_spec("algebra A\nelements 0\nlattice x\n")
    assert exc.value.line == 3 and "elements" in exc.value.expected


def test_unknown_profile():
    with pytest.raises(ParseError) as exc:
        parse_spec("algebra A\nprofile boolean\nelements 0\n")
    assert "heyting" in exc.value.expected


@pytest.mark.parametrize("text", [
    "elements 0 1\n",
    "algebra A\n",
    "algebra A B\nelements 0\n",
    "algebra A\nelements 0 0\n",
    "algebra A\nelements 0 1\nleq 0-1\n",
    "algebra A\nleq 0<=1\nelements 0 1\n",
    "algebra A\nelements 0\nconst c\n",
])
def test_malformed_inputs(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_comments_blank_lines_and_crlf():
    text = "# header\r\nalgebra B2   # name\r\n\r\nelements 0 1\r\nleq 0<=1\r\nop2 imp: 1 1 ; 0 1\r\n"
    assert parse_spec(text) == parse_spec(B2_TEXT)


def test_f_and_p_rejected_on_ki_profiles():
    text = ("algebra U\nprofile tki\nelements 0 c 1\nleq 0<=c c<=1\nconst c c\nop1 neg 1 c 0\n"
            "op1 G 0 c 1\nop1 H 0 c 1\nop1 F 0 c 1\nop2 imp\n1 1 1\nc 1 1\n0 c 1\n")
    with pytest.raises(ParseError):
        to_instance(parse_spec(text))


def test_b2_emission_is_byte_stable(b2_classical):
    first, second = dump(b2_classical), dump(b2_classical)
    assert first == second
    assert first == "algebra B2\nprofile heyting\nelements 0 1\nleq 0<=1\nop2 imp\n1 1\n0 1\n"


def test_kalman_image_names():
    fx = dict(zip(("B2",), fixtures()))
    text = dump(kalman_K(fx["B2"]))
    assert "elements (0,1) (0,0) (1,0)\n" in text
    assert "const c (0,0)\n" in text


def _algebras():
    algs = list(fixtures()) + [strict_chain_fixture()]
    algs += [kalman_K(a) for a in algs]
    algs += [center_C(a) for a in algs if a.has("neg")]
    algs.append(fv_kalman(fixtures()[0]))
    return algs


@pytest.mark.parametrize("alg", _algebras(), ids=lambda a: a.name)
def test_round_trip_on_fixtures(alg):
    doc = from_instance(alg)
    text = emit_spec(doc)
    assert parse_spec(text) == doc
    assert emit_spec(parse_spec(text)) == text
    assert to_instance(parse_spec(text)) == alg


def test_emit_canonicalizes_section_order():
    text = "elements 0 1\nalgebra B2\nop2 imp: 1 1 ; 0 1\nleq 0<=1\nprofile heyting\n"
    canon = emit_spec(parse_spec(text))
    assert canon.startswith("algebra B2\nprofile heyting\nelements 0 1\nleq 0<=1\n")
    assert emit_spec(parse_spec(canon)) == canon


CORPUS = build_corpus()
ALL = [m.alg for m in CORPUS.dli] + list(CORPUS.ki)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL))
def test_round_trip_on_corpus(alg):
    doc = from_instance(alg)
    assert parse_spec(emit_spec(doc)) == doc


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="algebr ementsqop12<=#:;\n0mxc", max_size=80))
def test_parser_only_raises_spec_errors(text):
    try:
        parse_spec(text)
    except SpecError:
        pass


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(ALL[:40]), st.integers(0, 10_000))
def test_truncated_documents_fail_cleanly(alg, cut):
    text = dump(alg)
    try:
        to_instance(parse_spec(text[: cut % (len(text) + 1)]))
    except TensekiError:
        pass


def test_document_is_plain_data():
    doc = SpecDocument("A", "dl", ("0",))
    assert emit_spec(doc) == "algebra A\nprofile dl\nelements 0\n"
    assert parse_spec(emit_spec(doc)) == doc
