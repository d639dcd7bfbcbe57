from __future__ import annotations

import re

import pytest

from colorings import certificate
from colorings.certificate import Certificate
from errors import CertificateParseError


@pytest.fixture(scope="module")
def cert_t3(t3_q2):
    return Certificate.from_coloring(t3_q2)


def test_header_fields(cert_t3):
    assert (cert_t3.n, cert_t3.q, cert_t3.k, cert_t3.construction) == (7, 2, 7, "theorem3")
    assert cert_t3.schema_version == certificate.SCHEMA_VERSION
    assert len(cert_t3.edges) == 21
    assert "partition" in cert_t3.metadata


def test_write_read_write_identical(cert_t3, tmp_path):
    p1 = certificate.write(cert_t3, tmp_path / "a.cert")
    again = certificate.read(p1)
    p2 = certificate.write(again, tmp_path / "b.cert")
    assert p1.read_bytes() == p2.read_bytes()
    assert again == cert_t3


def test_to_coloring_round_trip(t5_q2):
    col = Certificate.from_coloring(t5_q2).to_coloring()
    assert col.color_of == t5_q2.color_of
    assert col.partition == t5_q2.partition
    assert col.provenance["q"] == 2 and col.provenance["construction"] == "theorem5"


def test_truncated_file(cert_t3):
    lines = certificate.dumps(cert_t3).splitlines()
    with pytest.raises(CertificateParseError, match="truncated") as exc:
        certificate.loads("\n".join(lines[:-3]) + "\n")
    assert exc.value.line == len(lines) - 2


def test_malformed_json_reports_position(cert_t3):
    lines = certificate.dumps(cert_t3).splitlines()
    lines[4] = "[0, 4,"
    with pytest.raises(CertificateParseError) as exc:
        certificate.loads("\n".join(lines))
    assert exc.value.line == 5 and exc.value.column > 1
    assert re.match(r"line 5, column \d+", str(exc.value))


def test_bad_schema_version(cert_t3):
    text = certificate.dumps(cert_t3).replace('"schema_version":1', '"schema_version":99', 1)
    with pytest.raises(CertificateParseError, match="schema_version"):
        certificate.loads(text)


def test_out_of_order_and_bad_color(cert_t3):
    lines = certificate.dumps(cert_t3).splitlines()
    swapped = [lines[0], lines[2], lines[1]] + lines[3:]
    with pytest.raises(CertificateParseError, match="canonical order"):
        certificate.loads("\n".join(swapped))
    lines[1] = "[0,1,99]"
    with pytest.raises(CertificateParseError, match="outside"):
        certificate.loads("\n".join(lines))


def test_empty_file():
    with pytest.raises(CertificateParseError):
        certificate.loads("")


def test_csv_round_trip(cert_t3):
    text = certificate.export(cert_t3, "csv")
    assert text.splitlines()[1] == "u,v,color"
    assert certificate.from_csv(text) == cert_t3


def test_dot_export(cert_t3):
    dot = certificate.export(cert_t3, "dot")
    assert dot.startswith("graph K7 {")
    edges = [l for l in dot.splitlines() if " -- " in l]
    assert len(edges) == 21
    vertices = [l for l in dot.splitlines() if re.fullmatch(r"\s+\d+;", l)]
    assert len(vertices) == 7
    pens = {re.search(r'color="([^"]+)"', l).group(1) for l in edges}
    labels = {re.search(r'label="(\d+)"', l).group(1) for l in edges}
    assert len(pens) == 7 and len(labels) == 7


def test_unknown_format(cert_t3):
    with pytest.raises(ValueError):
        certificate.export(cert_t3, "svg")


def test_pen_colors_distinct_large_k():
    assert len(set(certificate.pen_colors(4125))) == 4125
