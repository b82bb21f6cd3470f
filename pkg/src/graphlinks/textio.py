"""Plain-text file format for labeled graphs, looped graphs and chord diagrams.

::

    graphlink v1 labeled        graphlink v1 looped        graphlink v1 chords
    v 1 0 +                     v 1 1                      D: a b a b
    v 2 1 -                     v 2 0                      c a 0 +
    e 1 2                       e 1 2                      c b 1 -

Blank lines and ``#`` comments are ignored.  Ids made of digits are read as ints.
"""

from __future__ import annotations

from .chords import ChordDiagram
from .errors import ParseError
from .graph import LabeledGraph, LoopedGraph, parse_sign, sign_char

KINDS = ("labeled", "looped", "chords")


def parse_id(tok: str):
    return int(tok) if tok.isdigit() else tok


def _bit(tok: str, what: str, line: int) -> int:
    if tok not in ("0", "1"):
        raise ParseError(f"{what} must be 0 or 1, got {tok!r}", line)
    return int(tok)


def _sign(tok: str, line: int) -> int:
    try:
        return parse_sign(tok)
    except (ValueError, TypeError):
        raise ParseError(f"sign must be + or -, got {tok!r}", line) from None


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse(text: str):
    """Read a :class:`LabeledGraph`, :class:`LoopedGraph` or :class:`ChordDiagram`."""
    lines = _content_lines(text)
    try:
        no, head = next(lines)
    except StopIteration:
        raise ParseError("missing header 'graphlink v1 <kind>'", 1) from None
    if len(head) != 3 or head[:2] != ["graphlink", "v1"] or head[2] not in KINDS:
        raise ParseError(f"bad header {' '.join(head)!r}", no)
    kind = head[2]
    if kind == "chords":
        return _parse_chords(lines)
    return _parse_graph(kind, lines)


def _parse_graph(kind: str, lines):
    records: list = []
    edges: list = []
    seen_v: set = set()
    seen_e: set = set()
    width = 4 if kind == "labeled" else 3
    for no, toks in lines:
        tag = toks[0]
        if tag == "v":
            if len(toks) != width:
                raise ParseError(f"vertex line needs {width - 1} fields", no)
            v = parse_id(toks[1])
            if v in seen_v:
                raise ParseError(f"duplicate vertex {v!r}", no)
            seen_v.add(v)
            if kind == "labeled":
                records.append((v, _bit(toks[2], "framing", no), _sign(toks[3], no)))
            else:
                records.append((v, bool(_bit(toks[2], "loop flag", no))))
        elif tag == "e":
            if len(toks) != 3:
                raise ParseError("edge line needs two ids", no)
            a, b = parse_id(toks[1]), parse_id(toks[2])
            for x in (a, b):
                if x not in seen_v:
                    raise ParseError(f"edge references undeclared vertex {x!r}", no)
            if a == b:
                raise ParseError(f"loop edge at {a!r}; use the loop flag of a looped graph", no)
            key = frozenset((a, b))
            if key in seen_e:
                raise ParseError(f"duplicate edge {a!r} {b!r}", no)
            seen_e.add(key)
            edges.append((a, b))
        else:
            raise ParseError(f"unknown line tag {tag!r}", no)
    if kind == "labeled":
        return LabeledGraph(records, edges)
    return LoopedGraph(records, edges)


def _parse_chords(lines):
    word = None
    labels: dict = {}
    for no, toks in lines:
        tag = toks[0]
        if tag == "D:":
            if word is not None:
                raise ParseError("second word line", no)
            word = [parse_id(t) for t in toks[1:]]
            counts: dict = {}
            for t in word:
                counts[t] = counts.get(t, 0) + 1
            odd = [t for t, c in counts.items() if c != 2]
            if odd:
                raise ParseError(f"chord {odd[0]!r} must occur exactly twice", no)
        elif tag == "c":
            if word is None:
                raise ParseError("chord label before the word line", no)
            if len(toks) != 4:
                raise ParseError("chord line needs token, framing and sign", no)
            t = parse_id(toks[1])
            if t not in word:
                raise ParseError(f"label for unknown chord {t!r}", no)
            if t in labels:
                raise ParseError(f"duplicate label for chord {t!r}", no)
            labels[t] = (_bit(toks[2], "framing", no), _sign(toks[3], no))
        else:
            raise ParseError(f"unknown line tag {tag!r}", no)
    return ChordDiagram(word or [], labels)


def dump(obj) -> str:
    """Inverse of :func:`parse`; vertices and edges in graph order."""
    if isinstance(obj, ChordDiagram):
        out = ["graphlink v1 chords", "D: " + " ".join(map(str, obj.word)) if obj.word else "D:"]
        for c in obj.chords:
            lab = obj.labels[c]
            out.append(f"c {c} {lab.framing} {sign_char(lab.sign)}")
        return "\n".join(out) + "\n"
    if isinstance(obj, LabeledGraph):
        out = ["graphlink v1 labeled"]
        out += [f"v {v} {obj.framing(v)} {sign_char(obj.sign(v))}" for v in obj.vertices]
    elif isinstance(obj, LoopedGraph):
        out = ["graphlink v1 looped"]
        out += [f"v {v} {int(obj.is_looped(v))}" for v in obj.vertices]
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    out += [f"e {a} {b}" for a, b in obj.edges]
    return "\n".join(out) + "\n"


def dump_record(g) -> str:
    """One-line form of a graph: the file lines joined by `` | ``."""
    return " | ".join(dump(g).splitlines())


def parse_record(line: str):
    return parse("\n".join(part.strip() for part in line.split("|")))


def read_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


__all__ = ["parse", "dump", "dump_record", "parse_record", "parse_id", "read_file", "KINDS"]
