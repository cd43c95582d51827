"""Text formats: path, lasso, arrow, element and compact-open literals, plus
the graph, isomorphism and groupoid-map files read by the command line."""

from __future__ import annotations

import re
from pathlib import Path as FsPath

from .errors import LeavittError, ParseError
from .graph import Arrow, Graph, Lasso, Path
from .rings import Ring, ZZ, ring_named
from .steinberg import Element, format_element
from .stone import CompactOpen


def _fail(msg: str, at: int = 0, line: int = 1) -> ParseError:
    return ParseError(msg, line=line, column=at + 1)


# -- paths and infinite paths ----------------------------------------------

def _edge_tokens(graph: Graph, text: str) -> list[str]:
    tokens = text.split(".")
    if len(tokens) == 1 and text not in graph.edges:
        # single-character edge ids may be written without separators, e.g. "ab"
        if all(ch in graph.edges for ch in text):
            return list(text)
    return tokens


def parse_path(graph: Graph, text: str, offset: int = 0, line: int = 1) -> Path:
    t = text.strip()
    if not t:
        raise _fail("empty path", at=offset, line=line)
    if t in graph.vertices:
        return graph.vertex(t)
    tokens = _edge_tokens(graph, t)
    for tok in tokens:
        if tok not in graph.edges:
            raise _fail(f"unknown edge or vertex {tok!r}", at=offset + max(text.find(tok), 0), line=line)
    try:
        return graph.path(tokens)
    except LeavittError as exc:
        raise _fail(f"{t!r} is not a path: {exc}", at=offset, line=line) from None


_LASSO = re.compile(r"^\s*(?P<pre>[^()]*?)\.?\s*\((?P<cyc>[^()]+)\)\s*\^\s*(?:inf|∞)\s*$")


def parse_lasso(graph: Graph, text: str, offset: int = 0, line: int = 1) -> Lasso:
    m = _LASSO.match(text)
    if m is None:
        raise _fail(f"expected a lasso such as a.b(b)^inf, got {text.strip()!r}", at=offset, line=line)
    cycle = parse_path(graph, m["cyc"], offset + m.start("cyc"), line)
    if cycle.is_vertex or cycle.range != cycle.source:
        raise _fail(f"{m['cyc']!r} is not a closed path", at=offset + m.start("cyc"), line=line)
    pre_text = m["pre"].strip()
    if not pre_text:
        prefix = graph.vertex(cycle.range)
    else:
        prefix = parse_path(graph, pre_text, offset + m.start("pre"), line)
    if prefix.source != cycle.range:
        raise _fail(f"prefix {pre_text!r} does not end where the cycle starts", at=offset, line=line)
    return Lasso.make(prefix, cycle)


def parse_arrow(graph: Graph, text: str) -> Arrow:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise _fail("expected an arrow '(x, k, y)'", at=0)
    parts = t[1:-1].split(",")
    if len(parts) != 3:
        raise _fail("an arrow has exactly three components", at=0)
    x = parse_lasso(graph, parts[0], 1)
    try:
        k = int(parts[1])
    except ValueError:
        raise _fail(f"bad lag {parts[1].strip()!r}", at=len(parts[0]) + 2) from None
    y = parse_lasso(graph, parts[2], len(parts[0]) + len(parts[1]) + 3)
    try:
        return Arrow(x, k, y)
    except ValueError as exc:
        raise _fail(str(exc)) from None


def format_arrow(g: Arrow) -> str:
    return str(g)


# -- elements --------------------------------------------------------------

_COEFF_CHARS = set("0123456789+-i ")


def parse_element(graph: Graph, text: str, ring: Ring = ZZ, line: int = 1) -> Element:
    s = text
    n = len(s)
    if s.strip() == "0":
        return Element.zero(graph, ring)
    pos = 0
    triples = []
    first = True

    def skip(i: int) -> int:
        while i < n and s[i].isspace():
            i += 1
        return i

    while True:
        pos = skip(pos)
        if pos >= n:
            if first:
                raise _fail("empty element", at=pos, line=line)
            break
        sign = 1
        if not first:
            if s[pos] not in "+-":
                raise _fail(f"expected '+' between terms, found {s[pos]!r}", at=pos, line=line)
            sign = -1 if s[pos] == "-" else 1
            pos = skip(pos + 1)
        first = False
        # coefficient
        start = pos
        if pos < n and s[pos] == "(":
            close = s.find(")", pos)
            if close < 0:
                raise _fail("unclosed '('", at=pos, line=line)
            coeff_text = s[pos + 1:close]
            pos = close + 1
        else:
            while pos < n and s[pos] in _COEFF_CHARS:
                pos += 1
            coeff_text = s[start:pos].strip()
        if coeff_text in ("", "+"):
            coeff = ring.one
        elif coeff_text == "-":
            coeff = ring.neg(ring.one)
        else:
            try:
                coeff = ring.parse(coeff_text)
            except ParseError as exc:
                raise _fail(str(exc).split(": ", 1)[-1], at=start, line=line) from None
        pos = skip(pos)
        if pos < n and s[pos] == "*":
            pos = skip(pos + 1)
        if pos >= n or s[pos] != "[":
            raise _fail("expected '[' to open a cylinder", at=pos, line=line)
        close = s.find("]", pos)
        if close < 0:
            raise _fail("unclosed '['", at=pos, line=line)
        body = s[pos + 1:close]
        if "|" in body:
            left, right = body.split("|", 1)
            mu = parse_path(graph, left, pos + 1, line)
            nu = parse_path(graph, right, pos + 2 + len(left), line)
        else:
            mu = nu = parse_path(graph, body, pos + 1, line)
        if mu.source != nu.source:
            raise _fail(f"[{body}]: s({mu}) != s({nu})", at=pos, line=line)
        triples.append((mu, nu, coeff if sign > 0 else ring.neg(coeff)))
        pos = close + 1
    return Element.from_terms(graph, triples, ring)


def parse_class(graph: Graph, text: str, ring: Ring = ZZ):
    """A Weyl class literal ``[(n, x)]`` as printed by :class:`WeylClass`."""
    from .weyl import WeylClass

    t = text.strip()
    if not (t.startswith("[(") and t.endswith(")]")):
        raise _fail("expected a class such as [(1*[e|v], (e)^inf)]", at=0)
    inner = t[2:-2]
    cut = inner.rfind(",")
    if cut < 0:
        raise _fail("a class needs an element and a base point", at=2)
    n = parse_element(graph, inner[:cut], ring)
    x = parse_lasso(graph, inner[cut + 1:], cut + 3)
    try:
        return WeylClass(n, x)
    except LeavittError as exc:
        raise _fail(str(exc), at=0) from None


# -- compact opens ---------------------------------------------------------

def parse_compact_open(graph: Graph, text: str) -> CompactOpen:
    t = text.strip()
    if not (t.startswith("{") and t.endswith("}")):
        raise _fail("expected a set such as {a, b.b}", at=0)
    inner = t[1:-1]
    items = [x for x in inner.split(",") if x.strip()]
    offset = text.find("{") + 1
    paths = []
    for item in items:
        paths.append(parse_path(graph, item, offset))
        offset += len(item) + 1
    return CompactOpen.of(graph, paths)


# -- graph files -----------------------------------------------------------

def parse_graph(text: str, name: str = "") -> Graph:
    vertices: list[str] = []
    edges: dict[str, tuple[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        spans = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if not spans:
            continue
        words = [w for w, _ in spans]
        col = {i: c for i, (_, c) in enumerate(spans)}
        if words[0] == "vertex":
            if len(words) != 2:
                raise ParseError("expected 'vertex <id>'", lineno, col[0])
            if words[1] in vertices:
                raise ParseError(f"duplicate vertex {words[1]!r}", lineno, col[1])
            vertices.append(words[1])
        elif words[0] == "edge":
            if len(words) != 4:
                raise ParseError("expected 'edge <id> range=<v> source=<v>'", lineno, col[0])
            fields = {}
            for i in (2, 3):
                key, eq, val = words[i].partition("=")
                if not eq or key not in ("range", "source") or not val:
                    raise ParseError(f"bad field {words[i]!r}", lineno, col[i])
                fields[key] = val
            if set(fields) != {"range", "source"}:
                raise ParseError("edge needs both range= and source=", lineno, col[0])
            if words[1] in edges:
                raise ParseError(f"duplicate edge {words[1]!r}", lineno, col[1])
            edges[words[1]] = (fields["range"], fields["source"])
        else:
            raise ParseError(f"unknown record {words[0]!r}", lineno, col[0])
    for e, (r, s) in edges.items():
        for v in (r, s):
            if v not in vertices:
                raise ParseError(f"edge {e!r} mentions undeclared vertex {v!r}", 1, 1)
    try:
        return Graph(vertices, edges, name)
    except LeavittError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e} range={g.r(e)} source={g.s(e)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    p = FsPath(path)
    return parse_graph(p.read_text(), p.stem)


# -- sectioned files (isomorphism specs and groupoid maps) -----------------

def _sections(text: str) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("[") and body.endswith("]"):
            current = body[1:-1].strip()
            if current in out:
                raise ParseError(f"duplicate section [{current}]", lineno, 1)
            out[current] = []
            continue
        if current is None:
            raise ParseError("content before the first section", lineno, 1)
        out[current].append((lineno, body))
    return out


def _graph_ref(sections, name: str, base: FsPath, cache: dict) -> tuple[Graph, str]:
    if name not in sections or not sections[name]:
        raise ParseError(f"missing section [{name}]")
    lineno, body = sections[name][0]
    key, eq, val = body.partition("=")
    ref = val.strip() if eq else body
    target = (base / ref).resolve()
    if target not in cache:
        if not target.exists():
            raise ParseError(f"graph file {ref!r} not found", lineno, 1)
        cache[target] = load_graph(target)
    return cache[target], ref


def _images(graph_src: Graph, graph_tgt: Graph, ring: Ring, lines) -> tuple[dict, dict, dict]:
    p, s, t = {}, {}, {}
    for lineno, body in lines:
        lhs, eq, rhs = body.partition("=")
        words = lhs.split()
        if not eq or len(words) != 2 or words[0] not in ("p", "s", "t"):
            raise ParseError("expected 'p <v> = ...', 's <e> = ...' or 't <e> = ...'", lineno, 1)
        kind, ident = words
        known = graph_src.vertices if kind == "p" else graph_src.edges
        if ident not in known:
            raise ParseError(f"unknown {'vertex' if kind == 'p' else 'edge'} {ident!r}", lineno, 1)
        offset = len(lhs) + 1
        try:
            elem = parse_element(graph_tgt, rhs, ring, lineno)
        except ParseError as exc:
            raise ParseError(exc.args[0].split(": ", 1)[-1], lineno, exc.column + offset) from None
        {"p": p, "s": s, "t": t}[kind][ident] = elem
    return p, s, t


def parse_iso(text: str, base_dir=".", name: str = ""):
    from .iso import IsoSpec

    base = FsPath(base_dir)
    sections = _sections(text)
    cache: dict = {}
    src, src_ref = _graph_ref(sections, "source", base, cache)
    tgt, tgt_ref = _graph_ref(sections, "target", base, cache)
    twist, ring_name = "identity", None
    for lineno, body in sections.get("twist", []):
        key, _, val = (x.strip() for x in body.partition("="))
        if key == "ring":
            twist = val
        elif key == "coefficients":
            ring_name = val
        else:
            raise ParseError(f"unknown twist setting {key!r}", lineno, 1)
    if twist not in ("identity", "conjugation"):
        raise ParseError(f"twist must be identity or conjugation, not {twist!r}")
    if ring_name is None:
        ring_name = "gauss" if twist == "conjugation" else "int"
    try:
        ring = ring_named(ring_name)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if "images" not in sections:
        raise ParseError("missing section [images]")
    p, s, t = _images(src, tgt, ring, sections["images"])
    spec = IsoSpec(src, tgt, ring, p, s, t, twist, name=name)
    if "inverse" in sections:
        ip, is_, it = _images(tgt, src, ring, sections["inverse"])
        spec.inverse = IsoSpec(tgt, src, ring, ip, is_, it, twist, spec, f"{name}^-1" if name else "")
    spec.refs = (src_ref, tgt_ref)
    return spec


def load_iso(path):
    p = FsPath(path)
    return parse_iso(p.read_text(), p.parent, p.stem)


def format_iso(spec, source_ref: str, target_ref: str) -> str:
    def block(sp) -> list[str]:
        lines = [f"p {v} = {format_element(sp.p[v])}" for v in sp.source.vertices]
        for e in sp.source.edges:
            lines.append(f"s {e} = {format_element(sp.s[e])}")
            lines.append(f"t {e} = {format_element(sp.t[e])}")
        return lines

    out = ["[source]", f"graph = {source_ref}", "", "[target]", f"graph = {target_ref}", "",
           "[twist]", f"ring = {spec.twist}", f"coefficients = {spec.ring.name}", "",
           "[images]", *block(spec)]
    if spec.inverse is not None:
        out += ["", "[inverse]", *block(spec.inverse)]
    return "\n".join(out) + "\n"


_MAP_LINE = re.compile(r"^(vertex|edge)\s+(\S+)\s*->\s*(\S+)$")


def parse_omega(text: str, base_dir=".", name: str = ""):
    """A groupoid map given by a graph isomorphism; returns ``(om, source_ref, target_ref)``."""
    from .iso import GroupoidIso, check_graph_map

    base = FsPath(base_dir)
    sections = _sections(text)
    cache: dict = {}
    src, src_ref = _graph_ref(sections, "source", base, cache)
    tgt, tgt_ref = _graph_ref(sections, "target", base, cache)
    vmap, emap = {}, {}
    for lineno, body in sections.get("map", []):
        m = _MAP_LINE.match(body)
        if m is None:
            raise ParseError("expected 'vertex <u> -> <v>' or 'edge <e> -> <f>'", lineno, 1)
        kind, a, b = m.groups()
        (vmap if kind == "vertex" else emap)[a] = b
    bad = check_graph_map(src, tgt, vmap, emap)
    if bad:
        raise ParseError(bad[0])
    return GroupoidIso.from_graph_map(src, tgt, vmap, emap, name=name), src_ref, tgt_ref


def load_omega(path):
    p = FsPath(path)
    return parse_omega(p.read_text(), p.parent, p.stem)
