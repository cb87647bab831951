"""graph6, plain edge-list and ocg-json readers and writers."""

from __future__ import annotations

import json

from .errors import InvalidInput, ParseError, RamseyDegError
from .structures import Graph, OrderedColoredGraph

FORMATS = ("graph6", "edges", "ocg-json")
_G6_HEADER = ">>graph6<<"


# graph6 ---------------------------------------------------------------------


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = g.edge_bits()
    bits += "0" * (-len(bits) % 6)
    body = "".join(chr(63 + int(bits[i : i + 6], 2)) for i in range(0, len(bits), 6))
    return _g6_size(g.vertex_count) + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s, base = s[len(_G6_HEADER) :], len(_G6_HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", base + len(vals))
        n, pos = 0, 8
        for x in vals[2:8]:
            n = n << 6 | x
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", base + len(vals))
        n, pos = 0, 4
        for x in vals[1:4]:
            n = n << 6 | x
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} adjacency bytes, found {len(vals) - pos}", base + min(len(vals), pos + need))
    bits = "".join(format(x, "06b") for x in vals[pos:])
    if "1" in bits[nbits:]:
        raise ParseError("nonzero padding bits", base + len(vals) - 1)
    edges, b = [], 0
    for j in range(1, n):
        for i in range(j):
            if bits[b] == "1":
                edges.append((i, j))
            b += 1
    return Graph(n, tuple(edges))


# edge list ------------------------------------------------------------------


def edgelist_encode(g: Graph) -> str:
    return "\n".join([str(g.vertex_count)] + [f"{a} {b}" for a, b in g.edges]) + "\n"


def edgelist_decode(text: str) -> Graph:
    offset = 0
    v = None
    edges = []
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"non-integer token in {body!r}", offset) from None
            if v is None:
                if len(nums) != 1 or nums[0] < 0:
                    raise ParseError("first line must be the vertex count", offset)
                v = nums[0]
            else:
                if len(nums) != 2:
                    raise ParseError("edge lines need exactly two endpoints", offset)
                edges.append((offset, tuple(nums)))
        offset += len(line.encode())
    if v is None:
        raise ParseError("missing vertex count", 0)
    for off, e in edges:
        try:
            Graph(v, (e,))
        except InvalidInput as exc:
            raise ParseError(str(exc), off) from None
    return Graph(v, tuple(e for _, e in edges))


# ocg-json -------------------------------------------------------------------


def ocg_to_dict(x) -> dict:
    if isinstance(x, Graph):
        x = OrderedColoredGraph(x, 1, None, False)
    d = {
        "vertices": x.vertex_count,
        "edges": [list(e) for e in x.graph.edges],
        "n": x.n,
        "ordered": x.ordered,
    }
    if x.coloring is not None:
        d["colors"] = list(x.coloring)
    return d


def ocg_from_dict(d) -> OrderedColoredGraph:
    if not isinstance(d, dict):
        raise ParseError("ocg-json record must be an object", 0)
    try:
        v = d["vertices"]
        edges = d.get("edges", [])
        n = d.get("n", 1)
        colors = d.get("colors")
        ordered = d.get("ordered", True)
        if not isinstance(v, int) or not isinstance(n, int) or not isinstance(ordered, bool):
            raise ParseError("fields vertices/n must be integers and ordered a boolean", 0)
        return OrderedColoredGraph(Graph(v, tuple(tuple(e) for e in edges)), n, None if colors is None else tuple(colors), ordered)
    except KeyError as exc:
        raise ParseError(f"missing field {exc}", 0) from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, RamseyDegError):
            raise ParseError(str(exc), 0) from None
        raise ParseError(f"malformed record: {exc}", 0) from None


def ocg_encode(x) -> str:
    return json.dumps(ocg_to_dict(x), sort_keys=True)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None


def ocg_decode(text: str) -> OrderedColoredGraph:
    return ocg_from_dict(_load_json(text))


# dispatch -------------------------------------------------------------------


def codec_write(fmt: str, x) -> str:
    if fmt == "ocg-json":
        return ocg_encode(x)
    if isinstance(x, OrderedColoredGraph):
        if x.coloring is not None:
            raise InvalidInput(f"{fmt} cannot carry a coloring")
        x = x.graph
    if fmt == "graph6":
        return graph6_encode(x)
    if fmt == "edges":
        return edgelist_encode(x)
    raise InvalidInput(f"unknown format {fmt!r}")


def codec_read(fmt: str, payload: str):
    if fmt == "graph6":
        return graph6_decode(payload)
    if fmt == "edges":
        return edgelist_decode(payload)
    if fmt == "ocg-json":
        return ocg_decode(payload)
    raise InvalidInput(f"unknown format {fmt!r}")


def sniff_format(payload: str, name: str = "") -> str:
    low = name.lower()
    if low.endswith((".g6", ".graph6")):
        return "graph6"
    if low.endswith(".json"):
        return "ocg-json"
    if low.endswith((".txt", ".edges", ".el")):
        return "edges"
    head = payload.lstrip()
    if head.startswith(("{", "[")):
        return "ocg-json"
    first = head.split("\n", 1)[0].strip()
    if first.isdigit():
        return "edges"
    return "graph6"


def read_many(fmt: str, payload: str) -> list:
    """Several structures: graph6 lines or an ocg-json array."""
    if fmt == "graph6":
        return [graph6_decode(line) for line in payload.splitlines() if line.strip()]
    if fmt == "ocg-json":
        data = _load_json(payload)
        return [ocg_from_dict(d) for d in (data if isinstance(data, list) else [data])]
    return [codec_read(fmt, payload)]
