"""Text formats: graph6, edge lists, DOT and certificate JSON."""

from __future__ import annotations

import json
from typing import Optional, Union

from ..graph import Graph, GraphError, build_graph
from ..oracles import Orientation
from ..patterns import MinorModel
from ..structural import Certificate, Witness

FORMATS = ("graph6", "edgelist", "dot", "json")


class ParseError(GraphError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# --- graph6 ------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 supports at most 68719476735 vertices; only n < 258048 is implemented")


def to_graph6(g: Graph) -> str:
    """Standard graph6 (no ``>>graph6<<`` header): upper triangle column by column."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        offset = len(">>graph6<<")
    else:
        offset = 0
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", offset + i)
    if not s:
        raise ParseError("empty graph6 string", offset)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported or truncated graph6 size field", offset)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", offset + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits", offset + len(s) - 1)
    return build_graph(n, edges)


# --- edge lists --------------------------------------------------------------

def to_edgelist(g: Graph) -> str:
    return "\n".join([f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n=<N>`` (optional first line) and ``u v`` lines; ``#`` starts a comment."""
    n: Optional[int] = None
    edges = []
    pos = 0
    seen_content = False
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            if body.startswith("n="):
                if seen_content:
                    raise ParseError("'n=' header must come first", pos)
                try:
                    n = int(body[2:])
                except ValueError:
                    raise ParseError(f"bad vertex count {body!r}", pos) from None
                if n < 0:
                    raise ParseError("negative vertex count", pos)
            else:
                parts = body.split()
                if len(parts) != 2 or not all(p.isdigit() for p in parts):
                    raise ParseError(f"expected 'u v', got {body!r}", pos)
                edges.append((int(parts[0]), int(parts[1])))
            seen_content = True
        pos += len(line)
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc), 0) from None


# --- DOT ---------------------------------------------------------------------

def to_dot(x: Union[Graph, Orientation]) -> str:
    if isinstance(x, Orientation):
        lines = ["digraph G {"] + [f"  {v};" for v in range(x.host.n)]
        lines += [f"  {u} -> {v};" for u, v in x.arcs()]
    else:
        lines = ["graph G {"] + [f"  {v};" for v in range(x.n)]
        lines += [f"  {u} -- {v};" for u, v in x.edges()]
    return "\n".join(lines + ["}"]) + "\n"


# --- certificate JSON --------------------------------------------------------

def certificate_to_dict(cert: Certificate) -> dict:
    return {
        "verdict": cert.verdict,
        "orientation": [list(a) for a in cert.orientation.arcs()] if cert.orientation is not None else None,
        "witness": None if cert.witness is None else {
            "pattern": cert.witness.pattern,
            "branch_sets": {str(k): list(v) for k, v in cert.witness.model.branch_sets.items()},
        },
        "reason": cert.reason,
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert))


def certificate_from_json(text: str, host: Graph) -> Certificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    if data.get("verdict") not in ("accept", "reject"):
        raise ParseError("verdict must be 'accept' or 'reject'", 0)
    orientation = None
    if data.get("orientation") is not None:
        orientation = Orientation.from_arcs(host, (tuple(a) for a in data["orientation"]))
    witness = None
    if data.get("witness") is not None:
        w = data["witness"]
        witness = Witness(w["pattern"], MinorModel.of({int(k): v for k, v in w["branch_sets"].items()}))
    return Certificate(data["verdict"], orientation, witness, data.get("reason", ""))


# --- dispatch ----------------------------------------------------------------

def serialize(x, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(x) + "\n"
    if fmt == "edgelist":
        return to_edgelist(x)
    if fmt == "dot":
        return to_dot(x)
    if fmt == "json":
        if isinstance(x, Certificate):
            return certificate_to_json(x) + "\n"
        if isinstance(x, Orientation):
            return json.dumps({"n": x.host.n, "arcs": [list(a) for a in x.arcs()]}) + "\n"
        return json.dumps({"n": x.n, "edges": [list(e) for e in x.edges()]}) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str, host: Optional[Graph] = None):
    """Inverse of :func:`serialize` for graph6, edge lists, graph JSON and certificates."""
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    if fmt == "json":
        if host is not None:
            return certificate_from_json(text, host)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.pos) from None
        return build_graph(data["n"], data["edges"])
    raise ValueError(f"cannot parse format {fmt!r}")


def read_graphs(text: str, fmt: str) -> list[Graph]:
    """One graph per non-empty line for graph6; a single graph otherwise."""
    if fmt == "graph6":
        return [from_graph6(line) for line in text.splitlines() if line.strip()]
    return [parse(text, fmt)]
