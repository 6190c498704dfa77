"""In-process SPARQL endpoint stub for exercising the client protocol.

Understands exactly the query shapes the extractor emits (assertion paging,
typing paging, VALUES typing batches), applies real ORDER BY / LIMIT /
cursor-FILTER semantics over an in-memory triple list, and can be told to
fail the first N requests to exercise the retry path.
"""

from __future__ import annotations

import json
import re
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

_LIMIT_RE = re.compile(r"LIMIT (\d+)")
_STR_GT_RE = re.compile(r'STR\(\?(\w)\) > "((?:[^"\\]|\\.)*)"')
_STR_EQ_RE = re.compile(r'STR\(\?(\w)\) = "((?:[^"\\]|\\.)*)"')
_VALUES_RE = re.compile(r"VALUES \?i \{ ([^}]*) \}")


def _unescape(s: str) -> str:
    return s.replace('\\"', '"').replace("\\\\", "\\")


class SparqlStub:
    def __init__(self, relations, typings, fail_first: int = 0):
        # relations: list of (s, p, o) IRIs; typings: list of (ind, class)
        self.relations = sorted(set(relations))
        self.typings = sorted(set(typings))
        self.fail_first = fail_first
        self.requests_seen = 0
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):
                pass

            def do_GET(self):
                stub.requests_seen += 1
                if stub.requests_seen <= stub.fail_first:
                    self.send_response(503)
                    self.end_headers()
                    return
                query = parse_qs(urlparse(self.path).query)["query"][0]
                payload = stub.answer(query)
                body = json.dumps(payload).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/sparql-results+json")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)

    def __enter__(self):
        self.thread.start()
        return f"http://127.0.0.1:{self.server.server_address[1]}/sparql"

    def __exit__(self, *exc):
        self.server.shutdown()

    def answer(self, query: str) -> dict:
        limit = int(_LIMIT_RE.search(query).group(1)) if _LIMIT_RE.search(query) else None
        cursor = self._cursor_from_filter(query)

        if "VALUES ?i" in query:
            wanted = set(re.findall(r"<([^>]*)>", _VALUES_RE.search(query).group(1)))
            rows = sorted((i, c) for i, c in self.typings if i in wanted)
            return self._result(("i", "c"), rows)

        if "?s ?p ?o" in query:
            rows = self.relations
            if cursor:
                rows = [r for r in rows if r > cursor]
            if limit is not None:
                rows = rows[:limit]
            return self._result(("s", "p", "o"), rows)

        # typing paging: ?s a ?c
        rows = self.typings
        if cursor:
            rows = [r for r in rows if r > cursor]
        if limit is not None:
            rows = rows[:limit]
        return self._result(("s", "c"), rows)

    @staticmethod
    def _cursor_from_filter(query: str):
        gts = _STR_GT_RE.findall(query)
        eqs = _STR_EQ_RE.findall(query)
        if not gts:
            return None
        by_var = {}
        for var, val in eqs:
            by_var[var] = _unescape(val)
        # deepest > for each var wins where no = binding exists
        cursor = []
        order = {"s": 0, "p": 1, "o": 2, "c": 1}
        slots: dict[int, str] = {}
        for var, val in gts + eqs:
            slots.setdefault(order[var], _unescape(val))
        for i in sorted(slots):
            cursor.append(slots[i])
        return tuple(cursor)

    @staticmethod
    def _result(variables, rows) -> dict:
        return {
            "head": {"vars": list(variables)},
            "results": {
                "bindings": [
                    {v: {"type": "uri", "value": val} for v, val in zip(variables, row)}
                    for row in rows
                ]
            },
        }
