"""SPARQL 1.1 Protocol client with keyset pagination and retry.

Pagination is cursor-based on the full (s, p, o) sort key rather than
OFFSET, because large public endpoints truncate or shuffle deep OFFSET
pages. Every page body is checksummed into a fetch log that the pipeline
copies into its run manifest.
"""

from __future__ import annotations

import hashlib
import logging
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

import requests

from ..model import (
    ClassAssertion,
    Named,
    ObjectPropertyAssertion,
    clazz,
    individual,
    obj_prop,
)
from ..rdfio.terms import OWL_NAMED_INDIVIDUAL, OWL_OBJECT_PROPERTY, OWL_THING, OWL_CLASS

logger = logging.getLogger(__name__)


class EndpointError(RuntimeError):
    pass


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


@dataclass
class SparqlClient:
    endpoint_url: str
    page_size: int = 10000
    max_retries: int = 5
    backoff: float = 0.5
    timeout: float = 60.0
    session: Optional[requests.Session] = None
    fetch_log: list = field(default_factory=list)

    def _http(self) -> requests.Session:
        if self.session is None:
            self.session = requests.Session()
        return self.session

    def select(self, query: str) -> list[dict]:
        """Run one SELECT, return the binding rows, log a checksum."""
        delay = self.backoff
        last_error: Optional[Exception] = None
        for attempt in range(self.max_retries):
            try:
                resp = self._http().get(
                    self.endpoint_url,
                    params={"query": query},
                    headers={"Accept": "application/sparql-results+json"},
                    timeout=self.timeout,
                )
                if resp.status_code >= 500:
                    raise EndpointError(f"endpoint returned {resp.status_code}")
                resp.raise_for_status()
                body = resp.content
                self.fetch_log.append(
                    {
                        "endpoint": self.endpoint_url,
                        "query": query,
                        "sha256": hashlib.sha256(body).hexdigest(),
                        "rows": None,
                    }
                )
                rows = resp.json()["results"]["bindings"]
                self.fetch_log[-1]["rows"] = len(rows)
                return rows
            except (requests.RequestException, EndpointError, KeyError, ValueError) as e:
                last_error = e
                if attempt + 1 < self.max_retries:
                    logger.warning(
                        "SPARQL request failed (%s); retrying in %.1fs", e, delay
                    )
                    time.sleep(delay)
                    delay *= 2
        raise EndpointError(
            f"endpoint {self.endpoint_url} unreachable after {self.max_retries} attempts"
        ) from last_error

    def select_paged(self, body: str, variables: tuple[str, ...]) -> Iterator[dict]:
        """Keyset-paginate `body` over the given projection variables."""
        cursor: Optional[tuple[str, ...]] = None
        while True:
            flt = ""
            if cursor is not None:
                flt = f"FILTER({_cursor_filter(variables, cursor)})"
            projection = " ".join(f"?{v}" for v in variables)
            order = " ".join(f"?{v}" for v in variables)
            query = (
                f"SELECT {projection} WHERE {{ {body} {flt} }} "
                f"ORDER BY {order} LIMIT {self.page_size}"
            )
            rows = self.select(query)
            for row in rows:
                yield row
            if len(rows) < self.page_size:
                return
            last = rows[-1]
            cursor = tuple(last[v]["value"] for v in variables)


def _cursor_filter(variables: tuple[str, ...], cursor: tuple[str, ...]) -> str:
    # (s > S) || (s = S && (p > P || (p = P && o > O)))
    v, val = variables[0], _escape(cursor[0])
    if len(variables) == 1:
        return f'STR(?{v}) > "{val}"'
    rest = _cursor_filter(variables[1:], cursor[1:])
    return f'STR(?{v}) > "{val}" || (STR(?{v}) = "{val}" && ({rest}))'


_ASSERTION_BODY = (
    "?s ?p ?o . "
    f"?s a <{OWL_NAMED_INDIVIDUAL}> . "
    f"?o a <{OWL_NAMED_INDIVIDUAL}> . "
    f"?p a <{OWL_OBJECT_PROPERTY}> ."
)

_TYPING_BODY = f"?s a ?c . ?c a <{OWL_CLASS}> ."


class SparqlSource:
    """GraphSource over a SPARQL endpoint; see sources.GraphSource."""

    def __init__(self, client: SparqlClient, values_batch: int = 500):
        self.client = client
        self.values_batch = values_batch

    def object_property_assertions(self) -> Iterator[ObjectPropertyAssertion]:
        for row in self.client.select_paged(_ASSERTION_BODY, ("s", "p", "o")):
            if any(row[v]["type"] != "uri" for v in ("s", "p", "o")):
                continue
            yield ObjectPropertyAssertion(
                individual(row["s"]["value"]),
                obj_prop(row["p"]["value"]),
                individual(row["o"]["value"]),
            )

    def class_assertions_for(self, individuals: frozenset[str]) -> Iterator[ClassAssertion]:
        batch: list[str] = []
        for iri in sorted(individuals):
            batch.append(iri)
            if len(batch) == self.values_batch:
                yield from self._typings_batch(batch)
                batch = []
        if batch:
            yield from self._typings_batch(batch)

    def _typings_batch(self, batch: list[str]) -> Iterator[ClassAssertion]:
        values = " ".join(f"<{iri}>" for iri in batch)
        body = f"VALUES ?i {{ {values} }} ?i a ?c . ?c a <{OWL_CLASS}> ."
        query = f"SELECT ?i ?c WHERE {{ {body} }} ORDER BY ?i ?c"
        for row in self.client.select(query):
            if row["c"]["type"] != "uri" or row["c"]["value"] in (
                OWL_THING,
                OWL_NAMED_INDIVIDUAL,
            ):
                continue
            yield ClassAssertion(
                individual(row["i"]["value"]), Named(clazz(row["c"]["value"]))
            )

    def typing_subjects(self) -> Iterator[str]:
        for row in self.client.select_paged(_TYPING_BODY, ("s", "c")):
            if row["s"]["type"] == "uri":
                yield row["s"]["value"]
