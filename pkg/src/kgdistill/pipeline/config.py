"""Pipeline configuration, decision files, and curation reports."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Optional, Union

from ..model import (
    Axiom,
    Box,
    ClassAssertion,
    EntityKind,
    Named,
    ObjectPropertyAssertion,
    classify_box,
)
from ..rdfio.terms import RDF_TYPE
from ..reasoner import Clash

VARIANTS = ("base", "materialize")


@dataclass(frozen=True)
class PipelineConfig:
    source_files: tuple[str, ...] = ()
    schema_files: tuple[str, ...] = ()
    endpoint_url: Optional[str] = None
    catalog: Optional[str] = None
    allow_http_imports: bool = False
    infer_declarations: bool = False
    k: int = 1
    degree_includes_types: bool = False
    fixpoint_extraction: bool = False
    variant: str = "both"  # base | materialize | both
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1)
    seed: int = 0
    decision_file: Optional[str] = None
    output_dir: str = "out"
    dataset_name: str = "dataset"
    reasoner: str = "builtin"  # builtin | external:<dir>
    una: bool = True
    one_based_ids: bool = False
    strict_punning: bool = False
    page_size: int = 10000

    def validate(self) -> "PipelineConfig":
        if abs(sum(self.ratios) - 1.0) > 1e-9 or any(r <= 0 for r in self.ratios):
            raise ValueError(f"split ratios must be positive and sum to 1: {self.ratios}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.variant not in ("base", "materialize", "both"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if not (self.reasoner == "builtin" or self.reasoner.startswith("external:")):
            raise ValueError(f"unknown reasoner {self.reasoner!r}")
        if not self.source_files and not self.endpoint_url:
            raise ValueError("either source_files or endpoint_url is required")
        if self.endpoint_url and not self.schema_files:
            raise ValueError("endpoint mode needs schema_files for the schema documents")
        return self

    def variants(self) -> tuple[str, ...]:
        return VARIANTS if self.variant == "both" else (self.variant,)

    def dataset_label(self) -> str:
        return f"{self.dataset_name}-{self.k}"

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    def config_hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()

    @staticmethod
    def from_json(data: Union[str, bytes]) -> "PipelineConfig":
        raw = json.loads(data)
        for key in ("source_files", "schema_files"):
            if key in raw:
                raw[key] = tuple(raw[key])
        if "ratios" in raw:
            raw["ratios"] = tuple(raw["ratios"])
        return PipelineConfig(**raw)

    @staticmethod
    def load(path: Union[str, Path], **overrides) -> "PipelineConfig":
        config = PipelineConfig.from_json(Path(path).read_text(encoding="utf-8"))
        cleaned = {k: v for k, v in overrides.items() if v is not None}
        return replace(config, **cleaned) if cleaned else config


@dataclass(frozen=True)
class Removal:
    subject: str
    predicate: str
    object: str

    def to_axiom(self) -> Axiom:
        from ..model import clazz, individual, obj_prop

        if self.predicate == RDF_TYPE:
            return ClassAssertion(individual(self.subject), Named(clazz(self.object)))
        return ObjectPropertyAssertion(
            individual(self.subject), obj_prop(self.predicate), individual(self.object)
        )


def removal_of(ax: Axiom) -> Optional[Removal]:
    if isinstance(ax, ObjectPropertyAssertion):
        return Removal(ax.subject.iri, ax.property.iri, ax.object.iri)
    if isinstance(ax, ClassAssertion) and isinstance(ax.expr, Named):
        return Removal(ax.individual.iri, RDF_TYPE, ax.expr.entity.iri)
    return None


@dataclass(frozen=True)
class Rename:
    from_iri: str
    to_iri: str
    kind: EntityKind


@dataclass
class DecisionFile:
    removals: list[Removal] = field(default_factory=list)
    renames: list[Rename] = field(default_factory=list)
    accept_all_suggestions: bool = False

    @staticmethod
    def load(path: Union[str, Path]) -> "DecisionFile":
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        return DecisionFile(
            removals=[
                Removal(r["subject"], r["predicate"], r["object"])
                for r in raw.get("removals", [])
            ],
            renames=[
                Rename(r["from_iri"], r["to_iri"], EntityKind(r["kind"]))
                for r in raw.get("renames", [])
            ],
            accept_all_suggestions=raw.get("accept_all_suggestions", False),
        )

    def save(self, path: Union[str, Path]) -> None:
        payload = {
            "removals": [asdict(r) for r in self.removals],
            "renames": [
                {"from_iri": r.from_iri, "to_iri": r.to_iri, "kind": r.kind.value}
                for r in self.renames
            ],
            "accept_all_suggestions": self.accept_all_suggestions,
        }
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


class CurationNeededError(RuntimeError):
    """Raised when clashes remain and no decision file covers them (exit 2)."""

    def __init__(self, report: "CurationReport", path: Optional[Path] = None):
        super().__init__(
            f"{len(report.clashes)} clash(es) need curation decisions"
            + (f"; report written to {path}" if path else "")
        )
        self.report = report
        self.path = path


@dataclass
class CurationReport:
    clashes: list[Clash]
    suggested_removals: list[Removal]
    punning_conflicts: dict[str, list[str]]
    unresolved: int

    @staticmethod
    def from_clashes(clashes: list[Clash], punning: dict) -> "CurationReport":
        suggestions: dict[Removal, None] = {}
        unresolved = 0
        for clash in clashes:
            clash_abox = []
            for just in clash.justifications:
                for ax in sorted(just.support, key=lambda a: a.key()):
                    if classify_box(ax) is Box.ABOX:
                        r = removal_of(ax)
                        if r is not None:
                            clash_abox.append(r)
            if clash_abox:
                for r in clash_abox:
                    suggestions.setdefault(r)
            else:
                unresolved += 1
        return CurationReport(
            clashes=clashes,
            suggested_removals=list(suggestions),
            punning_conflicts=dict(sorted(punning.items())),
            unresolved=unresolved,
        )

    def to_json(self) -> str:
        payload = {
            "clashes": [
                {
                    "kind": c.kind.value,
                    "participants": list(c.participants),
                    "description": c.description,
                    "justifications": [
                        {
                            "conclusion": j.conclusion,
                            "support": sorted(str(a.key()) for a in j.support),
                        }
                        for j in c.justifications
                    ],
                }
                for c in self.clashes
            ],
            "suggested_removals": [asdict(r) for r in self.suggested_removals],
            "punning_conflicts": self.punning_conflicts,
            "unresolved": self.unresolved,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
