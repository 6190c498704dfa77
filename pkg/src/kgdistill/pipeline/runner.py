"""End-to-end pipeline: merge, clean, materialize, extract, curate, realize,
modularize, split, export.

Every phase writes a plain-file checkpoint under <output_dir>/work/ and is
skipped on re-runs when its file is already present for the same config
hash, so deleting a late checkpoint and re-running reproduces it
byte-identically. Bundle directories (base/, materialize/) contain only
deterministic, timestamp-free artifacts; provenance with timestamps lives
in work/run_manifest.json.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from .. import __version__
from ..extract import (
    ABoxSubset,
    LocalSource,
    SparqlClient,
    SparqlSource,
    extract_subset,
    fetch_class_assertions,
)
from ..model import (
    Axiom,
    Bottom,
    ClassAssertion,
    EntityRef,
    ObjectPropertyAssertion,
    Ontology,
    SubClassOf,
    Top,
)
from ..modularize import DatasetComponents, decompose, extract_module, initial_signature
from ..mlpost import (
    IdMaps,
    Split,
    build_id_maps,
    compute_stats,
    export_coo,
    filter_inversion_leakage,
    owl_to_json,
    sha256_file,
    split as make_split,
    write_coo,
    write_id_maps,
)
from ..rdfio import (
    RdfFormat,
    catalog_resolver,
    http_resolver,
    merge_import_closure,
    parse_ontology_file,
    serialize,
)
from ..reasoner import (
    AboxEngine,
    SchemaIndex,
    UnsatReport,
    clean_schema,
    closure_from_index,
    materialize_schema,
    read_exchange_inferred,
    write_exchange_schema,
)
from .config import (
    CurationNeededError,
    CurationReport,
    DecisionFile,
    PipelineConfig,
)
from .rename import apply_renames

logger = logging.getLogger(__name__)


def is_tautology(ax: Axiom) -> bool:
    if isinstance(ax, SubClassOf):
        if isinstance(ax.sup, Top) or isinstance(ax.sub, Bottom):
            return True
        return ax.sub == ax.sup
    if isinstance(ax, ClassAssertion):
        return isinstance(ax.expr, Top)
    return False


@dataclass
class DatasetBundle:
    variant: str
    directory: Path
    components: DatasetComponents
    split: Split
    id_maps: IdMaps
    manifest: dict
    stats: "object"


@dataclass
class RunResult:
    bundles: dict[str, DatasetBundle]
    report: Optional[CurationReport] = None


class Workspace:
    """Checkpointed work directory with a provenance manifest."""

    def __init__(self, config: PipelineConfig):
        self.config = config
        self.root = Path(config.output_dir)
        self.work = self.root / "work"
        self.work.mkdir(parents=True, exist_ok=True)
        self.manifest_path = self.work / "run_manifest.json"
        self.manifest = self._load_manifest()

    def _load_manifest(self) -> dict:
        fresh = {
            "config_hash": self.config.config_hash(),
            "config": json.loads(self.config.to_json()),
            "versions": {"kgdistill": __version__},
            "seed": self.config.seed,
            "phases": {},
            "fetch_log": [],
        }
        if self.manifest_path.exists():
            try:
                old = json.loads(self.manifest_path.read_text(encoding="utf-8"))
            except json.JSONDecodeError:
                return fresh
            if old.get("config_hash") == fresh["config_hash"]:
                old.setdefault("fetch_log", [])
                return old
        return fresh

    def save_manifest(self) -> None:
        self.manifest_path.write_text(
            json.dumps(self.manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )

    def ensure(self, phase: str, filename: str, compute, load):
        """Reuse a phase checkpoint or compute it; returns the phase value.

        `compute(path)` writes the checkpoint and returns the in-memory
        value; `load(path)` reconstructs the value from the file on resume.
        """
        path = self.work / filename
        done = self.manifest["phases"].get(phase)
        if done and path.exists() and sha256_file(path) == done["sha256"]:
            logger.info("phase %s: reusing checkpoint %s", phase, path.name)
            return load(path)
        logger.info("phase %s: computing %s", phase, path.name)
        value = compute(path)
        self.manifest["phases"][phase] = {
            "file": path.name,
            "sha256": sha256_file(path),
            "completed_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        self.save_manifest()
        return value


def _load_axioms(path: Path) -> frozenset[Axiom]:
    onto, _ = parse_ontology_file(path)
    return onto.axioms()


def _write_ontology(axioms, path: Path) -> None:
    fmt = RdfFormat.TURTLE if path.suffix == ".ttl" else RdfFormat.NTRIPLES
    path.write_text(serialize(Ontology.from_axioms(axioms), fmt), encoding="utf-8")


def _merged_unsat(reports: list[UnsatReport]) -> UnsatReport:
    classes: set[EntityRef] = set()
    props: set[EntityRef] = set()
    justs: dict = {}
    for r in reports:
        classes |= r.unsatisfiable_classes
        props |= r.unsatisfiable_properties
        justs.update(r.justifications)
    return UnsatReport(frozenset(classes), frozenset(props), justs)


class PipelineRunner:
    def __init__(self, config: PipelineConfig, decisions: Optional[DecisionFile] = None):
        self.config = config.validate()
        self.ws = Workspace(config)
        if decisions is None and config.decision_file:
            decisions = DecisionFile.load(config.decision_file)
        self.decisions = decisions or DecisionFile()
        self._unsat: Optional[UnsatReport] = None
        self._memo: dict[str, object] = {}

    def _memoized(self, key: str, compute: Callable[[], object]):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    # -- sources -----------------------------------------------------------

    def _schema_ontology_impl(self) -> Ontology:
        paths = list(self.config.schema_files) or list(self.config.source_files)
        axioms = []
        iri = None
        imports: list[str] = []
        for p in paths:
            onto, _ = parse_ontology_file(p, infer_declarations=self.config.infer_declarations)
            axioms.extend(onto.schema_axioms())
            iri = iri or onto.iri
            imports.extend(onto.imports)
        axioms = apply_renames(axioms, self.decisions.renames)
        return Ontology.from_axioms(axioms, imports=sorted(set(imports)), iri=iri)

    def _abox_source(self):
        if self.config.endpoint_url:
            client = SparqlClient(self.config.endpoint_url, page_size=self.config.page_size)
            return SparqlSource(client), client
        return self._memoized("local_source", self._local_source), None

    def _local_source(self) -> LocalSource:
        # the schema's declarations inform ABox recognition, matching the
        # endpoint query that sees typing triples from the whole graph
        schema = self._schema_ontology()
        axioms = []
        for p in self.config.source_files:
            onto, _ = parse_ontology_file(
                p,
                infer_declarations=self.config.infer_declarations,
                predeclared=schema,
            )
            axioms.extend(onto.abox)
        axioms = apply_renames(axioms, self.decisions.renames)
        return LocalSource(Ontology.from_axioms(axioms))

    # -- phases --------------------------------------------------------------

    def _phase_merge_impl(self) -> Ontology:
        def compute(path: Path) -> Ontology:
            root = self._schema_ontology()
            resolver = None
            if self.config.catalog:
                resolver = catalog_resolver(
                    self.config.catalog, infer_declarations=self.config.infer_declarations
                )
            elif self.config.allow_http_imports:
                resolver = http_resolver(infer_declarations=self.config.infer_declarations)
            merged = merge_import_closure(
                root, resolver, on_missing="fail" if resolver else "warn"
            )
            _write_ontology(merged.axioms(), path)
            return merged

        def load(path: Path) -> Ontology:
            onto, _ = parse_ontology_file(path)
            return onto

        return self.ws.ensure("01-merge", "01_schema_merged.ttl", compute, load)

    def _phase_clean_schema_impl(self) -> tuple[Ontology, UnsatReport]:
        merged = self.phase_merge()
        unsat_path = self.ws.work / "02_unsat.json"

        def flagged_report() -> UnsatReport:
            from ..model import clazz, obj_prop

            flagged = json.loads(unsat_path.read_text(encoding="utf-8"))
            return UnsatReport(
                frozenset(clazz(i) for i in flagged["unsatisfiable_classes"]),
                frozenset(obj_prop(i) for i in flagged["unsatisfiable_properties"]),
                {},
            )

        def compute(path: Path):
            cleaned, reports = clean_schema(merged)
            merged_report = _merged_unsat(reports)
            unsat_path.write_text(
                json.dumps(
                    {
                        "unsatisfiable_classes": sorted(
                            e.iri for e in merged_report.unsatisfiable_classes
                        ),
                        "unsatisfiable_properties": sorted(
                            e.iri for e in merged_report.unsatisfiable_properties
                        ),
                        "rounds": len(reports),
                        "justifications": {
                            e.iri: [sorted(str(a.key()) for a in j.support) for j in justs]
                            for e, justs in merged_report.justifications.items()
                        },
                    },
                    indent=2,
                    sort_keys=True,
                )
                + "\n",
                encoding="utf-8",
            )
            _write_ontology(cleaned.axioms(), path)
            return cleaned, flagged_report()

        def load(path: Path):
            cleaned, _ = parse_ontology_file(path)
            return cleaned, flagged_report()

        return self.ws.ensure("02-clean", "02_schema_clean.ttl", compute, load)

    def _phase_materialize_impl(self) -> frozenset[Axiom]:
        schema, _ = self.phase_clean_schema()

        def compute(path: Path) -> frozenset[Axiom]:
            if self.config.reasoner.startswith("external:"):
                exchange_dir = Path(self.config.reasoner.split(":", 1)[1])
                write_exchange_schema(schema, exchange_dir)
                inferred = read_exchange_inferred(exchange_dir)
            else:
                _, inferred = materialize_schema(schema, index=self._schema_index())
            _write_ontology(inferred, path)
            return inferred

        return self.ws.ensure("03-materialize", "03_inferred.nt", compute, _load_axioms)

    def _phase_extract_impl(self) -> frozenset[ObjectPropertyAssertion]:
        _, unsat = self.phase_clean_schema()

        def compute(path: Path) -> frozenset[ObjectPropertyAssertion]:
            source, client = self._abox_source()
            subset = extract_subset(
                source,
                self.config.k,
                unsat,
                fixpoint=self.config.fixpoint_extraction,
                degree_includes_types=self.config.degree_includes_types,
            )
            if client is not None:
                self.ws.manifest["fetch_log"].extend(client.fetch_log)
            _write_ontology(subset.property_assertions, path)
            return subset.property_assertions

        def load(path: Path):
            return frozenset(
                ax for ax in _load_axioms(path) if isinstance(ax, ObjectPropertyAssertion)
            )

        return self.ws.ensure("04-extract", "04_relations.nt", compute, load)

    def _phase_typings_impl(self) -> frozenset[ClassAssertion]:
        _, unsat = self.phase_clean_schema()
        relations = self.phase_extract()

        def compute(path: Path) -> frozenset[ClassAssertion]:
            source, client = self._abox_source()
            individuals = frozenset(
                i for a in relations for i in (a.subject.iri, a.object.iri)
            )
            typings = fetch_class_assertions(source, individuals, unsat)
            if client is not None:
                self.ws.manifest["fetch_log"].extend(client.fetch_log)
            _write_ontology(typings, path)
            return typings

        def load(path: Path):
            return frozenset(
                ax for ax in _load_axioms(path) if isinstance(ax, ClassAssertion)
            )

        return self.ws.ensure("05-typings", "05_types.nt", compute, load)

    def _phase_curate_impl(self) -> tuple[frozenset[ObjectPropertyAssertion], frozenset[ClassAssertion]]:
        schema, _ = self.phase_clean_schema()
        relations = set(self.phase_extract())
        typings = set(self.phase_typings())
        rel_path = self.ws.work / "06_relations_curated.nt"
        types_path = self.ws.work / "06_types_curated.nt"

        def compute(path: Path):
            abox: set[Axiom] = set(relations) | set(typings)
            for removal in self.decisions.removals:
                ax = removal.to_axiom()
                if ax not in abox:
                    raise ValueError(
                        f"decision removal not present in the current ABox: "
                        f"{removal.subject} {removal.predicate} {removal.object}"
                    )
                abox.discard(ax)

            punning = {
                iri: sorted(k.value for k in kinds)
                for iri, kinds in Ontology.from_axioms(
                    schema.axioms() | abox
                ).punning_conflicts().items()
            }

            for round_no in range(20):
                engine = AboxEngine(
                    schema, abox, una=self.config.una, index=self._schema_index()
                )
                clashes = engine.clashes()
                report = CurationReport.from_clashes(clashes, punning)
                halt_for_punning = self.config.strict_punning and punning and round_no == 0
                if not clashes and not halt_for_punning:
                    self._memo["__curated_engine"] = engine
                    break
                if clashes and self.decisions.accept_all_suggestions and report.unresolved == 0:
                    for removal in report.suggested_removals:
                        abox.discard(removal.to_axiom())
                    continue
                report_path = self.ws.work / "06_curation_report.json"
                report_path.write_text(report.to_json(), encoding="utf-8")
                raise CurationNeededError(report, report_path)

            rels = frozenset(a for a in abox if isinstance(a, ObjectPropertyAssertion))
            types = frozenset(a for a in abox if isinstance(a, ClassAssertion))
            _write_ontology(rels, rel_path)
            _write_ontology(types, types_path)
            return rels, types

        def load(path: Path):
            rels = frozenset(
                ax for ax in _load_axioms(rel_path) if isinstance(ax, ObjectPropertyAssertion)
            )
            types = frozenset(
                ax for ax in _load_axioms(types_path) if isinstance(ax, ClassAssertion)
            )
            return rels, types

        return self.ws.ensure("06-curate", "06_relations_curated.nt", compute, load)

    def _phase_realize_impl(self) -> frozenset[ClassAssertion]:
        schema, _ = self.phase_clean_schema()
        relations, typings = self.phase_curate()

        def compute(path: Path) -> frozenset[ClassAssertion]:
            engine = self._memo.get("__curated_engine")
            if engine is None:
                engine = AboxEngine(
                    schema,
                    relations | typings,
                    una=self.config.una,
                    index=self._schema_index(),
                )
            realized = engine.realized()
            _write_ontology(realized, path)
            return realized

        def load(path: Path):
            return frozenset(
                ax for ax in _load_axioms(path) if isinstance(ax, ClassAssertion)
            )

        return self.ws.ensure("07-realize", "07_realized.nt", compute, load)

    # -- memoized phase entry points ----------------------------------------

    def _schema_ontology(self) -> Ontology:
        return self._memoized("schema_src", self._schema_ontology_impl)

    def phase_merge(self) -> Ontology:
        return self._memoized("merge", self._phase_merge_impl)

    def phase_clean_schema(self):
        return self._memoized("clean", self._phase_clean_schema_impl)

    def phase_materialize(self):
        return self._memoized("materialize", self._phase_materialize_impl)

    def phase_extract(self):
        return self._memoized("extract", self._phase_extract_impl)

    def phase_typings(self):
        return self._memoized("typings", self._phase_typings_impl)

    def phase_curate(self):
        return self._memoized("curate", self._phase_curate_impl)

    def phase_realize(self):
        return self._memoized("realize", self._phase_realize_impl)

    def _schema_index(self) -> SchemaIndex:
        return self._memoized(
            "schema_index", lambda: SchemaIndex.build(self.phase_clean_schema()[0])
        )

    # -- bundle assembly -----------------------------------------------------

    def _write_component_files(self, components: DatasetComponents, out_dir: Path) -> None:
        """Like modularize.write_components, but reuses checkpoint bytes when a
        component's axiom set equals a curated checkpoint (serialize is
        deterministic, so equal sets mean equal bytes)."""
        import shutil

        relations, typings = self.phase_curate()
        reuse = {}
        if components.abox_relations == relations:
            reuse["abox_relations.nt"] = self.ws.work / "06_relations_curated.nt"
        if components.abox_types == typings:
            reuse["abox_types.nt"] = self.ws.work / "06_types_curated.nt"

        from ..modularize import COMPONENT_FILES

        out_dir.mkdir(parents=True, exist_ok=True)
        for name, (filename, fmt) in COMPONENT_FILES.items():
            target = out_dir / filename
            source_file = reuse.get(filename)
            if source_file is not None and source_file.exists():
                shutil.copyfile(source_file, target)
            else:
                target.write_text(
                    serialize(Ontology.from_axioms(getattr(components, name)), fmt),
                    encoding="utf-8",
                )

    def _shared_split(self, relations) -> Split:
        closure = closure_from_index(self._schema_index())
        base = make_split(relations, self.config.ratios, self.config.seed)
        return filter_inversion_leakage(base, closure.inverse_pairs)

    def _assemble(
        self,
        variant: str,
        schema_axioms: frozenset[Axiom],
        relations: frozenset[ObjectPropertyAssertion],
        typings: frozenset[ClassAssertion],
        shared_split: Split,
        maps: IdMaps,
    ) -> DatasetBundle:
        out_dir = self.ws.root / variant
        out_dir.mkdir(parents=True, exist_ok=True)

        subset = ABoxSubset(
            property_assertions=relations,
            class_assertions=typings,
            individuals=frozenset(i for a in relations for i in (a.subject.iri, a.object.iri)),
            properties=frozenset(a.property.iri for a in relations),
            extraction_k=self.config.k,
        )
        seed_sig = initial_signature(subset)
        module = extract_module(Ontology.from_axioms(schema_axioms), seed_sig)

        dataset_axioms = frozenset(
            ax
            for ax in (module.axioms | relations | typings)
            if not is_tautology(ax)
        )
        components = decompose(dataset_axioms)
        self._write_component_files(components, out_dir)

        export = export_coo(
            shared_split,
            [ca for ca in components.abox_types if isinstance(ca, ClassAssertion)],
            sorted(components.taxonomy | components.tbox_other | components.rbox, key=lambda a: a.key()),
            maps,
        )
        manifest = write_coo(export, shared_split, out_dir)
        write_id_maps(maps, out_dir)
        # axioms.json covers the schema components (the nested-structure
        # part); assertions are fully carried by the .nt and index files
        schema_part = components.taxonomy | components.tbox_other | components.rbox
        (out_dir / "axioms.json").write_text(owl_to_json(schema_part), encoding="utf-8")

        label = f"{self.config.dataset_label()} {variant.upper()}"
        stats = compute_stats(
            relations,
            [ca for ca in components.abox_types],
            sorted(components.taxonomy | components.tbox_other | components.rbox, key=lambda a: a.key()),
            name=label,
        )
        (out_dir / "stats.json").write_text(stats.to_json(), encoding="utf-8")
        (out_dir / "stats.md").write_text(stats.to_markdown(), encoding="utf-8")

        manifest.update(
            {
                "dataset": self.config.dataset_label(),
                "variant": variant,
                "config": json.loads(self.config.to_json()),
                "versions": {"kgdistill": __version__},
                "module_iterations": module.iterations,
                "component_sizes": components.sizes(),
            }
        )
        files = sorted(
            p.name for p in out_dir.iterdir() if p.is_file() and p.name != "manifest.json"
        )
        manifest["files"] = files
        manifest["checksums"] = {f: sha256_file(out_dir / f) for f in files}
        (out_dir / "manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return DatasetBundle(
            variant=variant,
            directory=out_dir,
            components=components,
            split=shared_split,
            id_maps=maps,
            manifest=manifest,
            stats=stats,
        )

    def run(self) -> RunResult:
        config = self.config
        schema, _ = self.phase_clean_schema()
        relations, typings = self.phase_curate()
        variants = config.variants()

        realized: frozenset[ClassAssertion] = frozenset()
        inferred: frozenset[Axiom] = frozenset()
        if "materialize" in variants:
            inferred = self.phase_materialize()
            realized = self.phase_realize()

        shared_split = self._shared_split(relations)

        # id maps are shared across variants so the split files stay
        # byte-identical; the materialized side is the superset
        def universes(schema_axioms, typs):
            from ..model import EntityKind, signature_of

            mod = extract_module(
                Ontology.from_axioms(schema_axioms),
                initial_signature(
                    ABoxSubset(
                        property_assertions=relations,
                        class_assertions=typs,
                        individuals=frozenset(
                            i for a in relations for i in (a.subject.iri, a.object.iri)
                        ),
                        properties=frozenset(a.property.iri for a in relations),
                        extraction_k=config.k,
                    )
                ),
            )
            axioms = mod.axioms | relations | typs
            inds, props, classes = set(), set(), set()
            for ax in axioms:
                for e in signature_of(ax).entities:
                    if e.kind is EntityKind.NAMED_INDIVIDUAL:
                        inds.add(e.iri)
                    elif e.kind is EntityKind.OBJECT_PROPERTY:
                        props.add(e.iri)
                    elif e.kind is EntityKind.CLASS:
                        classes.add(e.iri)
            return inds, props, classes

        if "materialize" in variants:
            union_schema = schema.axioms() | inferred
            union_typings = typings | realized
        else:
            union_schema = schema.axioms()
            union_typings = typings
        inds, props, classes = universes(frozenset(union_schema), union_typings)
        maps = build_id_maps(inds, props, classes, one_based=config.one_based_ids)

        bundles: dict[str, DatasetBundle] = {}
        if "base" in variants:
            bundles["base"] = self._assemble(
                "base", frozenset(schema.axioms()), relations, typings, shared_split, maps
            )
        if "materialize" in variants:
            bundles["materialize"] = self._assemble(
                "materialize",
                frozenset(schema.axioms() | inferred),
                relations,
                typings | realized,
                shared_split,
                maps,
            )
        self.ws.save_manifest()
        return RunResult(bundles=bundles)


def run(config: PipelineConfig, decisions: Optional[DecisionFile] = None) -> RunResult:
    """Full pipeline; raises CurationNeededError when decisions are required."""
    return PipelineRunner(config, decisions).run()


def build_variants(
    config: PipelineConfig, decisions: Optional[DecisionFile] = None
) -> tuple[DatasetBundle, DatasetBundle]:
    """BASE and MATERIALIZE bundles sharing one extraction and one split."""
    from dataclasses import replace as dc_replace

    result = run(dc_replace(config, variant="both"), decisions)
    return result.bundles["base"], result.bundles["materialize"]
