import pytest

from kgdistill.model import Ontology, Provenance, SubClassOf
from kgdistill.pipeline import PipelineConfig, PipelineRunner
from kgdistill.rdfio import RdfFormat, parse_ontology_file, serialize
from kgdistill.reasoner import read_exchange_inferred, write_exchange_schema

from conftest import C, sub
from test_pipeline import SCHEMA, abox_doc


def test_exchange_schema_roundtrip(tmp_path):
    schema = Ontology.from_axioms([sub("A", "B"), sub("B", "C")])
    path = write_exchange_schema(schema, tmp_path)
    back, _ = parse_ontology_file(path)
    assert back.axioms() == schema.axioms()


def test_read_inferred_tags_provenance(tmp_path):
    inferred = Ontology.from_axioms([sub("A", "C")])
    (tmp_path / "inferred.nt").write_text(serialize(inferred, RdfFormat.NTRIPLES))
    axioms = read_exchange_inferred(tmp_path)
    assert axioms == {sub("A", "C")}
    assert all(ax.provenance is Provenance.INFERRED for ax in axioms)


def test_missing_inferred_file_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_exchange_inferred(tmp_path)


def test_pipeline_with_external_reasoner(tmp_path):
    (tmp_path / "schema.ttl").write_text(SCHEMA)
    (tmp_path / "abox.ttl").write_text(abox_doc())
    exchange = tmp_path / "exchange"

    config = PipelineConfig(
        source_files=(str(tmp_path / "abox.ttl"),),
        schema_files=(str(tmp_path / "schema.ttl"),),
        output_dir=str(tmp_path / "out"),
        reasoner=f"external:{exchange}",
        variant="materialize",
        seed=1,
    )
    runner = PipelineRunner(config)
    schema, _ = runner.phase_clean_schema()

    # play the part of the external tool: read schema.ttl, answer inferred.nt
    write_exchange_schema(schema, exchange)
    extra = Ontology.from_axioms(
        [SubClassOf(C("Person"), C("ExternallyInferred"))]
    )
    (exchange / "inferred.nt").write_text(serialize(extra, RdfFormat.NTRIPLES))

    result = runner.run()
    bundle = result.bundles["materialize"]
    assert SubClassOf(C("Person"), C("ExternallyInferred")) in bundle.components.taxonomy
