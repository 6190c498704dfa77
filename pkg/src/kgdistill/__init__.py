"""kgdistill: distill RDF/OWL knowledge graphs into ML-ready datasets."""

__version__ = "0.1.0"

from . import model, rdfio  # noqa: F401


def __getattr__(name):
    # lazy subpackage access without import cycles at package init
    if name in ("reasoner", "extract", "modularize", "mlpost", "pipeline"):
        import importlib

        return importlib.import_module(f".{name}", __name__)
    raise AttributeError(name)
