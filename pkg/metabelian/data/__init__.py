from metabelian.data.synthetic import (
    MODULE_CORPUS,
    CorpusEntry,
    module_corpus,
    planted_system,
    random_module,
    random_system,
)

__all__ = (
    "MODULE_CORPUS",
    "CorpusEntry",
    "module_corpus",
    "planted_system",
    "random_module",
    "random_system",
)
