"""Exact symbolic engine for extended tensor algebras, immanants and quantum immanants."""

try:
    from extensor import _core
except ImportError:  # in-tree builds keep the extension next to the package
    import _core

capelli = _core.capelli
character = _core.character
character_dim = _core.character_dim
content_sum = _core.content_sum
hc_eigenvalue = _core.hc_eigenvalue
immanant = _core.immanant
kostka = _core.kostka
preimm_p = _core.preimm_p
quantum_immanant = _core.quantum_immanant
quantum_preimmanant = _core.quantum_preimmanant
run_verify = _core.run_verify
schur = _core.schur
suite_names = _core.suite_names

__version__ = _core.__version__

__all__ = [
    "capelli",
    "character",
    "character_dim",
    "content_sum",
    "hc_eigenvalue",
    "immanant",
    "kostka",
    "preimm_p",
    "quantum_immanant",
    "quantum_preimmanant",
    "run_verify",
    "schur",
    "suite_names",
]
