"""Thin Python layer over the C++ provers. Structured results come back as dicts."""

import json

from . import _core
from ._core import InvalidArgument, ParseError, ResourceError

__all__ = [
    "InvalidArgument",
    "ParseError",
    "ResourceError",
    "check_proof",
    "countermodel",
    "normalize",
    "prove",
    "prove_fo",
    "run_cli",
    "valid",
]

normalize = _core.normalize
valid = _core.valid


def prove(sequent, atom_cap=None):
    args = (sequent,) if atom_cap is None else (sequent, atom_cap)
    return json.loads(_core.prove(*args))


def prove_fo(sequent, max_nodes=20000, max_depth=400):
    return json.loads(_core.prove_fo(sequent, max_nodes, max_depth))


def countermodel(sequent, atom_cap=None):
    args = (sequent,) if atom_cap is None else (sequent, atom_cap)
    return json.loads(_core.countermodel(*args))


def check_proof(proof, calculus="gqciore", allow_cut=False):
    """proof: dict in the proof JSON shape. Returns (ok, message, path)."""
    text = proof if isinstance(proof, str) else json.dumps(proof)
    return _core.check_proof(text, calculus, allow_cut)


def run_cli(args, input=""):
    """Returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args), input)
