"""JSON (and CSV) encodings for vectors, tensors, matrices and sequences."""

from __future__ import annotations

import csv
import io
import json

from .algebra import ChiVector, SemiSymmetricAlgebra, TensorVector
from .character import Character, CharacterSequence, builtin_sequence
from .perm import Permutation, PermutationGroup
from .ring import Ring
from .schur import ExactMatrix


def vector_to_json(v: ChiVector) -> dict:
    out = {}
    if v.is_homogeneous():
        out["degree"] = v.degree
    out["terms"] = [{"index": list(k), "coeff": str(c)} for k, c in v]
    return out


def vector_from_json(alg: SemiSymmetricAlgebra, obj) -> ChiVector:
    """Read ``{"degree": d, "terms": [...]}``; indices need not be canonical
    and are projected into the basis."""
    terms = obj["terms"] if isinstance(obj, dict) else obj
    degree = obj.get("degree") if isinstance(obj, dict) else None
    pairs = []
    for t in terms:
        index = tuple(t["index"])
        if degree is not None and len(index) != degree:
            raise ValueError(f"index {list(index)} does not have degree {degree}")
        pairs.append((index, alg.ring(str(t.get("coeff", 1)))))
    return alg.project_tensor(pairs)


def tensor_to_json(t: TensorVector) -> list:
    return [
        {"slots": [{"degree": len(s), "index": list(s)} for s in key], "coeff": str(c)}
        for key, c in t
    ]


def matrix_to_json(A: ExactMatrix) -> list:
    return [[str(x) for x in row] for row in A.rows]


def matrix_from_text(text: str, ring: Ring) -> ExactMatrix:
    """Parse a JSON array of arrays, or CSV rows."""
    stripped = text.strip()
    if stripped.startswith("["):
        rows = json.loads(stripped)
    else:
        rows = [r for r in csv.reader(io.StringIO(stripped)) if r]
    return ExactMatrix.from_rows(ring, [[ring(str(x).strip()) for x in r] for r in rows])


def stage_from_json(obj, ring: Ring) -> Character:
    d = int(obj["degree"])
    gens = [Permutation.parse(g, d) for g in obj.get("generators", [])]
    values = obj.get("character", ["1"] * len(gens))
    group = PermutationGroup.closure(gens, d) if gens else PermutationGroup.trivial(d)
    return Character.from_generators(group, [str(v) for v in values], ring)


def sequence_from_json(obj, ring: Ring, name: str | None = None) -> CharacterSequence:
    """A sequence from a list of stages, or a dict with a ``stages`` list."""
    stages = obj["stages"] if isinstance(obj, dict) else obj
    chars = {}
    for s in stages:
        chi = stage_from_json(s, ring)
        chars[chi.degree] = chi
    return CharacterSequence(ring, chars, name=name or "config")


def sequence_to_json(seq: CharacterSequence) -> list:
    out = []
    for d in sorted(seq.stages):
        if d == 0:
            continue
        chi = seq.stages[d]
        gens = list(chi.group.generators)
        out.append(
            {
                "degree": d,
                "generators": [str(g) for g in gens],
                "character": [str(chi(g)) for g in gens],
            }
        )
    return out


def load_sequence(ring: Ring, builtin: str | None, config: str | None, max_degree: int):
    if config:
        with open(config) as fh:
            return sequence_from_json(json.load(fh), ring)
    return builtin_sequence(builtin or "tensor", ring, max_degree)
