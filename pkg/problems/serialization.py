"""
JSON documents describing generated instances.

Document layout:

    {"example": 1, "n": 5, "m": 10, "l": 20, "seed": 7, "scale": 1.0,
     "matrices": {"Q": [[[...]]], "A": [[...]], "b": [...]}}

`matrices` is optional; without it the instance is regenerated from the seed.
"""

import json
import logging

import numpy as np

from core.errors import ContractViolation
from problems.generators import RandomSpec, build_system, draw_instance_data, generate

logger = logging.getLogger(__name__)


def instance_document(example, spec, include_matrices=False):
    """
    Describe an instance as a JSON-ready dict.

    Args:
        example (int): Experiment family
        spec (RandomSpec): Instance spec
        include_matrices (bool): Embed Q, A and b

    Returns:
        dict: The document
    """
    document = {"example": int(example), **spec.to_dict()}
    if include_matrices:
        Q, A, b = draw_instance_data(spec)
        document["matrices"] = {"Q": Q.tolist(), "A": A.tolist(), "b": b.tolist()}
    return document


def system_from_document(document):
    """
    Rebuild the system a document describes.

    Returns:
        InclusionSystem: The instance
    """
    try:
        example = int(document["example"])
        spec = RandomSpec(document["n"], document["m"], document.get("l", 20),
                          document["seed"], document.get("scale", 1.0))
    except KeyError as err:
        raise ContractViolation(f"instance document is missing field {err}") from err

    matrices = document.get("matrices")
    if matrices is None:
        return generate(example, spec)

    Q = np.asarray(matrices["Q"], dtype=float)
    A = np.asarray(matrices["A"], dtype=float)
    b = np.asarray(matrices["b"], dtype=float)
    if Q.shape != (spec.m, spec.n, spec.n) or A.shape != (spec.l, spec.n) or b.shape != (spec.l,):
        raise ContractViolation("embedded matrices do not match the declared n, m, l")
    return build_system(example, spec, Q, A, b)


def save_instance(path, example, spec, include_matrices=False):
    """Write an instance document to a JSON file."""
    document = instance_document(example, spec, include_matrices)
    try:
        with open(path, "w") as file:
            json.dump(document, file, indent=2)
    except OSError as err:
        raise OSError(f"cannot write instance file {path}: {err}") from err
    logger.info("instance written to %s", path)
    return document


def load_instance(path):
    """
    Read an instance document and build its system.

    Returns:
        tuple: (document dict, InclusionSystem)
    """
    try:
        with open(path, "r") as file:
            document = json.load(file)
    except OSError as err:
        raise OSError(f"cannot read instance file {path}: {err}") from err
    return document, system_from_document(document)
