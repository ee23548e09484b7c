"""
Loading of braidings from R-matrix files.

An R-matrix file is a JSON document

    {"dim": 2, "entries": [[1, 2, 2, 1, "1"], [2, 1, 1, 2, "1"], ...]}

where each record (i, j, k, l, value) gives R_ij^kl, the coefficient of
x_k (x) x_l in R(x_i (x) x_j), as a scalar expression.
"""
import json
import os

from .errors import ScalarParseError
from .operators import LegOperator
from .rmatrix import Braiding, make_braiding
from .scalars import parse_scalar


def parse_rmatrix(document: dict, source: str = "<document>") -> LegOperator:
    """
    Build the operator described by a decoded R-matrix document.

    Args:
        document (dict): Decoded JSON with keys 'dim' and 'entries'.
        source (str): Name used in error messages.

    Returns:
        LegOperator: The two-leg operator with the given entries.

    Raises:
        ValueError: If a field is missing, an index is out of range or an
            entry is repeated or its value does not parse; the message names
            the offending record and position.
    """
    if not isinstance(document, dict) or not {"dim", "entries"}.issubset(document):
        raise ValueError(f"'{source}' must contain fields: {{'dim', 'entries'}}.")
    dim = document["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError(f"'{source}': dim must be a positive integer, got {dim!r}.")
    records = document["entries"]
    if not isinstance(records, list):
        raise ValueError(f"'{source}': entries must be a list of records.")

    entries = {}
    for number, record in enumerate(records, start=1):
        if not isinstance(record, (list, tuple)) or len(record) != 5:
            raise ValueError(f"'{source}' entry {number}: expected [i, j, k, l, value].")
        *indices, text = record
        if not all(isinstance(x, int) and not isinstance(x, bool) and 1 <= x <= dim
                   for x in indices):
            raise ValueError(f"'{source}' entry {number}: indices {indices} outside 1..{dim}.")
        i, j, k, l = indices
        key = ((i, j), (k, l))
        if key in entries:
            raise ValueError(f"'{source}' entry {number}: R_{i}{j}^{k}{l} given twice.")
        try:
            value = parse_scalar(str(text))
        except ScalarParseError as exc:
            raise ValueError(f"'{source}' entry {number}: {exc}") from exc
        if value:
            entries[key] = value
    return LegOperator(dim, 2, entries)


def load_rmatrix(file_path: str) -> Braiding:
    """
    Load and validate a braiding from an R-matrix file.

    Args:
        file_path (str): Path to the JSON R-matrix file.

    Returns:
        Braiding: The validated braiding, named after the file.

    Raises:
        FileNotFoundError: If file is missing.
        ValueError: If the file is not valid JSON or a record is malformed.
        BraidingValidationError: If the operator is not an involutive or
            Hecke braiding; the witness is a nonzero residual entry.
        NotSkewInvertibleError: If the operator is not skew-invertible.
    """
    if not os.path.exists(file_path):
        raise FileNotFoundError(f"'{file_path}' not found.")
    with open(file_path, encoding="utf-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"'{file_path}' line {exc.lineno} column {exc.colno}: {exc.msg}.") from exc
    operator = parse_rmatrix(document, file_path)
    name = os.path.splitext(os.path.basename(file_path))[0]
    return make_braiding(operator, name)
