import sys
import json
import zlib
import numpy as np

from fractions import Fraction
from typing    import Any, Union

JSON_SCHEMA_VERSION = 1


def task_rng(seed: int, label: str, index: int = 0) -> np.random.Generator:
    """Random generator for one task, derived from the run seed, a task label and a counter

    Note:
        The stream depends only on (seed, label, index), never on the order in which tasks run

    Args:
        seed (int): run seed
        label (str): task label, such as a rule name
        index (int, optional): sample counter. Defaults to 0.

    Returns:
        np.random.Generator: independent generator for the task
    """
    return np.random.default_rng([seed % 2 ** 64, zlib.crc32(label.encode('utf-8')), index])


def _generate_progress_bar(filled_up_length: int, bar_length: int) -> str:
    return '=' * max(filled_up_length - 1, 0) + '>' + '-' * (bar_length - filled_up_length)


def _generate_progress_string(bar: str, rounded_percentage: float, suffix: str) -> str:
    return f'[{bar}] {rounded_percentage}% {f" ... {suffix}" if suffix else ""}\r'


def progress_bar(count_value: Union[int, float], total: Union[int, float], suffix: str = '', percentage_precision: int = 0) -> None:
    """Function that prints and updates a progress bar in the terminal

    Note:
        The bar goes to stderr, so that machine readable output on stdout is left untouched

    Args:
        count_value (int | float): Actual value to be printed as progress
        total (int | float): Full value. Equivalent to 100%
        suffix (str, optional): If needed the suffix is the string that will come after the percentage. Defaults to ''.
        percentage_precision (int, optional): The number of decimal places that the printed percentage should have. Defaults to 0.
    """
    if not sys.stderr.isatty():
        return

    bar_length = 50
    filled_up_ratio = count_value / float(total) if total else 1.0
    percentage = 100 * filled_up_ratio

    filled_up_length = round(bar_length * filled_up_ratio)

    rounded_percentage = round(percentage, percentage_precision)

    bar = _generate_progress_bar(filled_up_length, bar_length)

    sys.stderr.write(_generate_progress_string(bar, rounded_percentage, suffix))
    if count_value >= total:
        sys.stderr.write('\n')
    sys.stderr.flush()


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return str(value)


def to_json(payload: 'dict[str, Any]') -> str:
    """Deterministic JSON document with the schema version at the top level"""
    return json.dumps({'schema': JSON_SCHEMA_VERSION, **payload}, indent=2, sort_keys=True, default=_json_default)
