import logging
import pathlib

from typing import Union
from zx_axiom_verifier.error import EmptyCatalogError
from zx_axiom_verifier.diagram import parse_diagram_file
from zx_axiom_verifier.rules.rule_schema import RuleSchema

RULE_FILE_SUFFIX = '.rule'


def shipped_catalog_directory() -> pathlib.Path:
    """Directory of the rule files installed with the package"""
    return pathlib.Path(__file__).parent / 'axioms'


def load_rule(path: 'Union[str, pathlib.Path]') -> RuleSchema:
    """Parses one rule file and validates the rule

    Raises:
        DiagramParseError: If the file does not parse
        ArityMismatchError: If the sides are ill-typed or of different arity
        ValueError: If required headers are missing or variables are undeclared
    """
    rule = RuleSchema.from_document(parse_diagram_file(path))
    rule.validate()
    return rule


def load_catalog(directory: 'Union[str, pathlib.Path, None]' = None) -> 'list[RuleSchema]':
    """Loads every rule file of a catalog directory, sorted by file name

    Args:
        directory (str | Path, optional): catalog directory. Defaults to the shipped catalog.

    Raises:
        EmptyCatalogError: If the directory does not exist

    Returns:
        list[RuleSchema]: the rules, possibly empty
    """
    directory = pathlib.Path(directory) if directory is not None else shipped_catalog_directory()

    if not directory.is_dir():
        raise EmptyCatalogError(f'rule catalog {directory} does not exist or is not a directory')

    paths = sorted(path for path in directory.iterdir() if path.suffix == RULE_FILE_SUFFIX)
    if not paths:
        logging.warning(f'rule catalog {directory} has no {RULE_FILE_SUFFIX} files')

    rules = [load_rule(path) for path in paths]
    logging.info(f'loaded {len(rules)} rule(s) from {directory}')

    return rules
