import os
import logging

from dataclasses import dataclass
from typing      import Any, Callable, Mapping, Union
from zx_axiom_verifier.semantics import DEFAULT_TOLERANCE, DEFAULT_MAX_WIRES, MAX_WIRES_LIMIT

OUTPUT_FORMATS = ['text', 'json']

ENVIRONMENT_OVERRIDES = {
    'tolerance': ('ZXV_TOLERANCE', float),
    'max_wires': ('ZXV_MAX_WIRES', int),
    'seed': ('ZXV_SEED', int),
}


@dataclass(frozen=True)
class RunConfig:
    """Settings of one command line run

    Raises:
        ValueError: If the tolerance is not positive, max_wires is outside 1 .. 20 or the output format is unknown
    """

    command: str
    seed: int = 0
    tolerance: float = DEFAULT_TOLERANCE
    max_wires: int = DEFAULT_MAX_WIRES
    output_format: str = 'text'
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError(f'tolerance must be positive, found {self.tolerance}')
        if not 1 <= self.max_wires <= MAX_WIRES_LIMIT:
            raise ValueError(f'max_wires must be between 1 and {MAX_WIRES_LIMIT}, found {self.max_wires}')
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f'output_format must be one of the following: {", ".join(OUTPUT_FORMATS)}')

    @property
    def json(self) -> bool:
        return self.output_format == 'json'

    @property
    def log_level(self) -> int:
        return [logging.WARNING, logging.INFO, logging.DEBUG][min(self.verbosity, 2)]

    @classmethod
    def resolve(
            cls,
            command: str,
            flags: 'Mapping[str, Any]',
            environ: 'Union[Mapping[str, str], None]' = None
        ) -> 'RunConfig':
        """Builds the configuration with precedence flag > environment variable > default

        Args:
            command (str): subcommand name
            flags (Mapping[str, Any]): parsed flag values, None where the flag was not given
            environ (Mapping[str, str], optional): environment. Defaults to None, os.environ.

        Raises:
            ValueError: If an environment override cannot be parsed or a value is out of range

        Returns:
            RunConfig: the resolved configuration
        """
        environ = os.environ if environ is None else environ

        values = {}
        for field_name, (variable, cast) in ENVIRONMENT_OVERRIDES.items():
            if flags.get(field_name) is not None:
                values[field_name] = flags[field_name]
            elif environ.get(variable):
                values[field_name] = _cast(variable, environ[variable], cast)

        return cls(
            command=command,
            output_format='json' if flags.get('json') else 'text',
            verbosity=flags.get('verbose') or 0,
            **values
        )


def _cast(variable: str, text: str, cast: 'Callable[[str], Any]') -> Any:
    try:
        return cast(text)
    except ValueError:
        raise ValueError(f'{variable} must be a valid {cast.__name__}, found {text!r}')
