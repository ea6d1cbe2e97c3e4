from typing import Union


class ZXVerifierError(Exception):
    """Generic exception for the verifier
        It can receive the function name and the function arguments, besides the message, to better help debugging the error
    """
    def __init__(
        self,
        message=None,
        func_name=None,
        *args,
        **kwargs
    ):
        if message is None:
            message = 'There was an error during the verification'

        if func_name:
            arguments = ", ".join(str(arg) for arg in args)
            if kwargs:
                if args:
                    arguments += ", "
                arguments += ", ".join([f"{k}={v}" for k, v in kwargs.items()])

            message += f', on the execution of the {func_name}({arguments}) function'

        self.message = message

        super().__init__(self.message)


class DiagramParseError(ZXVerifierError):
    """Exception raised when a diagram or rule file cannot be parsed

    Attributes:
        line (int): 1-based line of the offending token
        column (int): 1-based column of the offending token
    """
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = '<input>') -> None:
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f'{source}:{line}:{column}: {message}')


class ArityMismatchError(ZXVerifierError):
    """Exception raised when a sequential composition connects a different number of wires"""
    def __init__(self, message: str, path: 'tuple[str, ...]' = ()) -> None:
        self.path = path
        location = '/'.join(path) if path else 'root'
        super().__init__(f'{message} (at {location})')


class UnboundVariableError(ZXVerifierError):
    def __init__(self, variable: str, func_name: Union[str, None] = None) -> None:
        self.variable = variable
        super().__init__(f'Unbound variable {variable!r}', func_name)


class BackendError(ZXVerifierError):
    """Exception raised when an operation is not available for the chosen backend, such as exact evaluation of a real angle"""
    def __init__(self, message: str) -> None:
        super().__init__(message)


class CapacityError(ZXVerifierError):
    """Exception raised when a configured size cap would be exceeded (wire count, cyclotomic order, enumeration size)"""
    def __init__(self, message: str) -> None:
        super().__init__(message)


class EmptyCatalogError(ZXVerifierError):
    """Exception raised when the rule catalog directory is missing or unreadable"""
    def __init__(self, message: str) -> None:
        super().__init__(message)
