'''Error types shared across the toolkit.

InputError covers malformed structures, files and arguments (CLI exit
code 2).  ResourceLimitError covers configured size caps (exit code 3).
AgreementError covers cross-checks that must never fail on correct code
(exit code 1).
'''


class ToolkitError(Exception):
    'Base class for every error raised deliberately by this package.'


class InputError(ToolkitError):
    'Malformed structure, file or argument.'


class PreconditionError(InputError):
    'Operation called on input violating a documented precondition.'


class ResourceLimitError(ToolkitError):
    'A configured size cap would be exceeded.'


class AgreementError(ToolkitError):
    'An internal consistency assertion failed.'
