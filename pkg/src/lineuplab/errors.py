"""Exception taxonomy shared by every module.

Each class carries a short machine-readable ``code`` so the HTTP layer and
the CLI can map failures without string-matching messages.
"""


class LineupError(Exception):
    """Base class for all package errors."""

    code = "error"


# --- data-table ---------------------------------------------------------

class ParseError(LineupError):
    code = "parse_error"


class RaggedRowError(ParseError):
    """Row with a cell count different from the header. Carries the 1-based
    body row index."""

    code = "ragged_row"

    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__(
            f"row {row} has {got} cells, expected {expected}"
        )


class MissingValueError(ParseError):
    code = "missing_value"

    def __init__(self, row: int, column: str):
        self.row = row
        self.column = column
        super().__init__(f"empty cell at row {row}, column {column!r}")


class SchemaError(ParseError):
    code = "schema_error"


class ColumnNotFound(LineupError):
    code = "column_not_found"


class TypeMismatch(LineupError):
    code = "type_mismatch"


# --- models -------------------------------------------------------------

class DegenerateDesign(LineupError):
    code = "degenerate_design"


class TooFewRows(LineupError):
    code = "too_few_rows"


class SeparationError(LineupError):
    """Maximum likelihood does not exist (complete/quasi-separation) or the
    fit failed to converge."""

    code = "separation"


class KindMismatch(LineupError):
    code = "kind_mismatch"


# --- null-gen -----------------------------------------------------------

class DegenerateGroups(LineupError):
    code = "degenerate_groups"


class DegenerateFit(LineupError):
    code = "degenerate_fit"


class InvalidFit(LineupError):
    code = "invalid_fit"


class DegenerateColumn(LineupError):
    code = "degenerate_column"


# --- diagnostics --------------------------------------------------------

class TooManyBins(LineupError):
    code = "too_many_bins"


class BadGroupCount(LineupError):
    code = "bad_group_count"


class DomainError(LineupError):
    code = "domain_error"


# --- lineup -------------------------------------------------------------

class IncompatibleSpec(LineupError):
    code = "incompatible_spec"


class NullGenerationFailed(LineupError):
    code = "null_generation_failed"

    def __init__(self, panel: int, retries: int, last_error: Exception):
        self.panel = panel
        self.retries = retries
        self.last_error = last_error
        super().__init__(
            f"panel {panel}: null generation failed after {retries} retries "
            f"({last_error})"
        )


class BadCounts(LineupError):
    code = "bad_counts"


class KeyTampered(LineupError):
    code = "key_tampered"


class KeyMismatch(LineupError):
    code = "key_mismatch"


class NoDataPanel(LineupError):
    code = "no_data_panel"
