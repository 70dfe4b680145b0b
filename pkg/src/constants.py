"""Shared constants and error messages for untwist."""

# Error messages
ERROR_CANNOT_CREATE_DIR = "Cannot create {parent_dir}: {error}"
ERROR_UNSUPPORTED_FAMILY = "Unsupported group family: {family}"
ERROR_PARAMETER_OUT_OF_RANGE = "Parameter {name}={value} outside [{low}, {high}]"
ERROR_BALL_TOO_LARGE = (
    "Ball of radius {radius} exceeds the element cap of {cap} "
    "(raise [caps].ball_elements or use a smaller radius)"
)
ERROR_RADIUS_BUDGET = (
    "Word length of {element} not found within the BFS cap of {cap} elements"
)
ERROR_TORSION = "Element {element} has finite order {order}"
ERROR_NOT_A_GROUP = "Table is not a group: {reason} (witness {witness})"
ERROR_PARSE = "Cannot parse {what}: {text!r}"
ERROR_BACKGROUND_NOT_ADMISSIBLE = (
    "Constant background {symbol!r} is not admissible for the subshift"
)
ERROR_NOT_IN_SUBSHIFT = "Configuration is not in the subshift (window at {element})"
ERROR_PATTERN_NOT_ADMISSIBLE = "Pattern {name} does not extend to a member of X"
ERROR_PATTERN_OUTSIDE_BALL = (
    "Pattern {name} has a cell at {element} outside B({radius})"
)
ERROR_AGREEMENT_BALL = (
    "Configurations must agree on B({radius}); they differ at {element}"
)
ERROR_PERIOD_TOO_SMALL = (
    "Period {period} does not separate {first} and {second} "
    "(same coset of (KZ)^d)"
)
ERROR_RELATOR_VIOLATION = "Relator {relator} evaluates to {value} on pattern {pattern}"
ERROR_INVERSE_INCONSISTENCY = (
    "Rules for {letter} and {inverse} violate c(s^-1,x) = c(s,s^-1 x)^-1 "
    "on pattern {pattern}"
)
ERROR_CAP_EXCEEDED = "{what} needs {needed} patterns, cap is {cap}"
ERROR_HOMOMORPHISM_INVALID = "Homomorphism does not respect relator {relator}"
ERROR_SEPARATION_VIOLATED = (
    "Path point {element} lies in B({radius}); window and support are not separated"
)
ERROR_NO_WITNESS_CONSTRUCTOR = "No specification witness constructor for {kind} shifts"
ERROR_PATTERN_ENUMERATION = (
    "Transfer table over B({radius}) needs {needed} patterns, cap is {cap}"
)
ERROR_RADIUS_INSUFFICIENT = (
    "Transfer table radius {radius} does not cover configuration support {support}"
)
ERROR_NOT_CONNECTED = (
    "{source} and {target} are not connected in B({outer}) minus B({inner})"
)
ERROR_LIMIT_NOT_STABLE = (
    "Limit along {direction} changed at n={moved_at} after stabilizing at N*={index}"
)

# Caps and budgets
DEFAULT_BALL_CAP = 1_000_000
DEFAULT_BFS_CAP = 1_000_000
DEFAULT_RELATOR_CAP = 2**20
DEFAULT_TRANSFER_CAP = 2**16
DEFAULT_TRANSFER_RADIUS = 2
MEMO_STORE_SIZE = 256

# Debugging: recompute every limit on [N*, N* + LIMIT_CHECK_WINDOW]
DEBUG_LIMIT_CHECKS = False
LIMIT_CHECK_WINDOW = 5

# Family bounds
MAX_RANK = 8
MAX_FACTORS = 8
MAX_FACTOR_ORDER = 64
MAX_ALPHABET = 64
MAX_TABLE_SIZE = 256

# Pair batteries
DEFAULT_EXHAUSTIVE_RADIUS = 2
DEFAULT_RANDOM_PAIRS = 1000
DEFAULT_RANDOM_RADIUS = 5
DEFAULT_VERIFY_SAMPLES = 500
DEFAULT_RELATOR_SAMPLES = 4096

# End estimation
DEFAULT_END_SCHEDULE = ((1, 5), (2, 6), (3, 7))
STABILIZATION_WINDOW = 3

# Reports
SCHEMA_VERSION = 1
DEFAULT_CONFIG_FILE = ".untwist.toml"
DEFAULT_SEED = 0

# Exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INCONCLUSIVE = 3
EXIT_OBSTRUCTION = 4

MIXING_ASSUMPTION = (
    "The shift action is assumed topologically mixing; glue checks are "
    "finite-radius evidence, not a proof."
)
