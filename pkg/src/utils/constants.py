"""
Constants for the Petri net homology engine.

This module contains all magic numbers, string identifiers, and configuration
defaults used throughout the application. Centralizing these makes the codebase
easier to maintain and tune.
"""

from typing import Dict, Tuple


# =============================================================================
# STATE SPACE EXPLORATION
# =============================================================================

MODE_REACHABLE = "reachable"     # Breadth-first closure of the initial marking
MODE_ALL_STATES = "all-states"   # The full power set {0,1}^P

VALID_MODES: Tuple[str, ...] = (MODE_REACHABLE, MODE_ALL_STATES)

# Exceeding this many states is an error, never a silent truncation
DEFAULT_STATE_CAP = 2 ** 20


# =============================================================================
# PIPELINE NETS
# =============================================================================

VARIANT_P = "P"            # Full pipeline t_1 -> p_1 -> ... -> p_{n-1} -> t_n
VARIANT_N = "N"            # Pipeline with t_1 deleted
VARIANT_NPRIME = "Nprime"  # Pipeline with t_2 deleted

VALID_VARIANTS: Tuple[str, ...] = (VARIANT_P, VARIANT_N, VARIANT_NPRIME)

# Display names used in reports ("P_4", "N_4", "N'_4")
VARIANT_LABELS: Dict[str, str] = {
    VARIANT_P: "P",
    VARIANT_N: "N",
    VARIANT_NPRIME: "N'",
}

PIPELINE_PLACE_PREFIX = "p"
PIPELINE_EVENT_PREFIX = "t"

MIN_PIPELINE_LENGTH = 2

# Upper bound accepted by verify_theorems unless overridden in settings
DEFAULT_VERIFY_N_MAX = 12


# =============================================================================
# ANALYSES
# =============================================================================

ANALYSIS_HOMOLOGY = "homology"
ANALYSIS_DIRECTED_0 = "directed-0"
ANALYSIS_DIRECTED_1 = "directed-1"
ANALYSIS_DEADLOCKS = "deadlocks"
ANALYSIS_SENDERS = "senders"
ANALYSIS_VALIDATE = "validate"
ANALYSIS_MV_CHECK = "mv-check"

# Declaration order is also execution order
VALID_ANALYSES: Tuple[str, ...] = (
    ANALYSIS_HOMOLOGY,
    ANALYSIS_DIRECTED_0,
    ANALYSIS_DIRECTED_1,
    ANALYSIS_DEADLOCKS,
    ANALYSIS_SENDERS,
    ANALYSIS_VALIDATE,
    ANALYSIS_MV_CHECK,
)

DIRECTED_ANALYSIS_EPSILON: Dict[str, int] = {
    ANALYSIS_DIRECTED_0: 0,
    ANALYSIS_DIRECTED_1: 1,
}

OUTPUT_TEXT = "text"
OUTPUT_STRUCTURED = "structured"


# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_RESOURCE_CAP = 4


# =============================================================================
# NET FILE GRAMMAR
# =============================================================================

COMMENT_TOKEN = "#"
EMPTY_SET_TOKEN = "-"
LIST_SEPARATOR = ","

KEYWORD_PLACES = "places:"
KEYWORD_EVENT = "event"
KEYWORD_PRE = "pre"
KEYWORD_POST = "post"
KEYWORD_INITIAL = "initial:"

# Identifiers: letters/digits/underscore, starting with a letter
IDENTIFIER_PATTERN = r"[A-Za-z][A-Za-z0-9_]*"

# Net documents larger than this are rejected before parsing
MAX_NET_DOCUMENT_BYTES = 1024 * 1024  # 1MB


# =============================================================================
# RENDERING
# =============================================================================

DIRECT_SUM_SYMBOL = "⊕"
TRIVIAL_GROUP = "0"
INTEGERS = "Z"
