"""
Core constants for the application.
"""

# Graph classes with coefficient tables
CLASS_PLANAR = "P2planar"
CLASS_NETWORKS_PLANAR = "NP"
CLASS_R = "R"
CLASS_S = "S"
CLASS_PPAR = "Ppar"
CLASS_GSP = "Gsp"
CLASS_F = "F"
CLASS_HP = "HP"
CLASS_HF = "HF"
CLASS_CDOT = "Cdot"
CLASS_CF = "CF"

SERIES_CLASSES = [
    CLASS_PLANAR,
    CLASS_NETWORKS_PLANAR,
    CLASS_R,
    CLASS_S,
    CLASS_PPAR,
    CLASS_GSP,
    CLASS_F,
    CLASS_HP,
    CLASS_HF,
    CLASS_CDOT,
    CLASS_CF,
]

# Classes the exhaustive graph oracle can classify
ORACLE_CLASSES = [CLASS_F, CLASS_PLANAR, CLASS_HP, CLASS_HF, CLASS_GSP]

# Table provenance
PROVENANCE_ORACLE = "oracle"
PROVENANCE_IMPORTED = "imported"
PROVENANCE_COMPUTED = "computed"

PROVENANCE_CHOICES = [
    (PROVENANCE_ORACLE, "Oracle"),
    (PROVENANCE_IMPORTED, "Imported"),
    (PROVENANCE_COMPUTED, "Computed"),
]

# Table kinds
KIND_COEFFICIENTS = "coefficients"
KIND_TOTALS = "totals"

KIND_CHOICES = [
    (KIND_COEFFICIENTS, "Coefficients (n, m, count)"),
    (KIND_TOTALS, "Totals (n, count)"),
]

# Output formats of the tables command
FORMAT_CSV = "csv"
FORMAT_JSON = "json"
FORMAT_TABLE_TEXT = "table-text"
OUTPUT_FORMATS = [FORMAT_CSV, FORMAT_JSON, FORMAT_TABLE_TEXT]

# Oracle strategies
STRATEGY_SUBSETS = "subsets"
STRATEGY_ATLAS = "atlas"
STRATEGY_EXTENSION = "extension"
ORACLE_STRATEGIES = [STRATEGY_SUBSETS, STRATEGY_ATLAS, STRATEGY_EXTENSION]

# Command exit codes
EXIT_OK = 0
EXIT_IO = 1
EXIT_LIMIT = 2
EXIT_MISMATCH = 3

# Decomposition rejection reasons
REJECT_NOT_2_CONNECTED = "not-2-connected"
REJECT_PLANAR = "planar"
REJECT_K33 = "K33"
REJECT_NOT_PROJECTIVE_PLANAR = "not-projective-planar"
