"""
Published coefficient tables shipped with the package.
"""
import logging
from pathlib import Path

from core.constants import CLASS_CF, CLASS_F, CLASS_HF, CLASS_HP, KIND_COEFFICIENTS, KIND_TOTALS
from core.exceptions import PreconditionError

from basis.table_format import CoefficientTable, load_table

logger = logging.getLogger(__name__)

REFERENCE_DIR = Path(__file__).resolve().parent / 'reference_tables'

REFERENCE_FILES = {
    (CLASS_F, KIND_COEFFICIENTS): 'F.tbl',
    (CLASS_F, KIND_TOTALS): 'F_totals.tbl',
    (CLASS_HP, KIND_COEFFICIENTS): 'HP.tbl',
    (CLASS_HP, KIND_TOTALS): 'HP_totals.tbl',
    (CLASS_HF, KIND_COEFFICIENTS): 'HF.tbl',
    (CLASS_HF, KIND_TOTALS): 'HF_totals.tbl',
    (CLASS_CF, KIND_TOTALS): 'CF_totals.tbl',
}

# The published H_P table lists K2 at (2, 1); the H_P series here excludes it.
HP_K2_RECORD = (2, 1)


def reference_table(class_name: str, kind: str = KIND_COEFFICIENTS) -> CoefficientTable:
    try:
        name = REFERENCE_FILES[(class_name, kind)]
    except KeyError:
        raise PreconditionError(f"no reference table for {class_name} ({kind})")
    return load_table(REFERENCE_DIR / name)


def reference_tables() -> dict:
    """Every shipped table keyed by (class_name, kind)."""
    return {key: reference_table(*key) for key in REFERENCE_FILES}


def hp_without_k2(table: CoefficientTable) -> CoefficientTable:
    """An H_P table with the K2 record removed."""
    records = tuple(r for r in table.records if tuple(r[:2]) != HP_K2_RECORD)
    if len(records) != len(table.records):
        logger.info("Dropped the K2 record (2, 1) from the H_P table")
    return CoefficientTable(table.class_name, table.nmax, records, table.provenance, table.kind)
