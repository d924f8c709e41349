"""
Conversion between in-memory coefficient tables and stored ones.
"""
import logging

from django.db import transaction

from core.config import get_limit
from core.constants import CLASS_PLANAR, KIND_COEFFICIENTS
from core.exceptions import InsufficientBasisError

from .derive import derive_planar_table
from .models import CoefficientRecord, CoefficientTable as StoredTable
from .oracle import planar_oracle_table
from .table_format import CoefficientTable, first_missing_order, load_table, merge_tables

logger = logging.getLogger(__name__)


@transaction.atomic
def table_to_model(table: CoefficientTable, source: str = '') -> StoredTable:
    """
    Persist a table with all its records.
    """
    stored = StoredTable.objects.create(
        class_name=table.class_name,
        nmax=table.nmax,
        provenance=table.provenance,
        kind=table.kind,
        source=source,
    )
    if table.is_totals:
        rows = [CoefficientRecord(table=stored, n=n, m=None, count=str(count)) for n, count in table.records]
    else:
        rows = [CoefficientRecord(table=stored, n=n, m=m, count=str(count)) for n, m, count in table.records]
    CoefficientRecord.objects.bulk_create(rows)
    logger.info(f"Stored table {stored.slug} with {len(rows)} records")
    return stored


def model_to_table(stored: StoredTable) -> CoefficientTable:
    if stored.kind == KIND_COEFFICIENTS:
        records = tuple((r.n, r.m, r.value) for r in stored.records.all())
    else:
        records = tuple((r.n, r.value) for r in stored.records.all())
    return CoefficientTable(
        class_name=stored.class_name,
        nmax=stored.nmax,
        records=records,
        provenance=stored.provenance,
        kind=stored.kind,
    )


def latest_table(class_name: str, kind: str = KIND_COEFFICIENTS) -> CoefficientTable:
    """
    The most recent stored table of a class with the largest order.

    Raises InsufficientBasisError when nothing is stored.
    """
    stored = (
        StoredTable.objects.filter(class_name=class_name, kind=kind)
        .order_by('-nmax', '-created_at')
        .first()
    )
    if stored is None:
        raise InsufficientBasisError(0, None, what=f"a stored {class_name} table")
    return model_to_table(stored)


def resolve_planar_basis(paths=(), hp_path=None, required_order=None, workers=None, use_stored=True) -> CoefficientTable:
    """
    The P basis for a run, from the first source that applies:

    1. the given basis files, merged;
    2. P derived from an H_P table;
    3. the largest stored P2planar table, if it reaches required_order;
    4. the oracle, if required_order is within the atlas.

    Files and derived tables are returned even when they fall short of
    required_order; the caller decides what that allows. Merged files with
    an order missing below their nmax are refused.
    """
    if paths:
        tables = [load_table(path) for path in paths]
        for table in tables:
            if table.class_name != CLASS_PLANAR or table.is_totals:
                raise InsufficientBasisError(
                    required_order or 2, None, what=f"a {CLASS_PLANAR} coefficient table (got {table.class_name})"
                )
        merged = merge_tables(tables)
        gap = first_missing_order(merged)
        if gap is not None:
            raise InsufficientBasisError(
                required_order or merged.nmax, gap - 1, what="the merged basis files"
            )
        return merged

    if hp_path is not None:
        hp_table = load_table(hp_path)
        nmax = hp_table.nmax if required_order is None else min(required_order, hp_table.nmax)
        return derive_planar_table(hp_table, nmax)

    if required_order is None:
        required_order = 2
    best = None
    if use_stored:
        try:
            best = latest_table(CLASS_PLANAR)
        except InsufficientBasisError:
            logger.debug("No stored P2planar table")
        if best is not None and best.nmax >= required_order:
            logger.info(f"Using the stored P2planar table to n={best.nmax}")
            return best

    if required_order <= get_limit('ATLAS_MAX_N'):
        return planar_oracle_table(required_order, workers=workers)
    raise InsufficientBasisError(required_order, None if best is None else best.nmax)
