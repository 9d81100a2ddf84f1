"""Exact classification toolkit for linear codes over the rings E_p.

E_p is the non-unital, noncommutative local ring of order p^2 generated
by r and s with pr = ps = 0, r^2 = r, s^2 = s, rs = r and sr = s.  The
package provides exact arithmetic in E_p, codes over E_p as residue and
torsion pairs of F_p codes, one-sided duals, monomial equivalence with
witnesses and canonical forms, and classification pipelines for LCD and
self-dual codes at small lengths, checked against embedded reference
tables.
"""

from .classify import (
    Classification,
    ClassRecord,
    RightSelfDualReport,
    RowVerdict,
    TableReport,
    Verdict,
    classify_budget,
    classify_lcd,
    classify_left_self_dual,
    classify_mds_amds_lcd,
    classify_self_dual,
    right_self_dual_report,
    ternary_lcd_lower_bound,
    verify_table,
)
from .code import EpCode, EpGenMatrix, EpVec, ParseError, compose, decompose
from .equiv import (
    BudgetExceeded,
    MonomialMapEp,
    MonomialMapFp,
    canonical_form,
    canonical_form_fp,
    canonical_form_free,
    canonical_key,
    canonical_key_fp,
    equivalent_ep,
    equivalent_fp,
)
from .fp import FpCode, MdsStatus, gaussian_binomial, iter_subspaces, rref
from .ring import EpElem, elements
from .tables import CountTable, MatrixTable, TableRow, load_table

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassRecord",
    "Classification",
    "CountTable",
    "EpCode",
    "EpElem",
    "EpGenMatrix",
    "EpVec",
    "FpCode",
    "MatrixTable",
    "MdsStatus",
    "MonomialMapEp",
    "MonomialMapFp",
    "ParseError",
    "RightSelfDualReport",
    "RowVerdict",
    "TableReport",
    "TableRow",
    "Verdict",
    "canonical_form",
    "canonical_form_fp",
    "canonical_form_free",
    "canonical_key",
    "canonical_key_fp",
    "classify_budget",
    "classify_lcd",
    "classify_left_self_dual",
    "classify_mds_amds_lcd",
    "classify_self_dual",
    "compose",
    "decompose",
    "elements",
    "equivalent_ep",
    "equivalent_fp",
    "gaussian_binomial",
    "iter_subspaces",
    "load_table",
    "right_self_dual_report",
    "rref",
    "ternary_lcd_lower_bound",
    "verify_table",
    "__version__",
]
