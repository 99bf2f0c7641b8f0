"""Text and JSON renderings of coefficient tables.

Text rows follow the printed table notation, ``R_4^0(r) = 1 -6*r^2 +6*r^4``.
JSON emits one record per coefficient:
``{"family": ..., "key": [...], "terms": [{"num", "den", "radicand", "imag"}]}``
where ``key`` is the row key followed by the basis key of the coefficient.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple, Union

from ..exact.poly import CartPoly2, CartPoly3, RadialPoly
from ..exact.surd import ComplexSurd, SurdSum, format_rational

Coefficient = Union[SurdSum, ComplexSurd, Fraction, int]


@dataclass
class TableTerm:
    """One coefficient of a row and the basis element it multiplies."""

    basis_key: Tuple[Any, ...]
    basis: str  # "" for a constant
    coeff: Coefficient


@dataclass
class TableRow:
    """A rendered equation: label = sum of terms."""

    family: str
    key: Tuple[Any, ...]
    label: str
    terms: List[TableTerm] = field(default_factory=list)
    complex_split: bool = False  # right-hand side as "re , im"

    def text(self) -> str:
        return render_row(self)


# ============= SCALARS =============


def _as_complex(coeff: Coefficient) -> ComplexSurd:
    if isinstance(coeff, ComplexSurd):
        return coeff
    return ComplexSurd(coeff)


def _monomial_text(q: Fraction, radicand: int, imag: bool) -> str:
    """|q| * [i] * sqrt(radicand) without sign, empty when the product is 1."""
    parts = []
    if abs(q) != 1:
        parts.append(format_rational(abs(q)))
    if imag:
        parts.append("i")
    if radicand != 1:
        parts.append(f"{radicand}^(1/2)")
    return "*".join(parts)


def _surd_signed_text(value: SurdSum, imag: bool = False) -> Tuple[int, str]:
    """(sign, unsigned body); multi-term sums are parenthesised with sign +1."""
    items = list(value.items())
    if len(items) == 1:
        k, q = items[0]
        return (1 if q > 0 else -1), _monomial_text(q, k, imag)
    body = value.render()
    return 1, f"i*({body})" if imag else f"({body})"


def coefficient_text(coeff: Coefficient) -> Tuple[int, str]:
    """
    Sign and unsigned body of a coefficient.

    Args:
        coeff: Rational, SurdSum or ComplexSurd

    Returns:
        Tuple (sign, body); body is "" when the coefficient is +-1
    """
    if isinstance(coeff, (int, Fraction)):
        coeff = SurdSum.rational(coeff)
    if isinstance(coeff, SurdSum):
        return _surd_signed_text(coeff)
    if not coeff.im:
        return _surd_signed_text(coeff.re)
    if not coeff.re:
        return _surd_signed_text(coeff.im, imag=True)
    re_sign, re_body = _surd_signed_text(coeff.re)
    im_sign, im_body = _surd_signed_text(coeff.im, imag=True)
    re_text = ("-" if re_sign < 0 else "") + (re_body or "1")
    im_text = ("-" if im_sign < 0 else "+") + (im_body or "i")
    return 1, f"({re_text} {im_text})"


def _term_text(sign: int, body: str, basis: str, first: bool) -> str:
    if basis and body:
        text = f"{body}*{basis}"
    else:
        text = basis or body or "1"
    if sign < 0:
        return f"-{text}"
    return text if first else f"+{text}"


def render_terms(terms: Sequence[TableTerm]) -> str:
    """Join terms as ``a +b -c``; ``0`` when empty."""
    parts = []
    for term in terms:
        sign, body = coefficient_text(term.coeff)
        parts.append(_term_text(sign, body, term.basis, not parts))
    return " ".join(parts) if parts else "0"


def render_row(row: TableRow) -> str:
    """``label = rhs``, with ``re , im`` when the row is complex-split."""
    if not row.complex_split:
        return f"{row.label} = {render_terms(row.terms)}"
    re_terms = [TableTerm(t.basis_key, t.basis, _as_complex(t.coeff).re) for t in row.terms]
    im_terms = [TableTerm(t.basis_key, t.basis, _as_complex(t.coeff).im) for t in row.terms]
    re_text = render_terms([t for t in re_terms if t.coeff])
    im_text = render_terms([t for t in im_terms if t.coeff])
    return f"{row.label} = {re_text} , {im_text}"


# ============= BASIS NAMES =============


def power_text(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def monomial_text(exps: Sequence[int], names: Sequence[str] = ("x", "y", "z")) -> str:
    """x^2*y style; "" for the constant monomial."""
    return "*".join(p for p in (power_text(v, e) for v, e in zip(names, exps)) if p)


def trig_text(kind: str, m: int) -> str:
    """cos(2*phi), sin(phi); "" for the radial kind."""
    if kind == "radial" or m == 0:
        return ""
    return f"{kind}(phi)" if m == 1 else f"{kind}({m}*phi)"


def r2_text(n: int, m: int) -> str:
    return f"R_{n}^{m}(r)"


def r3_text(n: int, l: int, with_arg: bool = True) -> str:
    return f"R_{n}^({l})(r)" if with_arg else f"R_{n}^({l})"


def z3_text(n: int, l: int, m: int) -> str:
    return f"Z_{n},{l}^({m})"


def y_text(l: int, m: int) -> str:
    return f"Y_{l}^({m})"


def radial_terms(poly: RadialPoly) -> List[TableTerm]:
    return [TableTerm((e,), power_text("r", e), c) for e, c in poly.items()]


def cart2_terms(poly: CartPoly2) -> List[TableTerm]:
    return [TableTerm(k, monomial_text(k, ("x", "y")), c) for k, c in poly.items()]


def cart3_terms(poly: CartPoly3) -> List[TableTerm]:
    return [TableTerm(k, monomial_text(k), c) for k, c in poly.items()]


# ============= OUTPUT =============


def coefficient_json(coeff: Coefficient) -> List[Dict[str, object]]:
    if isinstance(coeff, (int, Fraction)):
        coeff = SurdSum.rational(coeff)
    return coeff.to_json()


def rows_to_records(rows: Sequence[TableRow]) -> List[Dict[str, Any]]:
    """One record per coefficient, keys row key + basis key."""
    records = []
    for row in rows:
        for term in row.terms:
            records.append(
                {
                    "family": row.family,
                    "key": list(row.key) + list(term.basis_key),
                    "terms": coefficient_json(term.coeff),
                }
            )
    return records


def render_table(rows: Sequence[TableRow], fmt: str = "text") -> str:
    """
    Render rows in the requested format.

    Args:
        rows: Rows in output order
        fmt: "text" or "json"

    Returns:
        Output text ending in a newline
    """
    if fmt == "json":
        return json.dumps(rows_to_records(rows), indent=2, sort_keys=True) + "\n"
    return "".join(row.text() + "\n" for row in rows)
