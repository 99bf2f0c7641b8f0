"""Fixture file reader and table-value parser.

Fixture lines read ``family | key | value``. Values use the printed table
notation (``3^(1/2)``, ``R_2^0(r)``, ``Z_1,1^(-1)``, ``cos(2*phi)``, ``i``);
basis symbols are swapped for placeholders before sympy parses the rest.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr

from ..constants import FIXTURE_SEPARATOR, FIXTURE_SUFFIX
from ..exact.poly import CartPoly2, CartPoly3, RadialPoly, ZernExpansion2D, ZernExpansion3D
from ..exact.surd import ComplexSurd, SurdSum
from ..types import FIXTURE_FAMILIES, AngularKind, FixtureEntry, Index2D, SphIndex
from .errors import FixtureFormatError, ZernikeError

logger = logging.getLogger(__name__)

R, X, Y, Z = sympy.symbols("r x y z")

# (pattern, tag) in match order; 3D radial before 2D radial
_BASIS_PATTERNS = [
    (re.compile(r"Z_(\d+),(\d+)\^\((-?\d+)\)"), "Z"),
    (re.compile(r"Y_(\d+)\^\((-?\d+)\)"), "Y"),
    (re.compile(r"R_(\d+)\^\((\d+)\)(?:\(r\))?"), "R3"),
    (re.compile(r"R_(\d+)\^(\d+)(?:\(r\))?"), "R2"),
    (re.compile(r"(cos|sin)\((?:(\d+)\*)?phi\)"), "trig"),
]

Placeholder = Tuple[Union[str, int], ...]


def _to_fraction(q: sympy.Rational) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _to_surd(expr: sympy.Expr, text: str) -> SurdSum:
    """Real algebraic sympy number -> SurdSum."""
    out = SurdSum()
    for term in sympy.Add.make_args(sympy.expand(expr)):
        if term == 0:
            continue
        q, rest = term.as_coeff_Mul()
        radicand = rest**2
        if not q.is_Rational or not radicand.is_Rational or radicand <= 0:
            raise FixtureFormatError(
                f"not a rational multiple of a square root: {term}", context={"text": text}
            )
        out = out + SurdSum.sqrt(_to_fraction(radicand), _to_fraction(q))
    return out


def _to_complex_surd(expr: sympy.Expr, text: str) -> ComplexSurd:
    re_part, im_part = sympy.expand(expr).as_real_imag()
    return ComplexSurd(_to_surd(re_part, text), _to_surd(im_part, text))


def substitute_basis(text: str) -> Tuple[str, Dict[str, Placeholder]]:
    """
    Replace basis-function tokens with placeholder names.

    Args:
        text: Value text in table notation

    Returns:
        Tuple (rewritten text, placeholder name -> (tag, indices...))
    """
    names: Dict[Placeholder, str] = {}

    def _swap(tag: str):
        def inner(match: re.Match) -> str:
            groups = match.groups()
            if tag == "trig":
                key: Placeholder = (groups[0], int(groups[1] or 1))
            else:
                key = (tag,) + tuple(int(g) for g in groups)
            if key not in names:
                names[key] = f"B{len(names)}"
            return names[key]

        return inner

    for pattern, tag in _BASIS_PATTERNS:
        text = pattern.sub(_swap(tag), text)
    return text, {name: key for key, name in names.items()}


def parse_expression(text: str) -> Tuple[sympy.Expr, Dict[sympy.Symbol, Placeholder]]:
    """
    Parse table notation into a sympy expression.

    Returns:
        Tuple (expression, placeholder symbol -> basis key)

    Raises:
        FixtureFormatError: If sympy cannot parse the text
    """
    body, placeholders = substitute_basis(text)
    body = body.replace("[", "(").replace("]", ")").replace("^", "**")
    body = re.sub(r"\bi\b", "I", body)
    local = {name: sympy.Symbol(name) for name in placeholders}
    local.update({"r": R, "x": X, "y": Y, "z": Z, "I": sympy.I})
    try:
        expr = parse_expr(body, local_dict=local)
    except Exception as e:
        raise FixtureFormatError(f"cannot parse value: {e}", context={"text": text})
    return sympy.expand(expr), {local[name]: key for name, key in placeholders.items()}


def expand_terms(
    expr: sympy.Expr, gens: Sequence[sympy.Symbol], text: str = ""
) -> Dict[Tuple[int, ...], ComplexSurd]:
    """
    Split an expanded expression into exponent tuples over ``gens`` and exact coefficients.

    Args:
        expr: Expanded sympy expression, polynomial in gens
        gens: Generator symbols
        text: Original text for error context

    Returns:
        Map exponent tuple -> nonzero ComplexSurd
    """
    acc: Dict[Tuple[int, ...], ComplexSurd] = {}
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, monomial = term.as_independent(*gens, as_Add=False)
        exps = tuple(int(sympy.degree(monomial, g)) for g in gens)
        value = _to_complex_surd(coeff, text)
        acc[exps] = acc[exps] + value if exps in acc else value
    return {k: v for k, v in acc.items() if v}


def _basis_terms(text: str) -> List[Tuple[List[Placeholder], ComplexSurd]]:
    """Terms as (basis keys with multiplicity one, coefficient)."""
    expr, placeholders = parse_expression(text)
    gens = list(placeholders)
    out = []
    for exps, coeff in expand_terms(expr, gens, text).items():
        if any(e > 1 for e in exps):
            raise FixtureFormatError("basis symbol raised to a power", context={"text": text})
        out.append(([placeholders[g] for g, e in zip(gens, exps) if e], coeff))
    return out


def _single(keys: List[Placeholder], tag: str, text: str) -> Placeholder:
    found = [k for k in keys if k[0] == tag]
    if len(found) != 1 or len(keys) != 1:
        raise FixtureFormatError(
            f"expected exactly one {tag} factor per term", context={"text": text}
        )
    return found[0]


def _split_trig(keys: List[Placeholder]) -> Tuple[List[Placeholder], Optional[Placeholder]]:
    trig = [k for k in keys if k[0] in ("cos", "sin")]
    rest = [k for k in keys if k[0] not in ("cos", "sin")]
    return rest, (trig[0] if trig else None)


# ============= FAMILY VALUES =============


def _parse_radial(text: str) -> RadialPoly:
    expr, _ = parse_expression(text)
    return RadialPoly({e: c.re for (e,), c in expand_terms(expr, [R], text).items()})


def _parse_cart2(text: str) -> CartPoly2:
    expr, _ = parse_expression(text)
    return CartPoly2({k: c.re for k, c in expand_terms(expr, [X, Y], text).items()})


def _parse_cart3(text: str) -> CartPoly3:
    parts = text.split(" , ")
    if len(parts) != 2:
        raise FixtureFormatError("expected 're , im'", context={"text": text})
    re_expr, _ = parse_expression(parts[0])
    im_expr, _ = parse_expression(parts[1])
    return CartPoly3(
        expand_terms(sympy.expand(re_expr + sympy.I * im_expr), [X, Y, Z], text)
    )


def _parse_radial_sum(text: str, tag: str) -> Dict[int, SurdSum]:
    out: Dict[int, SurdSum] = {}
    for keys, coeff in _basis_terms(text):
        out[int(_single(keys, tag, text)[1])] = coeff.re
    return out


def _parse_fhat(text: str) -> Dict[int, SurdSum]:
    out: Dict[int, SurdSum] = {}
    for keys, coeff in _basis_terms(text):
        out[int(_single(keys, "R3", text)[2])] = coeff.re
    return out


def _parse_trig(text: str) -> Dict[AngularKind, Fraction]:
    out: Dict[AngularKind, Fraction] = {}
    for keys, coeff in _basis_terms(text):
        if not keys:
            out[AngularKind.radial()] = coeff.re.as_rational()
            continue
        name, m = _single(keys, keys[0][0], text)
        kind = AngularKind.cos(int(m)) if name == "cos" else AngularKind.sin(int(m))
        out[kind] = coeff.re.as_rational()
    return out


def _zernike_2d_term(keys: List[Placeholder], text: str) -> Tuple[int, int, str]:
    rest, trig = _split_trig(keys)
    _, n, m = _single(rest, "R2", text)
    if trig is None:
        return int(n), int(m), "radial"
    if int(trig[1]) != m:
        raise FixtureFormatError("trig order does not match R_n^m", context={"text": text})
    return int(n), int(m), str(trig[0])


def _parse_cart2z2d(text: str) -> ZernExpansion2D:
    return ZernExpansion2D({_zernike_2d_term(keys, text): c.re for keys, c in _basis_terms(text)})


def _parse_noll(text: str) -> Tuple[SurdSum, Index2D, AngularKind]:
    terms = _basis_terms(text)
    if len(terms) != 1:
        raise FixtureFormatError("Noll row must hold one term", context={"text": text})
    keys, coeff = terms[0]
    n, m, kind = _zernike_2d_term(keys, text)
    if kind == "radial":
        return coeff.re, Index2D(n, m), AngularKind.radial()
    angular = AngularKind(kind, m)  # type: ignore[arg-type]
    return coeff.re, Index2D(n, m), angular


def _parse_u(text: str) -> ZernExpansion3D:
    out = {}
    for keys, coeff in _basis_terms(text):
        _, n, l, m = _single(keys, "Z", text)
        out[(int(n), int(l), int(m))] = coeff
    return ZernExpansion3D(out)


def _parse_yprod(text: str) -> Dict[SphIndex, SurdSum]:
    out: Dict[SphIndex, SurdSum] = {}
    for keys, coeff in _basis_terms(text):
        _, l, m = _single(keys, "Y", text)
        out[SphIndex(int(l), int(m))] = coeff.re
    return out


_FAMILY_PARSERS = {
    "radial2d": _parse_radial,
    "radial3d": _parse_radial,
    "h": lambda text: _parse_radial_sum(text, "R2"),
    "g": lambda text: _parse_radial_sum(text, "R2"),
    "f": lambda text: _parse_radial_sum(text, "R3"),
    "k": lambda text: _parse_radial_sum(text, "R3"),
    "fhat": _parse_fhat,
    "noll": _parse_noll,
    "trig": _parse_trig,
    "rjcart": _parse_cart2,
    "z2cart2d": _parse_cart2,
    "cart2z2d": _parse_cart2z2d,
    "ylmcart": _parse_cart3,
    "z3dcart": _parse_cart3,
    "u": _parse_u,
    "yprod": _parse_yprod,
}


def parse_value(family: str, text: str) -> Any:
    """
    Parse one value text for a fixture family.

    Args:
        family: Fixture family name
        text: Value in table notation

    Returns:
        RadialPoly, CartPoly2/3, expansion map or scalar tuple depending on family

    Raises:
        FixtureFormatError: If the text does not fit the family
    """
    if family not in _FAMILY_PARSERS:
        raise FixtureFormatError(f"unknown fixture family {family!r}")
    return _FAMILY_PARSERS[family](text.strip())


def parse_key(text: str) -> Tuple[Union[int, str], ...]:
    """'2,0,cos' -> (2, 0, 'cos')."""
    out: List[Union[int, str]] = []
    for part in text.split(","):
        part = part.strip()
        out.append(int(part) if re.fullmatch(r"-?\d+", part) else part)
    return tuple(out)


# ============= FILES =============


def parse_fixture_line(
    line: str, file: Optional[str] = None, line_no: int = 0
) -> Optional[FixtureEntry]:
    """
    Parse ``family | key | value``; blank and ``#`` lines give None.

    Raises:
        FixtureFormatError: With file and line number on any failure
    """
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = stripped.split(FIXTURE_SEPARATOR, 2)
    if len(parts) != 3:
        raise FixtureFormatError("expected 'family | key | value'", file, line_no)
    family, key_text, text = (p.strip() for p in parts)
    try:
        return FixtureEntry(
            family=family,
            key=parse_key(key_text),
            text=text,
            value=parse_value(family, text),
            source_line=line_no,
        )
    except FixtureFormatError as e:
        raise FixtureFormatError(e.message, file, line_no, e.context)
    except (ValueError, ZernikeError) as e:
        # pydantic validation and index-type errors
        raise FixtureFormatError(str(e), file, line_no)


def read_fixture_file(path: Union[str, Path]) -> List[FixtureEntry]:
    """Parse every row of one fixture file."""
    path = Path(path)
    entries = []
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            entry = parse_fixture_line(line, str(path), line_no)
            if entry is not None:
                entries.append(entry)
    logger.debug("read %d rows from %s", len(entries), path)
    return entries


def load_fixtures(fixture_dir: Union[str, Path], family: str) -> List[FixtureEntry]:
    """
    Rows of one family from ``<fixture_dir>/<family>.txt``.

    Raises:
        FixtureFormatError: If the family is unknown, the file is missing or a row is bad
    """
    if family not in FIXTURE_FAMILIES:
        raise FixtureFormatError(f"unknown fixture family {family!r}")
    path = Path(fixture_dir) / f"{family}{FIXTURE_SUFFIX}"
    if not path.exists():
        raise FixtureFormatError("fixture file not found", str(path))
    entries = read_fixture_file(path)
    stray = [e for e in entries if e.family != family]
    if stray:
        raise FixtureFormatError(
            f"row of family {stray[0].family!r} in {family} file", str(path), stray[0].source_line
        )
    return entries
