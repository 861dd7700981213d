"""
Text file formats.

Module presentation::

    p r n
    q_1; q_2; ...; q_n        # one relation per line, n components

Extension algebra: a header line ``p n`` followed by a module presentation
block over k[x1..xn]. System files are read by
:func:`metabelian.equations.parse`.
"""

from pathlib import Path
from typing import List, Tuple, Union

from metabelian.exceptions import ConfigurationError, ParseError
from metabelian.lie.context import algebra_context
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.polynomial import PolynomialRing
from metabelian.modcore.presentation import ModulePresentation

PathLike = Union[str, Path]


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def _header(number: int, content: str, size: int) -> Tuple[int, ...]:
    fields = content.split()
    if len(fields) != size or not all(field.isdigit() for field in fields):
        raise ParseError(
            f"line {number}: expected a header of {size} integers, found {content!r}"
        )
    return tuple(int(field) for field in fields)


def _module(lines: List[Tuple[int, str]]) -> ModulePresentation:
    if not lines:
        raise ParseError("missing module header `p r n`")
    number, content = lines[0]
    p, r, n = _header(number, content, 3)
    try:
        ring = PolynomialRing(p, r)
    except (ConfigurationError, ValueError) as e:
        raise ParseError(f"line {number}: {e}") from e
    rows = []
    for number, content in lines[1:]:
        components = [part.strip() for part in content.split(";")]
        if len(components) != n:
            raise ParseError(
                f"line {number}: expected {n} components, found {len(components)}"
            )
        try:
            rows.append([ring.parse(component) for component in components])
        except ParseError as e:
            raise ParseError(f"line {number}: {e}") from e
    return ModulePresentation.from_rows(ring, n, rows)


def parse_module(text: str) -> ModulePresentation:
    return _module(_content_lines(text))


def format_module(M: ModulePresentation) -> str:
    return M.format()


def parse_extension(text: str) -> ExtensionAlgebra:
    """Parse ``p n`` and a module presentation over k[x1..xn]."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing algebra header `p n`")
    number, content = lines[0]
    p, n = _header(number, content, 2)
    M = _module(lines[1:])
    if M.ring.p != p or M.ring.r != n:
        raise ParseError(
            f"module over GF({M.ring.p})[x1..x{M.ring.r}] cannot extend F_{n} over GF({p})"
        )
    return ExtensionAlgebra(algebra_context(p, n), M)


def format_extension(B: ExtensionAlgebra) -> str:
    return f"{B.p} {B.rank}\n" + B.module.format()


def read_text(path: PathLike) -> str:
    return Path(path).read_text(encoding="utf-8")


def read_module(path: PathLike) -> ModulePresentation:
    return parse_module(read_text(path))


def read_extension(path: PathLike) -> ExtensionAlgebra:
    return parse_extension(read_text(path))
