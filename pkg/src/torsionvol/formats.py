"""JSON input files: parsing with located errors, and serialization.

Every file is one JSON object with a ``"kind"`` field.  Exact scalars are
strings (``"3/4"``, ``"(1 - t)/(1)"``) or integers; floats are rejected.
"""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .cw_complex import (
    EquivariantCellComplex,
    FundamentalFamily,
    GlueMaps,
    GroupPresentation,
    GroupRingElement,
    format_word,
    parse_word,
)
from .errors import ParseError, TorsionError
from .exact_algebra import Matrix, format_field_element, parse_field_element
from .local_systems import LocalSystem

KINDS = ("complex", "localsys", "point", "surface", "spin", "glue")


class _Ctx:
    """Current JSON path, used to locate schema errors."""

    def __init__(self, source: str):
        self.source = source

    def fail(self, path: str, msg: str):
        raise ParseError(msg, f"{self.source}:{path}")


def load_document(path: str | Path, kind: str | None = None) -> tuple[dict, _Ctx]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", f"{p}:offset 0") from None
    return parse_document(text, str(p), kind)


def parse_document(text: str, source: str = "<input>", kind: str | None = None) -> tuple[dict, _Ctx]:
    if not text.strip():
        raise ParseError("empty input", f"{source}:offset 0")
    try:
        doc = json.loads(text, parse_float=_no_float)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:line {exc.lineno} column {exc.colno} (offset {exc.pos})") from None
    except _FloatSeen as exc:
        raise ParseError(f"floating point literal {exc.args[0]} not allowed; use \"p/q\"", f"{source}") from None
    ctx = _Ctx(source)
    if not isinstance(doc, dict):
        ctx.fail("$", "top level must be an object")
    k = doc.get("kind")
    if k not in KINDS:
        ctx.fail("$.kind", f"kind must be one of {', '.join(KINDS)}")
    if kind is not None and k != kind:
        ctx.fail("$.kind", f"expected kind {kind!r}, found {k!r}")
    return doc, ctx


class _FloatSeen(Exception):
    pass


def _no_float(s):
    raise _FloatSeen(s)


def _get(ctx: _Ctx, obj: dict, key: str, path: str, typ=None, default: Any = ...):
    if key not in obj:
        if default is not ...:
            return default
        ctx.fail(f"{path}.{key}", "missing field")
    v = obj[key]
    if typ is not None and not isinstance(v, typ):
        ctx.fail(f"{path}.{key}", f"expected {typ.__name__ if isinstance(typ, type) else typ}")
    return v


# ---------------------------------------------------------------------------
# group ring elements

_GR_TERM = re.compile(r"^\s*(\d+)?\s*\*?\s*(.*?)\s*$")


def parse_group_ring(text: str, names) -> GroupRingElement:
    """``"x - 1"``, ``"1 - 2 y x^-1"``, ``"0"``: integer-weighted words."""
    s = text.strip()
    if s == "0":
        return GroupRingElement()
    if not s:
        raise ValueError("empty group ring element")
    pieces = re.split(r"(?<![\^])\s*([+-])\s*", s)
    if pieces and pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    terms = []
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        m = _GR_TERM.match(body)
        coef = int(m.group(1)) if m.group(1) else 1
        word_text = m.group(2)
        if m.group(1) and word_text == "":
            word_text = "1"
        if not word_text:
            raise ValueError(f"bad term {body!r}")
        terms.append((parse_word(word_text, names), coef if sign == "+" else -coef))
    return GroupRingElement(terms)


def format_group_ring(a: GroupRingElement, names) -> str:
    if not a.terms:
        return "0"
    out = []
    for w, c in a.terms:
        word = format_word(w, names)
        mag = abs(c)
        body = word if mag == 1 else (str(mag) if word == "1" else f"{mag} {word}")
        out.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def dump_document(doc: dict) -> str:
    """Indented JSON with scalar-only lists (matrix rows) kept on one line."""
    text = json.dumps(doc, indent=2)
    return re.sub(r"\[\s*((?:\"[^\"]*\"|-?\d+)(?:,\s*(?:\"[^\"]*\"|-?\d+))*)\s*\]",
                  lambda m: json.dumps(json.loads("[" + m.group(1) + "]")), text) + "\n"


# ---------------------------------------------------------------------------
# complexes


def _presentation(ctx, doc, path) -> GroupPresentation:
    gens = _get(ctx, doc, "generators", path, list)
    if not all(isinstance(g, str) and g for g in gens) or len(set(gens)) != len(gens):
        ctx.fail(f"{path}.generators", "generators must be distinct nonempty strings")
    rels = []
    for i, r in enumerate(_get(ctx, doc, "relators", path, list, [])):
        if not isinstance(r, str):
            ctx.fail(f"{path}.relators[{i}]", "relator must be a string")
        try:
            rels.append(parse_word(r, gens))
        except ValueError as exc:
            ctx.fail(f"{path}.relators[{i}]", str(exc))
    return GroupPresentation(tuple(gens), rels)


def complex_from_doc(doc: dict, ctx: _Ctx, path: str = "$") -> EquivariantCellComplex:
    p = _presentation(ctx, doc, path)
    cells = _get(ctx, doc, "cells", path, list)
    for d, ids in enumerate(cells):
        if not isinstance(ids, list) or not all(isinstance(x, str) for x in ids):
            ctx.fail(f"{path}.cells[{d}]", "each dimension is a list of cell names")
    bnd_doc = _get(ctx, doc, "boundary", path, dict, {})
    bnd = {}
    for cid, faces in bnd_doc.items():
        if not isinstance(faces, dict):
            ctx.fail(f"{path}.boundary.{cid}", "boundary is an object face -> group ring element")
        terms = []
        for tau, expr in faces.items():
            if not isinstance(expr, str):
                ctx.fail(f"{path}.boundary.{cid}.{tau}", "coefficient must be a string")
            try:
                terms.append((tau, parse_group_ring(expr, p.generators)))
            except ValueError as exc:
                ctx.fail(f"{path}.boundary.{cid}.{tau}", str(exc))
        bnd[cid] = tuple(terms)
    try:
        return EquivariantCellComplex(
            p, cells, bnd, _get(ctx, doc, "basepoint", path, str, None), _get(ctx, doc, "name", path, str, "")
        )
    except (ValueError, KeyError) as exc:
        ctx.fail(f"{path}.boundary", str(exc))


def complex_to_doc(c: EquivariantCellComplex) -> dict:
    names = c.presentation.generators
    return {
        "kind": "complex",
        "name": c.name,
        "generators": list(names),
        "relators": [format_word(r, names) for r in c.presentation.relators],
        "cells": [list(ids) for ids in c.cells],
        "basepoint": c.basepoint,
        "boundary": {
            s: {t: format_group_ring(a, names) for t, a in c.boundary_terms(s)}
            for s in c.all_cells() if c.boundary_terms(s)
        },
    }


# ---------------------------------------------------------------------------
# local systems


def _matrix(ctx, rows, path, n, field) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or not all(isinstance(r, list) and len(r) == n for r in rows):
        ctx.fail(path, f"expected a {n} x {n} matrix")
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, x in enumerate(r):
            try:
                row.append(parse_field_element(x, field))
            except (ValueError, TorsionError) as exc:
                ctx.fail(f"{path}[{i}][{j}]", str(exc))
        out.append(row)
    return Matrix.from_rows(out, n)


def localsys_from_doc(doc: dict, ctx: _Ctx, presentation: GroupPresentation | None = None, path="$",
                      field: str | None = None) -> LocalSystem:
    p = presentation if presentation is not None else _presentation(ctx, doc, path)
    gens = doc.get("generators")
    if gens is not None and list(gens) != list(p.generators):
        ctx.fail(f"{path}.generators", f"generators {gens} do not match the complex {list(p.generators)}")
    field = field or _get(ctx, doc, "field", path, str, "Q")
    if field not in ("Q", "Q(t)"):
        ctx.fail(f"{path}.field", "field must be Q or Q(t)")
    n = _get(ctx, doc, "dimension", path, int)
    mono = _get(ctx, doc, "monodromy", path, dict)
    mats = []
    for g in p.generators:
        if g not in mono:
            ctx.fail(f"{path}.monodromy", f"no matrix for generator {g!r}")
        mats.append(_matrix(ctx, mono[g], f"{path}.monodromy.{g}", n, field))
    extra = set(mono) - set(p.generators)
    if extra:
        ctx.fail(f"{path}.monodromy", f"unknown generators {sorted(extra)}")
    gram = doc.get("gram")
    gram = _matrix(ctx, gram, f"{path}.gram", n, field) if gram is not None else None
    return LocalSystem(p, tuple(mats), n, field, gram)


def localsys_to_doc(rho: LocalSystem) -> dict:
    fmt = format_field_element
    doc = {
        "kind": "localsys",
        "generators": list(rho.presentation.generators),
        "field": rho.field,
        "dimension": rho.dimension,
        "monodromy": {g: [[fmt(x) for x in row] for row in m.to_rows()]
                      for g, m in zip(rho.presentation.generators, rho.monodromy)},
    }
    if rho.gram is not None:
        doc["gram"] = [[fmt(x) for x in row] for row in rho.gram.to_rows()]
    return doc


def point_from_doc(doc: dict, ctx: _Ctx, presentation: GroupPresentation):
    from .char_points import RepresentationPoint

    rho = localsys_from_doc(doc, ctx, presentation)
    n = rho.dimension
    basis = [
        _matrix(ctx, b, f"$.lie_basis[{i}]", n, rho.field)
        for i, b in enumerate(_get(ctx, doc, "lie_basis", "$", list))
    ]
    form = doc.get("invariant_form")
    form = _matrix(ctx, form, "$.invariant_form", len(basis), rho.field) if form is not None else None
    return RepresentationPoint(rho, tuple(basis), form)


# ---------------------------------------------------------------------------
# families, surfaces, spin structures


def parse_family(text: str, c: EquivariantCellComplex) -> FundamentalFamily:
    """``paper``/``identity`` or ``cell:word,cell:word``."""
    if text in ("paper", "identity", "", None):
        return FundamentalFamily()
    shift = {}
    for i, part in enumerate(text.split(",")):
        cell, sep, word = part.partition(":")
        cell = cell.strip()
        if not sep or cell not in c.all_cells():
            raise ParseError(f"bad shift entry {part!r} (expected cell:word)", f"--euler item {i}")
        try:
            shift[cell] = parse_word(word, c.presentation.generators)
        except ValueError as exc:
            raise ParseError(str(exc), f"--euler item {i}") from None
    return FundamentalFamily(shift)


def surface_from_doc(doc: dict, ctx: _Ctx):
    from .surface_spin import grid_torus, surface_model

    model = _get(ctx, doc, "model", "$", str, "standard")
    if model == "standard":
        g = _get(ctx, doc, "genus", "$", int)
        if g < 1:
            ctx.fail("$.genus", "genus must be at least 1")
        return surface_model(g)
    if model == "grid":
        n, m = _get(ctx, doc, "n", "$", int), _get(ctx, doc, "m", "$", int)
        if n < 1 or m < 1:
            ctx.fail("$", "grid sizes must be positive")
        return grid_torus(n, m)
    ctx.fail("$.model", "model must be 'standard' or 'grid'")


def spin_from_doc(doc: dict, ctx: _Ctx, model):
    from .surface_spin import (
        Segment,
        SpinStructure,
        add_chains,
        check_spin,
        half_euler_from_kasteleyn,
        loop_chain,
        reference_spin,
    )

    names = model.presentation.generators
    if "dimer" in doc:
        dimer = _get(ctx, doc, "dimer", "$", list)
        orient = _get(ctx, doc, "kasteleyn", "$", dict)
        return half_euler_from_kasteleyn(model, dimer, orient)
    if doc.get("reference"):
        s = reference_spin(model)
        chain = dict(s.chain)
        for i, e in enumerate(_get(ctx, doc, "loops", "$", list, [])):
            if e not in model.complex.cells_of(1):
                ctx.fail(f"$.loops[{i}]", f"{e!r} is not an edge")
            chain = add_chains(chain, loop_chain(model, e))
        return SpinStructure(s.half_euler, chain, _get(ctx, doc, "name", "$", str, "reference"))
    half = _get(ctx, doc, "half_euler", "$", dict)
    chain: dict = {}
    for i, item in enumerate(_get(ctx, doc, "chain", "$", list)):
        if not (isinstance(item, list) and len(item) == 4 and isinstance(item[3], int)):
            ctx.fail(f"$.chain[{i}]", "expected [source, target, word, coefficient]")
        try:
            seg = Segment(item[0], item[1], parse_word(item[2], names))
        except ValueError as exc:
            ctx.fail(f"$.chain[{i}]", str(exc))
        chain = add_chains(chain, {seg: item[3]})
    s = SpinStructure(half, chain, _get(ctx, doc, "name", "$", str, ""))
    try:
        check_spin(model, s)
    except ValueError as exc:
        ctx.fail("$.chain", str(exc))
    return s


# ---------------------------------------------------------------------------
# glue jobs


def _complex_ref(doc_or_path, ctx: _Ctx, path: str, base: Path):
    if isinstance(doc_or_path, str):
        d, c2 = load_document(base / doc_or_path, "complex")
        return complex_from_doc(d, c2)
    if isinstance(doc_or_path, dict):
        return complex_from_doc(doc_or_path, ctx, path)
    ctx.fail(path, "expected a file name or an inline complex")


def glue_from_doc(doc: dict, ctx: _Ctx, base: Path):
    pieces = _get(ctx, doc, "pieces", "$", dict)
    c1 = _complex_ref(_get(ctx, pieces, "c1", "$.pieces"), ctx, "$.pieces.c1", base)
    c2 = _complex_ref(_get(ctx, pieces, "c2", "$.pieces"), ctx, "$.pieces.c2", base)
    c0 = _complex_ref(_get(ctx, pieces, "c0", "$.pieces"), ctx, "$.pieces.c0", base)
    P = _presentation(ctx, _get(ctx, doc, "presentation", "$", dict), "$.presentation")

    def words(key, names):
        out = []
        for i, w in enumerate(_get(ctx, doc, key, "$", list)):
            try:
                out.append(parse_word(w, names))
            except (ValueError, AttributeError) as exc:
                ctx.fail(f"$.{key}[{i}]", str(exc))
        return tuple(out)

    def cellmap(key, target):
        out = {}
        for k, v in _get(ctx, doc, key, "$", dict).items():
            if not (isinstance(v, list) and len(v) == 2):
                ctx.fail(f"$.{key}.{k}", "expected [cell, word]")
            try:
                out[k] = (v[0], parse_word(v[1], target.presentation.generators))
            except ValueError as exc:
                ctx.fail(f"$.{key}.{k}", str(exc))
        return out

    maps = GlueMaps(
        P,
        words("gens1", P.generators),
        words("gens2", P.generators),
        words("c0_in_1", c1.presentation.generators),
        words("c0_in_2", c2.presentation.generators),
        cellmap("cells_to_c1", c1),
        cellmap("cells_to_c2", c2),
    )
    sys_doc = _get(ctx, doc, "system", "$", dict)
    rho = localsys_from_doc(sys_doc, ctx, P, "$.system")
    ref = doc.get("reference")
    reference = _complex_ref(ref, ctx, "$.reference", base) if ref is not None else None
    ref_sys = None
    if reference is not None:
        rs = _get(ctx, doc, "reference_system", "$", dict)
        ref_sys = localsys_from_doc(rs, ctx, reference.presentation, "$.reference_system")
    return c1, c2, c0, maps, rho, reference, ref_sys
