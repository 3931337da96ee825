"""Command line front end.

Exit status: 0 success, 1 validation failure (report still printed),
2 parse error.  Output is plain ``key: value`` text and is byte-stable.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .cw_complex import check_complex, euler_characteristic
from .errors import ParseError, TorsionError
from .exact_algebra import format_field_element
from .formats import (
    complex_from_doc,
    glue_from_doc,
    load_document,
    localsys_from_doc,
    parse_family,
    point_from_doc,
    spin_from_doc,
    surface_from_doc,
)
from .graded_det import GradedBasis, homology
from .local_systems import LocalSystem, specialize
from .torsion import BASIS_ORDER, SIGN_CONVENTION, is_acyclic, refined_torsion


class ValidationFailure(Exception):
    def __init__(self, lines):
        self.lines = lines
        super().__init__("validation failed")


def _fmt(x) -> str:
    return format_field_element(x)


def _conventions() -> list[str]:
    return [f"convention: {SIGN_CONVENTION}", f"basis-order: {BASIS_ORDER}"]


def _basis_lines(h: GradedBasis | None) -> list[str]:
    if h is None or h.is_empty():
        return ["homology-basis: none (acyclic)"]
    out = []
    for i in sorted(h.vectors):
        m = h.vectors[i]
        for j in range(m.cols):
            out.append(f"homology-basis[{i}][{j}]: [" + ", ".join(_fmt(x) for x in m.column(j)) + "]")
    return out


def _orient(s: str) -> int:
    if s in ("+", "+1", "1"):
        return 1
    if s in ("-", "-1"):
        return -1
    raise ParseError(f"orientation must be + or -, got {s!r}", "--orient")


def _with_field(rho: LocalSystem, field: str | None) -> LocalSystem:
    if field is None or field == rho.field:
        return rho
    if field == "Q" and rho.field == "Q(t)":
        raise ParseError("cannot restrict a Q(t) system to Q", "--field")
    return LocalSystem(rho.presentation, rho.monodromy, rho.dimension, field, rho.gram)


def cmd_check(args) -> list[str]:
    doc, ctx = load_document(args.complex, "complex")
    c = complex_from_doc(doc, ctx)
    rep = check_complex(c)
    lines = [
        "command: check",
        f"complex: {c.name or Path(args.complex).stem}",
        "cells: " + " | ".join(",".join(ids) for ids in c.cells),
        f"euler-characteristic: {euler_characteristic(c)}",
        f"result: {'ok' if rep.ok else 'failed'}",
    ]
    lines += [f"detail: {x}" for x in rep.lines(c.presentation.generators)]
    if not rep.ok:
        raise ValidationFailure(lines)
    return lines


def cmd_torsion(args) -> list[str]:
    doc, ctx = load_document(args.complex, "complex")
    c = complex_from_doc(doc, ctx)
    sdoc, sctx = load_document(args.localsys, "localsys")
    rho = _with_field(localsys_from_doc(sdoc, sctx, c.presentation), args.field)
    fam = parse_family(args.euler, c)
    o = _orient(args.orient)
    b = specialize(c, rho, fam)
    h = None if is_acyclic(b) else homology(b)
    tau = refined_torsion(c, rho, fam, o, h)
    return [
        "command: torsion",
        f"complex: {c.name or Path(args.complex).stem}",
        f"field: {rho.field}",
        f"rank: {rho.dimension}",
        f"euler: {args.euler}",
        f"orientation: {'+' if o == 1 else '-'}",
        *_conventions(),
        *_basis_lines(h),
        f"value: {_fmt(tau.value)}",
    ]


def cmd_adjoint(args) -> list[str]:
    from .char_points import adjoint_torsion_volume

    doc, ctx = load_document(args.complex, "complex")
    c = complex_from_doc(doc, ctx)
    pdoc, pctx = load_document(args.point, "point")
    pt = point_from_doc(pdoc, pctx, c.presentation)
    fam = parse_family(args.euler, c)
    o = _orient(args.orient)
    res = adjoint_torsion_volume(c, pt, fam, o)
    return [
        "command: adjoint-torsion",
        f"complex: {c.name or Path(args.complex).stem}",
        f"lie-dimension: {pt.lie_dim}",
        f"virtual-dimension: {res.virtual_dimension}",
        f"det-degree: {res.det_degree}",
        f"euler: {args.euler}",
        f"orientation: {'+' if o == 1 else '-'}",
        *_conventions(),
        *_basis_lines(res.torsion.homology_basis),
        f"value: {_fmt(res.torsion.value)}",
    ]


def _signs(text: str, n: int) -> tuple:
    t = text.replace(",", "").replace(" ", "")
    if len(t) != n or any(ch not in "+-" for ch in t):
        raise ParseError(f"expected {n} signs made of + and -", "--alpha")
    return tuple(1 if ch == "+" else -1 for ch in t)


def _sign_str(a) -> str:
    return "".join("+" if x == 1 else "-" for x in a)


def _surface_and_spin(args):
    sdoc, sctx = load_document(args.surface, "surface")
    model = surface_from_doc(sdoc, sctx)
    pdoc, pctx = load_document(args.spin, "spin")
    spin = spin_from_doc(pdoc, pctx, model)
    return model, spin


def _spin_lines(spin) -> list[str]:
    half = " ".join(f"{v}:{k}" for v, k in sorted(spin.half_euler.items()) if k)
    return [f"spin: {spin.label or 'unnamed'}", f"half-euler: {half or 'none'}"]


def cmd_johnson(args) -> list[str]:
    from .surface_spin import johnson_q, sign_vectors

    model, spin = _surface_and_spin(args)
    alphas = [_signs(args.alpha, model.presentation.generator_count)] if args.alpha else sign_vectors(model)
    lines = ["command: johnson", f"genus: {model.genus}", f"generators: {' '.join(model.presentation.generators)}"]
    lines += _spin_lines(spin) + _conventions()
    for a in alphas:
        lines.append(f"q[{_sign_str(a)}]: {johnson_q(model, spin, a)}")
    return lines


def cmd_arf(args) -> list[str]:
    from .surface_spin import arf

    model, spin = _surface_and_spin(args)
    return ["command: arf", f"genus: {model.genus}", *_spin_lines(spin), *_conventions(), f"value: {arf(model, spin)}"]


def cmd_todd(args) -> list[str]:
    from .todd_series import duflo_determinant_check, j_series

    if args.order < 1:
        raise ParseError("order must be at least 1", "--order")
    j = j_series(args.order)
    rep = duflo_determinant_check(args.order)
    lines = [
        "command: todd",
        f"order: {args.order}",
        "coefficients: " + j.format(),
        f"determinant: {rep.det.format()}",
        f"check: {'ok' if rep.ok else 'failed'}",
    ]
    if not rep.ok:
        raise ValidationFailure(lines)
    return lines


def cmd_glue(args) -> list[str]:
    from .char_points import glued_point_check
    from .cw_complex import glue

    doc, ctx = load_document(args.job, "glue")
    c1, c2, c0, maps, rho, ref, ref_sys = glue_from_doc(doc, ctx, Path(args.job).parent)
    rep = glued_point_check(c1, c2, c0, maps, rho, ref, ref_sys)
    x = glue(c1, c2, c0, maps)
    lines = [
        "command: glue-check",
        "glued-cells: " + " | ".join(",".join(ids) for ids in x.cells),
        *_conventions(),
        f"glued: {_fmt(rep.glued)}",
    ]
    if rep.reference is not None:
        lines.append(f"reference: {_fmt(rep.reference)}")
    if rep.mayer_vietoris is not None:
        lines.append(f"mayer-vietoris: {_fmt(rep.mayer_vietoris)}")
    lines.append(f"route: {rep.route or 'none'}")
    lines.append(f"result: {'ok' if rep.ok else 'failed'}")
    if not rep.ok:
        raise ValidationFailure(lines)
    return lines


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="torsionvol", description="Refined torsion and torsion volume forms.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate an equivariant cell complex")
    p.add_argument("complex")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("torsion", help="refined torsion of a complex with local coefficients")
    p.add_argument("complex")
    p.add_argument("localsys")
    p.add_argument("--euler", default="paper", help="'paper' (standard lifts) or cell:word,...")
    p.add_argument("--orient", default="+")
    p.add_argument("--field", choices=["Q", "Q(t)"])
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("adjoint-torsion", help="torsion of the adjoint system at a representation")
    p.add_argument("complex")
    p.add_argument("point")
    p.add_argument("--euler", default="paper")
    p.add_argument("--orient", default="+")
    p.set_defaults(func=cmd_adjoint)

    for name, func, helptext in (("johnson", cmd_johnson, "Johnson quadratic form via sigma_s"),
                                 ("arf", cmd_arf, "Arf invariant of a spin structure")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("surface")
        p.add_argument("spin")
        if name == "johnson":
            p.add_argument("--alpha", help="signs per generator, e.g. +-")
        p.set_defaults(func=func)

    p = sub.add_parser("todd", help="coefficients of x/(exp(x)-1) and the determinant check")
    p.add_argument("--order", type=int, default=6)
    p.set_defaults(func=cmd_todd)

    p = sub.add_parser("glue-check", help="glued torsion against pieces and a reference")
    p.add_argument("job")
    p.set_defaults(func=cmd_glue)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        lines = args.func(args)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except ValidationFailure as exc:
        out.write("\n".join(exc.lines) + "\n")
        return 1
    except TorsionError as exc:
        out.write(f"command: {args.command}\nerror: {type(exc).__name__}: {exc}\n")
        return 1
    out.write("\n".join(lines) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
