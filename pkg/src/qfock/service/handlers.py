"""Pure request -> response handlers; the FastAPI app and the CLI both call
these, so local and remote invocations cannot drift apart.

Semantic input problems raise ValueError, which the app maps to HTTP 400 and
the CLI to exit status 1.
"""

from __future__ import annotations

from .. import verify
from ..fock import FockVector, apply_word, x_minus, x_minus_divided, x_plus, x_plus_divided
from ..qring import HalfLaurent
from ..schur import (
    PowerPoly,
    SchurPoly,
    deformed_inner,
    hall_inner,
    jacobi_trudi,
    join_terms,
    lr_product,
    mixed_product,
    power_to_schur,
    schur_to_power,
)
from ..schur import pieri_e, pieri_h
from ..shapes import as_partition, conjugate, straighten
from ..words import parse_word
from . import models as m


def _partition(parts) -> tuple[int, ...]:
    return as_partition(parts)


def _poly_response(poly) -> m.PolyResponse:
    return m.PolyResponse(
        terms=[m.SchurTerm(**entry) for entry in poly.to_json()], text=str(poly)
    )


def _vector_response(vec: FockVector) -> m.VectorResponse:
    return m.VectorResponse(vector=m.VectorJson(**vec.to_json()), text=str(vec))


def _signed_text(sign: int, partition) -> str:
    if sign == 0:
        return "0"
    body = f"s[{','.join(map(str, partition))}]" if partition else "1"
    return f"{sign} * {body}"


def handle_straighten(req: m.StraightenRequest) -> m.StraightenResponse:
    result = straighten(tuple(req.entries))
    if result is None:
        return m.StraightenResponse(sign=0, partition=None, text="0")
    sign, lam = result
    return m.StraightenResponse(
        sign=sign, partition=list(lam), text=_signed_text(sign, lam)
    )


def handle_conjugate(req: m.ConjugateRequest) -> m.ConjugateResponse:
    lam = conjugate(_partition(req.partition))
    return m.ConjugateResponse(partition=list(lam), text=",".join(map(str, lam)))


def handle_lr(req: m.LrRequest) -> m.PolyResponse:
    return _poly_response(lr_product(_partition(req.lam), _partition(req.mu)))


def handle_pieri(req: m.PieriRequest) -> m.PolyResponse:
    op = pieri_h if req.kind == "h" else pieri_e
    return _poly_response(op(req.n, _partition(req.partition)))


def handle_jt(req: m.JtRequest) -> m.JtResponse:
    items = jacobi_trudi(_partition(req.partition))
    pieces = []
    for coeff, parts in items:
        body = "*".join(f"h[{p}]" for p in parts) if parts else "1"
        pieces.append(f"{coeff} * {body}")
    return m.JtResponse(
        terms=[m.JtTerm(coeff=c, parts=list(p)) for c, p in items],
        text=join_terms(pieces) if pieces else "0",
    )


def handle_convert(req: m.ConvertRequest) -> m.PolyResponse:
    lam = _partition(req.partition)
    if req.to == "power":
        poly = schur_to_power(SchurPoly.basis(lam))
    else:
        from ..qring import RatHalfLaurent

        poly = power_to_schur(PowerPoly({lam: RatHalfLaurent.const(1)}))
    return _poly_response(poly)


def handle_mixed(req: m.MixedRequest) -> m.MixedResponse:
    result = mixed_product(tuple(req.mu), tuple(req.nu))
    if result is None:
        return m.MixedResponse(sign=0, partition=None, text="0")
    sign, lam = result
    return m.MixedResponse(sign=sign, partition=list(lam), text=_signed_text(sign, lam))


def handle_x(req: m.XRequest) -> m.VectorResponse:
    start = FockVector.basis(req.sector, req.charge, _partition(req.mu))
    op = x_plus if req.sign == "plus" else x_minus
    return _vector_response(op(req.n, start))


def handle_divided(req: m.DividedRequest) -> m.VectorResponse:
    start = FockVector.basis(req.sector, req.charge, _partition(req.mu))
    op = x_plus_divided if req.sign == "plus" else x_minus_divided
    return _vector_response(op(req.n, req.r, start))


def handle_apply(req: m.ApplyRequest) -> m.VectorResponse:
    word = parse_word(req.word)
    start = FockVector.basis(req.sector, req.charge, _partition(req.mu))
    return _vector_response(apply_word(word, start))


def handle_inner(req: m.InnerRequest) -> m.InnerResponse:
    lam, mu = _partition(req.lam), _partition(req.mu)
    if req.kind == "hall":
        value = hall_inner(SchurPoly.basis(lam), SchurPoly.basis(mu))
        num, den = value, HalfLaurent.const(1)
    else:
        num, den = deformed_inner(lam, mu)
    if den == HalfLaurent.const(1):
        text = str(num)
    else:
        text = f"({num}) / ({den})"
    return m.InnerResponse(numerator=num.to_json(), denominator=den.to_json(), text=text)


def handle_check(req: m.CheckRequest) -> m.CheckResponse:
    reports = verify.run_suites(req.suites, req.overrides)
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else f"FAIL ({len(rep.violations)} violations)"
        lines.append(f"{rep.suite}: {status}")
    return m.CheckResponse(
        passed=all(r.passed for r in reports),
        reports=[m.ReportJson(**r.to_json()) for r in reports],
        text="\n".join(lines),
    )
