"""Closed-form labelings of span 2d+2 for cycle-over-cycle bundles.

Every scheme is a linear form ``(alpha * i + beta * j) mod s`` with
``s = 2d + 3``.  Which form is valid depends on the shift ``ell``; the
admissible shifts are residues of a few arithmetic progressions modulo
``n``, enumerated here together with the integers that witness them.

Certificate case tags
---------------------
``direct-f`` / ``direct-g``
    direct bundle, ``ell = k s -/+ 2m`` resp. ``ell = k s +/- (d+1) m``.
``cartesian-a``
    Cartesian bundle, ``ell = k s -/+ 2dm``, labeled by the F scheme.
``cartesian-b``
    ``d = 3t + 2``, ``ell = k s - (2t+3)(d+a) m``, G scheme.
``cartesian-c``
    ``d = 3t + 1``, ``ell = k s + (2t+1)(d+a) m``, G scheme.
``cartesian-d``
    ``d = 3t``, ``m = p s + 3t'`` with ``0 <= t' <= 2t``,
    ``ell = k s + (i+a-1) s/3 -/+ t'``, G scheme.

The sign written ``-/+`` is ``(-1)**a``: minus for ``a = 1``, plus for ``a = 2``.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from .graph import BundleSpec, Kind, build_bundle
from .labeling import Labeling, verify_labeling

__all__ = [
    "Scheme",
    "Case",
    "LabelScheme",
    "Certificate",
    "NotAdmissibleError",
    "VerificationFailure",
    "mod_abs_diff_in_range",
    "scheme_coefficients",
    "labels_from_scheme",
    "certify",
    "shift_from_certificate",
    "admissible_shifts",
    "label_optimal",
    "is_certified_optimal",
]


class NotAdmissibleError(ValueError):
    pass


class VerificationFailure(RuntimeError):
    """A closed-form labeling failed the verifier; this is a bug, never expected."""


class Scheme(str, enum.Enum):
    F = "f"
    G = "g"


class Case(str, enum.Enum):
    DIRECT_F = "direct-f"
    DIRECT_G = "direct-g"
    CARTESIAN_A = "cartesian-a"
    CARTESIAN_B = "cartesian-b"
    CARTESIAN_C = "cartesian-c"
    CARTESIAN_D = "cartesian-d"


_CASE_SCHEME = {
    Case.DIRECT_F: Scheme.F,
    Case.DIRECT_G: Scheme.G,
    Case.CARTESIAN_A: Scheme.F,
    Case.CARTESIAN_B: Scheme.G,
    Case.CARTESIAN_C: Scheme.G,
    Case.CARTESIAN_D: Scheme.G,
}


@dataclass(frozen=True)
class LabelScheme:
    d: int
    scheme: Scheme
    a: int

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        if self.d < 1:
            raise ValueError(f"separation d must be >= 1, got {self.d}")
        if self.a not in (1, 2):
            raise ValueError(f"a must be 1 or 2, got {self.a}")

    @property
    def s(self) -> int:
        return 2 * self.d + 3

    @property
    def name(self) -> str:
        return f"{self.scheme.value}{self.a}"


@dataclass(frozen=True)
class Certificate:
    case: Case
    a: int
    k: int
    t: int | None = None
    t_prime: int | None = None
    p: int | None = None
    i_case: int | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["case"] = self.case.value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        return cls(
            case=Case(data["case"]),
            a=data["a"],
            k=data["k"],
            t=data.get("t"),
            t_prime=data.get("t_prime"),
            p=data.get("p"),
            i_case=data.get("i_case"),
        )

    @property
    def scheme(self) -> Scheme:
        return _CASE_SCHEME[self.case]


def mod_abs_diff_in_range(x: int, y: int, n: int, d: int) -> bool:
    """Cyclic separation test ``d <= (|x - y| mod n) <= n - d``.

    Whenever this holds, the residues of ``x`` and ``y`` modulo ``n`` differ
    by at least ``d``.  The converse can fail: for ``(6, 0, 7, 2)`` the
    residues differ by 6 but the test is false.
    """
    r = abs(x - y) % n
    return d <= r <= n - d


def scheme_coefficients(kind: Kind, sch: LabelScheme) -> tuple[int, int]:
    """Coefficients ``(alpha, beta)`` of the base and fibre index."""
    d, a = sch.d, sch.a
    if Kind(kind) is Kind.DIRECT:
        return (1, d + a) if sch.scheme is Scheme.F else (d + a, 1)
    return (d, d + a) if sch.scheme is Scheme.F else (d + a, d)


def labels_from_scheme(spec: BundleSpec, sch: LabelScheme) -> Labeling:
    """Label vertex ``(i, j)`` with ``(alpha * i + beta * j) mod s``.

    The shift is not consulted, so the result is only guaranteed valid for
    shifts that :func:`certify` accepts.
    """
    s = sch.s
    if spec.n % s:
        raise NotAdmissibleError(f"fibre order n={spec.n} is not a multiple of s={s}")
    alpha, beta = scheme_coefficients(spec.kind, sch)
    labels = [(alpha * i + beta * j) % s for i in range(spec.m) for j in range(spec.n)]
    return Labeling(labels, sch.d)


def _sign(a: int) -> int:
    return -1 if a == 1 else 1


def shift_from_certificate(cert: Certificate, m: int, n: int, d: int) -> int:
    """Substitute a certificate's witnesses back into its shift formula."""
    s = 2 * d + 3
    a, k = cert.a, cert.k
    sign = _sign(a)
    case = cert.case
    if case is Case.DIRECT_F:
        ell = k * s + sign * 2 * m
    elif case is Case.DIRECT_G:
        ell = k * s - sign * (d + 1) * m
    elif case is Case.CARTESIAN_A:
        ell = k * s + sign * 2 * d * m
    elif case is Case.CARTESIAN_B:
        if d != 3 * cert.t + 2:
            raise ValueError(f"witness t={cert.t} does not give d={d}")
        ell = k * s - (2 * cert.t + 3) * (d + a) * m
    elif case is Case.CARTESIAN_C:
        if d != 3 * cert.t + 1:
            raise ValueError(f"witness t={cert.t} does not give d={d}")
        ell = k * s + (2 * cert.t + 1) * (d + a) * m
    else:
        t, tp, p, i = cert.t, cert.t_prime, cert.p, cert.i_case
        if d != 3 * t or not 0 <= tp <= 2 * t or p < 0 or m != p * s + 3 * tp:
            raise ValueError(f"inconsistent witnesses {cert} for m={m}, d={d}")
        ell = k * s + (i + a - 1) * (s // 3) - sign * tp
    return ell % n


def _candidates(kind: Kind, m: int, d: int):
    """Yield every (case, a, t, t', p, i) combination whose hypotheses hold for ``m`` and ``d``."""
    if kind is Kind.DIRECT:
        for case in (Case.DIRECT_F, Case.DIRECT_G):
            for a in (1, 2):
                yield Certificate(case, a, 0)
        return
    s = 2 * d + 3
    for a in (1, 2):
        yield Certificate(Case.CARTESIAN_A, a, 0)
    for a in (1, 2):
        if d % 3 == 2:
            yield Certificate(Case.CARTESIAN_B, a, 0, t=(d - 2) // 3)
        elif d % 3 == 1:
            yield Certificate(Case.CARTESIAN_C, a, 0, t=(d - 1) // 3)
        else:
            t = d // 3
            for tp in range(2 * t + 1):
                rest = m - 3 * tp
                if rest < 0 or rest % s:
                    continue
                for i in range(3):
                    yield Certificate(Case.CARTESIAN_D, a, 0, t=t, t_prime=tp, p=rest // s, i_case=i)


def _preference(item: tuple[LabelScheme, Certificate]):
    sch, c = item
    order = list(Case).index(c.case)
    return (sch.scheme.value, sch.a, order, c.k, c.t_prime or 0, c.i_case or 0)


def certify(spec: BundleSpec, d: int) -> list[tuple[LabelScheme, Certificate]]:
    """All (scheme, certificate) pairs under which ``spec.ell`` is an admissible shift.

    ``k`` only needs to range over ``0 .. n/s - 1`` because ``k s mod n`` has
    period ``n / s``.  The list is sorted in the order :func:`label_optimal`
    prefers; an empty list means no case applies.
    """
    if d < 1:
        raise ValueError(f"separation d must be >= 1, got {d}")
    s = 2 * d + 3
    if spec.n % s:
        raise NotAdmissibleError(f"fibre order n={spec.n} is not a multiple of s={s}")
    found = []
    for base in _candidates(spec.kind, spec.m, d):
        for k in range(spec.n // s):
            cert = Certificate(base.case, base.a, k, base.t, base.t_prime, base.p, base.i_case)
            if shift_from_certificate(cert, spec.m, spec.n, d) == spec.ell:
                found.append((LabelScheme(d, cert.scheme, cert.a), cert))
    found.sort(key=_preference)
    return found


def admissible_shifts(kind: Kind, m: int, n: int, d: int) -> dict[int, list[tuple[LabelScheme, Certificate]]]:
    """Map each admissible shift in ``[0, n)`` to its certificates."""
    out = {}
    for ell in range(n):
        found = certify(BundleSpec(kind, m, n, ell), d)
        if found:
            out[ell] = found
    return out


def is_certified_optimal(d: int) -> bool:
    """Span ``2d + 2`` meets the degree lower bound of 4-regular graphs only for ``d <= 4``."""
    return 1 <= d <= 4


def label_optimal(spec: BundleSpec, d: int) -> tuple[Labeling, Certificate]:
    """Closed-form labeling of span ``2d + 2`` for an admissible bundle.

    The first certificate in preference order is used (F before G, ``a = 1``
    before ``a = 2``, then case, then smallest witnesses).  The labeling is
    re-checked with :func:`verify_labeling` before it is returned.
    """
    found = certify(spec, d)
    if not found:
        raise NotAdmissibleError(
            f"shift ell={spec.ell} is not admissible for the {spec.kind.value} bundle "
            f"with m={spec.m}, n={spec.n}, d={d}"
        )
    sch, cert = found[0]
    labeling = labels_from_scheme(spec, sch)
    report = verify_labeling(build_bundle(spec), labeling)
    if not report.valid:
        raise VerificationFailure(
            f"internal verification failure: {sch.name} under {cert} produced "
            f"{len(report.violations)} violations on {spec}"
        )
    return labeling, cert
