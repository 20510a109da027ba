"""Numerical hypotheses for complete Ricci-flat metrics on the
complement of the boundary curve.

The existence theorem asks for a compact surface with an effective
anticanonical divisor ``D`` such that ``-K = beta * D`` with
``beta > 1``, all singular points sitting on ``D`` with smooth
uniformized neighbourhoods, and ``D`` almost ample.  The metric on the
complement then decays like ``r^(-2/(beta - 1))``.  Everything checked
here is exact arithmetic on the model; the one identity that ties all
the invariants together is the orbifold adjunction formula on ``D``:

    K.D + D^2 = -2 + sum_i (1 - 1/r_i)

over the orbifold points of ``D``, which must vanish identically for
every model this package constructs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .compactify import CompactificationModel, ResolvedModel

AnyModel = Union[CompactificationModel, ResolvedModel]


@dataclass(frozen=True)
class TianYauReport:
    """Exact record of the hypothesis checks for one model."""

    beta: Fraction
    beta_gt_one: bool
    singularities_on_divisor: bool
    divisor_almost_ample: bool
    divisor_admissible: bool
    C_squared: Fraction
    decay_rhs: Fraction | None
    adjunction_residual: Fraction

    @property
    def all_satisfied(self) -> bool:
        return (
            self.beta_gt_one
            and self.singularities_on_divisor
            and self.divisor_almost_ample
            and self.divisor_admissible
            and self.adjunction_residual == 0
        )


def _base(model: AnyModel) -> CompactificationModel:
    return model.base if isinstance(model, ResolvedModel) else model


def orbifold_adjunction_residual(model: AnyModel) -> Fraction:
    """``K.C + C^2`` minus the orbifold Euler side ``-2 + sum (1 - 1/r_i)``.

    Uses ``K.C = -beta * C^2`` and the recorded orbifold point orders
    of the boundary curve; zero for every correctly assembled model.
    """
    base = _base(model)
    csq = base.curve.self_intersection
    kc = -base.beta * csq
    target = Fraction(-2)
    for r in base.curve.orbifold_points:
        target += 1 - Fraction(1, r)
    return kc + csq - target


def check_hypotheses(model: AnyModel) -> TianYauReport:
    """Evaluate the numerical hypotheses on a model or resolved model.

    ``singularities_on_divisor`` is true when no interior singular
    point remains (all quotient points then lie on the boundary curve
    by construction).  Admissibility additionally needs smooth
    uniformized neighbourhoods, which the quotient points at infinity
    have tautologically, so it coincides with the previous flag here.
    Almost ampleness holds since the boundary curve has positive
    self-intersection and moves in the anticanonical system; the flag
    records the positivity check.
    """
    base = _base(model)
    beta = base.beta
    csq = base.curve.self_intersection
    interior_empty = len(model.interior_singularities) == 0
    on_divisor = interior_empty
    almost_ample = csq > 0
    admissible = on_divisor
    decay = Fraction(2) / (beta - 1) if beta > 1 else None
    return TianYauReport(
        beta=beta,
        beta_gt_one=beta > 1,
        singularities_on_divisor=on_divisor,
        divisor_almost_ample=almost_ample,
        divisor_admissible=admissible,
        C_squared=csq,
        decay_rhs=decay,
        adjunction_residual=orbifold_adjunction_residual(model),
    )
