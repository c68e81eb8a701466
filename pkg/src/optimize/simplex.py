"""Exact two-phase simplex over rationals with verifiable certificates.

Models are maximization problems ``max c.x`` subject to linear rows with
relations ``<=``, ``=`` or ``>=`` and optional per-variable bounds. Every
outcome carries a certificate expressed on the caller's model and is
re-verified in exact arithmetic before it is returned:

* optimal: row multipliers ``lam`` and bound multipliers ``mu = c - A^T lam``
  whose dual objective equals ``c.x``;
* infeasible: a Farkas combination with ``A^T lam + mu = 0`` and negative
  dual objective;
* unbounded: a feasible point and an improving recession ray.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

from ..errors import CertificateError, ModelError

logger = logging.getLogger(__name__)

LE = "<="
EQ = "="
GE = ">="
RELATIONS = (LE, EQ, GE)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

# Consecutive degenerate pivots tolerated before switching to Bland's rule.
DEGENERATE_LIMIT = 50

Number = Union[int, Fraction, str]
Bound = Optional[Fraction]


def as_rational(value: Number, what: str = "value") -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; refuse floats and bools."""
    if isinstance(value, bool):
        raise ModelError(f"{what}: booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ModelError(f"{what}: cannot parse {value!r} as a rational") from e
    raise ModelError(f"{what}: {type(value).__name__} is not exact; use int, Fraction or 'p/q'")


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    coeffs: Dict[int, Fraction]
    relation: str
    rhs: Fraction


class RationalLP:
    """Builder for an exact linear program.

    Variables are non-negative unless other bounds are given. Typical use::

        lp = RationalLP("demo")
        x = lp.add_variable("x", lower=None)
        y = lp.add_variable("y", lower=None)
        lp.add_constraint({x: 1}, "=", Fraction(1, 3))
        lp.add_constraint({x: 1, y: -1}, ">=", 0)
        lp.maximize({y: 1})
    """

    def __init__(self, name: Optional[str] = None):
        self.name = name
        self.variables: List[str] = []
        self.bounds: List[Tuple[Bound, Bound]] = []
        self.constraints: List[LinearConstraint] = []
        self.objective: Dict[int, Fraction] = {}
        self._index: Dict[str, int] = {}

    @property
    def variable_count(self) -> int:
        return len(self.variables)

    def add_variable(
        self, name: str, lower: Optional[Number] = 0, upper: Optional[Number] = None
    ) -> int:
        """Add a variable and return its index. ``None`` means unbounded on that side."""
        if name in self._index:
            raise ModelError(f"duplicate variable {name!r}")
        lo = None if lower is None else as_rational(lower, f"lower bound of {name}")
        hi = None if upper is None else as_rational(upper, f"upper bound of {name}")
        if lo is not None and hi is not None and lo > hi:
            raise ModelError(f"variable {name!r}: lower bound {lo} exceeds upper bound {hi}")
        self._index[name] = len(self.variables)
        self.variables.append(name)
        self.bounds.append((lo, hi))
        return self._index[name]

    def variable(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ModelError(f"unknown variable {name!r}") from None

    def add_constraint(
        self,
        coeffs: Mapping[int, Number],
        relation: str,
        rhs: Number,
        name: Optional[str] = None,
    ) -> int:
        """Append ``sum coeffs[j] * x_j <relation> rhs`` and return its row index."""
        if relation not in RELATIONS:
            raise ModelError(f"relation must be one of {RELATIONS}, got {relation!r}")
        row_name = name or f"c{len(self.constraints)}"
        row = self._linear_form(coeffs, row_name)
        self.constraints.append(
            LinearConstraint(row_name, row, relation, as_rational(rhs, f"rhs of {row_name}"))
        )
        return len(self.constraints) - 1

    def maximize(self, coeffs: Mapping[int, Number]) -> None:
        self.objective = self._linear_form(coeffs, "objective")

    def _linear_form(self, coeffs: Mapping[int, Number], what: str) -> Dict[int, Fraction]:
        form = {}
        for j, value in coeffs.items():
            if not isinstance(j, int) or not 0 <= j < len(self.variables):
                raise ModelError(f"{what}: unknown variable index {j!r}")
            q = as_rational(value, f"{what} coefficient")
            if q:
                form[j] = q
        return form


@dataclass(frozen=True)
class LPOutcome:
    """Result of :func:`simplex_solve`.

    ``duals`` holds one multiplier per constraint and ``bound_duals`` one per
    variable. For an optimal outcome they prove optimality; for an
    infeasible outcome they are the Farkas certificate.
    """

    status: str
    objective_value: Optional[Fraction] = None
    primal: Optional[Tuple[Fraction, ...]] = None
    duals: Optional[Tuple[Fraction, ...]] = None
    bound_duals: Optional[Tuple[Fraction, ...]] = None
    ray: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0

    @property
    def certificate(self) -> Optional[Tuple[Fraction, ...]]:
        return self.duals


class _Tableau:
    """Sparse simplex tableau: one ``{column: coefficient}`` dict per row."""

    def __init__(self, rows: List[Dict[int, Fraction]], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.obj: Dict[int, Fraction] = {}
        self.value = Fraction(0)
        self.pivots = 0

    def load_objective(self, costs: Mapping[int, Fraction]) -> None:
        """Set the objective row to ``c_B B^-1 A - c`` for the current basis."""
        obj: Dict[int, Fraction] = {j: -c for j, c in costs.items() if c}
        value = Fraction(0)
        for i, b in enumerate(self.basis):
            cb = costs.get(b)
            if not cb:
                continue
            for j, a in self.rows[i].items():
                obj[j] = obj.get(j, 0) + cb * a
            value += cb * self.rhs[i]
        self.obj = {j: d for j, d in obj.items() if d}
        self.value = value

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            for j in row:
                row[j] /= piv
            self.rhs[r] /= piv

        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other.get(c)
            if f:
                _eliminate(other, row, f)
                self.rhs[i] -= f * self.rhs[r]

        f = self.obj.get(c)
        if f:
            _eliminate(self.obj, row, f)
            self.value -= f * self.rhs[r]

        self.basis[r] = c
        self.pivots += 1

    def optimize(self, blocked: Set[int]) -> Optional[int]:
        """Pivot until optimal; return an entering column with no ratio bound if unbounded."""
        degenerate = 0
        bland = False
        while True:
            entering = self._entering(blocked, bland)
            if entering is None:
                return None
            leaving = self._leaving(entering)
            if leaving is None:
                return entering
            degenerate = degenerate + 1 if self.rhs[leaving] == 0 else 0
            if not bland and degenerate >= DEGENERATE_LIMIT:
                logger.debug(f"switching to Bland's rule after {degenerate} degenerate pivots")
                bland = True
            self.pivot(leaving, entering)

    def _entering(self, blocked: Set[int], bland: bool) -> Optional[int]:
        candidates = [(d, j) for j, d in self.obj.items() if d < 0 and j not in blocked]
        if not candidates:
            return None
        if bland:
            return min(j for _, j in candidates)
        return min(candidates)[1]

    def _leaving(self, c: int) -> Optional[int]:
        best = None
        for i, row in enumerate(self.rows):
            a = row.get(c)
            if a is not None and a > 0:
                key = (self.rhs[i] / a, self.basis[i], i)
                if best is None or key < best:
                    best = key
        return None if best is None else best[2]


def _eliminate(target: Dict[int, Fraction], row: Dict[int, Fraction], f: Fraction) -> None:
    for j, a in row.items():
        value = target.get(j, 0) - f * a
        if value:
            target[j] = value
        else:
            target.pop(j, None)


class _StandardForm:
    """The caller's model rewritten as ``A'x' (rel) b', x' >= 0, b' >= 0``.

    Each user variable is ``shift + sum(sign * x'_col)``: fixed variables are
    substituted, lower-bounded ones shifted, upper-only ones reflected and
    free ones split. Finite upper bounds of shifted variables become extra
    ``<=`` rows after the user's rows.
    """

    def __init__(self, lp: RationalLP):
        self.lp = lp
        self.shift: List[Fraction] = []
        self.columns: List[List[Tuple[int, int]]] = []
        self.costs: Dict[int, Fraction] = {}
        structural = 0
        bound_rows: List[Tuple[int, Fraction]] = []

        for j, (lo, hi) in enumerate(lp.bounds):
            c = lp.objective.get(j, Fraction(0))
            if lo is not None and hi is not None and lo == hi:
                self.shift.append(lo)
                self.columns.append([])
                continue
            if lo is not None:
                self.shift.append(lo)
                cols = [(structural, 1)]
                if hi is not None:
                    bound_rows.append((structural, hi - lo))
            elif hi is not None:
                self.shift.append(hi)
                cols = [(structural, -1)]
            else:
                self.shift.append(Fraction(0))
                cols = [(structural, 1), (structural + 1, -1)]
            for col, sign in cols:
                if c:
                    self.costs[col] = c * sign
            structural += len(cols)
            self.columns.append(cols)

        self.structural = structural
        self.rows: List[Dict[int, Fraction]] = []
        self.rhs: List[Fraction] = []
        self.relations: List[str] = []
        self.signs: List[int] = []

        for con in lp.constraints:
            row: Dict[int, Fraction] = {}
            rhs = con.rhs
            for j, a in con.coeffs.items():
                rhs -= a * self.shift[j]
                for col, sign in self.columns[j]:
                    row[col] = row.get(col, 0) + a * sign
            self._append({col: a for col, a in row.items() if a}, con.relation, rhs)
        for col, width in bound_rows:
            self._append({col: Fraction(1)}, LE, width)

    def _append(self, row: Dict[int, Fraction], relation: str, rhs: Fraction) -> None:
        sign = 1
        if rhs < 0:
            sign = -1
            row = {col: -a for col, a in row.items()}
            rhs = -rhs
            relation = {LE: GE, GE: LE, EQ: EQ}[relation]
        self.rows.append(row)
        self.rhs.append(rhs)
        self.relations.append(relation)
        self.signs.append(sign)

    def to_user(self, values: Mapping[int, Fraction], with_shift: bool = True) -> Tuple[Fraction, ...]:
        out = []
        for j, cols in enumerate(self.columns):
            x = self.shift[j] if with_shift else Fraction(0)
            for col, sign in cols:
                x += sign * values.get(col, 0)
            out.append(x)
        return tuple(out)


def simplex_solve(lp: RationalLP) -> LPOutcome:
    """Solve ``lp`` exactly and return a verified outcome.

    Pivoting uses the largest-coefficient rule and falls back to Bland's
    rule after a run of degenerate pivots, so the method terminates.

    Raises:
        ModelError: If the model is malformed.
        CertificateError: If the produced certificate fails verification.
    """
    form = _StandardForm(lp)
    m = len(form.rows)

    rows = [dict(row) for row in form.rows]
    identity: List[int] = []
    artificial: Set[int] = set()
    next_col = form.structural
    for i, relation in enumerate(form.relations):
        if relation == LE:
            rows[i][next_col] = Fraction(1)
            identity.append(next_col)
            next_col += 1
            continue
        if relation == GE:
            rows[i][next_col] = Fraction(-1)
            next_col += 1
        rows[i][next_col] = Fraction(1)
        identity.append(next_col)
        artificial.add(next_col)
        next_col += 1

    tableau = _Tableau(rows, list(form.rhs), list(identity))

    if artificial:
        phase_one = {col: Fraction(-1) for col in artificial}
        tableau.load_objective(phase_one)
        tableau.optimize(blocked=set())
        if tableau.value < 0:
            pi = [tableau.obj.get(col, 0) + phase_one.get(col, 0) for col in identity]
            lam = tuple(form.signs[i] * pi[i] for i in range(len(lp.constraints)))
            outcome = LPOutcome(
                status=INFEASIBLE,
                duals=lam,
                bound_duals=bound_multipliers(lp, lam, with_objective=False),
                pivots=tableau.pivots,
            )
            verify(lp, outcome)
            logger.debug(f"LP {lp.name or ''} infeasible after {tableau.pivots} pivots")
            return outcome
        _drive_out_artificials(tableau, artificial)

    tableau.load_objective(form.costs)
    entering = tableau.optimize(blocked=artificial)

    internal = {b: tableau.rhs[i] for i, b in enumerate(tableau.basis) if b < form.structural}
    primal = form.to_user(internal)

    if entering is not None:
        direction = {entering: Fraction(1)}
        for i, b in enumerate(tableau.basis):
            a = tableau.rows[i].get(entering)
            if a and b < form.structural:
                direction[b] = -a
        outcome = LPOutcome(
            status=UNBOUNDED,
            primal=primal,
            ray=form.to_user(direction, with_shift=False),
            pivots=tableau.pivots,
        )
        verify(lp, outcome)
        logger.debug(f"LP {lp.name or ''} unbounded after {tableau.pivots} pivots")
        return outcome

    pi = [tableau.obj.get(col, 0) for col in identity]
    lam = tuple(form.signs[i] * pi[i] for i in range(len(lp.constraints)))
    outcome = LPOutcome(
        status=OPTIMAL,
        objective_value=_dot(lp.objective, primal),
        primal=primal,
        duals=lam,
        bound_duals=bound_multipliers(lp, lam, with_objective=True),
        pivots=tableau.pivots,
    )
    verify(lp, outcome)
    logger.debug(
        f"LP {lp.name or ''} optimal value {outcome.objective_value} "
        f"after {tableau.pivots} pivots ({m} rows)"
    )
    return outcome


def _drive_out_artificials(tableau: _Tableau, artificial: Set[int]) -> None:
    for i, b in enumerate(tableau.basis):
        if b not in artificial:
            continue
        for j in sorted(tableau.rows[i]):
            if j not in artificial:
                tableau.pivot(i, j)
                break


def bound_multipliers(
    lp: RationalLP, duals: Sequence[Fraction], with_objective: bool
) -> Tuple[Fraction, ...]:
    """``mu = c - A^T lam`` (or ``-A^T lam`` for a Farkas combination)."""
    zero = Fraction(0)
    mu = [lp.objective.get(j, zero) if with_objective else zero for j in range(lp.variable_count)]
    for lam, con in zip(duals, lp.constraints):
        if lam:
            for j, a in con.coeffs.items():
                mu[j] -= lam * a
    return tuple(mu)


def verify(lp: RationalLP, outcome: LPOutcome) -> None:
    """Re-check an outcome's certificate against ``lp`` in exact arithmetic.

    Raises:
        CertificateError: If any check fails.
    """
    if outcome.status == UNBOUNDED:
        if outcome.primal is None or outcome.ray is None:
            raise CertificateError("unbounded outcome without point and ray")
        _check_feasible(lp, outcome.primal)
        _check_ray(lp, outcome.ray)
        return

    if outcome.duals is None or outcome.bound_duals is None:
        raise CertificateError(f"{outcome.status} outcome without multipliers")
    if len(outcome.duals) != len(lp.constraints):
        raise CertificateError("one multiplier per constraint expected")

    for lam, con in zip(outcome.duals, lp.constraints):
        if (con.relation == LE and lam < 0) or (con.relation == GE and lam > 0):
            raise CertificateError(f"multiplier {lam} of {con.name} ({con.relation}) has wrong sign")

    optimal = outcome.status == OPTIMAL
    mu = bound_multipliers(lp, outcome.duals, with_objective=optimal)
    if mu != tuple(outcome.bound_duals):
        raise CertificateError("bound multipliers do not balance the row multipliers")

    dual_value = sum((lam * con.rhs for lam, con in zip(outcome.duals, lp.constraints)), Fraction(0))
    for j, value in enumerate(mu):
        if not value:
            continue
        lo, hi = lp.bounds[j]
        bound = hi if value > 0 else lo
        if bound is None:
            side = "upper" if value > 0 else "lower"
            raise CertificateError(
                f"variable {lp.variables[j]} needs a finite {side} bound for multiplier {value}"
            )
        dual_value += value * bound

    if optimal:
        if outcome.primal is None:
            raise CertificateError("optimal outcome without primal solution")
        _check_feasible(lp, outcome.primal)
        primal_value = _dot(lp.objective, outcome.primal)
        if primal_value != dual_value or primal_value != outcome.objective_value:
            raise CertificateError(
                f"duality gap: primal {primal_value}, dual {dual_value}, "
                f"reported {outcome.objective_value}"
            )
    elif outcome.status == INFEASIBLE:
        if dual_value >= 0:
            raise CertificateError(f"Farkas combination has non-negative value {dual_value}")
    else:
        raise CertificateError(f"unknown status {outcome.status!r}")


def _check_feasible(lp: RationalLP, x: Sequence[Fraction]) -> None:
    for j, (lo, hi) in enumerate(lp.bounds):
        if (lo is not None and x[j] < lo) or (hi is not None and x[j] > hi):
            raise CertificateError(f"{lp.variables[j]} = {x[j]} violates its bounds")
    for con in lp.constraints:
        if not _holds(_dot(con.coeffs, x), con.relation, con.rhs):
            raise CertificateError(f"point violates {con.name}")


def _check_ray(lp: RationalLP, ray: Sequence[Fraction]) -> None:
    for j, (lo, hi) in enumerate(lp.bounds):
        if (lo is not None and ray[j] < 0) or (hi is not None and ray[j] > 0):
            raise CertificateError(f"ray leaves the bounds of {lp.variables[j]}")
    for con in lp.constraints:
        if not _holds(_dot(con.coeffs, ray), con.relation, Fraction(0)):
            raise CertificateError(f"ray leaves {con.name}")
    if _dot(lp.objective, ray) <= 0:
        raise CertificateError("ray does not improve the objective")


def _holds(lhs: Fraction, relation: str, rhs: Fraction) -> bool:
    if relation == LE:
        return lhs <= rhs
    if relation == GE:
        return lhs >= rhs
    return lhs == rhs


def _dot(coeffs: Mapping[int, Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((a * x[j] for j, a in coeffs.items()), Fraction(0))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_lp(lp: RationalLP) -> str:
    """Render ``lp`` as plain text, one item per line, rationals as ``p/q``.

    Lines are ``max: <terms>``, ``var <name> <lower> <upper>`` (``-inf`` /
    ``inf`` for missing bounds) and ``<row>: <terms> <rel> <rhs>``, where a
    term is ``<coefficient> <variable>`` and terms are separated by ``+``.
    """

    def terms(form: Mapping[int, Fraction]) -> str:
        if not form:
            return "0"
        return " + ".join(f"{format_rational(a)} {lp.variables[j]}" for j, a in sorted(form.items()))

    lines = []
    if lp.name:
        lines.append(f"# {lp.name}")
    lines.append(f"max: {terms(lp.objective)}")
    for name, (lo, hi) in zip(lp.variables, lp.bounds):
        lower = "-inf" if lo is None else format_rational(lo)
        upper = "inf" if hi is None else format_rational(hi)
        lines.append(f"var {name} {lower} {upper}")
    for con in lp.constraints:
        lines.append(f"{con.name}: {terms(con.coeffs)} {con.relation} {format_rational(con.rhs)}")
    return "\n".join(lines) + "\n"
