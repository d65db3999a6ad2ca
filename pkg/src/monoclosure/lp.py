"""Exact rational linear programming.

Dense two-phase primal simplex over Fraction with Bland's rule, so pivoting
never cycles and every answer is exact.  Decision paths contain no floating
point.  Problems here are tiny (tens of columns), so simplicity wins over
sparse machinery.
"""
from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
STOPPED = "stopped"  # objective exceeded stop_above; not driven to optimality


def _bland(rows, rhs, obj, objval, basis, stop_above=None):
    """Maximize with Bland's rule on an in-place tableau.

    rows/rhs: constraint tableau in basic feasible form, obj: reduced costs,
    objval: current objective value (mutated and returned).  Returns
    (status, objval).
    """
    m = len(rows)
    ncol = len(obj)
    while True:
        if stop_above is not None and objval > stop_above:
            return STOPPED, objval
        enter = -1
        for j in range(ncol):
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL, objval
        leave = -1
        best = None
        for i in range(m):
            aie = rows[i][enter]
            if aie > 0:
                ratio = rhs[i] / aie
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            return UNBOUNDED, objval
        # pivot at (leave, enter)
        piv = rows[leave][enter]
        if piv != 1:
            inv = ONE / piv
            rows[leave] = [x * inv for x in rows[leave]]
            rhs[leave] *= inv
        prow = rows[leave]
        prhs = rhs[leave]
        for i in range(m):
            if i == leave:
                continue
            f = rows[i][enter]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
                rhs[i] -= f * prhs
        f = obj[enter]
        if f:
            for j in range(ncol):
                obj[j] -= f * prow[j]
            objval += f * prhs
        basis[leave] = enter


def solve_standard_max(A, b, c, stop_above=None):
    """Maximize c.x subject to A x = b, x >= 0.

    Returns (status, value, x).  status is one of OPTIMAL, INFEASIBLE,
    UNBOUNDED, STOPPED; value/x are None when infeasible, and x is the basic
    solution reached (optimal unless STOPPED).
    """
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        r = [Fraction(x) for x in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            r = [-x for x in r]
            bi = -bi
        rows.append(r)
        rhs.append(bi)

    # Phase 1: artificial variables n..n+m-1, maximize -(sum of artificials).
    for i in range(m):
        art = [ZERO] * m
        art[i] = ONE
        rows[i] = rows[i] + art
    obj = [sum(rows[i][j] for i in range(m)) for j in range(n)] + [ZERO] * m
    objval = -sum(rhs)
    basis = list(range(n, n + m))
    status, objval = _bland(rows, rhs, obj, objval, basis)
    if objval < 0:
        return INFEASIBLE, None, None

    # Drive leftover artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(len(rows)):
        if basis[i] < n:
            keep.append(i)
            continue
        pivot_col = -1
        for j in range(n):
            if rows[i][j] != 0:
                pivot_col = j
                break
        if pivot_col < 0:
            continue  # redundant constraint
        piv = rows[i][pivot_col]
        rows[i] = [x / piv for x in rows[i]]
        rhs[i] /= piv
        for k in range(len(rows)):
            if k != i and rows[k][pivot_col]:
                f = rows[k][pivot_col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
                rhs[k] -= f * rhs[i]
        basis[i] = pivot_col
        keep.append(i)
    rows = [rows[i][:n] for i in keep]
    rhs = [rhs[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: true objective expressed over the current basis.
    obj = [Fraction(x) for x in c]
    objval = ZERO
    for i, bv in enumerate(basis):
        f = obj[bv]
        if f:
            obj = [x - f * y for x, y in zip(obj, rows[i])]
            objval += f * rhs[i]
    status, objval = _bland(rows, rhs, obj, objval, basis, stop_above)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [ZERO] * n
    for i, bv in enumerate(basis):
        x[bv] = rhs[i]
    return status, objval, x


def solve_slack_max(U, a, c, stop_above=None):
    """Maximize c.x subject to U x <= a, x >= 0, with a >= 0.

    The slack basis is immediately feasible, so this is phase 2 only.
    Returns (status, value, x).
    """
    m = len(U)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        bi = Fraction(a[i])
        if bi < 0:
            raise ValueError("slack-form solver needs a nonnegative rhs")
        slack = [ZERO] * m
        slack[i] = ONE
        rows.append([Fraction(x) for x in U[i]] + slack)
        rhs.append(bi)
    obj = [Fraction(x) for x in c] + [ZERO] * m
    basis = list(range(n, n + m))
    status, objval = _bland(rows, rhs, obj, ZERO, basis, stop_above)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = rhs[i]
    return status, objval, x


def scale_sum_supremum(a, points, stop_above=ONE):
    """Sup of ``sum(mu)`` over mu >= 0 with ``sum_j mu_j p_j <= a``.

    The value compares against 1: > 1 means a lies in
    conv(points) + eps*conv(points) + orthant for some eps > 0, exactly 1
    means a is in the Newton polyhedron but not its inner region, < 1 means
    a is outside.  With the default stop_above the solver exits as soon as
    the value provably exceeds 1 and reports STOPPED.

    Correctness of the merge: with P = Q, (lambda, nu) feasible for the
    scaled-hull program gives mu = lambda + nu with sum(mu) = 1 + eps;
    conversely mu with s = sum(mu) >= 1 splits as lambda = mu/s and
    nu = (s-1) mu/s.  So sup(sum mu) = 1 + (max eps).
    """
    n = len(a)
    U = [[p[i] for p in points] for i in range(n)]
    c = [ONE] * len(points)
    status, val, _ = solve_slack_max(U, a, c, stop_above)
    return status, val


def lp_max_scale(a, P, Q):
    """Maximum eps in [0, 1] with a = sum(lambda_i p_i) + sum(nu_j q_j) + r,
    lambda >= 0 summing to 1, nu >= 0 summing to eps, r >= 0.

    Returns the exact rational maximum, or None when even eps = 0 is
    infeasible (a is outside conv(P) + orthant).
    """
    P = [tuple(p) for p in P]
    Q = [tuple(q) for q in Q]
    if not P or not Q:
        raise ValueError("P and Q must be nonempty")
    n = len(a)
    if any(len(p) != n for p in P) or any(len(q) != n for q in Q):
        raise ValueError("dimension mismatch")
    p, q = len(P), len(Q)
    ncol = p + q + n + 1  # lambdas, nus, orthant slacks, cap slack
    A = []
    b = []
    A.append([ONE] * p + [ZERO] * (q + n + 1))
    b.append(ONE)
    for i in range(n):
        row = [Fraction(P[j][i]) for j in range(p)]
        row += [Fraction(Q[k][i]) for k in range(q)]
        slack = [ZERO] * (n + 1)
        slack[i] = ONE
        row += slack
        A.append(row)
        b.append(Fraction(a[i]))
    cap = [ZERO] * p + [ONE] * q + [ZERO] * n + [ONE]
    A.append(cap)
    b.append(ONE)
    c = [ZERO] * p + [ONE] * q + [ZERO] * (n + 1)
    status, val, _ = solve_standard_max(A, b, c)
    if status == INFEASIBLE:
        return None
    if status != OPTIMAL:  # pragma: no cover - bounded by construction
        raise RuntimeError(f"unexpected LP status {status}")
    return val


def scale_positive(a, P, Q) -> bool:
    """True iff lp_max_scale(a, P, Q) is defined and positive, decided with
    early exit."""
    P = [tuple(p) for p in P]
    Q = [tuple(q) for q in Q]
    if not P or not Q:
        raise ValueError("P and Q must be nonempty")
    n = len(a)
    p, q = len(P), len(Q)
    # No eps <= 1 cap: positivity is unaffected (feasible eps form an
    # interval down to 0), and one less row pivots faster.
    A = [[ONE] * p + [ZERO] * (q + n)]
    b = [ONE]
    for i in range(n):
        row = [Fraction(P[j][i]) for j in range(p)]
        row += [Fraction(Q[k][i]) for k in range(q)]
        slack = [ZERO] * n
        slack[i] = ONE
        A.append(row + slack)
        b.append(Fraction(a[i]))
    c = [ZERO] * p + [ONE] * q + [ZERO] * n
    status, val, _ = solve_standard_max(A, b, c, stop_above=ZERO)
    if status == INFEASIBLE:
        return False
    if status == STOPPED:
        return True
    if status == UNBOUNDED:
        return True
    return val > 0
