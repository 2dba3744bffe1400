"""Homology presentations, free resolutions, pruning and diagram realizations."""

import os
from concurrent.futures import ThreadPoolExecutor

from .elements import ModuleElement, exp_add
from .errors import ContractViolation, InputError
from .graded import (
    GradedMatrix,
    deg_join,
    deg_leq,
    deg_meet,
    degrees_in_box,
    element_degree,
    graded_dimension,
    matrix_rank,
    monomialize,
    nullspace_basis,
)
from .groebner import (
    buchberger,
    buchberger_transform,
    express,
    minimal_groebner,
    minimal_transform,
    normal_form,
    reduce_groebner,
    schreyer_syzygies,
)
from .orders import default_order
from .relative import reduce_relative, relative_buchberger, relative_schreyer


def kernel_of_free_map(mat, order):
    """Minimal Groebner basis of the kernel of the map given by a graded matrix."""
    ring = mat.ring
    cols = mat.cols
    m = len(cols)
    zero_exp = (0,) * ring.n
    order = order.for_rank(mat.nrows)
    G, exprs = buchberger_transform(cols, order)
    if not G:
        return [ModuleElement.monomial(ring, m, j, zero_exp) for j in range(m)]
    G2, A = minimal_transform(G, exprs, order)
    W, _ = schreyer_syzygies(G2, order)
    out = []
    for w in W:
        v = ModuleElement.zero(ring, m)
        for (k, e), c in w.terms:
            v = v + A[k].mul_term(c, e)
        if not v.is_zero:
            out.append(v)
    for j, col in enumerate(cols):
        quots = express(col, G2, order)
        v = ModuleElement.monomial(ring, m, j, zero_exp)
        for k, q in enumerate(quots):
            if not q.is_zero:
                v = v - A[k].mul_poly(q)
        if not v.is_zero:
            out.append(v)
    korder = order.for_rank(m)
    return minimal_groebner(buchberger(out, korder), korder)


class Resolution:
    """Chain of graded presentation matrices over an ambient subquotient.

    gens are ambient module elements generating V on top of the inner
    submodule spanned by u_gens; diffs[0] presents them and each later
    differential presents the columns of the one before it.
    """

    __slots__ = ("ring", "order", "ambient_shifts", "u_gens", "gens", "diffs", "minimized")

    def __init__(self, ring, order, ambient_shifts, u_gens, gens, diffs, minimized=False):
        self.ring = ring
        self.order = order
        self.ambient_shifts = tuple(tuple(s) for s in ambient_shifts)
        self.u_gens = list(u_gens)
        self.gens = list(gens)
        self.diffs = list(diffs)
        self.minimized = minimized

    @property
    def gen_degrees(self):
        return tuple(element_degree(g, self.ambient_shifts) for g in self.gens)

    def gens_matrix(self):
        """The generators packed as a graded matrix from F0 to the ambient module."""
        return GradedMatrix(self.ring, self.ambient_shifts, self.gen_degrees, self.gens)

    def level_degrees(self, i):
        """Column degrees of the level-i free module (level 0 lists generators)."""
        return self.gen_degrees if i == 0 else self.diffs[i - 1].col_shifts

    def __repr__(self):
        shape = ",".join(str(len(self.level_degrees(i))) for i in range(len(self.diffs) + 1))
        return "Resolution(levels=%s, minimized=%r)" % (shape, self.minimized)


def _inner_basis(u_gens, order):
    """Reduced Groebner basis of the inner submodule."""
    live = [g for g in u_gens if not g.is_zero]
    if not live:
        return []
    return reduce_groebner(buchberger(live, order), order)


def homology_presentation(d1, p, d2, order):
    """Present the middle homology of F1 -> F0 -> F2' induced through p.

    d1 maps F1 into F0, p projects F1 onto the ambient free module of the
    homology, and the columns of d2 span the inner submodule there.
    """
    if p.ncols != d1.ncols:
        raise InputError("projection must share its domain with the inner map")
    if d2.nrows != p.nrows:
        raise InputError("boundary columns must live in the codomain of the projection")
    for name, m in (("D1", d1), ("P", p), ("D2", d2)):
        if not m.is_homogeneous():
            raise InputError("matrix %s is not homogeneous" % name)
    ring = p.ring
    aorder = order.for_rank(p.nrows)
    kernel = kernel_of_free_map(d1, order)
    v_gens = [p.apply(k) for k in kernel]
    v_gens = [v for v in v_gens if not v.is_zero]
    g_u = _inner_basis(d2.cols, aorder)
    h = relative_buchberger(v_gens, g_u, aorder)
    h = reduce_relative(h, g_u, aorder)
    diffs = []
    if h:
        cols, _ = relative_schreyer(h, g_u, aorder)
        gdeg = [element_degree(x, p.row_shifts) for x in h]
        if cols:
            cdeg = [element_degree(c, gdeg) for c in cols]
            diffs.append(GradedMatrix(ring, gdeg, cdeg, cols))
    return Resolution(ring, order, p.row_shifts, g_u, h, diffs)


def free_resolution(v_gens, u_gens, order, shifts=None, length=None):
    """Resolution of the subquotient spanned by v_gens over the inner submodule."""
    pool = [g for g in list(v_gens) + list(u_gens) if not g.is_zero]
    if not pool:
        raise InputError("no nonzero generators given")
    ring = pool[0].ring
    rank = pool[0].rank
    if shifts is None:
        shifts = ((0,) * ring.n,) * rank
    aorder = order.for_rank(rank)
    g_u = _inner_basis(u_gens, aorder)
    h = reduce_relative(relative_buchberger(v_gens, g_u, aorder), g_u, aorder)
    res = Resolution(ring, order, shifts, g_u, h, [])
    if not h:
        return res
    cols, sord = relative_schreyer(h, g_u, aorder)
    cur_shifts = [element_degree(x, shifts) for x in h]
    limit = ring.n + 1 if length is None else length
    while cols and len(res.diffs) < limit:
        cdeg = [element_degree(c, cur_shifts) for c in cols]
        res.diffs.append(GradedMatrix(ring, cur_shifts, cdeg, cols))
        cur_shifts = cdeg
        if len(res.diffs) == limit:
            break
        cols, sord = schreyer_syzygies(cols, sord, minimal=True)
    return res


def _drop_component(col, r):
    """Remove component r from a column, shifting higher components down."""
    d = {}
    for (i, e), c in col.terms:
        if i != r:
            d[(i - 1 if i > r else i, e)] = c
    return ModuleElement(col.ring, col.rank - 1, d)


def _entry_terms(col, r):
    """Terms of a column sitting in component r."""
    return [(e, c) for (i, e), c in col.terms if i == r]


def prune_minimize(res):
    """Minimize a resolution by cancelling constant entries, then dropping
    redundant columns of the last differential and normalizing leads."""
    ring = res.ring
    field = ring.field
    zero_exp = (0,) * ring.n
    gens = list(res.gens)
    levels = [
        {"rows": list(d.row_shifts), "cols": list(d.col_shifts), "mat": list(d.cols)}
        for d in res.diffs
    ]

    def drop_row(level, r):
        lv = levels[level]
        lv["rows"].pop(r)
        lv["mat"] = [_drop_component(col, r) for col in lv["mat"]]

    for idx in range(len(levels)):
        while True:
            lv = levels[idx]
            pivot = None
            for r in range(len(lv["rows"])):
                for c in range(len(lv["cols"])):
                    a = lv["mat"][c].coeff(r, zero_exp)
                    if a:
                        pivot = (r, c, a)
                        break
                if pivot:
                    break
            if pivot is None:
                break
            r, c, a = pivot
            pcol = lv["mat"][c]
            for l in range(len(lv["cols"])):
                if l == c:
                    continue
                entry = _entry_terms(lv["mat"][l], r)
                if not entry:
                    continue
                if len(entry) != 1:
                    raise ContractViolation("differential %d is not homogeneous" % (idx + 1))
                (dl, bl), = entry
                f = bl / a
                lv["mat"][l] = lv["mat"][l] - pcol.mul_term(f, dl)
                if idx + 1 < len(levels):
                    up = levels[idx + 1]
                    fixed = []
                    for w in up["mat"]:
                        add = {}
                        for (i2, e2), c2 in w.terms:
                            if i2 == l:
                                key = (c, exp_add(e2, dl))
                                add[key] = add.get(key, field.zero) + c2 * f
                        if add:
                            w = w + ModuleElement(ring, w.rank, add)
                        fixed.append(w)
                    up["mat"] = fixed
            if idx == 0:
                gens.pop(r)
            else:
                levels[idx - 1]["cols"].pop(r)
                levels[idx - 1]["mat"].pop(r)
            drop_row(idx, r)
            lv["cols"].pop(c)
            lv["mat"].pop(c)
            if idx + 1 < len(levels):
                levels[idx + 1]["rows"].pop(c)
                levels[idx + 1]["mat"] = [_drop_component(w, c) for w in levels[idx + 1]["mat"]]
    while levels and not levels[-1]["mat"]:
        levels.pop()
    if not gens:
        levels = []
    if levels:
        last = levels[-1]
        mo = res.order.for_rank(len(last["rows"]))
        stable = False
        while not stable:
            stable = True
            for j in reversed(range(len(last["mat"]))):
                others = last["mat"][:j] + last["mat"][j + 1 :]
                if others and normal_form(
                    last["mat"][j], buchberger(others, mo), mo
                ).is_zero:
                    last["mat"].pop(j)
                    last["cols"].pop(j)
                    stable = False
    one = field.one
    for idx, lv in enumerate(levels):
        mo = res.order.for_rank(len(lv["rows"]))
        for c in range(len(lv["mat"])):
            lc = lv["mat"][c].leading(mo)[1]
            if lc == one:
                continue
            lv["mat"][c] = lv["mat"][c].scale(one / lc)
            if idx + 1 < len(levels):
                up = levels[idx + 1]
                fixed = []
                for w in up["mat"]:
                    d = {
                        (i, e): (cf * lc if i == c else cf)
                        for (i, e), cf in w.terms
                    }
                    fixed.append(ModuleElement(ring, w.rank, d))
                up["mat"] = fixed
    diffs = [
        GradedMatrix(ring, lv["rows"], lv["cols"], lv["mat"]) for lv in levels
    ]
    return Resolution(
        ring, res.order, res.ambient_shifts, res.u_gens, gens, diffs, minimized=True
    )


def betti_numbers(res):
    """Multigraded-module Betti numbers read off a minimized resolution."""
    if not res.minimized:
        raise ContractViolation("Betti numbers require a minimized resolution")
    return tuple([len(res.gens)] + [d.ncols for d in res.diffs])


class VectorDiagram:
    """Finite diagram of vector spaces on Z^n with commuting variable actions."""

    __slots__ = ("ring", "dims", "maps")

    def __init__(self, ring, dims, maps):
        self.ring = ring
        self.dims = {tuple(a): d for a, d in dims.items() if d}
        self.maps = {}
        for (k, a), rows in maps.items():
            a = tuple(a)
            tgt = exp_add(a, self._unit(k))
            da, dt = self.dims.get(a, 0), self.dims.get(tgt, 0)
            rows = [tuple(r) for r in rows]
            if len(rows) != dt or any(len(r) != da for r in rows):
                raise InputError(
                    "map %d at %s must be %dx%d" % (k + 1, (a,), dt, da)
                )
            if da and dt:
                self.maps[(k, a)] = tuple(rows)
        for a, d in self.dims.items():
            if d < 0 or any(x < 0 for x in a):
                raise InputError("dimensions must sit at non-negative degrees")
        self._check_commuting()

    def _unit(self, k):
        return tuple(1 if v == k else 0 for v in range(self.ring.n))

    def dim(self, a):
        return self.dims.get(tuple(a), 0)

    def map(self, k, a):
        """Action of variable k out of degree a as a rows list."""
        a = tuple(a)
        da = self.dim(a)
        dt = self.dim(exp_add(a, self._unit(k)))
        got = self.maps.get((k, a))
        if got is not None:
            return [list(r) for r in got]
        zero = self.ring.field.zero
        return [[zero] * da for _ in range(dt)]

    def support_join(self):
        degs = list(self.dims)
        if not degs:
            return None
        hi = degs[0]
        for a in degs[1:]:
            hi = deg_join(hi, a)
        return hi

    def _check_commuting(self):
        field = self.ring.field
        for a in self.dims:
            for k in range(self.ring.n):
                for l in range(k + 1, self.ring.n):
                    ak = exp_add(a, self._unit(k))
                    al = exp_add(a, self._unit(l))
                    lhs = _mat_mul(self.map(l, ak), self.map(k, a), field)
                    rhs = _mat_mul(self.map(k, al), self.map(l, a), field)
                    if lhs != rhs:
                        raise InputError(
                            "diagram does not commute at degree %s on %s, %s"
                            % ((a,), self.ring.names[k], self.ring.names[l])
                        )


def _mat_mul(A, B, field):
    """Product of rows-lists matrices over a field."""
    if not A or not B:
        return [[field.zero] * (len(B[0]) if B else 0) for _ in A]
    return [
        [
            sum((ra[t] * B[t][c] for t in range(len(B))), field.zero)
            for c in range(len(B[0]))
        ]
        for ra in A
    ]


def _transport(diag, vec, a, b):
    """Push a fiber vector at degree a up to degree b along the actions."""
    cur, deg = list(vec), tuple(a)
    for k in range(diag.ring.n):
        for _ in range(b[k] - deg[k]):
            cur = [row_val for row_val in _apply_map(diag.map(k, deg), cur, diag.ring.field)]
            deg = exp_add(deg, diag._unit(k))
    return cur


def _apply_map(rows, vec, field):
    return [sum((r[i] * vec[i] for i in range(len(vec))), field.zero) for r in rows]


def module_from_diagram(diag):
    """Realize a diagram as a subquotient of a free module.

    Returns (v_gens, u_gens) inside R^s where s generators are chosen greedily
    from fiber coordinates not hit by the actions from below.
    """
    ring = diag.ring
    field = ring.field
    hi = diag.support_join()
    if hi is None:
        raise InputError("diagram has no nonzero fibers")
    zero = (0,) * ring.n
    gens = []
    for a in sorted(diag.dims, key=lambda d: (sum(d), tuple(reversed(d)))):
        da = diag.dim(a)
        below = []
        for k in range(ring.n):
            src = tuple(x - y for x, y in zip(a, diag._unit(k)))
            if any(x < 0 for x in src) or not diag.dim(src):
                continue
            m = diag.map(k, src)
            below.extend([m[r][c] for r in range(da)] for c in range(diag.dim(src)))
        rank0 = matrix_rank(below)
        for idx in range(da):
            e = [field.zero] * da
            e[idx] = field.one
            if matrix_rank(below + [e]) > rank0:
                below.append(e)
                rank0 += 1
                gens.append((a, idx))
    s = len(gens)
    bdegs = [a for a, _ in gens]
    kernel = []
    box_hi = exp_add(hi, (1,) * ring.n)
    for a in degrees_in_box(zero, box_hi):
        live = [i for i in range(s) if deg_leq(bdegs[i], a)]
        if not live:
            continue
        da = diag.dim(a)
        cols = []
        for i in live:
            e = [field.zero] * diag.dim(bdegs[i])
            e[gens[i][1]] = field.one
            cols.append(_transport(diag, e, bdegs[i], a))
        rows = [[cols[c][r] for c in range(len(live))] for r in range(da)]
        for v in nullspace_basis(rows, len(live), field):
            el = ModuleElement(
                ring,
                s,
                {
                    (live[c], tuple(x - y for x, y in zip(a, bdegs[live[c]]))): v[c]
                    for c in range(len(live))
                    if v[c]
                },
            )
            if not el.is_zero:
                kernel.append(el)
    order = default_order(ring, s)
    u_pre = _inner_basis(kernel, order)
    u_gens = [monomialize(g, bdegs) for g in u_pre]
    v_gens = [
        ModuleElement.monomial(ring, s, i, bdegs[i]) for i in range(s)
    ]
    return v_gens, u_gens


def _verify_degree(res, g_u, a):
    """Exactness checks for one degree, returning a list of failures."""
    msgs = []
    lev_degs = [res.gen_degrees] + [d.col_shifts for d in res.diffs]
    dims = [sum(1 for s in degs if deg_leq(s, a)) for degs in lev_degs]
    ranks = [d.degree_rank(a) for d in res.diffs]
    want = graded_dimension(res.gens, g_u, res.ambient_shifts, a)
    have = dims[0] - (ranks[0] if ranks else 0)
    if have != want:
        msgs.append(
            "degree %s: presentation gives dimension %d, module has %d"
            % ((a,), have, want)
        )
    for i in range(len(res.diffs)):
        ker = dims[i + 1] - ranks[i]
        nxt = ranks[i + 1] if i + 1 < len(ranks) else 0
        if ker != nxt:
            msgs.append(
                "degree %s: level %d kernel has dimension %d, level %d image %d"
                % ((a,), i + 1, ker, i + 2, nxt)
            )
    return msgs


def verify_complex(res, box=None):
    """Check a resolution is an exact graded complex; returns (ok, report)."""
    report = []
    ring = res.ring
    aorder = res.order.for_rank(len(res.ambient_shifts))
    try:
        for g in res.gens + res.u_gens:
            element_degree(g, res.ambient_shifts)
    except InputError as err:
        return False, [str(err)]
    for i, d in enumerate(res.diffs):
        if not d.is_homogeneous():
            report.append("differential %d is not homogeneous" % (i + 1))
    if report:
        return False, report
    g_u = _inner_basis(res.u_gens, aorder)
    if res.gens and res.diffs:
        d0 = res.gens_matrix()
        for j, col in enumerate(d0.compose(res.diffs[0]).cols):
            if not normal_form(col, g_u, aorder).is_zero:
                report.append(
                    "composite of generators with differential 1 misses the inner module in column %d"
                    % (j + 1)
                )
    for i in range(len(res.diffs) - 1):
        comp = res.diffs[i].compose(res.diffs[i + 1])
        if any(not c.is_zero for c in comp.cols):
            report.append("differentials %d and %d do not compose to zero" % (i + 1, i + 2))
    if report:
        return False, report
    if box is None:
        degs = list(res.gen_degrees)
        for d in res.diffs:
            degs.extend(d.col_shifts)
        for g in res.u_gens:
            degs.append(element_degree(g, res.ambient_shifts))
        degs.extend(res.ambient_shifts)
        lo = degs[0]
        hi = degs[0]
        for d in degs[1:]:
            lo, hi = deg_meet(lo, d), deg_join(hi, d)
        hi = exp_add(hi, (1,) * ring.n)
    else:
        lo, hi = box
    todo = list(degrees_in_box(lo, hi))
    workers = int(os.environ.get("RELGB_THREADS", "0") or 0)
    if workers > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for msgs in pool.map(lambda a: _verify_degree(res, g_u, a), todo):
                report.extend(msgs)
    else:
        for a in todo:
            report.extend(_verify_degree(res, g_u, a))
    return not report, report
