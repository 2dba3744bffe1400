"""Division, Buchberger completion and Schreyer syzygies over free modules."""

from collections import deque

from .elements import ModuleElement, exp_lcm, exp_sub, mon_divides
from .errors import ContractViolation
from .orders import SchreyerOrder


def divide(f, basis, order):
    """Divide f by a list of elements, returning (quotients, remainder)."""
    ring, rank = f.ring, f.rank
    leads = [None if g.is_zero else g.leading(order) for g in basis]
    quots = [ModuleElement.zero(ring, 1) for _ in basis]
    rem = {}
    work = f
    while not work.is_zero:
        mon, coeff = work.leading(order)
        hit = None
        for i, ld in enumerate(leads):
            if ld is not None and mon_divides(ld[0], mon):
                hit = i
                break
        if hit is None:
            rem[mon] = coeff
            work = work - ModuleElement(ring, rank, {mon: coeff})
        else:
            gm, gc = leads[hit]
            c, e = coeff / gc, exp_sub(mon[1], gm[1])
            quots[hit] = quots[hit] + ModuleElement.monomial(ring, 1, 0, e, c)
            work = work - basis[hit].mul_term(c, e)
    return quots, ModuleElement(ring, rank, rem)


def normal_form(f, basis, order):
    """Remainder of f under division by a list of elements."""
    return divide(f, basis, order)[1]


def s_polynomial(f, g, order):
    """S-polynomial of f and g; zero when leading components differ."""
    (mf, cf), (mg, cg) = f.leading(order), g.leading(order)
    if mf[0] != mg[0]:
        return ModuleElement.zero(f.ring, f.rank)
    one = f.ring.field.one
    lam = exp_lcm(mf[1], mg[1])
    return f.mul_term(one / cf, exp_sub(lam, mf[1])) - g.mul_term(one / cg, exp_sub(lam, mg[1]))


def buchberger(gens, order):
    """Complete a generating list to a Groebner basis, keeping the input prefix."""
    G = [f for f in gens if not f.is_zero]
    if not G:
        return G
    one = G[0].ring.field.one
    pairs = deque(sorted((i, j) for j in range(len(G)) for i in range(j)))
    while pairs:
        i, j = pairs.popleft()
        s = s_polynomial(G[i], G[j], order)
        if s.is_zero:
            continue
        r = normal_form(s, G, order)
        if r.is_zero:
            continue
        r = r.scale(one / r.leading(order)[1])
        G.append(r)
        m = len(G) - 1
        pairs.extendleft((k, m) for k in reversed(range(m)))
    return G


def buchberger_transform(gens, order):
    """Buchberger completion tracking each basis element over the input.

    Returns (G, exprs) with G[k] equal to exprs[k] applied to the input list.
    """
    if not gens:
        return [], []
    ring = gens[0].ring
    s = len(gens)
    zero_exp = (0,) * ring.n
    one = ring.field.one
    G, exprs = [], []
    for i, f in enumerate(gens):
        if not f.is_zero:
            G.append(f)
            exprs.append(ModuleElement.monomial(ring, s, i, zero_exp))
    pairs = deque(sorted((i, j) for j in range(len(G)) for i in range(j)))
    while pairs:
        i, j = pairs.popleft()
        (mi, ci), (mj, cj) = G[i].leading(order), G[j].leading(order)
        if mi[0] != mj[0]:
            continue
        lam = exp_lcm(mi[1], mj[1])
        ti = (one / ci, exp_sub(lam, mi[1]))
        tj = (one / cj, exp_sub(lam, mj[1]))
        sp = G[i].mul_term(*ti) - G[j].mul_term(*tj)
        if sp.is_zero:
            continue
        quots, r = divide(sp, G, order)
        if r.is_zero:
            continue
        expr = exprs[i].mul_term(*ti) - exprs[j].mul_term(*tj)
        for k, q in enumerate(quots):
            if not q.is_zero:
                expr = expr - exprs[k].mul_poly(q)
        c = one / r.leading(order)[1]
        G.append(r.scale(c))
        exprs.append(expr.scale(c))
        m = len(G) - 1
        pairs.extendleft((k, m) for k in reversed(range(m)))
    return G, exprs


def _minimal_indices(G, order):
    """Indices of a minimal subset: no kept leading monomial divides another."""
    lms = [g.leading(order)[0] for g in G]
    picked = []
    for i in sorted(range(len(G)), key=lambda k: (order.key(lms[k]), k)):
        if not any(mon_divides(lms[k], lms[i]) for k in picked):
            picked.append(i)
    return picked


def _canonical(items, order, key_of):
    """Sort items by (leading component, leading monomial key)."""
    return sorted(items, key=lambda it: (key_of(it)[0], order.key(key_of(it))))


def reduce_groebner(G, order):
    """Reduced Groebner basis in canonical order from any Groebner basis."""
    one = G[0].ring.field.one if G else None
    picked = _minimal_indices(G, order)
    mini = [G[i] for i in picked]
    out = []
    for i, g in enumerate(mini):
        others = mini[:i] + mini[i + 1 :]
        r = normal_form(g, others, order)
        out.append(r.scale(one / r.leading(order)[1]))
    return _canonical(out, order, lambda g: g.leading(order)[0])


def minimal_groebner(G, order):
    """Minimal Groebner basis in canonical order: normalized, not tail-reduced."""
    one = G[0].ring.field.one if G else None
    out = [G[i].scale(one / G[i].leading(order)[1]) for i in _minimal_indices(G, order)]
    return _canonical(out, order, lambda g: g.leading(order)[0])


def minimal_transform(G, exprs, order):
    """Minimal Groebner basis keeping expressions over the original input in step."""
    one = G[0].ring.field.one if G else None
    paired = []
    for i in _minimal_indices(G, order):
        c = one / G[i].leading(order)[1]
        paired.append((G[i].scale(c), exprs[i].scale(c)))
    paired.sort(key=lambda ge: (ge[0].leading(order)[0][0], order.key(ge[0].leading(order)[0])))
    return [g for g, _ in paired], [e for _, e in paired]


def express(f, G, order):
    """Quotients writing f over a Groebner basis of a module containing it."""
    quots, r = divide(f, G, order)
    if not r.is_zero:
        raise ContractViolation("element does not reduce to zero over the given basis")
    return quots


def is_groebner(G, order):
    """Return True if every S-polynomial of G reduces to zero."""
    for j in range(len(G)):
        for i in range(j):
            s = s_polynomial(G[i], G[j], order)
            if not s.is_zero and not normal_form(s, G, order).is_zero:
                return False
    return True


def schreyer_syzygies(G, order, minimal=False):
    """Schreyer generators of the syzygies of a Groebner basis.

    Returns (syzygies, schreyer_order); each syzygy sigma satisfies
    sum(sigma_k * G[k]) = 0 and is expressed in R^len(G).
    """
    ring = G[0].ring
    one = ring.field.one
    t = len(G)
    leads = [g.leading(order) for g in G]
    sord = SchreyerOrder(tuple(m for m, _ in leads), order)
    recs = []
    for j in range(t):
        for i in range(j):
            (mi, ci), (mj, cj) = leads[i], leads[j]
            if mi[0] != mj[0]:
                continue
            lam = exp_lcm(mi[1], mj[1])
            ti = (one / ci, exp_sub(lam, mi[1]))
            tj = (one / cj, exp_sub(lam, mj[1]))
            sp = G[i].mul_term(*ti) - G[j].mul_term(*tj)
            sig = ModuleElement.monomial(ring, t, i, ti[1], ti[0]) - ModuleElement.monomial(
                ring, t, j, tj[1], tj[0]
            )
            if not sp.is_zero:
                quots, r = divide(sp, G, order)
                if not r.is_zero:
                    raise ContractViolation("syzygy computation requires a Groebner basis")
                for k, q in enumerate(quots):
                    if not q.is_zero:
                        sig = sig - ModuleElement.monomial(ring, t, k, (0,) * ring.n).mul_poly(q)
            recs.append((i, j, sig))
    recs.sort(key=lambda rec: (rec[0], sord.key(rec[2].leading(sord)[0]), rec[1]))
    out = [sig for _, _, sig in recs]
    if minimal:
        scan = sorted(range(len(out)), key=lambda k: (sord.key(out[k].leading(sord)[0]), k))
        kept_lms, kept = [], set()
        for k in scan:
            lm = out[k].leading(sord)[0]
            if not any(mon_divides(m, lm) for m in kept_lms):
                kept_lms.append(lm)
                kept.add(k)
        out = [sig for k, sig in enumerate(out) if k in kept]
    return out, sord
