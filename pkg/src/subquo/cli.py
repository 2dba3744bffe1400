"""Command-line interface for relative Groebner basis computations."""

import functools
import os
import sys
import tempfile

import click

from .errors import ContractViolation, InputError
from .files import (
    emit_fim_file,
    emit_matrix_file,
    emit_module_file,
    emit_module_pair_file,
    emit_resolution_file,
    parse_complex_file,
    parse_diagram_file,
    parse_fim_file,
    parse_module_file,
    parse_resolution_file,
)
from .flange import buchberger_flange, free_presentation, is_groebner_form
from .graded import degrees_in_box, format_degree, graded_dimension, parse_degree
from .groebner import is_groebner, reduce_groebner, buchberger, schreyer_syzygies
from .homres import (
    betti_numbers,
    free_resolution,
    homology_presentation,
    module_from_diagram,
    prune_minimize,
    verify_complex,
)
from .relative import is_relative_gb, reduce_relative, relative_buchberger, relative_schreyer


def _wrap(fn):
    """Convert library errors into clean CLI failures."""

    @functools.wraps(fn)
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (InputError, ContractViolation) as err:
            raise click.ClickException(str(err)) from None

    return inner


def _emit(text, output):
    if output is None:
        click.echo(text, nl=False)
    else:
        target = os.path.abspath(output)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".subquo-")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)


def _parse_box(text, n):
    """Degree box written as '(a,..)..(b,..)', returning its corner degrees."""
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise InputError("box %r must be written as LO..HI" % text)
    return parse_degree(lo_text.strip(), n), parse_degree(hi_text.strip(), n)


def _load_module(path, order_text, field_text=None):
    with open(path) as fh:
        return parse_module_file(fh.read(), order_text, field_text)


def _load_pair(upath, vpath, order_text, field_text=None):
    """Read U and V module files over the same ring, padded to a common rank."""
    ring_u, rank_u, order_u, u_gens, shifts_u = _load_module(upath, order_text, field_text)
    ring_v, rank_v, order_v, v_gens, shifts_v = _load_module(vpath, order_text, field_text)
    if ring_u != ring_v:
        raise InputError("U and V files use different rings")
    rank = max(rank_u, rank_v)
    u_gens = [e.pad(rank) for e in u_gens]
    v_gens = [e.pad(rank) for e in v_gens]
    if rank_v == rank:
        order, shifts = order_v, shifts_v
    else:
        order, shifts = order_u.for_rank(rank), shifts_u + [(0,) * ring_u.n] * (rank - rank_u)
    if rank_u == rank_v and shifts_u != shifts_v:
        raise InputError("U and V files declare different ambient shifts")
    return ring_u, rank, order, u_gens, v_gens, shifts


_ORDER_OPT = click.option("--order", "order_text", default=None, metavar="SPEC", help="Monomial order, e.g. 'grevlex x1 x2 ; pot desc'.")
_FIELD_OPT = click.option("--field", "field_text", default=None, metavar="F", help="Coefficient field: 'q' (default) or 'fp:<p>'.")
_OUT_OPT = click.option("-o", "--output", default=None, type=click.Path(dir_okay=False), help="Write to a file instead of stdout.")


@click.group()
@click.version_option(package_name="subquo")
def cli():
    """Exact Groebner bases for subquotients of free modules."""


@cli.command()
@click.argument("module_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def gb(module_file, order_text, field_text, output):
    """Reduced Groebner basis of the module generated by the input elements."""
    ring, rank, order, gens, _ = _load_module(module_file, order_text, field_text)
    basis = reduce_groebner(buchberger(gens, order), order)
    _emit(emit_module_file(ring, rank, basis, order), output)


@cli.command()
@click.argument("u_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("v_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def relgb(u_file, v_file, order_text, field_text, output):
    """Reduced Groebner basis of V relative to U."""
    ring, rank, order, u_gens, v_gens, _ = _load_pair(u_file, v_file, order_text, field_text)
    g_u = reduce_groebner(buchberger(u_gens, order), order)
    h = reduce_relative(relative_buchberger(v_gens, g_u, order), g_u, order)
    _emit(emit_module_file(ring, rank, h, order), output)


@cli.command()
@click.argument("module_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def syz(module_file, order_text, field_text, output):
    """Syzygies of a Groebner basis, as columns over its elements."""
    ring, rank, order, gens, _ = _load_module(module_file, order_text, field_text)
    gens = [g for g in gens if not g.is_zero]
    if not is_groebner(gens, order):
        click.echo("input is not a Groebner basis", err=True)
        sys.exit(2)
    cols, sord = schreyer_syzygies(gens, order)
    _emit(emit_module_file(ring, len(gens), cols, None, sord), output)


@cli.command()
@click.argument("u_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("h_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def relsyz(u_file, h_file, order_text, field_text, output):
    """Syzygies of a relative Groebner basis H over U."""
    ring, rank, order, u_gens, h, _ = _load_pair(u_file, h_file, order_text, field_text)
    g_u = reduce_groebner(buchberger(u_gens, order), order)
    h = [e for e in h if not e.is_zero]
    if not is_relative_gb(h, g_u, order):
        click.echo("input is not a relative Groebner basis", err=True)
        sys.exit(2)
    cols, sord = relative_schreyer(h, g_u, order)
    _emit(emit_module_file(ring, len(h), cols, None, sord), output)


@cli.command()
@click.argument("u_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("v_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def respres(u_file, v_file, order_text, field_text, output):
    """Free presentation of V/U: relative basis generators and one syzygy matrix."""
    ring, rank, order, u_gens, v_gens, shifts = _load_pair(u_file, v_file, order_text, field_text)
    res = free_resolution(v_gens, u_gens, order, shifts, length=1)
    _emit(emit_resolution_file(res), output)


@cli.command()
@click.argument("u_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("v_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--length", default=None, type=int, help="Number of differentials to compute.")
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def resolution(u_file, v_file, length, order_text, field_text, output):
    """Free resolution of V/U by iterated syzygy computation."""
    ring, rank, order, u_gens, v_gens, shifts = _load_pair(u_file, v_file, order_text, field_text)
    res = free_resolution(v_gens, u_gens, order, shifts, length=length)
    _emit(emit_resolution_file(res), output)


@cli.command()
@click.argument("res_file", type=click.Path(exists=True, dir_okay=False))
@_FIELD_OPT
@_OUT_OPT
@_wrap
def minimize(res_file, field_text, output):
    """Prune constant entries from a resolution until it is minimal."""
    with open(res_file) as fh:
        res = parse_resolution_file(fh.read(), None, field_text)
    _emit(emit_resolution_file(prune_minimize(res)), output)


@cli.command()
@click.argument("res_file", type=click.Path(exists=True, dir_okay=False))
@_FIELD_OPT
@_wrap
def betti(res_file, field_text):
    """Betti numbers of a resolution, minimizing it first when needed."""
    with open(res_file) as fh:
        res = parse_resolution_file(fh.read(), None, field_text)
    if not res.minimized:
        res = prune_minimize(res)
    click.echo(" ".join(str(b) for b in betti_numbers(res)))


@cli.command()
@click.argument("u_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("v_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--degree", "degree_text", default=None, metavar="DEG", help="Single degree, e.g. '(1,2)'.")
@click.option("--box", "box_text", default=None, metavar="LO..HI", help="Degree box, e.g. '(0,0)..(4,3)'.")
@_ORDER_OPT
@_FIELD_OPT
@_wrap
def hilbert(u_file, v_file, degree_text, box_text, order_text, field_text):
    """Graded dimensions of V/U at a degree or over a box of degrees."""
    ring, rank, order, u_gens, v_gens, shifts = _load_pair(u_file, v_file, order_text, field_text)
    if degree_text is None and box_text is None:
        raise click.UsageError("pass --degree or --box")
    if degree_text is not None:
        degs = [parse_degree(degree_text, ring.n)]
    else:
        lo, hi = _parse_box(box_text, ring.n)
        degs = degrees_in_box(lo, hi)
    for a in degs:
        dim = graded_dimension(v_gens, u_gens, shifts, a)
        click.echo("%s %d" % (format_degree(a), dim))


@cli.command("flange-gb")
@click.argument("fim_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def flange_gb(fim_file, order_text, field_text, output):
    """Complete a free-injective matrix to Groebner form."""
    with open(fim_file) as fh:
        mat, order = parse_fim_file(fh.read(), order_text, field_text)
    done = buchberger_flange(mat, order)
    _emit(emit_fim_file(done, order), output)


@cli.command("flange-pres")
@click.argument("fim_file", type=click.Path(exists=True, dir_okay=False))
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def flange_pres(fim_file, order_text, field_text, output):
    """Presentation of the homomorphisms into a free-injective matrix's cokernel."""
    with open(fim_file) as fh:
        mat, order = parse_fim_file(fh.read(), order_text, field_text)
    ok, witness = is_groebner_form(mat, order)
    if not ok:
        click.echo("matrix is not in Groebner form: %s" % witness, err=True)
        sys.exit(2)
    pres = free_presentation(mat, order)
    _emit(emit_matrix_file(mat.ring, pres, order), output)


@cli.command()
@click.argument("complex_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--minimize", "do_min", is_flag=True, help="Prune the presentation afterwards.")
@_ORDER_OPT
@_FIELD_OPT
@_OUT_OPT
@_wrap
def homology(complex_file, do_min, order_text, field_text, output):
    """Presentation of homology at the middle of a three-term complex D2, P, D1."""
    with open(complex_file) as fh:
        ring, order, d1, p, d2 = parse_complex_file(fh.read(), order_text, field_text)
    res = homology_presentation(d1, p, d2, order)
    if do_min:
        res = prune_minimize(res)
    _emit(emit_resolution_file(res), output)


@cli.command("from-diagram")
@click.argument("diagram_file", type=click.Path(exists=True, dir_okay=False))
@_FIELD_OPT
@_OUT_OPT
@_wrap
def from_diagram(diagram_file, field_text, output):
    """Present a diagram of vector spaces as a subquotient V/U of a free module."""
    with open(diagram_file) as fh:
        diag = parse_diagram_file(fh.read(), field_text)
    v_gens, u_gens = module_from_diagram(diag)
    rank = v_gens[0].rank
    _emit(emit_module_pair_file(diag.ring, rank, v_gens, u_gens), output)


@cli.command()
@click.argument("res_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--box", "box_text", default=None, metavar="LO..HI", help="Degree box to check, e.g. '(0,0)..(4,3)'.")
@_FIELD_OPT
@_wrap
def verify(res_file, box_text, field_text):
    """Check a resolution file: homogeneity, zero composites, graded exactness."""
    with open(res_file) as fh:
        res = parse_resolution_file(fh.read(), None, field_text)
    box = _parse_box(box_text, res.ring.n) if box_text is not None else None
    ok, report = verify_complex(res, box)
    for line in report:
        click.echo(line)
    if not ok:
        sys.exit(2)
    click.echo("exact")


def main():
    try:
        cli(prog_name="subquo", standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)


if __name__ == "__main__":
    main()
