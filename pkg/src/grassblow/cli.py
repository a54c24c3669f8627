"""Command-line front end: `grassblow <command> ...`.

Every command prints one document (JSON by default, or flat TSV) holding the
command name, its parameters and the results; rationals are "num/den" strings.
Precondition failures exit with code 1 and an error document, internal
cross-check failures with code 2.  Output is deterministic for fixed flags
(wall-clock timing is only emitted with --timing).
"""

import json
import random
import sys
import time
from fractions import Fraction

import click

from . import charts, curves, ke, picard
from .errors import CrossCheckError, DomainError, ParamError
from .indices import (check_params, enumerate_full, enumerate_stratum, rank,
                      stratum_size)
from .linalg import fstr
from .plucker import blowup_map, parse_matrix_text, plucker_vector
from .poly import parse_poly_text
from .polytope import integrate, parse_polytope_text


# ---------------------------------------------------------------------------
# output

def jsonable(x):
    if isinstance(x, Fraction):
        return fstr(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, curves.CurveId):
        return x.label()
    return x


def flatten(x, prefix=""):
    if isinstance(x, dict):
        for k, v in x.items():
            yield from flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        for i, v in enumerate(x):
            yield from flatten(v, f"{prefix}.{i}" if prefix else str(i))
    elif isinstance(x, list):
        yield prefix, " ".join(str(v) for v in x)
    else:
        yield prefix, "" if x is None else (json.dumps(x) if isinstance(x, bool) else str(x))


def emit(doc, fmt):
    doc = jsonable(doc)
    if fmt == "tsv":
        for k, v in flatten(doc):
            click.echo(f"{k}\t{v}")
    else:
        click.echo(json.dumps(doc, indent=2))


def run(command, params, fmt, fn, timing=False):
    """Evaluate fn() and print the document, mapping errors to exit codes."""
    t0 = time.perf_counter()
    try:
        results = fn()
    except (ParamError, DomainError) as e:
        emit({"command": command, "parameters": params,
              "error": {"type": type(e).__name__, "message": str(e)}}, fmt)
        sys.exit(1)
    except CrossCheckError as e:
        emit({"command": command, "parameters": params,
              "error": {"type": "CrossCheckError", "message": str(e)}}, fmt)
        sys.exit(2)
    doc = {"command": command, "parameters": params, "results": results}
    if timing:
        doc["timing_s"] = round(time.perf_counter() - t0, 3)
    emit(doc, fmt)


def common(f):
    f = click.option("--timing", is_flag=True, help="Include wall-clock time (breaks byte-identity).")(f)
    f = click.option("--threads", type=int, default=1, show_default=True,
                     help="Worker threads for integration (results do not depend on it).")(f)
    f = click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default="json",
                     show_default=True)(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact tools for canonical blow-ups of Grassmannians."""


# ---------------------------------------------------------------------------
# commands

@main.command()
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@click.argument("k", type=int, required=False)
@common
def indices(s, p, n, k, fmt, threads, timing):
    """Plucker index strata I^k_{s,p,n} (all strata if K is omitted)."""

    def go():
        check_params(s, p, n)
        if k is not None:
            if not 0 <= k <= p:
                raise ParamError(f"k={k} outside [0,{p}]")
            tup = enumerate_stratum(s, p, n, k)
            return {"k": k, "count": len(tup), "indices": [list(t) for t in tup]}
        return {"total": len(enumerate_full(p, n)),
                "strata": [{"k": j, "count": stratum_size(s, p, n, j),
                            "indices": [list(t) for t in enumerate_stratum(s, p, n, j)]}
                           for j in range(p + 1)]}

    run("indices", {"s": s, "p": p, "n": n, "k": k}, fmt, go, timing)


@main.command()
@click.argument("matrix_file", type=click.Path(dir_okay=False))
@click.argument("s", type=int)
@common
def plucker(matrix_file, s, fmt, threads, timing):
    """Plucker vector and blow-up map image of a p x n matrix."""

    def go():
        try:
            text = open(matrix_file).read()
        except OSError as e:
            raise ParamError(f"cannot read {matrix_file}: {e}")
        M = parse_matrix_text(text)
        check_params(s, M.rows, M.cols)
        v = plucker_vector(M)
        comps = blowup_map(M, s)
        return {"p": M.rows, "n": M.cols,
                "plucker": [{"index": list(I), "value": v.coords[I]} for I in enumerate_full(M.rows, M.cols)],
                "e": comps[0],
                "f": [{"k": k, "point": c} for k, c in enumerate(comps[1:])]}

    run("plucker", {"matrix_file": matrix_file, "s": s}, fmt, go, timing)


@main.command("chart-verify")
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@click.option("--l", "l", type=int, default=None, help="Chart index (default: all).")
@click.option("--samples", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@common
def chart_verify(s, p, n, l, samples, seed, fmt, threads, timing):
    """Check chart closed forms against brute-force minors at seeded points."""

    def go():
        check_params(s, p, n)
        r = rank(s, p, n)
        ls = [l] if l is not None else list(range(min(p, n - s) + 1))
        rng = random.Random(seed)
        out = []
        for ll in ls:
            ch = charts.canonical_tau(s, p, n, ll)
            bad = 0
            first = None
            for _ in range(samples):
                pt = charts.random_point(ch, rng)
                for f in (charts.verify_claim_I, charts.verify_claim_III):
                    ok, mism = f(s, p, n, ll, pt)
                    if not ok:
                        bad += 1
                        first = first or mism[0]
            out.append({"l": ll, "tau_rows": list(ch.rows), "tau_cols": list(ch.cols),
                        "checks": 2 * samples, "failures": bad,
                        "first_failure": jsonable(first) if first else None})
        return {"seed": seed, "r": r, "charts": out,
                "ok": all(c["failures"] == 0 for c in out)}

    run("chart-verify", {"s": s, "p": p, "n": n, "l": l, "samples": samples, "seed": seed}, fmt, go, timing)


def _cls(c):
    return {g: v for g, v in c.as_dict().items() if v}


@main.command("picard")
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@click.option("--space", type=click.Choice(["T", "M"]), default="T", show_default=True)
@common
def picard_cmd(s, p, n, space, fmt, threads, timing):
    """Picard basis, B-stable divisors, canonical class, symmetries, weights."""

    def go():
        if space == "T":
            P = picard.T_basis(s, p, n)
            r = P.r
            res = {"basis": list(P.gens), "variant": P.variant, "r": r,
                   "B": {f"B{j}": _cls(picard.divisor_B(s, p, n, j)) for j in range(r + 1)},
                   "K": _cls(picard.canonical_T(s, p, n)),
                   "K_Bform": _cls(picard.canonical_T_Bform(s, p, n)),
                   "principal": [_cls(c) for c in picard.principal_divisors_T(s, p, n)],
                   "weights": picard.weight_data(s, p, n)}
            syms = [("USD", n == 2 * s), ("DUAL", n == 2 * p)]
            res["identities"] = picard.lattice_identities(s, p, n)
        else:
            P = picard.M_basis(s, p, n)
            r = P.r
            res = {"basis": list(P.gens), "variant": P.variant, "r": r,
                   "B": {f"Bc{j}": _cls(picard.divisor_Bcheck(s, p, n, j)) for j in range(r + 1)},
                   "K": _cls(picard.canonical_M(s, p, n)),
                   "K_Bform": _cls(picard.canonical_M_Bform(s, p, n)),
                   "principal": [_cls(c) for c in picard.principal_divisors_M(s, p, n)]}
            syms = [("Usd", n == 2 * s), ("Dual", n == 2 * p)]
            res["identities"] = picard.m_lattice_identities(s, p, n)
        res["pullbacks"] = {}
        for name, ok in syms:
            if ok:
                f = picard.pullback(name, s, p, n)
                res["pullbacks"][name] = {"matrix": f.matrix(), "integral": f.integral,
                                          "involution": f.is_involution()}
        return res

    run("picard", {"s": s, "p": p, "n": n, "space": space}, fmt, go, timing)


@main.command("curves")
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@common
def curves_cmd(s, p, n, fmt, threads, timing):
    """Intersection vectors (H, D-, D+) and -K degrees of every curve family."""

    def go():
        rows = []
        for c in curves.enumerate_curves(s, p, n):
            cc = curves.curve_class(s, p, n, c)
            rows.append({"curve": c.label(), "H": cc.H, "D-": list(cc.Dminus),
                         "D+": list(cc.Dplus), "antiK": curves.antik_degree(s, p, n, c)})
        return {"count": len(rows), "curves": rows}

    run("curves", {"s": s, "p": p, "n": n}, fmt, go, timing)


@main.command("nef-test")
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@common
def nef_test(s, p, n, fmt, threads, timing):
    """Nefness/ampleness of -K_T (and the minimal -K_M degree)."""

    def go():
        t = curves.nef_ample_T(s, p, n)
        res = {"nef": t["nef"], "ample": t["ample"],
               "witness": t["witness"].label() if t["witness"] else None,
               "min_degree": t["min_degree"]}
        if p <= s:
            m = curves.ample_M(s, p, n)
            res["M"] = {"ample": m["ample"], "min_degree": m["min_degree"],
                        "witness": m["witness"].label() if m["witness"] else None}
        return res

    run("nef-test", {"s": s, "p": p, "n": n}, fmt, go, timing)


@main.command("ke-test")
@click.argument("s", type=int)
@click.argument("p", type=int)
@click.argument("n", type=int)
@click.option("--space", type=click.Choice(["T", "M"]), required=True)
@click.option("--certificate", is_flag=True, help="Include the exact integrals.")
@common
def ke_test(s, p, n, space, certificate, fmt, threads, timing):
    """Kahler-Einstein decision via the barycenter criterion."""

    def go():
        return ke.ke_test(s, p, n, space, threads).to_dict(certificate)

    run("ke-test", {"s": s, "p": p, "n": n, "space": space}, fmt, go, timing)


@main.command("integrate")
@click.option("--poly", "poly_file", required=True, type=click.Path(dir_okay=False))
@click.option("--polytope", "polytope_file", required=True, type=click.Path(dir_okay=False))
@common
def integrate_cmd(poly_file, polytope_file, fmt, threads, timing):
    """Exact integral of a polynomial over an H-polytope."""

    def go():
        try:
            f = parse_poly_text(open(poly_file).read())
            P = parse_polytope_text(open(polytope_file).read())
        except OSError as e:
            raise ParamError(str(e))
        simp = P.triangulate()
        return {"integral": integrate(f, P, simp), "volume": sum((S.volume() for S in simp), Fraction(0)),
                "vertices": [list(v) for v in P.vertices()], "simplices": len(simp)}

    run("integrate", {"poly": poly_file, "polytope": polytope_file}, fmt, go, timing)


if __name__ == "__main__":
    main()
