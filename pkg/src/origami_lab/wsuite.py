"""All exact checks on the quaternion origami W, gathered into one report."""

from __future__ import annotations

from .autos import (
    affine_autos, center, fixed_points, w_mod_sign_origami, generated_group, order_histogram,
    quotient_by_translations, quotient_genus, translations, w_automorphisms,
)
from .core import (
    W_LABELS, genus, horizontal_cylinders, is_isomorphic, quaternion_origami, singularity_profile,
    torus_grid, vertical_cylinders,
)
from .veech import verify_characteristic_W, veech_group

# Fixed points of the involutions of W by square labels; edges are written
# (left|right) and (lower/upper).
EXPECTED_FIXED = {
    "sigma": ("centers", {"1", "-1", "k", "-k"}),
    "-sigma": ("centers", {"i", "-i", "j", "-j"}),
    "tau": ("vertical_edges", {"1|i", "-1|-i", "j|-k", "-j|k"}),
    "-tau": ("vertical_edges", {"i|-1", "-i|1", "k|j", "-k|-j"}),
    "rho": ("horizontal_edges", {"1/j", "i/k", "-1/-j", "-i/-k"}),
    "-rho": ("horizontal_edges", {"j/-1", "k/-i", "-j/1", "-k/i"}),
}


def labelled_fixed_points(name: str) -> tuple[str, set[str]]:
    w = quaternion_origami()
    rep = fixed_points(w, w_automorphisms()[name])
    lab = [str(q) for q in W_LABELS]
    if rep.fixed_square_centers:
        return "centers", {lab[s] for s in rep.fixed_square_centers}
    if rep.fixed_vertical_edge_midpoints:
        return "vertical_edges", {f"{lab[a]}|{lab[b]}" for a, b in rep.fixed_vertical_edge_midpoints}
    if rep.fixed_horizontal_edge_midpoints:
        return "horizontal_edges", {f"{lab[a]}/{lab[b]}" for a, b in rep.fixed_horizontal_edge_midpoints}
    if rep.fixed_vertices:
        return "vertices", {str(k) for k in rep.fixed_vertices}
    return "none", set()


def w_report() -> dict[str, dict]:
    w = quaternion_origami()
    out: dict[str, dict] = {}

    def record(name, passed, **info):
        out[name] = {"passed": bool(passed), **info}

    prof = singularity_profile(w)
    record("genus", genus(w) == 3, value=genus(w))
    record("profile", prof.cone_orders == (1, 1, 1, 1) and prof.vertex_count == 4,
           cone_orders=list(prof.cone_orders))
    hc, vc = horizontal_cylinders(w), vertical_cylinders(w)
    record("cylinders", hc.cylinders == ((4, 1), (4, 1)) and vc.cylinders == ((4, 1), (4, 1)),
           horizontal=[list(c) for c in hc.cylinders], vertical=[list(c) for c in vc.cylinders])
    vg = veech_group(w)
    record("veech", vg.index == 1 and vg.cusp_count == 1, index=vg.index, cusps=vg.cusps)
    ch = verify_characteristic_W()
    record("characteristic", ch.epimorphism_count == 24 and ch.all_kernels_equal,
           epimorphisms=ch.epimorphism_count)

    autos = w_automorphisms()
    group = list(autos.values())
    tr = translations(w)
    minus = affine_autos(w, "-I")
    hist = order_histogram(group)
    record("aut_group", len(tr) == 8 and len(minus) == 8 and hist == {1: 1, 2: 7, 4: 8}
           and len(center(group)) == 4, histogram={str(k): v for k, v in hist.items()})

    table_ok = all(labelled_fixed_points(n) == exp for n, exp in EXPECTED_FIXED.items())
    vertex_ok = all(labelled_fixed_points(n)[0] == "vertices" and fixed_points(w, autos[n]).total == 4
                    for n in ("c", "-c", "-1"))
    free_ok = all(fixed_points(w, autos[n]).total == 0 for n in ("i", "-i", "j", "-j", "k", "-k"))
    record("fixed_points", table_ok and vertex_ok and free_ok)

    pm = [autos["1"], autos["-1"]]
    w2 = quotient_by_translations(w, pm)
    wq = quotient_by_translations(w, tr)
    record("quotients", is_isomorphic(w2, w_mod_sign_origami()) and genus(w2) == 1
           and is_isomorphic(wq, torus_grid(1))
           and quotient_genus(w, generated_group([autos["sigma"]])) == 1
           and quotient_genus(w, generated_group([autos["c"]])) == 0,
           w_mod_pm1_squares=w2.n)
    return out

