from qhv import collineations as col
from qhv import intersecting_family as fam
from qhv import geometry as geo
from qhv.fields import field_context
from qhv.oracles import (
    GridInstance,
    GridSpec,
    naive_base_eval,
    naive_form_value,
    naive_point_image,
    run_grid,
)


def test_naive_point_image_matches_symbolic_apply():
    import random

    ctx = field_context(3)
    rng = random.Random(5)
    for _ in range(50):
        g = col.Collineation(tuple(rng.randrange(9) for _ in range(3)),
                             tuple(rng.randrange(9) for _ in range(2)))
        pt = (1,) + tuple(rng.randrange(9) for _ in range(3))
        assert naive_point_image(ctx, g, pt) == col.apply(ctx, g, pt)


def test_naive_base_eval_matches_structured():
    from itertools import product

    params = geo.scan_params(field_context(2), 2, mode="family")
    for pt in product(range(4), repeat=2):
        assert naive_base_eval(params, pt) == geo.bab_affine_eval(params, pt)


def test_naive_form_value_matches_coefficient_table():
    params = geo.scan_params(field_context(3), 2, mode="family")
    R = col.build_R(params)
    forms = fam.family(params, R)
    from itertools import product

    for g, f in zip(R, forms):
        for pt in list(product(range(9), repeat=2))[:30]:
            assert naive_form_value(params, g, pt) == f.evaluate(pt)


def test_grid_small_instances_pass():
    report = run_grid(GridSpec.of((2, 3), (3, 2)))
    assert report["ok"]
    for inst in report["instances"]:
        assert inst["checks"]["oracle_agreement"]["ok"]
        assert inst["checks"]["mutual_mu"]["ok"]
        assert inst["checks"]["oa"]["ok"]
        assert inst["checks"]["row_injectivity"]["ok"]


def test_grid_qh3_path_at_2_4():
    report = run_grid(GridSpec.of((2, 4)))
    inst = report["instances"][0]
    assert inst["ok"]
    assert inst["params"]["condition"] == "QH3"
    assert inst["checks"]["two_character"]["ok"]


def test_grid_records_bad_b_instead_of_raising():
    spec = GridSpec((GridInstance(2, 3, a=1, b=1),))  # b in GF(q)
    report = run_grid(spec)
    assert not report["ok"]
    inst = report["instances"][0]
    assert not inst["checks"]["params"]["ok"]
    assert "GF(q)" in inst["checks"]["params"]["error"]


def test_grid_pair_cap():
    spec = GridSpec((GridInstance(2, 3),), naive_pair_cap=5)
    report = run_grid(spec)
    assert report["instances"][0]["checks"]["oracle_agreement"]["pairs_checked"] == 5
