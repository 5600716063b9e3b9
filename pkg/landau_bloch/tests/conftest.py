import itertools
import json
import os
from pathlib import Path

from bloch_lab.constants import BlochClassParams
from bloch_lab.services import SamplingConfig
import hypothesis
import jsonschema
import numpy as np
import pytest
from referencing import Registry, Resource

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

SCHEMA_DIR = Path(__file__).parents[1] / "docs" / "schema"
SCHEMAS = {
    path.name.removesuffix(".schema.json"): json.loads(path.read_text(encoding="utf-8"))
    for path in SCHEMA_DIR.glob("*.schema.json")
}
SCHEMA_REGISTRY = Registry().with_resources(
    (schema["$id"], Resource.from_contents(schema)) for schema in SCHEMAS.values()
)

EXTREMAL_GRID = [
    BlochClassParams(alpha, n, lam)
    for alpha, n, lam in itertools.product((0.5, 1.0, 2.0), (1, 2, 3), (0.25, 0.5, 1.0))
]


@pytest.fixture
def unit_params():
    """alpha = n = lambda = K = 1"""
    return BlochClassParams(1.0, 1, 1.0, 1.0)


@pytest.fixture
def small_cfg():
    """Небольшая выборка для быстрых тестов"""
    return SamplingConfig(seed=7, sphere_samples=64, radial_grid=16, pair_samples=2_000)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=EXTREMAL_GRID, ids=repr)
def extremal_params(request):
    """Сетка alpha x n x lambda для экстремальных отображений"""
    return request.param


@pytest.fixture
def validate_document():
    """Проверка документа по схеме из docs/schema (с разрешением $ref между схемами)"""

    def validate(name, document):
        jsonschema.Draft202012Validator(SCHEMAS[name], registry=SCHEMA_REGISTRY).validate(document)

    return validate
