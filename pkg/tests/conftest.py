from __future__ import annotations

from pathlib import Path

import pytest

from configforge import DepsModel, Formula, encode_model, parse_deps

DATA_DIR = Path(__file__).parent / "data"

FIG1_PATH = DATA_DIR / "fig1.deps"
DATE_PATH = DATA_DIR / "date.deps"
KERNEL_PROPS_PATH = DATA_DIR / "kernel_props.deps"
IPI_PATH = DATA_DIR / "ipi.deps"
WIDE64_PATH = DATA_DIR / "wide64.deps"


@pytest.fixture(scope="session")
def fig1_text() -> str:
    return FIG1_PATH.read_text()


@pytest.fixture(scope="session")
def fig1_model(fig1_text: str) -> DepsModel:
    return parse_deps(fig1_text)


@pytest.fixture(scope="session")
def fig1_formula(fig1_model: DepsModel) -> Formula:
    return encode_model(fig1_model)


@pytest.fixture(scope="session")
def date_model() -> DepsModel:
    return parse_deps(DATE_PATH.read_text())


@pytest.fixture(scope="session")
def kernel_props_model() -> DepsModel:
    return parse_deps(KERNEL_PROPS_PATH.read_text())


@pytest.fixture(scope="session")
def ipi_model() -> DepsModel:
    return parse_deps(IPI_PATH.read_text())


@pytest.fixture(scope="session")
def wide64_model() -> DepsModel:
    return parse_deps(WIDE64_PATH.read_text())
