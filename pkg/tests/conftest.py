import json
from pathlib import Path

import pytest
from referencing import Registry, Resource

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schema"


def _registry():
    reg = Registry()
    for p in SCHEMA_DIR.glob("*.json"):
        reg = reg.with_resource(p.name, Resource.from_contents(json.loads(p.read_text())))
    return reg


@pytest.fixture(scope="session")
def validate():
    import jsonschema

    reg = _registry()

    def check(doc, name):
        schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator(schema, registry=reg).validate(doc)

    return check


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[num])
